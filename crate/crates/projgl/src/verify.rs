//! Formula-versus-oracle suites. Each entry records both sides in full, so
//! a report is a complete, reproducible certificate.

use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

use projgl_core::cyclo::{CycField, CycNum};
use projgl_core::ffpoly::{enumerate_basis_polys, enumerate_basis_polys_upto, enumerate_irreducibles, factor, ExtFieldCtx, FpPoly};
use projgl_core::glring::{centralizer_order_formula, structure_constant, t_eigenspace_dimensions, t_eigenspace_formula, RingElt};
use projgl_core::oracle::{brauer_pairing_series, comultiplication_oracle, ClassFn, InductionTable, TorusInductionTable};
use projgl_core::poincare::{
    kernel_relations, molien_residue_check, series_of_element, t_fixed_kernel_witness, truncated_mul,
};
use projgl_core::torus_dl::{fourier_indicator, induced_indicator, pi_to_dl_fourier, DLBasisMatrix};
use projgl_core::Result;

use crate::json;

pub const SUITES: [&str; 9] = [
    "structure-constants",
    "comultiplication",
    "torus-induction",
    "dl-basis",
    "t-spectrum",
    "molien",
    "brauer-pairing",
    "algebra-map",
    "kernel",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub check: String,
    pub parameters: Value,
    pub formula_value: Value,
    pub oracle_value: Value,
    pub equal: bool,
}

impl Entry {
    fn new(check: &str, parameters: Value, formula_value: Value, oracle_value: Value, equal: bool) -> Self {
        Self { check: check.to_string(), parameters, formula_value, oracle_value, equal }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "parameters": self.parameters,
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "equal": self.equal,
        })
    }

    pub fn summary_line(&self) -> String {
        format!("{} {} {}", if self.equal { "PASS" } else { "FAIL" }, self.check, self.parameters)
    }
}

/// Checks of the implemented formulas, plus comparisons against stated
/// identities that the oracle refutes. Only `checks` decide the exit status.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Entry>,
    pub known_deviations: Vec<Entry>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|e| !e.equal).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(Entry::to_json).collect::<Vec<_>>(),
            "known_deviations": self.known_deviations.iter().map(Entry::to_json).collect::<Vec<_>>(),
            "total": self.checks.len(),
            "failed": self.failures(),
            "text": self.to_text(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self.checks.iter().map(Entry::summary_line).collect();
        for e in &self.known_deviations {
            lines.push(format!("DEVIATION {} {} equal={}", e.check, e.parameters, e.equal));
        }
        lines.push(format!("{} checks, {} failed", self.checks.len(), self.failures()));
        lines.join("\n")
    }
}

fn rational_field() -> Arc<CycField> {
    Arc::new(CycField::new(1).expect("m = 1"))
}

fn basis_elt(p: u32, field: &Arc<CycField>, f: &FpPoly) -> Result<RingElt> {
    RingElt::term_in(p, field, f, CycNum::one(field))
}

/// Induction products of basis indicators on GL_{a+b}(F_p) against
/// c_{f,g} pi_{fg}: p = 2 up to total degree 4, p = 3 up to 3.
pub fn structure_constants(budget: u128) -> Result<Vec<Entry>> {
    let field = rational_field();
    let mut out = Vec::new();
    for (p, max_total) in [(2u32, 4usize), (3, 3)] {
        for total in 2..=max_total {
            let table = InductionTable::build(p, total, budget)?;
            for a in 1..total {
                for f in enumerate_basis_polys(p, a, true)? {
                    for g in enumerate_basis_polys(p, total - a, true)? {
                        let c = structure_constant(&f, &g)?;
                        let formula = basis_elt(p, &field, &f.mul(&g))?.scale_rational(&c.into());
                        let rho1 = ClassFn::from_ring_elt(&basis_elt(p, &field, &f)?, a)?;
                        let rho2 = ClassFn::from_ring_elt(&basis_elt(p, &field, &g)?, total - a)?;
                        let oracle = table.product(&rho1, &rho2)?.to_ring_elt();
                        out.push(Entry::new(
                            "structure_constant",
                            json!({"p": p, "f": f.to_digits(), "g": g.to_digits()}),
                            json!(formula.to_text()),
                            json!(oracle.to_text()),
                            formula == oracle,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Induction from the diagonal of G x G, p = 2, deg f <= 2. The oracle
/// returns |Z(f)| pi_f (x) pi_f; the unscaled identity is kept as a
/// deviation entry.
pub fn comultiplication(budget: u128) -> Result<(Vec<Entry>, Vec<Entry>)> {
    let field = rational_field();
    let mut checks = Vec::new();
    let mut deviations = Vec::new();
    for n in 1..=2usize {
        for f in enumerate_basis_polys(2, n, true)? {
            let x = basis_elt(2, &field, &f)?;
            let oracle = comultiplication_oracle(&ClassFn::from_ring_elt(&x, n)?, budget)?;
            let z = centralizer_order_formula(&f)?;
            let scaled = x.comultiply().scale_int(&z);
            let params = json!({"p": 2, "f": f.to_digits(), "centralizer_order": z.to_string()});
            checks.push(Entry::new(
                "diagonal_induction",
                params.clone(),
                json!(scaled.to_text()),
                json!(oracle.to_text()),
                scaled == oracle,
            ));
            let plain = x.comultiply();
            deviations.push(Entry::new(
                "grouplike",
                params,
                json!(plain.to_text()),
                json!(oracle.to_text()),
                plain == oracle,
            ));
        }
    }
    Ok((checks, deviations))
}

/// Ind_T^G of the torus indicator at alpha^k against induced_indicator(k):
/// p = 2, all k for n = 2, 3 and k in {0, 1, 3, 5} for n = 4.
pub fn torus_induction(budget: u128) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (n, ks) in [(2u32, None), (3, None), (4, Some(vec![0u64, 1, 3, 5]))] {
        let ctx = ExtFieldCtx::new(2, n)?;
        let table = TorusInductionTable::build(&ctx, budget)?;
        let ks = ks.unwrap_or_else(|| (0..ctx.order()).collect());
        for k in ks {
            let formula = induced_indicator(&ctx, k)?;
            let oracle = table.induce(&fourier_indicator(&ctx, k)?.values())?.to_ring_elt();
            out.push(Entry::new(
                "torus_induction",
                json!({"p": 2, "n": n, "k": k}),
                json!(formula.to_text()),
                json!(oracle.to_text()),
                formula == oracle,
            ));
        }
    }
    Ok(out)
}

/// pi_{f_k}^{m_k} in the Deligne-Lusztig labels by the matrix inverse and
/// by the Fourier formula; both must also map back to the same element.
pub fn dl_basis() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (p, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
        let ctx = ExtFieldCtx::new(p, n)?;
        let dl = DLBasisMatrix::new(&ctx)?;
        out.push(Entry::new(
            "dl_round_trip",
            json!({"p": p, "n": n}),
            json!(true),
            json!(dl.round_trip_is_identity()),
            dl.round_trip_is_identity(),
        ));
        for &k in dl.representatives() {
            let by_matrix = dl.pi_to_dl(k)?;
            let by_fourier = dl.fold_labels(&pi_to_dl_fourier(&ctx, k)?)?;
            let (f, _, mk) = ctx.min_poly_of_power(k)?;
            let direct = RingElt::basis(&ctx, &f)?.pow(mk)?;
            let back = dl.labels_to_ring(&by_matrix)?;
            out.push(Entry::new(
                "pi_to_dl",
                json!({"p": p, "n": n, "k": k, "class": f.pow(mk).to_digits()}),
                json::cyc_list(&by_matrix),
                json::cyc_list(&by_fourier),
                by_matrix == by_fourier && back == direct,
            ));
        }
    }
    Ok(out)
}

fn spectrum_json(s: &[(BigInt, u64)]) -> Value {
    Value::Array(s.iter().map(|(e, d)| json!({"eigenvalue": e.to_string(), "dimension": d})).collect())
}

/// T eigenspace dimensions on deg <= n: closed form against enumeration.
pub fn t_spectrum() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5] {
        for n in 1..=6usize {
            let formula = t_eigenspace_formula(p, n);
            let counted = t_eigenspace_dimensions(p, n)?;
            out.push(Entry::new(
                "t_spectrum",
                json!({"p": p, "n": n}),
                spectrum_json(&formula),
                spectrum_json(&counted),
                formula == counted,
            ));
        }
    }
    Ok(out)
}

/// Series of Ind(phi_k) against the torus-weight count, to order 30.
pub fn molien() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (p, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
        let ctx = ExtFieldCtx::new(p, n)?;
        for k in 0..ctx.order() {
            let c = molien_residue_check(&ctx, k, 30)?;
            out.push(Entry::new(
                "molien",
                json!({"p": p, "n": n, "k": k, "order": 30}),
                json::cyc_list(&c.formula),
                json::cyc_list(&c.molien),
                c.equal(),
            ));
        }
    }
    Ok(out)
}

/// Smallest N such that every irreducible factor of a degree-n polynomial
/// over F_p splits in F_{p^N}.
fn splitting_degree(n: usize) -> u32 {
    (1..=n as u32).fold(1, num_integer::lcm)
}

/// Series of pi_f against the Brauer pairing with the graded module,
/// summed over the semisimple classes of GL_n(F_2), n <= 3, to order 12.
pub fn brauer_pairing(budget: u128) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let ctx = ExtFieldCtx::new(2, splitting_degree(n))?;
        for f in enumerate_basis_polys(2, n, true)? {
            let x = RingElt::basis(&ctx, &f)?;
            let formula = series_of_element(&ctx, &x, 12)?;
            let oracle = brauer_pairing_series(&ctx, &ClassFn::from_ring_elt(&x, n)?, 12, budget)?;
            out.push(Entry::new(
                "brauer_pairing",
                json!({"p": 2, "n": n, "f": f.to_digits(), "N": ctx.degree(), "order": 12}),
                json::cyc_list(&formula),
                json::cyc_list(&oracle),
                formula == oracle,
            ));
        }
    }
    Ok(out)
}

fn ambient_for(f: &FpPoly) -> Result<u32> {
    if f.deg() == 0 {
        return Ok(1);
    }
    Ok(factor(f)?.factors.iter().fold(1u32, |acc, (h, _)| num_integer::lcm(acc, h.deg() as u32)))
}

/// P(xy) against P(x) P(y) over all p = 2 basis pairs of total degree <= 4.
pub fn algebra_map() -> Result<Vec<Entry>> {
    let order = 20;
    let basis = enumerate_basis_polys_upto(2, 4)?;
    let mut out = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i..] {
            if f.deg() + g.deg() > 4 {
                continue;
            }
            let ctx = ExtFieldCtx::new(2, ambient_for(&f.mul(g))?)?;
            let x = RingElt::basis(&ctx, f)?;
            let y = RingElt::basis(&ctx, g)?;
            let product = series_of_element(&ctx, &x.mul(&y)?, order)?;
            let separate = truncated_mul(
                &series_of_element(&ctx, &x, order)?,
                &series_of_element(&ctx, &y, order)?,
                order,
                ctx.cyclo(),
            );
            out.push(Entry::new(
                "algebra_map",
                json!({"p": 2, "f": f.to_digits(), "g": g.to_digits(), "N": ctx.degree(), "order": order}),
                json::cyc_list(&product),
                json::cyc_list(&separate),
                product == separate,
            ));
        }
    }
    Ok(out)
}

/// Relations from exact elimination, re-checked by substitution and by
/// series expansion to order 64.
pub fn kernel() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    let ctx6 = ExtFieldCtx::new(2, 6)?;
    let six = kernel_relations(&ctx6, &enumerate_irreducibles(2, 6)?)?;
    let ctx4 = ExtFieldCtx::new(2, 4)?;
    let four = t_fixed_kernel_witness(&ctx4)?;
    for (name, r, min_dim) in [("kernel_degree_6", &six, 2usize), ("kernel_degree_4", &four, 1)] {
        let checks = json!({
            "residual_zero": r.residual_zero,
            "series_zero": r.series_zero,
            "t_fixed": r.t_fixed,
        });
        out.push(Entry::new(
            name,
            json!({"p": 2, "polys": json::poly_list(&r.polys), "series_order": r.series_order}),
            json!({"dimension": r.dimension, "relations": r.relations.iter().map(|a| json::cyc_list(a)).collect::<Vec<_>>()}),
            checks,
            r.dimension >= min_dim && r.residual_zero && r.series_zero && r.t_fixed.iter().all(|&b| b),
        ));
    }
    Ok(out)
}

/// Runs the named suites in the fixed order of SUITES.
pub fn run(suites: &[String], budget: u128) -> Result<Report> {
    let mut report = Report::default();
    for name in SUITES {
        if !suites.is_empty() && !suites.iter().any(|s| s == name) {
            continue;
        }
        match name {
            "structure-constants" => report.checks.extend(structure_constants(budget)?),
            "comultiplication" => {
                let (c, d) = comultiplication(budget)?;
                report.checks.extend(c);
                report.known_deviations.extend(d);
            }
            "torus-induction" => report.checks.extend(torus_induction(budget)?),
            "dl-basis" => report.checks.extend(dl_basis()?),
            "t-spectrum" => report.checks.extend(t_spectrum()?),
            "molien" => report.checks.extend(molien()?),
            "brauer-pairing" => report.checks.extend(brauer_pairing(budget)?),
            "algebra-map" => report.checks.extend(algebra_map()?),
            "kernel" => report.checks.extend(kernel()?),
            _ => unreachable!(),
        }
    }
    Ok(report)
}
