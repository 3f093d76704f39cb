use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use projgl_core::cyclo::{CycField, CycNum};
use projgl_core::ffpoly::{factor, ExtFieldCtx, FpPoly};
use projgl_core::glring::{
    centralizer_order_formula, decompose_into_generators, generator_power, structure_constant,
    t_eigenspace_dimensions, t_eigenspace_dimensions_graded, t_eigenspace_formula, RingElt,
};
use projgl_core::oracle::{comultiplication_oracle, ClassFn, DEFAULT_BUDGET};
use projgl_core::poincare::{
    closed_form_series, kernel_relations_to_order, molien_residue_check, molien_series_check, series_of_basis,
    DEFAULT_ORDER, KERNEL_SERIES_ORDER,
};
use projgl_core::torus_dl::DLBasisMatrix;
use projgl_core::Error;

use crate::{json, verify};

pub const BUDGET_ENV: &str = "PROJGL_ORACLE_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "projgl", version, about = "Exact computations with projective GL_n(F_p) classes")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Oracle budget: largest group order (or |G|^2 for diagonal induction)
    /// that may be enumerated. Defaults to $PROJGL_ORACLE_BUDGET or 10^7.
    #[arg(long, global = true)]
    pub budget: Option<u128>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Ambient {
    #[arg(long)]
    pub p: u32,
    /// Degree of the ambient field F_{p^N}
    #[arg(long = "N", visible_alias = "n")]
    pub big_n: u32,
    /// Primitive polynomial defining F_{p^N}, as a digit string
    #[arg(long)]
    pub modulus: Option<String>,
}

impl Ambient {
    fn ctx(&self) -> Result<ExtFieldCtx, Error> {
        match &self.modulus {
            Some(g) => ExtFieldCtx::with_modulus(FpPoly::parse(self.p, g)?),
            None => ExtFieldCtx::new(self.p, self.big_n),
        }
        .and_then(|ctx| {
            if ctx.degree() != self.big_n {
                return Err(Error::Config(format!("modulus has degree {}, expected N = {}", ctx.degree(), self.big_n)));
            }
            Ok(ctx)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ToPi,
    FromPi,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor a polynomial over F_p
    Factor {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        poly: String,
    },
    /// pi_a * pi_b in the basis
    Mult {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// pi_f^e for irreducible f
    Power {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 2)]
        e: u32,
    },
    /// pi_f as a scalar times a monomial in generators
    Decompose {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        poly: String,
    },
    /// Comultiplication of pi_f, optionally against diagonal induction
    Delta {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Eigenspace dimensions of T on deg <= n
    TSpectrum {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        /// Restrict to the degree-n piece
        #[arg(long)]
        graded: bool,
    },
    /// Change of basis between Deligne-Lusztig labels and classes
    DlBasis {
        #[arg(long)]
        p: u32,
        #[arg(long = "n", visible_alias = "N")]
        n: u32,
        #[arg(long, value_enum, default_value_t = Direction::ToPi)]
        direction: Direction,
    },
    /// Poincare series of pi_f
    Series {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// The closed form A(f)/B(f) of (p^{deg f} - 1) pi_f instead
        #[arg(long)]
        closed_form: bool,
    },
    /// Series against the torus-weight count
    MolienCheck {
        #[command(flatten)]
        ambient: Ambient,
        /// Irreducible polynomial of degree N; default: every residue k
        #[arg(long, conflicts_with = "k")]
        poly: Option<String>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Linear relations among series of products of generators
    Kernel {
        #[command(flatten)]
        ambient: Ambient,
        /// Comma-separated digit strings
        #[arg(long, value_delimiter = ',', required = true)]
        polys: Vec<String>,
        #[arg(long, default_value_t = KERNEL_SERIES_ORDER)]
        order: usize,
        #[arg(long)]
        emit_ring_element: bool,
    },
    /// Run the formula-versus-oracle suites
    Verify {
        /// Suites to run (default: all)
        #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: Vec<String>,
    },
}

/// What a command produced: a JSON value with a "text" field and the exit
/// status it asks for.
pub struct Outcome {
    pub value: Value,
    pub status: i32,
}

fn ok(mut value: Value, text: String) -> Outcome {
    value["text"] = Value::String(text);
    Outcome { value, status: 0 }
}

fn budget(cli: &Cli) -> Result<u128, Error> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{BUDGET_ENV}={s:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn rational_field() -> Arc<CycField> {
    Arc::new(CycField::new(1).expect("m = 1"))
}

fn parse_basis(p: u32, s: &str) -> Result<FpPoly, Error> {
    let f = FpPoly::parse(p, s)?;
    if !f.is_basis() {
        return Err(Error::Domain(format!("{} is not monic with nonzero constant term", f.to_digits())));
    }
    Ok(f)
}

pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Factor { p, poly } => {
            let f = FpPoly::parse(*p, poly)?;
            let fac = factor(&f)?;
            let factors: Vec<Value> = fac
                .factors
                .iter()
                .map(|(h, e)| json!({"factor": h.to_digits(), "multiplicity": e}))
                .collect();
            Ok(ok(json!({"poly": f.to_digits(), "unit": fac.unit, "factors": factors}), fac.to_string()))
        }
        Command::Mult { p, a, b } => {
            let f = parse_basis(*p, a)?;
            let g = parse_basis(*p, b)?;
            let c = structure_constant(&f, &g)?;
            let field = rational_field();
            let x = RingElt::term_in(*p, &field, &f.mul(&g), CycNum::from_int(&field, c.clone()))?;
            Ok(ok(
                json!({"a": f.to_digits(), "b": g.to_digits(), "constant": c.to_string(), "product": f.mul(&g).to_digits()}),
                x.to_text(),
            ))
        }
        Command::Power { p, poly, e } => {
            let f = parse_basis(*p, poly)?;
            let (c, fe) = generator_power(&f, *e)?;
            let field = rational_field();
            let x = RingElt::term_in(*p, &field, &fe, CycNum::from_int(&field, c.clone()))?;
            Ok(ok(json!({"poly": f.to_digits(), "e": e, "scalar": c.to_string(), "product": fe.to_digits()}), x.to_text()))
        }
        Command::Decompose { p, poly } => {
            let f = parse_basis(*p, poly)?;
            let mono = decompose_into_generators(&f)?;
            let factors: Vec<Value> = mono
                .factors
                .iter()
                .map(|(h, e)| json!({"generator": h.to_digits(), "exponent": e}))
                .collect();
            Ok(ok(json!({"poly": f.to_digits(), "scalar": mono.scalar.to_string(), "factors": factors}), mono.to_text()))
        }
        Command::Delta { p, poly, oracle } => {
            let f = parse_basis(*p, poly)?;
            let field = rational_field();
            let x = RingElt::term_in(*p, &field, &f, CycNum::one(&field))?;
            let d = x.comultiply();
            let mut v = json!({"poly": f.to_digits(), "delta": json::tensor(&d)});
            let mut text = d.to_text();
            if *oracle {
                let o = comultiplication_oracle(&ClassFn::from_ring_elt(&x, f.deg())?, budget(cli)?)?;
                let z = centralizer_order_formula(&f)?;
                v["oracle"] = json::tensor(&o);
                v["centralizer_order"] = json!(z.to_string());
                v["oracle_equals_delta"] = json!(o == d);
                v["oracle_equals_scaled_delta"] = json!(o == d.scale_int(&z));
                text = format!("{text}\noracle: {}", o.to_text());
            }
            Ok(ok(v, text))
        }
        Command::TSpectrum { p, n, graded } => {
            let dims = if *graded { t_eigenspace_dimensions_graded(*p, *n)? } else { t_eigenspace_dimensions(*p, *n)? };
            let formula = (!*graded).then(|| t_eigenspace_formula(*p, *n));
            let eig: Vec<String> = dims.iter().map(|(e, _)| e.to_string()).collect();
            let ds: Vec<u64> = dims.iter().map(|(_, d)| *d).collect();
            let mut v = json!({"p": p, "n": n, "graded": graded, "eigenvalues": eig, "dimensions": ds});
            if let Some(f) = formula {
                v["formula_dimensions"] = json!(f.iter().map(|(_, d)| *d).collect::<Vec<_>>());
            }
            let text = dims.iter().map(|(e, d)| format!("{e}: {d}")).collect::<Vec<_>>().join("\n");
            Ok(ok(v, text))
        }
        Command::DlBasis { p, n, direction } => {
            let ctx = ExtFieldCtx::new(*p, *n)?;
            let dl = DLBasisMatrix::new(&ctx)?;
            let m = match direction {
                Direction::ToPi => dl.to_pi(),
                Direction::FromPi => dl.from_pi(),
            };
            let text = m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(CycNum::to_text).collect::<Vec<_>>().join("\t"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(ok(
                json!({
                    "p": p,
                    "n": n,
                    "direction": match direction { Direction::ToPi => "to-pi", Direction::FromPi => "from-pi" },
                    "representatives": dl.representatives(),
                    "classes": json::poly_list(dl.classes()),
                    "matrix": json::matrix(m),
                    "round_trip_identity": dl.round_trip_is_identity(),
                }),
                text,
            ))
        }
        Command::Series { ambient, poly, order, closed_form } => {
            let ctx = ambient.ctx()?;
            let f = parse_basis(ctx.p(), poly)?;
            let s = if *closed_form { closed_form_series(&ctx, &f, *order)? } else { series_of_basis(&ctx, &f, *order)? };
            let mut v = json::series(&s);
            v["poly"] = json::poly(&f);
            v["closed_form"] = json!(closed_form);
            let text = s.coefficients().iter().map(CycNum::to_text).collect::<Vec<_>>().join(", ");
            Ok(ok(v, text))
        }
        Command::MolienCheck { ambient, poly, k, order } => {
            let ctx = ambient.ctx()?;
            let checks = match (poly, k) {
                (Some(f), _) => vec![molien_series_check(&ctx, &FpPoly::parse(ctx.p(), f)?, *order)?],
                (None, Some(k)) => vec![molien_residue_check(&ctx, *k, *order)?],
                (None, None) => (0..ctx.order())
                    .map(|k| molien_residue_check(&ctx, k, *order))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let equal = checks.iter().all(|c| c.equal());
            let text = checks
                .iter()
                .map(|c| format!("k={} {}: {}", c.k, c.class.to_digits(), if c.equal() { "equal" } else { "MISMATCH" }))
                .collect::<Vec<_>>()
                .join("\n");
            let mut out = ok(
                json!({"p": ctx.p(), "N": ctx.degree(), "order": order, "equal": equal, "checks": checks.iter().map(json::molien).collect::<Vec<_>>()}),
                text,
            );
            out.status = if equal { 0 } else { 1 };
            Ok(out)
        }
        Command::Kernel { ambient, polys, order, emit_ring_element } => {
            let ctx = ambient.ctx()?;
            let fs = polys.iter().map(|s| parse_basis(ctx.p(), s)).collect::<Result<Vec<_>, _>>()?;
            let r = kernel_relations_to_order(&ctx, &fs, *order)?;
            let mut lines = vec![format!("kernel dimension {}", r.dimension)];
            for (a, x) in r.relations.iter().zip(&r.ring_elements) {
                lines.push(format!("({})", a.iter().map(CycNum::to_text).collect::<Vec<_>>().join(", ")));
                if *emit_ring_element {
                    lines.push(format!("  {}", x.to_text()));
                }
            }
            let mut out = ok(json::kernel(&r, *emit_ring_element), lines.join("\n"));
            out.status = if r.residual_zero && r.series_zero { 0 } else { 1 };
            Ok(out)
        }
        Command::Verify { suite } => {
            let report = verify::run(suite, budget(cli)?)?;
            let failed = report.failures();
            let text = report.to_text();
            let mut out = ok(report.to_json(), text);
            out.status = if failed == 0 { 0 } else { 1 };
            Ok(out)
        }
    }
}

/// Parses arguments, runs the command, and returns (exit status, stdout,
/// stderr).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 { (0, e.to_string(), String::new()) } else { (2, String::new(), e.to_string()) };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.value).expect("serializable") + "\n",
                Format::Text => out.value["text"].as_str().unwrap_or_default().to_string() + "\n",
            };
            (out.status, stdout, String::new())
        }
        Err(e) => {
            let status = match e {
                Error::Invariant(_) => 1,
                _ => 2,
            };
            (status, String::new(), format!("error: {e}\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(args: &[&str]) -> (i32, Value) {
        let (status, out, err) = run(std::iter::once("projgl").chain(args.iter().copied()));
        assert!(err.is_empty() || status != 0, "{err}");
        (status, if out.is_empty() { Value::Null } else { serde_json::from_str(&out).unwrap() })
    }

    #[test]
    fn examples() {
        let (s, v) = json_of(&["mult", "--p", "2", "--a", "11", "--b", "11"]);
        assert_eq!((s, v["text"].as_str()), (0, Some("6*pi[101]")));
        let (_, v) = json_of(&["factor", "--p", "2", "--poly", "10101"]);
        assert_eq!(v["text"], "(111)^2");
        let (_, v) = json_of(&["factor", "--p", "2", "--poly", "x^4+x^2+1"]);
        assert_eq!(v["text"], "(111)^2");
        let (_, v) = json_of(&["t-spectrum", "--p", "2", "--n", "3"]);
        assert_eq!(v["dimensions"], json!([4, 2, 1, 1]));
        let (_, v) = json_of(&["power", "--p", "2", "--poly", "11", "--e", "2"]);
        assert_eq!(v["text"], "6*pi[101]");
        let (_, v) = json_of(&["decompose", "--p", "2", "--poly", "101"]);
        assert_eq!(v["text"], "1/6*pi[11]^2");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(json_of(&["mult", "--p", "4", "--a", "11", "--b", "11"]).0, 2);
        assert_eq!(json_of(&["bogus"]).0, 2);
        assert_eq!(json_of(&["series", "--p", "2", "--N", "4", "--poly", "01"]).0, 2);
        assert_eq!(json_of(&["series", "--p", "2", "--N", "4", "--modulus", "11111", "--poly", "11"]).0, 2);
        let (s, _, err) = run(["projgl", "--budget", "30", "delta", "--p", "2", "--poly", "111", "--oracle"]);
        assert_eq!(s, 2);
        assert!(err.contains("36"), "{err}");
    }
}
