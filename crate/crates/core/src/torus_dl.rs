//! The Coxeter torus T_n = <alpha> of GL_n(F_p), its characters phi_i,
//! their Fourier transforms, and the change of basis between class
//! indicators and the induced characters Ind(phi_i) (the Deligne-Lusztig
//! labels (-1)^{n-1} R^{phi_i} (x) St_n).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::cyclo::CycNum;
use crate::error::{domain, invariant, Result};
use crate::ffpoly::{ExtFieldCtx, FpPoly};
use crate::glring::{generator_power, gl_order, psi, RingElt};
use crate::linalg::Matrix;

fn check_index(ctx: &ExtFieldCtx, k: u64) -> Result<()> {
    if k >= ctx.order() {
        return Err(domain!("torus index {k} outside 0..{}", ctx.order()));
    }
    Ok(())
}

/// phi_i(alpha^k) = zeta^{ik}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusChar {
    ctx: ExtFieldCtx,
    index: u64,
}

impl TorusChar {
    pub fn new(ctx: &ExtFieldCtx, index: u64) -> Result<Self> {
        check_index(ctx, index)?;
        Ok(Self { ctx: ctx.clone(), index })
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn value(&self, k: u64) -> CycNum {
        let m = self.ctx.order();
        CycNum::zeta_pow(self.ctx.cyclo(), (self.index % m) * (k % m) % m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { ctx: self.ctx.clone(), index: (self.index + other.index) % self.ctx.order() }
    }
}

/// A class function on T_n given as sum_j c_j phi_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusFunction {
    ctx: ExtFieldCtx,
    coeffs: Vec<CycNum>,
}

impl TorusFunction {
    pub fn from_coeffs(ctx: &ExtFieldCtx, coeffs: Vec<CycNum>) -> Result<Self> {
        if coeffs.len() as u64 != ctx.order() {
            return Err(domain!("{} character coefficients for a torus of order {}", coeffs.len(), ctx.order()));
        }
        Ok(Self { ctx: ctx.clone(), coeffs })
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn evaluate(&self, k: u64) -> CycNum {
        let m = self.ctx.order();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(CycNum::zero(self.ctx.cyclo()), |acc, (j, c)| {
                acc + c.mul_zeta_pow(j as u64 * (k % m) % m)
            })
    }

    /// Values at alpha^0, ..., alpha^{m-1}.
    pub fn values(&self) -> Vec<CycNum> {
        (0..self.ctx.order()).map(|k| self.evaluate(k)).collect()
    }
}

/// hat(phi)_k = (1/m) sum_j zeta^{-jk} phi_j, the indicator of alpha^k.
pub fn fourier_indicator(ctx: &ExtFieldCtx, k: u64) -> Result<TorusFunction> {
    check_index(ctx, k)?;
    let m = ctx.order();
    let inv_m = BigRational::new(1.into(), m.into());
    let coeffs = (0..m)
        .map(|j| CycNum::zeta_pow(ctx.cyclo(), (m - j * k % m) % m).scale(&inv_m))
        .collect();
    TorusFunction::from_coeffs(ctx, coeffs)
}

/// |Z(alpha^k)| / |T_n| = |GL_{m_k}(F_{p^{d_k}})| / (p^n - 1).
pub fn induced_indicator_scalar(ctx: &ExtFieldCtx, k: u64) -> Result<BigInt> {
    check_index(ctx, k)?;
    let (_, d, mk) = ctx.min_poly_of_power(k)?;
    let q = Pow::pow(BigInt::from(ctx.p()), d);
    let (s, r) = gl_order(mk, &q).div_rem(&BigInt::from(ctx.order()));
    if !r.is_zero() {
        return Err(invariant!("torus order does not divide the centralizer order"));
    }
    Ok(s)
}

/// The scalar psi_{m_k}(p^{d_k}) / psi_1(p^n), which drops the factor
/// p^{d_k C(m_k, 2)} and so differs from `induced_indicator_scalar` when m_k >= 2.
pub fn induced_indicator_scalar_without_unipotent_part(ctx: &ExtFieldCtx, k: u64) -> Result<BigRational> {
    check_index(ctx, k)?;
    let (_, d, mk) = ctx.min_poly_of_power(k)?;
    let q = Pow::pow(BigInt::from(ctx.p()), d);
    Ok(BigRational::new(psi(mk, &q), BigInt::from(ctx.order())))
}

/// The class f_k^{m_k} of alpha^k in GL_n(F_p).
pub fn torus_class(ctx: &ExtFieldCtx, k: u64) -> Result<FpPoly> {
    check_index(ctx, k)?;
    let (f, _, mk) = ctx.min_poly_of_power(k)?;
    Ok(f.pow(mk))
}

/// Ind_{T_n}^{GL_n}(hat(phi)_k) in the pi basis.
pub fn induced_indicator(ctx: &ExtFieldCtx, k: u64) -> Result<RingElt> {
    let s = induced_indicator_scalar(ctx, k)?;
    RingElt::term(ctx, &torus_class(ctx, k)?, CycNum::from_int(ctx.cyclo(), s))
}

/// Ind_{T_n}^{GL_n}(phi_i) = sum_k zeta^{ik} Ind(hat(phi)_k) in the pi basis.
pub fn dl_to_pi(ctx: &ExtFieldCtx, i: u64) -> Result<RingElt> {
    check_index(ctx, i)?;
    let m = ctx.order();
    let mut out = RingElt::zero(ctx);
    for k in 0..m {
        let term = induced_indicator(ctx, k)?.scale(&CycNum::zeta_pow(ctx.cyclo(), i * k % m));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// (pi_{f_k})^{m_k} = (p^{d_k} - 1)^{-m_k} sum_j zeta^{-jk} Ind(phi_j), as
/// coefficients over all labels j = 0..m-1.
pub fn pi_to_dl_fourier(ctx: &ExtFieldCtx, k: u64) -> Result<Vec<CycNum>> {
    check_index(ctx, k)?;
    let m = ctx.order();
    let (_, d, mk) = ctx.min_poly_of_power(k)?;
    let q = Pow::pow(BigInt::from(ctx.p()), d);
    let scale = BigRational::new(1.into(), Pow::pow(q - 1u32, mk));
    Ok((0..m)
        .map(|j| CycNum::zeta_pow(ctx.cyclo(), (m - j * k % m) % m).scale(&scale))
        .collect())
}

/// The change of basis between DL labels and pi classes, indexed by
/// Frobenius-orbit representatives: label j stands for Ind(phi_j), which
/// only depends on the orbit of j, and row r stands for pi_{f_r^{m_r}}.
#[derive(Clone, Debug)]
pub struct DLBasisMatrix {
    ctx: ExtFieldCtx,
    reps: Vec<u64>,
    classes: Vec<FpPoly>,
    to_pi: Matrix,
    from_pi: Matrix,
}

impl DLBasisMatrix {
    pub fn new(ctx: &ExtFieldCtx) -> Result<Self> {
        let reps = ctx.orbit_representatives();
        let classes = reps.iter().map(|&k| torus_class(ctx, k)).collect::<Result<Vec<_>>>()?;
        let mut rows = alloc::vec![Vec::with_capacity(reps.len()); reps.len()];
        for &j in &reps {
            let col = dl_to_pi(ctx, j)?;
            if col.len() > reps.len() || col.terms().keys().any(|f| !classes.contains(f)) {
                return Err(invariant!("Ind(phi_{j}) leaves the span of torus classes"));
            }
            for (r, f) in classes.iter().enumerate() {
                rows[r].push(col.coeff(f));
            }
        }
        let to_pi = Matrix::from_rows(ctx.cyclo(), rows);
        let from_pi = to_pi.inverse()?;
        Ok(Self { ctx: ctx.clone(), reps, classes, to_pi, from_pi })
    }

    pub fn ctx(&self) -> &ExtFieldCtx {
        &self.ctx
    }

    /// Orbit representatives, shared by labels and classes.
    pub fn representatives(&self) -> &[u64] {
        &self.reps
    }

    /// pi-basis class for each representative.
    pub fn classes(&self) -> &[FpPoly] {
        &self.classes
    }

    /// Column j: Ind(phi_{reps[j]}) in the classes basis.
    pub fn to_pi(&self) -> &Matrix {
        &self.to_pi
    }

    /// Column r: pi_{classes[r]} in the label basis.
    pub fn from_pi(&self) -> &Matrix {
        &self.from_pi
    }

    fn rep_index(&self, k: u64) -> Result<usize> {
        check_index(&self.ctx, k)?;
        let rep = *self.ctx.frobenius_orbit(k).iter().min().expect("nonempty orbit");
        self.reps
            .iter()
            .position(|&r| r == rep)
            .ok_or_else(|| invariant!("no representative for {k}"))
    }

    /// (pi_{f_k})^{m_k} as coefficients over the representative labels.
    pub fn pi_to_dl(&self, k: u64) -> Result<Vec<CycNum>> {
        let r = self.rep_index(k)?;
        let (f, _, mk) = self.ctx.min_poly_of_power(k)?;
        let (s, _) = generator_power(&f, mk)?;
        Ok(self.from_pi.column(r).iter().map(|c| c.scale_int(&s)).collect())
    }

    /// Sums coefficients over all labels 0..m-1 into the representative labels.
    pub fn fold_labels(&self, coeffs: &[CycNum]) -> Result<Vec<CycNum>> {
        let mut out = alloc::vec![CycNum::zero(self.ctx.cyclo()); self.reps.len()];
        for (j, c) in coeffs.iter().enumerate() {
            out[self.rep_index(j as u64)?] += c.clone();
        }
        Ok(out)
    }

    /// Re-expands label coefficients in the pi basis.
    pub fn labels_to_ring(&self, coeffs: &[CycNum]) -> Result<RingElt> {
        let v = self.to_pi.mul_vec(coeffs);
        let mut out = RingElt::zero(&self.ctx);
        for (f, c) in self.classes.iter().zip(v) {
            out = out.add(&RingElt::term(&self.ctx, f, c)?)?;
        }
        Ok(out)
    }

    /// from_pi * to_pi == 1 and to_pi * from_pi == 1.
    pub fn round_trip_is_identity(&self) -> bool {
        self.from_pi.mul(&self.to_pi).is_identity() && self.to_pi.mul(&self.from_pi).is_identity()
    }
}

/// Convenience wrapper building the matrix for one query.
pub fn pi_to_dl(ctx: &ExtFieldCtx, k: u64) -> Result<Vec<CycNum>> {
    DLBasisMatrix::new(ctx)?.pi_to_dl(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glring::centralizer_order_formula;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    fn int(ctx: &ExtFieldCtx, v: i64) -> CycNum {
        CycNum::from_int(ctx.cyclo(), v)
    }

    #[test]
    fn torus_characters_multiply() {
        let ctx = ExtFieldCtx::new(2, 4).unwrap();
        let a = TorusChar::new(&ctx, 4).unwrap();
        let b = TorusChar::new(&ctx, 13).unwrap();
        assert_eq!(a.mul(&b).index(), 2);
        for k in 0..15 {
            assert_eq!(a.mul(&b).value(k), &a.value(k) * &b.value(k));
            assert_eq!(a.value(k + 1), &a.value(k) * &a.value(1));
        }
        assert!(TorusChar::new(&ctx, 15).is_err());
    }

    #[test]
    fn fourier_indicator_is_a_delta() {
        for (p, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 2), (5, 1), (2, 8)] {
            let ctx = ExtFieldCtx::new(p, n).unwrap();
            let m = ctx.order();
            let ks: Vec<u64> = if m <= 80 { (0..m).collect() } else { alloc::vec![0, 1, 5, 17, 85, 254] };
            for &k in &ks {
                let v = fourier_indicator(&ctx, k).unwrap();
                let ls: Vec<u64> = if m <= 80 { (0..m).collect() } else { alloc::vec![0, 1, k, (k + 1) % m, 100] };
                for l in ls {
                    let e = v.evaluate(l);
                    if l == k {
                        assert!(e.is_one(), "p={p} n={n} k={k}");
                    } else {
                        assert!(e.is_zero(), "p={p} n={n} k={k} l={l}");
                    }
                }
            }
        }
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        assert!(fourier_indicator(&ctx, 0).unwrap().coeffs()[0].is_one());
    }

    #[test]
    fn induced_indicator_examples() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        assert_eq!(induced_indicator(&ctx, 0).unwrap().to_text(), "2*pi[101]");
        assert_eq!(induced_indicator(&ctx, 1).unwrap().to_text(), "pi[111]");
        let ctx4 = ExtFieldCtx::new(2, 4).unwrap();
        let x = induced_indicator(&ctx4, 5).unwrap();
        assert_eq!(x, RingElt::term(&ctx4, &poly(2, "111").pow(2), int(&ctx4, 12)).unwrap());
        assert_eq!(
            induced_indicator_scalar_without_unipotent_part(&ctx, 0).unwrap(),
            BigRational::from(BigInt::from(1))
        );
    }

    #[test]
    fn induced_scalar_is_centralizer_over_torus() {
        for (p, n) in [(2u32, 2u32), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2)] {
            let ctx = ExtFieldCtx::new(p, n).unwrap();
            for k in ctx.orbit_representatives() {
                let z = centralizer_order_formula(&torus_class(&ctx, k).unwrap()).unwrap();
                assert_eq!(induced_indicator_scalar(&ctx, k).unwrap() * BigInt::from(ctx.order()), z);
            }
        }
    }

    #[test]
    fn dl_to_pi_examples() {
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        assert_eq!(dl_to_pi(&ctx, 0).unwrap(), RingElt::basis(&ctx, &poly(2, "11")).unwrap());
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        assert_eq!(dl_to_pi(&ctx, 0).unwrap().to_text(), "2*pi[111] + 2*pi[101]");
        // the inversion sum recovers each indicator
        let m = ctx.order();
        let inv_m = BigRational::new(1.into(), m.into());
        for k in 0..m {
            let mut acc = RingElt::zero(&ctx);
            for i in 0..m {
                let w = CycNum::zeta_pow(ctx.cyclo(), (m - i * k % m) % m).scale(&inv_m);
                acc = acc.add(&dl_to_pi(&ctx, i).unwrap().scale(&w)).unwrap();
            }
            assert_eq!(acc, induced_indicator(&ctx, k).unwrap());
        }
    }

    #[test]
    fn dl_labels_depend_on_orbit_only() {
        let ctx = ExtFieldCtx::new(2, 4).unwrap();
        for j in ctx.orbit_representatives() {
            let a = dl_to_pi(&ctx, j).unwrap();
            for i in ctx.frobenius_orbit(j) {
                assert_eq!(dl_to_pi(&ctx, i).unwrap(), a);
            }
        }
    }

    #[test]
    fn dl_matrix_round_trip() {
        for (p, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
            let ctx = ExtFieldCtx::new(p, n).unwrap();
            let dl = DLBasisMatrix::new(&ctx).unwrap();
            assert!(dl.round_trip_is_identity(), "p={p} n={n}");
            for k in 0..ctx.order() {
                // matrix route vs closed Fourier form
                let folded = dl.fold_labels(&pi_to_dl_fourier(&ctx, k).unwrap()).unwrap();
                assert_eq!(dl.pi_to_dl(k).unwrap(), folded, "p={p} n={n} k={k}");
                // back to the pi basis
                let (f, _, mk) = ctx.min_poly_of_power(k).unwrap();
                let expect = RingElt::basis(&ctx, &f).unwrap().pow(mk).unwrap();
                assert_eq!(dl.labels_to_ring(&folded).unwrap(), expect);
            }
        }
    }

    #[test]
    fn pi_to_dl_example() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        let third = BigRational::new(1.into(), 3.into());
        let v = pi_to_dl_fourier(&ctx, 1).unwrap();
        assert_eq!(v[0], int(&ctx, 1).scale(&third));
        assert_eq!(v[1], CycNum::zeta_pow(ctx.cyclo(), 2).scale(&third));
        assert_eq!(v[2], CycNum::zeta_pow(ctx.cyclo(), 1).scale(&third));
        let dl = DLBasisMatrix::new(&ctx).unwrap();
        assert_eq!(dl.representatives(), &[0, 1]);
        assert_eq!(dl.pi_to_dl(1).unwrap(), alloc::vec![int(&ctx, 1).scale(&third), int(&ctx, -1).scale(&third)]);
        let ctx1 = ExtFieldCtx::new(3, 1).unwrap();
        let dl1 = DLBasisMatrix::new(&ctx1).unwrap();
        assert_eq!(dl1.classes(), &[poly(3, "21"), poly(3, "11")]);
    }
}
