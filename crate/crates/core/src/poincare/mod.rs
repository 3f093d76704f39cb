//! Poincare series of ring elements, the torus-weight count they are
//! compared against, and linear relations among series of products of
//! generators.

mod kernel;
mod molien;
mod series;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::cyclo::{lifted_roots, CycNum, CycPoly};
use crate::error::{config, domain, Result};
use crate::ffpoly::{is_irreducible, ExtFieldCtx, FpPoly};
use crate::glring::{decompose_into_generators, RingElt};

pub use kernel::{
    kernel_matrix, kernel_relations, kernel_relations_to_order, t_fixed_kernel_witness, t_fixed_kernel_witness_for,
    KernelReport, KERNEL_SERIES_ORDER,
};
pub use molien::{molien_count, molien_residue_check, molien_series_check, MolienCheck, MolienTable};
pub use series::{expand, truncated_mul, RatSeries};

pub const DEFAULT_ORDER: usize = 32;

fn check_generator(ctx: &ExtFieldCtx, f: &FpPoly) -> Result<()> {
    if f.p() != ctx.p() {
        return Err(config!("polynomial over F_{} used in a context over F_{}", f.p(), ctx.p()));
    }
    if !f.is_basis() || f.deg() == 0 || !is_irreducible(f)? {
        return Err(domain!("{} is not an irreducible basis polynomial", f.to_digits()));
    }
    if !(ctx.degree() as usize).is_multiple_of(f.deg()) {
        return Err(config!("degree {} does not divide N = {}", f.deg(), ctx.degree()));
    }
    Ok(())
}

/// Numerator and denominator A(f), B(f) with roots w of f (with
/// multiplicity): A = 1, B = prod (w - t) for p = 2, and
/// A = prod (w + t), B = prod (w - t^2) for odd p.
pub(crate) fn closed_form_parts(ctx: &ExtFieldCtx, f: &FpPoly) -> Result<(CycPoly, CycPoly)> {
    let field = ctx.cyclo();
    let one = CycNum::one(field);
    let minus_one = CycNum::from_int(field, -1);
    let mut num = CycPoly::one(field);
    let mut den = CycPoly::one(field);
    for w in lifted_roots(ctx, f)? {
        if ctx.p() == 2 {
            den = den.mul(&CycPoly::binomial(w, minus_one.clone(), 1));
        } else {
            num = num.mul(&CycPoly::binomial(w.clone(), one.clone(), 1));
            den = den.mul(&CycPoly::binomial(w, minus_one.clone(), 2));
        }
    }
    Ok((num, den))
}

/// The closed form A(f)/B(f) for irreducible f, which is the series of
/// (p^{deg f} - 1) pi_f.
pub fn closed_form_series(ctx: &ExtFieldCtx, f: &FpPoly, order: usize) -> Result<RatSeries> {
    check_generator(ctx, f)?;
    let (num, den) = closed_form_parts(ctx, f)?;
    RatSeries::new(num, den, order)
}

/// Series of the generator pi_f, f irreducible: A(f) / ((p^{deg f} - 1) B(f)).
pub fn generator_series(ctx: &ExtFieldCtx, f: &FpPoly, order: usize) -> Result<RatSeries> {
    check_generator(ctx, f)?;
    let (num, den) = closed_form_parts(ctx, f)?;
    let q1 = Pow::pow(BigInt::from(ctx.p()), f.deg()) - 1u32;
    RatSeries::new(num.scale_rational(&BigRational::new(BigInt::one(), q1)), den, order)
}

/// Series of pi_f for any basis polynomial f, as scalar * prod P(pi_h)^e
/// over the generator decomposition.
pub fn series_of_basis(ctx: &ExtFieldCtx, f: &FpPoly, order: usize) -> Result<RatSeries> {
    if f.p() != ctx.p() {
        return Err(config!("polynomial over F_{} used in a context over F_{}", f.p(), ctx.p()));
    }
    let mono = decompose_into_generators(f)?;
    let field = ctx.cyclo();
    let mut num = CycPoly::one(field).scale_rational(&mono.scalar);
    let mut den = CycPoly::one(field);
    for (h, e) in &mono.factors {
        check_generator(ctx, h)?;
        let (a, b) = closed_form_parts(ctx, h)?;
        let q1 = Pow::pow(BigInt::from(ctx.p()), h.deg()) - 1u32;
        num = num.scale_rational(&BigRational::new(BigInt::one(), Pow::pow(q1, *e)));
        for _ in 0..*e {
            num = num.mul(&a);
            den = den.mul(&b);
        }
    }
    RatSeries::new(num, den, order)
}

/// Coefficients of t^0..=t^order in the series of x.
pub fn series_of_element(ctx: &ExtFieldCtx, x: &RingElt, order: usize) -> Result<Vec<CycNum>> {
    if x.p() != ctx.p() || x.field() != ctx.cyclo() {
        return Err(config!("ring element does not live over the context's field"));
    }
    let mut out = vec![CycNum::zero(ctx.cyclo()); order + 1];
    for (f, c) in x.terms() {
        let s = series_of_basis(ctx, f, order)?;
        for (acc, v) in out.iter_mut().zip(s.coefficients()) {
            if !v.is_zero() {
                *acc += c * v;
            }
        }
    }
    Ok(out)
}
