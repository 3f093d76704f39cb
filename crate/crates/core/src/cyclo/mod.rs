//! Exact arithmetic in Q(zeta_m), m = p^N - 1, and the Brauer lift
//! `theta(alpha^k) = zeta_m^k` of the ambient field's multiplicative group.

mod field;
mod num;
mod poly;

use alloc::vec::Vec;

pub use field::{cyclotomic_polynomial, totient, CycField};
pub use num::CycNum;
pub use poly::CycPoly;

use crate::error::Result;
use crate::ffpoly::{ExtFieldCtx, FpPoly};

/// theta(alpha^k) = zeta_m^k.
pub fn theta(ctx: &ExtFieldCtx, k: u64) -> CycNum {
    CycNum::zeta_pow(ctx.cyclo(), k)
}

/// Lifted eigenvalues theta(root) of `f`, with multiplicity, in ascending
/// discrete-log order.
pub fn lifted_roots(ctx: &ExtFieldCtx, f: &FpPoly) -> Result<Vec<CycNum>> {
    Ok(ctx.roots(f)?.into_iter().map(|k| theta(ctx, k)).collect())
}

/// prod over the roots r of f (with multiplicity) of (theta(r) - t).
pub fn f_tilde(ctx: &ExtFieldCtx, f: &FpPoly) -> Result<CycPoly> {
    let field = ctx.cyclo();
    let minus_one = CycNum::from_int(field, -1);
    Ok(lifted_roots(ctx, f)?
        .into_iter()
        .fold(CycPoly::one(field), |acc, w| {
            acc.mul(&CycPoly::binomial(w, minus_one.clone(), 1))
        }))
}
