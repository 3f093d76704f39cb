use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::{closed_form_parts, series_of_element};
use crate::cyclo::{CycNum, CycPoly};
use crate::error::{domain, Result};
use crate::ffpoly::{ExtFieldCtx, FpPoly};
use crate::glring::{decompose_into_generators, unipotent_multiplicity, RingElt};
use crate::linalg::Matrix;

pub const KERNEL_SERIES_ORDER: usize = 64;

/// Relations sum alpha_i Q(g_i) with zero Poincare series, where g_i is the
/// product of all inputs but the i-th and Q(g) = prod (p^{deg h} - 1)^e pi_h^e
/// over the factorization g = prod h^e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub polys: Vec<FpPoly>,
    /// g_i, the product omitting polys[i].
    pub omitted: Vec<FpPoly>,
    pub dimension: usize,
    pub relations: Vec<Vec<CycNum>>,
    pub ring_elements: Vec<RingElt>,
    /// Every relation gives the zero polynomial in the cleared identity.
    pub residual_zero: bool,
    pub series_order: usize,
    /// Every ring element has zero series through t^series_order.
    pub series_zero: bool,
    /// Per relation: the ring element is fixed by T.
    pub t_fixed: Vec<bool>,
}

fn lcm(a: &FpPoly, b: &FpPoly) -> FpPoly {
    a.mul(b).div_exact(&a.gcd(b)).monic()
}

fn omitted_products(polys: &[FpPoly]) -> Vec<FpPoly> {
    let p = polys[0].p();
    (0..polys.len())
        .map(|i| {
            polys
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(FpPoly::one(p), |acc, (_, f)| acc.mul(f))
        })
        .collect()
}

fn check_inputs(ctx: &ExtFieldCtx, polys: &[FpPoly]) -> Result<()> {
    if polys.is_empty() {
        return Err(domain!("kernel search needs at least one polynomial"));
    }
    for f in polys {
        if f.p() != ctx.p() || !f.is_basis() {
            return Err(domain!("{} is not a basis polynomial over F_{}", f.to_digits(), ctx.p()));
        }
    }
    Ok(())
}

/// Column i holds the coefficients of A(g_i) B(L / g_i), L = lcm(g_i), which
/// is B(L) times the closed form of Q(g_i).
pub fn kernel_matrix(ctx: &ExtFieldCtx, polys: &[FpPoly]) -> Result<Matrix> {
    check_inputs(ctx, polys)?;
    let field = ctx.cyclo();
    let gs = omitted_products(polys);
    let l = gs.iter().fold(FpPoly::one(ctx.p()), |acc, g| lcm(&acc, g));
    let mut cols: Vec<CycPoly> = Vec::with_capacity(gs.len());
    for g in &gs {
        let (a, _) = closed_form_parts(ctx, g)?;
        let (_, b) = closed_form_parts(ctx, &l.div_exact(g))?;
        cols.push(a.mul(&b));
    }
    let rows = cols.iter().filter_map(CycPoly::degree).max().unwrap_or(0) + 1;
    let mut m = Matrix::zeros(field, rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.coeffs().iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    Ok(m)
}

/// Scales a relation with rational entries to coprime integers with a
/// positive last nonzero entry.
fn normalize(v: Vec<CycNum>) -> Vec<CycNum> {
    let Some(rats) = v.iter().map(CycNum::to_rational).collect::<Option<Vec<BigRational>>>() else {
        return v;
    };
    let field = v[0].field().clone();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let sign = if ints.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    ints.iter().map(|x| CycNum::from_rational(&field, &BigRational::from_integer(x / &g * sign))).collect()
}

/// Q(g) as a single basis term: pi_g * prod (q_h - 1)^e / scalar(g).
fn q_element(ctx: &ExtFieldCtx, g: &FpPoly) -> Result<RingElt> {
    let mono = decompose_into_generators(g)?;
    let mut c = BigRational::one() / &mono.scalar;
    for (h, e) in &mono.factors {
        let q1: BigInt = Pow::pow(BigInt::from(ctx.p()), h.deg()) - 1u32;
        c *= BigRational::from_integer(Pow::pow(q1, *e));
    }
    RingElt::term(ctx, g, CycNum::from_rational(ctx.cyclo(), &c))
}

pub fn kernel_relations(ctx: &ExtFieldCtx, polys: &[FpPoly]) -> Result<KernelReport> {
    kernel_relations_to_order(ctx, polys, KERNEL_SERIES_ORDER)
}

pub fn kernel_relations_to_order(ctx: &ExtFieldCtx, polys: &[FpPoly], order: usize) -> Result<KernelReport> {
    let m = kernel_matrix(ctx, polys)?;
    let relations: Vec<Vec<CycNum>> = m.nullspace().into_iter().map(normalize).collect();
    let omitted = omitted_products(polys);
    let qs = omitted.iter().map(|g| q_element(ctx, g)).collect::<Result<Vec<_>>>()?;
    let residual_zero = relations.iter().all(|a| m.mul_vec(a).iter().all(CycNum::is_zero));
    let mut ring_elements = Vec::with_capacity(relations.len());
    let mut series_zero = true;
    let mut t_fixed = Vec::with_capacity(relations.len());
    for a in &relations {
        let mut x = RingElt::zero(ctx);
        for (ai, q) in a.iter().zip(&qs) {
            x = x.add(&q.scale(ai))?;
        }
        series_zero &= series_of_element(ctx, &x, order)?.iter().all(CycNum::is_zero);
        t_fixed.push(x.t_apply() == x);
        ring_elements.push(x);
    }
    Ok(KernelReport {
        polys: polys.to_vec(),
        omitted,
        dimension: relations.len(),
        relations,
        ring_elements,
        residual_zero,
        series_order: order,
        series_zero,
        t_fixed,
    })
}

/// Kernel relations among polynomials coprime to x - 1; every resulting
/// element is an eigenvector of T with eigenvalue 1.
pub fn t_fixed_kernel_witness_for(ctx: &ExtFieldCtx, polys: &[FpPoly]) -> Result<KernelReport> {
    if let Some(f) = polys.iter().find(|f| unipotent_multiplicity(f) > 0) {
        return Err(domain!("{} has the factor x - 1", f.to_digits()));
    }
    kernel_relations(ctx, polys)
}

/// The degree 4 relation among x^4+x^3+x^2+x+1, x^4+x^3+1, (x^2+x+1)^2 and
/// x^4+x+1 over F_2, which needs F_16 inside the ambient field.
pub fn t_fixed_kernel_witness(ctx: &ExtFieldCtx) -> Result<KernelReport> {
    if ctx.p() != 2 || !ctx.degree().is_multiple_of(4) {
        return Err(domain!("the degree 4 witness needs p = 2 and 4 | N"));
    }
    let polys = ["11111", "10011", "10101", "11001"]
        .iter()
        .map(|s| FpPoly::from_digits(2, s))
        .collect::<Result<Vec<_>>>()?;
    t_fixed_kernel_witness_for(ctx, &polys)
}
