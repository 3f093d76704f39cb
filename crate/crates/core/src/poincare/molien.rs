use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::series_of_element;
use crate::cyclo::CycNum;
use crate::error::{domain, Result};
use crate::ffpoly::{ExtFieldCtx, FpPoly};
use crate::torus_dl::induced_indicator;

/// Dimensions of the weight spaces of H^* V_n under the torus T_n, where a
/// monomial's weight is sum (exponent_i) p^i mod p^n - 1.
///
/// For p = 2 the monomials are x_0^{a_0}...x_{n-1}^{a_{n-1}} with degree
/// sum a_i; for odd p they are e^eps (x) y^a with eps in {0,1}^n, degree
/// sum eps_i + 2 sum a_i, and weight sum (eps_i + a_i) p^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienTable {
    p: u32,
    n: u32,
    m: u64,
    // counts[j][d]
    counts: Vec<Vec<u64>>,
}

impl MolienTable {
    pub fn new(p: u32, n: u32, max_degree: usize) -> Result<Self> {
        crate::ffpoly::check_prime(p)?;
        if n == 0 {
            return Err(domain!("Molien table needs n >= 1"));
        }
        let m = u64::from(p).pow(n) - 1;
        let mu = m as usize;
        let mut dp = vec![vec![0u64; max_degree + 1]; mu];
        dp[0][0] = 1;
        let mut weight = 1u64 % m;
        for _ in 0..n {
            let w = weight as usize;
            if p != 2 {
                // exterior generator: degree 1, at most once
                for d in (1..=max_degree).rev() {
                    for r in 0..mu {
                        let src = (r + mu - w) % mu;
                        dp[r][d] += dp[src][d - 1];
                    }
                }
            }
            // polynomial generator: degree 1 (p = 2) or 2 (odd p), unbounded
            let step = if p == 2 { 1 } else { 2 };
            for d in step..=max_degree {
                let prev: Vec<u64> = (0..mu).map(|r| dp[(r + mu - w) % mu][d - step]).collect();
                for (r, v) in prev.into_iter().enumerate() {
                    dp[r][d] += v;
                }
            }
            weight = weight * u64::from(p) % m;
        }
        Ok(Self { p, n, m, counts: dp })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.counts[0].len() - 1
    }

    pub fn count(&self, j: u64, d: usize) -> u64 {
        self.counts[(j % self.m) as usize][d]
    }

    /// (1/m) sum_j zeta^{-jk} count(j, d), for d = 0..=max_degree.
    pub fn fourier_series(&self, ctx: &ExtFieldCtx, k: u64) -> Result<Vec<CycNum>> {
        if ctx.p() != self.p || ctx.degree() != self.n {
            return Err(domain!("Molien table for (p={}, n={}) used with F_{}^{}", self.p, self.n, ctx.p(), ctx.degree()));
        }
        let m = self.m;
        let field = ctx.cyclo();
        let inv_m = BigRational::new(BigInt::from(1), BigInt::from(m));
        Ok((0..=self.max_degree())
            .map(|d| {
                let mut acc = CycNum::zero(field);
                for j in 0..m {
                    let c = self.count(j, d);
                    if c != 0 {
                        let w = CycNum::zeta_pow(field, (m - j * k % m) % m);
                        acc += w.scale_int(&BigInt::from(c));
                    }
                }
                acc.scale(&inv_m)
            })
            .collect())
    }
}

/// Dimension of the degree-d part of the weight-j summand.
pub fn molien_count(p: u32, n: u32, j: u64, d: usize) -> Result<u64> {
    Ok(MolienTable::new(p, n, d)?.count(j, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienCheck {
    pub k: u64,
    pub class: FpPoly,
    pub formula: Vec<CycNum>,
    pub molien: Vec<CycNum>,
    pub first_mismatch: Option<usize>,
}

impl MolienCheck {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the series of Ind(hat(phi)_k), computed from the closed forms
/// of the generators, with the torus-weight count, through t^order.
pub fn molien_residue_check(ctx: &ExtFieldCtx, k: u64, order: usize) -> Result<MolienCheck> {
    let x = induced_indicator(ctx, k)?;
    let class = x.terms().keys().next().cloned().expect("nonzero indicator");
    let formula = series_of_element(ctx, &x, order)?;
    let molien = MolienTable::new(ctx.p(), ctx.degree(), order)?.fourier_series(ctx, k)?;
    let first_mismatch = (0..=order).find(|&d| formula[d] != molien[d]);
    Ok(MolienCheck { k, class, formula, molien, first_mismatch })
}

/// The same check for an irreducible f of degree N, at the smallest
/// discrete log of its roots.
pub fn molien_series_check(ctx: &ExtFieldCtx, f: &FpPoly, order: usize) -> Result<MolienCheck> {
    if f.deg() != ctx.degree() as usize || !crate::ffpoly::is_irreducible(f)? {
        return Err(domain!("{} is not irreducible of degree {}", f.to_digits(), ctx.degree()));
    }
    let k = *ctx.roots(f)?.first().expect("degree >= 1");
    molien_residue_check(ctx, k, order)
}
