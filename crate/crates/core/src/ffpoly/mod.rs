//! Arithmetic over the prime field F_p: polynomials, factorization,
//! enumeration of class-indexing polynomials, and the ambient extension
//! field F_{p^N} with its discrete-log tables.

mod ext;
mod factor;
mod poly;

use alloc::vec::Vec;

pub use ext::{ExtFieldCtx, MAX_FIELD_SIZE};
pub use factor::{distinct_degree, factor, is_irreducible, squarefree, Factorization, SPLIT_SEED};
pub use poly::{check_prime, FpPoly, MAX_PRIME};

use crate::error::{invariant, Result};

/// All monic polynomials of degree exactly `d` in canonical order, keeping
/// only those with nonzero constant term when `require_nonzero_constant`.
pub fn enumerate_basis_polys(p: u32, d: usize, require_nonzero_constant: bool) -> Result<Vec<FpPoly>> {
    check_prime(p)?;
    let count = u64::from(p).pow(d as u32);
    let mut out = Vec::new();
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rest = v;
        for _ in 0..d {
            coeffs.push((rest % u64::from(p)) as u32);
            rest /= u64::from(p);
        }
        coeffs.push(1);
        if require_nonzero_constant && d > 0 && coeffs[0] == 0 {
            continue;
        }
        out.push(FpPoly::from_raw(p, coeffs));
    }
    Ok(out)
}

/// Basis polynomials of every degree from 0 to `max_degree`, canonical order.
pub fn enumerate_basis_polys_upto(p: u32, max_degree: usize) -> Result<Vec<FpPoly>> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(enumerate_basis_polys(p, d, true)?);
    }
    Ok(out)
}

/// Monic irreducibles of degree `d` other than `x`, canonical order.
pub fn enumerate_irreducibles(p: u32, d: usize) -> Result<Vec<FpPoly>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for f in enumerate_basis_polys(p, d, true)? {
        if is_irreducible(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            out.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// True when `g` is irreducible and `x` has multiplicative order p^N - 1
/// modulo `g`.
pub fn is_primitive(g: &FpPoly) -> bool {
    let n = g.deg() as u32;
    if n == 0 || !g.is_basis() || !matches!(is_irreducible(g), Ok(true)) {
        return false;
    }
    let Some(size) = u64::from(g.p()).checked_pow(n) else {
        return false;
    };
    let m = size - 1;
    let x = FpPoly::x(g.p());
    if !x.pow_mod(m, g).is_one() {
        return false;
    }
    prime_divisors(m)
        .into_iter()
        .all(|q| !x.pow_mod(m / q, g).is_one())
}

/// The first primitive polynomial of degree `n` in canonical order.
pub fn canonical_primitive(p: u32, n: u32) -> Result<FpPoly> {
    enumerate_basis_polys(p, n as usize, true)?
        .into_iter()
        .find(is_primitive)
        .ok_or_else(|| invariant!("no primitive polynomial of degree {n} over F_{p}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    fn moebius(n: usize) -> i64 {
        let mut n = n;
        let mut k = 0;
        let mut q = 2;
        while q * q <= n {
            if n.is_multiple_of(q) {
                n /= q;
                if n.is_multiple_of(q) {
                    return 0;
                }
                k += 1;
            }
            q += 1;
        }
        if n > 1 {
            k += 1;
        }
        if k % 2 == 0 { 1 } else { -1 }
    }

    fn necklace_count(p: u32, d: usize) -> i64 {
        let s: i64 = (1..=d)
            .filter(|e| d.is_multiple_of(*e))
            .map(|e| moebius(d / e) * i64::from(p).pow(e as u32))
            .sum();
        s / d as i64
    }

    #[test]
    fn basis_enumeration_counts() {
        assert_eq!(enumerate_basis_polys(2, 3, true).unwrap().len(), 4);
        assert_eq!(enumerate_basis_polys(2, 1, true).unwrap(), vec![poly(2, "11")]);
        assert_eq!(enumerate_basis_polys(3, 4, false).unwrap().len(), 81);
        for p in [2u32, 3, 5] {
            for d in 1..=4usize {
                let n = enumerate_basis_polys(p, d, true).unwrap().len() as u64;
                assert_eq!(n, u64::from(p).pow(d as u32) - u64::from(p).pow(d as u32 - 1));
            }
        }
        assert_eq!(enumerate_basis_polys_upto(2, 3).unwrap().len(), 8);
    }

    #[test]
    fn enumeration_is_sorted() {
        let v = enumerate_basis_polys(3, 3, true).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn degree_six_irreducibles_over_f2() {
        assert_eq!(enumerate_irreducibles(2, 6).unwrap().len(), 9);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        for (p, dmax) in [(2u32, 8usize), (3, 6), (5, 4)] {
            for d in 1..=dmax {
                let mut n = enumerate_irreducibles(p, d).unwrap().len() as i64;
                if d == 1 {
                    n += 1; // x itself
                }
                assert_eq!(n, necklace_count(p, d), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn factor_round_trip_exhaustive_f2() {
        for d in 1..=8 {
            for f in enumerate_basis_polys(2, d, false).unwrap() {
                let fac = factor(&f).unwrap();
                assert_eq!(fac.expand(2), f);
                for (g, _) in &fac.factors {
                    assert!(is_irreducible(g).unwrap());
                }
                assert_eq!(is_irreducible(&f).unwrap(), fac.factors.len() == 1 && fac.factors[0].1 == 1);
            }
        }
    }

    #[test]
    fn canonical_primitive_examples() {
        assert_eq!(canonical_primitive(2, 4).unwrap(), poly(2, "11001"));
        assert_eq!(canonical_primitive(2, 1).unwrap(), poly(2, "11"));
        assert_eq!(canonical_primitive(3, 1).unwrap(), poly(3, "11"));
        assert!(!is_primitive(&poly(2, "11111")));
        assert!(is_primitive(&poly(2, "10011")));
        assert_eq!(canonical_primitive(2, 6).unwrap(), canonical_primitive(2, 6).unwrap());
    }
}
