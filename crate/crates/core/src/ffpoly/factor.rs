//! Factorization over F_p: squarefree decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting driven by a
//! fixed-seed ChaCha stream so that results are reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::FpPoly;
use crate::error::{domain, Result};

/// Seed for the equal-degree splitting stream.
pub const SPLIT_SEED: u64 = 0x6772_6f74_6865_6e64;

/// `unit * prod(factor^mult)`, factors monic irreducible, distinct, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self, p: u32) -> FpPoly {
        self.factors
            .iter()
            .fold(FpPoly::constant(p, self.unit), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }

    pub fn multiplicity(&self, f: &FpPoly) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    /// `(111)^2`, `(11)*(111)`; a non-unit leading scalar is prefixed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.unit != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            first = false;
        }
        for (g, e) in &self.factors {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "({})", g.to_digits())?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Complete factorization of a nonzero polynomial.
pub fn factor(f: &FpPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(domain!("cannot factor the zero polynomial"));
    }
    let unit = f.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (sqf, mult) in squarefree(&f.monic()) {
        for (d, part) in distinct_degree(&sqf) {
            for g in equal_degree(&part, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    // squarefree parts are pairwise coprime, so no factor repeats
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and each g_i squarefree.
pub fn squarefree(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root();
        for (g, e) in squarefree(&root) {
            out.push((g, e * p));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree d, returned as (d, product).
pub fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.p();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(u64::from(p), &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest));
    }
    out
}

fn random_poly(p: u32, below: usize, rng: &mut ChaCha8Rng) -> FpPoly {
    let coeffs = (0..below).map(|_| rng.next_u32() % p).collect();
    FpPoly::from_raw(p, coeffs)
}

/// Splits a product of distinct monic irreducibles of degree d.
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.p();
    loop {
        let a = random_poly(p, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (prod_{i<d} a^(p^i))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(u64::from(p), f);
                norm = norm.mul_mod(&t, f);
            }
            norm.pow_mod(u64::from((p - 1) / 2), f).sub(&FpPoly::one(p))
        };
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}

/// Ben-Or irreducibility test, independent of [`factor`].
pub fn is_irreducible(f: &FpPoly) -> Result<bool> {
    if !f.is_monic() || f.deg() == 0 {
        return Err(domain!("irreducibility test needs a monic polynomial of degree >= 1, got {f}"));
    }
    let p = f.p();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    for _ in 0..f.deg() / 2 {
        h = h.pow_mod(u64::from(p), f);
        if !h.sub(&x).gcd(f).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    #[test]
    fn factors_spec_examples() {
        let f = factor(&poly(2, "10101")).unwrap();
        assert_eq!(f.factors, vec![(poly(2, "111"), 2)]);
        assert_eq!(f.to_string(), "(111)^2");
        assert_eq!(f.expand(2), poly(2, "10101"));

        let g = factor(&poly(2, "1001")).unwrap();
        assert_eq!(g.factors, vec![(poly(2, "11"), 1), (poly(2, "111"), 1)]);
        assert_eq!(g.expand(2), poly(2, "1001"));

        for p in [2, 3, 5] {
            let x = FpPoly::x(p);
            assert_eq!(factor(&x).unwrap().factors, vec![(x.clone(), 1)]);
        }
    }

    #[test]
    fn factor_keeps_unit_and_p_th_powers() {
        // 2(x+1)^3 over F_3: derivative vanishes, exercising the p-th root path
        let f = FpPoly::from_signed(3, &[2, 6, 6, 2]).unwrap();
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.factors, vec![(poly(3, "11"), 3)]);
        assert_eq!(fac.expand(3), f);
        assert!(factor(&FpPoly::zero(2)).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&poly(2, "111")).unwrap());
        assert!(!is_irreducible(&poly(2, "101")).unwrap());
        assert!(is_irreducible(&FpPoly::x(3)).unwrap());
        assert!(is_irreducible(&poly(3, "12")).is_err());
    }

    #[test]
    fn factor_is_deterministic() {
        let f = poly(5, "1234123410001");
        assert_eq!(factor(&f).unwrap(), factor(&f).unwrap());
    }
}
