use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Coefficients of the m-th cyclotomic polynomial, ascending.
///
/// Built as prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply out the binomials
/// with mu = +1, then divide exactly by those with mu = -1. Each division
/// by a binomial is a linear pass, so the cost stays near sigma(m).
pub fn cyclotomic_polynomial(m: u64) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(domain!("cyclotomic polynomial of order 0"));
    }
    let divisors: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for &d in &divisors {
        match moebius(m / d) {
            1 => up.push(d as usize),
            -1 => down.push(d as usize),
            _ => {}
        }
    }
    let mut acc: Vec<i128> = vec![1];
    for d in up {
        // acc * (x^d - 1)
        let mut next = vec![0i128; acc.len() + d];
        for (i, &c) in acc.iter().enumerate() {
            next[i + d] += c;
            next[i] -= c;
        }
        acc = next;
    }
    for d in down {
        // acc / (x^d - 1): q_i = q_{i-d} - a_i read from the bottom
        let qlen = acc.len() - d;
        let mut q = vec![0i128; qlen];
        for i in 0..qlen {
            let prev = if i >= d { q[i - d] } else { 0 };
            q[i] = prev - acc[i];
        }
        acc = q;
    }
    Ok(acc.into_iter().map(BigInt::from).collect())
}

pub(crate) fn moebius(n: u64) -> i32 {
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
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    let mut n = m;
    let mut out = m;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            out -= out / q;
        }
        q += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// The field Q(zeta_m) = Q[z]/(Phi_m).
#[derive(Debug, Clone)]
pub struct CycField {
    m: u64,
    modulus: Vec<BigInt>,
    // nonzero non-leading coefficients of Phi_m, for reduction
    tail: Vec<(usize, BigInt)>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for CycField {}

impl CycField {
    pub fn new(m: u64) -> Result<Self> {
        let modulus = cyclotomic_polynomial(m)?;
        let deg = modulus.len() - 1;
        let tail = modulus[..deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        Ok(Self { m, modulus, tail })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    /// phi(m), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduces an integer coefficient vector (ascending powers of z) modulo
    /// Phi_m in place, truncating it to length phi(m).
    pub(crate) fn reduce(&self, v: &mut Vec<BigInt>) {
        let deg = self.degree();
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut v[i]);
            let shift = i - deg;
            for (j, a) in &self.tail {
                v[shift + j] -= &c * a;
            }
        }
        v.resize(deg, BigInt::zero());
    }

    /// z^k reduced, as an integer vector of length phi(m).
    pub(crate) fn power_vector(&self, k: u64) -> Vec<BigInt> {
        let k = (k % self.m) as usize;
        let deg = self.degree();
        if k < deg {
            let mut v = vec![BigInt::zero(); deg];
            v[k] = BigInt::one();
            return v;
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        self.reduce(&mut v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Recursive definition: x^m - 1 divided by Phi_d for every proper divisor d.
    fn phi_by_division(m: u64, memo: &mut alloc::collections::BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(v) = memo.get(&m) {
            return v.clone();
        }
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let den = phi_by_division(d, memo);
            // exact division by a monic integer polynomial
            let dd = den.len() - 1;
            let mut q = vec![BigInt::zero(); num.len() - dd];
            for i in (dd..num.len()).rev() {
                let c = num[i].clone();
                q[i - dd] = c.clone();
                for (j, a) in den.iter().enumerate() {
                    num[i - dd + j] -= &c * a;
                }
            }
            assert!(num.iter().all(|c| c.is_zero()));
            num = q;
        }
        memo.insert(m, num.clone());
        num
    }

    #[test]
    fn spec_examples() {
        assert_eq!(cyclotomic_polynomial(3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(15).unwrap(), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn matches_recursive_division() {
        let mut memo = alloc::collections::BTreeMap::new();
        for m in 1..=120 {
            let phi = cyclotomic_polynomial(m).unwrap();
            assert_eq!(phi, phi_by_division(m, &mut memo), "m={m}");
            assert_eq!(phi.len() as u64 - 1, totient(m));
        }
        // first order with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).unwrap().contains(&BigInt::from(-2)));
    }
}
