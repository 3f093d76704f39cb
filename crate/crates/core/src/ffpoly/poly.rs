use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{domain, Result};

/// Largest prime accepted for the base field.
pub const MAX_PRIME: u32 = 97;

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Rejects anything that is not a prime in `2..=MAX_PRIME`.
pub fn check_prime(p: u32) -> Result<()> {
    if p > MAX_PRIME {
        return Err(domain!("p = {p} exceeds the configured limit {MAX_PRIME}"));
    }
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    Ok(())
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let m = u64::from(p);
    let mut b = u64::from(base % p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

/// A polynomial over the prime field F_p, coefficients stored in ascending
/// degree with no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    /// Builds a polynomial from ascending coefficients, reducing each mod p.
    pub fn new(p: u32, coeffs: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::from_raw(p, coeffs))
    }

    /// Same as [`FpPoly::new`] but accepts signed coefficients.
    pub fn from_signed(p: u32, coeffs: &[i64]) -> Result<Self> {
        check_prime(p)?;
        let m = i64::from(p);
        Ok(Self::from_raw(
            p,
            coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect(),
        ))
    }

    pub(crate) fn from_raw(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self { p, coeffs: vec![1] }
    }

    pub fn constant(p: u32, c: u32) -> Self {
        Self::from_raw(p, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(p: u32) -> Self {
        Self { p, coeffs: vec![0, 1] }
    }

    /// `x - a`.
    pub fn linear(p: u32, a: u32) -> Self {
        Self::from_raw(p, vec![(p - a % p) % p, 1])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    /// Monic with nonzero constant term: the polynomials that index
    /// semisimple classes and hence basis elements of the ring.
    pub fn is_basis(&self) -> bool {
        self.is_monic() && self.constant_term() != 0
    }

    pub fn eval(&self, a: u32) -> u32 {
        let m = u64::from(self.p);
        let a = u64::from(a % self.p);
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * a + u64::from(c)) % m) as u32
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u32) -> Self {
        let m = u64::from(self.p);
        Self::from_raw(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| (u64::from(a) * u64::from(c) % m) as u32)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let m = u64::from(self.p);
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + u64::from(a) * u64::from(b)) % m;
            }
        }
        Self::from_raw(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let m = u64::from(p);
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv_lead = u64::from(inv_mod(divisor.leading(), p));
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| u64::from(c)).collect();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * inv_lead % m;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = (rem[k] + m * m - c * u64::from(b)) % m;
            }
        }
        rem.truncate(dd);
        (
            Self::from_raw(p, quot.into_iter().map(|c| c as u32).collect()),
            Self::from_raw(p, rem.into_iter().map(|c| c as u32).collect()),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let m = u64::from(self.p);
        Self::from_raw(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % m * u64::from(c) % m) as u32)
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            e >>= 1;
        }
        acc
    }

    /// The p-th root of a polynomial whose only nonzero coefficients sit at
    /// multiples of p (coefficients are fixed by Frobenius in F_p).
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::from_raw(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// `x^n f(1/x) / f(0)`: the characteristic polynomial of `g^{-1}` when
    /// `f` is that of `g`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.constant_term() == 0 {
            return Err(domain!("reciprocal of {self} needs a nonzero constant term"));
        }
        let rev: Vec<u32> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::from_raw(self.p, rev).monic())
    }

    /// Multiplicity of `x - a` as a factor.
    pub fn root_multiplicity(&self, a: u32) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear(self.p, a);
        let mut f = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = f.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            f = q;
            k += 1;
        }
    }

    /// Ascending coefficient digits, e.g. `x^4 + x + 1` over F_2 is `"11001"`.
    /// For p > 10 the digits are written in decimal and separated by `.`.
    pub fn to_digits(&self) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.p > 10 && i > 0 {
                s.push('.');
            }
            s.push_str(&alloc::format!("{c}"));
        }
        s
    }

    /// Parses the digit-string form written by [`FpPoly::to_digits`].
    pub fn from_digits(p: u32, s: &str) -> Result<Self> {
        check_prime(p)?;
        let s = s.trim();
        if s.is_empty() {
            return Err(domain!("empty polynomial string"));
        }
        let parse = |t: &str| -> Result<u32> {
            let v: u32 = t
                .parse()
                .map_err(|_| domain!("bad digit {t:?} in polynomial {s:?}"))?;
            if v >= p {
                return Err(domain!("digit {v} out of range for p = {p}"));
            }
            Ok(v)
        };
        let coeffs = if p > 10 {
            s.split('.').map(parse).collect::<Result<Vec<_>>>()?
        } else {
            let mut out = Vec::with_capacity(s.len());
            for ch in s.chars() {
                let mut buf = [0u8; 4];
                out.push(parse(ch.encode_utf8(&mut buf))?);
            }
            out
        };
        Ok(Self::from_raw(p, coeffs))
    }

    /// Parses human input such as `x^4+x+1`, `2x^2 - 1` or `3*x^3+x`.
    pub fn from_human(p: u32, s: &str) -> Result<Self> {
        check_prime(p)?;
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(domain!("empty polynomial string"));
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut rest = src.as_str();
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            }
            let end = rest[1.min(rest.len())..]
                .find(['+', '-'])
                .map_or(rest.len(), |i| i + 1);
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef, power) = parse_term(term).ok_or_else(|| domain!("cannot parse term {term:?} in {s:?}"))?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] += sign * coef;
        }
        Self::from_signed(p, &coeffs)
    }

    /// Accepts either the digit string or the human form.
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        if s.contains('x') {
            Self::from_human(p, s)
        } else {
            Self::from_digits(p, s)
        }
    }
}

fn parse_term(term: &str) -> Option<(i64, usize)> {
    match term.find('x') {
        None => Some((term.parse().ok()?, 0)),
        Some(i) => {
            let head = term[..i].trim_end_matches('*');
            let coef = if head.is_empty() { 1 } else { head.parse().ok()? };
            let tail = &term[i + 1..];
            let power = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')?.parse().ok()?
            };
            Some((coef, power))
        }
    }
}

impl Ord for FpPoly {
    /// Degree first, then coefficients from the top degree down: for monic
    /// polynomials this is the order of the ascending digit string read as a
    /// base-p numeral with the highest degree most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}]({})", self.p, self.to_digits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    #[test]
    fn digit_strings_round_trip() {
        let f = poly(2, "11001");
        assert_eq!(f.deg(), 4);
        assert_eq!(f.to_digits(), "11001");
        assert_eq!(FpPoly::from_human(2, "x^4+x+1").unwrap(), f);
        let g = FpPoly::from_digits(13, "1.0.12").unwrap();
        assert_eq!(g.coeffs(), &[1, 0, 12]);
        assert_eq!(g.to_digits(), "1.0.12");
    }

    #[test]
    fn human_form_handles_signs_and_coefficients() {
        let f = FpPoly::from_human(5, "2x^2 - 1").unwrap();
        assert_eq!(f.coeffs(), &[4, 0, 2]);
        let g = FpPoly::from_human(3, "x^3+2*x+x").unwrap();
        assert_eq!(g.coeffs(), &[0, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FpPoly::from_digits(2, "102").is_err());
        assert!(FpPoly::new(4, vec![1]).is_err());
        assert!(FpPoly::new(101, vec![1]).is_err());
        assert!(FpPoly::from_human(2, "x^^2").is_err());
    }

    #[test]
    fn canonical_order() {
        // x^4+x+1 precedes x^4+x^3+1
        assert!(poly(2, "11001") < poly(2, "10011"));
        assert!(poly(2, "111") < poly(2, "1001"));
        assert!(poly(3, "21") < poly(3, "12"));
    }

    #[test]
    fn division_and_gcd() {
        let a = poly(2, "11").mul(&poly(2, "111"));
        assert_eq!(a, poly(2, "1001"));
        let (q, r) = a.div_rem(&poly(2, "11"));
        assert_eq!(q, poly(2, "111"));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&poly(2, "101")), poly(2, "11"));
    }

    #[test]
    fn reciprocal_polynomial() {
        // x^3 + x + 1 <-> x^3 + x^2 + 1
        assert_eq!(poly(2, "1101").reciprocal().unwrap(), poly(2, "1011"));
        // 2 + x over F_3 (root 1 -> 1, i.e. x-1 = x+2) stays x+2
        assert_eq!(poly(3, "21").reciprocal().unwrap(), poly(3, "21"));
        assert!(poly(2, "01").reciprocal().is_err());
    }

    #[test]
    fn root_multiplicity_counts_repeated_factors() {
        let f = poly(2, "11").pow(3).mul(&poly(2, "111"));
        assert_eq!(f.root_multiplicity(1), 3);
        assert_eq!(poly(2, "111").root_multiplicity(1), 0);
    }
}
