use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use super::{CycField, CycNum};

/// A polynomial in `t` with coefficients in Q(zeta_m), ascending, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CycPoly {
    field: Arc<CycField>,
    coeffs: Vec<CycNum>,
}

impl CycPoly {
    pub fn new(field: &Arc<CycField>, mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<CycField>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(c: CycNum) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::constant(CycNum::one(field))
    }

    /// `a + b t^k`.
    pub fn binomial(a: CycNum, b: CycNum, k: usize) -> Self {
        let field = a.field().clone();
        let mut coeffs = vec![CycNum::zero(&field); k + 1];
        coeffs[0] = a;
        coeffs[k] = &coeffs[k] + &b;
        Self::new(&field, coeffs)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> CycNum {
        self.coeffs.get(i).cloned().unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![CycNum::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(&self.field, out)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    /// Applies z -> z^j to every coefficient.
    pub fn galois(&self, j: u64) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a.galois(j)).collect())
    }

    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => String::from("t"),
                _ => alloc::format!("t^{i}"),
            };
            let body = c.to_text();
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => alloc::format!("({body})"),
                (false, true) => mono,
                (false, false) => alloc::format!("({body})*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycPoly[m={}]({})", self.field.order(), self.to_text())
    }
}
