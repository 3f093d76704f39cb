use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::{CycField, CycNum, CycPoly};
use crate::error::{domain, Result};

/// Product of two truncated series, keeping t^0..=t^order.
pub fn truncated_mul(a: &[CycNum], b: &[CycNum], order: usize, field: &Arc<CycField>) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(field); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Expansion of num/den at t = 0 through t^order.
pub fn expand(num: &CycPoly, den: &CycPoly, order: usize) -> Result<Vec<CycNum>> {
    let d0 = den.coeff(0);
    let inv = d0.inv().ok_or_else(|| domain!("denominator vanishes at t = 0"))?;
    let dc = den.coeffs();
    let mut out: Vec<CycNum> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.coeff(k);
        for (i, di) in dc.iter().enumerate().skip(1).take(k) {
            if !di.is_zero() && !out[k - i].is_zero() {
                acc -= di * &out[k - i];
            }
        }
        out.push(if inv.is_one() { acc } else { &acc * &inv });
    }
    Ok(out)
}

/// A rational function num/den with den(0) != 0 and its expansion through
/// t^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    num: CycPoly,
    den: CycPoly,
    order: usize,
    coeffs: Vec<CycNum>,
}

impl RatSeries {
    pub fn new(num: CycPoly, den: CycPoly, order: usize) -> Result<Self> {
        let coeffs = expand(&num, &den, order)?;
        Ok(Self { num, den, order, coeffs })
    }

    pub fn one(field: &Arc<CycField>, order: usize) -> Self {
        Self::new(CycPoly::one(field), CycPoly::one(field), order).expect("1/1")
    }

    pub fn numerator(&self) -> &CycPoly {
        &self.num
    }

    pub fn denominator(&self) -> &CycPoly {
        &self.den
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients of t^0..=t^order.
    pub fn coefficients(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.den.field()
    }

    pub fn with_order(&self, order: usize) -> Result<Self> {
        Self::new(self.num.clone(), self.den.clone(), order)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den), self.order.min(other.order))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut num = CycPoly::one(self.field());
        let mut den = CycPoly::one(self.field());
        for _ in 0..e {
            num = num.mul(&self.num);
            den = den.mul(&self.den);
        }
        Self::new(num, den, self.order)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// expansion * den == num through t^order.
    pub fn is_consistent(&self) -> bool {
        let prod = truncated_mul(&self.coeffs, self.den.coeffs(), self.order, self.field());
        (0..=self.order).all(|k| prod[k] == self.num.coeff(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &Arc<CycField>, v: &[i64]) -> CycPoly {
        CycPoly::new(f, v.iter().map(|&x| CycNum::from_int(f, x)).collect())
    }

    #[test]
    fn geometric_series() {
        let f = Arc::new(CycField::new(1).unwrap());
        let s = RatSeries::new(ints(&f, &[1]), ints(&f, &[1, -1]), 10).unwrap();
        assert!(s.coefficients().iter().all(CycNum::is_one));
        assert_eq!(s.coefficients().len(), 11);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coefficients()[4], CycNum::from_int(&f, 5));
        assert!(sq.is_consistent());
    }

    #[test]
    fn period_three_pattern() {
        let f = Arc::new(CycField::new(3).unwrap());
        let s = RatSeries::new(ints(&f, &[1]), ints(&f, &[1, 1, 1]), 8).unwrap();
        let want = [1, -1, 0, 1, -1, 0, 1, -1, 0];
        for (c, w) in s.coefficients().iter().zip(want) {
            assert_eq!(*c, CycNum::from_int(&f, w));
        }
    }

    #[test]
    fn unit_denominator_constant() {
        let f = Arc::new(CycField::new(4).unwrap());
        let i = CycNum::zeta_pow(&f, 1);
        let den = CycPoly::binomial(i.clone(), CycNum::from_int(&f, -1), 1);
        let s = RatSeries::new(CycPoly::one(&f), den, 6).unwrap();
        assert!(s.is_consistent());
        // 1/(i - t) = -i / (1 + i t) = -i * sum (-i t)^k
        assert_eq!(s.coefficients()[0], -&i);
        assert!(RatSeries::new(CycPoly::one(&f), ints(&f, &[0, 1]), 3).is_err());
    }
}
