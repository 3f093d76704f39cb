use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycField;

/// An exact element of Q(zeta_m), stored as an integer vector over the power
/// basis 1, z, ..., z^{phi(m)-1} with one positive common denominator, always
/// fully reduced modulo Phi_m and with the content made coprime to the
/// denominator. Equality is therefore coefficient-wise.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(field: &Arc<CycField>) -> Self {
        Self {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycField>, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(field);
        if let Some(first) = out.num.first_mut() {
            *first = c.into();
        }
        out
    }

    pub fn from_rational(field: &Arc<CycField>, q: &BigRational) -> Self {
        let mut out = Self::from_int(field, q.numer().clone());
        out.den = q.denom().clone();
        out.normalize();
        out
    }

    /// zeta_m^k.
    pub fn zeta_pow(field: &Arc<CycField>, k: u64) -> Self {
        Self {
            field: field.clone(),
            num: field.power_vector(k),
            den: BigInt::one(),
        }
    }

    /// Builds sum_i v[i] z^i / den from an unreduced vector of any length.
    pub fn from_power_vector(field: &Arc<CycField>, mut v: Vec<BigInt>, den: BigInt) -> Self {
        if v.len() > field.degree() {
            let m = field.order() as usize;
            if v.len() > m {
                // z^m = 1
                for i in m..v.len() {
                    let c = core::mem::take(&mut v[i]);
                    v[i % m] += c;
                }
                v.truncate(m);
            }
            field.reduce(&mut v);
        } else {
            v.resize(field.degree(), BigInt::zero());
        }
        let mut out = Self { field: field.clone(), num: v, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Power-basis coefficients as reduced rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.first().is_some_and(|c| c.is_one()) && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            let c = self.num.first().cloned().unwrap_or_default();
            Some(BigRational::new(c, self.den.clone()))
        } else {
            None
        }
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.order() == other.field.order(),
            "mixing Q(zeta_{}) with Q(zeta_{})",
            self.field.order(),
            other.field.order()
        );
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        let mut out = Self {
            field: self.field.clone(),
            num: self.num.iter().map(|a| a * c).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self {
            field: self.field.clone(),
            num: self.num.iter().map(|a| a * q.numer()).collect(),
            den: &self.den * q.denom(),
        };
        out.normalize();
        out
    }

    /// The Galois automorphism z -> z^j, for j coprime to m.
    pub fn galois(&self, j: u64) -> Self {
        let m = self.field.order();
        debug_assert_eq!(j.gcd(&m), 1);
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[((i as u64) * j % m) as usize] += c;
            }
        }
        Self::from_power_vector(&self.field, v, self.den.clone())
    }

    /// Multiplication by z^k.
    pub fn mul_zeta_pow(&self, k: u64) -> Self {
        let m = self.field.order();
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[((i as u64 + k) % m) as usize] += c;
            }
        }
        Self::from_power_vector(&self.field, v, self.den.clone())
    }

    /// Field norm down to Q: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        self.norm_and_cofactor().1
    }

    fn norm_and_cofactor(&self) -> (Self, BigRational) {
        let m = self.field.order();
        let mut cofactor = Self::one(&self.field);
        for j in 2..m.max(2) {
            if j.gcd(&m) == 1 {
                cofactor = &cofactor * &self.galois(j);
            }
        }
        let n = (&cofactor * self).to_rational().expect("norm is rational");
        (cofactor, n)
    }

    /// Multiplicative inverse via the norm; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(&self.field, &q.recip()));
        }
        let (cofactor, n) = self.norm_and_cofactor();
        Some(cofactor.scale(&n.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Human-readable form such as `3/2 - z + z^3`, with `z = zeta_m`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone());
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => String::from("z"),
                _ => alloc::format!("z^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&alloc::format!("{mag}"));
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&alloc::format!("{mag}*{mono}"));
            }
        }
        if first {
            s.push('0');
        }
        s
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[m={}]({})", self.field.order(), self.to_text())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.same_field(rhs);
        let mut out = if self.den == rhs.den {
            CycNum {
                field: self.field.clone(),
                num: self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect(),
                den: self.den.clone(),
            }
        } else {
            CycNum {
                field: self.field.clone(),
                num: self
                    .num
                    .iter()
                    .zip(&rhs.num)
                    .map(|(a, b)| a * &rhs.den + b * &self.den)
                    .collect(),
                den: &self.den * &rhs.den,
            }
        };
        out.normalize();
        out
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.same_field(rhs);
        let deg = self.field.degree();
        let mut v = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&mut v);
        let mut out = CycNum {
            field: self.field.clone(),
            num: v,
            den: &self.den * &rhs.den,
        };
        out.normalize();
        out
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $tra:ident, $ma:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tra<&'a CycNum> for CycNum {
            fn $ma(&mut self, rhs: &CycNum) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $tra<CycNum> for CycNum {
            fn $ma(&mut self, rhs: CycNum) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);
