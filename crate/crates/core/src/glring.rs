//! The graded algebra of p-regular class functions on the groups GL_n(F_p)
//! under induction, in the basis of semisimple class indicators pi_f.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::cyclo::{CycField, CycNum};
use crate::error::{config, domain, invariant, Result};
use crate::ffpoly::{enumerate_basis_polys_upto, factor, is_irreducible, ExtFieldCtx, FpPoly};

/// psi_k(q) = (q - 1)(q^2 - 1)...(q^k - 1).
pub fn psi(k: u32, q: &BigInt) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * (Pow::pow(q, i) - 1u32))
}

/// |GL_m(F_q)| = q^{m(m-1)/2} psi_m(q).
pub fn gl_order(m: u32, q: &BigInt) -> BigInt {
    Pow::pow(q, m * m.saturating_sub(1) / 2) * psi(m, q)
}

fn prime_power(p: u32, e: usize) -> BigInt {
    Pow::pow(BigInt::from(p), e)
}

fn check_basis(f: &FpPoly) -> Result<()> {
    if f.is_basis() {
        Ok(())
    } else {
        Err(domain!("{} is not monic with nonzero constant term", f.to_digits()))
    }
}

/// c_{f,g} with pi_f * pi_g = c_{f,g} pi_{fg}.
pub fn structure_constant(f: &FpPoly, g: &FpPoly) -> Result<BigInt> {
    check_basis(f)?;
    check_basis(g)?;
    if f.p() != g.p() {
        return Err(config!("structure constant across primes {} and {}", f.p(), g.p()));
    }
    if f.deg() == 0 || g.deg() == 0 {
        return Ok(BigInt::one());
    }
    let ff = factor(f)?;
    let fg = factor(g)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (h, a) in &ff.factors {
        let b = fg.multiplicity(h);
        if b == 0 {
            continue;
        }
        let q = prime_power(f.p(), h.deg());
        num *= Pow::pow(&q, a * b) * psi(a + b, &q);
        den *= psi(*a, &q) * psi(b, &q);
    }
    let (c, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(invariant!("structure constant {num}/{den} is not an integer"));
    }
    Ok(c)
}

/// (pi_f)^n = scalar * pi_{f^n} for irreducible f; returns (scalar, f^n).
pub fn generator_power(f: &FpPoly, n: u32) -> Result<(BigInt, FpPoly)> {
    check_basis(f)?;
    if f.deg() == 0 || !is_irreducible(f)? {
        return Err(domain!("{} is not irreducible", f.to_digits()));
    }
    if n == 0 {
        return Err(domain!("generator power must be positive"));
    }
    let q = prime_power(f.p(), f.deg());
    let num = Pow::pow(&q, n * (n - 1) / 2) * psi(n, &q);
    let den = Pow::pow(psi(1, &q), n);
    let (c, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(invariant!("generator power scalar {num}/{den} is not an integer"));
    }
    Ok((c, f.pow(n)))
}

/// pi_f written as scalar * prod (pi_h)^e over the factorization of f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMonomial {
    pub scalar: BigRational,
    pub factors: Vec<(FpPoly, u32)>,
}

impl GeneratorMonomial {
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if !self.scalar.is_one() || self.factors.is_empty() {
            parts.push(alloc::format!("{}", self.scalar));
        }
        for (h, e) in &self.factors {
            parts.push(if *e == 1 {
                alloc::format!("pi[{}]", h.to_digits())
            } else {
                alloc::format!("pi[{}]^{e}", h.to_digits())
            });
        }
        parts.join("*")
    }
}

pub fn decompose_into_generators(f: &FpPoly) -> Result<GeneratorMonomial> {
    check_basis(f)?;
    if f.deg() == 0 {
        return Ok(GeneratorMonomial { scalar: BigRational::one(), factors: Vec::new() });
    }
    let fac = factor(f)?;
    let mut prod = BigInt::one();
    for (h, e) in &fac.factors {
        prod *= generator_power(h, *e)?.0;
    }
    Ok(GeneratorMonomial { scalar: BigRational::new(BigInt::one(), prod), factors: fac.factors })
}

/// Steinberg character value (-1)^N p^D on the semisimple class f.
pub fn steinberg_value(f: &FpPoly) -> Result<BigInt> {
    check_basis(f)?;
    if f.deg() == 0 {
        return Ok(BigInt::one());
    }
    let fac = factor(f)?;
    let parts: usize = fac.factors.iter().map(|(_, e)| *e as usize).sum();
    let sign_exp = f.deg() - parts;
    let d: usize = fac
        .factors
        .iter()
        .map(|(h, e)| h.deg() * (*e as usize) * (*e as usize - 1) / 2)
        .sum();
    let v = prime_power(f.p(), d);
    Ok(if sign_exp.is_multiple_of(2) { v } else { -v })
}

/// Order of the centralizer of a semisimple element with characteristic
/// polynomial f: the product of |GL_e(F_{p^d})| over factors h^e, deg h = d.
pub fn centralizer_order_formula(f: &FpPoly) -> Result<BigInt> {
    check_basis(f)?;
    if f.deg() == 0 {
        return Ok(BigInt::one());
    }
    Ok(factor(f)?
        .factors
        .iter()
        .map(|(h, e)| gl_order(*e, &prime_power(f.p(), h.deg())))
        .product())
}

/// Multiplicity of (x - 1) in f.
pub fn unipotent_multiplicity(f: &FpPoly) -> u32 {
    f.root_multiplicity(1)
}

/// A finite combination of basis symbols pi_f with coefficients in Q(zeta_m).
#[derive(Clone, PartialEq, Eq)]
pub struct RingElt {
    p: u32,
    field: Arc<CycField>,
    terms: BTreeMap<FpPoly, CycNum>,
}

impl RingElt {
    pub fn zero(ctx: &ExtFieldCtx) -> Self {
        Self::zero_in(ctx.p(), ctx.cyclo())
    }

    pub fn zero_in(p: u32, field: &Arc<CycField>) -> Self {
        Self { p, field: field.clone(), terms: BTreeMap::new() }
    }

    /// pi_1, the unit.
    pub fn one(ctx: &ExtFieldCtx) -> Self {
        Self::basis(ctx, &FpPoly::one(ctx.p())).expect("1 is a basis polynomial")
    }

    /// The basis element pi_f.
    pub fn basis(ctx: &ExtFieldCtx, f: &FpPoly) -> Result<Self> {
        Self::term_in(ctx.p(), ctx.cyclo(), f, CycNum::one(ctx.cyclo()))
    }

    pub fn term(ctx: &ExtFieldCtx, f: &FpPoly, c: CycNum) -> Result<Self> {
        Self::term_in(ctx.p(), ctx.cyclo(), f, c)
    }

    pub fn term_in(p: u32, field: &Arc<CycField>, f: &FpPoly, c: CycNum) -> Result<Self> {
        check_basis(f)?;
        if f.p() != p {
            return Err(config!("basis polynomial over F_{} in a ring over F_{p}", f.p()));
        }
        if c.order() != field.order() {
            return Err(config!("coefficient in Q(z_{}) for a ring over Q(z_{})", c.order(), field.order()));
        }
        let mut out = Self::zero_in(p, field);
        out.add_term(f.clone(), c);
        Ok(out)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<FpPoly, CycNum> {
        &self.terms
    }

    pub fn coeff(&self, f: &FpPoly) -> CycNum {
        self.terms.get(f).cloned().unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, if the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(FpPoly::deg);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    fn add_term(&mut self, f: FpPoly, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&f) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&f);
                }
            }
            None => {
                self.terms.insert(f, c);
            }
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.field.order() != other.field.order() {
            return Err(config!(
                "ring elements over (p={}, m={}) and (p={}, m={})",
                self.p,
                self.field.order(),
                other.p,
                other.field.order()
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        self.map_coeffs(|_, v| v * c)
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.map_coeffs(|_, v| v.scale(q))
    }

    fn map_coeffs(&self, g: impl Fn(&FpPoly, &CycNum) -> CycNum) -> Self {
        let mut out = Self::zero_in(self.p, &self.field);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), g(f, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero_in(self.p, &self.field);
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                let c = structure_constant(f, g)?;
                out.add_term(f.mul(g), (a * b).scale_int(&c));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::term_in(self.p, &self.field, &FpPoly::one(self.p), CycNum::one(&self.field))?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Expands scalar * prod pi_h^e back into the pi basis by repeated
    /// multiplication.
    pub fn expand(ctx: &ExtFieldCtx, mono: &GeneratorMonomial) -> Result<Self> {
        let mut acc = Self::one(ctx);
        for (h, e) in &mono.factors {
            acc = acc.mul(&Self::basis(ctx, h)?.pow(*e)?)?;
        }
        Ok(acc.scale_rational(&mono.scalar))
    }

    /// T acts on pi_f by p^nu with nu the multiplicity of (x - 1) in f.
    pub fn t_apply(&self) -> Self {
        self.map_coeffs(|f, c| c.scale_int(&prime_power(self.p, unipotent_multiplicity(f) as usize)))
    }

    pub fn comultiply(&self) -> TensorElt {
        let mut out = TensorElt::zero_in(self.p, &self.field);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), f.clone(), c.clone());
        }
        out
    }

    /// Text form, highest canonical basis polynomial first.
    pub fn to_text(&self) -> String {
        render_terms(self.terms.iter().rev().map(|(f, c)| (alloc::format!("pi[{}]", f.to_digits()), c)))
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a CycNum)>) -> String {
    let mut out = String::new();
    for (sym, c) in terms {
        let (neg, body) = match c.to_rational() {
            Some(q) if q.is_negative() => (true, coeff_prefix(&-q)),
            Some(q) => (false, coeff_prefix(&q)),
            None => (false, alloc::format!("({})*", c.to_text())),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
        out.push_str(&sym);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coeff_prefix(q: &BigRational) -> String {
    if q.is_one() {
        String::new()
    } else {
        alloc::format!("{q}*")
    }
}

impl fmt::Debug for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElt[p={}, m={}]({})", self.p, self.field.order(), self.to_text())
    }
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A finite combination of symbols pi_f (x) pi_g.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElt {
    p: u32,
    field: Arc<CycField>,
    terms: BTreeMap<(FpPoly, FpPoly), CycNum>,
}

impl TensorElt {
    pub fn zero_in(p: u32, field: &Arc<CycField>) -> Self {
        Self { p, field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<(FpPoly, FpPoly), CycNum> {
        &self.terms
    }

    pub fn coeff(&self, f: &FpPoly, g: &FpPoly) -> CycNum {
        self.terms
            .get(&(f.clone(), g.clone()))
            .cloned()
            .unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: FpPoly, g: FpPoly, c: CycNum) {
        if c.is_zero() {
            return;
        }
        let key = (f, g);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.p != other.p || self.field.order() != other.field.order() {
            return Err(config!("tensor elements over different rings"));
        }
        let mut out = Self::zero_in(self.p, &self.field);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let k = structure_constant(a, c)? * structure_constant(b, d)?;
                out.add_term(a.mul(c), b.mul(d), (x * y).scale_int(&k));
            }
        }
        Ok(out)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = Self::zero_in(self.p, &self.field);
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x.scale_int(k));
        }
        out
    }

    pub fn to_text(&self) -> String {
        render_terms(
            self.terms
                .iter()
                .rev()
                .map(|((a, b), c)| (alloc::format!("pi[{}]@pi[{}]", a.to_digits(), b.to_digits()), c)),
        )
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElt({})", self.to_text())
    }
}

/// Dimension of the p^i eigenspace of T, for i = 0..=n, on the filtered
/// space spanned by pi_f with deg f <= n.
pub fn t_eigenspace_dimensions(p: u32, n: usize) -> Result<Vec<(BigInt, u64)>> {
    let mut dims = alloc::vec![0u64; n + 1];
    for f in enumerate_basis_polys_upto(p, n)? {
        dims[unipotent_multiplicity(&f) as usize] += 1;
    }
    Ok(dims.into_iter().enumerate().map(|(i, d)| (prime_power(p, i), d)).collect())
}

/// Same count restricted to the degree-n graded piece.
pub fn t_eigenspace_dimensions_graded(p: u32, n: usize) -> Result<Vec<(BigInt, u64)>> {
    let mut dims = alloc::vec![0u64; n + 1];
    for f in crate::ffpoly::enumerate_basis_polys(p, n, true)? {
        dims[unipotent_multiplicity(&f) as usize] += 1;
    }
    Ok(dims.into_iter().enumerate().map(|(i, d)| (prime_power(p, i), d)).collect())
}

/// Closed form for the filtered dimensions: p^{n-i} - p^{n-i-1} for i < n
/// and 1 for i = n.
pub fn t_eigenspace_formula(p: u32, n: usize) -> Vec<(BigInt, u64)> {
    (0..=n)
        .map(|i| {
            let d = if i == n {
                1
            } else {
                u64::from(p).pow((n - i) as u32) - u64::from(p).pow((n - i - 1) as u32)
            };
            (prime_power(p, i), d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{enumerate_basis_polys, enumerate_irreducibles};
    use alloc::vec;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(2, &big(2)), big(3));
        assert_eq!(psi(0, &big(7)), big(1));
        assert_eq!(psi(2, &big(4)), big(45));
        assert_eq!(gl_order(2, &big(2)), big(6));
        assert_eq!(gl_order(3, &big(2)), big(168));
        assert_eq!(gl_order(2, &big(4)), big(180));
        assert_eq!(gl_order(4, &big(2)), big(20160));
        assert_eq!(gl_order(3, &big(3)), big(11232));
    }

    #[test]
    fn structure_constant_examples() {
        assert_eq!(structure_constant(&poly(2, "11"), &poly(2, "11")).unwrap(), big(6));
        assert_eq!(structure_constant(&poly(2, "11"), &poly(2, "111")).unwrap(), big(1));
        assert_eq!(structure_constant(&poly(2, "101"), &poly(2, "11")).unwrap(), big(28));
        assert!(structure_constant(&poly(2, "01"), &poly(2, "11")).is_err());
    }

    /// Levi induction of class indicators gives |Z(fg)| / (|Z(f)| |Z(g)|).
    #[test]
    fn structure_constant_is_centralizer_ratio() {
        for p in [2u32, 3] {
            let basis = enumerate_basis_polys_upto(p, 4).unwrap();
            for f in &basis {
                for g in &basis {
                    if f.deg() + g.deg() > 4 {
                        continue;
                    }
                    let c = structure_constant(f, g).unwrap();
                    let lhs = centralizer_order_formula(&f.mul(g)).unwrap();
                    let rhs = centralizer_order_formula(f).unwrap() * centralizer_order_formula(g).unwrap();
                    assert_eq!(c * rhs, lhs, "{f} {g}");
                }
            }
        }
    }

    #[test]
    fn generator_power_examples() {
        assert_eq!(generator_power(&poly(2, "11"), 2).unwrap(), (big(6), poly(2, "101")));
        assert_eq!(generator_power(&poly(2, "111"), 1).unwrap().0, big(1));
        assert_eq!(generator_power(&poly(2, "111"), 2).unwrap().0, big(20));
        assert!(generator_power(&poly(2, "101"), 2).is_err());
    }

    #[test]
    fn generator_power_matches_iterated_mul() {
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        for f in [poly(2, "11"), poly(2, "111"), poly(2, "1101")] {
            let pi = RingElt::basis(&ctx, &f).unwrap();
            for n in 1..=4 {
                let (s, fnn) = generator_power(&f, n).unwrap();
                let expect = RingElt::term(&ctx, &fnn, CycNum::from_int(ctx.cyclo(), s)).unwrap();
                assert_eq!(pi.pow(n).unwrap(), expect);
            }
        }
    }

    #[test]
    fn mul_examples() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        let a = RingElt::basis(&ctx, &poly(2, "11")).unwrap();
        let b = RingElt::basis(&ctx, &poly(2, "111")).unwrap();
        assert_eq!(a.mul(&b).unwrap(), RingElt::basis(&ctx, &poly(2, "1001")).unwrap());
        assert_eq!(RingElt::one(&ctx).mul(&b).unwrap(), b);
        assert_eq!(a.mul(&a).unwrap().to_text(), "6*pi[101]");
        let other = ExtFieldCtx::new(2, 3).unwrap();
        let c = RingElt::basis(&other, &poly(2, "11")).unwrap();
        assert!(matches!(a.mul(&c), Err(crate::Error::Config(_))));
    }

    #[test]
    fn text_form() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        let a = RingElt::basis(&ctx, &poly(2, "11")).unwrap();
        let x = a.mul(&a).unwrap().add(&a).unwrap();
        assert_eq!(x.to_text(), "6*pi[101] + pi[11]");
        let y = a.scale_rational(&BigRational::new(big(-1), big(6)));
        assert_eq!(y.to_text(), "-1/6*pi[11]");
        assert_eq!(RingElt::zero(&ctx).to_text(), "0");
    }

    #[test]
    fn decompose_examples_and_round_trip() {
        let d = decompose_into_generators(&poly(2, "111")).unwrap();
        assert_eq!(d.scalar, BigRational::one());
        assert_eq!(d.factors, vec![(poly(2, "111"), 1)]);
        let d = decompose_into_generators(&poly(2, "101")).unwrap();
        assert_eq!(d.scalar, BigRational::new(big(1), big(6)));
        assert_eq!(d.to_text(), "1/6*pi[11]^2");
        let d = decompose_into_generators(&poly(2, "1001")).unwrap();
        assert_eq!(d.scalar, BigRational::one());
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        for f in enumerate_basis_polys_upto(2, 6).unwrap() {
            let mono = decompose_into_generators(&f).unwrap();
            assert_eq!(RingElt::expand(&ctx, &mono).unwrap(), RingElt::basis(&ctx, &f).unwrap(), "{f}");
        }
        let ctx3 = ExtFieldCtx::new(3, 1).unwrap();
        for f in enumerate_basis_polys_upto(3, 4).unwrap() {
            let mono = decompose_into_generators(&f).unwrap();
            assert_eq!(RingElt::expand(&ctx3, &mono).unwrap(), RingElt::basis(&ctx3, &f).unwrap());
        }
    }

    #[test]
    fn mul_is_commutative_and_associative_exhaustive() {
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        let basis = enumerate_basis_polys_upto(2, 4).unwrap();
        let pi = |f: &FpPoly| RingElt::basis(&ctx, f).unwrap();
        for f in &basis {
            for g in &basis {
                if f.deg() + g.deg() > 4 {
                    continue;
                }
                assert_eq!(pi(f).mul(&pi(g)).unwrap(), pi(g).mul(&pi(f)).unwrap());
                for h in &basis {
                    if f.deg() + g.deg() + h.deg() > 4 {
                        continue;
                    }
                    let l = pi(f).mul(&pi(g)).unwrap().mul(&pi(h)).unwrap();
                    let r = pi(f).mul(&pi(g).mul(&pi(h)).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_integral() {
        for p in [2u32, 3] {
            let basis = enumerate_basis_polys_upto(p, 4).unwrap();
            for f in &basis {
                for g in &basis {
                    if f.deg() + g.deg() <= 4 {
                        assert!(structure_constant(f, g).unwrap() >= BigInt::one());
                    }
                }
            }
        }
    }

    #[test]
    fn steinberg_examples() {
        assert_eq!(steinberg_value(&poly(2, "101")).unwrap(), big(2));
        assert_eq!(steinberg_value(&poly(2, "1111")).unwrap(), big(8));
        assert_eq!(steinberg_value(&poly(3, "2001")).unwrap(), big(27));
        assert_eq!(steinberg_value(&poly(2, "111")).unwrap(), big(-1));
        assert_eq!(steinberg_value(&poly(2, "1001")).unwrap(), big(-1));
        assert_eq!(steinberg_value(&poly(2, "1")).unwrap(), big(1));
    }

    #[test]
    fn t_apply_examples() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        let pi = |s| RingElt::basis(&ctx, &poly(2, s)).unwrap();
        assert_eq!(pi("11").t_apply(), pi("11").scale_rational(&BigRational::from(big(2))));
        assert_eq!(pi("111").t_apply(), pi("111"));
        let f = poly(2, "101").mul(&poly(2, "111"));
        let x = RingElt::basis(&ctx, &f).unwrap();
        assert_eq!(x.t_apply(), x.scale_rational(&BigRational::from(big(4))));
    }

    #[test]
    fn t_apply_is_a_ring_map() {
        for p in [2u32, 3] {
            let ctx = ExtFieldCtx::new(p, 1).unwrap();
            let basis = enumerate_basis_polys_upto(p, 3).unwrap();
            for f in &basis {
                for g in &basis {
                    if f.deg() + g.deg() > 4 {
                        continue;
                    }
                    let a = RingElt::basis(&ctx, f).unwrap();
                    let b = RingElt::basis(&ctx, g).unwrap();
                    assert_eq!(a.mul(&b).unwrap().t_apply(), a.t_apply().mul(&b.t_apply()).unwrap());
                }
            }
        }
    }

    #[test]
    fn t_eigenspace_examples() {
        let dims = |p, n| -> Vec<u64> { t_eigenspace_dimensions(p, n).unwrap().into_iter().map(|x| x.1).collect() };
        assert_eq!(dims(2, 3), vec![4, 2, 1, 1]);
        assert_eq!(dims(2, 1), vec![1, 1]);
        assert_eq!(dims(7, 0), vec![1]);
        for p in [2u32, 3, 5] {
            for n in 0..=5 {
                let got = t_eigenspace_dimensions(p, n).unwrap();
                assert_eq!(got, t_eigenspace_formula(p, n));
                assert_eq!(got.iter().map(|x| x.1).sum::<u64>(), u64::from(p).pow(n as u32));
            }
        }
        // graded degree 2 over F_2: x^2+x+1 and (x+1)^2
        let g: Vec<u64> = t_eigenspace_dimensions_graded(2, 2).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(g, vec![1, 0, 1]);
    }

    #[test]
    fn comultiply_examples() {
        let ctx = ExtFieldCtx::new(2, 2).unwrap();
        let a = RingElt::basis(&ctx, &poly(2, "11")).unwrap();
        let b = RingElt::basis(&ctx, &poly(2, "111")).unwrap();
        let d = a.comultiply();
        assert_eq!(d.terms().len(), 1);
        assert!(d.coeff(&poly(2, "11"), &poly(2, "11")).is_one());
        assert!(RingElt::zero(&ctx).comultiply().is_zero());
        let s = a.add(&b).unwrap().comultiply();
        assert_eq!(s.terms().len(), 2);
        assert!(s.coeff(&poly(2, "11"), &poly(2, "111")).is_zero());
    }

    #[test]
    fn comultiply_multiplicative_up_to_structure_constant() {
        let ctx = ExtFieldCtx::new(2, 1).unwrap();
        let basis = enumerate_basis_polys_upto(2, 2).unwrap();
        for f in &basis {
            for g in &basis {
                let a = RingElt::basis(&ctx, f).unwrap();
                let b = RingElt::basis(&ctx, g).unwrap();
                let c = structure_constant(f, g).unwrap();
                let lhs = a.mul(&b).unwrap().comultiply().scale_int(&c);
                let rhs = a.comultiply().mul(&b.comultiply()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn centralizer_formula_examples() {
        assert_eq!(centralizer_order_formula(&poly(2, "101")).unwrap(), big(6));
        assert_eq!(centralizer_order_formula(&poly(2, "111")).unwrap(), big(3));
        let f = poly(2, "111").pow(2);
        assert_eq!(centralizer_order_formula(&f).unwrap(), big(180));
        for f in enumerate_irreducibles(2, 4).unwrap() {
            assert_eq!(centralizer_order_formula(&f).unwrap(), big(15));
        }
        assert_eq!(enumerate_basis_polys(2, 0, true).unwrap().len(), 1);
    }
}
