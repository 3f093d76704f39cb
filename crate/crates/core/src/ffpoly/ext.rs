use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{canonical_primitive, factor, is_irreducible, FpPoly};
use crate::cyclo::CycField;
use crate::error::{config, domain, Result};

/// Largest extension field F_{p^N} the context will tabulate.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// The ambient field F_{p^N} = F_p[x]/(g) with g primitive, together with
/// the cyclotomic field Q(zeta_m), m = p^N - 1, that receives Brauer lifts.
///
/// Elements of F_{p^N} are packed as integers `sum c_i p^i` over their
/// coordinates in the power basis of the root `alpha` of g. The lift
/// `theta(alpha^k) = zeta_m^k` is fixed by this choice of g.
#[derive(Clone)]
pub struct ExtFieldCtx {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    n: u32,
    modulus: FpPoly,
    order: u64,
    antilog: Vec<u32>,
    log: Vec<u32>,
    cyclo: Arc<CycField>,
}

impl core::fmt::Debug for ExtFieldCtx {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ExtFieldCtx")
            .field("p", &self.inner.p)
            .field("n", &self.inner.n)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for ExtFieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.n == other.inner.n
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for ExtFieldCtx {}

impl ExtFieldCtx {
    /// Context over the canonical primitive polynomial of degree `n`.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::check_size(p, n)?;
        let g = canonical_primitive(p, n)?;
        Self::build(g)
    }

    /// Context over a caller-supplied modulus, which must be primitive.
    pub fn with_modulus(g: FpPoly) -> Result<Self> {
        let n = g.deg() as u32;
        Self::check_size(g.p(), n)?;
        if !g.is_basis() || n == 0 || !is_irreducible(&g)? || !super::is_primitive(&g) {
            return Err(config!("{} is not a primitive polynomial over F_{}", g.to_digits(), g.p()));
        }
        Self::build(g)
    }

    fn check_size(p: u32, n: u32) -> Result<()> {
        super::check_prime(p)?;
        if n == 0 {
            return Err(domain!("extension degree must be at least 1"));
        }
        let size = u64::from(p).checked_pow(n).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(config!("F_{p}^{n} has {size} elements, above the limit {MAX_FIELD_SIZE}"));
        }
        Ok(())
    }

    fn build(g: FpPoly) -> Result<Self> {
        let p = g.p();
        let n = g.deg() as u32;
        let size = u64::from(p).pow(n);
        let order = size - 1;
        let mut antilog = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = vec![0u32; n as usize];
        cur[0] = 1;
        for k in 0..order {
            let packed = pack(&cur, p);
            antilog.push(packed);
            log[packed as usize] = k as u32;
            mul_by_root(&mut cur, &g);
        }
        let cyclo = Arc::new(CycField::new(order)?);
        Ok(Self {
            inner: Arc::new(Inner {
                p,
                n,
                modulus: g,
                order,
                antilog,
                log,
                cyclo,
            }),
        })
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    /// Extension degree N.
    pub fn degree(&self) -> u32 {
        self.inner.n
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.inner.modulus
    }

    /// m = p^N - 1, the order of the cyclic group generated by alpha.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn cyclo(&self) -> &Arc<CycField> {
        &self.inner.cyclo
    }

    pub fn alpha_pow(&self, k: u64) -> u32 {
        self.inner.antilog[(k % self.inner.order) as usize]
    }

    /// Discrete log base alpha; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u64> {
        match self.inner.log.get(a as usize) {
            Some(&l) if l != u32::MAX => Some(u64::from(l)),
            _ => None,
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.inner.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.inner.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.inner.n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.alpha_pow(x + y),
            _ => 0,
        }
    }

    /// f(alpha^k) for f over the prime field.
    pub fn eval_at_power(&self, f: &FpPoly, k: u64) -> u32 {
        let point = self.alpha_pow(k);
        f.coeffs()
            .iter()
            .rev()
            .fold(0u32, |acc, &c| self.add(self.mul(acc, point), c))
    }

    /// Frobenius orbit {k, kp, kp^2, ...} mod m, in generation order.
    pub fn frobenius_orbit(&self, k: u64) -> Vec<u64> {
        let m = self.inner.order;
        let p = u64::from(self.inner.p);
        let start = k % m;
        let mut orbit = vec![start];
        let mut cur = start * p % m;
        while cur != start {
            orbit.push(cur);
            cur = cur * p % m;
        }
        orbit
    }

    /// Smallest element of each Frobenius orbit, ascending.
    pub fn orbit_representatives(&self) -> Vec<u64> {
        (0..self.inner.order)
            .filter(|&k| self.frobenius_orbit(k).iter().all(|&j| j >= k))
            .collect()
    }

    /// Minimal polynomial f_k of alpha^k, its degree d_k (the Frobenius
    /// orbit size) and m_k = N / d_k.
    pub fn min_poly_of_power(&self, k: u64) -> Result<(FpPoly, u32, u32)> {
        let p = self.inner.p;
        let orbit = self.frobenius_orbit(k);
        // product of (x - alpha^j) with coefficients in F_{p^N}, ascending
        let mut coeffs: Vec<u32> = vec![1];
        for &j in &orbit {
            let root = self.neg(self.alpha_pow(j));
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.add(next[i], self.mul(c, root));
            }
            coeffs = next;
        }
        if coeffs.iter().any(|&c| c >= p) {
            return Err(crate::error::invariant!("minimal polynomial of alpha^{k} left the prime field"));
        }
        let d = orbit.len() as u32;
        Ok((FpPoly::from_raw(p, coeffs), d, self.inner.n / d))
    }

    /// Discrete logs of all roots of `f` with multiplicity, ascending.
    /// Every irreducible factor must have degree dividing N.
    pub fn roots(&self, f: &FpPoly) -> Result<Vec<u64>> {
        if f.p() != self.inner.p {
            return Err(config!("polynomial over F_{} used in a context over F_{}", f.p(), self.inner.p));
        }
        if f.constant_term() == 0 {
            return Err(domain!("{f} has the root 0, which has no discrete log"));
        }
        let fac = factor(f)?;
        let mut out = Vec::with_capacity(f.deg());
        for (h, e) in &fac.factors {
            let d = h.deg() as u32;
            if !self.inner.n.is_multiple_of(d) {
                return Err(config!(
                    "factor {} of degree {d} does not split in F_{}^{}",
                    h.to_digits(),
                    self.inner.p,
                    self.inner.n
                ));
            }
            let k = (0..self.inner.order)
                .find(|&k| self.eval_at_power(h, k) == 0)
                .ok_or_else(|| crate::error::invariant!("no root of {} found", h.to_digits()))?;
            for j in self.frobenius_orbit(k) {
                for _ in 0..*e {
                    out.push(j);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

/// cur <- cur * x mod g, on coordinate vectors of length deg g.
fn mul_by_root(cur: &mut [u32], g: &FpPoly) {
    let p = u64::from(g.p());
    let n = cur.len();
    let top = u64::from(cur[n - 1]);
    for i in (1..n).rev() {
        cur[i] = cur[i - 1];
    }
    cur[0] = 0;
    if top != 0 {
        // x^n = -(g_0 + ... + g_{n-1} x^{n-1}) for monic g
        for (i, c) in cur.iter_mut().enumerate() {
            let gi = u64::from(g.coeff(i));
            *c = ((u64::from(*c) + top * (p - gi)) % p) as u32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    #[test]
    fn min_poly_examples() {
        let ctx = ExtFieldCtx::new(2, 4).unwrap();
        assert_eq!(ctx.modulus(), &poly(2, "11001"));
        assert_eq!(ctx.min_poly_of_power(5).unwrap(), (poly(2, "111"), 2, 2));
        assert_eq!(ctx.min_poly_of_power(3).unwrap(), (poly(2, "11111"), 4, 1));
        assert_eq!(ctx.min_poly_of_power(0).unwrap(), (poly(2, "11"), 1, 4));
        assert_eq!(ctx.min_poly_of_power(1).unwrap().0, poly(2, "11001"));
    }

    #[test]
    fn min_poly_vanishes_at_its_root() {
        for (p, n) in [(2, 4), (2, 6), (3, 2), (3, 3), (5, 2)] {
            let ctx = ExtFieldCtx::new(p, n).unwrap();
            for k in 0..ctx.order() {
                let (f, d, m) = ctx.min_poly_of_power(k).unwrap();
                assert_eq!(ctx.eval_at_power(&f, k), 0);
                assert_eq!(d * m, n);
                assert!(is_irreducible(&f).unwrap());
                assert_ne!(f.constant_term(), 0);
            }
        }
    }

    #[test]
    fn roots_with_multiplicity() {
        let ctx = ExtFieldCtx::new(2, 4).unwrap();
        let g = poly(2, "10101"); // (x^2+x+1)^2
        assert_eq!(ctx.roots(&g).unwrap(), vec![5, 5, 10, 10]);
        let err = ctx.roots(&poly(2, "1101")).unwrap_err();
        assert!(matches!(err, crate::Error::Config(ref s) if s.contains("1101")));
    }

    #[test]
    fn rejects_non_primitive_modulus_and_huge_fields() {
        // x^4+x^3+x^2+x+1 is irreducible but its root has order 5
        assert!(ExtFieldCtx::with_modulus(poly(2, "11111")).is_err());
        assert!(ExtFieldCtx::with_modulus(poly(2, "10011")).is_ok());
        assert!(ExtFieldCtx::new(2, 21).is_err());
    }
}
