use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::enumerate::{check_budget, elements_with_inverses, group_order};
use super::GLMatrix;
use crate::cyclo::{lifted_roots, CycField, CycNum};
use crate::error::{config, domain, Result};
use crate::ffpoly::{enumerate_basis_polys, ExtFieldCtx, FpPoly};
use crate::glring::{RingElt, TensorElt};

/// A class function on GL_n(F_p) vanishing off the semisimple classes,
/// keyed by characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFn {
    n: usize,
    p: u32,
    field: Arc<CycField>,
    values: BTreeMap<FpPoly, CycNum>,
}

impl ClassFn {
    pub fn zero(n: usize, p: u32, field: &Arc<CycField>) -> Self {
        Self { n, p, field: field.clone(), values: BTreeMap::new() }
    }

    /// Reads a homogeneous ring element of degree n as a class function.
    pub fn from_ring_elt(x: &RingElt, n: usize) -> Result<Self> {
        let mut out = Self::zero(n, x.p(), x.field());
        for (f, c) in x.terms() {
            if f.deg() != n {
                return Err(domain!("term pi[{}] is not of degree {n}", f.to_digits()));
            }
            out.set(f.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn to_ring_elt(&self) -> RingElt {
        let mut out = RingElt::zero_in(self.p, &self.field);
        for (f, c) in &self.values {
            let t = RingElt::term_in(self.p, &self.field, f, c.clone()).expect("class keys are basis polynomials");
            out = out.add(&t).expect("same ring");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn values(&self) -> &BTreeMap<FpPoly, CycNum> {
        &self.values
    }

    pub fn value(&self, f: &FpPoly) -> CycNum {
        self.values.get(f).cloned().unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn set(&mut self, f: FpPoly, v: CycNum) {
        if v.is_zero() {
            self.values.remove(&f);
        } else {
            self.values.insert(f, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn semisimple_class_of(m: &GLMatrix) -> Option<FpPoly> {
    m.semisimple_class()
}

/// Number of invertible matrices commuting with `m`.
pub fn centralizer_order(m: &GLMatrix, budget: u128) -> Result<u128> {
    let mut count = 0u128;
    for g in super::enumerate_gl(m.n(), m.p(), budget)? {
        if g.mul(m) == m.mul(&g) {
            count += 1;
        }
    }
    Ok(count)
}

type PairCounts = BTreeMap<(FpPoly, FpPoly), u64>;

/// For each semisimple class g of GL_N(F_p) and each split N = k + (N - k),
/// the number of h with h g h^{-1} block diagonal, tallied by the
/// characteristic polynomials of the two blocks.
#[derive(Clone, Debug)]
pub struct InductionTable {
    p: u32,
    total: usize,
    counts: BTreeMap<(usize, FpPoly), PairCounts>,
}

impl InductionTable {
    pub fn build(p: u32, total: usize, budget: u128) -> Result<Self> {
        let classes: Vec<(FpPoly, GLMatrix)> = enumerate_basis_polys(p, total, true)?
            .into_iter()
            .map(|f| GLMatrix::class_representative(&f).map(|g| (f, g)))
            .collect::<Result<_>>()?;
        let mut counts: BTreeMap<(usize, FpPoly), PairCounts> = BTreeMap::new();
        for (h, h_inv) in elements_with_inverses(total, p, budget)? {
            for (f, g) in &classes {
                let c = g.conjugate(&h, &h_inv);
                for k in 1..total {
                    if c.is_block_diagonal(k) {
                        let (a, b) = c.blocks(k);
                        *counts
                            .entry((k, f.clone()))
                            .or_default()
                            .entry((a.charpoly(), b.charpoly()))
                            .or_insert(0) += 1;
                    }
                }
            }
        }
        Ok(Self { p, total, counts })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// rho1 * rho2 at every semisimple class of GL_N(F_p).
    pub fn product(&self, rho1: &ClassFn, rho2: &ClassFn) -> Result<ClassFn> {
        if rho1.p != self.p || rho2.p != self.p || rho1.field.order() != rho2.field.order() {
            return Err(config!("class functions over different rings"));
        }
        if rho1.n + rho2.n != self.total || rho1.n == 0 || rho2.n == 0 {
            return Err(domain!(
                "table for degree {} cannot multiply degrees {} and {}",
                self.total,
                rho1.n,
                rho2.n
            ));
        }
        let norm = BigRational::new(
            BigInt::from(1),
            BigInt::from(group_order(rho1.n, self.p)) * BigInt::from(group_order(rho2.n, self.p)),
        );
        let mut out = ClassFn::zero(self.total, self.p, &rho1.field);
        for f in enumerate_basis_polys(self.p, self.total, true)? {
            let Some(pairs) = self.counts.get(&(rho1.n, f.clone())) else {
                continue;
            };
            let mut acc = CycNum::zero(&rho1.field);
            for ((a, b), cnt) in pairs {
                let va = rho1.value(a);
                let vb = rho2.value(b);
                if !va.is_zero() && !vb.is_zero() {
                    acc += (&va * &vb).scale_int(&BigInt::from(*cnt));
                }
            }
            out.set(f, acc.scale(&norm));
        }
        Ok(out)
    }
}

/// Literal induction product; degree 0 factors act as scalars.
pub fn induction_product(rho1: &ClassFn, rho2: &ClassFn, budget: u128) -> Result<ClassFn> {
    if rho1.n == 0 || rho2.n == 0 {
        let (unit, other) = if rho1.n == 0 { (rho1, rho2) } else { (rho2, rho1) };
        let s = unit.value(&FpPoly::one(unit.p));
        let mut out = ClassFn::zero(other.n, other.p, &other.field);
        for (f, v) in &other.values {
            out.set(f.clone(), v * &s);
        }
        return Ok(out);
    }
    InductionTable::build(rho1.p, rho1.n + rho2.n, budget)?.product(rho1, rho2)
}

/// For each semisimple class g of GL_n(F_p) and each k, the number of h
/// with h g h^{-1} = C^k, where C is the companion matrix of the ambient
/// field's primitive polynomial (so C^k plays the role of alpha^k).
#[derive(Clone, Debug)]
pub struct TorusInductionTable {
    ctx: ExtFieldCtx,
    counts: BTreeMap<FpPoly, Vec<u64>>,
}

impl TorusInductionTable {
    pub fn build(ctx: &ExtFieldCtx, budget: u128) -> Result<Self> {
        let n = ctx.degree() as usize;
        let p = ctx.p();
        let m = ctx.order();
        let c = GLMatrix::companion(ctx.modulus())?;
        let mut torus: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
        let mut power = GLMatrix::identity(n, p);
        for k in 0..m {
            torus.insert(power.bytes().to_vec(), k);
            power = power.mul(&c);
        }
        let classes: Vec<(FpPoly, GLMatrix)> = enumerate_basis_polys(p, n, true)?
            .into_iter()
            .map(|f| GLMatrix::class_representative(&f).map(|g| (f, g)))
            .collect::<Result<_>>()?;
        let mut counts: BTreeMap<FpPoly, Vec<u64>> = BTreeMap::new();
        for (h, h_inv) in elements_with_inverses(n, p, budget)? {
            for (f, g) in &classes {
                let conj = g.conjugate(&h, &h_inv);
                if let Some(&k) = torus.get(conj.bytes()) {
                    counts.entry(f.clone()).or_insert_with(|| vec![0; m as usize])[k as usize] += 1;
                }
            }
        }
        Ok(Self { ctx: ctx.clone(), counts })
    }

    /// (1/|T|) sum_{h : h g h^{-1} in T} values[log(h g h^{-1})].
    pub fn induce(&self, values: &[CycNum]) -> Result<ClassFn> {
        let m = self.ctx.order();
        if values.len() as u64 != m {
            return Err(domain!("{} torus values for a torus of order {m}", values.len()));
        }
        let field = self.ctx.cyclo();
        let inv_m = BigRational::new(BigInt::from(1), BigInt::from(m));
        let mut out = ClassFn::zero(self.ctx.degree() as usize, self.ctx.p(), field);
        for (f, row) in &self.counts {
            let mut acc = CycNum::zero(field);
            for (k, &cnt) in row.iter().enumerate() {
                if cnt != 0 && !values[k].is_zero() {
                    acc += values[k].scale_int(&BigInt::from(cnt));
                }
            }
            out.set(f.clone(), acc.scale(&inv_m));
        }
        Ok(out)
    }
}

pub fn induce_from_torus(ctx: &ExtFieldCtx, values: &[CycNum], budget: u128) -> Result<ClassFn> {
    TorusInductionTable::build(ctx, budget)?.induce(values)
}

/// Ind from the diagonal copy of G = GL_n(F_p) to G x G, evaluated at every
/// pair of semisimple class representatives by the literal double sum
/// (1/|G|) sum_{(h, l) : h a h^{-1} = l b l^{-1}} rho(h a h^{-1}).
pub fn comultiplication_oracle(rho: &ClassFn, budget: u128) -> Result<TensorElt> {
    let n = rho.n;
    let p = rho.p;
    let order = group_order(n, p);
    check_budget(order.saturating_mul(order), budget)?;
    let group = elements_with_inverses(n, p, budget)?;
    let classes = enumerate_basis_polys(p, n, true)?;
    let conjugates: Vec<Vec<GLMatrix>> = classes
        .iter()
        .map(|f| {
            let g = GLMatrix::class_representative(f)?;
            Ok(group.iter().map(|(h, h_inv)| g.conjugate(h, h_inv)).collect())
        })
        .collect::<Result<_>>()?;
    let inv_order = BigRational::new(BigInt::from(1), BigInt::from(order));
    let mut out = TensorElt::zero_in(p, &rho.field);
    for (i, fa) in classes.iter().enumerate() {
        let va = rho.value(fa);
        for (j, fb) in classes.iter().enumerate() {
            let mut count = 0u64;
            for x in &conjugates[i] {
                for y in &conjugates[j] {
                    if x == y {
                        count += 1;
                    }
                }
            }
            if count > 0 && !va.is_zero() {
                out.add_term(fa.clone(), fb.clone(), va.scale_int(&BigInt::from(count)).scale(&inv_order));
            }
        }
    }
    Ok(out)
}

/// Lifted characters of the graded pieces 0..=max_degree of the module
/// S(V) (p = 2) or Lambda(V) (x) S(V) with V in degrees 1 and 2 (p odd),
/// on the semisimple class f.
pub fn graded_brauer_characters(ctx: &ExtFieldCtx, f: &FpPoly, max_degree: usize) -> Result<Vec<CycNum>> {
    let field = ctx.cyclo();
    let roots = lifted_roots(ctx, f)?;
    let mut h = vec![CycNum::zero(field); max_degree + 1];
    h[0] = CycNum::one(field);
    for w in &roots {
        for d in 1..=max_degree {
            let add = w * &h[d - 1];
            h[d] += add;
        }
    }
    if ctx.p() == 2 {
        return Ok(h);
    }
    let mut e = vec![CycNum::zero(field); roots.len() + 1];
    e[0] = CycNum::one(field);
    for (i, w) in roots.iter().enumerate() {
        for a in (1..=i + 1).rev() {
            let add = w * &e[a - 1];
            e[a] += add;
        }
    }
    Ok((0..=max_degree)
        .map(|d| {
            let mut acc = CycNum::zero(field);
            for (a, ea) in e.iter().enumerate().take(d + 1) {
                if (d - a) % 2 == 0 && !ea.is_zero() {
                    acc += ea * &h[(d - a) / 2];
                }
            }
            acc
        })
        .collect())
}

/// Coefficients 0..=max_degree of sum_D dim Hom_G(P, H^D) t^D for the
/// projective with Brauer character rho, computed as
/// (1/|G|) sum over semisimple classes c of |c| rho(c^{-1}) beta_D(c).
pub fn brauer_pairing_series(ctx: &ExtFieldCtx, rho: &ClassFn, max_degree: usize, budget: u128) -> Result<Vec<CycNum>> {
    let field = ctx.cyclo();
    if rho.field.order() != field.order() || rho.p != ctx.p() {
        return Err(config!("class function and ambient field disagree"));
    }
    let order = BigInt::from(group_order(rho.n, rho.p));
    let mut out = vec![CycNum::zero(field); max_degree + 1];
    for c in enumerate_basis_polys(rho.p, rho.n, true)? {
        let val = rho.value(&c.reciprocal()?);
        if val.is_zero() {
            continue;
        }
        let z = BigInt::from(centralizer_order(&GLMatrix::class_representative(&c)?, budget)?);
        let class_size = &order / &z;
        let weight = BigRational::new(class_size, order.clone());
        let beta = graded_brauer_characters(ctx, &c, max_degree)?;
        for (d, b) in beta.iter().enumerate() {
            out[d] += (&val * b).scale(&weight);
        }
    }
    Ok(out)
}
