use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};
use crate::ffpoly::{check_prime, factor, FpPoly};

/// An invertible n x n matrix over F_p, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLMatrix {
    n: usize,
    p: u32,
    a: Vec<u8>,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat
    let mut r = 1u32;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl GLMatrix {
    /// Checks that the entries are reduced and the determinant is nonzero.
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        if entries.len() != n * n {
            return Err(domain!("{} entries for a {n}x{n} matrix", entries.len()));
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= p) {
            return Err(domain!("entry {e} out of range for p = {p}"));
        }
        let m = Self::raw(n, p, entries.into_iter().map(|e| e as u8).collect());
        if m.det() == 0 {
            return Err(domain!("singular matrix"));
        }
        Ok(m)
    }

    pub(crate) fn raw(n: usize, p: u32, a: Vec<u8>) -> Self {
        Self { n, p, a }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut a = vec![0u8; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Self::raw(n, p, a)
    }

    /// Companion matrix of a monic f with f(0) != 0: ones on the
    /// subdiagonal, -f_i in the last column.
    pub fn companion(f: &FpPoly) -> Result<Self> {
        if !f.is_basis() || f.deg() == 0 {
            return Err(domain!("companion matrix of {} needs a monic, nonconstant f with f(0) != 0", f.to_digits()));
        }
        let n = f.deg();
        let p = f.p();
        let mut a = vec![0u8; n * n];
        for i in 1..n {
            a[i * n + i - 1] = 1;
        }
        for i in 0..n {
            a[i * n + n - 1] = ((p - f.coeff(i)) % p) as u8;
        }
        Ok(Self::raw(n, p, a))
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(blocks: &[GLMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let p = blocks.first().map_or(2, |b| b.p);
        let mut a = vec![0u8; n * n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    a[(off + i) * n + off + j] = b.get(i, j) as u8;
                }
            }
            off += b.n;
        }
        Self::raw(n, p, a)
    }

    /// A semisimple element with characteristic polynomial f: companion
    /// blocks of each irreducible factor, repeated by multiplicity.
    pub fn class_representative(f: &FpPoly) -> Result<Self> {
        if !f.is_basis() {
            return Err(domain!("{} is not a class polynomial", f.to_digits()));
        }
        let mut blocks = Vec::new();
        for (h, e) in factor(f)?.factors {
            let c = Self::companion(&h)?;
            for _ in 0..e {
                blocks.push(c.clone());
            }
        }
        if blocks.is_empty() {
            return Ok(Self::raw(0, f.p(), Vec::new()));
        }
        Ok(Self::block_diag(&blocks))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        u32::from(self.a[i * self.n + j])
    }

    pub fn entries(&self) -> Vec<u32> {
        self.a.iter().map(|&e| u32::from(e)).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let p = self.p;
        let mut a = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u32;
                for k in 0..n {
                    s += self.get(i, k) * other.get(k, j);
                }
                a[i * n + j] = (s % p) as u8;
            }
        }
        Self::raw(n, p, a)
    }

    /// h * self * h_inv.
    pub fn conjugate(&self, h: &Self, h_inv: &Self) -> Self {
        h.mul(self).mul(h_inv)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let p = self.p;
        let mut m: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut row: Vec<u32> = (0..n).map(|j| self.get(i, j)).collect();
                row.extend((0..n).map(|j| u32::from(i == j)));
                row
            })
            .collect();
        for c in 0..n {
            let r = (c..n).find(|&r| m[r][c] != 0).expect("invertible matrix");
            m.swap(c, r);
            let inv = inv_mod(m[c][c], p);
            for v in m[c].iter_mut() {
                *v = *v * inv % p;
            }
            for r in 0..n {
                if r != c && m[r][c] != 0 {
                    let f = m[r][c];
                    for j in 0..2 * n {
                        m[r][j] = (m[r][j] + (p - f) * m[c][j]) % p;
                    }
                }
            }
        }
        let a = m.iter().flat_map(|row| row[n..].iter().map(|&v| v as u8)).collect();
        Self::raw(n, p, a)
    }

    pub fn det(&self) -> u32 {
        let n = self.n;
        let p = self.p;
        let mut m: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut det = 1u32;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if r != c {
                m.swap(c, r);
                det = (p - det) % p;
            }
            det = det * m[c][c] % p;
            let inv = inv_mod(m[c][c], p);
            for r in c + 1..n {
                if m[r][c] != 0 {
                    let f = m[r][c] * inv % p;
                    for j in c..n {
                        m[r][j] = (m[r][j] + (p - f) * m[c][j]) % p;
                    }
                }
            }
        }
        det
    }

    /// True when the off-diagonal blocks for the split k + (n - k) vanish.
    pub fn is_block_diagonal(&self, k: usize) -> bool {
        let n = self.n;
        (0..k).all(|i| (k..n).all(|j| self.a[i * n + j] == 0))
            && (k..n).all(|i| (0..k).all(|j| self.a[i * n + j] == 0))
    }

    /// The diagonal blocks for the split k + (n - k).
    pub fn blocks(&self, k: usize) -> (Self, Self) {
        let n = self.n;
        let top = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| self.a[i * n + j]).collect();
        let bot = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).map(|(i, j)| self.a[i * n + j]).collect();
        (Self::raw(k, self.p, top), Self::raw(n - k, self.p, bot))
    }

    /// Characteristic polynomial det(xI - M), via reduction to upper
    /// Hessenberg form and the standard recurrence on leading minors.
    pub fn charpoly(&self) -> FpPoly {
        let n = self.n;
        let p = self.p;
        let mut h: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        for c in 0..n.saturating_sub(2) {
            let Some(r) = (c + 1..n).find(|&r| h[r][c] != 0) else {
                continue;
            };
            if r != c + 1 {
                h.swap(r, c + 1);
                for row in h.iter_mut() {
                    row.swap(r, c + 1);
                }
            }
            let inv = inv_mod(h[c + 1][c], p);
            for i in c + 2..n {
                if h[i][c] == 0 {
                    continue;
                }
                let u = h[i][c] * inv % p;
                for j in 0..n {
                    h[i][j] = (h[i][j] + (p - u) * h[c + 1][j]) % p;
                }
                for row in h.iter_mut() {
                    row[c + 1] = (row[c + 1] + u * row[i]) % p;
                }
            }
        }
        let x = FpPoly::x(p);
        let mut polys = vec![FpPoly::one(p)];
        for k in 0..n {
            let mut next = x.sub(&FpPoly::constant(p, h[k][k])).mul(&polys[k]);
            let mut prod = 1u32;
            for i in (0..k).rev() {
                prod = prod * h[i + 1][i] % p;
                let c = h[i][k] * prod % p;
                if c != 0 {
                    next = next.sub(&polys[i].scale(c));
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }

    /// Minimal polynomial: the first power M^k in the span of I, ..., M^{k-1}.
    pub fn minpoly(&self) -> FpPoly {
        let p = self.p;
        let dim = self.n * self.n;
        // echelon rows: (pivot, vector, combination of powers)
        let mut basis: Vec<(usize, Vec<u32>, Vec<u32>)> = Vec::new();
        let mut power = Self::identity(self.n, p);
        for k in 0..=self.n {
            let mut w: Vec<u32> = power.entries();
            let mut combo = vec![0u32; self.n + 1];
            combo[k] = 1;
            for (piv, v, c) in &basis {
                let f = w[*piv];
                if f != 0 {
                    for j in 0..dim {
                        w[j] = (w[j] + (p - f) * v[j]) % p;
                    }
                    for j in 0..=self.n {
                        combo[j] = (combo[j] + (p - f) * c[j]) % p;
                    }
                }
            }
            match w.iter().position(|&e| e != 0) {
                None => return FpPoly::from_raw(p, combo),
                Some(piv) => {
                    let inv = inv_mod(w[piv], p);
                    for e in w.iter_mut() {
                        *e = *e * inv % p;
                    }
                    for e in combo.iter_mut() {
                        *e = *e * inv % p;
                    }
                    basis.push((piv, w, combo));
                }
            }
            power = power.mul(self);
        }
        unreachable!("Cayley-Hamilton bounds the degree of the minimal polynomial")
    }

    /// The characteristic polynomial when the minimal polynomial is
    /// squarefree, otherwise `None`.
    pub fn semisimple_class(&self) -> Option<FpPoly> {
        let mu = self.minpoly();
        mu.gcd(&mu.derivative()).is_one().then(|| self.charpoly())
    }
}

impl fmt::Debug for GLMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL{}(F{})[", self.n, self.p)?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::enumerate_basis_polys;

    fn poly(p: u32, s: &str) -> FpPoly {
        FpPoly::from_digits(p, s).unwrap()
    }

    /// det(xI - M) by Laplace expansion with polynomial entries.
    fn charpoly_laplace(m: &GLMatrix) -> FpPoly {
        let p = m.p();
        let n = m.n();
        let entries: Vec<Vec<FpPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = FpPoly::constant(p, (p - m.get(i, j)) % p);
                        if i == j { c.add(&FpPoly::x(p)) } else { c }
                    })
                    .collect()
            })
            .collect();
        fn det(p: u32, a: &[Vec<FpPoly>]) -> FpPoly {
            if a.is_empty() {
                return FpPoly::one(p);
            }
            let mut acc = FpPoly::zero(p);
            for j in 0..a.len() {
                let minor: Vec<Vec<FpPoly>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = a[0][j].mul(&det(p, &minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
        det(p, &entries)
    }

    #[test]
    fn companion_and_class_reps() {
        for p in [2u32, 3, 5] {
            for d in 1..=4 {
                for f in enumerate_basis_polys(p, d, true).unwrap() {
                    let c = GLMatrix::companion(&f).unwrap();
                    assert_eq!(c.charpoly(), f);
                    assert_eq!(c.minpoly(), f);
                    let r = GLMatrix::class_representative(&f).unwrap();
                    assert_eq!(r.charpoly(), f);
                    assert_eq!(r.semisimple_class(), Some(f.clone()));
                    assert_ne!(r.det(), 0);
                }
            }
        }
    }

    #[test]
    fn charpoly_matches_laplace() {
        let mut seed = 12345u64;
        for p in [2u32, 3, 7] {
            for n in 1..=4usize {
                for _ in 0..40 {
                    let entries: Vec<u8> = (0..n * n)
                        .map(|_| {
                            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            ((seed >> 33) % u64::from(p)) as u8
                        })
                        .collect();
                    let m = GLMatrix::raw(n, p, entries);
                    assert_eq!(m.charpoly(), charpoly_laplace(&m), "{m:?}");
                    let mu = m.minpoly();
                    assert!(mu.divides(&m.charpoly()));
                }
            }
        }
    }

    #[test]
    fn semisimplicity_examples() {
        let id = GLMatrix::identity(3, 2);
        assert_eq!(id.semisimple_class(), Some(poly(2, "1111")));
        let u = GLMatrix::new(2, 2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(u.minpoly(), poly(2, "101"));
        assert_eq!(u.semisimple_class(), None);
        let w = GLMatrix::new(2, 2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(w.semisimple_class(), Some(poly(2, "111")));
    }

    #[test]
    fn inverse_and_blocks() {
        let m = GLMatrix::new(3, 3, vec![1, 2, 0, 0, 1, 1, 2, 0, 1]).unwrap();
        assert_eq!(m.mul(&m.inverse()), GLMatrix::identity(3, 3));
        let a = GLMatrix::companion(&poly(3, "21")).unwrap();
        let b = GLMatrix::companion(&poly(3, "211")).unwrap();
        let d = GLMatrix::block_diag(&[a.clone(), b.clone()]);
        assert!(d.is_block_diagonal(1));
        assert!(!d.is_block_diagonal(2));
        assert_eq!(d.blocks(1), (a, b));
        assert!(GLMatrix::new(2, 2, vec![1, 1, 1, 1]).is_err());
    }
}
