use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::GLMatrix;
use crate::error::{Error, Result};
use crate::ffpoly::check_prime;
use crate::glring::gl_order;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// |GL_n(F_p)|, saturated to u128.
pub fn group_order(n: usize, p: u32) -> u128 {
    gl_order(n as u32, &BigInt::from(p)).to_u128().unwrap_or(u128::MAX)
}

pub(crate) fn check_budget(order: u128, budget: u128) -> Result<()> {
    if order > budget {
        Err(Error::Budget { order, budget })
    } else {
        Ok(())
    }
}

/// Streams GL_n(F_p) in row-major lexicographic order. Rows are chosen one
/// at a time and a candidate row is skipped as soon as it lies in the span
/// of the rows above it.
pub struct GlEnumerator {
    n: usize,
    p: u32,
    size: u64,
    rows: Vec<u64>,
    // spans[i]: membership table of the span of rows[..i]
    spans: Vec<Vec<bool>>,
    started: bool,
    done: bool,
}

impl GlEnumerator {
    fn new(n: usize, p: u32) -> Self {
        let size = u64::from(p).pow(n as u32);
        let mut zero_span = vec![false; size as usize];
        zero_span[0] = true;
        Self { n, p, size, rows: vec![0; n], spans: vec![zero_span], started: false, done: n == 0 }
    }

    fn digits(&self, v: u64) -> Vec<u32> {
        // entry 0 is the most significant digit, so numeric order is lexicographic
        let mut out = vec![0u32; self.n];
        let mut r = v;
        for i in (0..self.n).rev() {
            out[i] = (r % u64::from(self.p)) as u32;
            r /= u64::from(self.p);
        }
        out
    }

    fn pack(&self, d: &[u32]) -> u64 {
        d.iter().fold(0u64, |acc, &x| acc * u64::from(self.p) + u64::from(x))
    }

    fn extend_span(&self, span: &[bool], row: u64) -> Vec<bool> {
        let p = self.p;
        let rd = self.digits(row);
        let mut out = vec![false; span.len()];
        for (s, &inside) in span.iter().enumerate() {
            if !inside {
                continue;
            }
            let sd = self.digits(s as u64);
            for c in 0..p {
                let v: Vec<u32> = sd.iter().zip(&rd).map(|(a, b)| (a + c * b) % p).collect();
                out[self.pack(&v) as usize] = true;
            }
        }
        out
    }

    /// Smallest admissible row at `level` that is >= `from`.
    fn first_free(&self, level: usize, from: u64) -> Option<u64> {
        (from..self.size).find(|&v| !self.spans[level][v as usize])
    }

    fn fill_from(&mut self, level: usize) -> bool {
        // rows[level] is already set and admissible; fill the levels below
        let mut lvl = level;
        loop {
            self.spans.truncate(lvl + 1);
            let next_span = self.extend_span(&self.spans[lvl], self.rows[lvl]);
            self.spans.push(next_span);
            lvl += 1;
            if lvl == self.n {
                return true;
            }
            match self.first_free(lvl, 0) {
                Some(v) => self.rows[lvl] = v,
                None => return false,
            }
        }
    }

    fn advance(&mut self) -> bool {
        let mut lvl = self.n;
        while lvl > 0 {
            lvl -= 1;
            if let Some(v) = self.first_free(lvl, self.rows[lvl] + 1) {
                self.rows[lvl] = v;
                if self.fill_from(lvl) {
                    return true;
                }
            }
        }
        false
    }

    fn current(&self) -> GLMatrix {
        let a = self.rows.iter().flat_map(|&r| self.digits(r)).map(|e| e as u8).collect();
        GLMatrix::raw(self.n, self.p, a)
    }
}

impl Iterator for GlEnumerator {
    type Item = GLMatrix;

    fn next(&mut self) -> Option<GLMatrix> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.advance()
        } else {
            self.started = true;
            match self.first_free(0, 0) {
                Some(v) => {
                    self.rows[0] = v;
                    self.fill_from(0)
                }
                None => false,
            }
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All of GL_n(F_p) as a stream, refusing groups larger than `budget`.
pub fn enumerate_gl(n: usize, p: u32, budget: u128) -> Result<GlEnumerator> {
    check_prime(p)?;
    check_budget(group_order(n, p), budget)?;
    Ok(GlEnumerator::new(n, p))
}

/// Every element paired with its inverse, in enumeration order.
pub(crate) fn elements_with_inverses(n: usize, p: u32, budget: u128) -> Result<Vec<(GLMatrix, GLMatrix)>> {
    Ok(enumerate_gl(n, p, budget)?.map(|g| {
        let inv = g.inverse();
        (g, inv)
    }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_group_order() {
        for (n, p) in [(1usize, 2u32), (1, 5), (2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)] {
            let count = enumerate_gl(n, p, DEFAULT_BUDGET).unwrap().count() as u128;
            assert_eq!(count, group_order(n, p), "n={n} p={p}");
        }
        assert_eq!(group_order(2, 2), 6);
        assert_eq!(group_order(3, 2), 168);
        assert_eq!(group_order(1, 7), 6);
    }

    #[test]
    fn order_is_lexicographic_and_invertible() {
        let all: Vec<GLMatrix> = enumerate_gl(3, 2, DEFAULT_BUDGET).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].bytes() < w[1].bytes()));
        assert!(all.iter().all(|g| g.det() != 0));
        let first = &all[0];
        assert_eq!(first.entries(), vec![0, 0, 1, 0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn budget_refusal_reports_the_order() {
        match enumerate_gl(4, 3, DEFAULT_BUDGET) {
            Err(Error::Budget { order, budget }) => {
                assert_eq!(order, 24_261_120);
                assert_eq!(budget, DEFAULT_BUDGET);
            }
            other => panic!("expected a budget refusal, got {:?}", other.map(|_| ())),
        }
        assert!(enumerate_gl(2, 2, 5).is_err());
        assert!(enumerate_gl(2, 2, 6).is_ok());
    }
}
