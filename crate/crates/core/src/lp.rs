//! Dense tableau simplex, exact over [`Scalar`] or approximate over `f64`.
//!
//! Problems here are tiny (a handful of rows), so a dense tableau with
//! Bland's anti-cycling rule is all that is needed.

use std::fmt::Debug;

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Tolerance of the floating-point simplex.
pub const F64_TOL: f64 = 1e-9;

pub trait LpNum: Clone + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn lt(&self, o: &Self) -> bool;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

impl LpNum for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

impl LpNum for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_pos(&self) -> bool {
        *self > F64_TOL
    }
    fn is_neg(&self) -> bool {
        *self < -F64_TOL
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, value: T },
    Unbounded,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    /// Reduced costs; a column may enter while its entry is negative.
    obj: Vec<T>,
    value: T,
    basis: Vec<usize>,
}

impl<T: LpNum> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.div(&p);
        }
        self.rhs[r] = self.rhs[r].div(&p);
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c].clone();
            if !f.is_pos() && !f.is_neg() {
                self.rows[i][c] = T::zero();
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                *v = v.sub(&f.mul(pv));
            }
            self.rhs[i] = self.rhs[i].sub(&f.mul(&pivot_rhs));
        }
        let f = self.obj[c].clone();
        for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
            *v = v.sub(&f.mul(pv));
        }
        self.value = self.value.sub(&f.mul(&pivot_rhs));
        self.basis[r] = c;
    }

    /// Maximises; returns `false` when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_neg()) else {
                return true;
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_pos() {
                    continue;
                }
                let ratio = self.rhs[i].div(a);
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio.lt(br) || (!br.lt(&ratio) && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn solution(&self, nvars: usize) -> Vec<T> {
        let mut x = vec![T::zero(); nvars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }
}

/// `max c·x` subject to `A x ≤ b`, `x ≥ 0`, with `b ≥ 0` so the origin is a
/// feasible starting vertex.
pub fn maximize_le<T: LpNum>(a: &[Vec<T>], b: &[T], c: &[T]) -> LpOutcome<T> {
    let m = a.len();
    let n = c.len();
    assert!(b.iter().all(|v| !v.is_neg()), "maximize_le needs b ≥ 0");
    let rows = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let mut obj: Vec<T> = c.iter().map(|v| v.neg()).collect();
    obj.extend((0..m).map(|_| T::zero()));
    let mut t = Tableau { rows, rhs: b.to_vec(), obj, value: T::zero(), basis: (n..n + m).collect() };
    if !t.optimize(n + m) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal { x: t.solution(n), value: t.value }
}

/// A nonnegative solution of `A x = b`, if one exists (phase one of the
/// two-phase method).
pub fn feasible_eq<T: LpNum>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_neg();
        let mut r: Vec<T> = row.iter().map(|v| if flip { v.neg() } else { v.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        rows.push(r);
        rhs.push(if flip { bi.neg() } else { bi.clone() });
    }
    let mut obj = vec![T::zero(); n + m];
    for r in &rows {
        for j in 0..n {
            obj[j] = obj[j].sub(&r[j]);
        }
    }
    let value = rhs.iter().fold(T::zero(), |acc, v| acc.sub(v));
    let mut t = Tableau { rows, rhs, obj, value, basis: (n..n + m).collect() };
    t.optimize(n);
    if t.value.is_neg() {
        None
    } else {
        Some(t.solution(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn exact_small_lp() {
        // max x + y  s.t.  x + 2y ≤ 4, 3x + y ≤ 6
        let a = vec![vec![int(1), int(2)], vec![int(3), int(1)]];
        let b = vec![int(4), int(6)];
        match maximize_le(&a, &b, &[int(1), int(1)]) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![ratio(8, 5), ratio(6, 5)]);
                assert_eq!(value, ratio(14, 5));
            }
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }

    #[test]
    fn detects_unbounded() {
        let a = vec![vec![int(1), int(-1)]];
        assert_eq!(maximize_le(&a, &[int(1)], &[int(0), int(1)]), LpOutcome::Unbounded);
    }

    #[test]
    fn feasibility_exact_and_float() {
        // λ over {0, 2}: 0·λ0 + 2·λ1 = x, λ0 + λ1 = 1
        let a = vec![vec![int(0), int(2)], vec![int(1), int(1)]];
        assert!(feasible_eq(&a, &[int(1), int(1)]).is_some());
        assert!(feasible_eq(&a, &[int(2), int(1)]).is_some());
        assert!(feasible_eq(&a, &[int(3), int(1)]).is_none());
        assert!(feasible_eq(&a, &[int(-1), int(1)]).is_none());
        let af = vec![vec![0.0, 2.0], vec![1.0, 1.0]];
        assert!(feasible_eq(&af, &[1.5, 1.0]).is_some());
        assert!(feasible_eq(&af, &[2.1, 1.0]).is_none());
    }
}
