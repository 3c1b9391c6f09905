//! Small dense integer matrices with Hermite and Smith normal forms.
//!
//! Plain integer Gaussian elimination with full transform tracking; the
//! matrices here never exceed 9x9 so there is no need for modular tricks.

use crate::exact::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix of arbitrary (small) shape, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatN {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl MatN {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatN {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatN::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        MatN {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += t * row[b]
    pub fn add_row_multiple(&mut self, a: usize, b: usize, t: &Int) {
        for j in 0..self.cols {
            let v = self.at(b, j) * t;
            *self.at_mut(a, j) += v;
        }
    }

    /// col[a] += t * col[b]
    pub fn add_col_multiple(&mut self, a: usize, b: usize, t: &Int) {
        for i in 0..self.rows {
            let v = self.at(i, b) * t;
            *self.at_mut(i, a) += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    pub fn mul(&self, o: &MatN) -> MatN {
        assert_eq!(self.cols, o.rows);
        let mut out = MatN::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = self.at(i, k) * o.at(k, j);
                    *out.at_mut(i, j) += v;
                }
            }
        }
        out
    }

    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols);
        // fraction-free Gaussian elimination (Bareiss)
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if m.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.at(i, k).is_zero());
                match swap {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows)
            .filter(|&i| (0..h.cols).any(|j| !h.at(i, j).is_zero()))
            .count()
    }
}

/// Row Hermite normal form: returns (H, U) with U unimodular, U * M = H,
/// H in row-echelon form with positive pivots and reduced entries above.
pub fn hermite_normal_form(m: &MatN) -> (MatN, MatN) {
    let mut h = m.clone();
    let mut u = MatN::identity(m.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // gcd out the column below pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..h.rows {
                if !h.at(i, col).is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if h.at(i, col).abs() < h.at(b, col).abs() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..h.rows {
                if !h.at(i, col).is_zero() {
                    let q = -(h.at(i, col).div_floor(h.at(pivot_row, col)));
                    h.add_row_multiple(i, pivot_row, &q);
                    u.add_row_multiple(i, pivot_row, &q);
                    if !h.at(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // reduce entries above the pivot
        for i in 0..pivot_row {
            let q = -(h.at(i, col).div_floor(h.at(pivot_row, col)));
            if !q.is_zero() {
                h.add_row_multiple(i, pivot_row, &q);
                u.add_row_multiple(i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form: returns (U, D, V, V_inv) with U M V = D diagonal,
/// U and V unimodular, and the diagonal entries d1 | d2 | ... >= 0.
pub fn smith_normal_form(m: &MatN) -> (MatN, MatN, MatN, MatN) {
    let mut d = m.clone();
    let mut u = MatN::identity(m.rows);
    let mut v = MatN::identity(m.cols);
    let mut v_inv = MatN::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        loop {
            // find minimal nonzero entry in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d.at(i, j).is_zero() {
                        best = match best {
                            None => Some((i, j)),
                            Some((bi, bj)) => {
                                if d.at(i, j).abs() < d.at(bi, bj).abs() {
                                    Some((i, j))
                                } else {
                                    Some((bi, bj))
                                }
                            }
                        };
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            v_inv.swap_rows(t, bj);
            let mut clean = true;
            for i in t + 1..d.rows {
                if !d.at(i, t).is_zero() {
                    let q = -(d.at(i, t).div_floor(d.at(t, t)));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d.at(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d.at(t, j).is_zero() {
                    let q = -(d.at(t, j).div_floor(d.at(t, t)));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    // (col_j += q col_t on V) has inverse (row_t -= q row_j)
                    v_inv.add_row_multiple(t, j, &(-q));
                    if !d.at(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility fixup: pivot must divide the rest of the block
            let mut fixed = true;
            'outer: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        d.add_row_multiple(t, i, &Int::one());
                        u.add_row_multiple(t, i, &Int::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (u, d, v, v_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn hnf_identity_and_diagonal() {
        let id = MatN::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
        let d = MatN::from_i64(&[&[2, 0], &[0, 3]]);
        let (h, _) = hermite_normal_form(&d);
        assert_eq!(h, d);
    }

    #[test]
    fn hnf_preserves_determinant_size() {
        let m = MatN::from_i64(&[&[2, 4], &[1, 3]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.det().abs(), int(1));
        assert_eq!(h.det().abs(), int(2));
        assert_eq!(u.mul(&m), h);
        // echelon: below-diagonal zero
        assert!(h.at(1, 0).is_zero());
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let m = MatN::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let (u, d, v, v_inv) = smith_normal_form(&m);
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(u.det().abs(), int(1));
        assert_eq!(v.det().abs(), int(1));
        assert_eq!(v.mul(&v_inv), MatN::identity(3));
        // known invariant factors 2, 6, 12
        assert_eq!(d.at(0, 0), &int(2));
        assert_eq!(d.at(1, 1), &int(6));
        assert_eq!(d.at(2, 2), &int(12));
    }

    #[test]
    fn snf_rectangular() {
        let m = MatN::from_i64(&[&[1, 0, 0, 0], &[0, 2, 0, 0]]);
        let (u, d, v, v_inv) = smith_normal_form(&m);
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(v.mul(&v_inv), MatN::identity(4));
        assert_eq!(d.at(0, 0), &int(1));
        assert_eq!(d.at(1, 1), &int(2));
    }

    #[test]
    fn bareiss_det() {
        let m = MatN::from_i64(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        assert_eq!(m.det(), int(-90));
        let singular = MatN::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(singular.det(), int(0));
    }
}
