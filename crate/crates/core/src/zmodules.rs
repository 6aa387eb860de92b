//! Integer matrices: Smith and Hermite normal forms, saturation, and
//! abelianizations of finitely presented groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// `cols` must be given explicitly so that zero-row matrices keep their width.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            for (j, x) in r.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "integer matrix product dimensions");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[i] += c * row[j]`
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(j, k) * c;
            self.data[i * self.cols + k] += v;
        }
    }

    /// `col[i] += c * col[j]`
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.rows {
            let v = self.get(k, j) * c;
            self.data[k * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -self.get(i, k);
            self.set(i, k, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let v = -self.get(k, j);
            self.set(k, j, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `A = U * D * V` with `U`, `V` unimodular and `D` diagonal with `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `D`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    // Row ops on D are undone on the columns of U; column ops on the rows of V.
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_rows(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t) / d.get(t, t);
                d.add_row(i, t, &-&q);
                u.add_col(t, i, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j) / d.get(t, t);
                d.add_col(j, t, &-&q);
                v.add_row(t, j, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                let pivot = d.get(t, t).clone();
                let offending = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
                match offending {
                    None => break,
                    Some(i) => {
                        d.add_row(t, i, &BigInt::one());
                        u.add_col(i, t, &-BigInt::one());
                    }
                }
            }
            let Some((pi, pj)) = min_entry_cross(&d, t) else { break };
            if (pi, pj) != (t, t) {
                d.swap_rows(t, pi);
                u.swap_cols(t, pi);
                d.swap_cols(t, pj);
                v.swap_rows(t, pj);
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_col(t);
        }
        t += 1;
    }
    SmithDecomposition { u, d, v }
}

/// Position of a nonzero entry of least absolute value in the block `[t.., t..]`.
fn min_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Least nonzero entry in row `t` and column `t` (from `t` on), preferring the pivot.
fn min_entry_cross(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best = (!d.get(t, t).is_zero()).then_some((t, t));
    let cells = (t + 1..d.rows).map(|i| (i, t)).chain((t + 1..d.cols).map(|j| (t, j)));
    for (i, j) in cells {
        let x = d.get(i, j);
        if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
            best = Some((i, j));
        }
    }
    best
}

/// Row-style Hermite normal form of the row lattice: zero rows dropped, pivots
/// positive, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        // Euclid down the column below row r
        loop {
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).abs())
            else {
                break;
            };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let q = m.get(i, c).div_floor(m.get(r, c));
                m.add_row(i, r, &-q);
                if !m.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m.get(r, c).is_zero() {
            continue;
        }
        if m.get(r, c).is_negative() {
            m.negate_row(r);
        }
        for i in 0..r {
            let q = m.get(i, c).div_floor(m.get(r, c));
            if !q.is_zero() {
                m.add_row(i, r, &-q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rows: Vec<Vec<BigInt>> = (0..r).map(|i| m.row(i)).collect();
    IntMatrix::from_rows(m.cols, &rows)
}

/// Basis (in Hermite form) of the saturation `Q-span(rows) ∩ Z^n` of a row lattice.
pub fn saturate(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let k = snf.rank();
    let rows: Vec<Vec<BigInt>> = (0..k).map(|i| snf.v.row(i)).collect();
    hermite_normal_form(&IntMatrix::from_rows(a.cols, &rows))
}

/// Free rank and torsion coefficients (> 1) of the abelianization of
/// `<g_1, ..., g_n | relators>`. Words are sequences of `±index`, 1-based.
pub fn abelianization_rank(generator_count: usize, relators: &[Vec<i64>]) -> Result<(usize, Vec<BigInt>)> {
    let mut rows = Vec::with_capacity(relators.len());
    for (w, word) in relators.iter().enumerate() {
        let mut row = vec![BigInt::zero(); generator_count];
        for &letter in word {
            let idx = letter.unsigned_abs() as usize;
            if letter == 0 || idx > generator_count {
                return Err(Error::MalformedWord {
                    word: w,
                    reason: format!("letter {letter} outside ±1..±{generator_count}"),
                });
            }
            row[idx - 1] += letter.signum();
        }
        rows.push(row);
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(generator_count, &rows));
    let divisors = snf.elementary_divisors();
    let torsion = divisors.iter().filter(|x| !x.is_one()).cloned().collect();
    Ok((generator_count - divisors.len(), torsion))
}
