//! Dense matrices over `F`. Matrices act on column vectors: column `j` is the
//! image of the `j`-th standard basis vector.

use std::fmt;

use super::field::FieldElement;
use super::poly::PolyF;
use crate::error::{Error, Result};

pub type VecF = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatF {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

pub fn zero_vec(n: usize) -> VecF {
    vec![FieldElement::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> VecF {
    let mut v = zero_vec(n);
    v[i] = FieldElement::one();
    v
}

pub fn is_zero_vec(v: &[FieldElement]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

pub fn vec_add(u: &[FieldElement], v: &[FieldElement]) -> VecF {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[FieldElement], v: &[FieldElement]) -> VecF {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(u: &[FieldElement], s: &FieldElement) -> VecF {
    u.iter().map(|a| a * s).collect()
}

pub fn dot(u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

/// `acc += s * v`
pub fn axpy(acc: &mut [FieldElement], s: &FieldElement, v: &[FieldElement]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(s * b);
        }
    }
}

pub fn fmt_vec(v: &[FieldElement]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl MatF {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatF {
            rows,
            cols,
            data: vec![FieldElement::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::one();
        }
        m
    }

    pub fn diagonal(entries: &[FieldElement]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<VecF>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(MatF {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Square matrix from row-major rows; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn from_columns(rows: usize, columns: &[VecF]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> VecF {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vectors(&self) -> Vec<VecF> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> VecF {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn transpose(&self) -> MatF {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatF) -> MatF {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> VecF {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        (0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn add(&self, rhs: &MatF) -> MatF {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatF {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &MatF) -> MatF {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatF {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> MatF {
        self.map(|x| x * s)
    }

    pub fn map(&self, f: impl Fn(&FieldElement) -> FieldElement) -> MatF {
        MatF {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn commutator(&self, rhs: &MatF) -> MatF {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn commutes_with(&self, rhs: &MatF) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn trace(&self) -> FieldElement {
        let mut t = FieldElement::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `tr(self * rhs)` without forming the product.
    pub fn trace_product(&self, rhs: &MatF) -> FieldElement {
        let mut t = FieldElement::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, i);
                if !a.is_zero() && !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }

    pub fn pow(&self, k: usize) -> MatF {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &PolyF) -> MatF {
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.data[i * n + i] += c;
            }
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (MatF, Vec<usize>) {
        // rows are inserted one at a time into a fully reduced basis sorted by pivot
        let mut basis: Vec<(usize, VecF)> = Vec::new();
        for i in 0..self.rows {
            if basis.len() == self.cols {
                break;
            }
            let mut v = self.row(i);
            for (p, b) in &basis {
                if !v[*p].is_zero() {
                    let c = -&v[*p];
                    axpy(&mut v, &c, b);
                }
            }
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            let inv = v[lead].inv().unwrap();
            for x in v.iter_mut().skip(lead) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for (_, b) in basis.iter_mut() {
                if !b[lead].is_zero() {
                    let c = -&b[lead];
                    axpy(b, &c, &v);
                }
            }
            let at = basis.partition_point(|(p, _)| *p < lead);
            basis.insert(at, (lead, v));
        }
        let mut m = Self::zeros(self.rows, self.cols);
        for (r, (_, b)) in basis.iter().enumerate() {
            for (j, x) in b.iter().enumerate() {
                m.set(r, j, x.clone());
            }
        }
        (m, basis.into_iter().map(|(p, _)| p).collect())
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<VecF> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = FieldElement::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// A solution of `self x = b` (free variables set to zero), if one exists.
    pub fn solve(&self, b: &[FieldElement]) -> Option<VecF> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<MatF> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, FieldElement::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(x I - self)` (Faddeev-LeVerrier).
    pub fn charpoly(&self) -> PolyF {
        assert!(self.is_square(), "charpoly of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![FieldElement::zero(); n + 1];
        coeffs[n] = FieldElement::one();
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
            let mut next = self.mul(&mk);
            for i in 0..n {
                next.data[i * n + i] += &coeffs[n - k + 1];
            }
            mk = next;
            let t = self.trace_product(&mk);
            coeffs[n - k] = -(&t / &FieldElement::from_int(k as i64));
        }
        PolyF::new(coeffs)
    }

    /// Rows rendered as canonical field-element strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| fmt_vec(&self.row(i))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
