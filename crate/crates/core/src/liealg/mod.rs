//! Finite-dimensional Lie algebras over `F` given by structure constants, and
//! their structure theory.

mod ideals;
mod levi;
mod simple;
mod structure;

pub use ideals::{characteristic_ideals, CharacteristicIdeals};
pub use levi::levi_subalgebra;
pub use simple::{simple_ideal_decomposition, IdealBlock, SimpleDecomposition};
pub use structure::{structure_report, StructureReport};

use crate::error::{Error, Result};
use crate::scalars::matrix::{axpy, fmt_vec, is_zero_vec, unit_vec};
use crate::scalars::{FieldElement, MatF, SubspaceF, VecF};

/// Structure constants `[e_i, e_j] = sum_k c_ij^k e_k`, stored as a full
/// antisymmetric table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    dim: usize,
    basis: Vec<String>,
    d: u64,
    table: Vec<FieldElement>,
}

impl LieAlgebraData {
    pub fn abelian(d: u64, dim: usize) -> Self {
        let basis = (0..dim).map(|i| format!("e{i}")).collect();
        LieAlgebraData {
            dim,
            basis,
            d,
            table: vec![FieldElement::zero(); dim * dim * dim],
        }
    }

    /// Builds the table from triples `(i, j, k, c)` with `i < j`; omitted triples
    /// are zero and repeated triples accumulate.
    pub fn from_brackets(d: u64, basis: Vec<String>, brackets: &[(usize, usize, usize, FieldElement)]) -> Result<Self> {
        let dim = basis.len();
        let mut alg = LieAlgebraData {
            dim,
            basis,
            d,
            table: vec![FieldElement::zero(); dim * dim * dim],
        };
        for (i, j, k, c) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= j || j >= dim || k >= dim {
                return Err(Error::BadBracket { i, j, k });
            }
            let idx = alg.index(i, j, k);
            alg.table[idx] += c;
            let idx = alg.index(j, i, k);
            alg.table[idx] -= c;
        }
        Ok(alg)
    }

    /// Labels `e0, e1, ...` with the given triples.
    pub fn from_triples(d: u64, dim: usize, brackets: &[(usize, usize, usize, FieldElement)]) -> Result<Self> {
        Self::from_brackets(d, (0..dim).map(|i| format!("e{i}")).collect(), brackets)
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn field_d(&self) -> u64 {
        self.d
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.table[self.index(i, j, k)]
    }

    /// Nonzero triples with `i < j`, in lexicographic order.
    pub fn brackets(&self) -> Vec<(usize, usize, usize, FieldElement)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(FieldElement::is_zero)
    }

    /// `[e_i, e_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> VecF {
        let start = self.index(i, j, 0);
        self.table[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, u: &[FieldElement], v: &[FieldElement]) -> VecF {
        let n = self.dim;
        let mut out = vec![FieldElement::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let start = self.index(i, j, 0);
                let row = &self.table[start..start + n];
                if is_zero_vec(row) {
                    continue;
                }
                axpy(&mut out, &(ui * vj), row);
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[FieldElement]) -> MatF {
        let cols: Vec<VecF> = (0..self.dim).map(|j| self.bracket(x, &unit_vec(self.dim, j))).collect();
        MatF::from_columns(self.dim, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> MatF {
        self.ad(&unit_vec(self.dim, i))
    }

    /// Gram matrix of the Killing form `tr(ad e_i ad e_j)`.
    pub fn killing_matrix(&self) -> MatF {
        let ads: Vec<MatF> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = MatF::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let v = ads[i].trace_product(&ads[j]);
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                    let mut r = self.bracket(&ei, &self.bracket_basis(j, k));
                    let a = self.bracket(&ej, &self.bracket_basis(k, i));
                    let b = self.bracket(&ek, &self.bracket_basis(i, j));
                    axpy(&mut r, &FieldElement::one(), &a);
                    axpy(&mut r, &FieldElement::one(), &b);
                    if !is_zero_vec(&r) {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            residual: fmt_vec(&r),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[U, V]` as a subspace.
    pub fn bracket_spaces(&self, u: &SubspaceF, v: &SubspaceF) -> SubspaceF {
        let mut vecs = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                let c = self.bracket(a, b);
                if !is_zero_vec(&c) {
                    vecs.push(c);
                }
            }
        }
        SubspaceF::span(self.dim, &vecs)
    }

    pub fn full(&self) -> SubspaceF {
        SubspaceF::full(self.dim)
    }

    pub fn derived(&self) -> SubspaceF {
        let g = self.full();
        self.bracket_spaces(&g, &g)
    }

    pub fn is_ideal(&self, u: &SubspaceF) -> bool {
        let g = self.full();
        u.contains_space(&self.bracket_spaces(&g, u))
    }

    pub fn is_subalgebra(&self, u: &SubspaceF) -> bool {
        u.contains_space(&self.bracket_spaces(u, u))
    }

    /// Whether `u` is a solvable subalgebra.
    pub fn is_solvable_subalgebra(&self, u: &SubspaceF) -> bool {
        let mut cur = u.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_spaces(&cur, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Whether `u` is a nilpotent subalgebra (lower central series of `u` reaches 0).
    pub fn is_nilpotent_subalgebra(&self, u: &SubspaceF) -> bool {
        let mut cur = u.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_spaces(u, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Structure constants of a subalgebra in its echelon basis.
    pub fn subalgebra(&self, s: &SubspaceF) -> Result<LieAlgebraData> {
        let b = s.basis();
        let mut triples = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let c = s.coords(&self.bracket(&b[i], &b[j])).ok_or(Error::NotSubalgebra)?;
                for (k, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        triples.push((i, j, k, x));
                    }
                }
            }
        }
        Self::from_triples(self.d, b.len(), &triples)
    }

    /// Structure constants in the basis `f_j = sum_i T_ij e_i` (columns of `t`).
    pub fn change_basis(&self, t: &MatF) -> Result<LieAlgebraData> {
        let n = self.dim;
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch(format!("basis change must be {n}x{n}")));
        }
        let tinv = t.inverse()?;
        let cols: Vec<VecF> = (0..n).map(|j| t.column(j)).collect();
        let mut triples = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let c = tinv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                for (k, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        triples.push((a, b, k, x));
                    }
                }
            }
        }
        let basis = (0..n).map(|i| format!("f{i}")).collect();
        Self::from_brackets(self.d, basis, &triples)
    }
}

#[cfg(test)]
pub(crate) mod testalg {
    use super::*;

    pub fn f(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    pub fn heisenberg() -> LieAlgebraData {
        LieAlgebraData::from_brackets(1, vec!["x".into(), "y".into(), "z".into()], &[(0, 1, 2, f(1))]).unwrap()
    }

    /// Basis (h, e, f).
    pub fn sl2() -> LieAlgebraData {
        LieAlgebraData::from_brackets(
            1,
            vec!["h".into(), "e".into(), "f".into()],
            &[(0, 1, 1, f(2)), (0, 2, 2, f(-2)), (1, 2, 0, f(1))],
        )
        .unwrap()
    }

    /// Basis (t, x, y) with `[t,x] = x`, `[t,y] = -y`.
    pub fn solv3() -> LieAlgebraData {
        LieAlgebraData::from_brackets(
            2,
            vec!["t".into(), "x".into(), "y".into()],
            &[(0, 1, 1, f(1)), (0, 2, 2, f(-1))],
        )
        .unwrap()
    }

    /// sl2 acting on C^2: basis (h, e, f, v0, v1).
    pub fn sl2_ltimes_c2() -> LieAlgebraData {
        LieAlgebraData::from_triples(
            1,
            5,
            &[
                (0, 1, 1, f(2)),
                (0, 2, 2, f(-2)),
                (1, 2, 0, f(1)),
                (0, 3, 3, f(1)),
                (0, 4, 4, f(-1)),
                (1, 4, 3, f(1)),
                (2, 3, 4, f(1)),
            ],
        )
        .unwrap()
    }

    /// Direct sum of two algebras.
    pub fn direct_sum(a: &LieAlgebraData, b: &LieAlgebraData) -> LieAlgebraData {
        let off = a.dim();
        let mut triples = a.brackets();
        for (i, j, k, c) in b.brackets() {
            triples.push((i + off, j + off, k + off, c));
        }
        LieAlgebraData::from_triples(a.field_d().max(b.field_d()), off + b.dim(), &triples).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testalg::*;
    use super::*;

    #[test]
    fn jacobi_examples() {
        assert!(LieAlgebraData::abelian(1, 3).validate().is_ok());
        assert!(heisenberg().validate().is_ok());
        assert!(sl2().validate().is_ok());
        assert!(sl2_ltimes_c2().validate().is_ok());
        // [x,y] = y, [y,z] = x, [x,z] = 0 violates Jacobi
        let bad = LieAlgebraData::from_triples(1, 3, &[(0, 1, 1, f(1)), (1, 2, 0, f(1))]).unwrap();
        assert!(matches!(bad.validate(), Err(Error::JacobiViolation { i: 0, j: 1, k: 2, .. })));
    }

    #[test]
    fn bad_bracket_indices() {
        assert_eq!(
            LieAlgebraData::from_triples(1, 2, &[(1, 0, 0, f(1))]),
            Err(Error::BadBracket { i: 1, j: 0, k: 0 })
        );
    }

    #[test]
    fn killing_form_of_sl2() {
        let k = sl2().killing_matrix();
        assert_eq!(k, MatF::from_int_rows(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
    }
}
