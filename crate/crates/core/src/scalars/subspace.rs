//! Subspaces of `F^n` in canonical reduced echelon form.

use std::fmt;

use super::field::FieldElement;
use super::matrix::{axpy, is_zero_vec, unit_vec, MatF, VecF};
use crate::error::{Error, Result};

/// A subspace of `F^n`. The basis rows are the nonzero rows of the reduced
/// row echelon form, so equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceF {
    ambient: usize,
    basis: Vec<VecF>,
    pivots: Vec<usize>,
}

/// Reduce `v` by a family of vectors whose leading positions are distinct.
/// Returns the coefficients used (one per family member) and the remainder.
fn reduce_by_leads(family: &[(usize, &VecF)], v: &[FieldElement]) -> (VecF, VecF) {
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&k| family[k].0);
    let mut rem = v.to_vec();
    let mut coeffs = vec![FieldElement::zero(); family.len()];
    for k in order {
        let (lead, b) = family[k];
        if rem[lead].is_zero() {
            continue;
        }
        let c = &rem[lead] / &b[lead];
        axpy(&mut rem, &-&c, b);
        coeffs[k] = c;
    }
    (coeffs, rem)
}

fn leading_position(v: &[FieldElement]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

impl SubspaceF {
    pub fn zero(ambient: usize) -> Self {
        SubspaceF {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceF {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[VecF]) -> Self {
        let nonzero: Vec<VecF> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        if nonzero.is_empty() {
            return Self::zero(ambient);
        }
        for v in &nonzero {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let (r, pivots) = MatF::from_rows(nonzero).expect("uniform rows").rref();
        SubspaceF {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i)).collect(),
            pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &MatF) -> Self {
        Self::span(m.rows(), &m.transpose().row_vectors())
    }

    pub fn kernel_of(m: &MatF) -> Self {
        Self::span(m.cols(), &m.kernel())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[VecF] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[FieldElement]) -> Option<VecF> {
        let c: VecF = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![FieldElement::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            axpy(&mut rebuilt, ci, b);
        }
        (rebuilt == v).then_some(c)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &SubspaceF) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceF) -> SubspaceF {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }

    /// Linear functionals (rows) whose common kernel is this subspace.
    pub fn annihilator(&self) -> Vec<VecF> {
        if self.is_zero() {
            return (0..self.ambient).map(|i| unit_vec(self.ambient, i)).collect();
        }
        MatF::from_rows(self.basis.clone()).unwrap().kernel()
    }

    pub fn intersection(&self, other: &SubspaceF) -> SubspaceF {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        if other.is_full() {
            return self.clone();
        }
        // x = sum a_i u_i with C x = 0 for the annihilator C of `other`
        let c = MatF::from_rows(other.annihilator()).unwrap();
        let u = MatF::from_rows(self.basis.clone()).unwrap().transpose();
        let alphas = c.mul(&u).kernel();
        let vecs: Vec<VecF> = alphas.iter().map(|a| u.mul_vec(a)).collect();
        Self::span(self.ambient, &vecs)
    }

    /// `M(V)`
    pub fn image(&self, m: &MatF) -> SubspaceF {
        let vecs: Vec<VecF> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Self::span(m.rows(), &vecs)
    }

    /// `M^{-1}(V) = ker(C M)` with `C` the annihilator of `V`.
    pub fn preimage(&self, m: &MatF) -> SubspaceF {
        if self.is_full() {
            return Self::full(m.cols());
        }
        let c = MatF::from_rows(self.annihilator()).unwrap();
        Self::kernel_of(&c.mul(m))
    }

    pub fn is_invariant_under(&self, m: &MatF) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }

    /// Matrix of `M` restricted to this (invariant) subspace in the echelon basis.
    pub fn restrict(&self, m: &MatF) -> Option<MatF> {
        let cols: Option<Vec<VecF>> = self.basis.iter().map(|b| self.coords(&m.mul_vec(b))).collect();
        Some(MatF::from_columns(self.dim(), &cols?))
    }

    /// Vector of `F^n` with the given coordinates in the echelon basis.
    pub fn lift(&self, coords: &[FieldElement]) -> VecF {
        let mut v = vec![FieldElement::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    /// Canonical complement of `self` inside `sup`: the echelon rows of `sup`
    /// whose pivots are not pivots of `self`.
    pub fn complement_in(&self, sup: &SubspaceF) -> Vec<VecF> {
        sup.basis
            .iter()
            .zip(&sup.pivots)
            .filter(|(_, p)| !self.pivots.contains(p))
            .map(|(b, _)| b.clone())
            .collect()
    }

    /// Standard basis vectors at the non-pivot coordinates.
    pub fn standard_complement(&self) -> Vec<VecF> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| unit_vec(self.ambient, c))
            .collect()
    }
}

impl fmt::Display for SubspaceF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.iter().map(|v| super::matrix::fmt_vec(v)).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// The quotient `sup / sub` with the canonical complement basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    pub sub: SubspaceF,
    pub sup: SubspaceF,
    pub complement: Vec<VecF>,
}

impl QuotientSpace {
    pub fn new(sub: &SubspaceF, sup: &SubspaceF) -> Result<Self> {
        if !sup.contains_space(sub) {
            return Err(Error::DimensionMismatch("quotient of non-nested subspaces".into()));
        }
        Ok(QuotientSpace {
            sub: sub.clone(),
            sup: sup.clone(),
            complement: sub.complement_in(sup),
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of the class of `v` (a vector of `sup`) in the complement basis.
    pub fn coords(&self, v: &[FieldElement]) -> Option<VecF> {
        let mut family: Vec<(usize, &VecF)> = Vec::new();
        for c in &self.complement {
            family.push((leading_position(c)?, c));
        }
        for (b, &p) in self.sub.basis.iter().zip(&self.sub.pivots) {
            family.push((p, b));
        }
        let (coeffs, rem) = reduce_by_leads(&family, v);
        is_zero_vec(&rem).then(|| coeffs[..self.complement.len()].to_vec())
    }

    /// Matrix induced on the quotient by `m`, which must preserve both subspaces.
    pub fn induced(&self, m: &MatF) -> Option<MatF> {
        let cols: Option<Vec<VecF>> = self.complement.iter().map(|c| self.coords(&m.mul_vec(c))).collect();
        Some(MatF::from_columns(self.dim(), &cols?))
    }

    /// Representative in `sup` of the class with the given coordinates.
    pub fn lift(&self, coords: &[FieldElement]) -> VecF {
        let mut v = vec![FieldElement::zero(); self.sup.ambient()];
        for (c, b) in coords.iter().zip(&self.complement) {
            axpy(&mut v, c, b);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> VecF {
        x.iter().map(|&a| FieldElement::from_int(a)).collect()
    }

    #[test]
    fn canonical_form() {
        let a = SubspaceF::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = SubspaceF::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_preimage() {
        let a = SubspaceF::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = SubspaceF::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), SubspaceF::span(3, &[v(&[0, 1, 0])]));
        let m = MatF::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        // m^{-1}(span(e1)) = {x : x0 = 0 and x1 = 0... } -> m x = (0, x0, x1) in span(e1) iff x1 = 0
        let pre = SubspaceF::span(3, &[v(&[0, 1, 0])]).preimage(&m);
        assert_eq!(pre, SubspaceF::span(3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]));
    }

    #[test]
    fn quotient_coordinates() {
        let sub = SubspaceF::span(3, &[v(&[0, 0, 1])]);
        let sup = SubspaceF::full(3);
        let q = QuotientSpace::new(&sub, &sup).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.coords(&v(&[2, 3, 7])).unwrap(), v(&[2, 3]));
        let m = MatF::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[5, 5, 1]]);
        assert_eq!(q.induced(&m).unwrap(), MatF::from_int_rows(&[&[0, 1], &[1, 0]]));
    }
}
