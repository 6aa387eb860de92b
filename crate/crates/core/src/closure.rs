//! Closures of finitely generated subgroups of `C^k` with coordinates in `F`,
//! and the Albanese dimension.
//!
//! A complex vector is split into real coordinates `(Re z_1, Im z_1, Re z_2, ...)`,
//! each an element of `Q(sqrt d)`. For generators `v_1..v_m` with real span `S`,
//! let `K ⊂ R^m` be the space of real linear relations and `L = Z^m ∩ K^⊥` the
//! integral characters vanishing on `K`. The closure of `Z v_1 + ... + Z v_m`
//! is `H_0 ⊕ (discrete part)` where `H_0` is the image of `L^⊥` (dimension
//! `dim S - rank L`) and the discrete part has rank `rank L`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::matrix::{axpy, unit_vec};
use crate::scalars::{FieldElement, MatF, QuotientSpace, SubspaceF, VecF, Q};
use crate::zmodules::{saturate, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSubgroupDescription {
    /// `k`, the complex dimension of the ambient space.
    pub complex_dim: usize,
    /// Identity component as a real subspace of `R^{2k}` (split coordinates).
    pub identity_component: SubspaceF,
    pub discrete_rank: usize,
    /// Real vectors of `R^{2k}` generating the closure modulo the identity component.
    pub discrete_generators: Vec<VecF>,
    /// Smallest complex subspace of `C^k` containing the identity component.
    pub complex_core: SubspaceF,
}

/// `(z_1, ..., z_k) -> (Re z_1, Im z_1, ..., Re z_k, Im z_k)`
pub fn split_real(v: &[FieldElement]) -> VecF {
    v.iter().flat_map(|z| [z.real_part(), z.imag_part()]).collect()
}

/// Inverse of [`split_real`].
pub fn complexify(v: &[FieldElement]) -> VecF {
    v.chunks(2)
        .map(|p| &p[0] + &(&FieldElement::i() * &p[1]))
        .collect()
}

/// Rational and `sqrt d` parts of a real vector.
fn split_sqrt(v: &[FieldElement]) -> (VecF, VecF) {
    let mut p = Vec::with_capacity(v.len());
    let mut q = Vec::with_capacity(v.len());
    for x in v {
        let (a, b, _, _) = x.coefficients();
        p.push(FieldElement::from_rational(a.clone()));
        q.push(FieldElement::from_rational(b.clone()));
    }
    (p, q)
}

/// Integer multiple of a rational vector with no common denominator.
fn integral_row(v: &[FieldElement]) -> Vec<BigInt> {
    let rats: Vec<&Q> = v.iter().map(|x| x.as_rational().expect("rational vector")).collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    rats.iter()
        .map(|r| (*r * Q::from_integer(den.clone())).to_integer())
        .collect()
}

pub fn subgroup_closure(complex_dim: usize, vectors: &[VecF]) -> Result<ClosedSubgroupDescription> {
    for v in vectors {
        if v.len() != complex_dim {
            return Err(Error::DimensionMismatch(format!(
                "closure generator of length {} in C^{complex_dim}",
                v.len()
            )));
        }
    }
    let n = 2 * complex_dim;
    let m = vectors.len();
    let reals: Vec<VecF> = vectors.iter().map(|v| split_real(v)).collect();
    if m == 0 {
        return Ok(ClosedSubgroupDescription {
            complex_dim,
            identity_component: SubspaceF::zero(n),
            discrete_rank: 0,
            discrete_generators: Vec::new(),
            complex_core: SubspaceF::zero(complex_dim),
        });
    }
    let vmat = MatF::from_columns(n, &reals);
    let span_dim = vmat.rank();
    // rational constraints: l . p = 0 and l . q = 0 for every relation p + sqrt(d) q
    let mut constraint_rows: Vec<VecF> = Vec::new();
    for rel in vmat.kernel() {
        let (p, q) = split_sqrt(&rel);
        for row in [p, q] {
            if row.iter().any(|x| !x.is_zero()) {
                constraint_rows.push(row);
            }
        }
    }
    let rational_chars: Vec<VecF> = if constraint_rows.is_empty() {
        (0..m).map(|i| unit_vec(m, i)).collect()
    } else {
        MatF::from_rows(constraint_rows)?.kernel()
    };
    let lattice = if rational_chars.is_empty() {
        IntMatrix::zeros(0, m)
    } else {
        let rows: Vec<Vec<BigInt>> = rational_chars.iter().map(|v| integral_row(v)).collect();
        saturate(&IntMatrix::from_rows(m, &rows))
    };
    let rank = lattice.rows();
    let lmat = MatF::from_rows(
        (0..rank)
            .map(|i| lattice.row(i).into_iter().map(FieldElement::from_bigint).collect())
            .collect(),
    )
    .unwrap_or_else(|_| MatF::zeros(0, m));
    let perp: Vec<VecF> = if rank == 0 {
        (0..m).map(|i| unit_vec(m, i)).collect()
    } else {
        lmat.kernel()
    };
    let h0_vecs: Vec<VecF> = perp.iter().map(|c| vmat.mul_vec(c)).collect();
    let identity_component = SubspaceF::span(n, &h0_vecs);
    debug_assert_eq!(identity_component.dim() + rank, span_dim);
    let mut discrete_generators = Vec::with_capacity(rank);
    for j in 0..rank {
        let c = lmat.solve(&unit_vec(rank, j)).expect("saturated lattice rows are independent");
        discrete_generators.push(vmat.mul_vec(&c));
    }
    let complex_core = SubspaceF::span(
        complex_dim,
        &identity_component.basis().iter().map(|h| complexify(h)).collect::<Vec<_>>(),
    );
    Ok(ClosedSubgroupDescription {
        complex_dim,
        identity_component,
        discrete_rank: rank,
        discrete_generators,
        complex_core,
    })
}

impl ClosedSubgroupDescription {
    /// Complex vectors whose generated subgroup has this closure: each identity
    /// component basis vector `h` together with `sqrt(d) h`, plus the discrete generators.
    pub fn generating_set(&self, d: u64) -> Vec<VecF> {
        let r = FieldElement::sqrt_d(d.max(2));
        let mut out = Vec::new();
        for h in self.identity_component.basis() {
            out.push(complexify(h));
            out.push(complexify(&h.iter().map(|x| x * &r).collect::<Vec<_>>()));
        }
        for g in &self.discrete_generators {
            out.push(complexify(g));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlbaneseReport {
    pub albanese_dim: usize,
    pub lattice_rank: usize,
    pub flags: Vec<String>,
}

pub const FLAG_RANK_DEFICIENT: &str = "DISCRETE_RANK_BELOW_TWICE_DIMENSION";

/// Quotient by the complex span of the closure's identity component until the
/// image closure is discrete; the remaining complex dimension is the Albanese
/// dimension.
pub fn albanese_dimension(complex_dim: usize, images: &[VecF]) -> Result<AlbaneseReport> {
    let mut k = complex_dim;
    let mut current: Vec<VecF> = images.to_vec();
    loop {
        let desc = subgroup_closure(k, &current)?;
        if desc.identity_component.is_zero() || k == 0 {
            let mut flags = Vec::new();
            if desc.discrete_rank < 2 * k {
                flags.push(FLAG_RANK_DEFICIENT.to_string());
            }
            return Ok(AlbaneseReport {
                albanese_dim: k,
                lattice_rank: desc.discrete_rank,
                flags,
            });
        }
        let q = QuotientSpace::new(&desc.complex_core, &SubspaceF::full(k))?;
        current = current
            .iter()
            .map(|v| q.coords(v).expect("full ambient"))
            .collect();
        k = q.dim();
    }
}

/// Image of `z` in `g/g'` coordinates summed over the generator list; helper for
/// callers that want the images as a matrix.
pub fn images_matrix(k: usize, images: &[VecF]) -> MatF {
    let mut cols = Vec::new();
    for v in images {
        let mut c = vec![FieldElement::zero(); k];
        axpy(&mut c, &FieldElement::one(), v);
        cols.push(c);
    }
    MatF::from_columns(k, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        FieldElement::parse(s, 2).unwrap()
    }

    fn closure(vals: &[&str]) -> ClosedSubgroupDescription {
        let vecs: Vec<VecF> = vals.iter().map(|s| vec![fe(s)]).collect();
        subgroup_closure(1, &vecs).unwrap()
    }

    fn idempotent(c: &ClosedSubgroupDescription) {
        let again = subgroup_closure(c.complex_dim, &c.generating_set(2)).unwrap();
        assert_eq!(again.identity_component, c.identity_component);
        assert_eq!(again.discrete_rank, c.discrete_rank);
    }

    #[test]
    fn gaussian_lattice_is_discrete() {
        let c = closure(&["1", "i"]);
        assert!(c.identity_component.is_zero());
        assert_eq!(c.discrete_rank, 2);
        idempotent(&c);
    }

    #[test]
    fn dense_line() {
        let c = closure(&["1", "r"]);
        assert_eq!(c.identity_component.dim(), 1);
        assert_eq!(c.discrete_rank, 0);
        assert_eq!(c.complex_core.dim(), 1);
        idempotent(&c);
    }

    #[test]
    fn line_plus_lattice() {
        let c = closure(&["1", "i", "r"]);
        assert_eq!(c.identity_component.dim(), 1);
        assert_eq!(c.discrete_rank, 1);
        idempotent(&c);
    }

    #[test]
    fn albanese_examples() {
        let imgs: Vec<VecF> = ["1", "i", "r"].iter().map(|s| vec![fe(s)]).collect();
        assert_eq!(albanese_dimension(1, &imgs).unwrap().albanese_dim, 0);
        let imgs = vec![vec![fe("1"), fe("0")], vec![fe("i"), fe("0")], vec![fe("0"), fe("1")], vec![fe("0"), fe("i")]];
        let a = albanese_dimension(2, &imgs).unwrap();
        assert_eq!((a.albanese_dim, a.lattice_rank), (2, 4));
        assert!(a.flags.is_empty());
        let a = albanese_dimension(1, &[vec![fe("1")]]).unwrap();
        assert_eq!(a.flags, vec![FLAG_RANK_DEFICIENT.to_string()]);
    }
}
