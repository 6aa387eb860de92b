//! The lattice `Γ` as finite data: generator automorphisms of `g`,
//! abelianization images, and an optional presentation.

use crate::error::{Error, Result};
use crate::liealg::LieAlgebraData;
use crate::scalars::eigen::{check_certificate, CertificateMode};
use crate::scalars::matrix::{fmt_vec, is_zero_vec, unit_vec, vec_sub};
use crate::scalars::{FieldElement, MatF, QuotientSpace, VecF};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeGenerator {
    pub name: String,
    /// `Ad(γ)` on `g`; `None` marks a symbolic generator whose matrix is not supplied.
    pub ad: Option<MatF>,
    /// Image in `g/g'` in the canonical complement coordinates.
    pub abelianization_image: Option<VecF>,
    /// Eigenvalues of `ad` with multiplicity, checked against its characteristic polynomial.
    pub eigenvalues: Option<VecF>,
}

impl LatticeGenerator {
    pub fn new(name: impl Into<String>, ad: MatF) -> Self {
        LatticeGenerator {
            name: name.into(),
            ad: Some(ad),
            abelianization_image: None,
            eigenvalues: None,
        }
    }

    pub fn symbolic(name: impl Into<String>) -> Self {
        LatticeGenerator {
            name: name.into(),
            ad: None,
            abelianization_image: None,
            eigenvalues: None,
        }
    }

    pub fn with_image(mut self, image: VecF) -> Self {
        self.abelianization_image = Some(image);
        self
    }

    pub fn with_eigenvalues(mut self, eigenvalues: VecF) -> Self {
        self.eigenvalues = Some(eigenvalues);
        self
    }
}

/// A finite presentation; letters are `±index` with 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl Presentation {
    /// Free abelian group on `n` generators.
    pub fn free_abelian(n: usize) -> Self {
        let mut relators = Vec::new();
        for a in 1..=n as i64 {
            for b in a + 1..=n as i64 {
                relators.push(commutator(a, b));
            }
        }
        Presentation { generators: n, relators }
    }
}

/// The word `a b a^-1 b^-1`.
pub fn commutator(a: i64, b: i64) -> Vec<i64> {
    vec![a, b, -a, -b]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub generators: Vec<LatticeGenerator>,
    pub presentation: Option<Presentation>,
    pub b1_semisimple_quotient: Option<u64>,
    pub linear_algebraic: bool,
    pub b1_manifold_override: Option<u64>,
}

impl LatticeData {
    /// Checks every supplied adjoint matrix and the presentation's size.
    pub fn validate(&self, alg: &LieAlgebraData) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::InvalidInput("lattice has no generators".into()));
        }
        for g in &self.generators {
            if let Some(m) = &g.ad {
                validate_automorphism(m, alg, &g.name)?;
                if let Some(list) = &g.eigenvalues {
                    check_certificate(&m.charpoly(), list, CertificateMode::Exact).map_err(|e| match e {
                        Error::BadEigenvalueCertificate(r) => {
                            Error::BadEigenvalueCertificate(format!("generator {}: {r}", g.name))
                        }
                        other => other,
                    })?;
                }
            }
        }
        if let Some(p) = &self.presentation {
            crate::zmodules::abelianization_rank(p.generators, &p.relators)?;
        }
        Ok(())
    }

    pub fn all_images_present(&self) -> bool {
        self.generators.iter().all(|g| g.abelianization_image.is_some())
    }
}

/// Checks that `m` is invertible and satisfies `m[e_i, e_j] = [m e_i, m e_j]`.
pub fn validate_automorphism(m: &MatF, alg: &LieAlgebraData, name: &str) -> Result<()> {
    let n = alg.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "generator {name}: adjoint matrix is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_invertible() {
        return Err(Error::SingularGenerator(name.to_string()));
    }
    let images: Vec<VecF> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.mul_vec(&alg.bracket_basis(i, j));
            let rhs = alg.bracket(&images[i], &images[j]);
            let residual = vec_sub(&lhs, &rhs);
            if !is_zero_vec(&residual) {
                return Err(Error::NotAutomorphism {
                    generator: name.to_string(),
                    i,
                    j,
                    residual: fmt_vec(&residual),
                });
            }
        }
    }
    Ok(())
}

/// Matrices induced by the generators on a quotient `sup/sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAction {
    pub dim: usize,
    /// Representatives in `g` of the quotient basis.
    pub basis: Vec<VecF>,
    pub names: Vec<String>,
    pub matrices: Vec<MatF>,
    /// Eigenvalue lists carried over from the generators, usable on restrictions.
    pub certificates: Vec<Option<VecF>>,
}

impl InducedAction {
    pub fn from_matrices(matrices: Vec<MatF>) -> Self {
        let dim = matrices.first().map_or(0, MatF::rows);
        InducedAction {
            dim,
            basis: (0..dim).map(|i| unit_vec(dim, i)).collect(),
            names: (0..matrices.len()).map(|i| format!("g{i}")).collect(),
            certificates: vec![None; matrices.len()],
            matrices,
        }
    }

    pub fn certificate(&self, i: usize) -> Option<(&[FieldElement], CertificateMode)> {
        self.certificates[i]
            .as_deref()
            .map(|c| (c, CertificateMode::SubMultiset))
    }
}

pub fn induced_quotient_action(
    alg: &LieAlgebraData,
    quotient: &QuotientSpace,
    lattice: &LatticeData,
) -> Result<InducedAction> {
    if quotient.sup.ambient() != alg.dim() {
        return Err(Error::DimensionMismatch("quotient does not live in the algebra".into()));
    }
    let q = quotient.dim();
    let mut names = Vec::new();
    let mut matrices = Vec::new();
    let mut certificates = Vec::new();
    for g in &lattice.generators {
        let Some(m) = &g.ad else {
            if q == 0 {
                continue;
            }
            return Err(Error::MissingAdjointMatrix(g.name.clone()));
        };
        if !quotient.sub.is_invariant_under(m) {
            return Err(Error::NotInvariant {
                generator: g.name.clone(),
                space: "a".into(),
            });
        }
        if !quotient.sup.is_invariant_under(m) {
            return Err(Error::NotInvariant {
                generator: g.name.clone(),
                space: "b".into(),
            });
        }
        let induced = quotient.induced(m).ok_or_else(|| Error::NotInvariant {
            generator: g.name.clone(),
            space: "b/a".into(),
        })?;
        names.push(g.name.clone());
        matrices.push(induced);
        certificates.push(g.eigenvalues.clone());
    }
    Ok(InducedAction {
        dim: q,
        basis: quotient.complement.clone(),
        names,
        matrices,
        certificates,
    })
}
