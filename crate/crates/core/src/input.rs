//! The analysis input file: field, Lie algebra, lattice data, and options.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LatticeData, LatticeGenerator, Presentation};
use crate::liealg::LieAlgebraData;
use crate::scalars::{FieldDescriptor, FieldElement, MatF, QuotientSpace, SubspaceF, VecF};

pub const DEFAULT_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisInput {
    pub field: FieldDescriptor,
    pub algebra: LieAlgebraData,
    pub lattice: LatticeData,
    pub depth: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    field: RawField,
    lie_algebra: RawAlgebra,
    lattice: RawLattice,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    d: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLattice {
    generators: Vec<RawGenerator>,
    #[serde(default)]
    presentation: Option<RawPresentation>,
    #[serde(default)]
    b1_semisimple_quotient: Option<u64>,
    #[serde(default)]
    linear_algebraic: bool,
    #[serde(default)]
    b1_manifold_override: Option<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    name: String,
    #[serde(default)]
    ad: Option<Vec<Vec<String>>>,
    #[serde(default)]
    abelianization_image: Option<Vec<String>>,
    #[serde(default)]
    eigenvalues: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    generators: usize,
    relators: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default = "default_depth")]
    depth: usize,
}

impl Default for RawOptions {
    fn default() -> Self {
        RawOptions { depth: DEFAULT_DEPTH }
    }
}

fn default_depth() -> usize {
    DEFAULT_DEPTH
}

fn parse_at(s: &str, d: u64, path: &str) -> Result<FieldElement> {
    FieldElement::parse(s, d).map_err(|e| match e {
        Error::Parse { input, reason, .. } => Error::Parse {
            what: path.to_string(),
            input,
            reason,
        },
        other => other,
    })
}

fn parse_list(list: &[String], d: u64, path: &str) -> Result<VecF> {
    list.iter()
        .enumerate()
        .map(|(i, s)| parse_at(s, d, &format!("{path}[{i}]")))
        .collect()
}

impl AnalysisInput {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawInput =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("analysis input JSON: {e}")))?;
        let field = FieldDescriptor::new(raw.field.d)?;
        let d = field.d;
        let n = raw.lie_algebra.dim;
        let basis = raw
            .lie_algebra
            .basis
            .unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        if basis.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "lie_algebra.basis has {} labels for dimension {n}",
                basis.len()
            )));
        }
        let mut brackets = Vec::new();
        for (idx, b) in raw.lie_algebra.brackets.iter().enumerate() {
            let c = parse_at(&b.c, d, &format!("lie_algebra.brackets[{idx}].c"))?;
            brackets.push((b.i, b.j, b.k, c));
        }
        let algebra = LieAlgebraData::from_brackets(d, basis, &brackets)?;
        let mut generators = Vec::new();
        for (gi, g) in raw.lattice.generators.iter().enumerate() {
            let path = format!("lattice.generators[{gi}] ({})", g.name);
            let ad = match &g.ad {
                None => None,
                Some(rows) => {
                    let parsed: Vec<VecF> = rows
                        .iter()
                        .enumerate()
                        .map(|(r, row)| parse_list(row, d, &format!("{path}.ad[{r}]")))
                        .collect::<Result<_>>()?;
                    if parsed.len() != n || parsed.iter().any(|r| r.len() != n) {
                        return Err(Error::DimensionMismatch(format!("{path}.ad must be {n}x{n}")));
                    }
                    Some(MatF::from_rows(parsed)?)
                }
            };
            let image = g
                .abelianization_image
                .as_ref()
                .map(|v| parse_list(v, d, &format!("{path}.abelianization_image")))
                .transpose()?;
            let eigenvalues = g
                .eigenvalues
                .as_ref()
                .map(|v| parse_list(v, d, &format!("{path}.eigenvalues")))
                .transpose()?;
            generators.push(LatticeGenerator {
                name: g.name.clone(),
                ad,
                abelianization_image: image,
                eigenvalues,
            });
        }
        let lattice = LatticeData {
            generators,
            presentation: raw.lattice.presentation.map(|p| Presentation {
                generators: p.generators,
                relators: p.relators,
            }),
            b1_semisimple_quotient: raw.lattice.b1_semisimple_quotient,
            linear_algebraic: raw.lattice.linear_algebraic,
            b1_manifold_override: raw.lattice.b1_manifold_override,
        };
        if raw.options.depth == 0 {
            return Err(Error::InvalidInput("options.depth must be at least 1".into()));
        }
        Ok(AnalysisInput {
            field,
            algebra,
            lattice,
            depth: raw.options.depth,
        })
    }

    pub fn to_json(&self) -> String {
        let strs = |v: &VecF| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let raw = RawInput {
            field: RawField { d: self.field.d },
            lie_algebra: RawAlgebra {
                dim: self.algebra.dim(),
                basis: Some(self.algebra.basis().to_vec()),
                brackets: self
                    .algebra
                    .brackets()
                    .into_iter()
                    .map(|(i, j, k, c)| RawBracket { i, j, k, c: c.to_string() })
                    .collect(),
            },
            lattice: RawLattice {
                generators: self
                    .lattice
                    .generators
                    .iter()
                    .map(|g| RawGenerator {
                        name: g.name.clone(),
                        ad: g.ad.as_ref().map(|m| m.row_vectors().iter().map(strs).collect()),
                        abelianization_image: g.abelianization_image.as_ref().map(strs),
                        eigenvalues: g.eigenvalues.as_ref().map(strs),
                    })
                    .collect(),
                presentation: self.lattice.presentation.as_ref().map(|p| RawPresentation {
                    generators: p.generators,
                    relators: p.relators.clone(),
                }),
                b1_semisimple_quotient: self.lattice.b1_semisimple_quotient,
                linear_algebraic: self.lattice.linear_algebraic,
                b1_manifold_override: self.lattice.b1_manifold_override,
            },
            options: RawOptions { depth: self.depth },
        };
        serde_json::to_string_pretty(&raw).expect("input serializes")
    }

    /// The same manifold described in the basis `f_j = sum_i T_ij e_i`.
    pub fn change_basis(&self, t: &MatF) -> Result<AnalysisInput> {
        let algebra = self.algebra.change_basis(t)?;
        let tinv = t.inverse()?;
        let old_q = QuotientSpace::new(&self.algebra.derived(), &SubspaceF::full(self.algebra.dim()))?;
        let new_q = QuotientSpace::new(&algebra.derived(), &SubspaceF::full(algebra.dim()))?;
        let mut generators = Vec::new();
        for g in &self.lattice.generators {
            let ad = g.ad.as_ref().map(|m| tinv.mul(m).mul(t));
            let image = match &g.abelianization_image {
                None => None,
                Some(c) => {
                    if c.len() != old_q.dim() {
                        return Err(Error::DimensionMismatch(format!(
                            "generator {}: abelianization_image has length {}, expected {}",
                            g.name,
                            c.len(),
                            old_q.dim()
                        )));
                    }
                    let v = tinv.mul_vec(&old_q.lift(c));
                    Some(new_q.coords(&v).expect("full quotient"))
                }
            };
            generators.push(LatticeGenerator {
                name: g.name.clone(),
                ad,
                abelianization_image: image,
                eigenvalues: g.eigenvalues.clone(),
            });
        }
        Ok(AnalysisInput {
            field: self.field,
            algebra,
            lattice: LatticeData {
                generators,
                ..self.lattice.clone()
            },
            depth: self.depth,
        })
    }
}
