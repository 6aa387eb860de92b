//! `W`, `dim H^1(X, O)`, `b_1(X)`, the rigidity verdict, and cross-checks.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::closure::{albanese_dimension, AlbaneseReport};
use crate::error::{Error, Result};
use crate::input::AnalysisInput;
use crate::lattice::{induced_quotient_action, InducedAction, LatticeData};
use crate::liealg::{characteristic_ideals, levi_subalgebra, simple_ideal_decomposition, structure_report};
use crate::scalars::eigen::{real_eigenspace_sum_with, CertificateMode};
use crate::scalars::{is_real_semisimple, MatF, QuotientSpace, SubspaceF, VecF};
use crate::zmodules::abelianization_rank;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WCertification {
    /// Restricted generators commute and are real-semisimple, so every group element is.
    CertifiedCommuting,
    /// Every word of length at most the depth was checked.
    CheckedToDepth,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WResult {
    pub space: SubspaceF,
    pub certification: WCertification,
    /// Word length bound for `CheckedToDepth`.
    pub depth: Option<usize>,
    /// Words (letters `±(index + 1)`) that failed on an intermediate `W` and were
    /// added to the constraint set.
    pub added_words: Vec<Vec<i64>>,
}

impl WResult {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

struct Constraint {
    m: MatF,
    inv: MatF,
    cert: Option<VecF>,
}

/// Largest subspace invariant under all constraints (and their inverses) on
/// which each constraint is semisimple with real eigenvalues.
///
/// Constraints are applied one at a time so that later ones (words) only see
/// what earlier ones left. A constraint whose eigenvalues cannot be located in
/// `F` is retried on the smaller space; the error stands only if nothing else
/// shrinks `W`.
fn greatest_fixed_point(constraints: &[Constraint], q: usize, d: u64) -> Result<SubspaceF> {
    let mut w = SubspaceF::full(q);
    loop {
        let before = w.clone();
        let mut deferred = None;
        for c in constraints {
            if w.is_zero() {
                return Ok(w);
            }
            let r = w.restrict(&c.m).expect("W is invariant");
            let cert = c.cert.as_deref().map(|l| (l, CertificateMode::SubMultiset));
            let es = match real_eigenspace_sum_with(&r, d, cert) {
                Ok(es) => es,
                Err(e @ Error::ScalarFieldTooSmall { .. }) => {
                    deferred.get_or_insert(e);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let lifted: Vec<VecF> = es.basis().iter().map(|v| w.lift(v)).collect();
            w = invariant_core(SubspaceF::span(q, &lifted), constraints);
        }
        if w == before {
            return match deferred {
                Some(e) => Err(e),
                None => Ok(w),
            };
        }
    }
}

fn invariant_core(mut v: SubspaceF, constraints: &[Constraint]) -> SubspaceF {
    loop {
        let mut next = v.clone();
        for c in constraints {
            next = next.intersection(&v.preimage(&c.m)).intersection(&v.preimage(&c.inv));
        }
        if next == v {
            return v;
        }
        v = next;
    }
}

/// First word of length `<= depth` in the generators and their inverses whose
/// restriction is not real-semisimple, breadth first.
fn failing_word(restricted: &[MatF], depth: usize) -> Result<Option<Vec<i64>>> {
    let Some(first) = restricted.first() else {
        return Ok(None);
    };
    let mut letters: Vec<(i64, MatF)> = Vec::new();
    for (i, r) in restricted.iter().enumerate() {
        let inv = r.inverse()?;
        letters.push((i as i64 + 1, r.clone()));
        letters.push((-(i as i64 + 1), inv));
    }
    let id = MatF::identity(first.rows());
    let mut seen: HashSet<MatF> = HashSet::from([id.clone()]);
    let mut frontier: Vec<(Vec<i64>, MatF)> = vec![(Vec::new(), id)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (word, m) in &frontier {
            for (l, lm) in &letters {
                if word.last() == Some(&-l) {
                    continue;
                }
                let nm = m.mul(lm);
                if !seen.insert(nm.clone()) {
                    continue;
                }
                let mut nw = word.clone();
                nw.push(*l);
                if !is_real_semisimple(&nm)? {
                    return Ok(Some(nw));
                }
                next.push((nw, nm));
            }
        }
        frontier = next;
    }
    Ok(None)
}

fn word_matrix(word: &[i64], mats: &[MatF], invs: &[MatF]) -> MatF {
    let mut m = MatF::identity(mats[0].rows());
    for &l in word {
        let idx = l.unsigned_abs() as usize - 1;
        m = m.mul(if l > 0 { &mats[idx] } else { &invs[idx] });
    }
    m
}

/// Greatest fixed point `W` of the real-semisimplicity condition for the
/// induced action, with its certification tier.
pub fn compute_w(action: &InducedAction, d: u64, depth: usize) -> Result<WResult> {
    if depth == 0 {
        return Err(Error::InvalidInput("depth must be at least 1".into()));
    }
    let q = action.dim;
    let mats = &action.matrices;
    let invs: Vec<MatF> = mats.iter().map(MatF::inverse).collect::<Result<_>>()?;
    let mut constraints: Vec<Constraint> = mats
        .iter()
        .zip(&invs)
        .enumerate()
        .map(|(i, (m, inv))| Constraint {
            m: m.clone(),
            inv: inv.clone(),
            cert: action.certificates[i].clone(),
        })
        .collect();
    let mut added_words = Vec::new();
    loop {
        let w = greatest_fixed_point(&constraints, q, d)?;
        if w.is_zero() {
            return Ok(WResult {
                space: w,
                certification: WCertification::Trivial,
                depth: None,
                added_words,
            });
        }
        let restricted: Vec<MatF> = mats.iter().map(|m| w.restrict(m).expect("W is invariant")).collect();
        let commuting = restricted
            .iter()
            .enumerate()
            .all(|(i, a)| restricted[i + 1..].iter().all(|b| a.commutes_with(b)));
        if commuting && restricted.iter().map(is_real_semisimple).collect::<Result<Vec<_>>>()?.iter().all(|&b| b) {
            return Ok(WResult {
                space: w,
                certification: WCertification::CertifiedCommuting,
                depth: None,
                added_words,
            });
        }
        match failing_word(&restricted, depth)? {
            None => {
                return Ok(WResult {
                    space: w,
                    certification: WCertification::CheckedToDepth,
                    depth: Some(depth),
                    added_words,
                })
            }
            Some(word) => {
                let m = word_matrix(&word, mats, &invs);
                let inv = m.inverse()?;
                constraints.push(Constraint { m, inv, cert: None });
                added_words.push(word);
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Exactness {
    Exact,
    UpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum B1SemisimpleSource {
    AutoZero,
    User,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum B1Source {
    User,
    Presentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rigidity {
    Rigid(bool),
    Inconsistent,
    Unknown,
}

impl Serialize for Rigidity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rigidity::Rigid(b) => s.serialize_bool(*b),
            Rigidity::Inconsistent => s.serialize_str("INCONSISTENT"),
            Rigidity::Unknown => s.serialize_none(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub name: String,
    pub outcome: CheckOutcome,
    pub detail: String,
}

pub const CHECK_NILPOTENT: &str = "nilpotent_reduction";
pub const CHECK_NILPOTENT_RADICAL: &str = "nilpotent_radical_reduction";
pub const CHECK_SEMISIMPLE_BETTI: &str = "semisimple_betti";
pub const CHECK_RIGIDITY: &str = "rigidity_equivalence";
pub const CHECK_ALBANESE: &str = "albanese_bound";
pub const CHECK_B1_SEMISIMPLE: &str = "b1_semisimple_quotient_auto_zero";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim_g: usize,
    pub dim_g_mod_gprime: usize,
    pub dim_radical: usize,
    pub dim_nilradical: usize,
    pub dim_levi: usize,
    pub simple_ideal_dims: Vec<usize>,
    pub has_rank_one_factor: bool,
    pub dim_b_mod_a: usize,
    pub b1_semisimple_quotient: u64,
    pub b1_semisimple_quotient_source: B1SemisimpleSource,
    #[serde(rename = "dim_W")]
    pub dim_w: usize,
    pub w_certification: WCertification,
    pub w_depth: Option<usize>,
    pub h1: u64,
    pub h1_exactness: Exactness,
    pub h1_tangent: u64,
    pub b1_manifold: Option<u64>,
    pub b1_manifold_source: Option<B1Source>,
    pub rigid: Rigidity,
    pub deformable: Option<bool>,
    pub albanese: Option<AlbaneseReport>,
    pub crosschecks: Vec<Crosscheck>,
    pub assumptions: Vec<String>,
}

impl InvariantReport {
    pub fn crosscheck(&self, name: &str) -> Option<CheckOutcome> {
        self.crosschecks.iter().find(|c| c.name == name).map(|c| c.outcome)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let opt = |v: Option<u64>| v.map_or("unknown".to_string(), |x| x.to_string());
        let mut s = String::new();
        let _ = writeln!(s, "dim g                  {}", self.dim_g);
        let _ = writeln!(s, "dim g/g'               {}", self.dim_g_mod_gprime);
        let _ = writeln!(s, "dim radical            {}", self.dim_radical);
        let _ = writeln!(s, "dim nilradical         {}", self.dim_nilradical);
        let _ = writeln!(s, "simple ideal dims      {:?}", self.simple_ideal_dims);
        let _ = writeln!(s, "rank-one factor        {}", self.has_rank_one_factor);
        let _ = writeln!(s, "dim b/a                {}", self.dim_b_mod_a);
        let _ = writeln!(
            s,
            "b1 semisimple quotient {} ({})",
            self.b1_semisimple_quotient,
            status(&self.b1_semisimple_quotient_source)
        );
        let depth = self.w_depth.map(|d| format!(", depth {d}")).unwrap_or_default();
        let _ = writeln!(s, "dim W                  {} ({}{depth})", self.dim_w, status(&self.w_certification));
        let _ = writeln!(s, "h1                     {} ({})", self.h1, status(&self.h1_exactness));
        let _ = writeln!(s, "h1 tangent             {}", self.h1_tangent);
        let src = self.b1_manifold_source.map(|x| format!(" ({})", status(&x))).unwrap_or_default();
        let _ = writeln!(s, "b1                     {}{src}", opt(self.b1_manifold));
        let rigid = match self.rigid {
            Rigidity::Rigid(b) => b.to_string(),
            Rigidity::Inconsistent => "INCONSISTENT".into(),
            Rigidity::Unknown => "unknown".into(),
        };
        let _ = writeln!(s, "rigid                  {rigid}");
        let deformable = self.deformable.map_or("unknown".into(), |b| b.to_string());
        let _ = writeln!(s, "deformable             {deformable}");
        match &self.albanese {
            Some(a) => {
                let flags = if a.flags.is_empty() { String::new() } else { format!(" [{}]", a.flags.join(", ")) };
                let _ = writeln!(s, "albanese dim           {} (lattice rank {}){flags}", a.albanese_dim, a.lattice_rank);
            }
            None => {
                let _ = writeln!(s, "albanese dim           unknown");
            }
        }
        for c in &self.crosschecks {
            let _ = writeln!(s, "check {:<28} {} {}", c.name, status(&c.outcome), c.detail);
        }
        for a in &self.assumptions {
            let _ = writeln!(s, "assume {a}");
        }
        s
    }
}

fn status<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|x| x.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// `b_1(X)`: the override if present, else the free rank of the abelianized presentation.
pub fn b1_manifold(lattice: &LatticeData) -> Result<(u64, B1Source)> {
    if let Some(v) = lattice.b1_manifold_override {
        return Ok((v, B1Source::User));
    }
    match &lattice.presentation {
        Some(p) => {
            let (rank, _) = abelianization_rank(p.generators, &p.relators)?;
            Ok((rank as u64, B1Source::Presentation))
        }
        None => Err(Error::NoB1Data),
    }
}

/// Verdict from `h1` and `b1`; when `h1` is only an upper bound, `rigid = false`
/// additionally requires `b1 > 0`.
pub fn rigidity_verdict(h1: u64, exactness: Exactness, b1: Option<u64>) -> Rigidity {
    match (exactness, b1) {
        (Exactness::Exact, Some(b)) if (h1 == 0) != (b == 0) => Rigidity::Inconsistent,
        (Exactness::Exact, _) => Rigidity::Rigid(h1 == 0),
        (Exactness::UpperBound, Some(b)) if h1 == 0 && b > 0 => Rigidity::Inconsistent,
        (Exactness::UpperBound, _) if h1 == 0 => Rigidity::Rigid(true),
        (Exactness::UpperBound, Some(b)) => Rigidity::Rigid(b == 0),
        (Exactness::UpperBound, None) => Rigidity::Unknown,
    }
}

fn check(name: &str, outcome: CheckOutcome, detail: String) -> Crosscheck {
    Crosscheck {
        name: name.into(),
        outcome,
        detail,
    }
}

fn pass_fail(ok: bool) -> CheckOutcome {
    if ok {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail
    }
}

/// Images of the generators in `g/g'` coordinates, all required.
pub fn abelianization_images(input: &AnalysisInput) -> Result<Vec<VecF>> {
    input
        .lattice
        .generators
        .iter()
        .map(|g| {
            g.abelianization_image
                .clone()
                .ok_or_else(|| Error::MissingAbelianizationImages(g.name.clone()))
        })
        .collect()
}

/// Runs the whole pipeline.
pub fn analyze(input: &AnalysisInput, depth: usize) -> Result<InvariantReport> {
    let alg = &input.algebra;
    let lattice = &input.lattice;
    let d = input.field.d;
    alg.validate()?;
    lattice.validate(alg)?;
    let n = alg.dim();
    let st = structure_report(alg);
    let levi = levi_subalgebra(alg, &st.radical)?;
    let simple = simple_ideal_decomposition(alg, &levi)?;
    let ci = characteristic_ideals(alg, &st, &levi)?;
    let action = induced_quotient_action(alg, &ci.quotient, lattice)?;
    let w = compute_w(&action, d, depth)?;
    let abel = QuotientSpace::new(st.derived(), &SubspaceF::full(n))?;
    let k = abel.dim();
    for g in &lattice.generators {
        if let Some(img) = &g.abelianization_image {
            if img.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "generator {}: abelianization_image has length {}, dim g/g' is {k}",
                    g.name,
                    img.len()
                )));
            }
        }
    }

    let mut crosschecks = Vec::new();
    let mut assumptions = vec![
        "LATTICE: the generators generate a discrete cocompact subgroup of the simply connected group".to_string(),
    ];

    let (b1ss, b1ss_source) = if !simple.has_rank_one {
        if let Some(v) = lattice.b1_semisimple_quotient {
            crosschecks.push(check(
                CHECK_B1_SEMISIMPLE,
                pass_fail(v == 0),
                format!("supplied {v}, forced 0 without a rank-one simple factor"),
            ));
        }
        (0, B1SemisimpleSource::AutoZero)
    } else {
        let v = lattice.b1_semisimple_quotient.ok_or(Error::MissingB1Input)?;
        assumptions.push("B1_SEMISIMPLE_QUOTIENT: user-supplied".into());
        (v, B1SemisimpleSource::User)
    };

    let h1 = k as u64 + b1ss + w.dim() as u64;
    let exactness = if lattice.linear_algebraic {
        Exactness::Exact
    } else {
        assumptions.push("NOT_LINEAR_ALGEBRAIC: h1 is an upper bound".into());
        Exactness::UpperBound
    };
    if w.certification == WCertification::CheckedToDepth {
        assumptions.push(format!("W_CHECKED_TO_DEPTH: words of length at most {depth} verified"));
    }
    if lattice.generators.iter().any(|g| g.ad.is_none()) {
        assumptions.push("SYMBOLIC_GENERATORS: generators without adjoint matrices act trivially on b/a".into());
    }

    let (b1, b1_source) = match b1_manifold(lattice) {
        Ok((v, src)) => {
            if src == B1Source::User {
                assumptions.push("B1_OVERRIDE: b1 of the manifold is user-supplied".into());
            }
            (Some(v), Some(src))
        }
        Err(Error::NoB1Data) => (None, None),
        Err(e) => return Err(e),
    };
    let rigid = rigidity_verdict(h1, exactness, b1);

    let albanese = if lattice.all_images_present() {
        assumptions.push("ABELIANIZATION_IMAGES: the supplied images generate the image of the lattice in G/G' (unverified)".into());
        Some(albanese_dimension(k, &abelianization_images(input)?)?)
    } else {
        None
    };

    let radical_nilpotent = st.radical == st.nilradical;
    crosschecks.push(if st.nilpotent {
        check(CHECK_NILPOTENT, pass_fail(h1 == k as u64), format!("h1 = {h1}, dim g/g' = {k}"))
    } else {
        check(CHECK_NILPOTENT, CheckOutcome::Skipped, "algebra is not nilpotent".into())
    });
    crosschecks.push(if radical_nilpotent && !simple.has_rank_one {
        check(CHECK_NILPOTENT_RADICAL, pass_fail(h1 == k as u64), format!("h1 = {h1}, dim g/g' = {k}"))
    } else {
        check(
            CHECK_NILPOTENT_RADICAL,
            CheckOutcome::Skipped,
            "radical not nilpotent or rank-one factor present".into(),
        )
    });
    crosschecks.push(match (st.radical.is_zero(), b1) {
        (true, Some(b)) => check(CHECK_SEMISIMPLE_BETTI, pass_fail(h1 == b), format!("h1 = {h1}, b1 = {b}")),
        (true, None) => check(CHECK_SEMISIMPLE_BETTI, CheckOutcome::Skipped, "b1 unknown".into()),
        (false, _) => check(CHECK_SEMISIMPLE_BETTI, CheckOutcome::Skipped, "algebra is not semisimple".into()),
    });
    crosschecks.push(match b1 {
        Some(b) => {
            let ok = match exactness {
                Exactness::Exact => (h1 == 0) == (b == 0),
                Exactness::UpperBound => h1 != 0 || b == 0,
            };
            check(CHECK_RIGIDITY, pass_fail(ok), format!("h1 = {h1}, b1 = {b}"))
        }
        None => check(CHECK_RIGIDITY, CheckOutcome::Skipped, "b1 unknown".into()),
    });
    crosschecks.push(match &albanese {
        Some(a) => check(
            CHECK_ALBANESE,
            pass_fail(a.albanese_dim <= k),
            format!("albanese dim = {}, dim g/g' = {k}", a.albanese_dim),
        ),
        None => check(CHECK_ALBANESE, CheckOutcome::Skipped, "abelianization images missing".into()),
    });

    Ok(InvariantReport {
        dim_g: n,
        dim_g_mod_gprime: k,
        dim_radical: st.radical.dim(),
        dim_nilradical: st.nilradical.dim(),
        dim_levi: levi.dim(),
        simple_ideal_dims: simple.dims.clone(),
        has_rank_one_factor: simple.has_rank_one,
        dim_b_mod_a: ci.quotient.dim(),
        b1_semisimple_quotient: b1ss,
        b1_semisimple_quotient_source: b1ss_source,
        dim_w: w.dim(),
        w_certification: w.certification,
        w_depth: w.depth,
        h1,
        h1_exactness: exactness,
        h1_tangent: n as u64 * h1,
        b1_manifold: b1,
        b1_manifold_source: b1_source,
        rigid,
        deformable: b1.map(|b| b > 0),
        albanese,
        crosschecks,
        assumptions,
    })
}

/// `dim H^1(X, O)` and whether it is exact or an upper bound.
pub fn h1_dimension(input: &AnalysisInput) -> Result<(u64, Exactness)> {
    let r = analyze(input, input.depth)?;
    Ok((r.h1, r.h1_exactness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldElement;

    fn fe(s: &str) -> FieldElement {
        FieldElement::parse(s, 2).unwrap()
    }

    fn alpha() -> MatF {
        MatF::diagonal(&[fe("3+2*r"), fe("3-2*r")])
    }

    #[test]
    fn w_examples() {
        let w = compute_w(&InducedAction::from_matrices(vec![alpha()]), 2, 4).unwrap();
        assert_eq!((w.dim(), w.certification), (2, WCertification::CertifiedCommuting));
        let j = MatF::diagonal(&[fe("i"), fe("-i")]);
        let w = compute_w(&InducedAction::from_matrices(vec![alpha(), j]), 2, 4).unwrap();
        assert_eq!((w.dim(), w.certification), (0, WCertification::Trivial));
        let w = compute_w(&InducedAction::from_matrices(vec![]), 2, 4).unwrap();
        assert_eq!(w.certification, WCertification::Trivial);
    }

    #[test]
    fn non_commuting_words() {
        // a and b are each real-diagonalizable but ab is a rotation-like product
        let a = MatF::from_int_rows(&[&[2, 0], &[0, 1]]);
        let b = MatF::from_int_rows(&[&[0, 1], &[-1, 3]]);
        let w = compute_w(&InducedAction::from_matrices(vec![a.clone(), b.clone()]), 2, 3).unwrap();
        for m in [&a, &b] {
            let r = w.space.restrict(m).unwrap();
            assert!(is_real_semisimple(&r).unwrap());
        }
        assert!(w.certification != WCertification::CertifiedCommuting);
    }

    #[test]
    fn verdicts() {
        use Exactness::*;
        assert_eq!(rigidity_verdict(0, Exact, Some(0)), Rigidity::Rigid(true));
        assert_eq!(rigidity_verdict(2, Exact, Some(4)), Rigidity::Rigid(false));
        assert_eq!(rigidity_verdict(0, Exact, Some(1)), Rigidity::Inconsistent);
        assert_eq!(rigidity_verdict(0, UpperBound, None), Rigidity::Rigid(true));
        assert_eq!(rigidity_verdict(3, UpperBound, None), Rigidity::Unknown);
        assert_eq!(rigidity_verdict(3, UpperBound, Some(0)), Rigidity::Rigid(true));
    }
}
