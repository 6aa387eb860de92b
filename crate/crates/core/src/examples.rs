//! Ready-made analysis inputs: solvmanifolds from real quadratic units, the
//! Iwasawa manifold and its higher Heisenberg analogues, complex tori, and
//! `SL_2`-type quotients; plus Lie algebra constructors used in tests.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::input::{AnalysisInput, DEFAULT_DEPTH};
use crate::lattice::{commutator, LatticeData, LatticeGenerator, Presentation};
use crate::liealg::LieAlgebraData;
use crate::scalars::field::split_square;
use crate::scalars::matrix::unit_vec;
use crate::scalars::{FieldDescriptor, FieldElement, MatF, VecF, Q};

/// Largest exponent allowed in a generated presentation word.
pub const MAX_RELATOR_EXPONENT: u64 = 100_000;

/// Minimal positive solution of `x^2 - p y^2 = 1`, from the continued fraction of `sqrt p`.
pub fn pell_fundamental(p: u64) -> Result<(BigInt, BigInt)> {
    if p < 2 {
        return Err(Error::BadParams(format!("Pell parameter must be at least 2, got {p}")));
    }
    let a0 = p.sqrt();
    if a0 * a0 == p {
        return Err(Error::PerfectSquareInput(p));
    }
    let pb = BigInt::from(p);
    let (mut m, mut den, mut a) = (0u64, 1u64, a0);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - &pb * &k * &k == BigInt::one() {
            return Ok((h, k));
        }
        m = den * a - m;
        den = (p - m * m) / den;
        a = (a0 + m) / den;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    UnitSolvmanifold { p: u64, with_i: bool },
    Iwasawa,
    Torus { n: usize },
    Sl2TimesC { rank: u64 },
}

pub fn build_example(kind: ExampleKind) -> Result<AnalysisInput> {
    match kind {
        ExampleKind::UnitSolvmanifold { p, with_i } => unit_solvmanifold(p, with_i),
        ExampleKind::Iwasawa => iwasawa(),
        ExampleKind::Torus { n } => torus(n),
        ExampleKind::Sl2TimesC { rank } => sl2_times_c(rank),
    }
}

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn exponent(n: &BigInt, what: &str) -> Result<u64> {
    n.to_u64()
        .filter(|&v| v <= MAX_RELATOR_EXPONENT)
        .ok_or_else(|| Error::BadParams(format!("{what} = {n} is too large for an explicit presentation")))
}

fn power(letter: i64, e: u64) -> Vec<i64> {
    vec![letter; e as usize]
}

fn inverse_word(w: &[i64]) -> Vec<i64> {
    w.iter().rev().map(|l| -l).collect()
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `C ⋉ C^2` with `t` acting by `diag(1, -1)`, and the lattice generated by the
/// unit `alpha = x + y sqrt p` acting on `O_K = Z[sqrt p, i]`, a central loop,
/// and optionally the rotation by `i`.
pub fn unit_solvmanifold(p: u64, with_i: bool) -> Result<AnalysisInput> {
    let (x, y) = pell_fundamental(p)?;
    let (s, d) = split_square(p);
    let field = FieldDescriptor::new(d)?;
    let root_p = FieldElement::real_quadratic(d, Q::zero(), Q::from_integer(BigInt::from(s)));
    let ys = &y * BigInt::from(s);
    let alpha = FieldElement::real_quadratic(d, Q::from_integer(x.clone()), Q::from_integer(ys.clone()));
    let alpha_conj = alpha.conj_sqrt();
    let algebra = LieAlgebraData::from_brackets(d, labels(&["t", "x", "y"]), &[(0, 1, 1, fe(1)), (0, 2, 2, fe(-1))])?;

    let i = FieldElement::i();
    let mut generators = vec![
        LatticeGenerator::new("u", MatF::diagonal(&[fe(1), alpha.clone(), alpha_conj.clone()]))
            .with_image(vec![fe(1)])
            .with_eigenvalues(vec![fe(1), alpha, alpha_conj]),
        LatticeGenerator::new("z", MatF::identity(3)).with_image(vec![i.clone()]),
    ];
    if with_i {
        generators.push(
            LatticeGenerator::new("j", MatF::diagonal(&[fe(1), i.clone(), -&i]))
                .with_image(vec![&i * &FieldElement::parse("1/4", d)?])
                .with_eigenvalues(vec![fe(1), i.clone(), -&i]),
        );
    }
    // (sigma_1(omega), sigma_2(omega)) for omega in 1, sqrt p, i, i sqrt p
    let omegas: [(FieldElement, FieldElement); 4] = [
        (fe(1), fe(1)),
        (root_p.clone(), -&root_p),
        (i.clone(), -&i),
        (&i * &root_p, &i * &root_p),
    ];
    for (k, (v1, v2)) in omegas.iter().enumerate() {
        let mut ad = MatF::identity(3);
        ad.set(1, 0, -v1);
        ad.set(2, 0, v2.clone());
        generators.push(
            LatticeGenerator::new(format!("w{}", k + 1), ad)
                .with_image(vec![FieldElement::zero()])
                .with_eigenvalues(vec![fe(1); 3]),
        );
    }

    let (u, z) = (1i64, 2i64);
    let jl = 3i64;
    let w0 = if with_i { 3 } else { 2 };
    let w = |k: usize| w0 + k as i64 + 1;
    let mut relators = vec![commutator(u, z)];
    for a in 0..4 {
        for b in a + 1..4 {
            relators.push(commutator(w(a), w(b)));
        }
        relators.push(commutator(z, w(a)));
    }
    // multiplication by alpha on the basis 1, sqrt p, i, i sqrt p
    let xe = exponent(&x, "x")?;
    let ype = exponent(&(&y * BigInt::from(p)), "y p")?;
    let yv = exponent(&y, "y")?;
    let alpha_cols: [[u64; 4]; 4] = [[xe, yv, 0, 0], [ype, xe, 0, 0], [0, 0, xe, yv], [0, 0, ype, xe]];
    for (a, col) in alpha_cols.iter().enumerate() {
        let mut word = vec![u, w(a), -u];
        let mut image = Vec::new();
        for (b, &e) in col.iter().enumerate() {
            image.extend(power(w(b), e));
        }
        word.extend(inverse_word(&image));
        relators.push(word);
    }
    if with_i {
        relators.push(commutator(jl, u));
        relators.push(commutator(jl, z));
        let mut j4 = power(jl, 4);
        j4.push(-z);
        relators.push(j4);
        relators.push(vec![jl, w(0), -jl, -w(2)]);
        relators.push(vec![jl, w(1), -jl, -w(3)]);
        relators.push(vec![jl, w(2), -jl, w(0)]);
        relators.push(vec![jl, w(3), -jl, w(1)]);
    }
    let presentation = Presentation {
        generators: generators.len(),
        relators,
    };
    Ok(AnalysisInput {
        field,
        algebra,
        lattice: LatticeData {
            generators,
            presentation: Some(presentation),
            b1_semisimple_quotient: None,
            linear_algebraic: true,
            b1_manifold_override: None,
        },
        depth: DEFAULT_DEPTH,
    })
}

/// Heisenberg algebra of dimension `2m + 1`: `[x_k, y_k] = z`.
pub fn heisenberg_algebra(d: u64, m: usize) -> Result<LieAlgebraData> {
    let mut basis: Vec<String> = Vec::new();
    for k in 1..=m {
        basis.push(format!("x{k}"));
    }
    for k in 1..=m {
        basis.push(format!("y{k}"));
    }
    basis.push("z".into());
    let brackets: Vec<_> = (0..m).map(|k| (k, m + k, 2 * m, fe(1))).collect();
    LieAlgebraData::from_brackets(d, basis, &brackets)
}

/// Lattice of upper unitriangular-type matrices over `Z[i]` in the
/// `(2m + 1)`-dimensional Heisenberg group.
pub fn heisenberg_gaussian(m: usize) -> Result<AnalysisInput> {
    if m == 0 {
        return Err(Error::BadParams("Heisenberg rank must be at least 1".into()));
    }
    let algebra = heisenberg_algebra(1, m)?;
    let n = 2 * m + 1;
    let zi = 2 * m;
    let i = FieldElement::i();
    let units = [fe(1), i.clone()];
    let mut generators = Vec::new();
    for k in 0..m {
        for (s, c) in units.iter().enumerate() {
            // Ad exp(c x_k) = I + c E_{z, y_k}
            let mut ad = MatF::identity(n);
            ad.set(zi, m + k, c.clone());
            let mut img = vec![FieldElement::zero(); 2 * m];
            img[k] = c.clone();
            generators.push(LatticeGenerator::new(format!("a{}_{}", k + 1, s + 1), ad).with_image(img));
        }
    }
    for k in 0..m {
        for (s, c) in units.iter().enumerate() {
            // Ad exp(c y_k) = I - c E_{z, x_k}
            let mut ad = MatF::identity(n);
            ad.set(zi, k, -c);
            let mut img = vec![FieldElement::zero(); 2 * m];
            img[m + k] = c.clone();
            generators.push(LatticeGenerator::new(format!("b{}_{}", k + 1, s + 1), ad).with_image(img));
        }
    }
    for s in 0..2 {
        generators.push(
            LatticeGenerator::new(format!("c{}", s + 1), MatF::identity(n)).with_image(vec![FieldElement::zero(); 2 * m]),
        );
    }
    let a = |k: usize, s: usize| (2 * k + s + 1) as i64;
    let b = |k: usize, s: usize| (2 * m + 2 * k + s + 1) as i64;
    let c1 = (4 * m + 1) as i64;
    let c2 = c1 + 1;
    let total = 4 * m + 2;
    let mut relators = Vec::new();
    for k in 0..m {
        for l in 0..m {
            for s in 0..2 {
                for t in 0..2 {
                    let mut r = commutator(a(k, s), b(l, t));
                    if k == l {
                        // [exp(u x), exp(v y)] = exp(u v z) with u v in {1, i, i, -1}
                        match (s, t) {
                            (0, 0) => r.push(-c1),
                            (1, 1) => r.push(c1),
                            _ => r.push(-c2),
                        }
                    }
                    relators.push(r);
                }
            }
        }
    }
    let xs: Vec<i64> = (0..m).flat_map(|k| [a(k, 0), a(k, 1)]).collect();
    let ys: Vec<i64> = (0..m).flat_map(|k| [b(k, 0), b(k, 1)]).collect();
    for group in [&xs, &ys] {
        for p in 0..group.len() {
            for q in p + 1..group.len() {
                relators.push(commutator(group[p], group[q]));
            }
        }
    }
    for g in 1..=total as i64 {
        for c in [c1, c2] {
            if g < c {
                relators.push(commutator(g, c));
            }
        }
    }
    Ok(AnalysisInput {
        field: FieldDescriptor::gaussian(),
        algebra,
        lattice: LatticeData {
            generators,
            presentation: Some(Presentation {
                generators: total,
                relators,
            }),
            b1_semisimple_quotient: None,
            linear_algebraic: true,
            b1_manifold_override: None,
        },
        depth: DEFAULT_DEPTH,
    })
}

/// The Iwasawa manifold: complex Heisenberg group modulo Gaussian integer points.
pub fn iwasawa() -> Result<AnalysisInput> {
    heisenberg_gaussian(1)
}

/// `C^n / (Z[i])^n`.
pub fn torus(n: usize) -> Result<AnalysisInput> {
    if n == 0 {
        return Err(Error::BadParams("torus dimension must be at least 1".into()));
    }
    let algebra = LieAlgebraData::abelian(1, n);
    let i = FieldElement::i();
    let mut generators = Vec::new();
    for k in 0..n {
        generators.push(LatticeGenerator::new(format!("e{}", k + 1), MatF::identity(n)).with_image(unit_vec(n, k)));
        let img: VecF = unit_vec(n, k).iter().map(|x| x * &i).collect();
        generators.push(LatticeGenerator::new(format!("ie{}", k + 1), MatF::identity(n)).with_image(img));
    }
    Ok(AnalysisInput {
        field: FieldDescriptor::gaussian(),
        algebra,
        lattice: LatticeData {
            generators,
            presentation: Some(Presentation::free_abelian(2 * n)),
            b1_semisimple_quotient: None,
            linear_algebraic: true,
            b1_manifold_override: None,
        },
        depth: DEFAULT_DEPTH,
    })
}

/// `sl_2 ⊕ C` with a cocompact `SL_2(C)` lattice of abelianization rank `rank`
/// twisted into the center; the lattice enters only through its numerical data.
pub fn sl2_times_c(rank: u64) -> Result<AnalysisInput> {
    if rank == 0 {
        return Err(Error::BadParams("rank of the lattice abelianization must be at least 1".into()));
    }
    let d = 2;
    let algebra = LieAlgebraData::from_brackets(
        d,
        labels(&["h", "e", "f", "c"]),
        &[(0, 1, 1, fe(2)), (0, 2, 2, fe(-2)), (1, 2, 0, fe(1))],
    )?;
    let generators = vec![
        LatticeGenerator::new("e1", MatF::identity(4)).with_image(vec![fe(1)]),
        LatticeGenerator::new("ei", MatF::identity(4)).with_image(vec![FieldElement::i()]),
        LatticeGenerator::symbolic("lambda").with_image(vec![FieldElement::sqrt_d(d)]),
    ];
    Ok(AnalysisInput {
        field: FieldDescriptor::new(d)?,
        algebra,
        lattice: LatticeData {
            generators,
            presentation: None,
            b1_semisimple_quotient: Some(rank),
            linear_algebraic: true,
            b1_manifold_override: Some(rank + 2),
        },
        depth: DEFAULT_DEPTH,
    })
}

/// `sl_n` in the basis `E_ij (i != j)` followed by `E_kk - E_{k+1,k+1}`.
pub fn sl_n(d: u64, n: usize) -> Result<LieAlgebraData> {
    if n < 2 {
        return Err(Error::BadParams("sl_n needs n >= 2".into()));
    }
    let mut mats: Vec<MatF> = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = MatF::zeros(n, n);
                m.set(i, j, fe(1));
                mats.push(m);
                names.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = MatF::zeros(n, n);
        m.set(k, k, fe(1));
        m.set(k + 1, k + 1, fe(-1));
        mats.push(m);
        names.push(format!("H{}", k + 1));
    }
    matrix_algebra(d, names, &mats)
}

/// Structure constants of a Lie algebra of matrices closed under commutators.
pub fn matrix_algebra(d: u64, names: Vec<String>, mats: &[MatF]) -> Result<LieAlgebraData> {
    let vecs: Vec<VecF> = mats.iter().map(|m| m.entries().to_vec()).collect();
    let len = vecs.first().map_or(0, Vec::len);
    let basis = MatF::from_columns(len, &vecs);
    let mut brackets = Vec::new();
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            let c = mats[a].commutator(&mats[b]);
            let coords = basis
                .solve(c.entries())
                .ok_or_else(|| Error::InvalidInput("matrices are not closed under commutators".into()))?;
            for (k, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    brackets.push((a, b, k, x));
                }
            }
        }
    }
    LieAlgebraData::from_brackets(d, names, &brackets)
}

/// `sl_2 ⋉ V_k` with `V_k` the irreducible module of dimension `k + 1`
/// (basis `h, e, f, v_0, ..., v_k`).
pub fn sl2_module(d: u64, k: usize) -> Result<LieAlgebraData> {
    let mut names = labels(&["h", "e", "f"]);
    names.extend((0..=k).map(|j| format!("v{j}")));
    let mut brackets = vec![(0, 1, 1, fe(2)), (0, 2, 2, fe(-2)), (1, 2, 0, fe(1))];
    let kk = k as i64;
    for j in 0..=k {
        let jj = j as i64;
        if kk - 2 * jj != 0 {
            brackets.push((0, 3 + j, 3 + j, fe(kk - 2 * jj)));
        }
        if j > 0 {
            brackets.push((1, 3 + j, 2 + j, fe(jj * (kk - jj + 1))));
        }
        if j < k {
            brackets.push((2, 3 + j, 4 + j, fe(1)));
        }
    }
    LieAlgebraData::from_brackets(d, names, &brackets)
}

/// `sl_2 ⋉ heis_3`, with `sl_2` acting on `(x, y)` by the standard representation.
pub fn sl2_heisenberg(d: u64) -> Result<LieAlgebraData> {
    LieAlgebraData::from_brackets(
        d,
        labels(&["h", "e", "f", "x", "y", "z"]),
        &[
            (0, 1, 1, fe(2)),
            (0, 2, 2, fe(-2)),
            (1, 2, 0, fe(1)),
            (0, 3, 3, fe(1)),
            (0, 4, 4, fe(-1)),
            (1, 4, 3, fe(1)),
            (2, 3, 4, fe(1)),
            (3, 4, 5, fe(1)),
        ],
    )
}

/// `C ⋉ C^2` with `t` acting by `diag(1, -1)`.
pub fn solvable_three(d: u64) -> Result<LieAlgebraData> {
    LieAlgebraData::from_brackets(d, labels(&["t", "x", "y"]), &[(0, 1, 1, fe(1)), (0, 2, 2, fe(-1))])
}

pub fn direct_sum(a: &LieAlgebraData, b: &LieAlgebraData) -> Result<LieAlgebraData> {
    if a.field_d() != b.field_d() {
        return Err(Error::BadParams("summands use different scalar fields".into()));
    }
    let shift = a.dim();
    let mut brackets = a.brackets();
    brackets.extend(b.brackets().into_iter().map(|(i, j, k, c)| (i + shift, j + shift, k + shift, c)));
    let mut names = a.basis().to_vec();
    names.extend(b.basis().iter().map(|s| format!("{s}'")));
    LieAlgebraData::from_brackets(a.field_d(), names, &brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{analyze, WCertification};

    #[test]
    fn pell_examples() {
        let b = |x: i64, y: i64| (BigInt::from(x), BigInt::from(y));
        assert_eq!(pell_fundamental(2).unwrap(), b(3, 2));
        assert_eq!(pell_fundamental(3).unwrap(), b(2, 1));
        assert_eq!(pell_fundamental(5).unwrap(), b(9, 4));
        assert_eq!(pell_fundamental(4), Err(Error::PerfectSquareInput(4)));
    }

    #[test]
    fn unit_solvmanifold_pair() {
        for with_i in [false, true] {
            let input = unit_solvmanifold(2, with_i).unwrap();
            let r = analyze(&input, 4).unwrap();
            if with_i {
                assert_eq!((r.h1, r.w_certification), (1, WCertification::Trivial));
            } else {
                assert_eq!((r.h1, r.w_certification), (3, WCertification::CertifiedCommuting));
            }
            assert_eq!(r.b1_manifold, Some(2));
        }
    }

    #[test]
    fn constructors_validate() {
        for alg in [sl_n(1, 3).unwrap(), sl2_module(1, 3).unwrap(), sl2_heisenberg(1).unwrap()] {
            alg.validate().unwrap();
        }
        assert_eq!(sl_n(1, 3).unwrap().dim(), 8);
    }
}
