//! Minimal polynomials, semisimplicity, and real eigenspaces.

use super::field::FieldElement;
use super::matrix::{axpy, is_zero_vec, MatF};
use super::poly::{sturm_real_root_count, PolyF};
use super::roots::real_roots_in_field;
use super::subspace::SubspaceF;
use crate::error::{Error, Result};

/// Monic minimal polynomial of `m` and whether `m` is semisimple
/// (`gcd(m, m') = 1`).
pub fn matrix_min_poly(m: &MatF) -> (PolyF, bool) {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    // Incremental echelon of vec(M^k); each stored row remembers the power
    // combination it represents.
    let mut reduced: Vec<(usize, Vec<FieldElement>, Vec<FieldElement>)> = Vec::new();
    let mut power = MatF::identity(n);
    for k in 0..=n {
        let mut v: Vec<FieldElement> = power.entries().to_vec();
        let mut combo = vec![FieldElement::zero(); n + 1];
        combo[k] = FieldElement::one();
        for (lead, row, rcombo) in &reduced {
            if v[*lead].is_zero() {
                continue;
            }
            let c = -&v[*lead];
            axpy(&mut v, &c, row);
            axpy(&mut combo, &c, rcombo);
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                let poly = PolyF::new(combo).monic();
                let semisimple = poly.gcd(&poly.derivative()).is_constant();
                return (poly, semisimple);
            }
            Some(lead) => {
                let inv = v[lead].inv().unwrap();
                let v: Vec<FieldElement> = v.iter().map(|x| x * &inv).collect();
                let combo: Vec<FieldElement> = combo.iter().map(|x| x * &inv).collect();
                reduced.push((lead, v, combo));
            }
        }
        power = power.mul(m);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// How a supplied eigenvalue list is checked against a characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateMode {
    /// The list with multiplicities must be exactly the roots of the polynomial.
    Exact,
    /// Some sub-multiset of the list must be exactly the roots (used for
    /// restrictions of a certified matrix to invariant subspaces).
    SubMultiset,
}

/// Select the eigenvalues of `chi` from a certificate list.
pub fn check_certificate(chi: &PolyF, list: &[FieldElement], mode: CertificateMode) -> Result<Vec<FieldElement>> {
    let deg = chi.degree().unwrap_or(0);
    if mode == CertificateMode::Exact && list.len() != deg {
        return Err(Error::BadEigenvalueCertificate(format!(
            "{} values supplied for a characteristic polynomial of degree {deg}",
            list.len()
        )));
    }
    let mut rest = chi.monic();
    let mut used = Vec::new();
    for lambda in list {
        if rest.is_constant() {
            break;
        }
        let lin = PolyF::linear_root(lambda);
        let (q, r) = rest.div_rem(&lin);
        if r.is_zero() {
            rest = q;
            used.push(lambda.clone());
        } else if mode == CertificateMode::Exact {
            return Err(Error::BadEigenvalueCertificate(format!("{lambda} is not a root of {chi}")));
        }
    }
    if !rest.is_constant() {
        return Err(Error::BadEigenvalueCertificate(format!(
            "supplied values do not account for the factor {rest}"
        )));
    }
    Ok(used)
}

/// Distinct real eigenvalues of `m`, discovered exactly or taken from a certificate.
pub fn real_eigenvalues(m: &MatF, d: u64, supplied: Option<(&[FieldElement], CertificateMode)>) -> Result<Vec<FieldElement>> {
    let chi = m.charpoly();
    let mut out: Vec<FieldElement> = Vec::new();
    match supplied {
        Some((list, mode)) => {
            for lambda in check_certificate(&chi, list, mode)? {
                if lambda.is_real() && !out.contains(&lambda) {
                    out.push(lambda);
                }
            }
        }
        None => out = real_roots_in_field(&chi, d)?,
    }
    Ok(out)
}

/// `E_real(M)`: the sum of the eigenspaces `ker(M - lambda I)` over real eigenvalues.
pub fn real_eigenspace_sum(m: &MatF, d: u64, supplied: Option<&[FieldElement]>) -> Result<SubspaceF> {
    real_eigenspace_sum_with(m, d, supplied.map(|l| (l, CertificateMode::Exact)))
}

pub fn real_eigenspace_sum_with(
    m: &MatF,
    d: u64,
    supplied: Option<(&[FieldElement], CertificateMode)>,
) -> Result<SubspaceF> {
    let n = m.rows();
    if supplied.is_none() && n > 0 {
        // real roots of chi are the real roots of g = gcd(Re chi, Im chi); when
        // all roots of g are real, ker g(M) is the eigenspace sum without
        // locating the roots
        let chi = m.charpoly();
        let g = chi.real_part().gcd(&chi.imag_part()).squarefree_part()?;
        let deg = g.degree().unwrap_or(0);
        if deg == 0 {
            return Ok(SubspaceF::zero(n));
        }
        if sturm_real_root_count(&g)? == deg {
            return Ok(SubspaceF::kernel_of(&m.eval_poly(&g)));
        }
    }
    let mut vecs = Vec::new();
    for lambda in real_eigenvalues(m, d, supplied)? {
        let shifted = m.sub(&MatF::identity(n).scale(&lambda));
        vecs.extend(shifted.kernel().into_iter().filter(|v| !is_zero_vec(v)));
    }
    Ok(SubspaceF::span(n, &vecs))
}

/// Whether `m` is diagonalizable with only real eigenvalues. Decided by a
/// Sturm count on the minimal polynomial, so the eigenvalues need not lie in `F`.
pub fn is_real_semisimple(m: &MatF) -> Result<bool> {
    if m.rows() == 0 {
        return Ok(true);
    }
    let (mp, semisimple) = matrix_min_poly(m);
    if !semisimple {
        return Ok(false);
    }
    let g = mp.real_part().gcd(&mp.imag_part());
    if g.degree() != mp.degree() {
        return Ok(false);
    }
    Ok(sturm_real_root_count(&g)? == g.degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str, d: u64) -> FieldElement {
        FieldElement::parse(s, d).unwrap()
    }

    #[test]
    fn min_poly_examples() {
        let (p, ss) = matrix_min_poly(&MatF::identity(2));
        assert_eq!(p, PolyF::from_ints(&[-1, 1]));
        assert!(ss);
        let (p, ss) = matrix_min_poly(&MatF::from_int_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(p, PolyF::from_ints(&[0, 0, 1]));
        assert!(!ss);
        let m = MatF::diagonal(&[FieldElement::i(), -FieldElement::i()]);
        let (p, ss) = matrix_min_poly(&m);
        assert_eq!(p, PolyF::from_ints(&[1, 0, 1]));
        assert!(ss);
    }

    #[test]
    fn real_eigenspaces() {
        let m = MatF::diagonal(&[fe("3+2*r", 2), fe("3-2*r", 2)]);
        assert!(real_eigenspace_sum(&m, 2, None).unwrap().is_full());
        let m = MatF::diagonal(&[FieldElement::i(), -FieldElement::i()]);
        assert!(real_eigenspace_sum(&m, 2, None).unwrap().is_zero());
        let j = MatF::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(real_eigenspace_sum(&j, 2, None).unwrap().dim(), 1);
    }

    #[test]
    fn real_semisimple_outside_field() {
        // eigenvalues +-sqrt(3), not in Q(sqrt 2)(i)
        let m = MatF::from_int_rows(&[&[0, 3], &[1, 0]]);
        assert!(is_real_semisimple(&m).unwrap());
        let rot = MatF::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert!(!is_real_semisimple(&rot).unwrap());
        assert!(!is_real_semisimple(&MatF::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap());
    }

    #[test]
    fn certificates() {
        let m = MatF::diagonal(&[fe("3+2*r", 2), fe("3-2*r", 2)]);
        let good = [fe("3-2*r", 2), fe("3+2*r", 2)];
        assert!(real_eigenspace_sum(&m, 2, Some(&good)).unwrap().is_full());
        let bad = [fe("3+2*r", 2), fe("3+2*r", 2)];
        assert!(matches!(
            real_eigenspace_sum(&m, 2, Some(&bad)),
            Err(Error::BadEigenvalueCertificate(_))
        ));
        let chi = PolyF::linear_root(&fe("3+2*r", 2));
        let used = check_certificate(&chi, &good, CertificateMode::SubMultiset).unwrap();
        assert_eq!(used, vec![fe("3+2*r", 2)]);
    }
}
