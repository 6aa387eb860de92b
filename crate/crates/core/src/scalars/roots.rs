//! Exact discovery of the real roots of a polynomial over `F` that lie in the
//! real subfield `Q(sqrt d)`.
//!
//! Real roots of `p` are the common roots of `Re p` and `Im p`, so they are the
//! real roots of `G = gcd(Re p, Im p)`, a polynomial over `Q(sqrt d)`. A root
//! `u + v sqrt d` of `G` and its conjugate are both real roots of the rational
//! polynomial `H = G * conj(G)`. If `a` is the leading coefficient of `H`
//! (made primitive over `Z`), then `B = 2au` and `Y = 2av` are integers. The
//! real roots of `H` are isolated with Sturm sequences, and each pair of
//! isolating intervals pins down finitely many candidates `(B + Y sqrt d)/(2a)`,
//! which are tested exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{FieldElement, Q};
use super::poly::{PolyF, SturmSequence};
use crate::error::{Error, Result};

/// Distinct real roots of `p` in `Q(sqrt d)`, in increasing order.
///
/// Fails with `ScalarFieldTooSmall` when `p` has real roots outside the field.
pub fn real_roots_in_field(p: &PolyF, d: u64) -> Result<Vec<FieldElement>> {
    let s = p.squarefree_part()?;
    if s.is_constant() {
        return Ok(Vec::new());
    }
    let g = s.real_part().gcd(&s.imag_part());
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let expected = SturmSequence::new(&g)?.count_all();
    if expected == 0 {
        return Ok(Vec::new());
    }
    let d = d.max(1);
    let h = if g.is_rational() { g.clone() } else { g.mul(&g.conj_sqrt()) };
    let h = primitive_integer(&h.squarefree_part()?);
    let a = h.last().unwrap().abs();
    let hp = PolyF::new(h.iter().map(|c| FieldElement::from_bigint(c.clone())).collect());
    let width = Q::new(BigInt::one(), &a * BigInt::from(4));
    let intervals = isolate_real_roots(&hp, &width)?;

    let two_a = Q::from_integer(&a * BigInt::from(2));
    let a_q = Q::from_integer(a.clone());
    let (s_lo, s_hi) = sqrt_bounds(d);
    let mut found: Vec<FieldElement> = Vec::new();
    for (j, (lo_j, hi_j)) in intervals.iter().enumerate() {
        for (k, (lo_k, hi_k)) in intervals.iter().enumerate() {
            if d == 1 && j != k {
                continue;
            }
            let b_range = integer_range(&(&a_q * (lo_j + lo_k)), &(&a_q * (hi_j + hi_k)));
            let y_range = if d == 1 {
                (BigInt::zero(), BigInt::zero())
            } else {
                let lo = &a_q * (lo_j - hi_k);
                let hi = &a_q * (hi_j - lo_k);
                let cands = [&lo / &s_lo, &lo / &s_hi, &hi / &s_lo, &hi / &s_hi];
                let min = cands.iter().min().unwrap().clone();
                let max = cands.iter().max().unwrap().clone();
                integer_range(&min, &max)
            };
            let mut b = b_range.0.clone();
            while b <= b_range.1 {
                let mut y = y_range.0.clone();
                while y <= y_range.1 {
                    let lambda = FieldElement::real_quadratic(
                        d,
                        Q::from_integer(b.clone()) / &two_a,
                        Q::from_integer(y.clone()) / &two_a,
                    );
                    if !found.contains(&lambda) && g.eval(&lambda).is_zero() {
                        found.push(lambda);
                    }
                    y += 1;
                }
                b += 1;
            }
        }
    }
    if found.len() < expected {
        return Err(Error::ScalarFieldTooSmall {
            missing: expected - found.len(),
        });
    }
    found.sort_by(|x, y| (x - y).sign_real().unwrap_or(Ordering::Equal));
    Ok(found)
}

/// Integer coefficients of `p` (rational coefficients required) with unit content
/// and positive leading coefficient.
fn primitive_integer(p: &PolyF) -> Vec<BigInt> {
    let rats: Vec<Q> = p
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational polynomial").clone())
        .collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats.iter().map(|r| (r * Q::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    for x in &mut ints {
        *x = &*x / &content * &sign;
    }
    ints
}

/// Integers in the closed interval `[lo, hi]` as an inclusive range.
fn integer_range(lo: &Q, hi: &Q) -> (BigInt, BigInt) {
    (lo.ceil().to_integer(), hi.floor().to_integer())
}

/// Rational bounds `lo <= sqrt d <= hi` with `hi - lo = 2^-32`.
fn sqrt_bounds(d: u64) -> (Q, Q) {
    let scale: BigInt = BigInt::one() << 32u32;
    let sq: BigInt = BigInt::from(d) * &scale * &scale;
    let n = sq.sqrt();
    let lo = Q::new(n.clone(), scale.clone());
    let hi = Q::new(n + 1, scale);
    (lo, hi)
}

/// Disjoint half-open intervals `(lo, hi]`, each containing exactly one real root
/// of the real polynomial `p` and of width at most `width`.
pub fn isolate_real_roots(p: &PolyF, width: &Q) -> Result<Vec<(Q, Q)>> {
    let sturm = SturmSequence::new(p)?;
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = p.coeff(deg);
    let mut bound = Q::one();
    for c in &p.coeffs()[..deg] {
        let r = (c / &lead).real_part();
        let (x, y, _, _) = r.coefficients();
        // |x + y sqrt d| <= |x| + |y| d
        let mag = x.abs() + y.abs() * Q::from_integer(BigInt::from(r.d().max(1)));
        if mag > bound {
            bound = mag;
        }
    }
    bound += Q::one();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm.count_in(&lo, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &(&hi - &lo) <= width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Q::from_integer(BigInt::from(2));
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_and_quadratic_roots() {
        // x^2 - 6x + 1 = (x - 3 - 2r)(x - 3 + 2r), d = 2
        let p = PolyF::from_ints(&[1, -6, 1]);
        let roots = real_roots_in_field(&p, 2).unwrap();
        let a = FieldElement::parse("3-2*r", 2).unwrap();
        let b = FieldElement::parse("3+2*r", 2).unwrap();
        assert_eq!(roots, vec![a, b]);
        // (x - 1/2)(x + 3)
        let q = PolyF::from_ints(&[-3, 5, 2]);
        let roots = real_roots_in_field(&q, 2).unwrap();
        assert_eq!(roots, vec![FieldElement::from_int(-3), FieldElement::parse("1/2", 2).unwrap()]);
    }

    #[test]
    fn outside_field_is_reported() {
        let p = PolyF::from_ints(&[-3, 0, 1]);
        assert_eq!(real_roots_in_field(&p, 2), Err(Error::ScalarFieldTooSmall { missing: 2 }));
        assert_eq!(real_roots_in_field(&p, 3).unwrap().len(), 2);
    }

    #[test]
    fn complex_coefficients() {
        // (x - 1)(x - i): only the real root 1 survives
        let p = PolyF::linear_root(&FieldElement::one()).mul(&PolyF::linear_root(&FieldElement::i()));
        assert_eq!(real_roots_in_field(&p, 1).unwrap(), vec![FieldElement::one()]);
        let q = PolyF::from_ints(&[1, 0, 1]);
        assert!(real_roots_in_field(&q, 1).unwrap().is_empty());
    }

    #[test]
    fn irrational_coefficients() {
        // (x - r)(x - 1 - r), d = 5
        let r = FieldElement::sqrt_d(5);
        let p = PolyF::linear_root(&r).mul(&PolyF::linear_root(&(&r + &FieldElement::one())));
        let roots = real_roots_in_field(&p, 5).unwrap();
        assert_eq!(roots, vec![r.clone(), &r + &FieldElement::one()]);
    }
}
