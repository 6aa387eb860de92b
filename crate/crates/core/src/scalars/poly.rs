//! Dense univariate polynomials over `F`.
//!
//! Coefficients are stored in ascending degree order; the zero polynomial has
//! an empty coefficient list and no degree.

use std::cmp::Ordering;
use std::fmt;

use super::field::{FieldElement, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyF {
    coeffs: Vec<FieldElement>,
}

impl PolyF {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        PolyF { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::one())
    }

    pub fn x() -> Self {
        PolyF {
            coeffs: vec![FieldElement::zero(), FieldElement::one()],
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`
    pub fn linear_root(root: &FieldElement) -> Self {
        Self::new(vec![-root, FieldElement::one()])
    }

    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        let mut p = PolyF { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| FieldElement::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_real)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_rational)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Q) -> FieldElement {
        self.eval(&FieldElement::from_rational(x.clone()))
    }

    pub fn scale(&self, s: &FieldElement) -> PolyF {
        PolyF::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn map(&self, f: impl Fn(&FieldElement) -> FieldElement) -> PolyF {
        PolyF::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &PolyF) -> PolyF {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyF::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &PolyF) -> PolyF {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyF::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &PolyF) -> PolyF {
        if self.is_zero() || rhs.is_zero() {
            return PolyF::zero();
        }
        let mut out = vec![FieldElement::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        PolyF::new(out)
    }

    pub fn pow(&self, k: usize) -> PolyF {
        (0..k).fold(PolyF::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyF) -> (PolyF, PolyF) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyF::zero(), self.clone());
        }
        let mut quot = vec![FieldElement::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (PolyF::new(quot), PolyF::new(rem))
    }

    pub fn rem(&self, divisor: &PolyF) -> PolyF {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &PolyF) -> bool {
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> PolyF {
        match self.leading() {
            None => PolyF::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn derivative(&self) -> PolyF {
        PolyF::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &FieldElement::from_int(i as i64))
                .collect(),
        )
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyF) -> PolyF {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<PolyF> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    /// Yun's squarefree factorization: `self = lc * prod_k P_k^k` with `P_k` monic,
    /// squarefree, pairwise coprime. Returned as `(k, P_k)` for nonconstant `P_k`.
    pub fn squarefree_factorization(&self) -> Result<Vec<(usize, PolyF)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while !b.is_constant() {
            a = b.gcd(&d);
            if !a.is_constant() {
                out.push((k, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        Ok(out)
    }

    pub fn real_part(&self) -> PolyF {
        self.map(FieldElement::real_part)
    }

    pub fn imag_part(&self) -> PolyF {
        self.map(FieldElement::imag_part)
    }

    pub fn conj_sqrt(&self) -> PolyF {
        self.map(FieldElement::conj_sqrt)
    }

    /// Sign of `p(x)` as `x -> +inf` (`toward_positive`) or `-inf`.
    fn sign_at_infinity(&self, toward_positive: bool) -> Result<Ordering> {
        let Some(deg) = self.degree() else {
            return Ok(Ordering::Equal);
        };
        let s = self.coeffs[deg].sign_real()?;
        Ok(if toward_positive || deg % 2 == 0 { s } else { s.reverse() })
    }
}

impl fmt::Display for PolyF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Sturm sequence of a polynomial with real coefficients.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<PolyF>,
}

impl SturmSequence {
    pub fn new(p: &PolyF) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_real() {
            return Err(Error::NonRealCoefficients);
        }
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&FieldElement::from_int(-1)));
        }
        Ok(SturmSequence { seq })
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Q) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|p| p.eval_rational(x).sign_real().expect("real sequence")),
        )
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|p| p.sign_at_infinity(positive).expect("real sequence")),
        )
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &Q, hi: &Q) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }
}

/// Number of distinct real roots of `p`, computed exactly with a Sturm sequence.
pub fn sturm_real_root_count(p: &PolyF) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count_all())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[-2, 0, 0, 1])).unwrap(), 1);
        // repeated root counted once: (x-1)^2 (x+2)
        assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[2, -3, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[5])).unwrap(), 0);
    }

    #[test]
    fn sturm_over_real_quadratic_field() {
        // x^2 - 2 sqrt(2) x + 1 has roots sqrt2 +- 1, both real
        let r = FieldElement::sqrt_d(2);
        let p = PolyF::new(vec![FieldElement::one(), &r * &FieldElement::from_int(-2), FieldElement::one()]);
        assert_eq!(sturm_real_root_count(&p).unwrap(), 2);
        let bad = PolyF::new(vec![FieldElement::i(), FieldElement::one()]);
        assert_eq!(sturm_real_root_count(&bad), Err(Error::NonRealCoefficients));
        assert_eq!(sturm_real_root_count(&PolyF::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn division_and_gcd() {
        let a = PolyF::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = PolyF::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, PolyF::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&PolyF::from_ints(&[1, 2, 1])), b);
        let sq = PolyF::from_ints(&[-1, 1]).pow(3).mul(&b);
        assert_eq!(sq.squarefree_part().unwrap(), a);
        let fac = sq.squarefree_factorization().unwrap();
        assert_eq!(fac, vec![(1, b.clone()), (3, PolyF::from_ints(&[-1, 1]))]);
    }
}
