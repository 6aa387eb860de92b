//! The scalar field `F = Q(sqrt d)(i)` with its embedding into the complex numbers.
//!
//! An element is stored as four rationals `(a, b, c, e)` meaning
//! `a + b*sqrt(d) + c*i + e*i*sqrt(d)`, where `sqrt(d)` is the positive real root
//! and `i` is `+i`. The real subfield is `Q(sqrt d)`, i.e. the elements with
//! `c = e = 0`.
//!
//! Elements carry their `d`. Elements without a `sqrt(d)` component are valid in
//! every such field and may use `d = 0` as "not yet fixed"; arithmetic adopts
//! the `d` of whichever operand actually needs it.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Parameter of the field tower: `F = Q(sqrt d)(i)`. `d = 1` gives `Q(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub d: u64,
}

impl FieldDescriptor {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 || !is_squarefree(d) {
            return Err(Error::BadFieldParameter(d));
        }
        Ok(FieldDescriptor { d })
    }

    pub fn gaussian() -> Self {
        FieldDescriptor { d: 1 }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero()
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one()
    }

    pub fn sqrt_d(&self) -> FieldElement {
        FieldElement::sqrt_d(self.d)
    }

    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        FieldElement::parse(s, self.d)
    }
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Largest `s` with `s^2 | n`, together with the squarefree cofactor.
pub fn split_square(n: u64) -> (u64, u64) {
    let mut square_root = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            square_root *= p;
        }
        p += 1;
    }
    (square_root, rest)
}

#[derive(Clone, Debug)]
pub struct FieldElement {
    a: Q,
    b: Q,
    c: Q,
    e: Q,
    d: u64,
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `(x + y r)(u + v r)` in `Q(sqrt d)`.
fn qd_mul(x: &Q, y: &Q, u: &Q, v: &Q, d: u64) -> (Q, Q) {
    let mut re = Q::zero();
    let mut ir = Q::zero();
    if !x.is_zero() {
        if !u.is_zero() {
            re += x * u;
        }
        if !v.is_zero() {
            ir += x * v;
        }
    }
    if !y.is_zero() {
        if !v.is_zero() {
            re += y * v * Q::from_integer(BigInt::from(d));
        }
        if !u.is_zero() {
            ir += y * u;
        }
    }
    (re, ir)
}

impl FieldElement {
    pub fn new(d: u64, a: Q, b: Q, c: Q, e: Q) -> Self {
        let mut x = FieldElement { a, b, c, e, d };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.d == 1 {
            let b = std::mem::take(&mut self.b);
            let e = std::mem::take(&mut self.e);
            self.a += b;
            self.c += e;
        }
        assert!(
            self.d != 0 || (self.b.is_zero() && self.e.is_zero()),
            "sqrt(d) component without a field parameter"
        );
    }

    pub fn zero() -> Self {
        FieldElement {
            a: Q::zero(),
            b: Q::zero(),
            c: Q::zero(),
            e: Q::zero(),
            d: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }

    pub fn from_rational(a: Q) -> Self {
        FieldElement {
            a,
            ..Self::zero()
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(q(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Q::from_integer(n))
    }

    pub fn i() -> Self {
        FieldElement {
            c: Q::one(),
            ..Self::zero()
        }
    }

    pub fn sqrt_d(d: u64) -> Self {
        Self::new(d, Q::zero(), Q::one(), Q::zero(), Q::zero())
    }

    /// `a + b*sqrt(d)` with rational parts.
    pub fn real_quadratic(d: u64, a: Q, b: Q) -> Self {
        Self::new(d, a, b, Q::zero(), Q::zero())
    }

    pub fn coefficients(&self) -> (&Q, &Q, &Q, &Q) {
        (&self.a, &self.b, &self.c, &self.e)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    fn has_r(&self) -> bool {
        !(self.b.is_zero() && self.e.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.e.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then_some(&self.a)
    }

    pub fn real_part(&self) -> FieldElement {
        FieldElement {
            a: self.a.clone(),
            b: self.b.clone(),
            c: Q::zero(),
            e: Q::zero(),
            d: self.d,
        }
    }

    pub fn imag_part(&self) -> FieldElement {
        FieldElement {
            a: self.c.clone(),
            b: self.e.clone(),
            c: Q::zero(),
            e: Q::zero(),
            d: self.d,
        }
    }

    /// Complex conjugation (fixes `sqrt d`, sends `i` to `-i`).
    pub fn conj(&self) -> FieldElement {
        FieldElement {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -&self.c,
            e: -&self.e,
            d: self.d,
        }
    }

    /// The automorphism `sqrt d -> -sqrt d` fixing `i`.
    pub fn conj_sqrt(&self) -> FieldElement {
        FieldElement {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            e: -&self.e,
            d: self.d,
        }
    }

    fn join_d(&self, other: &FieldElement) -> u64 {
        match (self.d, other.d) {
            (x, y) if x == y => x,
            (0, y) => y,
            (x, 0) => x,
            (x, y) => {
                assert!(
                    !(self.has_r() && other.has_r()),
                    "mixing elements of Q(sqrt {x})(i) and Q(sqrt {y})(i)"
                );
                if self.has_r() {
                    x
                } else if other.has_r() {
                    y
                } else {
                    x.max(y)
                }
            }
        }
    }

    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        let d = self.d;
        // (u + iv)^{-1} = (u - iv) / (u^2 + v^2) with u, v in Q(sqrt d)
        let (uu0, uu1) = qd_mul(&self.a, &self.b, &self.a, &self.b, d);
        let (vv0, vv1) = qd_mul(&self.c, &self.e, &self.c, &self.e, d);
        let p = uu0 + vv0;
        let s = uu1 + vv1;
        // 1/(p + s r) = (p - s r)/(p^2 - d s^2)
        let norm = &p * &p - &s * &s * q(d as i64);
        debug_assert!(!norm.is_zero());
        let np = &p / &norm;
        let ns = -(&s / &norm);
        let (a, b) = qd_mul(&self.a, &self.b, &np, &ns, d);
        let (c, e) = qd_mul(&self.c, &self.e, &np, &ns, d);
        Some(FieldElement::new(d, a, b, -c, -e))
    }

    /// Exact sign of a real element under the embedding `sqrt d > 0`.
    pub fn sign_real(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NonRealInput(self.to_string()));
        }
        Ok(sign_quadratic(&self.a, &self.b, self.d))
    }

    /// Square root inside `F`, when one exists.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(FieldElement::zero());
        }
        let d = self.d.max(1);
        // (p + i q)^2 = u + i v with p, q real: p^2 = (u + |z|)/2, q^2 = (|z| - u)/2.
        let u = self.real_part();
        let v = self.imag_part();
        let modulus = sqrt_real(&(&u * &u + &v * &v), d)?;
        let half = FieldElement::from_rational(Q::new(BigInt::from(1), BigInt::from(2)));
        let p2 = &(&u + &modulus) * &half;
        let q2 = &(&modulus - &u) * &half;
        if let (Some(p), Some(qq)) = (sqrt_real(&p2, d), sqrt_real(&q2, d)) {
            for cand in [&p + &(&FieldElement::i() * &qq), &p - &(&FieldElement::i() * &qq)] {
                if &cand * &cand == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Floating-point image under the embedding, for diagnostics and test oracles.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let r = (self.d.max(1) as f64).sqrt();
        let f = |x: &Q| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.a) + f(&self.b) * r, f(&self.c) + f(&self.e) * r)
    }

    /// Parses the textual form `a+b*r+c*i+e*i*r` (`r` = `sqrt d`). Terms may
    /// appear in any order and factors may be repeated.
    pub fn parse(input: &str, d: u64) -> Result<FieldElement> {
        let err = |reason: &str| Error::Parse {
            what: "field element".to_string(),
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (idx, ch) in s.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if idx == 0 {
                    negative = ch == '-';
                    continue;
                }
                if current.is_empty() {
                    return Err(err("dangling sign"));
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((negative, current));

        let mut total = FieldElement::zero();
        for (neg, term) in terms {
            let mut value = FieldElement::one();
            for factor in term.split('*') {
                let f = match factor {
                    "i" => FieldElement::i(),
                    "r" if d == 0 => return Err(err("r used without a field parameter")),
                    "r" => FieldElement::sqrt_d(d),
                    lit => FieldElement::from_rational(parse_rational(lit).ok_or_else(|| err("bad rational literal"))?),
                };
                value = &value * &f;
            }
            if neg {
                value = -value;
            }
            total = &total + &value;
        }
        if total.d == 0 {
            total.d = d;
        }
        Ok(total)
    }
}

/// Sign of `a + b sqrt(d)`.
pub(crate) fn sign_quadratic(a: &Q, b: &Q, d: u64) -> Ordering {
    let sa = a.cmp(&Q::zero());
    let sb = b.cmp(&Q::zero());
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        _ => {
            // opposite signs: compare a^2 with d b^2
            let lhs = a * a;
            let rhs = b * b * q(d as i64);
            match lhs.cmp(&rhs) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sa,
                Ordering::Less => sb,
            }
        }
    }
}

fn parse_rational(lit: &str) -> Option<Q> {
    let (num, den) = match lit.split_once('/') {
        Some((n, dd)) => (n, dd),
        None => (lit, "1"),
    };
    if num.is_empty() || den.is_empty() || !num.bytes().all(|c| c.is_ascii_digit()) || !den.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let dd: BigInt = den.parse().ok()?;
    if dd.is_zero() {
        return None;
    }
    Some(Q::new(n, dd))
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let m = x.denom().sqrt();
    (&n * &n == *x.numer() && &m * &m == *x.denom()).then(|| Q::new(n, m))
}

/// Square root of a nonnegative element of `Q(sqrt d)` inside `Q(sqrt d)`.
fn sqrt_real(x: &FieldElement, d: u64) -> Option<FieldElement> {
    debug_assert!(x.is_real());
    if x.sign_real().ok()? == Ordering::Less {
        return None;
    }
    let (a, b) = (&x.a, &x.b);
    if b.is_zero() {
        if let Some(s) = rational_sqrt(a) {
            return Some(FieldElement::from_rational(s));
        }
        if d > 1 {
            // a = d t^2  ->  sqrt = t sqrt(d)
            let t = rational_sqrt(&(a / q(d as i64)))?;
            return Some(FieldElement::real_quadratic(d, Q::zero(), t));
        }
        return None;
    }
    // (p + s r)^2 = a + b r  ->  p^2 + d s^2 = a, 2ps = b; p^2 = (a +- sqrt(a^2 - d b^2))/2
    let disc = rational_sqrt(&(a * a - b * b * q(d as i64)))?;
    let two = q(2);
    for p2 in [(a + &disc) / &two, (a - &disc) / &two] {
        if let Some(p) = rational_sqrt(&p2) {
            if p.is_zero() {
                continue;
            }
            let s = b / (&two * &p);
            let cand = FieldElement::real_quadratic(d, p, s);
            if &cand * &cand == *x && cand.sign_real().ok()? != Ordering::Less {
                return Some(cand);
            }
        }
    }
    None
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c && self.e == other.e
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
        self.e.hash(state);
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<Q> for FieldElement {
    fn from(x: Q) -> Self {
        FieldElement::from_rational(x)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let d = self.join_d(rhs);
        FieldElement {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            e: &self.e + &rhs.e,
            d,
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let d = self.join_d(rhs);
        FieldElement {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            e: &self.e - &rhs.e,
            d,
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let d = self.join_d(rhs);
        if self.is_rational() {
            let s = &self.a;
            if s.is_zero() {
                return FieldElement { d, ..FieldElement::zero() };
            }
            return FieldElement {
                a: s * &rhs.a,
                b: s * &rhs.b,
                c: s * &rhs.c,
                e: s * &rhs.e,
                d,
            };
        }
        if rhs.is_rational() {
            return rhs * self;
        }
        // (u + iv)(u' + iv') = (uu' - vv') + i(uv' + vu')
        let (p0, p1) = qd_mul(&self.a, &self.b, &rhs.a, &rhs.b, d);
        let (q0, q1) = qd_mul(&self.c, &self.e, &rhs.c, &rhs.e, d);
        let (s0, s1) = qd_mul(&self.a, &self.b, &rhs.c, &rhs.e, d);
        let (t0, t1) = qd_mul(&self.c, &self.e, &rhs.a, &rhs.b, d);
        FieldElement {
            a: p0 - q0,
            b: p1 - q1,
            c: s0 + t0,
            e: s1 + t1,
            d,
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero in F");
        self * &inv
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            e: -self.e,
            d: self.d,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -(self.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.d = self.join_d(rhs);
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.e += &rhs.e;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.d = self.join_d(rhs);
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.e -= &rhs.e;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let parts: [(&Q, &str); 4] = [(&self.a, ""), (&self.b, "r"), (&self.c, "i"), (&self.e, "i*r")];
        for (coef, unit) in parts {
            if coef.is_zero() {
                continue;
            }
            let term = if unit.is_empty() {
                fmt_rational(coef)
            } else if coef.is_one() {
                unit.to_string()
            } else if (-coef).is_one() {
                format!("-{unit}")
            } else {
                format!("{}*{unit}", fmt_rational(coef))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str, d: u64) -> FieldElement {
        FieldElement::parse(s, d).unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(fe("1", 2).sign_real().unwrap(), Ordering::Greater);
        assert_eq!(fe("1-r", 2).sign_real().unwrap(), Ordering::Less);
        // 9 > 8
        assert_eq!(fe("3-2*r", 2).sign_real().unwrap(), Ordering::Greater);
        assert_eq!(fe("-3+2*r", 2).sign_real().unwrap(), Ordering::Less);
        assert_eq!(fe("0", 2).sign_real().unwrap(), Ordering::Equal);
        assert!(matches!(fe("i", 2).sign_real(), Err(Error::NonRealInput(_))));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(fe("0", 2).to_string(), "0");
        assert_eq!(fe("3+2*r", 2).to_string(), "3+2*r");
        assert_eq!(fe("i*r - 1/2", 2).to_string(), "-1/2+i*r");
        assert_eq!(fe("-r-i", 3).to_string(), "-r-i");
        assert_eq!(fe("2*r*r", 3).to_string(), "6");
        // d = 1 folds sqrt(d) into the rational part
        assert_eq!(fe("1+r+i*r", 1).to_string(), "2+i");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1+", "x", "1/0", "--1", "2**r"] {
            assert!(FieldElement::parse(s, 2).is_err(), "{s}");
        }
    }

    #[test]
    fn inverse_and_units() {
        let alpha = fe("3+2*r", 2);
        let conj = alpha.conj_sqrt();
        assert!((&alpha * &conj).is_one());
        assert_eq!(alpha.inv().unwrap(), conj);
        let z = fe("1/3+r-2*i+5/7*i*r", 2);
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(FieldElement::zero().inv().is_none());
    }

    #[test]
    fn square_roots() {
        assert_eq!(fe("-4", 2).sqrt().map(|s| &s * &s), Some(fe("-4", 2)));
        assert_eq!(fe("32", 2).sqrt(), Some(fe("4*r", 2)));
        let z = fe("3+2*r", 2); // (1 + r)^2
        assert_eq!(z.sqrt(), Some(fe("1+r", 2)));
        let w = fe("2*i", 2); // (1 + i)^2
        let s = w.sqrt().unwrap();
        assert_eq!(&s * &s, w);
        assert!(fe("3", 2).sqrt().is_none());
        assert!(fe("r", 2).sqrt().is_none());
    }

    #[test]
    fn squarefree_checks() {
        assert!(FieldDescriptor::new(2).is_ok());
        assert!(FieldDescriptor::new(1).is_ok());
        assert!(FieldDescriptor::new(8).is_err());
        assert!(FieldDescriptor::new(0).is_err());
        assert_eq!(split_square(72), (6, 2));
    }
}
