#![allow(dead_code)]

use parman_core::scalars::{FieldElement, MatF, Q};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random element `a + b r + c i + e i r` with small integer coefficients.
pub fn random_element(rng: &mut ChaCha8Rng, d: u64, complex: bool) -> FieldElement {
    let mut c = || Q::from_integer(rng.gen_range(-2..=2).into());
    let (a, b) = (c(), if d > 1 { c() } else { Q::from_integer(0.into()) });
    let (x, e) = if complex {
        (c(), if d > 1 { c() } else { Q::from_integer(0.into()) })
    } else {
        (Q::from_integer(0.into()), Q::from_integer(0.into()))
    };
    FieldElement::new(d, a, b, x, e)
}

/// Random invertible `n x n` matrix over `F`.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, d: u64, complex: bool) -> MatF {
    loop {
        let mut m = MatF::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = if rng.gen_bool(0.5) { random_element(rng, d, complex) } else { FieldElement::zero() };
                m.set(i, j, x);
            }
            // keep it well away from singular
            let diag = &m.get(i, i).clone() + &FieldElement::from_int(3);
            m.set(i, i, diag);
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// One of `±1, ±r, ±i, ±i r`.
pub fn random_monomial(rng: &mut ChaCha8Rng, d: u64) -> FieldElement {
    let one = Q::from_integer(1.into());
    let zero = || Q::from_integer(0.into());
    let sign = if rng.gen_bool(0.5) { one.clone() } else { -one };
    let mut parts = [zero(), zero(), zero(), zero()];
    let slot = if d > 1 { rng.gen_range(0..4) } else { 2 * rng.gen_range(0..2) };
    parts[slot] = sign;
    let [a, b, c, e] = parts;
    FieldElement::new(d, a, b, c, e)
}

/// Product of `moves` random transvections `I + x E_ij` and a diagonal of units
/// `±1, ±i`; invertible by construction and cheap to conjugate by.
pub fn random_transvections(rng: &mut ChaCha8Rng, n: usize, d: u64, moves: usize) -> MatF {
    let mut m = MatF::identity(n);
    for i in 0..n {
        let unit = match rng.gen_range(0..4) {
            0 => FieldElement::one(),
            1 => FieldElement::from_int(-1),
            2 => FieldElement::i(),
            _ => -&FieldElement::i(),
        };
        m.set(i, i, unit);
    }
    for _ in 0..moves {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let mut e = MatF::identity(n);
        e.set(i, j, random_monomial(rng, d));
        m = m.mul(&e);
    }
    m
}
