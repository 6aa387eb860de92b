use std::cmp::Ordering;

use num_rational::BigRational;
use parman_core::scalars::matrix::unit_vec;
use parman_core::scalars::{
    is_real_semisimple, matrix_min_poly, real_eigenspace_sum, sturm_real_root_count, FieldElement, MatF, PolyF,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn element(d: u64) -> impl Strategy<Value = FieldElement> {
    let c = (-20i64..=20, 1i64..=6);
    (c.clone(), c.clone(), c.clone(), c).prop_map(move |((a, ad), (b, bd), (x, xd), (e, ed))| {
        FieldElement::new(d, q(a, ad), q(b, bd), q(x, xd), q(e, ed))
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs().max(a.1.abs()).max(b.0.abs()).max(b.1.abs());
    (a.0 - b.0).abs() <= 1e-9 * scale && (a.1 - b.1).abs() <= 1e-9 * scale
}

fn mul_f(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn arithmetic_matches_embedding(x in element(2), y in element(2)) {
        let (fx, fy) = (x.to_f64_pair(), y.to_f64_pair());
        prop_assert!(close((&x + &y).to_f64_pair(), (fx.0 + fy.0, fx.1 + fy.1)));
        prop_assert!(close((&x - &y).to_f64_pair(), (fx.0 - fy.0, fx.1 - fy.1)));
        prop_assert!(close((&x * &y).to_f64_pair(), mul_f(fx, fy)));
        if let Some(inv) = y.inv() {
            prop_assert!((&y * &inv).is_one());
        }
    }

    #[test]
    fn ring_laws(x in element(3), y in element(3), z in element(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn sign_is_order_embedding(x in element(2), y in element(2)) {
        let (rx, ry) = (x.real_part(), y.real_part());
        let s = (&rx - &ry).sign_real().unwrap();
        let (fx, fy) = (rx.to_f64_pair().0, ry.to_f64_pair().0);
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(s, fx.partial_cmp(&fy).unwrap());
        }
    }

    #[test]
    fn text_round_trip(x in element(5)) {
        prop_assert_eq!(FieldElement::parse(&x.to_string(), 5).unwrap(), x);
    }
}

#[test]
fn sign_examples() {
    let f = |s: &str| FieldElement::parse(s, 2).unwrap();
    assert_eq!(f("1").sign_real().unwrap(), Ordering::Greater);
    assert_eq!(f("1-r").sign_real().unwrap(), Ordering::Less);
    assert_eq!(f("3-2*r").sign_real().unwrap(), Ordering::Greater);
    assert!(f("i").sign_real().is_err());
}

#[test]
fn sturm_examples() {
    assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[-2, 0, 1])).unwrap(), 2);
    assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[1, 0, 1])).unwrap(), 0);
    assert_eq!(sturm_real_root_count(&PolyF::from_ints(&[-2, 0, 0, 1])).unwrap(), 1);
}

/// Sign changes of `p` sampled on a grid offset from the integers.
fn float_root_count(coeffs: &[i64]) -> usize {
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
    let mut count = 0;
    let mut prev = eval(-40.125);
    let mut x = -40.125;
    while x < 40.0 {
        x += 0.25;
        let v = eval(x);
        if (prev < 0.0) != (v < 0.0) {
            count += 1;
        }
        prev = v;
    }
    count
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn sturm_matches_float_isolation() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        // distinct integer roots times positive definite quadratics; degree <= 6
        let real_roots = rng.gen_range(0..=4usize);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < real_roots {
            let r = rng.gen_range(-6..=6);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let mut p = vec![rng.gen_range(1..=3i64)];
        for r in &roots {
            p = poly_mul(&p, &[-r, 1]);
        }
        let quads = rng.gen_range(0..=(6 - real_roots) / 2);
        for _ in 0..quads {
            let b = rng.gen_range(-3..=3i64);
            let c = b * b / 4 + rng.gen_range(1..=4i64);
            p = poly_mul(&p, &[c, b, 1]);
        }
        let exact = sturm_real_root_count(&PolyF::from_ints(&p)).unwrap();
        assert_eq!(exact, real_roots, "{p:?}");
        assert_eq!(exact, float_root_count(&p), "{p:?}");
    }
}

fn random_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> MatF {
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    MatF::from_int_rows(&refs)
}

/// `P J P^-1` with `J` a Jordan matrix of the given block sizes and eigenvalues.
fn with_jordan_type(rng: &mut ChaCha8Rng, blocks: &[(i64, usize)]) -> MatF {
    let n: usize = blocks.iter().map(|b| b.1).sum();
    let mut j = MatF::zeros(n, n);
    let mut at = 0;
    for &(lambda, size) in blocks {
        for k in 0..size {
            j.set(at + k, at + k, FieldElement::from_int(lambda));
            if k + 1 < size {
                j.set(at + k, at + k + 1, FieldElement::one());
            }
        }
        at += size;
    }
    loop {
        let p = random_rational_matrix(rng, n);
        if let Ok(pinv) = p.inverse() {
            return p.mul(&j).mul(&pinv);
        }
    }
}

#[test]
fn min_poly_and_semisimplicity_by_jordan_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let types: [(&[(i64, usize)], bool); 5] = [
        (&[(1, 1), (2, 1), (3, 1)], true),
        (&[(1, 1), (1, 1), (2, 1)], true),
        (&[(1, 2), (2, 1)], false),
        (&[(0, 3)], false),
        (&[(-1, 1), (-1, 1), (-1, 1)], true),
    ];
    for _ in 0..10 {
        for (blocks, semisimple) in types {
            let m = with_jordan_type(&mut rng, blocks);
            let (mp, ss) = matrix_min_poly(&m);
            assert!(m.eval_poly(&mp).is_zero());
            assert_eq!(ss, semisimple, "{blocks:?}");
            let expected_degree: usize = {
                let mut best: Vec<(i64, usize)> = Vec::new();
                for &(l, s) in blocks {
                    match best.iter_mut().find(|b| b.0 == l) {
                        Some(b) => b.1 = b.1.max(s),
                        None => best.push((l, s)),
                    }
                }
                best.iter().map(|b| b.1).sum()
            };
            assert_eq!(mp.degree(), Some(expected_degree));
        }
    }
}

#[test]
fn real_eigenspace_sum_is_invariant_and_real_semisimple() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rot = MatF::from_int_rows(&[&[0, -1], &[1, 0]]);
    for _ in 0..30 {
        // block diagonal: random real-diagonalizable part, a rotation, a Jordan block
        let lambda = rng.gen_range(-2..=2);
        let a = with_jordan_type(&mut rng, &[(lambda, 1), (3, 1)]);
        let mut m = MatF::zeros(6, 6);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, a.get(i, j).clone());
                m.set(2 + i, 2 + j, rot.get(i, j).clone());
            }
        }
        m.set(4, 4, FieldElement::from_int(2));
        m.set(5, 5, FieldElement::from_int(2));
        m.set(4, 5, FieldElement::one());
        let p = loop {
            let p = random_rational_matrix(&mut rng, 6);
            if p.is_invertible() {
                break p;
            }
        };
        let conj = p.mul(&m).mul(&p.inverse().unwrap());
        let e = real_eigenspace_sum(&conj, 2, None).unwrap();
        assert_eq!(e.dim(), 3);
        assert!(e.is_invariant_under(&conj));
        assert!(is_real_semisimple(&e.restrict(&conj).unwrap()).unwrap());
        assert!(e.contains(&p.mul_vec(&unit_vec(6, 4))));
    }
}
