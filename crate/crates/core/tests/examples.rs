use num_bigint::BigInt;
use parman_core::examples::{
    build_example, heisenberg_gaussian, pell_fundamental, sl2_times_c, torus, unit_solvmanifold, ExampleKind,
};
use parman_core::{AnalysisInput, Error};

/// Smallest `y >= 1` with `1 + p y^2` a perfect square.
fn pell_brute_force(p: u64) -> (u64, u64) {
    for y in 1u64.. {
        let x2 = 1 + p * y * y;
        let x = x2.isqrt();
        if x * x == x2 {
            return (x, y);
        }
    }
    unreachable!()
}

#[test]
fn pell_matches_brute_force() {
    for p in 2u64..50 {
        if p.isqrt().pow(2) == p {
            assert!(matches!(pell_fundamental(p), Err(Error::PerfectSquareInput(q)) if q == p));
            continue;
        }
        let (x, y) = pell_brute_force(p);
        assert_eq!(pell_fundamental(p).unwrap(), (BigInt::from(x), BigInt::from(y)), "p = {p}");
    }
}

#[test]
fn pell_known_values() {
    assert_eq!(pell_fundamental(2).unwrap(), (BigInt::from(3), BigInt::from(2)));
    assert_eq!(pell_fundamental(61).unwrap(), (BigInt::from(1_766_319_049u64), BigInt::from(226_153_980u64)));
    assert!(matches!(pell_fundamental(1), Err(Error::BadParams(_))));
}

fn corpus() -> Vec<AnalysisInput> {
    let mut out = Vec::new();
    for p in [2, 3, 5, 6, 7, 10] {
        out.push(unit_solvmanifold(p, false).unwrap());
        out.push(unit_solvmanifold(p, true).unwrap());
    }
    out.push(build_example(ExampleKind::Iwasawa).unwrap());
    out.push(heisenberg_gaussian(2).unwrap());
    out.extend((1..=3).map(|n| torus(n).unwrap()));
    out.extend([1, 2, 5].map(|r| sl2_times_c(r).unwrap()));
    out
}

#[test]
fn examples_validate() {
    for input in corpus() {
        input.algebra.validate().unwrap();
        input.lattice.validate(&input.algebra).unwrap();
    }
}

#[test]
fn unit_solvmanifold_pair_differs_by_one_generator() {
    for p in [2, 3, 5, 6, 7, 10] {
        let a = unit_solvmanifold(p, false).unwrap();
        let b = unit_solvmanifold(p, true).unwrap();
        assert_eq!(a.algebra, b.algebra);
        let names = |x: &AnalysisInput| x.lattice.generators.iter().map(|g| g.name.clone()).collect::<Vec<_>>();
        let (na, nb) = (names(&a), names(&b));
        assert_eq!(nb.len(), na.len() + 1);
        assert!(na.iter().all(|n| nb.contains(n)));
        for g in &a.lattice.generators {
            assert_eq!(Some(g), b.lattice.generators.iter().find(|h| h.name == g.name));
        }
    }
}

#[test]
fn examples_round_trip_through_json() {
    for input in corpus() {
        let text = input.to_json();
        let back = AnalysisInput::from_json(&text).unwrap();
        assert_eq!(back, input);
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(matches!(unit_solvmanifold(4, false), Err(Error::PerfectSquareInput(4))));
    assert!(torus(0).is_err());
    assert!(sl2_times_c(0).is_err());
    assert!(heisenberg_gaussian(0).is_err());
}
