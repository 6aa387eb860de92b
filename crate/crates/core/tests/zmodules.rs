use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use parman_core::zmodules::{abelianization_rank, smith_normal_form, IntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect()
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_1 ... d_k = gcd of the k x k minors`.
fn divisors_by_minors(m: &[Vec<i64>]) -> Vec<i64> {
    let (rows, cols) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = 1i64;
    for k in 1..=rows.min(cols) {
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn to_int(m: &[Vec<i64>]) -> IntMatrix {
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&rows)
}

#[test]
fn smith_matches_gcd_of_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let m = random_matrix(&mut rng, 3, 4);
        let a = to_int(&m);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&snf.d).mul(&snf.v), a);
        assert!(snf.u.determinant().abs() == BigInt::from(1));
        assert!(snf.v.determinant().abs() == BigInt::from(1));
        let divs: Vec<i64> = snf
            .elementary_divisors()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(divs, divisors_by_minors(&m), "{m:?}");
        for w in divs.windows(2) {
            assert!(w[1] % w[0] == 0);
        }
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..6 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(n);
        e.set(i, j, BigInt::from(rng.gen_range(-2..=2)));
        m = m.mul(&e);
    }
    m
}

#[test]
fn smith_invariant_under_unimodular_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let a = to_int(&random_matrix(&mut rng, 3, 4));
        let b = random_unimodular(&mut rng, 3).mul(&a).mul(&random_unimodular(&mut rng, 4));
        assert_eq!(
            smith_normal_form(&a).elementary_divisors(),
            smith_normal_form(&b).elementary_divisors()
        );
    }
}

#[test]
fn smith_examples() {
    let d = |m: &[&[i64]]| {
        let s = smith_normal_form(&IntMatrix::from_i64(m));
        (0..s.d.rows().min(s.d.cols())).map(|i| s.d.get(i, i).clone()).collect::<Vec<_>>()
    };
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(d(&[&[1, 0], &[0, 6]]), big(&[1, 6]));
    assert_eq!(d(&[&[2, 4], &[6, 8]]), big(&[2, 4]));
    assert!(d(&[&[0, 0, 0], &[0, 0, 0]]).iter().all(Zero::is_zero));
}

#[test]
fn abelianization_examples() {
    assert_eq!(abelianization_rank(2, &[]).unwrap(), (2, vec![]));
    assert_eq!(abelianization_rank(2, &[vec![1, 2, -1, -2]]).unwrap(), (2, vec![]));
    assert_eq!(abelianization_rank(1, &[vec![1, 1, 1]]).unwrap(), (0, vec![BigInt::from(3)]));
    // <a, b, c | [a,b] c^-1, [a,c], [b,c]>
    let heis = [vec![1, 2, -1, -2, -3], vec![1, 3, -1, -3], vec![2, 3, -2, -3]];
    assert_eq!(abelianization_rank(3, &heis).unwrap().0, 2);
    assert!(abelianization_rank(2, &[vec![1, 3]]).is_err());
    assert!(abelianization_rank(2, &[vec![0]]).is_err());
    for n in 0..6 {
        assert_eq!(abelianization_rank(n, &[]).unwrap(), (n, vec![]));
    }
}
