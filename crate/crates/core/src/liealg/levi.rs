use super::structure::derived_series_of;
use super::LieAlgebraData;
use crate::error::{Error, Result};
use crate::scalars::matrix::{axpy, vec_add};
use crate::scalars::{FieldElement, MatF, QuotientSpace, SubspaceF, VecF};

/// A Levi subalgebra complementing the radical `r`.
///
/// Starts from the complement of `r` spanned by the standard vectors at the
/// non-pivot coordinates of `r`, then corrects it step by step through the
/// derived series of `r` so that the bracket closes modulo each term.
pub fn levi_subalgebra(alg: &LieAlgebraData, r: &SubspaceF) -> Result<SubspaceF> {
    let n = alg.dim();
    let mut ys: Vec<VecF> = r.standard_complement();
    let k = ys.len();
    if k == 0 {
        return Ok(SubspaceF::zero(n));
    }
    if r.is_zero() {
        return Ok(alg.full());
    }
    let series = derived_series_of(alg, r);
    // structure constants of g/r in the images of ys
    let quotient_basis = {
        let mut fam = ys.clone();
        fam.extend(r.basis().iter().cloned());
        MatF::from_columns(n, &fam)
    };
    let decompose = |v: &VecF| -> VecF { quotient_basis.solve(v).expect("complement spans g") };
    let mut consts: Vec<Vec<VecF>> = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            consts[i][j] = decompose(&alg.bracket(&ys[i], &ys[j]))[..k].to_vec();
        }
    }
    for t in 0..series.len().saturating_sub(1) {
        let (cur, next) = (&series[t], &series[t + 1]);
        let q = QuotientSpace::new(next, cur)?;
        let m = q.dim();
        if m == 0 {
            continue;
        }
        // unknown z_i = sum_a u_{i,a} w_a ; index (i, a) -> i*m + a
        let unknowns = k * m;
        let mut rows: Vec<VecF> = Vec::new();
        let mut rhs: VecF = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                // rho_ij = [y_i, y_j] - sum_l c_ij^l y_l
                let mut rho = alg.bracket(&ys[i], &ys[j]);
                for (l, c) in consts[i][j].iter().enumerate() {
                    axpy(&mut rho, &-c, &ys[l]);
                }
                let target = q.coords(&rho).ok_or(Error::LiftFailure(t))?;
                // columns: effect of each unknown on the residual, modulo `next`
                let mut block = vec![vec![FieldElement::zero(); unknowns]; m];
                for a in 0..m {
                    let w = &q.complement[a];
                    // [y_i, z_j]
                    let cj = q.coords(&alg.bracket(&ys[i], w)).ok_or(Error::LiftFailure(t))?;
                    // -[y_j, z_i]
                    let ci = q.coords(&alg.bracket(&ys[j], w)).ok_or(Error::LiftFailure(t))?;
                    for row in 0..m {
                        block[row][j * m + a] += &cj[row];
                        block[row][i * m + a] -= &ci[row];
                    }
                    // - sum_l c_ij^l z_l
                    for (l, c) in consts[i][j].iter().enumerate() {
                        block[a][l * m + a] -= c;
                    }
                }
                for row in 0..m {
                    rows.push(std::mem::take(&mut block[row]));
                    rhs.push(-&target[row]);
                }
            }
        }
        if rows.is_empty() {
            continue;
        }
        let sol = MatF::from_rows(rows)?.solve(&rhs).ok_or(Error::LiftFailure(t))?;
        for (i, y) in ys.iter_mut().enumerate() {
            let coords = &sol[i * m..(i + 1) * m];
            *y = vec_add(y, &q.lift(coords));
        }
    }
    let s = SubspaceF::span(n, &ys);
    if !alg.is_subalgebra(&s) || s.dim() != k {
        return Err(Error::LiftFailure(series.len()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::super::structure::structure_report;
    use super::super::testalg::*;
    use super::*;

    #[test]
    fn trivial_cases() {
        let alg = sl2();
        let s = levi_subalgebra(&alg, &SubspaceF::zero(3)).unwrap();
        assert!(s.is_full());
        let alg = solv3();
        let s = levi_subalgebra(&alg, &alg.full()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn semidirect_with_twisted_basis() {
        // sl2 ⋉ C^2 with h replaced by h + v0, e by e + v1: the naive complement
        // is not a subalgebra and must be corrected.
        let base = sl2_ltimes_c2();
        let mut t = MatF::identity(5);
        t.set(3, 0, f(1));
        t.set(4, 1, f(1));
        t.set(3, 2, f(2));
        let alg = base.change_basis(&t).unwrap();
        let st = structure_report(&alg);
        let s = levi_subalgebra(&alg, &st.radical).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(alg.is_subalgebra(&s));
        assert_eq!(alg.bracket_spaces(&s, &s), s);
        assert!(s.intersection(&st.radical).is_zero());
        let sub = alg.subalgebra(&s).unwrap();
        assert_eq!(sub.killing_matrix().rank(), 3);
    }
}
