use super::LieAlgebraData;
use crate::scalars::{MatF, SubspaceF};

/// Series, radical, nilradical, and Killing form of a Lie algebra.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub derived_series: Vec<SubspaceF>,
    pub lower_central_series: Vec<SubspaceF>,
    pub radical: SubspaceF,
    pub nilradical: SubspaceF,
    pub killing: MatF,
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub abelian: bool,
}

impl StructureReport {
    pub fn derived(&self) -> &SubspaceF {
        self.derived_series.get(1).unwrap_or(&self.derived_series[0])
    }
}

/// Derived series of an ideal `u`: `u ⊇ [u,u] ⊇ ...` until it stabilizes.
pub(crate) fn derived_series_of(alg: &LieAlgebraData, u: &SubspaceF) -> Vec<SubspaceF> {
    let mut series = vec![u.clone()];
    loop {
        let last = series.last().unwrap();
        let next = alg.bracket_spaces(last, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

/// Radical as the Killing-orthogonal complement of `[g, g]`.
fn radical(alg: &LieAlgebraData, killing: &MatF, derived: &SubspaceF) -> SubspaceF {
    if derived.is_zero() {
        return alg.full();
    }
    let rows: Vec<_> = derived.basis().iter().map(|b| killing.mul_vec(b)).collect();
    SubspaceF::kernel_of(&MatF::from_rows(rows).unwrap())
}

/// Nilradical as `{x in r : tr(ad x * a) = 0 for all a}` where `a` ranges over the
/// unital associative algebra generated by `ad(r)`.
fn nilradical(alg: &LieAlgebraData, r: &SubspaceF) -> SubspaceF {
    let n = alg.dim();
    if r.is_zero() {
        return r.clone();
    }
    let gens: Vec<MatF> = r.basis().iter().map(|x| alg.ad(x)).collect();
    let flat = |m: &MatF| m.entries().to_vec();
    let mut span = SubspaceF::span(n * n, &[flat(&MatF::identity(n))]);
    let mut elems = vec![MatF::identity(n)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                let p = a.mul(g);
                let v = flat(&p);
                if !span.contains(&v) {
                    span = span.sum(&SubspaceF::span(n * n, &[v]));
                    next.push(p.clone());
                    elems.push(p);
                }
            }
        }
        frontier = next;
    }
    // x = sum_i c_i r_i ; condition sum_i c_i tr(ad r_i * a) = 0 for each a
    let rows: Vec<_> = elems
        .iter()
        .map(|a| gens.iter().map(|g| g.trace_product(a)).collect())
        .collect();
    let coeffs = MatF::from_rows(rows).unwrap().kernel();
    let vecs: Vec<_> = coeffs.iter().map(|c| r.lift(c)).collect();
    SubspaceF::span(n, &vecs)
}

pub fn structure_report(alg: &LieAlgebraData) -> StructureReport {
    let g = alg.full();
    let derived_series = derived_series_of(alg, &g);
    let mut lower_central_series = vec![g.clone()];
    loop {
        let last = lower_central_series.last().unwrap();
        let next = alg.bracket_spaces(&g, last);
        if next == *last {
            break;
        }
        lower_central_series.push(next);
    }
    let killing = alg.killing_matrix();
    let derived = derived_series.get(1).cloned().unwrap_or_else(|| g.clone());
    let radical = radical(alg, &killing, &derived);
    let nilradical = nilradical(alg, &radical);
    StructureReport {
        solvable: derived_series.last().unwrap().is_zero(),
        nilpotent: lower_central_series.last().unwrap().is_zero(),
        semisimple: radical.is_zero(),
        abelian: derived.is_zero(),
        derived_series,
        lower_central_series,
        radical,
        nilradical,
        killing,
    }
}

#[cfg(test)]
mod tests {
    use super::super::testalg::*;
    use super::*;
    use crate::scalars::matrix::unit_vec;

    #[test]
    fn sl2_is_semisimple() {
        let s = structure_report(&sl2());
        assert!(s.semisimple);
        assert!(s.radical.is_zero() && s.nilradical.is_zero());
    }

    #[test]
    fn heisenberg_is_nilpotent() {
        let s = structure_report(&heisenberg());
        assert!(s.nilpotent && s.solvable && !s.abelian);
        assert!(s.radical.is_full() && s.nilradical.is_full());
        assert_eq!(*s.derived(), SubspaceF::span(3, &[unit_vec(3, 2)]));
    }

    #[test]
    fn solvable_three_dimensional() {
        let s = structure_report(&solv3());
        assert!(s.solvable && !s.nilpotent);
        assert!(s.radical.is_full());
        let xy = SubspaceF::span(3, &[unit_vec(3, 1), unit_vec(3, 2)]);
        assert_eq!(s.nilradical, xy);
        assert_eq!(*s.derived(), xy);
    }

    #[test]
    fn semidirect_radical() {
        let alg = sl2_ltimes_c2();
        let s = structure_report(&alg);
        let v = SubspaceF::span(5, &[unit_vec(5, 3), unit_vec(5, 4)]);
        assert_eq!(s.radical, v);
        assert_eq!(s.nilradical, v);
    }
}
