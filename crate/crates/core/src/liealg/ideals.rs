use super::structure::StructureReport;
use super::LieAlgebraData;
use crate::error::{Error, Result};
use crate::scalars::{QuotientSpace, SubspaceF};

/// The ideals entering the `H^1` formula, with `a = [s,r] + n'` and `b = r' + a`.
#[derive(Clone, Debug)]
pub struct CharacteristicIdeals {
    pub r: SubspaceF,
    pub n: SubspaceF,
    pub n_prime: SubspaceF,
    pub s_r: SubspaceF,
    pub a: SubspaceF,
    pub r_prime: SubspaceF,
    pub b: SubspaceF,
    /// `b / a` in the canonical complement basis.
    pub quotient: QuotientSpace,
}

pub fn characteristic_ideals(
    alg: &LieAlgebraData,
    structure: &StructureReport,
    levi: &SubspaceF,
) -> Result<CharacteristicIdeals> {
    let r = structure.radical.clone();
    let n = structure.nilradical.clone();
    let n_prime = alg.bracket_spaces(&n, &n);
    let s_r = alg.bracket_spaces(levi, &r);
    let a = s_r.sum(&n_prime);
    let r_prime = alg.bracket_spaces(&r, &r);
    let b = r_prime.sum(&a);
    // [s,r] alone need not be an ideal: in sl2 acting on the Heisenberg algebra it is span(x, y)
    if !s_r.contains_space(&alg.bracket_spaces(levi, &s_r)) {
        return Err(Error::InvalidInput("[s,r] is not stable under s".into()));
    }
    for (name, space) in [("[n,n]", &n_prime), ("a", &a), ("[r,r]", &r_prime), ("b", &b)] {
        if !alg.is_ideal(space) {
            return Err(Error::InvalidInput(format!("{name} is not an ideal")));
        }
    }
    let quotient = QuotientSpace::new(&a, &b)?;
    Ok(CharacteristicIdeals {
        r,
        n,
        n_prime,
        s_r,
        a,
        r_prime,
        b,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::super::testalg::*;
    use super::super::{levi_subalgebra, structure_report};
    use super::*;
    use crate::scalars::matrix::unit_vec;

    fn ideals(alg: &LieAlgebraData) -> CharacteristicIdeals {
        let st = structure_report(alg);
        let s = levi_subalgebra(alg, &st.radical).unwrap();
        characteristic_ideals(alg, &st, &s).unwrap()
    }

    #[test]
    fn heisenberg_ideals() {
        let c = ideals(&heisenberg());
        let z = SubspaceF::span(3, &[unit_vec(3, 2)]);
        assert_eq!(c.n_prime, z);
        assert!(c.s_r.is_zero());
        assert_eq!(c.a, z);
        assert_eq!(c.b, z);
        assert_eq!(c.quotient.dim(), 0);
    }

    #[test]
    fn solvable_ideals() {
        let c = ideals(&solv3());
        assert!(c.a.is_zero());
        assert_eq!(c.b, SubspaceF::span(3, &[unit_vec(3, 1), unit_vec(3, 2)]));
        assert_eq!(c.quotient.dim(), 2);
    }

    #[test]
    fn abelian_ideals() {
        let c = ideals(&LieAlgebraData::abelian(1, 4));
        assert!(c.b.is_zero());
        assert_eq!(c.quotient.dim(), 0);
    }
}
