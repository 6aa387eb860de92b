use super::LieAlgebraData;
use crate::error::{Error, Result};
use crate::scalars::matrix::unit_vec;
use crate::scalars::{matrix_min_poly, real_roots_in_field, FieldElement, MatF, PolyF, SubspaceF, VecF};

/// A sum of `count` simple ideals, each of dimension `ideal_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBlock {
    pub ideal_dim: usize,
    pub count: usize,
    pub space: SubspaceF,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleDecomposition {
    /// Dimensions of the simple ideals over `C`, ascending.
    pub dims: Vec<usize>,
    /// Subspaces of the ambient algebra. Ideals that are conjugate over `F` and
    /// cannot be separated rationally stay together in one block.
    pub blocks: Vec<IdealBlock>,
    pub has_rank_one: bool,
}

/// Simple ideals of the semisimple subalgebra `s` of `alg`.
///
/// The centroid of `s` (endomorphisms commuting with every `ad x`) acts on each
/// simple ideal by a scalar. A generic centroid element therefore has
/// characteristic polynomial `prod_k P_k^k`, where the roots of `P_k` index the
/// simple ideals of dimension `k`.
pub fn simple_ideal_decomposition(alg: &LieAlgebraData, s: &SubspaceF) -> Result<SimpleDecomposition> {
    let sub = alg.subalgebra(s)?;
    let k = sub.dim();
    if k == 0 {
        return Ok(SimpleDecomposition {
            dims: Vec::new(),
            blocks: Vec::new(),
            has_rank_one: false,
        });
    }
    if sub.killing_matrix().rank() != k {
        return Err(Error::NotSemisimple);
    }
    let centroid = centroid_basis(&sub);
    let m = centroid.len();
    let mut t = 2i64;
    let c = loop {
        let mut c = MatF::zeros(k, k);
        let mut w = FieldElement::one();
        for b in &centroid {
            c = c.add(&b.scale(&w));
            w = &w * &FieldElement::from_int(t);
        }
        if matrix_min_poly(&c).0.degree() == Some(m) {
            break c;
        }
        t += 1;
    };
    let factors = c.charpoly().squarefree_factorization()?;
    let mut dims = Vec::new();
    let mut blocks = Vec::new();
    for (mult, pk) in factors {
        let count = pk.degree().unwrap();
        dims.extend(std::iter::repeat_n(mult, count));
        let mut rest = pk.clone();
        if rest.is_real() {
            if let Ok(roots) = real_roots_in_field(&rest, alg.field_d()) {
                for root in roots {
                    let lin = PolyF::linear_root(&root);
                    blocks.push(IdealBlock {
                        ideal_dim: mult,
                        count: 1,
                        space: embed(s, &kernel_of_poly(&c, &lin)),
                    });
                    rest = rest.div_rem(&lin).0;
                }
            }
        }
        if !rest.is_constant() {
            blocks.push(IdealBlock {
                ideal_dim: mult,
                count: rest.degree().unwrap(),
                space: embed(s, &kernel_of_poly(&c, &rest)),
            });
        }
    }
    dims.sort_unstable();
    Ok(SimpleDecomposition {
        has_rank_one: dims.contains(&3),
        dims,
        blocks,
    })
}

/// Basis vectors that generate `sub` as a Lie algebra, chosen greedily, together
/// with `k` independent vectors `W g_j` (`W` a product of `ad g_i`) spanning `sub`.
fn lie_generators(sub: &LieAlgebraData) -> (Vec<usize>, Vec<(MatF, usize)>) {
    let k = sub.dim();
    let mut gens = Vec::new();
    let mut words: Vec<(MatF, usize)> = Vec::new();
    let mut span = SubspaceF::zero(k);
    for i in 0..k {
        if span.is_full() {
            break;
        }
        if span.contains(&unit_vec(k, i)) {
            continue;
        }
        gens.push(i);
        span = span.sum(&SubspaceF::span(k, &[unit_vec(k, i)]));
        words.push((MatF::identity(k), i));
        let ads: Vec<MatF> = gens.iter().map(|&g| sub.ad_basis(g)).collect();
        // earlier words are extended by the new generator too
        let mut queue: Vec<(MatF, usize)> = words.clone();
        while let Some((w, j)) = queue.pop() {
            for a in &ads {
                let nw = a.mul(&w);
                let y = nw.column(j);
                if !span.contains(&y) {
                    span = span.sum(&SubspaceF::span(k, &[y]));
                    words.push((nw.clone(), j));
                    queue.push((nw, j));
                }
            }
        }
    }
    (gens, words)
}

/// Basis of `{phi : phi ad(x) = ad(x) phi for all x}`.
///
/// Commuting with `ad` of a generating set suffices since `ad [x, y] = [ad x, ad y]`,
/// and such `phi` is determined by `u_j = phi(g_j)` through `phi(W g_j) = W u_j`.
fn centroid_basis(sub: &LieAlgebraData) -> Vec<MatF> {
    let k = sub.dim();
    let (gens, words) = lie_generators(sub);
    let m = gens.len();
    let y = MatF::from_columns(k, &words.iter().map(|(w, j)| w.column(*j)).collect::<Vec<_>>());
    let yinv = y.inverse().expect("words span the algebra");
    // phi = sum over unknowns (j, p) of u_j[p] * basis_maps[j * k + p]
    let mut basis_maps = vec![MatF::zeros(k, k); m * k];
    for (t, (w, j)) in words.iter().enumerate() {
        let slot = gens.iter().position(|g| g == j).unwrap();
        for p in 0..k {
            let col = w.column(p);
            let row = yinv.row(t);
            let target = &mut basis_maps[slot * k + p];
            for (a, ca) in col.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, rb) in row.iter().enumerate() {
                    if !rb.is_zero() {
                        let x = target.get(a, b) + &(ca * rb);
                        target.set(a, b, x);
                    }
                }
            }
        }
    }
    let ads: Vec<MatF> = gens.iter().map(|&g| sub.ad_basis(g)).collect();
    let commutators: Vec<Vec<FieldElement>> = basis_maps
        .iter()
        .map(|phi| {
            ads.iter()
                .flat_map(|a| phi.mul(a).sub(&a.mul(phi)).entries().to_vec())
                .collect()
        })
        .collect();
    let system = MatF::from_columns(commutators[0].len(), &commutators);
    system
        .kernel()
        .into_iter()
        .map(|u| {
            let mut phi = MatF::zeros(k, k);
            for (c, b) in u.iter().zip(&basis_maps) {
                if !c.is_zero() {
                    phi = phi.add(&b.scale(c));
                }
            }
            phi
        })
        .collect()
}

fn kernel_of_poly(c: &MatF, p: &PolyF) -> SubspaceF {
    SubspaceF::kernel_of(&c.eval_poly(p))
}

/// Map a subspace given in coordinates of `s` back into the ambient algebra.
fn embed(s: &SubspaceF, local: &SubspaceF) -> SubspaceF {
    let vecs: Vec<VecF> = local.basis().iter().map(|c| s.lift(c)).collect();
    SubspaceF::span(s.ambient(), &vecs)
}

#[cfg(test)]
mod tests {
    use super::super::testalg::*;
    use super::*;
    use crate::scalars::matrix::unit_vec;

    fn coordinate_space(n: usize, idx: &[usize]) -> SubspaceF {
        SubspaceF::span(n, &idx.iter().map(|&i| unit_vec(n, i)).collect::<Vec<_>>())
    }

    #[test]
    fn sl2_single_rank_one() {
        let alg = sl2();
        let d = simple_ideal_decomposition(&alg, &alg.full()).unwrap();
        assert_eq!(d.dims, vec![3]);
        assert!(d.has_rank_one);
    }

    #[test]
    fn sl2_squared() {
        let alg = direct_sum(&sl2(), &sl2());
        let d = simple_ideal_decomposition(&alg, &alg.full()).unwrap();
        assert_eq!(d.dims, vec![3, 3]);
        assert_eq!(d.blocks.len(), 2);
        let mut spaces: Vec<SubspaceF> = d.blocks.iter().map(|b| b.space.clone()).collect();
        spaces.sort_by_key(|s| s.pivots().to_vec());
        assert_eq!(spaces[0], coordinate_space(6, &[0, 1, 2]));
        assert_eq!(spaces[1], coordinate_space(6, &[3, 4, 5]));
    }

    #[test]
    fn not_semisimple() {
        let alg = heisenberg();
        assert_eq!(simple_ideal_decomposition(&alg, &alg.full()), Err(Error::NotSemisimple));
    }
}
