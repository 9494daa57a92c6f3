//! Weyl group enumeration and normalizer quotients of weight subspaces.
//!
//! The Weyl group of a product algebra is the direct product of the factor
//! groups, so elements are stored as one index per factor. Each factor group
//! is generated by breadth-first closure of the simple reflections; an
//! element carries both its permutation of the factor's root list (exact,
//! cheap equality) and its integer matrix on the fundamental-weight
//! coordinates (for acting on arbitrary weights).

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::algebra::{ReductiveAlgebra, Weight};
use crate::error::{Error, Result};
use crate::linalg::{canonical_rat_vec, Rat, SpanSolver};
use crate::roots::{Limits, RootSystemData};

/// One factor's Weyl group, fully enumerated.
#[derive(Debug)]
struct FactorGroup {
    rank: usize,
    /// Permutations of the factor's local root list.
    perms: Vec<Vec<u32>>,
    /// Row-major `rank x rank` integer matrices acting on fw coordinates.
    mats: Vec<Vec<i64>>,
    index_of: HashMap<Vec<u32>, u32>,
}

impl FactorGroup {
    fn trivial() -> Self {
        FactorGroup {
            rank: 0,
            perms: vec![Vec::new()],
            mats: vec![Vec::new()],
            index_of: HashMap::from([(Vec::new(), 0)]),
        }
    }
}

/// An element of the product group: one index per simple factor.
pub type WeylElement = Vec<u32>;

/// The enumerated Weyl group of a reductive algebra.
#[derive(Debug)]
pub struct WeylGroup {
    algebra: ReductiveAlgebra,
    factors: Vec<FactorGroup>,
    order: u128,
    /// Coordinate block of each factor.
    factor_blocks: Vec<std::ops::Range<usize>>,
    /// Global root indices per factor, parallel to the local root lists.
    factor_roots: Vec<Vec<usize>>,
}

/// Enumerates the full Weyl group. Fails with [`Error::GroupTooLarge`] if the
/// estimated order exceeds `limits.group_cap`.
pub fn enumerate_weyl_group(rsd: &RootSystemData, limits: &Limits) -> Result<WeylGroup> {
    let algebra = rsd.algebra();
    let order: u128 = algebra.factors().iter().map(|f| f.weyl_order()).product();
    if order > limits.group_cap {
        return Err(Error::GroupTooLarge { order, cap: limits.group_cap });
    }

    let mut factors = Vec::new();
    let mut factor_blocks = Vec::new();
    let mut factor_roots = Vec::new();
    for (fi, factor) in algebra.factors().iter().enumerate() {
        let rank = factor.rank();
        let local_roots: Vec<usize> = rsd
            .roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.factor == fi)
            .map(|(i, _)| i)
            .collect();
        let global_to_local: HashMap<usize, usize> =
            local_roots.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let n = local_roots.len();
        let p = factor.pairing_matrix();

        // Generator permutations and matrices for the simple reflections.
        let mut gen_perms: Vec<Vec<u32>> = Vec::with_capacity(rank);
        let mut gen_mats: Vec<Vec<i64>> = Vec::with_capacity(rank);
        for node in 0..rank {
            let mut perm = vec![0u32; n];
            for (l, &g) in local_roots.iter().enumerate() {
                let mut img = rsd.roots()[g].weight.clone();
                rsd.simple_reflect_in_place(&mut img, fi, node);
                let gi = rsd
                    .root_index(img.coords())
                    .expect("simple reflection permutes the root system");
                perm[l] = global_to_local[&gi] as u32;
            }
            gen_perms.push(perm);
            // s_node on coordinates: c'_j = c_j - P[node][j] * c_node.
            let mut mat = vec![0i64; rank * rank];
            for j in 0..rank {
                for k in 0..rank {
                    let mut v = i64::from(j == k);
                    if k == node {
                        v -= p[node][j];
                    }
                    mat[j * rank + k] = v;
                }
            }
            gen_mats.push(mat);
        }

        // BFS closure under left multiplication by generators.
        let identity: Vec<u32> = (0..n as u32).collect();
        let id_mat: Vec<i64> = {
            let mut m = vec![0i64; rank * rank];
            for i in 0..rank {
                m[i * rank + i] = 1;
            }
            m
        };
        let mut perms = vec![identity.clone()];
        let mut mats = vec![id_mat];
        let mut index_of = HashMap::from([(identity, 0u32)]);
        let mut queue: VecDeque<u32> = VecDeque::from([0]);
        while let Some(ei) = queue.pop_front() {
            for g in 0..rank {
                let base = &perms[ei as usize];
                let composed: Vec<u32> =
                    base.iter().map(|&k| gen_perms[g][k as usize]).collect();
                if index_of.contains_key(&composed) {
                    continue;
                }
                // Matrix of the composite: apply the old element, then the generator.
                let me = &mats[ei as usize];
                let mg = &gen_mats[g];
                let mut m = vec![0i64; rank * rank];
                for i in 0..rank {
                    for j in 0..rank {
                        let mut acc = 0i64;
                        for k in 0..rank {
                            acc += mg[i * rank + k] * me[k * rank + j];
                        }
                        m[i * rank + j] = acc;
                    }
                }
                let idx = perms.len() as u32;
                index_of.insert(composed.clone(), idx);
                perms.push(composed);
                mats.push(m);
                queue.push_back(idx);
            }
        }
        debug_assert_eq!(perms.len() as u128, factor.weyl_order());
        factors.push(FactorGroup { rank, perms, mats, index_of });
        factor_blocks.push(algebra.factor_block(fi));
        factor_roots.push(local_roots);
    }
    if factors.is_empty() {
        factors.push(FactorGroup::trivial());
        factor_blocks.push(0..0);
        factor_roots.push(Vec::new());
    }
    Ok(WeylGroup { algebra: algebra.clone(), factors, order, factor_blocks, factor_roots })
}

impl WeylGroup {
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn algebra(&self) -> &ReductiveAlgebra {
        &self.algebra
    }

    /// Iterates over all elements in a deterministic order.
    pub fn iter_elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        let sizes: Vec<usize> = self.factors.iter().map(|f| f.perms.len()).collect();
        let total: usize = sizes.iter().product();
        (0..total).map(move |mut i| {
            let mut elem = Vec::with_capacity(sizes.len());
            for &s in &sizes {
                elem.push((i % s) as u32);
                i /= s;
            }
            elem
        })
    }

    /// Materialized element list, in the iteration order.
    pub fn elements(&self) -> Vec<WeylElement> {
        self.iter_elements().collect()
    }

    /// Applies an element to a weight. Torus coordinates are fixed.
    pub fn apply(&self, elem: &[u32], w: &Weight) -> Weight {
        let mut coords = w.coords().to_vec();
        for (fi, fg) in self.factors.iter().enumerate() {
            if fg.rank == 0 {
                continue;
            }
            let block = &self.factor_blocks[fi];
            let mat = &fg.mats[elem[fi] as usize];
            let r = fg.rank;
            let input = &w.coords()[block.clone()];
            for i in 0..r {
                let mut acc = 0i64;
                for j in 0..r {
                    acc += mat[i * r + j] * input[j];
                }
                coords[block.start + i] = acc;
            }
        }
        Weight::new(coords)
    }

    /// Componentwise composition: apply `b` first, then `a`.
    pub fn compose(&self, a: &[u32], b: &[u32]) -> WeylElement {
        self.factors
            .iter()
            .enumerate()
            .map(|(fi, fg)| {
                if fg.rank == 0 {
                    return 0;
                }
                let pa = &fg.perms[a[fi] as usize];
                let pb = &fg.perms[b[fi] as usize];
                let composed: Vec<u32> = pb.iter().map(|&k| pa[k as usize]).collect();
                fg.index_of[&composed]
            })
            .collect()
    }

    /// The element's permutation of the global root list of the root system
    /// it was enumerated from.
    pub fn root_permutation(&self, elem: &[u32]) -> Vec<u32> {
        let n: usize = self.factor_roots.iter().map(|v| v.len()).sum();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for (fi, fg) in self.factors.iter().enumerate() {
            if fg.rank == 0 {
                continue;
            }
            let locals = &self.factor_roots[fi];
            let p = &fg.perms[elem[fi] as usize];
            for (l, &g) in locals.iter().enumerate() {
                perm[g] = locals[p[l] as usize] as u32;
            }
        }
        perm
    }
}

/// The induced action of `N_W(span)/Z_W(span)` on a subspace of the weight
/// space, expressed in the coordinates of the given basis.
pub struct SubspaceQuotient {
    pub basis: Vec<Weight>,
    /// `maps[g][j][k]` is the `j`-th coordinate of the image of basis
    /// vector `k` under the `g`-th induced map.
    pub maps: Vec<Vec<Vec<Rat>>>,
}

impl SubspaceQuotient {
    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// Image of a coordinate vector under map `g`.
    pub fn apply(&self, g: usize, coords: &[Rat]) -> Vec<Rat> {
        let r = self.basis.len();
        (0..r)
            .map(|j| (0..r).map(|k| self.maps[g][j][k] * coords[k]).sum())
            .collect()
    }
}

/// Enumerates the Weyl group and keeps the elements mapping `span(basis)` to
/// itself; returns the induced linear maps on the span with duplicates
/// removed. The basis must be linearly independent.
pub fn subspace_normalizer_quotient(
    basis: &[Weight],
    rsd: &RootSystemData,
    limits: &Limits,
) -> Result<SubspaceQuotient> {
    if basis.is_empty() {
        return Ok(SubspaceQuotient { basis: Vec::new(), maps: vec![Vec::new()] });
    }
    for w in basis {
        rsd.algebra().check_weight(w)?;
    }
    let rows: Vec<Vec<i64>> = basis.iter().map(|w| w.coords().to_vec()).collect();
    let solver = SpanSolver::new(&rows).ok_or(Error::DependentBasis)?;
    let group = enumerate_weyl_group(rsd, limits)?;
    let r = basis.len();
    let mut seen: BTreeSet<Vec<Vec<Rat>>> = BTreeSet::new();
    for elem in group.iter_elements() {
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(r);
        let mut inside = true;
        for b in basis {
            let img = group.apply(&elem, b);
            match solver.coordinates_int(img.coords()) {
                Some(c) => cols.push(c),
                None => {
                    inside = false;
                    break;
                }
            }
        }
        if !inside {
            continue;
        }
        let map: Vec<Vec<Rat>> = (0..r)
            .map(|j| canonical_rat_vec(&(0..r).map(|k| cols[k][j]).collect::<Vec<_>>()))
            .collect();
        seen.insert(map);
    }
    Ok(SubspaceQuotient { basis: basis.to_vec(), maps: seen.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Family, SimpleFactor};
    use crate::roots::build_root_system;

    fn rsd(factors: &[(Family, usize)], torus: usize) -> RootSystemData {
        let alg = ReductiveAlgebra::new(
            factors.iter().map(|&(f, r)| SimpleFactor::new(f, r).unwrap()).collect(),
            torus,
        );
        build_root_system(&alg)
    }

    #[test]
    fn small_group_orders() {
        let limits = Limits::default();
        assert_eq!(enumerate_weyl_group(&rsd(&[(Family::A, 1)], 0), &limits).unwrap().order(), 2);
        assert_eq!(enumerate_weyl_group(&rsd(&[(Family::A, 2)], 0), &limits).unwrap().order(), 6);
        assert_eq!(enumerate_weyl_group(&rsd(&[(Family::B, 2)], 0), &limits).unwrap().order(), 8);
        assert_eq!(enumerate_weyl_group(&rsd(&[(Family::G, 2)], 0), &limits).unwrap().order(), 12);
        assert_eq!(
            enumerate_weyl_group(&rsd(&[(Family::A, 1), (Family::A, 2)], 1), &limits)
                .unwrap()
                .order(),
            12
        );
        // Torus only: trivial group.
        assert_eq!(enumerate_weyl_group(&rsd(&[], 2), &limits).unwrap().elements().len(), 1);
    }

    #[test]
    fn e6_group_order_by_closure() {
        let g = enumerate_weyl_group(&rsd(&[(Family::E, 6)], 0), &Limits::default()).unwrap();
        assert_eq!(g.order(), 51_840);
    }

    #[test]
    fn group_cap_enforced() {
        let tiny = Limits { orbit_cap: 1_000_000, group_cap: 100 };
        let err = enumerate_weyl_group(&rsd(&[(Family::F, 4)], 0), &tiny).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { order: 1152, cap: 100 });
    }

    #[test]
    fn closed_under_composition() {
        let r = rsd(&[(Family::A, 2)], 0);
        let g = enumerate_weyl_group(&r, &Limits::default()).unwrap();
        let elems = g.elements();
        for a in &elems {
            for b in &elems {
                let c = g.compose(a, b);
                assert!(elems.contains(&c));
                let w = Weight::new(vec![2, -1]);
                assert_eq!(g.apply(&c, &w), g.apply(a, &g.apply(b, &w)));
            }
        }
    }

    #[test]
    fn root_permutations_match_matrix_action() {
        let r = rsd(&[(Family::B, 2), (Family::A, 1)], 0);
        let g = enumerate_weyl_group(&r, &Limits::default()).unwrap();
        for elem in g.iter_elements() {
            let perm = g.root_permutation(&elem);
            let mut seen = vec![false; perm.len()];
            for &p in &perm {
                assert!(!seen[p as usize]);
                seen[p as usize] = true;
            }
            for (i, root) in r.roots().iter().enumerate() {
                let img = g.apply(&elem, &root.weight);
                assert_eq!(r.roots()[perm[i] as usize].weight, img);
            }
        }
    }

    #[test]
    fn empty_basis_gives_trivial_quotient() {
        let r = rsd(&[(Family::A, 1)], 0);
        let q = subspace_normalizer_quotient(&[], &r, &Limits::default()).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn a1_line_quotient_is_sign_flip() {
        let r = rsd(&[(Family::A, 1)], 0);
        let basis = vec![Weight::new(vec![1])];
        let q = subspace_normalizer_quotient(&basis, &r, &Limits::default()).unwrap();
        assert_eq!(q.order(), 2);
        let images: BTreeSet<Vec<Rat>> = (0..2)
            .map(|g| q.apply(g, &[Rat::from_integer(1)]))
            .collect();
        let expect: BTreeSet<Vec<Rat>> =
            [vec![Rat::from_integer(1)], vec![Rat::from_integer(-1)]].into_iter().collect();
        assert_eq!(images, expect);
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = rsd(&[(Family::A, 2)], 0);
        let basis = vec![Weight::new(vec![1, 0]), Weight::new(vec![2, 0])];
        assert!(matches!(
            subspace_normalizer_quotient(&basis, &r, &Limits::default()),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn torus_coordinates_are_fixed() {
        let r = rsd(&[(Family::A, 2)], 1);
        let g = enumerate_weyl_group(&r, &Limits::default()).unwrap();
        let w = Weight::new(vec![1, 0, 5]);
        for elem in g.iter_elements() {
            assert_eq!(g.apply(&elem, &w).coords()[2], 5);
        }
    }
}
