//! Weight multisets of finite-dimensional representations.
//!
//! Irreducible weight systems are computed with Freudenthal's multiplicity
//! recursion, run factor by factor entirely in integer arithmetic: with the
//! inner product normalized by the half squared root norms `d_i`, both sides
//! of the recursion are integers and the division is exact. Every constructed
//! multiset is cross-checked against the Weyl dimension formula, which is an
//! independent computation.
//!
//! A symplectic representation is described by a [`RepSpec`]: the acting
//! reductive algebra together with a list of indecomposable components, each
//! of type 1 (irreducible symplectic) or type 2 (`U + U*` with `U` irreducible
//! and not self-symplectic).

use std::collections::BTreeMap;

use num::BigUint;
use serde::Serialize;

use crate::algebra::{ReductiveAlgebra, SimpleFactor, Weight};
use crate::error::{Error, Result};
use crate::linalg::{solve_square, Rat};
use crate::roots::{build_root_system, RootSystemData};

/// Weight -> multiplicity map over a fixed coordinate dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
    dim: usize,
}

impl WeightMultiset {
    pub fn empty(dim: usize) -> Self {
        WeightMultiset { entries: BTreeMap::new(), dim }
    }

    pub fn singleton(w: Weight) -> Self {
        let dim = w.dim();
        let mut entries = BTreeMap::new();
        entries.insert(w, 1);
        WeightMultiset { entries, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        debug_assert_eq!(w.dim(), self.dim);
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.contains_key(w)
    }

    /// Total multiplicity: the dimension of the representation.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    /// Multiset union.
    pub fn union(&self, other: &WeightMultiset) -> Result<WeightMultiset> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w.clone(), m);
        }
        Ok(out)
    }

    /// Negates every weight; multiplicities carry over. Involutive.
    pub fn dual(&self) -> WeightMultiset {
        let mut out = WeightMultiset::empty(self.dim);
        for (w, m) in self.iter() {
            out.insert(w.neg(), m);
        }
        out
    }

    /// Removes `mult` copies of `w`; errors if not present with enough
    /// multiplicity.
    pub fn remove(&mut self, w: &Weight, mult: u64) -> Result<()> {
        match self.entries.get_mut(w) {
            Some(m) if *m > mult => {
                *m -= mult;
                Ok(())
            }
            Some(m) if *m == mult => {
                self.entries.remove(w);
                Ok(())
            }
            _ => Err(Error::InternalInconsistency(format!(
                "cannot remove {mult} copies of {w}"
            ))),
        }
    }

    /// True if every multiplicity is 1 (weight multiplicity free).
    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// True if the multiset equals its own dual.
    pub fn is_self_dual(&self) -> bool {
        self.entries.iter().all(|(w, m)| self.multiplicity(&w.neg()) == *m)
    }

    /// Weyl invariance: simple reflections preserve multiplicities.
    pub fn is_weyl_invariant(&self, rsd: &RootSystemData) -> bool {
        for &(fi, node) in rsd.simple_reflection_ids().iter() {
            for (w, m) in self.iter() {
                let mut img = w.clone();
                rsd.simple_reflect_in_place(&mut img, fi, node);
                if self.multiplicity(&img) != m {
                    return false;
                }
            }
        }
        true
    }

    /// Factor blocks and torus coordinates on which some weight is nonzero.
    pub(crate) fn support(&self, algebra: &ReductiveAlgebra) -> (Vec<usize>, Vec<usize>) {
        let mut factors = vec![false; algebra.factors().len()];
        let mut torus = vec![false; algebra.torus_rank()];
        for w in self.weights() {
            for (fi, _) in algebra.factors().iter().enumerate() {
                if w.coords()[algebra.factor_block(fi)].iter().any(|&c| c != 0) {
                    factors[fi] = true;
                }
            }
            let tb = algebra.torus_block();
            for (k, &c) in w.coords()[tb].iter().enumerate() {
                if c != 0 {
                    torus[k] = true;
                }
            }
        }
        (
            factors.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect(),
            torus.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect(),
        )
    }
}

/// Outer tensor product of two multisets supported on disjoint blocks of the
/// same product algebra: coordinate-wise sums with multiplied multiplicities.
pub fn outer_tensor(
    algebra: &ReductiveAlgebra,
    a: &WeightMultiset,
    b: &WeightMultiset,
) -> Result<WeightMultiset> {
    if a.dim() != algebra.dim() || b.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch { expected: algebra.dim(), got: a.dim().max(b.dim()) });
    }
    let (fa, ta) = a.support(algebra);
    let (fb, tb) = b.support(algebra);
    if fa.iter().any(|i| fb.contains(i)) || ta.iter().any(|i| tb.contains(i)) {
        return Err(Error::OverlappingBlocks);
    }
    let mut out = WeightMultiset::empty(algebra.dim());
    for (wa, ma) in a.iter() {
        for (wb, mb) in b.iter() {
            out.insert(wa.add(wb), ma * mb);
        }
    }
    Ok(out)
}

/// Exact dimension of the irreducible with highest weight `hw` (Weyl
/// dimension formula, evaluated per simple factor in big-integer arithmetic).
pub fn weyl_dimension(algebra: &ReductiveAlgebra, hw: &Weight) -> Result<u64> {
    algebra.check_weight(hw)?;
    if !algebra.is_dominant(hw) {
        return Err(Error::NotDominant);
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (fi, factor) in algebra.factors().iter().enumerate() {
        let block = algebra.factor_block(fi);
        let local = ReductiveAlgebra::new(vec![*factor], 0);
        let rsd = build_root_system(&local);
        let c = &hw.coords()[block];
        for root in rsd.positive_roots() {
            let lam_rho: i64 = c
                .iter()
                .zip(&root.coroot_coeffs)
                .map(|(&ci, &mi)| (ci + 1) * mi)
                .sum();
            let rho: i64 = root.coroot_coeffs.iter().sum();
            num *= BigUint::from(lam_rho as u64);
            den *= BigUint::from(rho as u64);
        }
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    if r != BigUint::from(0u32) {
        return Err(Error::InternalInconsistency("Weyl dimension is not integral".into()));
    }
    u64::try_from(q).map_err(|_| Error::InternalInconsistency("dimension exceeds u64".into()))
}

/// Dominant weights `mu <= lambda` of one simple factor, with multiplicities,
/// by Freudenthal's recursion. Local coordinates.
fn factor_dominant_multiplicities(
    factor: SimpleFactor,
    lambda: &[i64],
) -> Result<Vec<(Vec<i64>, Vec<i64>, u64)>> {
    let r = factor.rank();
    let p = factor.pairing_matrix();
    let d = factor.root_norms();
    let local = ReductiveAlgebra::new(vec![factor], 0);
    let rsd = build_root_system(&local);

    // Box bound: mu = lambda - k^T P dominant forces k_i <= (lambda P^{-1})_i,
    // because the inverse of a finite-type Cartan matrix is entrywise positive.
    let pt: Vec<Vec<Rat>> = (0..r)
        .map(|i| (0..r).map(|j| Rat::from_integer(p[j][i] as i128)).collect())
        .collect();
    let rhs: Vec<Rat> = lambda.iter().map(|&c| Rat::from_integer(c as i128)).collect();
    let kmax = solve_square(&pt, &rhs)
        .ok_or_else(|| Error::InternalInconsistency("singular Cartan matrix".into()))?;
    let kmax: Vec<i64> = kmax.iter().map(|x| (x.numer() / x.denom()) as i64).collect();
    if kmax.iter().any(|&k| k < 0) {
        return Err(Error::NotDominant);
    }
    let box_size: i128 = kmax.iter().map(|&k| k as i128 + 1).product();
    if box_size > 20_000_000 {
        return Err(Error::InternalInconsistency(format!(
            "dominant-weight candidate box of size {box_size} is too large"
        )));
    }

    // Enumerate dominant candidates in the box, keyed by root coordinates k.
    let mut candidates: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut k = vec![0i64; r];
    'outer: loop {
        let mu: Vec<i64> = (0..r)
            .map(|j| lambda[j] - (0..r).map(|i| k[i] * p[i][j]).sum::<i64>())
            .collect();
        if mu.iter().all(|&c| c >= 0) {
            candidates.push((k.clone(), mu));
        }
        let mut idx = 0;
        loop {
            if idx == r {
                break 'outer;
            }
            k[idx] += 1;
            if k[idx] <= kmax[idx] {
                break;
            }
            k[idx] = 0;
            idx += 1;
        }
    }
    candidates.sort_by_key(|(k, _)| (k.iter().sum::<i64>(), k.clone()));

    let mut mult: BTreeMap<Vec<i64>, i128> = BTreeMap::new();
    let positive: Vec<&crate::roots::Root> = rsd.positive_roots().collect();
    let mut out = Vec::with_capacity(candidates.len());
    for (kvec, mu) in &candidates {
        let height: i64 = kvec.iter().sum();
        let m = if height == 0 {
            1i128
        } else {
            let mut rhs_sum: i128 = 0;
            for root in &positive {
                let alpha_c = root.weight.coords();
                let alpha_k = &root.root_coeffs;
                let mut step = 1i64;
                loop {
                    // nu = mu + step * alpha must stay inside lambda - Q^+.
                    let resid: Vec<i64> =
                        (0..r).map(|i| kvec[i] - step * alpha_k[i]).collect();
                    if resid.iter().any(|&x| x < 0) {
                        break;
                    }
                    let nu: Vec<i64> =
                        (0..r).map(|j| mu[j] + step * alpha_c[j]).collect();
                    let dom = rsd.dominant_conjugate(&Weight::new(nu.clone()));
                    if let Some(&mnu) = mult.get(dom.coords()) {
                        let inner: i64 = (0..r).map(|j| nu[j] * alpha_k[j] * d[j]).sum();
                        rhs_sum += mnu * inner as i128;
                    }
                    step += 1;
                }
            }
            // (lambda + mu + 2 rho, lambda - mu), same normalization.
            let coeff: i128 = (0..r)
                .map(|i| kvec[i] as i128 * d[i] as i128 * (lambda[i] + mu[i] + 2) as i128)
                .sum();
            if coeff <= 0 {
                return Err(Error::InternalInconsistency("nonpositive Freudenthal pivot".into()));
            }
            let m = 2 * rhs_sum / coeff;
            if 2 * rhs_sum % coeff != 0 || m < 0 {
                return Err(Error::InternalInconsistency(
                    "Freudenthal recursion produced a non-integral multiplicity".into(),
                ));
            }
            m
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu.clone(), kvec.clone(), m as u64));
        }
    }
    Ok(out)
}

/// Complete weight multiset of the irreducible with highest weight `hw`.
///
/// Computed per simple factor (dominant multiplicities by Freudenthal, then
/// Weyl orbit expansion) and assembled as an outer product; the torus block of
/// `hw` is carried onto every weight. The total multiplicity is checked
/// against [`weyl_dimension`] on every call.
pub fn irrep_weights(algebra: &ReductiveAlgebra, hw: &Weight) -> Result<WeightMultiset> {
    algebra.check_weight(hw)?;
    if !algebra.is_dominant(hw) {
        return Err(Error::NotDominant);
    }
    // Per-factor weight lists (local coordinates).
    let mut per_factor: Vec<Vec<(Vec<i64>, u64)>> = Vec::new();
    for (fi, factor) in algebra.factors().iter().enumerate() {
        let block = algebra.factor_block(fi);
        let lambda = &hw.coords()[block];
        let local_alg = ReductiveAlgebra::new(vec![*factor], 0);
        let local_rsd = build_root_system(&local_alg);
        let mut weights: Vec<(Vec<i64>, u64)> = Vec::new();
        for (mu, _k, m) in factor_dominant_multiplicities(*factor, lambda)? {
            let orbit = local_rsd.weyl_orbit(
                &Weight::new(mu),
                &crate::roots::Limits::default(),
            )?;
            for w in orbit {
                weights.push((w.into_coords(), m));
            }
        }
        per_factor.push(weights);
    }
    // Assemble the outer product, then append the torus block.
    let dim = algebra.dim();
    let torus = &hw.coords()[algebra.torus_block()];
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for weights in &per_factor {
        let mut next = Vec::with_capacity(acc.len() * weights.len());
        for (prefix, m) in &acc {
            for (w, mw) in weights {
                let mut coords = prefix.clone();
                coords.extend_from_slice(w);
                next.push((coords, m * mw));
            }
        }
        acc = next;
    }
    let mut out = WeightMultiset::empty(dim);
    for (mut coords, m) in acc {
        coords.extend_from_slice(torus);
        out.insert(Weight::new(coords), m);
    }
    let expected = weyl_dimension(algebra, hw)?;
    if out.total() != expected {
        return Err(Error::InternalInconsistency(format!(
            "irrep weight count {} disagrees with Weyl dimension {}",
            out.total(),
            expected
        )));
    }
    Ok(out)
}

/// Frobenius-Schur class of an irreducible highest weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FsClass {
    Symplectic,
    Orthogonal,
    /// Not self-dual (no invariant bilinear form).
    None,
}

/// Classifies the irreducible with highest weight `hw`.
///
/// A nonzero torus character rules out self-duality immediately. Otherwise
/// self-duality holds iff `-hw` lies in the Weyl orbit of `hw` (equivalently,
/// its dominant conjugate is `hw` again), and the parity of `<hw, 2 rho^vee>`
/// distinguishes symplectic (odd) from orthogonal (even).
pub fn fs_classification(rsd: &RootSystemData, hw: &Weight) -> Result<FsClass> {
    let algebra = rsd.algebra();
    algebra.check_weight(hw)?;
    if !algebra.is_dominant(hw) {
        return Err(Error::NotDominant);
    }
    if hw.coords()[algebra.torus_block()].iter().any(|&c| c != 0) {
        return Ok(FsClass::None);
    }
    if rsd.dual_highest_weight(hw) != *hw {
        return Ok(FsClass::None);
    }
    if rsd.pair_two_rho(hw) % 2 != 0 {
        Ok(FsClass::Symplectic)
    } else {
        Ok(FsClass::Orthogonal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Type1,
    Type2,
}

/// One indecomposable symplectic component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Highest weight of the component (of `U` for type 2).
    pub highest_weight: Weight,
    /// The full weight system of the component.
    pub weights: WeightMultiset,
    /// Type 2 only: the weight system of `U`.
    pub u_weights: Option<WeightMultiset>,
}

impl Component {
    /// Irreducible symplectic component. The highest weight must carry a
    /// trivial torus character and classify as symplectic.
    pub fn type1(rsd: &RootSystemData, hw: Weight) -> Result<Component> {
        match fs_classification(rsd, &hw)? {
            FsClass::Symplectic => {}
            other => {
                return Err(Error::InvalidComponent(format!(
                    "type-1 component requires a symplectic irreducible, found {other:?}"
                )))
            }
        }
        let weights = irrep_weights(rsd.algebra(), &hw)?;
        Ok(Component { kind: ComponentKind::Type1, highest_weight: hw, weights, u_weights: None })
    }

    /// `U + U*` from the highest weight of `U` (torus coordinates allowed).
    pub fn type2(rsd: &RootSystemData, hw_u: Weight) -> Result<Component> {
        let u = irrep_weights(rsd.algebra(), &hw_u)?;
        let weights = u.union(&u.dual())?;
        Ok(Component {
            kind: ComponentKind::Type2,
            highest_weight: hw_u,
            weights,
            u_weights: Some(u),
        })
    }

    pub fn dimension(&self) -> u64 {
        self.weights.total()
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.weights().all(|w| w.is_zero())
    }
}

/// Description of what to build, used by [`RepSpec::assemble`].
#[derive(Debug, Clone)]
pub enum ComponentSpec {
    /// Irreducible symplectic component with this highest weight.
    Type1(Weight),
    /// `U + U*`; the weight is the highest weight of `U` and may already
    /// carry a nonzero torus character.
    Type2(Weight),
}

/// A symplectic representation: algebra, components, saturation flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepSpec {
    algebra: ReductiveAlgebra,
    components: Vec<Component>,
    saturated: bool,
}

impl RepSpec {
    /// Materializes components over `algebra`. Trivial summands are rejected.
    pub fn assemble(algebra: ReductiveAlgebra, specs: Vec<ComponentSpec>) -> Result<RepSpec> {
        let rsd = build_root_system(&algebra);
        let mut components = Vec::with_capacity(specs.len());
        for spec in specs {
            let comp = match spec {
                ComponentSpec::Type1(hw) => Component::type1(&rsd, hw)?,
                ComponentSpec::Type2(hw) => Component::type2(&rsd, hw)?,
            };
            if comp.is_trivial() {
                return Err(Error::InvalidComponent("trivial components are not allowed".into()));
            }
            components.push(comp);
        }
        let saturated = all_type2_have_exclusive_torus(&algebra, &components);
        Ok(RepSpec { algebra, components, saturated })
    }

    /// Single irreducible symplectic component.
    pub fn type1(algebra: ReductiveAlgebra, hw: Weight) -> Result<RepSpec> {
        RepSpec::assemble(algebra, vec![ComponentSpec::Type1(hw)])
    }

    /// `T(U)`: extends the algebra by one torus coordinate acting with weight
    /// `+1` on `U` and `-1` on `U*`.
    pub fn t_of(algebra: &ReductiveAlgebra, hw_u: &Weight) -> Result<RepSpec> {
        algebra.check_weight(hw_u)?;
        let ext = algebra.extend_torus(1);
        let mut coords = hw_u.coords().to_vec();
        coords.push(1);
        RepSpec::assemble(ext, vec![ComponentSpec::Type2(Weight::new(coords))])
    }

    pub fn algebra(&self) -> &ReductiveAlgebra {
        &self.algebra
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn dimension(&self) -> u64 {
        self.components.iter().map(|c| c.dimension()).sum()
    }

    /// The weight system of the whole representation (multiset union).
    pub fn total_weights(&self) -> WeightMultiset {
        let mut out = WeightMultiset::empty(self.algebra.dim());
        for c in &self.components {
            for (w, m) in c.weights.iter() {
                out.insert(w.clone(), m);
            }
        }
        out
    }

    /// Direct sum over a shared algebra.
    pub fn direct_sum(specs: &[&RepSpec]) -> Result<RepSpec> {
        let Some(first) = specs.first() else {
            return Err(Error::AlgebraMismatch);
        };
        let algebra = first.algebra.clone();
        let mut components = Vec::new();
        for s in specs {
            if s.algebra != algebra {
                return Err(Error::AlgebraMismatch);
            }
            components.extend(s.components.iter().cloned());
        }
        let saturated = all_type2_have_exclusive_torus(&algebra, &components);
        Ok(RepSpec { algebra, components, saturated })
    }

    /// Adds one torus coordinate (weights `+1` on `U`, `-1` on `U*`) to every
    /// type-2 component that does not already own an exclusive splitting
    /// torus coordinate. Type-1 components are untouched. Idempotent.
    pub fn saturate(&self) -> RepSpec {
        let needs: Vec<usize> = self
            .components
            .iter()
            .enumerate()
            .filter(|(i, c)| {
                c.kind == ComponentKind::Type2
                    && exclusive_torus_coord(&self.algebra, &self.components, *i).is_none()
            })
            .map(|(i, _)| i)
            .collect();
        if needs.is_empty() {
            let mut out = self.clone();
            out.saturated = true;
            return out;
        }
        let extra = needs.len();
        let algebra = self.algebra.extend_torus(extra);
        let old_dim = self.algebra.dim();
        let pad = |w: &Weight, comp_pos: Option<usize>, sign: i64| -> Weight {
            let mut coords = w.coords().to_vec();
            coords.extend(std::iter::repeat(0).take(extra));
            if let Some(pos) = comp_pos {
                coords[old_dim + pos] = sign;
            }
            Weight::new(coords)
        };
        let mut components = Vec::with_capacity(self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let slot = needs.iter().position(|&j| j == i);
            match c.kind {
                ComponentKind::Type1 => {
                    let mut weights = WeightMultiset::empty(algebra.dim());
                    for (w, m) in c.weights.iter() {
                        weights.insert(pad(w, None, 0), m);
                    }
                    components.push(Component {
                        kind: ComponentKind::Type1,
                        highest_weight: pad(&c.highest_weight, None, 0),
                        weights,
                        u_weights: None,
                    });
                }
                ComponentKind::Type2 => {
                    let u_old = c.u_weights.as_ref().expect("type-2 component has U weights");
                    let mut u = WeightMultiset::empty(algebra.dim());
                    for (w, m) in u_old.iter() {
                        u.insert(pad(w, slot, 1), m);
                    }
                    let weights = u.union(&u.dual()).expect("same dimension");
                    components.push(Component {
                        kind: ComponentKind::Type2,
                        highest_weight: pad(&c.highest_weight, slot, 1),
                        weights,
                        u_weights: Some(u),
                    });
                }
            }
        }
        RepSpec { algebra, components, saturated: true }
    }
}

/// Finds a torus coordinate that splits component `ci`: constant nonzero on
/// its `U` side and zero on every weight of every other component.
pub(crate) fn exclusive_torus_coord(
    algebra: &ReductiveAlgebra,
    components: &[Component],
    ci: usize,
) -> Option<usize> {
    let comp = &components[ci];
    let u = comp.u_weights.as_ref()?;
    let tb = algebra.torus_block();
    'coord: for (k, t) in tb.clone().enumerate() {
        let mut val = None;
        for w in u.weights() {
            let c = w.coords()[t];
            match val {
                None => val = Some(c),
                Some(v) if v != c => continue 'coord,
                _ => {}
            }
        }
        match val {
            Some(v) if v != 0 => {}
            _ => continue 'coord,
        }
        for (j, other) in components.iter().enumerate() {
            if j == ci {
                continue;
            }
            if other.weights.weights().any(|w| w.coords()[t] != 0) {
                continue 'coord;
            }
        }
        return Some(k);
    }
    None
}

fn all_type2_have_exclusive_torus(
    algebra: &ReductiveAlgebra,
    components: &[Component],
) -> bool {
    components
        .iter()
        .enumerate()
        .all(|(i, c)| {
            c.kind == ComponentKind::Type1
                || exclusive_torus_coord(algebra, components, i).is_some()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Family;

    fn alg(factors: &[(Family, usize)], torus: usize) -> ReductiveAlgebra {
        ReductiveAlgebra::new(
            factors.iter().map(|&(f, r)| SimpleFactor::new(f, r).unwrap()).collect(),
            torus,
        )
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn sl2_symmetric_cube_weights() {
        // Oracle: the sl2 string rule gives S^k(C^2) the weights {k, k-2, ..., -k},
        // each with multiplicity one.
        let a = alg(&[(Family::A, 1)], 0);
        let ms = irrep_weights(&a, &w(&[3])).unwrap();
        let expected: Vec<i64> = vec![3, 1, -1, -3];
        assert_eq!(ms.total(), 4);
        for k in expected {
            assert_eq!(ms.multiplicity(&w(&[k])), 1);
        }
    }

    #[test]
    fn dimension_table_values() {
        // Known dimensions behind the classification tables.
        let cases: Vec<(ReductiveAlgebra, Vec<i64>, u64)> = vec![
            (alg(&[(Family::A, 5)], 0), vec![0, 0, 1, 0, 0], 20),
            (alg(&[(Family::C, 3)], 0), vec![0, 0, 1], 14),
            (alg(&[(Family::E, 7)], 0), vec![0, 0, 0, 0, 0, 0, 1], 56),
            (alg(&[(Family::B, 6)], 0), vec![0, 0, 0, 0, 0, 1], 64),
            (alg(&[(Family::B, 5)], 0), vec![0, 0, 0, 0, 1], 32),
            (alg(&[(Family::D, 6)], 0), vec![0, 0, 0, 0, 0, 1], 32),
            (alg(&[(Family::B, 3)], 0), vec![0, 0, 1], 8),
            (alg(&[(Family::B, 4)], 0), vec![0, 0, 0, 1], 16),
            (alg(&[(Family::D, 5)], 0), vec![0, 0, 0, 0, 1], 16),
            (alg(&[(Family::E, 6)], 0), vec![1, 0, 0, 0, 0, 0], 27),
            (alg(&[(Family::G, 2)], 0), vec![1, 0], 7),
            (alg(&[(Family::B, 2)], 0), vec![1, 0], 5),
        ];
        for (a, hw, dim) in cases {
            assert_eq!(weyl_dimension(&a, &w(&hw)).unwrap(), dim, "hw {hw:?}");
            let ms = irrep_weights(&a, &w(&hw)).unwrap();
            assert_eq!(ms.total(), dim);
        }
    }

    #[test]
    fn trivial_weight_gives_dimension_one() {
        let a = alg(&[(Family::F, 4)], 0);
        assert_eq!(weyl_dimension(&a, &w(&[0, 0, 0, 0])).unwrap(), 1);
    }

    #[test]
    fn not_dominant_rejected() {
        let a = alg(&[(Family::A, 2)], 0);
        assert_eq!(weyl_dimension(&a, &w(&[-1, 0])), Err(Error::NotDominant));
        assert_eq!(irrep_weights(&a, &w(&[-1, 0])).unwrap_err(), Error::NotDominant);
    }

    #[test]
    fn adjoint_of_sl3_has_double_zero_weight() {
        // Structural oracle: the adjoint weights are the six roots plus zero
        // with multiplicity two (the rank).
        let a = alg(&[(Family::A, 2)], 0);
        let rsd = build_root_system(&a);
        let ms = irrep_weights(&a, &w(&[1, 1])).unwrap();
        assert_eq!(ms.total(), 8);
        assert_eq!(ms.multiplicity(&w(&[0, 0])), 2);
        for r in rsd.roots() {
            assert_eq!(ms.multiplicity(&r.weight), 1);
        }
    }

    #[test]
    fn dual_of_standard_sl3() {
        let a = alg(&[(Family::A, 2)], 0);
        let rsd = build_root_system(&a);
        let std = irrep_weights(&a, &w(&[1, 0])).unwrap();
        let dual = std.dual();
        // Re-dominate the lowest weight: the dual has highest weight omega_2.
        assert_eq!(rsd.dual_highest_weight(&w(&[1, 0])), w(&[0, 1]));
        assert_eq!(dual, irrep_weights(&a, &w(&[0, 1])).unwrap());
        assert_eq!(dual.dual(), std);
    }

    #[test]
    fn fs_classification_table_cases() {
        let c3 = alg(&[(Family::C, 3)], 0);
        let rsd = build_root_system(&c3);
        assert_eq!(fs_classification(&rsd, &w(&[1, 0, 0])).unwrap(), FsClass::Symplectic);
        assert_eq!(fs_classification(&rsd, &w(&[0, 0, 1])).unwrap(), FsClass::Symplectic);

        let b3 = alg(&[(Family::B, 3)], 0);
        let rsd = build_root_system(&b3);
        assert_eq!(fs_classification(&rsd, &w(&[0, 0, 1])).unwrap(), FsClass::Orthogonal);

        let a5 = alg(&[(Family::A, 5)], 0);
        let rsd = build_root_system(&a5);
        assert_eq!(fs_classification(&rsd, &w(&[0, 0, 1, 0, 0])).unwrap(), FsClass::Symplectic);
        assert_eq!(fs_classification(&rsd, &w(&[1, 0, 0, 0, 0])).unwrap(), FsClass::None);

        // A nontrivial torus character forces None.
        let glish = alg(&[(Family::C, 2)], 1);
        let rsd = build_root_system(&glish);
        assert_eq!(fs_classification(&rsd, &w(&[1, 0, 1])).unwrap(), FsClass::None);
    }

    #[test]
    fn outer_tensor_dimensions_multiply() {
        // so3 x sp4 on C^3 (x) C^4: 12 weights.
        let a = alg(&[(Family::A, 1), (Family::C, 2)], 0);
        let so3 = irrep_weights(&a, &w(&[2, 0, 0])).unwrap();
        let sp4 = irrep_weights(&a, &w(&[0, 1, 0])).unwrap();
        let t = outer_tensor(&a, &so3, &sp4).unwrap();
        assert_eq!(t.total(), 12);
        assert_eq!(t, irrep_weights(&a, &w(&[2, 1, 0])).unwrap());
        assert_eq!(outer_tensor(&a, &so3, &so3), Err(Error::OverlappingBlocks));
    }

    #[test]
    fn outer_tensor_with_trivial_pads() {
        let a = alg(&[(Family::A, 1), (Family::B, 3)], 0);
        let std = irrep_weights(&a, &w(&[1, 0, 0, 0])).unwrap();
        let triv = WeightMultiset::singleton(a.zero_weight());
        assert_eq!(outer_tensor(&a, &std, &triv).unwrap(), std);
        // sl2 (x) spin7: dimension 16.
        let spin = irrep_weights(&a, &w(&[0, 0, 0, 1])).unwrap();
        let t = outer_tensor(&a, &std, &spin).unwrap();
        assert_eq!(t.total(), 16);
    }

    #[test]
    fn t_of_sl2_standard() {
        let a = alg(&[(Family::A, 1)], 0);
        let spec = RepSpec::t_of(&a, &w(&[1])).unwrap();
        assert!(spec.is_saturated());
        assert_eq!(spec.dimension(), 4);
        let lam = spec.total_weights();
        for coords in [[1, 1], [-1, 1], [1, -1], [-1, -1]] {
            assert_eq!(lam.multiplicity(&w(&coords)), 1);
        }
    }

    #[test]
    fn t_of_e6_and_gl4_wedge() {
        let e6 = alg(&[(Family::E, 6)], 0);
        let spec = RepSpec::t_of(&e6, &w(&[1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(spec.dimension(), 54);

        let sl4 = alg(&[(Family::A, 3)], 0);
        let spec = RepSpec::t_of(&sl4, &w(&[0, 1, 0])).unwrap();
        assert_eq!(spec.dimension(), 12);
    }

    #[test]
    fn saturate_adds_tori_per_type2() {
        // (SL_3, C^3 + C^3*) unsaturated: one new torus coordinate.
        let a = alg(&[(Family::A, 2)], 0);
        let spec =
            RepSpec::assemble(a, vec![ComponentSpec::Type2(w(&[1, 0]))]).unwrap();
        assert!(!spec.is_saturated());
        let sat = spec.saturate();
        assert!(sat.is_saturated());
        assert_eq!(sat.algebra().torus_rank(), 1);
        assert_eq!(sat.saturate(), sat);

        // Two type-2 components get two independent coordinates.
        let a = alg(&[(Family::A, 2)], 0);
        let spec = RepSpec::assemble(
            a,
            vec![ComponentSpec::Type2(w(&[1, 0])), ComponentSpec::Type2(w(&[2, 0]))],
        )
        .unwrap();
        let sat = spec.saturate();
        assert_eq!(sat.algebra().torus_rank(), 2);
        assert!(sat.is_saturated());
    }

    #[test]
    fn trivial_component_rejected() {
        let a = alg(&[(Family::A, 1)], 0);
        let err = RepSpec::assemble(a, vec![ComponentSpec::Type2(w(&[0]))]).unwrap_err();
        assert!(matches!(err, Error::InvalidComponent(_)));
    }

    #[test]
    fn type1_requires_symplectic() {
        let a = alg(&[(Family::A, 2)], 0);
        let err = RepSpec::type1(a, w(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::InvalidComponent(_)));
    }

    #[test]
    fn direct_sum_unions_weights() {
        let a = alg(&[(Family::A, 1)], 0);
        let s3 = RepSpec::type1(a.clone(), w(&[3])).unwrap();
        let sum = RepSpec::direct_sum(&[&s3, &s3]).unwrap();
        assert_eq!(sum.dimension(), 8);
        let lam = sum.total_weights();
        assert_eq!(lam.multiplicity(&w(&[3])), 2);
        let b = alg(&[(Family::A, 2)], 0);
        let other = RepSpec::assemble(b, vec![ComponentSpec::Type2(w(&[1, 0]))]).unwrap();
        assert_eq!(RepSpec::direct_sum(&[&s3, &other]), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn weyl_invariance_of_irreps() {
        let a = alg(&[(Family::C, 2)], 0);
        let rsd = build_root_system(&a);
        for hw in [[1, 0], [0, 1], [1, 1], [2, 0]] {
            let ms = irrep_weights(&a, &w(&hw)).unwrap();
            assert!(ms.is_weyl_invariant(&rsd));
            assert!(ms.is_self_dual());
        }
    }
}
