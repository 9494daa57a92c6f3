//! Root system construction and Weyl orbit generation.
//!
//! Roots are generated per simple factor by closing the simple roots under
//! simple reflections, tracking three coordinate systems at once: the
//! fundamental-weight coordinates of the root, its simple-root coefficients
//! (for positivity), and its simple-coroot coefficients (for pairings).
//! The central torus contributes no roots.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::algebra::{ReductiveAlgebra, Weight};
use crate::error::{Error, Result};

/// Enumeration caps. Orbit generation and Weyl group enumeration refuse to
/// proceed past these sizes; both are configurable from the CLI.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub orbit_cap: usize,
    pub group_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { orbit_cap: 10_000_000, group_cap: 1_000_000 }
    }
}

/// A root together with its coroot data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Root {
    /// The root as a weight (torus block identically zero).
    pub weight: Weight,
    /// Coefficients over the simple roots (length = semisimple rank).
    pub root_coeffs: Vec<i64>,
    /// Coefficients of the coroot over the simple coroots.
    pub coroot_coeffs: Vec<i64>,
    /// Index of the owning simple factor.
    pub factor: usize,
}

/// The full root datum of a reductive algebra.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    algebra: ReductiveAlgebra,
    roots: Vec<Root>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    /// 2 rho-check: sum of the positive coroots, in simple-coroot coordinates.
    two_rho_covector: Vec<i64>,
    /// Lookup from fundamental-weight coordinates to root index.
    index: HashMap<Vec<i64>, usize>,
    /// Per-factor pairing matrices, cached for the reflection loops.
    pairing_rows: Vec<Vec<Vec<i64>>>,
}

/// Closes the simple roots of one factor under simple reflections.
/// Entries are (fw coords, simple-root coeffs, simple-coroot coeffs),
/// all local to the factor.
fn close_factor_roots(p: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let r = p.len();
    let mut seen: HashMap<Vec<i64>, (Vec<i64>, Vec<i64>)> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>, Vec<i64>)> = VecDeque::new();
    for i in 0..r {
        let fw = p[i].clone();
        let mut rc = vec![0i64; r];
        rc[i] = 1;
        let mut cc = vec![0i64; r];
        cc[i] = 1;
        seen.insert(fw.clone(), (rc.clone(), cc.clone()));
        queue.push_back((fw, rc, cc));
    }
    while let Some((fw, rc, cc)) = queue.pop_front() {
        for j in 0..r {
            let c = fw[j];
            if c == 0 {
                continue;
            }
            let mut fw2 = fw.clone();
            for k in 0..r {
                fw2[k] -= c * p[j][k];
            }
            if seen.contains_key(&fw2) {
                continue;
            }
            let mut rc2 = rc.clone();
            rc2[j] -= c;
            let mut cc2 = cc.clone();
            let t: i64 = (0..r).map(|k| p[j][k] * cc[k]).sum();
            cc2[j] -= t;
            seen.insert(fw2.clone(), (rc2.clone(), cc2.clone()));
            queue.push_back((fw2, rc2, cc2));
        }
    }
    let mut out: Vec<_> = seen
        .into_iter()
        .map(|(fw, (rc, cc))| (fw, rc, cc))
        .collect();
    out.sort();
    out
}

/// Builds the root system of `algebra`: all roots of every simple factor,
/// generated by closing the simple roots under simple reflections.
pub fn build_root_system(algebra: &ReductiveAlgebra) -> RootSystemData {
    let dim = algebra.dim();
    let ss = algebra.semisimple_rank();
    let mut roots = Vec::new();
    let mut pairing_rows = Vec::new();
    for (fi, factor) in algebra.factors().iter().enumerate() {
        let p = factor.pairing_matrix();
        let block = algebra.factor_block(fi);
        for (fw, rc, cc) in close_factor_roots(&p) {
            let mut coords = vec![0i64; dim];
            coords[block.clone()].copy_from_slice(&fw);
            let mut root_coeffs = vec![0i64; ss];
            root_coeffs[block.clone()].copy_from_slice(&rc);
            let mut coroot_coeffs = vec![0i64; ss];
            coroot_coeffs[block.clone()].copy_from_slice(&cc);
            roots.push(Root { weight: Weight::new(coords), root_coeffs, coroot_coeffs, factor: fi });
        }
        debug_assert_eq!(
            roots.iter().filter(|r| r.factor == fi).count(),
            factor.root_count()
        );
        pairing_rows.push(p);
    }
    roots.sort_by(|a, b| a.weight.cmp(&b.weight));
    let positive: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.root_coeffs.iter().all(|&c| c >= 0))
        .map(|(i, _)| i)
        .collect();
    debug_assert_eq!(positive.len() * 2, roots.len());
    let simple: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.root_coeffs.iter().map(|&c| c.abs()).sum::<i64>() == 1
            && r.root_coeffs.iter().sum::<i64>() == 1)
        .map(|(i, _)| i)
        .collect();
    let mut two_rho_covector = vec![0i64; ss];
    for &i in &positive {
        for (k, &c) in roots[i].coroot_coeffs.iter().enumerate() {
            two_rho_covector[k] += c;
        }
    }
    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.weight.coords().to_vec(), i))
        .collect();
    RootSystemData { algebra: algebra.clone(), roots, positive, simple, two_rho_covector, index, pairing_rows }
}

impl RootSystemData {
    pub fn algebra(&self) -> &ReductiveAlgebra {
        &self.algebra
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().map(|&i| &self.roots[i])
    }

    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn two_rho_covector(&self) -> &[i64] {
        &self.two_rho_covector
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Whether `w` (which must have zero torus block to qualify) is a root.
    pub fn is_root(&self, w: &Weight) -> bool {
        self.index.contains_key(w.coords())
    }

    /// `<w | alpha^vee>` for the coroot of `r`: an integer dot product of the
    /// fundamental-weight block of `w` with the simple-coroot coefficients.
    /// The torus block contributes nothing.
    pub fn pairing(&self, w: &Weight, r: &Root) -> Result<i64> {
        self.algebra.check_weight(w)?;
        Ok(pairing_unchecked(w, r))
    }

    /// Reflection of `w` in the hyperplane of `r`: `w - <w|alpha^vee> alpha`.
    pub fn reflect(&self, w: &Weight, r: &Root) -> Result<Weight> {
        self.algebra.check_weight(w)?;
        Ok(reflect_unchecked(w, r))
    }

    /// Applies the simple reflection at (factor, node) in place.
    pub(crate) fn simple_reflect_in_place(&self, w: &mut Weight, fi: usize, node: usize) {
        let block = self.algebra.factor_block(fi);
        let c = w.coords()[block.start + node];
        if c == 0 {
            return;
        }
        let row = &self.pairing_rows[fi][node];
        let coords = w.coords_mut();
        for (k, &p) in row.iter().enumerate() {
            coords[block.start + k] -= c * p;
        }
    }

    /// Iterator over (factor, node) pairs of all simple reflections.
    pub(crate) fn simple_reflection_ids(&self) -> Vec<(usize, usize)> {
        self.algebra
            .factors()
            .iter()
            .enumerate()
            .flat_map(|(fi, f)| (0..f.rank()).map(move |n| (fi, n)))
            .collect()
    }

    /// Full Weyl orbit of `w`: breadth-first closure under simple reflections.
    /// Deterministic sorted output.
    pub fn weyl_orbit(&self, w: &Weight, limits: &Limits) -> Result<Vec<Weight>> {
        self.algebra.check_weight(w)?;
        let gens = self.simple_reflection_ids();
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(w.clone());
        let mut queue: VecDeque<Weight> = VecDeque::new();
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for &(fi, node) in &gens {
                let mut y = x.clone();
                self.simple_reflect_in_place(&mut y, fi, node);
                if !seen.contains(&y) {
                    if seen.len() >= limits.orbit_cap {
                        return Err(Error::OrbitCapExceeded { cap: limits.orbit_cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The dominant representative of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        loop {
            let mut moved = false;
            for (fi, factor) in self.algebra.factors().iter().enumerate() {
                let block = self.algebra.factor_block(fi);
                for node in 0..factor.rank() {
                    if x.coords()[block.start + node] < 0 {
                        self.simple_reflect_in_place(&mut x, fi, node);
                        moved = true;
                    }
                }
            }
            if !moved {
                return x;
            }
        }
    }

    /// Highest weight of the dual of the irreducible with highest weight `w`
    /// (the dominant conjugate of `-w`; torus coordinates negate).
    pub fn dual_highest_weight(&self, w: &Weight) -> Weight {
        self.dominant_conjugate(&w.neg())
    }

    /// `<w | 2 rho^vee>`: parity decides the Frobenius-Schur class of
    /// self-dual irreducibles.
    pub fn pair_two_rho(&self, w: &Weight) -> i64 {
        w.coords()[..self.algebra.semisimple_rank()]
            .iter()
            .zip(&self.two_rho_covector)
            .map(|(&c, &m)| c * m)
            .sum()
    }
}

pub(crate) fn pairing_unchecked(w: &Weight, r: &Root) -> i64 {
    w.coords()
        .iter()
        .zip(&r.coroot_coeffs)
        .map(|(&c, &m)| c * m)
        .sum()
}

pub(crate) fn reflect_unchecked(w: &Weight, r: &Root) -> Weight {
    let k = pairing_unchecked(w, r);
    if k == 0 {
        return w.clone();
    }
    let mut coords = w.coords().to_vec();
    for (i, &a) in r.weight.coords().iter().enumerate() {
        coords[i] -= k * a;
    }
    Weight::new(coords)
}
