//! The weight-level reduction algorithm.
//!
//! A weight of the current system is *extremal* if pairing positively with a
//! root never lands back in the system, *toroidal* if it pairs to zero with
//! every root, and *singular* if it is extremal, its double is a root and it
//! has multiplicity one. A reduction step at an extremal weight that is
//! neither toroidal nor singular removes `P = {roots pairing positively}`
//! together with `-P` from the root system and the multiset `Q = lambda - P`
//! together with `-Q` from the weight system. Iterating to a fixed point
//! yields a terminal representation, which splits into toroidal weight pairs
//! and singular symplectic blocks; coisotropy is then linear independence of
//! the toroidal weights, and the rank is their count.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Weight;
use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::rep::{RepSpec, WeightMultiset};
use crate::roots::{build_root_system, pairing_unchecked, Root};

/// How `reduce_to_terminal` picks among eligible weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChoicePolicy {
    /// The lexicographically greatest eligible coordinate vector.
    LexGreatest,
    /// Seeded pseudo-random choice; deterministic for a fixed seed.
    Seeded(u64),
}

/// Classification flags of one weight relative to the current state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightClass {
    pub extremal: bool,
    pub toroidal: bool,
    pub singular: bool,
}

impl WeightClass {
    pub fn eligible(&self) -> bool {
        self.extremal && !self.toroidal && !self.singular
    }
}

/// One applied reduction step, for traces.
#[derive(Debug, Clone, Serialize)]
pub struct StepRecord {
    pub lambda: Weight,
    pub p: Vec<Weight>,
    pub q: Vec<Weight>,
    /// Weights removed from the system, with counts (`Q` together with `-Q`).
    pub removed: Vec<(Weight, u64)>,
}

/// The evolving pair (roots, weights) during reduction.
#[derive(Debug, Clone)]
pub struct ReductionState {
    roots: Vec<Root>,
    alive: Vec<bool>,
    root_lookup: HashMap<Vec<i64>, usize>,
    weights: WeightMultiset,
    trace: Vec<StepRecord>,
}

impl ReductionState {
    /// Starting state of a representation: its full root system and weight
    /// system.
    pub fn initial(spec: &RepSpec) -> ReductionState {
        let rsd = build_root_system(spec.algebra());
        let roots = rsd.roots().to_vec();
        let root_lookup = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.weight.coords().to_vec(), i))
            .collect();
        ReductionState {
            alive: vec![true; roots.len()],
            roots,
            root_lookup,
            weights: spec.total_weights(),
            trace: Vec::new(),
        }
    }

    pub fn weights(&self) -> &WeightMultiset {
        &self.weights
    }

    pub fn live_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().zip(&self.alive).filter(|(_, &a)| a).map(|(r, _)| r)
    }

    pub fn live_root_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn trace(&self) -> &[StepRecord] {
        &self.trace
    }

    fn live_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_lookup.get(coords).copied().filter(|&i| self.alive[i])
    }

    /// Classifies `lambda` against the current (roots, weights) pair.
    pub fn classify_weight(&self, lambda: &Weight) -> Result<WeightClass> {
        if !self.weights.contains(lambda) {
            return Err(Error::WeightNotPresent);
        }
        let mut extremal = true;
        let mut toroidal = true;
        for root in self.live_roots() {
            let p = pairing_unchecked(lambda, root);
            if p != 0 {
                toroidal = false;
            }
            if p > 0 && self.weights.contains(&lambda.add(&root.weight)) {
                extremal = false;
            }
        }
        let twice = lambda.scale(2);
        let singular = extremal
            && self.live_root_index(twice.coords()).is_some()
            && self.weights.multiplicity(lambda) == 1;
        Ok(WeightClass { extremal, toroidal, singular })
    }

    /// All weights eligible for a reduction step, sorted.
    pub fn eligible_weights(&self) -> Vec<Weight> {
        self.weights
            .weights()
            .filter(|w| self.classify_weight(w).map(|c| c.eligible()).unwrap_or(false))
            .cloned()
            .collect()
    }

    /// Eligible weights at which a step actually goes through (see
    /// [`ReductionState::reduction_step`] for why these can differ).
    pub fn steppable_weights(&self) -> Vec<Weight> {
        self.eligible_weights()
            .into_iter()
            .filter(|w| self.build_successor(w).is_ok())
            .collect()
    }

    /// Terminal: no weight admits a valid reduction step.
    pub fn is_terminal(&self) -> bool {
        self.steppable_weights().is_empty()
    }

    /// Applies one reduction step at `lambda`.
    ///
    /// The multiplicity-one clause of the singularity test undercounts: a
    /// weight can have multiplicity two in the system yet carry only a single
    /// highest-weight line (the other vectors being string interiors of a
    /// different summand), in which case that line generates an anisotropic
    /// block and no valid step exists at the weight. Such a choice is exposed
    /// by the successor: removal leaves a multiset violating the weight
    /// string property. The step therefore validates the successor before
    /// committing and rejects the weight otherwise; the state is unchanged on
    /// error.
    pub fn reduction_step(&mut self, lambda: &Weight) -> Result<()> {
        let (weights, alive, record) = self.build_successor(lambda)?;
        self.weights = weights;
        self.alive = alive;
        self.trace.push(record);
        Ok(())
    }

    fn build_successor(
        &self,
        lambda: &Weight,
    ) -> Result<(WeightMultiset, Vec<bool>, StepRecord)> {
        let class = self.classify_weight(lambda)?;
        if !class.eligible() {
            return Err(Error::IneligibleWeight(format!(
                "{lambda} has flags extremal={} toroidal={} singular={}",
                class.extremal, class.toroidal, class.singular
            )));
        }
        let p_indices: Vec<usize> = self
            .roots
            .iter()
            .enumerate()
            .filter(|(i, r)| self.alive[*i] && pairing_unchecked(lambda, r) > 0)
            .map(|(i, _)| i)
            .collect();
        let p_weights: Vec<Weight> =
            p_indices.iter().map(|&i| self.roots[i].weight.clone()).collect();
        let q: Vec<Weight> = p_weights.iter().map(|a| lambda.sub(a)).collect();

        // Multiset removal of Q and -Q, counted.
        let mut removal: BTreeMap<Weight, u64> = BTreeMap::new();
        for w in &q {
            *removal.entry(w.clone()).or_insert(0) += 1;
            *removal.entry(w.neg()).or_insert(0) += 1;
        }
        let mut weights = self.weights.clone();
        for (w, count) in &removal {
            if weights.multiplicity(w) < *count {
                return Err(Error::InternalInconsistency(format!(
                    "step at {lambda} would remove {count} copies of {w}, only {} present",
                    weights.multiplicity(w)
                )));
            }
        }
        for (w, count) in &removal {
            weights.remove(w, *count)?;
        }
        let mut alive = self.alive.clone();
        for &i in &p_indices {
            alive[i] = false;
            let neg = self.roots[i].weight.neg();
            alive[self.root_lookup[neg.coords()]] = false;
        }
        check_root_subsystem(&self.roots, &alive, &self.root_lookup, lambda)?;
        check_string_property(&self.roots, &alive, &weights, lambda)?;
        let record = StepRecord {
            lambda: lambda.clone(),
            p: p_weights,
            q,
            removed: removal.into_iter().collect(),
        };
        Ok((weights, alive, record))
    }
}

/// The surviving roots must stay closed under addition inside the original
/// system; a violation signals corrupted input.
fn check_root_subsystem(
    roots: &[Root],
    alive: &[bool],
    lookup: &HashMap<Vec<i64>, usize>,
    lambda: &Weight,
) -> Result<()> {
    let live: Vec<usize> = (0..roots.len()).filter(|&i| alive[i]).collect();
    for (k, &i) in live.iter().enumerate() {
        for &j in &live[k + 1..] {
            if roots[i].factor != roots[j].factor {
                continue;
            }
            let sum = roots[i].weight.add(&roots[j].weight);
            if let Some(&s) = lookup.get(sum.coords()) {
                if !alive[s] {
                    return Err(Error::InternalInconsistency(format!(
                        "root subsystem not closed after step at {lambda}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Every genuine weight system descends along root strings: a positive
/// pairing with a surviving root forces the weight one step down the string
/// to be present.
fn check_string_property(
    roots: &[Root],
    alive: &[bool],
    weights: &WeightMultiset,
    lambda: &Weight,
) -> Result<()> {
    for w in weights.weights() {
        for (i, root) in roots.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            if pairing_unchecked(w, root) > 0 && !weights.contains(&w.sub(&root.weight)) {
                return Err(Error::InternalInconsistency(format!(
                    "step at {lambda} breaks the weight string through {w}"
                )));
            }
        }
    }
    Ok(())
}

/// The structure of a terminal state.
#[derive(Debug, Clone, Serialize)]
pub struct TerminalDecomposition {
    /// One representative per toroidal pair (the lexicographically greater of
    /// each `{lambda, -lambda}`), with the pair multiplicity.
    pub toroidal_pairs: Vec<(Weight, u64)>,
    /// Singular symplectic blocks: highest weight and block dimension.
    pub singular_blocks: Vec<(Weight, u64)>,
    /// The surviving roots.
    pub residual_roots: Vec<Root>,
    /// A zero toroidal weight occurred (a trivial constituent slipped in).
    pub has_zero_toroidal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoisotropyVerdict {
    pub coisotropic: bool,
    pub toroidal_basis_ok: bool,
}

/// Result of running the reduction to completion.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub terminal: TerminalDecomposition,
    pub state: ReductionState,
}

impl Reduction {
    pub fn steps(&self) -> &[StepRecord] {
        self.state.trace()
    }
}

/// Repeatedly applies reduction steps, choosing eligible weights by `policy`,
/// until the state is terminal. Each step strictly shrinks the weight system,
/// so this halts after at most `dim V / 2` steps.
pub fn reduce_to_terminal(spec: &RepSpec, policy: ChoicePolicy) -> Result<Reduction> {
    let mut state = ReductionState::initial(spec);
    let mut rng = match policy {
        ChoicePolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ChoicePolicy::LexGreatest => None,
    };
    loop {
        // Candidates in policy order; a candidate whose step does not
        // validate is dropped and the next one is tried.
        let mut candidates = state.eligible_weights();
        let mut stepped = false;
        while !candidates.is_empty() {
            let idx = match &mut rng {
                None => candidates.len() - 1,
                Some(rng) => rng.gen_range(0..candidates.len()),
            };
            let lambda = candidates.swap_remove(idx);
            match state.reduction_step(&lambda) {
                Ok(()) => {
                    stepped = true;
                    break;
                }
                Err(Error::InternalInconsistency(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        if !stepped {
            break;
        }
    }
    let terminal = terminal_decomposition(&state)?;
    Ok(Reduction { terminal, state })
}

/// Reads the terminal structure off a terminal state.
pub fn terminal_decomposition(state: &ReductionState) -> Result<TerminalDecomposition> {
    let mut toroidal: Vec<(Weight, u64)> = Vec::new();
    let mut singular_weights: Vec<(Weight, u64)> = Vec::new();
    for (w, m) in state.weights.iter() {
        let is_toroidal = state.live_roots().all(|r| pairing_unchecked(w, r) == 0);
        if is_toroidal {
            toroidal.push((w.clone(), m));
        } else {
            singular_weights.push((w.clone(), m));
        }
    }

    // Pair up the toroidal weights with their negatives.
    let mut pairs: Vec<(Weight, u64)> = Vec::new();
    let mut has_zero_toroidal = false;
    let toroidal_map: BTreeMap<&Weight, u64> = toroidal.iter().map(|(w, m)| (w, *m)).collect();
    for (w, m) in &toroidal {
        if w.is_zero() {
            if m % 2 != 0 {
                return Err(Error::InternalInconsistency(
                    "zero toroidal weight with odd multiplicity".into(),
                ));
            }
            has_zero_toroidal = true;
            pairs.push((w.clone(), m / 2));
            continue;
        }
        let neg = w.neg();
        match toroidal_map.get(&neg) {
            Some(&mn) if mn == *m => {}
            _ => {
                return Err(Error::InternalInconsistency(format!(
                    "toroidal weight {w} lacks a matching negative"
                )))
            }
        }
        if *w > neg {
            pairs.push((w.clone(), *m));
        }
    }
    pairs.sort();

    // Group the remaining weights into blocks connected by surviving roots.
    let mut blocks: Vec<(Weight, u64)> = Vec::new();
    let mut used = vec![false; singular_weights.len()];
    for start in 0..singular_weights.len() {
        if used[start] {
            continue;
        }
        let mut members = vec![start];
        used[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..singular_weights.len() {
                if used[j] {
                    continue;
                }
                let (wi, wj) = (&singular_weights[i].0, &singular_weights[j].0);
                let diff = wi.sub(wj);
                let sum = wi.add(wj);
                if state.live_root_index(diff.coords()).is_some()
                    || state.live_root_index(sum.coords()).is_some()
                {
                    used[j] = true;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        let dim: u64 = members.iter().map(|&i| singular_weights[i].1).sum();
        let highest = members
            .iter()
            .map(|&i| singular_weights[i].0.clone())
            .max()
            .expect("nonempty block");
        blocks.push((highest, dim));
    }
    blocks.sort();

    Ok(TerminalDecomposition {
        toroidal_pairs: pairs,
        singular_blocks: blocks,
        residual_roots: state.live_roots().cloned().collect(),
        has_zero_toroidal,
    })
}

/// Coisotropy: the toroidal weights (one per pair, repeated per pair
/// multiplicity) must be linearly independent over the rationals.
pub fn coisotropy_test(td: &TerminalDecomposition) -> CoisotropyVerdict {
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    let mut count = 0usize;
    for (w, m) in &td.toroidal_pairs {
        for _ in 0..*m {
            vectors.push(w.coords().to_vec());
            count += 1;
        }
    }
    let coisotropic = integer_rank(&vectors) == count;
    CoisotropyVerdict { coisotropic, toroidal_basis_ok: !td.has_zero_toroidal }
}

/// Number of toroidal pairs (counted with multiplicity). Equals the quotient
/// dimension for coisotropic representations without fixed vectors; callers
/// must consult [`coisotropy_test`] before reading it that way.
pub fn rank(td: &TerminalDecomposition) -> u64 {
    td.toroidal_pairs.iter().map(|(_, m)| m).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Family, ReductiveAlgebra, SimpleFactor, Weight};
    use crate::rep::ComponentSpec;

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
    fn sp_standard_is_terminal_and_singular() {
        for m in [1usize, 2, 3, 4] {
            let a = if m == 1 { alg(&[(Family::A, 1)], 0) } else { alg(&[(Family::C, m)], 0) };
            let mut hw = vec![0i64; m];
            hw[0] = 1;
            let spec = RepSpec::type1(a, w(&hw)).unwrap();
            let state = ReductionState::initial(&spec);
            let top = state.weights().weights().max().unwrap().clone();
            let class = state.classify_weight(&top).unwrap();
            assert!(class.extremal && class.singular && !class.toroidal);
            let red = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
            assert!(red.steps().is_empty());
            assert!(red.terminal.toroidal_pairs.is_empty());
            assert_eq!(red.terminal.singular_blocks, vec![(w(&hw), 2 * m as u64)]);
            assert_eq!(rank(&red.terminal), 0);
        }
    }

    #[test]
    fn sl2_cubic_hand_run() {
        // S^3 of sl2: one step with P = {alpha}, Q = {omega}; the terminal
        // state keeps the pair of extreme weights and an empty root system.
        let spec = RepSpec::type1(alg(&[(Family::A, 1)], 0), w(&[3])).unwrap();
        let mut state = ReductionState::initial(&spec);
        let class = state.classify_weight(&w(&[3])).unwrap();
        assert!(class.extremal && !class.toroidal && !class.singular);
        state.reduction_step(&w(&[3])).unwrap();
        assert_eq!(state.trace().len(), 1);
        let step = &state.trace()[0];
        assert_eq!(step.p, vec![w(&[2])]);
        assert_eq!(step.q, vec![w(&[1])]);
        assert_eq!(state.live_root_count(), 0);
        assert_eq!(state.weights().multiplicity(&w(&[3])), 1);
        assert_eq!(state.weights().multiplicity(&w(&[-3])), 1);
        assert_eq!(state.weights().total(), 2);
        assert!(state.is_terminal());
        let td = terminal_decomposition(&state).unwrap();
        assert_eq!(td.toroidal_pairs, vec![(w(&[3]), 1)]);
        assert_eq!(rank(&td), 1);
        assert!(coisotropy_test(&td).coisotropic);
    }

    #[test]
    fn singular_weight_rejected_for_stepping() {
        let spec = RepSpec::type1(alg(&[(Family::C, 2)], 0), w(&[1, 0])).unwrap();
        let mut state = ReductionState::initial(&spec);
        let top = state.weights().weights().max().unwrap().clone();
        assert!(matches!(state.reduction_step(&top), Err(Error::IneligibleWeight(_))));
        assert!(matches!(state.classify_weight(&w(&[5, 5])), Err(Error::WeightNotPresent)));
    }

    #[test]
    fn toroidal_when_no_roots() {
        let a = alg(&[], 1);
        let rep = RepSpec::assemble(a, vec![ComponentSpec::Type2(w(&[1]))]).unwrap();
        let state = ReductionState::initial(&rep);
        let class = state.classify_weight(&w(&[1])).unwrap();
        assert!(class.toroidal && class.extremal && !class.singular);
        assert!(state.is_terminal());
    }

    #[test]
    fn doubled_cubic_reduces_to_dependent_pairs() {
        let a = alg(&[(Family::A, 1)], 0);
        let spec = RepSpec::assemble(
            a,
            vec![ComponentSpec::Type1(w(&[3])), ComponentSpec::Type1(w(&[3]))],
        )
        .unwrap();
        let red = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
        let verdict = coisotropy_test(&red.terminal);
        assert!(!verdict.coisotropic);
        assert!(verdict.toroidal_basis_ok);
        // dim g = 3 < dim V / 2 = 4, so no orbit can be coisotropic: the
        // independence failure is forced.
        assert_eq!(rank(&red.terminal), 3);
    }

    #[test]
    fn terminal_reduction_is_idempotent() {
        let spec = RepSpec::type1(alg(&[(Family::A, 1)], 0), w(&[3])).unwrap();
        let red = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
        assert_eq!(red.steps().len(), 1);
        assert!(red.state.is_terminal());
        let again = terminal_decomposition(&red.state).unwrap();
        assert_eq!(again.toroidal_pairs, red.terminal.toroidal_pairs);
    }

    #[test]
    fn t_of_e6_has_three_independent_pairs() {
        let e6 = alg(&[(Family::E, 6)], 0);
        let spec = RepSpec::t_of(&e6, &w(&[1, 0, 0, 0, 0, 0])).unwrap();
        let red = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
        assert_eq!(rank(&red.terminal), 3);
        let verdict = coisotropy_test(&red.terminal);
        assert!(verdict.coisotropic && verdict.toroidal_basis_ok);
        // The residual root system is the D4 inside E6.
        assert_eq!(red.terminal.residual_roots.len(), 24);
    }

    #[test]
    fn policy_choice_does_not_change_verdicts() {
        let a = alg(&[(Family::A, 1), (Family::C, 3)], 0);
        // so3 (x) sp6 plus the sp6 standard, a linked sum.
        let spec = RepSpec::assemble(
            a,
            vec![
                ComponentSpec::Type1(w(&[2, 1, 0, 0])),
                ComponentSpec::Type1(w(&[0, 1, 0, 0])),
            ],
        )
        .unwrap();
        let base = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
        let base_rank = rank(&base.terminal);
        let base_co = coisotropy_test(&base.terminal).coisotropic;
        for seed in 0..20 {
            let red = reduce_to_terminal(&spec, ChoicePolicy::Seeded(seed)).unwrap();
            assert_eq!(rank(&red.terminal), base_rank, "seed {seed}");
            assert_eq!(coisotropy_test(&red.terminal).coisotropic, base_co);
        }
    }

    #[test]
    fn step_count_bounded_by_half_dimension() {
        let a = alg(&[(Family::B, 2), (Family::C, 2)], 0);
        let spec = RepSpec::type1(a, w(&[1, 0, 1, 0])).unwrap();
        let red = reduce_to_terminal(&spec, ChoicePolicy::LexGreatest).unwrap();
        assert!(red.steps().len() as u64 <= spec.dimension() / 2);
    }
}
