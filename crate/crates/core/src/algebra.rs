//! Reductive algebras and their weight coordinates.
//!
//! A reductive algebra is modelled as an ordered list of simple factors plus a
//! central torus. The Cartan subalgebra is never materialized: a weight is an
//! integer coordinate vector, one block of fundamental-weight coordinates per
//! simple factor followed by one block of torus coordinates. In this basis the
//! pairing of a weight against a coroot is an integer dot product, so every
//! computation downstream stays in exact integer (or rational) arithmetic.
//!
//! Simple roots and fundamental weights follow Bourbaki numbering throughout;
//! see [`SimpleFactor::pairing_matrix`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple Lie algebra families, Bourbaki-labelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// One simple factor of a reductive algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleFactor {
    family: Family,
    rank: usize,
}

impl SimpleFactor {
    /// Legal ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleFactor { family, rank })
        } else {
            Err(Error::IllegalRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Pairing matrix `P[i][j] = <alpha_i, alpha_j^vee>`.
    ///
    /// Row `i` is the coordinate vector of the simple root `alpha_i` in the
    /// fundamental-weight basis. This is the Cartan matrix in the orientation
    /// where `B_n` has `P[n-2][n-1] = -2` (the short simple root is last).
    pub fn pairing_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut p = vec![vec![0i64; n]; n];
        for i in 0..n {
            p[i][i] = 2;
        }
        fn chain(p: &mut [Vec<i64>], i: usize, j: usize) {
            p[i][j] = -1;
            p[j][i] = -1;
        }
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    chain(&mut p, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 2 {
                    chain(&mut p, i, i + 1);
                }
                p[n - 2][n - 1] = -2;
                p[n - 1][n - 2] = -1;
            }
            Family::C => {
                for i in 0..n - 2 {
                    chain(&mut p, i, i + 1);
                }
                p[n - 2][n - 1] = -1;
                p[n - 1][n - 2] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    chain(&mut p, i, i + 1);
                }
                chain(&mut p, n - 3, n - 1);
            }
            Family::E => {
                // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
                chain(&mut p, 0, 2);
                for i in 2..n - 1 {
                    chain(&mut p, i, i + 1);
                }
                chain(&mut p, 1, 3);
            }
            Family::F => {
                chain(&mut p, 0, 1);
                p[1][2] = -2;
                p[2][1] = -1;
                chain(&mut p, 2, 3);
            }
            Family::G => {
                p[0][1] = -1;
                p[1][0] = -3;
            }
        }
        p
    }

    /// Half squared root norms `d_i = (alpha_i, alpha_i)/2`, normalized so the
    /// short roots have `d = 1`. Symmetrizes the pairing matrix:
    /// `d_j * P[i][j] = d_i * P[j][i]`.
    pub fn root_norms(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Nontrivial diagram automorphisms, as permutations of the node indices
    /// (identity excluded). For `D_4` this is the full triality group.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        match self.family {
            Family::A if n >= 2 => vec![(0..n).rev().collect()],
            Family::D if n == 4 => {
                // All permutations of the three outer nodes {0, 2, 3}.
                let outer = [0usize, 2, 3];
                let mut perms = Vec::new();
                let orders = [
                    [0, 2, 3],
                    [0, 3, 2],
                    [2, 0, 3],
                    [2, 3, 0],
                    [3, 0, 2],
                    [3, 2, 0],
                ];
                for ord in &orders[1..] {
                    let mut perm: Vec<usize> = (0..4).collect();
                    for (k, &node) in outer.iter().enumerate() {
                        perm[node] = ord[k];
                    }
                    perms.push(perm);
                }
                perms
            }
            Family::D => {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(n - 2, n - 1);
                vec![perm]
            }
            Family::E if n == 6 => vec![vec![5, 1, 4, 3, 2, 0]],
            _ => Vec::new(),
        }
    }
}

/// A product of simple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductiveAlgebra {
    factors: Vec<SimpleFactor>,
    torus_rank: usize,
}

impl ReductiveAlgebra {
    pub fn new(factors: Vec<SimpleFactor>, torus_rank: usize) -> Self {
        ReductiveAlgebra { factors, torus_rank }
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    /// Total coordinate dimension: sum of factor ranks plus the torus rank.
    pub fn dim(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    /// Coordinate range of factor `fi`.
    pub fn factor_block(&self, fi: usize) -> std::ops::Range<usize> {
        let start: usize = self.factors[..fi].iter().map(|f| f.rank()).sum();
        start..start + self.factors[fi].rank()
    }

    /// Coordinate range of the torus block.
    pub fn torus_block(&self) -> std::ops::Range<usize> {
        let ss = self.semisimple_rank();
        ss..ss + self.torus_rank
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(vec![0; self.dim()])
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), got: w.dim() })
        }
    }

    /// Dominance: all fundamental-weight coordinates nonnegative. Torus
    /// coordinates are unconstrained.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.coords()[..self.semisimple_rank()].iter().all(|&c| c >= 0)
    }

    /// Returns the derived (semisimple) part together with the identity
    /// embedding of its coordinates into `self`.
    pub fn semisimple_part(&self) -> ReductiveAlgebra {
        ReductiveAlgebra::new(self.factors.clone(), 0)
    }

    /// Same factors with `extra` additional torus coordinates.
    pub fn extend_torus(&self, extra: usize) -> ReductiveAlgebra {
        ReductiveAlgebra::new(self.factors.clone(), self.torus_rank + extra)
    }
}

/// An integral weight: fundamental-weight coordinates per simple factor,
/// then torus coordinates. Ordering is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&c| -c).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| k * c).collect())
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_legal_ranks() {
        assert!(SimpleFactor::new(Family::A, 1).is_ok());
        assert!(SimpleFactor::new(Family::B, 1).is_err());
        assert!(SimpleFactor::new(Family::C, 1).is_err());
        assert!(SimpleFactor::new(Family::D, 2).is_err());
        assert!(SimpleFactor::new(Family::D, 3).is_ok());
        assert!(SimpleFactor::new(Family::E, 5).is_err());
        assert!(SimpleFactor::new(Family::E, 6).is_ok());
        assert!(SimpleFactor::new(Family::F, 4).is_ok());
        assert!(SimpleFactor::new(Family::F, 3).is_err());
        assert!(SimpleFactor::new(Family::G, 2).is_ok());
    }

    #[test]
    fn pairing_matrix_has_nonzero_determinant_flavour() {
        // Spot checks of the asymmetric entries.
        let b3 = SimpleFactor::new(Family::B, 3).unwrap().pairing_matrix();
        assert_eq!(b3[1][2], -2);
        assert_eq!(b3[2][1], -1);
        let c3 = SimpleFactor::new(Family::C, 3).unwrap().pairing_matrix();
        assert_eq!(c3[1][2], -1);
        assert_eq!(c3[2][1], -2);
        let g2 = SimpleFactor::new(Family::G, 2).unwrap().pairing_matrix();
        assert_eq!(g2[0][1], -1);
        assert_eq!(g2[1][0], -3);
    }

    #[test]
    fn norms_symmetrize_pairing() {
        for (fam, rank) in [
            (Family::A, 4),
            (Family::B, 5),
            (Family::C, 3),
            (Family::D, 4),
            (Family::E, 7),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let f = SimpleFactor::new(fam, rank).unwrap();
            let p = f.pairing_matrix();
            let d = f.root_norms();
            for i in 0..rank {
                for j in 0..rank {
                    assert_eq!(d[j] * p[i][j], d[i] * p[j][i], "{fam:?}{rank} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn block_layout() {
        let alg = ReductiveAlgebra::new(
            vec![
                SimpleFactor::new(Family::A, 2).unwrap(),
                SimpleFactor::new(Family::C, 3).unwrap(),
            ],
            2,
        );
        assert_eq!(alg.dim(), 7);
        assert_eq!(alg.factor_block(0), 0..2);
        assert_eq!(alg.factor_block(1), 2..5);
        assert_eq!(alg.torus_block(), 5..7);
    }
}
