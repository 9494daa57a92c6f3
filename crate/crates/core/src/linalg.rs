//! Small exact linear algebra over the rationals.
//!
//! Everything here operates on short vectors (dimension at most a dozen or
//! so), so a dense representation with `Ratio<i128>` entries is both exact and
//! fast enough for the enumeration loops that sit on top of it.

use num::rational::Ratio;
use num::{One, Zero};

pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n as i128)
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Ratio::new(num as i128, den as i128)
}

/// Rank of a family of integer vectors over the rationals.
pub fn integer_rank(vectors: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<Rat>> = vectors
        .iter()
        .map(|v| v.iter().map(|&c| rat(c)).collect())
        .collect();
    rational_rank(rows)
}

pub fn rational_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col] / p;
                for c in col..ncols {
                    let sub = factor * rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Row-reduced basis of a subspace, supporting membership tests and
/// coordinate extraction relative to the original spanning vectors.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    /// Row echelon form of the spanning set, with the change of basis
    /// tracked so coordinates come out in terms of the original vectors.
    rows: Vec<Vec<Rat>>,
    /// combos[r] = coefficients expressing rows[r] in the original basis.
    combos: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    dim: usize,
    n_basis: usize,
}

impl SpanSolver {
    /// Builds the solver; returns `None` if the vectors are dependent.
    pub fn new(basis: &[Vec<i64>]) -> Option<Self> {
        let rows: Vec<Vec<Rat>> = basis
            .iter()
            .map(|v| v.iter().map(|&c| rat(c)).collect())
            .collect();
        Self::new_rational(&rows)
    }

    /// Same as [`SpanSolver::new`] for rational spanning vectors.
    pub fn new_rational(basis: &[Vec<Rat>]) -> Option<Self> {
        let n = basis.len();
        let dim = basis.first().map_or(0, |v| v.len());
        let mut rows: Vec<Vec<Rat>> = basis.to_vec();
        let mut combos: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..dim {
            let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            combos.swap(rank, p);
            let inv = Rat::one() / rows[rank][col];
            for c in 0..dim {
                rows[rank][c] *= inv;
            }
            for c in 0..n {
                combos[rank][c] *= inv;
            }
            for r in 0..n {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col];
                    for c in 0..dim {
                        let sub = f * rows[rank][c];
                        rows[r][c] -= sub;
                    }
                    for c in 0..n {
                        let sub = f * combos[rank][c];
                        combos[r][c] -= sub;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == n {
                break;
            }
        }
        if rank < n {
            return None;
        }
        Some(SpanSolver { rows, combos, pivots, dim, n_basis: n })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_len(&self) -> usize {
        self.n_basis
    }

    /// If `v` lies in the span, returns its coordinates in the original basis.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        debug_assert_eq!(v.len(), self.dim);
        let mut residual = v.to_vec();
        let mut coords = vec![Rat::zero(); self.n_basis];
        for (r, &col) in self.pivots.iter().enumerate() {
            let f = residual[col];
            if f.is_zero() {
                continue;
            }
            for c in 0..self.dim {
                let sub = f * self.rows[r][c];
                residual[c] -= sub;
            }
            for c in 0..self.n_basis {
                coords[c] += f * self.combos[r][c];
            }
        }
        if residual.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn coordinates_int(&self, v: &[i64]) -> Option<Vec<Rat>> {
        let vr: Vec<Rat> = v.iter().map(|&c| rat(c)).collect();
        self.coordinates(&vr)
    }

    pub fn contains_int(&self, v: &[i64]) -> bool {
        self.coordinates_int(v).is_some()
    }
}

/// Solves the square system `a x = b` by Gaussian elimination.
/// Returns `None` if `a` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Rat::one() / m[col][col];
        for c in col..=n {
            m[col][c] *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Reduces a rational vector to a canonical form: the primitive integer
/// vector on the same ray, with the first nonzero entry positive.
pub fn primitive_direction(v: &[Rat]) -> Vec<i128> {
    if v.iter().all(|x| x.is_zero()) {
        return vec![0; v.len()];
    }
    let mut den_lcm: i128 = 1;
    for x in v {
        den_lcm = num::integer::lcm(den_lcm, *x.denom());
    }
    let ints: Vec<i128> = v.iter().map(|x| x.numer() * (den_lcm / x.denom())).collect();
    let mut g: i128 = 0;
    for &x in &ints {
        g = num::integer::gcd(g, x.abs());
    }
    let sign = ints.iter().find(|&&x| x != 0).map_or(1, |&x| x.signum());
    ints.iter().map(|&x| x * sign / g).collect()
}

/// Canonical reduced form of a rational vector (for set membership).
pub fn canonical_rat_vec(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| x.reduced()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_basic() {
        assert_eq!(integer_rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![3, 1, 1], vec![3, 1, 1], vec![1, 0, 0]]), 2);
    }

    #[test]
    fn span_solver_coordinates() {
        let basis = vec![vec![1, 0, 1], vec![0, 2, 0]];
        let s = SpanSolver::new(&basis).unwrap();
        assert!(s.contains_int(&[2, 2, 2]));
        let coords = s.coordinates_int(&[2, 2, 2]).unwrap();
        assert_eq!(coords, vec![rat(2), rat(1)]);
        assert!(!s.contains_int(&[1, 0, 0]));
        assert!(SpanSolver::new(&[vec![1, 1], vec![2, 2]]).is_none());
    }

    #[test]
    fn primitive_direction_normalizes() {
        let v = vec![rat_frac(-2, 3), rat_frac(4, 3)];
        assert_eq!(primitive_direction(&v), vec![1, -2]);
        let w = vec![rat(0), rat_frac(-3, 7)];
        assert_eq!(primitive_direction(&w), vec![0, 1]);
    }
}
