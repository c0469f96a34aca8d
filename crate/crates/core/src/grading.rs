//! Z^n gradings of a structure-constant Lie algebra, with the positivity
//! order on degrees (sign of the last nonzero coordinate) and the graded
//! pieces as subspaces.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::lie::{vec_is_zero, LieAlgebra};
use crate::subspace::{unit, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

/// Sign of the last nonzero coordinate; the zero vector is `Zero`.
pub fn positivity(alpha: &[i64]) -> Sign {
    for &c in alpha.iter().rev() {
        if c > 0 {
            return Sign::Positive;
        }
        if c < 0 {
            return Sign::Negative;
        }
    }
    Sign::Zero
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    rank: usize,
    /// Degree of each basis vector.
    degrees: Vec<Vec<i64>>,
}

impl Grading {
    pub fn new(rank: usize, degrees: Vec<Vec<i64>>) -> Self {
        assert!(degrees.iter().all(|d| d.len() == rank));
        Grading { rank, degrees }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self, basis_index: usize) -> &[i64] {
        &self.degrees[basis_index]
    }

    pub fn dim_algebra(&self) -> usize {
        self.degrees.len()
    }

    /// The support: all degrees carrying a nonzero piece.
    pub fn support(&self) -> BTreeSet<Vec<i64>> {
        self.degrees.iter().cloned().collect()
    }

    /// The graded piece g_alpha as a coordinate subspace.
    pub fn piece(&self, alpha: &[i64]) -> Subspace {
        let n = self.degrees.len();
        let vectors = (0..n)
            .filter(|&i| self.degrees[i] == alpha)
            .map(|i| unit(n, i))
            .collect();
        Subspace::from_vectors(n, vectors)
    }

    pub fn piece_by_sign(&self, sign: Sign) -> Subspace {
        let n = self.degrees.len();
        let vectors = (0..n)
            .filter(|&i| positivity(&self.degrees[i]) == sign)
            .map(|i| unit(n, i))
            .collect();
        Subspace::from_vectors(n, vectors)
    }

    /// Does the bracket respect degrees? Whenever `[b_i, b_j]` has a nonzero
    /// coefficient on `b_k`, the degree of `b_k` must be `deg i + deg j`.
    pub fn respects(&self, l: &LieAlgebra) -> bool {
        let n = l.dim();
        assert_eq!(n, self.degrees.len());
        for i in 0..n {
            for j in 0..n {
                let br = l.table_entry(i, j);
                if vec_is_zero(br) {
                    continue;
                }
                let want: Vec<i64> = self.degrees[i]
                    .iter()
                    .zip(&self.degrees[j])
                    .map(|(a, b)| a + b)
                    .collect();
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() && self.degrees[k] != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{heisenberg_graded, sl2_graded, sl3_chevalley_graded};

    #[test]
    fn positivity_on_spec_instances() {
        assert_eq!(positivity(&[1, 0]), Sign::Positive);
        assert_eq!(positivity(&[5, -1]), Sign::Negative);
        assert_eq!(positivity(&[0, 0]), Sign::Zero);
        assert_eq!(positivity(&[-3, 2]), Sign::Positive);
    }

    #[test]
    fn canonical_gradings_respect_brackets() {
        let (l, g) = sl2_graded();
        assert!(g.respects(&l));
        let (l, g) = heisenberg_graded();
        assert!(g.respects(&l));
        let (l, g) = sl3_chevalley_graded();
        assert!(g.respects(&l));
        assert_eq!(g.piece_by_sign(Sign::Positive).dim(), 3);
        assert_eq!(g.piece_by_sign(Sign::Zero).dim(), 2);
    }
}
