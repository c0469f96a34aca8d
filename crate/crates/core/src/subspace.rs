//! Subspaces of a finite-dimensional coordinate space, stored in reduced
//! row echelon form so that equality of subspaces is equality of matrices.

use num_traits::{One, Zero};

use crate::linalg::QMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows; pivot columns strictly increasing.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(
            ambient,
            (0..ambient).map(|i| unit(ambient, i)).collect::<Vec<_>>(),
        )
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        let mut m = QMatrix::from_rows(vectors);
        if m.rows == 0 {
            return Subspace::zero(ambient);
        }
        let pivots = m.rref();
        let rows = (0..pivots.len()).map(|i| m.row_vec(i)).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` over the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (row, c) in self.rows.iter().zip(coords.iter()) {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                if !row[j].is_zero() {
                    let t = &r[j] - c * &row[j];
                    r[j] = t;
                }
            }
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !r[p].is_zero() {
                let factor = r[p].clone();
                for j in 0..self.ambient {
                    if !row[j].is_zero() {
                        let t = &r[j] - &factor * &row[j];
                        r[j] = t;
                    }
                }
            }
        }
        r
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vectors = self.rows.clone();
        vectors.extend(other.rows.iter().cloned());
        Subspace::from_vectors(self.ambient, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Intersection via the kernel of the stacked coordinate map.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve a*B1 + b*B2 = 0; intersection vectors are a*B1.
        let k = self.dim() + other.dim();
        let mut m = QMatrix::zero(self.ambient, k);
        for (j, row) in self.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, j)] = row[i].clone();
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, self.dim() + j)] = row[i].clone();
            }
        }
        let vectors = m
            .nullspace()
            .into_iter()
            .map(|coef| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (j, row) in self.rows.iter().enumerate() {
                    if !coef[j].is_zero() {
                        for i in 0..self.ambient {
                            let t = &v[i] + &coef[j] * &row[i];
                            v[i] = t;
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, vectors)
    }

    /// A complement of `self` inside `bigger`: the echelon extension by the
    /// basis vectors of `bigger` that fall outside `self`, in order.
    pub fn complement_in(&self, bigger: &Subspace) -> Subspace {
        assert!(self.is_subspace_of(bigger), "complement of a non-subspace");
        let mut acc = self.clone();
        let mut extra = Vec::new();
        for row in bigger.basis() {
            if !acc.contains(row) {
                extra.push(row.clone());
                let mut vecs = acc.rows.clone();
                vecs.push(row.clone());
                acc = Subspace::from_vectors(self.ambient, vecs);
            }
        }
        Subspace::from_vectors(self.ambient, extra)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
