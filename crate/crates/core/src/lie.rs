//! Structure-constant Lie algebras over Q with the subalgebra machinery
//! everything else is built on: bracket extension, axiom certificates,
//! derived algebra, center, generated subalgebras, and base change.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar::{format_scalar, Scalar};
use crate::subspace::{unit, Subspace};

/// Dense coordinate vector over an algebra's basis.
pub type Vector = Vec<Scalar>;

pub fn vec_add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|a| a.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    /// `table[i][j]` is the coordinate vector of `[b_i, b_j]`.
    table: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    /// Build from the brackets of basis pairs; entries not given (and their
    /// antisymmetric mirrors) are zero. Indices must satisfy `i < j`.
    pub fn new(name: &str, basis: &[&str], brackets: &[(usize, usize, Vector)]) -> Self {
        let dim = basis.len();
        let mut table = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for (i, j, v) in brackets {
            assert!(i < j, "give brackets with i < j");
            assert_eq!(v.len(), dim);
            table[*i][*j] = v.clone();
            table[*j][*i] = v.iter().map(|c| -c).collect();
        }
        LieAlgebra {
            name: name.to_string(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, sym: &str) -> Option<usize> {
        self.basis.iter().position(|s| s == sym)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit(self.dim(), i)
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// Bilinear extension of the structure constants.
    #[allow(clippy::needless_range_loop)]
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let dim = self.dim();
        if u.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: u.len(),
            });
        }
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(); dim];
        for i in 0..dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if i == j || v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for (o, t) in out.iter_mut().zip(self.table[i][j].iter()) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Antisymmetry and the Jacobi identity on all basis pairs and triples.
    /// Failure is a reported outcome with the offending indices, not an error.
    pub fn check_axioms(&self) -> Certificate {
        let started = Instant::now();
        let dim = self.dim();
        for i in 0..dim {
            if !vec_is_zero(&self.table[i][i]) {
                return Certificate::fail()
                    .with_witness(format!("antisymmetry: [{0},{0}] != 0", self.basis[i]))
                    .timed(started);
            }
            for j in 0..dim {
                let neg: Vector = self.table[j][i].iter().map(|c| -c).collect();
                if self.table[i][j] != neg {
                    return Certificate::fail()
                        .with_witness(format!(
                            "antisymmetry: [{},{}] != -[{},{}]",
                            self.basis[i], self.basis[j], self.basis[j], self.basis[i]
                        ))
                        .timed(started);
                }
            }
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let a = self
                        .bracket(&self.table[i][j], &self.basis_vector(k))
                        .unwrap();
                    let b = self
                        .bracket(&self.table[j][k], &self.basis_vector(i))
                        .unwrap();
                    let c = self
                        .bracket(&self.table[k][i], &self.basis_vector(j))
                        .unwrap();
                    let sum = vec_add(&vec_add(&a, &b), &c);
                    if !vec_is_zero(&sum) {
                        return Certificate::fail()
                            .with_witness(format!(
                                "jacobi: triple ({},{},{})",
                                self.basis[i], self.basis[j], self.basis[k]
                            ))
                            .timed(started);
                    }
                }
            }
        }
        Certificate::pass().timed(started)
    }

    /// Span of all brackets of basis pairs.
    pub fn derived_subalgebra(&self) -> Subspace {
        let dim = self.dim();
        let mut vectors = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                vectors.push(self.table[i][j].clone());
            }
        }
        Subspace::from_vectors(dim, vectors)
    }

    /// `{ v : `[v, b_i]` = 0 for all i }`.
    pub fn center(&self) -> Subspace {
        let dim = self.dim();
        let mut m = QMatrix::zero(dim * dim, dim);
        for i in 0..dim {
            for r in 0..dim {
                for j in 0..dim {
                    m[(i * dim + r, j)] = self.table[j][i][r].clone();
                }
            }
        }
        Subspace::from_vectors(dim, m.nullspace())
    }

    /// Smallest bracket-closed subspace containing the generators, by
    /// closure iteration; terminates because the dimension is finite.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        assert!(!gens.is_empty(), "need at least one generator");
        let mut current = Subspace::from_vectors(self.dim(), gens.to_vec());
        loop {
            let basis = current.basis().to_vec();
            let mut vectors = basis.clone();
            for a in &basis {
                for b in &basis {
                    vectors.push(self.bracket(a, b).unwrap());
                }
            }
            let next = Subspace::from_vectors(self.dim(), vectors);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// Is the subspace closed under the bracket?
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis();
        basis.iter().all(|a| {
            basis
                .iter()
                .all(|b| s.contains(&self.bracket(a, b).unwrap()))
        })
    }

    /// Matrix of `ad v` on the whole algebra: column `j` is `[v, b_j]`.
    pub fn ad(&self, v: &[Scalar]) -> QMatrix {
        let dim = self.dim();
        let mut m = QMatrix::zero(dim, dim);
        for j in 0..dim {
            let col = self.bracket(v, &self.basis_vector(j)).unwrap();
            for i in 0..dim {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    /// Matrix of `ad v` restricted to an invariant subspace, in the
    /// subspace's echelon basis. Errors when the subspace is not invariant.
    pub fn ad_on(&self, v: &[Scalar], s: &Subspace) -> Result<QMatrix> {
        let k = s.dim();
        let mut m = QMatrix::zero(k, k);
        for (j, b) in s.basis().iter().enumerate() {
            let img = self.bracket(v, b)?;
            let coords = s.coordinates(&img).ok_or(Error::NotInvariant)?;
            for i in 0..k {
                m[(i, j)] = coords[i].clone();
            }
        }
        Ok(m)
    }

    /// Transport the structure constants along an invertible matrix whose
    /// columns are the new basis written in the old one.
    pub fn change_basis(&self, t: &QMatrix) -> Result<LieAlgebra> {
        let dim = self.dim();
        if t.rows != dim || t.cols != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: t.rows,
            });
        }
        let tinv = t.inverse().ok_or(Error::SingularMatrix)?;
        let cols: Vec<Vector> = (0..dim).map(|j| t.col_vec(j)).collect();
        let mut table = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let br = self.bracket(&cols[i], &cols[j])?;
                table[i][j] = tinv.mul_vec(&br);
            }
        }
        Ok(LieAlgebra {
            name: format!("{}'", self.name),
            basis: self.basis.clone(),
            table,
        })
    }

    /// View a bracket-closed subspace as a Lie algebra of its own, in the
    /// subspace's echelon basis. Returns the algebra together with the
    /// inclusion (the basis vectors in ambient coordinates).
    pub fn restrict_to(&self, s: &Subspace) -> Result<(LieAlgebra, Vec<Vector>)> {
        if !self.is_subalgebra(s) {
            return Err(Error::HypothesisFailed(
                "subspace is not bracket closed".into(),
            ));
        }
        let k = s.dim();
        let basis_vectors: Vec<Vector> = s.basis().to_vec();
        let names: Vec<String> = (0..k).map(|i| format!("s{}", i)).collect();
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut brackets = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                let br = self.bracket(&basis_vectors[i], &basis_vectors[j])?;
                let coords = s.coordinates(&br).expect("closed by the check above");
                brackets.push((i, j, coords));
            }
        }
        Ok((
            LieAlgebra::new(&format!("{}|sub", self.name), &name_refs, &brackets),
            basis_vectors,
        ))
    }

    /// Render a vector as a linear combination of basis symbols.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if *c == -Scalar::one() {
                    out.push('-');
                } else if !c.is_one() {
                    out.push_str(&format_scalar(c));
                }
            } else if c.is_one() {
                out.push_str(" + ");
            } else if *c == -Scalar::one() {
                out.push_str(" - ");
            } else if c > &Scalar::zero() {
                out.push_str(&format!(" + {}", format_scalar(c)));
            } else {
                out.push_str(&format!(" - {}", format_scalar(&-c)));
            }
            out.push_str(&self.basis[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{heisenberg, k_family, sl2};
    use crate::scalar::rat;

    #[test]
    fn sl2_bracket_of_e_and_f_is_h() {
        let l = sl2();
        let e = l.basis_vector(0);
        let f = l.basis_vector(2);
        let h = l.basis_vector(1);
        assert_eq!(l.bracket(&e, &f).unwrap(), h);
    }

    #[test]
    fn bracket_of_anything_with_itself_vanishes() {
        let l = sl2();
        let v = vec![rat(2), rat(-1), rat(3)];
        assert!(vec_is_zero(&l.bracket(&v, &v).unwrap()));
    }

    #[test]
    fn heisenberg_brackets() {
        let l = heisenberg();
        let x = l.basis_vector(0);
        let y = l.basis_vector(1);
        let z = l.basis_vector(2);
        assert_eq!(l.bracket(&x, &y).unwrap(), z);
        assert!(vec_is_zero(&l.bracket(&x, &z).unwrap()));
    }

    #[test]
    fn axiom_failure_reports_witness() {
        // c[1][2] = b_3 together with c[2][1] = b_3 breaks antisymmetry.
        let mut bad = LieAlgebra::new(
            "bad",
            &["a", "b", "c"],
            &[(0, 1, vec![rat(0), rat(0), rat(1)])],
        );
        bad.table[1][0] = vec![rat(0), rat(0), rat(1)];
        let cert = bad.check_axioms();
        assert!(!cert.passed());
        assert!(cert.witnesses[0].contains("antisymmetry"));
    }

    #[test]
    fn jacobi_failure_reports_triple() {
        // [a,b]=c, [a,c]=a, [b,c]=0: the cyclic sum on (a,b,c) is -c.
        let bad = LieAlgebra::new(
            "bad",
            &["a", "b", "c"],
            &[
                (0, 1, vec![rat(0), rat(0), rat(1)]),
                (0, 2, vec![rat(1), rat(0), rat(0)]),
            ],
        );
        let cert = bad.check_axioms();
        assert!(!cert.passed());
        assert!(cert.witnesses[0].contains("jacobi"));
    }

    #[test]
    fn k21_passes_axioms() {
        assert!(k_family(rat(2), rat(1)).unwrap().check_axioms().passed());
    }

    #[test]
    fn derived_and_center_of_the_named_algebras() {
        assert_eq!(sl2().derived_subalgebra().dim(), 3);
        let h = heisenberg();
        let derived = h.derived_subalgebra();
        assert_eq!(derived.dim(), 1);
        assert_eq!(h.center(), derived);
        assert!(derived.contains(&h.basis_vector(2)));
    }

    #[test]
    fn generated_subalgebra_monotone_and_idempotent() {
        let l = sl2();
        let e = l.basis_vector(0);
        let h = l.basis_vector(1);
        let small = l.generated_subalgebra(std::slice::from_ref(&e));
        let big = l.generated_subalgebra(&[e.clone(), h.clone()]);
        assert!(small.is_subspace_of(&big));
        let again = l.generated_subalgebra(big.basis());
        assert_eq!(again, big);
    }

    #[test]
    fn change_basis_identity_is_identity() {
        let l = sl2();
        let id = QMatrix::identity(3);
        let m = l.change_basis(&id).unwrap();
        assert_eq!(m.table, l.table);
        assert!(l.change_basis(&QMatrix::zero(3, 3)).is_err());
    }

    #[test]
    fn format_vector_round_readable() {
        let l = sl2();
        assert_eq!(l.format_vector(&[rat(2), rat(0), rat(-1)]), "2e - f");
        assert_eq!(l.format_vector(&[rat(0), rat(0), rat(0)]), "0");
    }
}
