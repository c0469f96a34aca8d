//! Seeded random inputs for the property and acceptance suites: vectors
//! and base changes with small entries, free-algebra elements, and random
//! Lie algebras drawn from the classified families so the axioms hold by
//! construction.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebras::{abelian, heisenberg, jacobson_case, sl2, CaseTag};
use crate::lie::{LieAlgebra, Vector};
use crate::linalg::QMatrix;
use crate::scalar::{rat, Scalar};
use crate::uea::NCPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries drawn from {-3..3}.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    (0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect()
}

pub fn random_nonzero_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    loop {
        let v = random_vector(rng, dim);
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    loop {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = rat(rng.gen_range(-3..=3));
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A sparse free-algebra element of bounded degree with small
/// coefficients; at least one term.
pub fn random_ncpoly(rng: &mut ChaCha8Rng, dim: usize, max_degree: u32, terms: u32) -> NCPoly {
    let mut p = NCPoly::zero(dim);
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_degree);
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..dim) as u8).collect();
        let mut c = rat(rng.gen_range(-3..=3));
        if c.is_zero() {
            c = rat(1);
        }
        p.add_term(word, c);
    }
    if p.is_zero() {
        p.add_term(vec![], rat(1));
    }
    p
}

fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = rat(rng.gen_range(-3..=3));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random three-dimensional Lie algebra: one of the five normal forms
/// with random parameters, hidden behind a random change of basis.
pub fn random_lie3(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = match rng.gen_range(0..5) {
        0 => jacobson_case(CaseTag::A, &[]).unwrap(),
        1 => jacobson_case(CaseTag::B, &[]).unwrap(),
        2 => jacobson_case(CaseTag::C, &[]).unwrap(),
        3 => loop {
            let params: Vec<Scalar> = (0..4).map(|_| rat(rng.gen_range(-3..=3))).collect();
            if let Ok(l) = jacobson_case(CaseTag::D, &params) {
                break l;
            }
        },
        _ => {
            let params = vec![nonzero(rng), nonzero(rng)];
            jacobson_case(CaseTag::E, &params).unwrap()
        }
    };
    let t = random_invertible(rng, 3);
    base.change_basis(&t).unwrap()
}

/// A random four-dimensional Lie algebra: a classified three-dimensional
/// algebra plus a central line, the filiform nilpotent algebra, or the
/// abelian one, behind a random change of basis.
pub fn random_lie4(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = match rng.gen_range(0..4) {
        0 => abelian(4),
        1 => direct_sum_with_center(&heisenberg()),
        2 => direct_sum_with_center(&sl2()),
        _ => {
            // filiform: [x,y] = z, [x,z] = w, w central
            let mut w_vec = vec![Scalar::zero(); 4];
            w_vec[3] = rat(1);
            let mut z_vec = vec![Scalar::zero(); 4];
            z_vec[2] = rat(1);
            LieAlgebra::new(
                "filiform4",
                &["x", "y", "z", "w"],
                &[(0, 1, z_vec), (0, 2, w_vec)],
            )
        }
    };
    let t = random_sparse_invertible(rng, 4);
    base.change_basis(&t).unwrap()
}

/// A product of a permutation, diagonal signs and a few transvections:
/// invertible with small entries, and it keeps structure constants sparse
/// enough for high-degree normal forms to stay affordable.
fn random_sparse_invertible(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut m = QMatrix::zero(n, n);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for (i, &p) in perm.iter().enumerate() {
        m[(i, p)] = rat(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    for _ in 0..2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        // row_i += c * row_j
        let c = rat(rng.gen_range(1..=2));
        for col in 0..n {
            let v = &m[(i, col)] + &c * &m[(j, col)];
            m[(i, col)] = v;
        }
    }
    m
}

fn direct_sum_with_center(l: &LieAlgebra) -> LieAlgebra {
    let mut names: Vec<String> = l.basis_names().to_vec();
    names.push("c0".to_string());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut brackets = Vec::new();
    for i in 0..l.dim() {
        for j in (i + 1)..l.dim() {
            let mut v = l.table_entry(i, j).clone();
            v.push(Scalar::zero());
            brackets.push((i, j, v));
        }
    }
    LieAlgebra::new(&format!("{}+F", l.name()), &refs, &brackets)
}
