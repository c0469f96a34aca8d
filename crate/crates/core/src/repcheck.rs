//! Finite-dimensional representation checks: bracket compatibility,
//! nilpotence, submodule generation through the x-y-x factorization, and
//! exact semisimplicity of a designated operator over Q.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{min_poly, QMatrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::uea::NCPoly;

/// A representation: one square matrix per basis element of the algebra.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: LieAlgebra,
    matrices: Vec<QMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::SizeMismatch);
        }
        let n = matrices.first().map_or(0, |m| m.rows);
        if matrices.iter().any(|m| m.rows != n || m.cols != n) {
            return Err(Error::SizeMismatch);
        }
        Ok(Representation { algebra, matrices })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.rows)
    }

    pub fn matrix(&self, i: usize) -> &QMatrix {
        &self.matrices[i]
    }

    /// The operator of an algebra element.
    pub fn act(&self, v: &[Scalar]) -> QMatrix {
        let n = self.size();
        let mut out = QMatrix::zero(n, n);
        for (c, m) in v.iter().zip(&self.matrices) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    if !m[(i, j)].is_zero() {
                        let t = &out[(i, j)] + c * &m[(i, j)];
                        out[(i, j)] = t;
                    }
                }
            }
        }
        out
    }

    /// The operator of a noncommutative polynomial (words act by matrix
    /// products). This is an independent route to U(L) computations and is
    /// used as an oracle against the straightening rewriter.
    pub fn act_poly(&self, p: &NCPoly) -> QMatrix {
        let n = self.size();
        let mut out = QMatrix::zero(n, n);
        for (w, c) in p.terms() {
            let mut m = QMatrix::identity(n);
            for &letter in w {
                m = m.mul(&self.matrices[letter as usize]);
            }
            for i in 0..n {
                for j in 0..n {
                    if !m[(i, j)].is_zero() {
                        let t = &out[(i, j)] + c * &m[(i, j)];
                        out[(i, j)] = t;
                    }
                }
            }
        }
        out
    }
}

/// Bracket compatibility on all basis pairs; failures carry the pair.
pub fn verify_rep(r: &Representation) -> Certificate {
    let started = Instant::now();
    let l = r.algebra();
    for i in 0..l.dim() {
        for j in (i + 1)..l.dim() {
            let lhs = r.act(l.table_entry(i, j));
            let ab = r.matrix(i).mul(r.matrix(j));
            let ba = r.matrix(j).mul(r.matrix(i));
            let mut rhs = ab;
            for p in 0..rhs.rows {
                for q in 0..rhs.cols {
                    let t = &rhs[(p, q)] - &ba[(p, q)];
                    rhs[(p, q)] = t;
                }
            }
            if lhs != rhs {
                return Certificate::fail()
                    .with_witness(format!(
                        "bracket compatibility fails on ({}, {})",
                        l.basis_names()[i],
                        l.basis_names()[j]
                    ))
                    .timed(started);
            }
        }
    }
    Certificate::pass().timed(started)
}

/// The (n+1)-dimensional irreducible sl2 module: e and f are nilpotent
/// shifts and h is diagonal with spectrum n, n-2, ..., -n.
pub fn sl2_irrep(n: u32) -> Representation {
    let l = crate::algebras::sl2();
    let size = n as usize + 1;
    let mut e = QMatrix::zero(size, size);
    let mut h = QMatrix::zero(size, size);
    let mut f = QMatrix::zero(size, size);
    for i in 0..size {
        h[(i, i)] = crate::scalar::rat(n as i64 - 2 * i as i64);
        if i + 1 < size {
            // e v_{i+1} = (i+1)(n-i) v_i, f v_i = v_{i+1}
            e[(i, i + 1)] = crate::scalar::rat((i as i64 + 1) * (n as i64 - i as i64));
            f[(i + 1, i)] = Scalar::one();
        }
    }
    Representation::new(l, vec![e, h, f]).expect("consistent sizes")
}

/// A^n = 0 for n the matrix size.
pub fn is_nilpotent(a: &QMatrix) -> bool {
    assert_eq!(a.rows, a.cols);
    let mut p = QMatrix::identity(a.rows);
    for _ in 0..a.rows {
        p = p.mul(a);
    }
    p.is_zero()
}

/// Span of { X^i Y^j X^k v : i + j + k <= d } where X, Y are the
/// operators of x and y.
pub fn generated_submodule(
    r: &Representation,
    v: &[Scalar],
    x: &[Scalar],
    y: &[Scalar],
    d: u32,
) -> Result<Subspace> {
    let n = r.size();
    if v.len() != n {
        return Err(Error::SizeMismatch);
    }
    let bx = r.act(x);
    let by = r.act(y);
    let mut vectors = Vec::new();
    let mut xk = v.to_vec();
    for k in 0..=d {
        if k > 0 {
            xk = bx.mul_vec(&xk);
        }
        let mut yj = xk.clone();
        for j in 0..=(d - k) {
            if j > 0 {
                yj = by.mul_vec(&yj);
            }
            let mut xi = yj.clone();
            for i in 0..=(d - k - j) {
                if i > 0 {
                    xi = bx.mul_vec(&xi);
                }
                vectors.push(xi.clone());
            }
        }
    }
    Ok(Subspace::from_vectors(n, vectors))
}

/// Grow the degree until two consecutive spans agree, then check the
/// stabilized span is invariant under every basis operator. Returns the
/// span and the degree at which it stabilized.
pub fn generated_submodule_stabilized(
    r: &Representation,
    v: &[Scalar],
    x: &[Scalar],
    y: &[Scalar],
) -> Result<(Subspace, u32)> {
    let mut previous = generated_submodule(r, v, x, y, 0)?;
    let mut d = 1;
    loop {
        let next = generated_submodule(r, v, x, y, d)?;
        if next.dim() == previous.dim() {
            for i in 0..r.algebra().dim() {
                let m = r.matrix(i);
                for row in next.basis() {
                    if !next.contains(&m.mul_vec(row)) {
                        return Err(Error::HypothesisFailed(format!(
                            "stabilized span is not invariant under basis operator {}",
                            r.algebra().basis_names()[i]
                        )));
                    }
                }
            }
            return Ok((next, d));
        }
        previous = next;
        d += 1;
    }
}

/// Outcome of the exact diagonalizability test over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleReport {
    pub diagonalizable_over_q: bool,
    /// (eigenvalue, multiplicity), ascending.
    pub spectrum: Vec<(Scalar, usize)>,
    pub reason: Option<String>,
}

/// Restrict `h` to an invariant subspace and decide whether the minimal
/// polynomial is a product of distinct rational linear factors. The
/// verdict refers to diagonalizability over Q; a squarefree minimal
/// polynomial with an irreducible quadratic factor reports the irrational
/// spectrum as the reason.
pub fn semisimple_on(h: &QMatrix, s: &Subspace) -> Result<SemisimpleReport> {
    let k = s.dim();
    let mut restricted = QMatrix::zero(k, k);
    for (j, row) in s.basis().iter().enumerate() {
        let img = h.mul_vec(row);
        let coords = s.coordinates(&img).ok_or(Error::NotInvariant)?;
        for i in 0..k {
            restricted[(i, j)] = coords[i].clone();
        }
    }
    if k == 0 {
        return Ok(SemisimpleReport {
            diagonalizable_over_q: true,
            spectrum: Vec::new(),
            reason: None,
        });
    }
    let p = min_poly(&restricted);
    if !poly_is_squarefree(&p) {
        return Ok(SemisimpleReport {
            diagonalizable_over_q: false,
            spectrum: Vec::new(),
            reason: Some("minimal polynomial is not squarefree".into()),
        });
    }
    match monic_rational_roots(&p) {
        None => Ok(SemisimpleReport {
            diagonalizable_over_q: false,
            spectrum: Vec::new(),
            reason: Some("irrational spectrum".into()),
        }),
        Some(mut roots) => {
            roots.sort();
            let spectrum = roots
                .into_iter()
                .map(|lambda| {
                    let mut m = restricted.clone();
                    for i in 0..k {
                        let t = &m[(i, i)] - &lambda;
                        m[(i, i)] = t;
                    }
                    let mult = k - m.rank();
                    (lambda, mult)
                })
                .collect();
            Ok(SemisimpleReport {
                diagonalizable_over_q: true,
                spectrum,
                reason: None,
            })
        }
    }
}

fn poly_derivative(p: &[Scalar]) -> Vec<Scalar> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| crate::scalar::rat(i as i64) * c)
        .collect()
}

fn poly_divmod(num: &[Scalar], den: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let mut quo = vec![Scalar::zero(); rem.len() - dd];
    while rem.len() >= den.len() && rem.iter().any(|c| !c.is_zero()) {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / den.last().unwrap();
        if factor.is_zero() {
            rem.pop();
            continue;
        }
        quo[shift] = factor.clone();
        for (i, c) in den.iter().enumerate() {
            let t = &rem[shift + i] - &factor * c;
            rem[shift + i] = t;
        }
        while rem.last().is_some_and(|c| c.is_zero()) && rem.len() > 1 {
            rem.pop();
        }
        if rem.len() <= dd {
            break;
        }
    }
    while rem.last().is_some_and(|c| c.is_zero()) && rem.len() > 1 {
        rem.pop();
    }
    (quo, rem)
}

fn poly_is_squarefree(p: &[Scalar]) -> bool {
    let dp = poly_derivative(p);
    poly_gcd_degree(p, &dp) == 0
}

fn poly_gcd_degree(a: &[Scalar], b: &[Scalar]) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while y.len() > 1 || !y[0].is_zero() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = if r.is_empty() { vec![Scalar::zero()] } else { r };
        if y.len() == 1 && y[0].is_zero() {
            break;
        }
    }
    x.len() - 1
}

/// Roots of a monic rational polynomial, when it splits over Q with the
/// expected number of distinct roots; otherwise None. Substituting t = s/D
/// for the denominator lcm D gives a monic integer polynomial whose
/// rational roots are integer divisors of its constant term.
fn monic_rational_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let m = p.len() - 1;
    if m == 0 {
        return Some(vec![]);
    }
    let mut d = BigInt::one();
    for c in p.iter() {
        d = num_integer::Integer::lcm(&d, c.denom());
    }
    let dq = Scalar::from_integer(d.clone());
    // q(s) = D^m p(s / D), monic integer polynomial
    let mut q: Vec<BigInt> = Vec::with_capacity(p.len());
    for (i, c) in p.iter().enumerate() {
        // coefficient of s^i is c * D^(m - i)
        let mut scaled = c.clone();
        for _ in 0..(m - i) {
            scaled *= &dq;
        }
        debug_assert!(scaled.denom().is_one());
        q.push(scaled.numer().clone());
    }
    let mut remaining = q;
    let mut roots = Vec::new();
    loop {
        let deg = remaining.len() - 1;
        if deg == 0 {
            break;
        }
        let c0 = remaining[0].clone();
        let root = if c0.is_zero() {
            Some(BigInt::zero())
        } else {
            integer_divisors(&c0)?
                .into_iter()
                .find(|cand| int_poly_eval(&remaining, cand).is_zero())
        };
        let root = root?;
        roots.push(Scalar::new(root.clone(), d.clone()));
        // synthetic division by (s - root)
        let mut next = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..deg).rev() {
            carry = &remaining[i + 1] + &root * &carry;
            next[i] = carry.clone();
        }
        remaining = next;
    }
    Some(roots)
}

fn int_poly_eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Signed divisors of a nonzero integer, or None when it is too large to
/// factor by trial division.
fn integer_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let small: i128 = n.abs().try_into().ok()?;
    if small > 10_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d: i128 = 1;
    while d * d <= small {
        if small % d == 0 {
            divs.push(d);
            divs.push(small / d);
        }
        d += 1;
    }
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(BigInt::from(d));
        out.push(BigInt::from(-d));
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn irreps_verify_and_have_the_stated_spectra() {
        for n in 0..=4u32 {
            let r = sl2_irrep(n);
            assert!(verify_rep(&r).passed(), "irrep {}", n);
            assert!(is_nilpotent(r.matrix(0)));
            assert!(is_nilpotent(r.matrix(2)));
            let full = Subspace::full(r.size());
            let rep = semisimple_on(r.matrix(1), &full).unwrap();
            assert!(rep.diagonalizable_over_q);
            let expected: Vec<Scalar> = (0..=n).map(|i| rat(n as i64 - 2 * i as i64)).collect();
            let mut sorted = expected.clone();
            sorted.sort();
            assert_eq!(
                rep.spectrum.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>(),
                sorted
            );
            assert!(rep.spectrum.iter().all(|(_, m)| *m == 1));
        }
    }

    #[test]
    fn zero_representation_passes() {
        let l = crate::algebras::sl2();
        let zero = Representation::new(
            l,
            vec![QMatrix::zero(2, 2), QMatrix::zero(2, 2), QMatrix::zero(2, 2)],
        )
        .unwrap();
        assert!(verify_rep(&zero).passed());
    }

    #[test]
    fn perturbed_representation_fails_with_a_witness() {
        let r = sl2_irrep(2);
        let mut bad = r.matrix(0).clone();
        bad[(0, 0)] = rat(1);
        let broken = Representation::new(
            r.algebra().clone(),
            vec![bad, r.matrix(1).clone(), r.matrix(2).clone()],
        )
        .unwrap();
        let cert = verify_rep(&broken);
        assert!(!cert.passed());
        assert!(cert.witnesses[0].contains("(e, h)") || cert.witnesses[0].contains("(e, f)"));
    }

    #[test]
    fn nilpotence_of_triangular_and_not_identity() {
        assert!(!is_nilpotent(&QMatrix::identity(3)));
        let mut strict = QMatrix::zero(3, 3);
        strict[(0, 1)] = rat(5);
        strict[(1, 2)] = rat(-2);
        assert!(is_nilpotent(&strict));
    }

    #[test]
    fn lowest_weight_vector_spans_everything() {
        let r = sl2_irrep(3);
        let l = r.algebra().clone();
        let e = l.basis_vector(0);
        let f = l.basis_vector(2);
        // v_n is the last basis vector: f v_n = 0
        let mut v = vec![rat(0); 4];
        v[3] = rat(1);
        let span = generated_submodule(&r, &v, &e, &f, 6).unwrap();
        assert_eq!(span.dim(), 4);
        let (stab, _) = generated_submodule_stabilized(&r, &v, &e, &f).unwrap();
        assert_eq!(stab.dim(), 4);
    }

    #[test]
    fn trivial_module_gives_a_line() {
        let r = sl2_irrep(0);
        let l = r.algebra().clone();
        let span = generated_submodule(
            &r,
            &[rat(1)],
            &l.basis_vector(0),
            &l.basis_vector(2),
            3,
        )
        .unwrap();
        assert_eq!(span.dim(), 1);
    }

    #[test]
    fn direct_sum_keeps_the_summand() {
        // sl2_irrep(1) + sl2_irrep(3), vector inside the first summand
        let r1 = sl2_irrep(1);
        let r3 = sl2_irrep(3);
        let l = r1.algebra().clone();
        let block = |a: &QMatrix, b: &QMatrix| -> QMatrix {
            let n = a.rows + b.rows;
            let mut m = QMatrix::zero(n, n);
            for i in 0..a.rows {
                for j in 0..a.rows {
                    m[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..b.rows {
                for j in 0..b.rows {
                    m[(a.rows + i, a.rows + j)] = b[(i, j)].clone();
                }
            }
            m
        };
        let sum = Representation::new(
            l.clone(),
            (0..3).map(|i| block(r1.matrix(i), r3.matrix(i))).collect(),
        )
        .unwrap();
        assert!(verify_rep(&sum).passed());
        let mut v = vec![rat(0); 6];
        v[1] = rat(1);
        let span =
            generated_submodule(&sum, &v, &l.basis_vector(0), &l.basis_vector(2), 6).unwrap();
        assert_eq!(span.dim(), 2);
    }

    #[test]
    fn jordan_block_is_not_semisimple() {
        let mut j = QMatrix::zero(2, 2);
        j[(0, 1)] = rat(1);
        let rep = semisimple_on(&j, &Subspace::full(2)).unwrap();
        assert!(!rep.diagonalizable_over_q);
        assert_eq!(rep.reason.as_deref(), Some("minimal polynomial is not squarefree"));
    }

    #[test]
    fn irrational_spectrum_is_reported() {
        // [[0,2],[1,0]] has minimal polynomial t^2 - 2
        let m = QMatrix::from_rows(vec![vec![rat(0), rat(2)], vec![rat(1), rat(0)]]);
        let rep = semisimple_on(&m, &Subspace::full(2)).unwrap();
        assert!(!rep.diagonalizable_over_q);
        assert_eq!(rep.reason.as_deref(), Some("irrational spectrum"));
    }

    #[test]
    fn invariance_is_checked() {
        let r = sl2_irrep(2);
        let line = Subspace::from_vectors(3, vec![vec![rat(1), rat(0), rat(0)]]);
        // e does not fix the line spanned by v_0 under f-action; h does
        assert!(semisimple_on(r.matrix(1), &line).is_ok());
        assert!(matches!(
            semisimple_on(r.matrix(2), &line),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn highest_weight_identity() {
        // with f v = 0, e^n v != 0, e^{n+1} v = 0: h e^n v = n e^n v
        for n in 1..=4u32 {
            let r = sl2_irrep(n);
            let size = r.size();
            let mut v = vec![rat(0); size];
            v[size - 1] = rat(1);
            assert!(r.matrix(2).mul_vec(&v).iter().all(|c| c.is_zero()));
            let mut en_v = v.clone();
            for _ in 0..n {
                en_v = r.matrix(0).mul_vec(&en_v);
            }
            assert!(!en_v.iter().all(|c| c.is_zero()));
            let en1_v = r.matrix(0).mul_vec(&en_v);
            assert!(en1_v.iter().all(|c| c.is_zero()));
            let lhs = r.matrix(1).mul_vec(&en_v);
            let rhs: Vec<Scalar> = en_v.iter().map(|c| rat(n as i64) * c).collect();
            assert_eq!(lhs, rhs);
        }
    }
}
