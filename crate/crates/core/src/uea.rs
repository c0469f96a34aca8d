//! The universal enveloping algebra layer: noncommutative polynomials over
//! an algebra's basis letters, the straightening rewriter that produces the
//! canonical PBW normal form, and the normal-form equality oracle.
//!
//! The rewriter repeatedly takes the leftmost adjacent out-of-order pair
//! `b_j b_i` (j > i in the basis order) and replaces it by
//! `b_i b_j + `[b_j, b_i]`. The measure (total degree, inversion count)
//! drops lexicographically at every step, so processing words in
//! decreasing measure order visits each word at most once and like terms
//! merge along the way.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::scalar::{format_scalar, Scalar};

/// A word in basis letters; the empty word is the unit.
pub type Word = Vec<u8>;

/// Exponent vector of an ordered monomial b_1^{m_1} ... b_d^{m_d}.
pub type PBWMonomial = Vec<u32>;

/// Sparse noncommutative polynomial: free-algebra element over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    dim: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(dim: usize) -> Self {
        NCPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(dim: usize) -> Self {
        let mut p = NCPoly::zero(dim);
        p.terms.insert(Vec::new(), Scalar::one());
        p
    }

    pub fn word(dim: usize, w: &[u8]) -> Self {
        assert!(w.iter().all(|&l| (l as usize) < dim), "letter out of range");
        let mut p = NCPoly::zero(dim);
        p.terms.insert(w.to_vec(), Scalar::one());
        p
    }

    /// A degree-one element from a coordinate vector.
    pub fn embed(v: &[Scalar]) -> Self {
        let mut p = NCPoly::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(vec![i as u8], c.clone());
            }
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|w| w.len() as u32).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.dim);
        }
        NCPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .collect(),
        }
    }

    /// Concatenation product, extended bilinearly. The unit is the empty
    /// word.
    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_dim(other)?;
        let mut out = NCPoly::zero(self.dim);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &NCPoly) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::AlgebraMismatch)
        } else {
            Ok(())
        }
    }
}

/// `v^n` as a noncommutative polynomial; `n = 0` gives the unit.
pub fn power(v: &[Scalar], n: u32) -> NCPoly {
    let base = NCPoly::embed(v);
    let mut out = NCPoly::unit(v.len());
    for _ in 0..n {
        out = out.mul(&base).expect("same dimension");
    }
    out
}

/// Canonical element of U(L): sparse map from ordered-exponent monomials
/// to scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBWPoly {
    dim: usize,
    terms: BTreeMap<PBWMonomial, Scalar>,
}

impl PBWPoly {
    pub fn zero(dim: usize) -> Self {
        PBWPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(dim: usize) -> Self {
        let mut p = PBWPoly::zero(dim);
        p.terms.insert(vec![0; dim], Scalar::one());
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<PBWMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PBWPoly) -> PBWPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PBWPoly) -> PBWPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> PBWPoly {
        if c.is_zero() {
            return PBWPoly::zero(self.dim);
        }
        PBWPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// Expand back to a noncommutative polynomial (each monomial becomes
    /// its sorted word).
    pub fn to_ncpoly(&self) -> NCPoly {
        let mut out = NCPoly::zero(self.dim);
        for (m, c) in &self.terms {
            let mut w = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    w.push(i as u8);
                }
            }
            out.add_term(w, c.clone());
        }
        out
    }

    /// The homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> PBWPoly {
        PBWPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().sum::<u32>() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Render with the algebra's basis names, lexicographically sorted.
    pub fn format_with(&self, l: &LieAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = l.basis_names();
        let mut out = String::new();
        for (m, c) in &self.terms {
            let negative = c < &Scalar::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            if factors.is_empty() {
                out.push_str(&format_scalar(&magnitude));
            } else {
                out.push_str(&format!(
                    "{} * {}",
                    format_scalar(&magnitude),
                    factors.join(" ")
                ));
            }
        }
        out
    }
}

/// Number of ordered monomials of total degree `<= d` in `dim` letters,
/// i.e. C(d + dim, dim).
pub fn pbw_count(dim: usize, d: u32) -> usize {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..=dim as u128 {
        num *= d as u128 + i;
        den *= i;
    }
    (num / den) as usize
}

/// All exponent vectors of total degree `<= max_degree`, ordered by
/// (total degree, lexicographic).
pub fn pbw_monomials(dim: usize, max_degree: u32) -> Vec<PBWMonomial> {
    let mut out = Vec::with_capacity(pbw_count(dim, max_degree));
    for d in 0..=max_degree {
        let mut current = vec![0u32; dim];
        compositions(dim, d, 0, &mut current, &mut out);
    }
    out
}

fn compositions(dim: usize, remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<PBWMonomial>) {
    if pos == dim - 1 {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        compositions(dim, remaining - v, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// A fixed (degree, lex) numbering of the PBW monomials up to a degree
/// bound, used to express elements of U(L) as coordinate rows.
pub struct PbwIndex {
    dim: usize,
    max_degree: u32,
    monomials: Vec<PBWMonomial>,
    index: BTreeMap<PBWMonomial, usize>,
}

impl PbwIndex {
    pub fn new(dim: usize, max_degree: u32) -> Self {
        let monomials = pbw_monomials(dim, max_degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        PbwIndex {
            dim,
            max_degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn monomial(&self, i: usize) -> &PBWMonomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &PBWMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coordinate row; panics if the polynomial exceeds the bound.
    pub fn dense(&self, p: &PBWPoly) -> Vec<Scalar> {
        assert_eq!(p.dim(), self.dim);
        let mut row = vec![Scalar::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            let i = self
                .index
                .get(m)
                .unwrap_or_else(|| panic!("monomial beyond degree bound {}", self.max_degree));
            row[*i] = c.clone();
        }
        row
    }

    /// Sparse coordinate row sorted by column index.
    pub fn sparse(&self, p: &PBWPoly) -> Vec<(usize, Scalar)> {
        assert_eq!(p.dim(), self.dim);
        let mut row: Vec<(usize, Scalar)> = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let i = self
                    .index
                    .get(m)
                    .unwrap_or_else(|| panic!("monomial beyond degree bound {}", self.max_degree));
                (*i, c.clone())
            })
            .collect();
        row.sort_by_key(|(i, _)| *i);
        row
    }
}

/// Left-multiply a normalized element by a degree-one element and
/// re-normalize.
pub fn left_multiply(l: &LieAlgebra, v: &[Scalar], p: &PBWPoly) -> Result<PBWPoly> {
    let prod = NCPoly::embed(v).mul(&p.to_ncpoly())?;
    pbw_normal_form(l, &prod)
}

/// Right-multiply a normalized element by a degree-one element and
/// re-normalize.
pub fn right_multiply(l: &LieAlgebra, p: &PBWPoly, v: &[Scalar]) -> Result<PBWPoly> {
    let prod = p.to_ncpoly().mul(&NCPoly::embed(v))?;
    pbw_normal_form(l, &prod)
}

/// The normal form of v^n, built one factor at a time so that dense
/// vectors never expand into exponentially many free words.
pub fn nf_power(l: &LieAlgebra, v: &[Scalar], n: u32) -> Result<PBWPoly> {
    let mut acc = PBWPoly::unit(l.dim());
    for _ in 0..n {
        acc = left_multiply(l, v, &acc)?;
    }
    Ok(acc)
}

fn word_inversions(w: &[u8]) -> u32 {
    let mut inv = 0;
    for p in 0..w.len() {
        for q in (p + 1)..w.len() {
            if w[p] > w[q] {
                inv += 1;
            }
        }
    }
    inv
}

fn word_to_exponents(w: &[u8], dim: usize) -> PBWMonomial {
    let mut m = vec![0u32; dim];
    for &l in w {
        m[l as usize] += 1;
    }
    m
}

/// Straighten a noncommutative polynomial into its PBW normal form over
/// the given algebra. The total degree never increases.
pub fn pbw_normal_form(l: &LieAlgebra, p: &NCPoly) -> Result<PBWPoly> {
    let dim = l.dim();
    if p.dim() != dim {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = PBWPoly::zero(dim);
    // Worklist keyed by (degree, inversions, word); rewriting a word only
    // produces strictly smaller keys, so popping the maximum visits each
    // word once with its fully merged coefficient.
    let mut work: BTreeMap<(u32, u32, Word), Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        work.insert(
            (w.len() as u32, word_inversions(w), w.clone()),
            c.clone(),
        );
    }
    let push = |work: &mut BTreeMap<(u32, u32, Word), Scalar>, w: Word, c: Scalar| {
        if c.is_zero() {
            return;
        }
        let key = (w.len() as u32, word_inversions(&w), w);
        match work.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    };
    while let Some(((_, _, w), c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => out.add_term(word_to_exponents(&w, dim), c),
            Some(t) => {
                let j = w[t] as usize;
                let i = w[t + 1] as usize;
                let mut swapped = w.clone();
                swapped.swap(t, t + 1);
                push(&mut work, swapped, c.clone());
                let br = l.table_entry(j, i);
                for (k, coeff) in br.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut contracted = Vec::with_capacity(w.len() - 1);
                    contracted.extend_from_slice(&w[..t]);
                    contracted.push(k as u8);
                    contracted.extend_from_slice(&w[t + 2..]);
                    push(&mut work, contracted, &c * coeff);
                }
            }
        }
    }
    Ok(out)
}

/// Equality oracle in U(L): passes when both sides have the same normal
/// form, otherwise reports the difference.
pub fn verify_identity(l: &LieAlgebra, lhs: &NCPoly, rhs: &NCPoly) -> Result<Certificate> {
    let started = Instant::now();
    let a = pbw_normal_form(l, lhs)?;
    let b = pbw_normal_form(l, rhs)?;
    let diff = a.sub(&b);
    if diff.is_zero() {
        Ok(Certificate::pass().timed(started))
    } else {
        Ok(Certificate::fail()
            .with_witness(format!("difference: {}", diff.format_with(l)))
            .timed(started))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{heisenberg, sl2};
    use crate::scalar::{rat, ratio};

    fn nf(l: &LieAlgebra, p: &NCPoly) -> PBWPoly {
        pbw_normal_form(l, p).unwrap()
    }

    #[test]
    fn unit_and_concatenation() {
        let l = sl2();
        let e = NCPoly::word(3, &[0]);
        let f = NCPoly::word(3, &[2]);
        assert_eq!(e.mul(&f).unwrap(), NCPoly::word(3, &[0, 2]));
        let one = NCPoly::unit(3);
        let p = e.add(&f).unwrap();
        assert_eq!(one.mul(&p).unwrap(), p);
        let _ = l;
    }

    #[test]
    fn distributivity_of_the_free_product() {
        // (e+f)(e-f) = ee - ef + fe - ff
        let e = NCPoly::word(3, &[0]);
        let f = NCPoly::word(3, &[2]);
        let lhs = e.add(&f).unwrap().mul(&e.sub(&f).unwrap()).unwrap();
        let mut expected = NCPoly::zero(3);
        expected.add_term(vec![0, 0], rat(1));
        expected.add_term(vec![0, 2], rat(-1));
        expected.add_term(vec![2, 0], rat(1));
        expected.add_term(vec![2, 2], rat(-1));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn sl2_fe_straightens_to_ef_minus_h() {
        let l = sl2();
        let fe = NCPoly::word(3, &[2, 0]);
        let got = nf(&l, &fe);
        let mut expected = PBWPoly::zero(3);
        expected.add_term(vec![1, 0, 1], rat(1));
        expected.add_term(vec![0, 1, 0], rat(-1));
        assert_eq!(got, expected);
    }

    #[test]
    fn sl2_fee_matches_the_displayed_commutation() {
        // fe^2 = e^2 f - 2 e h - 2 e
        let l = sl2();
        let got = nf(&l, &NCPoly::word(3, &[2, 0, 0]));
        let mut expected = PBWPoly::zero(3);
        expected.add_term(vec![2, 0, 1], rat(1));
        expected.add_term(vec![1, 1, 0], rat(-2));
        expected.add_term(vec![1, 0, 0], rat(-2));
        assert_eq!(got, expected);
    }

    #[test]
    fn heisenberg_yx_is_xy_minus_z() {
        let l = heisenberg();
        let got = nf(&l, &NCPoly::word(3, &[1, 0]));
        let mut expected = PBWPoly::zero(3);
        expected.add_term(vec![1, 1, 0], rat(1));
        expected.add_term(vec![0, 0, 1], rat(-1));
        assert_eq!(got, expected);
    }

    #[test]
    fn identity_a1_in_usl2() {
        // f(ef) = 1/2 e f^2 + 1/2 f^2 e + f
        let l = sl2();
        let lhs = NCPoly::word(3, &[2, 0, 2]);
        let ef2 = NCPoly::word(3, &[0, 2, 2]);
        let f2e = NCPoly::word(3, &[2, 2, 0]);
        let f = NCPoly::word(3, &[2]);
        let rhs = ef2
            .scale(&ratio(1, 2))
            .add(&f2e.scale(&ratio(1, 2)))
            .unwrap()
            .add(&f)
            .unwrap();
        assert!(verify_identity(&l, &lhs, &rhs).unwrap().passed());
    }

    #[test]
    fn identity_a1_prime_in_uheis() {
        // y(xy) = 1/2 x y^2 + 1/2 y^2 x
        let l = heisenberg();
        let lhs = NCPoly::word(3, &[1, 0, 1]);
        let rhs = NCPoly::word(3, &[0, 1, 1])
            .scale(&ratio(1, 2))
            .add(&NCPoly::word(3, &[1, 1, 0]).scale(&ratio(1, 2)))
            .unwrap();
        assert!(verify_identity(&l, &lhs, &rhs).unwrap().passed());
    }

    #[test]
    fn failed_identity_reports_the_difference() {
        let l = sl2();
        let ef = NCPoly::word(3, &[0, 2]);
        let fe = NCPoly::word(3, &[2, 0]);
        let cert = verify_identity(&l, &ef, &fe).unwrap();
        assert!(!cert.passed());
        assert!(cert.witnesses[0].contains("h"));
    }

    #[test]
    fn powers() {
        let e = [rat(1), rat(0), rat(0)];
        assert_eq!(power(&e, 0), NCPoly::unit(3));
        assert_eq!(power(&e, 3), NCPoly::word(3, &[0, 0, 0]));
        let xy = [rat(1), rat(1), rat(0)];
        let sq = power(&xy, 2);
        assert_eq!(sq.terms().len(), 4);
    }

    #[test]
    fn filtration_degree_never_increases() {
        let l = sl2();
        let p = NCPoly::word(3, &[2, 1, 0, 2, 0]);
        let n = nf(&l, &p);
        assert!(n.total_degree() <= 5);
        // top symbol survives: the degree-5 part is the sorted word
        let top = n.homogeneous_part(5);
        let mut expected = PBWPoly::zero(3);
        expected.add_term(vec![2, 1, 2], rat(1));
        assert_eq!(top, expected);
    }
}
