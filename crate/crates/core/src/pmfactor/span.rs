//! Ordered-factorization spanning certificates. A scheme (B_1, ..., B_s)
//! of subalgebras is checked at filtration degree d by enumerating the
//! products m_1 ... m_s of ordered monomials drawn from the factors with
//! total degree <= 2d, normalizing each, and testing that the span covers
//! all of U(L)_{<= d}. Products of degree beyond d are needed because a
//! commutator `[x,y]` is a degree-one element that only degree-two products
//! reach; the factor-two budget is the bound the two-generated recursion
//! gives. A pass is a finite necessary condition for the full
//! factorization U(L) = U(B_1) ... U(B_s).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebras::TriangularData;
use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::grading::{positivity, Grading, Sign};
use crate::lie::{LieAlgebra, Vector};
use crate::linalg::{clear_denominators, IntEchelon, QMatrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::uea::{pbw_count, right_multiply, PBWPoly, PbwIndex};

/// An ordered list of bracket-closed subspaces of L, the right-hand shape
/// of a factorization statement.
#[derive(Clone, Debug)]
pub struct FactorizationScheme {
    factors: Vec<Subspace>,
    labels: Vec<String>,
}

impl FactorizationScheme {
    pub fn new(factors: Vec<Subspace>, labels: Vec<String>) -> Self {
        assert_eq!(factors.len(), labels.len());
        FactorizationScheme { factors, labels }
    }

    pub fn unlabeled(factors: Vec<Subspace>) -> Self {
        let labels = (0..factors.len()).map(|i| format!("B{}", i + 1)).collect();
        FactorizationScheme { factors, labels }
    }

    pub fn factors(&self) -> &[Subspace] {
        &self.factors
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn describe(&self) -> String {
        self.labels
            .iter()
            .zip(&self.factors)
            .map(|(l, f)| format!("{}({})", l, f.dim()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Exponent tuples of total degree <= budget over `width` slots, by
/// (degree, lex). Each tuple indexes a monomial in one factor's basis.
fn factor_monomials(width: usize, budget: u32) -> Vec<Vec<u32>> {
    if width == 0 {
        return vec![vec![]];
    }
    crate::uea::pbw_monomials(width, budget)
}

struct ProductEnumerator<'a> {
    l: &'a LieAlgebra,
    factors: &'a [Subspace],
    budget: u32,
    rows: Vec<(u32, PBWPoly)>,
}

impl<'a> ProductEnumerator<'a> {
    fn run(l: &'a LieAlgebra, factors: &'a [Subspace], budget: u32) -> Result<Vec<(u32, PBWPoly)>> {
        let mut e = ProductEnumerator {
            l,
            factors,
            budget,
            rows: Vec::new(),
        };
        let unit = PBWPoly::unit(l.dim());
        e.descend(0, 0, &unit)?;
        // deterministic insertion order: by total degree, then discovery
        e.rows.sort_by_key(|(d, _)| *d);
        Ok(e.rows)
    }

    fn descend(&mut self, factor: usize, used: u32, prefix: &PBWPoly) -> Result<()> {
        if factor == self.factors.len() {
            self.rows.push((used, prefix.clone()));
            return Ok(());
        }
        let basis = self.factors[factor].basis();
        for expts in factor_monomials(basis.len(), self.budget - used) {
            let deg: u32 = expts.iter().sum();
            let next = if deg == 0 {
                prefix.clone()
            } else {
                // multiply in one degree-one factor at a time, renormalizing
                let mut acc = prefix.clone();
                for (v, &e) in basis.iter().zip(expts.iter()) {
                    for _ in 0..e {
                        acc = right_multiply(self.l, &acc, v)?;
                    }
                }
                acc
            };
            self.descend(factor + 1, used + deg, &next)?;
        }
        Ok(())
    }
}

/// Check that the scheme's bounded products span U(L)_{<= d}; report the
/// covered dimension and, on failure, a basis of the missing complement.
pub fn span_certificate(
    l: &LieAlgebra,
    scheme: &FactorizationScheme,
    d: u32,
) -> Result<Certificate> {
    let started = Instant::now();
    for (i, factor) in scheme.factors().iter().enumerate() {
        if factor.ambient() != l.dim() {
            return Err(Error::DimensionMismatch {
                expected: l.dim(),
                got: factor.ambient(),
            });
        }
        if !l.is_subalgebra(factor) {
            return Ok(Certificate::fail()
                .with_degree(d)
                .with_witness(format!(
                    "factor {} ({}) is not a subalgebra",
                    i + 1,
                    scheme.labels()[i]
                ))
                .timed(started));
        }
    }
    let dim = l.dim();
    let budget = 2 * d;
    let index = PbwIndex::new(dim, budget);
    let target = pbw_count(dim, d);
    let rows = ProductEnumerator::run(l, scheme.factors(), budget)?;

    let unit_row = |i: usize| -> Vec<(usize, BigInt)> { vec![(i, BigInt::one())] };
    let mut ech = IntEchelon::new();
    let mut verdict = Verdict::Fail;
    let mut chunk = 0usize;
    'outer: for (_, p) in &rows {
        let sparse = index.sparse(p);
        if sparse.is_empty() {
            continue;
        }
        ech.insert(clear_denominators(&sparse));
        chunk += 1;
        if chunk.is_multiple_of(64) && (0..target).all(|i| ech.contains(&unit_row(i))) {
            verdict = Verdict::Pass;
            break 'outer;
        }
    }
    if verdict == Verdict::Fail && (0..target).all(|i| ech.contains(&unit_row(i))) {
        verdict = Verdict::Pass;
    }
    if verdict == Verdict::Pass {
        return Ok(Certificate::pass()
            .with_degree(d)
            .with_rank(target, target)
            .timed(started));
    }
    // count the dimensions of U_{<= d} that lie outside the span: each
    // unit that enlarges the echelon is a missing direction
    let mut missing = Vec::new();
    for i in 0..target {
        if ech.insert(unit_row(i)) {
            missing.push(i);
        }
    }
    let rank = target - missing.len();
    let witness_monos: Vec<String> = missing
        .iter()
        .take(8)
        .map(|&i| {
            let mono = index.monomial(i);
            let mut p = PBWPoly::zero(dim);
            p.add_term(mono.clone(), Scalar::one());
            p.format_with(l)
        })
        .collect();
    Ok(Certificate::fail()
        .with_degree(d)
        .with_rank(rank, target)
        .with_witness(format!("missing {} dimension(s) of U_<=d", missing.len()))
        .with_witnesses(witness_monos)
        .timed(started))
}

/// Definition of a plus-minus pair, checked at filtration degree d:
/// P and M are subalgebras, P + M is a proper subspace of L, and the
/// three-factor scheme (P, M, P) spans U(L)_{<= d}.
pub fn verify_pm_pair(
    l: &LieAlgebra,
    p: &Subspace,
    m: &Subspace,
    d: u32,
) -> Result<Certificate> {
    let started = Instant::now();
    if !l.is_subalgebra(p) {
        return Ok(Certificate::fail()
            .with_degree(d)
            .with_witness("P is not a subalgebra")
            .timed(started));
    }
    if !l.is_subalgebra(m) {
        return Ok(Certificate::fail()
            .with_degree(d)
            .with_witness("M is not a subalgebra")
            .timed(started));
    }
    if p.sum(m).dim() >= l.dim() {
        return Ok(Certificate::fail()
            .with_degree(d)
            .with_witness("P + M is all of L")
            .timed(started));
    }
    let scheme = FactorizationScheme::new(
        vec![p.clone(), m.clone(), p.clone()],
        vec!["P".into(), "M".into(), "P".into()],
    );
    let mut cert = span_certificate(l, &scheme, d)?;
    cert.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(cert)
}

/// A regular plus-minus pair additionally has P meeting M trivially and an
/// order-two automorphism exchanging them; both product orders
/// U(P)U(M)U(P) and U(M)U(P)U(M) must span.
pub fn verify_regular_pair(
    l: &LieAlgebra,
    p: &Subspace,
    m: &Subspace,
    sigma: &QMatrix,
    d: u32,
) -> Result<Certificate> {
    let started = Instant::now();
    let dim = l.dim();
    if sigma.rows != dim || sigma.cols != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: sigma.rows,
        });
    }
    let fail = |w: String| {
        Ok(Certificate::fail()
            .with_degree(d)
            .with_witness(w)
            .timed(started))
    };
    if sigma.inverse().is_none() {
        return fail("sigma is singular".into());
    }
    // order two
    if sigma.mul(sigma) != QMatrix::identity(dim) {
        return fail("sigma^2 is not the identity".into());
    }
    // automorphism: sigma[b_i, b_j] = [sigma b_i, sigma b_j]
    for i in 0..dim {
        for j in (i + 1)..dim {
            let lhs = sigma.mul_vec(l.table_entry(i, j));
            let rhs = l.bracket(&sigma.col_vec(i), &sigma.col_vec(j))?;
            if lhs != rhs {
                return fail(format!(
                    "sigma does not preserve the bracket on ({}, {})",
                    l.basis_names()[i],
                    l.basis_names()[j]
                ));
            }
        }
    }
    if p.intersect(m).dim() != 0 {
        return fail("P and M intersect nontrivially".into());
    }
    let image = Subspace::from_vectors(
        dim,
        p.basis().iter().map(|v| sigma.mul_vec(v)).collect(),
    );
    if &image != m {
        return fail("sigma(P) is not M".into());
    }
    let pmp = verify_pm_pair(l, p, m, d)?;
    if !pmp.passed() {
        return Ok(pmp);
    }
    let mpm = FactorizationScheme::new(
        vec![m.clone(), p.clone(), m.clone()],
        vec!["M".into(), "P".into(), "M".into()],
    );
    let back = span_certificate(l, &mpm, d)?;
    if !back.passed() {
        return Ok(back.with_witness("U(M)U(P)U(M) side failed").timed(started));
    }
    Ok(Certificate::pass()
        .with_degree(d)
        .with_rank(
            pmp.rank.unwrap_or_default(),
            pmp.target.unwrap_or_default(),
        )
        .timed(started))
}

/// The Borcherds-style scheme (Fe_i)_{i in I}, g_-, h'', g_+, (Ff_j)_{j in J}
/// for a partition (I, J) of the generator indices; h'' is the echelon
/// complement of h' = h intersect `[L, L]` inside h.
pub fn borcherds_scheme(
    l: &LieAlgebra,
    data: &TriangularData,
    i_set: &[usize],
    j_set: &[usize],
) -> Result<FactorizationScheme> {
    let rank = data.e.len();
    if data.f.len() != rank {
        return Err(Error::BadParameter("e and f lists differ in length".into()));
    }
    let mut seen = vec![false; rank];
    for &t in i_set.iter().chain(j_set.iter()) {
        if t == 0 || t > rank || seen[t - 1] {
            return Err(Error::NotAPartition { rank });
        }
        seen[t - 1] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotAPartition { rank });
    }
    let derived = l.derived_subalgebra();
    let hprime = data.cartan.intersect(&derived);
    let hsecond = hprime.complement_in(&data.cartan);
    let mut factors = Vec::new();
    let mut labels = Vec::new();
    let mut i_sorted = i_set.to_vec();
    i_sorted.sort_unstable();
    let mut j_sorted = j_set.to_vec();
    j_sorted.sort_unstable();
    for &i in &i_sorted {
        factors.push(Subspace::from_vectors(l.dim(), vec![data.e[i - 1].clone()]));
        labels.push(format!("Fe{}", i));
    }
    factors.push(data.gminus.clone());
    labels.push("g-".into());
    factors.push(hsecond);
    labels.push("h''".into());
    factors.push(data.gplus.clone());
    labels.push("g+".into());
    for &j in &j_sorted {
        factors.push(Subspace::from_vectors(l.dim(), vec![data.f[j - 1].clone()]));
        labels.push(format!("Ff{}", j));
    }
    Ok(FactorizationScheme::new(factors, labels))
}

/// The graded four-factor scheme U(g_{a1}) U(g_-) U(g_0') U(g_+) of a
/// Z^n-graded algebra, after checking the hypotheses: the grading respects
/// the bracket, Z a1 meets the support exactly in {0, +-a1}, the slice
/// g_{a1} + [g_{a1}, g_{-a1}] + g_{-a1} is a subalgebra in which
/// (g_{a1}, g_{-a1}) is a plus-minus pair at degree d, and the canonical
/// complement g_0' of [g_{a1}, g_{-a1}] in g_0 is a subalgebra.
pub fn zgraded_scheme(
    l: &LieAlgebra,
    grading: &Grading,
    alpha1: &[i64],
    d: u32,
) -> Result<(FactorizationScheme, Certificate)> {
    let started = Instant::now();
    if grading.dim_algebra() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: grading.dim_algebra(),
        });
    }
    if !grading.respects(l) {
        return Err(Error::HypothesisFailed(
            "grading does not respect the bracket".into(),
        ));
    }
    if positivity(alpha1) == Sign::Zero {
        return Err(Error::HypothesisFailed("alpha1 is zero".into()));
    }
    let support = grading.support();
    // Z alpha1 cap Delta = {0, +-alpha1}
    for delta in &support {
        if let Some(c) = integer_multiple(delta, alpha1) {
            if !(-1..=1).contains(&c) {
                return Err(Error::HypothesisFailed(format!(
                    "Z alpha1 meets the support at {} alpha1",
                    c
                )));
            }
        }
    }
    let zero = vec![0i64; alpha1.len()];
    let neg: Vec<i64> = alpha1.iter().map(|c| -c).collect();
    for (name, deg) in [("0", &zero), ("alpha1", &alpha1.to_vec()), ("-alpha1", &neg)] {
        if !support.contains(deg) {
            return Err(Error::HypothesisFailed(format!(
                "support misses {} (Z alpha1 cap Delta != {{0, +-alpha1}})",
                name
            )));
        }
    }
    let g_a1 = grading.piece(alpha1);
    let g_na1 = grading.piece(&neg);
    let g_zero = grading.piece(&zero);
    // [g_a1, g_-a1]
    let mut br = Vec::new();
    for u in g_a1.basis() {
        for v in g_na1.basis() {
            br.push(l.bracket(u, v)?);
        }
    }
    let core = Subspace::from_vectors(l.dim(), br);
    // slice subalgebra with its plus-minus pair
    let slice = g_a1.sum(&core).sum(&g_na1);
    if !l.is_subalgebra(&slice) {
        return Err(Error::HypothesisFailed(
            "g_a1 + [g_a1, g_-a1] + g_-a1 is not a subalgebra".into(),
        ));
    }
    let (slice_alg, inclusion) = l.restrict_to(&slice)?;
    let restrict = |s: &Subspace| -> Subspace {
        let rows: Vec<Vector> = s
            .basis()
            .iter()
            .map(|v| slice.coordinates(v).expect("piece lies in the slice"))
            .collect();
        Subspace::from_vectors(slice.dim(), rows)
    };
    let pm = verify_pm_pair(&slice_alg, &restrict(&g_a1), &restrict(&g_na1), d)?;
    let _ = inclusion;
    if !pm.passed() {
        return Err(Error::HypothesisFailed(format!(
            "(g_a1, g_-a1) is not a plus-minus pair of the slice: {}",
            pm.witnesses.join("; ")
        )));
    }
    if !core.is_subspace_of(&g_zero) {
        return Err(Error::HypothesisFailed(
            "[g_a1, g_-a1] does not lie in g_0".into(),
        ));
    }
    let g_zero_prime = core.complement_in(&g_zero);
    if !l.is_subalgebra(&g_zero_prime) {
        return Err(Error::HypothesisFailed(
            "the canonical complement g_0' is not a subalgebra".into(),
        ));
    }
    let g_plus = grading.piece_by_sign(Sign::Positive);
    let g_minus = grading.piece_by_sign(Sign::Negative);
    let scheme = FactorizationScheme::new(
        vec![g_a1, g_minus, g_zero_prime, g_plus],
        vec!["g_a1".into(), "g-".into(), "g0'".into(), "g+".into()],
    );
    let cert = Certificate::pass()
        .with_degree(d)
        .with_witness("hypotheses: grading, Z alpha1 support, slice pair, complement")
        .timed(started);
    Ok((scheme, cert))
}

fn integer_multiple(delta: &[i64], alpha: &[i64]) -> Option<i64> {
    let mut c: Option<i64> = None;
    for (&dv, &av) in delta.iter().zip(alpha) {
        if av == 0 {
            if dv != 0 {
                return None;
            }
        } else {
            if dv % av != 0 {
                return None;
            }
            let q = dv / av;
            match c {
                None => c = Some(q),
                Some(prev) if prev != q => return None,
                _ => {}
            }
        }
    }
    c.or(Some(0))
}

/// Bounded seeded search for a one-dimensional plus-minus pair. A passing
/// pair is returned with its certificate; exhausting the budget yields a
/// fail certificate marked as a heuristic search, which proves nothing
/// about non-existence.
pub fn pair_search(
    l: &LieAlgebra,
    d: u32,
    seed: u64,
    attempts: u32,
) -> Result<(Option<(Vector, Vector)>, Certificate)> {
    use rand::Rng;
    use rand::SeedableRng;
    let started = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let dim = l.dim();
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| -> Vector {
        loop {
            let v: Vector = (0..dim)
                .map(|_| crate::scalar::rat(rng.gen_range(-3..=3)))
                .collect();
            if !crate::lie::vec_is_zero(&v) {
                return v;
            }
        }
    };
    for _ in 0..attempts {
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let p = Subspace::from_vectors(dim, vec![x.clone()]);
        let m = Subspace::from_vectors(dim, vec![y.clone()]);
        if p == m {
            continue;
        }
        let cert = verify_pm_pair(l, &p, &m, d)?;
        if cert.passed() {
            return Ok((
                Some((x.clone(), y.clone())),
                Certificate::pass()
                    .with_degree(d)
                    .with_seed(seed)
                    .with_witness(format!(
                        "heuristic search hit: P = {}, M = {}",
                        l.format_vector(&x),
                        l.format_vector(&y)
                    ))
                    .timed(started),
            ));
        }
    }
    Ok((
        None,
        Certificate::fail()
            .with_degree(d)
            .with_seed(seed)
            .with_witness(format!(
                "heuristic: no pair among {} seeded one-dimensional candidates",
                attempts
            ))
            .timed(started),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{abelian, g_special, heisenberg, sl2, sl2_triangular};
    use crate::uea::pbw_count;

    fn line(l: &LieAlgebra, i: usize) -> Subspace {
        Subspace::from_vectors(l.dim(), vec![l.basis_vector(i)])
    }

    #[test]
    fn sl2_efe_scheme_passes_at_degree_four() {
        let l = sl2();
        let scheme = FactorizationScheme::unlabeled(vec![line(&l, 0), line(&l, 2), line(&l, 0)]);
        let cert = span_certificate(&l, &scheme, 4).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.rank, Some(35));
        assert_eq!(cert.target, Some(pbw_count(3, 4)));
    }

    #[test]
    fn heisenberg_xyx_scheme_passes_at_degree_four() {
        let l = heisenberg();
        let scheme = FactorizationScheme::unlabeled(vec![line(&l, 0), line(&l, 1), line(&l, 0)]);
        assert!(span_certificate(&l, &scheme, 4).unwrap().passed());
    }

    #[test]
    fn abelian_control_fails_with_rank_six_of_ten() {
        let l = abelian(3);
        let scheme = FactorizationScheme::unlabeled(vec![line(&l, 0), line(&l, 1), line(&l, 0)]);
        let cert = span_certificate(&l, &scheme, 2).unwrap();
        assert!(!cert.passed());
        assert_eq!(cert.rank, Some(6));
        assert_eq!(cert.target, Some(10));
    }

    #[test]
    fn two_dimensional_p_is_rejected_because_p_plus_m_is_l() {
        let l = sl2();
        let p = Subspace::from_vectors(3, vec![l.basis_vector(0), l.basis_vector(1)]);
        let m = line(&l, 2);
        let cert = verify_pm_pair(&l, &p, &m, 4).unwrap();
        assert!(!cert.passed());
        assert!(cert.witnesses[0].contains("P + M"));
    }

    #[test]
    fn sl2_regular_pair_with_the_swap_involution() {
        let l = sl2();
        // sigma: e <-> f, h -> -h
        let mut sigma = QMatrix::zero(3, 3);
        sigma[(2, 0)] = crate::scalar::rat(1);
        sigma[(1, 1)] = crate::scalar::rat(-1);
        sigma[(0, 2)] = crate::scalar::rat(1);
        let cert = verify_regular_pair(&l, &line(&l, 0), &line(&l, 2), &sigma, 3).unwrap();
        assert!(cert.passed(), "{:?}", cert);
        let id = QMatrix::identity(3);
        let bad = verify_regular_pair(&l, &line(&l, 0), &line(&l, 2), &id, 3).unwrap();
        assert!(!bad.passed());
        assert!(bad.witnesses[0].contains("sigma(P)"));
    }

    #[test]
    fn borcherds_scheme_for_sl2_reduces_to_efe() {
        let (l, data) = sl2_triangular();
        let scheme = borcherds_scheme(&l, &data, &[1], &[]).unwrap();
        // (Fe, Ff, h''=0, Fe)
        assert_eq!(scheme.factors().len(), 4);
        assert_eq!(scheme.factors()[2].dim(), 0);
        let cert = span_certificate(&l, &scheme, 3).unwrap();
        assert!(cert.passed());
        assert!(matches!(
            borcherds_scheme(&l, &data, &[1], &[1]),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(
            borcherds_scheme(&l, &data, &[], &[]),
            Err(Error::NotAPartition { .. })
        ));
    }

    #[test]
    fn pair_search_fails_on_g_and_finds_on_sl2() {
        let g = g_special();
        let (hit, cert) = pair_search(&g, 3, 0, 12).unwrap();
        assert!(hit.is_none());
        assert!(!cert.passed());
        let l = sl2();
        let (hit, cert) = pair_search(&l, 3, 0, 40).unwrap();
        assert!(hit.is_some());
        assert!(cert.passed());
    }
}
