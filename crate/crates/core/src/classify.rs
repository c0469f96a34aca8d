//! Decision procedures and isomorphism invariants for three-dimensional
//! Lie algebras: the five-case split by the derived algebra, the
//! plus-minus-pair decision with witness generators, the unordered-pair
//! invariant for the K(a,b) family, projective-line classes for A(r), and
//! the regular-pair classification over Q by rational invariants.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::algebras::{CaseTag, RClass};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::lie::{vec_add, vec_is_zero, vec_scale, LieAlgebra, Vector};
use crate::linalg::QMatrix;
use crate::scalar::{format_scalar, rat, rational_sqrt, ratio, Scalar};
use crate::subspace::Subspace;

/// Result of the five-way case split. For the two-dimensional derived
/// algebra the acting matrix of ad z on L' is recorded.
#[derive(Clone, Debug)]
pub struct JacobsonCase {
    pub tag: CaseTag,
    pub ad_matrix: Option<QMatrix>,
}

fn require_dim3(l: &LieAlgebra) -> Result<()> {
    if l.dim() != 3 {
        Err(Error::NotThreeDimensional(l.dim()))
    } else {
        Ok(())
    }
}

/// Case split on dim L': 0 -> a; 1 central -> b; 1 otherwise -> c;
/// 2 -> d (with the ad action on L' recorded); 3 -> e.
pub fn classify_jacobson(l: &LieAlgebra) -> Result<JacobsonCase> {
    require_dim3(l)?;
    let derived = l.derived_subalgebra();
    let tag = match derived.dim() {
        0 => CaseTag::A,
        1 => {
            if derived.is_subspace_of(&l.center()) {
                CaseTag::B
            } else {
                CaseTag::C
            }
        }
        2 => CaseTag::D,
        _ => CaseTag::E,
    };
    let ad_matrix = if tag == CaseTag::D {
        let z = complement_vector(l, &derived);
        Some(l.ad_on(&z, &derived)?)
    } else {
        None
    };
    Ok(JacobsonCase { tag, ad_matrix })
}

/// First standard basis vector outside the subspace.
fn complement_vector(l: &LieAlgebra, s: &Subspace) -> Vector {
    for i in 0..l.dim() {
        let v = l.basis_vector(i);
        if !s.contains(&v) {
            return v;
        }
    }
    unreachable!("proper subspace misses some basis vector")
}

/// True when L is (isomorphic to) the algebra with `[x,y]` = 0, `[x,z]` = x,
/// `[y,z]` = y: the two-dimensional abelian derived algebra on which any
/// complement acts as a nonzero scalar.
pub fn is_isomorphic_to_g(l: &LieAlgebra) -> Result<bool> {
    require_dim3(l)?;
    let derived = l.derived_subalgebra();
    if derived.dim() != 2 {
        return Ok(false);
    }
    let basis = derived.basis();
    let inner = l.bracket(&basis[0], &basis[1])?;
    if !vec_is_zero(&inner) {
        return Ok(false);
    }
    let z = complement_vector(l, &derived);
    let m = l.ad_on(&z, &derived)?;
    Ok(is_scalar_matrix(&m) && !m.is_zero())
}

fn is_scalar_matrix(m: &QMatrix) -> bool {
    let n = m.rows;
    for i in 0..n {
        for j in 0..n {
            if i != j && !m[(i, j)].is_zero() {
                return false;
            }
        }
        if m[(i, i)] != m[(0, 0)] {
            return false;
        }
    }
    true
}

/// Decision: a three-dimensional algebra has a plus-minus pair exactly
/// when it is neither abelian nor the scalar-action algebra g; in the
/// positive cases a generating pair is constructed case by case.
pub fn has_pm_pair(l: &LieAlgebra) -> Result<(bool, Option<(Vector, Vector)>)> {
    require_dim3(l)?;
    let case = classify_jacobson(l)?;
    match case.tag {
        CaseTag::A => Ok((false, None)),
        CaseTag::B => {
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if !vec_is_zero(l.table_entry(i, j)) {
                        return Ok((true, Some((l.basis_vector(i), l.basis_vector(j)))));
                    }
                }
            }
            unreachable!("case b has a nonzero bracket")
        }
        CaseTag::C => {
            let derived = l.derived_subalgebra();
            let w = derived.basis()[0].clone();
            for i in 0..3 {
                let br = l.bracket(&w, &l.basis_vector(i))?;
                if vec_is_zero(&br) {
                    continue;
                }
                // [w, b_i] = lambda w; take y with [w, y] = w
                let lambda = proportionality(&br, &w).expect("br lies in the derived line");
                let y = vec_scale(&lambda.recip(), &l.basis_vector(i));
                let z = l.center().basis()[0].clone();
                return Ok((true, Some((vec_add(&w, &z), y))));
            }
            unreachable!("case c derived line is not central")
        }
        CaseTag::D => {
            let derived = l.derived_subalgebra();
            let x = derived.basis()[0].clone();
            let y = derived.basis()[1].clone();
            let z0 = complement_vector(l, &derived);
            // [x, z] = alpha x + beta y, [y, z] = gamma x + delta y
            let xz = l.bracket(&x, &z0)?;
            let yz = l.bracket(&y, &z0)?;
            let c1 = derived.coordinates(&xz).expect("derived is an ideal");
            let c2 = derived.coordinates(&yz).expect("derived is an ideal");
            let (alpha, beta) = (c1[0].clone(), c1[1].clone());
            let (gamma, delta) = (c2[0].clone(), c2[1].clone());
            if alpha.is_zero() {
                // [x, y + z] = beta y with beta != 0
                return Ok((true, Some((x, vec_add(&y, &z0)))));
            }
            // normalize z so that [x, z] = x + beta' y
            let z = vec_scale(&alpha.recip(), &z0);
            let beta = &beta / &alpha;
            let gamma = &gamma / &alpha;
            let delta = &delta / &alpha;
            if !gamma.is_zero() {
                let witness = vec_add(&vec_scale(&-gamma, &x), &y);
                return Ok((true, Some((witness, z))));
            }
            if !beta.is_zero() {
                let witness = vec_add(&x, &vec_scale(&-(&beta / &delta), &y));
                return Ok((true, Some((witness, z))));
            }
            if delta != Scalar::one() {
                return Ok((true, Some((vec_add(&x, &y), z))));
            }
            Ok((false, None))
        }
        CaseTag::E => {
            let pair = search_generating_pair(l).expect("perfect 3D algebras are two generated");
            Ok((true, Some(pair)))
        }
    }
}

fn proportionality(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let i = w.iter().position(|c| !c.is_zero())?;
    let lambda = &v[i] / &w[i];
    if v.iter()
        .zip(w.iter())
        .all(|(a, b)| *a == &lambda * b)
    {
        Some(lambda)
    } else {
        None
    }
}

fn search_generating_pair(l: &LieAlgebra) -> Option<(Vector, Vector)> {
    let candidates = small_vectors(l.dim(), 1);
    for (i, u) in candidates.iter().enumerate() {
        for v in candidates.iter().skip(i + 1) {
            if l.generated_subalgebra(&[u.clone(), v.clone()]).dim() == l.dim() {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

/// Nonzero vectors with coordinates in {-bound..bound}, one per line
/// (first nonzero coordinate positive), in lexicographic order.
fn small_vectors(dim: usize, bound: i64) -> Vec<Vector> {
    let mut out = Vec::new();
    let width = (2 * bound + 1) as usize;
    let total = width.pow(dim as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(rat((c % width) as i64 - bound));
            c /= width;
        }
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_positive() {
                out.push(v);
            }
        }
    }
    out
}

/// The unordered-pair invariant of K(a,b): {0} when one parameter is
/// zero, otherwise {u, 1/u} with u = a/b. The stored representative has
/// |u| >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PFClass {
    Zero,
    Pair(Scalar),
}

impl std::fmt::Display for PFClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PFClass::Zero => write!(f, "{{0}}"),
            PFClass::Pair(u) => write!(
                f,
                "{{{}, {}}}",
                format_scalar(u),
                format_scalar(&u.clone().recip())
            ),
        }
    }
}

impl PFClass {
    fn pair(u: Scalar) -> PFClass {
        let inv = u.clone().recip();
        if num_abs(&u) >= num_abs(&inv) {
            PFClass::Pair(u)
        } else {
            PFClass::Pair(inv)
        }
    }
}

fn num_abs(x: &Scalar) -> Scalar {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Invariant of K(a,b) under isomorphism. Errors on (0,0) (abelian), and
/// flags a = b (the algebra g, which has no plus-minus pair and is not a
/// member of the parametrized family).
pub fn k_invariant(a: &Scalar, b: &Scalar) -> Result<PFClass> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BadParameter("K(0,0) is abelian".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(PFClass::Zero);
    }
    let u = a / b;
    if u.is_one() {
        return Err(Error::IsGSpecial);
    }
    Ok(PFClass::pair(u))
}

/// Outcome of reading the K-class off an arbitrary algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KClassOutcome {
    Class(PFClass),
    GSpecial,
    NotInFamily,
}

/// Recompute the K(a,b) class from the structure of the algebra itself:
/// case (c) is K(0,1); case (d) with rationally diagonalizable action
/// gives the eigenvalue ratio.
pub fn pf_class_of(l: &LieAlgebra) -> Result<KClassOutcome> {
    require_dim3(l)?;
    let case = classify_jacobson(l)?;
    match case.tag {
        CaseTag::C => Ok(KClassOutcome::Class(PFClass::Zero)),
        CaseTag::D => {
            let m = case.ad_matrix.expect("recorded for case d");
            if is_scalar_matrix(&m) {
                return Ok(KClassOutcome::GSpecial);
            }
            // eigenvalues of the 2x2 action, if rational
            let tr = m.trace();
            let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
            let disc = &tr * &tr - rat(4) * &det;
            let Some(root) = rational_sqrt(&disc) else {
                return Ok(KClassOutcome::NotInFamily);
            };
            let half = ratio(1, 2);
            let l1 = (&tr + &root) * &half;
            let l2 = (&tr - &root) * &half;
            if l1.is_zero() && l2.is_zero() {
                return Ok(KClassOutcome::NotInFamily);
            }
            if l1.is_zero() || l2.is_zero() {
                return Ok(KClassOutcome::Class(PFClass::Zero));
            }
            if l1 == l2 {
                // equal eigenvalues on a non-scalar matrix: not
                // diagonalizable, outside the family
                return Ok(KClassOutcome::NotInFamily);
            }
            Ok(KClassOutcome::Class(PFClass::pair(&l1 / &l2)))
        }
        _ => Ok(KClassOutcome::NotInFamily),
    }
}

/// True 2x2 similarity over Q: equal characteristic polynomials and the
/// same scalarity. Char polys with a repeated root do not determine the
/// class; diag(c, c) and a non-scalar companion share (t - c)^2 without
/// being similar.
pub fn similar2(a: &QMatrix, b: &QMatrix) -> bool {
    assert!(a.rows == 2 && a.cols == 2 && b.rows == 2 && b.cols == 2);
    let (ta, da) = trace_det2(a);
    let (tb, db) = trace_det2(b);
    ta == tb && da == db && is_scalar_matrix(a) == is_scalar_matrix(b)
}

fn trace_det2(m: &QMatrix) -> (Scalar, Scalar) {
    (
        &m[(0, 0)] + &m[(1, 1)],
        &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)],
    )
}

/// Is A similar to s B for some nonzero rational s? The candidates are
/// pinned by trace matching (or determinant matching when both traces
/// vanish); returns the scalar witness on success.
pub fn similar2_up_to_scalar(a: &QMatrix, b: &QMatrix) -> (bool, Option<Scalar>) {
    let scaled = |s: &Scalar| -> QMatrix {
        let mut m = QMatrix::zero(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = s * &b[(i, j)];
            }
        }
        m
    };
    let (ta, da) = trace_det2(a);
    let (tb, db) = trace_det2(b);
    if !tb.is_zero() {
        let s = &ta / &tb;
        if s.is_zero() {
            return (false, None);
        }
        if similar2(a, &scaled(&s)) {
            return (true, Some(s));
        }
        return (false, None);
    }
    if !ta.is_zero() {
        return (false, None);
    }
    if !db.is_zero() {
        let Some(root) = rational_sqrt(&(&da / &db)) else {
            return (false, None);
        };
        if root.is_zero() {
            return (false, None);
        }
        for s in [root.clone(), -root] {
            if similar2(a, &scaled(&s)) {
                return (true, Some(s));
            }
        }
        return (false, None);
    }
    // both traceless with det B = 0: compare at s = 1
    if similar2(a, b) {
        (true, Some(Scalar::one()))
    } else {
        (false, None)
    }
}

/// Isomorphism on the A(r) family is equality on the projective line.
pub fn a_isomorphic(r: &RClass, s: &RClass) -> bool {
    r == s
}

/// Where K(u,1) lands in the A family: infinity at u = -1, otherwise
/// -u/(u+1)^2. The returned flag marks u = 1, where the similarity
/// backing the identification fails (K(1,1) has no plus-minus pair while
/// A(-1/4) has a regular one); the formula value is still reported.
pub fn k_to_a(u: &Scalar) -> Result<(RClass, bool)> {
    if u.is_zero() {
        return Err(Error::BadParameter(
            "K(0,1) is handled by the {0} class".into(),
        ));
    }
    if *u == rat(-1) {
        return Ok((RClass::Infinity, false));
    }
    let one_plus = u + Scalar::one();
    let r = -(u / (&one_plus * &one_plus));
    Ok((RClass::Finite(r), u.is_one()))
}

/// The regular-pair classification over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularClass {
    Sl2,
    Heisenberg,
    A(RClass),
    NotCertified,
}

impl std::fmt::Display for RegularClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegularClass::Sl2 => write!(f, "sl2"),
            RegularClass::Heisenberg => write!(f, "heisenberg"),
            RegularClass::A(r) => write!(f, "A({})", r),
            RegularClass::NotCertified => write!(f, "not_certified"),
        }
    }
}

/// Classify by rational invariants: a split sl2-triple when one exists,
/// the central line for the Heisenberg algebra, the trace/determinant
/// normal form of the complement action for the A family (A(0) is the
/// one-dimensional non-central case), and NOT_CERTIFIED otherwise. Over Q
/// only rationally witnessed classes are certified.
pub fn regular_class(l: &LieAlgebra) -> Result<RegularClass> {
    require_dim3(l)?;
    let derived = l.derived_subalgebra();
    match derived.dim() {
        0 => Ok(RegularClass::NotCertified),
        1 => {
            if derived.is_subspace_of(&l.center()) {
                Ok(RegularClass::Heisenberg)
            } else {
                Ok(RegularClass::A(RClass::Finite(Scalar::zero())))
            }
        }
        2 => {
            let case = classify_jacobson(l)?;
            let m = case.ad_matrix.expect("case d records the action");
            let basis = derived.basis();
            if !vec_is_zero(&l.bracket(&basis[0], &basis[1])?) {
                return Ok(RegularClass::NotCertified);
            }
            if is_scalar_matrix(&m) {
                return Ok(RegularClass::NotCertified);
            }
            let (tr, det) = trace_det2(&m);
            if tr.is_zero() {
                Ok(RegularClass::A(RClass::Infinity))
            } else {
                Ok(RegularClass::A(RClass::Finite(-(&det / (&tr * &tr)))))
            }
        }
        _ => {
            if find_sl2_triple(l)?.is_some() {
                Ok(RegularClass::Sl2)
            } else {
                Ok(RegularClass::NotCertified)
            }
        }
    }
}

/// Search for a rational split triple (E, H, F) with `[H,E]` = 2E,
/// `[H,F]` = -2F, `[E,F]` = H: candidates h with ad h having spectrum
/// {0, t, -t} for a rational t produce one by eigenvector extraction.
pub fn find_sl2_triple(l: &LieAlgebra) -> Result<Option<(Vector, Vector, Vector)>> {
    require_dim3(l)?;
    let mut candidates = small_vectors(3, 2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..500 {
        let v: Vector = (0..3).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if !vec_is_zero(&v) {
            candidates.push(v);
        }
    }
    for h0 in candidates {
        if let Some(triple) = try_h_candidate(l, &h0)? {
            return Ok(Some(triple));
        }
    }
    Ok(None)
}

fn try_h_candidate(l: &LieAlgebra, h0: &[Scalar]) -> Result<Option<(Vector, Vector, Vector)>> {
    let ad = l.ad(h0);
    // characteristic polynomial t^3 + c2 t^2 + c1 t + c0 must be t(t^2 - q)
    let cp = ad.char_poly();
    if !cp[0].is_zero() || !cp[2].is_zero() {
        return Ok(None);
    }
    let q = -cp[1].clone();
    if q.is_zero() {
        return Ok(None);
    }
    let Some(lambda) = rational_sqrt(&q) else {
        return Ok(None);
    };
    let eigvec = |mu: &Scalar| -> Option<Vector> {
        let mut m = ad.clone();
        for i in 0..3 {
            let v = &m[(i, i)] - mu;
            m[(i, i)] = v;
        }
        m.nullspace().into_iter().next()
    };
    let Some(e0) = eigvec(&lambda) else {
        return Ok(None);
    };
    let Some(f0) = eigvec(&-lambda.clone()) else {
        return Ok(None);
    };
    let w = l.bracket(&e0, &f0)?;
    if vec_is_zero(&w) {
        return Ok(None);
    }
    let Some(c) = proportionality(&w, h0) else {
        return Ok(None);
    };
    let h = vec_scale(&(rat(2) / &lambda), h0);
    let f = vec_scale(&(rat(2) / (&c * &lambda)), &f0);
    // verify the triple exactly
    let ok = l.bracket(&h, &e0)? == vec_scale(&rat(2), &e0)
        && l.bracket(&h, &f)? == vec_scale(&rat(-2), &f)
        && l.bracket(&e0, &f)? == h;
    Ok(if ok { Some((e0, h, f)) } else { None })
}

/// Classes of a three-graded three-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeGradedClass {
    Sl2,
    Heisenberg,
    K(Scalar, Scalar),
    NoPair(String),
}

/// Follow the three-graded case analysis: with L_1 = Fx, L_-1 = Fy,
/// L_0 = Fz, either `[x,y]` = 0 (the K family, degenerating to the abelian
/// algebra or to g) or `[x,y]` spans L_0 (Heisenberg or sl2). Also reports
/// whether (L_1, L_-1) itself certifies as a plus-minus pair at degree d.
pub fn three_graded_classify(
    l: &LieAlgebra,
    grading: &Grading,
    d: u32,
) -> Result<(ThreeGradedClass, crate::certificate::Certificate)> {
    require_dim3(l)?;
    if grading.rank() != 1 || grading.dim_algebra() != 3 {
        return Err(Error::WrongGradingShape(
            "need a rank-one grading of a three-dimensional algebra".into(),
        ));
    }
    if !grading.respects(l) {
        return Err(Error::WrongGradingShape(
            "grading does not respect the bracket".into(),
        ));
    }
    let piece = |deg: i64| grading.piece(&[deg]);
    let (p1, p0, pm1) = (piece(1), piece(0), piece(-1));
    if p1.dim() != 1 || p0.dim() != 1 || pm1.dim() != 1 {
        return Err(Error::WrongGradingShape(
            "need one-dimensional pieces in degrees -1, 0, 1".into(),
        ));
    }
    let x = p1.basis()[0].clone();
    let y = pm1.basis()[0].clone();
    let z0 = p0.basis()[0].clone();
    let pair_cert = crate::pmfactor::verify_pm_pair(l, &p1, &pm1, d)?;
    let xy = l.bracket(&x, &y)?;
    let class = if vec_is_zero(&xy) {
        // [x, z] = a x, [y, z] = b y
        let a = proportionality(&l.bracket(&x, &z0)?, &x).expect("graded action on Fx");
        let b = proportionality(&l.bracket(&y, &z0)?, &y).expect("graded action on Fy");
        if a.is_zero() && b.is_zero() {
            ThreeGradedClass::NoPair("abelian".into())
        } else if a == b {
            ThreeGradedClass::NoPair("equal scalars: the algebra g".into())
        } else {
            ThreeGradedClass::K(a, b)
        }
    } else {
        // rescale so that [x, y] = z
        let c = proportionality(&xy, &z0).expect("bracket lands in the zero piece");
        let z = vec_scale(&c, &z0);
        let a = proportionality(&l.bracket(&x, &z)?, &x).expect("graded action on Fx");
        let b = proportionality(&l.bracket(&y, &z)?, &y).expect("graded action on Fy");
        if a.is_zero() && b.is_zero() {
            ThreeGradedClass::Heisenberg
        } else {
            debug_assert!((&a + &b).is_zero(), "closure forces opposite scalars");
            ThreeGradedClass::Sl2
        }
    };
    Ok((class, pair_cert))
}

/// Aggregated classification report for external output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub jacobson_case: String,
    pub has_pair: bool,
    pub witness: Option<Vec<String>>,
    pub pf_class: Option<String>,
    pub r_class: Option<String>,
    pub regular_class: String,
    pub anomaly_flags: Vec<String>,
}

pub fn classify_report(l: &LieAlgebra) -> Result<ClassifyReport> {
    let case = classify_jacobson(l)?;
    let (has_pair, witness) = has_pm_pair(l)?;
    let pf = pf_class_of(l)?;
    let regular = regular_class(l)?;
    let mut anomaly_flags = Vec::new();
    let pf_class = match &pf {
        KClassOutcome::Class(c) => Some(c.to_string()),
        KClassOutcome::GSpecial => {
            anomaly_flags.push("u_equals_one".to_string());
            None
        }
        KClassOutcome::NotInFamily => None,
    };
    let r_class = match &regular {
        RegularClass::A(r) => Some(r.to_string()),
        _ => None,
    };
    Ok(ClassifyReport {
        jacobson_case: case.tag.to_string(),
        has_pair,
        witness: witness.map(|(u, v)| vec![l.format_vector(&u), l.format_vector(&v)]),
        pf_class,
        r_class,
        regular_class: regular.to_string(),
        anomaly_flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{
        a_family, abelian, g_special, heisenberg, jacobson_case, k_family, sl2, CaseTag, RClass,
    };

    #[test]
    fn jacobson_tags_of_the_named_algebras() {
        assert_eq!(classify_jacobson(&abelian(3)).unwrap().tag, CaseTag::A);
        assert_eq!(classify_jacobson(&heisenberg()).unwrap().tag, CaseTag::B);
        assert_eq!(
            classify_jacobson(&jacobson_case(CaseTag::C, &[]).unwrap())
                .unwrap()
                .tag,
            CaseTag::C
        );
        assert_eq!(classify_jacobson(&g_special()).unwrap().tag, CaseTag::D);
        assert_eq!(classify_jacobson(&sl2()).unwrap().tag, CaseTag::E);
        assert!(classify_jacobson(&abelian(4)).is_err());
    }

    #[test]
    fn g_has_no_pair_and_k21_does() {
        let g = g_special();
        assert_eq!(has_pm_pair(&g).unwrap(), (false, None));
        assert!(is_isomorphic_to_g(&g).unwrap());
        let k = k_family(rat(2), rat(1)).unwrap();
        let (has, w) = has_pm_pair(&k).unwrap();
        assert!(has);
        let (u, v) = w.unwrap();
        assert_eq!(k.generated_subalgebra(&[u, v]).dim(), 3);
        assert!(!is_isomorphic_to_g(&k).unwrap());
    }

    #[test]
    fn k11_is_g() {
        assert!(is_isomorphic_to_g(&k_family(rat(1), rat(1)).unwrap()).unwrap());
    }

    #[test]
    fn witnesses_generate_in_every_positive_case() {
        let algebras = vec![
            heisenberg(),
            jacobson_case(CaseTag::C, &[]).unwrap(),
            jacobson_case(CaseTag::D, &[rat(0), rat(1), rat(2), rat(0)]).unwrap(),
            jacobson_case(CaseTag::D, &[rat(1), rat(2), rat(3), rat(-1)]).unwrap(),
            jacobson_case(CaseTag::D, &[rat(1), rat(2), rat(0), rat(1)]).unwrap(),
            jacobson_case(CaseTag::D, &[rat(1), rat(0), rat(0), rat(2)]).unwrap(),
            jacobson_case(CaseTag::E, &[rat(1), rat(1)]).unwrap(),
            k_family(rat(2), rat(1)).unwrap(),
            a_family(&RClass::Infinity),
        ];
        for l in algebras {
            let (has, w) = has_pm_pair(&l).unwrap();
            assert!(has, "{} should have a pair", l.name());
            let (u, v) = w.unwrap();
            assert_eq!(
                l.generated_subalgebra(&[u, v]).dim(),
                3,
                "witness must generate {}",
                l.name()
            );
        }
    }

    #[test]
    fn k_invariant_partitions() {
        assert_eq!(k_invariant(&rat(0), &rat(5)).unwrap(), PFClass::Zero);
        assert_eq!(
            k_invariant(&rat(2), &rat(1)).unwrap(),
            k_invariant(&ratio(1, 2), &rat(1)).unwrap()
        );
        assert_eq!(
            k_invariant(&rat(4), &rat(2)).unwrap(),
            PFClass::Pair(rat(2))
        );
        assert!(k_invariant(&rat(0), &rat(0)).is_err());
        assert!(matches!(
            k_invariant(&rat(3), &rat(3)),
            Err(Error::IsGSpecial)
        ));
    }

    #[test]
    fn similar2_catches_the_scalar_anomaly() {
        // diag(-1,-1) vs [[0,1/2],[-2,-2]]: equal char polys (t+1)^2, one
        // scalar, one not
        let a = QMatrix::from_rows(vec![vec![rat(-1), rat(0)], vec![rat(0), rat(-1)]]);
        let b = QMatrix::from_rows(vec![vec![rat(0), ratio(1, 2)], vec![rat(-2), rat(-2)]]);
        assert!(!similar2(&a, &b));
        assert!(similar2(&a, &a));
        let (ok, _) = similar2_up_to_scalar(&a, &b);
        assert!(!ok);
    }

    #[test]
    fn similar2_up_to_scalar_matches_the_k_to_a_witness() {
        // diag(-2,-1) vs -3 [[0,-2/9],[1,1]] at u = 2
        let a = QMatrix::from_rows(vec![vec![rat(-2), rat(0)], vec![rat(0), rat(-1)]]);
        let b = QMatrix::from_rows(vec![vec![rat(0), ratio(-2, 9)], vec![rat(1), rat(1)]]);
        let (ok, s) = similar2_up_to_scalar(&a, &b);
        assert!(ok);
        assert_eq!(s, Some(rat(-3)));
    }

    #[test]
    fn k_to_a_values() {
        assert_eq!(k_to_a(&rat(-1)).unwrap(), (RClass::Infinity, false));
        assert_eq!(
            k_to_a(&rat(2)).unwrap(),
            (RClass::Finite(ratio(-2, 9)), false)
        );
        let (r, flag) = k_to_a(&rat(1)).unwrap();
        assert_eq!(r, RClass::Finite(ratio(-1, 4)));
        assert!(flag);
        assert!(k_to_a(&rat(0)).is_err());
    }

    #[test]
    fn regular_class_recovers_constructor_parameters() {
        for r in [rat(0), rat(1), rat(-1), rat(2), ratio(-1, 4)] {
            let l = a_family(&RClass::Finite(r.clone()));
            assert_eq!(
                regular_class(&l).unwrap(),
                RegularClass::A(RClass::Finite(r))
            );
        }
        assert_eq!(
            regular_class(&a_family(&RClass::Infinity)).unwrap(),
            RegularClass::A(RClass::Infinity)
        );
        assert_eq!(regular_class(&heisenberg()).unwrap(), RegularClass::Heisenberg);
        assert_eq!(regular_class(&g_special()).unwrap(), RegularClass::NotCertified);
        assert_eq!(regular_class(&sl2()).unwrap(), RegularClass::Sl2);
    }

    #[test]
    fn a_isomorphic_is_equality_on_the_projective_line() {
        assert!(a_isomorphic(&RClass::Finite(rat(0)), &RClass::Finite(rat(0))));
        assert!(!a_isomorphic(&RClass::Finite(rat(1)), &RClass::Finite(rat(2))));
        assert!(!a_isomorphic(&RClass::Finite(rat(3)), &RClass::Infinity));
        assert!(a_isomorphic(&RClass::Infinity, &RClass::Infinity));
    }

    #[test]
    fn three_graded_classification() {
        use crate::algebras::{heisenberg_graded, k_family_graded, sl2_graded};
        let (l, g) = heisenberg_graded();
        let (class, cert) = three_graded_classify(&l, &g, 3).unwrap();
        assert_eq!(class, ThreeGradedClass::Heisenberg);
        assert!(cert.passed());
        let (l, g) = sl2_graded();
        let (class, cert) = three_graded_classify(&l, &g, 3).unwrap();
        assert_eq!(class, ThreeGradedClass::Sl2);
        assert!(cert.passed());
        let (l, g) = k_family_graded(rat(1), rat(1)).unwrap();
        let (class, cert) = three_graded_classify(&l, &g, 3).unwrap();
        assert!(matches!(class, ThreeGradedClass::NoPair(_)));
        assert!(!cert.passed());
        let (l, g) = k_family_graded(rat(2), rat(1)).unwrap();
        let (class, _) = three_graded_classify(&l, &g, 3).unwrap();
        assert_eq!(class, ThreeGradedClass::K(rat(2), rat(1)));
    }
}
