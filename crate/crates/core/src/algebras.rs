//! Constructors for every named algebra used by the checkers: sl2, the
//! Heisenberg algebra, the two-parameter family K(a,b) and its degenerate
//! member g (= K(1,1)), the matrix family A(r) over the projective line,
//! the five Jacobson normal forms, sl3 in a Chevalley basis, and the rank
//! one Borcherds algebra with a null Cartan entry.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::lie::{LieAlgebra, Vector};
use crate::scalar::{rat, Scalar};
use crate::subspace::Subspace;

/// A point of the projective line over Q: a rational number or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RClass {
    Finite(Scalar),
    Infinity,
}

impl std::fmt::Display for RClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RClass::Finite(r) => write!(f, "{}", crate::scalar::format_scalar(r)),
            RClass::Infinity => write!(f, "inf"),
        }
    }
}

/// Tags for the five cases of the three-dimensional classification,
/// split by the derived algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    E,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
            CaseTag::D => "d",
            CaseTag::E => "e",
        };
        write!(f, "{}", s)
    }
}

fn e3(i: usize, c: Scalar) -> Vector {
    let mut v = vec![Scalar::zero(); 3];
    v[i] = c;
    v
}

/// sl2 with basis e, h, f: `[e,f]` = h, `[h,e]` = 2e, `[h,f]` = -2f.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        "sl2",
        &["e", "h", "f"],
        &[
            (0, 1, e3(0, rat(-2))),
            (0, 2, e3(1, Scalar::one())),
            (1, 2, e3(2, rat(-2))),
        ],
    )
}

pub fn sl2_graded() -> (LieAlgebra, Grading) {
    (sl2(), Grading::new(1, vec![vec![1], vec![0], vec![-1]]))
}

/// The three-dimensional Heisenberg algebra: `[x,y]` = z, z central.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::new("heisenberg", &["x", "y", "z"], &[(0, 1, e3(2, Scalar::one()))])
}

pub fn heisenberg_graded() -> (LieAlgebra, Grading) {
    (heisenberg(), Grading::new(1, vec![vec![1], vec![-1], vec![0]]))
}

/// The algebra g with `[x,y]` = 0, `[x,z]` = x, `[y,z]` = y; it is not two
/// generated and has no plus-minus pair.
pub fn g_special() -> LieAlgebra {
    LieAlgebra::new(
        "g_special",
        &["x", "y", "z"],
        &[
            (0, 2, e3(0, Scalar::one())),
            (1, 2, e3(1, Scalar::one())),
        ],
    )
}

pub fn g_special_graded() -> (LieAlgebra, Grading) {
    (g_special(), Grading::new(1, vec![vec![1], vec![-1], vec![0]]))
}

/// Abelian algebra of the given dimension.
pub fn abelian(dim: usize) -> LieAlgebra {
    let names: Vec<String> = (0..dim).map(|i| format!("x{}", i + 1)).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    LieAlgebra::new("abelian", &refs, &[])
}

pub fn abelian3_graded() -> (LieAlgebra, Grading) {
    let l = LieAlgebra::new("abelian3", &["x", "y", "z"], &[]);
    (l, Grading::new(1, vec![vec![1], vec![-1], vec![0]]))
}

/// K(a,b): `[x,y]` = 0, `[x,z]` = a x, `[y,z]` = b y. Rejects (0,0), which is
/// abelian and outside the family.
pub fn k_family(a: Scalar, b: Scalar) -> Result<LieAlgebra> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BadParameter("K(0,0) is abelian".into()));
    }
    Ok(LieAlgebra::new(
        "k_family",
        &["x", "y", "z"],
        &[(0, 2, e3(0, a)), (1, 2, e3(1, b))],
    ))
}

pub fn k_family_graded(a: Scalar, b: Scalar) -> Result<(LieAlgebra, Grading)> {
    Ok((
        k_family(a, b)?,
        Grading::new(1, vec![vec![1], vec![-1], vec![0]]),
    ))
}

/// A(r) for r in P^1(Q), spanned by the matrices A(r), X, Y; written on
/// the basis a, x, y the brackets are `[a,x]` = y, `[a,y]` = r x + y (finite r)
/// or `[a,y]` = x (r = infinity), with `[x,y]` = 0.
pub fn a_family(r: &RClass) -> LieAlgebra {
    let ay = match r {
        RClass::Finite(r) => vec![Scalar::zero(), r.clone(), Scalar::one()],
        RClass::Infinity => vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
    };
    LieAlgebra::new(
        "a_family",
        &["a", "x", "y"],
        &[(0, 1, e3(2, Scalar::one())), (0, 2, ay)],
    )
}

/// The five Jacobson normal forms. Parameters: cases a, b, c take none;
/// case d takes [alpha, beta, gamma, delta] with alpha*delta != beta*gamma;
/// case e takes `[alpha, beta]` with alpha*beta != 0.
pub fn jacobson_case(tag: CaseTag, params: &[Scalar]) -> Result<LieAlgebra> {
    match tag {
        CaseTag::A => {
            expect_params(params, 0)?;
            Ok(LieAlgebra::new("jacobson_a", &["x", "y", "z"], &[]))
        }
        CaseTag::B => {
            expect_params(params, 0)?;
            Ok(LieAlgebra::new(
                "jacobson_b",
                &["x", "y", "z"],
                &[(0, 1, e3(2, Scalar::one()))],
            ))
        }
        CaseTag::C => {
            expect_params(params, 0)?;
            Ok(LieAlgebra::new(
                "jacobson_c",
                &["x", "y", "z"],
                &[(0, 1, e3(0, Scalar::one()))],
            ))
        }
        CaseTag::D => {
            expect_params(params, 4)?;
            let (al, be, ga, de) = (&params[0], &params[1], &params[2], &params[3]);
            if (al * de - be * ga).is_zero() {
                return Err(Error::BadParameter(
                    "case d needs alpha*delta - beta*gamma != 0".into(),
                ));
            }
            Ok(LieAlgebra::new(
                "jacobson_d",
                &["x", "y", "z"],
                &[
                    (0, 2, vec![al.clone(), be.clone(), Scalar::zero()]),
                    (1, 2, vec![ga.clone(), de.clone(), Scalar::zero()]),
                ],
            ))
        }
        CaseTag::E => {
            expect_params(params, 2)?;
            let (al, be) = (&params[0], &params[1]);
            if al.is_zero() || be.is_zero() {
                return Err(Error::BadParameter("case e needs alpha*beta != 0".into()));
            }
            Ok(LieAlgebra::new(
                "jacobson_e",
                &["x", "y", "z"],
                &[
                    (0, 1, e3(2, Scalar::one())),
                    (0, 2, e3(1, al.clone())),
                    (1, 2, e3(0, be.clone())),
                ],
            ))
        }
    }
}

fn expect_params(params: &[Scalar], n: usize) -> Result<()> {
    if params.len() != n {
        Err(Error::BadParameter(format!(
            "expected {} parameters, got {}",
            n,
            params.len()
        )))
    } else {
        Ok(())
    }
}

/// sl3 in a Chevalley basis e1, e2, e12, h1, h2, f1, f2, f12.
pub fn sl3_chevalley() -> LieAlgebra {
    let dim = 8;
    let unit = |i: usize, c: i64| -> Vector {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = rat(c);
        v
    };
    let (e1, e2, e12, h1, h2, f1, f2, f12) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut h12 = vec![Scalar::zero(); dim];
    h12[h1] = Scalar::one();
    h12[h2] = Scalar::one();
    LieAlgebra::new(
        "sl3",
        &["e1", "e2", "e12", "h1", "h2", "f1", "f2", "f12"],
        &[
            (e1, e2, unit(e12, 1)),
            (e1, h1, unit(e1, -2)),
            (e1, h2, unit(e1, 1)),
            (e1, f1, unit(h1, 1)),
            (e1, f12, unit(f2, -1)),
            (e2, h1, unit(e2, 1)),
            (e2, h2, unit(e2, -2)),
            (e2, f2, unit(h2, 1)),
            (e2, f12, unit(f1, 1)),
            (e12, h1, unit(e12, -1)),
            (e12, h2, unit(e12, -1)),
            (e12, f1, unit(e2, -1)),
            (e12, f2, unit(e1, 1)),
            (e12, f12, h12),
            (h1, f1, unit(f1, -2)),
            (h1, f2, unit(f2, 1)),
            (h1, f12, unit(f12, -1)),
            (h2, f1, unit(f1, 1)),
            (h2, f2, unit(f2, -2)),
            (h2, f12, unit(f12, -1)),
            (f1, f2, unit(f12, -1)),
        ],
    )
}

/// sl3 with its root grading over Q = Z alpha1 + Z alpha2.
pub fn sl3_chevalley_graded() -> (LieAlgebra, Grading) {
    let degrees = vec![
        vec![1, 0],   // e1
        vec![0, 1],   // e2
        vec![1, 1],   // e12
        vec![0, 0],   // h1
        vec![0, 0],   // h2
        vec![-1, 0],  // f1
        vec![0, -1],  // f2
        vec![-1, -1], // f12
    ];
    (sl3_chevalley(), Grading::new(2, degrees))
}

/// The rank one Borcherds algebra whose single Cartan entry is zero:
/// h = `[e,f]` is central, so the algebra is a Heisenberg algebra on the
/// generators e, f.
pub fn borcherds_rank1_zero() -> LieAlgebra {
    LieAlgebra::new(
        "borcherds_rank1_zero",
        &["e", "f", "h"],
        &[(0, 1, e3(2, Scalar::one()))],
    )
}

pub fn borcherds_rank1_zero_graded() -> (LieAlgebra, Grading) {
    (
        borcherds_rank1_zero(),
        Grading::new(1, vec![vec![1], vec![-1], vec![0]]),
    )
}

/// Triangular data for the Borcherds-style factorization scheme: the
/// Chevalley generator lines, the Cartan subalgebra, and the positive and
/// negative subalgebras.
#[derive(Clone, Debug)]
pub struct TriangularData {
    pub e: Vec<Vector>,
    pub f: Vec<Vector>,
    pub cartan: Subspace,
    pub gplus: Subspace,
    pub gminus: Subspace,
}

pub fn sl2_triangular() -> (LieAlgebra, TriangularData) {
    let l = sl2();
    let e = l.basis_vector(0);
    let h = l.basis_vector(1);
    let f = l.basis_vector(2);
    let data = TriangularData {
        e: vec![e.clone()],
        f: vec![f.clone()],
        cartan: Subspace::from_vectors(3, vec![h]),
        gplus: Subspace::from_vectors(3, vec![e]),
        gminus: Subspace::from_vectors(3, vec![f]),
    };
    (l, data)
}

pub fn sl3_triangular() -> (LieAlgebra, TriangularData) {
    let l = sl3_chevalley();
    let v = |i: usize| l.basis_vector(i);
    let data = TriangularData {
        e: vec![v(0), v(1)],
        f: vec![v(5), v(6)],
        cartan: Subspace::from_vectors(8, vec![v(3), v(4)]),
        gplus: Subspace::from_vectors(8, vec![v(0), v(1), v(2)]),
        gminus: Subspace::from_vectors(8, vec![v(5), v(6), v(7)]),
    };
    (l, data)
}

pub fn borcherds_rank1_zero_triangular() -> (LieAlgebra, TriangularData) {
    let l = borcherds_rank1_zero();
    let e = l.basis_vector(0);
    let f = l.basis_vector(1);
    let h = l.basis_vector(2);
    let data = TriangularData {
        e: vec![e.clone()],
        f: vec![f.clone()],
        cartan: Subspace::from_vectors(3, vec![h]),
        gplus: Subspace::from_vectors(3, vec![e]),
        gminus: Subspace::from_vectors(3, vec![f]),
    };
    (l, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn every_constructor_passes_axioms() {
        let mut algebras = vec![
            sl2(),
            heisenberg(),
            g_special(),
            abelian(3),
            k_family(rat(2), rat(1)).unwrap(),
            k_family(rat(0), rat(5)).unwrap(),
            a_family(&RClass::Finite(rat(0))),
            a_family(&RClass::Finite(rat(2))),
            a_family(&RClass::Finite(ratio(-1, 4))),
            a_family(&RClass::Infinity),
            sl3_chevalley(),
            borcherds_rank1_zero(),
        ];
        for tag in [CaseTag::A, CaseTag::B, CaseTag::C] {
            algebras.push(jacobson_case(tag, &[]).unwrap());
        }
        algebras.push(jacobson_case(CaseTag::D, &[rat(1), rat(2), rat(0), rat(3)]).unwrap());
        algebras.push(jacobson_case(CaseTag::E, &[rat(1), rat(1)]).unwrap());
        for l in algebras {
            let cert = l.check_axioms();
            assert!(cert.passed(), "{} fails axioms: {:?}", l.name(), cert);
        }
    }

    #[test]
    fn malformed_parameters_are_rejected() {
        assert!(k_family(rat(0), rat(0)).is_err());
        assert!(jacobson_case(CaseTag::D, &[rat(1), rat(0), rat(0), rat(0)]).is_err());
        assert!(jacobson_case(CaseTag::E, &[rat(0), rat(1)]).is_err());
        assert!(jacobson_case(CaseTag::B, &[rat(1)]).is_err());
    }

    #[test]
    fn k11_matches_g_special_table() {
        let k = k_family(rat(1), rat(1)).unwrap();
        let g = g_special();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k.table_entry(i, j), g.table_entry(i, j));
            }
        }
    }

    #[test]
    fn a_family_brackets_match_the_matrix_realization() {
        // [a,x] = y, [a,y] = r x + y for finite r; [a,y] = x at infinity.
        let l = a_family(&RClass::Finite(rat(5)));
        let a = l.basis_vector(0);
        let x = l.basis_vector(1);
        let y = l.basis_vector(2);
        assert_eq!(l.bracket(&a, &x).unwrap(), y);
        assert_eq!(
            l.bracket(&a, &y).unwrap(),
            vec![rat(0), rat(5), rat(1)]
        );
        let li = a_family(&RClass::Infinity);
        assert_eq!(li.bracket(&a, &y).unwrap(), x);
        assert!(crate::lie::vec_is_zero(&li.bracket(&x, &y).unwrap()));
    }

    #[test]
    fn derived_dimensions_distinguish_the_families() {
        assert_eq!(sl2().derived_subalgebra().dim(), 3);
        assert_eq!(heisenberg().derived_subalgebra().dim(), 1);
        assert_eq!(
            a_family(&RClass::Finite(rat(2))).derived_subalgebra().dim(),
            2
        );
        assert_eq!(a_family(&RClass::Infinity).derived_subalgebra().dim(), 2);
        // the degenerate member: A(0) has a one-dimensional derived algebra
        assert_eq!(
            a_family(&RClass::Finite(rat(0))).derived_subalgebra().dim(),
            1
        );
    }

    #[test]
    fn sl3_is_perfect_and_graded() {
        let (l, g) = sl3_chevalley_graded();
        assert_eq!(l.derived_subalgebra().dim(), 8);
        assert!(g.respects(&l));
        assert_eq!(l.center().dim(), 0);
    }

    #[test]
    fn borcherds_rank1_zero_is_a_heisenberg_algebra() {
        let l = borcherds_rank1_zero();
        assert_eq!(l.derived_subalgebra().dim(), 1);
        assert_eq!(l.center(), l.derived_subalgebra());
    }
}
