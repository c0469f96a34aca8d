//! Exact rational scalars. Everything in this crate is computed over Q;
//! there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The base field: arbitrary-precision rationals, always in lowest terms
/// with positive denominator (guaranteed by `BigRational`).
pub type Scalar = BigRational;

/// Integer scalar.
pub fn rat(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a scalar. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// If `x` is the square of a rational, return that square root (the
/// nonnegative one). Works on the numerator and denominator separately.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Render a scalar the way the algebra file format expects: `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&ratio(4, 9)), Some(ratio(2, 3)));
        assert_eq!(rational_sqrt(&rat(16)), Some(rat(4)));
        assert_eq!(rational_sqrt(&rat(0)), Some(rat(0)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
        assert_eq!(rational_sqrt(&ratio(2, 4)), None);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_scalar(&rat(-3)), "-3");
        assert_eq!(format_scalar(&ratio(-1, 3)), "-1/3");
        assert_eq!(format_scalar(&ratio(2, 4)), "1/2");
    }
}
