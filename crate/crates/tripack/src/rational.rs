//! Exact rational arithmetic used by every LP and threshold comparison.
//!
//! All optimization in this crate is carried out over arbitrary-precision
//! rationals; no floating-point value ever decides a prune or a certificate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational p/q. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

/// Formats as `p/q`, with the denominator always spelled out (`6/1`, `-3/4`).
///
/// This is the on-disk form for certificates and level sidecars; it never
/// emits decimals. `Display` on [`Rational`] would drop a unit denominator.
pub fn fmt_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

/// Human-friendly rendering: the reduced rational plus a decimal approximation,
/// e.g. `150/600 -> "1/4 (0.2500)"`. Log output only; never parsed back.
pub fn fmt_approx(r: &Rational) -> String {
    let num = r.numer();
    let den = r.denom();
    // Good enough for log lines; rationals here are far below f64 range
    // except for deep averaging denominators, where the approximation
    // saturating to inf/0 is acceptable.
    let approx = to_f64(r);
    if den.is_one() {
        format!("{num} ({approx:.4})")
    } else {
        format!("{num}/{den} ({approx:.4})")
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    let num = &r.numer().to_string();
    let den = &r.denom().to_string();
    let num: f64 = num.parse().unwrap_or(if r.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let den: f64 = den.parse().unwrap_or(f64::INFINITY);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_format_roundtrip() {
        for r in [rat(0), rat(6), ratio(-3, 4), ratio(150, 600), ratio(7, 2)] {
            let s = fmt_exact(&r);
            assert!(s.contains('/'));
            assert_eq!(parse_exact(&s).unwrap(), r);
        }
        assert_eq!(parse_exact("150").unwrap(), rat(150));
        assert_eq!(parse_exact(" 1/4 ").unwrap(), ratio(1, 4));
        assert!(parse_exact("1/0").is_none());
        assert!(parse_exact("x").is_none());
    }

    #[test]
    fn reduction_is_automatic() {
        assert_eq!(ratio(150, 600), ratio(1, 4));
        assert_eq!(fmt_exact(&ratio(150, 600)), "1/4");
    }

    #[test]
    fn approx_rendering() {
        assert_eq!(fmt_approx(&ratio(1, 4)), "1/4 (0.2500)");
        assert_eq!(fmt_approx(&rat(6)), "6 (6.0000)");
    }
}
