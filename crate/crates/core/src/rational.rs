//! Exact rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {0:?} (expected \"p/q\" or an integer)")]
pub struct ParseRationalError(pub String);

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Always `p/q`, including integers (`-1/1`, `0/1`).
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `p/q`, or just `p` when the denominator is one.
pub fn to_display_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        to_fraction_string(x)
    }
}

pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = rat(6, -8);
        assert_eq!(to_fraction_string(&x), "-3/4");
        assert_eq!(to_fraction_string(&int(0)), "0/1");
        assert_eq!(to_display_string(&int(-1)), "-1");
        assert_eq!(to_display_string(&rat(19, -21)), "-19/21");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-19/21").unwrap(), rat(-19, 21));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("").is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let x = rat(p, q);
            prop_assert_eq!(parse_rational(&to_fraction_string(&x)).unwrap(), x.clone());
            prop_assert_eq!(parse_rational(&to_display_string(&x)).unwrap(), x);
        }
    }
}
