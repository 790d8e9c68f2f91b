//! Rational number string handling shared by the library and the CLI.
//!
//! The wire form is `"p/q"` with q > 0 and gcd(p, q) = 1; a bare integer
//! `"p"` is accepted on input and means p/1. Fractions that arrive
//! unreduced or with a negative denominator are canonicalized rather than
//! rejected; the caller is told so it can warn.

use num::{BigInt, BigRational};
use std::str::FromStr;

pub struct ParsedRatio {
    pub value: BigRational,
    /// True when the input was a fraction not already in canonical form.
    pub canonicalized: bool,
}

pub fn parse_ratio(s: &str) -> Result<ParsedRatio, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let numer = BigInt::from_str(p.trim()).map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let denom = BigInt::from_str(q.trim()).map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if denom == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        let value = BigRational::new(numer, denom);
        let canonicalized = format_ratio(&value) != s;
        Ok(ParsedRatio { value, canonicalized })
    } else {
        let numer = BigInt::from_str(s).map_err(|e| format!("bad integer {s:?}: {e}"))?;
        Ok(ParsedRatio { value: BigRational::from_integer(numer), canonicalized: false })
    }
}

/// Canonical form, denominator always explicit: `0 -> "0/1"`, `-3/2 -> "-3/2"`.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
