use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Coefficient field for cohomology: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Rank of an integer matrix over this field.
    pub fn rank(&self, m: &IntMatrix) -> usize {
        match self {
            Field::Rationals => m.rank(),
            Field::Prime(p) => m.rank_mod(*p),
        }
    }

    /// Parses "q", "Q", "fp:5", "f5", "5".
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" || t == "0" {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("fp"))
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(&t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unrecognized field `{s}`")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_checked() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err()); // 7 * 13
    }

    #[test]
    fn parsing_field_flags() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rationals);
        assert_eq!(Field::parse("fp:2").unwrap(), Field::Prime(2));
        assert_eq!(Field::parse("F3").unwrap(), Field::Prime(3));
        assert!(Field::parse("fp:6").is_err());
    }
}
