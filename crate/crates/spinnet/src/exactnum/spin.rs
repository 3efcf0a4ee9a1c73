use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An angular momentum `j`, stored as the integer `2j`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const ZERO: Spin = Spin { twice: 0 };

    pub const fn from_twice(twice: u32) -> Spin {
        Spin { twice }
    }

    pub const fn integer(j: u32) -> Spin {
        Spin { twice: 2 * j }
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    /// The multiplicity `2j + 1`.
    pub const fn dim(self) -> u32 {
        self.twice + 1
    }

    pub const fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn as_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Allowed projections `m` (twice-valued), from `-j` to `j`.
    pub fn projections(self) -> impl Iterator<Item = i32> {
        let t = self.twice as i32;
        (0..=self.twice).map(move |k| -t + 2 * k as i32)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinParseError {
    #[error("`{0}` is not a spin (expected an integer or a half-integer like 3/2)")]
    Malformed(String),
    #[error("`{0}` is negative")]
    Negative(String),
    #[error("`{0}` is not a multiple of 1/2")]
    NotHalfInteger(String),
}

fn parse_twice(s: &str) -> Result<i64, SpinParseError> {
    let t = s.trim();
    let bad = || SpinParseError::Malformed(s.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        match den {
            1 => Ok(2 * num),
            2 => Ok(num),
            0 => Err(bad()),
            _ => {
                if (2 * num) % den == 0 {
                    Ok(2 * num / den)
                } else {
                    Err(SpinParseError::NotHalfInteger(s.to_string()))
                }
            }
        }
    } else if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let whole: i64 = int.parse().map_err(|_| bad())?;
        let tw = match frac.trim_end_matches('0') {
            "" => 2 * whole,
            "5" => 2 * whole + if neg { -1 } else { 1 },
            _ => return Err(SpinParseError::NotHalfInteger(s.to_string())),
        };
        Ok(tw)
    } else {
        let v: i64 = t.parse().map_err(|_| bad())?;
        Ok(2 * v)
    }
}

impl FromStr for Spin {
    type Err = SpinParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tw = parse_twice(s)?;
        if tw < 0 {
            return Err(SpinParseError::Negative(s.to_string()));
        }
        u32::try_from(tw).map(Spin::from_twice).map_err(|_| SpinParseError::Malformed(s.to_string()))
    }
}

/// Parses a signed projection such as `-3/2` into its twice-value.
pub fn parse_projection(s: &str) -> Result<i32, SpinParseError> {
    let tw = parse_twice(s)?;
    i32::try_from(tw).map_err(|_| SpinParseError::Malformed(s.to_string()))
}

/// A coupling triad `(a, b, c)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triad {
    pub a: Spin,
    pub b: Spin,
    pub c: Spin,
}

impl Triad {
    pub fn new(a: Spin, b: Spin, c: Spin) -> Triad {
        Triad { a, b, c }
    }

    pub fn is_admissible(&self) -> bool {
        triad_admissible(self.a, self.b, self.c)
    }

    pub fn spins(&self) -> [Spin; 3] {
        [self.a, self.b, self.c]
    }
}

/// Triangle inequality plus integer perimeter.
pub fn triad_admissible(a: Spin, b: Spin, c: Spin) -> bool {
    admissible_twice(a.twice, b.twice, c.twice)
}

#[inline]
pub(crate) fn admissible_twice(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && c <= a + b && a <= b + c && b <= a + c
}

/// `(-1)^(t/2)` for an even twice-exponent `t`.
#[inline]
pub(crate) fn phase_twice(t: i64) -> i64 {
    debug_assert!(t % 2 == 0, "half-integer phase exponent {t}");
    if (t / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<Spin>().unwrap().twice(), 3);
        assert_eq!("2".parse::<Spin>().unwrap().twice(), 4);
        assert_eq!("4/2".parse::<Spin>().unwrap().twice(), 4);
        assert_eq!("2.5".parse::<Spin>().unwrap().twice(), 5);
        assert!(matches!("3/4".parse::<Spin>(), Err(SpinParseError::NotHalfInteger(_))));
        assert!(matches!("-1".parse::<Spin>(), Err(SpinParseError::Negative(_))));
        assert!("x".parse::<Spin>().is_err());
        assert_eq!(parse_projection("-3/2").unwrap(), -3);
        assert_eq!(parse_projection("-1").unwrap(), -2);
        assert_eq!(parse_projection("-0.5").unwrap(), -1);
    }

    #[test]
    fn display_round_trip() {
        for t in 0..20 {
            let s = Spin::from_twice(t);
            assert_eq!(s.to_string().parse::<Spin>().unwrap(), s);
        }
    }

    #[test]
    fn triads() {
        let h = Spin::from_twice(1);
        assert!(triad_admissible(h, h, Spin::integer(1)));
        assert!(!triad_admissible(h, h, Spin::integer(3)));
        assert!(!triad_admissible(h, Spin::integer(1), Spin::integer(1)));
    }

    #[test]
    fn projections_listed() {
        let m: Vec<i32> = Spin::from_twice(3).projections().collect();
        assert_eq!(m, vec![-3, -1, 1, 3]);
    }
}
