//! The complemented closed disk domain: closed disks and the closures of
//! their complements, with exact rational geometry.

mod classify;
mod generate;
mod geometry;
mod scene;
mod witness;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use classify::{
    classify, classify_by_clauses, classify_by_matrix, classify_checked, lookup, relation_matrix,
    Disagreement,
};
pub use generate::{generate_pair, observe_cell, CellObservation, PairGenerator};
pub use geometry::{nine_matrix, Config, NineMatrix, Part};
pub use scene::{classify_scene, Scene, SceneRegion};
pub use witness::{
    find_witness, interpolate, search_witness, InterpolateMode, Witness, WitnessError,
    WitnessOptions, WitnessRoute,
};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiskError {
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),
    #[error("unknown region kind `{0}`")]
    UnknownKind(String),
}

/// Parses `p/q`, an integer, or a finite decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational, DiskError> {
    let t = s.trim();
    let bad = || DiskError::BadRational(s.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int = if int.is_empty() || int == "-" {
            "0"
        } else {
            int
        };
        let whole: BigInt = int.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = whole.abs() * &scale + f;
        let num = if neg { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    t.parse::<BigInt>()
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

/// Formats as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact square root, if the argument is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    /// A closed disk.
    Disk,
    /// Closure of the complement of an open disk.
    Codisk,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Disk => Polarity::Codisk,
            Polarity::Codisk => Polarity::Disk,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Polarity::Disk => "disk",
            Polarity::Codisk => "codisk",
        }
    }
}

impl FromStr for Polarity {
    type Err = DiskError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disk" => Ok(Polarity::Disk),
            "codisk" => Ok(Polarity::Codisk),
            other => Err(DiskError::UnknownKind(other.to_string())),
        }
    }
}

/// A region of the domain. Two regions are equal as point sets exactly when
/// all four fields agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiskRegion {
    pub polarity: Polarity,
    pub cx: Rational,
    pub cy: Rational,
    pub r: Rational,
}

impl DiskRegion {
    pub fn new(
        polarity: Polarity,
        cx: Rational,
        cy: Rational,
        r: Rational,
    ) -> Result<DiskRegion, DiskError> {
        if !r.is_positive() {
            return Err(DiskError::NonPositiveRadius(format_rational(&r)));
        }
        Ok(DiskRegion {
            polarity,
            cx,
            cy,
            r,
        })
    }

    /// Closed disk with integer parameters. Panics on a non-positive radius.
    pub fn disk(cx: i64, cy: i64, r: i64) -> DiskRegion {
        DiskRegion::new(Polarity::Disk, rat(cx), rat(cy), rat(r)).expect("positive radius")
    }

    /// Complement disk with integer parameters. Panics on a non-positive radius.
    pub fn codisk(cx: i64, cy: i64, r: i64) -> DiskRegion {
        DiskRegion::new(Polarity::Codisk, rat(cx), rat(cy), rat(r)).expect("positive radius")
    }

    pub fn complement(&self) -> DiskRegion {
        DiskRegion {
            polarity: self.polarity.flip(),
            ..self.clone()
        }
    }

    pub fn is_disk(&self) -> bool {
        self.polarity == Polarity::Disk
    }

    /// Squared distance between the two centers.
    pub fn center_dist2(&self, other: &DiskRegion) -> Rational {
        let dx = &self.cx - &other.cx;
        let dy = &self.cy - &other.cy;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Debug for DiskRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {}, {})",
            self.polarity.name(),
            format_rational(&self.cx),
            format_rational(&self.cy),
            format_rational(&self.r)
        )
    }
}

impl fmt::Display for DiskRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
        assert_eq!(format_rational(&ratio(-10, 4)), "-5/2");
        assert_eq!(format_rational(&rat(3)), "3");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(0)), Some(rat(0)));
        assert_eq!(rational_sqrt(&rat(-1)), None);
    }

    #[test]
    fn complement_is_an_involution() {
        let a = DiskRegion::disk(0, 0, 1);
        assert_eq!(a.complement(), DiskRegion::codisk(0, 0, 1));
        assert_eq!(a.complement().complement(), a);
        assert!(DiskRegion::new(Polarity::Disk, rat(0), rat(0), rat(0)).is_err());
    }
}
