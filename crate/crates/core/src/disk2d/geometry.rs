use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::{DiskRegion, Polarity, Rational};

/// Relative position of two boundary circles, with `d` the distance between
/// centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Config {
    /// `d > ra + rb`
    Separate,
    /// `d = ra + rb`
    External,
    /// `|ra - rb| < d < ra + rb`
    Crossing,
    /// `d = rb - ra > 0`: circle a inside circle b, touching.
    InnerTangentIn,
    /// `d = ra - rb > 0`: circle b inside circle a, touching.
    InnerTangentOut,
    /// Same circle.
    Same,
    /// `d < rb - ra`
    NestedIn,
    /// `d < ra - rb`
    NestedOut,
}

impl Config {
    pub const ALL: [Config; 8] = [
        Config::Separate,
        Config::External,
        Config::Crossing,
        Config::InnerTangentIn,
        Config::InnerTangentOut,
        Config::Same,
        Config::NestedIn,
        Config::NestedOut,
    ];

    /// Decided from `sign(d² - (ra+rb)²)`, `sign(d² - (ra-rb)²)` and
    /// `sign(ra - rb)`.
    pub fn of(a: &DiskRegion, b: &DiskRegion) -> Config {
        let d2 = a.center_dist2(b);
        let sum = &a.r + &b.r;
        let diff = &a.r - &b.r;
        let outer = d2.cmp(&(&sum * &sum));
        let inner = d2.cmp(&(&diff * &diff));
        let order = a.r.cmp(&b.r);
        Config::from_signs(outer, inner, order)
    }

    pub fn from_signs(outer: Ordering, inner: Ordering, order: Ordering) -> Config {
        match (outer, inner, order) {
            (Ordering::Greater, _, _) => Config::Separate,
            (Ordering::Equal, _, _) => Config::External,
            (Ordering::Less, Ordering::Greater, _) => Config::Crossing,
            (Ordering::Less, Ordering::Equal, Ordering::Less) => Config::InnerTangentIn,
            (Ordering::Less, Ordering::Equal, Ordering::Greater) => Config::InnerTangentOut,
            (Ordering::Less, Ordering::Equal, Ordering::Equal) => Config::Same,
            (Ordering::Less, Ordering::Less, Ordering::Less) => Config::NestedIn,
            (Ordering::Less, Ordering::Less, _) => Config::NestedOut,
        }
    }

    pub fn swap(self) -> Config {
        match self {
            Config::InnerTangentIn => Config::InnerTangentOut,
            Config::InnerTangentOut => Config::InnerTangentIn,
            Config::NestedIn => Config::NestedOut,
            Config::NestedOut => Config::NestedIn,
            c => c,
        }
    }
}

/// Compares the center distance `d` with `x` without taking a square root.
pub(crate) fn cmp_dist(d2: &Rational, x: &Rational) -> Ordering {
    if x.is_negative() {
        Ordering::Greater
    } else {
        d2.cmp(&(x * x))
    }
}

/// One of the three point sets a circle splits the plane into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    OpenDisk,
    Circle,
    Outside,
}

impl Part {
    /// Interior, boundary and exterior of a region in terms of its circle.
    pub fn of(p: Polarity) -> [Part; 3] {
        match p {
            Polarity::Disk => [Part::OpenDisk, Part::Circle, Part::Outside],
            Polarity::Codisk => [Part::Outside, Part::Circle, Part::OpenDisk],
        }
    }
}

/// Whether part `p` of circle `(ca, ra)` meets part `q` of circle `(cb, rb)`.
pub(crate) fn parts_meet(p: Part, q: Part, d2: &Rational, ra: &Rational, rb: &Rational) -> bool {
    use Part::*;
    let lt = |x: Rational| cmp_dist(d2, &x) == Ordering::Less;
    let gt = |x: Rational| cmp_dist(d2, &x) == Ordering::Greater;
    match (p, q) {
        (OpenDisk, OpenDisk) => lt(ra + rb),
        (OpenDisk, Outside) => gt(rb - ra),
        (Outside, OpenDisk) => gt(ra - rb),
        (Outside, Outside) => true,
        (OpenDisk, Circle) => gt(rb - ra) && lt(rb + ra),
        (Circle, OpenDisk) => gt(ra - rb) && lt(ra + rb),
        (Outside, Circle) => gt(ra - rb),
        (Circle, Outside) => gt(rb - ra),
        (Circle, Circle) => {
            let diff = (ra - rb).abs();
            !lt(diff) && !gt(ra + rb)
        }
    }
}

/// Emptiness pattern of the nine intersections, rows and columns in the
/// order interior, boundary, exterior.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NineMatrix(pub [[bool; 3]; 3]);

impl NineMatrix {
    pub fn from_bits(s: &str) -> Option<NineMatrix> {
        let bits: Vec<bool> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',' && *c != ';')
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<_>>()?;
        if bits.len() != 9 {
            return None;
        }
        let mut m = [[false; 3]; 3];
        for (i, b) in bits.into_iter().enumerate() {
            m[i / 3][i % 3] = b;
        }
        Some(NineMatrix(m))
    }

    /// Row-major `0`/`1` string.
    pub fn to_bits(&self) -> String {
        self.0
            .iter()
            .flatten()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn transpose(&self) -> NineMatrix {
        let mut t = [[false; 3]; 3];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                t[j][i] = v;
            }
        }
        NineMatrix(t)
    }

    pub fn entries(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().flatten().copied()
    }
}

impl fmt::Debug for NineMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.to_bits();
        write!(f, "({};{};{})", &b[0..3], &b[3..6], &b[6..9])
    }
}

impl Serialize for NineMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bits())
    }
}

/// The nine-intersection matrix of `a` against `b`.
pub fn nine_matrix(a: &DiskRegion, b: &DiskRegion) -> NineMatrix {
    let d2 = a.center_dist2(b);
    let pa = Part::of(a.polarity);
    let pb = Part::of(b.polarity);
    let mut m = [[false; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = parts_meet(pa[i], pb[j], &d2, &a.r, &b.r);
        }
    }
    NineMatrix(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk2d::{rat, ratio};

    fn d(cx: i64, cy: i64, r: i64) -> DiskRegion {
        DiskRegion::disk(cx, cy, r)
    }

    #[test]
    fn config_cases() {
        assert_eq!(Config::of(&d(0, 0, 1), &d(3, 0, 1)), Config::Separate);
        assert_eq!(Config::of(&d(0, 0, 1), &d(2, 0, 1)), Config::External);
        assert_eq!(Config::of(&d(0, 0, 1), &d(1, 0, 1)), Config::Crossing);
        assert_eq!(Config::of(&d(0, 0, 1), &d(1, 0, 2)), Config::InnerTangentIn);
        assert_eq!(
            Config::of(&d(1, 0, 2), &d(0, 0, 1)),
            Config::InnerTangentOut
        );
        assert_eq!(
            Config::of(&d(0, 0, 1), &DiskRegion::codisk(0, 0, 1)),
            Config::Same
        );
        assert_eq!(Config::of(&d(0, 0, 1), &d(0, 0, 3)), Config::NestedIn);
        assert_eq!(Config::of(&d(0, 0, 3), &d(1, 0, 1)), Config::NestedOut);
        for c in Config::ALL {
            assert_eq!(c.swap().swap(), c);
        }
    }

    #[test]
    fn every_sign_combination_maps_to_a_config() {
        use Ordering::*;
        for o in [Less, Equal, Greater] {
            for i in [Less, Equal, Greater] {
                for r in [Less, Equal, Greater] {
                    let _ = Config::from_signs(o, i, r);
                }
            }
        }
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(nine_matrix(&d(0, 0, 1), &d(3, 0, 1)).to_bits(), "001001111");
        let a = d(0, 0, 1);
        assert_eq!(nine_matrix(&a, &a.complement()).to_bits(), "001010100");
        assert_eq!(nine_matrix(&a, &a).to_bits(), "100010001");
        let m = nine_matrix(&a, &d(1, 0, 2));
        assert_eq!(m.transpose(), nine_matrix(&d(1, 0, 2), &a));
        assert_eq!(
            NineMatrix::from_bits("100;010;001"),
            Some(nine_matrix(&a, &a))
        );
    }

    #[test]
    fn distance_comparison() {
        let d2 = rat(4);
        assert_eq!(cmp_dist(&d2, &rat(2)), Ordering::Equal);
        assert_eq!(cmp_dist(&d2, &rat(-3)), Ordering::Greater);
        assert_eq!(cmp_dist(&d2, &ratio(5, 2)), Ordering::Less);
    }
}
