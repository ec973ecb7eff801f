use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{classify, lookup, ratio, Config, DiskRegion, Polarity, Rational};
use crate::relalg::{BaseRel, RelSet};

/// Unit vectors with rational coordinates, so that center distances along
/// them stay rational.
fn unit_directions() -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for (p, q, h) in [(1, 0, 1), (3, 4, 5), (5, 12, 13), (8, 15, 17)] {
        for (x, y) in [(p, q), (q, p)] {
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let v = (ratio(sx * x, h), ratio(sy * y, h));
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Seeded source of regions and of partners in a prescribed relation.
///
/// Half of the partners reuse the previous direction, which puts many
/// centers on a common line and makes tangencies between generated
/// regions likely.
pub struct PairGenerator {
    rng: ChaCha8Rng,
    dirs: Vec<(Rational, Rational)>,
    last_dir: Option<usize>,
}

impl PairGenerator {
    pub fn new(seed: u64) -> PairGenerator {
        PairGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dirs: unit_directions(),
            last_dir: None,
        }
    }

    fn small(&mut self, lo: i64, hi: i64) -> Rational {
        let q = *[1i64, 2, 3, 4].choose(&mut self.rng).unwrap();
        ratio(self.rng.gen_range(lo * q..=hi * q), q)
    }

    fn positive(&mut self) -> Rational {
        let q = *[1i64, 2, 3, 4, 6].choose(&mut self.rng).unwrap();
        ratio(self.rng.gen_range(1..=3 * q), q)
    }

    /// A fraction strictly between 0 and 1.
    fn fraction(&mut self) -> Rational {
        let q = self.rng.gen_range(2..=6i64);
        ratio(self.rng.gen_range(1..q), q)
    }

    pub fn region(&mut self) -> DiskRegion {
        let polarity = if self.rng.gen_bool(0.5) {
            Polarity::Disk
        } else {
            Polarity::Codisk
        };
        let cx = self.small(-3, 3);
        let cy = self.small(-3, 3);
        let r = self.positive();
        DiskRegion::new(polarity, cx, cy, r).expect("positive radius")
    }

    fn direction(&mut self) -> (Rational, Rational) {
        let i = match self.last_dir {
            Some(i) if self.rng.gen_bool(0.5) => i,
            _ => self.rng.gen_range(0..self.dirs.len()),
        };
        self.last_dir = Some(i);
        self.dirs[i].clone()
    }

    /// A region `a` with `classify(a, b) == rel`.
    pub fn partner(&mut self, b: &DiskRegion, rel: BaseRel) -> DiskRegion {
        let mut options = Vec::new();
        for pa in [Polarity::Disk, Polarity::Codisk] {
            for c in Config::ALL {
                if lookup(pa, b.polarity, c) == rel {
                    options.push((pa, c));
                }
            }
        }
        let (pa, config) = *options
            .choose(&mut self.rng)
            .expect("every relation is realizable");
        let rb = b.r.clone();
        let zero = Rational::from_integer(0.into());
        let (ra, d) = match config {
            Config::Separate => {
                let ra = self.radius_near(&rb);
                let d = &ra + &rb + self.positive();
                (ra, d)
            }
            Config::External => {
                let ra = self.radius_near(&rb);
                let d = &ra + &rb;
                (ra, d)
            }
            Config::Crossing => {
                let ra = self.radius_near(&rb);
                let lo = (&ra - &rb).abs();
                let hi = &ra + &rb;
                let d = &lo + (&hi - &lo) * self.fraction();
                (ra, d)
            }
            Config::InnerTangentIn => {
                let ra = &rb * self.fraction();
                let d = &rb - &ra;
                (ra, d)
            }
            Config::InnerTangentOut => {
                let ra = &rb + self.positive();
                let d = &ra - &rb;
                (ra, d)
            }
            Config::Same => (rb.clone(), zero),
            Config::NestedIn => {
                let ra = &rb * self.fraction();
                let d = self.nested_offset(&rb - &ra);
                (ra, d)
            }
            Config::NestedOut => {
                let ra = &rb + self.positive();
                let d = self.nested_offset(&ra - &rb);
                (ra, d)
            }
        };
        let (ux, uy) = self.direction();
        let a = DiskRegion::new(pa, &b.cx + &d * ux, &b.cy + &d * uy, ra).expect("positive radius");
        debug_assert_eq!(classify(&a, b), rel);
        a
    }

    fn radius_near(&mut self, rb: &Rational) -> Rational {
        if self.rng.gen_bool(0.25) {
            rb.clone()
        } else {
            self.positive()
        }
    }

    fn nested_offset(&mut self, room: Rational) -> Rational {
        if self.rng.gen_bool(0.2) {
            Rational::from_integer(0.into())
        } else {
            room * self.fraction()
        }
    }
}

/// A pair `(a, b)` with `classify(a, b) == r`, deterministic in `seed`.
pub fn generate_pair(r: BaseRel, seed: u64) -> (DiskRegion, DiskRegion) {
    let mut g = PairGenerator::new(seed);
    let b = g.region();
    let a = g.partner(&b, r);
    (a, b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellObservation {
    pub r: BaseRel,
    pub s: BaseRel,
    pub trials: usize,
    pub observed: RelSet,
}

/// Samples triples `a r b`, `b s c` around a shared `b` and records the
/// relations seen between `a` and `c`.
pub fn observe_cell(r: BaseRel, s: BaseRel, trials: usize, seed: u64) -> CellObservation {
    let mut g = PairGenerator::new(seed);
    let mut observed = RelSet::EMPTY;
    for _ in 0..trials {
        let b = g.region();
        let a = g.partner(&b, r);
        let c = g.partner(&b, s.converse());
        observed.insert(classify(&a, &c));
    }
    CellObservation {
        r,
        s,
        trials,
        observed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relalg::golden_table;
    use crate::relset;
    use BaseRel::*;

    #[test]
    fn directions_are_unit() {
        for (x, y) in unit_directions() {
            assert_eq!(&x * &x + &y * &y, ratio(1, 1));
        }
        assert_eq!(unit_directions().len(), 4 + 8 * 3);
    }

    #[test]
    fn generated_pairs_have_the_requested_relation() {
        for r in BaseRel::ALL {
            for seed in 0..50 {
                let (a, b) = generate_pair(r, seed);
                assert_eq!(classify(&a, &b), r, "{r} seed {seed}");
            }
        }
        assert_eq!(generate_pair(Pon, 7), generate_pair(Pon, 7));
    }

    #[test]
    fn ecd_pairs_are_complements() {
        for seed in 0..20 {
            let (a, b) = generate_pair(Ecd, seed);
            assert_eq!(a.complement(), b);
        }
    }

    #[test]
    fn ecn_pairs_between_disks_are_externally_tangent() {
        for seed in 0..40 {
            let (a, b) = generate_pair(Ecn, seed);
            if a.is_disk() && b.is_disk() {
                let s = &a.r + &b.r;
                assert_eq!(a.center_dist2(&b), &s * &s);
            }
        }
    }

    #[test]
    fn observed_cells() {
        assert_eq!(observe_cell(Ntpp, Ntpp, 500, 1).observed, relset![Ntpp]);
        assert_eq!(observe_cell(Tpp, Tpp, 2000, 2).observed, relset![Tpp, Ntpp]);
        let golden = golden_table();
        let small = observe_cell(Pon, Pon, 50, 3).observed;
        let large = observe_cell(Pon, Pon, 5000, 3).observed;
        assert!(small.is_subset(large));
        assert!(large.is_subset(golden.get(Pon, Pon)));
        assert!(large.len() > small.len() || large == RelSet::FULL);
    }
}
