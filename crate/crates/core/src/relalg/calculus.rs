use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{BaseRel, RelAlgError, RelSet, Side};
use crate::relset;

/// A jointly exhaustive, pairwise disjoint coarsening of RCC11.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Calculus {
    #[serde(rename = "RCC11")]
    Rcc11,
    #[serde(rename = "RCC8")]
    Rcc8,
    #[serde(rename = "RCC7")]
    Rcc7,
    #[serde(rename = "RCC5")]
    Rcc5,
}

/// A block of a calculus partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoarseLabel {
    pub calculus: Calculus,
    pub name: &'static str,
}

impl fmt::Display for CoarseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl Calculus {
    pub const ALL: [Calculus; 4] = [
        Calculus::Rcc11,
        Calculus::Rcc8,
        Calculus::Rcc7,
        Calculus::Rcc5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Calculus::Rcc11 => "RCC11",
            Calculus::Rcc8 => "RCC8",
            Calculus::Rcc7 => "RCC7",
            Calculus::Rcc5 => "RCC5",
        }
    }

    /// Blocks in a fixed order, each with its RCC11 members.
    pub fn partition(self) -> Vec<(&'static str, RelSet)> {
        match self {
            Calculus::Rcc11 => BaseRel::ALL
                .iter()
                .map(|&r| (r.token(), RelSet::singleton(r)))
                .collect(),
            Calculus::Rcc8 => vec![
                ("EQ", relset![Eq]),
                ("TPP", relset![Tpp]),
                ("TPPI", relset![Tppi]),
                ("NTPP", relset![Ntpp]),
                ("NTPPI", relset![Ntppi]),
                ("PO", relset![Pon, Pody, Podz]),
                ("EC", relset![Ecn, Ecd]),
                ("DC", relset![Dc]),
            ],
            Calculus::Rcc7 => vec![
                ("EQ", relset![Eq]),
                ("PP", relset![Tpp, Ntpp]),
                ("PPI", relset![Tppi, Ntppi]),
                ("PON", relset![Pon]),
                ("POD", relset![Pody, Podz]),
                ("ECD", relset![Ecd]),
                ("DN", relset![Ecn, Dc]),
            ],
            Calculus::Rcc5 => vec![
                ("EQ", relset![Eq]),
                ("PP", relset![Tpp, Ntpp]),
                ("PPI", relset![Tppi, Ntppi]),
                ("PO", relset![Pon, Pody, Podz]),
                ("DR", relset![Ecn, Ecd, Dc]),
            ],
        }
    }

    pub fn labels(self) -> Vec<CoarseLabel> {
        self.partition()
            .into_iter()
            .map(|(name, _)| CoarseLabel {
                calculus: self,
                name,
            })
            .collect()
    }

    pub fn label(self, name: &str) -> Result<CoarseLabel, RelAlgError> {
        self.labels()
            .into_iter()
            .find(|l| l.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| RelAlgError::UnknownLabel {
                label: name.to_string(),
                calculus: self,
            })
    }

    /// The block image of a label under `f`, if it is again a single block.
    fn map_block(self, l: CoarseLabel, f: impl Fn(BaseRel) -> BaseRel) -> Option<CoarseLabel> {
        let img = expand_block(l).map(f);
        self.partition()
            .into_iter()
            .find(|(_, b)| *b == img)
            .map(|(name, _)| CoarseLabel {
                calculus: self,
                name,
            })
    }

    pub fn converse(self, l: CoarseLabel) -> Option<CoarseLabel> {
        self.map_block(l, BaseRel::converse)
    }

    /// Dual of a block; `None` when the image is not a block, i.e. the
    /// calculus is not closed under that dual.
    pub fn dual(self, l: CoarseLabel, side: Side) -> Option<CoarseLabel> {
        self.map_block(l, |r| r.dual(side))
    }

    /// Whether every block has a block as right and left dual.
    pub fn is_dual(self) -> bool {
        self.labels()
            .into_iter()
            .all(|l| self.dual(l, Side::Right).is_some() && self.dual(l, Side::Left).is_some())
    }

    /// The dual generating set, for the calculi that have one.
    pub fn dual_generating_set(self) -> Option<Vec<CoarseLabel>> {
        let names: &[&str] = match self {
            Calculus::Rcc11 => &["EQ", "TPP", "TPPI", "NTPP", "NTPPI", "PON"],
            Calculus::Rcc7 => &["EQ", "PP", "PPI", "PON"],
            _ => return None,
        };
        Some(
            names
                .iter()
                .map(|n| self.label(n).expect("own label"))
                .collect(),
        )
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Calculus {
    type Err = RelAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Calculus::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| RelAlgError::UnknownLabel {
                label: s.to_string(),
                calculus: Calculus::Rcc11,
            })
    }
}

fn expand_block(l: CoarseLabel) -> RelSet {
    l.calculus
        .partition()
        .into_iter()
        .find(|(n, _)| *n == l.name)
        .map(|(_, b)| b)
        .expect("label belongs to its calculus")
}

/// The block of `c` containing `r`.
pub fn coarsen(r: BaseRel, c: Calculus) -> CoarseLabel {
    c.partition()
        .into_iter()
        .find(|(_, b)| b.contains(r))
        .map(|(name, _)| CoarseLabel { calculus: c, name })
        .expect("partition covers every base relation")
}

/// The RCC11 members of a coarse label given by name.
pub fn expand(label: &str, c: Calculus) -> Result<RelSet, RelAlgError> {
    c.label(label).map(expand_block)
}

/// Work needed to build a composition table from a dual generating set
/// `S` closed under converse: `m` self-converse non-identity members, `n`
/// members with a distinct converse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub calculus: Calculus,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub n: usize,
    #[serde(rename = "T")]
    pub t: usize,
    pub ratio_num: usize,
    pub ratio_den: usize,
}

impl ReductionStats {
    pub fn ratio(&self) -> f64 {
        self.ratio_num as f64 / self.ratio_den as f64
    }

    /// Exact comparison `T / r^2 < 1/8`.
    pub fn below_one_eighth(&self) -> bool {
        8 * self.ratio_num < self.ratio_den
    }
}

pub fn reduction_stats(c: Calculus) -> Result<ReductionStats, RelAlgError> {
    let gens = c
        .dual_generating_set()
        .ok_or(RelAlgError::NoDualGeneratingSet(c))?;
    let eq = c.label("EQ")?;
    let mut m = 0;
    let mut n = 0;
    for &g in &gens {
        let conv = c.converse(g).expect("converse of a block is a block");
        debug_assert!(gens.contains(&conv));
        if g == eq {
            continue;
        }
        if conv == g {
            m += 1;
        } else {
            n += 1;
        }
    }
    let s = gens.len();
    let t = (m + n) * (m + n + 1) / 2;
    debug_assert_eq!(t, s * (s - 1) / 2);
    let r = c.partition().len();
    Ok(ReductionStats {
        calculus: c,
        r,
        s,
        m,
        n,
        t,
        ratio_num: t,
        ratio_den: r * r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use BaseRel::*;

    #[test]
    fn partitions_are_jepd() {
        for c in Calculus::ALL {
            let mut seen = RelSet::EMPTY;
            for (_, b) in c.partition() {
                assert!(!b.is_empty());
                assert!(seen.intersection(b).is_empty(), "{c}");
                seen = seen.union(b);
            }
            assert_eq!(seen, RelSet::FULL, "{c}");
        }
    }

    #[test]
    fn coarsen_examples() {
        assert_eq!(coarsen(Pody, Calculus::Rcc8).name, "PO");
        assert_eq!(expand("DN", Calculus::Rcc7).unwrap(), relset![Ecn, Dc]);
        assert_eq!(coarsen(Ecd, Calculus::Rcc5).name, "DR");
        assert!(expand("DN", Calculus::Rcc8).is_err());
        for c in Calculus::ALL {
            for r in BaseRel::ALL {
                assert!(expand(coarsen(r, c).name, c).unwrap().contains(r));
            }
        }
    }

    #[test]
    fn rcc7_dual_operations() {
        let c = Calculus::Rcc7;
        let l = |n: &str| c.label(n).unwrap();
        let rows = [
            ("PP", "DN", "POD", "PPI"),
            ("PPI", "POD", "DN", "PP"),
            ("PON", "PON", "PON", "PON"),
            ("POD", "PPI", "PP", "DN"),
            ("DN", "PP", "PPI", "POD"),
            ("ECD", "EQ", "EQ", "ECD"),
            ("EQ", "ECD", "ECD", "EQ"),
        ];
        for (r, rd, dr, drd) in rows {
            assert_eq!(c.dual(l(r), Side::Right), Some(l(rd)), "{r}^d");
            assert_eq!(c.dual(l(r), Side::Left), Some(l(dr)), "^d{r}");
            let both = c.dual(c.dual(l(r), Side::Right).unwrap(), Side::Left);
            assert_eq!(both, Some(l(drd)), "^d{r}^d");
        }
        for g in c.dual_generating_set().unwrap() {
            let both = c.dual(c.dual(g, Side::Right).unwrap(), Side::Left);
            assert_eq!(both, c.converse(g));
        }
    }

    #[test]
    fn only_rcc7_and_rcc11_are_dual() {
        assert!(Calculus::Rcc11.is_dual());
        assert!(Calculus::Rcc7.is_dual());
        assert!(!Calculus::Rcc8.is_dual());
        assert!(!Calculus::Rcc5.is_dual());
        let tpp = Calculus::Rcc8.label("TPP").unwrap();
        assert_eq!(Calculus::Rcc8.dual(tpp, Side::Right), None);
        let pp = Calculus::Rcc5.label("PP").unwrap();
        assert_eq!(Calculus::Rcc5.dual(pp, Side::Right), None);
    }

    #[test]
    fn reduction_counts() {
        let s = reduction_stats(Calculus::Rcc11).unwrap();
        assert_eq!((s.r, s.s, s.m, s.n, s.t), (11, 6, 1, 4, 15));
        assert_eq!((s.ratio_num, s.ratio_den), (15, 121));
        assert!(s.below_one_eighth());
        let s = reduction_stats(Calculus::Rcc7).unwrap();
        assert_eq!((s.r, s.s, s.m, s.n, s.t), (7, 4, 1, 2, 6));
        assert_eq!((s.ratio_num, s.ratio_den), (6, 49));
        assert!(s.below_one_eighth());
        assert_eq!(s.s * (s.s - 1) / 2, 6);
        assert_eq!(
            reduction_stats(Calculus::Rcc8),
            Err(RelAlgError::NoDualGeneratingSet(Calculus::Rcc8))
        );
    }

    #[test]
    fn rcc11_generating_set_matches_base() {
        let names: Vec<_> = Calculus::Rcc11
            .dual_generating_set()
            .unwrap()
            .iter()
            .map(|l| l.name)
            .collect();
        let base: Vec<_> = BaseRel::GENERATING.iter().map(|r| r.token()).collect();
        assert_eq!(names, base);
    }
}
