//! Symbolic core of the RCC11 calculus.
//!
//! Base relations, relation sets, converse and the two dual operations,
//! composition tables (golden and derived), table validation and the
//! coarsening maps onto RCC8, RCC7 and RCC5.

mod calculus;
mod derive;
mod golden;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use calculus::{coarsen, expand, reduction_stats, Calculus, CoarseLabel, ReductionStats};
pub use derive::{derive_table, GeneratorSet, GENERATOR_PAIRS};
pub use golden::{disk_generators, golden_table, reduced_generators};
pub use table::{compose, validate_table, Cell, CompTable, Law, ValidationReport, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelAlgError {
    #[error("unknown relation token `{0}`")]
    UnknownRelation(String),
    #[error("unknown label `{label}` for {calculus}")]
    UnknownLabel { label: String, calculus: Calculus },
    #[error("generator set is missing pair ({0},{1})")]
    MissingGenerator(BaseRel, BaseRel),
    #[error("pair ({0},{1}) is not a generator pair")]
    UnexpectedGenerator(BaseRel, BaseRel),
    #[error("pair ({0},{1}) is neither a generator nor reachable by converse")]
    Unreachable(BaseRel, BaseRel),
    #[error("{0} has no declared dual generating set")]
    NoDualGeneratingSet(Calculus),
    #[error("table parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Which argument a dual complements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `x R^d y` iff `x R y'`.
    Right,
    /// `x ^dR y` iff `x' R y`.
    Left,
}

/// One of the eleven RCC11 base relations, in canonical index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BaseRel {
    Eq = 0,
    Tpp = 1,
    Tppi = 2,
    Ntpp = 3,
    Ntppi = 4,
    Pon = 5,
    Pody = 6,
    Podz = 7,
    Ecn = 8,
    Ecd = 9,
    Dc = 10,
}

impl BaseRel {
    pub const ALL: [BaseRel; 11] = [
        BaseRel::Eq,
        BaseRel::Tpp,
        BaseRel::Tppi,
        BaseRel::Ntpp,
        BaseRel::Ntppi,
        BaseRel::Pon,
        BaseRel::Pody,
        BaseRel::Podz,
        BaseRel::Ecn,
        BaseRel::Ecd,
        BaseRel::Dc,
    ];

    /// The dual generating set `{EQ, TPP, TPPI, NTPP, NTPPI, PON}`.
    pub const GENERATING: [BaseRel; 6] = [
        BaseRel::Eq,
        BaseRel::Tpp,
        BaseRel::Tppi,
        BaseRel::Ntpp,
        BaseRel::Ntppi,
        BaseRel::Pon,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<BaseRel> {
        Self::ALL.get(i).copied()
    }

    pub fn token(self) -> &'static str {
        match self {
            BaseRel::Eq => "EQ",
            BaseRel::Tpp => "TPP",
            BaseRel::Tppi => "TPPI",
            BaseRel::Ntpp => "NTPP",
            BaseRel::Ntppi => "NTPPI",
            BaseRel::Pon => "PON",
            BaseRel::Pody => "PODY",
            BaseRel::Podz => "PODZ",
            BaseRel::Ecn => "ECN",
            BaseRel::Ecd => "ECD",
            BaseRel::Dc => "DC",
        }
    }

    pub fn converse(self) -> BaseRel {
        match self {
            BaseRel::Tpp => BaseRel::Tppi,
            BaseRel::Tppi => BaseRel::Tpp,
            BaseRel::Ntpp => BaseRel::Ntppi,
            BaseRel::Ntppi => BaseRel::Ntpp,
            r => r,
        }
    }

    /// Right dual `R^d`: the relation holding between `x` and `y` iff `R` holds
    /// between `x` and `y'`.
    pub fn right_dual(self) -> BaseRel {
        match self {
            BaseRel::Tpp => BaseRel::Ecn,
            BaseRel::Tppi => BaseRel::Pody,
            BaseRel::Ntpp => BaseRel::Dc,
            BaseRel::Ntppi => BaseRel::Podz,
            BaseRel::Pon => BaseRel::Pon,
            BaseRel::Pody => BaseRel::Tppi,
            BaseRel::Podz => BaseRel::Ntppi,
            BaseRel::Ecn => BaseRel::Tpp,
            BaseRel::Ecd => BaseRel::Eq,
            BaseRel::Dc => BaseRel::Ntpp,
            BaseRel::Eq => BaseRel::Ecd,
        }
    }

    /// Left dual `^dR`: holds between `x` and `y` iff `R` holds between `x'` and `y`.
    pub fn left_dual(self) -> BaseRel {
        match self {
            BaseRel::Tpp => BaseRel::Pody,
            BaseRel::Tppi => BaseRel::Ecn,
            BaseRel::Ntpp => BaseRel::Podz,
            BaseRel::Ntppi => BaseRel::Dc,
            BaseRel::Pon => BaseRel::Pon,
            BaseRel::Pody => BaseRel::Tpp,
            BaseRel::Podz => BaseRel::Ntpp,
            BaseRel::Ecn => BaseRel::Tppi,
            BaseRel::Ecd => BaseRel::Eq,
            BaseRel::Dc => BaseRel::Ntppi,
            BaseRel::Eq => BaseRel::Ecd,
        }
    }

    pub fn dual(self, side: Side) -> BaseRel {
        match side {
            Side::Right => self.right_dual(),
            Side::Left => self.left_dual(),
        }
    }

    pub fn is_generating(self) -> bool {
        Self::GENERATING.contains(&self)
    }
}

impl fmt::Display for BaseRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for BaseRel {
    type Err = RelAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BaseRel::ALL
            .iter()
            .copied()
            .find(|r| r.token() == s)
            .ok_or_else(|| RelAlgError::UnknownRelation(s.to_string()))
    }
}

impl TryFrom<String> for BaseRel {
    type Error = RelAlgError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<BaseRel> for String {
    fn from(r: BaseRel) -> String {
        r.token().to_string()
    }
}

/// A set of base relations, stored as an 11-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RelSet(u16);

impl RelSet {
    const MASK: u16 = (1 << 11) - 1;

    pub const EMPTY: RelSet = RelSet(0);
    pub const FULL: RelSet = RelSet(Self::MASK);

    pub fn singleton(r: BaseRel) -> RelSet {
        RelSet(1 << r.index())
    }

    pub fn from_bits(bits: u16) -> Option<RelSet> {
        (bits & !Self::MASK == 0).then_some(RelSet(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, r: BaseRel) -> bool {
        self.0 & (1 << r.index()) != 0
    }

    pub fn insert(&mut self, r: BaseRel) {
        self.0 |= 1 << r.index();
    }

    pub fn remove(&mut self, r: BaseRel) {
        self.0 &= !(1 << r.index());
    }

    pub fn union(self, other: RelSet) -> RelSet {
        RelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RelSet) -> RelSet {
        RelSet(self.0 & other.0)
    }

    pub fn difference(self, other: RelSet) -> RelSet {
        RelSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: RelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The single member, if the set is a singleton.
    pub fn as_single(self) -> Option<BaseRel> {
        if self.len() == 1 {
            BaseRel::from_index(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Members in canonical index order.
    pub fn iter(self) -> impl Iterator<Item = BaseRel> {
        BaseRel::ALL.into_iter().filter(move |r| self.contains(*r))
    }

    pub fn map(self, f: impl Fn(BaseRel) -> BaseRel) -> RelSet {
        self.iter().map(f).collect()
    }

    pub fn converse(self) -> RelSet {
        self.map(BaseRel::converse)
    }

    pub fn dual(self, side: Side) -> RelSet {
        self.map(|r| r.dual(side))
    }

    /// Parses `A|B|C`; the empty string is the empty set.
    pub fn parse_bar_list(s: &str) -> Result<RelSet, RelAlgError> {
        if s.trim().is_empty() {
            return Ok(RelSet::EMPTY);
        }
        s.split('|').map(|t| t.trim().parse::<BaseRel>()).collect()
    }
}

impl FromIterator<BaseRel> for RelSet {
    fn from_iter<I: IntoIterator<Item = BaseRel>>(iter: I) -> Self {
        let mut s = RelSet::EMPTY;
        for r in iter {
            s.insert(r);
        }
        s
    }
}

impl From<BaseRel> for RelSet {
    fn from(r: BaseRel) -> Self {
        RelSet::singleton(r)
    }
}

impl fmt::Debug for RelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for RelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in self.iter() {
            if !first {
                f.write_str("|")?;
            }
            first = false;
            f.write_str(r.token())?;
        }
        Ok(())
    }
}

impl Serialize for RelSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for RelSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Vec::<BaseRel>::deserialize(d)?.into_iter().collect())
    }
}

/// Converse of every member.
pub fn converse(s: RelSet) -> RelSet {
    s.converse()
}

/// Right or left dual of every member.
pub fn dual(s: RelSet, side: Side) -> RelSet {
    s.dual(side)
}

/// Shorthand used by tests and the built-in tables.
#[macro_export]
macro_rules! relset {
    () => { $crate::relalg::RelSet::EMPTY };
    ($($r:ident),+ $(,)?) => {
        [$($crate::relalg::BaseRel::$r),+].into_iter().collect::<$crate::relalg::RelSet>()
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_roundtrip_is_bijective() {
        for (i, r) in BaseRel::ALL.iter().enumerate() {
            assert_eq!(r.index(), i);
            assert_eq!(BaseRel::from_index(i), Some(*r));
            assert_eq!(r.token().parse::<BaseRel>().unwrap(), *r);
        }
        assert!("TPPi".parse::<BaseRel>().is_err());
    }

    #[test]
    fn converse_examples() {
        assert_eq!(relset![Tpp].converse(), relset![Tppi]);
        assert_eq!(relset![Pody].converse(), relset![Pody]);
        assert_eq!(relset![Eq, Pon, Dc].converse(), relset![Eq, Pon, Dc]);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(relset![Tpp].dual(Side::Right), relset![Ecn]);
        assert_eq!(relset![Ntpp].dual(Side::Left), relset![Podz]);
        assert_eq!(relset![Pon].dual(Side::Right), relset![Pon]);
    }

    #[test]
    fn dual_laws_exhaustive() {
        for r in BaseRel::ALL {
            assert_eq!(r.right_dual().right_dual(), r);
            assert_eq!(r.left_dual().left_dual(), r);
            assert_eq!(r.right_dual().left_dual(), r.left_dual().right_dual());
            // R~d~ = ^dR
            assert_eq!(r.converse().right_dual().converse(), r.left_dual());
            // (^d(R~))~ = R^d
            assert_eq!(r.converse().left_dual().converse(), r.right_dual());
        }
        for r in BaseRel::GENERATING {
            assert_eq!(r.left_dual().right_dual(), r.converse());
        }
    }

    #[test]
    fn generating_set_and_its_duals_cover_everything() {
        let s: RelSet = BaseRel::GENERATING.into_iter().collect();
        assert_eq!(s.union(s.dual(Side::Right)), RelSet::FULL);
        assert_eq!(s.union(s.dual(Side::Left)), RelSet::FULL);
    }

    #[test]
    fn relset_display_and_parse() {
        let s = relset![Dc, Eq, Pon];
        assert_eq!(s.to_string(), "EQ|PON|DC");
        assert_eq!(RelSet::parse_bar_list("EQ|PON|DC").unwrap(), s);
        assert_eq!(RelSet::parse_bar_list("").unwrap(), RelSet::EMPTY);
        assert!(RelSet::parse_bar_list("EQ|XX").is_err());
        assert_eq!(RelSet::FULL.len(), 11);
        assert!(RelSet::from_bits(1 << 11).is_none());
    }
}
