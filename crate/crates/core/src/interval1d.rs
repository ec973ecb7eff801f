//! Regular closed finite unions of closed intervals and rays on the real
//! line, with the contact `a C b` iff `a ∩ b ≠ ∅`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::disk2d::{format_rational, parse_rational, rat, Rational};
use crate::dyadic::{hole_in, HoleKind};
use crate::lattice::{self, ContactAlgebra};
use crate::relalg::BaseRel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("region is empty")]
    Empty,
    #[error("region is the whole line")]
    Full,
    #[error("malformed interval literal `{0}`")]
    BadLiteral(String),
    #[error("hole chains need k >= 1")]
    BadChainLength,
}

/// An endpoint, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    NegInf,
    Fin(Rational),
    PosInf,
}

impl End {
    pub fn int(n: i64) -> End {
        End::Fin(rat(n))
    }

    fn is_finite(&self) -> bool {
        matches!(self, End::Fin(_))
    }
}

type Parts = Vec<(End, End)>;

/// Sorts, drops degenerate pieces and merges touching ones.
fn normalize(mut raw: Parts) -> Parts {
    raw.retain(|(l, r)| l < r);
    raw.sort();
    let mut out: Parts = Vec::with_capacity(raw.len());
    for (l, r) in raw {
        match out.last_mut() {
            Some(last) if l <= last.1 => {
                if r > last.1 {
                    last.1 = r;
                }
            }
            _ => out.push((l, r)),
        }
    }
    out
}

fn is_full(p: &Parts) -> bool {
    p.len() == 1 && p[0] == (End::NegInf, End::PosInf)
}

/// The algebra of canonical part lists; the empty list is zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct Line;

impl ContactAlgebra for Line {
    type Region = Parts;

    fn meet(&self, a: &Parts, b: &Parts) -> Parts {
        let mut raw = Vec::new();
        for (al, ar) in a {
            for (bl, br) in b {
                raw.push((al.max(bl).clone(), ar.min(br).clone()));
            }
        }
        normalize(raw)
    }

    fn join(&self, a: &Parts, b: &Parts) -> Parts {
        normalize(a.iter().chain(b).cloned().collect())
    }

    fn complement(&self, a: &Parts) -> Parts {
        let mut out = Vec::new();
        let mut cur = End::NegInf;
        for (l, r) in a {
            if cur < *l {
                out.push((cur, l.clone()));
            }
            cur = r.clone();
        }
        if cur < End::PosInf {
            out.push((cur, End::PosInf));
        }
        out
    }

    fn is_zero(&self, a: &Parts) -> bool {
        a.is_empty()
    }

    fn is_one(&self, a: &Parts) -> bool {
        is_full(a)
    }

    fn contact(&self, a: &Parts, b: &Parts) -> bool {
        a.iter()
            .any(|(al, ar)| b.iter().any(|(bl, br)| al.max(bl) <= ar.min(br)))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalRegion {
    parts: Parts,
}

impl IntervalRegion {
    /// Canonical form of a union of closed intervals `[l, r]`.
    pub fn regularize(raw: Vec<(End, End)>) -> Result<IntervalRegion, IntervalError> {
        let parts = normalize(raw);
        if parts.is_empty() {
            Err(IntervalError::Empty)
        } else if is_full(&parts) {
            Err(IntervalError::Full)
        } else {
            Ok(IntervalRegion { parts })
        }
    }

    /// `[l, r]` with integer endpoints.
    pub fn closed(l: i64, r: i64) -> IntervalRegion {
        IntervalRegion::regularize(vec![(End::int(l), End::int(r))]).expect("l < r")
    }

    pub fn components(&self) -> &[(End, End)] {
        &self.parts
    }

    pub fn complement(&self) -> IntervalRegion {
        IntervalRegion {
            parts: Line.complement(&self.parts),
        }
    }

    pub fn join(&self, other: &IntervalRegion) -> Result<IntervalRegion, IntervalError> {
        IntervalRegion::regularize(Line.join(&self.parts, &other.parts))
    }

    pub fn meet(&self, other: &IntervalRegion) -> Result<IntervalRegion, IntervalError> {
        IntervalRegion::regularize(Line.meet(&self.parts, &other.parts))
    }

    /// Finite endpoints, ascending.
    pub fn endpoints(&self) -> Vec<Rational> {
        self.parts
            .iter()
            .flat_map(|(l, r)| [l, r])
            .filter_map(|e| match e {
                End::Fin(q) => Some(q.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn boundary_count(&self) -> usize {
        self.parts
            .iter()
            .flat_map(|(l, r)| [l, r])
            .filter(|e| e.is_finite())
            .count()
    }
}

impl fmt::Debug for IntervalRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, r) in &self.parts {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match l {
                End::Fin(q) => write!(f, "[{}", format_rational(q))?,
                _ => f.write_str("(-inf")?,
            }
            match r {
                End::Fin(q) => write!(f, ",{}]", format_rational(q))?,
                _ => f.write_str(",inf)")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntervalRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for IntervalRegion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for IntervalRegion {
    type Err = IntervalError;

    /// Parses `[l,r]`, `(-inf,r]` and `[l,inf)` terms joined by `+`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || IntervalError::BadLiteral(text.to_string());
        let mut raw = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let close = rest.find([']', ')']).ok_or_else(bad)?;
            let term = &rest[..=close];
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(bad());
                }
            } else if !rest.is_empty() {
                return Err(bad());
            }
            let open = term.chars().next().ok_or_else(bad)?;
            let shut = term.chars().last().ok_or_else(bad)?;
            let (l, r) = term[1..term.len() - 1].split_once(',').ok_or_else(bad)?;
            let (l, r) = (l.trim(), r.trim());
            let lo = match (open, l) {
                ('(', "-inf") => End::NegInf,
                ('[', l) if l != "-inf" => End::Fin(parse_rational(l).map_err(|_| bad())?),
                _ => return Err(bad()),
            };
            let hi = match (shut, r) {
                (')', "inf" | "+inf") => End::PosInf,
                (']', r) if r != "inf" && r != "+inf" => {
                    End::Fin(parse_rational(r).map_err(|_| bad())?)
                }
                _ => return Err(bad()),
            };
            if lo >= hi {
                return Err(bad());
            }
            raw.push((lo, hi));
        }
        IntervalRegion::regularize(raw)
    }
}

pub fn contact(a: &IntervalRegion, b: &IntervalRegion) -> bool {
    Line.contact(&a.parts, &b.parts)
}

pub fn classify11(a: &IntervalRegion, b: &IntervalRegion) -> BaseRel {
    lattice::classify(&Line, &a.parts, &b.parts).expect("the line model is connected")
}

pub fn hole(a: &IntervalRegion, b: &IntervalRegion) -> HoleKind {
    hole_in(&Line, &a.parts, &b.parts)
}

pub fn strict_hole(a: &IntervalRegion, b: &IntervalRegion) -> bool {
    hole(a, b) == HoleKind::StrictHole
}

/// `b₀ = (−∞, 0]`, `bᵢ = [i − 1, i]`.
pub fn piece(i: usize) -> (End, End) {
    if i == 0 {
        (End::NegInf, End::int(0))
    } else {
        (End::int(i as i64 - 1), End::int(i as i64))
    }
}

/// `c₁, …, c_{2k+1}` where `c_j` is the union of the pieces `b_i` with
/// `i ≤ j` and `i ≡ j (mod 2)`.
pub fn build_hole_chain(k: usize) -> Result<Vec<IntervalRegion>, IntervalError> {
    if k == 0 {
        return Err(IntervalError::BadChainLength);
    }
    (1..=2 * k + 1)
        .map(|j| {
            IntervalRegion::regularize((0..=j).filter(|i| (j - i) % 2 == 0).map(piece).collect())
        })
        .collect()
}

/// Evidence for which powers of the strict hole relation link `c₁` and
/// `c_{2k}`.
#[derive(Debug, Clone, Serialize)]
pub struct ChainCertificate {
    pub k: usize,
    /// Odd step counts `2j − 1`, `j ≤ k`, each realised by `c₁ … c_{2j}`.
    pub witnessed_steps: Vec<usize>,
    pub all_links_strict: bool,
    pub start_endpoints: usize,
    pub end_endpoints: usize,
    /// The next odd power, ruled out because every strict hole step adds
    /// at least one endpoint.
    pub refuted_steps: usize,
    pub refuted: bool,
}

pub fn chain_certificate(k: usize) -> Result<ChainCertificate, IntervalError> {
    let c = build_hole_chain(k)?;
    let all_links_strict = c.windows(2).all(|w| strict_hole(&w[0], &w[1]))
        && (1..=k).all(|j| strict_hole(&c[0], &c[2 * j - 1]));
    let start_endpoints = c[0].boundary_count();
    let end_endpoints = c[2 * k - 1].boundary_count();
    let refuted_steps = 2 * k + 1;
    Ok(ChainCertificate {
        k,
        witnessed_steps: (1..=k).map(|j| 2 * j - 1).collect(),
        all_links_strict,
        start_endpoints,
        end_endpoints,
        refuted_steps,
        refuted: end_endpoints < start_endpoints + refuted_steps,
    })
}

/// Whether the endpoints of `a` are a proper subset of those of `b`.
pub fn endpoints_strictly_included(a: &IntervalRegion, b: &IntervalRegion) -> bool {
    let (ea, eb) = (a.endpoints(), b.endpoints());
    ea.len() < eb.len() && ea.iter().all(|q| eb.binary_search_by(|p| p.cmp(q)).is_ok())
}

impl PartialOrd for IntervalRegion {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntervalRegion {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}
