use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use super::{classify, rat, rational_sqrt, DiskRegion, PairGenerator, Polarity, Rational};
use crate::relalg::{golden_table, BaseRel, RelSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{found} is not in the composition of {r} and {s} ({cell})")]
    NotInCell {
        r: BaseRel,
        s: BaseRel,
        found: BaseRel,
        cell: RelSet,
    },
    #[error("interpolation needs an NTPP pair, got {0}")]
    NotNtpp(BaseRel),
    #[error("no witness after {tried} candidates")]
    BudgetExhausted { tried: usize },
    #[error("unknown interpolation mode `{0}`")]
    UnknownMode(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessOptions {
    /// Random candidates tried once the constructive routes fail.
    pub budget: usize,
    pub seed: u64,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            budget: 10_000,
            seed: 0,
        }
    }
}

/// Which construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRoute {
    /// Identity or complement, the only possible choice.
    Forced,
    Interpolation,
    /// Circle centered on the line through both centers.
    Collinear,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub region: DiskRegion,
    pub route: WitnessRoute,
    /// Candidates examined, including the successful one.
    pub candidates: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InterpolateMode {
    /// `a NTPP b NTPP c`
    NtppNtpp,
    /// `a TPP b NTPP c`
    TppNtpp,
    /// `a NTPP b TPP c`
    NtppTpp,
}

impl InterpolateMode {
    fn relations(self) -> (BaseRel, BaseRel) {
        match self {
            InterpolateMode::NtppNtpp => (BaseRel::Ntpp, BaseRel::Ntpp),
            InterpolateMode::TppNtpp => (BaseRel::Tpp, BaseRel::Ntpp),
            InterpolateMode::NtppTpp => (BaseRel::Ntpp, BaseRel::Tpp),
        }
    }

    fn from_relations(r: BaseRel, s: BaseRel) -> Option<InterpolateMode> {
        [
            InterpolateMode::NtppNtpp,
            InterpolateMode::TppNtpp,
            InterpolateMode::NtppTpp,
        ]
        .into_iter()
        .find(|m| m.relations() == (r, s))
    }
}

impl FromStr for InterpolateMode {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ntpp-ntpp" => Ok(InterpolateMode::NtppNtpp),
            "tpp-ntpp" => Ok(InterpolateMode::TppNtpp),
            "ntpp-tpp" => Ok(InterpolateMode::NtppTpp),
            other => Err(WitnessError::UnknownMode(other.to_string())),
        }
    }
}

impl fmt::Display for InterpolateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InterpolateMode::NtppNtpp => "ntpp-ntpp",
            InterpolateMode::TppNtpp => "tpp-ntpp",
            InterpolateMode::NtppTpp => "ntpp-tpp",
        })
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat(2)
}

fn region(p: Polarity, cx: Rational, cy: Rational, r: Rational) -> DiskRegion {
    DiskRegion::new(p, cx, cy, r).expect("positive radius")
}

/// `a` enlarged by `eps`, touching `a` from outside its interior.
fn grow_tangent(a: &DiskRegion, eps: &Rational) -> Option<DiskRegion> {
    let r = match a.polarity {
        Polarity::Disk => &a.r + eps,
        Polarity::Codisk => &a.r - eps,
    };
    DiskRegion::new(a.polarity, &a.cx + eps, a.cy.clone(), r).ok()
}

/// `c` shrunk by `eps`, touching `c` from inside.
fn shrink_tangent(c: &DiskRegion, eps: &Rational) -> Option<DiskRegion> {
    grow_tangent(&c.complement(), eps).map(|b| b.complement())
}

fn halve_until(
    mut eps: Rational,
    mut make: impl FnMut(&Rational) -> Option<DiskRegion>,
    ok: impl Fn(&DiskRegion) -> bool,
) -> DiskRegion {
    // every target relation here is stable as eps shrinks, so this ends
    loop {
        if let Some(b) = make(&eps) {
            if ok(&b) {
                return b;
            }
        }
        eps /= rat(2);
    }
}

/// A region `b` strictly or tangentially between `a` and `c`, where
/// `a NTPP c`.
pub fn interpolate(
    a: &DiskRegion,
    c: &DiskRegion,
    mode: InterpolateMode,
) -> Result<DiskRegion, WitnessError> {
    let rel = classify(a, c);
    if rel != BaseRel::Ntpp {
        return Err(WitnessError::NotNtpp(rel));
    }
    let (r, s) = mode.relations();
    let ok = |b: &DiskRegion| classify(a, b) == r && classify(b, c) == s;
    let e0 = a.r.clone().min(c.r.clone()) / rat(2);
    let b = match mode {
        InterpolateMode::NtppNtpp => match (a.polarity, c.polarity) {
            (Polarity::Codisk, Polarity::Disk) => unreachable!("a complement disk lies in no disk"),
            (p, q) if p == q => region(
                p,
                midpoint(&a.cx, &c.cx),
                midpoint(&a.cy, &c.cy),
                midpoint(&a.r, &c.r),
            ),
            _ => {
                // closed disk inside a complement disk: grow `a` about its center
                let d2 = a.center_dist2(c);
                let eps = match rational_sqrt(&d2) {
                    Some(d) => (d - &a.r - &c.r) / rat(3),
                    None => a.r.clone(),
                };
                halve_until(
                    eps,
                    |e| Some(region(Polarity::Disk, a.cx.clone(), a.cy.clone(), &a.r + e)),
                    ok,
                )
            }
        },
        InterpolateMode::TppNtpp => halve_until(e0, |e| grow_tangent(a, e), ok),
        InterpolateMode::NtppTpp => halve_until(e0, |e| shrink_tangent(c, e), ok),
    };
    debug_assert!(ok(&b));
    Ok(b)
}

/// Candidate positions on a line: the given points, two points inside each
/// gap and two beyond each end.
fn line_points(mut pts: Vec<Rational>) -> Vec<Rational> {
    pts.sort();
    pts.dedup();
    let mut out = pts.clone();
    for w in pts.windows(2) {
        let gap = &w[1] - &w[0];
        out.push(&w[0] + &gap / rat(3));
        out.push(&w[0] + &gap * rat(2) / rat(3));
    }
    let lo = pts[0].clone();
    let hi = pts[pts.len() - 1].clone();
    out.extend([&lo - rat(1), &lo - rat(2), &hi + rat(1), &hi + rat(2)]);
    out.sort();
    out.dedup();
    out
}

/// Regions centered on the line through the centers of `a` and `c`, with
/// boundary points drawn from [`line_points`]. `None` when the center
/// distance is irrational.
fn collinear_candidates(a: &DiskRegion, c: &DiskRegion) -> Option<Vec<DiskRegion>> {
    let d = rational_sqrt(&a.center_dist2(c))?;
    let (ux, uy) = if d.is_zero() {
        (Rational::one(), Rational::zero())
    } else {
        ((&c.cx - &a.cx) / &d, (&c.cy - &a.cy) / &d)
    };
    let pts = line_points(vec![-a.r.clone(), a.r.clone(), &d - &c.r, &d + &c.r]);
    let mut out = Vec::with_capacity(pts.len() * pts.len());
    for (i, lo) in pts.iter().enumerate() {
        for hi in &pts[i + 1..] {
            let s = midpoint(lo, hi);
            let r = (hi - lo) / rat(2);
            let cx = &a.cx + &s * &ux;
            let cy = &a.cy + &s * &uy;
            for p in [Polarity::Disk, Polarity::Codisk] {
                out.push(region(p, cx.clone(), cy.clone(), r.clone()));
            }
        }
    }
    Some(out)
}

/// A region `z` with `classify(a, z) == r` and `classify(z, c) == s`,
/// together with the route that produced it.
pub fn search_witness(
    r: BaseRel,
    s: BaseRel,
    a: &DiskRegion,
    c: &DiskRegion,
    opts: &WitnessOptions,
) -> Result<Witness, WitnessError> {
    let t = classify(a, c);
    let cell = golden_table().get(r, s);
    if !cell.contains(t) {
        return Err(WitnessError::NotInCell {
            r,
            s,
            found: t,
            cell,
        });
    }
    let ok = |z: &DiskRegion| classify(a, z) == r && classify(z, c) == s;
    let mut tried = 0;

    let forced = [
        (r == BaseRel::Eq).then(|| a.clone()),
        (s == BaseRel::Eq).then(|| c.clone()),
        (r == BaseRel::Ecd).then(|| a.complement()),
        (s == BaseRel::Ecd).then(|| c.complement()),
    ];
    for z in forced.into_iter().flatten() {
        tried += 1;
        if ok(&z) {
            return Ok(Witness {
                region: z,
                route: WitnessRoute::Forced,
                candidates: tried,
            });
        }
    }

    if let Some(mode) = InterpolateMode::from_relations(r, s) {
        if t == BaseRel::Ntpp {
            tried += 1;
            let z = interpolate(a, c, mode)?;
            return Ok(Witness {
                region: z,
                route: WitnessRoute::Interpolation,
                candidates: tried,
            });
        }
    }

    if let Some(cands) = collinear_candidates(a, c) {
        for z in cands {
            tried += 1;
            if ok(&z) {
                return Ok(Witness {
                    region: z,
                    route: WitnessRoute::Collinear,
                    candidates: tried,
                });
            }
        }
    }

    let mut g = PairGenerator::new(opts.seed);
    for _ in 0..opts.budget {
        tried += 1;
        let z = g.partner(a, r.converse());
        if classify(&z, c) == s {
            return Ok(Witness {
                region: z,
                route: WitnessRoute::Random,
                candidates: tried,
            });
        }
    }
    Err(WitnessError::BudgetExhausted { tried })
}

/// [`search_witness`] with the default budget, returning only the region.
pub fn find_witness(
    r: BaseRel,
    s: BaseRel,
    a: &DiskRegion,
    c: &DiskRegion,
) -> Result<DiskRegion, WitnessError> {
    search_witness(r, s, a, c, &WitnessOptions::default()).map(|w| w.region)
}
