//! Verification suites over the three models. Each returns a serializable
//! report whose content depends only on its options.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::disk2d::{
    self, classify, generate_pair, nine_matrix, relation_matrix, search_witness, PairGenerator,
    WitnessError, WitnessOptions,
};
use crate::dyadic;
use crate::interval1d::{self, End, IntervalRegion};
use crate::relalg::{golden_table, reduced_generators, BaseRel, Calculus, RelSet, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    DiskSoundness,
    DiskExtensionality,
    BwAxioms,
    BwChains,
    BwPody,
    #[serde(rename = "holes-1d")]
    Holes1d,
    DualLaws,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::DiskSoundness,
        Suite::DiskExtensionality,
        Suite::BwAxioms,
        Suite::BwChains,
        Suite::BwPody,
        Suite::Holes1d,
        Suite::DualLaws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DiskSoundness => "disk-soundness",
            Suite::DiskExtensionality => "disk-extensionality",
            Suite::BwAxioms => "bw-axioms",
            Suite::BwChains => "bw-chains",
            Suite::BwPody => "bw-pody",
            Suite::Holes1d => "holes-1d",
            Suite::DualLaws => "dual-laws",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Limits for a run; `None` picks the suite default.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub depth: Option<u8>,
    pub trials: Option<usize>,
    pub budget: Option<usize>,
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Check {
    fn new(name: &str, checked: u64, failures: u64) -> Check {
        Check {
            name: name.to_string(),
            passed: failures == 0,
            checked,
            failures,
            detail: Value::Null,
        }
    }

    fn flag(name: &str, ok: bool) -> Check {
        Check::new(name, 1, u64::from(!ok))
    }

    fn with(mut self, detail: Value) -> Check {
        self.detail = detail;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite, seed: u64, checks: Vec<Check>) -> Report {
        Report {
            suite,
            seed,
            depth: None,
            trials: None,
            budget: None,
            k: None,
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(suite: Suite, o: &SuiteOptions) -> Result<Report, String> {
    let err = |e: &dyn fmt::Display| e.to_string();
    let rep = match suite {
        Suite::DualLaws => {
            let n = o.trials.unwrap_or(100_000);
            Report {
                trials: Some(n),
                ..dual_laws(n, o.seed)
            }
        }
        Suite::DiskSoundness => {
            let n = o.trials.unwrap_or(10_000);
            let b = o.budget.unwrap_or(10_000);
            Report {
                trials: Some(n),
                budget: Some(b),
                ..disk_soundness(n, b, o.seed)
            }
        }
        Suite::DiskExtensionality => {
            let n = o.trials.unwrap_or(10);
            let b = o.budget.unwrap_or(10_000);
            Report {
                trials: Some(n),
                budget: Some(b),
                ..disk_extensionality(n, b, o.seed)
            }
        }
        Suite::BwAxioms => {
            let d = o.depth.unwrap_or(3);
            Report {
                depth: Some(d),
                ..bw_axioms(d).map_err(|e| err(&e))?
            }
        }
        Suite::BwChains => {
            let d = o.depth.unwrap_or(4);
            let k = o.k.unwrap_or(2);
            Report {
                depth: Some(d),
                k: Some(k),
                ..bw_chains(k, d).map_err(|e| err(&e))?
            }
        }
        Suite::BwPody => {
            let d = o.depth.unwrap_or(4);
            let n = o.trials.unwrap_or(10);
            Report {
                depth: Some(d),
                trials: Some(n),
                ..bw_pody(d, n, o.seed).map_err(|e| err(&e))?
            }
        }
        Suite::Holes1d => {
            let k = o.k.unwrap_or(3);
            let n = o.trials.unwrap_or(20_000);
            Report {
                k: Some(k),
                trials: Some(n),
                ..holes_1d(k, n, o.seed).map_err(|e| err(&e))?
            }
        }
    };
    Ok(rep)
}

/// Seed of the `i`-th parallel chunk or instance.
pub fn sub_seed(seed: u64, i: u64) -> u64 {
    seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

const CHUNK: usize = 1_000;

type Triad = (BaseRel, BaseRel, BaseRel);

fn chunks(total: usize) -> Vec<(u64, usize)> {
    (0..total.div_ceil(CHUNK))
        .map(|c| (c as u64, CHUNK.min(total - c * CHUNK)))
        .collect()
}

/// Converse and dual laws on the relation algebra for RCC11 and RCC7 and,
/// semantically, on `samples` disk pairs.
pub fn dual_laws(samples: usize, seed: u64) -> Report {
    let table = golden_table();
    let mut checks = Vec::new();

    let mut n = 0u64;
    let mut bad = 0u64;
    let mut law = |ok: bool| {
        n += 1;
        bad += u64::from(!ok);
    };
    for r in BaseRel::ALL {
        law(r.right_dual().right_dual() == r);
        law(r.left_dual().left_dual() == r);
        law(r.right_dual().left_dual() == r.left_dual().right_dual());
        law(r.converse().converse() == r);
        law(r.converse().right_dual().converse() == r.left_dual());
        law(r.converse().left_dual().converse() == r.right_dual());
        law(table.get(r, BaseRel::Ecd) == RelSet::singleton(r.right_dual()));
        law(table.get(BaseRel::Ecd, r) == RelSet::singleton(r.left_dual()));
    }
    for bits in 0..(1u16 << 11) {
        let s = RelSet::from_bits(bits).expect("11 bits");
        for r in BaseRel::ALL {
            let rs = RelSet::singleton(r);
            law(rs.dual(Side::Right).intersection(s).is_empty()
                == rs.intersection(s.dual(Side::Right)).is_empty());
            law(rs.dual(Side::Left).intersection(s).is_empty()
                == rs.intersection(s.dual(Side::Left)).is_empty());
        }
    }
    checks.push(Check::new("rcc11-algebraic", n, bad));

    let c = Calculus::Rcc7;
    let mut n = 0u64;
    let mut bad = 0u64;
    let labels = c.labels();
    for &l in &labels {
        let (rd, ld, cv) = (c.dual(l, Side::Right), c.dual(l, Side::Left), c.converse(l));
        let ok = match (rd, ld, cv) {
            (Some(rd), Some(ld), Some(cv)) => {
                c.dual(rd, Side::Right) == Some(l)
                    && c.dual(ld, Side::Left) == Some(l)
                    && c.dual(rd, Side::Left) == c.dual(ld, Side::Right)
                    && c.converse(cv) == Some(l)
                    && c.dual(cv, Side::Right).and_then(|x| c.converse(x)) == Some(ld)
                    && c.dual(cv, Side::Left).and_then(|x| c.converse(x)) == Some(rd)
            }
            _ => false,
        };
        n += 1;
        bad += u64::from(!ok);
    }
    checks.push(Check::new("rcc7-algebraic", n, bad).with(json!({ "relations": labels.len() })));

    let fails: Vec<[u64; 5]> = chunks(samples)
        .into_par_iter()
        .map(|(ci, len)| {
            let mut g = PairGenerator::new(sub_seed(seed, ci));
            let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed ^ 0x5eed, ci));
            let mut f = [0u64; 5];
            for _ in 0..len {
                let b = g.region();
                let a = g.partner(&b, BaseRel::ALL[rng.gen_range(0..11)]);
                let r = classify(&a, &b);
                f[0] += u64::from(classify(&b, &a) != r.converse());
                f[1] += u64::from(classify(&a, &b.complement()) != r.right_dual());
                f[2] += u64::from(classify(&a.complement(), &b) != r.left_dual());
                f[3] += u64::from(
                    classify(&a.complement(), &b.complement()) != r.right_dual().left_dual(),
                );
                f[4] += u64::from(disk2d::classify_checked(&a, &b).is_err());
            }
            f
        })
        .collect();
    let sum = |i: usize| fails.iter().map(|f| f[i]).sum::<u64>();
    let n = samples as u64;
    checks.push(Check::new("disk-converse", n, sum(0)));
    checks.push(Check::new("disk-right-dual", n, sum(1)));
    checks.push(Check::new("disk-left-dual", n, sum(2)));
    checks.push(Check::new("disk-both-complements", n, sum(3)));
    checks.push(Check::new("disk-three-routes", n, sum(4)));
    Report::new(Suite::DualLaws, seed, checks)
}

/// Random triples around a shared middle region checked against the table,
/// then every table entry realised by constructing a witness.
pub fn disk_soundness(trials: usize, budget: usize, seed: u64) -> Report {
    let table = golden_table();
    let parts: Vec<(u64, Vec<Triad>)> = chunks(trials)
        .into_par_iter()
        .map(|(ci, len)| {
            let mut g = PairGenerator::new(sub_seed(seed, ci));
            let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed ^ 0x5eed, ci));
            let mut bad = 0;
            let mut seen = Vec::with_capacity(len);
            for _ in 0..len {
                let (r, s) = (
                    BaseRel::ALL[rng.gen_range(0..11)],
                    BaseRel::ALL[rng.gen_range(0..11)],
                );
                let b = g.region();
                let a = g.partner(&b, r);
                let c = g.partner(&b, s.converse());
                let t = classify(&a, &c);
                if !table.get(r, s).contains(t) {
                    bad += 1;
                }
                seen.push((r, s, t));
            }
            (bad, seen)
        })
        .collect();
    let violations: u64 = parts.iter().map(|p| p.0).sum();
    let mut observed = std::collections::BTreeSet::new();
    for (_, seen) in &parts {
        observed.extend(seen.iter().copied());
    }
    let entries: Vec<Triad> = table.triads().collect();
    let observed_entries = entries.iter().filter(|e| observed.contains(e)).count();

    let missing: Vec<String> = entries
        .par_iter()
        .enumerate()
        .filter_map(|(i, &(r, s, t))| {
            let (a, c) = generate_pair(t, sub_seed(seed, i as u64));
            let opts = WitnessOptions {
                budget,
                seed: sub_seed(seed, i as u64),
            };
            match search_witness(r, s, &a, &c, &opts) {
                Ok(w) if classify(&a, &w.region) == r && classify(&w.region, &c) == s => None,
                _ => Some(format!("{r},{s}->{t}")),
            }
        })
        .collect();

    let checks = vec![
        Check::new("triples", trials as u64, violations).with(json!({
            "entries_observed": observed_entries,
            "entries": entries.len(),
        })),
        Check::new(
            "coverage-by-construction",
            entries.len() as u64,
            missing.len() as u64,
        )
        .with(json!({ "missing": missing })),
    ];
    Report::new(Suite::DiskSoundness, seed, checks)
}

/// The ten marked entries of the fifteen generator cells, as `(R, S, T)`.
pub fn nonextensional_triads() -> Vec<Triad> {
    reduced_generators()
        .iter()
        .flat_map(|(r, s, cell)| {
            cell.marks
                .iter()
                .map(move |t| (r, s, t))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TriadOutcome {
    pub triad: String,
    pub found: usize,
    pub exhausted: usize,
    pub other_failures: usize,
    pub routes: [usize; 4],
}

/// Witnesses for `trials` generated instances of every table entry.
pub fn extensionality_outcomes(trials: usize, budget: usize, seed: u64) -> Vec<TriadOutcome> {
    let entries: Vec<Triad> = golden_table().triads().collect();
    entries
        .par_iter()
        .enumerate()
        .map(|(i, &(r, s, t))| {
            let mut o = TriadOutcome {
                triad: format!("{r},{s}->{t}"),
                ..Default::default()
            };
            for j in 0..trials {
                let inst = sub_seed(seed, (i * trials + j) as u64);
                let (a, c) = generate_pair(t, inst);
                let opts = WitnessOptions { budget, seed: inst };
                match search_witness(r, s, &a, &c, &opts) {
                    Ok(w) if classify(&a, &w.region) == r && classify(&w.region, &c) == s => {
                        o.found += 1;
                        o.routes[w.route as usize] += 1;
                    }
                    Err(WitnessError::BudgetExhausted { .. }) => o.exhausted += 1,
                    _ => o.other_failures += 1,
                }
            }
            o
        })
        .collect()
}

pub fn disk_extensionality(trials: usize, budget: usize, seed: u64) -> Report {
    let out = extensionality_outcomes(trials, budget, seed);
    let failed: Vec<&TriadOutcome> = out.iter().filter(|o| o.found < trials).collect();
    let exhausted: usize = out.iter().map(|o| o.exhausted).sum();
    let mut routes = [0usize; 4];
    for o in &out {
        for (k, v) in o.routes.iter().enumerate() {
            routes[k] += v;
        }
    }
    let marked: Vec<String> = nonextensional_triads()
        .iter()
        .map(|(r, s, t)| format!("{r},{s}->{t}"))
        .collect();
    let marked_found = out
        .iter()
        .filter(|o| marked.contains(&o.triad) && o.found == trials)
        .count();
    let checks = vec![
        Check::new("entries", out.len() as u64, failed.len() as u64).with(json!({
            "instances": out.len() * trials,
            "routes": {"forced": routes[0], "interpolation": routes[1], "collinear": routes[2], "random": routes[3]},
            "failed": failed.iter().map(|o| &o.triad).collect::<Vec<_>>(),
        })),
        Check::new("budget-exhaustions", (out.len() * trials) as u64, exhausted as u64),
        Check::new("marked-triads", marked.len() as u64, (marked.len() - marked_found) as u64)
            .with(json!({ "triads": marked })),
    ];
    Report::new(Suite::DiskExtensionality, seed, checks)
}

pub fn bw_axioms(depth: u8) -> Result<Report, dyadic::DyadicError> {
    let a = dyadic::check_axioms(depth, depth + 2)?;
    let s = dyadic::exhaustive_sweep(depth)?;
    let regions = a.regions as u64;
    let checks = vec![
        Check::flag("a2", a.a2_reflexive && a.a2_symmetric),
        Check::flag("a3", a.a3),
        Check::flag("a4", a.a4).with(json!({ "triples": a.a4_triples })),
        Check::new("a5", regions, a.a5_missing.len() as u64)
            .with(json!({ "search_depth": a.a5_depth })),
        Check::new("jepd", s.pairs as u64, s.jepd_failures as u64),
        Check::new("converse", s.pairs as u64, s.converse_failures as u64),
        Check::new("duals", s.pairs as u64, s.dual_failures as u64),
        Check::new("soundness", s.triples as u64, s.soundness_violations as u64),
        Check::new(
            "strict-holes-are-ecn",
            s.strict_holes as u64,
            s.strict_holes_not_ecn as u64,
        ),
        Check {
            passed: true,
            ..Check::new("c2-extensionality", regions, a.c2_failures as u64)
        }
        .with(json!({ "holds": a.c2_holds, "reported_only": true })),
    ];
    Ok(Report::new(Suite::BwAxioms, 0, checks))
}

pub fn bw_chains(k: usize, depth: u8) -> Result<Report, dyadic::DyadicError> {
    let deep = depth + 1;
    let mut links = 0u64;
    let mut bad = 0u64;
    for j in 1..deep as usize {
        for w in dyadic::standard_chain(j, deep)?.windows(2) {
            links += 1;
            bad += u64::from(dyadic::classify11(&w[0], &w[1])? != BaseRel::Ntpp);
        }
    }
    let mut checks =
        vec![Check::new("standard-chains", links, bad)
            .with(json!({ "depth": deep, "k_max": deep - 1 }))];
    let b = dyadic::BwRegion::cell("0", depth)?;
    for j in 1..=k {
        let a = dyadic::BwRegion::cell(&"0".repeat(j + 1), depth)?;
        let yes = dyadic::chain_exists(&a, &b, j, depth)?;
        let no = dyadic::chain_exists(&a, &b, j + 1, depth)?;
        checks.push(Check::flag(&format!("chain-k{j}"), yes && !no).with(json!({
            "from": a.to_string(),
            "to": b.to_string(),
            "steps": j,
            "reachable": yes,
            "reachable_in_next": no,
        })));
    }
    Ok(Report::new(Suite::BwChains, 0, checks))
}

pub fn bw_pody(depth: u8, trials: usize, seed: u64) -> Result<Report, dyadic::DyadicError> {
    let mut checks = Vec::new();
    let mut depths = vec![3, depth];
    depths.dedup();
    for d in depths {
        let p = dyadic::pody_counterexample(d)?;
        checks.push(
            Check::new(
                &format!("pody-depth{d}"),
                p.searched as u64,
                (p.tpp_witnesses + p.ntpp_witnesses) as u64,
            )
            .with(serde_json::to_value(&p).expect("serializable")),
        );
        checks.push(Check::flag(
            &format!("podz-control-depth{d}"),
            p.control_holds && p.relation == BaseRel::Pody,
        ));
    }
    for (r, t, s) in dyadic::POSITIVE_TRIADS {
        let bw = dyadic::search_triad(r, t, s, 3)?;
        let disk = (0..trials)
            .filter(|&j| {
                let inst = sub_seed(seed, j as u64);
                let (a, c) = generate_pair(t, inst);
                search_witness(
                    r,
                    s,
                    &a,
                    &c,
                    &WitnessOptions {
                        budget: 10_000,
                        seed: inst,
                    },
                )
                .is_ok()
            })
            .count();
        let example = bw
            .example
            .map(|(a, b, c)| [a.to_string(), b.to_string(), c.to_string()]);
        checks.push(
            Check::flag(
                &format!("triad-{r}-{t}-{s}"),
                bw.with_witness > 0 || disk > 0,
            )
            .with(json!({
                "bw_instances": bw.instances,
                "bw_with_witness": bw.with_witness,
                "bw_example": example,
                "disk_found": disk,
                "disk_trials": trials,
            })),
        );
    }
    Ok(Report::new(Suite::BwPody, seed, checks))
}

/// Union of the unit pieces `b_i` selected by `mask`, plus `[8, ∞)` on bit 9.
fn piece_region(mask: u16) -> Option<IntervalRegion> {
    let mut raw: Vec<(End, End)> = (0..9)
        .filter(|i| mask >> i & 1 == 1)
        .map(interval1d::piece)
        .collect();
    if mask >> 9 & 1 == 1 {
        raw.push((End::int(8), End::PosInf));
    }
    IntervalRegion::regularize(raw).ok()
}

pub fn holes_1d(k: usize, trials: usize, seed: u64) -> Result<Report, interval1d::IntervalError> {
    let mut checks = Vec::new();
    let mut law_pairs = 0u64;
    let mut law_bad = 0u64;
    for j in 1..=k {
        let c = interval1d::build_hole_chain(j)?;
        let adjacent = c
            .windows(2)
            .filter(|w| !interval1d::strict_hole(&w[0], &w[1]))
            .count();
        let to_even = (1..=j)
            .filter(|&i| !interval1d::strict_hole(&c[0], &c[2 * i - 1]))
            .count();
        let counts_ok = c[0].boundary_count() == 2 && c[2 * j - 1].boundary_count() == 2 * j + 1;
        let cert = interval1d::chain_certificate(j)?;
        checks.push(
            Check::new(
                &format!("chain-k{j}"),
                (2 * j + j + 2) as u64,
                (adjacent + to_even) as u64 + u64::from(!counts_ok) + u64::from(!cert.refuted),
            )
            .with(serde_json::to_value(&cert).expect("serializable")),
        );
        for a in &c {
            for b in &c {
                if interval1d::strict_hole(a, b) {
                    law_pairs += 1;
                    law_bad += u64::from(!interval1d::endpoints_strictly_included(a, b));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut holes = 0u64;
    for _ in 0..trials {
        let (Some(a), Some(b)) = (
            piece_region(rng.gen_range(1..1024)),
            piece_region(rng.gen_range(1..1024)),
        ) else {
            continue;
        };
        if interval1d::strict_hole(&a, &b) {
            holes += 1;
            law_bad += u64::from(!interval1d::endpoints_strictly_included(&a, &b));
        }
    }
    law_pairs += holes;
    checks.push(
        Check::new("endpoint-inclusion", law_pairs, law_bad)
            .with(json!({ "random_pairs": trials, "random_strict_holes": holes })),
    );
    Ok(Report::new(Suite::Holes1d, seed, checks))
}

/// Matrices of generated pairs against the reference ones, per relation.
pub fn matrix_agreement(instances: usize, seed: u64) -> Vec<(BaseRel, usize)> {
    BaseRel::ALL
        .into_iter()
        .map(|r| {
            let agree = (0..instances)
                .filter(|&j| {
                    let (a, b) =
                        generate_pair(r, sub_seed(seed, (r.index() * instances + j) as u64));
                    nine_matrix(&a, &b) == relation_matrix(r)
                        && disk2d::classify_checked(&a, &b).is_ok()
                })
                .count();
            (r, agree)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("disk".parse::<Suite>().is_err());
    }

    #[test]
    fn ten_marked_triads() {
        let m = nonextensional_triads();
        assert_eq!(m.len(), 10);
        assert!(m.contains(&(BaseRel::Tppi, BaseRel::Tpp, BaseRel::Pody)));
    }

    #[test]
    fn small_runs_pass() {
        assert!(dual_laws(500, 1).passed);
        assert!(disk_soundness(300, 10_000, 1).checks[0].passed);
        assert!(bw_chains(1, 3).unwrap().passed);
        assert!(holes_1d(2, 500, 1).unwrap().passed);
        assert!(matrix_agreement(3, 1).iter().all(|&(_, n)| n == 3));
    }
}
