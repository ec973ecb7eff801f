//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rcc_core::disk2d::{generate_pair, nine_matrix, NineMatrix};
use rcc_core::interval1d;
use rcc_core::netcsp::{closure, Closure, Network};
use rcc_core::relalg::{
    derive_table, golden_table, reduced_generators, reduction_stats, validate_table, BaseRel,
    Calculus, RelSet, Side,
};
use rcc_core::relset;
use rcc_core::verify::{self, Report};
use BaseRel::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn failing(rep: &Report) -> String {
    let bad: Vec<&str> = rep
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    if bad.is_empty() {
        format!("{} checks", rep.checks.len())
    } else {
        format!("failing: {}", bad.join(", "))
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn table_derivation() -> Outcome {
    let t0 = Instant::now();
    let derived = derive_table(&reduced_generators());
    let elapsed = t0.elapsed();
    let Ok(derived) = derived else {
        return outcome(false, "derivation failed");
    };
    let golden = golden_table();
    let equal = 121 - derived.diff(&golden).len();
    let valid = validate_table(&derived).is_valid();
    outcome(
        equal == 121 && valid && elapsed < Duration::from_secs(1),
        format!(
            "{equal}/121 cells equal, laws valid: {valid}, {}",
            secs(elapsed)
        ),
    )
}

fn reduction() -> Outcome {
    let (Ok(a), Ok(b)) = (
        reduction_stats(Calculus::Rcc11),
        reduction_stats(Calculus::Rcc7),
    ) else {
        return outcome(false, "no dual generating set");
    };
    outcome(
        a.t == 15 && b.t == 6 && a.below_one_eighth() && b.below_one_eighth(),
        format!(
            "RCC11 T={} ({}/{}), RCC7 T={} ({}/{})",
            a.t, a.ratio_num, a.ratio_den, b.t, b.ratio_num, b.ratio_den
        ),
    )
}

fn dual_laws() -> Outcome {
    let mut ok = true;
    let rcc11 = [
        (Tpp, Ecn, Pody),
        (Tppi, Pody, Ecn),
        (Ntpp, Dc, Podz),
        (Ntppi, Podz, Dc),
        (Pon, Pon, Pon),
        (Pody, Tppi, Tpp),
        (Podz, Ntppi, Ntpp),
        (Ecn, Tpp, Tppi),
        (Ecd, Eq, Eq),
        (Dc, Ntpp, Ntppi),
        (Eq, Ecd, Ecd),
    ];
    for (r, rd, dr) in rcc11 {
        ok &= r.right_dual() == rd && r.left_dual() == dr;
    }
    for bits in 0..(1u16 << 11) {
        let s = RelSet::from_bits(bits).unwrap();
        ok &= s.dual(Side::Right).dual(Side::Right) == s
            && s.dual(Side::Left).dual(Side::Left) == s
            && s.dual(Side::Right).dual(Side::Left) == s.dual(Side::Left).dual(Side::Right)
            && s.converse().dual(Side::Right).converse() == s.dual(Side::Left);
    }
    let c = Calculus::Rcc7;
    let l = |n: &str| c.label(n).unwrap();
    for (r, rd, dr) in [
        ("PP", "DN", "POD"),
        ("PPI", "POD", "DN"),
        ("PON", "PON", "PON"),
        ("POD", "PPI", "PP"),
        ("DN", "PP", "PPI"),
        ("ECD", "EQ", "EQ"),
        ("EQ", "ECD", "ECD"),
    ] {
        ok &= c.dual(l(r), Side::Right) == Some(l(rd)) && c.dual(l(r), Side::Left) == Some(l(dr));
    }
    let t0 = Instant::now();
    let rep = verify::dual_laws(100_000, 0);
    let elapsed = t0.elapsed();
    outcome(
        ok && rep.passed && elapsed < Duration::from_secs(30),
        format!(
            "tables and laws exhaustive: {ok}; 100000 disk pairs: {}, {}",
            failing(&rep),
            secs(elapsed)
        ),
    )
}

fn nine_intersection() -> Outcome {
    let expected = [
        (Eq, "100010001"),
        (Tpp, "100110111"),
        (Tppi, "111011001"),
        (Ntpp, "100100111"),
        (Ntppi, "111001001"),
        (Pon, "111111111"),
        (Pody, "111110100"),
        (Podz, "111100100"),
        (Ecn, "001011111"),
        (Ecd, "001010100"),
        (Dc, "001001111"),
    ];
    let mut equal = 0;
    for (r, bits) in expected {
        let want = NineMatrix::from_bits(bits).unwrap();
        if (0..20).all(|seed| {
            let (a, b) = generate_pair(r, seed);
            nine_matrix(&a, &b) == want
        }) {
            equal += 1;
        }
    }
    outcome(
        equal == 11,
        format!("{equal}/11 matrices equal on 20 pairs each"),
    )
}

fn soundness() -> Outcome {
    let rep = verify::disk_soundness(10_000, 10_000, 0);
    let cov = rep.check("coverage-by-construction").unwrap();
    outcome(
        rep.passed,
        format!(
            "{} triples, {} violations; {} of {} entries constructed",
            rep.checks[0].checked,
            rep.checks[0].failures,
            cov.checked - cov.failures,
            cov.checked
        ),
    )
}

fn extensionality() -> Outcome {
    let t0 = Instant::now();
    let rep = verify::disk_extensionality(10, 10_000, 0);
    let elapsed = t0.elapsed();
    let ex = rep.check("budget-exhaustions").unwrap();
    let marked = rep.check("marked-triads").unwrap();
    outcome(
        rep.passed
            && ex.failures == 0
            && marked.checked == 10
            && elapsed < Duration::from_secs(600),
        format!(
            "{} entries x 10 instances, {} exhaustions, {}/10 marked triads, {}",
            rep.checks[0].checked,
            ex.failures,
            marked.checked - marked.failures,
            secs(elapsed)
        ),
    )
}

fn run(rep: Result<Report, impl std::fmt::Display>) -> Outcome {
    match rep {
        Ok(r) => outcome(r.passed, failing(&r)),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn holes() -> Outcome {
    let mut ok = true;
    for k in 1..=3 {
        let Ok(c) = interval1d::build_hole_chain(k) else {
            return outcome(false, "chain construction failed");
        };
        ok &= c.windows(2).all(|w| interval1d::strict_hole(&w[0], &w[1]));
        ok &= (1..=k).all(|j| interval1d::strict_hole(&c[0], &c[2 * j - 1]));
        ok &= c[0].boundary_count() == 2 && c[2 * k - 1].boundary_count() == 2 * k + 1;
    }
    let rep = match verify::holes_1d(3, 20_000, 0) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let law = rep
        .check("endpoint-inclusion")
        .map(|c| c.checked)
        .unwrap_or(0);
    outcome(
        ok && rep.passed,
        format!(
            "chains k<=3: {ok}; endpoint law on {law} strict holes: {}",
            failing(&rep)
        ),
    )
}

fn solver() -> Outcome {
    let mut refine = Network::universal(3);
    refine.constrain(0, 1, relset![Tpp]).unwrap();
    refine.constrain(1, 2, relset![Ntpp]).unwrap();
    let refined =
        matches!(closure(&refine), Closure::Closed(ref c) if c.get(0, 2) == relset![Ntpp]);
    let mut tri = Network::universal(3);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        tri.constrain(i, j, relset![Ecd]).unwrap();
    }
    let inconsistent = closure(&tri) == Closure::Inconsistent;
    let idempotent = (0..100u64)
        .filter(|&seed| {
            let net = Network::random(4 + (seed % 3) as usize, 0.6, seed);
            match closure(&net) {
                Closure::Closed(c) => closure(&c) == Closure::Closed(c),
                Closure::Inconsistent => true,
            }
        })
        .count();
    outcome(
        refined && inconsistent && idempotent == 100,
        format!("TPP;NTPP refines to NTPP: {refined}; ECD triangle inconsistent: {inconsistent}; idempotent {idempotent}/100"),
    )
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("table derivation", table_derivation),
        ("reduction arithmetic", reduction),
        ("dual and converse laws", dual_laws),
        ("nine-intersection matrices", nine_intersection),
        ("disk soundness and coverage", soundness),
        ("disk extensionality", extensionality),
        ("dyadic model axioms", || run(verify::bw_axioms(3))),
        ("dyadic model chains", || run(verify::bw_chains(2, 4))),
        ("PODY counterexample and positive triads", || {
            run(verify::bw_pody(4, 10, 0))
        }),
        ("hole chains", holes),
        ("network solver", solver),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let o = f();
        all &= o.passed;
        println!(
            "criterion {:>2} {}: {name} ({})",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
