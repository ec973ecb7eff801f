//! The least RCC model B_ω truncated at depth `d`. A region is a nonempty
//! proper set of the `2^d` depth-`d` cells `x_s`, stored as a bitmask whose
//! bit `i` is the cell whose string is `i` written in binary with `d` digits.
//!
//! Contact follows the model's definition verbatim: regions touch when they
//! overlap or hold the cells `s₁01…1` and `s₁11…1` respectively. Under it the
//! neighbouring cells `x_01` and `x_10` are not in contact.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{self, ContactAlgebra};
use crate::relalg::{golden_table, BaseRel};

pub const MAX_DEPTH: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyadicError {
    #[error("depth mismatch: {0} vs {1}")]
    DepthMismatch(u8, u8),
    #[error("depth {0} outside 1..={MAX_DEPTH}")]
    BadDepth(u8),
    #[error("cell string `{0}` is not a binary string of length 1..=depth")]
    BadCell(String),
    #[error("region is empty or the whole space")]
    Degenerate,
    #[error("chain of length {k} needs depth at least {need}")]
    TooShallow { k: usize, need: usize },
    #[error("malformed region literal `{0}`")]
    BadLiteral(String),
}

fn check_depth(d: u8) -> Result<(), DyadicError> {
    if (1..=MAX_DEPTH).contains(&d) {
        Ok(())
    } else {
        Err(DyadicError::BadDepth(d))
    }
}

fn full_mask(d: u8) -> u64 {
    let n = 1u32 << d;
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask of the depth-`d` cells below `x_s`.
fn cell_mask(s: &str, d: u8) -> Result<u64, DyadicError> {
    let len = s.len();
    if len == 0 || len > d as usize || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(DyadicError::BadCell(s.to_string()));
    }
    let v = u64::from_str_radix(s, 2).expect("binary");
    let span = 1u32 << (d as usize - len);
    let lo = v * span as u64;
    let block = if span == 64 {
        u64::MAX
    } else {
        (1u64 << span) - 1
    };
    Ok(block << lo)
}

/// Pairs `s₁01…1`, `s₁11…1` at full depth: for each `m` the lower cell has
/// index `≡ 2^m − 1 (mod 2^{m+1})` and its partner sits `2^m` higher.
fn contact_masks(d: u8) -> Vec<(u64, u32)> {
    let n = 1u32 << d;
    (0..d as u32)
        .map(|m| {
            let shift = 1u32 << m;
            let mut mask = 0u64;
            for i in 0..n {
                if i % (2 * shift) == shift - 1 {
                    mask |= 1 << i;
                }
            }
            (mask, shift)
        })
        .collect()
}

/// The Boolean algebra of depth-`d` cell sets with the truncated contact.
#[derive(Debug, Clone)]
pub struct Bw {
    depth: u8,
    full: u64,
    pairs: Vec<(u64, u32)>,
}

impl Bw {
    pub fn new(depth: u8) -> Result<Bw, DyadicError> {
        check_depth(depth)?;
        Ok(Bw {
            depth,
            full: full_mask(depth),
            pairs: contact_masks(depth),
        })
    }

    pub fn depth(&self) -> u8 {
        self.depth
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    /// Contact on raw masks; both arguments nonzero.
    pub fn touches(&self, a: u64, b: u64) -> bool {
        if a & b != 0 {
            return true;
        }
        self.pairs
            .iter()
            .any(|&(m, sh)| ((a & m) << sh) & b != 0 || ((b & m) << sh) & a != 0)
    }

    /// Every region of `U`, in mask order.
    pub fn regions(&self) -> impl Iterator<Item = u64> + '_ {
        1..self.full
    }
}

impl ContactAlgebra for Bw {
    type Region = u64;

    fn meet(&self, a: &u64, b: &u64) -> u64 {
        a & b
    }
    fn join(&self, a: &u64, b: &u64) -> u64 {
        a | b
    }
    fn complement(&self, a: &u64) -> u64 {
        !a & self.full
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == self.full
    }
    fn contact(&self, a: &u64, b: &u64) -> bool {
        self.touches(*a, *b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BwRegion {
    depth: u8,
    bits: u64,
}

impl BwRegion {
    pub fn from_bits(depth: u8, bits: u64) -> Result<BwRegion, DyadicError> {
        check_depth(depth)?;
        if bits == 0 || bits & !full_mask(depth) != 0 || bits == full_mask(depth) {
            return Err(DyadicError::Degenerate);
        }
        Ok(BwRegion { depth, bits })
    }

    /// The cell `x_s`.
    pub fn cell(s: &str, depth: u8) -> Result<BwRegion, DyadicError> {
        check_depth(depth)?;
        BwRegion::from_bits(depth, cell_mask(s, depth)?)
    }

    pub fn depth(&self) -> u8 {
        self.depth
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn complement(&self) -> BwRegion {
        BwRegion {
            depth: self.depth,
            bits: !self.bits & full_mask(self.depth),
        }
    }

    /// Union; `None` if it is the whole space.
    pub fn join(&self, other: &BwRegion) -> Option<BwRegion> {
        BwRegion::from_bits(self.depth, self.bits | other.bits).ok()
    }

    /// Intersection; `None` if empty.
    pub fn meet(&self, other: &BwRegion) -> Option<BwRegion> {
        BwRegion::from_bits(self.depth, self.bits & other.bits).ok()
    }

    pub fn is_part_of(&self, other: &BwRegion) -> bool {
        self.bits & !other.bits == 0
    }

    /// The same point set at a greater depth.
    pub fn lift(&self, depth: u8) -> Result<BwRegion, DyadicError> {
        check_depth(depth)?;
        if depth < self.depth {
            return Err(DyadicError::DepthMismatch(self.depth, depth));
        }
        let span = 1u32 << (depth - self.depth);
        let block = if span == 64 {
            u64::MAX
        } else {
            (1u64 << span) - 1
        };
        let mut bits = 0u64;
        for i in 0..(1u32 << self.depth) {
            if self.bits >> i & 1 == 1 {
                bits |= block << (i * span);
            }
        }
        BwRegion::from_bits(depth, bits)
    }

    /// Maximal dyadic cells whose union is the region, left to right.
    pub fn cells(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_cells(String::new(), &mut out);
        out
    }

    fn collect_cells(&self, prefix: String, out: &mut Vec<String>) {
        if prefix.len() == self.depth as usize {
            if self.bits & cell_mask(&prefix, self.depth).unwrap() != 0 {
                out.push(prefix);
            }
            return;
        }
        for b in ['0', '1'] {
            let s = format!("{prefix}{b}");
            let m = cell_mask(&s, self.depth).unwrap();
            if self.bits & m == m {
                out.push(s);
            } else if self.bits & m != 0 {
                self.collect_cells(s, out);
            }
        }
    }

    /// Parses `x(01)+!x(1)`; `!` complements the term it prefixes.
    pub fn parse(text: &str, depth: u8) -> Result<BwRegion, DyadicError> {
        check_depth(depth)?;
        let bad = || DyadicError::BadLiteral(text.to_string());
        let mut bits = 0u64;
        for term in text.split('+') {
            let term = term.trim();
            let (neg, body) = match term.strip_prefix('!') {
                Some(rest) => (true, rest.trim()),
                None => (false, term),
            };
            let inner = body
                .strip_prefix("x(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let m = cell_mask(inner.trim(), depth)?;
            bits |= if neg { !m & full_mask(depth) } else { m };
        }
        BwRegion::from_bits(depth, bits)
    }
}

impl fmt::Debug for BwRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .cells()
            .into_iter()
            .map(|c| format!("x({c})"))
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Display for BwRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for BwRegion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for BwRegion {
    type Err = DyadicError;

    /// Parses at the smallest depth that holds every cell literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let depth = s
            .split("x(")
            .skip(1)
            .map(|t| t.split(')').next().unwrap_or("").trim().len())
            .max()
            .unwrap_or(0)
            .max(1);
        BwRegion::parse(s, depth.min(MAX_DEPTH as usize) as u8)
    }
}

fn same_depth(a: &BwRegion, b: &BwRegion) -> Result<Bw, DyadicError> {
    if a.depth != b.depth {
        return Err(DyadicError::DepthMismatch(a.depth, b.depth));
    }
    Bw::new(a.depth)
}

pub fn contact(a: &BwRegion, b: &BwRegion) -> Result<bool, DyadicError> {
    Ok(same_depth(a, b)?.touches(a.bits, b.bits))
}

pub fn classify11(a: &BwRegion, b: &BwRegion) -> Result<BaseRel, DyadicError> {
    let alg = same_depth(a, b)?;
    Ok(lattice::classify(&alg, &a.bits, &b.bits).expect("RCC11 relations are JEPD on B_ω"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleKind {
    None,
    /// `a` is a hole of `b` only because `a = b'`.
    Hole,
    StrictHole,
}

/// Whether `a` is a hole of `b`: `EC(a, b)` and `NTPP(a, a ∨ b)`. A region is
/// always a hole of its complement; that case is the non-strict one.
pub fn hole_in<A: ContactAlgebra>(alg: &A, a: &A::Region, b: &A::Region) -> HoleKind {
    if alg.overlaps(a, b) || !alg.contact(a, b) {
        return HoleKind::None;
    }
    if *a == alg.complement(b) {
        return HoleKind::Hole;
    }
    let j = alg.join(a, b);
    if lattice::classify(alg, a, &j) == Ok(BaseRel::Ntpp) {
        HoleKind::StrictHole
    } else {
        HoleKind::None
    }
}

pub fn hole(a: &BwRegion, b: &BwRegion) -> Result<HoleKind, DyadicError> {
    let alg = same_depth(a, b)?;
    Ok(hole_in(&alg, &a.bits, &b.bits))
}

/// `[x_{0^{k+1}}, x_{0^k}, …, x_0]`.
pub fn standard_chain(k: usize, depth: u8) -> Result<Vec<BwRegion>, DyadicError> {
    check_depth(depth)?;
    if k + 1 > depth as usize {
        return Err(DyadicError::TooShallow { k, need: k + 1 });
    }
    (0..=k)
        .rev()
        .map(|i| BwRegion::cell(&"0".repeat(i + 1), depth))
        .collect()
}

/// Whether `a = r₀ NTPP r₁ … NTPP r_len = b` for some depth-`d` regions.
/// Intermediates lie between `a` and `b`, so only those are searched.
pub fn chain_exists(
    a: &BwRegion,
    b: &BwRegion,
    len: usize,
    depth: u8,
) -> Result<bool, DyadicError> {
    let alg = same_depth(a, b)?;
    if a.depth != depth {
        return Err(DyadicError::DepthMismatch(a.depth, depth));
    }
    if len == 0 {
        return Ok(a == b);
    }
    if !a.is_part_of(b) {
        return Ok(false);
    }
    let free = b.bits & !a.bits;
    let mut between = Vec::new();
    let mut sub = free;
    loop {
        between.push(a.bits | sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    let ntpp = |x: u64, y: u64| lattice::classify(&alg, &x, &y) == Ok(BaseRel::Ntpp);
    let mut frontier = vec![a.bits];
    for _ in 0..len {
        let mut next: Vec<u64> = between
            .iter()
            .copied()
            .filter(|&r| frontier.iter().any(|&f| ntpp(f, r)))
            .collect();
        next.sort_unstable();
        next.dedup();
        if next.is_empty() {
            return Ok(false);
        }
        frontier = next;
    }
    Ok(frontier.contains(&b.bits))
}

/// Number of `0`s in a cell string.
pub fn lambda(s: &str) -> usize {
    s.bytes().filter(|&b| b == b'0').count()
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub depth: u8,
    pub regions: usize,
    pub a2_reflexive: bool,
    pub a2_symmetric: bool,
    pub a3: bool,
    pub a4: bool,
    pub a4_triples: usize,
    /// Depth searched for A5 witnesses.
    pub a5_depth: u8,
    pub a5_found: usize,
    pub a5_missing: Vec<String>,
    /// Extensionality of contact within the truncation; reported only.
    pub c2_holds: bool,
    pub c2_failures: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.a2_reflexive && self.a2_symmetric && self.a3 && self.a4 && self.a5_missing.is_empty()
    }
}

/// Exhaustive A2–A4 over all regions at `depth` (including the unit for A2
/// and A4), A5 by searching single cells down to `a5_depth`.
pub fn check_axioms(depth: u8, a5_depth: u8) -> Result<AxiomReport, DyadicError> {
    let alg = Bw::new(depth)?;
    let deep = Bw::new(a5_depth)?;
    if a5_depth < depth {
        return Err(DyadicError::DepthMismatch(depth, a5_depth));
    }
    let nonzero: Vec<u64> = (1..=alg.full).collect();
    let c = |x: u64, y: u64| alg.touches(x, y);
    let a2_reflexive = nonzero.iter().all(|&x| c(x, x));
    let a2_symmetric = nonzero
        .iter()
        .all(|&x| nonzero.iter().all(|&y| c(x, y) == c(y, x)));
    let a3 = alg.regions().all(|x| c(x, !x & alg.full));
    let a4 = nonzero.par_iter().all(|&x| {
        nonzero
            .iter()
            .all(|&y| nonzero.iter().all(|&z| c(x, y | z) == (c(x, y) || c(x, z))))
    });
    let n = nonzero.len();

    let mut cells = Vec::new();
    for len in 1..=a5_depth as usize {
        for v in 0..(1u64 << len) {
            let s = format!("{v:0len$b}");
            cells.push(cell_mask(&s, a5_depth)?);
        }
    }
    let mut a5_found = 0;
    let mut a5_missing = Vec::new();
    for x in alg.regions() {
        let lx = BwRegion { depth, bits: x }.lift(a5_depth)?.bits;
        if cells
            .iter()
            .any(|&w| w != deep.full && !deep.touches(lx, w))
        {
            a5_found += 1;
        } else {
            a5_missing.push(BwRegion { depth, bits: x }.to_string());
        }
    }

    let regions: Vec<u64> = alg.regions().collect();
    let profile: Vec<Vec<bool>> = regions
        .iter()
        .map(|&x| regions.iter().map(|&z| c(x, z)).collect())
        .collect();
    let mut seen = std::collections::HashMap::new();
    let mut c2_failures = 0;
    for (i, p) in profile.iter().enumerate() {
        if let Some(_j) = seen.insert(p.clone(), i) {
            c2_failures += 1;
        }
    }
    Ok(AxiomReport {
        depth,
        regions: regions.len(),
        a2_reflexive,
        a2_symmetric,
        a3,
        a4,
        a4_triples: n * n * n,
        a5_depth,
        a5_found,
        a5_missing,
        c2_holds: c2_failures == 0,
        c2_failures,
    })
}

/// First single cell of depth at most `max_depth` not in contact with `x`.
pub fn a5_witness(x: &BwRegion, max_depth: u8) -> Result<Option<BwRegion>, DyadicError> {
    let deep = Bw::new(max_depth)?;
    let lx = x.lift(max_depth)?;
    for len in 1..=max_depth as usize {
        for v in 0..(1u64 << len) {
            let s = format!("{v:0len$b}");
            let w = cell_mask(&s, max_depth)?;
            if w != deep.full && !deep.touches(lx.bits, w) {
                return Ok(Some(BwRegion::cell(&s, len as u8)?));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct PodyReport {
    pub depth: u8,
    pub a: BwRegion,
    pub c: BwRegion,
    pub relation: BaseRel,
    pub searched: usize,
    pub tpp_witnesses: usize,
    pub ntpp_witnesses: usize,
    /// `b = a ∧ c` for the PODZ control instance `c = !x(00)`.
    pub control_relation: BaseRel,
    pub control_holds: bool,
}

/// With `a = x_0` and `c = !x_01`, so `a PODY c`, searches every part `b`
/// of `a` for `a TPPI b` with `b TPP c` or `b NTPP c`.
pub fn pody_counterexample(depth: u8) -> Result<PodyReport, DyadicError> {
    if depth < 3 {
        return Err(DyadicError::TooShallow { k: 2, need: 3 });
    }
    let alg = Bw::new(depth)?;
    let a = BwRegion::cell("0", depth)?;
    let c = BwRegion::cell("01", depth)?.complement();
    let relation = classify11(&a, &c)?;
    let cls = |x: u64, y: u64| lattice::classify(&alg, &x, &y).expect("JEPD");
    let mut searched = 0;
    let mut tpp_witnesses = 0;
    let mut ntpp_witnesses = 0;
    let mut sub = a.bits;
    while sub != 0 {
        searched += 1;
        if cls(a.bits, sub) == BaseRel::Tppi {
            match cls(sub, c.bits) {
                BaseRel::Tpp => tpp_witnesses += 1,
                BaseRel::Ntpp => ntpp_witnesses += 1,
                _ => {}
            }
        }
        sub = (sub - 1) & a.bits;
    }
    let cz = BwRegion::cell("00", depth)?.complement();
    let control_relation = classify11(&a, &cz)?;
    let b = a.meet(&cz).ok_or(DyadicError::Degenerate)?;
    let control_holds = control_relation == BaseRel::Podz
        && classify11(&a, &b)? == BaseRel::Tppi
        && classify11(&b, &cz)? == BaseRel::Tpp;
    Ok(PodyReport {
        depth,
        a,
        c,
        relation,
        searched,
        tpp_witnesses,
        ntpp_witnesses,
        control_relation,
        control_holds,
    })
}

/// A triad `⟨R, T, S⟩`: `T` between `a` and `c`, witness `b` with `a R b`
/// and `b S c`.
#[derive(Debug, Clone, Serialize)]
pub struct TriadSearch {
    pub r: BaseRel,
    pub t: BaseRel,
    pub s: BaseRel,
    pub instances: usize,
    pub with_witness: usize,
    pub example: Option<(BwRegion, BwRegion, BwRegion)>,
}

/// For every pair `a T c` at `depth`, looks for `b` with `a R b S c`.
pub fn search_triad(
    r: BaseRel,
    t: BaseRel,
    s: BaseRel,
    depth: u8,
) -> Result<TriadSearch, DyadicError> {
    let alg = Bw::new(depth)?;
    let regions: Vec<u64> = alg.regions().collect();
    let rel: Vec<Vec<BaseRel>> = regions
        .par_iter()
        .map(|&x| {
            regions
                .iter()
                .map(|&y| lattice::classify(&alg, &x, &y).expect("JEPD"))
                .collect()
        })
        .collect();
    let mut instances = 0;
    let mut with_witness = 0;
    let mut example = None;
    for (ia, row) in rel.iter().enumerate() {
        for (ic, &tc) in row.iter().enumerate() {
            if tc != t {
                continue;
            }
            instances += 1;
            if let Some(ib) = (0..regions.len()).find(|&ib| row[ib] == r && rel[ib][ic] == s) {
                with_witness += 1;
                if example.is_none() {
                    let mk = |i: usize| BwRegion {
                        depth,
                        bits: regions[i],
                    };
                    example = Some((mk(ia), mk(ib), mk(ic)));
                }
            }
        }
    }
    Ok(TriadSearch {
        r,
        t,
        s,
        instances,
        with_witness,
        example,
    })
}

/// Positive triads `⟨R, T, S⟩` with an explicit construction of `b`.
pub const POSITIVE_TRIADS: [(BaseRel, BaseRel, BaseRel); 9] = [
    (BaseRel::Tppi, BaseRel::Podz, BaseRel::Tpp),
    (BaseRel::Tppi, BaseRel::Podz, BaseRel::Ntpp),
    (BaseRel::Tppi, BaseRel::Pody, BaseRel::Pon),
    (BaseRel::Tppi, BaseRel::Podz, BaseRel::Pon),
    (BaseRel::Ntppi, BaseRel::Pody, BaseRel::Pon),
    (BaseRel::Ntppi, BaseRel::Podz, BaseRel::Pon),
    (BaseRel::Pon, BaseRel::Pody, BaseRel::Pon),
    (BaseRel::Pon, BaseRel::Podz, BaseRel::Pon),
    (BaseRel::Pon, BaseRel::Ecd, BaseRel::Pon),
];

/// Negative triads: `a T c` holds but no `b` need satisfy `a R b S c`.
pub const NEGATIVE_TRIADS: [(BaseRel, BaseRel, BaseRel); 2] = [
    (BaseRel::Tppi, BaseRel::Pody, BaseRel::Tpp),
    (BaseRel::Tppi, BaseRel::Pody, BaseRel::Ntpp),
];

#[derive(Debug, Clone, Default, Serialize)]
pub struct ModelSweep {
    pub depth: u8,
    pub pairs: usize,
    pub jepd_failures: usize,
    pub converse_failures: usize,
    pub dual_failures: usize,
    pub triples: usize,
    pub soundness_violations: usize,
    pub strict_holes: usize,
    pub strict_holes_not_ecn: usize,
}

impl ModelSweep {
    pub fn passed(&self) -> bool {
        self.jepd_failures == 0
            && self.converse_failures == 0
            && self.dual_failures == 0
            && self.soundness_violations == 0
            && self.strict_holes_not_ecn == 0
    }
}

/// Classification laws and soundness against the golden table over every
/// pair and triple at `depth`.
pub fn exhaustive_sweep(depth: u8) -> Result<ModelSweep, DyadicError> {
    let alg = Bw::new(depth)?;
    let regions: Vec<u64> = alg.regions().collect();
    let n = regions.len();
    let index = |x: u64| (x - 1) as usize;
    let mut sweep = ModelSweep {
        depth,
        pairs: n * n,
        ..Default::default()
    };
    let mut rel = vec![BaseRel::Eq; n * n];
    for (i, &x) in regions.iter().enumerate() {
        for (j, &y) in regions.iter().enumerate() {
            match lattice::classify(&alg, &x, &y) {
                Ok(r) => rel[i * n + j] = r,
                Err(_) => sweep.jepd_failures += 1,
            }
        }
    }
    for (i, &x) in regions.iter().enumerate() {
        let xc = index(!x & alg.full);
        for (j, &y) in regions.iter().enumerate() {
            let r = rel[i * n + j];
            if rel[j * n + i] != r.converse() {
                sweep.converse_failures += 1;
            }
            let yc = index(!y & alg.full);
            if rel[i * n + yc] != r.right_dual() || rel[xc * n + j] != r.left_dual() {
                sweep.dual_failures += 1;
            }
            if hole_in(&alg, &x, &y) == HoleKind::StrictHole {
                sweep.strict_holes += 1;
                if r != BaseRel::Ecn {
                    sweep.strict_holes_not_ecn += 1;
                }
            }
        }
    }
    let golden = golden_table();
    sweep.triples = n * n * n;
    sweep.soundness_violations = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut bad = 0;
            for b in 0..n {
                let rab = rel[a * n + b];
                for c in 0..n {
                    if !golden.get(rab, rel[b * n + c]).contains(rel[a * n + c]) {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    Ok(sweep)
}

/// Soundness on random triples at a depth too large for exhaustion.
pub fn sampled_soundness(
    depth: u8,
    samples: usize,
    seed: u64,
) -> Result<(usize, usize), DyadicError> {
    let alg = Bw::new(depth)?;
    let golden = golden_table();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut jepd = 0;
    for _ in 0..samples {
        let mut pick = || rng.gen_range(1..alg.full);
        let (a, b, c) = (pick(), pick(), pick());
        let cls = |x: u64, y: u64| lattice::classify(&alg, &x, &y);
        match (cls(a, b), cls(b, c), cls(a, c)) {
            (Ok(r), Ok(s), Ok(t)) => {
                if !golden.get(r, s).contains(t) {
                    violations += 1;
                }
            }
            _ => jepd += 1,
        }
    }
    Ok((violations, jepd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use BaseRel::*;

    fn x(s: &str, d: u8) -> BwRegion {
        BwRegion::cell(s, d).unwrap()
    }

    #[test]
    fn cells_and_literals() {
        assert_eq!(x("0", 2).bits(), 0b0011);
        assert_eq!(x("11", 2).bits(), 0b1000);
        assert_eq!(BwRegion::parse("x(00)+x(11)", 2).unwrap().bits(), 0b1001);
        assert_eq!(BwRegion::parse("!x(01)", 2).unwrap().bits(), 0b1101);
        assert_eq!(
            BwRegion::parse("x(0)+x(1)", 2),
            Err(DyadicError::Degenerate)
        );
        assert!(BwRegion::parse("y(0)", 2).is_err());
        assert!(BwRegion::cell("012", 3).is_err());
        let r = BwRegion::parse("x(000)+x(001)+x(11)", 3).unwrap();
        assert_eq!(r.to_string(), "x(00)+x(11)");
        assert_eq!("x(00)+x(11)".parse::<BwRegion>().unwrap().depth(), 2);
        assert_eq!(x("1", 1).lift(3).unwrap(), x("1", 3));
    }

    #[test]
    fn contact_examples() {
        let d = 3;
        assert!(contact(&x("0", d), &x("1", d)).unwrap());
        assert!(contact(&x("01", d), &x("01", d)).unwrap());
        assert!(!contact(&x("00", d), &x("11", d)).unwrap());
        assert!(!contact(&x("01", d), &x("10", d)).unwrap());
        assert!(contact(&x("00", d), &x("01", d)).unwrap());
        assert!(contact(&x("01", d), &x("1", d)).unwrap());
        assert!(contact(&x("0", 2), &x("1", 3)).is_err());
    }

    #[test]
    fn classification_examples() {
        let d = 3;
        assert_eq!(classify11(&x("00", d), &x("0", d)).unwrap(), Ntpp);
        assert_eq!(classify11(&x("01", d), &x("0", d)).unwrap(), Tpp);
        assert_eq!(classify11(&x("0", d), &x("1", d)).unwrap(), Ecd);
        assert_eq!(classify11(&x("000", d), &x("00", d)).unwrap(), Ntpp);
    }

    #[test]
    fn hole_examples() {
        let d = 3;
        assert_eq!(
            hole(&x("00", d), &x("01", d)).unwrap(),
            HoleKind::StrictHole
        );
        assert_eq!(hole(&x("0", d), &x("1", d)).unwrap(), HoleKind::Hole);
        assert_eq!(hole(&x("00", d), &x("11", d)).unwrap(), HoleKind::None);
    }

    #[test]
    fn chains() {
        let c = standard_chain(1, 3).unwrap();
        assert_eq!(c, vec![x("00", 3), x("0", 3)]);
        assert_eq!(standard_chain(0, 3).unwrap(), vec![x("0", 3)]);
        assert!(standard_chain(3, 3).is_err());
        for w in standard_chain(2, 4).unwrap().windows(2) {
            assert_eq!(classify11(&w[0], &w[1]).unwrap(), Ntpp);
        }
        assert!(chain_exists(&x("00", 3), &x("0", 3), 1, 3).unwrap());
        assert!(chain_exists(&x("000", 4), &x("0", 4), 2, 4).unwrap());
        assert!(!chain_exists(&x("00", 4), &x("0", 4), 2, 4).unwrap());
    }

    #[test]
    fn a5_example() {
        let xr = x("110", 3).complement();
        assert_eq!(a5_witness(&xr, 5).unwrap(), Some(x("1100", 4)));
    }

    #[test]
    fn axioms_at_depth_two() {
        let rep = check_axioms(2, 4).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.regions, 14);
    }

    #[test]
    fn pody_search() {
        let rep = pody_counterexample(3).unwrap();
        assert_eq!(rep.relation, Pody);
        assert_eq!((rep.tpp_witnesses, rep.ntpp_witnesses), (0, 0));
        assert_eq!(rep.searched, 15);
        assert!(rep.control_holds);
    }

    #[test]
    fn sweep_depth_two() {
        let s = exhaustive_sweep(2).unwrap();
        assert!(s.passed(), "{s:?}");
        assert!(s.strict_holes > 0);
    }
}
