use std::sync::OnceLock;

use super::{BaseRel, Cell, CompTable, GeneratorSet, RelSet};

// Body of the RCC11 extensionality table, rows and columns in the order
// T, Ti, N, Ni, PN, PY, PZ, ECN, ECD, DC. A trailing `x` marks an entry that
// is not extensional in every RCC model. The EQ row and column are
// synthesized from the identity law.
//
// Cell (Ti, ECN) holds ECN, not PZ: the converse law against (ECN, T) and
// the right-dual law against (Ti, T) both force it.
const BODY: [[&str; 10]; 10] = [
    // T
    [
        "T,N",
        "1',T,Ti,DC,PNx,ECNx",
        "N",
        "Tix,Ni,PNx,DC,ECNx",
        "T,N,PN,ECN,DC",
        "Tx,PNx,N,PY,ECN,ECD",
        "Tx,N,PNx,PYx,PZ",
        "ECN,DC",
        "ECN",
        "DC",
    ],
    // Ti
    [
        "1',T,Ti,PNx,PYx,PZ",
        "Ti,Ni",
        "Tx,N,PNx,PYx,PZ",
        "Ni",
        "Ti,Ni,PN,PY,PZ",
        "PY,PZ",
        "PZ",
        "Tix,Ni,PNx,PY,ECN,ECD",
        "PY",
        "Tix,Ni,PNx,ECNx,DC",
    ],
    // N
    [
        "N",
        "Tx,N,PNx,ECNx,DC",
        "N",
        "1',T,Ti,N,Ni,PN,ECN,DC",
        "T,N,PN,ECN,DC",
        "Tx,N,PNx,ECNx,DC",
        "T,N,PN,PY,PZ,ECN,ECD,DC",
        "DC",
        "DC",
        "DC",
    ],
    // Ni
    [
        "Tix,Ni,PNx,PYx,PZ",
        "Ni",
        "1',T,Ti,N,Ni,PN,PY,PZ",
        "Ni",
        "Ti,Ni,PN,PY,PZ",
        "PZ",
        "PZ",
        "Tix,Ni,PNx,PYx,PZ",
        "PZ",
        "Ti,Ni,PN,PY,PZ,DC,ECN,ECD",
    ],
    // PN
    [
        "T,N,PN,PY,PZ",
        "Ti,Ni,PN,ECN,DC",
        "T,N,PN,PY,PZ",
        "Ti,Ni,PN,ECN,DC",
        "1',T,N,Ti,Ni,PN,PY,PZ,DC,ECN,ECD",
        "T,N,PN,PY,PZ",
        "T,N,PN,PY,PZ",
        "Ti,Ni,PN,ECN,DC",
        "PN",
        "Ti,Ni,PN,ECN,DC",
    ],
    // PY
    [
        "PY,PZ",
        "Tix,Ni,PNx,PY,ECN,ECD",
        "PZ",
        "Tix,Ni,PNx,ECNx,DC",
        "Ti,Ni,PN,PY,PZ",
        "1',T,Ti,PNx,PYx,PZ",
        "Tx,N,PNx,PYx,PZ",
        "Ti,Ni",
        "Ti",
        "Ni",
    ],
    // PZ
    [
        "PZ",
        "Tix,Ni,PNx,PYx,PZ",
        "PZ",
        "Ti,Ni,PN,PY,PZ,ECN,ECD,DC",
        "Ti,Ni,PN,PY,PZ",
        "Tix,Ni,PNx,PYx,PZ",
        "1',T,Ti,N,Ni,PN,PY,PZ",
        "Ni",
        "Ni",
        "Ni",
    ],
    // ECN
    [
        "Tx,N,PNx,PY,ECN,ECD",
        "ECN,DC",
        "Tx,N,PNx,PYx,PZ",
        "DC",
        "T,N,PN,ECN,DC",
        "T,N",
        "N",
        "1',T,Ti,PNx,ECNx,DC",
        "T",
        "Tix,Ni,PNx,ECNx,DC",
    ],
    // ECD
    ["PY", "ECN", "PZ", "DC", "PN", "T", "N", "Ti", "1'", "Ni"],
    // DC
    [
        "Tx,N,PNx,ECNx,DC",
        "DC",
        "T,N,PN,PY,PZ,ECN,ECD,DC",
        "DC",
        "T,N,PN,ECN,DC",
        "N",
        "N",
        "Tx,N,PNx,ECNx,DC",
        "N",
        "1',T,Ti,N,Ni,PN,ECN,DC",
    ],
];

const BODY_ORDER: [BaseRel; 10] = [
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

fn abbrev(tok: &str) -> BaseRel {
    match tok {
        "1'" => BaseRel::Eq,
        "T" => BaseRel::Tpp,
        "Ti" => BaseRel::Tppi,
        "N" => BaseRel::Ntpp,
        "Ni" => BaseRel::Ntppi,
        "PN" => BaseRel::Pon,
        "PY" => BaseRel::Pody,
        "PZ" => BaseRel::Podz,
        "ECN" => BaseRel::Ecn,
        "ECD" => BaseRel::Ecd,
        "DC" => BaseRel::Dc,
        other => panic!("bad abbreviation {other}"),
    }
}

fn parse_entry(s: &str) -> Cell {
    let mut cell = Cell::default();
    for tok in s.split(',') {
        let (name, marked) = match tok.strip_suffix('x') {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let r = abbrev(name);
        cell.members.insert(r);
        if marked {
            cell.marks.insert(r);
        }
    }
    cell
}

fn build_golden() -> CompTable {
    let mut t = CompTable::empty();
    for r in BaseRel::ALL {
        t.set(BaseRel::Eq, r, Cell::new(RelSet::singleton(r)));
        t.set(r, BaseRel::Eq, Cell::new(RelSet::singleton(r)));
    }
    for (i, row) in BODY.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            t.set(BODY_ORDER[i], BODY_ORDER[j], parse_entry(entry));
        }
    }
    t
}

/// The reference RCC11 composition table with extensionality marks.
pub fn golden_table() -> CompTable {
    static GOLDEN: OnceLock<CompTable> = OnceLock::new();
    GOLDEN.get_or_init(build_golden).clone()
}

/// The fifteen generator compositions as established on the complemented
/// disk domain: NTPP;NTPP, TPP;NTPP, NTPP;TPP and the twelve further
/// equations. No marks, since that domain is extensional.
pub fn disk_generators() -> GeneratorSet {
    use BaseRel::*;
    let entries: [(BaseRel, BaseRel, &str); 15] = [
        (Ntpp, Ntpp, "N"),
        (Tpp, Ntpp, "N"),
        (Ntpp, Tpp, "N"),
        (Tpp, Tpp, "T,N"),
        (Tpp, Tppi, "1',T,Ti,PN,ECN,DC"),
        (Tpp, Ntppi, "Ti,Ni,PN,ECN,DC"),
        (Tpp, Pon, "T,N,PN,ECN,DC"),
        (Tppi, Tpp, "1',T,Ti,PN,PY,PZ"),
        (Tppi, Ntpp, "T,N,PN,PY,PZ"),
        (Tppi, Pon, "Ti,Ni,PN,PY,PZ"),
        (Ntpp, Ntppi, "1',T,Ti,N,Ni,PN,ECN,DC"),
        (Ntpp, Pon, "T,N,PN,ECN,DC"),
        (Ntppi, Ntpp, "1',T,Ti,N,Ni,PN,PY,PZ"),
        (Ntppi, Pon, "Ti,Ni,PN,PY,PZ"),
        (Pon, Pon, "1',T,Ti,N,Ni,PN,PY,PZ,ECN,ECD,DC"),
    ];
    GeneratorSet::from_cells(entries.iter().map(|&(r, s, e)| (r, s, parse_entry(e))))
        .expect("fifteen generator pairs")
}

/// The reduced table for RCC models in general: the same fifteen cells with
/// their extensionality marks.
pub fn reduced_generators() -> GeneratorSet {
    use BaseRel::*;
    let entries: [(BaseRel, BaseRel, &str); 15] = [
        (Tpp, Tpp, "T,N"),
        (Tpp, Tppi, "1',T,Ti,DC,PNx,ECNx"),
        (Tpp, Ntpp, "N"),
        (Tpp, Ntppi, "Tix,Ni,PNx,ECNx,DC"),
        (Tpp, Pon, "T,N,PN,ECN,DC"),
        (Tppi, Tpp, "1',T,Ti,PNx,PYx,PZ"),
        (Tppi, Ntpp, "Tx,N,PNx,PYx,PZ"),
        (Tppi, Pon, "Ti,Ni,PN,PY,PZ"),
        (Ntpp, Tpp, "N"),
        (Ntpp, Ntpp, "N"),
        (Ntpp, Ntppi, "1',T,Ti,N,Ni,PN,ECN,DC"),
        (Ntpp, Pon, "T,N,PN,ECN,DC"),
        (Ntppi, Ntpp, "1',T,Ti,N,Ni,PN,PY,PZ"),
        (Ntppi, Pon, "Ti,Ni,PN,PY,PZ"),
        (Pon, Pon, "1',T,Ti,N,Ni,PN,DC,PY,PZ,ECN,ECD"),
    ];
    GeneratorSet::from_cells(entries.iter().map(|&(r, s, e)| (r, s, parse_entry(e))))
        .expect("fifteen generator pairs")
}
