use std::fmt;

use serde::Serialize;

use super::{BaseRel, RelAlgError, RelSet, Side};

/// One table entry: the member relations and which of them carry the
/// non-extensionality mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Cell {
    pub members: RelSet,
    pub marks: RelSet,
}

impl Cell {
    pub fn new(members: RelSet) -> Cell {
        Cell {
            members,
            marks: RelSet::EMPTY,
        }
    }

    pub fn with_marks(members: RelSet, marks: RelSet) -> Cell {
        Cell { members, marks }
    }

    pub fn converse(self) -> Cell {
        Cell {
            members: self.members.converse(),
            marks: self.marks.converse(),
        }
    }

    pub fn dual(self, side: Side) -> Cell {
        Cell {
            members: self.members.dual(side),
            marks: self.marks.dual(side),
        }
    }

    fn write_entry(&self, out: &mut String) {
        let mut first = true;
        for r in self.members.iter() {
            if !first {
                out.push('|');
            }
            first = false;
            out.push_str(r.token());
            if self.marks.contains(r) {
                out.push('*');
            }
        }
    }
}

/// An 11x11 composition table indexed by canonical base-relation order.
#[derive(Clone, PartialEq, Eq)]
pub struct CompTable {
    cells: [[Cell; 11]; 11],
}

impl CompTable {
    /// A table with every cell empty; only useful as a builder start.
    pub fn empty() -> CompTable {
        CompTable {
            cells: [[Cell::default(); 11]; 11],
        }
    }

    pub fn cell(&self, r: BaseRel, s: BaseRel) -> Cell {
        self.cells[r.index()][s.index()]
    }

    pub fn get(&self, r: BaseRel, s: BaseRel) -> RelSet {
        self.cells[r.index()][s.index()].members
    }

    pub fn set(&mut self, r: BaseRel, s: BaseRel, cell: Cell) {
        self.cells[r.index()][s.index()] = cell;
    }

    pub fn is_marked(&self, r: BaseRel, s: BaseRel, t: BaseRel) -> bool {
        self.cell(r, s).marks.contains(t)
    }

    /// Every `(r, s, t)` with `t` an entry of cell `(r, s)`.
    pub fn triads(&self) -> impl Iterator<Item = (BaseRel, BaseRel, BaseRel)> + '_ {
        BaseRel::ALL.into_iter().flat_map(move |r| {
            BaseRel::ALL
                .into_iter()
                .flat_map(move |s| self.get(r, s).iter().map(move |t| (r, s, t)))
        })
    }

    pub fn entry_count(&self) -> usize {
        self.cells.iter().flatten().map(|c| c.members.len()).sum()
    }

    /// Serializes to the line format `R,S -> T1|T2*|...`, one line per ordered
    /// pair sorted by (row, column).
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(121 * 40);
        for r in BaseRel::ALL {
            for s in BaseRel::ALL {
                out.push_str(r.token());
                out.push(',');
                out.push_str(s.token());
                out.push_str(" -> ");
                self.cell(r, s).write_entry(&mut out);
                out.push('\n');
            }
        }
        out
    }

    /// Parses the line format. All 121 pairs must appear exactly once;
    /// blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<CompTable, RelAlgError> {
        let mut table = CompTable::empty();
        let mut seen = [[false; 11]; 11];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| RelAlgError::Parse { line: lineno, msg };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err("missing `->`".into()))?;
            let (r, s) = lhs
                .trim()
                .split_once(',')
                .ok_or_else(|| err("expected `R,S` before `->`".into()))?;
            let r: BaseRel = r
                .trim()
                .parse()
                .map_err(|e: RelAlgError| err(e.to_string()))?;
            let s: BaseRel = s
                .trim()
                .parse()
                .map_err(|e: RelAlgError| err(e.to_string()))?;
            if seen[r.index()][s.index()] {
                return Err(err(format!("duplicate pair {r},{s}")));
            }
            seen[r.index()][s.index()] = true;
            let mut cell = Cell::default();
            let rhs = rhs.trim();
            if !rhs.is_empty() {
                for tok in rhs.split('|') {
                    let tok = tok.trim();
                    let (name, marked) = match tok.strip_suffix('*') {
                        Some(n) => (n, true),
                        None => (tok, false),
                    };
                    let t: BaseRel = name.parse().map_err(|e: RelAlgError| err(e.to_string()))?;
                    cell.members.insert(t);
                    if marked {
                        cell.marks.insert(t);
                    }
                }
            }
            table.set(r, s, cell);
        }
        for r in BaseRel::ALL {
            for s in BaseRel::ALL {
                if !seen[r.index()][s.index()] {
                    return Err(RelAlgError::Parse {
                        line: text.lines().count(),
                        msg: format!("pair {r},{s} missing"),
                    });
                }
            }
        }
        Ok(table)
    }

    /// Pairs whose members or marks differ.
    pub fn diff(&self, other: &CompTable) -> Vec<(BaseRel, BaseRel, Cell, Cell)> {
        let mut out = Vec::new();
        for r in BaseRel::ALL {
            for s in BaseRel::ALL {
                let (a, b) = (self.cell(r, s), other.cell(r, s));
                if a != b {
                    out.push((r, s, a, b));
                }
            }
        }
        out
    }

    /// Same members in every cell, marks ignored.
    pub fn same_members(&self, other: &CompTable) -> bool {
        BaseRel::ALL.into_iter().all(|r| {
            BaseRel::ALL
                .into_iter()
                .all(|s| self.get(r, s) == other.get(r, s))
        })
    }
}

impl fmt::Debug for CompTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Weak composition lifted to relation sets: the union of the table cells
/// over all member pairs.
pub fn compose(t: &CompTable, s1: RelSet, s2: RelSet) -> RelSet {
    let mut out = RelSet::EMPTY;
    for r1 in s1.iter() {
        for r2 in s2.iter() {
            out = out.union(t.get(r1, r2));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Converse,
    RightDual,
    LeftDual,
    IdentityLeft,
    IdentityRight,
    NonEmpty,
    MarkOutsideCell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub row: BaseRel,
    pub col: BaseRel,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub identities_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, law: Law, row: BaseRel, col: BaseRel) -> bool {
        self.violations
            .iter()
            .any(|v| v.law == law && v.row == row && v.col == col)
    }

    fn check(&mut self, law: Law, row: BaseRel, col: BaseRel, expected: Cell, found: Cell) {
        self.identities_checked += 1;
        if expected != found {
            self.violations.push(Violation {
                law,
                row,
                col,
                expected: render(expected),
                found: render(found),
            });
        }
    }
}

fn render(c: Cell) -> String {
    let mut s = String::new();
    c.write_entry(&mut s);
    s
}

/// Checks the converse law, both dual laws, the identity laws and
/// non-emptiness on every cell. Marks are carried through the same laws.
pub fn validate_table(t: &CompTable) -> ValidationReport {
    let mut rep = ValidationReport::default();
    for m in BaseRel::ALL {
        for n in BaseRel::ALL {
            let c = t.cell(m, n);
            rep.identities_checked += 1;
            if c.members.is_empty() {
                rep.violations.push(Violation {
                    law: Law::NonEmpty,
                    row: m,
                    col: n,
                    expected: "non-empty".into(),
                    found: String::new(),
                });
            }
            rep.identities_checked += 1;
            if !c.marks.is_subset(c.members) {
                rep.violations.push(Violation {
                    law: Law::MarkOutsideCell,
                    row: m,
                    col: n,
                    expected: render(Cell::new(c.members)),
                    found: render(c),
                });
            }
            rep.check(
                Law::Converse,
                m,
                n,
                t.cell(n.converse(), m.converse()).converse(),
                c,
            );
            rep.check(
                Law::RightDual,
                m,
                n.right_dual(),
                c.dual(Side::Right),
                t.cell(m, n.right_dual()),
            );
            rep.check(
                Law::LeftDual,
                m.left_dual(),
                n,
                c.dual(Side::Left),
                t.cell(m.left_dual(), n),
            );
        }
        let id = BaseRel::Eq;
        rep.check(
            Law::IdentityLeft,
            id,
            m,
            Cell::new(RelSet::singleton(m)),
            t.cell(id, m),
        );
        rep.check(
            Law::IdentityRight,
            m,
            id,
            Cell::new(RelSet::singleton(m)),
            t.cell(m, id),
        );
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relalg::golden_table;
    use crate::relset;
    use BaseRel::*;

    #[test]
    fn text_format_line_shape() {
        let t = golden_table();
        let text = t.to_text();
        assert_eq!(text.lines().count(), 121);
        assert_eq!(text.lines().next().unwrap(), "EQ,EQ -> EQ");
        assert!(text.contains("\nTPP,TPPI -> EQ|TPP|TPPI|PON*|ECN*|DC\n"));
        assert!(text.ends_with("DC,DC -> EQ|TPP|TPPI|NTPP|NTPPI|PON|ECN|DC\n"));
    }

    #[test]
    fn parse_rejects_missing_and_duplicate_pairs() {
        let text = golden_table().to_text();
        let short: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert!(CompTable::from_text(&short).is_err());
        let dup = format!("{text}EQ,EQ -> EQ\n");
        assert!(matches!(
            CompTable::from_text(&dup),
            Err(RelAlgError::Parse { line: 122, .. })
        ));
        let bad = text.replacen("EQ,EQ -> EQ", "EQ,EQ -> EQQ", 1);
        assert!(matches!(
            CompTable::from_text(&bad),
            Err(RelAlgError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn compose_examples() {
        let t = golden_table();
        assert_eq!(
            compose(&t, relset![Tppi], relset![Tpp]),
            relset![Eq, Tpp, Tppi, Pon, Pody, Podz]
        );
        assert_eq!(compose(&t, relset![Ecd], relset![Ecd]), relset![Eq]);
        assert_eq!(compose(&t, relset![Ecn], relset![Ecn]), t.get(Tpp, Tppi));
        assert_eq!(compose(&t, relset![Eq], relset![Pon, Dc]), relset![Pon, Dc]);
        assert_eq!(compose(&t, RelSet::EMPTY, RelSet::FULL), RelSet::EMPTY);
    }

    #[test]
    fn injected_faults_are_reported() {
        let mut t = golden_table();
        t.set(Tpp, Tpp, Cell::new(relset![Dc]));
        let rep = validate_table(&t);
        assert!(rep.has(Law::Converse, Tppi, Tppi));

        let mut t = golden_table();
        t.set(Pon, Ecd, Cell::default());
        let rep = validate_table(&t);
        assert!(rep.has(Law::NonEmpty, Pon, Ecd));

        let mut t = golden_table();
        t.set(Eq, Dc, Cell::new(relset![Dc, Ecn]));
        assert!(validate_table(&t).has(Law::IdentityLeft, Eq, Dc));
    }
}
