use std::collections::BTreeMap;

use super::{BaseRel, Cell, CompTable, RelAlgError, RelSet, Side};

use BaseRel::*;

/// The fifteen `(R, S)` pairs from which the whole table is derived. Every
/// other pair over the generating set is a converse of one of these, and
/// every pair outside it reduces onto the generating set by duality.
pub const GENERATOR_PAIRS: [(BaseRel, BaseRel); 15] = [
    (Tpp, Tpp),
    (Tpp, Tppi),
    (Tpp, Ntpp),
    (Tpp, Ntppi),
    (Tpp, Pon),
    (Tppi, Tpp),
    (Tppi, Ntpp),
    (Tppi, Pon),
    (Ntpp, Tpp),
    (Ntpp, Ntpp),
    (Ntpp, Ntppi),
    (Ntpp, Pon),
    (Ntppi, Ntpp),
    (Ntppi, Pon),
    (Pon, Pon),
];

/// Cells for exactly the generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    cells: BTreeMap<(BaseRel, BaseRel), Cell>,
}

impl GeneratorSet {
    pub fn from_cells<I>(cells: I) -> Result<GeneratorSet, RelAlgError>
    where
        I: IntoIterator<Item = (BaseRel, BaseRel, Cell)>,
    {
        let mut map = BTreeMap::new();
        for (r, s, c) in cells {
            if !GENERATOR_PAIRS.contains(&(r, s)) || map.insert((r, s), c).is_some() {
                return Err(RelAlgError::UnexpectedGenerator(r, s));
            }
        }
        for (r, s) in GENERATOR_PAIRS {
            if !map.contains_key(&(r, s)) {
                return Err(RelAlgError::MissingGenerator(r, s));
            }
        }
        Ok(GeneratorSet { cells: map })
    }

    /// Takes the generator cells out of a full table.
    pub fn from_table(t: &CompTable) -> GeneratorSet {
        GeneratorSet {
            cells: GENERATOR_PAIRS
                .iter()
                .map(|&(r, s)| ((r, s), t.cell(r, s)))
                .collect(),
        }
    }

    pub fn get(&self, r: BaseRel, s: BaseRel) -> Option<Cell> {
        self.cells.get(&(r, s)).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BaseRel, BaseRel, Cell)> + '_ {
        self.cells.iter().map(|(&(r, s), &c)| (r, s, c))
    }
}

fn base_cell(g: &GeneratorSet, m: BaseRel, n: BaseRel) -> Result<Cell, RelAlgError> {
    if m == Eq {
        return Ok(Cell::new(RelSet::singleton(n)));
    }
    if n == Eq {
        return Ok(Cell::new(RelSet::singleton(m)));
    }
    if let Some(c) = g.get(m, n) {
        return Ok(c);
    }
    g.get(n.converse(), m.converse())
        .map(Cell::converse)
        .ok_or(RelAlgError::Unreachable(m, n))
}

/// Fills all 121 cells from the generators using the identity law, converse
/// and the left and right dual laws. Marks travel with their relations.
pub fn derive_table(g: &GeneratorSet) -> Result<CompTable, RelAlgError> {
    let mut t = CompTable::empty();
    for a in BaseRel::ALL {
        for b in BaseRel::ALL {
            // a = ^dM and b = N^d, both duals being involutions
            let m = if a.is_generating() { a } else { a.left_dual() };
            let n = if b.is_generating() { b } else { b.right_dual() };
            let mut c = base_cell(g, m, n)?;
            if n != b {
                c = c.dual(Side::Right);
            }
            if m != a {
                c = c.dual(Side::Left);
            }
            t.set(a, b, c);
        }
    }
    Ok(t)
}
