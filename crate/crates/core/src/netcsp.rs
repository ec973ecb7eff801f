//! RCC11 constraint networks: algebraic closure against the composition
//! table and backtracking scenario search.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relalg::{compose, golden_table, BaseRel, CompTable, RelSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("malformed network: {0}")]
    Json(String),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVar(String),
    #[error("diagonal constraint on `{0}` must be EQ")]
    Diagonal(String),
    #[error("variable index {0} out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    vars: Vec<String>,
    cells: Vec<RelSet>,
}

impl Network {
    /// `n` variables named `v0…`, every off-diagonal pair universal.
    pub fn universal(n: usize) -> Network {
        Network::with_vars((0..n).map(|i| format!("v{i}")).collect())
    }

    fn with_vars(vars: Vec<String>) -> Network {
        let n = vars.len();
        let mut cells = vec![RelSet::FULL; n * n];
        for i in 0..n {
            cells[i * n + i] = RelSet::singleton(BaseRel::Eq);
        }
        Network { vars, cells }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> RelSet {
        self.cells[i * self.len() + j]
    }

    fn put(&mut self, i: usize, j: usize, s: RelSet) {
        let n = self.len();
        self.cells[i * n + j] = s;
        self.cells[j * n + i] = s.converse();
    }

    /// Intersects constraint `(i, j)` with `s`, keeping `(j, i)` in step.
    pub fn constrain(&mut self, i: usize, j: usize, s: RelSet) -> Result<(), NetError> {
        let n = self.len();
        if i >= n || j >= n {
            return Err(NetError::OutOfRange(i.max(j)));
        }
        if i == j {
            if !s.contains(BaseRel::Eq) {
                return Err(NetError::Diagonal(self.vars[i].clone()));
            }
            return Ok(());
        }
        let cur = self.get(i, j);
        self.put(i, j, cur.intersection(s));
        Ok(())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_atomic(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn has_empty(&self) -> bool {
        self.cells.iter().any(|c| c.is_empty())
    }

    pub fn is_subset_of(&self, other: &Network) -> bool {
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(a, b)| a.is_subset(*b))
    }

    pub fn converse_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.get(j, i) == self.get(i, j).converse()))
    }

    pub fn from_json(text: &str) -> Result<Network, NetError> {
        let file: NetworkFile =
            serde_json::from_str(text).map_err(|e| NetError::Json(e.to_string()))?;
        let mut seen = std::collections::BTreeSet::new();
        for v in &file.vars {
            if !seen.insert(v.as_str()) {
                return Err(NetError::DuplicateVar(v.clone()));
            }
        }
        let mut net = Network::with_vars(file.vars);
        for c in file.constraints {
            let i = net
                .index_of(&c.i)
                .ok_or_else(|| NetError::UnknownVar(c.i.clone()))?;
            let j = net
                .index_of(&c.j)
                .ok_or_else(|| NetError::UnknownVar(c.j.clone()))?;
            let s: RelSet = c.rels.into_iter().collect();
            if i == j && s != RelSet::singleton(BaseRel::Eq) {
                return Err(NetError::Diagonal(c.i));
            }
            net.constrain(i, j, s)?;
        }
        Ok(net)
    }

    /// Every pair `i < j`, in index order.
    pub fn to_file(&self) -> NetworkFile {
        let n = self.len();
        let mut constraints = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                constraints.push(ConstraintEntry {
                    i: self.vars[i].clone(),
                    j: self.vars[j].clone(),
                    rels: self.get(i, j).iter().collect(),
                });
            }
        }
        NetworkFile {
            vars: self.vars.clone(),
            constraints,
        }
    }

    /// Random network: each pair is constrained with probability `density`
    /// to a random nonempty subset.
    pub fn random(n: usize, density: f64, seed: u64) -> Network {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut net = Network::universal(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    let bits = rng.gen_range(1..(1u16 << 11));
                    net.put(i, j, RelSet::from_bits(bits).expect("11 bits"));
                }
            }
        }
        net
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkFile {
    pub vars: Vec<String>,
    pub constraints: Vec<ConstraintEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintEntry {
    pub i: String,
    pub j: String,
    pub rels: Vec<BaseRel>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Closed(Network),
    Inconsistent,
}

/// Refines every `(i, k)` by `(i, j) ∘ (j, k)` until nothing changes,
/// sweeping triples in lexicographic order.
pub fn closure_with(table: &CompTable, net: &Network) -> Closure {
    let mut w = net.clone();
    let n = w.len();
    if w.has_empty() {
        return Closure::Inconsistent;
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let cur = w.get(i, k);
                    let next = cur.intersection(compose(table, w.get(i, j), w.get(j, k)));
                    if next != cur {
                        if next.is_empty() {
                            return Closure::Inconsistent;
                        }
                        w.put(i, k, next);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Closure::Closed(w);
        }
    }
}

pub fn closure(net: &Network) -> Closure {
    closure_with(&golden_table(), net)
}

/// An atomic closed refinement, branching on the first non-atomic pair
/// `i < j` and trying base relations in canonical order.
pub fn scenario_search(net: &Network) -> Option<Network> {
    let table = golden_table();
    search(&table, net)
}

fn search(table: &CompTable, net: &Network) -> Option<Network> {
    let Closure::Closed(w) = closure_with(table, net) else {
        return None;
    };
    let n = w.len();
    let open = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| w.get(i, j).len() > 1);
    let Some((i, j)) = open else {
        return Some(w);
    };
    for r in w.get(i, j).iter() {
        let mut next = w.clone();
        next.put(i, j, RelSet::singleton(r));
        if let Some(s) = search(table, &next) {
            return Some(s);
        }
    }
    None
}

/// Pairs whose constraint differs between two networks over the same
/// variables, as `(i, j, before, after)` with `i < j`.
pub fn changes(before: &Network, after: &Network) -> BTreeMap<(String, String), (RelSet, RelSet)> {
    let n = before.len();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            if before.get(i, j) != after.get(i, j) {
                out.insert(
                    (before.vars[i].clone(), before.vars[j].clone()),
                    (before.get(i, j), after.get(i, j)),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relset;

    fn net3(xy: RelSet, yz: RelSet, xz: RelSet) -> Network {
        let mut n = Network::universal(3);
        n.constrain(0, 1, xy).unwrap();
        n.constrain(1, 2, yz).unwrap();
        n.constrain(0, 2, xz).unwrap();
        n
    }

    #[test]
    fn tpp_ntpp_refines() {
        let n = net3(relset![Tpp], relset![Ntpp], RelSet::FULL);
        let Closure::Closed(c) = closure(&n) else {
            panic!()
        };
        assert_eq!(c.get(0, 2), relset![Ntpp]);
        assert_eq!(c.get(2, 0), relset![Ntppi]);
    }

    #[test]
    fn ecd_triangle_is_inconsistent() {
        let n = net3(relset![Ecd], relset![Ecd], relset![Ecd]);
        assert_eq!(closure(&n), Closure::Inconsistent);
        assert_eq!(scenario_search(&n), None);
    }

    #[test]
    fn universal_is_a_fixpoint() {
        let n = Network::universal(4);
        assert_eq!(closure(&n), Closure::Closed(n));
    }

    #[test]
    fn scenarios() {
        let n = net3(relset![Tpp], relset![Tpp], RelSet::FULL);
        let s = scenario_search(&n).unwrap();
        assert!(s.is_atomic());
        assert!(relset![Tpp, Ntpp].contains(s.get(0, 2).as_single().unwrap()));
        let one = Network::universal(1);
        assert_eq!(scenario_search(&one), Some(one));
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{"vars":["x","y","z"],"constraints":[{"i":"x","j":"y","rels":["TPP"]},{"i":"z","j":"y","rels":["NTPPI"]}]}"#;
        let n = Network::from_json(text).unwrap();
        assert_eq!(n.get(1, 2), relset![Ntpp]);
        let back = serde_json::to_string(&n.to_file()).unwrap();
        assert_eq!(Network::from_json(&back).unwrap(), n);
        let diag = r#"{"vars":["x"],"constraints":[{"i":"x","j":"x","rels":["DC"]}]}"#;
        assert_eq!(
            Network::from_json(diag),
            Err(NetError::Diagonal("x".into()))
        );
        let unknown = r#"{"vars":["x"],"constraints":[{"i":"x","j":"q","rels":["DC"]}]}"#;
        assert_eq!(
            Network::from_json(unknown),
            Err(NetError::UnknownVar("q".into()))
        );
        assert!(matches!(Network::from_json("{"), Err(NetError::Json(_))));
        assert!(matches!(
            Network::from_json(r#"{"vars":["x","x"],"constraints":[]}"#),
            Err(NetError::DuplicateVar(_))
        ));
    }

    #[test]
    fn random_networks_keep_converse_symmetry() {
        for seed in 0..20 {
            let n = Network::random(5, 0.6, seed);
            assert!(n.converse_symmetric());
            if let Closure::Closed(c) = closure(&n) {
                assert!(c.converse_symmetric() && c.is_subset_of(&n));
            }
        }
    }
}
