use serde::{Deserialize, Serialize};

use super::{
    classify, format_rational, nine_matrix, parse_rational, DiskError, DiskRegion, NineMatrix,
};
use crate::relalg::BaseRel;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
    Float(serde_json::Number),
}

impl Coord {
    fn parse(&self) -> Result<super::Rational, DiskError> {
        match self {
            Coord::Int(n) => Ok(super::rat(*n)),
            Coord::Text(s) => parse_rational(s),
            Coord::Float(n) => parse_rational(&n.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneRegion {
    pub id: String,
    pub kind: String,
    cx: Coord,
    cy: Coord,
    r: Coord,
}

impl SceneRegion {
    pub fn from_region(id: &str, d: &DiskRegion) -> SceneRegion {
        SceneRegion {
            id: id.to_string(),
            kind: d.polarity.name().to_string(),
            cx: Coord::Text(format_rational(&d.cx)),
            cy: Coord::Text(format_rational(&d.cy)),
            r: Coord::Text(format_rational(&d.r)),
        }
    }

    pub fn region(&self) -> Result<DiskRegion, DiskError> {
        DiskRegion::new(
            self.kind.parse()?,
            self.cx.parse()?,
            self.cy.parse()?,
            self.r.parse()?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub regions: Vec<SceneRegion>,
}

impl Scene {
    pub fn regions(&self) -> Result<Vec<(String, DiskRegion)>, DiskError> {
        self.regions
            .iter()
            .map(|r| Ok((r.id.clone(), r.region()?)))
            .collect()
    }
}

/// Relation and matrix for every ordered pair of distinct ids, sorted by
/// `(id1, id2)`.
pub fn classify_scene(
    regions: &[(String, DiskRegion)],
) -> Vec<(String, String, BaseRel, NineMatrix)> {
    let mut rows = Vec::new();
    for (i, (ia, a)) in regions.iter().enumerate() {
        for (j, (ib, b)) in regions.iter().enumerate() {
            if i != j {
                rows.push((ia.clone(), ib.clone(), classify(a, b), nine_matrix(a, b)));
            }
        }
    }
    rows.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    rows
}
