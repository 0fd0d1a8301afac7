use serde::{Deserialize, Serialize};

use super::{PlanarDiagram, Side};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub slots: [u64; 4],
    pub sign: i64,
}

/// Serialized form of a [`PlanarDiagram`]. Edges are 1-based labels, faces
/// are listed as `[edge, side]` boundary incidences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub components: usize,
    pub crossings: Vec<CrossingJson>,
    pub faces: Vec<Vec<(u64, Side)>>,
    pub marked_edge: u64,
    pub face_a: usize,
    pub face_b: usize,
}

impl PlanarDiagram {
    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            components: self.component_count(),
            crossings: self
                .crossings()
                .iter()
                .map(|c| CrossingJson {
                    slots: c.slots().map(|e| e as u64 + 1),
                    sign: c.sign().value(),
                })
                .collect(),
            faces: self
                .faces()
                .iter()
                .map(|f| {
                    f.boundary()
                        .iter()
                        .map(|&(e, s)| (e as u64 + 1, s))
                        .collect()
                })
                .collect(),
            marked_edge: self.marked_edge() as u64 + 1,
            face_a: self.face_a(),
            face_b: self.face_b(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("diagram json is serializable")
    }

    /// Rebuilds a diagram from its JSON form; the derived data (signs, faces,
    /// component count) must agree with what the slots determine.
    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let codes: Vec<[u64; 4]> = j.crossings.iter().map(|c| c.slots).collect();
        let base = PlanarDiagram::from_codes(&codes)?;
        let d = if codes.is_empty() {
            base
        } else {
            let marked = j
                .marked_edge
                .checked_sub(1)
                .ok_or_else(|| Error::Decoration("edge labels start at 1".into()))?;
            base.with_decoration(marked as usize, j.face_a)?
        };
        if d.to_json() != *j {
            return Err(Error::Invalid(
                "diagram json is inconsistent with its crossing slots".into(),
            ));
        }
        Ok(d)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(s)?;
        Self::from_json(&j)
    }
}
