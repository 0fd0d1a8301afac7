//! Oriented link projections on the sphere.
//!
//! A [`PlanarDiagram`] is built from an oriented PD code. Every crossing has
//! four slots listed counterclockwise starting with the incoming under-strand;
//! quadrant `q` of a crossing is the corner between slot `q` and slot `q + 1`.
//! Faces are recovered from this rotation system, so a code is accepted only
//! if it traces out exactly `n + 2` faces.

mod coloring;
mod gauss;
mod json;
mod pd;

pub use coloring::{BlackGraph, Color, Coloring};
pub use gauss::parse_gauss;
pub use json::DiagramJson;
pub use pd::parse_pd;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type CrossingId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Side of an oriented edge, looking along its direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// One end of an edge: the crossing it attaches to and the slot it occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: CrossingId,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    slots: [EdgeId; 4],
    sign: Sign,
    faces: [FaceId; 4],
}

impl Crossing {
    /// Edges at the four slots, counterclockwise from the incoming under-strand.
    pub fn slots(&self) -> [EdgeId; 4] {
        self.slots
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Face containing quadrant `q`.
    pub fn face(&self, q: usize) -> FaceId {
        self.faces[q]
    }

    pub fn faces(&self) -> [FaceId; 4] {
        self.faces
    }

    /// The quadrant bounded by both incoming edges.
    pub fn pointed_toward(&self) -> usize {
        match self.sign {
            Sign::Positive => 0,
            Sign::Negative => 3,
        }
    }

    /// The quadrant bounded by both outgoing edges.
    pub fn pointed_away(&self) -> usize {
        (self.pointed_toward() + 2) % 4
    }

    /// Whether the counterclockwise-first edge of quadrant `q` is the
    /// under-strand. Quadrants 0 and 2 are under-first at every crossing.
    pub fn is_under_first(q: usize) -> bool {
        q.is_multiple_of(2)
    }

    pub fn is_over_first(q: usize) -> bool {
        !Self::is_under_first(q)
    }

    /// The two quadrants whose closure contains the edge at `slot`.
    pub fn quadrants_at_slot(slot: usize) -> [usize; 2] {
        [(slot + 3) % 4, slot]
    }

    /// True when two quadrants of this crossing lie in the same face.
    pub fn is_nugatory(&self) -> bool {
        let f = self.faces;
        (0..4).any(|i| (i + 1..4).any(|j| f[i] == f[j]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    tail: End,
    head: End,
    component: usize,
    left: FaceId,
    right: FaceId,
}

impl Edge {
    pub fn tail(&self) -> End {
        self.tail
    }

    pub fn head(&self) -> End {
        self.head
    }

    pub fn component(&self) -> usize {
        self.component
    }

    pub fn face(&self, side: Side) -> FaceId {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    corners: Vec<(CrossingId, usize)>,
    boundary: Vec<(EdgeId, Side)>,
}

impl Face {
    /// Crossing quadrants making up this face, in boundary order.
    pub fn corners(&self) -> &[(CrossingId, usize)] {
        &self.corners
    }

    /// Boundary edges with the side of each edge the face lies on.
    pub fn boundary(&self) -> &[(EdgeId, Side)] {
        &self.boundary
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

/// A connected, oriented link projection on the sphere with a distinguished
/// edge and a distinguished ("outer") face adjacent to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    components: Vec<Vec<EdgeId>>,
    faces: Vec<Face>,
    marked_edge: EdgeId,
    face_a: FaceId,
    face_b: FaceId,
}

impl PlanarDiagram {
    /// The crossingless unknot: one circle, two faces.
    pub fn unknot() -> Self {
        let empty = || Face {
            corners: Vec::new(),
            boundary: Vec::new(),
        };
        PlanarDiagram {
            crossings: Vec::new(),
            edges: Vec::new(),
            components: vec![Vec::new()],
            faces: vec![empty(), empty()],
            marked_edge: 0,
            face_a: 0,
            face_b: 1,
        }
    }

    /// Builds a diagram from oriented PD quadruples (edge labels starting at 1).
    pub fn from_codes(codes: &[[u64; 4]]) -> Result<Self> {
        if codes.is_empty() {
            return Ok(Self::unknot());
        }
        let n = codes.len();
        let ends = collect_ends(codes)?;
        let slots: Vec<[EdgeId; 4]> = codes.iter().map(|c| c.map(|l| (l - 1) as EdgeId)).collect();

        check_connected(n, &ends)?;
        let (components, heads) = orient_components(&slots, &ends)?;

        let mut edge_component = vec![0; 2 * n];
        for (i, comp) in components.iter().enumerate() {
            for &e in comp {
                edge_component[e] = i;
            }
        }

        let (faces, corner_face) = trace_faces(&slots, &ends, &heads);
        if faces.len() != n + 2 {
            return Err(Error::NonPlanar {
                faces: faces.len(),
                expected: n + 2,
            });
        }

        let crossings = (0..n)
            .map(|c| {
                let over_in = heads[slots[c][1]]
                    == End {
                        crossing: c,
                        slot: 1,
                    };
                Crossing {
                    slots: slots[c],
                    sign: if over_in {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    },
                    faces: corner_face[c],
                }
            })
            .collect::<Vec<_>>();

        let edges = (0..2 * n)
            .map(|e| {
                let head = heads[e];
                let tail = other_end(&ends[e], head);
                Edge {
                    tail,
                    head,
                    component: edge_component[e],
                    left: corner_face[tail.crossing][tail.slot],
                    right: corner_face[tail.crossing][(tail.slot + 3) % 4],
                }
            })
            .collect::<Vec<_>>();

        let mut d = PlanarDiagram {
            crossings,
            edges,
            components,
            faces,
            marked_edge: 0,
            face_a: 0,
            face_b: 0,
        };
        d.check_quadrant_roles()?;
        let (marked, face_a) = d.default_decoration();
        d.set_decoration(marked, face_a)?;
        Ok(d)
    }

    // Orientation-derived roles are recomputed from edge heads and must match
    // the slot convention: under-strand in at slot 0 and out at slot 2.
    fn check_quadrant_roles(&self) -> Result<()> {
        for (c, x) in self.crossings.iter().enumerate() {
            let under_in = self.edges[x.slots[0]].head
                == End {
                    crossing: c,
                    slot: 0,
                };
            let under_out = self.edges[x.slots[2]].tail
                == End {
                    crossing: c,
                    slot: 2,
                };
            let (a, b) = match x.sign {
                Sign::Positive => (1, 3),
                Sign::Negative => (3, 1),
            };
            let over_ok = self.edges[x.slots[a]].head
                == End {
                    crossing: c,
                    slot: a,
                }
                && self.edges[x.slots[b]].tail
                    == End {
                        crossing: c,
                        slot: b,
                    };
            if !(under_in && under_out && over_ok) {
                return Err(Error::Orientation(format!(
                    "strands through crossing {} are not coherently oriented",
                    c + 1
                )));
            }
        }
        Ok(())
    }

    fn default_decoration(&self) -> (EdgeId, FaceId) {
        let marked = self.edges.len() - 1;
        let e = &self.edges[marked];
        let (l, r) = (e.left, e.right);
        let face_a = if self.faces[r].len() > self.faces[l].len() {
            r
        } else {
            l
        };
        (marked, face_a)
    }

    fn set_decoration(&mut self, marked: EdgeId, face_a: FaceId) -> Result<()> {
        let e = self
            .edges
            .get(marked)
            .ok_or_else(|| Error::Decoration(format!("no edge {}", marked + 1)))?;
        let face_b = if e.left == face_a {
            e.right
        } else if e.right == face_a {
            e.left
        } else {
            return Err(Error::Decoration(format!(
                "face {} is not adjacent to edge {}",
                face_a,
                marked + 1
            )));
        };
        if face_a == face_b {
            return Err(Error::Decoration(format!(
                "edge {} has the same face on both sides",
                marked + 1
            )));
        }
        self.marked_edge = marked;
        self.face_a = face_a;
        self.face_b = face_b;
        Ok(())
    }

    /// A copy with a different distinguished edge and outer face.
    pub fn with_decoration(&self, marked: EdgeId, face_a: FaceId) -> Result<Self> {
        if self.crossings.is_empty() {
            return Err(Error::Decoration(
                "the crossingless unknot has no edges".into(),
            ));
        }
        let mut d = self.clone();
        d.set_decoration(marked, face_a)?;
        Ok(d)
    }

    /// Re-decorates with `marked` as distinguished edge, choosing the outer
    /// face by the default rule (larger adjacent face, left side on ties).
    pub fn with_marked_edge(&self, marked: EdgeId) -> Result<Self> {
        let e = self
            .edges
            .get(marked)
            .ok_or_else(|| Error::Decoration(format!("no edge {}", marked + 1)))?;
        let face_a = if self.faces[e.right].len() > self.faces[e.left].len() {
            e.right
        } else {
            e.left
        };
        self.with_decoration(marked, face_a)
    }

    /// Every legal (marked edge, outer face) pair.
    pub fn decorations(&self) -> Vec<(EdgeId, FaceId)> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(i, e)| [(i, e.left), (i, e.right)])
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, c: CrossingId) -> &Crossing {
        &self.crossings[c]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Edge sequences of each component in the direction of travel.
    pub fn components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn marked_edge(&self) -> EdgeId {
        self.marked_edge
    }

    pub fn face_a(&self) -> FaceId {
        self.face_a
    }

    pub fn face_b(&self) -> FaceId {
        self.face_b
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn positive_crossings(&self) -> usize {
        self.crossings
            .iter()
            .filter(|c| c.sign == Sign::Positive)
            .count()
    }

    /// The PD code this diagram was built from (1-based labels).
    pub fn pd_code(&self) -> Vec<[u64; 4]> {
        self.crossings
            .iter()
            .map(|c| c.slots.map(|e| e as u64 + 1))
            .collect()
    }

    /// Which side of the marked edge the outer face lies on.
    pub fn outer_side(&self) -> Side {
        if self.crossings.is_empty() || self.edges[self.marked_edge].left == self.face_a {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossing().is_none()
    }

    pub fn nugatory_crossing(&self) -> Option<CrossingId> {
        self.crossings.iter().position(Crossing::is_nugatory)
    }

    /// True iff every component alternates over/under at successive crossings.
    pub fn is_alternating(&self) -> bool {
        self.components.iter().all(|comp| {
            let passes: Vec<bool> = comp
                .iter()
                .map(|&e| {
                    let h = self.edges[e].head;
                    h.slot.is_multiple_of(2)
                })
                .collect();
            let k = passes.len();
            (0..k).all(|i| passes[i] != passes[(i + 1) % k])
        })
    }

    /// All crossings switched; orientation and decoration side preserved.
    pub fn mirror(&self) -> Self {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let codes: Vec<[u64; 4]> = self
            .crossings
            .iter()
            .map(|c| {
                let s = c.slots.map(|e| e as u64 + 1);
                match c.sign {
                    Sign::Positive => [s[1], s[2], s[3], s[0]],
                    Sign::Negative => [s[3], s[0], s[1], s[2]],
                }
            })
            .collect();
        let mut m = Self::from_codes(&codes).expect("mirror of a valid diagram is valid");
        let e = &m.edges[self.marked_edge];
        let face_a = match self.outer_side() {
            Side::Left => e.left,
            Side::Right => e.right,
        };
        m.set_decoration(self.marked_edge, face_a)
            .expect("mirror keeps the face structure");
        m
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "Loop[1]");
        }
        for (i, c) in self.pd_code().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X[{},{},{},{}]", c[0], c[1], c[2], c[3])?;
        }
        Ok(())
    }
}

fn other_end(ends: &[End; 2], at: End) -> End {
    if ends[0] == at {
        ends[1]
    } else {
        ends[0]
    }
}

fn collect_ends(codes: &[[u64; 4]]) -> Result<Vec<[End; 2]>> {
    let n = codes.len();
    let mut seen: std::collections::BTreeMap<u64, Vec<End>> = Default::default();
    for (c, code) in codes.iter().enumerate() {
        for (slot, &label) in code.iter().enumerate() {
            seen.entry(label)
                .or_default()
                .push(End { crossing: c, slot });
        }
    }
    let once: Vec<String> = seen
        .iter()
        .filter(|(_, v)| v.len() == 1)
        .map(|(l, _)| l.to_string())
        .collect();
    if !once.is_empty() {
        return Err(Error::Labels(format!(
            "labels {} appear once",
            once.join(",")
        )));
    }
    let many: Vec<String> = seen
        .iter()
        .filter(|(_, v)| v.len() > 2)
        .map(|(l, _)| l.to_string())
        .collect();
    if !many.is_empty() {
        return Err(Error::Labels(format!(
            "labels {} appear more than twice",
            many.join(",")
        )));
    }
    let expected: Vec<u64> = (1..=2 * n as u64).collect();
    let found: Vec<u64> = seen.keys().copied().collect();
    if found != expected {
        return Err(Error::Labels(format!(
            "labels must be exactly 1..{} for {} crossings",
            2 * n,
            n
        )));
    }
    Ok(seen.into_values().map(|v| [v[0], v[1]]).collect())
}

fn check_connected(n: usize, ends: &[[End; 2]]) -> Result<()> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for [a, b] in ends {
        let (ra, rb) = (find(&mut parent, a.crossing), find(&mut parent, b.crossing));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    if (0..n).all(|c| find(&mut parent, c) == root) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Walks each component along strand continuations (slot `s` continues to
/// slot `s + 2`) and orients it so that under-strands run from slot 0 to
/// slot 2. Components that never pass under are oriented by ascending labels.
/// Returns the oriented edge cycles and the head end of every edge.
fn orient_components(
    slots: &[[EdgeId; 4]],
    ends: &[[End; 2]],
) -> Result<(Vec<Vec<EdgeId>>, Vec<End>)> {
    let m = ends.len();
    let mut visited = vec![false; m];
    let mut heads = vec![ends[0][0]; m];
    let mut components = Vec::new();

    for start in 0..m {
        if visited[start] {
            continue;
        }
        // (edge, entry end) pairs in walking order
        let mut walk: Vec<(EdgeId, End)> = Vec::new();
        let mut e = start;
        let mut entry = ends[start][1];
        loop {
            visited[e] = true;
            walk.push((e, entry));
            let exit_slot = (entry.slot + 2) % 4;
            let next = slots[entry.crossing][exit_slot];
            let exit = End {
                crossing: entry.crossing,
                slot: exit_slot,
            };
            let next_entry = other_end(&ends[next], exit);
            if next == start && next_entry == ends[start][1] {
                break;
            }
            e = next;
            entry = next_entry;
            if walk.len() > m {
                return Err(Error::Orientation("strand walk does not close".into()));
            }
        }

        let forward = walk.iter().any(|(_, x)| x.slot == 0);
        let backward = walk.iter().any(|(_, x)| x.slot == 2);
        let reverse = match (forward, backward) {
            (true, true) => {
                return Err(Error::Orientation(format!(
                    "component through edge {} passes under in both directions",
                    start + 1
                )))
            }
            (true, false) => false,
            (false, true) => true,
            (false, false) => {
                // over-only component: follow ascending labels
                let k = walk.len();
                let lo = (0..k).min_by_key(|&i| walk[i].0).unwrap();
                let succ = walk[(lo + 1) % k].0;
                let pred = walk[(lo + k - 1) % k].0;
                let up = |a: EdgeId| a == walk[lo].0 + 1;
                !up(succ) && up(pred)
            }
        };

        let mut cycle: Vec<EdgeId> = Vec::with_capacity(walk.len());
        if reverse {
            for &(e, entry) in walk.iter().rev() {
                heads[e] = other_end(&ends[e], entry);
                cycle.push(e);
            }
        } else {
            for &(e, entry) in &walk {
                heads[e] = entry;
                cycle.push(e);
            }
        }
        let lo = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(lo);
        components.push(cycle);
    }
    components.sort_by_key(|c| c[0]);
    Ok((components, heads))
}

/// Face tracing: leaving quadrant `q` of crossing `c` along the edge at slot
/// `q + 1`, the face continues at the quadrant of the far crossing that
/// starts at the arrival slot.
fn trace_faces(
    slots: &[[EdgeId; 4]],
    ends: &[[End; 2]],
    heads: &[End],
) -> (Vec<Face>, Vec<[FaceId; 4]>) {
    let n = slots.len();
    let mut corner_face = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::new();
    for c0 in 0..n {
        for q0 in 0..4 {
            if corner_face[c0][q0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Face {
                corners: Vec::new(),
                boundary: Vec::new(),
            };
            let (mut c, mut q) = (c0, q0);
            while corner_face[c][q] == usize::MAX {
                corner_face[c][q] = id;
                face.corners.push((c, q));
                let out = End {
                    crossing: c,
                    slot: (q + 1) % 4,
                };
                let e = slots[c][out.slot];
                let side = if heads[e] == out {
                    Side::Left
                } else {
                    Side::Right
                };
                face.boundary.push((e, side));
                let arrive = other_end(&ends[e], out);
                c = arrive.crossing;
                q = arrive.slot;
            }
            faces.push(face);
        }
    }
    (faces, corner_face)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn trefoil_structure() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.faces().len(), 5);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 3);
        assert!(d.is_alternating());
        assert!(d.is_reduced());
        let total: usize = d.faces().iter().map(Face::len).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn figure_eight_writhe_zero() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.faces().len(), 6);
    }

    #[test]
    fn one_crossing_unknot_is_nugatory() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(d.faces().len(), 3);
        assert!(!d.is_reduced());
        assert!(d.is_alternating());
    }

    #[test]
    fn kink_makes_diagram_non_reduced() {
        // trefoil with a Reidemeister I curl inserted on edge 6
        let d = parse_pd("X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]").unwrap();
        assert!(!d.is_reduced());
        assert_eq!(d.nugatory_crossing(), Some(3));
    }

    #[test]
    fn missing_labels_rejected() {
        let err = parse_pd("X[1,4,2,5] X[3,6,4,1]").unwrap_err();
        match err {
            Error::Labels(m) => assert!(m.contains("5,6") && m.ends_with("appear once"), "{m}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn label_gap_rejected() {
        assert!(matches!(
            parse_pd("X[1,4,2,7] X[2,7,4,1]"),
            Err(Error::Labels(_))
        ));
    }

    #[test]
    fn non_planar_code_rejected() {
        // two loops crossing exactly once
        assert!(matches!(
            parse_pd("X[1,2,1,2]"),
            Err(Error::NonPlanar { .. }) | Err(Error::Orientation(_))
        ));
    }

    #[test]
    fn disconnected_rejected() {
        let err = parse_pd("X[1,2,2,1] X[3,4,4,3]").unwrap_err();
        assert!(matches!(err, Error::Disconnected));
    }

    #[test]
    fn mirror_is_involution() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let t = parse_pd(TREFOIL).unwrap();
        for d in [d, t] {
            let m = d.mirror();
            assert_eq!(m.writhe(), -d.writhe());
            assert!(m.signs().iter().zip(d.signs()).all(|(a, b)| *a == b.flip()));
            assert_eq!(m.is_alternating(), d.is_alternating());
            assert_eq!(m.mirror(), d);
        }
    }

    #[test]
    fn default_decoration_uses_top_edge() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.marked_edge(), 5);
        assert_ne!(d.face_a(), d.face_b());
        let e = d.edge(5);
        assert!([e.face(Side::Left), e.face(Side::Right)].contains(&d.face_a()));
    }

    #[test]
    fn every_decoration_is_legal() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let decs = d.decorations();
        assert_eq!(decs.len(), 16);
        for (e, a) in decs {
            let r = d.with_decoration(e, a).unwrap();
            assert_eq!(r.face_a(), a);
        }
        assert!(d.with_decoration(0, 99).is_err());
    }

    #[test]
    fn descending_link_labels_accepted() {
        // Hopf link labelled against the direction of travel
        let d = parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.faces().len(), 4);
    }
}
