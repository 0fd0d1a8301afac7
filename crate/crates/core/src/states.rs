//! Kauffman states of a decorated projection, their filtration levels and
//! gradings, the canonical state and clock moves between states.
//!
//! A state assigns to every crossing one of its quadrants so that distinct
//! crossings use distinct faces and no quadrant lies in the two faces next to
//! the marked edge. All filtration and grading values are stored doubled so
//! half-integral link values stay exact.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diagram::{Crossing, CrossingId, EdgeId, End, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KauffmanState {
    assignment: Vec<u8>,
    filtration2: i64,
    grading2: i64,
}

impl KauffmanState {
    /// Validates `assignment` (one quadrant index per crossing) against `d`.
    pub fn new(d: &PlanarDiagram, assignment: Vec<u8>) -> Result<Self> {
        if !is_state(d, &assignment) {
            return Err(Error::Invalid(format!(
                "{assignment:?} is not a Kauffman state of this diagram"
            )));
        }
        Ok(Self::from_valid(d, assignment))
    }

    fn from_valid(d: &PlanarDiagram, assignment: Vec<u8>) -> Self {
        let filtration2 = filtration2(d, &assignment);
        let grading2 = grading2(d, &assignment);
        KauffmanState {
            assignment,
            filtration2,
            grading2,
        }
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn quadrant(&self, c: CrossingId) -> usize {
        self.assignment[c] as usize
    }

    /// 2·S(x).
    pub fn filtration2(&self) -> i64 {
        self.filtration2
    }

    /// 2·M(x).
    pub fn grading2(&self) -> i64 {
        self.grading2
    }

    pub fn to_json(&self) -> StateJson {
        StateJson {
            quadrants: self.assignment.clone(),
            two_s: self.filtration2,
            two_m: self.grading2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub quadrants: Vec<u8>,
    pub two_s: i64,
    pub two_m: i64,
}

/// Doubled local filtration `2·s(x, v)` and local grading `m(x, v)` when the
/// state picks quadrant `q` at crossing `x`.
pub fn local_contribution(x: &Crossing, q: usize) -> (i64, i64) {
    let eps = x.sign().value();
    if q == x.pointed_toward() {
        (eps, 0)
    } else if q == x.pointed_away() {
        (-eps, -eps)
    } else {
        (0, 0)
    }
}

pub fn filtration2(d: &PlanarDiagram, assignment: &[u8]) -> i64 {
    d.crossings()
        .iter()
        .zip(assignment)
        .map(|(x, &q)| local_contribution(x, q as usize).0)
        .sum()
}

pub fn grading2(d: &PlanarDiagram, assignment: &[u8]) -> i64 {
    2 * d
        .crossings()
        .iter()
        .zip(assignment)
        .map(|(x, &q)| local_contribution(x, q as usize).1)
        .sum::<i64>()
}

/// Checks the state axioms directly.
pub fn is_state(d: &PlanarDiagram, assignment: &[u8]) -> bool {
    if assignment.len() != d.crossing_count() {
        return false;
    }
    let mut used = vec![false; d.faces().len()];
    used[d.face_a()] = true;
    used[d.face_b()] = true;
    for (x, &q) in d.crossings().iter().zip(assignment) {
        if q > 3 {
            return false;
        }
        let f = x.face(q as usize);
        if used[f] {
            return false;
        }
        used[f] = true;
    }
    true
}

/// Every Kauffman state, in lexicographic order of the quadrant assignment.
pub fn enumerate_states(d: &PlanarDiagram) -> Vec<KauffmanState> {
    let n = d.crossing_count();
    if n == 0 {
        return vec![KauffmanState {
            assignment: Vec::new(),
            filtration2: 0,
            grading2: 0,
        }];
    }
    let nf = d.faces().len();
    let (a, b) = (d.face_a(), d.face_b());
    let options: Vec<Vec<(u8, usize)>> = d
        .crossings()
        .iter()
        .map(|x| {
            (0..4)
                .map(|q| (q as u8, x.face(q)))
                .filter(|&(_, f)| f != a && f != b)
                .collect()
        })
        .collect();

    let mut search = Search {
        options: &options,
        used: vec![false; nf],
        current: vec![0; n],
        found: Vec::new(),
    };
    search.used[a] = true;
    search.used[b] = true;
    search.descend(0);
    search
        .found
        .into_iter()
        .map(|asg| KauffmanState::from_valid(d, asg))
        .collect()
}

struct Search<'a> {
    options: &'a [Vec<(u8, usize)>],
    used: Vec<bool>,
    current: Vec<u8>,
    found: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize) {
        if i == self.options.len() {
            self.found.push(self.current.clone());
            return;
        }
        for &(q, f) in &self.options[i] {
            if self.used[f] {
                continue;
            }
            self.used[f] = true;
            self.current[i] = q;
            if self.feasible(i + 1) {
                self.descend(i + 1);
            }
            self.used[f] = false;
        }
    }

    // forward check: every later crossing still has a free face
    fn feasible(&self, from: usize) -> bool {
        self.options[from..]
            .iter()
            .all(|opts| opts.iter().any(|&(_, f)| !self.used[f]))
    }
}

/// One pass of the traversal through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Visit {
    crossing: CrossingId,
    incoming: EdgeId,
    slot: usize,
}

/// Crossing visits in traversal order. Component `i` of the traversal is
/// entered inside edge `starts[i]`; the first start is the marked edge.
fn visits(d: &PlanarDiagram, starts: &[EdgeId]) -> Vec<Visit> {
    let mut out = Vec::with_capacity(2 * d.crossing_count());
    for &start in starts {
        let mut cycle = d.components()[d.edge(start).component()].clone();
        let pos = cycle.iter().position(|&e| e == start).unwrap();
        cycle.rotate_left(pos);
        for e in cycle {
            let h = d.edge(e).head();
            out.push(Visit {
                crossing: h.crossing,
                incoming: e,
                slot: h.slot,
            });
        }
    }
    out
}

/// Position of each crossing's second visit and the slot of its
/// penultimate edge (the edge entering on that second visit).
fn second_visits(d: &PlanarDiagram, starts: &[EdgeId]) -> (Vec<usize>, Vec<usize>) {
    let n = d.crossing_count();
    let mut seen = vec![0u8; n];
    let mut rank = vec![0; n];
    let mut slot = vec![0; n];
    for (i, v) in visits(d, starts).into_iter().enumerate() {
        seen[v.crossing] += 1;
        if seen[v.crossing] == 2 {
            rank[v.crossing] = i;
            slot[v.crossing] = v.slot;
        }
    }
    (rank, slot)
}

/// Traversal orders to try: the marked edge first, then every ordering of
/// the other components with every starting edge. A knot has exactly one.
pub fn traversals(d: &PlanarDiagram) -> Vec<Vec<EdgeId>> {
    let marked = d.marked_edge();
    let mc = d.edge(marked).component();
    let others: Vec<usize> = (0..d.component_count()).filter(|&c| c != mc).collect();
    let mut out = Vec::new();
    for perm in permutations(&others) {
        let mut partial = vec![vec![marked]];
        for c in perm {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    d.components()[c].iter().map(move |&e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// The state whose quadrant at every crossing contains that crossing's
/// penultimate edge, built by exhausting the sphere one face at a time from
/// the two faces at the marked edge.
///
/// For links the penultimate edges depend on how the unmarked components
/// are traversed; the first traversal in [`traversals`] order for which the
/// exhaustion completes is used.
pub fn canonical_state(d: &PlanarDiagram) -> Result<KauffmanState> {
    if d.crossing_count() == 0 {
        return Ok(enumerate_states(d).remove(0));
    }
    traversals(d)
        .iter()
        .find_map(|starts| exhaust(d, starts))
        .ok_or_else(|| Error::Internal("canonical state: region exhaustion stalled".into()))
        .and_then(|a| {
            KauffmanState::new(d, a)
                .map_err(|e| Error::Internal(format!("canonical state is invalid: {e}")))
        })
}

/// The canonical state for one traversal, if the exhaustion completes.
pub fn canonical_state_along(d: &PlanarDiagram, starts: &[EdgeId]) -> Option<KauffmanState> {
    exhaust(d, starts).and_then(|a| KauffmanState::new(d, a).ok())
}

fn exhaust(d: &PlanarDiagram, starts: &[EdgeId]) -> Option<Vec<u8>> {
    let n = d.crossing_count();
    let (rank, penult_slot) = second_visits(d, starts);
    let mut inside = vec![false; d.faces().len()];
    inside[d.face_a()] = true;
    inside[d.face_b()] = true;
    let mut assignment: Vec<Option<u8>> = vec![None; n];

    // the last corner whose penultimate edge runs along the frontier
    for _ in 0..n {
        let (corner, q) = (0..n)
            .filter(|&c| assignment[c].is_none())
            .filter_map(|c| {
                let x = d.crossing(c);
                let [qa, qb] = Crossing::quadrants_at_slot(penult_slot[c]);
                match (inside[x.face(qa)], inside[x.face(qb)]) {
                    (true, false) => Some((c, qb)),
                    (false, true) => Some((c, qa)),
                    _ => None,
                }
            })
            .max_by_key(|&(c, _)| rank[c])?;
        let f = d.crossing(corner).face(q);
        if inside[f] {
            return None;
        }
        inside[f] = true;
        assignment[corner] = Some(q as u8);
    }
    assignment.into_iter().collect()
}

/// True iff every crossing's quadrant contains its penultimate edge for the
/// traversal `starts`.
pub fn contains_penultimate_edges(d: &PlanarDiagram, x: &KauffmanState, starts: &[EdgeId]) -> bool {
    let (_, slot) = second_visits(d, starts);
    (0..d.crossing_count()).all(|c| Crossing::quadrants_at_slot(slot[c]).contains(&x.quadrant(c)))
}

fn far_end(d: &PlanarDiagram, e: EdgeId, from: End) -> End {
    let edge = d.edge(e);
    if edge.tail() == from {
        edge.head()
    } else {
        edge.tail()
    }
}

/// States obtained from `x` by one clock move.
///
/// A move changes `x` at two crossings joined by an arc of the diagram that
/// avoids the marked edge: at each end it swaps between the two quadrants
/// containing the arc's end edge. Arcs may pass through other crossings and
/// run with or against the orientation.
pub fn transpositions(d: &PlanarDiagram, x: &KauffmanState) -> Vec<KauffmanState> {
    let n = d.crossing_count();
    let marked = d.marked_edge();
    let mut out: BTreeSet<Vec<u8>> = BTreeSet::new();
    for v1 in 0..n {
        for k0 in 0..4 {
            let [a, b] = Crossing::quadrants_at_slot(k0);
            let q1 = x.quadrant(v1);
            let y1 = if q1 == a {
                b
            } else if q1 == b {
                a
            } else {
                continue;
            };
            let mut from = End {
                crossing: v1,
                slot: k0,
            };
            for _ in 0..2 * n {
                let e = d.crossing(from.crossing).slots()[from.slot];
                if e == marked {
                    break;
                }
                let at = far_end(d, e, from);
                if at.crossing == v1 {
                    break;
                }
                let [c, dq] = Crossing::quadrants_at_slot(at.slot);
                let q2 = x.quadrant(at.crossing);
                let y2 = if q2 == c {
                    Some(dq)
                } else if q2 == dq {
                    Some(c)
                } else {
                    None
                };
                if let Some(y2) = y2 {
                    let mut y = x.assignment.clone();
                    y[v1] = y1 as u8;
                    y[at.crossing] = y2 as u8;
                    if is_state(d, &y) {
                        out.insert(y);
                    }
                }
                from = End {
                    crossing: at.crossing,
                    slot: (at.slot + 2) % 4,
                };
            }
        }
    }
    out.into_iter()
        .map(|a| KauffmanState::from_valid(d, a))
        .collect()
}

/// The graph on all states with an edge for each clock move.
#[derive(Clone, Debug)]
pub struct ClockGraph {
    pub states: Vec<KauffmanState>,
    pub edges: Vec<(usize, usize)>,
}

impl ClockGraph {
    pub fn build(d: &PlanarDiagram) -> Self {
        let states = enumerate_states(d);
        let index: HashMap<&[u8], usize> = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.assignment(), i))
            .collect();
        let mut edges = Vec::new();
        for (i, s) in states.iter().enumerate() {
            for t in transpositions(d, s) {
                let j = index[t.assignment()];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        ClockGraph { states, edges }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.states.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn clock_connected(d: &PlanarDiagram) -> bool {
    ClockGraph::build(d).is_connected()
}
