use std::collections::VecDeque;

use serde::Serialize;

use super::{Crossing, FaceId, PlanarDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A chessboard coloring of the faces of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
    under_first_white: bool,
}

impl Coloring {
    pub fn color(&self, f: FaceId) -> Color {
        self.colors[f]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn faces_of(&self, color: Color) -> Vec<FaceId> {
        (0..self.colors.len())
            .filter(|&f| self.colors[f] == color)
            .collect()
    }

    /// False when no proper coloring makes every under-first quadrant white,
    /// which happens exactly for non-alternating diagrams.
    pub fn follows_convention(&self) -> bool {
        self.under_first_white
    }

    /// The other proper coloring.
    pub fn flipped(&self, d: &PlanarDiagram) -> Coloring {
        let colors: Vec<Color> = self.colors.iter().map(|c| c.flip()).collect();
        let under_first_white = under_first_all(d, &colors, Color::White);
        Coloring {
            colors,
            under_first_white,
        }
    }

    pub fn is_proper(&self, d: &PlanarDiagram) -> bool {
        d.edges()
            .iter()
            .all(|e| self.colors[e.left] != self.colors[e.right])
    }
}

fn under_first_all(d: &PlanarDiagram, colors: &[Color], want: Color) -> bool {
    d.crossings().iter().all(|x| {
        (0..4)
            .filter(|&q| Crossing::is_under_first(q))
            .all(|q| colors[x.face(q)] == want)
    })
}

/// Multigraph on black faces with one edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackGraph {
    vertices: Vec<FaceId>,
    edges: Vec<(usize, usize)>,
}

impl BlackGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        BlackGraph {
            vertices: (0..vertex_count).collect(),
            edges,
        }
    }

    /// Face id of each vertex.
    pub fn vertices(&self) -> &[FaceId] {
        &self.vertices
    }

    /// Endpoints (vertex indices) of the edge for each crossing.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
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

impl PlanarDiagram {
    /// The chessboard coloring with every under-first quadrant white when the
    /// diagram is alternating; otherwise the proper coloring with the outer
    /// face white, flagged as not following the convention.
    pub fn checkerboard(&self) -> Coloring {
        if self.crossing_count() == 0 {
            let mut colors = vec![Color::Black; 2];
            colors[self.face_a()] = Color::White;
            return Coloring {
                colors,
                under_first_white: true,
            };
        }
        let seed = self.crossing(0).face(0);
        let colors = self.propagate(seed, Color::White);
        if under_first_all(self, &colors, Color::White) {
            return Coloring {
                colors,
                under_first_white: true,
            };
        }
        let colors = self.propagate(self.face_a(), Color::White);
        Coloring {
            colors,
            under_first_white: false,
        }
    }

    fn propagate(&self, seed: FaceId, color: Color) -> Vec<Color> {
        let nf = self.faces().len();
        let mut adj = vec![Vec::new(); nf];
        for e in self.edges() {
            adj[e.left].push(e.right);
            adj[e.right].push(e.left);
        }
        let mut colors: Vec<Option<Color>> = vec![None; nf];
        colors[seed] = Some(color);
        let mut queue = VecDeque::from([seed]);
        while let Some(f) = queue.pop_front() {
            let c = colors[f].unwrap();
            for &g in &adj[f] {
                if colors[g].is_none() {
                    colors[g] = Some(c.flip());
                    queue.push_back(g);
                }
            }
        }
        colors
            .into_iter()
            .map(|c| c.expect("face graph is connected"))
            .collect()
    }

    pub fn black_graph(&self, coloring: &Coloring) -> BlackGraph {
        let black = coloring.faces_of(Color::Black);
        let mut index = vec![usize::MAX; self.faces().len()];
        for (i, &f) in black.iter().enumerate() {
            index[f] = i;
        }
        let edges = self
            .crossings()
            .iter()
            .map(|x| {
                let q = if coloring.color(x.face(0)) == Color::Black {
                    0
                } else {
                    1
                };
                (index[x.face(q)], index[x.face(q + 2)])
            })
            .collect();
        BlackGraph {
            vertices: black,
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::parse_pd;

    use super::*;

    #[test]
    fn trefoil_coloring() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let c = d.checkerboard();
        assert!(c.is_proper(&d));
        assert!(c.follows_convention());
        assert_eq!(c.count(Color::Black), 2);
        assert_eq!(c.count(Color::White), 3);
        let g = d.black_graph(&c);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().len(), 3);
        assert!(g.edges().iter().all(|&(a, b)| a != b));
        assert!(g.is_connected());
    }

    #[test]
    fn exactly_two_proper_colorings() {
        let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        let nf = d.faces().len();
        let mut proper = Vec::new();
        for mask in 0u32..(1 << nf) {
            let colors: Vec<Color> = (0..nf)
                .map(|f| {
                    if mask >> f & 1 == 1 {
                        Color::Black
                    } else {
                        Color::White
                    }
                })
                .collect();
            if d.edges().iter().all(|e| colors[e.left] != colors[e.right]) {
                proper.push(colors);
            }
        }
        assert_eq!(proper.len(), 2);
        let c = d.checkerboard();
        let f = c.flipped(&d);
        assert!(proper.contains(&c.colors().to_vec()));
        assert!(proper.contains(&f.colors().to_vec()));
        assert!(!f.follows_convention());
    }

    #[test]
    fn nugatory_crossing_gives_loop() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        let c = d.checkerboard();
        let g = d.black_graph(&c);
        assert_eq!(g.edges().len(), 1);
        let g2 = d.black_graph(&c.flipped(&d));
        assert_eq!(g.loop_count() + g2.loop_count(), 1);
    }
}
