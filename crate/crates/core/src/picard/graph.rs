//! The signed bipartite graph G built directly from difference vectors
//! e_x − σ_*(e_x) and e_y − α_*(e_y), and its component H through v₀.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::IntegerMatrix;
use crate::picard::lattice::{inner_product_int, ClassLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Sigma,
    Alpha,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVertex {
    /// Coordinates in the class-lattice basis.
    #[serde(with = "crate::exact::serde_str::bigint_vec")]
    pub vector: Vec<BigInt>,
    pub side: Side,
    pub is_v0: bool,
}

/// An undirected edge with its intersection number as weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedEdge {
    pub a: usize,
    pub b: usize,
    pub weight: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<SignedEdge>,
}

impl SignedGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn v0_index(&self) -> Option<usize> {
        self.vertices.iter().position(|v| v.is_v0)
    }

    pub fn neighbors(&self) -> Vec<Vec<(usize, i64)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for e in &self.edges {
            adj[e.a].push((e.b, e.weight));
            adj[e.b].push((e.a, e.weight));
        }
        adj
    }

    /// Sum of absolute edge weights at each vertex.
    pub fn valencies(&self) -> Vec<u32> {
        let mut val = vec![0u32; self.len()];
        for e in &self.edges {
            val[e.a] += e.weight.unsigned_abs() as u32;
            val[e.b] += e.weight.unsigned_abs() as u32;
        }
        val
    }

    /// Lengths of the cycles in a basis of fundamental cycles (one per edge
    /// outside a breadth-first spanning forest).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let adj = self.neighbors();
        let n = self.len();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut tree_edge = vec![false; self.edges.len()];
        let mut edge_ids: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            edge_ids.entry((e.a.min(e.b), e.a.max(e.b))).or_default().push(k);
        }
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = Some(u);
                        let ids = &edge_ids[&(u.min(w), u.max(w))];
                        tree_edge[ids[0]] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            if tree_edge[k] {
                continue;
            }
            let (mut x, mut y) = (e.a, e.b);
            let mut len = 1;
            while x != y {
                if depth[x] >= depth[y] {
                    x = parent[x].expect("non-root has a parent");
                } else {
                    y = parent[y].expect("non-root has a parent");
                }
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// The induced subgraph on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> SignedGraph {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        SignedGraph {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges: self
                .edges
                .iter()
                .filter_map(|e| Some(SignedEdge { a: *pos.get(&e.a)?, b: *pos.get(&e.b)?, weight: e.weight }))
                .collect(),
        }
    }

    /// The connected component containing `start`, with `start` first.
    pub fn component_of(&self, start: usize) -> SignedGraph {
        let adj = self.neighbors();
        let mut seen = vec![false; self.len()];
        let mut order = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < order.len() {
            for &(w, _) in &adj[order[i]] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        self.induced(&order)
    }

    /// Negates vertices along a depth-first walk from v₀ so that every tree
    /// edge becomes +1. On a tree every edge ends up +1; on a cycle with an
    /// arm the walk goes once around the cycle, so the sign of the cycle is
    /// carried by the closing edge at v₀.
    pub fn normalize_signs(&mut self) {
        let Some(root) = self.v0_index() else { return };
        let adj = self.neighbors();
        let n = self.len();
        let mut flip = vec![false; n];
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&(w, weight)) = adj[u].get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    let sign_u = if flip[u] { -1 } else { 1 };
                    flip[w] = sign_u * weight < 0;
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
        for (v, &f) in self.vertices.iter_mut().zip(&flip) {
            if f {
                v.vector.iter_mut().for_each(|c| *c = -c.clone());
            }
        }
        for e in &mut self.edges {
            if flip[e.a] != flip[e.b] {
                e.weight = -e.weight;
            }
        }
    }

    /// Edges with weight other than +1, after normalization.
    pub fn negative_edges(&self) -> Vec<SignedEdge> {
        self.edges.iter().copied().filter(|e| e.weight != 1).collect()
    }
}

/// The result of the direct construction: the whole graph G and the
/// sign-normalized component H of v₀.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectGraph {
    pub g: SignedGraph,
    pub h: SignedGraph,
}

fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn negated(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|c| -c).collect()
}

fn difference_vectors(action: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = action.rows();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for j in 1..n {
        let d: Vec<BigInt> =
            (0..n).map(|i| BigInt::from(i64::from(i == j)) - action.get(i, j)).collect();
        if is_zero(&d) || out.iter().any(|u| *u == d || *u == negated(&d)) {
            continue;
        }
        out.push(d);
    }
    out
}

/// Builds G from the class lattice.
///
/// σ-side vertices are v₀ and one representative of each nonzero pair
/// ±(e_x − σ_*e_x); α-side vertices are representatives of ±(e_y − α_*e_y).
/// Vectors on both sides (up to sign) are deleted. Edges carry the exact
/// intersection number. The valency bounds (3 at v₀, 2 elsewhere) and the
/// absence of intra-side edges are checked, not assumed.
pub fn build_graph_direct(lat: &ClassLattice) -> Result<DirectGraph> {
    let v0 = lat.v0();
    let mut sigma_side = vec![v0.clone()];
    for d in difference_vectors(&lat.sigma_action) {
        if d != v0 && d != negated(&v0) {
            sigma_side.push(d);
        }
    }
    let alpha_side = difference_vectors(&lat.alpha_action);
    let shared = |u: &Vec<BigInt>, others: &[Vec<BigInt>]| {
        let nu = negated(u);
        others.iter().any(|w| *w == *u || *w == nu)
    };
    let mut vertices = Vec::new();
    for (i, v) in sigma_side.iter().enumerate() {
        if !shared(v, &alpha_side) {
            vertices.push(GraphVertex { vector: v.clone(), side: Side::Sigma, is_v0: i == 0 });
        }
    }
    for v in &alpha_side {
        if !shared(v, &sigma_side) {
            vertices.push(GraphVertex { vector: v.clone(), side: Side::Alpha, is_v0: false });
        }
    }
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let w = inner_product_int(&vertices[a].vector, &vertices[b].vector);
            if w.is_zero() {
                continue;
            }
            if vertices[a].side == vertices[b].side {
                return Err(Error::IntraSideEdge(a, b));
            }
            let weight = w.to_i64().ok_or_else(|| Error::InvalidInput("edge weight overflow".into()))?;
            edges.push(SignedEdge { a, b, weight });
        }
    }
    let g = SignedGraph { vertices, edges };
    for (v, &val) in g.valencies().iter().enumerate() {
        let cap = if g.vertices[v].is_v0 { 3 } else { 2 };
        if val > cap {
            return Err(Error::ValencyViolation { vertex: v, valency: val });
        }
    }
    let mut h = g.component_of(g.v0_index().expect("v0 is never deleted"));
    h.normalize_signs();
    Ok(DirectGraph { g, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::projective::ProjectiveLinearMap;
    use crate::exact::scalar::Field;
    use crate::orbit::trace::trace_orbits;
    use crate::picard::lattice::build_class_lattice;

    fn direct(alpha: &ProjectiveLinearMap) -> DirectGraph {
        let a = trace_orbits(alpha, 64).unwrap();
        build_graph_direct(&build_class_lattice(alpha, &a.traces).unwrap()).unwrap()
    }

    #[test]
    fn identity_gives_single_vertex() {
        let d = direct(&ProjectiveLinearMap::identity(Field::Rationals));
        assert_eq!(d.g.len(), 1);
        assert!(d.g.edges.is_empty());
        assert!(d.h.vertices[0].is_v0);
    }

    #[test]
    fn swap_gives_isolated_v0() {
        let swap = ProjectiveLinearMap::from_i64(Field::Rationals, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        let d = direct(&swap);
        assert_eq!(d.h.len(), 1);
        assert!(d.g.cycle_lengths().is_empty());
    }

    #[test]
    fn normalization_on_a_square() {
        // A 4-cycle v0 - a - b - c - v0 with one negative edge away from v0.
        let vertex = |is_v0| GraphVertex { vector: vec![], side: Side::Sigma, is_v0 };
        let mut g = SignedGraph {
            vertices: vec![vertex(true), vertex(false), vertex(false), vertex(false)],
            edges: vec![
                SignedEdge { a: 0, b: 1, weight: 1 },
                SignedEdge { a: 1, b: 2, weight: -1 },
                SignedEdge { a: 2, b: 3, weight: 1 },
                SignedEdge { a: 3, b: 0, weight: 1 },
            ],
        };
        assert_eq!(g.cycle_lengths(), vec![4]);
        g.normalize_signs();
        let neg = g.negative_edges();
        assert_eq!(neg.len(), 1);
        assert!(neg[0].a == 0 || neg[0].b == 0);
        assert_eq!(neg[0].weight, -1);
    }
}
