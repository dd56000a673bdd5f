//! Diagram shapes read off an orbit profile: trees T_{p,q,r} and even
//! cycles with one arm, Δ⁻_{2n,r}.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::orbit::trace::{ArmLength, Collision, OrbitProfile, Seed};
use crate::picard::graph::{GraphVertex, Side, SignedEdge, SignedGraph};

/// Length of one arm in the T_{p,q,r} convention: an arm of length p holds
/// p − 1 vertices besides v₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arm {
    Exact(usize),
    /// Only a lower bound is known; the diagram built from it is a
    /// subdiagram of the true one.
    AtLeast(usize),
}

impl Arm {
    pub fn length(self) -> usize {
        match self {
            Arm::Exact(m) | Arm::AtLeast(m) => m,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Arm::Exact(_))
    }

    /// Number of vertices on the arm, v₀ excluded.
    pub fn vertices(self) -> usize {
        self.length().saturating_sub(1)
    }
}

impl fmt::Display for Arm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arm::Exact(m) => write!(f, "{m}"),
            Arm::AtLeast(m) => write!(f, ">={m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Tree { arms: [Arm; 3] },
    /// A cycle of even length through v₀ carrying the single −1 edge at v₀,
    /// with one arm attached at v₀.
    CycleWithArm { cycle_length: usize, arm: Arm, minus_edge_at_v0: bool },
    Unclassified { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub shape: Shape,
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Tree { arms: [p, q, r] } => write!(f, "T({p},{q},{r})"),
            Shape::CycleWithArm { cycle_length, arm, .. } => write!(f, "Delta-({cycle_length},{arm})"),
            Shape::Unclassified { reason } => write!(f, "unclassified ({reason})"),
        }
    }
}

impl Diagram {
    pub fn tree(p: usize, q: usize, r: usize) -> Diagram {
        Diagram { shape: Shape::Tree { arms: [Arm::Exact(p), Arm::Exact(q), Arm::Exact(r)] } }
    }

    pub fn cycle_with_arm(cycle_length: usize, arm: Arm) -> Diagram {
        Diagram { shape: Shape::CycleWithArm { cycle_length, arm, minus_edge_at_v0: true } }
    }

    /// True when every arm is exact, so the diagram is the whole of H.
    pub fn is_exact(&self) -> bool {
        match &self.shape {
            Shape::Tree { arms } => arms.iter().all(|a| a.is_exact()),
            Shape::CycleWithArm { arm, .. } => arm.is_exact(),
            Shape::Unclassified { .. } => false,
        }
    }

    pub fn is_classified(&self) -> bool {
        !matches!(self.shape, Shape::Unclassified { .. })
    }

    /// The diagram as a signed graph with v₀ at index 0. Arms known only from
    /// below are built at their lower bound.
    pub fn materialize(&self) -> Option<SignedGraph> {
        let mut b = Builder::new();
        match &self.shape {
            Shape::Tree { arms } => {
                for arm in arms {
                    b.arm(arm.vertices());
                }
            }
            Shape::CycleWithArm { cycle_length, arm, minus_edge_at_v0 } => {
                let mut prev = 0;
                for i in 1..*cycle_length {
                    prev = b.attach(prev, i % 2 == 1, 1);
                }
                b.edge(prev, 0, if *minus_edge_at_v0 { -1 } else { 1 });
                b.arm(arm.vertices());
            }
            Shape::Unclassified { .. } => return None,
        }
        Some(b.graph)
    }

    /// The JSON interchange form.
    pub fn to_json(&self) -> serde_json::Value {
        let graph = self.materialize();
        let edges: Vec<[i64; 3]> = graph
            .as_ref()
            .map(|g| g.edges.iter().map(|e| [e.a as i64, e.b as i64, e.weight]).collect())
            .unwrap_or_default();
        let signs: Vec<i64> = edges.iter().map(|e| e[2]).collect();
        let (shape, arms, cycle, reason) = match &self.shape {
            Shape::Tree { arms } => ("tree", arms.to_vec(), None, None),
            Shape::CycleWithArm { cycle_length, arm, .. } => ("cycle_arm", vec![*arm], Some(*cycle_length), None),
            Shape::Unclassified { reason } => ("unclassified", vec![], None, Some(reason.clone())),
        };
        serde_json::json!({
            "shape": shape,
            "arms": arms,
            "cycle": cycle,
            "exact": self.is_exact(),
            "vertices": graph.as_ref().map(SignedGraph::len),
            "edges": edges,
            "signs": signs,
            "reason": reason,
        })
    }
}

struct Builder {
    graph: SignedGraph,
}

impl Builder {
    fn new() -> Builder {
        let v0 = GraphVertex { vector: vec![], side: Side::Sigma, is_v0: true };
        Builder { graph: SignedGraph { vertices: vec![v0], edges: vec![] } }
    }

    fn edge(&mut self, a: usize, b: usize, weight: i64) {
        self.graph.edges.push(SignedEdge { a, b, weight });
    }

    /// Adds a vertex joined to `to`; `alpha` selects its side.
    fn attach(&mut self, to: usize, alpha: bool, weight: i64) -> usize {
        let side = if alpha { Side::Alpha } else { Side::Sigma };
        self.graph.vertices.push(GraphVertex { vector: vec![], side, is_v0: false });
        let v = self.graph.vertices.len() - 1;
        self.edge(to, v, weight);
        v
    }

    /// A path of `len` vertices hanging off v₀.
    fn arm(&mut self, len: usize) {
        let mut prev = 0;
        for i in 0..len {
            prev = self.attach(prev, i % 2 == 0, 1);
        }
    }
}

/// An arm length from one trace: exact at a coincidence, a lower bound
/// otherwise (an event at step m leaves the points before m usable).
fn arm_from(len: &ArmLength) -> Arm {
    match *len {
        ArmLength::Exact { m } => Arm::Exact(m),
        ArmLength::AtLeast { n } => Arm::AtLeast(n.max(1)),
        ArmLength::Indeterminate { m, .. } => Arm::AtLeast(m.saturating_sub(1).max(1)),
    }
}

fn unclassified(reason: impl Into<String>) -> Diagram {
    Diagram { shape: Shape::Unclassified { reason: reason.into() } }
}

/// Reads the diagram shape off an orbit profile.
///
/// A collision P_a = Q_b between two different seeds merges their orbits in
/// reverse (Q_{b+k} = P_{a−k}), so both traces report the same pair and the
/// same a + b. The difference vectors of the two arms then close up with v₀
/// into a cycle of a + b + 1 vertices; a + b is odd, so the cycle is even.
/// The case a + b = 1 is α swapping two base points: the two difference
/// vectors collapse to one vector orthogonal to v₀, and both arms are empty.
pub fn build_diagram(profile: &OrbitProfile) -> Diagram {
    let keys: BTreeSet<(Seed, Seed, usize)> = profile
        .collisions
        .iter()
        .map(|c: &Collision| {
            let (s, t) = if c.seed_a <= c.seed_b { (c.seed_a, c.seed_b) } else { (c.seed_b, c.seed_a) };
            (s, t, c.step_a + c.step_b)
        })
        .collect();
    let arms = profile.arm_lengths.each_ref().map(arm_from);
    let mut keys = keys.into_iter();
    let Some((s, t, sum)) = keys.next() else {
        return Diagram { shape: Shape::Tree { arms } };
    };
    if keys.next().is_some() {
        return unclassified("more than one independent collision");
    }
    if s == t {
        return unclassified(format!("orbit of {s} returns to itself"));
    }
    if sum % 2 == 0 {
        return unclassified(format!("collision of {s} and {t} at even total step {sum}"));
    }
    let third = Seed::ALL.into_iter().find(|&x| x != s && x != t).expect("three seeds");
    let arm = arms[third.index()];
    if sum == 1 {
        let mut tree_arms = arms;
        tree_arms[s.index()] = Arm::Exact(1);
        tree_arms[t.index()] = Arm::Exact(1);
        return Diagram { shape: Shape::Tree { arms: tree_arms } };
    }
    Diagram::cycle_with_arm(sum + 1, arm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::trace::IndeterminateReason;

    fn exact(m: usize) -> ArmLength {
        ArmLength::Exact { m }
    }

    fn profile(arms: [ArmLength; 3], collisions: Vec<Collision>) -> OrbitProfile {
        OrbitProfile { arm_lengths: arms, collisions }
    }

    #[test]
    fn identity_profile_is_a_point() {
        let d = build_diagram(&profile([exact(1), exact(1), exact(1)], vec![]));
        assert_eq!(d, Diagram::tree(1, 1, 1));
        let g = d.materialize().unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn e8_tree_has_eight_vertices() {
        let d = build_diagram(&profile([exact(2), exact(3), exact(5)], vec![]));
        let g = d.materialize().unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.edges.len(), 7);
        assert!(g.edges.iter().all(|e| e.weight == 1));
    }

    #[test]
    fn lower_bounds_are_flagged() {
        let n = ArmLength::AtLeast { n: 12 };
        let d = build_diagram(&profile([n, n, n], vec![]));
        assert_eq!(d.shape, Shape::Tree { arms: [Arm::AtLeast(12); 3] });
        assert!(!d.is_exact());
        assert_eq!(d.to_json()["exact"], false);
    }

    #[test]
    fn indeterminate_arm_is_truncated() {
        let bad = ArmLength::Indeterminate { m: 6, reason: IndeterminateReason::TriangleViolation };
        let d = build_diagram(&profile([exact(2), exact(3), bad], vec![]));
        assert_eq!(d.shape, Shape::Tree { arms: [Arm::Exact(2), Arm::Exact(3), Arm::AtLeast(5)] });
    }

    #[test]
    fn cross_seed_collision_gives_even_cycle() {
        let c = |sa, a, sb, b| Collision { seed_a: sa, step_a: a, seed_b: sb, step_b: b };
        let col = ArmLength::Indeterminate { m: 2, reason: IndeterminateReason::Collision };
        let d = build_diagram(&profile(
            [col, col, exact(1)],
            vec![c(Seed::P, 2, Seed::Q, 1), c(Seed::Q, 2, Seed::P, 1)],
        ));
        assert_eq!(d, Diagram::cycle_with_arm(4, Arm::Exact(1)));
        let g = d.materialize().unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.cycle_lengths(), vec![4]);
        assert_eq!(g.negative_edges().len(), 1);
    }

    #[test]
    fn base_point_swap_is_degenerate() {
        let c = |sa, a, sb, b| Collision { seed_a: sa, step_a: a, seed_b: sb, step_b: b };
        let col = ArmLength::Indeterminate { m: 1, reason: IndeterminateReason::Collision };
        let d = build_diagram(&profile(
            [col, col, exact(1)],
            vec![c(Seed::P, 1, Seed::Q, 0), c(Seed::Q, 1, Seed::P, 0)],
        ));
        assert_eq!(d, Diagram::tree(1, 1, 1));
    }

    #[test]
    fn two_collisions_are_unclassified() {
        let c = |sa, a, sb, b| Collision { seed_a: sa, step_a: a, seed_b: sb, step_b: b };
        let col = ArmLength::Indeterminate { m: 2, reason: IndeterminateReason::Collision };
        let d = build_diagram(&profile(
            [col, col, col],
            vec![c(Seed::P, 2, Seed::Q, 1), c(Seed::R, 4, Seed::P, 1)],
        ));
        assert!(!d.is_classified());
        assert!(d.materialize().is_none());
    }
}
