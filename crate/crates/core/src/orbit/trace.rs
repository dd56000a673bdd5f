//! The standard quadratic involution and orbit tracing of its base points
//! under the alternating words 1, α, σα, ασα, ...

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::projective::{apply_map, ProjectiveLinearMap, ProjectivePoint};
use crate::exact::scalar::{Field, Scalar};

/// One of the three base points of σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Seed {
    P,
    Q,
    R,
}

impl Seed {
    pub const ALL: [Seed; 3] = [Seed::P, Seed::Q, Seed::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Seed {
        Seed::ALL[i]
    }

    pub fn point(self, field: Field) -> ProjectivePoint {
        ProjectivePoint::vertex(field, self.index())
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// σ(x:y:z) = (yz : xz : xy), undefined at the three base points.
pub fn sigma_apply(x: &ProjectivePoint) -> Result<ProjectivePoint> {
    if x.vertex_index().is_some() {
        return Err(Error::UndefinedImage(x.to_string()));
    }
    let [a, b, c] = x.coords();
    ProjectivePoint::new([b * c, a * c, a * b])
}

/// Which map carries step `n` to step `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    Alpha,
    Sigma,
}

impl Step {
    /// w_{n+1} = α w_n for even n and σ w_n for odd n.
    pub fn after(n: usize) -> Step {
        if n % 2 == 0 {
            Step::Alpha
        } else {
            Step::Sigma
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EventKind {
    /// The point equals its immediate predecessor.
    Coincidence,
    /// The point equals an earlier orbit point (of any seed).
    Collision { other: Seed, other_step: usize },
    /// The point lies on xyz = 0 without being a base point.
    TriangleViolation,
    /// The next map is σ and the current point is a base point.
    BasePointHit,
    NoEventUpToBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitEvent {
    #[serde(flatten)]
    pub kind: EventKind,
    pub step: usize,
}

/// The points w_n(seed), n = 0, 1, ..., while defined, and the event that
/// ended the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTrace {
    pub seed: Seed,
    pub points: Vec<ProjectivePoint>,
    pub event: OrbitEvent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndeterminateReason {
    Collision,
    TriangleViolation,
    BasePointHit,
}

/// What a trace says about the length of one arm of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArmLength {
    /// Coincidence at step m: points 0..m−1 are in general position.
    Exact { m: usize },
    /// No event up to the bound.
    AtLeast { n: usize },
    /// The trace stopped at step m for another reason.
    Indeterminate { m: usize, reason: IndeterminateReason },
}

impl fmt::Display for ArmLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArmLength::Exact { m } => write!(f, "Exact({m})"),
            ArmLength::AtLeast { n } => write!(f, "AtLeast({n})"),
            ArmLength::Indeterminate { m, reason } => write!(f, "Indeterminate({m}, {reason:?})"),
        }
    }
}

/// A collision `seed_a` at `step_a` equals `seed_b` at `step_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Collision {
    pub seed_a: Seed,
    pub step_a: usize,
    pub seed_b: Seed,
    pub step_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitProfile {
    pub arm_lengths: [ArmLength; 3],
    pub collisions: Vec<Collision>,
}

impl OrbitProfile {
    /// True when every arm is Exact and nothing collided.
    pub fn is_exact(&self) -> Option<[usize; 3]> {
        if !self.collisions.is_empty() {
            return None;
        }
        let mut out = [0; 3];
        for (slot, arm) in out.iter_mut().zip(&self.arm_lengths) {
            match arm {
                ArmLength::Exact { m } => *slot = *m,
                _ => return None,
            }
        }
        Some(out)
    }
}

impl fmt::Display for OrbitProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = &self.arm_lengths;
        write!(f, "P: {p}, Q: {q}, R: {r}")?;
        for c in &self.collisions {
            write!(f, "; {}{} = {}{}", c.seed_a, c.step_a, c.seed_b, c.step_b)?;
        }
        Ok(())
    }
}

/// The three traces together with their aggregated profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitAnalysis {
    pub alpha: ProjectiveLinearMap,
    pub bound: usize,
    pub traces: [OrbitTrace; 3],
    pub profile: OrbitProfile,
}

/// Default orbit bound: 64 over ℚ, min(p² + p + 1, 10⁶) over F_p.
pub fn default_bound(field: Field) -> usize {
    match field.plane_size() {
        Some(n) => n.min(1_000_000) as usize,
        None => 64,
    }
}

/// Traces P, Q, R under the alternating words until each meets an event or
/// the bound. The three traces advance in lockstep, seeds in the order P, Q,
/// R within a step, and collisions are tested against every point emitted
/// before the current one. The identity is accepted as the degenerate
/// involution (g = σ).
pub fn trace_orbits(alpha: &ProjectiveLinearMap, bound: usize) -> Result<OrbitAnalysis> {
    if !alpha.squares_to_identity() {
        return Err(Error::NotInvolution);
    }
    if bound == 0 {
        return Err(Error::OutOfRange("orbit bound must be at least 1".into()));
    }
    let field = alpha.field();
    let mut points: [Vec<ProjectivePoint>; 3] = Seed::ALL.map(|s| vec![s.point(field)]);
    let mut events: [Option<OrbitEvent>; 3] = [None; 3];
    let mut seen: HashMap<ProjectivePoint, (Seed, usize)> = HashMap::new();
    for s in Seed::ALL {
        seen.insert(s.point(field), (s, 0));
    }

    for n in 1..=bound {
        for seed in Seed::ALL {
            let i = seed.index();
            if events[i].is_some() {
                continue;
            }
            let prev = &points[i][n - 1];
            let next = match Step::after(n - 1) {
                Step::Alpha => apply_map(alpha, prev)?,
                Step::Sigma => match sigma_apply(prev) {
                    Ok(x) => x,
                    Err(_) => {
                        events[i] = Some(OrbitEvent { kind: EventKind::BasePointHit, step: n });
                        continue;
                    }
                },
            };
            let kind = if &next == prev {
                Some(EventKind::Coincidence)
            } else if let Some(&(other, other_step)) = seen.get(&next) {
                Some(EventKind::Collision { other, other_step })
            } else if next.on_triangle() && next.vertex_index().is_none() {
                Some(EventKind::TriangleViolation)
            } else {
                None
            };
            match kind {
                Some(kind) => events[i] = Some(OrbitEvent { kind, step: n }),
                None => {
                    seen.insert(next.clone(), (seed, n));
                }
            }
            points[i].push(next);
        }
        if events.iter().all(Option::is_some) {
            break;
        }
    }

    let events = events.map(|e| e.unwrap_or(OrbitEvent { kind: EventKind::NoEventUpToBound, step: bound }));
    let mut collisions = Vec::new();
    let arm_lengths = std::array::from_fn(|i| {
        let e = events[i];
        match e.kind {
            EventKind::Coincidence => ArmLength::Exact { m: e.step },
            EventKind::NoEventUpToBound => ArmLength::AtLeast { n: e.step },
            EventKind::Collision { other, other_step } => {
                collisions.push(Collision {
                    seed_a: Seed::from_index(i),
                    step_a: e.step,
                    seed_b: other,
                    step_b: other_step,
                });
                ArmLength::Indeterminate { m: e.step, reason: IndeterminateReason::Collision }
            }
            EventKind::TriangleViolation => {
                ArmLength::Indeterminate { m: e.step, reason: IndeterminateReason::TriangleViolation }
            }
            EventKind::BasePointHit => {
                ArmLength::Indeterminate { m: e.step, reason: IndeterminateReason::BasePointHit }
            }
        }
    });
    let [pp, pq, pr] = points;
    let traces = [
        OrbitTrace { seed: Seed::P, points: pp, event: events[0] },
        OrbitTrace { seed: Seed::Q, points: pq, event: events[1] },
        OrbitTrace { seed: Seed::R, points: pr, event: events[2] },
    ];
    Ok(OrbitAnalysis {
        alpha: alpha.clone(),
        bound,
        traces,
        profile: OrbitProfile { arm_lengths, collisions },
    })
}

/// Re-checks the coincidence conditions P_p = P_{p−1}, Q_q = Q_{q−1},
/// R_r = R_{r−1} and general position of the earlier points, directly on
/// the raw traces.
pub fn verify_exact_profile(analysis: &OrbitAnalysis, arms: [usize; 3]) -> bool {
    let mut all = Vec::new();
    for (trace, &m) in analysis.traces.iter().zip(&arms) {
        if trace.points.len() <= m || m == 0 || trace.points[m] != trace.points[m - 1] {
            return false;
        }
        all.extend(trace.points[..m].iter().cloned());
    }
    let distinct: std::collections::HashSet<_> = all.iter().collect();
    distinct.len() == all.len() && all.iter().all(|x| !x.on_triangle() || x.vertex_index().is_some())
}

/// Parses nine row-major entries into a linear map over `field`.
pub fn parse_alpha(field: Field, entries: &[String]) -> Result<ProjectiveLinearMap> {
    let scalars = entries.iter().map(|e| Scalar::parse(field, e)).collect::<Result<Vec<_>>>()?;
    ProjectiveLinearMap::from_entries(scalars)
}
