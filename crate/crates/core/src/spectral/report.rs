//! Classification of a diagram (elliptic, parabolic, hyperbolic) and the
//! translation-length report.

use std::cmp::Ordering;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::diagram::adjacency::{adjacency, adjacency_of_graph, AdjacencyData};
use crate::diagram::shape::{Arm, Diagram, Shape};
use crate::error::Result;
use crate::exact::interval::{int, Interval};
use crate::exact::matrix::IntegerMatrix;
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::largest_real_root;
use crate::picard::lattice::ClassLattice;
use crate::spectral::coxeter::{coxeter_element, order_if_finite, spectral_radius};
use crate::spectral::gram::{classify_signature, gram_matrix, lambda_two, SignatureClass};
use crate::spectral::length::{length_from_mu, log2_upper, LengthEnclosure};
use crate::spectral::mu::{mu, reciprocal_sum_cmp};
use crate::spectral::salem::{salem_certify, SalemCertificate};

/// Cap on the order of an elliptic Coxeter element.
pub const ORDER_CAP: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapType {
    Elliptic,
    Parabolic,
    Hyperbolic,
    Unclassified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Every arm is exact; the numbers describe the map itself.
    Exact,
    /// Some arm is only bounded below; the numbers are bounds.
    Truncated,
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LengthReport {
    #[serde(rename = "type")]
    pub map_type: MapType,
    /// Order of the Coxeter element, for elliptic diagrams.
    pub order: Option<u64>,
    #[serde(rename = "L_lower")]
    pub l_lower: Option<f64>,
    #[serde(rename = "L_upper")]
    pub l_upper: Option<f64>,
    /// Largest eigenvalue of the adjacency matrix (of the lower-bound
    /// diagram when truncated).
    pub mu: Option<Interval>,
    /// Stretch factor: spectral radius of the Coxeter element.
    pub m: Option<Interval>,
    pub char_poly: Option<IntegerPolynomial>,
    pub salem: Option<SalemCertificate>,
    pub provenance: Provenance,
    pub diagram: serde_json::Value,
    /// Spectral radius of g_* on the class lattice, when one was supplied.
    pub lattice_radius: Option<Interval>,
    pub reason: Option<String>,
}

impl LengthReport {
    fn new(diagram: &Diagram, map_type: MapType, provenance: Provenance) -> LengthReport {
        LengthReport {
            map_type,
            order: None,
            l_lower: None,
            l_upper: None,
            mu: None,
            m: None,
            char_poly: None,
            salem: None,
            provenance,
            diagram: diagram.to_json(),
            lattice_radius: None,
            reason: None,
        }
    }

    fn unclassified(diagram: &Diagram, reason: impl Into<String>) -> LengthReport {
        let mut r = LengthReport::new(diagram, MapType::Unclassified, Provenance::Unclassified);
        r.reason = Some(reason.into());
        r
    }

    /// Process exit code for the command line: 2 for unclassified, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.map_type == MapType::Unclassified {
            2
        } else {
            0
        }
    }
}

/// Largest eigenvalue of a symmetric integer matrix with entries in {0, ±1}
/// and row sums at most 3, enclosed in [0, 3].
fn adjacency_top(adj: &AdjacencyData, tol: &BigRational) -> Result<Interval> {
    if adj.len() == 1 {
        return Ok(Interval::point(int(0)));
    }
    let c = adj.matrix.char_poly()?;
    Ok(largest_real_root(&c, &Interval::from_ints(0, 3), tol)?.interval)
}

fn zero_length(r: &mut LengthReport) {
    r.l_lower = Some(0.0);
    r.l_upper = Some(0.0);
}

fn elliptic(diagram: &Diagram, cox: &IntegerMatrix) -> Result<LengthReport> {
    let mut r = LengthReport::new(diagram, MapType::Elliptic, Provenance::Exact);
    r.order = order_if_finite(cox, ORDER_CAP)?;
    r.m = Some(Interval::point(int(1)));
    r.char_poly = Some(cox.char_poly()?);
    zero_length(&mut r);
    Ok(r)
}

fn parabolic(diagram: &Diagram, cox: &IntegerMatrix) -> Result<LengthReport> {
    let mut r = LengthReport::new(diagram, MapType::Parabolic, Provenance::Exact);
    r.mu = Some(Interval::point(int(2)));
    r.m = Some(Interval::point(int(1)));
    r.char_poly = Some(cox.char_poly()?);
    zero_length(&mut r);
    Ok(r)
}

fn hyperbolic_exact(diagram: &Diagram, adj: &AdjacencyData, tol: &BigRational) -> Result<LengthReport> {
    let cox = coxeter_element(adj)?;
    let rho = spectral_radius(&cox, tol)?;
    let mut r = LengthReport::new(diagram, MapType::Hyperbolic, Provenance::Exact);
    let len = LengthEnclosure::from_stretch(rho.interval());
    r.l_lower = Some(len.lo);
    r.l_upper = Some(len.hi);
    r.salem = salem_certify(&rho.char_poly, tol).ok();
    r.m = Some(rho.enclosure.interval.clone());
    r.char_poly = Some(rho.char_poly);
    r.mu = Some(adjacency_top(adj, tol)?);
    Ok(r)
}

/// Bounds for a diagram containing the hyperbolic tree T_{p,q,r} as a
/// subdiagram: the largest eigenvalue can only grow (interlacing), so μ of
/// the subtree gives a lower bound, and log 2 bounds every such map.
fn hyperbolic_truncated(diagram: &Diagram, arms: [usize; 3], tol: &BigRational) -> Result<LengthReport> {
    let m = mu(arms[0], arms[1], arms[2], tol)?;
    let (stretch, len) = length_from_mu(m.interval(), tol)?;
    let mut r = LengthReport::new(diagram, MapType::Hyperbolic, Provenance::Truncated);
    r.l_lower = Some(len.lo);
    r.l_upper = Some(log2_upper());
    r.mu = Some(m.enclosure.interval.clone());
    r.m = Some(Interval::new(stretch.lo, int(2)));
    r.char_poly = Some(m.char_poly);
    Ok(r)
}

fn classify_tree(diagram: &Diagram, arms: &[Arm; 3], tol: &BigRational) -> Result<LengthReport> {
    let [p, q, r] = arms.map(Arm::length);
    let s = reciprocal_sum_cmp(p, q, r);
    if !diagram.is_exact() {
        if s == Ordering::Less {
            return hyperbolic_truncated(diagram, [p, q, r], tol);
        }
        return Ok(LengthReport::unclassified(
            diagram,
            format!("lower-bound tree T({p},{q},{r}) is not hyperbolic; the type depends on the unknown arms"),
        ));
    }
    let adj = adjacency(diagram).expect("classified diagrams materialize");
    let cox = coxeter_element(&adj)?;
    match s {
        Ordering::Greater => elliptic(diagram, &cox),
        Ordering::Equal => parabolic(diagram, &cox),
        Ordering::Less => {
            let mut rep = hyperbolic_exact(diagram, &adj, tol)?;
            let m = mu(p, q, r, tol)?;
            rep.mu = Some(m.enclosure.interval);
            Ok(rep)
        }
    }
}

fn classify_cycle(diagram: &Diagram, cycle_length: usize, arm: Arm, tol: &BigRational) -> Result<LengthReport> {
    let n = cycle_length / 2;
    let r_len = arm.length();
    if !diagram.is_exact() {
        // Removing the vertex opposite v₀ leaves T_{n,n,r}.
        if reciprocal_sum_cmp(n, n, r_len) == Ordering::Less {
            return hyperbolic_truncated(diagram, [n, n, r_len], tol);
        }
        return Ok(LengthReport::unclassified(
            diagram,
            format!("lower-bound subtree T({n},{n},{r_len}) is not hyperbolic; the type depends on the unknown arm"),
        ));
    }
    let g = diagram.materialize().expect("classified diagrams materialize");
    let adj = adjacency_of_graph(&g);
    let cox = coxeter_element(&adj)?;
    let gram = gram_matrix(&adj, lambda_two(), diagram.to_string())?;
    match classify_signature(&gram)?.class {
        SignatureClass::NegativeDefinite => elliptic(diagram, &cox),
        SignatureClass::Affine { .. } => parabolic(diagram, &cox),
        SignatureClass::Lorentzian => hyperbolic_exact(diagram, &adj, tol),
        SignatureClass::OtherDegenerate => {
            Ok(LengthReport::unclassified(diagram, "Gram matrix has neither affine nor Lorentzian signature"))
        }
    }
}

/// Classifies a diagram and reports the translation length of the map.
///
/// When the class lattice is given, the spectral radius of g_* on it is
/// attached for comparison with the Coxeter element.
pub fn classify_and_report(diagram: &Diagram, lattice: Option<&ClassLattice>, tol: &BigRational) -> Result<LengthReport> {
    let mut report = match &diagram.shape {
        Shape::Tree { arms } => classify_tree(diagram, arms, tol)?,
        Shape::CycleWithArm { cycle_length, arm, .. } => classify_cycle(diagram, *cycle_length, *arm, tol)?,
        Shape::Unclassified { reason } => LengthReport::unclassified(diagram, reason.clone()),
    };
    if let Some(lat) = lattice {
        report.lattice_radius = Some(spectral_radius(&lat.g_action(), tol)?.enclosure.interval);
    }
    Ok(report)
}
