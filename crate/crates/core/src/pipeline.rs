//! The end-to-end analysis of one involution: orbit tracing, diagram,
//! class lattice, classification and the optional degree oracle.

use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::adjacency::cross_validate;
use crate::diagram::shape::{build_diagram, Diagram};
use crate::error::Result;
use crate::exact::projective::ProjectiveLinearMap;
use crate::exact::scalar::Field;
use crate::orbit::degree::{degree_growth, dynamical_degree_estimate};
use crate::orbit::trace::{trace_orbits, OrbitProfile};
use crate::picard::lattice::build_class_lattice;
use crate::spectral::report::{classify_and_report, LengthReport};

/// Default number of iterates for the symbolic degree oracle. Over ℚ the
/// coefficients of gⁿ grow quickly, so fewer iterates are taken.
pub fn default_oracle_depth(field: Field) -> usize {
    match field {
        Field::Rationals => 4,
        Field::Prime(_) => 6,
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub bound: usize,
    pub tol: BigRational,
    /// Iterates of the degree oracle; `None` skips it.
    pub oracle_depth: Option<usize>,
    /// Compare the diagram with the graph read off the class lattice.
    pub cross_check: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub field: String,
    pub alpha: Vec<Vec<String>>,
    pub bound: usize,
    pub profile: OrbitProfile,
    #[serde(serialize_with = "display")]
    pub diagram: Diagram,
    /// Whether the diagram agrees with the graph read off the class lattice
    /// (exact orbit data only).
    pub cross_validated: Option<bool>,
    pub report: LengthReport,
    pub degrees: Option<Vec<usize>>,
    pub degree_estimate: Option<f64>,
}

fn display<S: serde::Serializer>(d: &Diagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(d)
}

pub fn analyze(alpha: &ProjectiveLinearMap, opts: &AnalyzeOptions) -> Result<Analysis> {
    let orbits = trace_orbits(alpha, opts.bound)?;
    let diagram = build_diagram(&orbits.profile);
    let lattice = if diagram.is_exact() { Some(build_class_lattice(alpha, &orbits.traces)?) } else { None };
    let cross_validated = lattice.as_ref().filter(|_| opts.cross_check).map(|lat| cross_validate(&diagram, lat));
    let report = classify_and_report(&diagram, lattice.as_ref(), &opts.tol)?;
    let degrees = match opts.oracle_depth {
        Some(n) if n > 0 => Some(degree_growth(alpha, n)?),
        _ => None,
    };
    let degree_estimate = match &degrees {
        Some(d) => Some(dynamical_degree_estimate(d)?.estimate),
        None => None,
    };
    Ok(Analysis {
        field: alpha.field().to_string(),
        alpha: alpha.rows().iter().map(|row| row.iter().map(|s| s.to_string()).collect()).collect(),
        bound: opts.bound,
        profile: orbits.profile,
        diagram,
        cross_validated,
        report,
        degrees,
        degree_estimate,
    })
}
