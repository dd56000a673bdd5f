mod input;
mod render;

/// println! that ignores a closed stdout (e.g. output piped into `head`).
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cremona_core::diagram::{adjacency, Diagram};
use cremona_core::exact::interval::{parse_rational, Interval};
use cremona_core::fixtures;
use cremona_core::orbit::{degree_growth_capped, dynamical_degree_estimate};
use cremona_core::picard::{parabolic_form_check, ParabolicSpec};
use cremona_core::pipeline::{analyze, default_oracle_depth, AnalyzeOptions};
use cremona_core::spectral::{
    classify_and_report, classify_signature, gram::lambda_two, gram_matrix, length_from_mu, mu_table, p_of_epsilon, solve_mp,
    LengthReport,
};
use num_rational::BigRational;
use serde_json::json;

use crate::render::{sig10, table, width};

#[derive(Parser)]
#[command(name = "cremona", version, about = "Orbit data, diagrams and translation lengths of quadratic Cremona maps")]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Width of certified enclosures.
    #[arg(long, global = true, default_value = "1e-12")]
    tol: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct AlphaArgs {
    /// `q` or `fp:<p>`; defaults to the fixture's field, else `q`.
    #[arg(long)]
    field: Option<String>,
    /// A fixture name, a file, or nine inline entries ("1,0,0;0,1,0;0,0,1").
    #[arg(long)]
    alpha: String,
}

#[derive(Subcommand)]
enum Command {
    /// Trace the orbits of P, Q, R, build the diagram and classify g = σ∘α.
    Analyze {
        #[command(flatten)]
        input: AlphaArgs,
        /// Orbit bound N; defaults to the fixture's bound, else 64 over ℚ and p²+p+1 over F_p.
        #[arg(long)]
        bound: Option<usize>,
        /// Skip the symbolic degree-growth oracle.
        #[arg(long)]
        no_oracle: bool,
        /// Skip comparing the diagram with the class-lattice graph.
        #[arg(long)]
        no_cross_check: bool,
        /// Iterates computed by the degree oracle (default 4 over ℚ, 6 over F_p).
        #[arg(long)]
        oracle_depth: Option<usize>,
    },
    /// μ(p,q,r) for all 2 ≤ p ≤ q ≤ r ≤ p_max with 1/p + 1/q + 1/r ≤ 1.
    MuTable {
        #[arg(long, default_value_t = 8)]
        p_max: usize,
    },
    /// The Coxeter element of T_{p,q,r}: order, or spectral radius and Salem certificate.
    Coxeter { p: usize, q: usize, r: usize },
    /// The tail family m_p for p in [from, to].
    Mp {
        from: usize,
        /// Last p; defaults to `from`.
        to: Option<usize>,
    },
    /// Arm length p(ε) needed for log m_p > log 2 − ε.
    POfEps { eps: f64 },
    /// Check the parabolic block form on a spec (file or shipped spec name).
    ParabolicCheck { spec: String },
    /// deg(gⁿ) for n = 1..=n by symbolic composition.
    OracleDegrees {
        #[command(flatten)]
        input: AlphaArgs,
        /// Number of iterates (default 4 over ℚ, 6 over F_p).
        #[arg(long)]
        n: Option<usize>,
    },
    /// List the shipped fixtures.
    Fixtures,
}

type CliResult = Result<u8, Box<dyn std::error::Error>>;

const P_MAX_GUARD: usize = 24;
const DEGREE_CAP: usize = 10;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    let tol = parse_rational(&cli.tol).map_err(|e| format!("--tol: {e}"))?;
    if tol <= BigRational::from_integer(0.into()) {
        return Err("--tol must be positive".into());
    }
    match &cli.command {
        Command::Analyze { input, bound, no_oracle, no_cross_check, oracle_depth } => {
            cmd_analyze(cli.json, &tol, input, *bound, !no_oracle, *oracle_depth, !no_cross_check)
        }
        Command::MuTable { p_max } => cmd_mu_table(cli.json, &tol, *p_max),
        Command::Coxeter { p, q, r } => cmd_coxeter(cli.json, &tol, [*p, *q, *r]),
        Command::Mp { from, to } => cmd_mp(cli.json, &tol, *from, to.unwrap_or(*from)),
        Command::POfEps { eps } => cmd_p_of_eps(cli.json, &tol, *eps),
        Command::ParabolicCheck { spec } => cmd_parabolic_check(cli.json, spec),
        Command::OracleDegrees { input, n } => cmd_oracle_degrees(cli.json, input, *n),
        Command::Fixtures => cmd_fixtures(cli.json),
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Box<dyn std::error::Error>> {
    outln!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn enclosure(iv: &Interval) -> String {
    format!("{} (width {})", sig10(iv.mid_f64()), width(iv))
}

fn or_dash<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_else(|| "-".into())
}

fn report_lines(r: &LengthReport) -> Vec<(String, String)> {
    let mut lines = vec![
        ("type".to_string(), format!("{:?}", r.map_type).to_lowercase()),
        ("provenance".to_string(), format!("{:?}", r.provenance).to_lowercase()),
        ("order".to_string(), or_dash(r.order, |o| o.to_string())),
        ("L_lower".to_string(), or_dash(r.l_lower, sig10)),
        ("L_upper".to_string(), or_dash(r.l_upper, sig10)),
        ("mu".to_string(), or_dash(r.mu.as_ref(), enclosure)),
        ("stretch m".to_string(), or_dash(r.m.as_ref(), enclosure)),
        ("char poly".to_string(), or_dash(r.char_poly.as_ref(), |p| p.to_string())),
    ];
    if let Some(s) = &r.salem {
        let kind = if s.quadratic_unit { "quadratic unit" } else { "Salem" };
        lines.push(("salem".into(), format!("{kind} factor {}; cyclotomic {:?}", s.factor, s.cyclotomic_factors)));
    }
    if let Some(lat) = &r.lattice_radius {
        lines.push(("lattice radius".into(), enclosure(lat)));
    }
    if let Some(reason) = &r.reason {
        lines.push(("reason".into(), reason.clone()));
    }
    lines
}

fn print_pairs(pairs: &[(String, String)]) {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in pairs {
        outln!("{:<w$}  {v}", format!("{k}:"), w = w + 1);
    }
}

fn cmd_analyze(
    json: bool,
    tol: &BigRational,
    input: &AlphaArgs,
    bound: Option<usize>,
    oracle: bool,
    oracle_depth: Option<usize>,
    cross_check: bool,
) -> CliResult {
    let resolved = input::resolve(&input.alpha, input.field.as_deref())?;
    let bound = resolved.bound(bound);
    let oracle_depth = oracle.then(|| oracle_depth.unwrap_or_else(|| default_oracle_depth(resolved.alpha.field())));
    let opts = AnalyzeOptions { bound, tol: tol.clone(), oracle_depth, cross_check };
    let a = analyze(&resolved.alpha, &opts)?;
    if json {
        print_json(&a)?;
    } else {
        let mut pairs = vec![
            ("field".to_string(), a.field.clone()),
            ("alpha".to_string(), format!("{:?}", a.alpha)),
            ("bound".to_string(), a.bound.to_string()),
            ("profile".to_string(), a.profile.to_string()),
            ("diagram".to_string(), a.diagram.to_string()),
        ];
        pairs.extend(report_lines(&a.report));
        let check = match a.cross_validated {
            Some(true) => "diagram matches the class-lattice graph",
            Some(false) => "MISMATCH with the class-lattice graph",
            None => "skipped",
        };
        pairs.push(("cross-check".into(), check.into()));
        if let (Some(d), Some(e)) = (&a.degrees, a.degree_estimate) {
            pairs.push(("degrees".into(), format!("{d:?} (deg^(1/n) = {})", sig10(e))));
        }
        print_pairs(&pairs);
    }
    if a.cross_validated == Some(false) {
        eprintln!("warning: the diagram disagrees with the class-lattice graph");
    }
    Ok(a.report.exit_code() as u8)
}

fn cmd_mu_table(json: bool, tol: &BigRational, p_max: usize) -> CliResult {
    if p_max > P_MAX_GUARD {
        return Err(format!("--p-max is limited to {P_MAX_GUARD}").into());
    }
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for m in mu_table(p_max, tol)? {
        let (_, len) = length_from_mu(m.interval(), tol)?;
        let [p, q, r] = m.arms;
        let label = if m.is_two() { "affine" } else { "hyperbolic" };
        rows.push(vec![
            p.to_string(),
            q.to_string(),
            r.to_string(),
            sig10(m.interval().mid_f64()),
            width(m.interval()),
            sig10((len.lo + len.hi) / 2.0),
            label.to_string(),
        ]);
        out.push(json!({"arms": m.arms, "mu": m.interval(), "L": len, "affine": m.is_two()}));
    }
    if json {
        print_json(&out)?;
    } else {
        outln!("{}", table(&["p", "q", "r", "mu", "width", "L", "class"], &rows));
    }
    Ok(0)
}

fn cmd_coxeter(json: bool, tol: &BigRational, [p, q, r]: [usize; 3]) -> CliResult {
    if p == 0 || q == 0 || r == 0 {
        return Err("arm lengths must be at least 1".into());
    }
    let diagram = Diagram::tree(p, q, r);
    let adj = adjacency(&diagram).ok_or("tree has no adjacency matrix")?;
    let signature = classify_signature(&gram_matrix(&adj, lambda_two(), diagram.to_string())?)?;
    let report = classify_and_report(&diagram, None, tol)?;
    if json {
        print_json(&json!({"arms": [p, q, r], "signature": signature, "report": report}))?;
    } else {
        let i = &signature.inertia;
        let mut pairs = vec![
            ("diagram".to_string(), diagram.to_string()),
            ("signature".to_string(), format!("(+{}, -{}, 0:{})", i.positive, i.negative, i.zero)),
        ];
        pairs.extend(report_lines(&report));
        print_pairs(&pairs);
    }
    Ok(report.exit_code() as u8)
}

fn cmd_mp(json: bool, tol: &BigRational, from: usize, to: usize) -> CliResult {
    if from > to {
        return Err("empty range".into());
    }
    let ln2 = std::f64::consts::LN_2;
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for p in from..=to {
        let m = solve_mp(p, tol)?;
        let log_m = m.mid_f64().ln();
        rows.push(vec![p.to_string(), sig10(m.mid_f64()), width(&m.interval), sig10(log_m), format!("{:.3e}", ln2 - log_m)]);
        out.push(json!({"p": p, "m": m.interval}));
    }
    if json {
        print_json(&out)?;
    } else {
        outln!("{}", table(&["p", "m_p", "width", "log m_p", "log 2 - log m_p"], &rows));
    }
    Ok(0)
}

fn cmd_p_of_eps(json: bool, tol: &BigRational, eps: f64) -> CliResult {
    let r = p_of_epsilon(eps, tol)?;
    if json {
        print_json(&json!({"epsilon": eps, "formula": r.formula, "least": r.least}))?;
    } else {
        print_pairs(&[
            ("epsilon".into(), eps.to_string()),
            ("formula ceil(ln(3/eps)/ln(2-eps))".into(), r.formula.to_string()),
            ("least p with log m_p > log 2 - eps".into(), r.least.to_string()),
        ]);
    }
    Ok(0)
}

fn load_spec(spec: &str) -> Result<ParabolicSpec, Box<dyn std::error::Error>> {
    if let Ok(s) = fixtures::parabolic_spec(spec) {
        return Ok(s);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
    Ok(serde_json::from_str(&text)?)
}

fn cmd_parabolic_check(json: bool, spec: &str) -> CliResult {
    let r = parabolic_form_check(&load_spec(spec)?)?;
    if json {
        print_json(&r)?;
    } else {
        print_pairs(&[
            ("isometry".into(), r.isometry_ok.to_string()),
            ("(f(x).x)".into(), r.product_value.to_string()),
            ("closed form".into(), r.identity_value.to_string()),
            ("residual".into(), r.residual.to_string()),
            ("z".into(), r.z.to_string()),
            ("min displacement".into(), or_dash(r.min_displacement.as_ref(), |d| d.to_string())),
            ("horoball bound".into(), if r.horoball_bound_ok { "holds" } else { "fails" }.into()),
        ]);
    }
    Ok(if r.residual == BigRational::from_integer(0.into()) { 0 } else { 1 })
}

fn cmd_oracle_degrees(json: bool, input: &AlphaArgs, n: Option<usize>) -> CliResult {
    let resolved = input::resolve(&input.alpha, input.field.as_deref())?;
    let n = n.unwrap_or_else(|| default_oracle_depth(resolved.alpha.field()));
    let degrees = degree_growth_capped(&resolved.alpha, n, DEGREE_CAP)?;
    let est = dynamical_degree_estimate(&degrees)?;
    if json {
        print_json(&est)?;
    } else {
        print_pairs(&[("degrees".into(), format!("{degrees:?}")), ("deg^(1/n)".into(), sig10(est.estimate))]);
    }
    Ok(0)
}

fn cmd_fixtures(json: bool) -> CliResult {
    let all = fixtures::all();
    if json {
        print_json(&all)?;
    } else {
        let rows: Vec<Vec<String>> =
            all.iter().map(|f| vec![f.name.clone(), f.field.clone(), f.bound.to_string(), f.description.clone()]).collect();
        outln!("{}", table(&["name", "field", "bound", "description"], &rows));
        outln!("parabolic specs: {}", fixtures::parabolic_names().join(", "));
    }
    Ok(0)
}
