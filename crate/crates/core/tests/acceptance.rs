//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! (written straight to stderr so it survives output capture); the test
//! fails if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use cremona_core::diagram::{adjacency, Arm, Diagram};
use cremona_core::exact::interval::{int, parse_rational, ratio, Interval};
use cremona_core::exact::matrix::{IntegerMatrix, RationalMatrix};
use cremona_core::exact::poly::IntegerPolynomial;
use cremona_core::exact::scalar::Field;
use cremona_core::fixtures;
use cremona_core::orbit::{degree_growth, random_involution, trace_orbits};
use cremona_core::picard::{
    build_class_lattice, build_graph_direct, parabolic_form_check, point_on_sheet, within_horoball, ParabolicSpec,
};
use cremona_core::pipeline::{analyze, Analysis, AnalyzeOptions};
use cremona_core::spectral::mu::{closed_form_quartic, mu_is_root_of, reciprocal_sum_cmp};
use cremona_core::spectral::{
    classify_and_report, classify_signature, coxeter_element, gram_matrix, mu, mu_table, order_if_finite,
    p_of_epsilon, salem_certify, solve_mp, Lambda, MapType, Provenance, SignatureClass,
};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn tol() -> BigRational {
    parse_rational("1e-12").unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn run_fixture(name: &str, oracle_depth: Option<usize>) -> Result<Analysis, String> {
    let f = fixtures::by_name(name).map_err(e)?;
    let opts = AnalyzeOptions { bound: f.bound, tol: tol(), oracle_depth, cross_check: true };
    analyze(&f.alpha().map_err(e)?, &opts).map_err(|err| format!("{name}: {err}"))
}

/// μ values of the extremal and small trees, and the bracket [2, 3/√2].
fn mu_table_values() -> Outcome {
    let start = Instant::now();
    let t = tol();
    for (p, q, r) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
        ensure(mu(p, q, r, &t).map_err(e)?.is_two(), || format!("mu({p},{q},{r}) is not exactly 2"))?;
    }
    for (n, target, tolerance) in [(4, 2.0743, 1e-4), (5, 2.101, 1e-4), (6, 2.112, 1e-3)] {
        let m = mu(n, n, n, &t).map_err(e)?;
        let x = m.enclosure.mid_f64();
        ensure((x - target).abs() < tolerance && m.enclosure.width_f64() < tolerance, || {
            format!("mu({n},{n},{n}) = {x}, expected {target} ± {tolerance}")
        })?;
        if let Some(q) = closed_form_quartic(n) {
            ensure(mu_is_root_of(&m, &q), || format!("mu({n},{n},{n}) is not a root of {q}"))?;
        }
    }
    let table = mu_table(8, &t).map_err(e)?;
    let upper = ratio(21214, 10000);
    for m in &table {
        let iv = m.interval();
        ensure(iv.lo >= int(2) && iv.hi <= upper, || format!("mu{:?} = {} outside [2, 2.1214]", m.arms, iv.mid_f64()))?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{} rows for p_max = 8 in {:?}", table.len(), start.elapsed()))
}

/// Coxeter orders of E6, E7, E8, checked against direct powering.
fn coxeter_orders() -> Outcome {
    let start = Instant::now();
    for ((p, q, r), h) in [((2, 3, 3), 12u64), ((2, 3, 4), 18), ((2, 3, 5), 30)] {
        let adj = adjacency(&Diagram::tree(p, q, r)).ok_or("no adjacency")?;
        let c = coxeter_element(&adj).map_err(e)?;
        let order = order_if_finite(&c, 10_000).map_err(e)?;
        ensure(order == Some(h), || format!("T({p},{q},{r}): order {order:?}, expected {h}"))?;
        // Independent check: the first power equal to the identity.
        let mut power = c.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.mul(&c).map_err(e)?;
            k += 1;
            ensure(k <= h, || format!("T({p},{q},{r}): no identity by power {h}"))?;
        }
        ensure(k == h, || format!("T({p},{q},{r}): direct powering gives {k}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("orders 12, 18, 30 in {:?}", start.elapsed()))
}

/// T(2,3,7): Lehmer's polynomial exactly, a Salem certificate, and the length.
fn lehmer() -> Outcome {
    let lehmer = IntegerPolynomial::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let r = classify_and_report(&Diagram::tree(2, 3, 7), None, &tol()).map_err(e)?;
    let chi = r.char_poly.clone().ok_or("no characteristic polynomial")?;
    ensure(chi == lehmer, || format!("char poly {chi}"))?;
    let cert = salem_certify(&chi, &tol()).map_err(e)?;
    ensure(cert.factor == lehmer && cert.cyclotomic_factors.is_empty(), || "certificate factor".into())?;
    ensure(r.map_type == MapType::Hyperbolic, || format!("type {:?}", r.map_type))?;
    let (lo, hi) = (r.l_lower.ok_or("no L_lower")?, r.l_upper.ok_or("no L_upper")?);
    ensure(hi - lo <= 1e-8, || format!("enclosure width {}", hi - lo))?;
    // The quoted decimal 1.17628082 carries eight decimals, so it stands for
    // [1.176280815, 1.176280825]; the length enclosure must meet its log.
    let (q_lo, q_hi) = (1.176_280_815_f64.ln(), 1.176_280_825_f64.ln());
    ensure(lo <= q_hi && q_lo <= hi, || format!("[{lo}, {hi}] misses log 1.17628082"))?;
    let root = cert.salem_root.mid_f64().ln();
    ensure(lo <= root && root <= hi, || format!("[{lo}, {hi}] misses log of the certified root {root}"))?;
    Ok(format!("L in [{lo:.12}, {hi:.12}], width {:.1e}", hi - lo))
}

/// The general F_1009 involution with N = 40: hyperbolic, L in (log m_40, log 2].
fn general_position_pipeline() -> Outcome {
    let start = Instant::now();
    let a = run_fixture("general-f1009", None)?;
    let r = &a.report;
    ensure(a.bound == 40, || format!("bound {}", a.bound))?;
    ensure(r.map_type == MapType::Hyperbolic && r.provenance == Provenance::Truncated, || {
        format!("{:?} / {:?}", r.map_type, r.provenance)
    })?;
    let (lo, hi) = (r.l_lower.ok_or("no L_lower")?, r.l_upper.ok_or("no L_upper")?);
    let m40 = solve_mp(40, &tol()).map_err(e)?;
    let (log_m_lo, log_m_hi) = (m40.interval.lo_f64().ln(), m40.interval.hi_f64().ln());
    let ln2 = std::f64::consts::LN_2;
    // L_lower is log m_40 up to the enclosure widths; L_upper is log 2 rounded up.
    ensure((lo - log_m_lo).abs() < 1e-10 && lo <= log_m_hi + 1e-12, || format!("L_lower {lo} vs log m_40 {log_m_lo}"))?;
    ensure(hi >= ln2 && hi - ln2 <= f64::EPSILON, || format!("L_upper {hi}"))?;
    let gap = ln2 - log_m_lo;
    let rate = 4.0 * 0.6f64.powi(40);
    ensure(gap > 0.0 && gap < rate + 1e-12, || format!("log 2 - log m_40 = {gap:e} vs 4·0.6^40 = {rate:e}"))?;
    ensure(hi - lo < 1e-8, || format!("gap {}", hi - lo))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("L in [{lo:.12}, {hi:.12}], log 2 - log m_40 = {gap:.2e} < {rate:.2e}"))
}

/// μ(p,p,p)² = m_p + 1/m_p + 2 for p = 4, 5, on exact enclosures.
fn tail_family_consistency() -> Outcome {
    let t = tol();
    let mut widths = Vec::new();
    for p in [4, 5] {
        let m = mu(p, p, p, &t).map_err(e)?;
        let mu_sq = m.interval().square_nonneg();
        let mp = solve_mp(p, &t).map_err(e)?.interval;
        // m + 1/m is increasing for m ≥ 1.
        let f = |x: &BigRational| x + x.recip() + int(2);
        let rhs = Interval::new(f(&mp.lo), f(&mp.hi));
        ensure(mu_sq.lo <= rhs.hi && rhs.lo <= mu_sq.hi, || format!("p = {p}: enclosures are disjoint"))?;
        let combined = mu_sq.width_f64() + rhs.width_f64();
        ensure(combined <= 1e-9, || format!("p = {p}: combined width {combined:e}"))?;
        widths.push(combined);
    }
    Ok(format!("overlap at p = 4, 5 with combined widths {:.1e}, {:.1e}", widths[0], widths[1]))
}

fn p_of_epsilon_bound() -> Outcome {
    let mut parts = Vec::new();
    for eps in [0.5, 0.1, 0.01, 0.001] {
        let r = p_of_epsilon(eps, &parse_rational("1e-15").unwrap()).map_err(e)?;
        ensure(r.least <= r.formula, || format!("eps = {eps}: least {} > formula {}", r.least, r.formula))?;
        parts.push(format!("{eps}: {} <= {}", r.least, r.formula));
    }
    Ok(parts.join(", "))
}

/// Every cycle of the graph read off the class lattice has even length, over
/// 1000 random involutions with finite orbit data (draws whose traces stop on
/// the triangle or at a base point have no lattice and are redrawn).
fn even_cycles() -> Outcome {
    const GRAPHS: usize = 1000;
    const MAX_DRAWS: usize = 50_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut graphs, mut cycles, mut draws) = (0, 0, 0);
    let mut per_field = [0usize; 3];
    while graphs < GRAPHS {
        ensure(draws < MAX_DRAWS, || format!("only {graphs} graphs in {MAX_DRAWS} draws"))?;
        let slot = graphs % 3;
        let field = Field::prime([5, 7, 11][slot]).map_err(e)?;
        draws += 1;
        let alpha = random_involution(field, &mut rng).map_err(e)?;
        let bound = field.plane_size().unwrap() as usize;
        let orbits = trace_orbits(&alpha, bound).map_err(e)?;
        let Ok(lat) = build_class_lattice(&alpha, &orbits.traces) else { continue };
        let g = build_graph_direct(&lat).map_err(|err| format!("{alpha}: {err}"))?;
        for len in g.g.cycle_lengths().into_iter().chain(g.h.cycle_lengths()) {
            ensure(len % 2 == 0, || format!("{alpha} over {field}: cycle of length {len}"))?;
            cycles += 1;
        }
        per_field[slot] += 1;
        graphs += 1;
    }
    Ok(format!(
        "{graphs} graphs (F_5 {}, F_7 {}, F_11 {}) from {draws} draws, {cycles} basis cycles, all even",
        per_field[0], per_field[1], per_field[2]
    ))
}

/// Diagram versus class-lattice graph, and the two spectral radii.
fn cross_validation() -> Outcome {
    let mut checked = Vec::new();
    for f in fixtures::all() {
        if !f.expected.exact {
            continue;
        }
        let a = run_fixture(&f.name, None)?;
        ensure(a.cross_validated == Some(true), || format!("{}: diagram and lattice graph differ", f.name))?;
        let lat = a.report.lattice_radius.as_ref().ok_or_else(|| format!("{}: no lattice radius", f.name))?;
        let (lo, hi) = (a.report.l_lower.unwrap_or(f64::NAN), a.report.l_upper.unwrap_or(f64::NAN));
        let (llo, lhi) = (lat.lo_f64().ln(), lat.hi_f64().ln());
        ensure((llo - lo).abs() <= 1e-8 && (lhi - hi).abs() <= 1e-8, || {
            format!("{}: log radius [{llo}, {lhi}] vs L [{lo}, {hi}]", f.name)
        })?;
        checked.push(f.name);
    }
    Ok(format!("{} exact fixtures: {}", checked.len(), checked.join(", ")))
}

/// Symbolic degrees against known sequences and the computed stretch factors.
fn degree_oracle() -> Outcome {
    let start = Instant::now();
    let id = fixtures::by_name("identity-q").map_err(e)?.alpha().map_err(e)?;
    let d = degree_growth(&id, 4).map_err(e)?;
    ensure(d == vec![2, 1, 2, 1], || format!("identity: {d:?}"))?;
    let general = fixtures::by_name("general-q").map_err(e)?.alpha().map_err(e)?;
    let d = degree_growth(&general, 3).map_err(e)?;
    ensure(d == vec![2, 4, 8], || format!("general-q: {d:?}"))?;
    let mut parts = Vec::new();
    for f in fixtures::all() {
        if f.expected.map_type.as_deref() != Some("hyperbolic") {
            continue;
        }
        let a = run_fixture(&f.name, Some(6))?;
        let rho = a.report.m.as_ref().ok_or("no stretch factor")?.hi_f64();
        let degrees = a.degrees.as_ref().ok_or("no degrees")?;
        let n = degrees.len();
        let growth = (degrees[n - 1] as f64).powf(1.0 / n as f64);
        ensure(growth >= rho - 0.25, || format!("{}: deg^(1/{n}) = {growth} < {rho} - 0.25", f.name))?;
        parts.push(format!("{} {growth:.3} >= {rho:.3} - 0.25", f.name));
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(parts.join("; "))
}

/// Inertia by Jacobi's rule on leading principal minors; `None` if a minor vanishes.
fn inertia_from_minors(g: &IntegerMatrix) -> Result<Option<(usize, usize)>, String> {
    let n = g.rows();
    let mut prev = BigInt::one();
    let (mut pos, mut neg) = (0, 0);
    for k in 1..=n {
        let rows: Vec<Vec<BigInt>> = (0..k).map(|i| g.row(i)[..k].to_vec()).collect();
        let d = IntegerMatrix::from_rows(rows).map_err(e)?.det().map_err(e)?;
        if d.is_zero() {
            return Ok(None);
        }
        if d.is_positive() == prev.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        prev = d;
    }
    Ok(Some((pos, neg)))
}

/// Exact signatures against floating-point eigenvalue signs, plus the
/// affine and Lorentzian predictions.
fn signature_oracle() -> Outcome {
    const MAX_VERTICES: usize = 14;
    let mut diagrams = Vec::new();
    for p in 1..=MAX_VERTICES {
        for q in p..=MAX_VERTICES {
            for r in q..=MAX_VERTICES {
                if p + q + r - 2 <= MAX_VERTICES {
                    diagrams.push(Diagram::tree(p, q, r));
                }
            }
        }
    }
    for n in 2..=MAX_VERTICES / 2 {
        for r in 1..=MAX_VERTICES {
            if 2 * n + r - 1 <= MAX_VERTICES {
                diagrams.push(Diagram::cycle_with_arm(2 * n, Arm::Exact(r)));
            }
        }
    }
    let (mut resolved, mut affine, mut lorentzian) = (0, 0, 0);
    for d in &diagrams {
        let adj = adjacency(d).ok_or_else(|| format!("{d}: no adjacency"))?;
        let gram = gram_matrix(&adj, Lambda::Rational(int(2)), d.to_string()).map_err(e)?;
        let exact = classify_signature(&gram).map_err(e)?;
        let g = gram.gram().ok_or("rational gram")?;
        let n = g.rows();
        let m = DMatrix::from_fn(n, n, |i, j| g.to_f64_rows()[i][j]);
        let eig = m.symmetric_eigen().eigenvalues;
        let pos = eig.iter().filter(|&&x| x > 1e-9).count();
        let neg = eig.iter().filter(|&&x| x < -1e-9).count();
        let (ex_pos, ex_neg) = (exact.inertia.positive, exact.inertia.negative);
        if (pos, neg) != (ex_pos, ex_neg) {
            let ints = IntegerMatrix::from_rows(
                g.to_rows().into_iter().map(|row| row.into_iter().map(|v| v.to_integer()).collect()).collect(),
            )
            .map_err(e)?;
            let minors = inertia_from_minors(&ints)?;
            ensure(minors == Some((ex_pos, ex_neg)), || {
                format!("{d}: exact ({ex_pos}, {ex_neg}), floating ({pos}, {neg}), minors {minors:?}")
            })?;
            resolved += 1;
        }
        match &d.shape {
            cremona_core::diagram::Shape::Tree { arms } => {
                let [p, q, r] = arms.map(|a| a.length());
                let is_affine = matches!(exact.class, SignatureClass::Affine { .. });
                let balanced = reciprocal_sum_cmp(p, q, r) == std::cmp::Ordering::Equal;
                ensure(is_affine == balanced, || format!("{d}: affine {is_affine}, 1/p+1/q+1/r = 1 {balanced}"))?;
                affine += usize::from(is_affine);
            }
            cremona_core::diagram::Shape::CycleWithArm { cycle_length, arm, .. } => {
                let (n, r) = (cycle_length / 2, arm.length());
                // 2/n + 1/r < 1  ⇔  2r + n < nr.
                if 2 * r + n < n * r {
                    ensure(exact.class == SignatureClass::Lorentzian, || format!("{d}: {:?}", exact.class))?;
                    lorentzian += 1;
                }
            }
            _ => {}
        }
    }
    Ok(format!(
        "{} diagrams agree ({resolved} resolved by minors); {affine} affine trees, {lorentzian} predicted Lorentzian cycles",
        diagrams.len()
    ))
}

fn random_rational(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> BigRational {
    ratio(rng.gen_range(-range..=range), rng.gen_range(1..=max_den))
}

/// A random spec of rank k + 2: Q′ = −d·MᵀM and f̃ = M⁻¹RM with R a rational
/// rotation or reflection (k = 2) or ±1 (k = 1), so f̃ is an isometry of Q′.
fn random_spec(rng: &mut ChaCha8Rng, k: usize) -> ParabolicSpec {
    let rm = |rows: Vec<Vec<BigRational>>| RationalMatrix::from_rows(rows).unwrap();
    let (m, m_inv, r) = if k == 1 {
        let a = int(rng.gen_range(1..=3));
        let sign = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
        (rm(vec![vec![a.clone()]]), rm(vec![vec![a.recip()]]), rm(vec![vec![sign]]))
    } else {
        let (a, b, c, dd) = loop {
            let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
            if v[0] * v[3] - v[1] * v[2] != 0 {
                break (int(v[0]), int(v[1]), int(v[2]), int(v[3]));
            }
        };
        let det = &a * &dd - &b * &c;
        let m = rm(vec![vec![a.clone(), b.clone()], vec![c.clone(), dd.clone()]]);
        let m_inv = rm(vec![vec![&dd / &det, -&b / &det], vec![-&c / &det, &a / &det]]);
        let r = match rng.gen_range(0..3) {
            0 => RationalMatrix::identity(2),
            kind => {
                let (s, t) = (rng.gen_range(1..=4i64), rng.gen_range(1..=4i64));
                let (ca, sb, hyp) = (s * s - t * t, 2 * s * t, s * s + t * t);
                let (cos, sin) = (ratio(ca, hyp), ratio(sb, hyp));
                if kind == 1 {
                    rm(vec![vec![cos.clone(), -sin.clone()], vec![sin, cos]])
                } else {
                    rm(vec![vec![cos.clone(), sin.clone()], vec![sin, -cos]])
                }
            }
        };
        (m, m_inv, r)
    };
    let d = int(rng.gen_range(1..=2));
    let mtm = m.transpose().mul(&m).unwrap();
    let q_prime = rm(mtm.to_rows().into_iter().map(|row| row.into_iter().map(|v| -&d * v).collect()).collect());
    let f_tilde = m_inv.mul(&r).unwrap().mul(&m).unwrap();
    let zeta: Vec<BigRational> = loop {
        let z: Vec<BigRational> = (0..k).map(|_| int(rng.gen_range(-3..=3))).collect();
        if z.iter().any(|v| !v.is_zero()) {
            break z;
        }
    };
    let y: Vec<BigRational> = (0..k).map(|_| random_rational(rng, 5, 4)).collect();
    let z = ratio(rng.gen_range(1..=12), rng.gen_range(1..=4));
    let x = point_on_sheet(&q_prime, &y, &z).unwrap();
    ParabolicSpec { q_prime, f_tilde, zeta, x }
}

/// The block-form identity with zero residual, and the horoball bound
/// whenever the displacement of the translation part is at least 1.
fn parabolic_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut with_bound = 0;
    for i in 0..200 {
        let k = 1 + i % 2;
        let spec = random_spec(&mut rng, k);
        let r = parabolic_form_check(&spec).map_err(|err| format!("spec {i}: {err}"))?;
        ensure(r.isometry_ok, || format!("spec {i}: block matrix is not an isometry"))?;
        ensure(r.residual.is_zero(), || format!("spec {i}: residual {}", r.residual))?;
        let displacement = r.min_displacement.clone().ok_or("no displacement")?;
        if displacement >= BigRational::one() {
            // Impose d(x, f(x)) < ε through cosh ε > (f(x).x).
            let cosh_eps = &r.product_value + ratio(1, rng.gen_range(1..=1000));
            ensure(within_horoball(&r.z, &cosh_eps), || format!("spec {i}: z = {} outside the horoball", r.z))?;
            ensure(r.horoball_bound_ok, || format!("spec {i}: (f(x).x) < 1 + z²/2"))?;
            with_bound += 1;
        }
    }
    ensure(with_bound >= 20, || format!("only {with_bound} specs had displacement >= 1"))?;
    Ok(format!("200 specs with zero residual; horoball bound checked on {with_bound}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("mu table", mu_table_values),
        ("Coxeter orders", coxeter_orders),
        ("Lehmer polynomial and length", lehmer),
        ("general position over F_1009", general_position_pipeline),
        ("tail family consistency", tail_family_consistency),
        ("p(eps) bound", p_of_epsilon_bound),
        ("even cycles", even_cycles),
        ("diagram/lattice cross-validation", cross_validation),
        ("degree oracle", degree_oracle),
        ("signature oracle", signature_oracle),
        ("parabolic identity", parabolic_identity),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("PASS {:>2} {name}: {detail}", i + 1),
            Err(reason) => {
                failed.push(i + 1);
                format!("FAIL {:>2} {name}: {reason}", i + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
