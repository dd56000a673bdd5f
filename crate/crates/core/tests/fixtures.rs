use cremona_core::diagram::{Arm, Shape};
use cremona_core::exact::interval::parse_rational;
use cremona_core::fixtures::{self, Fixture};
use cremona_core::pipeline::{analyze, AnalyzeOptions};
use cremona_core::spectral::MapType;

fn run(f: &Fixture) -> cremona_core::pipeline::Analysis {
    let depth = f.expected.degrees.as_ref().map(|d| d.len());
    let opts = AnalyzeOptions { bound: f.bound, tol: parse_rational("1e-12").unwrap(), oracle_depth: depth, cross_check: true };
    analyze(&f.alpha().unwrap(), &opts).unwrap_or_else(|e| panic!("{}: {e}", f.name))
}

fn type_name(t: MapType) -> &'static str {
    match t {
        MapType::Elliptic => "elliptic",
        MapType::Parabolic => "parabolic",
        MapType::Hyperbolic => "hyperbolic",
        MapType::Unclassified => "unclassified",
    }
}

#[test]
fn every_fixture_parses_and_is_an_involution() {
    let all = fixtures::all();
    assert_eq!(all.len(), 11);
    for f in &all {
        assert!(f.alpha().unwrap().squares_to_identity(), "{}", f.name);
    }
    assert!(fixtures::by_name("no-such-fixture").is_err());
}

#[test]
fn every_fixture_reproduces_its_expected_data() {
    for f in fixtures::all() {
        let a = run(&f);
        let e = &f.expected;
        match &a.diagram.shape {
            Shape::Tree { arms } => {
                assert_eq!(e.shape, "tree", "{}", f.name);
                let mut lens: Vec<usize> = arms.iter().map(|a| a.length()).collect();
                lens.sort_unstable();
                assert_eq!(lens, e.arms, "{}", f.name);
                assert_eq!(arms.iter().all(|a| a.is_exact()), e.exact, "{}", f.name);
            }
            Shape::CycleWithArm { cycle_length, arm, .. } => {
                assert_eq!(e.shape, "cycle_arm", "{}", f.name);
                assert_eq!(Some(*cycle_length), e.cycle, "{}", f.name);
                assert_eq!(vec![arm.length()], e.arms, "{}", f.name);
                assert_eq!(matches!(arm, Arm::Exact(_)), e.exact, "{}", f.name);
            }
            Shape::Unclassified { reason } => panic!("{}: unclassified ({reason})", f.name),
        }
        if let Some(t) = &e.map_type {
            assert_eq!(type_name(a.report.map_type), t, "{}", f.name);
        }
        if let Some(order) = e.order {
            assert_eq!(a.report.order, Some(order), "{}", f.name);
        }
        if let Some(d) = &e.degrees {
            assert_eq!(a.degrees.as_ref(), Some(d), "{}", f.name);
        }
        if e.exact {
            assert_eq!(a.cross_validated, Some(true), "{}", f.name);
        }
    }
}

#[test]
fn parabolic_specs() {
    use cremona_core::picard::parabolic_form_check;
    let id = parabolic_form_check(&fixtures::parabolic_spec("parabolic-identity").unwrap()).unwrap();
    assert!(id.isometry_ok && id.residual.numer().sign() == num_bigint::Sign::NoSign);
    let r3 = parabolic_form_check(&fixtures::parabolic_spec("parabolic-rank3").unwrap()).unwrap();
    assert!(r3.residual.numer().sign() == num_bigint::Sign::NoSign && r3.horoball_bound_ok);
    assert!(parabolic_form_check(&fixtures::parabolic_spec("parabolic-non-isometry").unwrap()).is_err());
    assert_eq!(fixtures::parabolic_names().len(), 3);
}

#[test]
fn general_position_forces_full_degree() {
    use cremona_core::orbit::{degree_growth, trace_orbits, ArmLength};
    use cremona_core::pipeline::default_oracle_depth;
    let mut seen = 0;
    for f in fixtures::all() {
        let alpha = f.alpha().unwrap();
        let profile = trace_orbits(&alpha, f.bound).unwrap().profile;
        let Some(n) = profile
            .arm_lengths
            .iter()
            .map(|a| match a {
                ArmLength::AtLeast { n } => Some(*n),
                _ => None,
            })
            .min()
            .flatten()
        else {
            continue;
        };
        let depth = n.min(default_oracle_depth(alpha.field()));
        let expected: Vec<usize> = (1..=depth).map(|k| 1 << k).collect();
        assert_eq!(degree_growth(&alpha, depth).unwrap(), expected, "{}", f.name);
        seen += 1;
    }
    assert_eq!(seen, 2);
}
