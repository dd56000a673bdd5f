//! Search for involutions α over prime fields whose base-point orbits have
//! prescribed exact arm lengths (p, q, r), with p = 2 imposed by
//! construction.
//!
//! Arm length 2 at P means α(P) is one of the four fixed points (1:±1:±1)
//! of σ. A reflection with centre U sends P to s exactly when U lies on the
//! line Ps and its fixed line passes through the harmonic conjugate of U with
//! respect to P and s. With U = P + b·s that conjugate is P − b·s, which leaves
//! a two-parameter family (b, pencil parameter) to enumerate against the two
//! remaining coincidence conditions.
//!
//! Usage: cargo run -p cremona-core --example fixture_search -- <q> <r> <prime>...

use cremona_core::diagram::{build_diagram, cross_validate};
use cremona_core::exact::projective::ProjectiveLinearMap;
use cremona_core::exact::scalar::{Field, Scalar};
use cremona_core::orbit::trace_orbits;
use cremona_core::picard::build_class_lattice;

fn pencil_basis(h: &[i64; 3]) -> ([i64; 3], [i64; 3]) {
    if h[0] != 0 {
        ([-h[1], h[0], 0], [-h[2], 0, h[0]])
    } else if h[1] != 0 {
        ([h[1], -h[0], 0], [0, -h[2], h[1]])
    } else {
        ([h[2], 0, -h[0]], [0, h[2], -h[1]])
    }
}

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (q, r) = (args[0] as usize, args[1] as usize);
    let mut target = [2, q, r];
    target.sort_unstable();
    let bound = r.max(q) + 4;
    for &p in &args[2..] {
        let field = Field::prime(p).unwrap();
        let sc = |v: [i64; 3]| v.map(|x| Scalar::from_i64(field, x.rem_euclid(p as i64)));
        let mut found = 0;
        for s in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            for b in 1..p as i64 {
                let u = [1 + b * s[0], b * s[1], b * s[2]];
                let h = [1 - b * s[0], -b * s[1], -b * s[2]];
                let (l1, l2) = pencil_basis(&h);
                for k in 0..=p as i64 {
                    let line = if k == p as i64 { l2 } else { [0, 1, 2].map(|i| l1[i] + k * l2[i]) };
                    let Ok(alpha) = ProjectiveLinearMap::reflection(sc(line), sc(u)) else { continue };
                    let Ok(a) = trace_orbits(&alpha, bound) else { continue };
                    let Some(mut arms) = a.profile.is_exact() else { continue };
                    arms.sort_unstable();
                    if arms != target {
                        continue;
                    }
                    let d = build_diagram(&a.profile);
                    let ok = build_class_lattice(&alpha, &a.traces).map(|lat| cross_validate(&d, &lat)).unwrap_or(false);
                    println!("p={p} alpha={alpha} profile={} cross_validate={ok}", a.profile);
                    found += 1;
                    if found >= 3 {
                        return;
                    }
                }
            }
        }
        eprintln!("p={p}: searched, {found} found");
    }
}
