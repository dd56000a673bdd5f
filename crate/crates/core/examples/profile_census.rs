//! Census of exact orbit profiles of random involutions over a prime field.
//!
//! Usage: cargo run -p cremona-core --example profile_census -- <prime> <draws> <bound> [seed]

use std::collections::BTreeMap;

use cremona_core::diagram::{build_diagram, Shape};
use cremona_core::exact::scalar::Field;
use cremona_core::orbit::{random_involution, trace_orbits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (p, draws, bound) = (args[0], args[1], args[2] as usize);
    let seed = args.get(3).copied().unwrap_or(0);
    let field = Field::prime(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut census: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for _ in 0..draws {
        let alpha = random_involution(field, &mut rng).unwrap();
        let a = trace_orbits(&alpha, bound).unwrap();
        let d = build_diagram(&a.profile);
        if !d.is_exact() {
            continue;
        }
        let key = match &d.shape {
            Shape::Tree { arms } => {
                let mut l = arms.map(|x| x.length());
                l.sort_unstable();
                format!("T{l:?}")
            }
            _ => d.to_string(),
        };
        let e = census.entry(key).or_insert((0, alpha.to_string()));
        e.0 += 1;
    }
    for (k, (n, example)) in census {
        println!("{k}\t{n}\t{example}");
    }
}
