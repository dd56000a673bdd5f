//! Random projective involutions, reproducible from a seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::projective::ProjectiveLinearMap;
use crate::exact::scalar::{Field, Scalar};

/// Coefficient range for random involutions over ℚ.
pub const RATIONAL_COEFF_BOUND: i64 = 9;

fn random_scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    match field {
        Field::Rationals => Scalar::from_i64(field, rng.gen_range(-RATIONAL_COEFF_BOUND..=RATIONAL_COEFF_BOUND)),
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
    }
}

/// A uniformly random reflection: random line and centre, redrawn until the
/// centre is off the line.
pub fn random_involution(field: Field, rng: &mut impl Rng) -> Result<ProjectiveLinearMap> {
    loop {
        let line: [Scalar; 3] = std::array::from_fn(|_| random_scalar(field, rng));
        let center: [Scalar; 3] = std::array::from_fn(|_| random_scalar(field, rng));
        if let Ok(m) = ProjectiveLinearMap::reflection(line, center) {
            return Ok(m);
        }
    }
}

/// The first `count` involutions of the stream seeded by `seed`.
pub fn seeded_involutions(field: Field, seed: u64, count: usize) -> Result<Vec<ProjectiveLinearMap>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_involution(field, &mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections_are_involutions() {
        for field in [Field::Rationals, Field::Prime(5), Field::Prime(1009)] {
            for m in seeded_involutions(field, 7, 50).unwrap() {
                assert!(m.is_projective_involution(), "{m}");
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = seeded_involutions(Field::Prime(11), 42, 5).unwrap();
        let b = seeded_involutions(Field::Prime(11), 42, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reflection_fixes_line_and_centre() {
        let f = Field::Rationals;
        let s = |v: [i64; 3]| v.map(|x| Scalar::from_i64(f, x));
        let m = ProjectiveLinearMap::reflection(s([1, 2, 3]), s([1, 1, 1])).unwrap();
        let centre = crate::exact::projective::ProjectivePoint::from_i64(f, [1, 1, 1]).unwrap();
        assert_eq!(m.apply(&centre).unwrap(), centre);
        let on_line = crate::exact::projective::ProjectivePoint::from_i64(f, [3, 0, -1]).unwrap();
        assert_eq!(m.apply(&on_line).unwrap(), on_line);
    }
}
