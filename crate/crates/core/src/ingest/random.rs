use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use super::arrangement::{from_arrangement, ArrangementDoc, HyperplaneDoc, RationalDoc};
use crate::error::{InputError, Result};
use crate::semimatroid::Semimatroid;

/// Parameters of a seeded random arrangement. Equal specs give equal
/// instances on every platform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub n: usize,
    pub d: usize,
    /// Coefficients are drawn from `[-bound, bound]`.
    pub bound: u32,
}

/// Uniform draw from `[-bound, bound]` by rejection on a 64-bit word.
fn draw(rng: &mut ChaCha8Rng, bound: u32) -> i64 {
    let width = 2 * u64::from(bound) + 1;
    let zone = u64::MAX - u64::MAX % width;
    loop {
        let v = rng.next_u64();
        if v < zone {
            return (v % width) as i64 - i64::from(bound);
        }
    }
}

/// Hyperplanes `h1..hn`, normals first then offset, all integers.
///
/// The stream is ChaCha8 seeded through `seed_from_u64`; normals that come
/// out zero are redrawn together with their offset.
pub fn random_arrangement(spec: RandomSpec) -> Result<ArrangementDoc, InputError> {
    if spec.n > 0 && (spec.d == 0 || spec.bound == 0) {
        return Err(InputError::Document(
            "random hyperplanes need a positive dimension and bound".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let hyperplanes = (1..=spec.n)
        .map(|i| loop {
            let normal: Vec<i64> = (0..spec.d).map(|_| draw(&mut rng, spec.bound)).collect();
            let offset = draw(&mut rng, spec.bound);
            if normal.iter().any(|&v| v != 0) {
                break HyperplaneDoc {
                    label: format!("h{i}"),
                    normal: normal.into_iter().map(RationalDoc::integer).collect(),
                    offset: RationalDoc::integer(offset),
                };
            }
        })
        .collect();
    Ok(ArrangementDoc {
        dimension: spec.d,
        hyperplanes,
    })
}

pub fn random_instance(spec: RandomSpec) -> Result<Semimatroid> {
    from_arrangement(&random_arrangement(spec)?)
}
