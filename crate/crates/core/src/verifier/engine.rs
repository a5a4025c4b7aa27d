//! Instance enumeration shared by all suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    random_coordinate_range, Counterexample, IdentityId, IdentityVerdict, Inputs, SampleMode,
    SuiteConfig, Value, MAX_COUNTEREXAMPLES,
};
use crate::linalg::Vector;

/// Outcome of evaluating an identity on one tuple.
pub(crate) struct Check {
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
}

impl Check {
    pub fn vectors(lhs: Vector, rhs: Vector) -> Self {
        let holds = lhs == rhs;
        Check {
            lhs: Value::Vector(lhs),
            rhs: Value::Vector(rhs),
            holds,
        }
    }

    pub fn matrices(lhs: crate::linalg::SquareMatrix, rhs: crate::linalg::SquareMatrix) -> Self {
        let holds = lhs == rhs;
        Check {
            lhs: Value::Matrix(lhs),
            rhs: Value::Matrix(rhs),
            holds,
        }
    }
}

/// Arguments handed to an identity: always vectors, plus basis indices when
/// the tuple comes from an exhaustive scan (so evaluators may use caches).
pub(crate) struct Args<'a> {
    pub vectors: &'a [Vector],
    pub indices: Option<&'a [usize]>,
}

pub(crate) type Evaluator<'a> = Box<dyn Fn(&Args) -> Check + Send + Sync + 'a>;

pub(crate) struct Identity<'a> {
    pub id: IdentityId,
    /// Dimension of the space each argument ranges over.
    pub dim: usize,
    pub eval: Evaluator<'a>,
}

fn decode(mut n: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut idx = vec![0; arity];
    for slot in (0..arity).rev() {
        idx[slot] = n % dim;
        n /= dim;
    }
    idx
}

/// Independent, reproducible stream per (seed, identity, purpose).
fn rng_for(seed: u64, id: IdentityId, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((id.sampling_key() as u64) << 8) | stream);
    rng
}

fn random_tuples(rng: &mut ChaCha8Rng, dim: usize, arity: usize, count: usize) -> Vec<Vec<Vector>> {
    (0..count)
        .map(|_| {
            (0..arity)
                .map(|_| {
                    (0..dim)
                        .map(|_| rng.gen_range(random_coordinate_range()).into())
                        .collect()
                })
                .collect()
        })
        .collect()
}

const STREAM_RANDOM: u64 = 1;
const STREAM_GUARD: u64 = 2;

impl Identity<'_> {
    pub fn run(&self, config: &SuiteConfig) -> IdentityVerdict {
        let arity = self.id.arity();
        let (mode, count) = config.plan(self.dim, arity);
        let mut failures: Vec<Counterexample> = Vec::new();
        let mut failure_count = 0usize;
        let mut guard_samples = 0;

        match mode {
            SampleMode::Exhaustive => {
                let basis: Vec<Vector> =
                    (0..self.dim).map(|i| Vector::basis(self.dim, i)).collect();
                let found: Vec<(Vec<usize>, Check)> = (0..count)
                    .into_par_iter()
                    .filter_map(|n| {
                        let idx = decode(n, self.dim, arity);
                        let vectors: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
                        let check = (self.eval)(&Args {
                            vectors: &vectors,
                            indices: Some(&idx),
                        });
                        (!check.holds).then_some((idx, check))
                    })
                    .collect();
                failure_count += found.len();
                failures.extend(found.into_iter().map(|(idx, c)| Counterexample {
                    inputs: Inputs::Basis(idx),
                    lhs: c.lhs,
                    rhs: c.rhs,
                    guard: false,
                }));

                guard_samples = config.guard_samples;
                if guard_samples > 0 && self.dim > 0 {
                    let mut rng = rng_for(config.seed, self.id, STREAM_GUARD);
                    let tuples = random_tuples(&mut rng, self.dim, arity, guard_samples);
                    let guard = self.evaluate_vectors(tuples);
                    failure_count += guard.len();
                    failures.extend(guard.into_iter().map(|mut c| {
                        c.guard = true;
                        c
                    }));
                }
            }
            SampleMode::Random => {
                let tuples = if self.dim == 0 {
                    Vec::new()
                } else {
                    let mut rng = rng_for(config.seed, self.id, STREAM_RANDOM);
                    random_tuples(&mut rng, self.dim, arity, count)
                };
                let found = self.evaluate_vectors(tuples);
                failure_count += found.len();
                failures.extend(found);
            }
        }

        failures.truncate(MAX_COUNTEREXAMPLES);
        IdentityVerdict {
            id: self.id,
            mode,
            instances_checked: count,
            guard_samples,
            passed: failure_count == 0,
            failures: failure_count,
            counterexamples: failures,
            calibration: None,
        }
    }

    fn evaluate_vectors(&self, tuples: Vec<Vec<Vector>>) -> Vec<Counterexample> {
        tuples
            .into_par_iter()
            .filter_map(|vectors| {
                let check = (self.eval)(&Args {
                    vectors: &vectors,
                    indices: None,
                });
                (!check.holds).then_some(Counterexample {
                    inputs: Inputs::Vectors(vectors),
                    lhs: check.lhs,
                    rhs: check.rhs,
                    guard: false,
                })
            })
            .collect()
    }
}
