//! Forward iteration of the basis mapping: trajectories, cycle detection and
//! the exhaustive convergence sweep.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mapping::basis_map;
use crate::vector::{Basis, MappingMode, ParikhVector};

/// Default iteration budget. Convergence at desk scale takes a handful of
/// steps, so hitting this limit signals a defect.
pub const DEFAULT_STEP_LIMIT: usize = 1000;

/// Why an iteration stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Termination {
    /// A previously seen state recurred; tail and cycle lengths are exact.
    CycleFound,
    /// Strict mode hit a component outside the basis while mapping
    /// `states[at_state]`.
    OutOfRange {
        at_state: usize,
        index: usize,
        value: usize,
    },
    /// The step budget ran out before a repeat.
    StepLimit,
}

/// A recorded run of the basis mapping.
///
/// `states[0]` is the start; on `CycleFound` the sequence ends with the first
/// repeated state, so `states[tail_length + cycle_length] ==
/// states[tail_length]` and everything before that index is pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<ParikhVector>,
    pub tail_length: usize,
    pub cycle_length: Option<usize>,
    pub terminated_by: Termination,
}

impl Trajectory {
    pub fn start(&self) -> &ParikhVector {
        &self.states[0]
    }

    /// The detected cycle in forward order, if any.
    pub fn cycle(&self) -> Option<&[ParikhVector]> {
        self.cycle_length
            .map(|len| &self.states[self.tail_length..self.tail_length + len])
    }
}

/// Apply the basis mapping repeatedly, recording states until a repeat, a
/// strict-mode range escape, or `step_limit` applications.
pub fn iterate(start: &ParikhVector, mode: MappingMode, step_limit: usize) -> Trajectory {
    let step_limit = step_limit.max(1);
    let mut states = vec![start.clone()];
    let mut seen: HashMap<ParikhVector, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    loop {
        if states.len() > step_limit {
            return Trajectory {
                tail_length: states.len() - 1,
                cycle_length: None,
                terminated_by: Termination::StepLimit,
                states,
            };
        }
        match basis_map(states.last().expect("nonempty"), mode) {
            Ok(next) => {
                if let Some(&first_seen) = seen.get(&next) {
                    states.push(next);
                    return Trajectory {
                        tail_length: first_seen,
                        cycle_length: Some(states.len() - 1 - first_seen),
                        terminated_by: Termination::CycleFound,
                        states,
                    };
                }
                seen.insert(next.clone(), states.len());
                states.push(next);
            }
            Err(Error::OutOfRangeComponent { index, value, .. }) => {
                return Trajectory {
                    tail_length: states.len() - 1,
                    cycle_length: None,
                    terminated_by: Termination::OutOfRange {
                        at_state: states.len() - 1,
                        index,
                        value,
                    },
                    states,
                };
            }
            Err(_) => unreachable!("basis_map only fails with range errors"),
        }
    }
}

/// A cycle of the basis mapping, stored in forward order and rotated to start
/// at its lexicographically greatest member so equal cycles compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attractor {
    cycle: Vec<ParikhVector>,
}

impl Attractor {
    /// Canonicalize and validate a forward-ordered cycle: consecutive members
    /// must map to each other, the last back to the first, and the length must
    /// be minimal.
    pub fn from_cycle(cycle: Vec<ParikhVector>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidArgument("empty cycle".into()));
        }
        let k = cycle.len();
        for i in 0..k {
            let image = basis_map(&cycle[i], MappingMode::Strict)?;
            if image != cycle[(i + 1) % k] {
                return Err(Error::InvalidArgument(format!(
                    "{} does not map to {}",
                    cycle[i],
                    cycle[(i + 1) % k]
                )));
            }
        }
        for d in 1..k {
            if k.is_multiple_of(d) && cycle[d] == cycle[0] {
                return Err(Error::InvalidArgument(format!(
                    "cycle length {k} is not minimal"
                )));
            }
        }
        Ok(Self::canonical(cycle))
    }

    fn canonical(cycle: Vec<ParikhVector>) -> Self {
        let greatest = cycle
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut rotated = cycle;
        rotated.rotate_left(greatest);
        Attractor { cycle: rotated }
    }

    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[ParikhVector] {
        &self.cycle
    }

    pub fn basis(&self) -> Basis {
        self.cycle[0].basis()
    }

    pub fn contains(&self, v: &ParikhVector) -> bool {
        self.cycle.contains(v)
    }
}

impl std::fmt::Display for Attractor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("|"))
    }
}

/// Where a trajectory ends up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Converged {
        attractor: Attractor,
        steps_to_cycle: usize,
    },
    Escaped {
        at_state: usize,
        index: usize,
        value: usize,
    },
}

/// Iterate from `v` and name the cycle it enters (or the strict-mode escape).
/// `Err(StepLimitExceeded)` means no repeat within the budget.
pub fn classify(v: &ParikhVector, mode: MappingMode, step_limit: usize) -> Result<Classification> {
    let trajectory = iterate(v, mode, step_limit);
    match trajectory.terminated_by {
        Termination::CycleFound => {
            let cycle = trajectory.cycle().expect("cycle present").to_vec();
            let attractor = match mode {
                MappingMode::Strict => Attractor::from_cycle(cycle)?,
                // Out-of-range components survive inside ignore-mode cycles,
                // so skip strict re-validation and canonicalize directly.
                MappingMode::IgnoreOutOfRange => Attractor::canonical(cycle),
            };
            Ok(Classification::Converged {
                attractor,
                steps_to_cycle: trajectory.tail_length,
            })
        }
        Termination::OutOfRange {
            at_state,
            index,
            value,
        } => Ok(Classification::Escaped {
            at_state,
            index,
            value,
        }),
        Termination::StepLimit => Err(Error::StepLimitExceeded { limit: step_limit }),
    }
}

/// Outcome of sweeping every start of a population.
#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub starts: usize,
    pub attractors: Vec<Attractor>,
    pub max_steps_to_cycle: usize,
    pub escapes: usize,
    pub escape_example: Option<ParikhVector>,
    pub step_limit_hits: usize,
}

/// Exhaustive convergence check for one basis: iterates from every vector of
/// the invariant set, and from every count histogram of alphabets with up to
/// `max_alphabet` letters (the images the word pipeline can feed in).
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub basis: Basis,
    pub mode: MappingMode,
    pub max_alphabet: usize,
    pub invariant_set: SweepOutcome,
    pub alphabetic_images: SweepOutcome,
}

impl ConvergenceReport {
    /// True when nothing ran away: no step-limit hits anywhere and every
    /// invariant-set start converged.
    pub fn converged(&self) -> bool {
        self.invariant_set.step_limit_hits == 0
            && self.alphabetic_images.step_limit_hits == 0
            && self.invariant_set.escapes == 0
    }

    /// Orders of the attractors reached from either population.
    pub fn orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self
            .invariant_set
            .attractors
            .iter()
            .chain(&self.alphabetic_images.attractors)
            .map(Attractor::order)
            .collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }
}

fn sweep<'a, I: Iterator<Item = &'a ParikhVector>>(starts: I, mode: MappingMode) -> SweepOutcome {
    let mut outcome = SweepOutcome::default();
    let mut attractors = std::collections::BTreeSet::new();
    for start in starts {
        outcome.starts += 1;
        match classify(start, mode, DEFAULT_STEP_LIMIT) {
            Ok(Classification::Converged {
                attractor,
                steps_to_cycle,
            }) => {
                attractors.insert(attractor);
                outcome.max_steps_to_cycle = outcome.max_steps_to_cycle.max(steps_to_cycle);
            }
            Ok(Classification::Escaped { .. }) => {
                outcome.escapes += 1;
                if outcome.escape_example.is_none() {
                    outcome.escape_example = Some(start.clone());
                }
            }
            Err(_) => outcome.step_limit_hits += 1,
        }
    }
    outcome.attractors = attractors.into_iter().collect();
    outcome
}

/// All count histograms of alphabets with `0..=max_alphabet` letters: every
/// `n`-component vector whose plain sum is at most `max_alphabet`.
fn alphabetic_images(basis: Basis, max_alphabet: usize) -> Vec<ParikhVector> {
    fn rec(
        basis: Basis,
        position: usize,
        budget: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<ParikhVector>,
    ) {
        if position == current.len() {
            out.push(ParikhVector::new(basis, current.clone()).expect("length matches"));
            return;
        }
        for value in 0..=budget {
            current[position] = value;
            rec(basis, position + 1, budget - value, current, out);
        }
        current[position] = 0;
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; basis.size()];
    rec(basis, 0, max_alphabet, &mut current, &mut out);
    out
}

/// Population guard: sweeping more vectors than this is a caller mistake.
const MAX_SWEEP_POPULATION: u128 = 20_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Sweep the invariant set and the bounded alphabetic-image population.
/// `max_alphabet` defaults to `2n`.
pub fn verify_convergence_theorem(
    basis: Basis,
    mode: MappingMode,
    max_alphabet: Option<usize>,
) -> Result<ConvergenceReport> {
    let n = basis.size();
    let max_alphabet = max_alphabet.unwrap_or(2 * n);
    // population = C(max_alphabet + n, n)
    let population = binomial((max_alphabet + n) as u128, n as u128);
    if population > MAX_SWEEP_POPULATION {
        return Err(Error::InvalidArgument(format!(
            "alphabet bound {max_alphabet} gives {population} image vectors; lower --max-alphabet"
        )));
    }
    let invariant = crate::attractors::state_space(basis);
    let images = alphabetic_images(basis, max_alphabet);
    Ok(ConvergenceReport {
        basis,
        mode,
        max_alphabet,
        invariant_set: sweep(invariant.iter(), mode),
        alphabetic_images: sweep(images.iter(), mode),
    })
}
