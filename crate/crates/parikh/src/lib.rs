//! Iterated occurrence-count mappings over numerical bases.
//!
//! A word maps to its letter counts; the counts map to their histogram over
//! the basis `{0, 1, …, n−1}`; and that histogram maps to the histogram of its
//! own component values, a step that can be iterated. Iteration settles into
//! short cycles — fixed points for most bases, a two-cycle from dimension 6 up,
//! and one three-cycle at dimension 7 — and this crate enumerates those
//! cycles, generates them in closed form, inverts the mapping, and measures
//! how many mappings a word can need to reach them.
//!
//! ```
//! use parikh::{alphabetic_map, alphabetic_basis_map, iterate};
//! use parikh::{Basis, MappingMode, DEFAULT_STEP_LIMIT};
//!
//! let counts = alphabetic_map("baacab", Some(&['a', 'b', 'c']))?;
//! assert_eq!(counts.counts(), &[3, 2, 1]);
//!
//! let n4 = Basis::new(4)?;
//! let histogram = alphabetic_basis_map(&counts, n4, MappingMode::Strict)?;
//! assert_eq!(histogram.to_string(), "0111");
//!
//! let trajectory = iterate(&histogram, MappingMode::Strict, DEFAULT_STEP_LIMIT);
//! let printed: Vec<String> = trajectory.states.iter().map(|v| v.to_string()).collect();
//! assert_eq!(printed, ["0111", "1300", "2101", "1210", "1210"]);
//! assert_eq!(trajectory.tail_length, 3);
//! assert_eq!(trajectory.cycle_length, Some(1));
//! # Ok::<(), parikh::Error>(())
//! ```
//!
//! The fixed point `1210` reads as a self-description: one 0, two 1s, one 2,
//! no 3s. Printed compactly, the single-vector attractors are exactly the
//! classical self-descriptive numbers.
//!
//! Searching a whole basis and generating the same attractors in closed form:
//!
//! ```
//! use parikh::{find_attractors, formula_attractor, Basis};
//!
//! let table = find_attractors(Basis::new(8)?, 8);
//! assert_eq!(table.of_order(1)[0].cycle()[0].to_string(), "42101000");
//! assert_eq!(formula_attractor(Basis::new(8)?, 1)?.to_string(), "42101000");
//! # Ok::<(), parikh::Error>(())
//! ```
//!
//! Inverting the mapping and measuring reachability:
//!
//! ```
//! use parikh::{inverse_map, reachability, Basis, DEFAULT_DEPTH_CAP};
//!
//! let fixed: parikh::ParikhVector = "1210".parse()?;
//! assert_eq!(inverse_map(&fixed)?.vectors.len(), 12);
//!
//! let report = reachability(Basis::new(4)?, 1, DEFAULT_DEPTH_CAP)?;
//! assert_eq!(report.rate_from_alphabetic, 4);
//! assert_eq!(report.rate_from_word, 5);
//! # Ok::<(), parikh::Error>(())
//! ```

#[doc(hidden)]
pub mod book;

pub mod attractors;
pub mod countable;
pub mod dynamics;
pub mod error;
pub mod inverse;
pub mod mapping;
pub mod properties;
pub mod sampling;
pub mod tables;
pub mod vector;

pub use attractors::{
    cycle_partner, find_attractors, find_attractors_in_mode, formula_attractor, state_space,
    verify_formula, AttractorTable, FormulaCheck, FormulaReport, DEFAULT_MAX_ORDER,
};
pub use countable::{
    countable_attractor_first_order, countable_attractor_second_order,
    formula_attractor_countable, verify_countable_attractors, Cardinal, CountableReport,
    Position, SymbolicVector,
};
pub use dynamics::{
    classify, iterate, verify_convergence_theorem, Attractor, Classification, ConvergenceReport,
    SweepOutcome, Termination, Trajectory, DEFAULT_STEP_LIMIT,
};
pub use error::Error;
pub use inverse::{
    constrained_preimages, inverse_map, preimage_count, reachability, AttractorReachability,
    MemberSearch, PreimageSet, ReachabilityReport, WitnessChain, DEFAULT_DEPTH_CAP,
};
pub use mapping::{alphabetic_basis_map, alphabetic_map, basis_map};
pub use properties::{
    check_stage_properties, PropertyCheck, PropertyId, PropertyReport, Stage, StageContext,
    StageSubject,
};
pub use vector::{AlphabeticVector, Basis, MappingMode, ParikhVector, COMPACT_PARSE_LIMIT};
