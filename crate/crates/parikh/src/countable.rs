//! Symbolic vectors over the countable basis and the basis mapping on them.
//!
//! A symbolic vector stores finitely many nonzero entries; every unlisted
//! position holds 0, so cofinitely many positions are zero and the image's
//! zero count is always the countable cardinal. One position "beyond all
//! finite indices" is representable, which is all the attractors need.
//!
//! ```
//! use parikh::countable::{countable_attractor_first_order, countable_attractor_second_order};
//!
//! let a1 = countable_attractor_first_order();
//! assert_eq!(a1.to_string(), "N_0 2_1 1_2 1_N 0_w");
//! assert_eq!(a1.symbolic_basis_map()?, a1);
//!
//! let (a2, b2) = countable_attractor_second_order();
//! assert_eq!(a2.symbolic_basis_map()?, b2);
//! assert_eq!(b2.symbolic_basis_map()?, a2);
//! # Ok::<(), parikh::Error>(())
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite count or the countable cardinal. Arithmetic with finite numbers
/// is absorbing on the infinite side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Finite(usize),
    Countable,
}

impl Cardinal {
    pub fn is_zero(self) -> bool {
        self == Cardinal::Finite(0)
    }

    /// Absorbing addition.
    pub fn plus(self, rhs: usize) -> Cardinal {
        match self {
            Cardinal::Finite(v) => Cardinal::Finite(v + rhs),
            Cardinal::Countable => Cardinal::Countable,
        }
    }

    /// Absorbing subtraction; finite underflow is a caller bug.
    pub fn minus(self, rhs: usize) -> Cardinal {
        match self {
            Cardinal::Finite(v) => Cardinal::Finite(v - rhs),
            Cardinal::Countable => Cardinal::Countable,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(v) => write!(f, "{v}"),
            Cardinal::Countable => f.write_str("N"),
        }
    }
}

impl From<usize> for Cardinal {
    fn from(v: usize) -> Self {
        Cardinal::Finite(v)
    }
}

/// A position index: finite, or the single representable position beyond all
/// finite indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Position {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Finite(p) => write!(f, "{p}"),
            Position::Infinite => f.write_str("N"),
        }
    }
}

/// Finite-support vector over the countable basis. Prints in compact position
/// notation, e.g. `N_0 2_1 1_2 1_N 0_w` with `0_w` meaning "zero everywhere
/// else".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicVector {
    entries: BTreeMap<Position, Cardinal>,
}

impl SymbolicVector {
    /// Build from `(position, value)` pairs; zero values are dropped,
    /// duplicate positions rejected.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Position, Cardinal)>,
    {
        let mut map = BTreeMap::new();
        for (position, value) in entries {
            if value.is_zero() {
                continue;
            }
            if map.insert(position, value).is_some() {
                return Err(Error::Unrepresentable {
                    reason: format!("duplicate entry at position {position}"),
                });
            }
        }
        Ok(SymbolicVector { entries: map })
    }

    pub fn entries(&self) -> impl Iterator<Item = (Position, Cardinal)> + '_ {
        self.entries.iter().map(|(&p, &v)| (p, v))
    }

    pub fn entry(&self, position: Position) -> Cardinal {
        self.entries
            .get(&position)
            .copied()
            .unwrap_or(Cardinal::Finite(0))
    }

    /// The basis mapping on symbolic vectors: position 0 of the image holds
    /// the countable zero count, each finite value `v > 0` maps its entry
    /// count to position `v`, and entries holding the countable cardinal are
    /// counted at the infinite position.
    pub fn symbolic_basis_map(&self) -> Result<SymbolicVector> {
        let mut finite_value_counts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut countable_values: usize = 0;
        for (_, value) in self.entries() {
            match value {
                Cardinal::Finite(0) => unreachable!("zero entries are never stored"),
                Cardinal::Finite(v) => *finite_value_counts.entry(v).or_insert(0) += 1,
                Cardinal::Countable => countable_values += 1,
            }
        }
        let mut out: Vec<(Position, Cardinal)> = Vec::new();
        // cofinitely many positions hold 0
        out.push((Position::Finite(0), Cardinal::Countable));
        for (value, count) in finite_value_counts {
            out.push((Position::Finite(value), Cardinal::Finite(count)));
        }
        if countable_values > 0 {
            out.push((Position::Infinite, Cardinal::Finite(countable_values)));
        }
        SymbolicVector::new(out)
    }
}

impl fmt::Display for SymbolicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (position, value) in &self.entries {
            write!(f, "{value}_{position} ")?;
        }
        f.write_str("0_w")
    }
}

/// The first-order attractor over the countable basis.
pub fn countable_attractor_first_order() -> SymbolicVector {
    SymbolicVector::new([
        (Position::Finite(0), Cardinal::Countable),
        (Position::Finite(1), Cardinal::Finite(2)),
        (Position::Finite(2), Cardinal::Finite(1)),
        (Position::Infinite, Cardinal::Finite(1)),
    ])
    .expect("distinct positions")
}

/// The second-order attractor pair over the countable basis, in forward
/// mapping order.
pub fn countable_attractor_second_order() -> (SymbolicVector, SymbolicVector) {
    let a = SymbolicVector::new([
        (Position::Finite(0), Cardinal::Countable),
        (Position::Finite(1), Cardinal::Finite(3)),
        (Position::Infinite, Cardinal::Finite(1)),
    ])
    .expect("distinct positions");
    let b = SymbolicVector::new([
        (Position::Finite(0), Cardinal::Countable),
        (Position::Finite(1), Cardinal::Finite(1)),
        (Position::Finite(3), Cardinal::Finite(1)),
        (Position::Infinite, Cardinal::Finite(1)),
    ])
    .expect("distinct positions");
    (a, b)
}

/// The finite closed form `((n−4)_0 (k+1)_1 (2−k)_2 1_{n+k−5} 0_ω)` with the
/// dimension pushed to the countable cardinal: position 0 and the trailing 1
/// absorb into `N`.
pub fn formula_attractor_countable(order: usize) -> Result<SymbolicVector> {
    if !matches!(order, 1 | 2) {
        return Err(Error::FormulaDomain { basis: 0, order });
    }
    SymbolicVector::new([
        (Position::Finite(0), Cardinal::Countable),
        (Position::Finite(1), Cardinal::Finite(order + 1)),
        (Position::Finite(2), Cardinal::Finite(2 - order)),
        (Position::Infinite, Cardinal::Finite(1)),
    ])
}

#[derive(Debug, Clone)]
pub struct CountableReport {
    pub first_order_fixed: bool,
    pub second_order_cycles: bool,
    pub formula_limit_matches: bool,
}

impl CountableReport {
    pub fn all_passed(&self) -> bool {
        self.first_order_fixed && self.second_order_cycles && self.formula_limit_matches
    }
}

/// Check the countable attractors directly: the first-order vector is a fixed
/// point, the second-order pair swaps, and both agree with the finite formula
/// under absorbing cardinal arithmetic.
pub fn verify_countable_attractors() -> Result<CountableReport> {
    let a1 = countable_attractor_first_order();
    let first_order_fixed = a1.symbolic_basis_map()? == a1;

    let (a2, b2) = countable_attractor_second_order();
    let second_order_cycles = a2.symbolic_basis_map()? == b2 && b2.symbolic_basis_map()? == a2;

    let formula_limit_matches =
        formula_attractor_countable(1)? == a1 && formula_attractor_countable(2)? == a2;

    Ok(CountableReport {
        first_order_fixed,
        second_order_cycles,
        formula_limit_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_order_is_fixed() {
        let a1 = countable_attractor_first_order();
        assert_eq!(a1.symbolic_basis_map().unwrap(), a1);
        // idempotent under repetition
        assert_eq!(
            a1.symbolic_basis_map().unwrap().symbolic_basis_map().unwrap(),
            a1
        );
    }

    #[test]
    fn second_order_swaps() {
        let (a2, b2) = countable_attractor_second_order();
        assert_eq!(a2.symbolic_basis_map().unwrap(), b2);
        assert_eq!(b2.symbolic_basis_map().unwrap(), a2);
    }

    #[test]
    fn lone_countable_entry() {
        let v = SymbolicVector::new([(Position::Finite(0), Cardinal::Countable)]).unwrap();
        let expected = SymbolicVector::new([
            (Position::Finite(0), Cardinal::Countable),
            (Position::Infinite, Cardinal::Finite(1)),
        ])
        .unwrap();
        assert_eq!(v.symbolic_basis_map().unwrap(), expected);
    }

    #[test]
    fn display_notation() {
        assert_eq!(
            countable_attractor_first_order().to_string(),
            "N_0 2_1 1_2 1_N 0_w"
        );
        let (a2, _) = countable_attractor_second_order();
        assert_eq!(a2.to_string(), "N_0 3_1 1_N 0_w");
    }

    #[test]
    fn cardinal_arithmetic_absorbs() {
        assert_eq!(Cardinal::Countable.minus(4), Cardinal::Countable);
        assert_eq!(Cardinal::Countable.plus(3), Cardinal::Countable);
        assert_eq!(Cardinal::Finite(5).plus(2), Cardinal::Finite(7));
    }

    #[test]
    fn report_all_green() {
        let report = verify_countable_attractors().unwrap();
        assert!(report.first_order_fixed);
        assert!(report.second_order_cycles);
        assert!(report.formula_limit_matches);
    }

    #[test]
    fn zero_entries_dropped() {
        let v = SymbolicVector::new([
            (Position::Finite(0), Cardinal::Countable),
            (Position::Finite(2), Cardinal::Finite(0)),
        ])
        .unwrap();
        assert_eq!(v.entries().count(), 1);
        assert_eq!(v.entry(Position::Finite(2)), Cardinal::Finite(0));
    }
}
