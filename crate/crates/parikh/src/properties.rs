//! Stage-by-stage sum identities along the mapping pipeline.
//!
//! Writing `|w|` for the word length, `m` for the number of distinct letters
//! in the word and `n` for the basis dimension, the pipeline satisfies:
//!
//! | stage                | plain sum      | weighted sum |
//! |----------------------|----------------|--------------|
//! | alphabetic vector    | (i) `|w|`      | —            |
//! | alphabetic-basis     | (ii) `m`       | (iii) `|w|`  |
//! | first basis image    | (iv) `n`       | (v) `m`      |
//! | second image onward  | (vi) `n`       | (vii) `n`    |
//!
//! With an explicit alphabet carrying unused letters, (ii) counts the whole
//! alphabet instead (unused letters land at position 0).

use std::fmt;

use crate::vector::{AlphabeticVector, ParikhVector};

/// Pipeline stage a vector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Alphabetic,
    AlphabeticBasis,
    FirstBasis,
    Steady,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Alphabetic => "alphabetic",
            Stage::AlphabeticBasis => "alphabetic-basis",
            Stage::FirstBasis => "first-basis",
            Stage::Steady => "steady",
        };
        f.write_str(name)
    }
}

/// The seven numbered identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            PropertyId::I => "(i)",
            PropertyId::II => "(ii)",
            PropertyId::III => "(iii)",
            PropertyId::IV => "(iv)",
            PropertyId::V => "(v)",
            PropertyId::VI => "(vi)",
            PropertyId::VII => "(vii)",
        };
        f.write_str(label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub property: PropertyId,
    pub description: &'static str,
    pub expected: usize,
    pub actual: usize,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for PropertyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, got {} [{}]",
            self.property,
            self.description,
            self.expected,
            self.actual,
            if self.passed() { "ok" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub stage: Stage,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }
}

/// External facts a stage check needs: the word length and the distinct-letter
/// count come from the word, the basis dimension from the vector itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct StageContext {
    pub word_length: Option<usize>,
    pub distinct_letters: Option<usize>,
}

impl StageContext {
    pub fn from_alphabetic(av: &AlphabeticVector) -> Self {
        StageContext {
            word_length: Some(av.word_length()),
            distinct_letters: Some(av.distinct_letters()),
        }
    }
}

/// The vector being checked.
#[derive(Debug, Clone, Copy)]
pub enum StageSubject<'a> {
    Alphabetic(&'a AlphabeticVector),
    Basis(&'a ParikhVector),
}

/// Evaluate the identities applicable to `stage`, reporting each as a
/// pass/fail comparison. Checks whose context is missing are omitted.
pub fn check_stage_properties(
    stage: Stage,
    subject: StageSubject<'_>,
    ctx: &StageContext,
) -> PropertyReport {
    let mut checks = Vec::new();
    match (stage, subject) {
        (Stage::Alphabetic, StageSubject::Alphabetic(av)) => {
            if let Some(len) = ctx.word_length {
                checks.push(PropertyCheck {
                    property: PropertyId::I,
                    description: "count sum = word length",
                    expected: len,
                    actual: av.word_length(),
                });
            }
        }
        (Stage::AlphabeticBasis, StageSubject::Basis(v)) => {
            if let Some(m) = ctx.distinct_letters {
                checks.push(PropertyCheck {
                    property: PropertyId::II,
                    description: "plain sum = distinct letters",
                    expected: m,
                    actual: v.plain_sum(),
                });
            }
            if let Some(len) = ctx.word_length {
                checks.push(PropertyCheck {
                    property: PropertyId::III,
                    description: "weighted sum = word length",
                    expected: len,
                    actual: v.weighted_sum(),
                });
            }
        }
        (Stage::FirstBasis, StageSubject::Basis(v)) => {
            checks.push(PropertyCheck {
                property: PropertyId::IV,
                description: "plain sum = dimension",
                expected: v.basis().size(),
                actual: v.plain_sum(),
            });
            if let Some(m) = ctx.distinct_letters {
                checks.push(PropertyCheck {
                    property: PropertyId::V,
                    description: "weighted sum = distinct letters",
                    expected: m,
                    actual: v.weighted_sum(),
                });
            }
        }
        (Stage::Steady, StageSubject::Basis(v)) => {
            let n = v.basis().size();
            checks.push(PropertyCheck {
                property: PropertyId::VI,
                description: "plain sum = dimension",
                expected: n,
                actual: v.plain_sum(),
            });
            checks.push(PropertyCheck {
                property: PropertyId::VII,
                description: "weighted sum = dimension",
                expected: n,
                actual: v.weighted_sum(),
            });
        }
        // Mismatched subject kinds yield an empty report.
        _ => {}
    }
    PropertyReport { stage, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::alphabetic_map;

    fn pv(components: &[usize]) -> ParikhVector {
        ParikhVector::from_components(components.to_vec()).unwrap()
    }

    #[test]
    fn alphabetic_stage() {
        let av = alphabetic_map("baacab", Some(&['a', 'b', 'c'])).unwrap();
        let report = check_stage_properties(
            Stage::Alphabetic,
            StageSubject::Alphabetic(&av),
            &StageContext {
                word_length: Some(6),
                distinct_letters: Some(3),
            },
        );
        assert!(report.all_passed());
    }

    #[test]
    fn first_basis_stage_reports_both_sums() {
        // (2,1,0,1) is one basis step past the first image: (iv) holds while
        // (v) fails against 3 distinct letters, and the report shows both.
        let v = pv(&[2, 1, 0, 1]);
        let report = check_stage_properties(
            Stage::FirstBasis,
            StageSubject::Basis(&v),
            &StageContext {
                word_length: Some(6),
                distinct_letters: Some(3),
            },
        );
        assert_eq!(report.checks.len(), 2);
        assert!(report.checks[0].passed());
        assert!(!report.checks[1].passed());
        assert_eq!(report.checks[1].actual, 4);

        // The true first image satisfies both.
        let first = pv(&[1, 3, 0, 0]);
        let report = check_stage_properties(
            Stage::FirstBasis,
            StageSubject::Basis(&first),
            &StageContext {
                word_length: Some(6),
                distinct_letters: Some(3),
            },
        );
        assert!(report.all_passed());
    }

    #[test]
    fn steady_stage() {
        let report = check_stage_properties(
            Stage::Steady,
            StageSubject::Basis(&pv(&[1, 2, 1, 0])),
            &StageContext::default(),
        );
        assert!(report.all_passed());
    }
}
