//! Domain types: the numerical basis, letter-count vectors and basis vectors.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dimension marker for the numerical alphabet `{0, 1, …, n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis(usize);

impl Basis {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBasis);
        }
        Ok(Basis(n))
    }

    pub fn size(self) -> usize {
        self.0
    }

    /// Whether `value` is one of the basis numbers `0..n`.
    pub fn contains(self, value: usize) -> bool {
        value < self.0
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<usize> for Basis {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        Basis::new(n)
    }
}

/// How mappings treat values that fall outside the basis range.
///
/// `Strict` rejects any value `>= n`; `IgnoreOutOfRange` lets such values
/// contribute to no output position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MappingMode {
    #[default]
    Strict,
    IgnoreOutOfRange,
}

/// Letter-count vector of a word over an ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphabeticVector {
    alphabet: Vec<char>,
    counts: Vec<usize>,
}

impl AlphabeticVector {
    /// `counts[i]` is the number of occurrences of `alphabet[i]`; letters must
    /// be pairwise distinct and both slices the same length.
    pub fn new(alphabet: Vec<char>, counts: Vec<usize>) -> Result<Self> {
        if alphabet.len() != counts.len() {
            return Err(Error::ComponentCount {
                expected: alphabet.len(),
                found: counts.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for &letter in &alphabet {
            if !seen.insert(letter) {
                return Err(Error::DuplicateLetter { letter });
            }
        }
        Ok(AlphabeticVector { alphabet, counts })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Alphabet size, including letters with count zero.
    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    /// Number of letters that actually occur in the word.
    pub fn distinct_letters(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// Sum of all counts, i.e. the length of the mapped word.
    pub fn word_length(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for AlphabeticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (letter, count)) in self.alphabet.iter().zip(&self.counts).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{letter}:{count}")?;
        }
        write!(f, "]")
    }
}

/// Occurrence-count vector over a numerical basis: component `j` counts
/// occurrences of the value `j`.
///
/// Displays compactly as a digit string when every component is a single
/// digit (`1210`), otherwise comma-separated (`12,0,1,…`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    basis: Basis,
    components: Vec<usize>,
}

impl ParikhVector {
    pub fn new(basis: Basis, components: Vec<usize>) -> Result<Self> {
        if components.len() != basis.size() {
            return Err(Error::ComponentCount {
                expected: basis.size(),
                found: components.len(),
            });
        }
        Ok(ParikhVector { basis, components })
    }

    /// Convenience constructor; the basis dimension is the component count.
    pub fn from_components(components: Vec<usize>) -> Result<Self> {
        let basis = Basis::new(components.len())?;
        Ok(ParikhVector { basis, components })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn component(&self, j: usize) -> usize {
        self.components[j]
    }

    /// `∑ v_i`.
    pub fn plain_sum(&self) -> usize {
        self.components.iter().sum()
    }

    /// `∑ i · v_i`.
    pub fn weighted_sum(&self) -> usize {
        self.components.iter().enumerate().map(|(i, &v)| i * v).sum()
    }

    /// Every component lies inside the basis range (`v_i < n`).
    pub fn is_strict_valid(&self) -> bool {
        self.components.iter().all(|&v| self.basis.contains(v))
    }

    /// First `(index, value)` with `value >= n`, if any.
    pub fn first_out_of_range(&self) -> Option<(usize, usize)> {
        self.components
            .iter()
            .enumerate()
            .find(|&(_, &v)| !self.basis.contains(v))
            .map(|(i, &v)| (i, v))
    }

    /// Strict-valid with both sums equal to the dimension; such vectors form
    /// the invariant set that iteration settles into after two steps.
    pub fn has_invariant_sums(&self) -> bool {
        let n = self.basis.size();
        self.is_strict_valid() && self.plain_sum() == n && self.weighted_sum() == n
    }

    /// Multiset of component values, as `(value, multiplicity)` pairs with the
    /// zero multiplicities skipped. The preimages of this vector under the
    /// basis mapping are exactly the arrangements of the dual multiset
    /// `{j repeated v_j times}`.
    pub fn value_multiset(&self) -> Vec<(usize, usize)> {
        self.components
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(j, &m)| (j, m))
            .collect()
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.iter().all(|&v| v <= 9) {
            for v in &self.components {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.components.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Maximum length at which a bare digit string is accepted as a vector.
/// Longer compact strings are ambiguous with multi-digit components.
pub const COMPACT_PARSE_LIMIT: usize = 10;

impl FromStr for ParikhVector {
    type Err = Error;

    /// Accepts the canonical comma-separated form (`1,2,1,0`) always, and the
    /// compact digit form (`1210`) when at most [`COMPACT_PARSE_LIMIT`] digits.
    /// A bare multi-digit number like `10` is read compactly as `(1,0)`; a
    /// one-component vector is only writable when its component is a single
    /// digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::VectorParse {
                input: s.to_string(),
                reason: "empty input",
            });
        }
        if s.contains(',') {
            let components = s
                .split(',')
                .map(|part| {
                    part.trim().parse::<usize>().map_err(|_| Error::VectorParse {
                        input: s.to_string(),
                        reason: "component is not a nonnegative integer",
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            return ParikhVector::from_components(components);
        }
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::VectorParse {
                input: s.to_string(),
                reason: "expected digits or comma-separated integers",
            });
        }
        if s.len() > COMPACT_PARSE_LIMIT {
            return Err(Error::VectorParse {
                input: s.to_string(),
                reason: "compact form is ambiguous past 10 digits; use commas",
            });
        }
        let components: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
        ParikhVector::from_components(components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(components: &[usize]) -> ParikhVector {
        ParikhVector::from_components(components.to_vec()).unwrap()
    }

    #[test]
    fn sums() {
        assert_eq!(pv(&[1, 2, 1, 0]).plain_sum(), 4);
        assert_eq!(pv(&[0, 0, 0, 0]).plain_sum(), 0);
        assert_eq!(pv(&[6, 2, 1, 0, 0, 0, 1, 0, 0, 0]).plain_sum(), 10);
        assert_eq!(pv(&[1, 2, 1, 0]).weighted_sum(), 4);
        assert_eq!(pv(&[2, 1, 0, 1]).weighted_sum(), 4);
        assert_eq!(pv(&[4, 0, 0, 0]).weighted_sum(), 0);
    }

    #[test]
    fn strict_validity() {
        assert!(pv(&[1, 2, 1, 0]).is_strict_valid());
        assert!(!pv(&[0, 4, 0, 0]).is_strict_valid());
        assert_eq!(pv(&[0, 4, 0, 0]).first_out_of_range(), Some((1, 4)));
    }

    #[test]
    fn invariant_sums() {
        assert!(pv(&[1, 2, 1, 0]).has_invariant_sums());
        assert!(pv(&[2, 0, 2, 0]).has_invariant_sums());
        assert!(!pv(&[1, 3, 0, 0]).has_invariant_sums());
    }

    #[test]
    fn display_compact_and_comma() {
        assert_eq!(pv(&[1, 2, 1, 0]).to_string(), "1210");
        assert_eq!(pv(&[7, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0]).to_string(), "72100001000");
        assert_eq!(pv(&[12, 0, 1]).to_string(), "12,0,1");
    }

    #[test]
    fn parse_round_trip() {
        let v: ParikhVector = "1210".parse().unwrap();
        assert_eq!(v, pv(&[1, 2, 1, 0]));
        let v: ParikhVector = "1,2,1,0".parse().unwrap();
        assert_eq!(v, pv(&[1, 2, 1, 0]));
        let v: ParikhVector = "12,0,1".parse().unwrap();
        assert_eq!(v.components(), &[12, 0, 1]);
        assert!("72100001000".parse::<ParikhVector>().is_err());
        assert!("".parse::<ParikhVector>().is_err());
        assert!("12a".parse::<ParikhVector>().is_err());
    }

    #[test]
    fn alphabetic_vector_invariants() {
        let av = AlphabeticVector::new(vec!['a', 'b', 'c'], vec![3, 2, 1]).unwrap();
        assert_eq!(av.word_length(), 6);
        assert_eq!(av.distinct_letters(), 3);
        assert_eq!(av.to_string(), "[a:3, b:2, c:1]");
        assert!(AlphabeticVector::new(vec!['a', 'a'], vec![1, 1]).is_err());
        assert!(AlphabeticVector::new(vec!['a'], vec![1, 1]).is_err());
        let with_unused = AlphabeticVector::new(vec!['a', 'b'], vec![2, 0]).unwrap();
        assert_eq!(with_unused.alphabet_size(), 2);
        assert_eq!(with_unused.distinct_letters(), 1);
    }
}
