//! The three occurrence-count mappings: word → letter counts, letter counts →
//! basis histogram, and the iterated basis histogram of a basis vector.
//!
//! Strict mode rejects any value at or above the dimension; ignore mode drops
//! such values on the floor:
//!
//! ```
//! use parikh::{alphabetic_map, alphabetic_basis_map, Basis, MappingMode};
//!
//! let counts = alphabetic_map("mississippi", None)?;   // m:1 i:4 s:4 p:2
//! let n4 = Basis::new(4)?;
//! assert!(alphabetic_basis_map(&counts, n4, MappingMode::Strict).is_err());
//! let image = alphabetic_basis_map(&counts, n4, MappingMode::IgnoreOutOfRange)?;
//! assert_eq!(image.to_string(), "0110"); // one count of 1, one count of 2; the 4s dropped
//! # Ok::<(), parikh::Error>(())
//! ```

use crate::error::{Error, Result};
use crate::vector::{AlphabeticVector, Basis, MappingMode, ParikhVector};

/// Count letter occurrences in `word`.
///
/// With an explicit `alphabet`, every word letter must belong to it and unused
/// letters keep a zero count. Without one, the alphabet defaults to the
/// distinct letters of the word in first-occurrence order.
pub fn alphabetic_map(word: &str, alphabet: Option<&[char]>) -> Result<AlphabeticVector> {
    match alphabet {
        Some(letters) => {
            let av = AlphabeticVector::new(letters.to_vec(), vec![0; letters.len()])?;
            let mut counts = av.counts().to_vec();
            let index: std::collections::HashMap<char, usize> = letters
                .iter()
                .enumerate()
                .map(|(i, &letter)| (letter, i))
                .collect();
            for letter in word.chars() {
                match index.get(&letter) {
                    Some(&i) => counts[i] += 1,
                    None => return Err(Error::InvalidLetter { letter }),
                }
            }
            AlphabeticVector::new(letters.to_vec(), counts)
        }
        None => {
            let mut letters: Vec<char> = Vec::new();
            let mut counts: Vec<usize> = Vec::new();
            for letter in word.chars() {
                match letters.iter().position(|&l| l == letter) {
                    Some(i) => counts[i] += 1,
                    None => {
                        letters.push(letter);
                        counts.push(1);
                    }
                }
            }
            AlphabeticVector::new(letters, counts)
        }
    }
}

/// Histogram of the letter counts over the basis `{0..n−1}`: output component
/// `j` is the number of letters occurring exactly `j` times.
pub fn alphabetic_basis_map(
    av: &AlphabeticVector,
    basis: Basis,
    mode: MappingMode,
) -> Result<ParikhVector> {
    let n = basis.size();
    let mut components = vec![0usize; n];
    for (&letter, &count) in av.alphabet().iter().zip(av.counts()) {
        if basis.contains(count) {
            components[count] += 1;
        } else if mode == MappingMode::Strict {
            return Err(Error::OutOfRangeCount {
                letter,
                count,
                basis: n,
            });
        }
    }
    ParikhVector::new(basis, components)
}

/// Histogram of a basis vector's own component values over the same basis:
/// output component `j` counts the positions holding the value `j`. This is
/// the mapping whose iteration the rest of the crate studies.
pub fn basis_map(v: &ParikhVector, mode: MappingMode) -> Result<ParikhVector> {
    let basis = v.basis();
    let n = basis.size();
    let mut components = vec![0usize; n];
    for (index, &value) in v.components().iter().enumerate() {
        if basis.contains(value) {
            components[value] += 1;
        } else if mode == MappingMode::Strict {
            return Err(Error::OutOfRangeComponent {
                index,
                value,
                basis: n,
            });
        }
    }
    ParikhVector::new(basis, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(components: &[usize]) -> ParikhVector {
        ParikhVector::from_components(components.to_vec()).unwrap()
    }

    fn basis(n: usize) -> Basis {
        Basis::new(n).unwrap()
    }

    #[test]
    fn word_counts_with_explicit_alphabet() {
        let av = alphabetic_map("baacab", Some(&['a', 'b', 'c'])).unwrap();
        assert_eq!(av.counts(), &[3, 2, 1]);
        assert_eq!(av.word_length(), 6);
    }

    #[test]
    fn word_counts_default_alphabet() {
        let av = alphabetic_map("baacab", None).unwrap();
        assert_eq!(av.alphabet(), &['b', 'a', 'c']);
        assert_eq!(av.counts(), &[2, 3, 1]);
        let av = alphabetic_map("aaa", None).unwrap();
        assert_eq!(av.alphabet(), &['a']);
        assert_eq!(av.counts(), &[3]);
    }

    #[test]
    fn empty_word() {
        let av = alphabetic_map("", Some(&['a', 'b'])).unwrap();
        assert_eq!(av.counts(), &[0, 0]);
        let av = alphabetic_map("", None).unwrap();
        assert_eq!(av.alphabet_size(), 0);
    }

    #[test]
    fn letter_outside_alphabet() {
        let err = alphabetic_map("abx", Some(&['a', 'b'])).unwrap_err();
        assert_eq!(err, Error::InvalidLetter { letter: 'x' });
    }

    #[test]
    fn counts_to_basis_histogram() {
        let av = AlphabeticVector::new(vec!['a', 'b', 'c'], vec![3, 2, 1]).unwrap();
        let v = alphabetic_basis_map(&av, basis(4), MappingMode::Strict).unwrap();
        assert_eq!(v, pv(&[0, 1, 1, 1]));

        let zeros = AlphabeticVector::new(vec!['a', 'b', 'c'], vec![0, 0, 0]).unwrap();
        let v = alphabetic_basis_map(&zeros, basis(3), MappingMode::Strict).unwrap();
        assert_eq!(v, pv(&[3, 0, 0]));
    }

    #[test]
    fn counts_out_of_range() {
        let av = AlphabeticVector::new(vec!['a', 'b'], vec![5, 1]).unwrap();
        let err = alphabetic_basis_map(&av, basis(4), MappingMode::Strict).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRangeCount {
                letter: 'a',
                count: 5,
                basis: 4
            }
        );
        let v = alphabetic_basis_map(&av, basis(4), MappingMode::IgnoreOutOfRange).unwrap();
        assert_eq!(v, pv(&[0, 1, 0, 0]));
    }

    #[test]
    fn basis_histogram() {
        assert_eq!(
            basis_map(&pv(&[0, 1, 1, 1]), MappingMode::Strict).unwrap(),
            pv(&[1, 3, 0, 0])
        );
        assert_eq!(
            basis_map(&pv(&[1, 2, 1, 0]), MappingMode::Strict).unwrap(),
            pv(&[1, 2, 1, 0])
        );
    }

    #[test]
    fn basis_out_of_range() {
        let v = ParikhVector::new(basis(4), vec![4, 0, 0, 0]).unwrap();
        let err = basis_map(&v, MappingMode::Strict).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRangeComponent {
                index: 0,
                value: 4,
                basis: 4
            }
        );
        assert_eq!(
            basis_map(&v, MappingMode::IgnoreOutOfRange).unwrap(),
            pv(&[3, 0, 0, 0])
        );
    }

    #[test]
    fn strict_output_sums() {
        // For strict-valid input: output plain sum is n, output weighted sum
        // is the input plain sum.
        let v = pv(&[2, 1, 0, 1]);
        let out = basis_map(&v, MappingMode::Strict).unwrap();
        assert_eq!(out.plain_sum(), 4);
        assert_eq!(out.weighted_sum(), v.plain_sum());
    }
}
