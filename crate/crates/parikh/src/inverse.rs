//! The multivalued inverse of the basis mapping, and attractor reachability
//! rates computed by backward breadth-first search.
//!
//! A vector has preimages exactly when its component sum equals the dimension
//! (it is then called *generating*): the preimages are the distinct
//! arrangements of the multiset holding each value `j` with multiplicity
//! `target[j]`. The backward search walks constrained preimages (both sums
//! equal to `n`) level by level; once that bottoms out, one further inverse
//! step yields the deepest generating vectors, and the reachability rate from
//! a letter-count vector is that depth plus two (one alphabetic-basis mapping
//! plus one basis mapping below the deepest generating level).
//!
//! Each report carries a witness chain that replays forward:
//!
//! ```
//! use parikh::{reachability, Basis, DEFAULT_DEPTH_CAP};
//!
//! let report = reachability(Basis::new(4)?, 1, DEFAULT_DEPTH_CAP)?;
//! let witness = report.witness.expect("deepest chain");
//! assert_eq!(witness.validate()?, report.rate_from_alphabetic - 1);
//! assert_eq!(witness.member.to_string(), "1210");
//! # Ok::<(), parikh::Error>(())
//! ```

use std::collections::BTreeSet;

use crate::attractors::find_attractors;
use crate::dynamics::Attractor;
use crate::error::{Error, Result};
use crate::mapping::basis_map;
use crate::vector::{Basis, MappingMode, ParikhVector};

/// Exceeding this backward depth would contradict convergence at desk scale.
pub const DEFAULT_DEPTH_CAP: usize = 64;

/// All preimages of a generating vector, in ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct PreimageSet {
    pub target: ParikhVector,
    pub vectors: Vec<ParikhVector>,
}

fn ensure_generating(target: &ParikhVector) -> Result<()> {
    let n = target.basis().size();
    if target.plain_sum() != n {
        return Err(Error::NoPreimage {
            plain_sum: target.plain_sum(),
            basis: n,
        });
    }
    Ok(())
}

/// Backtracking enumeration of multiset arrangements, optionally constrained
/// to an exact weighted sum. Values are tried in ascending order per position,
/// so the output is lexicographically sorted.
fn arrangements(target: &ParikhVector, weighted_exactly: Option<usize>) -> Result<Vec<ParikhVector>> {
    ensure_generating(target)?;
    let basis = target.basis();
    let n = basis.size();
    // (value, remaining multiplicity), ascending by value
    let mut pool: Vec<(usize, usize)> = target.value_multiset();
    let mut nonzero_left: usize = pool.iter().map(|&(v, m)| v * m).sum();
    let mut current = vec![0usize; n];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        basis: Basis,
        position: usize,
        weighted: usize,
        nonzero_left: &mut usize,
        pool: &mut Vec<(usize, usize)>,
        current: &mut Vec<usize>,
        out: &mut Vec<ParikhVector>,
        bound: Option<usize>,
    ) {
        let n = current.len();
        if let Some(b) = bound {
            // every remaining nonzero value lands at position >= `position`,
            // so the weighted sum can only end at weighted + position * left
            // or more
            if weighted + position * *nonzero_left > b {
                return;
            }
        }
        if position == n {
            if bound.is_none_or(|b| weighted == b) {
                out.push(ParikhVector::new(basis, current.clone()).expect("length matches"));
            }
            return;
        }
        for i in 0..pool.len() {
            let (value, mult) = pool[i];
            if mult == 0 {
                continue;
            }
            pool[i].1 -= 1;
            if value > 0 {
                *nonzero_left -= value;
            }
            current[position] = value;
            rec(
                basis,
                position + 1,
                weighted + position * value,
                nonzero_left,
                pool,
                current,
                out,
                bound,
            );
            if value > 0 {
                *nonzero_left += value;
            }
            pool[i].1 += 1;
        }
        current[position] = 0;
    }

    rec(
        basis,
        0,
        0,
        &mut nonzero_left,
        &mut pool,
        &mut current,
        &mut out,
        weighted_exactly,
    );
    Ok(out)
}

/// Every vector that the basis mapping sends to `target`.
pub fn inverse_map(target: &ParikhVector) -> Result<PreimageSet> {
    Ok(PreimageSet {
        target: target.clone(),
        vectors: arrangements(target, None)?,
    })
}

/// Number of preimages without enumerating them: the multinomial
/// `n! / ∏ target[j]!`.
pub fn preimage_count(target: &ParikhVector) -> Result<u128> {
    ensure_generating(target)?;
    let mut remaining = target.basis().size() as u128;
    let mut count: u128 = 1;
    for &(_, mult) in &target.value_multiset() {
        // multiply by C(remaining, mult)
        let mut choose: u128 = 1;
        for i in 0..mult as u128 {
            choose = choose
                .checked_mul(remaining - i)
                .ok_or(Error::Overflow {
                    context: "preimage count",
                })?
                / (i + 1);
        }
        count = count.checked_mul(choose).ok_or(Error::Overflow {
            context: "preimage count",
        })?;
        remaining -= mult as u128;
    }
    Ok(count)
}

/// Preimages filtered to weighted sum `n` when `require_weighted` is set.
/// Their plain sum already equals `weighted_sum(target)`, so with the filter
/// on the result lies in the invariant set whenever the target does.
pub fn constrained_preimages(
    target: &ParikhVector,
    require_weighted: bool,
) -> Result<Vec<ParikhVector>> {
    let bound = require_weighted.then(|| target.basis().size());
    arrangements(target, bound)
}

/// Backward search record for one cycle member.
#[derive(Debug, Clone)]
pub struct MemberSearch {
    pub member: ParikhVector,
    /// Levels 1..=D of both-sum vectors whose forward orbit first touches the
    /// cycle at `member`; each level sorted ascending.
    pub constrained_levels: Vec<Vec<ParikhVector>>,
    /// Level D+1: all preimages of the deepest constrained level (of the
    /// member itself when D = 0), minus cycle members. These are generating
    /// but no longer weighted, i.e. first basis images of words.
    pub final_level: Vec<ParikhVector>,
    /// L = D + 1, or 0 in the degenerate case of no preimages at all.
    pub backward_depth: usize,
}

impl MemberSearch {
    /// Iterations to reach the attractor from a letter-count vector: the
    /// backward depth plus the alphabetic-basis step and the basis step that
    /// feeds the deepest generating vector.
    pub fn rate_from_alphabetic(&self) -> usize {
        self.backward_depth + 2
    }

    /// All levels with their depth, constrained levels first.
    pub fn levels(&self) -> Vec<(usize, &[ParikhVector])> {
        let mut out: Vec<(usize, &[ParikhVector])> = self
            .constrained_levels
            .iter()
            .enumerate()
            .map(|(i, level)| (i + 1, level.as_slice()))
            .collect();
        if !self.final_level.is_empty() {
            out.push((self.constrained_levels.len() + 1, self.final_level.as_slice()));
        }
        out
    }
}

fn search_member(
    member: &ParikhVector,
    cycle: &[ParikhVector],
    depth_cap: usize,
) -> Result<MemberSearch> {
    let cycle_set: BTreeSet<&ParikhVector> = cycle.iter().collect();
    let mut constrained_levels: Vec<Vec<ParikhVector>> = Vec::new();
    let mut frontier: Vec<ParikhVector> = constrained_preimages(member, true)?
        .into_iter()
        .filter(|u| !cycle_set.contains(u))
        .collect();
    while !frontier.is_empty() {
        if constrained_levels.len() >= depth_cap {
            return Err(Error::DepthCapExceeded { cap: depth_cap });
        }
        let mut next: BTreeSet<ParikhVector> = BTreeSet::new();
        for v in &frontier {
            next.extend(constrained_preimages(v, true)?);
        }
        constrained_levels.push(frontier);
        // forward images are unique, so nothing here can revisit the cycle
        debug_assert!(next.iter().all(|u| !cycle_set.contains(u)));
        frontier = next.into_iter().collect();
    }
    let mut fin: BTreeSet<ParikhVector> = BTreeSet::new();
    match constrained_levels.last() {
        Some(deepest) => {
            for v in deepest {
                fin.extend(inverse_map(v)?.vectors);
            }
        }
        None => {
            fin.extend(inverse_map(member)?.vectors);
        }
    }
    let final_level: Vec<ParikhVector> = fin
        .into_iter()
        .filter(|u| !cycle_set.contains(u))
        .collect();
    let backward_depth = if final_level.is_empty() {
        0
    } else {
        constrained_levels.len() + 1
    };
    Ok(MemberSearch {
        member: member.clone(),
        constrained_levels,
        final_level,
        backward_depth,
    })
}

/// A concrete deepest chain: an alphabetic-basis image, the generating chain
/// it feeds, and the cycle member reached.
#[derive(Debug, Clone)]
pub struct WitnessChain {
    /// Head of the chain; its plain sum is the alphabet size of a realizing
    /// word, not the dimension.
    pub alphabetic_image: ParikhVector,
    /// `u_L, u_{L−1}, …, u_1` — the deepest generating vector and its forward
    /// images down to the last vector before the cycle.
    pub generating_chain: Vec<ParikhVector>,
    pub member: ParikhVector,
}

impl WitnessChain {
    /// Head, generating chain, then the cycle member.
    pub fn full_chain(&self) -> Vec<ParikhVector> {
        let mut chain = Vec::with_capacity(self.generating_chain.len() + 2);
        chain.push(self.alphabetic_image.clone());
        chain.extend(self.generating_chain.iter().cloned());
        chain.push(self.member.clone());
        chain
    }

    /// Re-run the chain forward and count the basis steps from the head to the
    /// member; equals `rate_from_alphabetic − 1`.
    pub fn validate(&self) -> Result<usize> {
        let chain = self.full_chain();
        for pair in chain.windows(2) {
            let image = basis_map(&pair[0], MappingMode::Strict)?;
            if image != pair[1] {
                return Err(Error::InvalidArgument(format!(
                    "witness break: {} maps to {}, expected {}",
                    pair[0], image, pair[1]
                )));
            }
        }
        Ok(chain.len() - 1)
    }
}

fn build_witness(search: &MemberSearch) -> Result<Option<WitnessChain>> {
    let Some(deepest) = search.final_level.last() else {
        return Ok(None);
    };
    let mut generating_chain = vec![deepest.clone()];
    for _ in 1..search.backward_depth {
        let next = basis_map(generating_chain.last().expect("nonempty"), MappingMode::Strict)?;
        generating_chain.push(next);
    }
    let alphabetic_image = inverse_map(deepest)?
        .vectors
        .into_iter()
        .next()
        .expect("a generating vector has at least one preimage");
    Ok(Some(WitnessChain {
        alphabetic_image,
        generating_chain,
        member: search.member.clone(),
    }))
}

/// Backward-search results for one attractor.
#[derive(Debug, Clone)]
pub struct AttractorReachability {
    pub attractor: Attractor,
    /// One search per cycle member, in canonical cycle order.
    pub members: Vec<MemberSearch>,
    /// Maximum over the members.
    pub rate_from_alphabetic: usize,
}

/// Reachability rates of the order-`k` attractors of one basis.
#[derive(Debug, Clone)]
pub struct ReachabilityReport {
    pub basis: Basis,
    pub order: usize,
    pub attractors: Vec<AttractorReachability>,
    /// Maximum over all order-`k` attractors and their members.
    pub rate_from_alphabetic: usize,
    /// One more mapping to start from a word instead.
    pub rate_from_word: usize,
    /// Deepest chain realizing the published rate; absent only in the
    /// degenerate no-preimage case.
    pub witness: Option<WitnessChain>,
    /// Level sizes of the rate-attaining member search, deepest level last.
    pub level_sizes: Vec<usize>,
}

/// Run the backward search for every order-`k` attractor of the basis.
pub fn reachability(basis: Basis, order: usize, depth_cap: usize) -> Result<ReachabilityReport> {
    let table = find_attractors(basis, usize::MAX);
    let matching: Vec<&Attractor> = table
        .attractors
        .iter()
        .filter(|a| a.order() == order)
        .collect();
    if matching.is_empty() {
        return Err(Error::NoAttractor {
            basis: basis.size(),
            order,
        });
    }
    let mut attractors = Vec::new();
    let mut best: Option<(usize, usize, usize)> = None; // (rate, attractor idx, member idx)
    for (ai, attractor) in matching.iter().enumerate() {
        let mut members = Vec::new();
        let mut attractor_rate = 0;
        for (mi, member) in attractor.cycle().iter().enumerate() {
            let search = search_member(member, attractor.cycle(), depth_cap)?;
            let rate = search.rate_from_alphabetic();
            attractor_rate = attractor_rate.max(rate);
            if best.is_none_or(|(r, _, _)| rate > r) {
                best = Some((rate, ai, mi));
            }
            members.push(search);
        }
        attractors.push(AttractorReachability {
            attractor: (*attractor).clone(),
            members,
            rate_from_alphabetic: attractor_rate,
        });
    }
    let (rate, ai, mi) = best.expect("at least one member searched");
    let top = &attractors[ai].members[mi];
    let level_sizes: Vec<usize> = top.levels().iter().map(|(_, level)| level.len()).collect();
    let witness = build_witness(top)?;
    Ok(ReachabilityReport {
        basis,
        order,
        attractors,
        rate_from_alphabetic: rate,
        rate_from_word: rate + 1,
        witness,
        level_sizes,
    })
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
    fn preimages_of_fixed_point() {
        let set = inverse_map(&pv(&[1, 2, 1, 0])).unwrap();
        assert_eq!(set.vectors.len(), 12);
        assert_eq!(preimage_count(&pv(&[1, 2, 1, 0])).unwrap(), 12);
        for u in &set.vectors {
            assert_eq!(basis_map(u, MappingMode::Strict).unwrap(), set.target);
        }
        // sorted and duplicate-free
        let mut sorted = set.vectors.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted, set.vectors);
    }

    #[test]
    fn preimages_examples() {
        let set = inverse_map(&pv(&[1, 3, 0, 0])).unwrap();
        assert_eq!(set.vectors.len(), 4);
        assert!(set.vectors.contains(&pv(&[0, 1, 1, 1])));

        let set = inverse_map(&pv(&[0, 0, 0, 4])).unwrap();
        assert_eq!(set.vectors, vec![pv(&[3, 3, 3, 3])]);
    }

    #[test]
    fn no_preimage_when_sum_differs() {
        let err = inverse_map(&pv(&[1, 1, 1, 0])).unwrap_err();
        assert_eq!(
            err,
            Error::NoPreimage {
                plain_sum: 3,
                basis: 4
            }
        );
    }

    #[test]
    fn constrained_examples() {
        assert_eq!(
            constrained_preimages(&pv(&[1, 2, 1, 0]), true).unwrap(),
            vec![pv(&[1, 2, 1, 0]), pv(&[2, 1, 0, 1])]
        );
        assert!(constrained_preimages(&pv(&[2, 1, 0, 1]), true)
            .unwrap()
            .is_empty());
        assert!(constrained_preimages(&pv(&[2, 0, 2, 0]), true)
            .unwrap()
            .contains(&pv(&[2, 0, 2, 0])));
        // unconstrained call returns the full arrangement set
        assert_eq!(
            constrained_preimages(&pv(&[2, 1, 0, 1]), false).unwrap().len(),
            12
        );
    }

    #[test]
    fn count_matches_enumeration() {
        for target in [
            pv(&[1, 2, 1, 0]),
            pv(&[2, 0, 2, 0]),
            pv(&[1, 3, 0, 0]),
            pv(&[2, 1, 2, 0, 0]),
            pv(&[3, 1, 1, 1, 0, 0]),
        ] {
            assert_eq!(
                preimage_count(&target).unwrap(),
                inverse_map(&target).unwrap().vectors.len() as u128
            );
        }
    }

    #[test]
    fn rates_small_bases() {
        let r = reachability(basis(4), 1, DEFAULT_DEPTH_CAP).unwrap();
        assert_eq!(r.rate_from_alphabetic, 4);
        assert_eq!(r.rate_from_word, 5);
        // two first-order attractors; the flat one has no deeper both-sum
        // preimages, so its rate is 3
        assert_eq!(r.attractors.len(), 2);
        let rates: Vec<(String, usize)> = r
            .attractors
            .iter()
            .map(|a| (a.attractor.to_string(), a.rate_from_alphabetic))
            .collect();
        assert_eq!(rates, vec![("1210".into(), 4), ("2020".into(), 3)]);

        assert_eq!(reachability(basis(5), 1, 64).unwrap().rate_from_alphabetic, 5);
        assert_eq!(reachability(basis(7), 1, 64).unwrap().rate_from_alphabetic, 3);
        assert_eq!(reachability(basis(7), 3, 64).unwrap().rate_from_alphabetic, 5);
        assert_eq!(reachability(basis(8), 1, 64).unwrap().rate_from_alphabetic, 4);
    }

    #[test]
    fn deep_two_cycle_chains() {
        // the 2-cycle searches reach depth 6 through sparse vectors like
        // (4,0,0,2,0,0) and (4,0,4,0,0,0,0,0)
        let r = reachability(basis(6), 2, 64).unwrap();
        assert_eq!(r.rate_from_alphabetic, 8);
        let r = reachability(basis(8), 2, 64).unwrap();
        assert_eq!(r.rate_from_alphabetic, 8);
    }

    #[test]
    fn depth_cap_enforced() {
        let err = reachability(basis(6), 2, 2).unwrap_err();
        assert_eq!(err, Error::DepthCapExceeded { cap: 2 });
    }

    #[test]
    fn no_attractor_errors() {
        assert_eq!(
            reachability(basis(4), 2, 64).unwrap_err(),
            Error::NoAttractor { basis: 4, order: 2 }
        );
        assert_eq!(
            reachability(basis(2), 1, 64).unwrap_err(),
            Error::NoAttractor { basis: 2, order: 1 }
        );
        assert_eq!(
            reachability(basis(6), 1, 64).unwrap_err(),
            Error::NoAttractor { basis: 6, order: 1 }
        );
    }

    #[test]
    fn witness_round_trip() {
        for (n, k) in [(4, 1), (5, 1), (6, 2), (7, 1), (7, 3), (8, 2)] {
            let r = reachability(basis(n), k, 64).unwrap();
            let witness = r.witness.expect("witness present");
            let steps = witness.validate().unwrap();
            assert_eq!(steps, r.rate_from_alphabetic - 1, "n={n} k={k}");
            // the head is not generating: its plain sum differs from n
            assert_ne!(witness.alphabetic_image.plain_sum(), n);
        }
    }

    #[test]
    fn backward_levels_equal_forward_distance() {
        for (n, k) in [(4, 1), (5, 1), (6, 2), (7, 3)] {
            let r = reachability(basis(n), k, 64).unwrap();
            for ar in &r.attractors {
                for search in &ar.members {
                    for (depth, level) in search.levels() {
                        for v in level {
                            let mut cur = v.clone();
                            for _ in 0..depth {
                                assert!(
                                    !ar.attractor.contains(&cur),
                                    "premature cycle touch from {v} at n={n}"
                                );
                                cur = basis_map(&cur, MappingMode::Strict).unwrap();
                            }
                            assert_eq!(cur, search.member, "level {depth} vector {v}");
                        }
                    }
                }
            }
        }
    }
}
