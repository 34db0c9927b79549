//! Canonical hereditarily finite sets.
//!
//! The set universe is built iteratively from the empty set: an `HFSet`
//! holds its elements sorted in a recursive total order with duplicates
//! removed, so sets with the same elements are structurally identical
//! (extensionality) and equality is plain `==`. Membership is well-founded
//! by construction — an element always has strictly smaller rank than its
//! container — which is what makes every set carry a regularity witness.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest von Neumann numeral that will be materialized.
pub const VON_NEUMANN_CAP: usize = 16;

/// Largest rank for universe enumeration; stage sizes grow as iterated
/// powersets (1, 2, 4, 16, 65536), so 5 is the last desk-sized stage.
pub const RANK_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("the empty set has no element, so no regularity witness")]
    EmptyInput,
    #[error("cap exceeded: requested {requested}, cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A hereditarily finite set in canonical form.
///
/// Elements are shared (`Arc`), immutable after construction, and stored
/// sorted by the derived recursive order without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HFSet {
    elems: Arc<Vec<HFSet>>,
}

impl Default for HFSet {
    fn default() -> Self {
        HFSet::empty()
    }
}

impl HFSet {
    /// The empty set ∅.
    pub fn empty() -> Self {
        HFSet {
            elems: Arc::new(Vec::new()),
        }
    }

    /// Canonicalizes an arbitrary element list (sorts, dedupes).
    pub fn from_elements(elems: impl IntoIterator<Item = HFSet>) -> Self {
        let mut v: Vec<HFSet> = elems.into_iter().collect();
        v.sort();
        v.dedup();
        HFSet { elems: Arc::new(v) }
    }

    /// `self ∪ {y}`; returns `self` unchanged (up to identity) if `y` is
    /// already a member.
    pub fn adjoin(&self, y: &HFSet) -> Self {
        match self.elems.binary_search(y) {
            Ok(_) => self.clone(),
            Err(at) => {
                let mut v = Vec::with_capacity(self.elems.len() + 1);
                v.extend_from_slice(&self.elems[..at]);
                v.push(y.clone());
                v.extend_from_slice(&self.elems[at..]);
                HFSet { elems: Arc::new(v) }
            }
        }
    }

    /// `{x}`.
    pub fn singleton(x: &HFSet) -> Self {
        HFSet::empty().adjoin(x)
    }

    pub fn elements(&self) -> &[HFSet] {
        &self.elems
    }

    pub fn cardinality(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Membership `y ∈ self`.
    pub fn contains(&self, y: &HFSet) -> bool {
        self.elems.binary_search(y).is_ok()
    }

    /// 0 for ∅, else one above the largest element rank.
    pub fn rank(&self) -> usize {
        self.elems.iter().map(|e| e.rank() + 1).max().unwrap_or(0)
    }

    /// Sorted-merge intersection.
    pub fn intersection(&self, other: &HFSet) -> HFSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        HFSet {
            elems: Arc::new(out),
        }
    }

    pub fn is_disjoint(&self, other: &HFSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Union of two sets.
    pub fn union(&self, other: &HFSet) -> HFSet {
        HFSet::from_elements(self.elems.iter().chain(other.elems.iter()).cloned())
    }

    /// An element disjoint from `self` — the witness demanded of every
    /// non-empty set by the regularity axiom. Returns the first such
    /// element in canonical order.
    pub fn regularity_witness(&self) -> Result<HFSet, HfError> {
        self.elems
            .iter()
            .find(|e| e.is_disjoint(self))
            .cloned()
            .ok_or(HfError::EmptyInput)
    }

    /// The von Neumann numeral `n = {0, 1, …, n−1}`.
    pub fn von_neumann(n: usize) -> Result<HFSet, HfError> {
        if n > VON_NEUMANN_CAP {
            return Err(HfError::CapExceeded {
                requested: n,
                cap: VON_NEUMANN_CAP,
            });
        }
        let mut cur = HFSet::empty();
        for _ in 0..n {
            let next = cur.adjoin(&cur);
            cur = next;
        }
        Ok(cur)
    }

    /// Every set of rank `< k`, in canonical order. Stage `k` is the
    /// powerset of stage `k−1`, so sizes run 1, 2, 4, 16, 65536.
    pub fn universe_up_to_rank(k: usize) -> Result<Vec<HFSet>, HfError> {
        if k > RANK_CAP {
            return Err(HfError::CapExceeded {
                requested: k,
                cap: RANK_CAP,
            });
        }
        let mut stage: Vec<HFSet> = Vec::new();
        for _ in 0..k {
            stage = powerset_of(&stage);
        }
        stage.sort();
        Ok(stage)
    }
}

/// All subsets of a (duplicate-free) slice of sets.
fn powerset_of(base: &[HFSet]) -> Vec<HFSet> {
    assert!(base.len() <= 16, "powerset blow-up");
    let mut out = Vec::with_capacity(1 << base.len());
    for mask in 0u32..(1 << base.len()) {
        let members = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.clone());
        out.push(HFSet::from_elements(members));
    }
    out
}

/// Outcome of checking one instance of the set-induction schema over the
/// rank-`k` universe: if `base` and `step` hold, `universal` must hold.
#[derive(Debug, Clone)]
pub struct InductionReport {
    /// φ(∅)
    pub base: bool,
    /// φ(x) ⇒ φ(x ∪ {y}) for all x, y in the universe
    pub step: bool,
    pub step_counterexample: Option<(HFSet, HFSet)>,
    /// φ(x) for all x in the universe
    pub universal: bool,
    pub universal_counterexample: Option<HFSet>,
}

/// Evaluates the induction-schema instance for a decidable predicate over
/// `universe_up_to_rank(k)`.
pub fn induction_check(
    k: usize,
    phi: impl Fn(&HFSet) -> bool,
) -> Result<InductionReport, HfError> {
    let universe = HFSet::universe_up_to_rank(k)?;
    let base = phi(&HFSet::empty());
    let mut step = true;
    let mut step_counterexample = None;
    'outer: for x in &universe {
        if !phi(x) {
            continue;
        }
        for y in &universe {
            if !phi(&x.adjoin(y)) {
                step = false;
                step_counterexample = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    let universal_counterexample = universe.iter().find(|x| !phi(x)).cloned();
    Ok(InductionReport {
        base,
        step,
        step_counterexample,
        universal: universal_counterexample.is_none(),
        universal_counterexample,
    })
}

/// Braces-and-commas serialization in canonical element order, e.g.
/// `{{},{{}}}`.
impl fmt::Display for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> HFSet {
        HFSet::empty()
    }

    #[test]
    fn empty_set_basics() {
        assert_eq!(e(), e());
        assert_eq!(e().cardinality(), 0);
        assert_eq!(e().rank(), 0);
        assert_ne!(e().adjoin(&e()), e());
    }

    #[test]
    fn adjoin_is_idempotent_and_order_free() {
        let s = e().adjoin(&e());
        assert_eq!(s.adjoin(&e()), s);
        let a = HFSet::singleton(&e());
        let two = e().adjoin(&e()).adjoin(&a);
        let two_rev = e().adjoin(&a).adjoin(&e());
        assert_eq!(two, two_rev);
        assert_eq!(e().adjoin(&a), HFSet::singleton(&a));
    }

    #[test]
    fn regularity_witnesses() {
        let single = HFSet::singleton(&e());
        assert_eq!(single.regularity_witness().unwrap(), e());
        let nested = HFSet::singleton(&single);
        // {∅} ∩ {{∅}} = ∅ because ∅ ∉ {{∅}}
        assert_eq!(nested.regularity_witness().unwrap(), single);
        assert_eq!(e().regularity_witness().unwrap_err(), HfError::EmptyInput);
    }

    #[test]
    fn von_neumann_numerals() {
        assert_eq!(HFSet::von_neumann(0).unwrap(), e());
        let two = HFSet::von_neumann(2).unwrap();
        assert_eq!(two, HFSet::from_elements([e(), HFSet::singleton(&e())]));
        assert_eq!(HFSet::von_neumann(9).unwrap().cardinality(), 9);
        assert!(matches!(
            HFSet::von_neumann(17),
            Err(HfError::CapExceeded { requested: 17, cap: 16 })
        ));
        assert!(HFSet::von_neumann(16).is_ok());
    }

    #[test]
    fn von_neumann_membership_is_the_numeric_order() {
        let nums: Vec<HFSet> = (0..=8).map(|n| HFSet::von_neumann(n).unwrap()).collect();
        for (n, bigger) in nums.iter().enumerate() {
            for (m, smaller) in nums.iter().enumerate() {
                assert_eq!(bigger.contains(smaller), m < n, "m={m} n={n}");
            }
            // linearly ordered by membership and of the right size
            assert_eq!(bigger.cardinality(), n);
        }
    }

    #[test]
    fn universe_sizes_follow_iterated_powersets() {
        assert_eq!(HFSet::universe_up_to_rank(0).unwrap().len(), 0);
        assert_eq!(HFSet::universe_up_to_rank(1).unwrap(), vec![e()]);
        assert_eq!(HFSet::universe_up_to_rank(2).unwrap().len(), 2);
        let v3 = HFSet::universe_up_to_rank(3).unwrap();
        assert_eq!(v3.len(), 4);
        let expect = vec![
            e(),
            HFSet::singleton(&e()),
            HFSet::from_elements([e(), HFSet::singleton(&e())]),
            HFSet::singleton(&HFSet::singleton(&e())),
        ];
        for s in &expect {
            assert!(v3.contains(s));
        }
        assert_eq!(HFSet::universe_up_to_rank(4).unwrap().len(), 16);
        assert!(matches!(
            HFSet::universe_up_to_rank(6),
            Err(HfError::CapExceeded { .. })
        ));
    }

    #[test]
    fn universe_ranks_are_below_the_stage() {
        for k in 0..=4 {
            let stage = HFSet::universe_up_to_rank(k).unwrap();
            assert!(stage.iter().all(|s| s.rank() < k.max(1)));
            // exactly once: canonical sort means adjacent duplicates
            let mut sorted = stage.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), stage.len());
        }
    }

    #[test]
    fn induction_schema_instances() {
        // "no set contains itself" survives base, step, and enumeration
        let report = induction_check(4, |x| !x.contains(x)).unwrap();
        assert!(report.base && report.step && report.universal);

        // a predicate failing somewhere must also fail base or step
        let report = induction_check(4, |x| x.cardinality() < 2).unwrap();
        assert!(!report.universal);
        assert!(!report.base || !report.step);
        assert!(report.step_counterexample.is_some());
    }

    #[test]
    fn serialization_is_canonical() {
        assert_eq!(e().to_string(), "{}");
        let pair = HFSet::from_elements([HFSet::singleton(&e()), e()]);
        assert_eq!(pair.to_string(), "{{},{{}}}");
        let vn3 = HFSet::von_neumann(3).unwrap();
        assert_eq!(vn3.to_string(), "{{},{{}},{{},{{}}}}");
    }

    #[test]
    fn intersection_and_union() {
        let a = HFSet::von_neumann(3).unwrap();
        let b = HFSet::von_neumann(2).unwrap();
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b), a);
        assert!(e().is_disjoint(&a));
    }
}
