//! Lists of permutations weighted by ±1, the split/merge weight-reversing
//! involution on them, and the bridge from its fixed points to column-marked
//! path codes.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::{
    padded_compositions, stirling_cycle, CyclePermutation, PaddedComposition,
};
use crate::error::{Error, Result};
use crate::paths::MarkedPathCode;

/// Default cap on the number of lists enumerated; covers `n <= 6`.
pub const DEFAULT_LIST_BUDGET: u64 = 1_000_000;

/// A list `(pi_1, ..., pi_n)` where `pi_i` permutes `[i+1]`, `pi_1` is the
/// transposition `(1,2)`, every nonidentity `pi_i` with `c` nonfirst entries
/// is followed by exactly `c - 1` identities, and the nonfirst entries total
/// `n`. Weight is `(-1)` to the number of identities in the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermList {
    items: Vec<CyclePermutation>,
}

impl PermList {
    pub fn new(items: Vec<CyclePermutation>) -> Result<Self> {
        let n = items.len();
        if n == 0 {
            return Err(Error::Malformed(
                "a permutation list must be nonempty".into(),
            ));
        }
        for (i, p) in items.iter().enumerate() {
            if p.size() != i + 2 {
                return Err(Error::Malformed(format!(
                    "entry {} must permute [{}], permutes [{}]",
                    i + 1,
                    i + 2,
                    p.size()
                )));
            }
        }
        if items[0].as_transposition() != Some((1, 2)) {
            return Err(Error::Malformed(
                "the first entry must be the transposition (1 2)".into(),
            ));
        }
        let counts: Vec<usize> = items.iter().map(|p| p.nonfirst_count()).collect();
        PaddedComposition::new(counts)
            .map_err(|e| Error::Malformed(format!("nonfirst counts do not pad correctly: {e}")))?;
        Ok(Self { items })
    }

    /// Parse from cycle-notation strings, `"e"` denoting an identity.
    pub fn from_cycle_strings(strs: &[&str]) -> Result<Self> {
        let items = strs
            .iter()
            .enumerate()
            .map(|(i, s)| CyclePermutation::parse(s, i + 2))
            .collect::<Result<Vec<_>>>()?;
        Self::new(items)
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[CyclePermutation] {
        &self.items
    }

    pub fn epsilon_count(&self) -> usize {
        self.items.iter().filter(|p| p.is_identity()).count()
    }

    /// `+1` or `-1`.
    pub fn weight(&self) -> i32 {
        if self.epsilon_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn cycle_strings(&self) -> Vec<String> {
        self.items.iter().map(|p| p.to_string()).collect()
    }
}

/// Which rule the involution applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// A permutation with several nonfirst entries was split into a
    /// transposition and a shorter permutation, consuming an identity.
    Split,
    /// A transposition was merged into its successor, emitting an identity.
    Merge,
}

/// A fixed point of the involution: transpositions `(a_i, b_i)` with
/// `1 <= a_i < b_i <= i+1` and weakly increasing `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedList {
    pairs: Vec<(usize, usize)>,
}

impl FixedList {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Malformed("a fixed list must be nonempty".into()));
        }
        let mut prev_b = 0;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a < 1 || a >= b || b > i + 2 {
                return Err(Error::Malformed(format!(
                    "pair {} must satisfy 1 <= a < b <= {}, got ({a},{b})",
                    i + 1,
                    i + 2
                )));
            }
            if b < prev_b {
                return Err(Error::Malformed(
                    "larger elements must be weakly increasing".into(),
                ));
            }
            prev_b = b;
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// `Some` exactly when the list consists of transpositions with weakly
/// increasing larger elements.
pub fn as_fixed(list: &PermList) -> Option<FixedList> {
    let mut pairs = Vec::with_capacity(list.n());
    let mut prev_b = 0;
    for p in list.items() {
        let (a, b) = p.as_transposition()?;
        if b < prev_b {
            return None;
        }
        prev_b = b;
        pairs.push((a, b));
    }
    Some(FixedList { pairs })
}

pub fn is_fixed(list: &PermList) -> bool {
    as_fixed(list).is_some()
}

/// Subtracting 1 from each larger element turns a fixed list into a
/// column-marked `(1,n,n)`-path code.
pub fn fixed_to_marked_code(f: &FixedList) -> MarkedPathCode {
    let pairs: Vec<(usize, usize)> = f.pairs().iter().map(|&(a, b)| (a, b - 1)).collect();
    MarkedPathCode::new(1, pairs).expect("a fixed list always codes a marked path")
}

/// Apply the weight-reversing involution once. Scans for the first entry
/// with more than one nonfirst entry (split it) or a transposition whose
/// larger element exceeds every nonfirst entry of its successor (merge
/// them). Rejects fixed points.
pub fn involution_step(list: &PermList) -> Result<PermList> {
    involution_step_classified(list).map(|(l, _)| l)
}

/// As [`involution_step`], also reporting which rule fired.
pub fn involution_step_classified(list: &PermList) -> Result<(PermList, StepCase)> {
    let n = list.n();
    let items = list.items();
    for k in 0..n {
        let p = &items[k];
        let c = p.nonfirst_count();
        if c > 1 {
            // split: the largest nonfirst entry m leaves its cycle; its
            // predecessor l pairs with it as a transposition
            let m = p.max_nonfirst().expect("c > 1 implies a nonfirst entry");
            let l = p
                .predecessor_in_cycle(m)
                .expect("a nonfirst entry has a predecessor");
            debug_assert!(
                items[k + 1].is_identity(),
                "padding guarantees an identity here"
            );
            let transposition = CyclePermutation::transposition(k + 2, l, m)?;
            let remainder = p.erase_to_singleton(m).resized(k + 3)?;
            let mut new_items = items.to_vec();
            new_items[k] = transposition;
            new_items[k + 1] = remainder;
            let result = PermList::new(new_items)
                .map_err(|e| Error::Internal(format!("split left the family: {e}")))?;
            return Ok((result, StepCase::Split));
        }
        if c == 1 {
            let (a, b) = p
                .as_transposition()
                .expect("one nonfirst entry means a transposition");
            if k + 1 < n {
                let next = &items[k + 1];
                let fires = match next.max_nonfirst() {
                    None => true, // an identity has no nonfirst entry to beat b
                    Some(m) => b > m,
                };
                if fires {
                    // merge: b is a singleton in the successor; splice it in
                    // right after a and pad with an identity
                    let merged = items[k + 1].insert_after(a, b)?.resized(k + 2)?;
                    let mut new_items = items.to_vec();
                    new_items[k] = merged;
                    new_items[k + 1] = CyclePermutation::identity(k + 3);
                    let result = PermList::new(new_items)
                        .map_err(|e| Error::Internal(format!("merge left the family: {e}")))?;
                    return Ok((result, StepCase::Merge));
                }
            }
        }
    }
    Err(Error::InvalidParameter(
        "the list is a fixed point; the involution does not move it".into(),
    ))
}

/// Predicted number of lists for size `n`: the unsigned version of the
/// permutation sum, cheap to evaluate before enumerating.
pub fn list_count(n: usize) -> BigUint {
    let mut total = BigUint::zero();
    for comp in padded_compositions(n, true) {
        let mut prod = BigUint::from(1u32);
        for (i, &c) in comp.parts().iter().enumerate() {
            let m = i + 2;
            prod *= stirling_cycle(m, (m - c) as isize);
        }
        total += prod;
    }
    total
}

/// All permutations of `[m]` with exactly `c` nonfirst entries, in
/// lexicographic one-line order.
fn perms_with_nonfirst(m: usize, c: usize) -> Vec<CyclePermutation> {
    if c == 0 {
        return vec![CyclePermutation::identity(m)];
    }
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 1..=m {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(m, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut all = Vec::new();
    rec(m, &mut Vec::new(), &mut vec![false; m + 1], &mut all);
    all.into_iter()
        .filter_map(|images| {
            let p = CyclePermutation::from_one_line(&images).expect("generated a bijection");
            (p.nonfirst_count() == c).then_some(p)
        })
        .collect()
}

/// Deterministic stream of all lists of size `n`: outer loop over restricted
/// padded compositions in lexicographic order, inner product over the
/// matching permutations position by position.
pub struct ListIter {
    comps: Vec<PaddedComposition>,
    comp_idx: usize,
    pools: Vec<Vec<CyclePermutation>>,
    indices: Vec<usize>,
    started: bool,
}

impl ListIter {
    fn load_composition(&mut self) -> bool {
        while self.comp_idx < self.comps.len() {
            let comp = &self.comps[self.comp_idx];
            self.pools = comp
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &c)| perms_with_nonfirst(i + 2, c))
                .collect();
            if self.pools.iter().all(|pool| !pool.is_empty()) {
                self.indices = vec![0; self.pools.len()];
                return true;
            }
            self.comp_idx += 1;
        }
        false
    }

    fn current(&self) -> PermList {
        let items: Vec<CyclePermutation> = self
            .indices
            .iter()
            .zip(&self.pools)
            .map(|(&i, pool)| pool[i].clone())
            .collect();
        PermList { items }
    }
}

impl Iterator for ListIter {
    type Item = PermList;

    fn next(&mut self) -> Option<PermList> {
        if !self.started {
            self.started = true;
            if !self.load_composition() {
                return None;
            }
            return Some(self.current());
        }
        // odometer over the pools, last position fastest
        let mut pos = self.indices.len();
        while pos > 0 {
            pos -= 1;
            if self.indices[pos] + 1 < self.pools[pos].len() {
                self.indices[pos] += 1;
                for i in &mut self.indices[pos + 1..] {
                    *i = 0;
                }
                return Some(self.current());
            }
        }
        self.comp_idx += 1;
        if !self.load_composition() {
            return None;
        }
        Some(self.current())
    }
}

/// Enumerate every list of size `n`; refuses when [`list_count`] exceeds
/// `budget`.
pub fn enumerate_lists(n: usize, budget: u64) -> Result<ListIter> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "list enumeration needs n >= 1".into(),
        ));
    }
    let predicted = list_count(n);
    if predicted > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: predicted.to_string(),
            budget,
        });
    }
    Ok(ListIter {
        comps: padded_compositions(n, true),
        comp_idx: 0,
        pools: Vec::new(),
        indices: Vec::new(),
        started: false,
    })
}

/// The determinant of the k=1 matrix of size `n`, evaluated by counting the
/// involution's fixed points.
pub fn det_via_involution(n: usize, budget: u64) -> Result<BigUint> {
    let mut fixed: u64 = 0;
    for list in enumerate_lists(n, budget)? {
        if is_fixed(&list) {
            fixed += 1;
        }
    }
    Ok(BigUint::from(fixed))
}
