//! Single-source acyclic finite (SAF) automata in two-line form: validation,
//! counting recurrences, brute-force enumeration, and canonicalization under
//! relabeling of the interior vertices.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};

/// Default cap on the raw candidate space `(n+1)^(kn)` scanned by the
/// brute-force enumerators.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

/// An acyclic automaton on alphabet size `k` with transient states
/// `1..=n` and sink `n+1`, stored as the bottom row of its two-line
/// representation: `bottom[(s-1)*k + t]` is the target of letter `t` from
/// state `s`. The top row (k copies each of `1..=n`) is implicit, and the
/// sink's self-loops are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLineAutomaton {
    k: usize,
    n: usize,
    bottom: Vec<usize>,
}

impl TwoLineAutomaton {
    /// Structural checks only (length and value ranges); semantic invariants
    /// are checked by [`validate`](Self::validate).
    pub fn new(k: usize, n: usize, bottom: Vec<usize>) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::Malformed(format!(
                "automaton parameters must be positive, got k={k}, n={n}"
            )));
        }
        if bottom.len() != k * n {
            return Err(Error::Malformed(format!(
                "bottom row must have length k*n = {}, got {}",
                k * n,
                bottom.len()
            )));
        }
        for (pos, &t) in bottom.iter().enumerate() {
            if t < 1 || t > n + 1 {
                return Err(Error::Malformed(format!(
                    "state {t} at column {} is outside 1..={}",
                    pos + 1,
                    n + 1
                )));
            }
        }
        Ok(Self { k, n, bottom })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sink(&self) -> usize {
        self.n + 1
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Target of `letter` (0-based) from `state` (1-based).
    pub fn target(&self, state: usize, letter: usize) -> usize {
        self.bottom[(state - 1) * self.k + letter]
    }

    /// Check the semantic invariants: no self-loop on a transient state, the
    /// digraph on transient states is acyclic, and state 1 has no incoming
    /// edges. The error names the first violated condition.
    pub fn validate(&self) -> Result<()> {
        for s in 1..=self.n {
            for l in 0..self.k {
                if self.target(s, l) == s {
                    return Err(Error::InvalidAutomaton(format!(
                        "self-loop on transient state {s} (letter {})",
                        l + 1
                    )));
                }
            }
        }
        if let Some(cycle) = self.find_transient_cycle() {
            let path: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            return Err(Error::InvalidAutomaton(format!(
                "cycle among transient states: {}",
                path.join(" -> ")
            )));
        }
        for (pos, &t) in self.bottom.iter().enumerate() {
            if t == 1 {
                return Err(Error::InvalidAutomaton(format!(
                    "state 1 (the source) has an incoming edge from state {}",
                    pos / self.k + 1
                )));
            }
        }
        Ok(())
    }

    fn find_transient_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut color = vec![0u8; n + 1]; // 0 unseen, 1 on stack, 2 done
        for root in 1..=n {
            if color[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            color[root] = 1;
            while let Some(top) = stack.last_mut() {
                let (u, next_letter) = *top;
                if next_letter < self.k {
                    top.1 += 1;
                    let v = self.target(u, next_letter);
                    if v > n {
                        continue; // edge into the sink
                    }
                    match color[v] {
                        0 => {
                            color[v] = 1;
                            stack.push((v, 0));
                        }
                        1 => {
                            let mut cyc: Vec<usize> = stack
                                .iter()
                                .map(|&(w, _)| w)
                                .skip_while(|&w| w != v)
                                .collect();
                            cyc.push(v);
                            return Some(cyc);
                        }
                        _ => {}
                    }
                } else {
                    color[u] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Whether every interior vertex `2..=n` has at least one incoming edge,
    /// i.e. state 1 is the only source.
    pub fn is_single_source(&self) -> bool {
        let mut incoming = vec![false; self.n + 2];
        for &t in &self.bottom {
            incoming[t] = true;
        }
        (2..=self.n).all(|v| incoming[v])
    }

    /// Whether the last occurrences of the interior vertices `2, 3, ..., n`
    /// in the bottom row appear in that left-to-right order. Vacuously true
    /// for `n = 1`; false when some interior vertex never occurs.
    pub fn is_canonical(&self) -> bool {
        // last occurrence position of each interior vertex, indexed by v - 2
        let mut last = vec![None; self.n.saturating_sub(1)];
        for (pos, &t) in self.bottom.iter().enumerate() {
            if t >= 2 && t <= self.n {
                last[t - 2] = Some(pos);
            }
        }
        let mut prev = None;
        for entry in last {
            match entry {
                None => return false,
                Some(p) => {
                    if prev.is_some_and(|q| q >= p) {
                        return false;
                    }
                    prev = Some(p);
                }
            }
        }
        true
    }

    /// Relabel the interior vertices: `images[i]` is the new label of vertex
    /// `i + 2`. The source and sink keep their labels.
    pub fn relabel_interior(&self, images: &[usize]) -> Result<TwoLineAutomaton> {
        let n = self.n;
        if images.len() + 1 != n {
            return Err(Error::Malformed(format!(
                "relabeling must list images for the {} interior vertices",
                n - 1
            )));
        }
        let mut map = vec![0usize; n + 2];
        map[1] = 1;
        map[n + 1] = n + 1;
        let mut used = vec![false; n + 2];
        for (i, &im) in images.iter().enumerate() {
            if im < 2 || im > n || used[im] {
                return Err(Error::Malformed(
                    "relabeling must be a bijection on the interior vertices 2..=n".into(),
                ));
            }
            used[im] = true;
            map[i + 2] = im;
        }
        let mut bottom = vec![0usize; self.k * n];
        for s in 1..=n {
            for l in 0..self.k {
                bottom[(map[s] - 1) * self.k + l] = map[self.target(s, l)];
            }
        }
        Ok(TwoLineAutomaton {
            k: self.k,
            n,
            bottom,
        })
    }

    /// The canonical representative of this automaton's relabeling class,
    /// found by the intrinsic marking procedure: repeatedly take the
    /// unmarked interior vertices all of whose incoming edges leave marked
    /// vertices, order each batch by its last incoming edge (mark index of
    /// the edge's source, then letter), and relabel each vertex by the rank
    /// at which it was marked.
    pub fn canonicalize(&self) -> Result<CanonicalAutomaton> {
        self.validate()?;
        if !self.is_single_source() {
            let missing = (2..=self.n)
                .find(|&v| !self.bottom.contains(&v))
                .expect("some interior vertex lacks an incoming edge");
            return Err(Error::NotSingleSource(format!(
                "interior vertex {missing} has no incoming edge"
            )));
        }
        let n = self.n;
        let mut subscript: Vec<Option<usize>> = vec![None; n + 2];
        subscript[1] = Some(1);
        let mut marked = 1;
        while marked < n {
            // batch of releasable vertices, keyed by their last incoming edge
            let mut batch: Vec<((usize, usize), usize)> = Vec::new();
            for v in 2..=n {
                if subscript[v].is_some() {
                    continue;
                }
                let mut all_marked = true;
                let mut key: Option<(usize, usize)> = None;
                for (pos, &t) in self.bottom.iter().enumerate() {
                    if t != v {
                        continue;
                    }
                    let (s, l) = (pos / self.k + 1, pos % self.k);
                    match subscript[s] {
                        Some(ms) => key = key.max(Some((ms, l))),
                        None => all_marked = false,
                    }
                }
                if all_marked {
                    let key = key.expect("single-source vertex has an incoming edge");
                    batch.push((key, v));
                }
            }
            if batch.is_empty() {
                return Err(Error::Internal(
                    "marking stalled on a validated single-source automaton".into(),
                ));
            }
            batch.sort();
            for (_, v) in batch {
                marked += 1;
                subscript[v] = Some(marked);
            }
        }
        let images: Vec<usize> = (2..=n).map(|v| subscript[v].unwrap()).collect();
        let relabeled = self.relabel_interior(&images)?;
        CanonicalAutomaton::new(relabeled).map_err(|e| {
            Error::Internal(format!(
                "canonicalization produced a non-canonical result: {e}"
            ))
        })
    }
}

/// A validated canonical representative: valid, single-source, and with the
/// last-occurrences-increasing property.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalAutomaton {
    inner: TwoLineAutomaton,
}

impl CanonicalAutomaton {
    pub fn new(a: TwoLineAutomaton) -> Result<Self> {
        a.validate()?;
        if !a.is_single_source() {
            return Err(Error::NotSingleSource(
                "a canonical automaton must be single-source".into(),
            ));
        }
        if !a.is_canonical() {
            return Err(Error::NotCanonical(
                "last occurrences of the interior vertices are not increasing".into(),
            ));
        }
        Ok(Self { inner: a })
    }

    pub fn as_automaton(&self) -> &TwoLineAutomaton {
        &self.inner
    }

    pub fn into_automaton(self) -> TwoLineAutomaton {
        self.inner
    }
}

static ACYCLIC_MEMO: LazyLock<Mutex<HashMap<usize, Vec<BigUint>>>> =
    LazyLock::new(Default::default);

/// Number of acyclic automata of size `n` on a `k`-letter alphabet, by the
/// inclusion-exclusion recurrence
/// `a_k(n) = sum_{j=0}^{n-1} (-1)^(n-j-1) C(n,j) (j+1)^(k(n-j)) a_k(j)`,
/// with `a_k(0) = 1`. Memoized per alphabet size.
pub fn acyclic_count(k: usize, n: usize) -> BigUint {
    let mut memo = ACYCLIC_MEMO.lock().unwrap();
    let row = memo.entry(k).or_insert_with(|| vec![BigUint::one()]);
    while row.len() <= n {
        let m = row.len();
        let mut sum = BigInt::zero();
        for (j, a_j) in row.iter().enumerate() {
            let term = BigInt::from(binomial(m, j as isize))
                * BigInt::from(j + 1).pow((k * (m - j)) as u32)
                * BigInt::from(a_j.clone());
            if (m - j - 1).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        row.push(sum.to_biguint().expect("acyclic count is nonnegative"));
    }
    row[n].clone()
}

/// Number of SAF automata with source 1 and sink `n+1`:
/// `b_k(n) = sum_{i=1}^{n} (-1)^(n-i) C(n-1,i-1) (i+1)^(k(n-i)) a_k(i)`.
pub fn single_source_count(k: usize, n: usize) -> Result<BigUint> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "single-source counting needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    let mut sum = BigInt::zero();
    for i in 1..=n {
        let term = BigInt::from(binomial(n - 1, (i - 1) as isize))
            * BigInt::from(i + 1).pow((k * (n - i)) as u32)
            * BigInt::from(acyclic_count(k, i));
        if (n - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum.to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative single-source count for k={k}, n={n}")))
}

/// Number of unlabeled SAF automata, `b_k(n) / (n-1)!`. Every relabeling
/// class has exactly `(n-1)!` members, so the division must be exact.
pub fn unlabeled_count(k: usize, n: usize) -> Result<BigUint> {
    let b = single_source_count(k, n)?;
    let f = factorial(n - 1);
    if !(&b % &f).is_zero() {
        return Err(Error::Internal(format!(
            "(n-1)! does not divide the single-source count for k={k}, n={n}"
        )));
    }
    Ok(b / f)
}

fn ensure_budget(k: usize, n: usize, budget: u64) -> Result<()> {
    let candidates = BigUint::from(n + 1).pow((k * n) as u32);
    if candidates > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: candidates.to_string(),
            budget,
        });
    }
    Ok(())
}

/// Backtracking search over bottom rows in lexicographic order. Prefixes are
/// pruned as soon as they place a self-loop, close a transient cycle, target
/// the source (single-source mode), or leave more interior vertices uncovered
/// than there are columns left.
struct BottomSearch {
    k: usize,
    n: usize,
    single_source: bool,
    bottom: Vec<usize>,
    filled: usize,
    incoming: Vec<usize>,
    missing: usize, // interior vertices with no incoming edge yet
    exhausted: bool,
    fresh: bool,
}

impl BottomSearch {
    fn new(k: usize, n: usize, single_source: bool) -> Self {
        Self {
            k,
            n,
            single_source,
            bottom: vec![0; k * n],
            filled: 0,
            incoming: vec![0; n + 2],
            missing: n - 1,
            exhausted: false,
            fresh: true,
        }
    }

    fn min_value(&self) -> usize {
        if self.single_source {
            2
        } else {
            1
        }
    }

    fn commit(&mut self, t: usize) {
        self.incoming[t] += 1;
        if t >= 2 && t <= self.n && self.incoming[t] == 1 {
            self.missing -= 1;
        }
    }

    fn uncommit(&mut self, t: usize) {
        self.incoming[t] -= 1;
        if t >= 2 && t <= self.n && self.incoming[t] == 0 {
            self.missing += 1;
        }
    }

    /// Is there a directed path `from ~> to` among the committed transient
    /// edges?
    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            let lo = (u - 1) * self.k;
            let hi = (u * self.k).min(self.filled);
            for pos in lo..hi.max(lo) {
                let v = self.bottom[pos];
                if v == to {
                    return true;
                }
                if v <= self.n && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    fn admissible(&self, pos: usize, t: usize) -> bool {
        let s = pos / self.k + 1;
        if t == s {
            return false; // self-loop
        }
        if t <= self.n && self.reaches(t, s) {
            return false; // would close a cycle
        }
        if self.single_source {
            let covers_new = t >= 2 && t <= self.n && self.incoming[t] == 0;
            let missing_after = self.missing - usize::from(covers_new);
            let remaining = self.k * self.n - pos - 1;
            if missing_after > remaining {
                return false; // cannot cover every interior vertex anymore
            }
        }
        true
    }

    /// Advance to the next complete valid row; returns false when exhausted.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let kn = self.k * self.n;
        let mut next_try;
        if self.fresh {
            self.fresh = false;
            next_try = self.min_value();
        } else {
            debug_assert_eq!(self.filled, kn);
            self.filled -= 1;
            let t = self.bottom[self.filled];
            self.uncommit(t);
            next_try = t + 1;
        }
        loop {
            let pos = self.filled;
            let mut placed = false;
            let mut t = next_try;
            while t <= self.n + 1 {
                if self.admissible(pos, t) {
                    self.bottom[pos] = t;
                    self.commit(t);
                    self.filled += 1;
                    placed = true;
                    break;
                }
                t += 1;
            }
            if placed {
                if self.filled == kn {
                    return true;
                }
                next_try = self.min_value();
            } else {
                if pos == 0 {
                    self.exhausted = true;
                    return false;
                }
                self.filled -= 1;
                let t = self.bottom[self.filled];
                self.uncommit(t);
                next_try = t + 1;
            }
        }
    }
}

/// Streaming enumeration of all SAF automata in `B_k(n)` in lexicographic
/// bottom-row order.
pub struct SafIter {
    search: BottomSearch,
}

impl Iterator for SafIter {
    type Item = TwoLineAutomaton;

    fn next(&mut self) -> Option<TwoLineAutomaton> {
        if !self.search.advance() {
            return None;
        }
        // rows produced by the search satisfy every invariant by construction
        Some(TwoLineAutomaton {
            k: self.search.k,
            n: self.search.n,
            bottom: self.search.bottom.clone(),
        })
    }
}

/// Enumerate `B_k(n)`, refusing when the raw candidate space `(n+1)^(kn)`
/// exceeds `budget`.
pub fn enumerate_saf(k: usize, n: usize, budget: u64) -> Result<SafIter> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    ensure_budget(k, n, budget)?;
    Ok(SafIter {
        search: BottomSearch::new(k, n, true),
    })
}

/// Streaming enumeration of canonical automata `C_k(n)`.
pub struct CanonicalIter {
    inner: SafIter,
}

impl Iterator for CanonicalIter {
    type Item = CanonicalAutomaton;

    fn next(&mut self) -> Option<CanonicalAutomaton> {
        for a in self.inner.by_ref() {
            if a.is_canonical() {
                return Some(CanonicalAutomaton { inner: a });
            }
        }
        None
    }
}

/// Enumerate the canonical representatives in `B_k(n)`, under the same
/// budget rule as [`enumerate_saf`].
pub fn enumerate_canonical(k: usize, n: usize, budget: u64) -> Result<CanonicalIter> {
    Ok(CanonicalIter {
        inner: enumerate_saf(k, n, budget)?,
    })
}

/// Count all acyclic automata of size `n` by direct search (no source or
/// incoming-edge conditions). Oracle counterpart of [`acyclic_count`].
pub fn acyclic_count_brute_force(k: usize, n: usize, budget: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "brute-force counting needs k >= 1".into(),
        ));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    ensure_budget(k, n, budget)?;
    let mut search = BottomSearch::new(k, n, false);
    let mut count: u64 = 0;
    while search.advance() {
        count += 1;
    }
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// The two-line automaton from the worked canonicalization example.
    fn example_b3_5() -> TwoLineAutomaton {
        TwoLineAutomaton::new(3, 5, vec![2, 4, 6, 6, 6, 6, 6, 6, 6, 3, 5, 3, 2, 2, 6]).unwrap()
    }

    #[test]
    fn acyclic_recurrence_values() {
        for k in 1..=4 {
            assert_eq!(acyclic_count(k, 0), u(1));
        }
        assert_eq!(acyclic_count(1, 1), u(1));
        assert_eq!(acyclic_count(2, 2), u(7));
        assert_eq!(acyclic_count(2, 3), u(142));
        assert_eq!(acyclic_count(1, 5), u(1296));
    }

    #[test]
    fn acyclic_count_matches_brute_force() {
        for k in 1..=3usize {
            for n in 0..=3usize {
                let bf = acyclic_count_brute_force(k, n, DEFAULT_ENUM_BUDGET).unwrap();
                assert_eq!(bf, acyclic_count(k, n), "k={k} n={n}");
            }
        }
        let bf = acyclic_count_brute_force(1, 4, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(bf, acyclic_count(1, 4));
    }

    #[test]
    fn single_source_values() {
        assert_eq!(single_source_count(2, 1).unwrap(), u(1));
        assert_eq!(single_source_count(2, 2).unwrap(), u(3));
        assert_eq!(single_source_count(2, 4).unwrap(), u(762));
        assert_eq!(single_source_count(3, 2).unwrap(), u(7));
        assert!(single_source_count(2, 0).is_err());
        assert!(single_source_count(0, 2).is_err());
    }

    #[test]
    fn unlabeled_sequence_two_letters() {
        let got: Vec<BigUint> = (1..=5).map(|n| unlabeled_count(2, n).unwrap()).collect();
        assert_eq!(got, vec![u(1), u(3), u(16), u(127), u(1363)]);
        assert!(unlabeled_count(2, 0).is_err());
    }

    #[test]
    fn malformed_inputs_are_distinguished_from_invalid_ones() {
        assert!(matches!(
            TwoLineAutomaton::new(2, 1, vec![2]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            TwoLineAutomaton::new(2, 1, vec![2, 3]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            TwoLineAutomaton::new(2, 1, vec![0, 2]),
            Err(Error::Malformed(_))
        ));
        // structurally fine, semantically broken
        let a = TwoLineAutomaton::new(2, 1, vec![1, 2]).unwrap();
        assert!(matches!(a.validate(), Err(Error::InvalidAutomaton(_))));
    }

    #[test]
    fn validate_examples() {
        let b = example_b3_5();
        assert!(b.validate().is_ok());
        assert!(b.is_single_source());

        let sink_only = TwoLineAutomaton::new(2, 1, vec![2, 2]).unwrap();
        assert!(sink_only.validate().is_ok());

        let two_cycle = TwoLineAutomaton::new(1, 2, vec![2, 1]).unwrap();
        let err = two_cycle.validate().unwrap_err();
        assert!(matches!(err, Error::InvalidAutomaton(ref msg) if msg.contains("cycle")));
    }

    #[test]
    fn enumerate_saf_small_cases() {
        let one: Vec<_> = enumerate_saf(2, 1, DEFAULT_ENUM_BUDGET).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].bottom(), &[2, 2]);

        let three: Vec<_> = enumerate_saf(2, 2, DEFAULT_ENUM_BUDGET).unwrap().collect();
        assert_eq!(three.len(), 3);
        // lexicographic order of bottom rows
        let bottoms: Vec<&[usize]> = three.iter().map(|a| a.bottom()).collect();
        assert_eq!(
            bottoms,
            vec![&[2, 2, 3, 3][..], &[2, 3, 3, 3], &[3, 2, 3, 3]]
        );

        let seven = enumerate_saf(3, 2, DEFAULT_ENUM_BUDGET).unwrap().count();
        assert_eq!(u(seven as u64), single_source_count(3, 2).unwrap());
    }

    #[test]
    fn enumeration_matches_prop1_counts() {
        for k in 1..=3usize {
            for n in 1..=3usize {
                let count = enumerate_saf(k, n, DEFAULT_ENUM_BUDGET).unwrap().count();
                assert_eq!(
                    u(count as u64),
                    single_source_count(k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
        let count = enumerate_saf(1, 4, DEFAULT_ENUM_BUDGET).unwrap().count();
        assert_eq!(u(count as u64), single_source_count(1, 4).unwrap());
    }

    #[test]
    fn enumeration_yields_valid_single_source_automata() {
        for a in enumerate_saf(2, 3, DEFAULT_ENUM_BUDGET).unwrap() {
            assert!(a.validate().is_ok());
            assert!(a.is_single_source());
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_saf(2, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            acyclic_count_brute_force(2, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn canonicalize_worked_example() {
        let b = example_b3_5();
        let canon = b.canonicalize().unwrap();
        assert_eq!(
            canon.as_automaton().bottom(),
            &[5, 2, 6, 4, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6]
        );
        assert!(!b.is_canonical());
        assert!(canon.as_automaton().is_canonical());
    }

    #[test]
    fn canonicalize_fixes_canonical_input() {
        let b = example_b3_5();
        let canon = b.canonicalize().unwrap().into_automaton();
        let again = canon.canonicalize().unwrap();
        assert_eq!(again.as_automaton(), &canon);

        let a = TwoLineAutomaton::new(2, 2, vec![3, 2, 3, 3]).unwrap();
        let c = a.canonicalize().unwrap();
        assert_eq!(c.as_automaton(), &a);
    }

    #[test]
    fn canonicalize_rejects_multi_source_input() {
        // vertex 2 has no incoming edge
        let a = TwoLineAutomaton::new(1, 2, vec![3, 3]).unwrap();
        assert!(a.validate().is_ok());
        assert!(!a.is_single_source());
        assert!(matches!(a.canonicalize(), Err(Error::NotSingleSource(_))));
    }

    #[test]
    fn canonical_counts() {
        let c1 = enumerate_canonical(2, 1, DEFAULT_ENUM_BUDGET)
            .unwrap()
            .count();
        assert_eq!(c1, 1);
        let c2 = enumerate_canonical(2, 2, DEFAULT_ENUM_BUDGET)
            .unwrap()
            .count();
        assert_eq!(c2, 3);
        let c3 = enumerate_canonical(2, 3, DEFAULT_ENUM_BUDGET)
            .unwrap()
            .count();
        assert_eq!(c3, 16);
    }

    #[test]
    fn canonicalize_is_constant_on_relabeling_orbits() {
        // every relabeling of an automaton canonicalizes to the same form
        let perms2: Vec<Vec<usize>> = vec![vec![2, 3], vec![3, 2]];
        for a in enumerate_saf(2, 3, DEFAULT_ENUM_BUDGET).unwrap() {
            let canon = a.canonicalize().unwrap();
            for p in &perms2 {
                let relabeled = a.relabel_interior(p).unwrap();
                assert_eq!(relabeled.canonicalize().unwrap(), canon);
            }
        }
    }

    #[test]
    fn relabel_rejects_non_bijections() {
        let a = TwoLineAutomaton::new(2, 3, vec![2, 3, 4, 4, 4, 4]).unwrap();
        assert!(a.relabel_interior(&[2, 2]).is_err());
        assert!(a.relabel_interior(&[2]).is_err());
        assert!(a.relabel_interior(&[1, 2]).is_err());
    }
}
