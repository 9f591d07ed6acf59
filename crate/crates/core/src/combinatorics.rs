//! Exact integer primitives: Stirling cycle numbers, binomials, factorials,
//! padded compositions, and permutations in standard cycle form.

use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Memoized Stirling cycle triangle. Rows are grown on demand and never
/// evicted; every entry is exact.
static TRIANGLE: LazyLock<Mutex<Vec<Vec<BigUint>>>> =
    LazyLock::new(|| Mutex::new(vec![vec![BigUint::one()]]));

/// Stirling cycle number: the number of permutations of `[i]` with exactly
/// `j` cycles. Out-of-range `j` (negative, `j > i`, or `j = 0` with `i > 0`)
/// yields 0, matching the convention that matrix entries vanish there.
pub fn stirling_cycle(i: usize, j: isize) -> BigUint {
    if j < 0 || (j as usize) > i {
        return BigUint::zero();
    }
    let j = j as usize;
    let mut rows = TRIANGLE.lock().unwrap();
    while rows.len() <= i {
        let m = rows.len();
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(m + 1);
        for c in 0..=m {
            // [m, c] = [m-1, c-1] + (m-1) * [m-1, c]
            let mut v = if c >= 1 {
                prev.get(c - 1).cloned().unwrap_or_default()
            } else {
                BigUint::zero()
            };
            if let Some(same) = prev.get(c) {
                v += same * (m - 1);
            }
            row.push(v);
        }
        rows.push(row);
    }
    rows[i][j].clone()
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, t| acc * t)
}

/// Exact binomial coefficient; 0 when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || (k as usize) > n {
        return BigUint::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigUint::one();
    for t in 1..=k {
        // running value is C(n-k+t, t), so the division is exact
        acc = acc * (n - k + t) / t;
    }
    acc
}

/// A composition of `n` written in `n` slots: each part `c >= 1` is
/// immediately followed by exactly `c - 1` zeros, and the parts sum to `n`.
/// Deleting the zeros recovers an ordinary composition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaddedComposition {
    parts: Vec<usize>,
}

impl PaddedComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let n = parts.len();
        if n == 0 {
            return Err(Error::Malformed(
                "padded composition must be nonempty".into(),
            ));
        }
        if parts.iter().sum::<usize>() != n {
            return Err(Error::Malformed(format!(
                "entries must sum to the length {n}, got {}",
                parts.iter().sum::<usize>()
            )));
        }
        let mut i = 0;
        while i < n {
            let c = parts[i];
            if c == 0 {
                return Err(Error::Malformed(format!(
                    "zero at position {} is not covered by a preceding part",
                    i + 1
                )));
            }
            for z in 1..c {
                if i + z >= n || parts[i + z] != 0 {
                    return Err(Error::Malformed(format!(
                        "part {c} at position {} must be followed by exactly {} zeros",
                        i + 1,
                        c - 1
                    )));
                }
            }
            i += c;
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn zero_count(&self) -> usize {
        self.parts.iter().filter(|&&c| c == 0).count()
    }

    /// Whether `c_i <= i` holds for every position (1-based).
    pub fn is_restricted(&self) -> bool {
        self.parts.iter().enumerate().all(|(i, &c)| c <= i + 1)
    }

    /// The underlying ordinary composition.
    pub fn delete_zeros(&self) -> Vec<usize> {
        self.parts.iter().copied().filter(|&c| c != 0).collect()
    }

    /// Re-pad an ordinary composition.
    pub fn from_composition(comp: &[usize]) -> Result<Self> {
        if comp.contains(&0) {
            return Err(Error::Malformed(
                "composition parts must be positive".into(),
            ));
        }
        let n: usize = comp.iter().sum();
        let mut parts = Vec::with_capacity(n);
        for &c in comp {
            parts.push(c);
            parts.extend(std::iter::repeat_n(0, c - 1));
        }
        Self::new(parts)
    }
}

/// All padded compositions of `n` in lexicographic order; with
/// `restricted = true`, only those with `c_i <= i` for all `i`.
pub fn padded_compositions(n: usize, restricted: bool) -> Vec<PaddedComposition> {
    assert!(n >= 1, "padded compositions need n >= 1");
    fn rec(
        parts: &mut Vec<usize>,
        pos: usize,
        n: usize,
        restricted: bool,
        out: &mut Vec<PaddedComposition>,
    ) {
        if pos == n {
            out.push(PaddedComposition {
                parts: parts.clone(),
            });
            return;
        }
        // the prefix covers `pos` slots and sums to `pos`
        let mut max_part = n - pos;
        if restricted {
            max_part = max_part.min(pos + 1);
        }
        for c in 1..=max_part {
            parts[pos] = c;
            for z in 1..c {
                parts[pos + z] = 0;
            }
            rec(parts, pos + c, n, restricted, out);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], 0, n, restricted, &mut out);
    out
}

/// A permutation of `[m]` held in standard cycle form: each cycle starts
/// with its smallest element and cycle leaders increase left to right.
/// Singleton cycles are stored explicitly; display hides them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePermutation {
    size: usize,
    cycles: Vec<Vec<usize>>,
}

impl CyclePermutation {
    pub fn identity(size: usize) -> Self {
        Self {
            size,
            cycles: (1..=size).map(|x| vec![x]).collect(),
        }
    }

    /// Standard cycle form of a permutation given in one-line notation
    /// (`images[i]` is the image of `i + 1`). Rejects non-bijections.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m == 0 {
            return Err(Error::Malformed("permutation must be nonempty".into()));
        }
        let mut seen = vec![false; m + 1];
        for &v in images {
            if v < 1 || v > m {
                return Err(Error::Malformed(format!(
                    "image {v} out of range for [{m}]"
                )));
            }
            if seen[v] {
                return Err(Error::Malformed(format!(
                    "image {v} repeated; not a bijection"
                )));
            }
            seen[v] = true;
        }
        // starting each cycle at the smallest unvisited element produces
        // standard form directly
        let mut visited = vec![false; m + 1];
        let mut cycles = Vec::new();
        for start in 1..=m {
            if visited[start] {
                continue;
            }
            let mut cyc = vec![start];
            visited[start] = true;
            let mut x = images[start - 1];
            while x != start {
                cyc.push(x);
                visited[x] = true;
                x = images[x - 1];
            }
            cycles.push(cyc);
        }
        Ok(Self { size: m, cycles })
    }

    /// Build from explicit cycles (singletons may be omitted); normalizes to
    /// standard form.
    pub fn from_cycles(size: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=size).collect();
        let mut moved = vec![false; size + 1];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x < 1 || x > size {
                    return Err(Error::Malformed(format!(
                        "cycle element {x} out of range for [{size}]"
                    )));
                }
                if moved[x] {
                    return Err(Error::Malformed(format!(
                        "element {x} appears in two cycles"
                    )));
                }
                moved[x] = true;
                images[x - 1] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::from_one_line(&images)
    }

    pub fn transposition(size: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Malformed(
                "transposition needs two distinct elements".into(),
            ));
        }
        Self::from_cycles(size, &[vec![a, b]])
    }

    /// Parse `"(1 5 4)(3 6)"` or `"e"` as a permutation of `[size]`.
    pub fn parse(s: &str, size: usize) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Self::identity(size));
        }
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(Error::Malformed(format!("cannot parse permutation {s:?}")));
        }
        let mut cycles = Vec::new();
        for chunk in s[1..s.len() - 1].split(")(") {
            let cyc: Vec<usize> = chunk
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("bad cycle element {t:?}")))
                })
                .collect::<Result<_>>()?;
            if cyc.is_empty() {
                return Err(Error::Malformed("empty cycle".into()));
            }
            cycles.push(cyc);
        }
        Self::from_cycles(size, &cycles)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn one_line(&self) -> Vec<usize> {
        let mut images: Vec<usize> = (1..=self.size).collect();
        for cyc in &self.cycles {
            for (i, &x) in cyc.iter().enumerate() {
                images[x - 1] = cyc[(i + 1) % cyc.len()];
            }
        }
        images
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Entries that do not start their cycle; the count is 0 exactly for the
    /// identity.
    pub fn nonfirst_count(&self) -> usize {
        self.size - self.cycles.len()
    }

    pub fn nonfirst_entries(&self) -> Vec<usize> {
        self.cycles
            .iter()
            .flat_map(|c| c[1..].iter().copied())
            .collect()
    }

    pub fn max_nonfirst(&self) -> Option<usize> {
        self.nonfirst_entries().into_iter().max()
    }

    pub fn is_identity(&self) -> bool {
        self.nonfirst_count() == 0
    }

    /// `Some((a, b))` with `a < b` when the permutation is a single
    /// transposition (all other cycles singletons).
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let mut pair = None;
        for cyc in &self.cycles {
            match cyc.len() {
                1 => {}
                2 if pair.is_none() => pair = Some((cyc[0], cyc[1])),
                _ => return None,
            }
        }
        pair
    }

    /// The element immediately preceding `x` within its cycle; `None` when
    /// `x` starts its cycle (in particular for singletons).
    pub fn predecessor_in_cycle(&self, x: usize) -> Option<usize> {
        for cyc in &self.cycles {
            if let Some(i) = cyc.iter().position(|&y| y == x) {
                return if i == 0 { None } else { Some(cyc[i - 1]) };
            }
        }
        None
    }

    /// Sign of the permutation: `(-1)` to the number of nonfirst entries.
    pub fn sign(&self) -> i32 {
        if self.nonfirst_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Remove `x` from its cycle, turning it into a singleton.
    pub fn erase_to_singleton(&self, x: usize) -> Self {
        let mut images = self.one_line();
        if images[x - 1] != x {
            // predecessor of x now maps to x's old image
            let pred = images.iter().position(|&y| y == x).unwrap();
            images[pred] = images[x - 1];
            images[x - 1] = x;
        }
        Self::from_one_line(&images).expect("erasing an element preserves bijectivity")
    }

    /// Insert `b` (currently a fixed point) immediately after `a` in `a`'s
    /// cycle.
    pub fn insert_after(&self, a: usize, b: usize) -> Result<Self> {
        let mut images = self.one_line();
        if a == b || a > self.size || b > self.size || a == 0 || b == 0 {
            return Err(Error::Malformed(format!("cannot insert {b} after {a}")));
        }
        if images[b - 1] != b {
            return Err(Error::Malformed(format!(
                "{b} is not a singleton; cannot insert it"
            )));
        }
        images[b - 1] = images[a - 1];
        images[a - 1] = b;
        Self::from_one_line(&images)
    }

    /// Re-embed into `[new_size]`: grow with fixed points, or shrink when
    /// every dropped element is a fixed point.
    pub fn resized(&self, new_size: usize) -> Result<Self> {
        let mut images = self.one_line();
        if new_size >= self.size {
            images.extend(self.size + 1..=new_size);
        } else {
            for x in new_size + 1..=self.size {
                if images[x - 1] != x {
                    return Err(Error::Malformed(format!(
                        "cannot shrink to [{new_size}]: {x} is not a fixed point"
                    )));
                }
            }
            images.truncate(new_size);
        }
        Self::from_one_line(&images)
    }
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        for cyc in &self.cycles {
            if cyc.len() == 1 {
                continue;
            }
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The unique permutation coded by a padded composition via
/// `c_i = sigma(i) - (i - 1)`; its nonzero parts are the cycle lengths.
pub fn perm_from_code(code: &PaddedComposition) -> CyclePermutation {
    let images: Vec<usize> = code
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &c)| c + i) // sigma(i+1) = c + (i+1) - 1
        .collect();
    CyclePermutation::from_one_line(&images)
        .expect("a padded composition always codes a permutation")
}

/// Standard cycle form of a one-line permutation.
pub fn standard_cycle_form(one_line: &[usize]) -> Result<CyclePermutation> {
    CyclePermutation::from_one_line(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All permutations of [m] in lexicographic one-line order.
    fn all_perms(m: usize) -> Vec<Vec<usize>> {
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
        let mut out = Vec::new();
        rec(m, &mut Vec::new(), &mut vec![false; m + 1], &mut out);
        out
    }

    fn cycle_count_brute(images: &[usize]) -> usize {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        let mut count = 0;
        for s in 1..=m {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = images[x - 1];
            }
        }
        count
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling_cycle(4, 2), BigUint::from(11u32));
        assert_eq!(stirling_cycle(5, 3), BigUint::from(35u32));
        for n in 0..=8 {
            assert_eq!(stirling_cycle(n, n as isize), BigUint::one());
        }
        assert_eq!(stirling_cycle(3, -1), BigUint::zero());
        assert_eq!(stirling_cycle(3, 4), BigUint::zero());
        assert_eq!(stirling_cycle(3, 0), BigUint::zero());
        assert_eq!(stirling_cycle(0, 0), BigUint::one());
    }

    #[test]
    fn stirling_row_sums_are_factorials() {
        for i in 0..=9 {
            let sum: BigUint = (0..=i).map(|j| stirling_cycle(i, j as isize)).sum();
            assert_eq!(sum, factorial(i), "row {i}");
        }
    }

    #[test]
    fn stirling_matches_brute_force_cycle_counts() {
        for m in 1..=8 {
            let mut counts = vec![0u64; m + 1];
            for p in all_perms(m) {
                counts[cycle_count_brute(&p)] += 1;
            }
            for (j, &c) in counts.iter().enumerate() {
                assert_eq!(stirling_cycle(m, j as isize), BigUint::from(c), "[{m},{j}]");
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(
            binomial(12, 3),
            factorial(12) / (factorial(3) * factorial(9))
        );
        assert_eq!(binomial(12, 3), BigUint::from(220u32));
        for n in 0..6 {
            assert_eq!(binomial(n, 0), BigUint::one());
        }
        assert_eq!(binomial(4, -1), BigUint::zero());
        assert_eq!(binomial(4, 5), BigUint::zero());
    }

    #[test]
    fn padded_compositions_n3() {
        let got: Vec<Vec<usize>> = padded_compositions(3, false)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![1, 1, 1], vec![1, 2, 0], vec![2, 0, 1], vec![3, 0, 0]]
        );
        // c_1 <= 1 already kills every composition not starting with 1
        let restricted: Vec<Vec<usize>> = padded_compositions(3, true)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(restricted, vec![vec![1, 1, 1], vec![1, 2, 0]]);
    }

    #[test]
    fn padded_compositions_counts_and_example() {
        for n in 1..=12 {
            assert_eq!(padded_compositions(n, false).len(), 1 << (n - 1), "n={n}");
        }
        let n6: Vec<Vec<usize>> = padded_compositions(6, false)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert!(n6.contains(&vec![3, 0, 0, 1, 2, 0]));
        // counts of the restricted family, frozen from the brute-force filter
        let restricted_counts: Vec<usize> = (1..=6)
            .map(|n| padded_compositions(n, true).len())
            .collect();
        assert_eq!(restricted_counts, vec![1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn padded_compositions_match_brute_force_filter() {
        // filter all of {0..n}^n against the four defining conditions
        for n in 1..=6usize {
            let mut expected = Vec::new();
            let total = (n + 1).pow(n as u32);
            for mut code in 0..total {
                let mut parts = Vec::with_capacity(n);
                for _ in 0..n {
                    parts.push(code % (n + 1));
                    code /= n + 1;
                }
                if PaddedComposition::new(parts.clone()).is_ok() {
                    expected.push(parts);
                }
            }
            expected.sort();
            let got: Vec<Vec<usize>> = padded_compositions(n, false)
                .iter()
                .map(|c| c.parts().to_vec())
                .collect();
            assert_eq!(got, expected, "n={n}");
        }
    }

    #[test]
    fn zero_deletion_is_a_bijection_onto_compositions() {
        for n in 1..=10usize {
            let padded = padded_compositions(n, false);
            let mut comps: Vec<Vec<usize>> = padded.iter().map(|c| c.delete_zeros()).collect();
            comps.sort();
            comps.dedup();
            assert_eq!(comps.len(), padded.len(), "n={n}");
            for c in &padded {
                let back = PaddedComposition::from_composition(&c.delete_zeros()).unwrap();
                assert_eq!(&back, c);
            }
        }
    }

    #[test]
    fn padded_composition_rejections() {
        assert!(PaddedComposition::new(vec![]).is_err());
        assert!(PaddedComposition::new(vec![0, 1]).is_err()); // zero not covered
        assert!(PaddedComposition::new(vec![1, 0, 2]).is_err()); // zero after a 1
        assert!(PaddedComposition::new(vec![2, 1, 0]).is_err()); // zeros in wrong place
        assert!(PaddedComposition::new(vec![2, 0, 0]).is_err()); // sum != length
        assert!(PaddedComposition::new(vec![3, 0]).is_err()); // runs past the end
    }

    #[test]
    fn perm_from_code_examples() {
        let id = perm_from_code(&PaddedComposition::new(vec![1, 1, 1]).unwrap());
        assert!(id.is_identity());
        assert_eq!(id.cycle_count(), 3);
        assert_eq!(id.sign(), 1);

        let t = perm_from_code(&PaddedComposition::new(vec![2, 0, 1]).unwrap());
        assert_eq!(t.one_line(), vec![2, 1, 3]);
        assert_eq!(t.as_transposition(), Some((1, 2)));
        assert_eq!(t.sign(), -1);

        let c = perm_from_code(&PaddedComposition::new(vec![3, 0, 0]).unwrap());
        assert_eq!(c.cycle_count(), 1);
        assert_eq!(c.sign(), 1);
        assert_eq!(c.one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn perm_code_round_trip_and_sign_parity() {
        // every permutation with sigma(i) >= i - 1 is coded by a padded
        // composition; the sign rule matches inversion parity
        for m in 1..=7usize {
            for images in all_perms(m) {
                if images.iter().enumerate().any(|(i, &v)| v + 1 < i + 1) {
                    continue; // sigma(i) < i - 1
                }
                let code: Vec<usize> = images.iter().enumerate().map(|(i, &v)| v - i).collect();
                let pc = PaddedComposition::new(code).unwrap();
                let perm = perm_from_code(&pc);
                assert_eq!(perm.one_line(), images);

                let inversions = (0..m)
                    .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                    .filter(|&(i, j)| images[i] > images[j])
                    .count();
                let parity_sign = if inversions % 2 == 0 { 1 } else { -1 };
                assert_eq!(perm.sign(), parity_sign);
                assert_eq!(pc.zero_count() % 2, inversions % 2);
            }
        }
    }

    #[test]
    fn standard_cycle_form_examples() {
        let p = standard_cycle_form(&[5, 2, 6, 1, 4, 3]).unwrap();
        assert_eq!(p.cycles(), &[vec![1, 5, 4], vec![2], vec![3, 6]]);
        assert_eq!(p.nonfirst_entries(), vec![5, 4, 6]);
        assert_eq!(p.nonfirst_count(), 3);
        assert_eq!(p.to_string(), "(1 5 4)(3 6)");

        let id = standard_cycle_form(&[1, 2, 3, 4]).unwrap();
        assert_eq!(id.cycle_count(), 4);
        assert_eq!(id.nonfirst_count(), 0);
        assert_eq!(id.to_string(), "e");

        let t = standard_cycle_form(&[2, 1]).unwrap();
        assert_eq!(t.cycles(), &[vec![1, 2]]);
        assert_eq!(t.nonfirst_count(), 1);
    }

    #[test]
    fn cycle_form_rejects_non_bijections() {
        assert!(standard_cycle_form(&[1, 1]).is_err());
        assert!(standard_cycle_form(&[0, 1]).is_err());
        assert!(standard_cycle_form(&[3, 1]).is_err());
        assert!(standard_cycle_form(&[]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = CyclePermutation::parse("(1 4)(2 5 3)", 5).unwrap();
        assert_eq!(p.one_line(), vec![4, 5, 2, 1, 3]);
        assert_eq!(p.to_string(), "(1 4)(2 5 3)");
        assert_eq!(
            CyclePermutation::parse("e", 4).unwrap(),
            CyclePermutation::identity(4)
        );
        assert!(CyclePermutation::parse("(1 2", 3).is_err());
        assert!(CyclePermutation::parse("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn cycle_surgery() {
        let p = CyclePermutation::parse("(1 4)(2 5 3)", 5).unwrap();
        assert_eq!(p.max_nonfirst(), Some(5));
        assert_eq!(p.predecessor_in_cycle(5), Some(2));
        let erased = p.erase_to_singleton(5);
        assert_eq!(erased.to_string(), "(1 4)(2 3)");
        let back = erased.insert_after(2, 5).unwrap();
        assert_eq!(back, p);
        let grown = erased.resized(6).unwrap();
        assert_eq!(grown.size(), 6);
        assert_eq!(grown.to_string(), "(1 4)(2 3)");
        assert!(grown.resized(3).is_err()); // 4 is not a fixed point
    }
}
