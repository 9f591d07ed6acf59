//! Subdiagonal lattice paths, their height codes, and column-marked paths.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// One lattice step: east `(1,0)` or north `(0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    N,
}

/// A path of `kn` east and `p` north steps from `(0,0)` to `(kn,p)` that
/// never rises above the line `y = x/k` (touching it is allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    k: usize,
    n: usize,
    p: usize,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(k: usize, n: usize, p: usize, steps: Vec<Step>) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "path parameters must satisfy k >= 1 and n >= 1, got k={k}, n={n}"
            )));
        }
        if p > n {
            return Err(Error::Malformed(format!(
                "p={p} exceeds n={n}; no such path exists"
            )));
        }
        let (mut x, mut y) = (0usize, 0usize);
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            if k * y > x {
                return Err(Error::Malformed(format!(
                    "step {} rises above y = x/{k} (reaches ({x},{y}))",
                    i + 1
                )));
            }
        }
        if x != k * n || y != p {
            return Err(Error::Malformed(format!(
                "path must end at ({},{p}), ends at ({x},{y})",
                k * n
            )));
        }
        Ok(Self { k, n, p, steps })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::E => 'E',
                Step::N => 'N',
            })
            .collect()
    }

    pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                other => Err(Error::Malformed(format!(
                    "unknown step character {other:?}"
                ))),
            })
            .collect()
    }
}

/// Number of subdiagonal `(k,n,p)`-paths by the generalized ballot formula
/// `(kn - kp + 1) / (kn + p + 1) * C(kn + p + 1, p)`. Empty for `p > n`,
/// which yields 0.
pub fn count_paths(k: usize, n: usize, p: usize) -> Result<BigUint> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "path counting needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    if p > n {
        return Ok(BigUint::zero());
    }
    let kn = k * n;
    let numerator = BigUint::from(kn - k * p + 1) * binomial(kn + p + 1, p as isize);
    let denominator = BigUint::from(kn + p + 1);
    if !(&numerator % &denominator).is_zero() {
        return Err(Error::Internal(format!(
            "ballot quotient is not an integer for k={k}, n={n}, p={p}"
        )));
    }
    Ok(numerator / denominator)
}

/// Streaming enumeration of subdiagonal `(k,n,p)`-paths in lexicographic
/// step order with `E < N`.
pub struct PathIter {
    k: usize,
    n: usize,
    p: usize,
    steps: Vec<Step>,
    filled: usize,
    x: usize,
    y: usize,
    exhausted: bool,
    fresh: bool,
}

impl PathIter {
    fn admissible(&self, s: Step) -> bool {
        match s {
            Step::E => self.x < self.k * self.n,
            Step::N => self.y < self.p && self.k * (self.y + 1) <= self.x,
        }
    }

    fn commit(&mut self, s: Step) {
        self.steps[self.filled] = s;
        match s {
            Step::E => self.x += 1,
            Step::N => self.y += 1,
        }
        self.filled += 1;
    }

    fn uncommit(&mut self) -> Step {
        self.filled -= 1;
        let s = self.steps[self.filled];
        match s {
            Step::E => self.x -= 1,
            Step::N => self.y -= 1,
        }
        s
    }

    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let total = self.k * self.n + self.p;
        let mut from_n; // whether the next attempt at the current position starts at N
        if self.fresh {
            self.fresh = false;
            if total == 0 {
                self.exhausted = true;
                return false;
            }
            from_n = false;
        } else {
            debug_assert_eq!(self.filled, total);
            loop {
                if self.filled == 0 {
                    self.exhausted = true;
                    return false;
                }
                if self.uncommit() == Step::E {
                    break;
                }
            }
            from_n = true;
        }
        loop {
            let placed = if !from_n && self.admissible(Step::E) {
                self.commit(Step::E);
                true
            } else if self.admissible(Step::N) {
                self.commit(Step::N);
                true
            } else {
                false
            };
            if placed {
                if self.filled == total {
                    return true;
                }
                from_n = false;
            } else {
                loop {
                    if self.filled == 0 {
                        self.exhausted = true;
                        return false;
                    }
                    if self.uncommit() == Step::E {
                        break;
                    }
                }
                from_n = true;
            }
        }
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if !self.advance() {
            return None;
        }
        Some(LatticePath {
            k: self.k,
            n: self.n,
            p: self.p,
            steps: self.steps.clone(),
        })
    }
}

/// Enumerate subdiagonal `(k,n,p)`-paths; refuses when the number of E/N
/// interleavings `C(kn+p, p)` exceeds `budget`. Empty for `p > n`.
pub fn enumerate_paths(k: usize, n: usize, p: usize, budget: u64) -> Result<PathIter> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "path enumeration needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    let interleavings = binomial(k * n + p, p as isize);
    if interleavings > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: interleavings.to_string(),
            budget,
        });
    }
    Ok(PathIter {
        k,
        n,
        p: if p > n { 0 } else { p }, // p > n: no endpoint is reachable anyway
        steps: vec![Step::E; k * n + if p > n { 0 } else { p }],
        filled: 0,
        x: 0,
        y: 0,
        exhausted: p > n,
        fresh: true,
    })
}

/// Heights of the east steps of a `(k,n,n)`-path above `y = -1`: a weakly
/// increasing sequence with `b_i <= ceil(i/k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCode {
    k: usize,
    heights: Vec<usize>,
}

impl PathCode {
    pub fn new(k: usize, heights: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("path codes need k >= 1".into()));
        }
        if heights.is_empty() || !heights.len().is_multiple_of(k) {
            return Err(Error::Malformed(format!(
                "a code for alphabet parameter {k} must have positive length divisible by {k}"
            )));
        }
        let mut prev = 1;
        for (i, &b) in heights.iter().enumerate() {
            let cap = (i + 1).div_ceil(k);
            if b < prev {
                return Err(Error::Malformed(format!(
                    "heights must be weakly increasing; b_{} = {b} < {prev}",
                    i + 1
                )));
            }
            if b > cap {
                return Err(Error::Malformed(format!(
                    "b_{} = {b} exceeds ceil({}/{k}) = {cap}",
                    i + 1,
                    i + 1
                )));
            }
            prev = b;
        }
        Ok(Self { k, heights })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.heights.len() / self.k
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Product of the heights: the number of column markings of the
    /// underlying path.
    pub fn marking_count(&self) -> BigUint {
        self.heights.iter().fold(BigUint::one(), |acc, &b| acc * b)
    }
}

/// Code a `(k,n,n)`-path by the heights of its east steps. Rejects `p != n`.
pub fn path_to_code(path: &LatticePath) -> Result<PathCode> {
    if path.p() != path.n() {
        return Err(Error::InvalidParameter(format!(
            "codes are defined for p = n; got p={}, n={}",
            path.p(),
            path.n()
        )));
    }
    let mut heights = Vec::with_capacity(path.k() * path.n());
    let mut y = 0usize;
    for &s in path.steps() {
        match s {
            Step::N => y += 1,
            Step::E => heights.push(y + 1),
        }
    }
    Ok(PathCode {
        k: path.k(),
        heights,
    })
}

/// Rebuild the unique path with the given east-step heights.
pub fn code_to_path(code: &PathCode) -> LatticePath {
    let (k, n) = (code.k(), code.n());
    let mut steps = Vec::with_capacity(k * n + n);
    let mut y = 0usize;
    for &b in code.heights() {
        while y + 1 < b {
            steps.push(Step::N);
            y += 1;
        }
        steps.push(Step::E);
    }
    while y < n {
        steps.push(Step::N);
        y += 1;
    }
    LatticePath::new(k, n, n, steps).expect("a valid code always rebuilds a valid path")
}

/// Lexicographic stream of all `(k,n,n)` path codes.
pub struct CodeIter {
    k: usize,
    n: usize,
    heights: Vec<usize>,
    filled: usize,
    exhausted: bool,
    fresh: bool,
}

impl CodeIter {
    fn new(k: usize, n: usize) -> Self {
        Self {
            k,
            n,
            heights: vec![0; k * n],
            filled: 0,
            exhausted: false,
            fresh: true,
        }
    }

    fn cap(&self, pos: usize) -> usize {
        (pos + 1).div_ceil(self.k)
    }

    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let len = self.k * self.n;
        let mut next_try;
        if self.fresh {
            self.fresh = false;
            next_try = 1;
        } else {
            debug_assert_eq!(self.filled, len);
            self.filled -= 1;
            next_try = self.heights[self.filled] + 1;
        }
        loop {
            let pos = self.filled;
            let floor = if pos == 0 { 1 } else { self.heights[pos - 1] };
            let b = next_try.max(floor);
            if b <= self.cap(pos) {
                self.heights[pos] = b;
                self.filled += 1;
                if self.filled == len {
                    return true;
                }
                next_try = 1;
            } else {
                if pos == 0 {
                    self.exhausted = true;
                    return false;
                }
                self.filled -= 1;
                next_try = self.heights[self.filled] + 1;
            }
        }
    }
}

impl Iterator for CodeIter {
    type Item = PathCode;

    fn next(&mut self) -> Option<PathCode> {
        if !self.advance() {
            return None;
        }
        Some(PathCode {
            k: self.k,
            heights: self.heights.clone(),
        })
    }
}

/// All `(k,n,n)` path codes in lexicographic order (unbudgeted; the caller
/// bounds the range).
pub fn enumerate_codes(k: usize, n: usize) -> Result<CodeIter> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "code enumeration needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    Ok(CodeIter::new(k, n))
}

/// A column-marked `(k,n,n)`-path: pairs `(a_i, b_i)` where `b` is the path
/// code and `a_i` in `[1, b_i]` marks one square in column `i` between the
/// path and `y = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPathCode {
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl MarkedPathCode {
    pub fn new(k: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let heights: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
        PathCode::new(k, heights)?;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a < 1 || a > b {
                return Err(Error::Malformed(format!(
                    "mark a_{} = {a} must lie in [1, {b}]",
                    i + 1
                )));
            }
        }
        Ok(Self { k, pairs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.pairs.len() / self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn code(&self) -> PathCode {
        PathCode {
            k: self.k,
            heights: self.pairs.iter().map(|&(_, b)| b).collect(),
        }
    }
}

/// Number of column-marked `(k,n,n)`-paths: the sum of `b_1 b_2 ... b_kn`
/// over all path codes. There is no closed form; the sum is evaluated by
/// iterating over codes.
pub fn marked_count(k: usize, n: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for code in enumerate_codes(k, n)? {
        total += code.marking_count();
    }
    Ok(total)
}

/// Number of column-marked `(k,n,p)`-paths for arbitrary `p`: each east step
/// at height `y` admits `y + 1` mark positions, so the count is the sum over
/// paths of that product. Agrees with [`marked_count`] at `p = n`; for
/// `p < n` there is no height code, so paths are enumerated directly.
pub fn marked_count_general(k: usize, n: usize, p: usize, budget: u64) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for path in enumerate_paths(k, n, p, budget)? {
        let mut product = BigUint::one();
        let mut y = 0usize;
        for &s in path.steps() {
            match s {
                Step::N => y += 1,
                Step::E => product *= y + 1,
            }
        }
        total += product;
    }
    Ok(total)
}

/// Stream of all column-marked codes, lexicographic by (heights, marks).
pub struct MarkedCodeIter {
    codes: CodeIter,
    current: Option<PathCode>,
    marks: Vec<usize>,
    fresh_marks: bool,
}

impl Iterator for MarkedCodeIter {
    type Item = MarkedPathCode;

    fn next(&mut self) -> Option<MarkedPathCode> {
        loop {
            if self.current.is_none() {
                let code = self.codes.next()?;
                self.marks = vec![1; code.heights().len()];
                self.fresh_marks = true;
                self.current = Some(code);
            }
            let code = self.current.as_ref().unwrap();
            if self.fresh_marks {
                self.fresh_marks = false;
            } else {
                // odometer over the marks, last column fastest
                let mut pos = self.marks.len();
                let mut advanced = false;
                while pos > 0 {
                    pos -= 1;
                    if self.marks[pos] < code.heights()[pos] {
                        self.marks[pos] += 1;
                        for m in &mut self.marks[pos + 1..] {
                            *m = 1;
                        }
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    self.current = None;
                    continue; // markings of this code exhausted; fetch the next code
                }
            }
            let code = self.current.as_ref().unwrap();
            let pairs: Vec<(usize, usize)> = self
                .marks
                .iter()
                .zip(code.heights())
                .map(|(&a, &b)| (a, b))
                .collect();
            return Some(MarkedPathCode { k: code.k(), pairs });
        }
    }
}

/// Enumerate `C*_k(n,n)`; refuses when the number of marked paths exceeds
/// `budget` (checked via the ballot formula before any enumeration work).
pub fn enumerate_marked_codes(k: usize, n: usize, budget: u64) -> Result<MarkedCodeIter> {
    let code_count = count_paths(k, n, n)?;
    if code_count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: code_count.to_string(),
            budget,
        });
    }
    let total = marked_count(k, n)?;
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: total.to_string(),
            budget,
        });
    }
    Ok(MarkedCodeIter {
        codes: CodeIter::new(k, n),
        current: None,
        marks: Vec::new(),
        fresh_marks: true,
    })
}
