//! The bijection between column-marked subdiagonal `(k,n,n)`-paths and
//! canonical SAF automata on a `(k+1)`-letter alphabet, in both directions.

use crate::automata::{CanonicalAutomaton, TwoLineAutomaton};
use crate::error::{Error, Result};
use crate::paths::{code_to_path, path_to_code, LatticePath, MarkedPathCode, Step};

/// Intermediate quantities of one application of the map, for debugging and
/// the CLI's `--trace` flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    /// Positions (1-based) in the bottom row that receive the last
    /// occurrences of `2, 3, ..., n`; strictly increasing.
    pub circled_positions: Vec<usize>,
    /// Squares between each column's mark and the path, inclusive;
    /// last column first.
    pub square_counts: Vec<usize>,
    /// The completed bottom row.
    pub blank_fill: Vec<usize>,
}

/// Positions that receive the boldface last occurrences: the number of steps
/// following the second-last, third-last, ... north step of the path.
fn circled_positions(k: usize, n: usize, path: &LatticePath) -> Result<Vec<usize>> {
    let total = path.steps().len();
    let north_positions: Vec<usize> = path
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::N)
        .map(|(i, _)| i + 1)
        .collect();
    debug_assert_eq!(north_positions.len(), n);
    let mut circled = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..n {
        // the (j+1)-th north step from the end
        let pos = north_positions[n - 1 - j];
        circled.push(total - pos);
    }
    for (j, &i_j) in circled.iter().enumerate() {
        let bound = (k + 1) * (j + 1);
        if i_j > bound {
            return Err(Error::Internal(format!(
                "circled position {i_j} exceeds its bound {bound}"
            )));
        }
        if j > 0 && circled[j - 1] >= i_j {
            return Err(Error::Internal(
                "circled positions are not increasing".into(),
            ));
        }
    }
    Ok(circled)
}

fn build_automaton(code: &MarkedPathCode) -> Result<(CanonicalAutomaton, BijectionTrace)> {
    let (k, n) = (code.k(), code.n());
    let kn = k * n;
    let path = code_to_path(&code.code());
    let circled = circled_positions(k, n, &path)?;

    let width = (k + 1) * n;
    let mut bottom = vec![0usize; width];
    for (j, &pos) in circled.iter().enumerate() {
        bottom[pos - 1] = j + 2; // boldface 2, 3, ..., n
    }

    // squares from the mark up to the path, inclusive; columns scanned last
    // to first, consumed left to right over the blanks
    let square_counts: Vec<usize> = code.pairs().iter().rev().map(|&(a, b)| b - a + 1).collect();

    let mut base = 1usize; // nearest boldface value to the left, else 1
    let mut next_count = square_counts.iter();
    let mut blanks_filled = 0usize;
    for (pos, slot) in bottom.iter_mut().enumerate() {
        if *slot != 0 {
            base = *slot;
            continue;
        }
        blanks_filled += 1;
        if blanks_filled == kn + 1 {
            // the final blank receives the sink label
            *slot = n + 1;
        } else {
            let count = next_count
                .next()
                .expect("one square count per non-final blank");
            let value = base + count;
            if value > n + 1 {
                return Err(Error::Internal(format!(
                    "fill at column {} produced {value}, beyond the sink label {}",
                    pos + 1,
                    n + 1
                )));
            }
            *slot = value;
        }
    }
    debug_assert_eq!(blanks_filled, kn + 1);

    let automaton = TwoLineAutomaton::new(k + 1, n, bottom.clone())
        .map_err(|e| Error::Internal(format!("bijection produced a malformed row: {e}")))?;
    let canonical = CanonicalAutomaton::new(automaton)
        .map_err(|e| Error::Internal(format!("bijection output is not canonical: {e}")))?;
    Ok((
        canonical,
        BijectionTrace {
            circled_positions: circled,
            square_counts,
            blank_fill: bottom,
        },
    ))
}

/// Map a column-marked `(k,n,n)`-path to its canonical automaton on `k+1`
/// letters.
pub fn path_to_automaton(code: &MarkedPathCode) -> Result<CanonicalAutomaton> {
    Ok(build_automaton(code)?.0)
}

/// As [`path_to_automaton`], also returning the intermediate quantities.
pub fn path_to_automaton_with_trace(
    code: &MarkedPathCode,
) -> Result<(CanonicalAutomaton, BijectionTrace)> {
    build_automaton(code)
}

fn recover_code(a: &CanonicalAutomaton) -> Result<(MarkedPathCode, BijectionTrace)> {
    let inner = a.as_automaton();
    if inner.k() < 2 {
        return Err(Error::InvalidParameter(
            "the inverse map needs an alphabet of at least 2 letters".into(),
        ));
    }
    let k = inner.k() - 1;
    let n = inner.n();
    let kn = k * n;
    let total = kn + n;
    let width = inner.k() * n;
    let bottom = inner.bottom();

    // circled positions are the last occurrences of 2, ..., n
    let mut circled = Vec::with_capacity(n.saturating_sub(1));
    for v in 2..=n {
        let pos = bottom
            .iter()
            .rposition(|&t| t == v)
            .ok_or_else(|| Error::Internal(format!("interior vertex {v} never occurs")))?;
        circled.push(pos + 1);
    }

    // place the north steps from the suffix counts; the last step is north
    let mut is_north = vec![false; total + 1];
    is_north[total] = true;
    for &i_j in &circled {
        if i_j >= total || is_north[total - i_j] {
            return Err(Error::Internal(format!(
                "circled position {i_j} cannot come from a path"
            )));
        }
        is_north[total - i_j] = true;
    }
    let steps: Vec<Step> = (1..=total)
        .map(|pos| if is_north[pos] { Step::N } else { Step::E })
        .collect();
    let path = LatticePath::new(k, n, n, steps).map_err(|e| {
        Error::Internal(format!(
            "reconstructed steps are not a subdiagonal path: {e}"
        ))
    })?;
    let heights = path_to_code(&path)?;

    // recover each column's square count from the fill rule
    let mut base = 1usize;
    let mut counts = Vec::with_capacity(kn); // last column first
    let mut circled_iter = circled.iter().peekable();
    let mut blanks_seen = 0usize;
    for pos in 1..=width {
        if circled_iter.peek() == Some(&&pos) {
            circled_iter.next();
            base = bottom[pos - 1];
            continue;
        }
        blanks_seen += 1;
        let value = bottom[pos - 1];
        if blanks_seen == kn + 1 {
            if value != n + 1 {
                return Err(Error::Internal(format!(
                    "the final blank holds {value}, not the sink label {}",
                    n + 1
                )));
            }
        } else {
            if value <= base {
                return Err(Error::Internal(format!(
                    "column {pos} holds {value}, not above its base {base}"
                )));
            }
            counts.push(value - base);
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(kn);
    for (idx, &b) in heights.heights().iter().enumerate() {
        // the j-th blank carries the count for column kn + 1 - j
        let count = counts[kn - 1 - idx];
        if count < 1 || count > b {
            return Err(Error::Internal(format!(
                "recovered square count {count} for column {} is outside [1, {b}]",
                idx + 1
            )));
        }
        pairs.push((b - count + 1, b));
    }
    let code = MarkedPathCode::new(k, pairs)
        .map_err(|e| Error::Internal(format!("recovered marks are not a valid code: {e}")))?;
    let trace = BijectionTrace {
        circled_positions: circled,
        square_counts: counts,
        blank_fill: bottom.to_vec(),
    };
    Ok((code, trace))
}

/// Invert the map: read a canonical automaton on `k+1` letters back to its
/// column-marked `(k,n,n)`-path.
pub fn automaton_to_path(a: &CanonicalAutomaton) -> Result<MarkedPathCode> {
    Ok(recover_code(a)?.0)
}

/// As [`automaton_to_path`], also returning the recovered quantities.
pub fn automaton_to_path_with_trace(
    a: &CanonicalAutomaton,
) -> Result<(MarkedPathCode, BijectionTrace)> {
    recover_code(a)
}
