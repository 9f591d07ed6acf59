//! Exact enumeration of single-source acyclic finite automata and the
//! structures that count them.
//!
//! Everything here is exact integer arithmetic. The crate provides:
//!
//! - [`combinatorics`]: Stirling cycle numbers, binomials, padded
//!   compositions, and permutations in standard cycle form.
//! - [`matrix`]: the Hessenberg matrix of Stirling cycle numbers and its
//!   division-free determinant.
//! - [`automata`]: SAF automata in two-line form, counting recurrences,
//!   brute-force enumeration, and canonicalization under relabeling.
//! - [`paths`]: subdiagonal lattice paths, height codes, column markings,
//!   and the generalized ballot count.
//! - [`bijection`]: the map between column-marked paths and canonical
//!   automata, in both directions.
//! - [`involution`]: weighted permutation lists, the split/merge
//!   weight-reversing involution, and its fixed points.
//!
//! The headline identity ties these together: the determinant of the
//! `kn x kn` Stirling cycle matrix equals the number of column-marked
//! subdiagonal `(k,n,n)`-paths, which equals the number of unlabeled SAF
//! automata of size `n` on `k+1` letters. Each equality is testable here at
//! desk scale, by exhaustive enumeration and independent recurrences.

pub mod automata;
pub mod bijection;
pub mod combinatorics;
pub mod involution;
pub mod matrix;
pub mod paths;

mod error;

pub use error::{Error, Result};
