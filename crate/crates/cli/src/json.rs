//! Wire formats. Field order is fixed by declaration order so identical
//! inputs always produce byte-identical output; counts that can outgrow
//! 64-bit integers travel as decimal strings.

use serde::{Deserialize, Serialize};

use sa_core::automata::TwoLineAutomaton;
use sa_core::bijection::BijectionTrace;
use sa_core::involution::PermList;
use sa_core::paths::{LatticePath, MarkedPathCode};
use sa_core::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub k: usize,
    pub n: usize,
    pub bottom: Vec<usize>,
}

impl AutomatonJson {
    pub fn of(a: &TwoLineAutomaton) -> Self {
        Self {
            k: a.k(),
            n: a.n(),
            bottom: a.bottom().to_vec(),
        }
    }

    pub fn into_automaton(self) -> Result<TwoLineAutomaton> {
        TwoLineAutomaton::new(self.k, self.n, self.bottom)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MarkedCodeJson {
    pub k: usize,
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl MarkedCodeJson {
    pub fn of(c: &MarkedPathCode) -> Self {
        Self {
            k: c.k(),
            n: c.n(),
            pairs: c.pairs().to_vec(),
        }
    }

    pub fn into_code(self) -> Result<MarkedPathCode> {
        let code = MarkedPathCode::new(self.k, self.pairs)?;
        if code.n() != self.n {
            return Err(Error::Malformed(format!(
                "field n = {} does not match the {} pairs for k = {}",
                self.n,
                code.k() * code.n(),
                self.k
            )));
        }
        Ok(code)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PathJson {
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub steps: String,
}

impl PathJson {
    pub fn of(p: &LatticePath) -> Self {
        Self {
            k: p.k(),
            n: p.n(),
            p: p.p(),
            steps: p.step_string(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PermListJson {
    pub n: usize,
    pub perms: Vec<String>,
}

impl PermListJson {
    pub fn of(l: &PermList) -> Self {
        Self {
            n: l.n(),
            perms: l.cycle_strings(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TraceJson {
    pub circled_positions: Vec<usize>,
    pub square_counts: Vec<usize>,
    pub blank_fill: Vec<usize>,
}

impl TraceJson {
    pub fn of(t: &BijectionTrace) -> Self {
        Self {
            circled_positions: t.circled_positions.clone(),
            square_counts: t.square_counts.clone(),
            blank_fill: t.blank_fill.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MatrixJson {
    pub k: usize,
    pub n: usize,
    pub dim: usize,
    /// Row-major entries as decimal strings.
    pub entries: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CountJson {
    pub target: String,
    pub k: usize,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct SummaryJson {
    pub count: u64,
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub status: String,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub checks: Vec<CheckJson>,
    pub passed: usize,
    pub failed: usize,
}
