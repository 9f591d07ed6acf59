//! Cross-verification harness: re-derives the library's identities over a
//! parameter box and reports each comparison as a pass/fail check.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};

use sa_core::automata::{
    acyclic_count, acyclic_count_brute_force, enumerate_canonical, enumerate_saf,
    single_source_count, unlabeled_count, TwoLineAutomaton,
};
use sa_core::bijection::{automaton_to_path, path_to_automaton};
use sa_core::combinatorics::factorial;
use sa_core::involution::{as_fixed, enumerate_lists, fixed_to_marked_code, involution_step};
use sa_core::matrix::HessenbergMatrix;
use sa_core::paths::{enumerate_marked_codes, marked_count, MarkedPathCode};
use sa_core::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Determinant,
    Counts,
    Orbits,
    Bijection,
    Involution,
}

pub const ALL_SUITES: [Suite; 5] = [
    Suite::Determinant,
    Suite::Counts,
    Suite::Orbits,
    Suite::Bijection,
    Suite::Involution,
];

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub elapsed: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    fn push(
        &mut self,
        name: &'static str,
        params: String,
        lhs: impl ToString,
        rhs: impl ToString,
        started: Instant,
    ) {
        self.checks.push(Check {
            name,
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            elapsed: started.elapsed(),
        });
    }
}

pub fn run(
    suites: &[Suite],
    max_k: usize,
    max_n: usize,
    enum_budget: u64,
    list_budget: u64,
) -> Result<Report> {
    let mut report = Report::default();
    // fixed suite order keeps the report deterministic regardless of the
    // order flags were given in
    for suite in ALL_SUITES {
        if !suites.contains(&suite) {
            continue;
        }
        match suite {
            Suite::Determinant => determinant_suite(&mut report, max_k, max_n)?,
            Suite::Counts => counts_suite(&mut report, max_k, max_n, enum_budget)?,
            Suite::Orbits => orbits_suite(&mut report, max_k, max_n, enum_budget)?,
            Suite::Bijection => bijection_suite(&mut report, max_k, max_n, enum_budget)?,
            Suite::Involution => involution_suite(&mut report, max_n, list_budget)?,
        }
    }
    Ok(report)
}

fn determinant_suite(report: &mut Report, max_k: usize, max_n: usize) -> Result<()> {
    for k in 1..=max_k {
        for n in 1..=max_n {
            let params = format!("k={k} n={n}");
            let start = Instant::now();
            let det = HessenbergMatrix::build(k, n)?.determinant();
            report.push(
                "det_equals_marked_count",
                params.clone(),
                &det,
                marked_count(k, n)?,
                start,
            );
            let start = Instant::now();
            report.push(
                "det_equals_unlabeled_next_alphabet",
                params.clone(),
                &det,
                unlabeled_count(k + 1, n)?,
                start,
            );
            if k == 1 {
                let start = Instant::now();
                let by_sum = HessenbergMatrix::build(k, n)?.determinant_via_permutation_sum()?;
                report.push("det_equals_permutation_sum", params, det, by_sum, start);
            }
        }
    }
    Ok(())
}

fn counts_suite(report: &mut Report, max_k: usize, max_n: usize, budget: u64) -> Result<()> {
    for k in 1..=max_k {
        for n in 1..=max_n {
            let params = format!("k={k} n={n}");
            let start = Instant::now();
            let enumerated = enumerate_saf(k, n, budget)?.count();
            report.push(
                "saf_enumeration_equals_formula",
                params.clone(),
                enumerated,
                single_source_count(k, n)?,
                start,
            );
            let start = Instant::now();
            let brute = acyclic_count_brute_force(k, n, budget)?;
            report.push(
                "acyclic_brute_force_equals_recurrence",
                params,
                brute,
                acyclic_count(k, n),
                start,
            );
        }
    }
    Ok(())
}

fn orbits_suite(report: &mut Report, max_k: usize, max_n: usize, budget: u64) -> Result<()> {
    for k in 1..=max_k {
        for n in 1..=max_n {
            let params = format!("k={k} n={n}");
            let start = Instant::now();
            let mut classes: BTreeMap<Vec<usize>, Vec<TwoLineAutomaton>> = BTreeMap::new();
            for a in enumerate_saf(k, n, budget)? {
                let canon = a.canonicalize()?;
                classes
                    .entry(canon.as_automaton().bottom().to_vec())
                    .or_default()
                    .push(a);
            }
            report.push(
                "orbit_class_count",
                params.clone(),
                classes.len(),
                unlabeled_count(k, n)?,
                start,
            );

            let start = Instant::now();
            let class_size = factorial(n - 1);
            let structure_violations = classes
                .values()
                .filter(|members| {
                    BigUint::from(members.len() as u64) != class_size
                        || members.iter().filter(|a| a.is_canonical()).count() != 1
                })
                .count();
            report.push(
                "orbit_class_structure_violations",
                params.clone(),
                structure_violations,
                0,
                start,
            );

            let start = Instant::now();
            let idempotence_violations = classes
                .keys()
                .filter(|bottom| {
                    let canon =
                        TwoLineAutomaton::new(k, n, bottom.to_vec()).and_then(|a| a.canonicalize());
                    match canon {
                        Ok(c) => c.as_automaton().bottom() != &bottom[..],
                        Err(_) => true,
                    }
                })
                .count();
            report.push(
                "canonicalize_idempotence_violations",
                params,
                idempotence_violations,
                0,
                start,
            );
        }
    }
    Ok(())
}

fn bijection_suite(report: &mut Report, max_k: usize, max_n: usize, budget: u64) -> Result<()> {
    for k in 1..=max_k {
        for n in 1..=max_n {
            let params = format!("k={k} n={n}");
            let start = Instant::now();
            let codes: Vec<MarkedPathCode> = enumerate_marked_codes(k, n, budget)?.collect();
            let mut round_trip_failures = 0usize;
            let mut images = Vec::with_capacity(codes.len());
            for code in &codes {
                let auto = path_to_automaton(code)?;
                if &automaton_to_path(&auto)? != code {
                    round_trip_failures += 1;
                }
                images.push(auto);
            }
            report.push(
                "bijection_round_trip_failures",
                params.clone(),
                round_trip_failures,
                0,
                start,
            );

            let start = Instant::now();
            images.sort();
            images.dedup();
            let mut canonical: Vec<_> = enumerate_canonical(k + 1, n, budget)?.collect();
            canonical.sort();
            let coverage_ok = images == canonical;
            report.push(
                "bijection_image_equals_canonical_set",
                params.clone(),
                coverage_ok,
                true,
                start,
            );

            let start = Instant::now();
            report.push(
                "bijection_cardinality",
                params,
                codes.len(),
                canonical.len(),
                start,
            );
        }
    }
    Ok(())
}

fn involution_suite(report: &mut Report, max_n: usize, budget: u64) -> Result<()> {
    for n in 1..=max_n {
        let params = format!("n={n}");
        let det = HessenbergMatrix::build(1, n)?.determinant();

        let start = Instant::now();
        let mut weight_sum: i128 = 0;
        let mut pairing_violations = 0usize;
        let mut fixed_codes: Vec<MarkedPathCode> = Vec::new();
        for list in enumerate_lists(n, budget)? {
            weight_sum += list.weight() as i128;
            match as_fixed(&list) {
                Some(f) => fixed_codes.push(fixed_to_marked_code(&f)),
                None => {
                    let image = involution_step(&list)?;
                    if image.weight() != -list.weight() || involution_step(&image)? != list {
                        pairing_violations += 1;
                    }
                }
            }
        }
        report.push(
            "involution_weight_sum_equals_det",
            params.clone(),
            BigInt::from(weight_sum),
            &det,
            start,
        );
        let start = Instant::now();
        report.push(
            "involution_fixed_points_equal_det",
            params.clone(),
            fixed_codes.len(),
            &det,
            start,
        );
        let start = Instant::now();
        report.push(
            "involution_pairing_violations",
            params.clone(),
            pairing_violations,
            0,
            start,
        );

        let start = Instant::now();
        fixed_codes.sort();
        let mut marked: Vec<MarkedPathCode> = enumerate_marked_codes(1, n, budget)?.collect();
        marked.sort();
        report.push(
            "fixed_points_match_marked_codes",
            params,
            fixed_codes == marked,
            true,
            start,
        );
    }
    Ok(())
}
