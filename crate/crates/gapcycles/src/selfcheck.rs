//! The cross-module invariant suite behind `gapcycles verify`.
//!
//! Each check recomputes a structural fact two independent ways and compares
//! exactly. The suite is sized by the largest primorial stage it builds.

use num_bigint::BigUint;
use num_traits::One;

use crate::census::{
    self, count_constellation, driving_term_census, driving_term_census_with_workers,
    ratio_vector, Constellation,
};
use crate::cycle::GapCycle;
use crate::{bridge, dynamics, polignac, Result};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(out: &mut Vec<CheckOutcome>, name: &str, passed: bool, detail: impl Into<String>) {
    out.push(CheckOutcome {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    });
}

/// Runs the whole suite with cycles up to `G(p_max#)`.
pub fn run(p_max: u64) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut stages = Vec::new();
    let mut cycle = GapCycle::seed();
    let mut p = 2u64;
    stages.push((p, cycle.clone()));
    while let Ok(q) = cycle.next_prime() {
        if q > p_max {
            break;
        }
        cycle = cycle.extend_by_prime(q)?;
        p = q;
        stages.push((p, cycle.clone()));
    }

    for (stage, cycle) in &stages {
        let report = cycle.structure_report();
        check(
            &mut out,
            &format!("structure G({stage}#)"),
            report.all_hold(),
            format!("{report:?}"),
        );
    }

    // closure plans reproduce the extension and count phi(N)
    for (stage, cycle) in stages.iter().take(4) {
        if let Ok(q) = cycle.next_prime() {
            let plan = cycle.closure_plan(q)?;
            let by_plan = plan.apply(cycle)?;
            let direct = cycle.extend_by_prime(q)?;
            check(
                &mut out,
                &format!("closure plan G({stage}#) -> {q}"),
                plan.positions().len() as u64 == cycle.len() && by_plan == direct,
                format!("{} closures", plan.positions().len()),
            );
        }
    }

    // streamed extension matches materialized extension
    if let Some((stage, cycle)) = stages.iter().rev().nth(1) {
        let materialized = cycle.extend_by_next_prime()?;
        let mut streamed = Vec::with_capacity(materialized.gaps().len());
        cycle.stream_extend(|g| {
            streamed.push(g);
            Ok(())
        })?;
        check(
            &mut out,
            &format!("stream == materialize from G({stage}#)"),
            streamed == materialized.gaps(),
            format!("{} gaps", streamed.len()),
        );
    }

    // twin formula and N2 == N4
    let two = Constellation::new(vec![2])?;
    let four = Constellation::new(vec![4])?;
    for (stage, cycle) in stages.iter().filter(|(s, _)| *s >= 3) {
        let n2 = count_constellation(cycle, &two);
        let n4 = count_constellation(cycle, &four);
        let mut product = BigUint::one();
        let mut q = 3u64;
        while q <= *stage {
            product *= BigUint::from(q - 2);
            q = crate::cycle::next_prime_u64(q);
        }
        check(
            &mut out,
            &format!("twin count G({stage}#)"),
            n2 == product && n2 == n4,
            format!("N2 = {n2}"),
        );
    }

    // workers never change the census
    if let Some((stage, cycle)) = stages.last() {
        let base = driving_term_census(cycle, 32, 6.min(cycle.len() as usize))?;
        let mut all_equal = true;
        for workers in [2usize, 4, 8] {
            let sharded =
                driving_term_census_with_workers(cycle, 32, 6.min(cycle.len() as usize), workers)?;
            all_equal &= sharded == base;
        }
        check(
            &mut out,
            &format!("census determinism G({stage}#)"),
            all_equal,
            "workers 1/2/4/8",
        );
    }

    // model evolution equals census ratios
    if stages.iter().any(|(s, _)| *s >= 7) {
        let g5 = GapCycle::primorial(5)?;
        let table5 = driving_term_census(&g5, 10, 3)?;
        let mut all_equal = true;
        let mut detail = String::new();
        for (stage, cycle) in stages.iter().filter(|(s, _)| *s > 5) {
            let table = driving_term_census(cycle, 10, 3)?;
            for g in [6u64, 8, 10] {
                let evolved = dynamics::iterate_model(&ratio_vector(&table5, g, 3)?, 5, *stage)?;
                let censused = ratio_vector(&table, g, 3)?;
                if evolved.entries != censused.entries {
                    all_equal = false;
                    detail = format!("g={g} at {stage}#");
                }
            }
        }
        check(&mut out, "dynamics == census (g=6,8,10)", all_equal, detail);
    }

    // eigenstructure identities
    let eig = dynamics::eigenstructure(9)?;
    check(
        &mut out,
        "eigenstructure J=9",
        eig.verify(&[13, 17, 101])?,
        "L*R = I, R*Lambda*L = M",
    );

    // closed-form driving totals against the census
    let mut all_equal = true;
    let mut detail = String::new();
    for g in (2..=50u64).step_by(2) {
        let rad = polignac::radical(g)?;
        if rad.qbar > p_max || rad.qbar > 13 {
            continue;
        }
        let cycle = GapCycle::primorial(rad.qbar)?;
        let censused = BigUint::from(census::total_driving_terms(&cycle, g));
        let formula = polignac::driving_term_total(g)?;
        if formula.total != censused {
            all_equal = false;
            detail = format!("g={g}: formula {} vs census {censused}", formula.total);
        }
    }
    check(&mut out, "driving-term totals", all_equal, detail);

    // ratio sums at each stage against the census
    if let Some((stage, cycle)) = stages.iter().find(|(s, _)| *s == 13.min(p_max)) {
        let mut all_equal = true;
        let mut detail = String::new();
        for g in (2..=60u64).step_by(2) {
            let predicted = polignac::ratio_sum_at(g, *stage)?;
            let censused = census::total_driving_terms(cycle, g);
            let n2 = count_constellation(cycle, &two);
            let lhs = predicted
                * num_rational::BigRational::from_integer(n2.into());
            if lhs != num_rational::BigRational::from_integer(BigUint::from(censused).into()) {
                all_equal = false;
                detail = format!("g={g}");
            }
        }
        check(
            &mut out,
            &format!("ratio sums at G({stage}#)"),
            all_equal,
            detail,
        );
    }

    // survivors against the independent sieve
    for (stage, cycle) in stages.iter().filter(|(s, _)| *s >= 3) {
        let report = bridge::survivors(cycle)?;
        let oracle =
            bridge::oracle_gaps_between(report.next_prime, report.next_prime * report.next_prime)?;
        check(
            &mut out,
            &format!("survivors G({stage}#)"),
            report.gaps == oracle && report.all_matched(),
            format!("{} gaps to {}", report.gaps.len(), report.end_value),
        );
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_to_11() {
        let outcomes = run(11).unwrap();
        assert!(!outcomes.is_empty());
        for outcome in &outcomes {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }
}
