//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use magic_polygons::construct::range_partition_check;
use magic_polygons::proofcheck::poly::RationalFunction;
use magic_polygons::proofcheck::{check_odd_contradiction, reduce_case, OddCase};
use magic_polygons::search::{verify_nonexistence, SearchCaps};
use magic_polygons::symmetry::{apply, canonical_form, group, orbit};
use magic_polygons::{construct, enumerate, verify, Labeling, LabelingDocument, SearchConfig};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || {
        format!("{what} took {t:.2?}, limit {limit:?}")
    })
}

fn fixture(name: &str) -> Labeling {
    let text = std::fs::read_to_string(common::fixture(name)).unwrap();
    LabelingDocument::parse(&text)
        .unwrap()
        .to_labeling()
        .unwrap()
}

fn construction_correctness() -> Check {
    let start = Instant::now();
    for n in (6..=1000).step_by(2) {
        let l = construct(n).map_err(|e| e.to_string())?;
        let r = verify(&l).unwrap();
        ensure(r.is_magic, || format!("n = {n} not magic"))?;
        ensure(r.common_sum == Some(3 * n as i64 + 3), || {
            format!("n = {n}: sum {:?}", r.common_sum)
        })?;
        ensure(l.center() == Some(n as i64 + 1), || {
            format!("n = {n}: center")
        })?;
    }
    within(start, Duration::from_secs(5), "construction")?;
    Ok(format!("498 orders in {:.2?}", start.elapsed()))
}

fn reference_fixtures() -> Check {
    let start = Instant::now();
    ensure(construct(4).unwrap() == fixture("square.json"), || {
        "construct(4) differs from the square fixture".into()
    })?;
    let a = canonical_form(&construct(6).unwrap()).unwrap();
    let b = canonical_form(&fixture("hexagon.json")).unwrap();
    ensure(a == b, || "hexagon canonical forms differ".into())?;
    within(start, Duration::from_secs(1), "fixtures")?;
    Ok("square exact, hexagon canonical match".into())
}

fn odd_nonexistence() -> Check {
    let mut parts = Vec::new();
    for (n, limit) in [(3, 1), (5, 60)] {
        let start = Instant::now();
        let r = enumerate(n, &SearchConfig::exhaustive()).unwrap();
        ensure(r.total_count == 0, || format!("n = {n}: {}", r.total_count))?;
        within(start, Duration::from_secs(limit), &format!("n = {n}"))?;
        parts.push(format!("n={n} 0 in {:.2?}", start.elapsed()));
    }
    let start = Instant::now();
    let r = verify_nonexistence(7, &SearchCaps::default()).unwrap();
    ensure(r.total_count == 0 && !r.inconsistent, || {
        format!("n = 7 pruned: {}", r.total_count)
    })?;
    parts.push(format!("n=7 pruned 0 in {:.2?}", start.elapsed()));
    Ok(parts.join(", "))
}

fn square_enumeration() -> Check {
    let start = Instant::now();
    let r = enumerate(4, &SearchConfig::exhaustive()).unwrap();
    let oracle = common::brute_force(4).len();
    ensure(r.total_count == 8 && r.class_count == 1, || {
        format!("total {} classes {}", r.total_count, r.class_count)
    })?;
    ensure(
        oracle == 8 && oracle == common::MAGIC_SQUARE_SYMMETRY_COUNT,
        || format!("brute force found {oracle}"),
    )?;
    within(start, Duration::from_secs(10), "n = 4")?;
    Ok("8 labelings, 1 class; brute force agrees".into())
}

fn all_labelings(n: usize, config: SearchConfig) -> BTreeSet<Labeling> {
    let r = enumerate(n, &config.emit(true)).unwrap();
    r.solutions
        .unwrap()
        .iter()
        .flat_map(|c| orbit(c).unwrap())
        .collect()
}

fn center_and_sum_forced() -> Check {
    let mut checked = 0;
    for n in 3..=5 {
        for l in all_labelings(n, SearchConfig::exhaustive()) {
            let r = verify(&l).unwrap();
            ensure(l.center() == Some(n as i64 + 1), || {
                format!("n = {n}: center")
            })?;
            ensure(r.line_sums.len() == 2 * n, || "line count".into())?;
            ensure(
                r.line_sums.iter().all(|s| s.sum == 3 * n as i64 + 3),
                || format!("n = {n}: line sums"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} labelings checked"))
}

fn mode_agreement() -> Check {
    for n in 3..=5 {
        let e = enumerate(n, &SearchConfig::exhaustive().emit(true)).unwrap();
        let p = enumerate(n, &SearchConfig::pruned().emit(true)).unwrap();
        ensure(e.total_count == p.total_count, || {
            format!("n = {n}: counts")
        })?;
        ensure(e.solutions == p.solutions, || format!("n = {n}: classes"))?;
        let oracle = common::brute_force(n).len() as u64;
        ensure(oracle == e.total_count, || format!("n = {n}: brute force"))?;
    }
    Ok("n = 3, 4, 5 identical".into())
}

/// Solves the expected reduced system with `g` as parameter and checks it
/// against the original five equations.
fn expected_matrix_solves_case_one(k: i64) -> bool {
    let g = 3 * k - 7;
    let (a, b, d, e, f) = (
        g - 2 * k - 1,
        4 * k + 4 - g,
        6 * k + 5 - g,
        g,
        6 * k + 5 - g,
    );
    d + e == 6 * k + 5
        && f + g == 6 * k + 5
        && a + b == 2 * k + 3
        && b + e == 4 * k + 4
        && a + f == 4 * k + 4
}

fn proof_checker() -> Check {
    let start = Instant::now();
    let c = RationalFunction::constant;
    let lin = RationalFunction::linear;
    let expected = vec![
        vec![c(1), c(0), c(0), c(0), c(0), c(-1), lin(-2, -1)],
        vec![c(0), c(1), c(0), c(0), c(0), c(1), lin(4, 4)],
        vec![c(0), c(0), c(1), c(0), c(0), c(1), lin(6, 5)],
        vec![c(0), c(0), c(0), c(1), c(0), c(-1), c(0)],
        vec![c(0), c(0), c(0), c(0), c(1), c(1), lin(6, 5)],
    ];
    let reduced = reduce_case(OddCase::XEqualsOne);
    ensure(reduced.matrix == expected, || {
        format!("case 1 RREF differs: {:?}", reduced.matrix)
    })?;
    ensure((1..=10_000).all(expected_matrix_solves_case_one), || {
        "expected matrix inconsistent with equations".into()
    })?;
    let report = check_odd_contradiction(10_000);
    ensure(report.cases.iter().all(|c| c.e_equals_g_forced), || {
        "e = g not forced in both cases".into()
    })?;
    ensure(
        report.sweep.checked == 20_000 && report.sweep.agreeing == 20_000,
        || format!("sweep {:?}", report.sweep),
    )?;
    ensure(!report.fatal_inconsistency, || "fatal inconsistency".into())?;
    within(start, Duration::from_secs(30), "proof check")?;
    Ok(format!(
        "RREF row-for-row, both cases forced, sweep 20000/20000 in {:.2?}",
        start.elapsed()
    ))
}

fn range_partition() -> Check {
    let start = Instant::now();
    for n in (8..=2000).step_by(2) {
        let r = range_partition_check(n).unwrap();
        ensure(r.passed, || {
            let failed: Vec<_> = r
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            format!("n = {n}: {failed:?}")
        })?;
    }
    within(start, Duration::from_secs(10), "range checks")?;
    Ok(format!("997 orders in {:.2?}", start.elapsed()))
}

fn injectivity_at_scale() -> Check {
    let mut parts = Vec::new();
    for n in [10_000usize, 100_000, 1_000_000] {
        let start = Instant::now();
        let slots = construct(n).unwrap().complete_slots().unwrap();
        let mut seen = vec![false; 2 * n + 2];
        for v in slots {
            ensure((1..=2 * n as i64 + 1).contains(&v), || {
                format!("n = {n}: {v}")
            })?;
            ensure(!std::mem::replace(&mut seen[v as usize], true), || {
                format!("n = {n}: {v} repeated")
            })?;
        }
        within(start, Duration::from_secs(10), &format!("n = {n}"))?;
        parts.push(format!("{n} in {:.2?}", start.elapsed()));
    }
    Ok(parts.join(", "))
}

fn determinism() -> Check {
    let start = Instant::now();
    let docs: Vec<String> = [1, 4, 8]
        .into_iter()
        .map(|w| {
            enumerate(6, &SearchConfig::pruned().emit(true).workers(w))
                .unwrap()
                .to_json()
        })
        .collect();
    ensure(docs.windows(2).all(|w| w[0] == w[1]), || {
        "result JSON differs between worker counts".into()
    })?;
    within(start, Duration::from_secs(600), "determinism")?;
    Ok(format!(
        "workers 1/4/8 byte-identical ({} bytes)",
        docs[0].len()
    ))
}

fn symmetry_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut cases = 0;
    for n in [4, 6, 8] {
        let size = 2 * n + 1;
        let base = construct(n).unwrap().complete_slots().unwrap();
        for trial in 0..200 {
            let mut slots = base.clone();
            for _ in 0..trial % 4 {
                slots.swap(rng.gen_range(0..size), rng.gen_range(0..size));
            }
            let l = Labeling::from_slots(n, &slots).unwrap();
            let o = orbit(&l).unwrap();
            ensure((2 * n) % o.len() == 0, || {
                format!("n = {n}: orbit {}", o.len())
            })?;
            let magic = verify(&l).unwrap().is_magic;
            let canon = canonical_form(&l).unwrap();
            ensure(canonical_form(&canon).unwrap() == canon, || {
                "not idempotent".into()
            })?;
            for g in group(n) {
                let moved = apply(g, &l).unwrap();
                ensure(verify(&moved).unwrap().is_magic == magic, || {
                    format!("n = {n}: {g:?} changed magic status")
                })?;
                ensure(canonical_form(&moved).unwrap() == canon, || {
                    format!("n = {n}: canonical form not orbit-constant")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} labelings over n = 4, 6, 8"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("construction correctness", construction_correctness),
        ("reference fixtures", reference_fixtures),
        ("odd nonexistence", odd_nonexistence),
        ("n = 4 enumeration", square_enumeration),
        ("center and sum forced", center_and_sum_forced),
        ("mode agreement", mode_agreement),
        ("proof checker", proof_checker),
        ("range partition", range_partition),
        ("injectivity at scale", injectivity_at_scale),
        ("determinism", determinism),
        ("symmetry suite", symmetry_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
