//! Value-range bookkeeping behind injectivity of the even construction.

use magic_polygons::range_partition_check;

fn main() {
    let r = range_partition_check(20).unwrap();
    println!("n = 20, L = {:?}, U = {:?}", r.lower, r.upper);
    for c in &r.checks {
        println!(
            "  {:<40} {}",
            c.name,
            if c.passed { "ok" } else { "FAILED" }
        );
    }
    for note in &r.bound_chain_notes {
        println!("  note: j = {} gives {}", note.j, note.value);
    }

    let bad: Vec<usize> = (8..=400)
        .step_by(2)
        .filter(|&n| !range_partition_check(n).unwrap().passed)
        .collect();
    println!("failing even orders in 8..=400: {bad:?}");
}
