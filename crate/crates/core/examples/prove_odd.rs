//! Row-reduce the two odd-order systems over Q(k) and print the result.

use magic_polygons::check_odd_contradiction;

fn main() {
    let report = check_odd_contradiction(100);
    for case in &report.cases {
        println!("{:?}", case.case);
        for eq in &case.equations {
            println!("  {eq}");
        }
        println!("  rref:");
        for row in &case.rref {
            println!("    [{}]", row.join(", "));
        }
        println!("  e = g forced: {}", case.e_equals_g_forced);
    }
    println!(
        "sweep k = 1..={}: {}/{} agree",
        report.sweep.k_max, report.sweep.agreeing, report.sweep.checked
    );
    println!("{}", report.conclusion);
}
