//! Verify a labeling, then break it with one swap and look at the report.

use magic_polygons::{verify, Labeling};

fn main() {
    // The hexagon from the usual worked example; magic sum 21.
    let hexagon = Labeling::from_parts(6, 7, &[5, 13, 2, 9, 1, 12], &[3, 6, 10, 11, 8, 4]).unwrap();
    let report = verify(&hexagon).unwrap();
    println!("magic: {}, sum: {:?}", report.is_magic, report.common_sum);
    for s in &report.line_sums {
        println!("  {:?} {} = {}", s.line.kind, s.line, s.sum);
    }

    let mut slots = hexagon.complete_slots().unwrap();
    slots.swap(1, 2);
    let broken = Labeling::from_slots(6, &slots).unwrap();
    let report = verify(&broken).unwrap();
    println!("\nafter swapping v1 and v2: magic = {}", report.is_magic);
    println!(
        "{}",
        serde_json::to_string_pretty(&report.violations).unwrap()
    );
}
