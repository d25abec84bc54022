//! Count magic n-gons for small n in both search modes.

use magic_polygons::{enumerate, LabelingDocument, SearchConfig};

fn main() {
    for n in 3..=6 {
        let exhaustive = enumerate(n, &SearchConfig::exhaustive()).unwrap();
        let pruned = enumerate(n, &SearchConfig::pruned().workers(4)).unwrap();
        assert_eq!(exhaustive.total_count, pruned.total_count);
        println!(
            "n = {n}: {:>3} labelings, {} classes (exhaustive {} nodes, pruned {} nodes)",
            pruned.total_count,
            pruned.class_count,
            exhaustive.nodes_explored,
            pruned.nodes_explored
        );
    }

    // Pruned mode reaches a little further.
    for n in [7, 8] {
        let r = enumerate(n, &SearchConfig::pruned().up_to_symmetry(true).emit(true)).unwrap();
        println!(
            "n = {n}: {} labelings, {} classes",
            r.total_count, r.class_count
        );
        for class in r.solutions.unwrap_or_default() {
            let d = LabelingDocument::from_labeling(&class).unwrap();
            println!("  c={} v={:?} m={:?}", d.center, d.vertices, d.midpoints);
        }
    }
}
