//! Orbits, stabilizers and canonical forms under the dihedral group.

use magic_polygons::construct;
use magic_polygons::symmetry::{canonical_form, complement, group, orbit, stabilizer_order};

fn main() {
    for n in [4, 6, 8, 10] {
        let l = construct(n).unwrap();
        let o = orbit(&l).unwrap();
        let canon = canonical_form(&l).unwrap();
        let self_comp = canonical_form(&complement(&l).unwrap()).unwrap() == canon;
        println!(
            "n = {n:>2}: |G| = {}, orbit {}, stabilizer {}, self-complementary {self_comp}",
            group(n).len(),
            o.len(),
            stabilizer_order(&l).unwrap(),
        );
        println!(
            "        canonical v = {:?}",
            &canon.complete_slots().unwrap()[1..=n]
        );
    }
}
