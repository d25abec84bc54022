//! The dihedral group of order `2n` acting on the wheel layout.
//!
//! Positions are treated as points on a circle: vertex `i` sits at `i - 1`
//! and midpoint `i` at `i - 1/2`. A group element acts as
//! `x -> sign * x + rotation` with `sign = -1` when reflected, so the base
//! reflection fixes `v1`, sends `vi` to `v(2-i)` and `mi` to `m(1-i)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::polygon::{self, Labeling, NodeId};

/// `x -> x + rotation`, preceded by the base reflection when `reflected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymmetryElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement {
        rotation: 0,
        reflected: false,
    };

    pub fn rotation(t: usize, n: usize) -> Self {
        SymmetryElement {
            rotation: t % n,
            reflected: false,
        }
    }

    pub fn reflection() -> Self {
        SymmetryElement {
            rotation: 0,
            reflected: true,
        }
    }

    fn sign(self) -> i64 {
        if self.reflected {
            -1
        } else {
            1
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: SymmetryElement, n: usize) -> SymmetryElement {
        let t = self.rotation as i64 + self.sign() * other.rotation as i64;
        SymmetryElement {
            rotation: t.rem_euclid(n as i64) as usize,
            reflected: self.reflected ^ other.reflected,
        }
    }

    pub fn inverse(self, n: usize) -> SymmetryElement {
        if self.reflected {
            // Reflections are involutions.
            self
        } else {
            SymmetryElement::rotation((n - self.rotation) % n, n)
        }
    }

    pub fn map_node(self, node: NodeId, n: usize) -> NodeId {
        let t = self.rotation as i64;
        match (node, self.reflected) {
            (NodeId::Center, _) => NodeId::Center,
            (NodeId::Vertex(i), false) => NodeId::Vertex(polygon::wrap(i as i64 + t, n)),
            (NodeId::Vertex(i), true) => NodeId::Vertex(polygon::wrap(2 - i as i64 + t, n)),
            (NodeId::Midpoint(i), false) => NodeId::Midpoint(polygon::wrap(i as i64 + t, n)),
            (NodeId::Midpoint(i), true) => NodeId::Midpoint(polygon::wrap(1 - i as i64 + t, n)),
        }
    }

    /// Slot permutation: entry `s` is the slot that slot `s` is sent to.
    pub fn slot_map(self, n: usize) -> Vec<usize> {
        NodeId::all(n)
            .map(|node| self.map_node(node, n).slot(n))
            .collect()
    }
}

/// All `2n` elements: rotations `0..n`, then the reflected ones.
pub fn group(n: usize) -> Vec<SymmetryElement> {
    [false, true]
        .into_iter()
        .flat_map(|reflected| {
            (0..n).map(move |rotation| SymmetryElement {
                rotation,
                reflected,
            })
        })
        .collect()
}

/// Moves every value along with its node.
pub fn apply(g: SymmetryElement, labeling: &Labeling) -> Result<Labeling> {
    labeling.require_complete()?;
    let n = labeling.n();
    let src = labeling.slots();
    let mut out = vec![0i64; src.len()];
    for (slot, target) in g.slot_map(n).into_iter().enumerate() {
        out[target] = src[slot].expect("checked complete");
    }
    Labeling::from_slots(n, &out)
}

pub fn orbit(labeling: &Labeling) -> Result<BTreeSet<Labeling>> {
    labeling.require_complete()?;
    group(labeling.n())
        .into_iter()
        .map(|g| apply(g, labeling))
        .collect()
}

/// The orbit member whose slot tuple `(c, v1..vn, m1..mn)` is
/// lexicographically smallest.
pub fn canonical_form(labeling: &Labeling) -> Result<Labeling> {
    Ok(orbit(labeling)?
        .into_iter()
        .next()
        .expect("orbit contains the labeling itself"))
}

/// Number of group elements fixing the labeling.
pub fn stabilizer_order(labeling: &Labeling) -> Result<usize> {
    let mut count = 0;
    for g in group(labeling.n()) {
        if &apply(g, labeling)? == labeling {
            count += 1;
        }
    }
    Ok(count)
}

/// The labeling with every value `x` replaced by `2n + 2 - x`.
pub fn complement(labeling: &Labeling) -> Result<Labeling> {
    labeling.require_complete()?;
    let n = labeling.n();
    let flip = 2 * n as i64 + 2;
    let slots: Vec<i64> = labeling
        .slots()
        .iter()
        .map(|v| flip - v.expect("checked complete"))
        .collect();
    Labeling::from_slots(n, &slots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::polygon::verify;

    fn hexagon() -> Labeling {
        Labeling::from_parts(6, 7, &[5, 13, 2, 9, 1, 12], &[3, 6, 10, 11, 8, 4]).unwrap()
    }

    #[test]
    fn identity_is_trivial() {
        assert_eq!(
            apply(SymmetryElement::IDENTITY, &hexagon()).unwrap(),
            hexagon()
        );
    }

    #[test]
    fn rotation_three_twice_is_identity() {
        let r3 = SymmetryElement::rotation(3, 6);
        let once = apply(r3, &hexagon()).unwrap();
        assert_ne!(once, hexagon());
        assert_eq!(apply(r3, &once).unwrap(), hexagon());
        assert_eq!(r3.compose(r3, 6), SymmetryElement::IDENTITY);
    }

    #[test]
    fn base_reflection_moves_nodes_as_documented() {
        let s = SymmetryElement::reflection();
        assert_eq!(s.map_node(NodeId::Vertex(1), 6), NodeId::Vertex(1));
        assert_eq!(s.map_node(NodeId::Vertex(2), 6), NodeId::Vertex(6));
        assert_eq!(s.map_node(NodeId::Midpoint(1), 6), NodeId::Midpoint(6));
        assert_eq!(s.map_node(NodeId::Midpoint(3), 5), NodeId::Midpoint(3));
        let reflected = apply(s, &construct(6).unwrap()).unwrap();
        let r = verify(&reflected).unwrap();
        assert!(r.is_magic);
        assert_eq!(r.common_sum, Some(21));
    }

    #[test]
    fn composition_matches_action() {
        for n in 3..9 {
            let g = group(n);
            for &a in &g {
                for &b in &g {
                    let ab = a.compose(b, n);
                    for node in NodeId::all(n) {
                        assert_eq!(ab.map_node(node, n), a.map_node(b.map_node(node, n), n));
                    }
                }
                assert_eq!(a.compose(a.inverse(n), n), SymmetryElement::IDENTITY);
            }
        }
    }

    #[test]
    fn action_is_faithful_and_preserves_lines() {
        for n in 3..12 {
            let g = group(n);
            let maps: BTreeSet<Vec<usize>> = g.iter().map(|e| e.slot_map(n)).collect();
            assert_eq!(maps.len(), 2 * n);
            let lines: BTreeSet<BTreeSet<NodeId>> = polygon::lines(n)
                .unwrap()
                .iter()
                .map(|l| l.nodes.into_iter().collect())
                .collect();
            for e in g {
                let moved: BTreeSet<BTreeSet<NodeId>> = lines
                    .iter()
                    .map(|l| l.iter().map(|&x| e.map_node(x, n)).collect())
                    .collect();
                assert_eq!(moved, lines, "n = {n}, {e:?}");
            }
        }
    }

    #[test]
    fn square_orbit_has_eight_members() {
        let sq = construct(4).unwrap();
        let o = orbit(&sq).unwrap();
        assert_eq!(o.len(), 8);
        assert!(o.iter().all(|l| verify(l).unwrap().is_magic));
        assert_eq!(stabilizer_order(&sq).unwrap(), 1);
    }

    #[test]
    fn orbits_of_constructions() {
        assert_eq!(12 % orbit(&construct(6).unwrap()).unwrap().len(), 0);
        let o = orbit(&construct(8).unwrap()).unwrap();
        assert!(o.iter().all(|l| verify(l).unwrap().is_magic));
    }

    #[test]
    fn hexagon_fixture_matches_construction() {
        let a = canonical_form(&hexagon()).unwrap();
        let b = canonical_form(&construct(6).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(canonical_form(&a).unwrap(), a);
        assert_eq!(a.vertex(1), Some(1));
    }

    #[test]
    fn complement_of_magic_is_magic() {
        let c = complement(&construct(10).unwrap()).unwrap();
        assert!(verify(&c).unwrap().is_magic);
    }

    #[test]
    fn incomplete_labeling_refused() {
        let l = Labeling::empty(4).unwrap();
        assert!(apply(SymmetryElement::IDENTITY, &l).is_err());
        assert!(orbit(&l).is_err());
        assert!(canonical_form(&l).is_err());
    }
}
