//! Node layout, line geometry and verification of the magic property.
//!
//! An n-gon carries `2n + 1` nodes: the vertices `v1..vn` (clockwise), the
//! edge midpoints `m1..mn` where `mi` sits between `vi` and `v(i+1)`, and the
//! center `c`. Internally a labeling is stored in *slot order*
//! `(c, v1..vn, m1..mn)`, which is also the order used for canonical
//! comparisons.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Smallest polygon order for which the layout is defined.
pub const MIN_ORDER: usize = 3;

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n < MIN_ORDER {
        return Err(Error::OrderTooSmall(n));
    }
    Ok(())
}

/// Reduces a possibly out-of-range 1-based index into `1..=n`.
pub(crate) fn wrap(index: i64, n: usize) -> usize {
    let n = n as i64;
    ((index - 1).rem_euclid(n) + 1) as usize
}

/// The common line sum of every magic n-gon, `3n + 3`.
pub fn magic_sum(n: usize) -> Result<i64> {
    check_order(n)?;
    Ok(3 * n as i64 + 3)
}

/// The value every magic n-gon carries at its center, `n + 1`.
pub fn center_value(n: usize) -> Result<i64> {
    check_order(n)?;
    Ok(n as i64 + 1)
}

/// A position in the wheel layout. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeId {
    Vertex(usize),
    Midpoint(usize),
    Center,
}

impl NodeId {
    /// Position of this node in slot order `(c, v1..vn, m1..mn)`.
    pub fn slot(self, n: usize) -> usize {
        match self {
            NodeId::Center => 0,
            NodeId::Vertex(i) => i,
            NodeId::Midpoint(i) => n + i,
        }
    }

    pub fn from_slot(slot: usize, n: usize) -> NodeId {
        match slot {
            0 => NodeId::Center,
            s if s <= n => NodeId::Vertex(s),
            s => NodeId::Midpoint(s - n),
        }
    }

    pub fn is_valid(self, n: usize) -> bool {
        match self {
            NodeId::Center => true,
            NodeId::Vertex(i) | NodeId::Midpoint(i) => (1..=n).contains(&i),
        }
    }

    /// All `2n + 1` nodes in slot order.
    pub fn all(n: usize) -> impl Iterator<Item = NodeId> {
        (0..2 * n + 1).map(move |s| NodeId::from_slot(s, n))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Vertex(i) => write!(f, "v{i}"),
            NodeId::Midpoint(i) => write!(f, "m{i}"),
            NodeId::Center => f.write_str("c"),
        }
    }
}

impl FromStr for NodeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("invalid node name {s:?}"));
        if s == "c" {
            return Ok(NodeId::Center);
        }
        let (kind, index) = s.split_at(s.len().min(1));
        let index: usize = index.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match kind {
            "v" => Ok(NodeId::Vertex(index)),
            "m" => Ok(NodeId::Midpoint(index)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for NodeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    Side,
    Diagonal,
}

/// Three nodes that must share the magic sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Line {
    pub kind: LineKind,
    pub nodes: [NodeId; 3],
}

impl Line {
    pub fn contains(&self, node: NodeId) -> bool {
        self.nodes.contains(&node)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.nodes;
        write!(f, "({a},{b},{c})")
    }
}

/// The diagonal partner of vertex `i` for odd `n`: the midpoint of the
/// opposite side.
pub fn odd_diagonal_partner(i: usize, n: usize) -> usize {
    wrap((i + (n - 1) / 2) as i64, n)
}

/// All `2n` lines of an n-gon: the `n` sides `(vi, mi, v(i+1))` followed by
/// the `n` diagonals through the center.
///
/// For even `n` the diagonals join opposite vertices `(vi, c, v(i+n/2))` and
/// then opposite midpoints `(mi, c, m(i+n/2))`, each for `i` in `1..=n/2`.
/// For odd `n` each vertex is joined to the midpoint of the opposite side,
/// `(vi, c, m(i+(n-1)/2))`.
pub fn lines(n: usize) -> Result<Vec<Line>> {
    check_order(n)?;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        out.push(Line {
            kind: LineKind::Side,
            nodes: [
                NodeId::Vertex(i),
                NodeId::Midpoint(i),
                NodeId::Vertex(wrap(i as i64 + 1, n)),
            ],
        });
    }
    let diagonal = |a, b| Line {
        kind: LineKind::Diagonal,
        nodes: [a, NodeId::Center, b],
    };
    if n.is_multiple_of(2) {
        let half = n / 2;
        for i in 1..=half {
            out.push(diagonal(NodeId::Vertex(i), NodeId::Vertex(i + half)));
        }
        for i in 1..=half {
            out.push(diagonal(NodeId::Midpoint(i), NodeId::Midpoint(i + half)));
        }
    } else {
        for i in 1..=n {
            out.push(diagonal(
                NodeId::Vertex(i),
                NodeId::Midpoint(odd_diagonal_partner(i, n)),
            ));
        }
    }
    Ok(out)
}

/// An assignment of integers to the nodes of an n-gon, possibly partial.
///
/// Values are 64-bit signed integers; line sums stay exact for `n <= 10^6`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    n: usize,
    values: Vec<Option<i64>>,
}

impl Labeling {
    /// An n-gon with no node assigned.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Labeling {
            n,
            values: vec![None; 2 * n + 1],
        })
    }

    /// A complete labeling from its center, vertices `v1..vn` and midpoints
    /// `m1..mn`.
    pub fn from_parts(n: usize, center: i64, vertices: &[i64], midpoints: &[i64]) -> Result<Self> {
        check_order(n)?;
        if vertices.len() != n || midpoints.len() != n {
            return Err(Error::domain(format!(
                "expected {n} vertices and {n} midpoints, got {} and {}",
                vertices.len(),
                midpoints.len()
            )));
        }
        let values = std::iter::once(center)
            .chain(vertices.iter().copied())
            .chain(midpoints.iter().copied())
            .map(Some)
            .collect();
        Ok(Labeling { n, values })
    }

    /// A complete labeling from values in slot order `(c, v1..vn, m1..mn)`.
    pub fn from_slots(n: usize, slots: &[i64]) -> Result<Self> {
        check_order(n)?;
        if slots.len() != 2 * n + 1 {
            return Err(Error::domain(format!(
                "expected {} slot values, got {}",
                2 * n + 1,
                slots.len()
            )));
        }
        Ok(Labeling {
            n,
            values: slots.iter().copied().map(Some).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, node: NodeId) -> Option<i64> {
        if !node.is_valid(self.n) {
            return None;
        }
        self.values[node.slot(self.n)]
    }

    pub fn set(&mut self, node: NodeId, value: i64) -> Result<()> {
        if !node.is_valid(self.n) {
            return Err(Error::domain(format!(
                "node {node} does not exist in a {}-gon",
                self.n
            )));
        }
        self.values[node.slot(self.n)] = Some(value);
        Ok(())
    }

    pub fn center(&self) -> Option<i64> {
        self.values[0]
    }

    pub fn vertex(&self, i: usize) -> Option<i64> {
        self.get(NodeId::Vertex(i))
    }

    pub fn midpoint(&self, i: usize) -> Option<i64> {
        self.get(NodeId::Midpoint(i))
    }

    /// Values in slot order; `None` marks an unassigned node.
    pub fn slots(&self) -> &[Option<i64>] {
        &self.values
    }

    pub fn vertices(&self) -> &[Option<i64>] {
        &self.values[1..=self.n]
    }

    pub fn midpoints(&self) -> &[Option<i64>] {
        &self.values[self.n + 1..]
    }

    /// Slot-order values when every node is assigned.
    pub fn complete_slots(&self) -> Option<Vec<i64>> {
        self.values.iter().copied().collect()
    }

    pub fn is_complete(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn missing_nodes(&self) -> Vec<NodeId> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(s, _)| NodeId::from_slot(s, self.n))
            .collect()
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::Incomplete {
                missing: self.missing_nodes(),
            })
        }
    }

    /// True when the labeling is complete and its values are exactly
    /// `{1, ..., 2n + 1}`.
    pub fn is_permutation(&self) -> bool {
        let size = self.values.len();
        let mut seen = vec![false; size + 1];
        for v in &self.values {
            match *v {
                Some(v) if v >= 1 && v as usize <= size && !seen[v as usize] => {
                    seen[v as usize] = true
                }
                _ => return false,
            }
        }
        true
    }

    fn value_of(&self, node: NodeId) -> i64 {
        self.values[node.slot(self.n)].expect("labeling checked complete")
    }

    fn line_sum(&self, line: &Line) -> i64 {
        line.nodes
            .iter()
            .fold(0i64, |acc, &node| acc.saturating_add(self.value_of(node)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineSum {
    pub line: Line,
    pub sum: i64,
}

/// One reason a labeling fails to be magic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A line whose sum differs from the most common line sum.
    LineSum { line: Line, sum: i64, expected: i64 },
    /// A value in `1..=2n+1` used by more than one node.
    DuplicateValue { value: i64, nodes: Vec<NodeId> },
    /// A value outside `1..=2n+1`.
    OutOfRange { node: NodeId, value: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub is_permutation: bool,
    pub line_sums: Vec<LineSum>,
    pub common_sum: Option<i64>,
    pub is_magic: bool,
    pub violations: Vec<Violation>,
}

/// Checks a complete labeling against the magic property in `O(n)`.
pub fn verify(labeling: &Labeling) -> Result<VerificationReport> {
    labeling.require_complete()?;
    let n = labeling.n;
    let size = 2 * n + 1;
    let mut violations = Vec::new();

    let mut holders: Vec<Vec<NodeId>> = vec![Vec::new(); size + 1];
    for node in NodeId::all(n) {
        let value = labeling.value_of(node);
        if value >= 1 && value as usize <= size {
            holders[value as usize].push(node);
        } else {
            violations.push(Violation::OutOfRange { node, value });
        }
    }
    for (value, nodes) in holders.into_iter().enumerate() {
        if nodes.len() > 1 {
            violations.push(Violation::DuplicateValue {
                value: value as i64,
                nodes,
            });
        }
    }
    let is_permutation = violations.is_empty();

    let line_sums: Vec<LineSum> = lines(n)?
        .into_iter()
        .map(|line| LineSum {
            sum: labeling.line_sum(&line),
            line,
        })
        .collect();

    let first = line_sums[0].sum;
    let common_sum = line_sums.iter().all(|ls| ls.sum == first).then_some(first);
    if common_sum.is_none() {
        let expected = modal_sum(&line_sums);
        violations.extend(line_sums.iter().filter(|ls| ls.sum != expected).map(|ls| {
            Violation::LineSum {
                line: ls.line,
                sum: ls.sum,
                expected,
            }
        }));
    }

    Ok(VerificationReport {
        n,
        is_permutation,
        is_magic: is_permutation && common_sum.is_some(),
        line_sums,
        common_sum,
        violations,
    })
}

/// Most frequent line sum; ties go to the sum that appears first.
fn modal_sum(line_sums: &[LineSum]) -> i64 {
    let mut counts: Vec<(i64, usize)> = Vec::new();
    for ls in line_sums {
        match counts.iter_mut().find(|(s, _)| *s == ls.sum) {
            Some((_, c)) => *c += 1,
            None => counts.push((ls.sum, 1)),
        }
    }
    let best = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
    counts
        .into_iter()
        .find(|&(_, c)| c == best)
        .map(|(s, _)| s)
        .unwrap_or_default()
}
