//! Exhaustive backtracking enumeration of magic n-gons.
//!
//! Nodes are assigned in a fixed order chosen so that lines close as early as
//! possible. Whenever a node is the last open node of a line whose sum is
//! already known, its value is forced; every closed line is checked on the
//! spot. Two modes share the engine:
//!
//! * [`SearchMode::Exhaustive`] assumes nothing: the center ranges over all
//!   values and the common sum is fixed by the first line to close.
//! * [`SearchMode::Pruned`] fixes the center to `n + 1` and the sum to
//!   `3n + 3`, so every diagonal pairs values summing to `2n + 2`.
//!
//! With `up_to_symmetry` the search only visits canonical representatives
//! (`v1` is the smallest vertex value and `v2 < vn`) and recovers the total
//! from orbit sizes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::document::LabelingDocument;
use crate::error::{Error, Result};
use crate::polygon::{self, Labeling, NodeId};
use crate::symmetry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Pruned,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Pruned => "pruned",
        })
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "pruned" => Ok(SearchMode::Pruned),
            _ => Err(Error::domain(format!(
                "unknown search mode {s:?} (expected exhaustive or pruned)"
            ))),
        }
    }
}

/// Largest orders each mode accepts. These are runtime guards, not limits of
/// the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchCaps {
    pub exhaustive_max: usize,
    pub pruned_odd_max: usize,
    pub pruned_even_max: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            exhaustive_max: 6,
            pruned_odd_max: 7,
            pruned_even_max: 8,
        }
    }
}

impl SearchCaps {
    fn check(&self, n: usize, mode: SearchMode) -> Result<()> {
        let (cap, hint) = match mode {
            SearchMode::Exhaustive => (
                self.exhaustive_max,
                "use pruned mode or raise the exhaustive cap",
            ),
            SearchMode::Pruned if n % 2 == 1 => {
                (self.pruned_odd_max, "raise the pruned cap for odd n")
            }
            SearchMode::Pruned => (self.pruned_even_max, "raise the pruned cap for even n"),
        };
        if n > cap {
            return Err(Error::CapExceeded {
                mode: match mode {
                    SearchMode::Exhaustive => "exhaustive",
                    SearchMode::Pruned => "pruned",
                },
                n,
                cap,
                hint,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub up_to_symmetry: bool,
    /// Caps the number of emitted solutions; counting always runs to the end.
    pub solution_limit: Option<usize>,
    pub emit_solutions: bool,
    pub worker_count: usize,
    pub caps: SearchCaps,
}

impl SearchConfig {
    pub fn new(mode: SearchMode) -> Self {
        SearchConfig {
            mode,
            up_to_symmetry: false,
            solution_limit: None,
            emit_solutions: false,
            worker_count: 1,
            caps: SearchCaps::default(),
        }
    }

    pub fn exhaustive() -> Self {
        Self::new(SearchMode::Exhaustive)
    }

    pub fn pruned() -> Self {
        Self::new(SearchMode::Pruned)
    }

    pub fn up_to_symmetry(mut self, yes: bool) -> Self {
        self.up_to_symmetry = yes;
        self
    }

    pub fn emit(mut self, yes: bool) -> Self {
        self.emit_solutions = yes;
        self
    }

    pub fn workers(mut self, count: usize) -> Self {
        self.worker_count = count;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.solution_limit = limit;
        self
    }

    pub fn caps(mut self, caps: SearchCaps) -> Self {
        self.caps = caps;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub n: usize,
    pub mode: SearchMode,
    pub up_to_symmetry: bool,
    /// Number of complete magic labelings.
    pub total_count: u64,
    /// Number of classes under the dihedral group.
    pub class_count: u64,
    /// Classes mapped to themselves by `x -> 2n + 2 - x` (up to symmetry).
    pub self_complementary_classes: u64,
    pub nodes_explored: u64,
    /// Canonical forms, sorted, when emission was requested.
    pub solutions: Option<Vec<Labeling>>,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct ResultDocument {
    n: usize,
    mode: SearchMode,
    up_to_symmetry: bool,
    total_count: u64,
    class_count: u64,
    self_complementary_classes: u64,
    nodes_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<LabelingDocument>>,
}

impl EnumerationResult {
    /// Newline-terminated JSON. Wall time is left out so the document only
    /// depends on the input and mode.
    pub fn to_json(&self) -> String {
        let doc = ResultDocument {
            n: self.n,
            mode: self.mode,
            up_to_symmetry: self.up_to_symmetry,
            total_count: self.total_count,
            class_count: self.class_count,
            self_complementary_classes: self.self_complementary_classes,
            nodes_explored: self.nodes_explored,
            solutions: self.solutions.as_ref().map(|s| {
                s.iter()
                    .map(|l| LabelingDocument::from_labeling(l).expect("solutions are complete"))
                    .collect()
            }),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
        out.push('\n');
        out
    }
}

struct Engine {
    size: usize,
    n: usize,
    lines: Vec<[usize; 3]>,
    lines_of: Vec<Vec<usize>>,
    order: Vec<usize>,
    fixed_sum: Option<i64>,
    fixed_center: Option<i64>,
    break_symmetry: bool,
}

#[derive(Clone)]
struct State {
    values: Vec<i64>,
    used: Vec<bool>,
    sum: Option<i64>,
    depth: usize,
}

#[derive(Default)]
struct Tally {
    found: u64,
    nodes: u64,
    solutions: Vec<Vec<i64>>,
}

enum Candidates {
    Forced(i64),
    Free,
    Conflict,
}

/// Depth at which the tree is cut into independent subtrees for workers.
const SPLIT_DEPTH: usize = 4;

impl Engine {
    fn new(n: usize, mode: SearchMode, break_symmetry: bool) -> Result<Self> {
        let size = 2 * n + 1;
        let lines: Vec<[usize; 3]> = polygon::lines(n)?
            .iter()
            .map(|l| l.nodes.map(|node| node.slot(n)))
            .collect();
        let mut lines_of = vec![Vec::new(); size];
        for (id, line) in lines.iter().enumerate() {
            for &slot in line {
                lines_of[slot].push(id);
            }
        }
        let (fixed_sum, fixed_center) = match mode {
            SearchMode::Exhaustive => (None, None),
            SearchMode::Pruned => (
                Some(polygon::magic_sum(n)?),
                Some(polygon::center_value(n)?),
            ),
        };
        let order = assignment_order(n, &lines, &lines_of);
        Ok(Engine {
            size,
            n,
            lines,
            lines_of,
            order,
            fixed_sum,
            fixed_center,
            break_symmetry,
        })
    }

    fn root(&self) -> State {
        State {
            values: vec![0; self.size],
            used: vec![false; self.size + 1],
            sum: self.fixed_sum,
            depth: 0,
        }
    }

    fn candidates(&self, st: &State, slot: usize) -> Candidates {
        let Some(sum) = st.sum else {
            return Candidates::Free;
        };
        let mut forced = None;
        for &id in &self.lines_of[slot] {
            let mut rest = 0;
            let mut open = false;
            for &s in &self.lines[id] {
                if s != slot {
                    if st.values[s] == 0 {
                        open = true;
                    }
                    rest += st.values[s];
                }
            }
            if open {
                continue;
            }
            let v = sum - rest;
            match forced {
                Some(f) if f != v => return Candidates::Conflict,
                _ => forced = Some(v),
            }
        }
        match forced {
            Some(v) => Candidates::Forced(v),
            None => Candidates::Free,
        }
    }

    /// Values to try at `slot`, in increasing order.
    fn values_for(&self, st: &State, slot: usize) -> Vec<i64> {
        let fresh = |v: i64| v >= 1 && v as usize <= self.size && !st.used[v as usize];
        match self.candidates(st, slot) {
            Candidates::Conflict => Vec::new(),
            Candidates::Forced(v) => {
                if fresh(v) {
                    vec![v]
                } else {
                    Vec::new()
                }
            }
            Candidates::Free => match (slot, self.fixed_center) {
                (0, Some(c)) => {
                    if fresh(c) {
                        vec![c]
                    } else {
                        Vec::new()
                    }
                }
                _ => (1..=self.size as i64).filter(|&v| fresh(v)).collect(),
            },
        }
    }

    /// Checks every line through `slot` that just closed, fixing the common
    /// sum on first use, and the symmetry-breaking order on vertices.
    fn consistent(&self, st: &mut State, slot: usize) -> bool {
        for &id in &self.lines_of[slot] {
            let [a, b, c] = self.lines[id];
            let (x, y, z) = (st.values[a], st.values[b], st.values[c]);
            if x == 0 || y == 0 || z == 0 {
                continue;
            }
            let s = x + y + z;
            match st.sum {
                Some(t) if t != s => return false,
                Some(_) => {}
                None => st.sum = Some(s),
            }
        }
        !self.break_symmetry || self.symmetry_ok(st, slot)
    }

    fn symmetry_ok(&self, st: &State, slot: usize) -> bool {
        let n = self.n;
        if slot == 0 || slot > n {
            return true;
        }
        let v = &st.values;
        if slot == 1 {
            if (2..=n).any(|j| v[j] != 0 && v[j] < v[1]) {
                return false;
            }
        } else if v[1] != 0 && v[slot] < v[1] {
            return false;
        }
        if (slot == 2 || slot == n) && v[2] != 0 && v[n] != 0 && v[2] > v[n] {
            return false;
        }
        true
    }

    fn assign<F: FnMut(&Self, &mut State, &mut Tally)>(
        &self,
        st: &mut State,
        tally: &mut Tally,
        mut next: F,
    ) {
        let slot = self.order[st.depth];
        for v in self.values_for(st, slot) {
            tally.nodes += 1;
            let saved_sum = st.sum;
            st.values[slot] = v;
            st.used[v as usize] = true;
            if self.consistent(st, slot) {
                st.depth += 1;
                next(self, st, tally);
                st.depth -= 1;
            }
            st.values[slot] = 0;
            st.used[v as usize] = false;
            st.sum = saved_sum;
        }
    }

    fn descend(&self, st: &mut State, tally: &mut Tally) {
        if st.depth == self.size {
            tally.found += 1;
            tally.solutions.push(st.values.clone());
            return;
        }
        self.assign(st, tally, |e, st, t| e.descend(st, t));
    }

    fn prefixes(&self, st: &mut State, tally: &mut Tally, out: &mut Vec<State>) {
        if st.depth == SPLIT_DEPTH.min(self.size) {
            out.push(st.clone());
            return;
        }
        self.assign(st, tally, |e, st, t| e.prefixes(st, t, out));
    }
}

/// Center first, then vertices `v1, v2, ...`; after each choice every node
/// that has become the last open node of some line is appended.
fn assignment_order(n: usize, lines: &[[usize; 3]], lines_of: &[Vec<usize>]) -> Vec<usize> {
    let size = 2 * n + 1;
    let mut placed = vec![false; size];
    let mut order = Vec::with_capacity(size);
    let preference = std::iter::once(0).chain(1..size);
    for pick in preference {
        if placed[pick] {
            continue;
        }
        let mut queue = vec![pick];
        while let Some(slot) = queue.pop() {
            if placed[slot] {
                continue;
            }
            placed[slot] = true;
            order.push(slot);
            let mut closing = Vec::new();
            for &id in &lines_of[slot] {
                let open: Vec<usize> = lines[id].iter().copied().filter(|&s| !placed[s]).collect();
                if let [only] = open[..] {
                    closing.push(only);
                }
            }
            // Pushed in reverse so the lowest slot is assigned first.
            closing.sort_unstable_by(|a, b| b.cmp(a));
            queue.extend(closing);
        }
    }
    order
}

/// Counts every magic n-gon, optionally listing canonical forms.
pub fn enumerate(n: usize, config: &SearchConfig) -> Result<EnumerationResult> {
    enumerate_with_progress(n, config, |_, _| {})
}

/// As [`enumerate`], calling `progress(done, total)` as subtrees finish.
/// The callback may be invoked from worker threads.
pub fn enumerate_with_progress<P>(
    n: usize,
    config: &SearchConfig,
    progress: P,
) -> Result<EnumerationResult>
where
    P: Fn(usize, usize) + Sync,
{
    polygon::check_order(n)?;
    if config.worker_count == 0 {
        return Err(Error::domain("worker count must be positive"));
    }
    config.caps.check(n, config.mode)?;
    let started = Instant::now();

    let engine = Engine::new(n, config.mode, config.up_to_symmetry)?;
    let mut head = Tally::default();
    let mut prefixes = Vec::new();
    engine.prefixes(&mut engine.root(), &mut head, &mut prefixes);

    let workers = config.worker_count.min(prefixes.len().max(1));
    let done = AtomicUsize::new(0);
    let total = prefixes.len();
    let tallies: Vec<Tally> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (engine, prefixes, done, progress) = (&engine, &prefixes, &done, &progress);
                scope.spawn(move || {
                    let mut tally = Tally::default();
                    for prefix in prefixes.iter().skip(w).step_by(workers) {
                        let mut st = prefix.clone();
                        engine.descend(&mut st, &mut tally);
                        progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
                    }
                    tally
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    let mut found = 0;
    let mut nodes = head.nodes;
    let mut raw = Vec::new();
    for t in tallies {
        found += t.found;
        nodes += t.nodes;
        raw.extend(t.solutions);
    }

    let mut classes = BTreeSet::new();
    let mut total_count = 0u64;
    for slots in raw {
        let labeling = Labeling::from_slots(n, &slots)?;
        if config.up_to_symmetry {
            debug_assert_eq!(symmetry::canonical_form(&labeling)?, labeling);
            total_count += (2 * n / symmetry::stabilizer_order(&labeling)?) as u64;
            classes.insert(labeling);
        } else {
            classes.insert(symmetry::canonical_form(&labeling)?);
        }
    }
    if !config.up_to_symmetry {
        total_count = found;
    }

    let mut self_complementary = 0;
    for class in &classes {
        if symmetry::canonical_form(&symmetry::complement(class)?)? == *class {
            self_complementary += 1;
        }
    }

    let solutions = config.emit_solutions.then(|| {
        let limit = config.solution_limit.unwrap_or(usize::MAX);
        classes.iter().take(limit).cloned().collect()
    });

    Ok(EnumerationResult {
        n,
        mode: config.mode,
        up_to_symmetry: config.up_to_symmetry,
        total_count,
        class_count: classes.len() as u64,
        self_complementary_classes: self_complementary,
        nodes_explored: nodes,
        solutions,
        wall_time: started.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonexistenceReport {
    pub n: usize,
    pub total_count: u64,
    pub nodes_explored: u64,
    /// Total from an assumption-free exhaustive run, when `n` is within the
    /// exhaustive cap.
    pub exhaustive_total: Option<u64>,
    /// Set when any search found a solution; that would contradict the
    /// odd-order impossibility result and indicates a bug.
    pub inconsistent: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Confirms by pruned search that no magic n-gon exists for odd `n`.
pub fn verify_nonexistence(n: usize, caps: &SearchCaps) -> Result<NonexistenceReport> {
    polygon::check_order(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "nonexistence is only claimed for odd n, got {n}"
        )));
    }
    let started = Instant::now();
    let pruned = enumerate(n, &SearchConfig::pruned().caps(*caps))?;
    let exhaustive_total = if n <= caps.exhaustive_max {
        Some(enumerate(n, &SearchConfig::exhaustive().caps(*caps))?.total_count)
    } else {
        None
    };
    Ok(NonexistenceReport {
        n,
        total_count: pruned.total_count,
        nodes_explored: pruned.nodes_explored,
        inconsistent: pruned.total_count != 0 || exhaustive_total.is_some_and(|t| t != 0),
        exhaustive_total,
        wall_time: started.elapsed(),
    })
}

/// Node order used by the engine, exposed for diagnostics.
pub fn assignment_nodes(n: usize) -> Result<Vec<NodeId>> {
    let e = Engine::new(n, SearchMode::Pruned, false)?;
    Ok(e.order.iter().map(|&s| NodeId::from_slot(s, n)).collect())
}
