//! Test helpers shared by the integration targets.
//!
//! `brute_force` is deliberately independent of the library: it builds its
//! own line list and walks the rim in the order `v1, m1, v2, m2, ..., c`,
//! rejecting a partial labeling only when some line is complete and differs
//! from the first completed line. No value of the center or the sum is
//! assumed.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// A labeling as `(center, vertices, midpoints)`.
pub type Raw = (i64, Vec<i64>, Vec<i64>);

/// Node indices: `2(i-1)` is vertex i, `2(i-1)+1` is midpoint i, `2n` is the center.
fn oracle_lines(n: usize) -> Vec<[usize; 3]> {
    let v = |i: usize| 2 * (i % n);
    let m = |i: usize| 2 * (i % n) + 1;
    let c = 2 * n;
    let mut out: Vec<[usize; 3]> = (0..n).map(|i| [v(i), m(i), v(i + 1)]).collect();
    if n.is_multiple_of(2) {
        for i in 0..n / 2 {
            out.push([v(i), c, v(i + n / 2)]);
            out.push([m(i), c, m(i + n / 2)]);
        }
    } else {
        // Vertex i faces the side between vertices i+(n-1)/2 and i+(n+1)/2.
        for i in 0..n {
            out.push([v(i), c, m(i + (n - 1) / 2)]);
        }
    }
    out
}

struct Oracle {
    n: usize,
    lines: Vec<[usize; 3]>,
    /// Lines that become complete when node `p` (in placement order) is set.
    closing: Vec<Vec<usize>>,
    values: Vec<i64>,
    used: Vec<bool>,
    sum: Option<i64>,
    found: Vec<Raw>,
}

impl Oracle {
    fn go(&mut self, p: usize) {
        let size = 2 * self.n + 1;
        if p == size {
            let n = self.n;
            let c = self.values[2 * n];
            let v = (0..n).map(|i| self.values[2 * i]).collect();
            let m = (0..n).map(|i| self.values[2 * i + 1]).collect();
            self.found.push((c, v, m));
            return;
        }
        for x in 1..=size as i64 {
            if self.used[x as usize] {
                continue;
            }
            self.values[p] = x;
            let saved = self.sum;
            let mut ok = true;
            for &li in &self.closing[p] {
                let s: i64 = self.lines[li].iter().map(|&q| self.values[q]).sum();
                match self.sum {
                    None => self.sum = Some(s),
                    Some(t) if t != s => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if ok {
                self.used[x as usize] = true;
                self.go(p + 1);
                self.used[x as usize] = false;
            }
            self.sum = saved;
        }
    }
}

/// Every magic labeling of the n-gon, found without any pruning beyond
/// "completed lines agree".
pub fn brute_force(n: usize) -> Vec<Raw> {
    let lines = oracle_lines(n);
    let mut closing = vec![Vec::new(); 2 * n + 1];
    for (li, l) in lines.iter().enumerate() {
        closing[*l.iter().max().unwrap()].push(li);
    }
    let mut o = Oracle {
        n,
        lines,
        closing,
        values: vec![0; 2 * n + 1],
        used: vec![false; 2 * n + 2],
        sum: None,
        found: Vec::new(),
    };
    o.go(0);
    o.found.sort();
    o.found
}

/// The 8 symmetries of the 3x3 magic square: it has exactly one solution up
/// to rotation and reflection, and its stabilizer is trivial.
pub const MAGIC_SQUARE_SYMMETRY_COUNT: usize = 8;
