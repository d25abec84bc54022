//! Mechanical check of the odd-order impossibility argument.
//!
//! Write `n = 2k + 1`. With center `2k + 2` and magic sum `6k + 6`, every
//! diagonal pairs two values summing to `4k + 4`, so the pair `(1, 4k + 3)`
//! must sit on some diagonal `x - c - y` where `x` is a vertex and `y` the
//! midpoint of the opposite side `a - y - b`. Around `x` the sides are
//! `d - e - x` and `x - f - g`, and `e`, `f` are themselves the far ends of the
//! diagonals through `b` and `a`. Either placement of the pair gives five
//! linear equations in `a, b, d, e, f, g`:
//!
//! | placement   | `d+e`, `f+g` | `a+b`    | `b+e`, `a+f` |
//! |-------------|--------------|----------|--------------|
//! | `x = 1`     | `6k + 5`     | `2k + 3` | `4k + 4`     |
//! | `x = 4k+3`  | `2k + 3`     | `6k + 5` | `4k + 4`     |
//!
//! Both systems are row-reduced over the field of rational functions in `k`,
//! which settles every `k` at once; `e - g = 0` then lies in the row space,
//! so two distinct nodes would share a value. A sweep over concrete `k`,
//! reduced over plain rationals, cross-checks the symbolic result.

pub mod linalg;
pub mod poly;

use serde::Serialize;

use linalg::{rref, Field, Rref};
use poly::{rational, KPolynomial, Rational, RationalFunction};

/// Column names of the augmented matrix, constants last.
pub const VARIABLES: [&str; 6] = ["a", "b", "d", "e", "f", "g"];

const E: usize = 3;
const G: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OddCase {
    /// The vertex end of the diagonal holds 1.
    XEqualsOne,
    /// The vertex end of the diagonal holds `4k + 3 = 2n + 1`.
    XEqualsMax,
}

impl OddCase {
    pub const ALL: [OddCase; 2] = [OddCase::XEqualsOne, OddCase::XEqualsMax];

    /// Equations as `(variable indices, slope, intercept)` meaning
    /// `sum of variables = slope * k + intercept`, in matrix row order.
    fn equations(self) -> [([usize; 2], i64, i64); 5] {
        let (sides, across) = match self {
            OddCase::XEqualsOne => ((6, 5), (2, 3)),
            OddCase::XEqualsMax => ((2, 3), (6, 5)),
        };
        [
            ([2, 3], sides.0, sides.1),   // d + e
            ([4, 5], sides.0, sides.1),   // f + g
            ([0, 1], across.0, across.1), // a + b
            ([1, 3], 4, 4),               // b + e
            ([0, 4], 4, 4),               // a + f
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystemSpec {
    pub case: OddCase,
    pub variables: [&'static str; 6],
    /// Five augmented rows of seven entries.
    pub rows: Vec<Vec<RationalFunction>>,
}

impl LinearSystemSpec {
    pub fn describe(&self) -> Vec<String> {
        self.case
            .equations()
            .iter()
            .map(|([i, j], s, c)| {
                format!(
                    "{}+{} = {}",
                    VARIABLES[*i],
                    VARIABLES[*j],
                    KPolynomial::linear(*s, *c)
                )
            })
            .collect()
    }
}

pub fn build_system(case: OddCase) -> LinearSystemSpec {
    let rows = case
        .equations()
        .iter()
        .map(|(vars, slope, intercept)| {
            let mut row = vec![RationalFunction::constant(0); 7];
            for &v in vars {
                row[v] = RationalFunction::constant(1);
            }
            row[6] = RationalFunction::linear(*slope, *intercept);
            row
        })
        .collect();
    LinearSystemSpec {
        case,
        variables: VARIABLES,
        rows,
    }
}

/// The same system with `k` fixed, built directly over the rationals.
pub fn numeric_system(case: OddCase, k: i64) -> Vec<Vec<Rational>> {
    case.equations()
        .iter()
        .map(|(vars, slope, intercept)| {
            let mut row = vec![rational(0); 7];
            for &v in vars {
                row[v] = rational(1);
            }
            row[6] = rational(slope * k + intercept);
            row
        })
        .collect()
}

/// `e - g = 0` as an augmented row.
fn e_minus_g<F: Field>() -> Vec<F> {
    let mut v = vec![F::zero(); 7];
    v[E] = F::one();
    v[G] = F::zero().sub(&F::one());
    v
}

fn forces_e_equals_g<F: Field>(r: &Rref<F>) -> bool {
    r.is_consistent() && r.contains(&e_minus_g::<F>())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub case: OddCase,
    pub equations: Vec<String>,
    /// Reduced augmented matrix, entries rendered as polynomials in `k`.
    pub rref: Vec<Vec<String>>,
    /// 1-based pivot columns.
    pub pivots: Vec<usize>,
    pub free_variables: Vec<&'static str>,
    pub pole_conditions: Vec<String>,
    pub consistent: bool,
    pub e_equals_g_forced: bool,
    /// Present when the case is ruled out.
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub k_max: u64,
    pub checked: u64,
    pub agreeing: u64,
    /// `(case, k)` pairs where the numeric reduction disagreed with the
    /// symbolic one or failed to force `e = g`; at most 20 are kept.
    pub disagreements: Vec<(OddCase, u64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofReport {
    pub cases: Vec<CaseReport>,
    pub sweep: SweepReport,
    pub all_cases_forced: bool,
    pub conclusion: String,
    /// Set when any check failed. That points to a bug in this checker.
    pub fatal_inconsistency: bool,
}

pub fn reduce_case(case: OddCase) -> Rref<RationalFunction> {
    rref(&build_system(case).rows)
}

fn case_report(case: OddCase) -> (CaseReport, Rref<RationalFunction>) {
    let system = build_system(case);
    let reduced = rref(&system.rows);
    let consistent = reduced.is_consistent();
    let forced = forces_e_equals_g(&reduced);
    let free_variables = (0..6)
        .filter(|c| !reduced.pivots.contains(c))
        .map(|c| VARIABLES[c])
        .collect();
    let report = CaseReport {
        case,
        equations: system.describe(),
        rref: reduced
            .matrix
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
        pivots: reduced.pivots.iter().map(|p| p + 1).collect(),
        free_variables,
        pole_conditions: reduced
            .pole_conditions
            .iter()
            .map(ToString::to_string)
            .collect(),
        consistent,
        e_equals_g_forced: forced,
        contradiction: forced.then(|| {
            "e and g are distinct nodes, but every solution gives them the same value; \
             a magic labeling uses each of 1..2n+1 exactly once"
                .to_string()
        }),
    };
    (report, reduced)
}

fn evaluated(symbolic: &Rref<RationalFunction>, k: &Rational) -> Option<Vec<Vec<Rational>>> {
    symbolic
        .matrix
        .iter()
        .map(|row| row.iter().map(|x| x.eval(k)).collect())
        .collect()
}

fn sweep_one(symbolic: &[Rref<RationalFunction>], k: u64) -> Vec<(OddCase, bool)> {
    let kq = rational(k as i64);
    OddCase::ALL
        .iter()
        .zip(symbolic)
        .map(|(case, sym)| {
            let numeric = rref(&numeric_system(*case, k as i64));
            let agrees = forces_e_equals_g(&numeric)
                && numeric.pivots == sym.pivots
                && evaluated(sym, &kq).as_ref() == Some(&numeric.matrix);
            (*case, agrees)
        })
        .collect()
}

/// Splits `1..=k_max` into contiguous blocks, one per thread, and merges the
/// outcomes in `k` order.
fn sweep(symbolic: &[Rref<RationalFunction>], k_max: u64) -> SweepReport {
    let threads = std::thread::available_parallelism()
        .map_or(1, |p| p.get() as u64)
        .clamp(1, k_max.max(1));
    let block = k_max.div_ceil(threads);
    let outcomes: Vec<Vec<(u64, OddCase, bool)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let lo = t * block + 1;
                let hi = ((t + 1) * block).min(k_max);
                scope.spawn(move || {
                    (lo..=hi)
                        .flat_map(|k| {
                            sweep_one(symbolic, k)
                                .into_iter()
                                .map(move |(case, ok)| (k, case, ok))
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    let mut report = SweepReport {
        k_max,
        checked: 0,
        agreeing: 0,
        disagreements: Vec::new(),
    };
    for (k, case, ok) in outcomes.into_iter().flatten() {
        report.checked += 1;
        if ok {
            report.agreeing += 1;
        } else if report.disagreements.len() < 20 {
            report.disagreements.push((case, k));
        }
    }
    report
}

/// Reduces both placement cases symbolically, then re-reduces each at
/// `k = 1..=sweep_max` over the rationals (`sweep_max = 0` skips the sweep).
pub fn check_odd_contradiction(sweep_max: u64) -> ProofReport {
    let (cases, symbolic): (Vec<CaseReport>, Vec<Rref<RationalFunction>>) =
        OddCase::ALL.iter().map(|&c| case_report(c)).unzip();

    let sweep = sweep(&symbolic, sweep_max);
    let all_cases_forced = cases.iter().all(|c| c.e_equals_g_forced);
    let sweep_ok = sweep.agreeing == sweep.checked;
    let conclusion = if all_cases_forced {
        "the pair (1, 4k+3) cannot be placed on any diagonal, so no magic n-gon exists for odd n"
    } else {
        "inconclusive: some placement does not force e = g"
    };
    ProofReport {
        fatal_inconsistency: !(all_cases_forced && sweep_ok),
        cases,
        sweep,
        all_cases_forced,
        conclusion: conclusion.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[i64], rhs: RationalFunction) -> Vec<RationalFunction> {
        let mut r: Vec<RationalFunction> = entries
            .iter()
            .map(|&x| RationalFunction::constant(x))
            .collect();
        r.push(rhs);
        r
    }

    #[test]
    fn case_one_rows() {
        let s = build_system(OddCase::XEqualsOne);
        assert_eq!(s.rows.len(), 5);
        assert!(s.rows.iter().all(|r| r.len() == 7));
        assert_eq!(
            s.rows[0],
            row(&[0, 0, 1, 1, 0, 0], RationalFunction::linear(6, 5))
        );
        assert_eq!(
            s.rows[2],
            row(&[1, 1, 0, 0, 0, 0], RationalFunction::linear(2, 3))
        );
    }

    #[test]
    fn case_two_rows() {
        let s = build_system(OddCase::XEqualsMax);
        assert_eq!(
            s.rows[2],
            row(&[1, 1, 0, 0, 0, 0], RationalFunction::linear(6, 5))
        );
        assert_eq!(s.rows[0][6], RationalFunction::linear(2, 3));
        assert_eq!(s.describe()[4], "a+f = 4k+4");
    }

    #[test]
    fn case_one_reduction() {
        let r = reduce_case(OddCase::XEqualsOne);
        assert_eq!(
            r.matrix[0],
            row(&[1, 0, 0, 0, 0, -1], RationalFunction::linear(-2, -1))
        );
        assert_eq!(
            r.matrix[3],
            row(&[0, 0, 0, 1, 0, -1], RationalFunction::constant(0))
        );
        assert_eq!(r.pivots, [0, 1, 2, 3, 4]);
        assert!(r.pole_conditions.is_empty());
    }

    #[test]
    fn numeric_case_one_at_k1() {
        let r = rref(&numeric_system(OddCase::XEqualsOne, 1));
        assert!(forces_e_equals_g(&r));
        assert_eq!(r.matrix[0][6], rational(-3));
    }

    #[test]
    fn report_small_sweep() {
        let rep = check_odd_contradiction(10);
        assert!(rep.all_cases_forced);
        assert!(!rep.fatal_inconsistency);
        assert_eq!(rep.sweep.checked, 20);
        assert_eq!(rep.sweep.agreeing, 20);
        assert_eq!(rep.cases[0].free_variables, ["g"]);
        assert_eq!(rep.cases[0].rref[0][6], "-2k-1");
    }

    #[test]
    fn sweep_can_be_skipped() {
        let rep = check_odd_contradiction(0);
        assert_eq!(rep.sweep.checked, 0);
        assert!(!rep.fatal_inconsistency);
    }

    #[test]
    fn unrelated_system_does_not_force() {
        // Dropping the b+e row leaves e free relative to g.
        let mut rows = build_system(OddCase::XEqualsOne).rows;
        rows.remove(3);
        assert!(!forces_e_equals_g(&rref(&rows)));
    }
}
