//! Command implementations behind the `magic-polygon` binary.
//!
//! Each command writes exactly one result document to `out`, diagnostics to
//! `err`, and returns the process exit code: [`EXIT_POSITIVE`] for a positive
//! mathematical result, [`EXIT_NEGATIVE`] for a negative one and
//! [`EXIT_USAGE`] for usage, parse or I/O errors.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::construct::{construct, range_partition_check};
use crate::document::LabelingDocument;
use crate::error::Error;
use crate::polygon::{verify, Labeling};
use crate::proofcheck::check_odd_contradiction;
use crate::render::render_svg;
use crate::search::{enumerate_with_progress, SearchConfig};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default upper end of the numeric sweep in `prove-odd`.
pub const DEFAULT_SWEEP_MAX: u64 = 10_000;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> bool {
    let result = match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    match result {
        Ok(()) => true,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            false
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Option<Labeling> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return None;
        }
    };
    match LabelingDocument::parse(&text).and_then(|d| d.to_labeling()) {
        Ok(l) => Some(l),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            None
        }
    }
}

pub fn cmd_construct(
    n: usize,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match construct(n) {
        Ok(labeling) => {
            let doc = LabelingDocument::from_labeling(&labeling).expect("complete");
            if emit(&doc.to_json(), output, out, err) {
                EXIT_POSITIVE
            } else {
                EXIT_USAGE
            }
        }
        Err(e @ Error::OddOrder(_)) => {
            let _ = writeln!(err, "{e}");
            EXIT_NEGATIVE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_verify(input: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(labeling) = load(input, err) else {
        return EXIT_USAGE;
    };
    let report = verify(&labeling).expect("parsed documents are complete");
    if !emit(&to_json(&report), None, out, err) {
        return EXIT_USAGE;
    }
    if report.is_magic {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    }
}

pub fn cmd_enumerate(
    n: usize,
    config: &SearchConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let _ = writeln!(
        err,
        "enumerating n = {n} ({} mode, {} worker(s){})",
        config.mode,
        config.worker_count,
        if config.up_to_symmetry {
            ", up to symmetry"
        } else {
            ""
        }
    );
    let result = match enumerate_with_progress(n, config, |_, _| {}) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let _ = writeln!(
        err,
        "done: {} labeling(s), {} class(es), {} nodes in {:.3} s",
        result.total_count,
        result.class_count,
        result.nodes_explored,
        result.wall_time.as_secs_f64()
    );
    if !emit(&result.to_json(), None, out, err) {
        return EXIT_USAGE;
    }
    if result.total_count > 0 {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    }
}

pub fn cmd_prove_odd(sweep_max: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = check_odd_contradiction(sweep_max);
    if !emit(&to_json(&report), None, out, err) {
        return EXIT_USAGE;
    }
    if report.fatal_inconsistency {
        let _ = writeln!(err, "error: proof check failed; see report");
        EXIT_NEGATIVE
    } else {
        EXIT_POSITIVE
    }
}

pub fn cmd_render(
    input: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let Some(labeling) = load(input, err) else {
        return EXIT_USAGE;
    };
    let svg = render_svg(&labeling).expect("parsed documents are complete");
    if emit(&svg, output, out, err) {
        EXIT_POSITIVE
    } else {
        EXIT_USAGE
    }
}

pub fn cmd_check_ranges(n: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match range_partition_check(n) {
        Ok(report) => {
            if !emit(&to_json(&report), None, out, err) {
                return EXIT_USAGE;
            }
            if report.passed {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut Vec<u8>, &mut Vec<u8>) -> i32) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = f(&mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_exit_codes() {
        let (code, out, _) = run(|o, e| cmd_construct(6, None, o, e));
        assert_eq!(code, 0);
        assert!(out.contains("\"center\": 7"));
        let (code, out, err) = run(|o, e| cmd_construct(5, None, o, e));
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert_eq!(err.trim(), "no magic 5-gon exists (odd n)");
        let (code, _, _) = run(|o, e| cmd_construct(2, None, o, e));
        assert_eq!(code, 2);
    }

    #[test]
    fn check_ranges_exit_codes() {
        assert_eq!(run(|o, e| cmd_check_ranges(8, o, e)).0, 0);
        assert_eq!(run(|o, e| cmd_check_ranges(6, o, e)).0, 2);
        assert_eq!(run(|o, e| cmd_check_ranges(9, o, e)).0, 2);
    }

    #[test]
    fn enumerate_keeps_progress_off_stdout() {
        let (code, out, err) = run(|o, e| cmd_enumerate(4, &SearchConfig::pruned(), o, e));
        assert_eq!(code, 0);
        assert!(err.contains("enumerating"));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["total_count"], 8);
        let (code, _, err) = run(|o, e| cmd_enumerate(12, &SearchConfig::pruned(), o, e));
        assert_eq!(code, 2);
        assert!(err.contains("cap"));
    }
}
