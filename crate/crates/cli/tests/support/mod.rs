#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// One CLI invocation with its expected exit status; stdout is compared
/// byte for byte with `tests/golden/<name>`.
pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> GoldenCase {
    GoldenCase { name, args, exit }
}

pub const CASES: &[GoldenCase] = &[
    case("monoid_analyze_n.json", &["--json", "monoid", "analyze", "-i", "tests/data/monoid_n.json"], 0),
    case("monoid_analyze_skew.json", &["--json", "monoid", "analyze", "-i", "tests/data/monoid_skew.json"], 0),
    case("monoid_analyze_half_plane.json", &["--json", "monoid", "analyze", "-i", "tests/data/monoid_half_plane.json"], 0),
    case("monoid_reduce_half_plane.json", &["--json", "monoid", "reduce", "-i", "tests/data/monoid_half_plane.json"], 0),
    case("monoid_reduce_n.json", &["--json", "monoid", "reduce", "-i", "tests/data/monoid_n.json"], 0),
    case(
        "algebra_bbplus_cross.json",
        &["--json", "algebra", "bbplus", "-i", "tests/data/cross.json", "-m", "tests/data/monoid_n.json"],
        0,
    ),
    case(
        "algebra_bbplus_quadric_cone.json",
        &["--json", "algebra", "bbplus", "-i", "tests/data/quadric_cone.json", "-m", "tests/data/monoid_n.json"],
        0,
    ),
    case("algebra_fixed_quadric_cone.json", &["--json", "algebra", "fixed", "-i", "tests/data/quadric_cone.json"], 0),
    case("algebra_fixed_cross.json", &["--json", "algebra", "fixed", "-i", "tests/data/cross.json"], 0),
    case(
        "algebra_check_cross.json",
        &["--json", "algebra", "check", "-i", "tests/data/cross.json", "-m", "tests/data/monoid_n.json"],
        0,
    ),
    case(
        "algebra_check_quadric_cone.json",
        &["--json", "algebra", "check", "-i", "tests/data/quadric_cone.json", "-m", "tests/data/monoid_n.json"],
        0,
    ),
    case(
        "algebra_truncate_double_line.json",
        &["--json", "algebra", "truncate", "-i", "tests/data/double_line.json", "-m", "tests/data/monoid_n.json", "-n", "2"],
        0,
    ),
    case(
        "algebra_stabilize_double_line.json",
        &["--json", "algebra", "stabilize", "-i", "tests/data/double_line.json", "-m", "tests/data/monoid_n.json", "-w", "2"],
        0,
    ),
    case(
        "algebra_algebraize_double_line.json",
        &["--json", "algebra", "algebraize", "-i", "tests/data/double_line.json", "-m", "tests/data/monoid_n.json", "--bound", "4"],
        0,
    ),
    case("hilb_fixed_points_3.json", &["--json", "hilb", "fixed-points", "-d", "3"], 0),
    case("hilb_tangent_2.json", &["--json", "hilb", "tangent", "-d", "2"], 0),
    case("hilb_cells_2.json", &["--json", "hilb", "cells", "-d", "2", "-w", "1,3"], 0),
    case("hilb_cells_3_default.json", &["--json", "hilb", "cells", "-d", "3"], 0),
    case("hilb_intersect_2.json", &["--json", "hilb", "intersect", "-d", "2", "-w", "1,3", "-w", "3,1"], 0),
    case("hilb_poincare_2.json", &["--json", "hilb", "poincare", "-d", "2", "-w", "1,3"], 0),
    case("hilb_poincare_4.json", &["--json", "hilb", "poincare", "-d", "4"], 0),
    // failure paths
    case("error_unknown_variable.json", &["--json", "algebra", "fixed", "-i", "tests/data/bad_relation.json"], 1),
    case(
        "error_monoid_has_units.json",
        &["--json", "algebra", "bbplus", "-i", "tests/data/cross.json", "-m", "tests/data/monoid_z.json"],
        1,
    ),
    case("error_non_generic_weight.json", &["--json", "hilb", "poincare", "-d", "2", "-w", "1,1"], 1),
    case("error_negative_colength.json", &["--json", "hilb", "cells", "-d", "-1"], 1),
    // human-readable renderings
    case("hilb_poincare_4.txt", &["hilb", "poincare", "-d", "4"], 0),
    case("algebra_bbplus_quadric_cone.txt", &["algebra", "bbplus", "-i", "tests/data/quadric_cone.json", "-m", "tests/data/monoid_n.json"], 0),
    case("monoid_analyze_skew.txt", &["monoid", "analyze", "-i", "tests/data/monoid_skew.json"], 0),
];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(name)
}

pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: String,
    pub exit: i32,
}

pub fn run_cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bbcells"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    Run {
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        exit: out.status.code().unwrap_or(-1),
    }
}

/// Runs one case; with `BBCELLS_BLESS=1` the golden file is rewritten instead.
pub fn check_case(c: &GoldenCase) -> Result<(), String> {
    let run = run_cli(c.args);
    if run.exit != c.exit {
        return Err(format!("{}: exit {} (expected {}), stderr: {}", c.name, run.exit, c.exit, run.stderr));
    }
    let path = golden_path(c.name);
    if std::env::var_os("BBCELLS_BLESS").is_some() {
        std::fs::write(&path, &run.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != run.stdout {
        return Err(format!(
            "{}: output differs from golden\n--- expected\n{}\n--- actual\n{}",
            c.name,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&run.stdout)
        ));
    }
    Ok(())
}
