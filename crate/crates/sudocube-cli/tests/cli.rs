//! End-to-end tests of the binary: exact report bytes, exit codes, stdin
//! handling, determinism across runs and `--jobs` settings.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sudocube"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

const VALID_2: &str = "#sudocube n=2\n12\n34\n\n43\n21\n";
const INVALID_2: &str = "#sudocube n=2\n12\n34\n\n34\n12\n";

#[test]
fn count_reports_census() {
    assert_eq!(stdout(&["count", "--size", "3"]), "base=40\ntotal=14515200\n");
    assert_eq!(stdout(&["count", "--size", "2"]), "base=1\ntotal=24\n");
    assert_eq!(stdout(&["count", "--size", "1"]), "base=1\ntotal=1\n");
}

#[test]
fn count_rejects_unsupported_size() {
    let out = run(&["count", "--size", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn orbits_reports_two_classes() {
    let text = stdout(&["orbits", "--size", "3"]);
    assert!(text.starts_with("classes=2\nsizes=4,36\n"), "got: {text}");
    assert_eq!(stdout(&["orbits", "--size", "2"]), "classes=1\nsizes=1\nclass_size=1 representative=0\n");
}

#[test]
fn classify_reports_case_split() {
    assert_eq!(
        stdout(&["classify"]),
        "base=40\ncase1=16\ncase2=12\ncase3=12\n"
    );
}

#[test]
fn sudo_cases_report_and_grids() {
    let text = stdout(&["sudo-cases"]);
    assert!(text.starts_with("count=10\ncase1=4\ncase2=3\ncase3=3\n"));
    assert_eq!(text.matches("index=").count(), 10);
    assert_eq!(text.matches("#sudocube n=3").count(), 10);
}

#[test]
fn placements_match_formula() {
    assert_eq!(stdout(&["placements", "--size", "2"]), "placements=4\nenumerated=4\n");
    assert_eq!(stdout(&["placements", "--size", "4"]), "placements=576\nenumerated=576\n");
}

#[test]
fn enumerate_prints_all_base_grids() {
    let text = stdout(&["enumerate", "--size", "3"]);
    assert!(text.starts_with("count=40\n"));
    assert_eq!(text.matches("#sudocube n=3").count(), 40);
    let kurve = stdout(&["enumerate", "--size", "3", "--format", "kurve"]);
    assert_eq!(kurve.matches("#sudokurve n=3").count(), 40);
}

#[test]
fn check_validates_and_sets_exit_code() {
    let ok = run_with_stdin(&["check", "--input", "-"], VALID_2);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "valid=true\ncomplete=true\n"
    );

    let bad = run_with_stdin(&["check", "--input", "-"], INVALID_2);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).starts_with("valid=false"));

    let garbage = run_with_stdin(&["check", "--input", "-"], "not a grid\n");
    assert_eq!(garbage.status.code(), Some(1));
}

#[test]
fn solve_exit_codes_cover_unique_none_multiple() {
    // Unique: a complete grid is its own unique solution.
    let unique = run_with_stdin(&["solve", "--input", "-"], VALID_2);
    assert_eq!(unique.status.code(), Some(0));
    let text = String::from_utf8_lossy(&unique.stdout);
    assert!(text.starts_with("status=unique\ncount=1\n"));

    // Multiple: the empty grid.
    let empty = "#sudocube n=2\n..\n..\n\n..\n..\n";
    let multiple = run_with_stdin(&["solve", "--input", "-"], empty);
    assert_eq!(multiple.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&multiple.stdout).starts_with("status=multiple\ncount=24\n"));

    // None: two 1s in one bent row.
    let none = "#sudocube n=2\n1.\n..\n\n.1\n..\n";
    let no_solution = run_with_stdin(&["solve", "--input", "-"], none);
    assert_eq!(no_solution.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&no_solution.stdout).starts_with("status=none\ncount=0\n"));
}

#[test]
fn solve_prints_solution_in_input_format() {
    let puzzle = "#sudokurve n=2\n.4\n..\n\n1.\n.3\n";
    let out = run_with_stdin(&["solve", "--input", "-"], puzzle);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("status=unique"));
    assert!(text.contains("#sudokurve n=2"), "solution keeps the input format");
}

#[test]
fn generate_matches_committed_goldens() {
    let seed0 = stdout(&["generate", "--seed", "0", "--size", "3", "--clues", "8"]);
    assert_eq!(seed0, include_str!("golden/generate_seed0.txt"));
    let seed1 = stdout(&["generate", "--seed", "1", "--size", "3", "--clues", "8"]);
    assert_eq!(seed1, include_str!("golden/generate_seed1.txt"));
    assert_ne!(seed0, seed1);
    let size2 = stdout(&["generate", "--seed", "0", "--size", "2", "--clues", "3"]);
    assert_eq!(size2, include_str!("golden/generate_size2_seed0.txt"));
}

#[test]
fn generate_rejects_infeasible_clue_counts() {
    let out = run(&["generate", "--seed", "0", "--size", "3", "--clues", "7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn convert_round_trips_bytes() {
    let cube = stdout(&["generate", "--seed", "3", "--size", "3", "--clues", "8"]);
    let puzzle_block: String = cube
        .lines()
        .skip_while(|l| *l != "section=puzzle")
        .skip(1)
        .take_while(|l| *l != "section=solution")
        .map(|l| format!("{l}\n"))
        .collect();
    let kurve = run_with_stdin(&["convert", "--input", "-", "--to", "kurve"], &puzzle_block);
    assert_eq!(kurve.status.code(), Some(0));
    let kurve_text = String::from_utf8(kurve.stdout).unwrap();
    assert!(kurve_text.starts_with("#sudokurve n=3\n"));
    let back = run_with_stdin(&["convert", "--input", "-", "--to", "cube"], &kurve_text);
    assert_eq!(String::from_utf8(back.stdout).unwrap(), puzzle_block);
}

#[test]
fn minclues_size_2_certifies_witness() {
    let text = stdout(&["minclues", "--size", "2"]);
    assert!(text.starts_with("lower_bound=3\nclues=3\nclasses=1\n"));
    assert!(text.contains("count_partition=1\n"));
    assert!(text.contains("count_backtracking=1\n"));
}

#[test]
fn minclues_exhaustive_proves_the_bound() {
    let text = stdout(&["minclues", "--size", "3", "--exhaustive"]);
    // No 7-clue subset of either class representative is unique, and the
    // full 8-clue counts are stable.
    assert_eq!(text.matches("unique_subsets_below=0\n").count(), 2);
    assert!(text.contains("unique_subsets=486\n"));
    assert!(text.contains("unique_subsets=9171\n"));
}

#[test]
fn jobs_flag_does_not_change_output() {
    let one = stdout(&["--jobs", "1", "orbits", "--size", "3"]);
    let two = stdout(&["--jobs", "2", "orbits", "--size", "3"]);
    assert_eq!(one, two);
    let zero = run(&["--jobs", "0", "count", "--size", "3"]);
    assert_eq!(zero.status.code(), Some(1));
}

#[test]
fn shapes_reports_censuses() {
    let text = stdout(&["shapes"]);
    assert!(text.contains("uniform=true"));
    assert!(text.contains("diagonal=1\nscalene_corner=6\nequilateral=2\n"));
    assert!(text.contains("placements_diagonal=4\nplacements_scalene_corner=24\nplacements_equilateral=8\n"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("sudocube-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("puzzle.txt");
    let out = run(&[
        "generate",
        "--seed",
        "0",
        "--size",
        "2",
        "--clues",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/generate_size2_seed0.txt"));
    std::fs::remove_dir_all(&dir).ok();
}
