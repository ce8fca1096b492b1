//! Acceptance suite: every headline count and structural fact, one test per
//! criterion. Each test prints its pass/fail line and asserts it.

use std::time::Instant;

use sudocube::verify::{self, Check};

fn run(make: fn() -> Check) {
    let start = Instant::now();
    let check = make();
    let status = if check.passed { "pass" } else { "fail" };
    println!("{}={} ({:.2}s)", check.name, status, start.elapsed().as_secs_f64());
    if !check.detail.is_empty() {
        println!("{}_detail={}", check.name, check.detail);
    }
    assert!(check.passed, "{}: {}", check.name, check.detail);
}

#[test]
fn criterion_01_base_census() {
    run(verify::base_census);
}

#[test]
fn criterion_02_case_split() {
    run(verify::case_split);
}

#[test]
fn criterion_03_sudo_cases() {
    run(verify::sudo_case_census);
}

#[test]
fn criterion_04_corner_law() {
    run(verify::corner_law);
}

#[test]
fn criterion_05_symmetry_classes() {
    run(verify::symmetry_classes);
}

#[test]
fn criterion_06_explicit_transforms() {
    run(verify::explicit_transforms);
}

#[test]
fn criterion_07_small_sizes() {
    run(verify::small_sizes);
}

#[test]
fn criterion_08_minimum_clues() {
    run(verify::minimum_clues);
}

#[test]
fn criterion_09_digit_placements() {
    run(verify::digit_placements);
}

#[test]
fn criterion_10_shape_census() {
    run(verify::shape_censuses);
}

#[test]
fn criterion_11_plane_recognition() {
    run(verify::plane_recognition);
}

#[test]
fn criterion_12_counter_agreement() {
    run(verify::counter_agreement);
}

#[test]
fn criterion_13_isomorphism() {
    run(verify::isomorphism_round_trip);
}
