//! Enumeration, symmetry analysis, and solving for the Cube Sudo-Kurve
//! puzzle and its equivalent Sudo-Cube form.
//!
//! The puzzle fills an `n×n×n` cube with symbols `1..=n²` so that every
//! plane perpendicular to an axis holds each symbol exactly once; the bent
//! three-block page layout of the Sudo-Kurve is the same object unfolded.
//! This crate provides:
//!
//! - [`grid`]: the cube representation, plane constraints, forced third
//!   positions, and layer-pair obstruction analysis;
//! - [`isomap`]: the page-layout bijection and a strict text format;
//! - [`enumerate`]: exhaustive censuses (base grids, case split, sudo-cases,
//!   digit placements);
//! - [`symmetry`]: the symmetry group, canonical forms, orbit partitioning,
//!   and shape/plane structure detectors;
//! - [`solve`]: rule-based deduction plus two independent solution counters;
//! - [`clues`]: minimum-clue theory and a seeded puzzle generator;
//! - [`verify`]: the library's reproduction suite, one check per headline
//!   count or structural fact.

pub mod clues;
pub mod enumerate;
pub mod grid;
pub mod isomap;
pub mod rng;
pub mod solve;
pub mod symmetry;
pub mod verify;

pub use grid::{coord, Axis, Coord, CubeGrid, GridError, Symbol};
