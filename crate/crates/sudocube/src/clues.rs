//! Minimum-clue theory: the symbol-swap lower bound, minimal-puzzle search,
//! and seeded puzzle generation.
//!
//! The lower bound rests on one observation: a solvable puzzle whose clues
//! use at most `n²−2` distinct symbols can never be unique, because
//! transposing two clue-absent symbols in any solution yields another one.
//! So a size-3 puzzle needs at least 8 clues, and the search below produces
//! certified 8-clue witnesses.

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::all_base_grids;
use crate::grid::{Coord, CubeGrid, GridError, Symbol};
use crate::rng::CounterRng;
use crate::solve::{count_solutions, Puzzle, SolveError};
use crate::symmetry::{GeometricTransform, GroupElement, Relabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CluesError {
    #[error("clues already use n²-1 or more distinct symbols")]
    NotEnoughMissing,
    #[error("no minimum-clue result for size {n}")]
    UnsupportedSize { n: usize },
    #[error("cannot build a {k}-clue puzzle of size {n}")]
    InfeasibleSize { k: usize, n: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// A set of clue cells drawn from one solution grid, kept sorted by
/// `(l, r, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClueSet {
    cells: Vec<(Coord, Symbol)>,
}

impl ClueSet {
    pub fn from_cells(mut cells: Vec<(Coord, Symbol)>) -> Result<ClueSet, SolveError> {
        cells.sort_unstable_by_key(|&(at, _)| (at.l, at.r, at.c));
        for pair in cells.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(SolveError::DuplicateCell(pair[0].0));
            }
        }
        Ok(ClueSet { cells })
    }

    pub fn cells(&self) -> &[(Coord, Symbol)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn distinct_symbols(&self) -> usize {
        let mut seen = 0u32;
        for &(_, s) in &self.cells {
            seen |= 1 << s.value();
        }
        seen.count_ones() as usize
    }

    pub fn to_puzzle(&self, n: usize) -> Puzzle {
        Puzzle::new(n, self.cells.clone()).expect("clue sets hold distinct in-range cells")
    }
}

/// Transposes the two smallest clue-absent symbols in a solution of `p`,
/// producing a second, distinct solution. This is the constructive heart of
/// the lower bound.
pub fn second_solution_by_symbol_swap(
    p: &Puzzle,
    solution: &CubeGrid,
) -> Result<CubeGrid, CluesError> {
    let n2 = (p.n() * p.n()) as u8;
    let mut used = 0u32;
    for &(_, s) in p.clues() {
        used |= 1 << s.value();
    }
    let missing: Vec<u8> = (1..=n2).filter(|&v| used & (1 << v) == 0).collect();
    if missing.len() < 2 {
        return Err(CluesError::NotEnoughMissing);
    }
    let (a, b) = (missing[0], missing[1]);
    let swap = Relabeling::from_swaps(p.n(), &[(a, b)]);
    let other = GroupElement {
        geo: GeometricTransform::identity(p.n()),
        relabel: swap,
    }
    .apply(solution);
    debug_assert!(other.is_valid() && other != *solution);
    debug_assert!(p.clues().iter().all(|&(at, s)| other.get(at) == Some(s)));
    Ok(other)
}

/// The minimum clue count forcing a unique solution: 0, 3, 8 for sizes
/// 1, 2, 3. Any fewer clues leave at least two symbols unused, and
/// [`second_solution_by_symbol_swap`] exhibits a second solution.
pub fn min_clue_lower_bound(n: usize) -> Result<usize, CluesError> {
    match n {
        1 => Ok(0),
        2 => Ok(3),
        3 => Ok(8),
        n => Err(CluesError::UnsupportedSize { n }),
    }
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn find_minimal_puzzle_ordered(
    grid: &CubeGrid,
    k: usize,
    order: &[usize],
    budget: Option<u64>,
) -> Option<ClueSet> {
    let n = grid.n();
    let need = n * n - 1;
    let n3 = n * n * n;
    if k > n3 || k < need {
        // Fewer than n²−1 clues cannot carry n²−1 distinct symbols.
        return None;
    }
    let cells: Vec<(Coord, Symbol)> = grid.filled_cells().collect();
    debug_assert_eq!(cells.len(), n3, "search needs a complete grid");

    let mut remaining = budget;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let picked: Vec<(Coord, Symbol)> = idx.iter().map(|&i| cells[order[i]]).collect();
        let mut mask = 0u32;
        for &(_, s) in &picked {
            mask |= 1 << s.value();
        }
        if (mask.count_ones() as usize) >= need {
            if let Some(b) = remaining {
                if b == 0 {
                    return None;
                }
                remaining = Some(b - 1);
            }
            let clues = ClueSet::from_cells(picked).expect("combination cells are distinct");
            if count_solutions(&clues.to_puzzle(n), 2) == 1 {
                return Some(clues);
            }
        }
        if k == 0 || !next_combination(&mut idx, n3) {
            return None;
        }
    }
}

/// First k-cell subset of `grid` (in lexicographic order of flat cell
/// indices) whose puzzle has a unique solution; candidates are pruned to
/// subsets carrying at least `n²−1` distinct symbols. `budget` caps the
/// number of uniqueness tests.
pub fn find_minimal_puzzle(grid: &CubeGrid, k: usize, budget: Option<u64>) -> Option<ClueSet> {
    let identity: Vec<usize> = (0..grid.n().pow(3)).collect();
    find_minimal_puzzle_ordered(grid, k, &identity, budget)
}

/// Like [`find_minimal_puzzle`] but walking cells in a seed-shuffled order,
/// still exhaustively.
pub fn find_minimal_puzzle_seeded(
    grid: &CubeGrid,
    k: usize,
    seed: u64,
    budget: Option<u64>,
) -> Option<ClueSet> {
    let mut order: Vec<usize> = (0..grid.n().pow(3)).collect();
    CounterRng::new(seed).shuffle(&mut order);
    find_minimal_puzzle_ordered(grid, k, &order, budget)
}

/// Exhaustive count of the k-cell subsets of `grid` with a unique solution.
/// No analytic shortcut is taken: every subset gets a uniqueness test, which
/// is what makes the k=7 count of zero a proof rather than an argument.
pub fn count_unique_subsets(grid: &CubeGrid, k: usize) -> u64 {
    let n = grid.n();
    let n3 = n * n * n;
    if k > n3 {
        return 0;
    }
    if k == 0 {
        let p = Puzzle::new(n, vec![]).expect("empty clue set");
        return u64::from(count_solutions(&p, 2) == 1);
    }
    let cells: Vec<(Coord, Symbol)> = grid.filled_cells().collect();
    (0..=n3 - k)
        .into_par_iter()
        .map(|first| {
            let mut picked = Vec::with_capacity(k);
            picked.push(cells[first]);
            let mut count = 0u64;
            count_unique_rec(&cells, first + 1, k - 1, n, &mut picked, &mut count);
            count
        })
        .sum()
}

fn count_unique_rec(
    cells: &[(Coord, Symbol)],
    start: usize,
    left: usize,
    n: usize,
    picked: &mut Vec<(Coord, Symbol)>,
    count: &mut u64,
) {
    if left == 0 {
        let p = Puzzle::new(n, picked.clone()).expect("distinct cells");
        if count_solutions(&p, 2) == 1 {
            *count += 1;
        }
        return;
    }
    for i in start..=cells.len() - left {
        picked.push(cells[i]);
        count_unique_rec(cells, i + 1, left - 1, n, picked, count);
        picked.pop();
    }
}

/// Deterministically generates a puzzle with `k` clues (or the smallest
/// feasible count above `k`, should `k` admit no unique subset for the drawn
/// grid) together with its solution.
///
/// The solution is uniform over base grids × relabelings, drawn from the
/// counter RNG; the clue search walks a seed-shuffled cell order, so equal
/// seeds give byte-identical output.
pub fn generate_puzzle(seed: u64, n: usize, k: usize) -> Result<(Puzzle, CubeGrid), CluesError> {
    let lower = min_clue_lower_bound(n)?;
    let n3 = n * n * n;
    if k < lower || k > n3 {
        return Err(CluesError::InfeasibleSize { k, n });
    }
    let mut rng = CounterRng::new(seed);
    let bases = all_base_grids(n).expect("sizes 1-3 supported");
    let base = &bases[rng.below(bases.len() as u64) as usize];
    let mut images: Vec<u8> = (1..=(n * n) as u8).collect();
    rng.shuffle(&mut images);
    let relabel = Relabeling::from_images(n, &images);
    let solution = GroupElement {
        geo: GeometricTransform::identity(n),
        relabel,
    }
    .apply(base);

    let mut order: Vec<usize> = (0..n3).collect();
    rng.shuffle(&mut order);
    for size in k..=n3 {
        if let Some(clues) = find_minimal_puzzle_ordered(&solution, size, &order, None) {
            return Ok((clues.to_puzzle(n), solution));
        }
    }
    unreachable!("the full grid is always a unique-solution clue set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::count_solutions_backtracking;

    fn sym(v: u8) -> Symbol {
        Symbol::new(v).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(min_clue_lower_bound(1).unwrap(), 0);
        assert_eq!(min_clue_lower_bound(2).unwrap(), 3);
        assert_eq!(min_clue_lower_bound(3).unwrap(), 8);
        assert!(min_clue_lower_bound(4).is_err());
    }

    #[test]
    fn symbol_swap_builds_second_solution() {
        let grid = &all_base_grids(3).unwrap()[0];
        let clues: Vec<_> = grid.filled_cells().take(7).collect();
        let p = Puzzle::new(3, clues).unwrap();
        let other = second_solution_by_symbol_swap(&p, grid).unwrap();
        assert_ne!(&other, grid);
        assert!(other.is_valid() && other.is_complete());
        for &(at, s) in p.clues() {
            assert_eq!(other.get(at), Some(s));
        }
    }

    #[test]
    fn two_clues_never_pin_a_size_2_grid() {
        let grid = &all_base_grids(2).unwrap()[0];
        let cells: Vec<_> = grid.filled_cells().collect();
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                let p = Puzzle::new(2, vec![cells[i], cells[j]]).unwrap();
                let second = second_solution_by_symbol_swap(&p, grid)
                    .expect("at most 2 symbols used, at least 2 missing");
                assert_ne!(&second, grid);
                assert!(second.is_valid());
                assert!(count_solutions(&p, 2) >= 2);
            }
        }
    }

    #[test]
    fn symbol_swap_needs_two_missing() {
        let grid = &all_base_grids(3).unwrap()[0];
        // Eight clues with eight distinct symbols.
        let mut clues = Vec::new();
        for v in 1..=8u8 {
            let at = crate::grid::digit_cells(grid, sym(v))[0];
            clues.push((at, sym(v)));
        }
        let p = Puzzle::new(3, clues).unwrap();
        assert_eq!(
            second_solution_by_symbol_swap(&p, grid),
            Err(CluesError::NotEnoughMissing)
        );
    }

    #[test]
    fn seven_clue_search_is_pruned_away() {
        let grid = &all_base_grids(3).unwrap()[0];
        assert_eq!(find_minimal_puzzle(grid, 7, None), None);
    }

    #[test]
    fn eight_clue_witness_exists_and_certifies() {
        let grid = &all_base_grids(3).unwrap()[0];
        let clues = find_minimal_puzzle(grid, 8, None).expect("an 8-clue witness exists");
        assert_eq!(clues.len(), 8);
        assert_eq!(clues.distinct_symbols(), 8);
        let p = clues.to_puzzle(3);
        assert_eq!(count_solutions(&p, u64::MAX), 1);
        assert_eq!(count_solutions_backtracking(&p, u64::MAX), 1);
        // The clues really come from the grid.
        for &(at, s) in clues.cells() {
            assert_eq!(grid.get(at), Some(s));
        }
    }

    #[test]
    fn size_2_minimum_is_three() {
        let grid = &all_base_grids(2).unwrap()[0];
        assert_eq!(find_minimal_puzzle(grid, 2, None), None);
        let clues = find_minimal_puzzle(grid, 3, None).expect("a 3-clue witness exists");
        let p = clues.to_puzzle(2);
        assert_eq!(count_solutions(&p, u64::MAX), 1);
        assert_eq!(count_solutions_backtracking(&p, u64::MAX), 1);
    }

    #[test]
    fn budget_zero_finds_nothing() {
        let grid = &all_base_grids(3).unwrap()[0];
        assert_eq!(find_minimal_puzzle(grid, 8, Some(0)), None);
    }

    #[test]
    fn generation_is_deterministic() {
        let (p1, s1) = generate_puzzle(0, 3, 8).unwrap();
        let (p2, s2) = generate_puzzle(0, 3, 8).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(s1, s2);
        let (p3, _) = generate_puzzle(1, 3, 8).unwrap();
        assert_ne!(p1, p3);
    }

    #[test]
    fn generated_puzzles_are_unique_by_both_counters() {
        for seed in [0u64, 1, 2] {
            let (p, solution) = generate_puzzle(seed, 3, 8).unwrap();
            assert_eq!(count_solutions(&p, u64::MAX), 1);
            assert_eq!(count_solutions_backtracking(&p, u64::MAX), 1);
            assert_eq!(crate::solve::solve_unique(&p).unwrap(), solution);
        }
        let (p, solution) = generate_puzzle(5, 2, 3).unwrap();
        assert_eq!(count_solutions(&p, u64::MAX), 1);
        assert_eq!(crate::solve::solve_unique(&p).unwrap(), solution);
    }

    #[test]
    fn generated_puzzles_stall_or_solve_but_never_contradict() {
        use crate::solve::{propagate_report, SolveStatus};
        for seed in 0..12u64 {
            let (p, _) = generate_puzzle(seed, 3, 8).unwrap();
            let report = propagate_report(&p);
            assert!(
                matches!(report.status, SolveStatus::Unique | SolveStatus::Stalled),
                "seed {seed} gave {:?}",
                report.status
            );
        }
    }

    #[test]
    fn both_grades_occur_among_8_clue_puzzles() {
        use crate::solve::{grade, Grade};
        let (logic, _) = generate_puzzle(0, 3, 8).unwrap();
        assert_eq!(grade(&logic).unwrap(), Grade::LogicOnly);
        let (search, _) = generate_puzzle(1, 3, 8).unwrap();
        assert_eq!(grade(&search).unwrap(), Grade::RequiresSearch);
    }

    #[test]
    fn generation_rejects_infeasible_requests() {
        assert!(matches!(
            generate_puzzle(0, 3, 7),
            Err(CluesError::InfeasibleSize { .. })
        ));
        assert!(matches!(
            generate_puzzle(0, 3, 28),
            Err(CluesError::InfeasibleSize { .. })
        ));
        assert!(matches!(
            generate_puzzle(0, 4, 8),
            Err(CluesError::UnsupportedSize { .. })
        ));
    }
}
