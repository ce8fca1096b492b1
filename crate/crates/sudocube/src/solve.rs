//! Rule-based deduction and two independent exact solution counters.
//!
//! The fast counter walks the precomputed cell partitions (40 of them at
//! size 3): clues pin digits to partition groups, and each partition
//! contributes `(n²−f)!` completions for `f` forced groups. The oracle
//! counter is exhaustive cell-by-cell backtracking with plane-candidate
//! pruning; the two must agree everywhere.

use std::fmt;

use thiserror::Error;

use crate::enumerate::{cached_partitions, FACTORIALS};
use crate::grid::{
    all_planes, coord, plane_cells, third_position, Coord, CubeGrid, GridError, PlaneId, Symbol,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("two clues target cell {0}")]
    DuplicateCell(Coord),
    #[error("propagation found a contradiction at {0}")]
    Contradiction(Coord),
    #[error("puzzle has no solution")]
    NoSolution,
    #[error("puzzle has at least {0} solutions")]
    MultipleSolutions(u64),
    #[error("puzzle does not have a unique solution")]
    NotUnique,
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// A partial grid with an immutable clue set.
///
/// Logically contradictory clues are accepted and simply count zero
/// solutions; only malformed input (duplicate cells, out-of-range values)
/// is rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Puzzle {
    n: usize,
    clues: Vec<(Coord, Symbol)>,
    grid: CubeGrid,
}

impl Puzzle {
    pub fn new(n: usize, clues: Vec<(Coord, Symbol)>) -> Result<Puzzle, SolveError> {
        let mut grid = CubeGrid::empty(n)?;
        for &(at, s) in &clues {
            if at.r as usize >= n || at.c as usize >= n || at.l as usize >= n {
                return Err(GridError::IndexOutOfRange {
                    index: at.r.max(at.c).max(at.l) as usize,
                    n,
                }
                .into());
            }
            if grid.get(at).is_some() {
                return Err(SolveError::DuplicateCell(at));
            }
            grid.set(at, Some(s))?;
        }
        Ok(Puzzle { n, clues, grid })
    }

    /// Treats every filled cell of a partial grid as a clue.
    pub fn from_grid(grid: &CubeGrid) -> Puzzle {
        Puzzle {
            n: grid.n(),
            clues: grid.filled_cells().collect(),
            grid: grid.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clues(&self) -> &[(Coord, Symbol)] {
        &self.clues
    }

    pub fn grid(&self) -> &CubeGrid {
        &self.grid
    }

    pub fn is_conflict_free(&self) -> bool {
        self.grid.is_valid()
    }

    fn with_grid(&self, grid: CubeGrid) -> Puzzle {
        Puzzle {
            n: self.n,
            clues: self.clues.clone(),
            grid,
        }
    }
}

/// The deduction rules, in application priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeductionRule {
    /// Two placed occurrences force the third cell of a digit.
    ThirdInstance,
    /// A digit has exactly one admissible cell left in some plane.
    HiddenSinglePlane,
    /// A cell has exactly one admissible digit left.
    NakedSingle,
}

impl fmt::Display for DeductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeductionRule::ThirdInstance => write!(f, "third_instance"),
            DeductionRule::HiddenSinglePlane => write!(f, "hidden_single"),
            DeductionRule::NakedSingle => write!(f, "naked_single"),
        }
    }
}

/// One forced placement, with the filled cells that justify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deduction {
    pub cell: Coord,
    pub digit: Symbol,
    pub rule: DeductionRule,
    pub premises: Vec<Coord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Unique,
    None,
    Multiple,
    Stalled,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveStatus::Unique => write!(f, "unique"),
            SolveStatus::None => write!(f, "none"),
            SolveStatus::Multiple => write!(f, "multiple"),
            SolveStatus::Stalled => write!(f, "stalled"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub status: SolveStatus,
    pub deductions: Vec<Deduction>,
    pub solution: Option<CubeGrid>,
    pub count: Option<u64>,
}

/// Mutable solving scratchpad: flat cells plus one presence bitmask per
/// plane.
struct Board {
    n: usize,
    cells: [u8; 64],
    masks: [[u32; 4]; 3],
    filled: usize,
    conflict: Option<Coord>,
}

impl Board {
    fn from_grid(grid: &CubeGrid) -> Board {
        let n = grid.n();
        let mut board = Board {
            n,
            cells: [0; 64],
            masks: [[0; 4]; 3],
            filled: 0,
            conflict: None,
        };
        for (at, s) in grid.filled_cells() {
            if board.used_at(at) & (1 << s.value()) != 0 {
                if board.conflict.is_none() {
                    board.conflict = Some(at);
                }
                continue;
            }
            board.place(at, s.value());
        }
        board
    }

    #[inline]
    fn idx(&self, at: Coord) -> usize {
        (at.l as usize * self.n + at.r as usize) * self.n + at.c as usize
    }

    #[inline]
    fn value(&self, at: Coord) -> u8 {
        self.cells[self.idx(at)]
    }

    #[inline]
    fn used_at(&self, at: Coord) -> u32 {
        self.masks[0][at.r as usize] | self.masks[1][at.c as usize] | self.masks[2][at.l as usize]
    }

    #[inline]
    fn candidates(&self, at: Coord) -> u32 {
        let n2 = (self.n * self.n) as u32;
        let full = if n2 == 16 {
            0xFFFF_u32 << 1
        } else {
            ((1u32 << n2) - 1) << 1
        };
        full & !self.used_at(at)
    }

    fn place(&mut self, at: Coord, v: u8) {
        debug_assert_eq!(self.value(at), 0);
        let idx = self.idx(at);
        self.cells[idx] = v;
        self.masks[0][at.r as usize] |= 1 << v;
        self.masks[1][at.c as usize] |= 1 << v;
        self.masks[2][at.l as usize] |= 1 << v;
        self.filled += 1;
    }

    fn plane_mask(&self, plane: PlaneId) -> u32 {
        self.masks[plane.axis.index()][plane.index as usize]
    }

    fn is_complete(&self) -> bool {
        self.filled == self.n * self.n * self.n
    }

    fn coords(&self) -> Vec<Coord> {
        CubeGrid::empty(self.n)
            .expect("board sizes are valid")
            .coords()
            .collect()
    }

    fn to_grid(&self) -> CubeGrid {
        CubeGrid::from_raw(self.n, self.cells[..self.n * self.n * self.n].to_vec())
    }

    fn digit_occurrences(&self, v: u8) -> Vec<Coord> {
        self.coords()
            .into_iter()
            .filter(|&at| self.value(at) == v)
            .collect()
    }

    fn filled_in_planes_of(&self, at: Coord) -> Vec<Coord> {
        let mut out = Vec::new();
        for plane in [
            PlaneId::new(crate::grid::Axis::Row, at.r),
            PlaneId::new(crate::grid::Axis::Col, at.c),
            PlaneId::new(crate::grid::Axis::Layer, at.l),
        ] {
            for cell in plane_cells(plane, self.n).expect("plane in range") {
                if cell != at && self.value(cell) != 0 {
                    out.push(cell);
                }
            }
        }
        out.sort_unstable_by_key(|a| (a.l, a.r, a.c));
        out.dedup();
        out
    }
}

fn propagate_inner(p: &Puzzle) -> (Board, Vec<Deduction>, Option<Coord>) {
    let mut board = Board::from_grid(p.grid());
    let mut deductions = Vec::new();
    if let Some(cell) = board.conflict {
        return (board, deductions, Some(cell));
    }

    loop {
        match step_third_instance(&mut board, &mut deductions) {
            Err(cell) => return (board, deductions, Some(cell)),
            Ok(true) => continue,
            Ok(false) => {}
        }
        match step_hidden_single(&mut board, &mut deductions) {
            Err(cell) => return (board, deductions, Some(cell)),
            Ok(true) => continue,
            Ok(false) => {}
        }
        match step_naked_single(&mut board, &mut deductions) {
            Err(cell) => return (board, deductions, Some(cell)),
            Ok(true) => continue,
            Ok(false) => {}
        }
        return (board, deductions, None);
    }
}

fn step_third_instance(board: &mut Board, deductions: &mut Vec<Deduction>) -> Result<bool, Coord> {
    if board.n != 3 {
        return Ok(false);
    }
    for v in 1..=9u8 {
        let occurrences = board.digit_occurrences(v);
        if occurrences.len() != 2 {
            continue;
        }
        let target = third_position(occurrences[0], occurrences[1])
            .expect("occurrences of one digit share no component");
        match board.value(target) {
            0 => {
                debug_assert_eq!(board.used_at(target) & (1 << v), 0);
                board.place(target, v);
                deductions.push(Deduction {
                    cell: target,
                    digit: Symbol::new(v).expect("in range"),
                    rule: DeductionRule::ThirdInstance,
                    premises: occurrences,
                });
                return Ok(true);
            }
            w if w == v => unreachable!("a third occurrence would have been counted"),
            _ => return Err(target),
        }
    }
    Ok(false)
}

fn step_hidden_single(board: &mut Board, deductions: &mut Vec<Deduction>) -> Result<bool, Coord> {
    let n2 = (board.n * board.n) as u8;
    for plane in all_planes(board.n) {
        let present = board.plane_mask(plane);
        let cells = plane_cells(plane, board.n).expect("plane in range");
        for v in 1..=n2 {
            if present & (1 << v) != 0 {
                continue;
            }
            let mut admissible = None;
            let mut count = 0;
            for &at in &cells {
                if board.value(at) == 0 && board.used_at(at) & (1 << v) == 0 {
                    count += 1;
                    admissible = Some(at);
                    if count > 1 {
                        break;
                    }
                }
            }
            if count == 1 {
                let target = admissible.expect("counted one");
                let mut premises: Vec<Coord> = cells
                    .iter()
                    .copied()
                    .filter(|&a| board.value(a) != 0)
                    .collect();
                premises.extend(board.digit_occurrences(v));
                premises.sort_unstable_by_key(|a| (a.l, a.r, a.c));
                premises.dedup();
                board.place(target, v);
                deductions.push(Deduction {
                    cell: target,
                    digit: Symbol::new(v).expect("in range"),
                    rule: DeductionRule::HiddenSinglePlane,
                    premises,
                });
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn step_naked_single(board: &mut Board, deductions: &mut Vec<Deduction>) -> Result<bool, Coord> {
    for at in board.coords() {
        if board.value(at) != 0 {
            continue;
        }
        let mask = board.candidates(at);
        if mask == 0 {
            return Err(at);
        }
        if mask.count_ones() == 1 {
            let v = mask.trailing_zeros() as u8;
            let premises = board.filled_in_planes_of(at);
            board.place(at, v);
            deductions.push(Deduction {
                cell: at,
                digit: Symbol::new(v).expect("in range"),
                rule: DeductionRule::NakedSingle,
                premises,
            });
            return Ok(true);
        }
    }
    Ok(false)
}

/// Applies the deduction rules to fixpoint, highest priority first, and
/// returns the extended puzzle with the ordered deduction trace.
pub fn propagate(p: &Puzzle) -> Result<(Puzzle, Vec<Deduction>), SolveError> {
    let (board, deductions, contradiction) = propagate_inner(p);
    match contradiction {
        Some(cell) => Err(SolveError::Contradiction(cell)),
        None => Ok((p.with_grid(board.to_grid()), deductions)),
    }
}

/// Exact solution count through the cell-partition census, truncated at
/// `cap`: clues force digit-to-group assignments, and each partition with
/// `f` consistently forced groups contributes `(n²−f)!`.
pub fn count_solutions(p: &Puzzle, cap: u64) -> u64 {
    let n2 = p.n() * p.n();
    const UNSET: usize = usize::MAX;
    let mut total = 0u64;
    for partition in cached_partitions(p.n()) {
        let mut digit_group = [UNSET; 17];
        let mut group_digit = [0u8; 16];
        let mut forced = 0usize;
        let mut consistent = true;
        for &(at, s) in p.clues() {
            let g = partition.group_of(at);
            let d = s.value() as usize;
            if digit_group[d] == UNSET && group_digit[g] == 0 {
                digit_group[d] = g;
                group_digit[g] = d as u8;
                forced += 1;
            } else if digit_group[d] != g || group_digit[g] != d as u8 {
                consistent = false;
                break;
            }
        }
        if consistent {
            total = total.saturating_add(FACTORIALS[n2 - forced]);
            if total >= cap {
                return cap;
            }
        }
    }
    total.min(cap)
}

/// Flat search state for the backtracking counter: plane presence masks plus
/// the list of still-empty cells, reordered in place as the search walks.
///
/// Cells are picked most-constrained-first (scanning stops early at a forced
/// or dead cell); the candidate test itself is pure plane pruning, and the
/// visit order cannot change the count.
#[derive(Clone)]
struct Search {
    full: u16,
    // row r, col 4+c, layer 8+l
    planes: [u16; 12],
    cells: Vec<(u8, u8, u8)>,
    picked: Vec<u16>,
}

impl Search {
    fn from_grid(grid: &CubeGrid) -> Option<Search> {
        let n = grid.n();
        let mut planes = [0u16; 12];
        let mut cells = Vec::with_capacity(n * n * n);
        for at in grid.coords() {
            match grid.get(at) {
                Some(s) => {
                    let bit = 1u16 << s.value();
                    let covered = planes[at.r as usize]
                        | planes[4 + at.c as usize]
                        | planes[8 + at.l as usize];
                    if covered & bit != 0 {
                        return None;
                    }
                    planes[at.r as usize] |= bit;
                    planes[4 + at.c as usize] |= bit;
                    planes[8 + at.l as usize] |= bit;
                }
                None => cells.push((at.r, at.c, at.l)),
            }
        }
        let picked = vec![0u16; cells.len()];
        Some(Search {
            full: (((1u32 << (n * n)) - 1) << 1) as u16,
            planes,
            cells,
            picked,
        })
    }

    // Index masking keeps the plane lookups provably in bounds, so the hot
    // path compiles without checks.
    #[inline]
    fn used(&self, (r, c, l): (u8, u8, u8)) -> u16 {
        self.planes[(r & 3) as usize]
            | self.planes[4 + (c & 3) as usize]
            | self.planes[8 + (l & 3) as usize]
    }

    #[inline]
    fn flip(&mut self, (r, c, l): (u8, u8, u8), bit: u16) {
        self.planes[(r & 3) as usize] ^= bit;
        self.planes[4 + (c & 3) as usize] ^= bit;
        self.planes[8 + (l & 3) as usize] ^= bit;
    }

    /// Swaps the most constrained remaining cell to `pos`; returns its
    /// candidate mask (0 when some cell is dead).
    fn pick(&mut self, pos: usize) -> u16 {
        let mut best = pos;
        let mut best_count = u32::MAX;
        for (i, &cell) in self.cells.iter().enumerate().skip(pos) {
            let mask = self.full & !self.used(cell);
            let count = mask.count_ones();
            if count < best_count {
                best = i;
                best_count = count;
                if count <= 1 {
                    break;
                }
            }
        }
        if best_count == 0 {
            return 0;
        }
        self.cells.swap(pos, best);
        self.full & !self.used(self.cells[pos])
    }

    /// Counts completions, stopping at `cap`.
    fn count(&mut self, pos: usize, cap: u64, count: &mut u64) {
        if pos == self.cells.len() {
            *count += 1;
            return;
        }
        let mut mask = self.pick(pos);
        let cell = self.cells[pos];
        while mask != 0 {
            let bit = mask & mask.wrapping_neg();
            mask ^= bit;
            self.flip(cell, bit);
            self.count(pos + 1, cap, count);
            self.flip(cell, bit);
            if *count >= cap {
                return;
            }
        }
    }

    /// Like [`Search::count`] with `cap = 1`, recording the branch choice
    /// per level, so a successful search leaves the solution in
    /// `cells`/`picked`.
    fn find_first(&mut self, pos: usize) -> bool {
        if pos == self.cells.len() {
            return true;
        }
        let mut mask = self.pick(pos);
        let cell = self.cells[pos];
        while mask != 0 {
            let bit = mask & mask.wrapping_neg();
            mask ^= bit;
            self.flip(cell, bit);
            self.picked[pos] = bit;
            if self.find_first(pos + 1) {
                return true;
            }
            self.flip(cell, bit);
        }
        false
    }

    /// Valid only right after a successful [`Search::find_first`]: deeper
    /// searching would reorder `cells` under the recorded picks.
    fn solution_grid(&self, n: usize, base: &CubeGrid) -> CubeGrid {
        let mut grid = base.clone();
        for (&(r, c, l), &bit) in self.cells.iter().zip(&self.picked) {
            let v = bit.trailing_zeros() as u8;
            grid.set(coord(r, c, l), Some(Symbol::new(v).expect("in range")))
                .expect("in range");
        }
        debug_assert_eq!(grid.n(), n);
        grid
    }
}

/// Independent oracle: exhaustive cell-by-cell backtracking with
/// plane-candidate pruning, truncated at `cap`. Full counts on near-empty
/// grids fan the first two branching levels out across threads when not
/// already running inside a worker pool; the per-leaf sum is
/// order-independent, so parallelism never changes the result.
pub fn count_solutions_backtracking(p: &Puzzle, cap: u64) -> u64 {
    let Some(mut search) = Search::from_grid(p.grid()) else {
        return 0;
    };
    let nested = rayon::current_thread_index().is_some();
    if cap == u64::MAX && search.cells.len() >= 20 && !nested {
        return count_parallel(&search);
    }
    let mut count = 0u64;
    search.count(0, cap, &mut count);
    count.min(cap)
}

fn count_parallel(search: &Search) -> u64 {
    use rayon::prelude::*;

    // Expand the top two levels into independent subtrees.
    let mut root = search.clone();
    let mut prefixes: Vec<Search> = Vec::new();
    let mut mask = root.pick(0);
    let first = root.cells[0];
    while mask != 0 {
        let bit = mask & mask.wrapping_neg();
        mask ^= bit;
        root.flip(first, bit);
        let mut mid = root.clone();
        let mut mask2 = mid.pick(1);
        let second = mid.cells[1];
        while mask2 != 0 {
            let bit2 = mask2 & mask2.wrapping_neg();
            mask2 ^= bit2;
            mid.flip(second, bit2);
            prefixes.push(mid.clone());
            mid.flip(second, bit2);
        }
        root.flip(first, bit);
    }
    prefixes
        .into_par_iter()
        .map(|mut task| {
            let mut count = 0u64;
            task.count(2, u64::MAX, &mut count);
            count
        })
        .sum()
}

/// First completion in search order, if any.
fn first_solution(p: &Puzzle) -> Option<CubeGrid> {
    let mut search = Search::from_grid(p.grid())?;
    if !search.find_first(0) {
        return None;
    }
    let grid = search.solution_grid(p.n(), p.grid());
    debug_assert!(grid.is_complete() && grid.is_valid());
    Some(grid)
}

/// The unique completion, when there is exactly one.
pub fn solve_unique(p: &Puzzle) -> Result<CubeGrid, SolveError> {
    match count_solutions(p, 2) {
        0 => Err(SolveError::NoSolution),
        1 => Ok(first_solution(p).expect("count said one solution exists")),
        over => Err(SolveError::MultipleSolutions(over)),
    }
}

/// Difficulty of a unique-solution puzzle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    /// The deduction rules alone reach the solution.
    LogicOnly,
    /// Propagation stalls; search is needed.
    RequiresSearch,
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::LogicOnly => write!(f, "logic_only"),
            Grade::RequiresSearch => write!(f, "requires_search"),
        }
    }
}

pub fn grade(p: &Puzzle) -> Result<Grade, SolveError> {
    if count_solutions(p, 2) != 1 {
        return Err(SolveError::NotUnique);
    }
    let (extended, _) = propagate(p).expect("sound rules cannot contradict a solvable puzzle");
    if extended.grid().is_complete() {
        Ok(Grade::LogicOnly)
    } else {
        Ok(Grade::RequiresSearch)
    }
}

/// Propagation-only report; never counts, so an incomplete end state is
/// `Stalled`.
pub fn propagate_report(p: &Puzzle) -> SolveReport {
    let (board, deductions, contradiction) = propagate_inner(p);
    if contradiction.is_some() {
        return SolveReport {
            status: SolveStatus::None,
            deductions,
            solution: None,
            count: Some(0),
        };
    }
    if board.is_complete() {
        let grid = board.to_grid();
        debug_assert!(grid.is_valid());
        SolveReport {
            status: SolveStatus::Unique,
            deductions,
            solution: Some(grid),
            count: Some(1),
        }
    } else {
        SolveReport {
            status: SolveStatus::Stalled,
            deductions,
            solution: None,
            count: None,
        }
    }
}

/// Full report: propagation first, then the partition counter (truncated at
/// `cap`) to settle stalled states.
pub fn analyze(p: &Puzzle, cap: u64) -> SolveReport {
    let mut report = propagate_report(p);
    if report.status != SolveStatus::Stalled {
        return report;
    }
    let count = count_solutions(p, cap);
    match count {
        0 => {
            report.status = SolveStatus::None;
            report.count = Some(0);
        }
        1 => {
            report.status = SolveStatus::Unique;
            report.count = Some(1);
            report.solution = Some(first_solution(p).expect("count said one"));
        }
        c => {
            report.status = SolveStatus::Multiple;
            report.count = Some(c);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_base_grids;
    use crate::grid::coord;
    use crate::rng::CounterRng;

    fn sym(v: u8) -> Symbol {
        Symbol::new(v).unwrap()
    }

    #[test]
    fn third_instance_places_forced_cell() {
        let p = Puzzle::new(3, vec![(coord(0, 0, 0), sym(7)), (coord(1, 1, 1), sym(7))]).unwrap();
        let (extended, deductions) = propagate(&p).unwrap();
        assert_eq!(extended.grid().get(coord(2, 2, 2)), Some(sym(7)));
        let first = &deductions[0];
        assert_eq!(first.rule, DeductionRule::ThirdInstance);
        assert_eq!(first.cell, coord(2, 2, 2));
        assert_eq!(first.premises, vec![coord(0, 0, 0), coord(1, 1, 1)]);
    }

    #[test]
    fn complete_minus_one_restores_in_one_deduction() {
        let grid = &all_base_grids(3).unwrap()[0];
        let mut partial = grid.clone();
        partial.set(coord(1, 2, 1), None).unwrap();
        let p = Puzzle::from_grid(&partial);
        let (extended, deductions) = propagate(&p).unwrap();
        assert_eq!(extended.grid(), grid);
        assert_eq!(deductions.len(), 1);
    }

    #[test]
    fn hidden_single_fills_a_plane_gap() {
        // Layer 0 holding 1..=8 leaves exactly one admissible cell for 9.
        let mut clues = Vec::new();
        for v in 1..=8u8 {
            clues.push((coord((v - 1) / 3, (v - 1) % 3, 0), sym(v)));
        }
        let p = Puzzle::new(3, clues).unwrap();
        let (extended, deductions) = propagate(&p).unwrap();
        assert_eq!(extended.grid().get(coord(2, 2, 0)), Some(sym(9)));
        assert!(deductions
            .iter()
            .any(|d| d.rule == DeductionRule::HiddenSinglePlane && d.cell == coord(2, 2, 0)));
    }

    #[test]
    fn counters_agree_on_empty_small_sizes() {
        for (n, expected) in [(1usize, 1u64), (2, 24)] {
            let p = Puzzle::new(n, vec![]).unwrap();
            assert_eq!(count_solutions(&p, u64::MAX), expected);
            assert_eq!(count_solutions_backtracking(&p, u64::MAX), expected);
        }
    }

    #[test]
    fn partition_counter_on_empty_size_3() {
        let p = Puzzle::new(3, vec![]).unwrap();
        assert_eq!(count_solutions(&p, u64::MAX), 14_515_200);
        assert_eq!(count_solutions(&p, 1000), 1000);
    }

    #[test]
    fn counters_agree_on_single_clues() {
        // One spot check here; the full 27×9 sweep runs in the acceptance
        // suite.
        let p = Puzzle::new(3, vec![(coord(1, 2, 0), sym(4))]).unwrap();
        let expected = 14_515_200 / 9;
        assert_eq!(count_solutions(&p, u64::MAX), expected);
        assert_eq!(count_solutions_backtracking(&p, u64::MAX), expected);
    }

    #[test]
    fn counters_agree_on_random_clue_sets() {
        let mut rng = CounterRng::new(11);
        for _ in 0..50 {
            let k = 4 + rng.below(8) as usize;
            let mut clues = Vec::new();
            let mut taken = std::collections::HashSet::new();
            for _ in 0..k {
                let at = coord(
                    rng.below(3) as u8,
                    rng.below(3) as u8,
                    rng.below(3) as u8,
                );
                if taken.insert(at) {
                    clues.push((at, sym(1 + rng.below(9) as u8)));
                }
            }
            let p = Puzzle::new(3, clues).unwrap();
            assert_eq!(
                count_solutions(&p, u64::MAX),
                count_solutions_backtracking(&p, u64::MAX)
            );
        }
    }

    #[test]
    fn complete_grid_counts_one() {
        let grid = &all_base_grids(3).unwrap()[7];
        let p = Puzzle::from_grid(grid);
        assert_eq!(count_solutions(&p, u64::MAX), 1);
        assert_eq!(count_solutions_backtracking(&p, u64::MAX), 1);
        assert_eq!(solve_unique(&p).unwrap(), *grid);
    }

    #[test]
    fn seven_clues_always_leave_choices() {
        let grid = &all_base_grids(3).unwrap()[0];
        let clues: Vec<_> = grid.filled_cells().take(7).collect();
        let p = Puzzle::new(3, clues).unwrap();
        assert!(count_solutions(&p, u64::MAX) >= 2);
        assert!(matches!(
            solve_unique(&p),
            Err(SolveError::MultipleSolutions(_))
        ));
    }

    #[test]
    fn conflicting_clues_count_zero() {
        let p = Puzzle::new(3, vec![(coord(0, 0, 0), sym(1)), (coord(0, 1, 1), sym(1))]).unwrap();
        assert!(!p.is_conflict_free());
        assert_eq!(count_solutions(&p, u64::MAX), 0);
        assert_eq!(count_solutions_backtracking(&p, u64::MAX), 0);
        assert_eq!(solve_unique(&p), Err(SolveError::NoSolution));
        let report = analyze(&p, 2);
        assert_eq!(report.status, SolveStatus::None);
    }

    #[test]
    fn duplicate_cells_are_malformed() {
        assert!(matches!(
            Puzzle::new(3, vec![(coord(0, 0, 0), sym(1)), (coord(0, 0, 0), sym(2))]),
            Err(SolveError::DuplicateCell(_))
        ));
    }

    #[test]
    fn complete_minus_five_is_logic_only() {
        let grid = &all_base_grids(3).unwrap()[3];
        let mut partial = grid.clone();
        for at in [
            coord(0, 0, 1),
            coord(1, 1, 1),
            coord(2, 0, 2),
            coord(0, 2, 2),
            coord(2, 2, 0),
        ] {
            partial.set(at, None).unwrap();
        }
        let p = Puzzle::from_grid(&partial);
        assert_eq!(solve_unique(&p).unwrap(), *grid);
        assert_eq!(grade(&p).unwrap(), Grade::LogicOnly);
    }

    #[test]
    fn grade_rejects_non_unique() {
        let p = Puzzle::new(3, vec![]).unwrap();
        assert_eq!(grade(&p), Err(SolveError::NotUnique));
    }

    #[test]
    fn propagate_is_monotone_and_bounded() {
        let grid = &all_base_grids(3).unwrap()[0];
        let clues: Vec<_> = grid.filled_cells().take(12).collect();
        let p = Puzzle::new(3, clues.clone()).unwrap();
        let (extended, deductions) = propagate(&p).unwrap();
        for (at, s) in clues {
            assert_eq!(extended.grid().get(at), Some(s));
        }
        assert!(deductions.len() <= 27);
        // Every deduction is a cell the solution actually holds.
        for d in &deductions {
            assert_eq!(grid.get(d.cell), Some(d.digit));
        }
    }

    #[test]
    fn deductions_are_sound() {
        // Forcing any other digit into a deduced cell kills all solutions.
        let grid = &all_base_grids(3).unwrap()[20];
        let clues: Vec<_> = grid.filled_cells().take(14).collect();
        let p = Puzzle::new(3, clues.clone()).unwrap();
        let (_, deductions) = propagate(&p).unwrap();
        assert!(!deductions.is_empty());
        for d in deductions.iter().take(3) {
            for v in 1..=9u8 {
                if Some(sym(v)) == grid.get(d.cell) {
                    continue;
                }
                let mut forced = clues.clone();
                forced.push((d.cell, sym(v)));
                let alt = Puzzle::new(3, forced).unwrap();
                assert_eq!(count_solutions(&alt, u64::MAX), 0);
            }
        }
    }
}
