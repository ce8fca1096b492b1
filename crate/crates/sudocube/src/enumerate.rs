//! Exhaustive censuses: base grids, the three-case split of the middle
//! layer, sudo-case extraction, and single-digit placement counts.
//!
//! A *base grid* is a complete solution whose bottom layer is the standard
//! arrangement (`1..=n²` in reading order). Every solution is a base grid
//! composed with a unique relabeling, so censuses over base grids multiply
//! by `(n²)!` to give totals.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::grid::{
    complete_third_layer, coord, digit_cells, Coord, CubeGrid, GridError, Layer, Symbol,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("no census support for size {n}")]
    UnsupportedSize { n: usize },
    #[error("layer 0 is not the standard arrangement")]
    NotBaseGrid,
}

pub(crate) const FACTORIALS: [u64; 17] = {
    let mut f = [1u64; 17];
    let mut i = 1;
    while i < 17 {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
};

/// All complete valid grids whose layer 0 is the standard arrangement, in
/// lexicographic order of their serialization.
///
/// Sizes 1-3 only; the layer-1 search prunes each cell to digits outside its
/// layer-0 row and column, and size 3 completes layer 2 through the forced
/// third positions, dropping obstructed pairs.
pub fn all_base_grids(n: usize) -> Result<Vec<CubeGrid>, EnumerateError> {
    match n {
        1 => {
            let mut g = CubeGrid::empty(1).expect("size 1");
            g.set(coord(0, 0, 0), Some(Symbol::new(1).expect("1 in range")))
                .expect("in range");
            Ok(vec![g])
        }
        2 | 3 => {
            let layer0 = Layer::standard(n).expect("supported size");
            let mut out = Vec::new();
            let mut cells = vec![0u8; n * n];
            search_layer1(n, &layer0, 0, 0, &mut cells, &mut out);
            Ok(out)
        }
        n => Err(EnumerateError::UnsupportedSize { n }),
    }
}

fn search_layer1(
    n: usize,
    layer0: &Layer,
    pos: usize,
    used: u32,
    cells: &mut Vec<u8>,
    out: &mut Vec<CubeGrid>,
) {
    if pos == n * n {
        let layer1 = Layer::from_values(n, cells.clone()).expect("complete by construction");
        if let Ok(grid) = complete_third_layer(layer0, &layer1) {
            out.push(grid);
        }
        return;
    }
    let (r, c) = ((pos / n) as u8, (pos % n) as u8);
    for v in 1..=(n * n) as u8 {
        if used & (1 << v) != 0 {
            continue;
        }
        let (r0, c0) = layer0.position_of(Symbol::new(v).expect("in range"));
        if r0 == r || c0 == c {
            continue;
        }
        cells[pos] = v;
        search_layer1(n, layer0, pos + 1, used | (1 << v), cells, out);
    }
    cells[pos] = 0;
}

/// The full solution count, `|base grids| · (n²)!`.
pub fn total_grids(n: usize) -> Result<u64, EnumerateError> {
    let base = all_base_grids(n)?.len() as u64;
    Ok(base * FACTORIALS[n * n])
}

/// The three shapes the first row of layer 1 can take relative to the
/// standard layer 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// The row is a whole layer-0 row, reordered.
    Case1,
    /// Three distinct layer-0 columns, not all one row.
    Case2,
    /// Exactly two digits share a layer-0 row and exactly two share a column.
    Case3,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Case1 => write!(f, "case1"),
            CaseLabel::Case2 => write!(f, "case2"),
            CaseLabel::Case3 => write!(f, "case3"),
        }
    }
}

/// Classifies a size-3 base grid by the first row of its middle layer.
pub fn classify_case(grid: &CubeGrid) -> Result<CaseLabel, EnumerateError> {
    let n = grid.n();
    if !is_standard_layer0(grid) {
        return Err(EnumerateError::NotBaseGrid);
    }
    debug_assert_eq!(n, 3, "case split is size-3 structure");

    // Layer-0 position of digit d in the standard arrangement.
    let home = |d: u8| (((d - 1) / 3), ((d - 1) % 3));
    let digits: Vec<u8> = (0..3)
        .map(|c| grid.get(coord(0, c, 1)).expect("complete").value())
        .collect();
    let rows: Vec<u8> = digits.iter().map(|&d| home(d).0).collect();
    let cols: Vec<u8> = digits.iter().map(|&d| home(d).1).collect();

    let all_same_row = rows[0] == rows[1] && rows[1] == rows[2];
    let cols_distinct = cols[0] != cols[1] && cols[0] != cols[2] && cols[1] != cols[2];
    if all_same_row {
        Ok(CaseLabel::Case1)
    } else if cols_distinct {
        Ok(CaseLabel::Case2)
    } else {
        // Valid base grids leave exactly one shared row pair and one shared
        // column pair here.
        debug_assert_eq!(
            (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| rows[i] == rows[j])
                .count(),
            1
        );
        debug_assert_eq!(
            (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| cols[i] == cols[j])
                .count(),
            1
        );
        Ok(CaseLabel::Case3)
    }
}

pub(crate) fn is_standard_layer0(grid: &CubeGrid) -> bool {
    let n = grid.n() as u8;
    for r in 0..n {
        for c in 0..n {
            if grid.get(coord(r, c, 0)).map(Symbol::value) != Some(n * r + c + 1) {
                return false;
            }
        }
    }
    true
}

/// The base grids with digit 5 in the upper-left cell of the middle layer
/// (cube cell `(0,0,1)`), in base-grid order. There are exactly ten.
pub fn sudo_cases() -> Vec<CubeGrid> {
    all_base_grids(3)
        .expect("size 3 supported")
        .into_iter()
        .filter(|g| g.get(coord(0, 0, 1)).map(Symbol::value) == Some(5))
        .collect()
}

/// Where digit 5 lands in layer 1 across the 40 base grids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerReport {
    /// `counts[r][c]` = number of base grids with 5 at cube cell `(r,c,1)`.
    pub counts: [[usize; 3]; 3],
}

impl CornerReport {
    /// True iff all mass sits on the four corners, ten grids each.
    pub fn satisfies_corner_law(&self) -> bool {
        for r in 0..3 {
            for c in 0..3 {
                let expected = if r != 1 && c != 1 { 10 } else { 0 };
                if self.counts[r][c] != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Tallies digit 5's layer-1 cell over the 40 base grids.
pub fn five_corner_positions() -> CornerReport {
    let mut counts = [[0usize; 3]; 3];
    for grid in all_base_grids(3).expect("size 3 supported") {
        let five = Symbol::new(5).expect("in range");
        let cell = digit_cells(&grid, five)
            .into_iter()
            .find(|at| at.l == 1)
            .expect("complete grid");
        counts[cell.r as usize][cell.c as usize] += 1;
    }
    CornerReport { counts }
}

/// The label-free skeleton of a solution: the `n²` groups of `n` cells that
/// share a digit, with the digit identities dropped.
///
/// Groups are stored canonically (each group sorted by `(l, r, c)`, groups
/// ordered by their layer-0 cell in reading order), so equal partitions
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellPartition {
    n: usize,
    groups: Vec<Vec<Coord>>,
    cell_group: Vec<u8>,
}

impl CellPartition {
    /// Extracts the partition of a complete valid grid.
    pub fn from_grid(grid: &CubeGrid) -> Result<CellPartition, GridError> {
        let n = grid.n();
        if !grid.is_complete() {
            return Err(GridError::IncompleteLayer);
        }
        let mut groups: Vec<Vec<Coord>> = (1..=(n * n) as u8)
            .map(|v| digit_cells(grid, Symbol::new(v).expect("in range")))
            .collect();
        // digit_cells returns (l,r,c)-sorted cells, so the first cell of each
        // group is its layer-0 cell.
        groups.sort_by_key(|g| {
            let first = g[0];
            (first.l, first.r, first.c)
        });
        let mut cell_group = vec![0u8; n * n * n];
        for (i, group) in groups.iter().enumerate() {
            for &at in group {
                cell_group[(at.l as usize * n + at.r as usize) * n + at.c as usize] = i as u8;
            }
        }
        Ok(CellPartition {
            n,
            groups,
            cell_group,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn groups(&self) -> &[Vec<Coord>] {
        &self.groups
    }

    /// Index of the group containing `at`.
    pub fn group_of(&self, at: Coord) -> usize {
        self.cell_group[(at.l as usize * self.n + at.r as usize) * self.n + at.c as usize] as usize
    }

    /// Labels each group with the standard value of its layer-0 cell,
    /// recovering the base grid this partition came from.
    pub fn reconstruct_identity(&self) -> CubeGrid {
        let n = self.n;
        let mut grid = CubeGrid::empty(n).expect("partition sizes are valid");
        for group in &self.groups {
            let head = group[0];
            debug_assert_eq!(head.l, 0);
            let value = (n as u8) * head.r + head.c + 1;
            for &at in group {
                grid.set(at, Some(Symbol::new(value).expect("in range")))
                    .expect("in range");
            }
        }
        grid
    }
}

/// The 40 digit-agnostic partitions behind the size-3 base grids.
pub fn base_partitions() -> Vec<CellPartition> {
    partitions_for(3).expect("size 3 supported")
}

pub fn partitions_for(n: usize) -> Result<Vec<CellPartition>, EnumerateError> {
    Ok(all_base_grids(n)?
        .iter()
        .map(|g| CellPartition::from_grid(g).expect("base grids are complete"))
        .collect())
}

/// Shared precomputed partitions for the solution counters.
pub(crate) fn cached_partitions(n: usize) -> &'static [CellPartition] {
    static CACHE: [OnceLock<Vec<CellPartition>>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    assert!((1..=3).contains(&n), "partitions exist for sizes 1-3");
    CACHE[n - 1].get_or_init(|| partitions_for(n).expect("sizes 1-3 supported"))
}

/// All ways to place one digit: a cell per layer with pairwise-distinct rows
/// and columns. There are `(n!)²` of them.
pub fn all_single_digit_placements(n: usize) -> Vec<Vec<Coord>> {
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(n);
    place_digit(n, 0, 0, 0, &mut cells, &mut out);
    out
}

fn place_digit(
    n: usize,
    layer: usize,
    used_rows: u32,
    used_cols: u32,
    cells: &mut Vec<Coord>,
    out: &mut Vec<Vec<Coord>>,
) {
    if layer == n {
        out.push(cells.clone());
        return;
    }
    for r in 0..n as u8 {
        if used_rows & (1 << r) != 0 {
            continue;
        }
        for c in 0..n as u8 {
            if used_cols & (1 << c) != 0 {
                continue;
            }
            cells.push(coord(r, c, layer as u8));
            place_digit(
                n,
                layer + 1,
                used_rows | (1 << r),
                used_cols | (1 << c),
                cells,
                out,
            );
            cells.pop();
        }
    }
}

/// `(n!)²`, cross-checked against the explicit placement enumeration.
pub fn count_digit_placements(n: usize) -> Result<u64, EnumerateError> {
    if n == 0 || n > 4 {
        return Err(EnumerateError::UnsupportedSize { n });
    }
    let formula = FACTORIALS[n] * FACTORIALS[n];
    let enumerated = all_single_digit_placements(n).len() as u64;
    assert_eq!(formula, enumerated, "placement formula disagrees with enumeration");
    Ok(formula)
}
