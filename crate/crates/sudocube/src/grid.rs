//! Cube grid representation, plane constraints, third-instance geometry, and
//! obstruction detection for layer pairs.
//!
//! A Sudo-Cube of side `n` is an `n×n×n` grid holding symbols `1..=n²` such
//! that every plane perpendicular to an axis contains each symbol at most
//! once (exactly once when the grid is complete).

use std::fmt;

use thiserror::Error;

/// Largest supported cube side. Full-grid enumeration only goes up to 3;
/// size 4 exists for the digit-placement counts.
pub const MAX_SIDE: usize = 4;

/// Errors from grid construction and layer-pair completion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("unsupported cube size {n}")]
    UnsupportedSize { n: usize },
    #[error("plane index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("symbol {value} out of range 1..={max}")]
    SymbolOutOfRange { value: u8, max: u8 },
    #[error("cells {p1} and {p2} share a coordinate component")]
    ComponentClash { p1: Coord, p2: Coord },
    #[error("layer is not a complete arrangement of 1..=n^2")]
    IncompleteLayer,
    #[error("layer pair violates a row- or column-plane constraint")]
    InvalidLayerPair,
    #[error("layer pair admits no completion: {} obstruction(s)", .0.len())]
    Obstructed(Vec<Obstruction>),
    #[error("expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },
}

/// One of the three coordinate axes of the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Row,
    Col,
    Layer,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Row, Axis::Col, Axis::Layer];

    pub fn index(self) -> usize {
        match self {
            Axis::Row => 0,
            Axis::Col => 1,
            Axis::Layer => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Col => write!(f, "col"),
            Axis::Layer => write!(f, "layer"),
        }
    }
}

/// A puzzle symbol, `1..=n²` for a cube of side `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u8);

impl Symbol {
    /// Builds a symbol, checking the global bound `1..=16`. Grids additionally
    /// enforce their own `1..=n²` bound on insertion.
    pub fn new(value: u8) -> Result<Symbol, GridError> {
        let max = (MAX_SIDE * MAX_SIDE) as u8;
        if value == 0 || value > max {
            return Err(GridError::SymbolOutOfRange { value, max });
        }
        Ok(Symbol(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A cell position: row, column, layer, each in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub r: u8,
    pub c: u8,
    pub l: u8,
}

impl Coord {
    pub fn new(r: u8, c: u8, l: u8) -> Coord {
        Coord { r, c, l }
    }

    pub fn component(self, axis: Axis) -> u8 {
        match axis {
            Axis::Row => self.r,
            Axis::Col => self.c,
            Axis::Layer => self.l,
        }
    }

    fn in_range(self, n: usize) -> bool {
        (self.r as usize) < n && (self.c as usize) < n && (self.l as usize) < n
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.l)
    }
}

/// Shorthand constructor used pervasively in tests and internal tables.
pub fn coord(r: u8, c: u8, l: u8) -> Coord {
    Coord::new(r, c, l)
}

/// Identifies one of the `3n` axis-perpendicular planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneId {
    pub axis: Axis,
    pub index: u8,
}

impl PlaneId {
    pub fn new(axis: Axis, index: u8) -> PlaneId {
        PlaneId { axis, index }
    }
}

/// The `n²` cells of a plane, in row-major order of the two free components
/// (taken in `(r, c, l)` order).
pub fn plane_cells(plane: PlaneId, n: usize) -> Result<Vec<Coord>, GridError> {
    if n == 0 || n > MAX_SIDE {
        return Err(GridError::UnsupportedSize { n });
    }
    if plane.index as usize >= n {
        return Err(GridError::IndexOutOfRange {
            index: plane.index as usize,
            n,
        });
    }
    let k = plane.index;
    let range = 0..n as u8;
    let mut cells = Vec::with_capacity(n * n);
    for a in range.clone() {
        for b in range.clone() {
            cells.push(match plane.axis {
                Axis::Row => coord(k, a, b),
                Axis::Col => coord(a, k, b),
                Axis::Layer => coord(a, b, k),
            });
        }
    }
    Ok(cells)
}

/// All `3n` plane identifiers for side `n`, axis-major.
pub fn all_planes(n: usize) -> impl Iterator<Item = PlaneId> {
    Axis::ALL
        .into_iter()
        .flat_map(move |axis| (0..n as u8).map(move |index| PlaneId { axis, index }))
}

/// Given two occurrences of a digit in a size-3 cube, the cell its third
/// occurrence is forced into: componentwise the index missing from
/// `{0, 1, 2}`. Symmetric in its arguments.
///
/// Errors with [`GridError::ComponentClash`] when the two cells share a row,
/// column, or layer (they could not hold the same digit).
pub fn third_position(p1: Coord, p2: Coord) -> Result<Coord, GridError> {
    debug_assert!(p1.in_range(3) && p2.in_range(3), "third_position is size-3 geometry");
    if p1.r == p2.r || p1.c == p2.c || p1.l == p2.l {
        return Err(GridError::ComponentClash { p1, p2 });
    }
    Ok(coord(3 - p1.r - p2.r, 3 - p1.c - p2.c, 3 - p1.l - p2.l))
}

/// An `n×n×n` grid of optional symbols, stored flat in `(l, r, c)` row-major
/// order. A value of 0 marks an empty cell internally; the public API only
/// speaks `Option<Symbol>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeGrid {
    n: usize,
    cells: Vec<u8>,
}

impl CubeGrid {
    pub fn empty(n: usize) -> Result<CubeGrid, GridError> {
        if n == 0 || n > MAX_SIDE {
            return Err(GridError::UnsupportedSize { n });
        }
        Ok(CubeGrid {
            n,
            cells: vec![0; n * n * n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct symbols, `n²`.
    pub fn symbol_count(&self) -> u8 {
        (self.n * self.n) as u8
    }

    #[inline]
    pub(crate) fn index_of(&self, at: Coord) -> usize {
        debug_assert!(at.in_range(self.n));
        (at.l as usize * self.n + at.r as usize) * self.n + at.c as usize
    }

    /// Panics if `at` is out of range, like slice indexing.
    pub fn get(&self, at: Coord) -> Option<Symbol> {
        assert!(at.in_range(self.n), "coordinate {at} out of range for n={}", self.n);
        match self.cells[self.index_of(at)] {
            0 => None,
            v => Some(Symbol(v)),
        }
    }

    /// Sets or clears a cell. Panics if `at` is out of range; errors if the
    /// symbol exceeds `n²`.
    pub fn set(&mut self, at: Coord, value: Option<Symbol>) -> Result<(), GridError> {
        assert!(at.in_range(self.n), "coordinate {at} out of range for n={}", self.n);
        let raw = match value {
            None => 0,
            Some(s) => {
                if s.value() > self.symbol_count() {
                    return Err(GridError::SymbolOutOfRange {
                        value: s.value(),
                        max: self.symbol_count(),
                    });
                }
                s.value()
            }
        };
        let idx = self.index_of(at);
        self.cells[idx] = raw;
        Ok(())
    }

    /// All coordinates in storage order `(l, r, c)`.
    pub fn coords(&self) -> impl Iterator<Item = Coord> {
        let n = self.n as u8;
        (0..n).flat_map(move |l| {
            (0..n).flat_map(move |r| (0..n).map(move |c| coord(r, c, l)))
        })
    }

    pub fn filled_cells(&self) -> impl Iterator<Item = (Coord, Symbol)> + '_ {
        self.coords()
            .filter_map(|at| self.get(at).map(|s| (at, s)))
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&v| v != 0)
    }

    /// True iff no plane contains a repeated symbol (empty cells ignored).
    /// Together with completeness this makes every plane a full `1..=n²` set.
    pub fn is_valid(&self) -> bool {
        for plane in all_planes(self.n) {
            let mut seen: u32 = 0;
            for at in plane_cells(plane, self.n).expect("plane in range") {
                let v = self.cells[self.index_of(at)];
                if v != 0 {
                    let bit = 1u32 << v;
                    if seen & bit != 0 {
                        return false;
                    }
                    seen |= bit;
                }
            }
        }
        true
    }

    /// Extracts layer `l` as a complete arrangement.
    pub fn layer(&self, l: usize) -> Result<Layer, GridError> {
        if l >= self.n {
            return Err(GridError::IndexOutOfRange { index: l, n: self.n });
        }
        let mut values = Vec::with_capacity(self.n * self.n);
        for r in 0..self.n as u8 {
            for c in 0..self.n as u8 {
                match self.get(coord(r, c, l as u8)) {
                    Some(s) => values.push(s.value()),
                    None => return Err(GridError::IncompleteLayer),
                }
            }
        }
        Layer::from_values(self.n, values)
    }

    /// The byte string used for ordering and canonical keys: one byte per
    /// cell in `(l, r, c)` order, 0 for empty.
    pub fn key_bytes(&self) -> &[u8] {
        &self.cells
    }

    pub(crate) fn from_raw(n: usize, cells: Vec<u8>) -> CubeGrid {
        debug_assert_eq!(cells.len(), n * n * n);
        CubeGrid { n, cells }
    }

    pub(crate) fn raw_cells(&self) -> &[u8] {
        &self.cells
    }
}

/// A complete `n×n` arrangement of the symbols `1..=n²`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    n: usize,
    values: Vec<u8>,
}

impl Layer {
    /// Requires every symbol `1..=n²` exactly once.
    pub fn from_values(n: usize, values: Vec<u8>) -> Result<Layer, GridError> {
        if n == 0 || n > MAX_SIDE {
            return Err(GridError::UnsupportedSize { n });
        }
        if values.len() != n * n {
            return Err(GridError::SizeMismatch {
                expected: n * n,
                got: values.len(),
            });
        }
        let mut seen: u32 = 0;
        for &v in &values {
            if v == 0 || v as usize > n * n {
                return Err(GridError::SymbolOutOfRange {
                    value: v,
                    max: (n * n) as u8,
                });
            }
            let bit = 1u32 << v;
            if seen & bit != 0 {
                return Err(GridError::IncompleteLayer);
            }
            seen |= bit;
        }
        Ok(Layer { n, values })
    }

    /// The standard arrangement: cell `(r, c)` holds `n·r + c + 1`.
    pub fn standard(n: usize) -> Result<Layer, GridError> {
        let values = (1..=(n * n) as u8).collect();
        Layer::from_values(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: u8, c: u8) -> Symbol {
        Symbol(self.values[r as usize * self.n + c as usize])
    }

    /// The `(r, c)` cell holding `digit`.
    pub fn position_of(&self, digit: Symbol) -> (u8, u8) {
        let idx = self
            .values
            .iter()
            .position(|&v| v == digit.value())
            .expect("layer is complete");
        ((idx / self.n) as u8, (idx % self.n) as u8)
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }
}

/// How two digits block each other's forced third-layer cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObstructionKind {
    /// The digits exchange cells between layers 0 and 1.
    Swap,
    /// The digits sit on opposite corners of the projected rectangle.
    Cross,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionKind::Swap => write!(f, "swap"),
            ObstructionKind::Cross => write!(f, "cross"),
        }
    }
}

/// Two digits whose third occurrences are forced into the same cell.
///
/// `cells` lists the four witnesses: `digit_a` in layers 0 and 1, then
/// `digit_b` in layers 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub digit_a: Symbol,
    pub digit_b: Symbol,
    pub kind: ObstructionKind,
    pub cells: [Coord; 4],
}

fn check_layer_pair(layer0: &Layer, layer1: &Layer) -> Result<(), GridError> {
    if layer0.n() != layer1.n() {
        return Err(GridError::SizeMismatch {
            expected: layer0.n() * layer0.n(),
            got: layer1.n() * layer1.n(),
        });
    }
    // Row-plane r and col-plane c each span both layers, so a digit may not
    // repeat a row or column index between the two layers.
    let n2 = (layer0.n() * layer0.n()) as u8;
    for v in 1..=n2 {
        let d = Symbol(v);
        let (r0, c0) = layer0.position_of(d);
        let (r1, c1) = layer1.position_of(d);
        if r0 == r1 || c0 == c1 {
            return Err(GridError::InvalidLayerPair);
        }
    }
    Ok(())
}

/// Every unordered digit pair of a size-3 layer pair whose forced third-layer
/// cells collide, classified swap or cross. Empty iff the pair extends to a
/// complete valid grid.
pub fn find_obstructions(layer0: &Layer, layer1: &Layer) -> Result<Vec<Obstruction>, GridError> {
    if layer0.n() != 3 {
        return Err(GridError::UnsupportedSize { n: layer0.n() });
    }
    check_layer_pair(layer0, layer1)?;

    // target[d] = the cell of layer 2 that digit d is forced into.
    let mut placements: Vec<(Symbol, Coord, Coord, Coord)> = Vec::with_capacity(9);
    for v in 1..=9u8 {
        let d = Symbol(v);
        let (r0, c0) = layer0.position_of(d);
        let (r1, c1) = layer1.position_of(d);
        let p0 = coord(r0, c0, 0);
        let p1 = coord(r1, c1, 1);
        let third = third_position(p0, p1).expect("pair check rules out clashes");
        placements.push((d, p0, p1, third));
    }

    let mut out = Vec::new();
    for i in 0..placements.len() {
        for j in i + 1..placements.len() {
            let (a, a0, a1, ta) = placements[i];
            let (b, b0, b1, tb) = placements[j];
            if ta != tb {
                continue;
            }
            let kind = if a0.r == b1.r && a0.c == b1.c && a1.r == b0.r && a1.c == b0.c {
                ObstructionKind::Swap
            } else {
                ObstructionKind::Cross
            };
            out.push(Obstruction {
                digit_a: a,
                digit_b: b,
                kind,
                cells: [a0, a1, b0, b1],
            });
        }
    }
    Ok(out)
}

/// Completes a layer pair into a full grid: for size 3 the missing layer is
/// forced cell-by-cell by [`third_position`]; for size 2 the two layers
/// already form the whole cube.
///
/// Errors with [`GridError::Obstructed`] when the forced placements collide.
pub fn complete_third_layer(layer0: &Layer, layer1: &Layer) -> Result<CubeGrid, GridError> {
    let n = layer0.n();
    match n {
        2 => {
            check_layer_pair(layer0, layer1)?;
            let mut grid = CubeGrid::empty(2)?;
            fill_layer(&mut grid, 0, layer0);
            fill_layer(&mut grid, 1, layer1);
            debug_assert!(grid.is_valid());
            Ok(grid)
        }
        3 => {
            let obstructions = find_obstructions(layer0, layer1)?;
            if !obstructions.is_empty() {
                return Err(GridError::Obstructed(obstructions));
            }
            let mut grid = CubeGrid::empty(3)?;
            fill_layer(&mut grid, 0, layer0);
            fill_layer(&mut grid, 1, layer1);
            for v in 1..=9u8 {
                let d = Symbol(v);
                let (r0, c0) = layer0.position_of(d);
                let (r1, c1) = layer1.position_of(d);
                let third = third_position(coord(r0, c0, 0), coord(r1, c1, 1))
                    .expect("pair check rules out clashes");
                grid.set(third, Some(d)).expect("symbol in range");
            }
            debug_assert!(grid.is_valid() && grid.is_complete());
            Ok(grid)
        }
        n => Err(GridError::UnsupportedSize { n }),
    }
}

fn fill_layer(grid: &mut CubeGrid, l: u8, layer: &Layer) {
    for r in 0..layer.n() as u8 {
        for c in 0..layer.n() as u8 {
            grid.set(coord(r, c, l), Some(layer.get(r, c)))
                .expect("symbol in range");
        }
    }
}

/// The `n` occurrences of `digit` in a complete grid, sorted by `(l, r, c)`.
pub fn digit_cells(grid: &CubeGrid, digit: Symbol) -> Vec<Coord> {
    grid.coords()
        .filter(|&at| grid.get(at) == Some(digit))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sym(v: u8) -> Symbol {
        Symbol::new(v).unwrap()
    }

    fn layer3(values: [u8; 9]) -> Layer {
        Layer::from_values(3, values.to_vec()).unwrap()
    }

    #[test]
    fn plane_cells_fix_one_component() {
        let cells = plane_cells(PlaneId::new(Axis::Layer, 0), 3).unwrap();
        assert_eq!(cells.len(), 9);
        assert!(cells.iter().all(|c| c.l == 0));
        assert_eq!(cells[0], coord(0, 0, 0));
        assert_eq!(cells[8], coord(2, 2, 0));

        let cells = plane_cells(PlaneId::new(Axis::Row, 1), 3).unwrap();
        assert!(cells.iter().all(|c| c.r == 1));
        assert_eq!(cells.len(), 9);

        let cells = plane_cells(PlaneId::new(Axis::Col, 0), 2).unwrap();
        assert_eq!(cells.len(), 4);
        assert!(cells.iter().all(|c| c.c == 0));

        assert_eq!(
            plane_cells(PlaneId::new(Axis::Row, 3), 3),
            Err(GridError::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn empty_grid_is_valid() {
        let grid = CubeGrid::empty(3).unwrap();
        assert!(grid.is_valid());
        assert!(!grid.is_complete());
    }

    #[test]
    fn row_plane_repeat_is_invalid() {
        let mut grid = CubeGrid::empty(3).unwrap();
        grid.set(coord(0, 0, 0), Some(sym(1))).unwrap();
        grid.set(coord(0, 1, 1), Some(sym(1))).unwrap();
        assert!(!grid.is_valid());
    }

    #[test]
    fn symbol_bounds_are_enforced() {
        assert!(Symbol::new(0).is_err());
        assert!(Symbol::new(17).is_err());
        let mut grid = CubeGrid::empty(2).unwrap();
        assert_eq!(
            grid.set(coord(0, 0, 0), Some(sym(5))),
            Err(GridError::SymbolOutOfRange { value: 5, max: 4 })
        );
    }

    #[test]
    fn third_position_is_componentwise_missing_index() {
        assert_eq!(
            third_position(coord(0, 0, 0), coord(1, 1, 1)).unwrap(),
            coord(2, 2, 2)
        );
        assert_eq!(
            third_position(coord(0, 2, 1), coord(1, 0, 2)).unwrap(),
            coord(2, 1, 0)
        );
        assert!(matches!(
            third_position(coord(0, 0, 0), coord(0, 1, 1)),
            Err(GridError::ComponentClash { .. })
        ));
    }

    #[test]
    fn third_position_is_symmetric_and_involutive() {
        for p1 in CubeGrid::empty(3).unwrap().coords() {
            for p2 in CubeGrid::empty(3).unwrap().coords() {
                match third_position(p1, p2) {
                    Ok(t) => {
                        assert_eq!(third_position(p2, p1).unwrap(), t);
                        // Recovering the second point from the first and the third.
                        assert_eq!(third_position(p1, t).unwrap(), p2);
                    }
                    Err(_) => {
                        assert!(p1.r == p2.r || p1.c == p2.c || p1.l == p2.l);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_obstruction_is_detected() {
        // a=1 at (0,0,0) and (1,1,1); b=2 at (1,1,0) and (0,0,1); both thirds
        // land on (2,2,2).
        let layer0 = layer3([1, 3, 4, 5, 2, 6, 7, 8, 9]);
        let layer1 = layer3([2, 6, 7, 9, 1, 8, 4, 5, 3]);
        let obs = find_obstructions(&layer0, &layer1).unwrap();
        let entry = obs
            .iter()
            .find(|o| o.digit_a == sym(1) && o.digit_b == sym(2))
            .expect("1/2 collide");
        assert_eq!(entry.kind, ObstructionKind::Swap);
    }

    #[test]
    fn cross_obstruction_is_detected() {
        // a=1 at (0,0,0) and (1,1,1); b=2 at (1,0,0) and (0,1,1).
        let layer0 = layer3([1, 3, 4, 2, 5, 6, 7, 8, 9]);
        let layer1 = layer3([5, 2, 7, 9, 1, 8, 6, 4, 3]);
        let obs = find_obstructions(&layer0, &layer1).unwrap();
        let entry = obs
            .iter()
            .find(|o| o.digit_a == sym(1) && o.digit_b == sym(2))
            .expect("1/2 collide");
        assert_eq!(entry.kind, ObstructionKind::Cross);
    }

    #[test]
    fn invalid_pair_is_rejected() {
        let layer0 = Layer::standard(3).unwrap();
        // Digit 1 stays in row 0.
        let layer1 = layer3([2, 1, 3, 5, 6, 4, 8, 9, 7]);
        assert_eq!(
            find_obstructions(&layer0, &layer1),
            Err(GridError::InvalidLayerPair)
        );
    }

    #[test]
    fn complete_third_layer_size2_antipodal() {
        let layer0 = Layer::from_values(2, vec![1, 2, 3, 4]).unwrap();
        let layer1 = Layer::from_values(2, vec![4, 3, 2, 1]).unwrap();
        let grid = complete_third_layer(&layer0, &layer1).unwrap();
        assert!(grid.is_complete() && grid.is_valid());
        assert_eq!(digit_cells(&grid, sym(1)), vec![coord(0, 0, 0), coord(1, 1, 1)]);
    }

    #[test]
    fn obstructed_pair_reports_swap() {
        let layer0 = layer3([1, 3, 4, 5, 2, 6, 7, 8, 9]);
        let layer1 = layer3([2, 6, 7, 9, 1, 8, 4, 5, 3]);
        match complete_third_layer(&layer0, &layer1) {
            Err(GridError::Obstructed(list)) => {
                assert!(list
                    .iter()
                    .any(|o| o.kind == ObstructionKind::Swap
                        && o.digit_a == sym(1)
                        && o.digit_b == sym(2)));
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn is_valid_matches_naive_tally_on_random_partials() {
        let mut rng = crate::rng::CounterRng::new(0x9A1D);
        for trial in 0..10_000 {
            let n = if trial % 3 == 0 { 2 } else { 3 };
            let mut grid = CubeGrid::empty(n).unwrap();
            for at in grid.coords() {
                if rng.below(3) > 0 {
                    let v = 1 + rng.below((n * n) as u64) as u8;
                    grid.set(at, Some(sym(v))).unwrap();
                }
            }
            let naive = all_planes(n).all(|plane| {
                let mut symbols: Vec<u8> = plane_cells(plane, n)
                    .unwrap()
                    .into_iter()
                    .filter_map(|at| grid.get(at).map(Symbol::value))
                    .collect();
                symbols.sort_unstable();
                symbols.windows(2).all(|w| w[0] != w[1])
            });
            assert_eq!(grid.is_valid(), naive);
        }
    }

    #[test]
    fn layer_requires_complete_arrangement() {
        assert_eq!(
            Layer::from_values(3, vec![1, 1, 2, 3, 4, 5, 6, 7, 8]),
            Err(GridError::IncompleteLayer)
        );
        assert!(Layer::from_values(3, vec![1, 2, 3]).is_err());
    }
}
