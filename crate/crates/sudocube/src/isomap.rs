//! The bijection between the bent-grid Cube Sudo-Kurve page layout and the
//! cube form, plus the text format for both.
//!
//! On the page, block `b` of the Kurve layout holds layer `b` of the cube.
//! Even-indexed blocks are placed as-is; odd-indexed blocks are flipped
//! across their anti-diagonal, which is what makes the gray bent lines of the
//! puzzle land on straight planes of the cube. For the classic size-3 puzzle
//! the blocks are top-left, middle (flipped), and bottom-right.

use std::fmt;

use thiserror::Error;

use crate::grid::{coord, Coord, CubeGrid, GridError, Symbol};

/// Errors from parsing, serialization, and representation conversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, col {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("line {line}: expected {expected} characters, got {got}")]
    SizeMismatch { line: usize, expected: usize, got: usize },
    #[error("line {line}, col {col}: bad symbol {symbol:?}")]
    BadSymbol { line: usize, col: usize, symbol: char },
    #[error("no page layout defined for size {n}")]
    UnsupportedSize { n: usize },
}

/// The two serialized representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridFormat {
    Cube,
    Kurve,
}

impl fmt::Display for GridFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridFormat::Cube => write!(f, "cube"),
            GridFormat::Kurve => write!(f, "kurve"),
        }
    }
}

/// Largest side with a defined page layout (and with symbols that fit the
/// one-character-per-cell format).
pub const MAX_KURVE_SIDE: usize = 3;

/// Number of page blocks for side `n`: one per layer.
pub fn block_count(n: usize) -> usize {
    n
}

/// The Sudo-Kurve page layout: `n` blocks of `n×n` optional symbols, each in
/// its on-page orientation (odd blocks are stored flipped, exactly as drawn).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KurveGrid {
    n: usize,
    blocks: Vec<Vec<u8>>,
}

impl KurveGrid {
    pub fn empty(n: usize) -> Result<KurveGrid, FormatError> {
        if n == 0 || n > MAX_KURVE_SIDE {
            return Err(FormatError::UnsupportedSize { n });
        }
        Ok(KurveGrid {
            n,
            blocks: vec![vec![0; n * n]; block_count(n)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Panics if any index is out of range.
    pub fn get(&self, block: usize, r: u8, c: u8) -> Option<Symbol> {
        match self.blocks[block][r as usize * self.n + c as usize] {
            0 => None,
            v => Some(Symbol::new(v).expect("stored symbols are in range")),
        }
    }

    pub fn set(
        &mut self,
        block: usize,
        r: u8,
        c: u8,
        value: Option<Symbol>,
    ) -> Result<(), GridError> {
        let raw = match value {
            None => 0,
            Some(s) => {
                if s.value() as usize > self.n * self.n {
                    return Err(GridError::SymbolOutOfRange {
                        value: s.value(),
                        max: (self.n * self.n) as u8,
                    });
                }
                s.value()
            }
        };
        self.blocks[block][r as usize * self.n + c as usize] = raw;
        Ok(())
    }

    /// True iff every block, bent row, and bent column is duplicate-free.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        for block in &self.blocks {
            if has_duplicate(block.iter().copied()) {
                return false;
            }
        }
        for kind in [LineKind::Row, LineKind::Column] {
            for index in 0..n as u8 {
                let line = bent_line(kind, index, n).expect("index in range");
                let symbols = line
                    .cells
                    .iter()
                    .map(|&(b, r, c)| self.blocks[b][r as usize * n + c as usize]);
                if has_duplicate(symbols) {
                    return false;
                }
            }
        }
        true
    }
}

fn has_duplicate(values: impl Iterator<Item = u8>) -> bool {
    let mut seen: u32 = 0;
    for v in values {
        if v == 0 {
            continue;
        }
        let bit = 1u32 << v;
        if seen & bit != 0 {
            return true;
        }
        seen |= bit;
    }
    false
}

/// Whether a bent line follows a row-plane or a col-plane of the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Row,
    Column,
}

/// One gray line of the puzzle: the `n·block_count` cells, in reading order,
/// as `(block, r, c)` references. The cell set is what the constraints act
/// on; the traversal order is only a display convention (odd blocks are read
/// top-to-bottom for rows, left-to-right for columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BentLine {
    pub kind: LineKind,
    pub index: u8,
    pub cells: Vec<(usize, u8, u8)>,
}

pub fn bent_line(kind: LineKind, index: u8, n: usize) -> Result<BentLine, GridError> {
    if n == 0 || n > MAX_KURVE_SIDE {
        return Err(GridError::UnsupportedSize { n });
    }
    if index as usize >= n {
        return Err(GridError::IndexOutOfRange {
            index: index as usize,
            n,
        });
    }
    let n8 = n as u8;
    let mut cells = Vec::with_capacity(n * block_count(n));
    for b in 0..block_count(n) {
        for t in 0..n8 {
            let (r, c) = match (kind, b % 2 == 0) {
                (LineKind::Row, true) => (index, t),
                (LineKind::Row, false) => (t, n8 - 1 - index),
                (LineKind::Column, true) => (t, index),
                (LineKind::Column, false) => (n8 - 1 - index, t),
            };
            cells.push((b, r, c));
        }
    }
    Ok(BentLine { kind, index, cells })
}

fn block_cell_to_cube(n: usize, block: usize, r: u8, c: u8) -> Coord {
    let n8 = n as u8;
    if block % 2 == 0 {
        coord(r, c, block as u8)
    } else {
        coord(n8 - 1 - c, n8 - 1 - r, block as u8)
    }
}

fn cube_cell_to_block(n: usize, at: Coord) -> (usize, u8, u8) {
    let n8 = n as u8;
    if at.l % 2 == 0 {
        (at.l as usize, at.r, at.c)
    } else {
        (at.l as usize, n8 - 1 - at.c, n8 - 1 - at.r)
    }
}

/// Rewraps a Kurve layout as a cube. Bent row `r` lands on row-plane `r`,
/// bent column `c` on col-plane `c`, block `b` on layer `b`.
pub fn kurve_to_cube(k: &KurveGrid) -> CubeGrid {
    let n = k.n();
    let mut grid = CubeGrid::empty(n).expect("kurve sizes are valid cube sizes");
    for b in 0..k.block_count() {
        for r in 0..n as u8 {
            for c in 0..n as u8 {
                if let Some(s) = k.get(b, r, c) {
                    grid.set(block_cell_to_cube(n, b, r, c), Some(s))
                        .expect("symbol in range");
                }
            }
        }
    }
    grid
}

/// Exact inverse of [`kurve_to_cube`]. Sizes 4 and up have no page layout.
pub fn cube_to_kurve(g: &CubeGrid) -> Result<KurveGrid, FormatError> {
    let n = g.n();
    let mut k = KurveGrid::empty(n)?;
    for at in g.coords() {
        if let Some(s) = g.get(at) {
            let (b, r, c) = cube_cell_to_block(n, at);
            k.set(b, r, c, Some(s)).expect("symbol in range");
        }
    }
    Ok(k)
}

/// A parse result: whichever representation the header named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGrid {
    Cube(CubeGrid),
    Kurve(KurveGrid),
}

impl ParsedGrid {
    pub fn format(&self) -> GridFormat {
        match self {
            ParsedGrid::Cube(_) => GridFormat::Cube,
            ParsedGrid::Kurve(_) => GridFormat::Kurve,
        }
    }

    /// The cube form of either representation.
    pub fn into_cube(self) -> CubeGrid {
        match self {
            ParsedGrid::Cube(g) => g,
            ParsedGrid::Kurve(k) => kurve_to_cube(&k),
        }
    }
}

fn parse_header(line: &str) -> Result<(GridFormat, usize), FormatError> {
    let (format, rest) = if let Some(rest) = line.strip_prefix("#sudocube n=") {
        (GridFormat::Cube, rest)
    } else if let Some(rest) = line.strip_prefix("#sudokurve n=") {
        (GridFormat::Kurve, rest)
    } else {
        return Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "expected `#sudocube n=<n>` or `#sudokurve n=<n>`".into(),
        });
    };
    let n: usize = rest.parse().map_err(|_| FormatError::Parse {
        line: 1,
        col: line.len() - rest.len() + 1,
        msg: format!("bad size {rest:?}"),
    })?;
    if n == 0 || n > MAX_KURVE_SIDE {
        return Err(FormatError::UnsupportedSize { n });
    }
    Ok((format, n))
}

/// Parses either representation, strict to the byte: header line, blocks of
/// `n` rows of exactly `n` characters from `{'1'..'9', '.'}` (symbols capped
/// at `n²`), one blank line between blocks, trailing newline, nothing else.
pub fn parse(text: &str) -> Result<ParsedGrid, FormatError> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    match lines.pop() {
        Some("") => {}
        _ => {
            return Err(FormatError::Parse {
                line: lines.len(),
                col: 1,
                msg: "missing trailing newline".into(),
            })
        }
    }
    if lines.is_empty() {
        return Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "empty input".into(),
        });
    }
    let (format, n) = parse_header(lines[0])?;
    let blocks = match format {
        GridFormat::Cube => n,
        GridFormat::Kurve => block_count(n),
    };
    let expected_lines = 1 + blocks * n + (blocks - 1);
    if lines.len() != expected_lines {
        return Err(FormatError::Parse {
            line: lines.len().min(expected_lines) + 1,
            col: 1,
            msg: format!("expected {expected_lines} lines, got {}", lines.len()),
        });
    }

    // cells[b][r][c] as raw bytes, 0 for '.'.
    let mut cells = vec![vec![0u8; n * n]; blocks];
    let mut line_no = 1; // 1-based index of the last consumed line
    for (b, block) in cells.iter_mut().enumerate() {
        if b > 0 {
            line_no += 1;
            let sep = lines[line_no - 1];
            if !sep.is_empty() {
                return Err(FormatError::Parse {
                    line: line_no,
                    col: 1,
                    msg: "expected blank line between blocks".into(),
                });
            }
        }
        for r in 0..n {
            line_no += 1;
            let row = lines[line_no - 1];
            if row.chars().count() != n {
                return Err(FormatError::SizeMismatch {
                    line: line_no,
                    expected: n,
                    got: row.chars().count(),
                });
            }
            for (c, ch) in row.chars().enumerate() {
                let value = match ch {
                    '.' => 0,
                    '1'..='9' => ch as u8 - b'0',
                    _ => {
                        return Err(FormatError::BadSymbol {
                            line: line_no,
                            col: c + 1,
                            symbol: ch,
                        })
                    }
                };
                if value as usize > n * n {
                    return Err(FormatError::BadSymbol {
                        line: line_no,
                        col: c + 1,
                        symbol: ch,
                    });
                }
                block[r * n + c] = value;
            }
        }
    }

    match format {
        GridFormat::Cube => {
            let mut grid = CubeGrid::empty(n).expect("size checked");
            for (l, block) in cells.iter().enumerate() {
                for r in 0..n {
                    for c in 0..n {
                        let v = block[r * n + c];
                        if v != 0 {
                            grid.set(
                                coord(r as u8, c as u8, l as u8),
                                Some(Symbol::new(v).expect("checked")),
                            )
                            .expect("checked");
                        }
                    }
                }
            }
            Ok(ParsedGrid::Cube(grid))
        }
        GridFormat::Kurve => {
            let mut k = KurveGrid::empty(n).expect("size checked");
            for (b, block) in cells.iter().enumerate() {
                for r in 0..n {
                    for c in 0..n {
                        let v = block[r * n + c];
                        if v != 0 {
                            k.set(b, r as u8, c as u8, Some(Symbol::new(v).expect("checked")))
                                .expect("checked");
                        }
                    }
                }
            }
            Ok(ParsedGrid::Kurve(k))
        }
    }
}

/// Parses and requires the cube representation.
pub fn parse_cube(text: &str) -> Result<CubeGrid, FormatError> {
    match parse(text)? {
        ParsedGrid::Cube(g) => Ok(g),
        ParsedGrid::Kurve(_) => Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "expected a #sudocube file".into(),
        }),
    }
}

/// Parses and requires the Kurve representation.
pub fn parse_kurve(text: &str) -> Result<KurveGrid, FormatError> {
    match parse(text)? {
        ParsedGrid::Kurve(k) => Ok(k),
        ParsedGrid::Cube(_) => Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "expected a #sudokurve file".into(),
        }),
    }
}

fn push_block(out: &mut String, n: usize, mut cell: impl FnMut(u8, u8) -> u8) {
    for r in 0..n as u8 {
        for c in 0..n as u8 {
            let v = cell(r, c);
            out.push(if v == 0 { '.' } else { (b'0' + v) as char });
        }
        out.push('\n');
    }
}

/// Byte-deterministic cube serialization; inverse of [`parse_cube`].
pub fn serialize_cube(grid: &CubeGrid) -> Result<String, FormatError> {
    let n = grid.n();
    if n > MAX_KURVE_SIDE {
        return Err(FormatError::UnsupportedSize { n });
    }
    let mut out = format!("#sudocube n={n}\n");
    for l in 0..n as u8 {
        if l > 0 {
            out.push('\n');
        }
        push_block(&mut out, n, |r, c| {
            grid.get(coord(r, c, l)).map_or(0, Symbol::value)
        });
    }
    Ok(out)
}

/// Byte-deterministic Kurve serialization; inverse of [`parse_kurve`].
pub fn serialize_kurve(k: &KurveGrid) -> Result<String, FormatError> {
    let n = k.n();
    let mut out = format!("#sudokurve n={n}\n");
    for b in 0..k.block_count() {
        if b > 0 {
            out.push('\n');
        }
        push_block(&mut out, n, |r, c| k.get(b, r, c).map_or(0, Symbol::value));
    }
    Ok(out)
}

/// Serializes a cube in the requested representation, converting as needed.
pub fn serialize_as(grid: &CubeGrid, format: GridFormat) -> Result<String, FormatError> {
    match format {
        GridFormat::Cube => serialize_cube(grid),
        GridFormat::Kurve => serialize_kurve(&cube_to_kurve(grid)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Symbol;

    fn sym(v: u8) -> Symbol {
        Symbol::new(v).unwrap()
    }

    #[test]
    fn empty_kurve_maps_to_empty_cube() {
        let k = KurveGrid::empty(3).unwrap();
        let g = kurve_to_cube(&k);
        assert_eq!(g.filled_count(), 0);
    }

    #[test]
    fn middle_block_flips_across_anti_diagonal() {
        let mut k = KurveGrid::empty(3).unwrap();
        // (0,2) is a fixed point of the anti-diagonal flip.
        k.set(1, 0, 2, Some(sym(7))).unwrap();
        let g = kurve_to_cube(&k);
        assert_eq!(g.get(coord(0, 2, 1)), Some(sym(7)));

        let mut k = KurveGrid::empty(3).unwrap();
        k.set(1, 0, 0, Some(sym(4))).unwrap();
        let g = kurve_to_cube(&k);
        assert_eq!(g.get(coord(2, 2, 1)), Some(sym(4)));
    }

    #[test]
    fn bent_row_zero_uses_last_middle_column() {
        let line = bent_line(LineKind::Row, 0, 3).unwrap();
        assert_eq!(line.cells.len(), 9);
        let mid: Vec<_> = line.cells.iter().filter(|&&(b, _, _)| b == 1).collect();
        assert_eq!(mid.len(), 3);
        assert!(mid.iter().all(|&&(_, _, c)| c == 2));

        // Middle row of the first block continues as the middle column.
        let line = bent_line(LineKind::Row, 1, 3).unwrap();
        let mid: Vec<_> = line.cells.iter().filter(|&&(b, _, _)| b == 1).collect();
        assert!(mid.iter().all(|&&(_, _, c)| c == 1));

        let line = bent_line(LineKind::Column, 0, 3).unwrap();
        let mid: Vec<_> = line.cells.iter().filter(|&&(b, _, _)| b == 1).collect();
        assert!(mid.iter().all(|&&(_, r, _)| r == 2));

        assert!(bent_line(LineKind::Row, 3, 3).is_err());
    }

    #[test]
    fn bent_lines_partition_each_block() {
        for n in [2usize, 3] {
            for kind in [LineKind::Row, LineKind::Column] {
                let mut seen = vec![0u32; block_count(n)];
                for index in 0..n as u8 {
                    for (b, r, c) in bent_line(kind, index, n).unwrap().cells {
                        let bit = 1u32 << (r as usize * n + c as usize);
                        assert_eq!(seen[b] & bit, 0, "cell covered twice");
                        seen[b] |= bit;
                    }
                }
                let full = (1u32 << (n * n)) - 1;
                assert!(seen.iter().all(|&m| m == full), "block not covered");
            }
        }
    }

    #[test]
    fn bent_lines_map_onto_planes() {
        for n in [2usize, 3] {
            for index in 0..n as u8 {
                let line = bent_line(LineKind::Row, index, n).unwrap();
                for (b, r, c) in line.cells {
                    assert_eq!(block_cell_to_cube(n, b, r, c).r, index);
                }
                let line = bent_line(LineKind::Column, index, n).unwrap();
                for (b, r, c) in line.cells {
                    assert_eq!(block_cell_to_cube(n, b, r, c).c, index);
                }
            }
        }
    }

    #[test]
    fn serialize_empty_cube() {
        let g = CubeGrid::empty(3).unwrap();
        let text = serialize_cube(&g).unwrap();
        assert_eq!(
            text,
            "#sudocube n=3\n...\n...\n...\n\n...\n...\n...\n\n...\n...\n...\n"
        );
    }

    #[test]
    fn parse_rejects_bad_inputs() {
        assert!(matches!(
            parse("#sudocube n=2\n12\n34\n\n43\n21\n5"),
            Err(FormatError::Parse { .. })
        )); // missing trailing newline
        assert!(matches!(
            parse("#sudocube n=2\n12\n34\n\n43\n25\n"),
            Err(FormatError::BadSymbol { line: 6, col: 2, symbol: '5' })
        ));
        assert!(matches!(
            parse("#sudocube n=2\n123\n34\n\n43\n21\n"),
            Err(FormatError::SizeMismatch { line: 2, expected: 2, got: 3 })
        ));
        assert!(matches!(
            parse("#sudocube n=4\n"),
            Err(FormatError::UnsupportedSize { n: 4 })
        ));
        assert!(matches!(parse("nonsense\n"), Err(FormatError::Parse { .. })));
        assert!(matches!(parse(""), Err(FormatError::Parse { .. })));
        // Exactly one blank line between blocks.
        assert!(matches!(
            parse("#sudocube n=2\n12\n34\n43\n21\n\n"),
            Err(FormatError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse("#sudocube n=2\n12\n34\n\n\n43\n21\n"),
            Err(FormatError::Parse { .. })
        )); // double separator shifts the line count
        // Stray content after the final block.
        assert!(matches!(
            parse("#sudocube n=2\n12\n34\n\n43\n21\n\n"),
            Err(FormatError::Parse { .. })
        ));
        // Whitespace inside a row counts as a bad symbol.
        assert!(matches!(
            parse("#sudocube n=2\n1 \n34\n\n43\n21\n"),
            Err(FormatError::BadSymbol { symbol: ' ', .. })
        ));
    }

    #[test]
    fn text_round_trips_on_random_partial_grids() {
        let mut rng = crate::rng::CounterRng::new(0x7E47);
        for trial in 0..1000 {
            let n = if trial % 4 == 0 { 2 } else { 3 };
            let mut g = CubeGrid::empty(n).unwrap();
            for at in g.coords() {
                if rng.below(2) == 1 {
                    let v = 1 + rng.below((n * n) as u64) as u8;
                    g.set(at, Some(sym(v))).unwrap();
                }
            }
            let text = serialize_cube(&g).unwrap();
            assert_eq!(parse_cube(&text).unwrap(), g);
            assert_eq!(serialize_cube(&parse_cube(&text).unwrap()).unwrap(), text);

            let k = cube_to_kurve(&g).unwrap();
            let ktext = serialize_kurve(&k).unwrap();
            assert_eq!(parse_kurve(&ktext).unwrap(), k);
        }
    }

    #[test]
    fn size_1_round_trips() {
        let text = "#sudocube n=1\n1\n";
        let ParsedGrid::Cube(g) = parse(text).unwrap() else { panic!() };
        assert!(g.is_complete() && g.is_valid());
        assert_eq!(serialize_cube(&g).unwrap(), text);
        let k = cube_to_kurve(&g).unwrap();
        assert_eq!(kurve_to_cube(&k), g);
        assert_eq!(serialize_kurve(&k).unwrap(), "#sudokurve n=1\n1\n");
    }

    #[test]
    fn parse_serialize_round_trip() {
        let text = "#sudocube n=2\n12\n34\n\n43\n21\n";
        let parsed = parse(text).unwrap();
        let ParsedGrid::Cube(g) = &parsed else { panic!() };
        assert!(g.is_complete() && g.is_valid());
        assert_eq!(serialize_cube(g).unwrap(), text);

        let ktext = "#sudokurve n=3\n1.3\n...\n...\n\n..5\n...\n...\n\n...\n.2.\n...\n";
        let parsed = parse(ktext).unwrap();
        let ParsedGrid::Kurve(k) = &parsed else { panic!() };
        assert_eq!(serialize_kurve(k).unwrap(), ktext);
    }

    #[test]
    fn cube_to_kurve_rejects_size_4() {
        let g = CubeGrid::empty(4).unwrap();
        assert_eq!(cube_to_kurve(&g), Err(FormatError::UnsupportedSize { n: 4 }));
    }
}
