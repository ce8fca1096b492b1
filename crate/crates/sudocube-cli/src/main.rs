//! Command-line surface for the sudocube library: censuses, symmetry
//! reports, solving, generation, format conversion, and the full
//! reproduction suite. Reports are line-oriented `key=value` text plus grid
//! blocks in the standard format, byte-identical across runs.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sudocube::clues::{
    count_unique_subsets, find_minimal_puzzle, find_minimal_puzzle_seeded, generate_puzzle,
    min_clue_lower_bound,
};
use sudocube::enumerate::{
    all_base_grids, classify_case, count_digit_placements, all_single_digit_placements,
    sudo_cases, total_grids, CaseLabel,
};
use sudocube::grid::CubeGrid;
use sudocube::isomap::{
    cube_to_kurve, kurve_to_cube, parse, serialize_as, serialize_cube, serialize_kurve,
    GridFormat, ParsedGrid,
};
use sudocube::solve::{
    analyze, count_solutions, count_solutions_backtracking, Puzzle, SolveStatus,
};
use sudocube::symmetry::{
    diagonal_planes_signature, orbit_partition, placement_census, shape_census,
    uniform_partition_detector,
};
use sudocube::verify;

#[derive(Parser)]
#[command(name = "sudocube", version, about = "Cube Sudo-Kurve census, symmetry, and solving tool")]
struct Cli {
    /// Bound worker parallelism for enumeration and search commands.
    /// Output is identical for every value.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Cube,
    Kurve,
}

impl From<FormatArg> for GridFormat {
    fn from(f: FormatArg) -> GridFormat {
        match f {
            FormatArg::Cube => GridFormat::Cube,
            FormatArg::Kurve => GridFormat::Kurve,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count base grids and total solution grids.
    Count {
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Print every base grid.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Partition the base grids into symmetry classes.
    Orbits {
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Case split of the 40 base grids by their middle layer's first row.
    Classify,
    /// The ten sudo-cases (digit 5 pinned to the middle layer's upper left).
    SudoCases {
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve a puzzle file: deductions, solution count, and the solution.
    Solve {
        /// Path to a puzzle file, '-' for stdin.
        #[arg(long)]
        input: String,
        /// Stop counting solutions at this bound.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Validate a grid or puzzle file.
    Check {
        #[arg(long)]
        input: String,
    },
    /// Minimum-clue bound with certified witness puzzles.
    Minclues {
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Clue count to search for (defaults to the lower bound).
        #[arg(long)]
        clues: Option<usize>,
        /// Walk clue subsets in a seeded order instead of lexicographic.
        #[arg(long)]
        seed: Option<u64>,
        /// Also count unique-solution subsets exhaustively, including the
        /// full check that no smaller subset works.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate a puzzle and its solution from a seed.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Number of clues (defaults to the minimum for the size).
        #[arg(long)]
        clues: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Convert a file between the cube and bent-grid representations.
    Convert {
        #[arg(long)]
        input: String,
        /// Target representation.
        #[arg(long, value_enum)]
        to: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Shape censuses (per grid and over all placements).
    Shapes {
        /// Classify this grid instead of the base-grid census.
        #[arg(long)]
        input: Option<String>,
    },
    /// Single-digit placement count for a cube side.
    Placements {
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Run the full reproduction suite and print a pass/fail table.
    VerifyPaper,
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        // Ignore the error when a pool already exists (tests, repeat calls).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let (report, code, output) = match dispatch(cli.command) {
        Ok((report, code, output)) => (report, code, output),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    let written = match output {
        Some(path) => fs::write(&path, report)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout()
            .write_all(report.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(message) = written {
        eprintln!("error: {message}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn dispatch(command: Command) -> Result<(String, u8, Option<PathBuf>), Failure> {
    let (report, code, output) = match command {
        Command::Count { size } => {
            let (r, c) = cmd_count(size)?;
            (r, c, None)
        }
        Command::Enumerate {
            size,
            format,
            output,
        } => {
            let (r, c) = cmd_enumerate(size, format.into())?;
            (r, c, output)
        }
        Command::Orbits { size } => {
            let (r, c) = cmd_orbits(size)?;
            (r, c, None)
        }
        Command::Classify => {
            let (r, c) = cmd_classify()?;
            (r, c, None)
        }
        Command::SudoCases { format, output } => {
            let (r, c) = cmd_sudo_cases(format.into())?;
            (r, c, output)
        }
        Command::Solve { input, cap, output } => {
            let (r, c) = cmd_solve(&input, cap)?;
            (r, c, output)
        }
        Command::Check { input } => {
            let (r, c) = cmd_check(&input)?;
            (r, c, None)
        }
        Command::Minclues {
            size,
            clues,
            seed,
            exhaustive,
            output,
        } => {
            let (r, c) = cmd_minclues(size, clues, seed, exhaustive)?;
            (r, c, output)
        }
        Command::Generate {
            seed,
            size,
            clues,
            format,
            output,
        } => {
            let (r, c) = cmd_generate(seed, size, clues, format.into())?;
            (r, c, output)
        }
        Command::Convert { input, to, output } => {
            let (r, c) = cmd_convert(&input, to.into())?;
            (r, c, output)
        }
        Command::Shapes { input } => {
            let (r, c) = cmd_shapes(input.as_deref())?;
            (r, c, None)
        }
        Command::Placements { size } => {
            let (r, c) = cmd_placements(size)?;
            (r, c, None)
        }
        Command::VerifyPaper => {
            let (r, c) = cmd_verify_paper()?;
            (r, c, None)
        }
    };
    Ok((report, code, output))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::invalid(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::invalid(format!("cannot read {path}: {e}")))
    }
}

fn parse_input(path: &str) -> Result<ParsedGrid, Failure> {
    let text = read_input(path)?;
    parse(&text).map_err(|e| Failure::invalid(format!("{path}: {e}")))
}

fn cmd_count(size: usize) -> CmdResult {
    let base = all_base_grids(size)
        .map_err(|e| Failure::invalid(e.to_string()))?
        .len();
    let total = total_grids(size).map_err(|e| Failure::invalid(e.to_string()))?;
    Ok((format!("base={base}\ntotal={total}\n"), 0))
}

fn cmd_enumerate(size: usize, format: GridFormat) -> CmdResult {
    let grids = all_base_grids(size).map_err(|e| Failure::invalid(e.to_string()))?;
    let mut out = format!("count={}\n", grids.len());
    for (i, grid) in grids.iter().enumerate() {
        let _ = writeln!(out, "index={i}");
        out.push_str(
            &serialize_as(grid, format).map_err(|e| Failure::invalid(e.to_string()))?,
        );
    }
    Ok((out, 0))
}

fn cmd_orbits(size: usize) -> CmdResult {
    let grids = all_base_grids(size).map_err(|e| Failure::invalid(e.to_string()))?;
    let classes = orbit_partition(&grids);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    sizes.sort_unstable();
    let sizes_text: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    let mut out = format!("classes={}\n", classes.len());
    let _ = writeln!(out, "sizes={}", sizes_text.join(","));
    for class in &classes {
        let _ = writeln!(
            out,
            "class_size={} representative={}",
            class.members.len(),
            class.representative
        );
    }
    Ok((out, 0))
}

fn case_split_lines(grids: &[CubeGrid]) -> String {
    let mut counts = [0usize; 3];
    for g in grids {
        match classify_case(g).expect("base grids classify") {
            CaseLabel::Case1 => counts[0] += 1,
            CaseLabel::Case2 => counts[1] += 1,
            CaseLabel::Case3 => counts[2] += 1,
        }
    }
    format!(
        "case1={}\ncase2={}\ncase3={}\n",
        counts[0], counts[1], counts[2]
    )
}

fn cmd_classify() -> CmdResult {
    let grids = all_base_grids(3).expect("size 3 supported");
    let mut out = format!("base={}\n", grids.len());
    out.push_str(&case_split_lines(&grids));
    Ok((out, 0))
}

fn cmd_sudo_cases(format: GridFormat) -> CmdResult {
    let cases = sudo_cases();
    let mut out = format!("count={}\n", cases.len());
    out.push_str(&case_split_lines(&cases));
    for (i, grid) in cases.iter().enumerate() {
        let _ = writeln!(out, "index={i}");
        out.push_str(
            &serialize_as(grid, format).map_err(|e| Failure::invalid(e.to_string()))?,
        );
    }
    Ok((out, 0))
}

fn cmd_solve(input: &str, cap: Option<u64>) -> CmdResult {
    let parsed = parse_input(input)?;
    let format = parsed.format();
    let grid = parsed.into_cube();
    let puzzle = Puzzle::from_grid(&grid);
    let report = analyze(&puzzle, cap.unwrap_or(u64::MAX));
    let mut out = format!("status={}\n", report.status);
    if let Some(count) = report.count {
        let _ = writeln!(out, "count={count}");
    }
    let _ = writeln!(out, "deductions={}", report.deductions.len());
    for d in &report.deductions {
        let _ = writeln!(
            out,
            "deduction=r{}c{}l{} digit={} rule={}",
            d.cell.r, d.cell.c, d.cell.l, d.digit, d.rule
        );
    }
    let code = match report.status {
        SolveStatus::Unique => 0,
        SolveStatus::None => 2,
        SolveStatus::Multiple => 3,
        SolveStatus::Stalled => 0,
    };
    if report.status == SolveStatus::Unique {
        if let Ok(grade) = sudocube::solve::grade(&puzzle) {
            let _ = writeln!(out, "grade={grade}");
        }
    }
    if let Some(solution) = &report.solution {
        out.push_str(
            &serialize_as(solution, format).map_err(|e| Failure::invalid(e.to_string()))?,
        );
    }
    Ok((out, code))
}

fn cmd_check(input: &str) -> CmdResult {
    let parsed = parse_input(input)?;
    let (valid, complete) = match &parsed {
        ParsedGrid::Cube(g) => (g.is_valid(), g.is_complete()),
        ParsedGrid::Kurve(k) => {
            let g = kurve_to_cube(k);
            debug_assert_eq!(k.is_valid(), g.is_valid());
            (k.is_valid(), g.is_complete())
        }
    };
    let out = format!("valid={valid}\ncomplete={complete}\n");
    Ok((out, u8::from(!valid)))
}

fn cmd_minclues(
    size: usize,
    clues: Option<usize>,
    seed: Option<u64>,
    exhaustive: bool,
) -> CmdResult {
    let bound = min_clue_lower_bound(size).map_err(|e| Failure::invalid(e.to_string()))?;
    let k = clues.unwrap_or(bound);
    let grids = all_base_grids(size).expect("bound exists only for sizes 1-3");
    let classes = orbit_partition(&grids);
    let mut out = format!("lower_bound={bound}\nclues={k}\nclasses={}\n", classes.len());
    for class in &classes {
        let found = class.members.iter().find_map(|&i| {
            let result = match seed {
                Some(s) => find_minimal_puzzle_seeded(&grids[i], k, s, None),
                None => find_minimal_puzzle(&grids[i], k, None),
            };
            result.map(|clues| (i, clues))
        });
        let _ = writeln!(out, "class_size={}", class.members.len());
        match found {
            Some((grid_index, clue_set)) => {
                let puzzle = clue_set.to_puzzle(size);
                let fast = count_solutions(&puzzle, u64::MAX);
                let slow = count_solutions_backtracking(&puzzle, u64::MAX);
                let _ = writeln!(out, "witness_grid={grid_index}");
                let _ = writeln!(out, "witness_clues={}", clue_set.len());
                let _ = writeln!(out, "count_partition={fast}");
                let _ = writeln!(out, "count_backtracking={slow}");
                out.push_str(
                    &serialize_cube(puzzle.grid())
                        .map_err(|e| Failure::invalid(e.to_string()))?,
                );
            }
            None => {
                let _ = writeln!(out, "witness_grid=none");
            }
        }
        if exhaustive {
            let representative = class.representative;
            if k > 0 {
                let below = count_unique_subsets(&grids[representative], k - 1);
                let _ = writeln!(out, "unique_subsets_below={below}");
            }
            let at = count_unique_subsets(&grids[representative], k);
            let _ = writeln!(out, "unique_subsets={at}");
        }
    }
    Ok((out, 0))
}

fn cmd_generate(seed: u64, size: usize, clues: Option<usize>, format: GridFormat) -> CmdResult {
    let k = match clues {
        Some(k) => k,
        None => min_clue_lower_bound(size).map_err(|e| Failure::invalid(e.to_string()))?,
    };
    let (puzzle, solution) =
        generate_puzzle(seed, size, k).map_err(|e| Failure::invalid(e.to_string()))?;
    let mut out = format!("seed={seed}\nsize={size}\nclues={}\n", puzzle.clues().len());
    out.push_str("section=puzzle\n");
    out.push_str(
        &serialize_as(puzzle.grid(), format).map_err(|e| Failure::invalid(e.to_string()))?,
    );
    out.push_str("section=solution\n");
    out.push_str(
        &serialize_as(&solution, format).map_err(|e| Failure::invalid(e.to_string()))?,
    );
    Ok((out, 0))
}

fn cmd_convert(input: &str, to: GridFormat) -> CmdResult {
    let parsed = parse_input(input)?;
    let out = match (parsed, to) {
        (ParsedGrid::Cube(g), GridFormat::Cube) => serialize_cube(&g),
        (ParsedGrid::Cube(g), GridFormat::Kurve) => {
            cube_to_kurve(&g).and_then(|k| serialize_kurve(&k))
        }
        (ParsedGrid::Kurve(k), GridFormat::Kurve) => serialize_kurve(&k),
        (ParsedGrid::Kurve(k), GridFormat::Cube) => serialize_cube(&kurve_to_cube(&k)),
    }
    .map_err(|e| Failure::invalid(e.to_string()))?;
    Ok((out, 0))
}

fn cmd_shapes(input: Option<&str>) -> CmdResult {
    match input {
        Some(path) => {
            let grid = parse_input(path)?.into_cube();
            if grid.n() != 3 || !grid.is_complete() || !grid.is_valid() {
                return Err(Failure::invalid(
                    "shape census needs a complete valid size-3 grid",
                ));
            }
            let census = shape_census(&grid);
            let sig = diagonal_planes_signature(&grid);
            let out = format!(
                "diagonal={}\nscalene_corner={}\nequilateral={}\nuniform_partition={}\nplane_signature={},{},{}\n",
                census.diagonal,
                census.scalene_corner,
                census.equilateral,
                uniform_partition_detector(&grid),
                sig[0],
                sig[1],
                sig[2],
            );
            Ok((out, 0))
        }
        None => {
            let grids = all_base_grids(3).expect("size 3 supported");
            let mut per_grid = None;
            let mut uniform = true;
            for g in &grids {
                let census = shape_census(g);
                let triple = (census.diagonal, census.scalene_corner, census.equilateral);
                match per_grid {
                    None => per_grid = Some(triple),
                    Some(t) => uniform &= t == triple,
                }
            }
            let (d, s, e) = per_grid.expect("40 grids");
            let global = placement_census();
            let out = format!(
                "grids={}\nuniform={}\ndiagonal={d}\nscalene_corner={s}\nequilateral={e}\nplacements_diagonal={}\nplacements_scalene_corner={}\nplacements_equilateral={}\n",
                grids.len(),
                uniform,
                global.diagonal,
                global.scalene_corner,
                global.equilateral,
            );
            Ok((out, 0))
        }
    }
}

fn cmd_placements(size: usize) -> CmdResult {
    let count = count_digit_placements(size).map_err(|e| Failure::invalid(e.to_string()))?;
    let enumerated = all_single_digit_placements(size).len();
    Ok((format!("placements={count}\nenumerated={enumerated}\n"), 0))
}

fn cmd_verify_paper() -> CmdResult {
    let checks = verify::all_checks();
    let mut out = String::new();
    let mut all_passed = true;
    for check in &checks {
        let status = if check.passed { "pass" } else { "fail" };
        let _ = writeln!(out, "{}={status}", check.name);
        if !check.detail.is_empty() {
            let _ = writeln!(out, "{}_detail={}", check.name, check.detail);
        }
        all_passed &= check.passed;
    }
    let _ = writeln!(out, "result={}", if all_passed { "pass" } else { "fail" });
    Ok((out, if all_passed { 0 } else { 4 }))
}
