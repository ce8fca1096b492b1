//! The reproduction suite: one check per headline count or structural fact,
//! shared by the acceptance tests and the `verify-paper` CLI command.

use std::collections::HashSet;
use std::fmt::Debug;

use rayon::prelude::*;

use crate::clues::{
    find_minimal_puzzle, min_clue_lower_bound, second_solution_by_symbol_swap,
};
use crate::enumerate::{
    all_base_grids, all_single_digit_placements, classify_case, count_digit_placements,
    five_corner_positions, sudo_cases, total_grids, CaseLabel, FACTORIALS,
};
use crate::grid::{coord, Axis, Coord, CubeGrid, Symbol};
use crate::isomap::{cube_to_kurve, kurve_to_cube, KurveGrid};
use crate::rng::CounterRng;
use crate::solve::{count_solutions, count_solutions_backtracking, Puzzle};
use crate::symmetry::{
    diagonal_planes_signature, normalize_to_sudo_case, orbit_partition, placement_census,
    shape_census, uniform_partition_detector, GeometricTransform, GroupElement, Relabeling,
};

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

struct Ctx {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Ctx {
    fn new() -> Ctx {
        Ctx {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, cond: bool, what: &str) {
        if !cond {
            self.failures.push(what.to_string());
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self, name: &'static str) -> Check {
        let passed = self.failures.is_empty();
        let detail = if passed {
            self.notes.join("; ")
        } else {
            self.failures.join("; ")
        };
        Check {
            name,
            passed,
            detail,
        }
    }
}

fn sym(v: u8) -> Symbol {
    Symbol::new(v).expect("in range")
}

fn case_counts(grids: &[CubeGrid]) -> [usize; 3] {
    let mut counts = [0usize; 3];
    for g in grids {
        match classify_case(g).expect("base grids") {
            CaseLabel::Case1 => counts[0] += 1,
            CaseLabel::Case2 => counts[1] += 1,
            CaseLabel::Case3 => counts[2] += 1,
        }
    }
    counts
}

/// Base census: 40 base grids, 40·9! = 14 515 200 total.
pub fn base_census() -> Check {
    let mut ctx = Ctx::new();
    let grids = all_base_grids(3).expect("size 3");
    ctx.eq("base grid count", grids.len(), 40);
    ctx.check(
        grids.iter().all(|g| g.is_complete() && g.is_valid()),
        "all base grids complete and valid",
    );
    ctx.eq("total", total_grids(3).expect("size 3"), 14_515_200);
    ctx.eq("total factorization", 40 * FACTORIALS[9], 14_515_200);
    ctx.note("base=40 total=14515200".into());
    ctx.finish("base_census")
}

/// Case split over the 40 base grids: 16 + 12 + 12.
pub fn case_split() -> Check {
    let mut ctx = Ctx::new();
    let grids = all_base_grids(3).expect("size 3");
    let counts = case_counts(&grids);
    ctx.eq("case split", counts, [16, 12, 12]);
    ctx.note(format!(
        "case1={} case2={} case3={}",
        counts[0], counts[1], counts[2]
    ));
    ctx.finish("case_split")
}

/// Ten sudo-cases, split 4/3/3, with 10·4·9! recovering the total.
pub fn sudo_case_census() -> Check {
    let mut ctx = Ctx::new();
    let cases = sudo_cases();
    ctx.eq("sudo-case count", cases.len(), 10);
    let counts = case_counts(&cases);
    ctx.eq("sudo-case split", counts, [4, 3, 3]);
    ctx.eq(
        "10·4·9! equals total",
        10 * 4 * FACTORIALS[9],
        total_grids(3).expect("size 3"),
    );
    ctx.note("sudo_cases=10 split=4/3/3".into());
    ctx.finish("sudo_cases")
}

/// Digit 5's layer-1 cell is a corner in every base grid, ten per corner.
pub fn corner_law() -> Check {
    let mut ctx = Ctx::new();
    let report = five_corner_positions();
    ctx.check(report.satisfies_corner_law(), "corner law");
    ctx.note(format!(
        "corners={},{},{},{}",
        report.counts[0][0], report.counts[0][2], report.counts[2][0], report.counts[2][2]
    ));
    ctx.finish("corner_law")
}

/// Two symmetry classes of sizes 4 and 36; the ten sudo-cases split 1+9; the
/// uniform-partition detector marks exactly the small class.
pub fn symmetry_classes() -> Check {
    let mut ctx = Ctx::new();
    let grids = all_base_grids(3).expect("size 3");
    let classes = orbit_partition(&grids);
    ctx.eq("class count", classes.len(), 2);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    sizes.sort_unstable();
    ctx.eq("class sizes", sizes.clone(), vec![4, 36]);

    let case_classes = orbit_partition(&sudo_cases());
    let mut case_sizes: Vec<usize> = case_classes.iter().map(|c| c.members.len()).collect();
    case_sizes.sort_unstable();
    ctx.eq("sudo-case class sizes", case_sizes, vec![1, 9]);

    if let Some(small) = classes.iter().find(|c| c.members.len() == 4) {
        let small_set: HashSet<usize> = small.members.iter().copied().collect();
        let agree = grids
            .iter()
            .enumerate()
            .all(|(i, g)| uniform_partition_detector(g) == small_set.contains(&i));
        ctx.check(agree, "detector marks exactly the small class");
    }
    ctx.note("classes=2 sizes=4,36 sudo_split=1+9".into());
    ctx.finish("symmetry_classes")
}

/// The five named equivalence transforms map sudo-cases onto sudo-cases,
/// preserve the class split, and together connect the whole large class.
pub fn explicit_transforms() -> Check {
    let mut ctx = Ctx::new();
    let cases = sudo_cases();
    let index_of: std::collections::HashMap<Vec<u8>, usize> = cases
        .iter()
        .enumerate()
        .map(|(i, g)| (g.key_bytes().to_vec(), i))
        .collect();
    let small: Vec<bool> = cases.iter().map(uniform_partition_detector).collect();

    let reflection = GroupElement {
        geo: GeometricTransform::axis_swap(Axis::Row, Axis::Col, 3),
        relabel: Relabeling::from_swaps(3, &[(2, 4), (3, 7), (6, 8)]),
    };
    let transforms: Vec<(&str, GroupElement)> = vec![
        ("block_transpose_relabel", reflection),
        (
            "swap_blocks_0_1",
            GroupElement::from_geo(GeometricTransform::layer_swap(Axis::Layer, 0, 1, 3)),
        ),
        (
            "swap_blocks_1_2",
            GroupElement::from_geo(GeometricTransform::layer_swap(Axis::Layer, 1, 2, 3)),
        ),
        (
            "swap_rows_0_1",
            GroupElement::from_geo(GeometricTransform::layer_swap(Axis::Row, 0, 1, 3)),
        ),
        (
            "diagonal_rotation",
            GroupElement::from_geo(GeometricTransform::diagonal_rotation(3)),
        ),
    ];

    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    for (name, element) in &transforms {
        let mut images = Vec::with_capacity(cases.len());
        for (i, case) in cases.iter().enumerate() {
            let moved = element.apply(case);
            let (normal, _) = normalize_to_sudo_case(&moved);
            match index_of.get(normal.key_bytes()) {
                Some(&j) => {
                    ctx.check(
                        small[i] == small[j],
                        &format!("{name} preserves the class of sudo-case {i}"),
                    );
                    if !small[i] && !small[j] {
                        edges.insert((i.min(j), i.max(j)));
                    }
                    images.push(j);
                }
                None => {
                    ctx.check(false, &format!("{name} image of sudo-case {i} is a sudo-case"));
                    images.push(usize::MAX);
                }
            }
        }
        ctx.check(
            images.iter().enumerate().any(|(i, &j)| i != j && !small[i]),
            &format!("{name} moves some large-class sudo-case"),
        );
        ctx.note(format!(
            "{name} [{element}] maps {}",
            images
                .iter()
                .enumerate()
                .map(|(i, j)| format!("{i}->{j}"))
                .collect::<Vec<_>>()
                .join(",")
        ));
    }

    // The transpose-plus-relabel keeps sudo-case form directly: no
    // renormalization needed.
    for case in &cases {
        let image = reflection.apply(case);
        ctx.check(
            index_of.contains_key(image.key_bytes()),
            "reflection image is itself a sudo-case without renormalization",
        );
    }

    // Union of the induced moves connects the nine large-class sudo-cases.
    let large: Vec<usize> = (0..cases.len()).filter(|&i| !small[i]).collect();
    let mut reach: HashSet<usize> = large.iter().take(1).copied().collect();
    loop {
        let grown: HashSet<usize> = reach
            .iter()
            .flat_map(|&a| {
                edges
                    .iter()
                    .filter_map(move |&(x, y)| match (x == a, y == a) {
                        (true, _) => Some(y),
                        (_, true) => Some(x),
                        _ => None,
                    })
            })
            .chain(reach.iter().copied())
            .collect();
        if grown.len() == reach.len() {
            break;
        }
        reach = grown;
    }
    ctx.eq("large class connected by the five transforms", reach.len(), large.len());
    ctx.finish("explicit_transforms")
}

/// Totals 1, 24, 14 515 200 and class counts 1, 1, 2 for sizes 1-3, plus the
/// antipodal structure of the size-2 solution.
pub fn small_sizes() -> Check {
    let mut ctx = Ctx::new();
    ctx.eq("total size 1", total_grids(1).expect("size 1"), 1);
    ctx.eq("total size 2", total_grids(2).expect("size 2"), 24);
    ctx.eq("total size 3", total_grids(3).expect("size 3"), 14_515_200);

    ctx.eq(
        "classes size 1",
        orbit_partition(&all_base_grids(1).expect("size 1")).len(),
        1,
    );
    // All 24 complete size-2 grids: every relabeling of the lone base grid.
    let base2 = &all_base_grids(2).expect("size 2")[0];
    let mut grids2 = Vec::new();
    let mut images = [1u8, 2, 3, 4];
    heap_permutations(&mut images, 4, &mut |perm| {
        let rel = Relabeling::from_images(2, perm);
        grids2.push(
            GroupElement {
                geo: GeometricTransform::identity(2),
                relabel: rel,
            }
            .apply(base2),
        );
    });
    ctx.eq("size-2 grid count", grids2.len(), 24);
    ctx.eq("classes size 2", orbit_partition(&grids2).len(), 1);
    ctx.eq(
        "classes size 3",
        orbit_partition(&all_base_grids(3).expect("size 3")).len(),
        2,
    );

    let antipodal = base2
        .coords()
        .all(|at| base2.get(at) == base2.get(coord(1 - at.r, 1 - at.c, 1 - at.l)));
    ctx.check(antipodal, "size-2 grid is antipodal");
    ctx.note("totals=1,24,14515200 classes=1,1,2".into());
    ctx.finish("small_sizes")
}

fn heap_permutations(xs: &mut [u8; 4], k: usize, visit: &mut impl FnMut(&[u8])) {
    if k == 1 {
        visit(xs);
        return;
    }
    for i in 0..k {
        heap_permutations(xs, k - 1, visit);
        if k % 2 == 0 {
            xs.swap(i, k - 1);
        } else {
            xs.swap(0, k - 1);
        }
    }
}

/// Minimum clues: every sampled 7-clue puzzle admits a symbol-swap second
/// solution; certified 8-clue witnesses exist in both symmetry classes; the
/// size-2 analog needs exactly 3.
pub fn minimum_clues() -> Check {
    let mut ctx = Ctx::new();
    ctx.eq("bound size 1", min_clue_lower_bound(1).expect("size 1"), 0);
    ctx.eq("bound size 2", min_clue_lower_bound(2).expect("size 2"), 3);
    ctx.eq("bound size 3", min_clue_lower_bound(3).expect("size 3"), 8);

    let grids = all_base_grids(3).expect("size 3");
    let mut rng = CounterRng::new(0xC1_0E5);
    let mut samples = Vec::with_capacity(1000);
    for _ in 0..1000 {
        let base = &grids[rng.below(40) as usize];
        let mut images: Vec<u8> = (1..=9).collect();
        rng.shuffle(&mut images);
        let solution = GroupElement {
            geo: GeometricTransform::identity(3),
            relabel: Relabeling::from_images(3, &images),
        }
        .apply(base);
        let mut order: Vec<usize> = (0..27).collect();
        rng.shuffle(&mut order);
        let cells: Vec<(Coord, Symbol)> = solution.filled_cells().collect();
        let clues: Vec<(Coord, Symbol)> = order[..7].iter().map(|&i| cells[i]).collect();
        samples.push((solution, clues));
    }
    let bad_samples = samples
        .par_iter()
        .filter(|(solution, clues)| {
            let p = match Puzzle::new(3, clues.clone()) {
                Ok(p) => p,
                Err(_) => return true,
            };
            let second = match second_solution_by_symbol_swap(&p, solution) {
                Ok(s) => s,
                Err(_) => return true,
            };
            let extends = p.clues().iter().all(|&(at, s)| second.get(at) == Some(s));
            let distinct = second != *solution;
            let multi = count_solutions(&p, 2) >= 2;
            !(second.is_valid() && second.is_complete() && extends && distinct && multi)
        })
        .count();
    ctx.eq("7-clue samples with no second solution", bad_samples, 0);

    // Analytic guard: the pruned search refuses k below the symbol bound.
    ctx.check(
        find_minimal_puzzle(&grids[0], 7, None).is_none(),
        "7-clue search prunes to nothing",
    );

    // A certified witness in each symmetry class.
    for class in orbit_partition(&grids) {
        let found = class.members.iter().find_map(|&i| {
            find_minimal_puzzle(&grids[i], 8, None).map(|clues| (i, clues))
        });
        match found {
            Some((i, clues)) => {
                let p = clues.to_puzzle(3);
                let fast = count_solutions(&p, u64::MAX);
                let slow = count_solutions_backtracking(&p, u64::MAX);
                ctx.eq("fast counter certifies the witness", fast, 1);
                ctx.eq("backtracking counter certifies the witness", slow, 1);
                ctx.note(format!(
                    "class_size={} witness_grid={} clues={}",
                    class.members.len(),
                    i,
                    clues
                        .cells()
                        .iter()
                        .map(|(at, s)| format!("{at}={s}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            None => ctx.check(
                false,
                &format!(
                    "8-clue witness exists in the class of size {}",
                    class.members.len()
                ),
            ),
        }
    }

    // Size-2 analog.
    let base2 = &all_base_grids(2).expect("size 2")[0];
    ctx.check(
        find_minimal_puzzle(base2, 2, None).is_none(),
        "2 clues never suffice at size 2",
    );
    match find_minimal_puzzle(base2, 3, None) {
        Some(clues) => {
            let p = clues.to_puzzle(2);
            ctx.eq("size-2 witness fast count", count_solutions(&p, u64::MAX), 1);
            ctx.eq(
                "size-2 witness backtracking count",
                count_solutions_backtracking(&p, u64::MAX),
                1,
            );
        }
        None => ctx.check(false, "3-clue witness exists at size 2"),
    }
    ctx.finish("minimum_clues")
}

/// Placement counts 1, 4, 36, 576 with oracle agreement.
pub fn digit_placements() -> Check {
    let mut ctx = Ctx::new();
    for (n, want) in [(1usize, 1u64), (2, 4), (3, 36), (4, 576)] {
        ctx.eq(
            &format!("formula size {n}"),
            count_digit_placements(n).expect("sizes 1-4"),
            want,
        );
        ctx.eq(
            &format!("enumeration size {n}"),
            all_single_digit_placements(n).len() as u64,
            want,
        );
    }
    ctx.note("placements=1,4,36,576".into());
    ctx.finish("digit_placements")
}

/// Per-grid shape census {1,6,2} on all 40 base grids; global placement
/// census {4,24,8}.
pub fn shape_censuses() -> Check {
    let mut ctx = Ctx::new();
    for g in all_base_grids(3).expect("size 3") {
        let census = shape_census(&g);
        ctx.check(
            census.diagonal == 1 && census.scalene_corner == 6 && census.equilateral == 2,
            "per-grid census is 1/6/2",
        );
    }
    let global = placement_census();
    ctx.eq(
        "placement census",
        (global.diagonal, global.scalene_corner, global.equilateral),
        (4, 24, 8),
    );
    ctx.eq("placement census total", global.total(), 36);
    ctx.note("per_grid=1,6,2 global=4,24,8".into());
    ctx.finish("shape_census")
}

/// Diagonal-plane signature (3,3,3) exactly on the small class.
pub fn plane_recognition() -> Check {
    let mut ctx = Ctx::new();
    let grids = all_base_grids(3).expect("size 3");
    let classes = orbit_partition(&grids);
    let small: HashSet<usize> = classes
        .iter()
        .find(|c| c.members.len() == 4)
        .map(|c| c.members.iter().copied().collect())
        .unwrap_or_default();
    for (i, g) in grids.iter().enumerate() {
        let sig = diagonal_planes_signature(g);
        if small.contains(&i) {
            ctx.eq("small-class signature", sig, [3, 3, 3]);
        } else {
            ctx.check(
                sig.iter().any(|&c| c > 3),
                "large-class grids have a plane with more than 3 digits",
            );
        }
    }
    ctx.note("small_class_signature=3,3,3".into());
    ctx.finish("plane_recognition")
}

/// The two counters agree exactly on the empty puzzle, all 27×9 single-clue
/// puzzles, and 1000 seeded random clue sets.
pub fn counter_agreement() -> Check {
    let mut ctx = Ctx::new();

    let empty = Puzzle::new(3, vec![]).expect("empty clue set");
    let fast = count_solutions(&empty, u64::MAX);
    let slow = count_solutions_backtracking(&empty, u64::MAX);
    ctx.eq("empty puzzle fast", fast, 14_515_200);
    ctx.eq("empty puzzle backtracking", slow, 14_515_200);

    let singles: Vec<Puzzle> = CubeGrid::empty(3)
        .expect("size 3")
        .coords()
        .flat_map(|at| (1..=9u8).map(move |v| (at, v)))
        .map(|(at, v)| Puzzle::new(3, vec![(at, sym(v))]).expect("single clue"))
        .collect();
    let single_mismatches = singles
        .par_iter()
        .filter(|p| {
            let fast = count_solutions(p, u64::MAX);
            fast != count_solutions_backtracking(p, u64::MAX) || fast != 14_515_200 / 9
        })
        .count();
    ctx.eq("single-clue mismatches", single_mismatches, 0);

    let mut rng = CounterRng::new(0xAC0);
    let mut random_sets = Vec::with_capacity(1000);
    for _ in 0..1000 {
        let k = 6 + rng.below(11) as usize;
        let mut order: Vec<usize> = (0..27).collect();
        rng.shuffle(&mut order);
        let clues: Vec<(Coord, Symbol)> = order[..k]
            .iter()
            .map(|&i| {
                let at = coord((i / 3 % 3) as u8, (i % 3) as u8, (i / 9) as u8);
                (at, sym(1 + rng.below(9) as u8))
            })
            .collect();
        random_sets.push(Puzzle::new(3, clues).expect("distinct cells"));
    }
    let random_mismatches = random_sets
        .par_iter()
        .filter(|p| count_solutions(p, u64::MAX) != count_solutions_backtracking(p, u64::MAX))
        .count();
    ctx.eq("random clue-set mismatches", random_mismatches, 0);
    ctx.note("empty=14515200 singles=243 random=1000".into());
    ctx.finish("counter_agreement")
}

/// Kurve↔cube round trips are the identity and validity transfers, over
/// 10 000 random partial grids.
pub fn isomorphism_round_trip() -> Check {
    let mut ctx = Ctx::new();
    let mut rng = CounterRng::new(0x150);
    let mut mismatches = 0usize;
    for trial in 0..10_000 {
        let n = if trial % 4 == 0 { 2 } else { 3 };
        let mut g = CubeGrid::empty(n).expect("sizes 2-3");
        for at in g.coords() {
            if rng.below(2) == 1 {
                let v = 1 + rng.below((n * n) as u64) as u8;
                g.set(at, Some(sym(v))).expect("in range");
            }
        }
        let k = cube_to_kurve(&g).expect("sizes 2-3 have layouts");
        if kurve_to_cube(&k) != g || g.is_valid() != k.is_valid() {
            mismatches += 1;
        }
        // And back through a random Kurve grid.
        let mut kurve = KurveGrid::empty(n).expect("sizes 2-3");
        for b in 0..kurve.block_count() {
            for r in 0..n as u8 {
                for c in 0..n as u8 {
                    if rng.below(2) == 1 {
                        let v = 1 + rng.below((n * n) as u64) as u8;
                        kurve.set(b, r, c, Some(sym(v))).expect("in range");
                    }
                }
            }
        }
        let cube = kurve_to_cube(&kurve);
        if cube_to_kurve(&cube).expect("sizes 2-3") != kurve {
            mismatches += 1;
        }
    }
    ctx.eq("round-trip mismatches", mismatches, 0);

    for g in all_base_grids(3).expect("size 3") {
        let k = cube_to_kurve(&g).expect("size 3");
        ctx.check(k.is_valid(), "base grids give duplicate-free bent lines");
    }
    ctx.note("round_trips=10000".into());
    ctx.finish("isomorphism")
}

/// Every check, in reporting order.
pub fn all_checks() -> Vec<Check> {
    vec![
        base_census(),
        case_split(),
        sudo_case_census(),
        corner_law(),
        symmetry_classes(),
        explicit_transforms(),
        small_sizes(),
        minimum_clues(),
        digit_placements(),
        shape_censuses(),
        plane_recognition(),
        counter_agreement(),
        isomorphism_round_trip(),
    ]
}
