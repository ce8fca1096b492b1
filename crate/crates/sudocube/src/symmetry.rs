//! The symmetry group of the cube puzzle: per-axis layer permutations
//! combined with axis permutations (the geometric part) and symbol
//! relabelings. Provides canonical forms, orbit partitioning, and the
//! structural detectors that recognize the small symmetry class.
//!
//! Reversing a layer order is itself a layer permutation, so rotations and
//! reflections of the cube contribute only the 3! axis permutations beyond
//! the per-axis shuffles; the geometric group is `(Sₙ)³ ⋊ S₃` with
//! `(n!)³·3!` elements, 1296 for the classic size.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::enumerate::all_single_digit_placements;
use crate::grid::{coord, digit_cells, Axis, Coord, CubeGrid, Symbol};

/// A permutation of `0..len` with `len ≤ 4`. Entries past `len` are kept at
/// their identity values so equality and hashing are structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallPerm {
    len: u8,
    map: [u8; 4],
}

impl SmallPerm {
    pub fn identity(len: usize) -> SmallPerm {
        debug_assert!(len <= 4);
        SmallPerm {
            len: len as u8,
            map: [0, 1, 2, 3],
        }
    }

    pub fn from_map(images: &[u8]) -> SmallPerm {
        debug_assert!(images.len() <= 4);
        let mut p = SmallPerm::identity(images.len());
        let mut seen = 0u8;
        for (i, &v) in images.iter().enumerate() {
            debug_assert!((v as usize) < images.len());
            debug_assert_eq!(seen & (1 << v), 0, "images must be distinct");
            seen |= 1 << v;
            p.map[i] = v;
        }
        p
    }

    pub fn transposition(len: usize, i: u8, j: u8) -> SmallPerm {
        let mut p = SmallPerm::identity(len);
        p.map.swap(i as usize, j as usize);
        p
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn apply(&self, x: u8) -> u8 {
        debug_assert!(x < self.len);
        self.map[x as usize]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &SmallPerm) -> SmallPerm {
        debug_assert_eq!(self.len, inner.len);
        let mut out = SmallPerm::identity(self.len());
        for i in 0..self.len {
            out.map[i as usize] = self.apply(inner.apply(i));
        }
        out
    }

    pub fn inverse(&self) -> SmallPerm {
        let mut out = SmallPerm::identity(self.len());
        for i in 0..self.len {
            out.map[self.map[i as usize] as usize] = i;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    /// All `len!` permutations, in lexicographic order of their image maps.
    pub fn all(len: usize) -> Vec<SmallPerm> {
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(len);
        let mut used = [false; 4];
        fn rec(
            len: usize,
            images: &mut Vec<u8>,
            used: &mut [bool; 4],
            out: &mut Vec<SmallPerm>,
        ) {
            if images.len() == len {
                out.push(SmallPerm::from_map(images));
                return;
            }
            for v in 0..len as u8 {
                if !used[v as usize] {
                    used[v as usize] = true;
                    images.push(v);
                    rec(len, images, used, out);
                    images.pop();
                    used[v as usize] = false;
                }
            }
        }
        rec(len, &mut images, &mut used, &mut out);
        out
    }
}

impl fmt::Display for SmallPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.map[i as usize])?;
        }
        Ok(())
    }
}

/// A permutation of the symbols `1..=n²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Relabeling {
    n2: u8,
    /// `map[v]` is the image of symbol `v`; index 0 unused.
    map: [u8; 17],
}

impl Relabeling {
    fn identity_for_count(n2: u8) -> Relabeling {
        let mut map = [0u8; 17];
        for (v, slot) in map.iter_mut().enumerate() {
            *slot = v as u8;
        }
        Relabeling { n2, map }
    }

    pub fn identity(n: usize) -> Relabeling {
        Relabeling::identity_for_count((n * n) as u8)
    }

    /// Builds from the images of `1..=n²` in order.
    pub fn from_images(n: usize, images: &[u8]) -> Relabeling {
        debug_assert_eq!(images.len(), n * n);
        let mut rel = Relabeling::identity(n);
        let mut seen = 0u32;
        for (i, &v) in images.iter().enumerate() {
            debug_assert!(v >= 1 && v as usize <= n * n);
            debug_assert_eq!(seen & (1 << v), 0);
            seen |= 1 << v;
            rel.map[i + 1] = v;
        }
        rel
    }

    /// The product of disjoint symbol swaps.
    pub fn from_swaps(n: usize, swaps: &[(u8, u8)]) -> Relabeling {
        let mut rel = Relabeling::identity(n);
        for &(a, b) in swaps {
            rel.map.swap(a as usize, b as usize);
        }
        rel
    }

    pub fn symbol_count(&self) -> u8 {
        self.n2
    }

    pub fn apply(&self, s: Symbol) -> Symbol {
        Symbol::new(self.apply_raw(s.value())).expect("permutation stays in range")
    }

    pub(crate) fn apply_raw(&self, v: u8) -> u8 {
        debug_assert!(v >= 1 && v <= self.n2);
        self.map[v as usize]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Relabeling) -> Relabeling {
        debug_assert_eq!(self.n2, inner.n2);
        // Entries past n² keep identity values so equality stays structural.
        let mut out = Relabeling::identity_for_count(self.n2);
        for v in 1..=self.n2 {
            out.map[v as usize] = self.map[inner.map[v as usize] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Relabeling {
        let mut out = Relabeling::identity_for_count(self.n2);
        for v in 1..=self.n2 {
            out.map[self.map[v as usize] as usize] = v;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n2).all(|v| self.map[v as usize] == v)
    }
}

impl fmt::Display for Relabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 1..=self.n2 {
            if self.n2 > 9 {
                if v > 1 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.map[v as usize])?;
            } else {
                write!(f, "{}", self.map[v as usize])?;
            }
        }
        Ok(())
    }
}

/// A coordinate symmetry: an axis permutation followed by one layer
/// permutation per (destination) axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeometricTransform {
    /// `axis_source[a]` is the axis whose old component feeds destination
    /// component `a`.
    axis_source: [Axis; 3],
    /// `layer_perms[a]` reshuffles destination component `a` afterwards.
    layer_perms: [SmallPerm; 3],
}

impl GeometricTransform {
    pub fn identity(n: usize) -> GeometricTransform {
        GeometricTransform {
            axis_source: [Axis::Row, Axis::Col, Axis::Layer],
            layer_perms: [SmallPerm::identity(n); 3],
        }
    }

    pub fn new(axis_source: [Axis; 3], layer_perms: [SmallPerm; 3]) -> GeometricTransform {
        debug_assert!(
            axis_source[0] != axis_source[1]
                && axis_source[1] != axis_source[2]
                && axis_source[0] != axis_source[2]
        );
        GeometricTransform {
            axis_source,
            layer_perms,
        }
    }

    /// Exchanges two axes (for rows/columns: the per-block transpose).
    pub fn axis_swap(a: Axis, b: Axis, n: usize) -> GeometricTransform {
        let mut source = [Axis::Row, Axis::Col, Axis::Layer];
        source.swap(a.index(), b.index());
        GeometricTransform::new(source, [SmallPerm::identity(n); 3])
    }

    /// Swaps two indices along one axis (block, row, or column swap).
    pub fn layer_swap(axis: Axis, i: u8, j: u8, n: usize) -> GeometricTransform {
        let mut perms = [SmallPerm::identity(n); 3];
        perms[axis.index()] = SmallPerm::transposition(n, i, j);
        GeometricTransform::new([Axis::Row, Axis::Col, Axis::Layer], perms)
    }

    /// The 120° rotation about the main space diagonal: `(r,c,l) → (c,l,r)`.
    pub fn diagonal_rotation(n: usize) -> GeometricTransform {
        GeometricTransform::new(
            [Axis::Col, Axis::Layer, Axis::Row],
            [SmallPerm::identity(n); 3],
        )
    }

    pub fn side(&self) -> usize {
        self.layer_perms[0].len()
    }

    pub fn apply_coord(&self, at: Coord) -> Coord {
        let pick = |a: usize| self.layer_perms[a].apply(at.component(self.axis_source[a]));
        coord(pick(0), pick(1), pick(2))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GeometricTransform) -> GeometricTransform {
        let mut source = [Axis::Row; 3];
        let mut perms = [SmallPerm::identity(self.side()); 3];
        for b in 0..3 {
            let mid = self.axis_source[b].index();
            source[b] = inner.axis_source[mid];
            perms[b] = self.layer_perms[b].compose(&inner.layer_perms[mid]);
        }
        GeometricTransform::new(source, perms)
    }

    pub fn inverse(&self) -> GeometricTransform {
        let mut source = [Axis::Row; 3];
        let mut perms = [SmallPerm::identity(self.side()); 3];
        for b in 0..3 {
            let j = self.axis_source[b].index();
            source[j] = Axis::from_index(b);
            perms[j] = self.layer_perms[b].inverse();
        }
        GeometricTransform::new(source, perms)
    }

    pub fn is_identity(&self) -> bool {
        self.axis_source == [Axis::Row, Axis::Col, Axis::Layer]
            && self.layer_perms.iter().all(SmallPerm::is_identity)
    }
}

impl fmt::Display for GeometricTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = |a: Axis| match a {
            Axis::Row => 'r',
            Axis::Col => 'c',
            Axis::Layer => 'l',
        };
        write!(
            f,
            "axes={}{}{} layers={},{},{}",
            letter(self.axis_source[0]),
            letter(self.axis_source[1]),
            letter(self.axis_source[2]),
            self.layer_perms[0],
            self.layer_perms[1],
            self.layer_perms[2],
        )
    }
}

/// One full symmetry: geometric transform plus relabeling. The two parts
/// commute, so composition and inversion work componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub geo: GeometricTransform,
    pub relabel: Relabeling,
}

impl GroupElement {
    pub fn identity(n: usize) -> GroupElement {
        GroupElement {
            geo: GeometricTransform::identity(n),
            relabel: Relabeling::identity(n),
        }
    }

    pub fn from_geo(geo: GeometricTransform) -> GroupElement {
        let n = geo.side();
        GroupElement {
            geo,
            relabel: Relabeling::identity(n),
        }
    }

    /// Moves every cell through the geometric transform and every symbol
    /// through the relabeling; validity is preserved.
    pub fn apply(&self, grid: &CubeGrid) -> CubeGrid {
        let n = grid.n();
        debug_assert_eq!(self.geo.side(), n);
        let mut out = CubeGrid::empty(n).expect("same size as input");
        for at in grid.coords() {
            if let Some(s) = grid.get(at) {
                out.set(self.geo.apply_coord(at), Some(self.relabel.apply(s)))
                    .expect("relabel stays in range");
            }
        }
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GroupElement) -> GroupElement {
        GroupElement {
            geo: self.geo.compose(&inner.geo),
            relabel: self.relabel.compose(&inner.relabel),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            geo: self.geo.inverse(),
            relabel: self.relabel.inverse(),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} relabel={}", self.geo, self.relabel)
    }
}

/// All `(n!)³·3!` geometric transforms, in a fixed enumeration order.
pub fn geometric_group(n: usize) -> Vec<GeometricTransform> {
    assert!((1..=3).contains(&n), "geometric group built for sizes 1-3");
    let axis_orders: Vec<[Axis; 3]> = {
        let mut orders = Vec::new();
        for p in SmallPerm::all(3) {
            orders.push([
                Axis::from_index(p.apply(0) as usize),
                Axis::from_index(p.apply(1) as usize),
                Axis::from_index(p.apply(2) as usize),
            ]);
        }
        orders
    };
    let layer_perms = SmallPerm::all(n);
    let mut out = Vec::with_capacity(axis_orders.len() * layer_perms.len().pow(3));
    for source in &axis_orders {
        for p0 in &layer_perms {
            for p1 in &layer_perms {
                for p2 in &layer_perms {
                    out.push(GeometricTransform::new(*source, [*p0, *p1, *p2]));
                }
            }
        }
    }
    out
}

pub(crate) fn cached_geometric_group(n: usize) -> &'static [GeometricTransform] {
    static CACHE: [OnceLock<Vec<GeometricTransform>>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    assert!((1..=3).contains(&n));
    CACHE[n - 1].get_or_init(|| geometric_group(n))
}

/// The unique relabeling that makes layer 0 standard, with the relabeled
/// grid. A grid relabeled by `π` normalizes back to the original, returning
/// `π⁻¹`.
pub fn normalize_relabel(grid: &CubeGrid) -> (CubeGrid, Relabeling) {
    let n = grid.n();
    let n2 = n * n;
    let cells = grid.raw_cells();
    let mut rel = Relabeling::identity_for_count(n2 as u8);
    // Layer 0 occupies the first n² slots of storage, in reading order, so
    // the standard value of the cell at flat index i is i+1.
    for (i, &v) in cells[..n2].iter().enumerate() {
        debug_assert!(v != 0, "normalize_relabel needs a complete layer 0");
        rel.map[v as usize] = (i + 1) as u8;
    }
    let out = CubeGrid::from_raw(
        n,
        cells.iter().map(|&v| rel.apply_raw(v)).collect(),
    );
    (out, rel)
}

/// The lexicographically minimal serialization over a grid's orbit. Two
/// grids share a key iff some group element maps one to the other.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub bytes: Vec<u8>,
}

/// Minimizes `normalize_relabel(apply(geo, grid))` over the whole geometric
/// group; relabelings are covered by the normalization.
pub fn canonical_form(grid: &CubeGrid) -> CanonicalKey {
    let (key, _, _) = canonical_form_with_witness(grid);
    key
}

/// Canonical key plus a group element mapping `grid` to the key's grid.
pub fn canonical_form_with_witness(
    grid: &CubeGrid,
) -> (CanonicalKey, GeometricTransform, Relabeling) {
    let n = grid.n();
    let n2 = n * n;
    let n3 = n2 * n;
    debug_assert!(grid.is_complete());
    let cells = grid.raw_cells();

    // Flat destination index of every source cell, per transform.
    let coords: Vec<Coord> = CubeGrid::empty(n).expect("valid size").coords().collect();
    let flat = |at: Coord| (at.l as usize * n + at.r as usize) * n + at.c as usize;

    let mut best: Option<(Vec<u8>, GeometricTransform, Relabeling)> = None;
    let mut moved = vec![0u8; n3];
    for geo in cached_geometric_group(n) {
        for (i, &at) in coords.iter().enumerate() {
            moved[flat(geo.apply_coord(at))] = cells[i];
        }
        let mut rel = Relabeling::identity_for_count(n2 as u8);
        for (i, &v) in moved[..n2].iter().enumerate() {
            rel.map[v as usize] = (i + 1) as u8;
        }
        let candidate: Vec<u8> = moved.iter().map(|&v| rel.map[v as usize]).collect();
        let better = match &best {
            None => true,
            Some((b, _, _)) => candidate < *b,
        };
        if better {
            best = Some((candidate, *geo, rel));
        }
    }
    let (bytes, geo, rel) = best.expect("group is never empty");
    (CanonicalKey { bytes }, geo, rel)
}

/// One equivalence class of an orbit partition.
#[derive(Debug, Clone)]
pub struct OrbitClass {
    pub key: CanonicalKey,
    /// Indices into the input slice; the representative is the member with
    /// the lexicographically smallest serialization.
    pub representative: usize,
    pub members: Vec<usize>,
    /// `witnesses[i]` maps `grids[members[i]]` onto the representative.
    pub witnesses: Vec<GroupElement>,
}

/// Groups complete valid grids by canonical form, with a verified witness
/// element for every member. Classes are ordered by key.
pub fn orbit_partition(grids: &[CubeGrid]) -> Vec<OrbitClass> {
    let mut by_key: BTreeMap<CanonicalKey, Vec<(usize, GroupElement)>> = BTreeMap::new();
    for (i, grid) in grids.iter().enumerate() {
        let (key, geo, rel) = canonical_form_with_witness(grid);
        // This element sends the grid to the key's grid.
        let to_key = GroupElement { geo, relabel: rel };
        by_key.entry(key).or_default().push((i, to_key));
    }
    by_key
        .into_iter()
        .map(|(key, entries)| {
            let representative = entries
                .iter()
                .map(|&(i, _)| i)
                .min_by(|&a, &b| grids[a].key_bytes().cmp(grids[b].key_bytes()))
                .expect("classes are non-empty");
            let to_key_rep = entries
                .iter()
                .find(|&&(i, _)| i == representative)
                .expect("representative is a member")
                .1;
            let from_key = to_key_rep.inverse();
            let members: Vec<usize> = entries.iter().map(|&(i, _)| i).collect();
            let witnesses: Vec<GroupElement> = entries
                .iter()
                .map(|(i, to_key)| {
                    let w = from_key.compose(to_key);
                    debug_assert_eq!(w.apply(&grids[*i]), grids[representative]);
                    w
                })
                .collect();
            OrbitClass {
                key,
                representative,
                members,
                witnesses,
            }
        })
        .collect()
}

/// True iff for every plane family (3 axes) and slicing axis (2 per family),
/// the partition of the nine digits into slice-triples is identical across
/// the family's three planes. This holds exactly on the small symmetry
/// class, for any orientation of the grid.
pub fn uniform_partition_detector(grid: &CubeGrid) -> bool {
    debug_assert_eq!(grid.n(), 3);
    let component_coord = |vals: [u8; 3], axes: [usize; 3]| {
        let mut parts = [0u8; 3];
        for (v, a) in vals.into_iter().zip(axes) {
            parts[a] = v;
        }
        coord(parts[0], parts[1], parts[2])
    };
    for family in 0..3usize {
        for slicing in (0..3usize).filter(|&b| b != family) {
            let free = 3 - family - slicing;
            let mut reference: Option<Vec<[u8; 3]>> = None;
            for i in 0..3u8 {
                let mut partition: Vec<[u8; 3]> = (0..3u8)
                    .map(|b| {
                        let mut triple = [0u8; 3];
                        for (t, slot) in triple.iter_mut().enumerate() {
                            let at = component_coord([i, b, t as u8], [family, slicing, free]);
                            *slot = grid.get(at).expect("complete grid").value();
                        }
                        triple.sort_unstable();
                        triple
                    })
                    .collect();
                partition.sort_unstable();
                match &reference {
                    None => reference = Some(partition),
                    Some(r) => {
                        if *r != partition {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// The geometric type of one digit's three cells in a size-3 cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeClass {
    /// Through the center: a space diagonal.
    Diagonal,
    /// Through a corner but not the center: a scalene triangle.
    ScaleneCorner,
    /// Three mid-edge cells: an equilateral triangle.
    Equilateral,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::Diagonal => write!(f, "diagonal"),
            ShapeClass::ScaleneCorner => write!(f, "scalene_corner"),
            ShapeClass::Equilateral => write!(f, "equilateral"),
        }
    }
}

impl ShapeClass {
    /// Classifies a transversal cell triple.
    pub fn of_cells(cells: &[Coord]) -> ShapeClass {
        debug_assert_eq!(cells.len(), 3);
        let is_extreme = |v: u8| v == 0 || v == 2;
        if cells.iter().any(|&a| a == coord(1, 1, 1)) {
            ShapeClass::Diagonal
        } else if cells
            .iter()
            .any(|&a| is_extreme(a.r) && is_extreme(a.c) && is_extreme(a.l))
        {
            ShapeClass::ScaleneCorner
        } else {
            ShapeClass::Equilateral
        }
    }
}

/// Shape of the triple formed by `digit`'s occurrences.
pub fn classify_digit_shape(grid: &CubeGrid, digit: Symbol) -> ShapeClass {
    ShapeClass::of_cells(&digit_cells(grid, digit))
}

/// Shape counts, per grid (summing to 9) or over all placements (summing
/// to 36).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeCensus {
    pub diagonal: usize,
    pub scalene_corner: usize,
    pub equilateral: usize,
}

impl ShapeCensus {
    fn tally(shapes: impl Iterator<Item = ShapeClass>) -> ShapeCensus {
        let mut census = ShapeCensus {
            diagonal: 0,
            scalene_corner: 0,
            equilateral: 0,
        };
        for s in shapes {
            match s {
                ShapeClass::Diagonal => census.diagonal += 1,
                ShapeClass::ScaleneCorner => census.scalene_corner += 1,
                ShapeClass::Equilateral => census.equilateral += 1,
            }
        }
        census
    }

    pub fn total(&self) -> usize {
        self.diagonal + self.scalene_corner + self.equilateral
    }
}

/// Shape counts over the nine digits of a complete size-3 grid.
pub fn shape_census(grid: &CubeGrid) -> ShapeCensus {
    debug_assert_eq!(grid.n(), 3);
    ShapeCensus::tally(
        (1..=9).map(|v| classify_digit_shape(grid, Symbol::new(v).expect("in range"))),
    )
}

/// Shape counts over all 36 single-digit placements of the size-3 cube.
pub fn placement_census() -> ShapeCensus {
    ShapeCensus::tally(
        all_single_digit_placements(3)
            .iter()
            .map(|cells| ShapeClass::of_cells(cells)),
    )
}

/// Locates the center digit's space diagonal and counts the distinct digits
/// in each of the three planes spanned by that diagonal and a pair of
/// opposite cube edges. Returned in axis-pair order `(r,c), (r,l), (c,l)`.
pub fn diagonal_planes_signature(grid: &CubeGrid) -> [usize; 3] {
    debug_assert_eq!(grid.n(), 3);
    let center = grid.get(coord(1, 1, 1)).expect("complete grid");
    let cells = digit_cells(grid, center);
    let corner = cells
        .iter()
        .copied()
        .find(|a| a.r != 1)
        .expect("diagonal has corner endpoints");
    let comp = |a: Coord, i: usize| a.component(Axis::from_index(i));

    let mut signature = [0usize; 3];
    for (slot, (i, j)) in [(0usize, 1usize), (0, 2), (1, 2)].into_iter().enumerate() {
        // The plane through the diagonal whose cells agree with the corner's
        // relation between components i and j.
        let same = comp(corner, i) == comp(corner, j);
        let mut seen = [false; 10];
        let mut count = 0usize;
        for at in grid.coords() {
            let on_plane = if same {
                comp(at, i) == comp(at, j)
            } else {
                comp(at, i) + comp(at, j) == 2
            };
            if on_plane {
                let v = grid.get(at).expect("complete grid").value() as usize;
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                }
            }
        }
        signature[slot] = count;
    }
    signature
}

/// Brings a complete valid size-3 grid to sudo-case form: layer 0 standard
/// and digit 5 in the upper-left cell of layer 1. Returns the normal form
/// and a group element realizing it.
///
/// Digit 5 sits at the center of a standard layer 0, so its layer-1 cell is
/// always one of the four corners; swapping the outer rows and/or columns
/// (which fix the center) steers it to the upper-left, and a final
/// relabeling restores the standard layer 0.
pub fn normalize_to_sudo_case(grid: &CubeGrid) -> (CubeGrid, GroupElement) {
    debug_assert_eq!(grid.n(), 3);
    let (relabeled, rel1) = normalize_relabel(grid);
    let five = Symbol::new(5).expect("in range");
    let cell = digit_cells(&relabeled, five)
        .into_iter()
        .find(|a| a.l == 1)
        .expect("complete grid");
    debug_assert!(cell.r != 1 && cell.c != 1);

    let mut perms = [SmallPerm::identity(3); 3];
    if cell.r == 2 {
        perms[Axis::Row.index()] = SmallPerm::transposition(3, 0, 2);
    }
    if cell.c == 2 {
        perms[Axis::Col.index()] = SmallPerm::transposition(3, 0, 2);
    }
    let geo = GeometricTransform::new([Axis::Row, Axis::Col, Axis::Layer], perms);
    let moved = GroupElement::from_geo(geo).apply(&relabeled);
    let (normal, rel2) = normalize_relabel(&moved);
    let element = GroupElement {
        geo,
        relabel: rel2.compose(&rel1),
    };
    debug_assert_eq!(element.apply(grid), normal);
    (normal, element)
}
