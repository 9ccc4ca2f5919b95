//! Core domain types: glues, colors, tile types, tile sets, patterns, seeds,
//! and assemblies.
//!
//! Glue matching is pure identity: two edges are compatible iff their glue ids
//! are equal. Colors live in a separate namespace and never participate in
//! matching. Tile types are immutable and are never rotated or reflected.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::intern::{COLORS, GLUES};

/// An interned glue name. Equality of ids is the only semantics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlueId(pub(crate) u32);

impl GlueId {
    pub fn new(name: &str) -> Self {
        GlueId(GLUES.intern(name))
    }

    pub fn name(self) -> &'static str {
        GLUES.name(self.0)
    }
}

impl fmt::Display for GlueId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for GlueId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlueId({})", self.name())
    }
}

/// An interned color name. Colors compare by id; renaming a color is not an
/// isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorId(pub(crate) u32);

impl ColorId {
    pub fn new(name: &str) -> Self {
        ColorId(COLORS.intern(name))
    }

    pub fn name(self) -> &'static str {
        COLORS.name(self.0)
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColorId({})", self.name())
    }
}

/// A unit-square tile type: four glues and a color.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TileType {
    pub north: GlueId,
    pub south: GlueId,
    pub east: GlueId,
    pub west: GlueId,
    pub color: ColorId,
}

/// Result of looking up a tile type by its (south, west) glue pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lookup {
    /// Exactly one type matches; its index in the tile set.
    Unique(usize),
    /// No type matches.
    Missing,
    /// Two or more types clash on this pair; the first two indices.
    Ambiguous(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TileSetError {
    #[error("duplicate tile type at indices {0} and {1}")]
    DuplicateType(usize, usize),
}

/// An ordered collection of distinct tile types.
///
/// Exact duplicates are rejected at construction so that size accounting is
/// always the number of distinct types. Clashing (south, west) pairs are
/// permitted so they can be diagnosed with [`TileSet::check_uniqueness`];
/// deterministic assembly requires that check to come back empty.
#[derive(Clone, Debug)]
pub struct TileSet {
    types: Vec<TileType>,
    by_south_west: HashMap<(GlueId, GlueId), Lookup>,
}

impl TileSet {
    pub fn new(types: Vec<TileType>) -> Result<Self, TileSetError> {
        let mut seen: HashMap<TileType, usize> = HashMap::new();
        for (i, t) in types.iter().enumerate() {
            if let Some(&j) = seen.get(t) {
                return Err(TileSetError::DuplicateType(j, i));
            }
            seen.insert(*t, i);
        }
        let mut by_south_west = HashMap::new();
        for (i, t) in types.iter().enumerate() {
            by_south_west
                .entry((t.south, t.west))
                .and_modify(|e| {
                    if let Lookup::Unique(j) = *e {
                        *e = Lookup::Ambiguous(j, i);
                    }
                })
                .or_insert(Lookup::Unique(i));
        }
        Ok(TileSet {
            types,
            by_south_west,
        })
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[TileType] {
        &self.types
    }

    pub fn get(&self, idx: usize) -> Option<&TileType> {
        self.types.get(idx)
    }

    /// All pairs of type indices that share a (south, west) glue pair.
    ///
    /// Empty iff the set satisfies uniqueness and assembly is deterministic.
    pub fn check_uniqueness(&self) -> Vec<(usize, usize)> {
        let mut groups: HashMap<(GlueId, GlueId), Vec<usize>> = HashMap::new();
        for (i, t) in self.types.iter().enumerate() {
            groups.entry((t.south, t.west)).or_default().push(i);
        }
        let mut clashes = Vec::new();
        for group in groups.values() {
            for (a, &i) in group.iter().enumerate() {
                for &j in &group[a + 1..] {
                    clashes.push((i, j));
                }
            }
        }
        clashes.sort_unstable();
        clashes
    }

    /// The type that attaches on an exposed (south, west) glue pair, if any.
    pub fn lookup(&self, south: GlueId, west: GlueId) -> Lookup {
        self.by_south_west
            .get(&(south, west))
            .copied()
            .unwrap_or(Lookup::Missing)
    }

    /// Applies a glue renaming to every type, preserving order and color.
    pub fn rename_glues(&self, map: impl Fn(GlueId) -> GlueId) -> TileSet {
        let types = self
            .types
            .iter()
            .map(|t| TileType {
                north: map(t.north),
                south: map(t.south),
                east: map(t.east),
                west: map(t.west),
                color: t.color,
            })
            .collect();
        TileSet::new(types).expect("renaming a bijection cannot introduce duplicates")
    }
}

impl PartialEq for TileSet {
    fn eq(&self, other: &Self) -> bool {
        self.types == other.types
    }
}

impl Eq for TileSet {}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern dimensions must be positive, got {width}x{height}")]
    EmptyDimensions { width: usize, height: usize },
    #[error("expected {expected} cells for {width}x{height}, got {got}")]
    CellCount {
        width: usize,
        height: usize,
        expected: usize,
        got: usize,
    },
}

/// A rectangular color pattern. Coordinates are 1-based with (1,1) at the
/// south-west corner; y increases northward.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pattern {
    width: usize,
    height: usize,
    cells: Vec<ColorId>, // row-major from the south row
}

impl Pattern {
    /// Builds a pattern from row-major cells, south row first.
    pub fn new(width: usize, height: usize, cells: Vec<ColorId>) -> Result<Self, PatternError> {
        if width == 0 || height == 0 {
            return Err(PatternError::EmptyDimensions { width, height });
        }
        if cells.len() != width * height {
            return Err(PatternError::CellCount {
                width,
                height,
                expected: width * height,
                got: cells.len(),
            });
        }
        Ok(Pattern {
            width,
            height,
            cells,
        })
    }

    pub fn filled(width: usize, height: usize, color: ColorId) -> Result<Self, PatternError> {
        Pattern::new(width, height, vec![color; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn color_at(&self, x: usize, y: usize) -> ColorId {
        assert!(x >= 1 && x <= self.width && y >= 1 && y <= self.height);
        self.cells[(y - 1) * self.width + (x - 1)]
    }

    /// Distinct colors in first-appearance order (row-major from the south).
    pub fn distinct_colors(&self) -> Vec<ColorId> {
        let mut seen = Vec::new();
        for &c in &self.cells {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen
    }

    /// Cells in row-major (y then x) order.
    pub fn cells_row_major(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.width;
        (1..=self.height).flat_map(move |y| (1..=w).map(move |x| (x, y)))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeedError {
    #[error("seed north glue count {got} does not match width {want}")]
    NorthLength { got: usize, want: usize },
    #[error("seed east glue count {got} does not match height {want}")]
    EastLength { got: usize, want: usize },
}

/// The exposed glues of an L-shaped seed: north glues above the 0-row and
/// east glues right of the 0-column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeedGlues {
    /// Glue exposed above (x, 0), for x = 1..=width.
    pub north: Vec<GlueId>,
    /// Glue exposed right of (0, y), for y = 1..=height (bottom to top).
    pub east: Vec<GlueId>,
}

impl SeedGlues {
    pub fn new(north: Vec<GlueId>, east: Vec<GlueId>) -> Self {
        SeedGlues { north, east }
    }

    pub fn width(&self) -> usize {
        self.north.len()
    }

    pub fn height(&self) -> usize {
        self.east.len()
    }

    pub fn check_dims(&self, width: usize, height: usize) -> Result<(), SeedError> {
        if self.north.len() != width {
            return Err(SeedError::NorthLength {
                got: self.north.len(),
                want: width,
            });
        }
        if self.east.len() != height {
            return Err(SeedError::EastLength {
                got: self.east.len(),
                want: height,
            });
        }
        Ok(())
    }

    /// Applies a glue renaming to every seed glue.
    pub fn rename_glues(&self, map: impl Fn(GlueId) -> GlueId) -> SeedGlues {
        SeedGlues {
            north: self.north.iter().copied().map(&map).collect(),
            east: self.east.iter().copied().map(&map).collect(),
        }
    }
}

/// A (possibly partial) placement of tile types on a rectangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Assembly {
    width: usize,
    height: usize,
    placed: Vec<Option<TileType>>, // row-major from the south row
}

impl Assembly {
    pub fn empty(width: usize, height: usize) -> Self {
        Assembly {
            width,
            height,
            placed: vec![None; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn idx(&self, x: usize, y: usize) -> usize {
        assert!(x >= 1 && x <= self.width && y >= 1 && y <= self.height);
        (y - 1) * self.width + (x - 1)
    }

    pub fn tile_at(&self, x: usize, y: usize) -> Option<&TileType> {
        self.placed[self.idx(x, y)].as_ref()
    }

    pub(crate) fn place(&mut self, x: usize, y: usize, t: TileType) {
        let i = self.idx(x, y);
        debug_assert!(self.placed[i].is_none());
        self.placed[i] = Some(t);
    }

    pub fn is_complete(&self) -> bool {
        self.placed.iter().all(Option::is_some)
    }

    /// The colors of a complete assembly as a pattern. `None` if partial.
    pub fn to_pattern(&self) -> Option<Pattern> {
        let cells: Option<Vec<ColorId>> =
            self.placed.iter().map(|t| t.map(|t| t.color)).collect();
        cells.map(|cells| {
            Pattern::new(self.width, self.height, cells).expect("assembly dims are valid")
        })
    }

    /// Re-checks that every pair of adjacent placed tiles agrees on the glue
    /// of their shared edge.
    pub fn check_local_consistency(&self) -> bool {
        for y in 1..=self.height {
            for x in 1..=self.width {
                let Some(t) = self.tile_at(x, y) else { continue };
                if x < self.width {
                    if let Some(e) = self.tile_at(x + 1, y) {
                        if t.east != e.west {
                            return false;
                        }
                    }
                }
                if y < self.height {
                    if let Some(n) = self.tile_at(x, y + 1) {
                        if t.north != n.south {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
