//! Exact minimum tile set synthesis for small patterns.
//!
//! A candidate solution is a color-consistent partition of the pattern's
//! cells; blocks become tile types. Closure propagates what the partition
//! forces: cells of one block share each side's glue (R1), physically shared
//! edges are already one glue (R2), and two blocks whose south and west glue
//! classes both coincide would clash, so they must merge — impossible when
//! their colors differ (R3). A partition that closes without a color clash
//! induces a tile set and seed that assemble the pattern; the search below
//! finds the fewest blocks over all such partitions.
//!
//! Seed glues are free variables: row-0 and column-0 edges join glue classes
//! like any interior edge, and open north/east edges stay unconstrained
//! unless a block unifies them.

use std::collections::HashMap;

use thiserror::Error;

use crate::assembler::{verify_solves, Verdict};
use crate::canon::canonical_with_mapping;
use crate::tiles::{Assembly, ColorId, GlueId, Pattern, SeedGlues, TileSet, TileType};

pub const DEFAULT_CELL_GUARD: usize = 40;
pub const BRUTE_FORCE_CELL_GUARD: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("pattern has {cells} cells, above the guard of {guard}")]
    GuardExceeded { cells: usize, guard: usize },
    #[error("assignment covers {got} cells, expected {want}")]
    AssignmentLength { got: usize, want: usize },
    #[error("cell ({x},{y}) has color {cell_color} but its block already has {block_color}")]
    ColorInconsistent {
        x: usize,
        y: usize,
        cell_color: String,
        block_color: String,
    },
    #[error("assembly is incomplete or disagrees with the pattern at ({x},{y})")]
    BadAssembly { x: usize, y: usize },
}

/// A boundary segment between two cells, or between a cell and the seed or
/// the open north/east faces.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EdgeId(usize);

#[derive(Clone, Copy, Debug)]
struct EdgeIndexer {
    width: usize,
    height: usize,
}

impl EdgeIndexer {
    fn new(width: usize, height: usize) -> Self {
        EdgeIndexer { width, height }
    }

    fn count(&self) -> usize {
        self.width * (self.height + 1) + (self.width + 1) * self.height
    }

    /// Horizontal edge above (x, y); y = 0 is the seed row's north face.
    fn h_edge(&self, x: usize, y: usize) -> usize {
        debug_assert!((1..=self.width).contains(&x) && y <= self.height);
        y * self.width + (x - 1)
    }

    /// Vertical edge right of (x, y); x = 0 is the seed column's east face.
    fn v_edge(&self, x: usize, y: usize) -> usize {
        debug_assert!(x <= self.width && (1..=self.height).contains(&y));
        self.width * (self.height + 1) + x * self.height + (y - 1)
    }

    fn south_of(&self, x: usize, y: usize) -> usize {
        self.h_edge(x, y - 1)
    }

    fn north_of(&self, x: usize, y: usize) -> usize {
        self.h_edge(x, y)
    }

    fn west_of(&self, x: usize, y: usize) -> usize {
        self.v_edge(x - 1, y)
    }

    fn east_of(&self, x: usize, y: usize) -> usize {
        self.v_edge(x, y)
    }
}

/// Union-find with union by size and an undo log; no path compression so
/// unions can be rolled back cheaply during search.
#[derive(Clone, Debug)]
struct UndoDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    undo: Vec<usize>,
}

impl UndoDsu {
    fn new(n: usize) -> Self {
        UndoDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            undo: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.undo.push(rb);
        true
    }

    fn mark(&self) -> usize {
        self.undo.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let rb = self.undo.pop().unwrap();
            let ra = self.parent[rb];
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

/// The disjoint-set structure over a pattern's cell boundaries. Classes only
/// merge during closure, never split.
#[derive(Clone, Debug)]
pub struct GlueClasses {
    edges: EdgeIndexer,
    dsu: UndoDsu,
}

impl GlueClasses {
    pub fn new(width: usize, height: usize) -> Self {
        let edges = EdgeIndexer::new(width, height);
        GlueClasses {
            edges,
            dsu: UndoDsu::new(edges.count()),
        }
    }

    pub fn south_of(&self, x: usize, y: usize) -> EdgeId {
        EdgeId(self.edges.south_of(x, y))
    }

    pub fn north_of(&self, x: usize, y: usize) -> EdgeId {
        EdgeId(self.edges.north_of(x, y))
    }

    pub fn west_of(&self, x: usize, y: usize) -> EdgeId {
        EdgeId(self.edges.west_of(x, y))
    }

    pub fn east_of(&self, x: usize, y: usize) -> EdgeId {
        EdgeId(self.edges.east_of(x, y))
    }

    pub fn unify(&mut self, a: EdgeId, b: EdgeId) {
        self.dsu.union(a.0, b.0);
    }

    pub fn class_of(&self, e: EdgeId) -> EdgeId {
        EdgeId(self.dsu.find(e.0))
    }
}

/// A color-consistent partition of a pattern's cells. Blocks are numbered in
/// first-appearance order over row-major (y then x) cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellPartition {
    assignment: Vec<usize>,
    block_count: usize,
    block_colors: Vec<ColorId>,
}

impl CellPartition {
    pub fn from_assignment(p: &Pattern, raw: &[usize]) -> Result<Self, SolverError> {
        let cells = p.width() * p.height();
        if raw.len() != cells {
            return Err(SolverError::AssignmentLength {
                got: raw.len(),
                want: cells,
            });
        }
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut assignment = Vec::with_capacity(cells);
        let mut block_colors: Vec<ColorId> = Vec::new();
        for (i, (x, y)) in p.cells_row_major().enumerate() {
            let next = relabel.len();
            let block = *relabel.entry(raw[i]).or_insert(next);
            if block == block_colors.len() {
                block_colors.push(p.color_at(x, y));
            } else if block_colors[block] != p.color_at(x, y) {
                return Err(SolverError::ColorInconsistent {
                    x,
                    y,
                    cell_color: p.color_at(x, y).name().to_string(),
                    block_color: block_colors[block].name().to_string(),
                });
            }
            assignment.push(block);
        }
        Ok(CellPartition {
            assignment,
            block_count: block_colors.len(),
            block_colors,
        })
    }

    /// One block per distinct color.
    pub fn per_color(p: &Pattern) -> Self {
        let colors = p.distinct_colors();
        let raw: Vec<usize> = p
            .cells_row_major()
            .map(|(x, y)| colors.iter().position(|&c| c == p.color_at(x, y)).unwrap())
            .collect();
        CellPartition::from_assignment(p, &raw).expect("per-color is color-consistent")
    }

    /// Every cell in its own block.
    pub fn singletons(p: &Pattern) -> Self {
        let cells = p.width() * p.height();
        CellPartition::from_assignment(p, &(0..cells).collect::<Vec<_>>())
            .expect("singletons are color-consistent")
    }

    /// Blocks are the distinct tile types of a complete assembly whose colors
    /// match the pattern.
    pub fn group_by_tile_type(p: &Pattern, a: &Assembly) -> Result<Self, SolverError> {
        let mut type_ids: HashMap<TileType, usize> = HashMap::new();
        let mut raw = Vec::with_capacity(p.width() * p.height());
        for (x, y) in p.cells_row_major() {
            let t = a
                .tile_at(x, y)
                .ok_or(SolverError::BadAssembly { x, y })?;
            if t.color != p.color_at(x, y) {
                return Err(SolverError::BadAssembly { x, y });
            }
            let next = type_ids.len();
            raw.push(*type_ids.entry(*t).or_insert(next));
        }
        CellPartition::from_assignment(p, &raw)
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of_cell(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn block_color(&self, block: usize) -> ColorId {
        self.block_colors[block]
    }
}

/// A sized witness that a pattern is uniquely self-assembled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub k: usize,
    pub tileset: TileSet,
    pub seed: SeedGlues,
}

impl Certificate {
    /// Renames glues to the tile set's canonical form, keeping the seed
    /// consistent.
    pub fn canonicalized(&self) -> Certificate {
        let (tileset, map) = canonical_with_mapping(&self.tileset);
        let seed = self.seed.rename_glues(|g| map[&g]);
        Certificate {
            k: self.k,
            tileset,
            seed,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClosureOutcome {
    Feasible(Certificate),
    /// Two blocks were forced to merge but have different colors.
    ColorClash { block_a: usize, block_b: usize },
}

impl ClosureOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ClosureOutcome::Feasible(_))
    }
}

/// Representative side edges of one block during closure.
#[derive(Clone, Copy, Debug)]
struct BlockSides {
    south: usize,
    west: usize,
    north: usize,
    east: usize,
    color: ColorId,
    alive: bool,
    original: usize,
}

/// Runs R1/R3 to a fixed point on a full partition, emits the induced tile
/// set and seed, and re-verifies them by simulation.
///
/// Same-color merges forced by R3 are applied, so the certificate may have
/// fewer types than the partition has blocks. A simulation mismatch would
/// mean the closure rules themselves are unsound, so it panics rather than
/// being reported as an ordinary infeasibility.
pub fn closure(p: &Pattern, part: &CellPartition) -> ClosureOutcome {
    let edges = EdgeIndexer::new(p.width(), p.height());
    let mut dsu = UndoDsu::new(edges.count());

    let mut blocks: Vec<BlockSides> = Vec::with_capacity(part.block_count());
    for (i, (x, y)) in p.cells_row_major().enumerate() {
        let b = part.block_of_cell(i);
        if b == blocks.len() {
            blocks.push(BlockSides {
                south: edges.south_of(x, y),
                west: edges.west_of(x, y),
                north: edges.north_of(x, y),
                east: edges.east_of(x, y),
                color: part.block_color(b),
                alive: true,
                original: b,
            });
        } else {
            let sides = blocks[b];
            dsu.union(sides.south, edges.south_of(x, y));
            dsu.union(sides.west, edges.west_of(x, y));
            dsu.union(sides.north, edges.north_of(x, y));
            dsu.union(sides.east, edges.east_of(x, y));
        }
    }

    // R3 to fixed point: merge same-color collisions, reject color clashes.
    loop {
        let mut by_pair: HashMap<(usize, usize), usize> = HashMap::new();
        let mut merge: Option<(usize, usize)> = None;
        for (b, sides) in blocks.iter().enumerate() {
            if !sides.alive {
                continue;
            }
            let key = (dsu.find(sides.south), dsu.find(sides.west));
            if let Some(&other) = by_pair.get(&key) {
                if blocks[other].color != sides.color {
                    return ClosureOutcome::ColorClash {
                        block_a: blocks[other].original,
                        block_b: sides.original,
                    };
                }
                merge = Some((other, b));
                break;
            }
            by_pair.insert(key, b);
        }
        let Some((a, b)) = merge else { break };
        let (ba, bb) = (blocks[a], blocks[b]);
        dsu.union(ba.south, bb.south);
        dsu.union(ba.west, bb.west);
        dsu.union(ba.north, bb.north);
        dsu.union(ba.east, bb.east);
        blocks[b].alive = false;
    }

    let glue = |e: usize| GlueId::new(&format!("e{}", dsu.find(e)));
    let types: Vec<TileType> = blocks
        .iter()
        .filter(|b| b.alive)
        .map(|b| TileType {
            north: glue(b.north),
            south: glue(b.south),
            east: glue(b.east),
            west: glue(b.west),
            color: b.color,
        })
        .collect();
    let k = types.len();
    let tileset = TileSet::new(types).expect("closed blocks have distinct glue tuples");
    let north = (1..=p.width()).map(|x| glue(edges.h_edge(x, 0))).collect();
    let east = (1..=p.height()).map(|y| glue(edges.v_edge(0, y))).collect();
    let seed = SeedGlues::new(north, east);

    match verify_solves(&tileset, &seed, p) {
        Ok(Verdict::Solves) => ClosureOutcome::Feasible(Certificate { k, tileset, seed }),
        other => panic!(
            "closure soundness violated: induced system does not assemble the pattern ({other:?})"
        ),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    /// The reported certificate is a true minimum.
    Optimal,
    /// Search stopped early; the minimum is at least `proven_lower`.
    Bound { proven_lower: usize },
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub certificate: Option<Certificate>,
    pub status: SolveStatus,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Refuse patterns with more cells than this.
    pub max_cells: usize,
    /// Only look for solutions of at most this size.
    pub budget: Option<usize>,
    /// Abort after this many search nodes, reporting a bound.
    pub node_limit: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_cells: DEFAULT_CELL_GUARD,
            budget: None,
            node_limit: None,
        }
    }
}

struct Search<'a> {
    pattern: &'a Pattern,
    cells: Vec<(usize, usize)>,
    cell_colors: Vec<usize>,
    edges: EdgeIndexer,
    dsu: UndoDsu,
    blocks: Vec<BlockSides>,
    block_color_ids: Vec<usize>,
    assignment: Vec<usize>,
    /// Colors appearing in cells[pos..] as a bitmask, per position.
    suffix_colors: Vec<u128>,
    blocks_per_color: Vec<usize>,
    cutoff: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    node_limit: Option<u64>,
    aborted: bool,
}

enum Propagation {
    Ok { mark: usize },
    /// A forced merge or clash; this branch is infeasible or redundant.
    Dead { mark: usize },
}

impl<'a> Search<'a> {
    /// Unifies the cell's sides into the block and scans for (south, west)
    /// collisions. Same-color collisions are pruned rather than merged: the
    /// coarser partition is reached on its own branch, and an optimal closed
    /// partition never triggers a merge along its own prefix.
    fn assign(&mut self, pos: usize, block: usize) -> Propagation {
        let mark = self.dsu.mark();
        let (x, y) = self.cells[pos];
        let sides = self.blocks[block];
        self.dsu.union(sides.south, self.edges.south_of(x, y));
        self.dsu.union(sides.west, self.edges.west_of(x, y));
        self.dsu.union(sides.north, self.edges.north_of(x, y));
        self.dsu.union(sides.east, self.edges.east_of(x, y));

        let mut by_pair: HashMap<(usize, usize), usize> =
            HashMap::with_capacity(self.blocks.len());
        for sides in &self.blocks {
            let key = (self.dsu.find(sides.south), self.dsu.find(sides.west));
            if by_pair.insert(key, 0).is_some() {
                return Propagation::Dead { mark };
            }
        }
        Propagation::Ok { mark }
    }

    fn descend(&mut self, pos: usize) {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.aborted = true;
                return;
            }
        }
        if pos == self.cells.len() {
            // Strictly better than the incumbent by the cutoff invariant.
            self.best = Some(self.assignment.clone());
            self.cutoff = self.blocks.len();
            return;
        }

        // Bound: every suffix color without a block needs a fresh one.
        let mut missing = 0;
        let mut mask = self.suffix_colors[pos];
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            if self.blocks_per_color[c] == 0 {
                missing += 1;
            }
            mask &= mask - 1;
        }
        if self.blocks.len() + missing >= self.cutoff {
            return;
        }

        let color = self.cell_colors[pos];
        let (x, y) = self.cells[pos];
        let fresh_missing = if self.blocks_per_color[color] == 0 {
            missing - 1
        } else {
            missing
        };

        for block in 0..self.blocks.len() {
            if self.block_color_ids[block] != color {
                continue;
            }
            match self.assign(pos, block) {
                Propagation::Ok { mark } => {
                    self.assignment.push(block);
                    self.descend(pos + 1);
                    self.assignment.pop();
                    self.dsu.rollback(mark);
                }
                Propagation::Dead { mark } => self.dsu.rollback(mark),
            }
            if self.aborted {
                return;
            }
        }

        // Fresh block. Its sides are this cell's own edges; collisions with
        // existing blocks are found by the same scan.
        if self.blocks.len() + 1 + fresh_missing >= self.cutoff {
            return;
        }
        let block = self.blocks.len();
        self.blocks.push(BlockSides {
            south: self.edges.south_of(x, y),
            west: self.edges.west_of(x, y),
            north: self.edges.north_of(x, y),
            east: self.edges.east_of(x, y),
            color: self.pattern.color_at(x, y),
            alive: true,
            original: block,
        });
        self.block_color_ids.push(color);
        self.blocks_per_color[color] += 1;

        let mut by_pair: HashMap<(usize, usize), usize> =
            HashMap::with_capacity(self.blocks.len());
        let mut collision = false;
        for sides in &self.blocks {
            let key = (self.dsu.find(sides.south), self.dsu.find(sides.west));
            if by_pair.insert(key, 0).is_some() {
                collision = true;
                break;
            }
        }
        if !collision {
            self.assignment.push(block);
            self.descend(pos + 1);
            self.assignment.pop();
        }

        self.blocks_per_color[color] -= 1;
        self.block_color_ids.pop();
        self.blocks.pop();
    }
}

/// Branch-and-bound over color-consistent partitions in row-major cell
/// order. Returns a canonicalized minimum certificate, or a bound when the
/// budget or node limit cuts the search short.
pub fn minimize_tileset(p: &Pattern, opts: &SolveOptions) -> Result<SolveReport, SolverError> {
    let cells = p.width() * p.height();
    if cells > opts.max_cells {
        return Err(SolverError::GuardExceeded {
            cells,
            guard: opts.max_cells,
        });
    }

    let colors = p.distinct_colors();
    // The coarsest candidate: one block per color. Feasible means optimal,
    // since no tile set can use fewer types than the pattern has colors.
    if let ClosureOutcome::Feasible(cert) = closure(p, &CellPartition::per_color(p)) {
        if opts.budget.map_or(true, |b| cert.k <= b) {
            return Ok(SolveReport {
                certificate: Some(cert.canonicalized()),
                status: SolveStatus::Optimal,
            });
        }
    }
    if let Some(budget) = opts.budget {
        if budget < colors.len() {
            return Ok(SolveReport {
                certificate: None,
                status: SolveStatus::Bound {
                    proven_lower: colors.len(),
                },
            });
        }
    }

    // All-singletons is always feasible, so it is the fallback incumbent
    // whenever the budget admits it.
    let mut incumbent: Option<CellPartition> = None;
    let mut cutoff = cells + 1;
    if opts.budget.map_or(true, |b| cells <= b) {
        incumbent = Some(CellPartition::singletons(p));
        cutoff = cells;
    }
    if let Some(budget) = opts.budget {
        cutoff = cutoff.min(budget + 1);
    }

    let color_index: HashMap<ColorId, usize> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    assert!(colors.len() <= 128, "cell guard keeps color count small");
    let cell_list: Vec<(usize, usize)> = p.cells_row_major().collect();
    let cell_colors: Vec<usize> = cell_list
        .iter()
        .map(|&(x, y)| color_index[&p.color_at(x, y)])
        .collect();
    let mut suffix_colors = vec![0u128; cells + 1];
    for pos in (0..cells).rev() {
        suffix_colors[pos] = suffix_colors[pos + 1] | (1u128 << cell_colors[pos]);
    }

    let edges = EdgeIndexer::new(p.width(), p.height());
    let mut search = Search {
        pattern: p,
        cells: cell_list,
        cell_colors,
        edges,
        dsu: UndoDsu::new(edges.count()),
        blocks: Vec::new(),
        block_color_ids: Vec::new(),
        assignment: Vec::new(),
        suffix_colors,
        blocks_per_color: vec![0; colors.len()],
        cutoff,
        best: None,
        nodes: 0,
        node_limit: opts.node_limit,
        aborted: false,
    };
    search.descend(0);

    if let Some(raw) = search.best {
        incumbent = Some(CellPartition::from_assignment(p, &raw)?);
    }
    let certificate = incumbent.map(|part| match closure(p, &part) {
        ClosureOutcome::Feasible(cert) => cert.canonicalized(),
        ClosureOutcome::ColorClash { .. } => {
            unreachable!("search leaves and singletons are feasible")
        }
    });
    let status = if search.aborted {
        SolveStatus::Bound {
            proven_lower: colors.len(),
        }
    } else if certificate.is_some() {
        SolveStatus::Optimal
    } else {
        SolveStatus::Bound {
            proven_lower: opts.budget.expect("no certificate only under a budget") + 1,
        }
    };
    Ok(SolveReport {
        certificate,
        status,
    })
}

/// Ground truth for [`minimize_tileset`]: enumerate every color-consistent
/// partition outright and take the smallest feasible one.
pub fn brute_force_min(p: &Pattern) -> Result<usize, SolverError> {
    let cells = p.width() * p.height();
    if cells > BRUTE_FORCE_CELL_GUARD {
        return Err(SolverError::GuardExceeded {
            cells,
            guard: BRUTE_FORCE_CELL_GUARD,
        });
    }
    let cell_list: Vec<(usize, usize)> = p.cells_row_major().collect();
    let mut assignment: Vec<usize> = Vec::with_capacity(cells);
    let mut block_colors: Vec<ColorId> = Vec::new();
    let mut best = usize::MAX;

    fn recurse(
        p: &Pattern,
        cell_list: &[(usize, usize)],
        assignment: &mut Vec<usize>,
        block_colors: &mut Vec<ColorId>,
        best: &mut usize,
    ) {
        if assignment.len() == cell_list.len() {
            let part = CellPartition::from_assignment(p, assignment)
                .expect("enumeration is color-consistent");
            if let ClosureOutcome::Feasible(cert) = closure(p, &part) {
                *best = (*best).min(cert.k);
            }
            return;
        }
        let (x, y) = cell_list[assignment.len()];
        let color = p.color_at(x, y);
        let max_block = block_colors.len();
        for b in 0..=max_block {
            let is_new = b == max_block;
            if is_new {
                block_colors.push(color);
            } else if block_colors[b] != color {
                continue;
            }
            assignment.push(b);
            recurse(p, cell_list, assignment, block_colors, best);
            assignment.pop();
            if is_new {
                block_colors.pop();
            }
        }
    }

    recurse(p, &cell_list, &mut assignment, &mut block_colors, &mut best);
    assert!(best != usize::MAX, "all-singletons is always feasible");
    Ok(best)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertificateVerdict {
    Valid,
    SizeMismatch { declared: usize, actual: usize },
    Clashes(Vec<(usize, usize)>),
    NotSolving(Verdict),
    SeedMismatch(String),
}

impl CertificateVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateVerdict::Valid)
    }
}

/// Checks a certificate against a pattern: uniqueness holds, the declared
/// size matches, and the system assembles the pattern.
pub fn verify_certificate(p: &Pattern, cert: &Certificate) -> CertificateVerdict {
    let clashes = cert.tileset.check_uniqueness();
    if !clashes.is_empty() {
        return CertificateVerdict::Clashes(clashes);
    }
    if cert.k != cert.tileset.len() {
        return CertificateVerdict::SizeMismatch {
            declared: cert.k,
            actual: cert.tileset.len(),
        };
    }
    match verify_solves(&cert.tileset, &cert.seed, p) {
        Ok(Verdict::Solves) => CertificateVerdict::Valid,
        Ok(v) => CertificateVerdict::NotSolving(v),
        Err(e) => CertificateVerdict::SeedMismatch(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn color(name: &str) -> ColorId {
        ColorId::new(name)
    }

    fn pattern(width: usize, height: usize, names: &[&str]) -> Pattern {
        // Rows given top first for readability.
        let mut cells = Vec::new();
        for row in names.chunks(width).rev() {
            cells.extend(row.iter().map(|n| color(n)));
        }
        Pattern::new(width, height, cells).unwrap()
    }

    #[test]
    fn closure_single_cell() {
        let p = Pattern::filled(1, 1, color("Black")).unwrap();
        match closure(&p, &CellPartition::singletons(&p)) {
            ClosureOutcome::Feasible(cert) => {
                assert_eq!(cert.k, 1);
                assert!(verify_certificate(&p, &cert).is_valid());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn closure_checkerboard_per_color() {
        let p = pattern(2, 2, &["White", "Black", "Black", "White"]);
        match closure(&p, &CellPartition::per_color(&p)) {
            ClosureOutcome::Feasible(cert) => {
                assert_eq!(cert.k, 2);
                assert!(verify_certificate(&p, &cert).is_valid());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn closure_color_clash_when_merge_is_forced() {
        // Bottom row Black Black, top row Black White, with all three Black
        // cells in one block: R1 chains every vertical glue into one class
        // and every horizontal glue into another, so the White block's
        // (south, west) pair collides with the Black block's.
        let p = pattern(2, 2, &["Black", "White", "Black", "Black"]);
        let raw = vec![0, 0, 0, 1];
        let part = CellPartition::from_assignment(&p, &raw).unwrap();
        match closure(&p, &part) {
            ClosureOutcome::ColorClash { block_a, block_b } => {
                assert_ne!(block_a, block_b);
            }
            other => panic!("expected color clash, got {other:?}"),
        }
    }

    #[test]
    fn closure_vertical_two_colors_is_feasible() {
        // Black above White, one block each: the seed glues keep the two
        // (south, west) pairs apart, so two types suffice.
        let p = pattern(1, 2, &["Black", "White"]);
        let part = CellPartition::per_color(&p);
        match closure(&p, &part) {
            ClosureOutcome::Feasible(cert) => {
                assert_eq!(cert.k, 2);
                assert!(verify_certificate(&p, &cert).is_valid());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
        assert_eq!(brute_force_min(&p).unwrap(), 2);
    }

    #[test]
    fn closure_merges_redundant_same_color_blocks() {
        // Two stacked Black cells split into two blocks; the column forces
        // both the vertical and horizontal classes together, so R3 merges
        // them into a single self-stacking type.
        let p = pattern(1, 3, &["Black", "Black", "Black"]);
        let part = CellPartition::from_assignment(&p, &[0, 1, 0]).unwrap();
        match closure(&p, &part) {
            ClosureOutcome::Feasible(cert) => {
                assert!(cert.k <= 2);
                assert!(verify_certificate(&p, &cert).is_valid());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn minimize_trivial_patterns() {
        let single = Pattern::filled(1, 1, color("Black")).unwrap();
        let report = minimize_tileset(&single, &SolveOptions::default()).unwrap();
        assert_eq!(report.certificate.unwrap().k, 1);
        assert_eq!(report.status, SolveStatus::Optimal);

        let mono = Pattern::filled(4, 3, color("Black")).unwrap();
        let report = minimize_tileset(&mono, &SolveOptions::default()).unwrap();
        assert_eq!(report.certificate.unwrap().k, 1);
    }

    #[test]
    fn minimize_matches_brute_force_examples() {
        let bwb = pattern(3, 1, &["Black", "White", "Black"]);
        assert_eq!(brute_force_min(&bwb).unwrap(), 2);
        let report = minimize_tileset(&bwb, &SolveOptions::default()).unwrap();
        let cert = report.certificate.unwrap();
        assert_eq!(cert.k, 2);
        assert!(verify_certificate(&bwb, &cert).is_valid());

        let checker = pattern(2, 2, &["White", "Black", "Black", "White"]);
        assert_eq!(brute_force_min(&checker).unwrap(), 2);
        let report = minimize_tileset(&checker, &SolveOptions::default()).unwrap();
        assert_eq!(report.certificate.unwrap().k, 2);
    }

    #[test]
    fn minimize_respects_budget() {
        let bwb = pattern(3, 1, &["Black", "White", "Black"]);
        let opts = SolveOptions {
            budget: Some(1),
            ..SolveOptions::default()
        };
        let report = minimize_tileset(&bwb, &opts).unwrap();
        assert!(report.certificate.is_none());
        assert_eq!(report.status, SolveStatus::Bound { proven_lower: 2 });
    }

    #[test]
    fn minimize_guard() {
        let p = Pattern::filled(7, 7, color("Black")).unwrap();
        let opts = SolveOptions {
            max_cells: 10,
            ..SolveOptions::default()
        };
        assert!(matches!(
            minimize_tileset(&p, &opts),
            Err(SolverError::GuardExceeded { .. })
        ));
        assert!(brute_force_min(&p).is_err());
    }

    #[test]
    fn certificate_verification_catches_tampering() {
        let bwb = pattern(3, 1, &["Black", "White", "Black"]);
        let cert = minimize_tileset(&bwb, &SolveOptions::default())
            .unwrap()
            .certificate
            .unwrap();
        assert!(verify_certificate(&bwb, &cert).is_valid());

        let mut smaller = cert.clone();
        let types = smaller.tileset.types()[..1].to_vec();
        smaller.tileset = TileSet::new(types).unwrap();
        assert!(!verify_certificate(&bwb, &smaller).is_valid());

        let mut lying = cert.clone();
        lying.k = 1;
        assert_eq!(
            verify_certificate(&bwb, &lying),
            CertificateVerdict::SizeMismatch {
                declared: 1,
                actual: 2
            }
        );
    }

    #[test]
    fn partition_validation() {
        let p = pattern(2, 1, &["Black", "White"]);
        assert!(CellPartition::from_assignment(&p, &[0]).is_err());
        assert!(matches!(
            CellPartition::from_assignment(&p, &[0, 0]),
            Err(SolverError::ColorInconsistent { .. })
        ));
        let ok = CellPartition::from_assignment(&p, &[5, 9]).unwrap();
        assert_eq!(ok.block_count(), 2);
        assert_eq!(ok.block_of_cell(0), 0);
    }

    #[test]
    fn glue_classes_merge_and_find() {
        let mut gc = GlueClasses::new(2, 2);
        let a = gc.south_of(1, 1);
        let b = gc.south_of(2, 1);
        assert_ne!(gc.class_of(a), gc.class_of(b));
        gc.unify(a, b);
        assert_eq!(gc.class_of(a), gc.class_of(b));
        // Shared physical edge is one element.
        assert_eq!(gc.north_of(1, 1), gc.south_of(1, 2));
    }
}
