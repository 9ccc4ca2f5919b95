//! Deterministic rectilinear self-assembly from an L-shaped seed.
//!
//! A tile attaches at (x, y) iff its west glue equals the east glue exposed at
//! (x-1, y) and its south glue equals the north glue exposed at (x, y-1); row
//! and column 0 are the seed. For a tile set satisfying uniqueness the placed
//! set is a least fixed point, so the outcome is independent of attachment
//! order; [`assemble_with_order`] exists to check exactly that.

use thiserror::Error;

use crate::tiles::{Assembly, GlueId, Lookup, Pattern, SeedError, SeedGlues, TileSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssemblyStatus {
    /// Every cell is placed.
    TerminalComplete,
    /// Least cell (column-major) whose exposed glues match no type.
    Stuck { x: usize, y: usize },
    /// Least cell (column-major) where two types clash; only possible when
    /// the tile set violates uniqueness.
    Ambiguous { x: usize, y: usize },
}

#[derive(Clone, Debug)]
pub struct AssemblyOutcome {
    pub assembly: Assembly,
    pub status: AssemblyStatus,
}

impl AssemblyOutcome {
    pub fn is_complete(&self) -> bool {
        self.status == AssemblyStatus::TerminalComplete
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssembleError {
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error("attachment order: {0}")]
    InvalidOrder(String),
    #[error("column {x} has an unplaced cell at y={y}")]
    UnplacedCell { x: usize, y: usize },
}

/// Exposed south/west glues at a frontier cell, given the current placement.
fn exposed(a: &Assembly, seed: &SeedGlues, x: usize, y: usize) -> Option<(GlueId, GlueId)> {
    let south = if y == 1 {
        seed.north[x - 1]
    } else {
        a.tile_at(x, y - 1)?.north
    };
    let west = if x == 1 {
        seed.east[y - 1]
    } else {
        a.tile_at(x - 1, y)?.east
    };
    Some((south, west))
}

fn run(
    ts: &TileSet,
    seed: &SeedGlues,
    width: usize,
    height: usize,
    order: impl Iterator<Item = (usize, usize)>,
) -> AssemblyOutcome {
    let mut assembly = Assembly::empty(width, height);
    for (x, y) in order {
        let Some((south, west)) = exposed(&assembly, seed, x, y) else {
            continue; // a support failed to place; this cell can never attach
        };
        if let Lookup::Unique(i) = ts.lookup(south, west) {
            assembly.place(x, y, ts.types()[i]);
        }
    }
    let status = classify(ts, seed, &assembly);
    AssemblyOutcome { assembly, status }
}

/// Status is derived from the final placement: the least unplaced cell in
/// column-major order always has both supports placed, and its lookup says
/// whether growth stopped for lack of a type or from a clash.
fn classify(ts: &TileSet, seed: &SeedGlues, a: &Assembly) -> AssemblyStatus {
    for x in 1..=a.width() {
        for y in 1..=a.height() {
            if a.tile_at(x, y).is_some() {
                continue;
            }
            let (south, west) =
                exposed(a, seed, x, y).expect("least unplaced cell has placed supports");
            return match ts.lookup(south, west) {
                Lookup::Missing => AssemblyStatus::Stuck { x, y },
                Lookup::Ambiguous(_, _) => AssemblyStatus::Ambiguous { x, y },
                Lookup::Unique(_) => unreachable!("placeable cell left unplaced"),
            };
        }
    }
    AssemblyStatus::TerminalComplete
}

/// Grows the unique terminal assembly with the default column-major sweep
/// (x ascending, y ascending within a column).
pub fn assemble(
    ts: &TileSet,
    seed: &SeedGlues,
    width: usize,
    height: usize,
) -> Result<AssemblyOutcome, AssembleError> {
    seed.check_dims(width, height)?;
    let order = (1..=width).flat_map(move |x| (1..=height).map(move |y| (x, y)));
    Ok(run(ts, seed, width, height, order))
}

/// Like [`assemble`] but with an explicit attachment order, which must be a
/// linear extension of the south-west dominance order covering every cell.
pub fn assemble_with_order(
    ts: &TileSet,
    seed: &SeedGlues,
    width: usize,
    height: usize,
    order: &[(usize, usize)],
) -> Result<AssemblyOutcome, AssembleError> {
    seed.check_dims(width, height)?;
    if order.len() != width * height {
        return Err(AssembleError::InvalidOrder(format!(
            "expected {} cells, got {}",
            width * height,
            order.len()
        )));
    }
    let mut rank = vec![usize::MAX; width * height];
    for (i, &(x, y)) in order.iter().enumerate() {
        if x < 1 || x > width || y < 1 || y > height {
            return Err(AssembleError::InvalidOrder(format!(
                "cell ({x},{y}) out of bounds"
            )));
        }
        let idx = (y - 1) * width + (x - 1);
        if rank[idx] != usize::MAX {
            return Err(AssembleError::InvalidOrder(format!(
                "cell ({x},{y}) listed twice"
            )));
        }
        rank[idx] = i;
    }
    for &(x, y) in order {
        let i = rank[(y - 1) * width + (x - 1)];
        if x > 1 && rank[(y - 1) * width + (x - 2)] > i {
            return Err(AssembleError::InvalidOrder(format!(
                "({x},{y}) precedes its west neighbor"
            )));
        }
        if y > 1 && rank[(y - 2) * width + (x - 1)] > i {
            return Err(AssembleError::InvalidOrder(format!(
                "({x},{y}) precedes its south neighbor"
            )));
        }
    }
    Ok(run(ts, seed, width, height, order.iter().copied()))
}

/// Outcome of checking a system against a target pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Solves,
    /// First cell in row-major (y then x) order whose color disagrees.
    ColorMismatch {
        x: usize,
        y: usize,
        expected: crate::tiles::ColorId,
        found: crate::tiles::ColorId,
    },
    Stuck {
        x: usize,
        y: usize,
    },
    Ambiguous {
        x: usize,
        y: usize,
    },
}

impl Verdict {
    pub fn solves(&self) -> bool {
        matches!(self, Verdict::Solves)
    }
}

/// True verdict iff the system's terminal assembly is complete and matches
/// the pattern cell for cell.
pub fn verify_solves(
    ts: &TileSet,
    seed: &SeedGlues,
    pattern: &Pattern,
) -> Result<Verdict, AssembleError> {
    let outcome = assemble(ts, seed, pattern.width(), pattern.height())?;
    Ok(judge(&outcome, pattern))
}

/// Applies the pattern check to an already-computed outcome.
pub fn judge(outcome: &AssemblyOutcome, pattern: &Pattern) -> Verdict {
    match outcome.status {
        AssemblyStatus::Stuck { x, y } => Verdict::Stuck { x, y },
        AssemblyStatus::Ambiguous { x, y } => Verdict::Ambiguous { x, y },
        AssemblyStatus::TerminalComplete => {
            for (x, y) in pattern.cells_row_major() {
                let found = outcome
                    .assembly
                    .tile_at(x, y)
                    .expect("complete assembly")
                    .color;
                let expected = pattern.color_at(x, y);
                if found != expected {
                    return Verdict::ColorMismatch {
                        x,
                        y,
                        expected,
                        found,
                    };
                }
            }
            Verdict::Solves
        }
    }
}

/// Which face of a line of cells a glue trace reads.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceSide {
    EastOfColumn,
    NorthOfRow,
}

/// The glues along one face of a fully placed column or row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlueTrace {
    pub position: usize,
    pub side: TraceSide,
    /// Ordered by increasing coordinate (south to north, or west to east).
    pub glues: Vec<GlueId>,
}

/// East glues of column x, south to north. Errors if any cell is unplaced.
pub fn column_glue_trace(a: &Assembly, x: usize) -> Result<GlueTrace, AssembleError> {
    let glues = (1..=a.height())
        .map(|y| {
            a.tile_at(x, y)
                .map(|t| t.east)
                .ok_or(AssembleError::UnplacedCell { x, y })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GlueTrace {
        position: x,
        side: TraceSide::EastOfColumn,
        glues,
    })
}

/// North glues of row y, west to east. Errors if any cell is unplaced.
pub fn row_glue_trace(a: &Assembly, y: usize) -> Result<GlueTrace, AssembleError> {
    let glues = (1..=a.width())
        .map(|x| {
            a.tile_at(x, y)
                .map(|t| t.north)
                .ok_or(AssembleError::UnplacedCell { x, y })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GlueTrace {
        position: y,
        side: TraceSide::NorthOfRow,
        glues,
    })
}
