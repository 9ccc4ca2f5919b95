//! A workbench for patterned rectilinear tile self-assembly.
//!
//! Tiles are unit squares with four named glues and a color; growth starts
//! from an L-shaped seed and a tile attaches where both its west and south
//! glues match. When no two types share a (south, west) glue pair the
//! terminal assembly is unique, so a tile set plus a seed either paints a
//! target color pattern or it doesn't.
//!
//! The crate provides:
//!
//! - [`tiles`]: the domain types and the uniqueness check;
//! - [`assembler`]: deterministic simulation, verification against target
//!   patterns, and glue traces;
//! - [`canon`]: canonical forms of tile sets up to glue renaming;
//! - [`reduction`]: compiling subset-sum instances into circuit patterns over
//!   a fixed 26-type tile set, where seed choices decide the instance;
//! - [`solver`]: exact minimum tile set search for small patterns, with a
//!   brute-force oracle and certificate checking;
//! - [`formats`] and [`render`]: flat-file formats and ASCII/PPM output.

pub mod assembler;
pub mod canon;
pub mod formats;
mod intern;
pub mod reduction;
pub mod render;
pub mod solver;
pub mod tiles;

pub use assembler::{
    assemble, assemble_with_order, column_glue_trace, row_glue_trace, verify_solves,
    AssembleError, AssemblyOutcome, AssemblyStatus, GlueTrace, TraceSide, Verdict,
};
pub use canon::{canonical_with_mapping, canonicalize, tilesets_isomorphic};
pub use reduction::{
    build_circuit_pattern, build_seed, circuit_height, circuit_tileset, evaluate_choice,
    min_feasible_height, solve_ss_by_assembly, splice, subset_sum_dp, CircuitColors,
    CircuitLayout, GlueScheme, ReductionError, Signal, SignalChoice, SubsetSumInstance,
};
pub use render::{Palette, RenderError};
pub use solver::{
    brute_force_min, closure, minimize_tileset, verify_certificate, CellPartition, Certificate,
    CertificateVerdict, ClosureOutcome, GlueClasses, SolveOptions, SolveReport, SolveStatus,
    SolverError,
};
pub use tiles::{
    Assembly, ColorId, GlueId, Lookup, Pattern, PatternError, SeedError, SeedGlues, TileSet,
    TileSetError, TileType,
};
