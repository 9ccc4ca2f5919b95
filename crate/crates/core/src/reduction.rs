//! Compiling subset-sum instances into circuit patterns.
//!
//! A circuit pattern encodes a target number in its first column and a cascade
//! of binary subtractions, one staircase block of h+1 columns per element,
//! ending in an all-Black column that assembles exactly when the running total
//! reaches zero. The fixed 26-type tile set built here assembles any circuit;
//! the seed's per-element signal glues choose which elements are subtracted,
//! so sweeping seeds decides the subset-sum instance.
//!
//! Rows are numbered 1..=h with the least significant bit at the bottom.
//! Within an element block, local column j (0-based) carries element bit j+1:
//! pass-through cells below the up-arrow cell at row j, the subtracting
//! right-arrow cell at row j+1, and borrow-ripple cells above. Column h of the
//! block is a padding zero bit that converts the top result signal back to a
//! horizontal glue.

use rayon::prelude::*;
use thiserror::Error;

use crate::assembler::{assemble, judge, AssemblyOutcome, GlueTrace};
use crate::tiles::{ColorId, GlueId, Pattern, SeedGlues, TileSet, TileType};

pub const DEFAULT_MIN_HEIGHT: u32 = 21;
pub const DEFAULT_ENUMERATION_GUARD: usize = 24;
pub const DEFAULT_DP_GUARD: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("element list must be nonempty")]
    EmptyElements,
    #[error("element {index} is zero; elements must be positive")]
    ZeroElement { index: usize },
    #[error("target must be positive")]
    ZeroTarget,
    #[error("height {h} too small for {offender}: needs at least {needed} rows")]
    HeightTooSmall {
        offender: String,
        needed: u32,
        h: u32,
    },
    #[error("height {h} exceeds the supported maximum of 63")]
    HeightTooLarge { h: u32 },
    #[error("choice has {got} signals but the instance has {want} elements")]
    ChoiceLength { got: usize, want: usize },
    #[error("enumeration guard exceeded: {elements} elements > {guard}")]
    EnumerationGuard { elements: usize, guard: usize },
    #[error("dp guard exceeded: target {target} x {elements} elements > {guard}")]
    DpGuard {
        target: u64,
        elements: usize,
        guard: u64,
    },
    #[error("splice requires equal heights: got {p1} and {p2} with h={h}")]
    SpliceHeight { p1: usize, p2: usize, h: u32 },
    #[error("boundary value {value} out of range for height {h}")]
    ValueRange { value: u64, h: u32 },
}

/// A subset-sum instance: positive elements and a positive target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetSumInstance {
    elements: Vec<u64>,
    target: u64,
}

impl SubsetSumInstance {
    pub fn new(elements: Vec<u64>, target: u64) -> Result<Self, ReductionError> {
        if elements.is_empty() {
            return Err(ReductionError::EmptyElements);
        }
        if let Some(index) = elements.iter().position(|&e| e == 0) {
            return Err(ReductionError::ZeroElement { index });
        }
        if target == 0 {
            return Err(ReductionError::ZeroTarget);
        }
        Ok(SubsetSumInstance { elements, target })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u128 {
        self.elements.iter().map(|&e| e as u128).sum()
    }
}

/// Per-element subtraction switch. `On` is the `*` tag (subtract), `Off` the
/// `x` tag (skip).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Signal {
    On,
    Off,
}

/// One signal per element, ordered like the instance's element list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignalChoice(Vec<Signal>);

impl SignalChoice {
    pub fn new(signals: Vec<Signal>) -> Self {
        SignalChoice(signals)
    }

    pub fn all_on(len: usize) -> Self {
        SignalChoice(vec![Signal::On; len])
    }

    pub fn all_off(len: usize) -> Self {
        SignalChoice(vec![Signal::Off; len])
    }

    /// Bit i of `mask` turns element i on.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        SignalChoice(
            (0..len)
                .map(|i| {
                    if (mask >> i) & 1 == 1 {
                        Signal::On
                    } else {
                        Signal::Off
                    }
                })
                .collect(),
        )
    }

    /// Parses a `*`/`x` string, one character per element.
    pub fn parse(s: &str) -> Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '*' => Ok(Signal::On),
                'x' => Ok(Signal::Off),
                other => Err(format!("bad signal character `{other}`; expected `*` or `x`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignalChoice)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Signal {
        self.0[i]
    }

    pub fn signals(&self) -> &[Signal] {
        &self.0
    }

    /// Sum of the elements switched on.
    pub fn chosen_sum(&self, inst: &SubsetSumInstance) -> u128 {
        inst.elements()
            .iter()
            .zip(&self.0)
            .filter(|(_, s)| **s == Signal::On)
            .map(|(e, _)| *e as u128)
            .sum()
    }
}

impl std::fmt::Display for SignalChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Signal::On => "*",
                Signal::Off => "x",
            })?;
        }
        Ok(())
    }
}

/// The fixed glue alphabet of the circuit tile set.
///
/// Horizontal glues carry running-total bits, pass glues carry element bits
/// up a column, carry glues ripple borrows, signal glues combine a bit with
/// the subtract-on/off tag, and `#` is the neutral vertical glue of the
/// Black/White columns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GlueScheme {
    pub neutral: GlueId,
    pub zero_h: GlueId,
    pub one_h: GlueId,
    pub zero_vp: GlueId,
    pub one_vp: GlueId,
    pub zero_vc: GlueId,
    pub one_vc: GlueId,
    pub zero_on: GlueId,
    pub zero_off: GlueId,
    pub one_on: GlueId,
    pub one_off: GlueId,
}

impl GlueScheme {
    pub fn standard() -> Self {
        GlueScheme {
            neutral: GlueId::new("#"),
            zero_h: GlueId::new("0h"),
            one_h: GlueId::new("1h"),
            zero_vp: GlueId::new("0vp"),
            one_vp: GlueId::new("1vp"),
            zero_vc: GlueId::new("0vc"),
            one_vc: GlueId::new("1vc"),
            zero_on: GlueId::new("0*"),
            zero_off: GlueId::new("0x"),
            one_on: GlueId::new("1*"),
            one_off: GlueId::new("1x"),
        }
    }

    pub fn horizontal(&self, bit: u8) -> GlueId {
        if bit == 0 {
            self.zero_h
        } else {
            self.one_h
        }
    }

    pub fn pass(&self, bit: u8) -> GlueId {
        if bit == 0 {
            self.zero_vp
        } else {
            self.one_vp
        }
    }

    pub fn carry(&self, bit: u8) -> GlueId {
        if bit == 0 {
            self.zero_vc
        } else {
            self.one_vc
        }
    }

    pub fn signal(&self, bit: u8, tag: Signal) -> GlueId {
        match (bit, tag) {
            (0, Signal::On) => self.zero_on,
            (0, Signal::Off) => self.zero_off,
            (_, Signal::On) => self.one_on,
            (_, Signal::Off) => self.one_off,
        }
    }

    pub fn all(&self) -> [GlueId; 11] {
        [
            self.neutral,
            self.zero_h,
            self.one_h,
            self.zero_vp,
            self.one_vp,
            self.zero_vc,
            self.one_vc,
            self.zero_on,
            self.zero_off,
            self.one_on,
            self.one_off,
        ]
    }
}

/// The nine colors of circuit patterns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CircuitColors {
    pub black: ColorId,
    pub white: ColorId,
    pub el_black: ColorId,
    pub el_white: ColorId,
    pub rab: ColorId,
    pub raw: ColorId,
    pub uab: ColorId,
    pub uaw: ColorId,
    pub carry: ColorId,
}

impl CircuitColors {
    pub fn standard() -> Self {
        CircuitColors {
            black: ColorId::new("Black"),
            white: ColorId::new("White"),
            el_black: ColorId::new("el-Black"),
            el_white: ColorId::new("el-White"),
            rab: ColorId::new("RAB"),
            raw: ColorId::new("RAW"),
            uab: ColorId::new("UAB"),
            uaw: ColorId::new("UAW"),
            carry: ColorId::new("CarryBlue"),
        }
    }

    pub fn all(&self) -> [ColorId; 9] {
        [
            self.black,
            self.white,
            self.el_black,
            self.el_white,
            self.rab,
            self.raw,
            self.uab,
            self.uaw,
            self.carry,
        ]
    }

    fn right_arrow(&self, bit: u8) -> ColorId {
        if bit == 0 {
            self.rab
        } else {
            self.raw
        }
    }

    fn up_arrow(&self, bit: u8) -> ColorId {
        if bit == 0 {
            self.uab
        } else {
            self.uaw
        }
    }

    fn pass_through(&self, bit: u8) -> ColorId {
        if bit == 0 {
            self.el_black
        } else {
            self.el_white
        }
    }

    fn target(&self, bit: u8) -> ColorId {
        if bit == 0 {
            self.black
        } else {
            self.white
        }
    }
}

/// 1-indexed bit r of v; row r of a column carries bit r.
pub fn bit(v: u64, r: u32) -> u8 {
    ((v >> (r - 1)) & 1) as u8
}

/// Number of bits needed to write v (0 needs none).
pub fn bit_length(v: u64) -> u32 {
    64 - v.leading_zeros()
}

/// Smallest h with 2^h >= v, for v >= 1.
fn ceil_log2(v: u128) -> u32 {
    128 - (v - 1).leading_zeros()
}

/// The circuit height: max(ceil(log2(target + sum of elements)), min_height).
///
/// The default floor of 21 keeps 2^h above both the target and the total, so
/// a zero residual can only mean an exact subset sum; smaller overrides exist
/// for display-sized patterns.
pub fn circuit_height(inst: &SubsetSumInstance, min_height: u32) -> u32 {
    let total = inst.target() as u128 + inst.sum();
    ceil_log2(total).max(min_height)
}

/// Smallest height at which the instance is encodable at all: every row must
/// hold one bit of the target and of each element.
pub fn min_feasible_height(inst: &SubsetSumInstance) -> u32 {
    inst.elements()
        .iter()
        .map(|&e| bit_length(e))
        .chain([bit_length(inst.target())])
        .max()
        .unwrap()
}

/// What a circuit cell is for. `element` is 0-based; `bit` is the value bit
/// the cell's color encodes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellRole {
    /// First column: one bit of the target per row.
    Target,
    /// Subtracting half-subtractor cell.
    Ra { element: usize, bit: u8 },
    /// Signal-lifting cell.
    Ua { element: usize, bit: u8 },
    /// Horizontal pass-through below the staircase.
    El { element: usize, bit: u8 },
    /// Borrow ripple above the staircase.
    Carry { element: usize },
    /// Last column: all Black when the residual is zero.
    FinalBlack,
}

/// Role of a cell within a single element block: local column j in 0..=h
/// carries element bit j+1 (column h is the padding zero bit).
fn element_role(value: u64, h: u32, j: u32, y: u32) -> CellRole {
    debug_assert!(j <= h && (1..=h).contains(&y));
    let element = usize::MAX; // patched by callers that know the index
    if j == 0 {
        if y == 1 {
            CellRole::Ra {
                element,
                bit: bit(value, 1),
            }
        } else {
            CellRole::Carry { element }
        }
    } else if j == h {
        if y == h {
            CellRole::Ua { element, bit: 0 }
        } else {
            CellRole::El { element, bit: 0 }
        }
    } else {
        let b = bit(value, j + 1);
        if y < j {
            CellRole::El { element, bit: b }
        } else if y == j {
            CellRole::Ua { element, bit: b }
        } else if y == j + 1 {
            CellRole::Ra { element, bit: b }
        } else {
            CellRole::Carry { element }
        }
    }
}

fn with_element(role: CellRole, element: usize) -> CellRole {
    match role {
        CellRole::Ra { bit, .. } => CellRole::Ra { element, bit },
        CellRole::Ua { bit, .. } => CellRole::Ua { element, bit },
        CellRole::El { bit, .. } => CellRole::El { element, bit },
        CellRole::Carry { .. } => CellRole::Carry { element },
        other => other,
    }
}

/// Geometry and per-cell roles of a circuit pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircuitLayout {
    instance: SubsetSumInstance,
    height: u32,
}

impl CircuitLayout {
    pub fn new(inst: &SubsetSumInstance, h: u32) -> Result<Self, ReductionError> {
        if h > 63 {
            return Err(ReductionError::HeightTooLarge { h });
        }
        let need_target = bit_length(inst.target());
        if need_target > h {
            return Err(ReductionError::HeightTooSmall {
                offender: format!("target {}", inst.target()),
                needed: need_target,
                h,
            });
        }
        for (i, &e) in inst.elements().iter().enumerate() {
            let needed = bit_length(e);
            if needed > h {
                return Err(ReductionError::HeightTooSmall {
                    offender: format!("element {} (value {})", i + 1, e),
                    needed,
                    h,
                });
            }
        }
        Ok(CircuitLayout {
            instance: inst.clone(),
            height: h,
        })
    }

    pub fn instance(&self) -> &SubsetSumInstance {
        &self.instance
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn width(&self) -> usize {
        2 + self.instance.len() * (self.height as usize + 1)
    }

    /// First column of element i (0-based element index, 1-based column).
    pub fn start_column(&self, element: usize) -> usize {
        2 + element * (self.height as usize + 1)
    }

    /// Column whose east glues expose the running total after element i.
    pub fn boundary_column(&self, element: usize) -> usize {
        self.start_column(element) + self.height as usize
    }

    /// Total on the full rectangle.
    pub fn role(&self, x: usize, y: usize) -> CellRole {
        assert!(x >= 1 && x <= self.width() && y >= 1 && y <= self.height as usize);
        if x == 1 {
            return CellRole::Target;
        }
        if x == self.width() {
            return CellRole::FinalBlack;
        }
        let offset = x - 2;
        let stride = self.height as usize + 1;
        let element = offset / stride;
        let j = (offset % stride) as u32;
        let value = self.instance.elements()[element];
        with_element(element_role(value, self.height, j, y as u32), element)
    }

    fn color_of(&self, role: CellRole, y: usize, colors: &CircuitColors) -> ColorId {
        match role {
            CellRole::Target => colors.target(bit(self.instance.target(), y as u32)),
            CellRole::Ra { bit, .. } => colors.right_arrow(bit),
            CellRole::Ua { bit, .. } => colors.up_arrow(bit),
            CellRole::El { bit, .. } => colors.pass_through(bit),
            CellRole::Carry { .. } => colors.carry,
            CellRole::FinalBlack => colors.black,
        }
    }
}

/// The circuit color pattern for an instance at height h.
pub fn build_circuit_pattern(inst: &SubsetSumInstance, h: u32) -> Result<Pattern, ReductionError> {
    let layout = CircuitLayout::new(inst, h)?;
    let colors = CircuitColors::standard();
    let (w, hh) = (layout.width(), h as usize);
    let mut cells = Vec::with_capacity(w * hh);
    for y in 1..=hh {
        for x in 1..=w {
            cells.push(layout.color_of(layout.role(x, y), y, &colors));
        }
    }
    Ok(Pattern::new(w, hh, cells).expect("layout dims are positive"))
}

/// The 26-type circuit tile set: Black/White target tiles, pass-through
/// tiles, borrow-ripple carry tiles, and the right-arrow/up-arrow pairs that
/// carry the subtract signal up the staircase.
pub fn circuit_tileset() -> TileSet {
    let g = GlueScheme::standard();
    let c = CircuitColors::standard();
    let mut types = Vec::with_capacity(26);

    types.push(TileType {
        north: g.neutral,
        south: g.neutral,
        east: g.zero_h,
        west: g.zero_h,
        color: c.black,
    });
    types.push(TileType {
        north: g.neutral,
        south: g.neutral,
        east: g.one_h,
        west: g.one_h,
        color: c.white,
    });

    // Pass-throughs: element bit vertically, running-total bit horizontally.
    for eb in [0u8, 1] {
        for t in [0u8, 1] {
            types.push(TileType {
                north: g.pass(eb),
                south: g.pass(eb),
                east: g.horizontal(t),
                west: g.horizontal(t),
                color: c.pass_through(eb),
            });
        }
    }

    // Carry: subtract the incoming borrow from the running-total bit.
    for borrow in [0u8, 1] {
        for t in [0u8, 1] {
            let diff = t ^ borrow;
            let borrow_out = borrow & (1 - t);
            types.push(TileType {
                north: g.carry(borrow_out),
                south: g.carry(borrow),
                east: g.horizontal(diff),
                west: g.horizontal(t),
                color: c.carry,
            });
        }
    }

    // Right-arrows: subtract the element bit when the signal is on, pass the
    // total through when off; either way the tagged result travels east and
    // the borrow goes north.
    for eb in [0u8, 1] {
        for tag in [Signal::On, Signal::Off] {
            for t in [0u8, 1] {
                let (out, borrow_out) = match tag {
                    Signal::On => (t ^ eb, eb & (1 - t)),
                    Signal::Off => (t, 0),
                };
                types.push(TileType {
                    north: g.carry(borrow_out),
                    south: g.signal(eb, tag),
                    east: g.signal(out, tag),
                    west: g.horizontal(t),
                    color: c.right_arrow(eb),
                });
            }
        }
    }

    // Up-arrows: convert the tagged total bit back to a horizontal glue and
    // lift the element bit (their own color bit) into the signal going north.
    for eb in [0u8, 1] {
        for tag in [Signal::On, Signal::Off] {
            for t in [0u8, 1] {
                types.push(TileType {
                    north: g.signal(eb, tag),
                    south: g.pass(eb),
                    east: g.horizontal(t),
                    west: g.signal(t, tag),
                    color: c.up_arrow(eb),
                });
            }
        }
    }

    TileSet::new(types).expect("the 26 circuit types are distinct")
}

/// North seed glues under one element block: the tagged first bit, then bits
/// 2..=h as pass glues, then the padding zero.
pub fn element_seed_glues(value: u64, h: u32, tag: Signal) -> Vec<GlueId> {
    let g = GlueScheme::standard();
    let mut glues = Vec::with_capacity(h as usize + 1);
    glues.push(g.signal(bit(value, 1), tag));
    for j in 1..h {
        glues.push(g.pass(bit(value, j + 1)));
    }
    glues.push(g.pass(0));
    glues
}

/// The columns of one element block (local columns 0..=h, bottom-up colors).
pub fn element_columns(value: u64, h: u32) -> Vec<Vec<ColorId>> {
    let colors = CircuitColors::standard();
    (0..=h)
        .map(|j| {
            (1..=h)
                .map(|y| match element_role(value, h, j, y) {
                    CellRole::Ra { bit, .. } => colors.right_arrow(bit),
                    CellRole::Ua { bit, .. } => colors.up_arrow(bit),
                    CellRole::El { bit, .. } => colors.pass_through(bit),
                    CellRole::Carry { .. } => colors.carry,
                    _ => unreachable!("element blocks have no target cells"),
                })
                .collect()
        })
        .collect()
}

/// The feasible seed for an instance and a per-element signal choice.
pub fn build_seed(
    inst: &SubsetSumInstance,
    h: u32,
    choice: &SignalChoice,
) -> Result<SeedGlues, ReductionError> {
    let layout = CircuitLayout::new(inst, h)?;
    if choice.len() != inst.len() {
        return Err(ReductionError::ChoiceLength {
            got: choice.len(),
            want: inst.len(),
        });
    }
    let g = GlueScheme::standard();
    let mut north = Vec::with_capacity(layout.width());
    north.push(g.neutral);
    for (i, &e) in inst.elements().iter().enumerate() {
        north.extend(element_seed_glues(e, h, choice.get(i)));
    }
    north.push(g.neutral);
    let east = (1..=h).map(|r| g.horizontal(bit(inst.target(), r))).collect();
    Ok(SeedGlues::new(north, east))
}

/// The residual (target - chosen sum) mod 2^h: the analytic model of the
/// circuit, independent of any simulation.
pub fn evaluate_choice(inst: &SubsetSumInstance, h: u32, choice: &SignalChoice) -> u64 {
    let modulus = 1i128 << h;
    let residual =
        (inst.target() as i128 - choice.chosen_sum(inst) as i128).rem_euclid(modulus);
    residual as u64
}

/// Reads a trace of 0h/1h glues as a binary number, least significant glue
/// first. `None` if any other glue appears.
pub fn decode_bit_trace(trace: &GlueTrace) -> Option<u64> {
    let g = GlueScheme::standard();
    let mut value = 0u64;
    for (i, &glue) in trace.glues.iter().enumerate() {
        if glue == g.one_h {
            value |= 1 << i;
        } else if glue != g.zero_h {
            return None;
        }
    }
    Some(value)
}

/// Assembles the circuit for one choice and checks it against the pattern.
pub fn assemble_choice(
    inst: &SubsetSumInstance,
    h: u32,
    choice: &SignalChoice,
) -> Result<(AssemblyOutcome, bool), ReductionError> {
    let pattern = build_circuit_pattern(inst, h)?;
    let seed = build_seed(inst, h, choice)?;
    let ts = circuit_tileset();
    let outcome = assemble(&ts, &seed, pattern.width(), pattern.height())
        .expect("seed dims match the pattern");
    let solves = judge(&outcome, &pattern).solves();
    Ok((outcome, solves))
}

/// Searches all 2^|S| signal choices by simulation and returns the first
/// accepting one in mask order, if any.
pub fn solve_ss_by_assembly(
    inst: &SubsetSumInstance,
    h: u32,
    guard: usize,
) -> Result<Option<SignalChoice>, ReductionError> {
    if inst.len() > guard {
        return Err(ReductionError::EnumerationGuard {
            elements: inst.len(),
            guard,
        });
    }
    let pattern = build_circuit_pattern(inst, h)?;
    let ts = circuit_tileset();
    let masks = 1u64 << inst.len();
    let found = (0..masks)
        .into_par_iter()
        .filter(|&mask| {
            let choice = SignalChoice::from_mask(inst.len(), mask);
            let seed = build_seed(inst, h, &choice).expect("layout already validated");
            let outcome = assemble(&ts, &seed, pattern.width(), pattern.height())
                .expect("seed dims match the pattern");
            judge(&outcome, &pattern).solves()
        })
        .min();
    Ok(found.map(|mask| SignalChoice::from_mask(inst.len(), mask)))
}

/// Classic pseudo-polynomial reachability: is any subset sum equal to the
/// target? Independent oracle for the assembly search.
pub fn subset_sum_dp(inst: &SubsetSumInstance, guard: u64) -> Result<bool, ReductionError> {
    let cost = (inst.target() + 1).checked_mul(inst.len() as u64);
    if cost.map_or(true, |c| c > guard) {
        return Err(ReductionError::DpGuard {
            target: inst.target(),
            elements: inst.len(),
            guard,
        });
    }
    let n = inst.target() as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for &e in inst.elements() {
        let e = e as usize;
        if e > n {
            continue;
        }
        for j in (e..=n).rev() {
            if reachable[j - e] {
                reachable[j] = true;
            }
        }
    }
    Ok(reachable[n])
}

/// Joins two equal-height sub-patterns with a connector element block that
/// subtracts d = (v1 - v2) mod 2^h, so a boundary reading v1 on the left
/// feeds v2 into the right.
pub fn splice(
    p1: &Pattern,
    v1: u64,
    p2: &Pattern,
    v2: u64,
    h: u32,
) -> Result<Pattern, ReductionError> {
    if p1.height() != h as usize || p2.height() != h as usize {
        return Err(ReductionError::SpliceHeight {
            p1: p1.height(),
            p2: p2.height(),
            h,
        });
    }
    if h > 63 {
        return Err(ReductionError::HeightTooLarge { h });
    }
    for v in [v1, v2] {
        if bit_length(v) > h {
            return Err(ReductionError::ValueRange { value: v, h });
        }
    }
    let d = ((v1 as i128 - v2 as i128).rem_euclid(1i128 << h)) as u64;
    let connector = element_columns(d, h);
    let width = p1.width() + connector.len() + p2.width();
    let hh = h as usize;
    let mut cells = Vec::with_capacity(width * hh);
    for y in 1..=hh {
        for x in 1..=p1.width() {
            cells.push(p1.color_at(x, y));
        }
        for col in &connector {
            cells.push(col[y - 1]);
        }
        for x in 1..=p2.width() {
            cells.push(p2.color_at(x, y));
        }
    }
    Ok(Pattern::new(width, hh, cells).expect("positive dims"))
}
