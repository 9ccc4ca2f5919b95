//! Fixtures shared by the integration suites.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use rtas_core::{
    Assembly, ColorId, GlueId, SeedGlues, SubsetSumInstance, TileSet, TileType,
};

pub fn fig_instance() -> SubsetSumInstance {
    SubsetSumInstance::new(vec![11, 25, 37, 39], 75).unwrap()
}

pub fn glue(name: &str) -> GlueId {
    GlueId::new(name)
}

pub fn tile(color: &str, n: &str, s: &str, e: &str, w: &str) -> TileType {
    TileType {
        north: glue(n),
        south: glue(s),
        east: glue(e),
        west: glue(w),
        color: ColorId::new(color),
    }
}

/// The four-type binary countdown set: each column subtracts the borrow
/// arriving from the south from the bit arriving from the west; Blue tiles
/// are 0 bits, Red tiles 1 bits.
pub fn counter_tileset() -> TileSet {
    TileSet::new(vec![
        tile("Blue", "0v", "0v", "0h", "0h"),
        tile("Blue", "0v", "1v", "0h", "1h"),
        tile("Red", "1v", "1v", "1h", "0h"),
        tile("Red", "0v", "0v", "1h", "1h"),
    ])
    .unwrap()
}

/// Seed for a countdown from `start`: east glues spell the start value (LSB
/// at the bottom) and every column gets a borrow of 1 from the seed row.
pub fn counter_seed(start: u64, width: usize, height: usize) -> SeedGlues {
    let east = (0..height)
        .map(|r| {
            if (start >> r) & 1 == 1 {
                glue("1h")
            } else {
                glue("0h")
            }
        })
        .collect();
    SeedGlues::new(vec![glue("1v"); width], east)
}

/// A random linear extension of the south-west dominance order: repeatedly
/// pick any frontier cell whose west and south neighbors are already listed.
pub fn random_attachment_order(
    width: usize,
    height: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(width * height);
    let mut placed = vec![false; width * height];
    let idx = |x: usize, y: usize| (y - 1) * width + (x - 1);
    let mut frontier = vec![(1, 1)];
    while let Some(pick) = (!frontier.is_empty()).then(|| rng.gen_range(0..frontier.len())) {
        let (x, y) = frontier.swap_remove(pick);
        placed[idx(x, y)] = true;
        order.push((x, y));
        if x < width && (y == 1 || placed[idx(x + 1, y - 1)]) {
            frontier.push((x + 1, y));
        }
        if y < height && (x == 1 || placed[idx(x - 1, y + 1)]) {
            frontier.push((x, y + 1));
        }
    }
    order
}

/// Asserts the cycling property on every column of an assembly: wherever the
/// west-side glue sequence of a column is constant or alternates with period
/// 2 for more than |tileset| rows, the (type, north glue) sequence settles
/// into a cycle of period at most |tileset| after at most |tileset| rows.
pub fn assert_column_cycling(a: &Assembly, seed: &SeedGlues, tileset_size: usize) {
    let h = a.height();
    for x in 1..=a.width() {
        let west: Vec<GlueId> = (1..=h)
            .map(|y| {
                if x == 1 {
                    seed.east[y - 1]
                } else {
                    a.tile_at(x - 1, y).expect("complete assembly").east
                }
            })
            .collect();
        let states: Vec<(TileType, GlueId)> = (1..=h)
            .map(|y| {
                let t = *a.tile_at(x, y).expect("complete assembly");
                (t, t.north)
            })
            .collect();

        // Maximal segments where west[i] == west[i+2] throughout.
        let mut start = 0;
        while start < h {
            let mut seg_end = start + 1;
            while seg_end < h && (seg_end < start + 2 || west[seg_end] == west[seg_end - 2]) {
                seg_end += 1;
            }
            let len = seg_end - start;
            if len > tileset_size {
                let tail = &states[start + tileset_size..seg_end];
                let found = (1..=tileset_size).any(|p| {
                    (0..tail.len().saturating_sub(p)).all(|i| tail[i] == tail[i + p])
                });
                assert!(
                    found,
                    "column {x}: no cycle of period <= {tileset_size} in rows {}..{}",
                    start + 1,
                    seg_end
                );
            }
            start = seg_end;
        }
    }
}

/// Deterministic corpus of subset-sum instances: half are built around a
/// known subset (guaranteed solvable), half get a random target.
pub fn random_corpus(count: usize, seed: u64) -> Vec<SubsetSumInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(1..=6);
        let elements: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=63)).collect();
        let total: u64 = elements.iter().sum();
        let target = if out.len() % 2 == 0 {
            let mask = rng.gen_range(1..(1u64 << len));
            elements
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, e)| e)
                .sum()
        } else {
            rng.gen_range(1..=total + 5)
        };
        if target == 0 {
            continue;
        }
        out.push(SubsetSumInstance::new(elements, target).unwrap());
    }
    out
}
