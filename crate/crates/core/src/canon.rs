//! Canonical forms for tile sets up to glue renaming.
//!
//! Two tile sets are isomorphic when one can be obtained from the other by a
//! bijective renaming of glues plus a reordering of types. Colors are part of
//! a type's identity and are never renamed.
//!
//! The canonical form encodes each type as (color, south#, west#, north#,
//! east#), numbering glues by first appearance over that field sequence, and
//! picks the lexicographically least encoding over all type orderings. A
//! branch-and-bound over orderings only ever explores candidates whose next
//! tuple is minimal, which keeps the search tight for the structured sets
//! this crate produces.

use std::collections::HashMap;

use crate::tiles::{GlueId, TileSet, TileType};

type Tuple = (u32, [u32; 4]); // (color rank, [south, west, north, east])

struct Search<'a> {
    types: &'a [TileType],
    color_rank: Vec<u32>,
    numbering: HashMap<GlueId, u32>,
    order: Vec<usize>,
    current: Vec<Tuple>,
    used: Vec<bool>,
    best: Option<(Vec<Tuple>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn tuple_for(&self, idx: usize) -> (Tuple, Vec<GlueId>) {
        let t = &self.types[idx];
        let mut fresh: Vec<GlueId> = Vec::new();
        let number = |g: GlueId, fresh: &mut Vec<GlueId>| -> u32 {
            if let Some(&n) = self.numbering.get(&g) {
                return n;
            }
            if let Some(pos) = fresh.iter().position(|&f| f == g) {
                return (self.numbering.len() + pos) as u32;
            }
            fresh.push(g);
            (self.numbering.len() + fresh.len() - 1) as u32
        };
        let s = number(t.south, &mut fresh);
        let w = number(t.west, &mut fresh);
        let n = number(t.north, &mut fresh);
        let e = number(t.east, &mut fresh);
        ((self.color_rank[idx], [s, w, n, e]), fresh)
    }

    fn descend(&mut self, depth: usize) {
        if depth == self.types.len() {
            if self
                .best
                .as_ref()
                .map_or(true, |(enc, _)| self.current < *enc)
            {
                self.best = Some((self.current.clone(), self.order.clone()));
            }
            return;
        }

        // Minimal next tuple over unused types; only its ties can extend a
        // lexicographically least encoding.
        let mut min: Option<Tuple> = None;
        for idx in 0..self.types.len() {
            if self.used[idx] {
                continue;
            }
            let (tuple, _) = self.tuple_for(idx);
            if min.map_or(true, |m| tuple < m) {
                min = Some(tuple);
            }
        }
        let min = min.expect("at least one unused type");

        // Prune when prefix + min already exceeds the incumbent's prefix.
        if let Some((best, _)) = &self.best {
            let prefix_cmp = self.current.as_slice().cmp(&best[..depth]);
            let cmp = prefix_cmp.then_with(|| min.cmp(&best[depth]));
            if cmp == std::cmp::Ordering::Greater {
                return;
            }
        }

        for idx in 0..self.types.len() {
            if self.used[idx] {
                continue;
            }
            let (tuple, fresh) = self.tuple_for(idx);
            if tuple != min {
                continue;
            }
            let base = self.numbering.len() as u32;
            for (k, g) in fresh.iter().enumerate() {
                self.numbering.insert(*g, base + k as u32);
            }
            self.used[idx] = true;
            self.order.push(idx);
            self.current.push(tuple);

            self.descend(depth + 1);

            self.current.pop();
            self.order.pop();
            self.used[idx] = false;
            for g in &fresh {
                self.numbering.remove(g);
            }
        }
    }
}

/// Canonical form plus the glue renaming that produced it, so companion data
/// (e.g. a seed) can be renamed consistently.
pub fn canonical_with_mapping(ts: &TileSet) -> (TileSet, HashMap<GlueId, GlueId>) {
    if ts.is_empty() {
        return (TileSet::new(vec![]).unwrap(), HashMap::new());
    }

    // Rank colors by name so the canonical order is stable across processes.
    let mut color_names: Vec<&str> = ts.types().iter().map(|t| t.color.name()).collect();
    color_names.sort_unstable();
    color_names.dedup();
    let color_rank: Vec<u32> = ts
        .types()
        .iter()
        .map(|t| color_names.binary_search(&t.color.name()).unwrap() as u32)
        .collect();

    let mut search = Search {
        types: ts.types(),
        color_rank,
        numbering: HashMap::new(),
        order: Vec::new(),
        current: Vec::new(),
        used: vec![false; ts.len()],
        best: None,
    };
    search.descend(0);
    let (_, order) = search.best.expect("nonempty search always finds an order");

    let mut mapping: HashMap<GlueId, u32> = HashMap::new();
    for &idx in &order {
        let t = &ts.types()[idx];
        for g in [t.south, t.west, t.north, t.east] {
            let next = mapping.len() as u32;
            mapping.entry(g).or_insert(next);
        }
    }
    let glue_map: HashMap<GlueId, GlueId> = mapping
        .into_iter()
        .map(|(g, n)| (g, GlueId::new(&format!("g{n}"))))
        .collect();

    let types: Vec<TileType> = order
        .iter()
        .map(|&idx| {
            let t = ts.types()[idx];
            TileType {
                north: glue_map[&t.north],
                south: glue_map[&t.south],
                east: glue_map[&t.east],
                west: glue_map[&t.west],
                color: t.color,
            }
        })
        .collect();
    (
        TileSet::new(types).expect("canonical renaming preserves distinctness"),
        glue_map,
    )
}

/// The canonical representative of a tile set's glue-renaming class.
///
/// Idempotent, and invariant under any glue bijection and any permutation of
/// type order.
pub fn canonicalize(ts: &TileSet) -> TileSet {
    canonical_with_mapping(ts).0
}

/// True iff the two sets are equal up to glue renaming and type reordering.
pub fn tilesets_isomorphic(a: &TileSet, b: &TileSet) -> bool {
    if a.len() != b.len() {
        return false;
    }
    canonicalize(a) == canonicalize(b)
}
