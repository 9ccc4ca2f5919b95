//! Plain-text file formats.
//!
//! Tile set: one type per line, `color north south east west`, whitespace
//! separated; `#`-prefixed lines and blank lines are comments.
//!
//! Pattern: first line `width height`, then `height` lines of `width` color
//! tokens, top row first.
//!
//! Seed: line `north: g1 .. gW`, line `east: g1 .. gH` (bottom to top).
//!
//! Instance: line 1 the target, line 2 the space-separated elements.
//!
//! Serializers emit exactly what the parsers accept, with single spaces and a
//! trailing newline, so parse-then-serialize is byte identical on generated
//! files.

use std::fmt::Write as _;

use thiserror::Error;

use crate::reduction::SubsetSumInstance;
use crate::tiles::{ColorId, GlueId, Pattern, SeedGlues, TileSet, TileType};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        msg: msg.into(),
    })
}

pub fn parse_tileset(input: &str) -> Result<TileSet, FormatError> {
    let mut types = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 {
            return err(
                i + 1,
                format!(
                    "expected `color north south east west` (5 tokens), got {}",
                    tokens.len()
                ),
            );
        }
        types.push(TileType {
            color: ColorId::new(tokens[0]),
            north: GlueId::new(tokens[1]),
            south: GlueId::new(tokens[2]),
            east: GlueId::new(tokens[3]),
            west: GlueId::new(tokens[4]),
        });
    }
    TileSet::new(types).map_err(|e| FormatError {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn serialize_tileset(ts: &TileSet) -> String {
    let mut out = String::new();
    for t in ts.types() {
        writeln!(
            out,
            "{} {} {} {} {}",
            t.color.name(),
            t.north.name(),
            t.south.name(),
            t.east.name(),
            t.west.name()
        )
        .unwrap();
    }
    out
}

pub fn parse_pattern(input: &str) -> Result<Pattern, FormatError> {
    let mut lines = input.lines().enumerate();
    let (i, header) = lines
        .next()
        .ok_or_else(|| FormatError {
            line: 1,
            msg: "empty pattern file".into(),
        })?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return err(i + 1, "expected header `width height`");
    }
    let width: usize = dims[0]
        .parse()
        .map_err(|_| FormatError {
            line: i + 1,
            msg: format!("bad width `{}`", dims[0]),
        })?;
    let height: usize = dims[1]
        .parse()
        .map_err(|_| FormatError {
            line: i + 1,
            msg: format!("bad height `{}`", dims[1]),
        })?;
    if width == 0 || height == 0 {
        return err(i + 1, "dimensions must be positive");
    }

    // Rows arrive top first; store them south first.
    let mut rows: Vec<Vec<ColorId>> = Vec::with_capacity(height);
    for _ in 0..height {
        let (i, row) = lines.next().ok_or_else(|| FormatError {
            line: height + 1,
            msg: format!("expected {height} pattern rows"),
        })?;
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.len() != width {
            return err(
                i + 1,
                format!("expected {} color tokens, got {}", width, tokens.len()),
            );
        }
        rows.push(tokens.into_iter().map(ColorId::new).collect());
    }
    for (i, extra) in lines {
        if !extra.trim().is_empty() {
            return err(i + 1, "trailing content after pattern rows");
        }
    }

    let mut cells = Vec::with_capacity(width * height);
    for row in rows.into_iter().rev() {
        cells.extend(row);
    }
    Pattern::new(width, height, cells).map_err(|e| FormatError {
        line: 1,
        msg: e.to_string(),
    })
}

pub fn serialize_pattern(p: &Pattern) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", p.width(), p.height()).unwrap();
    for y in (1..=p.height()).rev() {
        let row: Vec<&str> = (1..=p.width()).map(|x| p.color_at(x, y).name()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_seed(input: &str) -> Result<SeedGlues, FormatError> {
    let mut north = None;
    let mut east = None;
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("north:") {
            if north.is_some() {
                return err(i + 1, "duplicate `north:` line");
            }
            north = Some(rest.split_whitespace().map(GlueId::new).collect::<Vec<_>>());
        } else if let Some(rest) = line.strip_prefix("east:") {
            if east.is_some() {
                return err(i + 1, "duplicate `east:` line");
            }
            east = Some(rest.split_whitespace().map(GlueId::new).collect::<Vec<_>>());
        } else {
            return err(i + 1, "expected a `north:` or `east:` line");
        }
    }
    match (north, east) {
        (Some(north), Some(east)) => {
            if north.is_empty() || east.is_empty() {
                return err(1, "seed glue lists must be nonempty");
            }
            Ok(SeedGlues::new(north, east))
        }
        (None, _) => err(1, "missing `north:` line"),
        (_, None) => err(1, "missing `east:` line"),
    }
}

pub fn serialize_seed(seed: &SeedGlues) -> String {
    let north: Vec<&str> = seed.north.iter().map(|g| g.name()).collect();
    let east: Vec<&str> = seed.east.iter().map(|g| g.name()).collect();
    format!("north: {}\neast: {}\n", north.join(" "), east.join(" "))
}

pub fn parse_instance(input: &str) -> Result<SubsetSumInstance, FormatError> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (i, target_line) = lines.next().ok_or_else(|| FormatError {
        line: 1,
        msg: "empty instance file".into(),
    })?;
    let n: u64 = target_line.trim().parse().map_err(|_| FormatError {
        line: i + 1,
        msg: format!("bad target `{}`", target_line.trim()),
    })?;
    let (i, elements_line) = lines.next().ok_or_else(|| FormatError {
        line: 2,
        msg: "missing elements line".into(),
    })?;
    let mut elements = Vec::new();
    for tok in elements_line.split_whitespace() {
        let v: u64 = tok.parse().map_err(|_| FormatError {
            line: i + 1,
            msg: format!("bad element `{tok}`"),
        })?;
        elements.push(v);
    }
    if let Some((i, _)) = lines.next() {
        return err(i + 1, "trailing content after elements line");
    }
    SubsetSumInstance::new(elements, n).map_err(|e| FormatError {
        line: 1,
        msg: e.to_string(),
    })
}

pub fn serialize_instance(inst: &SubsetSumInstance) -> String {
    let elems: Vec<String> = inst.elements().iter().map(|e| e.to_string()).collect();
    format!("{}\n{}\n", inst.target(), elems.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tileset_round_trip_with_comments() {
        let text = "# counter types\nBlue 0v 0v 0h 0h\n\nRed 1v 1v 1h 0h\n";
        let ts = parse_tileset(text).unwrap();
        assert_eq!(ts.len(), 2);
        let out = serialize_tileset(&ts);
        assert_eq!(out, "Blue 0v 0v 0h 0h\nRed 1v 1v 1h 0h\n");
        assert_eq!(serialize_tileset(&parse_tileset(&out).unwrap()), out);
    }

    #[test]
    fn tileset_bad_token_count() {
        let e = parse_tileset("Blue 0v 0v 0h\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn hash_glue_tokens_survive() {
        // `#` only comments out a line when it is the first token.
        let text = "Black # # 0h 0h\n";
        let ts = parse_tileset(text).unwrap();
        assert_eq!(ts.types()[0].north.name(), "#");
        assert_eq!(serialize_tileset(&ts), text);
    }

    #[test]
    fn pattern_round_trip_top_row_first() {
        let text = "2 2\nWhite Black\nBlack White\n";
        let p = parse_pattern(text).unwrap();
        // Top row in the file is the north row of the pattern.
        assert_eq!(p.color_at(1, 2).name(), "White");
        assert_eq!(p.color_at(1, 1).name(), "Black");
        assert_eq!(serialize_pattern(&p), text);
    }

    #[test]
    fn pattern_errors() {
        assert!(parse_pattern("").is_err());
        assert!(parse_pattern("2 0\n").is_err());
        assert!(parse_pattern("2 2\nBlack\n").is_err());
        assert!(parse_pattern("1 1\nBlack\nWhite\n").is_err());
    }

    #[test]
    fn seed_round_trip() {
        let text = "north: # 1* 0vp #\neast: 1h 0h\n";
        let s = parse_seed(text).unwrap();
        assert_eq!(s.width(), 4);
        assert_eq!(s.height(), 2);
        assert_eq!(s.east[0].name(), "1h");
        assert_eq!(serialize_seed(&s), text);
    }

    #[test]
    fn seed_errors() {
        assert!(parse_seed("north: a\n").is_err());
        assert!(parse_seed("east: a\n").is_err());
        assert!(parse_seed("north: a\nwest: b\n").is_err());
    }

    #[test]
    fn instance_round_trip() {
        let text = "75\n11 25 37 39\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.target(), 75);
        assert_eq!(inst.elements(), &[11, 25, 37, 39]);
        assert_eq!(serialize_instance(&inst), text);
        assert!(parse_instance("75\n").is_err());
        assert!(parse_instance("75\n0 3\n").is_err());
    }
}
