//! Static renderings of patterns and assemblies: token grids and binary PPM.

use std::collections::HashMap;

use thiserror::Error;

use crate::tiles::{Assembly, ColorId, Pattern};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("no palette entry for color `{0}`")]
    UnknownColor(String),
    #[error("scale must be positive")]
    ZeroScale,
    #[error("assembly is partial; cell ({x},{y}) is unplaced")]
    PartialAssembly { x: usize, y: usize },
    #[error("palette line {line}: {msg}")]
    PaletteSyntax { line: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PaletteEntry {
    pub rgb: [u8; 3],
    pub token: String,
}

/// Maps colors to display tokens and pixels. The default covers the 29 colors
/// the generators can produce; palette files extend or override it with
/// `color=R,G,B[,token]` lines.
#[derive(Clone, Debug)]
pub struct Palette {
    entries: HashMap<ColorId, PaletteEntry>,
}

impl Palette {
    pub fn empty() -> Self {
        Palette {
            entries: HashMap::new(),
        }
    }

    pub fn set(&mut self, color: ColorId, rgb: [u8; 3], token: impl Into<String>) {
        self.entries.insert(
            color,
            PaletteEntry {
                rgb,
                token: token.into(),
            },
        );
    }

    pub fn get(&self, color: ColorId) -> Option<&PaletteEntry> {
        self.entries.get(&color)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parses `color=R,G,B[,token]` lines on top of the current palette.
    /// Without an explicit token the color name is used.
    pub fn apply_overrides(&mut self, input: &str) -> Result<(), RenderError> {
        for (i, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |msg: &str| RenderError::PaletteSyntax {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (name, rest) = line.split_once('=').ok_or_else(|| syntax("missing `=`"))?;
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if parts.len() != 3 && parts.len() != 4 {
                return Err(syntax("expected `color=R,G,B[,token]`"));
            }
            let mut rgb = [0u8; 3];
            for (k, part) in parts[..3].iter().enumerate() {
                rgb[k] = part
                    .parse()
                    .map_err(|_| syntax(&format!("bad channel value `{part}`")))?;
            }
            let name = name.trim();
            let token = parts.get(3).copied().unwrap_or(name).to_string();
            self.set(ColorId::new(name), rgb, token);
        }
        Ok(())
    }
}

impl Default for Palette {
    /// The 29 builtin colors: the nine circuit colors plus the four greens,
    /// eight purples, and the Black/White copies used by auxiliary patterns.
    fn default() -> Self {
        let mut p = Palette::empty();
        let builtin: [(&str, [u8; 3], &str); 29] = [
            ("Black", [0, 0, 0], "B"),
            ("White", [255, 255, 255], "W"),
            ("el-Black", [80, 80, 80], "b"),
            ("el-White", [200, 200, 200], "w"),
            ("RAB", [178, 34, 34], "R"),
            ("RAW", [250, 128, 114], "r"),
            ("UAB", [34, 139, 34], "U"),
            ("UAW", [144, 238, 144], "u"),
            ("CarryBlue", [65, 105, 225], "C"),
            ("G1", [0, 100, 0], "G1"),
            ("G2", [0, 128, 0], "G2"),
            ("G3", [46, 139, 87], "G3"),
            ("G4", [60, 179, 113], "G4"),
            ("P1", [128, 0, 128], "P1"),
            ("P2", [148, 0, 211], "P2"),
            ("P3", [138, 43, 226], "P3"),
            ("P4", [147, 112, 219], "P4"),
            ("P5", [186, 85, 211], "P5"),
            ("P6", [153, 50, 204], "P6"),
            ("P7", [218, 112, 214], "P7"),
            ("P8", [221, 160, 221], "P8"),
            ("Black1", [20, 20, 20], "B1"),
            ("Black2", [35, 35, 35], "B2"),
            ("Black3", [50, 50, 50], "B3"),
            ("Black4", [65, 65, 65], "B4"),
            ("White1", [245, 245, 245], "W1"),
            ("White2", [235, 235, 235], "W2"),
            ("White3", [225, 225, 225], "W3"),
            ("White4", [215, 215, 215], "W4"),
        ];
        for (name, rgb, token) in builtin {
            p.set(ColorId::new(name), rgb, token);
        }
        p
    }
}

fn entry<'a>(palette: &'a Palette, color: ColorId) -> Result<&'a PaletteEntry, RenderError> {
    palette
        .get(color)
        .ok_or_else(|| RenderError::UnknownColor(color.name().to_string()))
}

/// One line per row, top row first, palette tokens separated by spaces.
pub fn render_pattern_ascii(p: &Pattern, palette: &Palette) -> Result<String, RenderError> {
    let mut out = String::new();
    for y in (1..=p.height()).rev() {
        for x in 1..=p.width() {
            if x > 1 {
                out.push(' ');
            }
            out.push_str(&entry(palette, p.color_at(x, y))?.token);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Binary P6 at 255 maxval, one scaled square of pixels per cell, top row
/// first.
pub fn render_pattern_ppm(
    p: &Pattern,
    palette: &Palette,
    scale: usize,
) -> Result<Vec<u8>, RenderError> {
    if scale == 0 {
        return Err(RenderError::ZeroScale);
    }
    let (pw, ph) = (p.width() * scale, p.height() * scale);
    let mut out = format!("P6\n{pw} {ph}\n255\n").into_bytes();
    out.reserve(pw * ph * 3);
    for y in (1..=p.height()).rev() {
        let mut row = Vec::with_capacity(pw * 3);
        for x in 1..=p.width() {
            let rgb = entry(palette, p.color_at(x, y))?.rgb;
            for _ in 0..scale {
                row.extend_from_slice(&rgb);
            }
        }
        for _ in 0..scale {
            out.extend_from_slice(&row);
        }
    }
    Ok(out)
}

fn assembly_pattern(a: &Assembly) -> Result<Pattern, RenderError> {
    a.to_pattern().ok_or_else(|| {
        for y in 1..=a.height() {
            for x in 1..=a.width() {
                if a.tile_at(x, y).is_none() {
                    return RenderError::PartialAssembly { x, y };
                }
            }
        }
        unreachable!("to_pattern failed on a complete assembly")
    })
}

pub fn render_assembly_ascii(a: &Assembly, palette: &Palette) -> Result<String, RenderError> {
    render_pattern_ascii(&assembly_pattern(a)?, palette)
}

pub fn render_assembly_ppm(
    a: &Assembly,
    palette: &Palette,
    scale: usize,
) -> Result<Vec<u8>, RenderError> {
    render_pattern_ppm(&assembly_pattern(a)?, palette, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_palette_is_complete_and_distinct() {
        let p = Palette::default();
        assert_eq!(p.len(), 29);
        let mut rgbs: Vec<[u8; 3]> = Vec::new();
        let mut tokens: Vec<String> = Vec::new();
        for name in [
            "Black", "White", "el-Black", "el-White", "RAB", "RAW", "UAB", "UAW", "CarryBlue",
        ] {
            let e = p.get(ColorId::new(name)).expect(name);
            rgbs.push(e.rgb);
            tokens.push(e.token.clone());
        }
        rgbs.sort_unstable();
        rgbs.dedup();
        assert_eq!(rgbs.len(), 9);
        tokens.sort();
        tokens.dedup();
        assert_eq!(tokens.len(), 9);
    }

    #[test]
    fn single_cell_ascii() {
        let p = Pattern::filled(1, 1, ColorId::new("Black")).unwrap();
        let s = render_pattern_ascii(&p, &Palette::default()).unwrap();
        assert_eq!(s, "B\n");
    }

    #[test]
    fn checkerboard_ppm_has_two_pixel_values() {
        let b = ColorId::new("Black");
        let w = ColorId::new("White");
        let p = Pattern::new(2, 2, vec![b, w, w, b]).unwrap();
        let bytes = render_pattern_ppm(&p, &Palette::default(), 1).unwrap();
        let header = b"P6\n2 2\n255\n";
        assert!(bytes.starts_with(header));
        let pixels = &bytes[header.len()..];
        assert_eq!(pixels.len(), 12);
        // Top row first: (1,2)=White, (2,2)=Black.
        assert_eq!(&pixels[0..3], &[255, 255, 255]);
        assert_eq!(&pixels[3..6], &[0, 0, 0]);
        assert_eq!(&pixels[6..9], &[0, 0, 0]);
        assert_eq!(&pixels[9..12], &[255, 255, 255]);
    }

    #[test]
    fn scaling_multiplies_pixels() {
        let p = Pattern::filled(2, 1, ColorId::new("Black")).unwrap();
        let bytes = render_pattern_ppm(&p, &Palette::default(), 3).unwrap();
        assert!(bytes.starts_with(b"P6\n6 3\n255\n"));
        assert!(render_pattern_ppm(&p, &Palette::default(), 0).is_err());
    }

    #[test]
    fn unknown_color_is_reported_by_name() {
        let p = Pattern::filled(1, 1, ColorId::new("NoSuchColor")).unwrap();
        match render_pattern_ascii(&p, &Palette::default()) {
            Err(RenderError::UnknownColor(name)) => assert_eq!(name, "NoSuchColor"),
            other => panic!("expected unknown color, got {other:?}"),
        }
    }

    #[test]
    fn palette_overrides() {
        let mut p = Palette::default();
        p.apply_overrides("# comment\nBlack=1,2,3,K\nNew=9,9,9\n")
            .unwrap();
        assert_eq!(p.get(ColorId::new("Black")).unwrap().rgb, [1, 2, 3]);
        assert_eq!(p.get(ColorId::new("Black")).unwrap().token, "K");
        assert_eq!(p.get(ColorId::new("New")).unwrap().token, "New");
        assert!(p.apply_overrides("Bad=1,2\n").is_err());
        assert!(p.apply_overrides("Bad\n").is_err());
        assert!(p.apply_overrides("Bad=1,2,300\n").is_err());
    }
}
