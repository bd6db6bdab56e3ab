use std::fmt::Write;

use crate::cells::{CellColor, CellColoring};

const CELL: usize = 56;
const MARGIN: usize = 40;
const GAP: usize = 48;
const DOT: usize = 5;

fn fill(c: CellColor) -> &'static str {
    match c {
        CellColor::Blue => "#4d4dff",
        CellColor::Green => "#33cc33",
        CellColor::Yellow => "#ffff66",
        CellColor::Orange => "#ff8000",
        CellColor::Red => "#e03131",
        CellColor::Pink => "#ff99cc",
        CellColor::Maroon => "#993333",
        CellColor::White => "#ffffff",
    }
}

/// Draws one block per z-layer, left to right. Rows are partition classes,
/// columns are `y`; `D`-vertices appear as dots labeled with their `x` index.
/// White cells have a dashed outline. Indices are 0-based.
pub fn render_svg(c: &CellColoring) -> String {
    let (k, ny, nz) = c.dims();
    let p = c.product();
    let block_w = ny * CELL;
    let width = 2 * MARGIN + nz * block_w + nz.saturating_sub(1) * GAP;
    let height = 2 * MARGIN + k * CELL + 20;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"##
    );
    for z in 0..nz {
        let left = MARGIN + z * (block_w + GAP);
        let _ = writeln!(
            s,
            r##"  <g class="layer" data-z="{z}">"#);
        let _ = writeln!(
            s,
            r##"    <text x="{}" y="{}" text-anchor="middle">z = {z}</text>"##,
            left + block_w / 2,
            MARGIN - 14
        );
        for i in 0..k {
            for y in 0..ny {
                let color = c.color_unchecked(i, y, z);
                let (cx, cy) = (left + y * CELL, MARGIN + i * CELL);
                let dash = if color == CellColor::White {
                    r##" stroke-dasharray="5,3""##
                } else {
                    ""
                };
                let _ = writeln!(
                    s,
                    r##"    <rect class="cell" data-i="{i}" data-y="{y}" data-z="{z}" data-color="{}" x="{cx}" y="{cy}" width="{CELL}" height="{CELL}" fill="{}" stroke="#222"{dash}/>"##,
                    color.name(),
                    fill(color)
                );
                let members: Vec<usize> = c.partition().cells()[i]
                    .iter()
                    .filter(|&a| c.dset().contains(p.flat_unchecked(a, y, z)))
                    .collect();
                let step = CELL / (members.len() + 1);
                for (j, a) in members.into_iter().enumerate() {
                    let dx = cx + step * (j + 1);
                    let dy = cy + CELL / 2;
                    let _ = writeln!(
                        s,
                        r##"    <circle class="dvertex" cx="{dx}" cy="{dy}" r="{DOT}" fill="#000" stroke="#fff"><title>({a}, {y}, {z})</title></circle>"##
                    );
                    let _ = writeln!(
                        s,
                        r##"    <text x="{dx}" y="{}" text-anchor="middle" font-size="9">{a}</text>"##,
                        dy + DOT + 10
                    );
                }
            }
        }
        for y in 0..ny {
            let _ = writeln!(
                s,
                r##"    <text x="{}" y="{}" text-anchor="middle">y{y}</text>"##,
                left + y * CELL + CELL / 2,
                MARGIN + k * CELL + 14
            );
        }
        let _ = writeln!(s, "  </g>");
    }
    for i in 0..k {
        let _ = writeln!(
            s,
            r##"  <text x="{}" y="{}" text-anchor="end">{i}</text>"##,
            MARGIN - 6,
            MARGIN + i * CELL + CELL / 2 + 4
        );
    }
    s.push_str("</svg>\n");
    s
}
