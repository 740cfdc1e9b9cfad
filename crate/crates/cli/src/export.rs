//! OBJ and SVG writers for scenes.

use std::fmt::Write;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum View {
    Xy,
    Xz,
    Yz,
}

impl View {
    /// Kept axes, then the discarded one.
    fn axes(self) -> (usize, usize, usize) {
        match self {
            View::Xy => (0, 1, 2),
            View::Xz => (0, 2, 1),
            View::Yz => (1, 2, 0),
        }
    }
}

/// Wavefront OBJ with one group per polygon, fan-triangulated from its first corner.
///
/// Segments become `l` lines and points become `p` elements.
pub fn to_obj(polys: &[(String, Vec<[f64; 3]>)]) -> String {
    let mut out = String::new();
    let mut base = 1;
    for (label, corners) in polys {
        let _ = writeln!(out, "g {}", label.replace(char::is_whitespace, "_"));
        for c in corners {
            let _ = writeln!(out, "v {:.16e} {:.16e} {:.16e}", c[0], c[1], c[2]);
        }
        match corners.len() {
            1 => {
                let _ = writeln!(out, "p {base}");
            }
            2 => {
                let _ = writeln!(out, "l {} {}", base, base + 1);
            }
            k => {
                for i in 1..k - 1 {
                    let _ = writeln!(out, "f {} {} {}", base, base + i, base + i + 1);
                }
            }
        }
        base += corners.len();
    }
    out
}

/// Orthographic projection along the discarded axis, seen from its negative side: polygons are
/// painted in descending order of their mean discarded coordinate.
pub fn to_svg(polys: &[(String, Vec<[f64; 3]>)], view: View) -> String {
    let (a, b, d) = view.axes();
    let all: Vec<&[f64; 3]> = polys.iter().flat_map(|(_, c)| c).collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &all {
        for (k, axis) in [a, b].into_iter().enumerate() {
            lo[k] = lo[k].min(p[axis]);
            hi[k] = hi[k].max(p[axis]);
        }
    }
    if all.is_empty() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let size = 600.0;
    let margin = 20.0;
    let scale = (size - 2.0 * margin) / span;
    // SVG's y axis points down.
    let map = |p: &[f64; 3]| (margin + (p[a] - lo[0]) * scale, size - margin - (p[b] - lo[1]) * scale);

    let mut order: Vec<usize> = (0..polys.len()).collect();
    let depth = |i: usize| {
        let c = &polys[i].1;
        c.iter().map(|p| p[d]).sum::<f64>() / c.len().max(1) as f64
    };
    order.sort_by(|&i, &j| depth(j).total_cmp(&depth(i)));

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#);
    for i in order {
        let (label, corners) = &polys[i];
        let hue = (i * 137) % 360;
        let pts: Vec<(f64, f64)> = corners.iter().map(map).collect();
        let list = pts.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "  <g><title>{}</title>", escape(label));
        match pts.len() {
            0 => {}
            1 => {
                let _ = writeln!(out, r#"    <circle cx="{:.3}" cy="{:.3}" r="3" fill="hsl({hue},70%,45%)"/>"#, pts[0].0, pts[0].1);
            }
            2 => {
                let _ = writeln!(out, r#"    <polyline points="{list}" stroke="hsl({hue},70%,45%)" stroke-width="2" fill="none"/>"#);
            }
            _ => {
                let _ = writeln!(
                    out,
                    r#"    <polygon points="{list}" fill="hsl({hue},70%,60%)" fill-opacity="0.6" stroke="black" stroke-width="0.5"/>"#
                );
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
