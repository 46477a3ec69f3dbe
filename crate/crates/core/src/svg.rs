//! Static SVG rendering of unit-ball polygons.

use std::fmt::Write;

use crate::mapping_class::HomologyClass;
use crate::satellite::{BallKind, UnitBall};
use crate::scalar::Scalar;

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
/// Pixels from the origin to the farthest vertex.
const REACH: f64 = 150.0;

fn coords<T: Scalar>(v: &HomologyClass<T>) -> (f64, f64) {
    (v.x.to_f64().unwrap_or(0.0), v.y.to_f64().unwrap_or(0.0))
}

/// Renders the polygon with coordinate axes and a label at each vertex.
///
/// The drawing scale puts the farthest vertex at a fixed distance from the
/// center; the exact coordinates appear in the labels and in a `data-vertices`
/// attribute on the path.
pub fn unit_ball_svg<T: Scalar>(ball: &UnitBall<T>) -> String {
    let extent = ball
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = coords(v);
            x.abs().max(y.abs())
        })
        .fold(0.0f64, f64::max);
    let scale = if extent > 0.0 { REACH / extent } else { REACH };
    let to_px = |v: &HomologyClass<T>| {
        let (x, y) = coords(v);
        (CENTER + x * scale, CENTER - y * scale)
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let title = match ball.kind {
        BallKind::Exact => "unit ball",
        BallKind::OuterApproximation => "unit ball (outer approximation)",
    };
    let _ = writeln!(out, "  <title>{title}</title>");
    let _ = writeln!(
        out,
        r##"  <line x1="0" y1="{CENTER}" x2="{SIZE}" y2="{CENTER}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"  <line x1="{CENTER}" y1="0" x2="{CENTER}" y2="{SIZE}" stroke="#999" stroke-width="1"/>"##
    );

    let mut path = String::new();
    for (i, v) in ball.vertices.iter().enumerate() {
        let (px, py) = to_px(v);
        let _ = write!(path, "{}{px:.3} {py:.3} ", if i == 0 { "M" } else { "L" });
    }
    path.push('Z');
    let exact_list: Vec<String> = ball.vertices.iter().map(|v| format!("({},{})", v.x, v.y)).collect();
    let dash = match ball.kind {
        BallKind::Exact => "",
        BallKind::OuterApproximation => r#" stroke-dasharray="6 4""#,
    };
    let _ = writeln!(
        out,
        r##"  <path d="{path}" data-vertices="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#1f4e8c" stroke-width="2"{dash}/>"##,
        exact_list.join(" ")
    );

    for v in &ball.vertices {
        let (px, py) = to_px(v);
        let _ = writeln!(out, r##"  <circle cx="{px:.3}" cy="{py:.3}" r="3" fill="#1f4e8c"/>"##);
        // nudge labels away from the origin
        let (dx, dy) = ((px - CENTER).signum() * 8.0, (py - CENTER).signum() * 14.0);
        let anchor = if px > CENTER + 1.0 {
            "start"
        } else if px < CENTER - 1.0 {
            "end"
        } else {
            "middle"
        };
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="monospace" font-size="12" text-anchor="{anchor}">({}, {})</text>"#,
            px + dx,
            py + dy,
            v.x,
            v.y
        );
    }
    out.push_str("</svg>\n");
    out
}
