//! Incidence diagram of the variety.
//!
//! The reducible line is drawn horizontally over the `s` window; each
//! irreducible line is a half-ellipse above it joining its two intersection
//! abscissas.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::modular::IrrComponent;
use crate::variety::VarietyDescription;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureSpec {
    pub width: u32,
    pub height: u32,
    pub s_min: f64,
    pub s_max: f64,
}

impl Default for FigureSpec {
    fn default() -> Self {
        FigureSpec {
            width: 800,
            height: 400,
            s_min: -2.2,
            s_max: 2.2,
        }
    }
}

const MARGIN: f64 = 40.0;
const LABEL_BAND: f64 = 70.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ArcGeometry {
    pub component: IrrComponent,
    /// Abscissas in `s` of the two endpoints, left to right.
    pub s_left: f64,
    pub s_right: f64,
    pub x_left: f64,
    pub x_right: f64,
    pub rx: f64,
    pub ry: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureLayout {
    pub baseline: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub arcs: Vec<ArcGeometry>,
    /// `(s, x)` of every intersection point, sorted by `s`.
    pub dots: Vec<(f64, f64)>,
}

pub fn layout(v: &VarietyDescription, f: &FigureSpec) -> Result<FigureLayout> {
    for rec in v.intersections() {
        if !(rec.s >= f.s_min && rec.s <= f.s_max) {
            return Err(Error::WindowTooSmall {
                s: rec.s,
                min: f.s_min,
                max: f.s_max,
            });
        }
    }
    let (x_min, x_max) = (MARGIN, f.width as f64 - MARGIN);
    let baseline = f.height as f64 - LABEL_BAND;
    let to_x = |s: f64| x_min + (s - f.s_min) / (f.s_max - f.s_min) * (x_max - x_min);

    let mut arcs: Vec<ArcGeometry> = v
        .irr_lines()
        .map(|line| {
            let s0 = line.intersections[0].s;
            let s1 = line.intersections[1].s;
            let (s_left, s_right) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
            let (x_left, x_right) = (to_x(s_left), to_x(s_right));
            let rx = (x_right - x_left) / 2.0;
            ArcGeometry {
                component: line.component,
                s_left,
                s_right,
                x_left,
                x_right,
                rx,
                ry: rx,
            }
        })
        .collect();
    // squash vertically when the widest arc would leave the canvas
    let room = baseline - MARGIN;
    let widest = arcs.iter().map(|a| a.rx).fold(0.0, f64::max);
    if widest > room {
        for a in &mut arcs {
            a.ry = a.rx * room / widest;
        }
    }

    let mut dots: Vec<(f64, f64)> = v.intersections().map(|r| (r.s, to_x(r.s))).collect();
    dots.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(FigureLayout {
        baseline,
        x_min,
        x_max,
        arcs,
        dots,
    })
}

/// SVG 1.1 document; identical inputs give byte-identical output.
pub fn emit_svg(v: &VarietyDescription, f: &FigureSpec) -> Result<String> {
    let lay = layout(v, f)?;
    let y = lay.baseline;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = f.width,
        h = f.height
    );
    let _ = writeln!(
        out,
        r#"  <title>Character variety of the ({}, {}) torus knot group</title>"#,
        v.kt.m(),
        v.kt.n()
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <line class="red" x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black" stroke-width="2"/>"#,
        lay.x_min, lay.x_max
    );
    let _ = writeln!(
        out,
        r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">X_red</text>"#,
        lay.x_max - 40.0,
        y - 8.0
    );
    for a in &lay.arcs {
        let _ = writeln!(
            out,
            r#"  <path class="irr" d="M {:.2} {y:.2} A {:.2} {:.2} 0 0 1 {:.2} {y:.2}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
            a.x_left, a.rx, a.ry, a.x_right
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            (a.x_left + a.x_right) / 2.0,
            y - a.ry - 4.0,
            a.component
        );
    }
    for &(s, x) in &lay.dots {
        let _ = writeln!(
            out,
            r#"  <circle class="node" cx="{x:.2}" cy="{y:.2}" r="4" fill="crimson"/>"#
        );
        let ty = y + 14.0;
        let _ = writeln!(
            out,
            r#"  <text x="{x:.2}" y="{ty:.2}" font-family="sans-serif" font-size="10" transform="rotate(45 {x:.2} {ty:.2})">{s:.3}</text>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::KnotType;
    use crate::variety::enumerate_variety;

    fn svg(m: i64, n: i64) -> String {
        let v = enumerate_variety(KnotType::new(m, n).unwrap()).unwrap();
        emit_svg(&v, &FigureSpec::default()).unwrap()
    }

    #[test]
    fn trefoil_figure() {
        let s = svg(2, 3);
        assert_eq!(s.matches("<path").count(), 1);
        assert_eq!(s.matches("<circle").count(), 2);
        assert!(s.contains(">(1,1)</text>"));
        assert!(s.contains(">1.732</text>"));
        assert!(s.contains(">-1.732</text>"));
    }

    #[test]
    fn five_three_figure() {
        let v = enumerate_variety(KnotType::new(3, 5).unwrap()).unwrap();
        let s = emit_svg(&v, &FigureSpec::default()).unwrap();
        assert_eq!(s.matches("<path").count(), 4);
        assert_eq!(s.matches("<circle").count(), 8);
        let lay = layout(&v, &FigureSpec::default()).unwrap();
        assert!(lay.dots.windows(2).all(|w| w[1].1 - w[0].1 > 1.0));
    }

    #[test]
    fn bare_line() {
        let s = svg(1, 3);
        assert_eq!(s.matches("<line").count(), 1);
        assert_eq!(s.matches("<path").count(), 0);
        assert_eq!(s.matches("<circle").count(), 0);
    }

    #[test]
    fn deterministic() {
        assert_eq!(svg(4, 7), svg(4, 7));
    }

    #[test]
    fn narrow_window_is_rejected() {
        let v = enumerate_variety(KnotType::new(2, 3).unwrap()).unwrap();
        let f = FigureSpec {
            s_min: -1.0,
            s_max: 1.0,
            ..Default::default()
        };
        assert!(matches!(
            emit_svg(&v, &f),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn arcs_stay_on_canvas() {
        let f = FigureSpec::default();
        let v = enumerate_variety(KnotType::new(7, 11).unwrap()).unwrap();
        let lay = layout(&v, &f).unwrap();
        for a in &lay.arcs {
            assert!(lay.baseline - a.ry >= MARGIN - 1e-9);
            assert!(a.x_left >= lay.x_min && a.x_right <= lay.x_max);
        }
    }
}
