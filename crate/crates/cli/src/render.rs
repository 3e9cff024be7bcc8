//! Deterministic SVG rendering of the rank-2 tilings.
//!
//! All geometry stays exact until this module: alcove vertices arrive as
//! rational simple-coroot coordinates and are embedded into Cartesian
//! floats only at emission, with a fixed 6-decimal format so identical
//! scenes produce identical bytes. Ã1 has no 2-D tiling and is drawn as a
//! strip of boxes.

use std::fmt::Write as _;

use alcove_core::exact::{Rat, RatPoint};
use alcove_core::gallery::{alcove_sequence, Gallery};
use alcove_core::root_data::AffineType;
use alcove_core::{Element, GroupContext, Hyperplane};

/// One drawing layer, painted in order on top of the background tiling.
#[derive(Clone, Debug)]
pub enum Layer {
    /// Fill a set of alcoves with one color.
    Fill { elements: Vec<Element>, color: String },
    /// Stroke one wall across the view.
    Wall { hyperplane: Hyperplane, color: String },
    /// Draw a gallery as a path through barycenters and panel midpoints,
    /// with an arrowhead on the end alcove.
    GalleryPath { gallery: Gallery, color: String },
}

/// A picture: background tiling radius plus overlay layers.
#[derive(Clone, Debug)]
pub struct Scene {
    /// Background alcoves: everything within this many length rings.
    pub radius: usize,
    pub layers: Vec<Layer>,
    /// Draw each background alcove's reduced word at its barycenter.
    pub labels: bool,
}

impl Scene {
    pub fn tiling(radius: usize) -> Scene {
        Scene { radius, layers: Vec::new(), labels: false }
    }
}

const SCALE: f64 = 60.0;
const DEFAULT_ANNEX_FILL: &str = "#f5d76e";

/// Default overlay colors follow the figures: yellow annex fill, grey
/// galleries.
pub fn annex_fill_color() -> String {
    DEFAULT_ANNEX_FILL.to_string()
}

fn rat_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Cartesian embedding of the simple-coroot basis.
fn basis(ty: AffineType) -> [[f64; 2]; 2] {
    let sqrt2 = 2f64.sqrt();
    let e1 = [sqrt2, 0.0];
    let h = match ty {
        AffineType::A2 => (1.5f64).sqrt(),
        AffineType::C2 => 1.0 / sqrt2,
        AffineType::G2 => 1.0 / (6f64).sqrt(),
        AffineType::A1 => 0.0,
    };
    let e2 = [-1.0 / sqrt2, h];
    [e1, e2]
}

fn embed(ty: AffineType, p: &RatPoint) -> (f64, f64) {
    let b = basis(ty);
    let x = rat_f64(p[0]);
    let y = rat_f64(p[1]);
    // SVG y grows downward.
    (
        SCALE * (x * b[0][0] + y * b[1][0]),
        -SCALE * (x * b[0][1] + y * b[1][1]),
    )
}

fn fmt_coord(v: f64) -> String {
    // Normalize negative zero so identical scenes are byte-identical.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

fn polygon_points(ctx: &GroupContext, w: &Element) -> Vec<(f64, f64)> {
    let ty = ctx.affine_type();
    if ty == AffineType::A1 {
        // Strip mode: the alcove is a segment; draw a box of height 1/2.
        let a = embed(ty, &w.apply(&ctx.alcove_vertices()[0]));
        let b = embed(ty, &w.apply(&ctx.alcove_vertices()[1]));
        let (lo, hi) = if a.0 <= b.0 { (a.0, b.0) } else { (b.0, a.0) };
        let h = SCALE * 0.5;
        return vec![(lo, 0.0), (hi, 0.0), (hi, h), (lo, h)];
    }
    ctx.alcove_vertices()
        .iter()
        .map(|v| embed(ty, &w.apply(v)))
        .collect()
}

fn points_attr(points: &[(f64, f64)]) -> String {
    let mut out = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", fmt_coord(*x), fmt_coord(*y));
    }
    out
}

fn barycenter_xy(ctx: &GroupContext, w: &Element) -> (f64, f64) {
    let ty = ctx.affine_type();
    if ty == AffineType::A1 {
        let pts = polygon_points(ctx, w);
        let cx = (pts[0].0 + pts[1].0) / 2.0;
        return (cx, SCALE * 0.25);
    }
    embed(ty, &ctx.alcove_barycenter(w))
}

/// Midpoint of the type-`i` panel of alcove `w`: the average of the alcove
/// vertices other than the one opposite that panel.
fn panel_midpoint(ctx: &GroupContext, w: &Element, i: u8) -> (f64, f64) {
    let ty = ctx.affine_type();
    let vertices = ctx.alcove_vertices();
    let picked: Vec<RatPoint> = vertices
        .iter()
        .enumerate()
        .filter(|(idx, _)| *idx != i as usize)
        .map(|(_, v)| w.apply(v))
        .collect();
    if ty == AffineType::A1 {
        let p = embed(ty, &picked[0]);
        return (p.0, SCALE * 0.25);
    }
    let sum = picked
        .iter()
        .fold([Rat::new(0, 1), Rat::new(0, 1)], |acc, p| [acc[0] + p[0], acc[1] + p[1]]);
    let n = picked.len() as i64;
    embed(ty, &[sum[0] / Rat::from_integer(n), sum[1] / Rat::from_integer(n)])
}

/// Render a scene as an SVG 1.1 document. Identical input yields identical
/// bytes.
pub fn render_svg(ctx: &GroupContext, scene: &Scene) -> String {
    let mut background: Vec<Element> = ctx.elements_up_to(scene.radius);
    background.sort();

    // View box from the background geometry.
    let mut min_x = f64::MAX;
    let mut min_y = f64::MAX;
    let mut max_x = f64::MIN;
    let mut max_y = f64::MIN;
    for w in &background {
        for (x, y) in polygon_points(ctx, w) {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
    }
    let margin = SCALE * 0.25;
    let (vx, vy) = (min_x - margin, min_y - margin);
    let (vw, vh) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        fmt_coord(vx),
        fmt_coord(vy),
        fmt_coord(vw),
        fmt_coord(vh)
    );
    let _ = writeln!(
        svg,
        r#"<defs><marker id="arrow" viewBox="0 0 8 8" refX="6" refY="4" markerWidth="5" markerHeight="5" orient="auto-start-reverse"><path d="M 0 0 L 8 4 L 0 8 z"/></marker></defs>"#
    );

    let _ = writeln!(svg, r##"<g class="tiling" fill="white" stroke="#999999" stroke-width="0.8">"##);
    for w in &background {
        let _ = writeln!(svg, r#"<polygon points="{}"/>"#, points_attr(&polygon_points(ctx, w)));
    }
    let _ = writeln!(svg, "</g>");

    for (idx, layer) in scene.layers.iter().enumerate() {
        match layer {
            Layer::Fill { elements, color } => {
                let mut sorted = elements.clone();
                sorted.sort();
                sorted.dedup();
                let _ = writeln!(
                    svg,
                    r##"<g class="fill-{idx}" fill="{color}" stroke="#777777" stroke-width="0.8">"##
                );
                for w in &sorted {
                    let _ = writeln!(
                        svg,
                        r#"<polygon class="alcove-fill" points="{}"/>"#,
                        points_attr(&polygon_points(ctx, w))
                    );
                }
                let _ = writeln!(svg, "</g>");
            }
            Layer::Wall { hyperplane, color } => {
                let (a, b) = wall_segment(ctx, hyperplane, scene.radius);
                let _ = writeln!(
                    svg,
                    r#"<line class="wall" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="1.6"/>"#,
                    fmt_coord(a.0),
                    fmt_coord(a.1),
                    fmt_coord(b.0),
                    fmt_coord(b.1)
                );
            }
            Layer::GalleryPath { gallery, color } => {
                let seq = alcove_sequence(ctx, gallery);
                let mut pts = vec![barycenter_xy(ctx, &seq[0])];
                for (t, step) in gallery.steps.iter().enumerate() {
                    pts.push(panel_midpoint(ctx, &seq[t], step.panel_type));
                    pts.push(barycenter_xy(ctx, &seq[t + 1]));
                }
                let _ = writeln!(
                    svg,
                    r#"<polyline class="gallery" points="{}" fill="none" stroke="{color}" stroke-width="2.4" marker-end="url(#arrow)"/>"#,
                    points_attr(&pts)
                );
            }
        }
    }

    if scene.labels {
        let _ = writeln!(svg, r##"<g class="labels" font-size="9" text-anchor="middle" fill="#333333">"##);
        for w in &background {
            let (x, y) = barycenter_xy(ctx, w);
            let word = ctx.word_string(w);
            let text = if word.is_empty() { "e" } else { &word };
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{}">{}</text>"#,
                fmt_coord(x),
                fmt_coord(y),
                text
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    let _ = writeln!(svg, "</svg>");
    svg
}

/// A segment of the wall long enough to cross the whole view.
fn wall_segment(ctx: &GroupContext, h: &Hyperplane, radius: usize) -> ((f64, f64), (f64, f64)) {
    let rs = ctx.root_system();
    let ty = ctx.affine_type();
    // Base point: (k/2)·γ∨ lies on H_{γ,k} since (γ∨,γ) = 2.
    let coroot = rs.coroot(&h.direction);
    let base: RatPoint = [
        Rat::new(h.level * coroot[0], 2),
        Rat::new(h.level * coroot[1], 2),
    ];
    // Direction: (u, γ) = 0 where (u, γ) = u · (P c).
    let c = h.direction.coords;
    let p = rs.cartan().0;
    let pc = [p[0][0] * c[0] + p[0][1] * c[1], p[1][0] * c[0] + p[1][1] * c[1]];
    let u: RatPoint = [Rat::from_integer(-pc[1]), Rat::from_integer(pc[0])];
    let t = Rat::from_integer(radius as i64 + 2);
    let p1: RatPoint = [base[0] + t * u[0], base[1] + t * u[1]];
    let p2: RatPoint = [base[0] - t * u[0], base[1] - t * u[1]];
    (embed(ty, &p1), embed(ty, &p2))
}
