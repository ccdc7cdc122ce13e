//! Deterministic SVG 1.1 rendering. Coordinates become floats only here.

use std::fmt::Write;

use num_traits::ToPrimitive;

use polyclique::constructions::InstanceScene;
use polyclique::geom::Point;

const CANVAS: f64 = 800.0;

/// Label, points, and whether the outline is closed.
type Shape = (String, Vec<(f64, f64)>, bool);

fn items(scene: &InstanceScene) -> Vec<Shape> {
    let f = |p: &Point| (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0));
    match scene {
        InstanceScene::Polygons(s) => s
            .polygons()
            .iter()
            .map(|(l, p)| (l.clone(), p.vertices().iter().map(f).collect(), true))
            .collect(),
        InstanceScene::Segments(s) => s
            .segments()
            .iter()
            .map(|(l, seg)| (l.clone(), vec![f(seg.start()), f(seg.end())], false))
            .collect(),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Items are drawn as outlined paths in scene order; those in `highlight`
/// are shaded.
pub fn render(scene: &InstanceScene, highlight: &[usize]) -> String {
    let shapes = items(scene);
    let all = shapes.iter().flat_map(|(_, pts, _)| pts.iter());
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in all {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = 0.05 * span;
    let scale = CANVAS / (span + 2.0 * margin);
    let width = (x1 - x0 + 2.0 * margin) * scale;
    let height = (y1 - y0 + 2.0 * margin) * scale;
    let px = |x: f64| (x - x0 + margin) * scale;
    let py = |y: f64| (y1 + margin - y) * scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.4}\" height=\"{height:.4}\" viewBox=\"0 0 {width:.4} {height:.4}\">"
    );
    for (i, (label, pts, closed)) in shapes.iter().enumerate() {
        let mut d = String::new();
        for (j, &(x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.4},{:.4} ", if j == 0 { 'M' } else { 'L' }, px(x), py(y));
        }
        if *closed {
            d.push('Z');
        }
        let d = d.trim_end();
        let lit = highlight.contains(&i);
        let style = match (lit, closed) {
            (true, true) => "fill=\"#f4a261\" fill-opacity=\"0.6\" stroke=\"#9c4221\" stroke-width=\"1.5\"",
            (true, false) => "fill=\"none\" stroke=\"#e76f51\" stroke-width=\"4\"",
            (false, _) => "fill=\"none\" stroke=\"#1d3557\" stroke-width=\"1\"",
        };
        let class = if lit { " class=\"highlight\"" } else { "" };
        let _ = writeln!(out, "  <path{class} d=\"{d}\" {style}><title>{}</title></path>", escape(label));
    }
    out.push_str("</svg>\n");
    out
}
