use num_complex::Complex64;

use crate::error::Result;
use crate::moebius::GenCircle;
use crate::orbit::{LimitSetApprox, OrbitSet};
use crate::quadgroup::QuadGroupData;
use crate::render::{Layer, LayerItems, Scene, Style, Viewport};

pub const FIGURE_SIZE_PX: u32 = 1024;

fn style(stroke: &str, width: f64) -> Style {
    Style { stroke: stroke.into(), stroke_width: width, fill: None, point_radius: 0.0 }
}

/// Square view around the origin holding every mirror.
pub fn figure_viewport(d: &QuadGroupData) -> Result<Viewport> {
    let extent = d
        .circles
        .iter()
        .filter_map(|c| c.center_radius())
        .map(|(c, r)| c.norm() + r)
        .fold(1.0, f64::max);
    Viewport::new(Complex64::new(0.0, 0.0), 1.1 * extent, FIGURE_SIZE_PX)
}

/// Mirrors, limit-set points, and for non-Fuchsian data C and C′.
pub fn figure_a(d: &QuadGroupData, ls: &LimitSetApprox) -> Result<Scene> {
    let mut layers = vec![
        Layer { id: "mirrors".into(), items: LayerItems::Circles(d.circles.to_vec()), style: style("#808080", 1.0) },
        Layer {
            id: "limit-set".into(),
            items: LayerItems::Points(ls.points.clone()),
            style: Style { stroke: "none".into(), stroke_width: 0.0, fill: Some("#000000".into()), point_radius: 0.75 },
        },
    ];
    if !d.is_fuchsian() {
        layers.push(circle_layer("exotic-circle", d.exotic_circle()?, "#c00000"));
        layers.push(circle_layer("limit-circle", d.limit_circle()?, "#0040c0"));
    }
    Ok(Scene { layers, viewport: figure_viewport(d)? })
}

/// One layer per orbit depth, then C′.
pub fn figure_b(d: &QuadGroupData, orbit: &OrbitSet) -> Result<Scene> {
    let max = orbit.items.iter().map(|i| i.depth).max().unwrap_or(0);
    let mut layers: Vec<Layer> = (0..=max)
        .map(|k| Layer {
            id: format!("orbit-depth-{k}"),
            items: LayerItems::Circles(orbit.at_depth(k).map(|i| i.circle).collect()),
            style: style("#c00000", 0.5),
        })
        .collect();
    layers.push(circle_layer("limit-circle", d.limit_circle()?, "#0040c0"));
    Ok(Scene { layers, viewport: figure_viewport(d)? })
}

fn circle_layer(id: &str, c: GenCircle, stroke: &str) -> Layer {
    Layer { id: id.into(), items: LayerItems::Circles(vec![c]), style: style(stroke, 1.5) }
}

/// `fig.svg` becomes `fig_a.svg` and `fig_b.svg`.
pub fn figure_paths(stem: &std::path::Path) -> (std::path::PathBuf, std::path::PathBuf) {
    let base = stem.with_extension("");
    let name = base.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "figure".into());
    (base.with_file_name(format!("{name}_a.svg")), base.with_file_name(format!("{name}_b.svg")))
}

