//! Deterministic SVG output for circle sets and point clouds.
//!
//! Numbers are written with 9 significant digits by a fixed routine, so the
//! same scene always produces the same bytes.

use std::fmt::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moebius::{ComplexPoint, GenCircle};

/// Items with pixel radius below this are dropped.
pub const SUBPIXEL_RADIUS: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub center: Complex64,
    pub half_width: f64,
    pub size_px: u32,
}

impl Viewport {
    pub fn new(center: Complex64, half_width: f64, size_px: u32) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidScene(format!("half-width {half_width} must be positive")));
        }
        if size_px < 16 {
            return Err(Error::InvalidScene(format!("size {size_px}px is below 16")));
        }
        Ok(Viewport { center, half_width, size_px })
    }

    fn scale(&self) -> f64 {
        self.size_px as f64 / (2.0 * self.half_width)
    }

    /// Plane point to pixel coordinates, y pointing down.
    pub fn to_pixel(&self, z: Complex64) -> (f64, f64) {
        let h = self.size_px as f64 / 2.0;
        ((z.re - self.center.re) * self.scale() + h, h - (z.im - self.center.im) * self.scale())
    }

    pub fn from_pixel(&self, x: f64, y: f64) -> Complex64 {
        let h = self.size_px as f64 / 2.0;
        Complex64::new((x - h) / self.scale() + self.center.re, (h - y) / self.scale() + self.center.im)
    }

    pub fn to_pixel_length(&self, r: f64) -> f64 {
        r * self.scale()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Style {
    pub stroke: String,
    pub stroke_width: f64,
    pub fill: Option<String>,
    /// Pixel radius of point markers.
    pub point_radius: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { stroke: "#000000".into(), stroke_width: 1.0, fill: None, point_radius: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LayerItems {
    Circles(Vec<GenCircle>),
    Points(Vec<ComplexPoint>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub id: String,
    pub items: LayerItems,
    pub style: Style,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub layers: Vec<Layer>,
    pub viewport: Viewport,
}

/// Per-layer bookkeeping written into the SVG as a comment.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LayerCounts {
    pub emitted: usize,
    pub subpixel: usize,
    /// Lines missing the viewport, and points at infinity.
    pub offscreen: usize,
}

/// `x` with 9 significant digits, no exponent, trailing zeros trimmed.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            out.push_str(&digits);
            for _ in digits.len()..int_len {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

/// Liang–Barsky clip of the line `z0 + s·dir` to the pixel square.
fn clip_line(vp: &Viewport, c: &GenCircle) -> Option<((f64, f64), (f64, f64))> {
    let b = c.b();
    // B̄z + Bz̄ + D = 0: normal B, offset −D/2
    let z0 = -b * (c.d() / (2.0 * b.norm_sqr()));
    let dir = b * Complex64::new(0.0, 1.0) / b.norm();
    let p0 = vp.to_pixel(z0);
    let p1 = vp.to_pixel(z0 + dir);
    let (dx, dy) = (p1.0 - p0.0, p1.1 - p0.1);
    let size = vp.size_px as f64;
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, q) in [(-dx, p0.0), (dx, size - p0.0), (-dy, p0.1), (dy, size - p0.1)] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                lo = lo.max(r);
            } else {
                hi = hi.min(r);
            }
        }
    }
    if lo >= hi {
        return None;
    }
    Some(((p0.0 + lo * dx, p0.1 + lo * dy), (p0.0 + hi * dx, p0.1 + hi * dy)))
}

fn style_attrs(s: &Style) -> String {
    format!(
        "stroke=\"{}\" stroke-width=\"{}\" fill=\"{}\"",
        s.stroke,
        fmt_num(s.stroke_width),
        s.fill.as_deref().unwrap_or("none")
    )
}

/// Renders the scene and returns the document with per-layer counts.
pub fn render_svg_with_counts(scene: &Scene) -> (String, Vec<LayerCounts>) {
    let vp = &scene.viewport;
    let size = vp.size_px;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(
        out,
        "<!-- viewport center {} {} half-width {} -->",
        fmt_num(vp.center.re),
        fmt_num(vp.center.im),
        fmt_num(vp.half_width)
    );
    let _ = writeln!(out, "<clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"{size}\" height=\"{size}\"/></clipPath>");
    let mut counts = Vec::new();
    if scene.layers.iter().all(|l| match &l.items {
        LayerItems::Circles(c) => c.is_empty(),
        LayerItems::Points(p) => p.is_empty(),
    }) {
        let _ = writeln!(out, "<!-- warning: empty scene -->");
    }
    for layer in &scene.layers {
        let mut body = String::new();
        let mut n = LayerCounts::default();
        match &layer.items {
            LayerItems::Circles(circles) => {
                for c in circles {
                    match c.center_radius() {
                        Some((center, r)) => {
                            let rp = vp.to_pixel_length(r);
                            if rp < SUBPIXEL_RADIUS {
                                n.subpixel += 1;
                                continue;
                            }
                            let (x, y) = vp.to_pixel(center);
                            let _ = writeln!(body, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", fmt_num(x), fmt_num(y), fmt_num(rp));
                            n.emitted += 1;
                        }
                        None => match clip_line(vp, c) {
                            Some(((x1, y1), (x2, y2))) => {
                                let _ = writeln!(
                                    body,
                                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                                    fmt_num(x1),
                                    fmt_num(y1),
                                    fmt_num(x2),
                                    fmt_num(y2)
                                );
                                n.emitted += 1;
                            }
                            None => n.offscreen += 1,
                        },
                    }
                }
            }
            LayerItems::Points(points) => {
                let r = fmt_num(layer.style.point_radius);
                for p in points {
                    match p.finite() {
                        Some(z) => {
                            let (x, y) = vp.to_pixel(z);
                            let _ = writeln!(body, "<circle cx=\"{}\" cy=\"{}\" r=\"{r}\"/>", fmt_num(x), fmt_num(y));
                            n.emitted += 1;
                        }
                        None => n.offscreen += 1,
                    }
                }
            }
        }
        let _ = writeln!(
            out,
            "<g id=\"{}\" clip-path=\"url(#view)\" {}>",
            layer.id,
            style_attrs(&layer.style)
        );
        let _ = writeln!(
            out,
            "<!-- layer {}: emitted {}, dropped sub-pixel {}, dropped offscreen {} -->",
            layer.id, n.emitted, n.subpixel, n.offscreen
        );
        out.push_str(&body);
        let _ = writeln!(out, "</g>");
        counts.push(n);
    }
    let _ = writeln!(out, "</svg>");
    (out, counts)
}

pub fn render_svg(scene: &Scene) -> String {
    render_svg_with_counts(scene).0
}
