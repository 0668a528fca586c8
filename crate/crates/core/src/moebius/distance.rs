//! Chordal distances between points and circles on the unit sphere.

use super::{ComplexPoint, GenCircle, SphereCircle};

const SAMPLES: usize = 96;
const REFINE_STEPS: usize = 60;

fn sub(x: [f64; 3], y: [f64; 3]) -> [f64; 3] {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2]]
}

fn dot(x: [f64; 3], y: [f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn norm(x: [f64; 3]) -> f64 {
    dot(x, x).sqrt()
}

/// Euclidean distance in R³ from `x` to the circle `c` (as a curve).
fn distance_to_sphere_circle(x: [f64; 3], c: &SphereCircle) -> f64 {
    let o = [c.offset * c.normal[0], c.offset * c.normal[1], c.offset * c.normal[2]];
    let rel = sub(x, o);
    let along = dot(rel, c.normal);
    let radial = norm(sub(rel, [along * c.normal[0], along * c.normal[1], along * c.normal[2]]));
    (along * along + (radial - c.radius).powi(2)).sqrt()
}

/// Orthonormal pair spanning the plane orthogonal to `n`.
fn plane_basis(n: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let pick = if n[0].abs() <= n[1].abs() && n[0].abs() <= n[2].abs() {
        [1.0, 0.0, 0.0]
    } else if n[1].abs() <= n[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let k = dot(pick, n);
    let u = sub(pick, [k * n[0], k * n[1], k * n[2]]);
    let un = norm(u);
    let u = [u[0] / un, u[1] / un, u[2] / un];
    let v = [
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    ];
    (u, v)
}

fn point_on(c: &SphereCircle, u: [f64; 3], v: [f64; 3], theta: f64) -> [f64; 3] {
    let (s, co) = theta.sin_cos();
    let mut x = [0.0; 3];
    for i in 0..3 {
        x[i] = c.offset * c.normal[i] + c.radius * (co * u[i] + s * v[i]);
    }
    x
}

/// `sup_{x ∈ from} dist(x, to)` by dense sampling plus golden-section refinement.
fn directed_hausdorff(from: &SphereCircle, to: &SphereCircle) -> f64 {
    let (u, v) = plane_basis(from.normal);
    let f = |theta: f64| distance_to_sphere_circle(point_on(from, u, v, theta), to);
    let step = std::f64::consts::TAU / SAMPLES as f64;
    let values: Vec<f64> = (0..SAMPLES).map(|i| f(i as f64 * step)).collect();
    let mut best = values.iter().cloned().fold(0.0, f64::max);
    for i in 0..SAMPLES {
        let prev = values[(i + SAMPLES - 1) % SAMPLES];
        let next = values[(i + 1) % SAMPLES];
        if values[i] >= prev && values[i] >= next {
            best = best.max(golden_max(&f, (i as f64 - 1.0) * step, (i as f64 + 1.0) * step));
        }
    }
    best
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..REFINE_STEPS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

/// Chordal distance from a point to a generalized circle.
pub fn point_circle_distance(z: ComplexPoint, c: &GenCircle) -> f64 {
    distance_to_sphere_circle(z.to_sphere(), &c.sphere_circle())
}

/// Chordal Hausdorff distance between two generalized circles on the sphere.
pub fn circle_distance(c1: &GenCircle, c2: &GenCircle) -> f64 {
    if c1 == c2 {
        return 0.0;
    }
    let s1 = c1.sphere_circle();
    let s2 = c2.sphere_circle();
    directed_hausdorff(&s1, &s2).max(directed_hausdorff(&s2, &s1))
}
