//! Reflection groups of circular quadrilaterals with all angles `π/n`.
//!
//! `R` is the region containing the origin bounded by four circles: `C1`,
//! `C3` centered at `±1` with radius `r13`, and `C2`, `C4` centered at `±bi`
//! with radius `r24`. Taking `s = inversive_distance(C1, C3)` and
//! `t = inversive_distance(C2, C4)` gives
//!
//! ```text
//! r13² = 2/(s+1),   r24 = b·k,   k² = 2/(t+1)
//! ```
//!
//! and the corner condition (angle `π/n` between `C1` and `C2` inside `R`)
//! is the quadratic
//!
//! ```text
//! (1 − k²) b² − 2 r13 k cos(π/n) b + (1 − r13²) = 0
//! ```
//!
//! whose discriminant is `4(4cos²(π/n) − (s−1)(t−1)) / ((s+1)(t+1))`. The
//! datum is realizable exactly when the defect is nonnegative, and Fuchsian
//! (all four circles orthogonal to `|z|² = 1 − r13²`) exactly when it is zero.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::{circle_distance, circle_through, ComplexPoint, GenCircle, MoebiusMap};

/// Residual tolerance for the three defining constraints.
pub const CONSTRAINT_TOL: f64 = 1e-10;
/// Defects at or below this are treated as the Fuchsian boundary.
pub const FUCHSIAN_TOL: f64 = 1e-12;
/// Smallest relative perturbation of `C′` that binary64 still resolves.
pub const DYNAMIC_FLOOR: f64 = 1e-15;
/// Word length used for the `⟨τ1, τ3⟩`-orbit of `p`.
pub const DEFAULT_ISOLATION_DEPTH: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadGroupData {
    pub schema: u32,
    pub n: u32,
    pub s: f64,
    pub t: f64,
    pub r13: f64,
    pub r24: f64,
    pub b: f64,
    /// `C1, C2, C3, C4` in cyclic order.
    pub circles: [GenCircle; 4],
    pub reflections: [MoebiusMap; 4],
    /// `τ3 ∘ τ1`.
    pub xi: MoebiusMap,
    /// `τ4 ∘ τ2`: reflect across `C2`, then across `C4`.
    pub eta: MoebiusMap,
    /// Repelling fixed point of `eta`.
    pub p: ComplexPoint,
    pub p_prime: ComplexPoint,
    pub q: ComplexPoint,
    pub q_prime: ComplexPoint,
    exotic: Option<GenCircle>,
    limit: Option<GenCircle>,
}

/// `4cos²(π/n) − (s−1)(t−1)`.
pub fn defect(n: u32, s: f64, t: f64) -> f64 {
    let c = (PI / n as f64).cos();
    4.0 * c * c - (s - 1.0) * (t - 1.0)
}

pub fn fuchsian_defect(d: &QuadGroupData) -> f64 {
    defect(d.n, d.s, d.t)
}

/// `(r13, k, b)` from the closed forms, smaller root of the corner quadratic.
fn geometry(n: u32, s: f64, t: f64) -> Result<(f64, f64, f64)> {
    let c = (PI / n as f64).cos();
    let r = (2.0 / (s + 1.0)).sqrt();
    let k = (2.0 / (t + 1.0)).sqrt();
    let def = defect(n, s, t);
    if def < -FUCHSIAN_TOL {
        return Err(Error::NotDiscrete { defect: def });
    }
    // reduced discriminant written through the defect to avoid cancellation;
    // the root is a double root on the boundary, where rounding in the
    // defect would otherwise enter through its square root
    let disc = if def <= FUCHSIAN_TOL { 0.0 } else { def / ((s + 1.0) * (t + 1.0)) };
    let b = (1.0 - r * r) / (r * k * c + disc.sqrt());
    Ok((r, k, b))
}

pub fn solve_quadrilateral(n: u32, s: f64, t: f64) -> Result<QuadGroupData> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cone order n = {n} < 3")));
    }
    if !(s > 1.0 && t > 1.0 && s.is_finite() && t.is_finite()) {
        return Err(Error::InvalidParameters(format!("need s, t > 1, got s = {s}, t = {t}")));
    }
    let (r, k, b) = geometry(n, s, t)?;
    let rho = b * k;
    let c1 = GenCircle::from_center_radius(Complex64::new(1.0, 0.0), r)?;
    let c2 = GenCircle::from_center_radius(Complex64::new(0.0, b), rho)?;
    let c3 = GenCircle::from_center_radius(Complex64::new(-1.0, 0.0), r)?;
    let c4 = GenCircle::from_center_radius(Complex64::new(0.0, -b), rho)?;
    let circles = [c1, c2, c3, c4];

    let cos = (PI / n as f64).cos();
    let residual = [
        c1.inversive_product(&c2) + cos,
        c2.inversive_product(&c3) + cos,
        c1.inversive_distance(&c3) - s,
        c2.inversive_distance(&c4) - t,
    ]
    .iter()
    .fold(0.0f64, |m, x| m.max(x.abs()));
    if !(residual <= CONSTRAINT_TOL) {
        return Err(Error::SolverDiverged { iterations: 1, residual });
    }

    let reflections = circles.map(|c| c.inversion());
    let [tau1, tau2, tau3, tau4] = reflections;
    let xi = tau3.compose(&tau1);
    let eta = tau4.compose(&tau2);

    // common symmetric pair of C2, C4 and of C1, C3
    let p_abs = b * (1.0 - k * k).sqrt();
    let q_abs = (1.0 - r * r).sqrt();
    let (_, repelling) = eta.fixed_points()?;
    let sign = match repelling.finite() {
        Some(z) if z.im < 0.0 => -1.0,
        _ => 1.0,
    };
    let p = ComplexPoint::new(0.0, sign * p_abs);
    let p_prime = ComplexPoint::new(0.0, -sign * p_abs);
    let q = ComplexPoint::new(q_abs, 0.0);
    let q_prime = ComplexPoint::new(-q_abs, 0.0);

    let (exotic, limit) = if defect(n, s, t) <= FUCHSIAN_TOL {
        (None, None)
    } else {
        let exotic = circle_through(q, q_prime, p)?;
        let limit = GenCircle::from_center_radius(Complex64::new(0.0, 0.0), p_abs)?;
        (Some(exotic), Some(limit))
    };

    Ok(QuadGroupData {
        schema: 1,
        n,
        s,
        t,
        r13: r,
        r24: rho,
        b,
        circles,
        reflections,
        xi,
        eta,
        p,
        p_prime,
        q,
        q_prime,
        exotic,
        limit,
    })
}

/// One named invariant with its residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub residual: f64,
    pub passed: bool,
}

impl QuadGroupData {
    pub fn is_fuchsian(&self) -> bool {
        self.exotic.is_none()
    }

    /// The circle through `q`, `q′` and `p`.
    pub fn exotic_circle(&self) -> Result<GenCircle> {
        self.exotic.ok_or(Error::FuchsianDegenerate)
    }

    /// Limit of `η̃ᵏ·C`: the circle through `p`, `p′` tangent to `C` at `p`.
    pub fn limit_circle(&self) -> Result<GenCircle> {
        self.limit.ok_or(Error::FuchsianDegenerate)
    }

    /// The circle `|z|² = 1 − r13²` orthogonal to `C1` and `C3`; orthogonal
    /// to all four mirrors exactly in the Fuchsian case.
    pub fn common_orthogonal(&self) -> GenCircle {
        GenCircle::from_center_radius(Complex64::new(0.0, 0.0), (1.0 - self.r13 * self.r13).sqrt())
            .expect("r13 < 1")
    }

    /// Largest inversive product between a mirror and the common orthogonal circle.
    pub fn orthogonality_defect(&self) -> f64 {
        let o = self.common_orthogonal();
        self.circles.iter().map(|c| c.inversive_product(&o).abs()).fold(0.0, f64::max)
    }

    pub fn invariants(&self) -> Vec<InvariantCheck> {
        let cos = (PI / self.n as f64).cos();
        let [c1, c2, c3, c4] = self.circles;
        let mirror_y = MoebiusMap::conjugation();
        // z ↦ −z̄
        let mirror_x = MoebiusMap::new(
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            crate::moebius::Orientation::Antiholomorphic,
        )
        .expect("nonsingular");
        let tl_eta = self.eta.translation_length().unwrap_or(f64::NAN);
        let tl_xi = self.xi.translation_length().unwrap_or(f64::NAN);
        let im = |z: ComplexPoint| z.finite().map_or(f64::INFINITY, |w| w.im.abs());
        let re = |z: ComplexPoint| z.finite().map_or(f64::INFINITY, |w| w.re.abs());
        let hyperbolic = |m: &MoebiusMap| if m.classify() == crate::moebius::Classification::Hyperbolic { 0.0 } else { 1.0 };
        let rows: Vec<(&'static str, f64, f64)> = vec![
            ("c1_c3_symmetric_in_imaginary_axis", c1.apply(&mirror_x).max_norm_distance(&c3), 1e-12),
            ("c2_c4_symmetric_in_real_axis", c2.apply(&mirror_y).max_norm_distance(&c4), 1e-12),
            ("corner_c1_c2", c1.inversive_distance(&c2) - cos, 1e-9),
            ("corner_c2_c3", c2.inversive_distance(&c3) - cos, 1e-9),
            ("corner_c3_c4", c3.inversive_distance(&c4) - cos, 1e-9),
            ("corner_c4_c1", c4.inversive_distance(&c1) - cos, 1e-9),
            ("inversive_distance_c1_c3", c1.inversive_distance(&c3) - self.s, 1e-9),
            ("inversive_distance_c2_c4", c2.inversive_distance(&c4) - self.t, 1e-9),
            ("p_on_imaginary_axis", re(self.p).max(re(self.p_prime)), 1e-12),
            ("q_on_real_axis", im(self.q).max(im(self.q_prime)), 1e-12),
            ("eta_fixes_p", self.eta.apply_point(self.p).chordal_distance(&self.p), 1e-9),
            ("xi_fixes_q", self.xi.apply_point(self.q).chordal_distance(&self.q), 1e-9),
            ("eta_hyperbolic", hyperbolic(&self.eta), 0.5),
            ("xi_hyperbolic", hyperbolic(&self.xi), 0.5),
            ("eta_translation_length", tl_eta - 2.0 * self.t.acosh(), 1e-9),
            ("xi_translation_length", tl_xi - 2.0 * self.s.acosh(), 1e-9),
        ];
        rows.into_iter()
            .map(|(name, r, tol)| InvariantCheck { name, residual: r.abs(), passed: r.abs() <= tol })
            .collect()
    }

    /// `circle_distance(η̃ᵏ·C, C′)` for `k = 1..=k_max`.
    ///
    /// Powers of `η̃` amplify rounding by `λ^{2k}`, so the iterates are formed
    /// in the coordinate `w = (z − p′)/(z − p)`, where `η̃` is `w ↦ μw` and
    /// `C` is a line.
    pub fn accumulation_distances(&self, k_max: usize) -> Result<Vec<(usize, f64)>> {
        let exotic = self.exotic_circle()?;
        let limit = self.limit_circle()?;
        let mu = self.contraction();
        if (k_max as f64) * mu.ln() < DYNAMIC_FLOOR.ln() {
            return Err(Error::DynamicRange(format!(
                "μ^{k_max} = {:e} is below the resolvable relative perturbation {DYNAMIC_FLOOR:e}",
                mu.powi(k_max as i32)
            )));
        }
        let (p, pp) = (self.p.finite().expect("finite"), self.p_prime.finite().expect("finite"));
        let one = Complex64::new(1.0, 0.0);
        let phi = MoebiusMap::holomorphic(one, -pp, one, -p)?;
        let phi_inv = phi.inverse();
        let line = exotic.apply(&phi);
        let (bl, dl) = (line.b(), line.d());
        let mut out = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let image = GenCircle::new(0.0, bl, mu.powi(k as i32) * dl)?.apply(&phi_inv);
            out.push((k, circle_distance(&image, &limit)));
        }
        Ok(out)
    }

    /// Multiplier of `η̃` at its attracting fixed point, `λ⁻²`.
    pub fn contraction(&self) -> f64 {
        self.eta.multiplier_at(self.p_prime).re
    }

    /// Chordal distance from `p` to the nearest other point of the
    /// depth-bounded `⟨τ1, τ3⟩`-orbit of `p` together with `q, q′`.
    pub fn isolation_radius(&self, depth: usize) -> f64 {
        let [tau1, _, tau3, _] = self.reflections;
        let mut best = self.p.chordal_distance(&self.q).min(self.p.chordal_distance(&self.q_prime));
        for first in [tau1, tau3] {
            let mut z = self.p;
            let mut next = first;
            for _ in 0..depth {
                z = next.apply_point(z);
                let d = self.p.chordal_distance(&z);
                if d > 1e-12 {
                    best = best.min(d);
                }
                next = if next == tau1 { tau3 } else { tau1 };
            }
        }
        best
    }

    pub fn verify_accumulation(&self, k_max: usize, tol: f64) -> Result<AccumulationReport> {
        self.verify_accumulation_with_depth(k_max, tol, DEFAULT_ISOLATION_DEPTH)
    }

    pub fn verify_accumulation_with_depth(&self, k_max: usize, tol: f64, depth: usize) -> Result<AccumulationReport> {
        if k_max < 3 {
            return Err(Error::InvalidParameters(format!("k_max = {k_max} < 3")));
        }
        let distances = self.accumulation_distances(k_max)?;
        let predicted_ratio = self.contraction();
        let probe = distances.len().min(10);
        let ratio_at_probe = distances[probe].1 / distances[probe - 1].1;
        let last = distances.last().map(|x| x.1).unwrap_or(f64::INFINITY);
        Ok(AccumulationReport {
            converged: last < tol,
            strictly_decreasing_from_2: distances.windows(2).skip(1).all(|w| w[1].1 < w[0].1),
            all_positive: distances.iter().all(|x| x.1 > 0.0),
            predicted_ratio,
            ratio_probe_k: probe,
            ratio_at_probe,
            ratio_relative_error: (ratio_at_probe / predicted_ratio - 1.0).abs(),
            isolation_radius: self.isolation_radius(depth),
            isolation_depth: depth,
            tol,
            distances,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AccumulationReport {
    pub distances: Vec<(usize, f64)>,
    pub converged: bool,
    pub tol: f64,
    pub strictly_decreasing_from_2: bool,
    pub all_positive: bool,
    /// `λ⁻²`, the multiplier of `η̃` at `p′`.
    pub predicted_ratio: f64,
    pub ratio_probe_k: usize,
    /// `d(k+1)/d(k)` at `k = ratio_probe_k`.
    pub ratio_at_probe: f64,
    pub ratio_relative_error: f64,
    pub isolation_radius: f64,
    pub isolation_depth: usize,
}
