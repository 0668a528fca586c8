//! The hyperboloid-model computation of the tangency parameter `t₀` for the
//! deformed lunchbox polyhedron `Q̃(t)`.
//!
//! `t` is the cosh of the distance between the two pushed faces; all of the
//! face data below is expressed through `u = √((t+1)/2)` (the cosh of half of
//! that distance) and the auxiliary offset `v(u)`. The plane `P̃(t)` is
//! orthogonal to Faces 2, 4, 7, 8 and tangent at infinity to the limit plane
//! `P̃'`; demanding that its normal also be a unit vector pins down `t₀`,
//! the unique real root of `72t³ − 28t² + 200t − 325`.
//!
//! Every long formula is evaluated two ways (direct transcription and a
//! Horner or refactored form) and the two are compared in the tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lorentz::{minkowski_inner, normal_to_circle, LorentzVec, PlaneNormal};
use crate::poly::{Poly, RootBracket};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Right end of the deformation interval, `(5 + √39)/3`.
pub fn t_max() -> f64 {
    (5.0 + 39f64.sqrt()) / 3.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LunchboxParams {
    pub t: f64,
    /// `u = √((t+1)/2)`.
    pub cosh_half: f64,
    /// `v = (3u + √((u²+2)(16u²−3)))/(8u²−2)`, the x1-offset of Faces 2, 4.
    pub face_offset: f64,
}

impl LunchboxParams {
    pub fn new(t: f64) -> Result<Self> {
        if !(t > 1.0 && t < t_max()) {
            return Err(Error::OutsideRegime(format!("t = {t} not in (1, (5+√39)/3)")));
        }
        let u = ((t + 1.0) / 2.0).sqrt();
        let u2 = u * u;
        let v = (3.0 * u + ((u2 + 2.0) * (16.0 * u2 - 3.0)).sqrt()) / (8.0 * u2 - 2.0);
        Ok(LunchboxParams { t, cosh_half: u, face_offset: v })
    }

    /// `4u² + 4v² − 3 − 4u²v²`; nonnegative, with a double zero at `t = 2`.
    pub fn radicand(&self) -> f64 {
        let (u2, v2) = (self.cosh_half.powi(2), self.face_offset.powi(2));
        4.0 * u2 + 4.0 * v2 - 3.0 - 4.0 * u2 * v2
    }

    fn sqrt_radicand(&self) -> Result<f64> {
        let r = self.radicand();
        if r < -1e-14 {
            return Err(Error::OutsideRegime(format!("radicand 4u²+4v²−3−4u²v² = {r} < 0")));
        }
        Ok(r.max(0.0).sqrt())
    }
}

/// Unit normals of Faces 2, 4, 7 and 8.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FaceNormals {
    pub n2: LorentzVec,
    pub n4: LorentzVec,
    pub n7: LorentzVec,
    pub n8: LorentzVec,
}

impl FaceNormals {
    pub fn all(&self) -> [LorentzVec; 4] {
        [self.n2, self.n4, self.n7, self.n8]
    }
}

pub fn face_normals(p: &LunchboxParams) -> Result<FaceNormals> {
    let u = p.cosh_half;
    let v = p.face_offset;
    let root = p.sqrt_radicand()?;
    let den = 2.0 * u * u - 2.0;
    let x0 = (u - root) / den;
    let x3 = (-1.0 + u * root) / den;
    let s = (u * u + 2.0).sqrt();
    let y0 = (u * u * SQRT3 - s) / den;
    let y3 = (u * s - u * SQRT3) / den;
    Ok(FaceNormals {
        n2: LorentzVec::new(x0, v, 0.0, x3),
        n4: LorentzVec::new(x0, -v, 0.0, x3),
        n7: LorentzVec::new(y0, -SQRT3 / 2.0, SQRT3 / 2.0, y3),
        n8: LorentzVec::new(y0, SQRT3 / 2.0, SQRT3 / 2.0, y3),
    })
}

/// Unit normal of the limit plane `P̃'`: `(1, 0, 0, −u)/√(u²−1)`.
pub fn pprime_normal(p: &LunchboxParams) -> LorentzVec {
    let u = p.cosh_half;
    let w = (u * u - 1.0).sqrt();
    LorentzVec::new(1.0 / w, 0.0, 0.0, -u / w)
}

/// Normal of `P̃(t)` normalized by tangency to `P̃'`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlaneNormalSolution {
    pub x0: f64,
    pub x2: f64,
    pub x3: f64,
    /// `−x0/√(u²−1) − x3·u/√(u²−1) − 1`
    pub tangency_residual: f64,
    /// `−x0² + x2² + x3² − 1`; zero exactly at `t₀`.
    pub unit_residual: f64,
}

impl PlaneNormalSolution {
    pub fn vector(&self) -> LorentzVec {
        LorentzVec::new(self.x0, 0.0, self.x2, self.x3)
    }

    pub fn orthogonality(&self, normals: &FaceNormals) -> [f64; 4] {
        normals.all().map(|n| minkowski_inner(self.vector(), n))
    }
}

/// Closed-form solution of `⟨x, n2⟩ = ⟨x, n4⟩ = ⟨x, n7⟩ = ⟨x, n8⟩ = 0` with
/// `⟨x, P̃'⟩ = 1`.
///
/// The x2 component carries the sign forced by orthogonality to Faces 7
/// and 8 with their x2-components equal to `+√3/2`.
pub fn solve_plane_normal(p: &LunchboxParams) -> Result<PlaneNormalSolution> {
    if !(p.t > 1.0 && p.t < 2.0) {
        return Err(Error::OutsideRegime(format!("plane normal needs t in (1, 2), got {}", p.t)));
    }
    let u = p.cosh_half;
    let root = p.sqrt_radicand()?;
    // the elimination divides by −1 + u√(radicand), which is negative on (1, 2)
    let pivot = -1.0 + u * root;
    if pivot.abs() < 1e-12 {
        return Err(Error::OutsideRegime(format!("pivot −1 + u√radicand = {pivot} vanishes")));
    }
    let w = (u * u - 1.0).sqrt();
    let s = (u * u + 2.0).sqrt();
    let x0 = (1.0 - u * root) / w;
    let x2 = (s - u * SQRT3 * root) / (SQRT3 * w);
    let x3 = (root - u) / w;
    Ok(PlaneNormalSolution {
        x0,
        x2,
        x3,
        tangency_residual: -x0 / w - x3 * u / w - 1.0,
        unit_residual: -x0 * x0 + x2 * x2 + x3 * x3 - 1.0,
    })
}

const H_COEFFS: [f64; 6] = [-625.0, -2330.0, -3237.0, 916.0, 20.0, 72.0];
const CUBIC_COEFFS: [f64; 4] = [-325.0, 200.0, -28.0, 72.0];

/// Quintic cofactor `−625 − 2330t − 3237t² + 916t³ + 20t⁴ + 72t⁵`.
pub fn h_poly(t: f64) -> f64 {
    Poly::new(&H_COEFFS).eval(t)
}

/// `h''(t) = −6474 + 5496t + 240t² + 1440t³`.
pub fn h_poly_second_derivative(t: f64) -> f64 {
    -6474.0 + t * (5496.0 + t * (240.0 + t * 1440.0))
}

/// `−325 + 200t − 28t² + 72t³`.
pub fn cubic(t: f64) -> f64 {
    Poly::new(&CUBIC_COEFFS).eval(t)
}

pub fn cubic_poly() -> Poly {
    Poly::new(&CUBIC_COEFFS)
}

pub fn h_polynomial() -> Poly {
    Poly::new(&H_COEFFS)
}

fn f_poly(u: f64) -> f64 {
    let x = u * u;
    -625.0 + x * (11153.0 + x * (-53284.0 + x * (65632.0 + x * (-38720.0 + x * (22144.0 + x * -9216.0)))))
}

fn g_poly(u: f64) -> f64 {
    let x = u * u;
    u * (900.0 + x * (-7092.0 + x * (9072.0 + x * (-4032.0 + x * 1152.0))))
}

/// Which sign of the `29u²` term in `16u⁴ ± 29u² − 6` reproduces the
/// factored form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignVariant {
    Plus,
    Minus,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FactorIdentityReport {
    pub t: f64,
    /// `9A² + (u²+2)² + 6A(u²+2) − 12u²(u²+2)A`, `A` the face radicand.
    pub squared_form: f64,
    /// Squared form vs `(u²−1)/(4u²−1)⁴ · (f + g√(16u⁴+29u²−6))`.
    pub chain_residual: f64,
    /// `f² − g²(16u⁴+29u²−6)` vs the factored u-form.
    pub plus_residual: f64,
    /// `f² − g²(16u⁴−29u²−6)` vs the factored u-form.
    pub minus_residual: f64,
    /// Factored u-form vs `¼(1+2t)⁴ · cubic(t) · h(t)`.
    pub t_form_residual: f64,
    pub matching: SignVariant,
}

impl FactorIdentityReport {
    /// Worst relative residual along the chain using the matching variant.
    pub fn residual(&self) -> f64 {
        let variant = match self.matching {
            SignVariant::Plus | SignVariant::Both => self.plus_residual,
            SignVariant::Minus => self.minus_residual,
            SignVariant::Neither => self.plus_residual.min(self.minus_residual),
        };
        self.chain_residual.max(variant).max(self.t_form_residual)
    }
}

/// Relative tolerance used to decide which sign variant matches.
pub const FACTOR_TOL: f64 = 1e-9;

fn abs_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x.abs() + c.abs())
}

/// Evaluates both sides of each step of the polynomial elimination.
///
/// Residuals are relative to the magnitude of the terms being combined, so
/// they stay meaningful near `t₀` where the identities evaluate to zero.
pub fn factor_identity_check(t: f64) -> Result<FactorIdentityReport> {
    let p = LunchboxParams::new(t)?;
    let u = p.cosh_half;
    let u2 = u * u;
    let a = p.radicand();
    let w = u2 + 2.0;

    let terms = [9.0 * a * a, w * w, 6.0 * a * w, -12.0 * u2 * w * a];
    let squared_form: f64 = terms.iter().sum();
    let squared_scale: f64 = terms.iter().map(|x| x.abs()).sum();

    let (f, g) = (f_poly(u), g_poly(u));
    let q_plus = 16.0 * u2 * u2 + 29.0 * u2 - 6.0;
    let q_minus = 16.0 * u2 * u2 - 29.0 * u2 - 6.0;
    let prefactor = (u2 - 1.0) / (4.0 * u2 - 1.0).powi(4);
    let chain = prefactor * (f + g * q_plus.sqrt());
    let chain_scale = squared_scale.max(prefactor.abs() * (f.abs() + (g * q_plus.sqrt()).abs()));
    let chain_residual = (squared_form - chain).abs() / chain_scale;

    const U_SEXTIC: [f64; 4] = [-625.0, 944.0, -976.0, 576.0];
    const U_DECIC: [f64; 6] = [-625.0, 3586.0, -6585.0, 3112.0, -1360.0, 576.0];
    let lead = (4.0 * u2 - 1.0).powi(4);
    let u_form = lead * Poly::new(&U_SEXTIC).eval(u2) * Poly::new(&U_DECIC).eval(u2);
    let u_scale = lead * abs_poly(&U_SEXTIC, u2) * abs_poly(&U_DECIC, u2);

    let variant = |q: f64| {
        let lhs = f * f - g * g * q;
        let scale = (f * f).max((g * g * q).abs()).max(u_scale);
        (lhs - u_form).abs() / scale
    };
    let plus_residual = variant(q_plus);
    let minus_residual = variant(q_minus);

    let t_form = 0.25 * (1.0 + 2.0 * t).powi(4) * cubic(t) * h_poly(t);
    let t_scale = 0.25 * (1.0 + 2.0 * t).powi(4) * abs_poly(&CUBIC_COEFFS, t) * abs_poly(&H_COEFFS, t);
    let t_form_residual = (u_form - t_form).abs() / u_scale.max(t_scale);

    let matching = match (plus_residual < FACTOR_TOL, minus_residual < FACTOR_TOL) {
        (true, true) => SignVariant::Both,
        (true, false) => SignVariant::Plus,
        (false, true) => SignVariant::Minus,
        (false, false) => SignVariant::Neither,
    };
    Ok(FactorIdentityReport {
        t,
        squared_form,
        chain_residual,
        plus_residual,
        minus_residual,
        t_form_residual,
        matching,
    })
}

/// Certified root of the cubic in `(1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootCertificate {
    pub root: f64,
    pub bracket: RootBracket,
    /// Distinct real roots of the cubic in `(1, 2]` by Sturm count.
    pub sturm_count: usize,
    /// The derivative `216t² − 56t + 200` has negative discriminant, so the
    /// cubic is strictly increasing on all of R.
    pub strictly_increasing: bool,
}

pub fn find_t0() -> RootCertificate {
    let p = cubic_poly();
    let bracket = p
        .bisect_root(1.0, 2.0, 1e-14)
        .expect("cubic(1) = −81 < 0 < 539 = cubic(2)");
    let dp = p.derivative();
    let [c, b, a] = [dp.coeffs()[0], dp.coeffs()[1], dp.coeffs()[2]];
    RootCertificate {
        root: bracket.root,
        bracket,
        sturm_count: p.count_roots(1.0, 2.0),
        strictly_increasing: a > 0.0 && b * b - 4.0 * a * c < 0.0,
    }
}

/// Cardano's formula for the cubic's real root.
pub fn closed_form_t0() -> f64 {
    let r = 25515.0 * 773f64.sqrt();
    (7.0 - ((r - 654761.0) / 2.0).cbrt() + ((r + 654761.0) / 2.0).cbrt()) / 54.0
}

pub const RESIDUAL_TOL: f64 = 1e-9;
pub const TANGENCY_CIRCLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangencyReport {
    pub t: f64,
    pub unit_residual: f64,
    pub orthogonality: [f64; 4],
    /// `⟨x, P̃'⟩`, expected ±1.
    pub tangency_inner: f64,
    pub tangency_residual: f64,
    /// Inversive distance of the two boundary circles, expected 1.
    pub boundary_inversive_distance: f64,
    pub h_value: f64,
    pub unit_ok: bool,
    pub orthogonality_ok: bool,
    pub tangency_ok: bool,
    pub boundary_tangency_ok: bool,
    pub h_negative: bool,
}

impl TangencyReport {
    pub fn passed(&self) -> bool {
        self.unit_ok && self.orthogonality_ok && self.tangency_ok && self.boundary_tangency_ok && self.h_negative
    }
}

/// Residual suite for the plane `P̃(t)` at a candidate tangency parameter.
pub fn verify_exotic_tangency(t: f64) -> Result<TangencyReport> {
    let p = LunchboxParams::new(t)?;
    let normals = face_normals(&p)?;
    let sol = solve_plane_normal(&p)?;
    let x = sol.vector();
    let limit = pprime_normal(&p);
    let orthogonality = sol.orthogonality(&normals);
    let tangency_inner = minkowski_inner(x, limit);

    let limit_circle = normal_to_circle(&PlaneNormal::normalize(limit)?);
    let plane_circle = normal_to_circle(&PlaneNormal::normalize(x)?);
    let boundary_inversive_distance = plane_circle.inversive_distance(&limit_circle);
    let h_value = h_poly(t);

    Ok(TangencyReport {
        t,
        unit_residual: sol.unit_residual,
        orthogonality,
        tangency_inner,
        tangency_residual: sol.tangency_residual,
        boundary_inversive_distance,
        h_value,
        unit_ok: sol.unit_residual.abs() < RESIDUAL_TOL,
        orthogonality_ok: orthogonality.iter().all(|r| r.abs() < RESIDUAL_TOL),
        tangency_ok: (tangency_inner.abs() - 1.0).abs() < RESIDUAL_TOL,
        boundary_tangency_ok: (boundary_inversive_distance - 1.0).abs() < TANGENCY_CIRCLE_TOL,
        h_negative: h_value < 0.0,
    })
}
