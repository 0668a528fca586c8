//! The hyperboloid model in E^{3,1}.
//!
//! Model identification used throughout the crate. A vector
//! `x = (x0, x1, x2, x3)` corresponds to the Hermitian circle data
//!
//! ```text
//! A = x0 − x3,   B = −(x1 + i·x2),   D = x0 + x3
//! ```
//!
//! under which `|B|² − AD = ⟨x, x⟩`, so the inversive product of two circles
//! equals the Minkowski product of their normals. A point `z` of the
//! Riemann sphere corresponds to the null ray through `(1, X)`, where `X` is
//! the inverse stereographic image of `z` (infinity at the north pole). The
//! geodesic plane `V₊ ∩ e^⊥` has as boundary the circle cut out of the
//! sphere by the affine plane `(e1, e2, e3) · X = e0`. The hyperplane
//! `x1 = 0` corresponds to the imaginary axis `Re z = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::{ComplexPoint, GenCircle};

pub const UNIT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzVec {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalType {
    Timelike,
    Lightlike,
    Spacelike,
}

impl LorentzVec {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        LorentzVec { x0, x1, x2, x3 }
    }

    pub fn from_array(x: [f64; 4]) -> Self {
        LorentzVec::new(x[0], x[1], x[2], x[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn scale(self, k: f64) -> Self {
        LorentzVec::new(k * self.x0, k * self.x1, k * self.x2, k * self.x3)
    }

    pub fn sub(self, o: LorentzVec) -> Self {
        LorentzVec::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }

    pub fn norm_sq(self) -> f64 {
        minkowski_inner(self, self)
    }

    pub fn causal_type(self, tol: f64) -> CausalType {
        let q = self.norm_sq();
        if q.abs() <= tol {
            CausalType::Lightlike
        } else if q < 0.0 {
            CausalType::Timelike
        } else {
            CausalType::Spacelike
        }
    }
}

/// `⟨x, y⟩ = −x0·y0 + x1·y1 + x2·y2 + x3·y3`.
pub fn minkowski_inner(x: LorentzVec, y: LorentzVec) -> f64 {
    -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3
}

/// Unit spacelike normal of a geodesic plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneNormal(LorentzVec);

impl PlaneNormal {
    pub fn new(e: LorentzVec) -> Result<Self> {
        let q = e.norm_sq();
        if (q - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnitSpacelike(q));
        }
        Ok(PlaneNormal(e))
    }

    /// Rescales a spacelike vector to unit length.
    pub fn normalize(e: LorentzVec) -> Result<Self> {
        let q = e.norm_sq();
        if !(q > 0.0) {
            return Err(Error::NotUnitSpacelike(q));
        }
        Ok(PlaneNormal(e.scale(1.0 / q.sqrt())))
    }

    pub fn vector(&self) -> LorentzVec {
        self.0
    }

    /// Representative of ±e with x0 ≥ 0, ties broken by the first nonzero
    /// coordinate being positive.
    pub fn canonical(&self) -> Self {
        let x = self.0.to_array();
        let first = x.iter().find(|v| **v != 0.0).copied().unwrap_or(0.0);
        if x[0] < 0.0 || (x[0] == 0.0 && first < 0.0) {
            PlaneNormal(self.0.scale(-1.0))
        } else {
            *self
        }
    }
}

/// `x − 2⟨x, e⟩e`.
pub fn reflect(e: &PlaneNormal, x: LorentzVec) -> LorentzVec {
    let k = 2.0 * minkowski_inner(x, e.0);
    x.sub(e.0.scale(k))
}

pub fn normal_to_circle(e: &PlaneNormal) -> GenCircle {
    GenCircle::from_lorentz(e.0.to_array()).expect("unit spacelike normal has positive discriminant")
}

pub fn circle_to_normal(c: &GenCircle) -> PlaneNormal {
    PlaneNormal(LorentzVec::from_array(c.to_lorentz())).canonical()
}

/// Null vector `(1, X)` over a boundary point.
pub fn boundary_point(z: ComplexPoint) -> LorentzVec {
    LorentzVec::from_array(z.to_lorentz())
}

/// Boundary point of a future- or past-pointing null vector.
pub fn null_to_point(x: LorentzVec) -> ComplexPoint {
    let s = 1.0 / x.x0;
    ComplexPoint::from_sphere([x.x1 * s, x.x2 * s, x.x3 * s])
}
