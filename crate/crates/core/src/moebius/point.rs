use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point of the Riemann sphere: a finite complex number or the single point
/// at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "PointRepr", into = "PointRepr")]
pub enum ComplexPoint {
    Finite(Complex64),
    Infinity,
}

impl ComplexPoint {
    pub const ZERO: ComplexPoint = ComplexPoint::Finite(Complex64::new(0.0, 0.0));
    pub const ONE: ComplexPoint = ComplexPoint::Finite(Complex64::new(1.0, 0.0));
    pub const I: ComplexPoint = ComplexPoint::Finite(Complex64::new(0.0, 1.0));

    pub fn new(re: f64, im: f64) -> Self {
        Self::from_complex(Complex64::new(re, im))
    }

    /// Non-finite input collapses to the canonical point at infinity.
    pub fn from_complex(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            ComplexPoint::Finite(z)
        } else {
            ComplexPoint::Infinity
        }
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ComplexPoint::Finite(z) => Some(*z),
            ComplexPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ComplexPoint::Infinity)
    }

    pub fn conj(&self) -> Self {
        match self {
            ComplexPoint::Finite(z) => ComplexPoint::Finite(z.conj()),
            ComplexPoint::Infinity => ComplexPoint::Infinity,
        }
    }

    /// Inverse stereographic projection onto the unit sphere, with infinity
    /// at the north pole (0, 0, 1).
    pub fn to_sphere(&self) -> [f64; 3] {
        match self {
            ComplexPoint::Infinity => [0.0, 0.0, 1.0],
            ComplexPoint::Finite(z) => {
                let r2 = z.norm_sqr();
                if !r2.is_finite() {
                    return [0.0, 0.0, 1.0];
                }
                let s = 1.0 + r2;
                [2.0 * z.re / s, 2.0 * z.im / s, (r2 - 1.0) / s]
            }
        }
    }

    /// Stereographic projection from the north pole.
    pub fn from_sphere(x: [f64; 3]) -> Self {
        let norm = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        let (x1, x2, x3) = (x[0] / norm, x[1] / norm, x[2] / norm);
        if x3 <= 0.0 {
            Self::from_complex(Complex64::new(x1, x2) / (1.0 - x3))
        } else {
            // (x1 + i x2)/(1 - x3) = (1 + x3)/(x1 - i x2) on the sphere
            let w = Complex64::new(x1, -x2);
            if w.norm_sqr() == 0.0 {
                ComplexPoint::Infinity
            } else {
                Self::from_complex(Complex64::new(1.0 + x3, 0.0) / w)
            }
        }
    }

    /// Euclidean distance between the sphere images; at most 2.
    pub fn chordal_distance(&self, other: &ComplexPoint) -> f64 {
        let d = match (self, other) {
            (ComplexPoint::Infinity, ComplexPoint::Infinity) => 0.0,
            (ComplexPoint::Finite(z), ComplexPoint::Infinity)
            | (ComplexPoint::Infinity, ComplexPoint::Finite(z)) => {
                2.0 / (1.0 + z.norm_sqr()).sqrt()
            }
            (ComplexPoint::Finite(z), ComplexPoint::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        };
        d.min(2.0)
    }

    /// Null vector (1, X) of E^{3,1} over the sphere point X.
    pub fn to_lorentz(&self) -> [f64; 4] {
        let x = self.to_sphere();
        [1.0, x[0], x[1], x[2]]
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Finite { re: f64, im: f64 },
    Infinite { infinity: bool },
}

impl From<PointRepr> for ComplexPoint {
    fn from(r: PointRepr) -> Self {
        match r {
            PointRepr::Finite { re, im } => ComplexPoint::new(re, im),
            PointRepr::Infinite { .. } => ComplexPoint::Infinity,
        }
    }
}

impl From<ComplexPoint> for PointRepr {
    fn from(p: ComplexPoint) -> Self {
        match p {
            ComplexPoint::Finite(z) => PointRepr::Finite { re: z.re, im: z.im },
            ComplexPoint::Infinity => PointRepr::Infinite { infinity: true },
        }
    }
}
