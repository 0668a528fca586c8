use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ComplexPoint;
use crate::error::{Error, Result};

/// Default relative tolerance used when classifying by trace.
pub const CLASSIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "holo")]
    Holomorphic,
    #[serde(rename = "anti")]
    Antiholomorphic,
}

impl Orientation {
    pub fn compose(self, other: Orientation) -> Orientation {
        if self == other {
            Orientation::Holomorphic
        } else {
            Orientation::Antiholomorphic
        }
    }

    pub fn is_anti(self) -> bool {
        self == Orientation::Antiholomorphic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
    Loxodromic,
    /// Orientation-reversing maps have no trace classification.
    Antiholomorphic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Identity => "identity",
            Classification::Elliptic => "elliptic",
            Classification::Parabolic => "parabolic",
            Classification::Hyperbolic => "hyperbolic",
            Classification::Loxodromic => "loxodromic",
            Classification::Antiholomorphic => "antiholomorphic",
        };
        f.write_str(s)
    }
}

/// A Möbius or anti-Möbius map of the Riemann sphere.
///
/// The holomorphic map acts as `z ↦ (az + b)/(cz + d)`; the antiholomorphic
/// one conjugates its argument first. The matrix is kept normalized to
/// `ad − bc = 1`, which fixes it up to a global sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    orientation: Orientation,
}

impl MoebiusMap {
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        orientation: Orientation,
    ) -> Result<Self> {
        let det = a * d - b * c;
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if !(det.norm() > 0.0) || !det.re.is_finite() || !det.im.is_finite() || scale == 0.0 {
            return Err(Error::SingularMap);
        }
        // Relative singularity guard
        if det.norm() <= 1e-300 * scale * scale {
            return Err(Error::SingularMap);
        }
        Ok(Self::from_raw(a, b, c, d, orientation))
    }

    /// Normalizes without validation; the caller guarantees `ad − bc ≠ 0`.
    ///
    /// A determinant already equal to one within rounding is left alone, so
    /// normalizing is idempotent and serialization round-trips exactly.
    fn from_raw(a: Complex64, b: Complex64, c: Complex64, d: Complex64, orientation: Orientation) -> Self {
        let det = a * d - b * c;
        let rounding = 8.0 * f64::EPSILON * ((a * d).norm() + (b * c).norm());
        if (det - 1.0).norm() <= rounding {
            return MoebiusMap { a, b, c, d, orientation };
        }
        let s = det.sqrt();
        MoebiusMap { a: a / s, b: b / s, c: c / s, d: d / s, orientation }
    }

    pub fn holomorphic(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        Self::new(a, b, c, d, Orientation::Holomorphic)
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        MoebiusMap { a: one, b: zero, c: zero, d: one, orientation: Orientation::Holomorphic }
    }

    /// `z ↦ k z`.
    pub fn scaling(k: Complex64) -> Result<Self> {
        Self::holomorphic(k, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// `z ↦ z + w`.
    pub fn translation(w: Complex64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        MoebiusMap { a: one, b: w, c: Complex64::new(0.0, 0.0), d: one, orientation: Orientation::Holomorphic }
    }

    /// Complex conjugation `z ↦ z̄`.
    pub fn conjugation() -> Self {
        MoebiusMap { orientation: Orientation::Antiholomorphic, ..Self::identity() }
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_holomorphic(&self) -> bool {
        self.orientation == Orientation::Holomorphic
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn apply_point(&self, z: ComplexPoint) -> ComplexPoint {
        let z = if self.orientation.is_anti() { z.conj() } else { z };
        match z {
            ComplexPoint::Infinity => {
                if self.c.norm_sqr() == 0.0 {
                    ComplexPoint::Infinity
                } else {
                    ComplexPoint::from_complex(self.a / self.c)
                }
            }
            ComplexPoint::Finite(z) => {
                let num = self.a * z + self.b;
                let den = self.c * z + self.d;
                if den.norm_sqr() == 0.0 {
                    ComplexPoint::Infinity
                } else {
                    ComplexPoint::from_complex(num / den)
                }
            }
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let (p, q, r, s) = if self.orientation.is_anti() {
            (other.a.conj(), other.b.conj(), other.c.conj(), other.d.conj())
        } else {
            (other.a, other.b, other.c, other.d)
        };
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        Self::from_raw(
            a * p + b * r,
            a * q + b * s,
            c * p + d * r,
            c * q + d * s,
            self.orientation.compose(other.orientation),
        )
    }

    pub fn inverse(&self) -> MoebiusMap {
        let (a, b, c, d) = (self.d, -self.b, -self.c, self.a);
        if self.orientation.is_anti() {
            MoebiusMap { a: a.conj(), b: b.conj(), c: c.conj(), d: d.conj(), orientation: self.orientation }
        } else {
            MoebiusMap { a, b, c, d, orientation: self.orientation }
        }
    }

    /// Integer power by repeated squaring; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> MoebiusMap {
        let mut base = if k < 0 { self.inverse() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = MoebiusMap::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Equality of the projective classes: entries agree up to a global sign.
    pub fn approx_eq(&self, other: &MoebiusMap, tol: f64) -> bool {
        if self.orientation != other.orientation {
            return false;
        }
        let x = self.entries();
        let y = other.entries();
        let plus = x.iter().zip(&y).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max);
        let minus = x.iter().zip(&y).map(|(u, v)| (u + v).norm()).fold(0.0, f64::max);
        plus.min(minus) <= tol
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&MoebiusMap::identity(), tol)
    }

    pub fn classify(&self) -> Classification {
        self.classify_with_tol(CLASSIFY_TOL)
    }

    pub fn classify_with_tol(&self, tol: f64) -> Classification {
        if self.orientation.is_anti() {
            return Classification::Antiholomorphic;
        }
        let tr = self.trace();
        let tr2 = tr * tr;
        let scale = tr2.norm().max(1.0);
        if (tr2 - 4.0).norm() <= tol * scale {
            if self.is_identity(tol.sqrt()) {
                Classification::Identity
            } else {
                Classification::Parabolic
            }
        } else if tr2.im.abs() <= tol * scale {
            if tr2.re >= 0.0 && tr2.re < 4.0 {
                Classification::Elliptic
            } else if tr2.re > 4.0 {
                Classification::Hyperbolic
            } else {
                Classification::Loxodromic
            }
        } else {
            Classification::Loxodromic
        }
    }

    /// Fixed points ordered (attracting, repelling) by eigenvalue modulus.
    ///
    /// For elliptic and parabolic maps the order carries no dynamical meaning.
    pub fn fixed_points(&self) -> Result<(ComplexPoint, ComplexPoint)> {
        if !self.is_holomorphic() {
            return Err(Error::NotHolomorphic);
        }
        if self.classify() == Classification::Identity {
            return Err(Error::UndefinedFixedPoints);
        }
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        // c z² + (d − a) z − b = 0, discriminant tr² − 4
        let lin = d - a;
        let disc = (self.trace() * self.trace() - 4.0).sqrt();
        let q1 = -(lin + disc) * 0.5;
        let q2 = -(lin - disc) * 0.5;
        let q = if q1.norm() >= q2.norm() { q1 } else { q2 };

        let zero_c = c.norm_sqr() == 0.0;
        if q.norm_sqr() == 0.0 {
            let z = if zero_c { ComplexPoint::Infinity } else { ComplexPoint::from_complex(-lin / (c * 2.0)) };
            return Ok((z, z));
        }
        let z1 = if zero_c { ComplexPoint::Infinity } else { ComplexPoint::from_complex(q / c) };
        let z2 = ComplexPoint::from_complex(-b / q);
        // eigenvalue on [z1, 1] is c z1 + d = q + d, or a when z1 = ∞
        let lambda1 = if zero_c { a } else { q + d };
        if lambda1.norm() >= 1.0 {
            Ok((z1, z2))
        } else {
            Ok((z2, z1))
        }
    }

    /// Eigenvalue of largest modulus of the normalized matrix.
    pub fn dominant_eigenvalue(&self) -> Complex64 {
        let tr = self.trace();
        let disc = (tr * tr - 4.0).sqrt();
        let l1 = (tr + disc) * 0.5;
        let l2 = (tr - disc) * 0.5;
        if l1.norm() >= l2.norm() {
            l1
        } else {
            l2
        }
    }

    /// Multiplier `f'(z)` at a finite or infinite fixed point `z`.
    pub fn multiplier_at(&self, z: ComplexPoint) -> Complex64 {
        match z {
            ComplexPoint::Infinity => self.d * self.d,
            ComplexPoint::Finite(z) => {
                let den = self.c * z + self.d;
                Complex64::new(1.0, 0.0) / (den * den)
            }
        }
    }

    /// Real translation length along the axis.
    pub fn translation_length(&self) -> Result<f64> {
        match self.classify() {
            Classification::Hyperbolic => Ok(2.0 * (self.trace().norm() / 2.0).acosh()),
            Classification::Loxodromic => Ok(2.0 * self.dominant_eigenvalue().norm().ln()),
            Classification::Elliptic => Err(Error::NoTranslationLength("elliptic")),
            Classification::Parabolic => Err(Error::NoTranslationLength("parabolic")),
            Classification::Identity => Err(Error::NoTranslationLength("the identity")),
            Classification::Antiholomorphic => Err(Error::NoTranslationLength("antiholomorphic")),
        }
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, rhs: MoebiusMap) -> MoebiusMap {
        self.compose(&rhs)
    }
}

pub fn compose(m1: &MoebiusMap, m2: &MoebiusMap) -> MoebiusMap {
    m1.compose(m2)
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    /// a_re, a_im, b_re, b_im, c_re, c_im, d_re, d_im
    matrix: [f64; 8],
    orientation: Orientation,
}

impl TryFrom<MapRepr> for MoebiusMap {
    type Error = Error;

    fn try_from(r: MapRepr) -> Result<Self> {
        let m = r.matrix;
        MoebiusMap::new(
            Complex64::new(m[0], m[1]),
            Complex64::new(m[2], m[3]),
            Complex64::new(m[4], m[5]),
            Complex64::new(m[6], m[7]),
            r.orientation,
        )
    }
}

impl From<MoebiusMap> for MapRepr {
    fn from(m: MoebiusMap) -> Self {
        MapRepr {
            matrix: [m.a.re, m.a.im, m.b.re, m.b.im, m.c.re, m.c.im, m.d.re, m.d.im],
            orientation: m.orientation,
        }
    }
}
