use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ComplexPoint, MoebiusMap, Orientation};
use crate::error::{Error, Result};

/// A generalized circle (circle or line) of the Riemann sphere in Hermitian form
///
/// ```text
/// A·z·z̄ + B̄·z + B·z̄ + D = 0,      |B|² − A·D = 1
/// ```
///
/// The representation is canonical: after scaling to unit discriminant the
/// sign is fixed by `A > 0`, or for lines by `Re B > 0`, then `Im B > 0`.
/// Lines are exactly the circles with `A == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CircleRepr", into = "CircleRepr")]
pub struct GenCircle {
    a: f64,
    b: Complex64,
    d: f64,
}

/// A circle on the unit sphere: the intersection with the plane
/// `normal · x = offset`, oriented so that `offset ≥ 0` (normal points at
/// the smaller cap).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereCircle {
    pub normal: [f64; 3],
    pub offset: f64,
    pub radius: f64,
}

impl GenCircle {
    pub fn new(a: f64, b: Complex64, d: f64) -> Result<Self> {
        if !(a.is_finite() && b.re.is_finite() && b.im.is_finite() && d.is_finite()) {
            return Err(Error::InvalidCircle(f64::NAN));
        }
        let disc = b.norm_sqr() - a * d;
        let scale = b.norm_sqr() + (a * d).abs();
        if !(disc > 1e-14 * scale) || disc <= 0.0 {
            return Err(Error::InvalidCircle(disc));
        }
        Ok(Self::normalized(a, b, d))
    }

    /// Scales to unit discriminant and applies the sign convention.
    ///
    /// Inputs whose discriminant already equals one to within rounding are
    /// not rescaled, so normalizing twice is bit-for-bit stable.
    fn normalized(a: f64, b: Complex64, d: f64) -> Self {
        let disc = b.norm_sqr() - a * d;
        let rounding = 8.0 * f64::EPSILON * (b.norm_sqr() + (a * d).abs());
        if (disc - 1.0).abs() > rounding {
            let s = disc.sqrt();
            Self::signed(a / s, b / s, d / s)
        } else {
            Self::signed(a, b, d)
        }
    }

    /// Sign convention only. For small circles the discriminant is a
    /// cancelling difference of large terms, so recomputing it to rescale
    /// would inject relative error of order ulp·|A|².
    fn signed(a: f64, b: Complex64, d: f64) -> Self {
        let (mut a, mut b, mut d) = (a, b, d);
        let flip = if a != 0.0 {
            a < 0.0
        } else if b.re != 0.0 {
            b.re < 0.0
        } else if b.im != 0.0 {
            b.im < 0.0
        } else {
            d < 0.0
        };
        if flip {
            a = -a;
            b = -b;
            d = -d;
        }
        // collapse negative zeros so equal circles compare equal bitwise
        GenCircle { a: a + 0.0, b: Complex64::new(b.re + 0.0, b.im + 0.0), d: d + 0.0 }
    }

    /// Re-applies normalization to an already canonical circle.
    pub fn renormalized(&self) -> Self {
        Self::normalized(self.a, self.b, self.d)
    }

    pub fn from_center_radius(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::InvalidCircle(-radius * radius));
        }
        Self::new(1.0, -center, center.norm_sqr() - radius * radius)
    }

    pub fn unit_circle() -> Self {
        GenCircle { a: 1.0, b: Complex64::new(0.0, 0.0), d: -1.0 }
    }

    /// The line `Im z = 0`.
    pub fn real_axis() -> Self {
        GenCircle { a: 0.0, b: Complex64::new(0.0, 1.0), d: 0.0 }
    }

    /// The line `Re z = 0`.
    pub fn imaginary_axis() -> Self {
        GenCircle { a: 0.0, b: Complex64::new(1.0, 0.0), d: 0.0 }
    }

    /// The line `Re(n̄ z) = offset` with normal direction `n`.
    pub fn line(normal: Complex64, offset: f64) -> Result<Self> {
        // 2 Re(B̄ z) + D = 0 with B = n
        Self::new(0.0, normal, -2.0 * offset)
    }

    /// Line through two distinct finite points.
    pub fn line_through(z1: Complex64, z2: Complex64) -> Result<Self> {
        let dir = z2 - z1;
        if dir.norm_sqr() == 0.0 {
            return Err(Error::DegenerateTriple);
        }
        let normal = dir * Complex64::new(0.0, 1.0);
        Self::line(normal, (normal.conj() * z1).re)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// `[A, Re B, Im B, D]`.
    pub fn coefficients(&self) -> [f64; 4] {
        [self.a, self.b.re, self.b.im, self.d]
    }

    pub fn is_line(&self) -> bool {
        self.a == 0.0
    }

    pub fn center_radius(&self) -> Option<(Complex64, f64)> {
        if self.is_line() {
            None
        } else {
            let disc = self.b.norm_sqr() - self.a * self.d;
            Some((-self.b / self.a, disc.max(0.0).sqrt() / self.a.abs()))
        }
    }

    /// Signed Hermitian form value `A|z|² + 2 Re(B̄ z) + D` (unnormalized).
    pub fn form_value(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + 2.0 * (self.b.conj() * z).re + self.d
    }

    /// Signed Euclidean distance from the sphere image of `z` to the plane
    /// cutting out this circle; zero exactly on the circle.
    pub fn residual(&self, z: ComplexPoint) -> f64 {
        let e = self.to_lorentz();
        let x = z.to_sphere();
        let n = (e[1] * e[1] + e[2] * e[2] + e[3] * e[3]).sqrt();
        (e[1] * x[0] + e[2] * x[1] + e[3] * x[2] - e[0]) / n
    }

    pub fn contains(&self, z: ComplexPoint, tol: f64) -> bool {
        self.residual(z).abs() <= tol
    }

    /// Coordinates in E^{3,1} under `A = x0 − x3`, `D = x0 + x3`,
    /// `B = −(x1 + i x2)`; the Hermitian discriminant becomes `⟨x, x⟩`.
    pub fn to_lorentz(&self) -> [f64; 4] {
        [
            0.5 * (self.a + self.d),
            -self.b.re,
            -self.b.im,
            0.5 * (self.d - self.a),
        ]
    }

    pub fn from_lorentz(x: [f64; 4]) -> Result<Self> {
        Self::new(x[0] - x[3], Complex64::new(-x[1], -x[2]), x[0] + x[3])
    }

    /// Signed inversive product `Re(B₁B̄₂) − (A₁D₂ + A₂D₁)/2`.
    pub fn inversive_product(&self, other: &GenCircle) -> f64 {
        (self.b * other.b.conj()).re - 0.5 * (self.a * other.d + other.a * self.d)
    }

    pub fn inversive_distance(&self, other: &GenCircle) -> f64 {
        self.inversive_product(other).abs()
    }

    /// Image under a (possibly antiholomorphic) Möbius map.
    pub fn apply(&self, m: &MoebiusMap) -> GenCircle {
        let inv = m.inverse();
        let n = if m.orientation().is_anti() {
            // z = conj(N w): conjugate the form instead of the matrix
            let e = inv.entries();
            [e[0].conj(), e[1].conj(), e[2].conj(), e[3].conj()]
        } else {
            inv.entries()
        };
        let b = if m.orientation().is_anti() { self.b.conj() } else { self.b };
        congruence(self.a, b, self.d, n)
    }

    /// The reflection fixing this circle pointwise.
    pub fn inversion(&self) -> MoebiusMap {
        // z ↦ (B z̄ + D) / (−A z̄ − B̄)
        let i = Complex64::new(0.0, 1.0);
        MoebiusMap::new(
            self.b * i,
            Complex64::new(self.d, 0.0) * i,
            Complex64::new(-self.a, 0.0) * i,
            -self.b.conj() * i,
            Orientation::Antiholomorphic,
        )
        .expect("normalized circle gives a nonsingular reflection")
    }

    pub fn sphere_circle(&self) -> SphereCircle {
        let e = self.to_lorentz();
        let n = (e[1] * e[1] + e[2] * e[2] + e[3] * e[3]).sqrt();
        let sign = if e[0] < 0.0 { -1.0 } else { 1.0 };
        SphereCircle {
            normal: [sign * e[1] / n, sign * e[2] / n, sign * e[3] / n],
            offset: sign * e[0] / n,
            radius: 1.0 / n,
        }
    }

    /// Diameter of the sphere image in the chordal metric.
    pub fn chordal_diameter(&self) -> f64 {
        let e0 = 0.5 * (self.a + self.d);
        2.0 / (1.0 + e0 * e0).sqrt()
    }

    /// Center of the smaller spherical cap, projected back to the plane.
    pub fn spherical_center(&self) -> ComplexPoint {
        ComplexPoint::from_sphere(self.sphere_circle().normal)
    }

    pub fn max_norm_distance(&self, other: &GenCircle) -> f64 {
        self.coefficients()
            .iter()
            .zip(other.coefficients().iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &GenCircle, tol: f64) -> bool {
        self.max_norm_distance(other) <= tol
    }

    /// Lexicographic total order on canonical coefficients.
    pub fn canonical_cmp(&self, other: &GenCircle) -> std::cmp::Ordering {
        let x = self.coefficients();
        let y = other.coefficients();
        for i in 0..4 {
            let o = x[i].total_cmp(&y[i]);
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// `H' = N* H N` for `H = [[A, B], [B̄, D]]`.
fn congruence(a: f64, b: Complex64, d: f64, n: [Complex64; 4]) -> GenCircle {
    let [n11, n12, n21, n22] = n;
    let a2 = a * n11.norm_sqr() + 2.0 * (n11.conj() * b * n21).re + d * n21.norm_sqr();
    let d2 = a * n12.norm_sqr() + 2.0 * (n12.conj() * b * n22).re + d * n22.norm_sqr();
    let b2 = n11.conj() * n12 * a + n11.conj() * b * n22 + n21.conj() * b.conj() * n12 + n21.conj() * n22 * d;
    // a unimodular congruence preserves the discriminant exactly
    GenCircle::signed(a2, b2, d2)
}

/// The generalized circle through three distinct points (any may be ∞).
pub fn circle_through(z1: ComplexPoint, z2: ComplexPoint, z3: ComplexPoint) -> Result<GenCircle> {
    const COINCIDENT: f64 = 1e-12;
    if z1.chordal_distance(&z2) < COINCIDENT
        || z1.chordal_distance(&z3) < COINCIDENT
        || z2.chordal_distance(&z3) < COINCIDENT
    {
        return Err(Error::DegenerateTriple);
    }
    // e is Minkowski-orthogonal to the three null vectors: Euclidean cross
    // product of the η-lowered vectors (−x0, x1, x2, x3).
    let lower = |p: ComplexPoint| {
        let v = p.to_lorentz();
        [-v[0], v[1], v[2], v[3]]
    };
    let e = cross4(lower(z1), lower(z2), lower(z3));
    GenCircle::from_lorentz(e).map_err(|_| Error::DegenerateTriple)
}

/// Vector orthogonal to three vectors of R⁴ (cofactor expansion).
fn cross4(u: [f64; 4], v: [f64; 4], w: [f64; 4]) -> [f64; 4] {
    let det3 = |c0: usize, c1: usize, c2: usize| {
        u[c0] * (v[c1] * w[c2] - v[c2] * w[c1]) - u[c1] * (v[c0] * w[c2] - v[c2] * w[c0])
            + u[c2] * (v[c0] * w[c1] - v[c1] * w[c0])
    };
    [det3(1, 2, 3), -det3(0, 2, 3), det3(0, 1, 3), -det3(0, 1, 2)]
}

#[allow(non_snake_case)]
#[derive(Serialize, Deserialize)]
struct CircleRepr {
    A: f64,
    B_re: f64,
    B_im: f64,
    D: f64,
}

impl TryFrom<CircleRepr> for GenCircle {
    type Error = Error;

    fn try_from(r: CircleRepr) -> Result<Self> {
        GenCircle::new(r.A, Complex64::new(r.B_re, r.B_im), r.D)
    }
}

impl From<GenCircle> for CircleRepr {
    fn from(c: GenCircle) -> Self {
        CircleRepr { A: c.a, B_re: c.b.re, B_im: c.b.im, D: c.d }
    }
}
