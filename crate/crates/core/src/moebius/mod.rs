//! Möbius and anti-Möbius maps acting on points and generalized circles of
//! the Riemann sphere.

mod circle;
mod distance;
mod map;
mod point;

pub use circle::{circle_through, GenCircle, SphereCircle};
pub use distance::{circle_distance, point_circle_distance};
pub use map::{compose, Classification, MoebiusMap, Orientation, CLASSIFY_TOL};
pub use point::ComplexPoint;

/// The reflection fixing `c` pointwise.
pub fn inversion_in(c: &GenCircle) -> MoebiusMap {
    c.inversion()
}
