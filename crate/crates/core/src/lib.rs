//! Quasifuchsian quadrilateral reflection groups, their exotic circles, the
//! hyperboloid-model computation of the tangency parameter, and an orbit
//! engine with SVG output for limit sets and circle orbits.

pub mod cli;
pub mod error;
pub mod lorentz;
pub mod lunchbox;
pub mod moebius;
pub mod orbit;
pub mod poly;
pub mod quadgroup;
pub mod render;

pub use error::{Error, Result};
pub use num_complex::Complex64;
