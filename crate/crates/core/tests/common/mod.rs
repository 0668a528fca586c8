#![allow(dead_code)]

use std::fmt::Debug;

use kleinian::moebius::{ComplexPoint, GenCircle, MoebiusMap, Orientation};
use kleinian::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6b6c_6569_6e69_616e;
pub const CASES: usize = 1000;

/// Generator stream for one property, independent of the others.
pub fn rng(name: &str) -> ChaCha8Rng {
    let tag = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(SEED ^ tag)
}

/// Runs `prop` on `cases` generated inputs and panics on the first failure.
pub fn for_all<T, G, P>(name: &str, cases: usize, mut gen: G, mut prop: P)
where
    T: Debug,
    G: FnMut(&mut ChaCha8Rng) -> T,
    P: FnMut(&T) -> Result<(), String>,
{
    let mut r = rng(name);
    for i in 0..cases {
        let input = gen(&mut r);
        if let Err(msg) = prop(&input) {
            panic!("property {name} failed at case {i}: {msg}\ninput: {input:?}");
        }
    }
    println!("property {name}: {cases} cases ok");
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn complex(r: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(r.gen_range(-scale..scale), r.gen_range(-scale..scale))
}

/// Finite circle or, one time in ten, a line.
pub fn circle(r: &mut ChaCha8Rng) -> GenCircle {
    if r.gen_bool(0.1) {
        let theta: f64 = r.gen_range(0.0..std::f64::consts::TAU);
        return GenCircle::line(Complex64::from_polar(1.0, theta), r.gen_range(-2.0..2.0)).unwrap();
    }
    let radius = 10f64.powf(r.gen_range(-1.3..0.5));
    GenCircle::from_center_radius(complex(r, 2.0), radius).unwrap()
}

/// Point on `c` at a random parameter.
pub fn point_on(r: &mut ChaCha8Rng, c: &GenCircle) -> ComplexPoint {
    let theta: f64 = r.gen_range(0.0..std::f64::consts::TAU);
    match c.center_radius() {
        Some((z, rad)) => ComplexPoint::from_complex(z + Complex64::from_polar(rad, theta)),
        None => {
            // B̄z + Bz̄ + D = 0: foot of the normal plus a tangent offset
            let b = c.b();
            let foot = -b * (c.d() / (2.0 * b.norm_sqr()));
            let dir = Complex64::new(-b.im, b.re) / b.norm();
            ComplexPoint::from_complex(foot + dir * r.gen_range(-3.0..3.0))
        }
    }
}

/// Möbius map with moderately sized entries, antiholomorphic half the time.
pub fn map(r: &mut ChaCha8Rng) -> MoebiusMap {
    loop {
        let e = [complex(r, 1.5), complex(r, 1.5), complex(r, 1.5), complex(r, 1.5)];
        if (e[0] * e[3] - e[1] * e[2]).norm() < 0.3 {
            continue;
        }
        let o = if r.gen_bool(0.5) { Orientation::Holomorphic } else { Orientation::Antiholomorphic };
        return MoebiusMap::new(e[0], e[1], e[2], e[3], o).unwrap();
    }
}

pub fn holomorphic_map(r: &mut ChaCha8Rng) -> MoebiusMap {
    loop {
        let m = map(r);
        if m.is_holomorphic() {
            return m;
        }
    }
}
