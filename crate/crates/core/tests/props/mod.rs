#![allow(dead_code)]

use crate::common::{circle, complex, ensure, for_all, holomorphic_map, map, point_on, CASES};
use kleinian::lorentz::{minkowski_inner, normal_to_circle, reflect, LorentzVec, PlaneNormal};
use kleinian::lunchbox::{self, LunchboxParams};
use kleinian::moebius::{inversion_in, point_circle_distance, Classification, ComplexPoint, GenCircle, MoebiusMap};
use kleinian::orbit::{self, enumerate_orbit, GeneratorSet, OrbitConfig, OrbitSet};
use kleinian::quadgroup::{solve_quadrilateral, QuadGroupData};
use kleinian::render::{render_svg, Layer, LayerItems, Scene, Style, Viewport};
use kleinian::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const SQRT3: f64 = 1.732_050_807_568_877_2;

// moebius

pub fn inversion_is_an_involution() {
    for_all("inversion_involution", CASES, circle, |c| {
        let m = inversion_in(c);
        let id = m.compose(&m);
        ensure(id.is_identity(1e-12), || format!("τ∘τ = {:?}", id.entries()))
    });
}

pub fn maps_carry_circles_to_circles() {
    for_all(
        "equivariance",
        CASES,
        |r| {
            let c = circle(r);
            let z = point_on(r, &c);
            (c, z, map(r))
        },
        |(c, z, m)| {
            let d = point_circle_distance(m.apply_point(*z), &c.apply(m));
            ensure(d < 1e-9, || format!("image point is {d:e} from image circle"))
        },
    );
}

pub fn normalization_is_idempotent() {
    for_all(
        "canonical_idempotence",
        CASES,
        |r| {
            let c = circle(r);
            let k: f64 = r.gen_range(-5.0..5.0);
            let [a, b_re, b_im, d] = c.coefficients();
            (a * k, Complex64::new(b_re * k, b_im * k), d * k)
        },
        |(a, b, d)| {
            let c = GenCircle::new(*a, *b, *d).map_err(|e| e.to_string())?;
            let again = c.renormalized();
            ensure(again.coefficients().map(f64::to_bits) == c.coefficients().map(f64::to_bits), || {
                format!("{:?} became {:?}", c.coefficients(), again.coefficients())
            })
        },
    );
}

pub fn inversive_distance_is_conformally_invariant() {
    for_all(
        "inversive_distance_invariance",
        CASES,
        |r| (circle(r), circle(r), map(r)),
        |(c1, c2, m)| {
            let before = c1.inversive_distance(c2);
            let after = c1.apply(m).inversive_distance(&c2.apply(m));
            let err = (after - before).abs() / before.max(1.0);
            ensure(err < 1e-9, || format!("{before} became {after}"))
        },
    );
}

/// Map of a prescribed type, conjugated by a random map.
fn typed_map(r: &mut ChaCha8Rng) -> (Classification, MoebiusMap) {
    use std::f64::consts::PI;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (kind, core) = match r.gen_range(0..4) {
        0 => {
            let theta = r.gen_range(0.1..PI - 0.1);
            let l = Complex64::from_polar(1.0, theta / 2.0);
            (Classification::Elliptic, MoebiusMap::holomorphic(l, zero, zero, one / l).unwrap())
        }
        1 => (Classification::Parabolic, MoebiusMap::holomorphic(one, complex(r, 2.0) + 0.5, zero, one).unwrap()),
        2 => {
            let l = Complex64::new(r.gen_range(1.1..4.0), 0.0);
            (Classification::Hyperbolic, MoebiusMap::holomorphic(l, zero, zero, one / l).unwrap())
        }
        _ => {
            let l = Complex64::from_polar(r.gen_range(1.1..4.0), r.gen_range(0.2..PI - 0.2));
            (Classification::Loxodromic, MoebiusMap::holomorphic(l, zero, zero, one / l).unwrap())
        }
    };
    let g = holomorphic_map(r);
    (kind, g.compose(&core).compose(&g.inverse()))
}

pub fn classification_is_conjugation_invariant() {
    for_all(
        "classify_conjugation",
        CASES,
        |r| (typed_map(r), holomorphic_map(r)),
        |((kind, m), g)| {
            let conj = g.compose(m).compose(&g.inverse());
            ensure(m.classify() == *kind && conj.classify() == *kind, || {
                format!("expected {kind}, got {} and {}", m.classify(), conj.classify())
            })
        },
    );
}

pub fn translation_length_is_a_conjugacy_invariant() {
    for_all(
        "translation_length_invariance",
        CASES,
        |r| loop {
            let (kind, m) = typed_map(r);
            if matches!(kind, Classification::Hyperbolic | Classification::Loxodromic) {
                break (m, holomorphic_map(r));
            }
        },
        |(m, g)| {
            let l = m.translation_length().map_err(|e| e.to_string())?;
            let li = m.inverse().translation_length().map_err(|e| e.to_string())?;
            let lc = g.compose(m).compose(&g.inverse()).translation_length().map_err(|e| e.to_string())?;
            ensure((l - li).abs() < 1e-9 * l.max(1.0) && (l - lc).abs() < 1e-9 * l.max(1.0), || {
                format!("{l} vs inverse {li} vs conjugate {lc}")
            })
        },
    );
}

// lorentz

fn unit_spacelike(r: &mut ChaCha8Rng) -> PlaneNormal {
    loop {
        let x = LorentzVec::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        if x.norm_sq() > 0.1 {
            return PlaneNormal::normalize(x).unwrap();
        }
    }
}

pub fn inner_product_is_inversive_distance() {
    for_all(
        "minkowski_vs_inversive",
        CASES,
        |r| (unit_spacelike(r), unit_spacelike(r)),
        |(e1, e2)| {
            let inner = minkowski_inner(e1.vector(), e2.vector()).abs();
            let inv = normal_to_circle(e1).inversive_distance(&normal_to_circle(e2));
            ensure((inner - inv).abs() < 1e-9 * inner.max(1.0), || format!("|⟨e1,e2⟩| = {inner}, inversive distance {inv}"))
        },
    );
}

/// Planar intersection test from centers and radii.
fn circles_cross(c1: &GenCircle, c2: &GenCircle) -> Option<bool> {
    let (z1, r1) = c1.center_radius()?;
    let (z2, r2) = c2.center_radius()?;
    let d = (z1 - z2).norm();
    Some((r1 - r2).abs() < d && d < r1 + r2)
}

pub fn inner_product_detects_intersection() {
    for_all(
        "minkowski_intersection",
        CASES,
        |r| (unit_spacelike(r), unit_spacelike(r)),
        |(e1, e2)| {
            let inner = minkowski_inner(e1.vector(), e2.vector());
            if (inner.abs() - 1.0).abs() < 1e-6 {
                return Ok(());
            }
            match circles_cross(&normal_to_circle(e1), &normal_to_circle(e2)) {
                None => Ok(()),
                Some(cross) => ensure(cross == (inner.abs() < 1.0), || format!("⟨e1,e2⟩ = {inner}, planar crossing {cross}")),
            }
        },
    );
    for_all(
        "minkowski_tangency",
        CASES,
        |r| {
            let z1 = complex(r, 1.0);
            let r1 = r.gen_range(0.1..2.0);
            let r2 = r.gen_range(0.1..2.0);
            let dir = Complex64::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU));
            let outside = r.gen_bool(0.5);
            let z2 = if outside { z1 + dir * (r1 + r2) } else { z1 + dir * (r1 - r2) };
            (GenCircle::from_center_radius(z1, r1).unwrap(), GenCircle::from_center_radius(z2, r2).unwrap())
        },
        |(c1, c2)| {
            let e1 = c1.to_lorentz();
            let e2 = c2.to_lorentz();
            let inner = minkowski_inner(LorentzVec::from_array(e1), LorentzVec::from_array(e2));
            ensure((inner.abs() - 1.0).abs() < 1e-9, || format!("tangent circles give ⟨e1,e2⟩ = {inner}"))
        },
    );
}

pub fn reflection_preserves_inner_products() {
    for_all(
        "reflect_isometry",
        CASES,
        |r| {
            let x = LorentzVec::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
            let y = LorentzVec::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
            (unit_spacelike(r), x, y)
        },
        |(e, x, y)| {
            let before = minkowski_inner(*x, *y);
            let after = minkowski_inner(reflect(e, *x), reflect(e, *y));
            let euclid = |v: &LorentzVec| v.to_array().iter().map(|c| c * c).sum::<f64>().sqrt();
            let ev = euclid(&e.vector());
            let scale = euclid(x) * euclid(y) * (1.0 + 2.0 * ev * ev).powi(2);
            ensure((after - before).abs() <= 1e-12 * scale, || format!("{before} became {after}"))
        },
    );
}

// quadgroup

fn datum(r: &mut ChaCha8Rng) -> (u32, f64, f64) {
    let n = r.gen_range(3..=8u32);
    let bound = 4.0 * (std::f64::consts::PI / n as f64).cos().powi(2);
    let s = r.gen_range(1.05..4.0);
    let t_max = 1.0 + bound / (s - 1.0);
    let frac: f64 = r.gen_range(0.02..1.0);
    let t = if r.gen_bool(0.05) { t_max } else { 1.0 + (t_max - 1.0) * (1.0 - frac).max(0.02) };
    (n, s, t)
}

pub fn constructed_data_satisfy_invariants() {
    for_all("quad_invariants", CASES, datum, |(n, s, t)| {
        let d = solve_quadrilateral(*n, *s, *t).map_err(|e| e.to_string())?;
        let failed: Vec<String> =
            d.invariants().iter().filter(|c| !c.passed).map(|c| format!("{} ({:e})", c.name, c.residual)).collect();
        ensure(failed.is_empty(), || failed.join(", "))
    });
}

pub fn eta_moves_c_and_stabilizes_limit_circle() {
    for_all(
        "eta_stabilizes_limit_circle",
        CASES,
        |r| loop {
            let (n, s, t) = datum(r);
            let d = solve_quadrilateral(n, s, t).unwrap();
            if !d.is_fuchsian() {
                break (n, s, t);
            }
        },
        |(n, s, t)| {
            let d = solve_quadrilateral(*n, *s, *t).map_err(|e| e.to_string())?;
            let c = d.exotic_circle().map_err(|e| e.to_string())?;
            let lim = d.limit_circle().map_err(|e| e.to_string())?;
            let moved = c.apply(&d.eta).max_norm_distance(&c);
            let fixed = lim.apply(&d.eta).max_norm_distance(&lim);
            ensure(moved > 1e-6 && fixed < 1e-9 * lim.coefficients().iter().fold(1.0, |m: f64, x| m.max(x.abs())), || {
                format!("|η̃C − C| = {moved:e}, |η̃C′ − C′| = {fixed:e}")
            })
        },
    );
}

pub fn exotic_orbit_never_reaches_limit_circle() {
    let cfg = OrbitConfig { max_depth: 10, min_diameter: 0.0, ..Default::default() };
    for (n, s, t) in [(3, 2.0, 1.5), (4, 1.5, 2.5), (5, 3.0, 1.3)] {
        let d = solve_quadrilateral(n, s, t).unwrap();
        let gens = GeneratorSet::from_quadgroup(&d);
        let c = d.exotic_circle().unwrap();
        let lim = d.limit_circle().unwrap();
        let orbit = enumerate_orbit(&gens, &c, &cfg).unwrap();
        assert!(!orbit.truncated);
        assert!(orbit.len() >= CASES, "only {} orbit items", orbit.len());
        let closest = orbit.items.iter().map(|i| i.circle.max_norm_distance(&lim)).fold(f64::INFINITY, f64::min);
        assert!(closest > cfg.dedup_epsilon, "an orbit circle equals C′ (distance {closest:e})");
        println!("property exotic_orbit_avoids_limit_circle ({n}, {s}, {t}): {} cases ok, closest {closest:e}", orbit.len());
    }
}

pub fn limit_set_flattens_towards_the_fuchsian_boundary() {
    let cfg = OrbitConfig::default();
    let fit = |t: f64| {
        let d = solve_quadrilateral(3, 2.0, t).unwrap();
        let ls = orbit::approximate_limit_set(&GeneratorSet::from_quadgroup(&d), &cfg).unwrap();
        orbit::best_fit_circle(&ls.points).unwrap().1
    };
    let devs: Vec<f64> = [1.5, 1.8, 1.95].iter().map(|&t| fit(t)).collect();
    println!("best-fit deviations at t = 1.5, 1.8, 1.95: {devs:?}");
    assert!(devs.windows(2).all(|w| w[1] < w[0]), "deviation does not decrease: {devs:?}");
    assert!(fit(2.0) < 1e-3);
}

// lunchbox

/// The face normals and plane normal typed directly from the displays.
fn transcribed(t: f64) -> ([[f64; 4]; 4], [f64; 4], [f64; 3]) {
    let u = ((t + 1.0) / 2.0).sqrt();
    let v = (3.0 * u + ((u * u + 2.0) * (16.0 * u * u - 3.0)).sqrt()) / (8.0 * u * u - 2.0);
    let rad = (4.0 * u * u + 4.0 * v * v - 3.0 - 4.0 * u * u * v * v).max(0.0).sqrt();
    let den = 2.0 * u * u - 2.0;
    let n24 = |sign: f64| [(u - rad) / den, sign * v, 0.0, (-1.0 + u * rad) / den];
    let n78 = |sign: f64| {
        [
            (u * u * SQRT3 - (u * u + 2.0).sqrt()) / den,
            -sign * SQRT3 / 2.0,
            SQRT3 / 2.0,
            (u * (u * u + 2.0).sqrt() - u * SQRT3) / den,
        ]
    };
    let w = (u * u - 1.0).sqrt();
    let pprime = [1.0 / w, 0.0, 0.0, -u / w];
    let x0 = (1.0 - u * rad) / w;
    let x2 = (-(u * u + 2.0).sqrt() + u * SQRT3 * rad) / (SQRT3 * w);
    let x3 = (rad - u) / w;
    ([n24(1.0), n24(-1.0), n78(1.0), n78(-1.0)], pprime, [x0, x2, x3])
}

pub fn lunchbox_vectors_match_transcriptions() {
    for_all(
        "lunchbox_transcription",
        CASES,
        |r| r.gen_range(1.001..1.999),
        |t| {
            let p = LunchboxParams::new(*t).map_err(|e| e.to_string())?;
            let normals = lunchbox::face_normals(&p).map_err(|e| e.to_string())?;
            let sol = lunchbox::solve_plane_normal(&p).map_err(|e| e.to_string())?;
            let (faces, pprime, x) = transcribed(*t);
            let close = |a: [f64; 4], b: [f64; 4]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12 * x.abs().max(1.0));
            for (got, want) in normals.all().iter().zip(faces) {
                ensure(close(got.to_array(), want), || format!("face normal {:?} vs {want:?}", got.to_array()))?;
            }
            ensure(close(lunchbox::pprime_normal(&p).to_array(), pprime), || "P′ normal differs".into())?;
            // x0 and x3 as displayed; x2 is taken with the opposite sign so that
            // x is orthogonal to the displayed n7 and n8
            ensure(close([sol.x0, -sol.x2, sol.x3, 0.0], [x[0], x[1], x[2], 0.0]), || {
                format!("x = ({}, {}, {}) vs displayed {x:?}", sol.x0, sol.x2, sol.x3)
            })?;
            let ortho = sol.orthogonality(&normals);
            ensure(ortho.iter().all(|o| o.abs() < 1e-9), || format!("orthogonality residuals {ortho:?}"))
        },
    );
}

pub fn expansion_identity() {
    for_all(
        "expansion_identity",
        CASES,
        |r| r.gen_range(-10.0..10.0f64),
        |u| {
            let u2 = u * u;
            let lhs = (u2 + 2.0) * (16.0 * u2 - 3.0);
            let rhs = 16.0 * u2 * u2 + 29.0 * u2 - 6.0;
            ensure((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), || format!("{lhs} vs {rhs}"))
        },
    );
}

pub fn quintic_is_negative_on_the_interval() {
    assert_eq!(lunchbox::h_poly(1.0), -5184.0);
    assert_eq!(lunchbox::h_poly(2.0), -8281.0);
    let worst = (0..=CASES).map(|i| lunchbox::h_poly(1.0 + i as f64 / CASES as f64)).fold(f64::NEG_INFINITY, f64::max);
    assert!(worst < 0.0, "h reaches {worst}");
    println!("property quintic_negative: {} cases ok", CASES + 1);
}

pub fn t0_is_the_only_root() {
    let cert = lunchbox::find_t0();
    assert_eq!(cert.sturm_count, 1);
    assert_eq!(lunchbox::cubic_poly().count_roots(1.0, 2.0), 1);
    let dcubic = |t: f64| 200.0 - 56.0 * t + 216.0 * t * t;
    assert!((0..=CASES).all(|i| dcubic(1.0 + i as f64 / CASES as f64) > 0.0));
    println!("property t0_unique: {} cases ok", CASES + 1);
}

pub fn unit_residual_changes_sign_once() {
    let values: Vec<f64> = (1..=CASES)
        .map(|i| {
            let p = LunchboxParams::new(1.0 + i as f64 / (CASES + 1) as f64).unwrap();
            lunchbox::solve_plane_normal(&p).unwrap().unit_residual
        })
        .collect();
    let changes = values.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
    assert_eq!(changes, 1, "unit residual changes sign {changes} times");
    println!("property unit_residual_single_sign_change: {} cases ok", values.len());
}

// orbit engine

fn random_generators(r: &mut ChaCha8Rng) -> (GeneratorSet, GenCircle) {
    let k = r.gen_range(2..=4);
    let circles: Vec<GenCircle> =
        (0..k).map(|_| GenCircle::from_center_radius(complex(r, 1.5), r.gen_range(0.2..0.8)).unwrap()).collect();
    (GeneratorSet::inversions(&circles, vec![]).unwrap(), circle(r))
}

fn rich_orbit() -> (GeneratorSet, OrbitSet) {
    let d: QuadGroupData = solve_quadrilateral(3, 2.0, 1.5).unwrap();
    let gens = GeneratorSet::from_quadgroup(&d);
    let orbit = enumerate_orbit(&gens, &d.exotic_circle().unwrap(), &OrbitConfig::default()).unwrap();
    (gens, orbit)
}

pub fn orbits_do_not_depend_on_workers() {
    let cfg = |workers| OrbitConfig { max_depth: 4, min_diameter: 1e-3, workers, ..Default::default() };
    for_all("orbit_determinism", CASES, random_generators, |(gens, seed)| {
        let one = enumerate_orbit(gens, seed, &cfg(1)).map_err(|e| e.to_string())?;
        let eight = enumerate_orbit(gens, seed, &cfg(8)).map_err(|e| e.to_string())?;
        ensure(one.to_json_lines() == eight.to_json_lines(), || "serializations differ".into())
    });
    let d = solve_quadrilateral(3, 2.0, 1.5).unwrap();
    let gens = GeneratorSet::from_quadgroup(&d);
    let c = d.exotic_circle().unwrap();
    let big = |workers| OrbitConfig { workers, ..Default::default() };
    let a = enumerate_orbit(&gens, &c, &big(1)).unwrap().to_json_lines();
    let b = enumerate_orbit(&gens, &c, &big(8)).unwrap().to_json_lines();
    assert!(a == b, "default-depth orbits differ between 1 and 8 workers");
}

fn dedup_violation(orbit: &OrbitSet) -> Option<(usize, usize)> {
    let half = orbit.config.dedup_epsilon / 2.0;
    let mut keyed: Vec<(f64, usize)> = orbit.items.iter().enumerate().map(|(i, it)| (it.circle.a(), i)).collect();
    keyed.sort_by(|x, y| x.0.total_cmp(&y.0));
    for (j, &(a, i)) in keyed.iter().enumerate() {
        for &(b, k) in &keyed[j + 1..] {
            if b - a >= half {
                break;
            }
            if orbit.items[i].circle.max_norm_distance(&orbit.items[k].circle) < half {
                return Some((i, k));
            }
        }
    }
    None
}

pub fn retained_items_are_separated() {
    let cfg = OrbitConfig { max_depth: 5, min_diameter: 1e-3, ..Default::default() };
    for_all("dedup_soundness", CASES, random_generators, |(gens, seed)| {
        let orbit = enumerate_orbit(gens, seed, &cfg).map_err(|e| e.to_string())?;
        ensure(dedup_violation(&orbit).is_none(), || format!("{:?} too close", dedup_violation(&orbit)))
    });
    let (_, orbit) = rich_orbit();
    assert!(dedup_violation(&orbit).is_none());
    println!("property dedup_soundness on the exotic orbit: {} items ok", orbit.len());
}

pub fn each_item_comes_from_the_previous_depth() {
    let (gens, orbit) = rich_orbit();
    for (i, it) in orbit.items.iter().enumerate() {
        match orbit.parent(i) {
            None => assert_eq!(it.depth, 0),
            Some((p, g)) => {
                let parent = &orbit.items[p];
                assert_eq!(parent.depth + 1, it.depth, "item {i}");
                let image = parent.circle.apply(&gens.maps()[g]);
                assert!(image.max_norm_distance(&it.circle) < orbit.config.dedup_epsilon, "item {i} is not g·parent");
            }
        }
    }
    println!("property depth_monotonicity: {} cases ok", orbit.len());
}

/// `λ = max_k (D_k / D_b)^{1/(k−b)}` over depths beyond the burn-in `b`.
fn decay_rate(max_diam: &[f64], burn_in: usize) -> f64 {
    (burn_in + 1..max_diam.len()).map(|k| (max_diam[k] / max_diam[burn_in]).powf(1.0 / (k - burn_in) as f64)).fold(0.0, f64::max)
}

pub fn mirror_orbit_diameters_decay_geometrically() {
    let cfg = OrbitConfig { max_depth: 10, min_diameter: 0.0, ..Default::default() };
    let mut cases = 0;
    for (n, s, t) in [(3, 2.0, 1.5), (3, 2.0, 2.0), (4, 1.5, 2.5), (6, 3.0, 1.8)] {
        let d = solve_quadrilateral(n, s, t).unwrap();
        let gens = GeneratorSet::from_quadgroup(&d);
        for mirror in d.circles {
            let orbit = enumerate_orbit(&gens, &mirror, &cfg).unwrap();
            assert!(!orbit.truncated);
            let max_diam: Vec<f64> = (0..=cfg.max_depth)
                .map(|k| orbit.at_depth(k).map(|i| i.circle.chordal_diameter()).fold(0.0, f64::max))
                .collect();
            let lambda = decay_rate(&max_diam, 4);
            assert!(lambda < 1.0, "({n}, {s}, {t}): λ = {lambda}, diameters {max_diam:?}");
            cases += orbit.len();
        }
    }
    println!("property diameter_decay: {cases} cases ok");
}

// render

pub fn viewport_round_trip() {
    for_all(
        "viewport_round_trip",
        CASES,
        |r| {
            let v = Viewport::new(complex(r, 5.0), 10f64.powf(r.gen_range(-3.0..2.0)), r.gen_range(16..4096)).unwrap();
            let z = v.center + complex(r, 1.5 * v.half_width);
            (v, z)
        },
        |(v, z)| {
            let (x, y) = v.to_pixel(*z);
            let back = v.from_pixel(x, y);
            ensure((back - z).norm() < 1e-9 * v.half_width, || format!("{z} came back as {back}"))
        },
    );
}

fn scene(r: &mut ChaCha8Rng) -> Scene {
    let circles: Vec<GenCircle> = (0..r.gen_range(1..20)).map(|_| circle(r)).collect();
    let points: Vec<ComplexPoint> = (0..r.gen_range(0..20)).map(|_| ComplexPoint::from_complex(complex(r, 2.0))).collect();
    let style = Style { stroke: "#000000".into(), stroke_width: 1.0, fill: None, point_radius: 1.0 };
    Scene {
        layers: vec![
            Layer { id: "circles".into(), items: LayerItems::Circles(circles), style: style.clone() },
            Layer { id: "points".into(), items: LayerItems::Points(points), style },
        ],
        viewport: Viewport::new(Complex64::new(0.0, 0.0), 2.5, 512).unwrap(),
    }
}

pub fn svg_output_is_deterministic() {
    for_all("svg_determinism", CASES, |r| {
        let seed: u64 = r.gen();
        seed
    }, |seed| {
        use rand::SeedableRng;
        let a = render_svg(&scene(&mut ChaCha8Rng::seed_from_u64(*seed)));
        let b = render_svg(&scene(&mut ChaCha8Rng::seed_from_u64(*seed)));
        ensure(a == b, || "two renders differ".into())
    });
}

pub fn svg_bytes_are_pinned() {
    let style = Style { stroke: "#000000".into(), stroke_width: 1.0, fill: None, point_radius: 0.0 };
    let scene = Scene {
        layers: vec![Layer {
            id: "c".into(),
            items: LayerItems::Circles(vec![
                GenCircle::from_center_radius(Complex64::new(0.1, 0.2), 1.0 / 3.0).unwrap(),
                GenCircle::real_axis(),
            ]),
            style,
        }],
        viewport: Viewport::new(Complex64::new(0.0, 0.0), 1.0, 64).unwrap(),
    };
    let svg = render_svg(&scene);
    assert_eq!(svg, include_str!("../data/pinned.svg"));
}

/// Every property with its name, in a fixed order.
pub const ALL: &[(&str, fn())] = &[
    ("inversion_is_an_involution", inversion_is_an_involution),
    ("maps_carry_circles_to_circles", maps_carry_circles_to_circles),
    ("normalization_is_idempotent", normalization_is_idempotent),
    ("inversive_distance_is_conformally_invariant", inversive_distance_is_conformally_invariant),
    ("classification_is_conjugation_invariant", classification_is_conjugation_invariant),
    ("translation_length_is_a_conjugacy_invariant", translation_length_is_a_conjugacy_invariant),
    ("inner_product_is_inversive_distance", inner_product_is_inversive_distance),
    ("inner_product_detects_intersection", inner_product_detects_intersection),
    ("reflection_preserves_inner_products", reflection_preserves_inner_products),
    ("constructed_data_satisfy_invariants", constructed_data_satisfy_invariants),
    ("eta_moves_c_and_stabilizes_limit_circle", eta_moves_c_and_stabilizes_limit_circle),
    ("exotic_orbit_never_reaches_limit_circle", exotic_orbit_never_reaches_limit_circle),
    ("limit_set_flattens_towards_the_fuchsian_boundary", limit_set_flattens_towards_the_fuchsian_boundary),
    ("lunchbox_vectors_match_transcriptions", lunchbox_vectors_match_transcriptions),
    ("expansion_identity", expansion_identity),
    ("quintic_is_negative_on_the_interval", quintic_is_negative_on_the_interval),
    ("t0_is_the_only_root", t0_is_the_only_root),
    ("unit_residual_changes_sign_once", unit_residual_changes_sign_once),
    ("orbits_do_not_depend_on_workers", orbits_do_not_depend_on_workers),
    ("retained_items_are_separated", retained_items_are_separated),
    ("each_item_comes_from_the_previous_depth", each_item_comes_from_the_previous_depth),
    ("mirror_orbit_diameters_decay_geometrically", mirror_orbit_diameters_decay_geometrically),
    ("viewport_round_trip", viewport_round_trip),
    ("svg_output_is_deterministic", svg_output_is_deterministic),
    ("svg_bytes_are_pinned", svg_bytes_are_pinned),
];
