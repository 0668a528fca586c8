//! Verification checks reported by the commands. Names are stable.

use serde_json::json;

use super::report::Check;
use crate::error::Result;
use crate::lunchbox::{self, SignVariant, TangencyReport};
use crate::moebius::{circle_distance, ComplexPoint, GenCircle};
use crate::orbit::{self, closure_check, trace_curve, GeneratorSet, LimitSetApprox, OrbitSet};
use crate::quadgroup::{fuchsian_defect, AccumulationReport, QuadGroupData};

pub const CURVE_GAP: f64 = 0.02;
pub const MIN_CURVE_POINTS: usize = 1000;

pub fn t0_reproduction() -> (Check, serde_json::Value) {
    let cert = lunchbox::find_t0();
    let closed = lunchbox::closed_form_t0();
    let agree = (cert.root - closed).abs();
    let cubic = lunchbox::cubic(cert.root).abs();
    let passed = agree < 1e-12
        && (cert.root - 1.202).abs() < 5e-4
        && (closed - 1.202).abs() < 5e-4
        && cubic < 1e-10
        && cert.sturm_count == 1;
    let detail = format!("bisection {} closed form {closed} |diff| {agree:e} |cubic| {cubic:e}", cert.root);
    let results = json!({
        "t0_bisection": cert.root,
        "t0_closed_form": closed,
        "bracket": cert.bracket,
        "sturm_count": cert.sturm_count,
        "strictly_increasing": cert.strictly_increasing,
        "cubic_at_t0": lunchbox::cubic(cert.root),
    });
    (Check::new("t0_reproduction", passed, Some(agree.max(cubic)), detail), results)
}

pub fn h_endpoint_values() -> (Check, serde_json::Value) {
    let (h1, h2) = (lunchbox::h_poly(1.0), lunchbox::h_poly(2.0));
    let samples = 1000;
    let worst = (0..samples)
        .map(|i| lunchbox::h_poly(1.0 + (i as f64 + 0.5) / samples as f64))
        .fold(f64::NEG_INFINITY, f64::max);
    let passed = h1 == -5184.0 && h2 == -8281.0 && worst < 0.0;
    let detail = format!("h(1) = {h1}, h(2) = {h2}, max over {samples} samples {worst}");
    (Check::new("h_endpoint_values", passed, None, detail), json!({"h1": h1, "h2": h2, "max_sampled": worst}))
}

pub fn residual_suite(t: f64) -> Result<(Check, TangencyReport)> {
    let r = lunchbox::verify_exotic_tangency(t)?;
    let worst = r
        .orthogonality
        .iter()
        .map(|x| x.abs())
        .fold(r.unit_residual.abs(), f64::max)
        .max((r.tangency_inner.abs() - 1.0).abs())
        .max((r.boundary_inversive_distance - 1.0).abs());
    let detail = format!(
        "t {t}: unit {:e}, orthogonality {:?}, tangency {:.12}, boundary inversive distance {:.12}",
        r.unit_residual, r.orthogonality, r.tangency_inner, r.boundary_inversive_distance
    );
    Ok((Check::new("residual_suite", r.passed(), Some(worst), detail), r))
}

pub fn factorization_identity() -> Result<(Check, serde_json::Value)> {
    let mut worst = 0.0f64;
    let mut variants = Vec::new();
    let mut rows = Vec::new();
    for i in 0..20 {
        let t = 1.0 + (i as f64 + 0.5) / 20.0;
        let r = lunchbox::factor_identity_check(t)?;
        worst = worst.max(r.residual());
        variants.push(r.matching);
        rows.push(r);
    }
    let all_plus = variants.iter().all(|v| *v == SignVariant::Plus);
    let passed = worst < 1e-9 && all_plus;
    let detail = format!("max relative residual {worst:e} over 20 samples, matching sign variant {}", if all_plus { "+" } else { "mixed" });
    Ok((
        Check::new("factorization_identity", passed, Some(worst), detail),
        json!({"matching_variant": if all_plus { "plus" } else { "mixed" }, "samples": rows}),
    ))
}

pub fn quad_invariants(d: &QuadGroupData) -> Check {
    let inv = d.invariants();
    let failed: Vec<&str> = inv.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    let worst = inv.iter().filter(|c| c.residual.is_finite()).map(|c| c.residual).fold(0.0, f64::max);
    let detail = if failed.is_empty() { format!("{} invariants hold", inv.len()) } else { format!("failed: {}", failed.join(", ")) };
    Check::new("quad_invariants", failed.is_empty(), Some(worst), detail)
}

pub fn prop21_boundary(d: &QuadGroupData) -> Check {
    let def = fuchsian_defect(d).abs();
    let orth = d.orthogonality_defect();
    Check::new(
        "prop21_boundary",
        d.is_fuchsian() && def < 1e-9 && orth < 1e-9,
        Some(def.max(orth)),
        format!("defect {def:e}, common orthogonal circle residual {orth:e}"),
    )
}

pub fn fuchsian_round_limit_set(d: &QuadGroupData, ls: &LimitSetApprox) -> Result<Check> {
    let (_, fit) = orbit::best_fit_circle(&ls.points)?;
    let common = orbit::max_deviation(&ls.points, &d.common_orthogonal());
    Ok(Check::new(
        "fuchsian_round_limit_set",
        fit < 1e-3 && common < 1e-3 && !ls.truncated,
        Some(fit.max(common)),
        format!("{} points, best-fit deviation {fit:e}, deviation from |z|² = 1 − r13² {common:e}", ls.points.len()),
    ))
}

pub fn quasicircle_not_round(ls: &LimitSetApprox) -> Result<Check> {
    let (_, fit) = orbit::best_fit_circle(&ls.points)?;
    Ok(Check::new("quasicircle_not_round", fit > 1e-2, Some(fit), format!("best-fit deviation {fit:e}")))
}

pub fn limit_set_closed_curve(points: &[ComplexPoint]) -> Check {
    let tr = trace_curve(points, CURVE_GAP, ComplexPoint::ZERO);
    Check::new(
        "limit_set_closed_curve",
        tr.points > MIN_CURVE_POINTS && tr.is_closed_curve(CURVE_GAP),
        Some(tr.max_neighbor_gap),
        format!(
            "{} points, max nearest-neighbour gap {:.6}, connected {}, encloses origin {}",
            tr.points, tr.max_neighbor_gap, tr.connected, tr.encloses_center
        ),
    )
}

pub fn accumulation(d: &QuadGroupData, rep: &AccumulationReport) -> Check {
    let iso12 = d.isolation_radius(12);
    let iso8 = d.isolation_radius(8);
    let stable = iso8 > 0.0 && (iso12 - iso8).abs() <= 0.1 * iso8;
    let last = rep.distances.last().map(|x| x.1).unwrap_or(f64::NAN);
    let passed = rep.strictly_decreasing_from_2
        && rep.all_positive
        && last < 1e-8
        && rep.converged
        && rep.ratio_relative_error < 0.05
        && stable;
    Check::new(
        "accumulation",
        passed,
        Some(last),
        format!(
            "d({}) = {last:e}, strictly decreasing {}, ratio {:.9} vs λ⁻² {:.9} (rel. error {:e}), isolation radius {iso8:.6} (depth 8) {iso12:.6} (depth 12)",
            rep.distances.len(),
            rep.strictly_decreasing_from_2,
            rep.ratio_at_probe,
            rep.predicted_ratio,
            rep.ratio_relative_error
        ),
    )
}

/// Minimum `circle_distance` to `target` among the items of each depth.
pub fn min_distance_by_depth(orbit: &OrbitSet, target: &GenCircle) -> Vec<f64> {
    let max = orbit.items.iter().map(|i| i.depth).max().unwrap_or(0);
    (0..=max)
        .map(|k| orbit.at_depth(k).map(|i| circle_distance(&i.circle, target)).fold(f64::INFINITY, f64::min))
        .collect()
}

pub fn orbit_accumulates(mins: &[f64]) -> Check {
    let finite: Vec<f64> = mins.iter().cloned().filter(|x| x.is_finite()).collect();
    let decreasing = finite.len() >= 2 && finite.windows(2).all(|w| w[1] < w[0]);
    Check::new(
        "orbit_accumulates_on_limit_circle",
        decreasing,
        finite.last().copied(),
        format!("min distance to C′ by depth: {finite:?}"),
    )
}

/// Closure on a sample plus exhaustive dedup soundness.
pub fn orbit_closure(gens: &GeneratorSet, orbit: &OrbitSet, sample: usize, seed: u64) -> Result<Check> {
    let rep = closure_check(gens, orbit, sample, seed)?;
    let sound = dedup_sound(orbit);
    Ok(Check::new(
        "orbit_closure",
        rep.misses == 0 && sound,
        Some(rep.misses as f64),
        format!(
            "{} sampled, {} misses, {} pruned images skipped, dedup sound {sound}",
            rep.sampled, rep.misses, rep.pruned_skips
        ),
    ))
}

/// No two retained items within `dedupEpsilon/2` in coefficient max-norm.
pub fn dedup_sound(orbit: &OrbitSet) -> bool {
    let half = orbit.config.dedup_epsilon / 2.0;
    let mut keyed: Vec<(f64, usize)> = orbit.items.iter().enumerate().map(|(i, it)| (it.circle.coefficients()[0], i)).collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (j, (a, i)) in keyed.iter().enumerate() {
        for (b, k) in keyed[j + 1..].iter() {
            if b - a >= half {
                break;
            }
            if orbit.items[*i].circle.max_norm_distance(&orbit.items[*k].circle) < half {
                return false;
            }
        }
    }
    true
}
