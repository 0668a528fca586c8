//! Breadth-first orbit enumeration for groups generated by circle
//! inversions and Möbius maps, limit-set point clouds, and closure checks.
//!
//! Each depth is expanded in parallel and then merged in a single
//! sequential pass, so the result does not depend on the worker count.

use std::collections::HashMap;
use std::io::Write;

use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::{point_circle_distance, Classification, ComplexPoint, GenCircle, MoebiusMap};
use crate::quadgroup::QuadGroupData;

pub const INVOLUTION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorSpec {
    Inversion { circle: GenCircle },
    Mobius(MoebiusMap),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GeneratorFile {
    #[serde(default = "schema_one")]
    schema: u32,
    generators: Vec<GeneratorSpec>,
    #[serde(default)]
    labels: Vec<String>,
}

fn schema_one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    specs: Vec<GeneratorSpec>,
    maps: Vec<MoebiusMap>,
    labels: Vec<String>,
    involution: Vec<bool>,
}

impl GeneratorSet {
    pub fn new(specs: Vec<GeneratorSpec>, labels: Vec<String>) -> Result<Self> {
        if specs.is_empty() {
            return Err(Error::InvalidGenerators("generator list is empty".into()));
        }
        let labels = if labels.is_empty() {
            (0..specs.len()).map(|i| format!("g{i}")).collect()
        } else if labels.len() != specs.len() {
            return Err(Error::InvalidGenerators(format!(
                "{} labels for {} generators",
                labels.len(),
                specs.len()
            )));
        } else {
            labels
        };
        let maps: Vec<MoebiusMap> = specs
            .iter()
            .map(|g| match g {
                GeneratorSpec::Inversion { circle } => circle.inversion(),
                GeneratorSpec::Mobius(m) => *m,
            })
            .collect();
        let involution: Vec<bool> = maps.iter().map(|m| m.compose(m).is_identity(INVOLUTION_TOL)).collect();
        for (i, m) in maps.iter().enumerate() {
            if m.orientation().is_anti() && !involution[i] {
                return Err(Error::InvalidGenerators(format!(
                    "antiholomorphic generator {} is not an involution",
                    labels[i]
                )));
            }
        }
        Ok(GeneratorSet { specs, maps, labels, involution })
    }

    pub fn inversions(circles: &[GenCircle], labels: Vec<String>) -> Result<Self> {
        Self::new(circles.iter().map(|c| GeneratorSpec::Inversion { circle: *c }).collect(), labels)
    }

    /// Reflections in the four sides, labelled `t1`..`t4`.
    pub fn from_quadgroup(d: &QuadGroupData) -> Self {
        Self::inversions(&d.circles, (1..=4).map(|i| format!("t{i}")).collect()).expect("mirrors are valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GeneratorFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidGenerators(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        if file.schema != 1 {
            return Err(Error::InvalidGenerators(format!("unsupported schema {}", file.schema)));
        }
        Self::new(file.generators, file.labels)
    }

    pub fn to_json(&self) -> String {
        let file = GeneratorFile { schema: 1, generators: self.specs.clone(), labels: self.labels.clone() };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[MoebiusMap] {
        &self.maps
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_involution(&self, i: usize) -> bool {
        self.involution[i]
    }

    /// Mirrors of the inversion generators, or the unit circle if there are none.
    fn mirrors(&self) -> Vec<GenCircle> {
        let m: Vec<GenCircle> = self
            .specs
            .iter()
            .filter_map(|g| match g {
                GeneratorSpec::Inversion { circle } => Some(*circle),
                GeneratorSpec::Mobius(_) => None,
            })
            .collect();
        if m.is_empty() {
            vec![GenCircle::unit_circle()]
        } else {
            m
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct OrbitConfig {
    pub max_depth: usize,
    pub min_diameter: f64,
    pub dedup_epsilon: f64,
    pub max_items: usize,
    /// Circles below this chordal diameter become limit-set points.
    pub limit_point_diameter: f64,
    /// Worker threads; 0 picks the machine default. Never affects output,
    /// so it is left out of serialized orbits.
    #[serde(skip_serializing)]
    pub workers: usize,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            max_depth: 12,
            min_diameter: 1e-4,
            dedup_epsilon: 1e-9,
            max_items: 5_000_000,
            limit_point_diameter: 2e-3,
            workers: 0,
        }
    }
}

impl OrbitConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_depth < 1 {
            return Err(Error::InvalidConfig("maxDepth must be at least 1".into()));
        }
        if !(self.min_diameter >= 0.0 && self.min_diameter < 2.0) {
            return Err(Error::InvalidConfig(format!("minDiameter {} not in [0, 2)", self.min_diameter)));
        }
        if !(self.dedup_epsilon > 0.0) {
            return Err(Error::InvalidConfig(format!("dedupEpsilon {} must be positive", self.dedup_epsilon)));
        }
        if self.max_items < 1 {
            return Err(Error::InvalidConfig("maxItems must be at least 1".into()));
        }
        if !(self.limit_point_diameter > 0.0 && self.limit_point_diameter <= 2.0) {
            return Err(Error::InvalidConfig(format!(
                "limitPointDiameter {} not in (0, 2]",
                self.limit_point_diameter
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitItem {
    pub circle: GenCircle,
    pub depth: usize,
    parent: Option<u32>,
    generator: Option<u16>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OrbitStats {
    pub per_depth: Vec<usize>,
    pub pruned: usize,
    pub dedup_hits: usize,
    pub backtrack_skips: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSet {
    pub items: Vec<OrbitItem>,
    pub stats: OrbitStats,
    pub truncated: bool,
    pub config: OrbitConfig,
    labels: Vec<String>,
}

#[derive(Serialize)]
struct OrbitHeader<'a> {
    schema: u32,
    kind: &'static str,
    items: usize,
    truncated: bool,
    config: &'a OrbitConfig,
    stats: &'a OrbitStats,
    labels: &'a [String],
}

#[derive(Serialize)]
struct ItemLine<'a> {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B_re")]
    b_re: f64,
    #[serde(rename = "B_im")]
    b_im: f64,
    #[serde(rename = "D")]
    d: f64,
    depth: usize,
    word: &'a str,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn circles(&self) -> Vec<GenCircle> {
        self.items.iter().map(|i| i.circle).collect()
    }

    pub fn at_depth(&self, depth: usize) -> impl Iterator<Item = &OrbitItem> {
        self.items.iter().filter(move |i| i.depth == depth)
    }

    /// Generator indices in application order, seed first.
    pub fn word_indices(&self, index: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = index;
        while let (Some(p), Some(g)) = (self.items[cur].parent, self.items[cur].generator) {
            out.push(g as usize);
            cur = p as usize;
        }
        out.reverse();
        out
    }

    /// The generating word as a composition, last applied generator first.
    pub fn word(&self, index: usize) -> String {
        let w = self.word_indices(index);
        w.iter().rev().map(|g| self.labels[*g].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// Index of the item that produced `index`, if any.
    pub fn parent(&self, index: usize) -> Option<(usize, usize)> {
        let it = &self.items[index];
        it.parent.zip(it.generator).map(|(p, g)| (p as usize, g as usize))
    }

    /// Header line followed by one JSON object per item.
    pub fn write_json_lines(&self, out: &mut impl Write) -> std::io::Result<()> {
        let header = OrbitHeader {
            schema: 1,
            kind: "orbit_set",
            items: self.items.len(),
            truncated: self.truncated,
            config: &self.config,
            stats: &self.stats,
            labels: &self.labels,
        };
        serde_json::to_writer(&mut *out, &header)?;
        out.write_all(b"\n")?;
        for (i, it) in self.items.iter().enumerate() {
            let [a, b_re, b_im, d] = it.circle.coefficients();
            let word = self.word(i);
            serde_json::to_writer(&mut *out, &ItemLine { a, b_re, b_im, d, depth: it.depth, word: &word })?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        self.write_json_lines(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// Retained item within `dedupEpsilon` of `c`, if any.
    pub fn find(&self, c: &GenCircle) -> Option<usize> {
        let mut index = CircleIndex::new(self.config.dedup_epsilon);
        for (i, it) in self.items.iter().enumerate() {
            index.insert(&it.circle, i as u32);
        }
        index.find(c, &self.items).map(|i| i as usize)
    }
}

/// Spatial hash on canonical coefficients with cells of width `2ε`; a
/// point within max-norm `ε` of a query lies in one of 16 cells.
struct CircleIndex {
    eps: f64,
    cells: HashMap<[i64; 4], Vec<u32>>,
}

impl CircleIndex {
    fn new(eps: f64) -> Self {
        CircleIndex { eps, cells: HashMap::new() }
    }

    fn cell(&self, x: [f64; 4]) -> [i64; 4] {
        x.map(|v| (v / (2.0 * self.eps)).floor() as i64)
    }

    fn insert(&mut self, c: &GenCircle, id: u32) {
        let key = self.cell(c.coefficients());
        self.cells.entry(key).or_default().push(id);
    }

    fn find(&self, c: &GenCircle, items: &[OrbitItem]) -> Option<u32> {
        let x = c.coefficients();
        let base = self.cell(x);
        let step: [i64; 4] = std::array::from_fn(|i| {
            let frac = x[i] / (2.0 * self.eps) - base[i] as f64;
            if frac >= 0.5 {
                1
            } else {
                -1
            }
        });
        for mask in 0..16u32 {
            let mut key = base;
            for i in 0..4 {
                if mask & (1 << i) != 0 {
                    key[i] += step[i];
                }
            }
            if let Some(ids) = self.cells.get(&key) {
                for &id in ids {
                    if items[id as usize].circle.max_norm_distance(c) < self.eps {
                        return Some(id);
                    }
                }
            }
        }
        None
    }
}

struct Candidate {
    circle: GenCircle,
    parent: u32,
    generator: u16,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))
}

/// Outcome of one breadth-first run from several seeds.
struct Bfs {
    items: Vec<OrbitItem>,
    stats: OrbitStats,
    truncated: bool,
    /// Images that fell below the leaf diameter, in deterministic order.
    leaves: Vec<GenCircle>,
    /// Items at the final depth still above the leaf diameter.
    unresolved: usize,
}

/// `leaf_diameter` splits off circles that are recorded but not expanded.
fn bfs(gens: &GeneratorSet, seeds: &[GenCircle], cfg: &OrbitConfig, leaf_diameter: Option<f64>) -> Result<Bfs> {
    cfg.validate()?;
    let pool = pool(cfg.workers)?;
    let mut items: Vec<OrbitItem> = Vec::new();
    let mut index = CircleIndex::new(cfg.dedup_epsilon);
    let mut stats = OrbitStats::default();
    let mut leaves = Vec::new();
    let mut leaf_index = CircleIndex::new(cfg.dedup_epsilon);
    let mut leaf_items: Vec<OrbitItem> = Vec::new();
    let mut truncated = false;

    let mut level: Vec<OrbitItem> = Vec::new();
    for s in seeds {
        if index.find(s, &level).is_none() {
            index.insert(s, level.len() as u32);
            level.push(OrbitItem { circle: *s, depth: 0, parent: None, generator: None });
        } else {
            stats.dedup_hits += 1;
        }
    }
    level.sort_by(|x, y| x.circle.canonical_cmp(&y.circle));
    // rebuild the index after sorting so ids match positions
    index = CircleIndex::new(cfg.dedup_epsilon);
    if level.len() > cfg.max_items {
        level.truncate(cfg.max_items);
        truncated = true;
    }
    for it in &level {
        index.insert(&it.circle, items.len() as u32);
        items.push(*it);
    }
    stats.per_depth.push(level.len());
    let mut frontier: std::ops::Range<usize> = 0..items.len();

    for depth in 1..=cfg.max_depth {
        if truncated || frontier.is_empty() {
            break;
        }
        let maps = gens.maps();
        let current = &items[frontier.clone()];
        let offset = frontier.start as u32;
        let produced: Vec<(Vec<Candidate>, usize)> = pool.install(|| {
            current
                .par_iter()
                .enumerate()
                .map(|(j, it)| {
                    let mut out = Vec::with_capacity(maps.len());
                    let mut skips = 0;
                    for (g, m) in maps.iter().enumerate() {
                        if it.generator == Some(g as u16) && gens.is_involution(g) {
                            skips += 1;
                            continue;
                        }
                        out.push(Candidate { circle: it.circle.apply(m), parent: offset + j as u32, generator: g as u16 });
                    }
                    (out, skips)
                })
                .collect()
        });

        let mut fresh: Vec<OrbitItem> = Vec::new();
        let mut fresh_index = CircleIndex::new(cfg.dedup_epsilon);
        for (cands, skips) in produced {
            stats.backtrack_skips += skips;
            for c in cands {
                let diam = c.circle.chordal_diameter();
                if diam < cfg.min_diameter {
                    stats.pruned += 1;
                    continue;
                }
                if index.find(&c.circle, &items).is_some() || fresh_index.find(&c.circle, &fresh).is_some() {
                    stats.dedup_hits += 1;
                    continue;
                }
                let item = OrbitItem { circle: c.circle, depth, parent: Some(c.parent), generator: Some(c.generator) };
                if leaf_diameter.is_some_and(|l| diam < l) {
                    if leaf_index.find(&c.circle, &leaf_items).is_none() {
                        leaf_index.insert(&c.circle, leaf_items.len() as u32);
                        leaf_items.push(item);
                    } else {
                        stats.dedup_hits += 1;
                    }
                    continue;
                }
                fresh_index.insert(&c.circle, fresh.len() as u32);
                fresh.push(item);
            }
        }
        fresh.sort_by(|x, y| x.circle.canonical_cmp(&y.circle));
        let room = cfg.max_items - items.len().min(cfg.max_items);
        if fresh.len() > room {
            fresh.truncate(room);
            truncated = true;
        }
        let start = items.len();
        for it in fresh {
            index.insert(&it.circle, items.len() as u32);
            items.push(it);
        }
        stats.per_depth.push(items.len() - start);
        frontier = start..items.len();
    }
    let unresolved = if leaf_diameter.is_some() { frontier.len() } else { 0 };
    leaf_items.sort_by(|x, y| x.depth.cmp(&y.depth).then(x.circle.canonical_cmp(&y.circle)));
    leaves.extend(leaf_items.iter().map(|i| i.circle));
    Ok(Bfs { items, stats, truncated, leaves, unresolved })
}

/// Breadth-first orbit of `seed`, sorted by depth and canonical coefficients.
pub fn enumerate_orbit(gens: &GeneratorSet, seed: &GenCircle, cfg: &OrbitConfig) -> Result<OrbitSet> {
    let run = bfs(gens, &[*seed], cfg, None)?;
    Ok(OrbitSet {
        items: run.items,
        stats: run.stats,
        truncated: run.truncated,
        config: *cfg,
        labels: gens.labels().to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSetApprox {
    pub points: Vec<ComplexPoint>,
    /// How many of `points` are fixed points of generator pairs.
    pub fixed_points: usize,
    pub truncated: bool,
    /// Circles still larger than the point diameter when the depth ran out.
    pub unresolved: usize,
    pub stats: OrbitStats,
}

/// Points near the limit set: spherical centers of orbit circles of the
/// mirrors once they shrink below `limitPointDiameter`, together with the
/// fixed points of non-elliptic products of two generators.
pub fn approximate_limit_set(gens: &GeneratorSet, cfg: &OrbitConfig) -> Result<LimitSetApprox> {
    let seeds = gens.mirrors();
    let run = bfs(gens, &seeds, cfg, Some(cfg.limit_point_diameter))?;
    let mut fixed = Vec::new();
    let maps = gens.maps();
    for i in 0..maps.len() {
        for j in (i + 1)..maps.len() {
            let m = maps[i].compose(&maps[j]);
            if !m.is_holomorphic() {
                continue;
            }
            match m.classify() {
                Classification::Hyperbolic | Classification::Loxodromic | Classification::Parabolic => {
                    let (a, r) = m.fixed_points()?;
                    fixed.push(a);
                    if r.chordal_distance(&a) > 1e-12 {
                        fixed.push(r);
                    }
                }
                _ => {}
            }
        }
    }
    let mut points: Vec<ComplexPoint> = run.leaves.iter().map(|c| c.spherical_center()).collect();
    let fixed_points = fixed.len();
    points.extend(fixed);
    Ok(LimitSetApprox {
        points,
        fixed_points,
        truncated: run.truncated,
        unresolved: run.unresolved,
        stats: run.stats,
    })
}

/// Least-squares circle on the sphere through a point cloud: the plane
/// `n·X = c` minimizing `Σ (n·Xᵢ − c)²` over unit `n`.
pub fn best_fit_circle(points: &[ComplexPoint]) -> Result<(GenCircle, f64)> {
    if points.len() < 3 {
        return Err(Error::InvalidParameters(format!("need at least 3 points, got {}", points.len())));
    }
    let xs: Vec<Vector3<f64>> = points.iter().map(|p| Vector3::from(p.to_sphere())).collect();
    let mean = xs.iter().fold(Vector3::zeros(), |a, x| a + x) / xs.len() as f64;
    let cov = xs.iter().fold(Matrix3::zeros(), |a, x| {
        let d = x - mean;
        a + d * d.transpose()
    });
    let eig = SymmetricEigen::new(cov);
    let (k, _) = eig.eigenvalues.iter().enumerate().fold((0, f64::INFINITY), |best, (i, v)| {
        if *v < best.1 {
            (i, *v)
        } else {
            best
        }
    });
    let n = eig.eigenvectors.column(k).into_owned();
    let c = n.dot(&mean);
    let circle = GenCircle::from_lorentz([c, n[0], n[1], n[2]])
        .map_err(|_| Error::InvalidParameters("point cloud does not span a circle".into()))?;
    let dev = max_deviation(points, &circle);
    Ok((circle, dev))
}

/// Largest chordal distance from a point of the cloud to `c`.
pub fn max_deviation(points: &[ComplexPoint], c: &GenCircle) -> f64 {
    points.iter().map(|p| point_circle_distance(*p, c)).fold(0.0, f64::max)
}

/// Evidence that a point cloud traces a closed curve around a center.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveTrace {
    pub points: usize,
    /// Largest chordal distance from a point to its nearest neighbour.
    pub max_neighbor_gap: f64,
    /// The graph joining points closer than `max_gap` is connected.
    pub connected: bool,
    /// Some cycle of that graph winds around the center.
    pub encloses_center: bool,
}

impl CurveTrace {
    pub fn is_closed_curve(&self, max_gap: f64) -> bool {
        self.max_neighbor_gap < max_gap && self.connected && self.encloses_center
    }
}

/// Builds the `max_gap` neighbourhood graph of the cloud, checks it is
/// connected, and looks for a fundamental cycle with nonzero winding number
/// about `center` (lifting arguments along a spanning tree).
pub fn trace_curve(points: &[ComplexPoint], max_gap: f64, center: ComplexPoint) -> CurveTrace {
    let n = points.len();
    let mut nearest = vec![f64::INFINITY; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = points[i].chordal_distance(&points[j]);
            nearest[i] = nearest[i].min(d);
            nearest[j] = nearest[j].min(d);
            if d < max_gap {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let c = center.finite().unwrap_or_default();
    let arg = |i: usize| points[i].finite().map_or(0.0, |z| (z - c).arg());
    let step = |i: usize, j: usize| {
        let mut d = arg(j) - arg(i);
        while d > std::f64::consts::PI {
            d -= std::f64::consts::TAU;
        }
        while d < -std::f64::consts::PI {
            d += std::f64::consts::TAU;
        }
        d
    };
    let mut lifted = vec![f64::NAN; n];
    let mut seen = 0;
    let mut encloses = false;
    if n > 0 {
        lifted[0] = arg(0);
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if lifted[v].is_nan() {
                    lifted[v] = lifted[u] + step(u, v);
                    seen += 1;
                    queue.push_back(v);
                } else if (lifted[u] + step(u, v) - lifted[v]).abs() > std::f64::consts::PI {
                    encloses = true;
                }
            }
        }
    }
    CurveTrace {
        points: n,
        max_neighbor_gap: if n > 1 { nearest.iter().cloned().fold(0.0, f64::max) } else { f64::INFINITY },
        connected: n > 0 && seen == n,
        encloses_center: encloses,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureReport {
    pub sampled: usize,
    pub eligible: usize,
    pub misses: usize,
    /// Sampled images below `minDiameter`, which the enumeration discards.
    pub pruned_skips: usize,
    /// Pruned images that are nonetheless present.
    pub pruned_present: usize,
}

/// Samples `(generator, item)` pairs with the item above the maximal depth
/// and checks that the image circle is in the orbit.
pub fn closure_check(gens: &GeneratorSet, orbit: &OrbitSet, sample: usize, seed: u64) -> Result<ClosureReport> {
    if orbit.truncated {
        return Err(Error::CannotCertifyClosure);
    }
    let eligible: Vec<usize> = (0..orbit.items.len()).filter(|i| orbit.items[*i].depth < orbit.config.max_depth).collect();
    let mut report = ClosureReport { sampled: 0, eligible: eligible.len(), misses: 0, pruned_skips: 0, pruned_present: 0 };
    if eligible.is_empty() {
        return Ok(report);
    }
    let mut index = CircleIndex::new(orbit.config.dedup_epsilon);
    for (i, it) in orbit.items.iter().enumerate() {
        index.insert(&it.circle, i as u32);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample {
        let item = &orbit.items[eligible[rng.gen_range(0..eligible.len())]];
        let g = rng.gen_range(0..gens.len());
        let image = item.circle.apply(&gens.maps()[g]);
        let present = index.find(&image, &orbit.items).is_some();
        report.sampled += 1;
        if image.chordal_diameter() < orbit.config.min_diameter {
            report.pruned_skips += 1;
            if present {
                report.pruned_present += 1;
            }
        } else if !present {
            report.misses += 1;
        }
    }
    Ok(report)
}
