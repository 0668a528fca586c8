//! Real polynomials with root bracketing and Sturm counting.

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    /// Ascending coefficients: `coeffs[i]` multiplies `x^i`.
    coeffs: Vec<f64>,
}

/// Bracket `[lo, hi]` containing a sign change, with the refined root.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub root: f64,
    pub steps: usize,
}

impl Poly {
    pub fn new(coeffs: &[f64]) -> Self {
        let mut p = Poly { coeffs: coeffs.to_vec() };
        p.trim(0.0);
        p
    }

    fn trim(&mut self, tol: f64) {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |c| c.abs() <= tol) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::new(&[0.0]);
        }
        let d: Vec<f64> = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect();
        Poly::new(&d)
    }

    /// Remainder of Euclidean division by `divisor`.
    fn rem(&self, divisor: &Poly) -> Poly {
        let mut r = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.coeffs[dd];
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while r.len() > dd && r.len() > 0 {
            let k = r.len() - 1;
            let q = r[k] / lead;
            for j in 0..=dd {
                r[k - dd + j] -= q * divisor.coeffs[j];
            }
            r.pop();
        }
        let mut p = Poly { coeffs: if r.is_empty() { vec![0.0] } else { r } };
        p.trim(1e-12 * scale.max(1.0));
        p
    }

    /// Sturm chain `p, p', −rem(p, p'), …`.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() && chain.last().unwrap().degree() > 0 {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Poly::new(&r.coeffs.iter().map(|c| -c).collect::<Vec<_>>()));
        }
        chain
    }

    /// Number of distinct real roots in `(a, b]` by Sturm's theorem.
    pub fn count_roots(&self, a: f64, b: f64) -> usize {
        let chain = self.sturm_chain();
        let changes = |x: f64| {
            let signs: Vec<f64> = chain.iter().map(|p| p.eval(x)).filter(|v| *v != 0.0).collect();
            signs.windows(2).filter(|w| w[0].signum() != w[1].signum()).count()
        };
        changes(a).saturating_sub(changes(b))
    }

    /// Bisection on a sign-changing bracket down to `tol`, then Newton
    /// polish kept only if it stays inside the final bracket.
    pub fn bisect_root(&self, lo: f64, hi: f64, tol: f64) -> Option<RootBracket> {
        let (mut lo, mut hi) = (lo, hi);
        let (mut flo, fhi) = (self.eval(lo), self.eval(hi));
        if flo == 0.0 {
            return Some(RootBracket { lo, hi: lo, root: lo, steps: 0 });
        }
        if fhi == 0.0 {
            return Some(RootBracket { lo: hi, hi, root: hi, steps: 0 });
        }
        if flo.signum() == fhi.signum() {
            return None;
        }
        let mut steps = 0;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = self.eval(mid);
            steps += 1;
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        let dp = self.derivative();
        let mut root = 0.5 * (lo + hi);
        for _ in 0..3 {
            let d = dp.eval(root);
            if d == 0.0 {
                break;
            }
            let next = root - self.eval(root) / d;
            if next < lo || next > hi {
                break;
            }
            root = next;
        }
        Some(RootBracket { lo, hi, root, steps })
    }
}
