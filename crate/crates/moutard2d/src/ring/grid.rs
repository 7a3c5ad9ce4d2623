//! Fast evaluation of a ring element on tensor grids.
//!
//! Every term factors as an x-only monomial times a y-only monomial, so an
//! element evaluates on an `nx × ny` grid through two small dense products:
//! a table of distinct x-factors at the grid abscissae, the coefficient
//! matrix, and a table of distinct y-factors. This is what makes sampling
//! `P`, `Q` and the eigenfunctions on half-million-node grids cheap.

use super::{RingElement, TrigFactor};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

/// A ring element factorized for tensor-grid evaluation.
pub struct GridEvaluator {
    xfactors: Vec<(u32, TrigFactor)>,
    yfactors: Vec<(u32, TrigFactor)>,
    /// (x-factor index, y-factor index, coefficient) triplets.
    triplets: Vec<(usize, usize, f64)>,
}

impl GridEvaluator {
    pub fn new(elem: &RingElement) -> Self {
        let mut xindex: BTreeMap<(u32, TrigFactor), usize> = BTreeMap::new();
        let mut yindex: BTreeMap<(u32, TrigFactor), usize> = BTreeMap::new();
        let mut triplets = Vec::with_capacity(elem.num_terms());
        for term in elem.terms() {
            let xkey = (term.key.xdeg, term.key.xtrig);
            let ykey = (term.key.ydeg, term.key.ytrig);
            let nx = xindex.len();
            let ix = *xindex.entry(xkey).or_insert(nx);
            let ny = yindex.len();
            let iy = *yindex.entry(ykey).or_insert(ny);
            triplets.push((ix, iy, term.coeff.to_f64().unwrap_or(f64::NAN)));
        }
        let mut xfactors = vec![(0, TrigFactor::One); xindex.len()];
        for (key, idx) in xindex {
            xfactors[idx] = key;
        }
        let mut yfactors = vec![(0, TrigFactor::One); yindex.len()];
        for (key, idx) in yindex {
            yfactors[idx] = key;
        }
        GridEvaluator {
            xfactors,
            yfactors,
            triplets,
        }
    }

    /// Evaluate on the tensor grid `xs × ys`.
    ///
    /// The result is row-major over `ys`: entry `iy * xs.len() + ix` holds
    /// the value at `(xs[ix], ys[iy])`.
    pub fn eval_grid(&self, xs: &[f64], ys: &[f64]) -> Vec<f64> {
        let nx = xs.len();
        let ny = ys.len();
        let fx = self.xfactors.len();

        let xtab = factor_table(&self.xfactors, xs);
        let ytab = factor_table(&self.yfactors, ys);

        // bridge[a][iy] = sum over triplets with x-factor a of c * ytab[b][iy]
        let mut bridge = vec![0.0f64; fx * ny];
        for &(a, b, c) in &self.triplets {
            let src = &ytab[b * ny..(b + 1) * ny];
            let dst = &mut bridge[a * ny..(a + 1) * ny];
            for (d, s) in dst.iter_mut().zip(src) {
                *d += c * s;
            }
        }

        let mut out = vec![0.0f64; nx * ny];
        for iy in 0..ny {
            let row = &mut out[iy * nx..(iy + 1) * nx];
            for a in 0..fx {
                let w = bridge[a * ny + iy];
                if w == 0.0 {
                    continue;
                }
                let col = &xtab[a * nx..(a + 1) * nx];
                for (r, u) in row.iter_mut().zip(col) {
                    *r += w * u;
                }
            }
        }
        out
    }
}

/// Table of `deg/trig` factor values: `tab[f * n + i] = t_i^deg * trig(t_i)`.
fn factor_table(factors: &[(u32, TrigFactor)], ts: &[f64]) -> Vec<f64> {
    let n = ts.len();
    let mut tab = vec![0.0f64; factors.len() * n];
    for (f, &(deg, trig)) in factors.iter().enumerate() {
        let row = &mut tab[f * n..(f + 1) * n];
        for (slot, &t) in row.iter_mut().zip(ts) {
            let trig_val = match trig {
                TrigFactor::One => 1.0,
                TrigFactor::Cos(k) => (k as f64 * t).cos(),
                TrigFactor::Sin(k) => (k as f64 * t).sin(),
            };
            *slot = t.powi(deg as i32) * trig_val;
        }
    }
    tab
}
