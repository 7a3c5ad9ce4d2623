//! Numeric Helmholtz solutions as evaluation oracles.
//!
//! A [`NumericSolution`] evaluates the value and all partial derivatives up
//! to order two at arbitrary points. Family members differentiate the closed
//! form `g_m(λ, z, z̄) · exp(i k/2 (λz + z̄/λ))` in exact complex arithmetic
//! before taking the real or imaginary part, so the derivative oracles carry
//! no finite-difference error.

use super::{FamilyParams, HelmholtzError, Part, MAX_FAMILY_ORDER};
use crate::ring::RingElement;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Value and partial derivatives of a solution at one point.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolutionJet {
    pub value: f64,
    pub dx: f64,
    pub dy: f64,
    pub dxx: f64,
    pub dxy: f64,
    pub dyy: f64,
}

/// A Helmholtz solution given by an oracle for its 2-jet.
#[derive(Clone)]
pub struct NumericSolution {
    k: f64,
    sources: Vec<(f64, Source)>,
}

#[derive(Clone)]
enum Source {
    Family(Arc<FamilyEval>),
    Ring(Arc<RingJet>),
}

impl NumericSolution {
    /// Wrap an exact ring element (a `k = 1` solution) as a numeric oracle;
    /// derivatives are differentiated exactly in the ring first.
    pub fn from_ring_element(elem: &RingElement) -> NumericSolution {
        let dx = elem.diff_x();
        let dy = elem.diff_y();
        let jet = RingJet {
            dxx: dx.diff_x(),
            dxy: dx.diff_y(),
            dyy: dy.diff_y(),
            dx,
            dy,
            value: elem.clone(),
        };
        NumericSolution {
            k: 1.0,
            sources: vec![(1.0, Source::Ring(Arc::new(jet)))],
        }
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Provenance: the weighted family members behind this solution
    /// (`None` weight-entries for wrapped exact elements are omitted).
    pub fn provenance(&self) -> Vec<(f64, FamilyParams)> {
        self.sources
            .iter()
            .filter_map(|(w, s)| match s {
                Source::Family(f) => Some((*w, f.params)),
                Source::Ring(_) => None,
            })
            .collect()
    }

    pub fn jet(&self, x: f64, y: f64) -> SolutionJet {
        let mut out = SolutionJet::default();
        for (w, source) in &self.sources {
            let j = match source {
                Source::Family(f) => f.jet(x, y),
                Source::Ring(r) => r.jet(x, y),
            };
            out.value += w * j.value;
            out.dx += w * j.dx;
            out.dy += w * j.dy;
            out.dxx += w * j.dxx;
            out.dxy += w * j.dxy;
            out.dyy += w * j.dyy;
        }
        out
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.jet(x, y).value
    }

    pub(super) fn combine(
        terms: &[(f64, &NumericSolution)],
    ) -> Result<NumericSolution, HelmholtzError> {
        let k = terms
            .first()
            .map(|(_, s)| s.k)
            .expect("combination of zero solutions");
        let mut sources = Vec::new();
        for (w, sol) in terms {
            if (sol.k - k).abs() > 1e-12 {
                return Err(HelmholtzError::MismatchedK {
                    expected: k,
                    got: sol.k,
                });
            }
            for (wi, src) in &sol.sources {
                sources.push((w * wi, src.clone()));
            }
        }
        Ok(NumericSolution { k, sources })
    }
}

/// Family member `part[∂ᵐ_λ exp(i k/2 (λz + z̄/λ))]` with λ substituted and
/// the prefactor polynomial differentiated symbolically in (z, z̄).
struct FamilyEval {
    params: FamilyParams,
    /// i·k·λ/2 — the ∂z log-derivative of the exponential.
    a: Complex64,
    /// i·k/(2λ) — the ∂z̄ log-derivative.
    b: Complex64,
    g: CPoly,
    gz: CPoly,
    gzb: CPoly,
    gzz: CPoly,
    gzzb: CPoly,
    gzbzb: CPoly,
}

/// Polynomial in (z, z̄) with complex coefficients.
type CPoly = Vec<(u32, u32, Complex64)>;

/// Construct a numeric family member; λ must lie on the unit circle.
pub fn family_numeric(params: FamilyParams) -> Result<NumericSolution, HelmholtzError> {
    let modulus = params.lambda.norm();
    if (modulus - 1.0).abs() > 1e-12 {
        return Err(HelmholtzError::OffUnitCircle { modulus });
    }
    family_numeric_unchecked(params)
}

/// Off-circle variant: the family member still solves the Helmholtz
/// equation, but grows exponentially in some direction and cannot feed a
/// decaying construction. Only for deliberate experiments.
pub fn family_numeric_off_circle(params: FamilyParams) -> Result<NumericSolution, HelmholtzError> {
    family_numeric_unchecked(params)
}

fn family_numeric_unchecked(params: FamilyParams) -> Result<NumericSolution, HelmholtzError> {
    if params.m > MAX_FAMILY_ORDER {
        return Err(HelmholtzError::OrderTooLarge {
            m: params.m,
            max: MAX_FAMILY_ORDER,
        });
    }
    // g_0 = 1, g_{j+1} = ∂λ g_j + g_j (ik/2)(z − z̄ λ⁻²), carried as a
    // Laurent polynomial in (z, z̄, λ⁻¹) until λ is substituted.
    let ik2 = Complex64::new(0.0, params.k / 2.0);
    let mut g: BTreeMap<(u32, u32, u32), Complex64> = BTreeMap::new();
    g.insert((0, 0, 0), Complex64::new(1.0, 0.0));
    for _ in 0..params.m {
        let mut next: BTreeMap<(u32, u32, u32), Complex64> = BTreeMap::new();
        for (&(za, zb, p), &c) in &g {
            if p > 0 {
                *next.entry((za, zb, p + 1)).or_default() += -(p as f64) * c;
            }
            *next.entry((za + 1, zb, p)).or_default() += c * ik2;
            *next.entry((za, zb + 1, p + 2)).or_default() -= c * ik2;
        }
        g = next;
    }
    let lam_inv = params.lambda.inv();
    let mut poly: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
    for (&(za, zb, p), &c) in &g {
        *poly.entry((za, zb)).or_default() += c * lam_inv.powu(p);
    }
    let g: CPoly = poly.into_iter().map(|((a, b), c)| (a, b, c)).collect();
    let gz = cpoly_dz(&g);
    let gzb = cpoly_dzb(&g);
    let eval = FamilyEval {
        params,
        a: ik2 * params.lambda,
        b: ik2 * lam_inv,
        gzz: cpoly_dz(&gz),
        gzzb: cpoly_dzb(&gz),
        gzbzb: cpoly_dzb(&gzb),
        g,
        gz,
        gzb,
    };
    Ok(NumericSolution {
        k: params.k,
        sources: vec![(1.0, Source::Family(Arc::new(eval)))],
    })
}

fn cpoly_dz(p: &CPoly) -> CPoly {
    p.iter()
        .filter(|(a, _, _)| *a > 0)
        .map(|&(a, b, c)| (a - 1, b, c * a as f64))
        .collect()
}

fn cpoly_dzb(p: &CPoly) -> CPoly {
    p.iter()
        .filter(|(_, b, _)| *b > 0)
        .map(|&(a, b, c)| (a, b - 1, c * b as f64))
        .collect()
}

fn cpoly_eval(p: &CPoly, z: Complex64, zb: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(a, b, c) in p {
        acc += c * z.powu(a) * zb.powu(b);
    }
    acc
}

impl FamilyEval {
    fn jet(&self, x: f64, y: f64) -> SolutionJet {
        let z = Complex64::new(x, y);
        let zb = z.conj();
        let phase = self.a * z + self.b * zb;
        let exp = phase.exp();
        let (a, b) = (self.a, self.b);

        let g = cpoly_eval(&self.g, z, zb);
        let gz = cpoly_eval(&self.gz, z, zb);
        let gzb = cpoly_eval(&self.gzb, z, zb);
        let gzz = cpoly_eval(&self.gzz, z, zb);
        let gzzb = cpoly_eval(&self.gzzb, z, zb);
        let gzbzb = cpoly_eval(&self.gzbzb, z, zb);

        let f = g * exp;
        let fz = (gz + a * g) * exp;
        let fzb = (gzb + b * g) * exp;
        let fzz = (gzz + 2.0 * a * gz + a * a * g) * exp;
        let fzbzb = (gzbzb + 2.0 * b * gzb + b * b * g) * exp;
        let fzzb = (gzzb + a * gzb + b * gz + a * b * g) * exp;

        let i = Complex64::new(0.0, 1.0);
        let take = |c: Complex64| match self.params.part {
            Part::Real => c.re,
            Part::Imag => c.im,
        };
        SolutionJet {
            value: take(f),
            dx: take(fz + fzb),
            dy: take(i * (fz - fzb)),
            dxx: take(fzz + 2.0 * fzzb + fzbzb),
            dxy: take(i * (fzz - fzbzb)),
            dyy: take(-(fzz - 2.0 * fzzb + fzbzb)),
        }
    }
}

/// Exact-element jet: the element and its five derivative elements.
struct RingJet {
    value: RingElement,
    dx: RingElement,
    dy: RingElement,
    dxx: RingElement,
    dxy: RingElement,
    dyy: RingElement,
}

impl RingJet {
    fn jet(&self, x: f64, y: f64) -> SolutionJet {
        SolutionJet {
            value: self.value.eval(x, y),
            dx: self.dx.eval(x, y),
            dy: self.dy.eval(x, y),
            dxx: self.dxx.eval(x, y),
            dxy: self.dxy.eval(x, y),
            dyy: self.dyy.eval(x, y),
        }
    }
}
