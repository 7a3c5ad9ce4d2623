//! Solutions of the Helmholtz equation `−Δω = k²ω`.
//!
//! These are the zero modes of the background operator `−Δ − k²` and the raw
//! material of the Moutard construction. The module provides
//!
//! - the two explicit solutions `ω₁, ω₂` the worked example is built from,
//! - the plane-wave derivative family
//!   `∂ᵐ_λ exp(i k/2 (λz + z̄/λ))`, `z = x + iy`, `|λ| = 1`,
//!   in exact form ([`family_exact`], for fourth-root `λ` where the result
//!   lands in the trig-polynomial ring) and in numeric-oracle form
//!   ([`family_numeric`], any unit-modulus `λ`),
//! - linear combinations and residual checks.

mod numeric;

pub use numeric::{family_numeric, family_numeric_off_circle, NumericSolution, SolutionJet};

use crate::ring::{rat, Rat, RingElement, TrigFactor};
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on the λ-derivative order `m`. The recurrence itself is
/// exact at any order; the cap is a safety rail against runaway term counts.
pub const MAX_FAMILY_ORDER: u32 = 8;

#[derive(Debug, Error)]
pub enum HelmholtzError {
    #[error("lambda must lie on the unit circle (|lambda| = {modulus}); off-circle members grow exponentially and are gated behind family_numeric_off_circle")]
    OffUnitCircle { modulus: f64 },
    #[error("family order m = {m} exceeds the configured maximum {max}")]
    OrderTooLarge { m: u32, max: u32 },
    #[error("mismatched wavenumbers in linear combination: {expected} vs {got}")]
    MismatchedK { expected: f64, got: f64 },
    #[error("exact family members require lambda in {{1, i, -1, -i}}")]
    LambdaNotExact,
}

/// Which part of the complex family member to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Real,
    #[serde(alias = "imaginary")]
    Imag,
}

/// The four values of λ for which a family member is an exact element of
/// the trig-polynomial ring (its phase reduces to ±x or ±y).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Root4 {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Root4 {
    pub fn value(self) -> Complex64 {
        match self {
            Root4::One => Complex64::new(1.0, 0.0),
            Root4::I => Complex64::new(0.0, 1.0),
            Root4::MinusOne => Complex64::new(-1.0, 0.0),
            Root4::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    /// Exponent `r` with λ = i^r.
    fn i_power(self) -> u32 {
        match self {
            Root4::One => 0,
            Root4::I => 1,
            Root4::MinusOne => 2,
            Root4::MinusI => 3,
        }
    }

    pub const ALL: [Root4; 4] = [Root4::One, Root4::I, Root4::MinusOne, Root4::MinusI];

    pub fn from_complex(lambda: Complex64, tol: f64) -> Option<Root4> {
        Root4::ALL
            .into_iter()
            .find(|r| (r.value() - lambda).norm() <= tol)
    }
}

/// Parameters selecting one member of the plane-wave derivative family.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    /// Wavenumber; the energy of the final construction is `E = k²`.
    pub k: f64,
    /// Spectral parameter on the unit circle.
    pub lambda: Complex64,
    /// Order of the λ-derivative.
    pub m: u32,
    pub part: Part,
}

/// `ω₁ = x² cos y − y sin y + y² sin x + x cos x`.
///
/// Satisfies `−Δω₁ = ω₁` exactly. It is a linear combination of order-2
/// family members; see [`omega1_family_descriptor`].
pub fn builtin_omega1() -> RingElement {
    let x = RingElement::var_x();
    let y = RingElement::var_y();
    &(&(&x * &x) * &RingElement::cos_y(1)) - &(&y * &RingElement::sin_y(1))
        + &(&(&y * &y) * &RingElement::sin_x(1))
        + &(&x * &RingElement::cos_x(1))
}

/// `ω₂ = 4(y cos x + x sin y)`.
pub fn builtin_omega2() -> RingElement {
    (&(&RingElement::var_y() * &RingElement::cos_x(1))
        + &(&RingElement::var_x() * &RingElement::sin_y(1)))
        .scale_i64(4)
}

/// Exact family member for `k = 1` and fourth-root λ:
/// `part[∂ᵐ_λ exp(i/2 (λz + z̄/λ))]` as a ring element.
pub fn family_exact(lambda: Root4, m: u32, part: Part) -> Result<RingElement, HelmholtzError> {
    if m > MAX_FAMILY_ORDER {
        return Err(HelmholtzError::OrderTooLarge {
            m,
            max: MAX_FAMILY_ORDER,
        });
    }

    // Carry g_m symbolically as a Laurent polynomial in (z, z̄, λ⁻¹) with
    // Gaussian-rational coefficients: g_0 = 1,
    // g_{j+1} = ∂λ g_j + g_j · (i/2)(z − z̄ λ⁻²).
    let mut g: BTreeMap<(u32, u32, u32), GaussRat> = BTreeMap::new();
    g.insert((0, 0, 0), GaussRat::one());
    for _ in 0..m {
        let mut next: BTreeMap<(u32, u32, u32), GaussRat> = BTreeMap::new();
        let mut add = |key: (u32, u32, u32), val: GaussRat| {
            if val.is_zero() {
                return;
            }
            let slot = next.entry(key).or_insert_with(GaussRat::zero);
            *slot = slot.clone() + val;
            if slot.is_zero() {
                next.remove(&key);
            }
        };
        for (&(a, b, p), c) in &g {
            // ∂λ of λ^(−p)
            if p > 0 {
                add((a, b, p + 1), c.scale(&rat_int_neg(p)));
            }
            // · (i/2) z
            add((a + 1, b, p), c.mul_i().scale(&rat(1, 2)));
            // · −(i/2) z̄ λ⁻²
            add((a, b + 1, p + 2), c.mul_i().scale(&rat(-1, 2)));
        }
        g = next;
    }

    // Substitute λ = i^r, expand z^a z̄^b into x^j y^l monomials.
    let r = lambda.i_power();
    let mut poly: BTreeMap<(u32, u32), GaussRat> = BTreeMap::new();
    for (&(a, b, p), c) in &g {
        // λ^(−p) = i^(−r·p mod 4)
        let unit = GaussRat::i_pow((4 - r % 4) * p % 4);
        let base = c.clone() * unit;
        // z^a z̄^b = Σ C(a,s) C(b,t) i^s (−i)^t x^(a+b−s−t) y^(s+t)
        for s in 0..=a {
            for t in 0..=b {
                let binom = Rat::from_integer((binomial(a, s) * binomial(b, t)).into());
                let phase = GaussRat::i_pow(s % 4) * GaussRat::i_pow(neg_i_pow(t));
                let coeff = base.clone() * phase;
                let coeff = coeff.scale(&binom);
                let key = (a + b - s - t, s + t);
                let slot = poly.entry(key).or_insert_with(GaussRat::zero);
                *slot = slot.clone() + coeff;
                if slot.is_zero() {
                    poly.remove(&key);
                }
            }
        }
    }

    // Multiply by the exponential factor and take the requested part.
    // For λ = i^r the phase is: r=0 → e^{ix}, r=1 → e^{−iy}, r=2 → e^{−ix},
    // r=3 → e^{iy}.
    let (on_x, sign) = match r {
        0 => (true, 1i64),
        1 => (false, -1),
        2 => (true, -1),
        _ => (false, 1),
    };
    let mut out = RingElement::zero();
    for (&(xd, yd), c) in &poly {
        // (cre + i·cim)(cos w + i·sign·sin w)
        let (cos_part, sin_part) = match part {
            Part::Real => (c.re.clone(), -(c.im.clone() * rat_int_signed(sign))),
            Part::Imag => (c.im.clone(), c.re.clone() * rat_int_signed(sign)),
        };
        let (cos_f, sin_f) = if on_x {
            (
                (TrigFactor::Cos(1), TrigFactor::One),
                (TrigFactor::Sin(1), TrigFactor::One),
            )
        } else {
            (
                (TrigFactor::One, TrigFactor::Cos(1)),
                (TrigFactor::One, TrigFactor::Sin(1)),
            )
        };
        out += &RingElement::monomial(cos_part, xd, yd, cos_f.0, cos_f.1);
        out += &RingElement::monomial(sin_part, xd, yd, sin_f.0, sin_f.1);
    }
    Ok(out)
}

/// Exact weighted combination of ring elements (exact mode is `k = 1`, so
/// there is no wavenumber to mismatch).
pub fn combine_exact(terms: &[(Rat, &RingElement)]) -> RingElement {
    let mut out = RingElement::zero();
    for (w, e) in terms {
        out += &e.scale(w);
    }
    out
}

/// Weighted combination of numeric solutions sharing the same wavenumber.
pub fn combine_numeric(
    terms: &[(f64, &NumericSolution)],
) -> Result<NumericSolution, HelmholtzError> {
    NumericSolution::combine(terms)
}

/// Exact Helmholtz residual `Δa + k² a`; the solution verdict is
/// `residual.is_zero()`.
pub fn helmholtz_residual_exact(a: &RingElement, k2: &Rat) -> RingElement {
    &a.laplacian() + &a.scale(k2)
}

/// Sup of `|Δs + k² s|` over an `n × n` sample grid on `[−half, half]²`.
pub fn helmholtz_residual_sup(sol: &NumericSolution, half: f64, n: usize) -> f64 {
    let mut sup = 0.0f64;
    for iy in 0..n {
        for ix in 0..n {
            let x = -half + 2.0 * half * (ix as f64 + 0.5) / n as f64;
            let y = -half + 2.0 * half * (iy as f64 + 0.5) / n as f64;
            let jet = sol.jet(x, y);
            let res = (jet.dxx + jet.dyy + sol.k() * sol.k() * jet.value).abs();
            sup = sup.max(res);
        }
    }
    sup
}

/// The combination of exact order-2 family members that reproduces `ω₁`.
///
/// The worked example states only the final form of `ω₁`; this particular
/// representation was found by matching coefficients and is verified
/// term-by-term in the test suite:
/// `ω₁ = −½ Re F(i, 2) − ½ Re F(−i, 2) + ½ Im F(1, 2) − ½ Im F(−1, 2)`.
pub fn omega1_family_descriptor() -> Vec<(Rat, Root4, u32, Part)> {
    vec![
        (rat(-1, 2), Root4::I, 2, Part::Real),
        (rat(-1, 2), Root4::MinusI, 2, Part::Real),
        (rat(1, 2), Root4::One, 2, Part::Imag),
        (rat(-1, 2), Root4::MinusOne, 2, Part::Imag),
    ]
}

/// Family representation of `ω₂`:
/// `ω₂ = −4 Re F(1, 1) + 4 Re F(i, 1)`.
pub fn omega2_family_descriptor() -> Vec<(Rat, Root4, u32, Part)> {
    vec![
        (rat(-4, 1), Root4::One, 1, Part::Real),
        (rat(4, 1), Root4::I, 1, Part::Real),
    ]
}

/// CLI-facing JSON descriptor of a Helmholtz solution: a weighted list of
/// family members at a common wavenumber.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionDescriptor {
    pub k: f64,
    pub terms: Vec<DescriptorTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DescriptorTerm {
    /// λ as `[re, im]`.
    pub lambda: [f64; 2],
    pub m: u32,
    pub part: Part,
    pub weight: f64,
}

impl SolutionDescriptor {
    pub fn to_numeric(&self) -> Result<NumericSolution, HelmholtzError> {
        let mut members = Vec::new();
        for term in &self.terms {
            let params = FamilyParams {
                k: self.k,
                lambda: Complex64::new(term.lambda[0], term.lambda[1]),
                m: term.m,
                part: term.part,
            };
            members.push((term.weight, family_numeric(params)?));
        }
        let refs: Vec<(f64, &NumericSolution)> =
            members.iter().map(|(w, s)| (*w, s)).collect();
        NumericSolution::combine(&refs)
    }

    /// Exact form; requires `k = 1` and fourth-root λ in every term.
    /// Weights are converted to rationals through their exact binary
    /// expansion.
    pub fn to_exact(&self) -> Result<RingElement, HelmholtzError> {
        if self.k != 1.0 {
            return Err(HelmholtzError::MismatchedK {
                expected: 1.0,
                got: self.k,
            });
        }
        let mut out = RingElement::zero();
        for term in &self.terms {
            let lambda = Complex64::new(term.lambda[0], term.lambda[1]);
            let root = Root4::from_complex(lambda, 1e-12).ok_or(HelmholtzError::LambdaNotExact)?;
            let member = family_exact(root, term.m, term.part)?;
            let w = Rat::from_float(term.weight).ok_or(HelmholtzError::LambdaNotExact)?;
            out += &member.scale(&w);
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals (exact complex arithmetic for the family recurrence)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussRat {
    re: Rat,
    im: Rat,
}

impl GaussRat {
    fn zero() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }

    fn one() -> Self {
        GaussRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul_i(&self) -> Self {
        GaussRat {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    fn scale(&self, s: &Rat) -> Self {
        GaussRat {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// i^n for n in 0..4.
    fn i_pow(n: u32) -> Self {
        let mut v = GaussRat::one();
        for _ in 0..(n % 4) {
            v = v.mul_i();
        }
        v
    }
}

impl std::ops::Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

fn rat_int_neg(p: u32) -> Rat {
    -Rat::from_integer(p.into())
}

fn rat_int_signed(s: i64) -> Rat {
    Rat::from_integer(s.into())
}

/// (−i)^t as an exponent of i: (−i)^t = i^(3t mod 4).
fn neg_i_pow(t: u32) -> u32 {
    (3 * (t % 4)) % 4
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut acc = 1u64;
    for j in 0..k {
        acc = acc * (n - j) as u64 / (j + 1) as u64;
    }
    acc
}
