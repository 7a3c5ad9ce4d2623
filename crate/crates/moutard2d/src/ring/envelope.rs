//! Trig-free polynomial majorants.
//!
//! The envelope of an element replaces every trig factor by 1 and every
//! coefficient by its absolute value, giving a bivariate polynomial with
//! nonnegative coefficients that dominates the element in absolute value:
//! `|a(x, y)| ≤ envelope(a)(|x|, |y|)` for all real `x, y`. This is the
//! workhorse bound behind the positivity certificates.

use super::Rat;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `|x|, |y|` with nonnegative rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Envelope {
    coeffs: BTreeMap<(u32, u32), Rat>,
}

impl Envelope {
    pub(crate) fn from_coeffs(coeffs: BTreeMap<(u32, u32), Rat>) -> Self {
        debug_assert!(coeffs.values().all(|c| !c.is_zero()));
        Envelope { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterate over `((xdeg, ydeg), coefficient)` pairs.
    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> Rat {
        self.coeffs
            .get(&(xdeg, ydeg))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Sum of all coefficients; equals the envelope's value at `(1, 1)`.
    pub fn coeff_sum(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.coeffs.values() {
            s += c.clone();
        }
        s
    }

    /// Largest total degree `xdeg + ydeg` (`None` when zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(a, b)| a + b).max()
    }

    /// Evaluate at `(u, v)`; intended for `u, v ≥ 0`, where the envelope is
    /// monotone nondecreasing in each argument.
    pub fn eval(&self, u: f64, v: f64) -> f64 {
        let mut acc = 0.0;
        for ((a, b), c) in &self.coeffs {
            acc += c.to_f64().unwrap_or(f64::NAN) * u.powi(*a as i32) * v.powi(*b as i32);
        }
        acc
    }

    /// Collapse to a univariate majorant along the diagonal: coefficients of
    /// `p(t) = envelope(t, t)` in ascending degree order.
    ///
    /// Since the envelope is monotone in each argument, `envelope(|x|, |y|)
    /// ≤ p(max(|x|, |y|))` for every point.
    pub fn diagonal_poly(&self) -> Vec<f64> {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![0.0; deg + 1];
        for ((a, b), c) in &self.coeffs {
            out[(a + b) as usize] += c.to_f64().unwrap_or(f64::NAN);
        }
        out
    }
}

impl fmt::Display for Envelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((a, b), c)| {
                let mut s = c.to_string();
                if *a > 0 {
                    s.push_str(&format!("*|x|^{a}"));
                }
                if *b > 0 {
                    s.push_str(&format!("*|y|^{b}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
