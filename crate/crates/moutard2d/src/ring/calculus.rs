//! Exact differentiation and antidifferentiation.
//!
//! The ring is closed under both: the power rule and chain rule keep
//! frequencies integral, and `x^a · trig(n x)` integrates by a finite
//! by-parts recurrence. Antiderivatives are normalized so that the
//! integrated factor vanishes at the origin of the integration variable,
//! which matches the path-integration base point used by the Moutard
//! construction.

use super::{Rat, RingElement, TermKey, TrigFactor};
use num_traits::{One, Zero};

impl RingElement {
    pub fn diff_x(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            // power rule on x^a
            if key.xdeg > 0 {
                out.push(
                    TermKey {
                        xdeg: key.xdeg - 1,
                        ..*key
                    },
                    coeff * Rat::from_integer(key.xdeg.into()),
                );
            }
            // chain rule on the x trig factor
            match key.xtrig {
                TrigFactor::One => {}
                TrigFactor::Sin(n) => out.push(
                    TermKey {
                        xtrig: TrigFactor::Cos(n),
                        ..*key
                    },
                    coeff * Rat::from_integer(n.into()),
                ),
                TrigFactor::Cos(n) => out.push(
                    TermKey {
                        xtrig: TrigFactor::Sin(n),
                        ..*key
                    },
                    -(coeff * Rat::from_integer(n.into())),
                ),
            }
        }
        out
    }

    pub fn diff_y(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            if key.ydeg > 0 {
                out.push(
                    TermKey {
                        ydeg: key.ydeg - 1,
                        ..*key
                    },
                    coeff * Rat::from_integer(key.ydeg.into()),
                );
            }
            match key.ytrig {
                TrigFactor::One => {}
                TrigFactor::Sin(n) => out.push(
                    TermKey {
                        ytrig: TrigFactor::Cos(n),
                        ..*key
                    },
                    coeff * Rat::from_integer(n.into()),
                ),
                TrigFactor::Cos(n) => out.push(
                    TermKey {
                        ytrig: TrigFactor::Sin(n),
                        ..*key
                    },
                    -(coeff * Rat::from_integer(n.into())),
                ),
            }
        }
        out
    }

    pub fn laplacian(&self) -> RingElement {
        &self.diff_x().diff_x() + &self.diff_y().diff_y()
    }

    /// Exact antiderivative in `x` with `diff_x(integrate_x(a)) = a`.
    ///
    /// For each term the `x`-dependent factor of the antiderivative is
    /// normalized to vanish at `x = 0` (for pure powers this is the usual
    /// constant-free `x^(a+1)/(a+1)`; for trig-carrying terms a constant
    /// correction is subtracted, e.g. `∫ x cos x = x sin x + cos x − 1`).
    pub fn integrate_x(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            for (c, xdeg, xtrig) in integrate_single(key.xdeg, key.xtrig) {
                out.push(
                    TermKey {
                        xdeg,
                        xtrig,
                        ..*key
                    },
                    coeff * c,
                );
            }
        }
        out
    }

    /// Exact antiderivative in `y`; same normalization as [`integrate_x`].
    ///
    /// [`integrate_x`]: RingElement::integrate_x
    pub fn integrate_y(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            for (c, ydeg, ytrig) in integrate_single(key.ydeg, key.ytrig) {
                out.push(
                    TermKey {
                        ydeg,
                        ytrig,
                        ..*key
                    },
                    coeff * c,
                );
            }
        }
        out
    }
}

/// Antiderivative of the one-variable factor `t^a · trig(n t)`, returned as
/// a list of `(coefficient, degree, trig)` monomials, normalized to vanish
/// at `t = 0`.
fn integrate_single(deg: u32, trig: TrigFactor) -> Vec<(Rat, u32, TrigFactor)> {
    match trig {
        TrigFactor::One => {
            // t^a -> t^(a+1) / (a+1)
            vec![(
                Rat::new(1.into(), (deg as i64 + 1).into()),
                deg + 1,
                TrigFactor::One,
            )]
        }
        _ => {
            let mut acc: Vec<(Rat, u32, TrigFactor)> = Vec::new();
            by_parts(Rat::one(), deg, trig, &mut acc);
            // Normalize: subtract the value at t = 0. Only degree-0 factors
            // survive there, and sin vanishes.
            let mut at_zero = Rat::zero();
            for (c, d, t) in &acc {
                if *d == 0 && t.at_zero_is_one() {
                    at_zero += c.clone();
                }
            }
            if !at_zero.is_zero() {
                acc.push((-at_zero, 0, TrigFactor::One));
            }
            acc
        }
    }
}

/// By-parts recurrence:
/// `∫ t^a sin(nt) = −t^a cos(nt)/n + (a/n) ∫ t^(a−1) cos(nt)`,
/// `∫ t^a cos(nt) =  t^a sin(nt)/n − (a/n) ∫ t^(a−1) sin(nt)`.
fn by_parts(scale: Rat, deg: u32, trig: TrigFactor, acc: &mut Vec<(Rat, u32, TrigFactor)>) {
    let n = trig.frequency();
    debug_assert!(n >= 1);
    let inv_n = Rat::new(1.into(), (n as i64).into());
    match trig {
        TrigFactor::Sin(_) => {
            acc.push((-(&scale * &inv_n), deg, TrigFactor::Cos(n)));
            if deg > 0 {
                let next = &scale * &inv_n * Rat::from_integer(deg.into());
                by_parts(next, deg - 1, TrigFactor::Cos(n), acc);
            }
        }
        TrigFactor::Cos(_) => {
            acc.push((&scale * &inv_n, deg, TrigFactor::Sin(n)));
            if deg > 0 {
                let next = -(&scale * &inv_n * Rat::from_integer(deg.into()));
                by_parts(next, deg - 1, TrigFactor::Sin(n), acc);
            }
        }
        TrigFactor::One => unreachable!("handled by integrate_single"),
    }
}
