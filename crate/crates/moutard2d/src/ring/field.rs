//! Quotients of ring elements.
//!
//! A [`RationalField`] value is a formal fraction `numerator / denominator`
//! of two exact elements. The transformed potential `Û = P/Q²` and the
//! eigenfunctions `ψᵢ = ωᵢ/Q` are kept in this exact form until a numeric
//! module samples them; identities about them are verified on the
//! denominator-cleared numerators, never in floating point.

use super::RingElement;

/// A formal quotient of two ring elements with a nonzero denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalField {
    numerator: RingElement,
    denominator: RingElement,
}

impl RationalField {
    /// Panics if the denominator is the zero element; zero-freeness of the
    /// denominator as a *function* is the positivity module's concern.
    pub fn new(numerator: RingElement, denominator: RingElement) -> Self {
        assert!(
            !denominator.is_zero(),
            "RationalField denominator must not be the zero element"
        );
        RationalField {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &RingElement {
        &self.numerator
    }

    pub fn denominator(&self) -> &RingElement {
        &self.denominator
    }

    /// Pointwise evaluation; infinite or NaN at zeros of the denominator.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.numerator.eval(x, y) / self.denominator.eval(x, y)
    }

    /// Exact equality as functions: cross-multiplied difference normalizes
    /// to zero.
    pub fn equals(&self, other: &RationalField) -> bool {
        (&(&self.numerator * &other.denominator) - &(&other.numerator * &self.denominator))
            .is_zero()
    }
}
