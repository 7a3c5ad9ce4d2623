//! Exact arithmetic in the ring of mixed trigonometric polynomials in two
//! variables: finite sums of terms
//!
//! ```text
//!     c · x^a · y^b · T(n·x) · S(m·y),    T, S ∈ {1, sin, cos},
//! ```
//!
//! with integer frequencies `n, m ≥ 1` and exact rational coefficients `c`.
//! The ring is closed under addition, multiplication (products of trig
//! factors are contracted by the product-to-sum identities, so frequencies
//! stay integral), differentiation and antidifferentiation, which is exactly
//! what is needed to carry a double Moutard transformation of the constant
//! potential through as exact identities.
//!
//! Representation invariants:
//! - terms are keyed by `(xdeg, ydeg, xtrig, ytrig)` and like terms are
//!   always merged, so no two stored terms share a key;
//! - stored coefficients are nonzero;
//! - a trig factor of kind `One` always carries frequency 0.
//!
//! The monomials `x^a y^b T(n x) S(m y)` are linearly independent over the
//! reals, so an element represents the zero function iff its term map is
//! empty. That makes [`RingElement::is_zero`] a decision procedure, and every
//! identity in this crate is verified through it rather than through floating
//! tolerances.

mod calculus;
mod envelope;
mod field;
mod grid;
mod json;

pub use envelope::Envelope;
pub use field::RationalField;
pub use grid::GridEvaluator;

use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exact rational coefficient with arbitrary precision.
pub type Rat = num_rational::BigRational;

/// Build an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Build an exact rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(num.into())
}

/// One trigonometric factor in a single variable.
///
/// `One` is the absent factor (canonically frequency 0); `Sin(n)` and
/// `Cos(n)` have integer frequency `n ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TrigFactor {
    One,
    Cos(u32),
    Sin(u32),
}

impl TrigFactor {
    pub fn frequency(self) -> u32 {
        match self {
            TrigFactor::One => 0,
            TrigFactor::Cos(n) | TrigFactor::Sin(n) => n,
        }
    }

    fn kind_rank(self) -> u8 {
        match self {
            TrigFactor::One => 0,
            TrigFactor::Cos(_) => 1,
            TrigFactor::Sin(_) => 2,
        }
    }

    fn eval(self, t: f64) -> f64 {
        match self {
            TrigFactor::One => 1.0,
            TrigFactor::Cos(n) => (n as f64 * t).cos(),
            TrigFactor::Sin(n) => (n as f64 * t).sin(),
        }
    }

    /// Value at the origin of the variable: `1` for `One` and `Cos`, `0` for `Sin`.
    fn at_zero_is_one(self) -> bool {
        !matches!(self, TrigFactor::Sin(_))
    }
}

// Canonical order: frequency-major, then kind (1 < cos < sin). `One` has
// frequency 0 and therefore sorts first.
impl Ord for TrigFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.frequency(), self.kind_rank()).cmp(&(other.frequency(), other.kind_rank()))
    }
}

impl PartialOrd for TrigFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The monomial part of a term: everything except the coefficient.
///
/// The derived ordering (xdeg, ydeg, xtrig, ytrig) is the canonical total
/// order terms are stored in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TermKey {
    pub xdeg: u32,
    pub ydeg: u32,
    pub xtrig: TrigFactor,
    pub ytrig: TrigFactor,
}

impl TermKey {
    pub const CONSTANT: TermKey = TermKey {
        xdeg: 0,
        ydeg: 0,
        xtrig: TrigFactor::One,
        ytrig: TrigFactor::One,
    };

    pub fn total_degree(&self) -> u32 {
        self.xdeg + self.ydeg
    }
}

/// A borrowed view of one normalized term.
#[derive(Clone, Debug, PartialEq)]
pub struct Term<'a> {
    pub coeff: &'a Rat,
    pub key: TermKey,
}

/// An exact element of the ring, held in canonical (normalized) form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RingElement {
    terms: BTreeMap<TermKey, Rat>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        RingElement::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut e = RingElement::zero();
        e.push(TermKey::CONSTANT, c);
        e
    }

    pub fn constant_i64(c: i64) -> Self {
        RingElement::constant(rat_int(c))
    }

    /// The monomial `coeff · x^xdeg y^ydeg xtrig ytrig`.
    ///
    /// Trig factors are canonicalized: a frequency-0 `Cos` collapses to `One`
    /// and a frequency-0 `Sin` makes the whole monomial zero.
    pub fn monomial(coeff: Rat, xdeg: u32, ydeg: u32, xtrig: TrigFactor, ytrig: TrigFactor) -> Self {
        let mut e = RingElement::zero();
        let (sx, xtrig) = canonical_factor(xtrig);
        let (sy, ytrig) = canonical_factor(ytrig);
        if sx && sy {
            e.push(
                TermKey {
                    xdeg,
                    ydeg,
                    xtrig,
                    ytrig,
                },
                coeff,
            );
        }
        e
    }

    pub fn var_x() -> Self {
        RingElement::monomial(Rat::one(), 1, 0, TrigFactor::One, TrigFactor::One)
    }

    pub fn var_y() -> Self {
        RingElement::monomial(Rat::one(), 0, 1, TrigFactor::One, TrigFactor::One)
    }

    pub fn sin_x(n: u32) -> Self {
        RingElement::monomial(Rat::one(), 0, 0, TrigFactor::Sin(n), TrigFactor::One)
    }

    pub fn cos_x(n: u32) -> Self {
        RingElement::monomial(Rat::one(), 0, 0, TrigFactor::Cos(n), TrigFactor::One)
    }

    pub fn sin_y(n: u32) -> Self {
        RingElement::monomial(Rat::one(), 0, 0, TrigFactor::One, TrigFactor::Sin(n))
    }

    pub fn cos_y(n: u32) -> Self {
        RingElement::monomial(Rat::one(), 0, 0, TrigFactor::One, TrigFactor::Cos(n))
    }

    /// True iff the element is the zero function.
    ///
    /// Sound and complete: the term monomials are linearly independent, so
    /// the normalized term set is empty exactly when the function vanishes
    /// identically.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = Term<'_>> {
        self.terms.iter().map(|(key, coeff)| Term { coeff, key: *key })
    }

    /// Coefficient of the given key (zero if absent).
    pub fn coeff(&self, key: &TermKey) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&TermKey::CONSTANT)
    }

    /// Re-normalization. The representation is canonical by construction, so
    /// this is the identity; it exists so idempotence is a testable statement.
    pub fn normalize(&self) -> RingElement {
        self.clone()
    }

    /// Largest total polynomial degree `xdeg + ydeg` among the terms
    /// (`None` for the zero element). Trig factors do not count.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(TermKey::total_degree).max()
    }

    /// The sub-element consisting of all terms of exactly the given total
    /// polynomial degree.
    pub fn homogeneous_part(&self, degree: u32) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            if key.total_degree() == degree {
                out.push(*key, coeff.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RingElement {
        if c.is_zero() {
            return RingElement::zero();
        }
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            out.push(*key, coeff * c);
        }
        out
    }

    pub fn scale_i64(&self, c: i64) -> RingElement {
        self.scale(&rat_int(c))
    }

    /// Floating-point evaluation at a point.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for (key, coeff) in &self.terms {
            let mut v = coeff.to_f64().unwrap_or(f64::NAN);
            v *= x.powi(key.xdeg as i32);
            v *= y.powi(key.ydeg as i32);
            v *= key.xtrig.eval(x);
            v *= key.ytrig.eval(y);
            acc += v;
        }
        acc
    }

    /// Substitute `y = 0`: terms with a positive `y` power or a `sin` factor
    /// in `y` vanish, `cos(m y)` becomes 1.
    pub fn restrict_y0(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            if key.ydeg == 0 && key.ytrig.at_zero_is_one() {
                out.push(
                    TermKey {
                        ytrig: TrigFactor::One,
                        ..*key
                    },
                    coeff.clone(),
                );
            }
        }
        out
    }

    /// Substitute `x = 0`.
    pub fn restrict_x0(&self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            if key.xdeg == 0 && key.xtrig.at_zero_is_one() {
                out.push(
                    TermKey {
                        xtrig: TrigFactor::One,
                        ..*key
                    },
                    coeff.clone(),
                );
            }
        }
        out
    }

    /// Trig-free polynomial majorant: `|self(x, y)| ≤ envelope(|x|, |y|)`
    /// everywhere, obtained by replacing every trig factor by 1 and every
    /// coefficient by its absolute value.
    pub fn envelope(&self) -> Envelope {
        let mut coeffs: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (key, coeff) in &self.terms {
            let slot = coeffs.entry((key.xdeg, key.ydeg)).or_insert_with(Rat::zero);
            *slot += coeff.abs();
        }
        Envelope::from_coeffs(coeffs)
    }

    /// Insert `coeff · key`, merging with an existing term and dropping the
    /// entry if the merged coefficient is zero.
    fn push(&mut self, key: TermKey, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

/// Canonicalize a trig factor; the flag is false when the factor is
/// identically zero (`sin` of frequency 0).
fn canonical_factor(t: TrigFactor) -> (bool, TrigFactor) {
    match t {
        TrigFactor::Cos(0) => (true, TrigFactor::One),
        TrigFactor::Sin(0) => (false, TrigFactor::One),
        other => (true, other),
    }
}

/// Product of two trig factors in the same variable, contracted back into
/// the integer-frequency basis. Returns at most two (coefficient, factor)
/// pairs; the coefficient multiplies the product term's coefficient.
fn trig_product(a: TrigFactor, b: TrigFactor) -> Vec<(Rat, TrigFactor)> {
    use TrigFactor::*;
    let half = rat(1, 2);
    match (a, b) {
        (One, t) | (t, One) => vec![(Rat::one(), t)],
        // cos n · cos m = ½ cos(n−m) + ½ cos(n+m)
        (Cos(n), Cos(m)) => {
            let mut out = vec![(half.clone(), cos_abs(n, m))];
            out.push((half, Cos(n + m)));
            out
        }
        // sin n · sin m = ½ cos(n−m) − ½ cos(n+m)
        (Sin(n), Sin(m)) => {
            let mut out = vec![(half.clone(), cos_abs(n, m))];
            out.push((-half, Cos(n + m)));
            out
        }
        // sin n · cos m = ½ sin(n+m) + ½ sin(n−m)
        (Sin(n), Cos(m)) | (Cos(m), Sin(n)) => {
            let mut out = vec![(half.clone(), Sin(n + m))];
            match n.cmp(&m) {
                Ordering::Greater => out.push((half, Sin(n - m))),
                Ordering::Less => out.push((-half, Sin(m - n))),
                Ordering::Equal => {} // sin 0 = 0
            }
            out
        }
    }
}

/// cos((n−m)·t) with the sign of the frequency folded away (cos is even).
fn cos_abs(n: u32, m: u32) -> TrigFactor {
    if n == m {
        TrigFactor::One
    } else {
        TrigFactor::Cos(n.abs_diff(m))
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (key, coeff) in &rhs.terms {
            out.push(*key, coeff.clone());
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (key, coeff) in &rhs.terms {
            out.push(*key, -coeff.clone());
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let mut out = RingElement::zero();
        for (key, coeff) in &self.terms {
            out.push(*key, -coeff.clone());
        }
        out
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = ca * cb;
                let xdeg = ka.xdeg + kb.xdeg;
                let ydeg = ka.ydeg + kb.ydeg;
                for (fx, xtrig) in trig_product(ka.xtrig, kb.xtrig) {
                    for (fy, ytrig) in trig_product(ka.ytrig, kb.ytrig) {
                        out.push(
                            TermKey {
                                xdeg,
                                ydeg,
                                xtrig,
                                ytrig,
                            },
                            &c * &fx * &fy,
                        );
                    }
                }
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        for (key, coeff) in &rhs.terms {
            self.push(*key, coeff.clone());
        }
    }
}

impl SubAssign<&RingElement> for RingElement {
    fn sub_assign(&mut self, rhs: &RingElement) {
        for (key, coeff) in &rhs.terms {
            self.push(*key, -coeff.clone());
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, coeff) in &self.terms {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || *key == TermKey::CONSTANT {
                factors.push(mag.to_string());
            }
            push_pow(&mut factors, "x", key.xdeg);
            push_pow(&mut factors, "y", key.ydeg);
            push_trig(&mut factors, "x", key.xtrig);
            push_trig(&mut factors, "y", key.ytrig);
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self)
    }
}

fn push_pow(factors: &mut Vec<String>, var: &str, deg: u32) {
    match deg {
        0 => {}
        1 => factors.push(var.to_string()),
        d => factors.push(format!("{var}^{d}")),
    }
}

fn push_trig(factors: &mut Vec<String>, var: &str, t: TrigFactor) {
    match t {
        TrigFactor::One => {}
        TrigFactor::Cos(1) => factors.push(format!("cos({var})")),
        TrigFactor::Sin(1) => factors.push(format!("sin({var})")),
        TrigFactor::Cos(n) => factors.push(format!("cos({n}{var})")),
        TrigFactor::Sin(n) => factors.push(format!("sin({n}{var})")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2_cos_y() -> RingElement {
        RingElement::monomial(Rat::one(), 2, 0, TrigFactor::One, TrigFactor::Cos(1))
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = x2_cos_y();
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        let s = RingElement::sin_x(1);
        let sum = &s + &s;
        assert_eq!(sum.num_terms(), 1);
        assert_eq!(
            sum.coeff(&TermKey {
                xdeg: 0,
                ydeg: 0,
                xtrig: TrigFactor::Sin(1),
                ytrig: TrigFactor::One
            }),
            rat_int(2)
        );
    }

    #[test]
    fn sin_squared_contracts_to_double_angle() {
        // sin x · sin x = 1/2 − (1/2) cos 2x
        let p = &RingElement::sin_x(1) * &RingElement::sin_x(1);
        let expected = &RingElement::constant(rat(1, 2))
            - &RingElement::cos_x(2).scale(&rat(1, 2));
        assert_eq!(p, expected);
    }

    #[test]
    fn mixed_variable_product_is_single_term() {
        let p = &RingElement::sin_x(1) * &RingElement::cos_y(1);
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn cos_product_distinct_frequencies() {
        // cos x · cos 2x = (1/2) cos x + (1/2) cos 3x
        let p = &RingElement::cos_x(1) * &RingElement::cos_x(2);
        let expected = &RingElement::cos_x(1).scale(&rat(1, 2))
            + &RingElement::cos_x(3).scale(&rat(1, 2));
        assert_eq!(p, expected);
    }

    #[test]
    fn pythagorean_identity_is_zero() {
        let s2 = &RingElement::sin_x(1) * &RingElement::sin_x(1);
        let c2 = &RingElement::cos_x(1) * &RingElement::cos_x(1);
        let e = &(&s2 + &c2) - &RingElement::one();
        assert!(e.is_zero());
    }

    #[test]
    fn diff_power_rule() {
        // d/dx (x² cos y) = 2x cos y
        let d = x2_cos_y().diff_x();
        let expected =
            RingElement::monomial(rat_int(2), 1, 0, TrigFactor::One, TrigFactor::Cos(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn diff_chain_rule() {
        // d/dx sin 2x = 2 cos 2x
        assert_eq!(RingElement::sin_x(2).diff_x(), RingElement::cos_x(2).scale_i64(2));
    }

    #[test]
    fn integrate_x_by_parts_example() {
        // ∫ x cos x dx = x sin x + cos x − 1 (vanishes at x = 0)
        let xc = RingElement::monomial(Rat::one(), 1, 0, TrigFactor::Cos(1), TrigFactor::One);
        let integral = xc.integrate_x();
        let expected = &(&RingElement::monomial(
            Rat::one(),
            1,
            0,
            TrigFactor::Sin(1),
            TrigFactor::One,
        ) + &RingElement::cos_x(1))
            - &RingElement::one();
        assert_eq!(integral, expected);
        assert_eq!(integral.diff_x(), xc);
        assert!(integral.eval(0.0, 0.3).abs() < 1e-15);
    }

    #[test]
    fn integrate_x_monomial() {
        let half_x2 =
            RingElement::monomial(rat(1, 2), 2, 0, TrigFactor::One, TrigFactor::One);
        assert_eq!(RingElement::var_x().integrate_x(), half_x2);
    }

    #[test]
    fn eval_zero_element() {
        assert_eq!(RingElement::zero().eval(1.7, -42.0), 0.0);
    }

    #[test]
    fn eval_term_by_term() {
        let e = &(&x2_cos_y() + &RingElement::sin_x(3).scale(&rat(-7, 3)))
            + &RingElement::constant(rat(2, 5));
        let (x, y) = (0.37f64, -1.91f64);
        let expected = x * x * y.cos() - 7.0 / 3.0 * (3.0 * x).sin() + 0.4;
        assert!((e.eval(x, y) - expected).abs() < 1e-14);
    }

    #[test]
    fn normalize_is_idempotent() {
        let e = &(&RingElement::sin_x(1) * &RingElement::sin_x(1)) + &RingElement::var_y();
        assert_eq!(e.normalize(), e);
        assert_eq!(e.normalize().normalize(), e.normalize());
    }

    #[test]
    fn envelope_drops_trig() {
        // envelope(x² sin y) = x²
        let e = RingElement::monomial(Rat::one(), 2, 0, TrigFactor::One, TrigFactor::Sin(1));
        let env = e.envelope();
        assert_eq!(env.coeff(2, 0), Rat::one());
        assert_eq!(env.total_degree(), Some(2));
        assert_eq!(env.coeff_sum(), Rat::one());
    }

    #[test]
    fn envelope_of_x2_block_of_q() {
        // −8 cos y sin x − 2 sin²y − 1 → envelope total 11 (constant in x, y)
        let e = &(&(&RingElement::cos_y(1) * &RingElement::sin_x(1)).scale_i64(-8)
            - &(&RingElement::sin_y(1) * &RingElement::sin_y(1)).scale_i64(2))
            - &RingElement::one();
        let env = e.envelope();
        assert_eq!(env.total_degree(), Some(0));
        assert_eq!(env.coeff_sum(), rat_int(11));
        assert!((env.eval(123.0, -4.0) - 11.0).abs() < 1e-12);
    }

    #[test]
    fn envelope_of_zero() {
        assert!(RingElement::zero().envelope().is_zero());
        assert_eq!(RingElement::zero().envelope().eval(3.0, 4.0), 0.0);
    }

    #[test]
    fn envelope_majorizes_samples() {
        let e = &(&RingElement::var_x() * &RingElement::sin_y(2)).scale_i64(-3)
            + &(&RingElement::var_y() * &RingElement::cos_x(1)).scale(&rat(7, 2));
        let env = e.envelope();
        for &(x, y) in &[(0.3, -2.0), (-5.0, 1.5), (10.0, -10.0), (0.0, 0.0)] {
            assert!(e.eval(x, y).abs() <= env.eval(x.abs(), y.abs()) + 1e-12);
        }
    }

    #[test]
    fn canonical_json_round_trip() {
        let e = &(&x2_cos_y().scale(&rat(-16, 3)) + &RingElement::sin_y(4))
            + &RingElement::constant(rat(22, 7));
        let json = serde_json::to_string(&e).unwrap();
        let back: RingElement = serde_json::from_str(&json).unwrap();
        assert_eq!(e, back);
        // serialization is canonical: serializing again is byte-identical
        assert_eq!(json, serde_json::to_string(&back).unwrap());
    }

    #[test]
    fn restrict_y0_kills_sin_keeps_cos() {
        let e = &(&x2_cos_y() + &(&RingElement::var_y() * &RingElement::sin_x(1)))
            + &RingElement::sin_y(2);
        let r = e.restrict_y0();
        // only x² cos y survives, as x²
        let expected = RingElement::monomial(Rat::one(), 2, 0, TrigFactor::One, TrigFactor::One);
        assert_eq!(r, expected);
    }

    #[test]
    fn homogeneous_part_extraction() {
        let e = &(&RingElement::var_x() * &RingElement::var_x())
            + &(&RingElement::var_y() * &RingElement::sin_x(1));
        assert_eq!(e.total_degree(), Some(2));
        assert_eq!(e.homogeneous_part(2).num_terms(), 1);
        assert_eq!(e.homogeneous_part(1).num_terms(), 1);
        assert!(e.homogeneous_part(3).is_zero());
    }
}
