//! Canonical JSON form of ring elements.
//!
//! An element serializes as a list of terms in canonical order, with exact
//! `"p/q"` coefficient strings, so serialization round-trips exactly:
//!
//! ```json
//! {"terms": [{"coeff": "-1/1", "xdeg": 4, "ydeg": 0,
//!             "xtrig": ["none", 0], "ytrig": ["none", 0]}]}
//! ```

use super::{Rat, RingElement, TermKey, TrigFactor};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    xdeg: u32,
    ydeg: u32,
    xtrig: (String, u32),
    ytrig: (String, u32),
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    terms: Vec<TermRepr>,
}

fn trig_repr(t: TrigFactor) -> (String, u32) {
    match t {
        TrigFactor::One => ("none".to_string(), 0),
        TrigFactor::Sin(n) => ("sin".to_string(), n),
        TrigFactor::Cos(n) => ("cos".to_string(), n),
    }
}

fn trig_parse(kind: &str, freq: u32) -> Result<TrigFactor, String> {
    match kind {
        "none" => Ok(TrigFactor::One),
        "sin" if freq >= 1 => Ok(TrigFactor::Sin(freq)),
        "cos" if freq >= 1 => Ok(TrigFactor::Cos(freq)),
        "sin" | "cos" => Err(format!("{kind} factor requires frequency >= 1")),
        other => Err(format!("unknown trig kind {other:?}")),
    }
}

/// Exact `"p/q"` coefficient string (denominator always present).
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`.
pub fn rat_from_string(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(Rat::new(n, d))
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|t| TermRepr {
                coeff: rat_to_string(t.coeff),
                xdeg: t.key.xdeg,
                ydeg: t.key.ydeg,
                xtrig: trig_repr(t.key.xtrig),
                ytrig: trig_repr(t.key.ytrig),
            })
            .collect();
        ElementRepr { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut out = RingElement::zero();
        for term in repr.terms {
            let coeff = rat_from_string(&term.coeff).map_err(D::Error::custom)?;
            let xtrig = trig_parse(&term.xtrig.0, term.xtrig.1).map_err(D::Error::custom)?;
            let ytrig = trig_parse(&term.ytrig.0, term.ytrig.1).map_err(D::Error::custom)?;
            out.push(
                TermKey {
                    xdeg: term.xdeg,
                    ydeg: term.ydeg,
                    xtrig,
                    ytrig,
                },
                coeff,
            );
        }
        Ok(out)
    }
}
