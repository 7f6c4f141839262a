use std::fmt;
use std::str::FromStr;

use super::HarnessError;
use crate::charts::{e_act_a, e_act_big_a, ChartJson, TorusPointA, TorusPointB};
use crate::gyt::{SharpElement, SharpJson};
use crate::ratfun::{parse, RatFun};
use crate::slgroup::SlGroupError;

/// What a state file holds and which action applies to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActKind {
    /// `B♯` element; the param is the integer exponent `z` of `ẽ_i^z`.
    Sharp,
    /// Point in `A`-coordinates, acted on through the coefficients `α_k^{(i)}`.
    GeomA,
    /// Point in `a`-coordinates, acted on through the coefficients `C_k^{(i)}`.
    GeomAlpha,
}

impl FromStr for ActKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<ActKind, HarnessError> {
        match s {
            "sharp" => Ok(ActKind::Sharp),
            "geomA" => Ok(ActKind::GeomA),
            "geomAlpha" => Ok(ActKind::GeomAlpha),
            other => Err(HarnessError::BadArgs(format!(
                "unknown kind {other:?}; expected sharp, geomA or geomAlpha"
            ))),
        }
    }
}

impl fmt::Display for ActKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActKind::Sharp => "sharp",
            ActKind::GeomA => "geomA",
            ActKind::GeomAlpha => "geomAlpha",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActOutcome {
    /// The transformed state, pretty-printed JSON.
    pub state: String,
    pub summary: String,
}

fn rational_param(param: &str) -> Result<RatFun, HarnessError> {
    let bad = || HarnessError::BadParam(param.to_string());
    let c = parse(param).map_err(|_| bad())?;
    match c.as_constant() {
        Some(_) if !c.is_zero() => Ok(c),
        _ => Err(bad()),
    }
}

/// Applies the crystal action of kind `kind` with index `i` and parameter
/// `param` to the JSON state `state`.
pub fn cmd_act(kind: ActKind, i: usize, param: &str, state: &str) -> Result<ActOutcome, HarnessError> {
    match kind {
        ActKind::Sharp => {
            let z: i64 = param.trim().parse().map_err(|_| {
                HarnessError::BadArgs(format!("sharp action needs an integer param, got {param:?}"))
            })?;
            let v = SharpElement::from_json(&serde_json::from_str::<SharpJson>(state)?)?;
            let w = v.crystal_power(i, z)?;
            Ok(ActOutcome {
                state: serde_json::to_string_pretty(&w.to_json())?,
                summary: format!("e_{i}^({z}): {v} -> {w}"),
            })
        }
        ActKind::GeomA => {
            let alpha = rational_param(param)?;
            let q = TorusPointB::from_json(&serde_json::from_str::<ChartJson>(state)?)?;
            let r = e_act_big_a(i, &alpha, &q)?;
            Ok(ActOutcome {
                state: serde_json::to_string_pretty(&r.to_json())?,
                summary: format!("e_{i}^({alpha}) on A-coordinates: {q:?} -> {r:?}"),
            })
        }
        ActKind::GeomAlpha => {
            let alpha = rational_param(param)?;
            let p = TorusPointA::from_json(&serde_json::from_str::<ChartJson>(state)?)?;
            if i >= 1 && i <= p.n() && (1..=i).fold(RatFun::zero(), |s, k| s.add(p.get(k, i))).is_zero() {
                return Err(SlGroupError::PhiVanishes { i }.into());
            }
            let r = e_act_a(i, &alpha, &p)?;
            Ok(ActOutcome {
                state: serde_json::to_string_pretty(&r.to_json())?,
                summary: format!("e_{i}^({alpha}) on a-coordinates: {p:?} -> {r:?}"),
            })
        }
    }
}
