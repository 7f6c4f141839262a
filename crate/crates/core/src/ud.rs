//! Ultra-discretization: subtraction-free rational maps become max-plus
//! piecewise-linear maps on integer points (`×→+`, `/→−`, `+→max`).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gyt::{sharp_indices, SharpElement};
use crate::ratfun::{PosExpr, RatFun, RatFunError, Symbol};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UdError {
    #[error("function carries no subtraction-free certificate")]
    NotPositive,
    #[error("variable {0} is not a coordinate of the domain")]
    UnknownVariable(String),
    #[error("expected a point of dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("tropical value is -inf")]
    Bottom,
    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

/// A max-plus value: an integer or `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trop {
    NegInf,
    Fin(i64),
}

impl Trop {
    pub fn finite(self) -> Result<i64, UdError> {
        match self {
            Trop::Fin(x) => Ok(x),
            Trop::NegInf => Err(UdError::Bottom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropExpr {
    Var(usize),
    /// Image of every positive constant.
    Zero,
    Sum(Vec<TropExpr>),
    Diff(Box<TropExpr>, Box<TropExpr>),
    Max(Vec<TropExpr>),
    Bottom,
}

impl TropExpr {
    pub fn sum(xs: impl IntoIterator<Item = TropExpr>) -> TropExpr {
        let mut parts = Vec::new();
        for x in xs {
            match x {
                TropExpr::Bottom => return TropExpr::Bottom,
                TropExpr::Zero => {}
                TropExpr::Sum(ys) => parts.extend(ys),
                x => parts.push(x),
            }
        }
        match parts.len() {
            0 => TropExpr::Zero,
            1 => parts.pop().expect("one part"),
            _ => TropExpr::Sum(parts),
        }
    }

    pub fn max(xs: impl IntoIterator<Item = TropExpr>) -> TropExpr {
        let mut parts = Vec::new();
        for x in xs {
            match x {
                TropExpr::Bottom => {}
                TropExpr::Max(ys) => parts.extend(ys),
                x => {
                    if !parts.contains(&x) {
                        parts.push(x)
                    }
                }
            }
        }
        match parts.len() {
            0 => TropExpr::Bottom,
            1 => parts.pop().expect("one part"),
            _ => TropExpr::Max(parts),
        }
    }

    pub fn diff(a: TropExpr, b: TropExpr) -> TropExpr {
        match (a, b) {
            (TropExpr::Bottom, _) | (_, TropExpr::Bottom) => TropExpr::Bottom,
            (a, TropExpr::Zero) => a,
            (a, b) => TropExpr::Diff(Box::new(a), Box::new(b)),
        }
    }

    pub fn eval(&self, l: &[i64]) -> Trop {
        match self {
            TropExpr::Var(k) => Trop::Fin(l[*k]),
            TropExpr::Zero => Trop::Fin(0),
            TropExpr::Bottom => Trop::NegInf,
            TropExpr::Sum(xs) => xs.iter().try_fold(0i64, |acc, x| match x.eval(l) {
                Trop::Fin(v) => Some(acc + v),
                Trop::NegInf => None,
            })
            .map_or(Trop::NegInf, Trop::Fin),
            TropExpr::Diff(a, b) => match (a.eval(l), b.eval(l)) {
                (Trop::Fin(x), Trop::Fin(y)) => Trop::Fin(x - y),
                _ => Trop::NegInf,
            },
            TropExpr::Max(xs) => xs.iter().map(|x| x.eval(l)).max().unwrap_or(Trop::NegInf),
        }
    }

    /// Largest variable index used, plus one.
    fn arity(&self) -> usize {
        match self {
            TropExpr::Var(k) => k + 1,
            TropExpr::Zero | TropExpr::Bottom => 0,
            TropExpr::Sum(xs) | TropExpr::Max(xs) => xs.iter().map(|x| x.arity()).max().unwrap_or(0),
            TropExpr::Diff(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Prefix form, e.g. `(- (max X Y) Z)`.
    pub fn to_prefix(&self, names: &[String]) -> String {
        let list = |op: &str, xs: &[TropExpr]| {
            let inner: Vec<String> = xs.iter().map(|x| x.to_prefix(names)).collect();
            format!("({op} {})", inner.join(" "))
        };
        match self {
            TropExpr::Var(k) => names.get(*k).cloned().unwrap_or_else(|| format!("x{k}")),
            TropExpr::Zero => "0".into(),
            TropExpr::Bottom => "-inf".into(),
            TropExpr::Sum(xs) => list("+", xs),
            TropExpr::Max(xs) => list("max", xs),
            TropExpr::Diff(a, b) => format!("(- {} {})", a.to_prefix(names), b.to_prefix(names)),
        }
    }

    pub fn parse_prefix(src: &str, names: &[String]) -> Result<TropExpr, UdError> {
        let spaced = src.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let mut pos = 0;
        let e = parse_node(&tokens, &mut pos, names)?;
        if pos != tokens.len() {
            return Err(UdError::Parse {
                pos,
                msg: "trailing input".into(),
            });
        }
        Ok(e)
    }
}

fn parse_node(tokens: &[&str], pos: &mut usize, names: &[String]) -> Result<TropExpr, UdError> {
    let err = |pos: usize, msg: &str| UdError::Parse {
        pos,
        msg: msg.into(),
    };
    let tok = *tokens.get(*pos).ok_or_else(|| err(*pos, "unexpected end"))?;
    *pos += 1;
    match tok {
        "(" => {
            let op = *tokens.get(*pos).ok_or_else(|| err(*pos, "missing operator"))?;
            *pos += 1;
            let mut args = Vec::new();
            while tokens.get(*pos) != Some(&")") {
                if *pos >= tokens.len() {
                    return Err(err(*pos, "unclosed parenthesis"));
                }
                args.push(parse_node(tokens, pos, names)?);
            }
            *pos += 1;
            match (op, args.len()) {
                ("+", _) => Ok(TropExpr::sum(args)),
                ("max", _) => Ok(TropExpr::max(args)),
                ("-", 2) => {
                    let b = args.pop().expect("two args");
                    let a = args.pop().expect("two args");
                    Ok(TropExpr::diff(a, b))
                }
                _ => Err(err(*pos, &format!("bad operator {op:?}"))),
            }
        }
        "0" => Ok(TropExpr::Zero),
        "-inf" => Ok(TropExpr::Bottom),
        name => names
            .iter()
            .position(|n| n == name)
            .map(TropExpr::Var)
            .ok_or_else(|| err(*pos - 1, &format!("unknown name {name:?}"))),
    }
}

fn trop_node(e: &Arc<PosExpr>, vars: &[Symbol]) -> Result<TropExpr, UdError> {
    Ok(match e.as_ref() {
        PosExpr::Const(_) => TropExpr::Zero,
        PosExpr::Var(s) => TropExpr::Var(
            vars.iter()
                .position(|v| v == s)
                .ok_or_else(|| UdError::UnknownVariable(s.name().to_string()))?,
        ),
        PosExpr::Add(xs) => TropExpr::max(xs.iter().map(|x| trop_node(x, vars)).collect::<Result<Vec<_>, _>>()?),
        PosExpr::Mul(xs) => TropExpr::sum(xs.iter().map(|x| trop_node(x, vars)).collect::<Result<Vec<_>, _>>()?),
        PosExpr::Div(a, b) => TropExpr::diff(trop_node(a, vars)?, trop_node(b, vars)?),
    })
}

/// Rewrites the certificate of `f` over the coordinates `vars`.
pub fn tropicalize(f: &RatFun, vars: &[Symbol]) -> Result<TropExpr, UdError> {
    let cert = f.certificate().ok_or(UdError::NotPositive)?;
    trop_node(cert, vars)
}

pub fn trop_eval(e: &TropExpr, dim: usize, l: &[i64]) -> Result<Trop, UdError> {
    if l.len() != dim || e.arity() > dim {
        return Err(UdError::DimensionMismatch {
            expected: dim,
            found: l.len(),
        });
    }
    Ok(e.eval(l))
}

/// `deg f(t^{l_1}, …, t^{l_m})`, computed by exact substitution.
pub fn degree_oracle(f: &RatFun, vars: &[Symbol], l: &[i64]) -> Result<i64, UdError> {
    if l.len() != vars.len() {
        return Err(UdError::DimensionMismatch {
            expected: vars.len(),
            found: l.len(),
        });
    }
    if let Some(s) = f.variables().into_iter().find(|s| !vars.contains(s)) {
        return Err(UdError::UnknownVariable(s.name().to_string()));
    }
    let t = Symbol::new("t_ud");
    let at = |s: Symbol| l[vars.iter().position(|v| *v == s).expect("checked above")];
    Ok(f.subst_monomial(t, &at).degree()?)
}

/// A piecewise-linear map `ℤ^m → ℤ^k` with named coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct TropMap {
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub components: Vec<TropExpr>,
}

/// Componentwise tropicalization.
pub fn ud_map(components: &[(String, RatFun)], vars: &[Symbol]) -> Result<TropMap, UdError> {
    Ok(TropMap {
        domain: vars.iter().map(|s| s.name().to_string()).collect(),
        codomain: components.iter().map(|(n, _)| n.clone()).collect(),
        components: components
            .iter()
            .map(|(_, f)| tropicalize(f, vars))
            .collect::<Result<_, _>>()?,
    })
}

impl TropMap {
    pub fn identity(names: &[String]) -> TropMap {
        TropMap {
            domain: names.to_vec(),
            codomain: names.to_vec(),
            components: (0..names.len()).map(TropExpr::Var).collect(),
        }
    }

    pub fn eval(&self, l: &[i64]) -> Result<Vec<i64>, UdError> {
        self.components
            .iter()
            .map(|e| trop_eval(e, self.domain.len(), l)?.finite())
            .collect()
    }

    /// `self ∘ inner`, evaluated pointwise.
    pub fn eval_after(&self, inner: &TropMap, l: &[i64]) -> Result<Vec<i64>, UdError> {
        self.eval(&inner.eval(l)?)
    }

    pub fn to_json(&self) -> TropMapJson {
        TropMapJson {
            domain: self.domain.clone(),
            components: self
                .codomain
                .iter()
                .zip(&self.components)
                .map(|(n, e)| (n.clone(), e.to_prefix(&self.domain)))
                .collect(),
        }
    }

    pub fn from_json(j: &TropMapJson) -> Result<TropMap, UdError> {
        let mut codomain = Vec::new();
        let mut components = Vec::new();
        for (name, src) in &j.components {
            codomain.push(name.clone());
            components.push(TropExpr::parse_prefix(src, &j.domain)?);
        }
        Ok(TropMap {
            domain: j.domain.clone(),
            codomain,
            components,
        })
    }
}

impl fmt::Display for TropMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, e) in self.codomain.iter().zip(&self.components) {
            writeln!(f, "{n} = {}", e.to_prefix(&self.domain))?;
        }
        Ok(())
    }
}

/// `{ "domain": ["A[1,1]", …], "components": [["A[1,1]", "(- …)"], …] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropMapJson {
    pub domain: Vec<String>,
    pub components: Vec<(String, String)>,
}

/// Co-character coordinates `l_{k,j}`, `1 ≤ k ≤ j ≤ n`, as `B_{k,j+1}`.
pub fn chart_to_sharp(n: usize, l: &BTreeMap<(usize, usize), i64>) -> Result<SharpElement, crate::gyt::GytError> {
    let shifted = l.iter().map(|(&(k, j), &v)| ((k, j + 1), v)).collect();
    SharpElement::from_map(n, &shifted)
}

pub fn sharp_to_chart(v: &SharpElement) -> BTreeMap<(usize, usize), i64> {
    sharp_indices(v.n())
        .into_iter()
        .map(|(k, j)| ((k, j - 1), v.get(k, j).expect("off-diagonal")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::parse;
    use proptest::prelude::*;

    fn syms(names: &[&str]) -> Vec<Symbol> {
        names.iter().map(|s| Symbol::new(s)).collect()
    }

    fn names(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn structural_examples() {
        let v = syms(&["x", "y", "z"]);
        let e = tropicalize(&parse("x*y").unwrap(), &v).unwrap();
        assert_eq!(e, TropExpr::Sum(vec![TropExpr::Var(0), TropExpr::Var(1)]));
        let e = tropicalize(&parse("(x+y)/z").unwrap(), &v).unwrap();
        assert_eq!(e.to_prefix(&names(&["X", "Y", "Z"])), "(- (max X Y) Z)");
        assert_eq!(trop_eval(&e, 3, &[2, 0, 1]).unwrap(), Trop::Fin(1));
        assert_eq!(tropicalize(&parse("7*x").unwrap(), &v).unwrap(), TropExpr::Var(0));
        assert_eq!(tropicalize(&parse("x-y").unwrap(), &v), Err(UdError::NotPositive));
        assert!(matches!(tropicalize(&parse("w").unwrap(), &v), Err(UdError::UnknownVariable(_))));
        let s = tropicalize(&parse("x*y").unwrap(), &v[..2]).unwrap();
        assert_eq!(trop_eval(&s, 2, &[2, 3]).unwrap(), Trop::Fin(5));
        assert!(trop_eval(&s, 2, &[2]).is_err());
    }

    #[test]
    fn bottom_rules() {
        assert_eq!(TropExpr::max([TropExpr::Var(0)]), TropExpr::Var(0));
        assert_eq!(TropExpr::max([TropExpr::Bottom, TropExpr::Var(1)]), TropExpr::Var(1));
        assert_eq!(TropExpr::max(Vec::new()), TropExpr::Bottom);
        assert_eq!(TropExpr::sum([TropExpr::Var(0), TropExpr::Bottom]), TropExpr::Bottom);
        assert_eq!(TropExpr::Bottom.eval(&[]), Trop::NegInf);
        assert!(Trop::NegInf < Trop::Fin(i64::MIN));
    }

    #[test]
    fn degree_examples() {
        let v = syms(&["x", "y", "z"]);
        let f = parse("x+y").unwrap();
        assert_eq!(degree_oracle(&f, &v[..2], &[1, 1]).unwrap(), 1);
        assert_eq!(degree_oracle(&f, &v[..2], &[3, -2]).unwrap(), 3);
        assert_eq!(degree_oracle(&parse("(x+y)/z").unwrap(), &v, &[2, 0, 1]).unwrap(), 1);
    }

    #[test]
    fn prefix_round_trip() {
        let ns = names(&["X", "Y", "Z"]);
        for src in ["(- (max X Y) Z)", "(+ X (max Y 0))", "X", "(max (- X Y) (+ Y Z))"] {
            let e = TropExpr::parse_prefix(src, &ns).unwrap();
            assert_eq!(e.to_prefix(&ns), src);
        }
        assert!(TropExpr::parse_prefix("(- X)", &ns).is_err());
        assert!(TropExpr::parse_prefix("(max X W)", &ns).is_err());
        assert!(TropExpr::parse_prefix("(max X", &ns).is_err());
    }

    #[test]
    fn map_json_round_trip() {
        let v = syms(&["x", "y"]);
        let m = ud_map(
            &[("u".into(), parse("x/y").unwrap()), ("w".into(), parse("x+y+2").unwrap())],
            &v,
        )
        .unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back = TropMap::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m);
        assert_eq!(m.eval(&[-4, 1]).unwrap(), vec![-5, 1]);
        let id = TropMap::identity(&m.domain);
        assert_eq!(id.eval(&[3, 4]).unwrap(), vec![3, 4]);
    }

    #[test]
    fn sharp_index_shift() {
        let one = BTreeMap::from([((1, 1), 5)]);
        assert_eq!(chart_to_sharp(1, &one).unwrap().get(1, 2), Some(5));
        let l = BTreeMap::from([((1, 1), 2), ((1, 2), 1), ((2, 2), 3)]);
        let v = chart_to_sharp(2, &l).unwrap();
        assert_eq!(v.as_slice(), &[2, 1, 3]);
        assert_eq!(sharp_to_chart(&v), l);
    }

    fn positive_expr() -> impl Strategy<Value = String> {
        let leaf = prop_oneof![
            Just("x".to_string()),
            Just("y".to_string()),
            Just("z".to_string()),
            (1u32..5).prop_map(|c| c.to_string()),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            (inner.clone(), inner, 0u8..3).prop_map(|(a, b, op)| match op {
                0 => format!("({a})+({b})"),
                1 => format!("({a})*({b})"),
                _ => format!("({a})/({b})"),
            })
        })
    }

    proptest! {
        #[test]
        fn semiring_homomorphism(
            fs in positive_expr(),
            gs in positive_expr(),
            l in prop::collection::vec(-6i64..=6, 3),
        ) {
            let v = syms(&["x", "y", "z"]);
            let (f, g) = (parse(&fs).unwrap(), parse(&gs).unwrap());
            let tf = tropicalize(&f, &v).unwrap().eval(&l).finite().unwrap();
            let tg = tropicalize(&g, &v).unwrap().eval(&l).finite().unwrap();
            let at = |h: RatFun| tropicalize(&h, &v).unwrap().eval(&l).finite().unwrap();
            prop_assert_eq!(at(f.mul(&g)), tf + tg);
            prop_assert_eq!(at(f.add(&g)), tf.max(tg));
            prop_assert_eq!(at(f.div(&g).unwrap()), tf - tg);
            prop_assert_eq!(degree_oracle(&f, &v, &l).unwrap(), tf);
        }
    }
}
