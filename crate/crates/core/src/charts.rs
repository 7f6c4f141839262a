//! Torus charts of `U^-`.
//!
//! The chart `θ` sends `a = (a_{k,j})_{1≤k≤j≤n}` to the product
//! `Y(a) = ∏_k y_n(a_{k,n}) ⋯ y_k(a_{k,k})`; the chart `θ̂ = θ ∘ ξ^{-1}` uses
//! the coordinates `A = ξ(a)` in which the crystal action and `γ` are
//! subtraction-free.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratfun::{parse, RatFun, RatFunError, Symbol};
use crate::slgroup::verify::{IdentityReport, VermaComparable};
use crate::slgroup::{gen_y, MatRF, SlGroupError, TorusElem};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChartError {
    #[error("index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("coordinate ({0},{1}) missing")]
    MissingCoordinate(usize, usize),
    #[error("chart mismatch: expected {expected:?}, found {found:?}")]
    WrongChart { expected: String, found: String },
    #[error("malformed coordinate key {0:?}")]
    BadKey(String),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
    #[error(transparent)]
    Group(#[from] SlGroupError),
}

/// Marker for the two coordinate systems.
pub trait Chart: Clone + fmt::Debug {
    /// JSON tag and variable base name.
    const TAG: &'static str;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartA;
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartB;

impl Chart for ChartA {
    const TAG: &'static str = "a";
}
impl Chart for ChartB {
    const TAG: &'static str = "A";
}

/// Point of the torus `(ℂ^×)^{n(n+1)/2}` in one of the charts, indexed by
/// `(k, j)` with `1 ≤ k ≤ j ≤ n`.
#[derive(Clone, PartialEq)]
pub struct ChartPoint<C: Chart> {
    n: usize,
    coords: BTreeMap<(usize, usize), RatFun>,
    _chart: PhantomData<C>,
}

/// `a`-coordinates (chart `θ`).
pub type TorusPointA = ChartPoint<ChartA>;
/// `A`-coordinates (chart `θ̂`).
pub type TorusPointB = ChartPoint<ChartB>;

/// Index pairs `(k, j)`, `1 ≤ k ≤ j ≤ n`, in lexicographic order.
pub fn indices(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|k| (k..=n).map(move |j| (k, j)))
        .collect()
}

impl<C: Chart> ChartPoint<C> {
    pub fn new(n: usize, coords: BTreeMap<(usize, usize), RatFun>) -> Result<Self, ChartError> {
        for (k, j) in indices(n) {
            if !coords.contains_key(&(k, j)) {
                return Err(ChartError::MissingCoordinate(k, j));
            }
        }
        if coords.len() != n * (n + 1) / 2 {
            let bad = coords.keys().find(|&&(k, j)| !(1 <= k && k <= j && j <= n)).unwrap();
            return Err(ChartError::BadKey(format!("{},{}", bad.0, bad.1)));
        }
        Ok(ChartPoint {
            n,
            coords,
            _chart: PhantomData,
        })
    }

    /// The point whose coordinates are the symbols `a[k,j]` (or `A[k,j]`).
    pub fn generic(n: usize) -> Self {
        let coords = indices(n)
            .into_iter()
            .map(|(k, j)| ((k, j), RatFun::var(Self::symbol(k, j))))
            .collect();
        ChartPoint {
            n,
            coords,
            _chart: PhantomData,
        }
    }

    pub fn symbol(k: usize, j: usize) -> Symbol {
        Symbol::indexed(C::TAG, k, j)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> RatFun) -> Self {
        let coords = indices(n).into_iter().map(|(k, j)| ((k, j), f(k, j))).collect();
        ChartPoint {
            n,
            coords,
            _chart: PhantomData,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, j: usize) -> &RatFun {
        &self.coords[&(k, j)]
    }

    pub fn coords(&self) -> &BTreeMap<(usize, usize), RatFun> {
        &self.coords
    }

    pub fn values(&self) -> impl Iterator<Item = &RatFun> {
        self.coords.values()
    }

    fn with(&self, updates: impl IntoIterator<Item = ((usize, usize), RatFun)>) -> Self {
        let mut out = self.clone();
        for (key, v) in updates {
            out.coords.insert(key, v);
        }
        out
    }

    pub fn to_json(&self) -> ChartJson {
        ChartJson {
            n: self.n,
            chart: C::TAG.to_owned(),
            coords: self
                .coords
                .iter()
                .map(|(&(k, j), v)| (format!("{k},{j}"), v.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &ChartJson) -> Result<Self, ChartError> {
        if j.chart != C::TAG {
            return Err(ChartError::WrongChart {
                expected: C::TAG.to_owned(),
                found: j.chart.clone(),
            });
        }
        let mut coords = BTreeMap::new();
        for (key, v) in &j.coords {
            coords.insert(parse_key(key)?, parse(v)?);
        }
        ChartPoint::new(j.n, coords)
    }

    /// First coordinate on which the two points differ.
    pub fn first_difference(&self, other: &Self) -> Option<((usize, usize), RatFun, RatFun)> {
        self.coords
            .iter()
            .find(|(key, v)| other.coords.get(key) != Some(v))
            .map(|(&key, v)| {
                let w = other.coords.get(&key).cloned().unwrap_or_else(RatFun::zero);
                (key, v.clone(), w)
            })
    }
}

impl<C: Chart> VermaComparable for ChartPoint<C> {
    fn report(name: String, lhs: &Self, rhs: &Self) -> IdentityReport {
        match lhs.first_difference(rhs) {
            None => IdentityReport::holds(name),
            Some(((k, j), a, b)) => IdentityReport::failed(
                name,
                format!("{}[{k},{j}]: lhs = {a}, rhs = {b}", C::TAG),
            ),
        }
    }
}

pub(crate) fn parse_key(key: &str) -> Result<(usize, usize), ChartError> {
    let bad = || ChartError::BadKey(key.to_owned());
    let (k, j) = key.split_once(',').ok_or_else(bad)?;
    Ok((
        k.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

impl<C: Chart> fmt::Debug for ChartPoint<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for ((k, j), v) in &self.coords {
            m.entry(&format_args!("{}[{k},{j}]", C::TAG), &format_args!("{v}"));
        }
        m.finish()
    }
}

/// `{ "n": 2, "chart": "a"|"A", "coords": { "1,1": "...", ... } }`; keys are
/// ordered lexicographically by index pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartJson {
    pub n: usize,
    pub chart: String,
    #[serde(with = "ordered_coords")]
    pub coords: Vec<(String, String)>,
}

mod ordered_coords {
    use serde::de::{MapAccess, Visitor};
    use serde::ser::SerializeMap;
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(v.len()))?;
        for (k, x) in v {
            m.serialize_entry(k, x)?;
        }
        m.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(String, String)>, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Vec<(String, String)>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map of \"k,j\" keys to expressions")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = a.next_entry::<String, String>()? {
                    out.push((k, v));
                }
                Ok(out)
            }
        }
        d.deserialize_map(V)
    }
}

fn check_i(i: usize, n: usize) -> Result<(), ChartError> {
    if i == 0 || i > n {
        Err(ChartError::IndexOutOfRange { i, n })
    } else {
        Ok(())
    }
}

fn sum(xs: impl IntoIterator<Item = RatFun>) -> Option<RatFun> {
    xs.into_iter().reduce(|a, b| a.add(&b))
}

fn product(xs: impl IntoIterator<Item = RatFun>) -> RatFun {
    xs.into_iter().reduce(|a, b| a.mul(&b)).unwrap_or_else(RatFun::one)
}

/// `Y(a)`: rows `k = 1..=n` of factors `y_n(a_{k,n}) ⋯ y_k(a_{k,k})`, left to right.
pub fn build_y(p: &TorusPointA) -> MatRF {
    let n = p.n();
    let mut m = MatRF::identity(n + 1);
    for k in 1..=n {
        for j in (k..=n).rev() {
            let y = gen_y(n, j, p.get(k, j).clone()).expect("index in range");
            m = m.mul(&y);
        }
    }
    m
}

/// `C_k^{(i)}` for `0 ≤ k ≤ i`, with `C_0 = 1` and `C_i = α`.
pub fn c_coeff(i: usize, k: usize, alpha: &RatFun, p: &TorusPointA) -> Result<RatFun, ChartError> {
    check_i(i, p.n())?;
    if k == 0 {
        return Ok(RatFun::one());
    }
    if k == i {
        return Ok(alpha.clone());
    }
    let col = |r: std::ops::RangeInclusive<usize>| sum(r.map(|l| p.get(l, i).clone()));
    let head = alpha.mul(&col(1..=k).expect("k >= 1"));
    let num = match col(k + 1..=i) {
        Some(tail) => head.add(&tail),
        None => head,
    };
    Ok(num.div(&col(1..=i).expect("i >= 1"))?)
}

/// `e_i^α` on `a`-coordinates via the coefficients `C_k^{(i)}`.
pub fn e_act_a(i: usize, alpha: &RatFun, p: &TorusPointA) -> Result<TorusPointA, ChartError> {
    let n = p.n();
    check_i(i, n)?;
    let c: Vec<RatFun> = (0..=i)
        .map(|k| c_coeff(i, k, alpha, p))
        .collect::<Result<_, _>>()?;
    let mut updates = Vec::new();
    if i >= 2 {
        for k in 1..i {
            updates.push(((k, i - 1), c[k].mul(p.get(k, i - 1))));
        }
    }
    for k in 1..=i {
        updates.push(((k, i), p.get(k, i).div(&c[k - 1].mul(&c[k]))?));
    }
    if i < n {
        for k in 1..=i + 1 {
            updates.push(((k, i + 1), c[k - 1].mul(p.get(k, i + 1))));
        }
    }
    Ok(p.with(updates))
}

/// `ξ`: `A_{i,j} = a_{i,j} a_{i-1,j-1} ⋯ a_{1,j-i+1} / (a_{i-1,j} a_{i-2,j-1} ⋯ a_{1,j-i+2})`.
pub fn xi(p: &TorusPointA) -> Result<TorusPointB, ChartError> {
    let n = p.n();
    let mut coords = BTreeMap::new();
    for (i, j) in indices(n) {
        let num = product((0..i).map(|m| p.get(i - m, j - m).clone()));
        let den = product((0..i - 1).map(|m| p.get(i - 1 - m, j - m).clone()));
        coords.insert((i, j), num.div(&den)?);
    }
    ChartPoint::new(n, coords)
}

/// `ξ^{-1}`: `a_{i,j} = A_{i,j} A_{i-1,j} ⋯ A_{1,j} / (A_{i-1,j-1} ⋯ A_{1,j-1})`.
pub fn xi_inv(q: &TorusPointB) -> Result<TorusPointA, ChartError> {
    let n = q.n();
    let mut coords = BTreeMap::new();
    for (i, j) in indices(n) {
        let num = product((1..=i).map(|l| q.get(l, j).clone()));
        let den = product((1..i).map(|l| q.get(l, j - 1).clone()));
        coords.insert((i, j), num.div(&den)?);
    }
    ChartPoint::new(n, coords)
}

/// `∏_{l=1}^{j} A_{l,i} / ∏_{l=1}^{j-1} A_{l,i-1}`, the summands of `α_k^{(i)}`.
fn alpha_term(i: usize, j: usize, q: &TorusPointB) -> Result<RatFun, ChartError> {
    let num = product((1..=j).map(|l| q.get(l, i).clone()));
    let den = product((1..j).map(|l| q.get(l, i - 1).clone()));
    Ok(num.div(&den)?)
}

/// `α_k^{(i)}` for `1 ≤ k ≤ i`; empty sums contribute nothing.
pub fn alpha_coeff(i: usize, k: usize, alpha: &RatFun, q: &TorusPointB) -> Result<RatFun, ChartError> {
    check_i(i, q.n())?;
    check_i(k, i)?;
    let terms: Vec<RatFun> = (1..=i)
        .map(|j| alpha_term(i, j, q))
        .collect::<Result<_, _>>()?;
    let weighted = |lo: usize, hi: usize, scaled: bool| {
        sum((lo..=hi).map(|j| terms[j - 1].clone())).map(|s| if scaled { alpha.mul(&s) } else { s })
    };
    let join = |a: Option<RatFun>, b: Option<RatFun>| match (a, b) {
        (Some(a), Some(b)) => a.add(&b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => unreachable!("at least one sum is nonempty"),
    };
    let num = join(weighted(1, k, true), weighted(k + 1, i, false));
    let den = join(weighted(1, k - 1, true), weighted(k, i, false));
    Ok(num.div(&den)?)
}

/// `ξ ∘ e_i^α ∘ ξ^{-1}`: `A_{k,i-1} ↦ α_k A_{k,i-1}`, `A_{k,i} ↦ A_{k,i} / α_k`.
pub fn e_act_big_a(i: usize, alpha: &RatFun, q: &TorusPointB) -> Result<TorusPointB, ChartError> {
    let n = q.n();
    check_i(i, n)?;
    let mut updates = Vec::new();
    for k in 1..=i {
        let ak = alpha_coeff(i, k, alpha, q)?;
        if k < i {
            updates.push(((k, i - 1), ak.mul(q.get(k, i - 1))));
        }
        updates.push(((k, i), q.get(k, i).div(&ak)?));
    }
    Ok(q.with(updates))
}

/// Coroot coordinates of `γ ∘ θ̂`: `c_i = (∏_{k≤i, i≤j≤n} A_{k,j})^{-1}`.
pub fn gamma_a_coroots(q: &TorusPointB) -> Result<Vec<RatFun>, ChartError> {
    let n = q.n();
    (1..=n)
        .map(|i| {
            let p = product(
                (1..=i).flat_map(|k| (i..=n).map(move |j| (k, j))).map(|(k, j)| q.get(k, j).clone()),
            );
            Ok(p.recip()?)
        })
        .collect()
}

pub fn gamma_a(q: &TorusPointB) -> Result<TorusElem, ChartError> {
    Ok(TorusElem::from_coroots(&gamma_a_coroots(q)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slgroup::{alphacheck, varphi};

    fn a(k: usize, j: usize) -> RatFun {
        RatFun::var(TorusPointA::symbol(k, j))
    }

    #[test]
    fn build_y_small_ranks() {
        let y1 = build_y(&TorusPointA::generic(1));
        assert_eq!(y1, gen_y(1, 1, a(1, 1)).unwrap());

        let y2 = build_y(&TorusPointA::generic(2));
        let (o, z) = (RatFun::one(), RatFun::zero());
        let want = MatRF::from_rows(vec![
            vec![o.clone(), z.clone(), z.clone()],
            vec![a(1, 1), o.clone(), z.clone()],
            vec![a(1, 1).mul(&a(1, 2)), a(1, 2).add(&a(2, 2)), o],
        ])
        .unwrap();
        assert_eq!(y2, want);
    }

    #[test]
    fn varphi_is_column_sum() {
        for n in 1..=4 {
            let y = build_y(&TorusPointA::generic(n));
            for i in 1..=n {
                let want = sum((1..=i).map(|k| a(k, i))).unwrap();
                assert_eq!(varphi(i, &y).unwrap(), want);
            }
        }
    }

    #[test]
    fn rank_one_actions() {
        let alpha = RatFun::named("alpha");
        let p = TorusPointA::generic(1);
        let e = e_act_a(1, &alpha, &p).unwrap();
        assert_eq!(e.get(1, 1), &a(1, 1).div(&alpha).unwrap());
        let q = TorusPointB::generic(1);
        assert_eq!(alpha_coeff(1, 1, &alpha, &q).unwrap(), alpha);
        let e = e_act_big_a(1, &alpha, &q).unwrap();
        assert_eq!(e.get(1, 1), &q.get(1, 1).div(&alpha).unwrap());
        // ξ is the identity in rank 1.
        let xp = xi(&p).unwrap();
        assert_eq!(xp.get(1, 1), p.get(1, 1));
    }

    #[test]
    fn alpha_one_is_identity() {
        for n in 1..=3 {
            let p = TorusPointA::generic(n);
            let q = TorusPointB::generic(n);
            for i in 1..=n {
                assert_eq!(e_act_a(i, &RatFun::one(), &p).unwrap(), p);
                assert_eq!(e_act_big_a(i, &RatFun::one(), &q).unwrap(), q);
            }
        }
    }

    #[test]
    fn xi_rank_two_entry() {
        let x = xi(&TorusPointA::generic(2)).unwrap();
        let want = a(2, 2).mul(&a(1, 1)).div(&a(1, 2)).unwrap();
        assert_eq!(x.get(2, 2), &want);
    }

    #[test]
    fn gamma_a_small_ranks() {
        let q = TorusPointB::generic(1);
        assert_eq!(
            gamma_a(&q).unwrap(),
            alphacheck(1, 1, &q.get(1, 1).recip().unwrap()).unwrap()
        );
        let q = TorusPointB::generic(2);
        let c = gamma_a_coroots(&q).unwrap();
        assert_eq!(c[0], q.get(1, 1).mul(q.get(1, 2)).recip().unwrap());
        assert_eq!(c[1], q.get(1, 2).mul(q.get(2, 2)).recip().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = TorusPointA::generic(2);
        let j = p.to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"chart":"a","coords":{"1,1":"a[1,1]","1,2":"a[1,2]","2,2":"a[2,2]"}}"#
        );
        let back: ChartJson = serde_json::from_str(&text).unwrap();
        assert_eq!(TorusPointA::from_json(&back).unwrap(), p);
        assert!(matches!(TorusPointB::from_json(&back), Err(ChartError::WrongChart { .. })));
    }

    #[test]
    fn missing_coordinate_rejected() {
        let mut m = BTreeMap::new();
        m.insert((1, 1), RatFun::one());
        assert_eq!(
            TorusPointA::new(2, m).unwrap_err(),
            ChartError::MissingCoordinate(1, 2)
        );
    }
}
