//! Chart formulas as tropical maps, and their comparison with `B♯`.

use std::collections::BTreeMap;

use rand::Rng;

use super::HarnessError;
use crate::charts::{
    alpha_coeff, c_coeff, gamma_a_coroots, indices, xi, xi_inv, Chart, ChartA, ChartB, ChartPoint,
    TorusPointA, TorusPointB,
};
use crate::gyt::SharpElement;
use crate::ratfun::{parse, RatFun, Symbol};
use crate::ud::{chart_to_sharp, degree_oracle, tropicalize, TropExpr, TropMap};

/// The crystal parameter, treated as one more torus coordinate.
pub fn alpha_symbol() -> Symbol {
    Symbol::new("alpha")
}

pub fn chart_vars<C: Chart>(n: usize) -> Vec<Symbol> {
    indices(n).into_iter().map(|(k, j)| ChartPoint::<C>::symbol(k, j)).collect()
}

/// `A`-coordinates followed by `alpha`.
pub fn alpha_vars(n: usize) -> Vec<Symbol> {
    let mut v = chart_vars::<ChartB>(n);
    v.push(alpha_symbol());
    v
}

#[derive(Clone, Debug)]
pub struct Formula {
    pub name: String,
    pub f: RatFun,
    pub vars: Vec<Symbol>,
}

/// Every positive chart formula of rank `n`: `α_k^{(i)}`, interior `C_k^{(i)}`,
/// the components of `ξ`, `ξ^{-1}` and the coroots of `γ ∘ θ̂`.
pub fn inventory(n: usize) -> Result<Vec<Formula>, HarnessError> {
    let alpha = RatFun::var(alpha_symbol());
    let (p, q) = (TorusPointA::generic(n), TorusPointB::generic(n));
    let mut out = Vec::new();
    let mut a_vars = chart_vars::<ChartA>(n);
    a_vars.push(alpha_symbol());
    for i in 1..=n {
        for k in 1..=i {
            out.push(Formula {
                name: format!("alpha[{i},{k}]"),
                f: alpha_coeff(i, k, &alpha, &q)?,
                vars: alpha_vars(n),
            });
            if k < i {
                out.push(Formula {
                    name: format!("C[{i},{k}]"),
                    f: c_coeff(i, k, &alpha, &p)?,
                    vars: a_vars.clone(),
                });
            }
        }
    }
    for ((k, j), f) in xi(&p)?.coords() {
        out.push(Formula {
            name: format!("xi[{k},{j}]"),
            f: f.clone(),
            vars: chart_vars::<ChartA>(n),
        });
    }
    for ((k, j), f) in xi_inv(&q)?.coords() {
        out.push(Formula {
            name: format!("xi_inv[{k},{j}]"),
            f: f.clone(),
            vars: chart_vars::<ChartB>(n),
        });
    }
    for (i, f) in gamma_a_coroots(&q)?.into_iter().enumerate() {
        out.push(Formula {
            name: format!("gammaA[{}]", i + 1),
            f,
            vars: chart_vars::<ChartB>(n),
        });
    }
    Ok(out)
}

fn named_map<C: Chart>(point: &ChartPoint<C>) -> Vec<(String, RatFun)> {
    point
        .coords()
        .iter()
        .map(|(&(k, j), f)| (ChartPoint::<C>::symbol(k, j).name().to_string(), f.clone()))
        .collect()
}

pub fn xi_map(n: usize) -> Result<TropMap, HarnessError> {
    let image = xi(&TorusPointA::generic(n))?;
    Ok(crate::ud::ud_map(&named_map(&image), &chart_vars::<ChartA>(n))?)
}

pub fn xi_inv_map(n: usize) -> Result<TropMap, HarnessError> {
    let image = xi_inv(&TorusPointB::generic(n))?;
    Ok(crate::ud::ud_map(&named_map(&image), &chart_vars::<ChartB>(n))?)
}

pub fn gamma_a_map(n: usize) -> Result<TropMap, HarnessError> {
    let comps: Vec<(String, RatFun)> = gamma_a_coroots(&TorusPointB::generic(n))?
        .into_iter()
        .enumerate()
        .map(|(i, f)| (format!("gammaA[{}]", i + 1), f))
        .collect();
    Ok(crate::ud::ud_map(&comps, &chart_vars::<ChartB>(n))?)
}

/// Tropicalized `α_1^{(i)}, …, α_i^{(i)}` over `A`-coordinates and `z`.
pub fn alpha_exprs(n: usize, i: usize) -> Result<Vec<TropExpr>, HarnessError> {
    let alpha = RatFun::var(alpha_symbol());
    let q = TorusPointB::generic(n);
    (1..=i)
        .map(|k| Ok(tropicalize(&alpha_coeff(i, k, &alpha, &q)?, &alpha_vars(n))?))
        .collect()
}

/// Integer co-character coordinates, in index order, as a `B♯` element.
pub fn point_to_sharp(n: usize, l: &[i64]) -> Result<SharpElement, HarnessError> {
    let m: BTreeMap<(usize, usize), i64> = indices(n).into_iter().zip(l.iter().copied()).collect();
    Ok(chart_to_sharp(n, &m)?)
}

/// `ẽ_i^z v` for `z ≥ 0` and `f̃_i^{-z} v` for `z < 0`, read back as the
/// per-row shifts `β_k = B_{k,i+1}(v) - B_{k,i+1}(v')`.
pub fn crystal_shifts(v: &SharpElement, i: usize, z: i64) -> Result<Vec<i64>, HarnessError> {
    if z >= 0 {
        return Ok(v.beta_split(i, z)?);
    }
    let w = v.crystal_power(i, z)?;
    Ok((1..=i)
        .map(|k| v.get(k, i + 1).expect("k < i+1") - w.get(k, i + 1).expect("k < i+1"))
        .collect())
}

/// Compares the tropical `α_k^{(i)}` with the `B♯` shifts at `(l, z)`.
pub fn main_theorem_at(
    n: usize,
    i: usize,
    exprs: &[TropExpr],
    l: &[i64],
    z: i64,
) -> Result<Option<String>, HarnessError> {
    let mut point = l.to_vec();
    point.push(z);
    let trop: Vec<i64> = exprs
        .iter()
        .map(|e| e.eval(&point).finite())
        .collect::<Result<_, _>>()?;
    let v = point_to_sharp(n, l)?;
    let shifts = crystal_shifts(&v, i, z)?;
    let image_ok = v.apply_split(i, &trop) == v.crystal_power(i, z)?;
    Ok((trop != shifts || !image_ok).then(|| {
        format!("v = {v}, i = {i}, z = {z}: tropical {trop:?}, crystal {shifts:?}")
    }))
}

/// The test points: the full grid `[-3,3]^m × [-3,3]` for `n ≤ 2`, else
/// `count` random points of `[-5,5]^{m+1}`.
pub fn sample_points<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<(Vec<i64>, i64)> {
    let m = n * (n + 1) / 2;
    if n <= 2 {
        let mut out = Vec::new();
        let total = 7usize.pow(m as u32 + 1);
        for code in 0..total {
            let mut c = code;
            let mut digits = Vec::with_capacity(m + 1);
            for _ in 0..=m {
                digits.push((c % 7) as i64 - 3);
                c /= 7;
            }
            let z = digits.pop().expect("m+1 digits");
            out.push((digits, z));
        }
        out
    } else {
        (0..count)
            .map(|_| {
                let l = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
                (l, rng.gen_range(-5..=5))
            })
            .collect()
    }
}

/// Compares `trop_eval` with the degree oracle for one formula at one point.
pub fn soundness_at(f: &Formula, e: &TropExpr, point: &[i64]) -> Result<Option<String>, HarnessError> {
    let l = &point[..f.vars.len()];
    let t = e.eval(l).finite()?;
    let d = degree_oracle(&f.f, &f.vars, l)?;
    Ok((t != d).then(|| format!("{} at {l:?}: tropical {t}, degree {d}", f.name)))
}

/// Named formulas accepted by `trop`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedFormula {
    AlphaIk { i: usize, k: usize },
    GammaA,
    Xi,
    XiInv,
}

impl NamedFormula {
    pub fn parse(name: &str, i: Option<usize>, k: Option<usize>) -> Result<NamedFormula, HarnessError> {
        match name {
            "alpha_ik" => match (i, k) {
                (Some(i), Some(k)) => Ok(NamedFormula::AlphaIk { i, k }),
                _ => Err(HarnessError::BadArgs("alpha_ik needs --i and --k".into())),
            },
            "gammaA" => Ok(NamedFormula::GammaA),
            "xi" => Ok(NamedFormula::Xi),
            "xi_inv" => Ok(NamedFormula::XiInv),
            other => Err(HarnessError::BadArgs(format!(
                "unknown formula {other:?}; expected alpha_ik, gammaA, xi or xi_inv"
            ))),
        }
    }
}

/// Tropical value of a named chart formula at an integer point in index
/// order; `z` is the crystal exponent for `alpha_ik`.
pub fn cmd_trop(f: &NamedFormula, n: usize, point: &[i64], z: Option<i64>) -> Result<Vec<i64>, HarnessError> {
    let m = n * (n + 1) / 2;
    if point.len() != m {
        return Err(HarnessError::BadArgs(format!(
            "rank {n} needs {m} coordinates, got {}",
            point.len()
        )));
    }
    match f {
        NamedFormula::AlphaIk { i, k } => {
            let z = z.ok_or_else(|| HarnessError::BadArgs("alpha_ik needs --z".into()))?;
            let alpha = RatFun::var(alpha_symbol());
            let g = alpha_coeff(*i, *k, &alpha, &TorusPointB::generic(n))?;
            let e = tropicalize(&g, &alpha_vars(n))?;
            let mut l = point.to_vec();
            l.push(z);
            Ok(vec![e.eval(&l).finite()?])
        }
        NamedFormula::GammaA => Ok(gamma_a_map(n)?.eval(point)?),
        NamedFormula::Xi => Ok(xi_map(n)?.eval(point)?),
        NamedFormula::XiInv => Ok(xi_inv_map(n)?.eval(point)?),
    }
}

/// Tropical value of an explicit subtraction-free expression at
/// `name = value` assignments.
pub fn cmd_trop_expr(src: &str, assignment: &[(String, i64)]) -> Result<i64, HarnessError> {
    let f = parse(src)?;
    let vars: Vec<Symbol> = assignment.iter().map(|(s, _)| Symbol::new(s)).collect();
    let l: Vec<i64> = assignment.iter().map(|(_, v)| *v).collect();
    let e = tropicalize(&f, &vars)?;
    Ok(e.eval(&l).finite()?)
}
