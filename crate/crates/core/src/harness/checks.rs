use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::trop::{
    alpha_exprs, gamma_a_map, inventory, main_theorem_at, point_to_sharp, sample_points,
    soundness_at, xi_inv_map, xi_map,
};
use super::{HarnessError, Suite, VerifyConfig, VerifyReport};
use crate::charts::{
    build_y, e_act_a, e_act_big_a, gamma_a, gamma_a_coroots, xi, xi_inv, TorusPointA, TorusPointB,
};
use crate::gyt::sample::{random_sharp, random_tableau};
use crate::gyt::{arabic_reading, tableau_rowcounts, tensor_e_pow, weyl_word, GytError, SharpElement, Tableau};
use crate::ratfun::{Coef, RatFun, Symbol};
use crate::slgroup::verify::{
    verify_f_umorphism, verify_t_condition, verify_verma, verma_on, IdentityReport,
};
use crate::slgroup::{alphacheck, e_act, f_det, gamma, varphi, MatRF};
use crate::ud::tropicalize;

type Outcome = Result<Option<String>, HarnessError>;

fn timed(check: String, n: usize, body: impl FnOnce() -> Outcome) -> Result<VerifyReport, HarnessError> {
    let start = Instant::now();
    let counterexample = body()?;
    Ok(VerifyReport {
        check,
        n,
        holds: counterexample.is_none(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        counterexample,
    })
}

fn first_failure(reports: impl IntoIterator<Item = IdentityReport>) -> Option<String> {
    reports.into_iter().find(|r| !r.holds).map(|r| {
        format!("{}: {}", r.identity, r.witness.unwrap_or_default())
    })
}

fn compare(name: &str, lhs: &MatRF, rhs: &MatRF) -> IdentityReport {
    IdentityReport::compare(name, lhs, rhs)
}

/// Runs one suite (or all of them) at rank `n`; reports are sorted by name.
pub fn run_suite(suite: Suite, n: usize, cfg: &VerifyConfig) -> Result<Vec<VerifyReport>, HarnessError> {
    if n == 0 {
        return Err(HarnessError::BadArgs("rank must be at least 1".into()));
    }
    let mut out = Vec::new();
    if suite == Suite::All {
        for s in Suite::EACH {
            let m = n.min(cfg.cap.unwrap_or(s.cap()));
            out.extend(run_one(s, m, cfg)?);
        }
    } else {
        let cap = cfg.cap.unwrap_or(suite.cap());
        if n > cap {
            return Err(HarnessError::AboveCap { suite, n, cap });
        }
        out = run_one(suite, n, cfg)?;
    }
    out.sort_by(|a, b| (&a.check, a.n).cmp(&(&b.check, b.n)));
    Ok(out)
}

fn run_one(suite: Suite, n: usize, cfg: &VerifyConfig) -> Result<Vec<VerifyReport>, HarnessError> {
    match suite {
        Suite::Verma => verma(n),
        Suite::Axioms => axioms(n),
        Suite::Umorphism => umorphism(n),
        Suite::FiMi => fi_mi(n),
        Suite::Prop43 => prop43(n),
        Suite::Positivity => positivity(n, cfg.seed),
        Suite::SharpAxioms => sharp_axioms(n, cfg.seed),
        Suite::UdMain => ud_main(n, cfg.seed),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn verma(n: usize) -> Result<Vec<VerifyReport>, HarnessError> {
    if n == 1 {
        return Ok(vec![timed("verma(no pairs)".into(), n, || Ok(None))?]);
    }
    let q = TorusPointB::generic(n);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(timed(format!("verma({i},{j})"), n, || {
                let group = verify_verma(i, j, n)?;
                let chart = verma_on(i, j, &q, format!("verma in A-coordinates ({i},{j})"), |k, c, x| {
                    e_act_big_a(k, c, x)
                })?;
                Ok(first_failure([group, chart]))
            })?);
        }
    }
    Ok(out)
}

fn axioms(n: usize) -> Result<Vec<VerifyReport>, HarnessError> {
    let p = TorusPointA::generic(n);
    let u = build_y(&p);
    let q = TorusPointB::generic(n);
    let c = RatFun::named("c");
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(timed(format!("axioms/e-one({i})"), n, || {
            let one = RatFun::one();
            let group = compare("e_i^1 = id on Y(a)", &e_act(i, &one, &u)?, &u);
            let chart = verma_like(&e_act_big_a(i, &one, &q)?, &q, "e_i^1 = id on A");
            Ok(first_failure([group, chart]))
        })?);
        out.push(timed(format!("axioms/gamma-equivariance({i})"), n, || {
            let h = alphacheck(n, i, &c)?;
            let group = compare(
                "gamma(e_i^c u) = alpha_i(c) gamma(u)",
                &gamma(&e_act(i, &c, &u)?)?.to_matrix(),
                &h.mul(&gamma(&u)?).to_matrix(),
            );
            let chart = compare(
                "gammaA(e_i^c q) = alpha_i(c) gammaA(q)",
                &gamma_a(&e_act_big_a(i, &c, &q)?)?.to_matrix(),
                &h.mul(&gamma_a(&q)?).to_matrix(),
            );
            Ok(first_failure([group, chart]))
        })?);
    }
    out.push(timed("axioms/gamma-chart".into(), n, || {
        Ok(first_failure([compare(
            "gammaA(xi(a)) = gamma(Y(a))",
            &gamma_a(&xi(&p)?)?.to_matrix(),
            &gamma(&u)?.to_matrix(),
        )]))
    })?);
    Ok(out)
}

fn verma_like<C: crate::charts::Chart>(
    lhs: &crate::charts::ChartPoint<C>,
    rhs: &crate::charts::ChartPoint<C>,
    name: &str,
) -> IdentityReport {
    use crate::slgroup::verify::VermaComparable;
    VermaComparable::report(name.to_string(), lhs, rhs)
}

fn umorphism(n: usize) -> Result<Vec<VerifyReport>, HarnessError> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(timed(format!("umorphism/F({i})"), n, || {
            Ok(first_failure([verify_f_umorphism(i, n)?]))
        })?);
        out.push(timed(format!("umorphism/T({i})"), n, || {
            Ok(first_failure([verify_t_condition(i, n)?]))
        })?);
    }
    Ok(out)
}

fn fi_mi(n: usize) -> Result<Vec<VerifyReport>, HarnessError> {
    let p = TorusPointA::generic(n);
    let u = build_y(&p);
    let mut out = Vec::new();
    out.push(timed("fi-mi/det".into(), n, || {
        let d = u.det();
        Ok((!d.is_one()).then(|| format!("det Y(a) = {d}")))
    })?);
    for i in 1..=n {
        out.push(timed(format!("fi-mi/f({i})"), n, || {
            let want = (1..=i)
                .flat_map(|k| (k..=n - i + k).map(move |j| (k, j)))
                .fold(RatFun::one(), |acc, (k, j)| acc.mul(p.get(k, j)));
            let got = f_det(i, &u)?;
            Ok((got != want).then(|| format!("f_{i} = {got}, product = {want}")))
        })?);
        out.push(timed(format!("fi-mi/phi({i})"), n, || {
            let want = (1..=i).fold(RatFun::zero(), |acc, k| acc.add(p.get(k, i)));
            let got = varphi(i, &u)?;
            Ok((got != want).then(|| format!("phi_{i} = {got}, column sum = {want}")))
        })?);
    }
    Ok(out)
}

fn prop43(n: usize) -> Result<Vec<VerifyReport>, HarnessError> {
    let p = TorusPointA::generic(n);
    let u = build_y(&p);
    let alpha = RatFun::named("alpha");
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(timed(format!("prop43/closed-form({i})"), n, || {
            let lhs = build_y(&e_act_a(i, &alpha, &p)?);
            let rhs = e_act(i, &alpha, &u)?;
            Ok(first_failure([compare("Y(e_i a) = e_i Y(a)", &lhs, &rhs)]))
        })?);
        out.push(timed(format!("prop43/chart-compatibility({i})"), n, || {
            let lhs = xi(&e_act_a(i, &alpha, &p)?)?;
            let rhs = e_act_big_a(i, &alpha, &xi(&p)?)?;
            Ok(first_failure([verma_like(&lhs, &rhs, "xi(e_i a) = e_i xi(a)")]))
        })?);
    }
    Ok(out)
}

fn random_positive<R: Rng>(rng: &mut R) -> Coef {
    Coef::new(BigInt::from(rng.gen_range(1..=50)), BigInt::from(rng.gen_range(1..=50)))
}

/// Every component certified, and positive at `points` random positive points.
fn positive_components<R: Rng>(rng: &mut R, comps: &[(String, RatFun)], points: usize) -> Option<String> {
    for (name, f) in comps {
        if f.certificate().is_none() || !f.certificate_consistent() {
            return Some(format!("{name} = {f} has no subtraction-free certificate"));
        }
    }
    let vars: Vec<Symbol> = comps
        .iter()
        .flat_map(|(_, f)| f.variables())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    for _ in 0..points {
        let values: Vec<(Symbol, Coef)> = vars.iter().map(|&s| (s, random_positive(rng))).collect();
        let at = |s: Symbol| values.iter().find(|(v, _)| *v == s).expect("listed").1.clone();
        for (name, f) in comps {
            match f.eval(&at) {
                Ok(x) if x.is_positive() => {}
                other => return Some(format!("{name} at {values:?} gives {other:?}")),
            }
        }
    }
    None
}

fn coords<C: crate::charts::Chart>(label: &str, p: &crate::charts::ChartPoint<C>) -> Vec<(String, RatFun)> {
    p.coords()
        .iter()
        .map(|((k, j), f)| (format!("{label}[{k},{j}]"), f.clone()))
        .collect()
}

fn positivity(n: usize, seed: u64) -> Result<Vec<VerifyReport>, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, q) = (TorusPointA::generic(n), TorusPointB::generic(n));
    let alpha = RatFun::named("alpha");
    let mut out = Vec::new();
    for i in 1..=n {
        let comps = coords("e_A", &e_act_big_a(i, &alpha, &q)?);
        out.push(timed(format!("positivity/e_act_A({i})"), n, || {
            Ok(positive_components(&mut rng, &comps, 100))
        })?);
        let comps = coords("e_a", &e_act_a(i, &alpha, &p)?);
        out.push(timed(format!("positivity/e_act_a({i})"), n, || {
            Ok(positive_components(&mut rng, &comps, 100))
        })?);
    }
    let comps: Vec<(String, RatFun)> = gamma_a_coroots(&q)?
        .into_iter()
        .enumerate()
        .map(|(i, f)| (format!("gammaA[{}]", i + 1), f))
        .collect();
    out.push(timed("positivity/gammaA".into(), n, || Ok(positive_components(&mut rng, &comps, 100)))?);
    let comps = coords("xi", &xi(&p)?);
    out.push(timed("positivity/xi".into(), n, || Ok(positive_components(&mut rng, &comps, 100)))?);
    let comps = coords("xi_inv", &xi_inv(&q)?);
    out.push(timed("positivity/xi_inv".into(), n, || Ok(positive_components(&mut rng, &comps, 100)))?);
    Ok(out)
}

fn sharp_axioms_at(v: &SharpElement) -> Result<Option<String>, GytError> {
    for i in 1..=v.n() {
        let e = v.etilde(i)?;
        let f = v.ftilde(i)?;
        let mut w = v.weight();
        w[i - 1] += 1;
        let failures = [
            (v.phi(i)? != v.epsilon(i)? + v.weight_pairing(i)?, "phi = eps + <h,wt>"),
            (e.weight() != w, "wt(e v) = wt(v) + alpha_i"),
            (e.epsilon(i)? != v.epsilon(i)? - 1, "eps(e v) = eps(v) - 1"),
            (e.phi(i)? != v.phi(i)? + 1, "phi(e v) = phi(v) + 1"),
            (e.ftilde(i)? != *v, "f e v = v"),
            (f.etilde(i)? != *v, "e f v = v"),
        ];
        if let Some((_, what)) = failures.iter().find(|(bad, _)| *bad) {
            return Ok(Some(format!("{what} fails at v = {}, i = {i}", json(v))));
        }
    }
    Ok(None)
}

fn json(v: &SharpElement) -> String {
    serde_json::to_string(&v.to_json()).unwrap_or_else(|_| v.to_string())
}

fn weyl_at(v: &SharpElement) -> Result<Option<String>, GytError> {
    let n = v.n();
    for i in 1..=n {
        if weyl_word(&[i, i], v)? != *v {
            return Ok(Some(format!("s_{i}^2 != id at {}", json(v))));
        }
        for j in i + 1..=n {
            let (l, r) = if j == i + 1 {
                (weyl_word(&[i, j, i], v)?, weyl_word(&[j, i, j], v)?)
            } else {
                (weyl_word(&[i, j], v)?, weyl_word(&[j, i], v)?)
            };
            if l != r {
                return Ok(Some(format!("braid relation ({i},{j}) fails at {}", json(v))));
            }
        }
    }
    Ok(None)
}

fn power_at(v: &SharpElement, beta: i64) -> Result<Option<String>, GytError> {
    for i in 1..=v.n() {
        let split = v.beta_split(i, beta)?;
        let mut it = v.clone();
        for _ in 0..beta {
            it = it.etilde(i)?;
        }
        if split.iter().sum::<i64>() != beta || v.etilde_pow(i, beta)? != it {
            return Ok(Some(format!("e_{i}^{beta} at {}: split {split:?}", json(v))));
        }
    }
    Ok(None)
}

/// Row counts after the tensor rule against `etilde_pow`; `None` if annihilated.
pub(crate) fn tableau_case(t: &Tableau, n: usize, i: usize, beta: u32) -> Result<Option<Option<String>>, GytError> {
    let w = match tensor_e_pow(i, beta, &arabic_reading(t)) {
        Ok(w) => w,
        Err(GytError::Annihilated) => return Ok(None),
        Err(e) => return Err(e),
    };
    let lhs = tableau_rowcounts(&Tableau::from_reading(n, t.shape(), &w)?, n);
    let rhs = tableau_rowcounts(t, n).etilde_pow(i, i64::from(beta))?;
    Ok(Some((lhs != rhs).then(|| {
        format!("tableau {:?}, i = {i}, beta = {beta}: tensor rule {lhs}, formula {rhs}", t.rows())
    })))
}

fn sharp_axioms(n: usize, seed: u64) -> Result<Vec<VerifyReport>, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let population: Vec<SharpElement> = (0..1000).map(|_| random_sharp(&mut rng, n, -10, 10)).collect();
    let mut out = Vec::new();
    out.push(timed("sharp-axioms/crystal".into(), n, || {
        for v in &population {
            if let Some(c) = sharp_axioms_at(v)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    })?);
    out.push(timed("sharp-axioms/weyl".into(), n, || {
        for v in &population {
            if let Some(c) = weyl_at(v)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    })?);
    out.push(timed("sharp-axioms/power".into(), n, || {
        for (idx, v) in population.iter().enumerate().take(500) {
            if let Some(c) = power_at(v, (idx % 7) as i64)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    })?);
    out.push(timed("sharp-axioms/tableaux".into(), n, || {
        let mut done = 0;
        while done < 500 {
            let t = random_tableau(&mut rng, n, 12);
            let i = rng.gen_range(1..=n);
            let beta = rng.gen_range(0..=4);
            match tableau_case(&t, n, i, beta)? {
                None => continue,
                Some(Some(c)) => return Ok(Some(c)),
                Some(None) => done += 1,
            }
        }
        Ok(None)
    })?);
    Ok(out)
}

fn ud_main(n: usize, seed: u64) -> Result<Vec<VerifyReport>, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
    let points = sample_points(&mut rng, n, 2000);
    let mut out = Vec::new();
    for i in 1..=n {
        let exprs = alpha_exprs(n, i)?;
        out.push(timed(format!("ud-main/alpha({i})"), n, || {
            for (l, z) in &points {
                if let Some(c) = main_theorem_at(n, i, &exprs, l, *z)? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        })?);
    }
    out.push(timed("ud-main/gammaA-weight".into(), n, || {
        let g = gamma_a_map(n)?;
        for (l, _) in &points {
            let (t, w) = (g.eval(l)?, point_to_sharp(n, l)?.weight());
            if t != w {
                return Ok(Some(format!("at {l:?}: tropical {t:?}, weight {w:?}")));
            }
        }
        Ok(None)
    })?);
    out.push(timed("ud-main/soundness".into(), n, || {
        let formulas = inventory(n)?;
        let exprs = formulas
            .iter()
            .map(|f| tropicalize(&f.f, &f.vars))
            .collect::<Result<Vec<_>, _>>()?;
        for (l, z) in &points {
            let mut point = l.clone();
            point.push(*z);
            for (f, e) in formulas.iter().zip(&exprs) {
                if let Some(c) = soundness_at(f, e, &point)? {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    })?);
    out.push(timed("ud-main/functoriality".into(), n, || {
        let (f, g) = (xi_map(n)?, xi_inv_map(n)?);
        for (l, _) in &points {
            if g.eval_after(&f, l)? != *l || f.eval_after(&g, l)? != *l {
                return Ok(Some(format!("xi_inv . xi != id at {l:?}")));
            }
        }
        Ok(None)
    })?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_all_hold() {
        let reports = run_suite(Suite::All, 1, &VerifyConfig::default()).unwrap();
        for r in &reports {
            assert!(r.holds, "{r}");
        }
        let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn verma_rank_two_single_report() {
        let reports = run_suite(Suite::Verma, 2, &VerifyConfig::default()).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].holds);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            run_suite(Suite::Verma, 9, &VerifyConfig::default()),
            Err(HarnessError::AboveCap { cap: 3, .. })
        ));
        assert!(run_suite(Suite::Prop43, 4, &VerifyConfig::default()).is_err());
        assert!("nonsense".parse::<Suite>().is_err());
        assert_eq!("fi-mi".parse::<Suite>().unwrap(), Suite::FiMi);
    }
}
