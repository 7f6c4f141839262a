//! Rational functions `num / den` with an optional subtraction-free certificate.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::poly::{coef_from_int, Coef, Monomial, Poly};
use super::{RatFunError, Symbol};

/// Construction history of a subtraction-free rational function: built only
/// from variables and positive constants with `+`, `*`, `/`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosExpr {
    Const(Coef),
    Var(Symbol),
    Add(Vec<Arc<PosExpr>>),
    Mul(Vec<Arc<PosExpr>>),
    Div(Arc<PosExpr>, Arc<PosExpr>),
}

impl PosExpr {
    /// Replaces every variable through `f`, keeping the shape of the tree.
    pub fn map_vars(&self, f: &impl Fn(Symbol) -> Arc<PosExpr>) -> Arc<PosExpr> {
        Arc::new(match self {
            PosExpr::Const(c) => PosExpr::Const(c.clone()),
            PosExpr::Var(s) => return f(*s),
            PosExpr::Add(xs) => PosExpr::Add(xs.iter().map(|x| x.map_vars(f)).collect()),
            PosExpr::Mul(xs) => PosExpr::Mul(xs.iter().map(|x| x.map_vars(f)).collect()),
            PosExpr::Div(a, b) => PosExpr::Div(a.map_vars(f), b.map_vars(f)),
        })
    }

    pub fn node_count(&self) -> usize {
        match self {
            PosExpr::Const(_) | PosExpr::Var(_) => 1,
            PosExpr::Add(xs) | PosExpr::Mul(xs) => 1 + xs.iter().map(|x| x.node_count()).sum::<usize>(),
            PosExpr::Div(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }
}

fn flatten(kind_add: bool, a: &Arc<PosExpr>, b: &Arc<PosExpr>) -> Arc<PosExpr> {
    let mut parts = Vec::new();
    for x in [a, b] {
        match (kind_add, x.as_ref()) {
            (true, PosExpr::Add(xs)) | (false, PosExpr::Mul(xs)) => parts.extend(xs.iter().cloned()),
            _ => parts.push(x.clone()),
        }
    }
    Arc::new(if kind_add {
        PosExpr::Add(parts)
    } else {
        PosExpr::Mul(parts)
    })
}

/// Exact quotient, refused when it would break the all-positive coefficient
/// invariant of a certified value (e.g. `(x^3+1)/(x+1)`).
fn exact_quotient(a: &Poly, b: &Poly, positive: bool) -> Option<Poly> {
    let q = a.div_exact(b)?;
    (!positive || q.all_coefficients_positive()).then_some(q)
}

/// Exact rational function over the rationals.
///
/// Fractions are kept in a normalized but not fully reduced form: the
/// denominator is nonzero with leading coefficient 1, common monomial
/// factors are cancelled, and exact polynomial quotients are taken when one
/// side divides the other. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFun {
    num: Poly,
    den: Poly,
    cert: Option<Arc<PosExpr>>,
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
            cert: None,
        }
    }

    pub fn one() -> RatFun {
        RatFun::constant(Coef::one())
    }

    pub fn int(k: i64) -> RatFun {
        RatFun::constant(coef_from_int(k))
    }

    pub fn ratio(p: i64, q: i64) -> RatFun {
        RatFun::constant(coef_from_int(p) / coef_from_int(q))
    }

    /// A constant; carries a certificate iff it is positive.
    pub fn constant(c: Coef) -> RatFun {
        let cert = c.is_positive().then(|| Arc::new(PosExpr::Const(c.clone())));
        RatFun {
            num: Poly::constant(c),
            den: Poly::one(),
            cert,
        }
    }

    pub fn var(s: Symbol) -> RatFun {
        RatFun {
            num: Poly::var(s),
            den: Poly::one(),
            cert: Some(Arc::new(PosExpr::Var(s))),
        }
    }

    pub fn named(name: &str) -> RatFun {
        RatFun::var(Symbol::new(name))
    }

    /// Uncertified polynomial.
    pub fn from_poly(p: Poly) -> RatFun {
        RatFun {
            num: p,
            den: Poly::one(),
            cert: None,
        }
    }

    /// `num / den` without a certificate.
    pub fn from_parts(num: Poly, den: Poly) -> Result<RatFun, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        Ok(RatFun::normalized(num, den, None))
    }

    fn normalized(mut num: Poly, mut den: Poly, cert: Option<Arc<PosExpr>>) -> RatFun {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = den.as_constant() {
            if !c.is_one() {
                num = num.scale(&c.recip());
            }
            return RatFun {
                num,
                den: Poly::one(),
                cert,
            };
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            num = num.div_monomial(&g);
            den = den.div_monomial(&g);
        }
        let positive = cert.is_some();
        if num.len() >= den.len() {
            if let Some(q) = exact_quotient(&num, &den, positive) {
                return RatFun {
                    num: q,
                    den: Poly::one(),
                    cert,
                };
            }
        }
        if den.len() > num.len() && num.len() > 1 {
            if let Some(q) = exact_quotient(&den, &num, positive) {
                let lc = q.leading().expect("nonzero").1.clone();
                return RatFun {
                    num: Poly::constant(lc.recip()),
                    den: q.scale(&lc.recip()),
                    cert,
                };
            }
        }
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        debug_assert!(
            cert.is_none() || (num.all_coefficients_positive() && den.all_coefficients_positive())
        );
        RatFun { num, den, cert }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.cert.is_some()
    }

    pub fn certificate(&self) -> Option<&Arc<PosExpr>> {
        self.cert.as_ref()
    }

    /// Drops the certificate (the value is unchanged).
    pub fn uncertified(mut self) -> RatFun {
        self.cert = None;
        self
    }

    pub fn as_constant(&self) -> Option<Coef> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    pub fn add(&self, g: &RatFun) -> RatFun {
        if self.is_zero() {
            return g.clone().without_cert_unless(self.is_positive());
        }
        if g.is_zero() {
            return self.clone().without_cert_unless(g.is_positive());
        }
        let cert = match (&self.cert, &g.cert) {
            (Some(a), Some(b)) => Some(flatten(true, a, b)),
            _ => None,
        };
        if self.den == g.den {
            let num = self.num.add(&g.num);
            if num.is_zero() {
                return RatFun::zero();
            }
            return RatFun::normalized(num, self.den.clone(), cert);
        }
        // One denominator a multiple of the other: use it as the common one.
        for (big, small) in [(self, g), (g, self)] {
            if big.den.len() > small.den.len() {
                if let Some(q) = big.den.div_exact(&small.den) {
                    let num = big.num.add(&small.num.mul(&q));
                    if num.is_zero() {
                        return RatFun::zero();
                    }
                    return RatFun::normalized(num, big.den.clone(), cert);
                }
            }
        }
        let num =self.num.mul(&g.den).add(&g.num.mul(&self.den));
        if num.is_zero() {
            return RatFun::zero();
        }
        RatFun::normalized(num, self.den.mul(&g.den), cert)
    }

    fn without_cert_unless(mut self, keep: bool) -> RatFun {
        if !keep {
            self.cert = None;
        }
        self
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
            cert: None,
        }
    }

    pub fn sub(&self, g: &RatFun) -> RatFun {
        self.add(&g.neg()).uncertified()
    }

    pub fn mul(&self, g: &RatFun) -> RatFun {
        let cert = match (&self.cert, &g.cert) {
            (Some(a), Some(b)) => Some(flatten(false, a, b)),
            _ => None,
        };
        self.mul_with_cert(g, cert)
    }

    fn mul_with_cert(&self, g: &RatFun, cert: Option<Arc<PosExpr>>) -> RatFun {
        if self.is_zero() || g.is_zero() {
            return RatFun::zero();
        }
        // Cross-cancel exact factors before multiplying out.
        let (mut n1, mut d1, mut n2, mut d2) =
            (self.num.clone(), self.den.clone(), g.num.clone(), g.den.clone());
        let positive = cert.is_some();
        if !d2.is_one() && n1.len() >= d2.len() {
            if let Some(q) = exact_quotient(&n1, &d2, positive) {
                n1 = q;
                d2 = Poly::one();
            }
        }
        if !d1.is_one() && n2.len() >= d1.len() {
            if let Some(q) = exact_quotient(&n2, &d1, positive) {
                n2 = q;
                d1 = Poly::one();
            }
        }
        RatFun::normalized(n1.mul(&n2), d1.mul(&d2), cert)
    }

    pub fn recip(&self) -> Result<RatFun, RatFunError> {
        RatFun::one().div(self)
    }

    pub fn div(&self, g: &RatFun) -> Result<RatFun, RatFunError> {
        if g.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        let cert = match (&self.cert, &g.cert) {
            (Some(a), Some(b)) => Some(Arc::new(PosExpr::Div(a.clone(), b.clone()))),
            _ => None,
        };
        let flipped = RatFun {
            num: g.den.clone(),
            den: g.num.clone(),
            cert: None,
        };
        Ok(self.mul_with_cert(&flipped, cert))
    }

    pub fn pow(&self, e: i32) -> Result<RatFun, RatFunError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Extensional equality via cross-multiplication of canonical forms.
    pub fn equals(&self, g: &RatFun) -> bool {
        if self.den == g.den {
            return self.num == g.num;
        }
        self.num.mul(&g.den) == g.num.mul(&self.den)
    }

    pub fn eval(&self, value: &impl Fn(Symbol) -> Coef) -> Result<Coef, RatFunError> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(RatFunError::Pole);
        }
        Ok(self.num.eval(value) / d)
    }

    /// Substitutes `s -> c^{l(s)}` (Laurent exponents allowed) and returns a
    /// univariate function in `c`. Certificates are carried along.
    pub fn subst_monomial(&self, c: Symbol, l: &impl Fn(Symbol) -> i64) -> RatFun {
        let num = self.num.subst_monomial(l);
        let den = self.den.subst_monomial(l);
        let shift = num
            .keys()
            .chain(den.keys())
            .copied()
            .min()
            .unwrap_or(0)
            .min(0);
        let to_poly = |m: std::collections::BTreeMap<i64, Coef>| {
            Poly::from_terms(m.into_iter().map(|(e, k)| {
                (Monomial::from_pairs([(c, (e - shift) as u32)]), k)
            }))
        };
        let (num, den) = (to_poly(num), to_poly(den));
        let cert = self.cert.as_ref().map(|t| {
            t.map_vars(&|s| {
                let e = l(s);
                let cv = Arc::new(PosExpr::Var(c));
                let power = Arc::new(PosExpr::Mul(vec![cv; e.unsigned_abs() as usize]));
                if e >= 0 {
                    power
                } else {
                    Arc::new(PosExpr::Div(Arc::new(PosExpr::Const(Coef::one())), power))
                }
            })
        });
        if den.is_zero() {
            // Only possible for uncertified input whose denominator cancels
            // along this co-character.
            return RatFun {
                num: Poly::zero(),
                den: Poly::one(),
                cert: None,
            };
        }
        RatFun::normalized(num, den, cert)
    }

    /// Degree `deg(num) - deg(den)` of a univariate function.
    pub fn degree(&self) -> Result<i64, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::ZeroFunction);
        }
        let vars = self.variables();
        if vars.len() > 1 {
            return Err(RatFunError::NotUnivariate(vars.len()));
        }
        let dn = self.num.total_degree().unwrap_or(0) as i64;
        let dd = self.den.total_degree().unwrap_or(0) as i64;
        Ok(dn - dd)
    }

    /// Checks the certificate invariant: a certified value has all-positive
    /// coefficients in both numerator and denominator.
    pub fn certificate_consistent(&self) -> bool {
        self.cert.is_none()
            || (self.num.all_coefficients_positive() && self.den.all_coefficients_positive())
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)?;
        if self.cert.is_some() {
            f.write_str(" [+]")?;
        }
        Ok(())
    }
}

