//! Sparse multivariate polynomials over the rationals in expanded canonical form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use super::Symbol;

pub type Coef = BigRational;

/// Exponent vector stored sparsely as `(variable, exponent)` pairs, sorted by
/// variable id, exponents strictly positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Symbol, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(s: Symbol) -> Monomial {
        let mut v = SmallVec::new();
        v.push((s, 1));
        Monomial(v)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Symbol, u32)>) -> Monomial {
        let mut acc: BTreeMap<Symbol, u32> = BTreeMap::new();
        for (s, e) in pairs {
            *acc.entry(s).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v == s)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < v {
                j += 1;
            }
            if j < other.0.len() && other.0[j].0 == v {
                out.push((v, e.min(other.0[j].1)));
            }
        }
        Monomial(out)
    }

    /// Name-sorted view, used for deterministic printing and term order.
    fn by_name(&self) -> Vec<(&'static str, u32)> {
        let mut v: Vec<_> = self.0.iter().map(|&(s, e)| (s.name(), e)).collect();
        v.sort_unstable();
        v
    }
}

/// Graded lexicographic order on internal variable ids.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&self.0, &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn lex_cmp<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            // The one carrying the smaller variable has a positive exponent
            // where the other has zero.
            return if x.0 < y.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

fn grlex_by_name(a: &[(&str, u32)], b: &[(&str, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|p| p.1).sum();
    let db: u32 = b.iter().map(|p| p.1).sum();
    da.cmp(&db).then_with(|| lex_cmp(a, b))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.by_name())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, factors: &[(&str, u32)]) -> fmt::Result {
    for (idx, (name, e)) in factors.iter().enumerate() {
        if idx > 0 {
            f.write_str("*")?;
        }
        f.write_str(name)?;
        if *e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Polynomial with terms sorted by descending graded lex order; no zero
/// coefficients, no repeated monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Coef)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Coef::one())
    }

    pub fn constant(c: Coef) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(s: Symbol) -> Poly {
        Poly {
            terms: vec![(Monomial::var(s), Coef::one())],
        }
    }

    pub fn monomial(m: Monomial, c: Coef) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coef)>) -> Poly {
        let mut acc: HashMap<Monomial, Coef> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Coef::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Coef>) -> Poly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Coef)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Coef> {
        match self.terms.as_slice() {
            [] => Some(Coef::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Coef)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.pairs().iter().map(|&(s, _)| s))
            .collect()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_positive())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Coef) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &Coef| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if let Some(p) = self.mul_small_int(other) {
            return p;
        }
        let mut acc: HashMap<Monomial, Coef> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coef::zero) += ca * cb;
            }
        }
        Self::from_map(acc)
    }

    fn small_ints(&self) -> Option<Vec<i64>> {
        self.terms
            .iter()
            .map(|(_, c)| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    /// Product with machine-integer coefficients; `None` if a coefficient is
    /// not a small integer or an intermediate sum overflows.
    fn mul_small_int(&self, other: &Poly) -> Option<Poly> {
        let (xa, xb) = (self.small_ints()?, other.small_ints()?);
        let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for ((ma, _), ca) in self.terms.iter().zip(&xa) {
            for ((mb, _), cb) in other.terms.iter().zip(&xb) {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = e.checked_add(i128::from(*ca) * i128::from(*cb))?;
            }
        }
        let mut terms: Vec<(Monomial, Coef)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, Coef::from_integer(BigInt::from(c))))
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Some(Poly { terms })
    }

    /// Multiplication by a single term keeps the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d` when `d` divides `self`; `None` otherwise.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(dm)?, c / dc));
            }
            return Some(Poly { terms });
        }
        // Cheap necessary conditions before running the division loop.
        if self.terms.len() < d.terms.len() && self.terms.len() == 1 {
            return None;
        }
        self.terms.last()?.0.div(&d.terms.last()?.0)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        let mut steps = 0usize;
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
            steps += 1;
            if steps > 4 * (self.terms.len() + 8) * (d.terms.len() + 1) {
                return None;
            }
        }
        Some(Poly { terms: quot })
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.div(m).expect("monomial divides every term"), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, value: &impl Fn(Symbol) -> Coef) -> Coef {
        let mut cache: HashMap<Symbol, Coef> = HashMap::new();
        let mut total = Coef::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(s, e) in m.pairs() {
                let v = cache.entry(s).or_insert_with(|| value(s));
                t *= pow_coef(v, e as i32);
            }
            total += t;
        }
        total
    }

    /// Substitutes `s -> c^{l(s)}` and returns the Laurent polynomial in `c`
    /// as exponent -> coefficient (zero coefficients dropped).
    pub fn subst_monomial(&self, l: &impl Fn(Symbol) -> i64) -> BTreeMap<i64, Coef> {
        let mut out: BTreeMap<i64, Coef> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e: i64 = m.pairs().iter().map(|&(s, e)| l(s) * e as i64).sum();
            *out.entry(e).or_insert_with(Coef::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Term list in name-based graded lex order (descending), the order used
    /// for serialization.
    pub fn sorted_for_display(&self) -> Vec<(Vec<(&'static str, u32)>, &Coef)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.by_name(), c)).collect();
        v.sort_by(|a, b| grlex_by_name(&b.0, &a.0));
        v
    }
}

pub(crate) fn pow_coef(v: &Coef, e: i32) -> Coef {
    if e >= 0 {
        num_traits::pow(v.clone(), e as usize)
    } else {
        num_traits::pow(v.recip(), (-e) as usize)
    }
}

pub(crate) fn coef_from_int(k: i64) -> Coef {
    Coef::from_integer(BigInt::from(k))
}

fn write_coef(f: &mut fmt::Formatter<'_>, c: &Coef) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "({}/{})", c.numer(), c.denom())
    }
}

/// `(3/2)*a[1,2]^2*c1 + 1`: terms in descending graded lex order by name,
/// coefficient `1` omitted, negative terms joined with ` - `.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.sorted_for_display().into_iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_empty() {
                write_coef(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_coef(f, &mag)?;
                    f.write_str("*")?;
                }
                write_monomial(f, &m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
