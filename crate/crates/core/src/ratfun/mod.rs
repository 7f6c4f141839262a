//! Exact multivariate rational functions over ℚ.
//!
//! [`RatFun`] carries every symbolic identity in the crate. Values built only
//! from variables and positive constants with `+`, `*`, `/` keep a
//! construction tree ([`PosExpr`]) that certifies them subtraction-free; the
//! tropicalization in [`crate::ud`] walks that tree.

mod parse;
mod poly;
#[allow(clippy::module_inception)]
mod ratfun;
mod symbol;

use thiserror::Error;

pub use parse::parse;
pub use poly::{Coef, Monomial, Poly};
pub use ratfun::{PosExpr, RatFun};
pub use symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatFunError {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("degree of the zero function is undefined")]
    ZeroFunction,
    #[error("expected a univariate function, found {0} variables")]
    NotUnivariate(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Builds a coefficient `p/q`.
pub fn q(p: i64, den: i64) -> Coef {
    Coef::new(p.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn v(name: &str) -> RatFun {
        RatFun::named(name)
    }

    fn at(point: &[(&str, i64)]) -> impl Fn(Symbol) -> Coef {
        let m: HashMap<Symbol, Coef> = point
            .iter()
            .map(|&(n, x)| (Symbol::new(n), q(x, 1)))
            .collect();
        move |s| m[&s].clone()
    }

    #[test]
    fn add_examples() {
        assert_eq!(v("x").add(&RatFun::zero()), v("x"));
        let lhs = v("x").div(&v("y")).unwrap().add(&RatFun::one().div(&v("y")).unwrap());
        let rhs = v("x").add(&RatFun::one()).div(&v("y")).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "(x + 1) / (y)");
        let x2 = v("x").pow(2).unwrap();
        let a = x2.mul(&RatFun::int(2)).add(&RatFun::one());
        let b = x2.add(&RatFun::int(3));
        assert_eq!(a.add(&b).to_string(), "3*x^2 + 4");
    }

    #[test]
    fn positivity_flag_propagates() {
        let x = v("x");
        assert!(x.add(&v("y")).is_positive());
        assert!(!x.add(&RatFun::zero()).is_positive());
        assert!(!x.sub(&v("y")).is_positive());
        assert!(x.div(&v("y")).unwrap().is_positive());
        assert!(!x.mul(&RatFun::int(-1)).is_positive());
    }

    #[test]
    fn mul_div_examples() {
        assert_eq!(v("x").mul(&RatFun::one()), v("x"));
        let r = v("x").div(&v("y")).unwrap();
        assert!(r.div(&r).unwrap().is_one());
        let p = v("x").add(&v("y")).mul(&v("x").sub(&v("y")));
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(v("x").div(&RatFun::zero()), Err(RatFunError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        let f = v("x").add(&v("y"));
        assert_eq!(f.eval(&at(&[("x", 1), ("y", 2)])).unwrap(), q(3, 1));
        let g = v("x").div(&v("y")).unwrap();
        assert_eq!(g.eval(&at(&[("x", 1), ("y", 0)])), Err(RatFunError::Pole));
        let c = v("c");
        let h = c.pow(3).unwrap().add(&c.mul(&RatFun::int(2)));
        let h = h.div(&c.pow(2).unwrap().add(&RatFun::one())).unwrap();
        assert_eq!(h.eval(&at(&[("c", 2)])).unwrap(), q(12, 5));
    }

    #[test]
    fn subst_examples() {
        let c = Symbol::new("c");
        let l = |m: &'static [(&'static str, i64)]| move |s: Symbol| {
            m.iter().find(|p| p.0 == s.name()).map(|p| p.1).unwrap_or(0)
        };
        let f = v("x").mul(&v("y"));
        assert_eq!(f.subst_monomial(c, &l(&[("x", 2), ("y", 3)])), RatFun::var(c).pow(5).unwrap());
        let f = v("x").add(&v("y"));
        let two_c = RatFun::var(c).mul(&RatFun::int(2));
        assert_eq!(f.subst_monomial(c, &l(&[("x", 1), ("y", 1)])), two_c);
        // Oracle: (c^2 + c^0) / c^1 by hand.
        let f = v("x").add(&v("y")).div(&v("z")).unwrap();
        let got = f.subst_monomial(c, &l(&[("x", 2), ("y", 0), ("z", 1)]));
        let cc = RatFun::var(c);
        let want = cc.pow(2).unwrap().add(&RatFun::one()).div(&cc).unwrap();
        assert_eq!(got, want);
        assert!(got.is_positive());
    }

    #[test]
    fn degree_examples() {
        let c = RatFun::named("c");
        assert_eq!(c.pow(5).unwrap().degree(), Ok(5));
        let h = c.pow(3).unwrap().add(&c.mul(&RatFun::int(2)));
        let h = h.div(&c.pow(2).unwrap().add(&RatFun::one())).unwrap();
        assert_eq!(h.degree(), Ok(1));
        assert_eq!(RatFun::int(7).degree(), Ok(0));
        assert_eq!(RatFun::zero().degree(), Err(RatFunError::ZeroFunction));
        assert!(matches!(v("x").mul(&v("y")).degree(), Err(RatFunError::NotUnivariate(2))));
    }

    #[test]
    fn eq_examples() {
        let a = v("x").div(&v("y")).unwrap();
        let b = RatFun::from_parts(
            v("x").mul(&v("z")).num().clone(),
            v("y").mul(&v("z")).num().clone(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(v("x").add(&v("y")), v("y").add(&v("x")));
        assert_ne!(v("x"), v("x").add(&RatFun::one()));
    }

    #[test]
    fn certified_quotient_stays_positive() {
        // (x^3 + 1)/(x + 1) = x^2 - x + 1 would break the certificate invariant.
        let x = v("x");
        let f = x.pow(3).unwrap().add(&RatFun::one()).div(&x.add(&RatFun::one())).unwrap();
        assert!(f.is_positive());
        assert!(f.certificate_consistent());
        let g = f.clone().uncertified().mul(&RatFun::one());
        assert_eq!(f, g);
    }
}
