//! The unipotent crystal `(U^-, F)` and the geometric crystal it induces.

use super::gauss::gauss;
use super::{alphacheck, gen_x, MatRF, SlGroupError, TorusElem};
use crate::ratfun::RatFun;

fn check_index(i: usize, n: usize) -> Result<(), SlGroupError> {
    if i == 0 || i > n {
        Err(SlGroupError::IndexOutOfRange { i, n })
    } else {
        Ok(())
    }
}

/// `χ_i` on `B^-`: entry `(i+1, i)` over the diagonal entry `(i, i)`, so the
/// torus part is quotiented out.
pub fn chi(i: usize, b: &MatRF) -> Result<RatFun, SlGroupError> {
    check_index(i, b.rank())?;
    Ok(b.get(i + 1, i).div(b.get(i, i))?)
}

/// `f_i(u) = det u^{(i)}`, the lower-left `i × i` block
/// (rows `n-i+2 ..= n+1`, columns `1 ..= i`).
pub fn f_det(i: usize, u: &MatRF) -> Result<RatFun, SlGroupError> {
    let n = u.rank();
    check_index(i, n)?;
    let rows: Vec<usize> = (n + 2 - i..=n + 1).collect();
    let cols: Vec<usize> = (1..=i).collect();
    Ok(u.submatrix(&rows, &cols).det())
}

/// `𝒯(u) = ∏ α_i^∨(f_i(u)^{-1})`.
pub fn curly_t(u: &MatRF) -> Result<TorusElem, SlGroupError> {
    let n = u.rank();
    let mut coroots = Vec::with_capacity(n);
    for i in 1..=n {
        let f = f_det(i, u)?;
        if f.is_zero() {
            return Err(SlGroupError::TorusUndefined { i });
        }
        coroots.push(f.recip()?);
    }
    TorusElem::from_coroots(&coroots)
}

/// `F(u) = u · 𝒯(u)`.
pub fn big_f(u: &MatRF) -> Result<MatRF, SlGroupError> {
    Ok(u.mul(&curly_t(u)?.to_matrix()))
}

/// `γ_{U^-} = 𝒯`.
pub fn gamma(u: &MatRF) -> Result<TorusElem, SlGroupError> {
    curly_t(u)
}

/// `φ_i = χ_i ∘ F`, which on `U^-` is the `(i+1, i)` entry.
pub fn varphi(i: usize, u: &MatRF) -> Result<RatFun, SlGroupError> {
    check_index(i, u.rank())?;
    Ok(u.get(i + 1, i).clone())
}

/// `e_i^c(u) = π^{--}(x_i((c-1)/φ_i(u)) · u)`, computed through the Gauss
/// decomposition.
pub fn e_act(i: usize, c: &RatFun, u: &MatRF) -> Result<MatRF, SlGroupError> {
    let phi = varphi(i, u)?;
    if phi.is_zero() {
        return Err(SlGroupError::PhiVanishes { i });
    }
    let s = c.sub(&RatFun::one()).div(&phi)?;
    let g = gen_x(u.rank(), i, s)?.mul(u);
    Ok(gauss(&g)?.lower)
}

/// Closed form `x_i((c-1)/φ) · u · x_i((1-c)/(cφ)) · α_i^∨(c)^{-1}` of the same
/// action, by plain matrix multiplication.
pub fn e_act_closed_form(i: usize, c: &RatFun, u: &MatRF) -> Result<MatRF, SlGroupError> {
    let n = u.rank();
    let phi = varphi(i, u)?;
    if phi.is_zero() {
        return Err(SlGroupError::PhiVanishes { i });
    }
    let one = RatFun::one();
    let left = gen_x(n, i, c.sub(&one).div(&phi)?)?;
    let right = gen_x(n, i, one.sub(c).div(&c.mul(&phi))?)?;
    let torus = alphacheck(n, i, c)?.inverse()?.to_matrix();
    Ok(left.mul(u).mul(&right).mul(&torus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slgroup::gen_y;

    fn v(s: &str) -> RatFun {
        RatFun::named(s)
    }

    #[test]
    fn chi_of_generator_and_torus_translate() {
        let y = gen_y(1, 1, v("a")).unwrap();
        assert_eq!(chi(1, &y).unwrap(), v("a"));
        let b = y.mul(&alphacheck(1, 1, &v("c")).unwrap().to_matrix());
        assert_eq!(chi(1, &b).unwrap(), v("a"));
    }

    #[test]
    fn f_det_on_identity_and_rank_one() {
        for n in 1..=3 {
            let id = MatRF::identity(n + 1);
            for i in 1..=n {
                assert!(f_det(i, &id).unwrap().is_zero());
            }
        }
        assert_eq!(f_det(1, &gen_y(1, 1, v("a")).unwrap()).unwrap(), v("a"));
        assert!(matches!(curly_t(&MatRF::identity(3)), Err(SlGroupError::TorusUndefined { i: 1 })));
    }

    #[test]
    fn rank_one_big_f() {
        let a = v("a");
        let u = gen_y(1, 1, a.clone()).unwrap();
        let t = curly_t(&u).unwrap();
        assert_eq!(t, alphacheck(1, 1, &a.recip().unwrap()).unwrap());
        let want = MatRF::from_rows(vec![
            vec![a.recip().unwrap(), RatFun::zero()],
            vec![RatFun::one(), a.clone()],
        ])
        .unwrap();
        assert_eq!(big_f(&u).unwrap(), want);
        assert_eq!(gamma(&u).unwrap(), t);
    }

    #[test]
    fn varphi_basics() {
        assert!(varphi(1, &MatRF::identity(2)).unwrap().is_zero());
        assert_eq!(varphi(1, &gen_y(1, 1, v("a")).unwrap()).unwrap(), v("a"));
        assert!(matches!(varphi(2, &MatRF::identity(2)), Err(SlGroupError::IndexOutOfRange { .. })));
    }

    #[test]
    fn rank_one_action() {
        // 2×2 oracle: x(s)y(a) with s=(α-1)/a has lower factor y(a/α).
        let (a, alpha) = (v("a"), v("alpha"));
        let u = gen_y(1, 1, a.clone()).unwrap();
        let got = e_act(1, &alpha, &u).unwrap();
        assert_eq!(got, gen_y(1, 1, a.div(&alpha).unwrap()).unwrap());
        assert_eq!(e_act(1, &RatFun::one(), &u).unwrap(), u);
        assert_eq!(e_act_closed_form(1, &alpha, &u).unwrap(), got);
        assert!(matches!(
            e_act(1, &alpha, &MatRF::identity(2)),
            Err(SlGroupError::PhiVanishes { i: 1 })
        ));
    }
}
