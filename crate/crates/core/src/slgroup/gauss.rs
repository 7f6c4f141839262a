use super::{MatRF, SlGroupError, TorusElem};

/// Factors of the Gauss decomposition `g = lower · torus · upper`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gauss {
    /// Lower unitriangular factor (`π^{--}(g)`).
    pub lower: MatRF,
    /// Diagonal factor (`π^0(g)`).
    pub torus: TorusElem,
    /// Upper unitriangular factor (`π(g)`).
    pub upper: MatRF,
}

impl Gauss {
    /// `π^-(g) = lower · torus ∈ B^-`.
    pub fn borel(&self) -> MatRF {
        self.lower.mul(&self.torus.to_matrix())
    }

    pub fn recompose(&self) -> MatRF {
        self.borel().mul(&self.upper)
    }
}

/// LDU decomposition by elimination without pivoting. Fails exactly when a
/// leading principal minor is the zero function.
pub fn gauss(g: &MatRF) -> Result<Gauss, SlGroupError> {
    let n = g.size();
    let mut work = g.clone();
    let mut lower = MatRF::identity(n);
    let mut upper = MatRF::identity(n);
    let mut diag = Vec::with_capacity(n);
    for c in 1..=n {
        let pivot = work.get(c, c).clone();
        if pivot.is_zero() {
            return Err(SlGroupError::DecompositionOutsideDomain { minor: c });
        }
        for r in c + 1..=n {
            let a = work.get(r, c);
            if a.is_zero() {
                continue;
            }
            let l = a.div(&pivot)?;
            for k in c + 1..=n {
                let b = work.get(c, k);
                if b.is_zero() {
                    continue;
                }
                let v = work.get(r, k).sub(&l.mul(b));
                work.set(r, k, v);
            }
            lower.set(r, c, l);
        }
        for k in c + 1..=n {
            let b = work.get(c, k);
            if !b.is_zero() {
                upper.set(c, k, b.div(&pivot)?);
            }
        }
        diag.push(pivot);
    }
    Ok(Gauss {
        lower,
        torus: TorusElem::from_diag(diag),
        upper,
    })
}

/// `α_{B^-}(x, b) = π^-(x·b)`.
pub fn act_borel(x: &MatRF, b: &MatRF) -> Result<MatRF, SlGroupError> {
    Ok(gauss(&x.mul(b))?.borel())
}

/// `α_{U^-}(x, u) = π^{--}(x·u)`.
pub fn act_unipotent(x: &MatRF, u: &MatRF) -> Result<MatRF, SlGroupError> {
    Ok(gauss(&x.mul(u))?.lower)
}

/// Action of `x ∈ U` on a product of two `B^-` crystals:
/// `(π^-(x·b1), π^-(π(x·b1)·b2))`.
pub fn product_act(x: &MatRF, pair: (&MatRF, &MatRF)) -> Result<(MatRF, MatRF), SlGroupError> {
    let first = gauss(&x.mul(pair.0))?;
    let second = gauss(&first.upper.mul(pair.1))?;
    Ok((first.borel(), second.borel()))
}

/// Left-grouped action on a triple, `((B × B) × B)`.
pub fn product_act_left(
    x: &MatRF,
    triple: (&MatRF, &MatRF, &MatRF),
) -> Result<(MatRF, MatRF, MatRF), SlGroupError> {
    let (b1, b2) = product_act(x, (triple.0, triple.1))?;
    // The U-element handed to the third factor is π(x · f(b1, b2)), f = product.
    let carry = gauss(&x.mul(&triple.0.mul(triple.1)))?.upper;
    let b3 = act_borel(&carry, triple.2)?;
    Ok((b1, b2, b3))
}

/// Right-grouped action on a triple, `(B × (B × B))`.
pub fn product_act_right(
    x: &MatRF,
    triple: (&MatRF, &MatRF, &MatRF),
) -> Result<(MatRF, MatRF, MatRF), SlGroupError> {
    let first = gauss(&x.mul(triple.0))?;
    let (b2, b3) = product_act(&first.upper, (triple.1, triple.2))?;
    Ok((first.borel(), b2, b3))
}
