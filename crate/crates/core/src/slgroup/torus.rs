use super::{MatRF, SlGroupError};
use crate::ratfun::RatFun;

/// Element of the diagonal torus `T ⊂ SL(n+1)`.
///
/// Stored as the diagonal `(d_1, …, d_{n+1})`. The same element written as
/// `∏ α_i^∨(c_i)` has coroot coordinates `c_i = d_1 ⋯ d_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElem {
    diag: Vec<RatFun>,
}

impl TorusElem {
    pub fn identity(n: usize) -> TorusElem {
        TorusElem {
            diag: vec![RatFun::one(); n + 1],
        }
    }

    pub fn from_diag(diag: Vec<RatFun>) -> TorusElem {
        TorusElem { diag }
    }

    /// `∏_i α_i^∨(c_i)` from the coroot coordinates `c_1, …, c_n`.
    pub fn from_coroots(c: &[RatFun]) -> Result<TorusElem, SlGroupError> {
        let n = c.len();
        let mut diag = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let upper = if k < n { c[k].clone() } else { RatFun::one() };
            let lower = if k > 0 { c[k - 1].clone() } else { RatFun::one() };
            diag.push(upper.div(&lower)?);
        }
        Ok(TorusElem { diag })
    }

    /// Coroot coordinates `c_i = d_1 ⋯ d_i`, `i = 1..=n`.
    pub fn coroots(&self) -> Vec<RatFun> {
        let mut acc = RatFun::one();
        let n = self.diag.len() - 1;
        let mut out = Vec::with_capacity(n);
        for d in &self.diag[..n] {
            acc = acc.mul(d);
            out.push(acc.clone());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.diag.len() - 1
    }

    pub fn diag(&self) -> &[RatFun] {
        &self.diag
    }

    pub fn mul(&self, other: &TorusElem) -> TorusElem {
        TorusElem {
            diag: self.diag.iter().zip(&other.diag).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn inverse(&self) -> Result<TorusElem, SlGroupError> {
        Ok(TorusElem {
            diag: self
                .diag
                .iter()
                .map(|d| d.recip())
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn det(&self) -> RatFun {
        self.diag.iter().fold(RatFun::one(), |acc, d| acc.mul(d))
    }

    pub fn to_matrix(&self) -> MatRF {
        let n = self.diag.len();
        let mut m = MatRF::zeros(n);
        for (k, d) in self.diag.iter().enumerate() {
            m.set(k + 1, k + 1, d.clone());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coroot_round_trip() {
        let c = vec![RatFun::named("p"), RatFun::named("q"), RatFun::named("r")];
        let t = TorusElem::from_coroots(&c).unwrap();
        assert!(t.det().is_one());
        assert_eq!(t.coroots(), c);
    }
}
