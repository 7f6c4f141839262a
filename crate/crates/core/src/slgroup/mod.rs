//! `SL(n+1)` over the rational-function field.
//!
//! Generators, Gauss decomposition, the unipotent crystal data `F` and `𝒯` on
//! `U^-` (lower unitriangular matrices) and the geometric crystal action
//! `e_i^c` induced from it.

mod crystal;
mod gauss;
mod matrix;
mod torus;
pub mod verify;

use thiserror::Error;

use crate::ratfun::{RatFun, RatFunError};

pub use crystal::{big_f, chi, curly_t, e_act, e_act_closed_form, f_det, gamma, varphi};
pub use gauss::{
    act_borel, act_unipotent, gauss, product_act, product_act_left, product_act_right, Gauss,
};
pub use matrix::{MatRF, MatrixJson};
pub use torus::TorusElem;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SlGroupError {
    #[error("index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("leading principal minor {minor} vanishes identically; Gauss decomposition undefined")]
    DecompositionOutsideDomain { minor: usize },
    #[error("f_{i}(u) vanishes identically; the torus map is undefined")]
    TorusUndefined { i: usize },
    #[error("phi_{i}(u) vanishes identically; e_{i} is undefined")]
    PhiVanishes { i: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

/// Cartan matrix of type `A_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanA {
    pub n: usize,
}

impl CartanA {
    pub fn new(n: usize) -> CartanA {
        assert!(n >= 1, "rank must be at least 1");
        CartanA { n }
    }

    /// `a_{ij}` for `1 <= i, j <= n`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }

    /// `⟨h_i, Σ_j w_j α_j⟩ = Σ_j a_{ij} w_j`.
    pub fn pair(&self, i: usize, w: &[i64]) -> i64 {
        (1..=self.n).map(|j| self.entry(i, j) * w[j - 1]).sum()
    }
}

fn check(i: usize, n: usize) -> Result<(), SlGroupError> {
    if i == 0 || i > n {
        Err(SlGroupError::IndexOutOfRange { i, n })
    } else {
        Ok(())
    }
}

/// `x_i(t) = I + t E_{i,i+1}`.
pub fn gen_x(n: usize, i: usize, t: RatFun) -> Result<MatRF, SlGroupError> {
    check(i, n)?;
    let mut m = MatRF::identity(n + 1);
    m.set(i, i + 1, t);
    Ok(m)
}

/// `y_i(t) = I + t E_{i+1,i}`.
pub fn gen_y(n: usize, i: usize, t: RatFun) -> Result<MatRF, SlGroupError> {
    check(i, n)?;
    let mut m = MatRF::identity(n + 1);
    m.set(i + 1, i, t);
    Ok(m)
}

/// `α_i^∨(c) = diag(1, …, c, c^{-1}, …, 1)` with `c` in slot `i`.
pub fn alphacheck(n: usize, i: usize, c: &RatFun) -> Result<TorusElem, SlGroupError> {
    check(i, n)?;
    let mut diag = vec![RatFun::one(); n + 1];
    diag[i - 1] = c.clone();
    diag[i] = c.recip()?;
    Ok(TorusElem::from_diag(diag))
}
