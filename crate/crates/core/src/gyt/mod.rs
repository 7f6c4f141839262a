//! Generalized Young tableaux: the free crystal `B♯`, Kashiwara operators,
//! the Weyl group action and a tableau-level tensor rule to check them against.

pub mod sample;
mod sharp;
mod tableau;

use thiserror::Error;

pub use sharp::{sharp_indices, SharpElement, SharpJson};
pub use tableau::{arabic_reading, tableau_rowcounts, tensor_e_pow, BoxWord, Tableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GytError {
    #[error("index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("({0},{1}) is not an off-diagonal index")]
    BadIndex(usize, usize),
    #[error("bad coordinate key {0:?}")]
    BadKey(String),
    #[error("negative power {0}; iterate ftilde instead")]
    NegativePower(i64),
    #[error("operator annihilates the element")]
    Annihilated,
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
}

/// Applies `s̃_{w_1} ⋯ s̃_{w_k}` right to left.
pub fn weyl_word(word: &[usize], v: &SharpElement) -> Result<SharpElement, GytError> {
    word.iter().rev().try_fold(v.clone(), |acc, &i| acc.stilde(i))
}
