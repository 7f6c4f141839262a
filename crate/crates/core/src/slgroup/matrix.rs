use std::fmt;

use serde::{Deserialize, Serialize};

use super::SlGroupError;
use crate::ratfun::{parse, RatFun};

/// Square matrix of rational functions. Group elements of `SL(n+1)` live here
/// with `size = n + 1`; indices are 1-based in the public accessors to match
/// the usual matrix-unit notation.
#[derive(Clone, PartialEq)]
pub struct MatRF {
    size: usize,
    entries: Vec<RatFun>,
}

impl MatRF {
    pub fn zeros(size: usize) -> MatRF {
        MatRF {
            size,
            entries: vec![RatFun::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> MatRF {
        let mut m = MatRF::zeros(size);
        for k in 1..=size {
            m.set(k, k, RatFun::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Result<MatRF, SlGroupError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(SlGroupError::NotSquare);
        }
        Ok(MatRF {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Rank `n` of `SL(n+1)`.
    pub fn rank(&self) -> usize {
        self.size - 1
    }

    /// Entry at row `r`, column `c` (1-based).
    pub fn get(&self, r: usize, c: usize) -> &RatFun {
        &self.entries[(r - 1) * self.size + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFun) {
        self.entries[(r - 1) * self.size + (c - 1)] = v;
    }

    pub fn rows(&self) -> Vec<Vec<RatFun>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &MatRF) -> MatRF {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let n = self.size;
        let mut out = MatRF::zeros(n);
        for r in 1..=n {
            for k in 1..=n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 1..=n {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let term = if a.is_one() {
                        b.clone()
                    } else if b.is_one() {
                        a.clone()
                    } else {
                        a.mul(b)
                    };
                    let cur = out.get(r, c);
                    let next = if cur.is_zero() { term } else { cur.add(&term) };
                    out.set(r, c, next);
                }
            }
        }
        out
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(size: usize, ms: impl IntoIterator<Item = &'a MatRF>) -> MatRF {
        ms.into_iter()
            .fold(MatRF::identity(size), |acc, m| acc.mul(m))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (1..=self.size).all(|r| {
            (1..=self.size).all(|c| match r.cmp(&c) {
                std::cmp::Ordering::Less => self.get(r, c).is_zero(),
                std::cmp::Ordering::Equal => self.get(r, c).is_one(),
                std::cmp::Ordering::Greater => true,
            })
        })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.transpose().is_lower_unitriangular()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (1..=self.size).all(|r| (r + 1..=self.size).all(|c| self.get(r, c).is_zero()))
    }

    pub fn transpose(&self) -> MatRF {
        let mut out = MatRF::zeros(self.size);
        for r in 1..=self.size {
            for c in 1..=self.size {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Square submatrix on the given (1-based) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatRF {
        assert_eq!(rows.len(), cols.len());
        let mut out = MatRF::zeros(rows.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i + 1, j + 1, self.get(r, c).clone());
            }
        }
        out
    }

    /// Division-free cofactor expansion; sizes here never exceed 5.
    pub fn det(&self) -> RatFun {
        let idx: Vec<usize> = (1..=self.size).collect();
        self.det_minor(&idx, &idx)
    }

    fn det_minor(&self, rows: &[usize], cols: &[usize]) -> RatFun {
        match rows.len() {
            0 => RatFun::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let r = rows[0];
                let rest = &rows[1..];
                let mut acc = RatFun::zero();
                for (j, &c) in cols.iter().enumerate() {
                    let a = self.get(r, c);
                    if a.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> =
                        cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.det_minor(rest, &sub_cols);
                    if minor.is_zero() {
                        continue;
                    }
                    let term = a.mul(&minor);
                    acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// First entry (row, column, lhs, rhs) where the matrices differ.
    pub fn first_difference(&self, other: &MatRF) -> Option<(usize, usize, RatFun, RatFun)> {
        if self.size != other.size {
            return Some((0, 0, RatFun::zero(), RatFun::zero()));
        }
        for r in 1..=self.size {
            for c in 1..=self.size {
                let (a, b) = (self.get(r, c), other.get(r, c));
                if !a.equals(b) {
                    return Some((r, c, a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.rank(),
            entries: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<MatRF, SlGroupError> {
        if j.entries.len() != j.n + 1 {
            return Err(SlGroupError::NotSquare);
        }
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        MatRF::from_rows(rows)
    }
}

/// `{ "n": 2, "entries": [[...RatFun strings...]] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl fmt::Debug for MatRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
