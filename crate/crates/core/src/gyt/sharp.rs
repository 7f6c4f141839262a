//! The free crystal `B♯` of generalized Young tableaux.
//!
//! An element is an integer vector `(B_{k,j})_{1≤k<j≤n+1}`; the diagonal
//! counts `B_{i,i}` are not part of the data and updates addressed to them
//! are dropped.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GytError;
use crate::slgroup::CartanA;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SharpElement {
    n: usize,
    /// Row-major over `k = 1..=n`, `j = k+1..=n+1`.
    b: Vec<i64>,
}

fn slot(n: usize, k: usize, j: usize) -> usize {
    // Rows 1..k-1 hold (n+1-l) entries each.
    let before: usize = (1..k).map(|l| n + 1 - l).sum();
    before + (j - k - 1)
}

/// Index pairs `(k, j)`, `1 ≤ k < j ≤ n+1`, in lexicographic order.
pub fn sharp_indices(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|k| (k + 1..=n + 1).map(move |j| (k, j)))
        .collect()
}

impl SharpElement {
    pub fn zero(n: usize) -> SharpElement {
        SharpElement {
            n,
            b: vec![0; n * (n + 1) / 2],
        }
    }

    /// Entries in lexicographic order of `(k, j)`.
    pub fn from_vec(n: usize, b: Vec<i64>) -> Result<SharpElement, GytError> {
        if b.len() != n * (n + 1) / 2 {
            return Err(GytError::WrongLength {
                expected: n * (n + 1) / 2,
                found: b.len(),
            });
        }
        Ok(SharpElement { n, b })
    }

    pub fn from_map(n: usize, m: &BTreeMap<(usize, usize), i64>) -> Result<SharpElement, GytError> {
        let mut v = SharpElement::zero(n);
        for (&(k, j), &x) in m {
            if !(1 <= k && k < j && j <= n + 1) {
                return Err(GytError::BadIndex(k, j));
            }
            v.b[slot(n, k, j)] = x;
        }
        if m.len() != v.b.len() {
            return Err(GytError::WrongLength {
                expected: v.b.len(),
                found: m.len(),
            });
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.b
    }

    /// `B_{k,j}`; `None` on the diagonal or out of range.
    pub fn get(&self, k: usize, j: usize) -> Option<i64> {
        (1 <= k && k < j && j <= self.n + 1).then(|| self.b[slot(self.n, k, j)])
    }

    fn entry(&self, k: usize, j: usize) -> i64 {
        self.b[slot(self.n, k, j)]
    }

    /// Adds `delta` to `B_{k,j}`; diagonal slots are silently ignored.
    fn bump(&mut self, k: usize, j: usize, delta: i64) {
        if k < j {
            let s = slot(self.n, k, j);
            self.b[s] += delta;
        }
    }

    fn check(&self, i: usize) -> Result<(), GytError> {
        if i == 0 || i > self.n {
            Err(GytError::IndexOutOfRange { i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `b_k^{(i)} = Σ_{l≤k} B_{l,i+1} - Σ_{l<k} B_{l,i}` for `k = 1..=i`.
    pub fn bvals(&self, i: usize) -> Result<Vec<i64>, GytError> {
        self.check(i)?;
        let mut out = Vec::with_capacity(i);
        let mut acc = 0;
        for k in 1..=i {
            acc += self.entry(k, i + 1);
            if k > 1 {
                acc -= self.entry(k - 1, i);
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn epsilon(&self, i: usize) -> Result<i64, GytError> {
        Ok(*self.bvals(i)?.iter().max().expect("i >= 1"))
    }

    /// Coefficients `w_i` of `wt(v) = Σ w_i α_i`,
    /// `w_i = -Σ_{k≤i, i+1≤j≤n+1} B_{k,j}`.
    pub fn weight(&self) -> Vec<i64> {
        let n = self.n;
        (1..=n)
            .map(|i| {
                -(1..=i)
                    .flat_map(|k| (i + 1..=n + 1).map(move |j| (k, j)))
                    .map(|(k, j)| self.entry(k, j))
                    .sum::<i64>()
            })
            .collect()
    }

    /// `⟨h_i, wt(v)⟩`.
    pub fn weight_pairing(&self, i: usize) -> Result<i64, GytError> {
        self.check(i)?;
        Ok(CartanA::new(self.n).pair(i, &self.weight()))
    }

    /// `φ_i = ε_i + ⟨h_i, wt⟩`.
    pub fn phi(&self, i: usize) -> Result<i64, GytError> {
        Ok(self.epsilon(i)? + self.weight_pairing(i)?)
    }

    /// First and last `k` at which `b_k^{(i)}` attains `ε_i`.
    pub fn mi_big_mi(&self, i: usize) -> Result<(usize, usize), GytError> {
        let b = self.bvals(i)?;
        let eps = *b.iter().max().expect("i >= 1");
        let first = b.iter().position(|&x| x == eps).expect("max attained") + 1;
        let last = b.iter().rposition(|&x| x == eps).expect("max attained") + 1;
        Ok((first, last))
    }

    pub fn etilde(&self, i: usize) -> Result<SharpElement, GytError> {
        let (m, _) = self.mi_big_mi(i)?;
        let mut out = self.clone();
        out.bump(m, i, 1);
        out.bump(m, i + 1, -1);
        Ok(out)
    }

    pub fn ftilde(&self, i: usize) -> Result<SharpElement, GytError> {
        let (_, big_m) = self.mi_big_mi(i)?;
        let mut out = self.clone();
        out.bump(big_m, i, -1);
        out.bump(big_m, i + 1, 1);
        Ok(out)
    }

    /// The split `(β_1^{(i)}, …, β_i^{(i)})` of `β` across rows, from the
    /// two-max formula with empty inner maxima equal to `-∞`.
    pub fn beta_split(&self, i: usize, beta: i64) -> Result<Vec<i64>, GytError> {
        let b = self.bvals(i)?;
        // prefix[k] = max(b_1..b_k), suffix[k] = max(b_k..b_i), as Option for -∞.
        let prefix = |k: usize| b[..k].iter().copied().max();
        let suffix = |k: usize| b.get(k - 1..).and_then(|s| s.iter().copied().max());
        let lift = |x: Option<i64>| x.map(|v| v + beta);
        let out = (1..=i)
            .map(|k| {
                let plus = lift(prefix(k)).max(suffix(k + 1)).expect("nonempty");
                let minus = lift(prefix(k - 1)).max(suffix(k)).expect("nonempty");
                plus - minus
            })
            .collect();
        Ok(out)
    }

    /// `ẽ_i^β` for `β ≥ 0`.
    pub fn etilde_pow(&self, i: usize, beta: i64) -> Result<SharpElement, GytError> {
        if beta < 0 {
            return Err(GytError::NegativePower(beta));
        }
        Ok(self.apply_split(i, &self.beta_split(i, beta)?))
    }

    /// Applies `B_{k,i} += β_k`, `B_{k,i+1} -= β_k`.
    pub fn apply_split(&self, i: usize, split: &[i64]) -> SharpElement {
        let mut out = self.clone();
        for (k, &d) in (1..=i).zip(split) {
            out.bump(k, i, d);
            out.bump(k, i + 1, -d);
        }
        out
    }

    /// `ẽ_i^z` for `z ≥ 0`, `f̃_i^{-z}` for `z < 0`.
    pub fn crystal_power(&self, i: usize, z: i64) -> Result<SharpElement, GytError> {
        if z >= 0 {
            self.etilde_pow(i, z)
        } else {
            let mut v = self.clone();
            for _ in 0..-z {
                v = v.ftilde(i)?;
            }
            Ok(v)
        }
    }

    /// `s̃_i`: `ẽ_i^{-⟨h_i,wt⟩}` if the pairing is negative, `f̃_i^{⟨h_i,wt⟩}` otherwise.
    pub fn stilde(&self, i: usize) -> Result<SharpElement, GytError> {
        let p = self.weight_pairing(i)?;
        self.crystal_power(i, -p)
    }

    pub fn to_json(&self) -> SharpJson {
        SharpJson {
            n: self.n,
            b: sharp_indices(self.n)
                .into_iter()
                .map(|(k, j)| (format!("{k},{j}"), self.entry(k, j)))
                .collect(),
        }
    }

    pub fn from_json(j: &SharpJson) -> Result<SharpElement, GytError> {
        let mut m = BTreeMap::new();
        for (key, v) in &j.b {
            let bad = || GytError::BadKey(key.clone());
            let (k, jj) = key.split_once(',').ok_or_else(bad)?;
            let k: usize = k.trim().parse().map_err(|_| bad())?;
            let jj: usize = jj.trim().parse().map_err(|_| bad())?;
            m.insert((k, jj), *v);
        }
        SharpElement::from_map(j.n, &m)
    }
}

impl fmt::Debug for SharpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B♯{:?}", self.b)
    }
}

impl fmt::Display for SharpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `{ "n": 2, "B": { "1,2": 2, "1,3": 1, "2,3": 3 } }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpJson {
    pub n: usize,
    #[serde(rename = "B")]
    pub b: BTreeMap<String, i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v213() -> SharpElement {
        SharpElement::from_vec(2, vec![2, 1, 3]).unwrap()
    }

    #[test]
    fn layout() {
        let v = SharpElement::from_vec(3, (1..=6).collect()).unwrap();
        let want = [((1, 2), 1), ((1, 3), 2), ((1, 4), 3), ((2, 3), 4), ((2, 4), 5), ((3, 4), 6)];
        for ((k, j), x) in want {
            assert_eq!(v.get(k, j), Some(x));
        }
        assert_eq!(v.get(2, 2), None);
        assert_eq!(sharp_indices(3).len(), 6);
    }

    #[test]
    fn bvals_examples() {
        assert_eq!(v213().bvals(2).unwrap(), vec![1, 2]);
        assert_eq!(v213().bvals(1).unwrap(), vec![2]);
        assert_eq!(SharpElement::zero(3).bvals(3).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn data_examples() {
        let v = v213();
        assert_eq!(v.epsilon(1).unwrap(), 2);
        assert_eq!(v.epsilon(2).unwrap(), 2);
        assert_eq!(v.weight(), vec![-3, -4]);
        let z = SharpElement::zero(2);
        assert_eq!(z.weight(), vec![0, 0]);
        for i in 1..=2 {
            assert_eq!(z.epsilon(i).unwrap(), 0);
            assert_eq!(z.phi(i).unwrap(), 0);
        }
    }

    #[test]
    fn extremal_indices() {
        assert_eq!(v213().mi_big_mi(2).unwrap(), (2, 2));
        // b = (1,1): B_{1,3} = 1, B_{1,3}+B_{2,3}-B_{1,2} = 1.
        let tie = SharpElement::from_vec(2, vec![0, 1, 0]).unwrap();
        assert_eq!(tie.bvals(2).unwrap(), vec![1, 1]);
        assert_eq!(tie.mi_big_mi(2).unwrap(), (1, 2));
        assert_eq!(v213().mi_big_mi(1).unwrap(), (1, 1));
    }

    #[test]
    fn kashiwara_examples() {
        assert_eq!(v213().etilde(2).unwrap().as_slice(), &[2, 1, 2]);
        assert_eq!(v213().etilde(1).unwrap().as_slice(), &[1, 1, 3]);
        assert_eq!(v213().ftilde(2).unwrap().etilde(2).unwrap(), v213());
    }

    #[test]
    fn power_examples() {
        assert_eq!(v213().etilde_pow(2, 0).unwrap(), v213());
        assert_eq!(v213().beta_split(2, 2).unwrap(), vec![1, 1]);
        assert_eq!(v213().etilde_pow(2, 2).unwrap().as_slice(), &[3, 0, 2]);
        assert_eq!(v213().etilde_pow(2, -1), Err(GytError::NegativePower(-1)));
    }

    #[test]
    fn stilde_examples() {
        let v = SharpElement::from_vec(1, vec![3]).unwrap();
        assert_eq!(v.weight_pairing(1).unwrap(), -6);
        assert_eq!(v.stilde(1).unwrap().as_slice(), &[-3]);
        // ⟨h_1, wt⟩ = 0 fixes v.
        let w = SharpElement::from_vec(2, vec![1, 0, 2]).unwrap();
        assert_eq!(w.weight_pairing(1).unwrap(), 0);
        assert_eq!(w.stilde(1).unwrap(), w);
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&v213().to_json()).unwrap();
        assert_eq!(text, r#"{"n":2,"B":{"1,2":2,"1,3":1,"2,3":3}}"#);
        let back: SharpJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SharpElement::from_json(&back).unwrap(), v213());
    }
}
