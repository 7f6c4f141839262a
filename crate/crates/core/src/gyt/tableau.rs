//! Semistandard tableaux with entries in `1..=n+1`, their arabic reading
//! words, and the box-crystal tensor rule.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GytError, SharpElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates a filling: rows weakly increasing, columns strictly increasing,
    /// row lengths a partition, entries in `1..=n+1`.
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Tableau, GytError> {
        let bad = |m: String| Err(GytError::MalformedTableau(m));
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.len() > n + 1 {
            return bad(format!("{} rows exceed n+1 = {}", rows.len(), n + 1));
        }
        for (r, row) in rows.iter().enumerate() {
            if let Some(&x) = row.iter().find(|&&x| x == 0 || x as usize > n + 1) {
                return bad(format!("entry {x} outside 1..={}", n + 1));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", r + 1));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() {
                    return bad("row lengths are not a partition".into());
                }
                if row.iter().zip(above).any(|(x, a)| x <= a) {
                    return bad(format!("column strictness fails in row {}", r + 1));
                }
            }
        }
        Ok(Tableau {
            shape: rows.iter().map(Vec::len).collect(),
            rows,
        })
    }

    pub fn empty() -> Tableau {
        Tableau {
            shape: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.iter().sum()
    }

    /// Refills `shape` from a reading word, inverting [`arabic_reading`].
    pub fn from_reading(n: usize, shape: &[usize], w: &BoxWord) -> Result<Tableau, GytError> {
        if shape.iter().sum::<usize>() != w.0.len() {
            return Err(GytError::MalformedTableau("word length differs from shape".into()));
        }
        let mut rest = &w.0[..];
        let mut rows = Vec::with_capacity(shape.len());
        for &len in shape {
            let (head, tail) = rest.split_at(len);
            rows.push(head.iter().rev().copied().collect());
            rest = tail;
        }
        Tableau::new(n, rows)
    }

    pub fn check_json(n: usize, j: &Tableau) -> Result<Tableau, GytError> {
        let t = Tableau::new(n, j.rows.clone())?;
        let shape: Vec<usize> = j.shape.iter().copied().filter(|&s| s > 0).collect();
        if t.shape != shape {
            return Err(GytError::MalformedTableau("shape does not match rows".into()));
        }
        Ok(t)
    }
}

/// A word over the alphabet `1..=n+1`, read as a tensor product of boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxWord(pub Vec<u32>);

/// Each row read right to left, top row first.
pub fn arabic_reading(t: &Tableau) -> BoxWord {
    BoxWord(t.rows.iter().flat_map(|r| r.iter().rev().copied()).collect())
}

fn box_eps(i: usize, x: u32) -> i64 {
    i64::from(x as usize == i + 1)
}

fn box_pairing(i: usize, x: u32) -> i64 {
    match x as usize {
        v if v == i => 1,
        v if v == i + 1 => -1,
        _ => 0,
    }
}

/// `ẽ_i` on `v_1 ⊗ ⋯ ⊗ v_N`: acts on the first factor maximizing
/// `ε_i(v_k) - Σ_{j<k} ⟨h_i, wt(v_j)⟩`.
fn tensor_e(i: usize, w: &mut BoxWord) -> Result<(), GytError> {
    let mut best: Option<(i64, usize)> = None;
    let mut shift = 0;
    for (k, &x) in w.0.iter().enumerate() {
        let b = box_eps(i, x) - shift;
        if best.map_or(true, |(m, _)| b > m) {
            best = Some((b, k));
        }
        shift += box_pairing(i, x);
    }
    match best {
        Some((_, k)) if box_eps(i, w.0[k]) == 1 => {
            w.0[k] = i as u32;
            Ok(())
        }
        _ => Err(GytError::Annihilated),
    }
}

/// `ẽ_i^β` on a word by the tensor product rule.
pub fn tensor_e_pow(i: usize, beta: u32, w: &BoxWord) -> Result<BoxWord, GytError> {
    if i == 0 {
        return Err(GytError::IndexOutOfRange { i, n: 0 });
    }
    let mut out = w.clone();
    for _ in 0..beta {
        tensor_e(i, &mut out)?;
    }
    Ok(out)
}

/// `B_{k,j} = #{j in row k}` for `k < j`; diagonal counts are dropped.
pub fn tableau_rowcounts(t: &Tableau, n: usize) -> SharpElement {
    let mut m: BTreeMap<(usize, usize), i64> = super::sharp_indices(n).into_iter().map(|kj| (kj, 0)).collect();
    for (r, row) in t.rows.iter().enumerate() {
        for &x in row {
            if let Some(c) = m.get_mut(&(r + 1, x as usize)) {
                *c += 1;
            }
        }
    }
    SharpElement::from_map(n, &m).expect("complete index set")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Tableau::new(2, vec![vec![1, 1, 2], vec![2, 3]]).is_ok());
        assert!(Tableau::new(2, vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(2, vec![vec![1, 2], vec![1, 3]]).is_err());
        assert!(Tableau::new(2, vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(1, vec![vec![3]]).is_err());
        assert!(Tableau::new(1, vec![vec![1], vec![2], vec![3]]).is_err());
    }

    #[test]
    fn reading_words() {
        // Letters a..g as 1..7 in shape (4,2,1); validity aside, reading is positional.
        let t = Tableau {
            shape: vec![4, 2, 1],
            rows: vec![vec![1, 2, 3, 4], vec![5, 6], vec![7]],
        };
        assert_eq!(arabic_reading(&t).0, vec![4, 3, 2, 1, 6, 5, 7]);
        let t = Tableau::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(arabic_reading(&t).0, vec![3, 2, 1]);
        let t = Tableau::new(3, vec![vec![4]]).unwrap();
        assert_eq!(arabic_reading(&t).0, vec![4]);
        let back = Tableau::from_reading(3, &[3], &BoxWord(vec![3, 2, 1])).unwrap();
        assert_eq!(back.rows(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn box_crystal() {
        assert_eq!(tensor_e_pow(1, 1, &BoxWord(vec![2])).unwrap().0, vec![1]);
        assert_eq!(tensor_e_pow(1, 1, &BoxWord(vec![1])), Err(GytError::Annihilated));
        // 1 ⊗ 2: the + on the left cancels the − on the right.
        assert_eq!(tensor_e_pow(1, 1, &BoxWord(vec![1, 2])), Err(GytError::Annihilated));
        assert_eq!(tensor_e_pow(1, 1, &BoxWord(vec![2, 1])).unwrap().0, vec![1, 1]);
    }

    #[test]
    fn rowcounts() {
        let t = Tableau::new(2, vec![vec![1, 1, 2], vec![2, 2]]).unwrap();
        assert_eq!(tableau_rowcounts(&t, 2).as_slice(), &[1, 0, 0]);
        assert_eq!(tableau_rowcounts(&Tableau::empty(), 2).as_slice(), &[0, 0, 0]);
        let col = Tableau::new(2, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(tableau_rowcounts(&col, 2).as_slice(), &[0, 0, 0]);
    }

    #[test]
    fn prop_example() {
        // Row counts B_{1,2}=2, B_{1,3}=1, B_{2,3}=3 with diagonal B_{1,1}=3, B_{2,2}=1.
        let t = Tableau::new(2, vec![vec![1, 1, 1, 2, 2, 3], vec![2, 3, 3, 3]]).unwrap();
        let v = tableau_rowcounts(&t, 2);
        assert_eq!(v.as_slice(), &[2, 1, 3]);
        let w = tensor_e_pow(2, 2, &arabic_reading(&t)).unwrap();
        let t2 = Tableau::from_reading(2, t.shape(), &w).unwrap();
        assert_eq!(tableau_rowcounts(&t2, 2), v.etilde_pow(2, 2).unwrap());
    }

    #[test]
    fn json_shape() {
        let t = Tableau::new(2, vec![vec![1, 2], vec![3]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"rows":[[1,2],[3]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(Tableau::check_json(2, &back).unwrap(), t);
    }
}
