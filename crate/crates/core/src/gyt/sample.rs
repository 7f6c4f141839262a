//! Seeded random populations of `B♯` elements and semistandard tableaux.

use rand::Rng;

use super::{SharpElement, Tableau};

pub fn random_sharp<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> SharpElement {
    let b = (0..n * (n + 1) / 2).map(|_| rng.gen_range(lo..=hi)).collect();
    SharpElement::from_vec(n, b).expect("length matches")
}

/// All partitions of size at most `max_size` with at most `max_rows` parts.
pub fn partitions(max_size: usize, max_rows: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if rows == 0 {
            return;
        }
        for p in 1..=cap.min(rest) {
            cur.push(p);
            go(rest - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_size, max_size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Random semistandard filling of `shape` with entries in `1..=n+1`.
pub fn random_filling<R: Rng>(rng: &mut R, n: usize, shape: &[usize]) -> Tableau {
    let top = (n + 1) as u32;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(shape.len());
    for (r, &len) in shape.iter().enumerate() {
        let mut row = Vec::with_capacity(len);
        for c in 0..len {
            let height = shape.iter().take_while(|&&l| l > c).count() as u32;
            let left = row.last().copied().unwrap_or(1);
            let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            let hi = top - (height - 1 - r as u32);
            row.push(rng.gen_range(left.max(above)..=hi));
        }
        rows.push(row);
    }
    Tableau::new(n, rows).expect("filling is semistandard")
}

/// Uniform shape among partitions with `≤ n+1` rows and size `≤ max_size`,
/// then a random filling.
pub fn random_tableau<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> Tableau {
    let shapes = partitions(max_size, n + 1);
    let shape = &shapes[rng.gen_range(0..shapes.len())];
    random_filling(rng, n, shape)
}
