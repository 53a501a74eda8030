//! Exact linear algebra over `Scalar`.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Sparse vector: column index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Fraction-free (Bareiss) forward elimination followed by back substitution.
/// Returns the rank and a basis of the right kernel of the `rows × cols` matrix.
pub fn rank_kernel_dense(m: &[Vec<Scalar>], cols: usize) -> (usize, Vec<Vec<Scalar>>) {
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let rows = a.len();
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = &v / &prev;
            }
            a[i][c] = Scalar::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    // back substitution on the echelon form
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::new();
    for &f in &free {
        let mut x = vec![Scalar::zero(); cols];
        x[f] = Scalar::one();
        for k in (0..rank).rev() {
            let pc = pivots[k];
            let mut s = Scalar::zero();
            for j in pc + 1..cols {
                if !a[k][j].is_zero() && !x[j].is_zero() {
                    s = &s + &(&a[k][j] * &x[j]);
                }
            }
            x[pc] = -&(&s / &a[k][pc]);
        }
        kernel.push(x);
    }
    (rank, kernel)
}

/// Incremental row echelon basis; the pivot of a row is its largest index.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// pivot column -> row with coefficient 1 at the pivot (largest column is pivot)
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis (pivot = largest index).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).next_back().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                for (j, a) in row {
                    let e = v.entry(*j).or_insert_with(Scalar::zero);
                    *e = &*e - &(&c * a);
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            bound = k;
        }
        v
    }

    /// Insert; returns true if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, c)) = r.iter().next_back() else { return false };
        let inv = c.inv().unwrap();
        let r: SparseVec = r.iter().map(|(k, a)| (*k, a * &inv)).collect();
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Reduced row echelon form: no row has a nonzero entry at another pivot.
    pub fn fully_reduced(&self) -> Vec<(usize, SparseVec)> {
        let mut done = Echelon::new();
        let mut out = Vec::new();
        for (&p, row) in &self.rows {
            let mut r = row.clone();
            let pc = r.remove(&p).unwrap();
            let mut r = done.reduce(&r);
            r.insert(p, pc);
            done.rows.insert(p, r.clone());
            out.push((p, r));
        }
        out
    }
}

/// Rank of a list of sparse vectors.
pub fn sparse_rank(vs: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the linear map sending basis vector `i` to `images[i]`:
/// all coefficient vectors `c` with `Σ c_i images[i] = 0`.
pub fn sparse_kernel(images: &[SparseVec]) -> Vec<Vec<Scalar>> {
    // track combinations: row = image with an appended identity block
    let n = images.len();
    let mut ech = Echelon::new();
    let mut kernel = Vec::new();
    // identity block occupies low indices so image entries are eliminated first
    for (i, v) in images.iter().enumerate() {
        let mut row: SparseVec = v.iter().map(|(k, c)| (k + n, c.clone())).collect();
        row.insert(i, Scalar::one());
        let r = ech.reduce(&row);
        if r.keys().next_back().is_some_and(|&k| k < n) {
            let mut x = vec![Scalar::zero(); n];
            for (k, c) in &r {
                x[*k] = c.clone();
            }
            kernel.push(x);
        }
        ech.insert(&r);
    }
    kernel_reduce(kernel)
}

/// Bring a kernel basis into reduced row echelon form (deterministic output).
pub fn kernel_reduce(vs: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if vs.is_empty() {
        return vs;
    }
    let n = vs[0].len();
    let mut rows = vs;
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        rows[r] = rows[r].iter().map(|a| a * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pr = rows[r].clone();
                for j in 0..n {
                    rows[i][j] = &rows[i][j] - &(&f * &pr[j]);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn dense_and_sparse_agree_small() {
        let m = vec![vec![s(1), s(0), s(1)], vec![s(0), s(1), s(1)]];
        let (r, k) = rank_kernel_dense(&m, 3);
        assert_eq!(r, 2);
        assert_eq!(k, vec![vec![s(-1), s(-1), s(1)]]);
        // columns as images
        let imgs: Vec<SparseVec> = (0..3)
            .map(|c| (0..2).filter(|&r| !m[r][c].is_zero()).map(|r| (r, m[r][c].clone())).collect())
            .collect();
        let k2 = sparse_kernel(&imgs);
        assert_eq!(kernel_reduce(k), k2);
    }
}
