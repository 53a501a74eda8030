//! Dense matrices with exact `Scalar` entries.

use crate::error::Error;
use crate::linalg;
use crate::scalar::{parse_scalar, ParseError, Scalar};
use crate::upoly::UPoly;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    /// Parse rows of expression strings.
    pub fn parse<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        for r in rows {
            let mut row = Vec::new();
            for e in r {
                row.push(parse_scalar(e.as_ref())?);
            }
            out.push(row);
        }
        let c = out.first().map_or(0, |x| x.len());
        if out.iter().any(|x| x.len() != c) {
            return Err(ParseError { input: "matrix".into(), pos: 0, msg: "ragged rows".into() });
        }
        Ok(Self::from_rows(out))
    }

    pub fn diag(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, o: &ExactMatrix) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] = &m[(i, j)] + &(a * b);
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &ExactMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &ExactMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |s, i| &s + &self[(i, i)])
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = Scalar::one();
        let mut prev = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Scalar::zero() };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &v / &prev;
                }
                a[i][k] = Scalar::zero();
            }
            prev = a[k][k].clone();
        }
        &sign * &a[n - 1][n - 1]
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::SingularMatrix("matrix is not square".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or_else(|| Error::SingularMatrix(format!("{}", self)))?;
            a.swap(c, p);
            inv.swap(c, p);
            let f = a[c][c].inv().unwrap();
            a[c] = a[c].iter().map(|x| x * &f).collect();
            inv[c] = inv[c].iter().map(|x| x * &f).collect();
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let g = a[i][c].clone();
                    for j in 0..n {
                        a[i][j] = &a[i][j] - &(&g * &a[c][j]);
                        inv[i][j] = &inv[i][j] - &(&g * &inv[c][j]);
                    }
                }
            }
        }
        Ok(Self::from_rows(inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.det().is_zero()
    }

    pub fn rank(&self) -> usize {
        linalg::rank_kernel_dense(&self.to_rows(), self.cols).0
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        linalg::kernel_reduce(linalg::rank_kernel_dense(&self.to_rows(), self.cols).1)
    }

    /// `Σ` of `entries` as map (row, col) -> value.
    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Non-unit invariant factors of `xI - M` (monic, each dividing the next).
    pub fn invariant_factors(&self) -> Vec<UPoly> {
        assert!(self.is_square());
        smith_diagonal(self).into_iter().filter(|p| p.degree().unwrap_or(0) > 0).collect()
    }

    /// Rational canonical form: block diagonal of companion matrices of the
    /// invariant factors.
    pub fn rational_canonical_form(&self) -> Self {
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        let mut off = 0;
        for f in self.invariant_factors() {
            let d = f.degree().unwrap();
            for i in 1..d {
                out[(off + i, off + i - 1)] = Scalar::one();
            }
            for i in 0..d {
                out[(off + i, off + d - 1)] = -&f.0[i];
            }
            off += d;
        }
        debug_assert_eq!(off, n);
        out
    }
}

/// Diagonal of the Smith normal form of `xI - M` over K[x], monic entries.
fn smith_diagonal(m: &ExactMatrix) -> Vec<UPoly> {
    let n = m.rows();
    let mut a: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UPoly::constant(-&m[(i, j)]);
                    if i == j {
                        c.add(&UPoly::x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if let Some(d) = a[i][j].degree() {
                        if best.is_none_or(|b| d < b.2) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].divrem(&a[k][k]);
                for j in k..n {
                    let t = q.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&t);
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].divrem(&a[k][k]);
                for i in k..n {
                    let t = q.mul(&a[i][k]);
                    a[i][j] = a[i][j].sub(&t);
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let mut bad = None;
            'outer: for i in k + 1..n {
                for j in k + 1..n {
                    if !a[i][j].divrem(&a[k][k]).1.is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for j in k..n {
                        let t = a[i][j].clone();
                        a[k][j] = a[k][j].add(&t);
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|i| a[i][i].monic()).collect()
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format!("({})", self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "({})", rows.join(", "))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// E_q = ((0, 1), (-1/q, 0)).
pub fn e_q(q: &Scalar) -> ExactMatrix {
    ExactMatrix::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![-&q.inv().unwrap(), Scalar::zero()]])
}

/// F_q = diag(1/q, q).
pub fn f_q(q: &Scalar) -> ExactMatrix {
    ExactMatrix::diag(vec![q.inv().unwrap(), q.clone()])
}

/// The asymmetry invariant tr(E^{-1} E^t).
pub fn asymmetry_trace(e: &ExactMatrix) -> Result<Scalar, Error> {
    Ok(e.inverse()?.mul(&e.transpose()).trace())
}
