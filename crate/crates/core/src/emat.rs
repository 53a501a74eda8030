//! Matrices whose entries are free-algebra elements.

use crate::free::{FreeElement, Gen};
use crate::matrix::ExactMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct ElemMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FreeElement>,
}

impl ElemMatrix {
    /// Generators `offset + i*cols + j` arranged as a matrix.
    pub fn generators(rows: usize, cols: usize, offset: Gen) -> Self {
        let data = (0..rows * cols).map(|k| FreeElement::gen(offset + k as Gen)).collect();
        ElemMatrix { rows, cols, data }
    }

    pub fn from_scalars(m: &ExactMatrix) -> Self {
        let mut data = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                data.push(FreeElement::scalar(m[(i, j)].clone()));
            }
        }
        ElemMatrix { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_scalars(&ExactMatrix::identity(n))
    }

    pub fn get(&self, i: usize, j: usize) -> &FreeElement {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::new();
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ElemMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, o: &ElemMatrix) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut data = Vec::new();
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut s = FreeElement::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        s = s.add(&a.mul(b));
                    }
                }
                data.push(s);
            }
        }
        ElemMatrix { rows: self.rows, cols: o.cols, data }
    }

    pub fn mul_scalar_right(&self, m: &ExactMatrix) -> Self {
        self.mul(&Self::from_scalars(m))
    }

    pub fn mul_scalar_left(&self, m: &ExactMatrix) -> Self {
        Self::from_scalars(m).mul(self)
    }

    pub fn sub(&self, o: &ElemMatrix) -> Self {
        ElemMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn entries(self) -> Vec<FreeElement> {
        self.data
    }
}
