//! Comodule algebras: the quadric algebras `A_{M,t}` over `B(E)` and the
//! twisted polynomial algebras `k_p[x_1..x_2n]` over `O_p(S_2n)`.

use super::ast::{prime, star, AstMatrix};
use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen, Word};
use crate::matrix::ExactMatrix;
use crate::morphism::{check_morphism, AlgebraMorphism};
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::Certificate;
use std::sync::Arc;

/// An algebra `A` with an algebra map `A → A ⊗ H`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub algebra: Arc<Presentation>,
    pub hopf: Arc<Presentation>,
    pub coaction: AlgebraMorphism,
}

impl ComoduleAlgebra {
    /// Well-definedness of the coaction as an algebra map.
    pub fn check(&self) -> Result<Certificate> {
        check_morphism(&self.coaction)
    }
}

fn two(a: usize, b: usize) -> FreeElement {
    FreeElement::word(Word::from_slice(&[a as Gen, b as Gen]))
}

/// `A_{α,t}`: generators `x_1..x_m` and the relation `Σ α_ij x_i x_j = t`.
pub fn quadric_algebra(alpha: &ExactMatrix, t: &Scalar, name: &str) -> Result<Arc<Presentation>> {
    if !alpha.is_square() {
        return Err(Error::SingularMatrix("coefficient matrix is not square".into()));
    }
    let m = alpha.rows();
    let mut r = FreeElement::scalar(-t.clone());
    for i in 0..m {
        for j in 0..m {
            if !alpha[(i, j)].is_zero() {
                r = r.add(&two(i, j).scale(&alpha[(i, j)]));
            }
        }
    }
    let names = (0..m).map(|i| format!("x{}", i + 1)).collect();
    Ok(Arc::new(Presentation::with_names(name, names, vec![r])))
}

/// `A_{E⁻¹,t}` with coaction `x_i ↦ Σ_k x_k ⊗ a_ki` into `A ⊗ B(E)`.
pub fn make_amt(e: &ExactMatrix, t: &Scalar, b_e: &Arc<Presentation>, name: &str) -> Result<ComoduleAlgebra> {
    let alpha = e.inverse()?;
    let algebra = quadric_algebra(&alpha, t, name)?;
    let m = e.rows();
    if b_e.num_gens() != m * m {
        return Err(Error::Precondition("B(E) has the wrong number of generators".into()));
    }
    let images = (0..m)
        .map(|i| {
            let mut img = Tensor::zero();
            for k in 0..m {
                img.add_term(vec![Word::gen(k as Gen), Word::gen((k * m + i) as Gen)], Scalar::one());
            }
            img
        })
        .collect();
    let coaction = AlgebraMorphism::new(format!("coaction of {}", name), algebra.clone(), vec![algebra.clone(), b_e.clone()], images);
    Ok(ComoduleAlgebra { algebra, hopf: b_e.clone(), coaction })
}

/// `k_p[x_1..x_2n]` with `4x_ix_j = (3+p)x_jx_i + (1-p)x_{j'}x_i + (1-p)x_jx_{i'} + (p-1)x_{j'}x_{i'}`
/// (`p = p_{i*j*}`), coacted on by `x_i ↦ Σ_k x_k ⊗ x_ki`.
pub fn make_kpx(p: &AstMatrix, o_p: &Arc<Presentation>, name: &str) -> Result<ComoduleAlgebra> {
    let n2 = 2 * p.size();
    if o_p.num_gens() != n2 * n2 {
        return Err(Error::Precondition("Hopf algebra has the wrong number of generators".into()));
    }
    let one = Scalar::one();
    let mut rels = Vec::new();
    for i in 0..n2 {
        for j in 0..n2 {
            let pp = p.get(star(i), star(j));
            let rhs = two(j, i)
                .scale(&(&Scalar::int(3) + pp))
                .add(&two(prime(j), i).scale(&(&one - pp)))
                .add(&two(j, prime(i)).scale(&(&one - pp)))
                .add(&two(prime(j), prime(i)).scale(&(pp - &one)));
            rels.push(two(i, j).scale(&Scalar::int(4)).sub(&rhs));
        }
    }
    let names = (0..n2).map(|i| format!("x{}", i + 1)).collect();
    let algebra = Arc::new(Presentation::with_names(name, names, rels));
    let images = (0..n2)
        .map(|i| {
            let mut img = Tensor::zero();
            for k in 0..n2 {
                img.add_term(vec![Word::gen(k as Gen), Word::gen((k * n2 + i) as Gen)], Scalar::one());
            }
            img
        })
        .collect();
    let coaction = AlgebraMorphism::new(format!("coaction of {}", name), algebra.clone(), vec![algebra.clone(), o_p.clone()], images);
    Ok(ComoduleAlgebra { algebra, hopf: o_p.clone(), coaction })
}

