//! The bilinear-form family B(E,F) and the cosovereign family H(E,F).

use super::idx_name;
use crate::emat::ElemMatrix;
use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen};
use crate::hopf::Cogroupoid;
use crate::matrix::{asymmetry_trace, ExactMatrix};
use crate::morphism::AlgebraMorphism;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::sync::Arc;

/// A hom-algebra with its recorded invariants and the zero-algebra
/// expectation they imply.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    pub algebra: Arc<Presentation>,
    pub invariants: Vec<(String, Scalar)>,
    pub expect_zero: bool,
}

/// Generator names `prefix{i}{j}` for an `m × n` block.
pub fn matrix_generators(prefix: &str, m: usize, n: usize) -> Vec<String> {
    (0..m).flat_map(|i| (0..n).map(move |j| idx_name(prefix, i, j))).collect()
}

fn square(m: &ExactMatrix, what: &str) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::SingularMatrix(format!("{} is not square", what)));
    }
    m.inverse().map_err(|_| Error::SingularMatrix(format!("{} is not invertible", what)))
}

fn flatten(rel: ElemMatrix) -> Vec<FreeElement> {
    rel.entries()
}

/// `B(E,F)`: generators `a_ij` (`E` is `m×m`, `F` is `n×n`) with
/// `F⁻¹aᵗEa = I_n` and `aF⁻¹aᵗE = I_m`.
pub fn make_b(e: &ExactMatrix, f: &ExactMatrix, name: &str) -> Result<HomAlgebra> {
    square(e, "E")?;
    let finv = square(f, "F")?;
    let (m, n) = (e.rows(), f.rows());
    let a = ElemMatrix::generators(m, n, 0);
    let r1 = a.transpose().mul_scalar_left(&finv).mul_scalar_right(e).mul(&a).sub(&ElemMatrix::identity(n));
    let r2 = a.mul_scalar_right(&finv).mul(&a.transpose()).mul_scalar_right(e).sub(&ElemMatrix::identity(m));
    let mut rels = flatten(r1);
    rels.extend(flatten(r2));
    let te = asymmetry_trace(e)?;
    let tf = asymmetry_trace(f)?;
    let expect_zero = te != tf;
    Ok(HomAlgebra {
        algebra: Arc::new(Presentation::with_names(name, matrix_generators("a", m, n), rels)),
        invariants: vec![("tr(E⁻¹Eᵗ)".into(), te), ("tr(F⁻¹Fᵗ)".into(), tf)],
        expect_zero,
    })
}

/// `H(E,F)`: generators `u_ij, v_ij` with `uvᵗ = I = vFuᵗE⁻¹` and
/// `vᵗu = I = FuᵗE⁻¹v`.
pub fn make_h(e: &ExactMatrix, f: &ExactMatrix, name: &str) -> Result<HomAlgebra> {
    let einv = square(e, "E")?;
    square(f, "F")?;
    let (m, n) = (e.rows(), f.rows());
    let u = ElemMatrix::generators(m, n, 0);
    let v = ElemMatrix::generators(m, n, (m * n) as Gen);
    let mut rels = Vec::new();
    rels.extend(flatten(u.mul(&v.transpose()).sub(&ElemMatrix::identity(m))));
    rels.extend(flatten(v.mul_scalar_right(f).mul(&u.transpose()).mul_scalar_right(&einv).sub(&ElemMatrix::identity(m))));
    rels.extend(flatten(v.transpose().mul(&u).sub(&ElemMatrix::identity(n))));
    rels.extend(flatten(u.transpose().mul_scalar_left(f).mul_scalar_right(&einv).mul(&v).sub(&ElemMatrix::identity(n))));
    let mut names = matrix_generators("u", m, n);
    names.extend(matrix_generators("v", m, n));
    let (tre, trf) = (e.trace(), f.trace());
    let (tie, tif) = (einv.trace(), f.inverse()?.trace());
    let expect_zero = tre != trf || tie != tif;
    Ok(HomAlgebra {
        algebra: Arc::new(Presentation::with_names(name, names, rels)),
        invariants: vec![("tr(E)".into(), tre), ("tr(F)".into(), trf), ("tr(E⁻¹)".into(), tie), ("tr(F⁻¹)".into(), tif)],
        expect_zero,
    })
}

fn pure2(g: usize, h: usize) -> Tensor {
    Tensor::pure(vec![crate::Word::gen(g as Gen), crate::Word::gen(h as Gen)], Scalar::one())
}

fn pure1(g: usize, c: Scalar) -> Tensor {
    Tensor::pure(vec![crate::Word::gen(g as Gen)], c)
}

fn delta_block(m: usize, n: usize, p: usize, off_src: usize, off_l: usize, off_r: usize, images: &mut [Tensor]) {
    // a_ij ↦ Σ_k a_ik ⊗ a_kj, a is m×n, the middle object has size p
    for i in 0..m {
        for j in 0..n {
            let mut t = Tensor::zero();
            for k in 0..p {
                t = t.add(&pure2(off_l + i * p + k, off_r + k * n + j));
            }
            images[off_src + i * n + j] = t;
        }
    }
}

fn counit_values(n: usize, blocks: usize) -> Vec<Scalar> {
    let mut out = Vec::new();
    for _ in 0..blocks {
        for i in 0..n {
            for j in 0..n {
                out.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
        }
    }
    out
}

fn labels(objects: &[(String, ExactMatrix)]) -> Vec<String> {
    objects.iter().map(|o| o.0.clone()).collect()
}

/// The cogroupoid with objects the given invertible matrices and
/// hom-algebras `B(X,Y)`.
pub fn b_cogroupoid(objects: &[(String, ExactMatrix)]) -> Result<Cogroupoid> {
    let k = objects.len();
    let mut homs = Vec::new();
    let mut notes = Vec::new();
    for x in 0..k {
        let mut row = Vec::new();
        for y in 0..k {
            let h = make_b(&objects[x].1, &objects[y].1, &format!("B({},{})", objects[x].0, objects[y].0))?;
            if h.expect_zero {
                notes.push(format!("B({},{}) expected zero: asymmetry traces differ", objects[x].0, objects[y].0));
            }
            row.push(h.algebra);
        }
        homs.push(row);
    }
    let size: Vec<usize> = objects.iter().map(|o| o.1.rows()).collect();
    let inv: Vec<ExactMatrix> = objects.iter().map(|o| o.1.inverse()).collect::<Result<_, _>>()?;
    let mut c = Cogroupoid::build(
        "B",
        labels(objects),
        homs.clone(),
        |x, y, z| {
            let mut images = vec![Tensor::zero(); size[x] * size[y]];
            delta_block(size[x], size[y], size[z], 0, 0, 0, &mut images);
            AlgebraMorphism::new(
                format!("Δ^{}_{{{},{}}}", objects[z].0, objects[x].0, objects[y].0),
                homs[x][y].clone(),
                vec![homs[x][z].clone(), homs[z][y].clone()],
                images,
            )
        },
        |x| AlgebraMorphism::to_field(format!("ε_{}", objects[x].0), homs[x][x].clone(), counit_values(size[x], 1)),
        |x, y| {
            // S(a_ij) = Σ_{k,l} (X⁻¹)_ik a'_lk Y_lj with a' the generators of B(Y,X)
            let (m, n) = (size[x], size[y]);
            let mut images = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    let mut t = Tensor::zero();
                    for kk in 0..m {
                        for l in 0..n {
                            let c = &inv[x][(i, kk)] * &objects[y].1[(l, j)];
                            if !c.is_zero() {
                                t = t.add(&pure1(l * m + kk, c));
                            }
                        }
                    }
                    images.push(t);
                }
            }
            AlgebraMorphism::new(format!("S_{{{},{}}}", objects[x].0, objects[y].0), homs[x][y].clone(), vec![homs[y][x].clone()], images)
                .into_anti()
        },
    );
    c.notes = notes;
    Ok(c)
}

/// The cogroupoid with hom-algebras `H(X,Y)`.
pub fn h_cogroupoid(objects: &[(String, ExactMatrix)]) -> Result<Cogroupoid> {
    let k = objects.len();
    let mut homs = Vec::new();
    let mut notes = Vec::new();
    for x in 0..k {
        let mut row = Vec::new();
        for y in 0..k {
            let h = make_h(&objects[x].1, &objects[y].1, &format!("H({},{})", objects[x].0, objects[y].0))?;
            if h.expect_zero {
                notes.push(format!("H({},{}) expected zero: traces differ", objects[x].0, objects[y].0));
            }
            row.push(h.algebra);
        }
        homs.push(row);
    }
    let size: Vec<usize> = objects.iter().map(|o| o.1.rows()).collect();
    let inv: Vec<ExactMatrix> = objects.iter().map(|o| o.1.inverse()).collect::<Result<_, _>>()?;
    let mut c = Cogroupoid::build(
        "H",
        labels(objects),
        homs.clone(),
        |x, y, z| {
            let (m, n, p) = (size[x], size[y], size[z]);
            let mut images = vec![Tensor::zero(); 2 * m * n];
            delta_block(m, n, p, 0, 0, 0, &mut images);
            delta_block(m, n, p, m * n, m * p, p * n, &mut images);
            AlgebraMorphism::new(
                format!("Δ^{}_{{{},{}}}", objects[z].0, objects[x].0, objects[y].0),
                homs[x][y].clone(),
                vec![homs[x][z].clone(), homs[z][y].clone()],
                images,
            )
        },
        |x| AlgebraMorphism::to_field(format!("ε_{}", objects[x].0), homs[x][x].clone(), counit_values(size[x], 2)),
        |x, y| {
            // S(u) = v'ᵗ, S(v) = X u'ᵗ Y⁻¹ with u', v' the generators of H(Y,X) (n×m)
            let (m, n) = (size[x], size[y]);
            let mut images = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    images.push(pure1(n * m + j * m + i, Scalar::one()));
                }
            }
            for i in 0..m {
                for j in 0..n {
                    let mut t = Tensor::zero();
                    for kk in 0..m {
                        for l in 0..n {
                            let c = &objects[x].1[(i, kk)] * &inv[y][(l, j)];
                            if !c.is_zero() {
                                t = t.add(&pure1(l * m + kk, c));
                            }
                        }
                    }
                    images.push(t);
                }
            }
            AlgebraMorphism::new(format!("S_{{{},{}}}", objects[x].0, objects[y].0), homs[x][y].clone(), vec![homs[y][x].clone()], images)
                .into_anti()
        },
    );
    c.notes = notes;
    Ok(c)
}
