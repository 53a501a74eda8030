//! Monoidal transport of comodules and comodule algebras along a connected
//! cogroupoid.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::families::ComoduleAlgebra;
use crate::free::{FreeElement, Gen, Word};
use crate::galois::{cotensor, cotensor_kernel, matrix_coaction, CotensorSpace};
use crate::hopf::{residue, Cogroupoid, MatrixComodule};
use crate::linalg::rank_kernel_dense;
use crate::morphism::{check_morphism, AlgebraMorphism};
use crate::scalar::Scalar;
use crate::tensor::{Factor, Space, Tensor};
use std::collections::BTreeMap;

mod bimodule;
mod yd;
pub use bimodule::*;
pub use yd::*;

/// `V □ C(x,y)` with its induced right `C(y,y)`-coaction.
#[derive(Clone, Debug)]
pub struct TransportedComodule {
    pub comodule: MatrixComodule,
    pub cotensor: CotensorSpace,
    pub certificate: Certificate,
}

/// Split a tensor over `[..., last]` by the word in its last factor.
pub(crate) fn slices_by_last(t: &Tensor) -> BTreeMap<Word, Tensor> {
    let mut out: BTreeMap<Word, Tensor> = BTreeMap::new();
    for (k, c) in t.terms() {
        let (last, rest) = k.split_last().expect("nonempty key");
        out.entry(last.clone()).or_default().add_term(rest.to_vec(), c.clone());
    }
    out
}

/// Write `t ∈ cot ⊗ H` (keys `[v, a, h]`) as `Σ_i b_i ⊗ h_i`; `None` if some
/// slice leaves the cotensor.
pub(crate) fn expand_in_basis(cot: &CotensorSpace, t: &Tensor) -> Option<Vec<FreeElement>> {
    let mut out = vec![FreeElement::zero(); cot.basis.len()];
    for (h, slice) in slices_by_last(t) {
        if !cot.contains(&slice) {
            return None;
        }
        for (i, c) in cot.coordinates(&slice).into_iter().enumerate() {
            out[i].add_term(h.clone(), c);
        }
    }
    Some(out)
}

pub(crate) fn is_invertible(cols: &[Vec<Scalar>], n: usize) -> bool {
    let rows: Vec<Vec<Scalar>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    cols.len() == n && rank_kernel_dense(&rows, n).0 == n
}

/// `Θ(V) = V □ C(x,y)`, a right comodule over `C(y,y)` via `1 ⊗ Δ^y_{x,y}`.
pub fn transport_comodule(v: &MatrixComodule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<TransportedComodule> {
    let cot = cotensor(v, c, x, y, d)?;
    if !cot.stabilized {
        return Err(Error::NotStabilized(d));
    }
    let cap = d.max(1);
    let mut cert = Certificate::new(
        "comodule transport",
        vec![v.name.clone(), c.name.clone(), c.objects[x].clone(), c.objects[y].clone()],
        Some(d),
        c.is_exact(cap),
    );
    cert.note(format!("cotensor dimensions by level: {:?}", cot.dims));
    let lam = c.delta(x, y, y);
    let lam_space = lam.space(cap)?;
    let n = cot.dim();
    let mut coeffs = vec![FreeElement::zero(); n * n];
    for (j, b) in cot.basis.iter().enumerate() {
        let img = lam.apply_at(b, 1, &lam_space)?;
        match expand_in_basis(&cot, &img) {
            Some(col) => {
                for (i, e) in col.into_iter().enumerate() {
                    coeffs[i * n + j] = e;
                }
                cert.pass(format!("(1 ⊗ Δ)(b_{}) lies in Θ(V) ⊗ C(y,y)", j + 1), Some(d));
            }
            None => cert.fail(format!("(1 ⊗ Δ)(b_{}) lies in Θ(V) ⊗ C(y,y)", j + 1), Some(d), "slice outside the cotensor"),
        }
    }
    let comodule = MatrixComodule::new(format!("Θ({})", v.name), c.hom(y, y).clone(), n, coeffs);
    if cert.passed && n > 0 {
        cert.absorb(comodule.check(&c.hopf(y), d)?);
    }
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| c.hom(y, y).display(comodule.coeff(i, j))).collect();
        cert.note(format!("coaction row {}: [{}]", i + 1, row.join(", ")));
    }
    Ok(TransportedComodule { comodule, cotensor: cot, certificate: cert })
}

/// `ν(w_j) = Σ_i v_i ⊗ a_ij` for a matrix family whose `C(x,y)` generators
/// form an `m × n` block in row-major order.
pub fn matrix_nu(m: usize, n: usize, offset: usize) -> Vec<Tensor> {
    (0..n)
        .map(|j| {
            let mut t = Tensor::zero();
            for i in 0..m {
                t.add_term(vec![Word::gen(i as Gen), Word::gen((offset + i * n + j) as Gen)], Scalar::one());
            }
            t
        })
        .collect()
}

/// A candidate `ν: W → Θ(V)` given by the images of the basis of `W`:
/// every image lies in the cotensor, they form a basis of it, and `ν` is
/// `C(y,y)`-colinear.
pub fn certify_nu(t: &TransportedComodule, w: &MatrixComodule, images: &[Tensor], c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let cot = &t.cotensor;
    let cap = d.max(1);
    let mut cert = Certificate::new("transport map ν", vec![w.name.clone(), t.comodule.name.clone()], Some(d), t.certificate.exact);
    let mut cols = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let img = cot.space.normalize(img);
        if cot.contains(&img) {
            cert.pass(format!("ν(w_{}) ∈ V □ C(x,y)", j + 1), Some(d));
        } else {
            cert.fail(format!("ν(w_{}) ∈ V □ C(x,y)", j + 1), Some(d), cot.space.display(&img));
        }
        cols.push(cot.coordinates(&img));
    }
    if is_invertible(&cols, cot.dim()) {
        cert.pass(format!("ν is bijective onto the {}-dimensional cotensor", cot.dim()), Some(d));
    } else {
        cert.fail("ν is bijective", Some(d), format!("{} images for a cotensor of dimension {}", images.len(), cot.dim()));
    }
    let lam = c.delta(x, y, y);
    let sp = lam.space(cap)?;
    let full = cot.space.concat(&Space(vec![Factor::algebra(c.hom(y, y), cap)?]));
    for j in 0..images.len().min(w.dim) {
        let lhs = lam.apply_at(&images[j], 1, &sp)?;
        let mut rhs = Tensor::zero();
        for (i, img) in images.iter().enumerate().take(w.dim) {
            rhs = rhs.add(&img.otimes(&Tensor::from_elem(w.coeff(i, j))));
        }
        cert.record(format!("(1 ⊗ Δ)ν(w_{}) = Σ_i ν(w_i) ⊗ c_i{}", j + 1, j + 1), Some(d), residue(&full, &lhs, &rhs));
    }
    Ok(cert)
}

/// `V → Θ'(Θ(V))`, `v ↦ v_(0) ⊗ v_(1)^{xy} ⊗ v_(2)^{yx}`, is a colinear
/// isomorphism onto the transport back to `x`.
pub fn transport_roundtrip(v: &MatrixComodule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let there = transport_comodule(v, c, x, y, d)?;
    let back = transport_comodule(&there.comodule, c, y, x, d)?;
    let cap = d.max(1);
    let mut cert = Certificate::new("transport round trip", vec![v.name.clone(), c.objects[x].clone(), c.objects[y].clone()], Some(d), there.certificate.exact && back.certificate.exact);
    cert.absorb(there.certificate.clone());
    cert.absorb(back.certificate.clone());
    let split = c.delta(x, x, y);
    let sp = split.space(cap)?;
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..v.dim {
        let theta = split.apply_at(&matrix_coaction(v, i), 1, &sp)?;
        let Some(mid) = expand_in_basis(&there.cotensor, &theta) else {
            cert.fail(format!("θ(v_{}) ∈ Θ(V) ⊗ C(y,x)", i + 1), Some(d), "slice outside Θ(V)");
            return Ok(cert);
        };
        let mut t = Tensor::zero();
        for (k, e) in mid.iter().enumerate() {
            t = t.add(&Tensor::pure(vec![Word::gen(k as Gen)], Scalar::one()).otimes(&Tensor::from_elem(e)));
        }
        if back.cotensor.contains(&t) {
            cert.pass(format!("θ(v_{}) ∈ Θ(V) □ C(y,x)", i + 1), Some(d));
        } else {
            cert.fail(format!("θ(v_{}) ∈ Θ(V) □ C(y,x)", i + 1), Some(d), back.cotensor.space.display(&t));
        }
        cols.push(back.cotensor.coordinates(&t));
    }
    let n = back.comodule.dim;
    if is_invertible(&cols, n) {
        cert.pass("θ is bijective", Some(d));
    } else {
        cert.fail("θ is bijective", Some(d), format!("dim V = {}, dim Θ'Θ(V) = {}", v.dim, n));
        return Ok(cert);
    }
    // C'·P = P·C entrywise in C(x,x)
    let hxx = c.hom(x, x);
    let sp1 = Space(vec![Factor::algebra(hxx, cap)?]);
    for l in 0..n {
        for i in 0..v.dim {
            let mut diff = FreeElement::zero();
            for k in 0..n {
                diff.add_assign_scaled(back.comodule.coeff(l, k), &cols[i][k]);
            }
            for j in 0..v.dim {
                diff.add_assign_scaled(v.coeff(j, i), &-&cols[j][l]);
            }
            let r = sp1.normalize(&Tensor::from_elem(&diff));
            cert.record(format!("(C'P − PC)_{}{} = 0", l + 1, i + 1), Some(d), (!r.is_zero()).then(|| sp1.display(&r)));
        }
    }
    Ok(cert)
}

/// `V ⊗ W` with coefficients `c_ij c'_kl` on the basis `v_i ⊗ w_k` (index `i·dim W + k`).
pub fn tensor_comodule(v: &MatrixComodule, w: &MatrixComodule) -> MatrixComodule {
    let n = v.dim * w.dim;
    let mut coeffs = vec![FreeElement::zero(); n * n];
    for i in 0..v.dim {
        for k in 0..w.dim {
            for j in 0..v.dim {
                for l in 0..w.dim {
                    coeffs[(i * w.dim + k) * n + j * w.dim + l] = v.coeff(i, j).mul(w.coeff(k, l));
                }
            }
        }
    }
    MatrixComodule::new(format!("{} ⊗ {}", v.name, w.name), v.algebra.clone(), n, coeffs)
}

/// First level at which the cotensor dimension is final.
fn stable_level(cot: &CotensorSpace) -> u32 {
    cot.dims.iter().position(|&k| k == cot.dim()).unwrap_or(0) as u32
}

/// The monoidal constraint `(V□C) ⊗ (W□C) → (V⊗W)□C`,
/// `Σ v_i ⊗ a_i ⊗ Σ w_j ⊗ b_j ↦ Σ v_i ⊗ w_j ⊗ a_i b_j`.
pub fn monoidal_product(s: &Tensor, t: &Tensor, w_dim: usize) -> Tensor {
    let mut out = Tensor::zero();
    for (ks, cs) in s.terms() {
        for (kt, ct) in t.terms() {
            let i = ks[0].as_slice()[0] as usize;
            let j = kt[0].as_slice()[0] as usize;
            out.add_term(vec![Word::gen((i * w_dim + j) as Gen), ks[1].concat(&kt[1])], cs * ct);
        }
    }
    out
}

/// The monoidal constraint is a bijection between stabilized bases.
pub fn monoidality_check(v: &MatrixComodule, w: &MatrixComodule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let cv = cotensor(v, c, x, y, d)?;
    let cw = cotensor(w, c, x, y, d)?;
    if !cv.stabilized || !cw.stabilized {
        return Err(Error::NotStabilized(d));
    }
    let vw = tensor_comodule(v, w);
    let level = stable_level(&cv) + stable_level(&cw) + 1;
    let cvw = cotensor(&vw, c, x, y, level)?;
    let mut cert = Certificate::new(
        "monoidal constraint",
        vec![v.name.clone(), w.name.clone(), c.objects[x].clone(), c.objects[y].clone()],
        Some(level),
        c.is_exact(level),
    );
    if !cvw.stabilized {
        cert.fail("(V⊗W)□C stabilizes", Some(level), format!("{:?}", cvw.dims));
        return Ok(cert);
    }
    cert.note(format!("dimensions {} · {} → {}", cv.dim(), cw.dim(), cvw.dim()));
    let mut cols = Vec::new();
    for (i, s) in cv.basis.iter().enumerate() {
        for (j, t) in cw.basis.iter().enumerate() {
            let p = cvw.space.normalize(&monoidal_product(s, t, w.dim));
            let ok = cvw.contains(&p);
            cert.record(format!("F(s_{} ⊗ t_{}) ∈ (V⊗W)□C", i + 1, j + 1), Some(level), (!ok).then(|| cvw.space.display(&p)));
            cols.push(cvw.coordinates(&p));
        }
    }
    if is_invertible(&cols, cvw.dim()) {
        cert.pass("monoidal constraint is bijective", Some(level));
    } else {
        cert.fail("monoidal constraint is bijective", Some(level), format!("{} products, target dimension {}", cols.len(), cvw.dim()));
    }
    Ok(cert)
}

/// `ι(x_i) = Σ_k x_k ⊗ a_ki` from `A_{F⁻¹,t}` into `A_{E⁻¹,t} ⊗ C(x,y)`.
pub fn matrix_iota(a_e: &ComoduleAlgebra, a_f: &ComoduleAlgebra, c: &Cogroupoid, x: usize, y: usize) -> AlgebraMorphism {
    let m = a_e.algebra.num_gens();
    let n = a_f.algebra.num_gens();
    let images = (0..n)
        .map(|i| {
            let mut t = Tensor::zero();
            for k in 0..m {
                t.add_term(vec![Word::gen(k as Gen), Word::gen((k * n + i) as Gen)], Scalar::one());
            }
            t
        })
        .collect();
    AlgebraMorphism::new("ι", a_f.algebra.clone(), vec![a_e.algebra.clone(), c.hom(x, y).clone()], images)
}

/// `ι` is an algebra map into `A □ C(x,y)`, is `C(y,y)`-colinear and is
/// bijective onto the cotensor in filtration degrees `≤ d`.
pub fn transport_comodule_algebra(a_e: &ComoduleAlgebra, a_f: &ComoduleAlgebra, iota: &AlgebraMorphism, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let cap = d.max(1);
    let mut cert = Certificate::new(
        "comodule algebra transport",
        vec![a_e.algebra.name().to_string(), a_f.algebra.name().to_string(), c.objects[x].clone(), c.objects[y].clone()],
        Some(d),
        false,
    );
    cert.absorb(check_morphism(iota)?);
    cert.exact = false;
    let ae = &a_e.algebra;
    let vbasis: Vec<(Word, usize)> = ae.engine(cap)?.normal_words(d).into_iter().flatten().map(|w| { let l = w.len(); (w, l) }).collect();
    let coact_space = a_e.coaction.space(cap)?;
    let cot = cotensor_kernel(Factor::algebra(ae, cap)?, &vbasis, |u| Ok(a_e.coaction.apply_word(u, &coact_space)), c, x, y, d)?;
    cert.note(format!("cotensor dimensions by level: {:?}", cot.dims));
    let iota_space = iota.space(cap)?;
    let lam = c.delta(x, y, y);
    let lam_space = lam.space(cap)?;
    let full = iota_space.concat(&Space(vec![Factor::algebra(c.hom(y, y), cap)?]));
    let alpha_f_space = a_f.coaction.space(cap)?;
    let words: Vec<Word> = a_f.algebra.engine(cap)?.normal_words(d).into_iter().flatten().collect();
    let mut cols = Vec::new();
    for u in &words {
        let label = a_f.algebra.word_text(u);
        let img = iota.apply_word(u, &iota_space);
        let inside = cot.contains(&img);
        cert.record(format!("ι({}) ∈ A □ C(x,y)", label), Some(d), (!inside).then(|| iota_space.display(&img)));
        cols.push(cot.coordinates(&img));
        let lhs = lam.apply_at(&img, 1, &lam_space)?;
        let rhs = iota.apply_at(&a_f.coaction.apply_word(u, &alpha_f_space), 0, &iota_space)?;
        cert.record(format!("(1 ⊗ Δ)ι({0}) = (ι ⊗ 1)α({0})", label), Some(d), residue(&full, &lhs, &rhs));
    }
    if is_invertible(&cols, cot.dim()) {
        cert.pass(format!("ι is bijective onto the cotensor ({} = {})", words.len(), cot.dim()), Some(d));
    } else {
        cert.fail("ι is bijective onto the cotensor", Some(d), format!("{} words, cotensor dimension {}", words.len(), cot.dim()));
    }
    Ok(cert)
}
