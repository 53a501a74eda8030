//! Equivalence tests on matrices, explicit isomorphisms between the
//! hom-algebras of the B and H families, and the fusion rules of H(F).

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::families::{b_cogroupoid, h_cogroupoid};
use crate::free::{Gen, Word};
use crate::hopf::{residue, Cogroupoid};
use crate::linalg::{sparse_rank, SparseVec};
use crate::matrix::ExactMatrix;
use crate::morphism::{check_morphism, AlgebraMorphism};
use crate::scalar::Scalar;
use crate::tensor::{Factor, Space, Tensor};
use std::collections::{BTreeMap, HashMap};

fn asymmetry(f: &ExactMatrix) -> Result<ExactMatrix> {
    if !f.is_square() {
        return Err(Error::SingularMatrix(format!("{} is not square", f)));
    }
    let inv = f.inverse().map_err(|_| Error::SingularMatrix(f.to_string()))?;
    Ok(inv.mul(&f.transpose()))
}

/// `F ∼ G` (some `P` with `F = PGPᵗ`), decided by similarity of `F⁻¹Fᵗ` and `G⁻¹Gᵗ`.
pub fn congruent_test(f: &ExactMatrix, g: &ExactMatrix) -> Result<bool> {
    let (a, b) = (asymmetry(f)?, asymmetry(g)?);
    Ok(a.rows() == b.rows() && a.rational_canonical_form() == b.rational_canonical_form())
}

/// `F ≈ G` (some `P` with `F = PGP⁻¹`).
pub fn similar_test(f: &ExactMatrix, g: &ExactMatrix) -> bool {
    f.is_square() && g.is_square() && f.rows() == g.rows() && f.rational_canonical_form() == g.rational_canonical_form()
}

/// An algebra map between hom-algebras together with its verification.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub morphism: AlgebraMorphism,
    pub certificate: Certificate,
}

/// Generator images for `X ↦ X·M_b` on consecutive `m × n` blocks of generators.
fn block_images(m: usize, n: usize, blocks: &[ExactMatrix]) -> Vec<Tensor> {
    let mut out = Vec::new();
    for (b, mat) in blocks.iter().enumerate() {
        let off = b * m * n;
        for i in 0..m {
            for j in 0..n {
                let mut t = Tensor::zero();
                for k in 0..n {
                    let c = &mat[(k, j)];
                    if !c.is_zero() {
                        t.add_term(vec![Word::gen((off + i * n + k) as Gen)], c.clone());
                    }
                }
                out.push(t);
            }
        }
    }
    out
}

/// Normal words of weight ≤ d, in a stable order.
fn normal_basis(p: &crate::Presentation, d: u32) -> Result<Vec<Word>> {
    Ok(p.engine(d)?.normal_words(d).into_iter().flatten().collect())
}

/// Checks for `f: C(0,1) → C(0,2)` with inverse candidate `g`: algebra maps,
/// left `C(0,0)`-colinearity on generators, `g∘f = id` and `f∘g = id` on
/// generators, and filtered bijectivity up to degree `d`.
fn certify_iso(c: &Cogroupoid, f: &AlgebraMorphism, g: &AlgebraMorphism, d: u32, cert: &mut Certificate) -> Result<()> {
    cert.absorb(check_morphism(f)?);
    cert.absorb(check_morphism(g)?);
    let (src, tgt) = (c.hom(0, 1), c.hom(0, 2));
    let cap = d.max(1);
    let target = Space(vec![Factor::algebra(c.hom(0, 0), cap)?, Factor::algebra(tgt, cap)?]);
    let d1 = c.delta(0, 1, 0);
    let d2 = c.delta(0, 2, 0);
    let fs = f.space(cap)?;
    for (i, name) in src.names().iter().enumerate() {
        let gen = Word::gen(i as Gen);
        let lhs = d2.apply_at(&f.apply_word(&gen, &fs), 0, &d2.space(cap)?)?;
        let rhs = f.apply_at(&d1.apply_word(&gen, &d1.space(cap)?), 1, &fs)?;
        cert.record(format!("Δ∘f = (1⊗f)∘Δ on {}", name), None, residue(&target, &lhs, &rhs));
    }
    let ss = Space(vec![Factor::algebra(src, cap)?]);
    let gs = g.space(cap)?;
    for (i, name) in src.names().iter().enumerate() {
        let gen = Tensor::pure(vec![Word::gen(i as Gen)], Scalar::one());
        let back = g.apply_at(&f.apply_word(&Word::gen(i as Gen), &fs), 0, &gs)?;
        cert.record(format!("g∘f = id on {}", name), None, residue(&ss, &back, &gen));
    }
    for (i, name) in tgt.names().iter().enumerate() {
        let gen = Tensor::pure(vec![Word::gen(i as Gen)], Scalar::one());
        let back = f.apply_at(&g.apply_word(&Word::gen(i as Gen), &gs), 0, &fs)?;
        cert.record(format!("f∘g = id on {}", name), None, residue(&fs, &back, &gen));
    }
    let sw = normal_basis(src, d)?;
    let tw = normal_basis(tgt, d)?;
    let index: HashMap<&Word, usize> = tw.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let fd = f.space(d)?;
    for k in 0..=d as usize {
        let s: Vec<&Word> = sw.iter().filter(|w| src.weight(w) as usize <= k).collect();
        let t = tw.iter().filter(|w| tgt.weight(w) as usize <= k).count();
        let rows: Vec<SparseVec> = s
            .iter()
            .map(|w| f.apply_word(w, &fd).terms().map(|(key, c)| (index[&key[0]], c.clone())).collect())
            .collect();
        let r = sparse_rank(&rows);
        let res = (r != s.len() || r != t).then(|| format!("rank {} from {} to {} normal words", r, s.len(), t));
        cert.record(format!("f bijective on filtration degree ≤ {}", k), Some(k as u32), res);
    }
    Ok(())
}

fn same_shape(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols()
}

/// `B(E,F) → B(E,G)`, `a ↦ aPᵗ`, for a witness `F = PGPᵗ`.
pub fn build_iso_b(e: &ExactMatrix, f: &ExactMatrix, g: &ExactMatrix, p: &ExactMatrix, d: u32) -> Result<Isomorphism> {
    let bad = |why: &str| Error::CongruenceWitnessInvalid(why.to_string());
    if !same_shape(f, g) || !same_shape(f, p) || !f.is_square() {
        return Err(bad("sizes of F, G and P differ"));
    }
    let pinv = p.inverse().map_err(|_| bad("P is singular"))?;
    if p.mul(g).mul(&p.transpose()) != *f {
        return Err(bad(&format!("PGPᵗ ≠ F for P = {}", p)));
    }
    let c = b_cogroupoid(&[("E".into(), e.clone()), ("F".into(), f.clone()), ("G".into(), g.clone())])?;
    let (m, n) = (e.rows(), f.rows());
    let fw = AlgebraMorphism::new("a ↦ aPᵗ", c.hom(0, 1).clone(), vec![c.hom(0, 2).clone()], block_images(m, n, &[p.transpose()]));
    let gw = AlgebraMorphism::new("b ↦ bP⁻ᵗ", c.hom(0, 2).clone(), vec![c.hom(0, 1).clone()], block_images(m, n, &[pinv.transpose()]));
    let mut cert = Certificate::new("B-isomorphism", vec![format!("E = {}", e), format!("F = {}", f), format!("G = {}", g), format!("P = {}", p)], Some(d), c.is_exact(d));
    certify_iso(&c, &fw, &gw, d, &mut cert)?;
    Ok(Isomorphism { morphism: fw, certificate: cert })
}

/// `H(E,F) → H(E,G)`, `u ↦ uPᵗ`, `v ↦ vP⁻¹`, for a witness `F = PGP⁻¹`.
pub fn build_iso_h(e: &ExactMatrix, f: &ExactMatrix, g: &ExactMatrix, p: &ExactMatrix, d: u32) -> Result<Isomorphism> {
    let bad = |why: &str| Error::SimilarityWitnessInvalid(why.to_string());
    if !same_shape(f, g) || !same_shape(f, p) || !f.is_square() {
        return Err(bad("sizes of F, G and P differ"));
    }
    let pinv = p.inverse().map_err(|_| bad("P is singular"))?;
    if p.mul(g).mul(&pinv) != *f {
        return Err(bad(&format!("PGP⁻¹ ≠ F for P = {}", p)));
    }
    let c = h_cogroupoid(&[("E".into(), e.clone()), ("F".into(), f.clone()), ("G".into(), g.clone())])?;
    let (m, n) = (e.rows(), f.rows());
    let fw = AlgebraMorphism::new("u ↦ uPᵗ, v ↦ vP⁻¹", c.hom(0, 1).clone(), vec![c.hom(0, 2).clone()], block_images(m, n, &[p.transpose(), pinv.clone()]));
    let gw = AlgebraMorphism::new("u ↦ uP⁻ᵗ, v ↦ vP", c.hom(0, 2).clone(), vec![c.hom(0, 1).clone()], block_images(m, n, &[pinv.transpose(), p.clone()]));
    let mut cert = Certificate::new("H-isomorphism", vec![format!("E = {}", e), format!("F = {}", f), format!("G = {}", g), format!("P = {}", p)], Some(d), c.is_exact(d));
    certify_iso(&c, &fw, &gw, d, &mut cert)?;
    Ok(Isomorphism { morphism: fw, certificate: cert })
}

/// Verification of a hand-made map `B(E,F) → B(E,G)` given by `a ↦ aX`,
/// with no check of the witness. Used to confirm that wrong witnesses fail.
pub fn probe_b_map(e: &ExactMatrix, f: &ExactMatrix, g: &ExactMatrix, x: &ExactMatrix) -> Result<Certificate> {
    let c = b_cogroupoid(&[("E".into(), e.clone()), ("F".into(), f.clone()), ("G".into(), g.clone())])?;
    let fw = AlgebraMorphism::new("a ↦ aX", c.hom(0, 1).clone(), vec![c.hom(0, 2).clone()], block_images(e.rows(), f.rows(), &[x.clone()]));
    check_morphism(&fw)
}

/// Words over `{α, β}` are strings over `a`, `b`; the empty string is the unit `e`.
pub fn bar(w: &str) -> String {
    w.chars().rev().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()
}

fn valid(w: &str) -> bool {
    w.chars().all(|c| c == 'a' || c == 'b')
}

/// `U_x ⊗ U_y = ⊕ U_{ab}` over `x = ag`, `y = ḡb`, as a sorted multiset.
pub fn fusion_decompose(x: &str, y: &str) -> Vec<String> {
    assert!(valid(x) && valid(y), "fusion words use the letters a and b");
    let mut out = Vec::new();
    for cut in 0..=x.len() {
        let (a, g) = x.split_at(cut);
        if let Some(b) = y.strip_prefix(bar(g).as_str()) {
            out.push(format!("{}{}", a, b));
        }
    }
    out.sort();
    out
}

/// Bilinear extension to multisets.
pub fn fusion_product(xs: &[String], ys: &[String]) -> Vec<String> {
    let mut out: Vec<String> = xs.iter().flat_map(|x| ys.iter().flat_map(move |y| fusion_decompose(x, y))).collect();
    out.sort();
    out
}

/// All words of length ≤ `len`, shortest first.
pub fn fusion_words(len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut last = vec![String::new()];
    for _ in 0..len {
        last = last.iter().flat_map(|w| [format!("{}a", w), format!("{}b", w)]).collect();
        out.extend(last.iter().cloned());
    }
    out
}

pub fn word_label(w: &str) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.replace('a', "α").replace('b', "β")
    }
}

/// Dimensions of the simple comodules `U_w`, solved letter by letter from
/// `d_x d_l = Σ d_{ab}` with `d_e = 1` and `d_α = d_β = n`, then checked
/// on every product of words of length ≤ `len`.
pub fn fusion_dims(n: i64, len: usize) -> (BTreeMap<String, i64>, Certificate) {
    let mut cert = Certificate::new("fusion dimensions", vec![format!("n = {}", n)], Some(len as u32), true);
    let mut dims: BTreeMap<String, i64> = BTreeMap::new();
    dims.insert(String::new(), 1);
    for w in fusion_words(2 * len).into_iter().skip(1) {
        let (x, l) = w.split_at(w.len() - 1);
        let dx = dims[x];
        let dl = if x.is_empty() { n } else { dims[l] };
        let others: i64 = fusion_decompose(x, l).iter().filter(|v| **v != w).map(|v| dims[v.as_str()]).sum();
        dims.insert(w.clone(), dx * dl - others);
    }
    let ws = fusion_words(len);
    for x in &ws {
        for y in &ws {
            let lhs = dims[x] * dims[y];
            let rhs: i64 = fusion_decompose(x, y).iter().map(|v| dims[v.as_str()]).sum();
            cert.record(
                format!("d({}) d({}) = Σ d", word_label(x), word_label(y)),
                Some(len as u32),
                (lhs != rhs).then(|| format!("{} ≠ {}", lhs, rhs)),
            );
        }
    }
    (dims, cert)
}

/// Associativity and duality of the fusion rules on words of length ≤ `len`.
pub fn fusion_check(len: usize) -> Certificate {
    let mut cert = Certificate::new("fusion rules", vec![format!("length ≤ {}", len)], Some(len as u32), true);
    let ws = fusion_words(len);
    for x in &ws {
        for y in &ws {
            let xy = fusion_decompose(x, y);
            for z in &ws {
                let l = fusion_product(&xy, &[z.clone()]);
                let r = fusion_product(&[x.clone()], &fusion_decompose(y, z));
                cert.record(
                    format!("({} {}) {} = {} ({} {})", word_label(x), word_label(y), word_label(z), word_label(x), word_label(y), word_label(z)),
                    Some(len as u32),
                    (l != r).then(|| format!("{:?} ≠ {:?}", l, r)),
                );
            }
        }
        let units = fusion_decompose(x, &bar(x)).iter().filter(|w| w.is_empty()).count();
        cert.record(
            format!("e occurs once in {} ⊗ {}", word_label(x), word_label(&bar(x))),
            Some(len as u32),
            (units != 1).then(|| format!("{} times", units)),
        );
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fusion_examples() {
        assert_eq!(fusion_decompose("a", "b"), vec!["".to_string(), "ab".to_string()]);
        assert_eq!(fusion_decompose("a", "a"), vec!["aa".to_string()]);
        assert_eq!(fusion_decompose("", "bab"), vec!["bab".to_string()]);
        assert_eq!(bar("aab"), "abb");
    }

    #[test]
    fn dims_of_short_words() {
        let (d, cert) = fusion_dims(2, 2);
        assert!(cert.passed);
        assert_eq!(d["ab"], 3);
        assert_eq!(d["aa"], 4);
        assert_eq!(d["aba"], 4);
    }

    #[test]
    fn similarity_examples() {
        let d23 = ExactMatrix::from_ints(&[&[2, 0], &[0, 3]]);
        assert!(similar_test(&d23, &ExactMatrix::from_ints(&[&[2, 0], &[1, 3]])));
        assert!(!similar_test(&d23, &ExactMatrix::from_ints(&[&[2, 0], &[0, 4]])));
        assert!(!similar_test(&d23, &ExactMatrix::identity(3)));
    }
}
