//! Transport of bimodules from a Galois object `C(x,y)` to the Hopf
//! algebra `C(x,x)`, and the tensor-power isomorphisms behind it.

use crate::certificate::Certificate;
use crate::error::Result;
use crate::free::Word;
use crate::hopf::{residue, Cogroupoid};
use crate::scalar::Scalar;
use crate::tensor::{Factor, Key, Space, Tensor};

/// Normal words of weight ≤ d.
fn words(c: &Cogroupoid, x: usize, y: usize, cap: u32, d: u32) -> Result<Vec<Word>> {
    Ok(c.hom(x, y).engine(cap)?.normal_words(d).into_iter().flatten().collect())
}

fn word_tensor(w: &Word) -> Tensor {
    Tensor::pure(vec![w.clone()], Scalar::one())
}

/// Right action on `M' = C(x,y)`: `m · h = S_{y,x}(h_(2)) m h_(1)`.
fn right_prime(c: &Cogroupoid, x: usize, y: usize, m: &Tensor, h: &Word, cap: u32) -> Result<Tensor> {
    let dl = c.delta(x, x, y);
    let s = c.antipode(y, x);
    let split = dl.apply_word(h, &dl.space(cap)?);
    let sp = Space(vec![Factor::algebra(c.hom(x, y), cap)?]);
    let mut out = Tensor::zero();
    for (k, coef) in split.terms() {
        let left = s.apply_word(&k[1], &sp);
        out.add_scaled(&left.mul(m).mul(&word_tensor(&k[0])), coef);
    }
    Ok(sp.normalize(&out))
}

/// Left action on `M'' = C(x,y)`: `h · m = h_(1) m S_{y,x}(h_(2))`.
fn left_second(c: &Cogroupoid, x: usize, y: usize, m: &Tensor, h: &Word, cap: u32) -> Result<Tensor> {
    let dl = c.delta(x, x, y);
    let s = c.antipode(y, x);
    let split = dl.apply_word(h, &dl.space(cap)?);
    let sp = Space(vec![Factor::algebra(c.hom(x, y), cap)?]);
    let mut out = Tensor::zero();
    for (k, coef) in split.terms() {
        let right = s.apply_word(&k[1], &sp);
        out.add_scaled(&word_tensor(&k[0]).mul(m).mul(&right), coef);
    }
    Ok(sp.normalize(&out))
}

/// `M = C(x,y)` as a bimodule over itself gives two `C(x,x)`-bimodules
/// `M'` (right action twisted, left action by the counit) and `M''`
/// (left action twisted, right action by the counit). The twisted actions
/// of products must agree with the iterated actions of their letters.
pub fn bimodule_transport(c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let hd = 2u32;
    let cap = d + 2 * hd;
    let exact = c.is_exact(cap);
    let mut cert = Certificate::new("bimodule transport", vec![c.name.clone(), c.objects[x].clone(), c.objects[y].clone()], Some(d), exact);
    let sp = Space(vec![Factor::algebra(c.hom(x, y), cap)?]);
    let ms = words(c, x, y, cap, d)?;
    let hs = words(c, x, x, cap, hd)?;
    for m in &ms {
        let mt = word_tensor(m);
        let mname = c.hom(x, y).word_text(m);
        for h in &hs {
            let hname = c.hom(x, x).word_text(h);
            let direct = right_prime(c, x, y, &mt, h, cap)?;
            let mut iter = mt.clone();
            for &g in h.as_slice() {
                iter = right_prime(c, x, y, &iter, &Word::gen(g), cap)?;
            }
            cert.record(format!("M': ({}) · {} by letters", mname, hname), Some(d), residue(&sp, &direct, &iter));
            let direct = left_second(c, x, y, &mt, h, cap)?;
            let mut iter = mt.clone();
            for &g in h.as_slice().iter().rev() {
                iter = left_second(c, x, y, &iter, &Word::gen(g), cap)?;
            }
            cert.record(format!("M'': {} · ({}) by letters", hname, mname), Some(d), residue(&sp, &direct, &iter));
        }
    }
    let unit = Word::empty();
    for m in &ms {
        let mt = word_tensor(m);
        cert.record(format!("M': {} · 1 = {}", c.hom(x, y).word_text(m), c.hom(x, y).word_text(m)), Some(d), residue(&sp, &right_prime(c, x, y, &mt, &unit, cap)?, &mt));
        cert.record(format!("M'': 1 · {} = {}", c.hom(x, y).word_text(m), c.hom(x, y).word_text(m)), Some(d), residue(&sp, &left_second(c, x, y, &mt, &unit, cap)?, &mt));
    }
    Ok(cert)
}

/// Cartesian expansion of `n` two-factor tensors: first factors kept
/// apart, second factors concatenated.
fn expand(images: &[Tensor]) -> Vec<(Vec<Word>, Word, Scalar)> {
    let mut acc: Vec<(Vec<Word>, Word, Scalar)> = vec![(Vec::new(), Word::empty(), Scalar::one())];
    for t in images {
        let mut next = Vec::new();
        for (hs, tail, c) in &acc {
            for (k, d) in t.terms() {
                let mut h = hs.clone();
                h.push(k[0].clone());
                next.push((h, tail.concat(&k[1]), c * d));
            }
        }
        acc = next;
    }
    acc
}

fn key_product(keys: &[Vec<Word>]) -> Vec<Key> {
    let mut out: Vec<Key> = vec![Vec::new()];
    for ws in keys {
        out = out.iter().flat_map(|k| ws.iter().map(move |w| { let mut k = k.clone(); k.push(w.clone()); k })).collect();
    }
    out
}

/// `A^{⊗n} ⊗ M → H^{⊗n} ⊗ M`, `a_1 ⊗ … ⊗ a_n ⊗ m ↦ a_1(-1) ⊗ … ⊗ a_n(-1) ⊗ a_1(0)⋯a_n(0) m`
/// and its inverse `h_1 ⊗ … ⊗ h_n ⊗ m ↦ h_1(1) ⊗ … ⊗ h_n(1) ⊗ S(h_1(2)⋯h_n(2)) m`
/// for `M = A = C(x,y)` acting on itself by left multiplication.
pub fn galois_lemma_maps(c: &Cogroupoid, x: usize, y: usize, n: usize, d: u32) -> Result<Certificate> {
    let cap = (2 * n as u32 + 1) * d.max(1);
    let exact = c.is_exact(cap);
    let mut cert = Certificate::new(format!("tensor power isomorphism n={}", n), vec![c.name.clone(), c.objects[x].clone(), c.objects[y].clone()], Some(d), exact);
    let fa = Factor::algebra(c.hom(x, y), cap)?;
    let fh = Factor::algebra(c.hom(x, x), cap)?;
    let a_side = Space(vec![fa.clone(); n + 1]);
    let mut h_side = Space(vec![fh; n]);
    h_side.0.push(fa.clone());
    let m_space = Space(vec![fa]);
    let coact = c.delta(x, y, x);
    let coact_space = coact.space(cap)?;
    let split = c.delta(x, x, y);
    let split_space = split.space(cap)?;
    let s = c.antipode(y, x);
    let phi = |t: &Tensor| -> Tensor {
        let mut out = Tensor::zero();
        for (k, coef) in t.terms() {
            let imgs: Vec<Tensor> = k[..n].iter().map(|w| coact.apply_word(w, &coact_space)).collect();
            for (hs, tail, c) in expand(&imgs) {
                let m = m_space.normalize(&word_tensor(&tail.concat(&k[n])));
                let head = Tensor::pure(hs, Scalar::one());
                out.add_scaled(&head.otimes(&m), &(coef * &c));
            }
        }
        h_side.normalize(&out)
    };
    let psi = |t: &Tensor| -> Tensor {
        let mut out = Tensor::zero();
        for (k, coef) in t.terms() {
            let imgs: Vec<Tensor> = k[..n].iter().map(|w| split.apply_word(w, &split_space)).collect();
            for (as_, tail, c) in expand(&imgs) {
                let m = m_space.normalize(&s.apply_word(&tail, &m_space).mul(&word_tensor(&k[n])));
                let head = Tensor::pure(as_, Scalar::one());
                out.add_scaled(&head.otimes(&m), &(coef * &c));
            }
        }
        a_side.normalize(&out)
    };
    let aw = words(c, x, y, cap, d)?;
    let hw = words(c, x, x, cap, d)?;
    let mut a_keys: Vec<Vec<Word>> = vec![aw.clone(); n];
    a_keys.push(aw.clone());
    let mut h_keys: Vec<Vec<Word>> = vec![hw; n];
    h_keys.push(aw);
    let dd = d as usize;
    let mut bad = None;
    let mut count = 0;
    for k in key_product(&a_keys).into_iter().filter(|k| k.iter().all(|w| w.len() <= dd)) {
        count += 1;
        let t = Tensor::pure(k, Scalar::one());
        if let Some(r) = residue(&a_side, &psi(&phi(&t)), &t) {
            bad = Some(format!("on {}: {}", a_side.display(&t), r));
            break;
        }
    }
    cert.record(format!("ψ∘φ = id on {} product basis tensors of A^⊗{} ⊗ M", count, n), Some(d), bad);
    let mut bad = None;
    let mut count = 0;
    for k in key_product(&h_keys).into_iter().filter(|k| k.iter().all(|w| w.len() <= dd)) {
        count += 1;
        let t = Tensor::pure(k, Scalar::one());
        if let Some(r) = residue(&h_side, &phi(&psi(&t)), &t) {
            bad = Some(format!("on {}: {}", h_side.display(&t), r));
            break;
        }
    }
    cert.record(format!("φ∘ψ = id on {} product basis tensors of H^⊗{} ⊗ M", count, n), Some(d), bad);
    Ok(cert)
}
