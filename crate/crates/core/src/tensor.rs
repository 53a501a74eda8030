//! Elements of tensor products of presented algebras and vector spaces.

use crate::error::Result;
use crate::free::{render_terms, word_text, FreeElement, Word};
use crate::presentation::Presentation;
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub type Key = Vec<Word>;

/// Finite sum of pure tensors `c · w_1 ⊗ … ⊗ w_k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    terms: BTreeMap<Key, Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(key: Key, c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(key, c);
        t
    }

    /// `c · 1 ⊗ … ⊗ 1` with `arity` factors.
    pub fn scalar(c: Scalar, arity: usize) -> Self {
        Self::pure(vec![Word::empty(); arity], c)
    }

    pub fn unit(arity: usize) -> Self {
        Self::scalar(Scalar::one(), arity)
    }

    pub fn from_elem(e: &FreeElement) -> Self {
        let mut t = Self::zero();
        for (w, c) in e.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// Single-factor tensor back to a free element.
    pub fn to_elem(&self) -> FreeElement {
        let mut e = FreeElement::zero();
        for (k, c) in &self.terms {
            assert_eq!(k.len(), 1, "not a single-factor tensor");
            e.add_term(k[0].clone(), c.clone());
        }
        e
    }

    /// Zero-factor tensor back to a scalar.
    pub fn to_scalar(&self) -> Scalar {
        let mut s = Scalar::zero();
        for (k, c) in &self.terms {
            assert!(k.iter().all(|w| w.is_empty()));
            s = &s + c;
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &Key) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, k: Key, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, d) in &o.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::one());
        r
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::int(-1));
        r
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut r = Tensor::zero();
        r.add_scaled(self, c);
        r
    }

    /// Factorwise product (same arity).
    pub fn mul(&self, o: &Tensor) -> Tensor {
        let mut r = Tensor::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let k: Key = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                r.add_term(k, c * d);
            }
        }
        r
    }

    /// Tensor product: keys concatenated.
    pub fn otimes(&self, o: &Tensor) -> Tensor {
        let mut r = Tensor::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                r.add_term(k, c * d);
            }
        }
        r
    }

    /// New factor `i` is old factor `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        let mut r = Tensor::zero();
        for (k, c) in &self.terms {
            r.add_term(perm.iter().map(|&p| k[p].clone()).collect(), c.clone());
        }
        r
    }

    /// Multiply factors `pos` and `pos+1` (concatenate their words).
    pub fn merge(&self, pos: usize) -> Tensor {
        let mut r = Tensor::zero();
        for (k, c) in &self.terms {
            let mut nk: Key = k[..pos].to_vec();
            nk.push(k[pos].concat(&k[pos + 1]));
            nk.extend(k[pos + 2..].iter().cloned());
            r.add_term(nk, c.clone());
        }
        r
    }

    /// Replace factor `pos` (a word) by `f(word)`, a tensor spliced in place.
    pub fn splice(&self, pos: usize, mut f: impl FnMut(&Word) -> Result<Tensor>) -> Result<Tensor> {
        let mut r = Tensor::zero();
        let mut cache: BTreeMap<Word, Tensor> = BTreeMap::new();
        for (k, c) in &self.terms {
            if !cache.contains_key(&k[pos]) {
                cache.insert(k[pos].clone(), f(&k[pos])?);
            }
            let img = &cache[&k[pos]];
            for (ik, d) in &img.terms {
                let mut nk: Key = k[..pos].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(k[pos + 1..].iter().cloned());
                r.add_term(nk, c * d);
            }
        }
        Ok(r)
    }

    /// Largest word length in each factor.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for k in self.terms.keys() {
            if out.len() < k.len() {
                out.resize(k.len(), 0);
            }
            for (i, w) in k.iter().enumerate() {
                out[i] = out[i].max(w.len());
            }
        }
        out
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|k| k.iter().map(|w| w.len()).sum::<usize>()).max().unwrap_or(0)
    }
}

/// One tensor factor: generator names plus an optional reducer.
#[derive(Clone)]
pub struct Factor {
    pub names: Arc<Vec<String>>,
    pub engine: Option<Arc<RewriteSystem>>,
}

impl Factor {
    pub fn algebra(p: &Presentation, cap: u32) -> Result<Factor> {
        Ok(Factor { names: p.names().clone(), engine: Some(p.engine(cap)?) })
    }

    /// A vector space with basis vectors named by `names` (words of length 1).
    pub fn vector(names: Vec<String>) -> Factor {
        Factor { names: Arc::new(names), engine: None }
    }

    pub fn reduce_word(&self, w: &Word) -> FreeElement {
        match &self.engine {
            Some(e) => e.reduce_word(w),
            None => FreeElement::word(w.clone()),
        }
    }
}

/// An ordered list of factors in which tensors are normalized.
#[derive(Clone)]
pub struct Space(pub Vec<Factor>);

impl Space {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn normalize(&self, t: &Tensor) -> Tensor {
        let mut r = Tensor::zero();
        let mut cache: Vec<HashMap<&Word, FreeElement>> = vec![HashMap::new(); self.0.len()];
        for (k, c) in t.terms() {
            assert_eq!(k.len(), self.0.len(), "tensor arity does not match space");
            let mut partial: Vec<(Key, Scalar)> = vec![(Vec::new(), c.clone())];
            for (i, w) in k.iter().enumerate() {
                let nf = cache[i].entry(w).or_insert_with(|| self.0[i].reduce_word(w));
                let mut next = Vec::with_capacity(partial.len() * nf.len());
                for (pk, pc) in &partial {
                    for (nw, nc) in nf.terms() {
                        let mut kk = pk.clone();
                        kk.push(nw.clone());
                        next.push((kk, pc * nc));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (kk, cc) in partial {
                r.add_term(kk, cc);
            }
        }
        r
    }

    pub fn display(&self, t: &Tensor) -> String {
        if self.0.is_empty() {
            return t.to_scalar().to_string();
        }
        render_terms(t.terms().map(|(k, c)| {
            let parts: Vec<String> = k.iter().enumerate().map(|(i, w)| word_text(w, &self.0[i].names)).collect();
            (parts.join(" ⊗ "), c)
        }))
    }

    pub fn concat(&self, o: &Space) -> Space {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        Space(v)
    }
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

impl std::fmt::Debug for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter().map(|x| x.names.join(","))).finish()
    }
}
