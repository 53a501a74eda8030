//! Finitely presented algebras and their filtration-degree quotients.

use crate::error::{Error, Result};
use crate::free::{word_count, word_text, FreeElement, Gen, Word};
use crate::linalg::{Echelon, SparseVec};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Default cap on the number of words of a single degree.
pub const WORD_CAP: u128 = 100_000;

pub struct Presentation {
    name: String,
    names: Arc<Vec<String>>,
    degrees: Vec<u32>,
    relations: Vec<FreeElement>,
    engines: Mutex<Vec<Arc<RewriteSystem>>>,
    word_cap: u128,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Presentation({}, {} gens, {} rels)", self.name, self.names.len(), self.relations.len())
    }
}

impl Presentation {
    /// Zero relations are dropped.
    pub fn new(name: impl Into<String>, gens: Vec<(String, u32)>, relations: Vec<FreeElement>) -> Self {
        assert!(gens.iter().all(|g| g.1 > 0), "generator degrees must be positive");
        let (names, degrees): (Vec<String>, Vec<u32>) = gens.into_iter().unzip();
        Presentation {
            name: name.into(),
            names: Arc::new(names),
            degrees,
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
            engines: Mutex::new(Vec::new()),
            word_cap: WORD_CAP,
        }
    }

    /// All generators of degree one.
    pub fn with_names(name: impl Into<String>, names: Vec<String>, relations: Vec<FreeElement>) -> Self {
        Self::new(name, names.into_iter().map(|n| (n, 1)).collect(), relations)
    }

    pub fn with_word_cap(mut self, cap: u128) -> Self {
        self.word_cap = cap;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &Arc<Vec<String>> {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn relations(&self) -> &[FreeElement] {
        &self.relations
    }

    pub fn gen(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn weight(&self, w: &Word) -> u32 {
        w.0.iter().map(|&g| self.degrees[g as usize]).sum()
    }

    /// Weighted degree of the largest term, `None` for zero.
    pub fn degree_of(&self, e: &FreeElement) -> Option<u32> {
        e.terms().map(|(w, _)| self.weight(w)).max()
    }

    pub fn check_word_cap(&self, d: u32) -> Result<()> {
        let words = word_count(&self.degrees, d);
        if words > self.word_cap {
            return Err(Error::DegreeTooLarge { degree: d, words, cap: self.word_cap });
        }
        Ok(())
    }

    /// Reduction system exact on the slice of weight ≤ `cap`.
    pub fn engine(&self, cap: u32) -> Result<Arc<RewriteSystem>> {
        {
            let cache = self.engines.lock().unwrap();
            if let Some(e) = cache.iter().find(|e| e.is_complete() || e.cap() >= cap) {
                return Ok(e.clone());
            }
        }
        self.check_word_cap(cap)?;
        let e = Arc::new(RewriteSystem::complete(&self.degrees, &self.relations, cap));
        let mut cache = self.engines.lock().unwrap();
        cache.push(e.clone());
        cache.sort_by_key(|e| std::cmp::Reverse(e.cap()));
        Ok(e)
    }

    /// True when the reduction system closes up, tried at `d` or at the
    /// degree where overlaps of two relations live, whichever is larger.
    pub fn is_complete_at(&self, d: u32) -> bool {
        let r = self.relations.iter().filter_map(|e| self.degree_of(e)).max().unwrap_or(0);
        self.engine(d.max((2 * r).saturating_sub(1))).map(|e| e.is_complete()).unwrap_or(false)
    }

    pub fn normal_form(&self, e: &FreeElement, d: u32) -> Result<FreeElement> {
        Ok(self.engine(d)?.reduce(e))
    }

    pub fn equals_in_quotient(&self, e1: &FreeElement, e2: &FreeElement, d: u32) -> Result<bool> {
        if e1 == e2 {
            return Ok(true);
        }
        Ok(self.normal_form(&e1.sub(e2), d)?.is_zero())
    }

    /// Dimensions of the quotient in each exact degree 0..=d, for the slice at level d.
    pub fn quotient_dims(&self, d: u32) -> Result<Vec<usize>> {
        let e = self.engine(d)?;
        Ok(e.normal_words(d).iter().map(|v| v.len()).collect())
    }

    /// Normal words of weight ≤ d, in increasing order.
    pub fn basis(&self, d: u32) -> Result<Vec<Word>> {
        let e = self.engine(d)?;
        Ok(e.normal_words(d).into_iter().flatten().collect())
    }

    fn all_words(&self, d: u32) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        while let Some(w) = frontier.pop() {
            let wt = self.weight(&w);
            for g in 0..self.num_gens() as Gen {
                if wt + self.degrees[g as usize] <= d {
                    let mut x = w.clone();
                    x.0.push(g);
                    out.push(x.clone());
                    frontier.push(x);
                }
            }
        }
        out.sort_by(|a, b| (self.weight(a), a).cmp(&(self.weight(b), b)));
        out
    }

    /// Reduced basis `{w − NF(w)}` of the ideal slice at weight ≤ d.
    pub fn ideal_slice(&self, d: u32) -> Result<Vec<FreeElement>> {
        self.check_word_cap(d)?;
        let e = self.engine(d)?;
        let mut out = Vec::new();
        for w in self.all_words(d) {
            if !e.is_irreducible(&w) {
                out.push(FreeElement::word(w.clone()).sub(&e.reduce_word(&w)));
            }
        }
        Ok(out)
    }

    /// The slice computed directly: span of all `u·r·v` of weight ≤ d,
    /// row-reduced. Independent of the rewriting engine.
    pub fn ideal_slice_dense(&self, d: u32) -> Result<Vec<FreeElement>> {
        self.check_word_cap(d)?;
        let words = self.all_words(d);
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut ech = Echelon::new();
        for r in &self.relations {
            let Some(rd) = self.degree_of(r) else { continue };
            if rd > d {
                continue;
            }
            for u in words.iter().filter(|u| self.weight(u) + rd <= d) {
                for v in words.iter().filter(|v| self.weight(u) + self.weight(v) + rd <= d) {
                    let p = r.sandwich(u, v);
                    let vec: SparseVec = p.terms().map(|(w, c)| (index[w], c.clone())).collect();
                    ech.insert(&vec);
                }
            }
        }
        let mut out: Vec<FreeElement> = ech
            .fully_reduced()
            .into_iter()
            .map(|(_, row)| {
                let mut e = FreeElement::zero();
                for (i, c) in row {
                    e.add_term(words[i].clone(), c.clone());
                }
                e
            })
            .collect();
        out.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
        Ok(out)
    }

    /// Per-degree quotient dimensions from the dense slice.
    pub fn quotient_dims_dense(&self, d: u32) -> Result<Vec<usize>> {
        let slice = self.ideal_slice_dense(d)?;
        let mut dims = vec![0usize; d as usize + 1];
        for w in self.all_words(d) {
            dims[self.weight(&w) as usize] += 1;
        }
        // each echelon row has a distinct leading word
        for r in &slice {
            let lw = r.leading().unwrap().0;
            dims[self.weight(lw) as usize] -= 1;
        }
        Ok(dims)
    }

    pub fn display(&self, e: &FreeElement) -> String {
        e.display(&self.names)
    }

    pub fn word_text(&self, w: &Word) -> String {
        word_text(w, &self.names)
    }

    /// Canonical text form: generator list and relations.
    pub fn text(&self) -> String {
        let gens: Vec<String> = self
            .names
            .iter()
            .zip(&self.degrees)
            .map(|(n, d)| if *d == 1 { n.clone() } else { format!("{}:{}", n, d) })
            .collect();
        let rels: Vec<String> = self.relations.iter().map(|r| format!("  {} = 0", self.display(r))).collect();
        format!("algebra {}\ngenerators {}\nrelations\n{}", self.name, gens.join(" "), rels.join("\n"))
    }

    pub fn gen_elem(&self, name: &str) -> FreeElement {
        FreeElement::gen(self.gen(name).unwrap_or_else(|| panic!("no generator {}", name)))
    }
}

/// Tensor product presentation: disjoint union of generators (renamed with a
/// prefix when names clash) and cross commutation relations.
pub fn tensor_presentation(p: &Presentation, q: &Presentation) -> Presentation {
    let clash = p.names.iter().any(|n| q.names.contains(n));
    let pn: Vec<String> = p.names.iter().map(|n| if clash { format!("l_{}", n) } else { n.clone() }).collect();
    let qn: Vec<String> = q.names.iter().map(|n| if clash { format!("r_{}", n) } else { n.clone() }).collect();
    let off = p.num_gens() as Gen;
    let shift = |e: &FreeElement| {
        let mut out = FreeElement::zero();
        for (w, c) in e.terms() {
            out.add_term(Word(w.0.iter().map(|g| g + off).collect()), c.clone());
        }
        out
    };
    let mut rels: Vec<FreeElement> = p.relations.clone();
    rels.extend(q.relations.iter().map(shift));
    for i in 0..p.num_gens() as Gen {
        for j in 0..q.num_gens() as Gen {
            let a = FreeElement::gen(i);
            let b = FreeElement::gen(j + off);
            rels.push(a.mul(&b).sub(&b.mul(&a)));
        }
    }
    let gens = pn
        .into_iter()
        .zip(p.degrees.iter().copied())
        .chain(qn.into_iter().zip(q.degrees.iter().copied()))
        .collect();
    Presentation::new(format!("{} ⊗ {}", p.name, q.name), gens, rels)
}

/// Presentation with a single scalar evaluation check: all relations vanish
/// under an assignment of generator values.
pub fn evaluate(e: &FreeElement, values: &[Scalar]) -> Scalar {
    let mut total = Scalar::zero();
    for (w, c) in e.terms() {
        let mut t = c.clone();
        for &g in w.as_slice() {
            t = &t * &values[g as usize];
        }
        total = &total + &t;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> Presentation {
        let q = Scalar::param("q");
        let x = FreeElement::gen(0);
        let y = FreeElement::gen(1);
        Presentation::with_names("plane", vec!["x".into(), "y".into()], vec![y.mul(&x).sub(&x.mul(&y).scale(&q))])
    }

    #[test]
    fn plane_slice() {
        let p = plane();
        let s = p.ideal_slice(2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(p.quotient_dims(2).unwrap(), vec![1, 2, 3]);
        assert_eq!(p.quotient_dims_dense(2).unwrap(), vec![1, 2, 3]);
        assert_eq!(p.ideal_slice_dense(2).unwrap(), s);
    }

    #[test]
    fn no_relations_no_slice() {
        let p = Presentation::with_names("free", vec!["x".into()], vec![]);
        assert!(p.ideal_slice(3).unwrap().is_empty());
    }

    #[test]
    fn tensor_of_polynomial_rings() {
        let p = Presentation::with_names("kx", vec!["x".into()], vec![]);
        let q = Presentation::with_names("ky", vec!["y".into()], vec![]);
        let t = tensor_presentation(&p, &q);
        assert_eq!(t.num_gens(), 2);
        assert_eq!(t.relations().len(), 1);
        assert_eq!(t.quotient_dims(1).unwrap()[1], 2);
    }
}
