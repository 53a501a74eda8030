//! Word rewriting: degree-truncated completion of a relation set and
//! normal forms modulo the resulting reduction system.
//!
//! The order on words is weighted degree, then length, then lexicographic in
//! generator index. Every rule `lhs -> rhs` has all `rhs` words strictly
//! smaller than `lhs`, so reductions never raise the degree. Completion
//! resolves every overlap of weight at most `cap`; on the span of words of
//! weight at most `cap` the reducer is then the projection modulo
//! `span{u·r·v : weight ≤ cap}`.

use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen, Word};
use crate::scalar::Scalar;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::sync::RwLock;

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: FreeElement,
}

type Key = (u32, Word);

pub struct RewriteSystem {
    weights: Vec<u32>,
    rules: Vec<Rule>,
    index: HashMap<Vec<Gen>, usize>,
    max_lhs: usize,
    cap: u32,
    complete: bool,
    /// `1` lies in the ideal: the quotient is zero.
    zero: bool,
    memo: RwLock<HashMap<Word, FreeElement>>,
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("rules", &self.rules.len())
            .field("cap", &self.cap)
            .field("complete", &self.complete)
            .finish()
    }
}

fn weight_of(weights: &[u32], w: &Word) -> u32 {
    w.0.iter().map(|&g| weights[g as usize]).sum()
}

struct Builder {
    weights: Vec<u32>,
    rules: Vec<Option<Rule>>,
    index: HashMap<Vec<Gen>, usize>,
    max_lhs: usize,
}

impl Builder {
    fn key(&self, w: Word) -> Key {
        (weight_of(&self.weights, &w), w)
    }

    fn find(&self, w: &[Gen]) -> Option<(usize, usize)> {
        for s in 0..w.len() {
            for l in 1..=self.max_lhs.min(w.len() - s) {
                if let Some(&r) = self.index.get(&w[s..s + l]) {
                    return Some((r, s));
                }
            }
        }
        None
    }

    fn reduce(&self, p: &FreeElement) -> FreeElement {
        let mut work: BTreeMap<Key, Scalar> = p.terms().map(|(w, c)| (self.key(w.clone()), c.clone())).collect();
        let mut out = FreeElement::zero();
        while let Some(((_, w), c)) = work.pop_last() {
            match self.find(&w.0) {
                None => out.add_term(w, c),
                Some((r, s)) => {
                    let rule = self.rules[r].as_ref().unwrap();
                    let u = Word::from_slice(&w.0[..s]);
                    let v = Word::from_slice(&w.0[s + rule.lhs.len()..]);
                    for (t, d) in rule.rhs.terms() {
                        let k = self.key(u.concat(t).concat(&v));
                        let e = work.entry(k.clone()).or_insert_with(Scalar::zero);
                        *e = &*e + &(&c * d);
                        if e.is_zero() {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }

    /// Largest word under the weighted order.
    fn leading(&self, p: &FreeElement) -> (Word, Scalar) {
        p.terms()
            .map(|(w, c)| (self.key(w.clone()), c.clone()))
            .max_by(|a, b| a.0.cmp(&b.0))
            .map(|(k, c)| (k.1, c))
            .unwrap()
    }
}

/// Overlaps where a proper suffix of `a` equals a proper prefix of `b`.
fn overlaps(a: &Word, b: &Word) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 1..a.len().min(b.len()) {
        if a.0[a.len() - k..] == b.0[..k] {
            out.push(k);
        }
    }
    out
}

fn contains(hay: &[Gen], needle: &[Gen]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

impl RewriteSystem {
    /// Complete `relations` (each meaning `r = 0`) up to weight `cap`.
    pub fn complete(weights: &[u32], relations: &[FreeElement], cap: u32) -> RewriteSystem {
        let mut b = Builder { weights: weights.to_vec(), rules: Vec::new(), index: HashMap::new(), max_lhs: 0 };
        let mut pending: Vec<FreeElement> = relations.iter().rev().cloned().collect();
        let mut pairs: BinaryHeap<Reverse<(u32, usize, usize, usize)>> = BinaryHeap::new();
        let mut complete = true;
        loop {
            while let Some(p) = pending.pop() {
                let r = b.reduce(&p);
                if r.is_zero() {
                    continue;
                }
                let (lw, lc) = b.leading(&r);
                if lw.is_empty() {
                    let mut z = Self::assemble(weights, Vec::new(), cap, true);
                    z.zero = true;
                    return z;
                }
                let monic = r.scale(&lc.inv().unwrap());
                let mut rhs = FreeElement::word(lw.clone()).sub(&monic);
                rhs = FreeElement::from_terms(rhs.into_terms());
                // rules whose lhs contains the new lhs are re-queued
                let doomed: Vec<usize> = b
                    .index
                    .iter()
                    .filter(|(l, _)| contains(l, &lw.0))
                    .map(|(_, &i)| i)
                    .collect();
                for i in doomed {
                    let old = b.rules[i].take().unwrap();
                    b.index.remove(old.lhs.as_slice());
                    pending.push(FreeElement::word(old.lhs).sub(&old.rhs));
                }
                let id = b.rules.len();
                b.max_lhs = b.max_lhs.max(lw.len());
                b.index.insert(lw.0.to_vec(), id);
                b.rules.push(Some(Rule { lhs: lw.clone(), rhs }));
                let alive: Vec<usize> = b.index.values().copied().collect();
                for j in alive {
                    let other = b.rules[j].as_ref().unwrap().lhs.clone();
                    let mut cands = Vec::new();
                    for k in overlaps(&lw, &other) {
                        cands.push((id, j, k));
                    }
                    if j != id {
                        for k in overlaps(&other, &lw) {
                            cands.push((j, id, k));
                        }
                    }
                    for (x, y, k) in cands {
                        let lx = &b.rules[x].as_ref().unwrap().lhs;
                        let ly = &b.rules[y].as_ref().unwrap().lhs;
                        let wt = weight_of(weights, lx) + weight_of(weights, &Word::from_slice(&ly.0[k..]));
                        if wt <= cap {
                            pairs.push(Reverse((wt, x, y, k)));
                        } else {
                            complete = false;
                        }
                    }
                }
            }
            let Some(Reverse((_, x, y, k))) = pairs.pop() else { break };
            let (Some(rx), Some(ry)) = (b.rules[x].as_ref(), b.rules[y].as_ref()) else { continue };
            let u = Word::from_slice(&rx.lhs.0[..rx.lhs.len() - k]);
            let v = Word::from_slice(&ry.lhs.0[k..]);
            let s = rx.rhs.sandwich(&Word::empty(), &v).sub(&ry.rhs.sandwich(&u, &Word::empty()));
            let r = b.reduce(&s);
            if !r.is_zero() {
                pending.push(r);
            }
        }
        // interreduce right-hand sides
        let live: Vec<Rule> = b.rules.iter().flatten().cloned().collect();
        let mut rules = Vec::with_capacity(live.len());
        for r in live {
            let rhs = b.reduce(&r.rhs);
            rules.push(Rule { lhs: r.lhs, rhs });
        }
        rules.sort_by(|a, b2| a.lhs.cmp(&b2.lhs));
        Self::assemble(weights, rules, cap, complete)
    }

    fn assemble(weights: &[u32], rules: Vec<Rule>, cap: u32, complete: bool) -> RewriteSystem {
        let index = rules.iter().enumerate().map(|(i, r)| (r.lhs.0.to_vec(), i)).collect();
        let max_lhs = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        RewriteSystem { weights: weights.to_vec(), rules, index, max_lhs, cap, complete, zero: false, memo: RwLock::new(HashMap::new()) }
    }

    /// A user-supplied system. Each `lhs` must exceed every `rhs` word.
    pub fn from_rules(weights: &[u32], rules: Vec<Rule>) -> Result<RewriteSystem> {
        for r in &rules {
            let wl = weight_of(weights, &r.lhs);
            for (t, _) in r.rhs.terms() {
                if (weight_of(weights, t), t) >= (wl, &r.lhs) {
                    return Err(Error::NotConfluent(format!("rule {:?} is not decreasing", r.lhs)));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for r in &rules {
            if !seen.insert(r.lhs.clone()) {
                return Err(Error::NotConfluent(format!("duplicate left side {:?}", r.lhs)));
            }
        }
        Ok(Self::assemble(weights, rules, u32::MAX, true))
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// True when no overlap was skipped: the system is confluent in every degree.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Whether normal forms of weight-`d` elements are exact quotient representatives.
    pub fn exact_at(&self, d: u32) -> bool {
        self.complete || d <= self.cap
    }

    pub fn weight(&self, w: &Word) -> u32 {
        weight_of(&self.weights, w)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    fn find(&self, w: &[Gen]) -> Option<(usize, usize)> {
        for s in 0..w.len() {
            for l in 1..=self.max_lhs.min(w.len() - s) {
                if let Some(&r) = self.index.get(&w[s..s + l]) {
                    return Some((r, s));
                }
            }
        }
        None
    }

    /// The quotient is the zero algebra.
    pub fn is_zero_algebra(&self) -> bool {
        self.zero
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        !self.zero && self.find(&w.0).is_none()
    }

    /// One rewriting step at a given rule occurrence.
    fn step(&self, w: &Word, r: usize, s: usize) -> FreeElement {
        let rule = &self.rules[r];
        let u = Word::from_slice(&w.0[..s]);
        let v = Word::from_slice(&w.0[s + rule.lhs.len()..]);
        rule.rhs.sandwich(&u, &v)
    }

    pub fn reduce(&self, p: &FreeElement) -> FreeElement {
        if self.zero {
            return FreeElement::zero();
        }
        let mut work: BTreeMap<Key, Scalar> = p.terms().map(|(w, c)| ((self.weight(w), w.clone()), c.clone())).collect();
        let mut out = FreeElement::zero();
        let memo = self.memo.read().unwrap();
        while let Some(((_, w), c)) = work.pop_last() {
            if let Some(nf) = memo.get(&w) {
                out.add_assign_scaled(nf, &c);
                continue;
            }
            match self.find(&w.0) {
                None => out.add_term(w, c),
                Some((r, s)) => {
                    for (t, d) in self.step(&w, r, s).terms() {
                        let k = (self.weight(t), t.clone());
                        let e = work.entry(k.clone()).or_insert_with(Scalar::zero);
                        *e = &*e + &(&c * d);
                        if e.is_zero() {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }

    /// Normal form of a single word (memoized).
    pub fn reduce_word(&self, w: &Word) -> FreeElement {
        if let Some(nf) = self.memo.read().unwrap().get(w) {
            return nf.clone();
        }
        let nf = self.reduce(&FreeElement::word(w.clone()));
        self.memo.write().unwrap().insert(w.clone(), nf.clone());
        nf
    }

    /// Irreducible words of weight ≤ d, grouped by weight.
    pub fn normal_words(&self, d: u32) -> Vec<Vec<Word>> {
        let mut by: Vec<Vec<Word>> = vec![Vec::new(); d as usize + 1];
        if self.zero {
            return by;
        }
        let mut stack = vec![Word::empty()];
        while let Some(w) = stack.pop() {
            let wt = self.weight(&w);
            by[wt as usize].push(w.clone());
            for g in 0..self.weights.len() as Gen {
                let nw = wt + self.weights[g as usize];
                if nw > d {
                    continue;
                }
                let mut x = w.clone();
                x.0.push(g);
                let n = x.len();
                let reducible = (1..=self.max_lhs.min(n)).any(|l| self.index.contains_key(&x.0[n - l..]));
                if !reducible {
                    stack.push(x);
                }
            }
        }
        for v in by.iter_mut() {
            v.sort();
        }
        by
    }

    /// Diamond lemma: every overlap and inclusion ambiguity resolves.
    pub fn check_confluence(&self) -> Result<()> {
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                for k in overlaps(&a.lhs, &b.lhs) {
                    let u = Word::from_slice(&a.lhs.0[..a.lhs.len() - k]);
                    let v = Word::from_slice(&b.lhs.0[k..]);
                    let left = self.reduce(&a.rhs.sandwich(&Word::empty(), &v));
                    let right = self.reduce(&b.rhs.sandwich(&u, &Word::empty()));
                    if left != right {
                        return Err(Error::NotConfluent(format!(
                            "overlap of rules {} and {} on {:?}: {:?} vs {:?}",
                            i,
                            j,
                            a.lhs.concat(&v),
                            left,
                            right
                        )));
                    }
                }
                if i != j && b.lhs.len() < a.lhs.len() && contains(&a.lhs.0, &b.lhs.0) {
                    let s = a.lhs.0.windows(b.lhs.len()).position(|x| x == b.lhs.as_slice()).unwrap();
                    let left = self.reduce(&a.rhs);
                    let right = self.reduce(&self.step(&a.lhs, j, s));
                    if left != right {
                        return Err(Error::NotConfluent(format!(
                            "inclusion of rule {} in rule {}: {:?} vs {:?}",
                            j, i, left, right
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> FreeElement {
        FreeElement::gen(0)
    }
    fn y() -> FreeElement {
        FreeElement::gen(1)
    }

    #[test]
    fn quantum_plane_is_complete() {
        let q = Scalar::param("q");
        let rel = y().mul(&x()).sub(&x().mul(&y()).scale(&q));
        let rs = RewriteSystem::complete(&[1, 1], &[rel], 5);
        assert!(rs.is_complete());
        let counts: Vec<usize> = rs.normal_words(4).iter().map(|v| v.len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 4, 5]);
        let nf = rs.reduce_word(&Word::from_slice(&[1, 1, 0]));
        assert_eq!(nf, FreeElement::word(Word::from_slice(&[0, 1, 1])).scale(&(&q * &q)));
    }

    #[test]
    fn commutative_three_variables() {
        let g = |i| FreeElement::gen(i);
        let rels = vec![
            g(1).mul(&g(0)).sub(&g(0).mul(&g(1))),
            g(2).mul(&g(0)).sub(&g(0).mul(&g(2))),
            g(2).mul(&g(1)).sub(&g(1).mul(&g(2))),
        ];
        let rs = RewriteSystem::complete(&[1, 1, 1], &rels, 4);
        let counts: Vec<usize> = rs.normal_words(3).iter().map(|v| v.len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 10]);
    }
}
