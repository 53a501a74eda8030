//! Free noncommutative algebra over `Scalar`.

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::scalar::Scalar;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub type Gen = u16;

/// A word in the generators. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn gen(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(s: &[Gen]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn as_slice(&self) -> &[Gen] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Linear combination of words; zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Word::gen(g), Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
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

    /// Word length of the largest term; `None` is the −∞ degree of zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len())
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn from_terms(terms: BTreeMap<Word, Scalar>) -> Self {
        FreeElement { terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, o: &FreeElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &o.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn add(&self, o: &FreeElement) -> FreeElement {
        let mut r = self.clone();
        r.add_assign_scaled(o, &Scalar::one());
        r
    }

    pub fn sub(&self, o: &FreeElement) -> FreeElement {
        let mut r = self.clone();
        r.add_assign_scaled(o, &Scalar::int(-1));
        r
    }

    pub fn neg(&self) -> FreeElement {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        if c.is_zero() {
            return Self::zero();
        }
        FreeElement { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    pub fn mul(&self, o: &FreeElement) -> FreeElement {
        let mut r = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                r.add_term(u.concat(v), a * b);
            }
        }
        r
    }

    /// `u · self · v` for words u, v.
    pub fn sandwich(&self, u: &Word, v: &Word) -> FreeElement {
        FreeElement { terms: self.terms.iter().map(|(w, c)| (u.concat(w).concat(v), c.clone())).collect() }
    }

    /// Apply a function to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> FreeElement {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// Render with generator names.
    pub fn display(&self, names: &[String]) -> String {
        render_terms(self.terms.iter().rev().map(|(w, c)| (word_text(w, names), c)))
    }
}

pub fn word_text(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.0.iter().map(|&g| names[g as usize].as_str()).collect::<Vec<_>>().join("*")
}

/// Render `Σ c·m` given rendered monomials.
pub fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (k, (m, c)) in terms.enumerate() {
        let cs = c.to_string();
        let (neg, body) = match cs.strip_prefix('-') {
            Some(rest) if c.as_rational().is_some() => (true, rest.to_string()),
            _ => (false, cs),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m == "1" {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{}*{}", body, m));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.terms.keys().flat_map(|w| w.0.iter().copied()).max().unwrap_or(0))
            .map(|g| format!("g{}", g))
            .collect();
        write!(f, "{}", self.display(&names))
    }
}

/// Rank of a family of free elements and a basis of their linear relations.
pub fn rank_and_kernel(vectors: &[FreeElement], degree_cap: usize) -> Result<(usize, Vec<Vec<Scalar>>)> {
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut cols: Vec<SparseVec> = Vec::new();
    for v in vectors {
        if v.degree().is_some_and(|d| d > degree_cap) {
            return Err(Error::Precondition(format!("vector of degree {:?} above cap {}", v.degree(), degree_cap)));
        }
        let mut col = SparseVec::new();
        for (w, c) in v.terms() {
            let n = index.len();
            let i = *index.entry(w.clone()).or_insert(n);
            col.insert(i, c.clone());
        }
        cols.push(col);
    }
    let kernel = linalg::sparse_kernel(&cols);
    Ok((vectors.len() - kernel.len(), kernel))
}

/// Number of words of total degree exactly `d` for the given generator degrees.
pub fn word_count(degrees: &[u32], d: u32) -> u128 {
    let mut counts = vec![0u128; d as usize + 1];
    counts[0] = 1;
    for k in 1..=d as usize {
        let mut s = 0u128;
        for &g in degrees {
            if g as usize <= k {
                s = s.saturating_add(counts[k - g as usize]);
            }
        }
        counts[k] = s;
    }
    counts[d as usize]
}
