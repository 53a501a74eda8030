//! Canonical maps of Galois objects and their inverses, cotensor products,
//! coinvariants, cleftness refutation and characters.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::families::ComoduleAlgebra;
use crate::free::{Gen, Word};
use crate::hopf::{Cogroupoid, MatrixComodule};
use crate::linalg::{sparse_kernel, SparseVec};
use crate::presentation::{evaluate, Presentation};
use crate::scalar::Scalar;
use crate::tensor::{Factor, Key, Space, Tensor};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Assigns column indices to tensor keys.
#[derive(Default)]
pub(crate) struct KeyIndex {
    map: HashMap<Key, usize>,
    keys: Vec<Key>,
}

impl KeyIndex {
    pub(crate) fn vector(&mut self, t: &Tensor) -> SparseVec {
        let mut v = SparseVec::new();
        for (k, c) in t.terms() {
            let n = self.keys.len();
            let i = *self.map.entry(k.clone()).or_insert_with(|| {
                n
            });
            if i == n {
                self.keys.push(k.clone());
            }
            v.insert(i, c.clone());
        }
        v
    }
}

/// Normal words of weight ≤ d, failing on a zero algebra.
fn normal_basis(p: &Presentation, cap: u32, d: u32) -> Result<Vec<Word>> {
    let e = p.engine(cap)?;
    if e.is_zero_algebra() {
        return Err(Error::NotConnected(p.name().to_string()));
    }
    Ok(e.normal_words(d).into_iter().flatten().collect())
}

/// Pairs of normal words with total weight ≤ d.
fn tensor_basis(a: &[Word], b: &[Word], d: usize) -> Vec<Key> {
    let mut out = Vec::new();
    for u in a {
        for v in b {
            if u.len() + v.len() <= d {
                out.push(vec![u.clone(), v.clone()]);
            }
        }
    }
    out
}

fn first_mismatch(space: &Space, basis: &[Key], f: impl Fn(&Tensor) -> Result<Tensor>) -> Result<(usize, Option<String>)> {
    for k in basis {
        let t = Tensor::pure(k.clone(), Scalar::one());
        
        let img = space.normalize(&f(&t)?);
        let diff = img.sub(&t);
        if !diff.is_zero() {
            return Ok((basis.len(), Some(format!("on {}: residue {}", space.display(&t), space.display(&diff)))));
        }
    }
    Ok((basis.len(), None))
}

/// The canonical maps `κ` and their inverses `η` built from the structure
/// maps; both composites are checked on the tensor-filtration basis.
pub fn verify_galois(c: &Cogroupoid, x: usize, y: usize, side: Side, d: u32) -> Result<Certificate> {
    let cap = 2 * d.max(1);
    let axy = c.hom(x, y);
    let exact = c.is_exact(d.max(1)) && axy.is_complete_at(cap);
    let mut cert = Certificate::new(
        match side {
            Side::Left => "galois left",
            Side::Right => "galois right",
        },
        vec![c.name.clone(), c.objects[x].clone(), c.objects[y].clone()],
        Some(d),
        exact,
    );
    let bxy = normal_basis(axy, cap, d)?;
    // C(x,y) absorbs products of two degree-d elements; other factors stay at d
    let f = |p: (usize, usize)| Factor::algebra(c.hom(p.0, p.1), if p == (x, y) { cap } else { d.max(1) });
    let sp = |ps: &[(usize, usize)]| -> Result<Space> { Ok(Space(ps.iter().map(|&p| f(p)).collect::<Result<_>>()?)) };
    let sq = Space(vec![f((x, y))?, f((x, y))?]);
    let d_us = d as usize;
    match side {
        Side::Left => {
            // κ_l(a ⊗ b) = a_(1) ⊗ a_(2) b ∈ C(x,x) ⊗ C(x,y)
            let dx = c.delta(x, y, x);
            let target = Space(vec![f((x, x))?, f((x, y))?]);
            let kappa = |t: &Tensor| -> Result<Tensor> {
                let s = dx.apply_at(t, 0, &sp(&[(x, x), (x, y)])?)?.merge(1);
                Ok(target.normalize(&s))
            };
            // η_l(u ⊗ v) = u_(1) ⊗ S_{y,x}(u_(2)) v
            let dy = c.delta(x, x, y);
            let s = c.antipode(y, x);
            let eta = |t: &Tensor| -> Result<Tensor> {
                let t = dy.apply_at(t, 0, &sp(&[(x, y), (y, x)])?)?;
                let t = s.apply_at(&t, 1, &sp(&[(x, y)])?)?.merge(1);
                Ok(sq.normalize(&t))
            };
            let (n, r) = first_mismatch(&sq, &tensor_basis(&bxy, &bxy, d_us), |t| eta(&kappa(t)?))?;
            cert.record(format!("η_l∘κ_l = id on {} basis tensors of C⊗C", n), Some(d), r);
            let bxx = normal_basis(c.hom(x, x), d.max(1), d)?;
            let (n, r) = first_mismatch(&target, &tensor_basis(&bxx, &bxy, d_us), |t| kappa(&eta(t)?))?;
            cert.record(format!("κ_l∘η_l = id on {} basis tensors", n), Some(d), r);
        }
        Side::Right => {
            // κ_r(a ⊗ b) = a b_(1) ⊗ b_(2) ∈ C(x,y) ⊗ C(y,y)
            let dy = c.delta(x, y, y);
            let target = Space(vec![f((x, y))?, f((y, y))?]);
            let kappa = |t: &Tensor| -> Result<Tensor> {
                let s = dy.apply_at(t, 1, &sp(&[(x, y), (y, y)])?)?.merge(0);
                Ok(target.normalize(&s))
            };
            // η_r(u ⊗ h) = u S_{y,x}(h_(1)) ⊗ h_(2)
            let dx = c.delta(y, y, x);
            let s = c.antipode(y, x);
            let eta = |t: &Tensor| -> Result<Tensor> {
                let t = dx.apply_at(t, 1, &sp(&[(y, x), (x, y)])?)?;
                let t = s.apply_at(&t, 1, &sp(&[(x, y)])?)?.merge(0);
                Ok(sq.normalize(&t))
            };
            let (n, r) = first_mismatch(&sq, &tensor_basis(&bxy, &bxy, d_us), |t| eta(&kappa(t)?))?;
            cert.record(format!("η_r∘κ_r = id on {} basis tensors of C⊗C", n), Some(d), r);
            let byy = normal_basis(c.hom(y, y), d.max(1), d)?;
            let (n, r) = first_mismatch(&target, &tensor_basis(&bxy, &byy, d_us), |t| kappa(&eta(t)?))?;
            cert.record(format!("κ_r∘η_r = id on {} basis tensors", n), Some(d), r);
        }
    }
    if exact {
        cert.note("reduction systems are complete: the identities hold in every degree");
    }
    Ok(cert)
}

/// Truncated cotensor product `V □ C(x,y)` inside `V ⊗ C(x,y)_{≤k}`.
#[derive(Clone, Debug)]
pub struct CotensorSpace {
    /// `dims[k]` is the kernel dimension inside `V ⊗ C(x,y)_{≤k}`.
    pub dims: Vec<usize>,
    /// Reduced basis at the top level; keys are `[v_i, word]`.
    pub basis: Vec<Tensor>,
    pub stabilized: bool,
    pub zero_algebra: bool,
    pub space: Space,
}

impl CotensorSpace {
    pub fn dim(&self) -> usize {
        *self.dims.last().unwrap_or(&0)
    }

    /// For each basis vector, the key at which it has coefficient 1 and all
    /// others have 0.
    pub fn pivots(&self) -> Vec<Key> {
        let mut out = Vec::new();
        for (i, b) in self.basis.iter().enumerate() {
            let k = b
                .terms()
                .map(|(k, _)| k)
                .find(|k| b.coeff(k).is_one() && self.basis.iter().enumerate().all(|(j, o)| j == i || o.coeff(k).is_zero()))
                .expect("reduced basis has pivots")
                .clone();
            out.push(k);
        }
        out
    }

    /// Coordinates of a cotensor element in `basis` (read off at pivots).
    pub fn coordinates(&self, t: &Tensor) -> Vec<Scalar> {
        self.pivots().iter().map(|k| t.coeff(k)).collect()
    }

    pub fn contains(&self, t: &Tensor) -> bool {
        let coords = self.coordinates(t);
        let mut rebuilt = Tensor::zero();
        for (b, c) in self.basis.iter().zip(&coords) {
            rebuilt.add_scaled(b, c);
        }
        rebuilt == *t
    }
}

pub(crate) fn vector_factor(n: usize) -> Factor {
    Factor::vector((0..n).map(|i| format!("v{}", i + 1)).collect())
}

/// Coaction of a matrix comodule on a basis vector, as a tensor in `V ⊗ H`.
pub(crate) fn matrix_coaction(v: &MatrixComodule, i: usize) -> Tensor {
    let mut out = Tensor::zero();
    for j in 0..v.dim {
        out = out.add(&Tensor::pure(vec![Word::gen(j as Gen)], Scalar::one()).otimes(&Tensor::from_elem(v.coeff(j, i))));
    }
    out
}

/// Kernel of `α ⊗ 1 − 1 ⊗ Δ^x_{x,y}` on `V ⊗ C(x,y)`, where `V` has the
/// given basis words (with their filtration degrees) in factor `vfac` and
/// `coact` is its coaction into `V ⊗ C(x,x)`. Level `k` uses pairs whose
/// degrees are both at most `k`.
pub(crate) fn cotensor_kernel(
    vfac: Factor,
    vbasis: &[(Word, usize)],
    coact: impl Fn(&Word) -> Result<Tensor>,
    c: &Cogroupoid,
    x: usize,
    y: usize,
    d: u32,
) -> Result<CotensorSpace> {
    let cap = d.max(1);
    let axy = c.hom(x, y);
    let space = Space(vec![vfac.clone(), Factor::algebra(axy, cap)?]);
    let eng = axy.engine(cap)?;
    if eng.is_zero_algebra() {
        return Ok(CotensorSpace { dims: vec![0; d as usize + 1], basis: Vec::new(), stabilized: true, zero_algebra: true, space });
    }
    let target = Space(vec![vfac, Factor::algebra(c.hom(x, x), cap)?, Factor::algebra(axy, cap)?]);
    let lam = c.delta(x, y, x);
    let lam_space = Space(target.0[1..].to_vec());
    let words: Vec<Word> = eng.normal_words(d).into_iter().flatten().collect();
    let mut domain: Vec<(usize, Word, Word)> = Vec::new();
    for w in &words {
        for (u, du) in vbasis {
            if *du <= d as usize {
                domain.push((w.len().max(*du), u.clone(), w.clone()));
            }
        }
    }
    domain.sort_by_key(|e| e.0);
    let mut coact_cache: HashMap<Word, Tensor> = HashMap::new();
    let mut split_cache: HashMap<Word, Tensor> = HashMap::new();
    let mut idx = KeyIndex::default();
    let mut images = Vec::with_capacity(domain.len());
    for (_, u, w) in &domain {
        if !coact_cache.contains_key(u) {
            coact_cache.insert(u.clone(), coact(u)?);
        }
        let split = split_cache.entry(w.clone()).or_insert_with(|| lam.apply_word(w, &lam_space));
        let mut defect = coact_cache[u].otimes(&Tensor::pure(vec![w.clone()], Scalar::one()));
        defect.add_scaled(&Tensor::pure(vec![u.clone()], Scalar::one()).otimes(split), &Scalar::int(-1));
        images.push(idx.vector(&target.normalize(&defect)));
    }
    let mut dims = Vec::new();
    let mut basis = Vec::new();
    for k in 0..=d as usize {
        let n = domain.iter().filter(|e| e.0 <= k).count();
        let ker = sparse_kernel(&images[..n]);
        dims.push(ker.len());
        if k == d as usize {
            for vec in ker {
                let mut t = Tensor::zero();
                for (i, cc) in vec.iter().enumerate() {
                    t.add_term(vec![domain[i].1.clone(), domain[i].2.clone()], cc.clone());
                }
                basis.push(t);
            }
        }
    }
    // a complete system with no normal words above d spans everything
    let exhausted = axy.is_complete_at(d + 1) && axy.engine(d + 1)?.normal_words(d + 1).last().is_some_and(|v| v.is_empty());
    let stabilized = exhausted || (d >= 1 && dims[d as usize] == dims[d as usize - 1]);
    Ok(CotensorSpace { dims, basis, stabilized, zero_algebra: false, space })
}

pub fn cotensor(v: &MatrixComodule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<CotensorSpace> {
    let vbasis: Vec<(Word, usize)> = (0..v.dim).map(|i| (Word::gen(i as Gen), 0)).collect();
    cotensor_kernel(vector_factor(v.dim), &vbasis, |u| Ok(matrix_coaction(v, u.as_slice()[0] as usize)), c, x, y, d)
}

/// Coinvariants `{b ∈ B_{≤d} : β(b) = b ⊗ 1}`.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    /// Kernel dimension inside `B_{≤k}`.
    pub cumulative: Vec<usize>,
    /// Successive differences: dimensions of the graded pieces.
    pub by_degree: Vec<usize>,
    pub basis: Vec<Tensor>,
}

pub fn coinvariants(b: &ComoduleAlgebra, d: u32) -> Result<Coinvariants> {
    let cap = d.max(1);
    let alg = &b.algebra;
    let words: Vec<Word> = alg.engine(cap)?.normal_words(d).into_iter().flatten().collect();
    let space = b.coaction.space(cap)?;
    let mut idx = KeyIndex::default();
    let mut images = Vec::new();
    for w in &words {
        let beta = b.coaction.apply_word(w, &space);
        let diff = beta.sub(&Tensor::pure(vec![w.clone(), Word::empty()], Scalar::one()));
        images.push(idx.vector(&space.normalize(&diff)));
    }
    let mut cumulative = Vec::new();
    let mut basis = Vec::new();
    for k in 0..=d as usize {
        let n = words.iter().filter(|w| w.len() <= k).count();
        let ker = sparse_kernel(&images[..n]);
        cumulative.push(ker.len());
        if k == d as usize {
            for vec in ker {
                let mut t = Tensor::zero();
                for (i, cc) in vec.iter().enumerate() {
                    t.add_term(vec![words[i].clone()], cc.clone());
                }
                basis.push(t);
            }
        }
    }
    let by_degree = cumulative.iter().enumerate().map(|(k, &c)| if k == 0 { c } else { c - cumulative[k - 1] }).collect();
    Ok(Coinvariants { cumulative, by_degree, basis })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cleftness {
    NonCleft,
    Inconclusive,
}

/// A cleft object preserves comodule dimensions; a stabilized cotensor of
/// different dimension refutes cleftness.
pub fn cleftness_witness(v: &MatrixComodule, cot: &CotensorSpace, d: u32) -> Result<Cleftness> {
    if !cot.stabilized {
        return Err(Error::NotStabilized(d));
    }
    Ok(if cot.dim() != v.dim { Cleftness::NonCleft } else { Cleftness::Inconclusive })
}

/// Relations vanish under a generator assignment: a character `A → k`.
pub fn character_check(a: &Presentation, assignment: &[Scalar]) -> Result<Certificate> {
    if assignment.len() != a.num_gens() {
        return Err(Error::Precondition(format!("{} values for {} generators", assignment.len(), a.num_gens())));
    }
    let mut cert = Certificate::new("character", vec![a.name().to_string()], None, true);
    for (i, r) in a.relations().iter().enumerate() {
        let v = evaluate(r, assignment);
        let residue = (!v.is_zero()).then(|| v.to_string());
        cert.record(format!("relation {}: {}", i, a.display(r)), None, residue);
    }
    if cert.passed {
        cert.note("an algebra map to k exists: the Galois object is trivial");
    }
    Ok(cert)
}

/// Character of `B(E,F)` from a candidate matrix `X` (`a_ij ↦ X_ij`).
pub fn matrix_character(a: &Arc<Presentation>, x: &crate::ExactMatrix) -> Result<Certificate> {
    let vals: Vec<Scalar> = (0..x.rows()).flat_map(|i| (0..x.cols()).map(move |j| (i, j))).map(|(i, j)| x[(i, j)].clone()).collect();
    character_check(a, &vals)
}
