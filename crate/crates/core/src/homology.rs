//! Length-two free bimodule resolutions of the quadric algebras `A_{α,t}`,
//! their exactness and equivariance, transport along `B(E,F)`, and
//! Hochschild homology with coefficients in a character.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::families::{b_cogroupoid, quadric_algebra, ComoduleAlgebra};
use crate::free::{Gen, Word};
use crate::hopf::residue;
use crate::linalg::{sparse_rank, SparseVec};
use crate::matrix::ExactMatrix;
use crate::morphism::{check_morphism, AlgebraMorphism};
use crate::presentation::{evaluate, Presentation};
use crate::scalar::Scalar;
use crate::tensor::{Factor, Key, Space, Tensor};
use std::collections::HashMap;
use std::sync::Arc;

/// A free bimodule `A ⊗ V ⊗ A` with a basis of `V` and the filtration
/// weight of its generators `1 ⊗ v ⊗ 1`.
#[derive(Clone, Debug)]
pub struct FreeTerm {
    pub basis: Vec<String>,
    pub weight: u32,
}

/// `0 → A⊗A → A⊗V⊗A → A⊗A → A → 0`. `terms[k]` is `P_k`; `differentials[k]`
/// holds the values of `d_k: P_k → P_{k-1}` on `1 ⊗ v ⊗ 1` for `k = 1, 2`
/// (keys `[u, v, w]`). `d_0` is multiplication.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    pub algebra: Arc<Presentation>,
    pub alpha: ExactMatrix,
    pub t: Scalar,
    pub terms: Vec<FreeTerm>,
    pub differentials: Vec<Vec<Tensor>>,
}

fn key3(u: Word, b: usize, w: Word) -> Key {
    vec![u, Word::gen(b as Gen), w]
}

/// Koszul-type complex of `A_{α,t}`: `d_1(1⊗x_i⊗1) = x_i⊗1 − 1⊗x_i` and
/// `γ(1⊗1) = Σ α_ij (x_i⊗x_j⊗1 + 1⊗x_i⊗x_j)`.
pub fn koszul_complex(alpha: &ExactMatrix, t: &Scalar, name: &str) -> Result<EquivariantComplex> {
    if !alpha.is_square() || !alpha.is_invertible() {
        return Err(Error::SingularMatrix(format!("coefficient matrix {} is not invertible", alpha)));
    }
    let algebra = quadric_algebra(alpha, t, name)?;
    let n = alpha.rows();
    let one = Word::empty;
    let x = |i: usize| Word::gen(i as Gen);
    let mut d1 = Vec::new();
    for i in 0..n {
        let mut v = Tensor::zero();
        v.add_term(key3(x(i), 0, one()), Scalar::one());
        v.add_term(key3(one(), 0, x(i)), -Scalar::one());
        d1.push(v);
    }
    let mut gamma = Tensor::zero();
    for i in 0..n {
        for j in 0..n {
            let a = &alpha[(i, j)];
            if !a.is_zero() {
                gamma.add_term(key3(x(i), j, one()), a.clone());
                gamma.add_term(key3(one(), i, x(j)), a.clone());
            }
        }
    }
    let vnames = algebra.names().iter().map(|s| format!("v{}", &s[1..])).collect();
    Ok(EquivariantComplex {
        algebra,
        alpha: alpha.clone(),
        t: t.clone(),
        terms: vec![
            FreeTerm { basis: vec!["1".into()], weight: 0 },
            FreeTerm { basis: vnames, weight: 1 },
            FreeTerm { basis: vec!["1".into()], weight: 2 },
        ],
        differentials: vec![Vec::new(), d1, vec![gamma]],
    })
}

impl EquivariantComplex {
    /// Length of the resolution: `P_m = 0` for `m` above it.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    fn space(&self, k: usize, cap: u32) -> Result<Space> {
        let a = Factor::algebra(&self.algebra, cap)?;
        Ok(Space(vec![a.clone(), Factor::vector(self.terms[k].basis.clone()), a]))
    }

    fn a_space(&self, cap: u32) -> Result<Space> {
        Ok(Space(vec![Factor::algebra(&self.algebra, cap)?]))
    }

    /// `d_k(u ⊗ v_b ⊗ w)`, unnormalized; for `k = 0` a one-factor tensor.
    fn apply_key(&self, k: usize, key: &Key) -> Tensor {
        if k == 0 {
            return Tensor::pure(vec![key[0].concat(&key[2])], Scalar::one());
        }
        let b = key[1].as_slice()[0] as usize;
        let mut out = Tensor::zero();
        for (vk, c) in self.differentials[k][b].terms() {
            out.add_term(vec![key[0].concat(&vk[0]), vk[1].clone(), vk[2].concat(&key[2])], c.clone());
        }
        out
    }

    fn apply(&self, k: usize, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (key, c) in t.terms() {
            out.add_scaled(&self.apply_key(k, key), c);
        }
        out
    }

    /// Keys `u ⊗ v ⊗ w` of `P_k` of filtration weight ≤ `level`.
    fn level_basis(&self, k: usize, level: u32) -> Result<Vec<Key>> {
        let wt = self.terms[k].weight;
        if wt > level {
            return Ok(Vec::new());
        }
        let words = self.algebra.engine(level)?.normal_words(level - wt);
        let flat: Vec<&Word> = words.iter().flatten().collect();
        let mut out = Vec::new();
        for u in &flat {
            for w in &flat {
                if self.algebra.weight(u) + self.algebra.weight(w) + wt <= level {
                    for b in 0..self.terms[k].basis.len() {
                        out.push(key3((*u).clone(), b, (*w).clone()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `d_{k-1} ∘ d_k = 0` on the generators `1 ⊗ v ⊗ 1`; both maps are
/// bimodule maps, so this is the whole statement.
pub fn check_dd(k: &EquivariantComplex, d: u32) -> Result<Certificate> {
    let cap = d.max(2);
    let exact = k.algebra.is_complete_at(cap);
    let mut cert = Certificate::new("d∘d = 0", vec![k.algebra.name().to_string()], Some(cap), exact);
    let p0 = k.space(0, cap)?;
    for (b, g) in k.differentials[2].iter().enumerate() {
        let dd = p0.normalize(&k.apply(1, g));
        cert.record(format!("d_1 d_2 (1⊗{}⊗1) = 0", k.terms[2].basis[b]), None, (!dd.is_zero()).then(|| p0.display(&dd)));
    }
    let a = k.a_space(cap)?;
    for (b, g) in k.differentials[1].iter().enumerate() {
        let dd = a.normalize(&k.apply(0, g));
        cert.record(format!("d_0 d_1 (1⊗{}⊗1) = 0", k.terms[1].basis[b]), None, (!dd.is_zero()).then(|| a.display(&dd)));
    }
    Ok(cert)
}

/// Dimensions and ranks on the filtration piece of weight ≤ `level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRanks {
    pub level: u32,
    /// `[A, P_0, P_1, P_2]`.
    pub dims: [usize; 4],
    /// `[d_0, d_1, d_2]`.
    pub ranks: [usize; 3],
    /// Homology at `[A, P_0, P_1, P_2]`.
    pub homology: [usize; 4],
}

#[derive(Clone, Debug)]
pub struct Exactness {
    pub levels: Vec<LevelRanks>,
    pub certificate: Certificate,
}

fn rank_of(images: &[Tensor]) -> usize {
    let mut index: HashMap<&Key, usize> = HashMap::new();
    let mut rows: Vec<SparseVec> = Vec::with_capacity(images.len());
    for t in images {
        let mut row = SparseVec::new();
        for (key, c) in t.terms() {
            let next = index.len();
            row.insert(*index.entry(key).or_insert(next), c.clone());
        }
        rows.push(row);
    }
    sparse_rank(&rows)
}

/// Exact ranks of the differentials on each filtration piece `F_L`, `L ≤ d`.
pub fn check_exactness(k: &EquivariantComplex, d: u32) -> Result<Exactness> {
    k.algebra.check_word_cap(d)?;
    let exact = k.algebra.is_complete_at(d);
    let mut cert = Certificate::new("exactness", vec![k.algebra.name().to_string(), format!("t = {}", k.t)], Some(d), exact);
    let a = k.a_space(d)?;
    let mut levels = Vec::new();
    for level in 0..=d {
        let dim_a = k.algebra.engine(d)?.normal_words(level).iter().map(|v| v.len()).sum::<usize>();
        let mut dims = [dim_a, 0, 0, 0];
        let mut ranks = [0usize; 3];
        for p in 0..=2 {
            let basis = k.level_basis(p, level)?;
            dims[p + 1] = basis.len();
            let target = if p == 0 { a.clone() } else { k.space(p - 1, d)? };
            let images: Vec<Tensor> = basis.iter().map(|key| target.normalize(&k.apply_key(p, key))).collect();
            ranks[p] = rank_of(&images);
        }
        let homology = [dims[0] - ranks[0], dims[1] - ranks[0] - ranks[1], dims[2] - ranks[1] - ranks[2], dims[3] - ranks[2]];
        for (pos, name) in ["A", "P_0", "P_1", "P_2"].iter().enumerate() {
            let h = homology[pos];
            cert.record(format!("homology at {} on F_{}", name, level), Some(level), (h != 0).then(|| format!("dimension {}", h)));
        }
        let euler = dims[0] as i64 - dims[1] as i64 + dims[2] as i64 - dims[3] as i64;
        cert.record(format!("Euler characteristic of F_{}", level), Some(level), (euler != 0).then(|| euler.to_string()));
        cert.note(format!("F_{}: dims {:?}, ranks {:?}", level, dims, ranks));
        levels.push(LevelRanks { level, dims, ranks, homology });
    }
    Ok(Exactness { levels, certificate: cert })
}

/// Coaction coefficients of the generators, read off `x_i ↦ Σ_k x_k ⊗ c_ki`.
fn generator_coaction(ca: &ComoduleAlgebra, n: usize) -> Result<Vec<Vec<Tensor>>> {
    let mut c = vec![vec![Tensor::zero(); n]; n];
    for i in 0..n {
        for (key, coef) in ca.coaction.images[i].terms() {
            if key[0].len() != 1 {
                return Err(Error::Precondition("coaction is not linear on generators".into()));
            }
            let k = key[0].as_slice()[0] as usize;
            c[k][i].add_term(vec![key[1].clone()], coef.clone());
        }
    }
    Ok(c)
}

/// Colinearity of `d_1` and `d_2`, with `P_0` and `P_2` coacted on
/// trivially and `P_1` through the coefficients of the generators.
pub fn check_equivariance(k: &EquivariantComplex, ca: &ComoduleAlgebra, d: u32) -> Result<Certificate> {
    if !Arc::ptr_eq(&ca.algebra, &k.algebra) && ca.algebra.text() != k.algebra.text() {
        return Err(Error::Precondition("comodule algebra and complex differ".into()));
    }
    let cap = d.max(2);
    let exact = k.algebra.is_complete_at(cap) && ca.hopf.is_complete_at(cap);
    let mut cert = Certificate::new("equivariance", vec![k.algebra.name().to_string(), ca.hopf.name().to_string()], Some(cap), exact);
    let n = k.terms[1].basis.len();
    let coeffs = generator_coaction(ca, n)?;
    let coact_space = ca.coaction.space(cap)?;
    let h = Factor::algebra(&ca.hopf, cap)?;
    // coaction on P_p: u ⊗ v_b ⊗ w ↦ u_0 ⊗ v_j ⊗ w_0 ⊗ u_1 c_jb w_1
    let rho = |p: usize, t: &Tensor| -> Tensor {
        let mut out = Tensor::zero();
        for (key, c) in t.terms() {
            let b = key[1].as_slice()[0] as usize;
            let mid: Vec<(usize, Tensor)> = if p == 1 {
                (0..n).map(|j| (j, coeffs[j][b].clone())).collect()
            } else {
                vec![(0, Tensor::unit(1))]
            };
            let cu = ca.coaction.apply_word(&key[0], &coact_space);
            let cw = ca.coaction.apply_word(&key[2], &coact_space);
            for (ku, cu_c) in cu.terms() {
                for (kw, cw_c) in cw.terms() {
                    for (j, m) in &mid {
                        for (km, cm) in m.terms() {
                            let hw = ku[1].concat(&km[0]).concat(&kw[1]);
                            out.add_term(vec![ku[0].clone(), Word::gen(*j as Gen), kw[0].clone(), hw], &(&(c * cu_c) * cw_c) * cm);
                        }
                    }
                }
            }
        }
        out
    };
    for p in 1..=2 {
        let target = k.space(p - 1, cap)?.concat(&Space(vec![h.clone()]));
        for b in 0..k.terms[p].basis.len() {
            let lhs = rho(p - 1, &k.differentials[p][b]);
            let mut rhs = Tensor::zero();
            if p == 1 {
                for j in 0..n {
                    rhs = rhs.add(&k.differentials[p][j].otimes(&coeffs[j][b]));
                }
            } else {
                rhs = k.differentials[p][b].otimes(&Tensor::unit(1));
            }
            cert.record(format!("ρ d_{} (1⊗{}⊗1) = (d_{}⊗1) ρ", p, k.terms[p].basis[b], p), None, residue(&target, &lhs, &rhs));
        }
    }
    Ok(cert)
}

/// The complex of `A_{F⁻¹,t}` obtained by transporting the complex of
/// `A_{E⁻¹,t}` along `B(E,F)`, with a certificate comparing it to the
/// Koszul complex built directly.
#[derive(Clone, Debug)]
pub struct TransportedResolution {
    pub complex: EquivariantComplex,
    pub certificate: Certificate,
}

/// The comparison maps `Φ_p: P_p(F) → P_p(E) ⊗ B(E,F)` send
/// `u ⊗ v'_l ⊗ w` to `Σ ι(u)·(v_j ⊗ a_jl)·ι(w)`, with `ι(x'_k) = Σ_i x_i ⊗ a_ik`.
/// They land in the cotensor product, are injective on `F_L` for `L ≤ d`,
/// and intertwine the differentials.
pub fn transport_resolution(k: &EquivariantComplex, e: &ExactMatrix, f: &ExactMatrix, d: u32) -> Result<TransportedResolution> {
    let einv = e.inverse()?;
    if einv != k.alpha {
        return Err(Error::Precondition(format!("complex is not built on E⁻¹ for E = {}", e)));
    }
    let direct = koszul_complex(&f.inverse()?, &k.t, &format!("{}'", k.algebra.name()))?;
    let c = b_cogroupoid(&[("E".into(), e.clone()), ("F".into(), f.clone())])?;
    let bef = c.hom(0, 1).clone();
    let (m, n) = (e.rows(), f.rows());
    let cap = d.max(2);
    let iota_images = (0..n)
        .map(|l| {
            let mut t = Tensor::zero();
            for i in 0..m {
                t.add_term(vec![Word::gen(i as Gen), Word::gen((i * n + l) as Gen)], Scalar::one());
            }
            t
        })
        .collect();
    let iota = AlgebraMorphism::new("ι", direct.algebra.clone(), vec![k.algebra.clone(), bef.clone()], iota_images);
    let exact = c.is_exact(cap) && k.algebra.is_complete_at(cap) && direct.algebra.is_complete_at(cap);
    let mut cert = Certificate::new("resolution transport", vec![k.algebra.name().to_string(), direct.algebra.name().to_string()], Some(d), exact);
    cert.absorb(check_morphism(&iota)?);
    let iota_space = iota.space(cap)?;
    let bfac = Factor::algebra(&bef, cap)?;
    let phi = |p: usize, key: &Key| -> Tensor {
        let l = key[1].as_slice()[0] as usize;
        let mid: Vec<(usize, Word)> = if p == 1 { (0..m).map(|j| (j, Word::gen((j * n + l) as Gen))).collect() } else { vec![(0, Word::empty())] };
        let cu = iota.apply_word(&key[0], &iota_space);
        let cw = iota.apply_word(&key[2], &iota_space);
        let mut out = Tensor::zero();
        for (ku, a) in cu.terms() {
            for (kw, b) in cw.terms() {
                for (j, mw) in &mid {
                    out.add_term(vec![ku[0].clone(), Word::gen(*j as Gen), kw[0].clone(), ku[1].concat(mw).concat(&kw[1])], a * b);
                }
            }
        }
        out
    };
    let with_b = |s: Space| s.concat(&Space(vec![bfac.clone()]));
    // the generators land in the cotensor product
    let be = c.hom(0, 0).clone();
    let coact_e: Vec<Tensor> = (0..m)
        .map(|i| {
            let mut t = Tensor::zero();
            for kk in 0..m {
                t.add_term(vec![Word::gen(kk as Gen), Word::gen((kk * m + i) as Gen)], Scalar::one());
            }
            t
        })
        .collect();
    let delta = c.delta(0, 1, 0);
    let dspace = delta.space(cap)?;
    for p in 0..=2 {
        let sp = k.space(p, cap)?;
        let full = Space(vec![sp.0[0].clone(), sp.0[1].clone(), sp.0[2].clone(), Factor::algebra(&be, cap)?, bfac.clone()]);
        for b in 0..direct.terms[p].basis.len() {
            let img = with_b(sp.clone()).normalize(&phi(p, &key3(Word::empty(), b, Word::empty())));
            // right coaction on the middle factor, then Δ on the last
            let lhs = delta.apply_at(&img, 3, &dspace)?;
            let mut rhs = Tensor::zero();
            for (key, coef) in img.terms() {
                let j = key[1].as_slice()[0] as usize;
                if p == 1 {
                    for (ck, cc) in coact_e[j].terms() {
                        rhs.add_term(vec![key[0].clone(), ck[0].clone(), key[2].clone(), ck[1].clone(), key[3].clone()], coef * cc);
                    }
                } else {
                    rhs.add_term(vec![key[0].clone(), key[1].clone(), key[2].clone(), Word::empty(), key[3].clone()], coef.clone());
                }
            }
            cert.record(format!("Φ_{}(1⊗{}⊗1) lies in the cotensor product", p, direct.terms[p].basis[b]), None, residue(&full, &lhs, &rhs));
        }
    }
    let a_b = Space(vec![Factor::algebra(&k.algebra, cap)?, bfac.clone()]);
    let fa = direct.a_space(cap.max(d))?;
    for p in 0..=2 {
        let basis = direct.level_basis(p, d)?;
        let src = with_b(k.space(p, cap.max(d))?);
        let images: Vec<Tensor> = basis.iter().map(|key| src.normalize(&phi(p, key))).collect();
        let r = rank_of(&images);
        cert.record(
            format!("Φ_{} injective on F_{} ({} basis elements)", p, d, basis.len()),
            Some(d),
            (r != basis.len()).then(|| format!("rank {}", r)),
        );
        let mut bad = None;
        for (key, img) in basis.iter().zip(&images) {
            let (lhs, rhs, space) = if p == 0 {
                let mut l = Tensor::zero();
                for (kk, cc) in img.terms() {
                    l.add_term(vec![kk[0].concat(&kk[2]), kk[3].clone()], cc.clone());
                }
                let prod = fa.normalize(&direct.apply_key(0, key));
                let mut r = Tensor::zero();
                for (kk, cc) in prod.terms() {
                    r.add_scaled(&iota.apply_word(&kk[0], &iota_space), cc);
                }
                (l, r, a_b.clone())
            } else {
                let mut l = Tensor::zero();
                for (kk, cc) in img.terms() {
                    let inner = k.apply_key(p, &kk[..3].to_vec());
                    for (ik, ic) in inner.terms() {
                        let mut nk = ik.clone();
                        nk.push(kk[3].clone());
                        l.add_term(nk, cc * ic);
                    }
                }
                let down = direct.space(p - 1, cap.max(d))?.normalize(&direct.apply_key(p, key));
                let mut r = Tensor::zero();
                for (kk, cc) in down.terms() {
                    r.add_scaled(&phi(p - 1, kk), cc);
                }
                (l, r, with_b(k.space(p - 1, cap.max(d))?))
            };
            if let Some(res) = residue(&space, &lhs, &rhs) {
                bad = Some(format!("on {:?}: {}", key, res));
                break;
            }
        }
        cert.record(format!("(d_{}⊗1)Φ_{} = Φ_{}d_{} on F_{}", p, p, p.saturating_sub(1), p, d), Some(d), bad);
    }
    Ok(TransportedResolution { complex: direct, certificate: cert })
}

/// Hochschild homology `H_m(A, k_χ)` from the resolution: the complex
/// `k → V → k` with `u ⊗ v ⊗ w ↦ χ(w)χ(u) v`.
#[derive(Clone, Debug)]
pub struct HochschildDims {
    pub dims: Vec<usize>,
    pub certificate: Certificate,
}

fn chi_word(chi: &[Scalar], w: &Word) -> Scalar {
    w.as_slice().iter().fold(Scalar::one(), |acc, &g| &acc * &chi[g as usize])
}

pub fn hochschild_dims(k: &EquivariantComplex, chi: &[Scalar]) -> Result<HochschildDims> {
    if chi.len() != k.algebra.num_gens() {
        return Err(Error::NoCharacter(format!("{} values for {} generators", chi.len(), k.algebra.num_gens())));
    }
    for r in k.algebra.relations() {
        let v = evaluate(r, chi);
        if !v.is_zero() {
            return Err(Error::NoCharacter(format!("relation {} takes the value {}", k.algebra.display(r), v)));
        }
    }
    let mut cert = Certificate::new("Hochschild homology", vec![k.algebra.name().to_string()], None, true);
    let coeff = |p: usize| -> Vec<Vec<Scalar>> {
        let width = k.terms[p - 1].basis.len();
        k.differentials[p]
            .iter()
            .map(|t| {
                let mut row = vec![Scalar::zero(); width];
                for (key, c) in t.terms() {
                    let b = key[1].as_slice()[0] as usize;
                    row[b] = &row[b] + &(&(c * &chi_word(chi, &key[0])) * &chi_word(chi, &key[2]));
                }
                row
            })
            .collect()
    };
    let rank = |rows: Vec<Vec<Scalar>>| -> usize {
        let sv: Vec<SparseVec> = rows.into_iter().map(|r| r.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()).collect();
        sparse_rank(&sv)
    };
    let (r1, r2) = (rank(coeff(1)), rank(coeff(2)));
    let dims = vec![k.terms[0].basis.len() - r1, k.terms[1].basis.len() - r1 - r2, k.terms[2].basis.len() - r2];
    cert.note(format!("dims of H_0, H_1, H_2: {:?}", dims));
    cert.pass(format!("H_m = 0 for m > {}: the resolution has length {}", k.length(), k.length()), None);
    Ok(HochschildDims { dims, certificate: cert })
}

/// `H_m(A, k_ε)` for a graded `A` and the augmentation, `m ≤ max_m`, summed
/// over internal degrees `≤ d`, from the normalized bar complex.
pub fn bar_homology(a: &Presentation, max_m: usize, d: u32) -> Result<Vec<usize>> {
    if a.relations().iter().any(|r| r.terms().any(|(w, _)| w.is_empty())) {
        return Err(Error::Precondition("bar oracle needs homogeneous relations".into()));
    }
    let engine = a.engine(d)?;
    let words = engine.normal_words(d);
    let space = Space(vec![Factor::algebra(a, d)?]);
    // chains of m nonempty words of total degree `deg`
    fn chains(words: &[Vec<Word>], m: usize, deg: usize) -> Vec<Key> {
        if m == 0 {
            return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for first in 1..=deg {
            for w in words.get(first).into_iter().flatten() {
                for mut rest in chains(words, m - 1, deg - first) {
                    rest.insert(0, w.clone());
                    out.push(rest);
                }
            }
        }
        out
    }
    let bar = |key: &Key| -> Tensor {
        let mut out = Tensor::zero();
        for i in 0..key.len().saturating_sub(1) {
            let prod = space.normalize(&Tensor::pure(vec![key[i].concat(&key[i + 1])], Scalar::one()));
            let sign = if (i + 1) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            for (pk, pc) in prod.terms() {
                let mut nk = key[..i].to_vec();
                nk.push(pk[0].clone());
                nk.extend(key[i + 2..].iter().cloned());
                out.add_term(nk, &sign * pc);
            }
        }
        out
    };
    let mut dims = vec![0usize; max_m + 1];
    for deg in 0..=d as usize {
        let ranks: Vec<usize> = (0..=max_m + 1).map(|m| if m == 0 { 0 } else { rank_of(&chains(&words, m, deg).iter().map(bar).collect::<Vec<_>>()) }).collect();
        for m in 0..=max_m {
            let n = chains(&words, m, deg).len();
            dims[m] += n - ranks[m] - ranks[m + 1];
        }
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_for_the_quantum_plane() {
        let q = Scalar::param("q");
        let alpha = crate::matrix::e_q(&q).inverse().unwrap();
        let k = koszul_complex(&alpha, &Scalar::zero(), "A").unwrap();
        let g = &k.differentials[2][0];
        let sp = k.space(1, 2).unwrap();
        assert_eq!(sp.display(g).matches('q').count(), 2);
        assert!(check_dd(&k, 2).unwrap().passed);
    }
}
