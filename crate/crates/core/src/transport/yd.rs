//! Finite-dimensional Yetter-Drinfeld modules, their transport and the
//! transported braiding.

use super::{monoidal_product, transport_comodule, TransportedComodule};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::families::FiniteGroup;
use crate::free::{FreeElement, Gen, Word};
use crate::galois::{matrix_coaction, vector_factor};
use crate::hopf::{residue, Cogroupoid, HopfData, MatrixComodule};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;
use crate::tensor::{Factor, Space, Tensor};

/// A right comodule with a right action of the same Hopf algebra;
/// `v_i ← g = Σ_j action[g][(j, i)] v_j` for each generator `g`.
#[derive(Clone, Debug)]
pub struct YdModule {
    pub comodule: MatrixComodule,
    pub action: Vec<ExactMatrix>,
}

impl YdModule {
    pub fn new(comodule: MatrixComodule, action: Vec<ExactMatrix>) -> Self {
        assert_eq!(action.len(), comodule.algebra.num_gens(), "one matrix per generator");
        YdModule { comodule, action }
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim
    }

    /// `k` with the trivial coaction and the counit action.
    pub fn trivial(h: &HopfData) -> Self {
        let action = h.counit.images.iter().map(|t| ExactMatrix::from_rows(vec![vec![t.to_scalar()]])).collect();
        YdModule::new(MatrixComodule::trivial(h.algebra.clone()), action)
    }

    pub fn act_word(&self, w: &Word) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.dim());
        for &g in w.as_slice() {
            m = self.action[g as usize].mul(&m);
        }
        m
    }

    pub fn act(&self, e: &FreeElement) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim(), self.dim());
        for (w, c) in e.terms() {
            m = m.add(&self.act_word(w).scale(c));
        }
        m
    }
}

/// `Σ_s m[(s, p)] v_s`.
fn column(m: &ExactMatrix, p: usize) -> Tensor {
    let mut t = Tensor::zero();
    for s in 0..m.rows() {
        t.add_term(vec![Word::gen(s as Gen)], m[(s, p)].clone());
    }
    t
}

fn matrix_text(m: &ExactMatrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[[{}]]", rows.join("], ["))
}

/// Module axiom (relations act by zero), comodule axioms and the
/// compatibility `(v←x)_(0) ⊗ (v←x)_(1) = v_(0)←x_(2) ⊗ S(x_(1)) v_(1) x_(3)`
/// on generators `x`.
pub fn check_yd(v: &YdModule, h: &HopfData, d: u32) -> Result<Certificate> {
    let cap = d.max(3);
    let eng = h.algebra.engine(cap)?;
    let mut cert = Certificate::new("Yetter-Drinfeld module", vec![v.comodule.name.clone(), h.algebra.name().to_string()], Some(cap), h.algebra.is_complete_at(cap));
    let comod = v.comodule.check(h, d)?;
    cert.absorb(comod);
    cert.exact &= eng.is_complete();
    for (i, r) in h.algebra.relations().iter().enumerate() {
        let m = v.act(r);
        let zero = m.to_rows().iter().flatten().all(|x| x.is_zero());
        cert.record(format!("relation {} acts by zero", i), None, (!zero).then(|| matrix_text(&m)));
    }
    let sp2 = h.delta.space(cap)?;
    let sp1 = h.antipode.space(cap)?;
    let full = Space(vec![vector_factor(v.dim()), Factor::algebra(&h.algebra, cap)?]);
    for g in 0..v.action.len() {
        let gw = Word::gen(g as Gen);
        let d1 = h.delta.apply_word(&gw, &sp2);
        let d2 = h.delta.apply_at(&d1, 0, &sp2)?;
        for i in 0..v.dim() {
            let mut lhs = Tensor::zero();
            for j in 0..v.dim() {
                lhs.add_scaled(&matrix_coaction(&v.comodule, j), &v.action[g][(j, i)]);
            }
            let mut rhs = Tensor::zero();
            for (k, c) in d2.terms() {
                let s1 = h.antipode.apply_word(&k[0], &sp1);
                let mw = v.act_word(&k[1]);
                for p in 0..v.dim() {
                    let cp = v.comodule.coeff(p, i);
                    if cp.is_zero() {
                        continue;
                    }
                    let right = s1.mul(&Tensor::from_elem(cp)).mul(&Tensor::pure(vec![k[2].clone()], Scalar::one()));
                    rhs.add_scaled(&column(&mw, p).otimes(&right), c);
                }
            }
            cert.record(
                format!("YD compatibility for v_{} ← {}", i + 1, h.algebra.names()[g]),
                Some(cap),
                residue(&full, &lhs, &rhs),
            );
        }
    }
    Ok(cert)
}

/// `Θ(V)` with the action `(v ⊗ a) ← b = v ← b_(2) ⊗ S_{y,x}(b_(1)) a b_(3)`.
#[derive(Clone, Debug)]
pub struct TransportedYd {
    pub module: YdModule,
    pub transported: TransportedComodule,
    pub certificate: Certificate,
}

pub fn yd_transport(v: &YdModule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<TransportedYd> {
    let input = check_yd(v, &c.hopf(x), d)?;
    if !input.passed {
        let why = input.failures().next().map(|f| f.label.clone()).unwrap_or_default();
        return Err(Error::NotYd(why));
    }
    let transported = transport_comodule(&v.comodule, c, x, y, d)?;
    let cot = &transported.cotensor;
    let cap = d.max(3);
    let mut cert = Certificate::new(
        "Yetter-Drinfeld transport",
        vec![v.comodule.name.clone(), c.objects[x].clone(), c.objects[y].clone()],
        Some(cap),
        transported.certificate.exact,
    );
    cert.absorb(transported.certificate.clone());
    let d_yx = c.delta(y, y, x);
    let d_xy = c.delta(x, y, x);
    let s = c.antipode(y, x);
    let sp_yx = d_yx.space(cap)?;
    let sp_xy = d_xy.space(cap)?;
    let sp_s = s.space(cap)?;
    let n = cot.dim();
    let hyy = c.hom(y, y);
    let mut action = Vec::new();
    for b in 0..hyy.num_gens() {
        let bw = Word::gen(b as Gen);
        let t = d_xy.apply_at(&d_yx.apply_word(&bw, &sp_yx), 1, &sp_xy)?;
        let mut m = ExactMatrix::zeros(n, n);
        for (j, sj) in cot.basis.iter().enumerate() {
            let mut img = Tensor::zero();
            for (ks, cs) in sj.terms() {
                let p = ks[0].as_slice()[0] as usize;
                for (kb, cb) in t.terms() {
                    let mw = v.act_word(&kb[1]);
                    let h = s.apply_word(&kb[0], &sp_s).mul(&Tensor::pure(vec![ks[1].concat(&kb[2])], Scalar::one()));
                    img.add_scaled(&column(&mw, p).otimes(&h), &(cs * cb));
                }
            }
            let img = cot.space.normalize(&img);
            let label = format!("b_{} ← {} stays in Θ(V)", j + 1, hyy.names()[b]);
            if cot.contains(&img) {
                cert.pass(label, Some(cap));
                for (l, x) in cot.coordinates(&img).into_iter().enumerate() {
                    m[(l, j)] = x;
                }
            } else {
                cert.fail(label, Some(cap), cot.space.display(&img));
            }
        }
        action.push(m);
    }
    let module = YdModule::new(transported.comodule.clone(), action);
    if cert.passed {
        cert.absorb(check_yd(&module, &c.hopf(y), d)?);
    }
    Ok(TransportedYd { module, transported, certificate: cert })
}

/// The transported braiding `c_{ΘV,ΘW}(s ⊗ t) = t_(0) ⊗ s ← t_(1)` agrees
/// with `c_{V,W} ⊗ 1` through the monoidal constraint.
pub fn braiding_check(v: &YdModule, w: &YdModule, c: &Cogroupoid, x: usize, y: usize, d: u32) -> Result<Certificate> {
    let tv = yd_transport(v, c, x, y, d)?;
    let tw = yd_transport(w, c, x, y, d)?;
    let cap = 2 * d.max(1);
    let mut cert = Certificate::new(
        "transported braiding",
        vec![v.comodule.name.clone(), w.comodule.name.clone(), c.objects[x].clone(), c.objects[y].clone()],
        Some(cap),
        tv.certificate.exact && tw.certificate.exact,
    );
    cert.absorb(tv.certificate.clone());
    cert.absorb(tw.certificate.clone());
    let space = Space(vec![vector_factor(w.dim() * v.dim()), Factor::algebra(c.hom(x, y), cap)?]);
    let bv = &tv.transported.cotensor.basis;
    let bw = &tw.transported.cotensor.basis;
    for (i, s) in bv.iter().enumerate() {
        for (j, t) in bw.iter().enumerate() {
            let mut lhs = Tensor::zero();
            for (k, tk) in bw.iter().enumerate() {
                let m = tv.module.act(tw.module.comodule.coeff(k, j));
                for (l, sl) in bv.iter().enumerate() {
                    lhs.add_scaled(&monoidal_product(tk, sl, v.dim()), &m[(l, i)]);
                }
            }
            let mut rhs = Tensor::zero();
            for (key, coef) in monoidal_product(s, t, w.dim()).terms() {
                let pq = key[0].as_slice()[0] as usize;
                let (p, q) = (pq / w.dim(), pq % w.dim());
                for r in 0..w.dim() {
                    let m = v.act(w.comodule.coeff(r, q));
                    for l in 0..v.dim() {
                        let k = vec![Word::gen((r * v.dim() + l) as Gen), key[1].clone()];
                        rhs.add_term(k, coef * &m[(l, p)]);
                    }
                }
            }
            cert.record(format!("F(c(s_{} ⊗ t_{})) = (c ⊗ 1)F(s_{} ⊗ t_{})", i + 1, j + 1, i + 1, j + 1), Some(cap), residue(&space, &lhs, &rhs));
        }
    }
    Ok(cert)
}

/// `kG` graded by `g ↦ g ⊗ g` with the conjugation action `h ← x = x⁻¹hx`,
/// over a hom-algebra whose generators are the non-identity elements.
pub fn group_adjoint_yd(c: &Cogroupoid, x: usize, group: &FiniteGroup) -> Result<YdModule> {
    let alg = c.hom(x, x).clone();
    let n = group.order();
    if alg.num_gens() + 1 != n {
        return Err(Error::Precondition("hom-algebra is not spanned by the group".into()));
    }
    let mut coeffs = vec![FreeElement::zero(); n * n];
    for g in 0..n {
        coeffs[g * n + g] = FreeElement::word(group.word(g));
    }
    let comodule = MatrixComodule::new(format!("k{}", group.order()), alg, n, coeffs);
    let action = (1..n)
        .map(|a| {
            let mut m = ExactMatrix::zeros(n, n);
            for g in 0..n {
                m[(group.mul(group.mul(group.inv(a), g), a), g)] = Scalar::one();
            }
            m
        })
        .collect();
    Ok(YdModule::new(comodule, action))
}

/// `V_E` over `B(E_q)` with `q = s²`: `v_i ← a_kl = s δ_ik v_l + s⁻¹ (twisted)`,
/// where the second summand sends `v_2 ← a_11 = v_2`, `v_1 ← a_22 = v_1`,
/// `v_1 ← a_12 = −q v_2`, `v_2 ← a_21 = −q⁻¹ v_1`.
pub fn quantum_plane_yd(c: &Cogroupoid, x: usize, s: &Scalar) -> Result<YdModule> {
    let alg = c.hom(x, x).clone();
    if alg.num_gens() != 4 {
        return Err(Error::Precondition("expected a 2×2 matrix family".into()));
    }
    let q = s * s;
    let si = s.inv().ok_or_else(|| Error::Precondition("s must be nonzero".into()))?;
    let qi = q.inv().expect("nonzero");
    let coeffs = (0..4).map(|k| FreeElement::gen(k as Gen)).collect();
    let comodule = MatrixComodule::new("V_E", alg, 2, coeffs);
    let mut action = vec![ExactMatrix::zeros(2, 2); 4];
    for k in 0..2 {
        for l in 0..2 {
            action[k * 2 + l][(l, k)] = s.clone();
        }
    }
    action[0][(1, 1)] = &action[0][(1, 1)] + &si;
    action[3][(0, 0)] = &action[3][(0, 0)] + &si;
    action[1][(1, 0)] = &action[1][(1, 0)] - &(&q * &si);
    action[2][(0, 1)] = &action[2][(0, 1)] - &(&qi * &si);
    Ok(YdModule::new(comodule, action))
}
