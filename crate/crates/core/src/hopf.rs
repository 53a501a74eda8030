//! Hopf algebras, cogroupoids and matrix comodules, with generator-level
//! verification of their structure diagrams.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen, Word};
use crate::morphism::{check_morphism, AlgebraMorphism};
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::tensor::{Factor, Space, Tensor};
use std::sync::Arc;

/// A presented algebra with comultiplication, counit and antipode.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub algebra: Arc<Presentation>,
    pub delta: AlgebraMorphism,
    pub counit: AlgebraMorphism,
    pub antipode: AlgebraMorphism,
}

/// Objects `0..n`, hom-algebras `C(x,y)` and the structure maps
/// `Δ^z_{x,y}: C(x,y) → C(x,z) ⊗ C(z,y)`, `ε_x: C(x,x) → k`,
/// `S_{x,y}: C(x,y) → C(y,x)^op`.
#[derive(Clone, Debug)]
pub struct Cogroupoid {
    pub name: String,
    pub objects: Vec<String>,
    homs: Vec<Vec<Arc<Presentation>>>,
    deltas: Vec<AlgebraMorphism>,
    counits: Vec<AlgebraMorphism>,
    antipodes: Vec<AlgebraMorphism>,
    pub notes: Vec<String>,
}

impl Cogroupoid {
    pub fn build(
        name: impl Into<String>,
        objects: Vec<String>,
        homs: Vec<Vec<Arc<Presentation>>>,
        delta: impl Fn(usize, usize, usize) -> AlgebraMorphism,
        counit: impl Fn(usize) -> AlgebraMorphism,
        antipode: impl Fn(usize, usize) -> AlgebraMorphism,
    ) -> Self {
        let n = objects.len();
        let mut deltas = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    deltas.push(delta(x, y, z));
                }
            }
        }
        let counits = (0..n).map(counit).collect();
        let mut antipodes = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                antipodes.push(antipode(x, y));
            }
        }
        Cogroupoid { name: name.into(), objects, homs, deltas, counits, antipodes, notes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn hom(&self, x: usize, y: usize) -> &Arc<Presentation> {
        &self.homs[x][y]
    }

    pub fn delta(&self, x: usize, y: usize, z: usize) -> &AlgebraMorphism {
        let n = self.len();
        &self.deltas[(x * n + y) * n + z]
    }

    pub fn counit(&self, x: usize) -> &AlgebraMorphism {
        &self.counits[x]
    }

    pub fn antipode(&self, x: usize, y: usize) -> &AlgebraMorphism {
        &self.antipodes[x * self.len() + y]
    }

    pub fn set_delta(&mut self, x: usize, y: usize, z: usize, m: AlgebraMorphism) {
        let n = self.len();
        self.deltas[(x * n + y) * n + z] = m;
    }

    pub fn set_antipode(&mut self, x: usize, y: usize, m: AlgebraMorphism) {
        let n = self.len();
        self.antipodes[x * n + y] = m;
    }

    pub fn set_counit(&mut self, x: usize, m: AlgebraMorphism) {
        self.counits[x] = m;
    }

    /// The bialgebra `C(x,x)` with its Hopf structure.
    pub fn hopf(&self, x: usize) -> HopfData {
        HopfData {
            algebra: self.hom(x, x).clone(),
            delta: self.delta(x, x, x).clone(),
            counit: self.counit(x).clone(),
            antipode: self.antipode(x, x).clone(),
        }
    }

    /// One-object cogroupoid of a Hopf algebra.
    pub fn single(h: &HopfData) -> Self {
        Cogroupoid::build(
            h.algebra.name().to_string(),
            vec![h.algebra.name().to_string()],
            vec![vec![h.algebra.clone()]],
            |_, _, _| h.delta.clone(),
            |_| h.counit.clone(),
            |_, _| h.antipode.clone(),
        )
    }

    /// True when every hom-algebra has a complete (hence exact) reduction system.
    pub fn is_exact(&self, d: u32) -> bool {
        self.homs.iter().flatten().all(|p| p.is_complete_at(d))
    }

    fn space(&self, pairs: &[(usize, usize)], d: u32) -> Result<Space> {
        Ok(Space(pairs.iter().map(|&(x, y)| Factor::algebra(self.hom(x, y), d)).collect::<Result<_>>()?))
    }
}

fn gen_tensor(g: Gen) -> Tensor {
    Tensor::pure(vec![Word::gen(g)], Scalar::one())
}

pub(crate) fn residue(space: &Space, lhs: &Tensor, rhs: &Tensor) -> Option<String> {
    let diff = space.normalize(&lhs.sub(rhs));
    (!diff.is_zero()).then(|| space.display(&diff))
}

/// Every structure map is a well-defined algebra map.
pub fn check_structure_maps(c: &Cogroupoid) -> Result<Certificate> {
    let mut cert = Certificate::new("structure maps", vec![c.name.clone()], None, true);
    let n = c.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                cert.absorb(check_morphism(c.delta(x, y, z))?);
            }
            cert.absorb(check_morphism(c.antipode(x, y))?);
        }
        cert.absorb(check_morphism(c.counit(x))?);
    }
    Ok(cert)
}

/// Coassociativity, counit and both antipode diagrams on generators.
pub fn check_cogroupoid(c: &Cogroupoid, d: u32) -> Result<Certificate> {
    let d = d.max(2);
    let exact = c.is_exact(d);
    let mut cert = Certificate::new("cogroupoid axioms", vec![c.name.clone()], Some(d), exact);
    cert.absorb(check_structure_maps(c)?);
    let n = c.len();
    let obj = |i: usize| c.objects[i].clone();
    for x in 0..n {
        for y in 0..n {
            let src = c.hom(x, y);
            for g in 0..src.num_gens() as Gen {
                let gname = src.names()[g as usize].clone();
                let gt = gen_tensor(g);
                // counit laws
                let sp = c.space(&[(x, y)], d)?;
                let left = c.counit(x).apply_at(&c.delta(x, y, x).apply_at(&gt, 0, &c.delta(x, y, x).space(d)?)?, 0, &Space(vec![]))?;
                cert.record(
                    format!("(ε_{}⊗1)Δ^{}_{{{},{}}}({}) = {}", obj(x), obj(x), obj(x), obj(y), gname, gname),
                    Some(d),
                    residue(&sp, &left, &gt),
                );
                let right = c.counit(y).apply_at(&c.delta(x, y, y).apply_at(&gt, 0, &c.delta(x, y, y).space(d)?)?, 1, &Space(vec![]))?;
                cert.record(
                    format!("(1⊗ε_{})Δ^{}_{{{},{}}}({}) = {}", obj(y), obj(y), obj(x), obj(y), gname, gname),
                    Some(d),
                    residue(&sp, &right, &gt),
                );
                // coassociativity
                for z in 0..n {
                    for t in 0..n {
                        let full = c.space(&[(x, z), (z, t), (t, y)], d)?;
                        let dt = c.delta(x, y, t);
                        let a = dt.apply_at(&gt, 0, &dt.space(d)?)?;
                        let a = c.delta(x, t, z).apply_at(&a, 0, &c.delta(x, t, z).space(d)?)?;
                        let dz = c.delta(x, y, z);
                        let b = dz.apply_at(&gt, 0, &dz.space(d)?)?;
                        let b = c.delta(z, y, t).apply_at(&b, 1, &c.delta(z, y, t).space(d)?)?;
                        cert.record(
                            format!(
                                "(Δ^{z}_{{{x},{t}}}⊗1)Δ^{t}_{{{x},{y}}} = (1⊗Δ^{t}_{{{z},{y}}})Δ^{z}_{{{x},{y}}} on {g}",
                                x = obj(x),
                                y = obj(y),
                                z = obj(z),
                                t = obj(t),
                                g = gname
                            ),
                            Some(d),
                            residue(&full, &a, &b),
                        );
                    }
                }
            }
        }
    }
    // antipode diagrams on generators of C(x,x)
    for x in 0..n {
        let src = c.hom(x, x);
        for y in 0..n {
            for g in 0..src.num_gens() as Gen {
                let gname = src.names()[g as usize].clone();
                let gt = gen_tensor(g);
                let eps = c.counit(x).apply_at(&gt, 0, &Space(vec![]))?.to_scalar();
                let dy = c.delta(x, x, y);
                let split = dy.apply_at(&gt, 0, &dy.space(d)?)?;
                let sp_xy = c.space(&[(x, y)], d)?;
                let s_yx = c.antipode(y, x);
                let l = s_yx.apply_at(&split, 1, &s_yx.space(d)?)?.merge(0);
                cert.record(
                    format!("m(1⊗S_{{{},{}}})Δ^{}_{{{},{}}}({}) = ε({})1", obj(y), obj(x), obj(y), obj(x), obj(x), gname, gname),
                    Some(d),
                    residue(&sp_xy, &l, &Tensor::scalar(eps.clone(), 1)),
                );
                let sp_yx = c.space(&[(y, x)], d)?;
                let s_xy = c.antipode(x, y);
                let r = s_xy.apply_at(&split, 0, &s_xy.space(d)?)?.merge(0);
                cert.record(
                    format!("m(S_{{{},{}}}⊗1)Δ^{}_{{{},{}}}({}) = ε({})1", obj(x), obj(y), obj(y), obj(x), obj(x), gname, gname),
                    Some(d),
                    residue(&sp_yx, &r, &Tensor::scalar(eps, 1)),
                );
            }
        }
    }
    Ok(cert)
}

/// The Hopf axioms, as the one-object case of the cogroupoid axioms.
pub fn check_hopf(h: &HopfData, d: u32) -> Result<Certificate> {
    let mut cert = check_cogroupoid(&Cogroupoid::single(h), d)?;
    cert.axiom = "hopf axioms".into();
    Ok(cert)
}

/// Anti-multiplicativity of `S_{y,x}` on generator pairs and compatibility of
/// the antipodes with comultiplication through `z`.
pub fn check_antipode_properties(c: &Cogroupoid, x: usize, y: usize, z: usize, d: u32) -> Result<Certificate> {
    let d = d.max(2);
    let obj = |i: usize| c.objects[i].clone();
    let mut cert = Certificate::new(
        "antipode properties",
        vec![c.name.clone(), obj(x), obj(y), obj(z)],
        Some(d),
        c.is_exact(d),
    );
    let s = c.antipode(y, x);
    cert.absorb(check_morphism(s)?);
    let src = c.hom(y, x);
    let sp_xy = c.space(&[(x, y)], d)?;
    let single = s.space(d)?;
    for g in 0..src.num_gens() as Gen {
        for h in 0..src.num_gens() as Gen {
            let gh = FreeElement::word(Word::from_slice(&[g, h]));
            let lhs = s.apply(&gh, &single);
            let sg = s.apply(&FreeElement::gen(g), &single);
            let sh = s.apply(&FreeElement::gen(h), &single);
            cert.record(
                format!("S({}{}) = S({})S({})", src.names()[g as usize], src.names()[h as usize], src.names()[h as usize], src.names()[g as usize]),
                Some(d),
                residue(&sp_xy, &lhs, &sh.mul(&sg)),
            );
        }
    }
    let full = c.space(&[(x, z), (z, y)], d)?;
    for g in 0..src.num_gens() as Gen {
        let gt = gen_tensor(g);
        let dz = c.delta(x, y, z);
        let lhs = dz.apply_at(&s.apply_at(&gt, 0, &single)?, 0, &dz.space(d)?)?;
        let dd = c.delta(y, x, z);
        let split = dd.apply_at(&gt, 0, &dd.space(d)?)?.permute(&[1, 0]);
        let s1 = c.antipode(z, x);
        let s2 = c.antipode(y, z);
        let rhs = s1.apply_at(&split, 0, &s1.space(d)?)?;
        let rhs = s2.apply_at(&rhs, 1, &s2.space(d)?)?;
        cert.record(
            format!(
                "Δ^{z}_{{{x},{y}}}∘S_{{{y},{x}}} = (S_{{{z},{x}}}⊗S_{{{y},{z}}})∘flip∘Δ^{z}_{{{y},{x}}} on {g}",
                x = obj(x),
                y = obj(y),
                z = obj(z),
                g = src.names()[g as usize]
            ),
            Some(d),
            residue(&full, &lhs, &rhs),
        );
    }
    Ok(cert)
}

/// A linear functional on a hom-algebra, given on normal words.
pub type Functional = dyn Fn(&Word) -> Scalar;

/// Coefficient of the empty word.
pub fn unit_coefficient(w: &Word) -> Scalar {
    if w.is_empty() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// Checks that `f(a ⊗ b) = ψ(S_{y,z}(a_(2)) b) a_(1)` retracts `Δ^z_{x,y}`.
pub fn delta_retraction(c: &Cogroupoid, x: usize, y: usize, z: usize, psi: &Functional, d: u32) -> Result<Certificate> {
    let d = d.max(2);
    let obj = |i: usize| c.objects[i].clone();
    if psi(&Word::empty()) != Scalar::one() {
        return Err(Error::Precondition("ψ(1) must equal 1".into()));
    }
    let mut cert = Certificate::new("Δ retraction", vec![c.name.clone(), obj(x), obj(y), obj(z)], Some(d), c.is_exact(d));
    cert.note("ψ: functional on normal words of C(z,y) with ψ(1) = 1");
    let src = c.hom(x, y);
    let dz = c.delta(x, y, z);
    let dy = c.delta(x, z, y);
    let s = c.antipode(y, z);
    let target = c.space(&[(x, y)], d)?;
    let zy = c.space(&[(z, y)], d)?;
    for g in 0..src.num_gens() as Gen {
        let gt = gen_tensor(g);
        // a ⊗ b in C(x,z) ⊗ C(z,y), then a_(1) ⊗ a_(2) ⊗ b
        let t = dz.apply_at(&gt, 0, &dz.space(d)?)?;
        let t = dy.apply_at(&t, 0, &dy.space(d)?)?;
        let t = s.apply_at(&t, 1, &s.space(d)?)?.merge(1);
        let mut out = Tensor::zero();
        for (k, coef) in t.terms() {
            let inner = zy.normalize(&Tensor::pure(vec![k[1].clone()], Scalar::one()));
            let mut val = Scalar::zero();
            for (w, cc) in inner.terms() {
                val = &val + &(cc * &psi(&w[0]));
            }
            out.add_term(vec![k[0].clone()], coef * &val);
        }
        cert.record(format!("f∘Δ^{}_{{{},{}}}({}) = {}", obj(z), obj(x), obj(y), src.names()[g as usize], src.names()[g as usize]), Some(d), residue(&target, &out, &gt));
    }
    Ok(cert)
}

/// Finite-dimensional right comodule: `α(v_i) = Σ_j v_j ⊗ c_{ji}`.
#[derive(Clone, Debug)]
pub struct MatrixComodule {
    pub name: String,
    pub algebra: Arc<Presentation>,
    pub dim: usize,
    /// Row-major `dim × dim` coefficient matrix.
    pub coeffs: Vec<FreeElement>,
}

impl MatrixComodule {
    pub fn new(name: impl Into<String>, algebra: Arc<Presentation>, dim: usize, coeffs: Vec<FreeElement>) -> Self {
        assert_eq!(coeffs.len(), dim * dim);
        MatrixComodule { name: name.into(), algebra, dim, coeffs }
    }

    pub fn trivial(algebra: Arc<Presentation>) -> Self {
        Self::new("k", algebra, 1, vec![FreeElement::one()])
    }

    pub fn coeff(&self, i: usize, j: usize) -> &FreeElement {
        &self.coeffs[i * self.dim + j]
    }

    /// Coassociativity and counit on every coefficient.
    pub fn check(&self, h: &HopfData, d: u32) -> Result<Certificate> {
        let d = d.max(2);
        let exact = h.algebra.is_complete_at(d);
        let mut cert = Certificate::new("comodule axioms", vec![self.name.clone(), h.algebra.name().to_string()], Some(d), exact);
        let sp2 = h.delta.space(d)?;
        let sp1 = Space(vec![Factor::algebra(&h.algebra, d)?]);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = self.coeff(i, j);
                let lhs = h.delta.apply(&sp1.normalize(&Tensor::from_elem(c)).to_elem(), &sp2);
                let mut rhs = Tensor::zero();
                for k in 0..self.dim {
                    rhs = rhs.add(&Tensor::from_elem(self.coeff(i, k)).otimes(&Tensor::from_elem(self.coeff(k, j))));
                }
                cert.record(format!("Δ(c_{}{}) = Σ_k c_{}k ⊗ c_k{}", i + 1, j + 1, i + 1, j + 1), Some(d), residue(&sp2, &lhs, &rhs));
                let e = h.counit.apply(c, &Space(vec![])).to_scalar();
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                if e == want {
                    cert.pass(format!("ε(c_{}{}) = δ", i + 1, j + 1), None);
                } else {
                    cert.fail(format!("ε(c_{}{}) = δ", i + 1, j + 1), None, e.to_string());
                }
            }
        }
        Ok(cert)
    }
}
