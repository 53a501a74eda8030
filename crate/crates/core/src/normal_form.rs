//! Algebras given by an explicit confluent rewriting system, used as visibly
//! nonzero targets of algebra maps.

use crate::certificate::Certificate;
use crate::error::Result;
use crate::families::{star, AstMatrix};
use crate::free::{FreeElement, Gen, Word};
use crate::presentation::Presentation;
use crate::rewrite::{RewriteSystem, Rule};
use crate::scalar::Scalar;

#[derive(Debug)]
pub struct NormalFormAlgebra {
    pub name: String,
    pub names: Vec<String>,
    system: RewriteSystem,
}

impl NormalFormAlgebra {
    /// Fails with `NotConfluent` unless every ambiguity resolves.
    pub fn new(name: impl Into<String>, names: Vec<String>, rules: Vec<Rule>) -> Result<Self> {
        let system = RewriteSystem::from_rules(&vec![1; names.len()], rules)?;
        system.check_confluence()?;
        Ok(NormalFormAlgebra { name: name.into(), names, system })
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn reduce(&self, e: &FreeElement) -> FreeElement {
        self.system.reduce(e)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.system.is_irreducible(w)
    }

    pub fn normal_words(&self, d: u32) -> Vec<Vec<Word>> {
        self.system.normal_words(d)
    }

    pub fn display(&self, e: &FreeElement) -> String {
        e.display(&self.names)
    }

    /// Substitute generator images and reduce after every multiplication.
    pub fn evaluate(&self, e: &FreeElement, images: &[FreeElement]) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w, c) in e.terms() {
            let mut acc = FreeElement::one();
            for &g in w.as_slice() {
                acc = self.reduce(&acc.mul(&images[g as usize]));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign_scaled(&acc, c);
        }
        self.reduce(&out)
    }
}

fn rule(lhs: &[usize], rhs: FreeElement) -> Rule {
    Rule { lhs: Word::from_slice(&lhs.iter().map(|&g| g as Gen).collect::<Vec<_>>()), rhs }
}

fn word(w: &[usize], c: Scalar) -> FreeElement {
    FreeElement::term(Word::from_slice(&w.iter().map(|&g| g as Gen).collect::<Vec<_>>()), c)
}

/// `k_p[t_1^{±1},…,t_n^{±1}]` on generators `t1, s1, t2, s2, …` with `s_i = t_i⁻¹`.
pub fn quantum_torus(p: &AstMatrix) -> Result<NormalFormAlgebra> {
    let n = p.size();
    let t = |i: usize| 2 * i;
    let s = |i: usize| 2 * i + 1;
    let mut rules = Vec::new();
    for i in 0..n {
        rules.push(rule(&[t(i), s(i)], FreeElement::one()));
        rules.push(rule(&[s(i), t(i)], FreeElement::one()));
        for k in 0..i {
            rules.push(rule(&[t(i), t(k)], word(&[t(k), t(i)], p.get(i, k).clone())));
            rules.push(rule(&[s(i), s(k)], word(&[s(k), s(i)], p.get(i, k).clone())));
            rules.push(rule(&[t(i), s(k)], word(&[s(k), t(i)], p.get(k, i).clone())));
            rules.push(rule(&[s(i), t(k)], word(&[t(k), s(i)], p.get(k, i).clone())));
        }
    }
    let names = (0..n).flat_map(|i| [format!("t{}", i + 1), format!("t{}⁻¹", i + 1)]).collect();
    NormalFormAlgebra::new("quantum torus", names, rules)
}

/// Generators `t_1..t_n` with `t_i² = 1` and `t_i t_j = p_ij t_j t_i`.
pub fn twisted_group_algebra(p: &AstMatrix) -> Result<NormalFormAlgebra> {
    let n = p.size();
    let mut rules = Vec::new();
    for i in 0..n {
        rules.push(rule(&[i, i], FreeElement::one()));
        for j in 0..i {
            rules.push(rule(&[i, j], word(&[j, i], p.get(i, j).clone())));
        }
    }
    let names = (0..n).map(|i| format!("t{}", i + 1)).collect();
    NormalFormAlgebra::new("twisted group algebra", names, rules)
}

/// `x_ij ↦ δ_ij t_i`, `y_ij ↦ δ_ij t_i⁻¹` for `O_{p,1}(GL_n)`.
pub fn gl_torus_images(n: usize) -> Vec<FreeElement> {
    let mut out = Vec::new();
    for block in 0..2 {
        for i in 0..n {
            for j in 0..n {
                out.push(if i == j { FreeElement::gen((2 * i + block) as Gen) } else { FreeElement::zero() });
            }
        }
    }
    out
}

/// `x_ij ↦ δ_{i*j*}(1 + (-1)^{j-i} t_{i*})/2` for `O_{p,1}(S_2n)`.
pub fn s2n_twisted_images(n: usize) -> Vec<FreeElement> {
    let n2 = 2 * n;
    let half = Scalar::ratio(1, 2);
    let mut out = Vec::new();
    for i in 0..n2 {
        for j in 0..n2 {
            if star(i) != star(j) {
                out.push(FreeElement::zero());
                continue;
            }
            let sign = if (i + j) % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
            let t = FreeElement::gen(star(i) as Gen).scale(&sign);
            out.push(FreeElement::one().add(&t).scale(&half));
        }
    }
    out
}

/// Every relation of `source` must vanish under the images; a pass shows
/// `source` maps onto part of a nonzero algebra, hence is nonzero.
pub fn quantum_torus_witness(source: &Presentation, target: &NormalFormAlgebra, images: &[FreeElement]) -> Result<Certificate> {
    target.system().check_confluence()?;
    let mut cert = Certificate::new("nonzero witness", vec![source.name().to_string(), target.name.clone()], None, true);
    for (i, r) in source.relations().iter().enumerate() {
        let img = target.evaluate(r, images);
        let residue = (!img.is_zero()).then(|| target.display(&img));
        cert.record(format!("relation {}: {}", i, source.display(r)), None, residue);
    }
    if target.is_normal(&Word::empty()) {
        cert.note(format!("1 is a normal word of {}, so the target is nonzero", target.name));
    }
    if cert.passed {
        cert.note(format!("{} is nonzero", source.name()));
    }
    Ok(cert)
}
