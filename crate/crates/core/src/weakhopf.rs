//! The weak Hopf algebra `⊕_{i,j} C(i,j)` of a finite family of objects
//! of a cogroupoid, with a table-level check of the weak Hopf axioms.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::free::Word;
use crate::hopf::Cogroupoid;
use crate::scalar::Scalar;
use crate::tensor::{Factor, Space, Tensor};
use std::collections::BTreeMap;

/// Axiom list recorded in every certificate.
pub const AXIOMS: &str = "weak-hopf/BNS-1: Δ multiplicative; coassociative; counit; \
ε(abc) = ε(ab₁)ε(b₂c) = ε(ab₂)ε(b₁c); (Δ⊗1)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1); \
a₁S(a₂) = ε_t(a); S(a₁)a₂ = ε_s(a); S(a₁)a₂S(a₃) = S(a)";

/// A basis element `w ∈ C(i,j)`, objects counted in the chosen list.
pub type Basis = (usize, usize, Word);

/// Element of `H^{⊗r}` in the product basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multi(BTreeMap<Vec<Basis>, Scalar>);

impl Multi {
    pub fn zero() -> Self {
        Multi(BTreeMap::new())
    }

    pub fn basis(b: Basis) -> Self {
        let mut m = Multi::zero();
        m.add_term(vec![b], Scalar::one());
        m
    }

    pub fn add_term(&mut self, k: Vec<Basis>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(k.clone()).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, o: &Multi, c: &Scalar) {
        for (k, d) in &o.0 {
            self.add_term(k.clone(), c * d);
        }
    }

    pub fn add(&self, o: &Multi) -> Multi {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::one());
        r
    }

    pub fn sub(&self, o: &Multi) -> Multi {
        let mut r = self.clone();
        r.add_scaled(o, &-Scalar::one());
        r
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Basis>, &Scalar)> {
        self.0.iter()
    }

    pub fn otimes(&self, o: &Multi) -> Multi {
        let mut r = Multi::zero();
        for (a, c) in &self.0 {
            for (b, d) in &o.0 {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                r.add_term(k, c * d);
            }
        }
        r
    }

    /// Coefficient of a single-factor element as a scalar when it is a
    /// multiple of the empty key.
    fn scalar(&self) -> Scalar {
        self.0.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// `H = ⊕_{i,j} C(X_i, X_j)` with blockwise structure maps.
#[derive(Clone, Debug)]
pub struct WeakHopfData {
    pub cogroupoid: Cogroupoid,
    pub objects: Vec<usize>,
    /// Normal words spanning each block `(i,j)`; the full basis when finite.
    pub blocks: Vec<Vec<Vec<Word>>>,
    pub finite: bool,
    cap: u32,
    spaces: Vec<Vec<Space>>,
}

/// Assemble the weak Hopf algebra of `objects`. Blocks whose reduction
/// system closes with no normal words in degree `d + 1` are taken whole;
/// otherwise each block is represented by its words of degree ≤ 1 and the
/// checks run at level `d`.
pub fn assemble_weak_hopf(c: &Cogroupoid, objects: &[usize], d: u32) -> Result<WeakHopfData> {
    if objects.is_empty() || objects.iter().any(|&o| o >= c.len()) {
        return Err(Error::Precondition("object list must be a nonempty subset".into()));
    }
    let n = objects.len();
    let mut finite = true;
    for &x in objects {
        for &y in objects {
            let p = c.hom(x, y);
            let e = p.engine(d + 1)?;
            finite &= p.is_complete_at(d + 1) && e.normal_words(d + 1)[d as usize + 1].is_empty();
        }
    }
    let cap = if finite { d + 1 } else { d.max(3) };
    let top = if finite { d } else { 1 };
    let mut blocks = vec![vec![Vec::new(); n]; n];
    let mut spaces = Vec::new();
    for (i, &x) in objects.iter().enumerate() {
        let mut row = Vec::new();
        for (j, &y) in objects.iter().enumerate() {
            let p = c.hom(x, y);
            blocks[i][j] = p.engine(cap)?.normal_words(top).into_iter().flatten().collect();
            row.push(Space(vec![Factor::algebra(p, cap)?]));
        }
        spaces.push(row);
    }
    Ok(WeakHopfData { cogroupoid: c.clone(), objects: objects.to_vec(), blocks, finite, cap, spaces })
}

impl WeakHopfData {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().flatten().map(|b| b.len()).sum()
    }

    pub fn basis(&self) -> Vec<Basis> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.extend(self.blocks[i][j].iter().map(|w| (i, j, w.clone())));
            }
        }
        out
    }

    /// `1 = Σ_{i,j} 1_{(i,j)}`.
    pub fn unit(&self) -> Multi {
        let mut m = Multi::zero();
        for i in 0..self.len() {
            for j in 0..self.len() {
                m.add_term(vec![(i, j, Word::empty())], Scalar::one());
            }
        }
        m
    }

    fn block(&self, i: usize, j: usize, t: &Tensor) -> Multi {
        let mut m = Multi::zero();
        for (k, c) in self.spaces[i][j].normalize(t).terms() {
            m.add_term(vec![(i, j, k[0].clone())], c.clone());
        }
        m
    }

    fn mul_basis(&self, a: &Basis, b: &Basis) -> Multi {
        if (a.0, a.1) != (b.0, b.1) {
            return Multi::zero();
        }
        self.block(a.0, a.1, &Tensor::pure(vec![a.2.concat(&b.2)], Scalar::one()))
    }

    /// Factorwise product in `H^{⊗r}`.
    pub fn mul(&self, x: &Multi, y: &Multi) -> Multi {
        let mut out = Multi::zero();
        for (ka, ca) in x.terms() {
            for (kb, cb) in y.terms() {
                let mut acc = Multi(BTreeMap::from([(Vec::new(), ca * cb)]));
                for (a, b) in ka.iter().zip(kb) {
                    acc = acc.otimes(&self.mul_basis(a, b));
                    if acc.is_zero() {
                        break;
                    }
                }
                out.add_scaled(&acc, &Scalar::one());
            }
        }
        out
    }

    pub fn delta_basis(&self, a: &Basis) -> Multi {
        let (i, j) = (a.0, a.1);
        let (x, y) = (self.objects[i], self.objects[j]);
        let mut out = Multi::zero();
        for (k, &z) in self.objects.iter().enumerate() {
            let dl = self.cogroupoid.delta(x, y, z);
            let sp = Space(vec![self.spaces[i][k].0[0].clone(), self.spaces[k][j].0[0].clone()]);
            for (key, c) in dl.apply_word(&a.2, &sp).terms() {
                out.add_term(vec![(i, k, key[0].clone()), (k, j, key[1].clone())], c.clone());
            }
        }
        out
    }

    pub fn counit_basis(&self, a: &Basis) -> Scalar {
        if a.0 != a.1 {
            return Scalar::zero();
        }
        self.cogroupoid.counit(self.objects[a.0]).apply_word(&a.2, &Space(vec![])).to_scalar()
    }

    pub fn antipode_basis(&self, a: &Basis) -> Multi {
        let s = self.cogroupoid.antipode(self.objects[a.0], self.objects[a.1]);
        let img = s.apply_word(&a.2, &self.spaces[a.1][a.0]);
        let mut m = Multi::zero();
        for (k, c) in img.terms() {
            m.add_term(vec![(a.1, a.0, k[0].clone())], c.clone());
        }
        m
    }

    /// Apply a basis map at factor `pos` of every term.
    fn at(&self, x: &Multi, pos: usize, f: impl Fn(&Basis) -> Multi) -> Multi {
        let mut out = Multi::zero();
        for (k, c) in x.terms() {
            let img = f(&k[pos]);
            for (ik, ic) in img.terms() {
                let mut nk = k[..pos].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(k[pos + 1..].iter().cloned());
                out.add_term(nk, c * ic);
            }
        }
        out
    }

    pub fn delta(&self, x: &Multi, pos: usize) -> Multi {
        self.at(x, pos, |b| self.delta_basis(b))
    }

    pub fn antipode(&self, x: &Multi, pos: usize) -> Multi {
        self.at(x, pos, |b| self.antipode_basis(b))
    }

    pub fn counit(&self, x: &Multi, pos: usize) -> Multi {
        self.at(x, pos, |b| Multi(BTreeMap::from([(Vec::new(), self.counit_basis(b))])))
    }

    /// Multiply factors `pos` and `pos + 1`.
    pub fn merge(&self, x: &Multi, pos: usize) -> Multi {
        let mut out = Multi::zero();
        for (k, c) in x.terms() {
            let p = self.mul_basis(&k[pos], &k[pos + 1]);
            for (pk, pc) in p.terms() {
                let mut nk = k[..pos].to_vec();
                nk.extend(pk.iter().cloned());
                nk.extend(k[pos + 2..].iter().cloned());
                out.add_term(nk, c * pc);
            }
        }
        out
    }

    /// `ε_t(a) = ε(1₁ a) 1₂`.
    pub fn eps_t(&self, a: &Multi) -> Multi {
        let d1 = self.delta(&self.unit(), 0);
        let t = self.mul(&d1, &a.otimes(&self.unit()));
        self.counit(&t, 0)
    }

    /// `ε_s(a) = 1₁ ε(a 1₂)`.
    pub fn eps_s(&self, a: &Multi) -> Multi {
        let d1 = self.delta(&self.unit(), 0);
        let t = self.mul(&self.unit().otimes(a), &d1);
        self.counit(&t, 1)
    }

    pub fn display(&self, x: &Multi) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms()
            .map(|(k, c)| {
                let f: Vec<String> = k
                    .iter()
                    .map(|(i, j, w)| {
                        let p = self.cogroupoid.hom(self.objects[*i], self.objects[*j]);
                        format!("{}^({},{})", if w.is_empty() { "1".into() } else { p.word_text(w) }, i + 1, j + 1)
                    })
                    .collect();
                format!("{}·{}", c, f.join("⊗"))
            })
            .collect();
        parts.join(" + ")
    }
}

fn diff(w: &WeakHopfData, a: &Multi, b: &Multi) -> Option<String> {
    let r = a.sub(b);
    (!r.is_zero()).then(|| w.display(&r))
}

/// Verify the weak Hopf axioms on every basis element (every pair and
/// triple where the axiom involves several), exactly when the blocks are
/// finite-dimensional.
pub fn check_weak_hopf(w: &WeakHopfData) -> Result<Certificate> {
    let level = (!w.finite).then_some(w.cap);
    let names: Vec<String> = w.objects.iter().map(|&o| w.cogroupoid.objects[o].clone()).collect();
    let mut cert = Certificate::new("weak Hopf algebra", vec![w.cogroupoid.name.clone(), names.join(",")], level, w.finite);
    cert.note(AXIOMS);
    cert.note(format!("dimension {}{}", w.dim(), if w.finite { "" } else { " (words of degree ≤ 1 per block)" }));
    let basis = w.basis();
    let one = w.unit();
    let el = |b: &Basis| Multi::basis(b.clone());
    let first_bad = |label: String, cert: &mut Certificate, found: Option<String>| {
        cert.record(label, level, found);
    };

    let mut bad = None;
    'mult: for a in &basis {
        for b in &basis {
            let lhs = w.delta(&w.mul(&el(a), &el(b)), 0);
            let rhs = w.mul(&w.delta_basis(a), &w.delta_basis(b));
            if let Some(r) = diff(w, &lhs, &rhs) {
                bad = Some(r);
                break 'mult;
            }
        }
    }
    first_bad(format!("Δ(ab) = Δ(a)Δ(b) on {} pairs", basis.len() * basis.len()), &mut cert, bad);

    let mut coassoc = None;
    let mut counit = None;
    for a in &basis {
        let d = w.delta_basis(a);
        if coassoc.is_none() {
            coassoc = diff(w, &w.delta(&d, 0), &w.delta(&d, 1));
        }
        if counit.is_none() {
            counit = diff(w, &w.counit(&d, 0), &el(a)).or_else(|| diff(w, &w.counit(&d, 1), &el(a)));
        }
    }
    first_bad("(Δ⊗1)Δ = (1⊗Δ)Δ".into(), &mut cert, coassoc);
    first_bad("(ε⊗1)Δ = id = (1⊗ε)Δ".into(), &mut cert, counit);

    let eps = |x: &Multi| -> Scalar { w.counit(x, 0).scalar() };
    let mut weak_counit = None;
    'eps: for b in &basis {
        let db = w.delta_basis(b);
        for a in &basis {
            for c in &basis {
                let abc = eps(&w.mul(&w.mul(&el(a), &el(b)), &el(c)));
                let mut first = Scalar::zero();
                let mut second = Scalar::zero();
                for (k, coef) in db.terms() {
                    let (b1, b2) = (el(&k[0]), el(&k[1]));
                    first = &first + &(coef * &(&eps(&w.mul(&el(a), &b1)) * &eps(&w.mul(&b2, &el(c)))));
                    second = &second + &(coef * &(&eps(&w.mul(&el(a), &b2)) * &eps(&w.mul(&b1, &el(c)))));
                }
                if abc != first || abc != second {
                    weak_counit = Some(format!("a = {}, b = {}, c = {}: {} vs {} vs {}", w.display(&el(a)), w.display(&el(b)), w.display(&el(c)), abc, first, second));
                    break 'eps;
                }
            }
        }
    }
    first_bad(format!("ε(abc) = ε(ab₁)ε(b₂c) = ε(ab₂)ε(b₁c) on {} triples", basis.len().pow(3)), &mut cert, weak_counit);

    let d1 = w.delta(&one, 0);
    let dd1 = w.delta(&d1, 0);
    let l = w.mul(&d1.otimes(&one), &one.otimes(&d1));
    let r = w.mul(&one.otimes(&d1), &d1.otimes(&one));
    first_bad("(Δ⊗1)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1))".into(), &mut cert, diff(w, &dd1, &l));
    first_bad("(Δ⊗1)Δ(1) = (1⊗Δ(1))(Δ(1)⊗1)".into(), &mut cert, diff(w, &dd1, &r));

    let (mut at, mut as_, mut sas) = (None, None, None);
    for a in &basis {
        let d = w.delta_basis(a);
        let x = el(a);
        if at.is_none() {
            at = diff(w, &w.merge(&w.antipode(&d, 1), 0), &w.eps_t(&x)).map(|r| format!("at {}: {}", w.display(&x), r));
        }
        if as_.is_none() {
            as_ = diff(w, &w.merge(&w.antipode(&d, 0), 0), &w.eps_s(&x)).map(|r| format!("at {}: {}", w.display(&x), r));
        }
        if sas.is_none() {
            let d3 = w.delta(&d, 1);
            let t = w.antipode(&w.antipode(&d3, 0), 2);
            let lhs = w.merge(&w.merge(&t, 0), 0);
            sas = diff(w, &lhs, &w.antipode_basis(a)).map(|r| format!("at {}: {}", w.display(&x), r));
        }
    }
    first_bad("a₁S(a₂) = ε_t(a)".into(), &mut cert, at);
    first_bad("S(a₁)a₂ = ε_s(a)".into(), &mut cert, as_);
    first_bad("S(a₁)a₂S(a₃) = S(a)".into(), &mut cert, sas);

    let trivial = one.otimes(&one);
    if w.len() > 1 {
        cert.record("Δ(1) ≠ 1⊗1", level, (d1 == trivial).then(|| "Δ(1) = 1⊗1".to_string()));
    } else {
        cert.record("Δ(1) = 1⊗1 for one object", level, diff(w, &d1, &trivial));
    }
    cert.record("(ε⊗1)Δ(1) = 1", level, diff(w, &w.counit(&d1, 0), &one));
    let e1 = eps(&one);
    let n = Scalar::int(w.len() as i64);
    cert.record("ε(1) = number of objects", level, (e1 != n).then(|| e1.to_string()));

    let (mut idem, mut commute, mut s2) = (None, None, None);
    for a in &basis {
        let x = el(a);
        let (t, s) = (w.eps_t(&x), w.eps_s(&x));
        if idem.is_none() {
            idem = diff(w, &w.eps_t(&t), &t).or_else(|| diff(w, &w.eps_s(&s), &s));
        }
        if commute.is_none() {
            for b in &basis {
                let sb = w.eps_s(&el(b));
                if let Some(r) = diff(w, &w.mul(&t, &sb), &w.mul(&sb, &t)) {
                    commute = Some(r);
                    break;
                }
            }
        }
        if s2.is_none() {
            let ss = w.antipode(&w.antipode_basis(a), 0);
            if ss.terms().any(|(k, _)| (k[0].0, k[0].1) != (a.0, a.1)) {
                s2 = Some(format!("S² moves {}", w.display(&x)));
            }
        }
    }
    first_bad("ε_t, ε_s idempotent".into(), &mut cert, idem);
    first_bad("images of ε_t and ε_s commute".into(), &mut cert, commute);
    first_bad("S² preserves each block".into(), &mut cert, s2);
    Ok(cert)
}
