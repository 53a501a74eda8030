//! Finite groups, normalized 2-cocycles and the cocycle cogroupoid of a
//! group algebra. Every hom-algebra has the group elements as a basis.

use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen, Word};
use crate::hopf::Cogroupoid;
use crate::morphism::AlgebraMorphism;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::sync::Arc;

/// Group on `0..n` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    table: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let g = FiniteGroup { labels, table };
        if g.table.len() != n * n || g.table.iter().any(|&x| x >= n) {
            return Err(Error::Precondition("malformed multiplication table".into()));
        }
        for a in 0..n {
            if g.mul(0, a) != a || g.mul(a, 0) != a {
                return Err(Error::Precondition("element 0 is not the identity".into()));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::Precondition("multiplication is not associative".into()));
                    }
                }
            }
            if (0..n).all(|b| g.mul(a, b) != 0) {
                return Err(Error::Precondition(format!("{} has no inverse", g.labels[a])));
            }
        }
        Ok(g)
    }

    /// `Z/n₁ × … × Z/n_k`, elements in mixed radix (first factor slowest).
    pub fn abelian(orders: &[usize]) -> Self {
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| {
            let mut d = vec![0; orders.len()];
            for i in (0..orders.len()).rev() {
                d[i] = x % orders[i];
                x /= orders[i];
            }
            d
        };
        let index = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (x, o)| acc * o + x);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let s: Vec<usize> = digits(a).iter().zip(digits(b)).zip(orders).map(|((x, y), o)| (x + y) % o).collect();
                table.push(index(&s));
            }
        }
        let labels = (0..n)
            .map(|a| if a == 0 { "e".to_string() } else { format!("g{}", digits(a).iter().map(|d| d.to_string()).collect::<String>()) })
            .collect();
        FiniteGroup { labels, table }
    }

    /// The Klein four-group with elements `e, u, v, w` (u = (0,1), v = (1,0)).
    pub fn klein() -> Self {
        let mut g = Self::abelian(&[2, 2]);
        g.labels = vec!["e".into(), "u".into(), "v".into(), "w".into()];
        g
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    /// Basis word of an element in a hom-algebra: the identity is the empty word.
    pub fn word(&self, a: usize) -> Word {
        if a == 0 {
            Word::empty()
        } else {
            Word::gen((a - 1) as Gen)
        }
    }

    pub fn element(&self, w: &Word) -> usize {
        match w.as_slice() {
            [] => 0,
            [g] => *g as usize + 1,
            _ => panic!("not a basis word"),
        }
    }
}

/// A normalized 2-cocycle `σ: G × G → k*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCocycle {
    pub group: FiniteGroup,
    values: Vec<Scalar>,
}

impl GroupCocycle {
    pub fn new(group: FiniteGroup, values: Vec<Scalar>) -> Result<Self> {
        let n = group.order();
        if values.len() != n * n {
            return Err(Error::NotACocycle("table has the wrong size".into()));
        }
        let s = GroupCocycle { group, values };
        s.check()?;
        Ok(s)
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let n = group.order();
        GroupCocycle { group, values: vec![Scalar::one(); n * n] }
    }

    pub fn from_fn(group: FiniteGroup, f: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        let n = group.order();
        let values = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::new(group, values)
    }

    /// On the Klein group: `σ((a,b),(c,d)) = (-1)^{bc}`.
    pub fn klein_bilinear() -> Self {
        let g = FiniteGroup::klein();
        // element index 2a + b
        Self::from_fn(g, |x, y| if (x % 2) * (y / 2) == 1 { Scalar::int(-1) } else { Scalar::one() }).unwrap()
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.values[a * self.group.order() + b]
    }

    fn check(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order();
        for a in 0..n {
            if !self.get(0, a).is_one() || !self.get(a, 0).is_one() {
                return Err(Error::NotACocycle(format!("σ not normalized at {}", g.labels[a])));
            }
            for b in 0..n {
                if self.get(a, b).is_zero() {
                    return Err(Error::NotACocycle(format!("σ({},{}) = 0", g.labels[a], g.labels[b])));
                }
                for c in 0..n {
                    let l = self.get(a, b) * self.get(g.mul(a, b), c);
                    let r = self.get(b, c) * self.get(a, g.mul(b, c));
                    if l != r {
                        return Err(Error::NotACocycle(format!(
                            "identity fails at ({},{},{})",
                            g.labels[a], g.labels[b], g.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `H(σ,τ)`: basis `G`, product `g·h = σ(g,h)τ(g,h)⁻¹ gh`.
pub fn make_group_cocycle_algebra(sigma: &GroupCocycle, tau: &GroupCocycle, name: &str) -> Result<Arc<Presentation>> {
    if sigma.group != tau.group {
        return Err(Error::Precondition("cocycles live on different groups".into()));
    }
    let g = &sigma.group;
    let n = g.order();
    let mut rels = Vec::new();
    for a in 1..n {
        for b in 1..n {
            let c = sigma.get(a, b) * &tau.get(a, b).inv().unwrap();
            let lhs = FreeElement::word(g.word(a).concat(&g.word(b)));
            rels.push(lhs.sub(&FreeElement::term(g.word(g.mul(a, b)), c)));
        }
    }
    Ok(Arc::new(Presentation::with_names(name, g.labels[1..].to_vec(), rels)))
}

/// Cocycle cogroupoid on the given cocycles.
pub fn group_cocycle_cogroupoid(objects: &[(String, GroupCocycle)]) -> Result<Cogroupoid> {
    let k = objects.len();
    let group = objects.first().map(|o| o.1.group.clone()).ok_or_else(|| Error::Precondition("no objects".into()))?;
    let mut homs = Vec::new();
    for x in 0..k {
        let mut row = Vec::new();
        for y in 0..k {
            row.push(make_group_cocycle_algebra(&objects[x].1, &objects[y].1, &format!("H({},{})", objects[x].0, objects[y].0))?);
        }
        homs.push(row);
    }
    let n = group.order();
    let labels = objects.iter().map(|o| o.0.clone()).collect();
    let mut c = Cogroupoid::build(
        "cocycle",
        labels,
        homs.clone(),
        |x, y, z| {
            let images = (1..n).map(|a| Tensor::pure(vec![group.word(a), group.word(a)], Scalar::one())).collect();
            AlgebraMorphism::new(
                format!("Δ^{}_{{{},{}}}", objects[z].0, objects[x].0, objects[y].0),
                homs[x][y].clone(),
                vec![homs[x][z].clone(), homs[z][y].clone()],
                images,
            )
        },
        |x| AlgebraMorphism::to_field(format!("ε_{}", objects[x].0), homs[x][x].clone(), vec![Scalar::one(); n - 1]),
        |x, y| {
            // S_{σ,τ}(g) = σ(g,g⁻¹) τ(g⁻¹,g)⁻¹ g⁻¹
            let (s, t) = (&objects[x].1, &objects[y].1);
            let images = (1..n)
                .map(|a| {
                    let b = group.inv(a);
                    let c = s.get(a, b) * &t.get(b, a).inv().unwrap();
                    Tensor::pure(vec![group.word(b)], c)
                })
                .collect();
            AlgebraMorphism::new(format!("S_{{{},{}}}", objects[x].0, objects[y].0), homs[x][y].clone(), vec![homs[y][x].clone()], images)
                .into_anti()
        },
    );
    c.notes.push(format!("group of order {}; hom-algebras have dimension {}", n, n));
    Ok(c)
}
