//! Multiparametric deformations: `O_{p,q}(GL_n)` and the twisted function
//! algebras `O_{p,q}(S_2n)`.

use super::idx_name;
use crate::error::{Error, Result};
use crate::free::{FreeElement, Gen, Word};
use crate::hopf::Cogroupoid;
use crate::morphism::AlgebraMorphism;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::sync::Arc;

/// Square matrix with `p_ii = 1` and `p_ij p_ji = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AstMatrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl AstMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotAst("not square".into()));
        }
        let m = AstMatrix { n, entries: rows.into_iter().flatten().collect() };
        check_ast(&m)?;
        Ok(m)
    }

    pub fn trivial(n: usize) -> Self {
        AstMatrix { n, entries: vec![Scalar::one(); n * n] }
    }

    /// `p_ij` symbolic above the diagonal, `p_ji = p_ij⁻¹`.
    pub fn generic(n: usize, prefix: &str) -> Self {
        let mut m = Self::trivial(n);
        for i in 0..n {
            for j in i + 1..n {
                let p = Scalar::param(&format!("{}{}{}", prefix, i + 1, j + 1));
                m.entries[j * n + i] = p.inv().unwrap();
                m.entries[i * n + j] = p;
            }
        }
        m
    }

    /// Symmetric ±1 matrix with `-1` at the listed pairs.
    pub fn signs(n: usize, minus: &[(usize, usize)]) -> Self {
        let mut m = Self::trivial(n);
        for &(i, j) in minus {
            m.entries[i * n + j] = Scalar::int(-1);
            m.entries[j * n + i] = Scalar::int(-1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn is_plus_minus_one(&self) -> bool {
        let one = Scalar::one();
        let m1 = Scalar::int(-1);
        (0..self.n).all(|i| (0..self.n).all(|j| (*self.get(i, j) == one || *self.get(i, j) == m1) && self.get(i, j) == self.get(j, i)))
    }
}

pub fn check_ast(p: &AstMatrix) -> Result<()> {
    for i in 0..p.n {
        if !p.get(i, i).is_one() {
            return Err(Error::NotAst(format!("p_{}{} = {} ≠ 1", i + 1, i + 1, p.get(i, i))));
        }
        for j in 0..p.n {
            if !(p.get(i, j) * p.get(j, i)).is_one() {
                return Err(Error::NotAst(format!("p_{}{}·p_{}{} ≠ 1", i + 1, j + 1, j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

fn gen(g: usize) -> FreeElement {
    FreeElement::gen(g as Gen)
}

fn two(a: usize, b: usize) -> FreeElement {
    FreeElement::word(Word::from_slice(&[a as Gen, b as Gen]))
}

fn delta(i: usize, j: usize) -> Scalar {
    if i == j {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `O_{p,q}(GL_n)` on generators `x_ij`, `y_ij`.
pub fn make_gl_pq(p: &AstMatrix, q: &AstMatrix, name: &str) -> Result<Arc<Presentation>> {
    check_ast(p)?;
    check_ast(q)?;
    if p.size() != q.size() {
        return Err(Error::NotAst("sizes differ".into()));
    }
    let n = p.size();
    let x = |i: usize, j: usize| i * n + j;
    let y = |i: usize, j: usize| n * n + i * n + j;
    let mut rels = Vec::new();
    for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let c = p.get(k, i) * q.get(j, l);
                    rels.push(two(x(k, l), x(i, j)).sub(&two(x(i, j), x(k, l)).scale(&c)));
                    rels.push(two(y(k, l), y(i, j)).sub(&two(y(i, j), y(k, l)).scale(&c)));
                    let c2 = p.get(i, k) * q.get(l, j);
                    rels.push(two(y(k, l), x(i, j)).sub(&two(x(i, j), y(k, l)).scale(&c2)));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut r1 = FreeElement::scalar(-delta(i, j));
            let mut r2 = FreeElement::scalar(-delta(i, j));
            for k in 0..n {
                r1 = r1.add(&two(x(i, k), y(j, k)));
                r2 = r2.add(&two(x(k, i), y(k, j)));
            }
            rels.push(r1);
            rels.push(r2);
        }
    }
    let mut names: Vec<String> = (0..n * n).map(|g| idx_name("x", g / n, g % n)).collect();
    names.extend((0..n * n).map(|g| idx_name("y", g / n, g % n)));
    Ok(Arc::new(Presentation::with_names(name, names, rels)))
}

fn pure1(g: usize) -> Tensor {
    Tensor::pure(vec![Word::gen(g as Gen)], Scalar::one())
}

fn matrix_delta(n: usize, blocks: usize) -> Vec<Tensor> {
    let mut images = Vec::new();
    for b in 0..blocks {
        let off = b * n * n;
        for i in 0..n {
            for j in 0..n {
                let mut t = Tensor::zero();
                for k in 0..n {
                    t.add_term(vec![Word::gen((off + i * n + k) as Gen), Word::gen((off + k * n + j) as Gen)], Scalar::one());
                }
                images.push(t);
            }
        }
    }
    images
}

fn matrix_counit(n: usize, blocks: usize) -> Vec<Scalar> {
    (0..blocks * n * n).map(|g| delta((g % (n * n)) / n, g % n)).collect()
}

/// Cogroupoid on AST matrices with hom-algebras `O_{p,q}(GL_n)`.
pub fn gl_cogroupoid(objects: &[(String, AstMatrix)]) -> Result<Cogroupoid> {
    let k = objects.len();
    let n = objects.first().map_or(0, |o| o.1.size());
    let mut homs = Vec::new();
    for x in 0..k {
        let mut row = Vec::new();
        for y in 0..k {
            row.push(make_gl_pq(&objects[x].1, &objects[y].1, &format!("O({},{})", objects[x].0, objects[y].0))?);
        }
        homs.push(row);
    }
    let labels = objects.iter().map(|o| o.0.clone()).collect();
    Ok(Cogroupoid::build(
        "GL",
        labels,
        homs.clone(),
        |x, y, z| {
            AlgebraMorphism::new(
                format!("Δ^{}_{{{},{}}}", objects[z].0, objects[x].0, objects[y].0),
                homs[x][y].clone(),
                vec![homs[x][z].clone(), homs[z][y].clone()],
                matrix_delta(n, 2),
            )
        },
        |x| AlgebraMorphism::to_field(format!("ε_{}", objects[x].0), homs[x][x].clone(), matrix_counit(n, 2)),
        |x, y| {
            let mut images = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    images.push(pure1(n * n + j * n + i));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    images.push(pure1(j * n + i));
                }
            }
            AlgebraMorphism::new(format!("S_{{{},{}}}", objects[x].0, objects[y].0), homs[x][y].clone(), vec![homs[y][x].clone()], images)
                .into_anti()
        },
    ))
}

/// Index `i*` (0-based: the pair containing `i`).
pub fn star(i: usize) -> usize {
    i / 2
}

/// Index `i'` (0-based: the partner of `i` in its pair).
pub fn prime(i: usize) -> usize {
    i ^ 1
}

fn sign(a: usize, b: usize) -> i64 {
    if (a + b) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `R^{kl}_{ij}(p)`, all indices 0-based in `0..2n`.
pub fn r_tensor(p: &AstMatrix, k: usize, l: usize, i: usize, j: usize) -> Scalar {
    if star(i) != star(l) || star(j) != star(k) {
        return Scalar::zero();
    }
    let s1 = sign(i, l);
    let s2 = sign(j, k);
    &Scalar::int(1 + s1 + s2) + &(p.get(star(j), star(i)) * &Scalar::int(s1 * s2))
}

fn s2n_common(n2: usize) -> Vec<FreeElement> {
    let x = |i: usize, j: usize| i * n2 + j;
    let mut rels = Vec::new();
    for i in 0..n2 {
        for j in 0..n2 {
            for k in 0..n2 {
                rels.push(two(x(i, j), x(i, k)).sub(&gen(x(i, j)).scale(&delta(j, k))));
                rels.push(two(x(j, i), x(k, i)).sub(&gen(x(j, i)).scale(&delta(j, k))));
            }
        }
    }
    for i in 0..n2 {
        let mut r1 = FreeElement::scalar(Scalar::int(-1));
        let mut r2 = FreeElement::scalar(Scalar::int(-1));
        for l in 0..n2 {
            r1 = r1.add(&gen(x(i, l)));
            r2 = r2.add(&gen(x(l, i)));
        }
        rels.push(r1);
        rels.push(r2);
    }
    rels
}

fn s2n_names(n2: usize) -> Vec<String> {
    (0..n2 * n2).map(|g| idx_name("x", g / n2, g % n2)).collect()
}

fn check_pm(p: &AstMatrix) -> Result<()> {
    check_ast(p)?;
    if !p.is_plus_minus_one() {
        return Err(Error::NotPlusMinusOne(format!("{:?}", p)));
    }
    Ok(())
}

/// `O_{p,q}(S_2n)` with exchange relations
/// `Σ R^{kl}_{αβ}(p) x_{αi}x_{βj} = Σ R^{αβ}_{ij}(q) x_{kα}x_{lβ}`.
pub fn make_s2n(p: &AstMatrix, q: &AstMatrix, name: &str) -> Result<Arc<Presentation>> {
    check_pm(p)?;
    check_pm(q)?;
    let n2 = 2 * p.size();
    let x = |i: usize, j: usize| i * n2 + j;
    let mut rels = s2n_common(n2);
    for i in 0..n2 {
        for j in 0..n2 {
            for k in 0..n2 {
                for l in 0..n2 {
                    let mut r = FreeElement::zero();
                    for a in 0..n2 {
                        for b in 0..n2 {
                            let c = r_tensor(p, k, l, a, b);
                            if !c.is_zero() {
                                r = r.add(&two(x(a, i), x(b, j)).scale(&c));
                            }
                            let c = r_tensor(q, a, b, i, j);
                            if !c.is_zero() {
                                r = r.sub(&two(x(k, a), x(l, b)).scale(&c));
                            }
                        }
                    }
                    rels.push(r);
                }
            }
        }
    }
    Ok(Arc::new(Presentation::with_names(name, s2n_names(n2), rels)))
}

/// The same algebra with the four-term exchange relations written out.
pub fn make_s2n_explicit(p: &AstMatrix, q: &AstMatrix, name: &str) -> Result<Arc<Presentation>> {
    check_pm(p)?;
    check_pm(q)?;
    let n2 = 2 * p.size();
    let x = |i: usize, j: usize| i * n2 + j;
    let one = Scalar::one();
    let three = Scalar::int(3);
    let mut rels = s2n_common(n2);
    for i in 0..n2 {
        for j in 0..n2 {
            for k in 0..n2 {
                for l in 0..n2 {
                    let qq = q.get(star(i), star(j));
                    let pp = p.get(star(l), star(k));
                    let lhs = two(x(k, j), x(l, i))
                        .scale(&(&three + qq))
                        .add(&two(x(k, j), x(l, prime(i))).scale(&(&one - qq)))
                        .add(&two(x(k, prime(j)), x(l, i)).scale(&(&one - qq)))
                        .add(&two(x(k, prime(j)), x(l, prime(i))).scale(&(qq - &one)));
                    let rhs = two(x(l, i), x(k, j))
                        .scale(&(&three + pp))
                        .add(&two(x(prime(l), i), x(k, j)).scale(&(&one - pp)))
                        .add(&two(x(l, i), x(prime(k), j)).scale(&(&one - pp)))
                        .add(&two(x(prime(l), i), x(prime(k), j)).scale(&(pp - &one)));
                    rels.push(lhs.sub(&rhs));
                }
            }
        }
    }
    Ok(Arc::new(Presentation::with_names(name, s2n_names(n2), rels)))
}

/// Cogroupoid on ±1 AST matrices with hom-algebras `O_{p,q}(S_2n)`.
pub fn s2n_cogroupoid(objects: &[(String, AstMatrix)]) -> Result<Cogroupoid> {
    let k = objects.len();
    let n2 = objects.first().map_or(0, |o| 2 * o.1.size());
    let mut homs = Vec::new();
    for x in 0..k {
        let mut row = Vec::new();
        for y in 0..k {
            row.push(make_s2n(&objects[x].1, &objects[y].1, &format!("O_S({},{})", objects[x].0, objects[y].0))?);
        }
        homs.push(row);
    }
    let labels = objects.iter().map(|o| o.0.clone()).collect();
    Ok(Cogroupoid::build(
        "S2n",
        labels,
        homs.clone(),
        |x, y, z| {
            AlgebraMorphism::new(
                format!("Δ^{}_{{{},{}}}", objects[z].0, objects[x].0, objects[y].0),
                homs[x][y].clone(),
                vec![homs[x][z].clone(), homs[z][y].clone()],
                matrix_delta(n2, 1),
            )
        },
        |x| AlgebraMorphism::to_field(format!("ε_{}", objects[x].0), homs[x][x].clone(), matrix_counit(n2, 1)),
        |x, y| {
            let images = (0..n2 * n2).map(|g| pure1((g % n2) * n2 + g / n2)).collect();
            AlgebraMorphism::new(format!("S_{{{},{}}}", objects[x].0, objects[y].0), homs[x][y].clone(), vec![homs[y][x].clone()], images)
                .into_anti()
        },
    ))
}
