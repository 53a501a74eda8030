//! Sparse multivariate polynomials over ℚ with lexicographic term order.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

/// Index of a parameter in the process-wide registry.
pub type Var = u16;

struct Registry {
    names: Vec<String>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Registry { names: Vec::new() }))
}

/// Look up (or register) a parameter by name.
pub fn var(name: &str) -> Var {
    {
        let reg = registry().read().unwrap();
        if let Some(i) = reg.names.iter().position(|n| n == name) {
            return i as Var;
        }
    }
    let mut reg = registry().write().unwrap();
    if let Some(i) = reg.names.iter().position(|n| n == name) {
        return i as Var;
    }
    reg.names.push(name.to_string());
    (reg.names.len() - 1) as Var
}

pub fn var_name(v: Var) -> String {
    registry().read().unwrap().names[v as usize].clone()
}

/// A monomial: sorted (variable, exponent) pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub SmallVec<[(Var, u32); 3]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Mono(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|p| p.1).unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Mono(out)
    }

    /// `self / other` if divisible.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in self.0.iter() {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Remove variable `v`, returning its exponent.
    fn split(&self, v: Var) -> (u32, Mono) {
        let mut rest = self.clone();
        let mut e = 0;
        rest.0.retain(|p| {
            if p.0 == v {
                e = p.1;
                false
            } else {
                true
            }
        });
        (e, rest)
    }
}

/// Lexicographic order, smaller variable index is more significant.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => {
                    if x.0 != y.0 {
                        return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Poly { terms: vec![(Mono::var(v, 1), BigRational::one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn lc(&self) -> BigRational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigRational::zero)
    }

    fn from_map(map: BTreeMap<Mono, BigRational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, m: &Mono, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut map: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                let e = map.entry(m.mul(n)).or_insert_with(BigRational::zero);
                *e += c * d;
            }
        }
        Poly::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lc();
        self.scale(&(BigRational::one() / lc))
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.0.iter().map(|p| p.0)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficients as a polynomial in `v`: index = exponent.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut maps: Vec<BTreeMap<Mono, BigRational>> = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            *maps[e as usize].entry(rest).or_insert_with(BigRational::zero) += c;
        }
        maps.into_iter().map(Poly::from_map).collect()
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        if other.is_zero() {
            return None;
        }
        if let Some(c) = other.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let (lm, lc) = other.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (m, c) = rem.terms[0].clone();
            let t = m.div(&lm)?;
            let tc = c / &lc;
            rem = rem.sub(&other.mul_term(&t, &tc));
            quot = quot.add(&Poly { terms: vec![(t, tc)] });
        }
        Some(quot)
    }

    pub fn eval(&self, assign: &dyn Fn(Var) -> Option<BigRational>) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.0.iter() {
                let x = assign(v)?;
                t *= num_traits::pow(x, e as usize);
            }
            total += t;
        }
        Some(total)
    }
}

fn content_in(p: &Poly, v: Var) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.as_constant().is_some() {
            return Poly::one();
        }
    }
    g
}

fn prem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lcb = bc.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.coeffs_in(v).pop().unwrap();
        let shift = Mono::var(v, dr - db);
        r = r.mul(&lcb).sub(&b.mul(&lcr).mul_term(&shift, &BigRational::one()));
    }
    r
}

/// Monic gcd of two polynomials (recursive primitive remainder sequence).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let va = a.vars();
    let vb = b.vars();
    let x = *va.iter().chain(vb.iter()).min().unwrap();
    let a_has = va.contains(&x);
    let b_has = vb.contains(&x);
    if !a_has {
        return gcd(a, &content_in(b, x));
    }
    if !b_has {
        return gcd(&content_in(a, x), b);
    }
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(x) < q.degree_in(x) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = prem(&p, &q, x);
        p = q;
        if r.is_zero() {
            q = r;
        } else if r.degree_in(x) == 0 {
            // remainder free of x: the primitive gcd is trivial
            p = Poly::one();
            q = Poly::zero();
        } else {
            let c = content_in(&r, x);
            q = r.div_exact(&c).expect("content divides");
        }
    }
    let g = if p.degree_in(x) == 0 {
        Poly::one()
    } else {
        let c = content_in(&p, x);
        p.div_exact(&c).expect("content divides")
    };
    gcd(&ca, &cb).mul(&g).monic()
}

pub(crate) fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| if e == 1 { var_name(v) } else { format!("{}^{}", var_name(v), e) })
                .collect();
            if m.is_one() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat_from_int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn p(terms: &[(i64, &[(Var, u32)])]) -> Poly {
        let mut out = Poly::zero();
        for (c, m) in terms {
            let mut mono = Mono::one();
            for &(v, e) in m.iter() {
                mono = mono.mul(&Mono::var(v, e));
            }
            out = out.add(&Poly { terms: vec![(mono, rat_from_int(*c))] });
        }
        out
    }

    #[test]
    fn gcd_of_products() {
        let x = var("pt_x");
        let y = var("pt_y");
        let f = p(&[(1, &[(x, 1)]), (1, &[(y, 1)])]);
        let g = p(&[(1, &[(x, 1)]), (-1, &[(y, 2)])]);
        let h = p(&[(2, &[(x, 2)]), (3, &[])]);
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(gcd(&a, &b), f.monic());
        assert_eq!(gcd(&g, &h), Poly::one());
    }

    #[test]
    fn exact_division_roundtrip() {
        let x = var("pt_x");
        let y = var("pt_y");
        let f = p(&[(3, &[(x, 2), (y, 1)]), (-1, &[(y, 3)]), (5, &[])]);
        let g = p(&[(1, &[(x, 1)]), (2, &[(y, 1)])]);
        assert_eq!(f.mul(&g).div_exact(&g), Some(f.clone()));
        assert_eq!(f.div_exact(&g), None);
    }
}
