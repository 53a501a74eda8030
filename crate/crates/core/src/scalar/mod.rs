//! Exact scalars: rational functions over ℚ in canonical reduced form.

mod expr;
pub mod poly;

pub use expr::{parse_scalar, ParseError};
pub use poly::{var, var_name, Mono, Poly, Var};

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("denominator vanishes at the given assignment")]
    DenominatorVanishes,
    #[error("parameter `{0}` has no assigned value")]
    MissingParameter(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Element of ℚ(params). Constants take the fast path; everything else is
/// `num/den` with gcd 1 and monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Frac(Arc<(Poly, Poly)>),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn rat(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    pub fn param(name: &str) -> Self {
        Scalar::Frac(Arc::new((Poly::var(var(name)), Poly::one())))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_parts(p, Poly::one())
    }

    /// Build `num/den` and bring it to canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        if let (Some(a), Some(b)) = (num.as_constant(), den.as_constant()) {
            return Scalar::Rat(a / b);
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = poly::gcd(&num, &den);
            if g.as_constant().is_some() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let lc = den.lc();
        let inv = BigRational::one() / lc;
        let num = num.scale(&inv);
        let den = den.scale(&inv);
        if let (Some(a), Some(b)) = (num.as_constant(), den.as_constant()) {
            return Scalar::Rat(a / b);
        }
        Scalar::Frac(Arc::new((num, den)))
    }

    pub fn numer(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::constant(r.clone()),
            Scalar::Frac(f) => f.0.clone(),
        }
    }

    pub fn denom(&self) -> Poly {
        match self {
            Scalar::Rat(_) => Poly::one(),
            Scalar::Frac(f) => f.1.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Frac(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Frac(f) => Some(Scalar::from_parts(f.1.clone(), f.0.clone())),
        }
    }

    pub fn pow(&self, e: i32) -> Scalar {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    pub fn params(&self) -> Vec<String> {
        match self {
            Scalar::Rat(_) => Vec::new(),
            Scalar::Frac(f) => {
                let mut vs = f.0.vars();
                vs.extend(f.1.vars());
                vs.sort_unstable();
                vs.dedup();
                vs.into_iter().map(var_name).collect()
            }
        }
    }

    /// Evaluate at a rational point.
    pub fn specialize(&self, assignment: &BTreeMap<String, BigRational>) -> Result<BigRational, ScalarError> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Frac(f) => specialize_fraction(&f.0, &f.1, assignment),
        }
    }

    /// Substitute rational values for some parameters, keeping the rest symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<String, BigRational>) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Frac(f) => {
                let n = substitute_poly(&f.0, assignment);
                let d = substitute_poly(&f.1, assignment);
                if d.is_zero() {
                    return Err(ScalarError::DenominatorVanishes);
                }
                Ok(Scalar::from_parts(n, d))
            }
        }
    }
}

fn substitute_poly(p: &Poly, assignment: &BTreeMap<String, BigRational>) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        let mut term = Poly::constant(c.clone());
        for &(v, e) in m.0.iter() {
            match assignment.get(&var_name(v)) {
                Some(x) => term = term.scale(&num_traits::pow(x.clone(), e as usize)),
                None => term = term.mul_term(&Mono::var(v, e), &BigRational::one()),
            }
        }
        out = out.add(&term);
    }
    out
}

/// Evaluate a not-necessarily-reduced fraction `num/den`.
pub fn specialize_fraction(
    num: &Poly,
    den: &Poly,
    assignment: &BTreeMap<String, BigRational>,
) -> Result<BigRational, ScalarError> {
    let mut missing = None;
    let look = |v: Var| {
        let name = var_name(v);
        assignment.get(&name).cloned()
    };
    for v in num.vars().into_iter().chain(den.vars()) {
        if look(v).is_none() {
            missing = Some(var_name(v));
        }
    }
    if let Some(m) = missing {
        return Err(ScalarError::MissingParameter(m));
    }
    let n = num.eval(&look).unwrap();
    let d = den.eval(&look).unwrap();
    if d.is_zero() {
        return Err(ScalarError::DenominatorVanishes);
    }
    Ok(n / d)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ if self.is_zero() => rhs.clone(),
            _ if rhs.is_zero() => self.clone(),
            _ => {
                let (an, ad) = (self.numer(), self.denom());
                let (bn, bd) = (rhs.numer(), rhs.denom());
                if ad == bd {
                    Scalar::from_parts(an.add(&bn), ad)
                } else {
                    Scalar::from_parts(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ if self.is_zero() || rhs.is_zero() => Scalar::zero(),
            (Scalar::Rat(a), Scalar::Frac(f)) | (Scalar::Frac(f), Scalar::Rat(a)) => {
                Scalar::Frac(Arc::new((f.0.scale(a), f.1.clone())))
            }
            _ => Scalar::from_parts(self.numer().mul(&rhs.numer()), self.denom().mul(&rhs.denom())),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Frac(f) => Scalar::Frac(Arc::new((f.0.neg(), f.1.clone()))),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", poly::fmt_rat(r)),
            Scalar::Frac(p) => {
                if p.1.as_constant().is_some() {
                    if p.0.terms.len() == 1 {
                        write!(f, "{}", p.0)
                    } else {
                        write!(f, "({})", p.0)
                    }
                } else {
                    write!(f, "({})/({})", p.0, p.1)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Scalar {
    /// Display suitable for embedding inside a product.
    pub fn is_negative_constant(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}
