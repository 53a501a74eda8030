//! Univariate polynomials with `Scalar` coefficients, used for invariant factors.

use crate::scalar::Scalar;

/// Coefficients from low to high degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<Scalar>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        UPoly(vec![c]).trim()
    }

    pub fn x() -> Self {
        UPoly(vec![Scalar::zero(), Scalar::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        UPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly(out).trim()
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        UPoly(self.0.iter().map(|a| a * c).collect()).trim()
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().inv().unwrap();
        let mut r = self.clone();
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.lc() * &inv;
            let shift = rd - dd;
            q[shift] = c.clone();
            let mut t = vec![Scalar::zero(); shift];
            t.extend(d.0.iter().map(|a| a * &c));
            r = r.sub(&UPoly(t));
        }
        (UPoly(q).trim(), r)
    }
}

impl std::fmt::Display for UPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let m = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", i),
            };
            parts.push(if m.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                m
            } else {
                format!("{}*{}", c, m)
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}
