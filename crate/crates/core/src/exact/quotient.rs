use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{RatMatrix, Rational};
use crate::error::Error;

/// The defining polynomial `t^m - c` of the ring `Q[t]/(t^m - c)`.
///
/// Irreducibility is never tested: an identity that holds in the quotient
/// holds after substituting any complex root of `t^m - c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Modulus {
    pub m: usize,
    pub c: Rational,
}

impl Modulus {
    pub fn new(m: usize, c: Rational) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidInput(
                "quotient modulus degree must be positive".into(),
            ));
        }
        Ok(Modulus { m, c })
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = -&self.c;
        if neg.is_negative() {
            write!(f, "t^{} - {}", self.m, self.c)
        } else {
            write!(f, "t^{} + {}", self.m, neg)
        }
    }
}

/// `c_0 + c_1 t + … + c_{m-1} t^{m-1}` in `Q[t]/(t^m - c)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement")]
pub struct QuotientRingElement {
    modulus: Modulus,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawElement {
    modulus: Modulus,
    coeffs: Vec<Rational>,
}

impl TryFrom<RawElement> for QuotientRingElement {
    type Error = Error;

    fn try_from(raw: RawElement) -> Result<Self, Error> {
        if raw.modulus.m == 0 || raw.coeffs.len() != raw.modulus.m {
            return Err(Error::Parse(format!(
                "expected {} coefficients, found {}",
                raw.modulus.m,
                raw.coeffs.len()
            )));
        }
        Ok(QuotientRingElement {
            modulus: raw.modulus,
            coeffs: raw.coeffs,
        })
    }
}

impl QuotientRingElement {
    /// Builds an element from an arbitrary-length coefficient list,
    /// reducing with `t^m = c`.
    pub fn from_coeffs(modulus: &Modulus, coeffs: Vec<Rational>) -> Self {
        let m = modulus.m;
        let mut out = vec![Rational::zero(); m];
        for (k, a) in coeffs.into_iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let wraps = (k / m) as i64;
            let factor = modulus.c.pow(wraps).expect("nonnegative exponent");
            out[k % m] += a * factor;
        }
        QuotientRingElement {
            modulus: modulus.clone(),
            coeffs: out,
        }
    }

    pub fn constant(modulus: &Modulus, a: Rational) -> Self {
        Self::from_coeffs(modulus, vec![a])
    }

    pub fn zero(modulus: &Modulus) -> Self {
        Self::constant(modulus, Rational::zero())
    }

    pub fn one(modulus: &Modulus) -> Self {
        Self::constant(modulus, Rational::one())
    }

    /// The class of `t`.
    pub fn t(modulus: &Modulus) -> Self {
        Self::from_coeffs(modulus, vec![Rational::zero(), Rational::one()])
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuotientRingElement {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "quotient ring elements over different moduli"
        );
    }

    /// Matrix of multiplication by `self` on the basis `1, t, …, t^{m-1}`.
    fn multiplication_matrix(&self) -> RatMatrix {
        let m = self.modulus.m;
        let mut columns = Vec::with_capacity(m);
        let mut basis = Self::one(&self.modulus);
        let t = Self::t(&self.modulus);
        for _ in 0..m {
            columns.push((self * &basis).coeffs);
            basis = &basis * &t;
        }
        RatMatrix::from_fn(m, m, |r, c| columns[c][r].clone())
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        let rhs = Self::one(&self.modulus).coeffs;
        match self.multiplication_matrix().solve(&rhs) {
            Some(sol) => {
                let inv = QuotientRingElement {
                    modulus: self.modulus.clone(),
                    coeffs: sol,
                };
                debug_assert!((self * &inv).is_one());
                Ok(inv)
            }
            None => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Exact power; a negative exponent requires `self` to be invertible.
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one(&self.modulus);
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

/// Free-function form of [`QuotientRingElement::pow`].
pub fn quotient_pow(x: &QuotientRingElement, k: i64) -> Result<QuotientRingElement, Error> {
    x.pow(k)
}

impl fmt::Display for QuotientRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})t")?,
                _ => write!(f, "({a})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuotientRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod ({})", self, self.modulus)
    }
}

impl Add for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn add(self, rhs: &QuotientRingElement) -> QuotientRingElement {
        self.check_same(rhs);
        QuotientRingElement {
            modulus: self.modulus.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn sub(self, rhs: &QuotientRingElement) -> QuotientRingElement {
        self.check_same(rhs);
        QuotientRingElement {
            modulus: self.modulus.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn neg(self) -> QuotientRingElement {
        QuotientRingElement {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn mul(self, rhs: &QuotientRingElement) -> QuotientRingElement {
        self.check_same(rhs);
        let m = self.modulus.m;
        let mut full = vec![Rational::zero(); 2 * m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        // t^{m+k} = c t^k
        let (low, high) = full.split_at_mut(m);
        for (k, a) in high.iter().enumerate() {
            if !a.is_zero() {
                low[k] += a * &self.modulus.c;
            }
        }
        full.truncate(m);
        QuotientRingElement {
            modulus: self.modulus.clone(),
            coeffs: full,
        }
    }
}
