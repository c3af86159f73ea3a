use std::fmt::Debug;

use super::{GaussianRational, QuotientRingElement};
use crate::error::Error;

/// The operations the witness and lemma checks need from an exact ring.
pub trait RingScalar: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, k: i64) -> Result<Self, Error>;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl RingScalar for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }
    fn one_like(&self) -> Self {
        GaussianRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, k: i64) -> Result<Self, Error> {
        GaussianRational::pow(self, k)
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl RingScalar for QuotientRingElement {
    fn zero_like(&self) -> Self {
        QuotientRingElement::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        QuotientRingElement::one(self.modulus())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, k: i64) -> Result<Self, Error> {
        QuotientRingElement::pow(self, k)
    }
    fn is_zero(&self) -> bool {
        QuotientRingElement::is_zero(self)
    }
}
