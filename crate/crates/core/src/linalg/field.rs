//! Scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Only the two coefficient fields the library actually computes with are
//! supported. `FieldValue` is the tagged public form; the generic matrix
//! kernels work over the `Scalar` trait, implemented exactly twice.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Which coefficient field a matrix or module lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rational,
    Fp(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Fp(l) => write!(f, "F{l}"),
        }
    }
}

impl FieldKind {
    pub fn is_modular(&self) -> bool {
        matches!(self, FieldKind::Fp(_))
    }
}

/// A single field element, tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Rational(BigRational),
    Fp { value: u64, ell: u64 },
}

impl FieldValue {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldValue::Rational(_) => FieldKind::Rational,
            FieldValue::Fp { ell, .. } => FieldKind::Fp(*ell),
        }
    }

    pub fn from_int(n: i64, kind: FieldKind) -> Self {
        match kind {
            FieldKind::Rational => FieldValue::Rational(BigRational::from(BigInt::from(n))),
            FieldKind::Fp(ell) => {
                let v = n.rem_euclid(ell as i64) as u64;
                FieldValue::Fp { value: v, ell }
            }
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue in a prime field, carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElt {
    pub value: u64,
    pub ell: u64,
}

impl FpElt {
    pub fn new(value: i64, ell: u64) -> Self {
        debug_assert!(is_prime(ell));
        FpElt {
            value: value.rem_euclid(ell as i64) as u64,
            ell,
        }
    }
}

impl fmt::Display for FpElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The two coefficient fields, seen through one private interface so the
/// elimination kernels are written once.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(&self, n: i64) -> Self;
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(&self, n: i64) -> Self {
        BigRational::from(BigInt::from(n))
    }
}

impl Scalar for FpElt {
    fn zero_like(&self) -> Self {
        FpElt { value: 0, ell: self.ell }
    }
    fn one_like(&self) -> Self {
        FpElt { value: 1 % self.ell, ell: self.ell }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ell, other.ell);
        FpElt { value: (self.value + other.value) % self.ell, ell: self.ell }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ell, other.ell);
        FpElt { value: (self.value + self.ell - other.value) % self.ell, ell: self.ell }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ell, other.ell);
        FpElt { value: (self.value * other.value) % self.ell, ell: self.ell }
    }
    fn neg(&self) -> Self {
        FpElt { value: (self.ell - self.value) % self.ell, ell: self.ell }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: ell is prime.
        let mut result = 1u64;
        let mut base = self.value % self.ell;
        let mut exp = self.ell - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.ell;
            }
            base = base * base % self.ell;
            exp >>= 1;
        }
        Some(FpElt { value: result, ell: self.ell })
    }
    fn from_i64(&self, n: i64) -> Self {
        FpElt::new(n, self.ell)
    }
}

/// Reduce a rational with ell-free denominator into the prime field.
pub fn rational_mod(q: &BigRational, ell: u64) -> Result<FpElt> {
    let l = BigInt::from(ell);
    let num = q.numer().clone();
    let den = q.denom().clone();
    let den_red = ((&den % &l) + &l) % &l;
    let den_u: u64 = den_red
        .try_into()
        .map_err(|_| Error::Malformed("denominator reduction".into()))?;
    if den_u == 0 {
        return Err(Error::Malformed(format!(
            "denominator divisible by {ell} in rational reduction"
        )));
    }
    let num_red = ((num % &l) + &l) % &l;
    let num_u: u64 = num_red
        .try_into()
        .map_err(|_| Error::Malformed("numerator reduction".into()))?;
    let d = FpElt { value: den_u, ell };
    let inv = d.inv().expect("nonzero mod prime");
    Ok(FpElt { value: num_u * inv.value % ell, ell })
}

pub fn big_rational_from(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for ell in [2u64, 3, 5, 7, 11] {
            for v in 1..ell {
                let x = FpElt { value: v, ell };
                let i = x.inv().unwrap();
                assert_eq!(x.mul(&i).value, 1 % ell);
            }
        }
    }

    #[test]
    fn rational_reduction() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let r = rational_mod(&half, 5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(r.value, 3);
        assert!(rational_mod(&half, 2).is_err());
    }

    #[test]
    fn field_value_tags() {
        let q = FieldValue::from_int(-3, FieldKind::Rational);
        let f = FieldValue::from_int(-3, FieldKind::Fp(5));
        assert_eq!(q.kind(), FieldKind::Rational);
        assert_eq!(f, FieldValue::Fp { value: 2, ell: 5 });
    }
}
