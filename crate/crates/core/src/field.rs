//! Exact coefficient fields: prime fields `F_p` and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    /// `F_p` for a prime `p < 2^31`.
    Prime(u32),
    Rationals,
}

/// A field element. The variant always matches the owning field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Mod(u32),
    Rat(BigRational),
}

pub fn is_prime(n: u64) -> bool {
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

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if p >= (1 << 31) {
            return Err(AlgebraError::Unsupported(format!(
                "prime {p} exceeds the supported range"
            )));
        }
        Ok(CoefficientField::Prime(p as u32))
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Prime(p) => *p as u64,
            CoefficientField::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Prime(_) => Coeff::Mod(0),
            CoefficientField::Rationals => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Prime(_) => Coeff::Mod(1),
            CoefficientField::Rationals => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoefficientField::Prime(p) => Coeff::Mod(n.rem_euclid(*p as i64) as u32),
            CoefficientField::Rationals => Coeff::Rat(BigRational::from_integer(n.into())),
        }
    }

    /// Image of the rational `num/den` in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(AlgebraError::Parse("zero denominator".into()));
        }
        match self {
            CoefficientField::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u32().unwrap();
                let d = den.mod_floor(&pb).to_u32().unwrap();
                if d == 0 {
                    return Err(AlgebraError::Parse(format!(
                        "denominator {den} vanishes in GF({p})"
                    )));
                }
                Ok(self.mul(&Coeff::Mod(n), &self.inv(&Coeff::Mod(d))))
            }
            CoefficientField::Rationals => {
                Ok(Coeff::Rat(BigRational::new(num.clone(), den.clone())))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Mod(x) => *x == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Mod(x) => *x == 1,
            Coeff::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Mod(x)) => {
                Coeff::Mod(if *x == 0 { 0 } else { *p - *x })
            }
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Mod(x)) => {
                // Fermat: x^(p-2)
                self.pow(&Coeff::Mod(*x), *p as u64 - 2)
            }
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(x.recip()),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Writes `a` in the integer-or-fraction syntax accepted by the parser.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Mod(x) => x.to_string(),
            Coeff::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// True when the printed form carries a leading minus sign.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Mod(_) => false,
            Coeff::Rat(r) => r.is_negative(),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
            CoefficientField::Rationals => write!(f, "QQ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_elem(field: &CoefficientField, rng: &mut ChaCha8Rng) -> Coeff {
        match field {
            CoefficientField::Prime(p) => Coeff::Mod(rng.gen_range(0..*p)),
            CoefficientField::Rationals => {
                let n: i64 = rng.gen_range(-50..=50);
                let d: i64 = rng.gen_range(1..=20);
                field
                    .from_ratio(&BigInt::from(n), &BigInt::from(d))
                    .unwrap()
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let fields = [
            CoefficientField::Prime(2),
            CoefficientField::Prime(3),
            CoefficientField::Prime(5),
            CoefficientField::Prime(32003),
            CoefficientField::Rationals,
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for field in fields {
            for _ in 0..1000 {
                let a = random_elem(&field, &mut rng);
                let b = random_elem(&field, &mut rng);
                let c = random_elem(&field, &mut rng);
                assert_eq!(
                    field.add(&field.add(&a, &b), &c),
                    field.add(&a, &field.add(&b, &c))
                );
                assert_eq!(
                    field.mul(&field.mul(&a, &b), &c),
                    field.mul(&a, &field.mul(&b, &c))
                );
                assert_eq!(
                    field.mul(&a, &field.add(&b, &c)),
                    field.add(&field.mul(&a, &b), &field.mul(&a, &c))
                );
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                if !field.is_zero(&a) {
                    assert!(field.is_one(&field.mul(&a, &field.inv(&a))));
                }
            }
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(matches!(
            CoefficientField::prime(4),
            Err(AlgebraError::NotPrime(4))
        ));
        assert!(CoefficientField::prime(5).is_ok());
    }

    #[test]
    fn fractions_map_into_prime_fields() {
        let f = CoefficientField::Prime(5);
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&half, &f.from_i64(2)), f.one());
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_err());
    }
}
