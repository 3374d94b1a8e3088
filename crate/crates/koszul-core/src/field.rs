//! Coefficient fields: the rationals (arbitrary precision) and prime fields.

use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which kind of coefficient field a ring is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Field description as plain data (used in ring specs and cache keys).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    /// 0 for the rationals, the prime p otherwise.
    pub characteristic: u64,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { kind: FieldKind::Rationals, characteristic: 0 }
    }

    pub fn prime(p: u64) -> Self {
        FieldSpec { kind: FieldKind::PrimeField, characteristic: p }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            FieldKind::Rationals => {
                if self.characteristic != 0 {
                    return Err(Error::InvalidField(String::from(
                        "rationals must have characteristic 0",
                    )));
                }
            }
            FieldKind::PrimeField => {
                if !is_prime_u64(self.characteristic) {
                    return Err(Error::InvalidField(String::from(
                        "prime-field characteristic must be prime",
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::PrimeField => write!(f, "Fp({})", self.characteristic),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact field arithmetic. Implementations must be cheap to clone; elements
/// carry no back-reference to the field.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// A common nonzero scalar u such that u*c is an integer for every c in
    /// `coeffs`. When the coefficients are already integral, u = 1 (printing
    /// is then exact); otherwise the scaled integers have gcd 1 and the first
    /// nonzero one is positive. Paired with [`Field::elem_to_scaled_bigint`]
    /// this gives the integer form used by the text grammar.
    fn integer_scaling<'a, I: Iterator<Item = &'a Self::Elem>>(&self, coeffs: I) -> Self::Elem
    where
        Self::Elem: 'a;

    /// `scale * c` as a `BigInt`; only valid when `scale` came from
    /// [`Field::integer_scaling`] over a set containing `c`.
    fn elem_to_scaled_bigint(&self, c: &Self::Elem, scale: &Self::Elem) -> BigInt;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn integer_scaling<'a, I: Iterator<Item = &'a BigRational>>(&self, coeffs: I) -> BigRational {
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        let mut first_sign = Sign::NoSign;
        let mut all_integral = true;
        for c in coeffs {
            if c.is_zero() {
                continue;
            }
            all_integral &= c.is_integer();
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
            if first_sign == Sign::NoSign {
                first_sign = c.numer().sign();
            }
        }
        if all_integral || numer_gcd.is_zero() {
            return BigRational::one();
        }
        // gcd is nonnegative and the lcm positive, so `scale` starts positive;
        // flip it when the first nonzero coefficient is negative.
        let mut scale = BigRational::new(denom_lcm, numer_gcd);
        if first_sign == Sign::Minus {
            scale = -scale;
        }
        scale
    }

    fn elem_to_scaled_bigint(&self, c: &BigRational, scale: &BigRational) -> BigInt {
        let scaled = c * scale;
        debug_assert!(scaled.is_integer(), "scaling did not clear denominators");
        scaled.to_integer()
    }
}

/// A prime field F_p with p < 2^63, elements stored as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp64 {
    p: u64,
}

impl Fp64 {
    pub fn new(p: u64) -> Result<Self> {
        let spec = FieldSpec::prime(p);
        spec.validate()?;
        if p >= 1 << 63 {
            return Err(Error::InvalidField(String::from("prime too large (p >= 2^63)")));
        }
        Ok(Fp64 { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for Fp64 {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.sign() == Sign::Minus {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue below u64 modulus"),
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        pow_mod(*a, self.p - 2, self.p)
    }

    fn integer_scaling<'a, I: Iterator<Item = &'a u64>>(&self, _coeffs: I) -> u64 {
        1 % self.p
    }

    fn elem_to_scaled_bigint(&self, c: &u64, scale: &u64) -> BigInt {
        BigInt::from(mul_mod(*c, *scale, self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn prime_detection() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(32003));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(32001));
        assert!(!is_prime_u64(1_000_000_000));
    }

    #[test]
    fn fp_arithmetic() {
        let f = Fp64::new(32003).unwrap();
        let a = f.from_i64(-5);
        assert_eq!(a, 31998);
        assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        assert_eq!(f.add(&f.from_i64(32000), &f.from_i64(10)), 7);
        assert_eq!(f.sub(&f.from_i64(3), &f.from_i64(10)), 31996);
    }

    #[test]
    fn fp_rejects_composite() {
        assert!(Fp64::new(32001).is_err());
        assert!(Fp64::new(0).is_err());
        assert!(Fp64::new(1).is_err());
    }

    #[test]
    fn rational_scaling_is_primitive() {
        let q = Rationals;
        let coeffs = [
            BigRational::new(BigInt::from(-2), BigInt::from(3)),
            BigRational::new(BigInt::from(4), BigInt::from(9)),
        ];
        let s = q.integer_scaling(coeffs.iter());
        let ints: Vec<BigInt> = coeffs.iter().map(|c| q.elem_to_scaled_bigint(c, &s)).collect();
        // -2/3, 4/9 scaled by -9/2 gives 3, -2: first nonzero positive, gcd 1.
        assert_eq!(ints, [BigInt::from(3), BigInt::from(-2)]);
    }
}
