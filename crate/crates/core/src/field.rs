//! Scalars: the prime field `F_q` and the coefficient field `Q(t)` with `t² = q`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Moduli supported by the library.
pub const SUPPORTED_PRIMES: [u8; 3] = [2, 3, 5];

pub fn check_prime(q: u32) -> Result<u8> {
    match q {
        2 | 3 | 5 => Ok(q as u8),
        _ => Err(Error::UnsupportedField(q)),
    }
}

/// An element of the prime field `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u8,
    q: u8,
}

impl Fp {
    pub fn new(value: i64, q: u8) -> Self {
        Self { value: value.rem_euclid(q as i64) as u8, q }
    }

    pub fn zero(q: u8) -> Self {
        Self { value: 0, q }
    }

    pub fn one(q: u8) -> Self {
        Self { value: 1 % q, q }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> u8 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| Self { value: inv_mod(self.value, self.q), q: self.q })
    }
}

/// Inverse of a nonzero residue modulo a small prime (Fermat).
pub(crate) fn inv_mod(x: u8, q: u8) -> u8 {
    debug_assert!(!x.is_multiple_of(q));
    let (mut acc, mut base, mut e) = (1u32, x as u32 % q as u32, q as u32 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u32;
        }
        base = base * base % q as u32;
        e >>= 1;
    }
    acc as u8
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.q, rhs.q);
        Fp { value: ((self.value as u16 + rhs.value as u16) % self.q as u16) as u8, q: self.q }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: (self.q - self.value) % self.q, q: self.q }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.q, rhs.q);
        Fp { value: ((self.value as u16 * rhs.value as u16) % self.q as u16) as u8, q: self.q }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// An exact element `rat + sqrt·t` of `Q(t)`, `t = √q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    rat: BigRational,
    sqrt: BigRational,
    q: u32,
}

impl Coeff {
    pub fn zero(q: u32) -> Self {
        Self { rat: BigRational::zero(), sqrt: BigRational::zero(), q }
    }

    pub fn one(q: u32) -> Self {
        Self::from_int(1, q)
    }

    pub fn from_int(n: i64, q: u32) -> Self {
        Self { rat: BigRational::from_integer(n.into()), sqrt: BigRational::zero(), q }
    }

    pub fn from_ratio(num: i64, den: i64, q: u32) -> Self {
        Self { rat: BigRational::new(num.into(), den.into()), sqrt: BigRational::zero(), q }
    }

    pub fn from_parts(rat: BigRational, sqrt: BigRational, q: u32) -> Self {
        Self { rat, sqrt, q }
    }

    /// The generator `t`.
    pub fn t(q: u32) -> Self {
        Self { rat: BigRational::zero(), sqrt: BigRational::one(), q }
    }

    /// `t^n` for any integer `n`.
    pub fn t_pow(n: i64, q: u32) -> Self {
        let half = n.div_euclid(2);
        let odd = n.rem_euclid(2) == 1;
        let base = BigRational::from_integer(BigInt::from(q));
        let p = if half >= 0 {
            num_traits::pow(base, half as usize)
        } else {
            num_traits::pow(base.recip(), (-half) as usize)
        };
        if odd {
            Self { rat: BigRational::zero(), sqrt: p, q }
        } else {
            Self { rat: p, sqrt: BigRational::zero(), q }
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.sqrt
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.sqrt.is_zero()
    }

    /// Multiplicative inverse: `(a + bt)⁻¹ = (a − bt)/(a² − q b²)`; the norm
    /// never vanishes for nonzero input since `q` is not a rational square.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let qr = BigRational::from_integer(BigInt::from(self.q));
        let norm = &self.rat * &self.rat - &qr * &self.sqrt * &self.sqrt;
        Some(Self { rat: &self.rat / &norm, sqrt: -(&self.sqrt / &norm), q: self.q })
    }

    /// If the value is `c·t^k` with `c` rational, returns `(c, k mod 2)`.
    pub fn as_monomial(&self) -> Option<(BigRational, u8)> {
        match (self.rat.is_zero(), self.sqrt.is_zero()) {
            (_, true) => Some((self.rat.clone(), 0)),
            (true, false) => Some((self.sqrt.clone(), 1)),
            _ => None,
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigRational::from_integer(n.into());
        Self { rat: &self.rat * &n, sqrt: &self.sqrt * &n, q: self.q }
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        debug_assert_eq!(self.q, rhs.q);
        Coeff { rat: &self.rat + &rhs.rat, sqrt: &self.sqrt + &rhs.sqrt, q: self.q }
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        debug_assert_eq!(self.q, rhs.q);
        Coeff { rat: &self.rat - &rhs.rat, sqrt: &self.sqrt - &rhs.sqrt, q: self.q }
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        debug_assert_eq!(self.q, rhs.q);
        let qr = BigRational::from_integer(BigInt::from(self.q));
        Coeff {
            rat: &self.rat * &rhs.rat + qr * &self.sqrt * &rhs.sqrt,
            sqrt: &self.rat * &rhs.sqrt + &self.sqrt * &rhs.rat,
            q: self.q,
        }
    }
}

impl Div<&Coeff> for &Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        self * &rhs.inv().expect("division by zero in Q(t)")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { rat: -&self.rat, sqrt: -&self.sqrt, q: self.q }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        debug_assert_eq!(self.q, rhs.q);
        self.rat += &rhs.rat;
        self.sqrt += &rhs.sqrt;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        debug_assert_eq!(self.q, rhs.q);
        self.rat -= &rhs.rat;
        self.sqrt -= &rhs.sqrt;
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.sqrt.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*t", self.sqrt),
            (false, false) => {
                let sign = if self.sqrt.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*t", self.rat, sign, self.sqrt.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverses_round_trip() {
        for &q in &SUPPORTED_PRIMES {
            for v in 0..q as i64 {
                let x = Fp::new(v, q);
                assert!((x + (-x)).is_zero());
                if let Some(y) = x.inv() {
                    assert_eq!(x * y, Fp::one(q));
                } else {
                    assert!(x.is_zero());
                }
            }
        }
    }

    #[test]
    fn t_squared_is_q() {
        for q in [2u32, 3, 5] {
            let t = Coeff::t(q);
            assert_eq!(&t * &t, Coeff::from_int(q as i64, q));
            assert!((&t * &t.inv().unwrap()).is_one());
            assert_eq!(
                t.inv().unwrap(),
                Coeff::from_parts(BigRational::zero(), BigRational::new(1.into(), (q as i64).into()), q)
            );
        }
    }

    #[test]
    fn t_powers_compose() {
        for a in -5..=5 {
            for b in -5..=5 {
                assert_eq!(&Coeff::t_pow(a, 3) * &Coeff::t_pow(b, 3), Coeff::t_pow(a + b, 3));
            }
        }
        assert!(Coeff::t_pow(0, 2).is_one());
    }

    #[test]
    fn unsupported_field_is_rejected() {
        assert!(check_prime(4).is_err());
        assert!(check_prime(7).is_err());
        assert_eq!(check_prime(5).unwrap(), 5);
    }
}
