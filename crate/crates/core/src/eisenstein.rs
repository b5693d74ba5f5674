//! The Eisenstein integers `Z[ω]`, `ω = e^{2πi/3}`, and cubic Jacobi sums.
//!
//! Elements are stored as `a + bω` with `ω² = -1 - ω`, so every value that
//! arises (Jacobi sums, cubed Gauss sums divided by `q`) stays integral. The
//! complex value is `(a - b/2) + (b√3/2) i`; its doubled real part `2a - b`
//! and the sign of `b` are therefore exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{is_prime, mod_pow, prime_factors};
use crate::scalar::{real, IntScalar, RealScalar};
use crate::EisensteinInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Eisenstein<T> {
    pub a: T,
    pub b: T,
}

impl<T: IntScalar> Eisenstein<T> {
    pub fn new(a: impl Into<T>, b: impl Into<T>) -> Self {
        Eisenstein {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Eisenstein {
            a: T::zero(),
            b: T::zero(),
        }
    }

    pub fn one() -> Self {
        Eisenstein {
            a: T::one(),
            b: T::zero(),
        }
    }

    pub fn omega() -> Self {
        Eisenstein {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// `ω^i`, one of `1`, `ω`, `-1 - ω`.
    pub fn omega_pow(i: u32) -> Self {
        match i % 3 {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Eisenstein {
                a: -T::one(),
                b: -T::one(),
            },
        }
    }

    pub fn from_int(n: T) -> Self {
        Eisenstein { a: n, b: T::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Complex conjugate: `(a - b) - bω`.
    pub fn conj(&self) -> Self {
        Eisenstein {
            a: self.a.clone() - self.b.clone(),
            b: -self.b.clone(),
        }
    }

    /// Algebraic norm `a² - ab + b²`, equal to `|x|²`.
    pub fn norm(&self) -> T {
        let (a, b) = (&self.a, &self.b);
        a.clone() * a.clone() - a.clone() * b.clone() + b.clone() * b.clone()
    }

    /// `2·Re(x) = 2a - b`.
    pub fn twice_real(&self) -> T {
        self.a.clone() + self.a.clone() - self.b.clone()
    }

    /// Sign of `Im(x) = b√3/2` as -1, 0 or 1.
    pub fn imag_sign(&self) -> i8 {
        if self.b.is_positive() {
            1
        } else if self.b.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    pub fn scale(&self, n: &T) -> Self {
        Eisenstein {
            a: self.a.clone() * n.clone(),
            b: self.b.clone() * n.clone(),
        }
    }

    /// Embedding into the complex plane.
    pub fn to_complex<F: RealScalar>(&self) -> Complex<F> {
        let a = F::from(self.a.clone()).expect("coefficient representable as float");
        let b = F::from(self.b.clone()).expect("coefficient representable as float");
        let half = real::<F>(0.5);
        Complex::new(a - b * half, b * F::from(3.0).unwrap().sqrt() * half)
    }
}

impl From<Eisenstein<i64>> for EisensteinInt {
    fn from(x: Eisenstein<i64>) -> Self {
        Eisenstein {
            a: BigInt::from(x.a),
            b: BigInt::from(x.b),
        }
    }
}

impl<T: IntScalar> Add for Eisenstein<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Eisenstein {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: IntScalar> Sub for Eisenstein<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Eisenstein {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: IntScalar> Neg for Eisenstein<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Eisenstein {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// `(a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω`
impl<T: IntScalar> Mul for Eisenstein<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let bd = self.b.clone() * rhs.b.clone();
        Eisenstein {
            a: self.a.clone() * rhs.a.clone() - bd.clone(),
            b: self.a * rhs.b + self.b * rhs.a - bd,
        }
    }
}

impl<'a, T: IntScalar> Mul<&'a Eisenstein<T>> for &'a Eisenstein<T> {
    type Output = Eisenstein<T>;

    fn mul(self, rhs: &Eisenstein<T>) -> Eisenstein<T> {
        self.clone() * rhs.clone()
    }
}

/// Text form `a+b*w` (`5+6*w`, `-1-3*w`).
impl<T: IntScalar> fmt::Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*w", self.a, sign, self.b.abs())
    }
}

impl<T: IntScalar + FromStr> FromStr for Eisenstein<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not of the form a+b*w"));
        let body = s.trim().strip_suffix("*w").ok_or_else(bad)?;
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let (a, b) = body.split_at(split);
        let b = b.strip_prefix('+').unwrap_or(b);
        Ok(Eisenstein {
            a: a.parse().map_err(|_| bad())?,
            b: b.parse().map_err(|_| bad())?,
        })
    }
}

/// `(r1, r2)` with `2J(χ, χ) = r1 + 3√3 r2 i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RPair {
    pub r1: i64,
    pub r2: i64,
}

impl RPair {
    /// Reads `r1 = 2a - b`, `r2 = b/3` off `J = a + bω` and checks every
    /// defining property, including the congruence that fixes the sign of `r2`
    /// for the generator `g_prime` with `χ(g_prime) = ω`.
    pub fn from_jacobi(j: &EisensteinInt, p: u64, g_prime: u64) -> Result<Self> {
        if j.norm() != BigInt::from(p) {
            return Err(Error::integrity(format!("N({j}) != {p}")));
        }
        if !(&j.b % 3u32).is_zero() {
            return Err(Error::integrity(format!(
                "omega coefficient of {j} is not divisible by 3"
            )));
        }
        let to_i64 = |x: BigInt| -> Result<i64> {
            i64::try_from(x).map_err(|_| Error::integrity("r-pair overflows i64"))
        };
        let pair = RPair {
            r1: to_i64(j.twice_real())?,
            r2: to_i64(&j.b / 3u32)?,
        };
        let p_i = p as i64;
        if pair.r1 * pair.r1 + 27 * pair.r2 * pair.r2 != 4 * p_i {
            return Err(Error::integrity(format!(
                "{pair:?} violates 4p = r1^2 + 27 r2^2"
            )));
        }
        if pair.r1.rem_euclid(3) != 1 {
            return Err(Error::integrity(format!("{pair:?}: r1 is not 1 mod 3")));
        }
        if (pair.r1 - pair.r2).rem_euclid(2) != 0 {
            return Err(Error::integrity(format!(
                "{pair:?}: r1, r2 differ in parity"
            )));
        }
        if !pair.sign_congruence_holds(p, g_prime) {
            return Err(Error::integrity(format!(
                "{pair:?} fails 9 r2 = (2 g'^((p-1)/3) + 1) r1 mod {p} for g' = {g_prime}"
            )));
        }
        Ok(pair)
    }

    /// `9 r2 ≡ (2 t + 1) r1 (mod p)` with `t = g_prime^((p-1)/3)`.
    pub fn sign_congruence_holds(&self, p: u64, g_prime: u64) -> bool {
        let p_i = p as i128;
        let t = mod_pow(g_prime, (p - 1) / 3, p) as i128;
        let lhs = (9 * self.r2 as i128).rem_euclid(p_i);
        let rhs = ((2 * t + 1) * self.r1 as i128).rem_euclid(p_i);
        lhs == rhs
    }

    /// `J = (r1 + 3 r2)/2 + 3 r2 ω`.
    pub fn jacobi(&self) -> EisensteinInt {
        Eisenstein::new((self.r1 + 3 * self.r2) / 2, 3 * self.r2)
    }
}

/// `J(χ', χ') = Σ_{c1 + c2 = 1} χ'(c1) χ'(c2)` over `F_p`, with `χ'(g_prime) = ω`.
///
/// Summed directly from a discrete-log table built by powering `g_prime`.
pub fn jacobi_sum_cubic(p: u64, g_prime: u64) -> Result<EisensteinInt> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p % 3 != 1 {
        return Err(Error::domain(format!(
            "p = {p} is not 1 mod 3; F_p has no cubic character"
        )));
    }
    let n = p - 1;
    if g_prime == 0
        || g_prime >= p
        || prime_factors(n)
            .into_iter()
            .any(|l| mod_pow(g_prime, n / l, p) == 1)
    {
        return Err(Error::domain(format!(
            "{g_prime} does not generate F_{p}^*"
        )));
    }

    let mut log3 = vec![0u8; p as usize];
    let mut x = 1u64;
    for e in 0..n {
        log3[x as usize] = (e % 3) as u8;
        x = x * g_prime % p;
    }
    // c1 ranges over F_p \ {0, 1}; both characters are nonzero there
    let mut hits = [0i64; 3];
    for c1 in 2..p {
        let c2 = (1 + p - c1) % p;
        hits[((log3[c1 as usize] + log3[c2 as usize]) % 3) as usize] += 1;
    }
    // n0 + n1 ω + n2 (-1 - ω)
    let j = Eisenstein::<i64>::new(hits[0] - hits[2], hits[1] - hits[2]);
    Ok(j.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::prime_generator;
    use proptest::prelude::*;

    fn e(a: i64, b: i64) -> Eisenstein<i64> {
        Eisenstein::new(a, b)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(e(1, 1) * e(1, 1), e(0, 1));
        assert_eq!(e(5, 6).conj(), e(-1, -6));
        assert_eq!(e(-1, -3).pow(2), e(-8, -3));
        assert_eq!(e(0, 1).pow(3), e(1, 0));
        assert_eq!(Eisenstein::<i64>::omega_pow(2), e(-1, -1));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e(5, 6).norm(), 31);
        assert_eq!(e(0, 1).norm(), 1);
        assert_eq!(e(-4, -3).norm(), 13);
        let x = e(5, 6);
        assert_eq!(x.conj() * x, e(31, 0));
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_sum_cubic(7, 3).unwrap(), e(-1, -3).into());
        assert_eq!(jacobi_sum_cubic(31, 3).unwrap(), e(5, 6).into());
        assert_eq!(jacobi_sum_cubic(13, 2).unwrap(), e(-4, -3).into());
        assert!(matches!(jacobi_sum_cubic(11, 2), Err(Error::Domain(_))));
        assert!(matches!(jacobi_sum_cubic(7, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn r_pair_examples() {
        let pair = |a, b, p, g| RPair::from_jacobi(&e(a, b).into(), p, g).unwrap();
        assert_eq!(pair(5, 6, 31, 3), RPair { r1: 4, r2: 2 });
        assert_eq!(pair(-1, -3, 7, 3), RPair { r1: 1, r2: -1 });
        assert_eq!(pair(-4, -3, 13, 2), RPair { r1: -5, r2: -1 });
        assert_eq!(RPair { r1: 4, r2: 2 }.jacobi(), e(5, 6).into());
    }

    #[test]
    fn r_pair_rejects_bad_jacobi_values() {
        // wrong norm
        assert!(matches!(
            RPair::from_jacobi(&e(5, 5).into(), 31, 3),
            Err(Error::Integrity(_))
        ));
        // conjugate has the right norm but the wrong r2 sign for g' = 3
        assert!(matches!(
            RPair::from_jacobi(&e(5, 6).conj().into(), 31, 3),
            Err(Error::Integrity(_))
        ));
    }

    #[test]
    fn text_form() {
        assert_eq!(e(5, 6).to_string(), "5+6*w");
        assert_eq!(e(-1, -3).to_string(), "-1-3*w");
        assert_eq!(e(8, 0).to_string(), "8+0*w");
        assert_eq!("-1-3*w".parse::<Eisenstein<i64>>().unwrap(), e(-1, -3));
        assert_eq!("12+0*w".parse::<EisensteinInt>().unwrap(), e(12, 0).into());
        assert!("5+6".parse::<Eisenstein<i64>>().is_err());
    }

    #[test]
    fn complex_embedding() {
        let z = e(5, 6).to_complex::<f64>();
        assert!((z.re - 2.0).abs() < 1e-12);
        assert!((z.im - 3.0 * 3f64.sqrt()).abs() < 1e-12);
        let z32 = e(-1, -3).to_complex::<f32>();
        assert!((z32.re - 0.5).abs() < 1e-6);
    }

    #[test]
    fn small_primes_give_valid_r_pairs() {
        for p in (7..2000u64).filter(|&p| p % 3 == 1 && is_prime(p)) {
            let g = prime_generator(p);
            let j = jacobi_sum_cubic(p, g).unwrap();
            let pair = RPair::from_jacobi(&j, p, g).unwrap();
            assert!(!RPair {
                r1: pair.r1,
                r2: -pair.r2
            }
            .sign_congruence_holds(p, g));
        }
    }

    fn small() -> impl Strategy<Value = Eisenstein<i64>> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| e(a, b))
    }

    proptest! {
        #[test]
        fn ring_laws(x in small(), y in small(), z in small()) {
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            prop_assert!(x.norm() >= 0);
            prop_assert_eq!(x.norm() == 0, x.is_zero());
            let xc = x.conj() * x.clone();
            prop_assert_eq!(xc.b, 0);
            prop_assert_eq!(xc.a, x.norm());
        }

        #[test]
        fn bigint_agrees_with_i64(x in small(), y in small()) {
            let big: EisensteinInt = (x.clone() * y.clone()).into();
            prop_assert_eq!(big, EisensteinInt::from(x) * EisensteinInt::from(y));
        }

        #[test]
        fn text_round_trip(x in small()) {
            prop_assert_eq!(x.to_string().parse::<Eisenstein<i64>>().unwrap(), x);
        }
    }
}
