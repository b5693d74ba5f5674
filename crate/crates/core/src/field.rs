//! Prime fields and their extensions `F_{p^k} = F_p[t]/(m(t))`.
//!
//! Elements are little-endian coefficient vectors in the power basis of the
//! modulus. A prime field is the degenerate extension with modulus `t`, so
//! every field goes through the same code path.
//!
//! The canonical field for `(p, k)` uses the smallest monic irreducible
//! modulus and the smallest multiplicative generator, where coefficient
//! vectors are ordered as base-`p` integers with the constant term least
//! significant. That integer is the element's *index* (see
//! [`FieldDescriptor::index_of`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// Largest field order accepted by [`FieldDescriptor`].
pub const MAX_FIELD_ORDER: u64 = 1 << 40;

/// Element of `F_{p^k}` as `k` residues mod `p`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.coeffs))
    }
}

/// Cubic residue class of an element relative to the field's generator `g`:
/// `C_i` holds the nonzero `z` with `ind_g(z) ≡ i (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicClass {
    Zero,
    C0,
    C1,
    C2,
}

impl CubicClass {
    pub const NONZERO: [CubicClass; 3] = [CubicClass::C0, CubicClass::C1, CubicClass::C2];

    /// `i` for `C_i`, `None` for zero.
    pub fn residue(self) -> Option<u8> {
        match self {
            CubicClass::Zero => None,
            CubicClass::C0 => Some(0),
            CubicClass::C1 => Some(1),
            CubicClass::C2 => Some(2),
        }
    }

    pub fn from_residue(i: u64) -> Self {
        match i % 3 {
            0 => CubicClass::C0,
            1 => CubicClass::C1,
            _ => CubicClass::C2,
        }
    }

    pub fn is_noncubic(self) -> bool {
        matches!(self, CubicClass::C1 | CubicClass::C2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CubicClass::Zero => "zero",
            CubicClass::C0 => "c0",
            CubicClass::C1 => "c1",
            CubicClass::C2 => "c2",
        }
    }
}

impl fmt::Display for CubicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CubicClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "zero" => Ok(CubicClass::Zero),
            "c0" => Ok(CubicClass::C0),
            "c1" => Ok(CubicClass::C1),
            "c2" => Ok(CubicClass::C2),
            other => Err(Error::Parse(format!("unknown cubic class `{other}`"))),
        }
    }
}

/// A concrete model of `F_q`, `q = p^k`, with a fixed generator of `F_q^*`.
///
/// Immutable once built; all operations take `&self`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    g: FieldElement,
}

impl FieldDescriptor {
    /// Canonical field: smallest irreducible modulus and smallest generator.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::from_parts(p, k, None, None)
    }

    /// Prime field `F_p` with the canonical generator.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Builds a field, validating any caller-supplied modulus or generator.
    ///
    /// `modulus` is the full monic coefficient list (`k + 1` entries,
    /// constant term first). `generator` must have order exactly `q - 1`.
    pub fn from_parts(
        p: u64,
        k: u32,
        modulus: Option<Vec<u64>>,
        generator: Option<Vec<u64>>,
    ) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::domain(format!("p = {p} is not a supported prime")));
        }
        if k == 0 {
            return Err(Error::domain("extension degree k must be positive"));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::domain(format!("{p}^{k} exceeds the supported field size")))?;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 {
                    return Err(Error::domain(format!(
                        "modulus must have {} coefficients, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::domain("modulus coefficient out of range [0, p)"));
                }
                if m[k as usize] != 1 {
                    return Err(Error::domain("modulus must be monic"));
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::domain("modulus is reducible over F_p"));
                }
                m
            }
            None => find_irreducible(p, k),
        };

        let mut field = FieldDescriptor {
            p,
            k,
            q,
            modulus,
            g: FieldElement {
                coeffs: one_coeffs(k),
            },
        };
        field.g = match generator {
            Some(coeffs) => {
                let g = field.element(coeffs)?;
                if !field.is_generator(&g) {
                    return Err(Error::domain(format!(
                        "{g} is not a generator of the multiplicative group of order {}",
                        q - 1
                    )));
                }
                g
            }
            None => field.find_generator(),
        };
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> &FieldElement {
        &self.g
    }

    /// Replaces the generator, validating its order.
    pub fn with_generator(&self, g: FieldElement) -> Result<Self> {
        Self::from_parts(self.p, self.k, Some(self.modulus.clone()), Some(g.coeffs))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            coeffs: one_coeffs(self.k),
        }
    }

    /// Validated element from its coefficient vector.
    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize {
            return Err(Error::domain(format!(
                "element needs {} coefficients, got {}",
                self.k,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::domain("element coefficient out of range [0, p)"));
        }
        Ok(FieldElement { coeffs })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut coeffs = vec![0; self.k as usize];
        coeffs[0] = n.rem_euclid(self.p as i64) as u64;
        FieldElement { coeffs }
    }

    /// Parses the CLI element syntax `c0,c1,...,c{k-1}`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        self.element(parse_coefficients(s)?)
    }

    /// Element whose coefficient vector is the base-`p` digit expansion of `index`.
    pub fn element_from_index(&self, mut index: u64) -> FieldElement {
        debug_assert!(index < self.q);
        let mut coeffs = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            coeffs.push(index % self.p);
            index /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.element_from_index(i))
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| (a + b) % p)
                .collect(),
        }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: x.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.p;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b % p) % p;
            }
        }
        // t^k = -(m_0 + m_1 t + ... + m_{k-1} t^{k-1})
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..k {
                let r = &mut prod[top - k + j];
                *r = (*r + (p - c * self.modulus[j] % p)) % p;
            }
        }
        prod.truncate(k);
        FieldElement { coeffs: prod }
    }

    pub fn pow_u64(&self, x: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `x^e` for any integer exponent; reduced mod `q - 1` for nonzero `x`.
    pub fn pow(&self, x: &FieldElement, e: &BigInt) -> Result<FieldElement> {
        if x.is_zero() {
            return if e.is_zero() {
                Ok(self.one())
            } else if e > &BigInt::zero() {
                Ok(self.zero())
            } else {
                Err(Error::domain("negative power of zero"))
            };
        }
        let reduced = e
            .mod_floor(&BigInt::from(self.q - 1))
            .to_u64()
            .expect("residue below q fits u64");
        Ok(self.pow_u64(x, reduced))
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.pow_u64(x, self.q - 2))
    }

    /// Frobenius `x ↦ x^p`.
    pub fn frobenius(&self, x: &FieldElement) -> FieldElement {
        self.pow_u64(x, self.p)
    }

    /// Norm to `F_p`: the product of the `k` Frobenius conjugates of `x`.
    pub fn norm(&self, x: &FieldElement) -> u64 {
        let mut conj = x.clone();
        let mut acc = x.clone();
        for _ in 1..self.k {
            conj = self.frobenius(&conj);
            acc = self.mul(&acc, &conj);
        }
        self.prime_subfield_value(&acc, "norm")
    }

    /// Trace to `F_p`: the sum of the `k` Frobenius conjugates of `x`.
    pub fn trace(&self, x: &FieldElement) -> u64 {
        let mut conj = x.clone();
        let mut acc = x.clone();
        for _ in 1..self.k {
            conj = self.frobenius(&conj);
            acc = self.add(&acc, &conj);
        }
        self.prime_subfield_value(&acc, "trace")
    }

    fn prime_subfield_value(&self, x: &FieldElement, what: &str) -> u64 {
        assert!(
            x.coeffs[1..].iter().all(|&c| c == 0),
            "{what} left the prime subfield: {x}"
        );
        x.coeffs[0]
    }

    /// True iff `x` has multiplicative order exactly `q - 1`.
    pub fn is_generator(&self, x: &FieldElement) -> bool {
        if x.is_zero() {
            return false;
        }
        let n = self.q - 1;
        let one = self.one();
        self.pow_u64(x, n) == one
            && prime_factors(n)
                .into_iter()
                .all(|l| self.pow_u64(x, n / l) != one)
    }

    /// Smallest element (by index) of multiplicative order `q - 1`.
    ///
    /// Ignores the descriptor's current generator.
    pub fn find_generator(&self) -> FieldElement {
        (1..self.q)
            .map(|i| self.element_from_index(i))
            .find(|x| self.is_generator(x))
            .expect("F_q^* is cyclic")
    }

    fn require_cubic_classes(&self) -> Result<()> {
        if self.q % 3 != 1 {
            return Err(Error::domain(format!(
                "q = {} is not 1 mod 3; every element is a cube",
                self.q
            )));
        }
        Ok(())
    }

    /// Class of `z` by `ind_g(z) mod 3`, without a discrete logarithm:
    /// `z^((q-1)/3)` equals `(g^((q-1)/3))^i` exactly for `i = ind_g(z) mod 3`.
    pub fn cube_class(&self, z: &FieldElement) -> Result<CubicClass> {
        self.require_cubic_classes()?;
        if z.is_zero() {
            return Ok(CubicClass::Zero);
        }
        let e = (self.q - 1) / 3;
        let r = self.pow_u64(z, e);
        let gamma = self.pow_u64(&self.g, e);
        if r == self.one() {
            Ok(CubicClass::C0)
        } else if r == gamma {
            Ok(CubicClass::C1)
        } else if r == self.mul(&gamma, &gamma) {
            Ok(CubicClass::C2)
        } else {
            Err(Error::integrity(format!(
                "{z}^((q-1)/3) is not a cube root of unity"
            )))
        }
    }

    /// Cubic character with `χ(g) = ω`; `χ(0) = 0` by convention.
    pub fn cubic_character<T: IntScalar>(&self, z: &FieldElement) -> Result<Eisenstein<T>> {
        Ok(match self.cube_class(z)? {
            CubicClass::Zero => Eisenstein::zero(),
            c => Eisenstein::omega_pow(c.residue().unwrap() as u32),
        })
    }

    /// `g^i` for the class representative of `C_i`, `0` for `Zero`.
    pub fn class_representative(&self, class: CubicClass) -> FieldElement {
        match class.residue() {
            None => self.zero(),
            Some(0) => self.one(),
            Some(i) => self.pow_u64(&self.g, i as u64),
        }
    }
}

/// `p^k/modulus/generator`, coefficient lists little-endian and comma separated.
impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{}/{}/{}",
            self.p,
            self.k,
            join(&self.modulus),
            self.g
        )
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split('/').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "field `{s}` is not of the form p^k/modulus/generator"
            )));
        }
        let (p, k) = parts[0]
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("`{}` is not p^k", parts[0])))?;
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree `{k}`")))?;
        FieldDescriptor::from_parts(
            p,
            k,
            Some(parse_coefficients(parts[1])?),
            Some(parse_coefficients(parts[2])?),
        )
    }
}

fn one_coeffs(k: u32) -> Vec<u64> {
    let mut v = vec![0; k as usize];
    v[0] = 1;
    v
}

fn join(coeffs: &[u64]) -> String {
    coeffs
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Comma-separated coefficient list, constant term first.
pub fn parse_coefficients(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{c}` in `{s}`")))
        })
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Smallest generator of `F_p^*`.
pub fn prime_generator(p: u64) -> u64 {
    let n = p - 1;
    let factors = prime_factors(n);
    (1..p)
        .find(|&a| mod_pow(a, n, p) == 1 && factors.iter().all(|&l| mod_pow(a, n / l, p) != 1))
        .expect("F_p^* is cyclic")
}

/// Remainder of `a` modulo the monic polynomial `b` over `F_p`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let c = r.pop().unwrap();
        if c != 0 {
            let shift = r.len() - db;
            for (j, &bj) in b[..db].iter().enumerate() {
                let t = &mut r[shift + j];
                *t = (*t + (p - c * bj % p)) % p;
            }
        }
    }
    r
}

/// Monic polynomial of degree `d` with index `i` among the `p^d` monic candidates.
fn monic_from_index(mut i: u64, d: u32, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(d as usize + 1);
    for _ in 0..d {
        v.push(i % p);
        i /= p;
    }
    v.push(1);
    v
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for i in 0..p.pow(d) {
            let divisor = monic_from_index(i, d, p);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `k` over `F_p`, coefficient
/// vectors `(a_0, ..., a_{k-1})` ordered as base-`p` integers with `a_0` least
/// significant. For `k = 1` this is `t`.
pub fn find_irreducible(p: u64, k: u32) -> Vec<u64> {
    (0..p.pow(k))
        .map(|i| monic_from_index(i, k, p))
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn f(p: u64, k: u32) -> FieldDescriptor {
        FieldDescriptor::new(p, k).unwrap()
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(find_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible(7, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 1), vec![0, 1]);
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(!is_irreducible(&[4, 0, 1], 5));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(f(31, 1).generator().coeffs(), &[3]);
        assert_eq!(f(7, 1).generator().coeffs(), &[3]);
        assert_eq!(f(13, 1).generator().coeffs(), &[2]);
        assert_eq!(f(2, 1).generator().coeffs(), &[1]);
        assert_eq!(f(7, 2).generator().coeffs(), &[2, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f4 = f(2, 2);
        let t = f4.element(vec![0, 1]).unwrap();
        assert_eq!(f4.mul(&t, &t).coeffs(), &[1, 1]);

        let f7 = f(7, 1);
        assert_eq!(f7.inv(&f7.from_int(3)).unwrap(), f7.from_int(5));
        assert_eq!(
            f7.inv(&f7.zero()),
            Err(Error::Domain("inverse of zero".into()))
        );

        let f9 = f(3, 2);
        let x = f9.element(vec![1, 1]).unwrap();
        assert_eq!(f9.pow_u64(&x, 4), f9.from_int(2));
    }

    #[test]
    fn big_exponents_reduce_mod_group_order() {
        let f9 = f(3, 2);
        let x = f9.element(vec![1, 1]).unwrap();
        let e = BigInt::from(4) + BigInt::from(8) * BigInt::from(10).pow(30);
        assert_eq!(f9.pow(&x, &e).unwrap(), f9.from_int(2));
        let inv = f9.pow(&x, &BigInt::from(-1)).unwrap();
        assert_eq!(f9.mul(&inv, &x), f9.one());
        assert!(f9.pow(&f9.zero(), &BigInt::from(-2)).is_err());
        assert_eq!(f9.pow(&f9.zero(), &BigInt::from(0)).unwrap(), f9.one());
    }

    #[test]
    fn norm_and_trace_examples() {
        let f7 = f(7, 1);
        assert_eq!(f7.norm(&f7.from_int(5)), 5);
        assert_eq!(f7.trace(&f7.from_int(5)), 5);

        let f4 = f(2, 2);
        let t = f4.element(vec![0, 1]).unwrap();
        assert_eq!(f4.norm(&t), 1);
        assert_eq!(f4.trace(&t), 1);

        let f9 = f(3, 2);
        assert_eq!(f9.norm(&f9.element(vec![1, 1]).unwrap()), 2);
        assert_eq!(f9.trace(&f9.zero()), 0);
    }

    #[test]
    fn norm_matches_power_form() {
        for (p, k) in [(2, 3), (3, 3), (7, 2), (5, 2)] {
            let field = f(p, k);
            let e = (field.q() - 1) / (p - 1);
            for x in field.elements().skip(1) {
                let pw = field.pow_u64(&x, e);
                assert_eq!(pw.coeffs()[0], field.norm(&x));
            }
        }
    }

    #[test]
    fn cube_class_examples() {
        let f7 = f(7, 1);
        assert_eq!(f7.cube_class(&f7.from_int(1)).unwrap(), CubicClass::C0);
        assert_eq!(f7.cube_class(&f7.from_int(2)).unwrap(), CubicClass::C2);
        assert_eq!(f7.cube_class(&f7.from_int(6)).unwrap(), CubicClass::C0);
        assert_eq!(f7.cube_class(&f7.zero()).unwrap(), CubicClass::Zero);
        assert!(matches!(
            f(5, 1).cube_class(&f(5, 1).one()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cubic_character_examples() {
        let f7 = f(7, 1);
        let g = f7.generator().clone();
        assert_eq!(
            f7.cubic_character::<i64>(&g).unwrap(),
            Eisenstein::new(0, 1)
        );
        assert_eq!(
            f7.cubic_character::<i64>(&f7.one()).unwrap(),
            Eisenstein::new(1, 0)
        );
        assert_eq!(
            f7.cubic_character::<i64>(&f7.from_int(2)).unwrap(),
            Eisenstein::new(-1, -1)
        );
        assert_eq!(
            f7.cubic_character::<i64>(&f7.zero()).unwrap(),
            Eisenstein::zero()
        );
    }

    #[test]
    fn classes_partition_the_group() {
        for (p, k) in [(7, 1), (13, 1), (2, 2), (2, 4), (5, 2), (7, 2), (2, 6)] {
            let field = f(p, k);
            let mut counts = [0u64; 3];
            for z in field.elements().skip(1) {
                counts[field.cube_class(&z).unwrap().residue().unwrap() as usize] += 1;
            }
            assert_eq!(counts, [(field.q() - 1) / 3; 3], "q = {}", field.q());
        }
    }

    #[test]
    fn character_indicator_identity() {
        let field = f(13, 1);
        for a in field.elements().skip(1) {
            let chi = field.cubic_character::<i64>(&a).unwrap();
            let sum = Eisenstein::one() + chi.clone() + chi.clone() * chi;
            let expected = if field.cube_class(&a).unwrap() == CubicClass::C0 {
                3
            } else {
                0
            };
            assert_eq!(sum, Eisenstein::new(expected, 0));
        }
    }

    #[test]
    fn norm_of_generator_generates_prime_field() {
        for (p, k) in [(7, 2), (13, 2), (2, 4), (5, 2), (3, 3)] {
            let field = f(p, k);
            let n = field.norm(field.generator());
            let order = (1..p).find(|&e| mod_pow(n, e, p) == 1).unwrap();
            assert_eq!(order, p - 1);
        }
    }

    #[test]
    fn overrides_are_validated() {
        assert!(FieldDescriptor::from_parts(7, 2, Some(vec![6, 0, 1]), None).is_err());
        assert!(FieldDescriptor::from_parts(7, 2, Some(vec![1, 0, 2]), None).is_err());
        assert!(FieldDescriptor::from_parts(7, 1, None, Some(vec![2])).is_err());
        assert!(FieldDescriptor::from_parts(8, 1, None, None).is_err());
        assert!(FieldDescriptor::from_parts(7, 0, None, None).is_err());
        let f7 = FieldDescriptor::from_parts(7, 1, None, Some(vec![5])).unwrap();
        assert_eq!(f7.generator().coeffs(), &[5]);
    }

    #[test]
    fn text_form_round_trips() {
        let field = f(7, 2);
        let text = field.to_string();
        assert_eq!(text, "7^2/1,0,1/2,1");
        assert_eq!(text.parse::<FieldDescriptor>().unwrap(), field);
        assert_eq!(f(31, 1).to_string(), "31^1/0,1/3");
        assert!("7^2/1,0,1".parse::<FieldDescriptor>().is_err());
        assert!("7^2/1,0,1/0,1".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn index_round_trip() {
        let field = f(3, 3);
        for i in 0..field.q() {
            assert_eq!(field.index_of(&field.element_from_index(i)), i);
        }
    }
}
