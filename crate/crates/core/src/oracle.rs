//! Ground truth for the closed forms.
//!
//! Exact side: solution counts by repeated additive convolution of the cube
//! histogram `h[v] = #{x : x³ = v}`, so `N_s(z)` is the `s`-fold convolution of
//! `h` evaluated at `z`. Numeric side: Gauss sums, the cubic periods `S_h`,
//! Jacobi sums, and additive-character orthogonality, evaluated in floating
//! point over any [`RealScalar`].

use num_bigint::BigInt;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use crate::scalar::{real, RealScalar};

/// Enumeration caps for the exact oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_q: u64,
    pub max_s: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_q: 128,
            max_s: 8,
        }
    }
}

impl OracleLimits {
    fn check(&self, q: u64, s: u32) -> Result<()> {
        if q > self.max_q || s > self.max_s {
            return Err(Error::Resource(format!(
                "enumeration of q = {q}, s = {s} exceeds the cap q <= {}, s <= {}",
                self.max_q, self.max_s
            )));
        }
        // counts are accumulated in u128
        if (s as f64) * (q as f64).log2() >= 127.0 {
            return Err(Error::Resource(format!(
                "q^s overflows the accumulator (q = {q}, s = {s})"
            )));
        }
        Ok(())
    }
}

/// `counts[i]` is the number of cube roots of the element with index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeHistogram {
    counts: Vec<u64>,
}

impl CubeHistogram {
    pub fn new(field: &FieldDescriptor) -> Self {
        let mut counts = vec![0u64; field.q() as usize];
        for x in field.elements() {
            let cube = field.mul(&field.mul(&x, &x), &x);
            counts[field.index_of(&cube) as usize] += 1;
        }
        CubeHistogram { counts }
    }

    pub fn get(&self, field: &FieldDescriptor, v: &FieldElement) -> u64 {
        self.counts[field.index_of(v) as usize]
    }

    /// Counts in element-index order.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Index of the sum of two elements given by index (digit-wise mod `p`).
fn add_index(p: u64, mut a: u64, mut b: u64) -> u64 {
    let (mut out, mut place) = (0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn convolve(p: u64, dist: &[u128], hist: &[u64]) -> Vec<u128> {
    let mut out = vec![0u128; dist.len()];
    for (a, &da) in dist.iter().enumerate() {
        if da == 0 {
            continue;
        }
        for (v, &hv) in hist.iter().enumerate() {
            if hv != 0 {
                out[add_index(p, a as u64, v as u64) as usize] += da * hv as u128;
            }
        }
    }
    out
}

/// Full value distribution of `x_1³ + ... + x_s³`, indexed by element index.
pub fn sum_distribution(
    field: &FieldDescriptor,
    s: u32,
    limits: &OracleLimits,
) -> Result<Vec<BigInt>> {
    limits.check(field.q(), s)?;
    Ok(raw_distribution(field, s)
        .into_iter()
        .map(BigInt::from)
        .collect())
}

fn raw_distribution(field: &FieldDescriptor, s: u32) -> Vec<u128> {
    let hist = CubeHistogram::new(field);
    let mut dist = vec![0u128; field.q() as usize];
    dist[0] = 1;
    for _ in 0..s {
        dist = convolve(field.p(), &dist, hist.counts());
    }
    dist
}

/// `N_s(z)` by convolution.
pub fn brute_n(
    field: &FieldDescriptor,
    s: u32,
    z: &FieldElement,
    limits: &OracleLimits,
) -> Result<BigInt> {
    limits.check(field.q(), s)?;
    Ok(BigInt::from(
        raw_distribution(field, s)[field.index_of(z) as usize],
    ))
}

/// `T_s(y)`: zeros of `x_1³ + ... + x_{s-1}³ + y x_s³`.
pub fn brute_t(
    field: &FieldDescriptor,
    s: u32,
    y: &FieldElement,
    limits: &OracleLimits,
) -> Result<BigInt> {
    limits.check(field.q(), s)?;
    if s == 0 {
        return Err(Error::domain("T_s is defined for s >= 1"));
    }
    if y.is_zero() {
        return Err(Error::domain("y must be nonzero"));
    }
    let dist = raw_distribution(field, s - 1);
    let hist = CubeHistogram::new(field);
    let mut total = 0u128;
    for (v, &hv) in hist.counts().iter().enumerate() {
        if hv == 0 {
            continue;
        }
        // the first s-1 cubes must sum to -y·v
        let target = field.neg(&field.mul(y, &field.element_from_index(v as u64)));
        total += dist[field.index_of(&target) as usize] * hv as u128;
    }
    Ok(BigInt::from(total))
}

/// `N_s(z)` by looping over all `q^s` tuples. Capped at `q^s <= 10^6`.
pub fn naive_n(field: &FieldDescriptor, s: u32, z: &FieldElement) -> Result<BigInt> {
    let q = field.q();
    let total = q
        .checked_pow(s)
        .filter(|&t| t <= 1_000_000)
        .ok_or_else(|| Error::Resource(format!("naive enumeration of {q}^{s} tuples")))?;
    let cubes: Vec<FieldElement> = field
        .elements()
        .map(|x| field.mul(&field.mul(&x, &x), &x))
        .collect();
    let mut count = 0u64;
    for mut t in 0..total {
        let mut acc = field.zero();
        for _ in 0..s {
            acc = field.add(&acc, &cubes[(t % q) as usize]);
            t /= q;
        }
        if &acc == z {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Discrete logs mod 3, traces, and additive character values for every element.
pub struct CharacterTables<F> {
    p: u64,
    q: u64,
    /// `ind_g(x) mod 3` by element index; unused at index 0.
    log3: Vec<u8>,
    /// `ψ(x) = exp(2πi Tr(x)/p)` by element index.
    psi: Vec<Complex<F>>,
    /// `ω^i` for `i = 0, 1, 2`.
    omega: [Complex<F>; 3],
    /// Element index of `g^e` for `e = 0..q-1`.
    powers: Vec<u64>,
}

impl<F: RealScalar> CharacterTables<F> {
    pub fn new(field: &FieldDescriptor) -> Result<Self> {
        let q = field.q();
        if q % 3 != 1 {
            return Err(Error::domain(format!(
                "q = {q} is not 1 mod 3; no cubic character"
            )));
        }
        let p = field.p();
        let mut log3 = vec![0u8; q as usize];
        let mut powers = Vec::with_capacity(q as usize - 1);
        let mut x = field.one();
        for e in 0..q - 1 {
            let idx = field.index_of(&x);
            log3[idx as usize] = (e % 3) as u8;
            powers.push(idx);
            x = field.mul(&x, field.generator());
        }
        // Tr is F_p-linear: Tr(x) = Σ x_j Tr(t^j)
        let basis_traces: Vec<u64> = (0..field.k())
            .map(|j| field.trace(&field.element_from_index(p.pow(j))))
            .collect();
        let two_pi_over_p = F::TAU() / real::<F>(p as f64);
        let psi = field
            .elements()
            .map(|x| {
                let tr = x
                    .coeffs()
                    .iter()
                    .zip(&basis_traces)
                    .fold(0u64, |acc, (&c, &t)| (acc + c * t) % p);
                Complex::from_polar(F::one(), two_pi_over_p * real::<F>(tr as f64))
            })
            .collect();
        let omega =
            [0.0, 1.0, 2.0].map(|i| Complex::from_polar(F::one(), F::TAU() * real::<F>(i / 3.0)));
        Ok(CharacterTables {
            p,
            q,
            log3,
            psi,
            omega,
            powers,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `χ^power(x)` for `x ≠ 0`.
    fn chi(&self, idx: usize, power: u32) -> Complex<F> {
        self.omega[(self.log3[idx] as u32 * power % 3) as usize]
    }

    pub fn psi(&self, idx: u64) -> Complex<F> {
        self.psi[idx as usize]
    }

    /// `G(χ^power, ψ) = Σ_{x ≠ 0} χ^power(x) ψ(x)`.
    pub fn gauss(&self, power: u32) -> Complex<F> {
        (1..self.q as usize)
            .map(|i| self.chi(i, power) * self.psi[i])
            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
    }

    /// Element index of `g^e`.
    pub fn power_index(&self, e: u64) -> u64 {
        self.powers[(e % (self.q - 1)) as usize]
    }

    /// `χ(x)` numerically, by element index (`0` at zero).
    pub fn chi_value(&self, idx: u64, power: u32) -> Complex<F> {
        if idx == 0 {
            Complex::new(F::zero(), F::zero())
        } else {
            self.chi(idx as usize, power)
        }
    }
}

/// `G(χ, ψ)` with `χ(g) = ω` and the canonical additive character.
pub fn gauss_numeric<F: RealScalar>(field: &FieldDescriptor) -> Result<Complex<F>> {
    Ok(CharacterTables::<F>::new(field)?.gauss(1))
}

/// `S_h = Σ_y ψ(h y³)`.
pub fn s_h_numeric<F: RealScalar>(field: &FieldDescriptor, h: &FieldElement) -> Result<Complex<F>> {
    if h.is_zero() {
        return Err(Error::domain("S_h needs h != 0"));
    }
    let tables = CharacterTables::<F>::new(field)?;
    Ok(s_h_with(field, &tables, h))
}

pub(crate) fn s_h_with<F: RealScalar>(
    field: &FieldDescriptor,
    tables: &CharacterTables<F>,
    h: &FieldElement,
) -> Complex<F> {
    field
        .elements()
        .map(|y| {
            let hy3 = field.mul(h, &field.mul(&field.mul(&y, &y), &y));
            tables.psi(field.index_of(&hy3))
        })
        .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
}

/// `J(χ', χ') = G(χ', ψ')² / G(χ̄', ψ')` over a prime field, `χ'(g) = ω`.
pub fn jacobi_numeric<F: RealScalar>(field: &FieldDescriptor) -> Result<Complex<F>> {
    if field.k() != 1 {
        return Err(Error::domain("jacobi_numeric works over prime fields"));
    }
    let tables = CharacterTables::<F>::new(field)?;
    let g = tables.gauss(1);
    Ok(g * g / tables.gauss(2))
}

/// Worst deviation of `Σ_a ψ(ax)` from `q·[x = 0]` over all `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalityReport<F> {
    pub max_error: F,
    pub passed: bool,
}

/// Works for every q; ψ does not involve the cubic character.
pub fn orthogonality_check<F: RealScalar>(
    field: &FieldDescriptor,
    tolerance: F,
) -> OrthogonalityReport<F> {
    let psi = additive_character::<F>(field);
    let q = real::<F>(field.q() as f64);
    let mut max_error = F::zero();
    for x in field.elements() {
        let sum = field
            .elements()
            .map(|a| psi[field.index_of(&field.mul(&a, &x)) as usize])
            .fold(Complex::new(F::zero(), F::zero()), |acc, v| acc + v);
        let expected = if x.is_zero() { q } else { F::zero() };
        let err = (sum - Complex::new(expected, F::zero())).norm();
        if err > max_error {
            max_error = err;
        }
    }
    OrthogonalityReport {
        max_error,
        passed: max_error <= tolerance,
    }
}

fn additive_character<F: RealScalar>(field: &FieldDescriptor) -> Vec<Complex<F>> {
    let p = field.p();
    let two_pi_over_p = F::TAU() / real::<F>(p as f64);
    field
        .elements()
        .map(|x| Complex::from_polar(F::one(), two_pi_over_p * real::<F>(field.trace(&x) as f64)))
        .collect()
}
