//! Per-field constants consumed by the counting formulas.
//!
//! * `(c, d)`: the unique solution of `4q = c² + 27d²` with `c ≡ 1 (mod 3)`,
//!   `d ≥ 0`, and `gcd(c, p) = 1` when `p ≡ 1 (mod 3)`.
//! * `θ(q)`: the sign of `Im G³(χ, ψ)`. Computed exactly from
//!   `G³/q = (-1)^(k-1) J(χ', χ')^k` where `χ'` is the cubic character of
//!   `F_p` with `χ'(N(g)) = ω`.
//! * `θ_paper`: the closed rule `sgn Im (r1 + 3√3 r2 i)^k` for odd `k`, `0` for
//!   even `k`. It disagrees with the exact value when `p ≡ 1 (mod 3)` and `k`
//!   is even; both are kept and the disagreement is surfaced as a
//!   [`ThetaDiscrepancy`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;

use crate::eisenstein::{jacobi_sum_cubic, Eisenstein, RPair};
use crate::error::{Error, Result};
use crate::field::{is_prime, CubicClass, FieldDescriptor};
use crate::EisensteinInt;

/// A value in `{-1, 0, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(v: i64) -> Self {
        match v.signum() {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Self {
        Sign::of(-self.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Which θ drives the counting formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThetaSource {
    /// Sign of the exactly computed `G³/q`.
    #[default]
    Exact,
    /// The odd/even closed rule, taken verbatim.
    Paper,
}

impl ThetaSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ThetaSource::Exact => "exact",
            ThetaSource::Paper => "paper",
        }
    }
}

impl std::str::FromStr for ThetaSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ThetaSource::Exact),
            "paper" => Ok(ThetaSource::Paper),
            other => Err(Error::Parse(format!("unknown theta source `{other}`"))),
        }
    }
}

/// All constants for one field `F_q`, `q ≡ 1 (mod 3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicData {
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub c: i64,
    pub d: i64,
    /// Present iff `p ≡ 1 (mod 3)`.
    pub r_pair: Option<RPair>,
    /// `N(g)`, the generator of `F_p^*` the r-pair is taken against.
    pub g_prime: Option<u64>,
    pub theta: Sign,
    pub theta_paper: Sign,
    /// Exact `G³(χ, ψ)/q = A + Bω`.
    pub gauss_cubed_over_q: EisensteinInt,
}

/// Exact θ and the θ of the closed rule differ for this field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaDiscrepancy {
    pub q: u64,
    pub theta: Sign,
    pub theta_paper: Sign,
}

impl fmt::Display for ThetaDiscrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theta mismatch at q = {}: exact Gauss-sum path gives {}, closed rule gives {}",
            self.q, self.theta, self.theta_paper
        )
    }
}

impl CubicData {
    pub fn theta_for(&self, source: ThetaSource) -> Sign {
        match source {
            ThetaSource::Exact => self.theta,
            ThetaSource::Paper => self.theta_paper,
        }
    }

    pub fn theta_discrepancy(&self) -> Option<ThetaDiscrepancy> {
        (self.theta != self.theta_paper).then_some(ThetaDiscrepancy {
            q: self.q,
            theta: self.theta,
            theta_paper: self.theta_paper,
        })
    }

    /// `δ_z(q) = (-1)^i θ` for `z` in class `C_i`, `i ∈ {1, 2}`.
    pub fn delta(&self, class: CubicClass, source: ThetaSource) -> Result<Sign> {
        let theta = self.theta_for(source);
        match class {
            CubicClass::C1 => Ok(theta.flip()),
            CubicClass::C2 => Ok(theta),
            other => Err(Error::domain(format!(
                "delta is only defined for non-cubic classes, got {other}"
            ))),
        }
    }
}

/// `δ` for a non-cubic class with the exact θ.
pub fn delta(data: &CubicData, class: CubicClass) -> Result<Sign> {
    data.delta(class, ThetaSource::Exact)
}

/// Unique `(c, d)` with `4q = c² + 27d²`, `c ≡ 1 (mod 3)`, `d ≥ 0` and, when
/// `p ≡ 1 (mod 3)`, `gcd(c, p) = 1`.
///
/// Every `d` up to `√(4q/27)` is tried; anything other than exactly one
/// survivor is an integrity error.
pub fn cd_search(q: u64, p: u64) -> Result<(i64, i64)> {
    if !is_prime(p) || !is_power_of(q, p) {
        return Err(Error::domain(format!(
            "{q} is not a power of the prime {p}"
        )));
    }
    if q % 3 != 1 {
        return Err(Error::domain(format!("q = {q} is not 1 mod 3")));
    }
    let four_q = 4 * q as i64;
    let mut found = Vec::new();
    let mut d = 0i64;
    while 27 * d * d <= four_q {
        let rest = four_q - 27 * d * d;
        let s = rest.sqrt();
        if s * s == rest {
            let candidates: &[i64] = if s == 0 { &[0] } else { &[s, -s] };
            for &c in candidates {
                let coprime = p % 3 != 1 || c.gcd(&(p as i64)) == 1;
                if c.rem_euclid(3) == 1 && coprime {
                    found.push((c, d));
                }
            }
        }
        d += 1;
    }
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::integrity(format!(
            "no (c, d) solves 4*{q} = c^2 + 27 d^2"
        ))),
        many => Err(Error::integrity(format!(
            "(c, d) for q = {q} is not unique: {many:?}"
        ))),
    }
}

fn is_power_of(mut q: u64, p: u64) -> bool {
    if q < p {
        return false;
    }
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

/// θ and the exact `G³/q` for the field's generator.
///
/// For `p ≡ 1 (mod 3)` this is `(-1)^(k-1) J^k` with `J = J(χ', χ')` built from
/// `g' = N(g)`. For `p ≡ 2 (mod 3)` there is no cubic character of `F_p`; the
/// value is the real `c/2` and θ is `0`.
pub fn theta_exact(field: &FieldDescriptor) -> Result<(Sign, EisensteinInt)> {
    let (p, k, q) = (field.p(), field.k(), field.q());
    if q % 3 != 1 {
        return Err(Error::domain(format!("q = {q} is not 1 mod 3")));
    }
    if p % 3 == 1 {
        let g_prime = field.norm(field.generator());
        let j = jacobi_sum_cubic(p, g_prime)?;
        let mut m = j.pow(k);
        if k % 2 == 0 {
            m = -m;
        }
        Ok((Sign::of(m.imag_sign() as i64), m))
    } else {
        let (c, d) = cd_search(q, p)?;
        if d != 0 || c % 2 != 0 {
            return Err(Error::integrity(format!(
                "p = {p} is 2 mod 3 but (c, d) = ({c}, {d}) is not (even, 0)"
            )));
        }
        Ok((Sign::Zero, Eisenstein::from_int(BigInt::from(c / 2))))
    }
}

/// θ by the closed rule: `0` for even `k`, otherwise the sign of
/// `Im (r1 + 3√3 r2 i)^k`, read exactly off the ω-coefficient of `J^k`.
pub fn theta_paper(k: u32, r_pair: Option<RPair>) -> Result<Sign> {
    if k.is_multiple_of(2) {
        return Ok(Sign::Zero);
    }
    let pair = r_pair.ok_or_else(|| Error::domain("odd k requires an r-pair (p = 1 mod 3)"))?;
    Ok(Sign::of(pair.jacobi().pow(k).imag_sign() as i64))
}

/// Assembles and cross-checks every constant for `field`.
pub fn cubic_data(field: &FieldDescriptor) -> Result<CubicData> {
    let (p, k, q) = (field.p(), field.k(), field.q());
    let (c, d) = cd_search(q, p)?;
    let (theta, m) = theta_exact(field)?;

    if m.twice_real() != BigInt::from(c) || m.b.abs() != BigInt::from(3 * d) {
        return Err(Error::integrity(format!(
            "G^3/q = {m} disagrees with (c, d) = ({c}, {d})"
        )));
    }
    if m.norm() != BigInt::from(q) {
        return Err(Error::integrity(format!("N(G^3/q) = N({m}) != {q}")));
    }
    if (d == 0) != (theta == Sign::Zero) {
        return Err(Error::integrity(format!("d = {d} but theta = {theta}")));
    }
    if (c - d).is_odd() {
        return Err(Error::integrity(format!(
            "c = {c}, d = {d} differ in parity"
        )));
    }

    let (r_pair, g_prime) = if p % 3 == 1 {
        let g_prime = field.norm(field.generator());
        let j = jacobi_sum_cubic(p, g_prime)?;
        (Some(RPair::from_jacobi(&j, p, g_prime)?), Some(g_prime))
    } else {
        (None, None)
    };
    let theta_paper = theta_paper(k, r_pair)?;
    if k % 2 == 1 && theta != theta_paper {
        return Err(Error::integrity(format!(
            "odd k = {k}: exact theta {theta} != closed-rule theta {theta_paper}"
        )));
    }

    Ok(CubicData {
        q,
        p,
        k,
        c,
        d,
        r_pair,
        g_prime,
        theta,
        theta_paper,
        gauss_cubed_over_q: m,
    })
}
