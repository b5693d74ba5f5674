//! Closed-form zero counts `N_s(z)` and `T_s(y)`.
//!
//! For `q ≡ 1 (mod 3)` the reduced count `u_s(z) = N_s(z) - q^(s-1)` depends only
//! on the cubic class of `z` and satisfies
//!
//! ```text
//! u_s = 3q u_{s-2} + qc u_{s-3}      (s ≥ 4)
//! ```
//!
//! so three seeds per class determine every term. The zero target uses its own
//! seeds `w_1 = 0, w_2 = 2(q-1), w_3 = c(q-1)`. `T_s(y)` for non-cubic `y`
//! reduces to `N_{s-1}(0) + (q-1) N_{s-1}(y)`.
//!
//! For `q ≡ 2 (mod 3)` cubing is a bijection and `N_s(z) = q^(s-1)` for all `z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::constants::{cubic_data, CubicData, Sign, ThetaSource};
use crate::error::{Error, Result};
use crate::field::{CubicClass, FieldDescriptor, FieldElement};
use crate::series::{cubic_denominator, cubic_recurrence, expand_rational};

/// Seeds `u_1, u_2, u_3` of the reduced count for one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USeeds {
    pub u1: BigInt,
    pub u2: BigInt,
    pub u3: BigInt,
}

/// Which generating function a [`SeriesWindow`] expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesTarget {
    /// `Σ N_s(z) x^s` for `z` in the class.
    N(CubicClass),
    /// `Σ T_{s+1}(y) x^s` for non-cubic `y` in the class.
    T(CubicClass),
}

/// Coefficients `s = 1..=n` of one generating function.
///
/// For `N` targets the `s`-th entry is `N_s`; for `T` targets it is `T_{s+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesWindow {
    pub target: SeriesTarget,
    pub q: u64,
    pub c: i64,
    pub coefficients: Vec<BigInt>,
}

impl SeriesWindow {
    /// Every coefficient with `s ≥ 4`, after removing the `q^(s-1)` (resp. `q^s`)
    /// main term, satisfies the cubic recurrence.
    pub fn check_recurrence(&self) -> bool {
        let q = BigInt::from(self.q);
        let c = BigInt::from(self.c);
        let offset = match self.target {
            SeriesTarget::N(_) => 1u32,
            SeriesTarget::T(_) => 0,
        };
        let reduced: Vec<BigInt> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, v)| v - Pow::pow(&q, i as u32 + 1 - offset))
            .collect();
        (3..reduced.len()).all(|i| {
            reduced[i] == BigInt::from(3) * &q * &reduced[i - 2] + &q * &c * &reduced[i - 3]
        })
    }
}

#[derive(Debug, Clone)]
enum Regime {
    /// `q ≡ 2 (mod 3)` (or `q` a power of 3): every element is a cube.
    AllCubes,
    Cubic {
        data: CubicData,
        theta: Sign,
    },
}

/// Closed-form counts for one field under a chosen θ source.
#[derive(Debug, Clone)]
pub struct CountingModel {
    q: u64,
    regime: Regime,
}

impl CountingModel {
    pub fn new(field: &FieldDescriptor, source: ThetaSource) -> Result<Self> {
        if field.q() % 3 == 1 {
            Ok(Self::from_data(cubic_data(field)?, source))
        } else {
            Ok(CountingModel {
                q: field.q(),
                regime: Regime::AllCubes,
            })
        }
    }

    pub fn from_data(data: CubicData, source: ThetaSource) -> Self {
        let theta = data.theta_for(source);
        CountingModel {
            q: data.q,
            regime: Regime::Cubic { data, theta },
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn data(&self) -> Option<&CubicData> {
        match &self.regime {
            Regime::Cubic { data, .. } => Some(data),
            Regime::AllCubes => None,
        }
    }

    /// θ driving the seeds (`None` when every element is a cube).
    pub fn theta(&self) -> Option<Sign> {
        match &self.regime {
            Regime::Cubic { theta, .. } => Some(*theta),
            Regime::AllCubes => None,
        }
    }

    fn cubic(&self) -> Result<(&CubicData, Sign)> {
        match &self.regime {
            Regime::Cubic { data, theta } => Ok((data, *theta)),
            Regime::AllCubes => Err(Error::domain(format!(
                "q = {} is not 1 mod 3; cubic classes are not defined",
                self.q
            ))),
        }
    }

    fn q_big(&self) -> BigInt {
        BigInt::from(self.q)
    }

    /// `(c + 9dδ)/2` as an exact integer; fails if the chosen θ makes it a half-integer.
    fn half_c_plus_9d_delta(&self, data: &CubicData, delta: Sign) -> Result<BigInt> {
        let num = BigInt::from(data.c) + BigInt::from(9 * data.d * delta.value());
        let (half, rem) = num.div_rem(&BigInt::from(2));
        if !rem.is_zero() {
            return Err(Error::integrity(format!(
                "(c + 9 d delta)/2 = {num}/2 is not an integer at q = {} (c = {}, d = {}, delta = {delta}); \
                 the selected theta cannot be right",
                data.q, data.c, data.d
            )));
        }
        Ok(half)
    }

    fn delta(&self, data: &CubicData, theta: Sign, class: CubicClass) -> Result<Sign> {
        match class {
            CubicClass::C1 => Ok(theta.flip()),
            CubicClass::C2 => Ok(theta),
            other => Err(Error::domain(format!(
                "y must be non-cubic for q = {}, got class {other}",
                data.q
            ))),
        }
    }

    /// Seeds for a nonzero class:
    /// `C0 → (2, c-2, 6q-c)`, non-cubic `→ (-1, -(4 + c + 9dδ)/2, -3q-c)`.
    pub fn u_seeds(&self, class: CubicClass) -> Result<USeeds> {
        let (data, theta) = self.cubic()?;
        let q = self.q_big();
        let c = BigInt::from(data.c);
        match class {
            CubicClass::Zero => Err(Error::domain(
                "the zero target has its own seeds; use count_n with CubicClass::Zero",
            )),
            CubicClass::C0 => Ok(USeeds {
                u1: BigInt::from(2),
                u2: &c - 2,
                u3: BigInt::from(6) * &q - &c,
            }),
            CubicClass::C1 | CubicClass::C2 => {
                let delta = self.delta(data, theta, class)?;
                Ok(USeeds {
                    u1: BigInt::from(-1),
                    u2: -(BigInt::from(2) + self.half_c_plus_9d_delta(data, delta)?),
                    u3: -(BigInt::from(3) * &q) - &c,
                })
            }
        }
    }

    fn reduced_terms(&self, class: CubicClass, n: usize) -> Result<Vec<BigInt>> {
        let (data, _) = self.cubic()?;
        let q = self.q_big();
        let c = BigInt::from(data.c);
        let seeds = match class {
            CubicClass::Zero => [BigInt::zero(), BigInt::from(2) * (&q - 1), &c * (&q - 1)],
            _ => {
                let s = self.u_seeds(class)?;
                [s.u1, s.u2, s.u3]
            }
        };
        Ok(cubic_recurrence(seeds, &q, &c, n))
    }

    /// `u_s(z)` for `z` in a nonzero class (`w_s` for [`CubicClass::Zero`]).
    pub fn u_at(&self, class: CubicClass, s: u32) -> Result<BigInt> {
        if s == 0 {
            return Err(Error::domain("u_s is defined for s >= 1"));
        }
        Ok(self.reduced_terms(class, s as usize)?.pop().unwrap())
    }

    /// `N_s(z)` for `z` in `class`.
    ///
    /// `s = 0` follows the empty-tuple convention: `N_0(0) = 1`, `N_0(z) = 0` otherwise.
    pub fn count_n(&self, s: u32, class: CubicClass) -> Result<BigInt> {
        if let Regime::AllCubes = self.regime {
            if class.is_noncubic() {
                return Err(Error::domain(format!(
                    "q = {} is not 1 mod 3; class {class} is empty",
                    self.q
                )));
            }
        }
        if s == 0 {
            return Ok(if class == CubicClass::Zero {
                BigInt::one()
            } else {
                BigInt::zero()
            });
        }
        let main = Pow::pow(&self.q_big(), s - 1);
        match self.regime {
            Regime::AllCubes => Ok(main),
            Regime::Cubic { .. } => Ok(main + self.u_at(class, s)?),
        }
    }

    /// `N_s(z)` for a concrete element.
    pub fn count_n_at(&self, field: &FieldDescriptor, s: u32, z: &FieldElement) -> Result<BigInt> {
        let class = self.classify(field, z)?;
        self.count_n(s, class)
    }

    fn classify(&self, field: &FieldDescriptor, z: &FieldElement) -> Result<CubicClass> {
        if field.q() != self.q {
            return Err(Error::domain("element belongs to a different field"));
        }
        match self.regime {
            Regime::AllCubes if z.is_zero() => Ok(CubicClass::Zero),
            Regime::AllCubes => Ok(CubicClass::C0),
            Regime::Cubic { .. } => field.cube_class(z),
        }
    }

    /// `T_s(y) = N_{s-1}(0) + (q-1) N_{s-1}(y)` for non-cubic `y`.
    pub fn count_t(&self, s: u32, y_class: CubicClass) -> Result<BigInt> {
        let (data, theta) = self.cubic()?;
        self.delta(data, theta, y_class)?;
        if s < 2 {
            return Err(Error::domain("T_s is defined for s >= 2"));
        }
        Ok(self.count_n(s - 1, CubicClass::Zero)?
            + (self.q_big() - 1) * self.count_n(s - 1, y_class)?)
    }

    /// `T_3(y) = q² - (q-1)(c + 9 δ_y d)/2`.
    pub fn t3_closed(&self, y_class: CubicClass) -> Result<BigInt> {
        let (data, theta) = self.cubic()?;
        let delta = self.delta(data, theta, y_class)?;
        let q = self.q_big();
        Ok(&q * &q - (&q - 1) * self.half_c_plus_9d_delta(data, delta)?)
    }

    /// `T_2, ..., T_{n+1}` expanded directly from
    /// `qx/(1-qx) - ((q-1)x + (q-1)(c + 9dδ)/2 x²) / (1 - 3qx² - qcx³)`.
    pub fn t_generating_coefficients(&self, y_class: CubicClass, n: usize) -> Result<Vec<BigInt>> {
        let (data, theta) = self.cubic()?;
        let delta = self.delta(data, theta, y_class)?;
        let q = self.q_big();
        let c = BigInt::from(data.c);
        let qm1: BigInt = &q - 1;
        let main = expand_rational(
            &[BigInt::zero(), q.clone()],
            &[BigInt::one(), -q.clone()],
            n + 1,
        );
        let num = [
            BigInt::zero(),
            qm1.clone(),
            &qm1 * self.half_c_plus_9d_delta(data, delta)?,
        ];
        let corr = expand_rational(&num, &cubic_denominator(&q, &c), n + 1);
        Ok((1..=n).map(|s| &main[s] - &corr[s]).collect())
    }

    /// `N_1, ..., N_n` expanded directly from the rational generating function
    /// for the class (numerator over `1 - 3qx² - qcx³`, plus `x/(1-qx)`).
    pub fn n_generating_coefficients(&self, class: CubicClass, n: usize) -> Result<Vec<BigInt>> {
        let (data, theta) = self.cubic()?;
        let q = self.q_big();
        let c = BigInt::from(data.c);
        let zero = BigInt::zero();
        let num: Vec<BigInt> = match class {
            // (q-1)(2 + cx)x²
            CubicClass::Zero => vec![
                zero.clone(),
                zero,
                BigInt::from(2) * (&q - 1),
                &c * (&q - 1),
            ],
            // 2x + (c-2)x² - cx³
            CubicClass::C0 => vec![zero, BigInt::from(2), &c - 2, -c.clone()],
            // -(x + (2 + (c + 9dδ)/2) x² + cx³)
            CubicClass::C1 | CubicClass::C2 => {
                let delta = self.delta(data, theta, class)?;
                let mid = BigInt::from(2) + self.half_c_plus_9d_delta(data, delta)?;
                vec![zero, BigInt::from(-1), -mid, -c.clone()]
            }
        };
        let main = expand_rational(
            &[BigInt::zero(), BigInt::one()],
            &[BigInt::one(), -q.clone()],
            n + 1,
        );
        let corr = expand_rational(&num, &cubic_denominator(&q, &c), n + 1);
        Ok((1..=n).map(|s| &main[s] + &corr[s]).collect())
    }

    /// First `n` coefficients of the target's generating function, by recurrence.
    pub fn series(&self, target: SeriesTarget, n: usize) -> Result<SeriesWindow> {
        let c = self.data().map_or(0, |d| d.c);
        let coefficients = match target {
            SeriesTarget::N(class) => (1..=n as u32)
                .map(|s| self.count_n(s, class))
                .collect::<Result<Vec<_>>>()?,
            SeriesTarget::T(class) => (2..=n as u32 + 1)
                .map(|s| self.count_t(s, class))
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(SeriesWindow {
            target,
            q: self.q,
            c,
            coefficients,
        })
    }
}

/// The mod-4 sign rule for prime fields in which 2 is not a cube.
///
/// Returns `d̃ ∈ {d, -d}` with `d̃ ≡ c (mod 4)` when `y` and `2` lie in the same
/// cubic class and `d̃ ≢ c (mod 4)` when `y` lies in the class of `4`; then
/// `T_3(y) = p² + (p-1)(-c + 9d̃)/2`.
pub fn mod4_signed_d(
    field: &FieldDescriptor,
    data: &CubicData,
    y_class: CubicClass,
) -> Result<i64> {
    if field.k() != 1 || field.p() % 3 != 1 {
        return Err(Error::domain(
            "the mod-4 sign rule needs a prime field with p = 1 mod 3",
        ));
    }
    if !y_class.is_noncubic() {
        return Err(Error::domain(format!(
            "y must be non-cubic, got class {y_class}"
        )));
    }
    let two = field.cube_class(&field.from_int(2))?;
    if !two.is_noncubic() {
        return Err(Error::domain(format!(
            "2 is a cube in F_{}; the mod-4 rule does not apply",
            field.p()
        )));
    }
    let (c, d) = (data.c, data.d);
    if c % 2 == 0 || d % 2 == 0 {
        return Err(Error::integrity(format!(
            "2 is not a cube in F_{} but (c, d) = ({c}, {d}) are not both odd",
            field.p()
        )));
    }
    let same_as_two = y_class == two;
    let pick = [d, -d]
        .into_iter()
        .find(|&dt| ((dt - c).rem_euclid(4) == 0) == same_as_two)
        .expect("d and -d differ by 2 mod 4");
    Ok(pick)
}

/// `T_3(y) = p² + (p-1)(-c + 9d̃)/2` with a signed `d̃`.
pub fn t3_signed_d(p: u64, c: i64, d_signed: i64) -> BigInt {
    let p = BigInt::from(p);
    &p * &p + (&p - 1) * BigInt::from(-c + 9 * d_signed) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(p: u64, k: u32) -> CountingModel {
        CountingModel::new(&FieldDescriptor::new(p, k).unwrap(), ThetaSource::Exact).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn seed_examples() {
        let m31 = model(31, 1);
        let s = m31.u_seeds(CubicClass::C0).unwrap();
        assert_eq!((s.u1, s.u2, s.u3), (big(2), big(2), big(182)));

        let m7 = model(7, 1);
        let s = m7.u_seeds(CubicClass::C1).unwrap();
        assert_eq!((s.u1, s.u2, s.u3), (big(-1), big(-7), big(-22)));

        let m4 = model(2, 2);
        assert_eq!(
            m4.u_seeds(CubicClass::C1).unwrap(),
            m4.u_seeds(CubicClass::C2).unwrap()
        );
        assert!(matches!(
            m7.u_seeds(CubicClass::Zero),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn u_at_examples() {
        let m7 = model(7, 1);
        assert_eq!(m7.u_at(CubicClass::C0, 4).unwrap(), big(-7));
        assert_eq!(m7.u_at(CubicClass::C0, 3).unwrap(), big(6 * 7 - 1));
        let m31 = model(31, 1);
        let s = m31.u_seeds(CubicClass::C1).unwrap();
        let expected = big(3 * 31) * s.u3 + big(31 * 4) * s.u2;
        assert_eq!(m31.u_at(CubicClass::C1, 5).unwrap(), expected);
    }

    #[test]
    fn count_examples() {
        assert_eq!(model(2, 2).count_n(2, CubicClass::Zero).unwrap(), big(10));
        assert_eq!(model(7, 1).count_n(3, CubicClass::Zero).unwrap(), big(55));
        assert_eq!(model(7, 1).count_n(2, CubicClass::C0).unwrap(), big(6));
        assert_eq!(model(7, 1).count_n(1, CubicClass::C2).unwrap(), big(0));
        assert_eq!(model(7, 1).count_n(0, CubicClass::Zero).unwrap(), big(1));
        assert_eq!(model(7, 1).count_n(0, CubicClass::C1).unwrap(), big(0));
    }

    #[test]
    fn all_cubes_regime() {
        let m5 = model(5, 1);
        assert_eq!(m5.count_n(3, CubicClass::Zero).unwrap(), big(25));
        assert_eq!(m5.count_n(3, CubicClass::C0).unwrap(), big(25));
        assert!(m5.count_n(3, CubicClass::C1).is_err());
        assert!(m5.count_t(3, CubicClass::C1).is_err());
        assert!(m5.u_seeds(CubicClass::C0).is_err());
    }

    #[test]
    fn t_examples() {
        let m31 = model(31, 1);
        assert_eq!(m31.count_t(3, CubicClass::C1).unwrap(), big(1171));
        assert_eq!(m31.count_t(3, CubicClass::C2).unwrap(), big(631));
        assert_eq!(m31.t3_closed(CubicClass::C1).unwrap(), big(1171));
        assert_eq!(m31.t3_closed(CubicClass::C2).unwrap(), big(631));
        for (p, k) in [(7, 1), (13, 1), (2, 2), (7, 2)] {
            let m = model(p, k);
            for class in [CubicClass::C1, CubicClass::C2] {
                assert_eq!(m.count_t(2, class).unwrap(), big(1));
            }
        }
        assert_eq!(model(7, 1).t3_closed(CubicClass::C1).unwrap(), big(19));
        assert!(matches!(
            m31.count_t(3, CubicClass::C0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            m31.t3_closed(CubicClass::Zero),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            m31.count_t(1, CubicClass::C1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn d_zero_fields_do_not_split_classes() {
        let m = model(2, 4);
        let q = BigInt::from(16);
        let c = BigInt::from(m.data().unwrap().c);
        let expect = &q * &q - c * (&q - 1) / 2;
        assert_eq!(m.t3_closed(CubicClass::C1).unwrap(), expect);
        assert_eq!(m.t3_closed(CubicClass::C2).unwrap(), expect);
    }

    #[test]
    fn series_examples() {
        let m7 = model(7, 1);
        let zero = m7.series(SeriesTarget::N(CubicClass::Zero), 3).unwrap();
        assert_eq!(zero.coefficients, vec![big(1), big(19), big(55)]);
        assert_eq!(
            m7.series(SeriesTarget::N(CubicClass::C0), 1)
                .unwrap()
                .coefficients,
            vec![big(3)]
        );
        assert_eq!(
            m7.series(SeriesTarget::N(CubicClass::C1), 1)
                .unwrap()
                .coefficients,
            vec![big(0)]
        );
    }

    #[test]
    fn generating_functions_match_recurrence() {
        for (p, k) in [
            (7, 1),
            (13, 1),
            (31, 1),
            (2, 2),
            (2, 4),
            (5, 2),
            (7, 2),
            (19, 1),
        ] {
            let m = model(p, k);
            for class in [
                CubicClass::Zero,
                CubicClass::C0,
                CubicClass::C1,
                CubicClass::C2,
            ] {
                let window = m.series(SeriesTarget::N(class), 10).unwrap();
                assert!(window.check_recurrence());
                assert_eq!(
                    window.coefficients,
                    m.n_generating_coefficients(class, 10).unwrap()
                );
            }
            for class in [CubicClass::C1, CubicClass::C2] {
                let window = m.series(SeriesTarget::T(class), 8).unwrap();
                assert!(window.check_recurrence());
                assert_eq!(
                    window.coefficients,
                    m.t_generating_coefficients(class, 8).unwrap()
                );
            }
        }
    }

    #[test]
    fn total_count_is_q_to_the_s() {
        for (p, k) in [(7, 1), (13, 1), (31, 1), (2, 2), (7, 2), (5, 2)] {
            let m = model(p, k);
            let q = BigInt::from(m.q());
            for s in 1..=5u32 {
                let mut total = m.count_n(s, CubicClass::Zero).unwrap();
                for class in CubicClass::NONZERO {
                    total += (&q - 1) / 3 * m.count_n(s, class).unwrap();
                }
                assert_eq!(total, Pow::pow(&q, s));
            }
        }
    }

    #[test]
    fn closed_rule_theta_fails_loudly_when_half_integral() {
        let field = FieldDescriptor::new(7, 2).unwrap();
        let m = CountingModel::new(&field, ThetaSource::Paper).unwrap();
        assert!(matches!(
            m.count_n(2, CubicClass::C1),
            Err(Error::Integrity(_))
        ));
        assert!(matches!(
            m.t3_closed(CubicClass::C2),
            Err(Error::Integrity(_))
        ));
        // cube and zero targets do not involve θ
        assert_eq!(m.count_n(2, CubicClass::Zero).unwrap(), big(145));
        assert_eq!(m.count_n(2, CubicClass::C0).unwrap(), big(60));
    }

    #[test]
    fn mod4_rule_examples() {
        let f7 = FieldDescriptor::prime(7).unwrap();
        let d7 = cubic_data(&f7).unwrap();
        let y = f7.from_int(3);
        let class = f7.cube_class(&y).unwrap();
        let dt = mod4_signed_d(&f7, &d7, class).unwrap();
        assert_eq!(dt, -1);
        assert_eq!(t3_signed_d(7, d7.c, dt), big(19));

        let f31 = FieldDescriptor::prime(31).unwrap();
        let d31 = cubic_data(&f31).unwrap();
        assert!(matches!(
            mod4_signed_d(&f31, &d31, CubicClass::C1),
            Err(Error::Domain(_))
        ));

        let f13 = FieldDescriptor::prime(13).unwrap();
        let d13 = cubic_data(&f13).unwrap();
        let two = f13.cube_class(&f13.from_int(2)).unwrap();
        let dt = mod4_signed_d(&f13, &d13, two).unwrap();
        assert_eq!((dt - d13.c).rem_euclid(4), 0);
    }
}
