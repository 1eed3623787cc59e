//! Scalars: exact Gaussian rationals and their floating-point shadow.
//!
//! Every structure constant of the model is a Gaussian integer, so the
//! whole pipeline is generic over [`Scalar`] and runs either exactly
//! ([`ExactC`]) or in `f64` ([`ApproxC`], used by the solver).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;

/// Default bound on snapped denominators; overridable through `QPB_MAX_DENOM`.
pub const DEFAULT_MAX_DENOM: i64 = 10_000;

/// Default tolerance for rational snapping.
pub const DEFAULT_SNAP_TOL: f64 = 1e-9;

pub fn max_denom_from_env() -> i64 {
    std::env::var("QPB_MAX_DENOM")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .filter(|&d| d > 0)
        .unwrap_or(DEFAULT_MAX_DENOM)
}

/// Field operations shared by the exact and approximate scalars.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// The Gaussian integer `re + im·i`.
    fn gauss(re: i64, im: i64) -> Self;
    fn ratio(num: i64, den: i64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// `|z|²` as a float; used for pivot selection and diagnostics.
    fn abs_sq_f64(&self) -> f64;
    fn to_approx(&self) -> ApproxC;

    /// Relative size below which a value counts as rounding noise; zero for
    /// exact scalars.
    const ROUNDOFF: f64 = 0.0;

    fn i() -> Self {
        Self::gauss(0, 1)
    }

    fn abs_sq(&self) -> Self {
        self.clone() * self.conj()
    }

    fn scale_int(&self, k: i64) -> Self {
        self.clone() * Self::gauss(k, 0)
    }
}

/// Exact element of ℚ(i). Both parts are kept reduced, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactC {
    pub re: BigRational,
    pub im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExactC {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactC { re, im }
    }

    /// `(re_n/re_d) + (im_n/im_d)·i`.
    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        ExactC {
            re: rat(re_n, re_d),
            im: rat(im_n, im_d),
        }
    }

    pub fn real(n: i64, d: i64) -> Self {
        Self::from_parts(n, d, 0, 1)
    }

    pub fn imag(n: i64, d: i64) -> Self {
        Self::from_parts(0, 1, n, d)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn checked_div(&self, rhs: &ExactC) -> Result<ExactC, Error> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    /// Snap a float pair to the simplest Gaussian rational within `tol` per
    /// component, denominators bounded by `max_denom`.
    pub fn from_approx(a: ApproxC, tol: f64, max_denom: i64) -> Result<ExactC, Error> {
        let re = snap_real(a.re, tol, max_denom).ok_or(Error::NotSnappable(a.re))?;
        let im = snap_real(a.im, tol, max_denom).ok_or(Error::NotSnappable(a.im))?;
        Ok(ExactC { re, im })
    }

    /// Exact point `(1 − t²)/(1 + t²) + 2t/(1 + t²)·i` on the unit circle.
    pub fn unit_circle(t: BigRational) -> ExactC {
        let one = BigRational::one();
        let t2 = &t * &t;
        let den = &one + &t2;
        ExactC {
            re: (&one - &t2) / &den,
            im: (BigRational::from_integer(BigInt::from(2)) * t) / den,
        }
    }
}

/// Simplest rational within `tol` of `x` among continued-fraction convergents
/// with denominator at most `max_denom`.
pub fn snap_real(x: f64, tol: f64, max_denom: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let sign = if x < 0.0 { -1i64 } else { 1 };
    let mut rem = x.abs();
    // Convergents h/k via the standard recurrence.
    let (mut h_prev, mut h) = (1i128, rem.floor() as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    let mut frac = rem - rem.floor();
    loop {
        let approx = h as f64 / k as f64;
        if (approx - x.abs()).abs() <= tol {
            return Some(BigRational::new(
                BigInt::from(sign as i128 * h),
                BigInt::from(k),
            ));
        }
        if frac < 1e-15 {
            return None;
        }
        rem = 1.0 / frac;
        let a = rem.floor() as i128;
        frac = rem - rem.floor();
        let h_next = a.checked_mul(h)?.checked_add(h_prev)?;
        let k_next = a.checked_mul(k)?.checked_add(k_prev)?;
        if k_next > max_denom as i128 {
            return None;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

/// Closest rational to `x` with denominator at most `max_denom`
/// (best approximation via convergents and the last semiconvergent).
pub fn nearest_rational(x: f64, max_denom: i64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let max_denom = max_denom.max(1) as i128;
    let (mut h_prev, mut h) = (1i128, x.floor() as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    let mut rem = x - x.floor();
    while rem > 1e-15 {
        let inv = 1.0 / rem;
        let a = inv.floor() as i128;
        rem = inv - inv.floor();
        let k_next = a * k + k_prev;
        if k_next > max_denom {
            // largest semiconvergent still inside the bound
            let t = (max_denom - k_prev) / k;
            let (hs, ks) = (t * h + h_prev, t * k + k_prev);
            let err_c = (x - h as f64 / k as f64).abs();
            let err_s = (x - hs as f64 / ks as f64).abs();
            if ks > 0 && err_s < err_c {
                return Some(BigRational::new(BigInt::from(hs), BigInt::from(ks)));
            }
            break;
        }
        let h_next = a * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Some(BigRational::new(BigInt::from(h), BigInt::from(k)))
}

impl ExactC {
    /// Componentwise [`nearest_rational`].
    pub fn nearest(a: ApproxC, max_denom: i64) -> Result<ExactC, Error> {
        let re = nearest_rational(a.re, max_denom).ok_or(Error::NotSnappable(a.re))?;
        let im = nearest_rational(a.im, max_denom).ok_or(Error::NotSnappable(a.im))?;
        Ok(ExactC { re, im })
    }
}

impl Scalar for ExactC {
    fn zero() -> Self {
        ExactC {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn one() -> Self {
        Self::gauss(1, 0)
    }
    fn gauss(re: i64, im: i64) -> Self {
        ExactC {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }
    fn ratio(num: i64, den: i64) -> Self {
        Self::real(num, den)
    }
    fn conj(&self) -> Self {
        ExactC {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(ExactC {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
    fn abs_sq_f64(&self) -> f64 {
        let a = self.to_approx();
        a.re * a.re + a.im * a.im
    }
    fn to_approx(&self) -> ApproxC {
        ApproxC {
            re: self.re.to_f64().unwrap_or(f64::NAN),
            im: self.im.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Add for ExactC {
    type Output = ExactC;
    fn add(self, rhs: ExactC) -> ExactC {
        ExactC {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ExactC {
    type Output = ExactC;
    fn sub(self, rhs: ExactC) -> ExactC {
        ExactC {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for ExactC {
    type Output = ExactC;
    fn mul(self, rhs: ExactC) -> ExactC {
        ExactC {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for ExactC {
    type Output = ExactC;
    fn neg(self) -> ExactC {
        ExactC {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Div for ExactC {
    type Output = ExactC;
    /// Panics on zero divisor; use [`ExactC::checked_div`] for a fallible version.
    fn div(self, rhs: ExactC) -> ExactC {
        self.checked_div(&rhs).expect("division by zero")
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{} i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{} i", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for ExactC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rat(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        Ok(BigRational::new(n, d))
    } else if s.contains('.') || s.contains('e') || s.contains('E') {
        // Decimal literals are exact: 0.25 -> 1/4.
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let digits = format!("{int_part}{frac_part}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let shift = exp - frac_part.len() as i32;
        let ten = BigInt::from(10);
        Ok(if shift >= 0 {
            BigRational::from_integer(n * num_traits::pow(ten, shift as usize))
        } else {
            BigRational::new(n, num_traits::pow(ten, (-shift) as usize))
        })
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

impl FromStr for ExactC {
    type Err = Error;

    /// Accepts `p/q`, `r/s i`, `p/q+r/s i`, `p/q-r/s i`, `i`, `-i`, `2i`.
    fn from_str(input: &str) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !s.ends_with('i') {
            return Ok(ExactC {
                re: parse_rat(&s)?,
                im: BigRational::zero(),
            });
        }
        let body = &s[..s.len() - 1];
        // Split at the last sign that is not leading and not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx];
            if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E' | b'/') {
                split = Some(idx);
                break;
            }
        }
        let (re_s, im_s) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let im = match im_s {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rat(other.trim_start_matches('+'))?,
        };
        let re = if re_s.is_empty() {
            BigRational::zero()
        } else {
            parse_rat(re_s)?
        };
        Ok(ExactC { re, im })
    }
}

impl Serialize for ExactC {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactC {
    /// Accepts the string form, `{"re": "p/q", "im": "p/q"}`, a bare number,
    /// or a `[re, im]` float pair (snapped with the default tolerance).
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ExactC;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a Gaussian rational as \"p/q+r/s i\", {re, im}, or [re, im]")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactC, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactC, E> {
                Ok(ExactC::real(v, 1))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactC, E> {
                Ok(ExactC::real(v as i64, 1))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<ExactC, E> {
                ExactC::from_approx(ApproxC::new(v, 0.0), DEFAULT_SNAP_TOL, max_denom_from_env())
                    .map_err(E::custom)
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<ExactC, A::Error> {
                let re: f64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let im: f64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                ExactC::from_approx(ApproxC::new(re, im), DEFAULT_SNAP_TOL, max_denom_from_env())
                    .map_err(de::Error::custom)
            }
            fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<ExactC, A::Error> {
                let mut re = None;
                let mut im = None;
                while let Some(key) = map.next_key::<String>()? {
                    let val: String = map.next_value()?;
                    let parsed = parse_rat(&val).map_err(de::Error::custom)?;
                    match key.as_str() {
                        "re" => re = Some(parsed),
                        "im" => im = Some(parsed),
                        other => return Err(de::Error::unknown_field(other, &["re", "im"])),
                    }
                }
                Ok(ExactC {
                    re: re.unwrap_or_else(BigRational::zero),
                    im: im.unwrap_or_else(BigRational::zero),
                })
            }
        }
        d.deserialize_any(V)
    }
}

/// Floating-point complex number used by the iterative solver.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct ApproxC {
    pub re: f64,
    pub im: f64,
}

impl ApproxC {
    pub const fn new(re: f64, im: f64) -> Self {
        ApproxC { re, im }
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl From<[f64; 2]> for ApproxC {
    fn from(v: [f64; 2]) -> Self {
        ApproxC::new(v[0], v[1])
    }
}

impl From<ApproxC> for [f64; 2] {
    fn from(v: ApproxC) -> Self {
        [v.re, v.im]
    }
}

impl fmt::Debug for ApproxC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:e}{:+e}i)", self.re, self.im)
    }
}

impl fmt::Display for ApproxC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(12);
        write!(f, "{:.p$}{:+.p$}i", self.re, self.im)
    }
}

impl Add for ApproxC {
    type Output = ApproxC;
    fn add(self, rhs: ApproxC) -> ApproxC {
        ApproxC::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ApproxC {
    type Output = ApproxC;
    fn sub(self, rhs: ApproxC) -> ApproxC {
        ApproxC::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ApproxC {
    type Output = ApproxC;
    fn mul(self, rhs: ApproxC) -> ApproxC {
        ApproxC::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for ApproxC {
    type Output = ApproxC;
    fn neg(self) -> ApproxC {
        ApproxC::new(-self.re, -self.im)
    }
}

impl Scalar for ApproxC {
    const ROUNDOFF: f64 = 1e-9;

    fn zero() -> Self {
        ApproxC::new(0.0, 0.0)
    }
    fn one() -> Self {
        ApproxC::new(1.0, 0.0)
    }
    fn gauss(re: i64, im: i64) -> Self {
        ApproxC::new(re as f64, im as f64)
    }
    fn ratio(num: i64, den: i64) -> Self {
        ApproxC::new(num as f64 / den as f64, 0.0)
    }
    fn conj(&self) -> Self {
        ApproxC::new(self.re, -self.im)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn inv(&self) -> Option<Self> {
        let n = self.re * self.re + self.im * self.im;
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(ApproxC::new(self.re / n, -self.im / n))
    }
    fn abs_sq_f64(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    fn to_approx(&self) -> ApproxC {
        *self
    }
}
