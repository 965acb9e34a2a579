//! Gaussian rationals: exact complex scalars `a + bi` with `a, b` in Q.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of Q(i). Both parts are kept in lowest terms by `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn i() -> Self {
        Self::from_parts(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(Self::new(&self.re / &d, -&self.im / &d))
    }

    /// Nearest double-precision complex value. Fails when a part does not fit in f64.
    pub fn to_complex(&self) -> Result<Complex64> {
        let re = rat_to_f64(&self.re)?;
        let im = rat_to_f64(&self.im)?;
        Ok(Complex64::new(re, im))
    }

    /// Best rational approximation of a double (continued fractions), within `tol`.
    pub fn approximate(z: Complex64, tol: f64) -> Option<Self> {
        Some(Self::new(rationalize(z.re, tol)?, rationalize(z.im, tol)?))
    }
}

fn rat_to_f64(r: &BigRational) -> Result<f64> {
    // BigRational::to_f64 rounds correctly and saturates to +-inf on overflow.
    match r.to_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(Error::NumericOverflow(r.to_string())),
    }
}

/// Continued-fraction rationalization of `x`, stopping at the first convergent within `tol`.
pub fn rationalize(x: f64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let target = x.abs();
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = target;
    for _ in 0..64 {
        let a = rest.floor();
        let a_big = BigInt::from(a as i128);
        let h_next = &a_big * &h + &h_prev;
        let k_next = &a_big * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let approx = BigRational::new(h.clone(), k.clone());
        if (approx.to_f64()? - target).abs() <= tol {
            return Some(approx * BigRational::from_integer(sign.into()));
        }
        let frac = rest - a;
        if frac.abs() < f64::EPSILON {
            return Some(approx * BigRational::from_integer(sign.into()));
        }
        rest = 1.0 / frac;
    }
    None
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for GaussianRational {
    /// Formats as `RAT`, `RATi`, or `RAT+RATi` / `RAT-RATi`; the same grammar `FromStr` accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an optionally signed integer or `p/q` in lowest terms with `q > 0`.
fn parse_rat(s: &str) -> std::result::Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let is_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num, true) {
        return Err(format!("malformed rational `{s}`"));
    }
    let p: BigInt = num.trim_start_matches('+').parse().map_err(|_| s.to_string())?;
    match den {
        None => Ok(BigRational::from_integer(p)),
        Some(q) => {
            if !is_int(q, false) {
                return Err(format!("malformed denominator in `{s}`"));
            }
            let q: BigInt = q.parse().map_err(|_| s.to_string())?;
            if q.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            let r = BigRational::new(p.clone(), q.clone());
            if r.numer() != &p || r.denom() != &q {
                return Err(format!("`{s}` is not in lowest terms"));
            }
            Ok(r)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `RAT`, `RATi`, or `RAT(+|-)RATi`. Floating literals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: String| Error::Parse(why);
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty scalar".into()));
        }
        if let Some(body) = s.strip_suffix('i') {
            // Find the split between real and imaginary parts: a sign not at position 0.
            let split = body
                .char_indices()
                .skip(1)
                .filter(|&(_, c)| c == '+' || c == '-')
                .map(|(k, _)| k)
                .last();
            match split {
                Some(k) => {
                    let re = parse_rat(&body[..k]).map_err(bad)?;
                    let im_str = &body[k..];
                    if im_str.len() == 1 {
                        return Err(bad(format!("missing imaginary coefficient in `{s}`")));
                    }
                    let im = parse_rat(im_str).map_err(bad)?;
                    Ok(Self::new(re, im))
                }
                None => {
                    let im = parse_rat(body).map_err(bad)?;
                    Ok(Self::new(BigRational::zero(), im))
                }
            }
        } else {
            Ok(Self::new(parse_rat(s).map_err(bad)?, BigRational::zero()))
        }
    }
}
