//! Exact quaternion scalars over arbitrary-precision rationals.
//!
//! Multiplication follows the Hamilton convention: i² = j² = k² = −1 and
//! ij = k, jk = i, ki = j (hence ji = −k, kj = −i, ik = −j).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps itself in lowest terms with a
/// positive denominator, which is exactly the invariant the domain needs.
pub type Rational = BigRational;

/// A quaternion a₀ + a₁·i + a₂·j + a₃·k with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub re: Rational,
    pub im_i: Rational,
    pub im_j: Rational,
    pub im_k: Rational,
}

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

impl Quaternion {
    pub fn new(re: Rational, im_i: Rational, im_j: Rational, im_k: Rational) -> Self {
        Quaternion { re, im_i, im_j, im_k }
    }

    /// Quaternion with small integer components, mostly for tests and fixtures.
    pub fn from_ints(re: i64, im_i: i64, im_j: i64, im_k: i64) -> Self {
        Quaternion::new(rat(re), rat(im_i), rat(im_j), rat(im_k))
    }

    pub fn from_rational(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im_i.is_zero() && self.im_j.is_zero() && self.im_k.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im_i.is_zero() && self.im_j.is_zero() && self.im_k.is_zero()
    }

    /// True when the i, j, k parts all vanish.
    pub fn is_real(&self) -> bool {
        self.im_i.is_zero() && self.im_j.is_zero() && self.im_k.is_zero()
    }

    /// True when the j and k parts vanish (element of the complex subfield span{1, i}).
    pub fn is_complex(&self) -> bool {
        self.im_j.is_zero() && self.im_k.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.re.clone(),
            -self.im_i.clone(),
            -self.im_j.clone(),
            -self.im_k.clone(),
        )
    }

    /// Squared norm a₀² + a₁² + a₂² + a₃², a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re
            + &self.im_i * &self.im_i
            + &self.im_j * &self.im_j
            + &self.im_k * &self.im_k
    }

    /// Multiplicative inverse conj(q)/|q|²; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let n = self.norm_sq();
        Ok(self.conj().scale(&(Rational::one() / n)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quaternion::new(
            &self.re * r,
            &self.im_i * r,
            &self.im_j * r,
            &self.im_k * r,
        )
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.re + &rhs.re,
            &self.im_i + &rhs.im_i,
            &self.im_j + &rhs.im_j,
            &self.im_k + &rhs.im_k,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.re - &rhs.re,
            &self.im_i - &rhs.im_i,
            &self.im_j - &rhs.im_j,
            &self.im_k - &rhs.im_k,
        )
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (&self.re, &self.im_i, &self.im_j, &self.im_k);
        let (b0, b1, b2, b3) = (&rhs.re, &rhs.im_i, &rhs.im_j, &rhs.im_k);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(
            -self.re.clone(),
            -self.im_i.clone(),
            -self.im_j.clone(),
            -self.im_k.clone(),
        )
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, rhs: &Quaternion) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Quaternion> for Quaternion {
    fn mul_assign(&mut self, rhs: &Quaternion) {
        *self = &*self * rhs;
    }
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as a terminating decimal when the reduced denominator
/// is of the form 2^a·5^b, falling back to p/q otherwise.
pub fn rational_to_decimal(r: &Rational) -> String {
    let mut den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut pow2 = 0u32;
    let mut pow5 = 0u32;
    while (&den % &two).is_zero() {
        den /= &two;
        pow2 += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        pow5 += 1;
    }
    if !den.is_one() {
        return format_rational(r);
    }
    let shift = pow2.max(pow5);
    let scale = BigInt::from(10).pow(shift);
    let scaled = r.numer() * &scale / r.denom();
    if shift == 0 {
        return scaled.to_string();
    }
    let neg = scaled.is_negative();
    let abs = scaled.abs().to_string();
    let digits = if abs.len() as u32 <= shift {
        format!("0.{}{}", "0".repeat(shift as usize - abs.len()), abs)
    } else {
        let split = abs.len() - shift as usize;
        format!("{}.{}", &abs[..split], &abs[split..])
    };
    if neg {
        format!("-{}", digits)
    } else {
        digits
    }
}

impl Quaternion {
    /// Text form "a0 + a1i + a2j + a3k" with zero terms omitted.
    /// With `decimal`, terminating rationals render as decimals (e.g. 19/2 -> 9.5).
    pub fn to_text(&self, decimal: bool) -> String {
        let fmt_coeff = |r: &Rational| {
            if decimal {
                rational_to_decimal(r)
            } else {
                format_rational(r)
            }
        };
        let mut out = String::new();
        let parts: [(&Rational, &str); 4] = [
            (&self.re, ""),
            (&self.im_i, "i"),
            (&self.im_j, "j"),
            (&self.im_k, "k"),
        ];
        for (coeff, unit) in parts {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            let body = if !unit.is_empty() && mag.is_one() {
                unit.to_string()
            } else {
                format!("{}{}", fmt_coeff(&mag), unit)
            };
            if out.is_empty() {
                if coeff.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_part: BigInt = if int == "-" || int.is_empty() {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let frac_num: BigInt = frac.parse().ok()?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let abs = int_part.abs() * &den + frac_num;
        let signed = if neg { -abs } else { abs };
        return Some(BigRational::new(signed, den));
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

/// Parses "a0 + a1i + a2j + a3k" with omitted zero terms, bare units
/// ("i", "-j"), rational ("19/2") or decimal ("9.5") coefficients.
impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |col: usize, msg: &str| Error::Parse {
            line: 0,
            col,
            msg: msg.to_string(),
        };
        // Normalize unicode minus and strip whitespace, then split into
        // signed terms. Term grammar: [+-] coeff? unit? with unit in {i,j,k}.
        let cleaned: String = s.replace('\u{2212}', "-");
        let compact: String = cleaned.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err(0, "empty quaternion literal"));
        }
        let mut q = Quaternion::zero();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let start = pos;
            if !first && !matches!(bytes[pos], b'+' | b'-') {
                return Err(err(start, "expected `+` or `-` between terms"));
            }
            first = false;
            let sign = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    1
                }
                b'-' => {
                    pos += 1;
                    -1
                }
                _ => 1,
            };
            let num_start = pos;
            while pos < bytes.len() && matches!(bytes[pos], b'0'..=b'9' | b'/' | b'.') {
                pos += 1;
            }
            let num_str = &compact[num_start..pos];
            let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
                let u = bytes[pos];
                pos += 1;
                Some(u)
            } else {
                None
            };
            if num_str.is_empty() && unit.is_none() {
                return Err(err(start, "expected coefficient or unit"));
            }
            let mut coeff = if num_str.is_empty() {
                Rational::one()
            } else {
                parse_rational(num_str)
                    .ok_or_else(|| err(num_start, &format!("bad coefficient `{num_str}`")))?
            };
            if sign < 0 {
                coeff = -coeff;
            }
            let slot = match unit {
                None => &mut q.re,
                Some(b'i') => &mut q.im_i,
                Some(b'j') => &mut q.im_j,
                Some(b'k') => &mut q.im_k,
                _ => unreachable!(),
            };
            *slot += coeff;
        }
        Ok(q)
    }
}
