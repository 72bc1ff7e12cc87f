//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Harmonic number H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0.
pub fn harmonic(k: usize) -> Rational {
    (1..=k).fold(zero(), |acc, l| acc + frac(1, l as i64))
}

/// p * H_count computed as the sum of p/l, matching the sharing potential.
pub fn harmonic_share(p: &Rational, count: usize) -> Rational {
    if p.is_zero() {
        return zero();
    }
    p * harmonic(count)
}

/// Parses "num/den", an integer, or a finite decimal ("6.1") exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, dec)) = t.split_once('.') {
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole: BigInt = if whole_abs.is_empty() {
            BigInt::zero()
        } else {
            whole_abs.parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(dec.len() as u32);
        let digits: BigInt = dec.parse().ok()?;
        let mag = Rational::new(whole * &scale + digits, scale);
        return Some(if negative { -mag } else { mag });
    }
    t.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Renders as "num/den", or a bare integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Always "num/den", used by the CSV exports.
pub fn format_ratio_form(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Lossy conversion for rendered reports only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
