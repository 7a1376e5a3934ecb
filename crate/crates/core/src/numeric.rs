//! Exact rational plumbing: parsing, decimal rendering, logarithmic images.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used for curvatures, indices and expectations.
pub type Rat = num_rational::BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "3", "-3/4" or a plain decimal like "0.35" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Input(format!("cannot parse rational from {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Input(format!("zero denominator in {t:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let digits = frac.trim();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int = int.trim();
        let (neg, int) = match int.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int),
        };
        let whole: BigInt = if int.is_empty() { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
        if whole.is_negative() {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let frac_num: BigInt = digits.parse().map_err(|_| bad())?;
        let val = Rat::new(whole * &scale + frac_num, scale);
        return Ok(if neg { -val } else { val });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Renders a rational as "p/q", or just "p" for integers.
pub fn rational_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn decimal_digit_count(x: &BigUint) -> usize {
    x.to_str_radix(10).len()
}

/// Correctly rounded decimal image with `sig` significant digits.
///
/// Values whose decimal exponent falls outside a readable window use
/// scientific notation, mirroring printf's %g switchover.
pub fn decimal_string(x: &Rat, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let num = x.numer().magnitude().clone();
    let den = x.denom().magnitude().clone();
    // e: unique integer with 10^e <= num/den < 10^(e+1)
    let mut e = decimal_digit_count(&num) as i64 - decimal_digit_count(&den) as i64;
    let ten = BigUint::from(10u32);
    let cmp_pow = |e: i64| -> std::cmp::Ordering {
        // compare num/den with 10^e
        if e >= 0 {
            num.cmp(&(&den * ten.pow(e as u32)))
        } else {
            (&num * ten.pow((-e) as u32)).cmp(&den)
        }
    };
    if cmp_pow(e) == std::cmp::Ordering::Less {
        e -= 1;
    } else if cmp_pow(e + 1) != std::cmp::Ordering::Less {
        e += 1;
    }
    // digits = round(num/den * 10^(sig-1-e)), half away from zero
    let shift = sig as i64 - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * ten.pow(shift as u32), den)
    } else {
        (num, den * ten.pow((-shift) as u32))
    };
    let mut digits = (&scaled_num + &scaled_den / 2u32) / &scaled_den;
    if digits >= ten.pow(sig as u32) {
        // rounding carried into a new leading digit, e.g. 9.97 -> 10.0
        digits /= &ten;
        e += 1;
    }
    let ds = digits.to_str_radix(10);
    debug_assert_eq!(ds.len(), sig);
    let mantissa_body = |ds: &str| -> String {
        if ds.len() == 1 {
            ds.to_string()
        } else {
            format!("{}.{}", &ds[..1], &ds[1..])
        }
    };
    let body = if e >= sig as i64 || e < -4 {
        format!("{}e{}{}", mantissa_body(&ds), if e < 0 { "-" } else { "+" }, e.abs())
    } else if e >= 0 {
        let point = (e + 1) as usize;
        if point >= ds.len() {
            format!("{}{}", ds, "0".repeat(point - ds.len()))
        } else {
            format!("{}.{}", &ds[..point], &ds[point..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Exact terminating decimal of `x` when the reduced denominator is of the
/// form 2^a 5^b with at most `max_digits` fractional digits.
pub fn exact_decimal(x: &Rat, max_digits: usize) -> Option<String> {
    let mut den = x.denom().magnitude().clone();
    let mut twos = 0usize;
    let mut fives = 0usize;
    let two = BigUint::from(2u32);
    let five = BigUint::from(5u32);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let frac_digits = twos.max(fives);
    if frac_digits > max_digits {
        return None;
    }
    let scaled = x.numer() * BigInt::from(10u32).pow(frac_digits as u32) / x.denom();
    let neg = scaled.is_negative();
    let mut s = scaled.magnitude().to_str_radix(10);
    if s.len() <= frac_digits {
        s = format!("{}{}", "0".repeat(frac_digits + 1 - s.len()), s);
    }
    let mut out = if frac_digits == 0 {
        s
    } else {
        let (int_part, frac_part) = s.split_at(s.len() - frac_digits);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    };
    if neg {
        out = format!("-{out}");
    }
    Some(out)
}

/// Natural log of a positive big integer, via the leading 53 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero());
    let bits = x.bits();
    if bits <= 53 {
        (x.to_u64().unwrap() as f64).ln()
    } else {
        let shift = bits - 53;
        let top = (x >> shift).to_u64().unwrap();
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Signed logarithmic image: sign(x) * ln|x|, with 0 mapped to 0.
pub fn log_pm(x: &Rat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mag = ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude());
    if x.is_negative() {
        -mag
    } else {
        mag
    }
}

/// f64 image of an exact rational; saturates to +/- infinity out of range.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Sign helper for alternating sums: (-1)^k.
pub fn alt_sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn big_sign(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
