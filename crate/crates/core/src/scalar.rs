//! Exact rational scalars and sums of square roots.
//!
//! Every volume, mixed volume and metric value of a polytope is a [`Scalar`].
//! Lengths and areas of faces are square roots of rationals; those are kept as
//! a [`Surd`], i.e. a finite sum `Σ cᵢ √rᵢ` with rational coefficients and
//! square-free integer radicands, and only turned into floats at report time.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        if v.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Parses `"p"` or `"p/q"`. Decimal and exponent notation are rejected so that
/// every accepted string denotes exactly one rational.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(Error::Parse(format!("not a rational literal: {text:?}")));
    }
    let n: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
    let d: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Scalar::new(n, d))
}

pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

/// Rounds `x` to the nearest multiple of `2^-bits`.
pub fn dyadic(x: f64, bits: u32) -> Scalar {
    let scale = 2f64.powi(bits as i32);
    let n = (x * scale).round();
    let num = BigInt::from(n as i128);
    Scalar::new(num, BigInt::one() << bits as usize)
}

pub fn pow(v: &Scalar, e: u32) -> Scalar {
    let mut out = Scalar::one();
    for _ in 0..e {
        out *= v;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Exact square root when `v` is the square of a rational.
pub fn exact_sqrt(v: &Scalar) -> Option<Scalar> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer();
    let d = v.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Scalar::new(rn, rd))
    } else {
        None
    }
}

/// Rational bounds `lo ≤ √v ≤ hi` with `hi - lo ≤ 2^-bits · max(1, √v)`.
pub fn sqrt_bounds(v: &Scalar, bits: u32) -> (Scalar, Scalar) {
    assert!(!v.is_negative(), "sqrt of a negative rational");
    if let Some(r) = exact_sqrt(v) {
        return (r.clone(), r);
    }
    // √(n/d) = √(n·d)/d; scale by 4^k so the integer root carries `bits` bits.
    let nd = v.numer() * v.denom();
    let shift = 2 * bits as usize + 2;
    let scaled: BigInt = &nd << shift;
    let root = scaled.sqrt();
    let den = v.denom() << (bits as usize + 1);
    let lo = Scalar::new(root.clone(), den.clone());
    let hi = Scalar::new(root + 1, den);
    (lo, hi)
}

/// Splits a positive integer into `(k, m)` with `n = k²·m` and `m` free of
/// square factors below the trial-division limit.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let r = rest.sqrt();
    if &r * &r == rest {
        return (r, BigInt::one());
    }
    let mut p: u32 = 2;
    while p < 20_000 {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        if p2 > rest {
            break;
        }
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            outside *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        outside *= r;
        rest = BigInt::one();
    }
    (outside, rest)
}

/// A finite sum `Σ c·√r` with rational `c` and integer radicand `r ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Surd {
    terms: BTreeMap<BigInt, Scalar>,
}

impl Surd {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(v: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(BigInt::one(), v);
        s
    }

    /// `coeff · √radicand` for a nonnegative rational radicand.
    pub fn sqrt_of(radicand: &Scalar, coeff: Scalar) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        let mut s = Self::zero();
        if radicand.is_zero() || coeff.is_zero() {
            return s;
        }
        // √(a/b) = √(ab)/b
        let ab = radicand.numer() * radicand.denom();
        let (outside, inside) = square_split(&ab);
        let c = coeff * Scalar::new(outside, radicand.denom().clone());
        s.add_term(inside, c);
        s
    }

    fn add_term(&mut self, radicand: BigInt, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn add(&self, other: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Surd {
        let mut out = Surd::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), c * k);
        }
        out
    }

    /// The rational value, when no irrational term survives.
    pub fn as_rational(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &Scalar)> {
        self.terms.iter()
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| to_f64(c) * r.to_f64().unwrap_or(f64::INFINITY).sqrt())
            .sum()
    }

    /// Certified rational enclosure of the value.
    pub fn bounds(&self, bits: u32) -> (Scalar, Scalar) {
        let mut lo = Scalar::zero();
        let mut hi = Scalar::zero();
        for (r, c) in &self.terms {
            let (rl, rh) = sqrt_bounds(&Scalar::from_integer(r.clone()), bits);
            if c.is_negative() {
                lo += c * &rh;
                hi += c * &rl;
            } else {
                lo += c * &rl;
                hi += c * &rh;
            }
        }
        (lo, hi)
    }

    pub fn is_positive(&self) -> bool {
        let (lo, hi) = self.bounds(64);
        if lo.is_positive() {
            return true;
        }
        if !hi.is_positive() {
            return false;
        }
        self.bounds(256).0.is_positive()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, c) in &self.terms {
            let sep = if first {
                ""
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let shown = if first { c.clone() } else { c.abs() };
            write!(f, "{sep}")?;
            if r.is_one() {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{shown}*sqrt({r})")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Greatest common divisor of the entries, always nonnegative.
pub(crate) fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
}

pub(crate) fn sign(v: &Scalar) -> Sign {
    if v.is_zero() {
        Sign::NoSign
    } else if v.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}
