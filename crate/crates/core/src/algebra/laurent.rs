use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GaussianInteger;
use crate::error::{Error, Result};

/// Finite sum of `c_k t^k` with integer coefficients and `k` in Z.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `t^e - t^-e`
    pub fn sym_binomial(e: i64) -> Self {
        let mut p = Self::monomial(1, e);
        p.add_term(e.checked_neg().expect("exponent overflow"), BigInt::from(-1));
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `t^s`.
    pub fn checked_shift(&self, s: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            terms.insert(e.checked_add(s).ok_or(Error::ExponentOverflow)?, c.clone());
        }
        Ok(Self { terms })
    }

    pub fn shift(&self, s: i64) -> Self {
        self.checked_shift(s).expect("exponent overflow")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &o.terms {
                out.add_term(a.checked_add(b).ok_or(Error::ExponentOverflow)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(t^-1)`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e.checked_neg().expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t -> t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e.checked_mul(k).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Value at `t = i`, using `i^-1 = -i`.
    pub fn eval_at_i(&self) -> GaussianInteger {
        let mut acc = GaussianInteger::zero();
        for (&e, c) in &self.terms {
            acc = &acc + &GaussianInteger::i_pow(e).scale(c);
        }
        acc
    }

    /// Value at an integer point `t = x` (x must be nonzero when negative exponents occur).
    pub fn eval_rational(&self, x: &BigInt) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let xe = if e >= 0 {
                BigRational::from_integer(num_traits::pow(x.clone(), e as usize))
            } else {
                BigRational::from_integer(num_traits::pow(x.clone(), (-e) as usize)).recip()
            };
            acc += xe * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact division; `None` if the divisor is zero or does not divide.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let d_lead = d.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let lo = self.min_exp().unwrap();
        // long division from the top; the remainder must vanish before dropping below `lo`
        while let Some(hi) = rem.max_exp() {
            if hi - (d_hi - d_lo) < lo {
                return None;
            }
            let (q, r) = rem.terms[&hi].div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let s = hi - d_hi;
            let step = Self::monomial(q.clone(), s);
            rem = &rem - &(&step * d);
            quot.add_term(s, q);
        }
        Some(quot)
    }

    /// Text form: terms in descending exponent order, `c*t^k` with explicit signs.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.terms.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect()
    }

    pub fn from_json_map(m: &BTreeMap<String, String>) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in m {
            let e = e.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            let c = c.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(o).expect("exponent overflow")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, o: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl super::ExactRing for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn one() -> Self {
        LaurentPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*t^{}", c.abs(), e)?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Accepts the `Display` form, e.g. `1*t^2 - 1*t^0 + 1*t^-2`, and `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let mut p = Self::zero();
        let mut sign = BigInt::one();
        let mut expect_term = true;
        for tok in s.split_whitespace() {
            match tok {
                "+" if !expect_term => {
                    sign = BigInt::one();
                    expect_term = true;
                }
                "-" if !expect_term => {
                    sign = -BigInt::one();
                    expect_term = true;
                }
                _ if expect_term => {
                    let (neg, body) = match tok.strip_prefix('-') {
                        Some(b) => (true, b),
                        None => (false, tok),
                    };
                    let (c, e) = body.split_once("*t^").ok_or_else(bad)?;
                    let mut c = c.parse::<BigInt>().map_err(|_| bad())? * &sign;
                    if neg {
                        c = -c;
                    }
                    p.add_term(e.parse::<i64>().map_err(|_| bad())?, c);
                    expect_term = false;
                }
                _ => return Err(bad()),
            }
        }
        if expect_term {
            return Err(bad());
        }
        Ok(p)
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, String>::deserialize(d)?;
        Self::from_json_map(&m).map_err(serde::de::Error::custom)
    }
}
