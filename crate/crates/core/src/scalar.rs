use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Exact complex number with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussScalar {
    re: Rational,
    im: Rational,
}

impl GaussScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussScalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussScalar { re, im: Rational::zero() }
    }

    pub fn int(v: i64) -> Self {
        Self::real(Rational::from_integer(BigInt::from(v)))
    }

    /// Panics on a zero denominator; meant for literals in code.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::real(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn gauss(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussScalar {
            re: Rational::new(re.0.into(), re.1.into()),
            im: Rational::new(im.0.into(), im.1.into()),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        GaussScalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussScalar { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(GaussScalar { re: &self.re / &d, im: -&self.im / &d })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn powu(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Integer power; `None` for a zero base with negative exponent.
    pub fn pow(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.powu(e as u64))
        } else {
            self.inv().map(|r| r.powu(e.unsigned_abs()))
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact k-th root of a positive real rational, if one exists.
    pub fn real_root(&self, k: u32) -> Option<Self> {
        if !self.is_real() || !self.re.is_positive() {
            return None;
        }
        let n = self.re.numer().nth_root(k);
        let d = self.re.denom().nth_root(k);
        let cand = Rational::new(n, d);
        let mut p = Rational::one();
        for _ in 0..k {
            p = &p * &cand;
        }
        (p == self.re).then(|| Self::real(cand))
    }
}

impl Default for GaussScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussScalar {
    fn from(v: i64) -> Self {
        Self::int(v)
    }
}

impl From<Rational> for GaussScalar {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn sub(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: &GaussScalar) -> GaussScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussScalar::real(&self.re * &rhs.re);
        }
        GaussScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

// panics on division by zero, like the rational type underneath
impl<'a> Div<&'a GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn div(self, rhs: &GaussScalar) -> GaussScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussScalar::real(&self.re / &rhs.re);
        }
        self.checked_div(rhs).expect("GaussScalar division by zero")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<GaussScalar> for GaussScalar {
            type Output = GaussScalar;
            fn $f(self, rhs: GaussScalar) -> GaussScalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussScalar> for GaussScalar {
            type Output = GaussScalar;
            fn $f(self, rhs: &GaussScalar) -> GaussScalar {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<GaussScalar> for &'a GaussScalar {
            type Output = GaussScalar;
            fn $f(self, rhs: GaussScalar) -> GaussScalar {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        GaussScalar { re: -self.re, im: -self.im }
    }
}

impl<'a> Neg for &'a GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        GaussScalar { re: -&self.re, im: -&self.im }
    }
}

impl<'a> AddAssign<&'a GaussScalar> for GaussScalar {
    fn add_assign(&mut self, rhs: &GaussScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussScalar {
    fn add_assign(&mut self, rhs: GaussScalar) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a GaussScalar> for GaussScalar {
    fn sub_assign(&mut self, rhs: &GaussScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> MulAssign<&'a GaussScalar> for GaussScalar {
    fn mul_assign(&mut self, rhs: &GaussScalar) {
        *self = &*self * rhs;
    }
}

impl MulAssign for GaussScalar {
    fn mul_assign(&mut self, rhs: GaussScalar) {
        *self = &*self * &rhs;
    }
}

impl std::iter::Sum for GaussScalar {
    fn sum<I: Iterator<Item = GaussScalar>>(iter: I) -> Self {
        iter.fold(GaussScalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for GaussScalar {
    fn product<I: Iterator<Item = GaussScalar>>(iter: I) -> Self {
        iter.fold(GaussScalar::one(), |a, b| a * b)
    }
}

impl fmt::Display for GaussScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digit");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    // unsigned rational: digits[/digits]
    fn urat(&mut self) -> Result<Rational> {
        let n = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }
}

pub fn parse_scalar(text: &str) -> Result<GaussScalar> {
    let mut c = Cursor { s: text.as_bytes(), pos: 0 };
    let neg = c.peek() == Some(b'-');
    if neg {
        c.pos += 1;
    }
    let mut first = c.urat()?;
    if neg {
        first = -first;
    }
    let out = match c.peek() {
        None => GaussScalar::real(first),
        Some(b'i') => {
            c.pos += 1;
            GaussScalar::new(Rational::zero(), first)
        }
        Some(sign @ (b'+' | b'-')) => {
            c.pos += 1;
            let mut im = c.urat()?;
            if sign == b'-' {
                im = -im;
            }
            if c.peek() != Some(b'i') {
                return c.err("expected 'i'");
            }
            c.pos += 1;
            GaussScalar::new(first, im)
        }
        Some(_) => return c.err("unexpected character"),
    };
    if c.pos != text.len() {
        return c.err("trailing input");
    }
    Ok(out)
}

impl FromStr for GaussScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl serde::Serialize for GaussScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GaussScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

pub fn qpochhammer(a: &GaussScalar, q: &GaussScalar, n: usize) -> GaussScalar {
    let mut acc = GaussScalar::one();
    let mut aqk = a.clone();
    let one = GaussScalar::one();
    for _ in 0..n {
        acc *= &(&one - &aqk);
        aqk = &aqk * q;
    }
    acc
}

pub fn qpochhammer_multi(params: &[GaussScalar], q: &GaussScalar, k: usize) -> GaussScalar {
    params.iter().map(|a| qpochhammer(a, q, k)).product()
}

pub fn rising_factorial(a: &GaussScalar, n: usize) -> GaussScalar {
    (0..n).map(|k| a + &GaussScalar::int(k as i64)).product()
}

pub fn rising_multi(params: &[GaussScalar], n: usize) -> GaussScalar {
    params.iter().map(|a| rising_factorial(a, n)).product()
}

pub fn factorial(n: usize) -> GaussScalar {
    rising_factorial(&GaussScalar::one(), n)
}

pub fn binomial(n: usize, m: usize) -> GaussScalar {
    if m > n {
        return GaussScalar::zero();
    }
    &(&factorial(n) / &factorial(m)) / &factorial(n - m)
}

/// Triangular exponent m(m-1)/2, valid for negative m as well.
pub fn tri(m: i64) -> i64 {
    m * (m - 1) / 2
}

pub fn sign(k: i64) -> GaussScalar {
    if k.rem_euclid(2) == 0 {
        GaussScalar::one()
    } else {
        GaussScalar::int(-1)
    }
}

struct QInner {
    q: GaussScalar,
    qinv: GaussScalar,
    max_degree: usize,
    qq: Vec<GaussScalar>,
}

/// Base q with cached (q;q)_k; cheap to clone and share.
#[derive(Clone)]
pub struct QContext(Arc<QInner>);

pub const DEFAULT_MAX_DEGREE: usize = 16;

impl QContext {
    pub fn new(q: GaussScalar, max_degree: usize) -> Result<Self> {
        let qinv = q.inv().ok_or_else(|| Error::InvalidBase("q = 0".into()))?;
        let mut qq = Vec::with_capacity(max_degree + 1);
        let mut acc = GaussScalar::one();
        let mut qk = q.clone();
        qq.push(acc.clone());
        let one = GaussScalar::one();
        for k in 1..=max_degree {
            acc *= &(&one - &qk);
            if acc.is_zero() {
                return Err(Error::InvalidBase(format!("(q;q)_{k} = 0 for q = {q}")));
            }
            qq.push(acc.clone());
            qk = &qk * &q;
        }
        Ok(QContext(Arc::new(QInner { q, qinv, max_degree, qq })))
    }

    /// Degree cap from `QPOLY_MAX_DEGREE`, default 16.
    pub fn with_env_degree(q: GaussScalar) -> Result<Self> {
        let max = std::env::var("QPOLY_MAX_DEGREE")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_DEGREE);
        Self::new(q, max)
    }

    pub fn q(&self) -> &GaussScalar {
        &self.0.q
    }

    pub fn max_degree(&self) -> usize {
        self.0.max_degree
    }

    pub fn same(&self, other: &QContext) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.q == other.0.q
    }

    pub fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.0.max_degree {
            return Err(Error::DegreeExceeded { n, max: self.0.max_degree });
        }
        Ok(())
    }

    pub fn qq(&self, k: usize) -> Result<&GaussScalar> {
        self.check_degree(k)?;
        Ok(&self.0.qq[k])
    }

    pub fn qpow(&self, k: i64) -> GaussScalar {
        if k >= 0 {
            self.0.q.powu(k as u64)
        } else {
            self.0.qinv.powu(k.unsigned_abs())
        }
    }

    pub fn poch(&self, a: &GaussScalar, n: usize) -> GaussScalar {
        qpochhammer(a, &self.0.q, n)
    }

    pub fn pochs(&self, params: &[GaussScalar], n: usize) -> GaussScalar {
        qpochhammer_multi(params, &self.0.q, n)
    }

    /// ((-1)^n q^{n(n-1)/2})^e
    pub fn gauss_sign_pow(&self, n: i64, e: i64) -> GaussScalar {
        &sign(n * e) * &self.qpow(tri(n) * e)
    }

    pub fn root(&self, k: u32) -> Option<GaussScalar> {
        self.0.q.real_root(k)
    }
}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QContext(q={}, max_degree={})", self.0.q, self.0.max_degree)
    }
}

pub fn qbinomial(n: usize, m: i64, ctx: &QContext) -> Result<GaussScalar> {
    ctx.check_degree(n)?;
    if m < 0 || m as usize > n {
        return Ok(GaussScalar::zero());
    }
    let m = m as usize;
    Ok(ctx.qq(n)? / &(ctx.qq(m)? * ctx.qq(n - m)?))
}

/// (q^{-n};q)_m via the closed product relation.
pub fn qpochhammer_negpow(n: usize, m: usize, ctx: &QContext) -> Result<GaussScalar> {
    ctx.check_degree(n)?;
    if m > n {
        return Ok(GaussScalar::zero());
    }
    let (n_, m_) = (n as i64, m as i64);
    let head = &sign(m_) * &(ctx.qq(n)? / ctx.qq(n - m)?);
    Ok(&head * &ctx.qpow(tri(m_) - n_ * m_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> GaussScalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert!(qpochhammer(&s("7/3"), &s("2/5"), 0).is_one());
        assert_eq!(qpochhammer(&s("1/2"), &s("1/3"), 2), s("5/12"));
        let q = s("2/5");
        let a = q.pow(-2).unwrap();
        assert!(qpochhammer(&a, &q, 3).is_zero());
        assert!(qpochhammer_multi(&[], &s("1/3"), 5).is_one());
        assert_eq!(qpochhammer_multi(&[s("1/2")], &s("1/3"), 2), s("5/12"));
        assert!(qpochhammer_multi(&[s("0"), s("0")], &s("1/3"), 4).is_one());
    }

    #[test]
    fn binomial_and_rising() {
        let ctx = QContext::new(s("1/2"), 8).unwrap();
        assert!(qbinomial(5, 0, &ctx).unwrap().is_one());
        assert_eq!(qbinomial(3, 1, &ctx).unwrap(), s("7/4"));
        assert!(qbinomial(3, 4, &ctx).unwrap().is_zero());
        assert!(qbinomial(3, -1, &ctx).unwrap().is_zero());
        assert!(matches!(qbinomial(9, 1, &ctx), Err(Error::DegreeExceeded { .. })));
        assert!(rising_factorial(&s("9"), 0).is_one());
        assert_eq!(rising_factorial(&s("3"), 2), s("12"));
        assert!(rising_factorial(&s("-2"), 3).is_zero());
    }

    #[test]
    fn negpow_examples() {
        let ctx = QContext::new(s("1/3"), 8).unwrap();
        assert!(qpochhammer_negpow(4, 0, &ctx).unwrap().is_one());
        assert!(qpochhammer_negpow(2, 3, &ctx).unwrap().is_zero());
        let v = qpochhammer_negpow(2, 1, &ctx).unwrap();
        assert_eq!(v, qpochhammer(&s("9"), &s("1/3"), 1));
        assert_eq!(v, s("-8"));
    }

    #[test]
    fn context_rejects_bad_bases() {
        assert!(QContext::new(s("0"), 4).is_err());
        assert!(QContext::new(s("1"), 4).is_err());
        assert!(QContext::new(s("-1"), 4).is_err());
        assert!(QContext::new(s("1i"), 4).is_err());
        assert!(QContext::new(s("1i"), 3).is_ok());
    }

    #[test]
    fn literals() {
        assert_eq!(s("2/5"), GaussScalar::frac(2, 5));
        assert_eq!(s("-1/3+2/7i"), GaussScalar::gauss((-1, 3), (2, 7)));
        assert_eq!(s("3-4i"), GaussScalar::gauss((3, 1), (-4, 1)));
        assert_eq!(s("-2/4i"), GaussScalar::gauss((0, 1), (-1, 2)));
        assert_eq!(parse_scalar("1/0"), Err(Error::ZeroDenominator));
        assert!(matches!(parse_scalar("1/2x"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_scalar(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_scalar("1+2"), Err(Error::Parse { pos: 3, .. })));
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("0-1i").to_string(), "-1i");
    }

    #[test]
    fn roots() {
        assert_eq!(s("16/81").real_root(4), Some(s("2/3")));
        assert_eq!(s("4/9").real_root(2), Some(s("2/3")));
        assert_eq!(s("2/5").real_root(2), None);
        assert_eq!(s("-4").real_root(2), None);
    }

    #[test]
    fn limit_ratio() {
        // (q^a;q)_k/(1-q)^k -> (a)_k with error O(1-q)
        let defect = |eps: &GaussScalar, a: i64, k: usize| {
            let q = &GaussScalar::one() - eps;
            let lhs = &qpochhammer(&q.powu(a as u64), &q, k) / &eps.powu(k as u64);
            (&lhs - &rising_factorial(&GaussScalar::int(a), k)).to_f64().0.abs()
        };
        for a in 1..=4 {
            for k in 1..=4 {
                let (d1, d2) = (defect(&s("1/1000"), a, k), defect(&s("1/10000"), a, k));
                if d1 == 0.0 && d2 == 0.0 {
                    continue;
                }
                let r = d1 / d2;
                assert!((5.0..=20.0).contains(&r), "a={a} k={k} ratio {r}");
            }
        }
    }

    fn rat() -> impl Strategy<Value = GaussScalar> {
        (-40i64..40, 1i64..40).prop_map(|(n, d)| GaussScalar::frac(n, d))
    }

    fn gauss() -> impl Strategy<Value = GaussScalar> {
        (rat(), rat()).prop_map(|(a, b)| &a + &(&b * &GaussScalar::i()))
    }

    fn base() -> impl Strategy<Value = GaussScalar> {
        prop_oneof![
            Just(s("2/5")),
            Just(s("3/7")),
            Just(s("-5/3")),
            Just(s("1/2+1/3i")),
            Just(s("7/4")),
        ]
    }

    proptest! {
        #[test]
        fn literal_round_trip(x in gauss()) {
            prop_assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn pochhammer_split(a in rat(), q in base(), m in 0usize..=12, n in 0usize..=12) {
            let lhs = qpochhammer(&a, &q, m + n);
            let rhs = &qpochhammer(&a, &q, m) * &qpochhammer(&(&a * &q.powu(m as u64)), &q, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_shift(a in rat(), q in base(), n in 0usize..=12) {
            prop_assume!(!a.is_one());
            let one = GaussScalar::one();
            let lhs = qpochhammer(&(&a * &q), &q, n);
            let rhs = &qpochhammer(&a, &q, n) * &(&(&one - &(&a * &q.powu(n as u64))) / &(&one - &a));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn qbinomial_product(q in base(), m in 0usize..=4, k in 0usize..=4, extra in 0usize..=4) {
            let n = m + k + extra;
            let ctx = QContext::new(q.clone(), 12).unwrap();
            let lhs = &qbinomial(n, m as i64, &ctx).unwrap() * &qbinomial(n - m, k as i64, &ctx).unwrap();
            let tail = &qpochhammer(&q.powu(k as u64 + 1), &q, m) / ctx.qq(m).unwrap();
            let rhs = &qbinomial(n, (k + m) as i64, &ctx).unwrap() * &tail;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn qbinomial_symmetric(q in base(), m in 0usize..=6, extra in 0usize..=6) {
            let n = m + extra;
            let ctx = QContext::new(q, 12).unwrap();
            prop_assert_eq!(qbinomial(n, m as i64, &ctx).unwrap(), qbinomial(n, (n - m) as i64, &ctx).unwrap());
        }

        #[test]
        fn negpow_matches_product(q in base(), m in 0usize..=6, extra in 0usize..=6) {
            let n = m + extra;
            let ctx = QContext::new(q.clone(), 12).unwrap();
            let direct = qpochhammer(&ctx.qpow(-(n as i64)), &q, m);
            prop_assert_eq!(qpochhammer_negpow(n, m, &ctx).unwrap(), direct);
        }
    }
}
