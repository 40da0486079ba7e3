//! Exact arithmetic in `Q(i)(√q)`.
//!
//! A [`Scalar`] is `a + b·√q` with `a, b` Gaussian rationals. The residue
//! cardinality `q` is only recorded when `b ≠ 0`, so every Scalar without a
//! `√q` part is literally its Gaussian-rational part and mixes freely with
//! Scalars of any `q`. Two Scalars that both carry `√q` for different `q`
//! cannot be combined: the `try_*` methods report [`Error::MixedQ`] and the
//! operator impls panic.
//!
//! Text form: `a/b`, `a/b+c/d*i`, `<gr>+<gr>*sqrtq`, written as a flat sum
//! of monomials in `i` and `sqrtq`, e.g. `1/2-3*i+sqrtq-2/5*i*sqrtq`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `re + im·i` with exact rational parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(pow_by_squaring(base, k.unsigned_abs(), Self::one(), |x, y| x * y))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn pow_by_squaring<T: Clone>(mut base: T, mut k: u64, one: T, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc = one;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::from_rational(&self.re * &rhs.re);
        }
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(GaussRational, Add, add);
forward_owned_binop!(GaussRational, Sub, sub);
forward_owned_binop!(GaussRational, Mul, mul);

/// An element `a + b·√q` of `Q(i)(√q)`.
///
/// Canonical form: `q` is `Some` iff `b ≠ 0`, and never a perfect square
/// (a square `q` is folded into `a` at construction).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    a: GaussRational,
    b: GaussRational,
    q: Option<u64>,
}

impl From<GaussRational> for Scalar {
    fn from(a: GaussRational) -> Self {
        Scalar { a, b: GaussRational::zero(), q: None }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        GaussRational::from_integer(n).into()
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        GaussRational::from_rational(r).into()
    }
}

impl Scalar {
    /// `a + b·√q`, canonicalized.
    pub fn new(a: GaussRational, b: GaussRational, q: u64) -> Self {
        if b.is_zero() {
            return a.into();
        }
        let r = q.sqrt();
        if r * r == q {
            let folded = &a + &b.scale(&BigRational::from_integer(r.into()));
            return folded.into();
        }
        Scalar { a, b, q: Some(q) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    pub fn i() -> Self {
        GaussRational::i().into()
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRational::from_ratio(num, den).into()
    }

    /// `re + im·i` for small integer ratios; handy in tests and generators.
    pub fn gauss(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRational::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
        .into()
    }

    pub fn sqrt_q(q: u64) -> Self {
        Self::new(GaussRational::zero(), GaussRational::one(), q)
    }

    /// `q^(k/2)` exactly.
    pub fn q_half_power(q: u64, k: i64) -> Self {
        let whole = k.div_euclid(2);
        let base = Scalar::from(BigRational::from_integer(BigInt::from(q)));
        // q ≥ 1 here, so the inverse exists
        let int_part = base.pow(whole).expect("q is nonzero");
        if k.rem_euclid(2) == 1 {
            int_part * Self::sqrt_q(q)
        } else {
            int_part
        }
    }

    /// Integer power `q^k` (k may be negative).
    pub fn q_power(q: u64, k: i64) -> Self {
        Self::q_half_power(q, 2 * k)
    }

    pub fn rational_part(&self) -> &GaussRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &GaussRational {
        &self.b
    }

    /// The `q` of the `√q` part, if there is one.
    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Number of nonzero monomials in the printed form; used to decide when
    /// to parenthesize.
    pub fn term_count(&self) -> usize {
        [self.a.re(), self.a.im(), self.b.re(), self.b.im()]
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }

    fn combine_q(&self, other: &Scalar) -> Result<Option<u64>> {
        match (self.q, other.q) {
            (Some(x), Some(y)) if x != y => Err(Error::MixedQ(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    fn rebuild(a: GaussRational, b: GaussRational, q: Option<u64>) -> Self {
        match q {
            Some(q) => Self::new(a, b, q),
            None => {
                debug_assert!(b.is_zero());
                a.into()
            }
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        if self.q.is_none() && other.q.is_none() {
            return Ok((&self.a + &other.a).into());
        }
        let q = self.combine_q(other)?;
        Ok(Self::rebuild(&self.a + &other.a, &self.b + &other.b, q))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        if self.q.is_none() && other.q.is_none() {
            return Ok((&self.a * &other.a).into());
        }
        let q = self.combine_q(other)?;
        let mut a = &self.a * &other.a;
        if let Some(qv) = q {
            if !self.b.is_zero() && !other.b.is_zero() {
                let qr = BigRational::from_integer(BigInt::from(qv));
                a = &a + &(&self.b * &other.b).scale(&qr);
            }
        }
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Self::rebuild(a, b, q))
    }

    /// Multiplicative inverse via the conjugate `a − b√q` over `a² − q b²`.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.q {
            None => Ok(self.a.inv()?.into()),
            Some(q) => {
                let qr = BigRational::from_integer(BigInt::from(q));
                let norm = &(&self.a * &self.a) - &(&self.b * &self.b).scale(&qr);
                let inv_norm = norm.inv()?;
                Ok(Self::new(&self.a * &inv_norm, -(&self.b * &inv_norm), q))
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(pow_by_squaring(base, k.unsigned_abs(), Scalar::one(), |x, y| x * y))
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = self.a.to_complex();
        if let Some(q) = self.q {
            z += self.b.to_complex() * (q as f64).sqrt();
        }
        z
    }

    /// Parses the text form. `q` is required when the text mentions `sqrtq`.
    pub fn parse(text: &str, q: Option<u64>) -> Result<Scalar> {
        parse_scalar(text, q)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b, q: self.q }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

forward_owned_binop!(Scalar, Add, add);
forward_owned_binop!(Scalar, Sub, sub);
forward_owned_binop!(Scalar, Mul, mul);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

// ---------------------------------------------------------------------------
// Text form

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes `Σ c_k · unit_k`, skipping zero coefficients and unit coefficients.
fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &[(&BigRational, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, unit) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { "-" } else { "+" })?;
        }
        first = false;
        if unit.is_empty() {
            f.write_str(&fmt_rational(&abs))?;
        } else if abs.is_one() {
            f.write_str(unit)?;
        } else {
            write!(f, "{}*{}", fmt_rational(&abs), unit)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &[
                (self.a.re(), ""),
                (self.a.im(), "i"),
                (self.b.re(), "sqrtq"),
                (self.b.im(), "i*sqrtq"),
            ],
        )
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = || Error::Parse { what: "rational", text: text.to_string() };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let valid = |s: &str, allow_sign: bool| {
        let digits = if allow_sign { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = match den {
        Some(d) if valid(d, false) => d.parse().map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// Splits `text` into signed monomials at top-level `+`/`-`.
fn split_terms(text: &str) -> Vec<(bool, &str)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    if let Some(&c) = bytes.first() {
        if c == b'+' || c == b'-' {
            neg = c == b'-';
            start = 1;
            i = 1;
        }
    }
    while i < bytes.len() {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && i > start && bytes[i - 1] != b'*' && bytes[i - 1] != b'/' {
            out.push((neg, &text[start..i]));
            neg = c == b'-';
            start = i + 1;
        }
        i += 1;
    }
    out.push((neg, &text[start..]));
    out
}

fn parse_scalar(text: &str, q: Option<u64>) -> Result<Scalar> {
    let err = || Error::Parse { what: "scalar", text: text.to_string() };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    let mut a = GaussRational::zero();
    let mut b = GaussRational::zero();
    let mut saw_sqrt = false;
    for (neg, term) in split_terms(&compact) {
        if term.is_empty() {
            return Err(err());
        }
        let mut coeff = BigRational::one();
        let mut have_coeff = false;
        let mut imag = false;
        let mut root = false;
        for factor in term.split('*') {
            match factor {
                "i" if !imag => imag = true,
                "sqrtq" if !root => root = true,
                _ if !have_coeff => {
                    coeff = parse_rational(factor).map_err(|_| err())?;
                    have_coeff = true;
                }
                _ => return Err(err()),
            }
        }
        if neg {
            coeff = -coeff;
        }
        let g = if imag {
            GaussRational::new(BigRational::zero(), coeff)
        } else {
            GaussRational::from_rational(coeff)
        };
        if root {
            saw_sqrt = true;
            b = &b + &g;
        } else {
            a = &a + &g;
        }
    }
    if saw_sqrt {
        let q = q.ok_or_else(err)?;
        Ok(Scalar::new(a, b, q))
    } else {
        Ok(a.into())
    }
}

impl FromStr for GaussRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_scalar(s, None).map_err(|_| Error::Parse {
            what: "Gaussian rational",
            text: s.to_string(),
        })?;
        Ok(v.a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn gaussian_norm() {
        let x = Scalar::gauss((1, 1), (1, 1));
        let y = Scalar::gauss((1, 1), (-1, 1));
        assert_eq!(x * y, Scalar::from(2));
    }

    #[test]
    fn sqrt_q_squares_to_q() {
        for q in [2u64, 3, 4, 5, 8, 9, 25, 27, 49, 121] {
            let s = Scalar::sqrt_q(q);
            assert_eq!(&s * &s, Scalar::from(q as i64), "q = {q}");
        }
    }

    #[test]
    fn rationalize_by_conjugate() {
        let x = Scalar::one() + Scalar::sqrt_q(5);
        let expected = Scalar::new(GaussRational::from_ratio(-1, 4), GaussRational::from_ratio(1, 4), 5);
        assert_eq!(x.inv().unwrap(), expected);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn powers() {
        assert_eq!(Scalar::from(2).pow(3).unwrap(), Scalar::from(8));
        assert_eq!(Scalar::gauss((3, 7), (2, 5)).pow(0).unwrap(), Scalar::one());
        assert_eq!(Scalar::sqrt_q(5).pow(-2).unwrap(), r(1, 5));
        assert_eq!(Scalar::q_half_power(7, -3), Scalar::sqrt_q(7).pow(-3).unwrap());
        assert_eq!(Scalar::q_half_power(7, 4), Scalar::from(49));
    }

    #[test]
    fn perfect_square_q_folds() {
        let x = Scalar::new(GaussRational::from_ratio(1, 2), GaussRational::from_ratio(3, 1), 9);
        assert_eq!(x.q(), None);
        assert!(x.sqrt_part().is_zero());
        assert_eq!(x, r(19, 2));
        let y = Scalar::new(GaussRational::zero(), GaussRational::i(), 4);
        assert_eq!(y, Scalar::gauss((0, 1), (2, 1)));
    }

    #[test]
    fn mixed_q_is_an_error() {
        let x = Scalar::sqrt_q(2);
        let y = Scalar::sqrt_q(3);
        assert_eq!(x.try_mul(&y), Err(Error::MixedQ(2, 3)));
        assert_eq!(x.try_add(&y), Err(Error::MixedQ(2, 3)));
        // a rational Scalar mixes with any q
        assert!(x.try_mul(&r(1, 2)).is_ok());
    }

    #[test]
    fn canonical_text() {
        let cases = [
            ("0", None),
            ("1/2", None),
            ("-3", None),
            ("i", None),
            ("-i", None),
            ("1/2-3/4*i", None),
            ("2/3*i", None),
            ("1+sqrtq", Some(5)),
            ("-1/4+1/4*sqrtq", Some(5)),
            ("1/2+i-sqrtq+2/7*i*sqrtq", Some(3)),
        ];
        for (text, q) in cases {
            let v = Scalar::parse(text, q).unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!(Scalar::parse(" 2/4 + 1*i ", None).unwrap().to_string(), "1/2+i");
        assert_eq!(Scalar::parse("sqrtq", Some(4)).unwrap().to_string(), "2");
        assert_eq!("3/6+-1/2*i".parse::<GaussRational>().unwrap().to_string(), "1/2-1/2*i");
    }

    #[test]
    fn malformed_text() {
        for bad in ["", "1/0", "abc", "1//2", "i*i", "2*3", "+", "1+", "sqrtq"] {
            assert!(Scalar::parse(bad, None).is_err(), "{bad:?} parsed");
        }
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    fn scalar(q: u64) -> impl Strategy<Value = Scalar> {
        (small_rational(), small_rational(), small_rational(), small_rational()).prop_map(
            move |(a, b, c, d)| Scalar::new(GaussRational::new(a, b), GaussRational::new(c, d), q),
        )
    }

    fn any_q_scalars() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        prop_oneof![Just(2u64), Just(3), Just(4), Just(5), Just(9), Just(27)]
            .prop_flat_map(|q| (scalar(q), scalar(q), scalar(q)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn field_axioms((x, y, z) in any_q_scalars()) {
            prop_assert_eq!((&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
            }
        }
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent((x, _, _) in any_q_scalars()) {
            let once = Scalar::parse(&x.to_string(), x.q()).unwrap();
            prop_assert_eq!(&once, &x);
            let twice = Scalar::parse(&once.to_string(), once.q()).unwrap();
            prop_assert_eq!(twice.to_string(), once.to_string());
        }

        #[test]
        fn complex_shadow_is_a_ring_map((x, y, _) in any_q_scalars()) {
            let lhs = (&x * &y).to_complex();
            let rhs = x.to_complex() * y.to_complex();
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }
}

/// `re + im·i` with integer parts: a gcd-free carrier for bulk products of
/// Gaussian rationals over a common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussInt { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussInt { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.im.is_zero() && other.im.is_zero() {
            return GaussInt { re: &self.re * &other.re, im: BigInt::zero() };
        }
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// `x · den`; `den` must be a multiple of both denominators of `x`.
    pub fn scaled(x: &GaussRational, den: &BigInt) -> Self {
        let part = |r: &BigRational| r.numer() * (den / r.denom());
        GaussInt { re: part(&x.re), im: part(&x.im) }
    }

    /// `self / den`.
    pub fn over(self, den: &BigInt) -> GaussRational {
        GaussRational::new(BigRational::new(self.re, den.clone()), BigRational::new(self.im, den.clone()))
    }
}

/// Least common multiple of all real and imaginary denominators.
pub(crate) fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a GaussRational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()))
}
