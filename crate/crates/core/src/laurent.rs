//! Laurent polynomials and rational functions in `X = q^{-s}` over [`Scalar`].
//!
//! No polynomial gcd is ever taken: [`RatFunc`] equality is decided by
//! cross-multiplication, which is all the identity checks need.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::{common_denominator, GaussInt, Scalar};

/// Truncation depth used when none is given.
pub const DEFAULT_DEPTH: usize = 12;

/// `Σ c_e X^e` with finitely many nonzero `c_e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn lowest(&self) -> Option<(i64, &Scalar)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn highest(&self) -> Option<(i64, &Scalar)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in other.terms() {
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(p) = self.mul_integral(other) {
            return p;
        }
        let mut p = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    /// `(coefficients · den, den)` with Gaussian-integer coefficients, when no
    /// coefficient has a `√q` part.
    fn integral_form(&self) -> Option<(Vec<(i64, GaussInt)>, BigInt)> {
        if self.terms.values().any(|c| c.q().is_some()) {
            return None;
        }
        let den = common_denominator(self.terms.values().map(Scalar::rational_part));
        let ints = self.terms.iter().map(|(e, c)| (*e, GaussInt::scaled(c.rational_part(), &den))).collect();
        Some((ints, den))
    }

    /// Dense convolution of two nonempty integral forms: `(lowest exponent, coefficients)`.
    fn convolve_integral(a: &[(i64, GaussInt)], b: &[(i64, GaussInt)]) -> (i64, Vec<GaussInt>) {
        let lo = a[0].0 + b[0].0;
        let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
        let mut acc = vec![GaussInt::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in a {
            for (e2, c2) in b {
                let slot = &mut acc[(e1 + e2 - lo) as usize];
                *slot = slot.add(&c1.mul(c2));
            }
        }
        (lo, acc)
    }

    /// Product over a common denominator when no coefficient has a `√q`
    /// part: Gaussian-integer convolution, then one reduction per coefficient.
    fn mul_integral(&self, other: &Self) -> Option<Self> {
        if self.terms.len() < 2 || other.terms.len() < 2 {
            return None;
        }
        let ((a, da), (b, db)) = (self.integral_form()?, other.integral_form()?);
        let (lo, acc) = Self::convolve_integral(&a, &b);
        let den = da * db;
        Some(Self::from_terms(
            acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (lo + k as i64, c.over(&den).into())),
        ))
    }

    /// Decides `a·b = c·d` without reducing any fraction, when all four are
    /// free of `√q` parts.
    fn cross_products_equal(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<bool> {
        if [a, b, c, d].iter().any(|p| p.is_zero()) {
            return None;
        }
        let (fa, fb, fc, fd) = (a.integral_form()?, b.integral_form()?, c.integral_form()?, d.integral_form()?);
        let (lo1, left) = Self::convolve_integral(&fa.0, &fb.0);
        let (lo2, right) = Self::convolve_integral(&fc.0, &fd.0);
        // a·b = left / (da·db) and c·d = right / (dc·dd)
        let left_scale = GaussInt { re: &fc.1 * &fd.1, im: BigInt::zero() };
        let right_scale = GaussInt { re: &fa.1 * &fb.1, im: BigInt::zero() };
        let trim = |lo: i64, v: Vec<GaussInt>, scale: &GaussInt| -> Vec<(i64, GaussInt)> {
            v.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (lo + k as i64, x.mul(scale)))
                .collect()
        };
        Some(trim(lo1, left, &left_scale) == trim(lo2, right, &right_scale))
    }

    /// Multiplies by `c·X^shift`.
    pub fn scale_shift(&self, c: &Scalar, shift: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, x)| (e + shift, x * c)))
    }

    /// Image under `X ↦ q^{-1} X^{-1}`.
    pub fn reflect(&self, q: u64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c * &Scalar::q_power(q, -e))))
    }

    /// Exact value at `X = x` (x must be nonzero if negative exponents occur).
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (e, c) in self.terms() {
            acc = acc + c * &x.pow(e)?;
        }
        Ok(acc)
    }
}

fn fmt_coeff_x(c: &Scalar, e: i64) -> (bool, String) {
    let text = c.to_string();
    let single = c.term_count() == 1;
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) if single => (true, rest.to_string()),
        _ => (false, text),
    };
    let body = if single { body } else { format!("({body})") };
    let s = match (e, body.as_str()) {
        (0, _) => body,
        (_, "1") => format!("X^{e}"),
        _ => format!("{body} X^{e}"),
    };
    (neg, s)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let (neg, body) = fmt_coeff_x(c, e);
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// `c · q^{h/2} · X^e` with `c ≠ 0`. The split `c`/`h` only matters for
/// printing; equality compares values.
#[derive(Clone, Debug)]
pub struct Monomial {
    c: Scalar,
    q_half: i64,
    e: i64,
    q: u64,
}

impl Monomial {
    /// Panics if `c` is zero.
    pub fn new(c: Scalar, q_half: i64, e: i64, q: u64) -> Self {
        assert!(!c.is_zero(), "monomial coefficient must be nonzero");
        Monomial { c, q_half, e, q }
    }

    pub fn one(q: u64) -> Self {
        Self::new(Scalar::one(), 0, 0, q)
    }

    pub fn coeff(&self) -> &Scalar {
        &self.c
    }

    pub fn q_half(&self) -> i64 {
        self.q_half
    }

    pub fn exponent(&self) -> i64 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The full scalar `c · q^{h/2}`.
    pub fn value(&self) -> Scalar {
        &self.c * &Scalar::q_half_power(self.q, self.q_half)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.q != other.q {
            return Err(Error::MixedQ(self.q, other.q));
        }
        Ok(Monomial::new(self.c.try_mul(&other.c)?, self.q_half + other.q_half, self.e + other.e, self.q))
    }

    pub fn inv(&self) -> Result<Monomial> {
        Ok(Monomial::new(self.c.inv()?, -self.q_half, -self.e, self.q))
    }

    pub fn pow(&self, k: i64) -> Result<Monomial> {
        Ok(Monomial::new(self.c.pow(k)?, self.q_half * k, self.e * k, self.q))
    }

    pub fn scale(&self, s: &Scalar) -> Monomial {
        Monomial::new(&self.c * s, self.q_half, self.e, self.q)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.value(), self.e)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_laurent(self.to_laurent())
    }

    /// `X ↦ q^{-1}X^{-1}`: `c·X^e ↦ c·q^{-e}·X^{-e}`.
    pub fn reflect(&self) -> Monomial {
        Monomial::new(self.c.clone(), self.q_half - 2 * self.e, -self.e, self.q)
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e && self.value() == other.value()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.c.is_one() || (self.q_half == 0 && self.e == 0) {
            let text = self.c.to_string();
            parts.push(if self.c.term_count() > 1 { format!("({text})") } else { text });
        }
        if self.q_half != 0 {
            parts.push(format!("q^{{{}/2}}", self.q_half));
        }
        if self.e != 0 {
            parts.push(format!("X^{{{}}}", self.e));
        }
        f.write_str(&parts.join(" * "))
    }
}

/// `num / den`, with `den` normalized to lowest exponent 0 and constant term 1.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        let (e0, c0) = match den.lowest() {
            Some((e, c)) => (e, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if e0 == 0 && c0.is_one() {
            return Ok(RatFunc { num, den });
        }
        let unit = c0.inv()?;
        Ok(RatFunc { num: num.scale_shift(&unit, -e0), den: den.scale_shift(&unit, -e0) })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of normalized denominators is nonzero")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> RatFunc {
        RatFunc { num: self.num.scale_shift(&m.value(), m.exponent()), den: self.den.clone() }
    }

    /// Equality as rational functions: `num₁·den₂ = num₂·den₁`.
    pub fn equals(&self, other: &RatFunc) -> bool {
        if let Some(eq) = LaurentPoly::cross_products_equal(&self.num, &other.den, &other.num, &self.den) {
            return eq;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// The substitution `s ↦ 1 − s`, i.e. `X ↦ q^{-1} X^{-1}`.
    pub fn subst_one_minus_s(&self, q: u64) -> RatFunc {
        RatFunc::new(self.num.reflect(q), self.den.reflect(q)).expect("reflection keeps den nonzero")
    }

    /// `Some((c, e))` when this function equals the single term `c·X^e`.
    pub fn as_monomial(&self) -> Option<(Scalar, i64)> {
        let (e, c) = self.num.lowest()?;
        let candidate = self.den.scale_shift(c, e);
        (candidate == self.num).then(|| (c.clone(), e))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// `∏ (1 − α X^m)^{-1}`, factors sorted by `(m, α)`, `α = 0` dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EulerProduct {
    factors: Vec<(Scalar, u32)>,
}

impl EulerProduct {
    pub fn new(factors: impl IntoIterator<Item = (Scalar, u32)>) -> Self {
        let mut factors: Vec<_> = factors.into_iter().filter(|(a, _)| !a.is_zero()).collect();
        factors.sort_by(|(a1, m1), (a2, m2)| m1.cmp(m2).then_with(|| a1.cmp(a2)));
        EulerProduct { factors }
    }

    pub fn factors(&self) -> &[(Scalar, u32)] {
        &self.factors
    }

    /// `∏ (1 − α X^m)` as a polynomial.
    pub fn denominator(&self) -> LaurentPoly {
        self.factors.iter().fold(LaurentPoly::one(), |acc, (alpha, m)| {
            acc.mul(&LaurentPoly::from_terms([(0, Scalar::one()), (i64::from(*m), -alpha)]))
        })
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::new(LaurentPoly::one(), self.denominator()).expect("Euler denominator has constant term 1")
    }

    /// Product of the two factor lists.
    pub fn mul(&self, other: &EulerProduct) -> EulerProduct {
        EulerProduct::new(self.factors.iter().chain(&other.factors).cloned())
    }

    /// Every α replaced by `1/α`.
    pub fn invert_alphas(&self) -> Result<EulerProduct> {
        let mut out = Vec::with_capacity(self.factors.len());
        for (a, m) in &self.factors {
            out.push((a.inv()?, *m));
        }
        Ok(EulerProduct::new(out))
    }
}

impl fmt::Display for EulerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        f.write_str("prod")?;
        for (alpha, m) in &self.factors {
            let text = alpha.to_string();
            let text = if alpha.term_count() > 1 { format!("({text})") } else { text };
            write!(f, " (1 - {text} X^{m})^-1")?;
        }
        Ok(())
    }
}

/// Coefficients of `X^0 … X^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    coeffs: Vec<Scalar>,
}

impl SeriesTruncation {
    /// Panics on an empty vector (the bound `N` needs at least `X^0`).
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least X^0");
        SeriesTruncation { coeffs }
    }

    pub fn zero(bound: usize) -> Self {
        Self::new(vec![Scalar::zero(); bound + 1])
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn add_to(&mut self, k: usize, c: &Scalar) {
        self.coeffs[k] = &self.coeffs[k] + c;
    }

    /// Truncated product, to the smaller of the two bounds.
    pub fn convolve(&self, other: &SeriesTruncation) -> SeriesTruncation {
        let n = self.bound().min(other.bound());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| &self.coeffs[j] * &other.coeffs[k - j]).sum())
            .collect();
        SeriesTruncation::new(coeffs)
    }

    /// First degree where the two differ, with both values.
    pub fn first_mismatch(&self, other: &SeriesTruncation) -> Option<(usize, Scalar, Scalar)> {
        let n = self.bound().min(other.bound());
        (0..=n)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }
}

impl fmt::Display for SeriesTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", body.join(", "))
    }
}

/// Power-series expansion of objects with no negative-exponent content.
pub trait SeriesExpand {
    fn series_expand(&self, bound: usize) -> Result<SeriesTruncation>;
}

impl SeriesExpand for RatFunc {
    fn series_expand(&self, bound: usize) -> Result<SeriesTruncation> {
        if let Some((e, _)) = self.num.lowest() {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
        }
        // den is normalized: lowest exponent 0 with constant term 1
        let mut out: Vec<Scalar> = Vec::with_capacity(bound + 1);
        for k in 0..=bound {
            let mut c = self.num.coeff(k as i64);
            for (j, d) in self.den.terms().skip(1) {
                let j = j as usize;
                if j > k {
                    break;
                }
                c = c - d * &out[k - j];
            }
            out.push(c);
        }
        Ok(SeriesTruncation::new(out))
    }
}

impl SeriesExpand for EulerProduct {
    /// Multiplies the geometric series of each factor directly.
    fn series_expand(&self, bound: usize) -> Result<SeriesTruncation> {
        let mut acc = vec![Scalar::zero(); bound + 1];
        acc[0] = Scalar::one();
        for (alpha, m) in &self.factors {
            let m = *m as usize;
            // multiplying by Σ α^k X^{mk} is the recurrence acc[k] += α·acc[k−m]
            for k in m..=bound {
                let add = alpha * &acc[k - m];
                acc[k] = &acc[k] + &add;
            }
        }
        Ok(SeriesTruncation::new(acc))
    }
}

pub fn series_expand(f: &impl SeriesExpand, bound: usize) -> Result<SeriesTruncation> {
    f.series_expand(bound)
}

pub fn subst_one_minus_s(f: &RatFunc, q: u64) -> RatFunc {
    f.subst_one_minus_s(q)
}

pub fn ratfunc_equal(f: &RatFunc, g: &RatFunc) -> bool {
    f.equals(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn x_pow(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(Scalar::one(), e)
    }

    fn one_minus(c: Scalar, e: i64) -> LaurentPoly {
        LaurentPoly::one().sub(&LaurentPoly::monomial(c, e))
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let f = EulerProduct::new([(Scalar::from(2), 1)]);
        assert_eq!(series_expand(&f, 3).unwrap().coeffs(), ints(&[1, 2, 4, 8]).as_slice());
        assert_eq!(series_expand(&f.to_ratfunc(), 3).unwrap().coeffs(), ints(&[1, 2, 4, 8]).as_slice());
        let one = RatFunc::one();
        assert_eq!(series_expand(&one, 2).unwrap().coeffs(), ints(&[1, 0, 0]).as_slice());
    }

    #[test]
    fn product_of_two_geometric_series() {
        let (a, b) = (r(2, 3), Scalar::gauss((1, 1), (-1, 2)));
        let f = EulerProduct::new([(a.clone(), 1), (b.clone(), 1)]);
        // hand convolution of Σ a^k X^k and Σ b^k X^k
        let expected = vec![Scalar::one(), &a + &b, &a * &a + &a * &b + &b * &b];
        assert_eq!(series_expand(&f, 2).unwrap().coeffs(), expected.as_slice());
        assert_eq!(series_expand(&f.to_ratfunc(), 2).unwrap().coeffs(), expected.as_slice());
    }

    #[test]
    fn negative_exponent_is_reported() {
        let f = RatFunc::from_laurent(LaurentPoly::from_terms([(-2, Scalar::one()), (0, Scalar::one())]));
        assert_eq!(series_expand(&f, 3), Err(Error::NegativeExponent(-2)));
    }

    #[test]
    fn reflection_of_geometric_factor() {
        let q = 5;
        let t = r(3, 1);
        let l = EulerProduct::new([(t.clone(), 1)]).to_ratfunc();
        let got = l.subst_one_minus_s(q);
        // (1 − t q^{-1} X^{-1})^{-1} = X / (X − t/q)
        let expected = RatFunc::new(x_pow(1), x_pow(1).sub(&LaurentPoly::constant(&t * &r(1, 5)))).unwrap();
        assert!(got.equals(&expected));
        assert_eq!(got.den().lowest().unwrap(), (0, &Scalar::one()));
    }

    #[test]
    fn reflection_of_monomial() {
        let m = Monomial::new(r(2, 3), 0, 3, 7);
        let reflected = RatFunc::from_laurent(m.to_laurent()).subst_one_minus_s(7);
        let expected = Monomial::new(&r(2, 3) * &Scalar::q_power(7, -3), 0, -3, 7);
        assert!(reflected.equals(&expected.to_ratfunc()));
        assert_eq!(m.reflect(), expected);
    }

    #[test]
    fn cross_multiplication_equality() {
        let lhs = RatFunc::new(one_minus(Scalar::one(), 2), one_minus(Scalar::one(), 1)).unwrap();
        let rhs = RatFunc::from_laurent(LaurentPoly::one().add(&x_pow(1)));
        assert!(ratfunc_equal(&lhs, &rhs));
        let a = RatFunc::from_laurent(one_minus(Scalar::one(), 1));
        assert!(!ratfunc_equal(&a, &rhs));

        let ts = [r(1, 2), Scalar::gauss((2, 1), (1, 3)), r(-5, 7)];
        let forward = EulerProduct::new(ts.iter().map(|t| (t.clone(), 1))).to_ratfunc();
        let backward = ts
            .iter()
            .rev()
            .map(|t| RatFunc::new(LaurentPoly::one(), one_minus(t.clone(), 1)).unwrap())
            .fold(RatFunc::one(), |acc, f| acc.mul(&f));
        assert!(ratfunc_equal(&forward, &backward));
    }

    #[test]
    fn as_monomial_detects_single_terms() {
        let den = one_minus(r(3, 1), 2);
        let f = RatFunc::new(den.scale_shift(&r(5, 2), -3), den).unwrap();
        assert_eq!(f.as_monomial(), Some((r(5, 2), -3)));
        assert_eq!(EulerProduct::new([(r(2, 1), 1)]).to_ratfunc().as_monomial(), None);
    }

    #[test]
    fn printing() {
        let l = EulerProduct::new([(r(6, 1), 1), (r(4, 1), 1), (Scalar::gauss((1, 2), (1, 1)), 2)]);
        assert_eq!(l.to_string(), "prod (1 - 4 X^1)^-1 (1 - 6 X^1)^-1 (1 - (1/2+i) X^2)^-1");
        let m = Monomial::new(r(1, 6), -1, -1, 5);
        assert_eq!(m.to_string(), "1/6 * q^{-1/2} * X^{-1}");
        assert_eq!(Monomial::one(5).to_string(), "1");
        let p = LaurentPoly::from_terms([(0, r(1, 1)), (1, r(-1, 5)), (2, Scalar::gauss((1, 1), (1, 1)))]);
        assert_eq!(p.to_string(), "1 - 1/5 X^1 + (1+i) X^2");
    }

    fn small() -> impl Strategy<Value = Scalar> {
        (-6i64..=6, 1i64..=6, -6i64..=6, 1i64..=6).prop_map(|(a, b, c, d)| Scalar::gauss((a, b), (c, d)))
    }

    fn laurent(min_e: i64) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((min_e..min_e + 4, small()), 1..4).prop_map(LaurentPoly::from_terms)
    }

    fn ratfunc() -> impl Strategy<Value = RatFunc> {
        (laurent(-2), laurent(-2))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    fn power_series() -> impl Strategy<Value = RatFunc> {
        (laurent(0), prop::collection::vec((1i64..4, small()), 0..3)).prop_map(|(n, tail)| {
            let den = LaurentPoly::one().add(&LaurentPoly::from_terms(tail));
            RatFunc::new(n, den).unwrap()
        })
    }

    proptest! {
        #[test]
        fn reflection_is_an_involution(f in ratfunc(), q in 2u64..12) {
            prop_assert!(f.subst_one_minus_s(q).subst_one_minus_s(q).equals(&f));
        }

        #[test]
        fn equality_is_an_equivalence(f in ratfunc(), g in ratfunc(), c in small()) {
            prop_assert!(f.equals(&f));
            prop_assert_eq!(f.equals(&g), g.equals(&f));
            // h is f rewritten with a different numerator/denominator pair
            prop_assume!(!c.is_zero());
            let k = LaurentPoly::one().add(&LaurentPoly::monomial(c, 1));
            let h = RatFunc::new(f.num().mul(&k), f.den().mul(&k)).unwrap();
            prop_assert!(f.equals(&h));
            prop_assert_eq!(h.equals(&g), f.equals(&g));
        }

        #[test]
        fn expansion_is_multiplicative(f in power_series(), g in power_series()) {
            let n = 6;
            let fg = series_expand(&f.mul(&g), n).unwrap();
            let conv = series_expand(&f, n).unwrap().convolve(&series_expand(&g, n).unwrap());
            prop_assert_eq!(fg, conv);
        }

        #[test]
        fn integral_product_matches_termwise(a in laurent(-2), b in laurent(-1)) {
            let mut naive = LaurentPoly::zero();
            for (e1, c1) in a.terms() {
                for (e2, c2) in b.terms() {
                    naive.add_term(e1 + e2, c1 * c2);
                }
            }
            prop_assert_eq!(a.mul(&b), naive);
        }

        #[test]
        fn cross_products_match_expanded_products(a in laurent(-2), b in laurent(0), c in laurent(-1), d in laurent(0)) {
            prop_assume!(![&a, &b, &c, &d].iter().any(|p| p.is_zero()));
            let expected = a.mul(&b) == c.mul(&d);
            prop_assert_eq!(LaurentPoly::cross_products_equal(&a, &b, &c, &d), Some(expected));
            let ab = a.mul(&b);
            prop_assert_eq!(LaurentPoly::cross_products_equal(&a, &b, &ab, &LaurentPoly::one()), Some(true));
        }

        #[test]
        fn euler_product_expansion_agrees(alphas in prop::collection::vec((small(), 1u32..4), 0..5)) {
            let l = EulerProduct::new(alphas);
            prop_assert_eq!(series_expand(&l, 8).unwrap(), series_expand(&l.to_ratfunc(), 8).unwrap());
        }
    }
}
