//! The local arithmetic setting: the field datum `(q, E/F)`, unramified
//! representations through their Satake parameters, and the `(τ, ψ')` datum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{GaussRational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extension {
    /// `E = F × F`.
    Split,
    /// Unramified quadratic field extension: `q_E = q²`, `ϖ_F` stays a uniformizer.
    InertUnramified,
    /// Ramified quadratic field extension: `q_E = q`, `v_E(ϖ_F) = 2`.
    InertRamified,
}

impl Extension {
    pub const ALL: [Extension; 3] = [Extension::Split, Extension::InertUnramified, Extension::InertRamified];

    pub fn name(self) -> &'static str {
        match self {
            Extension::Split => "split",
            Extension::InertUnramified => "inert_unramified",
            Extension::InertRamified => "inert_ramified",
        }
    }

    pub fn is_inert(self) -> bool {
        self != Extension::Split
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Extension {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Extension::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse { what: "extension", text: s.to_string() })
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

/// Residue cardinality `q` of `F` and the type of `E/F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalDatum {
    q: u64,
    ext: Extension,
}

impl LocalDatum {
    pub fn new(q: u64, ext: Extension) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::InvalidDatum(format!("q = {q} is not a prime power")));
        }
        Ok(LocalDatum { q, ext })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn ext(&self) -> Extension {
        self.ext
    }

    /// Residue cardinality of `E` (of each factor in the split case).
    pub fn q_e(&self) -> u64 {
        match self.ext {
            Extension::InertUnramified => self.q * self.q,
            _ => self.q,
        }
    }

    /// `v_E(ϖ_F)`.
    pub fn uniformizer_valuation(&self) -> i64 {
        match self.ext {
            Extension::InertRamified => 2,
            _ => 1,
        }
    }

    /// The `v` with `q_E^{-s} = X^v`.
    pub fn x_exponent_of_q_e(&self) -> i64 {
        match self.ext {
            Extension::InertUnramified => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Params {
    Inert(Vec<Scalar>),
    Split(Vec<Scalar>, Vec<Scalar>),
}

/// An unramified principal series `χ_1 × ⋯ × χ_n`, recorded by `t_i = χ_i(ϖ_E)`
/// (and a second tuple `u` for the second factor in the split case).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnramifiedRep {
    params: Params,
}

fn check_params(name: &str, v: &[Scalar], q: u64) -> Result<()> {
    if v.is_empty() {
        return Err(Error::InvalidRep(format!("{name} must have n ≥ 1 entries")));
    }
    for x in v {
        if x.is_zero() {
            return Err(Error::InvalidRep(format!("{name} entries must be nonzero")));
        }
        if let Some(xq) = x.q() {
            if xq != q {
                return Err(Error::MixedQ(xq, q));
            }
        }
    }
    Ok(())
}

impl UnramifiedRep {
    pub fn inert(datum: &LocalDatum, t: Vec<Scalar>) -> Result<Self> {
        if !datum.ext.is_inert() {
            return Err(Error::ExtensionMismatch(datum.ext.name()));
        }
        check_params("satake", &t, datum.q)?;
        Ok(UnramifiedRep { params: Params::Inert(t) })
    }

    pub fn split(datum: &LocalDatum, t: Vec<Scalar>, u: Vec<Scalar>) -> Result<Self> {
        if datum.ext.is_inert() {
            return Err(Error::ExtensionMismatch(datum.ext.name()));
        }
        check_params("satake", &t, datum.q)?;
        check_params("satake2", &u, datum.q)?;
        if t.len() != u.len() {
            return Err(Error::LengthMismatch { expected: t.len(), found: u.len() });
        }
        Ok(UnramifiedRep { params: Params::Split(t, u) })
    }

    /// Builds the shape `datum` calls for; `u` must be present iff split.
    pub fn for_datum(datum: &LocalDatum, t: Vec<Scalar>, u: Option<Vec<Scalar>>) -> Result<Self> {
        match (datum.ext.is_inert(), u) {
            (true, None) => Self::inert(datum, t),
            (false, Some(u)) => Self::split(datum, t, u),
            (true, Some(_)) => Err(Error::InvalidRep("satake2 is only allowed in the split case".into())),
            (false, None) => Err(Error::InvalidRep("the split case needs satake2".into())),
        }
    }

    pub fn n(&self) -> usize {
        self.t().len()
    }

    pub fn t(&self) -> &[Scalar] {
        match &self.params {
            Params::Inert(t) | Params::Split(t, _) => t,
        }
    }

    /// Second parameter tuple (split case only).
    pub fn u(&self) -> Option<&[Scalar]> {
        match &self.params {
            Params::Split(_, u) => Some(u),
            Params::Inert(_) => None,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self.params, Params::Split(..))
    }

    /// Fails unless the parameter shape matches `datum`'s extension type.
    pub fn check_datum(&self, datum: &LocalDatum) -> Result<()> {
        if self.is_split() == datum.ext.is_inert() {
            return Err(Error::ExtensionMismatch(datum.ext.name()));
        }
        Ok(())
    }

    pub fn contragredient(&self) -> UnramifiedRep {
        let inv = |v: &[Scalar]| -> Vec<Scalar> {
            v.iter().map(|x| x.inv().expect("Satake parameters are nonzero")).collect()
        };
        let params = match &self.params {
            Params::Inert(t) => Params::Inert(inv(t)),
            Params::Split(t, u) => Params::Split(inv(t), inv(u)),
        };
        UnramifiedRep { params }
    }

    /// `∏ t_i` (times `∏ u_i` in the split case): the central character at `ϖ_E`
    /// (at `(ϖ_F, ϖ_F)` when split).
    pub fn central_parameter(&self) -> Scalar {
        let mut p: Scalar = self.t().iter().cloned().product();
        if let Some(u) = self.u() {
            p = p * u.iter().cloned().product::<Scalar>();
        }
        p
    }
}

pub fn contragredient(rep: &UnramifiedRep) -> UnramifiedRep {
    rep.contragredient()
}

/// `ω_π(z)` for `v_E(z) = v`: `∏ t_i^v`. In the split case `v` is the common
/// valuation of a diagonal element `(z, z)`.
pub fn central_char_value(rep: &UnramifiedRep, datum: &LocalDatum, v: i64) -> Result<Scalar> {
    rep.check_datum(datum)?;
    rep.central_parameter().pow(v)
}

/// A fourth root of unity `λ_{E/F}(ψ')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourthRoot {
    One,
    I,
    MinusOne,
    MinusI,
}

impl FourthRoot {
    pub const ALL: [FourthRoot; 4] = [FourthRoot::One, FourthRoot::I, FourthRoot::MinusOne, FourthRoot::MinusI];

    /// `i^k`.
    fn index(self) -> i64 {
        match self {
            FourthRoot::One => 0,
            FourthRoot::I => 1,
            FourthRoot::MinusOne => 2,
            FourthRoot::MinusI => 3,
        }
    }

    pub fn pow(self, k: i64) -> FourthRoot {
        FourthRoot::ALL[(self.index() * k).rem_euclid(4) as usize]
    }

    pub fn to_gauss(self) -> GaussRational {
        match self {
            FourthRoot::One => GaussRational::one(),
            FourthRoot::I => GaussRational::i(),
            FourthRoot::MinusOne => -GaussRational::one(),
            FourthRoot::MinusI => -GaussRational::i(),
        }
    }

    pub fn to_scalar(self) -> Scalar {
        self.to_gauss().into()
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FourthRoot::One => "1",
            FourthRoot::I => "i",
            FourthRoot::MinusOne => "-1",
            FourthRoot::MinusI => "-i",
        })
    }
}

impl FromStr for FourthRoot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(FourthRoot::One),
            "i" => Ok(FourthRoot::I),
            "-1" => Ok(FourthRoot::MinusOne),
            "-i" => Ok(FourthRoot::MinusI),
            _ => Err(Error::Parse { what: "fourth root of unity", text: s.to_string() }),
        }
    }
}

/// `v_E(τ)` and `λ_{E/F}(ψ')`. Ignored in the split case, where `τ = (1, −1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TauDatum {
    pub d: u32,
    pub lam: FourthRoot,
}

impl TauDatum {
    pub fn new(d: u32, lam: FourthRoot) -> Self {
        TauDatum { d, lam }
    }

    /// `d = 0` for unramified `E/F` (unit τ), `d = 1` for ramified (tame different).
    pub fn default_for(ext: Extension) -> Self {
        let d = if ext == Extension::InertRamified { 1 } else { 0 };
        TauDatum { d, lam: FourthRoot::One }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    F,
    E,
}

fn delta_exponent(lam: &[i64]) -> i64 {
    let n = lam.len() as i64;
    -lam.iter().enumerate().map(|(i, &l)| (n + 1 - 2 * (i as i64 + 1)) * l).sum::<i64>()
}

/// `δ_n(a(λ))` over `F`, or `δ_{n,E}(a(λ))`, with `a(λ) = diag(ϖ_F^{λ_i})`.
///
/// Over `E` the base is `q_E` and exponents scale by `v_E(ϖ_F)`; in the split
/// case `δ_{n,E}(a, a) = δ_n(a)²`.
pub fn delta_value(datum: &LocalDatum, over: Over, lam: &[i64]) -> Scalar {
    Scalar::q_half_power(datum.q, 2 * delta_log_q(datum, over, lam))
}

/// `δ^{1/2}`; lands in the `√q` part when the exponent is odd.
pub fn delta_half_value(datum: &LocalDatum, over: Over, lam: &[i64]) -> Scalar {
    Scalar::q_half_power(datum.q, delta_log_q(datum, over, lam))
}

/// The exponent `k` with `δ = q^k`.
fn delta_log_q(datum: &LocalDatum, over: Over, lam: &[i64]) -> i64 {
    let k = delta_exponent(lam);
    match (over, datum.ext) {
        (Over::F, _) => k,
        (Over::E, Extension::Split) => 2 * k,
        (Over::E, Extension::InertUnramified) => 2 * k,
        (Over::E, Extension::InertRamified) => k * datum.uniformizer_valuation(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn datum(ext: Extension) -> LocalDatum {
        LocalDatum::new(5, ext).unwrap()
    }

    #[test]
    fn local_datum_validation() {
        assert!(LocalDatum::new(1, Extension::Split).is_err());
        assert!(LocalDatum::new(6, Extension::Split).is_err());
        for q in [2, 3, 4, 8, 9, 25, 27, 49, 121, 128] {
            assert!(LocalDatum::new(q, Extension::InertRamified).is_ok(), "q = {q}");
        }
        assert_eq!(LocalDatum::new(3, Extension::InertUnramified).unwrap().q_e(), 9);
        assert_eq!(LocalDatum::new(3, Extension::InertRamified).unwrap().q_e(), 3);
    }

    #[test]
    fn rep_shape_validation() {
        let inert = datum(Extension::InertRamified);
        let split = datum(Extension::Split);
        assert!(UnramifiedRep::inert(&inert, vec![r(1, 2)]).is_ok());
        assert!(UnramifiedRep::inert(&inert, vec![]).is_err());
        assert!(UnramifiedRep::inert(&inert, vec![r(0, 1)]).is_err());
        assert!(UnramifiedRep::inert(&split, vec![r(1, 2)]).is_err());
        assert!(UnramifiedRep::split(&split, vec![r(1, 2)], vec![r(1, 3), r(2, 1)]).is_err());
        assert!(UnramifiedRep::inert(&inert, vec![Scalar::sqrt_q(7)]).is_err());
        assert!(UnramifiedRep::inert(&inert, vec![Scalar::sqrt_q(5)]).is_ok());
        assert!(UnramifiedRep::for_datum(&split, vec![r(1, 2)], None).is_err());
    }

    #[test]
    fn contragredient_inverts() {
        let d = datum(Extension::InertUnramified);
        let rep = UnramifiedRep::inert(&d, vec![r(2, 1), r(1, 2)]).unwrap();
        assert_eq!(rep.contragredient().t(), &[r(1, 2), r(2, 1)]);
        assert_eq!(rep.contragredient().contragredient(), rep);
        let s = datum(Extension::Split);
        let rep = UnramifiedRep::split(&s, vec![r(3, 1)], vec![Scalar::gauss((1, 1), (1, 1))]).unwrap();
        assert_eq!(rep.contragredient().u().unwrap(), &[Scalar::gauss((1, 2), (-1, 2))]);
    }

    #[test]
    fn central_character() {
        let d = datum(Extension::InertRamified);
        let rep = UnramifiedRep::inert(&d, vec![r(2, 1), r(3, 1)]).unwrap();
        assert_eq!(central_char_value(&rep, &d, 0).unwrap(), Scalar::one());
        assert_eq!(central_char_value(&rep, &d, 1).unwrap(), Scalar::from(6));
        assert_eq!(central_char_value(&rep, &d, -2).unwrap(), r(1, 36));
        for v in -3..=3 {
            let a = central_char_value(&rep, &d, v).unwrap();
            let b = central_char_value(&rep.contragredient(), &d, v).unwrap();
            assert_eq!(a * b, Scalar::one());
        }
    }

    #[test]
    fn delta_examples() {
        let d = datum(Extension::InertRamified);
        assert_eq!(delta_value(&d, Over::F, &[0, 0, 0]), Scalar::one());
        assert_eq!(delta_value(&d, Over::F, &[1, 0]), r(1, 5));
        assert_eq!(delta_value(&d, Over::E, &[1, 0]), r(1, 25));
        assert_eq!(delta_half_value(&d, Over::F, &[1, 0]), Scalar::sqrt_q(5).inv().unwrap());
    }

    #[test]
    fn delta_e_is_delta_f_squared() {
        fn tuples(n: usize) -> Vec<Vec<i64>> {
            (0..n).fold(vec![vec![]], |acc, _| {
                acc.into_iter()
                    .flat_map(|v| (-3..=3).map(move |x| [v.clone(), vec![x]].concat()))
                    .collect()
            })
        }
        for ext in Extension::ALL {
            let d = datum(ext);
            for n in 1..=4 {
                for lam in tuples(n) {
                    let f = delta_value(&d, Over::F, &lam);
                    assert_eq!(delta_value(&d, Over::E, &lam), &f * &f, "{ext} {lam:?}");
                    let h = delta_half_value(&d, Over::E, &lam);
                    assert_eq!(h, f);
                }
            }
        }
    }

    #[test]
    fn fourth_roots() {
        for z in FourthRoot::ALL {
            assert_eq!(z.to_string().parse::<FourthRoot>().unwrap(), z);
            assert_eq!(z.pow(4), FourthRoot::One);
            assert_eq!(z.to_scalar().pow(3).unwrap(), z.pow(3).to_scalar());
            assert_eq!(z.pow(-1).to_scalar(), z.to_scalar().inv().unwrap());
        }
        assert!("2".parse::<FourthRoot>().is_err());
    }
}
