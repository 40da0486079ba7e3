//! Closed-form Asai L-, ε- and γ-factors for unramified data.
//!
//! `π = χ_1 × ⋯ × χ_n` decomposes the Asai parameter into the restrictions
//! `χ_i|_{F^×}` and the inductions of `χ_i χ_j^c` (`i < j`); every factor below
//! is assembled from that decomposition.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::laurent::{EulerProduct, Monomial, RatFunc};
use crate::repdata::{Extension, LocalDatum, TauDatum, UnramifiedRep};
use crate::scalars::Scalar;

/// Which Satake parameter a factor's α draws on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamRef {
    T(usize),
    U(usize),
}

/// One Euler factor `(1 − α X^m)^{-1}` with `α` the product of the referenced parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorShape {
    pub params: Vec<ParamRef>,
    pub degree: u32,
}

/// The factor pattern of `L(s, π, As)` for rank `n`:
///
/// * split: `(t_i u_j, 1)` for all `i, j`;
/// * inert unramified: `(t_i, 1)` and `(t_i t_j, 2)` for `i < j`;
/// * inert ramified: `(t_i², 1)` and `(t_i t_j, 1)` for `i < j`.
pub fn asai_factor_shape(ext: Extension, n: usize) -> Vec<FactorShape> {
    use ParamRef::{T, U};
    let shape = |params: Vec<ParamRef>, degree| FactorShape { params, degree };
    let pairs = || (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    match ext {
        Extension::Split => (0..n).flat_map(|i| (0..n).map(move |j| shape(vec![T(i), U(j)], 1))).collect(),
        Extension::InertUnramified => (0..n)
            .map(|i| shape(vec![T(i)], 1))
            .chain(pairs().map(|(i, j)| shape(vec![T(i), T(j)], 2)))
            .collect(),
        Extension::InertRamified => (0..n)
            .map(|i| shape(vec![T(i), T(i)], 1))
            .chain(pairs().map(|(i, j)| shape(vec![T(i), T(j)], 1)))
            .collect(),
    }
}

fn resolve<T: Clone>(refs: &[ParamRef], t: &[T], u: Option<&[T]>, one: T, mul: impl Fn(T, &T) -> T) -> T {
    refs.iter().fold(one, |acc, r| match *r {
        ParamRef::T(i) => mul(acc, &t[i]),
        ParamRef::U(j) => mul(acc, &u.expect("split shape references u")[j]),
    })
}

#[allow(non_snake_case)]
pub fn asai_L(rep: &UnramifiedRep, datum: &LocalDatum) -> Result<EulerProduct> {
    rep.check_datum(datum)?;
    let shape = asai_factor_shape(datum.ext(), rep.n());
    Ok(EulerProduct::new(shape.iter().map(|f| {
        (resolve(&f.params, rep.t(), rep.u(), Scalar::one(), |a, b| a * b), f.degree)
    })))
}

/// Float shadow of [`asai_L`]: `(α, m)` pairs from complex parameters.
#[allow(non_snake_case)]
pub fn asai_L_float(ext: Extension, t: &[Complex64], u: Option<&[Complex64]>) -> Vec<(Complex64, u32)> {
    asai_factor_shape(ext, t.len())
        .iter()
        .map(|f| (resolve(&f.params, t, u, Complex64::new(1.0, 0.0), |a, b| a * b), f.degree))
        .collect()
}

/// `L(s, χ|_{F^×})` for the unramified character `χ` of `E^×` with `χ(ϖ_E) = t`:
/// `χ(ϖ_F) = t^{v_E(ϖ_F)}`.
pub fn restricted_character_l(t: &Scalar, datum: &LocalDatum) -> Result<EulerProduct> {
    Ok(EulerProduct::new([(t.pow(datum.uniformizer_valuation())?, 1)]))
}

/// `L(s, μ)` for the unramified character `μ` of `E^×` with `μ(ϖ_E) = t`,
/// written in `X = q_F^{-s}` (so `q_E^{-s} = X^v`).
pub fn e_character_l(t: &Scalar, datum: &LocalDatum) -> EulerProduct {
    EulerProduct::new([(t.clone(), datum.x_exponent_of_q_e() as u32)])
}

/// `ε(s, π, As, ψ') = λ_{E/F}(ψ')^{N} |τ|_E^{N(1/2 − s)} ω_π(τ)^{1−n}` with
/// `N = n(n−1)/2`; the constant 1 in the split case.
pub fn asai_epsilon(rep: &UnramifiedRep, datum: &LocalDatum, tau: &TauDatum) -> Result<Monomial> {
    rep.check_datum(datum)?;
    let q = datum.q();
    if datum.ext() == Extension::Split {
        return Ok(Monomial::one(q));
    }
    let n = rep.n() as i64;
    let pairs = n * (n - 1) / 2;
    let d = i64::from(tau.d);
    let omega_tau = rep.central_parameter().pow(d)?;
    let c = tau.lam.pow(pairs).to_scalar() * omega_tau.pow(1 - n)?;
    // |τ|_E^{1/2 − s} = q_E^{-d/2} · X^{-d·v}, once per pair
    let q_half = match datum.ext() {
        Extension::InertUnramified => -2 * d * pairs,
        _ => -d * pairs,
    };
    let e = -d * datum.x_exponent_of_q_e() * pairs;
    Ok(Monomial::new(c, q_half, e, q))
}

/// `γ = ε · L(1 − s, π̃, As) / L(s, π, As)`.
pub fn asai_gamma(rep: &UnramifiedRep, datum: &LocalDatum, tau: &TauDatum) -> Result<RatFunc> {
    let eps = asai_epsilon(rep, datum, tau)?;
    let (dual, l) = gamma_parts(rep, datum)?;
    gamma_from_parts(&eps, &dual, &l)
}

/// `(L(1 − s, π̃, As), L(s, π, As))`, the τ-independent part of `γ`.
pub fn gamma_parts(rep: &UnramifiedRep, datum: &LocalDatum) -> Result<(RatFunc, RatFunc)> {
    let dual = asai_L(&rep.contragredient(), datum)?.to_ratfunc().subst_one_minus_s(datum.q());
    Ok((dual, asai_L(rep, datum)?.to_ratfunc()))
}

/// `ε · dual / l`.
pub fn gamma_from_parts(eps: &Monomial, dual: &RatFunc, l: &RatFunc) -> Result<RatFunc> {
    dual.mul_monomial(eps).div(l)
}

/// Sign `η_{E/F}(λ) = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_scalar(self) -> Scalar {
        match self {
            Sign::Plus => Scalar::one(),
            Sign::Minus => -Scalar::one(),
        }
    }
}

/// Effect on `ε(s, π, As, ψ')` of replacing `ψ'` by `ψ'_λ`:
/// multiply by `ω_π(λ)^n |λ|_F^{n²(s − 1/2)} η_{E/F}(λ)^{n(n−1)/2}`, where
/// `|λ|_F^{s−1/2} = q^{v/2} X^{v}` for `v = v_F(λ)`.
pub fn epsilon_scaling(eps: &Monomial, n: i64, omega_at_scale: &Scalar, val_scale: i64, eta_at_scale: Sign) -> Result<Monomial> {
    let mut c = omega_at_scale.pow(n)?;
    if (n * (n - 1) / 2) % 2 == 1 {
        c = c * eta_at_scale.to_scalar();
    }
    let k = val_scale * n * n;
    eps.mul(&Monomial::new(c, k, k, eps.q()))
}

/// Poles of `∏ (1 − α X^m)^{-1}` as values of `s` modulo `2πi / log q`:
/// `s = (Log α + 2πik) / (m log q)` for `k = 0 … m−1`.
pub fn pole_report_float(factors: &[(Complex64, u32)], q: u64) -> Vec<Complex64> {
    let log_q = (q as f64).ln();
    let mut poles = Vec::new();
    for (alpha, m) in factors {
        if alpha.norm() == 0.0 {
            continue;
        }
        let m = f64::from(*m);
        let log_alpha = alpha.ln();
        for k in 0..m as u32 {
            let s = (log_alpha + Complex64::new(0.0, 2.0 * PI * f64::from(k))) / (m * log_q);
            poles.push(s);
        }
    }
    poles
}

/// Poles of an exact Euler product, through the complex shadows of its α's.
pub fn pole_report(l: &EulerProduct, q: u64) -> Vec<Complex64> {
    let shadow: Vec<(Complex64, u32)> = l.factors().iter().map(|(a, m)| (a.to_complex(), *m)).collect();
    pole_report_float(&shadow, q)
}
