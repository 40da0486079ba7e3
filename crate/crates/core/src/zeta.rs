//! Truncated lattice sums for the unramified local Zeta integral
//! `Z(s, W, 1_{O_F^n})`, and exact checks of the unramified identity, the
//! functional equation and twist covariance.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factors::{asai_L, asai_epsilon, gamma_from_parts, gamma_parts};
use crate::laurent::{series_expand, LaurentPoly, Monomial, RatFunc, SeriesTruncation};
use crate::repdata::{central_char_value, delta_value, Extension, LocalDatum, Over, TauDatum, UnramifiedRep};
use crate::scalars::Scalar;
use crate::symfunc::Partition;
use crate::whittaker::WhittakerEvaluator;

pub use crate::report::{Mismatch, Status, VerifyReport};

fn summand(ev: &WhittakerEvaluator, lam: &[i64]) -> Result<Scalar> {
    let w = ev.value(lam)?;
    if w.is_zero() {
        return Ok(w);
    }
    w.try_div(&delta_value(ev.datum(), Over::F, lam))
}

/// Coefficients of `X^0 … X^N` of `Σ W(a(λ)) δ_n(a(λ))^{-1} X^{|λ|}` over
/// weakly decreasing `λ` with `λ_n ≥ 0`. Volumes are normalized to 1.
pub fn zeta_truncated(rep: &UnramifiedRep, datum: &LocalDatum, bound: usize) -> Result<SeriesTruncation> {
    let n = rep.n();
    let ev = WhittakerEvaluator::new(rep, datum, bound)?;
    let coeffs = (0..=bound)
        .into_par_iter()
        .map(|k| {
            Partition::of_size(k as u32, n).iter().try_fold(Scalar::zero(), |acc, lam| {
                let lam: Vec<i64> = lam.padded(n).iter().map(|&p| i64::from(p)).collect();
                Ok(acc + summand(&ev, &lam)?)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesTruncation::new(coeffs))
}

/// Same series by brute force over `λ ∈ [−B, B]^n`, letting the support of `W`
/// and of `1_{O_F}(ϖ^{λ_n})` do the filtering.
pub fn zeta_truncated_box(rep: &UnramifiedRep, datum: &LocalDatum, bound: usize, box_radius: i64) -> Result<SeriesTruncation> {
    let ev = WhittakerEvaluator::new(rep, datum, 2 * box_radius as usize)?;
    let mut out = SeriesTruncation::zero(bound);
    for lam in box_tuples(&vec![(-box_radius, box_radius); rep.n()]) {
        if *lam.last().expect("n ≥ 1") < 0 {
            continue;
        }
        let size: i64 = lam.iter().sum();
        if (0..=bound as i64).contains(&size) {
            out.add_to(size as usize, &summand(&ev, &lam)?);
        }
    }
    Ok(out)
}

fn box_tuples(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &(lo, hi)| {
        acc.into_iter()
            .flat_map(|p| (lo..=hi).map(move |x| {
                let mut v = p.clone();
                v.push(x);
                v
            }))
            .collect()
    })
}

fn report(case: &str, datum: &LocalDatum, n: usize) -> VerifyReport {
    VerifyReport::new(case, Some(datum.q()), datum.ext().name(), n)
}

fn series_mismatch(lhs: &SeriesTruncation, rhs: &SeriesTruncation, offset: i64) -> Option<Mismatch> {
    lhs.first_mismatch(rhs).map(|(k, l, r)| Mismatch { degree: k as i64 + offset, lhs: l, rhs: r })
}

/// Checks `Z(s, W, 1_{O_F^n}) = L(s, π, As)` through `X^N`.
pub fn verify_unramified_identity(rep: &UnramifiedRep, datum: &LocalDatum, bound: usize) -> Result<VerifyReport> {
    let lhs = zeta_truncated(rep, datum, bound)?;
    let rhs = series_expand(&asai_L(rep, datum)?, bound)?;
    Ok(report("unramified_identity", datum, rep.n()).with_mismatch(series_mismatch(&lhs, &rhs, 0)))
}

/// `ω_π(τ)^{n−1} |τ|_E^{N(s − 1/2)} λ^{−N}` with `N = n(n−1)/2`; 1 when split.
pub fn functional_equation_prefactor(rep: &UnramifiedRep, datum: &LocalDatum, tau: &TauDatum) -> Result<Monomial> {
    let q = datum.q();
    if datum.ext() == Extension::Split {
        return Ok(Monomial::one(q));
    }
    let n = rep.n() as i64;
    let pairs = n * (n - 1) / 2;
    let d = i64::from(tau.d);
    let omega = central_char_value(rep, datum, d)?.pow(n - 1)?;
    let c = omega * tau.lam.pow(-pairs).to_scalar();
    let q_half = match datum.ext() {
        Extension::InertUnramified => 2 * d * pairs,
        _ => d * pairs,
    };
    Ok(Monomial::new(c, q_half, d * datum.x_exponent_of_q_e() * pairs, q))
}

/// Lowest degree where `f` and `g` differ, read off the cross-multiplied
/// numerators `f.num · g.den` and `g.num · f.den`.
fn ratfunc_mismatch(f: &RatFunc, g: &RatFunc) -> Option<Mismatch> {
    let lhs: LaurentPoly = f.num().mul(g.den());
    let rhs: LaurentPoly = g.num().mul(f.den());
    let (degree, _) = lhs.sub(&rhs).lowest().map(|(e, c)| (e, c.clone()))?;
    Some(Mismatch { degree, lhs: lhs.coeff(degree), rhs: rhs.coeff(degree) })
}

/// Checks `L(1 − s, π̃, As) = prefactor · γ(s, π, As, ψ') · L(s, π, As)` as an
/// identity of rational functions in `X`.
pub fn verify_functional_equation(rep: &UnramifiedRep, datum: &LocalDatum, tau: &TauDatum) -> Result<VerifyReport> {
    let mut reports = verify_functional_equation_grid(rep, datum, std::slice::from_ref(tau))?;
    Ok(reports.pop().expect("one report per τ"))
}

/// [`verify_functional_equation`] for several `τ`, sharing the `τ`-independent factors.
pub fn verify_functional_equation_grid(rep: &UnramifiedRep, datum: &LocalDatum, taus: &[TauDatum]) -> Result<Vec<VerifyReport>> {
    let (dual, l) = gamma_parts(rep, datum)?;
    taus.iter()
        .map(|tau| {
            let gamma = gamma_from_parts(&asai_epsilon(rep, datum, tau)?, &dual, &l)?;
            let prefactor = functional_equation_prefactor(rep, datum, tau)?;
            let rhs = gamma.mul(&l).mul_monomial(&prefactor);
            let mismatch = if dual.equals(&rhs) { None } else { ratfunc_mismatch(&dual, &rhs) };
            let case = format!("functional_equation d={} lam={}", tau.d, tau.lam);
            Ok(report(&case, datum, rep.n()).with_mismatch(mismatch))
        })
        .collect()
}

/// Shifting `W` by `a(ϖ^m) = diag(ϖ^{m(n−1)}, …, ϖ^m, 1)` multiplies the
/// lattice sum by `δ_n(a(ϖ^m)) X^{−|ν|}`. Both sides are compared on
/// `X^{−|ν|} … X^N`; the shifted side is enumerated over a box.
pub fn twist_covariance_check(rep: &UnramifiedRep, datum: &LocalDatum, m: i64, bound: usize) -> Result<VerifyReport> {
    if m < 0 {
        return Err(Error::InvalidDatum(format!("twist exponent must be ≥ 0, got {m}")));
    }
    let n = rep.n();
    let nu: Vec<i64> = (0..n).map(|i| m * (n - 1 - i) as i64).collect();
    let shift: i64 = nu.iter().sum();
    let top = bound as i64 + shift;
    let ev = WhittakerEvaluator::new(rep, datum, top as usize)?;

    let mut lhs = SeriesTruncation::zero(top as usize);
    let ranges: Vec<(i64, i64)> = nu.iter().enumerate().map(|(i, &v)| (if i + 1 == n { 0 } else { -v }, top - v)).collect();
    for mu in box_tuples(&ranges) {
        let size: i64 = mu.iter().sum();
        if size < -shift || size > bound as i64 {
            continue;
        }
        let lam: Vec<i64> = mu.iter().zip(&nu).map(|(a, b)| a + b).collect();
        let w = ev.value(&lam)?;
        if w.is_zero() {
            continue;
        }
        let term = w.try_div(&delta_value(datum, Over::F, &mu))?;
        lhs.add_to((size + shift) as usize, &term);
    }

    let delta_nu = delta_value(datum, Over::F, &nu);
    let z = zeta_truncated(rep, datum, top as usize)?;
    let rhs = SeriesTruncation::new(z.coeffs().iter().map(|c| &delta_nu * c).collect());
    let case = format!("twist_covariance m={m}");
    Ok(report(&case, datum, n).with_mismatch(series_mismatch(&lhs, &rhs, -shift)))
}
