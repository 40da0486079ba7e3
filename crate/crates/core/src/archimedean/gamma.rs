//! Complex Γ by the Lanczos approximation, and products of `Γ_R`/`Γ_C` terms.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Distance below which an argument counts as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-8;

/// `ln Γ(z)` for `Re z ≥ 1/2` (principal branch of the Lanczos form).
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Distance from `z` to the nearest non-positive integer.
fn pole_distance(z: Complex64) -> f64 {
    if z.re > 0.5 {
        return f64::INFINITY;
    }
    let k = z.re.round().min(0.0);
    (z - k).norm()
}

/// `Γ(z)`, with the reflection formula on the left half-plane.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if pole_distance(z) < POLE_TOLERANCE {
        return Err(Error::PoleProximity(format!("Γ at {z}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        Ok(PI / (s * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    /// `Γ_R(s) = π^{-s/2} Γ(s/2)`
    R,
    /// `Γ_C(s) = 2 (2π)^{-s} Γ(s)`
    C,
}

impl GammaKind {
    pub fn eval(self, s: Complex64) -> Result<Complex64> {
        match self {
            GammaKind::R => {
                let pi = Complex64::new(PI, 0.0);
                Ok(pi.powc(-s / 2.0) * gamma(s / 2.0).map_err(|_| pole(self, s))?)
            }
            GammaKind::C => {
                let two_pi = Complex64::new(2.0 * PI, 0.0);
                Ok(2.0 * two_pi.powc(-s) * gamma(s).map_err(|_| pole(self, s))?)
            }
        }
    }
}

fn pole(kind: GammaKind, s: Complex64) -> Error {
    Error::PoleProximity(format!("Γ_{kind:?} at s = {s}"))
}

/// `∏ Γ_kind(s + shift)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GammaFactor {
    pub terms: Vec<(GammaKind, Complex64)>,
}

impl GammaFactor {
    pub fn new(terms: Vec<(GammaKind, Complex64)>) -> Self {
        GammaFactor { terms }
    }

    pub fn single(kind: GammaKind, shift: Complex64) -> Self {
        GammaFactor { terms: vec![(kind, shift)] }
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        self.terms.iter().try_fold(Complex64::new(1.0, 0.0), |acc, (kind, shift)| Ok(acc * kind.eval(s + shift)?))
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .map(|(k, shift)| {
                if shift.norm() == 0.0 {
                    format!("Gamma_{k:?}(s)")
                } else if shift.im == 0.0 {
                    format!("Gamma_{k:?}(s + {})", shift.re)
                } else {
                    format!("Gamma_{k:?}(s + ({}))", shift)
                }
            })
            .collect();
        f.write_str(&body.join(" "))
    }
}

pub fn gamma_factor_eval(g: &GammaFactor, s: Complex64) -> Result<Complex64> {
    g.eval(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn gamma_known_values() {
        assert!(close(gamma(c(1.0, 0.0)).unwrap(), c(1.0, 0.0), 1e-14));
        assert!(close(gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0), 1e-13));
        assert!(close(gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0), 1e-14));
        assert!(close(gamma(c(-0.5, 0.0)).unwrap(), c(-2.0 * PI.sqrt(), 0.0), 1e-13));
        // mpmath: gamma(1+1j)
        assert!(close(gamma(c(1.0, 1.0)).unwrap(), c(0.498_015_668_118_356_04, -0.154_949_828_301_810_68), 1e-13));
        // mpmath: gamma(0.3-2.5j)
        assert!(close(gamma(c(0.3, -2.5)).unwrap(), c(0.035_831_884_984_150_1, 0.020_264_814_365_175), 1e-12));
        assert!(matches!(gamma(c(-3.0, 0.0)), Err(Error::PoleProximity(_))));
        assert!(matches!(gamma(c(1e-10, 0.0)), Err(Error::PoleProximity(_))));
    }

    #[test]
    fn factor_examples() {
        let r = GammaFactor::single(GammaKind::R, c(0.0, 0.0));
        assert!(close(r.eval(c(1.0, 0.0)).unwrap(), c(1.0, 0.0), 1e-14));
        assert!(close(r.eval(c(2.0, 0.0)).unwrap(), c(1.0 / PI, 0.0), 1e-14));
        let cc = GammaFactor::single(GammaKind::C, c(0.0, 0.0));
        assert!(close(cc.eval(c(1.0, 0.0)).unwrap(), c(1.0 / PI, 0.0), 1e-14));
        assert!(r.eval(c(-2.0, 0.0)).is_err());
        assert!(r.eval(c(-1.0, 0.0)).is_ok());
        assert!(cc.eval(c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn duplication_on_grid() {
        let c_factor = GammaFactor::single(GammaKind::C, c(0.0, 0.0));
        let rr = GammaFactor::new(vec![(GammaKind::R, c(0.0, 0.0)), (GammaKind::R, c(1.0, 0.0))]);
        for i in 0..10 {
            for j in 0..10 {
                let s = c(0.2 + 2.8 * f64::from(i) / 9.0, -5.0 + 10.0 * f64::from(j) / 9.0);
                assert!(close(c_factor.eval(s).unwrap(), rr.eval(s).unwrap(), 1e-10), "{s}");
            }
        }
    }
}
