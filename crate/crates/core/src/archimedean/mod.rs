//! Archimedean checks in double precision: `Γ_R`/`Γ_C` factors, `n = 1` Tate
//! integrals over `R` with their functional equation, and reconstruction of an
//! entire function from its values on two vertical lines.
//!
//! The additive character is `ψ'(x) = e^{2πix}` with the self-dual Lebesgue
//! measure, so `φ̂(y) = ∫ φ(x) e^{2πixy} dx`.

pub mod gamma;
pub mod quad;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use gamma::{gamma, gamma_factor_eval, GammaFactor, GammaKind};
pub use quad::{integrate, integrate_pieces};

/// Absolute tolerance for the quadratures below.
pub const QUAD_TOLERANCE: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArchField {
    R,
    C,
}

/// `sgn^ε |x|^{s₀}` on `R^×` (`ε ∈ {0, 1}`), or `(z/|z|)^k |z|_C^{s₀}` on `C^×`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArchCharacter {
    field: ArchField,
    sign_or_winding: i64,
    exponent: Complex64,
}

impl ArchCharacter {
    pub fn new(field: ArchField, sign_or_winding: i64, exponent: Complex64) -> Result<Self> {
        if field == ArchField::R && !(0..=1).contains(&sign_or_winding) {
            return Err(Error::InvalidDatum(format!("real sign must be 0 or 1, got {sign_or_winding}")));
        }
        Ok(ArchCharacter { field, sign_or_winding, exponent })
    }

    pub fn trivial() -> Self {
        ArchCharacter { field: ArchField::R, sign_or_winding: 0, exponent: Complex64::new(0.0, 0.0) }
    }

    pub fn sgn() -> Self {
        ArchCharacter { field: ArchField::R, sign_or_winding: 1, exponent: Complex64::new(0.0, 0.0) }
    }

    pub fn field(&self) -> ArchField {
        self.field
    }

    pub fn sign_or_winding(&self) -> i64 {
        self.sign_or_winding
    }

    pub fn exponent(&self) -> Complex64 {
        self.exponent
    }

    pub fn inverse(&self) -> Self {
        let k = match self.field {
            ArchField::R => self.sign_or_winding,
            ArchField::C => -self.sign_or_winding,
        };
        ArchCharacter { field: self.field, sign_or_winding: k, exponent: -self.exponent }
    }

    /// `χ|_{R^×}` for a character of `C^×`: `sgn^{k mod 2} |x|^{2 s₀}`.
    pub fn restrict_to_r(&self) -> Self {
        match self.field {
            ArchField::R => *self,
            ArchField::C => ArchCharacter {
                field: ArchField::R,
                sign_or_winding: self.sign_or_winding.rem_euclid(2),
                exponent: 2.0 * self.exponent,
            },
        }
    }

    fn require_real(&self) -> Result<()> {
        match self.field {
            ArchField::R => Ok(()),
            ArchField::C => Err(Error::InvalidDatum("expected a character of R^×".into())),
        }
    }

    /// Tate's `L(s, χ) = Γ_R(s + s₀ + ε)` for a real character.
    pub fn l_factor(&self) -> Result<GammaFactor> {
        self.require_real()?;
        Ok(GammaFactor::single(GammaKind::R, self.exponent + self.sign_or_winding as f64))
    }

    /// `ε(s, sgn^ε |·|^{s₀}, ψ') = i^ε`.
    pub fn epsilon(&self) -> Result<Complex64> {
        self.require_real()?;
        Ok(Complex64::i().powi(self.sign_or_winding as i32))
    }
}

impl fmt::Display for ArchCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field {
            ArchField::R => "R",
            ArchField::C => "C",
        };
        write!(f, "{field},{},{}", self.sign_or_winding, self.exponent)
    }
}

/// `trivial`, `sgn`, or `R,<ε>[,<s₀>]` / `C,<k>[,<s₀>]` with `s₀` a complex number.
impl FromStr for ArchCharacter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "character", text: text.to_string() };
        match text.trim() {
            "trivial" => return Ok(Self::trivial()),
            "sgn" => return Ok(Self::sgn()),
            _ => {}
        }
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(bad());
        }
        let field = match parts[0] {
            "R" => ArchField::R,
            "C" => ArchField::C,
            _ => return Err(bad()),
        };
        let k: i64 = parts[1].parse().map_err(|_| bad())?;
        let s0 = match parts.get(2) {
            Some(p) => parse_complex(p)?,
            None => Complex64::new(0.0, 0.0),
        };
        Self::new(field, k, s0)
    }
}

/// Parses `0.3+0.2i`, `-1.5`, `2i` and the like.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Complex64::from_str(&cleaned).map_err(|_| Error::Parse { what: "complex number", text: text.to_string() })
}

/// Asai `L`-factor of a character of `C^×` (the `n = 1` case over `C/R`).
pub fn arch_asai_l_n1(chi: &ArchCharacter) -> Result<GammaFactor> {
    if chi.field != ArchField::C {
        return Err(Error::InvalidDatum("the Asai factor needs a character of C^×".into()));
    }
    chi.restrict_to_r().l_factor()
}

/// Test functions on `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestFn {
    /// `e^{−πx²}`
    Gaussian,
    /// `x e^{−πx²}`
    XGaussian,
}

impl TestFn {
    pub fn eval(self, x: f64) -> f64 {
        let g = (-PI * x * x).exp();
        match self {
            TestFn::Gaussian => g,
            TestFn::XGaussian => x * g,
        }
    }

    /// Order of vanishing at 0.
    fn order_at_zero(self) -> i32 {
        match self {
            TestFn::Gaussian => 0,
            TestFn::XGaussian => 1,
        }
    }

    /// `φ̂ = c · φ'` for the transform with kernel `e^{2πixy}`.
    pub fn fourier(self) -> (TestFn, Complex64) {
        match self {
            TestFn::Gaussian => (TestFn::Gaussian, Complex64::new(1.0, 0.0)),
            TestFn::XGaussian => (TestFn::XGaussian, Complex64::i()),
        }
    }

    /// The test function that pairs non-trivially with `sgn^ε`.
    pub fn for_sign(sign: i64) -> Self {
        if sign == 0 {
            TestFn::Gaussian
        } else {
            TestFn::XGaussian
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TestFn::Gaussian => "gaussian",
            TestFn::XGaussian => "x_gaussian",
        }
    }
}

impl FromStr for TestFn {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.trim() {
            "gaussian" => Ok(TestFn::Gaussian),
            "x_gaussian" => Ok(TestFn::XGaussian),
            _ => Err(Error::Parse { what: "test function", text: text.to_string() }),
        }
    }
}

/// Where `e^{−πx²}` drops below double precision relative to 1.
const GAUSS_CUTOFF: f64 = 8.0;
/// Depth of the `x = e^{−u}` substitution on `(0, 1]`.
const LOG_CUTOFF: f64 = 30.0;

/// `∫_0^∞ h(x) x^{w−1} dx` for `h` smooth with `h(x) = 1 + O(x²)` at 0 and
/// Gaussian decay. The piece near 0 uses `x = e^{−u}` with the analytic tail
/// `e^{−Uw}/w`.
fn mellin_half_line(h: &dyn Fn(f64) -> f64, w: Complex64) -> Result<Complex64> {
    let near = |u: f64| h((-u).exp()) * (-u * w).exp();
    let mut total = integrate_pieces(&near, 0.0, LOG_CUTOFF, 30, QUAD_TOLERANCE)?;
    total += (-LOG_CUTOFF * w).exp() / w;
    let far = |x: f64| h(x) * Complex64::new(x, 0.0).powc(w - 1.0);
    total += integrate_pieces(&far, 1.0, GAUSS_CUTOFF, 7, QUAD_TOLERANCE)?;
    Ok(total)
}

/// `Z(s, χ, φ) = ∫_{R^×} χ(x) φ(x) |x|^s d^×x` by quadrature on each half-line.
pub fn tate_zeta_numeric(chi: &ArchCharacter, testfn: TestFn, s: Complex64) -> Result<Complex64> {
    chi.require_real()?;
    let k = testfn.order_at_zero();
    let w = s + chi.exponent + f64::from(k);
    if w.re <= 0.0 {
        return Err(Error::NonConvergent(format!(
            "Re(s) must exceed {} for this character and test function",
            -(chi.exponent.re + f64::from(k))
        )));
    }
    // φ(x) = x^k h(x) on x > 0, and φ(−x) = (−1)^k x^k h(x)
    let h = move |x: f64| testfn.eval(x) / x.powi(k);
    let half = mellin_half_line(&h, w)?;
    let sign_neg = if (k + chi.sign_or_winding as i32) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(half * (1.0 + sign_neg))
}

/// `γ(s, χ, ψ') = ε · L(1 − s, χ^{-1}) / L(s, χ)`.
pub fn tate_gamma(chi: &ArchCharacter, s: Complex64) -> Result<Complex64> {
    let l = chi.l_factor()?.eval(s)?;
    let l_dual = chi.inverse().l_factor()?.eval(1.0 - s)?;
    Ok(chi.epsilon()? * l_dual / l)
}

/// `|Z(1 − s, χ^{-1}, φ̂) − γ(s) Z(s, χ, φ)|`.
pub fn tate_fe_residual(chi: &ArchCharacter, testfn: TestFn, s: Complex64) -> Result<f64> {
    let z = tate_zeta_numeric(chi, testfn, s)?;
    let (dual_fn, c) = testfn.fourier();
    let z_dual = c * tate_zeta_numeric(&chi.inverse(), dual_fn, 1.0 - s)?;
    Ok((z_dual - tate_gamma(chi, s)? * z).norm())
}

/// `(1/2π) [∫_{−X}^{X} f₊(D+ix)/(D+ix−s) dx + ∫_{−X}^{X} f₋(D+ix)/(D+ix+s) dx]`:
/// Cauchy's formula on the lines `Re = ±D` with `f₋(z) = f(−z)`.
pub fn contour_reconstruct_truncated(
    d: f64,
    fplus: &dyn Fn(Complex64) -> Complex64,
    fminus: &dyn Fn(Complex64) -> Complex64,
    s: Complex64,
    x_max: f64,
) -> Result<Complex64> {
    if d <= 0.0 {
        return Err(Error::InvalidDatum(format!("contour abscissa must be positive, got {d}")));
    }
    if (s.re - d).abs() < 1e-8 || (s.re + d).abs() < 1e-8 {
        return Err(Error::OnContour(s.re));
    }
    if s.re.abs() >= d {
        return Err(Error::InvalidDatum(format!("|Re(s)| must be below D = {d}")));
    }
    let integrand = |x: f64| {
        let z = Complex64::new(d, x);
        fplus(z) / (z - s) + fminus(z) / (z + s)
    };
    let pieces = (2.0 * x_max).ceil().max(1.0) as usize;
    Ok(integrate_pieces(&integrand, -x_max, x_max, pieces, 1e-13)? / (2.0 * PI))
}

/// As [`contour_reconstruct_truncated`], with the truncation grown until both
/// integrands fall below `1e-12` at `±X`.
pub fn contour_reconstruct(
    d: f64,
    fplus: &dyn Fn(Complex64) -> Complex64,
    fminus: &dyn Fn(Complex64) -> Complex64,
    s: Complex64,
) -> Result<Complex64> {
    let tail = |x: f64| {
        [x, -x]
            .iter()
            .map(|&y| {
                let z = Complex64::new(d, y);
                (fplus(z) / (z - s)).norm().max((fminus(z) / (z + s)).norm())
            })
            .fold(0.0, f64::max)
    };
    let mut x_max = 4.0;
    while tail(x_max) > 1e-12 {
        x_max *= 1.5;
        if x_max > 1e4 {
            return Err(Error::NonConvergent("contour integrand does not decay".into()));
        }
    }
    contour_reconstruct_truncated(d, fplus, fminus, s, x_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn grid() -> Vec<Complex64> {
        (0..10).map(|k| c(0.1 + 0.8 * f64::from(k) / 9.0, -2.0 + 4.0 * f64::from((k * 7) % 10) / 9.0)).collect()
    }

    #[test]
    fn asai_n1_examples() {
        let chi = |k, s0| ArchCharacter::new(ArchField::C, k, s0).unwrap();
        let r = |shift: f64| GammaFactor::single(GammaKind::R, c(shift, 0.0));
        assert_eq!(arch_asai_l_n1(&chi(0, c(0.0, 0.0))).unwrap(), r(0.0));
        assert_eq!(arch_asai_l_n1(&chi(1, c(0.0, 0.0))).unwrap(), r(1.0));
        assert_eq!(arch_asai_l_n1(&chi(2, c(0.0, 0.0))).unwrap(), r(0.0));
        assert_eq!(arch_asai_l_n1(&chi(-3, c(0.25, 0.0))).unwrap(), r(1.5));
        assert!(arch_asai_l_n1(&ArchCharacter::trivial()).is_err());
    }

    #[test]
    fn tate_examples() {
        let z = tate_zeta_numeric(&ArchCharacter::trivial(), TestFn::Gaussian, c(2.0, 0.0)).unwrap();
        assert!((z - c(1.0 / PI, 0.0)).norm() < 1e-9);
        let z = tate_zeta_numeric(&ArchCharacter::trivial(), TestFn::Gaussian, c(1.0, 0.0)).unwrap();
        assert!((z - c(1.0, 0.0)).norm() < 1e-9);
        let z = tate_zeta_numeric(&ArchCharacter::sgn(), TestFn::Gaussian, c(0.7, 0.3)).unwrap();
        assert_eq!(z, c(0.0, 0.0));
        assert!(matches!(
            tate_zeta_numeric(&ArchCharacter::trivial(), TestFn::Gaussian, c(-0.1, 0.0)),
            Err(Error::NonConvergent(_))
        ));
    }

    #[test]
    fn tate_matches_gamma_r_on_grid() {
        let l = GammaFactor::single(GammaKind::R, c(0.0, 0.0));
        for s in grid() {
            let z = tate_zeta_numeric(&ArchCharacter::trivial(), TestFn::Gaussian, s).unwrap();
            assert!((z - l.eval(s).unwrap()).norm() < 1e-8, "{s}");
        }
    }

    #[test]
    fn tate_functional_equation() {
        let trivial = ArchCharacter::trivial();
        for s in [c(0.5, 0.0), c(0.3, 0.2)] {
            assert!(tate_fe_residual(&trivial, TestFn::Gaussian, s).unwrap() < 1e-6);
        }
        assert!(tate_fe_residual(&ArchCharacter::sgn(), TestFn::XGaussian, c(0.4, 0.0)).unwrap() < 1e-6);
        for s in grid() {
            assert!(tate_fe_residual(&trivial, TestFn::Gaussian, s).unwrap() < 1e-6);
            assert!(tate_fe_residual(&ArchCharacter::sgn(), TestFn::XGaussian, s).unwrap() < 1e-6);
        }
        let twisted = ArchCharacter::new(ArchField::R, 1, c(0.1, 0.3)).unwrap();
        assert!(tate_fe_residual(&twisted, TestFn::XGaussian, c(0.45, -0.5)).unwrap() < 1e-6);
    }

    #[test]
    fn wrong_epsilon_sign_is_visible() {
        // with ε = −i instead of i the residual is of the size of the integrals
        let s = c(0.4, 0.0);
        let z = tate_zeta_numeric(&ArchCharacter::sgn(), TestFn::XGaussian, s).unwrap();
        let z_dual = Complex64::i() * tate_zeta_numeric(&ArchCharacter::sgn(), TestFn::XGaussian, 1.0 - s).unwrap();
        let gamma_wrong = -tate_gamma(&ArchCharacter::sgn(), s).unwrap();
        assert!((z_dual - gamma_wrong * z).norm() > 0.1);
    }

    #[test]
    fn character_parsing() {
        assert_eq!("trivial".parse::<ArchCharacter>().unwrap(), ArchCharacter::trivial());
        assert_eq!("sgn".parse::<ArchCharacter>().unwrap(), ArchCharacter::sgn());
        let chi: ArchCharacter = "C,3,0.5+1i".parse().unwrap();
        assert_eq!((chi.field(), chi.sign_or_winding(), chi.exponent()), (ArchField::C, 3, c(0.5, 1.0)));
        assert!("R,2".parse::<ArchCharacter>().is_err());
        assert!("Q,1".parse::<ArchCharacter>().is_err());
        assert_eq!(parse_complex("0.3 + 0.2i").unwrap(), c(0.3, 0.2));
    }

    #[test]
    fn contour_examples() {
        let f = |z: Complex64| (z * z).exp();
        let fm = |z: Complex64| (z * z).exp();
        for s in [c(0.0, 0.0), c(0.5, 0.0), c(0.3, 0.1), c(-1.2, 0.7), c(1.5, -0.4)] {
            let v = contour_reconstruct(2.0, &f, &fm, s).unwrap();
            assert!((v - f(s)).norm() < 1e-6, "{s}: {v}");
        }
        assert!(matches!(contour_reconstruct(2.0, &f, &fm, c(2.0, 0.0)), Err(Error::OnContour(_))));
    }

    #[test]
    fn contour_error_shrinks_with_truncation() {
        let f = |z: Complex64| (z * z).exp();
        let s = c(0.3, 0.1);
        let errs: Vec<f64> = [2.0, 4.0, 6.0]
            .iter()
            .map(|&x| (contour_reconstruct_truncated(2.0, &f, &f, s, x).unwrap() - f(s)).norm())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }
}
