//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
/// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_PANELS: usize = 4000;

/// One G7K15 panel: Kronrod estimate and `|K − G|`.
fn panel(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let centre = f(mid);
    let mut kronrod = centre * WGK[7];
    let mut gauss = centre * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(mid - dx) + f(mid + dx);
        kronrod += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).norm())
}

/// Global adaptive scheme: repeatedly bisect the panel with the largest error
/// estimate until the summed estimate is below `tol`.
fn adapt(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    let mut panels = vec![(a, b, panel(f, a, b))];
    loop {
        let total: Complex64 = panels.iter().map(|p| p.2 .0).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::NonConvergent(format!("non-finite integrand on [{a}, {b}]")));
        }
        let err: f64 = panels.iter().map(|p| p.2 .1).sum();
        if err <= tol {
            return Ok(total);
        }
        if panels.len() >= MAX_PANELS {
            return Err(Error::NonConvergent(format!("error {err:.2e} above {tol:.2e} on [{a}, {b}]")));
        }
        let worst = (0..panels.len())
            .max_by(|&i, &j| panels[i].2 .1.total_cmp(&panels[j].2 .1))
            .expect("at least one panel");
        let (lo, hi, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        panels.push((lo, mid, panel(f, lo, mid)));
        panels.push((mid, hi, panel(f, mid, hi)));
    }
}

/// `∫_a^b f(x) dx` to absolute tolerance `tol`.
pub fn integrate(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    adapt(f, a, b, tol)
}

/// `∫_a^b` split into `pieces` equal panels first, for long or oscillating ranges.
pub fn integrate_pieces(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, pieces: usize, tol: f64) -> Result<Complex64> {
    let step = (b - a) / pieces as f64;
    (0..pieces).try_fold(Complex64::new(0.0, 0.0), |acc, k| {
        let lo = a + step * k as f64;
        Ok(acc + integrate(f, lo, lo + step, tol / pieces as f64)?)
    })
}
