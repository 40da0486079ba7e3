//! Seeded verification suites behind `asai verify`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::Config;
use crate::error::Result;
use crate::repdata::{Extension, FourthRoot, LocalDatum, TauDatum, UnramifiedRep};
use crate::report::VerifyReport;
use crate::scalars::Scalar;
use crate::symfunc::{identity_check, IdentityKind};
use crate::zeta::{twist_covariance_check, verify_functional_equation_grid, verify_unramified_identity};

pub const UNRAMIFIED_CASES: usize = 50;
pub const IDENTITY_CASES: usize = 20;
pub const IDENTITY_DEPTH: usize = 10;
pub const TWIST_CASES: usize = 10;
pub const TWIST_DEPTH: usize = 8;
pub const TWIST_N_MAX: usize = 3;
pub const TWIST_M: [i64; 3] = [0, 1, 2];
pub const TAU_VALUATIONS: [u32; 3] = [0, 1, 2];
/// Residue field sizes drawn for random data.
pub const Q_CHOICES: [u64; 6] = [2, 3, 4, 5, 7, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Unramified,
    Fe,
    Identities,
    Twist,
    All,
}

impl Suite {
    pub fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Unramified, Suite::Fe, Suite::Identities, Suite::Twist],
            s => vec![s],
        }
    }

    /// Stream index of the generator, so each suite draws the same data alone or inside `all`.
    fn stream(self) -> u64 {
        match self {
            Suite::Unramified => 1,
            Suite::Fe => 2,
            Suite::Identities => 3,
            Suite::Twist => 4,
            Suite::All => 0,
        }
    }
}

/// Deterministic source of random Satake parameters.
pub struct ParamGen {
    rng: ChaCha8Rng,
}

impl ParamGen {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        ParamGen { rng }
    }

    /// `±a/b` with `1 ≤ a, b ≤ 9`.
    fn small_ratio(&mut self) -> (i64, i64) {
        let a: i64 = self.rng.gen_range(1..=9);
        let b: i64 = self.rng.gen_range(1..=9);
        (if self.rng.gen_bool(0.5) { -a } else { a }, b)
    }

    /// Nonzero Gaussian rational; the imaginary part is present half the time.
    pub fn scalar(&mut self) -> Scalar {
        let re = self.small_ratio();
        if self.rng.gen_bool(0.5) {
            Scalar::gauss(re, self.small_ratio())
        } else {
            Scalar::from_ratio(re.0, re.1)
        }
    }

    pub fn tuple(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    /// Tuple with pairwise distinct entries.
    pub fn distinct_tuple(&mut self, n: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::with_capacity(n);
        while out.len() < n {
            let x = self.scalar();
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    pub fn q(&mut self) -> u64 {
        Q_CHOICES[self.rng.gen_range(0..Q_CHOICES.len())]
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// Random `(datum, rep)` of the given type and rank.
    pub fn rep(&mut self, ext: Extension, n: usize) -> (LocalDatum, UnramifiedRep) {
        let datum = LocalDatum::new(self.q(), ext).expect("q drawn from prime powers");
        let t = self.tuple(n);
        let u = (ext == Extension::Split).then(|| self.tuple(n));
        let rep = UnramifiedRep::for_datum(&datum, t, u).expect("random parameters are nonzero");
        (datum, rep)
    }

    /// Points on the unit circle.
    pub fn unit_complex(&mut self, n: usize) -> Vec<Complex64> {
        (0..n).map(|_| Complex64::from_polar(1.0, self.rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub depth: usize,
    pub n_max: usize,
    pub config: Option<Config>,
}

type Case = (LocalDatum, UnramifiedRep);

fn cases(opts: &SuiteOptions, suite: Suite, per_shape: usize, n_max: usize) -> Vec<Case> {
    if let Some(c) = &opts.config {
        return vec![(c.datum(), c.rep())];
    }
    let mut gen = ParamGen::new(opts.seed, suite.stream());
    let mut out = Vec::new();
    for ext in Extension::ALL {
        for n in 1..=n_max {
            for _ in 0..per_shape {
                out.push(gen.rep(ext, n));
            }
        }
    }
    out
}

fn flatten(chunks: Vec<Result<Vec<VerifyReport>>>) -> Result<Vec<VerifyReport>> {
    Ok(chunks.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

fn unramified(opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let cs = cases(opts, Suite::Unramified, UNRAMIFIED_CASES, opts.n_max);
    cs.par_iter().map(|(d, rep)| verify_unramified_identity(rep, d, opts.depth)).collect()
}

/// Every case over the `(d, λ)` grid, plus the unramified identity for the
/// contragredient (the dual Zeta side).
fn functional_equation(opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let cs = cases(opts, Suite::Fe, UNRAMIFIED_CASES, opts.n_max);
    let mut taus: Vec<TauDatum> = Vec::new();
    if let Some(c) = &opts.config {
        taus.push(c.tau());
    }
    for d in TAU_VALUATIONS {
        for lam in FourthRoot::ALL {
            let tau = TauDatum::new(d, lam);
            if !taus.contains(&tau) {
                taus.push(tau);
            }
        }
    }
    let chunks = cs
        .par_iter()
        .map(|(d, rep)| {
            let mut out = verify_functional_equation_grid(rep, d, &taus)?;
            let mut dual = verify_unramified_identity(&rep.contragredient(), d, opts.depth)?;
            dual.case = "unramified_identity_dual".into();
            out.push(dual);
            Ok(out)
        })
        .collect();
    flatten(chunks)
}

fn identities(opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let mut jobs: Vec<(IdentityKind, Vec<Scalar>, Option<Vec<Scalar>>)> = Vec::new();
    if let Some(c) = &opts.config {
        for kind in IdentityKind::ALL {
            let u = (kind == IdentityKind::Cauchy).then(|| c.satake2.clone().unwrap_or_else(|| c.satake.clone()));
            jobs.push((kind, c.satake.clone(), u));
        }
    } else {
        let mut gen = ParamGen::new(opts.seed, Suite::Identities.stream());
        for kind in IdentityKind::ALL {
            for n in 1..=opts.n_max {
                for _ in 0..IDENTITY_CASES {
                    let t = gen.tuple(n);
                    let u = (kind == IdentityKind::Cauchy).then(|| gen.tuple(n));
                    jobs.push((kind, t, u));
                }
            }
        }
    }
    jobs.par_iter().map(|(kind, t, u)| identity_check(*kind, t, u.as_deref(), IDENTITY_DEPTH)).collect()
}

fn twist(opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let cs = cases(opts, Suite::Twist, TWIST_CASES, opts.n_max.min(TWIST_N_MAX));
    let jobs: Vec<(&Case, i64)> = cs.iter().flat_map(|c| TWIST_M.iter().map(move |&m| (c, m))).collect();
    jobs.par_iter().map(|((d, rep), m)| twist_covariance_check(rep, d, *m, TWIST_DEPTH)).collect()
}

/// Runs the suite (all four parts for [`Suite::All`]) and returns the records in order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for part in suite.parts() {
        out.extend(match part {
            Suite::Unramified => unramified(opts)?,
            Suite::Fe => functional_equation(opts)?,
            Suite::Identities => identities(opts)?,
            Suite::Twist => twist(opts)?,
            Suite::All => unreachable!("parts() expands all"),
        });
    }
    Ok(out)
}
