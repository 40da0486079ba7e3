//! Casselman–Shalika values of the normalized unramified Whittaker function on
//! the diagonal torus `a(λ) = diag(ϖ_F^{λ_1}, …, ϖ_F^{λ_n})`.

use crate::error::Result;
use crate::repdata::{delta_half_value, Extension, LocalDatum, Over, UnramifiedRep};
use crate::scalars::Scalar;
use crate::symfunc::{schur_bialternant, Partition, SchurEvaluator};

/// How Schur polynomials are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    JacobiTrudi,
    /// Needs distinct parameters.
    Bialternant,
}

/// Evaluates `W(a(λ))` for one representation, caching the `h_k` tables.
#[derive(Clone, Debug)]
pub struct WhittakerEvaluator {
    rep: UnramifiedRep,
    datum: LocalDatum,
    method: SchurMethod,
    t_table: SchurEvaluator,
    u_table: Option<SchurEvaluator>,
}

impl WhittakerEvaluator {
    /// Tables sized for partitions with largest part up to `max_part`.
    pub fn new(rep: &UnramifiedRep, datum: &LocalDatum, max_part: usize) -> Result<Self> {
        Self::with_method(rep, datum, max_part, SchurMethod::JacobiTrudi)
    }

    pub fn with_method(rep: &UnramifiedRep, datum: &LocalDatum, max_part: usize, method: SchurMethod) -> Result<Self> {
        rep.check_datum(datum)?;
        let scale = if datum.ext() == Extension::InertRamified { 2 } else { 1 };
        let degree = scale * max_part + rep.n();
        Ok(WhittakerEvaluator {
            rep: rep.clone(),
            datum: *datum,
            method,
            t_table: SchurEvaluator::new(rep.t(), degree),
            u_table: rep.u().map(|u| SchurEvaluator::new(u, degree)),
        })
    }

    pub fn rep(&self) -> &UnramifiedRep {
        &self.rep
    }

    pub fn datum(&self) -> &LocalDatum {
        &self.datum
    }

    fn schur(&self, table: &SchurEvaluator, params: &[Scalar], lambda: &Partition) -> Result<Scalar> {
        match self.method {
            SchurMethod::Bialternant => schur_bialternant(lambda, params),
            SchurMethod::JacobiTrudi => {
                let need = lambda.parts().first().copied().unwrap_or(0) as usize + lambda.length();
                if need <= table.max_degree() {
                    table.schur(lambda)
                } else {
                    SchurEvaluator::new(params, need).schur(lambda)
                }
            }
        }
    }

    /// `W(a(λ))`: zero unless `λ` is weakly decreasing. Decreasing tuples with
    /// negative entries are shifted by their last entry, which contributes a
    /// central factor.
    pub fn value(&self, lam: &[i64]) -> Result<Scalar> {
        assert_eq!(lam.len(), self.rep.n(), "tuple length must equal n");
        if lam.windows(2).any(|w| w[0] < w[1]) {
            return Ok(Scalar::zero());
        }
        let c = *lam.last().expect("n ≥ 1");
        let mu = Partition::new(lam.iter().map(|&l| (l - c) as u32).collect())?;
        let ext = self.datum.ext();
        let central = self.rep.central_parameter().pow(if ext == Extension::InertRamified { 2 * c } else { c })?;
        let schur = match ext {
            Extension::InertRamified => self.schur(&self.t_table, self.rep.t(), &mu.doubled())?,
            Extension::InertUnramified => self.schur(&self.t_table, self.rep.t(), &mu)?,
            Extension::Split => {
                let u = self.rep.u().expect("split rep has u");
                let u_table = self.u_table.as_ref().expect("split evaluator has u table");
                self.schur(&self.t_table, self.rep.t(), &mu)? * self.schur(u_table, u, &mu)?
            }
        };
        let delta = match ext {
            // δ_{n,F}^{1/2} for each of the two factors
            Extension::Split => {
                let half = delta_half_value(&self.datum, Over::F, lam);
                &half * &half
            }
            _ => delta_half_value(&self.datum, Over::E, lam),
        };
        Ok(delta * central * schur)
    }
}

/// `W(a(λ))` for the normalized unramified Whittaker function of `rep`.
pub fn cs_value(rep: &UnramifiedRep, datum: &LocalDatum, lam: &[i64]) -> Result<Scalar> {
    let top = lam.iter().map(|&l| l - lam.last().copied().unwrap_or(0)).max().unwrap_or(0).max(0);
    WhittakerEvaluator::new(rep, datum, top as usize)?.value(lam)
}

/// `W̃(a(λ))`, the normalized unramified Whittaker value of the contragredient.
pub fn tilde_cs_value(rep: &UnramifiedRep, datum: &LocalDatum, lam: &[i64]) -> Result<Scalar> {
    cs_value(&rep.contragredient(), datum, lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::delta_value;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn sample(ext: Extension, n: usize) -> (LocalDatum, UnramifiedRep) {
        let d = LocalDatum::new(3, ext).unwrap();
        let pool = [r(2, 1), Scalar::gauss((1, 2), (-1, 1)), r(-3, 5), Scalar::gauss((0, 1), (4, 3))];
        let t = pool[..n].to_vec();
        let u = (ext == Extension::Split).then(|| pool.iter().rev().take(n).cloned().collect());
        let rep = UnramifiedRep::for_datum(&d, t, u).unwrap();
        (d, rep)
    }

    fn tuples(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out.into_iter().flat_map(|p: Vec<i64>| (lo..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        out
    }

    #[test]
    fn examples() {
        for ext in Extension::ALL {
            let (d, rep) = sample(ext, 2);
            assert!(cs_value(&rep, &d, &[0, 1]).unwrap().is_zero());
            assert!(cs_value(&rep, &d, &[0, 0]).unwrap().is_one());
            assert!(tilde_cs_value(&rep, &d, &[0, 0]).unwrap().is_one());
        }
        let d = LocalDatum::new(7, Extension::InertRamified).unwrap();
        let (a, b) = (r(2, 1), Scalar::gauss((1, 3), (1, 1)));
        let rep = UnramifiedRep::inert(&d, vec![a.clone(), b.clone()]).unwrap();
        let expected = r(1, 7) * (&a * &a + &a * &b + &b * &b);
        assert_eq!(cs_value(&rep, &d, &[1, 0]).unwrap(), expected);

        let d = LocalDatum::new(5, Extension::InertUnramified).unwrap();
        let rep = UnramifiedRep::inert(&d, vec![r(2, 1)]).unwrap();
        assert_eq!(tilde_cs_value(&rep, &d, &[3]).unwrap(), r(1, 8));
        assert_eq!(tilde_cs_value(&rep.contragredient(), &d, &[3]).unwrap(), cs_value(&rep, &d, &[3]).unwrap());
    }

    #[test]
    fn support_is_decreasing_tuples() {
        for ext in Extension::ALL {
            for n in 1..=3 {
                let (d, rep) = sample(ext, n);
                let ev = WhittakerEvaluator::new(&rep, &d, 6).unwrap();
                for lam in tuples(n, -2, 2) {
                    let decreasing = lam.windows(2).all(|w| w[0] >= w[1]);
                    assert_eq!(ev.value(&lam).unwrap().is_zero(), !decreasing, "{ext} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn central_covariance() {
        for ext in Extension::ALL {
            let kappa = if ext == Extension::InertRamified { 2 } else { 1 };
            for n in 1..=3 {
                let (d, rep) = sample(ext, n);
                let ev = WhittakerEvaluator::new(&rep, &d, 8).unwrap();
                for lam in tuples(n, 0, 2).into_iter().filter(|l| l.windows(2).all(|w| w[0] >= w[1])) {
                    for c in -2..=2i64 {
                        let shifted: Vec<i64> = lam.iter().map(|l| l + c).collect();
                        // δ is trivial on the center; the q-power ratio is 1
                        let q_ratio = delta_value(&d, Over::F, &shifted).try_div(&delta_value(&d, Over::F, &lam)).unwrap();
                        assert!(q_ratio.is_one());
                        let expected = rep.central_parameter().pow(kappa * c).unwrap() * ev.value(&lam).unwrap();
                        assert_eq!(ev.value(&shifted).unwrap(), expected, "{ext} {lam:?} c={c}");
                    }
                }
            }
        }
    }

    #[test]
    fn bialternant_agrees_with_jacobi_trudi() {
        for ext in Extension::ALL {
            for n in 1..=3 {
                let (d, rep) = sample(ext, n);
                let jt = WhittakerEvaluator::new(&rep, &d, 4).unwrap();
                let bi = WhittakerEvaluator::with_method(&rep, &d, 4, SchurMethod::Bialternant).unwrap();
                for lam in tuples(n, -1, 3) {
                    assert_eq!(jt.value(&lam).unwrap(), bi.value(&lam).unwrap(), "{ext} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn table_overflow_falls_back() {
        let (d, rep) = sample(Extension::InertRamified, 2);
        let small = WhittakerEvaluator::new(&rep, &d, 1).unwrap();
        let big = WhittakerEvaluator::new(&rep, &d, 10).unwrap();
        assert_eq!(small.value(&[7, 2]).unwrap(), big.value(&[7, 2]).unwrap());
    }

    #[test]
    fn n1_values_are_character_powers() {
        for ext in [Extension::InertUnramified, Extension::InertRamified] {
            let d = LocalDatum::new(5, ext).unwrap();
            let t = Scalar::gauss((3, 2), (1, 1));
            let rep = UnramifiedRep::inert(&d, vec![t.clone()]).unwrap();
            let v = if ext == Extension::InertRamified { 2 } else { 1 };
            for k in -3..=3 {
                assert_eq!(cs_value(&rep, &d, &[k]).unwrap(), t.pow(v * k).unwrap());
            }
        }
    }
}
