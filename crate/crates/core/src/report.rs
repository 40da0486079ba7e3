use std::fmt;

use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// First coefficient where two exact expansions disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub degree: i64,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Outcome of one verification case, printed as a single record:
///
/// `case=<..> q=<..> ext=<..> n=<..> status=<pass|fail> [mismatch_degree=<k> lhs=<..> rhs=<..>]`
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub case: String,
    pub q: Option<u64>,
    pub ext: String,
    pub n: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn new(case: impl Into<String>, q: Option<u64>, ext: impl Into<String>, n: usize) -> Self {
        VerifyReport { case: case.into(), q, ext: ext.into(), n, mismatch: None }
    }

    pub fn with_mismatch(mut self, mismatch: Option<Mismatch>) -> Self {
        self.mismatch = mismatch;
        self
    }

    pub fn status(&self) -> Status {
        if self.mismatch.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.q.map_or_else(|| "-".to_string(), |q| q.to_string());
        write!(f, "case={} q={} ext={} n={} status={}", self.case, q, self.ext, self.n, self.status())?;
        if let Some(m) = &self.mismatch {
            write!(f, " mismatch_degree={} lhs={} rhs={}", m.degree, m.lhs, m.rhs)?;
        }
        Ok(())
    }
}
