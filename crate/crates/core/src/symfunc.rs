//! Partitions, Schur polynomials evaluated at exact points, and truncated
//! checks of the Cauchy and Littlewood generating-function identities.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::laurent::{series_expand, EulerProduct, SeriesTruncation};
use crate::report::{Mismatch, VerifyReport};
use crate::scalars::{common_denominator, GaussInt, Scalar};

/// Weakly decreasing tuple of nonnegative integers; trailing zeros allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse { what: "partition", text: format!("{parts:?}") });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// `2λ = (2λ_1, …, 2λ_n)`.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// The parts padded with zeros (or truncated past the nonzero parts) to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Partitions of `size` with at most `max_parts` parts, lexicographically
    /// decreasing, each padded to `max_parts` entries.
    pub fn of_size(size: u32, max_parts: usize) -> Vec<Partition> {
        fn go(remaining: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if remaining == 0 {
                    out.push(Partition(prefix.clone()));
                }
                return;
            }
            for p in (0..=cap.min(remaining)).rev() {
                // the rest must fit in slots − 1 parts of size ≤ p
                if u64::from(p) * slots as u64 >= u64::from(remaining) {
                    prefix.push(p);
                    go(remaining - p, p, slots - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        if max_parts == 0 {
            if size == 0 {
                out.push(Partition::empty());
            }
            return out;
        }
        go(size, size, max_parts, &mut Vec::with_capacity(max_parts), &mut out);
        out
    }

    /// All partitions with `|λ| ≤ bound` and at most `max_parts` parts, by size
    /// then lexicographically decreasing.
    pub fn up_to(bound: u32, max_parts: usize) -> Vec<Partition> {
        (0..=bound).flat_map(|k| Self::of_size(k, max_parts)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Elementary symmetric values `e_0, …, e_n` of `t`.
pub fn elementary(t: &[Scalar]) -> Vec<Scalar> {
    let mut e = vec![Scalar::zero(); t.len() + 1];
    e[0] = Scalar::one();
    for (k, x) in t.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            e[j] = &e[j] + &(&e[j - 1] * x);
        }
    }
    e
}

/// Determinant: division-free expansion over column subsets for small sizes,
/// Gaussian elimination beyond.
pub fn determinant(m: Vec<Vec<Scalar>>) -> Scalar {
    if m.len() <= 8 {
        subset_expansion(&m)
    } else {
        elimination(m)
    }
}

/// The ring operations the subset expansion needs.
trait DetRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl DetRing for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl DetRing for GaussInt {
    fn zero() -> Self {
        GaussInt::zero()
    }
    fn one() -> Self {
        GaussInt::one()
    }
    fn is_zero(&self) -> bool {
        GaussInt::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        GaussInt::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        GaussInt::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        GaussInt::mul(self, other)
    }
}

/// `dp[S]` is the signed sum over bijections from the first `|S|` rows onto
/// the column set `S`; `O(n 2^n)` products and no inversions.
fn subset_expansion<R: DetRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut dp = vec![R::zero(); 1 << n];
    dp[0] = R::one();
    for mask in 0..(1usize << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for (j, entry) in m[row].iter().enumerate() {
            if mask & (1 << j) != 0 || entry.is_zero() {
                continue;
            }
            let term = dp[mask].mul(entry);
            // sign of placing column j after the columns already used above it
            let above = (mask >> (j + 1)).count_ones();
            let next = mask | (1 << j);
            dp[next] = if above % 2 == 0 { dp[next].add(&term) } else { dp[next].sub(&term) };
        }
    }
    dp.pop().expect("2^n ≥ 1 entries")
}

fn elimination(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = m[col][col].inv().expect("pivot is nonzero");
        det = det * &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

/// `h_k = Σ_j (−1)^{j−1} e_j h_{k−j}` for `k ≤ max_degree`.
fn complete_homogeneous<R: DetRing>(e: &[R], max_degree: usize) -> Vec<R> {
    let n = e.len() - 1;
    let mut h: Vec<R> = Vec::with_capacity(max_degree + 1);
    h.push(R::one());
    for k in 1..=max_degree {
        let mut acc = R::zero();
        for j in 1..=k.min(n) {
            let term = e[j].mul(&h[k - j]);
            acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        h.push(acc);
    }
    h
}

#[derive(Clone, Debug)]
enum HTable {
    /// Parameters with a `√q` part.
    General(Vec<Scalar>),
    /// `t = T / den` with `T` Gaussian integers; holds `h_k(T)`, so that
    /// `s_λ(t) = s_λ(T) / den^{|λ|}`.
    Integral { h: Vec<GaussInt>, den: BigInt },
}

/// Scales Gaussian-rational parameters to Gaussian integers over a common denominator.
fn integral_parameters(t: &[Scalar]) -> Option<(Vec<GaussInt>, BigInt)> {
    if t.iter().any(|x| x.q().is_some()) {
        return None;
    }
    let den = common_denominator(t.iter().map(Scalar::rational_part));
    Some((t.iter().map(|x| GaussInt::scaled(x.rational_part(), &den)).collect(), den))
}

/// Complete homogeneous values `h_0 … h_K` of a fixed parameter tuple,
/// reused across many Jacobi–Trudi evaluations.
#[derive(Clone, Debug)]
pub struct SchurEvaluator {
    n: usize,
    table: HTable,
}

impl SchurEvaluator {
    /// Tabulates `h_k` for `k ≤ max_degree`.
    pub fn new(t: &[Scalar], max_degree: usize) -> Self {
        let table = match integral_parameters(t) {
            Some((scaled, den)) => {
                let mut e = vec![GaussInt::zero(); t.len() + 1];
                e[0] = GaussInt::one();
                for (k, x) in scaled.iter().enumerate() {
                    for j in (1..=k + 1).rev() {
                        e[j] = e[j].add(&e[j - 1].mul(x));
                    }
                }
                HTable::Integral { h: complete_homogeneous(&e, max_degree), den }
            }
            None => HTable::General(complete_homogeneous(&elementary(t), max_degree)),
        };
        SchurEvaluator { n: t.len(), table }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        match &self.table {
            HTable::General(h) => h.len() - 1,
            HTable::Integral { h, .. } => h.len() - 1,
        }
    }

    fn jt_matrix<R: DetRing>(h: &[R], parts: &[u32], l: usize) -> Vec<Vec<R>> {
        let entry = |k: i64| if k < 0 { R::zero() } else { h[k as usize].clone() };
        (0..l)
            .map(|i| (0..l).map(|j| entry(i64::from(parts[i]) - i as i64 + j as i64)).collect())
            .collect()
    }

    /// `s_λ(t) = det(h_{λ_i − i + j})`. Panics if the table is too short for λ;
    /// `λ_1 + ℓ(λ) − 1 ≤ max_degree` is needed.
    pub fn schur(&self, lambda: &Partition) -> Result<Scalar> {
        let l = lambda.length();
        if l > self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: l });
        }
        let parts = lambda.parts();
        match &self.table {
            HTable::General(h) => Ok(determinant(Self::jt_matrix(h, parts, l))),
            HTable::Integral { h, den } => {
                let m = Self::jt_matrix(h, parts, l);
                let v = if l <= 8 { subset_expansion(&m) } else { integral_elimination(m) };
                Ok(v.over(&Pow::pow(den, lambda.size())).into())
            }
        }
    }
}

fn integral_elimination(m: Vec<Vec<GaussInt>>) -> GaussInt {
    let one = BigInt::one();
    let lift = |g: &GaussInt| -> Scalar { g.clone().over(&one).into() };
    let v = elimination(m.iter().map(|row| row.iter().map(lift).collect()).collect());
    GaussInt::scaled(v.rational_part(), &one)
}

fn jt_degree(lambda: &Partition) -> usize {
    lambda.parts().first().copied().unwrap_or(0) as usize + lambda.length()
}

/// `s_λ(t)` by the Jacobi–Trudi determinant; handles repeated parameters.
pub fn schur_jacobi_trudi(lambda: &Partition, t: &[Scalar]) -> Result<Scalar> {
    if lambda.length() > t.len() {
        return Err(Error::LengthMismatch { expected: t.len(), found: lambda.length() });
    }
    SchurEvaluator::new(t, jt_degree(lambda)).schur(lambda)
}

/// `s_λ(t) = det(t_i^{λ_j + n − j}) / det(t_i^{n − j})`; parameters must be distinct.
pub fn schur_bialternant(lambda: &Partition, t: &[Scalar]) -> Result<Scalar> {
    let n = t.len();
    if lambda.length() > n {
        return Err(Error::LengthMismatch { expected: n, found: lambda.length() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if t[i] == t[j] {
                return Err(Error::RepeatedParameters);
            }
        }
    }
    let parts = lambda.padded(n);
    let alternant = |shift: &dyn Fn(usize) -> i64| -> Result<Scalar> {
        let mut m = Vec::with_capacity(n);
        for x in t {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(x.pow(shift(j))?);
            }
            m.push(row);
        }
        Ok(determinant(m))
    };
    let num = alternant(&|j| i64::from(parts[j]) + (n - 1 - j) as i64)?;
    let vandermonde = alternant(&|j| (n - 1 - j) as i64)?;
    num.try_div(&vandermonde)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    /// `Σ s_λ(t) s_λ(u) X^{|λ|} = ∏ (1 − t_i u_j X)^{-1}`
    Cauchy,
    /// `Σ s_λ(t) X^{|λ|} = ∏ (1 − t_i X)^{-1} ∏_{i<j} (1 − t_i t_j X²)^{-1}`
    Littlewood,
    /// `Σ s_{2λ}(t) X^{|λ|} = ∏ (1 − t_i² X)^{-1} ∏_{i<j} (1 − t_i t_j X)^{-1}`
    LittlewoodEven,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 3] = [IdentityKind::Cauchy, IdentityKind::Littlewood, IdentityKind::LittlewoodEven];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Cauchy => "cauchy",
            IdentityKind::Littlewood => "littlewood",
            IdentityKind::LittlewoodEven => "littlewood_even",
        }
    }
}

fn pairs(t: &[Scalar]) -> impl Iterator<Item = Scalar> + '_ {
    (0..t.len()).flat_map(move |i| (i + 1..t.len()).map(move |j| &t[i] * &t[j]))
}

/// Product side of each identity as an Euler product in `X`.
pub fn identity_closed_form(kind: IdentityKind, t: &[Scalar], u: &[Scalar]) -> EulerProduct {
    match kind {
        IdentityKind::Cauchy => EulerProduct::new(t.iter().flat_map(|x| u.iter().map(move |y| (x * y, 1)))),
        IdentityKind::Littlewood => {
            EulerProduct::new(t.iter().map(|x| (x.clone(), 1)).chain(pairs(t).map(|p| (p, 2))))
        }
        IdentityKind::LittlewoodEven => {
            EulerProduct::new(t.iter().map(|x| (x * x, 1)).chain(pairs(t).map(|p| (p, 1))))
        }
    }
}

/// Sum side of each identity truncated at `X^bound`, by Schur enumeration.
pub fn identity_schur_sum(kind: IdentityKind, t: &[Scalar], u: &[Scalar], bound: usize) -> Result<SeriesTruncation> {
    let max_parts = match kind {
        IdentityKind::Cauchy => t.len().min(u.len()),
        _ => t.len(),
    };
    let scale = if kind == IdentityKind::LittlewoodEven { 2 } else { 1 };
    let table_degree = scale * bound + max_parts;
    let st = SchurEvaluator::new(t, table_degree);
    let su = (kind == IdentityKind::Cauchy).then(|| SchurEvaluator::new(u, table_degree));
    let mut out = SeriesTruncation::zero(bound);
    for lambda in Partition::up_to(bound as u32, max_parts) {
        let term = match kind {
            IdentityKind::Cauchy => {
                st.schur(&lambda)? * su.as_ref().expect("cauchy has u").schur(&lambda)?
            }
            IdentityKind::Littlewood => st.schur(&lambda)?,
            IdentityKind::LittlewoodEven => st.schur(&lambda.doubled())?,
        };
        out.add_to(lambda.size() as usize, &term);
    }
    Ok(out)
}

/// Compares the Schur-sum side with the expanded product side up to `X^bound`.
pub fn identity_check(kind: IdentityKind, t: &[Scalar], u: Option<&[Scalar]>, bound: usize) -> Result<VerifyReport> {
    let u = match (kind, u) {
        (IdentityKind::Cauchy, Some(u)) => u,
        (IdentityKind::Cauchy, None) => {
            return Err(Error::InvalidRep("the Cauchy identity needs a second parameter list".into()))
        }
        (_, None) => &[][..],
        (_, Some(_)) => {
            return Err(Error::InvalidRep(format!("the {} identity takes one parameter list", kind.name())))
        }
    };
    if t.iter().chain(u).any(Scalar::is_zero) {
        return Err(Error::InvalidRep("identity parameters must be nonzero".into()));
    }
    let lhs = identity_schur_sum(kind, t, u, bound)?;
    let rhs = series_expand(&identity_closed_form(kind, t, u), bound)?;
    let mismatch = lhs
        .first_mismatch(&rhs)
        .map(|(k, l, r)| Mismatch { degree: k as i64, lhs: l, rhs: r });
    Ok(VerifyReport::new(format!("identity_{}", kind.name()), None, "none", t.len()).with_mismatch(mismatch))
}
