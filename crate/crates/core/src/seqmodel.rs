//! Finite truncations of the sequence-space models of `S_∞`.
//!
//! Restricting all indices to `[N]` turns the infinite-dimensional boundedness
//! questions into exact computations:
//!
//! * weighted `ℓ¹` with geometric weights `μ_i = r^i`: the operator norm of a
//!   non-negative matrix is its largest weighted column sum
//!   `max_i Σ_j A_i^j μ_j / μ_i`. It stays constant in `N` exactly for the
//!   uniform block permutations.
//! * `ℓ^∞(ℕ^k)` with the matrix norm `max_j Σ_i |A_i^j|`: bounded exactly for
//!   bottom-propagating diagrams.
//! * finitely supported sequences: every column has finite support exactly for
//!   top-propagating diagrams.
//!
//! The invariant vectors `m_π` span the `S_n`-fixed tensors; diagrams act on
//! them and the result is expanded back in the `m`-basis.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{enumerate_diagrams, Diagram, DiagramFilter};
use crate::error::{Error, Result};
use crate::linalg::dense_rank;
use crate::poly::rational_to_string;
use crate::rep::{
    act, count_bottoms_for_top, count_tops_for_bottom, matrix, tops_for_bottom, TupleSpace,
};
use crate::setpart::{count_partitions, enumerate_partitions, SetPartition};

/// Geometric weights `μ_i = r^i`, `0 < r < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricWeights {
    ratio: BigRational,
}

impl Default for GeometricWeights {
    fn default() -> Self {
        GeometricWeights {
            ratio: BigRational::new(1.into(), 2.into()),
        }
    }
}

impl GeometricWeights {
    pub fn new(ratio: BigRational) -> Result<Self> {
        if !ratio.is_positive() || ratio >= BigRational::one() {
            return Err(Error::InvalidArgument(format!(
                "weight ratio {ratio} must lie strictly between 0 and 1"
            )));
        }
        Ok(GeometricWeights { ratio })
    }

    pub fn ratio(&self) -> &BigRational {
        &self.ratio
    }

    /// `μ_1, …, μ_N` (index 0 holds `μ_1`).
    fn table(&self, n: usize) -> Vec<BigRational> {
        let mut out = Vec::with_capacity(n);
        let mut w = self.ratio.clone();
        for _ in 0..n {
            out.push(w.clone());
            w *= &self.ratio;
        }
        out
    }

    /// `μ_i` for a 1-based index.
    pub fn weight(&self, i: usize) -> BigRational {
        num_traits::pow(self.ratio.clone(), i)
    }

    /// `μ_𝐢 = Π μ_{i_ℓ}`.
    pub fn tuple_weight(&self, tuple: &[usize]) -> BigRational {
        tuple
            .iter()
            .fold(BigRational::one(), |acc, &i| acc * self.weight(i))
    }
}

fn check_truncation(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "truncation must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Exact weighted-`ℓ¹` operator norm of the diagram matrix truncated to `[N]^k`.
pub fn l1_truncated_norm(d: &Diagram, n: usize, w: &GeometricWeights) -> Result<BigRational> {
    check_truncation(n)?;
    let table = w.table(n);
    let weight = |t: &[usize]| {
        t.iter()
            .fold(BigRational::one(), |acc, &i| acc * &table[i - 1])
    };
    let space = TupleSpace::new(n, d.k());
    let mut best = BigRational::zero();
    for bottom in space.iter() {
        let column: BigRational = tops_for_bottom(d, &bottom, n)
            .iter()
            .map(|top| weight(top))
            .sum();
        let ratio = column / weight(&bottom);
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// Truncated `‖·‖_Mat`: the largest number of inputs feeding one output.
pub fn linf_matrix_norm(d: &Diagram, n: usize) -> Result<BigRational> {
    check_truncation(n)?;
    let space = TupleSpace::new(n, d.k());
    let best = space
        .iter()
        .map(|top| count_bottoms_for_top(d, &top, n))
        .max()
        .unwrap_or(0);
    Ok(BigRational::from_integer(BigInt::from(best)))
}

fn check_pair(small: usize, large: usize) -> Result<()> {
    check_truncation(small)?;
    if small >= large {
        return Err(Error::InvalidArgument(format!(
            "truncations must increase, got {small} and {large}"
        )));
    }
    Ok(())
}

/// Default truncations for the boundedness classifiers.
pub const DEFAULT_TRUNCATIONS: (usize, usize) = (4, 8);

/// Bounded on weighted `ℓ¹` iff the truncated norm is the same at both sizes.
pub fn classify_lp_bounded(
    d: &Diagram,
    w: &GeometricWeights,
    small: usize,
    large: usize,
) -> Result<bool> {
    check_pair(small, large)?;
    Ok(l1_truncated_norm(d, small, w)? == l1_truncated_norm(d, large, w)?)
}

/// Bounded on `ℓ^∞(ℕ^k)` iff the truncated matrix norm is the same at both sizes.
pub fn classify_linf_bounded(d: &Diagram, small: usize, large: usize) -> Result<bool> {
    check_pair(small, large)?;
    Ok(linf_matrix_norm(d, small)? == linf_matrix_norm(d, large)?)
}

/// Every input has finitely many outputs: no block isolated to the top row.
pub fn classify_column_finite(d: &Diagram) -> bool {
    d.is_top_propagating()
}

/// Largest number of outputs of a single input over `[N]^k`.
pub fn max_column_count(d: &Diagram, n: usize) -> usize {
    TupleSpace::new(n, d.k())
        .iter()
        .map(|bottom| count_tops_for_bottom(d, &bottom, n))
        .max()
        .unwrap_or(0)
}

/// Counting cross-check of [`classify_column_finite`]: column supports stop
/// growing between `N` and `2N`.
pub fn column_finite_by_counting(d: &Diagram, n: usize) -> bool {
    max_column_count(d, n) == max_column_count(d, 2 * n)
}

/// How the three truncated-norm classifiers line up with the subalgebra
/// predicates over all of `D_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: usize,
    pub r: String,
    pub truncations: (usize, usize),
    pub diagrams: usize,
    /// Diagrams where weighted-`ℓ¹` boundedness disagrees with `is_uniform`.
    pub lp_mismatches: Vec<String>,
    /// Diagrams where `ℓ^∞` boundedness disagrees with `is_bottom_propagating`.
    pub linf_mismatches: Vec<String>,
    /// Diagrams where finite column support, decided by counting, disagrees
    /// with `is_top_propagating`.
    pub column_mismatches: Vec<String>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.lp_mismatches.is_empty()
            && self.linf_mismatches.is_empty()
            && self.column_mismatches.is_empty()
    }
}

/// Runs every classifier on every `k`-diagram.
pub fn verify_classification(
    k: usize,
    w: &GeometricWeights,
    small: usize,
    large: usize,
) -> Result<ClassificationReport> {
    check_pair(small, large)?;
    let mut report = ClassificationReport {
        k,
        r: rational_to_string(w.ratio()),
        truncations: (small, large),
        diagrams: 0,
        lp_mismatches: Vec::new(),
        linf_mismatches: Vec::new(),
        column_mismatches: Vec::new(),
    };
    for d in enumerate_diagrams(k, DiagramFilter::All) {
        report.diagrams += 1;
        if classify_lp_bounded(&d, w, small, large)? != d.is_uniform() {
            report.lp_mismatches.push(d.to_string());
        }
        if classify_linf_bounded(&d, small, large)? != d.is_bottom_propagating() {
            report.linf_mismatches.push(d.to_string());
        }
        if column_finite_by_counting(&d, small) != classify_column_finite(&d) {
            report.column_mismatches.push(d.to_string());
        }
    }
    Ok(report)
}

/// Which truncated norm a profile records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormKind {
    WeightedL1(GeometricWeights),
    MatrixLinf,
}

/// Truncated norms of one diagram at increasing truncations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormProfile {
    pub diagram: Diagram,
    pub kind: NormKind,
    pub truncations: Vec<usize>,
    pub norms: Vec<BigRational>,
    /// The norms keep growing with the truncation, so the untruncated
    /// operator is unbounded.
    pub divergent: bool,
}

impl NormProfile {
    /// Computes the profile. A single truncation `N` is compared against `2N`
    /// to decide divergence.
    pub fn compute(d: &Diagram, kind: NormKind, truncations: &[usize]) -> Result<Self> {
        if truncations.is_empty() {
            return Err(Error::InvalidArgument("no truncations given".into()));
        }
        if truncations.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "truncations must be strictly increasing".into(),
            ));
        }
        let norm = |n: usize| match &kind {
            NormKind::WeightedL1(w) => l1_truncated_norm(d, n, w),
            NormKind::MatrixLinf => linf_matrix_norm(d, n),
        };
        let norms = truncations
            .iter()
            .map(|&n| norm(n))
            .collect::<Result<Vec<_>>>()?;
        let divergent = if norms.len() == 1 {
            norm(2 * truncations[0])? != norms[0]
        } else {
            norms.first() != norms.last()
        };
        Ok(NormProfile {
            diagram: d.clone(),
            kind,
            truncations: truncations.to_vec(),
            norms,
            divergent,
        })
    }

    pub fn to_record(&self) -> NormProfileRecord {
        NormProfileRecord {
            diagram: self.diagram.to_string(),
            r: match &self.kind {
                NormKind::WeightedL1(w) => Some(rational_to_string(w.ratio())),
                NormKind::MatrixLinf => None,
            },
            truncations: self.truncations.clone(),
            norms: self.norms.iter().map(rational_to_string).collect(),
            divergent: self.divergent,
        }
    }
}

/// Serialized form of a [`NormProfile`]; `r` is absent for the `ℓ^∞` norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormProfileRecord {
    pub diagram: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<String>,
    pub truncations: Vec<usize>,
    pub norms: Vec<String>,
    pub divergent: bool,
}

/// The 0/1 vector `m_π = Σ π_𝐢 v_𝐢` over `[n]^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialInvariant {
    pi: SetPartition,
    n: usize,
    support: Vec<bool>,
}

impl MonomialInvariant {
    pub fn pi(&self) -> &SetPartition {
        &self.pi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> TupleSpace {
        TupleSpace::new(self.n, self.pi.ground_size())
    }

    /// Indicator by tuple rank.
    pub fn support(&self) -> &[bool] {
        &self.support
    }

    pub fn nnz(&self) -> usize {
        self.support.iter().filter(|&&b| b).count()
    }

    pub fn to_vector(&self) -> Vec<BigRational> {
        self.support
            .iter()
            .map(|&b| {
                if b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect()
    }
}

/// Realizes `m_π` over `[n]^k`: tuples constant on every block of `π`.
pub fn monomial_vector(pi: &SetPartition, n: usize) -> Result<MonomialInvariant> {
    check_truncation(n)?;
    let space = TupleSpace::new(n, pi.ground_size());
    let rgs = pi.rgs();
    let support = space
        .iter()
        .map(|tuple| {
            let mut value: Vec<Option<usize>> = vec![None; pi.num_blocks()];
            tuple.iter().zip(rgs).all(|(&x, &b)| match value[b] {
                Some(y) => y == x,
                None => {
                    value[b] = Some(x);
                    true
                }
            })
        })
        .collect();
    Ok(MonomialInvariant {
        pi: pi.clone(),
        n,
        support,
    })
}

/// Dimension of the `S_n`-invariants in `(ℚ^n)^{⊗k}`: partitions of `[k]`
/// into at most `n` blocks.
pub fn invariant_dim(n: usize, k: usize) -> usize {
    use num_traits::ToPrimitive;
    count_partitions(k, Some(n))
        .to_usize()
        .expect("invariant dimension fits in usize")
}

/// Rank of `{m_π : π a partition of [k]}` realized over `[n]^k`.
pub fn monomial_rank(n: usize, k: usize) -> Result<usize> {
    let rows = enumerate_partitions(k, None)?
        .map(|pi| monomial_vector(&pi, n).map(|m| m.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    Ok(dense_rank(&rows))
}

/// One term `coeff · m_τ` of an expansion in the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTerm {
    pub tau: SetPartition,
    pub coeff: BigRational,
}

/// Serialized form `{tau, coeff}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTermRecord {
    pub tau: String,
    pub coeff: String,
}

impl InvariantTerm {
    pub fn to_record(&self) -> InvariantTermRecord {
        InvariantTermRecord {
            tau: self.tau.to_string(),
            coeff: rational_to_string(&self.coeff),
        }
    }
}

/// Applies `d` to `m_π` over `[n]^k` and expands the result in the `m`-basis.
///
/// The value of an invariant vector on a tuple depends only on the tuple's
/// orbit type `τ`, and `m_π` is 1 exactly on the types coarser than `π`, so
/// the coefficients follow from a unitriangular solve along refinement.
pub fn act_on_invariants(d: &Diagram, pi: &SetPartition, n: usize) -> Result<Vec<InvariantTerm>> {
    let k = d.k();
    if pi.ground_size() != k {
        return Err(Error::SizeMismatch {
            expected: k,
            found: pi.ground_size(),
        });
    }
    if n < k {
        return Err(Error::InvalidArgument(format!(
            "need n >= k for a full monomial basis, got n = {n}, k = {k}"
        )));
    }
    let image = act(&matrix(d, n), &monomial_vector(pi, n)?.to_vector())?;
    let space = TupleSpace::new(n, k);
    let mut by_type: HashMap<SetPartition, BigRational> = HashMap::new();
    for (r, value) in image.into_iter().enumerate() {
        let tau = SetPartition::from_labels(&space.unrank(r));
        match by_type.get(&tau) {
            Some(existing) if *existing != value => {
                return Err(Error::Internal(format!(
                    "image of m_{pi} is not constant on orbit type {tau}"
                )))
            }
            Some(_) => {}
            None => {
                by_type.insert(tau, value);
            }
        }
    }
    let mut types: Vec<SetPartition> = enumerate_partitions(k, None)?.collect();
    // finest first: a strict refinement always has more blocks
    types.sort_by_key(|t| std::cmp::Reverse(t.num_blocks()));
    let mut coeffs: Vec<(SetPartition, BigRational)> = Vec::with_capacity(types.len());
    for tau in types {
        let mut c = by_type
            .get(&tau)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("orbit type {tau} has no representative")))?;
        for (finer, cf) in &coeffs {
            if finer != &tau && finer.refines(&tau)? {
                c -= cf;
            }
        }
        coeffs.push((tau, c));
    }
    let mut terms: Vec<InvariantTerm> = coeffs
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(tau, coeff)| InvariantTerm { tau, coeff })
        .collect();
    terms.sort_by(|a, b| a.tau.cmp(&b.tau));
    Ok(terms)
}
