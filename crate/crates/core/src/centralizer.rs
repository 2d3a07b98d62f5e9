//! Centralizer dimensions, spans and commutants over ℚ.
//!
//! An operator on `V^{⊗k}` commutes with `S_n` iff its matrix is constant on
//! the `S_n`-orbits of index pairs `(j, i)`, and those orbits are the set
//! partitions of `2k` points with at most `n` blocks. This module checks the
//! duality between `S_n` and `P_k(n)` by exact linear algebra: the span of the
//! diagram matrices, the commutant of `S_n`, the commutant of the diagrams and
//! the span of the permutation matrices.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{enumerate_diagrams, DiagramFilter};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::rep::{matrix, perm_matrix, PermWord, SparseMat, TupleSpace};
use crate::setpart::{count_partitions, UnionFind};

/// Size limits for the exact linear algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest matrix dimension `D` for commutant systems (`D²` unknowns).
    pub max_commutant_dim: usize,
    /// Largest matrix dimension `D` for span ranks.
    pub max_span_dim: usize,
    /// Largest `n! · n^{2k}` for spanning all permutation matrices.
    pub max_perm_span_work: usize,
    /// Largest number of tuples for explicit orbit enumeration.
    pub max_orbit_points: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_commutant_dim: 256,
            max_span_dim: 1296,
            max_perm_span_work: 75_000,
            max_orbit_points: 1_000_000,
        }
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// Number of `S_n`-orbits on `[n]^k × [n]^k`: partitions of `2k` points into
/// at most `n` blocks.
pub fn centralizer_dimension(n: usize, k: usize) -> usize {
    count_partitions(2 * k, Some(n))
        .to_usize()
        .expect("centralizer dimension fits in usize")
}

/// Generators `(1 2)` and `(1 2 … n)` of `S_n`.
pub fn symmetric_group_generators(n: usize) -> Vec<PermWord> {
    if n < 2 {
        return vec![PermWord::identity(n)];
    }
    vec![
        PermWord::transposition(n, 1, 2).expect("n >= 2"),
        PermWord::long_cycle(n),
    ]
}

/// Counts `S_n`-orbits on `[n]^len` by applying the generators to every tuple
/// and merging with union-find.
pub fn orbit_count(n: usize, len: usize, budget: &Budget) -> Result<usize> {
    let points = checked_pow(n, len).unwrap_or(usize::MAX);
    if points > budget.max_orbit_points {
        return Err(Error::Budget {
            what: "orbit enumeration points",
            requested: points,
            limit: budget.max_orbit_points,
        });
    }
    let space = TupleSpace::new(n, len);
    let gens = symmetric_group_generators(n);
    let mut uf = UnionFind::new(points);
    for r in 0..points {
        let tuple = space.unrank(r);
        for g in &gens {
            let image: Vec<usize> = tuple.iter().map(|&i| g.apply(i)).collect();
            uf.union(r, space.rank(&image));
        }
    }
    Ok((0..points).filter(|&r| uf.find(r) == r).count())
}

fn common_dim(mats: &[SparseMat]) -> Result<Option<usize>> {
    let Some(first) = mats.first() else {
        return Ok(None);
    };
    for m in mats {
        if m.dim() != first.dim() {
            return Err(Error::SizeMismatch {
                expected: first.dim(),
                found: m.dim(),
            });
        }
    }
    Ok(Some(first.dim()))
}

/// Rank of the matrices viewed as vectors of length `D²`.
pub fn span_rank(mats: &[SparseMat], budget: &Budget) -> Result<usize> {
    let Some(dim) = common_dim(mats)? else {
        return Ok(0);
    };
    if dim > budget.max_span_dim {
        return Err(Error::Budget {
            what: "span matrix dimension",
            requested: dim,
            limit: budget.max_span_dim,
        });
    }
    let mut echelon = Echelon::new();
    for m in mats {
        let row: Vec<(usize, BigRational)> = m
            .entries()
            .iter()
            .map(|(r, c, v)| (r * dim + c, v.clone()))
            .collect();
        echelon.insert_rational(&row);
    }
    Ok(echelon.rank())
}

/// Dimension of `{X : XG = GX for every generator G}`. With no generators the
/// dimension `D` must be supplied through `dim_hint`.
pub fn commutant_dimension_with_dim(
    generators: &[SparseMat],
    dim_hint: usize,
    budget: &Budget,
) -> Result<usize> {
    let dim = common_dim(generators)?.unwrap_or(dim_hint);
    if dim > budget.max_commutant_dim {
        return Err(Error::Budget {
            what: "commutant matrix dimension",
            requested: dim,
            limit: budget.max_commutant_dim,
        });
    }
    let unknowns = dim * dim;
    let var = |r: usize, c: usize| r * dim + c;
    let mut echelon = Echelon::new();
    for g in generators {
        let g_t = g.transpose();
        let by_row = group_by_row(g.entries(), dim);
        let by_col = group_by_row(g_t.entries(), dim);
        // (XG - GX)_{r,c} = Σ_t X_{r,t} G_{t,c} − Σ_t G_{r,t} X_{t,c}
        for (r, g_row) in by_row.iter().enumerate() {
            for (c, g_col) in by_col.iter().enumerate() {
                let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (t, v) in g_col {
                    *acc.entry(var(r, *t)).or_insert_with(BigRational::zero) += v;
                }
                for (t, v) in g_row {
                    *acc.entry(var(*t, c)).or_insert_with(BigRational::zero) -= v;
                }
                let row: Vec<(usize, BigRational)> =
                    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    echelon.insert_rational(&row);
                }
            }
        }
    }
    Ok(unknowns - echelon.rank())
}

fn group_by_row(
    entries: &[(usize, usize, BigRational)],
    dim: usize,
) -> Vec<Vec<(usize, BigRational)>> {
    let mut out = vec![Vec::new(); dim];
    for (r, c, v) in entries {
        out[*r].push((*c, v.clone()));
    }
    out
}

/// Dimension of the commutant of a non-empty generator set.
pub fn commutant_dimension(generators: &[SparseMat], budget: &Budget) -> Result<usize> {
    let dim = common_dim(generators)?
        .ok_or_else(|| Error::InvalidArgument("commutant of an empty generator set".into()))?;
    commutant_dimension_with_dim(generators, dim, budget)
}

/// Rank of all `n!` permutation matrices acting on `V^{⊗k}`.
pub fn perm_span_dim(n: usize, k: usize, budget: &Budget) -> Result<usize> {
    let factorial = (1..=n).try_fold(1usize, |acc, i| acc.checked_mul(i));
    let work = factorial
        .zip(checked_pow(n, 2 * k))
        .and_then(|(f, p)| f.checked_mul(p))
        .unwrap_or(usize::MAX);
    if work > budget.max_perm_span_work {
        return Err(Error::Budget {
            what: "permutation span work n!*n^(2k)",
            requested: work,
            limit: budget.max_perm_span_work,
        });
    }
    let mats: Vec<SparseMat> = PermWord::all(n).map(|s| perm_matrix(&s, k)).collect();
    span_rank(&mats, budget)
}

/// Outcome of checking both halves of the `S_n` / `P_k(n)` duality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    /// Orbit count from Stirling numbers.
    pub centralizer_dim: usize,
    /// Orbit count by explicit enumeration, when within budget.
    pub orbit_enumeration_dim: Option<usize>,
    /// Number of `k`-diagrams, `B(2k)`.
    pub diagram_count: usize,
    pub diagram_span_rank: usize,
    pub commutant_of_perms_dim: usize,
    pub perm_span_dim: usize,
    pub commutant_of_diagrams_dim: usize,
    /// Diagrams span the full centralizer of `S_n`.
    pub verdict_diagrams_generate_centralizer: bool,
    /// Permutations span the full centralizer of the diagrams.
    pub verdict_perms_generate_centralizer: bool,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.verdict_diagrams_generate_centralizer && self.verdict_perms_generate_centralizer
    }
}

/// Runs every computation of the duality check at `(n, k)`.
pub fn verify_schur_weyl(n: usize, k: usize, budget: &Budget) -> Result<VerificationReport> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("need n >= 1 and k >= 1".into()));
    }
    let centralizer_dim = centralizer_dimension(n, k);
    let orbit_enumeration_dim = match orbit_count(n, 2 * k, budget) {
        Ok(c) => Some(c),
        Err(Error::Budget { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(c) = orbit_enumeration_dim {
        if c != centralizer_dim {
            return Err(Error::Internal(format!(
                "orbit enumeration gives {c}, Stirling count gives {centralizer_dim}"
            )));
        }
    }
    let diagram_mats: Vec<SparseMat> = enumerate_diagrams(k, DiagramFilter::All)
        .map(|d| matrix(&d, n))
        .collect();
    let diagram_count = diagram_mats.len();
    let diagram_span_rank = span_rank(&diagram_mats, budget)?;
    let perm_gens: Vec<SparseMat> = symmetric_group_generators(n)
        .iter()
        .map(|s| perm_matrix(s, k))
        .collect();
    let commutant_of_perms_dim = commutant_dimension(&perm_gens, budget)?;
    let perm_span_dim = perm_span_dim(n, k, budget)?;
    let commutant_of_diagrams_dim = commutant_dimension(&diagram_mats, budget)?;
    Ok(VerificationReport {
        n,
        k,
        centralizer_dim,
        orbit_enumeration_dim,
        diagram_count,
        diagram_span_rank,
        commutant_of_perms_dim,
        perm_span_dim,
        commutant_of_diagrams_dim,
        verdict_diagrams_generate_centralizer: diagram_span_rank == centralizer_dim
            && centralizer_dim == commutant_of_perms_dim,
        verdict_perms_generate_centralizer: commutant_of_diagrams_dim == perm_span_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_diagram;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn centralizer_dimension_examples() {
        assert_eq!(centralizer_dimension(4, 2), 15);
        assert_eq!(centralizer_dimension(2, 2), 8);
        assert_eq!(centralizer_dimension(3, 2), 14);
        for k in 1..4 {
            assert_eq!(centralizer_dimension(1, k), 1);
        }
    }

    #[test]
    fn orbit_enumeration_matches() {
        assert_eq!(orbit_count(2, 4, &b()).unwrap(), 8);
        assert_eq!(orbit_count(4, 4, &b()).unwrap(), 15);
        assert_eq!(orbit_count(1, 3, &b()).unwrap(), 1);
        assert!(matches!(
            orbit_count(10, 7, &b()),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn span_rank_examples() {
        let mats = |n| -> Vec<SparseMat> {
            enumerate_diagrams(2, DiagramFilter::All)
                .map(|d| matrix(&d, n))
                .collect()
        };
        assert_eq!(span_rank(&mats(4), &b()).unwrap(), 15);
        assert_eq!(span_rank(&mats(2), &b()).unwrap(), 8);
        assert_eq!(span_rank(&[SparseMat::identity(5)], &b()).unwrap(), 1);
        assert!(span_rank(&[SparseMat::identity(2), SparseMat::identity(3)], &b()).is_err());
    }

    #[test]
    fn commutant_examples() {
        let gens: Vec<SparseMat> = symmetric_group_generators(4)
            .iter()
            .map(|s| perm_matrix(s, 2))
            .collect();
        assert_eq!(commutant_dimension(&gens, &b()).unwrap(), 15);
        assert_eq!(
            commutant_dimension(&[SparseMat::identity(6)], &b()).unwrap(),
            36
        );
        let ij: Vec<SparseMat> = enumerate_diagrams(1, DiagramFilter::All)
            .map(|d| matrix(&d, 3))
            .collect();
        assert_eq!(commutant_dimension(&ij, &b()).unwrap(), 5);
        let tight = Budget {
            max_commutant_dim: 4,
            ..b()
        };
        assert!(matches!(
            commutant_dimension(&gens, &tight),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn commutant_with_rational_generator() {
        let half = BigRational::new(1.into(), 2.into());
        let j = matrix(&parse_diagram("1|1'", None).unwrap(), 3).scale(&half);
        assert_eq!(commutant_dimension(&[j], &b()).unwrap(), 5);
    }

    #[test]
    fn perm_span_examples() {
        assert_eq!(perm_span_dim(3, 1, &b()).unwrap(), 5);
        assert_eq!(perm_span_dim(2, 1, &b()).unwrap(), 2);
        assert_eq!(perm_span_dim(1, 3, &b()).unwrap(), 1);
        assert!(matches!(
            perm_span_dim(6, 2, &b()),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        let r = verify_schur_weyl(4, 2, &b()).unwrap();
        assert_eq!(
            (
                r.centralizer_dim,
                r.diagram_span_rank,
                r.commutant_of_perms_dim
            ),
            (15, 15, 15)
        );
        assert!(r.all_pass());
        let r = verify_schur_weyl(2, 2, &b()).unwrap();
        assert_eq!(
            (
                r.centralizer_dim,
                r.diagram_span_rank,
                r.commutant_of_perms_dim
            ),
            (8, 8, 8)
        );
        assert!(r.verdict_diagrams_generate_centralizer);
        let r = verify_schur_weyl(3, 1, &b()).unwrap();
        assert_eq!((r.commutant_of_diagrams_dim, r.perm_span_dim), (5, 5));
        assert!(r.all_pass());
        assert!(verify_schur_weyl(0, 1, &b()).is_err());
    }
}
