//! Set partitions of `{0, …, g−1}` in canonical restricted-growth form.
//!
//! A partition is stored as its restricted-growth string (RGS): entry `t` is
//! the label of the block holding vertex `t`, with blocks numbered in order of
//! first appearance. The RGS is unique per partition, so equality, hashing and
//! ordering of [`SetPartition`] are those of the underlying sequence.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Disjoint-set forest with deterministic union-by-index: the root with the
/// smaller index always becomes the representative.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    /// Canonical labels of the first `len` nodes.
    pub(crate) fn labels(&mut self, len: usize) -> Vec<usize> {
        (0..len).map(|x| self.find(x)).collect()
    }
}

/// A set partition of `{0, …, g−1}` in restricted-growth form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

impl SetPartition {
    /// Validates a restricted-growth string.
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        let mut next = 0usize;
        for (t, &label) in rgs.iter().enumerate() {
            if label > next {
                return Err(Error::InvalidRgs(format!(
                    "entry {label} at position {t} exceeds {next}"
                )));
            }
            if label == next {
                next += 1;
            }
        }
        Ok(SetPartition { rgs })
    }

    /// Canonicalizes an arbitrary block labelling: positions with equal labels
    /// share a block.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Self {
        let mut seen: HashMap<&T, usize> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let fresh = seen.len();
                *seen.entry(l).or_insert(fresh)
            })
            .collect();
        SetPartition { rgs }
    }

    /// Builds a partition from explicit blocks of 0-based vertices. Block order
    /// and order within blocks are irrelevant.
    pub fn from_blocks(ground: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner: Vec<Option<usize>> = vec![None; ground];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= ground {
                    return Err(Error::VertexOutOfRange { vertex: v, ground });
                }
                if owner[v].is_some() {
                    return Err(Error::OverlappingBlocks { vertex: v });
                }
                owner[v] = Some(b);
            }
        }
        let labels = owner
            .into_iter()
            .enumerate()
            .map(|(v, o)| o.ok_or(Error::MissingVertex { vertex: v }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_labels(&labels))
    }

    /// Connected components of the graph on `ground` vertices with the given
    /// edges.
    pub fn from_edges(ground: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut uf = UnionFind::new(ground);
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= ground {
                    return Err(Error::VertexOutOfRange { vertex: v, ground });
                }
            }
            uf.union(a, b);
        }
        Ok(Self::from_labels(&uf.labels(ground)))
    }

    /// The partition into singletons.
    pub fn singletons(ground: usize) -> Self {
        SetPartition {
            rgs: (0..ground).collect(),
        }
    }

    /// The partition with a single block (empty when `ground == 0`).
    pub fn whole(ground: usize) -> Self {
        SetPartition {
            rgs: vec![0; ground],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Label of the block containing vertex `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.rgs[v]
    }

    /// Blocks in label order, each sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (v, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        if self.ground_size() != other.ground_size() {
            return Err(Error::SizeMismatch {
                expected: self.ground_size(),
                found: other.ground_size(),
            });
        }
        let mut image: Vec<Option<usize>> = vec![None; self.num_blocks()];
        for (&mine, &theirs) in self.rgs.iter().zip(&other.rgs) {
            match image[mine] {
                None => image[mine] = Some(theirs),
                Some(t) if t != theirs => return Ok(false),
                Some(_) => {}
            }
        }
        Ok(true)
    }
}

impl fmt::Display for SetPartition {
    /// 1-based text form, e.g. `1,3|2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (i, block) in blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v + 1)?;
            }
        }
        Ok(())
    }
}

/// A tuple of positive integers, an index of the basis vector
/// `v_{i_1} ⊗ … ⊗ v_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(Vec<usize>);

impl Tuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &v)| v == 0) {
            return Err(Error::TupleEntry {
                position,
                value,
                bound: usize::MAX,
            });
        }
        Ok(Tuple(entries))
    }

    /// A tuple whose entries must all lie in `1..=n`.
    pub fn bounded(entries: Vec<usize>, n: usize) -> Result<Self> {
        if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &v)| v == 0 || v > n)
        {
            return Err(Error::TupleEntry {
                position,
                value,
                bound: n,
            });
        }
        Ok(Tuple(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The orbit type: positions carrying equal values share a block.
    pub fn orbit_partition(&self) -> SetPartition {
        SetPartition::from_labels(&self.0)
    }
}

/// Orbit type of a tuple under the diagonal symmetric-group action.
pub fn orbit_partition(t: &Tuple) -> SetPartition {
    t.orbit_partition()
}

/// Lexicographic stream of restricted-growth strings of length `g` using at
/// most `max_blocks` labels.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    // prefix_max[t] = max(rgs[0..=t])
    prefix_max: Vec<usize>,
    cap: usize,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let out = self.current.clone()?;
        self.advance();
        Some(SetPartition { rgs: out })
    }
}

impl Partitions {
    fn advance(&mut self) {
        let Some(rgs) = self.current.as_mut() else {
            return;
        };
        let g = rgs.len();
        for t in (1..g).rev() {
            let limit = (self.prefix_max[t - 1] + 1).min(self.cap - 1);
            if rgs[t] < limit {
                rgs[t] += 1;
                self.prefix_max[t] = self.prefix_max[t - 1].max(rgs[t]);
                rgs[t + 1..].fill(0);
                let m = self.prefix_max[t];
                self.prefix_max[t + 1..g].fill(m);
                return;
            }
        }
        self.current = None;
    }
}

/// Streams every partition of `{0, …, g−1}` with at most `max_blocks` blocks,
/// in lexicographic RGS order.
pub fn enumerate_partitions(g: usize, max_blocks: Option<usize>) -> Result<Partitions> {
    if max_blocks == Some(0) {
        return Err(Error::InvalidArgument(
            "max_blocks must be at least 1".into(),
        ));
    }
    let cap = max_blocks.unwrap_or(usize::MAX).min(g.max(1));
    Ok(Partitions {
        current: Some(vec![0; g]),
        prefix_max: vec![0; g],
        cap,
    })
}

/// Stirling numbers of the second kind `S(g, j)` for `j = 0..=g`.
pub fn stirling2_row(g: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=g {
        let mut next = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let mut v = if j < row.len() {
                &row[j] * BigUint::from(j)
            } else {
                BigUint::zero()
            };
            v += &row[j - 1];
            next[j] = v;
        }
        row = next;
    }
    row
}

/// Bell number `B(g)` via the Bell triangle.
pub fn bell_number(g: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..g {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::one));
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Number of partitions of a `g`-set with at most `max_blocks` blocks.
pub fn count_partitions(g: usize, max_blocks: Option<usize>) -> BigUint {
    match max_blocks {
        None => bell_number(g),
        Some(m) => stirling2_row(g).into_iter().take(m + 1).sum(),
    }
}
