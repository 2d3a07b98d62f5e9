//! Matrices of diagrams and permutations acting on `V^{⊗k}`, `V = ℚ^n`.
//!
//! Basis tuples `(i_1, …, i_k) ∈ [n]^k` are ranked lexicographically with the
//! leftmost entry most significant. A diagram matrix has rows indexed by the
//! top row (outputs) and columns by the bottom row (inputs): the entry at
//! `(j, i)` is 1 iff the assignment `j` on `1..k`, `i` on `1'..k'` is constant
//! on every block.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{AlgebraElement, Diagram};
use crate::error::{Error, Result};
use crate::poly::{parse_rational, rational_to_string};
use crate::setpart::Tuple;

/// The index set `[n]^k` with lexicographic ranking. Entries are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    pub n: usize,
    pub k: usize,
}

impl TupleSpace {
    pub fn new(n: usize, k: usize) -> Self {
        TupleSpace { n, k }
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    pub fn rank(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &v| acc * self.n + (v - 1))
    }

    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for slot in out.iter_mut().rev() {
            *slot = r % self.n + 1;
            r /= self.n;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.dim()).map(move |r| self.unrank(r))
    }
}

/// All assignments of one row of `d` compatible with fixed values on the other
/// row. `fixed_offset` selects the fixed row (0 = top, k = bottom).
fn complete_row(d: &Diagram, fixed_offset: usize, fixed: &[usize], n: usize) -> Vec<Vec<usize>> {
    let k = d.k();
    let rgs = d.partition().rgs();
    let free_offset = k - fixed_offset;
    let mut value: Vec<Option<usize>> = vec![None; d.partition().num_blocks()];
    for (t, &x) in fixed.iter().enumerate() {
        let b = rgs[fixed_offset + t];
        match value[b] {
            Some(y) if y != x => return Vec::new(),
            _ => value[b] = Some(x),
        }
    }
    let mut free_blocks: Vec<usize> = Vec::new();
    for t in 0..k {
        let b = rgs[free_offset + t];
        if value[b].is_none() && !free_blocks.contains(&b) {
            free_blocks.push(b);
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![1usize; free_blocks.len()];
    loop {
        for (slot, &b) in free_blocks.iter().enumerate() {
            value[b] = Some(choice[slot]);
        }
        out.push(
            (0..k)
                .map(|t| value[rgs[free_offset + t]].expect("assigned"))
                .collect(),
        );
        // odometer
        let mut pos = choice.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if choice[pos] < n {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 1;
        }
    }
}

/// Number of completions counted without materializing them:
/// `n^(free blocks)` when the fixed row is consistent, else 0.
fn count_row(d: &Diagram, fixed_offset: usize, fixed: &[usize], n: usize) -> usize {
    let k = d.k();
    let rgs = d.partition().rgs();
    let mut value: Vec<Option<usize>> = vec![None; d.partition().num_blocks()];
    for (t, &x) in fixed.iter().enumerate() {
        let b = rgs[fixed_offset + t];
        match value[b] {
            Some(y) if y != x => return 0,
            _ => value[b] = Some(x),
        }
    }
    let free_offset = k - fixed_offset;
    let mut free = 0u32;
    for t in 0..k {
        let b = rgs[free_offset + t];
        if value[b].is_none() {
            value[b] = Some(0);
            free += 1;
        }
    }
    n.pow(free)
}

/// Number of top tuples compatible with the bottom tuple `bottom`.
pub fn count_tops_for_bottom(d: &Diagram, bottom: &[usize], n: usize) -> usize {
    count_row(d, d.k(), bottom, n)
}

/// Number of bottom tuples compatible with the top tuple `top`.
pub fn count_bottoms_for_top(d: &Diagram, top: &[usize], n: usize) -> usize {
    count_row(d, 0, top, n)
}

/// Top tuples `j` with `d_i^j = 1` for the bottom tuple `i`.
pub fn tops_for_bottom(d: &Diagram, bottom: &[usize], n: usize) -> Vec<Vec<usize>> {
    complete_row(d, d.k(), bottom, n)
}

/// Bottom tuples `i` with `d_i^j = 1` for the top tuple `j`.
pub fn bottoms_for_top(d: &Diagram, top: &[usize], n: usize) -> Vec<Vec<usize>> {
    complete_row(d, 0, top, n)
}

/// The matrix entry for top tuple `top` and bottom tuple `bottom`.
pub fn entry(d: &Diagram, top: &Tuple, bottom: &Tuple) -> Result<u8> {
    let k = d.k();
    for t in [top, bottom] {
        if t.len() != k {
            return Err(Error::SizeMismatch {
                expected: k,
                found: t.len(),
            });
        }
    }
    let values: Vec<usize> = top
        .entries()
        .iter()
        .chain(bottom.entries())
        .copied()
        .collect();
    let constant = d
        .blocks()
        .iter()
        .all(|block| block.iter().all(|&v| values[v] == values[block[0]]));
    Ok(u8::from(constant))
}

/// Exact sparse square matrix in sorted coordinate form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    dim: usize,
    entries: Vec<(usize, usize, BigRational)>,
}

impl SparseMat {
    /// Sorts, sums duplicates and drops zeros.
    pub fn new(dim: usize, triples: Vec<(usize, usize, BigRational)>) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (r, c, v) in triples {
            if r >= dim || c >= dim {
                return Err(Error::InvalidArgument(format!(
                    "coordinate ({r}, {c}) outside dimension {dim}"
                )));
            }
            *acc.entry((r, c)).or_insert_with(BigRational::zero) += v;
        }
        Ok(Self::from_sorted_map(dim, acc))
    }

    fn from_sorted_map(dim: usize, acc: BTreeMap<(usize, usize), BigRational>) -> Self {
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        SparseMat { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        SparseMat {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMat {
            dim,
            entries: (0..dim).map(|i| (i, i, BigRational::one())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, usize, BigRational)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> BigRational {
        match self
            .entries
            .binary_search_by(|(r, c, _)| (*r, *c).cmp(&(row, col)))
        {
            Ok(i) => self.entries[i].2.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// `row_start[r]..row_start[r+1]` indexes the entries of row `r`.
    fn row_starts(&self) -> Vec<usize> {
        let mut starts = vec![0; self.dim + 1];
        for &(r, _, _) in &self.entries {
            starts[r + 1] += 1;
        }
        for r in 0..self.dim {
            starts[r + 1] += starts[r];
        }
        starts
    }

    fn check_dim(&self, other: &SparseMat) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat> {
        self.check_dim(other)?;
        let starts = other.row_starts();
        let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (r, t, a) in &self.entries {
            for (_, c, b) in &other.entries[starts[*t]..starts[*t + 1]] {
                *acc.entry((*r, *c)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        Ok(Self::from_sorted_map(self.dim, acc))
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat> {
        self.check_dim(other)?;
        let triples = self.entries.iter().chain(&other.entries).cloned().collect();
        Self::new(self.dim, triples)
    }

    pub fn scale(&self, c: &BigRational) -> SparseMat {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseMat {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(r, col, v)| (*r, *col, v * c))
                .collect(),
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.clone()))
            .collect();
        entries.sort_by_key(|e| (e.0, e.1));
        SparseMat {
            dim: self.dim,
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.dim]; self.dim];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn to_record(&self) -> SparseMatRecord {
        SparseMatRecord {
            dim: self.dim,
            triples: self
                .entries
                .iter()
                .map(|(r, c, v)| (*r, *c, rational_to_string(v)))
                .collect(),
        }
    }

    pub fn from_record(record: &SparseMatRecord) -> Result<Self> {
        let triples = record
            .triples
            .iter()
            .map(|(r, c, v)| Ok((*r, *c, parse_rational(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(record.dim, triples)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("record serializes")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let record: SparseMatRecord =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_record(&record)
    }
}

impl fmt::Display for SparseMat {
    /// Exact-rational grid, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense = self.to_dense();
        let cells: Vec<Vec<String>> = dense
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serialized form `{dim, triples: [[row, col, "p/q"], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatRecord {
    pub dim: usize,
    pub triples: Vec<(usize, usize, String)>,
}

/// `n^k × n^k` 0/1 matrix of a diagram.
pub fn matrix(d: &Diagram, n: usize) -> SparseMat {
    let space = TupleSpace::new(n, d.k());
    let mut entries = Vec::new();
    for col in 0..space.dim() {
        let bottom = space.unrank(col);
        for top in tops_for_bottom(d, &bottom, n) {
            entries.push((space.rank(&top), col, BigRational::one()));
        }
    }
    entries.sort_by_key(|e| (e.0, e.1));
    SparseMat {
        dim: space.dim(),
        entries,
    }
}

/// A permutation of `[n]`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermWord {
    images: Vec<usize>,
}

impl PermWord {
    /// From 1-based images `σ(1), …, σ(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(PermWord { images: zero_based })
    }

    pub fn identity(n: usize) -> Self {
        PermWord {
            images: (0..n).collect(),
        }
    }

    /// The transposition of the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidArgument(format!(
                "transposition ({a} {b}) outside 1..={n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(PermWord { images })
    }

    /// The cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        PermWord {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermWord) -> PermWord {
        PermWord {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> PermWord {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        PermWord { images }
    }

    /// Every element of `S_n` in lexicographic order of image words.
    pub fn all(n: usize) -> impl Iterator<Item = PermWord> {
        let mut next = Some((0..n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut word = current.clone();
            if let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) {
                let j = (i..n)
                    .rev()
                    .find(|&j| word[j] > word[i - 1])
                    .expect("exists");
                word.swap(i - 1, j);
                word[i..].reverse();
                next = Some(word);
            }
            Some(PermWord { images: current })
        })
    }
}

/// Diagonal action matrix `v_i ↦ v_{σ(i)}` on `V^{⊗k}`.
pub fn perm_matrix(sigma: &PermWord, k: usize) -> SparseMat {
    let space = TupleSpace::new(sigma.n(), k);
    let mut entries: Vec<_> = (0..space.dim())
        .map(|col| {
            let image: Vec<usize> = space.unrank(col).iter().map(|&i| sigma.apply(i)).collect();
            (space.rank(&image), col, BigRational::one())
        })
        .collect();
    entries.sort_by_key(|e| (e.0, e.1));
    SparseMat {
        dim: space.dim(),
        entries,
    }
}

/// Specializes `x = n` and sums the diagram matrices.
pub fn eval_at(a: &AlgebraElement, n: usize) -> SparseMat {
    let x = BigRational::from_integer(BigInt::from(n));
    let dim = TupleSpace::new(n, a.k()).dim();
    let mut acc = SparseMat::zero(dim);
    for (d, c) in a.terms() {
        let scaled = matrix(d, n).scale(&c.eval(&x));
        acc = acc.add(&scaled).expect("equal dimensions");
    }
    acc
}

/// Exact matrix-vector product.
pub fn act(m: &SparseMat, v: &[BigRational]) -> Result<Vec<BigRational>> {
    if v.len() != m.dim() {
        return Err(Error::SizeMismatch {
            expected: m.dim(),
            found: v.len(),
        });
    }
    let mut out = vec![BigRational::zero(); m.dim()];
    for (r, c, a) in m.entries() {
        if !v[*c].is_zero() {
            out[*r] += a * &v[*c];
        }
    }
    Ok(out)
}
