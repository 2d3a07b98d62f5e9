//! Partition diagrams, the partition algebra product, the `U_k`, `TP_k` and
//! `BP_k` subalgebra predicates, and rectangular diagrams of the upwards
//! partition category.
//!
//! A `k`-diagram is a set partition of `2k` vertices: indices `0..k` are the
//! top row `1..k`, indices `k..2k` the bottom row `1'..k'`. Stacking `d1` on
//! `d2` glues the bottom row of `d1` to the top row of `d2`; every component
//! left with only middle vertices is dropped and contributes a factor `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::setpart::{enumerate_partitions, SetPartition, UnionFind};

/// Glues `upper` (on `top + mid` vertices) above `lower` (on `mid + bottom`
/// vertices). Returns the induced partition on `top + bottom` vertices and the
/// number of components made only of middle vertices.
fn stack(upper: &SetPartition, top: usize, lower: &SetPartition) -> (SetPartition, usize) {
    let mid = upper.ground_size() - top;
    debug_assert!(lower.ground_size() >= mid);
    let bottom = lower.ground_size() - mid;
    let total = top + mid + bottom;
    let mut uf = UnionFind::new(total);
    for (part, offset) in [(upper, 0), (lower, top)] {
        let mut first: Vec<Option<usize>> = vec![None; part.num_blocks()];
        for (v, &b) in part.rgs().iter().enumerate() {
            match first[b] {
                Some(f) => uf.union(f, v + offset),
                None => first[b] = Some(v + offset),
            }
        }
    }
    let labels = uf.labels(total);
    let is_middle = |v: usize| v >= top && v < top + mid;
    let mut touches_outer = vec![false; total];
    for (v, &root) in labels.iter().enumerate() {
        if !is_middle(v) {
            touches_outer[root] = true;
        }
    }
    let middle = labels
        .iter()
        .enumerate()
        .filter(|&(v, &root)| is_middle(v) && root == v && !touches_outer[root])
        .count();
    let outer: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|&(v, _)| !is_middle(v))
        .map(|(_, &root)| root)
        .collect();
    (SetPartition::from_labels(&outer), middle)
}

/// A `k`-diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    k: usize,
    partition: SetPartition,
}

impl Diagram {
    pub fn new(k: usize, partition: SetPartition) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("diagrams need k >= 1".into()));
        }
        if partition.ground_size() != 2 * k {
            return Err(Error::SizeMismatch {
                expected: 2 * k,
                found: partition.ground_size(),
            });
        }
        Ok(Diagram { k, partition })
    }

    /// Builds a diagram from 0-based blocks (`k + i` is the bottom vertex `(i+1)'`).
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        Self::new(k, SetPartition::from_blocks(2 * k, blocks)?)
    }

    /// The diagram of the connected components of a graph on the `2k` vertices.
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(k, SetPartition::from_edges(2 * k, edges)?)
    }

    /// The identity `{1,1'}, …, {k,k'}`.
    pub fn identity(k: usize) -> Self {
        let labels: Vec<usize> = (0..2 * k).map(|v| v % k).collect();
        Diagram {
            k,
            partition: SetPartition::from_labels(&labels),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.partition.blocks()
    }

    /// `(top, bottom)` vertex counts of every block.
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        let mut profile = vec![(0, 0); self.partition.num_blocks()];
        for (v, &b) in self.partition.rgs().iter().enumerate() {
            if v < self.k {
                profile[b].0 += 1;
            } else {
                profile[b].1 += 1;
            }
        }
        profile
    }

    /// Number of blocks contained entirely in the top row.
    pub fn top_isolated_blocks(&self) -> usize {
        self.block_profile()
            .iter()
            .filter(|&&(_, b)| b == 0)
            .count()
    }

    /// Number of blocks contained entirely in the bottom row.
    pub fn bottom_isolated_blocks(&self) -> usize {
        self.block_profile()
            .iter()
            .filter(|&&(t, _)| t == 0)
            .count()
    }

    /// Every block has as many top as bottom vertices (`U_k`).
    pub fn is_uniform(&self) -> bool {
        self.block_profile().iter().all(|&(t, b)| t == b)
    }

    /// No block lies entirely in the top row (`TP_k`).
    pub fn is_top_propagating(&self) -> bool {
        self.top_isolated_blocks() == 0
    }

    /// No block lies entirely in the bottom row (`BP_k`).
    pub fn is_bottom_propagating(&self) -> bool {
        self.bottom_isolated_blocks() == 0
    }

    /// Reflects the diagram across the horizontal axis (`i <-> i'`).
    pub fn flip(&self) -> Self {
        let k = self.k;
        let rgs = self.partition.rgs();
        let labels: Vec<usize> = (0..2 * k).map(|v| rgs[(v + k) % (2 * k)]).collect();
        Diagram {
            k,
            partition: SetPartition::from_labels(&labels),
        }
    }

    /// Stacks `self` above `other`, returning the monoid product and the number
    /// of removed middle components.
    pub fn concat(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        let (partition, middle) = stack(&self.partition, self.k, &other.partition);
        Ok((
            Diagram {
                k: self.k,
                partition,
            },
            middle,
        ))
    }
}

impl fmt::Display for Diagram {
    /// Text form `1,2,1'|3|4,2',3',4'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.partition, self.k)
    }
}

pub(crate) fn write_blocks(
    f: &mut fmt::Formatter<'_>,
    partition: &SetPartition,
    top: usize,
) -> fmt::Result {
    for (i, block) in partition.blocks().iter().enumerate() {
        if i > 0 {
            f.write_str("|")?;
        }
        for (j, &v) in block.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            if v < top {
                write!(f, "{}", v + 1)?;
            } else {
                write!(f, "{}'", v - top + 1)?;
            }
        }
    }
    Ok(())
}

/// Restriction applied when enumerating diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiagramFilter {
    #[default]
    All,
    Uniform,
    TopPropagating,
    BottomPropagating,
}

impl DiagramFilter {
    pub fn name(self) -> &'static str {
        match self {
            DiagramFilter::All => "all",
            DiagramFilter::Uniform => "uniform",
            DiagramFilter::TopPropagating => "top",
            DiagramFilter::BottomPropagating => "bottom",
        }
    }

    pub fn matches(self, d: &Diagram) -> bool {
        match self {
            DiagramFilter::All => true,
            DiagramFilter::Uniform => d.is_uniform(),
            DiagramFilter::TopPropagating => d.is_top_propagating(),
            DiagramFilter::BottomPropagating => d.is_bottom_propagating(),
        }
    }
}

impl FromStr for DiagramFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" | "all" => Ok(DiagramFilter::All),
            "uniform" => Ok(DiagramFilter::Uniform),
            "top" => Ok(DiagramFilter::TopPropagating),
            "bottom" => Ok(DiagramFilter::BottomPropagating),
            other => Err(Error::Parse(format!("unknown diagram filter {other:?}"))),
        }
    }
}

/// Every `k`-diagram passing `filter`, in lexicographic RGS order.
pub fn enumerate_diagrams(k: usize, filter: DiagramFilter) -> impl Iterator<Item = Diagram> {
    enumerate_partitions(2 * k, None)
        .expect("unbounded enumeration")
        .filter(move |_| k > 0)
        .map(move |partition| Diagram { k, partition })
        .filter(move |d| filter.matches(d))
}

/// Result of stacking every ordered pair of diagrams from one subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub k: usize,
    pub filter: String,
    pub pairs: usize,
    /// Pairs whose product had middle components.
    pub with_middle: usize,
    /// Pairs whose product left the subalgebra.
    pub escaped: usize,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.with_middle == 0 && self.escaped == 0
    }
}

/// Checks that products inside `filter`'s class stay in it without middle
/// components. Only meaningful for the three proper subalgebras; `All`
/// is reported as is.
pub fn check_closure(k: usize, filter: DiagramFilter) -> Result<ClosureReport> {
    let class: Vec<Diagram> = enumerate_diagrams(k, filter).collect();
    let mut report = ClosureReport {
        k,
        filter: filter.name().to_string(),
        pairs: 0,
        with_middle: 0,
        escaped: 0,
    };
    for a in &class {
        for b in &class {
            let (c, m) = a.concat(b)?;
            report.pairs += 1;
            report.with_middle += usize::from(m > 0);
            report.escaped += usize::from(!filter.matches(&c));
        }
    }
    Ok(report)
}

/// A finite linear combination of `k`-diagrams with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    k: usize,
    terms: BTreeMap<Diagram, Poly>,
}

impl AlgebraElement {
    pub fn zero(k: usize) -> Self {
        AlgebraElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(Diagram::identity(k))
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::term(d, Poly::one())
    }

    pub fn term(d: Diagram, coeff: Poly) -> Self {
        let mut a = Self::zero(d.k);
        a.add_term(d, coeff);
        a
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic RGS order of the diagrams.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> Poly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, d: Diagram, coeff: Poly) {
        assert_eq!(d.k, self.k, "diagram size differs from element size");
        let sum = match self.terms.remove(&d) {
            Some(existing) => &existing + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(d, sum);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.k);
        for (d, a) in &self.terms {
            out.add_term(d.clone(), a * c);
        }
        out
    }

    /// Bilinear extension of `d1 d2 = x^m (d1 * d2)`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        let mut out = Self::zero(self.k);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, m) = d1.concat(d2)?;
                out.add_term(d, (c1 * c2).shift(m));
            }
        }
        Ok(out)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(d, c)| TermRecord {
                coeff: c.to_strings(),
                diagram: d.to_string(),
            })
            .collect()
    }

    pub fn from_records(k: usize, records: &[TermRecord]) -> Result<Self> {
        let mut out = Self::zero(k);
        for r in records {
            let d = crate::text::parse_diagram(&r.diagram, Some(k))?;
            out.add_term(d, Poly::from_strings(&r.coeff)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_records()).expect("records serialize")
    }

    pub fn from_json(k: usize, json: &str) -> Result<Self> {
        let records: Vec<TermRecord> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_records(k, &records)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) [{d}]")?;
        }
        Ok(())
    }
}

/// One serialized term: coefficient list (index = power of `x`) and diagram text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: Vec<String>,
    pub diagram: String,
}

/// A `k,ℓ`-diagram with no block isolated to the top row: a morphism of the
/// upwards partition category. Vertices `0..k` are the top row, `k..k+ℓ` the
/// bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectDiagram {
    top: usize,
    bottom: usize,
    partition: SetPartition,
}

/// Result of composing rectangular diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RectProduct {
    Diagram(RectDiagram),
    /// Shapes do not match; the product is zero.
    Zero,
}

impl RectDiagram {
    pub fn new(top: usize, bottom: usize, partition: SetPartition) -> Result<Self> {
        if partition.ground_size() != top + bottom {
            return Err(Error::SizeMismatch {
                expected: top + bottom,
                found: partition.ground_size(),
            });
        }
        for block in partition.blocks() {
            if block.iter().all(|&v| v < top) {
                let names: Vec<String> = block.iter().map(|v| (v + 1).to_string()).collect();
                return Err(Error::TopIsolatedBlock {
                    block: names.join(","),
                });
            }
        }
        Ok(RectDiagram {
            top,
            bottom,
            partition,
        })
    }

    pub fn identity(k: usize) -> Self {
        let d = Diagram::identity(k);
        RectDiagram {
            top: k,
            bottom: k,
            partition: d.partition,
        }
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Concatenation when `self.bottom == other.top`, zero otherwise.
    pub fn compose(&self, other: &RectDiagram) -> RectProduct {
        if self.bottom != other.top {
            return RectProduct::Zero;
        }
        let (partition, middle) = stack(&self.partition, self.top, &other.partition);
        assert_eq!(
            middle, 0,
            "top-propagating rectangular diagrams produced a middle component"
        );
        RectProduct::Diagram(
            RectDiagram::new(self.top, other.bottom, partition)
                .expect("composition preserves the top-propagating constraint"),
        )
    }

    /// Same as [`compose`](Self::compose) but also reports the middle count,
    /// for property tests.
    pub fn compose_counting(&self, other: &RectDiagram) -> Option<(RectDiagram, usize)> {
        if self.bottom != other.top {
            return None;
        }
        let (partition, middle) = stack(&self.partition, self.top, &other.partition);
        Some((
            RectDiagram {
                top: self.top,
                bottom: other.bottom,
                partition,
            },
            middle,
        ))
    }
}

/// Composition in the upwards partition category.
pub fn rect_compose(d1: &RectDiagram, d2: &RectDiagram) -> RectProduct {
    d1.compose(d2)
}

impl fmt::Display for RectDiagram {
    /// Text form `k,l:blocks`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}:", self.top, self.bottom)?;
        write_blocks(f, &self.partition, self.top)
    }
}
