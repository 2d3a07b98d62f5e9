//! Exact rank computations over ℚ by fraction-free sparse row reduction.
//!
//! Rows are scaled to primitive integer vectors. Each incoming row is reduced
//! against the stored pivot rows in order of its leading column
//! (`r ← p_c·r − r_c·p`, then divided by its content) until it is either zero
//! or has a leading column with no pivot yet, where it becomes the new pivot.
//! The pivot order is therefore the order rows are inserted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse row: strictly increasing column indices, nonzero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators of a rational row and removes its content.
pub fn integer_row(row: &[(usize, BigRational)]) -> SparseRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: SparseRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut SparseRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let mut g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·row − b·pivot`, dropping cancelled entries.
fn combine(row: &SparseRow, a: &BigInt, pivot: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push((row[i].0, a * &row[i].1));
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained row-echelon form.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces and inserts an integer row; returns true if it increased the
    /// rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        make_primitive(&mut row);
        loop {
            let Some((lead, lead_value)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd(&lead_value);
                    row = combine(&row, &(p / &g), pivot, &(&lead_value / &g));
                    debug_assert!(row.first().is_none_or(|(c, _)| *c > lead));
                    make_primitive(&mut row);
                }
            }
        }
    }

    pub fn insert_rational(&mut self, row: &[(usize, BigRational)]) -> bool {
        self.insert(integer_row(row))
    }
}

/// Rank of a family of sparse rational rows.
pub fn rank_of_rows<'a, I>(rows: I) -> usize
where
    I: IntoIterator<Item = &'a [(usize, BigRational)]>,
{
    let mut e = Echelon::new();
    for row in rows {
        e.insert_rational(row);
    }
    e.rank()
}

/// Rank of a dense rational matrix given row by row.
pub fn dense_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut e = Echelon::new();
    for row in rows {
        let sparse: Vec<(usize, BigRational)> = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        e.insert_rational(&sparse);
    }
    e.rank()
}
