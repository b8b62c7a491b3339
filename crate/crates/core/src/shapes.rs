//! Partitions, compositions and Young diagram geometry.
//!
//! Compositions keep their explicit length `h`, zeros included, because they
//! index tableau contents. Partitions never store zeros; comparisons between
//! the two treat the shorter sequence as padded with zeros.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based in matrix convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A finite sequence of nonnegative integers whose order and zeros matter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, i.e. the alphabet size of tableaux with this content.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The composition obtained by removing one occurrence of the letter `x`
    /// (1-based).
    pub fn decrement_at(&self, x: usize) -> Result<Composition> {
        if x == 0 || x > self.parts.len() {
            return Err(Error::IndexOutOfRange {
                index: x,
                len: self.parts.len(),
            });
        }
        if self.parts[x - 1] == 0 {
            return Err(Error::ZeroAtIndex { index: x });
        }
        let mut parts = self.parts.clone();
        parts[x - 1] -= 1;
        Ok(Composition { parts })
    }

    /// Letters `x` (1-based) with a positive part.
    pub fn decrementable(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, _)| i + 1)
    }

    /// All partitions `γ` of `weight - 1` with `γ_i <= self_i` for every `i`,
    /// in lexicographically decreasing order.
    ///
    /// Generated directly under the componentwise bound rather than by
    /// filtering all partitions of `weight - 1`.
    pub fn sub_partitions_below(&self) -> Vec<Partition> {
        let weight = self.weight();
        if weight == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.parts.len());
        bounded_partitions(&self.parts, weight - 1, usize::MAX, &mut current, &mut out);
        out
    }

    /// Number of letters `x` whose decrement sorts to `gamma`.
    pub fn multiplicity(&self, gamma: &Partition) -> Result<usize> {
        let expected = self.weight().checked_sub(1).ok_or(Error::WeightMismatch {
            expected: 0,
            actual: gamma.weight(),
        })?;
        if gamma.weight() != expected {
            return Err(Error::WeightMismatch {
                expected,
                actual: gamma.weight(),
            });
        }
        Ok(self
            .decrementable()
            .filter(|&x| {
                self.decrement_at(x)
                    .map(|c| c.sort_to_partition() == *gamma)
                    .unwrap_or(false)
            })
            .count())
    }
}

fn bounded_partitions(
    bound: &[usize],
    remaining: usize,
    cap: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let i = current.len();
    if i >= bound.len() {
        return;
    }
    // Whatever is left must fit in the remaining rows under their bounds.
    let hi = bound[i].min(cap).min(remaining);
    for part in (1..=hi).rev() {
        let room: usize = bound[i + 1..].iter().map(|&b| b.min(part)).sum();
        if part + room < remaining {
            break;
        }
        current.push(part);
        bounded_partitions(bound, remaining - part, part, current, out);
        current.pop();
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based), zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells whose addition leaves a Young diagram, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.parts.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r) < self.row_len(r - 1))
            .map(|r| Cell::new(r, self.row_len(r) + 1))
            .collect()
    }

    /// Cells whose removal leaves a Young diagram, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.parts.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        self.contains_cell(cell)
            && cell.col == self.row_len(cell.row)
            && self.row_len(cell.row + 1) < cell.col
    }

    /// Every partition obtained by adding one box, in lexicographically
    /// decreasing order.
    pub fn covers_above(&self) -> Vec<Partition> {
        self.addable_cells()
            .into_iter()
            .map(|cell| {
                let mut parts = self.parts.clone();
                if cell.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[cell.row - 1] += 1;
                }
                Partition { parts }
            })
            .collect()
    }

    /// The unique box of `self` outside `smaller`, when `self` covers it.
    pub fn extra_cell(&self, smaller: &Partition) -> Option<Cell> {
        if self.weight() != smaller.weight() + 1 || !is_sub_partition(smaller, &self.parts) {
            return None;
        }
        (1..=self.parts.len())
            .find(|&r| self.row_len(r) != smaller.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r)))
    }

    /// All partitions of `n` in lexicographically decreasing order.
    pub fn all(n: usize) -> Partitions {
        Partitions::new(n)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// `g ⪯ l`: `g_i <= l_i` for every `i`, with `g` padded by zeros and not
/// allowed to run past the end of `l`.
pub fn is_sub_partition(g: &Partition, l: &[usize]) -> bool {
    g.parts.len() <= l.len() && g.parts.iter().zip(l).all(|(a, b)| a <= b)
}

/// Iterator over the partitions of `n` in lexicographically decreasing
/// order, starting at `(n)` and ending at `(1, 1, ..., 1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition {
            parts: current.clone(),
        };

        // Successor: strip trailing ones, decrement the last larger part and
        // refill greedily with copies of the new value.
        let mut parts = current;
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}
