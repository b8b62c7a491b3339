//! Semistandard Young tableaux: validation, content, enumeration and Kostka
//! numbers.
//!
//! Tableaux of a fixed shape are listed in canonical order: lexicographically
//! decreasing in their row-reading word (rows concatenated top to bottom).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Composition, Partition};

/// True iff `rows` is a semistandard filling of a Young diagram with
/// positive entries: row lengths weakly decrease, rows weakly increase and
/// columns strictly increase.
pub fn is_semistandard(rows: &[Vec<usize>]) -> bool {
    if rows.iter().any(|r| r.is_empty()) {
        return false;
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return false;
    }
    if rows.iter().flatten().any(|&e| e == 0) {
        return false;
    }
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
        return false;
    }
    rows.windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below))
}

/// A semistandard Young tableau. The rows always satisfy
/// [`is_semistandard`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawTableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.rows)
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if is_semistandard(&rows) {
            Ok(Tableau { rows })
        } else {
            Err(Error::InvalidTableau(rows))
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(is_semistandard(&rows), "not semistandard: {rows:?}");
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        let row = self.rows.get(cell.row.checked_sub(1)?)?;
        row.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn max_entry(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|r| r.last())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Entries read row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Occurrence counts of the letters `1..=h`.
    pub fn content(&self, h: usize) -> Result<Composition> {
        let mut counts = vec![0; h];
        for &e in self.rows.iter().flatten() {
            if e > h {
                return Err(Error::EntryOutOfAlphabet { entry: e, h });
            }
            counts[e - 1] += 1;
        }
        Ok(Composition::new(counts))
    }

    /// Lines of the ASCII rendering, one per row.
    pub fn ascii_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect()
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        f.write_str(&self.ascii_lines().join("\n"))
    }
}

/// Sorts tableaux into canonical order.
pub fn sort_canonical(tableaux: &mut [Tableau]) {
    tableaux.sort_by_cached_key(|t| std::cmp::Reverse(t.reading_word()));
}

/// Cell-by-cell backtracking filler in row-reading order. Letters are tried
/// from largest to smallest so complete fillings come out in canonical order.
struct Filler<'a> {
    cells: Vec<(usize, usize)>,
    shape: &'a [usize],
    h: usize,
    remaining: Option<Vec<usize>>,
    grid: Vec<Vec<usize>>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a Partition, h: usize, content: Option<&Composition>) -> Self {
        let shape = shape.parts();
        let cells = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        Filler {
            cells,
            shape,
            h,
            remaining: content.map(|c| c.parts().to_vec()),
            grid: shape.iter().map(|&len| vec![0; len]).collect(),
        }
    }

    // Letters <= k can only occupy rows 1..=k, so the free cells there must
    // hold every remaining copy of them.
    fn feasible(&self, next: usize) -> bool {
        let Some(remaining) = &self.remaining else {
            return true;
        };
        let (row, col) = match self.cells.get(next) {
            Some(&rc) => rc,
            None => return true,
        };
        let mut needed = 0;
        let mut free = 0;
        for k in 1..=self.h {
            needed += remaining[k - 1];
            if k - 1 == row {
                free += self.shape[row] - col;
            } else if k - 1 > row && k - 1 < self.shape.len() {
                free += self.shape[k - 1];
            }
            if needed > free {
                return false;
            }
        }
        true
    }

    fn run<F>(&mut self, pos: usize, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[Vec<usize>]) -> Result<()>,
    {
        let Some(&(r, c)) = self.cells.get(pos) else {
            return visit(&self.grid);
        };
        let left = if c > 0 { self.grid[r][c - 1] } else { 1 };
        let above = if r > 0 { self.grid[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        for v in (lo..=self.h).rev() {
            if let Some(rem) = &mut self.remaining {
                if rem[v - 1] == 0 {
                    continue;
                }
                rem[v - 1] -= 1;
            }
            self.grid[r][c] = v;
            if self.feasible(pos + 1) {
                self.run(pos + 1, visit)?;
            }
            if let Some(rem) = &mut self.remaining {
                rem[v - 1] += 1;
            }
        }
        self.grid[r][c] = 0;
        Ok(())
    }
}

/// Every tableau of shape `shape` and content exactly `weight`, in canonical
/// order. Empty when the weights disagree.
pub fn enumerate_ssyt(shape: &Partition, weight: &Composition) -> Vec<Tableau> {
    if shape.weight() != weight.weight() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut filler = Filler::new(shape, weight.len(), Some(weight));
    filler
        .run(0, &mut |grid| {
            out.push(Tableau::from_rows_unchecked(grid.to_vec()));
            Ok(())
        })
        .expect("collecting tableaux cannot fail");
    out
}

/// Every tableau of shape `shape` with entries in `1..=h`, in canonical order.
pub fn enumerate_ssyt_bounded(shape: &Partition, h: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut filler = Filler::new(shape, h, None);
    filler
        .run(0, &mut |grid| {
            out.push(Tableau::from_rows_unchecked(grid.to_vec()));
            Ok(())
        })
        .expect("collecting tableaux cannot fail");
    out
}

fn check_weights(shape: &Partition, weight: &Composition) -> Result<()> {
    if shape.weight() != weight.weight() {
        return Err(Error::WeightMismatch {
            expected: shape.weight(),
            actual: weight.weight(),
        });
    }
    Ok(())
}

/// The Kostka number `K(shape, weight)`, counted by the backtracking filler.
pub fn kostka(shape: &Partition, weight: &Composition) -> Result<u64> {
    check_weights(shape, weight)?;
    let mut count: u64 = 0;
    let mut filler = Filler::new(shape, weight.len(), Some(weight));
    filler.run(0, &mut |_| {
        count = count.checked_add(1).ok_or(Error::CountOverflow)?;
        Ok(())
    })?;
    Ok(count)
}

/// The Kostka number computed by peeling off the largest letter: its boxes
/// form a horizontal strip, so
/// `K(μ, (λ_1..λ_h)) = Σ_ν K(ν, (λ_1..λ_{h-1}))` over `ν ⊆ μ` with `μ/ν` a
/// horizontal strip of size `λ_h`.
pub fn kostka_oracle(shape: &Partition, weight: &Composition) -> Result<u64> {
    check_weights(shape, weight)?;
    strip_count(shape.parts(), weight.parts())
}

fn strip_count(shape: &[usize], weight: &[usize]) -> Result<u64> {
    let Some((&last, rest)) = weight.split_last() else {
        return Ok(u64::from(shape.is_empty()));
    };
    // The largest letter `h` can only sit in rows 1..=h.
    if shape.len() > weight.len() {
        return Ok(0);
    }
    let mut total: u64 = 0;
    let mut inner = shape.to_vec();
    strip_choices(shape, 0, last, &mut inner, &mut |nu| {
        let len = nu.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        let sub = strip_count(&nu[..len], rest)?;
        total = total.checked_add(sub).ok_or(Error::CountOverflow)?;
        Ok(())
    })?;
    Ok(total)
}

// Enumerates ν with μ_{i+1} <= ν_i <= μ_i and |μ| - |ν| = size.
fn strip_choices<F>(
    outer: &[usize],
    row: usize,
    size: usize,
    inner: &mut Vec<usize>,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if row == outer.len() {
        return if size == 0 { visit(inner) } else { Ok(()) };
    }
    let floor = outer.get(row + 1).copied().unwrap_or(0);
    let max_take = (outer[row] - floor).min(size);
    for take in 0..=max_take {
        inner[row] = outer[row] - take;
        strip_choices(outer, row + 1, size - take, inner, visit)?;
    }
    inner[row] = outer[row];
    Ok(())
}
