//! Row insertion (bumping), its inverse, and the unrestricted Pieri-level
//! bijection `SSYT_[h](ρ) × [h] → ⋃_{μ ⪰ ρ} SSYT_[h](μ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};
use crate::tableaux::{enumerate_ssyt_bounded, Tableau};

/// Result of `T ← x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionResult {
    pub tableau: Tableau,
    /// The box of the result that is not in the input shape.
    pub new_cell: Cell,
    /// Cells written on the way down, one per visited row.
    pub path: Vec<Cell>,
}

/// Result of reverse insertion from a corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseResult {
    pub tableau: Tableau,
    /// The letter bumped out of the first row.
    pub ejected: usize,
    /// Cells vacated or overwritten on the way up, starting at the corner.
    pub path: Vec<Cell>,
}

/// Row-inserts `x` into `t`.
///
/// In each row, starting with the first, the carried letter replaces the
/// leftmost entry strictly greater than it and the replaced entry is carried
/// into the next row. When no entry of a row exceeds the carried letter it is
/// appended at the end of that row.
pub fn row_insert(t: &Tableau, x: usize) -> Result<InsertionResult> {
    if x == 0 {
        return Err(Error::ZeroLetter);
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut carried = x;
    let mut path = Vec::new();
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[i];
        // Rows are sorted, so the leftmost entry > carried is a partition point.
        let j = row.partition_point(|&e| e <= carried);
        path.push(Cell::new(i + 1, j + 1));
        if j == row.len() {
            row.push(carried);
            let new_cell = Cell::new(i + 1, j + 1);
            debug_assert!(crate::tableaux::is_semistandard(out.rows()));
            return Ok(InsertionResult {
                tableau: out,
                new_cell,
                path,
            });
        }
        carried = std::mem::replace(&mut row[j], carried);
        i += 1;
    }
}

/// Reverse insertion starting at the removable corner `start`.
///
/// The corner entry is removed and carried upwards; in each row above, it
/// replaces the rightmost entry strictly smaller than it, which is carried
/// on. The value leaving the first row is the ejected letter.
pub fn reverse_insert(t: &Tableau, start: Cell) -> Result<ReverseResult> {
    if !t.shape().is_removable(start) {
        return Err(Error::NotRemovableCorner(start));
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let r = start.row - 1;
    let mut carried = rows[r].pop().expect("corner lies in a nonempty row");
    if rows[r].is_empty() {
        rows.pop();
    }
    let mut path = vec![start];
    for i in (0..r).rev() {
        let row = &mut rows[i];
        // The entry directly above the vacated box is smaller, so the
        // rightmost smaller entry always exists.
        let j = row.partition_point(|&e| e < carried) - 1;
        path.push(Cell::new(i + 1, j + 1));
        carried = std::mem::replace(&mut row[j], carried);
    }
    debug_assert!(crate::tableaux::is_semistandard(out.rows()));
    Ok(ReverseResult {
        tableau: out,
        ejected: carried,
        path,
    })
}

/// A `(T, x)` pair of the Pieri-level bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionSource {
    pub tableau: Tableau,
    pub x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriPair {
    pub source: InsertionSource,
    pub image: Tableau,
}

/// Inserts every letter of `[h]` into every tableau of `SSYT_[h](ρ)`.
///
/// Pairs are ordered by source tableau (canonical order), then by `x`.
pub fn pieri_forward(rho: &Partition, h: usize) -> Vec<PieriPair> {
    enumerate_ssyt_bounded(rho, h)
        .into_iter()
        .flat_map(|t| {
            (1..=h).map(move |x| {
                let image = row_insert(&t, x).expect("letters are positive").tableau;
                PieriPair {
                    source: InsertionSource {
                        tableau: t.clone(),
                        x,
                    },
                    image,
                }
            })
        })
        .collect()
}

/// Inverse of [`pieri_forward`] on a single image: reverse insertion at the
/// unique box of `s` outside `rho`.
pub fn pieri_backward(rho: &Partition, s: &Tableau) -> Result<InsertionSource> {
    let cell = s.shape().extra_cell(rho).ok_or_else(|| {
        Error::BijectionBroken(format!("shape {} does not cover {rho}", s.shape()))
    })?;
    let back = reverse_insert(s, cell)?;
    Ok(InsertionSource {
        tableau: back.tableau,
        x: back.ejected,
    })
}
