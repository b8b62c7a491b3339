//! Independent oracles and the two worked examples, shared by the
//! integration tests. Nothing here calls the enumeration or insertion code
//! under test.

#![allow(dead_code)]

use kostka_core::{Composition, Partition, Tableau};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec())
}

pub fn t(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Weak compositions of `n` with exactly `len` parts.
pub fn weak_compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions of `n` by recursion on the largest part, sorted decreasing.
pub fn brute_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=n.min(cap) {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(n, n, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.reverse();
    raw.into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect()
}

/// All partitions with at most `max_cells` cells, including the empty one.
pub fn shapes_up_to(max_cells: usize) -> Vec<Partition> {
    (0..=max_cells).flat_map(brute_partitions).collect()
}

fn semistandard(rows: &[Vec<usize>]) -> bool {
    for (i, row) in rows.iter().enumerate() {
        for j in 0..row.len() {
            if j + 1 < row.len() && row[j] > row[j + 1] {
                return false;
            }
            if i > 0 && rows[i - 1][j] >= row[j] {
                return false;
            }
        }
    }
    true
}

/// Every filling of `shape` by `1..=h`, kept when semistandard.
pub fn brute_ssyt(shape: &Partition, h: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = shape.weight();
    let mut out = Vec::new();
    let mut word = vec![1; cells];
    if h == 0 {
        return if cells == 0 { vec![vec![]] } else { vec![] };
    }
    loop {
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in shape.parts() {
            rows.push(word[k..k + len].to_vec());
            k += len;
        }
        if semistandard(&rows) {
            out.push(rows);
        }
        // Odometer increment.
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if word[i] < h {
                word[i] += 1;
                break;
            }
            word[i] = 1;
        }
    }
}

pub fn brute_content(rows: &[Vec<usize>], h: usize) -> Vec<usize> {
    let mut counts = vec![0; h];
    for &e in rows.iter().flatten() {
        counts[e - 1] += 1;
    }
    counts
}

pub fn brute_kostka(shape: &Partition, weight: &[usize]) -> u64 {
    brute_ssyt(shape, weight.len())
        .iter()
        .filter(|rows| brute_content(rows, weight.len()) == weight)
        .count() as u64
}

/// Distinct permutations of `v`.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // Next lexicographic permutation until exhausted.
    loop {
        let n = sorted.len();
        let Some(i) = (1..n).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| sorted[j] > sorted[i - 1]).unwrap();
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

/// The first worked example: ρ = (4,1), λ = (3,2,1).
pub struct ExampleOne;

impl ExampleOne {
    pub fn rho() -> Partition {
        p(&[4, 1])
    }
    pub fn lambda() -> Composition {
        c(&[3, 2, 1])
    }
    pub fn a() -> Tableau {
        t(&[&[1, 1, 1, 2, 2], &[3]])
    }
    pub fn b() -> Tableau {
        t(&[&[1, 1, 1, 2, 3], &[2]])
    }
    pub fn c() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2, 3]])
    }
    pub fn d() -> Tableau {
        t(&[&[1, 1, 1, 3], &[2, 2]])
    }
    pub fn e() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2], &[3]])
    }
    pub fn l() -> Tableau {
        t(&[&[1, 1, 2, 2], &[3]])
    }
    pub fn m() -> Tableau {
        t(&[&[1, 1, 2, 3], &[2]])
    }
    pub fn n() -> Tableau {
        t(&[&[1, 1, 1, 2], &[3]])
    }
    pub fn p() -> Tableau {
        t(&[&[1, 1, 1, 3], &[2]])
    }
    pub fn q() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2]])
    }
}

/// The second worked example: ρ = (4,3), λ = (3,3,2).
pub struct ExampleTwo;

impl ExampleTwo {
    pub fn rho() -> Partition {
        p(&[4, 3])
    }
    pub fn lambda() -> Composition {
        c(&[3, 3, 2])
    }
    pub fn a() -> Tableau {
        t(&[&[1, 1, 1, 3, 3], &[2, 2, 2]])
    }
    pub fn b() -> Tableau {
        t(&[&[1, 1, 1, 2, 3], &[2, 2, 3]])
    }
    pub fn c() -> Tableau {
        t(&[&[1, 1, 1, 2, 2], &[2, 3, 3]])
    }
    pub fn d() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2, 2, 3, 3]])
    }
    pub fn e() -> Tableau {
        t(&[&[1, 1, 1, 3], &[2, 2, 2], &[3]])
    }
    pub fn f() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2, 2, 3], &[3]])
    }
    pub fn l() -> Tableau {
        t(&[&[1, 1, 2, 3], &[2, 2, 3]])
    }
    pub fn m() -> Tableau {
        t(&[&[1, 1, 2, 2], &[2, 3, 3]])
    }
    pub fn n() -> Tableau {
        t(&[&[1, 1, 1, 3], &[2, 2, 3]])
    }
    pub fn p() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2, 3, 3]])
    }
    pub fn q() -> Tableau {
        t(&[&[1, 1, 1, 3], &[2, 2, 2]])
    }
    pub fn r() -> Tableau {
        t(&[&[1, 1, 1, 2], &[2, 2, 3]])
    }
}
