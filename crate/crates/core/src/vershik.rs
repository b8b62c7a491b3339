//! The content-restricted insertion bijection between
//! `R′ = ⋃_x SSYT(ρ, λ^(x)) × {x}` and `L = ⋃_{μ ⪰ ρ} SSYT(μ, λ)`, the
//! Kostka identity it implies, and the analysis of the naive "remove the
//! extra box" map.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion::{pieri_backward, row_insert, InsertionSource};
use crate::shapes::{Cell, Composition, Partition};
use crate::tableaux::{enumerate_ssyt, kostka, sort_canonical, Tableau};

/// An element `(T, x)` of `R′`: `T` has shape `ρ` and content `λ^(x)`.
pub type RPrimeElement = InsertionSource;

fn check_weights(rho: &Partition, lambda: &Composition) -> Result<()> {
    if lambda.weight() != rho.weight() + 1 {
        return Err(Error::WeightMismatch {
            expected: rho.weight() + 1,
            actual: lambda.weight(),
        });
    }
    Ok(())
}

/// `R′`, ordered by `x` and then canonically within each content.
pub fn build_r_prime(rho: &Partition, lambda: &Composition) -> Result<Vec<RPrimeElement>> {
    check_weights(rho, lambda)?;
    let mut out = Vec::new();
    for x in lambda.decrementable() {
        let content = lambda.decrement_at(x)?;
        out.extend(
            enumerate_ssyt(rho, &content)
                .into_iter()
                .map(|tableau| RPrimeElement { tableau, x }),
        );
    }
    Ok(out)
}

/// `L`, ordered by shape as in [`Partition::covers_above`] and then
/// canonically within each shape.
pub fn build_l(rho: &Partition, lambda: &Composition) -> Result<Vec<Tableau>> {
    check_weights(rho, lambda)?;
    Ok(rho
        .covers_above()
        .iter()
        .flat_map(|mu| enumerate_ssyt(mu, lambda))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionPair {
    pub source: RPrimeElement,
    pub image: Tableau,
    /// Box of `image` outside `ρ`; reverse insertion starts here.
    pub new_cell: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionTable {
    pub lambda: Composition,
    pub rho: Partition,
    pub pairs: Vec<BijectionPair>,
}

impl BijectionTable {
    pub fn image_of(&self, source: &RPrimeElement) -> Option<&Tableau> {
        self.pairs
            .iter()
            .find(|p| &p.source == source)
            .map(|p| &p.image)
    }

    pub fn preimage_of(&self, image: &Tableau) -> Option<&RPrimeElement> {
        self.pairs
            .iter()
            .find(|p| &p.image == image)
            .map(|p| &p.source)
    }
}

/// Pairs every `(T, x)` in `R′` with `T ← x`.
///
/// The table is checked before it is returned: the images must be exactly
/// `L`, and reverse insertion at each image's extra box must give back its
/// source.
pub fn vershik_bijection(rho: &Partition, lambda: &Composition) -> Result<BijectionTable> {
    let sources = build_r_prime(rho, lambda)?;
    let l = build_l(rho, lambda)?;

    let mut pairs = Vec::with_capacity(sources.len());
    for source in sources {
        let inserted = row_insert(&source.tableau, source.x)?;
        pairs.push(BijectionPair {
            source,
            image: inserted.tableau,
            new_cell: inserted.new_cell,
        });
    }

    let images: HashSet<&Tableau> = pairs.iter().map(|p| &p.image).collect();
    let targets: HashSet<&Tableau> = l.iter().collect();
    if images.len() != pairs.len() {
        return Err(Error::BijectionBroken("two sources share an image".into()));
    }
    if images != targets {
        return Err(Error::BijectionBroken(format!(
            "images ({}) differ from L ({})",
            images.len(),
            targets.len()
        )));
    }
    for pair in &pairs {
        let back = pieri_backward(rho, &pair.image)?;
        if back != pair.source {
            return Err(Error::BijectionBroken(format!(
                "reverse insertion of\n{}\ngave x={} instead of x={}",
                pair.image, back.x, pair.source.x
            )));
        }
    }

    Ok(BijectionTable {
        lambda: lambda.clone(),
        rho: rho.clone(),
        pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTerm {
    pub mu: Partition,
    pub kostka: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubTerm {
    pub gamma: Partition,
    pub multiplicity: usize,
    pub kostka: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTerms {
    pub lhs: Vec<CoverTerm>,
    pub rhs: Vec<SubTerm>,
}

/// Both sides of `Σ_{μ ⪰ ρ} K(μ,λ) = Σ_{γ ⪯ λ} c(λ,γ) K(ρ,γ)` for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub lambda: Partition,
    pub rho: Partition,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
    pub terms: IdentityTerms,
}

/// Evaluates the two sides of the identity separately: the left over the
/// shapes covering `rho`, the right over the partitions below `lambda`
/// weighted by their multiplicities.
pub fn verify_identity(rho: &Partition, lambda: &Partition) -> Result<IdentityRecord> {
    let weight = Composition::from(lambda);
    check_weights(rho, &weight)?;

    let lhs_terms = rho
        .covers_above()
        .into_iter()
        .map(|mu| {
            Ok(CoverTerm {
                kostka: kostka(&mu, &weight)?,
                mu,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = lhs_terms
        .iter()
        .try_fold(0u64, |acc, t| acc.checked_add(t.kostka))
        .ok_or(Error::CountOverflow)?;

    let rhs_terms = weight
        .sub_partitions_below()
        .into_iter()
        .map(|gamma| {
            Ok(SubTerm {
                multiplicity: weight.multiplicity(&gamma)?,
                kostka: kostka(rho, &Composition::from(&gamma))?,
                gamma,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = rhs_terms
        .iter()
        .try_fold(0u64, |acc, t| {
            let term = t.kostka.checked_mul(t.multiplicity as u64)?;
            acc.checked_add(term)
        })
        .ok_or(Error::CountOverflow)?;

    Ok(IdentityRecord {
        lambda: lambda.clone(),
        rho: rho.clone(),
        lhs,
        rhs,
        ok: lhs == rhs,
        terms: IdentityTerms {
            lhs: lhs_terms,
            rhs: rhs_terms,
        },
    })
}

/// Every pair `(λ ⊢ n, ρ ⊢ n-1)` with `1 <= n <= max_n`, ordered by `n` and
/// then by `λ` and `ρ` in lexicographically decreasing order.
pub fn identity_pairs(max_n: usize) -> Vec<(Partition, Partition)> {
    (1..=max_n)
        .flat_map(|n| {
            Partition::all(n)
                .flat_map(move |lambda| Partition::all(n - 1).map(move |rho| (lambda.clone(), rho)))
        })
        .collect()
}

/// Runs [`verify_identity`] over [`identity_pairs`]. Pairs are evaluated in
/// parallel (on `jobs` threads when given); the records keep pair order.
pub fn sweep_identity(max_n: usize, jobs: Option<usize>) -> Result<Vec<IdentityRecord>> {
    let pairs = identity_pairs(max_n);
    let run = || {
        pairs
            .par_iter()
            .map(|(lambda, rho)| verify_identity(rho, lambda))
            .collect::<Result<Vec<_>>>()
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// The tableaux of `L` that can lose one box to `image`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    pub image: Tableau,
    pub preimages: Vec<Tableau>,
}

/// A set of tableaux of `L` whose removals reach fewer tableaux of `R` than
/// there are tableaux in the set, so no one-box removal can be a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tableaux: Vec<Tableau>,
    pub images: Vec<Tableau>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalPair {
    pub mu: Tableau,
    pub rho: Tableau,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalReport {
    pub lambda: Composition,
    pub rho: Partition,
    /// `L` in canonical order.
    pub mu_tableaux: Vec<Tableau>,
    /// `R = ⋃_x SSYT(ρ, λ^(x))`, in the order of [`build_r_prime`].
    pub rho_tableaux: Vec<Tableau>,
    /// One fiber per element of `R`, in the same order.
    pub fibers: Vec<Fiber>,
    pub is_bijective: bool,
    /// One removal per tableau of `L`, in `L` order, when a bijection exists.
    pub matching: Option<Vec<RemovalPair>>,
    pub witness: Option<Witness>,
}

impl RemovalReport {
    pub fn mu_index(&self, t: &Tableau) -> Option<usize> {
        self.mu_tableaux.iter().position(|m| m == t)
    }

    pub fn rho_index(&self, t: &Tableau) -> Option<usize> {
        self.rho_tableaux.iter().position(|r| r == t)
    }
}

fn extra_row(rho: &Partition, s: &Tableau) -> Result<usize> {
    s.shape()
        .extra_cell(rho)
        .map(|cell| cell.row)
        .ok_or_else(|| Error::BijectionBroken(format!("shape {} does not cover {rho}", s.shape())))
}

/// Deletes the box of `s` outside `rho`.
pub fn remove_extra_box(rho: &Partition, s: &Tableau) -> Result<Tableau> {
    let row = extra_row(rho, s)?;
    let mut rows = s.rows().to_vec();
    rows[row - 1].pop();
    if rows[row - 1].is_empty() {
        rows.pop();
    }
    Tableau::new(rows)
}

/// Every semistandard tableau of shape `rho` obtained from `s` by deleting
/// one entry of the row holding the box outside `rho` and closing the gap.
/// Includes [`remove_extra_box`]; canonical order.
pub fn one_box_removals(rho: &Partition, s: &Tableau) -> Result<Vec<Tableau>> {
    let row = extra_row(rho, s)? - 1;
    let mut out = Vec::new();
    let entries = &s.rows()[row];
    for j in 0..entries.len() {
        if j > 0 && entries[j] == entries[j - 1] {
            continue;
        }
        let mut rows = s.rows().to_vec();
        rows[row].remove(j);
        if rows[row].is_empty() {
            rows.pop();
        }
        if let Ok(t) = Tableau::new(rows) {
            out.push(t);
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Kuhn's augmenting path step: tries to match `u`, visiting `R` vertices
/// in adjacency order.
fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}

/// Decides whether removing one box can pair `L` with `R` bijectively.
///
/// Each `S ∈ L` may remove to any tableau of [`one_box_removals`]; a
/// bijection exists iff this relation has a perfect matching. Matching is
/// greedy-augmenting in canonical order, so the reported bijection and
/// witness are reproducible. The witness is the set of tableaux reachable by
/// alternating paths from the first unmatched tableau of `L`.
pub fn removal_map_analysis(rho: &Partition, lambda: &Composition) -> Result<RemovalReport> {
    let mu_tableaux = build_l(rho, lambda)?;
    let rho_tableaux: Vec<Tableau> = build_r_prime(rho, lambda)?
        .into_iter()
        .map(|e| e.tableau)
        .collect();
    let index: HashMap<&Tableau, usize> = rho_tableaux
        .iter()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();

    let adj = mu_tableaux
        .iter()
        .map(|s| {
            let mut ks = one_box_removals(rho, s)?
                .iter()
                .map(|t| {
                    index.get(t).copied().ok_or_else(|| {
                        Error::BijectionBroken(format!(
                            "removal produced a tableau outside R:\n{t}"
                        ))
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            ks.sort_unstable();
            Ok(ks)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut fibers: Vec<Fiber> = rho_tableaux
        .iter()
        .map(|t| Fiber {
            image: t.clone(),
            preimages: Vec::new(),
        })
        .collect();
    for (s, ks) in mu_tableaux.iter().zip(&adj) {
        for &k in ks {
            fibers[k].preimages.push(s.clone());
        }
    }

    let mut owner: Vec<Option<usize>> = vec![None; rho_tableaux.len()];
    let mut unmatched = None;
    for u in 0..mu_tableaux.len() {
        let mut seen = vec![false; rho_tableaux.len()];
        if !augment(u, &adj, &mut seen, &mut owner) && unmatched.is_none() {
            unmatched = Some(u);
        }
    }
    let is_bijective = unmatched.is_none() && mu_tableaux.len() == rho_tableaux.len();

    let witness = unmatched.map(|u| {
        let mut in_set = vec![false; mu_tableaux.len()];
        let mut reached = vec![false; rho_tableaux.len()];
        let mut stack = vec![u];
        in_set[u] = true;
        while let Some(w) = stack.pop() {
            for &v in &adj[w] {
                if reached[v] {
                    continue;
                }
                reached[v] = true;
                // Every reached vertex is matched, or `u` would augment.
                if let Some(next) = owner[v] {
                    if !in_set[next] {
                        in_set[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        Witness {
            tableaux: pick(&mu_tableaux, &in_set),
            images: pick(&rho_tableaux, &reached),
        }
    });

    let matching = is_bijective.then(|| {
        let mut partner = vec![0; mu_tableaux.len()];
        for (v, w) in owner.iter().enumerate() {
            if let Some(w) = w {
                partner[*w] = v;
            }
        }
        mu_tableaux
            .iter()
            .zip(partner)
            .map(|(s, v)| RemovalPair {
                mu: s.clone(),
                rho: rho_tableaux[v].clone(),
            })
            .collect()
    });

    Ok(RemovalReport {
        lambda: lambda.clone(),
        rho: rho.clone(),
        mu_tableaux,
        rho_tableaux,
        fibers,
        is_bijective,
        matching,
        witness,
    })
}

fn pick(items: &[Tableau], keep: &[bool]) -> Vec<Tableau> {
    items
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .map(|(t, _)| t.clone())
        .collect()
}

const MU_LETTERS: &[u8] = b"ABCDEFGHIJK";
const RHO_LETTERS: &[u8] = b"LMNPQRSTUVWXYZ";

fn label(alphabet: &[u8], index: usize) -> String {
    let letter = alphabet[index % alphabet.len()] as char;
    match index / alphabet.len() {
        0 => letter.to_string(),
        round => format!("{letter}{round}"),
    }
}

/// Display label for the `index`-th tableau of `L`: `A`, `B`, ..., `K`,
/// then `A1`, `B1`, ...
pub fn mu_label(index: usize) -> String {
    label(MU_LETTERS, index)
}

/// Display label for the `index`-th tableau of `R′`: `L`, `M`, `N`, `P`, ...
/// (`O` is skipped), wrapping like [`mu_label`].
pub fn rho_label(index: usize) -> String {
    label(RHO_LETTERS, index)
}
