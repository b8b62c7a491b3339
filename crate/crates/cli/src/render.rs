//! ASCII layouts. Tableaux print one row per line with space-separated
//! entries; several tableaux go side by side under their labels.

use kostka_core::vershik::{mu_label, rho_label};
use kostka_core::{BijectionTable, IdentityRecord, RemovalReport, Tableau};

const GAP: &str = "    ";
const PER_LINE: usize = 6;

fn block(t: &Tableau) -> Vec<String> {
    if t.is_empty() {
        vec!["∅".into()]
    } else {
        t.ascii_lines()
    }
}

/// Lays out labelled blocks left to right, top-aligned.
fn side_by_side(blocks: &[(String, Vec<String>)]) -> String {
    let widths: Vec<usize> = blocks
        .iter()
        .map(|(head, lines)| {
            lines
                .iter()
                .chain(std::iter::once(head))
                .map(|l| l.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let height = blocks.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let mut out = String::new();
    for line in 0..=height {
        let cells: Vec<String> = blocks
            .iter()
            .zip(&widths)
            .map(|((head, lines), &w)| {
                let text = if line == 0 {
                    head.as_str()
                } else {
                    lines.get(line - 1).map_or("", String::as_str)
                };
                format!("{text:<w$}")
            })
            .collect();
        out.push_str(cells.join(GAP).trim_end());
        out.push('\n');
    }
    out
}

fn gallery(label: fn(usize) -> String, tableaux: &[Tableau]) -> String {
    let blocks: Vec<(String, Vec<String>)> = tableaux
        .iter()
        .enumerate()
        .map(|(i, t)| (label(i), block(t)))
        .collect();
    blocks
        .chunks(PER_LINE)
        .map(side_by_side)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn kostka(count: u64, tableaux: Option<&[Tableau]>) -> String {
    match tableaux {
        None | Some([]) => count.to_string(),
        Some(ts) => format!("{}\n{count}", gallery(mu_label, ts)),
    }
}

/// Each pair as `X ← x = Y` over the two tableaux side by side.
pub fn table(table: &BijectionTable, l: &[Tableau]) -> String {
    let mut out = format!(
        "ρ = {}, λ = {}: {} pairs\n",
        table.rho,
        table.lambda,
        table.pairs.len()
    );
    for (i, pair) in table.pairs.iter().enumerate() {
        let src = rho_label(i);
        let img = l
            .iter()
            .position(|t| t == &pair.image)
            .map_or_else(|| "?".into(), mu_label);
        out.push('\n');
        out.push_str(&format!(
            "{src} ← {} = {img}   new box {}\n",
            pair.source.x, pair.new_cell
        ));
        out.push_str(&side_by_side(&[
            (src, block(&pair.source.tableau)),
            (img, block(&pair.image)),
        ]));
    }
    out
}

pub fn sweep(records: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let status = if r.ok { "ok  " } else { "FAIL" };
        out.push_str(&format!(
            "{status} λ = {}, ρ = {}: {} = {}\n",
            r.lambda, r.rho, r.lhs, r.rhs
        ));
    }
    let failed = records.iter().filter(|r| !r.ok).count();
    if failed == 0 {
        out.push_str(&format!("all {} pairs OK\n", records.len()));
    } else {
        out.push_str(&format!("{failed} of {} pairs FAILED\n", records.len()));
    }
    out
}

fn list(labels: &[String]) -> String {
    match labels {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

pub fn removal(report: &RemovalReport) -> String {
    let mu = |t: &Tableau| report.mu_index(t).map_or_else(|| "?".into(), mu_label);
    let rho = |t: &Tableau| report.rho_index(t).map_or_else(|| "?".into(), rho_label);

    let mut out = format!("ρ = {}, λ = {}\n\n", report.rho, report.lambda);
    out.push_str("μ-tableaux:\n");
    out.push_str(&gallery(mu_label, &report.mu_tableaux));
    out.push_str("\nρ-tableaux:\n");
    out.push_str(&gallery(rho_label, &report.rho_tableaux));
    out.push_str("\nremovals:\n");
    for f in &report.fibers {
        let from: Vec<String> = f.preimages.iter().map(mu).collect();
        out.push_str(&format!("  {} ← {}\n", rho(&f.image), from.join(", ")));
    }
    out.push('\n');

    match (&report.matching, &report.witness) {
        (Some(pairs), _) => {
            let pairs: Vec<String> = pairs
                .iter()
                .map(|p| format!("{}↔{}", mu(&p.mu), rho(&p.rho)))
                .collect();
            out.push_str(&format!("bijection: {}\n", pairs.join(" ")));
        }
        (None, Some(w)) => {
            let from: Vec<String> = w.tableaux.iter().map(mu).collect();
            let to: Vec<String> = w.images.iter().map(rho).collect();
            let line = if to.len() == 1 && from.len() == 2 {
                format!("{} both remove to {}", list(&from), to[0])
            } else {
                format!("{} can only remove to {}", list(&from), list(&to))
            };
            out.push_str(&format!("NOT a bijection: {line}\n"));
        }
        (None, None) => out.push_str("NOT a bijection\n"),
    }
    out
}
