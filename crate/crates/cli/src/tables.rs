//! Parameter-sweep tables: computed values next to the closed-form
//! predictions, rendered as text, JSON, or CSV.

use serde_json::json;

use k2cyclo::arith::{is_prime, mult_order};
use k2cyclo::genus::{finiteness_classifier, genus_curve, kummer_genus, ramification_profile, FinitenessOutcome};
use k2cyclo::k2tame::{count_cyclotomic, zset};

use crate::report::csv_line;

/// Inclusive range written `a..b`, or a single value `a`.
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let parse_one = |s: &str| -> Result<u64, String> {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid number {s:?} in range {text:?}"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if lo > hi {
            return Err(format!("empty range {text:?}: {lo} > {hi}"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(text)?;
        Ok((v, v))
    }
}

/// A rendered table: header plus rows of equal length, with a JSON mirror.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: serde_json::Value,
}

impl Table {
    pub fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let line = |cells: &[String]| -> String {
            cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:width$}", c, width = widths[i]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = csv_line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&csv_line(row));
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("table serializes");
        s.push('\n');
        s
    }
}

/// z-set sizes over a prime grid, with the full-window law beside them.
pub fn zset_table(l_range: (u64, u64), p_range: (u64, u64)) -> Table {
    let header: Vec<String> = ["l", "p", "size", "full", "predicted_full", "members"]
        .map(String::from)
        .to_vec();
    let mut rows = Vec::new();
    let mut objects = Vec::new();
    for l in l_range.0..=l_range.1 {
        if l < 5 || !is_prime(l) {
            continue;
        }
        for p in p_range.0..=p_range.1 {
            if !is_prime(p) || p == l {
                continue;
            }
            let z = zset(l, p).unwrap();
            let members: Vec<u64> = z.members().iter().copied().collect();
            let full = z.len() as u64 == l - 3;
            let predicted = l % 4 == 3 && mult_order(p * p % l, l).unwrap() == (l - 1) / 2;
            let members_text = members
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            rows.push(vec![
                l.to_string(),
                p.to_string(),
                z.len().to_string(),
                full.to_string(),
                predicted.to_string(),
                members_text,
            ]);
            objects.push(json!({
                "l": l,
                "p": p,
                "size": z.len(),
                "full": full,
                "predicted_full": predicted,
                "members": members,
            }));
        }
    }
    Table {
        header,
        rows,
        json: serde_json::Value::Array(objects),
    }
}

/// Cyclotomic element/subgroup counts; p = 0 selects characteristic zero.
pub fn counts_table(
    l_range: (u64, u64),
    p_range: (u64, u64),
    n_range: (u64, u64),
) -> Table {
    let header: Vec<String> = ["l", "p", "n", "elements", "subgroups", "zset_size"]
        .map(String::from)
        .to_vec();
    let mut rows = Vec::new();
    let mut objects = Vec::new();
    for l in l_range.0..=l_range.1 {
        if l < 5 || !is_prime(l) {
            continue;
        }
        for p in p_range.0..=p_range.1 {
            if p != 0 && (!is_prime(p) || p == l) {
                continue;
            }
            for n in n_range.0..=n_range.1 {
                let Ok((c, cs)) = count_cyclotomic(l, n, p) else {
                    continue;
                };
                let zsize = if p == 0 {
                    0
                } else {
                    zset(l, p).unwrap().len()
                };
                rows.push(vec![
                    l.to_string(),
                    p.to_string(),
                    n.to_string(),
                    c.to_string(),
                    cs.to_string(),
                    zsize.to_string(),
                ]);
                objects.push(json!({
                    "l": l,
                    "p": p,
                    "n": n,
                    "elements": c,
                    "subgroups": cs,
                    "zset_size": zsize,
                }));
            }
        }
    }
    Table {
        header,
        rows,
        json: serde_json::Value::Array(objects),
    }
}

/// Genus of the superelliptic cover for each (n, p), closed form next to
/// the general ramification formula, with the finiteness classification.
pub fn genus_table(n_range: (u64, u64), p_range: (u64, u64)) -> Table {
    let header: Vec<String> = ["n", "p", "genus", "formula", "classification"]
        .map(String::from)
        .to_vec();
    let mut rows = Vec::new();
    let mut objects = Vec::new();
    for p in p_range.0..=p_range.1 {
        if !is_prime(p) {
            continue;
        }
        for n in n_range.0..=n_range.1 {
            if n < 3 {
                continue;
            }
            let g = genus_curve(n, p).unwrap();
            let profile = ramification_profile(n, p).unwrap();
            let formula = kummer_genus(p, profile.places(), 0, 1).unwrap();
            let class = match finiteness_classifier(n, p).unwrap() {
                FinitenessOutcome::GenusAtLeastTwo => "genus-at-least-two",
                FinitenessOutcome::SmallGenusException => "small-genus-exception",
            };
            rows.push(vec![
                n.to_string(),
                p.to_string(),
                g.to_string(),
                formula.to_string(),
                class.to_string(),
            ]);
            objects.push(json!({
                "n": n,
                "p": p,
                "genus": g,
                "formula": formula,
                "classification": class,
            }));
        }
    }
    Table {
        header,
        rows,
        json: serde_json::Value::Array(objects),
    }
}
