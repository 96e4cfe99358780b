// SPDX-License-Identifier: Apache-2.0

//! Code dimension `K` by length, against published values.

use std::time::Duration;

use adcodes::search::{build_conflict_graph, exact_search, randomized_search, SearchBudget};
use adcodes::{quantum_dimension, self_complementary_construction, ChannelSpec, Pairing};
use anyhow::bail;

use crate::output::{render_table, Format};

pub const FIRST: usize = 4;
pub const LAST: usize = 16;

/// Additive GF(4) codes correcting one amplitude-damping error, n = 4..16.
const GF4: [u64; 13] = [1, 2, 2, 2, 8, 8, 16, 32, 64, 128, 256, 512, 1024];
/// Gottesman's stabilizer codes.
const GOTTESMAN: [u64; 13] = [1, 2, 4, 8, 8, 16, 32, 64, 128, 256, 512, 1024, 1024];
/// Lang-Shor nonadditive codes.
const LANG_SHOR: [u64; 13] = [2, 2, 5, 8, 12, 18, 41, 78, 146, 273, 515, 931, 1716];
/// Expected group-construction values.
const GROUP: [u64; 13] = [2, 2, 5, 8, 16, 23, 47, 86, 158, 274, 548, 1024, 1928];
/// Best known GF(3) search results; none for n >= 15.
const GF3: [Option<u64>; 13] = [
    Some(2),
    Some(2),
    Some(5),
    Some(8),
    Some(16),
    Some(24),
    Some(49),
    Some(89),
    Some(168),
    Some(291),
    Some(572),
    None,
    None,
];

/// Lengths up to this one are solved exactly.
const EXACT_LAST: usize = 10;

pub struct TableOptions {
    pub from: usize,
    pub to: usize,
    pub budget_seconds: f64,
    pub skip_random: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gf3 {
    Exact(u64),
    Found(u64),
    Skipped,
    Unavailable,
}

pub struct Row {
    pub n: usize,
    pub group: u64,
    pub gf3: Gf3,
}

pub fn build(options: &TableOptions) -> anyhow::Result<Vec<Row>> {
    if options.from < FIRST || options.to > LAST || options.from > options.to {
        bail!("table range must lie within {FIRST}..={LAST}");
    }
    if !options.budget_seconds.is_finite() || options.budget_seconds <= 0.0 {
        bail!("--budget-seconds must be positive");
    }
    let mut rows = Vec::new();
    for n in options.from..=options.to {
        let code = self_complementary_construction(n)?;
        let group = quantum_dimension(&code);
        let gf3 = match GF3[n - FIRST] {
            None => Gf3::Unavailable,
            Some(_) if n > EXACT_LAST && options.skip_random => Gf3::Skipped,
            Some(reference) => {
                let channel = if n % 2 == 0 {
                    ChannelSpec::t(n / 2)?
                } else {
                    ChannelSpec::zt(n / 2)?
                };
                let graph = build_conflict_graph(&channel, &Pairing::canonical(n)?)?;
                let seed = graph.seed_from_code(&code).ok();
                if n <= EXACT_LAST {
                    let seeds: Vec<Vec<usize>> = seed.into_iter().collect();
                    let result = exact_search(&graph, &SearchBudget::unlimited(), &seeds)?;
                    Gf3::Exact(result.k())
                } else {
                    let budget = SearchBudget::new(
                        Some(Duration::from_secs_f64(options.budget_seconds)),
                        None,
                        options.seed,
                        1,
                    )?;
                    let result =
                        randomized_search(&graph, &budget, seed.as_deref(), Some(2 * reference))?;
                    Gf3::Found(result.k())
                }
            }
        };
        rows.push(Row { n, group, gf3 });
    }
    Ok(rows)
}

fn mark(value: u64, expected: u64) -> String {
    let sign = if value == expected { "✓" } else { "✗" };
    format!("{value} {sign}")
}

pub fn render(rows: &[Row], format: Format) -> String {
    let header = ["n", "GF(4)", "Gottesman", "Lang-Shor", "C_g", "GF(3)"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let i = row.n - FIRST;
            let gf3 = match (&row.gf3, GF3[i]) {
                (Gf3::Exact(k), Some(r)) | (Gf3::Found(k), Some(r)) => mark(*k, r),
                (Gf3::Skipped, _) => "-".to_string(),
                _ => "*".to_string(),
            };
            vec![
                row.n.to_string(),
                GF4[i].to_string(),
                GOTTESMAN[i].to_string(),
                LANG_SHOR[i].to_string(),
                mark(row.group, GROUP[i]),
                gf3,
            ]
        })
        .collect();
    render_table(&header, &cells, format)
}
