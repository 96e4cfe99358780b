// SPDX-License-Identifier: Apache-2.0

//! `adcodes`: build, search for and verify amplitude-damping codes.

mod output;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use adcodes::search::{
    binary_selfcomp_random, binary_selfcomp_search, build_conflict_graph, cyclic_search,
    exact_search, randomized_search, SearchBudget,
};
use adcodes::{
    assemble, cr_code, kl_verify, self_complementary_construction, shortened_vt, verify_sec,
    vt_code, weight_enumerator, AbelianGroup, ChannelSpec, CodeFile, GroupElement, Pairing,
    Verdict,
};
use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use output::{Format, Report};

/// Exit status for a code that fails verification.
const EXIT_FAIL: u8 = 1;
/// Exit status for bad arguments, unreadable files and other errors.
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "adcodes", version, about = "Amplitude-damping code toolkit")]
struct Cli {
    /// Log search progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a self-complementary 1-code from a group construction.
    Construct {
        kind: ConstructKind,
        #[arg(long)]
        n: usize,
        /// Group element (comma-separated components) for cr, residue for vt.
        #[arg(long)]
        g: Option<String>,
        /// Deleted odd coordinate (1-based) for svt.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for a large self-complementary 1-code.
    Search {
        #[arg(value_enum)]
        mode: Option<SearchMode>,
        #[arg(long = "mode", value_enum, conflicts_with = "mode")]
        mode_flag: Option<SearchMode>,
        #[arg(long)]
        n: usize,
        /// Channel such as `T4` or `Z1T4`; defaults from `n`.
        #[arg(long)]
        channel: Option<ChannelSpec>,
        /// Coordinate pairs, 1-based, e.g. `1-8,2-7,3-6,4-5`.
        #[arg(long)]
        pairing: Option<String>,
        /// Unpaired coordinate (1-based) for odd lengths.
        #[arg(long)]
        unpaired: Option<usize>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Use tabu search in binary mode instead of branch and bound.
        #[arg(long)]
        randomized: bool,
        /// Stop the randomized search once K reaches this value.
        #[arg(long)]
        target_k: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a code file: self-complementarity, 1-code, channel and KL conditions.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Shor-Laflamme weight enumerator of a code file.
    Weights {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare constructed and searched codes with reference values.
    Table {
        #[arg(long, default_value_t = 4)]
        from: usize,
        #[arg(long, default_value_t = 16)]
        to: usize,
        /// Per-length budget for the randomized GF(3) entries.
        #[arg(long, default_value_t = 60.0)]
        budget_seconds: f64,
        /// Leave the randomized GF(3) entries blank.
        #[arg(long)]
        skip_random: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Cr,
    Vt,
    Svt,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    Exact,
    Random,
    Cyclic,
    Binary,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Construct {
            kind,
            n,
            g,
            r,
            out,
            format,
        } => construct(kind, n, g.as_deref(), r, out, format),
        Command::Search {
            mode,
            mode_flag,
            n,
            channel,
            pairing,
            unpaired,
            budget_seconds,
            budget_nodes,
            seed,
            workers,
            randomized,
            target_k,
            out,
            format,
        } => {
            let Some(mode) = mode.or(mode_flag) else {
                bail!("search mode is required (exact, random, cyclic or binary)");
            };
            let time_limit = match budget_seconds {
                Some(s) if !s.is_finite() || s <= 0.0 => bail!("--budget-seconds must be positive"),
                Some(s) => Some(Duration::from_secs_f64(s)),
                None => None,
            };
            let budget = SearchBudget::new(time_limit, budget_nodes, seed, workers)?;
            let request = SearchRequest {
                mode,
                n,
                channel,
                pairing,
                unpaired,
                randomized,
                target_k,
            };
            search(&request, budget, out, format)
        }
        Command::Verify { file, format } => verify(&file, format),
        Command::Weights { file, format } => weights(&file, format),
        Command::Table {
            from,
            to,
            budget_seconds,
            skip_random,
            seed,
            format,
        } => {
            let options = table::TableOptions {
                from,
                to,
                budget_seconds,
                skip_random,
                seed,
            };
            print!("{}", table::render(&table::build(&options)?, format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_element(text: &str) -> anyhow::Result<GroupElement> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("malformed group element {text:?}"))?;
    Ok(GroupElement(parts))
}

fn construct(
    kind: ConstructKind,
    n: usize,
    g: Option<&str>,
    r: Option<usize>,
    out: Option<PathBuf>,
    format: Format,
) -> anyhow::Result<ExitCode> {
    let code = match kind {
        ConstructKind::Cr => {
            let group = AbelianGroup::canonical(n as u32 + 1)?;
            let element = match g {
                Some(text) => parse_element(text)?,
                None => group.identity(),
            };
            cr_code(&group, &element)?
        }
        ConstructKind::Vt => {
            let residue = match g {
                Some(text) => text
                    .trim()
                    .parse::<u32>()
                    .context("--g must be an integer for vt")?,
                None => 0,
            };
            vt_code(n, residue)?
        }
        ConstructKind::Svt => {
            let r = r.context("svt needs --r")?;
            shortened_vt(n, r)?
        }
        ConstructKind::Auto => self_complementary_construction(n)?,
    };
    let file = CodeFile::new(code);
    let code = &file.code;
    let self_comp = code.is_self_complementary();
    let one_code = code.is_one_code();

    let mut report = Report::new();
    report.push("construction", &code.meta.construction);
    report.push("n", code.word_len());
    report.push("classical size", code.size());
    report.push("K", file.k());
    report.push("self-complementary", pass(self_comp));
    report.push("1-code", pass(one_code));
    if let Some(path) = &out {
        file.write(path)?;
        report.push("written", path.display());
    }
    print!("{}", report.render(format));
    Ok(exit_for(self_comp && one_code))
}

struct SearchRequest {
    mode: SearchMode,
    n: usize,
    channel: Option<ChannelSpec>,
    pairing: Option<String>,
    unpaired: Option<usize>,
    randomized: bool,
    target_k: Option<u64>,
}

fn default_channel(n: usize) -> anyhow::Result<ChannelSpec> {
    Ok(if n % 2 == 0 {
        ChannelSpec::t(n / 2)?
    } else {
        ChannelSpec::zt(n / 2)?
    })
}

fn search(
    request: &SearchRequest,
    mut budget: SearchBudget,
    out: Option<PathBuf>,
    format: Format,
) -> anyhow::Result<ExitCode> {
    let n = request.n;
    let mut report = Report::new();
    report.push("mode", format!("{:?}", request.mode).to_lowercase());
    report.push("n", n);

    let (file, optimal, nodes, elapsed) = match request.mode {
        SearchMode::Binary => {
            let result = if request.randomized {
                if !budget.is_limited() && request.target_k.is_none() {
                    budget.time_limit = Some(Duration::from_secs(10));
                }
                binary_selfcomp_random(n, &budget, request.target_k)?
            } else {
                binary_selfcomp_search(n, &budget)?
            };
            report.push("channel", format!("Z{n}"));
            let clique = result.clique;
            (
                CodeFile::new(result.code),
                clique.optimal,
                clique.nodes,
                clique.elapsed,
            )
        }
        SearchMode::Cyclic => {
            let channel = match &request.channel {
                Some(c) => c.clone(),
                None if n % 2 == 0 => ChannelSpec::t(n / 2)?,
                None => bail!("cyclic search needs an even length"),
            };
            if channel.bits() + 2 * channel.trits() != n {
                bail!("channel {channel} does not have binary length {n}");
            }
            let result = cyclic_search(&channel, &budget)?;
            report.push("channel", &channel);
            let generators: Vec<String> = result.generators.iter().map(|w| w.to_string()).collect();
            report.push("generators", generators.join(" "));
            let clique = result.clique;
            (
                CodeFile::new(result.ternary),
                clique.optimal,
                clique.nodes,
                clique.elapsed,
            )
        }
        SearchMode::Exact | SearchMode::Random => {
            let channel = match &request.channel {
                Some(c) => c.clone(),
                None => default_channel(n)?,
            };
            if channel.bits() + 2 * channel.trits() != n {
                bail!("channel {channel} does not have binary length {n}");
            }
            let pairing = match &request.pairing {
                Some(text) => Pairing::parse(n, text, request.unpaired)?,
                None => Pairing::canonical(n)?,
            };
            let graph = build_conflict_graph(&channel, &pairing)?;
            report.push("channel", &channel);
            report.push("pairing", pairing.pairs_text());
            report.push("vertices", graph.graph().len());
            // The group construction is a good starting point when it fits.
            let seed = self_complementary_construction(n)
                .ok()
                .and_then(|code| graph.seed_from_code(&code).ok());
            let result = if request.mode == SearchMode::Exact {
                let seeds: Vec<Vec<usize>> = seed.into_iter().collect();
                exact_search(&graph, &budget, &seeds)?
            } else {
                if !budget.is_limited() && request.target_k.is_none() {
                    budget.time_limit = Some(Duration::from_secs(10));
                }
                let target = request.target_k.map(|k| 2 * k);
                randomized_search(&graph, &budget, seed.as_deref(), target)?
            };
            let clique = result.clique;
            (
                CodeFile::new(result.ternary),
                clique.optimal,
                clique.nodes,
                clique.elapsed,
            )
        }
    };

    let binary = file.binary_view()?;
    let valid = binary.is_self_complementary() && binary.is_one_code();
    report.push("classical size", binary.size());
    report.push("K", file.k());
    report.push("optimal", optimal);
    report.push("nodes", nodes);
    report.push("elapsed", format!("{:.3}s", elapsed.as_secs_f64()));
    report.push("seed", budget.seed);
    report.push("workers", budget.workers);
    report.push("verified", pass(valid));
    if let Some(path) = &out {
        let mut file = file;
        file.extra.push(("optimal".into(), optimal.to_string()));
        file.write(path)?;
        report.push("written", path.display());
    }
    print!("{}", report.render(format));
    Ok(exit_for(valid))
}

fn verify(path: &PathBuf, format: Format) -> anyhow::Result<ExitCode> {
    let file = CodeFile::read(path).with_context(|| format!("reading {}", path.display()))?;
    let binary = file.binary_view()?;
    let mut report = Report::new();
    let mut ok = true;

    report.push("file", path.display());
    report.push("n", binary.word_len());
    report.push("alphabet", file.code.alphabet().name());
    report.push("classical size", binary.size());
    report.push("K", file.k());

    let self_comp = binary.check_self_complementary();
    ok &= self_comp.is_pass();
    report.push(
        "self-complementary",
        verdict(&self_comp, |w| format!("missing complement of {w}")),
    );

    let one_code = binary.check_one_code();
    ok &= one_code.is_pass();
    report.push(
        "1-code",
        verdict(&one_code, |(a, b)| format!("{a} and {b} too close")),
    );

    if let Some(channel) = &file.code.meta.channel {
        if file.code.alphabet() != adcodes::Alphabet::Binary {
            let sec = verify_sec(&file.code, channel)?;
            ok &= sec.is_pass();
            report.push(
                "channel SEC",
                verdict(&sec, |w| {
                    format!("{} and {} both reach {}", w.first, w.second, w.shared)
                }),
            );
        }
    }

    if let Some(declared) = file.declared_k {
        let matches = declared == file.k();
        ok &= matches;
        let text = if matches {
            "PASS".to_string()
        } else {
            format!("FAIL (declared {declared})")
        };
        report.push("declared K", text);
    }

    if self_comp.is_pass() && one_code.is_pass() {
        let quantum = assemble(&binary)?;
        match kl_verify(&quantum) {
            Ok(kl) => {
                ok &= kl.pass;
                let text = match (&kl.pass, &kl.violation) {
                    (true, _) => "PASS".to_string(),
                    (false, Some(v)) => format!(
                        "FAIL ({:?} between codewords {} and {}: {})",
                        v.condition, v.i, v.j, v.value
                    ),
                    (false, None) => "FAIL".to_string(),
                };
                report.push("KL conditions", text);
            }
            Err(adcodes::Error::QubitCapExceeded { cap, .. }) => {
                report.push("KL conditions", format!("SKIPPED (more than {cap} qubits)"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    report.push("result", pass(ok));
    print!("{}", report.render(format));
    Ok(exit_for(ok))
}

fn weights(path: &PathBuf, format: Format) -> anyhow::Result<ExitCode> {
    let file = CodeFile::read(path).with_context(|| format!("reading {}", path.display()))?;
    let binary = file.binary_view()?;
    let quantum = assemble(&binary)?;
    let enumerator = weight_enumerator(&quantum)?;
    let mut report = Report::new();
    report.push("n", quantum.n());
    report.push("K", quantum.k());
    for (d, a) in enumerator.coefficients.iter().enumerate() {
        report.push(&format!("A{d}"), a);
    }
    let additivity = match enumerator.additivity {
        adcodes::quantum::Additivity::Nonadditive => "nonadditive",
        adcodes::quantum::Additivity::Inconclusive => "inconclusive",
    };
    report.push("additivity", additivity);
    print!("{}", report.render(format));
    Ok(ExitCode::SUCCESS)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verdict<W>(v: &Verdict<W>, describe: impl Fn(&W) -> String) -> String {
    match v.witness() {
        None => "PASS".to_string(),
        Some(w) => format!("FAIL ({})", describe(w)),
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
