//! Command-line front end. Exit codes: 0 pass, 1 verification failure or
//! internal error while reproducing, 2 usage or input error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;

use crate::binpoly::BinaryPoly;
use crate::codon::{self, CodonTable};
use crate::config::{JobConfig, Metric, OutputFormat, Ring};
use crate::cyclic::{self, RWord};
use crate::error::{Error, Result};
use crate::metrics::{self, Cost, DistanceReport, EditCostTable, EditLevel};
use crate::reproduce::{self, Report};
use crate::skew::{self, SkewCode, SkewWord};

#[derive(Debug, Parser)]
#[command(name = "dnacyclic", version, about = "DNA cyclic codes over F2[u]/(u^6) and skew cyclic codes over F2+vF2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor x^n - 1 over F2.
    Factor,
    /// Build a code, enumerate it and run the RC, bound and Gray checks.
    Verify,
    /// Regenerate a printed table and diff it against the embedded copy.
    Reproduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        table: u8,
    },
    /// Write the codewords as FASTA or CSV.
    Export,
    /// Run the command named in the config file.
    Run,
}

#[derive(Debug, Default, Args)]
pub struct Opts {
    #[arg(long, global = true)]
    pub ring: Option<Ring>,
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Generators separated by ';', e.g. "u^4*(x+1)*(x^3+x+1)" or "v*I".
    #[arg(long, global = true)]
    pub gen: Option<String>,
    #[arg(long, global = true)]
    pub metric: Option<Metric>,
    #[arg(long, global = true)]
    pub level: Option<EditLevel>,
    /// Largest number of words enumerated.
    #[arg(long, global = true)]
    pub guard: Option<u64>,
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key = value job file; flags override its entries.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Distance parameter of the DNA-code definition.
    #[arg(long, global = true)]
    pub d: Option<u64>,
    /// Edit cost CSV (from,to,cost; '-' for the empty symbol).
    #[arg(long, global = true)]
    pub costs: Option<PathBuf>,
}

/// What a command found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

pub fn job_config(cli: &Cli) -> Result<JobConfig> {
    let mut c = match &cli.opts.config {
        Some(p) => JobConfig::parse(&fs::read_to_string(p)?)?,
        None => JobConfig::default(),
    };
    match &cli.command {
        Command::Factor => c.command = "factor".into(),
        Command::Verify => c.command = "verify".into(),
        Command::Reproduce { table } => {
            c.command = "reproduce".into();
            c.table = Some(*table);
        }
        Command::Export => c.command = "export".into(),
        Command::Run => {}
    }
    let o = &cli.opts;
    if let Some(v) = o.ring {
        c.ring = v;
    }
    if o.n.is_some() {
        c.n = o.n;
    }
    if o.gen.is_some() {
        c.gen.clone_from(&o.gen);
    }
    if let Some(v) = o.metric {
        c.metric = v;
    }
    if let Some(v) = o.level {
        c.level = v;
    }
    if let Some(v) = o.guard {
        c.guard = v;
    }
    if let Some(v) = o.format {
        c.format = v;
    }
    if o.out.is_some() {
        c.out.clone_from(&o.out);
    }
    if o.d.is_some() {
        c.d = o.d;
    }
    if o.costs.is_some() {
        c.costs.clone_from(&o.costs);
    }
    Ok(c)
}

/// Runs one job, writing its report to `out`.
pub fn run(cfg: &JobConfig, out: &mut dyn Write) -> Result<Outcome> {
    match cfg.command.as_str() {
        "factor" => {
            write!(out, "{}", reproduce::factor_report(cfg.length()?)?)?;
            Ok(Outcome::Pass)
        }
        "verify" => {
            let (report, outcome) = match cfg.ring {
                Ring::R64 => verify_r64(cfg)?,
                Ring::F2v => verify_f2v(cfg)?,
            };
            write!(out, "{report}")?;
            Ok(outcome)
        }
        "reproduce" => {
            let which = cfg.table.ok_or_else(|| Error::Parse("reproduce needs table".into()))?;
            let report = reproduce_table(which)?;
            if let Some(dir) = &cfg.out {
                write_artifacts(dir, which, &report)?;
            }
            write!(out, "{report}")?;
            Ok(Outcome::Pass)
        }
        "export" => {
            let text = export(cfg)?;
            match &cfg.out {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(Outcome::Pass)
        }
        other => Err(Error::Parse(format!("unknown command {other:?}"))),
    }
}

pub fn reproduce_table(which: u8) -> Result<Report> {
    Ok(match which {
        1 => reproduce::table1_report(),
        2 => reproduce::table2_report(&reproduce::table2()?),
        3 => reproduce::table3_report(&reproduce::table3()?),
        4 => reproduce::table4_report(),
        5 => reproduce::table5_report(&reproduce::table5()?),
        k => return Err(Error::Parse(format!("no table {k}"))),
    })
}

/// `table<k>.txt` plus one CSV file per report section.
fn write_artifacts(dir: &Path, which: u8, report: &Report) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(format!("table{which}.txt")), report.as_str())?;
    for (name, body) in report.csv_sections() {
        fs::write(dir.join(format!("{name}.csv")), body)?;
    }
    Ok(())
}

fn load_costs(cfg: &JobConfig) -> Result<Option<EditCostTable>> {
    cfg.costs
        .as_ref()
        .map(|p| EditCostTable::parse_csv(&fs::read_to_string(p)?))
        .transpose()
}

fn weighted_min<T: std::fmt::Display + Sync>(words: &[Vec<T>], costs: &EditCostTable) -> Cost {
    let mut best: Option<Cost> = None;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let d = metrics::edit_distance(a, b, costs);
            best = Some(best.map_or(d, |x| x.min(d)));
        }
    }
    best.unwrap_or_else(|| Ratio::from_integer(0))
}

fn distance_lines(r: &mut Report, d: &DistanceReport) {
    r.kv(&format!("min_{}", d.metric), d.min)
        .kv(&format!("max_{}", d.metric), d.max)
        .kv(&format!("argmin_{}", d.metric), format!("{},{}", d.argmin.0, d.argmin.1))
        .kv("pairs", d.pairs);
}

fn verify_r64(cfg: &JobConfig) -> Result<(Report, Outcome)> {
    let code = cfg.code_over_r()?;
    let n = code.len();
    let table = CodonTable::canonical();
    let costs = load_costs(cfg)?;
    let tp = code.torsion_profile();
    let rc = cyclic::rc_report(&code, cfg.guard);
    let mut r = Report::new();
    let mut pass = true;
    r.kv("ring", "r64")
        .kv("n", n)
        .kv("code", code.description())
        .kv("size", format!("2^{}", code.size_log2()))
        .kv("torsion_size", format!("2^{}", tp.size_log2()))
        .kv("rank", tp.rank);
    for (i, t) in tp.tor.iter().enumerate() {
        r.kv(&format!("tor{i}"), t);
    }
    r.kv("alpha_word_member", rc.alpha_member)
        .kv("alpha_word_member_structural", rc.alpha_member_structural)
        .kv("generators_self_reciprocal", rc.self_reciprocal)
        .kv("rc_closed", rc.rc_closed)
        .kv("rc_decided_by", if rc.enumerated { "enumeration" } else { "structure" });
    if let Some(w) = &rc.witness {
        r.kv("rc_witness", w.to_dna(table));
    }
    r.kv("sufficiency_violated", rc.sufficiency_violated())
        .kv("necessity_violated", rc.necessity_violated());
    pass &= !rc.sufficiency_violated() && !rc.necessity_violated();

    let words = match code.enumerate(cfg.guard) {
        Ok(w) => Some(w),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    r.kv("enumerated", words.is_some());
    if let Some(words) = words.filter(|w| w.len() >= 2) {
        r.kv("words", words.len());
        let dist = match cfg.metric {
            Metric::Hamming => metrics::min_pairwise_hamming(&words)?,
            Metric::Lee => metrics::min_pairwise_lee(&words)?,
            Metric::Edit => metrics::min_pairwise_edit(&words, cfg.level, table)?,
        };
        distance_lines(&mut r, &dist);
        if let (Metric::Edit, Some(costs)) = (cfg.metric, &costs) {
            let w = match cfg.level {
                EditLevel::Codon => weighted_min(&words.iter().map(|w| w.codons(table)).collect::<Vec<_>>(), costs),
                EditLevel::Nucleotide => weighted_min(
                    &words.iter().map(|w| codon::parse_bases(&w.to_dna(table))).collect::<Result<Vec<_>>>()?,
                    costs,
                ),
            };
            r.kv("min_weighted_edit", w);
        }

        let d_c = metrics::min_pairwise_edit(&words, EditLevel::Codon, table)?.min;
        let xn1 = BinaryPoly::x_n_minus_1(n);
        let deg_bound = tp.tor.iter().filter(|t| **t != xn1).filter_map(BinaryPoly::degree).min().map(|d| d as u64 + 1);
        let rank_bound = (n - tp.rank) as u64 + 1;
        let bounds_hold = deg_bound.is_none_or(|b| d_c <= b) && d_c <= rank_bound;
        r.kv("min_edit_codon", d_c)
            .kv("edit_bound_degree", deg_bound.map_or("-".into(), |b| b.to_string()))
            .kv("edit_bound_rank", rank_bound)
            .kv("edit_bounds_hold", bounds_hold);
        pass &= bounds_hold;

        let gray = reproduce::r_gray_check(&words);
        r.kv("gray_linear", gray.linear).kv("gray_quasi_cyclic_6", gray.quasi_cyclic);
        pass &= gray.linear && gray.quasi_cyclic;

        if let Some(d) = cfg.d {
            let class = cyclic::classify_dna_code(&code, d, cfg.level, cfg.guard)?;
            r.kv("d", d)
                .kv("rc_distinct", class.rc_distinct)
                .kv("max_edit", class.max_edit)
                .kv("dna_code", class.is_dna_code);
            pass &= class.is_dna_code;
        }
    }
    r.kv("verdict", if pass { "pass" } else { "fail" });
    Ok((r, if pass { Outcome::Pass } else { Outcome::Fail }))
}

fn verify_f2v(cfg: &JobConfig) -> Result<(Report, Outcome)> {
    let code = cfg.skew_code()?;
    let n = code.len();
    let rc = skew::skew_rc_checks(&code, cfg.guard);
    let mut r = Report::new();
    let mut pass = !rc.sufficiency_violated && !rc.necessity_violated;
    r.kv("ring", "f2v")
        .kv("n", n)
        .kv("case", rc.case)
        .kv("generators", &rc.generators)
        .kv("dimension", rc.dimension)
        .kv("size", format!("2^{}", rc.dimension))
        .kv("v_indicator_member", rc.v_indicator_member)
        .kv("contains_all_c", code.contains(&SkewWord::from_dna(&"C".repeat(n))?))
        .kv("generators_self_reciprocal", rc.self_reciprocal)
        .kv("rc_closed", rc.rc_closed);
    if let Some(w) = &rc.rc_witness {
        r.kv("rc_witness", w.to_dna());
    }
    r.kv("sufficiency_violated", rc.sufficiency_violated)
        .kv("necessity_violated", rc.necessity_violated);

    let words = match code.enumerate(cfg.guard) {
        Ok(w) => Some(w),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    r.kv("enumerated", words.is_some());
    if let Some(words) = words.filter(|w| w.len() >= 2) {
        r.kv("words", words.len());
        let dist = match cfg.metric {
            Metric::Hamming => metrics::min_pairwise(&words, "hamming", |a, b| {
                a.hamming_distance(b).expect("equal lengths") as u64
            })?,
            // Lee weight on F2+vF2 is the Hamming weight of the Gray image
            Metric::Lee => metrics::min_pairwise(&words, "lee", |a, b| a.gray().hamming_distance(&b.gray()) as u64)?,
            Metric::Edit => {
                let dna: Vec<Vec<u8>> = words.iter().map(|w| w.to_dna().into_bytes()).collect();
                metrics::min_pairwise(&dna, "edit_base", |a, b| metrics::edit_distance_unit(a, b) as u64)?
            }
        };
        distance_lines(&mut r, &dist);
        let gray = reproduce::gray_check(&skew::skew_gray_image(&words), 2);
        r.kv("gray_linear", gray.linear).kv("gray_quasi_cyclic_2", gray.quasi_cyclic);
        pass &= gray.linear && gray.quasi_cyclic;
        if let Some(d) = cfg.d {
            // pairwise Hamming distance bounded above by d
            let ham = metrics::min_pairwise(&words, "hamming", |a, b| {
                a.hamming_distance(b).expect("equal lengths") as u64
            })?;
            let dna_code = rc.rc_closed && ham.max <= d;
            r.kv("d", d).kv("max_hamming", ham.max).kv("dna_code", dna_code);
            pass &= dna_code;
        }
    }
    r.kv("verdict", if pass { "pass" } else { "fail" });
    Ok((r, if pass { Outcome::Pass } else { Outcome::Fail }))
}

fn fasta<I: IntoIterator<Item = String>>(dna: I) -> String {
    dna.into_iter()
        .enumerate()
        .map(|(i, s)| format!(">cw{i}\n{s}\n"))
        .collect()
}

/// FASTA or CSV text for every codeword, in enumeration order.
pub fn export(cfg: &JobConfig) -> Result<String> {
    let csv = cfg.format == OutputFormat::Csv;
    let n = cfg.length()?;
    match cfg.ring {
        Ring::R64 => {
            let code = cfg.code_over_r()?;
            let words = code.enumerate(cfg.guard)?;
            let table = CodonTable::canonical();
            Ok(if csv {
                let header: Vec<String> = (0..n).map(|j| format!("c{j}")).collect();
                let mut s = format!("index,dna,{}\n", header.join(","));
                for (i, w) in words.iter().enumerate() {
                    s += &format!("{i},{},{}\n", w.to_dna(table), RWord::to_csv_row(w));
                }
                s
            } else {
                fasta(words.iter().map(|w| w.to_dna(table)))
            })
        }
        Ring::F2v => {
            let code: SkewCode = cfg.skew_code()?;
            let words = code.enumerate(cfg.guard)?;
            Ok(if csv {
                let header: Vec<String> = (0..n).map(|j| format!("c{j}")).collect();
                let mut s = format!("index,dna,{}\n", header.join(","));
                for (i, w) in words.iter().enumerate() {
                    let coeffs: Vec<String> = w.0.iter().map(|c| c.to_string()).collect();
                    s += &format!("{i},{},{}\n", w.to_dna(), coeffs.join(","));
                }
                s
            } else {
                fasta(words.iter().map(SkewWord::to_dna))
            })
        }
    }
}

/// Torsion-formula size of the configured code, for guard messages.
fn predicted_size(cfg: &JobConfig) -> Option<String> {
    match cfg.ring {
        Ring::R64 => cfg.code_over_r().ok().map(|c| format!("2^{}", c.torsion_profile().size_log2())),
        Ring::F2v => cfg.skew_code().ok().map(|c| format!("2^{}", c.dimension())),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match job_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(&cfg, &mut lock) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::GuardExceeded { .. }) {
                if let Some(s) = predicted_size(&cfg) {
                    eprintln!("torsion_size: {s}");
                }
            }
            // table regeneration takes no input, so a failure there is internal
            ExitCode::from(if cfg.command == "reproduce" { 1 } else { 2 })
        }
    }
}
