//! `pavings`: counting, enumeration, analysis and verification of pavings.
//!
//! Exit status is 0 when everything requested succeeded, 1 when a check or
//! comparison failed, and 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use pavings::enumerate::{EnumerateConfig, DEFAULT_LIMIT};
use pavings::format::{first_mismatch, parse_bfile, read_map, read_paving, render_sequence, OutputFormat, SequenceEntry};
use pavings::paving::mirror_double;
use pavings::series::{asymptotic_table, rooted_by_recurrence, rooted_by_series, unlabeled_by_cycle_index};
use pavings::verify::{run_verification, VerifyOptions};
use pavings::{enumerate_pavings, fixtures};

#[derive(Parser)]
#[command(name = "pavings", version, about = "Three-dimensional combinatorial maps and free subgroups of Z2*Z2*Z2")]
struct Cli {
    /// Directory holding the shipped data files.
    #[arg(long, global = true, env = "PAVINGS_FIXTURES")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Bfile,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Bfile => OutputFormat::Bfile,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RootedMethod {
    Recurrence,
    Series,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnlabeledMethod {
    CycleIndex,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oeis {
    A005411,
    A002831,
}

#[derive(clap::Args)]
struct Workers {
    /// Worker threads for the exhaustive search (default: all cores).
    #[arg(long, env = "PAVINGS_THREADS")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Rooted connected pavings = free subgroups of index n.
    Rooted {
        #[arg(long, default_value_t = 24)]
        max_darts: usize,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: RootedMethod,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Cross-check against the other methods.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        workers: Workers,
    },
    /// Pavings up to isomorphism = conjugacy classes of free subgroups.
    Unlabeled {
        #[arg(long, default_value_t = 20)]
        max_darts: usize,
        #[arg(long, value_enum, default_value = "cycle-index")]
        method: UnlabeledMethod,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        workers: Workers,
    },
    /// Exhaustive search over triples of fixed-point-free involutions.
    Enumerate {
        #[arg(long)]
        darts: usize,
        /// Classify up to isomorphism and list one representative per class.
        #[arg(long)]
        up_to_iso: bool,
        /// Write each representative as a JSON file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only α = (1 2)(3 4)…, scaled by the number of choices for α.
        #[arg(long)]
        fix_alpha: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        workers: Workers,
    },
    /// Validate a paving file and print its invariants.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Glue a connected map to its mirror image.
    MirrorDouble {
        #[arg(long)]
        map: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the cross-method consistency suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_darts: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Perturb the named check (for testing the suite itself).
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
        #[command(flatten)]
        workers: Workers,
    },
    /// Compare a b-file against the computed sequence.
    Compare {
        #[arg(long, value_enum)]
        oeis: Oeis,
        /// Defaults to the shipped fixture.
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Only compare terms with index at most this.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Exact counts against their leading-order asymptotics.
    Asympt {
        #[arg(long, default_value_t = 20)]
        max_k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let fixtures_dir = cli.fixtures.clone().unwrap_or_else(fixtures::fixtures_dir);
    match cli.command {
        Command::Rooted {
            max_darts,
            method,
            format,
            verify,
            workers,
        } => cmd_rooted(max_darts, method, format.into(), verify, workers.threads),
        Command::Unlabeled {
            max_darts,
            method,
            format,
            workers,
        } => cmd_unlabeled(max_darts, method, format.into(), workers.threads),
        Command::Enumerate {
            darts,
            up_to_iso,
            out,
            fix_alpha,
            limit,
            format,
            workers,
        } => {
            let config = EnumerateConfig {
                classify: up_to_iso,
                representatives: up_to_iso,
                fix_alpha,
                limit,
                threads: workers.threads,
            };
            cmd_enumerate(darts, &config, out.as_deref(), format.into())
        }
        Command::Analyze { input, format } => cmd_analyze(&input, format.into()),
        Command::MirrorDouble { map, out } => cmd_mirror_double(&map, out.as_deref()),
        Command::Verify {
            max_darts,
            format,
            inject_fault,
            workers,
        } => cmd_verify(
            &VerifyOptions {
                max_darts,
                threads: workers.threads,
                fault: inject_fault,
                ..Default::default()
            },
            format.into(),
        ),
        Command::Compare { oeis, bfile, max_n } => cmd_compare(oeis, bfile.as_deref(), max_n, &fixtures_dir),
        Command::Asympt { max_k, format } => cmd_asympt(max_k, format.into()),
    }
}

fn even_max(n: usize) -> usize {
    n - n % 2
}

/// Rows at dart counts `2, 4, …, max`; a b-file is indexed by half the
/// dart count, as in the OEIS.
fn sequence_rows(values_by_darts: &[BigUint], max: usize, format: OutputFormat) -> Vec<SequenceEntry> {
    (2..=max)
        .step_by(2)
        .map(|n| SequenceEntry {
            n: if format == OutputFormat::Bfile { n / 2 } else { n },
            value: values_by_darts[n].clone(),
        })
        .collect()
}

fn by_darts_from_half(values: Vec<BigUint>, max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::default(); max + 1];
    for (k, v) in values.into_iter().enumerate() {
        if 2 * k <= max {
            out[2 * k] = v;
        }
    }
    out
}

fn oracle_counts(max: usize, classify: bool, threads: Option<usize>) -> Result<(Vec<BigUint>, Vec<BigUint>)> {
    let mut rooted = vec![BigUint::default(); max + 1];
    let mut iso = vec![BigUint::default(); max + 1];
    for n in (2..=max).step_by(2) {
        let config = EnumerateConfig {
            classify,
            fix_alpha: true,
            threads,
            ..Default::default()
        };
        let r = enumerate_pavings(n, &config)?;
        rooted[n] = r.rooted_count.into();
        iso[n] = r.iso_classes.unwrap_or(0).into();
    }
    Ok((rooted, iso))
}

fn cmd_rooted(max_darts: usize, method: RootedMethod, format: OutputFormat, verify: bool, threads: Option<usize>) -> Result<Status> {
    let max = even_max(max_darts);
    let recurrence = || by_darts_from_half(rooted_by_recurrence(max / 2), max);
    let values = match method {
        RootedMethod::Recurrence => recurrence(),
        RootedMethod::Series => rooted_by_series(max),
        RootedMethod::Oracle => oracle_counts(max, false, threads)?.0,
    };
    print!("{}", render_sequence("rooted", &sequence_rows(&values, max, format), format));
    if !verify {
        return Ok(Status::Ok);
    }
    let mut others = vec![("recurrence", recurrence()), ("series", rooted_by_series(max))];
    if max <= DEFAULT_LIMIT {
        others.push(("oracle", oracle_counts(max, false, threads)?.0));
    }
    let mut status = Status::Ok;
    for (name, other) in others {
        if let Some(n) = (2..=max).step_by(2).find(|&n| other[n] != values[n]) {
            eprintln!("cross-check failed against {name} at n = {n}: {} vs {}", values[n], other[n]);
            status = Status::Failed;
        }
    }
    Ok(status)
}

fn cmd_unlabeled(max_darts: usize, method: UnlabeledMethod, format: OutputFormat, threads: Option<usize>) -> Result<Status> {
    let max = even_max(max_darts);
    let values = match method {
        UnlabeledMethod::CycleIndex => unlabeled_by_cycle_index(max)?,
        UnlabeledMethod::Oracle => oracle_counts(max, true, threads)?.1,
    };
    print!("{}", render_sequence("unlabeled", &sequence_rows(&values, max, format), format));
    Ok(Status::Ok)
}

fn cmd_enumerate(n: usize, config: &EnumerateConfig, out: Option<&Path>, format: OutputFormat) -> Result<Status> {
    let report = enumerate_pavings(n, config)?;
    if let (Some(dir), Some(reps)) = (out, &report.class_representatives) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, c) in reps.iter().enumerate() {
            let path = dir.join(format!("paving_{n}_{:04}.json", i + 1));
            fs::write(&path, serde_json::to_string(&c.paving)? + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        OutputFormat::Table | OutputFormat::Csv => {
            println!("darts               {}", report.n);
            println!("triples             {}", report.total_triples);
            println!("transitive triples  {}", report.transitive_triples);
            println!("rooted              {}", report.rooted_count);
            if let Some(k) = report.iso_classes {
                println!("isomorphism classes {k}");
            }
            if let Some(reps) = &report.class_representatives {
                println!();
                println!("f-vector      |Aut|  paving");
                for c in reps {
                    let f = c.stats.f_vector;
                    println!("({},{},{},{})  {:>5}  {}", f[0], f[1], f[2], f[3], c.automorphisms, c.paving);
                }
            }
        }
        OutputFormat::Bfile => bail!("b-file output is only available for integer sequences"),
    }
    Ok(Status::Ok)
}

fn cmd_analyze(input: &Path, format: OutputFormat) -> Result<Status> {
    let p = read_paving(input)?;
    let stats = p.stats();
    let map = p.underlying_map().stats();
    let aut = p.automorphism_count().ok();
    let canonical = p.canonical_form().ok();
    match format {
        OutputFormat::Json => {
            let v = serde_json::json!({
                "n": p.darts(),
                "stats": stats,
                "underlying_map": map,
                "automorphisms": aut,
                "canonical_form": canonical,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        OutputFormat::Table | OutputFormat::Csv => {
            let f = stats.f_vector;
            println!("darts                {}", p.darts());
            println!("f-vector             ({},{},{},{})", f[0], f[1], f[2], f[3]);
            println!("complexity           {}", stats.complexity);
            println!("euler characteristic {}", stats.euler_characteristic);
            println!("connected            {}", stats.connected);
            println!("map components       {}", map.components);
            println!("map V/E/F            {}/{}/{}", map.vertices, map.edges, map.faces);
            if let Some(g) = &map.genus_per_component {
                println!("component genera     {g:?}");
            }
            if let Some(a) = aut {
                println!("automorphisms        {a}");
            }
            if let Some(c) = canonical {
                println!("canonical form       {c}");
            }
        }
        OutputFormat::Bfile => bail!("b-file output is only available for integer sequences"),
    }
    Ok(Status::Ok)
}

fn cmd_mirror_double(map: &Path, out: Option<&Path>) -> Result<Status> {
    let m = read_map(map)?;
    let p = mirror_double(&m)?;
    let json = serde_json::to_string(&p)? + "\n";
    match out {
        Some(path) => fs::write(path, json).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{json}"),
    }
    let s = p.stats();
    eprintln!(
        "{} darts, f-vector ({},{},{},{}), complexity {}",
        p.darts(),
        s.f_vector[0],
        s.f_vector[1],
        s.f_vector[2],
        s.f_vector[3],
        s.complexity
    );
    Ok(Status::Ok)
}

fn cmd_verify(options: &VerifyOptions, format: OutputFormat) -> Result<Status> {
    let report = run_verification(options)?;
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        _ => {
            for c in &report.checks {
                println!("{} {:<28} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
        }
    }
    Ok(if report.passed() { Status::Ok } else { Status::Failed })
}

fn cmd_compare(oeis: Oeis, bfile: Option<&Path>, max_n: Option<usize>, fixtures_dir: &Path) -> Result<Status> {
    let (name, embedded) = match oeis {
        Oeis::A005411 => ("A005411.txt", fixtures::A005411_BFILE),
        Oeis::A002831 => ("A002831.txt", fixtures::A002831_BFILE),
    };
    let text = match bfile {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            let path = fixtures_dir.join(name);
            if path.exists() {
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
            } else {
                embedded.to_string()
            }
        }
    };
    let mut reference = parse_bfile(&text)?;
    reference.retain(|e| e.n >= 1 && max_n.is_none_or(|m| e.n <= m));
    let top = reference.last().map_or(0, |e| e.n);
    let computed = match oeis {
        Oeis::A005411 => rooted_by_recurrence(top),
        Oeis::A002831 => {
            let by_darts = unlabeled_by_cycle_index(2 * top)?;
            (0..=top).map(|k| by_darts[2 * k].clone()).collect()
        }
    };
    match first_mismatch(&reference, &computed) {
        None => {
            println!("{} terms agree (n = 1..{top})", reference.len());
            Ok(Status::Ok)
        }
        Some(m) => {
            eprintln!("mismatch at n = {}: {m}", m.n);
            Ok(Status::Failed)
        }
    }
}

fn cmd_asympt(max_k: usize, format: OutputFormat) -> Result<Status> {
    if max_k == 0 {
        bail!("--max-k must be at least 1");
    }
    let (rooted, unlabeled) = asymptotic_table(max_k);
    match format {
        OutputFormat::Json => {
            let v = serde_json::json!({ "rooted": rooted, "unlabeled": unlabeled });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        OutputFormat::Csv => {
            println!("kind,k,exact,asymptote,ratio");
            for (kind, rows) in [("rooted", &rooted), ("unlabeled", &unlabeled)] {
                for r in rows {
                    println!("{kind},{},{},{},{}", r.k, r.exact, r.asymptote_string(), r.ratio);
                }
            }
        }
        OutputFormat::Table => {
            for (kind, rows) in [("rooted", &rooted), ("unlabeled", &unlabeled)] {
                println!("{kind}");
                println!("{:>4}  {:>28}  {:>12}  {:>10}", "k", "exact", "asymptote", "ratio");
                for r in rows {
                    let approx: f64 = r.asymptote_string().parse().unwrap_or(f64::NAN);
                    println!("{:>4}  {:>28}  {:>12.6e}  {:>10.6}", r.k, r.exact, approx, r.ratio);
                }
            }
        }
        OutputFormat::Bfile => bail!("b-file output is only available for integer sequences"),
    }
    Ok(Status::Ok)
}
