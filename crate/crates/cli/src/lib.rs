//! Command implementations behind the `wreathlab` binary.

pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use wreathlab::action::{coset_action, natural_action, regular_action, ActionJson};
use wreathlab::checks::{group_properties, run_suite, sort_verdicts, Depth, Verdict};
use wreathlab::embeddings::{
    default_section, kk_embedding_capped, omega_embedding_capped, section_with_overrides, verify_embedding,
    EmbeddingReport, ShortExactSequence,
};
use wreathlab::fields::{quadratic_kummer_embedding_capped, QuadraticTower};
use wreathlab::group::{identify_small, left_cosets, GroupJson, DEFAULT_SIZE_CAP};
use wreathlab::sizes::{crossover_report, example_432, figure_csv, figure_data, table1};
use wreathlab::wreath::{build_wreath_capped, WreathProduct};
use wreathlab::{Error, GroupHom, Section};

pub const SIZE_CAP_ENV: &str = "WREATHLAB_SIZE_CAP";

/// Groups above this order are reported without identification.
pub const IDENTIFY_LIMIT: usize = 200;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::SizeLimit { .. } | Error::SearchBudgetExceeded { .. }) => EXIT_RESOURCE,
            CliError::Lib(
                Error::Parse { .. }
                | Error::UnknownGroupSpec(_)
                | Error::SpecOutOfRange { .. }
                | Error::InvalidField(_)
                | Error::InvalidTower(_)
                | Error::DivisibilityViolation { .. }
                | Error::UnsupportedPrime(_)
                | Error::MissingPermutationData
                | Error::Json(_)
                | Error::Io(_),
            )
            | CliError::Usage(_)
            | CliError::Io(_)
            | CliError::Json(_) => EXIT_USAGE,
            CliError::Lib(_) => EXIT_FAILED,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "wreathlab", version, about = "Wreath products, embeddings and size tables")]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Largest group that may be built (overrides WREATHLAB_SIZE_CAP).
    #[arg(long, global = true)]
    pub size_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build K wr_Omega H and identify it.
    Build {
        #[arg(long)]
        k: String,
        #[arg(long)]
        h: Option<String>,
        /// regular | natural:n | cosets:<subgroup> | file:<path>
        #[arg(long, default_value = "regular")]
        omega: String,
        /// Also write the product's multiplication table as JSON.
        #[arg(long)]
        write_json: Option<PathBuf>,
    },
    /// Build an embedding and print its table and verification report.
    Embed {
        #[arg(long, value_enum)]
        mode: EmbedMode,
        #[arg(long)]
        group: Option<String>,
        /// Normal subgroup for kk mode.
        #[arg(long)]
        normal: Option<String>,
        /// Subgroup H_K for omega mode.
        #[arg(long)]
        subgroup: Option<String>,
        /// Section overrides as `q:g` pairs separated by commas.
        #[arg(long)]
        section: Option<String>,
        /// Generators of L, e.g. 5,7.
        #[arg(long)]
        field: Option<String>,
        /// Generators of K, e.g. 5 (empty for Q).
        #[arg(long = "K")]
        k_field: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Emit size formulas, figure data and comparisons.
    Sizes {
        #[arg(long, value_enum, default_value = "figure")]
        emit: Emit,
        #[arg(long)]
        kf: Option<u64>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 100)]
        m_max: u64,
    },
    /// Run property suites and print one verdict per property.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// exhaustive | sampled:n
        #[arg(long, default_value = "exhaustive")]
        depth: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check a group given as JSON.
        #[arg(long)]
        group_file: Option<PathBuf>,
    },
    /// Name a small group.
    Identify {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmbedMode {
    Kk,
    Omega,
    Tower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Figure,
    Table1,
    Crossover,
    #[value(name = "example-432")]
    Example432,
}

/// Rendered output plus exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn size_cap(flag: Option<u64>) -> CliResult<u64> {
    let cap = match flag {
        Some(c) => c,
        None => match std::env::var(SIZE_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{SIZE_CAP_ENV} must be a positive integer, got `{v}`")))?,
            Err(_) => DEFAULT_SIZE_CAP,
        },
    };
    if cap == 0 {
        return Err(CliError::Usage("size cap must be at least 1".into()));
    }
    Ok(cap)
}

fn json_text<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_build(
    k: &str,
    h: Option<&str>,
    omega: &str,
    write_json: Option<&Path>,
    format: Format,
    cap: u64,
) -> CliResult<Outcome> {
    let k = spec::parse_group(k, cap)?;
    let top = h.map(|h| spec::parse_group(h, cap)).transpose()?;
    let need_h = || top.clone().ok_or_else(|| CliError::Usage("--h is required for this omega mode".into()));
    let set = if omega == "regular" {
        regular_action(&need_h()?)
    } else if let Some(n) = omega.strip_prefix("natural:") {
        let n = n.parse().map_err(|_| Error::parse(omega, 8, "expected a degree"))?;
        natural_action(n, &need_h()?)?
    } else if let Some(sub) = omega.strip_prefix("cosets:") {
        let h = need_h()?;
        let inc = spec::parse_subgroup(&h, sub, false, cap)?;
        coset_action(&h, &inc)?.0
    } else if let Some(path) = omega.strip_prefix("file:") {
        ActionJson::load(Path::new(path))?
    } else {
        return Err(Error::parse(omega, 0, "expected regular, natural:n, cosets:<subgroup> or file:<path>").into());
    };
    let w = build_wreath_capped(&k, &set, cap)?;
    let identified = (w.order() <= IDENTIFY_LIMIT).then(|| identify_small(w.product()));
    if let Some(path) = write_json {
        std::fs::write(path, GroupJson::from_group(w.product()).to_string_pretty()?)?;
    }
    let text = match format {
        Format::Json => json_text(&json!({
            "order": w.order(),
            "identified": identified,
            "base_order": w.base_group().order(),
            "degree": w.degree(),
            "top_order": w.top_group().order(),
        }))?,
        _ => match identified {
            Some(name) => format!("order {}, identified {name}\n", w.order()),
            None => format!("order {}\n", w.order()),
        },
    };
    Ok(Outcome::ok(text))
}

struct EmbedResult {
    mode: EmbedMode,
    wreath: WreathProduct,
    phi: GroupHom,
    report: EmbeddingReport,
    kummer_agrees: Option<bool>,
}

fn phi_rows(w: &WreathProduct, phi: &GroupHom) -> Vec<(String, String)> {
    phi.domain()
        .elements()
        .map(|x| (phi.domain().label(x), w.format_element(phi.apply(x))))
        .collect()
}

fn render_embed(r: &EmbedResult, format: Format) -> CliResult<Outcome> {
    let rows = phi_rows(&r.wreath, &r.phi);
    let text = match format {
        Format::Json => json_text(&json!({
            "mode": format!("{:?}", r.mode).to_lowercase(),
            "group_order": r.phi.domain().order(),
            "wreath_order": r.wreath.order(),
            "phi": rows.iter().map(|(a, b)| json!({"element": a, "image": b})).collect::<Vec<_>>(),
            "report": r.report,
            "kummer_agrees": r.kummer_agrees,
        }))?,
        _ => {
            let mut s = String::new();
            for (a, b) in &rows {
                s.push_str(&format!("phi({a}) = {b}\n"));
            }
            let rep = &r.report;
            s.push_str(&format!("homomorphism: {}\n", yes(rep.is_homomorphism)));
            s.push_str(&format!("injective: {}\n", yes(rep.is_injective)));
            s.push_str(&format!("image order: {}\n", rep.image_order));
            s.push_str(&format!("wreath order: {}\n", rep.wreath_order));
            s.push_str(&format!("full: {}\n", yes(rep.image_is_full)));
            if let Some((a, b)) = rep.counterexample {
                let d = r.phi.domain();
                s.push_str(&format!("counterexample: ({}, {})\n", d.label(a), d.label(b)));
            }
            if let Some(agree) = r.kummer_agrees {
                s.push_str(&format!("agrees with section embedding: {}\n", yes(agree)));
            }
            s
        }
    };
    let code = if r.report.is_embedding() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { text, code })
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> CliResult<&'a str> {
    value.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} is required for this mode")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_embed(
    mode: EmbedMode,
    group: &Option<String>,
    normal: &Option<String>,
    subgroup: &Option<String>,
    section: &Option<String>,
    field: &Option<String>,
    k_field: &Option<String>,
    alpha: &Option<String>,
    format: Format,
    cap: u64,
) -> CliResult<Outcome> {
    let result = match mode {
        EmbedMode::Kk => {
            let g = spec::parse_group(required(group, "group")?, cap)?;
            let inc = spec::parse_subgroup(&g, required(normal, "normal")?, true, cap)?;
            let ses = ShortExactSequence::from_normal_subgroup(&inc)?;
            let s = match section {
                Some(text) => section_with_overrides(ses.eps(), &spec::parse_pairs(text, ses.q(), ses.g())?)?,
                None => default_section(ses.eps())?,
            };
            let (wreath, phi) = kk_embedding_capped(&ses, &s, cap)?;
            let report = verify_embedding(&phi);
            EmbedResult { mode, wreath, phi, report, kummer_agrees: None }
        }
        EmbedMode::Omega => {
            let g = spec::parse_group(required(group, "group")?, cap)?;
            let h_k = spec::parse_subgroup(&g, required(subgroup, "subgroup")?, false, cap)?;
            let s = match section {
                Some(text) => {
                    let cosets = left_cosets(&g, &h_k);
                    let labels: Vec<String> = cosets.representatives.iter().map(|&r| format!("{}H", g.label(r))).collect();
                    let mut choice = cosets.representatives.clone();
                    let mut pos = 0;
                    for item in text.split(',') {
                        let (w, x) = item
                            .split_once(':')
                            .ok_or_else(|| Error::parse(text, pos, "expected `coset:element`"))?;
                        let w = labels
                            .iter()
                            .position(|l| l == w.trim())
                            .ok_or_else(|| Error::parse(text, pos, format!("no coset `{}`", w.trim())))?;
                        choice[w] = spec::parse_element(&g, x, text, pos)?;
                        pos += item.len() + 1;
                    }
                    Some(Section::new(g.clone(), choice)?)
                }
                None => None,
            };
            let e = omega_embedding_capped(&g, &h_k, s.as_ref(), cap)?;
            let report = verify_embedding(&e.phi);
            EmbedResult { mode, wreath: e.wreath, phi: e.phi, report, kummer_agrees: None }
        }
        EmbedMode::Tower => {
            let l = spec::parse_int_list(required(field, "field")?)?;
            let k = spec::parse_int_list(k_field.as_deref().unwrap_or(""))?;
            let a = spec::parse_rational(required(alpha, "alpha")?)?;
            let t = QuadraticTower::new(&l, &k, a)?;
            let ke = quadratic_kummer_embedding_capped(&t, cap)?;
            let ses = ShortExactSequence::new(ke.inclusion.clone(), ke.restriction.clone())?;
            let s = match section {
                Some(text) => section_with_overrides(ses.eps(), &spec::parse_pairs(text, ses.q(), ses.g())?)?,
                None => default_section(ses.eps())?,
            };
            let (w2, phi2) = kk_embedding_capped(&ses, &s, cap)?;
            let agrees = ke
                .gal_l
                .elements()
                .all(|x| w2.format_element(phi2.apply(x)) == ke.wreath.format_element(ke.phi.apply(x)));
            EmbedResult { mode, wreath: ke.wreath, phi: ke.phi, report: ke.report, kummer_agrees: Some(agrees) }
        }
    };
    render_embed(&result, format)
}

fn cmd_sizes(emit: Emit, kf: Option<u64>, group: Option<&str>, m_max: u64, format: Format) -> CliResult<Outcome> {
    let need_kf = || kf.ok_or_else(|| CliError::Usage("--kf is required".into()));
    let need_group = || group.ok_or_else(|| CliError::Usage("--group is required".into()));
    let text = match emit {
        Emit::Figure => {
            let points = figure_data(need_kf()?, need_group()?, m_max)?;
            match format {
                Format::Json => json_text(&points)?,
                _ => figure_csv(&points),
            }
        }
        Emit::Table1 => {
            let rows = table1(need_kf()?)?;
            match format {
                Format::Json => json_text(
                    &rows
                        .iter()
                        .map(|r| {
                            json!({
                                "kf": r.kf,
                                "kc": r.kc,
                                "group": r.group,
                                "regular": r.regular.to_string(),
                                "omega": r.omega.to_string(),
                            })
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Csv => {
                    let mut s = String::from("kf,kc,group,regular,omega\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{},{},{}\n", r.kf, r.kc, r.group, r.regular, r.omega));
                    }
                    s
                }
                Format::Text => rows
                    .iter()
                    .map(|r| format!("{} (kc={}): {}, {}\n", r.group, r.kc, r.regular, r.omega))
                    .collect(),
            }
        }
        Emit::Crossover => {
            let report = crossover_report(need_kf()?, need_group()?, m_max)?;
            match format {
                Format::Text => {
                    let mut s = format!(
                        "{} kf={} kc={} galois={} dihedral={}\n",
                        report.group, report.kf, report.kc, report.galois, report.dihedral
                    );
                    for line in &report.lines {
                        s.push_str(&format!("{}\n", serde_json::to_string(line)?));
                    }
                    s.push_str(&format!("pattern holds: {}\n", yes(report.pattern_holds)));
                    s
                }
                _ => json_text(&report)?,
            }
        }
        Emit::Example432 => {
            let c = example_432();
            match format {
                Format::Text => format!(
                    "kummer wreath size: {}\ncoset wreath size: {}\nratio: {}\n{}\n",
                    c.kummer_wreath_size, c.coset_wreath_size, c.ratio, c.note
                ),
                _ => json_text(&c)?,
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(suite: &str, depth: &str, seed: u64, group_file: Option<&Path>, format: Format) -> CliResult<Outcome> {
    let depth: Depth = depth.parse()?;
    let mut verdicts = run_suite(suite, depth, seed)?;
    if let Some(path) = group_file {
        let text = std::fs::read_to_string(path)?;
        let raw: GroupJson = serde_json::from_str(&text)?;
        match raw.into_group() {
            Ok(g) => {
                verdicts.push(Verdict::new("group", "valid table", true, format!("order {}", g.order())));
                verdicts.extend(group_properties(&g));
            }
            Err(e) => verdicts.push(Verdict::new("group", "valid table", false, e.to_string())),
        }
        sort_verdicts(&mut verdicts);
    }
    let passed = verdicts.iter().all(|v| v.passed);
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for v in &verdicts {
                let mark = if v.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!("{mark} {} / {}: {}\n", v.suite, v.property, v.detail));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,property,passed,detail\n");
            for v in &verdicts {
                s.push_str(&format!("{},\"{}\",{},\"{}\"\n", v.suite, v.property, v.passed, v.detail.replace('"', "'")));
            }
            s
        }
        Format::Json => json_text(&json!({
            "suite": suite,
            "depth": depth.to_string(),
            "seed": seed,
            "passed": passed,
            "verdicts": verdicts,
        }))?,
    };
    Ok(Outcome { text, code: if passed { EXIT_OK } else { EXIT_FAILED } })
}

fn cmd_identify(group: &str, format: Format, cap: u64) -> CliResult<Outcome> {
    let g = spec::parse_group(group, cap)?;
    let name = identify_small(&g);
    let text = match format {
        Format::Json => json_text(&json!({"order": g.order(), "identified": name}))?,
        _ => format!("order {}, identified {name}\n", g.order()),
    };
    Ok(Outcome::ok(text))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let cap = size_cap(cli.size_cap)?;
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Build { k, h, omega, write_json } => {
            cmd_build(k, h.as_deref(), omega, write_json.as_deref(), fmt(Format::Text), cap)
        }
        Command::Embed { mode, group, normal, subgroup, section, field, k_field, alpha } => cmd_embed(
            *mode,
            group,
            normal,
            subgroup,
            section,
            field,
            k_field,
            alpha,
            fmt(Format::Text),
            cap,
        ),
        Command::Sizes { emit, kf, group, m_max } => cmd_sizes(*emit, *kf, group.as_deref(), *m_max, fmt(Format::Csv)),
        Command::Verify { suite, depth, seed, group_file } => {
            cmd_verify(suite, depth, *seed, group_file.as_deref(), fmt(Format::Json))
        }
        Command::Identify { group } => cmd_identify(group, fmt(Format::Text), cap),
    }
}

/// Parses `args`, runs the command and writes the result. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = execute(&cli).and_then(|o| {
        match &cli.output {
            Some(path) => std::fs::write(path, &o.text)?,
            None => out.write_all(o.text.as_bytes())?,
        }
        Ok(o.code)
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
