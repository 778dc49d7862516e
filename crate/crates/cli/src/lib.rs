// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `cubcong`.
//!
//! Every command prints either plain text or a JSON envelope
//! `{"command": ..., "params": ..., "results": [...]}`.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cubcong::arith::{self, primes_between};
use cubcong::character::{character_for_cubic, CubicCharacter, CubicData};
use cubcong::criteria::{admissible_prime, surd_sides, CriterionReport, CubicCriteria};
use cubcong::{ClassGroup, FormClass, Statement, SymbolValue};

pub const MAX_COEFFICIENT: i64 = 1_000_000;
pub const MAX_PRIME: u64 = 100_000_000;
pub const MIN_PRIME: u64 = 5;

#[derive(Debug, Parser)]
#[command(name = "cubcong", version, about = "Cubic congruences and binary quadratic forms")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory holding class groups as JSON, keyed by discriminant.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the reduced forms of discriminant 4D.
    #[command(allow_negative_numbers = true)]
    Classgroup {
        #[arg(short = 'D', value_name = "D")]
        d: i64,
    },
    /// The subgroup G(a1,a2,a3) of H(4 D1).
    #[command(allow_negative_numbers = true)]
    Subgroup {
        #[command(flatten)]
        cubic: CubicArgs,
        /// Largest prime tried as an index-3 witness.
        #[arg(long, default_value_t = 1000)]
        witness_bound: u64,
    },
    /// Every statement at a single prime.
    #[command(allow_negative_numbers = true)]
    Report {
        #[command(flatten)]
        cubic: CubicArgs,
        #[arg(short = 'p', value_name = "P")]
        p: u64,
    },
    /// Checks that all statements agree over a range of primes.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[command(flatten)]
        cubic: CubicArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Compares the cubic-surd residue test with class membership.
    #[command(allow_negative_numbers = true)]
    Cubres {
        #[arg(value_name = "P")]
        pp: i64,
        #[arg(value_name = "D")]
        d: i64,
        #[command(flatten)]
        range: RangeArgs,
    },
}

#[derive(Debug, Clone, Copy, Args, Serialize, Deserialize, PartialEq, Eq)]
pub struct CubicArgs {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

#[derive(Debug, Clone, Copy, Args, Serialize, Deserialize, PartialEq, Eq)]
pub struct RangeArgs {
    #[arg(long, default_value_t = MIN_PRIME)]
    pub pmin: u64,
    #[arg(long)]
    pub pmax: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<P, R> {
    pub command: String,
    pub params: P,
    pub results: Vec<R>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassgroupParams {
    #[serde(rename = "D")]
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassgroupResult {
    #[serde(rename = "D")]
    pub d: i64,
    pub discriminant: i64,
    pub class_number: usize,
    pub classes: Vec<FormClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupParams {
    #[serde(flatten)]
    pub cubic: CubicArgs,
    pub witness_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupResult {
    pub data: CubicData,
    pub discriminant: i64,
    pub class_number: usize,
    pub members: Vec<FormClass>,
    pub index: usize,
    pub witness: Option<u64>,
    pub chi: Vec<(FormClass, SymbolValue)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(flatten)]
    pub cubic: CubicArgs,
    pub p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    #[serde(flatten)]
    pub cubic: CubicArgs,
    #[serde(flatten)]
    pub range: RangeArgs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubresParams {
    #[serde(rename = "P")]
    pub pp: i64,
    #[serde(rename = "D")]
    pub d: i64,
    #[serde(flatten)]
    pub range: RangeArgs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubresEntry {
    pub p: u64,
    pub residue: bool,
    pub represented: bool,
    pub agree: bool,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    /// Some statements disagreed.
    Mismatch,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] cubcong::Error),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn check_coefficients(values: &[(&str, i64)]) -> CliResult<()> {
    for (name, v) in values {
        if v.abs() > MAX_COEFFICIENT {
            return Err(CliError::Usage(format!("|{name}| must be at most {MAX_COEFFICIENT}")));
        }
    }
    Ok(())
}

fn check_range(r: &RangeArgs) -> CliResult<()> {
    if r.pmin < MIN_PRIME || r.pmax < r.pmin {
        return Err(CliError::Usage(format!("need pmax >= pmin >= {MIN_PRIME}")));
    }
    if r.pmax > MAX_PRIME {
        return Err(CliError::Usage(format!("pmax must be at most {MAX_PRIME}")));
    }
    Ok(())
}

fn check_cubic(c: &CubicArgs) -> CliResult<()> {
    check_coefficients(&[("a1", c.a1), ("a2", c.a2), ("a3", c.a3)])
}

/// `x^3 - x + 2` style rendering.
pub fn polynomial(c: &CubicArgs) -> String {
    let mut s = String::from("x^3");
    for (coef, mono) in [(c.a1, "x^2"), (c.a2, "x"), (c.a3, "")] {
        if coef == 0 {
            continue;
        }
        let sign = if coef < 0 { '-' } else { '+' };
        let mag = coef.unsigned_abs();
        if mag == 1 && !mono.is_empty() {
            let _ = write!(s, " {sign} {mono}");
        } else {
            let _ = write!(s, " {sign} {mag}{mono}");
        }
    }
    s
}

fn class_list(ks: &[FormClass]) -> String {
    ks.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
}

/// `H(4D)`, read from or written to the cache directory when one is given.
pub fn class_group(cache: Option<&Path>, d: i64) -> CliResult<ClassGroup> {
    let Some(dir) = cache else {
        return Ok(ClassGroup::enumerate(d)?);
    };
    let path = dir.join(format!("disc_{}.json", 4 * d as i128));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(h) = serde_json::from_str::<ClassGroup>(&text) {
            if h.d == d {
                return Ok(h);
            }
        }
    }
    let h = ClassGroup::enumerate(d)?;
    fs::create_dir_all(dir).map_err(|e| CliError::Cache(format!("{}: {e}", dir.display())))?;
    let text = serde_json::to_string(&h).map_err(|e| CliError::Cache(e.to_string()))?;
    fs::write(&path, text).map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
    Ok(h)
}

fn emit<P: Serialize, R: Serialize>(
    out: &mut dyn Write,
    command: &str,
    params: P,
    results: Vec<R>,
) -> CliResult<()> {
    let env = Envelope { command: command.to_string(), params, results };
    let text = serde_json::to_string_pretty(&env).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn criteria_for(cache: Option<&Path>, c: &CubicArgs) -> CliResult<CubicCriteria> {
    let data = CubicData::new(c.a1, c.a2, c.a3)?;
    let subgroup = character_for_cubic(&data)
        .map_err(CliError::from)
        .and_then(|chi| {
            let h = class_group(cache, chi.d())?;
            Ok(chi.subgroup_in(h)?)
        })
        .map_err(|e| e.to_string());
    Ok(CubicCriteria::from_parts(data, subgroup))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<Outcome> {
    let cache = cli.cache.as_deref();
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classgroup { d } => {
            if *d >= 0 {
                return Err(CliError::Usage("D must be negative".into()));
            }
            let h = class_group(cache, *d)?;
            if json {
                let r = ClassgroupResult {
                    d: *d,
                    discriminant: 4 * d,
                    class_number: h.order(),
                    classes: h.classes,
                };
                emit(out, "classgroup", ClassgroupParams { d: *d }, vec![r])?;
            } else {
                writeln!(out, "h({}) = {}", 4 * d, h.order())?;
                for k in &h.classes {
                    writeln!(out, "{k}")?;
                }
            }
            Ok(Outcome::Consistent)
        }
        Command::Subgroup { cubic, witness_bound } => {
            check_cubic(cubic)?;
            let data = CubicData::new(cubic.a1, cubic.a2, cubic.a3)?;
            let chi = character_for_cubic(&data)?;
            let h = class_group(cache, chi.d())?;
            let g = chi.subgroup_in(h)?;
            let witness = chi.witness_index3(*witness_bound);
            if json {
                let r = SubgroupResult {
                    discriminant: 4 * g.d,
                    class_number: g.ambient.order(),
                    members: g.members.clone(),
                    index: g.index(),
                    witness,
                    chi: g.chi_table.clone(),
                    data,
                };
                let params = SubgroupParams { cubic: *cubic, witness_bound: *witness_bound };
                emit(out, "subgroup", params, vec![r])?;
            } else {
                write_subgroup_text(out, cubic, &data, &chi, &g, witness)?;
            }
            Ok(Outcome::Consistent)
        }
        Command::Report { cubic, p } => {
            check_cubic(cubic)?;
            let report = criteria_for(cache, cubic)?.evaluate(*p)?;
            let outcome = if report.consistent() { Outcome::Consistent } else { Outcome::Mismatch };
            if json {
                emit(out, "report", ReportParams { cubic: *cubic, p: *p }, vec![report])?;
            } else {
                write_report_text(out, cubic, &report)?;
            }
            Ok(outcome)
        }
        Command::Scan { cubic, range } => {
            check_cubic(cubic)?;
            check_range(range)?;
            let crit = criteria_for(cache, cubic)?;
            let primes = primes_between(range.pmin, range.pmax);
            let (usable, excluded): (Vec<u64>, Vec<u64>) =
                primes.iter().partition(|&&p| admissible_prime(&crit.data, p));
            let reports = usable
                .par_iter()
                .map(|&p| crit.evaluate(p))
                .collect::<Result<Vec<_>, _>>()?;
            let mismatches: Vec<&CriterionReport> = reports.iter().filter(|r| !r.consistent()).collect();
            if json {
                let params = ScanParams { cubic: *cubic, range: *range };
                emit(out, "scan", params, reports.clone())?;
            } else {
                writeln!(out, "{}, primes {}..={}", polynomial(cubic), range.pmin, range.pmax)?;
                writeln!(out, "checked: {}", reports.len())?;
                writeln!(out, "excluded (p | D0 Q0): {}", join(&excluded))?;
                if crit.subgroup().is_none() {
                    writeln!(out, "statement (ii) skipped: no class group for D1 = {}", crit.data.d1)?;
                }
                let three: Vec<u64> = reports
                    .iter()
                    .filter(|r| r.root_count == 3)
                    .map(|r| r.p)
                    .collect();
                writeln!(out, "three-root primes ({}): {}", three.len(), join(&three))?;
                for r in &mismatches {
                    let who: Vec<String> = r.disagreements().iter().map(|s| s.to_string()).collect();
                    writeln!(out, "mismatch at p = {}: {}", r.p, who.join(", "))?;
                }
                writeln!(out, "{} mismatches", mismatches.len())?;
            }
            Ok(if mismatches.is_empty() { Outcome::Consistent } else { Outcome::Mismatch })
        }
        Command::Cubres { pp, d, range } => {
            check_coefficients(&[("P", *pp), ("D", *d)])?;
            check_range(range)?;
            let chi = CubicCharacter::new((*pp).into(), *d)?;
            let q = chi.q().clone();
            let h = class_group(cache, *d)?;
            let g = chi.subgroup_in(h)?;
            let primes: Vec<u64> = primes_between(range.pmin, range.pmax)
                .into_iter()
                .filter(|&p| {
                    p % 3 == 1
                        && arith::residue_big(&q, p) != 0
                        && arith::jacobi(-27 * *d as i128, p) == 1
                })
                .collect();
            let entries = primes
                .par_iter()
                .map(|&p| {
                    surd_sides(&g, p).map(|(residue, represented)| CubresEntry {
                        p,
                        residue,
                        represented,
                        agree: residue == represented,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let agreeing = entries.iter().filter(|e| e.agree).count();
            if json {
                emit(out, "cubres", CubresParams { pp: *pp, d: *d, range: *range }, entries.clone())?;
            } else {
                writeln!(out, "P = {pp}, D = {d}, Q = {q}, G = {}", class_list(&g.members))?;
                for e in &entries {
                    writeln!(
                        out,
                        "p = {}: residue {}, represented {}{}",
                        e.p,
                        e.residue,
                        e.represented,
                        if e.agree { "" } else { "  MISMATCH" }
                    )?;
                }
                writeln!(out, "agreement: {agreeing}/{}", entries.len())?;
            }
            Ok(if agreeing == entries.len() { Outcome::Consistent } else { Outcome::Mismatch })
        }
    }
}

fn join(ps: &[u64]) -> String {
    ps.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn write_subgroup_text(
    out: &mut dyn Write,
    cubic: &CubicArgs,
    data: &CubicData,
    chi: &CubicCharacter,
    g: &cubcong::Subgroup,
    witness: Option<u64>,
) -> CliResult<()> {
    writeln!(out, "cubic: {}", polynomial(cubic))?;
    writeln!(out, "P0 = {}, Q0 = {}, D0 = {}", data.p0, data.q0, data.d0)?;
    writeln!(
        out,
        "P1 = {}, Q1 = {} = 2^{} * ({})^3, D1 = {}",
        data.p1, data.q1, data.two_exponent, data.cube_root, data.d1
    )?;
    writeln!(out, "H({}): {} classes", 4 * chi.d(), g.ambient.order())?;
    writeln!(out, "G: {}", class_list(&g.members))?;
    match witness {
        Some(w) => writeln!(out, "index: {} (witness prime {w})", g.index())?,
        None => writeln!(out, "index: {} (no witness found; 1 or 3)", g.index())?,
    }
    Ok(())
}

fn write_report_text(out: &mut dyn Write, cubic: &CubicArgs, r: &CriterionReport) -> CliResult<()> {
    writeln!(out, "{} mod {}", polynomial(cubic), r.p)?;
    writeln!(out, "roots: {}, (D0/p) = {}", r.root_count, r.legendre_d0)?;
    for s in Statement::ALL {
        if let Some(v) = r.verdicts.get(&s) {
            writeln!(out, "({s}) {v}")?;
        } else if let Some(why) = r.skipped.get(&s) {
            writeln!(out, "({s}) skipped: {why}")?;
        }
    }
    writeln!(out, "{}", if r.consistent() { "consistent" } else { "MISMATCH" })?;
    Ok(())
}
