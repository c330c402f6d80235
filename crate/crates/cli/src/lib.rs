//! The `cisg` command line.
//!
//! [`run`] takes the full argument list and returns the exit code together
//! with everything that would be printed, so it can be tested in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use ci_semigroups::classify::{evaluate, ClassReport};
use ci_semigroups::enumerate::{enumerate_by_genus, sweep_parallel, SweepReport};
use ci_semigroups::factorization::factorize;
use ci_semigroups::invariants::{alpha_profile, beta_profile, gamma_profile, tau_profile, InvariantProfile};
use ci_semigroups::{
    build_alpha_rectangular, ci_not_free_family, glue, rb_family, Class, NumericalSemigroup,
};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "cisg", version, about = "Numerical semigroups around complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class flags and witnesses of a semigroup.
    Classify {
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// τ, α, β, γ profiles and plane-branch gaps (always JSON).
    Invariants {
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// The Apéry set with respect to N (default: the multiplicity).
    Apery {
        generators: String,
        n: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// All representations of an integer (always JSON).
    Factorize {
        generators: String,
        #[arg(allow_negative_numbers = true)]
        element: i64,
        #[arg(long)]
        json: bool,
    },
    /// Glues "G1|d1|G2|d2" into d2·G1 + d1·G2.
    Glue {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Named families of examples.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// An α-rectangular semigroup with multiplicity m and embedding dimension nu.
    BuildAlpha {
        m: u64,
        nu: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classifies every semigroup up to a genus bound.
    Sweep {
        #[arg(long)]
        genus_max: usize,
        #[arg(long)]
        json: bool,
        /// Writes one row per semigroup: generators, genus, ten flag bits.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// ⟨a^p, a^p + b, …, a^p + a^{p−1}b⟩.
    Rb {
        a: u64,
        b: u64,
        p: u32,
        #[arg(long)]
        json: bool,
    },
    /// p3·⟨p1, p2⟩ + p4·⟨p1, p2⟩.
    Cinf {
        p1: u64,
        p2: u64,
        p3: u64,
        p4: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn fail(message: impl std::fmt::Display) -> Self {
        Output { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Runs the command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Output::ok(stdout),
        Err(message) => Output::fail(message),
    }
}

type CmdResult = Result<String, String>;

fn semigroup(text: &str) -> Result<NumericalSemigroup, String> {
    text.parse().map_err(|e: ci_semigroups::semigroup::ParseSemigroupError| e.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Classify { generators, json: as_json } => {
            let s = semigroup(&generators)?;
            let report = evaluate(&s);
            Ok(if as_json { json(&report) } else { render_report(&s, &report, false) })
        }
        Command::Invariants { generators, .. } => invariants(&semigroup(&generators)?),
        Command::Apery { generators, n, json: as_json } => {
            let s = semigroup(&generators)?;
            let n = n.unwrap_or(s.multiplicity() as i64);
            let ap = s.apery(n).map_err(|e| e.to_string())?;
            Ok(if as_json {
                json(&ap)
            } else {
                format!("{}\n", join(&ap.sorted()))
            })
        }
        Command::Factorize { generators, element, .. } => {
            let s = semigroup(&generators)?;
            Ok(json(&factorize(&s, element).map_err(|e| e.to_string())?))
        }
        Command::Glue { spec, json: as_json } => {
            let s = glue_spec(&spec)?;
            Ok(render_report(&s, &evaluate(&s), as_json))
        }
        Command::Family { family } => {
            let (s, as_json) = match family {
                Family::Rb { a, b, p, json } => (rb_family(a, b, p), json),
                Family::Cinf { p1, p2, p3, p4, json } => (ci_not_free_family(p1, p2, p3, p4), json),
            };
            let s = s.map_err(|e| e.to_string())?;
            Ok(render_report(&s, &evaluate(&s), as_json))
        }
        Command::BuildAlpha { m, nu, json: as_json } => {
            let s = build_alpha_rectangular(m, nu).map_err(|e| e.to_string())?;
            Ok(render_report(&s, &evaluate(&s), as_json))
        }
        Command::Sweep { genus_max, json: as_json, csv } => {
            let report = match csv {
                Some(path) => sweep_with_csv(genus_max, &path)?,
                None => sweep_parallel(genus_max),
            };
            Ok(if as_json { json(&report) } else { render_sweep(&report) })
        }
    }
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn glue_spec(spec: &str) -> Result<NumericalSemigroup, String> {
    let parts: Vec<&str> = spec.split('|').map(str::trim).collect();
    let [g1, d1, g2, d2] = parts[..] else {
        return Err(format!("expected \"G1|d1|G2|d2\", got {spec:?}"));
    };
    let number = |t: &str| t.parse::<u64>().map_err(|_| format!("not a non-negative integer: {t:?}"));
    let s1 = semigroup(g1)?;
    let s2 = semigroup(g2)?;
    glue(&s1, number(d1)?, &s2, number(d2)?).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Labeled<'a> {
    semigroup: String,
    #[serde(flatten)]
    report: &'a ClassReport,
}

fn render_report(s: &NumericalSemigroup, report: &ClassReport, as_json: bool) -> String {
    if as_json {
        return json(&Labeled { semigroup: s.to_string(), report });
    }
    let mut out = String::new();
    let _ = writeln!(out, "semigroup: {s}");
    let _ = writeln!(out, "frobenius: {}", s.frobenius());
    let _ = writeln!(out, "genus: {}", s.genus());
    for class in Class::ALL {
        let _ = writeln!(out, "{}: {}", class.name(), report.flags.get(class));
    }
    if let Some(free) = &report.witnesses.free {
        let _ = writeln!(out, "free_order: {}", join(&free.order));
    }
    if let Some(betti) = &report.witnesses.betti {
        let _ = writeln!(out, "betti_a: {}", join(&betti.a));
    }
    out
}

#[derive(Serialize)]
struct InvariantsJson {
    generators: Vec<u64>,
    multiplicity: u64,
    frobenius: i64,
    genus: u64,
    tau: Vec<u64>,
    alpha: Vec<u64>,
    beta: Vec<u64>,
    gamma: Vec<u64>,
    plane_branch_gaps: Vec<i128>,
}

fn invariants(s: &NumericalSemigroup) -> CmdResult {
    let values = |p: ci_semigroups::Result<InvariantProfile>| p.map(|p| p.values).unwrap_or_default();
    let tau = values(tau_profile(s));
    let gens = s.generators();
    // g_{i+1} − (τ_i + 1)·g_i for i = 2..ν−1; positive throughout for a plane branch.
    let plane_branch_gaps = (1..gens.len().saturating_sub(1))
        .map(|i| gens[i + 1] as i128 - (tau[i - 1] as i128 + 1) * gens[i] as i128)
        .collect();
    Ok(json(&InvariantsJson {
        generators: gens.to_vec(),
        multiplicity: s.multiplicity(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        alpha: values(alpha_profile(s)),
        beta: values(beta_profile(s)),
        gamma: values(gamma_profile(s)),
        tau,
        plane_branch_gaps,
    }))
}

fn sweep_with_csv(genus_max: usize, path: &PathBuf) -> Result<SweepReport, String> {
    let mut writer = csv::Writer::from_path(path).map_err(|e| e.to_string())?;
    let mut header = vec!["generators".to_string(), "genus".to_string()];
    header.extend(Class::ALL.iter().map(|c| c.name().to_string()));
    writer.write_record(&header).map_err(|e| e.to_string())?;
    let mut report = SweepReport::new(genus_max);
    for s in enumerate_by_genus(genus_max) {
        let r = evaluate(&s);
        let mut row = vec![s.to_string(), s.genus().to_string()];
        row.extend(Class::ALL.iter().map(|&c| u8::from(r.flags.get(c)).to_string()));
        writer.write_record(&row).map_err(|e| e.to_string())?;
        report.record(&s, &r);
    }
    writer.flush().map_err(|e| e.to_string())?;
    Ok(report)
}

fn render_sweep(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "genus bound: {}", report.bound);
    let _ = writeln!(out, "semigroups: {}", report.total);
    let _ = writeln!(out, "per genus: {}", join(&report.per_genus));
    for (class, n) in &report.class_counts {
        let _ = writeln!(out, "{}: {n}", class.name());
    }
    let _ = writeln!(out, "violations: {}", report.violations.len());
    let _ = writeln!(out, "disagreements: {}", report.disagreements.len());
    for w in &report.strictness {
        let sample = w
            .witness
            .as_ref()
            .map_or("none".to_string(), |s| format!("⟨{}⟩ (genus {})", join(&s.generators), s.genus));
        let _ = writeln!(out, "strict {}: {sample}", w.implication);
    }
    out
}
