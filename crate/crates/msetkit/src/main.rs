use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use msetkit::io::{format_monoid, read_monoid, read_mset_over};
use msetkit::report::{to_json, ProfileDocument, ReportDocument, SuiteDocument};
use msetkit::{cache, suite, Error};
use msetkit_core::enumeration::canonical_form;
use msetkit_core::flatness::enumerate_points;
use msetkit_core::harness::{check_monoid, profile, PropertyProfile};
use msetkit_core::hom::DEFAULT_HOM_CAP;
use msetkit_core::preservation::Bounds;
use msetkit_core::topos::{alpha, exponential, omega};
use msetkit_core::Monoid;

/// Topos structure of right actions of finite monoids.
#[derive(Parser)]
#[command(name = "msetkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a monoid table.
    Validate { monoid: PathBuf },
    /// Print the topos properties read off the table.
    Profile {
        monoid: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the subobject classifier: the right ideals and their action.
    Omega { monoid: PathBuf },
    /// Print the exponential Q^P of two M-set files.
    Exp {
        monoid: PathBuf,
        p: PathBuf,
        q: PathBuf,
        /// Search-node cap for the carrier.
        #[arg(long, default_value_t = DEFAULT_HOM_CAP)]
        cap: usize,
    },
    /// Print the flat left M-sets up to a size and the maps between them.
    Points {
        monoid: PathBuf,
        /// Largest size (defaults to the monoid order).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run every theorem check on one monoid.
    Check {
        monoid: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run every theorem check on every monoid up to an order.
    Harness {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one monoid file per isomorphism class, named by canonical hex.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Clone, Copy)]
struct BoundArgs {
    /// Largest M-set size in the blind enumeration.
    #[arg(long, default_value_t = Bounds::default().blind)]
    blind: usize,
    /// Largest object size used in products and equalizers.
    #[arg(long, default_value_t = Bounds::default().pair)]
    pair: usize,
    /// Largest object size used in pullback cospans.
    #[arg(long, default_value_t = Bounds::default().triple)]
    triple: usize,
    /// Largest carrier built for products and powers.
    #[arg(long, default_value_t = Bounds::default().carrier_cap)]
    carrier_cap: usize,
    /// Search-node cap for hom-sets.
    #[arg(long, default_value_t = Bounds::default().hom_cap)]
    hom_cap: usize,
}

impl From<BoundArgs> for Bounds {
    fn from(b: BoundArgs) -> Self {
        Self {
            blind: b.blind,
            pair: b.pair,
            triple: b.triple,
            carrier_cap: b.carrier_cap,
            hom_cap: b.hom_cap,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { output, error }) => {
            print!("{output}");
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}

/// An error, plus whatever was produced before it.
struct Failure {
    output: String,
    error: Error,
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Self {
            output: String::new(),
            error: e.into(),
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Validate { monoid } => {
            let m = read_monoid(&monoid)?;
            Ok(format!(
                "ok: monoid of order {} with identity {}\n",
                m.order(),
                m.identity()
            ))
        }
        Command::Profile { monoid, json } => {
            let m = Arc::new(read_monoid(&monoid)?);
            let p = profile(&m);
            if json {
                Ok(to_json(&ProfileDocument::new(&m, p))?)
            } else {
                Ok(render_profile(&p))
            }
        }
        Command::Omega { monoid } => cmd_omega(&monoid),
        Command::Exp { monoid, p, q, cap } => cmd_exp(&monoid, &p, &q, cap),
        Command::Points { monoid, bound } => cmd_points(&monoid, bound),
        Command::Check {
            monoid,
            bounds,
            json,
        } => {
            let m = read_monoid(&monoid)?;
            let bounds = Bounds::from(bounds);
            let report = check_monoid(&m, bounds)?;
            let output = if json {
                to_json(&ReportDocument::new(&m, &report, bounds))?
            } else {
                render_check(&report)
            };
            finish(output, report.disagreements())
        }
        Command::Harness {
            max_order,
            bounds,
            out,
        } => {
            let report = suite::run_suite(max_order, bounds.into())?;
            let json = to_json(&SuiteDocument::from(&report))?;
            let mut output = String::new();
            match out {
                Some(path) => {
                    fs::write(&path, json).map_err(|e| Error::Io { path, source: e })?;
                    let _ = writeln!(
                        output,
                        "{} monoids, {} disagreements, {} unconfirmed",
                        report.monoids.len(),
                        report.disagreements,
                        report.unconfirmed
                    );
                }
                None => output = json,
            }
            finish(output, report.disagreements)
        }
        Command::Enumerate { order, out } => {
            let monoids = cache::monoids_of_order(order)?;
            fs::create_dir_all(&out).map_err(|e| Error::Io {
                path: out.clone(),
                source: e,
            })?;
            for m in &monoids {
                let path = out.join(format!("{}.monoid", canonical_form(m).hex()));
                fs::write(&path, format_monoid(m)).map_err(|e| Error::Io { path, source: e })?;
            }
            Ok(format!(
                "{} monoids of order {order} written to {}\n",
                monoids.len(),
                out.display()
            ))
        }
    }
}

fn finish(output: String, disagreements: usize) -> Result<String, Failure> {
    if disagreements == 0 {
        Ok(output)
    } else {
        Err(Failure {
            output,
            error: Error::Disagreement(disagreements),
        })
    }
}

fn render_profile(p: &PropertyProfile) -> String {
    let flags = [
        ("boolean_atomic", p.boolean_atomic),
        ("local", p.local),
        ("colocal", p.colocal),
        ("bilocal", p.bilocal),
        ("de_morgan", p.de_morgan),
        ("strongly_connected", p.strongly_connected),
        ("totally_connected", p.totally_connected),
        ("sufficiently_cohesive", p.sufficiently_cohesive),
        ("punctually_lc", p.punctually_lc),
        ("copunctually_lc", p.copunctually_lc),
        ("left_cancellative", p.left_cancellative),
        ("right_cancellative", p.right_cancellative),
        ("trivial", p.trivial),
    ];
    let mut out = String::new();
    for (name, value) in flags {
        let _ = writeln!(out, "{name:<27}{value}");
    }
    let _ = writeln!(
        out,
        "{:<27}{}",
        "minimal_rf_generating_size", p.minimal_rf_generating_size
    );
    out
}

fn render_check(report: &msetkit_core::harness::MonoidReport) -> String {
    let mut out = String::new();
    for t in &report.theorems {
        let _ = writeln!(
            out,
            "{:?}: verdict={} agreement={}",
            t.theorem, t.verdict, t.agreement
        );
        for c in &t.conditions {
            let _ = writeln!(out, "  {:<45}{:<6} {:?}", c.id, c.holds, c.status);
        }
    }
    let _ = writeln!(
        out,
        "disagreements={} unconfirmed={}",
        report.disagreements(),
        report.unconfirmed()
    );
    out
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_omega(path: &Path) -> Result<String, Failure> {
    let m = Arc::new(read_monoid(path)?);
    let o = omega(&m)?;
    let mut out = String::new();
    let _ = writeln!(out, "ideals: {}", o.len());
    for i in 0..o.len() {
        let mark = match i {
            _ if i == o.top => " (top)",
            _ if i == o.empty_ideal => " (empty)",
            _ => "",
        };
        let _ = writeln!(out, "  {i}: {{{}}}{mark}", join(o.members(i)));
    }
    let _ = writeln!(out, "action (row I lists I·m for each m):");
    for i in 0..o.len() {
        let _ = writeln!(out, "  {i}: {}", join(o.omega.row(i).iter().copied()));
    }
    let a = alpha(&o.omega);
    let _ = writeln!(
        out,
        "fixed points: {}",
        join(a.fixed_points.iter().copied())
    );
    let _ = writeln!(out, "components: {}", a.components);
    Ok(out)
}

fn cmd_exp(monoid: &Path, p: &Path, q: &Path, cap: usize) -> Result<String, Failure> {
    let m = Arc::new(read_monoid(monoid)?);
    let p = read_mset_over(p, &m, monoid)?;
    let q = read_mset_over(q, &m, monoid)?;
    let exp = exponential(&p, &q, cap)?;
    let mut out = String::new();
    let _ = writeln!(out, "carrier: {}", exp.object.size());
    let _ = writeln!(out, "maps (entry n·|P|+p is f(n, p)):");
    for (i, f) in exp.maps.iter().enumerate() {
        let _ = writeln!(out, "  {i}: {}", join(f.iter().copied()));
    }
    let _ = writeln!(out, "action (row f lists f·m for each m):");
    for i in 0..exp.object.size() {
        let _ = writeln!(out, "  {i}: {}", join(exp.object.row(i).iter().copied()));
    }
    let _ = writeln!(
        out,
        "ev (entry f·|P|+p): {}",
        join(exp.evaluation.map().iter().copied())
    );
    Ok(out)
}

fn cmd_points(path: &Path, bound: Option<usize>) -> Result<String, Failure> {
    let m: Arc<Monoid> = Arc::new(read_monoid(path)?);
    let bound = bound.unwrap_or(m.order());
    let pts = enumerate_points(&m, bound, DEFAULT_HOM_CAP)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "flat left M-sets of size at most {bound}: {}",
        pts.objects.len()
    );
    for (i, b) in pts.objects.iter().enumerate() {
        let rows: Vec<String> = b.rows().into_iter().map(join).collect();
        let _ = writeln!(
            out,
            "  {i}: size {} (row m lists m·x): {}",
            b.size(),
            rows.join(" | ")
        );
    }
    let show = |p: Option<usize>| p.map_or_else(|| "none".to_string(), |i| i.to_string());
    let _ = writeln!(out, "initial point: {}", show(pts.initial));
    let _ = writeln!(out, "terminal point: {}", show(pts.terminal));
    let _ = writeln!(out, "essential points:");
    for e in &pts.essential {
        let _ = writeln!(
            out,
            "  Me for e in {{{}}}: size {}, object {}",
            join(e.idempotents.iter().copied()),
            e.set.size(),
            show(e.object)
        );
    }
    Ok(out)
}
