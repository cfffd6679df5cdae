use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use perihall::chi::ChiMap;
use perihall::dh::{Dh, DhElem};
use perihall::verify::{Session, SessionConfig, Status};
use perihall::{json, Budget, KClass, Quiver};
use serde_json::json;

/// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a check or
/// computation exceeded the enumeration budget.
const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "perihall",
    version,
    about = "Exact Hall algebras of two-periodic complexes of quiver representations"
)]
struct Cli {
    /// Quiver JSON: {"vertices": [...], "arrows": [[from, to], ...]}. Default: A_2.
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,

    /// Field size (2, 3 or 5).
    #[arg(long, global = true, default_value_t = 2)]
    q: u32,

    /// Dimension bound per vertex, comma separated. Default: 2 at every vertex.
    #[arg(long, global = true, value_delimiter = ',')]
    dims: Option<Vec<usize>>,

    /// Largest single enumeration allowed.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Reps,
    Complexes,
}

#[derive(Subcommand)]
enum Command {
    /// Print the session parameters.
    Info,
    /// List iso-classes below the dimension bound as JSON.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Hall number g^L_{M,N}: subobjects of L isomorphic to N with quotient M.
    Gnum { l: String, m: String, n: String },
    /// Product of two elements of DH(A).
    Mul { x: String, y: String },
    /// Coproduct of an element of DH(A).
    Coproduct {
        x: String,
        /// `euler`, `chi0`, or a JSON file {"name", "matrix"}.
        #[arg(long, default_value = "chi0")]
        chi: String,
        /// Use the unextended coproduct Δ'_χ instead of Δ_χ.
        #[arg(long)]
        prime: bool,
    },
    /// Run verification checks.
    Verify {
        /// Check ids, comma separated, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Zero the timings so reports are byte-reproducible.
        #[arg(long)]
        deterministic: bool,
        /// Extra χ map to run alongside the built-in ones.
        #[arg(long, default_value = "chi0")]
        chi: String,
    },
}

/// An error tagged with the exit code it maps to.
struct Exit(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Exit {
    fn from(e: E) -> Self {
        let e = e.into();
        let budget = e.downcast_ref::<perihall::Error>().is_some_and(|e| e.is_budget());
        Exit(if budget { EXIT_BUDGET } else { EXIT_CONFIG }, e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn load_chi(spec: &str, quiver: &Quiver) -> anyhow::Result<ChiMap> {
    match spec {
        "euler" | "chi0" => Ok(ChiMap::builtin(spec, quiver)?),
        path => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading χ map {path}"))?;
            Ok(serde_json::from_str(&text).with_context(|| format!("parsing χ map {path}"))?)
        }
    }
}

fn config(cli: &Cli) -> anyhow::Result<SessionConfig> {
    let quiver = match &cli.quiver {
        Some(p) => Quiver::load(p).with_context(|| format!("loading quiver {}", p.display()))?,
        None => Quiver::a_n(2),
    };
    let dims = cli.dims.clone().unwrap_or_else(|| vec![2; quiver.num_vertices()]);
    let mut cfg = SessionConfig::new(quiver, cli.q, dims);
    cfg.quiver_path = cli.quiver.clone();
    cfg.budget = Budget(cli.budget);
    Ok(cfg)
}

fn parse_class(text: &str, n: usize) -> anyhow::Result<KClass> {
    let v = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| anyhow!("bad class entry {s:?} in {text:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if v.len() != n {
        bail!("class {text:?} has {} entries, the quiver has {n} vertices", v.len());
    }
    Ok(KClass(v))
}

/// Element tokens: `E:<rep>`, `F:<rep>`, `K:<class>`, `Ks:<class>`,
/// `C:<rep>` for C_A and `Cs:<rep>` for C_A^*; `1` is the unit.
fn parse_element(dh: &Dh, text: &str) -> anyhow::Result<DhElem> {
    let reps = dh.reps();
    let n = reps.nv();
    if text == "1" {
        return Ok(dh.unit());
    }
    let (tag, arg) = text.split_once(':').ok_or_else(|| anyhow!("expected TAG:ARG, got {text:?}"))?;
    Ok(match tag {
        "E" => dh.e_element(&reps.parse_key(arg)?)?,
        "F" => dh.f_element(&reps.parse_key(arg)?)?,
        "K" => dh.k_element(parse_class(arg, n)?),
        "Ks" => dh.k_star_element(parse_class(arg, n)?),
        "C" => dh.core_element(reps.parse_key(arg)?, reps.zero_key()),
        "Cs" => dh.core_element(reps.zero_key(), reps.parse_key(arg)?),
        _ => bail!("unknown element tag {tag:?}; expected E, F, K, Ks, C or Cs"),
    })
}

fn print_json(v: &serde_json::Value) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Exit> {
    let mut cfg = config(&cli)?;
    if let Command::Verify { checks, deterministic, chi, .. } = &cli.command {
        cfg.checks = checks.clone();
        cfg.deterministic = *deterministic;
        cfg.chi = load_chi(chi, &cfg.quiver)?;
    }
    let session = Session::new(cfg)?;
    let cfg = session.config();
    let dh = session.dh();
    match cli.command {
        Command::Info => {
            let checks: Vec<_> =
                perihall::verify::CHECKS.iter().map(|(id, anchor)| json!({ "check": id, "anchor": anchor })).collect();
            print_json(&json!({
                "quiver": serde_json::from_str::<serde_json::Value>(&cfg.quiver.to_json())?,
                "quiver_path": cfg.quiver_path,
                "q": cfg.q,
                "dims": cfg.dim_bound,
                "budget": cfg.budget.0,
                "chi": cfg.chi,
                "checks": checks,
            }))?;
        }
        Command::Enumerate { kind } => {
            let v = match kind {
                Kind::Reps => {
                    let keys = dh.reps().enumerate_reps(&cfg.dim_bound)?;
                    json!(keys.iter().map(|k| k.to_string()).collect::<Vec<_>>())
                }
                Kind::Complexes => json!(dh.cx().enumerate_keys(&cfg.dim_bound)?),
            };
            print_json(&v)?;
        }
        Command::Gnum { l, m, n } => {
            let reps = dh.reps();
            let g = reps.hall_number(&reps.parse_key(&l)?, &reps.parse_key(&m)?, &reps.parse_key(&n)?)?;
            println!("{g}");
        }
        Command::Mul { x, y } => {
            let p = dh.mul(&parse_element(dh, &x)?, &parse_element(dh, &y)?)?;
            print_json(&json::dh_element(&p))?;
        }
        Command::Coproduct { x, chi, prime } => {
            let chi = load_chi(&chi, &cfg.quiver)?;
            let x = parse_element(dh, &x)?;
            let d = if prime { dh.delta_prime(&x, &chi)? } else { dh.delta(&x, &chi)? };
            print_json(&json::tensor(&d))?;
        }
        Command::Verify { report, .. } => {
            let reports = session.run_all()?;
            for r in &reports {
                let status = serde_json::to_value(r.status)?;
                let status = status.as_str().unwrap_or_default();
                match &r.detail {
                    Some(d) => println!("{:<16} {status:<14} {:>7} ms  {d}", r.check, r.ms),
                    None => println!("{:<16} {status:<14} {:>7} ms", r.check, r.ms),
                }
            }
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&reports)?;
                std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(EXIT_FAIL);
            }
            if reports.iter().any(|r| r.status == Status::SkippedBudget) {
                return Ok(EXIT_BUDGET);
            }
        }
    }
    Ok(0)
}
