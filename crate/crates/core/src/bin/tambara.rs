use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use tambara::dress::{dress, dress_kernel_level};
use tambara::ideals::{generator_catalog, saturate, verify_theorem, TwoPart};
use tambara::{BurnsideElement, ExtensionSpec, GeneratorSet, Rational, TambaraIdeal, TauValue, Theorem, TheoremParams};

#[derive(Parser)]
#[command(name = "tambara", version, about = "Burnside Tambara functors of cyclic groups, Dress maps and trace ideals")]
struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a structure map to elements read as JSON from stdin.
    Eval {
        #[arg(long, value_enum)]
        op: Op,
        /// Level of the input; checked against the element.
        #[arg(long)]
        from: Option<u64>,
        /// Target level for res, tr and norm.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Dress map of the element on stdin.
    Dress {
        #[arg(long)]
        q: u64,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        level: u64,
    },
    /// Dress kernel of F_{q^N}/F_q at every level.
    Kernel {
        #[arg(long)]
        q: u64,
        #[arg(long = "N")]
        n: u64,
    },
    /// Tambara ideal generated by the elements in a JSON file.
    Saturate {
        #[arg(long = "N")]
        n: u64,
        /// JSON array of elements, or a catalog record; `-` reads stdin.
        #[arg(long)]
        gens: String,
    },
    /// Compare saturated catalog generators with the trace ideal.
    Verify(TheoremArgs),
    /// Print the generators listed for a theorem.
    Catalog(TheoremArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Add,
    Sub,
    Mul,
    Res,
    Tr,
    Norm,
    Card,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwoPartKind {
    C2,
    C4Embeddable,
    C4NonEmbeddable,
    Case1,
    Case2,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long = "N")]
    n: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long)]
    tau: Option<u64>,
    #[arg(long)]
    pi: Option<u64>,
    #[arg(long = "tau-e")]
    tau_e: Option<u64>,
    /// A rational number `a` or `a/b`.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long = "two-part", value_enum)]
    two_part: Option<TwoPartKind>,
}

type CliResult<T> = Result<T, String>;

impl TheoremArgs {
    fn theorem(&self) -> CliResult<Theorem> {
        self.theorem.parse().map_err(|e| format!("{e}"))
    }

    fn params(&self) -> CliResult<TheoremParams> {
        let tau = |v: Option<u64>| v.map(TauValue::new).transpose().map_err(|e| e.to_string());
        let two_part = match self.two_part {
            None => None,
            Some(TwoPartKind::C2) => Some(TwoPart::C2 {
                tau: tau(self.tau)?.ok_or("--two-part c2 needs --tau")?,
            }),
            Some(TwoPartKind::C4Embeddable) => Some(TwoPart::C4Embeddable),
            Some(TwoPartKind::C4NonEmbeddable) => Some(TwoPart::C4NonEmbeddable {
                pi: self.pi.ok_or("--two-part c4-non-embeddable needs --pi")?,
                tau_e: tau(self.tau_e)?.ok_or("--two-part c4-non-embeddable needs --tau-e")?,
            }),
            Some(TwoPartKind::Case1) => Some(TwoPart::Case1),
            Some(TwoPartKind::Case2) => Some(TwoPart::Case2),
        };
        Ok(TheoremParams {
            n: self.n,
            q: self.q,
            p: self.p,
            depth: self.depth,
            tau: tau(self.tau)?,
            pi: self.pi,
            tau_e: tau(self.tau_e)?,
            r: self.r.as_deref().map(str::parse::<Rational>).transpose().map_err(|e| e.to_string())?,
            two_part,
        })
    }
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_stdin<T: DeserializeOwned>() -> CliResult<T> {
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
    serde_json::from_str(&buf).map_err(|e| format!("malformed input: {e}"))
}

fn emit<T: Serialize>(value: &T) -> CliResult<()> {
    let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
    match writeln!(io::stdout(), "{text}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => other.map_err(|e| e.to_string()),
    }
}

fn lib<T>(r: tambara::Result<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

/// A bare element or an array of them.
fn parse_elements(value: serde_json::Value) -> CliResult<Vec<BurnsideElement>> {
    let parsed = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|x| vec![x])
    };
    parsed.map_err(|e| format!("malformed element: {e}"))
}

/// A bare generator array or a `catalog` record.
fn parse_generators(raw: &str) -> CliResult<GeneratorSet> {
    let mut value: serde_json::Value = serde_json::from_str(raw).map_err(|e| format!("malformed generators: {e}"))?;
    if let Some(inner) = value.get_mut("generators") {
        value = inner.take();
    }
    serde_json::from_value(value).map_err(|e| format!("malformed generators: {e}"))
}

#[derive(Serialize)]
struct CatalogRecord<'a> {
    theorem: &'static str,
    #[serde(rename = "N")]
    modulus: u64,
    generators: &'a GeneratorSet,
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Eval { op, from, to } => {
            let xs = parse_elements(read_stdin()?)?;
            if let (Some(from), Some(x)) = (from, xs.first()) {
                if x.level().order() != *from {
                    return Err(format!("--from {from} but the element lives at level {}", x.level().order()));
                }
            }
            let target = || to.ok_or_else(|| "this operation needs --to".to_string());
            let unary = |xs: &[BurnsideElement]| -> CliResult<BurnsideElement> {
                match xs {
                    [x] => Ok(x.clone()),
                    _ => Err(format!("expected one element, got {}", xs.len())),
                }
            };
            let binary = |xs: &[BurnsideElement]| -> CliResult<(BurnsideElement, BurnsideElement)> {
                match xs {
                    [a, b] => Ok((a.clone(), b.clone())),
                    _ => Err(format!("expected two elements, got {}", xs.len())),
                }
            };
            let out = match op {
                Op::Add => binary(&xs).and_then(|(a, b)| lib(a.checked_add(&b)))?,
                Op::Sub => binary(&xs).and_then(|(a, b)| lib(a.checked_sub(&b)))?,
                Op::Mul => binary(&xs).and_then(|(a, b)| lib(a.checked_mul(&b)))?,
                Op::Res => lib(unary(&xs)?.restrict(target()?))?,
                Op::Tr => lib(unary(&xs)?.transfer(target()?))?,
                Op::Norm => lib(unary(&xs)?.norm(target()?))?,
                Op::Card => {
                    let c = unary(&xs)?.card();
                    if cli.table {
                        println!("{c}");
                    } else {
                        let value = c.to_i64().map_or_else(|| json!(c.to_string()), |v| json!(v));
                        emit(&json!({ "card": value }))?;
                    }
                    return Ok(Outcome::Ok);
                }
            };
            if cli.table {
                println!("{out}");
            } else {
                emit(&out)?;
            }
        }
        Command::Dress { q, n, level } => {
            let spec = lib(ExtensionSpec::finite(*q, *n))?;
            let x = match parse_elements(read_stdin()?)?.as_slice() {
                [x] => x.clone(),
                xs => return Err(format!("expected one element, got {}", xs.len())),
            };
            if x.level().order() != *level {
                return Err(format!("--level {level} but the element lives at level {}", x.level().order()));
            }
            let y = lib(dress(&spec, &x))?;
            if cli.table {
                println!("{x}  ->  {y}");
            } else {
                emit(&y)?;
            }
        }
        Command::Kernel { q, n } => {
            let spec = lib(ExtensionSpec::finite(*q, *n))?;
            let levels = lib(tambara::numtheory::divisors(*n))?
                .into_iter()
                .map(|m| dress_kernel_level(&spec, m).map(|l| (m, l)))
                .collect::<tambara::Result<_>>();
            let ideal = lib(TambaraIdeal::from_levels(*n, lib(levels)?))?;
            show_ideal(cli, &ideal)?;
        }
        Command::Saturate { n, gens } => {
            let raw = if gens == "-" {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
                buf
            } else {
                fs::read_to_string(gens).map_err(|e| format!("{gens}: {e}"))?
            };
            let set = parse_generators(&raw)?;
            let ideal = lib(saturate(*n, &set))?;
            show_ideal(cli, &ideal)?;
        }
        Command::Verify(args) => {
            let report = lib(verify_theorem(args.theorem()?, &args.params()?))?;
            if cli.table {
                println!("{} N={} q={}", report.theorem, report.modulus, report.q.map_or("-".into(), |q| q.to_string()));
                for (m, l) in &report.levels {
                    let mark = if l.equal { "equal" } else if l.contained { "contained" } else { "DIFFERENT" };
                    println!("  level {m:>4}: {mark:<9}  computed {}", l.computed);
                }
                for c in &report.checks {
                    println!("  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
                }
                println!("verdict: {}", if report.verdict { "pass" } else { "fail" });
            } else {
                emit(&report)?;
            }
            return Ok(if report.verdict { Outcome::Ok } else { Outcome::Failed });
        }
        Command::Catalog(args) => {
            let entry = lib(generator_catalog(args.theorem()?, &args.params()?))?;
            if cli.table {
                println!("{} in C_{}", entry.theorem, entry.modulus);
                for (m, x) in entry.generators.iter() {
                    println!("  level {m:>4}: {x}");
                }
            } else {
                emit(&CatalogRecord {
                    theorem: entry.theorem.id(),
                    modulus: entry.modulus,
                    generators: &entry.generators,
                })?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn show_ideal(cli: &Cli, ideal: &TambaraIdeal) -> CliResult<()> {
    if cli.table {
        println!("{ideal}");
        Ok(())
    } else {
        emit(ideal)
    }
}
