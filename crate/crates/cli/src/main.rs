//! `ttk`: construct twisted torus knots T(p,q,3,s), certify their
//! unknotting tunnels, scan the certificate over coprime parameter
//! ranges, and compute diagram invariants.
//!
//! Exit codes: 0 success, 1 internal failure or failed selfcheck,
//! 2 parameter error, 3 theorem violation, 4 crossing cap exceeded.

mod selfcheck;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use ttk_core::{
    alexander_torus_closed_form, classify_tunnel, gauss_code, jones_capped,
    pd_code_of_closure, scan_theorem, torus_braid, twisted_torus_braid, BraidWord, Error,
    ScanOptions, TwistedTorusKnot, DEFAULT_CROSSING_CAP,
};

#[derive(Parser)]
#[command(name = "ttk", version, about = "Twisted torus knot tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructFormat {
    Braid,
    Pd,
    Gauss,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the braid word or diagram codes of T(p,q,3,s)
    Construct {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short, allow_negative_numbers = true, default_value_t = 0)]
        s: i64,
        /// Output form: braid word, PD code, Gauss code or JSON
        #[arg(long, value_enum, default_value_t = ConstructFormat::Braid)]
        format: ConstructFormat,
        /// Write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify which arc copy is the unknotting tunnel of T(p,q,3,s)
    Tunnel {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short, allow_negative_numbers = true, default_value_t = 0)]
        s: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify the tunnel certificate for every coprime pair with p <= pmax
    Scan {
        #[arg(long)]
        pmax: i64,
        /// Collect the (p1,p2) first-arrival histogram
        #[arg(long)]
        stats: bool,
        /// Cross-check the closed form against the brute-force walk
        #[arg(long)]
        cross_check_walk: bool,
        /// Skip the per-pair case-witness search
        #[arg(long)]
        no_witnesses: bool,
        /// Scan p values on multiple threads; output is unchanged
        #[arg(long)]
        parallel: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute Jones (state sum) and Alexander (closed form, s = 0 only)
    Invariants {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short, allow_negative_numbers = true, default_value_t = 0)]
        s: i64,
        /// Jones polynomial of the braid closure via the bracket state sum
        #[arg(long)]
        jones: bool,
        /// Alexander polynomial from the torus-knot closed form
        #[arg(long)]
        alexander: bool,
        /// Refuse state sums on diagrams with more crossings than this
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        max_crossings: usize,
        #[arg(long, value_enum, default_value_t = InvariantFormat::Text)]
        format: InvariantFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full built-in property suite
    Selfcheck {
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter(_) | Error::NotAKnot { .. } => 2,
        Error::TheoremViolation { .. } => 3,
        Error::CrossingCapExceeded { .. } => 4,
        Error::InexactDivision(_) => 1,
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), u8> {
    match output {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            1
        }),
        None => std::io::stdout().write_all(content.as_bytes()).map_err(|e| {
            eprintln!("error: {e}");
            1
        }),
    }
}

fn core_result<T>(result: ttk_core::Result<T>) -> Result<T, u8> {
    result.map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })
}

fn construct_json(k: &TwistedTorusKnot, b: &BraidWord) -> Value {
    let mut map = Map::new();
    map.insert("p".into(), k.p().into());
    map.insert("q".into(), k.q().into());
    map.insert("r".into(), k.r().into());
    map.insert("s".into(), k.s().into());
    map.insert("strands".into(), (b.strands() as u64).into());
    map.insert("crossings".into(), (b.crossing_count() as u64).into());
    map.insert("writhe".into(), b.writhe().into());
    map.insert(
        "letters".into(),
        Value::Array(b.letters().iter().map(|&g| g.into()).collect()),
    );
    Value::Object(map)
}

fn braid_text(b: &BraidWord) -> String {
    let letters: Vec<String> = b.letters().iter().map(|g| g.to_string()).collect();
    format!("strands {}\n{}\n", b.strands(), letters.join(" "))
}

fn run_construct(
    p: i64,
    q: i64,
    s: i64,
    format: ConstructFormat,
    output: &Option<PathBuf>,
) -> Result<(), u8> {
    let k = core_result(TwistedTorusKnot::new(p, q, s))?;
    let b = twisted_torus_braid(&k);
    let content = match format {
        ConstructFormat::Braid => braid_text(&b),
        ConstructFormat::Pd => core_result(pd_code_of_closure(&b))?.to_string(),
        ConstructFormat::Gauss => format!("{}\n", core_result(gauss_code(&b))?),
        ConstructFormat::Json => format!("{}\n", construct_json(&k, &b)),
    };
    emit(output, &content)
}

fn run_tunnel(p: i64, q: i64, s: i64, output: &Option<PathBuf>) -> Result<(), u8> {
    let k = core_result(TwistedTorusKnot::new(p, q, s))?;
    let cert = core_result(classify_tunnel(&k))?;
    emit(output, &format!("{}\n", cert.to_json()))
}

fn run_scan(pmax: i64, options: &ScanOptions, output: &Option<PathBuf>) -> Result<(), u8> {
    let report = core_result(scan_theorem(pmax, options))?;
    emit(output, &format!("{}\n", report.to_json()))?;
    if report.counterexamples.is_empty() {
        Ok(())
    } else {
        eprintln!(
            "error: scan flagged {} pair(s)",
            report.counterexamples.len()
        );
        Err(3)
    }
}

fn run_invariants(
    p: i64,
    q: i64,
    s: i64,
    want_jones: bool,
    want_alexander: bool,
    max_crossings: usize,
    format: InvariantFormat,
    output: &Option<PathBuf>,
) -> Result<(), u8> {
    // default selection: everything that applies
    let (want_jones, want_alexander) = if !want_jones && !want_alexander {
        (true, s == 0)
    } else {
        (want_jones, want_alexander)
    };
    if want_alexander && s != 0 {
        eprintln!("error: the Alexander closed form applies to torus knots only; use -s 0");
        return Err(2);
    }
    // with s = 0 the twist block is empty, so plain torus parameters
    // (including p = 2 and p = 3) are accepted here
    let braid = if s == 0 {
        core_result(torus_braid(p, q))?
    } else {
        let k = core_result(TwistedTorusKnot::new(p, q, s))?;
        twisted_torus_braid(&k)
    };

    let jones_poly = if want_jones {
        Some(core_result(jones_capped(&braid, max_crossings))?)
    } else {
        None
    };
    let alexander_poly = if want_alexander {
        Some(core_result(alexander_torus_closed_form(p, q))?)
    } else {
        None
    };

    let content = match format {
        InvariantFormat::Text => {
            let mut lines = String::new();
            if let Some(poly) = &jones_poly {
                lines.push_str(&format!("{poly}\n"));
            }
            if let Some(poly) = &alexander_poly {
                lines.push_str(&format!("{poly}\n"));
            }
            lines
        }
        InvariantFormat::Json => {
            let mut map = Map::new();
            map.insert("p".into(), p.into());
            map.insert("q".into(), q.into());
            map.insert("r".into(), 3.into());
            map.insert("s".into(), s.into());
            if let Some(poly) = &jones_poly {
                map.insert("jones".into(), poly.to_json());
            }
            if let Some(poly) = &alexander_poly {
                map.insert("alexander".into(), poly.to_json());
            }
            format!("{}\n", Value::Object(map))
        }
    };
    emit(output, &content)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct {
            p,
            q,
            s,
            format,
            output,
        } => run_construct(*p, *q, *s, *format, output),
        Command::Tunnel { p, q, s, output } => run_tunnel(*p, *q, *s, output),
        Command::Scan {
            pmax,
            stats,
            cross_check_walk,
            no_witnesses,
            parallel,
            output,
        } => run_scan(
            *pmax,
            &ScanOptions {
                cross_check_walk: *cross_check_walk,
                collect_stats: *stats,
                search_witnesses: !*no_witnesses,
                parallel: *parallel,
            },
            output,
        ),
        Command::Invariants {
            p,
            q,
            s,
            jones,
            alexander,
            max_crossings,
            format,
            output,
        } => run_invariants(
            *p,
            *q,
            *s,
            *jones,
            *alexander,
            *max_crossings,
            *format,
            output,
        ),
        Command::Selfcheck { seed } => {
            if selfcheck::run(*seed) {
                Ok(())
            } else {
                Err(1)
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
