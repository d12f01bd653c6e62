//! Command-line driver: validate and classify structure specs, certify
//! Smarandache properties, export Hasse diagrams, and run the claims
//! corpus.
//!
//! Exit codes: 0 success; 1 property false or not found with a complete
//! search; 2 incomplete search; 3 input error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semicert::claims;
use semicert::report;
use semicert::smarandache::Witness;
use semicert::spec::{build, driver, parse_spec, StructureSpec, Subject};

#[derive(Parser)]
#[command(name = "semicert", version, about = "finite semiring and semifield certification engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure spec and print the flag report.
    Validate {
        /// spec: inline JSON, a file path, or "-" for stdin
        spec: String,
        /// materialization cap (elements); default from SEMICERT_CAP or 65536
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Full classification: flags, characteristic, element classes,
    /// substructure census.
    Classify {
        spec: String,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Search for or verify a Smarandache property; prints the certificate
    /// with its replay transcript.
    Certify {
        spec: String,
        /// property name, e.g. s-semiring-1, s-zero-divisors, s-anti-semiring
        #[arg(long)]
        property: String,
        /// witness payload file (JSON), for verify-mode subjects
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Export the Hasse diagram of a lattice-derived spec as DOT.
    Hasse {
        spec: String,
        /// output path; stdout when absent
        #[arg(short, long)]
        out: Option<String>,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Run the claims corpus and print the pass/fail ledger.
    Claims {
        /// only run claims whose id matches this glob (* wildcards)
        #[arg(long)]
        filter: Option<String>,
        /// worker threads
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
}

fn default_cap(cli: Option<u128>) -> u128 {
    cli.or_else(|| {
        std::env::var("SEMICERT_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1 << 16)
}

fn read_spec(arg: &str) -> Result<StructureSpec, String> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    };
    parse_spec(&text).map_err(|e| e.to_string())
}

fn glob_match(pattern: &str, id: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == id;
    }
    let mut rest = id;
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        match rest.find(part) {
            Some(pos) => {
                if i == 0 && pos != 0 {
                    return false;
                }
                rest = &rest[pos + part.len()..];
            }
            None => return false,
        }
    }
    parts.last().map_or(true, |last| last.is_empty() || id.ends_with(last))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { spec, cap } => {
            let spec = read_spec(&spec)?;
            match build(&spec, default_cap(cap)) {
                Ok(subject) => {
                    let flags = match &subject {
                        Subject::Finite(s) => Some(report::FlagsReport::of(s)),
                        _ => None,
                    };
                    let rep = report::ValidateReport {
                        ok: true,
                        subject: subject.describe(),
                        detail: "axioms hold".into(),
                        flags,
                    };
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    let rep = report::ValidateReport {
                        ok: false,
                        subject: "rejected".into(),
                        detail: e.to_string(),
                        flags: None,
                    };
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Classify { spec, cap } => {
            let spec = read_spec(&spec)?;
            let cap = default_cap(cap);
            let subject = build(&spec, cap).map_err(|e| e.to_string())?;
            let rep = report::classify(&subject, cap as usize);
            println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { spec, property, witness, cap } => {
            let spec = read_spec(&spec)?;
            let subject = build(&spec, default_cap(cap)).map_err(|e| e.to_string())?;
            let witness: Option<Witness> = match witness {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
                    Some(serde_json::from_str(&text).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            match driver::certify(&subject, &property, witness.as_ref(), &subject.describe()) {
                Ok(cert) => {
                    driver::verify(&subject, &cert)?;
                    print!("{}", report::render_certificate(&cert));
                    Ok(ExitCode::SUCCESS)
                }
                Err(nf) => {
                    println!(
                        "not found (complete_search: {}): {}",
                        nf.complete, nf.reason
                    );
                    Ok(ExitCode::from(if nf.complete { 1 } else { 2 }))
                }
            }
        }
        Command::Hasse { spec, out, cap } => {
            let spec = read_spec(&spec)?;
            let subject = build(&spec, default_cap(cap)).map_err(|e| e.to_string())?;
            let h = driver::hasse_of(&subject)?;
            let dot = h.to_dot();
            match out {
                Some(path) => fs::write(&path, dot).map_err(|e| format!("{path}: {e}"))?,
                None => print!("{dot}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Claims { filter, workers } => {
            let all = claims::corpus();
            let selected: Vec<claims::ClaimRecord> = match &filter {
                Some(g) => all.into_iter().filter(|c| glob_match(g, &c.id)).collect(),
                None => all,
            };
            if selected.is_empty() {
                return Err("no claims match the filter".into());
            }
            let outcomes = claims::run_all(&selected, workers);
            let mut failures = 0;
            for o in &outcomes {
                println!(
                    "[{}] {} — {} ({} ms)",
                    if o.pass { "ok" } else { "FAIL" },
                    o.id,
                    o.detail,
                    o.millis
                );
                if !o.pass {
                    failures += 1;
                }
            }
            println!("{} claims, {} failures", outcomes.len(), failures);
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
