use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qlab::enumerate::{enumerate_connected_bruteforce, enumerate_cyclic, SearchResult};
use qlab::field::{parse_poly, prime_power, FieldCtx};
use qlab::perm::{element_cap, parse_generators, Perm, PermGroup};
use qlab::quandle::{ClassifierReport, Quandle};
use qlab::verify::{self, CheckReport, Profile, Verdict};
use qlab::{Error, Result};

/// Quandles, permutation groups and the checks that connect them.
#[derive(Parser)]
#[command(name = "qlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a quandle and print it in .qnd form.
    #[command(subcommand)]
    Make(Make),
    /// Validate a .qnd file and print its classifier report as JSON.
    Classify { file: PathBuf },
    /// Search for quandles of a given size.
    Enumerate {
        kind: EnumKind,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Run a named check.
    Verify {
        check: CheckName,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Subcommand)]
enum Make {
    /// The dihedral quandle R_n.
    Dihedral {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Alexander quandle x ▷ y = (1 − α)x + αy over GF(q).
    Alexander {
        q: u64,
        /// α by field index Σ c_i p^i; defaults to the least primitive element.
        #[arg(long)]
        alpha: Option<usize>,
        /// Defining polynomial as coefficients c0,c1,…,cm, highest degree first.
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The conjugation quandle on the class of a permutation.
    Conj {
        /// `S<n>`, `A<n>`, or a file of generators one per line.
        #[arg(long)]
        group: String,
        /// Class representative in cycle notation, e.g. "(0 1 2)".
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 4096)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Cyclic,
    Connected,
}

#[derive(Args)]
struct EnumOpts {
    #[arg(long)]
    n: usize,
    /// Print only the search summary.
    #[arg(long)]
    count_only: bool,
    /// Write one .qnd file per class and stats.json into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Raise the size bound: 7 for connected search, any cap for cyclic.
    #[arg(long)]
    max: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckName {
    Ktw,
    Corollary,
    Affine,
    InnerOrder,
    Lemmas,
    Case1,
    Case3,
    Case5,
    Classes,
    Ppclass,
    Burnside,
    All,
}

#[derive(Args)]
struct VerifyOpts {
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ProfileArg::Full)]
    profile: ProfileArg,
    /// Emit one JSON report per line; the table goes to stderr.
    #[arg(long)]
    json: bool,
    /// Element cap for the Ree closure.
    #[arg(long, default_value_t = verify::DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
    /// Field index of λ for the Ree closure.
    #[arg(long)]
    lambda: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Make(make) => {
            let (q, out) = build(make)?;
            emit(&q.to_qnd_string(), out.as_deref())?;
        }
        Command::Classify { file } => {
            let q = Quandle::parse_qnd(&std::fs::read_to_string(&file)?)?;
            #[derive(Serialize)]
            struct Classified {
                #[serde(flatten)]
                report: ClassifierReport,
                digest: String,
            }
            let out = Classified {
                report: q.classify(),
                digest: q.digest(),
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("report serializes")
            );
        }
        Command::Enumerate { kind, opts } => enumerate(kind, opts)?,
        Command::Verify { check, opts } => return verify(check, opts),
    }
    Ok(true)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn build(make: Make) -> Result<(Quandle, Option<PathBuf>)> {
    match make {
        Make::Dihedral { n, out } => {
            if n == 0 {
                return Err(Error::InvalidArgument("n must be positive".into()));
            }
            Ok((Quandle::dihedral(n), out))
        }
        Make::Alexander {
            q,
            alpha,
            modulus,
            out,
        } => {
            let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let modulus = modulus.as_deref().map(parse_poly).transpose()?;
            let ctx = FieldCtx::new(p, m, modulus)?;
            let alpha = match alpha {
                Some(i) => ctx.elem(i)?,
                None => ctx.primitive_element(),
            };
            Ok((Quandle::alexander(&ctx, alpha)?, out))
        }
        Make::Conj {
            group,
            rep,
            max_size,
            out,
        } => {
            let group = named_group(&group)?;
            let rep = Perm::parse_with_degree(&rep, group.degree())?;
            Ok((Quandle::conjugation(&group, &rep, max_size)?.0, out))
        }
    }
}

fn named_group(name: &str) -> Result<PermGroup> {
    let builtin = |prefix: char| {
        name.strip_prefix(prefix)
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&d| d >= 1)
    };
    if let Some(n) = builtin('S') {
        return Ok(PermGroup::symmetric(n));
    }
    if let Some(n) = builtin('A') {
        return Ok(PermGroup::alternating(n));
    }
    PermGroup::from_generators(&parse_generators(&std::fs::read_to_string(name)?)?)
}

fn enumerate(kind: EnumKind, opts: EnumOpts) -> Result<()> {
    let (label, result): (&str, SearchResult) = match kind {
        EnumKind::Cyclic => {
            let result = match opts.max {
                Some(max) => qlab::enumerate::enumerate_cyclic_with(
                    opts.n,
                    &qlab::enumerate::standard_cycle(opts.n.max(3)),
                    max,
                )?,
                None => enumerate_cyclic(opts.n)?,
            };
            ("cyclic", result)
        }
        EnumKind::Connected => {
            let long = opts.max.is_some_and(|m| m >= 7);
            ("connected", enumerate_connected_bruteforce(opts.n, long)?)
        }
    };
    let stats = serde_json::to_string(&result.stats).expect("stats serialize");
    match (&opts.out, opts.count_only) {
        (Some(dir), count_only) => {
            std::fs::create_dir_all(dir)?;
            if !count_only {
                for (i, q) in result.quandles.iter().enumerate() {
                    std::fs::write(
                        dir.join(format!("{label}-{}-{i}.qnd", opts.n)),
                        q.to_qnd_string(),
                    )?;
                }
            }
            std::fs::write(dir.join("stats.json"), format!("{stats}\n"))?;
        }
        (None, false) => {
            for q in &result.quandles {
                println!("{}", q.to_qnd_string());
            }
        }
        (None, true) => {}
    }
    println!("{stats}");
    Ok(())
}

fn verify(check: CheckName, opts: VerifyOpts) -> Result<bool> {
    let profile = match opts.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let max_n = opts.max_n.unwrap_or(profile.max_n());
    let reports: Vec<CheckReport> = match check {
        CheckName::Ktw => vec![verify::verify_ktw(max_n)?],
        CheckName::Corollary => vec![verify::verify_corollary(max_n)?],
        CheckName::Affine => vec![verify::verify_affine_cyclic(verify::DEFAULT_AFFINE_QS)?],
        CheckName::InnerOrder => vec![verify::verify_inner_order(max_n)?],
        CheckName::Lemmas => vec![verify::verify_lemmas(max_n)?],
        CheckName::Case1 => vec![verify::verify_case1(verify::DEFAULT_CASE1_PAIRS)?],
        CheckName::Case3 => vec![verify::verify_case3(verify::DEFAULT_CASE3_QS)?],
        CheckName::Case5 => vec![verify::verify_case5_with(opts.closure_cap, opts.lambda)?],
        CheckName::Classes => vec![verify::verify_small_simple_classes()?],
        CheckName::Ppclass => vec![verify::verify_prime_power_class_property()?],
        CheckName::Burnside => vec![verify::verify_burnside(max_n)?],
        CheckName::All => verify::verify_all(profile)?.reports,
    };
    let table = verify::render_table(&reports);
    if opts.json {
        for r in &reports {
            println!("{}", r.to_json_line());
        }
        eprint!("{table}");
    } else {
        print!("{table}");
    }
    if element_cap() != qlab::perm::DEFAULT_ELEMENT_CAP {
        eprintln!("element cap overridden: {}", element_cap());
    }
    Ok(reports.iter().all(|r| r.verdict != Verdict::Fail))
}
