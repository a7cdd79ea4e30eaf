//! `solcob`: command-line access to the solcob-core computations.
//!
//! Exit codes: 0 success or HOMEOMORPHIC, 1 DISTINGUISHED or a failed check,
//! 2 usage error, 3 UNRESOLVED.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use solcob_core::abelian::json::{group_to_json, matrix_to_json, scalar_to_json};
use solcob_core::abelian::{set_enumeration_cap, DEFAULT_ENUMERATION_CAP};
use solcob_core::classify::{census, cobordant, parity_representative, signature, Verdict};
use solcob_core::dinv::{
    casson_walker, d_dihedral, d_sol_profile, lescop, multiset_to_json, rational_to_json, Manifold,
};
use solcob_core::manifolds::{h1_dihedral, h1_sol, DihedralManifold, SolManifold};
use solcob_core::verify;
use solcob_core::{Dihedral, Sol};

const ENUM_CAP_VAR: &str = "SOLCOB_ENUM_CAP";

#[derive(Parser)]
#[command(name = "solcob", version, about = "Invariants of Sol and dihedral 3-manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Census bound: parameters range over |a|, |b| <= N.
    #[arg(long, default_value_t = 20, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    bound: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// First homology of a Sol or dihedral manifold.
    #[command(allow_negative_numbers = true)]
    H1(H1Args),
    /// d-invariants of M_{a,b} or D_n.
    #[command(allow_negative_numbers = true)]
    Dinv(ManifoldArgs),
    /// Lescop invariant of M_{a,b} or D_n.
    #[command(allow_negative_numbers = true)]
    Lescop(ManifoldArgs),
    /// Casson-Walker invariant of M_{a,b} or D_n.
    #[command(allow_negative_numbers = true)]
    Cw(ManifoldArgs),
    /// Decide whether M_{a,b} and M_{a2,b2} are homology cobordant.
    #[command(allow_negative_numbers = true)]
    Classify { a: BigInt, b: BigInt, a2: BigInt, b2: BigInt },
    /// Classify every pair in the box |a|, |b| <= bound.
    Census {
        /// Run on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Plumbing graph of the Sol manifold glued by [[a, c], [d, b]].
    #[command(allow_negative_numbers = true)]
    Splice { a: BigInt, b: BigInt, c: BigInt, d: BigInt },
    /// Recompute the reference tables and report each check.
    Verify,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct H1Args {
    /// `a b` for M_{a,b}, or `a b c d` for the gluing matrix [[a, c], [d, b]].
    #[arg(long, num_args = 2..=4, value_names = ["A", "B"])]
    sol: Option<Vec<BigInt>>,
    /// `b c` for D_{-b/c}.
    #[arg(long, num_args = 2, value_names = ["B", "C"])]
    dihedral: Option<Vec<BigInt>>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ManifoldArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    sol: Option<Vec<BigInt>>,
    #[arg(long, value_name = "N")]
    dihedral: Option<BigInt>,
}

/// A failure that maps to exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<u8, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_cap().and_then(|()| run(&cli));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_cap() -> Result<(), Usage> {
    let cap = match std::env::var(ENUM_CAP_VAR) {
        Ok(raw) => match raw.trim().parse::<u64>() {
            Ok(n) if n > 0 => n,
            _ => return Err(Usage(format!("{ENUM_CAP_VAR} must be a positive integer, got {raw:?}"))),
        },
        Err(_) => DEFAULT_ENUMERATION_CAP,
    };
    set_enumeration_cap(cap);
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::H1(args) => cmd_h1(args, format),
        Command::Dinv(args) => cmd_dinv(args, format),
        Command::Lescop(args) => cmd_invariant(args, format, "lescop"),
        Command::Cw(args) => cmd_invariant(args, format, "casson_walker"),
        Command::Classify { a, b, a2, b2 } => cmd_classify([a, b, a2, b2], format),
        Command::Census { serial } => cmd_census(cli.bound, !serial, format),
        Command::Splice { a, b, c, d } => cmd_splice([a, b, c, d], format),
        Command::Verify => cmd_verify(format),
    }
}

fn require(format: Format, allowed: &[Format], command: &str) -> Result<(), Usage> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Usage(format!("{command} does not support --format {name}")))
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn sol_from(values: &[BigInt]) -> Result<Sol, Usage> {
    match values {
        [a, b] => Ok(SolManifold::m_ab(a.clone(), b.clone())),
        [a, b, c, d] => Ok(SolManifold::new(a.clone(), b.clone(), c.clone(), d.clone())?),
        _ => Err(Usage("--sol takes `a b` or `a b c d`".into())),
    }
}

fn cmd_h1(args: &H1Args, format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json], "h1")?;
    let (name, h, degenerate) = if let Some(values) = &args.sol {
        let m = sol_from(values)?;
        (m.to_string(), h1_sol(&m), m.is_degenerate())
    } else {
        let values = args.dihedral.as_deref().unwrap_or_default();
        let m: Dihedral = DihedralManifold::new(values[0].clone(), values[1].clone())?;
        (m.to_string(), h1_dihedral(&m), m.is_degenerate())
    };
    if !h.agrees() {
        eprintln!("warning: cokernel {} differs from closed form {}", h.computed, h.closed_form);
    }
    match format {
        Format::Json => print_json(&json!({
            "manifold": name,
            "h1": group_to_json(&h.computed),
            "closed_form_agrees": h.agrees(),
            "degenerate": degenerate,
        })),
        _ => {
            if degenerate {
                println!("{name} [degenerate]");
            }
            println!("{}", h.computed);
        }
    }
    Ok(0)
}

fn cmd_dinv(args: &ManifoldArgs, format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json], "dinv")?;
    if let Some(n) = &args.dihedral {
        let d = d_dihedral(n);
        match format {
            Format::Json => print_json(&json!({"n": scalar_to_json(n), "d": multiset_to_json(&d)})),
            _ => println!("d(D_{n}) = {{{}}}", d.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
        }
        return Ok(0);
    }
    let values = args.sol.as_deref().unwrap_or_default();
    let (a, b) = parity_representative(&values[0], &values[1]);
    if (&a, &b) != (&values[0], &values[1]) {
        eprintln!("note: M_{{{},{}}} is computed as M_{{{a},{b}}}", values[0], values[1]);
    }
    let profile = d_sol_profile(&a, &b)?;
    match format {
        Format::Json => print_json(&profile.to_json()),
        _ => println!("{profile}"),
    }
    Ok(0)
}

fn cmd_invariant(args: &ManifoldArgs, format: Format, which: &str) -> Outcome {
    require(format, &[Format::Text, Format::Json], which)?;
    let m = match (&args.sol, &args.dihedral) {
        (Some(v), _) => Manifold::Sol(SolManifold::m_ab(v[0].clone(), v[1].clone())),
        (_, Some(n)) => Manifold::Dihedral(DihedralManifold::d_n(n.clone())),
        _ => unreachable!("clap requires one of --sol, --dihedral"),
    };
    let name = match &m {
        Manifold::Sol(s) => s.to_string(),
        Manifold::Dihedral(d) => d.to_string(),
    };
    let value = if which == "lescop" { lescop(&m)? } else { casson_walker(&m)? };
    match format {
        Format::Json => print_json(&json!({"manifold": name, which: rational_to_json(&value)})),
        _ => println!("{value}"),
    }
    Ok(0)
}

fn cmd_classify(p: [&BigInt; 4], format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json], "classify")?;
    let verdict = cobordant(p[0], p[1], p[2], p[3])?;
    match format {
        Format::Json => print_json(&json!({
            "first": [scalar_to_json(p[0]), scalar_to_json(p[1])],
            "second": [scalar_to_json(p[2]), scalar_to_json(p[3])],
            "verdict": verdict.label(),
            "witness": verdict.witness().map(|w| w.name()),
            "signatures": [signature(p[0], p[1])?.to_json(), signature(p[2], p[3])?.to_json()],
        })),
        _ => println!("{verdict}"),
    }
    Ok(match verdict {
        Verdict::Homeomorphic => 0,
        Verdict::Distinguished(_) => 1,
        Verdict::Unresolved => 3,
    })
}

fn cmd_census(bound: i64, parallel: bool, format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json, Format::Csv], "census")?;
    let report = census(bound, parallel)?;
    match format {
        Format::Json => {
            let signatures = report
                .classes
                .iter()
                .map(|c| {
                    let (a, b) = c.representative;
                    let mut s = signature(&a, &b)?.to_json();
                    s["representative"] = json!([a, b]);
                    Ok(s)
                })
                .collect::<Result<Vec<Value>, Usage>>()?;
            let mut v = report.to_json();
            v["signatures"] = Value::Array(signatures);
            print_json(&v);
        }
        Format::Csv => print!("{}", report.to_csv()),
        _ => println!("{report}"),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_splice(p: [&BigInt; 4], format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json, Format::Dot], "splice")?;
    let given = SolManifold::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone())?;
    let m = if given.c() < &BigInt::from(0) {
        let n = given.normalize();
        eprintln!("note: c < 0, using the equivalent gluing matrix {:?}", n.params().map(|x| x.to_string()));
        n
    } else {
        given
    };
    let graph = m.splice_presentation()?;
    let [a, b, c, d] = m.params();
    let identity = graph.chain.gluing_identity_holds(&a, &b, &c, &d);
    match format {
        Format::Dot => {
            eprintln!("gluing identity f1^-1 A f2 = [[0, 1], [1, 0]]: {}", if identity { "holds" } else { "FAILS" });
            print!("{}", graph.to_dot());
        }
        Format::Json => {
            let mut v = graph.to_json();
            v["f1"] = matrix_to_json(&graph.chain.f1.product);
            v["f2"] = matrix_to_json(&graph.chain.f2.product);
            v["gluing_identity"] = json!(identity);
            print_json(&v);
        }
        _ => {
            println!("{m}");
            let weights = graph.chain.chain_weights().iter().map(ToString::to_string).collect::<Vec<_>>();
            println!("chain weights: [{}]", weights.join(", "));
            println!("f1 =\n{}", graph.chain.f1.product);
            println!("f2 =\n{}", graph.chain.f2.product);
            println!("gluing identity: {}", if identity { "holds" } else { "FAILS" });
        }
    }
    Ok(if identity { 0 } else { 1 })
}

fn cmd_verify(format: Format) -> Outcome {
    require(format, &[Format::Text, Format::Json], "verify")?;
    let report = verify::run_default();
    match format {
        Format::Json => print_json(&report.to_json()),
        _ => println!("{report}"),
    }
    Ok(if report.passed() { 0 } else { 1 })
}
