//! `wreathchar`: monomial characters of `Z/dZ ≀ S_n` from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget refusal.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wreathchar::genfun::GeneratingFunction;
use wreathchar::verify::{all_specs, check_group_algebra, check_theorem, Mismatch};
use wreathchar::wreath::{all_elements, group_order};
use wreathchar::{combinatorics::d_partitions, CharacterSpec, CyclotomicInt, Strategy, WreathElement};

#[derive(Parser)]
#[command(name = "wreathchar", version, about = "Exact monomial characters of wreath products Z/dZ wr S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one character value by the generating function and by induction.
    Eval(EvalArgs),
    /// Tabulate a character on every group element.
    Table(SpecArgs),
    /// Check expansion, induction and group-algebra sums against each other.
    Verify(VerifyArgs),
    /// Print the expanded generating function.
    Immanant(SpecArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SpecArgs {
    /// Size n; must match the d-partition when given.
    #[arg(long)]
    n: Option<usize>,
    /// Order d; must match the length of --beta when given.
    #[arg(long)]
    d: Option<u32>,
    /// d-partition, components split by `/`, parts by `,`, `-` for empty: `2,1/1/2`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// One of `t` (trivial) or `s` (sign) per component: `sst`.
    #[arg(long)]
    beta: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest group order to expand.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u128,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Group element in one-line notation, `m` or `m@k` per entry: `6 2 3 4@1 5 1@1`.
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    max_d: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u128,
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<wreathchar::Error> for Failure {
    fn from(e: wreathchar::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_spec(args: &SpecArgs) -> Result<CharacterSpec, Failure> {
    let spec = CharacterSpec::parse(&args.lambda, &args.beta)?;
    if let Some(d) = args.d {
        if d != spec.d() {
            return Err(Failure::Usage(format!(
                "--beta {} has {} components but --d is {d}",
                args.beta,
                spec.d()
            )));
        }
    }
    if let Some(n) = args.n {
        if n != spec.n() {
            return Err(Failure::Usage(format!(
                "--lambda {} has size {} but --n is {n}",
                args.lambda,
                spec.n()
            )));
        }
    }
    if spec.n() == 0 {
        return Err(Failure::Usage("--lambda must have positive size".into()));
    }
    Ok(spec)
}

fn check_budget(n: usize, d: u32, budget: u128) -> Result<(), Failure> {
    match group_order(n, d) {
        Some(order) if order <= budget => Ok(()),
        Some(order) => Err(Failure::Budget(format!(
            "G({n},{d}) has {order} elements, over the budget of {budget}"
        ))),
        None => Err(Failure::Budget(format!("G({n},{d}) is too large to enumerate"))),
    }
}

fn header(spec: &CharacterSpec) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("n".into(), json!(spec.n()));
    m.insert("d".into(), json!(spec.d()));
    m.insert("lambda".into(), json!(spec.lambda().to_string()));
    m.insert("beta".into(), json!(spec.beta_string()));
    m
}

fn value_json(v: &CyclotomicInt) -> Value {
    serde_json::to_value(v).expect("cyclotomic values serialize")
}

fn eval(args: &EvalArgs) -> Result<(String, bool), Failure> {
    let spec = parse_spec(&args.spec)?;
    let g = WreathElement::parse_one_line(&args.g, spec.d())?;
    if g.n() != spec.n() {
        return Err(Failure::Usage(format!("--g has {} entries but n is {}", g.n(), spec.n())));
    }
    check_budget(spec.n(), spec.d(), args.spec.budget)?;
    let gf = GeneratingFunction::new(&spec, Strategy::Auto)?;
    let from_genfun = gf.character_value(&g)?;
    let from_oracle = spec.oracle().eval(&g)?;
    let agree = from_genfun == from_oracle;
    let out = match args.spec.format {
        Format::Text => format!(
            "{spec} at {g}\ngenerating function: {from_genfun}\ninduction oracle:    {from_oracle}\n{}\n",
            if agree { "agree" } else { "DISAGREE" }
        ),
        Format::Json => {
            let mut m = header(&spec);
            m.insert(
                "values".into(),
                json!([{
                    "g": g.to_string(),
                    "value": value_json(&from_genfun),
                    "oracle": value_json(&from_oracle),
                    "agree": agree,
                }]),
            );
            format!("{}\n", Value::Object(m))
        }
    };
    Ok((out, agree))
}

fn table(args: &SpecArgs) -> Result<(String, bool), Failure> {
    let spec = parse_spec(args)?;
    check_budget(spec.n(), spec.d(), args.budget)?;
    let gf = GeneratingFunction::new(&spec, Strategy::Auto)?;
    let rows = all_elements(spec.n(), spec.d())
        .map(|g| {
            let v = gf.character_value(&g)?;
            Ok((g, v))
        })
        .collect::<Result<Vec<_>, wreathchar::Error>>()?;
    let out = match args.format {
        Format::Text => {
            let cells: Vec<_> = rows.iter().map(|(g, v)| (g.to_string(), v.to_string())).collect();
            let width = cells.iter().map(|(g, _)| g.chars().count()).max().unwrap_or(0);
            let mut out = format!("{spec}\n");
            for (g, v) in cells {
                let pad = width - g.chars().count();
                writeln!(out, "{g}{}  {v}", " ".repeat(pad)).unwrap();
            }
            out
        }
        Format::Json => {
            let mut m = header(&spec);
            let values: Vec<_> = rows
                .iter()
                .map(|(g, v)| json!({"g": g.to_string(), "value": value_json(v)}))
                .collect();
            m.insert("values".into(), Value::Array(values));
            format!("{}\n", Value::Object(m))
        }
    };
    Ok((out, true))
}

fn immanant(args: &SpecArgs) -> Result<(String, bool), Failure> {
    let spec = parse_spec(args)?;
    check_budget(spec.n(), spec.d(), args.budget)?;
    let gf = GeneratingFunction::new(&spec, Strategy::Auto)?;
    let poly = gf.polynomial();
    let out = match args.format {
        Format::Text => format!("{poly}\n"),
        Format::Json => {
            let mut m = header(&spec);
            let terms: Vec<_> = poly
                .terms()
                .map(|(mono, c)| json!({"monomial": mono.to_string(), "coeff": value_json(c)}))
                .collect();
            m.insert("terms".into(), Value::Array(terms));
            format!("{}\n", Value::Object(m))
        }
    };
    Ok((out, true))
}

fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    if args.max_n == 0 || args.max_d == 0 {
        return Err(Failure::Usage("--max-n and --max-d must be positive".into()));
    }
    check_budget(args.max_n, args.max_d as u32, args.budget)?;
    let mut lambdas = 0usize;
    let mut characters = 0usize;
    let mut values = 0usize;
    let mut first: Option<(&str, Mismatch)> = None;
    'outer: for d in 1..=args.max_d {
        for n in 1..=args.max_n {
            lambdas += d_partitions(n, d).count();
            for spec in all_specs(n, d) {
                let check = check_theorem(&spec, Strategy::Auto)?;
                characters += 1;
                values += check.values.len();
                if let Some(m) = check.mismatch {
                    first = Some(("expansion", m));
                    break 'outer;
                }
                if let Some(m) = check_group_algebra(&spec)? {
                    first = Some(("group algebra", m));
                    break 'outer;
                }
            }
        }
    }
    let out = match args.format {
        Format::Text => {
            let mut out = format!(
                "n <= {}, d <= {}: {lambdas} d-partitions, {characters} characters, {values} values\n",
                args.max_n, args.max_d
            );
            match &first {
                None => out.push_str("all checks pass\n"),
                Some((which, m)) => writeln!(out, "{which} mismatch: {m}").unwrap(),
            }
            out
        }
        Format::Json => {
            let counterexample = first.as_ref().map(|(which, m)| {
                json!({
                    "check": which,
                    "lambda": m.spec.lambda().to_string(),
                    "beta": m.spec.beta_string(),
                    "g": m.element.to_string(),
                    "expected": value_json(&m.expected),
                    "got": value_json(&m.got),
                })
            });
            format!(
                "{}\n",
                json!({
                    "max_n": args.max_n,
                    "max_d": args.max_d,
                    "dpartitions": lambdas,
                    "characters": characters,
                    "values": values,
                    "passed": first.is_none(),
                    "counterexample": counterexample,
                })
            )
        }
    };
    Ok((out, first.is_none()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => eval(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Immanant(a) => immanant(a),
    };
    match result {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
