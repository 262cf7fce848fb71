//! Command-line front end: expansion, equality, invariants, combing, Lyndon
//! enumeration, rank tables, and the verification suites.
//!
//! Exit codes: 0 success (or "equal" / all checks passed), 1 not-equal or a
//! failed check, 2 malformed input or usage, 3 internal invariant violation.

mod grammar;
mod render;

use clap::{Parser, Subcommand};
use loopbraid::verify::{
    center_check, check_comb_roundtrip, check_goldsmith, check_goldsmith_mutation,
    check_homotopy_mutation, check_homotopy_relations, check_lie_mutation,
    check_lie_presentations, check_mccool, check_mccool_mutation, graded_andreadakis_check,
    hirsch, rank_der_tau, rank_rlie,
};
use loopbraid::{lyndon, CheckReport, Error, Family, Letter, MilnorIndex};
use serde_json::{json, Value};

use grammar::ParseFailure;

#[derive(Parser)]
#[command(
    name = "loopbraid",
    version,
    about = "Exact calculator for welded braids up to link-homotopy",
    after_help = "Word tokens (whitespace-separated, indices 1-based):\n  \
        x<i> / X<i>      generator x_i and its inverse\n  \
        c<i>.<j> / C<i>.<j>  conjugating automorphism (x_i by x_j) and inverse\n  \
        s<i> / S<i>      band generator swapping strands i, i+1, and inverse\n  \
        r<i>             strand swap (its own inverse; no uppercase form)\n  \
        a<i>.<j> / A<i>.<j>  pure braid generator and inverse\n\
        A word denotes the product g1 g2 ... — for automorphisms the\n\
        composition g1 . g2 . ..., whose rightmost factor acts first."
)]
struct Cli {
    /// Emit JSON on stdout; errors become JSON objects on stderr.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a group word into its monomial/coefficient table.
    Expand {
        /// Number of generators.
        #[arg(long)]
        n: usize,
        /// Word in x<i> / X<i> tokens.
        word: String,
    },
    /// Compare two group words; exit 0 if equal, 1 if not.
    Eq {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Compare two automorphism words; exit 0 if equal, 1 if not.
    AutoEq {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Lowest degree in which an automorphism moves some generator
    /// ("infinity" for the identity).
    Degree {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Coefficient of an index sequence in one strand's conjugator.
    Milnor {
        #[arg(long)]
        n: usize,
        /// Strand whose conjugator is read.
        #[arg(long)]
        strand: Letter,
        /// Comma-separated index sequence, e.g. 2,3.
        #[arg(long)]
        index: String,
        word: String,
    },
    /// Combing normal form of a pure automorphism word.
    Comb {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Enumerate Lyndon words or factorize a word into a nonincreasing
    /// product of them.
    Lyndon {
        /// Alphabet size and length: --enumerate N K.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        enumerate: Option<Vec<usize>>,
        /// Restrict enumeration to words without repeated letters.
        #[arg(long)]
        square_free: bool,
        /// Comma-separated word to factorize, e.g. 2,1,3,1.
        #[arg(long)]
        factorize: Option<String>,
    },
    /// Rank and Hirsch tables, expected vs computed.
    Ranks {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Run verification suites and report each check.
    Verify {
        /// One of: rank_rlie, rank_der_tau, hirsch, center, mccool,
        /// homotopy, goldsmith, graded_andreadakis, lie_presentations,
        /// mutations, comb_roundtrip, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<ParseFailure> for Failure {
    fn from(e: ParseFailure) -> Self {
        Failure { code: 2, message: e.0 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvariantViolation(_) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if !matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion)
                && std::env::args().any(|a| a == "--json")
            {
                eprintln!("{}", json!({ "error": e.to_string(), "code": 2 }));
                std::process::exit(2);
            }
            e.exit();
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            if json {
                eprintln!("{}", json!({ "error": f.message, "code": f.code }));
            } else {
                eprintln!("error: {}", f.message);
            }
            std::process::exit(f.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Expand { n, word } => {
            let g = grammar::parse_group_word(&word, n)?;
            if cli.json {
                println!("{}", render::poly_json(g.expansion()));
            } else {
                println!("{}", g.expansion());
            }
            Ok(0)
        }
        Command::Eq { n, left, right } => {
            let a = grammar::parse_group_word(&left, n)?;
            let b = grammar::parse_group_word(&right, n)?;
            report_equality(a == b, cli.json)
        }
        Command::AutoEq { n, left, right } => {
            let a = grammar::parse_auto_word(&left, n)?;
            let b = grammar::parse_auto_word(&right, n)?;
            let equal = a == b;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "equal": equal,
                        "left": render::auto_json(&a),
                        "right": render::auto_json(&b),
                    })
                );
                Ok(if equal { 0 } else { 1 })
            } else {
                report_equality(equal, false)
            }
        }
        Command::Degree { n, word } => {
            let a = grammar::parse_auto_word(&word, n)?;
            let degree = a.andreadakis_degree()?;
            if cli.json {
                println!("{}", json!({ "degree": degree }));
            } else {
                match degree {
                    Some(d) => println!("{d}"),
                    None => println!("infinity"),
                }
            }
            Ok(0)
        }
        Command::Milnor { n, strand, index, word } => {
            let sequence = grammar::parse_index_list(&index)?;
            let idx = MilnorIndex::new(strand, sequence)?;
            let a = grammar::parse_auto_word(&word, n)?;
            let coeff = a.milnor(&idx)?;
            if cli.json {
                println!("{}", json!({ "coefficient": render::bigint_number(&coeff) }));
            } else {
                println!("{coeff}");
            }
            Ok(0)
        }
        Command::Comb { n, word } => {
            let a = grammar::parse_auto_word(&word, n)?;
            let nf = a.comb()?;
            if cli.json {
                println!("{}", render::normal_form_json(&nf));
            } else {
                println!("{}", render::normal_form_text(&nf));
            }
            Ok(0)
        }
        Command::Lyndon { enumerate, square_free, factorize } => {
            let words = match (enumerate, factorize) {
                (Some(_), Some(_)) => {
                    return Err(usage("--enumerate and --factorize are mutually exclusive"))
                }
                (None, None) => {
                    return Err(usage("one of --enumerate or --factorize is required"))
                }
                (Some(nk), None) => lyndon::enumerate_lyndon(nk[0], nk[1], square_free),
                (None, Some(w)) => {
                    let word = grammar::parse_index_list(&w)?;
                    lyndon::lyndon_factorization(&word)?
                }
            };
            if cli.json {
                let list: Vec<Value> = words
                    .iter()
                    .map(|w| Value::String(render::word_key(w)))
                    .collect();
                println!("{}", json!({ "words": list }));
            } else {
                for w in &words {
                    println!("{}", render::word_key(w));
                }
            }
            Ok(0)
        }
        Command::Ranks { max_n } => {
            let reports = rank_reports(max_n);
            print_reports(&reports, cli.json);
            if reports.iter().all(|r| r.passed) {
                Ok(0)
            } else {
                Err(Failure {
                    code: 3,
                    message: "a rank disagreed with its closed formula".into(),
                })
            }
        }
        Command::Verify { suite, max_n, seed } => {
            let reports = suite_reports(&suite, max_n, seed)?;
            print_reports(&reports, cli.json);
            Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
        }
    }
}

fn report_equality(equal: bool, json: bool) -> Result<i32, Failure> {
    if json {
        println!("{}", json!({ "equal": equal }));
    } else {
        println!("{}", if equal { "equal" } else { "not equal" });
    }
    Ok(if equal { 0 } else { 1 })
}

fn print_reports(reports: &[CheckReport], json: bool) {
    if json {
        let list: Vec<Value> = reports.iter().map(render::report_json).collect();
        println!("{}", Value::Array(list));
    } else {
        for r in reports {
            println!("{r}");
        }
    }
}

fn rank_reports(max_n: usize) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            reports.push(rank_rlie(n, k));
        }
    }
    for n in 2..=max_n.min(4) {
        for k in 1..n {
            reports.push(rank_der_tau(n, k));
        }
    }
    for n in 2..=max_n {
        reports.push(hirsch(n, Family::Chi));
        reports.push(hirsch(n, Family::Artin));
    }
    reports
}

fn suite_reports(suite: &str, max_n: usize, seed: u64) -> Result<Vec<CheckReport>, Failure> {
    const SUITES: [&str; 11] = [
        "rank_rlie",
        "rank_der_tau",
        "hirsch",
        "center",
        "mccool",
        "homotopy",
        "goldsmith",
        "graded_andreadakis",
        "lie_presentations",
        "mutations",
        "comb_roundtrip",
    ];
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(usage(format!(
            "unknown suite `{suite}`; expected one of {}, all",
            SUITES.join(", ")
        )));
    }
    let want = |name: &str| suite == "all" || suite == name;
    let mut reports = Vec::new();
    if want("rank_rlie") {
        for n in 1..=max_n {
            for k in 1..=n {
                reports.push(rank_rlie(n, k));
            }
        }
    }
    if want("rank_der_tau") {
        for n in 2..=max_n.min(4) {
            for k in 1..n {
                reports.push(rank_der_tau(n, k));
            }
        }
    }
    if want("hirsch") {
        for n in 2..=max_n {
            reports.push(hirsch(n, Family::Chi));
            reports.push(hirsch(n, Family::Artin));
        }
    }
    if want("center") {
        for n in 2..=max_n.min(4) {
            reports.push(center_check(n));
        }
    }
    if want("mccool") {
        for n in 3..=max_n {
            reports.push(check_mccool(n));
        }
    }
    if want("homotopy") {
        for n in 3..=max_n {
            reports.push(check_homotopy_relations(n, 3));
        }
    }
    if want("goldsmith") {
        for n in 3..=max_n {
            reports.push(check_goldsmith(n, 3));
        }
    }
    if want("graded_andreadakis") {
        for n in 3..=max_n.min(4) {
            for k in 1..n {
                reports.push(graded_andreadakis_check(n, k, Family::Chi));
                reports.push(graded_andreadakis_check(n, k, Family::Artin));
            }
        }
    }
    if want("lie_presentations") {
        for n in 3..=max_n.min(4) {
            reports.push(check_lie_presentations(n));
        }
    }
    if want("mutations") {
        reports.push(check_mccool_mutation(3));
        reports.push(check_homotopy_mutation(4));
        reports.push(check_goldsmith_mutation(3));
        reports.push(check_lie_mutation(3));
    }
    if want("comb_roundtrip") {
        reports.push(check_comb_roundtrip(max_n.clamp(2, 5), 25, 8, seed));
    }
    Ok(reports)
}
