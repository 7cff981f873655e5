use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use posttag::blocks::{converting_set, render_outcome, search, BlockWord, SearchConfig};
use posttag::certificate;
use posttag::constants::verify_embedded;
use posttag::family::{
    table_mismatches, verify_chain, verify_theorem_direct, Quadruplet, CHAIN_STEPS,
    DEFAULT_DIRECT_BUDGET,
};
use posttag::{
    decode_tokens, encode_tokens, run, BinaryWord, OutcomeKind, Residue, TagRules, TokenWord,
};

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "posttag",
    version,
    about = "Post's tag system {N=3, 0->00, 1->1101}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the tag system from a word.
    Simulate {
        /// Start word over {0,1}, or @path to read it from a file.
        #[arg(long)]
        word: String,
        /// Stop when this word (or @path) is reached.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 20_000)]
        budget: u64,
    },
    /// Check a^n b c^m -> a^(n+1) b c^(m+1) by direct simulation for a grid of n, m.
    VerifyTheorem {
        n_max: usize,
        m_max: usize,
        #[arg(default_value_t = DEFAULT_DIRECT_BUDGET)]
        budget: u64,
    },
    /// Derive and check the 13-step quadruplet chain.
    VerifyOmega {
        /// Cutting index of the seed quadruplet.
        #[arg(long, default_value_t = 0)]
        seed_x: u8,
        /// Replace the seed's a (word or @path).
        #[arg(long)]
        seed_a: Option<String>,
        /// Replace the seed's b (word or @path).
        #[arg(long)]
        seed_b: Option<String>,
        /// Replace the seed's c (word or @path).
        #[arg(long)]
        seed_c: Option<String>,
        /// Flip one symbol (0-based) of the seed's a.
        #[arg(long)]
        flip_a: Option<usize>,
        #[arg(long, default_value_t = CHAIN_STEPS)]
        steps: usize,
        /// Write the certificate here instead of standard output.
        #[arg(long, conflicts_with = "check")]
        emit: Option<PathBuf>,
        /// Re-validate an existing certificate document.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// List the converting set of a word over {v,u,w,0,1}.
    Blockset { word: String },
    /// Search for building blocks meeting the periodicity conditions.
    BlockSearch {
        max_rows: usize,
        budget: usize,
        #[arg(default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = posttag::blocks::DEFAULT_MAX_SUFFIX)]
        max_suffix: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Convert between token form (Z = 00, O = 1101) and {0,1}.
    Decode {
        input: String,
        /// Treat the input as a {0,1} word and print its token form.
        #[arg(long)]
        to_tokens: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.trim().to_string()),
    }
}

fn read_word(arg: &str) -> Result<BinaryWord, Failure> {
    read_arg(arg)?
        .parse()
        .map_err(|e| Failure::input(format!("bad word: {e}")))
}

fn simulate(word: &str, target: Option<&str>, budget: u64) -> CmdResult {
    let start = read_word(word)?;
    let target = target.map(read_word).transpose()?;
    let outcome = run(&start, &TagRules::post(), budget, target.as_ref())
        .map_err(|e| Failure::input(e.to_string()))?;
    println!("{} {}", outcome.kind.name(), outcome.steps_taken);
    println!("final_length = {}", outcome.final_word.len());
    if let Some(p) = outcome.cycle_length() {
        println!("cycle_length = {p}");
    }
    Ok(match outcome.kind {
        OutcomeKind::BudgetExhausted => EXIT_BUDGET,
        _ => 0,
    })
}

fn verify_theorem(n_max: usize, m_max: usize, budget: u64) -> CmdResult {
    if budget == 0 {
        return Err(Failure::input("budget must be at least 1"));
    }
    let mut out = String::from("n\\m");
    for m in 0..=m_max {
        let _ = write!(out, "\t{m}");
    }
    out.push('\n');
    let mut all_reached = true;
    for n in 0..=n_max {
        let _ = write!(out, "{n}");
        for m in 0..=m_max {
            let outcome =
                verify_theorem_direct(n, m, budget).map_err(|e| Failure::input(e.to_string()))?;
            if outcome.kind == OutcomeKind::TargetReached {
                let _ = write!(out, "\t{}", outcome.steps_taken);
            } else {
                all_reached = false;
                let _ = write!(out, "\t-");
            }
        }
        out.push('\n');
    }
    print!("{out}");
    Ok(if all_reached { 0 } else { EXIT_BUDGET })
}

fn verify_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VERIFY,
        message: message.into(),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_omega(
    seed_x: u8,
    seed_a: Option<&str>,
    seed_b: Option<&str>,
    seed_c: Option<&str>,
    flip_a: Option<usize>,
    steps: usize,
    emit: Option<&PathBuf>,
    check: Option<&PathBuf>,
) -> CmdResult {
    if let Some(path) = check {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        let report = certificate::check(&text).map_err(|e| Failure::input(e.to_string()))?;
        if !report.bit_exact {
            return Err(verify_failure("document differs from a fresh rendering"));
        }
        if let Some(first) = report.failures.first() {
            return Err(verify_failure(first.clone()));
        }
        let parsed = certificate::parse(&text).map_err(|e| Failure::input(e.to_string()))?;
        let chain = verify_chain(&parsed.seed, parsed.steps.len())
            .map_err(|e| verify_failure(e.to_string()))?;
        let bad = table_mismatches(&chain);
        if !bad.is_empty() {
            return Err(verify_failure(format!(
                "table mismatch at quadruplets {bad:?}"
            )));
        }
        eprintln!(
            "certificate ok: {} steps, closure holds",
            parsed.steps.len()
        );
        return Ok(0);
    }

    if seed_x > 2 {
        return Err(Failure::input("seed-x must be 0, 1 or 2"));
    }
    let mut seed = Quadruplet::standard_seed();
    seed.x = Residue::from(seed_x);
    if let Some(a) = seed_a {
        seed.a = read_word(a)?;
    }
    if let Some(b) = seed_b {
        seed.b = read_word(b)?;
    }
    if let Some(c) = seed_c {
        seed.c = read_word(c)?;
    }
    if let Some(i) = flip_a {
        if i >= seed.a.len() {
            return Err(Failure::input(format!("flip-a index {i} out of range")));
        }
        seed.a = BinaryWord::from_bits(seed.a.iter().enumerate().map(|(k, s)| s ^ (k == i)));
    }

    let chain = verify_chain(&seed, steps).map_err(|e| verify_failure(e.to_string()))?;
    let doc = certificate::render(&chain);
    match emit {
        Some(path) => fs::write(path, &doc)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{doc}"),
    }
    if let Some(first) = chain.failures().first() {
        return Err(verify_failure(first.clone()));
    }
    let bad = table_mismatches(&chain);
    if !bad.is_empty() {
        return Err(verify_failure(format!(
            "table mismatch at quadruplets {bad:?}"
        )));
    }
    eprintln!(
        "{} steps valid, closure holds, {} tag iterations at n = m = 0",
        chain.steps.len(),
        chain.tag_iterations(0, 0)
    );
    Ok(0)
}

fn parse_block_word(s: &str) -> Result<BlockWord, Failure> {
    s.parse()
        .map_err(|e| Failure::input(format!("bad block word: {e}")))
}

fn blockset(word: &str) -> CmdResult {
    for member in converting_set(&parse_block_word(word)?) {
        println!("{member}");
    }
    Ok(0)
}

fn block_search(
    max_rows: usize,
    budget: usize,
    threads: usize,
    max_suffix: usize,
    output: Option<&PathBuf>,
) -> CmdResult {
    if budget == 0 {
        return Err(Failure::input("budget must be at least 1"));
    }
    let mut config = SearchConfig::new(max_rows, budget).threads(threads);
    config.max_suffix = max_suffix;
    let outcome = search(&config);
    let doc = render_outcome(&config, &outcome);
    match output {
        Some(path) => fs::write(path, &doc)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{doc}"),
    }
    Ok(0)
}

fn decode(input: &str, to_tokens: bool) -> CmdResult {
    let text = read_arg(input)?;
    if to_tokens {
        let word: BinaryWord = text
            .parse()
            .map_err(|e| Failure::input(format!("bad word: {e}")))?;
        let tokens = encode_tokens(&word).map_err(|e| Failure::input(e.to_string()))?;
        println!("{tokens}");
    } else {
        let tokens: TokenWord = text.parse().map_err(|e| Failure::input(format!("{e}")))?;
        println!("{}", decode_tokens(&tokens));
    }
    Ok(0)
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Simulate {
            word,
            target,
            budget,
        } => simulate(&word, target.as_deref(), budget),
        Command::VerifyTheorem {
            n_max,
            m_max,
            budget,
        } => verify_theorem(n_max, m_max, budget),
        Command::VerifyOmega {
            seed_x,
            seed_a,
            seed_b,
            seed_c,
            flip_a,
            steps,
            emit,
            check,
        } => verify_omega(
            seed_x,
            seed_a.as_deref(),
            seed_b.as_deref(),
            seed_c.as_deref(),
            flip_a,
            steps,
            emit.as_ref(),
            check.as_ref(),
        ),
        Command::Blockset { word } => blockset(&word),
        Command::BlockSearch {
            max_rows,
            budget,
            threads,
            max_suffix,
            output,
        } => block_search(max_rows, budget, threads, max_suffix, output.as_ref()),
        Command::Decode { input, to_tokens } => decode(&input, to_tokens),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    if let Err(e) = verify_embedded() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_VERIFY);
    }
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
