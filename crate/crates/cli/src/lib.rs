// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line surface for the `kuttaka` library.
//!
//! [`run`] does all the work and returns what should be printed, so tests can
//! drive it without spawning a process.

pub mod bench;
pub mod envelope;
pub mod vectors;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kuttaka::codecs::{
    aryabhata_decode, aryabhata_encode, katapayadi_decode, katapayadi_encode, KatapayadiTable,
    Order, ReciprocalCipher,
};
use kuttaka::{mod_inverse, solve_system, solve_traced, Congruence, Equation, Trace};
use serde_json::json;

use envelope::{num, nums, Envelope, Payload, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

pub const DEFAULT_FIXTURES: &str = "fixtures/paper_vectors.json";

#[derive(Debug, Parser)]
#[command(
    name = "kuttaka-kit",
    version,
    about = "Kuttaka solver, congruences and classical numeral codes"
)]
pub struct Cli {
    /// Print one JSON envelope on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Show intermediate steps.
    #[arg(long, global = true)]
    pub trace: bool,
    /// RNG seed for bench.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Reject characters outside the codec alphabet.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a*x + c = b*y.
    #[command(allow_negative_numbers = true)]
    Solve {
        #[arg(short)]
        a: i64,
        #[arg(short)]
        b: i64,
        #[arg(short)]
        c: i64,
    },
    /// Inverse of a modulo m.
    Inverse {
        #[arg(short)]
        a: u64,
        #[arg(short)]
        m: u64,
    },
    /// Solve x = r (mod m) for repeated `-r R -m M` pairs.
    Congruence {
        #[arg(short, required = true)]
        r: Vec<u64>,
        #[arg(short, required = true)]
        m: Vec<u64>,
    },
    /// Number to code word.
    Encode(EncodeArgs),
    /// Code word to number.
    Decode(DecodeArgs),
    /// Katapayadi on either table; decodes unless --encode.
    Katapayadi(KatapayadiArgs),
    /// Apply the Muladeviya cipher (its own inverse).
    Mula { text: Vec<String> },
    /// Check every fixture vector.
    Selftest {
        #[arg(long, default_value = DEFAULT_FIXTURES)]
        fixtures: PathBuf,
    },
    /// Compare the kuttaka inverse with the extended-Euclid inverse.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Code {
    Aryabhata,
    Katapayadi,
    KatapayadiEnglish,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Sanskrit,
    English,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[arg(long, value_enum, default_value = "aryabhata")]
    pub code: Code,
    /// Least significant syllable first.
    #[arg(long)]
    pub ascending: bool,
    /// Katapayadi vowel written after each consonant.
    #[arg(long)]
    pub vowel: Option<String>,
    /// Katapayadi consonant choice: first, cycle, row1, row2, ...
    #[arg(long)]
    pub chooser: Option<String>,
    pub value: Vec<String>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long, value_enum, default_value = "aryabhata")]
    pub code: Code,
    pub text: Vec<String>,
}

#[derive(Debug, Args)]
pub struct KatapayadiArgs {
    #[arg(long, value_enum, default_value = "sanskrit")]
    pub table: Table,
    #[arg(long)]
    pub encode: bool,
    #[arg(long)]
    pub vowel: Option<String>,
    #[arg(long)]
    pub chooser: Option<String>,
    /// Write the vowel after the last consonant too.
    #[arg(long)]
    pub trailing_vowel: Option<bool>,
    pub text: Vec<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    /// Modulus size in bits.
    #[arg(long, default_value_t = 32)]
    pub bits: u32,
    /// Fixed pair instead of random ones (give both -a and -m).
    #[arg(short, requires = "m")]
    pub a: Option<u64>,
    #[arg(short, requires = "a")]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(message: impl Into<String>) -> Envelope {
    Envelope::error("usage", message, None, EXIT_USAGE)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let json = args.iter().any(|a| a == "--json");
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            let env = usage(first.trim_start_matches("error: "));
            let mut out = emit(&env, json);
            out.stderr = rendered;
            return out;
        }
    };
    let env = dispatch(&cli, stdin);
    emit(&env, cli.json)
}

fn emit(env: &Envelope, json: bool) -> Output {
    let mut stdout = String::new();
    let mut stderr = String::new();
    match &env.payload {
        Payload::Ok { .. } => {
            if !json {
                stdout = format!("{}\n", env.plain);
            }
        }
        Payload::Err(e) => {
            stderr = format!("error: {}\n", e.message);
            if !json && env.exit_code == EXIT_CHECK_FAILED {
                stdout = format!("{}\n", env.plain);
            }
        }
    }
    if json {
        stdout = format!("{}\n", env.to_json());
    }
    Output {
        code: env.exit_code,
        stdout,
        stderr,
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Envelope {
    let result = match &cli.command {
        Command::Solve { a, b, c } => cmd_solve(*a, *b, *c, cli.trace),
        Command::Inverse { a, m } => cmd_inverse(*a, *m),
        Command::Congruence { r, m } => cmd_congruence(r, m),
        Command::Encode(args) => input(&args.value, stdin).and_then(|t| cmd_encode(args, &t)),
        Command::Decode(args) => {
            input(&args.text, stdin).and_then(|t| cmd_decode(args.code, &t, cli.strict))
        }
        Command::Katapayadi(args) => {
            input(&args.text, stdin).and_then(|t| cmd_katapayadi(args, &t, cli.strict))
        }
        Command::Mula { text } => input(text, stdin).and_then(|t| cmd_mula(&t, cli.strict)),
        Command::Selftest { fixtures } => Ok(cmd_selftest(fixtures)),
        Command::Bench(args) => cmd_bench(args, cli.seed),
    };
    result.unwrap_or_else(|e| e)
}

/// Codec text: trailing arguments joined by spaces, else all of stdin.
fn input(args: &[String], stdin: &mut dyn Read) -> Result<String, Envelope> {
    let text = if args.is_empty() {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        buf.trim_end_matches(['\n', '\r']).to_string()
    } else {
        args.join(" ")
    };
    if text.trim().is_empty() {
        return Err(usage("no input text"));
    }
    Ok(text)
}

fn cmd_solve(a: i64, b: i64, c: i64, trace: bool) -> Result<Envelope, Envelope> {
    let eq = Equation::new(a, c, b)?;
    let (s, steps) = solve_traced(&eq)?;
    let line = format!(
        "x_min={} y_min={} x_raw={} y_raw={} period_x={} period_y={}",
        s.x_min, s.y_min, s.x_raw, s.y_raw, s.period_x, s.period_y
    );
    let result = json!({
        "x_min": num(s.x_min),
        "y_min": num(s.y_min),
        "x_raw": num(s.x_raw),
        "y_raw": num(s.y_raw),
        "period_x": num(s.period_x),
        "period_y": num(s.period_y),
    });
    if !trace {
        return Ok(Envelope::ok(result, line));
    }
    let Some(t) = steps else {
        let plain = format!("c = 0, so x = y = 0 without division\n{line}");
        return Ok(Envelope::ok(result, plain).with_steps(json!({ "trivial": true })));
    };
    let plain = format!(
        "{}\n{line}",
        render_trace(&t, a.max(b).into(), a.min(b).into())
    );
    Ok(Envelope::ok(result, plain).with_steps(json!({
        "quotients": nums(&t.chain.quotients),
        "remainders": nums(&t.chain.remainders),
        "gcd": num(t.chain.gcd),
        "retained": t.retained,
        "swapped": t.swapped,
        "r_last": num(t.r_last),
        "d_prev": num(t.d_prev),
        "offset": num(t.offset),
        "mati": num(t.mati),
        "mati_quotient": num(t.mati_quotient),
        "valli_columns": t.columns.iter().map(|c| nums(c)).collect::<Vec<_>>(),
    })))
}

/// Division steps, the mati equation, then the array with one fold per
/// printed column, the way it is laid out by hand.
fn render_trace(t: &Trace, big: i128, small: i128) -> String {
    let mut out = vec![format!("mutual division of {big} by {small}:")];
    let (mut dividend, mut divisor) = (big, small);
    for (q, r) in t.chain.quotients.iter().zip(&t.chain.remainders) {
        out.push(format!("  {dividend} = {q} x {divisor} + {r}"));
        (dividend, divisor) = (divisor, *r);
    }
    let sign = if t.offset < 0 { '-' } else { '+' };
    out.push(format!(
        "mati: {} x {} {sign} {} = {} x {}",
        t.r_last,
        t.mati,
        t.offset.abs(),
        t.d_prev,
        t.mati_quotient
    ));
    out.push("valli:".into());
    let width = t
        .columns
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let rows = t.columns.first().map_or(0, Vec::len);
    for i in 0..rows {
        let cells: Vec<String> = t
            .columns
            .iter()
            .filter_map(|col| col.get(i))
            .map(|v| format!("{v:>width$}"))
            .collect();
        out.push(format!("  {}", cells.join(" ")));
    }
    out.join("\n")
}

fn cmd_inverse(a: u64, m: u64) -> Result<Envelope, Envelope> {
    let v = mod_inverse(a, m)?;
    Ok(Envelope::ok(
        json!({ "a": a, "m": m, "inverse": v }),
        v.to_string(),
    ))
}

fn cmd_congruence(r: &[u64], m: &[u64]) -> Result<Envelope, Envelope> {
    if r.len() != m.len() {
        return Err(usage(format!(
            "every -r needs a matching -m (got {} residues, {} moduli)",
            r.len(),
            m.len()
        )));
    }
    let cs = r
        .iter()
        .zip(m)
        .map(|(&r, &m)| Congruence::new(r, m))
        .collect::<kuttaka::Result<Vec<_>>>()?;
    let s = solve_system(&cs)?;
    Ok(Envelope::ok(
        json!({ "value": s.value, "combined_modulus": s.combined_modulus }),
        format!("{} mod {}", s.value, s.combined_modulus),
    ))
}

fn katapayadi_table(code: Code) -> KatapayadiTable {
    match code {
        Code::KatapayadiEnglish => KatapayadiTable::english(),
        _ => KatapayadiTable::sanskrit(),
    }
}

fn code_name(code: Code) -> &'static str {
    match code {
        Code::Aryabhata => "aryabhata",
        Code::Katapayadi => "katapayadi",
        Code::KatapayadiEnglish => "katapayadi-english",
    }
}

fn katapayadi_word(
    digits: &str,
    table: &KatapayadiTable,
    vowel: &Option<String>,
    chooser: &Option<String>,
    trailing: Option<bool>,
) -> Result<String, Envelope> {
    let mut options = table.default_options();
    if let Some(v) = vowel {
        options.vowel = v.clone();
    }
    if let Some(c) = chooser {
        options.chooser = vectors::chooser_named(c).map_err(usage)?;
    }
    if let Some(t) = trailing {
        options.trailing_vowel = t;
    }
    Ok(katapayadi_encode(digits.trim(), table, &options)?)
}

fn cmd_encode(args: &EncodeArgs, text: &str) -> Result<Envelope, Envelope> {
    let encoded = match args.code {
        Code::Aryabhata => {
            let n: u64 = text
                .trim()
                .parse()
                .map_err(|_| usage(format!("{:?} is not a nonnegative integer", text.trim())))?;
            let order = if args.ascending {
                Order::Ascending
            } else {
                Order::Descending
            };
            aryabhata_encode(n, order)?
        }
        code => katapayadi_word(
            text,
            &katapayadi_table(code),
            &args.vowel,
            &args.chooser,
            None,
        )?,
    };
    Ok(Envelope::ok(
        json!({ "code": code_name(args.code), "input": text.trim(), "text": encoded }),
        encoded.clone(),
    ))
}

fn cmd_decode(code: Code, text: &str, strict: bool) -> Result<Envelope, Envelope> {
    let (value, plain) = match code {
        Code::Aryabhata => {
            let n = aryabhata_decode(text)?;
            (json!(n), n.to_string())
        }
        code => {
            let table = katapayadi_table(code);
            if strict {
                table.check_alphabet(text)?;
            }
            let digits = katapayadi_decode(text, &table)?;
            (json!(digits), digits)
        }
    };
    Ok(Envelope::ok(
        json!({ "code": code_name(code), "text": text, "value": value }),
        plain,
    ))
}

fn cmd_katapayadi(args: &KatapayadiArgs, text: &str, strict: bool) -> Result<Envelope, Envelope> {
    let code = match args.table {
        Table::Sanskrit => Code::Katapayadi,
        Table::English => Code::KatapayadiEnglish,
    };
    if !args.encode {
        return cmd_decode(code, text, strict);
    }
    let table = katapayadi_table(code);
    let word = katapayadi_word(
        text,
        &table,
        &args.vowel,
        &args.chooser,
        args.trailing_vowel,
    )?;
    Ok(Envelope::ok(
        json!({ "code": code_name(code), "input": text.trim(), "text": word }),
        word.clone(),
    ))
}

fn cmd_mula(text: &str, strict: bool) -> Result<Envelope, Envelope> {
    let out = ReciprocalCipher::muladeviya().apply_text(text, strict)?;
    Ok(Envelope::ok(json!({ "text": out }), out.clone()))
}

fn cmd_selftest(path: &std::path::Path) -> Envelope {
    let vectors = match vectors::load(path) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    if vectors.is_empty() {
        return usage("no vectors");
    }
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for v in &vectors {
        match vectors::check(v) {
            vectors::Outcome::Pass => lines.push(format!("PASS {}", v.id)),
            vectors::Outcome::Fail { actual } => {
                let got = match actual {
                    Ok(value) => value.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                lines.push(format!("FAIL {}: expected {}, got {got}", v.id, v.expected));
                failed.push(v.id.clone());
            }
        }
    }
    let passed = vectors.len() - failed.len();
    lines.push(format!("{passed}/{} vectors passed", vectors.len()));
    let plain = lines.join("\n");
    if failed.is_empty() {
        Envelope::ok(
            json!({ "total": vectors.len(), "passed": passed, "failed": [] }),
            plain,
        )
    } else {
        Envelope::check_failed(format!("failing vectors: {}", failed.join(", ")), plain)
    }
}

fn cmd_bench(args: &BenchArgs, seed: u64) -> Result<Envelope, Envelope> {
    if args.trials == 0 {
        return Err(usage("trials must be at least 1"));
    }
    if !(bench::MIN_BITS..=bench::MAX_BITS).contains(&args.bits) {
        return Err(usage(format!(
            "bits must be between {} and {}",
            bench::MIN_BITS,
            bench::MAX_BITS
        )));
    }
    let fixed = args.a.zip(args.m);
    if let Some((a, m)) = fixed {
        mod_inverse(a, m)?;
    }
    let config = bench::Config {
        trials: args.trials,
        bits: args.bits,
        seed,
        fixed,
    };
    match bench::run(&config) {
        Ok(report) => {
            let (a, m, inverse) = report.last;
            let k_ns = report.kuttaka_median.as_nanos() as u64;
            let e_ns = report.euclid_median.as_nanos() as u64;
            let mut plain = format!(
                "trials={} bits={} seed={seed} mismatches=0 kuttaka_median_ns={k_ns} euclid_median_ns={e_ns}",
                report.trials, args.bits
            );
            if fixed.is_some() {
                plain.push_str(&format!(
                    "\ninverse of {a} mod {m}: kuttaka={inverse} euclid={inverse}"
                ));
            }
            Ok(Envelope::ok(
                json!({
                    "trials": report.trials,
                    "bits": args.bits,
                    "seed": seed,
                    "mismatches": 0,
                    "last": { "a": a, "m": m, "inverse": inverse },
                    "kuttaka_median_ns": k_ns,
                    "euclid_median_ns": e_ns,
                }),
                plain,
            ))
        }
        Err(mismatch) => {
            let show = |r: &Result<u64, String>| match r {
                Ok(v) => v.to_string(),
                Err(e) => format!("error ({e})"),
            };
            let msg = format!(
                "mismatch at a={} m={}: kuttaka={} euclid={}",
                mismatch.a,
                mismatch.m,
                show(&mismatch.kuttaka),
                show(&mismatch.euclid)
            );
            Err(Envelope::check_failed(msg.clone(), msg))
        }
    }
}
