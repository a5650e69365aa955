//! The `noc` command line.
//!
//! Exit status: 0 on success, 1 when a code fails verification, 2 for
//! usage or parameter errors, 3 for a malformed input file, 4 for I/O
//! errors. With `--json` every command prints one object
//! `{command, params, values}` whose keys depend only on the subcommand;
//! big integers are decimal strings.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use noc_core::bounds::{chee_bound, levenshtein_bound, recursive_bound, recursive_bound_min, BoundValue};
use noc_core::construct::{
    construction_i, construction_i_prime, construction_ia, construction_ii, construction_ii_prime, ForbiddenSet,
};
use noc_core::count::{
    b_count_recurrence, epsilon_k, growth_rate, r_count, s_count, u_count, v_count, vcal_count, CodeSizeProfile,
    GrowthFamily,
};
use noc_core::search::{max_code_exhaustive, max_code_extending, SearchResult};
use noc_core::verify::{expanding_word, overlap_witness, EnumCap};
use noc_core::{Alphabet, Bipartition, Code, PartSizes, Symbol};
use serde_json::{json, Map, Value};

use crate::format::{self, FormatError};
use crate::tables::{self, TableSpec};

/// Environment variable overriding the enumeration cap `q^n`.
pub const ENUM_CAP_VAR: &str = "NOC_ENUM_CAP";

const DECIMAL_DIGITS: usize = 30;

#[derive(Parser, Debug)]
#[command(name = "noc", version, about = "Construct, verify, count and bound q-ary non-overlapping codes")]
pub struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and write it in the code file format.
    Construct(ConstructArgs),
    /// Check that a code file is non-overlapping (and optionally non-expandable).
    Verify(VerifyArgs),
    /// Exact cardinalities and growth constants.
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Upper bounds on code sizes.
    Bound {
        #[command(subcommand)]
        what: BoundCmd,
    },
    /// Exact maximum fixed-length code by branch and bound.
    Search(SearchArgs),
    /// Reproduce a cardinality table.
    Tables(TablesArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ConstructKind {
    I,
    Ia,
    IPrime,
    Ii,
    IiPrime,
}

#[derive(Args, Debug)]
struct BipartitionArgs {
    /// Symbols of I, comma-separated.
    #[arg(long = "i", value_name = "SYMBOLS")]
    i: Option<String>,
    /// Symbols of J, comma-separated; defaults to the complement of I.
    #[arg(long = "j", value_name = "SYMBOLS", requires = "i")]
    j: Option<String>,
    /// Use I = {0, .., isize-1} and J = the rest.
    #[arg(long, conflicts_with = "i")]
    isize: Option<usize>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    /// Code length (the maximum length for ii and ii-prime).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    q: usize,
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    bp: BipartitionArgs,
    /// Forbidden blocks for ia (a word file); defaults to I^k.
    #[arg(long)]
    c: Option<PathBuf>,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Also require that no word of the same length can be added.
    #[arg(long)]
    expandable: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct SizeArgs {
    #[arg(long)]
    q: u32,
    /// |I|; |J| = q - isize.
    #[arg(long)]
    isize: u32,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Length profile file.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Code file; its length profile is used.
    #[arg(long)]
    code: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Fixed,
    Variable,
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    /// I^k-free words starting and ending in J.
    U(SizeArgs),
    /// Size of Construction I'.
    S(SizeArgs),
    /// (I^k ∪ J^k)-free words starting in I and ending in J.
    R(SizeArgs),
    /// Size of one length-n layer of Construction II'.
    V(SizeArgs),
    /// Size of Construction II' up to length n.
    Vcal(SizeArgs),
    /// Length-m words avoiding every codeword.
    B {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        m: usize,
        /// Skip the non-overlap check of a --code input.
        #[arg(long)]
        assume_valid: bool,
    },
    /// ε_k by root and series.
    Epsilon {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = noc_core::count::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Growth rate of a family with |I| = |J|.
    Rate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        family: Family,
    },
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    Lev {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    Chee {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Bound on the length-n layer given the shorter layers.
    Recursive {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The recursive bound minimised over m.
    RecursiveMin {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Alphabet size; taken from --base when given.
    #[arg(long)]
    q: Option<usize>,
    /// Branch-and-bound node budget.
    #[arg(long, default_value_t = 100_000_000)]
    node_limit: u64,
    /// Only add length-n words to this code.
    #[arg(long)]
    base: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    table: u8,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Params(String),
    #[error(transparent)]
    Core(#[from] noc_core::Error),
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(noc_core::Error::Overlapping(_)) => 1,
            CliError::Params(_) | CliError::Core(_) => 2,
            CliError::Input { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }
}

/// What a command produced: text for humans, fields for `--json`.
struct Report {
    command: &'static str,
    params: Map<String, Value>,
    values: Map<String, Value>,
    text: String,
    status: i32,
}

impl Report {
    fn new(command: &'static str, params: Value, values: Value, text: String) -> Self {
        let obj = |v: Value| match v {
            Value::Object(m) => m,
            _ => unreachable!("params and values are objects"),
        };
        Report { command, params: obj(params), values: obj(values), text, status: 0 }
    }

    fn json(&self) -> Value {
        json!({ "command": self.command, "params": self.params, "values": self.values })
    }
}

fn enum_cap() -> Result<EnumCap, CliError> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(EnumCap)
            .map_err(|_| CliError::Params(format!("{ENUM_CAP_VAR}={v} is not a nonnegative integer"))),
        Err(_) => Ok(EnumCap::DEFAULT),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_code(path: &Path) -> Result<Code, CliError> {
    format::parse_code(&read(path)?).map_err(|source| CliError::Input { path: path.into(), source })
}

fn read_profile(source: &SourceArgs, assume_valid: bool) -> Result<CodeSizeProfile, CliError> {
    match (&source.profile, &source.code) {
        (Some(p), _) => format::parse_profile(&read(p)?).map_err(|e| CliError::Input { path: p.clone(), source: e }),
        (None, Some(c)) => {
            let code = read_code(c)?;
            if !assume_valid {
                if let Some(w) = overlap_witness(&code) {
                    return Err(noc_core::Error::Overlapping(w).into());
                }
            }
            Ok(CodeSizeProfile::from_code(&code))
        }
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn source_param(source: &SourceArgs) -> Value {
    json!({
        "profile": source.profile.as_ref().map(|p| p.display().to_string()),
        "code": source.code.as_ref().map(|p| p.display().to_string()),
    })
}

/// Writes through a temporary file in the target directory, so a failed
/// run never leaves a partial file behind.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.into(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn parse_symbol_list(text: &str, what: &str) -> Result<Vec<Symbol>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<Symbol>().map_err(|_| CliError::Params(format!("{what}: `{t}` is not a symbol"))))
        .collect()
}

fn bipartition(args: &BipartitionArgs, alphabet: Alphabet) -> Result<Bipartition, CliError> {
    let bp = match (&args.i, &args.j, args.isize) {
        (Some(i), Some(j), _) => {
            Bipartition::new(alphabet, &parse_symbol_list(i, "--i")?, &parse_symbol_list(j, "--j")?)?
        }
        (Some(i), None, _) => Bipartition::from_i(alphabet, &parse_symbol_list(i, "--i")?)?,
        (None, _, Some(size)) => Bipartition::canonical(alphabet, size)?,
        (None, _, None) if alphabet.size() == 2 => Bipartition::binary(),
        (None, _, None) => return Err(CliError::Params("give --i [--j] or --isize to choose I and J".into())),
    };
    Ok(bp)
}

fn symbols_text(s: &[Symbol]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn require_k(k: Option<usize>) -> Result<usize, CliError> {
    k.ok_or_else(|| CliError::Params("this construction needs --k".into()))
}

fn cmd_construct(a: &ConstructArgs) -> Result<Report, CliError> {
    let alphabet = Alphabet::new(a.q)?;
    let mut echo = format!("construction={:?} n={} q={}", a.kind, a.n, a.q);
    let code = match a.kind {
        ConstructKind::I => construction_i(a.n, a.q, require_k(a.k)?)?,
        ConstructKind::Ii => {
            if a.q != 2 {
                return Err(CliError::Params("construction ii is binary; use ii-prime for q > 2".into()));
            }
            construction_ii(a.n, require_k(a.k)?)?
        }
        kind => {
            let bp = bipartition(&a.bp, alphabet)?;
            echo.push_str(&format!(" I={{{}}} J={{{}}}", symbols_text(bp.i()), symbols_text(bp.j())));
            match kind {
                ConstructKind::IPrime => construction_i_prime(a.n, &bp, require_k(a.k)?)?,
                ConstructKind::IiPrime => construction_ii_prime(a.n, &bp, require_k(a.k)?)?,
                ConstructKind::Ia => {
                    let forbidden = match &a.c {
                        Some(path) => {
                            let (c_alphabet, blocks) = format::parse_words(&read(path)?)
                                .map_err(|source| CliError::Input { path: path.clone(), source })?;
                            if c_alphabet != alphabet {
                                return Err(CliError::Params(format!(
                                    "{} is over Z_{}, not Z_{}",
                                    path.display(),
                                    c_alphabet.size(),
                                    a.q
                                )));
                            }
                            let k = blocks.first().map(|b| b.len()).or(a.k).unwrap_or(1);
                            ForbiddenSet::new(k, blocks)?
                        }
                        None => ForbiddenSet::power(bp.i(), require_k(a.k)?)?,
                    };
                    construction_ia(a.n, &bp, &forbidden)?
                }
                _ => unreachable!(),
            }
        }
    };
    if let Some(k) = a.k {
        echo.push_str(&format!(" k={k}"));
    }
    let comments = [echo.clone(), format!("size={}", code.len())];
    let contents = format::write_code(&code, &comments);
    let text = match &a.out {
        Some(path) => {
            write_atomic(path, &contents)?;
            format!("wrote {} words to {}\n", code.len(), path.display())
        }
        None => contents,
    };
    let words: Vec<String> = code.iter().map(|w| format::format_word(w, alphabet)).collect();
    Ok(Report::new(
        "construct",
        json!({
            "kind": format!("{:?}", a.kind), "n": a.n, "q": a.q, "k": a.k,
            "i": a.bp.i, "j": a.bp.j, "isize": a.bp.isize,
            "c": a.c.as_ref().map(|p| p.display().to_string()),
            "out": a.out.as_ref().map(|p| p.display().to_string()),
        }),
        json!({ "size": code.len().to_string(), "words": words }),
        text,
    ))
}

fn cmd_verify(a: &VerifyArgs, cap: EnumCap) -> Result<Report, CliError> {
    let code = read_code(&a.input)?;
    let alphabet = code.alphabet();
    let witness = overlap_witness(&code);
    let mut status = 0;
    let mut text = String::new();
    let mut expansion: Option<String> = None;
    if let Some(w) = &witness {
        status = 1;
        text.push_str(&format!("overlapping: {w}\nwitness: {}\n", format::format_word(&w.overlap, alphabet)));
    } else {
        text.push_str(&format!("non-overlapping ({} words)\n", code.len()));
    }
    let mut expandable: Option<bool> = None;
    if a.expandable && witness.is_none() {
        let n = code
            .fixed_length()
            .ok_or_else(|| CliError::Params("--expandable needs a nonempty fixed-length code".into()))?;
        let x = expanding_word(&code, n, cap)?;
        expandable = Some(x.is_some());
        match x {
            Some(x) => {
                status = 1;
                let s = format::format_word(&x, alphabet);
                text.push_str(&format!("expandable: adding {s} keeps the code non-overlapping\n"));
                expansion = Some(s);
            }
            None => text.push_str("non-expandable\n"),
        }
    }
    let mut report = Report::new(
        "verify",
        json!({ "in": a.input.display().to_string(), "expandable": a.expandable }),
        json!({
            "size": code.len().to_string(),
            "non_overlapping": witness.is_none(),
            "witness": witness.as_ref().map(|w| format::format_word(&w.overlap, alphabet)),
            "witness_detail": witness.as_ref().map(|w| w.to_string()),
            "expandable": expandable,
            "expansion": expansion,
        }),
        text,
    );
    report.status = status;
    Ok(report)
}

fn sizes(a: &SizeArgs) -> Result<PartSizes, CliError> {
    if a.isize == 0 || a.isize >= a.q {
        return Err(CliError::Params(format!("need 1 <= isize <= q-1, got isize={} q={}", a.isize, a.q)));
    }
    Ok(PartSizes::split(a.q, a.isize)?)
}

fn count_report(name: &'static str, a: &SizeArgs, value: num_bigint::BigUint) -> Report {
    Report::new(
        name,
        json!({ "q": a.q, "isize": a.isize, "k": a.k, "n": a.n }),
        json!({ "value": value.to_string() }),
        format!("{value}\n"),
    )
}

fn cmd_count(what: &CountCmd) -> Result<Report, CliError> {
    Ok(match what {
        CountCmd::U(a) => count_report("count u", a, u_count(sizes(a)?, a.k, a.n)?),
        CountCmd::S(a) => count_report("count s", a, s_count(sizes(a)?, a.k, a.n)?),
        CountCmd::R(a) => count_report("count r", a, r_count(sizes(a)?, a.k, a.n)?),
        CountCmd::V(a) => count_report("count v", a, v_count(sizes(a)?, a.k, a.n)?),
        CountCmd::Vcal(a) => count_report("count vcal", a, vcal_count(sizes(a)?, a.k, a.n)?),
        CountCmd::B { source, m, assume_valid } => {
            let profile = read_profile(source, *assume_valid)?;
            let b = b_count_recurrence(&profile, *m);
            let mut params = source_param(source);
            params["m"] = json!(m);
            params["assume_valid"] = json!(assume_valid);
            Report::new("count b", params, json!({ "value": b.to_string() }), format!("{b}\n"))
        }
        CountCmd::Epsilon { k, tol } => {
            let r = epsilon_k(*k, *tol)?;
            let d = |x: &noc_core::count::FixedPoint| x.to_decimal(DECIMAL_DIGITS);
            Report::new(
                "count epsilon",
                json!({ "k": k, "tol": tol }),
                json!({
                    "epsilon": d(&r.epsilon), "y0": d(&r.y0),
                    "series_epsilon": d(&r.series_epsilon), "series_terms": r.series_terms,
                }),
                format!(
                    "epsilon_{k} = {}\ny0 = {}\nseries = {} ({} terms)\n",
                    d(&r.epsilon),
                    d(&r.y0),
                    d(&r.series_epsilon),
                    r.series_terms
                ),
            )
        }
        CountCmd::Rate { q, k, family } => {
            let fam = match family {
                Family::Fixed => GrowthFamily::Fixed,
                Family::Variable => GrowthFamily::Variable,
            };
            let rate = growth_rate(*q, *k, fam)?.to_decimal(DECIMAL_DIGITS);
            Report::new(
                "count rate",
                json!({ "q": q, "k": k, "family": format!("{family:?}").to_lowercase() }),
                json!({ "rate": rate }),
                format!("{rate}\n"),
            )
        }
    })
}

fn bound_values(b: &BoundValue, m: Option<usize>) -> (Value, String) {
    let values = json!({
        "exact": b.exact.to_string(),
        "integer_bound": b.integer_bound.to_string(),
        "strict": b.strict,
        "m": m,
    });
    let mut text = format!("exact: {}\ninteger bound: {}\nstrict: {}\n", b.exact, b.integer_bound, b.strict);
    if let Some(m) = m {
        text.push_str(&format!("minimising m: {m}\n"));
    }
    (values, text)
}

/// The profile below `n`; a layer of length `n` is the one being bounded
/// and is dropped.
fn lower_profile(source: &SourceArgs, n: usize) -> Result<CodeSizeProfile, CliError> {
    let p = read_profile(source, false)?;
    match p.n() {
        Some(top) if top > n => Err(CliError::Params(format!("the profile has length {top} > n={n}"))),
        _ => Ok(p.below(n)),
    }
}

fn cmd_bound(what: &BoundCmd) -> Result<Report, CliError> {
    let (name, params, bound, m) = match what {
        BoundCmd::Lev { n, q } => ("bound lev", json!({ "n": n, "q": q }), levenshtein_bound(*n, *q)?, None),
        BoundCmd::Chee { n, q } => ("bound chee", json!({ "n": n, "q": q }), chee_bound(*n, *q)?, None),
        BoundCmd::Recursive { source, n, m } => {
            let lower = lower_profile(source, *n)?;
            let mut params = source_param(source);
            params["n"] = json!(n);
            params["m"] = json!(m);
            ("bound recursive", params, recursive_bound(&lower, *n, *m)?, Some(*m))
        }
        BoundCmd::RecursiveMin { source, n } => {
            let lower = lower_profile(source, *n)?;
            let (b, m) = recursive_bound_min(&lower, *n)?;
            let mut params = source_param(source);
            params["n"] = json!(n);
            ("bound recursive-min", params, b, Some(m))
        }
    };
    let (values, text) = bound_values(&bound, m);
    Ok(Report::new(name, params, values, text))
}

fn cmd_search(a: &SearchArgs, cap: EnumCap) -> Result<Report, CliError> {
    let r: SearchResult = match &a.base {
        Some(path) => {
            let base = read_code(path)?;
            if a.q.is_some_and(|q| q != base.alphabet().size()) {
                return Err(CliError::Params("--q differs from the alphabet of --base".into()));
            }
            max_code_extending(&base, a.n, a.node_limit, cap)?
        }
        None => max_code_exhaustive(a.n, a.q.unwrap_or(2), a.node_limit, cap)?,
    };
    let alphabet = r.witness.alphabet();
    let words: Vec<String> = r.witness.iter().map(|w| format::format_word(w, alphabet)).collect();
    let mut text = if r.complete {
        format!("{}\n", r.max_size)
    } else {
        format!("{} (lower bound: node limit reached)\n", r.max_size)
    };
    text.push_str(&format!("# nodes explored: {}\n", r.nodes_explored));
    for w in &words {
        text.push_str(&format!("# {w}\n"));
    }
    Ok(Report::new(
        "search",
        json!({
            "n": a.n, "q": r.q, "node_limit": a.node_limit,
            "base": a.base.as_ref().map(|p| p.display().to_string()),
        }),
        json!({
            "max_size": r.max_size.to_string(), "complete": r.complete,
            "nodes_explored": r.nodes_explored.to_string(), "witness": words,
        }),
        text,
    ))
}

fn cmd_tables(a: &TablesArgs) -> Result<Report, CliError> {
    let spec = TableSpec::new(a.table).expect("clap restricts the range");
    let table = tables::compute(spec);
    let text = match a.format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => format!("{}\n", serde_json::to_string_pretty(&table.to_json()).expect("serialisable")),
    };
    let format = match a.format {
        TableFormat::Csv => "csv",
        TableFormat::Json => "json",
    };
    Ok(Report::new(
        "tables",
        json!({ "table": a.table, "format": format }),
        json!({ "q": spec.q, "rows": table.to_json() }),
        text,
    ))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let cap = enum_cap()?;
    match &cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a, cap),
        Command::Count { what } => cmd_count(what),
        Command::Bound { what } => cmd_bound(what),
        Command::Search(a) => cmd_search(a, cap),
        Command::Tables(a) => cmd_tables(a),
    }
}

/// Parses `args`, runs the command and returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json()).expect("serialisable"))
            } else {
                write!(out, "{}", report.text)
            };
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
