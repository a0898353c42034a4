//! Subcommand implementations. Each writes `key=value` records and returns an exit code.

use std::fmt::Display;
use std::io::Write;

use apsa::lyndon::{fibonacci_length, primitive_root};
use apsa::textindex::bwt_predict_with_split;
use apsa::{
    christoffel_bwt, christoffel_sa_params, christoffel_upper, christoffel_word,
    count_bounds, enumerate_strings, factorization_index, fibonacci_swapped, fibonacci_word,
    is_balanced, is_lyndon, run_count, sigma_min, suffix_array, synth, synth_general, APPerm,
    ChristoffelParams, SynthCase, Text,
};
use rand::SeedableRng;

use crate::cli::{Cli, Command, CorpusCommand, EnumerateArgs, GenArgs, PermArgs, SynthArgs, VerifyArgs};
use crate::corpus::{self, Manifest, SaBase, Verdict};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFY_FAILED};

/// Longest word for which `fib` runs the suffix-array oracle.
pub const MAX_ORACLE_LEN: u64 = 10_000_000;
/// Most strings `enumerate` will list.
pub const MAX_LISTED: u128 = 1_000_000;

/// One output line of `key=value` tokens.
#[derive(Debug, Default)]
pub struct Record(Vec<String>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(mut self, key: &str, value: impl Display) -> Self {
        self.0.push(format!("{key}={value}"));
        self
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.0.join(" "))
    }
}

fn opt(v: Option<impl Display>) -> String {
    v.map_or("none".to_string(), |v| v.to_string())
}

fn emit(out: &mut dyn Write, record: Record) -> Result<(), CliError> {
    record.write(out).map_err(|e| CliError::io("<stdout>", e))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Synth(args) => cmd_synth(&args, out),
        Command::Classify { text } => cmd_classify(&text, out),
        Command::Christoffel { p, q } => cmd_christoffel(p, q, out),
        Command::Fib { m } => cmd_fib(m, out),
        Command::Enumerate(args) => cmd_enumerate(&args, out),
        Command::Corpus(CorpusCommand::Gen(args)) => cmd_corpus_gen(&args, out),
        Command::Corpus(CorpusCommand::Verify(args)) => cmd_corpus_verify(&args, out),
    }
}

fn perm_of(args: &PermArgs) -> Result<APPerm, CliError> {
    Ok(APPerm::new(args.n, args.k, args.p1)?)
}

pub fn cmd_synth(args: &SynthArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let perm = perm_of(&args.perm)?;
    let result = match args.sigma {
        None if args.split_after.is_empty() => synth(&perm),
        sigma => {
            let sigma = sigma.unwrap_or(sigma_min(&perm) + args.split_after.len() as u32);
            synth_general(&perm, sigma, &args.split_after)?
        }
    };
    let bwt = bwt_predict_with_split(&perm, &result.split);
    let s = (result.case != SynthCase::Unary).then_some(result.split_index);
    let p_s = (result.case != SynthCase::Unary).then_some(result.p_s);
    let record = Record::new()
        .put("text", &result.text)
        .put("case", result.case)
        .put("sigma_min", sigma_min(&perm))
        .put("s", opt(s))
        .put("p_s", opt(p_s))
        .put("period", opt(result.predicted_period))
        .put("bwt", bwt.run_notation())
        .put("runs", run_count(&bwt));
    emit(out, record)?;
    Ok(EXIT_OK)
}

/// Smallest `p >= 1` with `w[i] = w[i + p]` for all valid `i`.
fn smallest_period<T: Eq>(w: &[T]) -> usize {
    (1..=w.len())
        .find(|&p| (p..w.len()).all(|i| w[i] == w[i - p]))
        .unwrap_or(w.len())
}

pub fn cmd_classify(text: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    if text.is_empty() {
        return Err(CliError::Invalid("text must not be empty".into()));
    }
    let t = Text::from_letters(text)?;
    let w = text.as_bytes();
    let sa = suffix_array(t.ranks()).into_sa();
    let binary = w.iter().all(|&c| c == b'a' || c == b'b');
    let mut record = Record::new().put("n", w.len());
    record = match APPerm::detect(&sa) {
        Some(perm) => record
            .put("ap", true)
            .put("k", perm.k())
            .put("p1", perm.p1())
            .put("case", apsa::classify(&perm).0),
        None => record.put("ap", false),
    };
    let balanced = if binary {
        is_balanced(w)?.to_string()
    } else {
        "n/a".to_string()
    };
    record = record
        .put("period", smallest_period(w))
        .put("primitive", primitive_root(w).len() == w.len())
        .put("lyndon", is_lyndon(w)?)
        .put("balanced", balanced);
    emit(out, record)?;
    Ok(EXIT_OK)
}

pub fn cmd_christoffel(p: usize, q: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = ChristoffelParams::new(p, q)?;
    let word = christoffel_word(&params);
    let text = String::from_utf8(word).expect("ascii");
    let mut record = Record::new().put("word", &text);
    if params.is_degenerate() {
        record = record.put("k", "none").put("s", "none").put("bwt", "none");
    } else {
        let perm = christoffel_sa_params(&params)?;
        let idx = factorization_index(&params)?;
        record = record
            .put("k", perm.k())
            .put("s", params.p())
            .put("bwt", christoffel_bwt(&params)?.run_notation())
            .put("factorization", format!("({})({})", &text[..idx], &text[idx..]));
    }
    let upper = String::from_utf8(christoffel_upper(&params)).expect("ascii");
    emit(out, record.put("upper", upper))?;
    Ok(EXIT_OK)
}

fn ratio_of(word: &[u8]) -> Option<APPerm> {
    APPerm::detect(suffix_array(word).sa())
}

pub fn cmd_fib(m: u32, out: &mut dyn Write) -> Result<i32, CliError> {
    let len = fibonacci_length(m)?;
    if len > MAX_ORACLE_LEN {
        return Err(CliError::Invalid(format!(
            "F_{m} has length {len}; at most {MAX_ORACLE_LEN} is supported"
        )));
    }
    let word = fibonacci_word(m)?.word;
    let swapped = fibonacci_swapped(m)?;
    let perm = ratio_of(&word);
    let swapped_perm = ratio_of(&swapped);
    let record = Record::new()
        .put("m", m)
        .put("length", len)
        .put("word", String::from_utf8_lossy(&word))
        .put("ratio", opt(perm.map(|p| p.k())))
        .put("p1", opt(perm.map(|p| p.p1())))
        .put("swapped", String::from_utf8_lossy(&swapped))
        .put("swapped_ratio", opt(swapped_perm.map(|p| p.k())));
    emit(out, record)?;
    Ok(EXIT_OK)
}

pub fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let perm = perm_of(&args.perm)?;
    let bounds = count_bounds(perm.n(), args.sigma, sigma_min(&perm))?;
    if bounds.bound_fixed_perm > MAX_LISTED {
        return Err(CliError::Invalid(format!(
            "up to {} strings; at most {MAX_LISTED} can be listed",
            bounds.bound_fixed_perm
        )));
    }
    let strings = enumerate_strings(&perm, args.sigma)?.collect::<apsa::Result<Vec<_>>>()?;
    let listed: Vec<String> = strings.iter().map(ToString::to_string).collect();
    let record = Record::new()
        .put("count", strings.len())
        .put("sigma_min", sigma_min(&perm))
        .put("bound", bounds.bound_fixed_perm)
        .put("strings", format!("[{}]", listed.join(",")));
    emit(out, record)?;
    Ok(EXIT_OK)
}

pub fn cmd_corpus_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    let mut perms = Vec::new();
    for &n in &args.sizes {
        for &case in &args.cases {
            let perm = corpus::choose_perm(n, case, args.k, args.p1, &mut rng)?;
            perms.push((format!("e{}", perms.len() + 1), perm));
        }
    }
    let base = SaBase::from_zero_based(args.zero_based);
    let manifest = corpus::generate(&args.out, &perms, base)?;
    for e in &manifest.entries {
        let record = Record::new()
            .put("id", &e.id)
            .put("n", e.n)
            .put("k", e.k)
            .put("p1", e.p1)
            .put("case", e.case)
            .put("runs", &e.runs);
        emit(out, record)?;
    }
    let path = args.out.join(corpus::MANIFEST_NAME);
    emit(out, Record::new().put("manifest", path.display()))?;
    Ok(EXIT_OK)
}

fn verdict_tokens(mut record: Record, file: &str, v: &Verdict) -> Record {
    record = record.put(file, v);
    match v {
        Verdict::Pass => record,
        Verdict::Mismatch {
            index,
            expected,
            found,
        } => record
            .put(&format!("{file}_index"), index)
            .put(&format!("{file}_expected"), expected)
            .put(&format!("{file}_found"), found),
        Verdict::Malformed { offset, reason } => record
            .put(&format!("{file}_offset"), offset)
            .put(&format!("{file}_reason"), reason),
    }
}

pub fn cmd_corpus_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let manifest = Manifest::read(&args.manifest)?;
    let dir = args
        .candidates
        .clone()
        .unwrap_or_else(|| corpus::manifest_dir(&args.manifest));
    let base = if args.zero_based {
        SaBase::Zero
    } else {
        manifest.sa_base
    };
    let reports = corpus::verify(&manifest, &dir, base)?;
    let mut failed = 0;
    for r in &reports {
        let mut record = Record::new().put("id", &r.id).put("n", r.n);
        record = verdict_tokens(record, "sa", &r.sa);
        record = verdict_tokens(record, "bwt", &r.bwt);
        record = verdict_tokens(record, "text", &r.text);
        let status = if r.passed() { "pass" } else { "fail" };
        failed += usize::from(!r.passed());
        emit(out, record.put("status", status))?;
    }
    emit(
        out,
        Record::new()
            .put("entries", reports.len())
            .put("failed", failed),
    )?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
