//! Ground-truth corpora: texts with known suffix arrays and BWTs, written and
//! checked in a single streaming pass without any suffix sorting.
//!
//! File formats:
//! - text: raw bytes `a..z`, one per rank;
//! - suffix array: little-endian `u64` values, no header, 1-based unless the
//!   manifest says `sa_base=0`;
//! - BWT: raw bytes like the text;
//! - manifest: `key=value` tokens, one header line then one line per entry.

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use apsa::{canonical_split, classify, APPerm, SynthCase};
use rand::Rng;
use rayon::prelude::*;

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;
pub const MANIFEST_NAME: &str = "manifest.txt";

const CHUNK: usize = 1 << 16;

/// Value written for suffix-array position 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaBase {
    Zero,
    One,
}

impl SaBase {
    pub fn from_zero_based(zero_based: bool) -> Self {
        if zero_based {
            SaBase::Zero
        } else {
            SaBase::One
        }
    }

    fn shift(self) -> u64 {
        match self {
            SaBase::Zero => 1,
            SaBase::One => 0,
        }
    }

    fn tag(self) -> u8 {
        match self {
            SaBase::Zero => 0,
            SaBase::One => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub id: String,
    pub n: usize,
    pub k: usize,
    pub p1: usize,
    pub case: SynthCase,
    pub text: String,
    pub sa: String,
    pub bwt: String,
    /// Run-length notation of the BWT, e.g. `b4c1a3`.
    pub runs: String,
}

impl ManifestEntry {
    pub fn perm(&self) -> apsa::Result<APPerm> {
        APPerm::new(self.n, self.k, self.p1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub sa_base: SaBase,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn render(&self) -> String {
        let mut out = format!(
            "format_version={FORMAT_VERSION} sa_base={}\n",
            self.sa_base.tag()
        );
        for e in &self.entries {
            out.push_str(&format!(
                "id={} n={} k={} p1={} case={} text={} sa={} bwt={} runs={}\n",
                e.id, e.n, e.k, e.p1, e.case, e.text, e.sa, e.bwt, e.runs
            ));
        }
        out
    }

    /// Parses and validates a manifest; errors carry a 1-based line number.
    pub fn parse(src: &str) -> Result<Self, (usize, String)> {
        let mut lines = src.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or((1, "empty manifest".to_string()))?;
        let header = fields(header).map_err(|r| (1, r))?;
        let version = lookup(&header, "format_version").map_err(|r| (1, r))?;
        if version != FORMAT_VERSION.to_string() {
            return Err((1, format!("unsupported format_version {version}")));
        }
        let sa_base = match lookup(&header, "sa_base").map_err(|r| (1, r))? {
            "0" => SaBase::Zero,
            "1" => SaBase::One,
            other => return Err((1, format!("sa_base must be 0 or 1, got {other}"))),
        };
        let mut entries = Vec::new();
        let mut ids = HashSet::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let entry = parse_entry(line).map_err(|r| (line_no, r))?;
            if !ids.insert(entry.id.clone()) {
                return Err((line_no, format!("duplicate id {}", entry.id)));
            }
            entries.push(entry);
        }
        Ok(Manifest { sa_base, entries })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let src = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Manifest::parse(&src).map_err(|(line, reason)| CliError::Manifest {
            path: path.to_path_buf(),
            line,
            reason,
        })
    }
}

fn fields(line: &str) -> Result<Vec<(&str, &str)>, String> {
    line.split_whitespace()
        .map(|tok| tok.split_once('=').ok_or(format!("token {tok:?} is not key=value")))
        .collect()
}

fn lookup<'a>(fields: &[(&str, &'a str)], key: &str) -> Result<&'a str, String> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or(format!("missing key {key}"))
}

fn parse_entry(line: &str) -> Result<ManifestEntry, String> {
    let f = fields(line)?;
    let num = |key: &str| -> Result<usize, String> {
        let v = lookup(&f, key)?;
        v.parse().map_err(|_| format!("{key}={v} is not a number"))
    };
    let entry = ManifestEntry {
        id: lookup(&f, "id")?.to_string(),
        n: num("n")?,
        k: num("k")?,
        p1: num("p1")?,
        case: lookup(&f, "case")?.parse().map_err(|e: apsa::Error| e.to_string())?,
        text: lookup(&f, "text")?.to_string(),
        sa: lookup(&f, "sa")?.to_string(),
        bwt: lookup(&f, "bwt")?.to_string(),
        runs: lookup(&f, "runs")?.to_string(),
    };
    let perm = entry.perm().map_err(|e| e.to_string())?;
    let actual = classify(&perm).0;
    if actual != entry.case {
        return Err(format!(
            "case={} but (n={}, k={}, p1={}) is {actual}",
            entry.case, entry.n, entry.k, entry.p1
        ));
    }
    Ok(entry)
}

/// Everything needed to produce any position of the text, suffix array or
/// BWT of the minimal-alphabet string for a permutation in O(1).
#[derive(Debug, Clone)]
pub struct Layout {
    perm: APPerm,
    boundaries: Vec<usize>,
    letters: Vec<u8>,
}

impl Layout {
    pub fn new(perm: APPerm) -> Self {
        let split = canonical_split(&perm);
        Layout {
            perm,
            boundaries: split.boundaries().to_vec(),
            letters: split.labels().iter().map(|&r| b'a' + (r - 1) as u8).collect(),
        }
    }

    pub fn perm(&self) -> &APPerm {
        &self.perm
    }

    /// Letter of the suffix at index `i` (1-based) of the suffix array.
    #[inline]
    fn letter_at(&self, i: usize) -> u8 {
        let sub = self.boundaries.iter().take_while(|&&b| b < i).count();
        self.letters[sub]
    }

    /// `T[1..n]`, generated in text order: `T[j]` is the letter of index `ISA[j]`.
    pub fn text_bytes(&self) -> impl Iterator<Item = u8> + '_ {
        let (n, kinv) = (self.perm.n(), self.perm.k_inverse());
        let last = self.perm.last();
        // ISA[1] = (1 - P[n]) k^{-1} mod n
        let first = ((n + 1 - last) % n * kinv) % n;
        let mut isa = if first == 0 { n } else { first };
        (0..n).map(move |_| {
            let c = self.letter_at(isa);
            isa += kinv;
            if isa > n {
                isa -= n;
            }
            c
        })
    }

    /// `BWT[i] = T[P[i + t]]` with `t = n - k^{-1}`.
    pub fn bwt_bytes(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.perm.n();
        let t = n - self.perm.k_inverse() % n;
        let mut idx = t % n + 1;
        (0..n).map(move |_| {
            let c = self.letter_at(idx);
            idx = if idx == n { 1 } else { idx + 1 };
            c
        })
    }

    /// Run-length notation of the BWT, computed from the run boundaries only.
    pub fn bwt_runs(&self) -> String {
        let mut runs: Vec<(u8, usize)> = Vec::new();
        let n = self.perm.n();
        let t = n - self.perm.k_inverse() % n;
        // the BWT is the sorted letters rotated left by t; walk the letter blocks twice
        let mut sizes = Vec::new();
        let mut start = 0;
        for (j, &b) in self.boundaries.iter().chain(std::iter::once(&n)).enumerate() {
            sizes.push((self.letters[j], b - start));
            start = b;
        }
        let mut pos = 0;
        let mut blocks = Vec::new();
        for &(c, len) in &sizes {
            blocks.push((c, len, pos));
            pos += len;
        }
        let split = t % n;
        let mut push = |c: u8, len: usize| {
            if len == 0 {
                return;
            }
            match runs.last_mut() {
                Some((last, count)) if *last == c => *count += len,
                _ => runs.push((c, len)),
            }
        };
        for &(c, len, at) in &blocks {
            let lo = at.max(split);
            if at + len > lo {
                push(c, at + len - lo);
            }
        }
        for &(c, len, at) in &blocks {
            let hi = (at + len).min(split);
            if hi > at {
                push(c, hi - at);
            }
        }
        runs.iter().map(|(c, len)| format!("{}{len}", *c as char)).collect()
    }
}

fn write_stream(
    path: &Path,
    mut fill: impl FnMut(&mut Vec<u8>) -> bool,
) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::with_capacity(CHUNK, file);
    let mut buf = Vec::with_capacity(CHUNK);
    loop {
        buf.clear();
        let more = fill(&mut buf);
        w.write_all(&buf).map_err(|e| CliError::io(path, e))?;
        if !more {
            break;
        }
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

fn write_bytes(path: &Path, bytes: impl Iterator<Item = u8>) -> Result<(), CliError> {
    let mut bytes = bytes.peekable();
    write_stream(path, |buf| {
        buf.extend(bytes.by_ref().take(CHUNK));
        bytes.peek().is_some()
    })
}

/// Writes the suffix array of `perm` straight from the progression.
pub fn write_sa(path: &Path, perm: &APPerm, base: SaBase) -> Result<(), CliError> {
    let (n, k) = (perm.n(), perm.k());
    let shift = base.shift();
    let mut p = perm.p1();
    let mut left = n;
    write_stream(path, |buf| {
        let batch = left.min(CHUNK / 8);
        for _ in 0..batch {
            buf.extend_from_slice(&(p as u64 - shift).to_le_bytes());
            p += k;
            if p > n {
                p -= n;
            }
        }
        left -= batch;
        left > 0
    })
}

/// Picks a permutation of length `n` in `case`, uniformly among ratios and
/// first entries, honouring any fixed `k` or `p1`.
pub fn choose_perm(
    n: usize,
    case: SynthCase,
    k: Option<usize>,
    p1: Option<usize>,
    rng: &mut impl Rng,
) -> Result<APPerm, CliError> {
    if n == 0 {
        return Err(CliError::Invalid("n must be at least 1".into()));
    }
    if n == 1 {
        return Ok(APPerm::new(1, k.unwrap_or(1), p1.unwrap_or(1))?);
    }
    let fits = |perm: &APPerm| classify(perm).0 == case;
    let candidates_for = |k: usize| -> Vec<usize> {
        let first_entries: Vec<usize> = match (case, p1) {
            (_, Some(p1)) => vec![p1],
            (SynthCase::Unary | SynthCase::Binary1, None) => vec![n],
            (SynthCase::Binary2, None) => vec![k + 1],
            (SynthCase::Binary3, None) => vec![1],
            (SynthCase::Ternary, None) => Vec::new(),
        };
        first_entries
            .into_iter()
            .filter(|&p| APPerm::new(n, k, p).is_ok_and(|perm| fits(&perm)))
            .collect()
    };
    let pick_p1 = |k: usize, rng: &mut dyn rand::RngCore| -> Option<usize> {
        if case == SynthCase::Ternary && p1.is_none() {
            // p1 ranges over [2..n-1] minus k + 1
            let count = (n - 2) - usize::from((2..n).contains(&(k + 1)));
            if count == 0 {
                return None;
            }
            let mut p = rng.gen_range(2..2 + count);
            if p > k && (2..n).contains(&(k + 1)) {
                p += 1;
            }
            return Some(p);
        }
        candidates_for(k).first().copied()
    };
    let ok = |k: usize| k >= 1 && k < n && apsa::gcd(k, n) == 1;
    // the reversal has a single ratio
    let k = k.or((case == SynthCase::Unary).then_some(n - 1));
    if let Some(k) = k {
        APPerm::new(n, k, 1)?;
        return pick_p1(k, rng)
            .map(|p| APPerm::new(n, k, p).expect("validated"))
            .ok_or_else(|| no_perm(n, case, Some(k), p1));
    }
    // rejection sampling over ratios; falls back to a scan for rare cases
    for _ in 0..64 {
        let k = rng.gen_range(1..n);
        if ok(k) {
            if let Some(p) = pick_p1(k, rng) {
                return Ok(APPerm::new(n, k, p).expect("validated"));
            }
        }
    }
    (1..n)
        .filter(|&k| ok(k))
        .find_map(|k| pick_p1(k, rng).map(|p| APPerm::new(n, k, p).expect("validated")))
        .ok_or_else(|| no_perm(n, case, None, p1))
}

fn no_perm(n: usize, case: SynthCase, k: Option<usize>, p1: Option<usize>) -> CliError {
    let mut msg = format!("no permutation of length {n} has case {case}");
    if let Some(k) = k {
        msg.push_str(&format!(" with k={k}"));
    }
    if let Some(p1) = p1 {
        msg.push_str(&format!(" with p1={p1}"));
    }
    CliError::Invalid(msg)
}

/// Writes the text, suffix array and BWT files for one entry into `dir`.
pub fn generate_entry(
    dir: &Path,
    id: &str,
    perm: APPerm,
    base: SaBase,
) -> Result<ManifestEntry, CliError> {
    let layout = Layout::new(perm);
    let entry = ManifestEntry {
        id: id.to_string(),
        n: perm.n(),
        k: perm.k(),
        p1: perm.p1(),
        case: classify(&perm).0,
        text: format!("{id}.txt"),
        sa: format!("{id}.sa"),
        bwt: format!("{id}.bwt"),
        runs: layout.bwt_runs(),
    };
    write_bytes(&dir.join(&entry.text), layout.text_bytes())?;
    write_sa(&dir.join(&entry.sa), &perm, base)?;
    write_bytes(&dir.join(&entry.bwt), layout.bwt_bytes())?;
    Ok(entry)
}

/// Generates every entry (in parallel) and writes the manifest last.
pub fn generate(
    dir: &Path,
    perms: &[(String, APPerm)],
    base: SaBase,
) -> Result<Manifest, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let entries = perms
        .par_iter()
        .map(|(id, perm)| generate_entry(dir, id, *perm, base))
        .collect::<Result<Vec<_>, _>>()?;
    let manifest = Manifest {
        sa_base: base,
        entries,
    };
    let path = dir.join(MANIFEST_NAME);
    std::fs::write(&path, manifest.render()).map_err(|e| CliError::io(&path, e))?;
    Ok(manifest)
}

/// Outcome of checking one file against its prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// First differing position, 1-based.
    Mismatch { index: usize, expected: u64, found: u64 },
    /// The file is not `n` records long; `offset` is in bytes.
    Malformed { offset: u64, reason: &'static str },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Mismatch { .. } => f.write_str("fail"),
            Verdict::Malformed { .. } => f.write_str("malformed"),
        }
    }
}

/// Reads until `buf` is full or the reader is exhausted.
fn fill(reader: &mut impl Read, buf: &mut [u8]) -> io::Result<usize> {
    let mut got = 0;
    while got < buf.len() {
        match reader.read(&mut buf[got..]) {
            Ok(0) => break,
            Ok(m) => got += m,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
            Err(e) => return Err(e),
        }
    }
    Ok(got)
}

/// Checks that `reader` holds exactly the suffix array of `perm`, i.e. that
/// every value follows its predecessor by `k` modulo `n`, starting at `p1`.
pub fn verify_sa(reader: &mut impl Read, perm: &APPerm, base: SaBase) -> io::Result<Verdict> {
    const LANES: usize = 8;
    let (n, k) = (perm.n() as u64, perm.k() as u64);
    let shift = base.shift();
    // lane l holds the expected value of index i + l; all lanes step by LANES * k
    let step = (LANES as u64 * k) % n;
    let mut lanes = [0u64; LANES];
    let mut p = perm.p1() as u64;
    for lane in lanes.iter_mut() {
        *lane = p;
        p = if p + k > n { p + k - n } else { p + k };
    }
    let mut buf = vec![0u8; CHUNK];
    let mut index = 0usize;
    let total = perm.n();
    loop {
        let got = fill(reader, &mut buf)?;
        let words = got / 8;
        let usable = words.min(total - index);
        let bytes = &buf[..usable * 8];
        let mut blocks = bytes.chunks_exact(8 * LANES);
        for block in blocks.by_ref() {
            let mut diff = 0u64;
            for (l, lane) in lanes.iter_mut().enumerate() {
                let found = u64::from_le_bytes(block[8 * l..8 * l + 8].try_into().unwrap());
                diff |= found ^ (*lane - shift);
            }
            if diff != 0 {
                for (l, &lane) in lanes.iter().enumerate() {
                    let found = u64::from_le_bytes(block[8 * l..8 * l + 8].try_into().unwrap());
                    if found != lane - shift {
                        return Ok(Verdict::Mismatch {
                            index: index + l + 1,
                            expected: lane - shift,
                            found,
                        });
                    }
                }
            }
            for lane in lanes.iter_mut() {
                *lane += step;
                if *lane > n {
                    *lane -= n;
                }
            }
            index += LANES;
        }
        // leftover words of this chunk go one at a time through lane 0
        for word in blocks.remainder().chunks_exact(8) {
            let found = u64::from_le_bytes(word.try_into().unwrap());
            if found != lanes[0] - shift {
                return Ok(Verdict::Mismatch {
                    index: index + 1,
                    expected: lanes[0] - shift,
                    found,
                });
            }
            lanes.rotate_left(1);
            lanes[LANES - 1] = {
                let prev = lanes[LANES - 2];
                if prev + k > n {
                    prev + k - n
                } else {
                    prev + k
                }
            };
            index += 1;
        }
        if index == total {
            let extra = got - usable * 8;
            if extra > 0 || fill(reader, &mut buf[..1])? > 0 {
                return Ok(Verdict::Malformed {
                    offset: total as u64 * 8,
                    reason: "trailing-data",
                });
            }
            return Ok(Verdict::Pass);
        }
        if got < buf.len() {
            return Ok(Verdict::Malformed {
                offset: index as u64 * 8,
                reason: "truncated",
            });
        }
    }
}

/// Checks `reader` byte by byte against `expected`, which must yield `n` bytes.
pub fn verify_bytes(
    reader: &mut impl Read,
    mut expected: impl Iterator<Item = u8>,
    n: usize,
) -> io::Result<Verdict> {
    let mut buf = vec![0u8; CHUNK];
    let mut index = 0usize;
    loop {
        let got = fill(reader, &mut buf)?;
        let usable = got.min(n - index);
        for (j, &found) in buf[..usable].iter().enumerate() {
            let want = expected.next().expect("n expected bytes");
            if found != want {
                return Ok(Verdict::Mismatch {
                    index: index + j + 1,
                    expected: u64::from(want),
                    found: u64::from(found),
                });
            }
        }
        index += usable;
        if index == n {
            if got > usable || fill(reader, &mut buf[..1])? > 0 {
                return Ok(Verdict::Malformed {
                    offset: n as u64,
                    reason: "trailing-data",
                });
            }
            return Ok(Verdict::Pass);
        }
        if got < buf.len() {
            return Ok(Verdict::Malformed {
                offset: index as u64,
                reason: "truncated",
            });
        }
    }
}

/// Per-file verdicts for one manifest entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub id: String,
    pub n: usize,
    pub text: Verdict,
    pub sa: Verdict,
    pub bwt: Verdict,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.text.passed() && self.sa.passed() && self.bwt.passed()
    }
}

fn open(path: &Path) -> Result<File, CliError> {
    File::open(path).map_err(|e| CliError::io(path, e))
}

/// Verifies the files of `entry` found in `dir`.
pub fn verify_entry(dir: &Path, entry: &ManifestEntry, base: SaBase) -> Result<EntryReport, CliError> {
    let perm = entry.perm()?;
    let layout = Layout::new(perm);
    let check = |name: &str, f: &dyn Fn(&mut File) -> io::Result<Verdict>| {
        let path = dir.join(name);
        let mut file = open(&path)?;
        f(&mut file).map_err(|e| CliError::io(&path, e))
    };
    Ok(EntryReport {
        id: entry.id.clone(),
        n: entry.n,
        text: check(&entry.text, &|r| verify_bytes(r, layout.text_bytes(), perm.n()))?,
        sa: check(&entry.sa, &|r| verify_sa(r, &perm, base))?,
        bwt: check(&entry.bwt, &|r| verify_bytes(r, layout.bwt_bytes(), perm.n()))?,
    })
}

/// Verifies every entry (in parallel); reports come back in manifest order.
pub fn verify(
    manifest: &Manifest,
    dir: &Path,
    base: SaBase,
) -> Result<Vec<EntryReport>, CliError> {
    manifest
        .entries
        .par_iter()
        .map(|e| verify_entry(dir, e, base))
        .collect()
}

/// Directory holding the files named in a manifest.
pub fn manifest_dir(manifest_path: &Path) -> PathBuf {
    manifest_path
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."))
}

#[cfg(test)]
mod tests {
    use super::*;
    use apsa::{bwt_from_sa, synth};
    use rand::SeedableRng;
    use std::io::Cursor;

    fn ap(n: usize, k: usize, p1: usize) -> APPerm {
        APPerm::new(n, k, p1).unwrap()
    }

    fn sa_bytes(perm: &APPerm, base: SaBase) -> Vec<u8> {
        perm.materialize()
            .into_iter()
            .flat_map(|v| (v as u64 - base.shift()).to_le_bytes())
            .collect()
    }

    #[test]
    fn layout_matches_synthesis() {
        for n in 1..=30 {
            for k in (1..n.max(2)).filter(|&k| apsa::gcd(k, n) == 1) {
                for p1 in 1..=n {
                    let Ok(perm) = APPerm::new(n, k, p1) else { continue };
                    let layout = Layout::new(perm);
                    let text = synth(&perm).text;
                    let bytes: Vec<u8> = layout.text_bytes().collect();
                    assert_eq!(bytes, text.to_letter_bytes().unwrap(), "{perm}");
                    let bwt = bwt_from_sa(&bytes, &perm.materialize()).unwrap();
                    assert_eq!(layout.bwt_bytes().collect::<Vec<_>>(), bwt.chars());
                    assert_eq!(layout.bwt_runs(), bwt.run_notation());
                }
            }
        }
    }

    #[test]
    fn bwt_of_figure_row() {
        let layout = Layout::new(ap(8, 5, 5));
        assert_eq!(layout.bwt_bytes().collect::<Vec<_>>(), b"bbbbcaaa");
        assert_eq!(layout.bwt_runs(), "b4c1a3");
    }

    #[test]
    fn verify_sa_accepts_and_locates_faults() {
        let perm = ap(8, 5, 5);
        let good = sa_bytes(&perm, SaBase::One);
        assert_eq!(verify_sa(&mut Cursor::new(&good), &perm, SaBase::One).unwrap(), Verdict::Pass);
        // swap entries 3 and 4
        let mut bad = good.clone();
        bad[16..32].rotate_left(8);
        assert_eq!(
            verify_sa(&mut Cursor::new(&bad), &perm, SaBase::One).unwrap(),
            Verdict::Mismatch { index: 3, expected: 7, found: 4 }
        );
        let zero = sa_bytes(&perm, SaBase::Zero);
        assert_eq!(verify_sa(&mut Cursor::new(&zero), &perm, SaBase::Zero).unwrap(), Verdict::Pass);
        assert!(!verify_sa(&mut Cursor::new(&zero), &perm, SaBase::One).unwrap().passed());
    }

    #[test]
    fn verify_sa_reports_length_problems() {
        let perm = ap(8, 5, 5);
        let good = sa_bytes(&perm, SaBase::One);
        assert_eq!(
            verify_sa(&mut Cursor::new(&good[..60]), &perm, SaBase::One).unwrap(),
            Verdict::Malformed { offset: 56, reason: "truncated" }
        );
        let mut long = good.clone();
        long.push(0);
        assert_eq!(
            verify_sa(&mut Cursor::new(&long), &perm, SaBase::One).unwrap(),
            Verdict::Malformed { offset: 64, reason: "trailing-data" }
        );
    }

    #[test]
    fn verify_sa_every_single_corruption_in_a_long_file() {
        let perm = ap(1000, 7, 3);
        let good = sa_bytes(&perm, SaBase::One);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for i in 0..1000 {
            let mut bad = good.clone();
            let old = u64::from_le_bytes(bad[8 * i..8 * i + 8].try_into().unwrap());
            let new = loop {
                let v = rng.gen_range(0..=1001u64);
                if v != old {
                    break v;
                }
            };
            bad[8 * i..8 * i + 8].copy_from_slice(&new.to_le_bytes());
            match verify_sa(&mut Cursor::new(&bad), &perm, SaBase::One).unwrap() {
                Verdict::Mismatch { index, .. } => assert_eq!(index, i + 1),
                other => panic!("corruption at {i} gave {other:?}"),
            }
        }
    }

    #[test]
    fn verify_bytes_examples() {
        let layout = Layout::new(ap(8, 5, 5));
        let v = |b: &[u8]| verify_bytes(&mut Cursor::new(b), layout.bwt_bytes(), 8).unwrap();
        assert_eq!(v(b"bbbbcaaa"), Verdict::Pass);
        assert_eq!(v(b"bbbbcaab"), Verdict::Mismatch { index: 8, expected: 97, found: 98 });
        assert_eq!(v(b"bbbb"), Verdict::Malformed { offset: 4, reason: "truncated" });
        assert_eq!(v(b"bbbbcaaaa"), Verdict::Malformed { offset: 8, reason: "trailing-data" });
    }

    #[test]
    fn manifest_round_trip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let m = generate(dir.path(), &[("e1".into(), ap(8, 5, 5))], SaBase::One).unwrap();
        let text = std::fs::read_to_string(dir.path().join(MANIFEST_NAME)).unwrap();
        assert_eq!(
            text,
            "format_version=1 sa_base=1\n\
             id=e1 n=8 k=5 p1=5 case=ternary text=e1.txt sa=e1.sa bwt=e1.bwt runs=b4c1a3\n"
        );
        assert_eq!(Manifest::parse(&text).unwrap(), m);
        assert!(Manifest::parse("").is_err());
        let dup = format!("{text}{}", text.lines().nth(1).unwrap());
        assert_eq!(Manifest::parse(&dup).unwrap_err().0, 3);
        let wrong_case = text.replace("case=ternary", "case=binary1");
        assert_eq!(Manifest::parse(&wrong_case).unwrap_err().0, 2);
        assert!(Manifest::parse(&text.replace("k=5", "k=4")).is_err());
        assert_eq!(std::fs::read(dir.path().join("e1.txt")).unwrap(), b"babbabac");
    }

    #[test]
    fn choose_perm_respects_case() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=40 {
            for case in SynthCase::ALL {
                match choose_perm(n, case, None, None, &mut rng) {
                    Ok(perm) => assert!(n == 1 || classify(&perm).0 == case, "{n} {case}"),
                    Err(_) => {
                        // only impossible combinations may fail
                        let exists = (1..n)
                            .filter(|&k| apsa::gcd(k, n) == 1)
                            .any(|k| (1..=n).any(|p| classify(&ap(n, k, p)).0 == case));
                        assert!(!exists, "{n} {case}");
                    }
                }
            }
        }
        let perm = choose_perm(8, SynthCase::Ternary, Some(5), Some(5), &mut rng).unwrap();
        assert_eq!(perm, ap(8, 5, 5));
        assert!(choose_perm(8, SynthCase::Binary3, Some(5), Some(5), &mut rng).is_err());
        assert!(choose_perm(8, SynthCase::Ternary, Some(4), None, &mut rng).is_err());
    }
}
