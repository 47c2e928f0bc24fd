//! Verification sweeps behind `fc verify`.
//!
//! A suite is split into units (one length layer, one rank, one batch of
//! samples). Unit results are appended to an optional checkpoint file as they
//! finish, so an interrupted run picks up where it stopped.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::{
    certify_equal, corollary_252_decompose, lemma_251_form, positive_lift, psi, psi_shift, tower_image_of_affine,
    tower_map, y_power, BraidLetter, BraidWord,
};
use crate::coxeter::{render_word, support_profile, CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::fc::{catalan, commutation_class, count_fc_finite, fc_criterion, is_fc_element, FcLayers};
use crate::garside::{
    braids_equal, embed_affine, left_normal_form, validate_embedding, ClassicalBraidWord, EmbeddingTable,
};
use crate::normal_form::{
    a2_family, block_decomposition, finite_nf, parse_finite_word, scan_class, validate_nf, A2Form, AffineNormalForm,
    Mode,
};
use crate::normal_form::affine::affine_nf;
use crate::perm::{for_each_reduced_word, reduced_words, word_to_element, AffinePermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Catalan,
    FcOracle,
    Multiplicity,
    NfUnique,
    A2,
    Lemma251,
    Cor252,
    Embedding,
    Garside,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Catalan => "catalan",
            Suite::FcOracle => "fc-oracle",
            Suite::Multiplicity => "multiplicity",
            Suite::NfUnique => "nf-unique",
            Suite::A2 => "a2",
            Suite::Lemma251 => "lemma251",
            Suite::Cor252 => "cor252",
            Suite::Embedding => "embedding",
            Suite::Garside => "garside",
        })
    }
}

/// Parameters of a sweep; `None` picks the suite's default range.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub ty: Option<CoxeterType>,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub max_len: Option<usize>,
    pub k_max: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    pub checkpoint: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ty: None,
            n: None,
            n_max: None,
            max_len: None,
            k_max: None,
            samples: None,
            seed: 0,
            cap: crate::fc::DEFAULT_CLASS_CAP,
            checkpoint: None,
        }
    }
}

/// Outcome of one unit of work.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct UnitResult {
    pub checked: u64,
    pub failures: u64,
    pub findings: Vec<Value>,
    pub counts: BTreeMap<String, u64>,
    pub maxima: BTreeMap<String, i64>,
}

impl UnitResult {
    fn check(&mut self, ok: bool, finding: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            let mut f = finding();
            f["kind"] = json!("failure");
            self.findings.push(f);
        }
    }

    fn note(&mut self, kind: &str, mut finding: Value) {
        finding["kind"] = json!(kind);
        self.findings.push(finding);
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn max(&mut self, key: &str, v: i64) {
        let e = self.maxima.entry(key.to_string()).or_insert(v);
        *e = (*e).max(v);
    }

    fn merge(&mut self, other: UnitResult) {
        self.checked += other.checked;
        self.failures += other.failures;
        self.findings.extend(other.findings);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        for (k, v) in other.maxima {
            self.max(&k, v);
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub result: UnitResult,
    pub units: usize,
    pub resumed: usize,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.result.failures == 0
    }

    pub fn findings_of<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a Value> {
        self.result.findings.iter().filter(move |f| f["kind"] == kind)
    }

    pub fn count(&self, key: &str) -> u64 {
        self.result.counts.get(key).copied().unwrap_or(0)
    }

    pub fn maximum(&self, key: &str) -> Option<i64> {
        self.result.maxima.get(key).copied()
    }

    /// One JSON line per finding, then the summary record.
    pub fn records(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .result
            .findings
            .iter()
            .map(|f| {
                let mut rec = json!({"type": "finding", "suite": self.suite.to_string()});
                if let (Some(r), Some(f)) = (rec.as_object_mut(), f.as_object()) {
                    r.extend(f.clone());
                }
                rec.to_string()
            })
            .collect();
        let summary = json!({
            "type": "summary",
            "suite": self.suite.to_string(),
            "passed": self.passed(),
            "checked": self.result.checked,
            "failures": self.result.failures,
            "units": self.units,
            "resumed_units": self.resumed,
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "counts": self.result.counts,
            "maxima": self.result.maxima,
        });
        out.push(summary.to_string());
        out
    }

    pub fn footer(&self) -> String {
        let other = self.result.findings.len() as u64 - self.result.failures;
        format!(
            "{}: {} ({} checks, {} failures, {} other findings, {:.2}s)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.result.checked,
            self.result.failures,
            other,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Completed units keyed by "suite/unit", backed by an append-only file.
struct Checkpoint {
    file: Option<File>,
    done: HashMap<String, UnitResult>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointLine {
    unit: String,
    result: UnitResult,
}

impl Checkpoint {
    fn open(path: Option<&PathBuf>) -> Result<Self> {
        let mut done = HashMap::new();
        let Some(path) = path else {
            return Ok(Checkpoint { file: None, done });
        };
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                // a torn final line from an interrupted write is recomputed
                if let Ok(entry) = serde_json::from_str::<CheckpointLine>(&line) {
                    done.insert(entry.unit, entry.result);
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let torn = std::fs::read(path)?.last().is_some_and(|&b| b != b'\n');
        if torn {
            writeln!(file)?;
        }
        Ok(Checkpoint { file: Some(file), done })
    }

    fn run(&mut self, unit: String, f: impl FnOnce() -> Result<UnitResult>) -> Result<(UnitResult, bool)> {
        if let Some(r) = self.done.get(&unit) {
            return Ok((r.clone(), true));
        }
        let r = f()?;
        if let Some(file) = &mut self.file {
            let line = serde_json::to_string(&CheckpointLine { unit: unit.clone(), result: r.clone() })?;
            writeln!(file, "{line}")?;
            file.flush()?;
        }
        self.done.insert(unit, r.clone());
        Ok((r, false))
    }
}

struct Runner {
    suite: Suite,
    /// Parameters that change unit contents without changing unit names.
    tag: String,
    checkpoint: Checkpoint,
    total: UnitResult,
    units: usize,
    resumed: usize,
}

impl Runner {
    fn unit(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<UnitResult>) -> Result<()> {
        let key = format!("{}{}/{}", self.suite, self.tag, name.into());
        let (r, cached) = self.checkpoint.run(key, f)?;
        self.units += 1;
        self.resumed += cached as usize;
        self.total.merge(r);
        Ok(())
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let tag = match suite {
        Suite::Embedding | Suite::Garside => format!("[seed={},samples={:?}]", cfg.seed, cfg.samples),
        Suite::Lemma251 | Suite::A2 => format!("[k_max={:?}]", cfg.k_max),
        _ => String::new(),
    };
    let mut runner = Runner {
        suite,
        tag,
        checkpoint: Checkpoint::open(cfg.checkpoint.as_ref())?,
        total: UnitResult::default(),
        units: 0,
        resumed: 0,
    };
    match suite {
        Suite::Catalan => catalan_suite(&mut runner, cfg)?,
        Suite::FcOracle => fc_oracle_suite(&mut runner, cfg)?,
        Suite::Multiplicity => multiplicity_suite(&mut runner, cfg)?,
        Suite::NfUnique => nf_unique_suite(&mut runner, cfg)?,
        Suite::A2 => a2_suite(&mut runner, cfg)?,
        Suite::Lemma251 => lemma_suite(&mut runner, cfg)?,
        Suite::Cor252 => cor_suite(&mut runner, cfg)?,
        Suite::Embedding => embedding_suite(&mut runner, cfg)?,
        Suite::Garside => garside_suite(&mut runner, cfg)?,
    }
    Ok(SuiteReport {
        suite,
        result: runner.total,
        units: runner.units,
        resumed: runner.resumed,
        elapsed: start.elapsed(),
    })
}

fn affine_types(cfg: &VerifyConfig, default: &[(usize, usize)], fallback_len: usize) -> Result<Vec<(CoxeterType, usize)>> {
    match (cfg.ty, cfg.n) {
        (Some(ty), _) => Ok(vec![(ty, cfg.max_len.unwrap_or(fallback_len))]),
        (None, Some(n)) => Ok(vec![(CoxeterType::affine(n)?, cfg.max_len.unwrap_or(fallback_len))]),
        (None, None) => default
            .iter()
            .map(|&(n, l)| Ok((CoxeterType::affine(n)?, cfg.max_len.unwrap_or(l))))
            .collect(),
    }
}

fn word_str(ty: CoxeterType, w: &[Gen]) -> String {
    render_word(w, ty)
}

fn avoids_321(p: &[i64]) -> bool {
    // longest decreasing subsequence below three
    let n = p.len();
    for j in 0..n {
        let before = (0..j).any(|i| p[i] > p[j]);
        let after = (j + 1..n).any(|k| p[k] < p[j]);
        if before && after {
            return false;
        }
    }
    true
}

fn permutations(m: usize) -> Vec<Vec<i64>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m as i64);
            out.push(q);
        }
    }
    out
}

fn catalan_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let ns: Vec<usize> = match cfg.n {
        Some(n) => vec![n],
        None => (1..=cfg.n_max.unwrap_or(6)).collect(),
    };
    for n in ns {
        r.unit(format!("n={n}"), || {
            let mut u = UnitResult::default();
            let count = count_fc_finite(n)?;
            let expected = catalan(n as u64 + 1);
            u.check(count == expected, || json!({"n": n, "count": count, "catalan": expected}));
            if n <= 7 {
                let ty = CoxeterType::finite(n)?;
                let mut avoiding = 0u64;
                for p in permutations(n + 1) {
                    let x = AffinePermutation::from_window(ty, p.clone())?;
                    let a = avoids_321(&p);
                    avoiding += a as u64;
                    u.check(is_fc_element(&x) == a, || json!({"n": n, "window": p, "avoids_321": a}));
                }
                u.check(avoiding == count, || json!({"n": n, "count": count, "avoiding_321": avoiding}));
            }
            u.bump(&format!("count_n{n}"), count);
            Ok(u)
        })?;
    }
    Ok(())
}

fn fc_oracle_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let cap = cfg.cap;
    for (ty, max_len) in affine_types(cfg, &[(2, 10), (3, 10)], 10)? {
        r.unit(format!("{ty}/len<={max_len}"), || {
            let mut words = Vec::new();
            for_each_reduced_word(ty, max_len, |w| words.push(w.to_vec()));
            let verdicts: Vec<Result<(bool, bool)>> = words
                .par_iter()
                .map(|w| {
                    let class = commutation_class(ty, w, cap)?;
                    if class.truncated {
                        return Err(Error::ClassCapExceeded(cap));
                    }
                    let oracle = class.words.iter().all(|u| !has_braid_factor(ty, u));
                    Ok((fc_criterion(ty, w), oracle))
                })
                .collect();
            let mut u = UnitResult::default();
            for (w, v) in words.iter().zip(verdicts) {
                let (fast, oracle) = v?;
                u.check(fast == oracle, || json!({"type_": ty.to_string(), "word": word_str(ty, w), "fast": fast, "oracle": oracle}));
                u.bump("fc_words", oracle as u64);
            }
            u.bump("words", words.len() as u64);
            Ok(u)
        })?;
    }
    Ok(())
}

fn has_braid_factor(ty: CoxeterType, w: &[Gen]) -> bool {
    w.windows(3).any(|f| f[0] == f[2] && ty.m(f[0], f[1]) == 3)
}

fn fc_layers(ty: CoxeterType, max_len: usize) -> Result<Vec<Vec<AffinePermutation>>> {
    FcLayers::new(ty, max_len, usize::MAX)
        .map(|layer| Ok(layer?.into_iter().map(|rec| rec.element).collect()))
        .collect()
}

fn multiplicity_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    for (ty, max_len) in affine_types(cfg, &[(3, 10)], 10)? {
        for len in 0..=max_len {
            r.unit(format!("{ty}/len={len}"), || {
                let layer = fc_layers(ty, len)?.pop().unwrap_or_default();
                let results: Vec<UnitResult> = layer
                    .par_iter()
                    .map(|x| {
                        let mut u = UnitResult::default();
                        let words = reduced_words(x);
                        let profile = support_profile(&words[0]);
                        let bad = words.iter().find(|w| support_profile(w) != profile);
                        u.check(bad.is_none(), || {
                            json!({"element": x.to_string(), "word": word_str(ty, bad.unwrap_or(&words[0]))})
                        });
                        let class = commutation_class(ty, &words[0], usize::MAX).map(|c| c.len()).unwrap_or(0);
                        u.check(class == words.len(), || {
                            json!({"element": x.to_string(), "reduced_words": words.len(), "class": class})
                        });
                        u.bump("elements", 1);
                        u.bump("reduced_words", words.len() as u64);
                        u
                    })
                    .collect();
                let mut u = UnitResult::default();
                results.into_iter().for_each(|x| u.merge(x));
                Ok(u)
            })?;
        }
    }
    r.unit("negative-control", || {
        let mut u = UnitResult::default();
        let ty = CoxeterType::affine(2)?;
        let (p, q) = (support_profile(&[1, 2, 1]), support_profile(&[2, 1, 2]));
        u.check(p != q, || json!({"control": "1 2 1 vs 2 1 2", "note": "profiles coincide"}));
        u.check(!is_fc_element(&word_to_element(ty, &[1, 2, 1])?), || json!({"control": "1 2 1"}));
        Ok(u)
    })
}

/// Open question a discrepancy between the literal and canonical grammars traces to.
fn trace_discrepancy(violations: &[String], canonical: &AffineNormalForm, scan_strict: &[AffineNormalForm]) -> Option<&'static str> {
    const BOUNDARY: &[&str] = &[
        "r_p − i_p ≥ 2 fails",
        "i_p < j ≤ r_p − 1 fails",
        "g_t < r_p fails",
        "k = 0 requires a finite residue",
    ];
    if !violations.is_empty() && violations.iter().all(|v| BOUNDARY.contains(&v.as_str())) {
        return Some("nf-boundary-values");
    }
    // the lone segment (0, n + 1) spells the same word as p = 0
    let n = canonical.n;
    let lone = |f: &AffineNormalForm| {
        let mut g = f.clone();
        if g.short == [(0, n + 1)] {
            g.short.clear();
        }
        g
    };
    if violations.is_empty() && scan_strict.iter().all(|s| lone(s) == *canonical) {
        return Some("nf-boundary-values");
    }
    None
}

fn nf_unique_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let ty = match (cfg.ty, cfg.n) {
        (Some(ty), _) => ty,
        (None, Some(n)) => CoxeterType::affine(n)?,
        (None, None) => CoxeterType::affine(2)?,
    };
    let cap = cfg.cap;
    if !ty.is_affine() {
        let max_len = cfg.max_len.unwrap_or(ty.n() * (ty.n() + 1) / 2);
        for len in 0..=max_len {
            r.unit(format!("{ty}/len={len}"), || {
                let layer = fc_layers(ty, len)?.pop().unwrap_or_default();
                let mut u = UnitResult::default();
                for x in &layer {
                    finite_uniqueness(&mut u, ty, x, cap)?;
                }
                Ok(u)
            })?;
        }
        return Ok(());
    }
    let max_len = cfg.max_len.unwrap_or(12);
    let n = ty.n();
    for len in 0..=max_len {
        r.unit(format!("{ty}/len={len}"), || {
            let layer = fc_layers(ty, len)?.pop().unwrap_or_default();
            let results: Vec<Result<UnitResult>> = layer
                .par_iter()
                .map(|x| {
                    let mut u = UnitResult::default();
                    if x.is_finite() {
                        finite_uniqueness(&mut u, ty, x, cap)?;
                    } else {
                        affine_uniqueness(&mut u, x, cap)?;
                    }
                    Ok(u)
                })
                .collect();
            let mut u = UnitResult::default();
            for x in results {
                u.merge(x?);
            }
            Ok(u)
        })?;
    }
    if let Some(p) = r.total.maxima.get("max_p").copied() {
        if 2 * p >= n as i64 {
            let finding = json!({"open_question": "p-bound", "n": n, "max_p": p, "note": "largest p reaches n/2"});
            r.total.note("observation", finding);
        }
    }
    Ok(())
}

fn finite_uniqueness(u: &mut UnitResult, ty: CoxeterType, x: &AffinePermutation, cap: usize) -> Result<()> {
    let w = x.canonical_reduced_word();
    let n = ty.n();
    let class = commutation_class(ty, &w, cap)?;
    if class.truncated {
        return Err(Error::ClassCapExceeded(cap));
    }
    let matches: Vec<_> = class.words.iter().filter_map(|u| parse_finite_word(n, u)).collect();
    let nf = finite_nf(x)?;
    u.check(matches.len() == 1 && matches[0] == nf, || {
        json!({"element": x.to_string(), "word": word_str(ty, &w), "grammar_matches": matches.len()})
    });
    let back = word_to_element(ty, &nf.to_word()?)?;
    u.check(&back == x, || json!({"element": x.to_string(), "round_trip": back.to_string()}));
    u.bump("finite_elements", 1);
    Ok(())
}

fn affine_uniqueness(u: &mut UnitResult, x: &AffinePermutation, cap: usize) -> Result<()> {
    let ty = x.ty();
    let nf = affine_nf(x)?;
    let scan = scan_class(x, cap)?;
    let word = nf.to_word()?;
    let rendered = word_str(ty, &word);
    u.check(scan.lenient_words >= 1, || json!({"element": x.to_string(), "lenient_parses": 0}));
    u.check(scan.canonical.len() == 1 && scan.canonical[0] == nf, || {
        json!({"element": x.to_string(), "nf": rendered, "canonical_parses": scan.canonical.len()})
    });
    let back = word_to_element(ty, &word)?;
    u.check(&back == x, || json!({"element": x.to_string(), "nf": rendered, "round_trip": back.to_string()}));
    let blocks = word_to_element(ty, &block_decomposition(&nf)?.to_word())?;
    u.check(&blocks == x, || json!({"element": x.to_string(), "nf": rendered, "blocks": blocks.to_string()}));
    u.bump("affine_elements", 1);
    u.max("max_p", nf.p() as i64);
    let violations = validate_nf(&nf, Mode::Strict);
    let exact = violations.is_empty() && scan.strict.len() == 1 && scan.strict[0] == nf;
    if exact {
        u.bump("strict_exact", 1);
        return Ok(());
    }
    u.bump("discrepancies", 1);
    let strict_records = scan
        .strict
        .iter()
        .map(|s| Ok(serde_json::from_str::<Value>(&s.to_record()?)?))
        .collect::<Result<Vec<Value>>>()?;
    let mut finding = json!({
        "element": x.to_string(),
        "nf": rendered,
        "record": serde_json::from_str::<Value>(&nf.to_record()?)?,
        "strict_violations": violations,
        "literal_strict_parses": strict_records,
    });
    let reason = if scan.strict.is_empty() {
        "no literal reading covers the element"
    } else if !violations.is_empty() {
        "canonical form breaks a literal inequality"
    } else {
        "literal parameters are not unique"
    };
    finding["reason"] = json!(reason);
    match trace_discrepancy(&violations, &nf, &scan.strict) {
        Some(oq) => {
            finding["open_question"] = json!(oq);
            u.bump("traced", 1);
            u.note("discrepancy", finding);
        }
        None => u.check(false, || finding),
    }
    Ok(())
}

fn a2_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let k_max = cfg.k_max.unwrap_or(4);
    r.unit(format!("k<={k_max}"), || {
        let ty = CoxeterType::affine(2)?;
        let mut u = UnitResult::default();
        let full_len = 3 * (k_max + 1) - 1;
        let enumerated: BTreeSet<AffinePermutation> =
            fc_layers(ty, full_len)?.into_iter().flatten().collect();
        let mut by_element: BTreeMap<AffinePermutation, Vec<A2Form>> = BTreeMap::new();
        for form in A2Form::all(k_max) {
            let w = form.to_word();
            let x = word_to_element(ty, &w)?;
            u.check(x.length() == w.len() && fc_criterion(ty, &w), || {
                json!({"form": format!("{form:?}"), "word": word_str(ty, &w), "note": "not a reduced FC word"})
            });
            by_element.entry(x).or_default().push(form);
        }
        let covered: BTreeSet<AffinePermutation> =
            by_element.keys().filter(|x| x.length() <= full_len).cloned().collect();
        for x in enumerated.difference(&covered) {
            u.check(false, || json!({"element": x.to_string(), "note": "FC element missing from the trees"}));
        }
        for x in covered.difference(&enumerated) {
            u.check(false, || json!({"element": x.to_string(), "note": "tree element not enumerated"}));
        }
        u.checked += 1;
        for (x, forms) in &by_element {
            if forms.len() > 1 {
                u.bump("overlaps", 1);
                u.check(forms.iter().all(|f| f.k == 0), || {
                    json!({"element": x.to_string(), "forms": format!("{forms:?}"), "note": "overlap with k > 0"})
                });
            }
            let picked = a2_family(x)?;
            u.check(forms.contains(&picked), || json!({"element": x.to_string(), "picked": format!("{picked:?}")}));
        }
        u.bump("elements", enumerated.len() as u64);
        u.bump("forms", A2Form::all(k_max).len() as u64);
        u.max("max_length", full_len as i64);
        Ok(u)
    })
}

fn lemma_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let ns: Vec<usize> = match cfg.n {
        Some(n) => vec![n],
        None => vec![3, 4, 5],
    };
    for n in ns {
        let table = EmbeddingTable::validated_default(n)?;
        for j in 2..n {
            r.unit(format!("n={n}/j={j}"), || {
                let k_max = cfg.k_max.unwrap_or(2 * (n - j + 1) + 3);
                let verdicts: Vec<Result<(usize, crate::braid::EqualityVerdict)>> = (2..=k_max)
                    .into_par_iter()
                    .map(|k| Ok((k, certify_equal(&y_power(n, j, k)?, &lemma_251_form(n, j, k)?, &table)?)))
                    .collect();
                let mut u = UnitResult::default();
                for v in verdicts {
                    let (k, v) = v?;
                    u.check(v.equal(), || json!({"n": n, "j": j, "k": k, "failing_layer": v.failing_layer()}));
                }
                Ok(u)
            })?;
        }
        r.unit(format!("n={n}/psi"), || psi_checks(n, &table))?;
    }
    Ok(())
}

/// Shift table, commutation identity, order and mod-n behaviour of ψ on the
/// generators of B(Ã_{n−1}).
fn psi_checks(n: usize, table: &EmbeddingTable) -> Result<UnitResult> {
    let mut u = UnitResult::default();
    let c = crate::braid::coxeter_element(n);
    for g in 1..=n {
        let h = tower_map(&BraidWord::new(n - 1, &[BraidLetter::pos(g)])?)?;
        let shifted = tower_map(&BraidWord::new(n - 1, &[BraidLetter::pos(psi_shift(n, g, 1))])?)?;
        let v = certify_equal(&psi(&h, 1)?, &shifted, table)?;
        u.check(v.equal(), || json!({"n": n, "generator": g, "check": "shift table", "failing_layer": v.failing_layer()}));
        for d in 0..=2 * n as i64 {
            let cd = c.pow(d as usize);
            let lhs = cd.concat(&h)?;
            let rhs = psi(&h, d)?.concat(&cd)?;
            u.check(lhs.letters() == rhs.letters(), || json!({"n": n, "generator": g, "d": d, "check": "commutation identity"}));
            let reduced = certify_equal(&psi(&h, d)?, &psi(&h, d.rem_euclid(n as i64))?, table)?;
            u.bump("mod_n_checks", 1);
            if !reduced.equal() {
                u.note("observation", json!({"open_question": "psi-order", "n": n, "generator": g, "d": d, "failing_layer": reduced.failing_layer()}));
            }
        }
    }
    let a = tower_image_of_affine(n);
    let v = certify_equal(&psi(&a, n as i64)?, &a, table)?;
    u.bump("order_checks", 1);
    if !v.equal() {
        u.note("observation", json!({"open_question": "psi-order", "n": n, "note": "psi^n moves F(a_n)"}));
    }
    Ok(u)
}

fn cor_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    for (ty, max_len) in affine_types(cfg, &[(2, 10), (3, 10)], 10)? {
        let n = ty.n();
        let table = EmbeddingTable::validated_default(n)?;
        for len in 0..=max_len {
            r.unit(format!("{ty}/len={len}"), || {
                let layer = fc_layers(ty, len)?.pop().unwrap_or_default();
                let results: Vec<Result<UnitResult>> = layer
                    .par_iter()
                    .filter(|x| !x.is_finite())
                    .map(|x| {
                        let mut u = UnitResult::default();
                        let form = corollary_252_decompose(x)?;
                        let v = certify_equal(&form.realized()?, &positive_lift(x)?, &table)?;
                        u.check(v.equal(), || json!({"element": x.to_string(), "failing_layer": v.failing_layer()}));
                        let d = form.d_bar_form()?;
                        let back = word_to_element(ty, &d.to_word(n))?;
                        u.check(&back == x, || json!({"element": x.to_string(), "d_bar_form": back.to_string()}));
                        u.bump("elements", 1);
                        match form.prefix_run {
                            Some(i0) => {
                                u.bump("prefixed", 1);
                                u.max("max_i0", i0 as i64);
                            }
                            None => u.bump("plain", 1),
                        }
                        Ok(u)
                    })
                    .collect();
                let mut u = UnitResult::default();
                for x in results {
                    u.merge(x?);
                }
                Ok(u)
            })?;
        }
        if let Some(i0) = r.total.maxima.remove("max_i0") {
            r.total.max(&format!("max_i0_n{n}"), i0);
            if i0 > n as i64 - 1 {
                r.total.note("observation", json!({"open_question": "prefix-range", "n": n, "max_i0": i0}));
            }
        }
    }
    Ok(())
}

fn embedding_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let ns: Vec<usize> = match cfg.n {
        Some(n) => vec![n],
        None => (2..=cfg.n_max.unwrap_or(5)).collect(),
    };
    let samples = cfg.samples.unwrap_or(200);
    for n in ns {
        r.unit(format!("n={n}"), || {
            let mut u = UnitResult::default();
            let mut table = EmbeddingTable::rotation(n)?;
            let report = validate_embedding(n, &mut table)?;
            u.checked += report.checked as u64;
            for f in &report.failures {
                u.failures += 1;
                u.note("failure", json!({"n": n, "s": f.s, "t": f.t, "m": f.m}));
            }
            u.bump("relations", report.checked as u64);
            if !table.is_validated() {
                return Ok(u);
            }
            let a = BraidWord::positive(n, &[n + 1])?;
            let fa = tower_image_of_affine(n);
            let s = BraidWord::positive(n, &[n])?;
            let chain = [a.concat(&fa)?, fa.concat(&s)?, s.concat(&a)?];
            for i in 0..3 {
                for j in i + 1..3 {
                    let ok = braids_equal(&embed_affine(&chain[i], &table)?, &embed_affine(&chain[j], &table)?)?;
                    u.check(ok, || json!({"n": n, "check": "relation chain", "pair": [i, j]}));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ n as u64);
            let ty = CoxeterType::affine(n)?;
            for _ in 0..samples {
                let (lhs, rhs) = relation_pair(&mut rng, ty);
                let ok = braids_equal(&embed_affine(&lhs, &table)?, &embed_affine(&rhs, &table)?)?;
                u.check(ok, || json!({"n": n, "check": "soundness", "lhs": lhs.to_string(), "rhs": rhs.to_string()}));
            }
            Ok(u)
        })?;
    }
    Ok(())
}

fn random_affine_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<BraidLetter> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=n + 1);
            if rng.gen_bool(0.5) { BraidLetter::pos(g) } else { BraidLetter::neg(g) }
        })
        .collect()
}

/// Two words differing by one application of a defining relation.
fn relation_pair(rng: &mut ChaCha8Rng, ty: CoxeterType) -> (BraidWord, BraidWord) {
    let n = ty.n();
    let (ll, rl) = (rng.gen_range(0..8), rng.gen_range(0..8));
    let left = random_affine_word(rng, n, ll);
    let right = random_affine_word(rng, n, rl);
    let s = rng.gen_range(1..=n + 1);
    let mut t = rng.gen_range(1..=n + 1);
    while t == s {
        t = rng.gen_range(1..=n + 1);
    }
    let (l, r): (Vec<Gen>, Vec<Gen>) =
        if ty.m(s, t) == 3 { (vec![s, t, s], vec![t, s, t]) } else { (vec![s, t], vec![t, s]) };
    let build = |mid: &[Gen]| {
        let mut letters = left.clone();
        letters.extend(mid.iter().map(|&g| BraidLetter::pos(g)));
        letters.extend(right.iter().copied());
        BraidWord::new(n, &letters).expect("generators in range")
    };
    (build(&l), build(&r))
}

fn random_classical(rng: &mut ChaCha8Rng, m: usize, len: usize) -> ClassicalBraidWord {
    let letters: Vec<BraidLetter> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..m);
            if rng.gen_bool(0.5) { BraidLetter::pos(g) } else { BraidLetter::neg(g) }
        })
        .collect();
    ClassicalBraidWord::new(m, &letters).expect("generators in range")
}

fn garside_suite(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let samples = cfg.samples.unwrap_or(10_000);
    let batch = 1000;
    let seed = cfg.seed;
    for start in (0..samples).step_by(batch) {
        let end = (start + batch).min(samples);
        r.unit(format!("samples={start}..{end}"), || {
            let results: Vec<Result<UnitResult>> = (start..end)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(i as u64));
                    let m = rng.gen_range(2..=7);
                    let len = rng.gen_range(0..=40);
                    let w = random_classical(&mut rng, m, len);
                    let mut u = UnitResult::default();
                    let nf = left_normal_form(&w)?;
                    let again = left_normal_form(&nf.to_word())?;
                    u.check(again == nf && nf.is_well_formed(), || json!({"word": w.to_string(), "strands": m}));
                    let cut = rng.gen_range(0..=w.len());
                    let (a, b) = w.letters().split_at(cut);
                    let conj = ClassicalBraidWord::new(m, &[a, b, &crate::braid::inverse_letters(b), b].concat())?;
                    u.check(braids_equal(&w, &conj)?, || json!({"word": w.to_string(), "strands": m, "check": "free insertion"}));
                    Ok(u)
                })
                .collect();
            let mut u = UnitResult::default();
            for x in results {
                u.merge(x?);
            }
            Ok(u)
        })?;
    }
    r.unit("relations", || {
        let mut u = UnitResult::default();
        for m in 3..=7 {
            for i in 1..m - 1 {
                let lhs = ClassicalBraidWord::positive(m, &[i, i + 1, i])?;
                let rhs = ClassicalBraidWord::positive(m, &[i + 1, i, i + 1])?;
                u.check(braids_equal(&lhs, &rhs)?, || json!({"strands": m, "i": i, "check": "braid relation"}));
                let st = ClassicalBraidWord::positive(m, &[i, i + 1])?;
                let ts = ClassicalBraidWord::positive(m, &[i + 1, i])?;
                u.check(!braids_equal(&st, &ts)?, || json!({"strands": m, "i": i, "check": "adjacent generators commute"}));
            }
            for i in 1..m {
                for j in i + 2..m {
                    let lhs = ClassicalBraidWord::positive(m, &[i, j])?;
                    let rhs = ClassicalBraidWord::positive(m, &[j, i])?;
                    u.check(braids_equal(&lhs, &rhs)?, || json!({"strands": m, "i": i, "j": j, "check": "far commutation"}));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..200 {
            let m = rng.gen_range(3..=6);
            let words: Vec<ClassicalBraidWord> = (0..4)
                .map(|_| {
                    let len = rng.gen_range(0..6);
                    random_classical(&mut rng, m, len)
                })
                .collect();
            for x in &words {
                u.check(braids_equal(x, x)?, || json!({"word": x.to_string(), "check": "reflexive"}));
                for y in &words {
                    let xy = braids_equal(x, y)?;
                    u.check(xy == braids_equal(y, x)?, || json!({"x": x.to_string(), "y": y.to_string(), "check": "symmetric"}));
                    for z in &words {
                        if xy && braids_equal(y, z)? {
                            u.check(braids_equal(x, z)?, || json!({"x": x.to_string(), "z": z.to_string(), "check": "transitive"}));
                        }
                    }
                }
            }
        }
        Ok(u)
    })
}
