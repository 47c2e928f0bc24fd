//! Affine normal forms
//!
//! ```text
//! S_1 a S_2 a … a S_p (a P_j)^k a T
//! ```
//!
//! with segments S_t = σ_{i_t}…σ_1 σ_{r_t}…σ_n, periods P_j = σ_j…σ_1 σ_{j+1}…σ_n
//! and a residue T that is either a run list or a staircase with heads
//! j, j+1, … . The lone empty segment (0, n+1) is the same word as p = 0 and
//! is always written with p = 0.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{ascending_run, descending_run, render_word, CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::fc::{commutation_class_unchecked, fc_criterion};
use crate::normal_form::finite::{descending_runs, finite_nf};
use crate::perm::AffinePermutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Residue {
    Finite { runs: Vec<(usize, usize)> },
    Staircase { d: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineNormalForm {
    pub n: usize,
    /// Segments (i_t, r_t).
    pub short: Vec<(usize, usize)>,
    pub j: usize,
    pub k: usize,
    pub residue: Residue,
    /// Whether the a_{n+1} opening the residue is present.
    pub residue_a: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every inequality of the unified statement, read literally.
    Strict,
    /// The grammar the extractor emits: the case-by-case forms, with the
    /// leading-period and tail-bound readings that enumeration supports.
    Canonical,
    /// Run monotonicity inside each component only.
    Lenient,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "canonical" => Ok(Mode::Canonical),
            "lenient" => Ok(Mode::Lenient),
            _ => Err(Error::OutOfRange(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Canonical => "canonical",
            Mode::Lenient => "lenient",
        })
    }
}

pub(crate) fn segment_word(n: usize, i: usize, r: usize) -> Vec<Gen> {
    let mut w = descending_run(i, 1);
    w.extend(ascending_run(r, n));
    w
}

pub(crate) fn period_word(n: usize, j: usize) -> Vec<Gen> {
    segment_word(n, j, j + 1)
}

fn staircase_word(j: usize, d: &[usize]) -> Vec<Gen> {
    d.iter().enumerate().flat_map(|(c, &dc)| descending_run(j + c, dc)).collect()
}

#[derive(Serialize)]
struct Record<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    n: usize,
    short: &'a [(usize, usize)],
    j: usize,
    k: usize,
    residue: &'a Residue,
    #[serde(skip_serializing_if = "is_true")]
    residue_a: bool,
    word: String,
}

fn is_true(b: &bool) -> bool {
    *b
}

impl AffineNormalForm {
    pub fn p(&self) -> usize {
        self.short.len()
    }

    pub fn ty(&self) -> Result<CoxeterType> {
        CoxeterType::affine(self.n)
    }

    /// True for p = 1 with a segment of gap one: the short block is itself a period.
    pub fn is_leading_period(&self) -> bool {
        matches!(self.short.as_slice(), [(i, r)] if *i >= 1 && *r == i + 1)
    }

    /// j used when no period is present and the segment is not a period.
    pub fn witness_j(&self) -> usize {
        match self.short.last() {
            Some(&(i, _)) => (i + 1).min(self.n),
            None => 1,
        }
    }

    pub fn to_word(&self) -> Result<Vec<Gen>> {
        let shape = validate_nf(self, Mode::Lenient);
        if !shape.is_empty() {
            return Err(Error::MalformedNormalForm(shape.join("; ")));
        }
        let n = self.n;
        let a = n + 1;
        let mut w = Vec::new();
        for (t, &(i, r)) in self.short.iter().enumerate() {
            if t > 0 {
                w.push(a);
            }
            w.extend(segment_word(n, i, r));
        }
        for _ in 0..self.k {
            w.push(a);
            w.extend(period_word(n, self.j));
        }
        if self.residue_a {
            w.push(a);
        }
        match &self.residue {
            Residue::Finite { runs } => {
                w.extend(runs.iter().flat_map(|&(l, g)| descending_run(l, g)));
            }
            Residue::Staircase { d } => w.extend(staircase_word(self.j, d)),
        }
        Ok(w)
    }

    pub fn render(&self) -> Result<String> {
        Ok(render_word(&self.to_word()?, self.ty()?))
    }

    /// One-line JSON record.
    pub fn to_record(&self) -> Result<String> {
        let rec = Record {
            kind: "affine_nf",
            n: self.n,
            short: &self.short,
            j: self.j,
            k: self.k,
            residue: &self.residue,
            residue_a: self.residue_a,
            word: self.render()?,
        };
        Ok(serde_json::to_string(&rec)?)
    }

    /// Ordering key for the canonical tie-break: larger p, then larger k,
    /// then the smaller parameter vector.
    fn tie_key(&self) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<usize>, &Self) {
        (std::cmp::Reverse(self.p()), std::cmp::Reverse(self.k), self)
    }
}

fn lenient_violations(nf: &AffineNormalForm, v: &mut Vec<String>) {
    let n = nf.n;
    if nf.j > n {
        v.push(format!("j = {} exceeds n", nf.j));
    }
    for &(i, r) in &nf.short {
        if i > n {
            v.push(format!("segment i = {i} exceeds n"));
        }
        if r < 1 || r > n + 1 {
            v.push(format!("segment r = {r} outside 1..=n+1"));
        }
    }
    if nf.short.windows(2).any(|w| w[0].0 >= w[1].0) {
        v.push("i not strictly increasing".into());
    }
    if nf.short.windows(2).any(|w| w[0].1 <= w[1].1) {
        v.push("r not strictly decreasing".into());
    }
    match &nf.residue {
        Residue::Finite { runs } => {
            for &(l, g) in runs {
                if g < 1 || l > n {
                    v.push(format!("residue run ({l},{g}) out of range"));
                } else if g > l {
                    v.push("g_t ≤ l_t fails".into());
                }
            }
            if runs.windows(2).any(|w| w[0].0 >= w[1].0) {
                v.push("l not strictly increasing".into());
            }
            if runs.windows(2).any(|w| w[0].1 >= w[1].1) {
                v.push("g not strictly increasing".into());
            }
        }
        Residue::Staircase { d } => {
            if d.windows(2).any(|w| w[0] >= w[1]) {
                v.push("d not strictly increasing".into());
            }
            if !d.is_empty() && nf.j + d.len() - 1 > n {
                v.push("staircase head exceeds n".into());
            }
            if d.iter().enumerate().any(|(c, &dc)| dc < 1 || dc > nf.j + c) {
                v.push("d_{c+1} ≤ j + c fails".into());
            }
        }
    }
}

fn strict_violations(nf: &AffineNormalForm, v: &mut Vec<String>) {
    let n = nf.n;
    if let (Some(&(i1, _)), Some(&(ip, rp))) = (nf.short.first(), nf.short.last()) {
        if i1 > n {
            v.push("i_1 ≤ n fails".into());
        }
        if ip >= rp {
            v.push("i_p < r_p fails".into());
        }
        if rp < ip + 2 {
            v.push("r_p − i_p ≥ 2 fails".into());
        }
        if !(ip < nf.j && nf.j < rp) {
            v.push("i_p < j ≤ r_p − 1 fails".into());
        }
    }
    if nf.k >= 1 && nf.j < 1 {
        v.push("j ≥ 1 fails".into());
    }
    if !nf.residue_a {
        v.push("residue a_{n+1} absent".into());
    }
    match (&nf.residue, nf.k) {
        (Residue::Finite { runs }, 0) => {
            if let (Some(&(ip, rp)), Some(&(l1, _)), Some(&(_, gt))) =
                (nf.short.last(), runs.first(), runs.last())
            {
                if ip >= l1 {
                    v.push("i_p < l_1 fails".into());
                }
                if gt >= rp {
                    v.push("g_t < r_p fails".into());
                }
            }
        }
        (Residue::Finite { .. }, _) => v.push("k ≥ 1 requires a staircase residue".into()),
        (Residue::Staircase { .. }, 0) => v.push("k = 0 requires a finite residue".into()),
        (Residue::Staircase { .. }, _) => {}
    }
}

fn canonical_violations(nf: &AffineNormalForm, v: &mut Vec<String>) {
    let n = nf.n;
    if !nf.residue_a {
        v.push("residue a_{n+1} absent".into());
    }
    if nf.short.as_slice() == [(0, n + 1)] {
        v.push("lone empty segment must be written with p = 0".into());
    }
    let leading = nf.is_leading_period();
    if let Some(&(ip, rp)) = nf.short.last() {
        if ip >= rp {
            v.push("i_p < r_p fails".into());
        } else if leading {
            if nf.j != ip {
                v.push("leading period requires j = i_1".into());
            }
        } else {
            if rp < ip + 2 {
                v.push("r_p − i_p ≥ 2 fails".into());
            }
            if !(ip < nf.j && nf.j < rp) {
                v.push("i_p < j ≤ r_p − 1 fails".into());
            }
        }
    }
    if nf.j < 1 {
        v.push("j ≥ 1 fails".into());
    }
    let staircase = nf.k >= 1 || leading;
    match &nf.residue {
        Residue::Staircase { .. } if !staircase => {
            v.push("residue must be a run list here".into());
        }
        Residue::Finite { .. } if staircase => {
            v.push("residue must be a staircase here".into());
        }
        Residue::Finite { runs } => {
            if nf.j != nf.witness_j() {
                v.push("j must be the least admissible value when k = 0".into());
            }
            if let (Some(&(ip, _)), Some(&(l1, _))) = (nf.short.last(), runs.first()) {
                if ip >= l1 {
                    v.push("i_p < l_1 fails".into());
                }
            }
        }
        Residue::Staircase { .. } => {}
    }
}

/// Violated constraints; empty means valid in `mode`.
pub fn validate_nf(nf: &AffineNormalForm, mode: Mode) -> Vec<String> {
    let mut v = Vec::new();
    lenient_violations(nf, &mut v);
    match mode {
        Mode::Lenient => {}
        Mode::Strict => strict_violations(nf, &mut v),
        Mode::Canonical => canonical_violations(nf, &mut v),
    }
    v
}

fn split_at_affine(w: &[Gen], a: Gen) -> Vec<&[Gen]> {
    w.split(|&s| s == a).collect()
}

fn parse_segment(n: usize, chunk: &[Gen]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=n {
        for r in 1..=n + 1 {
            if segment_word(n, i, r) == chunk {
                out.push((i, r));
            }
        }
    }
    out
}

fn parse_staircase(j: usize, chunk: &[Gen]) -> Option<Vec<usize>> {
    let runs = descending_runs(chunk);
    runs.iter()
        .enumerate()
        .all(|(c, &(h, _))| h == j + c)
        .then(|| runs.iter().map(|&(_, d)| d).collect())
}

fn parse_finite_tail(chunk: &[Gen]) -> Option<Vec<(usize, usize)>> {
    let runs = descending_runs(chunk);
    let ok = runs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
    ok.then_some(runs)
}

/// Every lenient-valid reading of a literal word as a normal form.
///
/// For k = 0 the finite reading carries the least admissible j; a one-segment
/// word whose segment is a period is additionally read as a staircase.
pub fn parse_affine_word(n: usize, w: &[Gen]) -> Vec<AffineNormalForm> {
    let a = n + 1;
    let chunks = split_at_affine(w, a);
    let big_l = chunks.len() - 1;
    let mut out = Vec::new();
    if big_l == 0 {
        return out;
    }
    let tail = chunks[big_l];
    for p in 0..=big_l {
        let (segment_choices, first_mid) = if p == 0 {
            if !chunks[0].is_empty() {
                continue;
            }
            (vec![Vec::new()], 1)
        } else {
            let mut choices: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
            for chunk in &chunks[..p] {
                let opts = parse_segment(n, chunk);
                choices = choices
                    .into_iter()
                    .flat_map(|c| {
                        opts.iter().map(move |&o| {
                            let mut c = c.clone();
                            c.push(o);
                            c
                        })
                    })
                    .collect();
            }
            (choices, p)
        };
        let k = big_l - first_mid;
        let mids = &chunks[first_mid..big_l];
        for short in segment_choices {
            let mut push = |j: usize, residue: Residue| {
                let nf = AffineNormalForm { n, short: short.clone(), j, k, residue, residue_a: true };
                if validate_nf(&nf, Mode::Lenient).is_empty() {
                    out.push(nf);
                }
            };
            if k >= 1 {
                for j in 1..=n {
                    let pj = period_word(n, j);
                    if mids.iter().all(|m| *m == pj.as_slice()) {
                        if let Some(d) = parse_staircase(j, tail) {
                            push(j, Residue::Staircase { d });
                        }
                    }
                }
            } else {
                let probe = AffineNormalForm {
                    n,
                    short: short.clone(),
                    j: 1,
                    k: 0,
                    residue: Residue::Finite { runs: Vec::new() },
                    residue_a: true,
                };
                if let Some(runs) = parse_finite_tail(tail) {
                    push(probe.witness_j(), Residue::Finite { runs });
                }
                if probe.is_leading_period() {
                    let j = short[0].0;
                    if let Some(d) = parse_staircase(j, tail) {
                        push(j, Residue::Staircase { d });
                    }
                }
            }
        }
    }
    out
}

fn strip(y: &mut AffinePermutation, letters: &[Gen]) -> bool {
    for &s in letters {
        if !y.is_right_descent(s) {
            return false;
        }
        y.apply_right(s);
    }
    true
}

struct Peeler {
    n: usize,
    out: Vec<AffineNormalForm>,
}

impl Peeler {
    /// `y` is the inverse of the part of the element not yet consumed, so
    /// peeling a letter on the left is stripping it on the right of `y`.
    fn segments(&mut self, y: &AffinePermutation, segs: &mut Vec<(usize, usize)>) {
        let n = self.n;
        if !segs.is_empty() {
            self.stage(y, segs);
        }
        let (i_min, r_max) = match segs.last() {
            None => (0, n + 1),
            Some(&(i, r)) => (i + 1, r.saturating_sub(1)),
        };
        for i in i_min..=n {
            for r in i + 1..=r_max {
                let mut word = segment_word(n, i, r);
                word.push(n + 1);
                let mut y2 = y.clone();
                if strip(&mut y2, &word) {
                    segs.push((i, r));
                    self.segments(&y2, segs);
                    segs.pop();
                }
            }
        }
    }

    fn periods(&self, y: &AffinePermutation, j: usize) -> (usize, AffinePermutation) {
        let mut word = period_word(self.n, j);
        word.push(self.n + 1);
        let mut y = y.clone();
        let mut k = 0;
        loop {
            let mut y2 = y.clone();
            if !strip(&mut y2, &word) {
                return (k, y);
            }
            y = y2;
            k += 1;
        }
    }

    fn tail_runs(y: &AffinePermutation) -> Option<Vec<(usize, usize)>> {
        let rest = y.invert();
        if !rest.is_finite() {
            return None;
        }
        finite_nf(&rest).ok().map(|nf| nf.runs)
    }

    fn staircase(y: &AffinePermutation, j: usize) -> Option<Vec<usize>> {
        let runs = Self::tail_runs(y)?;
        runs.iter()
            .enumerate()
            .all(|(c, &(h, _))| h == j + c)
            .then(|| runs.iter().map(|&(_, d)| d).collect())
    }

    fn stage(&mut self, y: &AffinePermutation, segs: &[(usize, usize)]) {
        let n = self.n;
        let short: Vec<(usize, usize)> =
            if segs == [(0, n + 1)] { Vec::new() } else { segs.to_vec() };
        let mut nf =
            AffineNormalForm { n, short, j: 1, k: 0, residue: Residue::Finite { runs: vec![] }, residue_a: true };
        if nf.is_leading_period() {
            let j = nf.short[0].0;
            let (k, rest) = self.periods(y, j);
            if let Some(d) = Self::staircase(&rest, j) {
                nf.j = j;
                nf.k = k;
                nf.residue = Residue::Staircase { d };
                self.out.push(nf);
            }
            return;
        }
        let (lo, hi) = match nf.short.last() {
            Some(&(ip, rp)) => {
                if rp < ip + 2 {
                    return;
                }
                (ip + 1, rp - 1)
            }
            None => (1, n),
        };
        if let Some(runs) = Self::tail_runs(y) {
            if nf.short.last().is_none_or(|&(ip, _)| runs.first().is_none_or(|&(l1, _)| ip < l1)) {
                let mut found = nf.clone();
                found.j = nf.witness_j();
                found.residue = Residue::Finite { runs };
                self.out.push(found);
            }
        }
        for j in lo..=hi {
            let (k, rest) = self.periods(y, j);
            if k == 0 {
                continue;
            }
            if let Some(d) = Self::staircase(&rest, j) {
                let mut found = nf.clone();
                found.j = j;
                found.k = k;
                found.residue = Residue::Staircase { d };
                self.out.push(found);
            }
        }
    }
}

fn check_affine_fc(x: &AffinePermutation) -> Result<Vec<Gen>> {
    let ty = x.ty();
    if !ty.is_affine() {
        return Err(Error::InvalidType(format!("{ty} is not affine")));
    }
    let w = x.canonical_reduced_word();
    if !fc_criterion(ty, &w) {
        return Err(Error::NotFullyCommutative);
    }
    if !w.contains(&(ty.n() + 1)) {
        return Err(Error::AffineGeneratorAbsent);
    }
    Ok(w)
}

/// All parameter tuples found by grammar-guided left-descent peeling.
pub fn affine_nf_candidates(x: &AffinePermutation) -> Result<Vec<AffineNormalForm>> {
    check_affine_fc(x)?;
    let mut peeler = Peeler { n: x.ty().n(), out: Vec::new() };
    peeler.segments(&x.invert(), &mut Vec::new());
    let mut out = peeler.out;
    out.sort();
    out.dedup();
    Ok(out)
}

fn pick(mut candidates: Vec<AffineNormalForm>, x: &AffinePermutation) -> Result<AffineNormalForm> {
    candidates.sort_by(|a, b| a.tie_key().cmp(&b.tie_key()));
    candidates
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoGrammarMatch(x.to_string()))
}

/// Normal form of an FC element with a_{n+1} in its support (peeling path).
pub fn affine_nf(x: &AffinePermutation) -> Result<AffineNormalForm> {
    let candidates = affine_nf_candidates(x)?;
    pick(candidates, x)
}

/// Outcome of scanning a commutation class for grammar matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassScan {
    pub class_size: usize,
    /// Words admitting at least one lenient reading.
    pub lenient_words: usize,
    /// Distinct canonical-valid readings, over all words.
    pub canonical: Vec<AffineNormalForm>,
    /// Distinct readings satisfying every literal inequality.
    pub strict: Vec<AffineNormalForm>,
    /// Words carrying a literal strict reading.
    pub strict_words: usize,
}

/// Oracle path: parse every word in the commutation class.
pub fn scan_class(x: &AffinePermutation, cap: usize) -> Result<ClassScan> {
    let w = check_affine_fc(x)?;
    let n = x.ty().n();
    let class = commutation_class_unchecked(x.ty(), &w, cap);
    if class.truncated {
        return Err(Error::ClassCapExceeded(cap));
    }
    let words: Vec<&Vec<Gen>> = class.words.iter().collect();
    let per_word: Vec<(bool, Vec<AffineNormalForm>, Vec<AffineNormalForm>)> = words
        .par_iter()
        .map(|u| {
            let parses = parse_affine_word(n, u);
            let lenient = !parses.is_empty();
            let canonical: Vec<_> = parses
                .iter()
                .filter(|p| validate_nf(p, Mode::Canonical).is_empty())
                .cloned()
                .collect();
            let strict: Vec<_> =
                parses.into_iter().filter(|p| validate_nf(p, Mode::Strict).is_empty()).collect();
            (lenient, canonical, strict)
        })
        .collect();
    let mut canonical = BTreeSet::new();
    let mut strict = BTreeSet::new();
    let mut lenient_words = 0;
    let mut strict_words = 0;
    for (len_ok, c, s) in per_word {
        lenient_words += len_ok as usize;
        strict_words += (!s.is_empty()) as usize;
        canonical.extend(c);
        strict.extend(s);
    }
    Ok(ClassScan {
        class_size: class.words.len(),
        lenient_words,
        canonical: canonical.into_iter().collect(),
        strict: strict.into_iter().collect(),
        strict_words,
    })
}

/// Normal form found by the class scan; errors unless the match is unique.
pub fn affine_nf_oracle(x: &AffinePermutation, cap: usize) -> Result<AffineNormalForm> {
    let scan = scan_class(x, cap)?;
    match scan.canonical.len() {
        1 => Ok(scan.canonical.into_iter().next().expect("one element")),
        0 => Err(Error::NoGrammarMatch(x.to_string())),
        _ => pick(scan.canonical, x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::word_to_element;

    fn t(n: usize) -> CoxeterType {
        CoxeterType::affine(n).unwrap()
    }

    fn nf_of(n: usize, w: &[Gen]) -> AffineNormalForm {
        affine_nf(&word_to_element(t(n), w).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let nf = nf_of(3, &[1, 3, 4]);
        assert_eq!(nf.short, vec![(1, 3)]);
        assert_eq!((nf.j, nf.k), (2, 0));
        assert_eq!(nf.residue, Residue::Finite { runs: vec![] });
        assert_eq!(
            nf.to_record().unwrap(),
            r#"{"type":"affine_nf","n":3,"short":[[1,3]],"j":2,"k":0,"residue":{"kind":"finite","runs":[]},"word":"1 3 a"}"#
        );

        let nf = nf_of(3, &[4, 2, 1, 3, 4, 2, 1, 3, 4]);
        assert!(nf.short.is_empty());
        assert_eq!((nf.j, nf.k), (2, 2));
        assert_eq!(nf.residue, Residue::Staircase { d: vec![] });

        let nf = nf_of(2, &[3]);
        assert!(nf.short.is_empty());
        assert_eq!(nf.k, 0);
        assert_eq!(nf.to_word().unwrap(), vec![3]);
    }

    #[test]
    fn errors() {
        let x = word_to_element(t(2), &[1, 2, 1]).unwrap();
        assert!(matches!(affine_nf(&x), Err(Error::NotFullyCommutative)));
        let y = word_to_element(t(2), &[1, 2]).unwrap();
        assert!(matches!(affine_nf(&y), Err(Error::AffineGeneratorAbsent)));
    }

    #[test]
    fn expansion_conventions() {
        let bare = AffineNormalForm {
            n: 3,
            short: vec![(0, 4)],
            j: 1,
            k: 0,
            residue: Residue::Finite { runs: vec![] },
            residue_a: true,
        };
        assert_eq!(bare.to_word().unwrap(), vec![4]);
        let without_a = AffineNormalForm { residue_a: false, ..bare.clone() };
        assert_eq!(without_a.to_word().unwrap(), Vec::<Gen>::new());
        assert!(without_a.to_record().unwrap().contains(r#""residue_a":false"#));
        assert!(!bare.to_record().unwrap().contains("residue_a"));
    }

    #[test]
    fn validation_examples() {
        let base = AffineNormalForm {
            n: 2,
            short: vec![(2, 3)],
            j: 2,
            k: 0,
            residue: Residue::Finite { runs: vec![] },
            residue_a: true,
        };
        assert!(validate_nf(&base, Mode::Strict).contains(&"r_p − i_p ≥ 2 fails".to_string()));
        let ok = AffineNormalForm { n: 3, short: vec![(1, 3)], ..base.clone() };
        assert!(validate_nf(&ok, Mode::Strict).is_empty());
        let bad = AffineNormalForm { n: 3, short: vec![(2, 4), (1, 3)], ..base.clone() };
        assert!(validate_nf(&bad, Mode::Lenient).contains(&"i not strictly increasing".to_string()));
    }

    #[test]
    fn leading_period_family() {
        for m in 1..5 {
            let w: Vec<Gen> = (0..m).flat_map(|_| [2, 1, 3]).collect();
            let nf = nf_of(2, &w);
            assert_eq!(nf.short, vec![(2, 3)]);
            assert_eq!((nf.j, nf.k), (2, m - 1));
            assert!(validate_nf(&nf, Mode::Canonical).is_empty());
            assert!(!validate_nf(&nf, Mode::Strict).is_empty());
        }
    }

    #[test]
    fn oracle_agrees_on_small_words() {
        for w in [vec![1, 3, 4], vec![4, 2, 1, 3, 4], vec![2, 4, 1, 3, 4, 2]] {
            let x = word_to_element(t(3), &w).unwrap();
            assert_eq!(affine_nf(&x).unwrap(), affine_nf_oracle(&x, 10_000).unwrap());
        }
    }

    #[test]
    fn literal_parses() {
        let parses = parse_affine_word(3, &[1, 3, 4]);
        assert!(parses.iter().any(|p| p.short == vec![(1, 3)]));
        assert!(parse_affine_word(3, &[1, 2]).is_empty());
    }
}
