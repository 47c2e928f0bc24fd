//! Left-greedy normal form Δ^p · x_1 ⋯ x_r in the classical braid group B_m,
//! and the table-driven embedding of B(Ã_n) into B_{n+2}.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{free_reduce, inverse_letters, parse_signed, render_signed, BraidLetter, BraidWord};
use crate::coxeter::Gen;
use crate::error::{Error, Result};

/// Word in B_m over σ_1 … σ_{m−1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalBraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl ClassicalBraidWord {
    pub fn new(strands: usize, letters: &[BraidLetter]) -> Result<Self> {
        if strands < 2 {
            return Err(Error::OutOfRange(format!("B_m needs m >= 2, got {strands}")));
        }
        if let Some(l) = letters.iter().find(|l| l.gen < 1 || l.gen >= strands || l.exp.abs() != 1) {
            return Err(Error::OutOfRange(format!("letter σ_{}^{} in B_{strands}", l.gen, l.exp)));
        }
        Ok(ClassicalBraidWord { strands, letters: free_reduce(letters) })
    }

    pub fn positive(strands: usize, word: &[Gen]) -> Result<Self> {
        let letters: Vec<BraidLetter> = word.iter().map(|&g| BraidLetter::pos(g)).collect();
        Self::new(strands, &letters)
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters =
            parse_signed(text, |tok| tok.parse::<Gen>().map_err(|_| Error::UnknownToken(tok.into())))?;
        Self::new(strands, &letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        ClassicalBraidWord { strands: self.strands, letters: inverse_letters(&self.letters) }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::OutOfRange(format!("B_{} vs B_{}", self.strands, other.strands)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ClassicalBraidWord { strands: self.strands, letters: free_reduce(&letters) })
    }
}

impl fmt::Display for ClassicalBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_signed(&self.letters, |g| g.to_string()))
    }
}

/// Positive square-free braid, stored as the permutation p of 0..m with
/// right multiplication by σ_i swapping positions i − 1 and i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid(Vec<u8>);

impl PermutationBraid {
    pub fn identity(m: usize) -> Self {
        PermutationBraid((0..m as u8).collect())
    }

    pub fn delta(m: usize) -> Self {
        PermutationBraid((0..m as u8).rev().collect())
    }

    pub fn from_word(m: usize, word: &[Gen]) -> Self {
        let mut p = Self::identity(m);
        for &i in word {
            p.0.swap(i - 1, i);
        }
        p
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        let m = self.0.len();
        self.0.iter().enumerate().all(|(i, &v)| v as usize == m - 1 - i)
    }

    fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    fn inverse(&self) -> Vec<u8> {
        let mut q = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            q[v as usize] = i as u8;
        }
        q
    }

    /// Δ⁻¹ x Δ.
    fn tau(&self) -> Self {
        let m = self.0.len();
        PermutationBraid((0..m).map(|i| (m - 1) as u8 - self.0[m - 1 - i]).collect())
    }

    /// Reduced word, smallest right descent stripped first.
    pub fn to_word(&self) -> Vec<Gen> {
        let mut p = self.clone();
        let mut out = Vec::new();
        while let Some(i) = (1..p.0.len()).find(|&i| p.has_right_descent(i)) {
            p.0.swap(i - 1, i);
            out.push(i);
        }
        out.reverse();
        out
    }
}

/// Makes (a, b) left-weighted: moves every s ∈ L(b) \ R(a) from b into a.
fn left_weight(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let mut changed = false;
    loop {
        let inv = b.inverse();
        let s = (1..a.0.len()).find(|&i| inv[i - 1] > inv[i] && !a.has_right_descent(i));
        let Some(i) = s else { return changed };
        a.0.swap(i - 1, i);
        let (x, y) = (inv[i - 1] as usize, inv[i] as usize);
        b.0.swap(x, y);
        changed = true;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<PermutationBraid>,
}

impl GarsideNormalForm {
    fn identity(strands: usize) -> Self {
        GarsideNormalForm { strands, infimum: 0, factors: Vec::new() }
    }

    fn push_simple(&mut self, s: PermutationBraid) {
        self.factors.push(s);
        loop {
            let mut changed = false;
            for t in (1..self.factors.len()).rev() {
                let (head, tail) = self.factors.split_at_mut(t);
                changed |= left_weight(&mut head[t - 1], &mut tail[0]);
            }
            if !changed {
                break;
            }
        }
        let deltas = self.factors.iter().take_while(|f| f.is_delta()).count();
        self.factors.drain(..deltas);
        self.infimum += deltas as i64;
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    fn push_letter(&mut self, l: BraidLetter) {
        let m = self.strands;
        if l.exp > 0 {
            self.push_simple(PermutationBraid::from_word(m, &[l.gen]));
        } else {
            for f in &mut self.factors {
                *f = f.tau();
            }
            self.infimum -= 1;
            let mut s = PermutationBraid::delta(m);
            s.0.swap(l.gen - 1, l.gen);
            self.push_simple(s);
        }
    }

    pub fn sup(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    /// Δ^p followed by the factors, as a braid word.
    pub fn to_word(&self) -> ClassicalBraidWord {
        let m = self.strands;
        let delta = PermutationBraid::delta(m).to_word();
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend(delta.iter().map(|&g| BraidLetter::pos(g)));
            } else {
                letters.extend(delta.iter().rev().map(|&g| BraidLetter::neg(g)));
            }
        }
        for f in &self.factors {
            letters.extend(f.to_word().into_iter().map(BraidLetter::pos));
        }
        ClassicalBraidWord { strands: m, letters: free_reduce(&letters) }
    }

    /// Structural invariants: no trivial or Δ factors, adjacent pairs left-weighted.
    pub fn is_well_formed(&self) -> bool {
        let no_trivial = self.factors.iter().all(|f| !f.is_identity() && !f.is_delta());
        let weighted = self.factors.windows(2).all(|w| {
            let inv = w[1].inverse();
            (1..self.strands).all(|i| inv[i - 1] < inv[i] || w[0].has_right_descent(i))
        });
        no_trivial && weighted
    }
}

pub fn left_normal_form(w: &ClassicalBraidWord) -> Result<GarsideNormalForm> {
    let mut nf = GarsideNormalForm::identity(w.strands);
    for &l in &w.letters {
        nf.push_letter(l);
    }
    Ok(nf)
}

pub fn braids_equal(u: &ClassicalBraidWord, v: &ClassicalBraidWord) -> Result<bool> {
    if u.strands != v.strands {
        return Err(Error::OutOfRange(format!("B_{} vs B_{}", u.strands, v.strands)));
    }
    Ok(left_normal_form(u)? == left_normal_form(v)?)
}

/// Images of σ_1 … σ_n and a_{n+1} in B_{n+2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTable {
    n: usize,
    images: BTreeMap<Gen, ClassicalBraidWord>,
    validated: bool,
}

impl EmbeddingTable {
    /// σ_i ↦ σ_{i+1}; with ρ = σ_1² σ_2 ⋯ σ_{n+1}, a_{n+1} ↦ ρ σ_{n+1} ρ⁻¹.
    pub fn rotation(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("embedding needs n >= 2, got {n}")));
        }
        let m = n + 2;
        let mut images = BTreeMap::new();
        for i in 1..=n {
            images.insert(i, ClassicalBraidWord::positive(m, &[i + 1])?);
        }
        let mut rho = vec![1];
        rho.extend(1..=n + 1);
        let rho = ClassicalBraidWord::positive(m, &rho)?;
        let a = rho.concat(&ClassicalBraidWord::positive(m, &[n + 1])?)?.concat(&rho.inverse())?;
        images.insert(n + 1, a);
        Ok(EmbeddingTable { n, images, validated: false })
    }

    /// The rotation table, validated; fails if any relation breaks.
    pub fn validated_default(n: usize) -> Result<Self> {
        let mut table = Self::rotation(n)?;
        let report = validate_embedding(n, &mut table)?;
        if !report.failures.is_empty() {
            return Err(Error::OutOfRange(format!(
                "default embedding for n = {n} breaks {} relations",
                report.failures.len()
            )));
        }
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        self.n + 2
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn image(&self, g: Gen) -> Option<&ClassicalBraidWord> {
        self.images.get(&g)
    }

    /// Replaces one image; the table must be validated again.
    pub fn set_image(&mut self, g: Gen, word: ClassicalBraidWord) -> Result<()> {
        if !(1..=self.n + 1).contains(&g) {
            return Err(Error::OutOfRange(format!("generator {g}")));
        }
        if word.strands != self.strands() {
            return Err(Error::OutOfRange(format!("image must live in B_{}", self.strands())));
        }
        self.images.insert(g, word);
        self.validated = false;
        Ok(())
    }

    /// Lines `gen <index-or-a> -> <braid word>`; every generator exactly once.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("embedding needs n >= 2, got {n}")));
        }
        let m = n + 2;
        let mut images = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| Error::TableParse { line: line_no, msg };
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let rest = line
                .strip_prefix("gen ")
                .ok_or_else(|| err("expected `gen <index-or-a> -> <word>`".into()))?;
            let (lhs, rhs) = rest.split_once("->").ok_or_else(|| err("missing `->`".into()))?;
            let g = match lhs.trim() {
                "a" => n + 1,
                tok => tok
                    .parse::<Gen>()
                    .ok()
                    .filter(|g| (1..=n + 1).contains(g))
                    .ok_or_else(|| err(format!("unknown generator {tok:?}")))?,
            };
            let word = ClassicalBraidWord::parse(rhs, m).map_err(|e| err(e.to_string()))?;
            if images.insert(g, word).is_some() {
                return Err(err(format!("generator {g} listed twice")));
            }
        }
        if let Some(missing) = (1..=n + 1).find(|g| !images.contains_key(g)) {
            return Err(Error::TableParse { line: 0, msg: format!("generator {missing} missing") });
        }
        Ok(EmbeddingTable { n, images, validated: false })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (&g, w) in &self.images {
            let name = if g == self.n + 1 { "a".to_string() } else { g.to_string() };
            out.push_str(&format!("gen {name} -> {w}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub s: Gen,
    pub t: Gen,
    pub m: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

/// Checks sts = tst on cycle edges and st = ts elsewhere, for all pairs s < t.
pub fn validate_embedding(n: usize, table: &mut EmbeddingTable) -> Result<EmbeddingReport> {
    if n != table.n {
        return Err(Error::OutOfRange(format!("table is for n = {}, asked n = {n}", table.n)));
    }
    let ty = crate::coxeter::CoxeterType::affine(n)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for s in ty.generators() {
        for t in s + 1..=n + 1 {
            checked += 1;
            let m = ty.m(s, t);
            let (lhs, rhs) = if m == 3 { (vec![s, t, s], vec![t, s, t]) } else { (vec![s, t], vec![t, s]) };
            let ok = braids_equal(&substitute(table, &lhs)?, &substitute(table, &rhs)?)?;
            if !ok {
                failures.push(RelationFailure { s, t, m });
            }
        }
    }
    table.validated = failures.is_empty();
    Ok(EmbeddingReport { n, checked, failures })
}

fn substitute(table: &EmbeddingTable, word: &[Gen]) -> Result<ClassicalBraidWord> {
    let letters: Vec<BraidLetter> = word.iter().map(|&g| BraidLetter::pos(g)).collect();
    substitute_letters(table, &letters)
}

fn substitute_letters(table: &EmbeddingTable, letters: &[BraidLetter]) -> Result<ClassicalBraidWord> {
    let mut out = Vec::new();
    for l in letters {
        let img = table
            .images
            .get(&l.gen)
            .ok_or_else(|| Error::OutOfRange(format!("generator {} has no image", l.gen)))?;
        if l.exp > 0 {
            out.extend_from_slice(&img.letters);
        } else {
            out.extend(inverse_letters(&img.letters));
        }
    }
    ClassicalBraidWord::new(table.strands(), &out)
}

pub fn embed_affine(bw: &BraidWord, table: &EmbeddingTable) -> Result<ClassicalBraidWord> {
    if !table.validated {
        return Err(Error::UnvalidatedTable(table.n));
    }
    if bw.n() != table.n {
        return Err(Error::OutOfRange(format!("word of rank {} with table of rank {}", bw.n(), table.n)));
    }
    substitute_letters(table, bw.letters())
}
