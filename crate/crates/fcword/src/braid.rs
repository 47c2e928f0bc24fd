//! Braid words over B(Ã_n): the tower maps F_n, the automorphism ψ given by
//! conjugation with C = σ_n … σ_1 a_{n+1}, the closed forms for powers of
//! y = σ_j…σ_1 σ_{j+1}…σ_n a_{n+1}, and the two-form decomposition of
//! positive lifts of FC elements.

use std::fmt;

use serde::Serialize;

use crate::coxeter::{descending_run, tokens, CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::fc::is_fc_element;
use crate::garside::{braids_equal, embed_affine, EmbeddingTable};
use crate::normal_form::affine_nf;
use crate::perm::{word_to_element, AffinePermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub gen: Gen,
    /// +1 or −1.
    pub exp: i8,
}

impl BraidLetter {
    pub fn pos(gen: Gen) -> Self {
        BraidLetter { gen, exp: 1 }
    }

    pub fn neg(gen: Gen) -> Self {
        BraidLetter { gen, exp: -1 }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { gen: self.gen, exp: -self.exp }
    }
}

/// Cancels adjacent g g⁻¹ pairs until none remain.
pub fn free_reduce(letters: &[BraidLetter]) -> Vec<BraidLetter> {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&last) if last == l.inverse() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

pub fn inverse_letters(letters: &[BraidLetter]) -> Vec<BraidLetter> {
    letters.iter().rev().map(|l| l.inverse()).collect()
}

pub(crate) fn parse_signed(
    text: &str,
    mut resolve: impl FnMut(&str) -> Result<Gen>,
) -> Result<Vec<BraidLetter>> {
    tokens(text)
        .map(|tok| match tok.strip_suffix('\'') {
            Some(base) => resolve(base).map(BraidLetter::neg),
            None => resolve(tok).map(BraidLetter::pos),
        })
        .collect()
}

pub(crate) fn render_signed(letters: &[BraidLetter], render: impl Fn(Gen) -> String) -> String {
    letters
        .iter()
        .map(|l| if l.exp < 0 { format!("{}'", render(l.gen)) } else { render(l.gen) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Freely reduced word in B(Ã_n). Rank 1 is allowed here since the tower
/// starts from B(Ã_1), the free group on σ_1 and a_2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: &[BraidLetter]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidType("braid words need n >= 1".into()));
        }
        for l in letters {
            if l.gen < 1 || l.gen > n + 1 {
                return Err(Error::OutOfRange(format!("generator {} in B(Ã_{n})", l.gen)));
            }
            if l.exp != 1 && l.exp != -1 {
                return Err(Error::OutOfRange(format!("exponent {}", l.exp)));
            }
        }
        Ok(BraidWord { n, letters: free_reduce(letters) })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn positive(n: usize, word: &[Gen]) -> Result<Self> {
        let letters: Vec<BraidLetter> = word.iter().map(|&g| BraidLetter::pos(g)).collect();
        Self::new(n, &letters)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let letters = parse_signed(text, |tok| match tok {
            "a" => Ok(n + 1),
            _ => tok.parse::<Gen>().map_err(|_| Error::UnknownToken(tok.to_string())),
        })?;
        Self::new(n, &letters)
    }

    pub fn n(&self) -> usize {
        self.n
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
        BraidWord { n: self.n, letters: inverse_letters(&self.letters) }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OutOfRange(format!("rank {} vs {}", self.n, other.n)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters: free_reduce(&letters) })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { n: self.n, letters: free_reduce(&letters) }
    }

    /// Generator indices when every exponent is +1.
    pub fn positive_gens(&self) -> Option<Vec<Gen>> {
        self.letters.iter().map(|l| (l.exp > 0).then_some(l.gen)).collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.n + 1;
        let text = render_signed(&self.letters, |g| if g == a { "a".into() } else { g.to_string() });
        f.write_str(&text)
    }
}

fn cat(parts: &[&BraidWord]) -> BraidWord {
    let n = parts[0].n;
    let letters: Vec<BraidLetter> = parts.iter().flat_map(|p| p.letters.iter().copied()).collect();
    BraidWord { n, letters: free_reduce(&letters) }
}

/// Coxeter image: signs dropped.
pub fn project_to_coxeter(bw: &BraidWord) -> Result<AffinePermutation> {
    let ty = CoxeterType::affine(bw.n)?;
    let w: Vec<Gen> = bw.letters.iter().map(|l| l.gen).collect();
    word_to_element(ty, &w)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn get(&self, g: Gen) -> i64 {
        self.0.get(g - 1).copied().unwrap_or(0)
    }

    /// Image in the abelianization. The generators of B(Ã_n), n ≥ 2, form
    /// a cycle of bonds 3 and are all conjugate, so only the total survives;
    /// individual entries change under braid relations.
    pub fn abelianized(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Signed letter count per generator; entry g − 1 belongs to generator g.
pub fn exponent_sums(bw: &BraidWord) -> ExponentVector {
    let mut v = vec![0i64; bw.n + 1];
    for l in &bw.letters {
        v[l.gen - 1] += l.exp as i64;
    }
    ExponentVector(v)
}

/// F_n(a_n) = σ_n a_{n+1} σ_n⁻¹ in B(Ã_n).
pub fn tower_image_of_affine(n: usize) -> BraidWord {
    BraidWord { n, letters: vec![BraidLetter::pos(n), BraidLetter::pos(n + 1), BraidLetter::neg(n)] }
}

/// F_n : B(Ã_{n−1}) → B(Ã_n), σ_i ↦ σ_i, a_n ↦ σ_n a_{n+1} σ_n⁻¹.
pub fn tower_map(bw: &BraidWord) -> Result<BraidWord> {
    let n = bw.n + 1;
    let mut letters = Vec::with_capacity(bw.len() * 3);
    for &l in &bw.letters {
        if l.gen == n {
            letters.extend([BraidLetter::pos(n), BraidLetter { gen: n + 1, exp: l.exp }, BraidLetter::neg(n)]);
        } else {
            letters.push(l);
        }
    }
    Ok(BraidWord { n, letters: free_reduce(&letters) })
}

/// C = σ_n σ_{n−1} … σ_1 a_{n+1}.
pub fn coxeter_element(n: usize) -> BraidWord {
    let mut w = descending_run(n, 1);
    w.push(n + 1);
    BraidWord::positive(n, &w).expect("valid generators")
}

/// Checks that `h` is a freely reduced word in the image of the tower map.
pub fn check_tower_image(h: &BraidWord) -> Result<()> {
    let n = h.n;
    let l = &h.letters;
    let mut idx = 0;
    while idx < l.len() {
        let g = l[idx].gen;
        if g < n {
            idx += 1;
            continue;
        }
        if g != n || l[idx].exp != 1 {
            return Err(Error::Inadmissible(format!("generator {g} at position {idx}")));
        }
        let sign = l.get(idx + 1).filter(|x| x.gen == n + 1).map(|x| x.exp);
        let Some(sign) = sign else {
            return Err(Error::Inadmissible(format!("σ_{n} at position {idx} not followed by a")));
        };
        let mut end = idx + 1;
        while end < l.len() && l[end].gen == n + 1 && l[end].exp == sign {
            end += 1;
        }
        if end >= l.len() || l[end] != BraidLetter::neg(n) {
            return Err(Error::Inadmissible(format!("unclosed conjugate at position {idx}")));
        }
        idx = end + 1;
    }
    Ok(())
}

/// ψ^d[h] = C^d h C^{−d}.
pub fn psi(h: &BraidWord, d: i64) -> Result<BraidWord> {
    check_tower_image(h)?;
    Ok(psi_unchecked(h, d))
}

fn psi_unchecked(h: &BraidWord, d: i64) -> BraidWord {
    let c = coxeter_element(h.n).pow(d.unsigned_abs() as usize);
    if d >= 0 {
        cat(&[&c, h, &c.inverse()])
    } else {
        cat(&[&c.inverse(), h, &c])
    }
}

/// ψ^d on a generator of B(Ã_{n−1}) (indices 1..n−1 for σ, n for a_n):
/// σ_i ↦ σ_{i−1} for i ≥ 2, σ_1 ↦ a_n, a_n ↦ σ_{n−1}. The table is
/// confirmed against conjugation in the test suite.
pub fn psi_shift(n: usize, gen: Gen, d: i64) -> Gen {
    let mut g = gen;
    for _ in 0..d.rem_euclid(n as i64) {
        g = match g {
            _ if g == n => n - 1,
            1 => n,
            _ => g - 1,
        };
    }
    g
}

fn inner_word(n: usize, w: &[Gen]) -> BraidWord {
    BraidWord { n: n - 1, letters: free_reduce(&w.iter().map(|&g| BraidLetter::pos(g)).collect::<Vec<_>>()) }
}

fn check_lemma_range(n: usize, j: usize) -> Result<()> {
    if n < 3 || j < 2 || j > n - 1 {
        return Err(Error::OutOfRange(format!("need 2 <= j <= n - 1, got n = {n}, j = {j}")));
    }
    Ok(())
}

/// y = σ_j … σ_1 σ_{j+1} … σ_n a_{n+1}.
pub fn y_word(n: usize, j: usize) -> Result<BraidWord> {
    check_lemma_range(n, j)?;
    let mut w = descending_run(j, 1);
    w.extend(j + 1..=n);
    w.push(n + 1);
    BraidWord::positive(n, &w)
}

pub fn y_power(n: usize, j: usize, k: usize) -> Result<BraidWord> {
    Ok(y_word(n, j)?.pow(k))
}

/// z = σ_j … σ_1 σ_{j+1} … σ_{n−1} a_n, as a word of B(Ã_{n−1}).
fn z_inner(n: usize, j: usize) -> BraidWord {
    let mut w = descending_run(j, 1);
    w.extend(j + 1..n);
    w.push(n);
    inner_word(n, &w)
}

/// Closed form of y^k with k = m(n − j + 1) + r.
pub fn lemma_251_form(n: usize, j: usize, k: usize) -> Result<BraidWord> {
    check_lemma_range(n, j)?;
    if k < 2 {
        return Err(Error::OutOfRange(format!("closed form needs k >= 2, got {k}")));
    }
    let period = n - j + 1;
    let (m, r) = (k / period, k % period);
    let z = tower_map(&z_inner(n, j))?;
    let tail = BraidWord::positive(n, &descending_run(n, n + 1 - r))?;
    if m == 0 {
        return Ok(cat(&[&z.pow(r), &tail]));
    }
    let run = BraidWord::positive(n, &(j..n).collect::<Vec<_>>())?;
    let block = cat(&[&z.pow(n - j), &run]);
    let mut parts: Vec<BraidWord> = (0..m).map(|i| psi_unchecked(&block, i as i64)).collect();
    parts.push(psi_unchecked(&z.pow(r), m as i64));
    parts.push(coxeter_element(n).pow(m));
    parts.push(tail);
    Ok(cat(&parts.iter().collect::<Vec<_>>()))
}

/// The positive braid word of the canonical reduced expression.
pub fn positive_lift(x: &AffinePermutation) -> Result<BraidWord> {
    BraidWord::positive(x.ty().n(), &x.canonical_reduced_word())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cor252Variant {
    Plain,
    Prefixed,
}

/// [σ_{i_0} … σ_1 a_{n+1}] · F_n(c) · C^k · tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor252Form {
    pub variant: Cor252Variant,
    pub prefix_run: Option<usize>,
    /// Word of B(Ã_{n−1}).
    pub c: BraidWord,
    pub k: usize,
    /// Positive word over σ_1 … σ_n.
    pub tail: Vec<Gen>,
}

/// Coxeter-level form d̄ · C^k · σ_n σ_{n−1} … σ_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DBarForm {
    pub d_bar: Vec<Gen>,
    pub k: usize,
    /// i of the trailing run; n + 1 when the run is empty.
    pub i: usize,
}

impl Cor252Form {
    pub fn n(&self) -> usize {
        self.c.n + 1
    }

    pub fn realized(&self) -> Result<BraidWord> {
        let n = self.n();
        let mut parts = Vec::new();
        if let Some(i0) = self.prefix_run {
            let mut w = descending_run(i0, 1);
            w.push(n + 1);
            parts.push(BraidWord::positive(n, &w)?);
        }
        parts.push(tower_map(&self.c)?);
        parts.push(coxeter_element(n).pow(self.k));
        parts.push(BraidWord::positive(n, &self.tail)?);
        Ok(cat(&parts.iter().collect::<Vec<_>>()))
    }

    /// Moves the part of the tail fixing n + 1 across C^k, leaving a run σ_n … σ_i.
    pub fn d_bar_form(&self) -> Result<DBarForm> {
        let n = self.n();
        let (u, i) = coset_split(n, &self.tail)?;
        let mut inner: Vec<BraidLetter> = self.c.letters.clone();
        inner.extend(u.iter().map(|&g| BraidLetter::pos(psi_shift(n, g, self.k as i64))));
        let lifted = tower_map(&BraidWord { n: n - 1, letters: free_reduce(&inner) })?;
        let mut d_bar = Vec::new();
        if let Some(i0) = self.prefix_run {
            d_bar.extend(descending_run(i0, 1));
            d_bar.push(n + 1);
        }
        d_bar.extend(lifted.letters.iter().map(|l| l.gen));
        Ok(DBarForm { d_bar, k: self.k, i })
    }
}

impl DBarForm {
    pub fn to_word(&self, n: usize) -> Vec<Gen> {
        let mut w = self.d_bar.clone();
        for _ in 0..self.k {
            w.extend(descending_run(n, 1));
            w.push(n + 1);
        }
        w.extend(descending_run(n, self.i));
        w
    }
}

/// Splits a reduced word v of A_n as u · σ_n … σ_i with u in A_{n−1};
/// returns (canonical word of u, i).
fn coset_split(n: usize, v: &[Gen]) -> Result<(Vec<Gen>, usize)> {
    let ty = CoxeterType::finite(n)?;
    let x = word_to_element(ty, v)?;
    let q = x.window().iter().position(|&val| val == n as i64 + 1).expect("value present") + 1;
    let mut u = x;
    for s in q..=n {
        u.apply_right(s);
    }
    Ok((u.canonical_reduced_word(), q))
}

/// Decomposes the positive lift of an FC element containing a_{n+1}.
///
/// Reads the normal-form word letter by letter. Between affine letters the
/// finite part v is split as u · σ_n … σ_i; u is pushed through the pending
/// C^k with ψ, and the run either completes a copy of C, becomes F_n(a_n)
/// via σ_n … σ_i a_{n+1} = F_n(a_n) σ_n … σ_i, or (before the first C and
/// with an empty run) opens the prefix σ_{i_0} … σ_1 a_{n+1}.
pub fn corollary_252_decompose(x: &AffinePermutation) -> Result<Cor252Form> {
    let ty = x.ty();
    if !ty.is_affine() {
        return Err(Error::InvalidType(format!("{ty} is not affine")));
    }
    if !is_fc_element(x) {
        return Err(Error::NotFullyCommutative);
    }
    let n = ty.n();
    let word = affine_nf(x)?.to_word()?;
    let mut prefix = None;
    let mut c: Vec<BraidLetter> = Vec::new();
    let mut k = 0usize;
    let mut v: Vec<Gen> = Vec::new();
    let mut first = true;
    for &g in &word {
        if g != n + 1 {
            v.push(g);
            continue;
        }
        let (u, i) = coset_split(n, &v)?;
        let shift = |g: Gen| BraidLetter::pos(psi_shift(n, g, k as i64));
        if i == 1 {
            c.extend(u.iter().map(|&g| shift(g)));
            k += 1;
            v.clear();
        } else if i <= n {
            c.extend(u.iter().map(|&g| shift(g)));
            c.push(shift(n));
            v = descending_run(n, i);
        } else if first && k == 0 && u == descending_run(u.len(), 1) {
            prefix = Some(u.len());
            c.clear();
            v.clear();
        } else {
            return Err(Error::NoGrammarMatch(format!("{x}: stuck at an affine letter")));
        }
        first = false;
    }
    let c = BraidWord { n: n - 1, letters: free_reduce(&c) };
    Ok(Cor252Form {
        variant: if prefix.is_some() { Cor252Variant::Prefixed } else { Cor252Variant::Plain },
        prefix_run: prefix,
        c,
        k,
        tail: v,
    })
}

/// Three independent equality checks between two words of B(Ã_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityVerdict {
    pub garside: bool,
    pub coxeter: bool,
    pub abelian: bool,
}

impl EqualityVerdict {
    pub fn equal(&self) -> bool {
        self.garside && self.coxeter && self.abelian
    }

    /// First layer reporting inequality.
    pub fn failing_layer(&self) -> Option<&'static str> {
        if !self.garside {
            Some("garside")
        } else if !self.coxeter {
            Some("coxeter")
        } else if !self.abelian {
            Some("abelian")
        } else {
            None
        }
    }
}

pub fn certify_equal(u: &BraidWord, v: &BraidWord, table: &EmbeddingTable) -> Result<EqualityVerdict> {
    let garside = braids_equal(&embed_affine(u, table)?, &embed_affine(v, table)?)?;
    let coxeter = project_to_coxeter(u)? == project_to_coxeter(v)?;
    let abelian = exponent_sums(u).abelianized() == exponent_sums(v).abelianized();
    Ok(EqualityVerdict { garside, coxeter, abelian })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn reduction() {
        let l = [BraidLetter::pos(1), BraidLetter::neg(1)];
        assert!(free_reduce(&l).is_empty());
        let l = [BraidLetter::pos(1), BraidLetter::pos(2), BraidLetter::neg(2), BraidLetter::pos(1)];
        assert_eq!(free_reduce(&l), vec![BraidLetter::pos(1), BraidLetter::pos(1)]);
        let r = free_reduce(&l);
        assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn text_round_trip() {
        let w = bw("3 a 3'", 3);
        assert_eq!(w.letters(), &[BraidLetter::pos(3), BraidLetter::pos(4), BraidLetter::neg(3)]);
        assert_eq!(w.to_string(), "3 a 3'");
        assert!(BraidWord::parse("5", 3).is_err());
        assert!(BraidWord::parse("x'", 3).is_err());
    }

    #[test]
    fn projections() {
        let t3 = CoxeterType::affine(3).unwrap();
        assert_eq!(project_to_coxeter(&bw("1'", 3)).unwrap(), word_to_element(t3, &[1]).unwrap());
        assert!(project_to_coxeter(&bw("", 3)).unwrap().is_identity());
        let f = tower_image_of_affine(3);
        assert_eq!(project_to_coxeter(&f).unwrap(), word_to_element(t3, &[3, 4, 3]).unwrap());
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent_sums(&bw("1 2'", 3)).0, vec![1, -1, 0, 0]);
        let (u, v) = (exponent_sums(&bw("1 2 1", 3)), exponent_sums(&bw("2 1 2", 3)));
        assert_ne!(u, v);
        assert_eq!(u.abelianized(), v.abelianized());
        let e = exponent_sums(&tower_image_of_affine(3));
        assert_eq!((e.get(4), e.get(3)), (1, 0));
    }

    #[test]
    fn tower() {
        assert_eq!(tower_map(&bw("a", 2)).unwrap(), bw("3 a 3'", 3));
        assert_eq!(tower_map(&bw("1 2'", 2)).unwrap(), bw("1 2'", 3));
        assert!(tower_map(&bw("a a'", 2)).unwrap().is_empty());
        assert_eq!(tower_map(&bw("a a", 2)).unwrap(), bw("3 a a 3'", 3));
    }

    #[test]
    fn psi_basics() {
        let h = bw("1 3 a 3' 2'", 3);
        assert_eq!(psi(&h, 0).unwrap(), h);
        let c = coxeter_element(3);
        for d in 0..6 {
            let lhs = c.pow(d).concat(&h).unwrap();
            let rhs = psi(&h, d as i64).unwrap().concat(&c.pow(d)).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(psi(&bw("a", 3), 1).is_err());
        assert!(psi(&bw("3", 3), 1).is_err());
        assert!(psi(&bw("3 a", 3), 1).is_err());
    }

    #[test]
    fn psi_golden_projection() {
        let t3 = CoxeterType::affine(3).unwrap();
        let x = project_to_coxeter(&psi(&bw("1", 3), 1).unwrap()).unwrap();
        assert_eq!(x, word_to_element(t3, &[3, 4, 3]).unwrap());
        assert_eq!(x.window(), &[-1, 2, 5, 4]);
    }

    #[test]
    fn shift_table() {
        assert_eq!(psi_shift(3, 2, 1), 1);
        assert_eq!(psi_shift(3, 1, 1), 3);
        assert_eq!(psi_shift(3, 3, 1), 2);
        assert_eq!(psi_shift(3, 2, 3), 2);
        assert_eq!(psi_shift(2, 1, 1), 2);
        assert_eq!(psi_shift(2, 2, 1), 1);
    }

    #[test]
    fn y_powers() {
        assert_eq!(y_power(3, 2, 1).unwrap(), BraidWord::positive(3, &[2, 1, 3, 4]).unwrap());
        assert!(y_power(3, 2, 0).unwrap().is_empty());
        assert_eq!(y_power(4, 2, 2).unwrap().len(), 10);
        assert!(y_power(3, 1, 2).is_err());
        assert!(y_power(3, 3, 2).is_err());
    }

    #[test]
    fn lemma_small_case() {
        let w = lemma_251_form(4, 2, 2).unwrap();
        assert_eq!(w, bw("2 1 3 4 a 4' 2 1 3 4 a 3", 4));
        let w = lemma_251_form(3, 2, 2).unwrap();
        assert_eq!(w, bw("2 1 3 a 3' 2 3 2 1 a", 3));
        assert!(lemma_251_form(3, 2, 1).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let t2 = CoxeterType::affine(2).unwrap();
        let x = word_to_element(t2, &[2, 1, 3, 2, 1, 3]).unwrap();
        let f = corollary_252_decompose(&x).unwrap();
        assert_eq!((f.variant, f.k), (Cor252Variant::Plain, 2));
        assert!(f.c.is_empty() && f.tail.is_empty());

        let x = word_to_element(t2, &[3]).unwrap();
        let f = corollary_252_decompose(&x).unwrap();
        assert_eq!((f.variant, f.prefix_run, f.k), (Cor252Variant::Prefixed, Some(0), 0));

        let x = word_to_element(t2, &[1, 3, 2, 1, 3, 2, 1, 3]).unwrap();
        let f = corollary_252_decompose(&x).unwrap();
        assert_eq!((f.variant, f.prefix_run, f.k), (Cor252Variant::Prefixed, Some(1), 2));
    }
}
