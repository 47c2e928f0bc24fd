//! Full commutativity: the single-pass criterion, the commutation-class
//! oracle and enumeration of FC elements by length.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::coxeter::{CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::perm::{is_reduced, word_to_element, AffinePermutation};

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Class cap from `FCWORD_CAP`, falling back to [`DEFAULT_CLASS_CAP`].
pub fn class_cap_from_env() -> usize {
    std::env::var("FCWORD_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CLASS_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationClass {
    pub words: BTreeSet<Vec<Gen>>,
    pub truncated: bool,
}

impl CommutationClass {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn require_reduced(ty: CoxeterType, w: &[Gen]) -> Result<()> {
    if is_reduced(ty, w)? {
        Ok(())
    } else {
        Err(Error::NotReduced)
    }
}

pub fn commutation_class(ty: CoxeterType, w: &[Gen], cap: usize) -> Result<CommutationClass> {
    require_reduced(ty, w)?;
    Ok(commutation_class_unchecked(ty, w, cap))
}

pub(crate) fn commutation_class_unchecked(ty: CoxeterType, w: &[Gen], cap: usize) -> CommutationClass {
    let mut words = BTreeSet::new();
    words.insert(w.to_vec());
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            if !ty.commute(u[i], u[i + 1]) {
                continue;
            }
            let mut v = u.clone();
            v.swap(i, i + 1);
            if words.contains(&v) {
                continue;
            }
            if words.len() >= cap {
                return CommutationClass { words, truncated: true };
            }
            words.insert(v.clone());
            queue.push_back(v);
        }
    }
    CommutationClass { words, truncated: false }
}

/// Between two consecutive occurrences of a letter there must be at least
/// two letters that do not commute with it. Assumes `w` is reduced.
pub fn fc_criterion(ty: CoxeterType, w: &[Gen]) -> bool {
    let mut last: Vec<Option<usize>> = vec![None; ty.rank() + 1];
    for (idx, &s) in w.iter().enumerate() {
        if let Some(prev) = last[s] {
            let blocking = w[prev + 1..idx].iter().filter(|&&t| ty.m(s, t) == 3).count();
            if blocking < 2 {
                return false;
            }
        }
        last[s] = Some(idx);
    }
    true
}

fn has_braid_factor(ty: CoxeterType, w: &[Gen]) -> bool {
    w.windows(3).any(|f| f[0] == f[2] && ty.m(f[0], f[1]) == 3)
}

pub fn is_fully_commutative(ty: CoxeterType, w: &[Gen]) -> Result<bool> {
    require_reduced(ty, w)?;
    Ok(fc_criterion(ty, w))
}

/// Class-scan verdict: no word of the commutation class contains s t s with m_st = 3.
pub fn is_fully_commutative_oracle(ty: CoxeterType, w: &[Gen], cap: usize) -> Result<bool> {
    let class = commutation_class(ty, w, cap)?;
    if class.truncated {
        return Err(Error::ClassCapExceeded(cap));
    }
    Ok(!class.words.iter().any(|u| has_braid_factor(ty, u)))
}

pub fn is_fc_element(x: &AffinePermutation) -> bool {
    fc_criterion(x.ty(), &x.canonical_reduced_word())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FcRecord {
    pub element: AffinePermutation,
    pub word: Vec<Gen>,
}

impl FcRecord {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

fn extends_fc(ty: CoxeterType, w: &[Gen], s: Gen) -> bool {
    match w.iter().rposition(|&t| t == s) {
        None => true,
        Some(prev) => w[prev + 1..].iter().filter(|&&t| ty.m(s, t) == 3).count() >= 2,
    }
}

/// Length-by-length enumeration of FC elements. Each item is one full layer,
/// sorted by canonical word.
pub struct FcLayers {
    ty: CoxeterType,
    max_len: usize,
    cap: usize,
    emitted: usize,
    next_len: usize,
    current: Vec<FcRecord>,
    failed: bool,
}

impl FcLayers {
    pub fn new(ty: CoxeterType, max_len: usize, cap: usize) -> Self {
        FcLayers { ty, max_len, cap, emitted: 0, next_len: 0, current: Vec::new(), failed: false }
    }
}

impl Iterator for FcLayers {
    type Item = Result<Vec<FcRecord>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.next_len > self.max_len {
            return None;
        }
        let ty = self.ty;
        let layer = if self.next_len == 0 {
            vec![FcRecord { element: AffinePermutation::identity(ty), word: Vec::new() }]
        } else {
            let candidates: Vec<AffinePermutation> = self
                .current
                .par_iter()
                .flat_map_iter(|rec| {
                    ty.generators()
                        .filter(|&s| !rec.element.is_right_descent(s) && extends_fc(ty, &rec.word, s))
                        .map(|s| rec.element.right_mul(s))
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut seen = HashSet::with_capacity(candidates.len());
            let unique: Vec<AffinePermutation> =
                candidates.into_iter().filter(|x| seen.insert(x.clone())).collect();
            let mut layer: Vec<FcRecord> = unique
                .into_par_iter()
                .map(|element| {
                    let word = element.canonical_reduced_word();
                    FcRecord { element, word }
                })
                .collect();
            layer.sort_by(|a, b| a.word.cmp(&b.word));
            layer
        };
        self.emitted += layer.len();
        if self.emitted > self.cap {
            self.failed = true;
            return Some(Err(Error::ElementCapExceeded(self.cap)));
        }
        self.next_len += 1;
        if layer.is_empty() {
            self.next_len = self.max_len + 1;
        }
        self.current = layer.clone();
        Some(Ok(layer))
    }
}

/// Every FC element of length ≤ `max_len`, ordered by length then canonical word.
pub fn enumerate_fc(ty: CoxeterType, max_len: usize, cap: usize) -> Result<Vec<FcRecord>> {
    let mut out = Vec::new();
    for layer in FcLayers::new(ty, max_len, cap) {
        out.extend(layer?);
    }
    Ok(out)
}

pub fn catalan(n: u64) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// |W^c(A_n)| by exhaustive enumeration.
pub fn count_fc_finite(n: usize) -> Result<u64> {
    if !(1..=8).contains(&n) {
        return Err(Error::OutOfRange(format!("count_fc_finite supports 1 <= n <= 8, got {n}")));
    }
    let ty = CoxeterType::finite(n)?;
    let longest = n * (n + 1) / 2;
    let mut total = 0u64;
    for layer in FcLayers::new(ty, longest, usize::MAX) {
        total += layer?.len() as u64;
    }
    Ok(total)
}

/// FC test for a word of unknown reducedness, used by callers holding raw input.
pub fn word_is_fc_element(ty: CoxeterType, w: &[Gen]) -> Result<bool> {
    let x = word_to_element(ty, w)?;
    Ok(is_fc_element(&x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize) -> CoxeterType {
        CoxeterType::affine(n).unwrap()
    }

    fn a(n: usize) -> CoxeterType {
        CoxeterType::finite(n).unwrap()
    }

    #[test]
    fn classes() {
        let c = commutation_class(a(3), &[1, 3], 100).unwrap();
        assert_eq!(c.words, BTreeSet::from([vec![1, 3], vec![3, 1]]));
        assert_eq!(commutation_class(a(2), &[1, 2], 100).unwrap().len(), 1);
        assert_eq!(commutation_class(t(2), &[3, 1, 2, 3], 100).unwrap().len(), 1);
        assert!(matches!(commutation_class(a(2), &[1, 1], 10), Err(Error::NotReduced)));
    }

    #[test]
    fn truncation() {
        let c = commutation_class(a(5), &[1, 3, 5], 2).unwrap();
        assert!(c.truncated);
        assert_eq!(c.len(), 2);
        assert!(matches!(
            is_fully_commutative_oracle(a(5), &[1, 3, 5], 2),
            Err(Error::ClassCapExceeded(2))
        ));
    }

    #[test]
    fn fc_examples() {
        assert!(!is_fully_commutative(a(2), &[1, 2, 1]).unwrap());
        assert!(is_fully_commutative(a(3), &[2, 1, 3, 2]).unwrap());
        assert!(is_fully_commutative(t(2), &[2, 1, 3]).unwrap());
        assert!(!is_fully_commutative_oracle(a(2), &[1, 2, 1], 100).unwrap());
        assert!(is_fully_commutative_oracle(a(3), &[2, 1, 3, 2], 100).unwrap());
        let class = commutation_class(a(3), &[2, 1, 3, 2], 100).unwrap();
        assert_eq!(class.words, BTreeSet::from([vec![2, 1, 3, 2], vec![2, 3, 1, 2]]));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_fc(a(1), 1, 100).unwrap().len(), 2);
        assert_eq!(enumerate_fc(a(2), 3, 100).unwrap().len(), 5);
        let recs = enumerate_fc(t(2), 2, 100).unwrap();
        let words: Vec<Vec<Gen>> = recs.iter().map(|r| r.word.clone()).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 3],
                vec![3, 1],
                vec![3, 2],
            ]
        );
    }

    #[test]
    fn cap_is_an_error() {
        assert!(matches!(enumerate_fc(t(2), 10, 5), Err(Error::ElementCapExceeded(5))));
    }

    #[test]
    fn catalan_counts() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(count_fc_finite(1).unwrap(), 2);
        assert_eq!(count_fc_finite(2).unwrap(), 5);
        assert_eq!(count_fc_finite(3).unwrap(), 14);
        assert!(count_fc_finite(0).is_err());
        assert!(count_fc_finite(9).is_err());
    }
}
