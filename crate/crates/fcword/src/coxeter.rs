//! Coxeter types A_n and affine A_n, generator indexing and word syntax.
//!
//! Generator `i` in `1..=n` is σ_i. In the affine type the extra generator
//! `n + 1` is a_{n+1}, written `a` in text.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Gen = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    FiniteA,
    AffineA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    family: Family,
    n: usize,
}

impl CoxeterType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        match family {
            Family::FiniteA if n < 1 => Err(Error::InvalidType(format!("A_{n} needs n >= 1"))),
            Family::AffineA if n < 2 => Err(Error::InvalidType(format!(
                "affine A_{n} needs n >= 2"
            ))),
            _ => Ok(CoxeterType { family, n }),
        }
    }

    pub fn finite(n: usize) -> Result<Self> {
        Self::new(Family::FiniteA, n)
    }

    pub fn affine(n: usize) -> Result<Self> {
        Self::new(Family::AffineA, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of σ generators.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_affine(&self) -> bool {
        self.family == Family::AffineA
    }

    /// Window size N = n + 1.
    pub fn window_len(&self) -> usize {
        self.n + 1
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::FiniteA => self.n,
            Family::AffineA => self.n + 1,
        }
    }

    pub fn generators(&self) -> std::ops::RangeInclusive<Gen> {
        1..=self.rank()
    }

    pub fn affine_generator(&self) -> Option<Gen> {
        self.is_affine().then_some(self.n + 1)
    }

    pub fn contains(&self, s: Gen) -> bool {
        (1..=self.rank()).contains(&s)
    }

    pub fn check_gen(&self, s: Gen) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { gen: s, ty: *self })
        }
    }

    pub fn check_word(&self, w: &[Gen]) -> Result<()> {
        w.iter().try_for_each(|&s| self.check_gen(s))
    }

    /// The finite parabolic type A_n sitting inside this type.
    pub fn finite_part(&self) -> CoxeterType {
        CoxeterType { family: Family::FiniteA, n: self.n }
    }

    /// m_st without range checks.
    pub fn m(&self, s: Gen, t: Gen) -> u8 {
        if s == t {
            return 1;
        }
        let d = s.abs_diff(t);
        let adjacent = match self.family {
            Family::FiniteA => d == 1,
            Family::AffineA => d == 1 || d == self.n,
        };
        if adjacent {
            3
        } else {
            2
        }
    }

    pub fn commute(&self, s: Gen, t: Gen) -> bool {
        self.m(s, t) == 2
    }

    /// Generators joined to `s` by a bond.
    pub fn neighbours(&self, s: Gen) -> Vec<Gen> {
        self.generators().filter(|&t| self.m(s, t) == 3).collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::FiniteA => "finite-a",
            Family::AffineA => "affine-a",
        })
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.n)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, n) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidType(format!("expected finite-a:N or affine-a:N, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidType(format!("bad rank in {s:?}")))?;
        match fam.trim() {
            "finite-a" => Self::finite(n),
            "affine-a" => Self::affine(n),
            other => Err(Error::InvalidType(format!("unknown family {other:?}"))),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn coxeter_matrix_entry(ty: CoxeterType, s: Gen, t: Gen) -> Result<u8> {
    ty.check_gen(s)?;
    ty.check_gen(t)?;
    Ok(ty.m(s, t))
}

pub(crate) fn parse_gen_token(tok: &str, ty: CoxeterType) -> Result<Gen> {
    let s = match tok {
        "a" => ty
            .affine_generator()
            .ok_or_else(|| Error::UnknownToken(tok.to_string()))?,
        _ => tok
            .parse::<Gen>()
            .map_err(|_| Error::UnknownToken(tok.to_string()))?,
    };
    ty.check_gen(s)?;
    Ok(s)
}

pub(crate) fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty())
}

pub fn parse_word(text: &str, ty: CoxeterType) -> Result<Vec<Gen>> {
    tokens(text).map(|t| parse_gen_token(t, ty)).collect()
}

pub(crate) fn render_gen(s: Gen, ty: CoxeterType) -> String {
    if ty.affine_generator() == Some(s) {
        "a".to_string()
    } else {
        s.to_string()
    }
}

pub fn render_word(w: &[Gen], ty: CoxeterType) -> String {
    w.iter().map(|&s| render_gen(s, ty)).collect::<Vec<_>>().join(" ")
}

/// Letter multiplicities of a word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SupportProfile(pub BTreeMap<Gen, usize>);

impl SupportProfile {
    pub fn support(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.keys().copied()
    }

    pub fn count(&self, s: Gen) -> usize {
        self.0.get(&s).copied().unwrap_or(0)
    }

    pub fn contains(&self, s: Gen) -> bool {
        self.0.contains_key(&s)
    }
}

pub fn support_profile(w: &[Gen]) -> SupportProfile {
    let mut m = BTreeMap::new();
    for &s in w {
        *m.entry(s).or_insert(0) += 1;
    }
    SupportProfile(m)
}

/// σ_i σ_{i-1} … σ_j; empty when i < j.
pub fn descending_run(i: usize, j: usize) -> Vec<Gen> {
    if i < j || i == 0 {
        return Vec::new();
    }
    (j.max(1)..=i).rev().collect()
}

/// σ_i σ_{i+1} … σ_j; empty when i > j.
pub fn ascending_run(i: usize, j: usize) -> Vec<Gen> {
    if i > j {
        return Vec::new();
    }
    (i.max(1)..=j).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_entries() {
        let a3 = CoxeterType::finite(3).unwrap();
        assert_eq!(coxeter_matrix_entry(a3, 1, 2).unwrap(), 3);
        assert_eq!(coxeter_matrix_entry(a3, 1, 3).unwrap(), 2);
        assert_eq!(coxeter_matrix_entry(a3, 2, 2).unwrap(), 1);
        let t2 = CoxeterType::affine(2).unwrap();
        assert_eq!(coxeter_matrix_entry(t2, 1, 3).unwrap(), 3);
        assert!(coxeter_matrix_entry(a3, 1, 4).is_err());
    }

    #[test]
    fn symmetric_and_cyclic() {
        for n in 1..=8 {
            for ty in [CoxeterType::finite(n).ok(), CoxeterType::affine(n).ok()]
                .into_iter()
                .flatten()
            {
                for s in ty.generators() {
                    for t in ty.generators() {
                        assert_eq!(ty.m(s, t), ty.m(t, s));
                    }
                    if ty.is_affine() {
                        assert_eq!(ty.neighbours(s).len(), 2);
                    }
                }
            }
        }
    }

    #[test]
    fn affine_one_rejected() {
        assert!(CoxeterType::affine(1).is_err());
        assert!(CoxeterType::finite(0).is_err());
    }

    #[test]
    fn parse_and_render() {
        let t2 = CoxeterType::affine(2).unwrap();
        assert_eq!(parse_word("2 1 a", t2).unwrap(), vec![2, 1, 3]);
        assert_eq!(parse_word("2,1,3", t2).unwrap(), vec![2, 1, 3]);
        assert_eq!(render_word(&[2, 1, 3], t2), "2 1 a");
        let a3 = CoxeterType::finite(3).unwrap();
        assert!(parse_word("", a3).unwrap().is_empty());
        assert!(matches!(parse_word("1 4", a3), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(parse_word("1 a", a3), Err(Error::UnknownToken(_))));
        assert!(matches!(parse_word("x", a3), Err(Error::UnknownToken(_))));
    }

    #[test]
    fn type_strings() {
        let t: CoxeterType = "affine-a:3".parse().unwrap();
        assert_eq!(t, CoxeterType::affine(3).unwrap());
        assert_eq!(t.to_string(), "affine-a:3");
        assert!("affine-a:1".parse::<CoxeterType>().is_err());
        assert!("b:3".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn profiles() {
        let p = support_profile(&[2, 1, 3, 2]);
        assert_eq!(p.0, BTreeMap::from([(1, 1), (2, 2), (3, 1)]));
        assert!(support_profile(&[]).0.is_empty());
        assert_eq!(support_profile(&[3, 3]).0, BTreeMap::from([(3, 2)]));
    }

    #[test]
    fn runs() {
        assert_eq!(descending_run(3, 1), vec![3, 2, 1]);
        assert_eq!(descending_run(0, 1), Vec::<Gen>::new());
        assert_eq!(ascending_run(2, 4), vec![2, 3, 4]);
        assert_eq!(ascending_run(5, 4), Vec::<Gen>::new());
    }
}
