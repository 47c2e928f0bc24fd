//! The two tree families describing FC elements of W(Ã_2).
//!
//! T1: {1, a, σ_1 a} · (σ_2 σ_1 a)^k · {1, σ_2, σ_2 σ_1}
//! T2: {1, a, σ_2 a} · (σ_1 σ_2 a)^k · {1, σ_1, σ_1 σ_2}

use serde::Serialize;

use crate::coxeter::{CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::fc::is_fc_element;
use crate::perm::{word_to_element, AffinePermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tree {
    T1,
    T2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum A2Prefix {
    One,
    A,
    /// σ_x a_3 with x = 1 in T1 and x = 2 in T2.
    SigmaA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum A2Suffix {
    One,
    /// σ_y
    Sigma,
    /// σ_y σ_z
    SigmaSigma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct A2Form {
    pub tree: Tree,
    pub prefix: A2Prefix,
    pub k: usize,
    pub suffix: A2Suffix,
}

impl A2Form {
    /// (first, second) of the period σ_first σ_second a_3.
    fn letters(&self) -> (Gen, Gen) {
        match self.tree {
            Tree::T1 => (2, 1),
            Tree::T2 => (1, 2),
        }
    }

    pub fn to_word(&self) -> Vec<Gen> {
        let (f, s) = self.letters();
        let mut w = match self.prefix {
            A2Prefix::One => vec![],
            A2Prefix::A => vec![3],
            A2Prefix::SigmaA => vec![s, 3],
        };
        for _ in 0..self.k {
            w.extend([f, s, 3]);
        }
        w.extend(match self.suffix {
            A2Suffix::One => vec![],
            A2Suffix::Sigma => vec![f],
            A2Suffix::SigmaSigma => vec![f, s],
        });
        w
    }

    /// Every form with k ≤ `k_max`, in tie-break order.
    pub fn all(k_max: usize) -> Vec<A2Form> {
        let mut out = Vec::new();
        for tree in [Tree::T1, Tree::T2] {
            for k in 0..=k_max {
                for prefix in [A2Prefix::One, A2Prefix::A, A2Prefix::SigmaA] {
                    for suffix in [A2Suffix::One, A2Suffix::Sigma, A2Suffix::SigmaSigma] {
                        out.push(A2Form { tree, prefix, k, suffix });
                    }
                }
            }
        }
        out
    }
}

fn prefix_len(p: A2Prefix) -> usize {
    match p {
        A2Prefix::One => 0,
        A2Prefix::A => 1,
        A2Prefix::SigmaA => 2,
    }
}

fn suffix_len(s: A2Suffix) -> usize {
    match s {
        A2Suffix::One => 0,
        A2Suffix::Sigma => 1,
        A2Suffix::SigmaSigma => 2,
    }
}

/// Tree form of an FC element of W(Ã_2). Ties (only at k = 0) go to T1,
/// then the smaller k, then the shorter prefix.
pub fn a2_family(x: &AffinePermutation) -> Result<A2Form> {
    let ty = CoxeterType::affine(2)?;
    if x.ty() != ty {
        return Err(Error::TypeMismatch(x.ty(), ty));
    }
    if !is_fc_element(x) {
        return Err(Error::NotFullyCommutative);
    }
    let len = x.length();
    for tree in [Tree::T1, Tree::T2] {
        for prefix in [A2Prefix::One, A2Prefix::A, A2Prefix::SigmaA] {
            for suffix in [A2Suffix::One, A2Suffix::Sigma, A2Suffix::SigmaSigma] {
                let fixed = prefix_len(prefix) + suffix_len(suffix);
                if len < fixed || !(len - fixed).is_multiple_of(3) {
                    continue;
                }
                let form = A2Form { tree, prefix, k: (len - fixed) / 3, suffix };
                if &word_to_element(ty, &form.to_word())? == x {
                    return Ok(form);
                }
            }
        }
    }
    Err(Error::NoGrammarMatch(x.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(w: &[Gen]) -> AffinePermutation {
        word_to_element(CoxeterType::affine(2).unwrap(), w).unwrap()
    }

    #[test]
    fn examples() {
        let f = a2_family(&elem(&[2, 1, 3, 2, 1, 3, 2, 1, 3])).unwrap();
        assert_eq!(f, A2Form { tree: Tree::T1, prefix: A2Prefix::One, k: 3, suffix: A2Suffix::One });
        let f = a2_family(&elem(&[3, 1, 2, 3])).unwrap();
        assert_eq!(f, A2Form { tree: Tree::T2, prefix: A2Prefix::A, k: 1, suffix: A2Suffix::One });
        let f = a2_family(&elem(&[])).unwrap();
        assert_eq!(f, A2Form { tree: Tree::T1, prefix: A2Prefix::One, k: 0, suffix: A2Suffix::One });
        assert!(matches!(a2_family(&elem(&[1, 2, 1])), Err(Error::NotFullyCommutative)));
    }

    #[test]
    fn words() {
        let f = A2Form { tree: Tree::T2, prefix: A2Prefix::SigmaA, k: 1, suffix: A2Suffix::SigmaSigma };
        assert_eq!(f.to_word(), vec![2, 3, 1, 2, 3, 1, 2]);
    }
}
