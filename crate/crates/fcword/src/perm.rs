//! Window-notation model of W(A_n) and W(Ã_n).
//!
//! Generators act on the right: σ_i swaps window positions i and i+1, and the
//! affine generator replaces (w(1), w(N)) by (w(N) − N, w(1) + N).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::coxeter::{CoxeterType, Gen};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    ty: CoxeterType,
    window: Vec<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DescentSet(pub BTreeSet<Gen>);

impl DescentSet {
    pub fn contains(&self, s: Gen) -> bool {
        self.0.contains(&s)
    }

    pub fn min(&self) -> Option<Gen> {
        self.0.iter().next().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.iter().copied()
    }
}

impl AffinePermutation {
    pub fn identity(ty: CoxeterType) -> Self {
        let window = (1..=ty.window_len() as i64).collect();
        AffinePermutation { ty, window }
    }

    pub fn from_window(ty: CoxeterType, window: Vec<i64>) -> Result<Self> {
        let big_n = ty.window_len() as i64;
        if window.len() as i64 != big_n {
            return Err(Error::InvalidWindow(format!("expected {big_n} entries")));
        }
        let mut residues: Vec<i64> = window.iter().map(|v| v.rem_euclid(big_n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() as i64 != big_n {
            return Err(Error::InvalidWindow("residues are not distinct".into()));
        }
        if window.iter().sum::<i64>() != big_n * (big_n + 1) / 2 {
            return Err(Error::InvalidWindow("window sum is not N(N+1)/2".into()));
        }
        let x = AffinePermutation { ty, window };
        if !ty.is_affine() && !x.is_finite() {
            return Err(Error::InvalidWindow("not a permutation of 1..N".into()));
        }
        Ok(x)
    }

    pub fn ty(&self) -> CoxeterType {
        self.ty
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    fn big_n(&self) -> i64 {
        self.window.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// True when the element lies in the finite parabolic subgroup W(A_n).
    pub fn is_finite(&self) -> bool {
        self.window.iter().all(|&v| 1 <= v && v <= self.big_n())
    }

    /// The same element viewed in type A_n.
    pub fn to_finite(&self) -> Result<Self> {
        if !self.is_finite() {
            return Err(Error::InvalidWindow("element involves the affine generator".into()));
        }
        Ok(AffinePermutation { ty: self.ty.finite_part(), window: self.window.clone() })
    }

    /// The same element viewed in a type sharing the same window size.
    pub fn with_type(&self, ty: CoxeterType) -> Result<Self> {
        Self::from_window(ty, self.window.clone())
    }

    /// w(i) for any integer i, extended periodically.
    pub fn value(&self, i: i64) -> i64 {
        let big_n = self.big_n();
        let r = (i - 1).rem_euclid(big_n);
        let q = (i - 1).div_euclid(big_n);
        self.window[r as usize] + q * big_n
    }

    pub fn apply_right(&mut self, s: Gen) {
        let big_n = self.window.len();
        debug_assert!(self.ty.contains(s));
        if s < big_n {
            self.window.swap(s - 1, s);
        } else {
            let first = self.window[0];
            let last = self.window[big_n - 1];
            self.window[0] = last - big_n as i64;
            self.window[big_n - 1] = first + big_n as i64;
        }
    }

    pub fn right_mul(&self, s: Gen) -> Self {
        let mut x = self.clone();
        x.apply_right(s);
        x
    }

    pub fn left_mul(&self, s: Gen) -> Self {
        self.invert().right_mul(s).invert()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch(self.ty, other.ty));
        }
        let window = other.window.iter().map(|&v| self.value(v)).collect();
        Ok(AffinePermutation { ty: self.ty, window })
    }

    pub fn invert(&self) -> Self {
        let big_n = self.big_n();
        let mut window = vec![0; big_n as usize];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(big_n);
            let q = (v - 1).div_euclid(big_n);
            window[r as usize] = i as i64 + 1 - q * big_n;
        }
        AffinePermutation { ty: self.ty, window }
    }

    pub fn is_right_descent(&self, s: Gen) -> bool {
        let big_n = self.window.len();
        if s < big_n {
            self.window[s - 1] > self.window[s]
        } else {
            self.ty.is_affine() && self.window[big_n - 1] > self.window[0] + big_n as i64
        }
    }

    pub fn right_descents(&self) -> DescentSet {
        DescentSet(self.ty.generators().filter(|&s| self.is_right_descent(s)).collect())
    }

    pub fn left_descents(&self) -> DescentSet {
        self.invert().right_descents()
    }

    fn min_right_descent(&self) -> Option<Gen> {
        self.ty.generators().find(|&s| self.is_right_descent(s))
    }

    pub fn length(&self) -> usize {
        let mut x = self.clone();
        let mut len = 0;
        while let Some(s) = x.min_right_descent() {
            x.apply_right(s);
            len += 1;
        }
        len
    }

    /// Length from the inversion formula Σ_{i<j} |⌊(w(j) − w(i)) / N⌋|.
    pub fn inversion_length(&self) -> usize {
        let big_n = self.big_n();
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(big_n).unsigned_abs();
            }
        }
        total as usize
    }

    /// Reduced word obtained by stripping the smallest right descent at each step.
    pub fn canonical_reduced_word(&self) -> Vec<Gen> {
        let mut x = self.clone();
        let mut out = Vec::new();
        while let Some(s) = x.min_right_descent() {
            x.apply_right(s);
            out.push(s);
        }
        out.reverse();
        out
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn word_to_element(ty: CoxeterType, w: &[Gen]) -> Result<AffinePermutation> {
    ty.check_word(w)?;
    let mut x = AffinePermutation::identity(ty);
    for &s in w {
        x.apply_right(s);
    }
    Ok(x)
}

pub fn multiply(x: &AffinePermutation, y: &AffinePermutation) -> Result<AffinePermutation> {
    x.multiply(y)
}

pub fn invert(x: &AffinePermutation) -> AffinePermutation {
    x.invert()
}

pub fn left_descents(x: &AffinePermutation) -> DescentSet {
    x.left_descents()
}

pub fn right_descents(x: &AffinePermutation) -> DescentSet {
    x.right_descents()
}

pub fn length(x: &AffinePermutation) -> usize {
    x.length()
}

pub fn canonical_reduced_word(x: &AffinePermutation) -> Vec<Gen> {
    x.canonical_reduced_word()
}

/// A word is reduced iff no letter is a right descent of the prefix before it.
pub fn is_reduced(ty: CoxeterType, w: &[Gen]) -> Result<bool> {
    ty.check_word(w)?;
    let mut x = AffinePermutation::identity(ty);
    for &s in w {
        if x.is_right_descent(s) {
            return Ok(false);
        }
        x.apply_right(s);
    }
    Ok(true)
}

/// Every reduced expression of `x`, by recursion on right descents.
pub fn reduced_words(x: &AffinePermutation) -> Vec<Vec<Gen>> {
    let descents = x.right_descents();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in descents.iter() {
        for mut w in reduced_words(&x.right_mul(s)) {
            w.push(s);
            out.push(w);
        }
    }
    out
}

/// Calls `f` on every reduced word of length ≤ `max_len`.
pub fn for_each_reduced_word(ty: CoxeterType, max_len: usize, mut f: impl FnMut(&[Gen])) {
    fn go(
        ty: CoxeterType,
        x: &AffinePermutation,
        w: &mut Vec<Gen>,
        max_len: usize,
        f: &mut dyn FnMut(&[Gen]),
    ) {
        f(w);
        if w.len() == max_len {
            return;
        }
        for s in ty.generators() {
            if !x.is_right_descent(s) {
                w.push(s);
                go(ty, &x.right_mul(s), w, max_len, f);
                w.pop();
            }
        }
    }
    go(ty, &AffinePermutation::identity(ty), &mut Vec::new(), max_len, &mut f);
}
