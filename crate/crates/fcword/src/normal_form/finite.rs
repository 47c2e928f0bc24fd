use serde::Serialize;

use crate::coxeter::{descending_run, render_word, CoxeterType, Gen};
use crate::error::{Error, Result};
use crate::fc::is_fc_element;
use crate::perm::AffinePermutation;

/// σ_{i_1}…σ_{j_1} σ_{i_2}…σ_{j_2} … with both i and j strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteNormalForm {
    pub n: usize,
    pub runs: Vec<(usize, usize)>,
}

impl FiniteNormalForm {
    pub fn to_word(&self) -> Result<Vec<Gen>> {
        let shape = self.shape_violations();
        if !shape.is_empty() {
            return Err(Error::MalformedNormalForm(shape.join("; ")));
        }
        Ok(self.runs.iter().flat_map(|&(i, j)| descending_run(i, j)).collect())
    }

    fn shape_violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for &(i, j) in &self.runs {
            if j < 1 || i > self.n {
                v.push(format!("run ({i},{j}) out of range"));
            } else if j > i {
                v.push(format!("run ({i},{j}) has j > i"));
            }
        }
        v
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = self.shape_violations();
        if self.runs.windows(2).any(|w| w[0].0 >= w[1].0) {
            v.push("i not strictly increasing".into());
        }
        if self.runs.windows(2).any(|w| w[0].1 >= w[1].1) {
            v.push("j not strictly increasing".into());
        }
        v
    }

    pub fn render(&self) -> String {
        let ty = CoxeterType::finite(self.n.max(1)).expect("rank at least one");
        render_word(&self.to_word().unwrap_or_default(), ty)
    }
}

/// Splits a word into maximal runs σ_i σ_{i−1} … σ_j.
pub fn descending_runs(w: &[Gen]) -> Vec<(usize, usize)> {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &s in w {
        match runs.last_mut() {
            Some(last) if last.1 == s + 1 => last.1 = s,
            _ => runs.push((s, s)),
        }
    }
    runs
}

/// Reads a word literally as a finite normal form, if it has that shape.
pub fn parse_finite_word(n: usize, w: &[Gen]) -> Option<FiniteNormalForm> {
    if w.iter().any(|&s| s < 1 || s > n) {
        return None;
    }
    let nf = FiniteNormalForm { n, runs: descending_runs(w) };
    nf.validate().is_empty().then_some(nf)
}

/// Run decomposition by peeling right cosets: x = x'·σ_m σ_{m−1} … σ_q where
/// q is the position of the value m + 1.
pub fn finite_nf(x: &AffinePermutation) -> Result<FiniteNormalForm> {
    if !x.is_finite() {
        return Err(Error::InvalidWindow("element is not in the finite parabolic subgroup".into()));
    }
    if !is_fc_element(x) {
        return Err(Error::NotFullyCommutative);
    }
    let n = x.ty().n();
    let mut w: Vec<i64> = x.window().to_vec();
    let mut runs = Vec::new();
    for m in (1..=n).rev() {
        let q = w[..=m].iter().position(|&v| v == m as i64 + 1).expect("value present");
        if q < m {
            w[q..=m].rotate_left(1);
            runs.push((m, q + 1));
        }
    }
    runs.reverse();
    let nf = FiniteNormalForm { n, runs };
    debug_assert!(nf.validate().is_empty());
    Ok(nf)
}
