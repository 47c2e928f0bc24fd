//! Normal forms of FC elements: run decompositions in A_n, the affine
//! grammar in Ã_n, block decompositions and the Ã_2 tree families.

pub mod a2;
pub mod affine;
pub mod blocks;
pub mod finite;

use serde::Serialize;

use crate::coxeter::{support_profile, CoxeterType, Family, Gen};
use crate::error::{Error, Result};
use crate::fc::{fc_criterion, is_fc_element, is_fully_commutative};
use crate::perm::{word_to_element, AffinePermutation};

pub use a2::{a2_family, A2Form, A2Prefix, A2Suffix, Tree};
pub use affine::{
    affine_nf, affine_nf_candidates, affine_nf_oracle, parse_affine_word, scan_class, validate_nf,
    AffineNormalForm, ClassScan, Mode, Residue,
};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use finite::{finite_nf, parse_finite_word, FiniteNormalForm};

/// Multiplicity of a_{n+1} in any reduced expression of an FC element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AffineLength(pub usize);

pub fn affine_length(x: &AffinePermutation) -> Result<AffineLength> {
    let w = x.canonical_reduced_word();
    if !fc_criterion(x.ty(), &w) {
        return Err(Error::NotFullyCommutative);
    }
    let count = match x.ty().affine_generator() {
        Some(a) => w.iter().filter(|&&s| s == a).count(),
        None => 0,
    };
    Ok(AffineLength(count))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

fn require_finite_fc(ty: CoxeterType, w: &[Gen]) -> Result<()> {
    if ty.family() != Family::FiniteA {
        return Err(Error::InvalidType(format!("{ty} is not of finite type")));
    }
    if !is_fully_commutative(ty, w)? {
        return Err(Error::NotFullyCommutative);
    }
    Ok(())
}

/// σ_1 and σ_n both lie in the support.
pub fn is_full(ty: CoxeterType, w: &[Gen]) -> Result<bool> {
    require_finite_fc(ty, w)?;
    let p = support_profile(w);
    Ok(p.contains(1) && p.contains(ty.n()))
}

/// Left exactly when the element is σ_n σ_{n−1} … σ_1.
pub fn sigma_n_side(ty: CoxeterType, w: &[Gen]) -> Result<Side> {
    if !is_full(ty, w)? {
        return Err(Error::NotFull);
    }
    let left: Vec<Gen> = (1..=ty.n()).rev().collect();
    if word_to_element(ty, w)? == word_to_element(ty, &left)? {
        Ok(Side::Left)
    } else {
        Ok(Side::Right)
    }
}

/// Whether an element is FC and, if so, its normal-form word.
pub fn normal_form_word(x: &AffinePermutation) -> Result<Vec<Gen>> {
    if !is_fc_element(x) {
        return Err(Error::NotFullyCommutative);
    }
    if x.is_finite() {
        finite_nf(x)?.to_word()
    } else {
        affine_nf(x)?.to_word()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_lengths() {
        let t2 = CoxeterType::affine(2).unwrap();
        let t3 = CoxeterType::affine(3).unwrap();
        assert_eq!(affine_length(&AffinePermutation::identity(t2)).unwrap(), AffineLength(0));
        let x = word_to_element(t2, &[2, 1, 3, 2, 1, 3, 2, 1, 3]).unwrap();
        assert_eq!(affine_length(&x).unwrap(), AffineLength(3));
        let y = word_to_element(t3, &[1, 3, 4]).unwrap();
        assert_eq!(affine_length(&y).unwrap(), AffineLength(1));
        let z = word_to_element(t2, &[1, 2, 1]).unwrap();
        assert!(affine_length(&z).is_err());
    }

    #[test]
    fn fullness() {
        let a3 = CoxeterType::finite(3).unwrap();
        assert!(is_full(a3, &[3, 2, 1]).unwrap());
        assert_eq!(sigma_n_side(a3, &[3, 2, 1]).unwrap(), Side::Left);
        assert!(is_full(a3, &[2, 1, 3]).unwrap());
        assert_eq!(sigma_n_side(a3, &[2, 1, 3]).unwrap(), Side::Right);
        assert!(!is_full(a3, &[2]).unwrap());
        assert!(matches!(sigma_n_side(a3, &[2]), Err(Error::NotFull)));
        assert!(is_full(a3, &[1, 2, 1]).is_err());
    }
}
