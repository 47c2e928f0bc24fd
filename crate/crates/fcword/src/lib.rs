//! Fully commutative elements of the Coxeter groups A_n and Ã_n.
//!
//! * [`coxeter`]: types, generator indexing, word syntax
//! * [`perm`]: window-notation group model (equality, length, descents)
//! * [`fc`]: full-commutativity tests and enumeration
//! * [`normal_form`]: finite and affine normal forms, blocks, Ã_2 trees
//! * [`braid`]: affine braid words, tower maps, ψ, closed forms
//! * [`garside`]: classical braid word problem and the embedding oracle
//! * [`verify`]: sweeps behind `fc verify`
//! * [`cli`]: the `fc` command line

pub mod braid;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod fc;
pub mod garside;
pub mod normal_form;
pub mod perm;
pub mod verify;

pub use coxeter::{parse_word, render_word, support_profile, CoxeterType, Family, Gen, SupportProfile};
pub use error::{Error, Result};
pub use perm::{word_to_element, AffinePermutation};
