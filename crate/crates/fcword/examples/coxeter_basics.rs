//! Coxeter types, the window model, lengths and descents.

use fcword::coxeter::{coxeter_matrix_entry, parse_word, render_word};
use fcword::perm::{is_reduced, word_to_element};
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty: CoxeterType = "affine-a:3".parse()?;
    println!("{ty}: rank {}, window length {}", ty.rank(), ty.window_len());
    println!("m(1, a) = {}", coxeter_matrix_entry(ty, 1, 4)?);
    println!("m(1, 3) = {}", coxeter_matrix_entry(ty, 1, 3)?);

    let w = parse_word("2 1 3 a 2", ty)?;
    let x = word_to_element(ty, &w)?;
    println!("{} has window {x}", render_word(&w, ty));
    println!("  length {} (inversion count {})", x.length(), x.inversion_length());
    println!("  right descents {:?}", x.right_descents().iter().collect::<Vec<_>>());
    println!("  left descents  {:?}", x.left_descents().iter().collect::<Vec<_>>());
    println!("  canonical word {}", render_word(&x.canonical_reduced_word(), ty));
    println!("  inverse {}", x.invert());

    for text in ["1 1", "1 2 1", "a 1 2 3 a"] {
        let w = parse_word(text, ty)?;
        println!("{text:>10}: reduced = {}", is_reduced(ty, &w)?);
    }
    Ok(())
}
