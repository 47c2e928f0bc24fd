//! Full commutativity and length-by-length enumeration.

use fcword::coxeter::{parse_word, render_word};
use fcword::fc::{catalan, count_fc_finite, is_fully_commutative, is_fully_commutative_oracle, FcLayers};
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty = CoxeterType::affine(2)?;
    for text in ["1 2 1", "2 1 a", "1 2 a 1"] {
        let w = parse_word(text, ty)?;
        println!(
            "{text:>8}: fast {} / class scan {}",
            is_fully_commutative(ty, &w)?,
            is_fully_commutative_oracle(ty, &w, 1000)?
        );
    }

    for n in [2, 3, 4] {
        let ty = CoxeterType::affine(n)?;
        let sizes: Vec<usize> = FcLayers::new(ty, 12, usize::MAX)
            .map(|layer| layer.map(|l| l.len()))
            .collect::<fcword::Result<_>>()?;
        println!("{ty}: FC elements by length {sizes:?}");
    }

    let ty = CoxeterType::affine(2)?;
    for layer in FcLayers::new(ty, 3, usize::MAX).skip(3) {
        let words: Vec<String> = layer?.iter().map(|r| render_word(&r.word, ty)).collect();
        println!("length 3 in {ty}: {}", words.join(", "));
    }

    for n in 1..=7 {
        println!("|FC(A_{n})| = {} (Catalan {})", count_fc_finite(n)?, catalan(n as u64 + 1));
    }
    Ok(())
}
