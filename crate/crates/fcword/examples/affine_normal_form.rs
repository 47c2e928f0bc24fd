//! Affine normal forms, their blocks, and the class-scan cross-check.

use fcword::coxeter::{parse_word, render_word};
use fcword::normal_form::{affine_nf, block_decomposition, scan_class, validate_nf, Mode};
use fcword::perm::word_to_element;
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty = CoxeterType::affine(3)?;
    for text in ["1 3 a", "a 2 1 3 a 2 1 3 a", "3 2 1 a 3 2 1 a 3", "2 a 1 3 a 2"] {
        let x = word_to_element(ty, &parse_word(text, ty)?)?;
        let nf = affine_nf(&x)?;
        println!("{text}");
        println!("  {}", nf.to_record()?);
        let blocks = block_decomposition(&nf)?;
        println!(
            "  short {} | period {} (k = {}) | residue {}",
            render_word(&blocks.short, ty),
            render_word(&blocks.period, ty),
            blocks.k,
            render_word(&blocks.residue, ty)
        );
        let strict = validate_nf(&nf, Mode::Strict);
        if !strict.is_empty() {
            println!("  literal inequalities not met: {}", strict.join("; "));
        }
        let scan = scan_class(&x, 100_000)?;
        println!(
            "  class of {} words, {} canonical reading(s), {} literal strict",
            scan.class_size,
            scan.canonical.len(),
            scan.strict.len()
        );
    }
    Ok(())
}
