//! The two tree families of W(Ã_2).

use fcword::coxeter::render_word;
use fcword::fc::enumerate_fc;
use fcword::normal_form::a2_family;
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty = CoxeterType::affine(2)?;
    for rec in enumerate_fc(ty, 8, usize::MAX)? {
        let form = a2_family(&rec.element)?;
        println!(
            "{:>16}  {:?} prefix {:?} k = {} suffix {:?}  -> {}",
            render_word(&rec.word, ty),
            form.tree,
            form.prefix,
            form.k,
            form.suffix,
            render_word(&form.to_word(), ty)
        );
    }
    Ok(())
}
