//! Positive lifts of FC elements split as [prefix] · F(c) · C^k · tail.

use fcword::braid::{certify_equal, corollary_252_decompose, positive_lift};
use fcword::coxeter::render_word;
use fcword::fc::enumerate_fc;
use fcword::garside::EmbeddingTable;
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty = CoxeterType::affine(3)?;
    let table = EmbeddingTable::validated_default(3)?;
    for rec in enumerate_fc(ty, 7, usize::MAX)?.iter().filter(|r| !r.element.is_finite()).take(40) {
        let form = corollary_252_decompose(&rec.element)?;
        let ok = certify_equal(&form.realized()?, &positive_lift(&rec.element)?, &table)?.equal();
        let d = form.d_bar_form()?;
        println!(
            "{:>18}  {:?} i0={:?} c=[{}] k={} tail=[{}]  d̄=[{}] i={}  certified={ok}",
            render_word(&rec.word, ty),
            form.variant,
            form.prefix_run,
            form.c,
            form.k,
            render_word(&form.tail, ty),
            render_word(&d.d_bar, ty),
            d.i
        );
    }
    Ok(())
}
