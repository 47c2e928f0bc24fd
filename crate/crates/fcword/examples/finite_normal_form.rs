//! Run decompositions of FC elements of A_n.

use fcword::fc::FcLayers;
use fcword::normal_form::{finite_nf, is_full, sigma_n_side};
use fcword::CoxeterType;

fn main() -> fcword::Result<()> {
    let ty = CoxeterType::finite(3)?;
    for layer in FcLayers::new(ty, 6, usize::MAX) {
        for rec in layer? {
            let nf = finite_nf(&rec.element)?;
            let side = if is_full(ty, &rec.word)? {
                format!("full, σ_3 on the {:?}", sigma_n_side(ty, &rec.word)?).to_lowercase()
            } else {
                String::new()
            };
            println!("{:>14}  runs {:?}  {side}", rec.element.to_string(), nf.runs);
        }
    }
    Ok(())
}
