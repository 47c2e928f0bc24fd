//! Tower maps and the ψ automorphism on affine braid words.

use fcword::braid::{certify_equal, coxeter_element, project_to_coxeter, psi, psi_shift, tower_map, BraidWord};
use fcword::garside::EmbeddingTable;

fn main() -> fcword::Result<()> {
    let n = 3;
    let table = EmbeddingTable::validated_default(n)?;
    println!("C = {}", coxeter_element(n));
    for g in 1..=n {
        let h = tower_map(&BraidWord::positive(n - 1, &[g])?)?;
        let image = psi(&h, 1)?;
        let shifted = tower_map(&BraidWord::positive(n - 1, &[psi_shift(n, g, 1)])?)?;
        let verdict = certify_equal(&image, &shifted, &table)?;
        println!(
            "ψ[{h}] = {image}  ~ {shifted}: {}  (window {})",
            verdict.equal(),
            project_to_coxeter(&image)?
        );
    }
    let h = tower_map(&BraidWord::parse("1 2' a", n - 1)?)?;
    for d in 0..=2 * n as i64 {
        let v = certify_equal(&psi(&h, d)?, &psi(&h, d % n as i64)?, &table)?;
        println!("ψ^{d} vs ψ^{}: {}", d % n as i64, v.equal());
    }
    Ok(())
}
