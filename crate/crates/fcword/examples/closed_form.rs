//! Closed forms for powers of y = σ_j … σ_1 σ_{j+1} … σ_n a_{n+1}.

use fcword::braid::{certify_equal, lemma_251_form, y_power};
use fcword::garside::EmbeddingTable;

fn main() -> fcword::Result<()> {
    for n in 3..=5 {
        let table = EmbeddingTable::validated_default(n)?;
        for j in 2..n {
            let period = n - j + 1;
            for k in 2..=2 * period + 3 {
                let form = lemma_251_form(n, j, k)?;
                let v = certify_equal(&y_power(n, j, k)?, &form, &table)?;
                println!(
                    "n={n} j={j} k={k:>2} (m={}, r={}): {} letters, equal = {}",
                    k / period,
                    k % period,
                    form.len(),
                    v.equal()
                );
            }
        }
    }
    println!("y^7 for n=4, j=2: {}", lemma_251_form(4, 2, 7)?);
    Ok(())
}
