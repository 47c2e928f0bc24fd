//! Left normal forms in B_m and the embedding of B(Ã_n).

use fcword::braid::BraidWord;
use fcword::garside::{braids_equal, embed_affine, left_normal_form, validate_embedding, ClassicalBraidWord, EmbeddingTable};

fn main() -> fcword::Result<()> {
    for text in ["1 2 1", "2 1", "1' 2 1 1", "1 2 1 2' 1' 2'"] {
        let w = ClassicalBraidWord::parse(text, 4)?;
        let nf = left_normal_form(&w)?;
        let mut parts = vec![format!("Δ^{}", nf.infimum)];
        parts.extend(nf.factors.iter().map(|f| format!("{:?}", f.images())));
        println!("{text:>16}: {}", parts.join(" · "));
    }
    let a = ClassicalBraidWord::parse("1 2 1", 3)?;
    let b = ClassicalBraidWord::parse("2 1 2", 3)?;
    let c = ClassicalBraidWord::parse("2 1", 3)?;
    println!("121 = 212: {}", braids_equal(&a, &b)?);
    println!("12 = 21: {}", braids_equal(&ClassicalBraidWord::parse("1 2", 3)?, &c)?);

    for n in 2..=5 {
        let mut table = EmbeddingTable::rotation(n)?;
        let report = validate_embedding(n, &mut table)?;
        println!("n = {n}: {} relations, {} failures", report.checked, report.failures.len());
        if n == 3 {
            print!("{}", table.render());
            let w = BraidWord::parse("1 a 3'", n)?;
            println!("{w} embeds as {}", embed_affine(&w, &table)?);
        }
    }
    Ok(())
}
