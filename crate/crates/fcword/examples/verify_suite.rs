//! Running verification suites from code, with a checkpoint file.

use fcword::verify::{run_suite, Suite, VerifyConfig};

fn main() -> fcword::Result<()> {
    let checkpoint = std::env::temp_dir().join("fcword-example-checkpoint.jsonl");
    let _ = std::fs::remove_file(&checkpoint);
    let cfg = VerifyConfig { checkpoint: Some(checkpoint.clone()), ..VerifyConfig::default() };
    for suite in [Suite::Catalan, Suite::Multiplicity, Suite::NfUnique, Suite::Cor252] {
        let report = run_suite(suite, &cfg)?;
        println!("{}", report.footer());
        for f in report.findings_of("discrepancy").take(2) {
            println!("  e.g. {}", f);
        }
    }
    let again = run_suite(Suite::NfUnique, &cfg)?;
    println!("second run resumed {}/{} units", again.resumed, again.units);
    std::fs::remove_file(&checkpoint)?;
    Ok(())
}
