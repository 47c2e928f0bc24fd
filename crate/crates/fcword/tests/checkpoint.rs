use std::fs;

use fcword::verify::{run_suite, Suite, VerifyConfig};
use fcword::CoxeterType;

#[test]
fn interrupted_sweep_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cor.jsonl");
    let cfg = VerifyConfig {
        ty: Some(CoxeterType::affine(2).unwrap()),
        max_len: Some(8),
        checkpoint: Some(path.clone()),
        ..VerifyConfig::default()
    };
    let fresh = run_suite(Suite::Cor252, &cfg).unwrap();
    assert_eq!(fresh.resumed, 0);

    // drop the last three units and tear the final line, as a crash would
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let keep = lines.len() - 3;
    let mut cut = lines[..keep].join("\n");
    cut.push_str("\n{\"unit\":\"cor252/aff");
    fs::write(&path, cut).unwrap();

    let resumed = run_suite(Suite::Cor252, &cfg).unwrap();
    assert_eq!(resumed.resumed, keep);
    assert_eq!(resumed.result, fresh.result);
    let third = run_suite(Suite::Cor252, &cfg).unwrap();
    assert_eq!(third.resumed, third.units);
}

#[test]
fn seeds_do_not_share_checkpoints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.jsonl");
    let cfg = |seed| VerifyConfig { samples: Some(300), seed, checkpoint: Some(path.clone()), ..VerifyConfig::default() };
    run_suite(Suite::Garside, &cfg(1)).unwrap();
    let other = run_suite(Suite::Garside, &cfg(2)).unwrap();
    assert_eq!(other.resumed, 0);
    let again = run_suite(Suite::Garside, &cfg(1)).unwrap();
    assert_eq!(again.resumed, again.units);
}
