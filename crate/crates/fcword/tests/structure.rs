use std::collections::{HashMap, VecDeque};

use fcword::braid::{
    certify_equal, corollary_252_decompose, exponent_sums, lemma_251_form, positive_lift, tower_map, y_power,
    BraidWord, Cor252Variant,
};
use fcword::coxeter::{descending_run, CoxeterType, Gen};
use fcword::fc::{enumerate_fc, is_fc_element};
use fcword::garside::EmbeddingTable;
use fcword::normal_form::{finite_nf, is_full, sigma_n_side, Side};
use fcword::perm::{is_reduced, reduced_words, word_to_element, AffinePermutation};

fn affine(n: usize) -> CoxeterType {
    CoxeterType::affine(n).unwrap()
}

fn finite(n: usize) -> CoxeterType {
    CoxeterType::finite(n).unwrap()
}

/// Lengths of every element within `radius` of the identity, by breadth-first search.
fn cayley_ball(ty: CoxeterType, radius: usize) -> HashMap<AffinePermutation, usize> {
    let mut dist = HashMap::new();
    let e = AffinePermutation::identity(ty);
    dist.insert(e.clone(), 0);
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d == radius {
            continue;
        }
        for s in ty.generators() {
            let y = x.right_mul(s);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

#[test]
fn lengths_agree_with_cayley_graph_distance() {
    for ty in [affine(2), affine(3), finite(4)] {
        for (x, d) in cayley_ball(ty, 7) {
            assert_eq!(x.length(), d, "{ty} {x}");
        }
    }
    let t = affine(2);
    assert_eq!(word_to_element(t, &[3, 1, 2, 3]).unwrap().length(), 4);
    let x = word_to_element(t, &[2, 1, 3, 2, 1, 3]).unwrap();
    assert_eq!(is_reduced(t, &[2, 1, 3, 2, 1, 3]).unwrap(), cayley_ball(t, 6)[&x] == 6);
}

#[test]
fn small_enumeration_layers() {
    let records = enumerate_fc(affine(2), 2, usize::MAX).unwrap();
    assert_eq!(records.len(), 1 + 3 + 6);
    let records = enumerate_fc(finite(2), 3, usize::MAX).unwrap();
    assert_eq!(records.len(), 5);
}

#[test]
fn extreme_generators_in_finite_normal_forms() {
    for n in 2..=6 {
        let ty = finite(n);
        for rec in enumerate_fc(ty, n * (n + 1) / 2, usize::MAX).unwrap() {
            let nf = finite_nf(&rec.element).unwrap();
            let word = nf.to_word().unwrap();
            let count = |s: Gen| word.iter().filter(|&&t| t == s).count();
            if count(n) > 0 {
                assert_eq!(count(n), 1, "{word:?}");
                assert_eq!(nf.runs.last().unwrap().0, n, "{word:?}");
            }
            assert!(count(1) <= 1, "{word:?}");
        }
    }
}

#[test]
fn interior_factors_are_full() {
    for n in 2..=4 {
        let ty = affine(n);
        let a = n + 1;
        for rec in enumerate_fc(ty, 10, usize::MAX).unwrap() {
            for w in reduced_words(&rec.element) {
                let factors: Vec<&[Gen]> = w.split(|&s| s == a).collect();
                if factors.len() < 3 {
                    continue;
                }
                for u in &factors[1..factors.len() - 1] {
                    assert!(is_full(finite(n), u).unwrap(), "{w:?} interior {u:?}");
                }
            }
        }
    }
}

#[test]
fn side_of_sigma_n() {
    let t = finite(3);
    assert_eq!(sigma_n_side(t, &[3, 2, 1]).unwrap(), Side::Left);
    assert_eq!(sigma_n_side(t, &[2, 1, 3]).unwrap(), Side::Right);
    assert!(sigma_n_side(t, &[2, 1]).is_err());
    for rec in enumerate_fc(finite(4), 10, usize::MAX).unwrap() {
        if is_full(finite(4), &rec.word).unwrap() {
            let left = rec.element == word_to_element(finite(4), &[4, 3, 2, 1]).unwrap();
            assert_eq!(sigma_n_side(finite(4), &rec.word).unwrap() == Side::Left, left);
        }
    }
}

fn bw(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).unwrap()
}

#[test]
fn square_of_y_as_two_periods() {
    // k = r = 2 needs n − j ≥ 2; with n = 3, j = 2 the square is a full period
    let table = EmbeddingTable::validated_default(4).unwrap();
    let z = tower_map(&bw("2 1 3 a", 3)).unwrap();
    let form = z.concat(&z).unwrap().concat(&bw("4 3", 4)).unwrap();
    assert!(certify_equal(&y_power(4, 2, 2).unwrap(), &form, &table).unwrap().equal());
    assert!(certify_equal(&lemma_251_form(4, 2, 2).unwrap(), &form, &table).unwrap().equal());

    let table = EmbeddingTable::validated_default(3).unwrap();
    let z = tower_map(&bw("2 1 a", 2)).unwrap();
    let short = z.concat(&z).unwrap().concat(&bw("3 2", 3)).unwrap();
    let v = certify_equal(&y_power(3, 2, 2).unwrap(), &short, &table).unwrap();
    assert_eq!(v.failing_layer(), Some("garside"));
    assert!(!v.coxeter);
    assert!(certify_equal(&y_power(3, 2, 2).unwrap(), &lemma_251_form(3, 2, 2).unwrap(), &table).unwrap().equal());
}

#[test]
fn closed_form_with_two_periods() {
    let table = EmbeddingTable::validated_default(4).unwrap();
    let v = certify_equal(&y_power(4, 2, 7).unwrap(), &lemma_251_form(4, 2, 7).unwrap(), &table).unwrap();
    assert!(v.equal(), "{v:?}");
    assert_eq!(y_power(4, 2, 2).unwrap().len(), 10);
    assert_eq!(y_power(3, 2, 1).unwrap().to_string(), "2 1 3 a");
    assert!(y_power(3, 2, 0).unwrap().is_empty());
}

#[test]
fn decomposition_examples() {
    for n in 2..=4 {
        let ty = affine(n);
        let mut c = descending_run(n, 1);
        c.push(n + 1);
        for m in 1..=3 {
            let x = word_to_element(ty, &c.repeat(m)).unwrap();
            let form = corollary_252_decompose(&x).unwrap();
            assert_eq!(form.variant, Cor252Variant::Plain);
            assert!(form.c.is_empty());
            assert_eq!((form.k, form.tail.is_empty()), (m, true));
        }
    }
    let t = affine(2);
    let x = word_to_element(t, &[1, 3, 2, 1, 3, 2, 1, 3]).unwrap();
    let form = corollary_252_decompose(&x).unwrap();
    assert_eq!((form.variant, form.prefix_run), (Cor252Variant::Prefixed, Some(1)));
    let x = word_to_element(t, &[3]).unwrap();
    let form = corollary_252_decompose(&x).unwrap();
    assert_eq!((form.variant, form.prefix_run, form.k), (Cor252Variant::Prefixed, Some(0), 0));
    let table = EmbeddingTable::validated_default(2).unwrap();
    assert!(certify_equal(&form.realized().unwrap(), &positive_lift(&x).unwrap(), &table).unwrap().equal());
}

#[test]
fn exponent_sums_of_tower_image() {
    let img = tower_map(&bw("a", 2)).unwrap();
    let e = exponent_sums(&img);
    assert_eq!((e.get(4), e.get(3)), (1, 0));
    let e = exponent_sums(&bw("1 2'", 3));
    assert_eq!(e.0, vec![1, -1, 0, 0]);
    assert_eq!(exponent_sums(&bw("1 2 1", 3)).abelianized(), exponent_sums(&bw("2 1 2", 3)).abelianized());
}

#[test]
fn not_fc_elements_are_rejected() {
    let x = word_to_element(affine(2), &[1, 2, 1]).unwrap();
    assert!(!is_fc_element(&x));
    assert!(corollary_252_decompose(&x).is_err());
}
