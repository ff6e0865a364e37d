use std::collections::BTreeSet;

use schubcalc::perm::{all_permutations, count_reduced_words, reduced_words};
use schubcalc::shuffle::{
    monk_rhs, monk_shuffle, monk_unshuffle, pieri_relation, pieri_rhs, pieri_shuffle,
    pieri_unshuffle, MarkedWord, Variant,
};
use schubcalc::{Permutation, Word};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            out.push((1..=n).filter(|p| mask & 1 << (p - 1) != 0).collect());
        }
    }
    out
}

fn target_words(sigmas: impl IntoIterator<Item = Permutation>) -> BTreeSet<Word> {
    sigmas.into_iter().flat_map(|s| reduced_words(&s)).collect()
}

#[test]
fn monk_is_a_bijection_on_s4() {
    for pi in all_permutations(4) {
        for i in 0..=4 {
            let covers = monk_rhs(&pi, i);
            let mut seen = BTreeSet::new();
            for w in reduced_words(&pi) {
                for j in 1..=w.len() + 1 {
                    let out = monk_shuffle(i, &w, j).unwrap();
                    assert!(out.is_reduced());
                    assert_eq!(out.len(), pi.length() + 1);
                    assert!(covers.contains(&out.product()), "{out} for {pi}, i={i}");
                    assert_eq!(monk_unshuffle(i, &pi, &out).unwrap(), (w.clone(), j));
                    assert!(seen.insert(out), "collision for {pi}, i={i}");
                }
            }
            assert_eq!(seen, target_words(covers.clone()));
            let lhs = (pi.length() as u128 + 1) * count_reduced_words(&pi);
            let rhs: u128 = covers.iter().map(count_reduced_words).sum();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn monk_counting_instance() {
    let pi: Permutation = "[321]".parse().unwrap();
    let counts: Vec<u128> = monk_rhs(&pi, 1).iter().map(count_reduced_words).collect();
    assert_eq!(counts.iter().sum::<u128>(), 8);
    let mut sorted = counts.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![2, 3, 3]);
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn check_pieri(variant: Variant) {
    for pi in all_permutations(3) {
        for k in 1..=2 {
            for i in 1..=3 {
                let rhs = pieri_rhs(&pi, i, k, variant);
                let mut seen = BTreeSet::new();
                for w in reduced_words(&pi) {
                    for pos in subsets(w.len() + k, k) {
                        let marked = MarkedWord::with_insertions(&w, &pos).unwrap();
                        let out = pieri_shuffle(i, &marked, variant).unwrap();
                        assert!(out.is_reduced());
                        assert_eq!(out.len(), pi.length() + k);
                        assert!(
                            pieri_relation(&pi, &out.product(), i, k, variant),
                            "{marked} -> {out} for i={i}, k={k}"
                        );
                        assert_eq!(pieri_unshuffle(i, &pi, &out, variant).unwrap(), marked);
                        assert!(seen.insert(out), "collision for {pi}, i={i}, k={k}");
                    }
                }
                assert_eq!(seen, target_words(rhs.clone()), "{pi}, i={i}, k={k}");
                let lhs = binomial(pi.length() as u128 + k as u128, k as u128) * count_reduced_words(&pi);
                let total: u128 = rhs.iter().map(count_reduced_words).sum();
                assert_eq!(lhs, total);
            }
        }
    }
}

#[test]
fn pieri_c_is_a_bijection_on_s3() {
    check_pieri(Variant::C);
}

#[test]
fn pieri_r_is_a_bijection_on_s3() {
    check_pieri(Variant::R);
}

#[test]
fn pieri_with_one_insertion_is_monk() {
    for pi in all_permutations(3) {
        for i in 1..=3 {
            for w in reduced_words(&pi) {
                for j in 1..=w.len() + 1 {
                    let marked = MarkedWord::with_insertions(&w, &[j]).unwrap();
                    let monk = monk_shuffle(i, &w, j).unwrap();
                    for variant in [Variant::C, Variant::R] {
                        assert_eq!(pieri_shuffle(i, &marked, variant).unwrap(), monk);
                        let back = pieri_unshuffle(i, &pi, &monk, variant).unwrap();
                        let (rest, infs) = back.split_infinities();
                        assert_eq!((rest, infs[0]), monk_unshuffle(i, &pi, &monk).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn shuffles_are_back_stable() {
    for pi in all_permutations(3) {
        for i in 1..=3 {
            for w in reduced_words(&pi) {
                for j in 2..=w.len() + 1 {
                    let full = monk_shuffle(i, &w, j).unwrap();
                    let tail = Word::new(w.letters()[1..].to_vec());
                    let short = monk_shuffle(i, &tail, j - 1).unwrap();
                    assert_eq!(&full.letters()[1..], short.letters());
                }
                for k in 1..=2 {
                    for pos in subsets(w.len() + k, k) {
                        let marked = MarkedWord::with_insertions(&w, &pos).unwrap();
                        let tail = MarkedWord {
                            slots: marked.slots[1..].to_vec(),
                        };
                        for variant in [Variant::C, Variant::R] {
                            let full = pieri_shuffle(i, &marked, variant).unwrap();
                            let short = pieri_shuffle(i, &tail, variant).unwrap();
                            assert_eq!(&full.letters()[1..], short.letters());
                        }
                    }
                }
            }
        }
    }
}
