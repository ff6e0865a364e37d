use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::sample::subsequence;

use schubcalc::complexes::subword_complex;
use schubcalc::perm::{compatible_sequences, demazure, inverse_lehmer, lehmer, reduced_words, WiringDiagram};
use schubcalc::pipedreams::{enumerate_pipe_dreams, PipeDream};
use schubcalc::poly::{
    fundamental_quasisym, schubert, schubert_via_words, slide, slide_via_dominance, Monomial, Polynomial,
};
use schubcalc::shapes::{
    dominates, enumerate_tableaux, flatten, glides, is_glide, refines, set_valued_wct, weak_compositions,
    Family, Shape,
};
use schubcalc::shuffle::{monk_shuffle, monk_unshuffle, MarkedWord};
use schubcalc::{Permutation, Word};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as i64).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn word(letters: std::ops::RangeInclusive<i64>, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(letters, len).prop_map(Word::new)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let monomial = prop::collection::vec((-2i64..=3, 1u32..=3), 0..=3).prop_map(Monomial::from_pairs);
    prop::collection::vec((monomial, -5i64..=5), 0..=5).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    })
}

fn composition(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 1..=max)
}

fn weak_composition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=2, 1..=4).prop_filter("small", |c| c.iter().sum::<usize>() <= 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_words_multiply_back(pi in permutation(5)) {
        for w in reduced_words(&pi) {
            prop_assert_eq!(w.product(), pi.clone());
            prop_assert_eq!(w.len(), pi.length());
            prop_assert_eq!(demazure(&w), pi.clone());
        }
    }

    #[test]
    fn lehmer_round_trip(pi in permutation(6)) {
        prop_assert_eq!(inverse_lehmer(&lehmer(&pi).unwrap()), pi);
    }

    #[test]
    fn one_deletion_means_exactly_two(w in word(1..=4, 1..=7)) {
        let reduced: Vec<usize> = (1..=w.len()).filter(|&p| w.without(p).is_reduced()).collect();
        if !w.is_reduced() && !reduced.is_empty() {
            prop_assert_eq!(reduced.len(), 2);
        }
    }

    #[test]
    fn cross_labels_are_inversions(pi in permutation(5)) {
        for w in reduced_words(&pi).into_iter().take(4) {
            let crosses = WiringDiagram::new(&w).factorization();
            let set: BTreeSet<(i64, i64)> = crosses.iter().copied().collect();
            prop_assert_eq!(set.len(), crosses.len());
            prop_assert_eq!(set, pi.inversions().into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn permutation_text_and_json_round_trip(pi in permutation(6), shift in -3i64..=3) {
        let pi = pi.tau_shift(shift);
        prop_assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi.clone());
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), pi);
    }

    #[test]
    fn tau_shift_is_a_group_action(pi in permutation(4), a in -3i64..=3, b in -3i64..=3) {
        prop_assert_eq!(pi.tau_shift(a).tau_shift(b), pi.tau_shift(a + b));
        prop_assert_eq!(pi.tau_shift(a).length(), pi.length());
    }

    #[test]
    fn polynomial_ring_laws(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().iter().all(|(_, c)| **c != 0.into()));
    }

    #[test]
    fn polynomial_text_and_json_round_trip(a in polynomial()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), a);
    }

    #[test]
    fn slide_two_ways(c in weak_composition()) {
        prop_assert_eq!(slide(&c), slide_via_dominance(&c));
    }

    #[test]
    fn slide_with_leading_zeros_is_quasisymmetric(lambda in composition(3), n in 1usize..=3) {
        let mut c = vec![0; n];
        c.extend(&lambda);
        let vars = c.len();
        prop_assert_eq!(slide(&c), fundamental_quasisym(&lambda, vars).unwrap());
    }

    #[test]
    fn fundamental_quasisym_is_quasisymmetric(lambda in composition(3)) {
        let f = fundamental_quasisym(&lambda, 4).unwrap();
        let mut by_exponents: BTreeMap<Vec<u32>, BTreeSet<String>> = BTreeMap::new();
        for (m, c) in f.terms() {
            let exps: Vec<u32> = m.pairs().iter().map(|&(_, e)| e).collect();
            by_exponents.entry(exps).or_default().insert(c.to_string());
        }
        for (exps, coeffs) in by_exponents {
            prop_assert_eq!(coeffs.len(), 1, "exponents {:?}", exps);
        }
    }

    #[test]
    fn composition_tableaux_contents(lambda in composition(3), n in 1usize..=4) {
        let shape = Shape::composition(&lambda).unwrap();
        let size = shape.size();
        let ts = enumerate_tableaux(Family::Ct, &shape, n).unwrap();
        let contents: BTreeSet<Vec<usize>> = ts.iter().map(|t| t.content(n)).collect();
        prop_assert_eq!(contents.len(), ts.len());
        for mu in weak_compositions(size, n) {
            prop_assert_eq!(contents.contains(&mu), refines(&flatten(&mu), &lambda), "{:?}", mu);
        }
    }

    #[test]
    fn weak_composition_tableaux_contents(c in weak_composition()) {
        let n = c.len();
        let ts = enumerate_tableaux(Family::Wct, &Shape::weak_composition(&c), n).unwrap();
        let contents: BTreeSet<Vec<usize>> = ts.iter().map(|t| t.content(n)).collect();
        prop_assert_eq!(contents.len(), ts.len());
        for mu in weak_compositions(c.iter().sum(), n) {
            let expected = refines(&flatten(&mu), &flatten(&c)) && dominates(&mu, &c);
            prop_assert_eq!(contents.contains(&mu), expected, "{:?}", mu);
        }
    }

    #[test]
    fn glides_match_set_valued_tableaux(c in weak_composition()) {
        let n = c.len();
        let brute: BTreeSet<_> = set_valued_wct(&c).iter().map(|t| t.kontent(n)).collect();
        let listed: BTreeSet<_> = glides(&c).into_iter().collect();
        prop_assert_eq!(&brute, &listed);
        prop_assert!(listed.iter().all(|k| is_glide(k, &c)));
    }

    #[test]
    fn pipe_dream_reading_word_round_trip(cells in subsequence(
        (1..=5usize).flat_map(|r| (1..=5 - r).map(move |c| (r, c))).collect::<Vec<_>>(), 0..=6)) {
        let p = PipeDream::new(5, cells).unwrap();
        let back = PipeDream::from_word_and_rows(&p.reading_word(), &p.rows(), 5).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn schubert_two_ways(pi in permutation(5)) {
        prop_assert_eq!(schubert(&pi).unwrap(), schubert_via_words(&pi).unwrap());
    }

    #[test]
    fn one_quasi_yamanouchi_pipe_dream_per_word(pi in permutation(4)) {
        let pds = enumerate_pipe_dreams(&pi, true, None).unwrap();
        for w in reduced_words(&pi) {
            let qy = pds.iter().filter(|p| p.reading_word() == w && p.is_quasi_yamanouchi()).count();
            let expected = usize::from(!compatible_sequences(&w, 1).is_empty());
            prop_assert_eq!(qy, expected, "{}", w);
        }
    }

    #[test]
    fn subword_complexes_are_pure_vertex_decomposable(q in word(1..=3, 0..=8), pick in any::<prop::sample::Index>()) {
        let n = q.len();
        let candidates: Vec<Word> = (0u32..1 << n)
            .map(|m| Word::new((0..n).filter(|p| m & 1 << p != 0).map(|p| q.letters()[p]).collect()))
            .filter(Word::is_reduced)
            .collect();
        let pi = pick.get(&candidates).product();
        let d = subword_complex(&q, &pi).unwrap();
        prop_assert!(d.is_pure());
        prop_assert_eq!(d.dimension(), Some(n as i64 - pi.length() as i64 - 1));
        prop_assert!(d.is_vertex_decomposable());
        prop_assert!(d.ridge_counts().values().all(|&c| c <= 2));
    }

    #[test]
    fn monk_shuffle_round_trip_in_s5(pi in permutation(5), i in 0i64..=5, pick in any::<prop::sample::Index>()) {
        let words = reduced_words(&pi);
        let w = pick.get(&words).clone();
        for j in 1..=w.len() + 1 {
            let out = monk_shuffle(i, &w, j).unwrap();
            prop_assert!(out.is_reduced());
            prop_assert_eq!(out.len(), w.len() + 1);
            prop_assert_eq!(monk_unshuffle(i, &pi, &out).unwrap(), (w.clone(), j));
        }
    }

    #[test]
    fn marked_word_text_round_trip(w in word(1..=9, 0..=5), extra in 1usize..=2) {
        let positions: Vec<usize> = (1..=extra).map(|k| k * 2 - 1).filter(|&p| p <= w.len() + extra).collect();
        let marked = MarkedWord::with_insertions(&w, &positions).unwrap();
        prop_assert_eq!(marked.to_string().parse::<MarkedWord>().unwrap(), marked.clone());
        let json = serde_json::to_string(&marked).unwrap();
        prop_assert_eq!(serde_json::from_str::<MarkedWord>(&json).unwrap(), marked);
    }
}
