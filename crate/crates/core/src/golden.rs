//! Worked examples with known answers, shared by the `selftest` command and
//! the acceptance suite.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::complexes::{
    is_backwards_saturated, slide_complex, subword_complex, tableau_complex, Classification,
    SimplicialComplex, TableauComplexSpec,
};
use crate::perm::{compatible_sequences, count_reduced_words, demazure, reduced_words, WiringDiagram};
use crate::pipedreams::{enumerate_pipe_dreams, qy_pipe_dream_for_word, PipeDream};
use crate::poly::{fundamental_quasisym, schubert, schur, slide, slide_of_word, Monomial, Polynomial};
use crate::shapes::{
    classify_set_valued, enumerate_tableaux, is_glide, Family, Komposition, SetValuedClass,
    SetValuedTableau, Shape, Tableau,
};
use crate::shuffle::{monk_rhs, monk_shuffle, monk_unshuffle};
use crate::{Permutation, Word};

pub type Check = std::result::Result<(), String>;

/// A named example and the function that verifies it.
pub struct GoldenCase {
    pub name: &'static str,
    pub run: fn() -> Check,
}

fn expect<T: PartialEq + Debug>(got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn p(s: &str) -> Permutation {
    s.parse().expect("valid permutation literal")
}

fn w(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

fn poly(s: &str) -> Polynomial {
    Polynomial::parse(s).expect("valid polynomial literal")
}

fn words(list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| w(s)).collect()
}

fn rw(pi: &str) -> BTreeSet<Word> {
    reduced_words(&p(pi)).into_iter().collect()
}

fn kompo(s: &str) -> Komposition {
    s.parse().expect("valid komposition literal")
}

fn product_of_3212() -> Check {
    expect(w("3212").product(), p("[4213]"))
}

fn reduced_words_1432() -> Check {
    expect(rw("[1432]"), words(&["232", "323"]))
}

fn reduced_words_4213() -> Check {
    expect(rw("[4213]"), words(&["1321", "3121", "3212"]))
}

fn reduced_words_sigma1() -> Check {
    expect(rw("tau^-1[3412]"), words(&["1,0,2,1", "1,2,0,1"]))
}

fn reduced_words_sigma2() -> Check {
    expect(rw("tau^-1[2431]"), words(&["0,1,2,1", "0,2,1,2", "2,0,1,2"]))
}

fn demazure_of_reading_word() -> Check {
    expect(demazure(&w("53153243")), p("[246135]"))
}

fn factorization_of_3212() -> Check {
    expect(WiringDiagram::new(&w("3212")).factorization(), vec![(2, 3), (1, 3), (1, 2), (1, 4)])
}

fn compatible_sequences_21434() -> Check {
    let got: Vec<String> = compatible_sequences(&w("21434"), 1)
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
    expect(got, vec!["11223".to_string(), "11224".into(), "11234".into(), "11334".into()])
}

fn tau_of_321() -> Check {
    expect(p("[321]").tau_shift(1), p("[1432]"))
}

fn tableau_counts() -> Check {
    let ssyt = enumerate_tableaux(Family::Ssyt, &Shape::partition(&[2, 1]).map_err(err)?, 3).map_err(err)?;
    let ct = enumerate_tableaux(Family::Ct, &Shape::composition(&[1, 2, 1]).map_err(err)?, 4).map_err(err)?;
    let wct = enumerate_tableaux(Family::Wct, &Shape::weak_composition(&[3, 0, 2, 2]), 4).map_err(err)?;
    expect((ssyt.len(), ct.len(), wct.len()), (8, 5, 5))
}

fn kontents() -> Check {
    let a = SetValuedTableau::from_vecs(vec![vec![], vec![vec![1, 2]], vec![vec![3]]]);
    let b = SetValuedTableau::from_vecs(vec![vec![], vec![vec![1]], vec![vec![2, 3]]]);
    expect((a.kontent(3), b.kontent(3)), (kompo("(1,1*,1)"), kompo("(1,1,1*)")))
}

fn glide_membership() -> Check {
    let lambda = [0, 1, 0, 0, 0, 3];
    expect(
        (
            is_glide(&kompo("(1,0,1,0,1*,3*)"), &lambda),
            is_glide(&kompo("(1,1*,0,2,0,2*)"), &lambda),
            is_glide(&kompo("(0,1,1*,1,2,0)"), &lambda),
        ),
        (true, true, false),
    )
}

fn set_valued_figure() -> Check {
    let ssyt = SetValuedTableau::from_vecs(vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]);
    let limit = SetValuedTableau::from_vecs(vec![vec![vec![1, 2]], vec![vec![2]]]);
    expect(
        (
            classify_set_valued(&ssyt, Family::Ssyt, 3),
            classify_set_valued(&limit, Family::Ssyt, 3),
        ),
        (SetValuedClass::SetValued, SetValuedClass::LimitSetValued),
    )
}

fn pipe_dreams_of_246135() -> Check {
    let rows = [1, 1, 2, 2, 3, 3];
    let a = PipeDream::from_word_and_rows(&w("315243"), &rows, 6).map_err(err)?;
    let b = PipeDream::from_word_and_rows(&w("513243"), &rows, 6).map_err(err)?;
    let c = PipeDream::from_word_and_rows(&w("53153243"), &[1, 1, 1, 2, 2, 2, 3, 3], 6).map_err(err)?;
    expect(
        (a.permutation(), b.permutation(), c.permutation(), a.rows()),
        (p("[246135]"), p("[246135]"), p("[246135]"), rows.to_vec()),
    )
}

fn pipe_dream_count_1432() -> Check {
    expect(enumerate_pipe_dreams(&p("[1432]"), true, None).map_err(err)?.len(), 5)
}

fn schubert_321() -> Check {
    expect(schubert(&p("[321]")).map_err(err)?, poly("x_1^2*x_2"))
}

fn schubert_1432() -> Check {
    expect(
        schubert(&p("[1432]")).map_err(err)?,
        poly("x_2^2*x_3 + x_1*x_2*x_3 + x_1^2*x_3 + x_1^2*x_2 + x_1*x_2^2"),
    )
}

fn schur_21() -> Check {
    let s = schur(&[2, 1], 3).map_err(err)?;
    let total: num_bigint::BigInt = s.terms().into_iter().map(|(_, c)| c.clone()).sum();
    expect(total, 8.into())
}

fn quasisymmetric_121() -> Check {
    expect(
        fundamental_quasisym(&[1, 2, 1], 4).map_err(err)?,
        poly("x_1*x_2^2*x_3 + x_1*x_2^2*x_4 + x_1*x_2*x_3*x_4 + x_1*x_3^2*x_4 + x_2*x_3^2*x_4"),
    )
}

fn slide_3022() -> Check {
    expect(
        slide(&[3, 0, 2, 2]),
        poly("x_1^3*x_2^2*x_3^2 + x_1^3*x_2^2*x_3*x_4 + x_1^3*x_2^2*x_4^2 + x_1^3*x_2*x_3*x_4^2 + x_1^3*x_3^2*x_4^2"),
    )
}

fn slide_101() -> Check {
    expect(slide(&[1, 0, 1]), poly("x_1*x_2 + x_1*x_3"))
}

fn slides_of_words() -> Check {
    expect(
        (slide_of_word(&w("21")), slide_of_word(&w("31")), slide_of_word(&w("315243")), slide_of_word(&w("513243"))),
        (poly("x_1^2"), poly("x_1^2"), poly("x_1^2*x_2^2*x_3^2"), poly("x_1^2*x_2^2*x_3^2")),
    )
}

fn deletion_and_link() -> Check {
    let d = SimplicialComplex::new(&[1, 2, 3, 4, 5, 6], &[vec![1, 2, 3, 4], vec![1, 6], vec![3, 4, 5]]).map_err(err)?;
    expect(
        (d.deletion(&[1]).map_err(err)?.facets(), d.link(&[1]).map_err(err)?.facets()),
        (vec![vec![2, 3, 4], vec![3, 4, 5], vec![6]], vec![vec![2, 3, 4], vec![6]]),
    )
}

fn vertex_decomposability() -> Check {
    let simplex = SimplicialComplex::simplex(&[1, 2, 3, 4]).map_err(err)?;
    let bowtie = SimplicialComplex::new(&[], &[vec![1, 2, 3], vec![3, 4, 5]]).map_err(err)?;
    expect(
        (simplex.is_vertex_decomposable(), bowtie.is_pure(), bowtie.is_vertex_decomposable()),
        (true, true, false),
    )
}

fn syt_complex_is_neither() -> Check {
    let tc = tableau_complex(&TableauComplexSpec {
        family: Family::Syt,
        shape: Shape::partition(&[2, 1]).map_err(err)?,
        n: 3,
        ambient: None,
    })
    .map_err(err)?;
    expect(tc.complex.classify(), Classification::Neither)
}

fn subword_complex_facets() -> Check {
    let d = subword_complex(&w("321323"), &p("[1432]")).map_err(err)?;
    let got: BTreeSet<Vec<usize>> = d.facets().into_iter().collect();
    let want: BTreeSet<Vec<usize>> =
        [vec![1, 3, 6], vec![3, 5, 6], vec![3, 4, 5], vec![2, 3, 4], vec![1, 2, 3]].into_iter().collect();
    expect(got, want)
}

fn slide_complex_323() -> Check {
    let q = w("321323");
    let mut want = subword_complex(&q, &p("[1432]")).map_err(err)?.facets();
    want.retain(|f| f != &vec![1, 3, 6]);
    let s232 = slide_complex(&q, &w("232")).map_err(err)?.facets();
    expect((slide_complex(&q, &w("323")).map_err(err)?.facets(), s232), (want, vec![vec![1, 3, 6]]))
}

fn backwards_saturated_examples() -> Check {
    let ws: Vec<Word> = ["1434", "4134", "4314", "4341"].iter().map(|s| w(s)).collect();
    let all = reduced_words(&p("[4213]"));
    expect(
        (
            is_backwards_saturated(&ws).map_err(err)?,
            is_backwards_saturated(&[w("3212")]).map_err(err)?,
            is_backwards_saturated(&all).map_err(err)?,
        ),
        (true, true, true),
    )
}

fn ssyt_column_complex() -> Check {
    let tc = tableau_complex(&TableauComplexSpec {
        family: Family::Ssyt,
        shape: Shape::partition(&[1, 1, 1]).map_err(err)?,
        n: 4,
        ambient: None,
    })
    .map_err(err)?;
    expect(tc.complex.num_facets(), 4)
}

/// Cells `(row, col)` of the triangular word `321323` by position.
const CELLS_321323: [(usize, usize); 6] = [(1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (3, 1)];

fn stanley_reisner_1432() -> Check {
    let d = subword_complex(&w("321323"), &p("[1432]")).map_err(err)?;
    let gens = d.stanley_reisner_generators();
    let want = vec![vec![1, 4], vec![1, 5], vec![2, 5], vec![2, 6], vec![4, 6]];
    expect(&gens, &want)?;
    let primes: BTreeSet<BTreeSet<(usize, usize)>> = d
        .facets()
        .iter()
        .map(|f| (1..=6).filter(|v| !f.contains(v)).map(|v| CELLS_321323[v - 1]).collect())
        .collect();
    let pds: BTreeSet<BTreeSet<(usize, usize)>> = enumerate_pipe_dreams(&p("[1432]"), true, None)
        .map_err(err)?
        .into_iter()
        .map(|pd| pd.crosses().clone())
        .collect();
    expect(primes, pds)
}

fn monk_run() -> Check {
    expect(monk_shuffle(3, &w("323432"), 5).map_err(err)?, w("1232432"))
}

const MONK_TABLE: [(&str, usize, &str); 8] = [
    ("121", 1, "3121"),
    ("121", 2, "1321"),
    ("121", 3, "1021"),
    ("121", 4, "1201"),
    ("212", 1, "3212"),
    ("212", 2, "0,2,1,2"),
    ("212", 3, "2012"),
    ("212", 4, "0,1,2,1"),
];

fn monk_table() -> Check {
    let pi = p("[321]");
    for (word, j, out) in MONK_TABLE {
        let got = monk_shuffle(1, &w(word), j).map_err(err)?;
        expect(&got, &w(out)).map_err(|e| format!("{word} at {j}: {e}"))?;
        expect(monk_unshuffle(1, &pi, &got).map_err(err)?, (w(word), j))?;
    }
    Ok(())
}

fn monk_covers_of_321() -> Check {
    let got: BTreeSet<Permutation> = monk_rhs(&p("[321]"), 1).into_iter().collect();
    let want: BTreeSet<Permutation> = [p("[4213]"), p("tau^-1[3412]"), p("tau^-1[2431]")].into_iter().collect();
    expect(&got, &want)?;
    let mut counts: Vec<u128> = got.iter().map(count_reduced_words).collect();
    counts.sort_unstable();
    expect((counts.iter().sum::<u128>(), counts), (8, vec![2, 3, 3]))
}

fn slide_product_disagreement() -> Check {
    let rectified: Vec<Word> = (1..=4)
        .map(|j| monk_shuffle(2, &w("232"), j))
        .collect::<crate::Result<_>>()
        .map_err(err)?;
    expect(rectified.clone(), vec![w("4232"), w("2432"), w("2132"), w("2312")])?;
    let monomials: Vec<Option<Monomial>> = rectified
        .iter()
        .map(|r| qy_pipe_dream_for_word(r).map(|pd| Monomial::from_exponents(&pd.weight())))
        .collect();
    expect(
        monomials,
        vec![
            Some(Monomial::from_exponents(&[2, 2])),
            Some(Monomial::from_exponents(&[1, 3])),
            Some(Monomial::from_exponents(&[2, 2])),
            None,
        ],
    )?;
    expect(&slide_of_word(&w("232")) * &slide_of_word(&w("2")), poly("x_1^2*x_2^2 + x_1*x_2^3"))
}

fn standardization_example() -> Check {
    let t = Tableau::new(vec![vec![1, 1, 2], vec![2, 3]]);
    expect(crate::shapes::standardize(&t), Tableau::new(vec![vec![1, 2, 4], vec![3, 5]]))
}

/// Every golden example, in a fixed order.
pub fn corpus() -> Vec<GoldenCase> {
    macro_rules! cases {
        ($($f:ident),* $(,)?) => { vec![$(GoldenCase { name: stringify!($f), run: $f }),*] };
    }
    cases![
        product_of_3212,
        reduced_words_1432,
        reduced_words_4213,
        reduced_words_sigma1,
        reduced_words_sigma2,
        demazure_of_reading_word,
        factorization_of_3212,
        compatible_sequences_21434,
        tau_of_321,
        tableau_counts,
        kontents,
        glide_membership,
        set_valued_figure,
        standardization_example,
        pipe_dreams_of_246135,
        pipe_dream_count_1432,
        schubert_321,
        schubert_1432,
        schur_21,
        quasisymmetric_121,
        slide_3022,
        slide_101,
        slides_of_words,
        deletion_and_link,
        vertex_decomposability,
        syt_complex_is_neither,
        subword_complex_facets,
        slide_complex_323,
        backwards_saturated_examples,
        ssyt_column_complex,
        stanley_reisner_1432,
        monk_run,
        monk_table,
        monk_covers_of_321,
        slide_product_disagreement,
    ]
}

/// Runs the corpus, returning each name with its outcome.
pub fn run_all() -> Vec<(&'static str, Check)> {
    corpus().into_iter().map(|c| (c.name, (c.run)())).collect()
}
