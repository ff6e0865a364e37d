//! Sparse polynomials with integer coefficients in variables `x_i`, `i ∈ ℤ`,
//! and the Schubert, Grothendieck, Schur, quasisymmetric, slide and glide
//! families.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{compatible_sequences, reduced_words, Permutation, Word};
use crate::pipedreams::{
    all_pipe_dreams, minimal_ambient, qy_pipe_dream_for_word, reduced_pipe_dreams, PipeDream,
};
use crate::shapes::{
    comp_to_set, descent_set, dominates, enumerate_tableaux, flatten, glides, refines,
    set_valued_wct, set_to_comp, weak_compositions, Family, Shape, Tableau,
};

/// A monomial as sorted `(index, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(i64, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: i64) -> Self {
        Monomial(vec![(i, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u32)>) -> Self {
        let mut map: BTreeMap<i64, u32> = BTreeMap::new();
        for (i, e) in pairs {
            *map.entry(i).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// `x_1^{c_1} x_2^{c_2} ⋯`.
    pub fn from_exponents(c: &[usize]) -> Self {
        Self::from_pairs(c.iter().enumerate().map(|(k, &e)| (k as i64 + 1, e as u32)))
    }

    /// `∏ x_{s_k}`.
    pub fn from_indices(s: &[i64]) -> Self {
        Self::from_pairs(s.iter().map(|&i| (i, 1)))
    }

    pub fn pairs(&self) -> &[(i64, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, i: i64) -> u32 {
        self.0
            .binary_search_by_key(&i, |p| p.0)
            .map_or(0, |k| self.0[k].1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(&other.0).copied())
    }

    /// Graded order, ties broken lexicographically with `x_i > x_j` for `i < j`.
    pub fn graded_lex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&&(i, e)), Some(&&(j, f))) => {
                        if i != j {
                            return if i < j { Ordering::Greater } else { Ordering::Less };
                        }
                        if e != f {
                            return e.cmp(&f);
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(i, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x_{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(i: i64) -> Self {
        Self::from_monomial(Monomial::var(i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, BigInt::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in printing order: descending graded lexicographic.
    pub fn terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| b.0.graded_lex_cmp(a.0));
        t
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous part of lowest degree.
    pub fn lowest_degree_part(&self) -> Polynomial {
        self.min_degree()
            .map_or_else(Polynomial::zero, |d| self.homogeneous_part(d))
    }

    /// Swaps the variables `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let swapped = Monomial::from_pairs(m.0.iter().map(|&(j, e)| {
                let j = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                (j, e)
            }));
            out.add_term(swapped, c.clone());
        }
        out
    }

    /// Sets `x_i = 0` for every `i < lower_bound`.
    pub fn truncate_below(&self, lower_bound: i64) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.first().is_none_or(|&(i, _)| i >= lower_bound))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Parses the text printed by `Display`.
    pub fn parse(s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Polynomial::zero());
        }
        let mut out = Polynomial::zero();
        let mut rest = compact.as_str();
        let mut offset = 0;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if offset == 0 => (1, rest),
                _ => return Err(Error::parse(s, offset, "expected '+' or '-'")),
            };
            // a term ends at the next sign that does not follow "x_"
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for k in 1..bytes.len() {
                if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'_' {
                    end = k;
                    break;
                }
            }
            let term = &body[..end];
            let mut coeff = BigInt::from(sign);
            let mut pairs = Vec::new();
            for factor in term.split('*') {
                if let Some(v) = factor.strip_prefix("x_") {
                    let (idx, exp) = match v.split_once('^') {
                        Some((a, b)) => (a, b),
                        None => (v, "1"),
                    };
                    let i: i64 = idx
                        .parse()
                        .map_err(|_| Error::parse(s, offset, "bad variable index"))?;
                    let e: u32 = exp
                        .parse()
                        .map_err(|_| Error::parse(s, offset, "bad exponent"))?;
                    pairs.push((i, e));
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::parse(s, offset, "bad coefficient"))?;
                    coeff *= c;
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
            let consumed = rest.len() - body.len() + end;
            offset += consumed;
            rest = &rest[consumed..];
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut out = Polynomial::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: BTreeMap<String, u32>,
    coeff: JsonCoeff,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms()
            .into_iter()
            .map(|(m, c)| JsonTerm {
                exponents: m.0.iter().map(|&(i, e)| (i.to_string(), e)).collect(),
                coeff: match c.to_i64() {
                    Some(v) => JsonCoeff::Small(v),
                    None => JsonCoeff::Big(c.to_string()),
                },
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = Polynomial::zero();
        for t in terms {
            let pairs = t
                .exponents
                .iter()
                .map(|(i, &e)| i.parse::<i64>().map(|i| (i, e)))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            let c = match t.coeff {
                JsonCoeff::Small(v) => BigInt::from(v),
                JsonCoeff::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

fn weight_monomial(p: &PipeDream) -> Monomial {
    Monomial::from_exponents(&p.weight())
}

fn sign(excess: usize) -> BigInt {
    if excess.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `𝔖_π = Σ_{P ∈ PD(π)} x^P`.
pub fn schubert(pi: &Permutation) -> Result<Polynomial> {
    let n = minimal_ambient(pi)?;
    Ok(reduced_pipe_dreams(pi, n)?
        .iter()
        .map(|p| Polynomial::from_monomial(weight_monomial(p)))
        .sum())
}

/// `𝔖_π` as a sum over reduced words and positive compatible sequences.
pub fn schubert_via_words(pi: &Permutation) -> Result<Polynomial> {
    minimal_ambient(pi)?;
    Ok(backstable_truncate(pi, 1))
}

/// `Σ_{w ∈ RW(π)} Σ_{s ≤ w, s ≥ L} x^s`: the back-stable Schubert series
/// with `x_i = 0` for `i < L`.
pub fn backstable_truncate(pi: &Permutation, lower_bound: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for w in reduced_words(pi) {
        for s in compatible_sequences(&w, lower_bound) {
            out.add_term(Monomial::from_indices(&s), BigInt::one());
        }
    }
    out
}

/// `𝔊_π = Σ_P (−1)^{excess P} x^P` over all pipe dreams for `π`.
pub fn grothendieck(pi: &Permutation) -> Result<Polynomial> {
    let n = minimal_ambient(pi)?;
    let mut out = Polynomial::zero();
    for p in all_pipe_dreams(pi, n, None)? {
        out.add_term(weight_monomial(&p), sign(p.excess()));
    }
    Ok(out)
}

fn tableau_sum(ts: &[Tableau], n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in ts {
        out.add_term(Monomial::from_exponents(&t.content(n)), BigInt::one());
    }
    out
}

/// `s_λ(x_1, …, x_n)`, the generating function of `SSYT_n(λ)`.
pub fn schur(lambda: &[usize], n: usize) -> Result<Polynomial> {
    let shape = Shape::partition(lambda)?;
    Ok(tableau_sum(&enumerate_tableaux(Family::Ssyt, &shape, n)?, n))
}

/// `F_λ(x_1, …, x_n)`, the generating function of `CT_n(λ)`.
pub fn fundamental_quasisym(lambda: &[usize], n: usize) -> Result<Polynomial> {
    let shape = Shape::composition(lambda)?;
    Ok(tableau_sum(&enumerate_tableaux(Family::Ct, &shape, n)?, n))
}

/// `F_λ` as a sum over sequences `i_1 ≤ ⋯ ≤ i_k` strict at the positions in
/// the descent set of `λ`.
pub fn fundamental_quasisym_via_sequences(lambda: &[usize], n: usize) -> Result<Polynomial> {
    Shape::composition(lambda)?;
    let k: usize = lambda.iter().sum();
    let strict = comp_to_set(lambda);
    let mut out = Polynomial::zero();
    fn go(
        k: usize,
        n: i64,
        strict: &std::collections::BTreeSet<usize>,
        seq: &mut Vec<i64>,
        out: &mut Polynomial,
    ) {
        if seq.len() == k {
            out.add_term(Monomial::from_indices(seq), BigInt::one());
            return;
        }
        let lo = match seq.last() {
            None => 1,
            Some(&last) if strict.contains(&seq.len()) => last + 1,
            Some(&last) => last,
        };
        for v in lo..=n {
            seq.push(v);
            go(k, n, strict, seq, out);
            seq.pop();
        }
    }
    go(k, n as i64, &strict, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `𝔉_λ`, the generating function of `WCT(λ)`.
pub fn slide(lambda: &[usize]) -> Polynomial {
    let shape = Shape::weak_composition(lambda);
    let n = lambda.len();
    tableau_sum(
        &enumerate_tableaux(Family::Wct, &shape, n).expect("weak compositions are always valid"),
        n,
    )
}

/// `𝔉_c = Σ x^d` over `d` dominating `c` with `flat(d)` refining `flat(c)`.
pub fn slide_via_dominance(c: &[usize]) -> Polynomial {
    let size: usize = c.iter().sum();
    let fc = flatten(c);
    let mut out = Polynomial::zero();
    for d in weak_compositions(size, c.len()) {
        if dominates(&d, c) && refines(&flatten(&d), &fc) {
            out.add_term(Monomial::from_exponents(&d), BigInt::one());
        }
    }
    out
}

/// `𝔉_w = 𝔉_{wt(P)}` for the quasi-Yamanouchi pipe dream `P` with reading
/// word `w`, or `0` if there is none.
pub fn slide_of_word(w: &Word) -> Polynomial {
    qy_pipe_dream_for_word(w).map_or_else(Polynomial::zero, |p| slide(&p.weight()))
}

/// Glide polynomial for a word, defined like [`slide_of_word`].
pub fn glide_of_word(w: &Word) -> Polynomial {
    qy_pipe_dream_for_word(w).map_or_else(Polynomial::zero, |p| glide(&p.weight()))
}

/// `Σ_T (−1)^{|T| − |λ|} x^T` over set-valued weak composition tableaux.
pub fn glide(lambda: &[usize]) -> Polynomial {
    let n = lambda.len();
    let size: usize = lambda.iter().sum();
    let mut out = Polynomial::zero();
    for t in set_valued_wct(lambda) {
        out.add_term(Monomial::from_exponents(&t.content(n)), sign(t.size() - size));
    }
    out
}

/// `Σ (−1)^{excess d} x^d` over the glides `d` of `c`.
pub fn glide_via_kompositions(c: &[usize]) -> Polynomial {
    let mut out = Polynomial::zero();
    for k in glides(c) {
        out.add_term(Monomial::from_exponents(k.parts()), sign(k.excess()));
    }
    out
}

/// `𝔖_π = Σ_{w ∈ RW(π)} 𝔉_w`, keyed by reduced word.
pub fn expand_schubert_into_slides(pi: &Permutation) -> Result<Vec<(Word, Polynomial)>> {
    minimal_ambient(pi)?;
    Ok(reduced_words(pi)
        .into_iter()
        .map(|w| {
            let s = slide_of_word(&w);
            (w, s)
        })
        .collect())
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{comp(Des T)}`, keyed by standard tableau.
pub fn expand_schur_into_f(lambda: &[usize], n: usize) -> Result<Vec<(Tableau, Polynomial)>> {
    let shape = Shape::partition(lambda)?;
    let size = shape.size();
    enumerate_tableaux(Family::Syt, &shape, size)?
        .into_iter()
        .map(|t| {
            let comp = set_to_comp(&descent_set(&t), size);
            let f = fundamental_quasisym(&comp, n)?;
            Ok((t, f))
        })
        .collect()
}

/// One term `(−1)^{excess P} 𝒢_{wt(P)}` of the glide expansion of `𝔊_π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlideTerm {
    pub pipe_dream: PipeDream,
    pub sign: i32,
    pub glide: Polynomial,
}

/// `𝔊_π = Σ_P (−1)^{excess P} 𝒢_{wt(P)}` over quasi-Yamanouchi pipe dreams.
pub fn expand_grothendieck_into_glides(pi: &Permutation) -> Result<Vec<GlideTerm>> {
    let n = minimal_ambient(pi)?;
    Ok(all_pipe_dreams(pi, n, None)?
        .into_iter()
        .filter(PipeDream::is_quasi_yamanouchi)
        .map(|p| GlideTerm {
            sign: if p.excess() % 2 == 0 { 1 } else { -1 },
            glide: glide(&p.weight()),
            pipe_dream: p,
        })
        .collect())
}

/// `Σ sign · glide` of an expansion.
pub fn sum_glide_terms(terms: &[GlideTerm]) -> Polynomial {
    terms
        .iter()
        .map(|t| t.glide.scale(&BigInt::from(t.sign)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = poly("x_1 + 2*x_2^3 - x_-1*x_0");
        assert_eq!(&a + &Polynomial::zero(), a);
        assert_eq!(&Polynomial::var(1) * &Polynomial::var(2), poly("x_1*x_2"));
        assert!((&a - &a).is_zero());
        assert_eq!(poly(&a.to_string()), a);
        assert_eq!(poly("0"), Polynomial::zero());
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(poly("x_1^2*x_2 + x_1*x_2^2").to_string(), "x_1^2*x_2 + x_1*x_2^2");
    }

    #[test]
    fn json_round_trip() {
        let big = BigInt::from(i64::MAX) * 4;
        let mut a = poly("3*x_-2 - x_1^2 + 1");
        a.add_term(Monomial::var(7), big);
        let json = serde_json::to_string(&a).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&p("[321]")).unwrap(), poly("x_1^2*x_2"));
        assert_eq!(
            schubert(&p("[1432]")).unwrap(),
            poly("x_2^2*x_3 + x_1*x_2*x_3 + x_1^2*x_3 + x_1^2*x_2 + x_1*x_2^2")
        );
        assert_eq!(schubert(&Permutation::identity()).unwrap(), Polynomial::one());
        assert_eq!(schubert_via_words(&p("[1432]")).unwrap(), schubert(&p("[1432]")).unwrap());
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck(&Permutation::identity()).unwrap(), Polynomial::one());
        assert_eq!(grothendieck(&p("[21]")).unwrap(), poly("x_1"));
        assert_eq!(
            grothendieck(&p("[132]")).unwrap(),
            poly("x_1 + x_2 - x_1*x_2")
        );
    }

    #[test]
    fn schur_and_quasisymmetric() {
        assert_eq!(schur(&[1], 2).unwrap(), poly("x_1 + x_2"));
        // eight tableaux, two of them with content (1,1,1)
        let s21 = schur(&[2, 1], 3).unwrap();
        assert_eq!(s21.num_terms(), 7);
        assert_eq!(s21.coefficient(&Monomial::from_exponents(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(
            fundamental_quasisym(&[1, 2, 1], 4).unwrap(),
            poly("x_1*x_2^2*x_3 + x_1*x_2^2*x_4 + x_1*x_2*x_3*x_4 + x_1*x_3^2*x_4 + x_2*x_3^2*x_4")
        );
        assert_eq!(fundamental_quasisym(&[3], 1).unwrap(), poly("x_1^3"));
        assert_eq!(
            fundamental_quasisym_via_sequences(&[1, 2, 1], 4).unwrap(),
            fundamental_quasisym(&[1, 2, 1], 4).unwrap()
        );
    }

    #[test]
    fn slide_examples() {
        assert_eq!(
            slide(&[3, 0, 2, 2]),
            poly("x_1^3*x_2^2*x_3^2 + x_1^3*x_2^2*x_3*x_4 + x_1^3*x_2^2*x_4^2 + x_1^3*x_2*x_3*x_4^2 + x_1^3*x_3^2*x_4^2")
        );
        assert_eq!(slide(&[1, 0, 1]), poly("x_1*x_2 + x_1*x_3"));
        assert_eq!(slide_of_word(&"21".parse().unwrap()), poly("x_1^2"));
        assert_eq!(slide_of_word(&"31".parse().unwrap()), poly("x_1^2"));
        assert_eq!(slide_via_dominance(&[3, 0, 2, 2]), slide(&[3, 0, 2, 2]));
    }

    #[test]
    fn glide_examples() {
        assert_eq!(glide(&[3]), poly("x_1^3"));
        assert_eq!(glide(&[0, 1, 1]), glide_via_kompositions(&[0, 1, 1]));
        assert_eq!(glide(&[0, 1, 1]).lowest_degree_part(), slide(&[0, 1, 1]));
        assert_eq!(
            glide(&[0, 1, 1]),
            poly("x_1*x_2 + x_1*x_3 + x_2*x_3 - 2*x_1*x_2*x_3")
        );
    }

    #[test]
    fn backstable_examples() {
        assert_eq!(backstable_truncate(&p("[21]"), 0), poly("x_0 + x_1"));
        assert_eq!(backstable_truncate(&Permutation::identity(), -3), Polynomial::one());
        assert_eq!(backstable_truncate(&p("[1432]"), 1), schubert(&p("[1432]")).unwrap());
    }

    #[test]
    fn expansions() {
        let e = expand_schubert_into_slides(&p("[1432]")).unwrap();
        let as_strings: Vec<(String, Polynomial)> =
            e.iter().map(|(w, s)| (w.to_string(), s.clone())).collect();
        assert_eq!(
            as_strings,
            vec![("232".into(), slide(&[1, 2, 0])), ("323".into(), slide(&[0, 2, 1]))]
        );
        let total: Polynomial = e.into_iter().map(|(_, s)| s).sum();
        assert_eq!(total, schubert(&p("[1432]")).unwrap());
        let sf = expand_schur_into_f(&[2, 1], 3).unwrap();
        let total: Polynomial = sf.iter().map(|(_, f)| f.clone()).sum();
        assert_eq!(total, schur(&[2, 1], 3).unwrap());
        let g = expand_grothendieck_into_glides(&p("[21]")).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(sum_glide_terms(&g), poly("x_1"));
    }
}
