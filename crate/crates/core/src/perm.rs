//! Permutations of the integers with finite support, words in the simple
//! transpositions, wiring diagrams and compatible sequences.
//!
//! A single [`Permutation`] type covers `S_n`, `S_∞` and `S_ℤ`: it stores the
//! images on the smallest integer interval outside of which it is the
//! identity.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of a word, i.e. the index `i` of a simple transposition `s_i`.
pub type Letter = i64;

/// A permutation of ℤ fixing all but finitely many integers.
///
/// `images[k]` is the image of `lo + k`. The window is trimmed so that its
/// first and last points are not fixed; the identity has an empty window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    lo: i64,
    images: Vec<i64>,
    length: usize,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            lo: 1,
            images: Vec::new(),
            length: 0,
        }
    }

    /// Builds the permutation with `π(lo + k) = images[k]`, identity elsewhere.
    pub fn from_window(lo: i64, images: Vec<i64>) -> Result<Self> {
        let n = images.len() as i64;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let k = v - lo;
            if k < 0 || k >= n || seen[k as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "values {images:?} are not a permutation of [{lo}, {}]",
                    lo + n - 1
                )));
            }
            seen[k as usize] = true;
        }
        Ok(Self::normalized(lo, images))
    }

    /// One-line notation `[π(1) ⋯ π(n)]`.
    pub fn from_one_line(values: &[i64]) -> Result<Self> {
        Self::from_window(1, values.to_vec())
    }

    fn normalized(mut lo: i64, images: Vec<i64>) -> Self {
        let mut start = 0;
        let mut end = images.len();
        while start < end && images[start] == lo + start as i64 {
            start += 1;
        }
        while end > start && images[end - 1] == lo + end as i64 - 1 {
            end -= 1;
        }
        if start == end {
            return Self::identity();
        }
        lo += start as i64;
        let images = images[start..end].to_vec();
        let length = count_inversions(&images);
        Permutation { lo, images, length }
    }

    /// The simple transposition `s_i = t_{i,i+1}`.
    pub fn simple(i: Letter) -> Self {
        Permutation {
            lo: i,
            images: vec![i + 1, i],
            length: 1,
        }
    }

    /// The transposition `t_{a,b}`.
    pub fn transposition(a: i64, b: i64) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let mut images: Vec<i64> = (a..=b).collect();
        let last = images.len() - 1;
        images.swap(0, last);
        Self::normalized(a, images)
    }

    pub fn apply(&self, x: i64) -> i64 {
        let k = x - self.lo;
        if k >= 0 && (k as usize) < self.images.len() {
            self.images[k as usize]
        } else {
            x
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// Smallest and largest non-fixed points, `None` for the identity.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.images.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.images.len() as i64 - 1))
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.length
    }

    /// True when every non-fixed point is positive.
    pub fn in_s_infinity(&self) -> bool {
        self.support().is_none_or(|(lo, _)| lo >= 1)
    }

    /// Smallest `n` with the permutation in `S_n`, `None` if the support
    /// reaches below 1.
    pub fn rank(&self) -> Option<usize> {
        match self.support() {
            None => Some(1),
            Some((lo, hi)) if lo >= 1 => Some(hi as usize),
            _ => None,
        }
    }

    /// Values `π(1), …, π(n)`.
    pub fn one_line(&self, n: usize) -> Vec<i64> {
        (1..=n as i64).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[(v - self.lo) as usize] = self.lo + k as i64;
        }
        Permutation {
            lo: self.lo,
            images: inv,
            length: self.length,
        }
    }

    /// `π · s_i`: swaps the values in positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: Letter) -> Self {
        self.mul_transposition(i, i + 1)
    }

    /// `s_i · π`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: Letter) -> Self {
        &Self::simple(i) * self
    }

    /// `π · t_{a,b}`: swaps the values in positions `a` and `b`.
    pub fn mul_transposition(&self, a: i64, b: i64) -> Self {
        let (lo, hi) = match self.support() {
            Some((lo, hi)) => (lo.min(a.min(b)), hi.max(a.max(b))),
            None => (a.min(b), a.max(b)),
        };
        let mut images: Vec<i64> = (lo..=hi).map(|x| self.apply(x)).collect();
        images.swap((a - lo) as usize, (b - lo) as usize);
        Self::normalized(lo, images)
    }

    /// True when `i` is a right descent, `π(i) > π(i + 1)`.
    pub fn has_right_descent(&self, i: Letter) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// True when `i` is a left descent, `π⁻¹(i) > π⁻¹(i + 1)`.
    pub fn has_left_descent(&self, i: Letter) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Letters `i` with `ℓ(s_i π) < ℓ(π)`, ascending.
    pub fn left_descents(&self) -> Vec<Letter> {
        let inv = self.inverse();
        match self.support() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..hi)
                .filter(|&i| inv.apply(i) > inv.apply(i + 1))
                .collect(),
        }
    }

    /// Letters `i` with `ℓ(π s_i) < ℓ(π)`, ascending.
    pub fn right_descents(&self) -> Vec<Letter> {
        match self.support() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..hi).filter(|&i| self.has_right_descent(i)).collect(),
        }
    }

    /// Pairs `a < b` with `π(a) > π(b)`.
    pub fn inversions(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        if let Some((lo, hi)) = self.support() {
            for a in lo..=hi {
                for b in a + 1..=hi {
                    if self.apply(a) > self.apply(b) {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// `τᵏπ`, where `(τπ)(i + 1) = π(i) + 1`.
    pub fn tau_shift(&self, k: i64) -> Self {
        if self.is_identity() {
            return self.clone();
        }
        Permutation {
            lo: self.lo + k,
            images: self.images.iter().map(|v| v + k).collect(),
            length: self.length,
        }
    }

    /// Whether `π · t_{a,b}` covers `π` in Bruhat order.
    pub fn covered_by_transposition(&self, a: i64, b: i64) -> bool {
        a != b && self.mul_transposition(a, b).length() == self.length + 1
    }
}

/// `ℓ(π t_{ab}) = ℓ(π) + 1`.
pub fn bruhat_cover(pi: &Permutation, a: i64, b: i64) -> bool {
    pi.covered_by_transposition(a, b)
}

fn count_inversions(values: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                count += 1;
            }
        }
    }
    count
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Composition `(πσ)(x) = π(σ(x))`.
    fn mul(self, rhs: &Permutation) -> Permutation {
        let bounds = [self.support(), rhs.support()];
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for (l, h) in bounds.iter().flatten() {
            lo = lo.min(*l);
            hi = hi.max(*h);
        }
        if lo > hi {
            return Permutation::identity();
        }
        let images = (lo..=hi).map(|x| self.apply(rhs.apply(x))).collect();
        Permutation::normalized(lo, images)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

fn write_values(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    let compact = values.iter().all(|v| (1..=9).contains(v));
    f.write_str("[")?;
    for (k, v) in values.iter().enumerate() {
        if !compact && k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

impl fmt::Display for Permutation {
    /// One-line notation; permutations moving points below 1 are written as
    /// `tau^-k[...]`, the inverse shift of a permutation in `S_∞`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.support() {
            None => f.write_str("[1]"),
            Some((lo, hi)) if lo >= 1 => write_values(f, &self.one_line(hi as usize)),
            Some((lo, _)) => {
                let k = 1 - lo;
                let shifted = self.tau_shift(k);
                write!(f, "tau^-{k}")?;
                let (_, hi) = shifted.support().expect("non-identity");
                write_values(f, &shifted.one_line(hi as usize))
            }
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (shift, rest) = match s.strip_prefix("tau^") {
            Some(rest) => {
                let open = rest
                    .find('[')
                    .ok_or_else(|| Error::parse(s, s.len(), "expected '['"))?;
                let k: i64 = rest[..open]
                    .parse()
                    .map_err(|_| Error::parse(s, 4, "expected an integer exponent"))?;
                (k, &rest[open..])
            }
            None => (0, s),
        };
        let offset = s.len() - rest.len();
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, offset, "expected bracketed one-line notation"))?;
        let values: Vec<i64> = if inner.contains(',') {
            inner
                .split(',')
                .enumerate()
                .map(|(k, tok)| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::parse(s, offset + 1 + k, "expected an integer"))
                })
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .enumerate()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(k, c)| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| Error::parse(s, offset + 1 + k, "expected a digit"))
                })
                .collect::<Result<_>>()?
        };
        Ok(Permutation::from_one_line(&values)?.tau_shift(shift))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of letters `i₁ ⋯ i_k`, standing for `s_{i₁} ⋯ s_{i_k}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∏w = s_{i₁} ⋯ s_{i_k}`.
    pub fn product(&self) -> Permutation {
        product(self)
    }

    pub fn demazure(&self) -> Permutation {
        demazure(self)
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    /// The word with the letter at 1-based `position` removed.
    pub fn without(&self, position: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(position - 1);
        Word(letters)
    }

    /// Whether `sub` occurs as a (not necessarily contiguous) subsequence.
    pub fn contains_subword(&self, sub: &Word) -> bool {
        let mut it = self.0.iter();
        sub.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    pub fn min_letter(&self) -> Option<Letter> {
        self.0.iter().copied().min()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is in `1..=9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|l| (1..=9).contains(l)) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "ε" {
            return Ok(Word::empty());
        }
        if t.contains(',') {
            let mut letters = Vec::new();
            let mut offset = 0;
            for tok in t.split(',') {
                let v = tok
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse(s, offset, "expected an integer letter"))?;
                letters.push(v);
                offset += tok.len() + 1;
            }
            Ok(Word(letters))
        } else {
            // a lone integer such as "-1" or "10" is a one-letter word only
            // when it cannot be read as digits; digit strings are split
            if let Some(rest) = t.strip_prefix('-') {
                let v = rest
                    .parse::<i64>()
                    .map_err(|_| Error::parse(s, 1, "expected an integer letter"))?;
                return Ok(Word(vec![-v]));
            }
            t.chars()
                .enumerate()
                .map(|(k, c)| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| Error::parse(s, k, "expected a digit"))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Letter>::deserialize(deserializer).map(Word)
    }
}

pub fn product(w: &Word) -> Permutation {
    let mut letters = w.0.iter();
    let Some(&first) = letters.next() else {
        return Permutation::identity();
    };
    let lo = w.min_letter().unwrap_or(first);
    let hi = w.max_letter().unwrap_or(first) + 1;
    let mut images: Vec<i64> = (lo..=hi).collect();
    for &l in &w.0 {
        images.swap((l - lo) as usize, (l + 1 - lo) as usize);
    }
    Permutation::normalized(lo, images)
}

/// Demazure product: `Dem(w i) = Dem(w) s_i` if that is longer, else `Dem(w)`.
pub fn demazure(w: &Word) -> Permutation {
    let Some(lo) = w.min_letter() else {
        return Permutation::identity();
    };
    let hi = w.max_letter().expect("non-empty") + 1;
    let mut images: Vec<i64> = (lo..=hi).collect();
    for &l in &w.0 {
        let (p, q) = ((l - lo) as usize, (l + 1 - lo) as usize);
        if images[p] < images[q] {
            images.swap(p, q);
        }
    }
    Permutation::normalized(lo, images)
}

/// All reduced words of `π` in lexicographic order.
pub fn reduced_words(pi: &Permutation) -> Vec<Word> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(pi.length());
    collect_reduced_words(pi, &mut prefix, &mut out);
    out
}

fn collect_reduced_words(pi: &Permutation, prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
    if pi.is_identity() {
        out.push(Word(prefix.clone()));
        return;
    }
    for i in pi.left_descents() {
        prefix.push(i);
        collect_reduced_words(&pi.left_mul_simple(i), prefix, out);
        prefix.pop();
    }
}

/// `|RW(π)|`, memoized over right factors.
pub fn count_reduced_words(pi: &Permutation) -> u128 {
    fn go(pi: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
        if pi.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(pi) {
            return c;
        }
        let c = pi
            .left_descents()
            .into_iter()
            .map(|i| go(&pi.left_mul_simple(i), memo))
            .sum();
        memo.insert(pi.clone(), c);
        c
    }
    go(pi, &mut HashMap::new())
}

/// Every permutation of `S_n`, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<i64> = (1..=n as i64).collect();
    loop {
        out.push(Permutation::from_one_line(&current).expect("valid"));
        // next lexicographic permutation
        let Some(i) = (0..current.len().saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("exists");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// Lehmer code `(c₁, …, c_n)` with `c_i = #{j > i : π(j) < π(i)}`, where
/// `n` is the largest non-fixed point.
pub fn lehmer(pi: &Permutation) -> Result<Vec<usize>> {
    let Some((lo, hi)) = pi.support() else {
        return Ok(Vec::new());
    };
    if lo < 1 {
        return Err(Error::NotInSInfinity(pi.to_string()));
    }
    let values = pi.one_line(hi as usize);
    Ok((0..values.len())
        .map(|i| values[i + 1..].iter().filter(|&&v| v < values[i]).count())
        .collect())
}

/// The permutation in `S_∞` with the given Lehmer code.
pub fn inverse_lehmer(code: &[usize]) -> Permutation {
    let n = code.len() + code.iter().copied().max().unwrap_or(0);
    let mut available: Vec<i64> = (1..=n as i64 + 1).collect();
    let mut values = Vec::with_capacity(n + 1);
    for &c in code {
        values.push(available.remove(c));
    }
    values.extend(available);
    Permutation::from_one_line(&values).expect("lehmer construction is a bijection")
}

/// Wiring diagram of a word: column `i` (`0 ≤ i ≤ len`) holds the labels
/// `s_{w_n} ⋯ s_{w_{i+1}}`; column `len` is the identity.
#[derive(Clone, Debug)]
pub struct WiringDiagram {
    word: Word,
    columns: Vec<Permutation>,
}

impl WiringDiagram {
    pub fn new(word: &Word) -> Self {
        let n = word.len();
        let mut columns = vec![Permutation::identity(); n + 1];
        for i in (0..n).rev() {
            columns[i] = columns[i + 1].mul_simple(word.0[i]);
        }
        WiringDiagram {
            word: word.clone(),
            columns,
        }
    }

    /// The `height`-th label from the bottom in column `column`.
    pub fn label(&self, column: usize, height: i64) -> i64 {
        self.columns[column].apply(height)
    }

    pub fn column(&self, column: usize) -> &Permutation {
        &self.columns[column]
    }

    /// Labels `(a, b)` of the cross at 1-based `position`: the cross moves the
    /// `a`-wire up and the `b`-wire down reading right to left.
    pub fn cross_labels(&self, position: usize) -> (i64, i64) {
        let h = self.word.0[position - 1];
        (self.label(position, h), self.label(position, h + 1))
    }

    /// Cross labels read from right to left.
    pub fn factorization(&self) -> Vec<(i64, i64)> {
        (1..=self.word.len()).rev().map(|p| self.cross_labels(p)).collect()
    }
}

/// `wl(w, i, j)`.
pub fn wiring_label(w: &Word, column: usize, height: i64) -> i64 {
    WiringDiagram::new(w).label(column, height)
}

/// The two 1-based positions whose deletion makes a non-reduced word reduced,
/// or `None` if the word is reduced or no single deletion reduces it.
pub fn defects(w: &Word) -> Option<(usize, usize)> {
    if w.is_reduced() {
        return None;
    }
    let target = w.len() - 1;
    let hits: Vec<usize> = (1..=w.len())
        .filter(|&p| w.without(p).product().length() == target)
        .collect();
    match hits.as_slice() {
        [a, b] => Some((*a, *b)),
        _ => None,
    }
}

/// All compatible sequences for `w` with entries at least `lower_bound`:
/// weakly increasing, `j_k ≤ i_k`, strict where the word ascends.
pub fn compatible_sequences(w: &Word, lower_bound: i64) -> Vec<Vec<i64>> {
    fn go(w: &[Letter], k: usize, min: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == w.len() {
            out.push(acc.clone());
            return;
        }
        // the remaining entries can never exceed the smallest later letter
        for j in min..=w[k] {
            acc.push(j);
            let next_min = if k + 1 < w.len() && w[k] < w[k + 1] { j + 1 } else { j };
            go(w, k + 1, next_min, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&w.0, 0, lower_bound, &mut Vec::with_capacity(w.len()), &mut out);
    out
}

pub fn is_compatible(w: &Word, seq: &[i64]) -> bool {
    seq.len() == w.len()
        && seq.iter().zip(&w.0).all(|(j, i)| j <= i)
        && (1..seq.len()).all(|k| {
            seq[k - 1] <= seq[k] && (w.0[k - 1] >= w.0[k] || seq[k - 1] < seq[k])
        })
}

/// `(n-1)(n-2)⋯1 (n-1)⋯2 ⋯ (n-1)`.
pub fn triangular_word(n: usize) -> Word {
    let n = n as i64;
    let mut letters = Vec::new();
    for start in 1..n {
        letters.extend((start..n).rev());
    }
    Word(letters)
}
