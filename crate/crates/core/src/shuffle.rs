//! Monk and Pieri shuffles: bijections between shuffles of `i` (or of
//! `c[i,k]`, `r[i,k]`) into reduced words for `π` and reduced words for the
//! permutations in the corresponding product of back-stable Schubert
//! polynomials.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{defects, Letter, Permutation, Word};

/// A letter or the sentinel `∞`, which lies above every letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Finite(Letter),
    /// Serialized as `null`.
    Inf,
}

impl Entry {
    pub fn finite(self) -> Option<Letter> {
        match self {
            Entry::Finite(x) => Some(x),
            Entry::Inf => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    #[default]
    None,
    /// A deleted cross waiting to move down; ignored by wiring labels.
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub entry: Entry,
    #[serde(default)]
    pub mark: Mark,
}

/// A word whose slots may hold `∞` and carry `↓`/`↑` marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MarkedWord {
    pub slots: Vec<Slot>,
}

impl MarkedWord {
    pub fn from_word(w: &Word) -> Self {
        MarkedWord {
            slots: w
                .letters()
                .iter()
                .map(|&x| Slot {
                    entry: Entry::Finite(x),
                    mark: Mark::None,
                })
                .collect(),
        }
    }

    /// `w` with `↓∞` placed at the 1-based `positions` of the longer word.
    pub fn with_insertions(w: &Word, positions: &[usize]) -> Result<Self> {
        let total = w.len() + positions.len();
        if positions.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::domain("insertion positions must be strictly increasing"));
        }
        if positions.iter().any(|&p| p == 0 || p > total) {
            return Err(Error::domain(format!("insertion positions must lie in 1..={total}")));
        }
        let mut letters = w.letters().iter();
        let slots = (1..=total)
            .map(|p| {
                if positions.contains(&p) {
                    Slot {
                        entry: Entry::Inf,
                        mark: Mark::Down,
                    }
                } else {
                    Slot {
                        entry: Entry::Finite(*letters.next().expect("enough letters")),
                        mark: Mark::None,
                    }
                }
            })
            .collect();
        Ok(MarkedWord { slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    fn slot(&self, pos: usize) -> &Slot {
        &self.slots[pos - 1]
    }

    fn slot_mut(&mut self, pos: usize) -> &mut Slot {
        &mut self.slots[pos - 1]
    }

    fn letter(&self, pos: usize) -> Option<Letter> {
        self.slot(pos).entry.finite()
    }

    fn counts(s: &Slot) -> bool {
        s.mark != Mark::Down && s.entry != Entry::Inf
    }

    /// `wl(w, pos, height)`: the label of the wire at `height` just right of
    /// slot `pos`, ignoring `↓` slots and `∞`.
    pub fn label(&self, pos: usize, height: i64) -> i64 {
        self.slots[pos..]
            .iter()
            .filter(|s| Self::counts(s))
            .fold(height, |h, s| {
                let x = s.entry.finite().expect("finite slot");
                if h == x {
                    x + 1
                } else if h == x + 1 {
                    x
                } else {
                    h
                }
            })
    }

    /// Labels `(lower, upper)` of the cross at a finite slot.
    fn cross(&self, pos: usize) -> (i64, i64) {
        let x = self.letter(pos).expect("finite slot");
        (self.label(pos, x), self.label(pos, x + 1))
    }

    /// Range of heights outside of which labels right of `pos` are trivial.
    fn height_window(&self, pos: usize) -> (i64, i64) {
        self.slots[pos..]
            .iter()
            .filter(|s| Self::counts(s))
            .filter_map(|s| s.entry.finite())
            .fold(None, |acc: Option<(i64, i64)>, x| match acc {
                None => Some((x, x + 1)),
                Some((lo, hi)) => Some((lo.min(x), hi.max(x + 1))),
            })
            .unwrap_or((0, 0))
    }

    /// The word of finite slots, or `None` if some slot is `∞`.
    pub fn to_word(&self) -> Option<Word> {
        self.slots
            .iter()
            .map(|s| s.entry.finite())
            .collect::<Option<Vec<_>>>()
            .map(Word::new)
    }

    /// Finite letters and the 1-based positions of the `∞` slots.
    pub fn split_infinities(&self) -> (Word, Vec<usize>) {
        let mut letters = Vec::new();
        let mut infs = Vec::new();
        for (k, s) in self.slots.iter().enumerate() {
            match s.entry {
                Entry::Finite(x) => letters.push(x),
                Entry::Inf => infs.push(k + 1),
            }
        }
        (Word::new(letters), infs)
    }

    fn subword(&self, positions: &[usize]) -> Word {
        Word::new(positions.iter().map(|&p| self.letter(p).expect("finite slot")).collect())
    }

    fn positions_with(&self, mark: Mark) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.slot(p).mark == mark).collect()
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self
            .slots
            .iter()
            .all(|s| matches!(s.entry, Entry::Inf) || matches!(s.entry, Entry::Finite(x) if (0..=9).contains(&x)));
        for (k, s) in self.slots.iter().enumerate() {
            if !compact && k > 0 {
                f.write_str(",")?;
            }
            match s.entry {
                Entry::Finite(x) => write!(f, "{x}")?,
                Entry::Inf => f.write_str("∞")?,
            }
            match s.mark {
                Mark::None => {}
                Mark::Down => f.write_str("↓")?,
                Mark::Up => f.write_str("↑")?,
            }
        }
        Ok(())
    }
}

impl FromStr for MarkedWord {
    type Err = Error;

    /// Digits or comma-separated integers, `∞`/`inf` for the sentinel, each
    /// optionally followed by `↓`/`v` or `↑`/`^`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let tokens: Vec<(usize, String)> = if t.contains(',') {
            let mut off = 0;
            t.split(',')
                .map(|tok| {
                    let r = (off, tok.trim().to_string());
                    off += tok.len() + 1;
                    r
                })
                .collect()
        } else {
            let mut out: Vec<(usize, String)> = Vec::new();
            let mut chars = t.char_indices().peekable();
            while let Some((off, c)) = chars.next() {
                let mut tok = c.to_string();
                if t[off..].starts_with("inf") {
                    tok = "inf".into();
                    chars.next();
                    chars.next();
                }
                while let Some(&(_, m)) = chars.peek() {
                    if matches!(m, '↓' | '↑' | 'v' | '^') {
                        tok.push(m);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((off, tok));
            }
            out
        };
        let slots = tokens
            .into_iter()
            .filter(|(_, tok)| !tok.is_empty() || !t.is_empty())
            .map(|(off, tok)| {
                let (body, mark) = match tok.chars().last() {
                    Some('↓' | 'v') => (&tok[..tok.len() - tok.chars().last().unwrap().len_utf8()], Mark::Down),
                    Some('↑' | '^') => (&tok[..tok.len() - tok.chars().last().unwrap().len_utf8()], Mark::Up),
                    _ => (tok.as_str(), Mark::None),
                };
                let entry = match body {
                    "∞" | "inf" => Entry::Inf,
                    _ => Entry::Finite(
                        body.parse()
                            .map_err(|_| Error::parse(s, off, format!("expected a letter, found {body:?}")))?,
                    ),
                };
                Ok(Slot { entry, mark })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MarkedWord { slots })
    }
}

fn snapshot(w: &MarkedWord, pos: usize) -> String {
    let (lo, hi) = w.height_window(pos);
    let labels: Vec<String> = (lo..=hi).map(|h| w.label(pos, h).to_string()).collect();
    format!("wl[{lo}..={hi}]=({})", labels.join(","))
}

fn require_reduced(w: &Word) -> Result<()> {
    if w.is_reduced() {
        Ok(())
    } else {
        Err(Error::domain(format!("word {w} is not reduced")))
    }
}

/// Shuffles `i` into the reduced word `w` at the 1-based position `j`.
pub fn monk_shuffle(i: i64, w: &Word, j: usize) -> Result<Word> {
    monk_shuffle_traced(i, w, j).map(|(out, _)| out)
}

/// `monk_shuffle` with one trace line per loop iteration.
pub fn monk_shuffle_traced(i: i64, w: &Word, j: usize) -> Result<(Word, Vec<String>)> {
    require_reduced(w)?;
    let mut mw = MarkedWord::with_insertions(w, &[j])?;
    let mut trace = Vec::new();
    let mut j = j;
    loop {
        let start = match mw.slot(j).entry {
            Entry::Finite(x) => x - 1,
            Entry::Inf => i.max(mw.height_window(j).1),
        };
        let floor = i.min(mw.height_window(j).0) - 1;
        let k = (floor..=start)
            .rev()
            .find(|&k| mw.label(j, k) <= i && i < mw.label(j, k + 1))
            .ok_or_else(|| Error::domain(format!("no allowed swap below slot {j}")))?;
        let before = mw.to_string();
        *mw.slot_mut(j) = Slot {
            entry: Entry::Finite(k),
            mark: Mark::None,
        };
        let (a, b) = mw.cross(j);
        debug_assert!(a <= i && i < b);
        trace.push(format!("j={j} word={before} k={k} cross=({a},{b}) {}", snapshot(&mw, j)));
        let word = mw.to_word().expect("all slots finite");
        match defects(&word) {
            None if word.is_reduced() => return Ok((word, trace)),
            None => return Err(Error::domain(format!("word {word} has no defect pair"))),
            Some((left, _)) => j = left,
        }
    }
}

/// The unique `(w, j)` with `monk_shuffle(i, w, j) = target`, where `target`
/// is a reduced word for `π t_ab` with `a ≤ i < b`.
pub fn monk_unshuffle(i: i64, pi: &Permutation, target: &Word) -> Result<(Word, usize)> {
    monk_unshuffle_traced(i, pi, target).map(|(w, j, _)| (w, j))
}

pub fn monk_unshuffle_traced(i: i64, pi: &Permutation, target: &Word) -> Result<(Word, usize, Vec<String>)> {
    require_reduced(target)?;
    let sigma = target.product();
    let t = &pi.inverse() * &sigma;
    let (a, b) = match t.support() {
        Some((a, b)) if t == Permutation::transposition(a, b) => (a, b),
        _ => return Err(Error::domain(format!("{sigma} is not π·t_ab for π = {pi}"))),
    };
    if !(a <= i && i < b) || sigma.length() != pi.length() + 1 {
        return Err(Error::domain(format!(
            "{sigma} = {pi}·t_{a}{b} is not a Monk cover for i = {i}"
        )));
    }
    let mut mw = MarkedWord::from_word(target);
    let mut j = (1..=mw.len())
        .find(|&p| mw.cross(p) == (a, b))
        .ok_or_else(|| Error::domain(format!("no cross ({a},{b}) in {target}")))?;
    let mut trace = Vec::new();
    loop {
        let x = mw.letter(j).expect("finite slot");
        let ceiling = i.max(mw.height_window(j).1) + 1;
        let next = (x + 1..=ceiling).find(|&k| mw.label(j, k + 1) <= i && i < mw.label(j, k));
        let before = mw.to_string();
        match next {
            None => {
                mw.slot_mut(j).entry = Entry::Inf;
                trace.push(format!("j={j} word={before} k=∞"));
                let (w, _) = mw.split_infinities();
                return Ok((w, j, trace));
            }
            Some(k) => {
                mw.slot_mut(j).entry = Entry::Finite(k);
                trace.push(format!("j={j} word={before} k={k} {}", snapshot(&mw, j)));
                let word = mw.to_word().expect("all slots finite");
                j = defects(&word)
                    .ok_or_else(|| Error::domain(format!("{word} has no defect pair")))?
                    .1;
            }
        }
    }
}

/// Positions (1-based, ascending) of the rightmost subword of `q` for `π`,
/// chosen greedily from the right.
pub fn rightmost_subword(q: &Word, pi: &Permutation) -> Result<Vec<usize>> {
    let mut rest = pi.clone();
    let mut chosen = Vec::new();
    for p in (1..=q.len()).rev() {
        let x = q.letters()[p - 1];
        if rest.has_right_descent(x) {
            rest = rest.mul_simple(x);
            chosen.push(p);
        }
    }
    if !rest.is_identity() {
        return Err(Error::domain(format!("{q} does not contain a reduced word for {pi}")));
    }
    chosen.reverse();
    Ok(chosen)
}

/// Which Pieri rule: `c[i,k] = s_{i−k+1}⋯s_i` or `r[i,k] = s_{i+k−1}⋯s_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    C,
    R,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" | "C" => Ok(Variant::C),
            "r" | "R" => Ok(Variant::R),
            _ => Err(Error::parse(s, 0, "expected c or r")),
        }
    }
}

impl Variant {
    /// The word `c[i,k]` or `r[i,k]`.
    pub fn word(self, i: i64, k: usize) -> Word {
        let k = k as i64;
        match self {
            Variant::C => Word::new((i - k + 1..=i).collect()),
            Variant::R => Word::new((i..=i + k - 1).rev().collect()),
        }
    }
}

/// `B = {i+1, i+2, …}` or `S = {…, i−1, i}`, up to finitely many toggles.
#[derive(Clone, Debug)]
struct CofiniteSet {
    variant: Variant,
    i: i64,
    toggled: BTreeSet<i64>,
}

impl CofiniteSet {
    fn new(variant: Variant, i: i64) -> Self {
        CofiniteSet {
            variant,
            i,
            toggled: BTreeSet::new(),
        }
    }

    fn base(&self, x: i64) -> bool {
        match self.variant {
            Variant::C => x > self.i,
            Variant::R => x <= self.i,
        }
    }

    fn contains(&self, x: i64) -> bool {
        self.base(x) != self.toggled.contains(&x)
    }

    fn set(&mut self, x: i64, member: bool) {
        if member == self.base(x) {
            self.toggled.remove(&x);
        } else {
            self.toggled.insert(x);
        }
    }

    fn bounds(&self) -> (i64, i64) {
        let lo = self.toggled.first().map_or(self.i, |&x| x.min(self.i));
        let hi = self.toggled.last().map_or(self.i, |&x| x.max(self.i));
        (lo, hi)
    }

    /// Whether `(lower, upper)` labels may cross.
    fn allowed(&self, lower: i64, upper: i64) -> bool {
        match self.variant {
            Variant::C => !self.contains(lower) && self.contains(upper),
            Variant::R => self.contains(lower) && !self.contains(upper),
        }
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, base) = match self.variant {
            Variant::C => ("B", format!("[{},∞)", self.i + 1)),
            Variant::R => ("S", format!("(-∞,{}]", self.i)),
        };
        let added: Vec<String> = self.toggled.iter().filter(|&&x| !self.base(x)).map(|x| x.to_string()).collect();
        let removed: Vec<String> = self.toggled.iter().filter(|&&x| self.base(x)).map(|x| x.to_string()).collect();
        write!(f, "{name}={base}")?;
        if !added.is_empty() {
            write!(f, "∪{{{}}}", added.join(","))?;
        }
        if !removed.is_empty() {
            write!(f, "∖{{{}}}", removed.join(","))?;
        }
        Ok(())
    }
}

/// Whether the `↑` slot `p` is the insertion that bumped the `↓` slot `d`.
/// The label of `d` shared with `p` stays fixed while `d` waits.
fn is_partner(w: &MarkedWord, d: usize, p: usize, variant: Variant) -> bool {
    if w.slot(p).mark != Mark::Up {
        return false;
    }
    let x = w.letter(d).expect("finite slot");
    match variant {
        Variant::C => w.cross(p).0 == w.label(d, x + 1),
        Variant::R => w.cross(p).1 == w.label(d, x),
    }
}

fn bump_partner(w: &MarkedWord, d: usize, variant: Variant) -> Option<usize> {
    (d + 1..=w.len()).find(|&p| is_partner(w, d, p, variant))
}

/// The unmarked subword: unmarked letters plus `↑` letters paired with a `↓`
/// to their left.
fn unmarked_positions(w: &MarkedWord, variant: Variant) -> Vec<usize> {
    let mut paired = BTreeSet::new();
    for d in w.positions_with(Mark::Down) {
        if w.letter(d).is_none() {
            continue;
        }
        if let Some(p) = bump_partner(w, d, variant) {
            paired.insert(p);
        }
    }
    (1..=w.len())
        .filter(|&p| match w.slot(p).mark {
            Mark::None => true,
            Mark::Up => paired.contains(&p),
            Mark::Down => false,
        })
        .collect()
}

/// Rectifies a marked word whose `↓∞` slots are the insertions.
pub fn pieri_shuffle(i: i64, marked: &MarkedWord, variant: Variant) -> Result<Word> {
    pieri_shuffle_traced(i, marked, variant).map(|(w, _)| w)
}

pub fn pieri_shuffle_traced(i: i64, marked: &MarkedWord, variant: Variant) -> Result<(Word, Vec<String>)> {
    if marked
        .slots
        .iter()
        .any(|s| (s.entry == Entry::Inf) != (s.mark == Mark::Down) || s.mark == Mark::Up)
    {
        return Err(Error::domain("input must mark exactly the ∞ slots with ↓"));
    }
    let (base, _) = marked.split_infinities();
    require_reduced(&base)?;
    let pi = base.product();
    let mut w = marked.clone();
    let mut set = CofiniteSet::new(variant, i);
    let mut trace = Vec::new();
    while let Some(&j) = w.positions_with(Mark::Down).last() {
        let before = format!("{w} {set}");
        if let Some(x) = w.letter(j) {
            let (lower, upper) = (w.label(j, x), w.label(j, x + 1));
            let released = match variant {
                Variant::C => upper,
                Variant::R => lower,
            };
            debug_assert!(set.contains(released), "released label {released} was never added");
            set.set(released, false);
            debug_assert_eq!(
                (j + 1..=w.len()).filter(|&p| is_partner(&w, j, p, variant)).count(),
                1,
                "upper label is not unique"
            );
            if let Some(p) = bump_partner(&w, j, variant) {
                w.slot_mut(p).mark = Mark::None;
            }
        }
        let (wlo, whi) = w.height_window(j);
        let (slo, shi) = set.bounds();
        let start = match w.slot(j).entry {
            Entry::Finite(x) => x - 1,
            Entry::Inf => whi.max(shi) + 1,
        };
        let floor = wlo.min(slo) - 2;
        let k = (floor..=start)
            .rev()
            .find(|&k| set.allowed(w.label(j, k), w.label(j, k + 1)))
            .ok_or_else(|| Error::domain(format!("empty candidate set at slot {j}")))?;
        *w.slot_mut(j) = Slot {
            entry: Entry::Finite(k),
            mark: Mark::Up,
        };
        let (a, b) = w.cross(j);
        debug_assert!(a < b, "inserted cross ({a},{b}) is not increasing");
        match variant {
            Variant::C => set.set(a, true),
            Variant::R => set.set(b, true),
        }
        let bumped = (1..j)
            .rev()
            .find(|&p| MarkedWord::counts(w.slot(p)) && {
                let (c, d) = w.cross(p);
                (c.min(d), c.max(d)) == (a, b)
            });
        if let Some(p) = bumped {
            w.slot_mut(p).mark = Mark::Down;
        }
        trace.push(format!(
            "j={j} word={before} k={k} cross=({a},{b}) {}{}",
            snapshot(&w, j),
            bumped.map_or(String::new(), |p| format!(" bump={p}"))
        ));
        if cfg!(debug_assertions) {
            let unmarked = unmarked_positions(&w, variant);
            let q = w.subword(&unmarked);
            debug_assert_eq!(q.product(), pi, "unmarked subword {q} is not a word for {pi}");
            let full: Vec<usize> = (1..=w.len()).filter(|&p| MarkedWord::counts(w.slot(p))).collect();
            let rightmost = rightmost_subword(&w.subword(&full), &pi).expect("contains π");
            let rightmost: Vec<usize> = rightmost.into_iter().map(|r| full[r - 1]).collect();
            debug_assert_eq!(unmarked, rightmost, "unmarked subword is not the rightmost subword");
        }
    }
    let out = w.to_word().expect("all slots finite");
    debug_assert!(out.is_reduced());
    Ok((out, trace))
}

/// The nearest unmarked letter right of `j` crossing the same two wires as
/// `j`, within the word of unmarked letters and `j`.
fn defect_partner(w: &MarkedWord, j: usize) -> Option<usize> {
    let mut view = w.clone();
    for (k, s) in view.slots.iter_mut().enumerate() {
        s.mark = if k + 1 == j || s.mark == Mark::None { Mark::None } else { Mark::Down };
    }
    let (lower, upper) = view.cross(j);
    (j + 1..=w.len()).find(|&p| MarkedWord::counts(view.slot(p)) && view.cross(p) == (upper, lower))
}

/// Inverse of `pieri_shuffle` for insertions into a word for `π`.
pub fn pieri_unshuffle(i: i64, pi: &Permutation, target: &Word, variant: Variant) -> Result<MarkedWord> {
    pieri_unshuffle_traced(i, pi, target, variant).map(|(w, _)| w)
}

pub fn pieri_unshuffle_traced(
    i: i64,
    pi: &Permutation,
    target: &Word,
    variant: Variant,
) -> Result<(MarkedWord, Vec<String>)> {
    require_reduced(target)?;
    let keep = rightmost_subword(target, pi)?;
    let mut w = MarkedWord::from_word(target);
    let mut set = CofiniteSet::new(variant, i);
    for p in 1..=w.len() {
        if !keep.contains(&p) {
            w.slot_mut(p).mark = Mark::Up;
        }
    }
    for p in w.positions_with(Mark::Up) {
        let (a, b) = w.cross(p);
        match variant {
            Variant::C => set.set(a, true),
            Variant::R => set.set(b, true),
        }
    }
    let mut trace = Vec::new();
    let limit = 4 * (w.len() + 1) * (w.len() + 1);
    while let Some(&j) = w.positions_with(Mark::Up).first() {
        if trace.len() > limit {
            return Err(Error::domain(format!("{target} is not in the image of the shuffle")));
        }
        let before = format!("{w} {set}");
        let (a, b) = w.cross(j);
        if let Some(p) = (1..j).rev().find(|&p| {
            w.slot(p).mark == Mark::Down && w.letter(p).is_some() && w.cross(p) == (b, a)
        }) {
            w.slot_mut(p).mark = Mark::None;
        }
        match variant {
            Variant::C => set.set(a, false),
            Variant::R => set.set(b, false),
        }
        let x = w.letter(j).expect("finite slot");
        let (_, whi) = w.height_window(j);
        let (_, shi) = set.bounds();
        let ceiling = whi.max(shi) + 2;
        let next = (x + 1..=ceiling).find(|&k| {
            let (lower, upper) = (w.label(j, k), w.label(j, k + 1));
            match variant {
                Variant::C => set.contains(lower) && !set.contains(upper),
                Variant::R => !set.contains(lower) && set.contains(upper),
            }
        });
        match next {
            None => {
                *w.slot_mut(j) = Slot {
                    entry: Entry::Inf,
                    mark: Mark::Down,
                };
                trace.push(format!("j={j} word={before} k=∞"));
            }
            Some(k) => {
                *w.slot_mut(j) = Slot {
                    entry: Entry::Finite(k),
                    mark: Mark::Down,
                };
                let (lower, upper) = (w.label(j, k), w.label(j, k + 1));
                match variant {
                    Variant::C => set.set(upper, true),
                    Variant::R => set.set(lower, true),
                }
                let partner = defect_partner(&w, j)
                    .ok_or_else(|| Error::domain(format!("{target} is not in the image of the shuffle")))?;
                w.slot_mut(partner).mark = Mark::Up;
                trace.push(format!("j={j} word={before} k={k} {} mark={partner}", snapshot(&w, j)));
            }
        }
    }
    let (rest, infs) = w.split_infinities();
    if rest.product() != *pi || !rest.is_reduced() || infs.len() + pi.length() != target.len() {
        return Err(Error::domain(format!("{target} is not in the image of the shuffle")));
    }
    if pieri_shuffle(i, &w, variant).ok().as_ref() != Some(target) {
        return Err(Error::domain(format!("{target} is not in the image of the shuffle")));
    }
    Ok((w, trace))
}

/// Covers `π t_ab` with `a ≤ i < b`.
pub fn monk_rhs(pi: &Permutation, i: i64) -> Vec<Permutation> {
    monk_covers(pi, i).into_iter().map(|(_, _, s)| s).collect()
}

fn monk_covers(pi: &Permutation, i: i64) -> Vec<(i64, i64, Permutation)> {
    let (lo, hi) = pi.support().unwrap_or((i, i + 1));
    let mut out = Vec::new();
    for a in lo.min(i) - 1..=i {
        for b in i + 1..=hi.max(i + 1) + 1 {
            if pi.covered_by_transposition(a, b) {
                out.push((a, b, pi.mul_transposition(a, b)));
            }
        }
    }
    out
}

/// All `σ` with `π →^{i,k} σ` for the chosen variant.
pub fn pieri_rhs(pi: &Permutation, i: i64, k: usize, variant: Variant) -> BTreeSet<Permutation> {
    fn go(
        cur: &Permutation,
        i: i64,
        left: usize,
        variant: Variant,
        used: &mut Vec<i64>,
        out: &mut BTreeSet<Permutation>,
    ) {
        if left == 0 {
            out.insert(cur.clone());
            return;
        }
        for (a, b, next) in monk_covers(cur, i) {
            let key = match variant {
                Variant::C => a,
                Variant::R => b,
            };
            if used.contains(&key) {
                continue;
            }
            used.push(key);
            go(&next, i, left - 1, variant, used, out);
            used.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(pi, i, k, variant, &mut Vec::new(), &mut out);
    out
}

/// Whether `π →^{i,k} σ`.
pub fn pieri_relation(pi: &Permutation, sigma: &Permutation, i: i64, k: usize, variant: Variant) -> bool {
    k >= 1 && sigma.length() == pi.length() + k && pieri_rhs(pi, i, k, variant).contains(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn monk_examples() {
        assert_eq!(monk_shuffle(3, &w("323432"), 5).unwrap(), w("1232432"));
        assert_eq!(monk_shuffle(1, &w("121"), 3).unwrap(), w("1021"));
        assert_eq!(monk_shuffle(4, &Word::empty(), 1).unwrap(), w("4"));
        let (_, trace) = monk_shuffle_traced(3, &w("323432"), 5).unwrap();
        assert_eq!(trace.len(), 3);
        assert!(trace[0].starts_with("j=5 word=3234∞↓32 k=4 cross=(2,5)"));
    }

    #[test]
    fn monk_inverse_examples() {
        let pi = p("[321]");
        assert_eq!(monk_unshuffle(1, &pi, &w("1021")).unwrap(), (w("121"), 3));
        assert_eq!(monk_unshuffle(1, &pi, &w("3121")).unwrap(), (w("121"), 1));
        assert_eq!(monk_unshuffle(2, &Permutation::identity(), &w("2")).unwrap(), (Word::empty(), 1));
        assert!(monk_unshuffle(1, &pi, &w("1232")).is_err());
    }

    #[test]
    fn rightmost() {
        assert_eq!(rightmost_subword(&w("321323"), &p("[1432]")).unwrap(), vec![4, 5, 6]);
        assert_eq!(rightmost_subword(&w("11"), &p("[21]")).unwrap(), vec![2]);
        assert_eq!(rightmost_subword(&w("121"), &p("[321]")).unwrap(), vec![1, 2, 3]);
        assert!(rightmost_subword(&w("12"), &p("[321]")).is_err());
    }

    #[test]
    fn marked_word_text() {
        let m = MarkedWord::with_insertions(&w("53"), &[3, 4, 5]).unwrap();
        assert_eq!(m.to_string(), "53∞↓∞↓∞↓");
        assert_eq!(m.to_string().parse::<MarkedWord>().unwrap(), m);
        assert_eq!("5,3,inf↓".parse::<MarkedWord>().unwrap().len(), 3);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<MarkedWord>(&json).unwrap(), m);
    }

    #[test]
    fn pieri_figure_run() {
        let m = MarkedWord::with_insertions(&w("53"), &[3, 4, 5]).unwrap();
        let pi = p("[124365]");
        for variant in [Variant::C, Variant::R] {
            let out = pieri_shuffle(5, &m, variant).unwrap();
            assert!(out.is_reduced());
            assert!(pieri_relation(&pi, &out.product(), 5, 3, variant));
            assert_eq!(pieri_unshuffle(5, &pi, &out, variant).unwrap(), m);
        }
    }

    #[test]
    fn pieri_trivial() {
        let m = MarkedWord::with_insertions(&Word::empty(), &[1]).unwrap();
        assert_eq!(pieri_shuffle(2, &m, Variant::C).unwrap(), w("2"));
        assert_eq!(pieri_unshuffle(2, &Permutation::identity(), &w("2"), Variant::C).unwrap(), m);
    }

    #[test]
    fn monk_cover_list() {
        let rhs: BTreeSet<Permutation> = monk_rhs(&p("[321]"), 1).into_iter().collect();
        let expected: BTreeSet<Permutation> = ["[4213]", "tau^-1[3412]", "tau^-1[2431]"].iter().map(|s| p(s)).collect();
        assert_eq!(rhs, expected);
        let pi = p("[2431]");
        assert!(!pieri_relation(&pi, &pi, 2, 1, Variant::C));
        for i in 0..4 {
            assert_eq!(pieri_rhs(&pi, i, 1, Variant::C), pieri_rhs(&pi, i, 1, Variant::R));
        }
    }
}
