//! Pipe dreams, identified with their sets of crosses inside the staircase
//! `row + col ≤ n` of an `n × n` grid.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{compatible_sequences, demazure, is_compatible, lehmer, Permutation, Word};

/// A cell `(row, col)`, both 1-based.
pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PipeDream {
    n: usize,
    crosses: BTreeSet<Cell>,
}

impl PipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        if let Some(&(r, c)) = crosses.iter().find(|&&(r, c)| r == 0 || c == 0 || r + c > n) {
            return Err(Error::InvalidPipeDream(format!(
                "cross ({r},{c}) lies outside the staircase of size {n}"
            )));
        }
        Ok(PipeDream { n, crosses })
    }

    pub fn empty(n: usize) -> Self {
        PipeDream {
            n,
            crosses: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<Cell> {
        &self.crosses
    }

    pub fn has_cross(&self, cell: Cell) -> bool {
        self.crosses.contains(&cell)
    }

    fn in_staircase(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && r + c <= self.n
    }

    /// Crosses in reading order: rows top to bottom, right to left in a row.
    fn reading_order(&self) -> impl Iterator<Item = Cell> + '_ {
        let mut cells: Vec<Cell> = self.crosses.iter().copied().collect();
        cells.sort_by_key(|&(r, c)| (r, std::cmp::Reverse(c)));
        cells.into_iter()
    }

    /// The antidiagonal `row + col − 1` of each cross in reading order.
    pub fn reading_word(&self) -> Word {
        Word::new(self.reading_order().map(|(r, c)| (r + c - 1) as i64).collect())
    }

    /// The row of each cross in reading order, a compatible sequence for the
    /// reading word.
    pub fn rows(&self) -> Vec<i64> {
        self.reading_order().map(|(r, _)| r as i64).collect()
    }

    /// Inverse of `(reading_word, rows)`.
    pub fn from_word_and_rows(w: &Word, rows: &[i64], n: usize) -> Result<Self> {
        if !is_compatible(w, rows) || rows.iter().any(|&r| r < 1) {
            return Err(Error::InvalidPipeDream(format!(
                "{rows:?} is not a positive compatible sequence for {w}"
            )));
        }
        let mut crosses = BTreeSet::new();
        for (&l, &r) in w.letters().iter().zip(rows) {
            let cell = (r as usize, (l - r + 1) as usize);
            if !crosses.insert(cell) {
                return Err(Error::InvalidPipeDream(format!(
                    "word {w} with rows {rows:?} places two crosses in cell {cell:?}"
                )));
            }
        }
        PipeDream::new(n, crosses)
    }

    /// Demazure product of the reading word.
    pub fn permutation(&self) -> Permutation {
        demazure(&self.reading_word())
    }

    /// Number of crosses where the pipes have already crossed.
    pub fn excess(&self) -> usize {
        self.crosses.len() - self.permutation().length()
    }

    pub fn is_reduced(&self) -> bool {
        self.excess() == 0
    }

    /// Crosses per row, rows `1..n`.
    pub fn weight(&self) -> Vec<usize> {
        let mut out = vec![0; self.n.saturating_sub(1)];
        for &(r, _) in &self.crosses {
            out[r - 1] += 1;
        }
        out
    }

    /// The leftmost cross of each non-empty row lies in column 1 or weakly
    /// left of some cross in the row below.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        let mut leftmost = vec![usize::MAX; self.n + 1];
        let mut rightmost = vec![0; self.n + 2];
        for &(r, c) in &self.crosses {
            leftmost[r] = leftmost[r].min(c);
            rightmost[r] = rightmost[r].max(c);
        }
        (1..self.n).all(|r| {
            let c = leftmost[r];
            c == usize::MAX || c == 1 || rightmost[r + 1] >= c
        })
    }

    fn toggled(&self, a: Cell, b: Cell) -> Option<PipeDream> {
        if !self.in_staircase(a) || !self.in_staircase(b) {
            return None;
        }
        let mut crosses = self.crosses.clone();
        for cell in [a, b] {
            if !crosses.remove(&cell) {
                crosses.insert(cell);
            }
        }
        Some(PipeDream { n: self.n, crosses })
    }

    /// All pipe dreams reachable by one chute move in either direction.
    pub fn chute_moves(&self) -> Vec<PipeDream> {
        self.moves(|r, c| (r, c))
    }

    /// All pipe dreams reachable by one ladder move in either direction.
    pub fn ladder_moves(&self) -> Vec<PipeDream> {
        self.moves(|r, c| (c, r))
    }

    /// Chute moves in coordinates mapped by `t`; the transpose gives ladders.
    fn moves(&self, t: impl Fn(usize, usize) -> Cell) -> Vec<PipeDream> {
        let cross = |r: usize, c: usize| self.crosses.contains(&t(r, c));
        let mut out = BTreeSet::new();
        for i in 1..self.n {
            for j in 1..self.n {
                for k in 0..self.n {
                    let far = j + k + 1;
                    if !(self.in_staircase(t(i, far)) || self.in_staircase(t(i + 1, j))) {
                        break;
                    }
                    if cross(i, j) || cross(i + 1, far) {
                        continue;
                    }
                    if !(j + 1..far).all(|b| cross(i, b) && cross(i + 1, b)) {
                        continue;
                    }
                    if cross(i + 1, j) != cross(i, far) {
                        if let Some(p) = self.toggled(t(i + 1, j), t(i, far)) {
                            out.insert(p);
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Crosses at `(i, j)` for `j ≤ Leh(π)_i`.
pub fn bottom_pipe_dream(pi: &Permutation, n: usize) -> Result<PipeDream> {
    let code = lehmer(pi)?;
    let crosses = code
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (1..=l).map(move |j| (i + 1, j)));
    PipeDream::new(n, crosses)
}

/// Smallest ambient size holding pipe dreams for `π`.
pub fn minimal_ambient(pi: &Permutation) -> Result<usize> {
    pi.rank()
        .ok_or_else(|| Error::NotInSInfinity(pi.to_string()))
}

/// Reduced pipe dreams for `π` as the closure of the bottom pipe dream under
/// chute and ladder moves, sorted.
pub fn reduced_pipe_dreams(pi: &Permutation, n: usize) -> Result<Vec<PipeDream>> {
    let start = bottom_pipe_dream(pi, n)?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for q in p.chute_moves().into_iter().chain(p.ladder_moves()) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Pipe dreams for `π` in ambient `n` with excess at most `max_excess`, found
/// among subsets of the staircase; `None` means no bound.
pub fn all_pipe_dreams(pi: &Permutation, n: usize, max_excess: Option<usize>) -> Result<Vec<PipeDream>> {
    minimal_ambient(pi)?;
    let cells: Vec<Cell> = (1..n)
        .flat_map(|r| (1..=n - r).map(move |c| (r, c)))
        .collect();
    let len = pi.length();
    let max_crosses = max_excess.map_or(cells.len(), |e| (len + e).min(cells.len()));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    subsets(&cells, 0, max_crosses, &mut chosen, &mut |set: &[Cell]| {
        if set.len() < len {
            return;
        }
        let p = PipeDream {
            n,
            crosses: set.iter().copied().collect(),
        };
        if &p.permutation() == pi {
            out.push(p);
        }
    });
    out.sort();
    Ok(out)
}

fn subsets(cells: &[Cell], k: usize, max: usize, chosen: &mut Vec<Cell>, f: &mut dyn FnMut(&[Cell])) {
    if k == cells.len() {
        f(chosen);
        return;
    }
    subsets(cells, k + 1, max, chosen, f);
    if chosen.len() < max {
        chosen.push(cells[k]);
        subsets(cells, k + 1, max, chosen, f);
        chosen.pop();
    }
}

/// Reduced pipe dreams by closure, or all pipe dreams up to `max_excess`.
pub fn enumerate_pipe_dreams(
    pi: &Permutation,
    reduced_only: bool,
    max_excess: Option<usize>,
) -> Result<Vec<PipeDream>> {
    let n = minimal_ambient(pi)?;
    if reduced_only {
        reduced_pipe_dreams(pi, n)
    } else {
        all_pipe_dreams(pi, n, max_excess)
    }
}

/// The quasi-Yamanouchi pipe dream with reading word `w`, if any, in the
/// smallest ambient holding the letters of `w`.
pub fn qy_pipe_dream_for_word(w: &Word) -> Option<PipeDream> {
    if w.min_letter().is_some_and(|m| m < 1) {
        return None;
    }
    let n = w.max_letter().map_or(1, |m| m as usize + 1);
    compatible_sequences(w, 1)
        .into_iter()
        .filter_map(|s| PipeDream::from_word_and_rows(w, &s, n).ok())
        .find(PipeDream::is_quasi_yamanouchi)
}

/// ASCII picture: `+` for crosses, `.` for the other staircase cells, with
/// `π` down the left edge.
pub fn render_ascii(p: &PipeDream) -> String {
    let pi = p.permutation();
    let width = p.n.to_string().len().max(pi.one_line(p.n).iter().map(|v| v.to_string().len()).max().unwrap_or(1));
    let mut s = String::new();
    let _ = write!(s, "{:width$} ", "");
    for c in 1..=p.n {
        let _ = write!(s, " {c:>width$}");
    }
    s.push('\n');
    for r in 1..=p.n {
        let _ = write!(s, "{:>width$} ", pi.apply(r as i64));
        for c in 1..=p.n + 1 - r {
            let ch = if p.has_cross((r, c)) { '+' } else { '.' };
            let _ = write!(s, " {ch:>width$}");
        }
        s.push('\n');
    }
    s
}

/// SVG picture with crosses drawn as two crossing strokes.
pub fn render_svg(p: &PipeDream) -> String {
    const UNIT: usize = 30;
    let size = UNIT * (p.n + 1);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    );
    let pi = p.permutation();
    for c in 1..=p.n {
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{c}</text>",
            c * UNIT + UNIT / 2,
            UNIT * 2 / 3
        );
    }
    for r in 1..=p.n {
        let y = r * UNIT;
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            UNIT / 2,
            y + UNIT * 2 / 3,
            pi.apply(r as i64)
        );
        for c in 1..=p.n + 1 - r {
            let x = c * UNIT;
            let _ = writeln!(
                s,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"none\" stroke=\"#ccc\"/>"
            );
            if p.has_cross((r, c)) {
                let (mx, my) = (x + UNIT / 2, y + UNIT / 2);
                let _ = writeln!(
                    s,
                    "  <path d=\"M{x} {my} H{} M{mx} {y} V{}\" stroke=\"black\" stroke-width=\"2\"/>",
                    x + UNIT,
                    y + UNIT
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reading_words_of_246135() {
        let rows = [1, 1, 2, 2, 3, 3];
        let a = PipeDream::from_word_and_rows(&w("315243"), &rows, 6).unwrap();
        assert_eq!(a.reading_word(), w("315243"));
        assert_eq!(a.rows(), rows);
        assert_eq!(a.permutation(), p("[246135]"));
        let b = PipeDream::from_word_and_rows(&w("513243"), &rows, 6).unwrap();
        assert!(b.is_reduced());
        let c = PipeDream::from_word_and_rows(&w("53153243"), &[1, 1, 1, 2, 2, 2, 3, 3], 6).unwrap();
        assert_eq!(c.permutation(), p("[246135]"));
        assert_eq!(c.excess(), 2);
        assert_eq!(PipeDream::empty(3).reading_word(), Word::empty());
    }

    #[test]
    fn from_word_and_rows_rejects_bad_input() {
        assert!(PipeDream::from_word_and_rows(&w("12"), &[1, 1], 3).is_err());
        assert!(PipeDream::from_word_and_rows(&w("11"), &[1, 1], 3).is_err());
        assert!(PipeDream::from_word_and_rows(&w("3"), &[1], 3).is_err());
        assert_eq!(
            PipeDream::from_word_and_rows(&Word::empty(), &[], 3).unwrap(),
            PipeDream::empty(3)
        );
    }

    #[test]
    fn bottom_pipe_dreams() {
        assert_eq!(bottom_pipe_dream(&Permutation::identity(), 3).unwrap(), PipeDream::empty(3));
        let b = bottom_pipe_dream(&p("[321]"), 3).unwrap();
        assert_eq!(b.crosses(), &BTreeSet::from([(1, 1), (1, 2), (2, 1)]));
        let b = bottom_pipe_dream(&p("[15243]"), 5).unwrap();
        assert_eq!(b.permutation(), p("[15243]"));
        assert!(b.is_quasi_yamanouchi());
    }

    #[test]
    fn enumeration_of_1432() {
        let pds = enumerate_pipe_dreams(&p("[1432]"), true, None).unwrap();
        assert_eq!(pds.len(), 5);
        assert_eq!(enumerate_pipe_dreams(&Permutation::identity(), true, None).unwrap().len(), 1);
        assert!(PipeDream::empty(4).chute_moves().is_empty());
        let mut qy: Vec<(String, Vec<usize>)> = pds
            .iter()
            .filter(|d| d.is_quasi_yamanouchi())
            .map(|d| (d.reading_word().to_string(), d.weight()))
            .collect();
        qy.sort();
        assert_eq!(qy, vec![("232".into(), vec![1, 2, 0]), ("323".into(), vec![0, 2, 1])]);
    }

    #[test]
    fn qy_for_words() {
        assert_eq!(qy_pipe_dream_for_word(&w("21")).unwrap().weight(), vec![2, 0]);
        assert_eq!(qy_pipe_dream_for_word(&w("31")).unwrap().weight(), vec![2, 0, 0]);
        assert_eq!(qy_pipe_dream_for_word(&w("12")).unwrap().weight(), vec![1, 1]);
        assert!(qy_pipe_dream_for_word(&w("121")).is_none());
    }

    #[test]
    fn rendering() {
        let b = bottom_pipe_dream(&p("[321]"), 3).unwrap();
        assert_eq!(render_ascii(&b), "   1 2 3\n3  + + .\n2  + .\n1  .\n");
        assert!(render_svg(&b).starts_with("<svg"));
    }
}
