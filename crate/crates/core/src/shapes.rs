//! Partitions, compositions, weak compositions and kompositions; the tableau
//! families SYT, SSYT, CT and WCT together with their set-valued versions.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    Partition,
    Composition,
    WeakComposition,
}

/// A Young diagram given by its row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    kind: ShapeKind,
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(kind: ShapeKind, parts: Vec<usize>) -> Result<Self> {
        let ok = match kind {
            ShapeKind::Partition => {
                parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
            }
            ShapeKind::Composition => parts.iter().all(|&p| p > 0),
            ShapeKind::WeakComposition => true,
        };
        if ok {
            Ok(Shape { kind, parts })
        } else {
            Err(Error::InvalidShape(format!("{parts:?} is not a {kind:?}")))
        }
    }

    pub fn partition(parts: &[usize]) -> Result<Self> {
        Self::new(ShapeKind::Partition, parts.to_vec())
    }

    pub fn composition(parts: &[usize]) -> Result<Self> {
        Self::new(ShapeKind::Composition, parts.to_vec())
    }

    pub fn weak_composition(parts: &[usize]) -> Self {
        Shape {
            kind: ShapeKind::WeakComposition,
            parts: parts.to_vec(),
        }
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Boxes `(row, col)`, 1-based, in reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", s.join(","))
}

/// Parses `(3,0,2,2)`, `3,0,2,2` or `3022` into a list of parts.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    if inner.contains(',') {
        inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(s, 0, "expected a non-negative integer"))
            })
            .collect()
    } else {
        inner
            .chars()
            .enumerate()
            .map(|(k, c)| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::parse(s, k, "expected a digit"))
            })
            .collect()
    }
}

/// A weak composition with some non-zero entries bold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Komposition {
    parts: Vec<usize>,
    bold: Vec<bool>,
}

impl Komposition {
    pub fn new(parts: Vec<usize>, bold: Vec<bool>) -> Result<Self> {
        if parts.len() != bold.len() || parts.iter().zip(&bold).any(|(&p, &b)| b && p == 0) {
            return Err(Error::InvalidShape(
                "bold flags must sit on non-zero entries".to_string(),
            ));
        }
        Ok(Komposition { parts, bold })
    }

    pub fn plain(parts: &[usize]) -> Self {
        Komposition {
            parts: parts.to_vec(),
            bold: vec![false; parts.len()],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn bold(&self) -> &[bool] {
        &self.bold
    }

    pub fn excess(&self) -> usize {
        self.bold.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for Komposition {
    /// Bold entries are written with a trailing `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts
            .iter()
            .zip(&self.bold)
            .map(|(p, &b)| if b { format!("{p}*") } else { p.to_string() })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Komposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let mut parts = Vec::new();
        let mut bold = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (num, b) = match tok.strip_suffix('*') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            parts.push(
                num.parse::<usize>()
                    .map_err(|_| Error::parse(s, 0, "expected a non-negative integer"))?,
            );
            bold.push(b);
        }
        Komposition::new(parts, bold)
    }
}

/// Drops the zero parts.
pub fn flatten(c: &[usize]) -> Vec<usize> {
    c.iter().copied().filter(|&p| p > 0).collect()
}

/// `a` refines `b`: consecutive blocks of `a` sum to the parts of `b`.
pub fn refines(a: &[usize], b: &[usize]) -> bool {
    if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    let sa: BTreeSet<usize> = comp_to_set(a);
    comp_to_set(b).is_subset(&sa)
}

/// Prefix sums of `a` dominate those of `b`; missing parts count as zero.
pub fn dominates(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

/// `(λ₁, …, λ_k) ↦ {λ₁, λ₁+λ₂, …, λ₁+⋯+λ_{k−1}}`.
pub fn comp_to_set(c: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut acc = 0;
    for &p in c.iter().take(c.len().saturating_sub(1)) {
        acc += p;
        out.insert(acc);
    }
    out
}

/// Inverse of [`comp_to_set`] for compositions of `n`.
pub fn set_to_comp(s: &BTreeSet<usize>, n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prev = 0;
    for &i in s.iter().filter(|&&i| i > 0 && i < n) {
        out.push(i - prev);
        prev = i;
    }
    out.push(n - prev);
    out
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..1usize << (n - 1))
        .map(|mask| {
            let set: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            set_to_comp(&set, n)
        })
        .collect()
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            go(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All weak compositions with exactly `len` parts summing to `n`.
pub fn weak_compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, len: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if n == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for p in 0..=n {
            acc.push(p);
            go(n - p, len - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, len, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Syt,
    Ssyt,
    Ct,
    Wct,
}

impl Family {
    fn check_shape(self, shape: &Shape) -> Result<()> {
        let ok = match self {
            Family::Syt | Family::Ssyt => shape.kind == ShapeKind::Partition,
            Family::Ct => shape.kind != ShapeKind::WeakComposition || !shape.parts.contains(&0),
            Family::Wct => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidShape(format!(
                "{self:?} tableaux need a different shape kind than {:?}",
                shape.kind
            )))
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "syt" => Ok(Family::Syt),
            "ssyt" => Ok(Family::Ssyt),
            "ct" => Ok(Family::Ct),
            "wct" => Ok(Family::Wct),
            _ => Err(Error::parse(s, 0, "expected one of syt, ssyt, ct, wct")),
        }
    }
}

/// A filling of a shape by positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i64>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape_parts(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    /// Entries `(row, col, value)` in reading order.
    pub fn cells(&self) -> Vec<(usize, usize, i64)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r + 1, c + 1, v)))
            .collect()
    }

    /// `content[v - 1]` is the number of boxes holding `v`, for `v ≤ n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (_, _, v) in self.cells() {
            if v >= 1 && (v as usize) <= n {
                out[v as usize - 1] += 1;
            }
        }
        out
    }

    pub fn max_entry(&self) -> i64 {
        self.cells().iter().map(|c| c.2).max().unwrap_or(0)
    }

    /// Membership in `family` with entries at most `n`.
    pub fn is_member(&self, family: Family, n: usize) -> bool {
        let cells = self.cells();
        if cells.iter().any(|&(_, _, v)| v < 1 || v as usize > n) {
            return false;
        }
        match family {
            Family::Syt | Family::Ssyt => {
                let lens = self.shape_parts();
                if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
                    return false;
                }
                let strict_rows = family == Family::Syt;
                for &(r, c, v) in &cells {
                    if c > 1 {
                        let left = self.rows[r - 1][c - 2];
                        if left > v || (strict_rows && left == v) {
                            return false;
                        }
                    }
                    if r > 1 && self.rows[r - 2][c - 1] >= v {
                        return false;
                    }
                }
                if family == Family::Syt {
                    let mut values: Vec<i64> = cells.iter().map(|c| c.2).collect();
                    values.sort_unstable();
                    return values.iter().enumerate().all(|(k, &v)| v == k as i64 + 1);
                }
                true
            }
            Family::Ct | Family::Wct => {
                if family == Family::Ct && self.rows.iter().any(Vec::is_empty) {
                    return false;
                }
                let mut prev_row_max = i64::MIN;
                for (r, row) in self.rows.iter().enumerate() {
                    if row.windows(2).any(|w| w[0] > w[1]) {
                        return false;
                    }
                    if let (Some(&first), Some(&last)) = (row.first(), row.last()) {
                        if first <= prev_row_max {
                            return false;
                        }
                        if family == Family::Wct && last > r as i64 + 1 {
                            return false;
                        }
                        prev_row_max = last;
                    }
                }
                true
            }
        }
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by `/`, entries by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Vec<i64>>::deserialize(deserializer).map(Tableau::new)
    }
}

/// All tableaux of `family` and `shape` with entries at most `n`.
///
/// For SYT the entries are `1..=|λ|` regardless of `n`.
pub fn enumerate_tableaux(family: Family, shape: &Shape, n: usize) -> Result<Vec<Tableau>> {
    family.check_shape(shape)?;
    let n = if family == Family::Syt { shape.size() } else { n };
    let boxes = shape.boxes();
    let mut rows: Vec<Vec<i64>> = shape.parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    fill(family, &boxes, 0, n as i64, &mut rows, &mut used, &mut out);
    Ok(out)
}

fn fill(
    family: Family,
    boxes: &[(usize, usize)],
    k: usize,
    n: i64,
    rows: &mut Vec<Vec<i64>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Tableau>,
) {
    if k == boxes.len() {
        out.push(Tableau::new(rows.clone()));
        return;
    }
    let (r, c) = boxes[k];
    let left = if c > 1 { Some(rows[r - 1][c - 2]) } else { None };
    let (lo, hi) = match family {
        Family::Syt | Family::Ssyt => {
            let mut lo = 1;
            if let Some(l) = left {
                lo = lo.max(if family == Family::Syt { l + 1 } else { l });
            }
            if r > 1 {
                lo = lo.max(rows[r - 2][c - 1] + 1);
            }
            (lo, n)
        }
        Family::Ct | Family::Wct => {
            let lo = match left {
                Some(l) => l,
                None => rows[..r - 1]
                    .iter()
                    .rev()
                    .find_map(|row| row.last().map(|v| v + 1))
                    .unwrap_or(1),
            };
            let hi = if family == Family::Wct { n.min(r as i64) } else { n };
            (lo, hi)
        }
    };
    for v in lo..=hi {
        if family == Family::Syt && used[v as usize] {
            continue;
        }
        if family == Family::Syt {
            used[v as usize] = true;
        }
        rows[r - 1].push(v);
        fill(family, boxes, k + 1, n, rows, used, out);
        rows[r - 1].pop();
        if family == Family::Syt {
            used[v as usize] = false;
        }
    }
}

/// Replaces equal entries by consecutive integers from left to right.
pub fn standardize(t: &Tableau) -> Tableau {
    let mut cells = t.cells();
    cells.sort_by_key(|&(r, c, v)| (v, c, std::cmp::Reverse(r)));
    let mut rows: Vec<Vec<i64>> = t.rows.iter().map(|r| vec![0; r.len()]).collect();
    for (k, &(r, c, _)) in cells.iter().enumerate() {
        rows[r - 1][c - 1] = k as i64 + 1;
    }
    Tableau::new(rows)
}

/// `{i : i is in a strictly higher row than i + 1}` for a standard tableau.
pub fn descent_set(t: &Tableau) -> BTreeSet<usize> {
    let cells = t.cells();
    let size = cells.len();
    let mut row_of = vec![0; size + 2];
    for &(r, _, v) in &cells {
        row_of[v as usize] = r;
    }
    (1..size).filter(|&i| row_of[i] < row_of[i + 1]).collect()
}

/// A filling of a shape by non-empty sets of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    rows: Vec<Vec<BTreeSet<i64>>>,
}

impl SetValuedTableau {
    pub fn new(rows: Vec<Vec<BTreeSet<i64>>>) -> Self {
        SetValuedTableau { rows }
    }

    pub fn from_vecs(rows: Vec<Vec<Vec<i64>>>) -> Self {
        SetValuedTableau {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|b| b.into_iter().collect()).collect())
                .collect(),
        }
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        SetValuedTableau {
            rows: t
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| BTreeSet::from([v])).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<BTreeSet<i64>>] {
        &self.rows
    }

    pub fn shape_parts(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Total number of entries.
    pub fn size(&self) -> usize {
        self.rows.iter().flatten().map(BTreeSet::len).sum()
    }

    pub fn has_empty_box(&self) -> bool {
        self.rows.iter().flatten().any(BTreeSet::is_empty)
    }

    /// Entries `(row, col, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                out.extend(b.iter().map(|&v| (r + 1, c + 1, v)));
            }
        }
        out
    }

    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (_, _, v) in self.entries() {
            if v >= 1 && (v as usize) <= n {
                out[v as usize - 1] += 1;
            }
        }
        out
    }

    /// Content with `κ_j` bold when `j` shares a box with a smaller value.
    pub fn kontent(&self, n: usize) -> Komposition {
        let parts = self.content(n);
        let mut bold = vec![false; n];
        for b in self.rows.iter().flatten() {
            for &v in b.iter().skip(1) {
                if v >= 1 && (v as usize) <= n {
                    bold[v as usize - 1] = true;
                }
            }
        }
        Komposition { parts, bold }
    }

    /// Every way of picking one entry per box, in lexicographic order.
    pub fn selections(&self) -> Vec<Tableau> {
        let mut out = vec![Vec::<Vec<i64>>::new()];
        for row in &self.rows {
            let mut next = Vec::new();
            for partial in &out {
                let mut row_choices = vec![Vec::<i64>::new()];
                for b in row {
                    row_choices = row_choices
                        .into_iter()
                        .flat_map(|r| {
                            b.iter().map(move |&v| {
                                let mut r = r.clone();
                                r.push(v);
                                r
                            })
                        })
                        .collect();
                }
                for choice in row_choices {
                    let mut p = partial.clone();
                    p.push(choice);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Tableau::new).collect()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.shape_parts() == t.shape_parts()
            && t.cells()
                .iter()
                .all(|&(r, c, v)| self.rows[r - 1][c - 1].contains(&v))
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|b| {
                        let vals: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                        format!("{{{}}}", vals.join(","))
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl Serialize for SetValuedTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetValuedTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Vec<BTreeSet<i64>>>::deserialize(deserializer).map(SetValuedTableau::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetValuedClass {
    SetValued,
    LimitSetValued,
    Neither,
}

/// Classifies by testing every selection function against the family.
pub fn classify_set_valued(t: &SetValuedTableau, family: Family, n: usize) -> SetValuedClass {
    if t.has_empty_box() {
        return SetValuedClass::Neither;
    }
    let sel = t.selections();
    let hits = sel.iter().filter(|s| s.is_member(family, n)).count();
    if hits == sel.len() {
        SetValuedClass::SetValued
    } else if hits > 0 {
        SetValuedClass::LimitSetValued
    } else {
        SetValuedClass::Neither
    }
}

/// All set-valued weak composition tableaux of shape `shape`.
pub fn set_valued_wct(shape: &[usize]) -> Vec<SetValuedTableau> {
    fn go(
        shape: &[usize],
        r: usize,
        c: usize,
        lo: i64,
        rows: &mut Vec<Vec<BTreeSet<i64>>>,
        out: &mut Vec<SetValuedTableau>,
    ) {
        if r == shape.len() {
            out.push(SetValuedTableau::new(rows.clone()));
            return;
        }
        if c == shape[r] {
            let next_lo = rows[r].last().and_then(|b| b.last()).map_or(lo, |&m| m + 1);
            go(shape, r + 1, 0, next_lo, rows, out);
            return;
        }
        let cap = r as i64 + 1;
        for min in lo..=cap {
            let rest: Vec<i64> = (min + 1..=cap).collect();
            for mask in 0..1u32 << rest.len() {
                let mut b = BTreeSet::from([min]);
                b.extend(rest.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v));
                let next = *b.last().expect("non-empty");
                rows[r].push(b);
                go(shape, r, c + 1, next, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape, 0, 0, 1, &mut rows, &mut out);
    out
}

/// Whether `kappa` is a glide of `lambda`: a search over block ends
/// `0 = i₀ < i₁ < ⋯ < i_l` with one block per non-zero part of `lambda`.
pub fn is_glide(kappa: &Komposition, lambda: &[usize]) -> bool {
    let nonzero: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] > 0).collect();
    let kp = &kappa.parts;
    let kb = &kappa.bold;
    fn block_ok(kp: &[usize], kb: &[bool], from: usize, to: usize, target: usize) -> bool {
        let sum: usize = kp[from..to].iter().sum();
        let excess = kb[from..to].iter().filter(|&&b| b).count();
        let first_plain = kp[from..to]
            .iter()
            .zip(&kb[from..to])
            .find(|(&p, _)| p > 0)
            .is_none_or(|(_, &b)| !b);
        sum == target + excess && first_plain
    }
    fn go(kp: &[usize], kb: &[bool], lambda: &[usize], nz: &[usize], j: usize, start: usize) -> bool {
        if j == nz.len() {
            return kp[start..].iter().all(|&p| p == 0);
        }
        let max_end = (nz[j] + 1).min(kp.len());
        (start + 1..=max_end).any(|end| {
            block_ok(kp, kb, start, end, lambda[nz[j]]) && go(kp, kb, lambda, nz, j + 1, end)
        })
    }
    go(kp, kb, lambda, &nonzero, 0, 0)
}

/// All glides of `lambda`, as kompositions with `lambda.len()` parts.
pub fn glides(lambda: &[usize]) -> Vec<Komposition> {
    let nz: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] > 0).collect();
    let len = lambda.len();
    let mut found: HashSet<Komposition> = HashSet::new();

    // fills positions start..end with a block summing to target + excess
    #[allow(clippy::too_many_arguments)]
    fn block(
        pos: usize,
        end: usize,
        remaining: isize,
        seen_nonzero: bool,
        parts: &mut Vec<usize>,
        bold: &mut Vec<bool>,
        on_done: &mut dyn FnMut(&mut Vec<usize>, &mut Vec<bool>),
    ) {
        if pos == end {
            if remaining == 0 {
                on_done(parts, bold);
            }
            return;
        }
        if remaining < 0 {
            return;
        }
        for v in 0..=remaining as usize + (end - pos) {
            for b in [false, true] {
                if b && (v == 0 || !seen_nonzero) {
                    continue;
                }
                // a bold entry raises the required sum by one
                let rem = remaining - v as isize + b as isize;
                parts[pos] = v;
                bold[pos] = b;
                block(pos + 1, end, rem, seen_nonzero || v > 0, parts, bold, on_done);
            }
        }
        parts[pos] = 0;
        bold[pos] = false;
    }

    fn blocks(
        lambda: &[usize],
        nz: &[usize],
        j: usize,
        start: usize,
        parts: &mut Vec<usize>,
        bold: &mut Vec<bool>,
        found: &mut HashSet<Komposition>,
    ) {
        if j == nz.len() {
            found.insert(Komposition {
                parts: parts.clone(),
                bold: bold.clone(),
            });
            return;
        }
        for end in start + 1..=nz[j] + 1 {
            block(
                start,
                end,
                lambda[nz[j]] as isize,
                false,
                parts,
                bold,
                &mut |p, b| blocks(lambda, nz, j + 1, end, p, b, found),
            );
        }
    }

    let mut parts = vec![0; len];
    let mut bold = vec![false; len];
    blocks(lambda, &nz, 0, 0, &mut parts, &mut bold, &mut found);
    let mut out: Vec<Komposition> = found.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kompo(s: &str) -> Komposition {
        s.parse().unwrap()
    }

    #[test]
    fn composition_helpers() {
        assert_eq!(flatten(&[2, 0, 5, 4]), vec![2, 5, 4]);
        assert_eq!(comp_to_set(&[2, 3, 1]), BTreeSet::from([2, 5]));
        assert_eq!(set_to_comp(&BTreeSet::from([2, 5]), 6), vec![2, 3, 1]);
        assert!(refines(&[1, 1, 1], &[2, 1]));
        assert!(!refines(&[1, 2], &[2, 1]));
        assert!(dominates(&[2, 0, 1], &[1, 1, 1]));
        assert!(!dominates(&[0, 2], &[1, 1]));
        assert_eq!(compositions(3).len(), 4);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn tableau_counts() {
        let ssyt = enumerate_tableaux(Family::Ssyt, &Shape::partition(&[2, 1]).unwrap(), 3).unwrap();
        assert_eq!(ssyt.len(), 8);
        let ct = enumerate_tableaux(Family::Ct, &Shape::composition(&[1, 2, 1]).unwrap(), 4).unwrap();
        assert_eq!(ct.len(), 5);
        let wct = enumerate_tableaux(Family::Wct, &Shape::weak_composition(&[3, 0, 2, 2]), 4).unwrap();
        assert_eq!(wct.len(), 5);
        let syt = enumerate_tableaux(Family::Syt, &Shape::partition(&[3, 2]).unwrap(), 5).unwrap();
        assert_eq!(syt.len(), 5);
        assert!(enumerate_tableaux(Family::Ssyt, &Shape::weak_composition(&[1, 0]), 3).is_err());
        let empty = enumerate_tableaux(Family::Ssyt, &Shape::partition(&[]).unwrap(), 3).unwrap();
        assert_eq!(empty, vec![Tableau::new(vec![])]);
    }

    #[test]
    fn kontent_examples() {
        let t1 = SetValuedTableau::from_vecs(vec![vec![], vec![vec![1, 2]], vec![vec![3]]]);
        let t2 = SetValuedTableau::from_vecs(vec![vec![], vec![vec![1]], vec![vec![2, 3]]]);
        assert_eq!(t1.kontent(3), kompo("(1,1*,1)"));
        assert_eq!(t2.kontent(3), kompo("(1,1,1*)"));
        let single = SetValuedTableau::from_tableau(&Tableau::new(vec![vec![1, 1], vec![2]]));
        assert_eq!(single.kontent(2).excess(), 0);
        let wcts = set_valued_wct(&[0, 1, 1]);
        let with_content: Vec<_> = wcts.iter().filter(|t| t.content(3) == vec![1, 1, 1]).collect();
        assert_eq!(with_content.len(), 2);
    }

    #[test]
    fn glide_examples() {
        let lambda = [0, 1, 0, 0, 0, 3];
        assert!(is_glide(&kompo("(1,0,1,0,1*,3*)"), &lambda));
        assert!(is_glide(&kompo("(1,1*,0,2,0,2*)"), &lambda));
        assert!(!is_glide(&kompo("(0,1,1*,1,2,0)"), &lambda));
        assert!(is_glide(&Komposition::plain(&lambda), &lambda));
        let g = glides(&lambda);
        assert!(g.contains(&kompo("(1,0,1,0,1*,3*)")));
        assert!(g.iter().all(|k| is_glide(k, &lambda)));
    }

    #[test]
    fn standardization_and_descents() {
        let a = Tableau::new(vec![vec![1, 2], vec![3]]);
        let b = Tableau::new(vec![vec![1, 3], vec![2]]);
        assert_eq!(descent_set(&a), BTreeSet::from([2]));
        assert_eq!(descent_set(&b), BTreeSet::from([1]));
        assert_eq!(standardize(&a), a);
        assert_eq!(standardize(&Tableau::new(vec![vec![1, 1], vec![2]])), a);
        let t = Tableau::new(vec![vec![1, 1, 2], vec![2, 3]]);
        assert_eq!(standardize(&t), Tableau::new(vec![vec![1, 2, 4], vec![3, 5]]));
    }

    #[test]
    fn set_valued_classification() {
        let t = SetValuedTableau::from_tableau(&Tableau::new(vec![vec![1, 2], vec![3]]));
        assert_eq!(classify_set_valued(&t, Family::Ssyt, 3), SetValuedClass::SetValued);
        let col = SetValuedTableau::from_vecs(vec![vec![vec![1, 2]], vec![vec![2]]]);
        assert_eq!(classify_set_valued(&col, Family::Ssyt, 3), SetValuedClass::LimitSetValued);
        let bad = SetValuedTableau::from_vecs(vec![vec![vec![2]], vec![vec![1]]]);
        assert_eq!(classify_set_valued(&bad, Family::Ssyt, 3), SetValuedClass::Neither);
        let svt = SetValuedTableau::from_vecs(vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]);
        assert_eq!(classify_set_valued(&svt, Family::Ssyt, 3), SetValuedClass::SetValued);
    }
}
