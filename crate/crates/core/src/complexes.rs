//! Simplicial complexes given by their facets, with deletion, link,
//! vertex decomposition and ball/sphere classification; subword, slide and
//! tableau complexes.
//!
//! Vertices are integers in `0..64` and faces are stored as bitmasks.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{demazure, Permutation, Word};
use crate::shapes::{
    classify_set_valued, enumerate_tableaux, standardize, Family, SetValuedClass,
    SetValuedTableau, Shape, Tableau,
};

/// Largest number of vertices a complex may have.
pub const MAX_VERTICES: usize = 64;

type Mask = u64;

fn to_mask(face: &[usize]) -> Result<Mask> {
    face.iter().try_fold(0, |m, &v| {
        if v >= MAX_VERTICES {
            Err(Error::domain(format!("vertex {v} exceeds the limit of {MAX_VERTICES}")))
        } else {
            Ok(m | 1 << v)
        }
    })
}

fn from_mask(mut m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Keeps the maximal sets, sorted and deduplicated.
fn maximal(mut sets: Vec<Mask>) -> Vec<Mask> {
    sets.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    sets.dedup();
    let mut kept: Vec<Mask> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| is_subset(s, k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by_key(|&m| from_mask(m));
    kept
}

/// A simplicial complex on a vertex set, possibly with phantom vertices.
///
/// The void complex has no facets at all; `{∅}` has the empty facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Mask,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    pub fn new(vertices: &[usize], facets: &[Vec<usize>]) -> Result<Self> {
        let mut vmask = to_mask(vertices)?;
        let mut fmasks = Vec::with_capacity(facets.len());
        for f in facets {
            let m = to_mask(f)?;
            vmask |= m;
            fmasks.push(m);
        }
        Ok(SimplicialComplex {
            vertices: vmask,
            facets: maximal(fmasks),
        })
    }

    fn from_masks(vertices: Mask, facets: Vec<Mask>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximal(facets),
        }
    }

    /// All subsets of `vertices`.
    pub fn simplex(vertices: &[usize]) -> Result<Self> {
        Self::new(vertices, &[vertices.to_vec()])
    }

    pub fn void(vertices: &[usize]) -> Result<Self> {
        Self::new(vertices, &[])
    }

    pub fn empty_face_only() -> Self {
        SimplicialComplex {
            vertices: 0,
            facets: vec![0],
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        from_mask(self.vertices)
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| from_mask(m)).collect()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices lying in no face.
    pub fn phantom_vertices(&self) -> Vec<usize> {
        let used = self.facets.iter().fold(0, |a, &f| a | f);
        from_mask(self.vertices & !used)
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        to_mask(face).is_ok_and(|m| self.is_face_mask(m))
    }

    fn is_face_mask(&self, m: Mask) -> bool {
        self.facets.iter().any(|&f| is_subset(m, f))
    }

    /// Largest facet dimension, `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    fn face_mask_checked(&self, face: &[usize]) -> Result<Mask> {
        let m = to_mask(face)?;
        if self.is_face_mask(m) {
            Ok(m)
        } else {
            Err(Error::NotAFace(format!("{face:?}")))
        }
    }

    /// Faces disjoint from `face`.
    pub fn deletion(&self, face: &[usize]) -> Result<Self> {
        let m = self.face_mask_checked(face)?;
        Ok(self.deletion_mask(m))
    }

    /// Faces disjoint from `face` whose union with it is a face.
    pub fn link(&self, face: &[usize]) -> Result<Self> {
        let m = self.face_mask_checked(face)?;
        Ok(self.link_mask(m))
    }

    fn deletion_mask(&self, m: Mask) -> Self {
        Self::from_masks(
            self.vertices & !m,
            self.facets.iter().map(|&f| f & !m).collect(),
        )
    }

    fn link_mask(&self, m: Mask) -> Self {
        Self::from_masks(
            self.vertices & !m,
            self.facets
                .iter()
                .filter(|&&f| is_subset(m, f))
                .map(|&f| f & !m)
                .collect(),
        )
    }

    fn face_masks(&self) -> HashSet<Mask> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            // walk every submask of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }

    /// Every face, sorted by size and then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.face_masks().into_iter().map(from_mask).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `Σ_F (−1)^{dim F}` over all faces including `∅`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_masks()
            .into_iter()
            .map(|m| if m.count_ones() % 2 == 0 { -1 } else { 1 })
            .sum()
    }

    /// Number of facets containing each codimension-one face of a pure
    /// complex.
    pub fn ridge_counts(&self) -> BTreeMap<Vec<usize>, usize> {
        self.ridge_masks()
            .into_iter()
            .map(|(m, c)| (from_mask(m), c))
            .collect()
    }

    fn ridge_masks(&self) -> HashMap<Mask, usize> {
        let mut counts = HashMap::new();
        for &f in &self.facets {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                *counts.entry(f & !bit).or_insert(0) += 1;
                rest &= rest - 1;
            }
        }
        counts
    }

    /// A vertex decomposition, trying vertices in ascending order.
    pub fn vertex_decomposition(&self) -> Option<Decomposition> {
        let mut memo = HashMap::new();
        decompose(&self.facets, &mut memo)
    }

    pub fn is_vertex_decomposable(&self) -> bool {
        self.vertex_decomposition().is_some()
    }

    /// Ball or sphere by vertex decomposability plus the codimension-one
    /// count, otherwise `Neither`.
    pub fn classify(&self) -> Classification {
        if self.is_void() || !self.is_pure() || !self.is_vertex_decomposable() {
            return Classification::Neither;
        }
        let counts = self.ridge_masks();
        if counts.values().any(|&c| c > 2) {
            return Classification::Neither;
        }
        let mut boundary: Vec<Vec<usize>> = counts
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(m, _)| from_mask(m))
            .collect();
        if boundary.is_empty() {
            Classification::Sphere
        } else {
            boundary.sort();
            Classification::Ball { boundary }
        }
    }

    /// Faces contained in a codimension-one face that lies in a single facet.
    pub fn boundary_faces(&self) -> Vec<Vec<usize>> {
        let ridges: Vec<Mask> = self
            .ridge_masks()
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(m, _)| m)
            .collect();
        let mut out: Vec<Vec<usize>> = self
            .face_masks()
            .into_iter()
            .filter(|&f| ridges.iter().any(|&r| is_subset(f, r)))
            .map(from_mask)
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Minimal non-faces: the supports of the Stanley–Reisner generators.
    pub fn stanley_reisner_generators(&self) -> Vec<Vec<usize>> {
        let faces = self.face_masks();
        let mut gens = BTreeSet::new();
        for &f in &faces {
            for v in from_mask(self.vertices & !f) {
                let g = f | 1 << v;
                if faces.contains(&g) {
                    continue;
                }
                if from_mask(g).iter().all(|&u| faces.contains(&(g & !(1 << u)))) {
                    gens.insert(from_mask(g));
                }
            }
        }
        gens.into_iter().collect()
    }

    /// Graphviz rendering of the 1-skeleton, with facets listed as comments.
    pub fn to_dot(&self, label: &dyn Fn(usize) -> String) -> String {
        let mut s = String::from("graph complex {\n");
        for f in self.facets() {
            let names: Vec<String> = f.iter().map(|&v| label(v)).collect();
            let _ = writeln!(s, "  // facet {{{}}}", names.join(", "));
        }
        for v in self.vertices() {
            let phantom = self.phantom_vertices().contains(&v);
            let style = if phantom { ", style=dashed" } else { "" };
            let _ = writeln!(s, "  v{v} [label=\"{}\"{style}];", label(v));
        }
        let mut edges = BTreeSet::new();
        for f in self.facets() {
            for (k, &a) in f.iter().enumerate() {
                for &b in &f[k + 1..] {
                    edges.insert((a, b));
                }
            }
        }
        for (a, b) in edges {
            let _ = writeln!(s, "  v{a} -- v{b};");
        }
        s.push_str("}\n");
        s
    }

    /// SVG drawing with vertices on a circle; triangles are shaded.
    pub fn to_svg(&self, label: &dyn Fn(usize) -> String) -> String {
        const SIZE: f64 = 400.0;
        let verts = self.vertices();
        let r = SIZE * 0.4;
        let pos: BTreeMap<usize, (f64, f64)> = verts
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let a = std::f64::consts::TAU * k as f64 / verts.len().max(1) as f64;
                (v, (SIZE / 2.0 + r * a.cos(), SIZE / 2.0 + r * a.sin()))
            })
            .collect();
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\">\n"
        );
        for f in self.facets() {
            let pts: Vec<String> = f
                .iter()
                .map(|v| format!("{:.1},{:.1}", pos[v].0, pos[v].1))
                .collect();
            match f.len() {
                3.. => {
                    let _ = writeln!(
                        s,
                        "  <polygon points=\"{}\" fill=\"#ddd\" stroke=\"black\"/>",
                        pts.join(" ")
                    );
                }
                2 => {
                    let _ = writeln!(s, "  <polyline points=\"{}\" stroke=\"black\"/>", pts.join(" "));
                }
                _ => {}
            }
        }
        for v in &verts {
            let (x, y) = pos[v];
            let _ = writeln!(s, "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\"/>");
            let _ = writeln!(
                s,
                "  <text x=\"{:.1}\" y=\"{:.1}\">{}</text>",
                x + 6.0,
                y - 6.0,
                label(*v)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertices: Vec<usize>,
            facets: Vec<Vec<usize>>,
        }
        Repr {
            vertices: self.vertices(),
            facets: self.facets(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<usize>,
            facets: Vec<Vec<usize>>,
        }
        let r = Repr::deserialize(deserializer)?;
        SimplicialComplex::new(&r.vertices, &r.facets).map_err(serde::de::Error::custom)
    }
}

/// A witness for vertex decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decomposition {
    /// The complex `{∅}`.
    Empty,
    Split {
        vertex: usize,
        deletion: Box<Decomposition>,
        link: Box<Decomposition>,
    },
}

fn decompose(facets: &[Mask], memo: &mut HashMap<Vec<Mask>, Option<Decomposition>>) -> Option<Decomposition> {
    if facets.is_empty() || !facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones()) {
        return None;
    }
    if facets == [0] {
        return Some(Decomposition::Empty);
    }
    if let Some(d) = memo.get(facets) {
        return d.clone();
    }
    let used = facets.iter().fold(0, |a, &f| a | f);
    let mut result = None;
    for v in from_mask(used) {
        let bit = 1 << v;
        let link = maximal(facets.iter().filter(|&&f| f & bit != 0).map(|&f| f & !bit).collect());
        let del = maximal(facets.iter().map(|&f| f & !bit).collect());
        let Some(l) = decompose(&link, memo) else { continue };
        let Some(d) = decompose(&del, memo) else { continue };
        result = Some(Decomposition::Split {
            vertex: v,
            deletion: Box::new(d),
            link: Box::new(l),
        });
        break;
    }
    memo.insert(facets.to_vec(), result.clone());
    result
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Classification {
    Sphere,
    /// A ball, with the codimension-one faces lying in a single facet.
    Ball { boundary: Vec<Vec<usize>> },
    Neither,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Sphere => "sphere",
            Classification::Ball { .. } => "ball",
            Classification::Neither => "neither",
        }
    }

    pub fn is_ball_or_sphere(&self) -> bool {
        !matches!(self, Classification::Neither)
    }
}

/// Position sets (1-based) of `Q` of size `k`.
fn position_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for p in start..=len {
            if len - p + 1 < k - acc.len() {
                break;
            }
            acc.push(p);
            go(p + 1, len, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(1, len, k, &mut Vec::new(), &mut out);
    out
}

fn subword(q: &Word, positions: &[usize]) -> Word {
    Word::new(positions.iter().map(|&p| q.letters()[p - 1]).collect())
}

fn complement(len: usize, positions: &[usize]) -> Vec<usize> {
    (1..=len).filter(|p| !positions.contains(p)).collect()
}

fn complex_from_embeddings(q: &Word, embeddings: impl Iterator<Item = Vec<usize>>) -> Result<SimplicialComplex> {
    let vertices: Vec<usize> = (1..=q.len()).collect();
    let facets: Vec<Vec<usize>> = embeddings.map(|e| complement(q.len(), &e)).collect();
    SimplicialComplex::new(&vertices, &facets)
}

/// `Δ(Q, π)` on the positions `1..=|Q|`: facets are complements of reduced
/// subwords for `π`. Void when `Q` does not contain `π`.
pub fn subword_complex(q: &Word, pi: &Permutation) -> Result<SimplicialComplex> {
    let len = pi.length();
    if len > q.len() {
        return complex_from_embeddings(q, std::iter::empty());
    }
    complex_from_embeddings(
        q,
        position_subsets(q.len(), len)
            .into_iter()
            .filter(|pos| &subword(q, pos).product() == pi),
    )
}

/// `Δ(Q, w)`: facets are complements of embeddings of the word `w`.
pub fn slide_complex(q: &Word, w: &Word) -> Result<SimplicialComplex> {
    delta_w(q, std::slice::from_ref(w))
}

/// `Δ_W(Q)`: facets are complements of embeddings of words in `W`.
pub fn delta_w(q: &Word, words: &[Word]) -> Result<SimplicialComplex> {
    let set: HashSet<&Word> = words.iter().collect();
    let lens: BTreeSet<usize> = words.iter().map(Word::len).collect();
    let embeddings = lens
        .into_iter()
        .filter(|&k| k <= q.len())
        .flat_map(|k| position_subsets(q.len(), k))
        .filter(|pos| set.contains(&subword(q, pos)));
    complex_from_embeddings(q, embeddings)
}

/// Whether `Dem(Q ∖ P) = π` fails, i.e. the face lies on the boundary of
/// `Δ(Q, π)` when that complex is a ball.
pub fn demazure_of_complement(q: &Word, face: &[usize]) -> Permutation {
    demazure(&subword(q, &complement(q.len(), face)))
}

/// Backwards saturation, for words that are all reduced for one permutation.
pub fn is_backwards_saturated(words: &[Word]) -> Result<bool> {
    if let Some(first) = words.first() {
        let pi = first.product();
        if let Some(bad) = words.iter().find(|w| !w.is_reduced() || w.product() != pi) {
            return Err(Error::domain(format!(
                "word {bad} is not a reduced word for {pi}"
            )));
        }
    }
    let set: BTreeSet<Word> = words.iter().cloned().collect();
    Ok(bs(&set))
}

fn bs(words: &BTreeSet<Word>) -> bool {
    let firsts: BTreeSet<i64> = words.iter().filter_map(|w| w.letters().first().copied()).collect();
    firsts.into_iter().all(|sigma| {
        let tails: BTreeSet<Word> = words
            .iter()
            .filter(|w| w.letters().first() == Some(&sigma))
            .map(|w| Word::new(w.letters()[1..].to_vec()))
            .collect();
        bs(&tails) && words.iter().all(|w| tails.iter().any(|t| w.contains_subword(t)))
    })
}

/// Which tableaux a tableau complex is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauComplexSpec {
    pub family: Family,
    pub shape: Shape,
    pub n: usize,
    /// Ambient set-valued tableau; the union of all tableaux when `None`.
    pub ambient: Option<SetValuedTableau>,
}

/// A tableau complex with its vertices identified with entries of `X`.
#[derive(Clone, Debug)]
pub struct TableauComplex {
    pub spec: TableauComplexSpec,
    /// Vertex `k` is the entry `entries[k] = (row, col, value)` of `X`.
    pub entries: Vec<(usize, usize, i64)>,
    pub tableaux: Vec<Tableau>,
    pub complex: SimplicialComplex,
}

impl TableauComplex {
    fn mask_of(&self, cells: impl Iterator<Item = (usize, usize, i64)>) -> Mask {
        cells.fold(0, |m, c| {
            let k = self.entries.binary_search(&c).expect("entry of X");
            m | 1 << k
        })
    }

    pub fn label(&self, v: usize) -> String {
        let (r, c, x) = self.entries[v];
        format!("({r},{c}):{x}")
    }

    /// `X ∖ F` as a set-valued filling (boxes may be empty).
    pub fn complement_of(&self, face: &[usize]) -> SetValuedTableau {
        let parts = self.spec.shape.parts();
        let mut rows: Vec<Vec<BTreeSet<i64>>> = parts.iter().map(|&p| vec![BTreeSet::new(); p]).collect();
        for (k, &(r, c, x)) in self.entries.iter().enumerate() {
            if !face.contains(&k) {
                rows[r - 1][c - 1].insert(x);
            }
        }
        SetValuedTableau::new(rows)
    }

    /// Faces whose complement is a set-valued tableau of the family.
    pub fn interior_faces(&self) -> Vec<Vec<usize>> {
        self.complex
            .faces()
            .into_iter()
            .filter(|f| {
                classify_set_valued(&self.complement_of(f), self.spec.family, self.spec.n)
                    == SetValuedClass::SetValued
            })
            .collect()
    }

    /// The facet `X ∖ T`.
    pub fn facet_of(&self, t: &Tableau) -> Vec<usize> {
        let all: Mask = if self.entries.len() == MAX_VERTICES {
            Mask::MAX
        } else {
            (1 << self.entries.len()) - 1
        };
        from_mask(all & !self.mask_of(t.cells().into_iter()))
    }
}

/// `Δ(𝒯, X)`: facets are the complements of the tableaux of the family.
pub fn tableau_complex(spec: &TableauComplexSpec) -> Result<TableauComplex> {
    let tableaux = enumerate_tableaux(spec.family, &spec.shape, spec.n)?;
    let entries: Vec<(usize, usize, i64)> = match &spec.ambient {
        Some(x) => {
            if let Some(t) = tableaux.iter().find(|t| !x.contains(t)) {
                return Err(Error::domain(format!("ambient tableau does not contain {t}")));
            }
            x.entries()
        }
        None => {
            let set: BTreeSet<(usize, usize, i64)> = tableaux.iter().flat_map(|t| t.cells()).collect();
            set.into_iter().collect()
        }
    };
    let mut entries = entries;
    entries.sort_unstable();
    entries.dedup();
    if entries.len() > MAX_VERTICES {
        return Err(Error::domain(format!(
            "tableau complex has {} vertices, more than {MAX_VERTICES}",
            entries.len()
        )));
    }
    let mut tc = TableauComplex {
        spec: spec.clone(),
        entries,
        tableaux,
        complex: SimplicialComplex::empty_face_only(),
    };
    let vertices: Vec<usize> = (0..tc.entries.len()).collect();
    let facets: Vec<Vec<usize>> = tc.tableaux.iter().map(|t| tc.facet_of(t)).collect();
    tc.complex = SimplicialComplex::new(&vertices, &facets)?;
    Ok(tc)
}

/// One class of the standardization decomposition of `Δ(SSYT_n(λ))`.
#[derive(Clone, Debug)]
pub struct StandardizationClass {
    pub standard: Tableau,
    pub members: Vec<Tableau>,
    pub complex: SimplicialComplex,
}

/// Splits the facets of `Δ(SSYT_n(λ))` by the standardization of their
/// tableaux; each class lives on the same vertex set.
pub fn ssyt_standardization_decomposition(lambda: &[usize], n: usize) -> Result<(TableauComplex, Vec<StandardizationClass>)> {
    let tc = tableau_complex(&TableauComplexSpec {
        family: Family::Ssyt,
        shape: Shape::partition(lambda)?,
        n,
        ambient: None,
    })?;
    let mut classes: BTreeMap<Tableau, Vec<Tableau>> = BTreeMap::new();
    for t in &tc.tableaux {
        classes.entry(standardize(t)).or_default().push(t.clone());
    }
    let vertices: Vec<usize> = (0..tc.entries.len()).collect();
    let out = classes
        .into_iter()
        .map(|(standard, members)| {
            let facets: Vec<Vec<usize>> = members.iter().map(|t| tc.facet_of(t)).collect();
            let complex = SimplicialComplex::new(&vertices, &facets)?;
            Ok(StandardizationClass {
                standard,
                members,
                complex,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((tc, out))
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
    fn deletion_and_link() {
        let d = SimplicialComplex::new(&[1, 2, 3, 4, 5, 6], &[vec![1, 2, 3, 4], vec![1, 6], vec![3, 4, 5]]).unwrap();
        assert_eq!(d.deletion(&[1]).unwrap().facets(), vec![vec![2, 3, 4], vec![3, 4, 5], vec![6]]);
        assert_eq!(d.link(&[1]).unwrap().facets(), vec![vec![2, 3, 4], vec![6]]);
        assert_eq!(d.link(&[]).unwrap().facets(), d.facets());
        assert!(d.link(&[5, 6]).is_err());
        let cone = SimplicialComplex::new(&[], &[vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        assert_eq!(cone.deletion(&[3]).unwrap().facets(), cone.link(&[3]).unwrap().facets());
    }

    #[test]
    fn vertex_decomposability() {
        assert!(SimplicialComplex::simplex(&[1, 2, 3, 4]).unwrap().is_vertex_decomposable());
        let bowtie = SimplicialComplex::new(&[], &[vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        assert!(bowtie.is_pure());
        assert!(!bowtie.is_vertex_decomposable());
        assert!(SimplicialComplex::empty_face_only().is_vertex_decomposable());
        assert!(!SimplicialComplex::void(&[1]).unwrap().is_vertex_decomposable());
    }

    #[test]
    fn classification() {
        let triangle = SimplicialComplex::new(&[], &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(triangle.classify(), Classification::Sphere);
        assert_eq!(triangle.reduced_euler_characteristic(), -1);
        let simplex = SimplicialComplex::simplex(&[1, 2, 3]).unwrap();
        assert_eq!(simplex.classify().name(), "ball");
        assert_eq!(simplex.reduced_euler_characteristic(), 0);
        assert_eq!(SimplicialComplex::empty_face_only().classify(), Classification::Sphere);
    }

    #[test]
    fn subword_complex_example() {
        let q = w("321323");
        let d = subword_complex(&q, &p("[1432]")).unwrap();
        let mut facets = d.facets();
        facets.sort();
        assert_eq!(
            facets,
            vec![vec![1, 2, 3], vec![1, 3, 6], vec![2, 3, 4], vec![3, 4, 5], vec![3, 5, 6]]
        );
        assert_eq!(d.classify().name(), "ball");
        let single = subword_complex(&w("232"), &p("[1432]")).unwrap();
        assert_eq!(single, SimplicialComplex::new(&[1, 2, 3], &[vec![]]).unwrap());
        assert!(subword_complex(&w("12"), &p("[321]")).unwrap().is_void());
    }

    #[test]
    fn slide_complexes() {
        let q = w("321323");
        let s323 = slide_complex(&q, &w("323")).unwrap();
        let mut expected = subword_complex(&q, &p("[1432]")).unwrap().facets();
        expected.retain(|f| f != &vec![1, 3, 6]);
        assert_eq!(s323.facets(), expected);
        let all = delta_w(&q, &[w("232"), w("323")]).unwrap();
        assert_eq!(all, subword_complex(&q, &p("[1432]")).unwrap());
    }

    #[test]
    fn backwards_saturation() {
        let ws: Vec<Word> = ["1434", "4134", "4314", "4341"].iter().map(|s| w(s)).collect();
        assert!(is_backwards_saturated(&ws).unwrap());
        assert!(is_backwards_saturated(&[w("3212")]).unwrap());
        let rw = crate::perm::reduced_words(&p("[4213]"));
        assert!(is_backwards_saturated(&rw).unwrap());
        assert!(is_backwards_saturated(&[w("12"), w("21")]).is_err());
    }

    #[test]
    fn stanley_reisner() {
        assert!(SimplicialComplex::simplex(&[1, 2, 3]).unwrap().stanley_reisner_generators().is_empty());
        let triangle = SimplicialComplex::new(&[], &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(triangle.stanley_reisner_generators(), vec![vec![1, 2, 3]]);
        let pd = subword_complex(&w("321323"), &p("[1432]")).unwrap();
        assert_eq!(
            pd.stanley_reisner_generators(),
            vec![vec![1, 4], vec![1, 5], vec![2, 5], vec![2, 6], vec![4, 6]]
        );
    }

    #[test]
    fn tableau_complexes() {
        let spec = |family, shape: Shape, n| TableauComplexSpec { family, shape, n, ambient: None };
        let ssyt = tableau_complex(&spec(Family::Ssyt, Shape::partition(&[1, 1, 1]).unwrap(), 4)).unwrap();
        assert_eq!(ssyt.complex.num_facets(), 4);
        assert!(ssyt.complex.classify().is_ball_or_sphere());
        let syt = tableau_complex(&spec(Family::Syt, Shape::partition(&[2, 1]).unwrap(), 3)).unwrap();
        assert_eq!(syt.complex.classify(), Classification::Neither);
        let single = tableau_complex(&spec(Family::Ssyt, Shape::partition(&[1]).unwrap(), 1)).unwrap();
        assert_eq!(single.complex.facets(), vec![Vec::<usize>::new()]);
        let (_, classes) = ssyt_standardization_decomposition(&[2, 1], 3).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 8);
    }
}
