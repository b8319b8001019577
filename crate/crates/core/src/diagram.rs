//! Diagrams, diagram tableaux and the permutation `w_D`.
//!
//! A diagram is a finite set of nodes `(row, col)` with rows numbered top to
//! bottom and columns left to right, both from 1 and without gaps. Every
//! constructor normalizes, so two diagrams are equal exactly when their node
//! sets agree after re-indexing.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::paths;
use crate::symmetric::{is_coset_representative, prefixes, Composition, Partition, Permutation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Componentwise order used by standardness.
    pub fn weakly_before(&self, other: &Node) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    /// Row-major sorted.
    nodes: Vec<Node>,
    rows: usize,
    cols: usize,
}

impl Diagram {
    /// Builds a diagram from arbitrary nodes, closing up empty rows and columns.
    pub fn from_nodes(nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        let raw: Vec<Node> = nodes.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one node".into()));
        }
        let set: BTreeSet<Node> = raw.iter().copied().collect();
        if set.len() != raw.len() {
            return Err(Error::InvalidDiagram("duplicate node".into()));
        }
        let rows: Vec<usize> = set.iter().map(|p| p.row).collect::<BTreeSet<_>>().into_iter().collect();
        let cols: Vec<usize> = set.iter().map(|p| p.col).collect::<BTreeSet<_>>().into_iter().collect();
        let mut nodes: Vec<Node> = set
            .iter()
            .map(|p| {
                Node::new(rows.binary_search(&p.row).unwrap() + 1, cols.binary_search(&p.col).unwrap() + 1)
            })
            .collect();
        nodes.sort_unstable();
        Ok(Self { nodes, rows: rows.len(), cols: cols.len() })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_nodes(pairs.iter().map(|&(r, c)| Node::new(r, c)))
    }

    /// The Young diagram of a partition.
    pub fn young(shape: &Partition) -> Result<Self> {
        Self::from_nodes(
            shape.parts().iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c))),
        )
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, p: Node) -> bool {
        self.nodes.binary_search(&p).is_ok()
    }

    pub fn index_of(&self, p: Node) -> Option<usize> {
        self.nodes.binary_search(&p).ok()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = Node> + '_ {
        self.nodes.iter().copied().filter(move |p| p.row == r)
    }

    pub fn column(&self, c: usize) -> impl Iterator<Item = Node> + '_ {
        self.nodes.iter().copied().filter(move |p| p.col == c)
    }

    /// `λ_D`.
    pub fn row_composition(&self) -> Composition {
        Composition::new((1..=self.rows).map(|r| self.row(r).count()).collect()).unwrap()
    }

    /// `μ_D`.
    pub fn column_composition(&self) -> Composition {
        Composition::new(self.column_lengths()).unwrap()
    }

    /// `α_D`, the tuple of column lengths.
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut lens = vec![0; self.cols];
        for p in &self.nodes {
            lens[p.col - 1] += 1;
        }
        lens
    }

    /// `w_D`, defined by `t^D · w_D = t_D`.
    pub fn w(&self) -> Permutation {
        let column_order = self.column_order();
        let mut images = vec![0u8; self.size()];
        for (entry0, &k) in column_order.iter().enumerate() {
            images[k] = entry0 as u8;
        }
        Permutation::from_zero_based(images)
    }

    /// Node indices in column filling order.
    fn column_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.size()).collect();
        idx.sort_by_key(|&k| (self.nodes[k].col, self.nodes[k].row));
        idx
    }

    /// Rotation through 180 degrees.
    pub fn rotate_180(&self) -> Diagram {
        let (r, c) = (self.rows, self.cols);
        Diagram::from_nodes(self.nodes.iter().map(|p| Node::new(r + 1 - p.row, c + 1 - p.col))).unwrap()
    }

    /// `D̂ = {(r+1, 1)} ∪ {(i, j+1) : (i, j) ∈ D}`.
    pub fn hat(&self) -> Diagram {
        let extra = Node::new(self.rows + 1, 1);
        Diagram::from_nodes(self.nodes.iter().map(|p| Node::new(p.row, p.col + 1)).chain([extra])).unwrap()
    }

    /// Special: a row and column permutation of a Young diagram.
    pub fn is_special(&self) -> bool {
        let row_len = self.row_composition();
        let col_len = self.column_lengths();
        let mut row_order: Vec<usize> = (1..=self.rows).collect();
        row_order.sort_by(|a, b| row_len.parts()[b - 1].cmp(&row_len.parts()[a - 1]));
        let mut col_order: Vec<usize> = (1..=self.cols).collect();
        col_order.sort_by(|a, b| col_len[b - 1].cmp(&col_len[a - 1]));
        let mut row_pos = vec![0; self.rows + 1];
        for (k, &r) in row_order.iter().enumerate() {
            row_pos[r] = k + 1;
        }
        let mut col_pos = vec![0; self.cols + 1];
        for (k, &c) in col_order.iter().enumerate() {
            col_pos[c] = k + 1;
        }
        let sorted = Diagram::from_nodes(self.nodes.iter().map(|p| Node::new(row_pos[p.row], col_pos[p.col]))).unwrap();
        Diagram::young(&row_len.sorted()).map(|y| y == sorted).unwrap_or(false)
    }

    /// `ψ`: appends a row holding one node, at the smallest column for which
    /// the result is admissible. Column `num_cols + 1` opens a new column.
    pub fn psi_append(&self) -> Result<Diagram> {
        if !paths::is_admissible(self) {
            return Err(Error::NotAdmissible);
        }
        let r = self.rows + 1;
        for c in 1..=self.cols + 1 {
            let candidate = Diagram::from_nodes(self.nodes.iter().copied().chain([Node::new(r, c)]))?;
            if paths::is_admissible(&candidate) {
                return Ok(candidate);
            }
        }
        Err(Error::NoAdmissibleExtension)
    }

    pub fn render_ascii(&self, plain: bool) -> String {
        let (node, blank) = if plain { ('x', '.') } else { ('\u{00d7}', '\u{00b7}') };
        let mut out = String::new();
        for r in 1..=self.rows {
            let line: Vec<String> = (1..=self.cols)
                .map(|c| if self.contains(Node::new(r, c)) { node } else { blank }.to_string())
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{:?}", self.nodes.iter().map(|p| (p.row, p.col)).collect::<Vec<_>>())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii(false))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    nodes: Vec<[usize; 2]>,
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { nodes: self.nodes.iter().map(|p| [p.row, p.col]).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        Diagram::from_nodes(raw.nodes.into_iter().map(|[r, c]| Node::new(r, c))).map_err(serde::de::Error::custom)
    }
}

/// A bijection from the nodes of a diagram onto `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagramTableau {
    diagram: Diagram,
    /// `entries[k]` sits on `diagram.nodes()[k]`.
    entries: Vec<usize>,
}

impl DiagramTableau {
    pub fn new(diagram: Diagram, entries: Vec<usize>) -> Result<Self> {
        let n = diagram.size();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!("{} entries for {} nodes", entries.len(), n)));
        }
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!("entries {entries:?} are not 1..{n}")));
            }
            seen[e] = true;
        }
        Ok(Self { diagram, entries })
    }

    /// From rows of entries laid left to right on the diagram's nodes.
    pub fn from_rows(diagram: Diagram, rows: &[Vec<usize>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(diagram.size());
        for r in 1..=diagram.num_rows() {
            let row = rows.get(r - 1).ok_or_else(|| Error::InvalidTableau("missing row".into()))?;
            if row.len() != diagram.row(r).count() {
                return Err(Error::InvalidTableau(format!("row {r} has the wrong length")));
            }
            entries.extend(row);
        }
        Self::new(diagram, entries)
    }

    /// `t^D`: filled by rows.
    pub fn row_filling(diagram: &Diagram) -> Self {
        Self { diagram: diagram.clone(), entries: (1..=diagram.size()).collect() }
    }

    /// `t_D`: filled by columns.
    pub fn column_filling(diagram: &Diagram) -> Self {
        let mut entries = vec![0; diagram.size()];
        for (e, k) in diagram.column_order().into_iter().enumerate() {
            entries[k] = e + 1;
        }
        Self { diagram: diagram.clone(), entries }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, p: Node) -> Option<usize> {
        self.diagram.index_of(p).map(|k| self.entries[k])
    }

    /// `t·w`: every entry `i` becomes `i·w`.
    pub fn act(&self, w: &Permutation) -> Result<Self> {
        if w.degree() != self.entries.len() {
            return Err(Error::DegreeMismatch { left: self.entries.len(), right: w.degree() });
        }
        Ok(Self { diagram: self.diagram.clone(), entries: self.entries.iter().map(|&e| w.image(e)).collect() })
    }

    /// Entries weakly increase in the componentwise order on nodes.
    pub fn is_standard(&self) -> bool {
        let nodes = self.diagram.nodes();
        for a in 0..nodes.len() {
            for b in 0..nodes.len() {
                if a != b && nodes[a].weakly_before(&nodes[b]) && self.entries[a] > self.entries[b] {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.diagram.num_rows())
            .map(|r| {
                self.diagram.nodes().iter().zip(&self.entries).filter(|(p, _)| p.row == r).map(|(_, &e)| e).collect()
            })
            .collect()
    }
}

/// `t^D` filled row by row, `t_D` column by column, and `w_D` between them.
pub fn row_filling(d: &Diagram) -> DiagramTableau {
    DiagramTableau::row_filling(d)
}

pub fn column_filling(d: &Diagram) -> DiagramTableau {
    DiagramTableau::column_filling(d)
}

pub fn w_of_diagram(d: &Diagram) -> Permutation {
    d.w()
}

/// Every standard `D`-tableau (linear extensions of the componentwise order).
pub fn standard_tableaux(d: &Diagram) -> Vec<DiagramTableau> {
    let nodes = d.nodes();
    let n = nodes.len();
    let preds: Vec<Vec<usize>> = (0..n)
        .map(|b| (0..n).filter(|&a| a != b && nodes[a].weakly_before(&nodes[b])).collect())
        .collect();
    let mut out = Vec::new();
    let mut entries = vec![0usize; n];
    fn rec(
        next: usize,
        n: usize,
        preds: &[Vec<usize>],
        entries: &mut Vec<usize>,
        d: &Diagram,
        out: &mut Vec<DiagramTableau>,
    ) {
        if next > n {
            out.push(DiagramTableau { diagram: d.clone(), entries: entries.clone() });
            return;
        }
        for k in 0..n {
            if entries[k] == 0 && preds[k].iter().all(|&a| entries[a] != 0) {
                entries[k] = next;
                rec(next + 1, n, preds, entries, d, out);
                entries[k] = 0;
            }
        }
    }
    rec(1, n, &preds, &mut entries, d, &mut out);
    out
}

/// Outcome of comparing prefixes of `w_D` with standard `D`-tableaux.
#[derive(Clone, Debug)]
pub struct PrefixTableauCheck {
    pub prefixes: Vec<Permutation>,
    pub standard_tableaux: Vec<DiagramTableau>,
    /// Every `t^D·u` with `u` a prefix of `w_D` is standard.
    pub images_standard: bool,
    /// `u ↦ t^D·u` hits every standard tableau exactly once.
    pub bijective: bool,
}

pub fn prefixes_as_tableaux(d: &Diagram) -> PrefixTableauCheck {
    let prefixes = prefixes(&d.w());
    let t = DiagramTableau::row_filling(d);
    let images: Vec<DiagramTableau> = prefixes.iter().map(|u| t.act(u).unwrap()).collect();
    let images_standard = images.iter().all(|x| x.is_standard());
    let standard_tableaux = standard_tableaux(d);
    let image_set: HashSet<&DiagramTableau> = images.iter().collect();
    let std_set: HashSet<&DiagramTableau> = standard_tableaux.iter().collect();
    let bijective = image_set.len() == images.len() && image_set == std_set;
    PrefixTableauCheck { prefixes, standard_tableaux, images_standard, bijective }
}

/// `D(d, λ)`: the diagram in `𝒟^(λ)` with `w_D = d` and fewest columns.
///
/// Reading `t^D·d` in column order lists the rows of the values `1, ..., n`;
/// a column is a run of strictly increasing rows. Diagrams with `w_D = d`
/// correspond to the ways of cutting that row sequence into such runs, so
/// cutting only where the row fails to increase gives the unique minimum.
pub fn min_column_diagram(d: &Permutation, lambda: &Composition) -> Result<Diagram> {
    let rows = value_rows(d, lambda)?;
    let mut col = 1;
    let mut nodes = Vec::with_capacity(rows.len());
    for (v, &r) in rows.iter().enumerate() {
        if v > 0 && r <= rows[v - 1] {
            col += 1;
        }
        nodes.push(Node::new(r, col));
    }
    Diagram::from_nodes(nodes)
}

/// Every diagram in `𝒟^(λ)` with `w_D = d`.
pub fn diagrams_with_w(d: &Permutation, lambda: &Composition) -> Result<Vec<Diagram>> {
    let rows = value_rows(d, lambda)?;
    let optional: Vec<usize> = (1..rows.len()).filter(|&v| rows[v] > rows[v - 1]).collect();
    let mut out = Vec::with_capacity(1 << optional.len());
    for mask in 0u64..1 << optional.len() {
        let mut col = 1;
        let mut nodes = Vec::with_capacity(rows.len());
        for (v, &r) in rows.iter().enumerate() {
            if v > 0 {
                let forced = r <= rows[v - 1];
                let chosen = optional.iter().position(|&o| o == v).map(|k| mask >> k & 1 == 1).unwrap_or(false);
                if forced || chosen {
                    col += 1;
                }
            }
            nodes.push(Node::new(r, col));
        }
        out.push(Diagram::from_nodes(nodes)?);
    }
    Ok(out)
}

/// Row of each value `1..=n` in `t^D·d`, for any `D ∈ 𝒟^(λ)`.
fn value_rows(d: &Permutation, lambda: &Composition) -> Result<Vec<usize>> {
    let n = lambda.size();
    if d.degree() != n {
        return Err(Error::DegreeMismatch { left: d.degree(), right: n });
    }
    let j = lambda.generator_set();
    if !is_coset_representative(d, &j) {
        return Err(Error::NotCosetRepresentative(d.to_string()));
    }
    let mut rows = vec![0; n];
    let mut k = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for _ in 0..len {
            rows[d.image(k) - 1] = r + 1;
            k += 1;
        }
    }
    Ok(rows)
}

pub fn rotate_180(d: &Diagram) -> Diagram {
    d.rotate_180()
}

pub fn psi_append(d: &Diagram) -> Result<Diagram> {
    d.psi_append()
}

pub fn hat_diagram(d: &Diagram) -> Diagram {
    d.hat()
}
