//! Paths and `k`-paths in diagrams, subsequence type, admissibility, and
//! searches for ordered `k`-paths.
//!
//! A path is a chain of nodes with strictly increasing rows and weakly
//! increasing columns.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::shape::StuShape;
use crate::symmetric::Partition;

/// `x ≺ y` in the path order.
fn precedes(x: Node, y: Node) -> bool {
    x.row < y.row && x.col <= y.col
}

/// A sequence of mutually disjoint paths.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KPath {
    paths: Vec<Vec<Node>>,
}

impl KPath {
    pub fn new(paths: Vec<Vec<Node>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (j, p) in paths.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::InvalidPath(format!("constituent {} is empty", j + 1)));
            }
            if !p.windows(2).all(|w| precedes(w[0], w[1])) {
                return Err(Error::InvalidPath(format!("constituent {} is not a path", j + 1)));
            }
            for &x in p {
                if !seen.insert(x) {
                    return Err(Error::InvalidPath(format!("node {x} is used twice")));
                }
            }
        }
        Ok(Self { paths })
    }

    pub fn from_pairs(paths: &[&[(usize, usize)]]) -> Result<Self> {
        Self::new(paths.iter().map(|p| p.iter().map(|&(a, b)| Node::new(a, b)).collect()).collect())
    }

    pub fn paths(&self) -> &[Vec<Node>] {
        &self.paths
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    /// Total number of nodes.
    pub fn length(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(Vec::len).collect()
    }

    /// Constituent lengths sorted non-increasing.
    pub fn path_type(&self) -> Partition {
        let mut l = self.lengths();
        l.sort_unstable_by(|a, b| b.cmp(a));
        Partition(l)
    }

    /// `z_i` = number of constituents of length `i`, for `i = 1..=4`.
    pub fn z_profile(&self) -> [usize; 4] {
        let mut z = [0; 4];
        for p in &self.paths {
            if (1..=4).contains(&p.len()) {
                z[p.len() - 1] += 1;
            }
        }
        z
    }

    pub fn support(&self) -> BTreeSet<Node> {
        self.paths.iter().flatten().copied().collect()
    }

    /// Checks that every node lies in `d`.
    pub fn lies_in(&self, d: &Diagram) -> bool {
        self.paths.iter().flatten().all(|&x| d.contains(x))
    }

    /// Whether the support is all of `d`.
    pub fn covers(&self, d: &Diagram) -> bool {
        self.length() == d.size() && self.lies_in(d)
    }

    /// For `j < j'`, a node of `π_j` weakly above a node of `π_j'` lies in a
    /// strictly smaller column.
    pub fn is_ordered(&self) -> bool {
        for j in 0..self.paths.len() {
            for jp in j + 1..self.paths.len() {
                if !pair_ordered(&self.paths[j], &self.paths[jp]) {
                    return false;
                }
            }
        }
        true
    }

    /// The constituents of the given indices, in their current order.
    pub fn subpath(&self, indices: &[usize]) -> Result<KPath> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.iter().any(|&i| i >= self.paths.len()) {
            return Err(Error::InvalidPath("subpath index out of range".into()));
        }
        Ok(KPath { paths: idx.into_iter().map(|i| self.paths[i].clone()).collect() })
    }
}

fn pair_ordered(earlier: &[Node], later: &[Node]) -> bool {
    earlier.iter().all(|x| later.iter().all(|y| x.row > y.row || x.col < y.col))
}

impl Serialize for KPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<Vec<[usize; 2]>> =
            self.paths.iter().map(|p| p.iter().map(|x| [x.row, x.col]).collect()).collect();
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<Vec<[usize; 2]>> = Vec::deserialize(deserializer)?;
        KPath::new(raw.into_iter().map(|p| p.into_iter().map(|[a, b]| Node::new(a, b)).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

/// Greene-style invariant: `ν₁ + ... + ν_k` is the maximum length of a
/// `k`-path in `d`.
///
/// Each maximum is a minimum-cost flow of value `k` through split nodes,
/// so successive shortest augmenting paths give all of them in one pass.
pub fn subsequence_type(d: &Diagram) -> Partition {
    let nodes = d.nodes();
    let n = nodes.len();
    let mut g = FlowGraph::new(2 * n + 2);
    let (src, sink) = (2 * n, 2 * n + 1);
    for (v, &x) in nodes.iter().enumerate() {
        g.add_edge(src, 2 * v, 0);
        g.add_edge(2 * v, 2 * v + 1, -1);
        g.add_edge(2 * v + 1, sink, 0);
        for (w, &y) in nodes.iter().enumerate() {
            if precedes(x, y) {
                g.add_edge(2 * v + 1, 2 * w, 0);
            }
        }
    }
    let mut parts = Vec::new();
    let mut covered = 0usize;
    while covered < n {
        let gain = g.augment(src, sink).expect("a path through an unused node always exists");
        covered += gain;
        parts.push(gain);
    }
    Partition(parts)
}

/// Unit-capacity residual graph for successive shortest paths.
struct FlowGraph {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    cost: Vec<i32>,
}

impl FlowGraph {
    fn new(size: usize) -> Self {
        Self { adj: vec![Vec::new(); size], to: Vec::new(), cap: Vec::new(), cost: Vec::new() }
    }

    fn add_edge(&mut self, a: usize, b: usize, cost: i32) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.cost.push(cost);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
        self.cost.push(-cost);
    }

    /// Pushes one unit along a cheapest path (Bellman-Ford), returning the
    /// number of nodes gained.
    fn augment(&mut self, src: usize, sink: usize) -> Option<usize> {
        let size = self.adj.len();
        let mut dist = vec![i32::MAX; size];
        let mut via = vec![usize::MAX; size];
        dist[src] = 0;
        for _ in 0..size {
            let mut changed = false;
            for a in 0..size {
                if dist[a] == i32::MAX {
                    continue;
                }
                for &e in &self.adj[a] {
                    if self.cap[e] > 0 && dist[a] + self.cost[e] < dist[self.to[e]] {
                        dist[self.to[e]] = dist[a] + self.cost[e];
                        via[self.to[e]] = e;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == i32::MAX {
            return None;
        }
        let mut v = sink;
        while v != src {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        Some((-dist[sink]) as usize)
    }
}

/// Subsequence type equals the conjugate of the row composition.
pub fn is_admissible(d: &Diagram) -> bool {
    subsequence_type(d) == d.row_composition().conjugate()
}

/// Depth-first search for ordered `k`-paths covering a node set.
///
/// The constituents are chosen first to last. A node may join the current
/// constituent only if no remaining node lies weakly below it in a strictly
/// smaller column, and a constituent may not stop while unused nodes remain
/// below its last node in the same column. Candidate constituents are tried
/// in lexicographic order of their node sequences.
struct OrderedSearch<'a> {
    nodes: &'a [Node],
    failed: HashSet<(u64, Vec<usize>)>,
}

enum Target {
    /// `counts[l]` constituents of length `l` still to place.
    Counts(Vec<usize>),
    /// Exactly this many constituents.
    Number(usize),
}

impl Target {
    fn key(&self) -> Vec<usize> {
        match self {
            Target::Counts(c) => c.clone(),
            Target::Number(k) => vec![usize::MAX, *k],
        }
    }

    fn allows(&self, len: usize) -> bool {
        match self {
            Target::Counts(c) => c.get(len).copied().unwrap_or(0) > 0,
            Target::Number(k) => *k > 0,
        }
    }

    fn take(&mut self, len: usize) {
        match self {
            Target::Counts(c) => c[len] -= 1,
            Target::Number(k) => *k -= 1,
        }
    }

    fn give(&mut self, len: usize) {
        match self {
            Target::Counts(c) => c[len] += 1,
            Target::Number(k) => *k += 1,
        }
    }

    fn done(&self) -> bool {
        match self {
            Target::Counts(c) => c.iter().all(|&x| x == 0),
            Target::Number(k) => *k == 0,
        }
    }
}

impl<'a> OrderedSearch<'a> {
    fn new(nodes: &'a [Node]) -> Self {
        assert!(nodes.len() <= 64, "ordered path search supports at most 64 nodes");
        Self { nodes, failed: HashSet::new() }
    }

    fn available(&self, v: usize, remaining: u64) -> bool {
        let x = self.nodes[v];
        bits(remaining).all(|w| {
            let y = self.nodes[w];
            !(y.row >= x.row && y.col < x.col)
        })
    }

    /// Nearest remaining node strictly below `v` in its column.
    fn below_in_column(&self, v: usize, remaining: u64) -> Option<usize> {
        let x = self.nodes[v];
        bits(remaining)
            .filter(|&w| self.nodes[w].col == x.col && self.nodes[w].row > x.row)
            .min_by_key(|&w| self.nodes[w].row)
    }

    /// Valid first constituents for the remaining set, in lexicographic order.
    fn candidates(&self, remaining: u64, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for v in bits(remaining) {
            if self.available(v, remaining) {
                let mut chain = vec![v];
                self.extend(&mut chain, remaining & !(1 << v), max_len, &mut out);
            }
        }
        out
    }

    fn extend(&self, chain: &mut Vec<usize>, remaining: u64, max_len: usize, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().unwrap();
        match self.below_in_column(last, remaining) {
            Some(w) => {
                if chain.len() < max_len && self.available(w, remaining) {
                    chain.push(w);
                    self.extend(chain, remaining & !(1 << w), max_len, out);
                    chain.pop();
                }
            }
            None => {
                out.push(chain.clone());
                if chain.len() == max_len {
                    return;
                }
                let x = self.nodes[last];
                for w in bits(remaining) {
                    let y = self.nodes[w];
                    if y.row > x.row && y.col > x.col && self.available(w, remaining) {
                        chain.push(w);
                        self.extend(chain, remaining & !(1 << w), max_len, out);
                        chain.pop();
                    }
                }
            }
        }
    }

    fn run(&mut self, remaining: u64, target: &mut Target, acc: &mut Vec<Vec<usize>>) -> bool {
        if remaining == 0 {
            return target.done();
        }
        if target.done() {
            return false;
        }
        if let Target::Number(k) = target {
            if *k > remaining.count_ones() as usize {
                return false;
            }
        }
        let key = (remaining, target.key());
        if self.failed.contains(&key) {
            return false;
        }
        let max_len = match target {
            Target::Counts(c) => c.len().saturating_sub(1),
            Target::Number(_) => usize::MAX,
        };
        for chain in self.candidates(remaining, max_len) {
            if !target.allows(chain.len()) {
                continue;
            }
            target.take(chain.len());
            let mask = chain.iter().fold(0u64, |m, &v| m | 1 << v);
            acc.push(chain.clone());
            if self.run(remaining & !mask, target, acc) {
                return true;
            }
            acc.pop();
            target.give(chain.len());
        }
        self.failed.insert(key);
        false
    }

    fn to_kpath(&self, chains: Vec<Vec<usize>>) -> KPath {
        KPath { paths: chains.into_iter().map(|c| c.into_iter().map(|v| self.nodes[v]).collect()).collect() }
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn full_mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn sorted_nodes(support: impl IntoIterator<Item = Node>) -> Vec<Node> {
    let mut v: Vec<Node> = support.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// An ordered `k`-path with support `support` whose type is `lengths`.
pub fn find_ordered_with_type(support: &[Node], lengths: &Partition) -> Option<KPath> {
    let nodes = sorted_nodes(support.iter().copied());
    if lengths.size() != nodes.len() {
        return None;
    }
    let max = lengths.parts().first().copied().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for &l in lengths.parts() {
        counts[l] += 1;
    }
    let mut search = OrderedSearch::new(&nodes);
    let mut acc = Vec::new();
    search
        .run(full_mask(nodes.len()), &mut Target::Counts(counts), &mut acc)
        .then(|| search.to_kpath(acc))
}

/// An ordered path with exactly `k` constituents and the given support.
pub fn find_ordered_with_k(support: &[Node], k: usize) -> Option<KPath> {
    let nodes = sorted_nodes(support.iter().copied());
    let mut search = OrderedSearch::new(&nodes);
    let mut acc = Vec::new();
    search.run(full_mask(nodes.len()), &mut Target::Number(k), &mut acc).then(|| search.to_kpath(acc))
}

/// An ordered `k`-path equivalent to `pi` (same support, same `k`).
///
/// Ordered inputs come back unchanged. Otherwise candidate types are tried
/// in lexicographically decreasing order, so the result keeps long
/// constituents where it can.
pub fn order_equivalent(pi: &KPath) -> KPath {
    if pi.is_ordered() {
        return pi.clone();
    }
    let support: Vec<Node> = pi.support().into_iter().collect();
    let rows = support.iter().map(|x| x.row).collect::<BTreeSet<_>>().len();
    for ty in Partition::with_parts(support.len(), pi.k()) {
        if ty.parts()[0] > rows {
            continue;
        }
        if let Some(found) = find_ordered_with_type(&support, &ty) {
            return found;
        }
    }
    unreachable!("every k-path is equivalent to an ordered k-path")
}

/// Inserts each node of `extra` into `pi` as a one-node constituent,
/// keeping the result ordered. Positions are tried earliest first.
pub fn insert_singletons(pi: &KPath, extra: &[Node]) -> Result<KPath> {
    if !pi.is_ordered() {
        return Err(Error::InvalidPath("insertion needs an ordered k-path".into()));
    }
    let support = pi.support();
    let mut seen = HashSet::new();
    for &x in extra {
        if support.contains(&x) || !seen.insert(x) {
            return Err(Error::InvalidPath(format!("node {x} is already used")));
        }
        for p in &pi.paths {
            let above = p.iter().any(|y| y.col == x.col && y.row < x.row);
            let below = p.iter().any(|y| y.col == x.col && y.row > x.row);
            if above && below {
                return Err(Error::Straddle { column: x.col });
            }
        }
    }
    let mut paths = pi.paths.clone();
    if place(&mut paths, extra) {
        Ok(KPath { paths })
    } else {
        Err(Error::InvalidPath("no ordered insertion exists".into()))
    }
}

fn place(paths: &mut Vec<Vec<Node>>, extra: &[Node]) -> bool {
    let Some((&x, rest)) = extra.split_first() else {
        return true;
    };
    let single = [x];
    for pos in 0..=paths.len() {
        let ok = paths[..pos].iter().all(|p| pair_ordered(p, &single))
            && paths[pos..].iter().all(|p| pair_ordered(&single, p));
        if ok {
            paths.insert(pos, vec![x]);
            if place(paths, rest) {
                return true;
            }
            paths.remove(pos);
        }
    }
    false
}

/// Any `k`-path (ordered or not) with support `support` and type `lengths`.
pub fn find_kpath_with_type(support: &[Node], lengths: &Partition) -> Option<KPath> {
    let nodes = sorted_nodes(support.iter().copied());
    if lengths.size() != nodes.len() {
        return None;
    }
    let max = lengths.parts().first().copied().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for &l in lengths.parts() {
        counts[l] += 1;
    }
    fn rec(
        nodes: &[Node],
        remaining: u64,
        counts: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        failed: &mut HashSet<(u64, Vec<usize>)>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        if failed.contains(&(remaining, counts.clone())) {
            return false;
        }
        // The first remaining node in row-major order heads its path.
        let head = remaining.trailing_zeros() as usize;
        let mut chains = Vec::new();
        let mut chain = vec![head];
        grow(nodes, remaining & !(1 << head), counts.len() - 1, &mut chain, &mut chains);
        for c in chains {
            if counts[c.len()] == 0 {
                continue;
            }
            counts[c.len()] -= 1;
            let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
            acc.push(c.clone());
            if rec(nodes, remaining & !mask, counts, acc, failed) {
                return true;
            }
            acc.pop();
            counts[c.len()] += 1;
        }
        failed.insert((remaining, counts.clone()));
        false
    }
    fn grow(nodes: &[Node], remaining: u64, max_len: usize, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        if chain.len() == max_len {
            return;
        }
        let last = nodes[*chain.last().unwrap()];
        for w in bits(remaining) {
            if precedes(last, nodes[w]) {
                chain.push(w);
                grow(nodes, remaining & !(1 << w), max_len, chain, out);
                chain.pop();
            }
        }
    }
    assert!(nodes.len() <= 64, "path search supports at most 64 nodes");
    let mut acc = Vec::new();
    let mut failed = HashSet::new();
    if rec(&nodes, full_mask(nodes.len()), &mut counts, &mut acc, &mut failed) {
        Some(KPath { paths: acc.into_iter().map(|c| c.into_iter().map(|v| nodes[v]).collect()).collect() })
    } else {
        None
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FormClass {
    FormA,
    FormB,
    Neither,
}

/// Form-A: z-profile `(s−t, t−u, u−1, 1)`; form-B: `(s−t, t−u−1, u+1, 0)`.
/// Both need an ordered `s`-path of length `s+t+u+1`.
pub fn classify_form(pi: &KPath, s: usize, t: usize, u: usize) -> Result<FormClass> {
    if !(s >= t && t >= u && u >= 1) {
        return Err(Error::InvalidParams(format!("need s >= t >= u >= 1, got ({s},{t},{u})")));
    }
    if pi.k() != s || pi.length() != s + t + u + 1 || !pi.is_ordered() {
        return Ok(FormClass::Neither);
    }
    let z = pi.z_profile();
    if z == form_a_profile(s, t, u) {
        return Ok(FormClass::FormA);
    }
    if t > u && z == [s - t, t - u - 1, u + 1, 0] {
        return Ok(FormClass::FormB);
    }
    Ok(FormClass::Neither)
}

fn form_a_profile(s: usize, t: usize, u: usize) -> [usize; 4] {
    [s - t, t - u, u - 1, 1]
}

fn profile_type(z: [usize; 4]) -> Partition {
    let mut parts = Vec::new();
    for len in (1..=4).rev() {
        parts.extend(std::iter::repeat_n(len, z[len - 1]));
    }
    Partition(parts)
}

/// A form-A `s`-path covering `d` if one exists, else a form-B one.
pub fn find_form_path(d: &Diagram) -> Result<(KPath, FormClass)> {
    let lambda = d.row_composition();
    let shape = StuShape::from_composition(&lambda)?;
    if shape.trailing_ones != 1 {
        return Err(Error::HypothesisStar(lambda.to_string()));
    }
    if !is_admissible(d) {
        return Err(Error::NotAdmissible);
    }
    let (s, t, u) = (shape.s, shape.t, shape.u);
    let mut profiles = vec![(form_a_profile(s, t, u), FormClass::FormA)];
    if t > u {
        profiles.push(([s - t, t - u - 1, u + 1, 0], FormClass::FormB));
    }
    for (z, class) in profiles {
        if let Some(pi) = find_ordered_with_type(d.nodes(), &profile_type(z)) {
            debug_assert_eq!(classify_form(&pi, s, t, u), Ok(class));
            return Ok((pi, class));
        }
    }
    Err(Error::NoFormPath)
}

/// Row placement of a form path: one-node paths sit on the row of length
/// `s`, two-node paths on the rows of lengths `s` and `t`, and three-node
/// paths on rows 1 to 3, except that a form-B path has one three-node path
/// through rows of lengths `s`, `t` and row 4.
pub fn form_rows_hold(pi: &KPath, d: &Diagram) -> Result<bool> {
    let shape = StuShape::from_composition(&d.row_composition())?;
    let (s, t, u) = (shape.s, shape.t, shape.u);
    let class = classify_form(pi, s, t, u)?;
    if class == FormClass::Neither || !pi.covers(d) {
        return Ok(false);
    }
    let lens = d.row_composition();
    let row_len = |r: usize| lens.parts()[r - 1];
    let mut through_four = 0;
    for p in pi.paths() {
        let ok = match p.len() {
            1 => s > t && row_len(p[0].row) == s && p[0].row <= 3,
            2 => t > u && p.iter().all(|x| x.row <= 3 && (row_len(x.row) == s || row_len(x.row) == t)),
            3
                if p.iter().any(|x| x.row == 4) => {
                    through_four += 1;
                    let mut l: Vec<usize> = p[..2].iter().map(|x| row_len(x.row)).collect();
                    l.sort_unstable();
                    p[2].row == 4 && (l == [t, s] || (s == t && l == [s, s]))
                }
            _ => true,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(through_four == usize::from(class == FormClass::FormB))
}

/// `D(Π)`: each node of `π_j` moves to column `j` of its row.
pub fn straighten(pi: &KPath, host: &Diagram) -> Result<Diagram> {
    if !pi.covers(host) {
        return Err(Error::SupportMismatch);
    }
    Diagram::from_nodes(
        pi.paths().iter().enumerate().flat_map(|(j, p)| p.iter().map(move |x| Node::new(x.row, j + 1))),
    )
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::diagram::DiagramTableau;

    pub(crate) fn nodes(pairs: &[(usize, usize)]) -> Vec<Node> {
        pairs.iter().map(|&(a, b)| Node::new(a, b)).collect()
    }

    pub(crate) fn example_diagram() -> Diagram {
        Diagram::from_pairs(&[
            (1, 2), (1, 3), (1, 6), (1, 7),
            (2, 1), (2, 3), (2, 4), (2, 6), (2, 7), (2, 8),
            (3, 5), (3, 6), (3, 8),
            (4, 6),
        ])
        .unwrap()
    }

    pub(crate) fn pi_one() -> KPath {
        KPath::from_pairs(&[
            &[(2, 1)],
            &[(1, 2), (2, 3), (3, 5), (4, 6)],
            &[(1, 3), (2, 4), (3, 6)],
            &[(2, 6)],
            &[(1, 6), (2, 7), (3, 8)],
            &[(1, 7), (2, 8)],
        ])
        .unwrap()
    }

    pub(crate) fn pi_two() -> KPath {
        KPath::from_pairs(&[
            &[(2, 1)],
            &[(1, 2), (2, 3), (4, 6)],
            &[(1, 3), (2, 4), (3, 5)],
            &[(1, 6), (2, 6), (3, 6)],
            &[(1, 7), (2, 7), (3, 8)],
            &[(2, 8)],
        ])
        .unwrap()
    }

    /// Brute-force subsequence type: maximal chains as bitmasks, then the
    /// largest union of `k` of them.
    fn subsequence_type_oracle(d: &Diagram) -> Partition {
        let ns = d.nodes();
        let n = ns.len();
        let mut chains: Vec<u64> = Vec::new();
        fn walk(ns: &[Node], v: usize, mask: u64, out: &mut Vec<u64>) {
            let mut extended = false;
            for w in 0..ns.len() {
                if precedes(ns[v], ns[w]) {
                    extended = true;
                    walk(ns, w, mask | 1 << w, out);
                }
            }
            if !extended {
                out.push(mask);
            }
        }
        for v in 0..n {
            walk(ns, v, 1 << v, &mut chains);
        }
        chains.sort_unstable();
        chains.dedup();
        let mut best = vec![0usize; n + 1];
        fn choose(chains: &[u64], start: usize, k: usize, acc: u64, best: &mut [usize]) {
            let c = acc.count_ones() as usize;
            if best[k] < c {
                best[k] = c;
            }
            if k + 1 >= best.len() {
                return;
            }
            for i in start..chains.len() {
                choose(chains, i + 1, k + 1, acc | chains[i], best);
            }
        }
        choose(&chains, 0, 0, 0, &mut best);
        for k in 1..=n {
            best[k] = best[k].max(best[k - 1]);
        }
        let mut parts = Vec::new();
        for k in 1..=n {
            if best[k - 1] == n {
                break;
            }
            parts.push(best[k] - best[k - 1]);
        }
        Partition(parts)
    }

    #[test]
    fn basic_types() {
        let row = Diagram::from_pairs(&[(1, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(subsequence_type(&row), Partition(vec![1, 1, 1]));
        let col = Diagram::from_pairs(&[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(subsequence_type(&col), Partition(vec![3]));
        assert_eq!(subsequence_type(&example_diagram()), Partition(vec![4, 3, 3, 2, 1, 1]));
    }

    #[test]
    fn flow_matches_oracle_on_small_diagrams() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let size = rng.gen_range(1..=9);
            let mut set = BTreeSet::new();
            while set.len() < size {
                set.insert(Node::new(rng.gen_range(1..=4), rng.gen_range(1..=5)));
            }
            let d = Diagram::from_nodes(set).unwrap();
            assert_eq!(subsequence_type(&d), subsequence_type_oracle(&d), "{d:?}");
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&example_diagram()));
        assert!(!is_admissible(&Diagram::from_pairs(&[(1, 2), (2, 1)]).unwrap()));
        let witness = Diagram::from_pairs(&[(1, 1), (1, 2), (2, 1), (3, 2), (4, 1), (4, 2)]).unwrap();
        assert_eq!(witness.row_composition().parts(), &[2, 1, 1, 2]);
        assert!(is_admissible(&witness));
        let lambda_prime = witness.row_composition().conjugate();
        assert_eq!(find_kpath_with_type(witness.nodes(), &lambda_prime), None);
        // The search does find λ'-type paths when they exist.
        let y = Diagram::from_pairs(&[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(find_kpath_with_type(y.nodes(), &Partition(vec![2, 2])).is_some());
    }

    #[test]
    fn ordering_examples() {
        assert!(KPath::from_pairs(&[&[(1, 1), (2, 1)]]).unwrap().is_ordered());
        assert!(pi_one().is_ordered());
        assert!(pi_two().is_ordered());
        assert!(!KPath::from_pairs(&[&[(1, 2)], &[(1, 1)]]).unwrap().is_ordered());
        assert!(KPath::from_pairs(&[&[(1, 1), (1, 2)]]).is_err());
        assert!(KPath::from_pairs(&[&[(1, 1)], &[(1, 1)]]).is_err());
    }

    #[test]
    fn form_classes() {
        let d = example_diagram();
        assert!(pi_one().covers(&d) && pi_two().covers(&d));
        assert_eq!(classify_form(&pi_one(), 6, 4, 3), Ok(FormClass::FormA));
        assert_eq!(classify_form(&pi_two(), 6, 4, 3), Ok(FormClass::FormB));
        assert_eq!(pi_one().path_type(), d.row_composition().conjugate());
        assert!(form_rows_hold(&pi_one(), &d).unwrap());
        assert!(form_rows_hold(&pi_two(), &d).unwrap());
        let (found, class) = find_form_path(&d).unwrap();
        assert_eq!(class, FormClass::FormA);
        assert!(found.covers(&d) && found.is_ordered());
    }

    #[test]
    fn order_equivalent_two_by_two() {
        let wrong = KPath::from_pairs(&[&[(1, 2), (2, 2)], &[(1, 1), (2, 1)]]).unwrap();
        assert!(!wrong.is_ordered());
        let fixed = order_equivalent(&wrong);
        assert!(fixed.is_ordered());
        assert_eq!(fixed.support(), wrong.support());
        assert_eq!(fixed.k(), 2);
        assert_eq!(order_equivalent(&pi_one()), pi_one());
    }

    #[test]
    fn insertion_and_straddles() {
        let pi = KPath::from_pairs(&[&[(1, 1), (3, 1)]]).unwrap();
        assert_eq!(insert_singletons(&pi, &nodes(&[(2, 1)])), Err(Error::Straddle { column: 1 }));
        assert_eq!(insert_singletons(&pi, &[]).unwrap(), pi);
        let sub = pi_one().subpath(&[1, 2, 4, 5]).unwrap();
        let back = insert_singletons(&sub, &nodes(&[(2, 1), (2, 6)])).unwrap();
        assert_eq!(back, pi_one());
    }

    #[test]
    fn straighten_examples() {
        let d = example_diagram();
        let e = straighten(&pi_one(), &d).unwrap();
        let expected = Diagram::from_pairs(&[
            (2, 1),
            (1, 2), (2, 2), (3, 2), (4, 2),
            (1, 3), (2, 3), (3, 3),
            (2, 4),
            (1, 5), (2, 5), (3, 5),
            (1, 6), (2, 6),
        ])
        .unwrap();
        assert_eq!(e, expected);
        assert!(e.is_special());
        let t = DiagramTableau::row_filling(&e).act(&d.w()).unwrap();
        assert!(t.is_standard());
        assert!(d.w().is_prefix_of(&e.w()).unwrap());
        let y = Diagram::from_pairs(&[(1, 1), (1, 2), (2, 1)]).unwrap();
        let cols = KPath::from_pairs(&[&[(1, 1), (2, 1)], &[(1, 2)]]).unwrap();
        assert_eq!(straighten(&cols, &y).unwrap(), y);
        assert_eq!(straighten(&KPath::from_pairs(&[&[(1, 1)]]).unwrap(), &y), Err(Error::SupportMismatch));
    }

    #[test]
    fn json_shape() {
        let pi = KPath::from_pairs(&[&[(1, 1), (2, 1)], &[(1, 2)]]).unwrap();
        assert_eq!(serde_json::to_string(&pi).unwrap(), "[[[1,1],[2,1]],[[1,2]]]");
        let back: KPath = serde_json::from_str("[[[1,1],[2,1]],[[1,2]]]").unwrap();
        assert_eq!(back, pi);
    }
}
