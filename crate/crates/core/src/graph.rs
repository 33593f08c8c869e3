//! Cubic graph representation, validation, and serialization.
//!
//! A [`CubicGraph`] is a simple 3-regular graph with vertices 0..n-1.
//! The edge list is sorted lexicographically and edge indices into it are
//! stable, so an [`EdgeSet`] bitmask identifies any edge subset.  Input
//! vertex labels need not be dense; they are preserved through a relabeling
//! map and used again on output.
//!
//! Two text encodings are supported: an adjacency-list format with entries
//! `v: a b c` separated by `;` (optionally wrapped in braces, whitespace
//! free-form), and standard graph6.

use crate::error::{Error, Result};
use std::fmt;

/// Edge colours 1, 2, 3, identified with the nonzero elements of
/// Z_2 x Z_2 (1 = 01, 2 = 10, 3 = 11).  At a properly coloured cubic
/// vertex the three colours XOR to zero, so two colours force the third
/// as their XOR.
pub type Colour = u8;

/// Hard size limit; vertex sets fit in a u128 and edge sets in 3 words.
pub const MAX_VERTICES: usize = 128;
/// 3 * MAX_VERTICES / 2.
pub const MAX_EDGES: usize = 192;

const WORDS: usize = 3;

/// Bitmask over edge indices of a fixed host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet {
    w: [u64; WORDS],
}

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet { w: [0; WORDS] };

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(e);
        s
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < MAX_EDGES);
        self.w[e >> 6] |= 1 << (e & 63);
    }

    pub fn remove(&mut self, e: usize) {
        self.w[e >> 6] &= !(1 << (e & 63));
    }

    pub fn contains(&self, e: usize) -> bool {
        self.w[e >> 6] >> (e & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.w.iter().map(|x| x.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.w == [0; WORDS]
    }

    pub fn union(&self, o: &EdgeSet) -> EdgeSet {
        EdgeSet { w: [self.w[0] | o.w[0], self.w[1] | o.w[1], self.w[2] | o.w[2]] }
    }

    pub fn intersection(&self, o: &EdgeSet) -> EdgeSet {
        EdgeSet { w: [self.w[0] & o.w[0], self.w[1] & o.w[1], self.w[2] & o.w[2]] }
    }

    pub fn difference(&self, o: &EdgeSet) -> EdgeSet {
        EdgeSet { w: [self.w[0] & !o.w[0], self.w[1] & !o.w[1], self.w[2] & !o.w[2]] }
    }

    pub fn symmetric_difference(&self, o: &EdgeSet) -> EdgeSet {
        EdgeSet { w: [self.w[0] ^ o.w[0], self.w[1] ^ o.w[1], self.w[2] ^ o.w[2]] }
    }

    /// The set {0, 1, .., len-1}.
    pub fn full(len: usize) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn is_disjoint(&self, o: &EdgeSet) -> bool {
        self.intersection(o).is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS).flat_map(move |i| {
            let mut word = self.w[i];
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(64 * i + b)
                }
            })
        })
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::EMPTY;
        for e in it {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple 3-regular graph on dense vertices 0..n-1.
///
/// Immutable once constructed; all operations that change the vertex or
/// edge set produce a new value (or a multipole).
#[derive(Clone, PartialEq, Eq)]
pub struct CubicGraph {
    adj: Vec<[u32; 3]>,
    edges: Vec<(u32, u32)>,
    incident: Vec<[u32; 3]>,
    labels: Option<Vec<u64>>,
}

impl CubicGraph {
    /// Builds a graph from an undirected edge list over vertices 0..n-1.
    pub fn from_edges(n: usize, edge_list: &[(u32, u32)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n, MAX_VERTICES));
        }
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a as usize >= n {
                return Err(Error::UnknownVertex(a as u64));
            }
            if b as usize >= n {
                return Err(Error::UnknownVertex(b as u64));
            }
            if a == b {
                return Err(Error::SelfLoop(a as u64));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0].0 as u64, w[0].1 as u64));
        }
        let mut deg = vec![0usize; n];
        for &(a, b) in &edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        if let Some(v) = (0..n).find(|&v| deg[v] != 3) {
            return Err(Error::NonCubic(v as u64, deg[v]));
        }
        let mut adj = vec![[0u32; 3]; n];
        let mut incident = vec![[0u32; 3]; n];
        let mut fill = vec![0usize; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (x, y) in [(a, b), (b, a)] {
                adj[x as usize][fill[x as usize]] = y;
                incident[x as usize][fill[x as usize]] = i as u32;
                fill[x as usize] += 1;
            }
        }
        // edges are sorted, so each adjacency triple is sorted already for
        // the first endpoint but not the second; normalise both together
        for v in 0..n {
            let mut pairs: Vec<(u32, u32)> = (0..3).map(|k| (adj[v][k], incident[v][k])).collect();
            pairs.sort_unstable();
            for k in 0..3 {
                adj[v][k] = pairs[k].0;
                incident[v][k] = pairs[k].1;
            }
        }
        Ok(CubicGraph { adj, edges, incident, labels: None })
    }

    /// Parses the adjacency-list text format: entries `v: a b c` separated
    /// by `;`, arbitrary whitespace, optional surrounding braces.  Labels
    /// may be any distinct non-negative integers; they are remembered and
    /// reused by [`CubicGraph::to_adjacency_list`].
    pub fn parse_adjacency_list(text: &str) -> Result<Self> {
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('{') {
            body = inner.strip_suffix('}').ok_or_else(|| Error::Parse {
                entry: 0,
                msg: "unbalanced braces".into(),
            })?;
        }
        let mut order: Vec<u64> = Vec::new();
        let mut lists: Vec<[u64; 3]> = Vec::new();
        for (entry, chunk) in body.split(';').enumerate() {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (head, tail) = chunk.split_once(':').ok_or_else(|| Error::Parse {
                entry,
                msg: format!("missing ':' in {chunk:?}"),
            })?;
            let v: u64 = head.trim().parse().map_err(|_| Error::Parse {
                entry,
                msg: format!("bad vertex label {:?}", head.trim()),
            })?;
            let nbrs: Vec<u64> = tail
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        entry,
                        msg: format!("bad neighbour {t:?} of {v}"),
                    })
                })
                .collect::<Result<_>>()?;
            if order.contains(&v) {
                return Err(Error::DuplicateVertex(v));
            }
            if nbrs.len() != 3 {
                return Err(Error::NonCubic(v, nbrs.len()));
            }
            if nbrs.contains(&v) {
                return Err(Error::SelfLoop(v));
            }
            if nbrs[0] == nbrs[1] || nbrs[0] == nbrs[2] || nbrs[1] == nbrs[2] {
                let d = if nbrs[0] == nbrs[1] || nbrs[0] == nbrs[2] { nbrs[0] } else { nbrs[1] };
                return Err(Error::ParallelEdge(v, d));
            }
            order.push(v);
            lists.push([nbrs[0], nbrs[1], nbrs[2]]);
        }
        let n = order.len();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        let index_of = |label: u64| sorted.binary_search(&label).ok();
        let mut edge_list = Vec::with_capacity(3 * n / 2);
        for (slot, &v) in order.iter().enumerate() {
            let vi = index_of(v).unwrap() as u32;
            for &w in &lists[slot] {
                let wi = index_of(w).ok_or(Error::UnknownVertex(w))? as u32;
                // symmetry: w's own list must mention v
                let wslot = order.iter().position(|&x| x == w).unwrap();
                if !lists[wslot].contains(&v) {
                    return Err(Error::Asymmetric(v, w));
                }
                if vi < wi {
                    edge_list.push((vi, wi));
                }
            }
        }
        let mut g = Self::from_edges(n, &edge_list)?;
        if sorted.iter().enumerate().any(|(i, &l)| l != i as u64) {
            g.labels = Some(sorted);
        }
        Ok(g)
    }

    /// Inverse of [`CubicGraph::parse_adjacency_list`], one entry per line.
    pub fn to_adjacency_list(&self) -> String {
        let name = |v: usize| match &self.labels {
            Some(l) => l[v],
            None => v as u64,
        };
        let mut out = String::new();
        for v in 0..self.n() {
            let a = self.adj[v];
            let sep = if v + 1 < self.n() { ";\n" } else { "\n" };
            out.push_str(&format!(
                "{}: {} {} {}{}",
                name(v),
                name(a[0] as usize),
                name(a[1] as usize),
                name(a[2] as usize),
                sep
            ));
        }
        out
    }

    /// Standard graph6 encoding (dense labels, no header).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else {
            out.push(126);
            out.push(63 + ((n >> 12) & 63) as u8);
            out.push(63 + ((n >> 6) & 63) as u8);
            out.push(63 + (n & 63) as u8);
        }
        let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(self.edge_between(i as u32, j as u32).is_some());
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        for group in bits.chunks(6) {
            let mut b = 0u8;
            for (k, &bit) in group.iter().enumerate() {
                if bit {
                    b |= 1 << (5 - k);
                }
            }
            out.push(63 + b);
        }
        String::from_utf8(out).unwrap()
    }

    /// Decodes graph6 (the optional `>>graph6<<` prefix is accepted) and
    /// validates that the result is simple cubic.
    pub fn from_graph6(s: &str) -> Result<Self> {
        let s = s.trim_end_matches(['\n', '\r']);
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6("byte out of range 63..=126".into()));
        }
        let (n, mut pos) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(Error::Graph6("more than 258047 vertices".into()));
            }
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated vertex count".into()));
            }
            let n = ((bytes[1] - 63) as usize) << 12
                | ((bytes[2] - 63) as usize) << 6
                | (bytes[3] - 63) as usize;
            (n, 4)
        } else {
            ((bytes[0] - 63) as usize, 1)
        };
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n, MAX_VERTICES));
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let need = (nbits + 5) / 6;
        if bytes.len() - pos < need {
            return Err(Error::Graph6("truncated bit vector".into()));
        }
        if bytes.len() - pos > need {
            return Err(Error::Graph6("trailing data".into()));
        }
        let mut edge_list = Vec::new();
        let mut bit = 0usize;
        'outer: for j in 1..n {
            for i in 0..j {
                let byte = bytes[pos + bit / 6] - 63;
                if byte >> (5 - bit % 6) & 1 == 1 {
                    edge_list.push((i as u32, j as u32));
                }
                bit += 1;
                if bit > nbits {
                    break 'outer;
                }
            }
        }
        // padding bits must be zero
        for b in nbits..need * 6 {
            let byte = bytes[pos + b / 6] - 63;
            if byte >> (5 - b % 6) & 1 == 1 {
                return Err(Error::Graph6("nonzero padding".into()));
            }
        }
        pos += need;
        let _ = pos;
        Self::from_edges(n, &edge_list)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (u32, u32) {
        self.edges[e]
    }

    pub fn neighbours(&self, v: u32) -> [u32; 3] {
        self.adj[v as usize]
    }

    /// Edge indices incident with `v`, ascending.
    pub fn incident_edges(&self, v: u32) -> [u32; 3] {
        self.incident[v as usize]
    }

    pub fn edge_between(&self, a: u32, b: u32) -> Option<usize> {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.binary_search(&(a, b)).ok()
    }

    /// The vertex of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: u32) -> u32 {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Original input labels if the parsed source was not densely labelled.
    pub fn relabeling(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Forgets any stored input labels.
    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_of(0, u128::MAX).count_ones() as usize == self.n()
    }

    /// Vertices reachable from `start` inside the `allowed` mask.
    pub fn component_of(&self, start: u32, allowed: u128) -> u128 {
        if allowed >> start & 1 == 0 {
            return 0;
        }
        let mut seen = 1u128 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v as usize] {
                if allowed >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut left = (0..self.n() as u32).collect::<Vec<_>>();
        let mut out = Vec::new();
        let mut seen = 0u128;
        while let Some(&v) = left.first() {
            let comp = self.component_of(v, !seen);
            seen |= comp;
            out.push((0..self.n() as u32).filter(|&x| comp >> x & 1 == 1).collect());
            left.retain(|&x| seen >> x & 1 == 0);
        }
        out
    }

    /// Edges whose removal disconnects the graph (Tarjan lowpoint).
    pub fn bridges(&self) -> EdgeSet {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = EdgeSet::EMPTY;
        let mut timer = 0;
        // iterative DFS: (vertex, parent edge, next neighbour slot)
        for root in 0..n as u32 {
            if disc[root as usize] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(u32, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root as usize] = timer;
            low[root as usize] = timer;
            timer += 1;
            while let Some(&mut (v, pe, ref mut slot)) = stack.last_mut() {
                if *slot < 3 {
                    let k = *slot;
                    *slot += 1;
                    let e = self.incident[v as usize][k] as usize;
                    if e == pe {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if disc[w as usize] == usize::MAX {
                        disc[w as usize] = timer;
                        low[w as usize] = timer;
                        timer += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v as usize] = low[v as usize].min(disc[w as usize]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p as usize] = low[p as usize].min(low[v as usize]);
                        if low[v as usize] > disc[p as usize] {
                            out.insert(pe);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicGraph(n={}, m={})", self.n(), self.m())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_graph6_is_c_tilde() {
        assert_eq!(k4().to_graph6(), "C~");
        let back = CubicGraph::from_graph6("C~").unwrap();
        assert_eq!(back, k4());
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(CubicGraph::from_graph6("").is_err());
        assert!(CubicGraph::from_graph6("C").is_err()); // truncated bits
        assert!(CubicGraph::from_graph6("C~~").is_err()); // trailing data
        assert!(CubicGraph::from_graph6("C\u{7f}").is_err()); // byte range
        assert!(CubicGraph::from_graph6("D~{").is_err()); // 5 vertices, not cubic
    }

    #[test]
    fn adjacency_list_round_trip() {
        let g = CubicGraph::parse_adjacency_list("0: 1 2 3; 1: 0 2 3; 2: 0 1 3; 3: 0 1 2").unwrap();
        assert_eq!(g, k4());
        assert_eq!(CubicGraph::parse_adjacency_list(&g.to_adjacency_list()).unwrap(), g);
        // optional braces and odd whitespace
        let h = CubicGraph::parse_adjacency_list("{0: 1 2 3;\n 1: 0 2 3; 2: 0 1 3;\t3: 0 1 2}")
            .unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn sparse_labels_are_preserved() {
        let text = "10: 20 30 40; 20: 10 30 40; 30: 10 20 40; 40: 10 20 30";
        let g = CubicGraph::parse_adjacency_list(text).unwrap();
        assert_eq!(g.relabeling(), Some(&[10, 20, 30, 40][..]));
        let again = CubicGraph::parse_adjacency_list(&g.to_adjacency_list()).unwrap();
        assert_eq!(again, g);
        assert_eq!(g.clone().without_labels(), k4());
    }

    #[test]
    fn parse_errors_are_specific() {
        let e = CubicGraph::parse_adjacency_list("0: 1 2; 1: 0 2 3; 2: 0 1 3; 3: 1 2 0");
        assert!(matches!(e, Err(Error::NonCubic(0, 2))));
        let e = CubicGraph::parse_adjacency_list("0: 1 2 3; 0: 1 2 3");
        assert!(matches!(e, Err(Error::DuplicateVertex(0))));
        let e = CubicGraph::parse_adjacency_list("0: 1 1 2; 1: 0 0 2; 2: 0 1 0");
        assert!(matches!(e, Err(Error::ParallelEdge(0, 1))));
        let e = CubicGraph::parse_adjacency_list("0: 0 1 2; 1: 0 2 2; 2: 0 1 1");
        assert!(matches!(e, Err(Error::SelfLoop(0))));
        // 0 lists 3 but 3 does not list 0
        let e = CubicGraph::parse_adjacency_list("0: 1 2 3; 1: 0 2 3; 2: 0 1 3; 3: 1 2 2");
        assert!(e.is_err());
    }

    #[test]
    fn edge_set_ops() {
        let mut s: EdgeSet = [1usize, 5, 70, 130].into_iter().collect();
        assert_eq!(s.len(), 4);
        assert!(s.contains(70));
        s.remove(70);
        assert!(!s.contains(70));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 5, 130]);
        let t = EdgeSet::singleton(5);
        assert_eq!(s.intersection(&t), t);
        assert!(s.union(&t).len() == 3 && s.difference(&t).len() == 2);
    }

    #[test]
    fn incidence_is_consistent() {
        let g = k4();
        for v in 0..4u32 {
            for e in g.incident_edges(v) {
                let (a, b) = g.endpoints(e as usize);
                assert!(a == v || b == v);
            }
        }
        assert_eq!(g.edge_between(2, 0), g.edge_between(0, 2));
        assert!(g.is_connected());
        assert!(g.bridges().is_empty());
    }
}
