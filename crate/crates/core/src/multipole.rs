//! Multipoles: partial cubic graphs with semiedges grouped into connectors.
//!
//! A k-pole has vertices of degree exactly 3, where the degree counts edge
//! ends.  An edge has two ends, each either attached to a vertex or free;
//! an edge with one free end dangles from a vertex, an edge with two free
//! ends is isolated.  Free ends are the semiedges.  The k semiedges carry
//! a fixed linear order and are partitioned into ordered groups called
//! connectors.
//!
//! Joining two semiedges splices their edges into one.  Joining the two
//! ends of the same isolated edge produces a free loop, which is retained
//! as a warning flag rather than an edge.  Multipoles may contain parallel
//! edges and loops; these are only rejected when converting back to a
//! [`CubicGraph`].
//!
//! Public operations identify a semiedge by its current position in the
//! global order (`0..k`), which is always the concatenation of the
//! connectors.

use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum End {
    Vertex(u32),
    /// Stable internal label, not a position.
    Semi(u32),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multipole {
    nv: usize,
    edges: Vec<[End; 2]>,
    /// Stable semiedge labels in global order (connector concatenation).
    order: Vec<u32>,
    /// Connector groups of stable labels; no group is empty.
    connectors: Vec<Vec<u32>>,
    free_loops: usize,
    next_label: u32,
}

/// Result of a complete junction: a cubic graph when every vertex
/// survives the simplicity checks, otherwise the raw multipole plus
/// diagnostics saying what blocked the conversion.
pub enum JunctionOutcome {
    Graph(CubicGraph),
    Partial(Multipole, Vec<String>),
}

impl Multipole {
    /// Wraps a cubic graph as a 0-pole.
    pub fn from_graph(g: &CubicGraph) -> Multipole {
        Multipole {
            nv: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|&(a, b)| [End::Vertex(a), End::Vertex(b)])
                .collect(),
            order: Vec::new(),
            connectors: Vec::new(),
            free_loops: 0,
            next_label: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.nv
    }

    /// Number of semiedges.
    pub fn k(&self) -> usize {
        self.order.len()
    }

    pub fn connector_sizes(&self) -> Vec<usize> {
        self.connectors.iter().map(|c| c.len()).collect()
    }

    /// Connector groups as positions into the global semiedge order.
    pub fn connectors(&self) -> Vec<Vec<usize>> {
        let mut pos = 0;
        self.connectors
            .iter()
            .map(|c| {
                let g = (pos..pos + c.len()).collect();
                pos += c.len();
                g
            })
            .collect()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Edge list with vertex endpoints or semiedge positions.
    pub fn edge_view(&self) -> Vec<(MEnd, MEnd)> {
        self.edges
            .iter()
            .map(|e| (self.view(e[0]), self.view(e[1])))
            .collect()
    }

    fn view(&self, end: End) -> MEnd {
        match end {
            End::Vertex(v) => MEnd::Vertex(v),
            End::Semi(l) => MEnd::Semi(self.position_of(l)),
        }
    }

    fn position_of(&self, label: u32) -> usize {
        self.order.iter().position(|&x| x == label).unwrap()
    }

    /// Vertex holding the dangling edge behind semiedge position `s`, or
    /// None when the semiedge belongs to an isolated edge.
    pub fn vertex_of_semiedge(&self, s: usize) -> Option<u32> {
        let label = *self.order.get(s)?;
        for e in &self.edges {
            for (i, &end) in e.iter().enumerate() {
                if end == End::Semi(label) {
                    if let End::Vertex(v) = e[1 - i] {
                        return Some(v);
                    }
                    return None;
                }
            }
        }
        None
    }

    /// Regroups the semiedges.  `groups` lists current positions; they
    /// must partition 0..k.  The global order becomes the concatenation.
    pub fn set_connectors(&mut self, groups: &[Vec<usize>]) -> Result<()> {
        let k = self.k();
        let mut seen = vec![false; k];
        for g in groups {
            if g.is_empty() {
                return Err(Error::BadConnectors("empty group".into()));
            }
            for &p in g {
                if p >= k || seen[p] {
                    return Err(Error::BadConnectors(format!("position {p}")));
                }
                seen[p] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::BadConnectors("positions missing".into()));
        }
        let old = self.order.clone();
        self.connectors = groups
            .iter()
            .map(|g| g.iter().map(|&p| old[p]).collect())
            .collect();
        self.order = self.connectors.concat();
        Ok(())
    }

    /// Checks the degree-3 invariant and internal consistency.
    pub fn validate(&self) -> Result<()> {
        let mut deg = vec![0usize; self.nv];
        let mut semis = Vec::new();
        for e in &self.edges {
            for &end in e {
                match end {
                    End::Vertex(v) => {
                        if v as usize >= self.nv {
                            return Err(Error::UnknownVertex(v as u64));
                        }
                        deg[v as usize] += 1;
                    }
                    End::Semi(l) => semis.push(l),
                }
            }
        }
        if let Some(v) = (0..self.nv).find(|&v| deg[v] != 3) {
            return Err(Error::NonCubic(v as u64, deg[v]));
        }
        semis.sort_unstable();
        let mut order = self.order.clone();
        order.sort_unstable();
        if semis != order {
            return Err(Error::BadConnectors("order out of sync with edges".into()));
        }
        if self.connectors.concat() != self.order {
            return Err(Error::BadConnectors("connectors out of sync".into()));
        }
        Ok(())
    }

    /// Joins the semiedges at positions `s` and `t` into one edge (or a
    /// free loop when they are the two ends of the same isolated edge).
    pub fn join(&mut self, s: usize, t: usize) -> Result<()> {
        if s == t {
            return Err(Error::Invalid("cannot join a semiedge with itself".into()));
        }
        let ls = *self.order.get(s).ok_or(Error::UnknownSemiedge(s))?;
        let lt = *self.order.get(t).ok_or(Error::UnknownSemiedge(t))?;
        self.join_labels(ls, lt);
        Ok(())
    }

    fn join_labels(&mut self, ls: u32, lt: u32) {
        let find = |edges: &[[End; 2]], l: u32| -> (usize, usize) {
            for (i, e) in edges.iter().enumerate() {
                for side in 0..2 {
                    if e[side] == End::Semi(l) {
                        return (i, side);
                    }
                }
            }
            unreachable!("semiedge label {l} not found");
        };
        let (e1, s1) = find(&self.edges, ls);
        let (e2, s2) = find(&self.edges, lt);
        if e1 == e2 {
            self.edges.remove(e1);
            self.free_loops += 1;
        } else {
            let merged = [self.edges[e1][1 - s1], self.edges[e2][1 - s2]];
            let (hi, lo) = (e1.max(e2), e1.min(e2));
            self.edges.remove(hi);
            self.edges.remove(lo);
            self.edges.push(merged);
        }
        self.order.retain(|&l| l != ls && l != lt);
        for c in &mut self.connectors {
            c.retain(|&l| l != ls && l != lt);
        }
        self.connectors.retain(|c| !c.is_empty());
    }

    /// Splits an internal edge `u-w` into `u-x-w` with a fresh vertex `x`
    /// carrying a new dangling edge; the new semiedge becomes a trailing
    /// one-element connector.
    pub fn subdivide_and_attach(&mut self, edge: usize) -> Result<()> {
        let e = *self.edges.get(edge).ok_or(Error::UnknownEdge(edge))?;
        let (u, w) = match e {
            [End::Vertex(u), End::Vertex(w)] => (u, w),
            _ => return Err(Error::Invalid("can only subdivide an internal edge".into())),
        };
        let x = self.nv as u32;
        self.nv += 1;
        self.edges.remove(edge);
        self.edges.push([End::Vertex(u), End::Vertex(x)]);
        self.edges.push([End::Vertex(x), End::Vertex(w)]);
        let label = self.next_label;
        self.next_label += 1;
        self.edges.push([End::Vertex(x), End::Semi(label)]);
        self.order.push(label);
        self.connectors.push(vec![label]);
        Ok(())
    }

    /// Converts a 0-pole back into a cubic graph; fails on remaining
    /// semiedges, free loops, loops, or parallel edges.
    pub fn try_into_graph(&self) -> Result<CubicGraph> {
        if self.k() > 0 {
            return Err(Error::NotAGraph(format!("{} semiedges remain", self.k())));
        }
        if self.free_loops > 0 {
            return Err(Error::NotAGraph(format!("{} free loops", self.free_loops)));
        }
        let mut list = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            match *e {
                [End::Vertex(a), End::Vertex(b)] => list.push((a, b)),
                _ => unreachable!(),
            }
        }
        CubicGraph::from_edges(self.nv, &list)
    }

    /// Renumbers the other multipole's vertices and labels after ours so
    /// the two edge lists can be merged.
    fn absorb(&mut self, other: &Multipole) -> Vec<u32> {
        let dv = self.nv as u32;
        let dl = self.next_label;
        self.nv += other.nv;
        for e in &other.edges {
            self.edges.push(e.map(|end| match end {
                End::Vertex(v) => End::Vertex(v + dv),
                End::Semi(l) => End::Semi(l + dl),
            }));
        }
        for c in &other.connectors {
            self.connectors.push(c.iter().map(|&l| l + dl).collect());
        }
        self.order.extend(other.order.iter().map(|&l| l + dl));
        self.next_label += other.next_label;
        other.order.iter().map(|&l| l + dl).collect()
    }

    /// Serializes to the versioned multipole text format:
    ///
    /// ```text
    /// # multipole v1
    /// 0: 1 2 s0;
    /// 1: 0 2 s1;
    /// 2: 0 1 3;
    /// 3: 2 s2 s3
    /// isolated: s4 s5
    /// connectors: [s0 s1][s2 s3][s4 s5]
    /// ```
    ///
    /// Vertex entries follow the graph adjacency-list format with extra
    /// `s<position>` tokens for semiedges; parallel edges repeat the
    /// neighbour and loops repeat the vertex itself.  Isolated edges are
    /// listed as semiedge pairs on the `isolated:` line, and the
    /// `connectors:` line groups semiedge positions.
    pub fn to_text(&self) -> String {
        let pos = |l: u32| self.position_of(l);
        let mut slots: Vec<Vec<String>> = vec![Vec::new(); self.nv];
        let mut isolated: Vec<(usize, usize)> = Vec::new();
        for e in &self.edges {
            match *e {
                [End::Vertex(a), End::Vertex(b)] => {
                    slots[a as usize].push(b.to_string());
                    slots[b as usize].push(a.to_string());
                }
                [End::Vertex(v), End::Semi(l)] | [End::Semi(l), End::Vertex(v)] => {
                    slots[v as usize].push(format!("s{}", pos(l)));
                }
                [End::Semi(a), End::Semi(b)] => {
                    let (pa, pb) = (pos(a), pos(b));
                    isolated.push((pa.min(pb), pa.max(pb)));
                }
            }
        }
        isolated.sort_unstable();
        let key = |t: &String| -> (u8, u64) {
            match t.strip_prefix('s') {
                Some(rest) => (1, rest.parse().unwrap()),
                None => (0, t.parse().unwrap()),
            }
        };
        let mut out = String::from("# multipole v1\n");
        for (v, mut list) in slots.into_iter().enumerate() {
            list.sort_by_key(key);
            let sep = if v + 1 < self.nv { ";" } else { "" };
            out.push_str(&format!("{}: {}{}\n", v, list.join(" "), sep));
        }
        if !isolated.is_empty() {
            let parts: Vec<String> =
                isolated.iter().map(|&(a, b)| format!("s{a} s{b}")).collect();
            out.push_str(&format!("isolated: {}\n", parts.join("; ")));
        }
        if self.k() > 0 {
            let mut line = String::from("connectors: ");
            for c in &self.connectors {
                let toks: Vec<String> = c.iter().map(|&l| format!("s{}", pos(l))).collect();
                line.push_str(&format!("[{}]", toks.join(" ")));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`Multipole::to_text`].
    pub fn parse_text(text: &str) -> Result<Multipole> {
        let bad = |msg: String| Error::MultipoleText(msg);
        let mut vertex_body = String::new();
        let mut isolated_line = None;
        let mut connectors_line = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if rest.starts_with("multipole") && rest != "multipole v1" {
                    return Err(bad(format!("unsupported version {rest:?}")));
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("isolated:") {
                isolated_line = Some(rest.to_string());
            } else if let Some(rest) = line.strip_prefix("connectors:") {
                connectors_line = Some(rest.to_string());
            } else {
                vertex_body.push_str(line);
                vertex_body.push(' ');
            }
        }
        let parse_semi = |tok: &str| -> Result<usize> {
            tok.strip_prefix('s')
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| bad(format!("bad semiedge token {tok:?}")))
        };

        let mut vertex_slots: Vec<(u32, Vec<String>)> = Vec::new();
        for chunk in vertex_body.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (head, tail) = chunk
                .split_once(':')
                .ok_or_else(|| bad(format!("missing ':' in {chunk:?}")))?;
            let v: u32 = head
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad vertex {head:?}")))?;
            if vertex_slots.iter().any(|(u, _)| *u == v) {
                return Err(Error::DuplicateVertex(v as u64));
            }
            vertex_slots.push((v, tail.split_whitespace().map(str::to_string).collect()));
        }
        let nv = vertex_slots.len();
        vertex_slots.sort_by_key(|(v, _)| *v);
        if vertex_slots.iter().enumerate().any(|(i, (v, _))| *v != i as u32) {
            return Err(bad("vertex labels must be 0..n-1".into()));
        }

        let mut edges: Vec<[End; 2]> = Vec::new();
        let mut semi_positions: Vec<(usize, Option<u32>)> = Vec::new(); // (position, owning vertex)
        // vertex-vertex edges come from the symmetric multiset of mentions
        let mut mention: std::collections::BTreeMap<(u32, u32), usize> = Default::default();
        for (v, toks) in &vertex_slots {
            if toks.len() != 3 {
                return Err(Error::NonCubic(*v as u64, toks.len()));
            }
            for t in toks {
                if t.starts_with('s') {
                    let p = parse_semi(t)?;
                    if semi_positions.iter().any(|&(q, _)| q == p) {
                        return Err(bad(format!("semiedge s{p} used twice")));
                    }
                    semi_positions.push((p, Some(*v)));
                } else {
                    let w: u32 = t.parse().map_err(|_| bad(format!("bad token {t:?}")))?;
                    if w as usize >= nv {
                        return Err(Error::UnknownVertex(w as u64));
                    }
                    *mention.entry((*v, w)).or_default() += 1;
                }
            }
        }
        for (&(v, w), &c) in &mention {
            if v < w {
                if mention.get(&(w, v)) != Some(&c) {
                    return Err(Error::Asymmetric(v as u64, w as u64));
                }
                for _ in 0..c {
                    edges.push([End::Vertex(v), End::Vertex(w)]);
                }
            } else if v == w {
                if c % 2 != 0 {
                    return Err(bad(format!("odd loop multiplicity at {v}")));
                }
                for _ in 0..c / 2 {
                    edges.push([End::Vertex(v), End::Vertex(v)]);
                }
            }
        }
        if let Some(line) = isolated_line {
            for pair in line.split(';') {
                let pair = pair.trim();
                if pair.is_empty() {
                    continue;
                }
                let toks: Vec<&str> = pair.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(bad(format!("isolated entry {pair:?} is not a pair")));
                }
                let (a, b) = (parse_semi(toks[0])?, parse_semi(toks[1])?);
                for &p in &[a, b] {
                    if semi_positions.iter().any(|&(q, _)| q == p) {
                        return Err(bad(format!("semiedge s{p} used twice")));
                    }
                }
                if a == b {
                    return Err(bad(format!("isolated pair repeats s{a}")));
                }
                edges.push([End::Semi(a as u32), End::Semi(b as u32)]);
                semi_positions.push((a, None));
                semi_positions.push((b, None));
            }
        }
        let k = semi_positions.len();
        {
            let mut ps: Vec<usize> = semi_positions.iter().map(|&(p, _)| p).collect();
            ps.sort_unstable();
            if ps.iter().enumerate().any(|(i, &p)| p != i) {
                return Err(bad("semiedge positions must be 0..k-1".into()));
            }
        }
        // dangling edges, one per vertex-owned semiedge; labels = positions
        for &(p, owner) in &semi_positions {
            if let Some(v) = owner {
                edges.push([End::Vertex(v), End::Semi(p as u32)]);
            }
        }
        let connectors: Vec<Vec<u32>> = match connectors_line {
            Some(line) => {
                let line = line.trim();
                let mut groups = Vec::new();
                let mut rest = line;
                while !rest.is_empty() {
                    let open = rest
                        .strip_prefix('[')
                        .ok_or_else(|| bad(format!("expected '[' in {line:?}")))?;
                    let (body, tail) = open
                        .split_once(']')
                        .ok_or_else(|| bad(format!("unbalanced ']' in {line:?}")))?;
                    let mut group = Vec::new();
                    for t in body.split_whitespace() {
                        group.push(parse_semi(t)? as u32);
                    }
                    if group.is_empty() {
                        return Err(Error::BadConnectors("empty group".into()));
                    }
                    groups.push(group);
                    rest = tail.trim_start();
                }
                groups
            }
            None if k == 0 => Vec::new(),
            None => return Err(bad("missing connectors line".into())),
        };
        {
            let mut all: Vec<u32> = connectors.concat();
            all.sort_unstable();
            if all.len() != k || all.iter().enumerate().any(|(i, &p)| p != i as u32) {
                return Err(Error::BadConnectors(
                    "groups do not partition the semiedges".into(),
                ));
            }
        }
        let mp = Multipole {
            nv,
            edges,
            order: connectors.concat(),
            connectors,
            free_loops: 0,
            next_label: k as u32,
        };
        mp.validate()?;
        Ok(mp)
    }
}

/// An edge end as seen from outside: a vertex or a semiedge position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MEnd {
    Vertex(u32),
    Semi(usize),
}

impl fmt::Debug for Multipole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Multipole(nv={}, k={}, connectors={:?})",
            self.nv,
            self.k(),
            self.connector_sizes()
        )
    }
}

/// Joins the two multipoles semiedge-by-semiedge: position `i` of `a`
/// with position `perm[i]` of `b` (identity when `perm` is None).  Both
/// must have the same number of semiedges.
pub fn complete_junction(
    a: &Multipole,
    b: &Multipole,
    perm: Option<&[usize]>,
) -> Result<JunctionOutcome> {
    let k = a.k();
    if k != b.k() {
        return Err(Error::SemiedgeCountMismatch(k, b.k()));
    }
    let perm = normalise_perm(perm, k)?;
    let mut joined = a.clone();
    let b_labels = joined.absorb(b);
    let a_labels: Vec<u32> = a.order.clone();
    for i in 0..k {
        joined.join_labels(a_labels[i], b_labels[perm[i]]);
    }
    Ok(finish_junction(joined))
}

fn finish_junction(m: Multipole) -> JunctionOutcome {
    let mut diags = Vec::new();
    if m.k() > 0 {
        diags.push(format!("{} semiedges remain", m.k()));
    }
    if m.free_loops > 0 {
        diags.push(format!("{} free loops", m.free_loops));
    }
    let mut seen: Vec<(u32, u32)> = Vec::new();
    for e in &m.edges {
        if let [End::Vertex(x), End::Vertex(y)] = *e {
            if x == y {
                diags.push(format!("loop at {x}"));
            } else {
                let key = (x.min(y), x.max(y));
                if seen.contains(&key) {
                    diags.push(format!("parallel edge {}-{}", key.0, key.1));
                } else {
                    seen.push(key);
                }
            }
        }
    }
    if diags.is_empty() {
        match m.try_into_graph() {
            Ok(g) => JunctionOutcome::Graph(g),
            Err(e) => JunctionOutcome::Partial(m, vec![e.to_string()]),
        }
    } else {
        JunctionOutcome::Partial(m, diags)
    }
}

fn normalise_perm(perm: Option<&[usize]>, k: usize) -> Result<Vec<usize>> {
    match perm {
        None => Ok((0..k).collect()),
        Some(p) => {
            if p.len() != k {
                return Err(Error::BadPermutation(format!(
                    "length {} but {k} semiedges",
                    p.len()
                )));
            }
            let mut seen = vec![false; k];
            for &x in p {
                if x >= k || seen[x] {
                    return Err(Error::BadPermutation(format!("entry {x}")));
                }
                seen[x] = true;
            }
            Ok(p.to_vec())
        }
    }
}

/// Partial junction of dipole chains: joins the second connector of `a`
/// with the first connector of `b` pairwise (position `i` of the one with
/// position `perm[i]` of the other).  The result keeps `a`'s remaining
/// connectors followed by `b`'s remaining connectors, so for dipoles it
/// is again a dipole with `a`'s first and `b`'s second connector.
pub fn dipole_junction(a: &Multipole, b: &Multipole, perm: Option<&[usize]>) -> Result<Multipole> {
    if a.connectors.len() < 2 {
        return Err(Error::Invalid(format!(
            "left operand has {} connectors, needs at least 2",
            a.connectors.len()
        )));
    }
    if b.connectors.is_empty() {
        return Err(Error::Invalid("right operand has no connectors".into()));
    }
    let sa = a.connectors[1].len();
    let sb = b.connectors[0].len();
    if sa != sb {
        return Err(Error::ConnectorMismatch(sa, sb));
    }
    let perm = normalise_perm(perm, sa)?;
    let mut joined = a.clone();
    let b_labels = joined.absorb(b);
    let a_second: Vec<u32> = a.connectors[1].clone();
    let b_first_len = b.connectors[0].len();
    let b_first: Vec<u32> = b_labels[..b_first_len].to_vec();
    for i in 0..sa {
        joined.join_labels(a_second[i], b_first[perm[i]]);
    }
    // order connectors: a's first, a's extras, b's second, b's extras
    let mut groups: Vec<Vec<u32>> = Vec::new();
    for (i, c) in a.connectors.iter().enumerate() {
        if i != 1 {
            groups.push(c.clone());
        }
    }
    let mut off = b_first_len;
    for c in b.connectors.iter().skip(1) {
        groups.push(b_labels[off..off + c.len()].to_vec());
        off += c.len();
    }
    joined.connectors = groups;
    joined.order = joined.connectors.concat();
    debug_assert!(joined.validate().is_ok());
    Ok(joined)
}

impl CubicGraph {
    /// Deletes vertices and edges, producing a multipole.  Each deleted
    /// edge with two surviving endpoints leaves a semiedge at both; each
    /// edge from a deleted to a surviving vertex leaves one semiedge
    /// there; edges between deleted vertices vanish.  Explicitly deleted
    /// edges must not touch deleted vertices.  Surviving vertices are
    /// renumbered in ascending order, and the semiedges are ordered by
    /// (surviving vertex, edge index), all in one connector.
    pub fn delete(&self, vertices: &[u32], edges: &[usize]) -> Result<Multipole> {
        let mut vdel = 0u128;
        for &v in vertices {
            if v as usize >= self.n() {
                return Err(Error::UnknownVertex(v as u64));
            }
            vdel |= 1 << v;
        }
        let mut edel = crate::graph::EdgeSet::EMPTY;
        for &e in edges {
            if e >= self.m() {
                return Err(Error::UnknownEdge(e));
            }
            let (a, b) = self.endpoints(e);
            if vdel >> a & 1 == 1 || vdel >> b & 1 == 1 {
                return Err(Error::DeletionOverlap(e));
            }
            edel.insert(e);
        }
        let mut newid = vec![u32::MAX; self.n()];
        let mut nv = 0u32;
        for v in 0..self.n() as u32 {
            if vdel >> v & 1 == 0 {
                newid[v as usize] = nv;
                nv += 1;
            }
        }
        let mut medges: Vec<[End; 2]> = Vec::new();
        // (surviving vertex, edge index) for the deterministic order
        let mut semis: Vec<(u32, usize)> = Vec::new();
        for (e, &(a, b)) in self.edges().iter().enumerate() {
            let da = vdel >> a & 1 == 1;
            let db = vdel >> b & 1 == 1;
            if edel.contains(e) {
                semis.push((a, e));
                semis.push((b, e));
            } else if da && db {
                continue;
            } else if da {
                semis.push((b, e));
            } else if db {
                semis.push((a, e));
            } else {
                medges.push([End::Vertex(newid[a as usize]), End::Vertex(newid[b as usize])]);
            }
        }
        semis.sort_unstable();
        let order: Vec<u32> = (0..semis.len() as u32).collect();
        for (label, &(v, _)) in semis.iter().enumerate() {
            medges.push([End::Vertex(newid[v as usize]), End::Semi(label as u32)]);
        }
        let connectors = if order.is_empty() { Vec::new() } else { vec![order.clone()] };
        let m = Multipole {
            nv: nv as usize,
            edges: medges,
            order,
            connectors,
            free_loops: 0,
            next_label: semis.len() as u32,
        };
        debug_assert!(m.validate().is_ok());
        Ok(m)
    }
}
