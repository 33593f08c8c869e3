//! 3-edge-colouring search for cubic graphs and multipoles.
//!
//! Colours are 1, 2, 3 read as the nonzero elements of Z_2 x Z_2, so the
//! third colour at a vertex is the XOR of the other two.  The solver is a
//! backtracking search over per-edge colour domains with forced-colour
//! propagation: whenever a vertex has two coloured edges the third is
//! forced.  Branching picks the edge with the fewest remaining colours
//! (saturation first), ties broken by lowest edge index.  Colour symmetry
//! is factored out by fixing one edge to colour 1 and a neighbouring edge
//! to colour 2; full colouring counts are recovered by the orbit factor 6.
//!
//! Multipoles are coloured through the same engine: dangling and isolated
//! edges are items like any other, and a loop makes the instance
//! uncolourable outright.  All entry points take an optional node budget
//! and return `None`-style "undecided" outcomes when it runs out.

use crate::error::{Error, Result};
use crate::graph::{Colour, CubicGraph, EdgeSet};
use crate::multipole::{MEnd, Multipole};
use std::collections::BTreeMap;
use std::fmt;

/// Edge colours indexed by edge (or multipole edge) id; 0 marks an edge
/// that was removed from the instance and carries no colour.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColouring(pub Vec<Colour>);

impl EdgeColouring {
    /// Checks properness on a full cubic graph.
    pub fn is_proper_for(&self, g: &CubicGraph) -> bool {
        self.0.len() == g.m()
            && self.0.iter().all(|&c| (1..=3).contains(&c))
            && (0..g.n() as u32).all(|v| {
                let [a, b, c] = g.incident_edges(v);
                let (x, y, z) = (self.0[a as usize], self.0[b as usize], self.0[c as usize]);
                x != y && x != z && y != z
            })
    }

    /// The three colour classes; for a proper colouring of a cubic graph
    /// each class is a perfect matching.
    pub fn classes(&self) -> [Vec<usize>; 3] {
        let mut out: [Vec<usize>; 3] = Default::default();
        for (e, &c) in self.0.iter().enumerate() {
            if c != 0 {
                out[c as usize - 1].push(e);
            }
        }
        out
    }
}

/// Outcome of a colourability decision.
#[derive(Clone, Debug)]
pub enum ColourDecision {
    Colourable(EdgeColouring),
    Uncolourable,
    /// The node budget ran out before the search finished.
    Undecided,
}

impl ColourDecision {
    pub fn is_colourable(&self) -> Option<bool> {
        match self {
            ColourDecision::Colourable(_) => Some(true),
            ColourDecision::Uncolourable => Some(false),
            ColourDecision::Undecided => None,
        }
    }
}

/// A constraint instance: items to colour and groups (vertices) whose
/// incident items must receive pairwise distinct colours.
struct Instance {
    items: usize,
    active: Vec<bool>,
    groups: Vec<Vec<u32>>,
    item_groups: Vec<Vec<u32>>,
    /// Item behind each semiedge position (multipoles only).
    boundary: Vec<u32>,
    /// A group contains the same item twice (a loop): uncolourable.
    has_loop: bool,
}

impl Instance {
    fn new(items: usize) -> Self {
        Instance {
            items,
            active: vec![true; items],
            groups: Vec::new(),
            item_groups: vec![Vec::new(); items],
            boundary: Vec::new(),
            has_loop: false,
        }
    }

    fn push_group(&mut self, members: Vec<u32>) {
        let gi = self.groups.len() as u32;
        for (i, &it) in members.iter().enumerate() {
            if members[..i].contains(&it) {
                self.has_loop = true;
            }
            self.item_groups[it as usize].push(gi);
        }
        self.groups.push(members);
    }

    fn from_graph(g: &CubicGraph, drop_v: &[u32], drop_e: &EdgeSet) -> Instance {
        let mut inst = Instance::new(g.m());
        let mut vdel = 0u128;
        for &v in drop_v {
            vdel |= 1 << v;
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if drop_e.contains(e) || vdel >> a & 1 == 1 || vdel >> b & 1 == 1 {
                inst.active[e] = false;
            }
        }
        for v in 0..g.n() as u32 {
            if vdel >> v & 1 == 1 {
                continue;
            }
            let members: Vec<u32> = g
                .incident_edges(v)
                .into_iter()
                .filter(|&e| inst.active[e as usize])
                .collect();
            if members.len() >= 2 {
                inst.push_group(members);
            }
        }
        inst
    }

    /// `drop_items` removes single edges; `drop_v` removes vertices along
    /// with every incident edge.
    fn from_multipole(m: &Multipole, drop_v: &[u32], drop_items: &[usize]) -> Instance {
        let view = m.edge_view();
        let mut inst = Instance::new(view.len());
        let mut boundary: Vec<(usize, u32)> = Vec::new();
        for &it in drop_items {
            if it < view.len() {
                inst.active[it] = false;
            }
        }
        for (e, &(a, b)) in view.iter().enumerate() {
            for end in [a, b] {
                if let MEnd::Vertex(v) = end {
                    if drop_v.contains(&v) {
                        inst.active[e] = false;
                    }
                }
            }
        }
        for (e, &(a, b)) in view.iter().enumerate() {
            if !inst.active[e] {
                continue;
            }
            for end in [a, b] {
                if let MEnd::Semi(p) = end {
                    boundary.push((p, e as u32));
                }
            }
        }
        let nv = m.vertex_count() as u32;
        for v in 0..nv {
            if drop_v.contains(&v) {
                continue;
            }
            let mut members = Vec::new();
            for (e, &(a, b)) in view.iter().enumerate() {
                if !inst.active[e] {
                    continue;
                }
                for end in [a, b] {
                    if end == MEnd::Vertex(v) {
                        members.push(e as u32);
                    }
                }
            }
            if members.len() >= 2 {
                inst.push_group(members);
            }
        }
        boundary.sort_unstable();
        inst.boundary = boundary.into_iter().map(|(_, e)| e).collect();
        inst
    }
}

const ALL: u8 = 0b111;

fn mask(c: Colour) -> u8 {
    1 << (c - 1)
}

fn only_colour(m: u8) -> Colour {
    m.trailing_zeros() as Colour + 1
}

enum Flow {
    Stop,
    Exhausted,
    Budget,
}

struct Solver<'a> {
    inst: &'a Instance,
    dom: Vec<u8>,
    col: Vec<Colour>,
    col_trail: Vec<u32>,
    dom_trail: Vec<(u32, u8)>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Solver<'a> {
    fn new(inst: &'a Instance, budget: Option<u64>) -> Self {
        Solver {
            inst,
            dom: inst.active.iter().map(|&a| if a { ALL } else { 0 }).collect(),
            col: vec![0; inst.items],
            col_trail: Vec::new(),
            dom_trail: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    /// Assigns and propagates forced colours; false on conflict.
    fn assign(&mut self, item: u32, c: Colour) -> bool {
        let mut queue = vec![(item, c)];
        while let Some((i, c)) = queue.pop() {
            let iu = i as usize;
            if self.col[iu] != 0 {
                if self.col[iu] != c {
                    return false;
                }
                continue;
            }
            if self.dom[iu] & mask(c) == 0 {
                return false;
            }
            self.col[iu] = c;
            self.col_trail.push(i);
            for &gi in &self.inst.item_groups[iu] {
                for &j in &self.inst.groups[gi as usize] {
                    let ju = j as usize;
                    if j == i {
                        continue;
                    }
                    match self.col[ju] {
                        0 => {
                            let nd = self.dom[ju] & !mask(c);
                            if nd == 0 {
                                return false;
                            }
                            if nd != self.dom[ju] {
                                self.dom_trail.push((j, self.dom[ju]));
                                self.dom[ju] = nd;
                                if nd.count_ones() == 1 {
                                    queue.push((j, only_colour(nd)));
                                }
                            }
                        }
                        cj if cj == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, cmark: usize, dmark: usize) {
        while self.col_trail.len() > cmark {
            let i = self.col_trail.pop().unwrap();
            self.col[i as usize] = 0;
        }
        while self.dom_trail.len() > dmark {
            let (i, d) = self.dom_trail.pop().unwrap();
            self.dom[i as usize] = d;
        }
    }

    /// Fixes a symmetry-breaking pivot: lowest active item that shares a
    /// group with another active item gets colour 1, the lowest such
    /// groupmate gets colour 2.  Returns the orbit factor (6 when fixed,
    /// 1 otherwise) or None when the pivot is already contradictory.
    fn fix_pivot(&mut self) -> Option<u64> {
        let mut pivot: Option<(u32, u32)> = None;
        for g in &self.inst.groups {
            let mut act: Vec<u32> = g
                .iter()
                .copied()
                .filter(|&i| self.inst.active[i as usize])
                .collect();
            if act.len() >= 2 {
                act.sort_unstable();
                let cand = (act[0], act[1]);
                if pivot.map_or(true, |p| cand < p) {
                    pivot = Some(cand);
                }
            }
        }
        match pivot {
            Some((a, b)) => {
                if self.assign(a, 1) && self.assign(b, 2) {
                    Some(6)
                } else {
                    None
                }
            }
            None => Some(1),
        }
    }

    fn next_item(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None; // (popcount, item)
        for i in 0..self.inst.items {
            if self.inst.active[i] && self.col[i] == 0 {
                let pc = self.dom[i].count_ones();
                if best.map_or(true, |(bpc, bi)| (pc, i as u32) < (bpc, bi)) {
                    best = Some((pc, i as u32));
                }
            }
        }
        best.map(|(_, i)| i)
    }

    fn search(&mut self, cb: &mut dyn FnMut(&[Colour]) -> bool) -> Flow {
        let item = match self.next_item() {
            None => return if cb(&self.col) { Flow::Exhausted } else { Flow::Stop },
            Some(i) => i,
        };
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Flow::Budget;
            }
        }
        let dom = self.dom[item as usize];
        for c in 1..=3 {
            if dom & mask(c) == 0 {
                continue;
            }
            let (cm, dm) = (self.col_trail.len(), self.dom_trail.len());
            if self.assign(item, c) {
                match self.search(cb) {
                    Flow::Exhausted => {}
                    stop => return stop,
                }
            }
            self.undo(cm, dm);
        }
        Flow::Exhausted
    }
}

/// Runs the solver; `reduce` fixes the colour-permutation pivot and
/// reports the orbit factor alongside each callback.
fn run(
    inst: &Instance,
    budget: Option<u64>,
    reduce: bool,
    cb: &mut dyn FnMut(&[Colour]) -> bool,
) -> (Flow, u64) {
    if inst.has_loop {
        return (Flow::Exhausted, 1);
    }
    let mut solver = Solver::new(inst, budget);
    let factor = if reduce {
        match solver.fix_pivot() {
            Some(f) => f,
            None => return (Flow::Exhausted, 1),
        }
    } else {
        1
    };
    (solver.search(cb), factor)
}

fn decide(inst: &Instance, budget: Option<u64>) -> ColourDecision {
    let mut witness: Option<Vec<Colour>> = None;
    let (flow, _) = run(inst, budget, true, &mut |col| {
        witness = Some(col.to_vec());
        false
    });
    match flow {
        Flow::Stop => ColourDecision::Colourable(EdgeColouring(witness.unwrap())),
        Flow::Exhausted => ColourDecision::Uncolourable,
        Flow::Budget => ColourDecision::Undecided,
    }
}

/// Decides 3-edge-colourability of a cubic graph.
pub fn colour_graph(g: &CubicGraph, budget: Option<u64>) -> ColourDecision {
    colour_graph_minus(g, &[], &EdgeSet::EMPTY, budget)
}

/// Decides colourability of the graph minus the given vertices (with
/// their incident edges) and minus the given extra edges.
pub fn colour_graph_minus(
    g: &CubicGraph,
    drop_v: &[u32],
    drop_e: &EdgeSet,
    budget: Option<u64>,
) -> ColourDecision {
    decide(&Instance::from_graph(g, drop_v, drop_e), budget)
}

pub fn is_colourable(g: &CubicGraph) -> bool {
    matches!(colour_graph(g, None), ColourDecision::Colourable(_))
}

/// Decides colourability of a multipole (semiedge colours are free).
pub fn colour_multipole(m: &Multipole, budget: Option<u64>) -> ColourDecision {
    colour_multipole_minus(m, &[], &[], budget)
}

pub fn colour_multipole_minus(
    m: &Multipole,
    drop_v: &[u32],
    drop_items: &[usize],
    budget: Option<u64>,
) -> ColourDecision {
    decide(&Instance::from_multipole(m, drop_v, drop_items), budget)
}

/// Enumerates the boundary colour words of a multipole: for every proper
/// colouring, the word of semiedge colours in global order.  Returns
/// words with their colouring counts (over all 6 colour permutations),
/// sorted; None when the budget runs out.
pub fn boundary_words(m: &Multipole, budget: Option<u64>) -> Option<Vec<(Vec<Colour>, u64)>> {
    let inst = Instance::from_multipole(m, &[], &[]);
    let mut acc: BTreeMap<Vec<Colour>, u64> = BTreeMap::new();
    let (flow, factor) = run(&inst, budget, true, &mut |col| {
        let word: Vec<Colour> = inst.boundary.iter().map(|&e| col[e as usize]).collect();
        *acc.entry(word).or_default() += 1;
        true
    });
    match flow {
        Flow::Budget => None,
        _ if factor == 1 => Some(acc.into_iter().collect()),
        _ => {
            // each reduced colouring stands for its 6 permutation images,
            // and a permutation acts on the word pointwise
            let mut full: BTreeMap<Vec<Colour>, u64> = BTreeMap::new();
            for (w, c) in acc {
                for perm in COLOUR_PERMS {
                    let pw: Vec<Colour> = w.iter().map(|&x| perm[x as usize - 1]).collect();
                    *full.entry(pw).or_default() += c;
                }
            }
            Some(full.into_iter().collect())
        }
    }
}

const COLOUR_PERMS: [[Colour; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// Colouring types of a 4-pole: the pattern of equalities in the
/// boundary word.  By the Parity Lemma these four are the only ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum ColourType {
    T1111,
    T1122,
    T1212,
    T1221,
}

impl fmt::Display for ColourType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ColourType::T1111 => "1111",
            ColourType::T1122 => "1122",
            ColourType::T1212 => "1212",
            ColourType::T1221 => "1221",
        };
        f.write_str(s)
    }
}

/// Pattern of a 4-colour word; None when it is not a parity-legal type.
pub fn type_of_word(w: &[Colour]) -> Option<ColourType> {
    if w.len() != 4 {
        return None;
    }
    let pat: Vec<bool> = w.iter().map(|&c| c == w[0]).collect();
    match (pat[1], pat[2], pat[3]) {
        (true, true, true) => Some(ColourType::T1111),
        (true, false, false) if w[2] == w[3] => Some(ColourType::T1122),
        (false, true, false) if w[1] == w[3] => Some(ColourType::T1212),
        (false, false, true) if w[1] == w[2] => Some(ColourType::T1221),
        _ => None,
    }
}

/// Attained colouring types of a 4-pole with colouring counts; `None`
/// when the budget ran out.  A colourable 4-pole attains at least two
/// types; this is checked in debug builds.
pub fn boundary_types(
    m: &Multipole,
    budget: Option<u64>,
) -> Result<Option<BTreeMap<ColourType, u64>>> {
    if m.k() != 4 {
        return Err(Error::Invalid(format!("boundary types need a 4-pole, got k={}", m.k())));
    }
    let words = match boundary_words(m, budget) {
        None => return Ok(None),
        Some(w) => w,
    };
    let mut out: BTreeMap<ColourType, u64> = BTreeMap::new();
    for (w, c) in words {
        let t = type_of_word(&w).ok_or_else(|| {
            Error::Invalid(format!("colour word {w:?} violates the parity lemma"))
        })?;
        *out.entry(t).or_default() += c;
    }
    debug_assert!(
        out.is_empty() || out.len() >= 2,
        "colourable 4-pole attained a single type"
    );
    Ok(Some(out))
}

/// The three ways to split semiedge positions 0..4 into two pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pairing {
    /// (0 1)(2 3)
    Adjacent,
    /// (0 2)(1 3)
    Crossed,
    /// (0 3)(1 2)
    Nested,
}

impl Pairing {
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Pairing::Adjacent => [(0, 1), (2, 3)],
            Pairing::Crossed => [(0, 2), (1, 3)],
            Pairing::Nested => [(0, 3), (1, 2)],
        }
    }
}

/// Colouring behaviour of a 4-pole.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FourPoleClass {
    Uncolourable,
    /// Exactly two types; some pairing receives equal colours in every
    /// colouring.
    Isochromatic(Pairing),
    /// Exactly two types; some pairing receives distinct colours in
    /// every colouring.
    Heterochromatic(Pairing),
    /// Exactly one type: closed but neither of the above.  Unreachable
    /// for genuine 4-poles (two types always pair up); kept so the
    /// classification is total.
    ColourClosedOther,
    /// Three or four types.
    MultiType,
}

/// Classifies a 4-pole by its attained colouring types; `None` when the
/// budget ran out.
pub fn classify_four_pole(m: &Multipole, budget: Option<u64>) -> Result<Option<FourPoleClass>> {
    let types = match boundary_types(m, budget)? {
        None => return Ok(None),
        Some(t) => t,
    };
    let set: Vec<ColourType> = types.keys().copied().collect();
    let class = match set.len() {
        0 => FourPoleClass::Uncolourable,
        1 => FourPoleClass::ColourClosedOther,
        2 => {
            if set.contains(&ColourType::T1111) {
                let other = set.iter().find(|&&t| t != ColourType::T1111).unwrap();
                let pairing = match other {
                    ColourType::T1122 => Pairing::Adjacent,
                    ColourType::T1212 => Pairing::Crossed,
                    ColourType::T1221 => Pairing::Nested,
                    ColourType::T1111 => unreachable!(),
                };
                FourPoleClass::Isochromatic(pairing)
            } else {
                // the absent two-pair type names the always-distinct pairing
                let absent = [ColourType::T1122, ColourType::T1212, ColourType::T1221]
                    .into_iter()
                    .find(|t| !set.contains(t))
                    .unwrap();
                let pairing = match absent {
                    ColourType::T1122 => Pairing::Adjacent,
                    ColourType::T1212 => Pairing::Crossed,
                    ColourType::T1221 => Pairing::Nested,
                    ColourType::T1111 => unreachable!(),
                };
                FourPoleClass::Heterochromatic(pairing)
            }
        }
        _ => FourPoleClass::MultiType,
    };
    Ok(Some(class))
}

fn connector_positions_by_size(m: &Multipole, sizes: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut have = m.connectors();
    let mut out = Vec::new();
    for &want in sizes {
        let idx = have
            .iter()
            .position(|c| c.len() == want)
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "expected connector sizes {:?}, got {:?}",
                    sizes,
                    m.connector_sizes()
                ))
            })?;
        out.push(have.remove(idx));
    }
    if !have.is_empty() {
        return Err(Error::Invalid(format!(
            "expected connector sizes {:?}, got {:?}",
            sizes,
            m.connector_sizes()
        )));
    }
    Ok(out)
}

/// Checks the (2,3)-pole signature: the multipole is colourable, and in
/// every colouring the 2-connector receives distinct colours x, y while
/// the 3-connector receives x+y, z, z for some colour z.
pub fn t_signature_holds(m: &Multipole, budget: Option<u64>) -> Result<Option<bool>> {
    let conns = connector_positions_by_size(m, &[2, 3])?;
    let words = match boundary_words(m, budget) {
        None => return Ok(None),
        Some(w) => w,
    };
    if words.is_empty() {
        return Ok(Some(false));
    }
    for (w, _) in &words {
        let (x, y) = (w[conns[0][0]], w[conns[0][1]]);
        let mut d = [w[conns[1][0]], w[conns[1][1]], w[conns[1][2]]];
        d.sort_unstable();
        let two_equal = d[0] == d[1] || d[1] == d[2];
        if x == y || !two_equal || d[0] ^ d[1] ^ d[2] != x ^ y {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Checks the (2,2,1)-pole signature: colourable, and every colouring
/// gives one 2-connector distinct colours x, y, the other 2-connector a
/// repeated colour, and the single remaining edge x+y.
pub fn n_signature_holds(m: &Multipole, budget: Option<u64>) -> Result<Option<bool>> {
    let conns = connector_positions_by_size(m, &[2, 2, 1])?;
    let words = match boundary_words(m, budget) {
        None => return Ok(None),
        Some(w) => w,
    };
    if words.is_empty() {
        return Ok(Some(false));
    }
    for (w, _) in &words {
        let a = (w[conns[0][0]], w[conns[0][1]]);
        let b = (w[conns[1][0]], w[conns[1][1]]);
        let f = w[conns[2][0]];
        let fits = |(x, y): (Colour, Colour), (z1, z2): (Colour, Colour)| {
            x != y && z1 == z2 && f == x ^ y
        };
        if !fits(a, b) && !fits(b, a) {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Swaps colours `a` and `b` along the maximal two-coloured chain (path
/// or circuit) through `start_edge`.  The result of switching a proper
/// colouring is again proper.
pub fn kempe_switch(
    g: &CubicGraph,
    col: &mut EdgeColouring,
    a: Colour,
    b: Colour,
    start_edge: usize,
) -> Result<()> {
    if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
        return Err(Error::Invalid(format!("bad colour pair {a},{b}")));
    }
    if start_edge >= g.m() {
        return Err(Error::UnknownEdge(start_edge));
    }
    if col.0[start_edge] != a && col.0[start_edge] != b {
        return Err(Error::Invalid(format!(
            "edge {start_edge} has colour {}, not {a} or {b}",
            col.0[start_edge]
        )));
    }
    let mut in_chain = EdgeSet::EMPTY;
    let mut stack = vec![start_edge];
    in_chain.insert(start_edge);
    while let Some(e) = stack.pop() {
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            for f in g.incident_edges(w) {
                let f = f as usize;
                if !in_chain.contains(f) && (col.0[f] == a || col.0[f] == b) {
                    in_chain.insert(f);
                    stack.push(f);
                }
            }
        }
    }
    for e in in_chain.iter() {
        col.0[e] = if col.0[e] == a { b } else { a };
    }
    Ok(())
}
