//! Perfect matchings and the matching-based uncolourability measures.
//!
//! Oddness is the minimum number of odd circuits in a 2-factor, taken
//! over all 2-factors (equivalently, over complements of perfect
//! matchings).  Weak oddness relaxes 2-factors to even factors — spanning
//! subgraphs with all degrees even, where isolated vertices count as
//! components of odd order.  Resistance is the minimum number of edges
//! (or vertices) whose removal leaves a 3-edge-colourable graph.  The
//! perfect matching index is the minimum number of perfect matchings
//! whose union is the whole edge set.  The pair and triple measures take
//! the minimum total intersection over two, respectively three, perfect
//! matchings.
//!
//! Every search here takes an optional budget and reports `None` (inside
//! the usual `Result`) when it runs out; the unit is documented per
//! function.  Computed values are always exact, never heuristic.

use crate::colouring::{colour_graph, colour_graph_minus, colour_multipole_minus, ColourDecision};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeSet};
use crate::multipole::Multipole;
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Cap on materialised perfect matching lists.
pub const PM_CAP: usize = 2_000_000;

/// Largest removal size the resistance searches will try.
pub const RESISTANCE_CAP: u32 = 5;

/// Cycle-space rank up to which weak oddness is computed by direct
/// enumeration even when bound arguments do not pin it.  Rank n/2 + 1
/// on a connected cubic graph, so 11 means up to 20 vertices.
pub const WEAK_DIRECT_RANK: u32 = 11;

/// How an enumeration ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Enumeration {
    Complete,
    /// The callback asked to stop.
    Stopped,
    OutOfBudget,
}

/// Enumerates all perfect matchings.  The callback returns false to
/// stop.  The budget counts search-tree nodes (one per vertex matched).
pub fn enumerate_perfect_matchings(
    g: &CubicGraph,
    budget: Option<u64>,
    cb: &mut dyn FnMut(&EdgeSet) -> bool,
) -> Enumeration {
    fn rec(
        g: &CubicGraph,
        covered: u128,
        matched: &mut EdgeSet,
        nodes: &mut u64,
        budget: Option<u64>,
        cb: &mut dyn FnMut(&EdgeSet) -> bool,
    ) -> Enumeration {
        let v = match (0..g.n() as u32).find(|&v| covered >> v & 1 == 0) {
            None => return if cb(matched) { Enumeration::Complete } else { Enumeration::Stopped },
            Some(v) => v,
        };
        *nodes += 1;
        if let Some(b) = budget {
            if *nodes > b {
                return Enumeration::OutOfBudget;
            }
        }
        for e in g.incident_edges(v) {
            let u = g.other_end(e as usize, v);
            if covered >> u & 1 == 0 {
                matched.insert(e as usize);
                let out = rec(g, covered | 1 << v | 1 << u, matched, nodes, budget, cb);
                matched.remove(e as usize);
                match out {
                    Enumeration::Complete => {}
                    stop => return stop,
                }
            }
        }
        Enumeration::Complete
    }
    let mut matched = EdgeSet::EMPTY;
    let mut nodes = 0;
    rec(g, 0, &mut matched, &mut nodes, budget, cb)
}

/// All perfect matchings, capped at [`PM_CAP`].
pub fn perfect_matchings(g: &CubicGraph) -> Result<Vec<EdgeSet>> {
    let mut out = Vec::new();
    let mut over = false;
    enumerate_perfect_matchings(g, None, &mut |pm| {
        if out.len() == PM_CAP {
            over = true;
            return false;
        }
        out.push(*pm);
        true
    });
    if over {
        return Err(Error::SizeCap("perfect matchings", PM_CAP));
    }
    Ok(out)
}

pub fn is_perfect_matching(g: &CubicGraph, set: &EdgeSet) -> bool {
    let mut deg = vec![0u8; g.n()];
    for e in set.iter() {
        if e >= g.m() {
            return false;
        }
        let (a, b) = g.endpoints(e);
        deg[a as usize] += 1;
        deg[b as usize] += 1;
    }
    deg.iter().all(|&d| d == 1)
}

/// Number of components with an odd number of vertices in the spanning
/// subgraph formed by `edges`.  Isolated vertices are odd components.
pub fn odd_order_components(g: &CubicGraph, edges: &EdgeSet) -> u32 {
    let mut seen = vec![false; g.n()];
    let mut odd = 0;
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut size = 0u32;
        let mut stack = vec![start as u32];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            size += 1;
            for e in g.incident_edges(v) {
                if edges.contains(e as usize) {
                    let u = g.other_end(e as usize, v);
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        stack.push(u);
                    }
                }
            }
        }
        odd += size & 1;
    }
    odd
}

/// Odd circuits in the 2-factor complementary to a perfect matching.
pub fn two_factor_odd_components(g: &CubicGraph, pm: &EdgeSet) -> Result<u32> {
    if !is_perfect_matching(g, pm) {
        return Err(Error::Invalid("not a perfect matching".into()));
    }
    Ok(odd_order_components(g, &EdgeSet::full(g.m()).difference(pm)))
}

/// Oddness and a perfect matching attaining it.  Budget units: colouring
/// branch nodes for the initial decision, then matching search nodes.
/// Errors when the graph has no perfect matching at all.
pub fn oddness(g: &CubicGraph, budget: Option<u64>) -> Result<Option<(u32, EdgeSet)>> {
    oddness_with_floor(g, 0, budget)
}

/// Oddness with a known lower bound (for instance from resistance via
/// ρ ≤ ω): the scan over 2-factors stops at the first one attaining the
/// floor instead of sweeping every perfect matching.
pub fn oddness_with_floor(
    g: &CubicGraph,
    floor: u32,
    budget: Option<u64>,
) -> Result<Option<(u32, EdgeSet)>> {
    match colour_graph(g, budget) {
        ColourDecision::Undecided => return Ok(None),
        ColourDecision::Colourable(c) => {
            let pm: EdgeSet = c.classes()[0].iter().copied().collect();
            return Ok(Some((0, pm)));
        }
        ColourDecision::Uncolourable => {}
    }
    // an uncolourable graph cannot do better than two odd circuits
    let floor = floor.max(2);
    let full = EdgeSet::full(g.m());
    let mut best: Option<(u32, EdgeSet)> = None;
    let flow = enumerate_perfect_matchings(g, budget, &mut |pm| {
        let odd = odd_order_components(g, &full.difference(pm));
        if best.as_ref().map_or(true, |b| odd < b.0) {
            best = Some((odd, *pm));
        }
        best.as_ref().unwrap().0 > floor
    });
    match flow {
        Enumeration::OutOfBudget => Ok(None),
        _ => best
            .map(Some)
            .ok_or_else(|| Error::Invalid("graph has no perfect matching".into())),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeakMode {
    /// Minimised over the whole cycle space.
    Direct,
    /// Pinned between lower and upper bounds that meet.
    Pinned,
}

#[derive(Clone, Debug)]
pub struct WeakOddness {
    pub value: u32,
    /// An even factor attaining the value.
    pub factor: EdgeSet,
    pub mode: WeakMode,
}

/// Weak oddness.  Cheap cases first: a colourable graph has weak oddness
/// 0, and oddness 2 or 4 pins weak oddness to the same value (weak
/// oddness is even, is 0 exactly for colourable graphs, lies below
/// oddness, and weak oddness 2 forces resistance 2 and hence oddness 2).
/// Otherwise the cycle space is enumerated directly when its rank is at
/// most [`WEAK_DIRECT_RANK`]; budget units there are even factors
/// visited.
pub fn weak_oddness(g: &CubicGraph, budget: Option<u64>) -> Result<Option<WeakOddness>> {
    match colour_graph(g, budget) {
        ColourDecision::Undecided => return Ok(None),
        ColourDecision::Colourable(c) => {
            let cls = c.classes();
            let factor: EdgeSet = cls[1].iter().chain(cls[2].iter()).copied().collect();
            return Ok(Some(WeakOddness { value: 0, factor, mode: WeakMode::Direct }));
        }
        ColourDecision::Uncolourable => {}
    }
    // fundamental cycles from a spanning forest, then Gray-code walk
    let mut parent_edge = vec![usize::MAX; g.n()];
    let mut tree = EdgeSet::EMPTY;
    let mut in_tree = vec![false; g.n()];
    for root in 0..g.n() as u32 {
        if in_tree[root as usize] {
            continue;
        }
        in_tree[root as usize] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for e in g.incident_edges(v) {
                let u = g.other_end(e as usize, v);
                if !in_tree[u as usize] {
                    in_tree[u as usize] = true;
                    parent_edge[u as usize] = e as usize;
                    tree.insert(e as usize);
                    stack.push(u);
                }
            }
        }
    }
    let depth = |mut v: u32| -> u32 {
        let mut d = 0;
        while parent_edge[v as usize] != usize::MAX {
            v = g.other_end(parent_edge[v as usize], v);
            d += 1;
        }
        d
    };
    let mut cycles = Vec::new();
    for e in 0..g.m() {
        if tree.contains(e) {
            continue;
        }
        let mut cyc = EdgeSet::singleton(e);
        let (mut a, mut b) = g.endpoints(e);
        let (mut da, mut db) = (depth(a), depth(b));
        while da > db {
            cyc.insert(parent_edge[a as usize]);
            a = g.other_end(parent_edge[a as usize], a);
            da -= 1;
        }
        while db > da {
            cyc.insert(parent_edge[b as usize]);
            b = g.other_end(parent_edge[b as usize], b);
            db -= 1;
        }
        while a != b {
            cyc.insert(parent_edge[a as usize]);
            cyc.insert(parent_edge[b as usize]);
            a = g.other_end(parent_edge[a as usize], a);
            b = g.other_end(parent_edge[b as usize], b);
        }
        cycles.push(cyc);
    }
    if cycles.len() as u32 > WEAK_DIRECT_RANK {
        if let Some((omega, pm)) = oddness(g, budget)? {
            if omega == 2 || omega == 4 {
                let factor = EdgeSet::full(g.m()).difference(&pm);
                return Ok(Some(WeakOddness { value: omega, factor, mode: WeakMode::Pinned }));
            }
        }
        return Ok(None);
    }
    let mut cur = EdgeSet::EMPTY;
    let mut best = (odd_order_components(g, &cur), cur);
    for s in 1u64..1 << cycles.len() {
        if let Some(b) = budget {
            if s > b {
                return Ok(None);
            }
        }
        cur = cur.symmetric_difference(&cycles[s.trailing_zeros() as usize]);
        let odd = odd_order_components(g, &cur);
        if odd < best.0 {
            best = (odd, cur);
            if odd == 2 {
                break; // uncolourable graphs cannot reach 0
            }
        }
    }
    Ok(Some(WeakOddness { value: best.0, factor: best.1, mode: WeakMode::Direct }))
}

enum Scan {
    Found(Vec<usize>),
    Nothing,
}

/// Iterative-deepening search for the smallest item subset passing
/// `test`, scanning each level in lexicographic order (parallel over the
/// first item).  Budget units: subsets tested.
fn smallest_passing_subset(
    items: usize,
    name: &'static str,
    budget: Option<u64>,
    test: &(dyn Fn(&[usize]) -> bool + Sync),
) -> Result<Option<(u32, Vec<usize>)>> {
    if test(&[]) {
        return Ok(Some((0, Vec::new())));
    }
    let meter = AtomicU64::new(0);
    let broke = AtomicBool::new(false);
    fn rec(
        items: usize,
        start: usize,
        need: usize,
        pick: &mut Vec<usize>,
        meter: &AtomicU64,
        broke: &AtomicBool,
        budget: Option<u64>,
        test: &(dyn Fn(&[usize]) -> bool + Sync),
    ) -> Scan {
        if need == 0 {
            if let Some(b) = budget {
                if meter.fetch_add(1, Ordering::Relaxed) >= b {
                    broke.store(true, Ordering::Relaxed);
                    return Scan::Nothing;
                }
            }
            if test(pick) {
                return Scan::Found(pick.clone());
            }
            return Scan::Nothing;
        }
        let mut x = start;
        while x + need <= items {
            if broke.load(Ordering::Relaxed) {
                return Scan::Nothing;
            }
            pick.push(x);
            if let Scan::Found(w) = rec(items, x + 1, need - 1, pick, meter, broke, budget, test)
            {
                return Scan::Found(w);
            }
            pick.pop();
            x += 1;
        }
        Scan::Nothing
    }
    for k in 1..=RESISTANCE_CAP {
        let found = (0..items)
            .into_par_iter()
            .map(|a| {
                let mut pick = vec![a];
                match rec(items, a + 1, k as usize - 1, &mut pick, &meter, &broke, budget, test)
                {
                    Scan::Found(w) => Some(w),
                    Scan::Nothing => None,
                }
            })
            .find_first(Option::is_some)
            .flatten();
        if let Some(w) = found {
            return Ok(Some((k, w)));
        }
        if broke.load(Ordering::Relaxed) {
            return Ok(None);
        }
    }
    Err(Error::SizeCap(name, RESISTANCE_CAP as usize))
}

/// Resistance: the fewest edges whose removal leaves a colourable graph,
/// with the lexicographically least witness.  Resistance is never 1 (a
/// colouring of the graph minus an edge forces equal free colours at its
/// two ends by parity, so it extends).  Budget units: subsets tested;
/// under budget exhaustion the witness may not be the least one even
/// when a value is still returned.
pub fn resistance(g: &CubicGraph, budget: Option<u64>) -> Result<Option<(u32, Vec<usize>)>> {
    smallest_passing_subset(g.m(), "edge resistance", budget, &|subset| {
        let drop: EdgeSet = subset.iter().copied().collect();
        matches!(
            colour_graph_minus(g, &[], &drop, None),
            ColourDecision::Colourable(_)
        )
    })
}

/// Resistance of a multipole: the fewest edges (internal, dangling, or
/// isolated, indexed as in `edge_view`) whose removal leaves a colourable
/// multipole.  Budget units: subsets tested.
pub fn multipole_resistance(
    m: &Multipole,
    budget: Option<u64>,
) -> Result<Option<(u32, Vec<usize>)>> {
    smallest_passing_subset(m.edge_view().len(), "multipole resistance", budget, &|subset| {
        matches!(
            colour_multipole_minus(m, &[], subset, None),
            ColourDecision::Colourable(_)
        )
    })
}

/// Vertex resistance: the fewest vertices (removed with their incident
/// edges) leaving a colourable graph.
pub fn vertex_resistance(g: &CubicGraph, budget: Option<u64>) -> Result<Option<(u32, Vec<u32>)>> {
    let out = smallest_passing_subset(g.n(), "vertex resistance", budget, &|subset| {
        let drop: Vec<u32> = subset.iter().map(|&v| v as u32).collect();
        matches!(
            colour_graph_minus(g, &drop, &EdgeSet::EMPTY, None),
            ColourDecision::Colourable(_)
        )
    })?;
    Ok(out.map(|(k, w)| (k, w.into_iter().map(|v| v as u32).collect())))
}

/// Perfect matching index: the fewest perfect matchings covering every
/// edge.  3 exactly for colourable graphs; bridged graphs are rejected.
/// `pms` must hold all perfect matchings of `g`.  Budget units:
/// colouring branch nodes, then cover-search nodes per level.
pub fn pm_index(
    g: &CubicGraph,
    pms: &[EdgeSet],
    budget: Option<u64>,
) -> Result<Option<(u32, Vec<EdgeSet>)>> {
    if !g.bridges().is_empty() {
        return Err(Error::Bridged("perfect matching index".into()));
    }
    match colour_graph(g, budget) {
        ColourDecision::Undecided => return Ok(None),
        ColourDecision::Colourable(c) => {
            let cover = c.classes().map(|cls| cls.into_iter().collect::<EdgeSet>());
            return Ok(Some((3, cover.to_vec())));
        }
        ColourDecision::Uncolourable => {}
    }
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); g.m()];
    for (i, pm) in pms.iter().enumerate() {
        for e in pm.iter() {
            containing[e].push(i as u32);
        }
    }
    if containing.iter().any(|c| c.is_empty()) {
        return Err(Error::Invalid("an edge lies in no perfect matching".into()));
    }
    let full = EdgeSet::full(g.m());
    let half = g.n() / 2;
    struct Dfs<'a> {
        pms: &'a [EdgeSet],
        containing: &'a [Vec<u32>],
        full: EdgeSet,
        half: usize,
        nodes: u64,
        budget: Option<u64>,
        broke: bool,
    }
    impl Dfs<'_> {
        fn run(&mut self, covered: EdgeSet, chosen: &mut Vec<usize>, k: usize) -> bool {
            if covered == self.full {
                return true;
            }
            if chosen.len() == k || self.broke {
                return false;
            }
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    self.broke = true;
                    return false;
                }
            }
            let slots = k - chosen.len();
            let uncovered = self.full.len() - covered.len();
            if uncovered > slots * self.half {
                return false;
            }
            let e = self
                .full
                .difference(&covered)
                .iter()
                .min_by_key(|&e| self.containing[e].len())
                .unwrap();
            for &mi in &self.containing[e] {
                chosen.push(mi as usize);
                if self.run(covered.union(&self.pms[mi as usize]), chosen, k) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
    }
    for k in [4usize, 5] {
        let mut dfs = Dfs { pms, containing: &containing, full, half, nodes: 0, budget, broke: false };
        let mut chosen = Vec::new();
        if dfs.run(EdgeSet::EMPTY, &mut chosen, k) {
            let cover = chosen.into_iter().map(|i| pms[i]).collect();
            return Ok(Some((k as u32, cover)));
        }
        if dfs.broke {
            return Ok(None);
        }
    }
    Err(Error::Invalid("no cover by five perfect matchings".into()))
}

/// Minimum intersection size over pairs of distinct perfect matchings,
/// with a witness pair of indices.  `lower` must be a valid lower bound
/// (0 is always sound; half the oddness rounded up is sharper): the scan
/// stops early on reaching it.  Budget units: pairs examined.
pub fn pair_intersection(
    pms: &[EdgeSet],
    lower: u32,
    budget: Option<u64>,
) -> Result<Option<(u32, (usize, usize))>> {
    if pms.len() < 2 {
        return Err(Error::Invalid("needs at least two perfect matchings".into()));
    }
    let meter = AtomicU64::new(0);
    let broke = AtomicBool::new(false);
    let count = |i: usize, j: usize| pms[i].intersection(&pms[j]).len() as u32;
    // fast pass: first pair attaining the bound, in index order
    let hit = pms
        .par_iter()
        .enumerate()
        .map(|(i, mi)| {
            for j in i + 1..pms.len() {
                if let Some(b) = budget {
                    if meter.fetch_add(1, Ordering::Relaxed) >= b {
                        broke.store(true, Ordering::Relaxed);
                        return None;
                    }
                }
                if (mi.intersection(&pms[j]).len() as u32) == lower {
                    return Some((i, j));
                }
            }
            None
        })
        .find_first(Option::is_some)
        .flatten();
    if let Some((i, j)) = hit {
        return Ok(Some((lower, (i, j))));
    }
    if broke.load(Ordering::Relaxed) {
        return Ok(None);
    }
    let best = (0..pms.len() - 1)
        .into_par_iter()
        .map(|i| {
            let mut local: Option<(u32, (usize, usize))> = None;
            if let Some(b) = budget {
                let units = (pms.len() - i - 1) as u64;
                if meter.fetch_add(units, Ordering::Relaxed) >= b {
                    broke.store(true, Ordering::Relaxed);
                    return None;
                }
            }
            for j in i + 1..pms.len() {
                let w = count(i, j);
                if local.map_or(true, |(bw, bp)| (w, (i, j)) < (bw, bp)) {
                    local = Some((w, (i, j)));
                }
            }
            local
        })
        .reduce(|| None, |a, b| match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(x.min(y)),
        });
    if broke.load(Ordering::Relaxed) {
        return Ok(None);
    }
    Ok(best)
}

/// Minimum total pairwise intersection over triples of distinct perfect
/// matchings, with a witness triple.  `lower` is a valid lower bound
/// used for early exit; `pair_floor` must be a valid lower bound on
/// every pairwise intersection (the pair measure itself) and drives
/// pruning.  Budget units: pairs opened plus triples examined.
pub fn triple_intersection(
    pms: &[EdgeSet],
    lower: u32,
    pair_floor: u32,
    budget: Option<u64>,
) -> Result<Option<(u32, (usize, usize, usize))>> {
    if pms.len() < 3 {
        return Err(Error::Invalid("needs at least three perfect matchings".into()));
    }
    let meter = AtomicU64::new(0);
    let broke = AtomicBool::new(false);
    let spend = |units: u64| -> bool {
        match budget {
            Some(b) => {
                if meter.fetch_add(units, Ordering::Relaxed) >= b {
                    broke.store(true, Ordering::Relaxed);
                    false
                } else {
                    true
                }
            }
            None => true,
        }
    };
    // fast pass: pairs at the floor, any third attaining the bound
    let hit = (0..pms.len() - 1)
        .into_par_iter()
        .map(|i| {
            for j in i + 1..pms.len() {
                if !spend(1) {
                    return None;
                }
                let wij = pms[i].intersection(&pms[j]).len() as u32;
                if wij + 2 * pair_floor > lower {
                    continue;
                }
                for k in 0..pms.len() {
                    if k == i || k == j {
                        continue;
                    }
                    let sum = wij
                        + pms[i].intersection(&pms[k]).len() as u32
                        + pms[j].intersection(&pms[k]).len() as u32;
                    if sum == lower {
                        let mut t = [i, j, k];
                        t.sort_unstable();
                        return Some((t[0], t[1], t[2]));
                    }
                }
            }
            None
        })
        .find_first(Option::is_some)
        .flatten();
    if let Some(t) = hit {
        return Ok(Some((lower, t)));
    }
    if broke.load(Ordering::Relaxed) {
        return Ok(None);
    }
    let best = (0..pms.len() - 2)
        .into_par_iter()
        .map(|i| {
            let mut local: Option<(u32, (usize, usize, usize))> = None;
            for j in i + 1..pms.len() - 1 {
                let wij = pms[i].intersection(&pms[j]).len() as u32;
                if let Some((bw, _)) = local {
                    if wij + 2 * pair_floor >= bw {
                        continue;
                    }
                }
                if !spend(pms.len() as u64 - j as u64) {
                    return local;
                }
                for k in j + 1..pms.len() {
                    let sum = wij
                        + pms[i].intersection(&pms[k]).len() as u32
                        + pms[j].intersection(&pms[k]).len() as u32;
                    if local.map_or(true, |(bw, bt)| (sum, (i, j, k)) < (bw, bt)) {
                        local = Some((sum, (i, j, k)));
                    }
                }
            }
            local
        })
        .reduce(|| None, |a, b| match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(x.min(y)),
        });
    if broke.load(Ordering::Relaxed) {
        return Ok(None);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn petersen() -> CubicGraph {
        let mut e: Vec<(u32, u32)> = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        e.iter_mut().for_each(|p| *p = (p.0.min(p.1), p.0.max(p.1)));
        e.sort_unstable();
        e.dedup();
        CubicGraph::from_edges(10, &e).unwrap()
    }

    /// Two 5-vertex near-K4 gadgets joined by a bridge.
    fn bridged() -> CubicGraph {
        let mut e = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)];
        e.extend([(5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (5, 9), (6, 9)]);
        e.push((4, 9));
        CubicGraph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn petersen_matchings_pairwise_share_one_edge() {
        let pms = perfect_matchings(&petersen()).unwrap();
        assert_eq!(pms.len(), 6);
        for pm in &pms {
            assert!(is_perfect_matching(&petersen(), pm));
        }
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(pms[i].intersection(&pms[j]).len(), 1);
            }
        }
    }

    #[test]
    fn k4_measures_vanish() {
        let g = k4();
        let pms = perfect_matchings(&g).unwrap();
        assert_eq!(pms.len(), 3);
        let (omega, pm) = oddness(&g, None).unwrap().unwrap();
        assert_eq!(omega, 0);
        assert_eq!(two_factor_odd_components(&g, &pm).unwrap(), 0);
        assert_eq!(weak_oddness(&g, None).unwrap().unwrap().value, 0);
        assert_eq!(resistance(&g, None).unwrap().unwrap(), (0, vec![]));
        let (pi, cover) = pm_index(&g, &pms, None).unwrap().unwrap();
        assert_eq!(pi, 3);
        let union = cover.iter().fold(EdgeSet::EMPTY, |a, b| a.union(b));
        assert_eq!(union, EdgeSet::full(g.m()));
        assert_eq!(pair_intersection(&pms, 0, None).unwrap().unwrap().0, 0);
        assert_eq!(triple_intersection(&pms, 0, 0, None).unwrap().unwrap().0, 0);
    }

    #[test]
    fn petersen_measures() {
        let g = petersen();
        let pms = perfect_matchings(&g).unwrap();
        let (omega, pm) = oddness(&g, None).unwrap().unwrap();
        assert_eq!(omega, 2);
        assert_eq!(two_factor_odd_components(&g, &pm).unwrap(), 2);

        let weak = weak_oddness(&g, None).unwrap().unwrap();
        assert_eq!(weak.value, 2);
        assert_eq!(weak.mode, WeakMode::Direct);
        assert_eq!(odd_order_components(&g, &weak.factor), 2);
        for v in 0..g.n() as u32 {
            let d = g
                .incident_edges(v)
                .iter()
                .filter(|&&e| weak.factor.contains(e as usize))
                .count();
            assert!(d == 0 || d == 2);
        }

        let (rho, wit) = resistance(&g, None).unwrap().unwrap();
        assert_eq!(rho, 2);
        let drop: EdgeSet = wit.iter().copied().collect();
        assert!(matches!(
            colour_graph_minus(&g, &[], &drop, None),
            ColourDecision::Colourable(_)
        ));

        // one vertex is not enough: a colouring of the remainder would
        // force three distinct dangling colours by parity and colour the
        // whole graph; two adjacent vertices suffice
        let (rv, vwit) = vertex_resistance(&g, None).unwrap().unwrap();
        assert_eq!(rv, 2);
        assert!(matches!(
            colour_graph_minus(&g, &vwit, &EdgeSet::EMPTY, None),
            ColourDecision::Colourable(_)
        ));

        let (pi, cover) = pm_index(&g, &pms, None).unwrap().unwrap();
        assert_eq!(pi, 5);
        let union = cover.iter().fold(EdgeSet::EMPTY, |a, b| a.union(b));
        assert_eq!(union, EdgeSet::full(g.m()));

        assert_eq!(pair_intersection(&pms, 1, None).unwrap().unwrap().0, 1);
        assert_eq!(triple_intersection(&pms, 3, 1, None).unwrap().unwrap().0, 3);
        // exhaustive passes agree when the early bound is unreachable
        assert_eq!(pair_intersection(&pms, 0, None).unwrap().unwrap().0, 1);
        assert_eq!(triple_intersection(&pms, 0, 0, None).unwrap().unwrap().0, 3);
    }

    #[test]
    fn floor_assisted_oddness_agrees() {
        let g = petersen();
        let (direct, _) = oddness(&g, None).unwrap().unwrap();
        let (assisted, pm) = oddness_with_floor(&g, 2, None).unwrap().unwrap();
        assert_eq!((direct, assisted), (2, 2));
        assert!(is_perfect_matching(&g, &pm));
    }

    #[test]
    fn multipole_resistance_matches_graph_resistance() {
        let g = petersen();
        let whole = Multipole::from_graph(&g);
        let (r, wit) = multipole_resistance(&whole, None).unwrap().unwrap();
        assert_eq!(r, 2);
        assert!(matches!(
            colour_multipole_minus(&whole, &[], &wit, None),
            ColourDecision::Colourable(_)
        ));
        // a colourable multipole resists nothing
        let m = g.delete(&[0, 1], &[]).unwrap();
        assert_eq!(multipole_resistance(&m, None).unwrap().unwrap().0, 0);
    }

    #[test]
    fn budgets_surface_as_none() {
        let g = petersen();
        assert!(oddness(&g, Some(1)).unwrap().is_none());
        assert!(weak_oddness(&g, Some(1)).unwrap().is_none());
        assert!(resistance(&g, Some(1)).unwrap().is_none());
        let pms = perfect_matchings(&g).unwrap();
        assert!(pm_index(&g, &pms, Some(1)).unwrap().is_none());
        assert!(pair_intersection(&pms, 0, Some(1)).unwrap().is_none());
    }

    #[test]
    fn bridged_graph_is_rejected_for_pm_index() {
        let g = bridged();
        let pms = perfect_matchings(&g).unwrap();
        assert!(matches!(pm_index(&g, &pms, None), Err(Error::Bridged(_))));
    }

    #[test]
    fn bridged_graph_matchings_all_use_the_bridge() {
        let g = bridged();
        let bridge = g.edge_between(4, 9).unwrap();
        let pms = perfect_matchings(&g).unwrap();
        assert!(!pms.is_empty());
        assert!(pms.iter().all(|pm| pm.contains(bridge)));
    }
}
