//! Structural invariants: girth, distances, cyclic edge connectivity,
//! and circumference.
//!
//! Cyclic connectivity is the smallest number of edges whose removal
//! leaves at least two components containing cycles.  When no such cut
//! exists (among simple cubic graphs only K4 and K3,3) the value is the
//! cycle rank, by the usual convention.  The search is exact: a flow
//! computation between two disjoint cycles yields an upper bound with a
//! witness cut, and all smaller candidate cuts are ruled out
//! exhaustively.  Only independent edge subsets need checking, because a
//! minimum cycle-separating cut never contains two adjacent edges: if it
//! did at vertex u, then either all three edges at u lie in the cut and
//! moving u across shrinks it, or swapping the two shared edges for the
//! third shrinks it, contradicting minimality.
//!
//! Circumference is computed exactly by branch and bound over paths
//! anchored at an edge, with the anchor deleted once exhausted.  Seeded
//! rotation heuristics and 2-factor circuits give the initial lower
//! bound; the bound at a search node comes from the block-cut chain
//! between the path head and its target.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeSet};
use crate::matching::enumerate_perfect_matchings;

/// Length of a shortest cycle.  Every cubic graph has one.
pub fn girth(g: &CubicGraph) -> u32 {
    shortest_cycle(g).map(|c| c.len() as u32).unwrap_or(0)
}

/// A shortest cycle as a vertex sequence; shortest cycles are chordless.
pub fn shortest_cycle(g: &CubicGraph) -> Option<Vec<u32>> {
    let mut best: Option<Vec<u32>> = None;
    let mut dist = vec![u32::MAX; g.n()];
    let mut parent = vec![u32::MAX; g.n()];
    let mut parent_edge = vec![usize::MAX; g.n()];
    for root in 0..g.n() as u32 {
        dist.fill(u32::MAX);
        dist[root as usize] = 0;
        parent[root as usize] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for e in g.incident_edges(a) {
                let b = g.other_end(e as usize, a);
                if dist[b as usize] == u32::MAX {
                    dist[b as usize] = dist[a as usize] + 1;
                    parent[b as usize] = a;
                    parent_edge[b as usize] = e as usize;
                    queue.push_back(b);
                } else if e as usize != parent_edge[a as usize] {
                    let len = dist[a as usize] + dist[b as usize] + 1;
                    if best.as_ref().map_or(true, |c| len < c.len() as u32) {
                        let walk = |mut x: u32| {
                            let mut p = vec![x];
                            while x != root {
                                x = parent[x as usize];
                                p.push(x);
                            }
                            p
                        };
                        let pa = walk(a);
                        let mut pb = walk(b);
                        pb.pop();
                        pb.reverse();
                        let mut cyc = pa;
                        cyc.extend(pb);
                        // internally disjoint exactly at the minimum
                        let mut sorted = cyc.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        if sorted.len() == cyc.len() {
                            best = Some(cyc);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Independent cycles: edges minus vertices plus components.
pub fn cycle_rank(g: &CubicGraph) -> u32 {
    (g.m() + g.components().len() - g.n()) as u32
}

/// Diameter and radius; errors on disconnected graphs.
pub fn diameter_radius(g: &CubicGraph) -> Result<(u32, u32)> {
    let mut diameter = 0;
    let mut radius = u32::MAX;
    let mut dist = vec![u32::MAX; g.n()];
    for root in 0..g.n() as u32 {
        dist.fill(u32::MAX);
        dist[root as usize] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut ecc = 0;
        while let Some(a) = queue.pop_front() {
            ecc = dist[a as usize];
            for b in g.neighbours(a) {
                if dist[b as usize] == u32::MAX {
                    dist[b as usize] = dist[a as usize] + 1;
                    queue.push_back(b);
                }
            }
        }
        if dist.iter().any(|&d| d == u32::MAX) {
            return Err(Error::Disconnected);
        }
        diameter = diameter.max(ecc);
        radius = radius.min(ecc);
    }
    Ok((diameter, radius))
}

/// Does removing `cut` leave at least two components containing cycles?
pub fn is_cycle_separating(g: &CubicGraph, cut: &EdgeSet) -> bool {
    let mut comp = vec![usize::MAX; g.n()];
    let mut cyclic = 0;
    let mut c = 0;
    for start in 0..g.n() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut verts = 0u64;
        let mut edges = 0u64;
        let mut stack = vec![start as u32];
        comp[start] = c;
        while let Some(a) = stack.pop() {
            verts += 1;
            for e in g.incident_edges(a) {
                if cut.contains(e as usize) {
                    continue;
                }
                edges += 1;
                let b = g.other_end(e as usize, a);
                if comp[b as usize] == usize::MAX {
                    comp[b as usize] = c;
                    stack.push(b);
                }
            }
        }
        if edges / 2 >= verts {
            cyclic += 1;
            if cyclic >= 2 {
                return true;
            }
        }
        c += 1;
    }
    false
}

/// Result of the cyclic connectivity computation.
#[derive(Clone, Debug)]
pub struct CyclicCut {
    pub value: u32,
    /// A minimum cycle-separating cut, or None when none exists and the
    /// value is the cycle rank.
    pub cut: Option<EdgeSet>,
}

/// Cyclic edge connectivity.  Budget units: candidate subsets tested in
/// the exhaustive phase; `None` when it runs out.
pub fn cyclic_connectivity(g: &CubicGraph, budget: Option<u64>) -> Option<CyclicCut> {
    if is_cycle_separating(g, &EdgeSet::EMPTY) {
        return Some(CyclicCut { value: 0, cut: Some(EdgeSet::EMPTY) });
    }
    let bridges = g.bridges();
    if let Some(b) = bridges.iter().next() {
        // both sides of a bridge in a cubic graph contain cycles
        return Some(CyclicCut { value: 1, cut: Some(EdgeSet::singleton(b)) });
    }
    let (candidate, witness) = match disjoint_cycle_pairs(g) {
        None => (cycle_rank(g), None),
        Some(pairs) => {
            let mut best: Option<(u32, EdgeSet)> = None;
            for (c1, c2) in pairs {
                let (value, cut) = min_cut_between(g, &c1, &c2);
                if best.as_ref().map_or(true, |b| value < b.0) {
                    best = Some((value, cut));
                }
            }
            let (v, c) = best.unwrap();
            (v, Some(c))
        }
    };
    // rule out every smaller cut; minimum cuts are independent edge sets
    let mut tested = 0u64;
    for k in 1..candidate {
        let out = independent_subsets(g, k as usize, budget, &mut tested, &mut |cut| {
            is_cycle_separating(g, cut)
        });
        match out {
            FoundCut::Found(cut) => return Some(CyclicCut { value: k, cut: Some(cut) }),
            FoundCut::Budget => return None,
            FoundCut::Exhausted => {}
        }
    }
    Some(CyclicCut { value: candidate, cut: witness })
}

enum FoundCut {
    Found(EdgeSet),
    Exhausted,
    Budget,
}

/// Enumerates independent k-subsets of edges in lexicographic order.
fn independent_subsets(
    g: &CubicGraph,
    k: usize,
    budget: Option<u64>,
    tested: &mut u64,
    test: &mut dyn FnMut(&EdgeSet) -> bool,
) -> FoundCut {
    let mut touch = vec![EdgeSet::EMPTY; g.m()];
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            for f in g.incident_edges(w) {
                touch[e].insert(f as usize);
            }
        }
    }
    fn rec(
        g: &CubicGraph,
        touch: &[EdgeSet],
        start: usize,
        left: usize,
        chosen: &mut EdgeSet,
        banned: EdgeSet,
        budget: Option<u64>,
        tested: &mut u64,
        test: &mut dyn FnMut(&EdgeSet) -> bool,
    ) -> FoundCut {
        if left == 0 {
            *tested += 1;
            if let Some(b) = budget {
                if *tested > b {
                    return FoundCut::Budget;
                }
            }
            if test(chosen) {
                return FoundCut::Found(*chosen);
            }
            return FoundCut::Exhausted;
        }
        for e in start..g.m() {
            if banned.contains(e) {
                continue;
            }
            chosen.insert(e);
            match rec(g, touch, e + 1, left - 1, chosen, banned.union(&touch[e]), budget, tested, test)
            {
                FoundCut::Exhausted => {}
                out => return out,
            }
            chosen.remove(e);
        }
        FoundCut::Exhausted
    }
    let mut chosen = EdgeSet::EMPTY;
    rec(g, &touch, 0, k, &mut chosen, EdgeSet::EMPTY, budget, tested, test)
}

/// Pairs of vertex-disjoint cycles to seed the upper bound: a shortest
/// cycle with any cycle in its complement, plus all disjoint pairs of
/// short chordless cycles.  Returns None when the graph has no two
/// disjoint cycles (then no cycle-separating cut exists: a shortest
/// cycle has exactly girth boundary edges, and for n >= 2*girth its
/// complement has more edges than vertices minus one).
fn disjoint_cycle_pairs(g: &CubicGraph) -> Option<Vec<(Vec<u32>, Vec<u32>)>> {
    let c1 = shortest_cycle(g)?;
    let mask: u128 = c1.iter().fold(0, |m, &v| m | 1 << v);
    let c2 = cycle_avoiding(g, mask)?;
    let mut pairs = vec![(c1.clone(), c2)];
    let short = chordless_cycles_upto(g, c1.len() as u32 + 2, 256);
    for i in 0..short.len() {
        for j in i + 1..short.len() {
            if pairs.len() >= 512 {
                break;
            }
            let mi: u128 = short[i].iter().fold(0, |m, &v| m | 1 << v);
            let mj: u128 = short[j].iter().fold(0, |m, &v| m | 1 << v);
            if mi & mj == 0 {
                pairs.push((short[i].clone(), short[j].clone()));
            }
        }
    }
    Some(pairs)
}

/// Any cycle avoiding the masked vertices, via DFS back edge.
fn cycle_avoiding(g: &CubicGraph, banned: u128) -> Option<Vec<u32>> {
    fn dfs(
        g: &CubicGraph,
        v: u32,
        from: u32,
        banned: u128,
        state: &mut [u8],
        parent: &mut [u32],
    ) -> Option<(u32, u32)> {
        state[v as usize] = 1;
        for w in g.neighbours(v) {
            if banned >> w & 1 == 1 || w == from {
                continue;
            }
            match state[w as usize] {
                1 => return Some((v, w)),
                0 => {
                    parent[w as usize] = v;
                    if let Some(hit) = dfs(g, w, v, banned, state, parent) {
                        return Some(hit);
                    }
                }
                _ => {}
            }
        }
        state[v as usize] = 2;
        None
    }
    let mut state = vec![0u8; g.n()];
    let mut parent = vec![u32::MAX; g.n()];
    for root in 0..g.n() as u32 {
        if banned >> root & 1 == 1 || state[root as usize] != 0 {
            continue;
        }
        if let Some((v, w)) = dfs(g, root, u32::MAX, banned, &mut state, &mut parent) {
            let mut cyc = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x as usize];
                cyc.push(x);
            }
            return Some(cyc);
        }
    }
    None
}

/// Chordless cycles of length at most `max_len`, capped in number.  Each
/// cycle is reported once: rooted at its smallest vertex, second vertex
/// smaller than the last.
fn chordless_cycles_upto(g: &CubicGraph, max_len: u32, cap: usize) -> Vec<Vec<u32>> {
    fn extend(
        g: &CubicGraph,
        path: &mut Vec<u32>,
        mask: u128,
        max_len: u32,
        cap: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if out.len() >= cap {
            return;
        }
        let head = *path.last().unwrap();
        let root = path[0];
        if path.len() >= 3 && g.neighbours(head).contains(&root) {
            // closed chordlessly; extending further would keep the chord
            if path[1] < head {
                out.push(path.clone());
            }
            return;
        }
        if path.len() as u32 == max_len {
            return;
        }
        for w in g.neighbours(head) {
            if w <= root || mask >> w & 1 == 1 {
                continue;
            }
            // a chord to anything but the head (closure to root aside)
            // can never sit on a chordless cycle through this path
            let interior = if path.len() >= 2 { &path[1..path.len() - 1] } else { &[][..] };
            let chord = interior.iter().any(|&p| g.neighbours(w).contains(&p));
            if chord {
                continue;
            }
            path.push(w);
            extend(g, path, mask | 1 << w, max_len, cap, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path: Vec<u32> = Vec::new();
    for v in 0..g.n() as u32 {
        path.clear();
        path.push(v);
        extend(g, &mut path, 1 << v, max_len, cap, &mut out);
    }
    out
}

/// Minimum edge cut separating the two vertex sets, by augmenting paths
/// with unit edge capacities.
fn min_cut_between(g: &CubicGraph, a: &[u32], b: &[u32]) -> (u32, EdgeSet) {
    let mut side = vec![0u8; g.n()]; // 1 = source side, 2 = sink side
    for &v in a {
        side[v as usize] = 1;
    }
    for &v in b {
        side[v as usize] = 2;
    }
    // residual capacities per directed edge slot: [u->v, v->u]
    let mut cap = vec![[1u8; 2]; g.m()];
    let arc = |e: usize, from: u32| -> usize {
        let (u, _) = g.endpoints(e);
        if from == u {
            0
        } else {
            1
        }
    };
    let node = |v: u32| -> u32 {
        match side[v as usize] {
            1 => u32::MAX, // source supernode
            2 => u32::MAX - 1,
            _ => v,
        }
    };
    let mut flow = 0;
    loop {
        // BFS over residual arcs from the source supernode
        let mut prev: Vec<Option<(u32, usize)>> = vec![None; g.n()];
        let mut reached_sink: Option<(u32, usize)> = None;
        let mut queue: std::collections::VecDeque<u32> = a.iter().copied().collect();
        let mut seen = vec![false; g.n()];
        for &v in a {
            seen[v as usize] = true;
        }
        'bfs: while let Some(v) = queue.pop_front() {
            for e in g.incident_edges(v) {
                let e = e as usize;
                let w = g.other_end(e, v);
                if cap[e][arc(e, v)] == 0 || node(w) == u32::MAX {
                    continue;
                }
                if node(w) == u32::MAX - 1 {
                    reached_sink = Some((v, e));
                    break 'bfs;
                }
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    prev[w as usize] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        match reached_sink {
            None => break,
            Some((mut v, last)) => {
                cap[last][arc(last, v)] -= 1;
                cap[last][1 - arc(last, v)] += 1;
                while node(v) != u32::MAX {
                    let (u, e) = prev[v as usize].unwrap();
                    cap[e][arc(e, u)] -= 1;
                    cap[e][1 - arc(e, u)] += 1;
                    v = u;
                }
                flow += 1;
            }
        }
    }
    // cut = edges from the residual-reachable side to the rest
    let mut seen = vec![false; g.n()];
    let mut queue: std::collections::VecDeque<u32> = a.iter().copied().collect();
    for &v in a {
        seen[v as usize] = true;
    }
    while let Some(v) = queue.pop_front() {
        for e in g.incident_edges(v) {
            let e = e as usize;
            let w = g.other_end(e, v);
            if cap[e][arc(e, v)] > 0 && !seen[w as usize] && node(w) != u32::MAX - 1 {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    let mut cut = EdgeSet::EMPTY;
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        let (su, sv) = (seen[u as usize] || side[u as usize] == 1, seen[v as usize] || side[v as usize] == 1);
        if su != sv {
            cut.insert(e);
        }
    }
    debug_assert_eq!(cut.len() as u32, flow);
    (flow, cut)
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Exact circumference with a witness cycle.  The result never depends
/// on `seed`, which only steers the initial heuristic.  Budget units:
/// branch-and-bound nodes; `None` when exhausted.
pub fn circumference(g: &CubicGraph, budget: Option<u64>, seed: u64) -> Option<(u32, Vec<u32>)> {
    let mut best: Option<Vec<u32>> = shortest_cycle(g);
    best.as_ref()?;
    let improve = |cyc: &[u32], best: &mut Option<Vec<u32>>| {
        if best.as_ref().map_or(true, |b| cyc.len() > b.len()) {
            *best = Some(cyc.to_vec());
        }
    };

    // 2-factor circuits
    let mut seen_pms = 0;
    enumerate_perfect_matchings(g, Some(200_000), &mut |pm| {
        seen_pms += 1;
        let factor = EdgeSet::full(g.m()).difference(pm);
        let mut visited = vec![false; g.n()];
        for start in 0..g.n() as u32 {
            if visited[start as usize] {
                continue;
            }
            let mut cyc = vec![start];
            visited[start as usize] = true;
            let mut v = start;
            'walk: loop {
                for e in g.incident_edges(v) {
                    if !factor.contains(e as usize) {
                        continue;
                    }
                    let w = g.other_end(e as usize, v);
                    if !visited[w as usize] {
                        visited[w as usize] = true;
                        cyc.push(w);
                        v = w;
                        continue 'walk;
                    }
                }
                break;
            }
            if cyc.len() >= 3 {
                improve(&cyc, &mut best);
            }
        }
        seen_pms < 2000
    });

    // rotation heuristic
    let mut rng = SplitMix64(seed ^ 0xA24B_AED4_963E_E407);
    let n = g.n();
    'starts: for start in 0..n as u32 {
        for _restart in 0..2 {
            let mut path = vec![start];
            let mut on_path = vec![false; n];
            on_path[start as usize] = true;
            for _step in 0..40 * n {
                let head = *path.last().unwrap();
                if path.len() >= 3 && g.neighbours(head).contains(&path[0]) {
                    improve(&path, &mut best);
                    if path.len() == n {
                        break 'starts;
                    }
                }
                let fresh: Vec<u32> = g
                    .neighbours(head)
                    .into_iter()
                    .filter(|&w| !on_path[w as usize])
                    .collect();
                if !fresh.is_empty() {
                    let w = fresh[rng.below(fresh.len())];
                    on_path[w as usize] = true;
                    path.push(w);
                } else {
                    // rotate: pick a neighbour inside the path, reverse the tail
                    let pivots: Vec<usize> = g
                        .neighbours(head)
                        .into_iter()
                        .filter_map(|w| path.iter().position(|&p| p == w))
                        .filter(|&i| i + 2 < path.len())
                        .collect();
                    if pivots.is_empty() {
                        break;
                    }
                    let i = pivots[rng.below(pivots.len())];
                    path[i + 1..].reverse();
                }
            }
        }
    }

    // exact phase: anchored branch and bound
    let mut removed = EdgeSet::EMPTY;
    let mut nodes = 0u64;
    for anchor in 0..g.m() {
        if best.as_ref().map(|b| b.len()) == Some(n) {
            break;
        }
        let (u, v) = g.endpoints(anchor);
        removed.insert(anchor);
        let mut path = vec![u];
        let done = extend_paths(
            g,
            &removed,
            &mut path,
            1u128 << u,
            v,
            &mut best,
            &mut nodes,
            budget,
        );
        if !done {
            return None;
        }
    }
    best.map(|b| (b.len() as u32, b))
}

/// DFS path extension for `circumference`; false when the budget dies.
#[allow(clippy::too_many_arguments)]
fn extend_paths(
    g: &CubicGraph,
    removed: &EdgeSet,
    path: &mut Vec<u32>,
    mask: u128,
    target: u32,
    best: &mut Option<Vec<u32>>,
    nodes: &mut u64,
    budget: Option<u64>,
) -> bool {
    *nodes += 1;
    if let Some(b) = budget {
        if *nodes > b {
            return false;
        }
    }
    let head = *path.last().unwrap();
    let best_len = best.as_ref().map_or(0, |b| b.len());
    match usable_bound(g, removed, mask, head, target) {
        None => return true,
        Some(bound) => {
            if path.len() - 1 + bound as usize <= best_len {
                return true;
            }
        }
    }
    for e in g.incident_edges(head) {
        let e = e as usize;
        if removed.contains(e) {
            continue;
        }
        let w = g.other_end(e, head);
        if w == target {
            if path.len() >= 2 && path.len() + 1 > best_len {
                let mut cyc = path.clone();
                cyc.push(target);
                *best = Some(cyc);
            }
            continue;
        }
        if mask >> w & 1 == 1 {
            continue;
        }
        path.push(w);
        let ok = extend_paths(g, removed, path, mask | 1 << w, target, best, nodes, budget);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Upper bound on the number of vertices (head and target included) a
/// path from `head` to `target` can still use.  Vertices already on the
/// path are excluded via `mask`.  Unusable vertices with fewer than two
/// free edges are stripped, then only blocks on the block-cut chain
/// between head and target count.  None when the target is unreachable.
fn usable_bound(
    g: &CubicGraph,
    removed: &EdgeSet,
    mask: u128,
    head: u32,
    target: u32,
) -> Option<u32> {
    let full: u128 = if g.n() == 128 { !0 } else { (1u128 << g.n()) - 1 };
    let mut allowed = full & !mask | 1 << head;
    // strip vertices that cannot be interior to any remaining path
    loop {
        let mut changed = false;
        for v in 0..g.n() as u32 {
            if allowed >> v & 1 == 0 || v == head || v == target {
                continue;
            }
            let deg = g
                .incident_edges(v)
                .iter()
                .filter(|&&e| {
                    !removed.contains(e as usize)
                        && allowed >> g.other_end(e as usize, v) & 1 == 1
                })
                .count();
            if deg < 2 {
                allowed &= !(1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if allowed >> target & 1 == 0 {
        return None;
    }
    block_chain_count(g, removed, allowed, head, target)
}

/// Vertices in the blocks along the block-cut-tree path from `head` to
/// `target` in the subgraph induced by `allowed`; None if disconnected.
fn block_chain_count(
    g: &CubicGraph,
    removed: &EdgeSet,
    allowed: u128,
    head: u32,
    target: u32,
) -> Option<u32> {
    // iterative DFS computing biconnected components via an edge stack
    let n = g.n();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut timer = 1u32;
    let mut blocks: Vec<u128> = Vec::new();
    let mut estack: Vec<(u32, u32)> = Vec::new();
    let mut frames: Vec<(u32, u32, usize)> = Vec::new(); // (v, parent, edge cursor)
    if allowed >> head & 1 == 0 {
        return None;
    }
    disc[head as usize] = timer;
    low[head as usize] = timer;
    timer += 1;
    frames.push((head, u32::MAX, 0));
    while let Some(&mut (v, parent, ref mut cursor)) = frames.last_mut() {
        let edges = g.incident_edges(v);
        if *cursor < 3 {
            let e = edges[*cursor] as usize;
            *cursor += 1;
            if removed.contains(e) {
                continue;
            }
            let w = g.other_end(e, v);
            if allowed >> w & 1 == 0 || w == parent {
                continue;
            }
            if disc[w as usize] == 0 {
                estack.push((v, w));
                disc[w as usize] = timer;
                low[w as usize] = timer;
                timer += 1;
                frames.push((w, v, 0));
            } else if disc[w as usize] < disc[v as usize] {
                estack.push((v, w));
                low[v as usize] = low[v as usize].min(disc[w as usize]);
            }
        } else {
            frames.pop();
            if let Some(&mut (p, _, _)) = frames.last_mut() {
                if low[v as usize] >= disc[p as usize] {
                    // pop one block
                    let mut blk = 0u128;
                    while let Some(&(a, b)) = estack.last() {
                        if disc[a as usize] >= disc[v as usize] {
                            blk |= 1 << a | 1 << b;
                            estack.pop();
                        } else {
                            break;
                        }
                    }
                    if let Some(&(a, b)) = estack.last() {
                        if a == p && b == v {
                            blk |= 1 << a | 1 << b;
                            estack.pop();
                        }
                    }
                    if blk != 0 {
                        blocks.push(blk);
                    }
                }
                low[p as usize] = low[p as usize].min(low[v as usize]);
            }
        }
    }
    if disc[target as usize] == 0 {
        return None;
    }
    if blocks.is_empty() {
        // head alone (target == head impossible here)
        return None;
    }
    // walk the block-cut tree: nodes are blocks, joined at cut vertices
    let start: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i] >> head & 1 == 1).collect();
    let goal: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i] >> target & 1 == 1).collect();
    if start.is_empty() || goal.is_empty() {
        return None;
    }
    // BFS over blocks adjacency (blocks sharing a vertex)
    let mut prev = vec![usize::MAX; blocks.len()];
    let mut visited = vec![false; blocks.len()];
    let mut queue: std::collections::VecDeque<usize> = start.iter().copied().collect();
    for &s in &start {
        visited[s] = true;
        prev[s] = s;
    }
    let mut reached = usize::MAX;
    'bfs: while let Some(b) = queue.pop_front() {
        if blocks[b] >> target & 1 == 1 {
            reached = b;
            break 'bfs;
        }
        for nb in 0..blocks.len() {
            if !visited[nb] && blocks[b] & blocks[nb] != 0 {
                visited[nb] = true;
                prev[nb] = b;
                queue.push_back(nb);
            }
        }
    }
    if reached == usize::MAX {
        return None;
    }
    let mut usable = 0u128;
    let mut b = reached;
    loop {
        usable |= blocks[b];
        if prev[b] == b {
            break;
        }
        b = prev[b];
    }
    Some(usable.count_ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> CubicGraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        CubicGraph::from_edges(6, &e).unwrap()
    }

    fn prism() -> CubicGraph {
        CubicGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
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

    fn bridged() -> CubicGraph {
        let mut e = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)];
        e.extend([(5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (5, 9), (6, 9)]);
        e.push((4, 9));
        CubicGraph::from_edges(10, &e).unwrap()
    }

    /// Two near-K4 gadgets joined by two edges.
    fn two_cut() -> CubicGraph {
        let e = vec![
            (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
            (0, 4), (1, 5),
        ];
        CubicGraph::from_edges(8, &e).unwrap()
    }

    fn validate_cycle(g: &CubicGraph, cyc: &[u32]) {
        assert!(cyc.len() >= 3);
        let mut sorted = cyc.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), cyc.len(), "repeated vertex in {cyc:?}");
        for i in 0..cyc.len() {
            let a = cyc[i];
            let b = cyc[(i + 1) % cyc.len()];
            assert!(g.neighbours(a).contains(&b), "{a}-{b} not an edge");
        }
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&k4()), 3);
        assert_eq!(girth(&k33()), 4);
        assert_eq!(girth(&petersen()), 5);
        validate_cycle(&petersen(), &shortest_cycle(&petersen()).unwrap());
    }

    #[test]
    fn distances() {
        assert_eq!(diameter_radius(&k4()).unwrap(), (1, 1));
        assert_eq!(diameter_radius(&petersen()).unwrap(), (2, 2));
    }

    #[test]
    fn cyclic_connectivity_small_graphs() {
        // K4 and K3,3 have no two disjoint cycles: value falls back to
        // the cycle rank with no witness cut
        let c = cyclic_connectivity(&k4(), None).unwrap();
        assert_eq!((c.value, c.cut), (3, None));
        let c = cyclic_connectivity(&k33(), None).unwrap();
        assert_eq!((c.value, c.cut), (4, None));

        let c = cyclic_connectivity(&petersen(), None).unwrap();
        assert_eq!(c.value, 5);
        assert!(is_cycle_separating(&petersen(), &c.cut.unwrap()));

        let c = cyclic_connectivity(&prism(), None).unwrap();
        assert_eq!(c.value, 3);
        assert!(is_cycle_separating(&prism(), &c.cut.unwrap()));
    }

    #[test]
    fn cyclic_connectivity_with_small_cuts() {
        let c = cyclic_connectivity(&bridged(), None).unwrap();
        assert_eq!(c.value, 1);
        assert!(is_cycle_separating(&bridged(), &c.cut.unwrap()));

        let c = cyclic_connectivity(&two_cut(), None).unwrap();
        assert_eq!(c.value, 2);
        let cut = c.cut.unwrap();
        assert!(is_cycle_separating(&two_cut(), &cut));
        assert_eq!(cut.len(), 2);
    }

    #[test]
    fn circumferences() {
        let (c, wit) = circumference(&k4(), None, 0).unwrap();
        assert_eq!(c, 4);
        validate_cycle(&k4(), &wit);

        let (c, wit) = circumference(&k33(), None, 0).unwrap();
        assert_eq!(c, 6);
        validate_cycle(&k33(), &wit);

        let (c, wit) = circumference(&petersen(), None, 0).unwrap();
        assert_eq!(c, 9);
        validate_cycle(&petersen(), &wit);

        // seeds may steer the heuristic but never the value
        assert_eq!(circumference(&petersen(), None, 12345).unwrap().0, 9);

        assert!(circumference(&petersen(), Some(1), 0).is_none());
    }

    #[test]
    fn bridged_graph_circumference_stays_inside_a_side() {
        let (c, wit) = circumference(&bridged(), None, 0).unwrap();
        assert_eq!(c, 5);
        validate_cycle(&bridged(), &wit);
    }
}
