//! Brute-force reference implementations and random generators shared
//! by the integration suites.  Everything here trades speed for
//! obviousness and stays independent of the library's search code.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use snark_core::CubicGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Proper 3-edge-colourability of an arbitrary edge list (degrees may
/// be below 3), by plain backtracking.
pub fn brute_edge_colourable(edges: &[(u32, u32)]) -> bool {
    fn rec(edges: &[(u32, u32)], cols: &mut Vec<u8>) -> bool {
        if cols.len() == edges.len() {
            return true;
        }
        let (a, b) = edges[cols.len()];
        'next: for c in 1..=3u8 {
            for (&(x, y), &col) in edges.iter().zip(cols.iter()) {
                if col == c && (x == a || x == b || y == a || y == b) {
                    continue 'next;
                }
            }
            cols.push(c);
            if rec(edges, cols) {
                return true;
            }
            cols.pop();
        }
        false
    }
    rec(edges, &mut Vec::new())
}

pub fn brute_colourable(g: &CubicGraph) -> bool {
    brute_edge_colourable(g.edges())
}

/// Colourability after deleting the edges at the given indices.
pub fn brute_colourable_minus(g: &CubicGraph, drop: &[usize]) -> bool {
    let kept: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &e)| e)
        .collect();
    brute_edge_colourable(&kept)
}

/// Smallest number of edges whose removal leaves a colourable graph.
pub fn brute_resistance(g: &CubicGraph) -> u32 {
    fn subsets(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, g: &CubicGraph) -> bool {
        if cur.len() == k {
            return brute_colourable_minus(g, cur);
        }
        (start..m).any(|e| {
            cur.push(e);
            let hit = subsets(m, k, e + 1, cur, g);
            cur.pop();
            hit
        })
    }
    (0..).find(|&k| subsets(g.m(), k as usize, 0, &mut Vec::new(), g)).unwrap()
}

/// All perfect matchings as edge-index lists, by filtering every edge
/// subset of the right size.
pub fn brute_perfect_matchings(g: &CubicGraph) -> Vec<Vec<usize>> {
    let m = g.m();
    assert!(m <= 24, "mask sweep only meant for small graphs");
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != g.n() / 2 {
            continue;
        }
        let mut seen = 0u128;
        let mut ok = true;
        for e in 0..m {
            if mask >> e & 1 == 1 {
                let (a, b) = g.edges()[e];
                if seen >> a & 1 == 1 || seen >> b & 1 == 1 {
                    ok = false;
                    break;
                }
                seen |= 1 << a | 1 << b;
            }
        }
        if ok && seen.count_ones() as usize == g.n() {
            out.push((0..m).filter(|e| mask >> e & 1 == 1).collect());
        }
    }
    out
}

fn component_sizes(n: usize, edges: &[(u32, u32)]) -> Vec<(usize, usize)> {
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[start] = id;
        let mut stack = vec![start as u32];
        let mut nv = 1;
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && comp[y as usize] == usize::MAX {
                        comp[y as usize] = id;
                        nv += 1;
                        stack.push(y);
                    }
                }
            }
        }
        let ne = edges.iter().filter(|&&(a, _)| comp[a as usize] == id).count();
        sizes.push((nv, ne));
    }
    sizes
}

/// Minimum odd components over all 2-factors, straight from the brute
/// matching list.
pub fn brute_oddness(g: &CubicGraph) -> u32 {
    brute_perfect_matchings(g)
        .iter()
        .map(|pm| {
            let rest: Vec<(u32, u32)> = (0..g.m())
                .filter(|e| !pm.contains(e))
                .map(|e| g.edges()[e])
                .collect();
            component_sizes(g.n(), &rest).iter().filter(|&&(nv, _)| nv % 2 == 1).count() as u32
        })
        .min()
        .expect("cubic graphs have a perfect matching")
}

/// True iff deleting the edge subset leaves at least two components
/// that contain a cycle.
pub fn separates_cycles(n: usize, edges: &[(u32, u32)], cut: &[usize]) -> bool {
    let kept: Vec<(u32, u32)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !cut.contains(i))
        .map(|(_, &e)| e)
        .collect();
    component_sizes(n, &kept).iter().filter(|&&(nv, ne)| ne >= nv).count() >= 2
}

/// Is there a cycle-separating cut of exactly this size?
pub fn has_cut_of_size(n: usize, edges: &[(u32, u32)], k: usize) -> bool {
    fn rec(n: usize, edges: &[(u32, u32)], k: usize, start: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == k {
            return separates_cycles(n, edges, cur);
        }
        (start..edges.len()).any(|e| {
            cur.push(e);
            let hit = rec(n, edges, k, e + 1, cur);
            cur.pop();
            hit
        })
    }
    rec(n, edges, k, 0, &mut Vec::new())
}

/// Cyclic connectivity of an arbitrary connected graph: the size of
/// the smallest cycle-separating edge cut, capped at the cycle rank
/// when no such cut exists.
pub fn brute_zeta(n: usize, edges: &[(u32, u32)]) -> u32 {
    let beta = (edges.len() + 1 - n) as u32;
    (1..beta).find(|&k| has_cut_of_size(n, edges, k as usize)).unwrap_or(beta)
}

/// Number of adjacency-preserving vertex bijections.
pub fn brute_aut(g: &CubicGraph) -> u64 {
    let n = g.n();
    let adj = |a: u32, b: u32| g.edge_between(a, b).is_some();
    fn rec(g: &CubicGraph, adj: &dyn Fn(u32, u32) -> bool, map: &mut Vec<u32>, used: &mut Vec<bool>) -> u64 {
        let v = map.len() as u32;
        if v as usize == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n() as u32 {
            if used[w as usize] {
                continue;
            }
            if (0..v).all(|u| adj(u, v) == adj(map[u as usize], w)) {
                map.push(w);
                used[w as usize] = true;
                total += rec(g, adj, map, used);
                map.pop();
                used[w as usize] = false;
            }
        }
        total
    }
    rec(g, &adj, &mut Vec::new(), &mut vec![false; n])
}

/// Longest cycle length by exhaustive anchored path search.
pub fn brute_circumference(g: &CubicGraph) -> u32 {
    fn extend(g: &CubicGraph, anchor: u32, v: u32, used: &mut u128, len: u32, best: &mut u32) {
        for e in g.incident_edges(v) {
            let w = g.other_end(e as usize, v);
            if w == anchor && len >= 2 {
                *best = (*best).max(len + 1);
            }
            if w > anchor && *used >> w & 1 == 0 {
                *used |= 1 << w;
                extend(g, anchor, w, used, len + 1, best);
                *used &= !(1 << w);
            }
        }
    }
    let mut best = 0;
    for anchor in 0..g.n() as u32 {
        let mut used = 1u128 << anchor;
        extend(g, anchor, anchor, &mut used, 0, &mut best);
    }
    best
}

/// Fewest perfect matchings covering every edge, straight from the
/// brute matching list.
pub fn brute_pm_cover_number(g: &CubicGraph) -> u32 {
    let pms = brute_perfect_matchings(g);
    let masks: Vec<u64> =
        pms.iter().map(|pm| pm.iter().fold(0u64, |m, &e| m | 1 << e)).collect();
    let all = (1u64 << g.m()) - 1;
    fn rec(masks: &[u64], all: u64, k: usize, start: usize, got: u64) -> bool {
        if got == all {
            return true;
        }
        if k == 0 {
            return false;
        }
        (start..masks.len()).any(|i| rec(masks, all, k - 1, i + 1, got | masks[i]))
    }
    (1..).find(|&k| rec(&masks, all, k as usize, 0, 0)).unwrap()
}

/// Minimum intersection over pairs of perfect matchings.
pub fn brute_gamma2(g: &CubicGraph) -> u32 {
    let pms = brute_perfect_matchings(g);
    let mut best = u32::MAX;
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            best = best.min(pms[i].iter().filter(|e| pms[j].contains(e)).count() as u32);
        }
    }
    best
}

/// Minimum number of edges left uncovered by three perfect matchings.
pub fn brute_mu3(g: &CubicGraph) -> u32 {
    let pms = brute_perfect_matchings(g);
    let masks: Vec<u64> =
        pms.iter().map(|pm| pm.iter().fold(0u64, |m, &e| m | 1 << e)).collect();
    let mut best = u32::MAX;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            for k in j + 1..masks.len() {
                best = best.min(g.m() as u32 - (masks[i] | masks[j] | masks[k]).count_ones());
            }
        }
    }
    best
}

/// Permanent of a 0/1 biadjacency matrix by expansion over rows; the
/// perfect-matching count of a bipartite graph.
pub fn permanent(rows: &[Vec<u8>]) -> u64 {
    fn rec(rows: &[Vec<u8>], r: usize, used: u32) -> u64 {
        if r == rows.len() {
            return 1;
        }
        (0..rows[r].len())
            .filter(|&c| rows[r][c] == 1 && used >> c & 1 == 0)
            .map(|c| rec(rows, r + 1, used | 1 << c))
            .sum()
    }
    rec(rows, 0, 0)
}

/// Connected simple cubic graph from the pairing model.
pub fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> CubicGraph {
    assert!(n % 2 == 0 && n >= 4);
    loop {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let edges: Vec<(u32, u32)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = CubicGraph::from_edges(n, &edges) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

pub fn random_bridgeless_cubic(n: usize, rng: &mut ChaCha8Rng) -> CubicGraph {
    loop {
        let g = random_cubic(n, rng);
        if g.bridges().is_empty() {
            return g;
        }
    }
}

/// A random multipole carved out of a random cubic graph by deleting
/// vertices and severing edges.
pub fn random_multipole(rng: &mut ChaCha8Rng) -> snark_core::Multipole {
    loop {
        let n = *[8usize, 10, 12].choose(rng).unwrap();
        let g = random_cubic(n, rng);
        let attempt = match rng.gen_range(0..4) {
            0 => g.delete(&[rng.gen_range(0..n as u32)], &[]),
            1 => g.delete(&[], &[rng.gen_range(0..g.m())]),
            2 => {
                let a = rng.gen_range(0..n as u32);
                let b = rng.gen_range(0..n as u32);
                if a == b {
                    continue;
                }
                g.delete(&[a, b], &[])
            }
            _ => g.delete(&[rng.gen_range(0..n as u32)], &[rng.gen_range(0..g.m())]),
        };
        match attempt {
            Ok(m) if m.free_loops() == 0 => return m,
            _ => continue,
        }
    }
}

/// The Parity Lemma on random colourable multipoles: in every proper
/// colouring, each colour appears on the boundary with the parity of
/// the boundary size.
pub fn parity_lemma_suite(cases: usize, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut done = 0;
    while done < cases {
        let m = random_multipole(rng);
        let words = snark_core::boundary_words(&m, None).expect("unbudgeted run completes");
        if words.is_empty() {
            continue;
        }
        let k = m.k();
        for (word, _) in &words {
            for colour in 1..=3u8 {
                let seen = word.iter().filter(|&&c| c == colour).count();
                if seen % 2 != k % 2 {
                    return Err(format!(
                        "colour {colour} appears {seen} times on a {k}-pole: {}",
                        m.to_text()
                    ));
                }
            }
        }
        done += 1;
    }
    Ok(done)
}

/// The bound chain on random bridgeless cubic graphs: ρ ≤ ω′ ≤ ω,
/// ω even, ρ=2 ⇔ ω=2, π=3 ⇔ ω=0, ω ≤ 2γ₂, ω ≤ 2μ₃/3.
pub fn measure_chain_suite(cases: usize, n_max: usize, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for case in 0..cases {
        let n = 2 * rng.gen_range(3..=n_max / 2);
        let g = random_bridgeless_cubic(n, rng);
        let r = snark_core::measure_report(&g, None).map_err(|e| e.to_string())?;
        let fail = |what: &str| Err(format!("case {case}: {what} on {}", g.to_graph6()));
        let (rho, weak, omega) = match (r.resistance, r.weak_oddness, r.omega) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => return fail("unbudgeted run left a measure unsettled"),
        };
        if !(rho <= weak && weak <= omega) {
            return fail("resistance/weak oddness/oddness chain broken");
        }
        if omega % 2 != 0 {
            return fail("odd oddness");
        }
        if (rho == 2) != (omega == 2) {
            return fail("resistance 2 must pair with oddness 2");
        }
        if (r.pmi == Some(3)) != (omega == 0) {
            return fail("matching index 3 must pair with colourable");
        }
        let (gamma2, mu3) = (r.gamma2.unwrap(), r.mu3.unwrap());
        if omega > 2 * gamma2 || 2 * mu3 < 3 * omega {
            return fail("matching-measure bounds broken");
        }
    }
    Ok(cases)
}

/// Cyclic connectivity is invariant under edge subdivision, checked
/// against exhaustive cut search on both the graph and a random
/// subdivision of it.
pub fn zeta_subdivision_suite(cases: usize, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for case in 0..cases {
        let n = *[10usize, 12, 14].choose(rng).unwrap();
        let g = random_cubic(n, rng);
        let zeta = snark_core::cyclic_connectivity(&g, None).expect("unbudgeted").value;
        let fail = |what: String| Err(format!("case {case}: {what} on {}", g.to_graph6()));
        if brute_zeta(g.n(), g.edges()) != zeta {
            return fail(format!("exhaustive cut search disagrees with zeta {zeta}"));
        }
        let mut edges = g.edges().to_vec();
        let mut next = n as u32;
        for e in (0..g.m()).filter(|_| rng.gen_bool(0.3)) {
            let (a, b) = edges[e];
            edges[e] = (a, next);
            edges.push((next, b));
            next += 1;
        }
        let total = next as usize;
        let beta = edges.len() + 1 - total;
        if (1..zeta).any(|k| has_cut_of_size(total, &edges, k as usize)) {
            return fail(format!("subdivision has a cut below zeta {zeta}"));
        }
        if zeta as usize != beta && !has_cut_of_size(total, &edges, zeta as usize) {
            return fail(format!("subdivision lost the witness cut at zeta {zeta}"));
        }
    }
    Ok(cases)
}
