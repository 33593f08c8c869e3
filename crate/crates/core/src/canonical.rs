//! Canonical labelling, automorphism counting, isomorphism testing, and
//! induced subgraph search.
//!
//! The canonical form comes from equitable partition refinement plus
//! individualization.  Starting from the unit partition, cells are split
//! by the multiset of neighbouring cell indices until stable; if cells
//! remain, the first smallest one is individualized in every possible
//! way, without pruning.  Every leaf of this tree is a discrete
//! partition, i.e. a relabelling; the canonical form is the least
//! relabelled edge list over all leaves.  The tree and the cell
//! selection are isomorphism-invariant, so the automorphism group acts
//! freely on leaves, and two leaves give the least edge list exactly
//! when they differ by an automorphism: the number of minimal leaves is
//! the order of the automorphism group.

use crate::graph::CubicGraph;
use crate::multipole::{MEnd, Multipole};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// graph6 string of the canonically relabelled graph.
    pub graph6: String,
    /// Map from original vertex to canonical label.
    pub labels: Vec<u32>,
    /// Order of the automorphism group.
    pub aut_order: u64,
}

fn refine(g: &CubicGraph, cells: &mut Vec<Vec<u32>>) {
    loop {
        let mut cell_of = vec![0u32; g.n()];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v as usize] = i as u32;
            }
        }
        let mut next: Vec<Vec<u32>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut groups: BTreeMap<[u32; 3], Vec<u32>> = BTreeMap::new();
            for &v in c {
                let mut sig = [0u32; 3];
                for (i, w) in g.neighbours(v).into_iter().enumerate() {
                    sig[i] = cell_of[w as usize];
                }
                sig.sort_unstable();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn leaf_key(g: &CubicGraph, cells: &[Vec<u32>]) -> (Vec<(u32, u32)>, Vec<u32>) {
    let mut label = vec![0u32; g.n()];
    for (i, c) in cells.iter().enumerate() {
        label[c[0] as usize] = i as u32;
    }
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u as usize], label[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    (edges, label)
}

fn descend(
    g: &CubicGraph,
    mut cells: Vec<Vec<u32>>,
    best: &mut Option<(Vec<(u32, u32)>, Vec<u32>)>,
    hits: &mut u64,
) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let ti = match target {
        None => {
            let (key, label) = leaf_key(g, &cells);
            match best {
                Some((bk, _)) if *bk < key => {}
                Some((bk, _)) if *bk == key => *hits += 1,
                _ => {
                    *best = Some((key, label));
                    *hits = 1;
                }
            }
            return;
        }
        Some(i) => i,
    };
    let cell = cells[ti].clone();
    for &v in &cell {
        let rest: Vec<u32> = cell.iter().copied().filter(|&w| w != v).collect();
        let mut child = cells.clone();
        child[ti] = vec![v];
        child.insert(ti + 1, rest);
        descend(g, child, best, hits);
    }
}

/// Canonical labelling and automorphism group order.
pub fn canonical_form(g: &CubicGraph) -> CanonicalForm {
    let cells = vec![(0..g.n() as u32).collect::<Vec<u32>>()];
    let mut best = None;
    let mut hits = 0;
    descend(g, cells, &mut best, &mut hits);
    let (edges, labels) = best.expect("at least one leaf");
    let canon = CubicGraph::from_edges(g.n(), &edges).expect("relabelling stays cubic");
    CanonicalForm { graph6: canon.to_graph6(), labels, aut_order: hits }
}

pub fn are_isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    a.n() == b.n() && canonical_form(a).graph6 == canonical_form(b).graph6
}

/// All labelled embeddings of a multipole's internal vertex structure
/// into a host graph as an induced subgraph.  Entry `i` of an embedding
/// is the host vertex for pattern vertex `i`.  Induced means internal
/// pattern edges map to host edges and pattern non-edges to host
/// non-edges; semiedges then automatically leave the image, since
/// degrees are 3 on both sides.  Patterns whose internal edges contain a
/// loop or a parallel pair embed nowhere.
pub fn find_induced_copies(host: &CubicGraph, pattern: &Multipole) -> Vec<Vec<u32>> {
    let pv = pattern.vertex_count();
    let mut adj = vec![vec![false; pv]; pv];
    for (a, b) in pattern.edge_view() {
        if let (MEnd::Vertex(u), MEnd::Vertex(w)) = (a, b) {
            let (u, w) = (u as usize, w as usize);
            if u == w || adj[u][w] {
                return Vec::new();
            }
            adj[u][w] = true;
            adj[w][u] = true;
        }
    }
    if pv == 0 || pv > host.n() {
        return Vec::new();
    }
    // order pattern vertices so each one touches an earlier one if possible
    let mut order: Vec<usize> = Vec::with_capacity(pv);
    let mut placed = vec![false; pv];
    while order.len() < pv {
        let next = (0..pv)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| (0..pv).filter(|&q| placed[q] && adj[p][q]).count());
        let next = next.unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![u32::MAX; pv];
    let mut used = vec![false; host.n()];
    let mut out = Vec::new();
    fn place(
        host: &CubicGraph,
        adj: &[Vec<bool>],
        order: &[usize],
        depth: usize,
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if depth == order.len() {
            out.push(image.clone());
            return;
        }
        let p = order[depth];
        let anchored: Option<u32> = order[..depth]
            .iter()
            .find(|&&q| adj[p][q])
            .map(|&q| image[q]);
        let candidates: Vec<u32> = match anchored {
            Some(h) => host.neighbours(h).to_vec(),
            None => (0..host.n() as u32).collect(),
        };
        'cand: for h in candidates {
            if used[h as usize] {
                continue;
            }
            for &q in &order[..depth] {
                let has = host.neighbours(h).contains(&image[q]);
                if has != adj[p][q] {
                    continue 'cand;
                }
            }
            image[p] = h;
            used[h as usize] = true;
            place(host, adj, order, depth + 1, image, used, out);
            used[h as usize] = false;
            image[p] = u32::MAX;
        }
    }
    place(host, &adj, &order, 0, &mut image, &mut used, &mut out);
    out
}
