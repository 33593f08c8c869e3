//! Named graphs, the Petersen-derived building blocks, Z-dipoles,
//! 4-joins, and I-extensions.
//!
//! Petersen labelling used throughout: outer cycle 0-1-2-3-4, spokes
//! i - i+5, inner vertices i+5 adjacent to ((i±2) mod 5)+5.

use crate::canonical::canonical_form;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::multipole::{complete_junction, dipole_junction, JunctionOutcome, MEnd, Multipole};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::str::FromStr;

pub fn petersen() -> CubicGraph {
    let mut e = Vec::new();
    for i in 0..5u32 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    CubicGraph::from_edges(10, &e).expect("valid by construction")
}

pub fn k4() -> CubicGraph {
    CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("valid by construction")
}

pub fn k33() -> CubicGraph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    CubicGraph::from_edges(6, &e).expect("valid by construction")
}

/// The five Petersen-derived building blocks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Block {
    /// Petersen minus two adjacent vertices: the isochromatic 4-pole.
    I,
    /// Petersen minus two independent edges at distance 1: heterochromatic.
    H1,
    /// Petersen minus two independent edges at distance 2: heterochromatic.
    H2,
    /// Petersen minus a vertex, plus one severed edge: a (2,3)-pole.
    T,
    /// Petersen minus a three-vertex path: a (2,2,1)-pole.
    N,
}

impl FromStr for Block {
    type Err = Error;

    fn from_str(s: &str) -> Result<Block> {
        match s.to_ascii_lowercase().as_str() {
            "i" => Ok(Block::I),
            "h1" => Ok(Block::H1),
            "h2" => Ok(Block::H2),
            "t" => Ok(Block::T),
            "n" => Ok(Block::N),
            other => Err(Error::Invalid(format!("unknown block {other:?}"))),
        }
    }
}

/// Builds a block from the Petersen graph.  Connectors group the
/// semiedges by former vertex (I, N), by former edge (H1, H2), or as
/// [severed edge, former vertex] (T).
pub fn block(b: Block) -> Multipole {
    let p = petersen();
    let edge = |a, b| p.edge_between(a, b).expect("Petersen edge");
    let (mut m, groups): (Multipole, Vec<Vec<usize>>) = match b {
        // semiedge positions come out sorted by (surviving vertex, edge)
        Block::I => (p.delete(&[0, 1], &[]).unwrap(), vec![vec![1, 2], vec![0, 3]]),
        Block::H1 => (p.delete(&[], &[edge(0, 1), edge(2, 3)]).unwrap(), vec![vec![0, 1], vec![2, 3]]),
        Block::H2 => (p.delete(&[], &[edge(0, 1), edge(7, 9)]).unwrap(), vec![vec![0, 1], vec![2, 3]]),
        Block::T => (p.delete(&[0], &[edge(2, 3)]).unwrap(), vec![vec![1, 2], vec![0, 3, 4]]),
        Block::N => (p.delete(&[0, 1, 2], &[]).unwrap(), vec![vec![1, 2], vec![0, 4], vec![3]]),
    };
    m.set_connectors(&groups).expect("fixed grouping is a partition");
    m
}

/// The dipoles Z1..Z4: Z1 = I∘H1, Z2 = I∘H1∘I, Z3 = I∘I with one
/// connecting edge subdivided and given a dangling edge, Z4 = I∘T.
pub fn dipole_z(i: u32) -> Result<Multipole> {
    match i {
        1 => dipole_junction(&block(Block::I), &block(Block::H1), None),
        2 => dipole_junction(&dipole_z(1)?, &block(Block::I), None),
        3 => {
            let mut m = dipole_junction(&block(Block::I), &block(Block::I), None)?;
            let connecting = m
                .edge_view()
                .iter()
                .position(|&(a, b)| match (a, b) {
                    (MEnd::Vertex(u), MEnd::Vertex(w)) => (u < 8) != (w < 8),
                    _ => false,
                })
                .expect("the junction added edges between the copies");
            m.subdivide_and_attach(connecting)?;
            Ok(m)
        }
        4 => dipole_junction(&block(Block::I), &block(Block::T), None),
        other => Err(Error::Invalid(format!("no dipole Z{other}"))),
    }
}

/// One side of a 4-join: the 4-pole obtained from a cubic graph by
/// removing two adjacent vertices or severing two independent edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "mode", content = "args", rename_all = "lowercase")]
pub enum SidePick {
    Vertices([u32; 2]),
    Edges([[u32; 2]; 2]),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FourJoinSpec {
    pub side1: SidePick,
    pub side2: SidePick,
    /// Semiedge `i` of side 1 joins semiedge `perm[i]` of side 2.
    pub perm: [usize; 4],
}

/// Builds the 4-pole for one side.  Connectors pair the semiedges by
/// former vertex (vertex mode) or former edge (edge mode), in argument
/// order.
pub fn four_pole(g: &CubicGraph, pick: &SidePick) -> Result<Multipole> {
    match *pick {
        SidePick::Vertices([u, v]) => {
            if g.edge_between(u, v).is_none() {
                return Err(Error::Invalid(format!("vertices {u} and {v} are not adjacent")));
            }
            let mut m = g.delete(&[u, v], &[])?;
            m.set_connectors(&owner_groups(g, &[u, v]))?;
            Ok(m)
        }
        SidePick::Edges([[a, b], [c, d]]) => {
            let e = g
                .edge_between(a, b)
                .ok_or_else(|| Error::Invalid(format!("no edge {a}-{b}")))?;
            let f = g
                .edge_between(c, d)
                .ok_or_else(|| Error::Invalid(format!("no edge {c}-{d}")))?;
            if [a, b].iter().any(|x| [c, d].contains(x)) {
                return Err(Error::Invalid(format!("edges {a}-{b} and {c}-{d} share a vertex")));
            }
            let mut m = g.delete(&[], &[e, f])?;
            // positions sorted by (vertex, edge); group by former edge
            let mut pos: Vec<(u32, usize)> = vec![(a, e), (b, e), (c, f), (d, f)];
            pos.sort_unstable();
            let by_edge = |x: usize| -> Vec<usize> {
                pos.iter().enumerate().filter(|(_, p)| p.1 == x).map(|(i, _)| i).collect()
            };
            m.set_connectors(&[by_edge(e), by_edge(f)])?;
            Ok(m)
        }
    }
}

/// Semiedge positions of `g.delete(owners, &[])` grouped per deleted
/// vertex, reproducing the (surviving vertex, edge index) sort order.
fn owner_groups(g: &CubicGraph, owners: &[u32]) -> Vec<Vec<usize>> {
    let mut semis: Vec<(u32, usize, u32)> = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let da = owners.contains(&a);
        let db = owners.contains(&b);
        if da && !db {
            semis.push((b, e, a));
        } else if db && !da {
            semis.push((a, e, b));
        }
    }
    semis.sort_unstable();
    owners
        .iter()
        .map(|&o| {
            semis
                .iter()
                .enumerate()
                .filter(|(_, s)| s.2 == o)
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// Performs a 4-join.  The result must be a simple cubic graph; a join
/// producing parallel edges or loops is an error, not a silent collapse.
pub fn four_join(g1: &CubicGraph, g2: &CubicGraph, spec: &FourJoinSpec) -> Result<CubicGraph> {
    let m1 = four_pole(g1, &spec.side1)?;
    let m2 = four_pole(g2, &spec.side2)?;
    match complete_junction(&m1, &m2, Some(&spec.perm))? {
        JunctionOutcome::Graph(g) => Ok(g),
        JunctionOutcome::Partial(_, diags) => Err(Error::Invalid(format!(
            "4-join is not a simple cubic graph: {}",
            diags.join("; ")
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JoinMode {
    Vertices,
    Edges,
}

/// Every valid side pick on `g` under the given mode, in a deterministic
/// order: adjacent vertex pairs are exactly the edges; edge mode lists
/// independent edge pairs ordered by index.
pub fn side_picks(g: &CubicGraph, mode: JoinMode) -> Vec<SidePick> {
    match mode {
        JoinMode::Vertices => {
            g.edges().iter().map(|&(u, v)| SidePick::Vertices([u, v])).collect()
        }
        JoinMode::Edges => {
            let mut out = Vec::new();
            for e in 0..g.m() {
                let (a, b) = g.endpoints(e);
                for f in e + 1..g.m() {
                    let (c, d) = g.endpoints(f);
                    if a != c && a != d && b != c && b != d {
                        out.push(SidePick::Edges([[a, b], [c, d]]));
                    }
                }
            }
            out
        }
    }
}

const PERMS4: [[usize; 4]; 24] = {
    let mut out = [[0usize; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                let mut d = 0;
                while d < 4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out[n] = [a, b, c, d];
                        n += 1;
                    }
                    d += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Applies the 4-join in every way allowed by the mode lists: all side
/// picks on both sides, all 24 permutations.  Joins that fail to close
/// into a simple cubic graph are skipped.  `filter` keeps a result;
/// `dedup` keeps the first representative of each isomorphism class.
/// Output order is deterministic (side1, side2, permutation).
pub fn enumerate_four_joins<F>(
    g1: &CubicGraph,
    g2: &CubicGraph,
    modes1: &[JoinMode],
    modes2: &[JoinMode],
    filter: F,
    dedup: bool,
) -> Vec<(FourJoinSpec, CubicGraph)>
where
    F: Fn(&CubicGraph) -> bool + Sync,
{
    let sides1: Vec<SidePick> = modes1.iter().flat_map(|&m| side_picks(g1, m)).collect();
    let sides2: Vec<SidePick> = modes2.iter().flat_map(|&m| side_picks(g2, m)).collect();
    let poles2: Vec<Multipole> =
        sides2.iter().map(|s| four_pole(g2, s).expect("listed picks are valid")).collect();
    let mut hits: Vec<(usize, FourJoinSpec, CubicGraph)> = sides1
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i1, s1)| {
            let m1 = four_pole(g1, s1).expect("listed picks are valid");
            let mut local = Vec::new();
            for (i2, m2) in poles2.iter().enumerate() {
                for (ip, perm) in PERMS4.iter().enumerate() {
                    if let Ok(JunctionOutcome::Graph(g)) = complete_junction(&m1, m2, Some(perm)) {
                        if filter(&g) {
                            let spec =
                                FourJoinSpec { side1: *s1, side2: sides2[i2], perm: *perm };
                            local.push(((i1 * poles2.len() + i2) * 24 + ip, spec, g));
                        }
                    }
                }
            }
            local
        })
        .collect();
    hits.sort_by_key(|h| h.0);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (_, spec, g) in hits {
        if dedup && !seen.insert(canonical_form(&g).graph6) {
            continue;
        }
        out.push((spec, g));
    }
    out
}

/// Subdivides edges `e` and `f` with new vertices joined by a fresh edge.
pub fn i_extension(g: &CubicGraph, e: usize, f: usize) -> Result<CubicGraph> {
    if e >= g.m() {
        return Err(Error::UnknownEdge(e));
    }
    if f >= g.m() {
        return Err(Error::UnknownEdge(f));
    }
    if e == f {
        return Err(Error::Invalid("the two subdivided edges must differ".into()));
    }
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    let (ve, vf) = (g.n() as u32, g.n() as u32 + 1);
    let mut edges: Vec<(u32, u32)> =
        (0..g.m()).filter(|&x| x != e && x != f).map(|x| g.endpoints(x)).collect();
    edges.extend([(a, ve), (ve, b), (c, vf), (vf, d), (ve, vf)]);
    CubicGraph::from_edges(g.n() + 2, &edges)
}

/// Removes edge `e` and suppresses its two endpoints, merging the
/// remaining edge pair at each into one (the inverse of `i_extension`).
/// Fails when the merge would create a parallel edge.
pub fn i_reduction(g: &CubicGraph, e: usize) -> Result<CubicGraph> {
    if e >= g.m() {
        return Err(Error::UnknownEdge(e));
    }
    let (x, y) = g.endpoints(e);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for idx in 0..g.m() {
        let (a, b) = g.endpoints(idx);
        if a != x && a != y && b != x && b != y {
            edges.push((a, b));
        }
    }
    for v in [x, y] {
        let rest: Vec<u32> =
            g.neighbours(v).into_iter().filter(|&w| w != x && w != y).collect();
        edges.push((rest[0], rest[1]));
    }
    let mut newid = vec![u32::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() as u32 {
        if v != x && v != y {
            newid[v as usize] = next;
            next += 1;
        }
    }
    let relabelled: Vec<(u32, u32)> =
        edges.iter().map(|&(a, b)| (newid[a as usize], newid[b as usize])).collect();
    CubicGraph::from_edges(g.n() - 2, &relabelled)
}

/// First Blanuša snark: 4-join of two Petersen graphs, severing two
/// edges at distance 2 on one side and removing two adjacent vertices on
/// the other.
pub fn blanusa1() -> CubicGraph {
    four_join(&petersen(), &petersen(), &BLANUSA1_SPEC).expect("frozen spec is valid")
}

/// Second Blanuša snark: as [`blanusa1`], but severing two edges at
/// distance 1.
pub fn blanusa2() -> CubicGraph {
    four_join(&petersen(), &petersen(), &BLANUSA2_SPEC).expect("frozen spec is valid")
}

pub const BLANUSA1_SPEC: FourJoinSpec = FourJoinSpec {
    side1: SidePick::Edges([[0, 1], [3, 8]]),
    side2: SidePick::Vertices([0, 1]),
    perm: [0, 1, 2, 3],
};

pub const BLANUSA2_SPEC: FourJoinSpec = FourJoinSpec {
    side1: SidePick::Edges([[0, 1], [2, 3]]),
    side2: SidePick::Vertices([0, 1]),
    perm: [0, 1, 2, 3],
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{
        classify_four_pole, colour_multipole, is_colourable, n_signature_holds, t_signature_holds,
        ColourDecision, FourPoleClass, Pairing,
    };
    use crate::connectivity::girth;

    #[test]
    fn named_graphs() {
        let p = petersen();
        assert_eq!((p.n(), p.m(), girth(&p)), (10, 15, 5));
        assert!(!is_colourable(&p));
        assert!(is_colourable(&k4()));
        assert!(is_colourable(&k33()));
    }

    #[test]
    fn blocks_have_their_colouring_behaviour() {
        let i = block(Block::I);
        assert_eq!((i.vertex_count(), i.connector_sizes()), (8, vec![2, 2]));
        assert_eq!(
            classify_four_pole(&i, None).unwrap().unwrap(),
            FourPoleClass::Isochromatic(Pairing::Adjacent)
        );
        for h in [block(Block::H1), block(Block::H2)] {
            assert_eq!((h.vertex_count(), h.connector_sizes()), (10, vec![2, 2]));
            assert_eq!(
                classify_four_pole(&h, None).unwrap().unwrap(),
                FourPoleClass::Heterochromatic(Pairing::Adjacent)
            );
        }
        let t = block(Block::T);
        assert_eq!((t.vertex_count(), t.connector_sizes()), (9, vec![2, 3]));
        assert_eq!(t_signature_holds(&t, None).unwrap(), Some(true));
        let n = block(Block::N);
        assert_eq!((n.vertex_count(), n.connector_sizes()), (7, vec![2, 2, 1]));
        assert_eq!(n_signature_holds(&n, None).unwrap(), Some(true));
    }

    #[test]
    fn severed_k4_fails_the_t_signature() {
        // K4 minus a vertex plus a severed edge: the 3-connector can go
        // rainbow, which the signature forbids
        let g = k4();
        let mut m = g.delete(&[3], &[g.edge_between(0, 1).unwrap()]).unwrap();
        // positions sorted by (vertex, edge): the severed 0-1 edge sits
        // at 0 and 2, the former vertex 3 at 1, 3, 4
        m.set_connectors(&[vec![0, 2], vec![1, 3, 4]]).unwrap();
        assert_eq!(t_signature_holds(&m, None).unwrap(), Some(false));
    }

    #[test]
    fn z_dipoles() {
        let sizes = [(18, vec![2, 2]), (26, vec![2, 2]), (17, vec![2, 2, 1]), (17, vec![2, 3])];
        for (i, (nv, conns)) in (1..=4).zip(sizes) {
            let z = dipole_z(i).unwrap();
            assert_eq!((z.vertex_count(), z.connector_sizes()), (nv, conns), "Z{i}");
            assert!(
                matches!(colour_multipole(&z, None), ColourDecision::Uncolourable),
                "Z{i} colourable"
            );
        }
        assert!(dipole_z(5).is_err());
    }

    #[test]
    fn completed_junction_of_two_i_blocks() {
        let i = block(Block::I);
        match complete_junction(&i, &i, None).unwrap() {
            JunctionOutcome::Graph(g) => assert_eq!(g.n(), 16),
            JunctionOutcome::Partial(_, d) => panic!("not simple: {d:?}"),
        }
    }

    #[test]
    fn four_join_bookkeeping() {
        let p = petersen();
        let spec = FourJoinSpec {
            side1: SidePick::Vertices([0, 1]),
            side2: SidePick::Vertices([0, 1]),
            perm: [2, 3, 0, 1],
        };
        let g = four_join(&p, &p, &spec).unwrap();
        assert_eq!(g.n(), 16);

        let bad = FourJoinSpec {
            side1: SidePick::Edges([[0, 1], [1, 2]]),
            side2: SidePick::Vertices([0, 1]),
            perm: [0, 1, 2, 3],
        };
        assert!(four_join(&p, &p, &bad).is_err());
        let nonadjacent = SidePick::Vertices([0, 2]);
        assert!(four_pole(&p, &nonadjacent).is_err());
    }

    #[test]
    fn spec_json_format_is_stable() {
        let spec = FourJoinSpec {
            side1: SidePick::Vertices([0, 1]),
            side2: SidePick::Edges([[0, 1], [2, 3]]),
            perm: [3, 2, 1, 0],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"side1":{"mode":"vertices","args":[0,1]},"side2":{"mode":"edges","args":[[0,1],[2,3]]},"perm":[3,2,1,0]}"#
        );
        let back: FourJoinSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn i_extension_and_reduction_are_inverse() {
        let p = petersen();
        let h = i_extension(&p, 0, 7).unwrap();
        assert_eq!(h.n(), 12);
        let bridge = h.edge_between(10, 11).unwrap();
        assert_eq!(i_reduction(&h, bridge).unwrap(), p);
        // suppressing a triangle edge would duplicate the opposite edge
        assert!(i_reduction(&k4(), 0).is_err());
        assert!(i_extension(&p, 3, 3).is_err());
    }

    #[test]
    fn blanusa_snarks() {
        let b1 = blanusa1();
        let b2 = blanusa2();
        for b in [&b1, &b2] {
            assert_eq!((b.n(), girth(b)), (18, 5));
            assert!(!is_colourable(b));
        }
        let c1 = canonical_form(&b1);
        let c2 = canonical_form(&b2);
        assert_ne!(c1.graph6, c2.graph6);
        assert_eq!((c1.aut_order, c2.aut_order), (8, 4));
    }

}
