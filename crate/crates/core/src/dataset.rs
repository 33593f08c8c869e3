//! The embedded dataset: 31 snarks on 44 vertices with cyclic
//! connectivity 4 and oddness 4, their expected invariant table, and a
//! verifier recomputing every checked column from scratch.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_form, find_induced_copies};
use crate::connectivity::{circumference, cyclic_connectivity, diameter_radius, girth};
use crate::construct::{block, dipole_z, Block};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matching::{
    multipole_resistance, oddness_with_floor, pair_intersection, perfect_matchings, pm_index,
    resistance, triple_intersection, weak_oddness,
};
use crate::multipole::{dipole_junction, Multipole};

static ADJACENCY: [&str; 31] = [
    include_str!("../../../data/m31/g01.adj"),
    include_str!("../../../data/m31/g02.adj"),
    include_str!("../../../data/m31/g03.adj"),
    include_str!("../../../data/m31/g04.adj"),
    include_str!("../../../data/m31/g05.adj"),
    include_str!("../../../data/m31/g06.adj"),
    include_str!("../../../data/m31/g07.adj"),
    include_str!("../../../data/m31/g08.adj"),
    include_str!("../../../data/m31/g09.adj"),
    include_str!("../../../data/m31/g10.adj"),
    include_str!("../../../data/m31/g11.adj"),
    include_str!("../../../data/m31/g12.adj"),
    include_str!("../../../data/m31/g13.adj"),
    include_str!("../../../data/m31/g14.adj"),
    include_str!("../../../data/m31/g15.adj"),
    include_str!("../../../data/m31/g16.adj"),
    include_str!("../../../data/m31/g17.adj"),
    include_str!("../../../data/m31/g18.adj"),
    include_str!("../../../data/m31/g19.adj"),
    include_str!("../../../data/m31/g20.adj"),
    include_str!("../../../data/m31/g21.adj"),
    include_str!("../../../data/m31/g22.adj"),
    include_str!("../../../data/m31/g23.adj"),
    include_str!("../../../data/m31/g24.adj"),
    include_str!("../../../data/m31/g25.adj"),
    include_str!("../../../data/m31/g26.adj"),
    include_str!("../../../data/m31/g27.adj"),
    include_str!("../../../data/m31/g28.adj"),
    include_str!("../../../data/m31/g29.adj"),
    include_str!("../../../data/m31/g30.adj"),
    include_str!("../../../data/m31/g31.adj"),
];

static EXPECTED_CSV: &str = include_str!("../../../data/m31/expected.csv");

/// One row of the expected-value table.  Everything except `genus` is
/// recomputed by [`verify_entry`]; the genus column is reference data
/// only.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Expected {
    pub aut: u64,
    pub genus: u32,
    pub diameter: u32,
    pub radius: u32,
    pub circumference: u32,
    pub girth: u32,
    pub zeta: u32,
    pub omega: u32,
    pub weak_oddness: u32,
    pub resistance: u32,
    pub pmi: u32,
    pub gamma2: u32,
    pub mu3: u32,
}

#[derive(Clone, Debug)]
pub struct DatasetEntry {
    pub index: u32,
    pub class: &'static str,
    pub graph: CubicGraph,
    pub expected: Expected,
}

fn parse_table() -> Vec<(u32, &'static str, Expected)> {
    let mut rows = Vec::new();
    for line in EXPECTED_CSV.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("index,") {
            continue;
        }
        let fields: Vec<&'static str> = line.split(',').collect();
        assert_eq!(fields.len(), 15, "expected-value row has 15 fields: {line}");
        let num = |i: usize| -> u32 { fields[i].parse().expect("numeric table field") };
        rows.push((
            num(0),
            fields[1],
            Expected {
                aut: fields[2].parse().expect("numeric table field"),
                genus: num(3),
                diameter: num(4),
                radius: num(5),
                circumference: num(6),
                girth: num(7),
                zeta: num(8),
                omega: num(9),
                weak_oddness: num(10),
                resistance: num(11),
                pmi: num(12),
                gamma2: num(13),
                mu3: num(14),
            },
        ));
    }
    rows
}

static ENTRIES: Lazy<Vec<DatasetEntry>> = Lazy::new(|| {
    let table = parse_table();
    assert_eq!(table.len(), ADJACENCY.len());
    table
        .into_iter()
        .zip(ADJACENCY)
        .enumerate()
        .map(|(pos, ((index, class, expected), text))| {
            assert_eq!(index as usize, pos + 1, "table rows are in index order");
            let graph = CubicGraph::parse_adjacency_list(text).expect("embedded graph parses");
            assert_eq!(graph.n(), 44);
            DatasetEntry { index, class, graph, expected }
        })
        .collect()
});

pub fn entries() -> &'static [DatasetEntry] {
    &ENTRIES
}

pub fn load(index: u32) -> Result<&'static DatasetEntry> {
    if index == 0 {
        return Err(Error::DatasetIndex(0));
    }
    entries().get(index as usize - 1).ok_or(Error::DatasetIndex(index as usize))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Match,
    Mismatch,
    /// The computation ran out of budget or was inapplicable.  Never
    /// counts as a pass.
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub invariant: &'static str,
    pub expected: u64,
    pub computed: Option<u64>,
    pub outcome: Cell,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub index: u32,
    pub class: &'static str,
    /// Reference value, displayed but never checked.
    pub genus: u32,
    pub cells: Vec<Comparison>,
    pub canonical: String,
    pub all_match: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<RowReport>,
    pub pairwise_nonisomorphic: bool,
    pub all_match: bool,
}

fn settle<T>(r: Result<Option<T>>) -> Option<T> {
    r.ok().flatten()
}

/// Recomputes every checked column for one entry.  The budget applies
/// to each invariant computation separately.
pub fn verify_entry(entry: &DatasetEntry, budget: Option<u64>) -> RowReport {
    let g = &entry.graph;
    let x = &entry.expected;
    let mut cells = Vec::new();
    let mut add = |name: &'static str, expected: u32, computed: Option<u32>| {
        let outcome = match computed {
            None => Cell::Undecided,
            Some(v) if v == expected => Cell::Match,
            Some(_) => Cell::Mismatch,
        };
        cells.push(Comparison {
            invariant: name,
            expected: expected as u64,
            computed: computed.map(u64::from),
            outcome,
        });
    };

    add("girth", x.girth, Some(girth(g)));
    add("zeta", x.zeta, cyclic_connectivity(g, budget).map(|c| c.value));

    let rho = settle(resistance(g, budget)).map(|r| r.0);
    add("resistance", x.resistance, rho);

    // ρ ≤ ω and ω is even, so the computed resistance rounds up to a
    // sound floor for the 2-factor scan.
    let floor = rho.map_or(2, |r| r + (r & 1));
    let omega = settle(oddness_with_floor(g, floor, budget)).map(|o| o.0);
    add("omega", x.omega, omega);

    // ρ ≤ ω′ ≤ ω with ω′ even pins weak oddness whenever the two ends
    // meet; otherwise fall back to the general search.
    let weak = match (rho, omega) {
        (Some(r), Some(o)) if r + (r & 1) == o => Some(o),
        _ => settle(weak_oddness(g, budget)).map(|w| w.value),
    };
    add("weak_oddness", x.weak_oddness, weak);

    let pms = perfect_matchings(g).ok();
    let pmi = pms.as_ref().and_then(|pms| settle(pm_index(g, pms, budget)).map(|p| p.0));
    add("pmi", x.pmi, pmi);

    let even = |v: u32| v + (v & 1);
    let gamma2 = pms.as_ref().and_then(|pms| {
        let lower = omega.map_or(0, |o| even(o) / 2);
        settle(pair_intersection(pms, lower, budget)).map(|p| p.0)
    });
    add("gamma2", x.gamma2, gamma2);

    let mu3 = pms.as_ref().and_then(|pms| {
        let lower = omega.map_or(0, |o| (3 * o).div_ceil(2)).max(gamma2.map_or(0, |p| 3 * p));
        settle(triple_intersection(pms, lower, gamma2.unwrap_or(0), budget)).map(|t| t.0)
    });
    add("mu3", x.mu3, mu3);

    add("circumference", x.circumference, circumference(g, budget, 0).map(|c| c.0));

    let dr = diameter_radius(g).ok();
    add("diameter", x.diameter, dr.map(|d| d.0));
    add("radius", x.radius, dr.map(|d| d.1));

    let canon = canonical_form(g);
    let aut = Comparison {
        invariant: "aut",
        expected: x.aut,
        computed: Some(canon.aut_order),
        outcome: if canon.aut_order == x.aut { Cell::Match } else { Cell::Mismatch },
    };
    cells.push(aut);

    let all_match = cells.iter().all(|c| c.outcome == Cell::Match);
    RowReport {
        index: entry.index,
        class: entry.class,
        genus: x.genus,
        cells,
        canonical: canon.graph6,
        all_match,
    }
}

/// Verifies the whole table.  `jobs` sizes the worker pool (0 keeps
/// the default); the verdict does not depend on it.
pub fn verify_all(budget: Option<u64>, jobs: usize) -> VerificationReport {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("worker pool");
    let rows: Vec<RowReport> =
        pool.install(|| entries().par_iter().map(|e| verify_entry(e, budget)).collect());
    let mut forms: Vec<&str> = rows.iter().map(|r| r.canonical.as_str()).collect();
    forms.sort_unstable();
    forms.dedup();
    let pairwise_nonisomorphic = forms.len() == rows.len();
    let all_match = pairwise_nonisomorphic && rows.iter().all(|r| r.all_match);
    VerificationReport { rows, pairwise_nonisomorphic, all_match }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockCopy {
    pub block: Block,
    pub vertices: Vec<u32>,
}

/// A located dipole copy together with its recomputed resistance.
#[derive(Clone, Debug, Serialize)]
pub struct DipoleCertificate {
    pub dipole: u32,
    pub vertices: Vec<u32>,
    pub resistance: u32,
}

/// The structural evidence behind one dataset entry's class label:
/// pairwise-disjoint block copies covering all but the spare vertices,
/// plus the uncolourable-dipole certificates its oddness proof rests on.
#[derive(Clone, Debug, Serialize)]
pub struct ClassEvidence {
    pub index: u32,
    pub class: &'static str,
    pub blocks: Vec<BlockCopy>,
    pub spare_vertices: Vec<u32>,
    pub certificates: Vec<DipoleCertificate>,
    pub certificates_disjoint: bool,
    /// Lower bound on the resistance of the whole graph implied by the
    /// certificates: their sum when disjoint, otherwise their maximum.
    pub resistance_bound: u32,
}

/// Block composition and dipole certificates per class.  An `H` slot
/// accepts either heterochromatic shape.
fn class_structure(class: &str) -> Result<(Vec<Vec<Block>>, usize, [u32; 2])> {
    use Block::*;
    let h = || vec![H1, H2];
    let (slots, spare, dipoles) = match class {
        "1a" | "1b" => (vec![h(), h(), vec![I], vec![I], vec![I]], 0, [1, 2]),
        "2" => (vec![h(), h(), vec![I], vec![I], vec![N]], 1, [1, 1]),
        "3a" | "3b" => (vec![h(), vec![I], vec![I], vec![I], vec![I]], 2, [2, 3]),
        "3c" => (vec![h(), vec![I], vec![I], vec![I], vec![I]], 2, [1, 3]),
        "4a" | "4b" => (vec![h(), vec![I], vec![I], vec![I], vec![T]], 1, [2, 4]),
        "5a" | "5b" => (vec![vec![I]; 5], 4, [3, 3]),
        "6" => (vec![vec![I]; 4].into_iter().chain([vec![T]]).collect(), 3, [4, 3]),
        other => return Err(Error::Invalid(format!("unknown class label {other:?}"))),
    };
    Ok((slots, spare, dipoles))
}

fn vertex_mask(vertices: &[u32]) -> u128 {
    vertices.iter().fold(0u128, |m, &v| m | 1 << v)
}

/// Distinct vertex sets carrying an induced copy of the pattern.
fn induced_vertex_sets(host: &CubicGraph, pattern: &Multipole) -> Vec<(u128, Vec<u32>)> {
    let mut seen: BTreeMap<u128, Vec<u32>> = BTreeMap::new();
    for copy in find_induced_copies(host, pattern) {
        let mut sorted = copy;
        sorted.sort_unstable();
        seen.entry(vertex_mask(&sorted)).or_insert(sorted);
    }
    seen.into_iter().collect()
}

/// The sub-multipole induced on a vertex set (every edge leaving the
/// set becomes a semiedge).
fn induced_multipole(g: &CubicGraph, vertices: &[u32]) -> Result<Multipole> {
    let keep = vertex_mask(vertices);
    let drop: Vec<u32> = (0..g.n() as u32).filter(|&v| keep >> v & 1 == 0).collect();
    g.delete(&drop, &[])
}

fn pick_disjoint(
    groups: &[(Vec<(Block, u128, Vec<u32>)>, usize)],
    gi: usize,
    start: usize,
    left: usize,
    used: u128,
    picked: &mut Vec<(Block, Vec<u32>)>,
) -> bool {
    if left == 0 {
        if gi + 1 == groups.len() {
            return true;
        }
        return pick_disjoint(groups, gi + 1, 0, groups[gi + 1].1, used, picked);
    }
    let cands = &groups[gi].0;
    for i in start..cands.len() {
        let (b, mask, ref verts) = cands[i];
        if mask & used != 0 {
            continue;
        }
        picked.push((b, verts.clone()));
        if pick_disjoint(groups, gi, i + 1, left - 1, used | mask, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// Copies of a chained dipole in the host, trying both H variants for
/// the chains that contain an H block.
fn dipole_copies(g: &CubicGraph, d: u32) -> Result<Vec<(u128, Vec<u32>)>> {
    let variants: Vec<Multipole> = match d {
        1 => vec![dipole_z(1)?, dipole_junction(&block(Block::I), &block(Block::H2), None)?],
        2 => {
            let with_h2 = dipole_junction(&block(Block::I), &block(Block::H2), None)?;
            vec![dipole_z(2)?, dipole_junction(&with_h2, &block(Block::I), None)?]
        }
        _ => vec![dipole_z(d)?],
    };
    let mut seen: BTreeMap<u128, Vec<u32>> = BTreeMap::new();
    for v in &variants {
        for (mask, verts) in induced_vertex_sets(g, v) {
            seen.entry(mask).or_insert(verts);
        }
    }
    Ok(seen.into_iter().collect())
}

pub fn class_evidence(index: u32) -> Result<ClassEvidence> {
    let entry = load(index)?;
    let g = &entry.graph;
    let (slots, spare, dipoles) = class_structure(entry.class)?;

    // group equal slots so interchangeable picks are not revisited
    let mut grouped: Vec<(Vec<Block>, usize)> = Vec::new();
    for slot in slots {
        match grouped.iter_mut().find(|(kinds, _)| *kinds == slot) {
            Some((_, count)) => *count += 1,
            None => grouped.push((slot, 1)),
        }
    }
    let mut groups: Vec<(Vec<(Block, u128, Vec<u32>)>, usize)> = grouped
        .into_iter()
        .map(|(kinds, count)| {
            let mut cands = Vec::new();
            for b in kinds {
                for (mask, verts) in induced_vertex_sets(g, &block(b)) {
                    cands.push((b, mask, verts));
                }
            }
            (cands, count)
        })
        .collect();
    groups.sort_by_key(|(cands, _)| cands.len());

    let mut picked = Vec::new();
    if !pick_disjoint(&groups, 0, 0, groups[0].1, 0, &mut picked) {
        return Err(Error::Invalid(format!(
            "no disjoint block packing found for graph {index} (class {})",
            entry.class
        )));
    }
    picked.sort_by_key(|(b, _)| *b);
    let covered = picked.iter().fold(0u128, |m, (_, v)| m | vertex_mask(v));
    let spare_vertices: Vec<u32> = (0..g.n() as u32).filter(|&v| covered >> v & 1 == 0).collect();
    debug_assert_eq!(spare_vertices.len(), spare);

    // the dipole copies the oddness argument removes vertices from
    let copies_a = dipole_copies(g, dipoles[0])?;
    let copies_b = if dipoles[0] == dipoles[1] { copies_a.clone() } else { dipole_copies(g, dipoles[1])? };
    if copies_a.is_empty() || copies_b.is_empty() {
        return Err(Error::Invalid(format!("graph {index} is missing a dipole certificate")));
    }
    let mut chosen = None;
    'outer: for (i, a) in copies_a.iter().enumerate() {
        for (j, b) in copies_b.iter().enumerate() {
            if dipoles[0] == dipoles[1] && j <= i {
                continue;
            }
            if a.0 & b.0 == 0 {
                chosen = Some((a, b, true));
                break 'outer;
            }
        }
    }
    let (a, b, certificates_disjoint) =
        chosen.unwrap_or((&copies_a[0], &copies_b[copies_b.len() - 1], false));

    let mut certificates = Vec::new();
    for (dipole, copy) in [(dipoles[0], a), (dipoles[1], b)] {
        let m = induced_multipole(g, &copy.1)?;
        let (resistance, _) = multipole_resistance(&m, None)?
            .ok_or_else(|| Error::Invalid("dipole copy resisted every removal".into()))?;
        certificates.push(DipoleCertificate { dipole, vertices: copy.1.clone(), resistance });
    }
    let resistance_bound = if certificates_disjoint {
        certificates.iter().map(|c| c.resistance).sum()
    } else {
        certificates.iter().map(|c| c.resistance).max().unwrap_or(0)
    };

    Ok(ClassEvidence {
        index,
        class: entry.class,
        blocks: picked.into_iter().map(|(block, vertices)| BlockCopy { block, vertices }).collect(),
        spare_vertices,
        certificates,
        certificates_disjoint,
        resistance_bound,
    })
}
