//! Algorithms for cubic graphs and their uncolourability measures:
//! multipole algebra with semiedges and connectors, 3-edge-colouring
//! search, perfect-matching based measures (oddness, weak oddness,
//! resistance, perfect matching index, matching overlap and coverage),
//! structural invariants (girth, cyclic connectivity, circumference,
//! automorphisms, canonical forms), snark constructions (4-joins and
//! I-extensions), and an embedded, verifiable 31-graph dataset.

pub mod canonical;
pub mod colouring;
pub mod connectivity;
pub mod construct;
pub mod dataset;
pub mod error;
pub mod graph;
pub mod matching;
pub mod multipole;
pub mod report;

pub use canonical::{are_isomorphic, canonical_form, find_induced_copies, CanonicalForm};
pub use colouring::{
    boundary_types, boundary_words, classify_four_pole, colour_graph, colour_multipole,
    is_colourable, ColourDecision, ColourType, EdgeColouring, FourPoleClass, Pairing,
};
pub use construct::{
    blanusa1, blanusa2, block, dipole_z, enumerate_four_joins, four_join, four_pole, i_extension,
    i_reduction, k33, k4, petersen, side_picks, Block, FourJoinSpec, JoinMode, SidePick,
};

pub use connectivity::{
    circumference, cycle_rank, cyclic_connectivity, diameter_radius, girth, is_cycle_separating,
    CyclicCut,
};
pub use dataset::{
    class_evidence, entries, load, verify_all, verify_entry, Cell, ClassEvidence, Comparison,
    DatasetEntry, RowReport, VerificationReport,
};
pub use error::{Error, Result};
pub use graph::{Colour, CubicGraph, EdgeSet};
pub use matching::{
    multipole_resistance, oddness, oddness_with_floor, pair_intersection, perfect_matchings,
    pm_index, resistance, triple_intersection, vertex_resistance, weak_oddness, WeakOddness,
};
pub use multipole::{complete_junction, dipole_junction, JunctionOutcome, Multipole};
pub use report::{
    invariant_report, measure_report, structure_report, InvariantReport, MeasureReport,
    StructureReport,
};
