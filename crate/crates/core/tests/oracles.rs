//! Frozen invariant rows for the reference graphs, each value checked
//! three ways: against the constant below, against the library solver,
//! and against the brute-force oracles in `common`.

mod common;

use snark_core::colouring::{colour_multipole_minus, ColourDecision};
use snark_core::{
    are_isomorphic, blanusa1, blanusa2, canonical_form, colour_multipole, dipole_z,
    invariant_report, k33, k4, petersen, CubicGraph, InvariantReport,
};

struct Row {
    pms: u64,
    omega: u32,
    weak: u32,
    rho: u32,
    pmi: u32,
    gamma2: u32,
    mu3: u32,
    girth: u32,
    zeta: u32,
    circumference: u32,
    aut: u64,
    diameter: u32,
    radius: u32,
}

fn assert_row(g: &CubicGraph, want: &Row) -> InvariantReport {
    let r = invariant_report(g, None, 0).unwrap();
    assert_eq!(r.measures.omega, Some(want.omega));
    assert_eq!(r.measures.weak_oddness, Some(want.weak));
    assert_eq!(r.measures.resistance, Some(want.rho));
    assert_eq!(r.measures.pmi, Some(want.pmi));
    assert_eq!(r.measures.gamma2, Some(want.gamma2));
    assert_eq!(r.measures.mu3, Some(want.mu3));
    assert_eq!(r.structure.girth, want.girth);
    assert_eq!(r.structure.zeta, Some(want.zeta));
    assert_eq!(r.structure.circumference, Some(want.circumference));
    assert_eq!(r.structure.aut, want.aut);
    assert_eq!((r.structure.diameter, r.structure.radius), (want.diameter, want.radius));

    assert_eq!(common::brute_perfect_matchings(g).len() as u64, want.pms);
    assert_eq!(common::brute_oddness(g), want.omega);
    assert_eq!(common::brute_resistance(g), want.rho);
    assert_eq!(common::brute_pm_cover_number(g), want.pmi);
    assert_eq!(common::brute_gamma2(g), want.gamma2);
    assert_eq!(common::brute_mu3(g), want.mu3);
    assert_eq!(common::brute_zeta(g.n(), g.edges()), want.zeta);
    assert_eq!(common::brute_circumference(g), want.circumference);
    assert_eq!(common::brute_aut(g), want.aut);
    r
}

#[test]
fn petersen_row() {
    let g = petersen();
    let r = assert_row(
        &g,
        &Row {
            pms: 6,
            omega: 2,
            weak: 2,
            rho: 2,
            pmi: 5,
            gamma2: 1,
            mu3: 3,
            girth: 5,
            zeta: 5,
            circumference: 9,
            aut: 120,
            diameter: 2,
            radius: 2,
        },
    );
    assert_eq!(r.structure.beta, 6);
    assert_eq!(r.structure.xi, Some(1));
    assert!(!common::brute_colourable(&g));
}

#[test]
fn k4_row() {
    let g = k4();
    let r = assert_row(
        &g,
        &Row {
            pms: 3,
            omega: 0,
            weak: 0,
            rho: 0,
            pmi: 3,
            gamma2: 0,
            mu3: 0,
            girth: 3,
            zeta: 3,
            circumference: 4,
            aut: 24,
            diameter: 1,
            radius: 1,
        },
    );
    assert_eq!(r.structure.beta, 3);
    assert_eq!(canonical_form(&g).graph6, "C~");
    assert!(common::brute_colourable(&g));
}

#[test]
fn k33_row() {
    let g = k33();
    assert_row(
        &g,
        &Row {
            pms: 6,
            omega: 0,
            weak: 0,
            rho: 0,
            pmi: 3,
            gamma2: 0,
            mu3: 0,
            girth: 4,
            zeta: 4,
            circumference: 6,
            aut: 72,
            diameter: 2,
            radius: 2,
        },
    );
}

#[test]
fn prism_row() {
    let g = CubicGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap();
    assert_row(
        &g,
        &Row {
            pms: 4,
            omega: 0,
            weak: 0,
            rho: 0,
            pmi: 3,
            gamma2: 0,
            mu3: 0,
            girth: 3,
            zeta: 3,
            circumference: 6,
            aut: 12,
            diameter: 2,
            radius: 2,
        },
    );
}

#[test]
fn blanusa_pair() {
    let b1 = blanusa1();
    let b2 = blanusa2();
    for b in [&b1, &b2] {
        assert_eq!(b.n(), 18);
        assert!(!common::brute_colourable(b));
        assert_eq!(snark_core::girth(b), 5);
    }
    assert!(!are_isomorphic(&b1, &b2));
    assert_eq!(canonical_form(&b1).aut_order, 8);
    assert_eq!(canonical_form(&b2).aut_order, 4);
}

/// Deleting edges one by one (then two by two) from the chained dipoles
/// locates their resistance exhaustively: 1 for the first, third and
/// fourth, 2 for the second.
#[test]
fn dipole_resistance_by_exhaustion() {
    for (i, want) in [(1u32, 1u32), (2, 2), (3, 1), (4, 1)] {
        let d = dipole_z(i).unwrap();
        assert!(matches!(colour_multipole(&d, None), ColourDecision::Uncolourable));
        let m = d.edge_view().len();
        let single = (0..m)
            .any(|e| matches!(colour_multipole_minus(&d, &[], &[e], None), ColourDecision::Colourable(_)));
        match want {
            1 => assert!(single, "dipole {i} should open after one deletion"),
            _ => {
                assert!(!single, "dipole {i} opened after one deletion");
                let pair = (0..m).any(|e| {
                    (e + 1..m).any(|f| {
                        matches!(
                            colour_multipole_minus(&d, &[], &[e, f], None),
                            ColourDecision::Colourable(_)
                        )
                    })
                });
                assert!(pair, "dipole {i} should open after two deletions");
            }
        }
    }
}

#[test]
fn dipole_shapes() {
    let sizes = [(1u32, 18, vec![2, 2]), (2, 26, vec![2, 2]), (3, 17, vec![2, 2, 1]), (4, 17, vec![2, 3])];
    for (i, nv, connectors) in sizes {
        let d = dipole_z(i).unwrap();
        assert_eq!(d.vertex_count(), nv, "dipole {i} order");
        assert_eq!(d.connector_sizes(), connectors, "dipole {i} connectors");
        assert_eq!(d.free_loops(), 0);
    }
}
