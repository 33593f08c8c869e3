//! Combined invariant reports with stable JSON field names.  A `None`
//! value always means the computation gave up (budget or cap), never
//! that the invariant is zero.

use serde::Serialize;

use crate::canonical::canonical_form;
use crate::connectivity::{circumference, cycle_rank, cyclic_connectivity, diameter_radius, girth};
use crate::error::Result;
use crate::graph::{CubicGraph, EdgeSet};
use crate::matching::{
    oddness_with_floor, pair_intersection, perfect_matchings, pm_index, resistance,
    triple_intersection, weak_oddness, WeakMode,
};

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub girth: u32,
    pub beta: u32,
    pub zeta: Option<u32>,
    pub circumference: Option<u32>,
    /// Circumference deficit: order minus longest-cycle length.
    pub xi: Option<u32>,
    pub diameter: u32,
    pub radius: u32,
    pub aut: u64,
    pub canonical: String,
}

pub fn structure_report(g: &CubicGraph, budget: Option<u64>, seed: u64) -> Result<StructureReport> {
    let (diameter, radius) = diameter_radius(g)?;
    let circ = circumference(g, budget, seed).map(|c| c.0);
    let canon = canonical_form(g);
    Ok(StructureReport {
        girth: girth(g),
        beta: cycle_rank(g),
        zeta: cyclic_connectivity(g, budget).map(|z| z.value),
        circumference: circ,
        xi: circ.map(|c| g.n() as u32 - c),
        diameter,
        radius,
        aut: canon.aut_order,
        canonical: canon.graph6,
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MeasureWitnesses {
    /// Edges of a 2-factor attaining the oddness.
    pub two_factor: Option<Vec<usize>>,
    /// Edges of an even factor attaining the weak oddness.
    pub even_factor: Option<Vec<usize>>,
    /// A smallest edge set whose removal admits a colouring.
    pub removal: Option<Vec<usize>>,
    /// Perfect matchings (edge lists) covering every edge.
    pub pm_cover: Option<Vec<Vec<usize>>>,
    /// Indices into the enumerated matchings attaining gamma2.
    pub pair: Option<(usize, usize)>,
    pub triple: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ModeFlags {
    /// Floor the 2-factor scan was allowed to stop at.
    pub omega_floor: u32,
    /// How the weak oddness was settled: "direct" or "pinned".
    pub weak_mode: Option<&'static str>,
}

/// One flag per measure; set when the value is missing because the
/// search ran out of budget or hit a cap.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BudgetFlags {
    pub omega: bool,
    pub weak_oddness: bool,
    pub resistance: bool,
    pub pmi: bool,
    pub gamma2: bool,
    pub mu3: bool,
}

impl BudgetFlags {
    /// True when any measure is missing because a budget or cap ran out.
    pub fn any(&self) -> bool {
        self.omega || self.weak_oddness || self.resistance || self.pmi || self.gamma2 || self.mu3
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasureReport {
    pub omega: Option<u32>,
    pub weak_oddness: Option<u32>,
    pub resistance: Option<u32>,
    pub pmi: Option<u32>,
    pub gamma2: Option<u32>,
    pub mu3: Option<u32>,
    pub witnesses: MeasureWitnesses,
    pub mode_flags: ModeFlags,
    pub budget_flags: BudgetFlags,
}

pub fn measure_report(g: &CubicGraph, budget: Option<u64>) -> Result<MeasureReport> {
    let mut wit = MeasureWitnesses::default();
    let mut modes = ModeFlags::default();
    let full = EdgeSet::full(g.m());

    let rho = resistance(g, budget)?;
    if let Some((_, edges)) = &rho {
        wit.removal = Some(edges.clone());
    }
    let rho = rho.map(|r| r.0);

    // ρ ≤ ω and ω even make the rounded-up resistance a sound floor
    let floor = rho.map_or(2, |r| r + (r & 1));
    modes.omega_floor = floor;
    let omega = oddness_with_floor(g, floor, budget)?;
    if let Some((_, pm)) = &omega {
        wit.two_factor = Some(full.difference(pm).iter().collect());
    }
    let omega = omega.map(|o| o.0);

    let weak = match (rho, omega) {
        (Some(r), Some(o)) if r + (r & 1) == o => {
            modes.weak_mode = Some("pinned");
            wit.even_factor = wit.two_factor.clone();
            Some(o)
        }
        _ => weak_oddness(g, budget)?.map(|w| {
            modes.weak_mode = Some(match w.mode {
                WeakMode::Direct => "direct",
                WeakMode::Pinned => "pinned",
            });
            wit.even_factor = Some(w.factor.iter().collect());
            w.value
        }),
    };

    let pms = perfect_matchings(g)?;
    let pmi = pm_index(g, &pms, budget)?;
    if let Some((_, cover)) = &pmi {
        wit.pm_cover = Some(cover.iter().map(|pm| pm.iter().collect()).collect());
    }
    let pmi = pmi.map(|p| p.0);

    let gamma_lower = omega.map_or(0, |o| o / 2);
    let gamma2 = pair_intersection(&pms, gamma_lower, budget)?;
    if let Some((_, pair)) = gamma2 {
        wit.pair = Some(pair);
    }
    let gamma2 = gamma2.map(|p| p.0);

    let mu_lower = omega.map_or(0, |o| (3 * o).div_ceil(2)).max(gamma2.map_or(0, |p| 3 * p));
    let mu3 = triple_intersection(&pms, mu_lower, gamma2.unwrap_or(0), budget)?;
    if let Some((_, triple)) = mu3 {
        wit.triple = Some(triple);
    }
    let mu3 = mu3.map(|t| t.0);

    Ok(MeasureReport {
        omega,
        weak_oddness: weak,
        resistance: rho,
        pmi,
        gamma2,
        mu3,
        budget_flags: BudgetFlags {
            omega: omega.is_none(),
            weak_oddness: weak.is_none(),
            resistance: rho.is_none(),
            pmi: pmi.is_none(),
            gamma2: gamma2.is_none(),
            mu3: mu3.is_none(),
        },
        witnesses: wit,
        mode_flags: modes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub structure: StructureReport,
    pub measures: MeasureReport,
}

pub fn invariant_report(g: &CubicGraph, budget: Option<u64>, seed: u64) -> Result<InvariantReport> {
    Ok(InvariantReport {
        n: g.n(),
        m: g.m(),
        graph6: g.to_graph6(),
        structure: structure_report(g, budget, seed)?,
        measures: measure_report(g, budget)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{k4, petersen};

    #[test]
    fn petersen_report() {
        let r = invariant_report(&petersen(), None, 0).unwrap();
        assert_eq!((r.n, r.m), (10, 15));
        let s = &r.structure;
        assert_eq!(
            (s.girth, s.beta, s.zeta, s.circumference, s.xi),
            (5, 6, Some(5), Some(9), Some(1))
        );
        assert_eq!((s.diameter, s.radius, s.aut), (2, 2, 120));
        let m = &r.measures;
        assert_eq!(m.omega, Some(2));
        assert_eq!(m.weak_oddness, Some(2));
        assert_eq!(m.resistance, Some(2));
        assert_eq!(m.pmi, Some(5));
        assert_eq!(m.gamma2, Some(1));
        assert_eq!(m.mu3, Some(3));
        assert_eq!(m.mode_flags.weak_mode, Some("pinned"));
        assert!(m.witnesses.two_factor.as_ref().is_some_and(|f| f.len() == 10));
        assert!(!m.budget_flags.omega);
    }

    #[test]
    fn colourable_report_is_all_zero() {
        let r = measure_report(&k4(), None).unwrap();
        assert_eq!(r.omega, Some(0));
        assert_eq!(r.weak_oddness, Some(0));
        assert_eq!(r.resistance, Some(0));
        assert_eq!(r.pmi, Some(3));
        assert_eq!(r.gamma2, Some(0));
        assert_eq!(r.mu3, Some(0));
        assert_eq!(r.witnesses.pm_cover.as_ref().map(|c| c.len()), Some(3));
    }

    #[test]
    fn budget_shows_up_in_flags() {
        let r = measure_report(&petersen(), Some(1)).unwrap();
        assert_eq!(r.resistance, None);
        assert!(r.budget_flags.resistance);
    }
}
