//! Exhaustive checking of the structural theorems over a catalog of graphs.
//!
//! Every entry is checked independently (in parallel) and the outcomes are
//! folded in catalog order, so the first counterexample reported for a
//! property does not depend on scheduling.

use serde::Serialize;

use rayon::prelude::*;

use crate::classify::{
    ladder_classify, ClassificationReport, LadderBand, LadderPosition, BOUNDARY_BAND,
};
use crate::clique::{
    clique_graph, lift_shortest_path, project_clique_path, shortest_path, CliqueGraph,
};
use crate::enumerate::{canonical_graph6, enumerate_connected};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph, IsometryCheck, VertexSet};
use crate::qec::{
    distance_spectrum, qec_numeric, qec_path_closed_form, stationarity_residual, QecMethod,
    SANDWICH_TOLERANCE,
};

/// Depth of the ladder used when building catalogs.
pub const CATALOG_D_MAX: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    /// Canonical graph6 string.
    pub graph6: String,
    pub n: usize,
    /// Absent for the single-vertex graph, which has no QEC.
    pub report: Option<ClassificationReport>,
    #[serde(skip)]
    pub graph: Graph,
}

impl CatalogEntry {
    pub fn new(graph: Graph) -> Result<Self> {
        let report = if graph.n() >= 2 {
            Some(ladder_classify(&graph, CATALOG_D_MAX)?)
        } else {
            None
        };
        Ok(CatalogEntry {
            graph6: canonical_graph6(&graph)?,
            n: graph.n(),
            report,
            graph,
        })
    }
}

/// Every connected graph on `1..=max_n` vertices, by order then graph6.
pub fn build_catalog(max_n: usize) -> Result<Vec<CatalogEntry>> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_connected(n)?);
    }
    graphs.into_par_iter().map(CatalogEntry::new).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    DistanceMetric,
    CliqueSet,
    CliqueGraphConnected,
    DiameterLowerBound,
    TreeDiameterEquality,
    LiftShortestPath,
    ProjectCliquePath,
    SmallDiameterIsometric,
    QecRange,
    Sandwich,
    TransmissionRegularEquality,
    CompleteIffMinusOne,
    WitnessStationarity,
    IsometricMonotonicity,
    ClosedFormAgreement,
    ReportMatchesRecomputation,
    CactusTheorem,
    ForbiddenPatternBound,
    LadderDiameterBound,
    LadderBandConsistency,
    LadderPositionConsistency,
}

impl Property {
    pub const ALL: [Property; 21] = [
        Property::DistanceMetric,
        Property::CliqueSet,
        Property::CliqueGraphConnected,
        Property::DiameterLowerBound,
        Property::TreeDiameterEquality,
        Property::LiftShortestPath,
        Property::ProjectCliquePath,
        Property::SmallDiameterIsometric,
        Property::QecRange,
        Property::Sandwich,
        Property::TransmissionRegularEquality,
        Property::CompleteIffMinusOne,
        Property::WitnessStationarity,
        Property::IsometricMonotonicity,
        Property::ClosedFormAgreement,
        Property::ReportMatchesRecomputation,
        Property::CactusTheorem,
        Property::ForbiddenPatternBound,
        Property::LadderDiameterBound,
        Property::LadderBandConsistency,
        Property::LadderPositionConsistency,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyOutcome {
    pub property: Property,
    pub checked: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub graphs: usize,
    pub properties: Vec<PropertyOutcome>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }

    pub fn outcome(&self, property: Property) -> &PropertyOutcome {
        self.properties
            .iter()
            .find(|p| p.property == property)
            .expect("every property is listed")
    }
}

/// Runs every property over `entries` and counts failures.
pub fn verify_catalog(entries: &[CatalogEntry]) -> VerificationSummary {
    let results: Vec<Vec<(Property, bool)>> = entries.par_iter().map(check_entry).collect();
    let mut properties: Vec<PropertyOutcome> = Property::ALL
        .iter()
        .map(|&property| PropertyOutcome {
            property,
            checked: 0,
            failed: 0,
            first_counterexample: None,
        })
        .collect();
    for (entry, checks) in entries.iter().zip(results) {
        for (property, ok) in checks {
            let slot = &mut properties[property as usize];
            slot.checked += 1;
            if !ok {
                slot.failed += 1;
                slot.first_counterexample
                    .get_or_insert_with(|| entry.graph6.clone());
            }
        }
    }
    VerificationSummary {
        graphs: entries.len(),
        properties,
    }
}

/// Builds the catalog up to `max_n` and verifies it.
pub fn verify_up_to(max_n: usize) -> Result<VerificationSummary> {
    Ok(verify_catalog(&build_catalog(max_n)?))
}

fn check_entry(entry: &CatalogEntry) -> Vec<(Property, bool)> {
    let g = &entry.graph;
    let mut out = Vec::with_capacity(Property::ALL.len());
    let (Ok(d), Ok(cg)) = (g.distance_matrix(), clique_graph(g)) else {
        // catalog graphs are connected; anything else fails the basics
        out.push((Property::DistanceMetric, false));
        out.push((Property::CliqueGraphConnected, false));
        return out;
    };
    out.push((Property::DistanceMetric, is_metric(&d)));
    out.push((Property::CliqueSet, clique_set_ok(g, &cg)));
    out.push((Property::CliqueGraphConnected, cg.graph().is_connected()));
    let diam_g = d.max_entry() as usize;
    let diam_cg = cg.diameter();
    out.push((Property::DiameterLowerBound, diam_g <= diam_cg + 1));
    if cg.is_tree() && g.n() >= 2 {
        out.push((Property::TreeDiameterEquality, diam_g == diam_cg + 1));
    }
    out.push((Property::LiftShortestPath, lifts_ok(g, &d, &cg)));
    out.push((Property::ProjectCliquePath, projections_ok(&d, &cg)));
    out.push((
        Property::SmallDiameterIsometric,
        small_diameter_isometric(g),
    ));

    let Some(report) = &entry.report else {
        return out;
    };
    let (Ok(numeric), Ok(spectrum)) = (qec_numeric(&d), distance_spectrum(&d)) else {
        out.push((Property::QecRange, false));
        return out;
    };
    let q = numeric.value;
    let (delta1, delta2) = (spectrum.delta1(), spectrum.delta2());
    out.push((Property::QecRange, q >= -1.0 - 1e-10 && q < delta1));
    out.push((
        Property::Sandwich,
        delta2 - SANDWICH_TOLERANCE <= q && q < delta1,
    ));
    if spectrum.transmission_regular {
        out.push((
            Property::TransmissionRegularEquality,
            (delta2 - q).abs() <= SANDWICH_TOLERANCE,
        ));
    }
    out.push((
        Property::CompleteIffMinusOne,
        ((q + 1.0).abs() <= 1e-10) == g.is_clique(g.vertices()),
    ));
    out.push((
        Property::WitnessStationarity,
        witness_ok(&d, q, &numeric.witness),
    ));
    out.push((Property::IsometricMonotonicity, isometric_monotone(g, q)));
    if report.method != QecMethod::NumericEigen {
        out.push((
            Property::ClosedFormAgreement,
            (report.qec - q).abs() <= 1e-8,
        ));
    }
    out.push((
        Property::ReportMatchesRecomputation,
        (report.qec - q).abs() <= 1e-8
            && report.diameter == diam_g
            && report.gamma_diameter == diam_cg
            && report.gamma_is_tree == cg.is_tree()
            && report.clique_sizes == cg.cliques().sizes(),
    ));
    out.push((Property::CactusTheorem, report.is_consistent()));
    if report.has_claw || report.has_diamond {
        out.push((
            Property::ForbiddenPatternBound,
            report.qec >= -0.5 - SANDWICH_TOLERANCE,
        ));
    }
    out.push((
        Property::LadderDiameterBound,
        ladder_diameter_bound(report.qec, diam_g, diam_cg),
    ));
    out.push((
        Property::LadderBandConsistency,
        band_consistent(report.band, report.qec),
    ));
    out.push((
        Property::LadderPositionConsistency,
        position_consistent(report.ladder_position, report.qec),
    ));
    out
}

fn is_metric(d: &DistanceMatrix) -> bool {
    let n = d.n();
    (0..n).all(|x| {
        d.get(x, x) == 0
            && (0..n).all(|y| {
                d.get(x, y) == d.get(y, x)
                    && (x == y || d.get(x, y) > 0)
                    && (0..n).all(|z| d.get(x, z) <= d.get(x, y) + d.get(y, z))
            })
    })
}

fn clique_set_ok(g: &Graph, cg: &CliqueGraph) -> bool {
    let cliques = cg.cliques().as_slice();
    let union = cliques
        .iter()
        .fold(VertexSet::EMPTY, |acc, &c| acc.union(c));
    let sorted = cliques.windows(2).all(|w| w[0].to_vec() < w[1].to_vec());
    let maximal = cliques.iter().all(|&c| {
        g.is_clique(c)
            && g.vertices()
                .difference(c)
                .iter()
                .all(|v| !c.is_subset(g.neighbors(v)))
    });
    let edges_covered = g.edges().into_iter().all(|(u, v)| {
        let e: VertexSet = [u, v].into_iter().collect();
        cliques.iter().any(|&c| e.is_subset(c))
    });
    union == g.vertices() && sorted && maximal && edges_covered
}

fn lifts_ok(g: &Graph, d: &DistanceMatrix, cg: &CliqueGraph) -> bool {
    let n = g.n();
    (0..n).all(|x| {
        (x + 1..n).all(|y| {
            let Ok(path) = shortest_path(g, d, x, y) else {
                return false;
            };
            let Ok(lift) = lift_shortest_path(g, cg, &path) else {
                return false;
            };
            let len = path.len() - 1;
            let distinct =
                lift.iter().collect::<std::collections::BTreeSet<_>>().len() == lift.len();
            lift.len() == len
                && distinct
                && cg.distance(lift[0], lift[len - 1]) == len - 1
                && lift.windows(2).all(|w| cg.graph().adjacent(w[0], w[1]))
        })
    })
}

fn projections_ok(d: &DistanceMatrix, cg: &CliqueGraph) -> bool {
    let k = cg.order();
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let Ok(path) = shortest_path(cg.graph(), cg.distance_matrix(), i, j) else {
                return false;
            };
            let Ok(xs) = project_clique_path(cg, &path) else {
                return false;
            };
            let len = path.len() - 1;
            xs.len() == len
                && d.get(xs[0], xs[len - 1]) as usize == len - 1
                && xs.windows(2).all(|w| d.get(w[0], w[1]) == 1)
        })
    })
}

/// Connected induced subgraphs on at least two vertices, as vertex sets.
fn connected_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    (1u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(move |s| s.len() >= 2 && g.is_set_connected(*s))
}

fn small_diameter_isometric(g: &Graph) -> bool {
    connected_subsets(g).all(|s| match g.induced_subgraph(s).and_then(|h| h.diameter()) {
        Ok(diam) if diam <= 2 => matches!(g.isometry_check(s), Ok(IsometryCheck::Isometric)),
        Ok(_) => true,
        Err(_) => false,
    })
}

fn isometric_monotone(g: &Graph, q: f64) -> bool {
    connected_subsets(g)
        .filter(|&s| {
            s != g.vertices() && matches!(g.isometry_check(s), Ok(IsometryCheck::Isometric))
        })
        .all(|s| {
            let value = g
                .induced_subgraph(s)
                .and_then(|h| h.distance_matrix())
                .and_then(|dh| qec_numeric(&dh));
            match value {
                Ok(r) => r.value <= q + SANDWICH_TOLERANCE,
                Err(_) => false,
            }
        })
}

fn witness_ok(d: &DistanceMatrix, q: f64, f: &[f64]) -> bool {
    let norm: f64 = f.iter().map(|x| x * x).sum::<f64>().sqrt();
    let sum: f64 = f.iter().sum();
    (norm - 1.0).abs() <= 1e-9
        && sum.abs() <= 1e-9
        && stationarity_residual(d, q, f) <= 1e-6
        && (d.quadratic_form(f) - q).abs() <= 1e-9
}

fn threshold(d: usize) -> f64 {
    qec_path_closed_form(d).expect("d >= 2")
}

/// `QEC < QEC(P_d)` forces `diam(G) ≤ d - 2` and `diam(Γ(G)) ≤ d - 3`.
fn ladder_diameter_bound(q: f64, diam_g: usize, diam_cg: usize) -> bool {
    (3..=5).all(|d| q >= threshold(d) - BOUNDARY_BAND || (diam_g + 2 <= d && diam_cg + 3 <= d))
}

fn band_consistent(band: LadderBand, q: f64) -> bool {
    let (t3, t4, t5) = (threshold(3), threshold(4), threshold(5));
    let near = |t: f64| (q - t).abs() <= BOUNDARY_BAND;
    let above = |t: f64| q > t + BOUNDARY_BAND;
    let below = |t: f64| q < t - BOUNDARY_BAND;
    match band {
        LadderBand::Complete => near(-1.0),
        LadderBand::AtP3 => near(t3),
        LadderBand::BetweenP3P4 => above(t3) && below(t4),
        LadderBand::AtP4 => near(t4),
        LadderBand::BetweenP4P5 => above(t4) && below(t5),
        LadderBand::AboveP4Open => above(t4) && below(-0.5),
        LadderBand::AtLeastP5 => q >= t5 - BOUNDARY_BAND,
        LadderBand::AtLeastHalf => q >= -0.5 - BOUNDARY_BAND,
    }
}

fn position_consistent(position: LadderPosition, q: f64) -> bool {
    match position {
        LadderPosition::EqualsPath { d } | LadderPosition::Boundary { d } => {
            (q - threshold(d)).abs() <= BOUNDARY_BAND
        }
        LadderPosition::Between { lower, upper } => {
            upper == lower + 1 && q > threshold(lower) && q < threshold(upper)
        }
        LadderPosition::BeyondLadder { d_max } => q > threshold(d_max) && q < -0.5,
        LadderPosition::AtLeastHalf => q >= -0.5 - BOUNDARY_BAND,
    }
}

/// Catalog entry for a graph given by the caller, canonicalized.
pub fn entry_for(g: &Graph) -> Result<CatalogEntry> {
    CatalogEntry::new(g.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_two_clique;

    #[test]
    fn small_catalog_passes() {
        let catalog = build_catalog(5).unwrap();
        assert_eq!(catalog.len(), 1 + 1 + 2 + 6 + 21);
        let summary = verify_catalog(&catalog);
        assert!(summary.all_passed(), "{summary:#?}");
        assert!(summary.outcome(Property::CactusTheorem).checked == catalog.len() - 1);
    }

    #[test]
    fn injected_fault_is_reported() {
        let diamond = make_two_clique(2, 3, 3).unwrap();
        let mut entry = entry_for(&diamond).unwrap();
        let clean = verify_catalog(std::slice::from_ref(&entry));
        assert!(clean.all_passed());
        entry.report.as_mut().unwrap().below_half = true;
        let summary = verify_catalog(&[entry.clone()]);
        let outcome = summary.outcome(Property::CactusTheorem);
        assert_eq!(outcome.failed, 1);
        assert_eq!(
            outcome.first_counterexample.as_deref(),
            Some(entry.graph6.as_str())
        );
        assert!(!summary.all_passed());
    }

    #[test]
    fn outcome_order_is_catalog_order() {
        let catalog = build_catalog(4).unwrap();
        let mut broken = catalog.clone();
        for e in broken.iter_mut().filter(|e| e.n == 4) {
            e.report.as_mut().unwrap().qec = 5.0;
        }
        let summary = verify_catalog(&broken);
        let outcome = summary.outcome(Property::ReportMatchesRecomputation);
        assert_eq!(outcome.failed, 6);
        let first4 = catalog.iter().find(|e| e.n == 4).unwrap();
        assert_eq!(
            outcome.first_counterexample.as_deref(),
            Some(first4.graph6.as_str())
        );
    }
}
