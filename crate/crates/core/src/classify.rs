//! Structural classification of graphs by their quadratic embedding
//! constant.
//!
//! A graph with `QEC < -1/2` has no induced claw or diamond, its clique
//! graph is a tree, adjacent maximal cliques share exactly one vertex and no
//! three maximal cliques share a vertex. Below that the constants of the
//! paths `P_2, P_3, ..` form a ladder of thresholds, and the low rungs are
//! populated by a few explicit families.

use serde::Serialize;

use crate::clique::{clique_graph, CliqueGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::qec::{qec_numeric, qec_path_closed_form, QecMethod, QecResult};
use crate::two_clique::{appendix_stationary_solve, qec_two_clique, TwoCliqueParams};

/// Half-width of the band around a threshold inside which a value is
/// treated as equal to it.
pub const BOUNDARY_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// `K_{1,3}`.
    Claw,
    /// `K_4` minus an edge.
    Diamond,
}

/// True when some four vertices induce `pattern`.
pub fn has_induced(g: &Graph, pattern: Pattern) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let s: VertexSet = quad.into_iter().collect();
                    let degrees = quad.map(|v| g.neighbors(v).intersection(s).len());
                    let edges: usize = degrees.iter().sum::<usize>() / 2;
                    let hit = match pattern {
                        Pattern::Claw => edges == 3 && degrees.contains(&3),
                        Pattern::Diamond => edges == 5,
                    };
                    if hit {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// The three clique-structure conditions forced by `QEC < -1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CactusCheck {
    /// `Γ(G)` is a tree.
    pub tree: bool,
    /// Every two distinct maximal cliques share at most one vertex.
    pub pairwise_ok: bool,
    /// No three distinct maximal cliques share a vertex.
    pub triple_ok: bool,
}

impl CactusCheck {
    pub fn is_cactus_like(&self) -> bool {
        self.tree && self.pairwise_ok && self.triple_ok
    }
}

fn cactus_of(cg: &CliqueGraph) -> CactusCheck {
    let cliques = cg.cliques().as_slice();
    let k = cliques.len();
    let mut pairwise_ok = true;
    let mut triple_ok = true;
    for i in 0..k {
        for j in i + 1..k {
            let ij = cliques[i].intersection(cliques[j]);
            pairwise_ok &= ij.len() <= 1;
            for &c in &cliques[j + 1..] {
                triple_ok &= ij.intersection(c).is_empty();
            }
        }
    }
    CactusCheck {
        tree: cg.is_tree(),
        pairwise_ok,
        triple_ok,
    }
}

pub fn cactus_check(g: &Graph) -> Result<CactusCheck> {
    Ok(cactus_of(&clique_graph(g)?))
}

/// Structural family read off the clique census and the shape of `Γ(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    /// `K_n`, one maximal clique.
    Complete {
        n: usize,
    },
    /// `K_m * K_n` with `m ≥ n ≥ 2`: two maximal cliques sharing one vertex.
    TwoCliqueStar {
        m: usize,
        n: usize,
    },
    /// `K_n * (K_{m_1}, .., K_{m_s})` with `s ≥ 2` and `m_1 ≥ .. ≥ m_s`:
    /// `Γ(G)` is the star `K_{1,s}` and the leaf cliques hang off distinct
    /// hub vertices.
    StarProductMulti {
        n: usize,
        parts: Vec<usize>,
    },
    Other,
}

fn family_of(cg: &CliqueGraph, cactus: CactusCheck) -> Family {
    let cliques = cg.cliques().as_slice();
    match cliques.len() {
        1 => Family::Complete {
            n: cliques[0].len(),
        },
        2 if cactus.pairwise_ok => {
            let (a, b) = (cliques[0].len(), cliques[1].len());
            Family::TwoCliqueStar {
                m: a.max(b),
                n: a.min(b),
            }
        }
        k if k >= 3 && cactus.is_cactus_like() => {
            let gamma = cg.graph();
            match (0..k).find(|&c| gamma.degree(c) == k - 1) {
                Some(hub) if cg.diameter() == 2 => {
                    let mut parts: Vec<usize> = (0..k)
                        .filter(|&c| c != hub)
                        .map(|c| cliques[c].len())
                        .collect();
                    parts.sort_unstable_by(|x, y| y.cmp(x));
                    Family::StarProductMulti {
                        n: cliques[hub].len(),
                        parts,
                    }
                }
                _ => Family::Other,
            }
        }
        _ => Family::Other,
    }
}

/// Where the structure alone places a graph on the ladder, using the
/// known families and their closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LadderBand {
    /// `QEC = QEC(P_2) = -1`: complete graphs.
    Complete,
    /// `QEC = QEC(P_3)`: only `P_3 = K_2 * K_2`.
    AtP3,
    /// `QEC(P_3) < QEC < QEC(P_4)`: `K_m * K_2` (m ≥ 3) and `K_3 * K_3`.
    BetweenP3P4,
    /// `QEC = QEC(P_4)`: `K_4 * K_3` and `K_n * (K_2, .., K_2)`.
    AtP4,
    /// `QEC(P_4) < QEC < QEC(P_5)` with two maximal cliques.
    BetweenP4P5,
    /// Star products over a hub with some part of size ≥ 3: above
    /// `QEC(P_4)`, comparison with `QEC(P_5)` not settled.
    AboveP4Open,
    /// `QEC(P_5) ≤ QEC`, by the two-clique formula or because `Γ(G)` has
    /// diameter at least 3.
    AtLeastP5,
    /// Not cactus-like, so `QEC ≥ -1/2`.
    AtLeastHalf,
}

fn band_of(family: &Family, cactus: CactusCheck) -> LadderBand {
    if !cactus.is_cactus_like() {
        return LadderBand::AtLeastHalf;
    }
    match *family {
        Family::Complete { .. } => LadderBand::Complete,
        Family::TwoCliqueStar { m, n } => match (m, n) {
            (2, 2) => LadderBand::AtP3,
            (_, 2) | (3, 3) => LadderBand::BetweenP3P4,
            (4, 3) => LadderBand::AtP4,
            (5..=54, 3) | (4..=7, 4) | (5, 5) => LadderBand::BetweenP4P5,
            _ => LadderBand::AtLeastP5,
        },
        Family::StarProductMulti { ref parts, .. } => {
            if parts.iter().all(|&m| m == 2) {
                LadderBand::AtP4
            } else {
                LadderBand::AboveP4Open
            }
        }
        Family::Other => LadderBand::AtLeastP5,
    }
}

fn band_level(band: LadderBand) -> Option<usize> {
    match band {
        LadderBand::Complete => Some(2),
        LadderBand::AtP3 => Some(3),
        LadderBand::AtP4 => Some(4),
        _ => None,
    }
}

/// Number of vertices when `g` is a path, else `None`.
fn path_order(g: &Graph) -> Option<usize> {
    let n = g.n();
    let is_path =
        n >= 2 && g.edge_count() == n - 1 && (0..n).all(|v| g.degree(v) <= 2) && g.is_connected();
    is_path.then_some(n)
}

/// Parameters of `g` as `K_m ∪_l K_n` when it has exactly two maximal
/// cliques, with `m` the size of the first canonical clique.
fn two_clique_params(cg: &CliqueGraph) -> Option<(TwoCliqueParams, VertexSet, VertexSet)> {
    let cliques = cg.cliques().as_slice();
    if cliques.len() != 2 {
        return None;
    }
    let (h1, h2) = (cliques[0], cliques[1]);
    let l = h1.intersection(h2).len();
    TwoCliqueParams::new(l, h1.len(), h2.len())
        .ok()
        .map(|p| (p, h1, h2))
}

fn qec_with(g: &Graph, cg: &CliqueGraph) -> Result<QecResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if cg.cliques().len() == 1 {
        let mut witness = vec![0.0; n];
        witness[0] = std::f64::consts::FRAC_1_SQRT_2;
        witness[1] = -std::f64::consts::FRAC_1_SQRT_2;
        return Ok(QecResult::new(-1.0, witness, QecMethod::ClosedFormComplete));
    }
    if let Some((params, h1, h2)) = two_clique_params(cg) {
        let point = appendix_stationary_solve(params)[0];
        let witness = (0..n)
            .map(|v| match (h1.contains(v), h2.contains(v)) {
                (true, true) => point.xi,
                (true, false) => point.eta,
                _ => point.zeta,
            })
            .collect();
        return Ok(QecResult::new(
            qec_two_clique(params),
            witness,
            QecMethod::ClosedFormTwoClique,
        ));
    }
    let numeric = qec_numeric(&g.distance_matrix()?)?;
    if let Some(d) = path_order(g) {
        return Ok(QecResult::new(
            qec_path_closed_form(d)?,
            numeric.witness,
            QecMethod::ClosedFormPath,
        ));
    }
    Ok(numeric)
}

/// QEC using a closed form when `g` is complete, a path or has exactly
/// two maximal cliques, and the eigensolver otherwise.
pub fn qec_auto(g: &Graph) -> Result<QecResult> {
    qec_with(g, &clique_graph(g)?)
}

/// Position of a value relative to the thresholds `QEC(P_2) .. QEC(P_dmax)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LadderPosition {
    /// Within the boundary band of `QEC(P_d)`, and the structure certifies
    /// that level exactly.
    EqualsPath { d: usize },
    /// Strictly between `QEC(P_lower)` and `QEC(P_upper)`, `upper = lower + 1`.
    Between { lower: usize, upper: usize },
    /// Strictly between `QEC(P_dmax)` and `-1/2`.
    BeyondLadder { d_max: usize },
    /// `QEC ≥ -1/2` (up to the band).
    AtLeastHalf,
    /// Within the boundary band of `QEC(P_d)` without a structural
    /// certificate of equality.
    Boundary { d: usize },
}

impl LadderPosition {
    /// The threshold `d` when the value sits on `QEC(P_d)`, certified or not.
    pub fn level(&self) -> Option<usize> {
        match *self {
            LadderPosition::EqualsPath { d } | LadderPosition::Boundary { d } => Some(d),
            _ => None,
        }
    }
}

/// Places `value` on the ladder. `certified` names the level the graph is
/// known to sit on exactly, if any.
pub fn ladder_position(
    value: f64,
    d_max: usize,
    certified: Option<usize>,
) -> Result<LadderPosition> {
    if d_max < 3 {
        return Err(Error::InvalidParameter(format!(
            "ladder needs d_max >= 3, got {d_max}"
        )));
    }
    if value >= -0.5 - BOUNDARY_BAND {
        return Ok(LadderPosition::AtLeastHalf);
    }
    let thresholds: Vec<(usize, f64)> = (2..=d_max)
        .map(|d| qec_path_closed_form(d).map(|t| (d, t)))
        .collect::<Result<_>>()?;
    if let Some(&(d, _)) = thresholds
        .iter()
        .find(|(_, t)| (value - t).abs() <= BOUNDARY_BAND)
    {
        return Ok(if certified == Some(d) {
            LadderPosition::EqualsPath { d }
        } else {
            LadderPosition::Boundary { d }
        });
    }
    Ok(match thresholds.iter().rev().find(|(_, t)| *t < value) {
        Some(&(d, _)) if d == d_max => LadderPosition::BeyondLadder { d_max },
        Some(&(d, _)) => LadderPosition::Between {
            lower: d,
            upper: d + 1,
        },
        // below QEC(P_2) - band: impossible for a QEC, report the nearest rung
        None => LadderPosition::Boundary { d: 2 },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub qec: f64,
    pub method: QecMethod,
    /// `QEC < -1/2 - 1e-9`.
    pub below_half: bool,
    pub ladder_position: LadderPosition,
    pub gamma_is_tree: bool,
    pub pairwise_ok: bool,
    pub triple_ok: bool,
    pub has_claw: bool,
    pub has_diamond: bool,
    pub family: Family,
    pub band: LadderBand,
    /// The family is a multi-part star product above `QEC(P_4)` whose
    /// comparison with `QEC(P_5)` has no known characterization.
    pub classification_open: bool,
    pub clique_sizes: Vec<usize>,
    pub diameter: usize,
    pub gamma_diameter: usize,
}

impl ClassificationReport {
    /// `below_half` implies the cactus conditions and both forbidden
    /// patterns absent.
    pub fn is_consistent(&self) -> bool {
        !self.below_half
            || (self.gamma_is_tree
                && self.pairwise_ok
                && self.triple_ok
                && !self.has_claw
                && !self.has_diamond)
    }
}

/// Classifies a connected graph on at least two vertices against the
/// ladder `QEC(P_2) < .. < QEC(P_dmax)`.
pub fn ladder_classify(g: &Graph, d_max: usize) -> Result<ClassificationReport> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices(g.n()));
    }
    let cg = clique_graph(g)?;
    let cactus = cactus_of(&cg);
    let family = family_of(&cg, cactus);
    let band = band_of(&family, cactus);
    let result = qec_with(g, &cg)?;
    let certified = band_level(band).or_else(|| path_order(g).filter(|&d| d <= d_max));
    let ladder_position = ladder_position(result.value, d_max, certified)?;
    Ok(ClassificationReport {
        qec: result.value,
        method: result.method,
        below_half: result.value < -0.5 - BOUNDARY_BAND,
        ladder_position,
        gamma_is_tree: cactus.tree,
        pairwise_ok: cactus.pairwise_ok,
        triple_ok: cactus.triple_ok,
        has_claw: has_induced(g, Pattern::Claw),
        has_diamond: has_induced(g, Pattern::Diamond),
        classification_open: band == LadderBand::AboveP4Open,
        family,
        band,
        clique_sizes: cg.cliques().sizes(),
        diameter: g.diameter()?,
        gamma_diameter: cg.diameter(),
    })
}
