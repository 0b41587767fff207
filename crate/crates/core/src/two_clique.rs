//! Closed forms for graphs with exactly two maximal cliques,
//! `K_m ∪_l K_n`, and the reduced Lagrange system behind them.
//!
//! Vertex labels follow [`make_two_clique`](crate::graph::make_two_clique):
//! `0..m-l` is the private part of the first clique, `m-l..m` the shared
//! part and `m..m+n-l` the private part of the second clique.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{make_two_clique, DistanceMatrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoCliqueParams {
    /// Size of the shared part.
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl TwoCliqueParams {
    pub fn new(l: usize, m: usize, n: usize) -> Result<Self> {
        if l < 1 || m <= l || n <= l {
            return Err(Error::InvalidParameter(format!(
                "two-clique parameters need l >= 1, m > l, n > l (got l={l}, m={m}, n={n})"
            )));
        }
        Ok(TwoCliqueParams { l, m, n })
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.n - self.l
    }

    pub fn graph(&self) -> Graph {
        make_two_clique(self.l, self.m, self.n).expect("validated parameters")
    }

    /// `mn(m-l)(n-l)`, exact.
    fn discriminant(&self) -> u128 {
        let (l, m, n) = (self.l as u128, self.m as u128, self.n as u128);
        m * n * (m - l) * (n - l)
    }

    fn block(&self, v: usize) -> Block {
        if v < self.m - self.l {
            Block::FirstPrivate
        } else if v < self.m {
            Block::Shared
        } else {
            Block::SecondPrivate
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    Shared,
    FirstPrivate,
    SecondPrivate,
}

/// `QEC(K_m ∪_l K_n) = -1 + (-(m-l)(n-l) + sqrt(mn(m-l)(n-l))) / (m+n-l)`.
pub fn qec_two_clique(p: TwoCliqueParams) -> f64 {
    let (l, m, n) = (p.l as f64, p.m as f64, p.n as f64);
    -1.0 + (-(m - l) * (n - l) + (p.discriminant() as f64).sqrt()) / (m + n - l)
}

/// The same constant in the shifted parameters `a = m - l`, `b = n - l`:
/// `-1 + l / (1 + sqrt((1 + l/a)(1 + l/b)))`.
pub fn qec_two_clique_shifted(p: TwoCliqueParams) -> f64 {
    let l = p.l as f64;
    let a = (p.m - p.l) as f64;
    let b = (p.n - p.l) as f64;
    -1.0 + l / (1.0 + ((1.0 + l / a) * (1.0 + l / b)).sqrt())
}

fn star_pair_params(m: usize, n: usize) -> Result<TwoCliqueParams> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star product K_m * K_n needs m, n >= 2 (got m={m}, n={n})"
        )));
    }
    TwoCliqueParams::new(1, m, n)
}

/// `QEC(K_m * K_n) = (-mn + sqrt(mn(m-1)(n-1))) / (m+n-1)`.
pub fn qec_star_product_pair(m: usize, n: usize) -> Result<f64> {
    let p = star_pair_params(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    Ok((-mf * nf + (p.discriminant() as f64).sqrt()) / (mf + nf - 1.0))
}

/// `QEC(K_m * K_n) = -1 / (1 + sqrt((1 - 1/m)(1 - 1/n)))`.
pub fn qec_star_product_pair_reciprocal(m: usize, n: usize) -> Result<f64> {
    star_pair_params(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    Ok(-1.0 / (1.0 + ((1.0 - 1.0 / mf) * (1.0 - 1.0 / nf)).sqrt()))
}

/// Which solution family of the reduced system a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StationaryBranch {
    /// Larger root of the quadratic in λ, with a non-singular 2x2 system.
    Plus,
    /// Smaller root, when the 2x2 system stays non-singular (`m != n`).
    Minus,
    /// Singular 2x2 system with `m = n`: `λ = -1 - (m - l)`, `ξ = μ = 0`.
    SingularEqualCliques,
}

/// Stationary point of the Lagrangian with `f` constant on each block:
/// `xi` on the shared part, `eta` on the first private part, `zeta` on the
/// second.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StationaryPoint {
    pub xi: f64,
    pub eta: f64,
    pub zeta: f64,
    pub lambda: f64,
    pub mu: f64,
    /// `(λ+1)^2 - (m-l)(n-l)`.
    pub delta: f64,
    pub branch: StationaryBranch,
}

impl StationaryPoint {
    /// Only points with `λ > -1` can carry the QEC of a non-complete graph.
    pub fn is_candidate(&self) -> bool {
        self.lambda > -1.0
    }

    /// `l ξ + (m-l) η + (n-l) ζ`.
    pub fn sum_constraint(&self, p: TwoCliqueParams) -> f64 {
        let (l, a, b) = shifted(p);
        l * self.xi + a * self.eta + b * self.zeta
    }

    /// `l ξ² + (m-l) η² + (n-l) ζ² - 1`.
    pub fn norm_constraint(&self, p: TwoCliqueParams) -> f64 {
        let (l, a, b) = shifted(p);
        l * self.xi * self.xi + a * self.eta * self.eta + b * self.zeta * self.zeta - 1.0
    }

    /// The full vector `f` on the vertices of `make_two_clique(l, m, n)`.
    pub fn witness(&self, p: TwoCliqueParams) -> Vec<f64> {
        (0..p.vertex_count())
            .map(|v| match p.block(v) {
                Block::Shared => self.xi,
                Block::FirstPrivate => self.eta,
                Block::SecondPrivate => self.zeta,
            })
            .collect()
    }
}

fn shifted(p: TwoCliqueParams) -> (f64, f64, f64) {
    (p.l as f64, (p.m - p.l) as f64, (p.n - p.l) as f64)
}

/// Solves the block-constant stationarity system.
///
/// With `a = m - l`, `b = n - l`, `ν = -μ/2` and `Δ = (λ+1)^2 - ab`, a
/// non-singular 2x2 system gives `ξ = ν/(λ+1)`, `η = ν(λ+1+b)/Δ` and
/// `ζ = ν(λ+1+a)/Δ`; the sum constraint then reduces to
/// `lΔ + (λ+1)(a(λ+1+b) + b(λ+1+a)) = 0`, whose roots are
/// `λ± = -1 + (-ab ± sqrt(mnab)) / (m+n-l)`. `ν` is fixed (positive) by the
/// norm constraint. When `m = n` the smaller root makes `Δ` vanish and is
/// replaced by the singular solution `ξ = 0`, `η = -ζ`.
///
/// Points are returned in descending `λ`.
pub fn appendix_stationary_solve(p: TwoCliqueParams) -> Vec<StationaryPoint> {
    let (l, a, b) = shifted(p);
    let root = (p.discriminant() as f64).sqrt();
    let denom = p.vertex_count() as f64;
    let ab = (p.m - p.l) as f64 * (p.n - p.l) as f64;

    let regular = |lambda: f64, branch| {
        let s = lambda + 1.0;
        let delta = s * s - ab;
        let (xi0, eta0, zeta0) = (1.0 / s, (s + b) / delta, (s + a) / delta);
        let norm = (l * xi0 * xi0 + a * eta0 * eta0 + b * zeta0 * zeta0).sqrt();
        let nu = 1.0 / norm;
        StationaryPoint {
            xi: nu * xi0,
            eta: nu * eta0,
            zeta: nu * zeta0,
            lambda,
            mu: -2.0 * nu,
            delta,
            branch,
        }
    };

    let plus = -1.0 + (-ab + root) / denom;
    let mut points = vec![regular(plus, StationaryBranch::Plus)];
    if p.m != p.n {
        let minus = -1.0 + (-ab - root) / denom;
        points.push(regular(minus, StationaryBranch::Minus));
    } else {
        let eta = 1.0 / (2.0 * a).sqrt();
        points.push(StationaryPoint {
            xi: 0.0,
            eta,
            zeta: -eta,
            lambda: -1.0 - a,
            mu: 0.0,
            delta: 0.0,
            branch: StationaryBranch::SingularEqualCliques,
        });
    }
    points
}

/// Distance matrix of `K_m ∪_l K_n` assembled from its block structure:
/// `J - I` inside each block, `J` between the shared part and either
/// private part, `2J` between the two private parts.
pub fn two_clique_distance_blocks(p: TwoCliqueParams) -> DistanceMatrix {
    let total = p.vertex_count();
    let mut d = Vec::with_capacity(total * total);
    for x in 0..total {
        for y in 0..total {
            let v = match (p.block(x), p.block(y)) {
                _ if x == y => 0,
                (Block::FirstPrivate, Block::SecondPrivate)
                | (Block::SecondPrivate, Block::FirstPrivate) => 2,
                _ => 1,
            };
            d.push(v);
        }
    }
    DistanceMatrix::from_raw(total, d)
}
