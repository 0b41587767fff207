//! Quadratic embedding constants.
//!
//! `QEC(G)` is the maximum of `<f, D f>` over unit vectors `f` with
//! `<1, f> = 0`, where `D` is the distance matrix of `G`. Numerically it is
//! the top eigenvalue of `Q^T D Q` for an orthonormal basis `Q` of the
//! mean-zero hyperplane.

use std::f64::consts::PI;

use serde::Serialize;

use crate::eigen::{symmetric_eigen, Matrix};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// How a [`QecResult`] value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QecMethod {
    NumericEigen,
    ClosedFormPath,
    ClosedFormComplete,
    ClosedFormTwoClique,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QecResult {
    pub value: f64,
    /// Unit, mean-zero vector attaining `value`.
    pub witness: Vec<f64>,
    pub method: QecMethod,
    /// `sqrt((<f,f> - 1)^2 + <1,f>^2)` for the witness `f`.
    pub residual: f64,
}

impl QecResult {
    pub(crate) fn new(value: f64, witness: Vec<f64>, method: QecMethod) -> Self {
        let residual = constraint_residual(&witness);
        QecResult {
            value,
            witness,
            method,
            residual,
        }
    }
}

fn constraint_residual(f: &[f64]) -> f64 {
    let norm2: f64 = f.iter().map(|x| x * x).sum();
    let sum: f64 = f.iter().sum();
    ((norm2 - 1.0).powi(2) + sum * sum).sqrt()
}

/// Helmert basis of `{f : <1, f> = 0}` as an `n x (n-1)` matrix. Column
/// `k-1` has `1/sqrt(k(k+1))` in its first `k` rows and `-k/sqrt(k(k+1))`
/// in row `k`.
pub fn helmert_basis(n: usize) -> Matrix {
    let mut q = Matrix::zeros(n, n.saturating_sub(1));
    for k in 1..n {
        let norm = ((k * (k + 1)) as f64).sqrt();
        for r in 0..k {
            q[(r, k - 1)] = 1.0 / norm;
        }
        q[(k, k - 1)] = -(k as f64) / norm;
    }
    q
}

/// QEC from the distance matrix by compression to the mean-zero subspace.
pub fn qec_numeric(d: &DistanceMatrix) -> Result<QecResult> {
    let n = d.n();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let q = helmert_basis(n);
    let dm = Matrix::from_row_major(n, n, d.to_f64())?;
    let b = q.transpose().matmul(&dm)?.matmul(&q)?;
    let eig = symmetric_eigen(&b)?;
    let witness = q.mul_vec(&eig.vectors.column(0));
    Ok(QecResult::new(
        eig.values[0],
        witness,
        QecMethod::NumericEigen,
    ))
}

/// `QEC(P_d) = -1 / (1 + cos(pi/d))` for the path on `d` vertices.
pub fn qec_path_closed_form(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "path needs at least 2 vertices, got {d}"
        )));
    }
    Ok(-1.0 / (1.0 + (PI / d as f64).cos()))
}

/// Norm of the Lagrange stationarity condition `2(D - λI)f - μ1` with
/// `μ = (2/n) <1, Df>`.
pub fn stationarity_residual(d: &DistanceMatrix, lambda: f64, f: &[f64]) -> f64 {
    let n = d.n() as f64;
    let df = d.apply(f);
    let mu = 2.0 / n * df.iter().sum::<f64>();
    df.iter()
        .zip(f)
        .map(|(dfx, fx)| 2.0 * (dfx - lambda * fx) - mu)
        .map(|r| r * r)
        .sum::<f64>()
        .sqrt()
}

/// Eigenvalues of a distance matrix, largest first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceSpectrum {
    pub eigenvalues: Vec<f64>,
    pub transmission_regular: bool,
}

impl DistanceSpectrum {
    pub fn delta1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn delta2(&self) -> f64 {
        self.eigenvalues[1]
    }
}

pub fn distance_spectrum(d: &DistanceMatrix) -> Result<DistanceSpectrum> {
    let n = d.n();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let dm = Matrix::from_row_major(n, n, d.to_f64())?;
    let eig = symmetric_eigen(&dm)?;
    Ok(DistanceSpectrum {
        eigenvalues: eig.values,
        transmission_regular: d.is_transmission_regular(),
    })
}

pub const SANDWICH_TOLERANCE: f64 = 1e-8;

/// `δ₂ ≤ QEC < δ₁` evaluated on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sandwich {
    pub delta1: f64,
    pub delta2: f64,
    pub qec: f64,
    pub transmission_regular: bool,
}

impl Sandwich {
    pub fn holds(&self) -> bool {
        self.delta2 - SANDWICH_TOLERANCE <= self.qec && self.qec < self.delta1
    }

    /// `|δ₂ - QEC| ≤ 1e-8`.
    pub fn is_tight(&self) -> bool {
        (self.delta2 - self.qec).abs() <= SANDWICH_TOLERANCE
    }
}

pub fn sandwich(d: &DistanceMatrix) -> Result<Sandwich> {
    let spectrum = distance_spectrum(d)?;
    let qec = qec_numeric(d)?;
    Ok(Sandwich {
        delta1: spectrum.delta1(),
        delta2: spectrum.delta2(),
        qec: qec.value,
        transmission_regular: spectrum.transmission_regular,
    })
}

pub fn check_sandwich(d: &DistanceMatrix) -> Result<bool> {
    Ok(sandwich(d)?.holds())
}

/// Numeric QEC of a connected graph.
pub fn qec(g: &Graph) -> Result<QecResult> {
    qec_numeric(&g.distance_matrix()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path, make_two_clique, Graph};

    fn value(g: &Graph) -> f64 {
        qec(g).unwrap().value
    }

    #[test]
    fn helmert_is_orthonormal_and_mean_zero() {
        for n in 2..10 {
            let q = helmert_basis(n);
            let g = q.transpose().matmul(&q).unwrap();
            for i in 0..n - 1 {
                let col_sum: f64 = q.column(i).iter().sum();
                assert!(col_sum.abs() < 1e-14);
                for j in 0..n - 1 {
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((g[(i, j)] - target).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn named_values() {
        for n in 2..=12 {
            assert!((value(&make_complete(n).unwrap()) + 1.0).abs() < 1e-10);
        }
        assert!((value(&make_path(3).unwrap()) + 2.0 / 3.0).abs() < 1e-12);
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!((value(&claw) + 0.5).abs() < 1e-12);
        let diamond = make_two_clique(2, 3, 3).unwrap();
        assert!((value(&diamond) + 0.5).abs() < 1e-12);
        assert!(value(&make_cycle(4).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn single_vertex_rejected() {
        let k1 = make_complete(1).unwrap();
        assert_eq!(qec(&k1), Err(Error::TooFewVertices(1)));
        assert!(distance_spectrum(&k1.distance_matrix().unwrap()).is_err());
    }

    #[test]
    fn path_closed_form() {
        assert_eq!(qec_path_closed_form(2).unwrap(), -1.0);
        assert!((qec_path_closed_form(4).unwrap() + (2.0 - 2f64.sqrt())).abs() < 1e-15);
        assert!((qec_path_closed_form(5).unwrap() + (5.0 - 5f64.sqrt()) / 5.0).abs() < 1e-15);
        assert!(qec_path_closed_form(1).is_err());
        for d in 2..=12 {
            let numeric = value(&make_path(d).unwrap());
            assert!(
                (numeric - qec_path_closed_form(d).unwrap()).abs() < 1e-8,
                "d={d}"
            );
        }
    }

    #[test]
    fn witness_invariants() {
        for g in [
            make_path(6).unwrap(),
            make_cycle(5).unwrap(),
            make_two_clique(1, 4, 3).unwrap(),
        ] {
            let d = g.distance_matrix().unwrap();
            let r = qec_numeric(&d).unwrap();
            assert!(r.residual < 1e-10);
            assert!((d.quadratic_form(&r.witness) - r.value).abs() < 1e-8);
            assert!(stationarity_residual(&d, r.value, &r.witness) < 1e-6);
            assert_eq!(r.method, QecMethod::NumericEigen);
        }
    }

    #[test]
    fn spectra() {
        let k3 = distance_spectrum(&make_complete(3).unwrap().distance_matrix().unwrap()).unwrap();
        assert!((k3.eigenvalues[0] - 2.0).abs() < 1e-12);
        assert!(k3.eigenvalues[1..].iter().all(|x| (x + 1.0).abs() < 1e-12));
        assert!(k3.transmission_regular);

        let c4 = distance_spectrum(&make_cycle(4).unwrap().distance_matrix().unwrap()).unwrap();
        for (got, want) in c4.eigenvalues.iter().zip([4.0, 0.0, -2.0, -2.0]) {
            assert!((got - want).abs() < 1e-12);
        }

        let c5 = distance_spectrum(&make_cycle(5).unwrap().distance_matrix().unwrap()).unwrap();
        assert!((c5.delta2() - (5f64.sqrt() - 3.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn sandwich_cases() {
        let c4 = sandwich(&make_cycle(4).unwrap().distance_matrix().unwrap()).unwrap();
        assert!(c4.holds() && c4.is_tight() && c4.transmission_regular);
        assert!(c4.qec.abs() < 1e-12 && c4.delta2.abs() < 1e-12);

        let p4 = sandwich(&make_path(4).unwrap().distance_matrix().unwrap()).unwrap();
        assert!(p4.holds() && p4.is_tight() && !p4.transmission_regular);

        let p3 = sandwich(&make_path(3).unwrap().distance_matrix().unwrap()).unwrap();
        assert!(p3.holds() && !p3.is_tight());
    }
}
