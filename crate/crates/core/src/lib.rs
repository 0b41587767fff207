//! Quadratic embedding constants (QEC) of finite connected graphs.
//!
//! `QEC(G)` is the maximum of `<f, D f>` over unit vectors orthogonal to the
//! all-ones vector, `D` being the distance matrix of `G`. The crate computes
//! it numerically and through closed forms, builds clique graphs, classifies
//! graphs against the ladder `QEC(P_2) < QEC(P_3) < .. → -1/2`, and checks
//! the structural theorems over every connected graph up to a given order.

pub mod classify;
pub mod clique;
pub mod eigen;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod qec;
pub mod two_clique;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, VertexSet};
