//! Largest eigenvalues of the signless Laplacian `Q = A + D` and of the
//! adjacency matrix `A`.
//!
//! The fast path is power iteration on an entrywise-nonnegative matrix, run
//! separately on every connected component. Each result carries the residual
//! `‖Mx − value·x‖₂` of the returned vector so callers can see how well the
//! eigenpair is certified. When the iteration cap is reached the component is
//! diagonalized with [`symmetric_eigen`] instead and the result is marked
//! [`Method::Full`].

mod jacobi;

pub use jacobi::{symmetric_eigen, SymmetricEigen};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Signless Laplacian `A + D`.
    #[serde(rename = "Q")]
    Signless,
    /// Adjacency matrix `A`.
    #[serde(rename = "A")]
    Adjacency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Iterative,
    Full,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub value: f64,
    /// Unit eigenvector; zero outside the component attaining `value`.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

/// Dense matrix of the requested kind.
pub fn dense_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<f64>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        match kind {
                            MatrixKind::Signless => g.degree(i) as f64,
                            MatrixKind::Adjacency => 0.0,
                        }
                    } else if g.has_edge(i, j) {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// All `n` eigenvalues of `Q` or `A`, ascending.
pub fn full_spectrum(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    symmetric_eigen(&dense_matrix(g, kind)).values
}

/// q(G), the largest eigenvalue of the signless Laplacian.
pub fn q_index(g: &Graph, tol: f64) -> Result<SpectralResult> {
    largest_eigenpair(g, MatrixKind::Signless, tol)
}

/// λ(G), the spectral radius of the adjacency matrix.
pub fn adjacency_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    largest_eigenpair(g, MatrixKind::Adjacency, tol)
}

/// `Σ_{ij ∈ E} (x_i + x_j)²`, which equals `xᵀQx`.
pub fn rayleigh_edge_form(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::InvalidVector(format!(
            "length {} for order {}",
            x.len(),
            g.order()
        )));
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidVector(format!("norm {norm} is not 1")));
    }
    Ok(g.edges().map(|(i, j)| (x[i] + x[j]).powi(2)).sum())
}

/// `y = (M + shift·I) x` for the component's matrix, M = Q or A.
fn apply(g: &Graph, kind: MatrixKind, shift: f64, x: &[f64], y: &mut [f64]) {
    let adj = g.adjacency();
    for (i, yi) in y.iter_mut().enumerate() {
        let mut acc: f64 = VertexSet::from_bits(adj[i]).iter().map(|j| x[j]).sum();
        let diag = match kind {
            MatrixKind::Signless => adj[i].count_ones() as f64,
            MatrixKind::Adjacency => 0.0,
        };
        acc += (diag + shift) * x[i];
        *yi = acc;
    }
}

fn largest_eigenpair(g: &Graph, kind: MatrixKind, tol: f64) -> Result<SpectralResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = g.order();
    if g.size() == 0 {
        let mut vector = vec![0.0; n];
        vector[0] = 1.0;
        return Ok(SpectralResult {
            value: 0.0,
            vector,
            residual: 0.0,
            iterations: 0,
            method: Method::Iterative,
        });
    }

    let mut best: Option<(SpectralResult, VertexSet)> = None;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(comp)?;
        let r = component_eigenpair(&sub, kind, tol);
        if best.as_ref().is_none_or(|(b, _)| r.value > b.value) {
            best = Some((r, comp));
        }
    }
    let (mut r, comp) = best.expect("a graph with an edge has a nontrivial component");
    let mut vector = vec![0.0; n];
    for (x, v) in r.vector.iter().zip(comp.iter()) {
        vector[v] = *x;
    }
    r.vector = vector;
    Ok(r)
}

/// Power iteration on a connected graph; falls back to Jacobi at the cap.
fn component_eigenpair(g: &Graph, kind: MatrixKind, tol: f64) -> SpectralResult {
    let n = g.order();
    // A + (Δ+1)I is nonnegative with a positive diagonal; Q needs no shift.
    let shift = match kind {
        MatrixKind::Signless => 0.0,
        MatrixKind::Adjacency => g.max_degree() as f64 + 1.0,
    };
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for it in 1..=MAX_ITERATIONS {
        apply(g, kind, shift, &x, &mut y);
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rho * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            return SpectralResult {
                value: rho - shift,
                vector: x,
                residual,
                iterations: it,
                method: Method::Iterative,
            };
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    full_eigenpair(g, kind, MAX_ITERATIONS)
}

fn full_eigenpair(g: &Graph, kind: MatrixKind, iterations: usize) -> SpectralResult {
    let m = dense_matrix(g, kind);
    let eig = symmetric_eigen(&m);
    let value = *eig.values.last().expect("nonempty");
    let mut vector = eig.vectors.last().expect("nonempty").clone();
    if vector.iter().sum::<f64>() < 0.0 {
        vector.iter_mut().for_each(|v| *v = -*v);
    }
    let residual = m
        .iter()
        .zip(&vector)
        .map(|(row, xi)| {
            let y: f64 = row.iter().zip(&vector).map(|(a, b)| a * b).sum();
            (y - value * xi).powi(2)
        })
        .sum::<f64>()
        .sqrt();
    SpectralResult { value, vector, residual, iterations, method: Method::Full }
}
