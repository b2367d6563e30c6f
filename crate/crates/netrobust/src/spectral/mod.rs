//! Laplacian assembly, symmetric eigensolving, algebraic connectivity, and
//! effective resistances.

mod eigen;
mod resistance;

pub use resistance::{effective_resistance, EffectiveResistances};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense symmetric graph Laplacian: weighted degrees on the diagonal,
/// negative edge weights off it. Row sums are zero by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl LaplacianMatrix {
    /// Wraps raw row-major entries without validation; [`eigenvalues`]
    /// checks symmetry on use.
    pub fn from_entries(n: usize, entries: Vec<f64>) -> LaplacianMatrix {
        assert_eq!(entries.len(), n * n, "entry count must be n*n");
        LaplacianMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Laplacian of `g` using its stored weights (1 where unweighted).
pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let weights: Vec<f64> = (0..g.edge_count()).map(|idx| g.weight_at(idx)).collect();
    assemble(g, &weights)
}

/// Laplacian of `g` under an explicit weight vector aligned with
/// `g.edges()`. Weights may exceed 1 here; they only need to be positive.
pub fn weighted_laplacian(g: &Graph, weights: &[f64]) -> Result<LaplacianMatrix> {
    if weights.len() != g.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "{} weights for {} edges",
            weights.len(),
            g.edge_count()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
        return Err(Error::InvalidParameter(format!("nonpositive edge weight {w}")));
    }
    Ok(assemble(g, weights))
}

fn assemble(g: &Graph, weights: &[f64]) -> LaplacianMatrix {
    let n = g.n();
    let mut entries = vec![0.0; n * n];
    for (&(i, j), &w) in g.edges().iter().zip(weights) {
        entries[i * n + j] = -w;
        entries[j * n + i] = -w;
        entries[i * n + i] += w;
        entries[j * n + j] += w;
    }
    LaplacianMatrix { n, entries }
}

/// Sorted Laplacian eigenvalues plus the threshold that separates the
/// structural zero mode from genuinely positive eigenvalues.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    zero_threshold: f64,
}

impl Spectrum {
    /// Eigenvalues in nondecreasing order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    /// Second-smallest eigenvalue (algebraic connectivity).
    pub fn lambda2(&self) -> f64 {
        self.eigenvalues[1]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is nonempty")
    }

    /// Number of eigenvalues below the zero threshold in magnitude.
    pub fn zero_modes(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|l| l.abs() < self.zero_threshold)
            .count()
    }

    /// Spectral connectivity test: exactly one zero mode.
    pub fn indicates_connected(&self) -> bool {
        self.zero_modes() == 1
    }

    /// Sum of reciprocals of the nonzero-mode eigenvalues, i.e. skipping
    /// the smallest eigenvalue.
    pub fn reciprocal_sum(&self) -> f64 {
        self.eigenvalues.iter().skip(1).map(|l| 1.0 / l).sum()
    }
}

/// Full eigendecomposition of a symmetric Laplacian. Errors if the matrix
/// is asymmetric beyond `1e-10 * max(1, max|entry|)`.
pub fn eigenvalues(m: &LaplacianMatrix) -> Result<Spectrum> {
    let n = m.n;
    let max_abs = m.entries.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let tol = 1e-10 * max_abs.max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            let delta = (m.get(i, j) - m.get(j, i)).abs();
            if delta > tol {
                return Err(Error::NotSymmetric { i, j, delta });
            }
        }
    }
    let eigenvalues = eigen::sym_eigenvalues(&m.entries, n)?;
    let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
    Ok(Spectrum {
        eigenvalues,
        zero_threshold: 1e-8 * lambda_max.max(1.0),
    })
}

/// Convenience: spectrum of the unweighted Laplacian of `g`.
pub fn structural_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues(&laplacian(&g.unweighted()))
}

/// Second-smallest eigenvalue of the unweighted Laplacian.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(structural_spectrum(g)?.lambda2())
}
