//! Effective resistances with every edge a unit resistor.
//!
//! For a connected graph, `L + J/n` (J the all-ones matrix) shares the
//! Laplacian's eigenvectors, maps the zero mode to 1, and is therefore
//! positive definite. Its inverse equals the Laplacian pseudoinverse plus
//! `J/n`, and the constant shift cancels in
//! `r_ij = M_ii + M_jj - 2 M_ij`. One Cholesky factorization per graph
//! serves all pairs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs effective resistances of a connected graph. Edge weights are
/// ignored: the underlying electrical network assigns a unit resistor to
/// every edge, matching the structural (all-ones) setting.
#[derive(Debug, Clone)]
pub struct EffectiveResistances {
    n: usize,
    minv: Vec<f64>,
}

impl EffectiveResistances {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.n();
        let shift = 1.0 / n as f64;
        let mut a = vec![shift; n * n];
        for &(i, j) in g.edges() {
            a[i * n + j] -= 1.0;
            a[j * n + i] -= 1.0;
            a[i * n + i] += 1.0;
            a[j * n + j] += 1.0;
        }
        let chol = cholesky(&a, n)?;
        let mut minv = vec![0.0; n * n];
        let mut column = vec![0.0; n];
        for rhs in 0..n {
            column.fill(0.0);
            column[rhs] = 1.0;
            solve_in_place(&chol, n, &mut column);
            for i in 0..n {
                minv[i * n + rhs] = column[i];
            }
        }
        Ok(EffectiveResistances { n, minv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Effective resistance between `i` and `j`; zero when `i == j`.
    pub fn resistance(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let n = self.n;
        self.minv[i * n + i] + self.minv[j * n + j] - 2.0 * self.minv[i * n + j]
    }

    /// Sum of resistances over unordered pairs (the Kirchhoff index).
    pub fn total(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                sum += self.resistance(i, j);
            }
        }
        sum
    }
}

/// One-shot pairwise resistance. Computing many pairs on the same graph is
/// cheaper through [`EffectiveResistances`].
pub fn effective_resistance(g: &Graph, i: usize, j: usize) -> Result<f64> {
    if i >= g.n() {
        return Err(Error::InvalidNode { node: i, n: g.n() });
    }
    if j >= g.n() {
        return Err(Error::InvalidNode { node: j, n: g.n() });
    }
    if i == j {
        return Ok(0.0);
    }
    Ok(EffectiveResistances::new(g)?.resistance(i, j))
}

/// Lower-triangular Cholesky factor of a flat row-major SPD matrix.
fn cholesky(a: &[f64], n: usize) -> Result<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut diag = a[j * n + j];
        for k in 0..j {
            diag -= l[j * n + k] * l[j * n + k];
        }
        if diag <= 0.0 {
            return Err(Error::Numerical(format!(
                "Cholesky pivot {diag:e} at index {j}; matrix not positive definite"
            )));
        }
        let root = diag.sqrt();
        l[j * n + j] = root;
        for i in (j + 1)..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / root;
        }
    }
    Ok(l)
}

/// Solves `L L^T x = b` in place given the Cholesky factor.
fn solve_in_place(l: &[f64], n: usize, b: &mut [f64]) {
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * b[k];
        }
        b[i] = s / l[i * n + i];
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in (i + 1)..n {
            s -= l[k * n + i] * b[k];
        }
        b[i] = s / l[i * n + i];
    }
}
