//! Structural robustness measures for noisy consensus networks.
//!
//! The structural vulnerability H*(G) of a connected graph is the smallest
//! steady-state population variance achievable under the noisy consensus
//! dynamics with edge weights in (0, 1]. It is attained at all-ones weights
//! and equals `(1/2n) * sum_{i>=2} 1/lambda_i(L)` for the unweighted
//! Laplacian L, or equivalently `K_f(G) / (2 n^2)` in terms of the
//! Kirchhoff index. This module computes H*, both Kirchhoff routes, the
//! degree/distance sandwich bounds with their tightness characterization,
//! the sparsity trade-off ratios, and the random-regular-graph guarantee
//! formulas.

use crate::error::{Error, Result};
use crate::graph::{lollipop, Family, Graph};
use crate::spectral::{self, EffectiveResistances};

/// Relative tolerance for the bound-tightness flags.
const TIGHT_REL: f64 = 1e-9;

/// Robustness summary of one connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RobustnessReport {
    /// Structural vulnerability H*(G).
    pub h_star: f64,
    /// Kirchhoff index, `2 n^2 h_star`.
    pub kirchhoff: f64,
    /// Degree-based lower bound `(n-1)^2 / (2 d n^2)`.
    pub lower_bound: f64,
    /// Distance-based upper bound `delta (n-1) / (4n)`.
    pub upper_bound: f64,
    pub avg_degree: f64,
    pub avg_distance: f64,
    /// Lower bound met with equality (complete graphs only).
    pub lower_tight: bool,
    /// Upper bound met with equality (trees only).
    pub upper_tight: bool,
}

impl RobustnessReport {
    pub fn for_graph(g: &Graph) -> Result<RobustnessReport> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.n() as f64;
        let spectrum = spectral::structural_spectrum(g)?;
        let h_star = spectrum.reciprocal_sum() / (2.0 * n);
        let kirchhoff = n * spectrum.reciprocal_sum();
        let avg_degree = g.average_degree();
        let avg_distance = g.distances()?.average_distance;
        let lower_bound = (n - 1.0) * (n - 1.0) / (2.0 * avg_degree * n * n);
        let upper_bound = avg_distance * (n - 1.0) / (4.0 * n);
        Ok(RobustnessReport {
            h_star,
            kirchhoff,
            lower_bound,
            upper_bound,
            avg_degree,
            avg_distance,
            lower_tight: (h_star - lower_bound).abs() <= TIGHT_REL * h_star,
            upper_tight: (h_star - upper_bound).abs() <= TIGHT_REL * h_star,
        })
    }
}

/// A sample of the random-regular approximation bound curve:
/// `value = k / (k - 2 sqrt(k-1) - eps) + eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCurvePoint {
    pub k: usize,
    pub epsilon: f64,
    pub value: f64,
}

/// Expected steady-state population variance `H(G, w)` under the graph's
/// stored weights: `(1/2n) * sum_{i>=2} 1/lambda_i(L_w)`.
pub fn h_expected(g: &Graph) -> Result<f64> {
    let weights: Vec<f64> = (0..g.edge_count()).map(|i| g.weight_at(i)).collect();
    h_expected_with_weights(g, &weights)
}

/// `H(G, w)` under an explicit weight vector aligned with `g.edges()`.
/// Unlike stored graph weights, entries may exceed 1; they only need to be
/// positive (the (0, 1] cap defines H*, not H).
pub fn h_expected_with_weights(g: &Graph, weights: &[f64]) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = spectral::eigenvalues(&spectral::weighted_laplacian(g, weights)?)?;
    Ok(spectrum.reciprocal_sum() / (2.0 * g.n() as f64))
}

/// Structural vulnerability H*(G): `H(G, w)` minimized over weights in
/// (0, 1], attained at all-ones weights.
pub fn h_star(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = spectral::structural_spectrum(g)?;
    Ok(spectrum.reciprocal_sum() / (2.0 * g.n() as f64))
}

/// Closed-form H* for the canonical families.
pub fn h_star_closed_form(family: Family, n: usize) -> Result<f64> {
    if n < family.min_nodes() {
        return Err(Error::InvalidSize { family: family.name(), n, min: family.min_nodes() });
    }
    let n = n as f64;
    Ok(match family {
        Family::Path => (n * n - 1.0) / (12.0 * n),
        Family::Cycle => (n * n - 1.0) / (24.0 * n),
        Family::Star => (n - 1.0) * (n - 1.0) / (2.0 * n * n),
        Family::Complete => (n - 1.0) / (2.0 * n * n),
    })
}

/// Kirchhoff index from the Laplacian spectrum: `n * sum_{i>=2} 1/lambda_i`.
pub fn kirchhoff_from_spectrum(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.n() as f64 * spectral::structural_spectrum(g)?.reciprocal_sum())
}

/// Kirchhoff index as the sum of pairwise effective resistances. This is
/// an algebraically independent route (Cholesky solve rather than
/// eigendecomposition) and serves as the oracle for
/// [`kirchhoff_from_spectrum`].
pub fn kirchhoff_from_resistances(g: &Graph) -> Result<f64> {
    Ok(EffectiveResistances::new(g)?.total())
}

/// Degree/distance sandwich: `(n-1)^2/(2 d n^2) <= H* <= delta (n-1)/(4n)`.
/// The lower bound is tight exactly on complete graphs, the upper exactly
/// on trees.
pub fn degree_distance_bounds(g: &Graph) -> Result<(f64, f64)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n() as f64;
    if g.n() < 2 {
        return Err(Error::InvalidParameter("bounds need n >= 2".into()));
    }
    let lower = (n - 1.0) * (n - 1.0) / (2.0 * g.average_degree() * n * n);
    let upper = g.distances()?.average_distance * (n - 1.0) / (4.0 * n);
    Ok((lower, upper))
}

/// Sparsity trade-off ratios: `H*(S_n)/H*(G) <= d(G)` and
/// `H*(G)/H*(K_n) >= (n-1)/d(G)`.
pub fn sparsity_ratios(g: &Graph) -> Result<(f64, f64)> {
    let h = h_star(g)?;
    let star = h_star_closed_form(Family::Star, g.n())?;
    let complete = h_star_closed_form(Family::Complete, g.n())?;
    Ok((star / h, h / complete))
}

/// Minimum average degree forced by a robustness-suboptimality target:
/// `H*(G)/H*(K_n) <= alpha` requires `d(G) >= (n-1)/alpha`.
pub fn min_degree_for_alpha(n: usize, alpha: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    if !(alpha >= 1.0) {
        return Err(Error::InvalidParameter(format!("need alpha >= 1, got {alpha}")));
    }
    Ok((n as f64 - 1.0) / alpha)
}

/// Regular degree that meets the minimum of [`min_degree_for_alpha`]:
/// `k* = ceil((n-1)/alpha)`, valid for `n >= 3 alpha + 1`.
pub fn k_star(n: usize, alpha: f64) -> Result<usize> {
    if !(alpha >= 1.0) {
        return Err(Error::InvalidParameter(format!("need alpha >= 1, got {alpha}")));
    }
    if (n as f64) < 3.0 * alpha + 1.0 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3*alpha + 1 = {}, got {n}",
            3.0 * alpha + 1.0
        )));
    }
    Ok(((n as f64 - 1.0) / alpha).ceil() as usize)
}

/// High-probability vulnerability bound for random k-regular graphs:
/// `H*(G_{n,k}) <= (n-1) / (2n (k - 2 sqrt(k-1) - eps))`.
pub fn rr_vulnerability_bound(n: usize, k: usize, epsilon: f64) -> Result<f64> {
    let gap = spectral_gap_floor(k, epsilon, false)?;
    let n = n as f64;
    Ok((n - 1.0) / (2.0 * n * gap))
}

/// Tail exponent of the convergence rate in the random-regular bound:
/// `tail_exponent = ceil((sqrt(k-1) + 1)/2) - 1` for even `k >= 4`.
pub fn tail_exponent(k: usize) -> Result<usize> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("need even k >= 4, got {k}")));
    }
    let t = (((k as f64 - 1.0).sqrt() + 1.0) / 2.0).ceil() as usize;
    Ok(t - 1)
}

/// Approximation-ratio bound of random k-regular graphs against the best
/// graph with average degree k. `epsilon = 0` gives the limiting curve.
pub fn approx_bound(k: usize, epsilon: f64) -> Result<BoundCurvePoint> {
    let gap = spectral_gap_floor(k, epsilon, true)?;
    Ok(BoundCurvePoint {
        k,
        epsilon,
        value: k as f64 / gap + epsilon,
    })
}

/// Validated `k - 2 sqrt(k-1) - eps`, positive for admissible inputs.
fn spectral_gap_floor(k: usize, epsilon: f64, allow_zero_eps: bool) -> Result<f64> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("need k >= 3, got {k}")));
    }
    let k = k as f64;
    let limit = k - 2.0 * (k - 1.0).sqrt();
    let low_ok = if allow_zero_eps { epsilon >= 0.0 } else { epsilon > 0.0 };
    if !(low_ok && epsilon < limit) {
        return Err(Error::InvalidParameter(format!(
            "epsilon {epsilon} outside {}0, k - 2 sqrt(k-1)) = {}0, {limit})",
            if allow_zero_eps { "[" } else { "(" },
            if allow_zero_eps { "[" } else { "(" },
        )));
    }
    Ok(limit - epsilon)
}

/// Kirchhoff index of two graphs joined by a single bridge edge, as
/// reported in the literature for components of sizes `p` and `q` with
/// Kirchhoff indices `kf1` and `kf2`.
///
/// Reproduced verbatim:
/// `((p+q)/p) kf1 + ((p+q)/q) kf2 + (2p^2-3p+1)/(6p) + (q-1)/q^2 + 1`.
/// Beware: on small bridged graphs this expression disagrees with the
/// direct spectral/resistance computation (e.g. bridging P_2 to K_1 gives
/// 2.75 here versus the true K_f(P_3) = 4), so it is exposed for
/// transparency only; all internal computations use the spectral route.
pub fn bridged_kirchhoff_formula(p: usize, q: usize, kf1: f64, kf2: f64) -> f64 {
    let (p, q) = (p as f64, q as f64);
    (p + q) / p * kf1
        + (p + q) / q * kf2
        + (2.0 * p * p - 3.0 * p + 1.0) / (6.0 * p)
        + (q - 1.0) / (q * q)
        + 1.0
}

/// Witness family for the density/fragility trade-off: a lollipop on `n`
/// nodes whose clique part holds `ceil(n/beta)` nodes. Along increasing
/// `n` the average degree stays proportional to `n` while H* diverges.
pub fn dense_fragile_sequence(n: usize, beta: f64) -> Result<Graph> {
    if !(beta > 1.0) {
        return Err(Error::InvalidParameter(format!("need beta > 1, got {beta}")));
    }
    let p = (n as f64 / beta).ceil() as usize;
    if p < 2 || n <= p {
        return Err(Error::InvalidParameter(format!(
            "n = {n} too small for beta = {beta}: clique part p = {p} needs 2 <= p < n"
        )));
    }
    lollipop(p, n - p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn h_expected_k2() {
        let k2 = Graph::complete(2).unwrap();
        assert!(rel_err(h_expected(&k2).unwrap(), 0.125) < 1e-12);
        let k2w = Graph::with_weights(2, [(0, 1, 0.5)]).unwrap();
        assert!(rel_err(h_expected(&k2w).unwrap(), 0.25) < 1e-12);
    }

    #[test]
    fn h_expected_scales_inversely_with_weights() {
        let g = lollipop(4, 3).unwrap();
        let base: Vec<f64> = vec![0.7; g.edge_count()];
        let h1 = h_expected_with_weights(&g, &base).unwrap();
        for alpha in [0.5, 2.0, 10.0] {
            let scaled: Vec<f64> = base.iter().map(|w| alpha * w).collect();
            let h = h_expected_with_weights(&g, &scaled).unwrap();
            assert!(rel_err(h, h1 / alpha) < 1e-9);
        }
    }

    #[test]
    fn h_star_table_values() {
        assert!(rel_err(h_star(&Graph::path(20).unwrap()).unwrap(), 1.6625) < 1e-9);
        assert!(rel_err(h_star(&Graph::star(20).unwrap()).unwrap(), 0.45125) < 1e-9);
        assert!(rel_err(h_star(&Graph::complete(20).unwrap()).unwrap(), 0.02375) < 1e-9);
    }

    #[test]
    fn h_star_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(h_star(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn closed_forms() {
        assert!(rel_err(h_star_closed_form(Family::Complete, 100).unwrap(), 0.00495) < 1e-12);
        let c3 = h_star_closed_form(Family::Cycle, 3).unwrap();
        assert!(rel_err(c3, 1.0 / 9.0) < 1e-12);
        assert_eq!(c3, h_star_closed_form(Family::Complete, 3).unwrap());
        let p60 = h_star_closed_form(Family::Path, 60).unwrap();
        assert!(rel_err(p60, 3599.0 / 720.0) < 1e-12);
        assert!(matches!(
            h_star_closed_form(Family::Cycle, 2),
            Err(Error::InvalidSize { .. })
        ));
    }

    #[test]
    fn kirchhoff_examples() {
        // K_f(P_20) is the pairwise hop-distance sum of a tree: 1330.
        let p20 = Graph::path(20).unwrap();
        assert!(rel_err(kirchhoff_from_spectrum(&p20).unwrap(), 1330.0) < 1e-9);
        assert!(rel_err(kirchhoff_from_resistances(&p20).unwrap(), 1330.0) < 1e-9);

        let k3 = Graph::complete(3).unwrap();
        assert!(rel_err(kirchhoff_from_spectrum(&k3).unwrap(), 2.0) < 1e-12);
        assert!(rel_err(kirchhoff_from_resistances(&k3).unwrap(), 2.0) < 1e-12);

        // K_f = 2 n^2 H*.
        let g = crate::graph::random_regular(20, 3, 3).unwrap();
        let kf = kirchhoff_from_spectrum(&g).unwrap();
        let n = g.n() as f64;
        assert!(rel_err(kf, 2.0 * n * n * h_star(&g).unwrap()) < 1e-12);
        assert!(rel_err(kf, kirchhoff_from_resistances(&g).unwrap()) < 1e-8);
    }

    #[test]
    fn sandwich_bounds_examples() {
        // Every cubic 20-node graph has the same lower bound 361/2400.
        let g = crate::graph::random_regular(20, 3, 11).unwrap();
        let (lower, upper) = degree_distance_bounds(&g).unwrap();
        assert!(rel_err(lower, 361.0 / 2400.0) < 1e-12);
        let h = h_star(&g).unwrap();
        assert!(lower <= h * (1.0 + 1e-9));
        assert!(h <= upper * (1.0 + 1e-9));

        // Complete graphs meet the lower bound exactly.
        let report = RobustnessReport::for_graph(&Graph::complete(13).unwrap()).unwrap();
        assert!(report.lower_tight);
        assert!(!report.upper_tight);

        // Trees meet the upper bound exactly.
        let report = RobustnessReport::for_graph(&Graph::star(13).unwrap()).unwrap();
        assert!(report.upper_tight);
        assert!(!report.lower_tight);
    }

    #[test]
    fn sparsity_ratio_equalities() {
        // The complete graph meets both bounds with equality.
        for n in [5usize, 12, 30] {
            let k = Graph::complete(n).unwrap();
            let (star_ratio, complete_ratio) = sparsity_ratios(&k).unwrap();
            assert!(rel_err(star_ratio, (n - 1) as f64) < 1e-9);
            assert!(rel_err(complete_ratio, 1.0) < 1e-9);
        }
    }

    #[test]
    fn min_degree_examples() {
        assert!(rel_err(min_degree_for_alpha(100, 25.0).unwrap(), 3.96) < 1e-12);
        assert!(rel_err(min_degree_for_alpha(250, 25.0).unwrap(), 9.96) < 1e-12);
        assert_eq!(min_degree_for_alpha(50, 1.0).unwrap(), 49.0);
        assert!(matches!(
            min_degree_for_alpha(50, 0.5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn k_star_examples() {
        assert_eq!(k_star(100, 25.0).unwrap(), 4);
        assert_eq!(k_star(150, 25.0).unwrap(), 6);
        assert_eq!(k_star(200, 25.0).unwrap(), 8);
        assert_eq!(k_star(250, 25.0).unwrap(), 10);
        assert!(matches!(k_star(30, 25.0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn rr_bound_examples() {
        // Prefactor (n-1)/2n approaches 1/2.
        let huge = rr_vulnerability_bound(1_000_000_000, 5, 0.2).unwrap();
        let limit = 1.0 / (2.0 * (5.0 - 4.0 - 0.2));
        assert!(rel_err(huge, limit) < 1e-6);

        let b = rr_vulnerability_bound(60, 3, 0.01).unwrap();
        assert!(rel_err(b, 3.043002520654058) < 1e-12);

        assert!(matches!(
            rr_vulnerability_bound(60, 3, 0.5),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            rr_vulnerability_bound(60, 3, 0.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tail_exponent(4).unwrap(), 1);
        assert_eq!(tail_exponent(12).unwrap(), 2);
        assert_eq!(tail_exponent(36).unwrap(), 3);
        assert!(matches!(tail_exponent(5), Err(Error::InvalidParameter(_))));
        assert!(matches!(tail_exponent(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn approx_bound_curve_values() {
        assert!((approx_bound(3, 0.0).unwrap().value - 17.48528137423859).abs() < 1e-12);
        assert_eq!(approx_bound(5, 0.0).unwrap().value, 5.0);
        assert!((approx_bound(15, 0.0).unwrap().value - 1.9955604828592794).abs() < 1e-12);
        assert!(matches!(approx_bound(2, 0.0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn approx_bound_strictly_decreasing() {
        for epsilon in [0.0, 0.05] {
            let mut last = f64::INFINITY;
            for k in 3..=100 {
                let v = approx_bound(k, epsilon).unwrap().value;
                assert!(v < last, "not decreasing at k = {k}, eps = {epsilon}");
                assert!(v > 1.0);
                last = v;
            }
        }
    }

    #[test]
    fn bridged_formula_as_published() {
        assert!((bridged_kirchhoff_formula(1, 1, 0.0, 0.0) - 1.0).abs() < 1e-12);
        // These two disagree with the direct computation (4 and 19/3); the
        // expression is reproduced as published.
        assert!((bridged_kirchhoff_formula(2, 1, 1.0, 0.0) - 2.75).abs() < 1e-12);
        assert!((bridged_kirchhoff_formula(3, 1, 2.0, 0.0) - 38.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn dense_fragile_construction() {
        let g = dense_fragile_sequence(40, 2.0).unwrap();
        assert_eq!(g.n(), 40);
        // p = 20 clique + q = 20 path + bridge.
        assert_eq!(g.edge_count(), 20 * 19 / 2 + 19 + 1);
        assert!(matches!(dense_fragile_sequence(2, 2.0), Err(Error::InvalidParameter(_))));
        assert!(matches!(dense_fragile_sequence(40, 0.9), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn lollipop_worse_than_complete() {
        let l = lollipop(10, 10).unwrap();
        let k = Graph::complete(20).unwrap();
        assert!(h_star(&l).unwrap() > h_star(&k).unwrap());
    }
}
