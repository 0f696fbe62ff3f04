//! The α-Hermitian adjacency matrix and its spectral data.
//!
//! Eigenvalues come from a real symmetric solver applied to the `2n x 2n`
//! embedding `[[X, -Y], [Y, X]]` of `H = X + iY`. Every eigenvalue of `H`
//! appears twice in the embedding; the spectrum keeps every second value of
//! the sorted doubled list and eigenvectors are rebuilt as `u + iw` from the
//! halves of the embedded vectors, orthonormalised within each eigenvalue
//! cluster.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::graph::{MixedGraph, Step};
use crate::phase::UnitPhase;

/// Allowed eigen-residual per matrix dimension.
pub const EIGEN_RESIDUAL_PER_DIM: f64 = 1e-9;
/// Coefficient comparisons and imaginary-residue checks.
pub const COEFF_TOL: f64 = 1e-8;
/// Default tolerance for spectrum equality.
pub const SPECTRA_TOL: f64 = 1e-8;

/// Eigenvalues of the embedding closer than this (relative) form one cluster.
const CLUSTER_TOL: f64 = 1e-8;
const MAX_SWEEPS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("eigensolver did not converge")]
    NoConvergence,
    #[error("eigenvalue cluster of odd size {0} in the real embedding")]
    BrokenPairing(usize),
    #[error("eigenpair {index} has residual {residual:e}, above {limit:e}")]
    Residual {
        index: usize,
        residual: f64,
        limit: f64,
    },
    #[error("characteristic coefficient c{index} has imaginary part {imag:e}")]
    ImaginaryResidue { index: usize, imag: f64 },
    #[error("spectra have different sizes ({0} and {1})")]
    CardinalityMismatch(usize, usize),
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Dense `n x n` Hermitian matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Complex64 {
        self.entries[u * self.n + v]
    }

    pub fn to_dmatrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.n, self.n, &self.entries)
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| self.get(u, v) == self.get(v, u).conj()))
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.get(u, v) * x[v]).sum())
            .collect()
    }

    /// The real symmetric `2n x 2n` embedding `[[X, -Y], [Y, X]]`.
    fn real_embedding(&self) -> DMatrix<f64> {
        let n = self.n;
        DMatrix::from_fn(2 * n, 2 * n, |r, c| {
            let h = self.get(r % n, c % n);
            match (r < n, c < n) {
                (true, true) | (false, false) => h.re,
                (true, false) => -h.im,
                (false, true) => h.im,
            }
        })
    }
}

/// Builds `H^α(D)`: `1` on digons, `α` along arcs and `ᾱ` against them.
pub fn build_hermitian(graph: &MixedGraph, alpha: UnitPhase) -> HermitianMatrix {
    let n = graph.n();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for u in 0..n {
        for (v, step) in graph.neighbors(u) {
            entries[u * n + v] = alpha.step_entry(step);
        }
    }
    HermitianMatrix { n, entries }
}

/// Real eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest modulus; `0` for the empty spectrum.
    pub fn radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// The spectrum of `-H`.
    pub fn negated(&self) -> Spectrum {
        Spectrum::new(self.eigenvalues.iter().map(|x| -x).collect())
    }

    /// Largest elementwise gap between the sorted lists.
    pub fn max_gap(&self, other: &Spectrum) -> Result<f64, SpectraError> {
        if self.len() != other.len() {
            return Err(SpectraError::CardinalityMismatch(self.len(), other.len()));
        }
        Ok(self
            .eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }
}

/// An eigenvalue with a unit eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub lambda: f64,
    pub vector: Vec<Complex64>,
}

/// Coefficients `c1..cn` of the monic `λ^n + c1 λ^{n-1} + ... + cn`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `c1..cn`, without the leading one.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `c_k`, with `c_0 = 1`.
    pub fn coefficient(&self, k: usize) -> f64 {
        if k == 0 {
            1.0
        } else {
            self.coeffs[k - 1]
        }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(1.0, |acc, c| acc * x + c)
    }

    /// Largest coefficient gap; infinite when the degrees differ.
    pub fn max_gap(&self, other: &CharPoly) -> f64 {
        if self.degree() != other.degree() {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Eigenvalues and an orthonormal eigenbasis of `h`.
pub fn eigen_decomposition(
    h: &HermitianMatrix,
) -> Result<(Spectrum, Vec<EigenPair>), SpectraError> {
    let n = h.n();
    if n == 0 {
        return Ok((Spectrum::new(Vec::new()), Vec::new()));
    }
    let eigen = SymmetricEigen::try_new(h.real_embedding(), f64::EPSILON, MAX_SWEEPS)
        .ok_or(SpectraError::NoConvergence)?;

    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[b].total_cmp(&eigen.eigenvalues[a]));
    let doubled: Vec<f64> = order.iter().map(|&i| eigen.eigenvalues[i]).collect();
    let spectrum = Spectrum::new(doubled.iter().step_by(2).copied().collect());

    let mut pairs = Vec::with_capacity(n);
    let mut start = 0;
    while start < 2 * n {
        let mut end = start + 1;
        while end < 2 * n && doubled[end - 1] - doubled[end] <= CLUSTER_TOL * doubled[end - 1].abs().max(1.0)
        {
            end += 1;
        }
        let size = end - start;
        if size % 2 == 1 {
            return Err(SpectraError::BrokenPairing(size));
        }
        let candidates: Vec<Vec<Complex64>> = order[start..end]
            .iter()
            .map(|&col| {
                let v = eigen.eigenvectors.column(col);
                (0..n).map(|r| Complex64::new(v[r], v[r + n])).collect()
            })
            .collect();
        let basis = orthonormal_subset(candidates, size / 2);
        for (offset, vector) in basis.into_iter().enumerate() {
            let lambda = spectrum.eigenvalues()[start / 2 + offset];
            pairs.push(EigenPair { lambda, vector });
        }
        start = end;
    }

    let limit = EIGEN_RESIDUAL_PER_DIM * n as f64;
    for (index, pair) in pairs.iter().enumerate() {
        let residual = matrix_residual(h, pair);
        if residual > limit {
            return Err(SpectraError::Residual {
                index,
                residual,
                limit,
            });
        }
    }
    Ok((spectrum, pairs))
}

/// Picks `count` orthonormal vectors from the complex span of `candidates`
/// by pivoted Gram-Schmidt.
fn orthonormal_subset(mut candidates: Vec<Vec<Complex64>>, count: usize) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(count);
    while basis.len() < count && !candidates.is_empty() {
        let (best, _) = candidates
            .iter()
            .enumerate()
            .map(|(i, v)| (i, norm(v)))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("candidates nonempty");
        let mut pick = candidates.swap_remove(best);
        let len = norm(&pick);
        for z in &mut pick {
            *z /= len;
        }
        for cand in &mut candidates {
            let dot: Complex64 = pick.iter().zip(cand.iter()).map(|(p, c)| p.conj() * c).sum();
            for (c, p) in cand.iter_mut().zip(&pick) {
                *c -= dot * p;
            }
        }
        basis.push(pick);
    }
    basis
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn matrix_residual(h: &HermitianMatrix, pair: &EigenPair) -> f64 {
    h.mul_vec(&pair.vector)
        .iter()
        .zip(&pair.vector)
        .map(|(hx, x)| (hx - x * pair.lambda).norm())
        .fold(0.0, f64::max)
}

/// Characteristic polynomial by the Faddeev-LeVerrier trace recursion in
/// complex arithmetic; the coefficients are then truncated to their real parts.
pub fn char_poly(h: &HermitianMatrix) -> Result<CharPoly, SpectraError> {
    let n = h.n();
    let a = h.to_dmatrix();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    let mut prev = Complex64::new(1.0, 0.0);
    let mut coeffs = Vec::with_capacity(n);
    for k in 1..=n {
        m = &a * &m;
        for d in 0..n {
            m[(d, d)] += prev;
        }
        let am = &a * &m;
        let c = -am.trace() / k as f64;
        if c.im.abs() > COEFF_TOL * c.re.abs().max(1.0) {
            return Err(SpectraError::ImaginaryResidue {
                index: k,
                imag: c.im,
            });
        }
        coeffs.push(c.re);
        prev = Complex64::new(c.re, 0.0);
    }
    Ok(CharPoly::new(coeffs))
}

/// Expands `∏ (λ - λ_i)` over the spectrum.
pub fn char_poly_from_spectrum(spectrum: &Spectrum) -> CharPoly {
    let mut poly = vec![1.0];
    for &root in spectrum.eigenvalues() {
        let mut next = vec![0.0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= root * c;
        }
        poly = next;
    }
    CharPoly::new(poly[1..].to_vec())
}

pub fn alpha_spectrum(graph: &MixedGraph, alpha: UnitPhase) -> Result<Spectrum, SpectraError> {
    eigen_decomposition(&build_hermitian(graph, alpha)).map(|(s, _)| s)
}

/// The ordinary adjacency spectrum of the underlying graph.
pub fn underlying_spectrum(graph: &MixedGraph) -> Result<Spectrum, SpectraError> {
    alpha_spectrum(graph, UnitPhase::one())
}

pub fn spectral_radius(graph: &MixedGraph, alpha: UnitPhase) -> Result<f64, SpectraError> {
    alpha_spectrum(graph, alpha).map(|s| s.radius())
}

pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<bool, SpectraError> {
    Ok(a.max_gap(b)? <= tol)
}

/// Largest violation of the vertex summation rule
/// `λ x(u) = Σ_{u~v} x(v) + α Σ_{u→v} x(v) + ᾱ Σ_{u←v} x(v)`.
pub fn verify_eigenpair(
    graph: &MixedGraph,
    alpha: UnitPhase,
    pair: &EigenPair,
) -> Result<f64, SpectraError> {
    let n = graph.n();
    let x = &pair.vector;
    if x.len() != n {
        return Err(SpectraError::LengthMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let a = alpha.to_complex();
    let mut worst: f64 = 0.0;
    for u in 0..n {
        let mut digons = Complex64::new(0.0, 0.0);
        let mut outs = Complex64::new(0.0, 0.0);
        let mut ins = Complex64::new(0.0, 0.0);
        for (v, step) in graph.neighbors(u) {
            match step {
                Step::Digon => digons += x[v],
                Step::Forward => outs += x[v],
                Step::Backward => ins += x[v],
            }
        }
        let rhs = digons + a * outs + a.conj() * ins;
        worst = worst.max((x[u] * pair.lambda - rhs).norm());
    }
    Ok(worst)
}
