//! Signal states, outcome probabilities (character path and explicit
//! dense-matrix oracle), Monte Carlo protocol trials, and the class-angle
//! quadrature for the averaged χ₁.

use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::optimal::{min_error_closed, CoefficientVector, IrrepSpectrum};
use crate::povm::FinitePovm;
use crate::quad::gauss_legendre_on;
use crate::su2::{
    character, class_angle, haar_sample, holevo_error, wigner_matrix, IrrepLabel, Rotation,
};

/// Bipartite state stored as one d_j x d_j coefficient block per irrep:
/// |state⟩ = Σ_j Σ_{mm'} (C_j)_{mm'} |jm⟩_A |jm'⟩_B.
///
/// Rows and columns follow m = j, j-1, ..., -j, matching the Wigner
/// matrix convention.
#[derive(Debug, Clone)]
pub struct BlockState {
    spectrum: IrrepSpectrum,
    blocks: Vec<Array2<Complex64>>,
}

impl BlockState {
    pub fn new(spectrum: IrrepSpectrum, blocks: Vec<Array2<Complex64>>) -> BlockState {
        assert_eq!(spectrum.len(), blocks.len(), "one block per irrep");
        for (label, block) in spectrum.labels().iter().zip(&blocks) {
            assert_eq!(block.nrows(), label.dim());
            assert_eq!(block.ncols(), label.dim());
        }
        BlockState { spectrum, blocks }
    }

    pub fn spectrum(&self) -> &IrrepSpectrum {
        &self.spectrum
    }

    pub fn blocks(&self) -> &[Array2<Complex64>] {
        &self.blocks
    }

    /// Inner product ⟨self|other⟩ = Σ_j tr(C_j† C'_j).
    pub fn inner(&self, other: &BlockState) -> Complex64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(c, cp)| c.iter().zip(cp.iter()).map(|(a, b)| a.conj() * b).sum::<Complex64>())
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    /// Flatten to a dense vector on the signal subspace: irreps in
    /// spectrum order (j descending), each block row-major with m
    /// descending. This fixes the basis used by the explicit oracle.
    pub fn to_vector(&self) -> Vec<Complex64> {
        self.blocks.iter().flat_map(|b| b.iter().copied()).collect()
    }
}

/// The rotated signal state |Φ(g)⟩ with blocks (a_j/√d_j) D^j(g).
pub fn signal_state(coeffs: &CoefficientVector, g: &Rotation) -> Result<BlockState> {
    let spectrum = coeffs.spectrum().clone();
    let mut blocks = Vec::with_capacity(spectrum.len());
    for (label, &a) in spectrum.labels().iter().zip(coeffs.amplitudes()) {
        let d = wigner_matrix(*label, g)?;
        let scale = Complex64::new(a / (label.dim() as f64).sqrt(), 0.0);
        blocks.push(d.matrix.mapv(|v| v * scale));
    }
    Ok(BlockState::new(spectrum, blocks))
}

/// Overlap ⟨Ψ(g_r)|Φ(g)⟩ = Σ_j a_j χ_j(ω) with ω the class angle of
/// g_r⁻¹ g. Real because characters are real class functions.
pub fn amplitude(coeffs: &CoefficientVector, gr: &Rotation, g: &Rotation) -> f64 {
    let omega = class_angle(&gr.inverse().compose(g));
    coeffs
        .spectrum()
        .labels()
        .iter()
        .zip(coeffs.amplitudes())
        .map(|(j, &a)| a * character(*j, omega))
        .sum()
}

/// Outcome distribution p_r = c_r · ⟨Ψ(g_r)|Φ(g)⟩² over the finite
/// measurement. Sums to 1 up to the design residual.
pub fn outcome_probabilities(
    coeffs: &CoefficientVector,
    povm: &FinitePovm,
    g: &Rotation,
) -> Vec<f64> {
    povm.points()
        .iter()
        .map(|p| {
            let amp = amplitude(coeffs, &p.rotation, g);
            p.weight * amp * amp
        })
        .collect()
}

/// Brute-force probability of one outcome by materializing both states
/// as dense vectors on the signal subspace. Independent of the
/// character path; limited to N <= 4.
pub fn explicit_probability(
    coeffs: &CoefficientVector,
    povm: &FinitePovm,
    outcome: usize,
    g: &Rotation,
) -> Result<f64> {
    let n_spins = coeffs.n_spins();
    if n_spins > 4 {
        return Err(FrameError::DimensionGuard { n_spins });
    }
    let point = &povm.points()[outcome];
    let seed_rotated = rotated_seed_state(coeffs.spectrum(), &point.rotation)?;
    let signal = signal_state(coeffs, g)?;
    let bra = seed_rotated.to_vector();
    let ket = signal.to_vector();
    let overlap: Complex64 = bra.iter().zip(&ket).map(|(a, b)| a.conj() * b).sum();
    Ok(point.weight * overlap.norm_sqr())
}

/// |Ψ(g_r)⟩: the measurement seed rotated by g_r, blocks √d_j D^j(g_r).
pub fn rotated_seed_state(spectrum: &IrrepSpectrum, gr: &Rotation) -> Result<BlockState> {
    let mut blocks = Vec::with_capacity(spectrum.len());
    for label in spectrum.labels() {
        let d = wigner_matrix(*label, gr)?;
        let scale = Complex64::new((label.dim() as f64).sqrt(), 0.0);
        blocks.push(d.matrix.mapv(|v| v * scale));
    }
    Ok(BlockState::new(spectrum.clone(), blocks))
}

/// Result of a seeded Monte Carlo run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationSummary {
    pub n_spins: u32,
    pub trials: u64,
    pub seed: u64,
    pub design_size: usize,
    pub mean_h: f64,
    pub stderr_h: Option<f64>,
    pub analytic_h: f64,
    pub z_score: Option<f64>,
}

/// Run the full protocol: per trial draw a Haar-random g, sample an
/// outcome from the measurement statistics, and score the squared
/// trihedron distance between g and the outcome's label g_r (Bob's
/// guess is exactly that label).
///
/// Deterministic given the seed. `analytic_h` is the closed-form
/// minimal error for this N, which the empirical mean matches when the
/// coefficients are optimal.
pub fn run_trials(
    coeffs: &CoefficientVector,
    povm: &FinitePovm,
    trials: u64,
    seed: u64,
) -> Result<SimulationSummary> {
    if trials == 0 {
        return Err(FrameError::ZeroTrials);
    }
    if coeffs.n_spins() != povm.n_spins() {
        return Err(FrameError::DesignMismatch {
            file: povm.n_spins(),
            expected: coeffs.n_spins(),
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..trials {
        let g = haar_sample(&mut rng);
        let probs = outcome_probabilities(coeffs, povm, &g);
        let r = sample_categorical(&probs, &mut rng);
        let h = holevo_error(&g, &povm.points()[r].rotation);
        sum += h;
        sum_sq += h * h;
    }
    let n = trials as f64;
    let mean_h = sum / n;
    let stderr_h = if trials >= 2 {
        let var = (sum_sq - n * mean_h * mean_h) / (n - 1.0);
        Some((var.max(0.0) / n).sqrt())
    } else {
        None
    };
    let analytic_h = min_error_closed(coeffs.n_spins());
    let z_score = stderr_h.map(|se| (mean_h - analytic_h) / se);
    Ok(SimulationSummary {
        n_spins: coeffs.n_spins(),
        trials,
        seed,
        design_size: povm.points().len(),
        mean_h,
        stderr_h,
        analytic_h,
        z_score,
    })
}

fn sample_categorical<R: Rng>(probs: &[f64], rng: &mut R) -> usize {
    let total: f64 = probs.iter().sum();
    let target = rng.gen::<f64>() * total;
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if target < acc {
            return i;
        }
    }
    probs.len() - 1
}

/// The group average ∫dg χ₁(g) |Σ_j a_j χ_j(g)|² reduced to the 1-D
/// class integral (1/π)∫₀^{2π} χ₁(ω)(Σ_j a_j χ_j(ω))² sin²(ω/2) dω,
/// by Gauss-Legendre quadrature. Cross-checks the tridiagonal
/// quadratic-form value 1 + aᵗMa.
pub fn chi1_quadrature(coeffs: &CoefficientVector) -> f64 {
    let n_nodes = (4 * (coeffs.n_spins() as usize + 2)).max(64);
    let (nodes, weights) = gauss_legendre_on(n_nodes, 0.0, 2.0 * std::f64::consts::PI);
    let chi1 = IrrepLabel::from_two_j(2);
    nodes
        .iter()
        .zip(&weights)
        .map(|(&omega, &w)| {
            let mix: f64 = coeffs
                .spectrum()
                .labels()
                .iter()
                .zip(coeffs.amplitudes())
                .map(|(j, &a)| a * character(*j, omega))
                .sum();
            let half_sin = (0.5 * omega).sin();
            w * character(chi1, omega) * mix * mix * half_sin * half_sin
                / std::f64::consts::PI
        })
        .sum()
}

/// Multiplicity of irrep j in the Clebsch-Gordan decomposition of N
/// spin-1/2 systems.
pub fn multiplicity(n_spins: u32, j: IrrepLabel) -> u64 {
    let n = n_spins as u64;
    let k = (n_spins - j.two_j()) as u64 / 2;
    let first = binomial(n, k);
    let second = if k >= 1 { binomial(n, k - 1) } else { 0 };
    first - second
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut result: u64 = 1;
    for i in 0..k.min(n - k) {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Overlap |⟨Ω^j| U_A(g) ⊗ I_B |Ω_v⟩| for a vector v over the n_j
/// multiplicity copies of irrep j, where |Ω^j⟩ spreads uniformly over
/// all copies and |Ω_v⟩ = Σ_α v_α |jm;α⟩|jm;α⟩. Returns the maximum
/// over the magnetic number m. Built from explicit dense matrices on
/// the d_j·n_j dimensional one-party space.
pub fn multiplicity_overlap(
    n_spins: u32,
    j: IrrepLabel,
    v: &[Complex64],
    g: &Rotation,
) -> Result<f64> {
    let n_j = multiplicity(n_spins, j) as usize;
    assert_eq!(v.len(), n_j, "one component per multiplicity copy");
    let d = j.dim();
    let dim_a = d * n_j;
    let dj = wigner_matrix(j, g)?;

    // U_A = D^j ⊗ I_{n_j} on the one-party basis |jm;α⟩, index m·n_j + α
    let mut u = Array2::<Complex64>::zeros((dim_a, dim_a));
    for mr in 0..d {
        for mc in 0..d {
            for alpha in 0..n_j {
                u[(mr * n_j + alpha, mc * n_j + alpha)] = dj.matrix[(mr, mc)];
            }
        }
    }

    let omega_norm = (dim_a as f64).sqrt();
    let mut max_overlap: f64 = 0.0;
    for m in 0..d {
        // |Ω_v⟩ at fixed m has the diagonal coefficient matrix
        // C[(m,α),(m,α)] = v_α; with ⟨Ω^j| = (I/√(d n_j))†, the overlap
        // is tr(U C)/√(d n_j)
        let mut c = Array2::<Complex64>::zeros((dim_a, dim_a));
        for (alpha, &val) in v.iter().enumerate() {
            c[(m * n_j + alpha, m * n_j + alpha)] = val;
        }
        let trace: Complex64 = (0..dim_a)
            .map(|a| (0..dim_a).map(|b| u[(a, b)] * c[(b, a)]).sum::<Complex64>())
            .sum();
        max_overlap = max_overlap.max((trace / omega_norm).norm());
    }
    Ok(max_overlap)
}

/// Executable witness that the uniformly-spread multiplicity state
/// behaves as if the irrep occurred once: for every j with n_j > 1,
/// random unit vectors orthogonal to (1,...,1) give vanishing overlap
/// with the rotated uniform state. Returns the maximum overlap found
/// over 20 Haar rotations, all orthogonal directions, and all m.
pub fn multiplicity_check<R: Rng>(n_spins: u32, rng: &mut R) -> Result<f64> {
    if !(3..=4).contains(&n_spins) {
        return Err(FrameError::MultiplicityRange { n_spins });
    }
    let spectrum = IrrepSpectrum::new(n_spins)?;
    let mut worst: f64 = 0.0;
    for &j in spectrum.labels() {
        let n_j = multiplicity(n_spins, j) as usize;
        if n_j < 2 {
            continue;
        }
        let vs = orthogonal_complement_basis(n_j, rng);
        for _ in 0..20 {
            let g = haar_sample(rng);
            for v in &vs {
                worst = worst.max(multiplicity_overlap(n_spins, j, v, &g)?);
            }
        }
    }
    Ok(worst)
}

/// Random orthonormal basis of the subspace of C^n orthogonal to
/// (1,...,1), built by Gram-Schmidt from Gaussian vectors.
fn orthogonal_complement_basis<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    use rand_distr::StandardNormal;
    let ones_norm = (n as f64).sqrt();
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n - 1);
    while basis.len() < n - 1 {
        let mut v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        // project out (1,...,1)/√n
        let mean: Complex64 = v.iter().sum::<Complex64>() / ones_norm;
        for entry in v.iter_mut() {
            *entry -= mean / ones_norm;
        }
        for prev in &basis {
            let overlap: Complex64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
            for (entry, p) in v.iter_mut().zip(prev) {
                *entry -= overlap * p;
            }
        }
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            basis.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    basis
}
