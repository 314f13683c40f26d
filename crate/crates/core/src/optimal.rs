//! The optimal signal state: tridiagonal quadratic form, its eigenproblem
//! solved through the Chebyshev-recurrence characteristic polynomial, and
//! the closed-form optima derived from it.

use std::f64::consts::PI;

use ndarray::Array2;

use crate::error::{FrameError, Result};
use crate::su2::IrrepLabel;

/// The irreps present in the entangled state of N spin-1/2 pairs:
/// 2j = N, N-2, ..., down to 0 (N even) or 1 (N odd), descending.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrepSpectrum {
    n_spins: u32,
    labels: Vec<IrrepLabel>,
}

impl IrrepSpectrum {
    pub fn new(n_spins: u32) -> Result<IrrepSpectrum> {
        if n_spins == 0 {
            return Err(FrameError::ZeroSpins);
        }
        let labels = (0..)
            .map(|k| n_spins as i64 - 2 * k)
            .take_while(|&two_j| two_j >= 0)
            .map(|two_j| IrrepLabel::from_two_j(two_j as u32))
            .collect();
        Ok(IrrepSpectrum { n_spins, labels })
    }

    pub fn n_spins(&self) -> u32 {
        self.n_spins
    }

    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Symmetric tridiagonal matrix with zero diagonal, unit off-diagonals,
/// and corner entry ζ (-1 for N even, 0 for N odd).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TridiagonalSpec {
    pub n: usize,
    pub zeta: f64,
}

impl TridiagonalSpec {
    /// Dense form, mainly for residual checks.
    pub fn to_matrix(&self) -> Array2<f64> {
        let mut m = Array2::zeros((self.n, self.n));
        for i in 0..self.n.saturating_sub(1) {
            m[(i, i + 1)] = 1.0;
            m[(i + 1, i)] = 1.0;
        }
        m[(self.n - 1, self.n - 1)] = self.zeta;
        m
    }
}

/// Positive amplitudes over the spectrum, highest j first, Σ a_j² = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    spectrum: IrrepSpectrum,
    a: Vec<f64>,
}

impl CoefficientVector {
    /// Build from raw amplitudes aligned with the spectrum, normalizing.
    pub fn new(spectrum: IrrepSpectrum, a: Vec<f64>) -> CoefficientVector {
        assert_eq!(spectrum.len(), a.len(), "amplitude/spectrum length mismatch");
        let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(norm > 0.0, "zero amplitude vector");
        let a = a.into_iter().map(|x| x / norm).collect();
        CoefficientVector { spectrum, a }
    }

    pub fn spectrum(&self) -> &IrrepSpectrum {
        &self.spectrum
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.a
    }

    pub fn n_spins(&self) -> u32 {
        self.spectrum.n_spins()
    }
}

/// The quadratic-form matrix for N spins.
pub fn build_m(n_spins: u32) -> Result<TridiagonalSpec> {
    let spectrum = IrrepSpectrum::new(n_spins)?;
    let zeta = if n_spins % 2 == 0 { -1.0 } else { 0.0 };
    Ok(TridiagonalSpec { n: spectrum.len(), zeta })
}

/// Characteristic polynomial P_n(λ) = det(M + 2λI) via the recurrence
/// P_k = 2λ P_{k-1} - P_{k-2}, P_0 = 1, P_1 = 2λ + ζ.
pub fn charpoly_eval(spec: &TridiagonalSpec, lambda: f64) -> f64 {
    let mut p_prev = 1.0;
    let mut p = 2.0 * lambda + spec.zeta;
    for _ in 2..=spec.n {
        let p_next = 2.0 * lambda * p - p_prev;
        p_prev = p;
        p = p_next;
    }
    p
}

/// Largest eigenvalue of M, located by bisection on the sign changes of
/// the characteristic polynomial. Eigenvalues of M are μ = -2λ at the
/// roots of P_n, so the largest μ comes from the smallest root λ.
pub fn lambda_max_numeric(spec: &TridiagonalSpec) -> f64 {
    // Gershgorin bounds every |μ| by 2, so every root λ lies in [-1, 1].
    let grid = 64 * spec.n.max(4);
    let mut lo = -1.0;
    let mut f_lo = charpoly_eval(spec, lo);
    for k in 1..=grid {
        let hi = -1.0 + 2.0 * k as f64 / grid as f64;
        let f_hi = charpoly_eval(spec, hi);
        if f_lo == 0.0 {
            return -2.0 * lo;
        }
        if f_lo * f_hi <= 0.0 {
            let root = bisect(spec, lo, hi, f_lo);
            return -2.0 * root;
        }
        lo = hi;
        f_lo = f_hi;
    }
    unreachable!("characteristic polynomial has no root in [-1, 1]");
}

fn bisect(spec: &TridiagonalSpec, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let mut sign_lo = f_lo.signum();
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-14 {
            return mid;
        }
        let f_mid = charpoly_eval(spec, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == sign_lo {
            lo = mid;
            sign_lo = f_mid.signum();
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Closed-form maximum of the averaged χ₁: 1 + 2cos(2π/(N+3)).
pub fn chi1_max_closed(n_spins: u32) -> f64 {
    assert!(n_spins >= 1);
    1.0 + 2.0 * (2.0 * PI / (n_spins as f64 + 3.0)).cos()
}

/// Optimal amplitudes a_j = 2/√(N+3) · sin((2j+1)π/(N+3)).
pub fn optimal_coeffs(n_spins: u32) -> Result<CoefficientVector> {
    let spectrum = IrrepSpectrum::new(n_spins)?;
    let denom = n_spins as f64 + 3.0;
    let a = spectrum
        .labels()
        .iter()
        .map(|j| 2.0 / denom.sqrt() * ((j.two_j() as f64 + 1.0) * PI / denom).sin())
        .collect();
    Ok(CoefficientVector { spectrum, a })
}

/// Minimal mean error 4(1 - cos(2π/(N+3))).
pub fn min_error_closed(n_spins: u32) -> f64 {
    assert!(n_spins >= 1);
    4.0 * (1.0 - (2.0 * PI / (n_spins as f64 + 3.0)).cos())
}

/// Mean square error per transmitted axis, (3 - ⟨χ₁⟩)/6.
pub fn per_axis_error(n_spins: u32) -> f64 {
    (3.0 - chi1_max_closed(n_spins)) / 6.0
}

/// Optimal mean fidelity for the unitary-estimation reading of the
/// protocol: (1 + cos(2π/(N+3)))/2.
pub fn mean_fidelity(n_spins: u32) -> f64 {
    assert!(n_spins >= 1);
    0.5 * (1.0 + (2.0 * PI / (n_spins as f64 + 3.0)).cos())
}
