//! Covariant measurement construction: the rank-one seed state, finite
//! measurements from discrete orthogonality on a product Euler grid,
//! and certification of the orthogonality and completeness defects.

use std::f64::consts::PI;
use std::path::Path;

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::optimal::IrrepSpectrum;
use crate::quad::gauss_legendre;
use crate::sim::BlockState;
use crate::su2::{wigner_matrix, EulerZYZ, IrrepLabel, Rotation};

/// Residual threshold below which a design counts as certified.
pub const DESIGN_TOLERANCE: f64 = 1e-9;

/// One outcome of a finite covariant measurement: a rotation label and
/// its positive weight c_r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignPoint {
    pub rotation: Rotation,
    pub weight: f64,
}

/// Weighted rotations {(g_r, c_r)} defining the rank-one covariant
/// measurement O_r = c_r U(g_r)⊗I |Ψ⟩⟨Ψ| U†(g_r)⊗I, with Σ c_r = 1.
/// Valid (reproduces Haar averages of matrix-element products) for
/// irreps up to J = N/2 + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FinitePovm {
    n_spins: u32,
    j_max_twice: u32,
    points: Vec<DesignPoint>,
}

impl FinitePovm {
    pub fn new(n_spins: u32, j_max_twice: u32, points: Vec<DesignPoint>) -> FinitePovm {
        assert!(points.iter().all(|p| p.weight > 0.0), "weights must be positive");
        FinitePovm { n_spins, j_max_twice, points }
    }

    pub fn n_spins(&self) -> u32 {
        self.n_spins
    }

    pub fn j_max_twice(&self) -> u32 {
        self.j_max_twice
    }

    pub fn points(&self) -> &[DesignPoint] {
        &self.points
    }

    pub fn total_weight(&self) -> f64 {
        self.points.iter().map(|p| p.weight).sum()
    }
}

/// Certification record for the discrete orthogonality relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignReport {
    pub max_residual: f64,
    pub pairs_checked: u64,
    pub j_max_twice: u32,
}

/// The measurement seed |Ψ⟩ = Σ_{j,m} √d_j |jm⟩_A|jm⟩_B, stored as one
/// √d_j·I block per irrep. Deliberately unnormalized.
pub fn seed_state(n_spins: u32) -> Result<BlockState> {
    let spectrum = IrrepSpectrum::new(n_spins)?;
    let blocks = spectrum
        .labels()
        .iter()
        .map(|label| {
            let scale = Complex64::new((label.dim() as f64).sqrt(), 0.0);
            Array2::eye(label.dim()).mapv(|v: f64| scale * v)
        })
        .collect();
    Ok(BlockState::new(spectrum, blocks))
}

/// Grid sizes of the product design for N spins: uniform α and γ grids
/// of 2·2J + 1 points and ⌈J⌉ + 1 Gauss-Legendre nodes in cos β, with
/// J = N/2 + 1 (2J = N + 2 is always an integer).
pub fn product_grid_sizes(n_spins: u32) -> (usize, usize, usize) {
    let two_j_max = n_spins as usize + 2;
    let n_alpha = 2 * two_j_max + 1;
    let n_beta = (two_j_max + 1) / 2 + 1; // ⌈J⌉ + 1
    (n_alpha, n_beta, n_alpha)
}

/// Build a finite covariant measurement from a product Euler grid and
/// certify it: the uniform α/γ grids annihilate every integer frequency
/// up to 2J and Gauss-Legendre integrates the polynomial β factor
/// exactly, so the discrete orthogonality holds to roundoff for all
/// same-parity irrep pairs with j, l <= J.
pub fn build_product_design(n_spins: u32) -> Result<FinitePovm> {
    if n_spins == 0 {
        return Err(FrameError::ZeroSpins);
    }
    let j_max_twice = n_spins + 2;
    let (n_alpha, n_beta, n_gamma) = product_grid_sizes(n_spins);
    let (beta_nodes, beta_weights) = gauss_legendre(n_beta);

    let mut points = Vec::with_capacity(n_alpha * n_beta * n_gamma);
    let mut total = 0.0;
    for a in 0..n_alpha {
        let alpha = 2.0 * PI * a as f64 / n_alpha as f64;
        for (x, w) in beta_nodes.iter().zip(&beta_weights) {
            let beta = x.clamp(-1.0, 1.0).acos();
            for c in 0..n_gamma {
                let gamma = 2.0 * PI * c as f64 / n_gamma as f64;
                let rotation = EulerZYZ { alpha, beta, gamma }.to_rotation().canonicalized();
                points.push(DesignPoint { rotation, weight: *w });
                total += w;
            }
        }
    }
    for p in points.iter_mut() {
        p.weight /= total;
    }

    let povm = FinitePovm::new(n_spins, j_max_twice, points);
    let report = verify_design(&povm, j_max_twice)?;
    if report.max_residual > DESIGN_TOLERANCE {
        return Err(FrameError::Certification {
            residual: report.max_residual,
            tolerance: DESIGN_TOLERANCE,
        });
    }
    Ok(povm)
}

/// Irreps of the N-parity family up to j_max_twice.
fn parity_family(n_spins: u32, j_max_twice: u32) -> Vec<IrrepLabel> {
    (n_spins % 2..=j_max_twice)
        .step_by(2)
        .map(IrrepLabel::from_two_j)
        .collect()
}

/// Measure the worst-case defect of the discrete orthogonality relation
/// Σ_r c_r D^j_{mm'}(g_r) D^l*_{nn'}(g_r) = δ^{jl} δ_{mn} δ_{m'n'}/(2j+1)
/// over all same-parity irrep pairs with 2j, 2l <= j_max_twice. Weights
/// are taken as given (Σ c_r = 1 makes the normalization C_J = 1).
pub fn verify_design(povm: &FinitePovm, j_max_twice: u32) -> Result<DesignReport> {
    let family = parity_family(povm.n_spins(), j_max_twice);
    // flattened D^j(g_r) per irrep per point
    let mut blocks: Vec<Vec<Vec<Complex64>>> = Vec::with_capacity(family.len());
    for &j in &family {
        let mut per_point = Vec::with_capacity(povm.points().len());
        for p in povm.points() {
            per_point.push(wigner_matrix(j, &p.rotation)?.matrix.iter().copied().collect());
        }
        blocks.push(per_point);
    }

    let mut max_residual: f64 = 0.0;
    let mut pairs_checked: u64 = 0;
    for (ji, j) in family.iter().enumerate() {
        let dj_sq = j.dim() * j.dim();
        for (li, l) in family.iter().enumerate() {
            let dl_sq = l.dim() * l.dim();
            let mut acc = vec![Complex64::new(0.0, 0.0); dj_sq * dl_sq];
            for (r, p) in povm.points().iter().enumerate() {
                let vj = &blocks[ji][r];
                let vl = &blocks[li][r];
                for (a, &va) in vj.iter().enumerate() {
                    let row = &mut acc[a * dl_sq..(a + 1) * dl_sq];
                    let scaled = va * p.weight;
                    for (slot, &vb) in row.iter_mut().zip(vl.iter()) {
                        *slot += scaled * vb.conj();
                    }
                }
            }
            for a in 0..dj_sq {
                for b in 0..dl_sq {
                    // flattened index a = m·d_j + m', b = n·d_l + n'
                    let target = if ji == li && a == b {
                        1.0 / j.dim() as f64
                    } else {
                        0.0
                    };
                    let defect = (acc[a * dl_sq + b] - target).norm();
                    max_residual = max_residual.max(defect);
                    pairs_checked += 1;
                }
            }
        }
    }
    Ok(DesignReport { max_residual, pairs_checked, j_max_twice })
}

/// Defect ‖Σ_r O_r − I‖_max of the measurement on the explicit signal
/// subspace (dimension Σ_j d_j²), by materializing every rank-one
/// element. Limited to N <= 4.
pub fn completeness_check(n_spins: u32, povm: &FinitePovm) -> Result<f64> {
    if n_spins > 4 {
        return Err(FrameError::DimensionGuard { n_spins });
    }
    let spectrum = IrrepSpectrum::new(n_spins)?;
    let dim: usize = spectrum.labels().iter().map(|j| j.dim() * j.dim()).sum();

    let mut sum = Array2::<Complex64>::zeros((dim, dim));
    for p in povm.points() {
        let psi = crate::sim::rotated_seed_state(&spectrum, &p.rotation)?.to_vector();
        for (row, &vr) in psi.iter().enumerate() {
            let scaled = vr * p.weight;
            for (col, &vc) in psi.iter().enumerate() {
                sum[(row, col)] += scaled * vc.conj();
            }
        }
    }
    let mut defect: f64 = 0.0;
    for row in 0..dim {
        for col in 0..dim {
            let target = if row == col { 1.0 } else { 0.0 };
            defect = defect.max((sum[(row, col)] - target).norm());
        }
    }
    Ok(defect)
}

/// On-disk schema for a certified design.
#[derive(Debug, Serialize, Deserialize)]
struct DesignFile {
    n_spins: u32,
    j_max_twice: u32,
    points: Vec<DesignFilePoint>,
    residual: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct DesignFilePoint {
    q: [f64; 4],
    weight: f64,
}

/// Write a design with its certified residual. Quaternions are stored
/// on the w >= 0 hemisphere and weights sum to 1.
pub fn save_design(povm: &FinitePovm, residual: f64, path: &Path) -> Result<()> {
    let file = DesignFile {
        n_spins: povm.n_spins(),
        j_max_twice: povm.j_max_twice(),
        points: povm
            .points()
            .iter()
            .map(|p| {
                let q = p.rotation.canonicalized();
                DesignFilePoint { q: [q.w, q.x, q.y, q.z], weight: p.weight }
            })
            .collect(),
        residual,
    };
    let json = serde_json::to_string_pretty(&file)?;
    std::fs::write(path, json)?;
    Ok(())
}

/// Load a design file and re-certify it against [`DESIGN_TOLERANCE`].
pub fn load_design(path: &Path, expected_spins: u32) -> Result<FinitePovm> {
    let text = std::fs::read_to_string(path)?;
    let file: DesignFile = serde_json::from_str(&text)?;
    if file.n_spins != expected_spins {
        return Err(FrameError::DesignMismatch { file: file.n_spins, expected: expected_spins });
    }
    let points = file
        .points
        .iter()
        .map(|p| DesignPoint {
            rotation: Rotation::new(p.q[0], p.q[1], p.q[2], p.q[3]),
            weight: p.weight,
        })
        .collect();
    let povm = FinitePovm::new(file.n_spins, file.j_max_twice, points);
    let report = verify_design(&povm, povm.j_max_twice())?;
    if report.max_residual > DESIGN_TOLERANCE {
        return Err(FrameError::Certification {
            residual: report.max_residual,
            tolerance: DESIGN_TOLERANCE,
        });
    }
    Ok(povm)
}
