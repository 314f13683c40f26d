//! SU(2) primitives: unit quaternions, Euler angles, Haar sampling,
//! characters, Wigner matrices, and the frame-alignment error metric.
//!
//! Conventions used throughout:
//!
//! - A group element is the unit quaternion q = (w, x, y, z) with
//!   spin-1/2 matrix U = w·I - i(x·σx + y·σy + z·σz).
//! - Active ZYZ Euler angles: U(α, β, γ) = e^{-iαJz} e^{-iβJy} e^{-iγJz}.
//! - Wigner matrices follow D^j_{mm'}(α,β,γ) = e^{-imα} d^j_{mm'}(β) e^{-im'γ},
//!   rows and columns indexed by m = j, j-1, ..., -j.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};

/// Largest supported 2j for Wigner matrices (log-factorial stability cap).
pub const MAX_TWO_J: u32 = 64;

/// An SU(2) element stored as a unit quaternion (w, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rotation {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Rotation {
    pub const IDENTITY: Rotation = Rotation { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    /// Construct from raw components, normalizing to unit length.
    ///
    /// Panics on a zero quaternion; all call sites construct from
    /// geometrically meaningful data.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Rotation {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        assert!(n > 1e-300, "zero quaternion");
        Rotation { w: w / n, x: x / n, y: y / n, z: z / n }
    }

    /// Rotation by `angle` about the (normalized) axis.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Rotation {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        assert!(n > 1e-300, "zero axis");
        let (s, c) = (0.5 * angle).sin_cos();
        Rotation::new(c, s * axis[0] / n, s * axis[1] / n, s * axis[2] / n)
    }

    /// Quaternion (group) composition: `self` applied after `other`.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        let (a0, a1, a2, a3) = (self.w, self.x, self.y, self.z);
        let (b0, b1, b2, b3) = (other.w, other.x, other.y, other.z);
        Rotation::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }

    /// Group inverse (quaternion conjugate).
    pub fn inverse(&self) -> Rotation {
        Rotation { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// Flip to the w >= 0 hemisphere of the double cover.
    pub fn canonicalized(&self) -> Rotation {
        if self.w < 0.0 {
            Rotation { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
        } else {
            *self
        }
    }

    /// The antipodal lift -q (same SO(3) rotation).
    pub fn negated(&self) -> Rotation {
        Rotation { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// ZYZ Euler angles (radians): α ∈ [0, 2π), β ∈ [0, π], γ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerZYZ {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EulerZYZ {
    pub fn to_rotation(&self) -> Rotation {
        let qz_a = Rotation::from_axis_angle([0.0, 0.0, 1.0], self.alpha);
        let qy_b = Rotation::from_axis_angle([0.0, 1.0, 0.0], self.beta);
        let qz_g = Rotation::from_axis_angle([0.0, 0.0, 1.0], self.gamma);
        qz_a.compose(&qy_b).compose(&qz_g)
    }

    /// Extract ZYZ angles from a rotation. At the gimbal degeneracies
    /// β ∈ {0, π} the split between α and γ is fixed by γ = 0.
    pub fn from_rotation(g: &Rotation) -> EulerZYZ {
        let (phi1, beta, phi2) = half_angle_phases(g);
        let two_pi = 2.0 * std::f64::consts::PI;
        let alpha = (phi1 + phi2).rem_euclid(two_pi);
        let gamma = (phi1 - phi2).rem_euclid(two_pi);
        EulerZYZ { alpha, beta, gamma }
    }
}

/// Decompose a quaternion into (φ1, β, φ2) with φ1 = (α+γ)/2,
/// φ2 = (α-γ)/2. The half-angle phases preserve the SU(2) lift, which
/// matters for half-integer representations.
fn half_angle_phases(g: &Rotation) -> (f64, f64, f64) {
    let cos_half = (g.w * g.w + g.z * g.z).sqrt();
    let sin_half = (g.x * g.x + g.y * g.y).sqrt();
    let beta = 2.0 * sin_half.atan2(cos_half);
    let phi1 = if cos_half > 0.0 { g.z.atan2(g.w) } else { 0.0 };
    let phi2 = if sin_half > 0.0 { (-g.x).atan2(g.y) } else { 0.0 };
    (phi1, beta, phi2)
}

/// An SU(2) irrep label storing 2j exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    two_j: u32,
}

impl IrrepLabel {
    pub fn from_two_j(two_j: u32) -> IrrepLabel {
        IrrepLabel { two_j }
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Representation dimension d_j = 2j + 1.
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// Magnetic numbers as 2m, descending: 2j, 2j-2, ..., -2j.
    pub fn two_m_values(&self) -> impl Iterator<Item = i32> + '_ {
        let two_j = self.two_j as i32;
        (0..self.dim() as i32).map(move |i| two_j - 2 * i)
    }
}

/// Class angle ω = 2·arccos(w) ∈ [0, 2π] of the stored quaternion lift.
pub fn class_angle(g: &Rotation) -> f64 {
    2.0 * g.w.clamp(-1.0, 1.0).acos()
}

/// Character χ_j(ω) = Σ_{m=-j}^{j} cos(mω).
///
/// The cosine sum is used everywhere; the equivalent ratio
/// sin(d_j ω/2)/sin(ω/2) appears only as a test oracle.
pub fn character(j: IrrepLabel, omega: f64) -> f64 {
    j.two_m_values().map(|two_m| (0.5 * two_m as f64 * omega).cos()).sum()
}

/// Evaluates both sides of χ²_{1/2}(ω) = 1 + χ₁(ω).
pub fn character_sq_identity(omega: f64) -> (f64, f64) {
    let half = character(IrrepLabel::from_two_j(1), omega);
    let one = character(IrrepLabel::from_two_j(2), omega);
    (half * half, 1.0 + one)
}

/// Haar-distributed rotation from four Gaussian deviates, canonicalized
/// to the w >= 0 hemisphere.
pub fn haar_sample<R: Rng>(rng: &mut R) -> Rotation {
    loop {
        let w: f64 = rng.sample(StandardNormal);
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        let z: f64 = rng.sample(StandardNormal);
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if n > 1e-8 {
            return Rotation::new(w, x, y, z).canonicalized();
        }
    }
}

/// Log-factorial table, ln(k!) for k = 0..=n.
fn ln_factorials(n: usize) -> Vec<f64> {
    let mut table = vec![0.0; n + 1];
    for k in 1..=n {
        table[k] = table[k - 1] + (k as f64).ln();
    }
    table
}

/// Small Wigner matrix d^j(β), real and orthogonal, in the convention
/// D^j_{mm'} = e^{-imα} d^j_{mm'}(β) e^{-im'γ}.
pub fn wigner_d_beta(j: IrrepLabel, beta: f64) -> Result<Array2<f64>> {
    if j.two_j() > MAX_TWO_J {
        return Err(FrameError::DegreeOverflow { two_j: j.two_j() });
    }
    let dim = j.dim();
    let two_j = j.two_j() as i32;
    let lnf = ln_factorials(2 * j.two_j() as usize + 2);
    let cos_half = (0.5 * beta).cos();
    let sin_half = (0.5 * beta).sin();
    let two_ms: Vec<i32> = j.two_m_values().collect();

    let mut d = Array2::zeros((dim, dim));
    for (row, &two_mr) in two_ms.iter().enumerate() {
        for (col, &two_mc) in two_ms.iter().enumerate() {
            // integer factorial arguments: j±m for row (m') and column (m)
            let jp_mr = ((two_j + two_mr) / 2) as usize;
            let jm_mr = ((two_j - two_mr) / 2) as usize;
            let jp_mc = ((two_j + two_mc) / 2) as usize;
            let jm_mc = ((two_j - two_mc) / 2) as usize;
            let log_prefactor =
                0.5 * (lnf[jp_mr] + lnf[jm_mr] + lnf[jp_mc] + lnf[jm_mc]);
            // m' - m is an integer for same-parity indices
            let mr_minus_mc = (two_mr - two_mc) / 2;

            let s_min = (-mr_minus_mc).max(0);
            let s_max = (jp_mc as i32).min(jm_mr as i32);
            let mut entry = 0.0;
            for s in s_min..=s_max {
                let sign = if (mr_minus_mc + s) % 2 == 0 { 1.0 } else { -1.0 };
                let log_denom = lnf[jp_mc - s as usize]
                    + lnf[s as usize]
                    + lnf[(mr_minus_mc + s) as usize]
                    + lnf[jm_mr - s as usize];
                let cos_pow = (jp_mc as i32 - s) + (jm_mr as i32 - s);
                let sin_pow = mr_minus_mc + 2 * s;
                entry += sign
                    * (log_prefactor - log_denom).exp()
                    * cos_half.powi(cos_pow)
                    * sin_half.powi(sin_pow);
            }
            d[(row, col)] = entry;
        }
    }
    Ok(d)
}

/// The matrix of a rotation in one irrep.
#[derive(Debug, Clone)]
pub struct WignerBlock {
    pub j: IrrepLabel,
    pub matrix: Array2<Complex64>,
}

/// Full Wigner matrix D^j(g), rows/columns indexed by m descending.
pub fn wigner_matrix(j: IrrepLabel, g: &Rotation) -> Result<WignerBlock> {
    let (phi1, beta, phi2) = half_angle_phases(g);
    let small_d = wigner_d_beta(j, beta)?;
    let dim = j.dim();
    let two_ms: Vec<i32> = j.two_m_values().collect();
    let mut matrix = Array2::zeros((dim, dim));
    for (row, &two_mr) in two_ms.iter().enumerate() {
        for (col, &two_mc) in two_ms.iter().enumerate() {
            // e^{-imα} e^{-im'γ} with α = φ1+φ2, γ = φ1-φ2; the sums
            // (m±m') are integers, so the phase is lift-faithful
            let phase = -0.5 * ((two_mr + two_mc) as f64 * phi1 + (two_mr - two_mc) as f64 * phi2);
            matrix[(row, col)] =
                Complex64::from_polar(small_d[(row, col)], phase);
        }
    }
    Ok(WignerBlock { j, matrix })
}

/// The 3x3 proper orthogonal matrix of the rotation; columns are the
/// images of the axes {x, y, z}.
pub fn rotation_to_matrix(g: &Rotation) -> [[f64; 3]; 3] {
    let (w, x, y, z) = (g.w, g.x, g.y, g.z);
    [
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]
}

/// Summed squared distance between the two transmitted trihedra,
/// Σ_a |n_a(g) - n_a(g')|², computed from the rotation matrices.
pub fn holevo_error(g: &Rotation, gr: &Rotation) -> f64 {
    let r1 = rotation_to_matrix(g);
    let r2 = rotation_to_matrix(gr);
    let mut h = 0.0;
    for col in 0..3 {
        for row in 0..3 {
            let d = r1[row][col] - r2[row][col];
            h += d * d;
        }
    }
    h
}

/// Same metric via 6 - 2χ₁ of the relative rotation; agrees with
/// [`holevo_error`] to roundoff.
pub fn holevo_error_character(g: &Rotation, gr: &Rotation) -> f64 {
    let rel = gr.inverse().compose(g);
    6.0 - 2.0 * character(IrrepLabel::from_two_j(2), class_angle(&rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::f64::consts::PI;

    fn j(two_j: u32) -> IrrepLabel {
        IrrepLabel::from_two_j(two_j)
    }

    /// Matrix exponential by scaling-and-squaring with a Taylor series.
    fn mat_exp(a: &Array2<Complex64>) -> Array2<Complex64> {
        let dim = a.nrows();
        let norm: f64 = a.iter().map(|x| x.norm()).sum();
        let squarings = (norm.log2().ceil().max(0.0) as u32) + 4;
        let scaled = a.mapv(|x| x / 2.0f64.powi(squarings as i32));
        let mut result = Array2::eye(dim);
        let mut term: Array2<Complex64> = Array2::eye(dim);
        for k in 1..=24 {
            term = term.dot(&scaled) / Complex64::new(k as f64, 0.0);
            result = result + &term;
        }
        for _ in 0..squarings {
            result = result.dot(&result);
        }
        result
    }

    /// Spin operator J_y in the m-descending basis.
    fn spin_jy(label: IrrepLabel) -> Array2<Complex64> {
        let dim = label.dim();
        let jv = label.j();
        let two_ms: Vec<i32> = label.two_m_values().collect();
        let mut jy = Array2::zeros((dim, dim));
        // raising: ⟨m+1|J_+|m⟩ = sqrt(j(j+1) - m(m+1)), row index m+1 is col-1
        for col in 1..dim {
            let m = two_ms[col] as f64 / 2.0;
            let c = (jv * (jv + 1.0) - m * (m + 1.0)).sqrt();
            jy[(col - 1, col)] = Complex64::new(0.0, -0.5) * c; // (J+ - J-)/2i
            jy[(col, col - 1)] = Complex64::new(0.0, 0.5) * c;
        }
        jy
    }

    #[test]
    fn rotation_stays_normalized() {
        let g1 = Rotation::new(0.3, -0.4, 0.5, 0.7);
        let g2 = Rotation::from_axis_angle([1.0, 2.0, -1.0], 1.234);
        assert!((g1.norm() - 1.0).abs() < 1e-12);
        assert!((g1.compose(&g2).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn compose_inverse_is_identity() {
        let g = Rotation::from_axis_angle([0.2, -0.8, 0.4], 2.1);
        let e = g.compose(&g.inverse()).canonicalized();
        assert!((e.w - 1.0).abs() < 1e-12);
        assert!(e.x.abs() < 1e-12 && e.y.abs() < 1e-12 && e.z.abs() < 1e-12);
    }

    #[test]
    fn class_angle_examples() {
        assert_eq!(class_angle(&Rotation::IDENTITY), 0.0);
        let z_pi = Rotation::new(0.0, 0.0, 0.0, 1.0);
        assert!((class_angle(&z_pi) - PI).abs() < 1e-12);
        let minus_identity = Rotation { w: -1.0, x: 0.0, y: 0.0, z: 0.0 };
        assert!((class_angle(&minus_identity) - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn character_examples() {
        assert!((character(j(2), 0.0) - 3.0).abs() < 1e-12);
        assert!(character(j(1), PI).abs() < 1e-12);
        assert!((character(j(2), 2.0 * PI / 5.0) - 1.6180339887).abs() < 1e-10);
    }

    #[test]
    fn character_matches_sine_ratio() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for two_j in 0..=12 {
            for _ in 0..50 {
                use rand::Rng;
                let omega: f64 = rng.gen_range(0.05..2.0 * PI - 0.05);
                let ratio = ((two_j as f64 + 1.0) * omega / 2.0).sin() / (omega / 2.0).sin();
                assert!(
                    (character(j(two_j), omega) - ratio).abs() < 1e-10,
                    "2j = {two_j}, ω = {omega}"
                );
                assert!(character(j(two_j), omega).abs() <= two_j as f64 + 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn character_sq_identity_examples() {
        let (a, b) = character_sq_identity(0.0);
        assert!((a - 4.0).abs() < 1e-12 && (b - 4.0).abs() < 1e-12);
        let (a, b) = character_sq_identity(PI);
        assert!(a.abs() < 1e-12 && b.abs() < 1e-12);
        let (a, b) = character_sq_identity(2.0 * PI / 3.0);
        assert!((a - 1.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    }

    #[test]
    fn haar_sample_is_normalized_and_canonical() {
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let g = haar_sample(&mut rng);
            assert!((g.norm() - 1.0).abs() < 1e-12);
            assert!(g.w >= 0.0);
        }
    }

    #[test]
    fn haar_character_moments() {
        // ∫χ₁ dg = 0 with unit variance; ∫χ_{1/2}χ_{3/2} dg = 0
        let mut rng = ChaCha12Rng::seed_from_u64(99);
        let samples = 100_000;
        let mut sum1 = 0.0;
        let mut sum_cross = 0.0;
        let mut sum_cross_sq = 0.0;
        for _ in 0..samples {
            let omega = class_angle(&haar_sample(&mut rng));
            sum1 += character(j(2), omega);
            let cross = character(j(1), omega) * character(j(3), omega);
            sum_cross += cross;
            sum_cross_sq += cross * cross;
        }
        let n = samples as f64;
        assert!((sum1 / n).abs() < 3.0 / n.sqrt(), "⟨χ₁⟩ = {}", sum1 / n);
        let mean_cross = sum_cross / n;
        let sigma = ((sum_cross_sq / n - mean_cross * mean_cross) / n).sqrt();
        assert!(mean_cross.abs() < 3.0 * sigma, "⟨χ½χ₃⟩ = {mean_cross}, σ̂ = {sigma}");
    }

    #[test]
    fn character_orthogonality_by_quadrature() {
        // (1/π)∫₀^{2π} χ_j χ_l sin²(ω/2) dω = δ_jl
        let (nodes, weights) = crate::quad::gauss_legendre_on(96, 0.0, 2.0 * PI);
        for two_j in 0..=12u32 {
            for two_l in 0..=12u32 {
                let integral: f64 = nodes
                    .iter()
                    .zip(&weights)
                    .map(|(&omega, &w)| {
                        let s = (omega / 2.0).sin();
                        w * character(j(two_j), omega) * character(j(two_l), omega) * s * s / PI
                    })
                    .sum();
                let expected = if two_j == two_l { 1.0 } else { 0.0 };
                assert!(
                    (integral - expected).abs() < 1e-9,
                    "2j = {two_j}, 2l = {two_l}: {integral}"
                );
            }
        }
    }

    #[test]
    fn clebsch_gordan_series_pointwise() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        use rand::Rng;
        for _ in 0..100 {
            let omega: f64 = rng.gen_range(0.0..2.0 * PI);
            for (two_j, two_l) in [(1u32, 1u32), (2, 2), (1, 2), (3, 2), (4, 3)] {
                let product = character(j(two_j), omega) * character(j(two_l), omega);
                let series: f64 = ((two_j as i32 - two_l as i32).unsigned_abs()
                    ..=(two_j + two_l))
                    .step_by(2)
                    .map(|two_k| character(j(two_k), omega))
                    .sum();
                assert!((product - series).abs() < 1e-10, "({two_j},{two_l}) at {omega}");
            }
        }
    }

    #[test]
    fn euler_round_trip_preserves_rotation_matrix() {
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for _ in 0..200 {
            let g = haar_sample(&mut rng);
            let angles = EulerZYZ::from_rotation(&g);
            let back = angles.to_rotation();
            let r1 = rotation_to_matrix(&g);
            let r2 = rotation_to_matrix(&back);
            for row in 0..3 {
                for col in 0..3 {
                    assert!((r1[row][col] - r2[row][col]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn euler_round_trip_at_gimbal_degeneracy() {
        for g in [
            Rotation::IDENTITY,
            Rotation::from_axis_angle([0.0, 0.0, 1.0], 0.7),
            Rotation::from_axis_angle([0.0, 1.0, 0.0], PI),
            Rotation::from_axis_angle([0.0, 0.0, 1.0], 1.1)
                .compose(&Rotation::from_axis_angle([0.0, 1.0, 0.0], PI)),
        ] {
            let back = EulerZYZ::from_rotation(&g).to_rotation();
            let r1 = rotation_to_matrix(&g);
            let r2 = rotation_to_matrix(&back);
            for row in 0..3 {
                for col in 0..3 {
                    assert!((r1[row][col] - r2[row][col]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn small_d_at_zero_is_identity() {
        for two_j in [0u32, 1, 2, 5, 8] {
            let d = wigner_d_beta(j(two_j), 0.0).unwrap();
            for row in 0..d.nrows() {
                for col in 0..d.ncols() {
                    let expected = if row == col { 1.0 } else { 0.0 };
                    assert!((d[(row, col)] - expected).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn small_d_spin_half_closed_form() {
        for beta in [0.0, 0.3, 1.2, PI / 2.0, 2.9, PI] {
            let d = wigner_d_beta(j(1), beta).unwrap();
            let (s, c) = (beta / 2.0).sin_cos();
            assert!((d[(0, 0)] - c).abs() < 1e-12);
            assert!((d[(0, 1)] + s).abs() < 1e-12);
            assert!((d[(1, 0)] - s).abs() < 1e-12);
            assert!((d[(1, 1)] - c).abs() < 1e-12);
        }
    }

    #[test]
    fn small_d_matches_matrix_exponential() {
        // d^j(β) = exp(-iβJ_y), checked through an independent Taylor oracle
        for two_j in [1u32, 2, 3, 4, 7] {
            for beta in [0.25, PI / 2.0, 1.9, 3.0] {
                let d = wigner_d_beta(j(two_j), beta).unwrap();
                let generator = spin_jy(j(two_j)).mapv(|x| x * Complex64::new(0.0, -beta));
                let exp = mat_exp(&generator);
                for row in 0..d.nrows() {
                    for col in 0..d.ncols() {
                        let diff = (exp[(row, col)] - Complex64::new(d[(row, col)], 0.0)).norm();
                        assert!(diff < 1e-12, "2j = {two_j}, β = {beta}, ({row},{col})");
                    }
                }
            }
        }
    }

    #[test]
    fn small_d_degree_overflow() {
        assert!(wigner_d_beta(j(66), 0.5).is_err());
        assert!(wigner_d_beta(j(64), 0.5).is_ok());
    }

    #[test]
    fn wigner_matrix_identity() {
        for two_j in [1u32, 2, 4] {
            let d = wigner_matrix(j(two_j), &Rotation::IDENTITY).unwrap();
            for row in 0..d.matrix.nrows() {
                for col in 0..d.matrix.ncols() {
                    let expected = if row == col { 1.0 } else { 0.0 };
                    assert!((d.matrix[(row, col)] - expected).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn wigner_spin_half_matches_quaternion() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..100 {
            let g = haar_sample(&mut rng);
            let d = wigner_matrix(j(1), &g).unwrap();
            let expected = [
                [Complex64::new(g.w, -g.z), Complex64::new(-g.y, -g.x)],
                [Complex64::new(g.y, -g.x), Complex64::new(g.w, g.z)],
            ];
            for row in 0..2 {
                for col in 0..2 {
                    assert!((d.matrix[(row, col)] - expected[row][col]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn wigner_trace_equals_character() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..100 {
            let g = haar_sample(&mut rng);
            let omega = class_angle(&g);
            for two_j in [1u32, 2, 3, 5] {
                let d = wigner_matrix(j(two_j), &g).unwrap();
                let trace: Complex64 = (0..d.matrix.nrows()).map(|i| d.matrix[(i, i)]).sum();
                assert!(trace.im.abs() < 1e-10);
                assert!((trace.re - character(j(two_j), omega)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn wigner_is_unitary_homomorphism() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        for _ in 0..50 {
            let g1 = haar_sample(&mut rng);
            let g2 = haar_sample(&mut rng);
            for two_j in [1u32, 2, 3, 6] {
                let d1 = wigner_matrix(j(two_j), &g1).unwrap().matrix;
                let d2 = wigner_matrix(j(two_j), &g2).unwrap().matrix;
                let d12 = wigner_matrix(j(two_j), &g1.compose(&g2)).unwrap().matrix;
                let product = d1.dot(&d2);
                let dim = d1.nrows();
                let unit = d1.dot(&d1.mapv(|x| x.conj()).reversed_axes());
                for row in 0..dim {
                    for col in 0..dim {
                        assert!((product[(row, col)] - d12[(row, col)]).norm() < 1e-10);
                        let expected = if row == col { 1.0 } else { 0.0 };
                        assert!((unit[(row, col)] - expected).norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_matrix_examples() {
        let r = rotation_to_matrix(&Rotation::IDENTITY);
        for row in 0..3 {
            for col in 0..3 {
                let expected = if row == col { 1.0 } else { 0.0 };
                assert!((r[row][col] - expected).abs() < 1e-12);
            }
        }
        let z_pi = rotation_to_matrix(&Rotation::from_axis_angle([0.0, 0.0, 1.0], PI));
        let expected = [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for row in 0..3 {
            for col in 0..3 {
                assert!((z_pi[row][col] - expected[row][col]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn holevo_error_examples() {
        let g = Rotation::from_axis_angle([0.3, 0.1, -0.9], 0.77);
        assert!(holevo_error(&g, &g).abs() < 1e-12);

        let z_pi = Rotation::from_axis_angle([0.0, 0.0, 1.0], PI);
        assert!((holevo_error(&z_pi, &Rotation::IDENTITY) - 8.0).abs() < 1e-12);

        let third = Rotation::from_axis_angle([0.0, 1.0, 0.0], 2.0 * PI / 3.0);
        assert!((holevo_error(&third, &Rotation::IDENTITY) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn holevo_paths_agree() {
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        for _ in 0..200 {
            let g = haar_sample(&mut rng);
            let gr = haar_sample(&mut rng);
            let h1 = holevo_error(&g, &gr);
            let h2 = holevo_error_character(&g, &gr);
            assert!((h1 - h2).abs() < 1e-10, "{h1} vs {h2}");
            assert!((0.0..=12.0 + 1e-12).contains(&h1));
        }
    }

    proptest! {
        #[test]
        fn rotation_matrix_is_special_orthogonal(
            w in -1.0f64..1.0, x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0
        ) {
            prop_assume!(w * w + x * x + y * y + z * z > 1e-6);
            let g = Rotation::new(w, x, y, z);
            let r = rotation_to_matrix(&g);
            for i in 0..3 {
                for k in 0..3 {
                    let dot: f64 = (0..3).map(|a| r[a][i] * r[a][k]).sum();
                    let expected = if i == k { 1.0 } else { 0.0 };
                    prop_assert!((dot - expected).abs() < 1e-12);
                }
            }
            let det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
            prop_assert!((det - 1.0).abs() < 1e-12);
        }

        #[test]
        fn sign_lift_leaves_rotation_matrix_unchanged(
            w in -1.0f64..1.0, x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0
        ) {
            prop_assume!(w * w + x * x + y * y + z * z > 1e-6);
            let g = Rotation::new(w, x, y, z);
            let r1 = rotation_to_matrix(&g);
            let r2 = rotation_to_matrix(&g.negated());
            for row in 0..3 {
                for col in 0..3 {
                    prop_assert!((r1[row][col] - r2[row][col]).abs() < 1e-14);
                }
            }
        }
    }
}
