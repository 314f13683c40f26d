//! Alignment of spatial reference frames through a shared maximally
//! entangled state of N spin pairs.
//!
//! The sender encodes the relative orientation by locking her half of
//! the entangled state to her frame; the receiver measures both halves
//! with a covariant measurement. This crate provides:
//!
//! - [`su2`]: rotation-group primitives (quaternions, Euler angles, Haar
//!   sampling, characters, Wigner matrices, the trihedron error metric);
//! - [`optimal`]: the tridiagonal quadratic form whose top eigenvector
//!   gives the optimal irrep amplitudes, with closed-form optima;
//! - [`povm`]: finite covariant measurements built from discrete
//!   orthogonality on product Euler grids, with certification;
//! - [`sim`]: signal states, outcome statistics (character path plus an
//!   explicit dense oracle), and seeded Monte Carlo protocol runs;
//! - [`cli`]: the command-line front end used by the `frame-align` binary.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod error;
pub mod optimal;
pub mod povm;
pub mod quad;
pub mod sim;
pub mod su2;

pub use error::{FrameError, Result};
pub use optimal::{
    build_m, charpoly_eval, chi1_max_closed, lambda_max_numeric, mean_fidelity, min_error_closed,
    optimal_coeffs, per_axis_error, CoefficientVector, IrrepSpectrum, TridiagonalSpec,
};
pub use povm::{
    build_product_design, completeness_check, seed_state, verify_design, DesignPoint,
    DesignReport, FinitePovm,
};
pub use sim::{
    amplitude, chi1_quadrature, explicit_probability, multiplicity_check, outcome_probabilities,
    run_trials, signal_state, BlockState, SimulationSummary,
};
pub use su2::{
    character, character_sq_identity, class_angle, haar_sample, holevo_error,
    holevo_error_character, rotation_to_matrix, wigner_d_beta, wigner_matrix, EulerZYZ,
    IrrepLabel, Rotation, WignerBlock,
};
