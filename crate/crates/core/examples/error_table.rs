//! Closed-form optima for the alignment protocol: for each number of
//! spin pairs N, the best achievable mean character ⟨χ₁⟩, the minimal
//! mean trihedron error ⟨h⟩ = 6 − 2⟨χ₁⟩, the per-axis angular error
//! ⟨h⟩/12, and the mean fidelity 1 − ⟨h⟩/8.
//!
//! The error falls off as 8π²/N², a quadratic improvement over sending
//! N unentangled spins.

use frame_align::{chi1_max_closed, mean_fidelity, min_error_closed, per_axis_error};

fn main() {
    println!(
        "{:>4} {:>14} {:>14} {:>14} {:>14}",
        "N", "chi1_max", "mean_error", "per_axis", "fidelity"
    );
    for n in [1u32, 2, 3, 4, 5, 6, 8, 10, 20, 50, 100] {
        println!(
            "{n:>4} {:>14.10} {:>14.10} {:>14.10} {:>14.10}",
            chi1_max_closed(n),
            min_error_closed(n),
            per_axis_error(n),
            mean_fidelity(n)
        );
    }
    let n = 100u32;
    let asymptote = 8.0 * std::f64::consts::PI.powi(2) / (n as f64).powi(2);
    println!(
        "\nat N = {n}: error {:.6} vs asymptote 8π²/N² = {asymptote:.6}",
        min_error_closed(n)
    );
}
