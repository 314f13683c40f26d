//! Seeded Monte Carlo run of the full protocol: draw a Haar-random
//! rotation, form the signal state, sample a measurement outcome from
//! the finite covariant design, guess the rotation attached to that
//! outcome, and score the trihedron error between guess and truth.
//! The empirical mean must agree with the closed-form optimum within
//! statistical error (|z| ≤ 3).

use frame_align::{build_product_design, optimal_coeffs, run_trials};

fn main() {
    for n_spins in [1u32, 2, 4] {
        let coeffs = optimal_coeffs(n_spins).unwrap();
        let povm = build_product_design(n_spins).unwrap();
        let summary = run_trials(&coeffs, &povm, 50_000, 7).unwrap();
        println!(
            "N = {n_spins}: mean error {:.5} ± {:.5}, analytic {:.5}, z = {:+.2}",
            summary.mean_h,
            summary.stderr_h.unwrap(),
            summary.analytic_h,
            summary.z_score.unwrap()
        );
    }

    // The summary serializes to the same JSON the CLI emits.
    let coeffs = optimal_coeffs(2).unwrap();
    let povm = build_product_design(2).unwrap();
    let summary = run_trials(&coeffs, &povm, 1_000, 42).unwrap();
    println!("\n{}", serde_json::to_string_pretty(&summary).unwrap());
}
