//! The optimal signal state. Maximizing the mean character ⟨χ₁⟩ over
//! normalized irrep amplitudes a_j is an eigenproblem for a tridiagonal
//! matrix with unit off-diagonals (and one corner entry for even N).
//! Its top eigenvalue has the closed form 2cos(2π/(N+3)), and the
//! eigenvector components are sines on a uniform grid.
//!
//! This example builds the matrix, extracts the top eigenpair
//! numerically, and compares against the closed forms.

use std::f64::consts::PI;

use frame_align::{build_m, chi1_max_closed, lambda_max_numeric, optimal_coeffs};

fn main() {
    let n_spins = 6u32;
    let spec = build_m(n_spins).unwrap();
    println!("N = {n_spins}: {}x{} tridiagonal matrix, corner {}", spec.n, spec.n, spec.zeta);

    let mu = lambda_max_numeric(&spec);
    let closed = 2.0 * (2.0 * PI / (n_spins as f64 + 3.0)).cos();
    println!("top eigenvalue: {mu:.15}");
    println!("closed form:    {closed:.15}  (defect {:.2e})", (mu - closed).abs());
    println!("chi1_max = 1 + eigenvalue = {:.15}", chi1_max_closed(n_spins));

    let coeffs = optimal_coeffs(n_spins).unwrap();
    println!("\noptimal amplitudes (highest j first):");
    for (label, &a) in coeffs.spectrum().labels().iter().zip(coeffs.amplitudes()) {
        let j = label.two_j() as f64 / 2.0;
        let closed_a = 2.0 / (n_spins as f64 + 3.0).sqrt()
            * ((label.two_j() as f64 + 1.0) * PI / (n_spins as f64 + 3.0)).sin();
        println!("  j = {j:>4}: a_j = {a:.12}  (closed form {closed_a:.12})");
    }
}
