//! Saturation of the optimum by the continuous covariant measurement.
//! For the optimal amplitudes, the Haar-averaged mean character
//!
//!   ⟨χ₁⟩ = (1/π) ∫ χ₁(ω) (Σ_j a_j χ_j(ω))² sin²(ω/2) dω
//!
//! computed by Gauss–Legendre quadrature must equal the eigenvalue
//! bound 1 + 2cos(2π/(N+3)) exactly: the covariant strategy loses
//! nothing relative to the abstract optimum.

use frame_align::{chi1_max_closed, chi1_quadrature, optimal_coeffs};

fn main() {
    println!("{:>4} {:>18} {:>18} {:>10}", "N", "quadrature", "closed form", "defect");
    for n in 1..=12u32 {
        let coeffs = optimal_coeffs(n).unwrap();
        let quad = chi1_quadrature(&coeffs);
        let closed = chi1_max_closed(n);
        println!("{n:>4} {quad:>18.14} {closed:>18.14} {:>10.2e}", (quad - closed).abs());
    }
}
