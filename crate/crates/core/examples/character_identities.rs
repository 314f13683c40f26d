//! Group-theoretic backbone of the protocol, checked numerically:
//!
//! - the product of two spin-1/2 characters decomposes as
//!   χ²_{1/2} = 1 + χ₁ (singlet plus triplet);
//! - the trihedron error metric h(g, g_r) = 6 − 2χ₁(ω) depends only on
//!   the class angle ω of the relative rotation, and the explicit
//!   3×3-matrix evaluation agrees with the character shortcut;
//! - Wigner matrices are unitary with trace equal to the character.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use frame_align::{
    character, character_sq_identity, class_angle, haar_sample, holevo_error,
    holevo_error_character, wigner_matrix, IrrepLabel,
};

fn main() {
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let omega = 2.0 * std::f64::consts::PI * k as f64 / 999.0;
        let (lhs, rhs) = character_sq_identity(omega);
        worst = worst.max((lhs - rhs).abs());
    }
    println!("chi_{{1/2}}^2 = 1 + chi_1 on 1000 grid points: worst defect {worst:.2e}");

    let mut rng = ChaCha12Rng::seed_from_u64(17);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let g = haar_sample(&mut rng);
        let gr = haar_sample(&mut rng);
        worst = worst.max((holevo_error(&g, &gr) - holevo_error_character(&g, &gr)).abs());
    }
    println!("trihedron metric, matrix vs character path (200 Haar pairs): worst defect {worst:.2e}");

    let g = haar_sample(&mut rng);
    let omega = class_angle(&g);
    for two_j in [1u32, 2, 3, 4] {
        let d = wigner_matrix(IrrepLabel::from_two_j(two_j), &g).unwrap();
        let trace: num_complex::Complex64 = d.matrix.diag().sum();
        println!(
            "2j = {two_j}: tr D = {:+.6}{:+.6}i, character chi_j(omega) = {:+.6}",
            trace.re,
            trace.im,
            character(IrrepLabel::from_two_j(two_j), omega)
        );
    }
}
