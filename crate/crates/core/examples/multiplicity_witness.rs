//! Why one maximally entangled state per irrep suffices. The N-spin
//! space carries each irrep j with multiplicity n_j > 1 in general, but
//! the protocol only ever populates a single copy: rotating the seed
//! state acts as D^j ⊗ I on each (irrep × multiplicity) block, so any
//! state vector orthogonal to the populated multiplicity direction
//! stays orthogonal under every rotation.
//!
//! The witness computes |tr(U C)| / √(d_j n_j) for U = D^j(g) ⊗ I and C
//! diagonal along a multiplicity vector v: zero whenever v ⊥ (1,…,1)
//! (the populated direction), order one otherwise.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use frame_align::sim::{multiplicity, multiplicity_overlap};
use frame_align::{haar_sample, multiplicity_check, IrrepLabel, Rotation};

fn main() {
    for n_spins in [3u32, 4] {
        print!("N = {n_spins}: multiplicities");
        for two_j in (n_spins % 2..=n_spins).rev().step_by(2) {
            let j = if two_j % 2 == 0 { format!("{}", two_j / 2) } else { format!("{two_j}/2") };
            print!(" n_{j} = {}", multiplicity(n_spins, IrrepLabel::from_two_j(two_j)));
        }
        println!();
    }

    let mut rng = ChaCha12Rng::seed_from_u64(99);
    for n_spins in [3u32, 4] {
        let worst = multiplicity_check(n_spins, &mut rng).unwrap();
        println!("N = {n_spins}: worst orthogonal-sector overlap over 20 Haar rotations: {worst:.2e}");
    }

    // Negative control: a vector with weight on the populated direction
    // gives an order-one overlap, so the witness is not vacuous.
    let v = [Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0); 2];
    let at_identity =
        multiplicity_overlap(3, IrrepLabel::from_two_j(1), &v, &Rotation::IDENTITY).unwrap();
    let g = haar_sample(&mut rng);
    let at_random = multiplicity_overlap(3, IrrepLabel::from_two_j(1), &v, &g).unwrap();
    println!("negative control (populated direction): {at_identity:.3} at identity, {at_random:.3} at a Haar rotation");
}
