//! The two-element dual of a finite lattice and its evaluation pairing.

use semiadd::field::{PrimeField, Rationals};
use semiadd::lattice::{semilattice_self_duality, FiniteLattice};

fn main() -> semiadd::Result<()> {
    for (name, l) in [
        ("chain:4", FiniteLattice::chain(4)),
        ("boolean:2", FiniteLattice::boolean(2)),
        ("chain:2 x chain:3", FiniteLattice::product(&FiniteLattice::chain(2), &FiniteLattice::chain(3))),
    ] {
        let sd = semilattice_self_duality(&l, 1 << 20)?;
        println!(
            "{name}: {} homomorphisms to {{0,1}}, max f⁻¹(1) = {:?}, bijective {}, meet-iso {}",
            sd.dual.homs.len(),
            sd.element_of,
            sd.is_bijective(&l),
            sd.is_meet_isomorphism(&l),
        );
        println!(
            "  evaluation rank over Q {} and over F_2 {}",
            sd.evaluation_matrix(Rationals).rank(),
            sd.evaluation_matrix(PrimeField::new(2)?).rank()
        );
    }
    Ok(())
}
