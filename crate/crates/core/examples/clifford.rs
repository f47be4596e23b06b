//! Decomposes `k[M]` for a Clifford monoid into a product of group algebras.

use semiadd::field::{PrimeField, Rationals};
use semiadd::monoid::corpus::{clifford_chain, reduction};
use semiadd::monoid::{monoid_algebra_decomposition, CliffordData, FiniteAbelianGroup, FiniteCommMonoid};

fn main() -> semiadd::Result<()> {
    // Z/6, then Z/2, then the trivial group, joined by reduction maps.
    let groups = [FiniteCommMonoid::cyclic_group(6), FiniteCommMonoid::cyclic_group(2), FiniteCommMonoid::trivial()];
    let m = clifford_chain(&groups, &[reduction(6, 2), reduction(2, 1)])?;
    let data = CliffordData::of_inverse(&m)?;
    println!("|M| = {}, idempotents {:?}", m.order(), data.idempotents);
    for g in &data.groups {
        let inv = FiniteAbelianGroup::of_group(&g.group);
        println!("  G_{} = {:?} on {:?}", g.idempotent, inv.invariant_factors(), g.elements);
    }
    let q = monoid_algebra_decomposition(&m, Rationals)?;
    q.certify(&m)?;
    println!("over Q: rank {} of {}, certified", q.rank(), m.order());
    let f2 = monoid_algebra_decomposition(&m, PrimeField::new(2)?)?;
    f2.certify(&m)?;
    println!("over F_2: rank {} of {}, certified", f2.rank(), m.order());
    Ok(())
}
