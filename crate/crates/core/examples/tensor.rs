//! Tensor products of commutative monoids and a coend over a one-object category.

use std::sync::Arc;

use semiadd::category::{FiniteCategory, MonFunctor, Variance};
use semiadd::lattice::FiniteLattice;
use semiadd::monoid::FiniteCommMonoid;
use semiadd::tensormon::{coend_mon, tensor_bounded, tensor_semilattice};

fn main() -> semiadd::Result<()> {
    for (m, n) in [(4, 6), (3, 5), (8, 12)] {
        let t = tensor_bounded(&FiniteCommMonoid::cyclic_group(m), &FiniteCommMonoid::cyclic_group(n), 1 << 12)?;
        println!("Z{m} ⊗ Z{n} has order {}", t.monoid.order());
    }
    let b2 = FiniteCommMonoid::boolean(2);
    let t = tensor_semilattice(&b2, &FiniteCommMonoid::chain(3), 1 << 12)?;
    println!("boolean2 ⊗ chain3 has order {}", t.monoid.order());

    let l = FiniteLattice::chain(3);
    let c = Arc::new(FiniteCategory::one_object("*", &l.meet_monoid(), Some(&l.join_monoid()))?);
    let b = MonFunctor::representable(c.clone(), 0, Variance::Covariant)?;
    let a = b.dual(1 << 20)?;
    let coend = coend_mon(&c, &a, &b, 1 << 16)?;
    println!("A ⊗ C(*, -) has order {}, A(*) has order {}", coend.monoid.order(), a.value(0).order());
    Ok(())
}
