//! A monoid whose group completion vanishes while its units do not.

use std::sync::Arc;

use semiadd::field::FieldSpec;
use semiadd::monoid::{group_completion, is_k_trivial_monoid, FiniteCommMonoid, MonoidHom};
use semiadd::simplicial::{cech_resolution, degreewise_group_completion};

fn main() -> semiadd::Result<()> {
    let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
    println!("|H| = {}, |H^+| = {}", h.order(), group_completion(&h).group.order());
    for f in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals] {
        println!("k-trivial over {f}: {}", is_k_trivial_monoid(&h, f));
    }
    let pi = MonoidHom::new(Arc::new(h.clone()), Arc::new(FiniteCommMonoid::trivial()), vec![0; h.order()])?;
    let cech = cech_resolution(&pi, 4, 1 << 16)?;
    for f in [FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        let r = degreewise_group_completion(&cech.object, f)?;
        println!("over {f}: H = {:?}, H(X^+) = {:?}", r.homology, r.completed_homology);
    }
    Ok(())
}
