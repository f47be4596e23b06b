//! Čech resolution of a surjection and its Moore homology.

use std::sync::Arc;

use semiadd::field::FieldSpec;
use semiadd::monoid::{FiniteCommMonoid, MonoidHom};
use semiadd::simplicial::{cech_resolution, hom_cosimplicial_check, moore_homology};

fn main() -> semiadd::Result<()> {
    let m = FiniteCommMonoid::cyclic_group(4);
    let a = FiniteCommMonoid::cyclic_group(2);
    let pi = MonoidHom::new(Arc::new(m), Arc::new(a.clone()), vec![0, 1, 0, 1])?;
    let cech = cech_resolution(&pi, 4, 1 << 16)?;
    for n in 0..=4 {
        println!("|X_{n}| = {}", cech.object.level(n).order());
    }
    for f in [FieldSpec::Prime(2), FieldSpec::Rationals] {
        println!("H_0..3 over {f}: {:?}", moore_homology(&cech.object, f, 3)?);
    }
    let r = hom_cosimplicial_check(&pi, &FiniteCommMonoid::chain(2), FieldSpec::Prime(2), 3, 1 << 24, 1 << 16)?;
    println!("Hom(X, chain2): counts {:?}, augmentation {}, exact {}", r.hom_counts, r.augmentation_count, r.holds());
    Ok(())
}
