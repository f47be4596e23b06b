//! Ext between linearized T-module functors, computed through duality.

use semiadd::corrcat::{tilde_functor, CTPresentation, TModule};
use semiadd::field::FieldSpec;
use semiadd::homalg::{ext_dims_via_duality, mon_natural_transformations, ResolutionOptions};
use semiadd::lattice::FiniteLattice;

fn main() -> semiadd::Result<()> {
    let t = FiniteLattice::boolean(1);
    let w = CTPresentation::new(t.clone(), vec![0, 1, 2, 3])?.category(1 << 17)?;
    let u = tilde_functor(&TModule::self_module(&t), &w, 1 << 17)?;
    let r = ext_dims_via_duality(&u, &u, FieldSpec::Prime(2), 2, 1 << 24, ResolutionOptions::default())?;
    println!("Ext^0..2 = {:?}, certified {}", r.dims, r.certified);
    println!("natural transformations (linear) {}", r.natural_transformations);
    println!("natural transformations (monoid) {}", mon_natural_transformations(&u, &u, 1 << 24)?.len());
    Ok(())
}
