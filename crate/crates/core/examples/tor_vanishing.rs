//! Windowed Tor between `k[T~#]` and `k[T~]` on the correspondence category.

use semiadd::corrcat::{tilde_functor, CTPresentation, TModule};
use semiadd::field::FieldSpec;
use semiadd::homalg::{tor_dims, ResolutionOptions};
use semiadd::lattice::FiniteLattice;

fn main() -> semiadd::Result<()> {
    let t = FiniteLattice::boolean(1);
    let w = CTPresentation::new(t.clone(), vec![0, 1, 2, 3])?.category(1 << 17)?;
    let b = tilde_functor(&TModule::self_module(&t), &w, 1 << 17)?;
    let a = b.dual(1 << 24)?;
    for f in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals] {
        let r = tor_dims(&a, &b, f, 2, ResolutionOptions::default())?;
        println!("over {f}: Tor_0..2 = {:?}, certified {}", r.dims, r.certified);
        for (d, counts) in r.summand_counts.iter().enumerate() {
            println!("  degree {d}: {counts:?}");
        }
    }
    Ok(())
}
