//! Lattice-valued correspondences: composition, addition and biproducts.

use semiadd::corrcat::{tilde_functor, CTPresentation, TModule};
use semiadd::lattice::FiniteLattice;

fn main() -> semiadd::Result<()> {
    let t = FiniteLattice::chain(3);
    let p = CTPresentation::new(t.clone(), vec![0, 1, 2])?;
    let r = p.decode(2, 1, 5);
    let s = p.decode(1, 2, 7);
    let rs = p.compose(&r, &s)?;
    println!("r = {:?}\ns = {:?}\nr∘s = {:?}", r.entries, s.entries, rs.entries);
    let sum = p.add(&rs, &p.identity(1))?;
    println!("r∘s + id = {:?}, via biproduct {:?}", sum.entries, p.add_via_biproduct(&rs, &p.identity(1))?.entries);
    let bp = p.biproduct(1, 2);
    println!("[1] ⊕ [2] = [{}]", bp.size);

    let w = p.category(1 << 17)?;
    println!("window category: {} objects, {} morphisms", w.category.object_count(), w.category.morphism_count());
    let f = tilde_functor(&TModule::self_module(&t), &w, 1 << 17)?;
    for x in 0..w.category.object_count() {
        println!("  |T~([{}])| = {}", w.presentation.window()[x], f.value(x).order());
    }
    Ok(())
}
