use proptest::prelude::*;
use semiadd::exactla::ExactMatrix;
use semiadd::field::{Field, PrimeField, Rationals};
use semiadd::lattice::FiniteLattice;
use semiadd::monoid::FiniteCommMonoid;
use semiadd::tensormon::tensor_semilattice;

fn shaped() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn check_rank_kernel<K: Field>(k: K, r: usize, c: usize, data: &[i64]) -> Result<(), TestCaseError> {
    let a = ExactMatrix::from_i64(k.clone(), r, c, data).unwrap();
    let rank = a.rank();
    prop_assert_eq!(rank, a.transpose().rank());
    let ker = a.kernel_basis();
    prop_assert_eq!(rank + ker.len(), c);
    for v in &ker {
        prop_assert!(a.mul_vec(v).unwrap().iter().all(|x| k.is_zero(x)));
    }
    let rref = a.rref();
    prop_assert_eq!(rref.matrix.rank(), rank);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rank_kernel_over_f2((r, c, data) in shaped()) {
        check_rank_kernel(PrimeField::new(2).unwrap(), r, c, &data)?;
    }

    #[test]
    fn rank_kernel_over_f7((r, c, data) in shaped()) {
        check_rank_kernel(PrimeField::new(7).unwrap(), r, c, &data)?;
    }

    #[test]
    fn rank_kernel_over_q((r, c, data) in shaped()) {
        check_rank_kernel(Rationals, r, c, &data)?;
    }

    #[test]
    fn rank_is_subadditive_under_stacking((r, c, data) in shaped(), extra in prop::collection::vec(-3i64..=3, 7)) {
        let k = Rationals;
        let a = ExactMatrix::from_i64(k, r, c, &data).unwrap();
        let b = ExactMatrix::from_i64(k, 1, c, &extra[..c]).unwrap();
        let ab = a.vstack(&b).unwrap();
        prop_assert!(ab.rank() >= a.rank() && ab.rank() <= a.rank() + 1);
    }

    #[test]
    fn chain_tensor_with_two_element_chain_is_identity(n in 1usize..6) {
        let c = FiniteCommMonoid::chain(n);
        let t = tensor_semilattice(&FiniteCommMonoid::chain(2), &c, 1 << 12).unwrap();
        prop_assert_eq!(t.monoid.order(), n);
    }

    #[test]
    fn lattice_products_stay_distributive(a in 1usize..4, b in 1usize..4) {
        let l = FiniteLattice::product(&FiniteLattice::chain(a), &FiniteLattice::chain(b));
        prop_assert!(l.is_distributive());
        prop_assert_eq!(l.order(), a * b);
    }
}
