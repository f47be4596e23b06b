//! Named families of small commutative monoids used by the test suites.

use super::FiniteCommMonoid;
use crate::error::{Error, Result};

/// A strong semilattice of groups over a chain: `groups[0] ⊔ groups[1] ⊔ ...`
/// where `maps[i]: groups[i] -> groups[i + 1]` is a homomorphism, and for
/// `x ∈ G_i`, `y ∈ G_j` the sum is computed in `G_max(i,j)` after pushing both
/// down. The neutral element is the neutral element of `groups[0]`.
pub fn clifford_chain(groups: &[FiniteCommMonoid], maps: &[Vec<usize>]) -> Result<FiniteCommMonoid> {
    if groups.is_empty() || maps.len() + 1 != groups.len() {
        return Err(Error::InvalidMonoid("need r groups and r - 1 maps".into()));
    }
    let mut offsets = Vec::with_capacity(groups.len());
    let mut n = 0;
    for g in groups {
        offsets.push(n);
        n += g.order();
    }
    let locate = |x: usize| -> (usize, usize) {
        let i = offsets.iter().rposition(|&o| o <= x).unwrap();
        (i, x - offsets[i])
    };
    let push = |mut i: usize, mut a: usize, to: usize| -> usize {
        while i < to {
            a = maps[i][a];
            i += 1;
        }
        a
    };
    FiniteCommMonoid::from_fn(n, offsets[0] + groups[0].zero(), |x, y| {
        let (i, a) = locate(x);
        let (j, b) = locate(y);
        let top = i.max(j);
        offsets[top] + groups[top].add(push(i, a, top), push(j, b, top))
    })
}

/// Reduction `Z/m -> Z/n` for `n | m`.
pub fn reduction(m: usize, n: usize) -> Vec<usize> {
    (0..m).map(|x| x % n).collect()
}

/// At least 30 commutative inverse monoids of order at most 12.
pub fn inverse_corpus() -> Vec<(String, FiniteCommMonoid)> {
    use FiniteCommMonoid as M;
    let z = M::cyclic_group;
    let mut out: Vec<(String, M)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("chain{n}"), M::chain(n)));
    }
    for k in 2..=3 {
        out.push((format!("boolean{k}"), M::boolean(k)));
    }
    for n in 2..=12 {
        out.push((format!("Z{n}"), z(n)));
    }
    out.push(("Z2xZ2".into(), M::product(&z(2), &z(2))));
    out.push(("Z2xZ4".into(), M::product(&z(2), &z(4))));
    out.push(("Z3xZ3".into(), M::product(&z(3), &z(3))));
    out.push(("Z2xZ6".into(), M::product(&z(2), &z(6))));
    for n in 2..=6 {
        out.push((format!("Z{n}+inf"), M::adjoin_absorbing(&z(n))));
    }
    out.push(("Z2xZ2+inf".into(), M::adjoin_absorbing(&M::product(&z(2), &z(2)))));
    out.push(("Z2xchain2".into(), M::product(&z(2), &M::chain(2))));
    out.push(("Z3xchain2".into(), M::product(&z(3), &M::chain(2))));
    out.push(("Z2xchain3".into(), M::product(&z(2), &M::chain(3))));
    out.push(("Z3xchain3".into(), M::product(&z(3), &M::chain(3))));
    out.push(("Z4xchain2".into(), M::product(&z(4), &M::chain(2))));
    out.push(("Z2xboolean2".into(), M::product(&z(2), &M::boolean(2))));
    out.push(("Z6xchain2".into(), M::product(&z(6), &M::chain(2))));
    out.push(("Z2xZ2xchain2".into(), M::product(&M::product(&z(2), &z(2)), &M::chain(2))));
    out.push(("(Z2+inf)^2".into(), {
        let h = M::adjoin_absorbing(&z(2));
        M::product(&h, &h)
    }));
    let cliff = |name: &str, gs: Vec<M>, maps: Vec<Vec<usize>>| -> (String, M) {
        (name.to_string(), clifford_chain(&gs, &maps).expect("well formed"))
    };
    out.push(cliff("Z4>Z2>1", vec![z(4), z(2), z(1)], vec![reduction(4, 2), reduction(2, 1)]));
    out.push(cliff("Z6>Z3", vec![z(6), z(3)], vec![reduction(6, 3)]));
    out.push(cliff("Z6>Z2>1", vec![z(6), z(2), z(1)], vec![reduction(6, 2), reduction(2, 1)]));
    out.push(cliff("Z2>Z2", vec![z(2), z(2)], vec![reduction(2, 2)]));
    out.push(cliff("Z3>Z3>Z3", vec![z(3), z(3), z(3)], vec![reduction(3, 3), reduction(3, 3)]));
    out.push(cliff("1>Z2", vec![z(1), z(2)], vec![vec![0]]));
    out.push(cliff("Z2>1>Z3", vec![z(2), z(1), z(3)], vec![vec![0, 0], vec![0]]));
    out
}

/// Finite commutative monoids that are not regular.
pub fn non_regular_corpus() -> Vec<(String, FiniteCommMonoid)> {
    use FiniteCommMonoid as M;
    let mut out = Vec::new();
    for cap in 2..=5 {
        out.push((format!("N<={cap}"), M::truncated_naturals(cap)));
    }
    for (i, p) in [(2, 1), (2, 2), (2, 3), (3, 1), (4, 2)] {
        out.push((format!("C({i},{p})"), M::cyclic_monoid(i, p)));
    }
    out.push(("N<=2xZ2".into(), M::product(&M::truncated_naturals(2), &M::cyclic_group(2))));
    out.push(("N<=2xchain2".into(), M::product(&M::truncated_naturals(2), &M::chain(2))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_corpus_is_inverse_and_small() {
        let c = inverse_corpus();
        assert!(c.len() >= 30);
        for (name, m) in &c {
            assert!(m.order() <= 12, "{name}");
            assert!(m.classify().is_inverse, "{name}");
        }
    }

    #[test]
    fn non_regular_corpus_is_not_regular() {
        for (name, m) in non_regular_corpus() {
            let c = m.classify();
            assert!(!c.is_regular && !c.is_inverse, "{name}");
        }
    }

    #[test]
    fn clifford_chain_validates_maps() {
        use FiniteCommMonoid as M;
        // Z/3 -> Z/2 has no nonzero homomorphism; x ↦ x mod 2 is not additive
        let bad = clifford_chain(&[M::cyclic_group(3), M::cyclic_group(2)], &[vec![0, 1, 0]]);
        assert!(bad.is_err());
    }
}
