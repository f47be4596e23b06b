use num_integer::Integer;

use super::FiniteCommMonoid;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// A finite abelian group `Z/d_1 × ... × Z/d_r` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Requires `d_i >= 2` and `d_i | d_{i+1}`.
    pub fn new(invariant_factors: Vec<u64>) -> Result<Self> {
        if invariant_factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidMonoid("invariant factors are at least 2".into()));
        }
        if invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidMonoid("invariant factors must divide each other".into()));
        }
        Ok(FiniteAbelianGroup { invariant_factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { invariant_factors: vec![n] }
        }
    }

    /// Invariant factors of a group given by its table, from the sizes of the
    /// `p^k`-torsion subgroups.
    pub fn of_group(g: &FiniteCommMonoid) -> Self {
        debug_assert!(g.is_group());
        let n = g.order() as u64;
        // exponents[p] lists the exponents of the cyclic p-factors, descending
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for p in prime_factors(n) {
            let mut ranks = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let torsion = g.elements().filter(|&x| g.multiple(pk as usize, x) == g.zero()).count() as u64;
                let r = log_exact(torsion, p);
                if r == *ranks.last().unwrap() {
                    break;
                }
                ranks.push(r);
            }
            // at_least[k] = number of factors of order >= p^(k+1)
            let at_least: Vec<u32> = ranks.windows(2).map(|w| w[1] - w[0]).collect();
            let mut exps = Vec::new();
            for (k, &c) in at_least.iter().enumerate() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(c - next) {
                    exps.push(k as u32 + 1);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push((p, exps));
        }
        let r = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; r];
        for (p, exps) in &per_prime {
            for (i, &e) in exps.iter().enumerate() {
                factors[r - 1 - i] *= p.pow(e);
            }
        }
        FiniteAbelianGroup { invariant_factors: factors }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// `G ⊗_Z k = 0`: always for finite `G` in characteristic 0, and over
    /// `F_p` exactly when `p` divides no invariant factor.
    pub fn tensor_z_vanishes(&self, field: FieldSpec) -> bool {
        match field {
            FieldSpec::Rationals => true,
            FieldSpec::Prime(p) => self.invariant_factors.iter().all(|&d| d % p as u64 != 0),
        }
    }

    /// `|Hom(G, F_p^×)| = ∏ gcd(d_i, p - 1)`.
    pub fn hom_count_to_units(&self, p: u32) -> u64 {
        self.invariant_factors.iter().map(|&d| d.gcd(&(p as u64 - 1))).product()
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(mut x: u64, p: u64) -> u32 {
    let mut r = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        r += 1;
    }
    r
}

/// `M^+` with the canonical map `M -> M^+`.
#[derive(Clone, Debug)]
pub struct GroupCompletion {
    /// The completion as a table; its elements are those of `e + M`.
    pub group: FiniteCommMonoid,
    pub invariants: FiniteAbelianGroup,
    /// Image of each element of `M` in `group`.
    pub canonical: Vec<usize>,
    /// The elements of `M` representing the completion (`e + M`).
    pub representatives: Vec<usize>,
    /// The sum `e` of all idempotents.
    pub idempotent: usize,
}

/// The group completion of a finite commutative monoid.
///
/// With `e` the sum of all idempotents, `e + M` is a group with neutral
/// element `e`, and `x ↦ x + e` is universal among maps into groups: any such
/// map sends the idempotent `e` to 0.
pub fn group_completion(m: &FiniteCommMonoid) -> GroupCompletion {
    let e = m.idempotents().into_iter().fold(m.zero(), |acc, f| m.add(acc, f));
    let representatives = m.translate(e);
    let (group, _) = m.restrict(&representatives, e).expect("e + M is closed with neutral e");
    let canonical = m
        .elements()
        .map(|x| representatives.binary_search(&m.add(x, e)).expect("x + e in e + M"))
        .collect();
    let invariants = FiniteAbelianGroup::of_group(&group);
    GroupCompletion { group, invariants, canonical, representatives, idempotent: e }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_of_products() {
        let g = FiniteCommMonoid::product(&FiniteCommMonoid::cyclic_group(2), &FiniteCommMonoid::cyclic_group(6));
        assert_eq!(FiniteAbelianGroup::of_group(&g).invariant_factors(), &[2, 6]);
        let g = FiniteCommMonoid::product(&FiniteCommMonoid::cyclic_group(4), &FiniteCommMonoid::cyclic_group(3));
        assert_eq!(FiniteAbelianGroup::of_group(&g).invariant_factors(), &[12]);
        assert!(FiniteAbelianGroup::of_group(&FiniteCommMonoid::trivial()).is_trivial());
        let g = FiniteCommMonoid::product(&FiniteCommMonoid::cyclic_group(2), &FiniteCommMonoid::cyclic_group(2));
        assert_eq!(FiniteAbelianGroup::of_group(&g).invariant_factors(), &[2, 2]);
    }

    #[test]
    fn validation() {
        assert!(FiniteAbelianGroup::new(vec![2, 3]).is_err());
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
        assert_eq!(FiniteAbelianGroup::new(vec![2, 4]).unwrap().order(), 8);
    }

    #[test]
    fn tensor_with_field() {
        let z3 = FiniteAbelianGroup::cyclic(3);
        assert!(z3.tensor_z_vanishes(FieldSpec::Rationals));
        assert!(!z3.tensor_z_vanishes(FieldSpec::Prime(3)));
        assert!(FiniteAbelianGroup::cyclic(6).tensor_z_vanishes(FieldSpec::Prime(5)));
    }

    #[test]
    fn completion_examples() {
        let c = group_completion(&FiniteCommMonoid::chain(2));
        assert!(c.invariants.is_trivial());
        let c = group_completion(&FiniteCommMonoid::cyclic_group(5));
        assert_eq!(c.invariants.invariant_factors(), &[5]);
        assert_eq!(c.canonical, vec![0, 1, 2, 3, 4]);
        let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
        let c = group_completion(&h);
        assert!(c.invariants.is_trivial());
        assert_eq!(c.canonical, vec![0, 0, 0, 0]);
    }

    #[test]
    fn completion_of_non_regular_monoid() {
        // index 2, period 3: the completion is the cyclic part Z/3
        let m = FiniteCommMonoid::cyclic_monoid(2, 3);
        let c = group_completion(&m);
        assert_eq!(c.invariants.invariant_factors(), &[3]);
    }
}
