//! Finite commutative monoids given by Cayley tables.
//!
//! The monoid law is written additively with neutral element `zero`, so a
//! semilattice is a monoid in which `x + x = x` and the induced order is
//! `x <= y` iff `x + y = y`.

mod characters;
mod clifford;
pub mod corpus;
mod group;
mod hom;
mod iso;
pub mod text;

pub use characters::{character_pairing, characters, expected_character_count};
pub use clifford::{monoid_algebra_decomposition, CliffordData, CliffordDecomposition, UnitGroup};
pub use group::{group_completion, FiniteAbelianGroup, GroupCompletion};
pub use hom::{enumerate_hom_maps, enumerate_homs, is_hom, two_element_dual, MonoidHom, TwoElementDual};
pub use iso::find_isomorphism;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Read-only access to a finite commutative monoid whose elements are
/// `0..size`. Implemented by tabled monoids and by implicitly represented
/// ones (free semilattices on bitmasks, products of cyclic monoids).
pub trait MonoidOps {
    fn size(&self) -> usize;
    fn neutral(&self) -> usize;
    fn op(&self, x: usize, y: usize) -> usize;
    /// A set of elements generating the monoid.
    fn generating_set(&self) -> Vec<usize>;
}

/// A finite commutative monoid: `order` elements `0..order`, an addition
/// table and a neutral element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteCommMonoid {
    order: usize,
    table: Vec<u32>,
    zero: usize,
}

/// Structure flags computed by [`FiniteCommMonoid::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MonoidClass {
    pub is_semilattice: bool,
    pub is_regular: bool,
    pub is_inverse: bool,
}

impl FiniteCommMonoid {
    /// Checks the table is closed, commutative, associative and that `zero`
    /// is neutral.
    pub fn new(order: usize, table: Vec<u32>, zero: usize) -> Result<Self> {
        let m = Self::from_table_unchecked(order, table, zero)?;
        m.validate()?;
        Ok(m)
    }

    /// Shape checks only. Used for constructions that are monoids by
    /// construction (products, quotients, submonoids of products), where the
    /// cubic associativity check would dominate.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<u32>, zero: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidMonoid("a monoid has at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidMonoid(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if zero >= order {
            return Err(Error::InvalidMonoid(format!("zero index {zero} out of range")));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= order) {
            return Err(Error::InvalidMonoid(format!("table entry {bad} out of range")));
        }
        Ok(FiniteCommMonoid { order, table, zero })
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.add(self.zero, x) != x {
                return Err(Error::InvalidMonoid(format!("zero + {x} != {x}")));
            }
            for y in 0..x {
                if self.add(x, y) != self.add(y, x) {
                    return Err(Error::InvalidMonoid(format!("{x} + {y} is not commutative")));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.add(x, y);
                for z in 0..n {
                    if self.add(xy, z) != self.add(x, self.add(y, z)) {
                        return Err(Error::InvalidMonoid(format!(
                            "({x} + {y}) + {z} != {x} + ({y} + {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a monoid from an operation on `0..order`, with validation.
    pub fn from_fn(order: usize, zero: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = Self::tabulate(order, op);
        Self::new(order, table, zero)
    }

    pub(crate) fn from_fn_unchecked(
        order: usize,
        zero: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = Self::tabulate(order, op);
        Self::from_table_unchecked(order, table, zero)
    }

    fn tabulate(order: usize, op: impl Fn(usize, usize) -> usize) -> Vec<u32> {
        let mut table = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                table[x * order + y] = op(x, y) as u32;
            }
        }
        table
    }

    pub fn trivial() -> Self {
        FiniteCommMonoid { order: 1, table: vec![0], zero: 0 }
    }

    /// `Z/n` under addition.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn_unchecked(n, 0, |x, y| (x + y) % n).expect("well formed")
    }

    /// The semilattice `0 < 1 < ... < n-1` with `x + y = max(x, y)`.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn_unchecked(n, 0, |x, y| x.max(y)).expect("well formed")
    }

    /// Subsets of a `k`-set under union, elements encoded as bitmasks.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        Self::from_fn_unchecked(n, 0, |x, y| x | y).expect("well formed")
    }

    /// `{0, 1, ..., cap}` with `x + y = min(x + y, cap)`.
    pub fn truncated_naturals(cap: usize) -> Self {
        Self::from_fn_unchecked(cap + 1, 0, |x, y| (x + y).min(cap)).expect("well formed")
    }

    /// The cyclic monoid generated by `g` with `index * g = (index + period) * g`;
    /// element `i` is `i * g` for `i < index + period`.
    pub fn cyclic_monoid(index: usize, period: usize) -> Self {
        assert!(period >= 1);
        let n = index + period;
        let reduce = move |s: usize| if s < n { s } else { index + (s - index) % period };
        Self::from_fn_unchecked(n, 0, |x, y| reduce(x + y)).expect("well formed")
    }

    /// The direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &Self, b: &Self) -> Self {
        let nb = b.order;
        Self::from_fn_unchecked(a.order * nb, a.zero * nb + b.zero, |x, y| {
            a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb)
        })
        .expect("well formed")
    }

    /// `M ⊔ {∞}` with `x + ∞ = ∞`; the new element has index `|M|`.
    pub fn adjoin_absorbing(m: &Self) -> Self {
        let inf = m.order;
        Self::from_fn_unchecked(m.order + 1, m.zero, |x, y| {
            if x == inf || y == inf {
                inf
            } else {
                m.add(x, y)
            }
        })
        .expect("well formed")
    }

    /// `M ⊔ {1}` with a new neutral element of index `|M|`.
    pub fn adjoin_identity(m: &Self) -> Self {
        let one = m.order;
        Self::from_fn_unchecked(m.order + 1, one, |x, y| {
            if x == one {
                y
            } else if y == one {
                x
            } else {
                m.add(x, y)
            }
        })
        .expect("well formed")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `times * x`.
    pub fn multiple(&self, times: usize, x: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..times {
            acc = self.add(acc, x);
        }
        acc
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.add(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_semilattice(&self) -> bool {
        self.elements().all(|x| self.is_idempotent(x))
    }

    /// Every element has an inverse.
    pub fn is_group(&self) -> bool {
        self.elements().all(|x| self.elements().any(|y| self.add(x, y) == self.zero))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Some `g` with `f = f + g + f`.
    pub fn regular_witness(&self, f: usize) -> Option<usize> {
        let ff = |g: usize| self.add(self.add(f, g), f);
        self.elements().find(|&g| ff(g) == f)
    }

    /// All `g` with `f + g + f = f` and `g + f + g = g`.
    pub fn inverse_candidates(&self, f: usize) -> Vec<usize> {
        self.elements()
            .filter(|&g| {
                self.add(self.add(f, g), f) == f && self.add(self.add(g, f), g) == g
            })
            .collect()
    }

    /// Semilattice, regularity and inverse-monoid flags by exhaustive search.
    pub fn classify(&self) -> MonoidClass {
        let is_semilattice = self.is_semilattice();
        let is_regular = self.elements().all(|f| self.regular_witness(f).is_some());
        let is_inverse = self.elements().all(|f| self.inverse_candidates(f).len() == 1);
        MonoidClass { is_semilattice, is_regular, is_inverse }
    }

    /// The unique `x*` with `x + x* + x = x` and `x* + x + x* = x*`.
    pub fn pseudo_inverse(&self, x: usize) -> Result<usize> {
        match self.inverse_candidates(x).as_slice() {
            [g] => Ok(*g),
            _ => Err(Error::NotInverseMonoid),
        }
    }

    /// The submonoid generated by `gens`, as a sorted list of elements.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.zero] = true;
        let mut queue = VecDeque::from([self.zero]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|&x| seen[x]).collect()
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.order];
        seen[self.zero] = true;
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            gens.push(x);
            let mut queue: VecDeque<usize> = self.elements().filter(|&y| seen[y]).collect();
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.add(y, g);
                    if !seen[z] {
                        seen[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        gens
    }

    /// The subset `e + M`.
    pub fn translate(&self, e: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements().map(|x| self.add(e, x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The monoid on a subset closed under addition, with the given neutral
    /// element (which need not be `zero`). Returns the monoid and the
    /// embedding into `self`.
    pub fn restrict(&self, subset: &[usize], neutral: usize) -> Result<(Self, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let local_zero = index[neutral];
        if local_zero == usize::MAX {
            return Err(Error::InvalidMonoid("neutral element not in subset".into()));
        }
        let n = subset.len();
        let mut table = vec![0u32; n * n];
        for (i, &x) in subset.iter().enumerate() {
            for (j, &y) in subset.iter().enumerate() {
                let s = index[self.add(x, y)];
                if s == usize::MAX {
                    return Err(Error::InvalidMonoid("subset is not closed".into()));
                }
                table[i * n + j] = s as u32;
            }
        }
        for (i, &x) in subset.iter().enumerate() {
            if self.add(neutral, x) != x {
                return Err(Error::InvalidMonoid(format!("{neutral} is not neutral on {x}")));
            }
            let _ = i;
        }
        Ok((Self::from_table_unchecked(n, table, local_zero)?, subset.to_vec()))
    }

    /// Checks `k`-triviality of a single hom-monoid: regular, and every unit
    /// group `G_e` of an idempotent `e` satisfies `G_e ⊗_Z k = 0`.
    pub fn is_k_trivial(&self, field: FieldSpec) -> bool {
        if !self.classify().is_regular {
            return false;
        }
        let Ok(data) = CliffordData::new(self) else {
            return false;
        };
        data.groups
            .iter()
            .all(|g| FiniteAbelianGroup::of_group(&g.group).tensor_z_vanishes(field))
    }
}

impl MonoidOps for FiniteCommMonoid {
    fn size(&self) -> usize {
        self.order
    }
    fn neutral(&self) -> usize {
        self.zero
    }
    fn op(&self, x: usize, y: usize) -> usize {
        self.add(x, y)
    }
    fn generating_set(&self) -> Vec<usize> {
        self.generators()
    }
}

/// `is_k_trivial_monoid` as a free function.
pub fn is_k_trivial_monoid(m: &FiniteCommMonoid, field: FieldSpec) -> bool {
    m.is_k_trivial(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        // not associative: x + y = |x - y| on {0,1,2}
        let bad = FiniteCommMonoid::from_fn(3, 0, |x, y| x.abs_diff(y));
        assert!(bad.is_err());
        assert!(FiniteCommMonoid::new(2, vec![0, 1, 1], 0).is_err());
        assert!(FiniteCommMonoid::new(2, vec![0, 1, 0, 1], 0).is_err());
    }

    #[test]
    fn constructors_are_valid_monoids() {
        let ms = [
            FiniteCommMonoid::chain(4),
            FiniteCommMonoid::boolean(2),
            FiniteCommMonoid::cyclic_group(5),
            FiniteCommMonoid::truncated_naturals(3),
            FiniteCommMonoid::cyclic_monoid(2, 3),
            FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3)),
            FiniteCommMonoid::adjoin_identity(&FiniteCommMonoid::chain(2)),
            FiniteCommMonoid::product(&FiniteCommMonoid::chain(2), &FiniteCommMonoid::cyclic_group(2)),
        ];
        for m in ms {
            m.validate().unwrap();
        }
    }

    #[test]
    fn classify_examples() {
        let two_chain = FiniteCommMonoid::chain(2);
        let c = two_chain.classify();
        assert!(c.is_semilattice && c.is_regular && c.is_inverse);

        let z2 = FiniteCommMonoid::cyclic_group(2);
        let c = z2.classify();
        assert!(!c.is_semilattice && c.is_regular && c.is_inverse);

        // {0, 1, 2} with 2 + 1 = 2: no g with 1 + g + 1 = 1.
        let n2 = FiniteCommMonoid::truncated_naturals(2);
        let c = n2.classify();
        assert_eq!(c, MonoidClass { is_semilattice: false, is_regular: false, is_inverse: false });
        assert!(n2.regular_witness(1).is_none());
    }

    #[test]
    fn pseudo_inverse_examples() {
        let l = FiniteCommMonoid::chain(3);
        for x in l.elements() {
            assert_eq!(l.pseudo_inverse(x).unwrap(), x);
        }
        let z2 = FiniteCommMonoid::cyclic_group(2);
        assert_eq!(z2.pseudo_inverse(1).unwrap(), 1);
        let z3 = FiniteCommMonoid::cyclic_group(3);
        assert_eq!(z3.pseudo_inverse(1).unwrap(), 2);
        let n2 = FiniteCommMonoid::truncated_naturals(2);
        assert_eq!(n2.pseudo_inverse(1), Err(Error::NotInverseMonoid));
    }

    #[test]
    fn generators_generate() {
        for m in [
            FiniteCommMonoid::boolean(3),
            FiniteCommMonoid::cyclic_group(6),
            FiniteCommMonoid::product(&FiniteCommMonoid::cyclic_group(2), &FiniteCommMonoid::chain(3)),
        ] {
            let gens = m.generators();
            assert_eq!(m.closure(&gens).len(), m.order());
        }
        assert_eq!(FiniteCommMonoid::boolean(3).generators(), vec![1, 2, 4]);
    }

    #[test]
    fn restrict_to_translate() {
        let m = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
        let sub = m.translate(3);
        assert_eq!(sub, vec![3]);
        let (g, emb) = m.restrict(&sub, 3).unwrap();
        assert!(g.is_trivial());
        assert_eq!(emb, vec![3]);
    }
}
