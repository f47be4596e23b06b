//! Tensor products of finite commutative monoids, congruence closure and the
//! monoid-valued coend of a pair of functors on a finite category.
//!
//! `A ⊗ B` is the quotient of the free commutative monoid on `A × B` by
//! `(a + a', b) ~ (a, b) + (a', b)`, `(a, b + b') ~ (a, b) + (a, b')` and
//! `(0, b) ~ 0 ~ (a, 0)`. It is computed from generating sets `G ⊆ A`,
//! `H ⊆ B`: the tensor is a quotient of `N^(G×H)`, every generator `(g, h)`
//! has eventually periodic multiples (`m (g, h) = (m g, h) = (g, m h)`), so
//! the quotient factors through a finite product of cyclic monoids, and the
//! remaining relations are the Cayley-graph relations of `A` tensored with
//! each `h` and of `B` tensored with each `g`.

use std::collections::VecDeque;

use crate::category::{FiniteCategory, MonFunctor, Morphism, Variance};
use crate::error::{Error, Result};
use crate::monoid::{FiniteCommMonoid, MonoidOps};

/// A congruence on a finite commutative monoid, as a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruencePartition {
    /// Class of each element; classes are numbered by their least element.
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub partition: CongruencePartition,
    pub monoid: FiniteCommMonoid,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The smallest congruence containing `pairs`: union-find, saturated by
/// translating every merged pair by every generator.
pub fn congruence_closure(m: &impl MonoidOps, pairs: &[(usize, usize)]) -> Result<Quotient> {
    let n = m.size();
    let gens = m.generating_set();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
    while let Some((x, y)) = queue.pop_front() {
        if uf.union(x, y) {
            for &g in &gens {
                queue.push_back((m.op(x, g), m.op(y, g)));
            }
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of_root = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[x] = class_of_root[r];
        classes[class_of_root[r]].push(x);
    }
    let q = classes.len();
    let mut table = vec![0u32; q * q];
    for i in 0..q {
        for j in 0..q {
            table[i * q + j] = class_of[m.op(classes[i][0], classes[j][0])] as u32;
        }
    }
    let monoid = FiniteCommMonoid::from_table_unchecked(q, table, class_of[m.neutral()])?;
    Ok(Quotient { partition: CongruencePartition { class_of, classes }, monoid })
}

impl CongruencePartition {
    /// `x ~ x'` implies `x + z ~ x' + z` for every `z`.
    pub fn is_congruence(&self, m: &impl MonoidOps) -> bool {
        self.classes.iter().all(|class| {
            (0..m.size()).all(|z| {
                let c = self.class_of[m.op(class[0], z)];
                class.iter().all(|&x| self.class_of[m.op(x, z)] == c)
            })
        })
    }
}

/// A product of cyclic monoids `C(i_1, p_1) × ... × C(i_r, p_r)`, elements in
/// mixed radix.
#[derive(Clone, Debug)]
pub struct CyclicProduct {
    shapes: Vec<(usize, usize)>,
    radix: Vec<usize>,
    size: usize,
}

impl CyclicProduct {
    /// Fails with the required size when it exceeds `bound`.
    pub fn new(shapes: Vec<(usize, usize)>, bound: usize) -> std::result::Result<Self, u128> {
        let needed = shapes.iter().fold(1u128, |acc, &(i, p)| acc.saturating_mul((i + p) as u128));
        if needed > bound as u128 {
            return Err(needed);
        }
        let mut size = 1usize;
        let mut radix = Vec::with_capacity(shapes.len());
        for &(i, p) in &shapes {
            radix.push(size);
            size *= i + p;
        }
        Ok(CyclicProduct { shapes, radix, size })
    }

    fn reduce(&self, coord: usize, e: usize) -> usize {
        let (i, p) = self.shapes[coord];
        if e < i + p {
            e
        } else {
            i + (e - i) % p
        }
    }

    fn exponent(&self, x: usize, coord: usize) -> usize {
        let (i, p) = self.shapes[coord];
        x / self.radix[coord] % (i + p)
    }

    /// The element with the given (unreduced) exponents.
    pub fn element(&self, exps: &[usize]) -> usize {
        exps.iter().enumerate().map(|(c, &e)| self.reduce(c, e) * self.radix[c]).sum()
    }
}

impl MonoidOps for CyclicProduct {
    fn size(&self) -> usize {
        self.size
    }
    fn neutral(&self) -> usize {
        0
    }
    fn op(&self, x: usize, y: usize) -> usize {
        (0..self.shapes.len())
            .map(|c| self.reduce(c, self.exponent(x, c) + self.exponent(y, c)) * self.radix[c])
            .sum()
    }
    fn generating_set(&self) -> Vec<usize> {
        (0..self.shapes.len())
            .filter(|&c| self.shapes[c] != (0, 1))
            .map(|c| self.reduce(c, 1) * self.radix[c])
            .collect()
    }
}

/// Index and period of the multiples of `x`.
pub fn cyclic_shape(m: &FiniteCommMonoid, x: usize) -> (usize, usize) {
    let mut first = vec![usize::MAX; m.order()];
    let mut y = m.zero();
    let mut step = 0;
    while first[y] == usize::MAX {
        first[y] = step;
        y = m.add(y, x);
        step += 1;
    }
    (first[y], step - first[y])
}

/// Canonical words: `words[x]` is an exponent vector over `gens` summing to
/// `x`, read off a breadth-first spanning tree of the Cayley graph.
fn canonical_words(m: &FiniteCommMonoid, gens: &[usize]) -> Vec<Vec<usize>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; m.order()];
    words[m.zero()] = Some(vec![0; gens.len()]);
    let mut queue = VecDeque::from([m.zero()]);
    while let Some(x) = queue.pop_front() {
        for (i, &g) in gens.iter().enumerate() {
            let y = m.add(x, g);
            if words[y].is_none() {
                let mut w = words[x].clone().unwrap();
                w[i] += 1;
                words[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    words.into_iter().map(|w| w.expect("generators generate")).collect()
}

/// `A ⊗ B` together with the class of every elementary tensor.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub monoid: FiniteCommMonoid,
    left_order: usize,
    right_order: usize,
    /// `pair_class[a * |B| + b]` is the element `a ⊗ b`.
    pub pair_class: Vec<usize>,
}

impl TensorProduct {
    pub fn pair(&self, a: usize, b: usize) -> usize {
        self.pair_class[a * self.right_order + b]
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }
}

/// `Err(Ok(needed))` when the cyclic product exceeds `bound`.
fn tensor_impl(
    a: &FiniteCommMonoid,
    b: &FiniteCommMonoid,
    bound: usize,
) -> std::result::Result<TensorProduct, std::result::Result<u128, Error>> {
    let ga = a.generators();
    let gb = b.generators();
    let (ra, rb) = (ga.len(), gb.len());
    let shapes: Vec<(usize, usize)> = ga
        .iter()
        .flat_map(|&g| {
            let sg = cyclic_shape(a, g);
            gb.iter().map(move |&h| (sg, h))
        })
        .map(|(sg, h)| {
            let sh = cyclic_shape(b, h);
            (sg.0.min(sh.0), num_integer::gcd(sg.1, sh.1))
        })
        .collect();
    let free = CyclicProduct::new(shapes, bound).map_err(Ok)?;
    let wa = canonical_words(a, &ga);
    let wb = canonical_words(b, &gb);
    // element of the free product for the bilinear expansion of wa ⊗ wb
    let expand = |u: &[usize], v: &[usize]| -> usize {
        let mut exps = vec![0usize; ra * rb];
        for i in 0..ra {
            for j in 0..rb {
                exps[i * rb + j] = u[i] * v[j];
            }
        }
        free.element(&exps)
    };
    let unit = |len: usize, i: usize| -> Vec<usize> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    };
    let mut pairs = Vec::new();
    for x in a.elements() {
        for (i, &g) in ga.iter().enumerate() {
            let mut lhs = wa[x].clone();
            lhs[i] += 1;
            let rhs = &wa[a.add(x, g)];
            for j in 0..rb {
                let h = unit(rb, j);
                pairs.push((expand(&lhs, &h), expand(rhs, &h)));
            }
        }
    }
    for y in b.elements() {
        for (j, &h) in gb.iter().enumerate() {
            let mut lhs = wb[y].clone();
            lhs[j] += 1;
            let rhs = &wb[b.add(y, h)];
            for i in 0..ra {
                let g = unit(ra, i);
                pairs.push((expand(&g, &lhs), expand(&g, rhs)));
            }
        }
    }
    let q = congruence_closure(&free, &pairs).map_err(Err)?;
    let mut pair_class = Vec::with_capacity(a.order() * b.order());
    for x in a.elements() {
        for y in b.elements() {
            pair_class.push(q.partition.class_of[expand(&wa[x], &wb[y])]);
        }
    }
    Ok(TensorProduct { monoid: q.monoid, left_order: a.order(), right_order: b.order(), pair_class })
}

/// `A ⊗ B` for finite commutative monoids; `Unbounded` when the intermediate
/// product of cyclic monoids has more than `bound` elements.
pub fn tensor_bounded(a: &FiniteCommMonoid, b: &FiniteCommMonoid, bound: usize) -> Result<TensorProduct> {
    tensor_impl(a, b, bound).map_err(|e| e.err().unwrap_or(Error::Unbounded(bound)))
}

/// `A ⊗ B` when one factor is a semilattice; the result is a semilattice.
pub fn tensor_semilattice(a: &FiniteCommMonoid, b: &FiniteCommMonoid, cap: usize) -> Result<TensorProduct> {
    if !a.is_semilattice() && !b.is_semilattice() {
        return Err(Error::NotSemilatticeInput);
    }
    let t = tensor_impl(a, b, cap).map_err(|e| match e {
        Ok(needed) => Error::SizeCapExceeded { needed: needed.min(usize::MAX as u128) as usize, cap },
        Err(e) => e,
    })?;
    debug_assert!(t.monoid.is_semilattice());
    Ok(t)
}

/// Implicit product of tabled monoids in mixed radix (first factor least
/// significant).
struct TabledProduct<'a> {
    factors: Vec<&'a FiniteCommMonoid>,
    radix: Vec<usize>,
    size: usize,
}

impl<'a> TabledProduct<'a> {
    fn new(factors: Vec<&'a FiniteCommMonoid>, cap: usize) -> Result<Self> {
        let mut size = 1usize;
        let mut radix = Vec::with_capacity(factors.len());
        let mut needed: u128 = 1;
        for f in &factors {
            radix.push(size);
            needed = needed.saturating_mul(f.order() as u128);
            size = size.saturating_mul(f.order());
        }
        if needed > cap as u128 {
            return Err(Error::SizeCapExceeded { needed: needed.min(usize::MAX as u128) as usize, cap });
        }
        Ok(TabledProduct { factors, radix, size })
    }

    fn coord(&self, x: usize, c: usize) -> usize {
        x / self.radix[c] % self.factors[c].order()
    }

    fn inject(&self, c: usize, v: usize) -> usize {
        self.factors
            .iter()
            .enumerate()
            .map(|(i, f)| if i == c { v } else { f.zero() } * self.radix[i])
            .sum()
    }
}

impl MonoidOps for TabledProduct<'_> {
    fn size(&self) -> usize {
        self.size
    }
    fn neutral(&self) -> usize {
        self.inject(usize::MAX, 0)
    }
    fn op(&self, x: usize, y: usize) -> usize {
        (0..self.factors.len())
            .map(|c| self.factors[c].add(self.coord(x, c), self.coord(y, c)) * self.radix[c])
            .sum()
    }
    fn generating_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (c, f) in self.factors.iter().enumerate() {
            for g in f.generators() {
                out.push(self.inject(c, g));
            }
        }
        out
    }
}

/// `∫^c A(c) ⊗ B(c)` with the class of each elementary tensor at each object.
#[derive(Clone, Debug)]
pub struct Coend {
    pub monoid: FiniteCommMonoid,
    /// `pair_class[c][x * |B(c)| + y]` is the class of `x ⊗ y` at `c`.
    pub pair_class: Vec<Vec<usize>>,
}

/// The coend of a contravariant `a` and a covariant `b`, both with
/// semilattice values: `⊕_c A(c) ⊗ B(c)` modulo
/// `A(f)x ⊗ y ~ x ⊗ B(f)y` for `f: c -> d`, `x ∈ A(d)`, `y ∈ B(c)`.
pub fn coend_mon(c: &FiniteCategory, a: &MonFunctor, b: &MonFunctor, cap: usize) -> Result<Coend> {
    if a.variance() != Variance::Contravariant || b.variance() != Variance::Covariant {
        return Err(Error::InvalidFunctor("coend needs a contravariant and a covariant functor".into()));
    }
    if !a.has_semilattice_values() || !b.has_semilattice_values() {
        return Err(Error::NotSemilatticeValues);
    }
    let n = c.object_count();
    let tensors: Vec<TensorProduct> =
        (0..n).map(|x| tensor_semilattice(a.value(x), b.value(x), cap)).collect::<Result<_>>()?;
    let product = TabledProduct::new(tensors.iter().map(|t| &t.monoid).collect(), cap)?;
    let mut pairs = Vec::new();
    for m in c.morphisms() {
        let Morphism { source: s, target: t, .. } = m;
        for x in a.value(t).elements() {
            for y in b.value(s).elements() {
                let left = product.inject(s, tensors[s].pair(a.apply(m, x), y));
                let right = product.inject(t, tensors[t].pair(x, b.apply(m, y)));
                pairs.push((left, right));
            }
        }
    }
    let q = congruence_closure(&product, &pairs)?;
    let pair_class = (0..n)
        .map(|x| {
            tensors[x]
                .pair_class
                .iter()
                .map(|&e| q.partition.class_of[product.inject(x, e)])
                .collect()
        })
        .collect();
    Ok(Coend { monoid: q.monoid, pair_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;
    use crate::monoid::find_isomorphism;
    use std::sync::Arc;

    const CAP: usize = 1 << 20;

    fn iso(a: &FiniteCommMonoid, b: &FiniteCommMonoid) -> bool {
        find_isomorphism(a, b).is_some()
    }

    #[test]
    fn congruence_examples() {
        let c2 = FiniteCommMonoid::chain(2);
        let q = congruence_closure(&c2, &[]).unwrap();
        assert_eq!(q.monoid, c2);
        let q = congruence_closure(&c2, &[(1, 0)]).unwrap();
        assert!(q.monoid.is_trivial());
        let c3 = FiniteCommMonoid::chain(3);
        let q = congruence_closure(&c3, &[(1, 2)]).unwrap();
        assert!(iso(&q.monoid, &c2));
        assert!(q.partition.is_congruence(&c3));
    }

    #[test]
    fn congruence_propagates_translations() {
        // in Z/6, identifying 0 and 2 forces the subgroup {0, 2, 4} to collapse
        let z6 = FiniteCommMonoid::cyclic_group(6);
        let q = congruence_closure(&z6, &[(0, 2)]).unwrap();
        assert_eq!(q.monoid.order(), 2);
        assert!(q.partition.is_congruence(&z6));
    }

    #[test]
    fn semilattice_tensors() {
        let c2 = FiniteCommMonoid::chain(2);
        let c3 = FiniteCommMonoid::chain(3);
        assert!(iso(&tensor_semilattice(&c2, &c2, CAP).unwrap().monoid, &c2));
        assert!(tensor_semilattice(&c3, &FiniteCommMonoid::trivial(), CAP).unwrap().monoid.is_trivial());
        assert!(iso(&tensor_semilattice(&c3, &c2, CAP).unwrap().monoid, &c3));
        let z2 = FiniteCommMonoid::cyclic_group(2);
        assert_eq!(tensor_semilattice(&z2, &z2, CAP).unwrap_err(), Error::NotSemilatticeInput);
        assert!(tensor_semilattice(&z2, &c2, CAP).unwrap().monoid.is_trivial());
    }

    #[test]
    fn group_tensors() {
        let z = FiniteCommMonoid::cyclic_group;
        assert!(iso(&tensor_bounded(&z(2), &z(2), CAP).unwrap().monoid, &z(2)));
        assert!(tensor_bounded(&z(2), &z(3), CAP).unwrap().monoid.is_trivial());
        assert!(iso(&tensor_bounded(&z(6), &z(4), CAP).unwrap().monoid, &z(2)));
        assert!(iso(&tensor_bounded(&z(6), &z(9), CAP).unwrap().monoid, &z(3)));
    }

    #[test]
    fn bound_is_reported() {
        let b3 = FiniteCommMonoid::boolean(3);
        assert_eq!(tensor_bounded(&b3, &b3, 100).unwrap_err(), Error::Unbounded(100));
    }

    #[test]
    fn elementary_tensors_are_bilinear() {
        let a = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(2));
        let b = FiniteCommMonoid::chain(3);
        let t = tensor_semilattice(&a, &b, CAP).unwrap();
        let m = &t.monoid;
        for x in a.elements() {
            for x2 in a.elements() {
                for y in b.elements() {
                    assert_eq!(t.pair(a.add(x, x2), y), m.add(t.pair(x, y), t.pair(x2, y)));
                    assert_eq!(t.pair(x, b.zero()), m.zero());
                }
            }
        }
    }

    #[test]
    fn coend_over_meet_monoid() {
        let t = FiniteLattice::chain(2);
        let c = Arc::new(FiniteCategory::one_object("*", &t.meet_monoid(), Some(&t.join_monoid())).unwrap());
        let b = MonFunctor::representable(c.clone(), 0, Variance::Covariant).unwrap();
        let a = MonFunctor::representable(c.clone(), 0, Variance::Contravariant).unwrap();
        let e = coend_mon(&c, &a, &b, CAP).unwrap();
        // Yoneda: A ⊗ C(0, -) ≅ A(0)
        assert!(iso(&e.monoid, a.value(0)));
    }
}
