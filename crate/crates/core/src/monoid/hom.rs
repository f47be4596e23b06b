use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::FiniteCommMonoid;
use crate::error::{Error, Result};

/// A monoid homomorphism, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidHom {
    source: Arc<FiniteCommMonoid>,
    target: Arc<FiniteCommMonoid>,
    map: Vec<usize>,
}

/// Whether `map` preserves the neutral element and addition.
pub fn is_hom(a: &FiniteCommMonoid, b: &FiniteCommMonoid, map: &[usize]) -> bool {
    if map.len() != a.order() || map.iter().any(|&y| y >= b.order()) {
        return false;
    }
    if map[a.zero()] != b.zero() {
        return false;
    }
    a.elements()
        .all(|x| a.elements().all(|y| map[a.add(x, y)] == b.add(map[x], map[y])))
}

impl MonoidHom {
    pub fn new(source: Arc<FiniteCommMonoid>, target: Arc<FiniteCommMonoid>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if !is_hom(&source, &target, &map) {
            return Err(Error::InvalidHom("map does not preserve zero and addition".into()));
        }
        Ok(MonoidHom { source, target, map })
    }

    pub fn identity(m: Arc<FiniteCommMonoid>) -> Self {
        let map = m.elements().collect();
        MonoidHom { source: m.clone(), target: m, map }
    }

    pub fn source(&self) -> &Arc<FiniteCommMonoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteCommMonoid> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MonoidHom) -> Result<MonoidHom> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::InvalidHom("composable maps need matching monoids".into()));
        }
        let map = first.map.iter().map(|&y| self.map[y]).collect();
        Ok(MonoidHom { source: first.source.clone(), target: self.target.clone(), map })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// All homomorphisms `a -> b` as image lists, in lexicographic order of the
/// generator images.
///
/// A homomorphism is determined by its values on a generating set, so the
/// search space is `|b|^g` for the greedy generating set of size `g`; that is
/// the number compared against `cap`.
pub fn enumerate_hom_maps(a: &FiniteCommMonoid, b: &FiniteCommMonoid, cap: u128) -> Result<Vec<Vec<usize>>> {
    let gens = a.generators();
    let needed = (b.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::EnumerationCapExceeded { needed, cap });
    }
    let mut out = Vec::new();
    let mut partial = vec![usize::MAX; a.order()];
    partial[a.zero()] = b.zero();
    search(a, b, &gens, 0, &mut partial, &mut out);
    Ok(out)
}

fn search(
    a: &FiniteCommMonoid,
    b: &FiniteCommMonoid,
    gens: &[usize],
    depth: usize,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == gens.len() {
        debug_assert!(is_hom(a, b, partial));
        out.push(partial.clone());
        return;
    }
    let g = gens[depth];
    for y in b.elements() {
        let mut trial = partial.clone();
        if extend(a, b, &gens[..=depth], g, y, &mut trial) {
            search(a, b, gens, depth + 1, &mut trial, out);
        }
    }
}

/// Extends a homomorphism defined on the submonoid generated by
/// `gens[..len-1]` by sending `g` to `y`; fails on any inconsistency.
pub(crate) fn extend(
    a: &FiniteCommMonoid,
    b: &FiniteCommMonoid,
    gens: &[usize],
    g: usize,
    y: usize,
    map: &mut [usize],
) -> bool {
    if map[g] != usize::MAX && map[g] != y {
        return false;
    }
    map[g] = y;
    let mut queue: VecDeque<usize> = a.elements().filter(|&x| map[x] != usize::MAX).collect();
    while let Some(x) = queue.pop_front() {
        for &h in gens {
            let z = a.add(x, h);
            let want = b.add(map[x], map[h]);
            if map[z] == usize::MAX {
                map[z] = want;
                queue.push_back(z);
            } else if map[z] != want {
                return false;
            }
        }
    }
    true
}

pub fn enumerate_homs(
    a: &Arc<FiniteCommMonoid>,
    b: &Arc<FiniteCommMonoid>,
    cap: u128,
) -> Result<Vec<MonoidHom>> {
    Ok(enumerate_hom_maps(a, b, cap)?
        .into_iter()
        .map(|map| MonoidHom { source: a.clone(), target: b.clone(), map })
        .collect())
}

/// `Hom(M, {0,1})` with the pointwise structure.
///
/// The two-element monoid is [`FiniteCommMonoid::chain(2)`]: index 0 is
/// neutral and index 1 absorbing. Read multiplicatively it is `{1, 0}` inside
/// `k_mu`, which is how [`TwoElementDual::value_in_field`] embeds it.
#[derive(Clone, Debug)]
pub struct TwoElementDual {
    pub monoid: FiniteCommMonoid,
    pub homs: Vec<Vec<usize>>,
}

impl TwoElementDual {
    /// `φ(a)` as an element of `k_mu`: 1 on the neutral value, 0 otherwise.
    pub fn value_in_field(&self, phi: usize, a: usize) -> i64 {
        if self.homs[phi][a] == 0 {
            1
        } else {
            0
        }
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.homs.iter().position(|h| h == map)
    }
}

pub fn two_element_dual(m: &FiniteCommMonoid, cap: u128) -> Result<TwoElementDual> {
    let two = FiniteCommMonoid::chain(2);
    let homs = enumerate_hom_maps(m, &two, cap)?;
    let index: HashMap<&[usize], usize> = homs.iter().enumerate().map(|(i, h)| (h.as_slice(), i)).collect();
    let n = homs.len();
    let zero = index[vec![0usize; m.order()].as_slice()];
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let sum: Vec<usize> = homs[i].iter().zip(&homs[j]).map(|(&x, &y)| two.add(x, y)).collect();
            table[i * n + j] = index[sum.as_slice()] as u32;
        }
    }
    let monoid = FiniteCommMonoid::from_table_unchecked(n, table, zero)?;
    Ok(TwoElementDual { monoid, homs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::find_isomorphism;

    const CAP: u128 = 1 << 20;

    #[test]
    fn homs_into_two_element_semilattice() {
        let two = FiniteCommMonoid::chain(2);
        assert_eq!(enumerate_hom_maps(&FiniteCommMonoid::chain(2), &two, CAP).unwrap().len(), 2);
        assert_eq!(enumerate_hom_maps(&FiniteCommMonoid::chain(3), &two, CAP).unwrap().len(), 3);
        let z2 = enumerate_hom_maps(&FiniteCommMonoid::cyclic_group(2), &two, CAP).unwrap();
        assert_eq!(z2, vec![vec![0, 0]]);
    }

    #[test]
    fn duals_of_chains_are_chains() {
        for n in 1..=5 {
            let d = two_element_dual(&FiniteCommMonoid::chain(n), CAP).unwrap();
            assert!(find_isomorphism(&d.monoid, &FiniteCommMonoid::chain(n)).is_some());
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let a = FiniteCommMonoid::product(&FiniteCommMonoid::cyclic_group(2), &FiniteCommMonoid::chain(2));
        let b = FiniteCommMonoid::cyclic_monoid(1, 2);
        let fast = enumerate_hom_maps(&a, &b, CAP).unwrap();
        let mut slow = Vec::new();
        let n = a.order();
        for code in 0..b.order().pow(n as u32) {
            let map: Vec<usize> = (0..n).map(|i| code / b.order().pow(i as u32) % b.order()).collect();
            if is_hom(&a, &b, &map) {
                slow.push(map);
            }
        }
        let mut fast_sorted = fast.clone();
        fast_sorted.sort();
        slow.sort();
        assert_eq!(fast_sorted, slow);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_hom_maps(&FiniteCommMonoid::boolean(3), &FiniteCommMonoid::chain(4), 10).unwrap_err();
        assert_eq!(err, Error::EnumerationCapExceeded { needed: 64, cap: 10 });
    }

    #[test]
    fn hom_composition() {
        let z4 = Arc::new(FiniteCommMonoid::cyclic_group(4));
        let z2 = Arc::new(FiniteCommMonoid::cyclic_group(2));
        let p = MonoidHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(p.is_surjective());
        let id = MonoidHom::identity(z2.clone());
        assert_eq!(id.after(&p).unwrap(), p);
        assert!(MonoidHom::new(z4, z2, vec![0, 1, 1, 1]).is_err());
    }
}
