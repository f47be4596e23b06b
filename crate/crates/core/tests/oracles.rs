//! Library results against naive, independently written computations.

use std::collections::HashSet;

use semiadd::corrcat::{CTPresentation, Correspondence};
use semiadd::lattice::FiniteLattice;
use semiadd::monoid::corpus::{inverse_corpus, non_regular_corpus};
use semiadd::monoid::{group_completion, FiniteCommMonoid};
use semiadd::tensormon::tensor_bounded;

/// Classes of `M × M` under `(a, b) ~ (c, d) iff a + d + k = b + c + k` for some `k`.
fn completion_by_pairs(m: &FiniteCommMonoid) -> Vec<usize> {
    let n = m.order();
    let related = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        m.elements().any(|k| m.add(m.add(a, d), k) == m.add(m.add(b, c), k))
    };
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut class = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            class[a * n + b] = match reps.iter().position(|&r| related(r, (a, b))) {
                Some(i) => i,
                None => {
                    reps.push((a, b));
                    reps.len() - 1
                }
            };
        }
    }
    class
}

#[test]
fn group_completion_matches_pair_construction() {
    for (name, m) in inverse_corpus().into_iter().chain(non_regular_corpus()) {
        if m.order() > 10 {
            continue;
        }
        let n = m.order();
        let pairs = completion_by_pairs(&m);
        let classes: HashSet<usize> = pairs.iter().copied().collect();
        let gc = group_completion(&m);
        assert_eq!(gc.group.order(), classes.len(), "{name}");
        assert_eq!(gc.invariants.order() as usize, classes.len(), "{name}");
        for x in 0..n {
            for y in 0..n {
                let same = pairs[x * n + m.zero()] == pairs[y * n + m.zero()];
                assert_eq!(gc.canonical[x] == gc.canonical[y], same, "{name}: {x} vs {y}");
            }
        }
    }
}

fn relation(r: &Correspondence, top: usize) -> HashSet<(usize, usize)> {
    let mut out = HashSet::new();
    for y in 0..r.target {
        for x in 0..r.source {
            if r.get(y, x) == top {
                out.insert((y, x));
            }
        }
    }
    out
}

#[test]
fn two_element_correspondences_compose_as_relations() {
    let t = FiniteLattice::chain(2);
    let top = t.top();
    let p = CTPresentation::new(t, vec![0, 1, 2]).unwrap();
    for (x, y, z) in [(1, 2, 2), (2, 1, 2), (2, 2, 1), (2, 2, 2), (0, 2, 1)] {
        for s in p.hom_set(x, y) {
            for r in p.hom_set(y, z) {
                let rs = relation(&p.compose(&r, &s).unwrap(), top);
                let (rr, ss) = (relation(&r, top), relation(&s, top));
                let mut naive = HashSet::new();
                for &(c, b) in &rr {
                    for &(b2, a) in &ss {
                        if b == b2 {
                            naive.insert((c, a));
                        }
                    }
                }
                assert_eq!(rs, naive);
            }
        }
    }
}

#[test]
fn correspondence_composition_is_associative_over_chain3() {
    let p = CTPresentation::new(FiniteLattice::chain(3), vec![0, 1, 2]).unwrap();
    let (a, b, c, d) = (1, 2, 1, 2);
    let f: Vec<_> = p.hom_set(a, b).collect();
    let g: Vec<_> = p.hom_set(b, c).collect();
    let h: Vec<_> = p.hom_set(c, d).collect();
    for f in &f {
        for g in &g {
            let gf = p.compose(g, f).unwrap();
            for h in &h {
                let left = p.compose(h, &gf).unwrap();
                let right = p.compose(&p.compose(h, g).unwrap(), f).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn cyclic_tensor_products_have_gcd_order() {
    for m in 1..=9 {
        for n in 1..=9 {
            let (zm, zn) = (FiniteCommMonoid::cyclic_group(m), FiniteCommMonoid::cyclic_group(n));
            let t = tensor_bounded(&zm, &zn, 1 << 12).unwrap();
            assert_eq!(t.monoid.order(), gcd(m, n), "Z{m} ⊗ Z{n}");
            // 1 ⊗ 1 generates, and a ⊗ b = ab (1 ⊗ 1).
            let one = t.pair_class[(1 % m) * n + 1 % n];
            for a in 0..m {
                for b in 0..n {
                    assert_eq!(t.pair_class[a * n + b], t.monoid.multiple(a * b, one), "Z{m} ⊗ Z{n}: {a} ⊗ {b}");
                }
            }
        }
    }
}
