use super::hom::extend;
use super::FiniteCommMonoid;

/// Isomorphism-invariant data of an element used to prune the search.
fn signature(m: &FiniteCommMonoid, x: usize) -> (bool, usize, usize, usize) {
    let orbit = {
        let mut seen = vec![usize::MAX; m.order()];
        let mut y = m.zero();
        let mut steps = 0;
        while seen[y] == usize::MAX {
            seen[y] = steps;
            y = m.add(y, x);
            steps += 1;
        }
        steps
    };
    let ideal = m.translate(x).len();
    let stabiliser = m.elements().filter(|&y| m.add(x, y) == x).count();
    (m.is_idempotent(x), orbit, ideal, stabiliser)
}

/// Searches for an isomorphism `a -> b`, returned as the image list.
pub fn find_isomorphism(a: &FiniteCommMonoid, b: &FiniteCommMonoid) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let sa: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }
    let gens = a.generators();
    let mut map = vec![usize::MAX; a.order()];
    map[a.zero()] = b.zero();
    if sa[a.zero()] != sb[b.zero()] {
        return None;
    }
    backtrack(a, b, &gens, 0, &sa, &sb, map)
}

fn backtrack(
    a: &FiniteCommMonoid,
    b: &FiniteCommMonoid,
    gens: &[usize],
    depth: usize,
    sa: &[(bool, usize, usize, usize)],
    sb: &[(bool, usize, usize, usize)],
    map: Vec<usize>,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let mut hit = vec![false; b.order()];
        for &y in &map {
            if hit[y] {
                return None;
            }
            hit[y] = true;
        }
        return Some(map);
    }
    let g = gens[depth];
    for y in b.elements().filter(|&y| sb[y] == sa[g]) {
        let mut trial = map.clone();
        if !extend(a, b, &gens[..=depth], g, y, &mut trial) {
            continue;
        }
        if !injective_with_signatures(&trial, sa, sb) {
            continue;
        }
        if let Some(found) = backtrack(a, b, gens, depth + 1, sa, sb, trial) {
            return Some(found);
        }
    }
    None
}

fn injective_with_signatures(map: &[usize], sa: &[(bool, usize, usize, usize)], sb: &[(bool, usize, usize, usize)]) -> bool {
    let mut used = std::collections::HashSet::new();
    map.iter().enumerate().filter(|(_, &y)| y != usize::MAX).all(|(x, &y)| sa[x] == sb[y] && used.insert(y))
}
