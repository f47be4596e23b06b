//! Finite lattices given by their order relation.
//!
//! Text format: a line `lattice n` followed by `n` lines of `n` entries in
//! `{0, 1}`, entry `(a, b)` being `a <= b`. Builtins `chain:n` and
//! `boolean:k` name the chain with `n` elements and the subsets of a `k`-set.

use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::field::Field;
use crate::monoid::text::{content_lines, parse_table};
use crate::monoid::{find_isomorphism, two_element_dual, FiniteCommMonoid, TwoElementDual};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Checks that `leq` is a partial order in which all pairs have a join
    /// and a meet.
    pub fn from_leq(n: usize, leq: Vec<bool>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLattice("a lattice has at least one element".into()));
        }
        if leq.len() != n * n {
            return Err(Error::InvalidLattice(format!("relation has {} entries, expected {}", leq.len(), n * n)));
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !le(a, a) {
                return Err(Error::InvalidLattice(format!("not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(Error::InvalidLattice(format!("not antisymmetric at ({a}, {b})")));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(Error::InvalidLattice(format!("not transitive at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let extremum = |candidates: Vec<usize>, least: bool| -> Option<usize> {
            candidates.iter().copied().find(|&u| {
                candidates.iter().all(|&v| if least { le(u, v) } else { le(v, u) })
            })
        };
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let ups = (0..n).filter(|&u| le(a, u) && le(b, u)).collect();
                let downs = (0..n).filter(|&u| le(u, a) && le(u, b)).collect();
                let j = extremum(ups, true)
                    .ok_or_else(|| Error::InvalidLattice(format!("{a} and {b} have no join")))?;
                let m = extremum(downs, false)
                    .ok_or_else(|| Error::InvalidLattice(format!("{a} and {b} have no meet")))?;
                join[a * n + b] = j as u32;
                meet[a * n + b] = m as u32;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| le(b, x))).expect("finite lattices are bounded");
        let top = (0..n).find(|&t| (0..n).all(|x| le(x, t))).expect("finite lattices are bounded");
        Ok(FiniteLattice { n, leq, join, meet, bottom, top })
    }

    pub fn from_fn(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let leq = (0..n * n).map(|i| le(i / n, i % n)).collect();
        Self::from_leq(n, leq)
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |a, b| a <= b).expect("chains are lattices")
    }

    /// Subsets of a `k`-set as bitmasks, ordered by inclusion.
    pub fn boolean(k: usize) -> Self {
        Self::from_fn(1 << k, |a, b| a & !b == 0).expect("boolean lattices are lattices")
    }

    /// Componentwise order; `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &Self, b: &Self) -> Self {
        let nb = b.n;
        Self::from_fn(a.n * nb, |x, y| a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb))
            .expect("products of lattices are lattices")
    }

    /// `M_3`: bottom 0, atoms 1, 2, 3, top 4.
    pub fn diamond() -> Self {
        Self::from_fn(5, |a, b| a == b || a == 0 || b == 4).expect("M3 is a lattice")
    }

    /// `N_5`: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    pub fn pentagon() -> Self {
        Self::from_fn(5, |a, b| a == b || a == 0 || b == 4 || (a == 1 && b == 2)).expect("N5 is a lattice")
    }

    /// Resolves `chain:n`, `boolean:k`, `diamond` or `pentagon`.
    pub fn builtin(name: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown lattice {name:?}"));
        if let Some(n) = name.strip_prefix("chain:") {
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(Self::chain(n));
        }
        if let Some(k) = name.strip_prefix("boolean:") {
            let k: usize = k.parse().map_err(|_| bad())?;
            if k > 10 {
                return Err(bad());
            }
            return Ok(Self::boolean(k));
        }
        match name {
            "diamond" => Ok(Self::diamond()),
            "pentagon" => Ok(Self::pentagon()),
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples.
    pub fn is_distributive(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.elements()
                    .all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
            })
        })
    }

    /// `(L, ∨, ⊥)`.
    pub fn join_monoid(&self) -> FiniteCommMonoid {
        FiniteCommMonoid::from_table_unchecked(self.n, self.join.clone(), self.bottom).expect("well formed")
    }

    /// `(L, ∧, ⊤)`.
    pub fn meet_monoid(&self) -> FiniteCommMonoid {
        FiniteCommMonoid::from_table_unchecked(self.n, self.meet.clone(), self.top).expect("well formed")
    }

    /// An order isomorphism `self -> other`, if one exists.
    pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        find_isomorphism(&self.join_monoid(), &other.join_monoid())
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty lattice file".into()))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("lattice") {
        return Err(Error::Parse(format!("expected `lattice n`, got {header:?}")));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("missing lattice order".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("trailing tokens in lattice header".into()));
    }
    let table = parse_table(&mut lines, n, n, 2)?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after lattice relation".into()));
    }
    FiniteLattice::from_leq(n, table.into_iter().map(|v| v == 1).collect())
}

pub fn format_lattice(l: &FiniteLattice) -> String {
    let mut out = format!("lattice {}\n", l.order());
    for a in l.elements() {
        let row: Vec<&str> = l.elements().map(|b| if l.leq(a, b) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// `Hom(L, {0,1}) ≅ L`.
///
/// Reading the two-element monoid multiplicatively (neutral 1, absorbing 0),
/// a homomorphism `f` is determined by `m = max f⁻¹(1)`: `f(a) = 1` iff
/// `a <= m`. Pointwise products of homomorphisms correspond to meets, so the
/// bijection is a monoid isomorphism onto `(L, ∧, ⊤)`; for lattices isomorphic
/// to their opposite, `join_iso` also identifies the dual with `(L, ∨, ⊥)`.
#[derive(Clone, Debug)]
pub struct SelfDuality {
    pub dual: TwoElementDual,
    /// `max f⁻¹(1)` for each homomorphism.
    pub element_of: Vec<usize>,
    /// An isomorphism from the dual monoid onto the join monoid, if any.
    pub join_iso: Option<Vec<usize>>,
}

pub fn semilattice_self_duality(l: &FiniteLattice, cap: u128) -> Result<SelfDuality> {
    let dual = two_element_dual(&l.join_monoid(), cap)?;
    let mut element_of = Vec::with_capacity(dual.homs.len());
    for h in &dual.homs {
        // index 0 of the two-element monoid is the neutral value
        let kernel: Vec<usize> = l.elements().filter(|&a| h[a] == 0).collect();
        let m = kernel.iter().fold(l.bottom(), |acc, &a| l.join(acc, a));
        if h[m] != 0 {
            return Err(Error::CertificateFailed("preimage of the neutral value has no maximum".into()));
        }
        element_of.push(m);
    }
    let join_iso = find_isomorphism(&dual.monoid, &l.join_monoid());
    Ok(SelfDuality { dual, element_of, join_iso })
}

impl SelfDuality {
    pub fn is_bijective(&self, l: &FiniteLattice) -> bool {
        let mut hit = vec![false; l.order()];
        for &m in &self.element_of {
            if hit[m] {
                return false;
            }
            hit[m] = true;
        }
        self.element_of.len() == l.order()
    }

    /// `element_of` is a monoid isomorphism onto `(L, ∧, ⊤)`.
    pub fn is_meet_isomorphism(&self, l: &FiniteLattice) -> bool {
        let d = &self.dual.monoid;
        self.is_bijective(l)
            && self.element_of[d.zero()] == l.top()
            && d.elements().all(|f| {
                d.elements()
                    .all(|g| self.element_of[d.add(f, g)] == l.meet(self.element_of[f], self.element_of[g]))
            })
    }

    pub fn is_join_isomorphism(&self, l: &FiniteLattice) -> bool {
        let Some(iso) = &self.join_iso else {
            return false;
        };
        let (d, j) = (&self.dual.monoid, l.join_monoid());
        crate::monoid::MonoidHom::new(std::sync::Arc::new(d.clone()), std::sync::Arc::new(j), iso.clone())
            .map(|h| h.is_surjective())
            .unwrap_or(false)
    }

    /// Rows indexed by homomorphisms, columns by elements: `φ(a) ∈ {0, 1} ⊂ k`.
    pub fn evaluation_matrix<F: Field>(&self, field: F) -> ExactMatrix<F> {
        let rows = self.dual.homs.len();
        let cols = self.dual.homs.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(field.clone(), rows, cols);
        for phi in 0..rows {
            for a in 0..cols {
                m.set(phi, a, field.from_i64(self.dual.value_in_field(phi, a)));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    const CAP: u128 = 1 << 24;

    #[test]
    fn constructors() {
        let c1 = FiniteLattice::chain(1);
        assert_eq!(c1.bottom(), c1.top());
        let b2 = FiniteLattice::boolean(2);
        assert_eq!(b2.order(), 4);
        assert_eq!(b2.join(1, 2), 3);
        assert_eq!(b2.meet(1, 2), 0);
        let p = FiniteLattice::product(&FiniteLattice::chain(2), &FiniteLattice::chain(2));
        assert!(p.find_isomorphism(&b2).is_some());
        assert!(FiniteLattice::chain(4).find_isomorphism(&b2).is_none());
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable elements with no join
        assert!(FiniteLattice::from_fn(2, |a, b| a == b).is_err());
        assert!(FiniteLattice::from_fn(2, |_, _| true).is_err());
        // 0 < 1, 2 < 3, 4 with 1 and 2 each below 3 and 4: no least upper bound
        let bowtie = FiniteLattice::from_fn(5, |a, b| a == b || a == 0 || (a <= 2 && b >= 3));
        assert!(bowtie.is_err());
    }

    #[test]
    fn distributivity() {
        assert!(FiniteLattice::chain(5).is_distributive());
        assert!(FiniteLattice::boolean(3).is_distributive());
        assert!(!FiniteLattice::diamond().is_distributive());
        assert!(!FiniteLattice::pentagon().is_distributive());
    }

    #[test]
    fn join_monoids() {
        let m = FiniteLattice::chain(3).join_monoid();
        assert_eq!(m.add(1, 2), 2);
        assert_eq!(m, FiniteCommMonoid::chain(3));
        assert_eq!(FiniteLattice::boolean(1).join_monoid(), FiniteCommMonoid::chain(2));
        assert!(FiniteLattice::diamond().join_monoid().classify().is_inverse);
    }

    #[test]
    fn self_duality_of_small_lattices() {
        for l in [FiniteLattice::chain(2), FiniteLattice::chain(3), FiniteLattice::boolean(2)] {
            let d = semilattice_self_duality(&l, CAP).unwrap();
            assert!(d.is_bijective(&l));
            assert!(d.is_meet_isomorphism(&l));
            assert!(d.is_join_isomorphism(&l));
            assert_eq!(d.evaluation_matrix(Rationals).rank(), l.order());
            assert_eq!(d.evaluation_matrix(PrimeField::new(2).unwrap()).rank(), l.order());
        }
        let d = semilattice_self_duality(&FiniteLattice::chain(2), CAP).unwrap();
        let e = d.evaluation_matrix(Rationals);
        // rows: the constant hom (max = top), then the hom with max = bottom
        assert_eq!(e, ExactMatrix::from_i64(Rationals, 2, 2, &[1, 1, 1, 0]).unwrap());
    }

    #[test]
    fn pentagon_is_not_self_dual_but_still_bijective() {
        let l = FiniteLattice::pentagon();
        let d = semilattice_self_duality(&l, CAP).unwrap();
        assert!(d.is_meet_isomorphism(&l));
        // N5 is isomorphic to its opposite, M3 too; a chain-plus-diamond is not
        let odd = FiniteLattice::from_fn(6, |a, b| {
            a == b || a == 0 || b == 5 || (a == 1 && b >= 2)
        })
        .unwrap();
        let d = semilattice_self_duality(&odd, CAP).unwrap();
        assert!(d.is_meet_isomorphism(&odd));
        assert!(d.join_iso.is_none());
    }

    #[test]
    fn text_round_trip() {
        let l = FiniteLattice::boolean(2);
        let text = format_lattice(&l);
        assert_eq!(parse_lattice(&text).unwrap(), l);
        assert!(parse_lattice("lattice 2\n1 0\n0 1\n").is_err());
        assert!(matches!(parse_lattice("lattice 2\n1 1\n"), Err(Error::Parse(_))));
        assert!(FiniteLattice::builtin("chain:3").is_ok());
        assert!(FiniteLattice::builtin("boolean:2").is_ok());
        assert!(FiniteLattice::builtin("chain:x").is_err());
    }
}
