//! Finite categories given by composition tables, and functors from them to
//! finite commutative monoids.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monoid::{enumerate_hom_maps, is_hom, FiniteCommMonoid};

/// A morphism `source -> target`, `local` indexing it inside its hom-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub local: usize,
}

/// Objects `0..n`, hom-sets `C(x, y)` of known sizes, a composition table and
/// identities. Hom-sets may carry a commutative monoid structure (the
/// addition of a semi-additive category).
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    labels: Vec<String>,
    hom_sizes: Vec<usize>,
    hom_offsets: Vec<usize>,
    /// `compose[(x * n + y) * n + z][g * |C(x,y)| + f] = g ∘ f` for
    /// `f: x -> y`, `g: y -> z`.
    compose: Vec<Vec<u32>>,
    identities: Vec<usize>,
    addition: Option<Vec<FiniteCommMonoid>>,
}

/// Triple count above which associativity is checked on a sample.
const EXHAUSTIVE_ASSOCIATIVITY: u128 = 2_000_000;
const SAMPLED_TRIPLES: usize = 200_000;

impl FiniteCategory {
    /// `hom_size(x, y)` gives `|C(x, y)|`, `compose(x, y, z, g, f)` gives
    /// `g ∘ f`, `identity(x)` the local index of `id_x`, and `addition(x, y)`
    /// an optional monoid on `C(x, y)`.
    pub fn new(
        labels: Vec<String>,
        hom_size: impl Fn(usize, usize) -> usize,
        compose: impl Fn(usize, usize, usize, usize, usize) -> usize,
        identity: impl Fn(usize) -> usize,
        addition: Option<&dyn Fn(usize, usize) -> FiniteCommMonoid>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut hom_sizes = vec![0; n * n];
        let mut hom_offsets = vec![0; n * n];
        let mut total = 0;
        for x in 0..n {
            for y in 0..n {
                hom_sizes[x * n + y] = hom_size(x, y);
                hom_offsets[x * n + y] = total;
                total += hom_sizes[x * n + y];
            }
        }
        let mut table = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (a, b) = (hom_sizes[x * n + y], hom_sizes[y * n + z]);
                    let bound = hom_sizes[x * n + z];
                    let mut t = vec![0u32; a * b];
                    for g in 0..b {
                        for f in 0..a {
                            let h = compose(x, y, z, g, f);
                            if h >= bound {
                                return Err(Error::InvalidCategory(format!(
                                    "composite of {f}: {x}->{y} and {g}: {y}->{z} out of range"
                                )));
                            }
                            t[g * a + f] = h as u32;
                        }
                    }
                    table.push(t);
                }
            }
        }
        let identities: Vec<usize> = (0..n).map(&identity).collect();
        let addition = addition.map(|add| {
            let mut v = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    v.push(add(x, y));
                }
            }
            v
        });
        let cat = FiniteCategory { labels, hom_sizes, hom_offsets, compose: table, identities, addition };
        cat.check_laws()?;
        Ok(cat)
    }

    /// One object whose endomorphisms form the monoid `endo` under
    /// composition, optionally with an addition on the same carrier.
    pub fn one_object(label: &str, endo: &FiniteCommMonoid, addition: Option<&FiniteCommMonoid>) -> Result<Self> {
        let add = addition.cloned();
        let add_fn = move |_: usize, _: usize| add.clone().expect("present");
        FiniteCategory::new(
            vec![label.to_string()],
            |_, _| endo.order(),
            |_, _, _, g, f| endo.add(g, f),
            |_| endo.zero(),
            addition.map(|_| &add_fn as &dyn Fn(usize, usize) -> FiniteCommMonoid),
        )
    }

    fn check_laws(&self) -> Result<()> {
        let n = self.object_count();
        for x in 0..n {
            if self.identities[x] >= self.hom_size(x, x) {
                return Err(Error::InvalidCategory(format!("identity of {x} out of range")));
            }
            for y in 0..n {
                for f in 0..self.hom_size(x, y) {
                    let left = self.compose(x, y, y, self.identities[y], f);
                    let right = self.compose(x, x, y, f, self.identities[x]);
                    if left != f || right != f {
                        return Err(Error::InvalidCategory(format!("identity law fails for {f}: {x}->{y}")));
                    }
                }
            }
        }
        let mut triples: u128 = 0;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        triples += (self.hom_size(x, y) * self.hom_size(y, z) * self.hom_size(z, w)) as u128;
                    }
                }
            }
        }
        let assoc = |x, y, z, w, f, g, h| -> Result<()> {
            let a = self.compose(x, z, w, h, self.compose(x, y, z, g, f));
            let b = self.compose(x, y, w, self.compose(y, z, w, h, g), f);
            if a != b {
                return Err(Error::InvalidCategory(format!(
                    "composition is not associative on {x}->{y}->{z}->{w}"
                )));
            }
            Ok(())
        };
        if triples <= EXHAUSTIVE_ASSOCIATIVITY {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for w in 0..n {
                            for f in 0..self.hom_size(x, y) {
                                for g in 0..self.hom_size(y, z) {
                                    for h in 0..self.hom_size(z, w) {
                                        assoc(x, y, z, w, f, g, h)?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut done = 0;
            while done < SAMPLED_TRIPLES {
                let (x, y, z, w) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                let (a, b, c) = (self.hom_size(x, y), self.hom_size(y, z), self.hom_size(z, w));
                if a == 0 || b == 0 || c == 0 {
                    done += 1;
                    continue;
                }
                assoc(x, y, z, w, rng.gen_range(0..a), rng.gen_range(0..b), rng.gen_range(0..c))?;
                done += 1;
            }
        }
        if let Some(adds) = &self.addition {
            for x in 0..n {
                for y in 0..n {
                    if adds[x * n + y].order() != self.hom_size(x, y) {
                        return Err(Error::InvalidCategory(format!("addition on C({x},{y}) has wrong size")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn hom_size(&self, x: usize, y: usize) -> usize {
        self.hom_sizes[x * self.labels.len() + y]
    }

    /// `g ∘ f` for `f: x -> y`, `g: y -> z`.
    #[inline]
    pub fn compose(&self, x: usize, y: usize, z: usize, g: usize, f: usize) -> usize {
        let n = self.labels.len();
        let a = self.hom_sizes[x * n + y];
        self.compose[(x * n + y) * n + z][g * a + f] as usize
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn morphism_count(&self) -> usize {
        self.hom_sizes.iter().sum()
    }

    /// Global index of a morphism, in `0..morphism_count()`.
    pub fn global_id(&self, m: Morphism) -> usize {
        self.hom_offsets[m.source * self.labels.len() + m.target] + m.local
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Morphism> + '_ {
        let n = self.labels.len();
        (0..n).flat_map(move |x| {
            (0..n).flat_map(move |y| (0..self.hom_size(x, y)).map(move |local| Morphism { source: x, target: y, local }))
        })
    }

    pub fn hom_monoid(&self, x: usize, y: usize) -> Option<&FiniteCommMonoid> {
        self.addition.as_ref().map(|a| &a[x * self.labels.len() + y])
    }

    pub fn is_enriched(&self) -> bool {
        self.addition.is_some()
    }

    /// Composition is additive in each variable and preserves zero morphisms.
    pub fn is_bilinear(&self) -> bool {
        let Some(_) = &self.addition else {
            return false;
        };
        let n = self.object_count();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (mxy, myz, mxz) = (
                        self.hom_monoid(x, y).unwrap(),
                        self.hom_monoid(y, z).unwrap(),
                        self.hom_monoid(x, z).unwrap(),
                    );
                    for g in 0..self.hom_size(y, z) {
                        if self.compose(x, y, z, g, mxy.zero()) != mxz.zero() {
                            return false;
                        }
                        for f in 0..self.hom_size(x, y) {
                            for f2 in 0..self.hom_size(x, y) {
                                let lhs = self.compose(x, y, z, g, mxy.add(f, f2));
                                let rhs = mxz.add(self.compose(x, y, z, g, f), self.compose(x, y, z, g, f2));
                                if lhs != rhs {
                                    return false;
                                }
                            }
                        }
                    }
                    for f in 0..self.hom_size(x, y) {
                        if self.compose(x, y, z, myz.zero(), f) != mxz.zero() {
                            return false;
                        }
                        for g in 0..self.hom_size(y, z) {
                            for g2 in 0..self.hom_size(y, z) {
                                let lhs = self.compose(x, y, z, myz.add(g, g2), f);
                                let rhs = mxz.add(self.compose(x, y, z, g, f), self.compose(x, y, z, g2, f));
                                if lhs != rhs {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A functor to commutative monoids: a monoid per object and a homomorphism
/// per morphism (`F(x) -> F(y)` for covariant functors and `f: x -> y`,
/// `F(y) -> F(x)` for contravariant ones).
#[derive(Clone, Debug)]
pub struct MonFunctor {
    category: Arc<FiniteCategory>,
    variance: Variance,
    values: Vec<Arc<FiniteCommMonoid>>,
    actions: Vec<Vec<u32>>,
}

impl MonFunctor {
    /// Checks that every action is a homomorphism and that identities and
    /// composites are preserved.
    pub fn new(
        category: Arc<FiniteCategory>,
        variance: Variance,
        values: Vec<Arc<FiniteCommMonoid>>,
        action: impl Fn(Morphism, usize) -> usize,
    ) -> Result<Self> {
        let f = Self::new_unchecked(category, variance, values, action)?;
        f.check_functoriality()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        category: Arc<FiniteCategory>,
        variance: Variance,
        values: Vec<Arc<FiniteCommMonoid>>,
        action: impl Fn(Morphism, usize) -> usize,
    ) -> Result<Self> {
        if values.len() != category.object_count() {
            return Err(Error::InvalidFunctor("one value per object required".into()));
        }
        let mut actions = Vec::with_capacity(category.morphism_count());
        for m in category.morphisms() {
            let (from, to) = match variance {
                Variance::Covariant => (m.source, m.target),
                Variance::Contravariant => (m.target, m.source),
            };
            let map: Vec<u32> = values[from].elements().map(|u| action(m, u) as u32).collect();
            if map.iter().any(|&v| v as usize >= values[to].order()) {
                return Err(Error::InvalidFunctor(format!("action of {m:?} out of range")));
            }
            actions.push(map);
        }
        Ok(MonFunctor { category, variance, values, actions })
    }

    pub fn check_functoriality(&self) -> Result<()> {
        let cat = &self.category;
        let n = cat.object_count();
        for m in cat.morphisms() {
            let (from, to) = self.endpoints(m);
            let map: Vec<usize> = self.action(m).iter().map(|&v| v as usize).collect();
            if !is_hom(&self.values[from], &self.values[to], &map) {
                return Err(Error::InvalidFunctor(format!("action of {m:?} is not a homomorphism")));
            }
        }
        for x in 0..n {
            let id = Morphism { source: x, target: x, local: cat.identity(x) };
            if self.action(id).iter().enumerate().any(|(u, &v)| u != v as usize) {
                return Err(Error::InvalidFunctor(format!("identity of {x} acts nontrivially")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for f in 0..cat.hom_size(x, y) {
                        for g in 0..cat.hom_size(y, z) {
                            let gf = cat.compose(x, y, z, g, f);
                            let mf = Morphism { source: x, target: y, local: f };
                            let mg = Morphism { source: y, target: z, local: g };
                            let mgf = Morphism { source: x, target: z, local: gf };
                            let ok = match self.variance {
                                Variance::Covariant => self.values[x]
                                    .elements()
                                    .all(|u| self.apply(mgf, u) == self.apply(mg, self.apply(mf, u))),
                                Variance::Contravariant => self.values[z]
                                    .elements()
                                    .all(|u| self.apply(mgf, u) == self.apply(mf, self.apply(mg, u))),
                            };
                            if !ok {
                                return Err(Error::InvalidFunctor(format!(
                                    "composite {x}->{y}->{z} not preserved"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The source and target objects of the action of `m`.
    pub fn endpoints(&self, m: Morphism) -> (usize, usize) {
        match self.variance {
            Variance::Covariant => (m.source, m.target),
            Variance::Contravariant => (m.target, m.source),
        }
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn value(&self, x: usize) -> &Arc<FiniteCommMonoid> {
        &self.values[x]
    }

    pub fn values(&self) -> &[Arc<FiniteCommMonoid>] {
        &self.values
    }

    pub fn action(&self, m: Morphism) -> &[u32] {
        &self.actions[self.category.global_id(m)]
    }

    #[inline]
    pub fn apply(&self, m: Morphism, u: usize) -> usize {
        self.actions[self.category.global_id(m)][u] as usize
    }

    pub fn has_semilattice_values(&self) -> bool {
        self.values.iter().all(|v| v.is_semilattice())
    }

    /// `F(f + g) = F(f) + F(g)` and `F(0) = 0` on every hom-set.
    pub fn is_additive(&self) -> bool {
        let cat = &self.category;
        let n = cat.object_count();
        for x in 0..n {
            for y in 0..n {
                let Some(hom) = cat.hom_monoid(x, y) else {
                    return false;
                };
                let (from, to) = self.endpoints(Morphism { source: x, target: y, local: 0 });
                let (vf, vt) = (&self.values[from], &self.values[to]);
                let mk = |local| Morphism { source: x, target: y, local };
                if vf.elements().any(|u| self.apply(mk(hom.zero()), u) != vt.zero()) {
                    return false;
                }
                for f in hom.elements() {
                    for g in hom.elements() {
                        let fg = hom.add(f, g);
                        if vf.elements().any(|u| self.apply(mk(fg), u) != vt.add(self.apply(mk(f), u), self.apply(mk(g), u))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The functor with value the trivial monoid everywhere.
    pub fn trivial(category: Arc<FiniteCategory>, variance: Variance) -> Self {
        let n = category.object_count();
        let t = Arc::new(FiniteCommMonoid::trivial());
        Self::new_unchecked(category, variance, vec![t; n], |_, _| 0).expect("well formed")
    }

    /// `C(a, -)` (covariant) or `C(-, a)` (contravariant), valued in the
    /// hom-monoids of an enriched category.
    pub fn representable(category: Arc<FiniteCategory>, a: usize, variance: Variance) -> Result<Self> {
        if !category.is_enriched() {
            return Err(Error::InvalidCategory("representables need hom-set monoids".into()));
        }
        let n = category.object_count();
        let values: Vec<Arc<FiniteCommMonoid>> = (0..n)
            .map(|x| match variance {
                Variance::Covariant => Arc::new(category.hom_monoid(a, x).unwrap().clone()),
                Variance::Contravariant => Arc::new(category.hom_monoid(x, a).unwrap().clone()),
            })
            .collect();
        let cat = category.clone();
        Self::new(category, variance, values, move |m, u| match variance {
            // u: a -> source, post-compose with m
            Variance::Covariant => cat.compose(a, m.source, m.target, m.local, u),
            // u: target -> a, pre-compose with m
            Variance::Contravariant => cat.compose(m.source, m.target, a, u, m.local),
        })
    }

    /// `F# = Hom(F(-), {0,1})`, of the opposite variance, acting by
    /// precomposition.
    pub fn dual(&self, cap: u128) -> Result<MonFunctor> {
        if !self.has_semilattice_values() {
            return Err(Error::NotSemilatticeValues);
        }
        let duals: Vec<crate::monoid::TwoElementDual> = self
            .values
            .iter()
            .map(|v| crate::monoid::two_element_dual(v, cap))
            .collect::<Result<_>>()?;
        let index: Vec<HashMap<Vec<usize>, usize>> = duals
            .iter()
            .map(|d| d.homs.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect())
            .collect();
        let variance = match self.variance {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        };
        let values = duals.iter().map(|d| Arc::new(d.monoid.clone())).collect();
        let this = self;
        let f = Self::new_unchecked(self.category.clone(), variance, values, |m, phi| {
            // phi: F(to) -> {0,1}; result: phi ∘ F(m): F(from) -> {0,1}
            let (from, to) = this.endpoints(m);
            let pulled: Vec<usize> = this.values[from]
                .elements()
                .map(|u| duals[to].homs[phi][this.apply(m, u)])
                .collect();
            index[from][&pulled]
        })?;
        Ok(f)
    }

    /// Hom-set enumeration helper: all monoid homomorphisms `F(x) -> G(x)`.
    pub fn componentwise_homs(&self, other: &MonFunctor, x: usize, cap: u128) -> Result<Vec<Vec<usize>>> {
        enumerate_hom_maps(&self.values[x], &other.values[x], cap)
    }
}
