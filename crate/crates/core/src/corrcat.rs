//! Correspondences with values in a finite distributive lattice `T`, the
//! category they form on a window of finite sets, `T`-modules and the
//! additive functors `X ↦ U^X`.

use std::sync::Arc;

use crate::category::{FiniteCategory, MonFunctor, Morphism, Variance};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::monoid::text::{content_lines, parse_monoid_from, parse_table};
use crate::monoid::FiniteCommMonoid;

/// A `T`-valued matrix from `{0..source}` to `{0..target}`, stored row-major
/// with index `(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Correspondence {
    pub source: usize,
    pub target: usize,
    pub entries: Vec<usize>,
}

impl Correspondence {
    pub fn new(source: usize, target: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != source * target {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {target} x {source} correspondence",
                entries.len()
            )));
        }
        Ok(Correspondence { source, target, entries })
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> usize {
        self.entries[y * self.source + x]
    }
}

/// The correspondence category over `T`, restricted to the finite sets of the
/// given sizes.
#[derive(Clone, Debug)]
pub struct CTPresentation {
    lattice: Arc<FiniteLattice>,
    window: Vec<usize>,
}

/// Injections and projections of `X ⊔ Y`.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub size: usize,
    pub inj_left: Correspondence,
    pub inj_right: Correspondence,
    pub proj_left: Correspondence,
    pub proj_right: Correspondence,
}

impl CTPresentation {
    pub fn new(lattice: FiniteLattice, window: Vec<usize>) -> Result<Self> {
        if !lattice.is_distributive() {
            return Err(Error::NotDistributive);
        }
        Ok(CTPresentation { lattice: Arc::new(lattice), window })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `|T|^(xy)`, or `None` on overflow.
    pub fn hom_size(&self, x: usize, y: usize) -> Option<usize> {
        self.lattice.order().checked_pow((x * y) as u32)
    }

    fn check_entries(&self, r: &Correspondence) -> Result<()> {
        if r.entries.iter().any(|&t| t >= self.lattice.order()) {
            return Err(Error::ShapeMismatch("entry outside the lattice".into()));
        }
        Ok(())
    }

    /// `(r ∘ s)(z, x) = ⋁_y r(z, y) ∧ s(y, x)`.
    pub fn compose(&self, r: &Correspondence, s: &Correspondence) -> Result<Correspondence> {
        if s.target != r.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                r.source, r.target, s.source, s.target
            )));
        }
        self.check_entries(r)?;
        self.check_entries(s)?;
        Ok(self.compose_unchecked(r, s))
    }

    fn compose_unchecked(&self, r: &Correspondence, s: &Correspondence) -> Correspondence {
        let t = &self.lattice;
        let (nx, ny, nz) = (s.source, s.target, r.target);
        let mut entries = vec![t.bottom(); nx * nz];
        for z in 0..nz {
            for x in 0..nx {
                let mut acc = t.bottom();
                for y in 0..ny {
                    acc = t.join(acc, t.meet(r.entries[z * ny + y], s.entries[y * nx + x]));
                }
                entries[z * nx + x] = acc;
            }
        }
        Correspondence { source: nx, target: nz, entries }
    }

    pub fn identity(&self, x: usize) -> Correspondence {
        let t = &self.lattice;
        let entries = (0..x * x).map(|i| if i / x == i % x { t.top() } else { t.bottom() }).collect();
        Correspondence { source: x, target: x, entries }
    }

    pub fn zero(&self, x: usize, y: usize) -> Correspondence {
        Correspondence { source: x, target: y, entries: vec![self.lattice.bottom(); x * y] }
    }

    /// Entrywise join.
    pub fn add(&self, r: &Correspondence, s: &Correspondence) -> Result<Correspondence> {
        if (r.source, r.target) != (s.source, s.target) {
            return Err(Error::ShapeMismatch("sum of correspondences with different shapes".into()));
        }
        let t = &self.lattice;
        let entries = r.entries.iter().zip(&s.entries).map(|(&a, &b)| t.join(a, b)).collect();
        Ok(Correspondence { source: r.source, target: r.target, entries })
    }

    /// The sum computed as `X -> X ⊔ X -> Y ⊔ Y -> Y` through the diagonal,
    /// the block-diagonal `r ⊕ s` and the codiagonal.
    pub fn add_via_biproduct(&self, r: &Correspondence, s: &Correspondence) -> Result<Correspondence> {
        if (r.source, r.target) != (s.source, s.target) {
            return Err(Error::ShapeMismatch("sum of correspondences with different shapes".into()));
        }
        let t = &self.lattice;
        let (x, y) = (r.source, r.target);
        let mut diag = self.zero(x, 2 * x);
        for i in 0..x {
            diag.entries[i * x + i] = t.top();
            diag.entries[(x + i) * x + i] = t.top();
        }
        let mut block = self.zero(2 * x, 2 * y);
        for j in 0..y {
            for i in 0..x {
                block.entries[j * 2 * x + i] = r.get(j, i);
                block.entries[(y + j) * 2 * x + x + i] = s.get(j, i);
            }
        }
        let mut codiag = self.zero(2 * y, y);
        for j in 0..y {
            codiag.entries[j * 2 * y + j] = t.top();
            codiag.entries[j * 2 * y + y + j] = t.top();
        }
        self.compose(&codiag, &self.compose(&block, &diag)?)
    }

    pub fn biproduct(&self, x: usize, y: usize) -> Biproduct {
        let t = &self.lattice;
        let n = x + y;
        let mut inj_left = self.zero(x, n);
        let mut inj_right = self.zero(y, n);
        let mut proj_left = self.zero(n, x);
        let mut proj_right = self.zero(n, y);
        for i in 0..x {
            inj_left.entries[i * x + i] = t.top();
            proj_left.entries[i * n + i] = t.top();
        }
        for j in 0..y {
            inj_right.entries[(x + j) * y + j] = t.top();
            proj_right.entries[j * n + x + j] = t.top();
        }
        Biproduct { size: n, inj_left, inj_right, proj_left, proj_right }
    }

    /// Local index of `r` in `Hom(X, Y)`: `Σ r(y, x) |T|^(y|X| + x)`.
    pub fn encode(&self, r: &Correspondence) -> usize {
        let q = self.lattice.order();
        r.entries.iter().rev().fold(0, |acc, &e| acc * q + e)
    }

    pub fn decode(&self, x: usize, y: usize, mut index: usize) -> Correspondence {
        let q = self.lattice.order();
        let entries = (0..x * y)
            .map(|_| {
                let e = index % q;
                index /= q;
                e
            })
            .collect();
        Correspondence { source: x, target: y, entries }
    }

    /// Every correspondence `X -> Y`, in index order.
    pub fn hom_set(&self, x: usize, y: usize) -> impl Iterator<Item = Correspondence> + '_ {
        (0..self.hom_size(x, y).unwrap_or(0)).map(move |i| self.decode(x, y, i))
    }

    /// The full subcategory on the window, enriched by entrywise join.
    /// `cap` bounds the size of every hom-set.
    pub fn category(&self, cap: usize) -> Result<WindowCategory> {
        let w = &self.window;
        for &x in w {
            for &y in w {
                let size = self.hom_size(x, y).filter(|&s| s <= cap);
                if size.is_none() {
                    let needed = self.hom_size(x, y).unwrap_or(usize::MAX);
                    return Err(Error::SizeCapExceeded { needed, cap });
                }
            }
        }
        let t = self.lattice.clone();
        let addition = |i: usize, j: usize| -> FiniteCommMonoid {
            let (x, y) = (w[i], w[j]);
            let size = self.hom_size(x, y).expect("bounded");
            FiniteCommMonoid::from_fn_unchecked(size, self.encode(&self.zero(x, y)), |a, b| {
                let (ra, rb) = (self.decode(x, y, a), self.decode(x, y, b));
                let entries = ra.entries.iter().zip(&rb.entries).map(|(&p, &q)| t.join(p, q)).collect();
                self.encode(&Correspondence { source: x, target: y, entries })
            })
            .expect("powers of a semilattice")
        };
        let category = FiniteCategory::new(
            w.iter().map(|x| format!("[{x}]")).collect(),
            |i, j| self.hom_size(w[i], w[j]).expect("bounded"),
            |i, j, k, g, f| {
                let r = self.decode(w[j], w[k], g);
                let s = self.decode(w[i], w[j], f);
                self.encode(&self.compose_unchecked(&r, &s))
            },
            |i| self.encode(&self.identity(w[i])),
            Some(&addition),
        )?;
        Ok(WindowCategory { presentation: self.clone(), category: Arc::new(category) })
    }
}

/// A [`CTPresentation`] together with its finite category.
#[derive(Clone, Debug)]
pub struct WindowCategory {
    pub presentation: CTPresentation,
    pub category: Arc<FiniteCategory>,
}

impl WindowCategory {
    /// The correspondence underlying a morphism of the category.
    pub fn correspondence(&self, m: Morphism) -> Correspondence {
        let w = &self.presentation.window;
        self.presentation.decode(w[m.source], w[m.target], m.local)
    }

    pub fn morphism(&self, source: usize, target: usize, r: &Correspondence) -> Morphism {
        Morphism { source, target, local: self.presentation.encode(r) }
    }

    /// Position of the set of size `n` in the window.
    pub fn object(&self, n: usize) -> Option<usize> {
        self.presentation.window.iter().position(|&x| x == n)
    }
}

/// A finite semilattice `U` with an action of `T` satisfying
/// `(t ∧ t')u = t(t'u)`, `⊤u = u`, `⊥u = 0`, `t(u ∨ u') = tu ∨ tu'` and
/// `(t ∨ t')u = tu ∨ t'u`.
#[derive(Clone, Debug)]
pub struct TModule {
    lattice: Arc<FiniteLattice>,
    carrier: Arc<FiniteCommMonoid>,
    action: Vec<usize>,
}

impl TModule {
    /// `action[t * |U| + u] = t·u`.
    pub fn new(lattice: &FiniteLattice, carrier: FiniteCommMonoid, action: Vec<usize>) -> Result<Self> {
        let (nt, nu) = (lattice.order(), carrier.order());
        if !carrier.is_semilattice() {
            return Err(Error::TModuleAxiomViolation("carrier is not a semilattice".into()));
        }
        if action.len() != nt * nu || action.iter().any(|&v| v >= nu) {
            return Err(Error::TModuleAxiomViolation("action table has the wrong shape".into()));
        }
        let act = |t: usize, u: usize| action[t * nu + u];
        let fail = |what: &str| Err(Error::TModuleAxiomViolation(what.to_string()));
        for u in 0..nu {
            if act(lattice.top(), u) != u {
                return fail("top does not act as the identity");
            }
            if act(lattice.bottom(), u) != carrier.zero() {
                return fail("bottom does not annihilate");
            }
        }
        for t in 0..nt {
            for s in 0..nt {
                for u in 0..nu {
                    if act(lattice.meet(t, s), u) != act(t, act(s, u)) {
                        return fail("action is not associative");
                    }
                    if act(lattice.join(t, s), u) != carrier.add(act(t, u), act(s, u)) {
                        return fail("action does not distribute over joins in T");
                    }
                }
            }
            for u in 0..nu {
                for v in 0..nu {
                    if act(t, carrier.add(u, v)) != carrier.add(act(t, u), act(t, v)) {
                        return fail("action does not distribute over joins in U");
                    }
                }
            }
        }
        Ok(TModule { lattice: Arc::new(lattice.clone()), carrier: Arc::new(carrier), action })
    }

    /// `U = T` acting on itself by meets.
    pub fn self_module(lattice: &FiniteLattice) -> Self {
        let n = lattice.order();
        let action = (0..n * n).map(|i| lattice.meet(i / n, i % n)).collect();
        Self::new(lattice, lattice.join_monoid(), action).expect("a distributive lattice acts on itself")
    }

    pub fn carrier(&self) -> &Arc<FiniteCommMonoid> {
        &self.carrier
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    #[inline]
    pub fn act(&self, t: usize, u: usize) -> usize {
        self.action[t * self.carrier.order() + u]
    }
}

/// Reads a monoid block for the carrier followed by `action m n` and an
/// `m x n` table whose row `t` lists `t·u`.
pub fn parse_tmodule(text: &str, lattice: &FiniteLattice) -> Result<TModule> {
    let mut lines = content_lines(text);
    let carrier = parse_monoid_from(&mut lines)?;
    let header = lines.next().ok_or_else(|| Error::Parse("missing `action m n` line".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let dims: Option<(usize, usize)> = match parts.as_slice() {
        ["action", m, n] => m.parse().ok().zip(n.parse().ok()),
        _ => None,
    };
    let (m, n) = dims.ok_or_else(|| Error::Parse(format!("expected `action m n`, got {header:?}")))?;
    if m != lattice.order() || n != carrier.order() {
        return Err(Error::Parse(format!(
            "action table is {m} x {n}, expected {} x {}",
            lattice.order(),
            carrier.order()
        )));
    }
    let action = parse_table(&mut lines, m, n, n)?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after action table".into()));
    }
    TModule::new(lattice, carrier, action.into_iter().map(|v| v as usize).collect())
}

pub fn format_tmodule(u: &TModule) -> String {
    let mut out = crate::monoid::text::format_monoid(&u.carrier);
    let (nt, nu) = (u.lattice.order(), u.carrier.order());
    out.push_str(&format!("action {nt} {nu}\n"));
    for t in 0..nt {
        let row: Vec<String> = (0..nu).map(|x| u.act(t, x).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Index of a function `X -> U` as `Σ u(x) |U|^x`.
fn encode_function(values: &[usize], base: usize) -> usize {
    values.iter().rev().fold(0, |acc, &v| acc * base + v)
}

fn decode_function(mut index: usize, len: usize, base: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let v = index % base;
            index /= base;
            v
        })
        .collect()
}

/// `X ↦ U^X` with pointwise join; `R: X -> Y` acts by
/// `(R·u)(y) = ⋁_x R(y, x)·u(x)`. Functoriality is checked on the whole
/// window.
pub fn tilde_functor(u: &TModule, window: &WindowCategory, cap: usize) -> Result<MonFunctor> {
    if u.lattice.as_ref() != window.presentation.lattice() {
        return Err(Error::TModuleAxiomViolation("module over a different lattice".into()));
    }
    let base = u.carrier.order();
    let sizes = &window.presentation.window;
    let mut values = Vec::with_capacity(sizes.len());
    for &x in sizes {
        let n = base
            .checked_pow(x as u32)
            .filter(|&n| n <= cap)
            .ok_or(Error::SizeCapExceeded { needed: base.saturating_pow(x as u32), cap })?;
        let carrier = &u.carrier;
        let power = FiniteCommMonoid::from_fn_unchecked(n, encode_function(&vec![carrier.zero(); x], base), |a, b| {
            let (va, vb) = (decode_function(a, x, base), decode_function(b, x, base));
            let sum: Vec<usize> = va.iter().zip(&vb).map(|(&p, &q)| carrier.add(p, q)).collect();
            encode_function(&sum, base)
        })?;
        values.push(Arc::new(power));
    }
    MonFunctor::new(window.category.clone(), Variance::Covariant, values, |m, idx| {
        let r = window.correspondence(m);
        let v = decode_function(idx, r.source, base);
        let image: Vec<usize> = (0..r.target)
            .map(|y| (0..r.source).fold(u.carrier.zero(), |acc, x| u.carrier.add(acc, u.act(r.get(y, x), v[x]))))
            .collect();
        encode_function(&image, base)
    })
}

/// Checks that `F(X ⊔ Y) -> F(X) × F(Y)` induced by the projections is a
/// bijection and that the injections map `a` to `(a, 0)` and `b` to `(0, b)`,
/// for every pair of window objects whose disjoint union is in the window.
pub fn check_additivity(f: &MonFunctor, window: &WindowCategory) -> Result<()> {
    let pres = &window.presentation;
    let sizes = pres.window();
    for (i, &x) in sizes.iter().enumerate() {
        for (j, &y) in sizes.iter().enumerate() {
            let Some(s) = window.object(x + y) else {
                continue;
            };
            let b = pres.biproduct(x, y);
            let (pl, pr) = (window.morphism(s, i, &b.proj_left), window.morphism(s, j, &b.proj_right));
            let (il, ir) = (window.morphism(i, s, &b.inj_left), window.morphism(j, s, &b.inj_right));
            let (vx, vy, vs) = (f.value(i), f.value(j), f.value(s));
            let fail = |what: &str| Err(Error::InvalidFunctor(format!("{what} for [{x}] ⊔ [{y}]")));
            if vs.order() != vx.order() * vy.order() {
                return fail("value of the union has the wrong size");
            }
            let mut seen = vec![false; vs.order()];
            for w in vs.elements() {
                let k = f.apply(pl, w) * vy.order() + f.apply(pr, w);
                if std::mem::replace(&mut seen[k], true) {
                    return fail("projections are not jointly injective");
                }
            }
            for a in vx.elements() {
                let w = f.apply(il, a);
                if f.apply(pl, w) != a || f.apply(pr, w) != vy.zero() {
                    return fail("left injection is not compatible");
                }
            }
            for c in vy.elements() {
                let w = f.apply(ir, c);
                if f.apply(pr, w) != c || f.apply(pl, w) != vx.zero() {
                    return fail("right injection is not compatible");
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, t: &FiniteLattice, x: usize, y: usize) -> Correspondence {
        Correspondence::new(x, y, (0..x * y).map(|_| rng.gen_range(0..t.order())).collect()).unwrap()
    }

    #[test]
    fn relations_compose_like_relations() {
        let t = FiniteLattice::boolean(1);
        let p = CTPresentation::new(t.clone(), vec![]).unwrap();
        // {a -> b} then {b -> z} with a, b, z the first elements
        let s = Correspondence::new(1, 2, vec![0, 1]).unwrap();
        let r = Correspondence::new(2, 1, vec![0, 1]).unwrap();
        assert_eq!(p.compose(&r, &s).unwrap().entries, vec![1]);
    }

    #[test]
    fn unit_and_meet_laws() {
        let t = FiniteLattice::chain(3);
        let p = CTPresentation::new(t.clone(), vec![]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let s = random(&mut rng, &t, 2, 3);
            assert_eq!(p.compose(&p.identity(3), &s).unwrap(), s);
            assert_eq!(p.compose(&s, &p.identity(2)).unwrap(), s);
        }
        for m in t.elements() {
            let c = Correspondence::new(1, 1, vec![m]).unwrap();
            assert_eq!(p.compose(&c, &c).unwrap(), c);
        }
        assert!(p.compose(&p.identity(2), &p.identity(3)).is_err());
    }

    #[test]
    fn sums_are_idempotent_and_match_biproducts() {
        let t = FiniteLattice::chain(3);
        let p = CTPresentation::new(t.clone(), vec![]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let s = random(&mut rng, &t, 2, 2);
            assert_eq!(p.add(&s, &s).unwrap(), s);
            assert_eq!(p.add(&s, &p.zero(2, 2)).unwrap(), s);
        }
        for r in p.hom_set(1, 1) {
            for s in p.hom_set(1, 1) {
                assert_eq!(p.add(&r, &s).unwrap(), p.add_via_biproduct(&r, &s).unwrap());
            }
        }
    }

    #[test]
    fn biproduct_identities() {
        let t = FiniteLattice::chain(3);
        let p = CTPresentation::new(t, vec![]).unwrap();
        let b = p.biproduct(2, 2);
        assert_eq!(p.compose(&b.proj_left, &b.inj_left).unwrap(), p.identity(2));
        assert_eq!(p.compose(&b.proj_right, &b.inj_left).unwrap(), p.zero(2, 2));
        assert_eq!(p.compose(&b.proj_left, &b.inj_right).unwrap(), p.zero(2, 2));
        let l = p.compose(&b.inj_left, &b.proj_left).unwrap();
        let r = p.compose(&b.inj_right, &b.proj_right).unwrap();
        assert_eq!(p.add(&l, &r).unwrap(), p.identity(4));
    }

    #[test]
    fn encoding_round_trips() {
        let p = CTPresentation::new(FiniteLattice::chain(3), vec![]).unwrap();
        for (i, r) in p.hom_set(2, 1).enumerate() {
            assert_eq!(p.encode(&r), i);
        }
        assert_eq!(p.hom_size(2, 2), Some(81));
    }

    #[test]
    fn window_category_is_semi_additive() {
        let p = CTPresentation::new(FiniteLattice::chain(3), vec![0, 1, 2]).unwrap();
        let w = p.category(1 << 12).unwrap();
        assert!(w.category.is_enriched());
        for x in 0..3 {
            for y in 0..3 {
                let h = w.category.hom_monoid(x, y).unwrap();
                assert!(h.is_semilattice());
                assert!(crate::monoid::is_k_trivial_monoid(h, crate::field::FieldSpec::Prime(2)));
            }
        }
        let small = CTPresentation::new(FiniteLattice::chain(3), vec![0, 1]).unwrap().category(64).unwrap();
        assert!(small.category.is_bilinear());
    }

    #[test]
    fn rejects_non_distributive() {
        assert_eq!(CTPresentation::new(FiniteLattice::diamond(), vec![1]).unwrap_err(), Error::NotDistributive);
    }

    #[test]
    fn tmodule_axioms() {
        let t = FiniteLattice::chain(3);
        let u = TModule::self_module(&t);
        assert_eq!(u.act(1, 2), 1);
        // the trivial action t·u = u violates ⊥·u = 0
        let bad = TModule::new(&t, t.join_monoid(), (0..9).map(|i| i % 3).collect());
        assert!(matches!(bad, Err(Error::TModuleAxiomViolation(_))));
        let text = format_tmodule(&u);
        let back = parse_tmodule(&text, &t).unwrap();
        assert_eq!(back.action, u.action);
    }

    #[test]
    fn tilde_functor_of_self_module() {
        let t = FiniteLattice::boolean(1);
        let p = CTPresentation::new(t.clone(), vec![0, 1, 2, 3]).unwrap();
        let w = p.category(1 << 10).unwrap();
        let f = tilde_functor(&TModule::self_module(&t), &w, 1 << 10).unwrap();
        assert!(f.value(0).is_trivial());
        assert!(crate::monoid::find_isomorphism(f.value(1), &t.join_monoid()).is_some());
        assert_eq!(f.value(3).order(), 8);
        assert!(f.has_semilattice_values());
        check_additivity(&f, &w).unwrap();
    }

    #[test]
    fn random_functoriality() {
        let t = FiniteLattice::boolean(1);
        let p = CTPresentation::new(t.clone(), vec![]).unwrap();
        let u = TModule::self_module(&t);
        let act = |r: &Correspondence, v: &[usize]| -> Vec<usize> {
            (0..r.target)
                .map(|y| (0..r.source).fold(0, |acc, x| t.join(acc, u.act(r.get(y, x), v[x]))))
                .collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (a, b, c) = (rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=3));
            let s = random(&mut rng, &t, a, b);
            let r = random(&mut rng, &t, b, c);
            let v: Vec<usize> = (0..a).map(|_| rng.gen_range(0..2)).collect();
            assert_eq!(act(&p.compose(&r, &s).unwrap(), &v), act(&r, &act(&s, &v)));
        }
    }
}
