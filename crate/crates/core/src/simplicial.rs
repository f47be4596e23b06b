//! Truncated simplicial commutative monoids, the Čech object of a surjection
//! with its contracting homotopy, Moore homology and degreewise group
//! completion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{ChainComplex, ExactMatrix};
use crate::field::{Field, FieldSpec};
use crate::monoid::{
    enumerate_hom_maps, group_completion, is_hom, CliffordData, FiniteAbelianGroup, FiniteCommMonoid, GroupCompletion,
    MonoidHom,
};

/// Levels `X_0..X_N` with faces `d_i: X_n -> X_{n-1}` (`0 <= i <= n`) and
/// degeneracies `s_j: X_n -> X_{n+1}` (`0 <= j <= n < N`), as image lists.
#[derive(Clone, Debug)]
pub struct TruncatedSimplicialMonoid {
    levels: Vec<Arc<FiniteCommMonoid>>,
    /// `faces[n][i]` for `n >= 1`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][j]` for `n < N`.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl TruncatedSimplicialMonoid {
    /// Checks that all structure maps are homomorphisms and that the
    /// simplicial identities hold wherever both sides are defined.
    pub fn new(
        levels: Vec<Arc<FiniteCommMonoid>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let s = Self::new_unchecked(levels, faces, degeneracies)?;
        s.check_homomorphisms()?;
        s.check_identities()?;
        Ok(s)
    }

    fn new_unchecked(
        levels: Vec<Arc<FiniteCommMonoid>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let top = levels.len().checked_sub(1).ok_or_else(|| Error::SimplicialIdentity("no levels".into()))?;
        if faces.len() != top + 1 || degeneracies.len() != top {
            return Err(Error::SimplicialIdentity("wrong number of structure maps".into()));
        }
        for n in 0..=top {
            let want = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want {
                return Err(Error::SimplicialIdentity(format!("level {n} needs {want} faces")));
            }
            for d in &faces[n] {
                if d.len() != levels[n].order() || d.iter().any(|&y| y >= levels[n - 1].order()) {
                    return Err(Error::SimplicialIdentity(format!("face at level {n} has the wrong shape")));
                }
            }
            if n < top {
                if degeneracies[n].len() != n + 1 {
                    return Err(Error::SimplicialIdentity(format!("level {n} needs {} degeneracies", n + 1)));
                }
                for s in &degeneracies[n] {
                    if s.len() != levels[n].order() || s.iter().any(|&y| y >= levels[n + 1].order()) {
                        return Err(Error::SimplicialIdentity(format!(
                            "degeneracy at level {n} has the wrong shape"
                        )));
                    }
                }
            }
        }
        Ok(TruncatedSimplicialMonoid { levels, faces, degeneracies })
    }

    /// The constant object on `m` with identity structure maps.
    pub fn constant(m: &FiniteCommMonoid, top: usize) -> Self {
        let m = Arc::new(m.clone());
        let id: Vec<usize> = m.elements().collect();
        let levels = vec![m; top + 1];
        let faces = (0..=top).map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] }).collect();
        let degeneracies = (0..top).map(|n| vec![id.clone(); n + 1]).collect();
        Self::new_unchecked(levels, faces, degeneracies).expect("well formed")
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Arc<FiniteCommMonoid> {
        &self.levels[n]
    }

    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &[usize] {
        &self.degeneracies[n][j]
    }

    pub fn check_homomorphisms(&self) -> Result<()> {
        for n in 1..=self.top() {
            for (i, d) in self.faces[n].iter().enumerate() {
                if !is_hom(&self.levels[n], &self.levels[n - 1], d) {
                    return Err(Error::SimplicialIdentity(format!("d_{i} at level {n} is not a homomorphism")));
                }
            }
        }
        for n in 0..self.top() {
            for (j, s) in self.degeneracies[n].iter().enumerate() {
                if !is_hom(&self.levels[n], &self.levels[n + 1], s) {
                    return Err(Error::SimplicialIdentity(format!("s_{j} at level {n} is not a homomorphism")));
                }
            }
        }
        Ok(())
    }

    /// `d_i d_j = d_{j-1} d_i` (`i < j`), `d_i s_j = s_{j-1} d_i` (`i < j`),
    /// `d_j s_j = d_{j+1} s_j = id`, `d_i s_j = s_j d_{i-1}` (`i > j + 1`),
    /// `s_i s_j = s_{j+1} s_i` (`i <= j`).
    pub fn check_identities(&self) -> Result<()> {
        let top = self.top();
        let fail = |what: String| Err(Error::SimplicialIdentity(what));
        let after = |second: &[usize], first: &[usize]| -> Vec<usize> { first.iter().map(|&x| second[x]).collect() };
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = after(&self.faces[n - 1][i], &self.faces[n][j]);
                    let rhs = after(&self.faces[n - 1][j - 1], &self.faces[n][i]);
                    if lhs != rhs {
                        return fail(format!("d_{i} d_{j} != d_{} d_{i} at level {n}", j - 1));
                    }
                }
            }
        }
        for n in 0..top {
            let id: Vec<usize> = self.levels[n].elements().collect();
            for j in 0..=n {
                let s = &self.degeneracies[n][j];
                for i in 0..=n + 1 {
                    let lhs = after(&self.faces[n + 1][i], s);
                    let rhs = if i < j {
                        after(&self.degeneracies[n - 1][j - 1], &self.faces[n][i])
                    } else if i == j || i == j + 1 {
                        id.clone()
                    } else {
                        after(&self.degeneracies[n - 1][j], &self.faces[n][i - 1])
                    };
                    if lhs != rhs {
                        return fail(format!("d_{i} s_{j} at level {n}"));
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = after(&self.degeneracies[n + 1][i], &self.degeneracies[n][j]);
                    let rhs = after(&self.degeneracies[n + 1][j + 1], &self.degeneracies[n][i]);
                    if lhs != rhs {
                        return fail(format!("s_{i} s_{j} != s_{} s_{i} at level {n}", j + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// `∂_n = Σ (-1)^i k[d_i]`, a `|X_{n-1}| x |X_n|` matrix.
    pub fn moore_differential<F: Field>(&self, field: &F, n: usize) -> ExactMatrix<F> {
        let mut d = ExactMatrix::zeros(field.clone(), self.levels[n - 1].order(), self.levels[n].order());
        let (plus, minus) = (field.one(), field.neg(&field.one()));
        for (i, face) in self.faces[n].iter().enumerate() {
            let sign = if i % 2 == 0 { &plus } else { &minus };
            for (x, &y) in face.iter().enumerate() {
                d.add_to(y, x, sign);
            }
        }
        d
    }

    /// The linearized chain complex in degrees `0..=top`.
    pub fn moore_complex<F: Field>(&self, field: &F, top: usize) -> Result<ChainComplex<F>> {
        let dims = (0..=top).map(|n| self.levels[n].order()).collect();
        let diffs = (1..=top).map(|n| self.moore_differential(field, n)).collect();
        ChainComplex::new(field.clone(), dims, diffs)
    }

    /// Number of classes of the coequalizer of `d_0, d_1: X_1 ⇉ X_0`.
    pub fn pi0_size(&self) -> usize {
        let n0 = self.levels[0].order();
        if self.top() == 0 {
            return n0;
        }
        let mut parent: Vec<usize> = (0..n0).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for y in 0..self.levels[1].order() {
            let (a, b) = (find(&mut parent, self.faces[1][0][y]), find(&mut parent, self.faces[1][1][y]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..n0).filter(|&x| find(&mut parent, x) == x).count()
    }
}

/// Homology dimensions `H_0..H_up_to` of the Moore complex; `up_to` may not
/// exceed `N - 1`.
pub fn moore_homology(x: &TruncatedSimplicialMonoid, field: FieldSpec, up_to: usize) -> Result<Vec<usize>> {
    let top = x.top();
    if top == 0 || up_to > top - 1 {
        return Err(Error::DegreeOutOfRange { degree: up_to, max: top.saturating_sub(1) });
    }
    crate::with_field!(field, |k| {
        let c = x.moore_complex(&k, up_to + 1)?;
        let mut h = c.homology_dims();
        h.truncate(up_to + 1);
        Ok(h)
    })
}

/// Maps `h_i^n: X_n -> X_{n+1}` for `0 <= i <= n < N`, stored as image lists.
#[derive(Clone, Debug)]
pub struct SimplicialHomotopy {
    pub maps: Vec<Vec<Vec<usize>>>,
}

impl SimplicialHomotopy {
    /// Checks that `h` is a homotopy from `f` to `g`:
    /// `d_0 h_0 = f`, `d_{n+1} h_n = g`, `d_i h_j = h_{j-1} d_i` (`i < j`),
    /// `d_{j+1} h_{j+1} = d_{j+1} h_j`, `d_i h_j = h_j d_{i-1}` (`i > j + 1`),
    /// `s_i h_j = h_{j+1} s_i` (`i <= j`), `s_i h_j = h_j s_{i-1}` (`i > j`).
    pub fn check(&self, x: &TruncatedSimplicialMonoid, f: &[Vec<usize>], g: &[Vec<usize>]) -> Result<()> {
        let top = x.top();
        let after = |second: &[usize], first: &[usize]| -> Vec<usize> { first.iter().map(|&v| second[v]).collect() };
        let fail = |what: String| Err(Error::SimplicialIdentity(what));
        for n in 0..top {
            let h = &self.maps[n];
            if after(&x.faces[n + 1][0], &h[0]) != f[n] {
                return fail(format!("d_0 h_0 != f at level {n}"));
            }
            if after(&x.faces[n + 1][n + 1], &h[n]) != g[n] {
                return fail(format!("d_(n+1) h_n != g at level {n}"));
            }
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = after(&x.faces[n + 1][i], &h[j]);
                    let rhs = if i < j {
                        Some(after(&self.maps[n - 1][j - 1], &x.faces[n][i]))
                    } else if i == j + 1 && j < n {
                        Some(after(&x.faces[n + 1][j + 1], &h[j + 1]))
                    } else if i > j + 1 {
                        Some(after(&self.maps[n - 1][j], &x.faces[n][i - 1]))
                    } else {
                        None
                    };
                    if let Some(rhs) = rhs {
                        if lhs != rhs {
                            return fail(format!("d_{i} h_{j} at level {n}"));
                        }
                    }
                }
            }
            if n + 1 < top {
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let lhs = after(&x.degeneracies[n + 1][i], &h[j]);
                        let rhs = if i <= j {
                            after(&self.maps[n + 1][j + 1], &x.degeneracies[n][i])
                        } else {
                            after(&self.maps[n + 1][j], &x.degeneracies[n][i - 1])
                        };
                        if lhs != rhs {
                            return fail(format!("s_{i} h_{j} at level {n}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `X_n = M ×_A ... ×_A M` (`n + 1` factors) for a surjection `π: M -> A`.
#[derive(Clone, Debug)]
pub struct CechResolution {
    pub object: TruncatedSimplicialMonoid,
    /// `tuples[n][x]` lists the coordinates of element `x` of `X_n`.
    pub tuples: Vec<Vec<Vec<usize>>>,
    /// The section `s: A -> M`, least preimage of each element.
    pub section: Vec<usize>,
    pub homotopy: SimplicialHomotopy,
    /// `π(x_0)` for each element of `X_n`.
    pub base: Vec<Vec<usize>>,
}

/// Builds the Čech object of `pi` up to level `top` and its contracting
/// homotopy `h_i(m) = (sπ(m_0), ..., sπ(m_i), m_i, ..., m_n)`, and verifies
/// the homotopy identities between the identity and `s ∘ π`.
pub fn cech_resolution(pi: &MonoidHom, top: usize, cap: usize) -> Result<CechResolution> {
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (m, a) = (pi.source().clone(), pi.target().clone());
    let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); a.order()];
    for x in m.elements() {
        fibres[pi.apply(x)].push(x);
    }
    let section: Vec<usize> = fibres.iter().map(|f| f[0]).collect();
    let mut tuples: Vec<Vec<Vec<usize>>> = Vec::with_capacity(top + 1);
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let size: u128 = fibres.iter().map(|f| (f.len() as u128).pow(n as u32 + 1)).sum();
        if size > cap as u128 {
            return Err(Error::SizeCapExceeded { needed: size.min(usize::MAX as u128) as usize, cap });
        }
        let mut level = Vec::with_capacity(size as usize);
        for f in &fibres {
            let mut t = vec![0usize; n + 1];
            loop {
                level.push(t.iter().map(|&i| f[i]).collect::<Vec<usize>>());
                let mut c = n + 1;
                loop {
                    if c == 0 {
                        break;
                    }
                    c -= 1;
                    t[c] += 1;
                    if t[c] < f.len() {
                        break;
                    }
                    t[c] = 0;
                    if c == 0 {
                        c = usize::MAX;
                        break;
                    }
                }
                if c == usize::MAX {
                    break;
                }
            }
        }
        level.sort();
        index.push(level.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect());
        tuples.push(level);
    }
    let lookup = |n: usize, t: &[usize]| -> usize { index[n][t] };
    let mut levels = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let lv = &tuples[n];
        let zero = lookup(n, &vec![m.zero(); n + 1]);
        let q = lv.len();
        let mut table = vec![0u32; q * q];
        for i in 0..q {
            for j in 0..q {
                let s: Vec<usize> = lv[i].iter().zip(&lv[j]).map(|(&x, &y)| m.add(x, y)).collect();
                table[i * q + j] = lookup(n, &s) as u32;
            }
        }
        levels.push(Arc::new(FiniteCommMonoid::from_table_unchecked(q, table, zero)?));
    }
    let faces: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    tuples[n]
                        .iter()
                        .map(|t| {
                            let mut u = t.clone();
                            u.remove(i);
                            lookup(n - 1, &u)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let degeneracies: Vec<Vec<Vec<usize>>> = (0..top)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    tuples[n]
                        .iter()
                        .map(|t| {
                            let mut u = t.clone();
                            u.insert(j, t[j]);
                            lookup(n + 1, &u)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let object = TruncatedSimplicialMonoid::new(levels, faces, degeneracies)?;
    let base: Vec<Vec<usize>> = tuples.iter().map(|lv| lv.iter().map(|t| pi.apply(t[0])).collect()).collect();
    let maps: Vec<Vec<Vec<usize>>> = (0..top)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    tuples[n]
                        .iter()
                        .zip(&base[n])
                        .map(|(t, &b)| {
                            let mut u = vec![section[b]; i + 1];
                            u.extend_from_slice(&t[i..]);
                            lookup(n + 1, &u)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let homotopy = SimplicialHomotopy { maps };
    let identity: Vec<Vec<usize>> = tuples.iter().map(|lv| (0..lv.len()).collect()).collect();
    let collapse: Vec<Vec<usize>> = (0..=top)
        .map(|n| base[n].iter().map(|&b| lookup(n, &vec![section[b]; n + 1])).collect())
        .collect();
    homotopy.check(&object, &identity, &collapse)?;
    Ok(CechResolution { object, tuples, section, homotopy, base })
}

/// Exactness data for `0 -> k[Hom(A,B)] -> k[Hom(X_0,B)] -> k[Hom(X_1,B)] -> ...`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CosimplicialReport {
    pub hom_counts: Vec<usize>,
    pub augmentation_count: usize,
    /// `k[Hom(A,B)] -> k[Hom(M,B)]` is injective.
    pub injective: bool,
    /// Its image is the kernel of `δ^0 - δ^1`.
    pub left_exact: bool,
    /// `dim H^n` of the cochain complex for `1 <= n <= N - 2`.
    pub higher_cohomology: Vec<usize>,
}

impl CosimplicialReport {
    pub fn holds(&self) -> bool {
        self.injective && self.left_exact && self.higher_cohomology.iter().all(|&h| h == 0)
    }
}

/// Builds the cochain complex `k[Hom(X_n, B)]` for `n <= top - 1` with
/// coboundary `Σ (-1)^i d_i^*`, augmented by `k[Hom(A, B)]` via `π^*`.
pub fn hom_cosimplicial_check(
    pi: &MonoidHom,
    b: &FiniteCommMonoid,
    field: FieldSpec,
    top: usize,
    cap_enum: u128,
    cap_size: usize,
) -> Result<CosimplicialReport> {
    let cech = cech_resolution(pi, top, cap_size)?;
    let x = &cech.object;
    let last = top.saturating_sub(1);
    let homs: Vec<Vec<Vec<usize>>> =
        (0..=last).map(|n| enumerate_hom_maps(x.level(n), b, cap_enum)).collect::<Result<_>>()?;
    let index: Vec<HashMap<&[usize], usize>> = homs
        .iter()
        .map(|hs| hs.iter().enumerate().map(|(i, h)| (h.as_slice(), i)).collect())
        .collect();
    let aug = enumerate_hom_maps(pi.target(), b, cap_enum)?;
    crate::with_field!(field, |k| {
        // π^*: column per hom A -> B; X_0 = M up to relabelling
        let mut p = ExactMatrix::zeros(k, homs[0].len(), aug.len());
        for (c, phi) in aug.iter().enumerate() {
            let pulled: Vec<usize> = cech.tuples[0].iter().map(|t| phi[pi.apply(t[0])]).collect();
            p.set(index[0][pulled.as_slice()], c, k.one());
        }
        let coboundary = |n: usize| -> ExactMatrix<_> {
            // δ: k[Hom(X_n, B)] -> k[Hom(X_{n+1}, B)]
            let mut d = ExactMatrix::zeros(k, homs[n + 1].len(), homs[n].len());
            for (c, phi) in homs[n].iter().enumerate() {
                for i in 0..=n + 1 {
                    let pulled: Vec<usize> = x.face(n + 1, i).iter().map(|&y| phi[y]).collect();
                    let r = index[n + 1][pulled.as_slice()];
                    let sign = if i % 2 == 0 { k.one() } else { k.neg(&k.one()) };
                    d.add_to(r, c, &sign);
                }
            }
            d
        };
        let deltas: Vec<_> = (0..last).map(coboundary).collect();
        let ranks: Vec<usize> = deltas.iter().map(|d| d.rank()).collect();
        let rank_p = p.rank();
        let injective = rank_p == aug.len();
        let left_exact = match deltas.first() {
            Some(d0) => d0.mul(&p)?.is_zero() && homs[0].len() - ranks[0] == rank_p,
            None => rank_p == homs[0].len(),
        };
        let higher: Vec<usize> = (1..last).map(|n| homs[n].len() - ranks[n] - ranks[n - 1]).collect();
        Ok(CosimplicialReport {
            hom_counts: homs.iter().map(Vec::len).collect(),
            augmentation_count: aug.len(),
            injective,
            left_exact,
            higher_cohomology: higher,
        })
    })
}

/// A degreewise group completion and the homology of both objects.
#[derive(Clone, Debug)]
pub struct CompletionComparison {
    pub completion: TruncatedSimplicialMonoid,
    pub invariants: Vec<FiniteAbelianGroup>,
    pub connected: bool,
    /// Every level is regular and all unit groups `(e + X_n)^×` vanish after
    /// tensoring with the field.
    pub units_vanish: bool,
    pub homology: Vec<usize>,
    pub completed_homology: Vec<usize>,
}

/// Applies [`group_completion`] in every degree; the structure maps of the
/// completion are induced through the canonical maps, and every square
/// `X_n -> X_n^+` is checked to commute.
pub fn degreewise_group_completion(s: &TruncatedSimplicialMonoid, field: FieldSpec) -> Result<CompletionComparison> {
    let top = s.top();
    let comps: Vec<GroupCompletion> = (0..=top).map(|n| group_completion(s.level(n))).collect();
    let induce = |from: usize, to: usize, map: &[usize]| -> Result<Vec<usize>> {
        let (cf, ct) = (&comps[from], &comps[to]);
        let induced: Vec<usize> = cf.representatives.iter().map(|&r| ct.canonical[map[r]]).collect();
        for x in s.level(from).elements() {
            if induced[cf.canonical[x]] != ct.canonical[map[x]] {
                return Err(Error::CertificateFailed(format!(
                    "completion does not commute with a structure map {from} -> {to}"
                )));
            }
        }
        Ok(induced)
    };
    let faces: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|n| if n == 0 { Ok(vec![]) } else { (0..=n).map(|i| induce(n, n - 1, s.face(n, i))).collect() })
        .collect::<Result<_>>()?;
    let degeneracies: Vec<Vec<Vec<usize>>> = (0..top)
        .map(|n| (0..=n).map(|j| induce(n, n + 1, s.degeneracy(n, j))).collect())
        .collect::<Result<_>>()?;
    let completion = TruncatedSimplicialMonoid::new(
        comps.iter().map(|c| Arc::new(c.group.clone())).collect(),
        faces,
        degeneracies,
    )?;
    let units_vanish = (0..=top).all(|n| {
        let level = s.level(n);
        level.classify().is_regular
            && CliffordData::new(level)
                .map(|d| d.groups.iter().all(|g| FiniteAbelianGroup::of_group(&g.group).tensor_z_vanishes(field)))
                .unwrap_or(false)
    });
    let up_to = top.saturating_sub(1);
    Ok(CompletionComparison {
        invariants: comps.iter().map(|c| c.invariants.clone()).collect(),
        connected: s.pi0_size() == 1,
        units_vanish,
        homology: moore_homology(s, field, up_to)?,
        completed_homology: moore_homology(&completion, field, up_to)?,
        completion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1 << 14;

    fn collapse(m: FiniteCommMonoid) -> MonoidHom {
        let n = m.order();
        MonoidHom::new(Arc::new(m), Arc::new(FiniteCommMonoid::trivial()), vec![0; n]).unwrap()
    }

    #[test]
    fn constant_object_homology() {
        let c = TruncatedSimplicialMonoid::constant(&FiniteCommMonoid::chain(3), 4);
        c.check_identities().unwrap();
        assert_eq!(moore_homology(&c, FieldSpec::Prime(2), 3).unwrap(), vec![3, 0, 0, 0]);
        assert_eq!(moore_homology(&c, FieldSpec::Rationals, 3).unwrap(), vec![3, 0, 0, 0]);
    }

    #[test]
    fn degree_cap() {
        let c = TruncatedSimplicialMonoid::constant(&FiniteCommMonoid::chain(2), 3);
        assert_eq!(
            moore_homology(&c, FieldSpec::Rationals, 3).unwrap_err(),
            Error::DegreeOutOfRange { degree: 3, max: 2 }
        );
    }

    #[test]
    fn identity_surjection() {
        let m = Arc::new(FiniteCommMonoid::cyclic_group(3));
        let id = MonoidHom::identity(m);
        let c = cech_resolution(&id, 3, CAP).unwrap();
        assert!((0..=3).all(|n| c.object.level(n).order() == 3));
        assert_eq!(moore_homology(&c.object, FieldSpec::Prime(5), 2).unwrap(), vec![3, 0, 0]);
    }

    #[test]
    fn collapse_of_two_chain() {
        let c = cech_resolution(&collapse(FiniteCommMonoid::chain(2)), 4, CAP).unwrap();
        assert_eq!(c.object.level(4).order(), 32);
        for k in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals] {
            assert_eq!(moore_homology(&c.object, k, 3).unwrap(), vec![1, 0, 0, 0]);
        }
        assert_eq!(c.object.pi0_size(), 1);
    }

    #[test]
    fn collapse_of_z2() {
        let c = cech_resolution(&collapse(FiniteCommMonoid::cyclic_group(2)), 4, CAP).unwrap();
        assert_eq!(moore_homology(&c.object, FieldSpec::Prime(2), 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn not_surjective() {
        let a = Arc::new(FiniteCommMonoid::trivial());
        let b = Arc::new(FiniteCommMonoid::chain(2));
        let inc = MonoidHom::new(a, b, vec![0]).unwrap();
        assert_eq!(cech_resolution(&inc, 2, CAP).unwrap_err(), Error::NotSurjective);
    }

    #[test]
    fn cosimplicial_left_exactness() {
        let b = FiniteCommMonoid::chain(2);
        let r = hom_cosimplicial_check(&collapse(FiniteCommMonoid::chain(2)), &b, FieldSpec::Prime(2), 4, 1 << 20, CAP)
            .unwrap();
        assert_eq!(r.augmentation_count, 1);
        assert_eq!(r.hom_counts[0], 2);
        assert!(r.holds(), "{r:?}");

        let c3 = Arc::new(FiniteCommMonoid::chain(3));
        let c2 = Arc::new(FiniteCommMonoid::chain(2));
        let pi = MonoidHom::new(c3, c2, vec![0, 1, 1]).unwrap();
        let r = hom_cosimplicial_check(&pi, &b, FieldSpec::Rationals, 4, 1 << 20, CAP).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn completion_of_cech_objects() {
        let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(2));
        let c = cech_resolution(&collapse(h), 4, CAP).unwrap();
        let r = degreewise_group_completion(&c.object, FieldSpec::Prime(5)).unwrap();
        assert!(r.connected);
        assert_eq!(&r.homology[1..], &[0, 0, 0]);
        assert_eq!(&r.completed_homology[1..], &[0, 0, 0]);
        assert!(r.invariants.iter().all(FiniteAbelianGroup::is_trivial));
        assert!(r.units_vanish);
        let r = degreewise_group_completion(&c.object, FieldSpec::Prime(2)).unwrap();
        assert!(!r.units_vanish);

        let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
        let c = cech_resolution(&collapse(h), 4, CAP).unwrap();
        let r = degreewise_group_completion(&c.object, FieldSpec::Prime(2)).unwrap();
        assert!(r.units_vanish);
        assert_eq!(&r.homology[1..], &[0, 0, 0]);
    }

    #[test]
    fn completion_of_constant_semilattice() {
        let c = TruncatedSimplicialMonoid::constant(&FiniteCommMonoid::boolean(2), 3);
        let r = degreewise_group_completion(&c, FieldSpec::Rationals).unwrap();
        assert!(r.completion.level(0).is_trivial());
        assert_eq!(r.completed_homology, vec![1, 0, 0]);
        assert_eq!(&r.homology[1..], &[0, 0]);
    }
}
