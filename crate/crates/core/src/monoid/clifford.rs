use super::FiniteCommMonoid;
use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::field::Field;

/// The unit group `G_e = (e + M)^×` of an idempotent `e`.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub idempotent: usize,
    /// Elements of `G_e` as elements of `M`, ascending.
    pub elements: Vec<usize>,
    /// `G_e` on local indices `0..|G_e|`, neutral element at the index of `e`.
    pub group: FiniteCommMonoid,
}

impl UnitGroup {
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }
}

#[derive(Clone, Debug)]
pub struct CliffordData {
    pub idempotents: Vec<usize>,
    pub groups: Vec<UnitGroup>,
    /// For each element, the position in `idempotents` of the unit group
    /// containing it, if any.
    pub component: Vec<Option<usize>>,
}

impl CliffordData {
    /// Unit groups of every idempotent. Defined for any finite commutative
    /// monoid; they partition `M` exactly when `M` is inverse.
    pub fn new(m: &FiniteCommMonoid) -> Result<Self> {
        let idempotents = m.idempotents();
        let mut component = vec![None; m.order()];
        let mut groups = Vec::with_capacity(idempotents.len());
        for (i, &e) in idempotents.iter().enumerate() {
            let ideal = m.translate(e);
            let elements: Vec<usize> = ideal
                .iter()
                .copied()
                .filter(|&y| ideal.iter().any(|&z| m.add(y, z) == e))
                .collect();
            for &x in &elements {
                component[x] = Some(i);
            }
            let (group, _) = m.restrict(&elements, e)?;
            groups.push(UnitGroup { idempotent: e, elements, group });
        }
        Ok(CliffordData { idempotents, groups, component })
    }

    /// As [`CliffordData::new`], rejecting monoids that are not inverse.
    pub fn of_inverse(m: &FiniteCommMonoid) -> Result<Self> {
        if !m.classify().is_inverse {
            return Err(Error::NotInverseMonoid);
        }
        Self::new(m)
    }

    /// The unit groups are pairwise disjoint and cover `M`.
    pub fn is_partition(&self, m: &FiniteCommMonoid) -> bool {
        let total: usize = self.groups.iter().map(|g| g.elements.len()).sum();
        total == m.order() && self.component.iter().all(Option::is_some)
    }

    /// `φ_{e→f}: G_e → G_f, x ↦ x + f`, on local indices, defined when
    /// `f + e = f`.
    pub fn structure_map(&self, m: &FiniteCommMonoid, e_idx: usize, f_idx: usize) -> Option<Vec<usize>> {
        let e = self.idempotents[e_idx];
        let f = self.idempotents[f_idx];
        if m.add(f, e) != f {
            return None;
        }
        let target = &self.groups[f_idx];
        self.groups[e_idx]
            .elements
            .iter()
            .map(|&x| target.local_index(m.add(x, f)))
            .collect()
    }
}

/// The linear map `Φ: k[M] → ∏_e k[G_e]` with `Φ[x] = ([x + f])_{f + e = f}`
/// for `x ∈ G_e`.
#[derive(Clone, Debug)]
pub struct CliffordDecomposition<F: Field> {
    pub data: CliffordData,
    /// Start of the block of each idempotent in the target coordinates.
    pub offsets: Vec<usize>,
    /// Column `x` is `Φ[x]`.
    pub matrix: ExactMatrix<F>,
}

pub fn monoid_algebra_decomposition<F: Field>(m: &FiniteCommMonoid, field: F) -> Result<CliffordDecomposition<F>> {
    let data = CliffordData::of_inverse(m)?;
    let mut offsets = Vec::with_capacity(data.groups.len());
    let mut dim = 0;
    for g in &data.groups {
        offsets.push(dim);
        dim += g.elements.len();
    }
    let mut matrix = ExactMatrix::zeros(field.clone(), dim, m.order());
    let one = field.one();
    for x in m.elements() {
        let e = data.idempotents[data.component[x].expect("inverse monoids are partitioned")];
        for (j, group) in data.groups.iter().enumerate() {
            let f = group.idempotent;
            if m.add(f, e) == f {
                let local = group.local_index(m.add(x, f)).expect("x + f lies in G_f");
                matrix.set(offsets[j] + local, x, one.clone());
            }
        }
    }
    Ok(CliffordDecomposition { data, offsets, matrix })
}

impl<F: Field> CliffordDecomposition<F> {
    pub fn image(&self, x: usize) -> Vec<F::Elem> {
        self.matrix.column(x)
    }

    /// The componentwise group-algebra product in `∏_e k[G_e]`.
    pub fn product(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.matrix.field();
        let mut out = vec![k.zero(); u.len()];
        for (group, &off) in self.data.groups.iter().zip(&self.offsets) {
            let n = group.elements.len();
            for a in 0..n {
                if k.is_zero(&u[off + a]) {
                    continue;
                }
                for b in 0..n {
                    if k.is_zero(&v[off + b]) {
                        continue;
                    }
                    let c = group.group.add(a, b);
                    out[off + c] = k.add(&out[off + c], &k.mul(&u[off + a], &v[off + b]));
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Basis pairs `(x, y)` with `Φ[x + y] != Φ[x]·Φ[y]`.
    pub fn multiplicativity_failures(&self, m: &FiniteCommMonoid) -> Vec<(usize, usize)> {
        let images: Vec<_> = m.elements().map(|x| self.image(x)).collect();
        let mut bad = Vec::new();
        for x in m.elements() {
            for y in m.elements() {
                if self.product(&images[x], &images[y]) != images[m.add(x, y)] {
                    bad.push((x, y));
                }
            }
        }
        bad
    }

    /// Full rank and multiplicative on all basis pairs.
    pub fn certify(&self, m: &FiniteCommMonoid) -> Result<()> {
        let r = self.rank();
        if r != m.order() || self.matrix.rows() != m.order() {
            return Err(Error::CertificateFailed(format!("rank {r} for a monoid of order {}", m.order())));
        }
        if let Some((x, y)) = self.multiplicativity_failures(m).first() {
            return Err(Error::CertificateFailed(format!("not multiplicative on ({x}, {y})")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monoid::find_isomorphism;

    fn z2_with_absorbing() -> FiniteCommMonoid {
        FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(2))
    }

    #[test]
    fn two_chain_data() {
        let m = FiniteCommMonoid::chain(2);
        let d = CliffordData::of_inverse(&m).unwrap();
        assert_eq!(d.idempotents, vec![0, 1]);
        assert!(d.groups.iter().all(|g| g.group.is_trivial()));
        assert!(d.is_partition(&m));
    }

    #[test]
    fn group_with_absorbing_element() {
        let m = z2_with_absorbing();
        let d = CliffordData::of_inverse(&m).unwrap();
        assert_eq!(d.idempotents, vec![0, 2]);
        assert!(find_isomorphism(&d.groups[0].group, &FiniteCommMonoid::cyclic_group(2)).is_some());
        assert!(d.groups[1].group.is_trivial());
        assert!(d.is_partition(&m));
        assert_eq!(d.structure_map(&m, 0, 1), Some(vec![0, 0]));
        assert_eq!(d.structure_map(&m, 1, 0), None);

        let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
        let d = CliffordData::of_inverse(&h).unwrap();
        assert_eq!(d.groups[0].elements.len(), 3);
        assert_eq!(d.groups[1].elements, vec![3]);
    }

    #[test]
    fn rejects_non_inverse() {
        let n2 = FiniteCommMonoid::truncated_naturals(2);
        assert_eq!(CliffordData::of_inverse(&n2).unwrap_err(), Error::NotInverseMonoid);
        assert!(monoid_algebra_decomposition(&n2, Rationals).is_err());
    }

    #[test]
    fn decomposition_of_two_chain() {
        let m = FiniteCommMonoid::chain(2);
        let d = monoid_algebra_decomposition(&m, Rationals).unwrap();
        let want = ExactMatrix::from_i64(Rationals, 2, 2, &[1, 0, 1, 1]).unwrap();
        assert_eq!(d.matrix, want);
        d.certify(&m).unwrap();
    }

    #[test]
    fn decomposition_of_z2_over_f3() {
        let m = FiniteCommMonoid::cyclic_group(2);
        let k = PrimeField::new(3).unwrap();
        let d = monoid_algebra_decomposition(&m, k).unwrap();
        assert_eq!(d.matrix, ExactMatrix::identity(k, 2));
        d.certify(&m).unwrap();
    }

    #[test]
    fn decomposition_of_z2_with_absorbing() {
        let m = z2_with_absorbing();
        let d = monoid_algebra_decomposition(&m, Rationals).unwrap();
        assert_eq!(d.rank(), 3);
        assert!(d.multiplicativity_failures(&m).is_empty());
    }
}
