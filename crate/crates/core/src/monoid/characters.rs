use super::{enumerate_hom_maps, CliffordData, FiniteAbelianGroup, FiniteCommMonoid};
use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::field::{FieldSpec, PrimeField};

/// All characters `χ: M -> k_mu` (`χ(0) = 1`, `χ(x + y) = χ(x)χ(y)`) over a
/// finite field, as residue lists indexed by the elements of `M`.
pub fn characters(m: &FiniteCommMonoid, field: FieldSpec, cap: u128) -> Result<Vec<Vec<u32>>> {
    let k_mu = field.multiplicative_monoid()?;
    Ok(enumerate_hom_maps(m, &k_mu, cap)?
        .into_iter()
        .map(|chi| chi.into_iter().map(|v| v as u32).collect())
        .collect())
}

/// The matrix `(χ_i(x_j))`.
pub fn character_pairing(m: &FiniteCommMonoid, field: FieldSpec, chars: &[Vec<u32>]) -> Result<ExactMatrix<PrimeField>> {
    let FieldSpec::Prime(p) = field else {
        return Err(Error::NotFiniteField);
    };
    let k = PrimeField::new(p)?;
    let rows: Vec<Vec<u32>> = chars.to_vec();
    ExactMatrix::from_rows(k, m.order(), &rows)
}

/// `Σ_e |Hom(G_e, F_p^×)|`: a character is fixed by the largest idempotent
/// it sends to 1 together with a group character of that unit group.
pub fn expected_character_count(m: &FiniteCommMonoid, p: u32) -> Result<u64> {
    let data = CliffordData::of_inverse(m)?;
    Ok(data
        .groups
        .iter()
        .map(|g| FiniteAbelianGroup::of_group(&g.group).hom_count_to_units(p))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u128 = 1 << 20;

    #[test]
    fn two_chain_over_f2() {
        let m = FiniteCommMonoid::chain(2);
        let f2 = FieldSpec::Prime(2);
        let chars = characters(&m, f2, CAP).unwrap();
        assert_eq!(chars, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(character_pairing(&m, f2, &chars).unwrap().rank(), 2);
    }

    #[test]
    fn z2_with_absorbing_over_f5() {
        let m = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(2));
        let f5 = FieldSpec::Prime(5);
        let mut chars = characters(&m, f5, CAP).unwrap();
        chars.sort();
        assert_eq!(chars, vec![vec![1, 1, 0], vec![1, 1, 1], vec![1, 4, 0]]);
        assert_eq!(character_pairing(&m, f5, &chars).unwrap().rank(), 3);
        assert_eq!(expected_character_count(&m, 5).unwrap(), 3);
    }

    #[test]
    fn z3_over_f2_is_not_split() {
        let m = FiniteCommMonoid::cyclic_group(3);
        let chars = characters(&m, FieldSpec::Prime(2), CAP).unwrap();
        assert_eq!(chars, vec![vec![1, 1, 1]]);
        assert_eq!(expected_character_count(&m, 2).unwrap(), 1);
    }

    #[test]
    fn needs_finite_field() {
        let m = FiniteCommMonoid::chain(2);
        assert_eq!(characters(&m, FieldSpec::Rationals, CAP).unwrap_err(), Error::NotFiniteField);
    }
}
