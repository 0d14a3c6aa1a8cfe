//! The bilinear 2-cocycle ε₀ fixing signs in the twisted group algebra.
//!
//! Values are bits; conversion to a sign happens in the Fock layer.

use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::lattice::{dot, DoubledCoordinates, Lattice};
use crate::numerics::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("lattice {0} is not even")]
    OddLattice(String),
    #[error("rank {0} exceeds the 64-bit table limit")]
    RankTooLarge(usize),
    #[error("vector is not in lattice {0}")]
    NotInLattice(String),
}

/// ε₀ on a fixed ordered basis, extended bilinearly.
#[derive(Debug, Clone)]
pub struct CocycleTable {
    lattice: Lattice,
    /// bits[i] has bit j set iff ε₀(bᵢ, bⱼ) = 1.
    bits: Vec<u64>,
    doubled: DoubledCoordinates,
}

fn parity_of(r: &Rational) -> u8 {
    r.to_integer().mod_floor(&2.into()).to_u8().expect("residue < 2")
}

/// Upper-triangular solution of ε₀(α,α) ≡ ⟨α,α⟩/2 and
/// ε₀(α,β) − ε₀(β,α) ≡ ⟨α,β⟩ (mod 2).
pub fn build_epsilon0(l: &Lattice) -> Result<CocycleTable, CocycleError> {
    if !l.is_even() {
        return Err(CocycleError::OddLattice(l.label().to_string()));
    }
    let r = l.rank();
    if r > 64 {
        return Err(CocycleError::RankTooLarge(r));
    }
    let g = l.gram();
    let mut bits = vec![0u64; r];
    for i in 0..r {
        for j in i..r {
            let b = if i == j { parity_of(&(&g[(i, i)] / Rational::from_integer(2.into()))) } else { parity_of(&g[(i, j)]) };
            if b == 1 {
                bits[i] |= 1 << j;
            }
        }
    }
    Ok(CocycleTable { lattice: l.clone(), bits, doubled: l.doubled_coordinate_map() })
}

impl CocycleTable {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.bits.len()
    }

    pub fn basis_bit(&self, i: usize, j: usize) -> u8 {
        ((self.bits[i] >> j) & 1) as u8
    }

    /// Coordinates mod 2 packed into a word.
    pub fn mask(&self, v: &[Rational]) -> Result<u64, CocycleError> {
        let c = self.lattice.int_coordinates(v).ok_or_else(|| CocycleError::NotInLattice(self.lattice.label().to_string()))?;
        Ok(c.iter().enumerate().fold(0u64, |m, (i, x)| if x.is_odd() { m | (1 << i) } else { m }))
    }

    /// Same as [`Self::mask`] for a vector given by its doubled coordinates.
    pub fn mask_doubled(&self, doubled: &[i32]) -> Option<u64> {
        let c = self.doubled.coords(doubled)?;
        Some(c.iter().enumerate().fold(0u64, |m, (i, x)| if x & 1 == 1 { m | (1 << i) } else { m }))
    }

    /// ε(γ, δ) from coordinate masks.
    pub fn epsilon_masks(&self, g: u64, d: u64) -> u8 {
        let mut acc = 0u32;
        let mut rest = g;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc += (self.bits[i] & d).count_ones();
            rest &= rest - 1;
        }
        (acc & 1) as u8
    }

    pub fn epsilon(&self, g: &[Rational], d: &[Rational]) -> Result<u8, CocycleError> {
        Ok(self.epsilon_masks(self.mask(g)?, self.mask(d)?))
    }

    /// True iff ε vanishes on every basis pair of `s`.
    pub fn verify_triviality(&self, s: &Lattice) -> Result<bool, CocycleError> {
        let masks = s.basis_vectors().iter().map(|b| self.mask(b)).collect::<Result<Vec<_>, _>>()?;
        Ok(masks.iter().all(|&x| masks.iter().all(|&y| self.epsilon_masks(x, y) == 0)))
    }

    /// Both defining congruences on a pair of lattice vectors.
    pub fn satisfies_congruences(&self, a: &[Rational], b: &[Rational]) -> Result<bool, CocycleError> {
        let two = Rational::from_integer(2.into());
        let diag = self.epsilon(a, a)? == parity_of(&(dot(a, a) / &two));
        let skew = (self.epsilon(a, b)? + self.epsilon(b, a)?) % 2 == parity_of(&dot(a, b));
        Ok(diag && skew)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vector;

    #[test]
    fn rejects_odd() {
        let z2 = Lattice::z_n(2).unwrap();
        assert!(matches!(build_epsilon0(&z2), Err(CocycleError::OddLattice(_))));
    }

    #[test]
    fn basis_diagonal() {
        let e8 = Lattice::e8();
        let t = build_epsilon0(&e8).unwrap();
        for (i, b) in e8.basis_vectors().iter().enumerate() {
            // roots: ⟨b,b⟩/2 = 1
            assert_eq!(t.epsilon(b, b).unwrap(), 1);
            assert_eq!(t.basis_bit(i, i), 1);
        }
    }

    #[test]
    fn zero_argument() {
        let a2 = Lattice::a_n(2).unwrap();
        let t = build_epsilon0(&a2).unwrap();
        let v = int_vector(&[1, -1, 0]);
        assert_eq!(t.epsilon(&v, &int_vector(&[0, 0, 0])).unwrap(), 0);
        assert!(t.epsilon(&v, &int_vector(&[1, 0, 0])).is_err());
    }
}
