use crate::numerics::{int, Rational};

/// The data of a simple Lie algebra needed for Sugawara central charges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieType {
    pub name: String,
    pub rank: u32,
    pub dim: u32,
    pub dual_coxeter: u32,
}

impl LieType {
    /// sl_n, type A_{n−1}.
    pub fn sl(n: u32) -> Self {
        LieType { name: format!("sl{n}"), rank: n - 1, dim: n * n - 1, dual_coxeter: n }
    }

    pub fn e8() -> Self {
        LieType { name: "E8".into(), rank: 8, dim: 248, dual_coxeter: 30 }
    }
}

/// k·dim g/(k + h∨).
pub fn affine_central_charge(g: &LieType, k: u32) -> Rational {
    Rational::new((k * g.dim).into(), (k + g.dual_coxeter).into())
}

/// Central charge of the commutant of the Heisenberg subalgebra: the affine
/// value minus rank g.
pub fn parafermion_central_charge(g: &LieType, k: u32) -> Rational {
    affine_central_charge(g, k) - int(g.rank.into())
}
