use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;

use super::engine::mode_terms;
use super::state::{doubled, FockMonomial, FockState, Osc};
use super::FockError;
use crate::cocycle::{build_epsilon0, CocycleTable};
use crate::lattice::{format_vector, DoubledCoordinates, Lattice, ShellStore, Vector};
use crate::numerics::{int, rat, Eisenstein, RatMatrix, Rational};

/// The weight ≤ 2 part of V_L for an even lattice L given in ambient
/// coordinates.
#[derive(Debug, Clone)]
pub struct LatticeVoa {
    lattice: Lattice,
    cocycle: CocycleTable,
    coords: DoubledCoordinates,
    /// basis rows, doubled, to confirm exponents lie in L exactly
    basis2: Vec<Vec<i64>>,
}

fn to_big(r: Rational64) -> Rational {
    Rational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

struct Prepared<'a> {
    mono: &'a FockMonomial,
    coef: &'a Eisenstein,
    weight: i32,
    mask: u64,
}

impl LatticeVoa {
    pub fn new(lattice: &Lattice) -> Result<Self, FockError> {
        let cocycle = build_epsilon0(lattice)?;
        let basis2 = lattice
            .basis_vectors()
            .iter()
            .map(|r| doubled(r).map(|v| v.into_iter().map(i64::from).collect()))
            .collect::<Result<_, _>>()?;
        Ok(LatticeVoa { lattice: lattice.clone(), cocycle, coords: lattice.doubled_coordinate_map(), basis2 })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn cocycle(&self) -> &CocycleTable {
        &self.cocycle
    }

    fn mask(&self, gamma: &[i32]) -> Result<u64, FockError> {
        let not_in = || FockError::NotInLattice(format_vector(&gamma.iter().map(|&x| rat(x as i64, 2)).collect::<Vec<_>>()));
        // coordinates are read off pivot columns only; rebuild to be sure
        let c = self.coords.coords(gamma).ok_or_else(not_in)?;
        let mut back = vec![0i64; gamma.len()];
        for (ci, row) in c.iter().zip(&self.basis2) {
            for (b, x) in back.iter_mut().zip(row) {
                *b += ci * x;
            }
        }
        if back.iter().zip(gamma).any(|(b, &g)| *b != g as i64) {
            return Err(not_in());
        }
        Ok(c.iter().enumerate().fold(0u64, |m, (i, x)| if x & 1 == 1 { m | (1 << i) } else { m }))
    }

    fn prepare<'a>(&self, s: &'a FockState) -> Result<Vec<Prepared<'a>>, FockError> {
        if s.dim() != self.dim() {
            return Err(FockError::Malformed(format!("state of dimension {} in a space of dimension {}", s.dim(), self.dim())));
        }
        let mut masks: HashMap<&[i32], u64> = HashMap::new();
        let mut out = Vec::with_capacity(s.len());
        for (m, c) in s.terms() {
            let weight = m.weight().ok_or(FockError::Inhomogeneous)? as i32;
            let g = m.gamma_doubled();
            let mask = match masks.get(g) {
                Some(&x) => x,
                None => {
                    let x = self.mask(g)?;
                    masks.insert(g, x);
                    x
                }
            };
            out.push(Prepared { mono: m, coef: c, weight, mask });
        }
        Ok(out)
    }

    fn pair_terms(&self, a: &Prepared, b: &Prepared, n: i32, out: &mut HashMap<FockMonomial, Eisenstein>) -> Result<(), FockError> {
        let w = a.weight + b.weight - n - 1;
        if w < 0 {
            return Ok(());
        }
        let beta = a.mono.gamma_doubled();
        let gamma = b.mono.gamma_doubled();
        if w > 2 {
            // still exact when the exponent alone outweighs the result
            let exp_w8: i32 = beta.iter().zip(gamma).map(|(x, y)| (x + y) * (x + y)).sum();
            if exp_w8 > 8 * w {
                return Ok(());
            }
            return Err(FockError::WeightOverflow(w as i64));
        }
        let terms = mode_terms(a.mono.oscillators(), beta, b.mono.oscillators(), gamma, n, w);
        if terms.is_empty() {
            return Ok(());
        }
        let sum: Box<[i32]> = beta.iter().zip(gamma).map(|(x, y)| x + y).collect();
        let sign = if self.cocycle.epsilon_masks(a.mask, b.mask) == 1 { -1 } else { 1 };
        let ab = a.coef * b.coef;
        for (osc, c) in terms {
            if c.is_zero() {
                continue;
            }
            let coef = ab.scale(&(to_big(c) * int(sign)));
            let key = FockMonomial::from_parts(osc, sum.clone());
            let slot = out.entry(key).or_insert_with(Eisenstein::zero);
            *slot += &coef;
        }
        Ok(())
    }

    /// a_n b, extended bilinearly. Every term pair must land in weight ≤ 2.
    pub fn mode(&self, a: &FockState, b: &FockState, n: i32) -> Result<FockState, FockError> {
        let pa = self.prepare(a)?;
        let pb = self.prepare(b)?;
        let partial: Vec<HashMap<FockMonomial, Eisenstein>> = pa
            .par_chunks(8)
            .map(|chunk| {
                let mut acc = HashMap::new();
                for x in chunk {
                    for y in &pb {
                        self.pair_terms(x, y, n, &mut acc)?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<_, FockError>>()?;
        let mut out = FockState::zero(self.dim());
        for acc in partial {
            for (m, c) in acc {
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    fn require_weight(s: &FockState, w: i64) -> Result<(), FockError> {
        match s.weight()? {
            Some(x) if x != w => Err(FockError::WeightMismatch { expected: w, found: x }),
            _ => Ok(()),
        }
    }

    /// a·b = a₁b on weight 2.
    pub fn griess_product(&self, a: &FockState, b: &FockState) -> Result<FockState, FockError> {
        Self::require_weight(a, 2)?;
        Self::require_weight(b, 2)?;
        self.mode(a, b, 1)
    }

    /// ⟨a,b⟩ with ⟨a,b⟩𝟙 = a₃b on weight 2. Only pairs with opposite
    /// exponents reach the vacuum, so b is indexed by exponent first.
    pub fn invariant_form(&self, a: &FockState, b: &FockState) -> Result<Eisenstein, FockError> {
        Self::require_weight(a, 2)?;
        Self::require_weight(b, 2)?;
        let pa = self.prepare(a)?;
        let pb = self.prepare(b)?;
        let mut by_exp: HashMap<&[i32], Vec<&Prepared>> = HashMap::new();
        for y in &pb {
            by_exp.entry(y.mono.gamma_doubled()).or_default().push(y);
        }
        let total = pa
            .par_iter()
            .map(|x| {
                let opposite: Vec<i32> = x.mono.gamma_doubled().iter().map(|v| -v).collect();
                let mut acc = Eisenstein::zero();
                for y in by_exp.get(opposite.as_slice()).into_iter().flatten() {
                    let terms = mode_terms(x.mono.oscillators(), x.mono.gamma_doubled(), y.mono.oscillators(), y.mono.gamma_doubled(), 3, 0);
                    let c: Rational64 = terms.into_iter().map(|(_, c)| c).sum();
                    if c.is_zero() {
                        continue;
                    }
                    let sign = if self.cocycle.epsilon_masks(x.mask, y.mask) == 1 { -1 } else { 1 };
                    acc += &(x.coef * y.coef).scale(&(to_big(c) * int(sign)));
                }
                acc
            })
            .reduce(Eisenstein::zero, |a, b| a + b);
        Ok(total)
    }

    /// h(m) acting on s.
    pub fn heisenberg_mode(&self, h: &[Rational], m: i32, s: &FockState) -> Result<FockState, FockError> {
        let hs = FockState::oscillators(&[(1, h)], &vec![int(0); self.dim()])?;
        self.mode(&hs, s, m)
    }

    /// (e^β)_n s.
    pub fn exp_mode(&self, beta: &[Rational], n: i32, s: &FockState) -> Result<FockState, FockError> {
        self.mode(&FockState::exponential(beta)?, s, n)
    }

    /// ω_L for the span of the lattice.
    pub fn conformal_vector(&self) -> Result<FockState, FockError> {
        virasoro_of_subspace(&self.lattice.basis_vectors(), self.dim())
    }

    /// L(−1) = (ω_L)₀, defined here on weight ≤ 1.
    pub fn l_minus_one(&self, s: &FockState) -> Result<FockState, FockError> {
        self.mode(&self.conformal_vector()?, s, 0)
    }

    /// (1/16)ω_S + (1/32)Σ_{α∈S(4)} e^α for S ≅ √2E8, after checking the shells.
    pub fn ising_of_sqrt2e8(&self, s: &Lattice, store: &ShellStore) -> Result<FockState, FockError> {
        let roots = store.shell(s, 2)?;
        let four = store.shell(s, 4)?;
        if s.rank() != 8 || !roots.is_empty() || four.len() != 240 {
            return Err(FockError::WrongShell { label: s.label().to_string(), roots: roots.len(), norm4: four.len() });
        }
        let mut e = virasoro_of_subspace(&s.basis_vectors(), self.dim())?.scale_rational(&rat(1, 16));
        for v in &four.vectors {
            e.add_term(FockMonomial::new(&[], v)?, Eisenstein::from_rational(rat(1, 32)));
        }
        Ok(e)
    }
}

/// ω_S = ½ Σ bᵢ(−1)bⁱ(−1)𝟙 over a basis of S and its dual basis, written
/// through the orthogonal projection P = Bᵀ G⁻¹ B onto span S.
pub fn virasoro_of_subspace(rows: &[Vector], dim: usize) -> Result<FockState, FockError> {
    if rows.is_empty() {
        return Ok(FockState::zero(dim));
    }
    if rows.iter().any(|r| r.len() != dim) {
        return Err(FockError::Malformed(format!("subspace rows must have length {dim}")));
    }
    let b = RatMatrix::from_rows(rows.to_vec(), dim);
    let g = b.mul(&b.transpose());
    let ginv = g.inverse().map_err(|_| FockError::Degenerate(format!("{} rows of rank {}", rows.len(), g.rank())))?;
    let p = b.transpose().mul(&ginv).mul(&b);
    let zero = vec![int(0); dim];
    let mut s = FockState::zero(dim);
    for i in 0..dim {
        for j in i..dim {
            let x = &p[(i, j)];
            if x.is_zero() {
                continue;
            }
            let c = if i == j { x / int(2) } else { x.clone() };
            s.add_term(FockMonomial::new(&[(1, i), (1, j)], &zero)?, Eisenstein::from_rational(c));
        }
    }
    Ok(s)
}

/// Multiplies each e^γ term by ζ^{k⟨v,γ⟩}; v must pair integrally with
/// every exponent present.
pub fn twist(v: &[Rational], k: i64, s: &FockState) -> Result<FockState, FockError> {
    let v2 = doubled(v)?;
    let mut out = FockState::zero(s.dim());
    for (m, c) in s.terms() {
        let p: i64 = v2.iter().zip(m.gamma_doubled()).map(|(&x, &y)| x as i64 * y as i64).sum();
        if p % 4 != 0 {
            return Err(FockError::NotInLattice(format!("⟨v,γ⟩ not integral for γ = {}", format_vector(&m.gamma()))));
        }
        out.add_term(m.clone(), c * &Eisenstein::zeta_pow(k * p / 4));
    }
    Ok(out)
}

/// ρᵏ for ρ = exp(2πi ã(0)/3) with ã = (a, −a, 0).
pub fn rho_twist(a: &[Rational], k: i64, s: &FockState) -> Result<FockState, FockError> {
    let mut at = vec![int(0); s.dim()];
    let n = a.len();
    if s.dim() != 3 * n {
        return Err(FockError::Malformed(format!("ρ needs a state on three copies of dimension {n}")));
    }
    for i in 0..n {
        at[i] = a[i].clone();
        at[n + i] = -a[i].clone();
    }
    twist(&at, k, s)
}

/// The lift of −1: (−1)^{#oscillators} and γ ↦ −γ.
pub fn theta(s: &FockState) -> FockState {
    s.map_terms(|m, c| {
        let g: Box<[i32]> = m.gamma_doubled().iter().map(|x| -x).collect();
        let c = if m.oscillators().len() % 2 == 1 { -c.clone() } else { c.clone() };
        (FockMonomial::from_parts(m.oscillators().to_vec(), g), c)
    })
}

/// Moves ambient coordinates in blocks: coordinate i of block b goes to
/// block (b + shift) mod blocks. On E8³ with the block-diagonal cocycle this
/// is a vertex algebra automorphism.
pub fn cycle_blocks(s: &FockState, blocks: usize, shift: usize) -> FockState {
    let dim = s.dim();
    let size = dim / blocks;
    let target = |d: usize| ((d / size + shift) % blocks) * size + d % size;
    s.map_terms(|m, c| {
        let osc = m.oscillators().iter().map(|o| Osc { mode: o.mode, dir: target(o.dir as usize) as u8 }).collect();
        let mut g = vec![0i32; dim];
        for (d, &x) in m.gamma_doubled().iter().enumerate() {
            g[target(d)] = x;
        }
        (FockMonomial::from_parts(osc, g.into()), c.clone())
    })
}
