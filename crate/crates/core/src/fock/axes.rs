use std::collections::BTreeMap;

use num_traits::Zero;

use super::voa::{cycle_blocks, rho_twist, virasoro_of_subspace, LatticeVoa};
use super::{FockError, FockMonomial, FockState};
use crate::lattice::{
    add, find_a, neg, residue_classes, root_system_type, scale, sublattice_k, E8Cube, EmbeddingMaps, Lattice, ShellStore, Vector,
};
use crate::numerics::{int, rat, Eisenstein, Matrix, Rational};

/// The nine Ising vectors e^{i,j} = ρⁱ(e_{S_j}) with (S₀, S₁, S₂) = (M, N, Ñ),
/// together with the data they are built from.
#[derive(Debug, Clone)]
pub struct AxisFamily {
    pub cube: E8Cube,
    pub voa: LatticeVoa,
    /// The norm 8 vector of E8 defining K and ρ.
    pub a: Vector,
    pub k: Lattice,
    pub k_roots: Vec<Vector>,
    axes: Vec<FockState>,
}

/// Index of e^{i,j} in row-major order.
pub fn axis_index(i: usize, j: usize) -> usize {
    3 * (i % 3) + j % 3
}

impl AxisFamily {
    pub fn build(store: &ShellStore) -> Result<Self, FockError> {
        let cube = E8Cube::new();
        let voa = LatticeVoa::new(&cube.l)?;
        let a = find_a(&cube.e8, store)?;
        let k = sublattice_k(&cube.e8, &a)?;
        let k_roots = store.shell(&k, 2)?.vectors.clone();
        let base = [
            voa.ising_of_sqrt2e8(&cube.m, store)?,
            voa.ising_of_sqrt2e8(&cube.n, store)?,
            voa.ising_of_sqrt2e8(&cube.nt, store)?,
        ];
        let mut axes = Vec::with_capacity(9);
        for i in 0..3 {
            for e in &base {
                axes.push(rho_twist(&a, i as i64, e)?);
            }
        }
        Ok(AxisFamily { cube, voa, a, k, k_roots, axes })
    }

    pub fn axis(&self, i: usize, j: usize) -> &FockState {
        &self.axes[axis_index(i, j)]
    }

    pub fn axes(&self) -> &[FockState] {
        &self.axes
    }

    /// ã = (a, −a, 0).
    pub fn a_tilde(&self) -> Vector {
        let mut v = self.cube.maps.eta(0, &self.a);
        for (x, y) in v.iter_mut().zip(self.cube.maps.eta(1, &self.a)) {
            *x -= y;
        }
        v
    }

    pub fn rho(&self, k: i64, s: &FockState) -> Result<FockState, FockError> {
        rho_twist(&self.a, k, s)
    }

    /// The lift of the cyclic block shift (x, y, z) ↦ (z, x, y), carrying
    /// M → N → Ñ.
    pub fn h_map(&self, s: &FockState) -> FockState {
        cycle_blocks(s, 3, 1)
    }

    pub fn is_k_root_type_a8(&self, store: &ShellStore) -> Result<bool, FockError> {
        Ok(root_system_type(&self.k, store)?.is_type('A', 8))
    }

    /// The 9×9 matrix of ⟨e^p, e^q⟩.
    pub fn gram(&self) -> Result<Vec<Vec<Eisenstein>>, FockError> {
        let mut g = vec![vec![Eisenstein::zero(); 9]; 9];
        for p in 0..9 {
            for q in p..9 {
                let v = self.voa.invariant_form(&self.axes[p], &self.axes[q])?;
                g[q][p] = v.clone();
                g[p][q] = v;
            }
        }
        Ok(g)
    }

    /// The projection X^r of e_M onto the ζ^{2r}-eigenspace of ρ, for r = 0, 1, 2.
    pub fn real_form_components(&self) -> Result<[FockState; 3], FockError> {
        let e = self.axis(0, 0);
        let twists = [e.clone(), self.rho(1, e)?, self.rho(2, e)?];
        let comp = |r: i64| {
            let parts = (0..3).map(|t| (Eisenstein::zeta_pow(r * t as i64).scale(&rat(1, 3)), &twists[t]));
            FockState::combination(e.dim(), parts)
        };
        Ok([comp(0), comp(1), comp(2)])
    }

    /// E_α = Σᵢ e^{ηᵢ(α)} for α ∈ K(2).
    pub fn e_alpha(&self, alpha: &[Rational]) -> Result<FockState, FockError> {
        let mut s = FockState::zero(24);
        for i in 0..3 {
            s = s.add(&FockState::exponential(&self.cube.maps.eta(i, alpha))?);
        }
        Ok(s)
    }

    /// (α, α, α).
    pub fn h_alpha_vector(&self, alpha: &[Rational]) -> Vector {
        self.cube.maps.d(alpha)
    }

    pub fn omega_e(&self) -> Result<FockState, FockError> {
        virasoro_of_subspace(&self.cube.diagonal().basis_vectors(), 24)
    }

    pub fn omega_m_plus_n(&self) -> Result<FockState, FockError> {
        virasoro_of_subspace(&self.cube.m_plus_n().basis_vectors(), 24)
    }

    /// Ω from the Sugawara construction of the level 3 affine algebra on
    /// the weight one space spanned by the diagonal Heisenberg and E_α:
    /// (1/24)[6ω_E + Σ_{α∈K(2)} (E_α)₋₁(−E₋α)]. The frame sum over the
    /// Cartan part is 6ω_E by the dual-basis identity.
    pub fn sugawara_definition(&self) -> Result<FockState, FockError> {
        let mut acc = self.omega_e()?.scale_rational(&int(6));
        for alpha in &self.k_roots {
            let x = self.e_alpha(alpha)?;
            let y = self.e_alpha(&neg(alpha))?.scale_rational(&int(-1));
            acc = acc.add(&self.voa.mode(&x, &y, -1)?);
        }
        Ok(acc.scale_rational(&rat(1, 24)))
    }

    /// ω_E + (3/4)ω_{M+N} − (1/12)Σ e^{ηᵢ(α)−ηⱼ(α)}, the sum running over
    /// the 216 distinct exponents (α ∈ K(2), i < j).
    pub fn sugawara_closed_form(&self) -> Result<FockState, FockError> {
        let mut s = self.omega_e()?.add(&self.omega_m_plus_n()?.scale_rational(&rat(3, 4)));
        let c = Eisenstein::from_rational(rat(-1, 12));
        for alpha in &self.k_roots {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                s.add_term(FockMonomial::new(&[], &self.cube.difference(i, j, alpha))?, c.clone());
            }
        }
        Ok(s)
    }

    /// ω_L − (8/9)Σ e^{i,j}.
    pub fn sugawara_from_axes(&self) -> Result<FockState, FockError> {
        let sum = FockState::combination(24, self.axes.iter().map(|e| (Eisenstein::from_int(1), e)));
        Ok(self.voa.conformal_vector()?.sub(&sum.scale_rational(&rat(8, 9))))
    }

    /// Applies (H_α)_n and (E_α)_n for n = 0, 1 to every axis and every
    /// α ∈ K(2), collecting the nonzero results.
    pub fn commutant_annihilation(&self) -> Result<CommutantReport, FockError> {
        let mut report = CommutantReport::default();
        for alpha in &self.k_roots {
            let h = self.h_alpha_vector(alpha);
            let e = self.e_alpha(alpha)?;
            for (p, axis) in self.axes.iter().enumerate() {
                for n in 0..2 {
                    let checks = [("H", self.voa.heisenberg_mode(&h, n, axis)?), ("E", self.voa.mode(&e, axis, n)?)];
                    for (kind, out) in checks {
                        report.checked += 1;
                        if !out.is_zero() {
                            report.failures.push(CommutantFailure { alpha: alpha.clone(), axis: (p / 3, p % 3), mode: n, kind });
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutantFailure {
    pub alpha: Vector,
    pub axis: (usize, usize),
    pub mode: i32,
    pub kind: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CommutantReport {
    pub checked: usize,
    pub failures: Vec<CommutantFailure>,
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn coordinates_in(basis: &[FockState], target: &FockState) -> Option<Vec<Eisenstein>> {
    let mut rows: BTreeMap<&FockMonomial, usize> = BTreeMap::new();
    for s in basis.iter().chain(std::iter::once(target)) {
        for (m, _) in s.terms() {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
    }
    let mut cols = vec![vec![Eisenstein::zero(); rows.len()]; basis.len()];
    for (c, s) in basis.iter().enumerate() {
        for (m, x) in s.terms() {
            cols[c][rows[m]] = x.clone();
        }
    }
    let mut rhs = vec![Eisenstein::zero(); rows.len()];
    for (m, x) in target.terms() {
        rhs[rows[m]] = x.clone();
    }
    let a = Matrix::from_cols(&cols, rows.len());
    let x = a.solve(&rhs).ok()?;
    if a.rank() < basis.len() {
        return None;
    }
    Some(x)
}

/// The conformal vector of the sl₂ parafermion algebra at level k, realised
/// in V_{A26} with h = μ(α)(−1)𝟙, x = Σᵢ e^{ιᵢ(α)}, y = −Σᵢ e^{−ιᵢ(α)}.
#[derive(Debug, Clone)]
pub struct Parafermion {
    pub voa: LatticeVoa,
    pub level: i64,
    pub h: Vector,
    pub x: FockState,
    pub y: FockState,
}

impl Parafermion {
    /// Uses the A₂ root α = (1, −1, 0) and the nine orthogonal copies ιᵢ(α)
    /// inside A26, giving level 9.
    pub fn a26() -> Result<Self, FockError> {
        let maps = EmbeddingMaps::new(8, 2)?;
        let a26 = Lattice::a_n(26)?;
        let voa = LatticeVoa::new(&a26)?;
        let alpha = vec![int(1), int(-1), int(0)];
        let dim = maps.dim();
        let mut x = FockState::zero(dim);
        let mut y = FockState::zero(dim);
        for i in 0..=maps.n {
            let b = maps.iota(i, &alpha);
            x = x.add(&FockState::exponential(&b)?);
            y = y.sub(&FockState::exponential(&neg(&b))?);
        }
        Ok(Parafermion { voa, level: (maps.n + 1) as i64, h: maps.mu(&alpha), x, y })
    }

    /// (1/(2k(k+2)))(s·k·h(−2) − h(−1)² + 2k·x₋₁y). With [x, y] = h the
    /// Virasoro element needs s = −1.
    pub fn omega_with_sign(&self, s: i64) -> Result<FockState, FockError> {
        let k = self.level;
        let dim = self.voa.dim();
        let zero = vec![int(0); dim];
        let h2 = FockState::oscillators(&[(2, &self.h)], &zero)?;
        let hh = FockState::oscillators(&[(1, &self.h), (1, &self.h)], &zero)?;
        let xy = self.voa.mode(&self.x, &self.y, -1)?;
        let sum = h2.scale_rational(&int(s * k)).sub(&hh).add(&xy.scale_rational(&int(2 * k)));
        Ok(sum.scale_rational(&rat(1, 2 * k * (k + 2))))
    }

    /// The certified parafermion conformal vector.
    pub fn omega(&self) -> Result<FockState, FockError> {
        let w = self.omega_with_sign(-1)?;
        let sq = self.voa.griess_product(&w, &w)?;
        if sq != w.scale_rational(&int(2)) {
            return Err(FockError::NotIdempotent("parafermion ω".into()));
        }
        Ok(w)
    }

    /// h(−1)𝟙.
    pub fn h_state(&self) -> Result<FockState, FockError> {
        FockState::oscillators(&[(1, &self.h)], &vec![int(0); self.voa.dim()])
    }
}

/// Σ_{i} ρⁱ(e_M) as predicted: (3/16)ω_M + (3/32)Σ_{α∈K(2)} e^{(α,−α,0)}.
pub fn rho_orbit_sum_prediction(family: &AxisFamily) -> Result<FockState, FockError> {
    let mut s = virasoro_of_subspace(&family.cube.m.basis_vectors(), 24)?.scale_rational(&rat(3, 16));
    for alpha in &family.k_roots {
        s.add_term(FockMonomial::new(&[], &family.cube.difference(0, 1, alpha))?, Eisenstein::from_rational(rat(3, 32)));
    }
    Ok(s)
}

/// (b, −b, 0) for an E8 vector b.
pub fn m_vector(cube: &E8Cube, b: &[Rational]) -> Vector {
    add(&cube.maps.eta(0, b), &scale(&cube.maps.eta(1, b), &int(-1)))
}

/// E8 roots split by ⟨a, α⟩ mod 3, as used for the supports of X¹ and X².
pub fn root_classes(family: &AxisFamily, store: &ShellStore) -> Result<[Vec<Vector>; 3], FockError> {
    let roots = store.shell(&family.cube.e8, 2)?;
    Ok(residue_classes(&roots.vectors, &family.a))
}
