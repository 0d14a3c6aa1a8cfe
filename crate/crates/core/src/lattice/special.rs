//! The particular sublattices and maps the verification suites rely on.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{
    common_denominator, dot, format_vector, integer_left_kernel, int_vector, root_system_of_roots, Lattice,
    LatticeError, Result, ShellStore, Vector,
};
use crate::numerics::{int, parse_rational, rat, Rational};

fn mod3(r: &Rational) -> Option<u8> {
    r.is_integer().then(|| r.to_integer().mod_floor(&BigInt::from(3)).to_u8().expect("residue < 3"))
}

/// {β ∈ E8 : ⟨β, a⟩ ≡ 0 (mod 3)}.
///
/// Basis: bᵢ − cᵢ b_p for i ≠ p together with 3b_p, where p is the first
/// basis vector pairing nontrivially with `a` and cᵢ solves cᵢ⟨b_p,a⟩ ≡ ⟨bᵢ,a⟩.
pub fn sublattice_k(e8: &Lattice, a: &[Rational]) -> Result<Lattice> {
    if !e8.contains(a) {
        return Err(LatticeError::NotInLattice(e8.label().to_string()));
    }
    let basis = e8.basis_vectors();
    let f: Vec<u8> = basis.iter().map(|b| mod3(&dot(b, a)).expect("E8 is integral")).collect();
    let p = f.iter().position(|&x| x != 0).ok_or(LatticeError::IndexOne)?;
    // f_p ∈ {1,2} is its own inverse mod 3
    let rows: Vec<Vector> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if i == p {
                b.iter().map(|x| x * int(3)).collect()
            } else {
                let c = int(((f[i] * f[p]) % 3) as i64);
                b.iter().zip(&basis[p]).map(|(x, y)| x - &c * y).collect()
            }
        })
        .collect();
    Lattice::from_rows("K", rows, e8.ambient_dim())
}

/// Splits `vectors` by ⟨v, a⟩ mod 3.
pub fn residue_classes(vectors: &[Vector], a: &[Rational]) -> [Vec<Vector>; 3] {
    let mut out: [Vec<Vector>; 3] = Default::default();
    for v in vectors {
        let r = mod3(&dot(v, a)).expect("integral pairing");
        out[r as usize].push(v.clone());
    }
    out
}

/// Doubled coordinates, exact for vectors in ½ℤ^d.
fn doubled(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| {
            let y = x * int(2);
            if y.is_integer() { y.to_integer().to_i64() } else { None }
        })
        .collect()
}

/// Searches the given shells in order, lexicographically within each, for
/// the first `a` whose index-3 sublattice has root system A8.
///
/// Norms 2, 4 and 6 leave 126, 84 and 78 roots in the kernel respectively,
/// so the first hit is at norm 8.
pub fn find_a_in(e8: &Lattice, store: &ShellStore, norms: &[i64]) -> Result<Vector> {
    let roots = store.shell(e8, 2)?;
    let roots2: Vec<Vec<i64>> = roots.vectors.iter().map(|r| doubled(r).expect("E8 is half-integral")).collect();
    for &m in norms {
        let shell = store.shell(e8, m)?;
        for a in &shell.vectors {
            let a2 = doubled(a).expect("E8 is half-integral");
            // 4⟨β,a⟩ ≡ 0 mod 12 ⟺ ⟨β,a⟩ ≡ 0 mod 3
            let kernel_roots = roots2
                .iter()
                .filter(|r| r.iter().zip(&a2).map(|(x, y)| x * y).sum::<i64>() % 12 == 0)
                .count();
            if kernel_roots != 72 {
                continue;
            }
            let k = match sublattice_k(e8, a) {
                Ok(k) => k,
                Err(LatticeError::IndexOne) => continue,
                Err(e) => return Err(e),
            };
            let [k_roots, _, _] = residue_classes(&roots.vectors, a);
            if root_system_of_roots(&k, &k_roots).is_type('A', 8) {
                return Ok(a.clone());
            }
        }
    }
    Err(LatticeError::Exhausted(format!("no A8-type sublattice from norms {norms:?}")))
}

/// [`find_a_in`] over norms 2, 4, 6, 8.
pub fn find_a(e8: &Lattice, store: &ShellStore) -> Result<Vector> {
    find_a_in(e8, store, &[2, 4, 6, 8])
}

/// {β ∈ L : ⟨β, s⟩ = 0 for all s ∈ S}, via an integer left kernel of the
/// cross Gram matrix.
pub fn annihilator(l: &Lattice, s: &Lattice, label: &str) -> Result<Lattice> {
    let cross = l.basis().mul(&s.basis().transpose());
    let den = common_denominator((0..cross.rows()).flat_map(|i| (0..cross.cols()).map(move |j| (i, j))).map(|ij| &cross[ij]));
    let den = Rational::from_integer(den);
    let a: Vec<Vec<BigInt>> =
        (0..cross.rows()).map(|i| (0..cross.cols()).map(|j| (&cross[(i, j)] * &den).to_integer()).collect()).collect();
    let kernel = integer_left_kernel(&a);
    let rows: Vec<Vector> = kernel
        .iter()
        .map(|c| l.combine(&c.iter().map(|x| Rational::from_integer(x.clone())).collect::<Vec<_>>()))
        .collect();
    Lattice::from_rows(label, rows, l.ambient_dim())
}

/// γ_{A_ℓ}(i): first ℓ+1−i entries i/(ℓ+1), remaining i entries −(ℓ+1−i)/(ℓ+1).
pub fn glue_vector(ell: usize, i: usize) -> Result<Vector> {
    if ell == 0 || i > ell {
        return Err(LatticeError::InvalidParameter(format!("glue index {i} for A{ell}")));
    }
    let n = (ell + 1) as i64;
    let i = i as i64;
    Ok((0..n).map(|j| if j < n - i { rat(i, n) } else { rat(-(n - i), n) }).collect())
}

/// Coordinate maps between ℤ^{n+1}, ℤ^{k+1} and ℤ^{(n+1)(k+1)}.
///
/// Indices are 0-based: `eta(i, ·)` places a vector in block `i`, `iota(i, ·)`
/// spreads ℤ^{k+1} over position `i` of every block.
#[derive(Debug, Clone, Copy)]
pub struct EmbeddingMaps {
    pub n: usize,
    pub k: usize,
}

impl EmbeddingMaps {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(LatticeError::InvalidParameter(format!("embedding maps ({n},{k})")));
        }
        Ok(EmbeddingMaps { n, k })
    }

    pub fn dim(&self) -> usize {
        (self.n + 1) * (self.k + 1)
    }

    pub fn eta(&self, i: usize, v: &[Rational]) -> Vector {
        assert!(i <= self.k && v.len() == self.n + 1);
        let mut out = vec![Rational::zero(); self.dim()];
        out[(self.n + 1) * i..(self.n + 1) * (i + 1)].clone_from_slice(v);
        out
    }

    pub fn iota(&self, i: usize, v: &[Rational]) -> Vector {
        assert!(i <= self.n && v.len() == self.k + 1);
        let mut out = vec![Rational::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            out[(self.n + 1) * j + i] = x.clone();
        }
        out
    }

    /// Σⱼ ηⱼ: the diagonal copy.
    pub fn d(&self, v: &[Rational]) -> Vector {
        (0..=self.k).fold(vec![Rational::zero(); self.dim()], |acc, i| super::add(&acc, &self.eta(i, v)))
    }

    /// Σⱼ ιⱼ: each coordinate repeated n+1 times.
    pub fn mu(&self, v: &[Rational]) -> Vector {
        (0..=self.n).fold(vec![Rational::zero(); self.dim()], |acc, i| super::add(&acc, &self.iota(i, v)))
    }

    pub fn image(&self, label: &str, l: &Lattice, f: impl Fn(&[Rational]) -> Vector) -> Result<Lattice> {
        let rows = l.basis_vectors().iter().map(|r| f(r)).collect();
        Lattice::from_rows(label, rows, self.dim())
    }
}

/// L = E8³ with the three √2E8 sublattices M = (η₁−η₂)(E8),
/// N = (η₂−η₃)(E8), Ñ = (η₁−η₃)(E8).
#[derive(Debug, Clone)]
pub struct E8Cube {
    pub e8: Lattice,
    pub l: Lattice,
    pub m: Lattice,
    pub n: Lattice,
    pub nt: Lattice,
    /// Block maps ℤ⁸ → ℤ²⁴.
    pub maps: EmbeddingMaps,
}

impl E8Cube {
    pub fn new() -> Self {
        let e8 = Lattice::e8();
        let maps = EmbeddingMaps::new(7, 2).expect("valid sizes");
        let l = Lattice::direct_sum(&[&e8, &e8, &e8]).expect("nonempty");
        let diff = |i: usize, j: usize, label: &str| {
            maps.image(label, &e8, |v| super::sub(&maps.eta(i, v), &maps.eta(j, v))).expect("independent rows")
        };
        let m = diff(0, 1, "M");
        let n = diff(1, 2, "N");
        let nt = diff(0, 2, "Ntilde");
        E8Cube { e8, l, m, n, nt, maps }
    }

    /// ηᵢ(α) − ηⱼ(α).
    pub fn difference(&self, i: usize, j: usize, alpha: &[Rational]) -> Vector {
        super::sub(&self.maps.eta(i, alpha), &self.maps.eta(j, alpha))
    }

    pub fn m_plus_n(&self) -> Lattice {
        let mut rows = self.m.basis_vectors();
        rows.extend(self.n.basis_vectors());
        Lattice::from_rows("M+N", rows, 24).expect("M and N are independent")
    }

    /// The diagonal {(α, α, α)}.
    pub fn diagonal(&self) -> Lattice {
        self.maps.image("E", &self.e8, |v| self.maps.d(v)).expect("independent rows")
    }
}

impl Default for E8Cube {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone)]
pub struct CosetSystem {
    pub superlattice: Lattice,
    pub sublattice: Lattice,
    /// Indexed by (i, j) row-major for the A26 system.
    pub representatives: Vec<Vector>,
    pub index: BigInt,
}

impl CosetSystem {
    /// Fractional parts of sublattice coordinates; equal exactly when two
    /// vectors are congruent.
    fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        let c = self.sublattice.coordinates(v).expect("representative in the rational span");
        c.into_iter().map(|x| &x - Rational::from_integer(x.floor().to_integer())).collect()
    }

    pub fn pairwise_incongruent(&self) -> bool {
        let mut seen = HashSet::new();
        self.representatives.iter().all(|r| seen.insert(self.residue(r)))
    }

    pub fn all_in_superlattice(&self) -> bool {
        self.representatives.iter().all(|r| self.superlattice.contains(r))
    }

    pub fn to_text(&self, label: &str) -> String {
        let mut out = format!("griess-lab-cosets v1 {label} {}\n", self.representatives.len());
        for r in &self.representatives {
            out.push_str(&format_vector(r));
            out.push('\n');
        }
        out
    }

    pub fn parse_representatives(text: &str) -> Option<Vec<Vector>> {
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next()?.split_whitespace().collect();
        if header.len() != 4 || header[0] != "griess-lab-cosets" || header[1] != "v1" {
            return None;
        }
        let count: usize = header[3].parse().ok()?;
        let reps: Vec<Vector> = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(|x| parse_rational(x).ok()).collect::<Option<Vector>>())
            .collect::<Option<_>>()?;
        (reps.len() == count).then_some(reps)
    }
}

/// The 81 cosets of Y + A8³ in A26, with Y = μ(A2) and A8³ = ⊕ ηᵢ(A8).
pub fn coset_decomposition_a26(store: &ShellStore) -> Result<CosetSystem> {
    let maps = EmbeddingMaps::new(8, 2)?;
    let a26 = Lattice::a_n(26)?;
    let a2 = Lattice::a_n(2)?;
    let a8 = Lattice::a_n(8)?;
    let mut rows = maps.image("Y", &a2, |v| maps.mu(v))?.basis_vectors();
    for i in 0..3 {
        rows.extend(maps.image("A8", &a8, |v| maps.eta(i, v))?.basis_vectors());
    }
    let sub = Lattice::from_rows("Y+A8^3", rows, maps.dim())?;
    let index = a26.index_of(&sub).ok_or_else(|| LatticeError::InvalidParameter("Y+A8^3 not of finite index".into()))?;

    let label = "A26-cosets";
    let representatives = match store.get_artifact(label)?.and_then(|t| CosetSystem::parse_representatives(&t)) {
        Some(reps) => reps,
        None => {
            let alpha = [int_vector(&[1, -1, 0]), int_vector(&[0, 1, -1])];
            let mu = [maps.mu(&alpha[0]), maps.mu(&alpha[1])];
            let nu = |which: usize, v: &[Rational]| super::sub(&maps.eta(which, v), &maps.eta(which + 1, v));
            let mut reps = Vec::with_capacity(81);
            for i in 0..9 {
                for j in 0..9 {
                    let shift: Vector = mu[0]
                        .iter()
                        .zip(&mu[1])
                        .map(|(x, y)| -(x * int(i as i64) + y * int(j as i64)) / int(9))
                        .collect();
                    let g = super::add(&nu(0, &glue_vector(8, i)?), &nu(1, &glue_vector(8, j)?));
                    reps.push(super::add(&shift, &g));
                }
            }
            let system = CosetSystem { superlattice: a26.clone(), sublattice: sub.clone(), representatives: reps.clone(), index: index.clone() };
            store.put_artifact(label, &system.to_text(label))?;
            reps
        }
    };
    Ok(CosetSystem { superlattice: a26, sublattice: sub, representatives, index })
}
