//! Integral lattices in ambient rational coordinates.
//!
//! A [`Lattice`] is a list of independent rows in ℚ^d; the inner product is
//! the standard one on ℚ^d. Every construction used downstream (block
//! embeddings, diagonal rescalings, glue vectors) is a coordinate map, so no
//! irrational orthonormal frames ever appear.

mod integer;
mod roots;
mod shell;
mod special;

pub use integer::{integer_left_kernel, integer_row_basis};
pub use roots::{root_system_type, root_system_of_roots, RootSystem};
pub use shell::{enumerate_shell, Shell, ShellStore, CACHE_ENV};
pub use special::{
    annihilator, coset_decomposition_a26, find_a, find_a_in, glue_vector, residue_classes, sublattice_k,
    CosetSystem, E8Cube, EmbeddingMaps,
};

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::numerics::{int, rat, NumericsError, RatMatrix, Rational};

/// Ambient coordinate vector.
pub type Vector = Vec<Rational>;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid lattice parameter: {0}")]
    InvalidParameter(String),
    #[error("rows are linearly dependent")]
    Degenerate,
    #[error("vector is not in lattice {0}")]
    NotInLattice(String),
    #[error("index one: the vector pairs into 3Z with the whole lattice")]
    IndexOne,
    #[error("search exhausted without a match: {0}")]
    Exhausted(String),
    #[error("lattice is not integral")]
    NotIntegral,
    #[error("cache file {path}: {reason}")]
    CacheFormat { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn norm(a: &[Rational]) -> Rational {
    dot(a, a)
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn int_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}

fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(entries: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    entries.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Solves for lattice coordinates through a fixed set of pivot columns.
#[derive(Debug, Clone)]
struct CoordinateMap {
    pivots: Vec<usize>,
    /// Transposed inverse of the pivot-column minor.
    inverse: RatMatrix,
}

#[derive(Clone)]
pub struct Lattice {
    label: String,
    basis: RatMatrix,
    gram: RatMatrix,
    coords: OnceLock<CoordinateMap>,
    half: OnceLock<Option<HalfIntegral>>,
}

/// Integer membership test for lattices inside ½ℤ^d: coordinates are solved
/// from 2v and confirmed by rebuilding 2v from the doubled basis.
#[derive(Debug, Clone)]
struct HalfIntegral {
    map: DoubledCoordinates,
    basis2: Vec<Vec<i64>>,
}

impl HalfIntegral {
    /// `None` when the integer route cannot decide (entries too large).
    fn int_coordinates(&self, v: &[Rational]) -> Option<Option<Vec<i64>>> {
        let d = self.basis2.first().map_or(0, Vec::len);
        if v.len() != d {
            return Some(None);
        }
        let mut doubled = Vec::with_capacity(d);
        for x in v {
            let y: Rational = x * int(2);
            if !y.is_integer() {
                return Some(None);
            }
            doubled.push(y.to_integer().to_i32()?);
        }
        let Some(c) = self.map.coords(&doubled) else { return Some(None) };
        let rebuilt = (0..d).all(|k| c.iter().zip(&self.basis2).map(|(ci, b)| *ci as i128 * b[k] as i128).sum::<i128>() == doubled[k] as i128);
        Some(rebuilt.then_some(c))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({}, rank {}, ambient {})", self.label, self.rank(), self.ambient_dim())
    }
}

impl Lattice {
    /// Rows of `basis` must be linearly independent.
    pub fn new(label: impl Into<String>, basis: RatMatrix) -> Result<Self> {
        if basis.rank() != basis.rows() {
            return Err(LatticeError::Degenerate);
        }
        let gram = basis.mul(&basis.transpose());
        let label = label.into().split_whitespace().collect::<Vec<_>>().join("_");
        Ok(Lattice { label, basis, gram, coords: OnceLock::new(), half: OnceLock::new() })
    }

    pub fn from_rows(label: impl Into<String>, rows: Vec<Vector>, ambient_dim: usize) -> Result<Self> {
        Self::new(label, RatMatrix::from_rows(rows, ambient_dim))
    }

    /// The lattice spanned over ℤ by arbitrary (possibly dependent) rows.
    pub fn generated_by(label: impl Into<String>, rows: &[Vector], ambient_dim: usize) -> Result<Self> {
        let den = common_denominator(rows.iter().flatten());
        let den_r = Rational::from_integer(den.clone());
        let scaled: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|x| (x * &den_r).to_integer()).collect())
            .collect();
        let basis: Vec<Vector> = integer_row_basis(scaled)
            .into_iter()
            .map(|r| r.into_iter().map(|x| Rational::new(x, den.clone())).collect())
            .collect();
        Self::from_rows(label, basis, ambient_dim)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vecs()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn det(&self) -> Rational {
        self.gram.det().expect("gram is square")
    }

    pub fn is_integral(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| is_integer(&self.gram[(i, j)])))
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| self.gram[(i, i)].to_integer().is_even())
    }

    fn coordinate_map(&self) -> &CoordinateMap {
        self.coords.get_or_init(|| {
            let pivots = self.basis.rref().pivots;
            let square = RatMatrix::from_rows(
                self.basis.row_vecs().into_iter().map(|r| pivots.iter().map(|&p| r[p].clone()).collect()).collect(),
                pivots.len(),
            );
            let inverse = square.inverse().expect("pivot columns of an independent basis are invertible");
            CoordinateMap { pivots, inverse: inverse.transpose() }
        })
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is outside the
    /// rational span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let map = self.coordinate_map();
        let restricted: Vec<Rational> = map.pivots.iter().map(|&p| v[p].clone()).collect();
        let coords = map.inverse.mul_vec(&restricted);
        if self.combine(&coords).as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }

    fn half_integral(&self) -> Option<&HalfIntegral> {
        self.half
            .get_or_init(|| {
                let two = int(2);
                let basis2 = (0..self.rank())
                    .map(|i| {
                        self.basis.row(i).iter().map(|x| {
                            let y: Rational = x * &two;
                            if y.is_integer() { y.to_integer().to_i64() } else { None }
                        }).collect::<Option<Vec<i64>>>()
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(HalfIntegral { map: self.try_doubled_coordinate_map()?, basis2 })
            })
            .as_ref()
    }

    /// Integer coordinates of a lattice vector.
    pub fn int_coordinates(&self, v: &[Rational]) -> Option<Vec<BigInt>> {
        if let Some(decided) = self.half_integral().and_then(|h| h.int_coordinates(v)) {
            return decided.map(|c| c.into_iter().map(BigInt::from).collect());
        }
        let c = self.coordinates(v)?;
        if c.iter().all(is_integer) {
            Some(c.into_iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.int_coordinates(v).is_some()
    }

    /// Σ cᵢ bᵢ.
    pub fn combine(&self, coeffs: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.ambient_dim()];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                *o += c * b;
            }
        }
        out
    }

    pub fn combine_int(&self, coeffs: &[i64]) -> Vector {
        let mut out = vec![Rational::zero(); self.ambient_dim()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = int(c);
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                *o += &c * b;
            }
        }
        out
    }

    /// True when every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.row_vecs().iter().all(|v| self.contains(v))
    }

    pub fn same_lattice(&self, other: &Lattice) -> bool {
        self.rank() == other.rank() && self.contains_lattice(other) && other.contains_lattice(self)
    }

    /// `[self : sub]` for a full-rank sublattice of the same rank.
    pub fn index_of(&self, sub: &Lattice) -> Option<BigInt> {
        if sub.rank() != self.rank() || !self.contains_lattice(sub) {
            return None;
        }
        let ratio = sub.det() / self.det();
        let root = ratio.to_integer().sqrt();
        if Rational::from_integer(&root * &root) == ratio {
            Some(root)
        } else {
            None
        }
    }

    /// A_n in the sum-zero hyperplane of ℤ^{n+1}, basis eᵢ − eᵢ₊₁.
    pub fn a_n(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(LatticeError::InvalidParameter("A_0".into()));
        }
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Rational::zero(); n + 1];
                r[i] = int(1);
                r[i + 1] = int(-1);
                r
            })
            .collect();
        Self::from_rows(format!("A{n}"), rows, n + 1)
    }

    pub fn z_n(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(LatticeError::InvalidParameter("Z^0".into()));
        }
        Self::new(format!("Z{n}"), RatMatrix::identity(n))
    }

    /// E8 as D8 together with the glue ½(1,…,1): coordinates all integers or
    /// all half-integers, with even coordinate sum.
    pub fn e8() -> Self {
        let half = rat(1, 2);
        let mut rows = Vec::with_capacity(8);
        let mut first = vec![-half.clone(); 8];
        first[0] = half.clone();
        first[7] = half;
        rows.push(first);
        let mut r = vec![Rational::zero(); 8];
        r[0] = int(1);
        r[1] = int(1);
        rows.push(r);
        for i in 0..6 {
            let mut r = vec![Rational::zero(); 8];
            r[i] = int(-1);
            r[i + 1] = int(1);
            rows.push(r);
        }
        Self::from_rows("E8", rows, 8).expect("E8 basis is independent")
    }

    /// √k·L realised as the diagonal x ↦ (x, …, x) with k copies.
    pub fn sqrt_scale(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(LatticeError::InvalidParameter("scale 0".into()));
        }
        let d = self.ambient_dim();
        let rows = self.basis.row_vecs().into_iter().map(|r| r.iter().cycle().take(k * d).cloned().collect()).collect();
        Self::from_rows(format!("sqrt{k}{}", self.label), rows, k * d)
    }

    pub fn direct_sum(parts: &[&Lattice]) -> Result<Self> {
        if parts.is_empty() {
            return Err(LatticeError::InvalidParameter("empty direct sum".into()));
        }
        let dim: usize = parts.iter().map(|l| l.ambient_dim()).sum();
        let mut rows = Vec::new();
        let mut offset = 0;
        for l in parts {
            for r in l.basis.row_vecs() {
                let mut row = vec![Rational::zero(); dim];
                row[offset..offset + r.len()].clone_from_slice(&r);
                rows.push(row);
            }
            offset += l.ambient_dim();
        }
        let label = if parts.iter().all(|l| l.label == parts[0].label) && parts.len() > 1 {
            format!("{}^{}", parts[0].label, parts.len())
        } else {
            parts.iter().map(|l| l.label.as_str()).collect::<Vec<_>>().join("+")
        };
        Self::from_rows(label, rows, dim)
    }

    /// Kronecker basis aᵢ ⊗ bⱼ inside ℚ^{d_A·d_B}, ordered with the `a`
    /// index slowest.
    pub fn tensor_product(a: &Lattice, b: &Lattice) -> Result<Self> {
        if !a.is_integral() || !b.is_integral() {
            return Err(LatticeError::NotIntegral);
        }
        let (da, db) = (a.ambient_dim(), b.ambient_dim());
        let mut rows = Vec::with_capacity(a.rank() * b.rank());
        for ra in a.basis.row_vecs() {
            for rb in b.basis.row_vecs() {
                let mut row = Vec::with_capacity(da * db);
                for x in &ra {
                    for y in &rb {
                        row.push(x * y);
                    }
                }
                rows.push(row);
            }
        }
        Self::from_rows(format!("{}x{}", a.label, b.label), rows, da * db)
    }

    /// Parses names such as `A8`, `Z3`, `E8`, `E8^3`, `sqrt2E8`, `A2xE8`.
    pub fn standard(name: &str) -> Result<Self> {
        let bad = || LatticeError::InvalidParameter(name.to_string());
        if let Some((l, r)) = name.split_once('x') {
            return Self::tensor_product(&Self::standard(l)?, &Self::standard(r)?);
        }
        if let Some(rest) = name.strip_prefix("sqrt") {
            let split = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
            let k: usize = rest[..split].parse().map_err(|_| bad())?;
            return Self::standard(&rest[split..])?.sqrt_scale(k);
        }
        if let Some((base, pow)) = name.split_once('^') {
            let m: usize = pow.parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            let l = Self::standard(base)?;
            let parts: Vec<&Lattice> = std::iter::repeat(&l).take(m).collect();
            return Self::direct_sum(&parts);
        }
        if name == "E8" {
            return Ok(Self::e8());
        }
        let size = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if let Some(n) = name.strip_prefix('A') {
            return Self::a_n(size(n)?);
        }
        if let Some(n) = name.strip_prefix('Z') {
            return Self::z_n(size(n)?);
        }
        Err(bad())
    }

    /// Integer coordinate solver for vectors given in doubled ambient
    /// coordinates (entries of 2v). Only valid for lattices inside ½ℤ^d.
    pub fn doubled_coordinate_map(&self) -> DoubledCoordinates {
        self.try_doubled_coordinate_map().expect("inverse entries fit in i64")
    }

    fn try_doubled_coordinate_map(&self) -> Option<DoubledCoordinates> {
        let map = self.coordinate_map();
        let den = common_denominator((0..map.inverse.rows()).flat_map(|i| (0..map.inverse.cols()).map(move |j| (i, j))).map(|ij| &map.inverse[ij]));
        let den_r = Rational::from_integer(den.clone());
        let matrix = (0..map.inverse.rows())
            .map(|i| (0..map.inverse.cols()).map(|j| (&map.inverse[(i, j)] * &den_r).to_integer().to_i64()).collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(DoubledCoordinates { pivots: map.pivots.clone(), matrix, den: 2 * den.to_i64()? })
    }

    /// Integer copy of `k·gram`, with `k` the common denominator.
    pub(crate) fn scaled_int_gram(&self) -> (Vec<Vec<i64>>, i64) {
        let den = common_denominator((0..self.rank()).flat_map(|i| (0..self.rank()).map(move |j| (i, j))).map(|ij| &self.gram[ij]));
        let den_r = Rational::from_integer(den.clone());
        let g = (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| (&self.gram[(i, j)] * &den_r).to_integer().to_i64().expect("gram entry fits in i64"))
                    .collect()
            })
            .collect();
        (g, den.to_i64().expect("denominator fits in i64"))
    }
}

/// See [`Lattice::doubled_coordinate_map`].
#[derive(Debug, Clone)]
pub struct DoubledCoordinates {
    pivots: Vec<usize>,
    matrix: Vec<Vec<i64>>,
    den: i64,
}

impl DoubledCoordinates {
    /// Lattice coordinates of v from 2v; `None` when they are not integers.
    /// Membership in the rational span is assumed, not checked.
    pub fn coords(&self, doubled: &[i32]) -> Option<Vec<i64>> {
        self.matrix
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(&self.pivots).map(|(m, &p)| m * doubled[p] as i64).sum();
                (s % self.den == 0).then_some(s / self.den)
            })
            .collect()
    }
}

/// Canonical total order for ambient vectors, used for every listing.
pub fn sort_vectors(vs: &mut [Vector]) {
    vs.sort();
}

/// First nonzero coordinate positive.
pub fn is_lex_positive(v: &[Rational]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

pub fn format_vector(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_gram_and_det() {
        let a2 = Lattice::a_n(2).unwrap();
        assert_eq!(a2.rank(), 2);
        assert_eq!(a2.gram()[(0, 1)], int(-1));
        assert_eq!(a2.det(), int(3));
    }

    #[test]
    fn e8_is_even_unimodular() {
        let e8 = Lattice::e8();
        assert!(e8.is_even());
        assert_eq!(e8.det(), int(1));
    }

    #[test]
    fn coordinates_roundtrip() {
        let e8 = Lattice::e8();
        let v = e8.combine_int(&[1, -2, 0, 3, 0, 0, 1, -1]);
        let c = e8.int_coordinates(&v).unwrap();
        let back: Vec<i64> = c.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(back, vec![1, -2, 0, 3, 0, 0, 1, -1]);
        let mut off = v.clone();
        off[0] += rat(1, 2);
        assert!(!e8.contains(&off));
    }

    #[test]
    fn sqrt_scale_doubles_gram() {
        let e8 = Lattice::e8();
        let s = e8.sqrt_scale(2).unwrap();
        assert_eq!(s.gram(), &e8.gram().scale(&int(2)));
    }

    #[test]
    fn z1_tensor_is_identity() {
        let a2 = Lattice::a_n(2).unwrap();
        let t = Lattice::tensor_product(&Lattice::z_n(1).unwrap(), &a2).unwrap();
        assert_eq!(t.gram(), a2.gram());
    }

    #[test]
    fn standard_names() {
        assert_eq!(Lattice::standard("E8^3").unwrap().rank(), 24);
        assert_eq!(Lattice::standard("sqrt2E8").unwrap().ambient_dim(), 16);
        assert_eq!(Lattice::standard("A2xE8").unwrap().rank(), 16);
        assert!(Lattice::standard("Q7").is_err());
        assert!(Lattice::standard("A0").is_err());
    }

    #[test]
    fn generated_by_drops_dependencies() {
        let rows = vec![int_vector(&[2, 0]), int_vector(&[0, 2]), int_vector(&[1, 1])];
        let l = Lattice::generated_by("D2ish", &rows, 2).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.det(), int(4));
    }
}
