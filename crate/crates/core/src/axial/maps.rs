use num_traits::{One, Zero};

use super::{AxialError, StructureAlgebra, Vector};
use crate::numerics::{int, rat, RatMatrix, Rational};

/// A linear map on a [`StructureAlgebra`], acting on coordinate columns.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearEndo {
    pub matrix: RatMatrix,
    automorphism: bool,
}

impl LinearEndo {
    pub fn new(matrix: RatMatrix) -> Self {
        LinearEndo { matrix, automorphism: false }
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn is_automorphism(&self) -> bool {
        self.automorphism
    }

    pub fn compose(&self, other: &LinearEndo) -> LinearEndo {
        LinearEndo { matrix: self.matrix.mul(&other.matrix), automorphism: self.automorphism && other.automorphism }
    }

    /// Checks f(bᵢ·bⱼ) = f(bᵢ)·f(bⱼ) and ⟨f bᵢ, f bⱼ⟩ = ⟨bᵢ, bⱼ⟩ for all
    /// basis pairs and sets the flag on success.
    pub fn verify_automorphism(mut self, a: &StructureAlgebra) -> Result<Self, AxialError> {
        let basis: Vec<Vector> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
        self.check_on(a, &basis)?;
        self.automorphism = true;
        Ok(self)
    }

    fn check_on(&self, a: &StructureAlgebra, vs: &[Vector]) -> Result<(), AxialError> {
        let images: Vec<Vector> = vs.iter().map(|v| self.apply(v)).collect();
        for i in 0..vs.len() {
            for j in i..vs.len() {
                if self.apply(&a.product(&vs[i], &vs[j])) != a.product(&images[i], &images[j]) {
                    return Err(AxialError::NotAutomorphism("the product"));
                }
                if a.form(&images[i], &images[j]) != a.form(&vs[i], &vs[j]) {
                    return Err(AxialError::NotAutomorphism("the form"));
                }
            }
        }
        Ok(())
    }
}

/// Checks v·v = 2v and returns c = 2⟨v,v⟩.
pub fn certify_virasoro(a: &StructureAlgebra, v: &[Rational]) -> Result<Rational, AxialError> {
    let two_v: Vector = v.iter().map(|x| x * int(2)).collect();
    if a.product(v, v) != two_v {
        return Err(AxialError::NotIdempotent);
    }
    Ok(a.form(v, v) * int(2))
}

/// Matrix of x ↦ v·x.
pub fn adjoint(a: &StructureAlgebra, v: &[Rational]) -> LinearEndo {
    let cols: Vec<Vector> = (0..a.dim()).map(|j| a.product(v, &a.basis_vector(j))).collect();
    LinearEndo::new(RatMatrix::from_cols(&cols, a.dim()))
}

/// Griess-level certificate for an Ising vector: idempotent of central charge
/// 1/2 whose adjoint eigenspaces for 2, 0, 1/2, 1/16 exhaust the algebra.
#[derive(Debug, Clone)]
pub struct AxisCertificate {
    pub central_charge: Rational,
    /// Bases of the eigenspaces, in the order 2, 0, 1/2, 1/16.
    pub eigenspaces: [Vec<Vector>; 4],
}

impl AxisCertificate {
    pub fn dims(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.eigenspaces[i].len())
    }
}

pub fn axis_eigenvalues() -> [Rational; 4] {
    [int(2), int(0), rat(1, 2), rat(1, 16)]
}

pub fn certify_axis(a: &StructureAlgebra, e: &[Rational]) -> Result<AxisCertificate, AxialError> {
    let c = certify_virasoro(a, e)?;
    if c != rat(1, 2) {
        return Err(AxialError::WrongCentralCharge { expected: rat(1, 2), found: c });
    }
    let ad = adjoint(a, e).matrix;
    let mut spaces: [Vec<Vector>; 4] = Default::default();
    for (space, lambda) in spaces.iter_mut().zip(axis_eigenvalues()) {
        *space = ad.eigenspace(&lambda)?;
    }
    let found: usize = spaces.iter().map(Vec::len).sum();
    if found != a.dim() {
        return Err(AxialError::UnexpectedEigenvalues { found, dim: a.dim() });
    }
    Ok(AxisCertificate { central_charge: c, eigenspaces: spaces })
}

/// The map acting on the eigenspaces of an axis certificate by the given
/// signs, in the eigenbasis order 2, 0, 1/2, 1/16.
fn diagonal_in_eigenbasis(cert: &AxisCertificate, signs: [Rational; 4]) -> Result<RatMatrix, AxialError> {
    let mut cols = Vec::new();
    let mut diag = Vec::new();
    for (space, s) in cert.eigenspaces.iter().zip(signs) {
        for v in space {
            cols.push(v.clone());
            diag.push(s.clone());
        }
    }
    let n = cols.len();
    let p = RatMatrix::from_cols(&cols, n);
    let mut d = RatMatrix::zeros(n, n);
    for (i, s) in diag.into_iter().enumerate() {
        d[(i, i)] = s;
    }
    Ok(p.mul(&d).mul(&p.inverse()?))
}

/// τ_e: −1 on the 1/16-eigenspace of ad(e), +1 on the rest.
pub fn miyamoto_tau(a: &StructureAlgebra, e: &[Rational]) -> Result<LinearEndo, AxialError> {
    let cert = certify_axis(a, e)?;
    let one = Rational::one();
    let m = diagonal_in_eigenbasis(&cert, [one.clone(), one.clone(), one.clone(), -one])?;
    LinearEndo::new(m).verify_automorphism(a)
}

/// σ_e on the τ_e-fixed subalgebra: −1 on the 1/2-eigenspace, +1 on the 2-
/// and 0-eigenspaces. The returned matrix is zero on the 1/16-eigenspace,
/// where σ_e is not defined; the automorphism check runs on the fixed
/// subalgebra only.
pub fn miyamoto_sigma(a: &StructureAlgebra, e: &[Rational]) -> Result<(LinearEndo, Vec<Vector>), AxialError> {
    let cert = certify_axis(a, e)?;
    let one = Rational::one();
    let m = diagonal_in_eigenbasis(&cert, [one.clone(), one.clone(), -one, Rational::zero()])?;
    let fixed: Vec<Vector> = cert.eigenspaces[..3].concat();
    let mut endo = LinearEndo::new(m);
    endo.check_on(a, &fixed)?;
    endo.automorphism = true;
    Ok((endo, fixed))
}

/// Eigenvalues of v under ad(f) for each frame element f.
pub fn highest_weight_check(a: &StructureAlgebra, v: &[Rational], frame: &[Vector]) -> Result<Vec<Rational>, AxialError> {
    let pivot = v.iter().position(|x| !x.is_zero()).ok_or(AxialError::NotEigenvector(0))?;
    frame
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let p = a.product(f, v);
            let lambda = &p[pivot] / &v[pivot];
            if p.iter().zip(v).all(|(x, y)| x == &(&lambda * y)) {
                Ok(lambda)
            } else {
                Err(AxialError::NotEigenvector(k))
            }
        })
        .collect()
}
