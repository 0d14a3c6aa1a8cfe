use num_traits::Zero;

use super::{g9_index, AxialError, StructureAlgebra, Vector};
use crate::numerics::{int, rat, Rational};

/// ω = (8/9) Σ e^{i,j}.
pub fn g9_omega(g: &StructureAlgebra) -> Vector {
    g.combination(&(0..9).map(|p| (p, rat(8, 9))).collect::<Vec<_>>())
}

/// (32/33)(e^{0,0} + x + y) − e^{0,0} over the four lines through (0,0).
pub fn a_vectors(g: &StructureAlgebra) -> [Vector; 4] {
    let lines = [[(0, 1), (0, 2)], [(1, 0), (2, 0)], [(1, 1), (2, 2)], [(1, 2), (2, 1)]];
    lines.map(|line| {
        let mut parts = vec![(0, rat(32, 33) - int(1))];
        parts.extend(line.iter().map(|&(i, j)| (g9_index(i, j), rat(32, 33))));
        g.combination(&parts)
    })
}

/// ω − (32/33)(e^{0,0} + e^{0,1} + e^{0,2}).
pub fn b1(g: &StructureAlgebra) -> Vector {
    let line = g.combination(&[0, 1, 2].map(|p| (p, rat(32, 33))));
    g9_omega(g).iter().zip(&line).map(|(a, b)| a - b).collect()
}

/// The orthogonal frame (e^{0,0}, a¹, b¹).
pub fn frame(g: &StructureAlgebra) -> Vec<Vector> {
    let [a1, ..] = a_vectors(g);
    vec![g.basis_vector(0), a1, b1(g)]
}

#[derive(Debug, Clone)]
pub struct AProductReport {
    /// (i, j) pairs, 1-based, checked against (1/33)(2aⁱ + 2aʲ − aᵏ − aˡ).
    pub checked: Vec<(usize, usize)>,
    pub failures: Vec<(usize, usize)>,
}

/// Checks aⁱ·aʲ = (1/33)(2aⁱ + 2aʲ − aᵏ − aˡ) for the six pairs i < j,
/// with {k, l} the remaining indices.
pub fn check_a_products(g: &StructureAlgebra) -> Result<AProductReport, AxialError> {
    if g.dim() != 9 {
        return Err(AxialError::DimensionMismatch { expected: 9, found: g.dim() });
    }
    let a = a_vectors(g);
    let mut report = AProductReport { checked: Vec::new(), failures: Vec::new() };
    for i in 0..4 {
        for j in i + 1..4 {
            let mut want = vec![Rational::zero(); 9];
            for (k, v) in a.iter().enumerate() {
                let c = if k == i || k == j { rat(2, 33) } else { rat(-1, 33) };
                for (w, x) in want.iter_mut().zip(v) {
                    *w += &c * x;
                }
            }
            report.checked.push((i + 1, j + 1));
            if g.product(&a[i], &a[j]) != want {
                report.failures.push((i + 1, j + 1));
            }
        }
    }
    Ok(report)
}
