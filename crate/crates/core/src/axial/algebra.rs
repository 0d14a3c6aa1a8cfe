use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::AxialError;
use crate::numerics::{int, parse_rational, rat, RatMatrix, Rational};

/// A commutative algebra with a symmetric bilinear form, given by structure
/// constants in a fixed basis: bᵢ·bⱼ = Σₖ c[i][j][k] bₖ.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureAlgebra {
    pub labels: Vec<String>,
    table: Vec<Vec<Vec<Rational>>>,
    gram: RatMatrix,
}

pub type Vector = Vec<Rational>;

impl StructureAlgebra {
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<Rational>>>, gram: RatMatrix) -> Result<Self, AxialError> {
        let n = labels.len();
        let shape_ok = table.len() == n && table.iter().all(|r| r.len() == n && r.iter().all(|c| c.len() == n));
        if !shape_ok || gram.rows() != n || gram.cols() != n {
            return Err(AxialError::DimensionMismatch { expected: n, found: table.len() });
        }
        for i in 0..n {
            for j in 0..n {
                if table[i][j] != table[j][i] {
                    return Err(AxialError::NotCommutative(i, j));
                }
            }
        }
        if !gram.is_symmetric() {
            return Err(AxialError::AsymmetricForm);
        }
        Ok(StructureAlgebra { labels, table, gram })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[i][j][k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Linear combination Σ cᵢ bᵢ from (index, coefficient) pairs.
    pub fn combination(&self, parts: &[(usize, Rational)]) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        for (i, c) in parts {
            v[*i] += c;
        }
        v
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let c = &x[i] * &y[j];
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).fold(Rational::zero(), |acc, t| acc + t)
    }

    /// ⟨bᵢ·bⱼ, bₖ⟩ = ⟨bᵢ, bⱼ·bₖ⟩ on every basis triple.
    pub fn is_form_associative(&self) -> bool {
        let n = self.dim();
        let basis: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.product(&basis[i], &basis[j]);
                (0..n).all(|k| self.form(&ij, &basis[k]) == self.form(&basis[i], &self.product(&basis[j], &basis[k])))
            })
        })
    }

    /// Text form: `griess-lab-alg v1 <dim>`, `label i name` lines, then
    /// `i j k c` for every nonzero constant with i ≤ j and `gram i j value`
    /// for every nonzero entry with i ≤ j.
    pub fn to_text(&self) -> String {
        let n = self.dim();
        let mut out = format!("griess-lab-alg v1 {n}\n");
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "label {i} {l}").unwrap();
        }
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        writeln!(out, "{i} {j} {k} {c}").unwrap();
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let g = &self.gram[(i, j)];
                if !g.is_zero() {
                    writeln!(out, "gram {i} {j} {g}").unwrap();
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, AxialError> {
        let bad = |l: &str| AxialError::Parse(l.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["griess-lab-alg", "v1", n] => n.parse().map_err(|_| bad(header))?,
            _ => return Err(bad(header)),
        };
        let mut labels: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
        let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
        let mut gram = RatMatrix::zeros(n, n);
        let index = |s: &str, l: &str| -> Result<usize, AxialError> {
            s.parse::<usize>().ok().filter(|&i| i < n).ok_or_else(|| bad(l))
        };
        for l in lines {
            let f: Vec<&str> = l.split_whitespace().collect();
            match f[..] {
                ["label", i, name] => labels[index(i, l)?] = name.to_string(),
                ["gram", i, j, v] => {
                    let (i, j) = (index(i, l)?, index(j, l)?);
                    let v = parse_rational(v).map_err(|_| bad(l))?;
                    gram[(i, j)] = v.clone();
                    gram[(j, i)] = v;
                }
                [i, j, k, c] => {
                    let (i, j, k) = (index(i, l)?, index(j, l)?, index(k, l)?);
                    let c = parse_rational(c).map_err(|_| bad(l))?;
                    table[i][j][k] = c.clone();
                    table[j][i][k] = c;
                }
                _ => return Err(bad(l)),
            }
        }
        Self::new(labels, table, gram)
    }
}

/// The Griess algebra of the 3C-algebra: three Ising vectors with
/// eⁱ·eʲ = (1/32)(eⁱ + eʲ − eᵏ) and ⟨eⁱ,eʲ⟩ = 1/2⁸ for i ≠ j.
pub fn build_3c() -> StructureAlgebra {
    let mut table = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                table[i][i][i] = int(2);
            } else {
                let k = 3 - i - j;
                table[i][j][i] = rat(1, 32);
                table[i][j][j] = rat(1, 32);
                table[i][j][k] = rat(-1, 32);
            }
        }
    }
    let labels = (0..3).map(|i| format!("e{i}")).collect();
    StructureAlgebra::new(labels, table, axis_gram(3)).expect("valid table")
}

fn axis_gram(n: usize) -> RatMatrix {
    let mut g = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = if i == j { rat(1, 4) } else { rat(1, 256) };
        }
    }
    g
}

/// Index of e^{i,j} in the basis of [`build_g9`].
pub fn g9_index(i: usize, j: usize) -> usize {
    3 * (i % 3) + j % 3
}

/// The 9-dimensional algebra spanned by e^{i,j}, 0 ≤ i, j ≤ 2, with
/// e^{i,j}·e^{i′,j′} = (1/32)(e^{i,j} + e^{i′,j′} − e^{i″,j″}) where
/// i + i′ + i″ ≡ j + j′ + j″ ≡ 0 (mod 3).
pub fn build_g9() -> StructureAlgebra {
    let mut table = vec![vec![vec![Rational::zero(); 9]; 9]; 9];
    for p in 0..9 {
        for q in 0..9 {
            if p == q {
                table[p][p][p] = int(2);
                continue;
            }
            let (i, j, i2, j2) = (p / 3, p % 3, q / 3, q % 3);
            let r = g9_index((6 - i - i2) % 3, (6 - j - j2) % 3);
            table[p][q][p] += rat(1, 32);
            table[p][q][q] += rat(1, 32);
            table[p][q][r] -= rat(1, 32);
        }
    }
    let labels = (0..9).map(|p| format!("e{}{}", p / 3, p % 3)).collect();
    StructureAlgebra::new(labels, table, axis_gram(9)).expect("valid table")
}

/// True iff the basis bijection `map` (bᵢ ↦ b′_{map[i]}) carries the table
/// and form of `a` onto those of `b`.
pub fn isomorphism_check(a: &StructureAlgebra, b: &StructureAlgebra, map: &[usize]) -> Result<bool, AxialError> {
    let n = a.dim();
    if b.dim() != n || map.len() != n {
        return Err(AxialError::DimensionMismatch { expected: n, found: b.dim().min(map.len()) });
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return Ok(false);
        }
        seen[m] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if a.gram[(i, j)] != b.gram[(map[i], map[j])] {
                return Ok(false);
            }
            for k in 0..n {
                if a.table[i][j][k] != b.table[map[i]][map[j]][map[k]] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
