use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use super::FockError;
use crate::lattice::{format_vector, Vector};
use crate::numerics::{int, parse_rational, rat, Eisenstein, Rational};

/// One factor h(−mode) with h the ambient coordinate vector `dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Osc {
    pub mode: u8,
    pub dir: u8,
}

/// (Π h(−n)) ⊗ e^γ with oscillators sorted by (mode, dir). The exponent is
/// kept as 2γ so that the half-integral coordinates of E8 stay integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockMonomial {
    osc: Vec<Osc>,
    gamma: Box<[i32]>,
}

pub(crate) fn doubled(v: &[Rational]) -> Result<Vec<i32>, FockError> {
    v.iter()
        .map(|x| {
            let d = x * int(2);
            if !d.is_integer() {
                return Err(FockError::NotInLattice(format_vector(v)));
            }
            d.to_integer().to_i32().ok_or_else(|| FockError::NotInLattice(format_vector(v)))
        })
        .collect()
}

pub(crate) fn norm2(g: &[i32]) -> i64 {
    g.iter().map(|&x| (x as i64) * (x as i64)).sum()
}

impl FockMonomial {
    pub(crate) fn from_parts(mut osc: Vec<Osc>, gamma: Box<[i32]>) -> Self {
        osc.sort_unstable();
        FockMonomial { osc, gamma }
    }

    /// `osc` lists (mode, coordinate index) pairs.
    pub fn new(osc: &[(u8, usize)], gamma: &[Rational]) -> Result<Self, FockError> {
        let dim = gamma.len();
        let mut v = Vec::with_capacity(osc.len());
        for &(mode, dir) in osc {
            if mode == 0 || dir >= dim || dir > u8::MAX as usize {
                return Err(FockError::Malformed(format!("oscillator {mode}:{dir} in dimension {dim}")));
            }
            v.push(Osc { mode, dir: dir as u8 });
        }
        Ok(Self::from_parts(v, doubled(gamma)?.into()))
    }

    pub fn oscillators(&self) -> &[Osc] {
        &self.osc
    }

    pub fn gamma_doubled(&self) -> &[i32] {
        &self.gamma
    }

    pub fn gamma(&self) -> Vector {
        self.gamma.iter().map(|&x| rat(x as i64, 2)).collect()
    }

    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// 8·(Σ modes + ⟨γ,γ⟩/2), always an integer.
    fn weight_times_8(&self) -> i64 {
        8 * self.osc.iter().map(|o| o.mode as i64).sum::<i64>() + norm2(&self.gamma)
    }

    /// The conformal weight; `None` when ⟨γ,γ⟩ is odd.
    pub fn weight(&self) -> Option<i64> {
        let w = self.weight_times_8();
        (w % 8 == 0).then_some(w / 8)
    }

    pub fn is_vacuum(&self) -> bool {
        self.osc.is_empty() && self.gamma.iter().all(|&x| x == 0)
    }
}

/// A finite sum of monomials with coefficients in ℚ(ζ). Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockState {
    dim: usize,
    terms: BTreeMap<FockMonomial, Eisenstein>,
}

impl FockState {
    pub fn zero(dim: usize) -> Self {
        FockState { dim, terms: BTreeMap::new() }
    }

    pub fn vacuum(dim: usize) -> Self {
        Self::monomial(FockMonomial::from_parts(Vec::new(), vec![0; dim].into()), Eisenstein::from_int(1))
    }

    pub fn monomial(m: FockMonomial, c: Eisenstein) -> Self {
        let mut s = Self::zero(m.dim());
        s.add_term(m, c);
        s
    }

    /// e^γ.
    pub fn exponential(gamma: &[Rational]) -> Result<Self, FockError> {
        Ok(Self::monomial(FockMonomial::new(&[], gamma)?, Eisenstein::from_int(1)))
    }

    /// h₁(−n₁)⋯h_r(−n_r) e^γ for arbitrary ambient vectors hᵢ, expanded
    /// multilinearly in the coordinate frame.
    pub fn oscillators(factors: &[(u8, &[Rational])], gamma: &[Rational]) -> Result<Self, FockError> {
        let dim = gamma.len();
        let g: Box<[i32]> = doubled(gamma)?.into();
        let mut partial: Vec<(Vec<Osc>, Rational)> = vec![(Vec::new(), int(1))];
        for &(mode, h) in factors {
            if h.len() != dim || mode == 0 {
                return Err(FockError::Malformed(format!("oscillator of mode {mode} and length {}", h.len())));
            }
            let mut next = Vec::new();
            for (osc, c) in &partial {
                for (d, x) in h.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let mut o = osc.clone();
                    o.push(Osc { mode, dir: d as u8 });
                    next.push((o, c * x));
                }
            }
            partial = next;
        }
        let mut s = Self::zero(dim);
        for (osc, c) in partial {
            s.add_term(FockMonomial::from_parts(osc, g.clone()), Eisenstein::from_rational(c));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Eisenstein)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Eisenstein {
        self.terms.get(m).cloned().unwrap_or_else(Eisenstein::zero)
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Eisenstein) {
        debug_assert_eq!(m.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FockState) -> FockState {
        let mut s = self.clone();
        for (m, c) in &other.terms {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn sub(&self, other: &FockState) -> FockState {
        self.add(&other.scale(&Eisenstein::from_int(-1)))
    }

    pub fn scale(&self, c: &Eisenstein) -> FockState {
        let mut s = Self::zero(self.dim);
        for (m, x) in &self.terms {
            s.add_term(m.clone(), x * c);
        }
        s
    }

    pub fn scale_rational(&self, r: &Rational) -> FockState {
        self.scale(&Eisenstein::from_rational(r.clone()))
    }

    /// Linear combination Σ cᵢ sᵢ.
    pub fn combination<'a>(dim: usize, parts: impl IntoIterator<Item = (Eisenstein, &'a FockState)>) -> FockState {
        let mut s = Self::zero(dim);
        for (c, p) in parts {
            for (m, x) in &p.terms {
                s.add_term(m.clone(), x * &c);
            }
        }
        s
    }

    pub fn map_terms(&self, mut f: impl FnMut(&FockMonomial, &Eisenstein) -> (FockMonomial, Eisenstein)) -> FockState {
        let mut s = Self::zero(self.dim);
        for (m, c) in &self.terms {
            let (m2, c2) = f(m, c);
            s.add_term(m2, c2);
        }
        s
    }

    pub fn filter(&self, mut keep: impl FnMut(&FockMonomial) -> bool) -> FockState {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect();
        FockState { dim: self.dim, terms }
    }

    /// The common weight of every term, or an error for mixed states.
    pub fn weight(&self) -> Result<Option<i64>, FockError> {
        let mut w = None;
        for m in self.terms.keys() {
            let x = m.weight().ok_or(FockError::Inhomogeneous)?;
            match w {
                None => w = Some(x),
                Some(y) if y != x => return Err(FockError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(w)
    }

    /// True when every coefficient lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    pub fn vacuum_coefficient(&self) -> Eisenstein {
        self.terms.iter().find(|(m, _)| m.is_vacuum()).map(|(_, c)| c.clone()).unwrap_or_else(Eisenstein::zero)
    }

    /// Text form: a header line, then `re zc | mode:dir ... | gamma` per term
    /// with directions and γ written as ambient rational vectors.
    pub fn dump(&self) -> String {
        let mut out = format!("griess-lab-state v1 {} {}\n", self.dim, self.terms.len());
        for (m, c) in &self.terms {
            let osc: Vec<String> = m
                .osc
                .iter()
                .map(|o| {
                    let mut v = vec!["0"; self.dim];
                    v[o.dir as usize] = "1";
                    format!("{}:{}", o.mode, v.join(","))
                })
                .collect();
            let gamma: Vec<String> = m.gamma().iter().map(|x| x.to_string()).collect();
            writeln!(out, "{} {} | {} | {}", c.re, c.zc, osc.join(" "), gamma.join(",")).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<FockState, FockError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let bad = |reason: &str| FockError::Malformed(reason.to_string());
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty state"))?.split_whitespace().collect();
        if header.len() != 4 || header[0] != "griess-lab-state" || header[1] != "v1" {
            return Err(bad("bad state header"));
        }
        let dim: usize = header[2].parse().map_err(|_| bad("bad dimension"))?;
        let count: usize = header[3].parse().map_err(|_| bad("bad term count"))?;
        let vector = |s: &str| -> Result<Vector, FockError> {
            let v = s.split(',').map(|x| parse_rational(x).map_err(|_| bad(x))).collect::<Result<Vector, _>>()?;
            if v.len() != dim {
                return Err(bad("vector length"));
            }
            Ok(v)
        };
        let mut state = FockState::zero(dim);
        let mut seen = 0;
        for line in lines {
            let parts: Vec<&str> = line.split('|').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(bad(line));
            }
            let coeff: Vec<&str> = parts[0].split_whitespace().collect();
            if coeff.len() != 2 {
                return Err(bad(line));
            }
            let c = Eisenstein::new(parse_rational(coeff[0])?, parse_rational(coeff[1])?);
            let mut factors = Vec::new();
            for f in parts[1].split_whitespace() {
                let (mode, dir) = f.split_once(':').ok_or_else(|| bad(f))?;
                let mode: u8 = mode.parse().map_err(|_| bad(f))?;
                factors.push((mode, vector(dir)?));
            }
            let refs: Vec<(u8, &[Rational])> = factors.iter().map(|(m, v)| (*m, v.as_slice())).collect();
            let term = FockState::oscillators(&refs, &vector(parts[2])?)?;
            state = state.add(&term.scale(&c));
            seen += 1;
        }
        if seen != count {
            return Err(bad("term count mismatch"));
        }
        Ok(state)
    }
}
