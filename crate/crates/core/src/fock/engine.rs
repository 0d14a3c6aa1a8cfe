//! Coefficient extraction for a_n b on monomials.
//!
//! For a = Π h_t(−m_t) e^β the vertex operator is the normal ordered product
//! of the fields ∂^{m_t−1}h_t(z)/(m_t−1)! with
//! Y(e^β,z) = E⁻(−β,z) E⁺(−β,z) e^β z^β, where h(0) stands to the right of
//! e^β. Each oscillator of a splits into its annihilation part (modes ≥ 0,
//! applied to b first) and its creation part (applied last), so a term of
//! Y(a,z)b is fixed by choosing the subset of a's oscillators that create.

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::state::Osc;

/// C(top, k) for integer top and k ≥ 0.
fn binom(top: i64, k: i64) -> i64 {
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..k {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

#[derive(Clone)]
struct Partial {
    coef: Rational64,
    osc: Vec<Osc>,
    z: i32,
}

fn modes(osc: &[Osc]) -> i32 {
    osc.iter().map(|o| o.mode as i32).sum()
}

/// The oscillator parts of a_n b, assuming the caller has already decided
/// that the result has weight `w` (= wt a + wt b − n − 1, with 0 ≤ w ≤ 2)
/// and exponent β + γ. The cocycle sign is also left to the caller.
/// Exponents are doubled.
pub(crate) fn mode_terms(a_osc: &[Osc], beta: &[i32], b_osc: &[Osc], gamma: &[i32], n: i32, w: i32) -> Vec<(Vec<Osc>, Rational64)> {
    debug_assert!((0..=2).contains(&w));
    let bg: i32 = beta.iter().zip(gamma).map(|(x, y)| x * y).sum();
    debug_assert_eq!(bg % 4, 0);
    let bg = bg / 4;
    let exp_w8: i32 = beta.iter().zip(gamma).map(|(x, y)| (x + y) * (x + y)).sum();
    if exp_w8 > 8 * w {
        return Vec::new();
    }
    let exp_w = exp_w8 / 8;
    let target_z = -n - 1;
    let k = a_osc.len();
    let half = |x: i32| Rational64::new(x as i64, 2);
    let mut out = Vec::new();

    for creators in 0u32..(1 << k) {
        let mut partials = vec![Partial { coef: Rational64::one(), osc: b_osc.to_vec(), z: 0 }];

        // annihilation parts, h(0) included
        for (t, a) in a_osc.iter().enumerate() {
            if creators >> t & 1 == 1 {
                continue;
            }
            let m = a.mode as i64;
            let d = a.dir as usize;
            let mut next = Vec::new();
            for p in &partials {
                if gamma[d] != 0 {
                    let c = binom(-1, m - 1);
                    next.push(Partial { coef: p.coef * half(gamma[d]) * c, osc: p.osc.clone(), z: p.z - m as i32 });
                }
                for (pos, o) in p.osc.iter().enumerate() {
                    if o.dir != a.dir {
                        continue;
                    }
                    let i = o.mode as i64;
                    let c = binom(-i - 1, m - 1) * i;
                    let mut osc = p.osc.clone();
                    osc.remove(pos);
                    next.push(Partial { coef: p.coef * c, osc, z: p.z - (i + m) as i32 });
                }
            }
            partials = next;
            if partials.is_empty() {
                break;
            }
        }
        if partials.is_empty() {
            continue;
        }

        // e^β z^β, then E⁺(−β,z): every surviving g(−j) may turn into −⟨β,g⟩ z^{−j}
        let mut after_plus = Vec::new();
        for p in partials {
            let r = p.osc.len();
            for keep in 0u32..(1 << r) {
                let mut coef = p.coef;
                let mut osc = Vec::with_capacity(r);
                let mut z = p.z + bg;
                for (q, o) in p.osc.iter().enumerate() {
                    if keep >> q & 1 == 1 {
                        osc.push(*o);
                    } else {
                        coef *= -half(beta[o.dir as usize]);
                        z -= o.mode as i32;
                    }
                }
                if !coef.is_zero() {
                    after_plus.push(Partial { coef, osc, z });
                }
            }
        }

        // creation: E⁻(−β,z) and the creation parts of the chosen oscillators
        let created: Vec<&Osc> = a_osc.iter().enumerate().filter(|(t, _)| creators >> t & 1 == 1).map(|(_, a)| a).collect();
        for p in after_plus {
            let rem = w - modes(&p.osc) - exp_w;
            if rem < created.len() as i32 {
                continue;
            }
            // j_t ≥ 1 for each creator, the rest goes to E⁻
            let mut stack: Vec<(usize, i32, Partial)> = vec![(0, rem, p)];
            while let Some((idx, left, q)) = stack.pop() {
                if idx < created.len() {
                    let a = created[idx];
                    let m = a.mode as i64;
                    let still = (created.len() - idx - 1) as i32;
                    for j in 1..=(left - still) {
                        let c = binom(j as i64 - 1, m - 1);
                        if c == 0 {
                            continue;
                        }
                        let mut osc = q.osc.clone();
                        osc.push(Osc { mode: j as u8, dir: a.dir });
                        stack.push((idx + 1, left - j, Partial { coef: q.coef * c, osc, z: q.z + j - m as i32 }));
                    }
                    continue;
                }
                for (coef, extra) in schur(beta, left) {
                    let mut osc = q.osc.clone();
                    osc.extend(extra);
                    let z = q.z + left;
                    debug_assert_eq!(z, target_z, "weight bookkeeping");
                    if z == target_z {
                        osc.sort_unstable();
                        out.push((osc, q.coef * coef));
                    }
                }
            }
        }
    }
    out
}

/// Terms of the z^k coefficient of E⁻(−β,z) = exp(Σ β(−j) z^j / j).
fn schur(beta: &[i32], k: i32) -> Vec<(Rational64, Vec<Osc>)> {
    let support: Vec<(u8, Rational64)> =
        beta.iter().enumerate().filter(|(_, &b)| b != 0).map(|(d, &b)| (d as u8, Rational64::new(b as i64, 2))).collect();
    match k {
        0 => vec![(Rational64::one(), Vec::new())],
        1 => support.iter().map(|&(d, b)| (b, vec![Osc { mode: 1, dir: d }])).collect(),
        2 => {
            let mut out = Vec::new();
            for (x, &(d, b)) in support.iter().enumerate() {
                out.push((b / 2, vec![Osc { mode: 2, dir: d }]));
                out.push((b * b / 2, vec![Osc { mode: 1, dir: d }, Osc { mode: 1, dir: d }]));
                for &(e, c) in &support[x + 1..] {
                    out.push((b * c, vec![Osc { mode: 1, dir: d }, Osc { mode: 1, dir: e }]));
                }
            }
            out
        }
        _ => unreachable!("weight is capped at 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(mode: u8, dir: u8) -> Osc {
        Osc { mode, dir }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(-1, 1), -1);
        assert_eq!(binom(-3, 1), -3);
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(0, 1), 0);
        assert_eq!(binom(5, 0), 1);
    }

    #[test]
    fn heisenberg_commutator() {
        // (h(−1)𝟙)_1 h(−1)𝟙 = 𝟙
        let zero = [0, 0];
        let got = mode_terms(&[o(1, 0)], &zero, &[o(1, 0)], &zero, 1, 0);
        assert_eq!(got, vec![(vec![], Rational64::one())]);
        // (h(−1)𝟙)_1 h(−2)𝟙 = 0 since the modes differ
        assert!(mode_terms(&[o(1, 0)], &zero, &[o(2, 0)], &zero, 1, 1).iter().all(|(_, c)| c.is_zero()));
        // (h(−1)𝟙)_{−1} 𝟙 = h(−1)𝟙
        let got = mode_terms(&[o(1, 1)], &zero, &[], &zero, -1, 1);
        assert_eq!(got, vec![(vec![o(1, 1)], Rational64::one())]);
    }

    #[test]
    fn leading_exponential_term() {
        // e^β_{−⟨β,γ⟩−1} e^γ = e^{β+γ} before the cocycle sign
        let beta = [2, 2, 0];
        let gamma = [-2, 0, 2];
        let got = mode_terms(&[], &beta, &[], &gamma, 0, 1);
        assert_eq!(got, vec![(vec![], Rational64::one())]);
    }
}
