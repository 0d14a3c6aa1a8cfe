//! The mode engine against a second implementation: Y(e^β, z) expanded as
//! a literal product of exponential series, and oscillator states reduced to
//! it through the iterate formula
//! (h₋ₘu)ₙ = Σᵢ C(m+i−1, i)[h₋ₘ₋ᵢ uₙ₊ᵢ − (−1)^m uₙ₋ₘ₋ᵢ hᵢ].

use std::collections::HashMap;

use griess_lab::cocycle::{build_epsilon0, CocycleTable};
use griess_lab::fock::*;
use griess_lab::lattice::*;
use griess_lab::numerics::{int, rat, Eisenstein, Rational};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Osc2 = (u8, usize);
/// (sorted oscillators, exponent) → coefficient
type State = HashMap<(Vec<Osc2>, Vector), Rational>;

fn push(s: &mut State, mut osc: Vec<Osc2>, g: Vector, c: Rational) {
    if c.is_zero() {
        return;
    }
    osc.sort_unstable();
    let e = s.entry((osc, g)).or_insert_with(Rational::zero);
    *e += c;
}

fn small(r: &Rational) -> i64 {
    r.to_integer().to_i64().unwrap()
}

fn weight(osc: &[Osc2], g: &[Rational]) -> Rational {
    int(osc.iter().map(|o| o.0 as i64).sum()) + norm(g) / int(2)
}

/// Coordinate oscillator e_d(i) acting on a state.
fn heis(d: usize, i: i64, s: &State) -> State {
    let mut out = State::new();
    for ((osc, g), c) in s {
        if i < 0 {
            let mut o = osc.clone();
            o.push(((-i) as u8, d));
            push(&mut out, o, g.clone(), c.clone());
        } else if i == 0 {
            push(&mut out, osc.clone(), g.clone(), c * &g[d]);
        } else {
            for (p, o) in osc.iter().enumerate() {
                if *o == (i as u8, d) {
                    let mut rest = osc.clone();
                    rest.remove(p);
                    push(&mut out, rest, g.clone(), c * int(i));
                }
            }
        }
    }
    out
}

/// Laurent polynomial in z over oscillator monomials.
type Series = HashMap<(Vec<Osc2>, i64), Rational>;

fn add_series(s: &mut Series, mut osc: Vec<Osc2>, z: i64, c: Rational) {
    if c.is_zero() {
        return;
    }
    osc.sort_unstable();
    *s.entry((osc, z)).or_insert_with(Rational::zero) += c;
}

/// (e^β)_n on a single monomial, straight from
/// Y(e^β,z) = exp(Σ β(−k)zᵏ/k) exp(−Σ β(k)z⁻ᵏ/k) e^β z^β.
fn exp_mode_series(t: &CocycleTable, beta: &[Rational], osc: &[Osc2], g: &[Rational], n: i64, cap: i64) -> State {
    let mut cur: Series = Series::new();
    add_series(&mut cur, osc.to_vec(), 0, int(1));
    // exp(D) with D = −Σ β(k) z^{−k}/k, summed as Σ Dʲ/j!
    let mut total = cur.clone();
    let mut term = cur;
    for j in 1..=osc.len() as i64 {
        let mut next = Series::new();
        for ((o, z), c) in &term {
            for (p, &(k, d)) in o.iter().enumerate() {
                let mut rest = o.clone();
                rest.remove(p);
                // β(k) g(−k) = k⟨β,g⟩, times −1/k
                add_series(&mut next, rest, z - k as i64, -(c * &beta[d]) / int(j));
            }
        }
        for ((o, z), c) in &next {
            add_series(&mut total, o.clone(), *z, c.clone());
        }
        term = next;
    }
    let sign = if t.epsilon(beta, g).unwrap() == 1 { int(-1) } else { int(1) };
    let shift = small(&dot(beta, g));
    let sum = add(beta, g);
    // exp(C) with C = Σ β(−k) zᵏ / k for k ≤ cap, as Σ Cʲ/j!
    let mut result = Series::new();
    let mut term: Series = total.iter().map(|((o, z), c)| ((o.clone(), z + shift), c * &sign)).collect();
    for ((o, z), c) in &term {
        add_series(&mut result, o.clone(), *z, c.clone());
    }
    for j in 1..=cap {
        let mut next = Series::new();
        for ((o, z), c) in &term {
            for k in 1..=cap {
                for (d, b) in beta.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let mut o2 = o.clone();
                    o2.push((k as u8, d));
                    if weight(&o2, &sum) > int(cap) {
                        continue;
                    }
                    add_series(&mut next, o2, z + k, c * b / int(k) / int(j));
                }
            }
        }
        for ((o, z), c) in &next {
            add_series(&mut result, o.clone(), *z, c.clone());
        }
        term = next;
    }
    let mut out = State::new();
    for ((o, z), c) in result {
        if z == -n - 1 {
            push(&mut out, o, sum.clone(), c);
        }
    }
    out
}

fn binom(top: i64, k: i64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (top - i)) / (1..=k).product::<i64>().max(1)
}

/// a_n v for a monomial a, by recursion on the oscillators of a.
fn oracle_mode(t: &CocycleTable, a_osc: &[Osc2], beta: &[Rational], v: &State, n: i64) -> State {
    let mut out = State::new();
    let Some((&(m, d), rest)) = a_osc.split_first() else {
        for ((o, g), c) in v {
            for ((o2, g2), c2) in exp_mode_series(t, beta, o, g, n, 2) {
                push(&mut out, o2, g2, c2 * c);
            }
        }
        return out;
    };
    let m = m as i64;
    let wt_u = small(&weight(rest, beta));
    let wt_v = v.keys().map(|(o, g)| small(&weight(o, g))).max().unwrap_or(0);
    let top = (wt_u + wt_v - n - 1).max(wt_v).max(0);
    for i in 0..=top {
        let c = int(binom(m + i - 1, i));
        let first = heis(d, -m - i, &oracle_mode(t, rest, beta, v, n + i));
        let second = oracle_mode(t, rest, beta, &heis(d, i, v), n - m - i);
        let s2 = if m % 2 == 0 { int(-1) } else { int(1) };
        for ((o, g), x) in first {
            push(&mut out, o, g, x * &c);
        }
        for ((o, g), x) in second {
            push(&mut out, o, g, x * &c * &s2);
        }
    }
    out
}

fn to_fock(s: &State, dim: usize) -> FockState {
    let mut f = FockState::zero(dim);
    for ((o, g), c) in s {
        f.add_term(FockMonomial::new(o, g).unwrap(), Eisenstein::from_rational(c.clone()));
    }
    f
}

struct Sample {
    osc: Vec<Osc2>,
    gamma: Vector,
}

fn random_monomial(rng: &mut impl Rng, shells: &[Vec<Vector>; 3], max_w: i64) -> Sample {
    let w = rng.gen_range(0..=max_w);
    let exp_w = rng.gen_range(0..=w);
    let gamma = match exp_w {
        0 => vec![int(0); 8],
        e => shells[e as usize][rng.gen_range(0..shells[e as usize].len())].clone(),
    };
    let mut osc = Vec::new();
    let mut left = w - exp_w;
    while left > 0 {
        let m = rng.gen_range(1..=left);
        osc.push((m as u8, rng.gen_range(0..8)));
        left -= m;
    }
    Sample { osc, gamma }
}

fn e8_shells() -> [Vec<Vector>; 3] {
    let store = ShellStore::in_memory();
    let e8 = Lattice::e8();
    [Vec::new(), store.shell(&e8, 2).unwrap().vectors.clone(), store.shell(&e8, 4).unwrap().vectors.clone()]
}

fn check_pair(voa: &LatticeVoa, t: &CocycleTable, a: &Sample, b: &Sample, n: i32) {
    let fa = to_fock(&[((a.osc.clone(), a.gamma.clone()), int(1))].into_iter().collect(), 8);
    let fb_state: State = [((b.osc.clone(), b.gamma.clone()), int(1))].into_iter().collect();
    let fb = to_fock(&fb_state, 8);
    let got = voa.mode(&fa, &fb, n).unwrap();
    let want = to_fock(&oracle_mode(t, &a.osc, &a.gamma, &fb_state, n as i64), 8);
    assert_eq!(got, want, "a = {:?} e^{:?}, b = {:?} e^{:?}, n = {n}", a.osc, a.gamma, b.osc, b.gamma);
}

#[test]
fn engine_matches_series_oracle_sweep() {
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let t = build_epsilon0(&e8).unwrap();
    let shells = e8_shells();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nonzero = 0;
    for _ in 0..400 {
        let a = random_monomial(&mut rng, &shells, 2);
        let b = random_monomial(&mut rng, &shells, 2);
        let wa = small(&weight(&a.osc, &a.gamma));
        let wb = small(&weight(&b.osc, &b.gamma));
        let n = rng.gen_range((wa + wb - 3).max(-1)..=(wa + wb - 1)) as i32;
        check_pair(&voa, &t, &a, &b, n);
        let fa = to_fock(&[((a.osc.clone(), a.gamma.clone()), int(1))].into_iter().collect(), 8);
        let fb = to_fock(&[((b.osc.clone(), b.gamma.clone()), int(1))].into_iter().collect(), 8);
        if !voa.mode(&fa, &fb, n).unwrap().is_zero() {
            nonzero += 1;
        }
    }
    // the sweep must exercise real contractions, not just vanishing products
    assert!(nonzero > 40, "only {nonzero} nonzero products");
}

#[test]
fn norm4_pair_to_vacuum_sector() {
    // e^β₍₁₎e^{−β} = (−1)^{ε(β,−β)}·½(β(−1)² + β(−2))𝟙, read off z⁻⁴·z²
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let shells = e8_shells();
    let beta = &shells[2][17];
    let got = voa.exp_mode(beta, 1, &FockState::exponential(&neg(beta)).unwrap()).unwrap();
    let zero = vec![int(0); 8];
    let want = FockState::oscillators(&[(1, beta), (1, beta)], &zero)
        .unwrap()
        .add(&FockState::oscillators(&[(2, beta)], &zero).unwrap())
        .scale_rational(&rat(1, 2));
    assert_eq!(voa.cocycle().epsilon(beta, &neg(beta)).unwrap(), 0);
    assert_eq!(got, want);
}

#[test]
fn leading_term_rule() {
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let shells = e8_shells();
    let beta = &shells[2][0];
    let gamma = shells[2].iter().find(|g| dot(beta, g) == int(-2)).unwrap();
    let sign = if voa.cocycle().epsilon(beta, gamma).unwrap() == 1 { -1 } else { 1 };
    let got = voa.exp_mode(beta, 1, &FockState::exponential(gamma).unwrap()).unwrap();
    assert_eq!(got, FockState::exponential(&add(beta, gamma)).unwrap().scale_rational(&int(sign)));
    // ⟨β,γ⟩ ≥ 0 and n ≥ 0 give nothing
    for g in shells[2].iter().filter(|g| dot(beta, g) >= int(0)).take(20) {
        for n in 0..2 {
            assert!(voa.exp_mode(beta, n, &FockState::exponential(g).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn heisenberg_examples() {
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let shells = e8_shells();
    let h = shells[1][3].clone();
    let h2 = shells[1][100].clone();
    let vac = FockState::vacuum(8);
    assert!(voa.heisenberg_mode(&h, 1, &vac).unwrap().is_zero());
    let g = &shells[2][5];
    let eg = FockState::exponential(g).unwrap();
    assert_eq!(voa.heisenberg_mode(&h, 0, &eg).unwrap(), eg.scale_rational(&dot(&h, g)));
    let zero = vec![int(0); 8];
    let s = FockState::oscillators(&[(1, &h2)], &zero).unwrap();
    assert_eq!(voa.heisenberg_mode(&h, 1, &s).unwrap(), vac.scale_rational(&dot(&h, &h2)));
    assert_eq!(voa.heisenberg_mode(&h, -1, &vac).unwrap(), FockState::oscillators(&[(1, &h)], &zero).unwrap());
}

#[test]
fn weight_cap_is_enforced() {
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let zero = vec![int(0); 8];
    let h: Vector = (0..8).map(|i| int(i as i64)).collect();
    let w2 = FockState::oscillators(&[(1, &h), (1, &h)], &zero).unwrap();
    assert!(matches!(voa.l_minus_one(&w2), Err(FockError::WeightOverflow(3))));
    let w1 = FockState::oscillators(&[(1, &h)], &zero).unwrap();
    assert!(matches!(voa.griess_product(&w1, &w2), Err(FockError::WeightMismatch { .. })));
    let odd = FockState::exponential(&int_vector(&[1, 0, 0, 0, 0, 0, 0, 0])).unwrap();
    assert!(voa.mode(&odd, &w1, 0).is_err());
    assert!(matches!(w1.add(&w2).weight(), Err(FockError::Inhomogeneous)));
}

#[test]
fn skew_symmetry_with_translation() {
    // a₁b = b₁a − L(−1)(b₂a) on weight 2, a₃b = b₃a
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let shells = e8_shells();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..60 {
        let pick = |rng: &mut ChaCha8Rng| -> FockState {
            let s = loop {
                let s = random_monomial(rng, &shells, 2);
                if weight(&s.osc, &s.gamma) == int(2) {
                    break s;
                }
            };
            to_fock(&[((s.osc, s.gamma), int(1))].into_iter().collect(), 8)
        };
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let ab = voa.mode(&a, &b, 1).unwrap();
        let ba = voa.mode(&b, &a, 1).unwrap();
        let b2a = voa.mode(&b, &a, 2).unwrap();
        assert_eq!(ab, ba.sub(&voa.l_minus_one(&b2a).unwrap()));
        assert_eq!(voa.invariant_form(&a, &b).unwrap(), voa.invariant_form(&b, &a).unwrap());
        assert_eq!(voa.mode(&a, &b, 3).unwrap().vacuum_coefficient(), voa.invariant_form(&a, &b).unwrap());
    }
}

#[test]
fn roots_pair_to_minus_vacuum() {
    // (e^α)₁e^{−α} = −𝟙 for roots
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    for alpha in e8_shells()[1].iter().take(40) {
        let got = voa.exp_mode(alpha, 1, &FockState::exponential(&neg(alpha)).unwrap()).unwrap();
        assert_eq!(got, FockState::vacuum(8).scale_rational(&int(-1)));
    }
}

fn sample_state(seed: u64) -> FockState {
    let shells = e8_shells();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = FockState::zero(8);
    for _ in 0..4 {
        let m = random_monomial(&mut rng, &shells, 2);
        let c = Eisenstein::new(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)), rat(rng.gen_range(-3..=3), 2));
        s.add_term(FockMonomial::new(&m.osc, &m.gamma).unwrap(), c);
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dump_roundtrip(seed in any::<u64>()) {
        let s = sample_state(seed);
        prop_assert_eq!(FockState::parse(&s.dump()).unwrap(), s);
    }

    #[test]
    fn engine_matches_oracle(seed in any::<u64>()) {
        let e8 = Lattice::e8();
        let voa = LatticeVoa::new(&e8).unwrap();
        let t = build_epsilon0(&e8).unwrap();
        let shells = e8_shells();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_monomial(&mut rng, &shells, 2);
        let b = random_monomial(&mut rng, &shells, 2);
        let wa = small(&weight(&a.osc, &a.gamma));
        let wb = small(&weight(&b.osc, &b.gamma));
        for n in (wa + wb - 3).max(-1)..=(wa + wb - 1) {
            check_pair(&voa, &t, &a, &b, n as i32);
        }
    }

    #[test]
    fn twists_and_theta_are_involutive_or_periodic(seed in any::<u64>()) {
        let s = sample_state(seed);
        prop_assert_eq!(theta(&theta(&s)), s.clone());
        let v = e8_shells()[1][(seed % 240) as usize].clone();
        let r3 = (0..3).fold(s.clone(), |acc, _| twist(&v, 1, &acc).unwrap());
        prop_assert_eq!(r3, s.clone());
        prop_assert_eq!(twist(&v, 0, &s).unwrap(), s);
    }
}

#[test]
fn vacuum_is_identity_for_modes() {
    // 𝟙₋₁ s = s
    let e8 = Lattice::e8();
    let voa = LatticeVoa::new(&e8).unwrap();
    let s = sample_state(5);
    assert_eq!(voa.mode(&FockState::vacuum(8), &s, -1).unwrap(), s);
}
