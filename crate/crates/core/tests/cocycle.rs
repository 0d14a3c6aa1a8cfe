use griess_lab::cocycle::build_epsilon0;
use griess_lab::lattice::*;
use griess_lab::numerics::{int, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vector(l: &Lattice, rng: &mut impl Rng) -> Vector {
    let c: Vec<i64> = (0..l.rank()).map(|_| rng.gen_range(-3..=3)).collect();
    l.combine_int(&c)
}

fn parity(r: &Rational) -> u8 {
    r.to_integer().mod_floor(&2.into()).to_u8().unwrap()
}

/// ε expanded directly from the Gram matrix: Σ_{i<j} cᵢdⱼ⟨bᵢ,bⱼ⟩ + Σ cᵢdᵢ⟨bᵢ,bᵢ⟩/2.
fn expanded(l: &Lattice, a: &[Rational], b: &[Rational]) -> u8 {
    let c = l.int_coordinates(a).unwrap();
    let d = l.int_coordinates(b).unwrap();
    let g = l.gram();
    let mut acc = int(0);
    for i in 0..l.rank() {
        for j in i..l.rank() {
            let w = if i == j { &g[(i, i)] / int(2) } else { g[(i, j)].clone() };
            acc += w * Rational::from_integer(&c[i] * &d[j]);
        }
    }
    parity(&acc)
}

#[test]
fn thousand_random_e8_pairs() {
    let e8 = Lattice::e8();
    let t = build_epsilon0(&e8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let a = random_vector(&e8, &mut rng);
        let b = random_vector(&e8, &mut rng);
        assert!(t.satisfies_congruences(&a, &b).unwrap());
        assert_eq!(t.epsilon(&a, &b).unwrap(), expanded(&e8, &a, &b));
        let sum = t.epsilon(&a, &b).unwrap() + t.epsilon(&b, &a).unwrap();
        assert_eq!(sum % 2, parity(&dot(&a, &b)));
    }
}

#[test]
fn roots_square_to_minus_one() {
    let e8 = Lattice::e8();
    let t = build_epsilon0(&e8).unwrap();
    let store = ShellStore::in_memory();
    for a in &store.shell(&e8, 2).unwrap().vectors {
        assert_eq!(t.epsilon(a, &neg(a)).unwrap(), 1);
    }
}

#[test]
fn trivial_on_m_n_ntilde() {
    let cube = E8Cube::new();
    let t = build_epsilon0(&cube.l).unwrap();
    assert!(t.verify_triviality(&cube.m).unwrap());
    assert!(t.verify_triviality(&cube.n).unwrap());
    assert!(t.verify_triviality(&cube.nt).unwrap());
    let first = cube.maps.image("eta1(E8)", &cube.e8, |v| cube.maps.eta(0, v)).unwrap();
    assert!(!t.verify_triviality(&first).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let a = random_vector(&cube.m, &mut rng);
        let b = random_vector(&cube.m, &mut rng);
        assert_eq!(t.epsilon(&a, &b).unwrap(), 0);
    }
}

#[test]
fn e8_cube_is_componentwise() {
    let cube = E8Cube::new();
    let t = build_epsilon0(&cube.l).unwrap();
    let t8 = build_epsilon0(&cube.e8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a: Vec<Vector> = (0..3).map(|_| random_vector(&cube.e8, &mut rng)).collect();
        let b: Vec<Vector> = (0..3).map(|_| random_vector(&cube.e8, &mut rng)).collect();
        let glue = |p: &[Vector]| -> Vector { (0..3).fold(vec![int(0); 24], |acc, i| add(&acc, &cube.maps.eta(i, &p[i]))) };
        let whole = t.epsilon(&glue(&a), &glue(&b)).unwrap();
        let parts: u8 = (0..3).map(|i| t8.epsilon(&a[i], &b[i]).unwrap()).sum::<u8>() % 2;
        assert_eq!(whole, parts);
    }
}

#[test]
fn doubled_masks_agree() {
    let cube = E8Cube::new();
    let t = build_epsilon0(&cube.l).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let v = random_vector(&cube.l, &mut rng);
        let doubled: Vec<i32> = v.iter().map(|x| (x * int(2)).to_integer().to_i32().unwrap()).collect();
        assert_eq!(t.mask_doubled(&doubled), Some(t.mask(&v).unwrap()));
    }
}

/// Parity mask straight from the rational coordinate solve.
fn rational_mask(l: &Lattice, v: &[Rational]) -> Option<u64> {
    let c = l.int_coordinates(v)?;
    Some(c.iter().enumerate().fold(0, |m, (i, x)| if x.is_odd() { m | (1 << i) } else { m }))
}

proptest! {
    #[test]
    fn integer_mask_route_matches_rational_solve(seed in any::<u64>(), shift in 0usize..24, num in -3i64..=3) {
        let cube = E8Cube::new();
        let t = build_epsilon0(&cube.l).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&cube.l, &mut rng);
        prop_assert_eq!(t.mask(&v).ok(), rational_mask(&cube.l, &v));
        // perturbed vectors, often outside L, in ½ℤ^24 and beyond
        for den in [2, 3] {
            let mut w = v.clone();
            w[shift] += Rational::new(num.into(), den.into());
            prop_assert_eq!(t.mask(&w).ok(), rational_mask(&cube.l, &w));
        }
    }

    #[test]
    fn bilinear_in_first_argument(seed in any::<u64>()) {
        let e8 = Lattice::e8();
        let t = build_epsilon0(&e8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, a2, b) = (random_vector(&e8, &mut rng), random_vector(&e8, &mut rng), random_vector(&e8, &mut rng));
        let lhs = t.epsilon(&add(&a, &a2), &b).unwrap();
        let rhs = (t.epsilon(&a, &b).unwrap() + t.epsilon(&a2, &b).unwrap()) % 2;
        prop_assert_eq!(lhs, rhs);
        prop_assert!(t.satisfies_congruences(&a, &a2).unwrap());
    }
}
