use griess_lab::axial::*;
use griess_lab::numerics::{int, rat, RatMatrix, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn e(g: &StructureAlgebra, i: usize, j: usize) -> Vector {
    g.basis_vector(g9_index(i, j))
}

fn lin(parts: &[(&Vector, Rational)]) -> Vector {
    let n = parts[0].0.len();
    let mut out = vec![Rational::zero(); n];
    for (v, c) in parts {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += c * x;
        }
    }
    out
}

fn scaled(v: &[Rational], c: &Rational) -> Vector {
    v.iter().map(|x| x * c).collect()
}

#[test]
fn three_c_virasoro_vectors() {
    let u = build_3c();
    assert!(u.is_form_associative());
    let w = u.combination(&[(0, rat(32, 33)), (1, rat(32, 33)), (2, rat(32, 33))]);
    assert_eq!(certify_virasoro(&u, &w).unwrap(), rat(16, 11));
    // (32/33)²(3/4 + 6/256) = 8/11, computed by hand
    assert_eq!(u.form(&w, &w), rat(32 * 32, 33 * 33) * (rat(3, 4) + rat(6, 256)));
    let a = lin(&[(&w, int(1)), (&u.basis_vector(0), int(-1))]);
    assert_eq!(certify_virasoro(&u, &a).unwrap(), rat(21, 22));
    assert!(u.product(&u.basis_vector(0), &a).iter().all(Zero::is_zero));
    assert!(matches!(certify_virasoro(&u, &u.basis_vector(0).iter().map(|x| x * int(3)).collect::<Vec<_>>()), Err(AxialError::NotIdempotent)));
}

#[test]
fn g9_gram_and_identity() {
    let g = build_g9();
    assert!(g.is_form_associative());
    assert_eq!(g.gram().rank(), 9);
    // aI + bJ has eigenvalues a (×8) and a + 9b
    let det = rat(9, 32) * (0..8).fold(Rational::one(), |acc, _| acc * rat(63, 256));
    assert_eq!(g.gram().det().unwrap(), det);
    let w = g9_omega(&g);
    assert_eq!(certify_virasoro(&g, &w).unwrap(), int(4));
    let half = scaled(&w, &rat(1, 2));
    assert_eq!(adjoint(&g, &half).matrix, RatMatrix::identity(9));
}

#[test]
fn frame_central_charges() {
    let g = build_g9();
    let a = a_vectors(&g);
    for v in &a {
        assert_eq!(certify_virasoro(&g, v).unwrap(), rat(21, 22));
    }
    let b = b1(&g);
    assert_eq!(certify_virasoro(&g, &b).unwrap(), rat(28, 11));
    assert_eq!(rat(1, 2) + rat(21, 22) + rat(28, 11), int(4));
    let f = frame(&g);
    assert_eq!(lin(&[(&f[0], int(1)), (&f[1], int(1)), (&f[2], int(1))]), g9_omega(&g));
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(g.product(&f[i], &f[j]).iter().all(Zero::is_zero), "frame {i}·{j}");
        }
    }
}

#[test]
fn a_products() {
    let report = check_a_products(&build_g9()).unwrap();
    assert_eq!(report.checked.len(), 6);
    assert!(report.checked.contains(&(1, 2)) && report.checked.contains(&(3, 4)));
    assert!(report.failures.is_empty(), "{:?}", report.failures);
    assert!(check_a_products(&build_3c()).is_err());
}

#[test]
fn adjoint_spectra() {
    let g = build_g9();
    let cert = certify_axis(&g, &g.basis_vector(0)).unwrap();
    assert_eq!(cert.dims(), [1, 4, 0, 4]);
    // oracle: rank of ad(e) − λ by the fraction-free route
    let ad = adjoint(&g, &g.basis_vector(0)).matrix;
    for (lambda, dim) in [(int(2), 1), (int(0), 4), (rat(1, 16), 4)] {
        let shifted = ad.sub(&RatMatrix::scalar(9, lambda));
        assert_eq!(9 - shifted.rref_fraction_free().pivots.len(), dim);
    }
    let u = build_3c();
    let diff = lin(&[(&u.basis_vector(1), int(1)), (&u.basis_vector(2), int(-1))]);
    assert_eq!(adjoint(&u, &u.basis_vector(0)).apply(&diff), scaled(&diff, &rat(1, 16)));
    // ω has c = 4, not an axis
    assert!(matches!(certify_axis(&g, &g9_omega(&g)), Err(AxialError::WrongCentralCharge { .. })));
}

#[test]
fn tau_examples() {
    let u = build_3c();
    let t = miyamoto_tau(&u, &u.basis_vector(0)).unwrap();
    assert!(t.is_automorphism());
    assert_eq!(t.apply(&u.basis_vector(1)), u.basis_vector(2));
    let g = build_g9();
    let t = miyamoto_tau(&g, &e(&g, 0, 0)).unwrap();
    assert_eq!(t.apply(&e(&g, 0, 0)), e(&g, 0, 0));
    assert_eq!(t.apply(&e(&g, 1, 1)), e(&g, 2, 2));
    assert_eq!(t.matrix.mul(&t.matrix), RatMatrix::identity(9));
}

#[test]
fn tau_permutes_axes() {
    let g = build_g9();
    let axes: Vec<Vector> = (0..9).map(|p| g.basis_vector(p)).collect();
    for p in 0..9 {
        let t = miyamoto_tau(&g, &axes[p]).unwrap();
        let mut images: Vec<usize> = axes.iter().map(|x| axes.iter().position(|y| y == &t.apply(x)).expect("axis image")).collect();
        images.sort();
        assert_eq!(images, (0..9).collect::<Vec<_>>());
        let cert = certify_axis(&g, &axes[p]).unwrap();
        assert_eq!(cert.dims().iter().sum::<usize>(), 9);
    }
}

#[test]
fn sigma_is_trivial_here() {
    for a in [build_3c(), build_g9()] {
        let (s, fixed) = miyamoto_sigma(&a, &a.basis_vector(0)).unwrap();
        assert!(s.is_automorphism());
        for v in &fixed {
            assert_eq!(&s.apply(v), v);
        }
    }
}

#[test]
fn group_of_shape_3sq_2() {
    let g = build_g9();
    let tau = |i, j| miyamoto_tau(&g, &e(&g, i, j)).unwrap();
    let gens = [tau(0, 0), tau(0, 1), tau(1, 0)];
    let grp = group_closure(&gens, DEFAULT_CLOSURE_BOUND).unwrap();
    assert_eq!(grp.order(), 18);
    assert!(grp.has_shape_3sq_2());
    let inv = grp.involutions();
    assert_eq!(inv.len(), 9);
    assert_eq!(grp.conjugacy_class(inv[0]).len(), 9);
    let all: Vec<LinearEndo> = (0..9).map(|p| miyamoto_tau(&g, &g.basis_vector(p)).unwrap()).collect();
    assert!(group_closure(&all, DEFAULT_CLOSURE_BOUND).unwrap().same_elements(&grp));
    let gg = tau(0, 0).compose(&tau(1, 0));
    let hh = tau(0, 0).compose(&tau(0, 1));
    assert_eq!(gg.matrix.mul(&hh.matrix), hh.matrix.mul(&gg.matrix));
    assert_eq!(grp.element_order(&gg.matrix), 3);
    assert_eq!(grp.element_order(&hh.matrix), 3);
    assert!(matches!(group_closure(&gens, 10), Err(AxialError::ClosureBound(10))));
}

#[test]
fn highest_weights() {
    let g = build_g9();
    let f = frame(&g);
    let a = a_vectors(&g);
    let hw = |v: &Vector| highest_weight_check(&g, v, &f).unwrap();
    let d = |x: &Vector, y: &Vector| lin(&[(x, int(1)), (y, int(-1))]);
    assert_eq!(hw(&d(&a[1], &a[2])), vec![int(0), rat(1, 11), rat(21, 11)]);
    assert_eq!(hw(&d(&e(&g, 0, 1), &e(&g, 0, 2))), vec![rat(1, 16), rat(31, 16), int(0)]);
    let row = |i| lin(&[(&e(&g, i, 0), int(1)), (&e(&g, i, 1), int(1)), (&e(&g, i, 2), int(1))]);
    assert_eq!(hw(&d(&row(1), &row(2))), vec![rat(1, 16), rat(21, 176), rat(20, 11)]);
    let v = d(&d(&e(&g, 1, 1), &e(&g, 2, 2)), &d(&e(&g, 1, 2), &e(&g, 2, 1)));
    assert_eq!(hw(&v), vec![rat(1, 16), rat(5, 176), rat(21, 11)]);
    assert!(matches!(highest_weight_check(&g, &e(&g, 1, 1), &f), Err(AxialError::NotEigenvector(_))));
}

#[test]
fn isomorphisms_and_text_format() {
    let g = build_g9();
    assert!(isomorphism_check(&g, &g, &(0..9).collect::<Vec<_>>()).unwrap());
    // the swap i ↔ j is an automorphism of the index law; a transposition of two axes is not
    let swap: Vec<usize> = (0..9).map(|p| g9_index(p % 3, p / 3)).collect();
    assert!(isomorphism_check(&g, &g, &swap).unwrap());
    let mut bad: Vec<usize> = (0..9).collect();
    bad.swap(1, 2);
    assert!(!isomorphism_check(&g, &g, &bad).unwrap());
    assert!(isomorphism_check(&g, &build_3c(), &[0, 1, 2]).is_err());
    let text = g.to_text();
    assert!(text.starts_with("griess-lab-alg v1 9\n"));
    assert_eq!(StructureAlgebra::from_text(&text).unwrap(), g);
    assert!(StructureAlgebra::from_text("griess-lab-alg v2 3").is_err());
    assert!(StructureAlgebra::from_text("griess-lab-alg v1 2\n0 1 5 1/2").is_err());
}

#[test]
fn central_charges() {
    assert_eq!(int(24) - affine_central_charge(&LieType::sl(9), 3), int(4));
    assert_eq!(parafermion_central_charge(&LieType::sl(3), 9), int(4));
    assert_eq!(affine_central_charge(&LieType::e8(), 3), rat(248, 11));
}

fn g9_vector() -> impl Strategy<Value = Vector> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 9).prop_map(|v| v.into_iter().map(|(n, d)| rat(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_associative_on_random_vectors(x in g9_vector(), y in g9_vector(), z in g9_vector()) {
        let g = build_g9();
        prop_assert_eq!(g.form(&g.product(&x, &y), &z), g.form(&x, &g.product(&y, &z)));
    }

    #[test]
    fn tau_preserves_random_products(x in g9_vector(), y in g9_vector(), p in 0usize..9) {
        let g = build_g9();
        let t = miyamoto_tau(&g, &g.basis_vector(p)).unwrap();
        prop_assert_eq!(t.apply(&g.product(&x, &y)), g.product(&t.apply(&x), &t.apply(&y)));
        prop_assert_eq!(g.form(&t.apply(&x), &t.apply(&y)), g.form(&x, &y));
    }

    #[test]
    fn weights_invariant_under_rescaling(n in -9i64..=9, d in 1i64..=7) {
        prop_assume!(n != 0);
        let g = build_g9();
        let f = frame(&g);
        let a = a_vectors(&g);
        let v = lin(&[(&a[1], int(1)), (&a[2], int(-1))]);
        prop_assert_eq!(highest_weight_check(&g, &scaled(&v, &rat(n, d)), &f).unwrap(), highest_weight_check(&g, &v, &f).unwrap());
    }

    #[test]
    fn text_roundtrip_of_random_tables(entries in prop::collection::vec((0usize..3, 0usize..3, 0usize..3, -5i64..=5), 0..12)) {
        let mut table = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for (i, j, k, c) in entries {
            table[i][j][k] = rat(c, 7);
            table[j][i][k] = rat(c, 7);
        }
        let a = StructureAlgebra::new(vec!["x".into(), "y".into(), "z".into()], table, RatMatrix::identity(3)).unwrap();
        prop_assert_eq!(StructureAlgebra::from_text(&a.to_text()).unwrap(), a);
    }
}
