use std::sync::OnceLock;

use griess_lab::fock::*;
use griess_lab::lattice::*;
use griess_lab::numerics::{int, rat, Eisenstein, RatMatrix};
use num_traits::Zero;

fn family() -> &'static AxisFamily {
    static F: OnceLock<AxisFamily> = OnceLock::new();
    F.get_or_init(|| AxisFamily::build(&ShellStore::in_memory()).unwrap())
}

fn q(n: i64, d: i64) -> Eisenstein {
    Eisenstein::from_rational(rat(n, d))
}

#[test]
fn axis_norms_and_products() {
    let f = family();
    let v = &f.voa;
    let (em, en, ent) = (f.axis(0, 0), f.axis(0, 1), f.axis(0, 2));
    assert_eq!(v.invariant_form(em, em).unwrap(), q(1, 4));
    assert_eq!(v.invariant_form(en, ent).unwrap(), q(1, 256));
    assert_eq!(v.griess_product(em, em).unwrap(), em.scale_rational(&int(2)));
    let want = em.add(en).sub(ent).scale_rational(&rat(1, 32));
    assert_eq!(v.griess_product(em, en).unwrap(), want);
    // the Ising vector on Ñ satisfies the same law with the roles cycled
    let want = em.add(ent).sub(en).scale_rational(&rat(1, 32));
    assert_eq!(v.griess_product(em, ent).unwrap(), want);
}

#[test]
fn all_nine_axes_are_idempotent() {
    let f = family();
    for e in f.axes() {
        assert_eq!(e.weight().unwrap(), Some(2));
        assert_eq!(f.voa.griess_product(e, e).unwrap(), e.scale_rational(&int(2)));
    }
}

#[test]
fn gram_of_axes() {
    let f = family();
    let g = f.gram().unwrap();
    for p in 0..9 {
        for r in 0..9 {
            assert_eq!(g[p][r], if p == r { q(1, 4) } else { q(1, 256) }, "({p},{r})");
        }
    }
    let rational = RatMatrix::from_rows(g.iter().map(|row| row.iter().map(|x| x.as_rational().unwrap().clone()).collect()).collect(), 9);
    assert_eq!(rational.rank(), 9);
    assert!(rational.leading_minors().unwrap().iter().all(|m| m > &Zero::zero()));
}

#[test]
fn conformal_vectors() {
    let f = family();
    let v = &f.voa;
    let wl = v.conformal_vector().unwrap();
    assert_eq!(v.griess_product(&wl, &wl).unwrap(), wl.scale_rational(&int(2)));
    assert_eq!(v.invariant_form(&wl, &wl).unwrap(), q(12, 1));
    let wm = virasoro_of_subspace(&f.cube.m.basis_vectors(), 24).unwrap();
    assert_eq!(v.invariant_form(&wm, &wm).unwrap(), q(4, 1));
    assert_eq!(v.griess_product(&wm, &wm).unwrap(), wm.scale_rational(&int(2)));
    let wn = virasoro_of_subspace(&f.cube.n.basis_vectors(), 24).unwrap();
    let wnt = virasoro_of_subspace(&f.cube.nt.basis_vectors(), 24).unwrap();
    let sum = wm.add(&wn).add(&wnt).scale_rational(&rat(2, 3));
    assert_eq!(f.omega_m_plus_n().unwrap(), sum);
    // ω_L acts as 2 on weight 2 and as L(−1)-translation on weight 1
    assert_eq!(v.griess_product(&wl, f.axis(1, 2)).unwrap(), f.axis(1, 2).scale_rational(&int(2)));
}

#[test]
fn subspace_vector_is_basis_independent() {
    let f = family();
    let rows = f.cube.m.basis_vectors();
    let mut other = rows.clone();
    other[0] = add(&rows[0], &rows[3]);
    other[5] = sub(&rows[5], &scale(&rows[1], &int(2)));
    assert_eq!(virasoro_of_subspace(&rows, 24).unwrap(), virasoro_of_subspace(&other, 24).unwrap());
    let degenerate = vec![rows[0].clone(), rows[0].clone()];
    assert!(matches!(virasoro_of_subspace(&degenerate, 24), Err(FockError::Degenerate(_))));
}

#[test]
fn ising_constructor_rejects_wrong_shells() {
    let f = family();
    let e1 = f.cube.maps.image("eta1(E8)", &f.cube.e8, |v| f.cube.maps.eta(0, v)).unwrap();
    let err = f.voa.ising_of_sqrt2e8(&e1, &ShellStore::in_memory()).unwrap_err();
    assert!(matches!(err, FockError::WrongShell { roots: 240, .. }));
}

#[test]
fn rho_twist_properties() {
    let f = family();
    let em = f.axis(0, 0);
    assert_eq!(&f.rho(0, em).unwrap(), em);
    let r3 = (0..3).fold(em.clone(), |s, _| f.rho(1, &s).unwrap());
    assert_eq!(&r3, em);
    let orbit = em.add(&f.rho(1, em).unwrap()).add(&f.rho(2, em).unwrap());
    assert_eq!(orbit, rho_orbit_sum_prediction(f).unwrap());
    // ρ preserves the product and the form on sampled pairs
    let v = &f.voa;
    for (a, b) in [(f.axis(0, 0), f.axis(1, 1)), (f.axis(2, 1), f.axis(0, 2))] {
        let ra = f.rho(1, a).unwrap();
        let rb = f.rho(1, b).unwrap();
        assert_eq!(f.rho(1, &v.griess_product(a, b).unwrap()).unwrap(), v.griess_product(&ra, &rb).unwrap());
        assert_eq!(v.invariant_form(&ra, &rb).unwrap(), v.invariant_form(a, b).unwrap());
    }
}

#[test]
fn theta_properties() {
    let f = family();
    let v = &f.voa;
    let wl = v.conformal_vector().unwrap();
    assert_eq!(theta(&wl), wl);
    assert_eq!(&theta(f.axis(0, 0)), f.axis(0, 0));
    let [x0, x1, x2] = f.real_form_components().unwrap();
    assert_eq!(theta(&x1), x2);
    assert_eq!(theta(&x0), x0);
    // θ is an automorphism; ρ-twisted axes have ζ-coefficients, so test on
    // the real axes and on X¹ + X², X¹ − X²
    let plus = x1.add(&x2);
    let minus = x1.sub(&x2);
    for (a, b) in [(f.axis(0, 0), f.axis(0, 1)), (&plus, f.axis(0, 2)), (&minus, &plus)] {
        assert_eq!(theta(&v.griess_product(a, b).unwrap()), v.griess_product(&theta(a), &theta(b)).unwrap());
        assert_eq!(v.invariant_form(&theta(a), &theta(b)).unwrap(), v.invariant_form(a, b).unwrap());
    }
}

#[test]
fn real_form_components_and_supports() {
    let f = family();
    let store = ShellStore::in_memory();
    let [x0, x1, x2] = f.real_form_components().unwrap();
    assert_eq!(&x0.add(&x1).add(&x2), f.axis(0, 0));
    assert!(x0.is_rational() && x1.is_rational() && x2.is_rational());
    let classes = root_classes(f, &store).unwrap();
    for (x, class) in [(&x1, &classes[1]), (&x2, &classes[2])] {
        assert_eq!(x.len(), 84);
        for b in class {
            let m = FockMonomial::new(&[], &m_vector(&f.cube, b)).unwrap();
            assert_eq!(x.coefficient(&m), q(1, 32));
        }
    }
    // the coefficient on √−3 of ρe_M is −½(X¹ − X²)
    let rho_e = f.rho(1, f.axis(0, 0)).unwrap();
    let s3 = Eisenstein::sqrt_minus3().scale(&rat(1, 2));
    let base = x0.add(&x1.add(&x2).scale_rational(&rat(-1, 2)));
    assert_eq!(rho_e, base.sub(&x1.sub(&x2).scale(&s3)));
    assert_ne!(rho_e, base.add(&x1.sub(&x2).scale(&s3)));
}

#[test]
fn sugawara_three_ways() {
    let f = family();
    let a = f.sugawara_definition().unwrap();
    let b = f.sugawara_closed_form().unwrap();
    let c = f.sugawara_from_axes().unwrap();
    assert_eq!(a, b);
    assert_eq!(b, c);
    let v = &f.voa;
    assert_eq!(v.griess_product(&b, &b).unwrap(), b.scale_rational(&int(2)));
    assert_eq!(v.invariant_form(&b, &b).unwrap(), q(10, 1));
    let zero = vec![int(0); 24];
    for h in f.cube.m_plus_n().basis_vectors() {
        let hs = FockState::oscillators(&[(1, &h)], &zero).unwrap();
        assert_eq!(v.mode(&b, &hs, 1).unwrap(), hs.scale_rational(&rat(3, 4)));
    }
    // and on a ζ-multiple
    let h = f.cube.m.basis_vectors()[2].clone();
    let hs = FockState::oscillators(&[(1, &h)], &zero).unwrap().scale(&Eisenstein::zeta());
    assert_eq!(v.mode(&b, &hs, 1).unwrap(), hs.scale_rational(&rat(3, 4)));
}

#[test]
fn commutant_annihilation() {
    let report = family().commutant_annihilation().unwrap();
    assert_eq!(report.checked, 72 * 9 * 4);
    assert!(report.failures.is_empty(), "{:?}", &report.failures[..report.failures.len().min(3)]);
}

#[test]
fn g_and_h_commute_on_axes() {
    let f = family();
    for i in 0..3 {
        for j in 0..3 {
            let e = f.axis(i, j);
            assert_eq!(&f.h_map(e), f.axis(i, j + 1));
            assert_eq!(&f.rho(1, e).unwrap(), f.axis(i + 1, j));
            assert_eq!(f.rho(1, &f.h_map(e)).unwrap(), f.h_map(&f.rho(1, e).unwrap()));
        }
    }
}

#[test]
fn axes_span_product_table() {
    // e^{i,j}·e^{i',j'} = (1/32)(e^{i,j} + e^{i',j'} − e^{i'',j''})
    let f = family();
    for (i, j, i2, j2) in [(0, 0, 1, 1), (1, 0, 2, 2), (2, 1, 0, 1), (1, 2, 2, 0)] {
        let p = f.voa.griess_product(f.axis(i, j), f.axis(i2, j2)).unwrap();
        let coords = coordinates_in(f.axes(), &p).unwrap();
        let third = axis_index((6 - i - i2) % 3, (6 - j - j2) % 3);
        for (k, c) in coords.iter().enumerate() {
            let want = if k == axis_index(i, j) || k == axis_index(i2, j2) {
                q(1, 32)
            } else if k == third {
                q(-1, 32)
            } else {
                q(0, 1)
            };
            assert_eq!(c, &want, "product ({i},{j})·({i2},{j2}) coordinate {k}");
        }
    }
}

#[test]
fn parafermion_vector() {
    let p = Parafermion::a26().unwrap();
    assert_eq!(p.level, 9);
    let w = p.omega().unwrap();
    assert_eq!(p.voa.invariant_form(&w, &w).unwrap(), q(8, 11));
    let hs = p.h_state().unwrap();
    for n in 0..3 {
        assert!(p.voa.mode(&hs, &w, n).unwrap().is_zero(), "h_{n} ω_α ≠ 0");
    }
    assert_eq!(p.voa.mode(&p.x, &p.y, 0).unwrap(), hs);
    let printed = p.omega_with_sign(1).unwrap();
    assert_ne!(p.voa.griess_product(&printed, &printed).unwrap(), printed.scale_rational(&int(2)));
}

#[test]
fn state_dump_shape() {
    let f = family();
    let text = f.axis(1, 0).dump();
    assert!(text.starts_with("griess-lab-state v1 24 "));
    assert_eq!(&FockState::parse(&text).unwrap(), f.axis(1, 0));
}
