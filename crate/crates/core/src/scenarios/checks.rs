use std::fmt::Display;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cross_validate, Context, Status, Suite};
use crate::axial::*;
use crate::cocycle::build_epsilon0;
use crate::fock::{m_vector, root_classes, theta, FockMonomial, FockState, Parafermion};
use crate::lattice::{
    coset_decomposition_a26, neg, residue_classes, root_system_type, sublattice_k, E8Cube, Lattice,
};
use crate::numerics::{int, rat, Eisenstein, RatMatrix, Rational};

/// One registered check: `run` renders the computed value, which must equal
/// `expected` exactly.
pub struct Check {
    pub id: &'static str,
    pub suite: Suite,
    pub provenance: &'static str,
    pub claim: &'static str,
    pub expected: &'static str,
    pub run: fn(&Context) -> Result<String, String>,
}

fn err(e: impl Display) -> String {
    e.to_string()
}

fn tuple(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn lin(parts: &[(&Vector, Rational)]) -> Vector {
    let mut out = vec![Rational::zero(); parts[0].0.len()];
    for (v, c) in parts {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += c * x;
        }
    }
    out
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn q(r: Rational) -> Eisenstein {
    Eisenstein::from_rational(r)
}

// ---- lattice ---------------------------------------------------------------

fn e8_shell(ctx: &Context, m: i64) -> Result<String, String> {
    Ok(ctx.store.shell(&Lattice::e8(), m).map_err(err)?.len().to_string())
}

fn k_roots(ctx: &Context) -> Result<String, String> {
    let e8 = Lattice::e8();
    let a = crate::lattice::find_a(&e8, &ctx.store).map_err(err)?;
    let k = sublattice_k(&e8, &a).map_err(err)?;
    let n = ctx.store.shell(&k, 2).map_err(err)?.len();
    Ok(format!("{n} roots of type {}", root_system_type(&k, &ctx.store).map_err(err)?))
}

fn root_class_sizes(ctx: &Context) -> Result<String, String> {
    let e8 = Lattice::e8();
    let a = crate::lattice::find_a(&e8, &ctx.store).map_err(err)?;
    let c = residue_classes(&ctx.store.shell(&e8, 2).map_err(err)?.vectors, &a);
    Ok(format!("{} {} {}", c[0].len(), c[1].len(), c[2].len()))
}

fn a26_cosets(ctx: &Context) -> Result<String, String> {
    let c = coset_decomposition_a26(&ctx.store).map_err(err)?;
    let distinct = if c.pairwise_incongruent() && c.all_in_superlattice() { c.representatives.len() } else { 0 };
    Ok(format!("index {}, {distinct} distinct representatives", c.index))
}

// ---- cocycle ---------------------------------------------------------------

fn cocycle_congruences(ctx: &Context) -> Result<String, String> {
    let cube = E8Cube::new();
    let t = build_epsilon0(&cube.l).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut random = || {
        let c: Vec<i64> = (0..cube.l.rank()).map(|_| rng.gen_range(-3..=3)).collect();
        cube.l.combine_int(&c)
    };
    let mut ok = 0;
    for _ in 0..1000 {
        let (a, b) = (random(), random());
        if t.satisfies_congruences(&a, &b).map_err(err)? {
            ok += 1;
        }
    }
    Ok(format!("{ok} of 1000"))
}

fn cocycle_trivial(_: &Context) -> Result<String, String> {
    let cube = E8Cube::new();
    let t = build_epsilon0(&cube.l).map_err(err)?;
    let trivial: Vec<&str> = [(&cube.m, "M"), (&cube.n, "N"), (&cube.nt, "Ñ")]
        .into_iter()
        .filter_map(|(s, name)| t.verify_triviality(s).ok().filter(|&b| b).map(|_| name))
        .collect();
    Ok(format!("trivial on {}", trivial.join(", ")))
}

fn cocycle_root_sign(ctx: &Context) -> Result<String, String> {
    let e8 = Lattice::e8();
    let t = build_epsilon0(&e8).map_err(err)?;
    let roots = ctx.store.shell(&e8, 2).map_err(err)?;
    let mut minus = 0;
    for a in &roots.vectors {
        if t.epsilon(a, &neg(a)).map_err(err)? == 1 {
            minus += 1;
        }
    }
    Ok(format!("e^a e^-a = -e^0 for {minus} of {} roots", roots.len()))
}

// ---- fock axes -------------------------------------------------------------

fn axes_idempotent(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let mut ok = 0;
    for e in f.axes() {
        if f.voa.griess_product(e, e).map_err(err)? == e.scale_rational(&int(2)) {
            ok += 1;
        }
    }
    Ok(format!("{ok} of 9"))
}

fn axes_gram(ctx: &Context) -> Result<String, String> {
    let g = ctx.family()?.gram().map_err(err)?;
    let diag = (0..9).filter(|&p| g[p][p] == q(rat(1, 4))).count();
    let cross = (0..9).flat_map(|p| (p + 1..9).map(move |r| (p, r))).filter(|&(p, r)| g[p][r] == q(rat(1, 256))).count();
    Ok(format!("{diag} diagonal entries 1/4, {cross} cross pairings 1/256"))
}

fn axes_m_times_n(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let (m, n, nt) = (f.axis(0, 0), f.axis(0, 1), f.axis(0, 2));
    let p = f.voa.griess_product(m, n).map_err(err)?;
    Ok(if p == m.add(n).sub(nt).scale_rational(&rat(1, 32)) { "(1/32)(e_M + e_N - e_Ñ)".into() } else { "another state".into() })
}

fn axes_cross_validate(ctx: &Context) -> Result<String, String> {
    let report = cross_validate(ctx.family()?, ctx.seed);
    match report.results.iter().find(|r| r.status == Status::Fail) {
        None => Ok("isomorphic to the abstract tables".into()),
        Some(r) => Ok(format!("{}: {}", r.id, r.computed)),
    }
}

fn axes_g_h_commute(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let mut ok = 0;
    for e in f.axes() {
        let gh = f.rho(1, &f.h_map(e)).map_err(err)?;
        let hg = f.h_map(&f.rho(1, e).map_err(err)?);
        if gh == hg {
            ok += 1;
        }
    }
    Ok(format!("gh = hg on {ok} of 9 axes"))
}

// ---- commutant and Sugawara ------------------------------------------------

fn commutant(ctx: &Context) -> Result<String, String> {
    let r = ctx.family()?.commutant_annihilation().map_err(err)?;
    Ok(format!("{} checks, {} failures", r.checked, r.failures.len()))
}

fn sugawara_agree(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let a = f.sugawara_definition().map_err(err)?;
    let b = f.sugawara_closed_form().map_err(err)?;
    let c = f.sugawara_from_axes().map_err(err)?;
    Ok(match (a == b, b == c) {
        (true, true) => "all three agree".into(),
        (x, y) => format!("definition = closed form: {x}, closed form = axis form: {y}"),
    })
}

fn sugawara_charge(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let o = f.sugawara_closed_form().map_err(err)?;
    let idem = f.voa.griess_product(&o, &o).map_err(err)? == o.scale_rational(&int(2));
    let c = f.voa.invariant_form(&o, &o).map_err(err)?.scale(&int(2));
    Ok(format!("idempotent: {idem}, c = {c}"))
}

fn sugawara_on_heisenberg(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let o = f.sugawara_closed_form().map_err(err)?;
    let zero = vec![int(0); 24];
    let basis = f.cube.m_plus_n().basis_vectors();
    let mut eigen = Vec::new();
    for (k, h) in basis.iter().enumerate() {
        // alternate rational and ζ-multiples so both parts of the span are hit
        let c = if k % 2 == 0 { Eisenstein::from_int(1) } else { Eisenstein::zeta() };
        let hs = FockState::oscillators(&[(1, h)], &zero).map_err(err)?.scale(&c);
        let image = f.voa.mode(&o, &hs, 1).map_err(err)?;
        let scaled = hs.scale_rational(&rat(3, 4));
        eigen.push(image == scaled);
    }
    let hits = eigen.iter().filter(|&&b| b).count();
    Ok(format!("eigenvalue 3/4 on {hits} of {} basis vectors", basis.len()))
}

// ---- real form -------------------------------------------------------------

fn real_sum(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let [x0, x1, x2] = f.real_form_components().map_err(err)?;
    Ok(if &x0.add(&x1).add(&x2) == f.axis(0, 0) { "X0 + X1 + X2 = e_M".into() } else { "sum differs from e_M".into() })
}

fn real_supports(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let [_, x1, x2] = f.real_form_components().map_err(err)?;
    let classes = root_classes(f, &ctx.store).map_err(err)?;
    let mut parts = Vec::new();
    for (x, class) in [(&x1, &classes[1]), (&x2, &classes[2])] {
        let mut hits = 0;
        for b in class {
            let m = FockMonomial::new(&[], &m_vector(&f.cube, b)).map_err(err)?;
            if x.coefficient(&m) == q(rat(1, 32)) {
                hits += 1;
            }
        }
        let exact = x.len() == class.len() && hits == class.len();
        parts.push(format!("{} terms{}", x.len(), if exact { " of 1/32 on its class" } else { " off its class" }));
    }
    Ok(parts.join("; "))
}

fn real_theta(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let [x0, x1, x2] = f.real_form_components().map_err(err)?;
    let plus = x1.add(&x2);
    let minus = x1.sub(&x2);
    Ok(format!(
        "X0 in V+: {}, X1+X2 in V+: {}, X1-X2 in V-: {}",
        theta(&x0) == x0,
        theta(&plus) == plus,
        theta(&minus) == minus.scale_rational(&int(-1))
    ))
}

/// Sign s with ρe_M = X⁰ − ½(X¹+X²) + s·(√−3/2)(X¹−X²).
fn rho_e_sign(ctx: &Context) -> Result<String, String> {
    let f = ctx.family()?;
    let [x0, x1, x2] = f.real_form_components().map_err(err)?;
    let rho_e = f.rho(1, f.axis(0, 0)).map_err(err)?;
    let base = x0.add(&x1.add(&x2).scale_rational(&rat(-1, 2)));
    let imag = x1.sub(&x2).scale(&Eisenstein::sqrt_minus3().scale(&rat(1, 2)));
    Ok(if rho_e == base.add(&imag) {
        "+".into()
    } else if rho_e == base.sub(&imag) {
        "-".into()
    } else {
        "neither sign".into()
    })
}

fn gram_minors(ctx: &Context) -> Result<String, String> {
    let g = ctx.family()?.gram().map_err(err)?;
    let rows: Result<Vec<Vec<Rational>>, String> =
        g.iter().map(|r| r.iter().map(|x| x.as_rational().cloned().ok_or("irrational Gram entry".to_string())).collect()).collect();
    let m = RatMatrix::from_rows(rows?, 9);
    let minors = m.leading_minors().map_err(err)?;
    Ok(format!("{} of {} leading minors positive", minors.iter().filter(|x| **x > Rational::zero()).count(), minors.len()))
}

// ---- abstract algebras -----------------------------------------------------

fn three_c_omega(_: &Context) -> Result<String, String> {
    let u = build_3c();
    let w = u.combination(&[0, 1, 2].map(|i| (i, rat(32, 33))));
    Ok(certify_virasoro(&u, &w).map_err(err)?.to_string())
}

fn three_c_omega_norm(_: &Context) -> Result<String, String> {
    let u = build_3c();
    let w = u.combination(&[0, 1, 2].map(|i| (i, rat(32, 33))));
    Ok(u.form(&w, &w).to_string())
}

fn three_c_complement(_: &Context) -> Result<String, String> {
    let u = build_3c();
    let w = u.combination(&[0, 1, 2].map(|i| (i, rat(32, 33))));
    let a = lin(&[(&w, int(1)), (&u.basis_vector(0), int(-1))]);
    let c = certify_virasoro(&u, &a).map_err(err)?;
    Ok(format!("c = {c}, e0·a = {}", if is_zero(&u.product(&u.basis_vector(0), &a)) { "0" } else { "nonzero" }))
}

fn three_c_tau(_: &Context) -> Result<String, String> {
    let u = build_3c();
    let t = miyamoto_tau(&u, &u.basis_vector(0)).map_err(err)?;
    Ok(tuple(&t.apply(&u.basis_vector(1))))
}

fn g9_gram_rank(_: &Context) -> Result<String, String> {
    Ok(build_g9().gram().rank().to_string())
}

fn g9_gram_det(_: &Context) -> Result<String, String> {
    Ok(build_g9().gram().det().map_err(err)?.to_string())
}

fn g9_omega_charge(_: &Context) -> Result<String, String> {
    let g = build_g9();
    Ok(certify_virasoro(&g, &g9_omega(&g)).map_err(err)?.to_string())
}

fn g9_identity(_: &Context) -> Result<String, String> {
    let g = build_g9();
    let half: Vector = g9_omega(&g).iter().map(|x| x * rat(1, 2)).collect();
    Ok(if adjoint(&g, &half).matrix == RatMatrix::identity(9) { "identity".into() } else { "not the identity".into() })
}

fn g9_spectrum(_: &Context) -> Result<String, String> {
    let g = build_g9();
    let d = certify_axis(&g, &g.basis_vector(0)).map_err(err)?.dims();
    Ok(format!("2:{} 0:{} 1/2:{} 1/16:{}", d[0], d[1], d[2], d[3]))
}

fn g9_a_charges(_: &Context) -> Result<String, String> {
    let g = build_g9();
    let cs: Result<Vec<String>, String> = a_vectors(&g).iter().map(|a| certify_virasoro(&g, a).map(|c| c.to_string()).map_err(err)).collect();
    Ok(cs?.join(" "))
}

fn g9_a_products(_: &Context) -> Result<String, String> {
    let r = check_a_products(&build_g9()).map_err(err)?;
    Ok(format!("{} of {} hold", r.checked.len() - r.failures.len(), r.checked.len()))
}

fn g9_b1(_: &Context) -> Result<String, String> {
    let g = build_g9();
    Ok(certify_virasoro(&g, &b1(&g)).map_err(err)?.to_string())
}

fn g9_frame(_: &Context) -> Result<String, String> {
    let g = build_g9();
    let f = frame(&g);
    let orth = (0..3).all(|i| (i + 1..3).all(|j| is_zero(&g.product(&f[i], &f[j]))));
    let sum = lin(&[(&f[0], int(1)), (&f[1], int(1)), (&f[2], int(1))]) == g9_omega(&g);
    let cs: Result<Vec<Rational>, String> = f.iter().map(|v| certify_virasoro(&g, v).map_err(err)).collect();
    let cs = cs?;
    let total: Rational = cs.iter().sum();
    Ok(format!(
        "{}, {}, c = {} + {} + {} = {total}",
        if orth { "orthogonal" } else { "not orthogonal" },
        if sum { "sum is omega" } else { "sum is not omega" },
        cs[0],
        cs[1],
        cs[2]
    ))
}

fn weight_of(v: impl Fn(&StructureAlgebra) -> Vector) -> Result<String, String> {
    let g = build_g9();
    Ok(tuple(&highest_weight_check(&g, &v(&g), &frame(&g)).map_err(err)?))
}

fn e(g: &StructureAlgebra, i: usize, j: usize) -> Vector {
    g.basis_vector(g9_index(i, j))
}

fn diff(x: &Vector, y: &Vector) -> Vector {
    lin(&[(x, int(1)), (y, int(-1))])
}

fn weight_a2_a3(_: &Context) -> Result<String, String> {
    weight_of(|g| {
        let a = a_vectors(g);
        diff(&a[1], &a[2])
    })
}

fn weight_row0(_: &Context) -> Result<String, String> {
    weight_of(|g| diff(&e(g, 0, 1), &e(g, 0, 2)))
}

fn weight_rows(_: &Context) -> Result<String, String> {
    weight_of(|g| {
        let row = |i| lin(&[(&e(g, i, 0), int(1)), (&e(g, i, 1), int(1)), (&e(g, i, 2), int(1))]);
        diff(&row(1), &row(2))
    })
}

fn weight_diagonals(_: &Context) -> Result<String, String> {
    weight_of(|g| diff(&diff(&e(g, 1, 1), &e(g, 2, 2)), &diff(&e(g, 1, 2), &e(g, 2, 1))))
}

fn taus(g: &StructureAlgebra, which: &[(usize, usize)]) -> Result<Vec<LinearEndo>, String> {
    which.iter().map(|&(i, j)| miyamoto_tau(g, &e(g, i, j)).map_err(err)).collect()
}

fn group_order(ctx: &Context) -> Result<String, String> {
    let g = build_g9();
    Ok(group_closure(&taus(&g, &[(0, 0), (0, 1), (1, 0)])?, ctx.closure_bound).map_err(err)?.order().to_string())
}

fn group_shape(ctx: &Context) -> Result<String, String> {
    let g = build_g9();
    let grp = group_closure(&taus(&g, &[(0, 0), (0, 1), (1, 0)])?, ctx.closure_bound).map_err(err)?;
    let o3 = grp.three_part();
    let inv = grp.involutions();
    let class = inv.first().map_or(0, |t| grp.conjugacy_class(t).len());
    let all: Vec<(usize, usize)> = (0..9).map(|p| (p / 3, p % 3)).collect();
    let same = group_closure(&taus(&g, &all)?, ctx.closure_bound).map_err(err)?.same_elements(&grp);
    Ok(format!(
        "O3 of order {}{}, {} involutions, class size {class}, nine-generator closure {}",
        o3.len(),
        if grp.is_normal_subgroup(&o3) { " normal" } else { " not normal" },
        inv.len(),
        if same { "equal" } else { "different" }
    ))
}

fn group_g_h(ctx: &Context) -> Result<String, String> {
    let alg = build_g9();
    let t = taus(&alg, &[(0, 0), (0, 1), (1, 0)])?;
    let grp = group_closure(&t, ctx.closure_bound).map_err(err)?;
    let g = t[0].compose(&t[2]).matrix;
    let h = t[0].compose(&t[1]).matrix;
    let commute = g.mul(&h) == h.mul(&g);
    Ok(format!("{}, |g| = {}, |h| = {}", if commute { "gh = hg" } else { "gh != hg" }, grp.element_order(&g), grp.element_order(&h)))
}

// ---- central charges -------------------------------------------------------

fn cc_sl9(_: &Context) -> Result<String, String> {
    let c = affine_central_charge(&LieType::sl(9), 3);
    Ok(format!("c = {c}, 24 - c = {}", int(24) - &c))
}

fn cc_sl3(_: &Context) -> Result<String, String> {
    Ok(parafermion_central_charge(&LieType::sl(3), 9).to_string())
}

fn cc_e8(_: &Context) -> Result<String, String> {
    Ok((int(24) - affine_central_charge(&LieType::e8(), 3)).to_string())
}

fn cc_parafermion_vector(_: &Context) -> Result<String, String> {
    let p = Parafermion::a26().map_err(err)?;
    let w = p.omega().map_err(err)?;
    Ok(p.voa.invariant_form(&w, &w).map_err(err)?.scale(&int(2)).to_string())
}

static REGISTRY: &[Check] = &[
    // lattice
    Check { id: "lattice.e8-shell-2", suite: Suite::LatticeCombinatorics, provenance: "stated", claim: "E8 has 240 roots", expected: "240", run: |c| e8_shell(c, 2) },
    Check { id: "lattice.e8-shell-4", suite: Suite::LatticeCombinatorics, provenance: "derived", claim: "E8 has 2160 vectors of norm 4", expected: "2160", run: |c| e8_shell(c, 4) },
    Check { id: "lattice.k-roots", suite: Suite::LatticeCombinatorics, provenance: "stated", claim: "the kernel of ⟨a,·⟩ mod 3 has 72 roots forming A8", expected: "72 roots of type A8", run: k_roots },
    Check { id: "lattice.root-classes", suite: Suite::LatticeCombinatorics, provenance: "stated", claim: "the E8 roots split 72 + 84 + 84 by ⟨a,α⟩ mod 3", expected: "72 84 84", run: root_class_sizes },
    Check { id: "lattice.a26-cosets", suite: Suite::LatticeCombinatorics, provenance: "stated", claim: "Y + A8³ has index 81 in A26", expected: "index 81, 81 distinct representatives", run: a26_cosets },
    // cocycle
    Check { id: "cocycle.congruences", suite: Suite::Cocycle, provenance: "stated", claim: "ε(α,β) + ε(β,α) ≡ ⟨α,β⟩ and ε(α,α) ≡ ⟨α,α⟩/2 mod 2 on random pairs", expected: "1000 of 1000", run: cocycle_congruences },
    Check { id: "cocycle.trivial-on-sublattices", suite: Suite::Cocycle, provenance: "stated", claim: "ε vanishes on M, N and Ñ", expected: "trivial on M, N, Ñ", run: cocycle_trivial },
    Check { id: "cocycle.root-sign", suite: Suite::Cocycle, provenance: "stated", claim: "e^α e^{−α} = −e^0 for norm-2 α", expected: "e^a e^-a = -e^0 for 240 of 240 roots", run: cocycle_root_sign },
    // lattice axes
    Check { id: "axes.idempotent", suite: Suite::FockAxes, provenance: "stated", claim: "every e^{i,j} satisfies e·e = 2e", expected: "9 of 9", run: axes_idempotent },
    Check { id: "axes.gram", suite: Suite::FockAxes, provenance: "stated", claim: "⟨e^{i,j}, e^{i,j}⟩ = 1/4 and distinct axes pair to 1/2⁸", expected: "9 diagonal entries 1/4, 36 cross pairings 1/256", run: axes_gram },
    Check { id: "axes.m-times-n", suite: Suite::FockAxes, provenance: "stated", claim: "e_M·e_N = (1/32)(e_M + e_N − e_Ñ)", expected: "(1/32)(e_M + e_N - e_Ñ)", run: axes_m_times_n },
    Check { id: "axes.cross-validate", suite: Suite::FockAxes, provenance: "derived", claim: "the lattice axes reproduce the abstract 3C and nine-dimensional tables", expected: "isomorphic to the abstract tables", run: axes_cross_validate },
    Check { id: "axes.g-h-commute", suite: Suite::FockAxes, provenance: "stated", claim: "the twist ρ and the block shift commute", expected: "gh = hg on 9 of 9 axes", run: axes_g_h_commute },
    // commutant and Sugawara
    Check { id: "commutant.annihilation", suite: Suite::Commutant, provenance: "stated", claim: "(H_α)_n and (E_α)_n, n = 0, 1, kill every e^{i,j} for α ∈ K(2)", expected: "2592 checks, 0 failures", run: commutant },
    Check { id: "sugawara.three-forms", suite: Suite::Commutant, provenance: "derived", claim: "the defining sum, the closed form and ω_L − (8/9)Σe^{i,j} give the same Ω", expected: "all three agree", run: sugawara_agree },
    Check { id: "sugawara.central-charge", suite: Suite::Commutant, provenance: "stated", claim: "Ω is a Virasoro vector of central charge 20", expected: "idempotent: true, c = 20", run: sugawara_charge },
    Check { id: "sugawara.heisenberg", suite: Suite::Commutant, provenance: "stated", claim: "Ω₁h(−1)𝟙 = (3/4)h(−1)𝟙 for h in (M+N)⊗ℚ(ζ)", expected: "eigenvalue 3/4 on 16 of 16 basis vectors", run: sugawara_on_heisenberg },
    // real form
    Check { id: "real-form.components-sum", suite: Suite::RealForm, provenance: "stated", claim: "X⁰ + X¹ + X² = e_M", expected: "X0 + X1 + X2 = e_M", run: real_sum },
    Check { id: "real-form.supports", suite: Suite::RealForm, provenance: "stated", claim: "X¹ and X² are (1/32) times the exponential sums over the two nonzero root classes", expected: "84 terms of 1/32 on its class; 84 terms of 1/32 on its class", run: real_supports },
    Check { id: "real-form.theta", suite: Suite::RealForm, provenance: "stated", claim: "θ fixes X⁰ and X¹ + X² and negates X¹ − X²", expected: "X0 in V+: true, X1+X2 in V+: true, X1-X2 in V-: true", run: real_theta },
    Check { id: "real-form.rho-e-stated-sign", suite: Suite::RealForm, provenance: "stated", claim: "ρe_M = X⁰ − ½(X¹+X²) + (√−3/2)(X¹−X²) as displayed", expected: "+", run: rho_e_sign },
    Check { id: "real-form.rho-e-derived-sign", suite: Suite::RealForm, provenance: "derived", claim: "ρe_M = X⁰ + ζ²X¹ + ζX², so the √−3 term enters with a minus sign", expected: "-", run: rho_e_sign },
    Check { id: "real-form.gram-minors", suite: Suite::RealForm, provenance: "stated", claim: "the Gram matrix of the nine axes is positive definite", expected: "9 of 9 leading minors positive", run: gram_minors },
    // abstract algebras
    Check { id: "3c.omega-central-charge", suite: Suite::GriessAbstract, provenance: "stated", claim: "(32/33)(e⁰+e¹+e²) is the Virasoro element of central charge 16/11", expected: "16/11", run: three_c_omega },
    Check { id: "3c.omega-norm", suite: Suite::GriessAbstract, provenance: "derived", claim: "⟨ω,ω⟩ = (32/33)²(3/4 + 6/256)", expected: "8/11", run: three_c_omega_norm },
    Check { id: "3c.complement", suite: Suite::GriessAbstract, provenance: "stated", claim: "ω − e⁰ has central charge 21/22 and is orthogonal to e⁰", expected: "c = 21/22, e0·a = 0", run: three_c_complement },
    Check { id: "3c.tau-swaps", suite: Suite::GriessAbstract, provenance: "derived", claim: "τ_{e⁰} swaps e¹ and e²", expected: "(0, 0, 1)", run: three_c_tau },
    Check { id: "g9.gram-rank", suite: Suite::GriessAbstract, provenance: "stated", claim: "the Gram matrix has rank 9", expected: "9", run: g9_gram_rank },
    Check { id: "g9.gram-det", suite: Suite::GriessAbstract, provenance: "derived", claim: "det(aI + bJ) = (a + 9b)a⁸ with a = 63/256, b = 1/256", expected: "2233402022407689/590295810358705651712", run: g9_gram_det },
    Check { id: "g9.omega-central-charge", suite: Suite::GriessAbstract, provenance: "stated", claim: "(8/9)Σe^{i,j} is a Virasoro vector of central charge 4", expected: "4", run: g9_omega_charge },
    Check { id: "g9.half-omega-identity", suite: Suite::GriessAbstract, provenance: "stated", claim: "ω/2 is the identity element", expected: "identity", run: g9_identity },
    Check { id: "g9.axis-spectrum", suite: Suite::GriessAbstract, provenance: "derived", claim: "ad(e^{0,0}) has eigenvalues 2, 0, 1/16 with multiplicities 1, 4, 4", expected: "2:1 0:4 1/2:0 1/16:4", run: g9_spectrum },
    Check { id: "g9.a-central-charges", suite: Suite::GriessAbstract, provenance: "stated", claim: "a¹, …, a⁴ have central charge 21/22", expected: "21/22 21/22 21/22 21/22", run: g9_a_charges },
    Check { id: "g9.a-products", suite: Suite::GriessAbstract, provenance: "stated", claim: "aⁱ·aʲ = (1/33)(2aⁱ + 2aʲ − aᵏ − aˡ)", expected: "6 of 6 hold", run: g9_a_products },
    Check { id: "g9.b1-central-charge", suite: Suite::GriessAbstract, provenance: "stated", claim: "b¹ has central charge 28/11", expected: "28/11", run: g9_b1 },
    Check { id: "g9.frame", suite: Suite::GriessAbstract, provenance: "stated", claim: "e^{0,0}, a¹, b¹ are orthogonal and sum to ω", expected: "orthogonal, sum is omega, c = 1/2 + 21/22 + 28/11 = 4", run: g9_frame },
    Check { id: "g9.weight.a2-minus-a3", suite: Suite::GriessAbstract, provenance: "stated", claim: "a² − a³ is a highest weight vector", expected: "(0, 1/11, 21/11)", run: weight_a2_a3 },
    Check { id: "g9.weight.row-zero", suite: Suite::GriessAbstract, provenance: "stated", claim: "e^{0,1} − e^{0,2} is a highest weight vector", expected: "(1/16, 31/16, 0)", run: weight_row0 },
    Check { id: "g9.weight.rows", suite: Suite::GriessAbstract, provenance: "stated", claim: "the difference of the row sums for i = 1, 2 is a highest weight vector", expected: "(1/16, 21/176, 20/11)", run: weight_rows },
    Check { id: "g9.weight.diagonals", suite: Suite::GriessAbstract, provenance: "stated", claim: "(e^{1,1} − e^{2,2}) − (e^{1,2} − e^{2,1}) is a highest weight vector", expected: "(1/16, 5/176, 21/11)", run: weight_diagonals },
    Check { id: "g9.group-order", suite: Suite::GriessAbstract, provenance: "stated", claim: "the τ-involutions generate a group of order 18", expected: "18", run: group_order },
    Check { id: "g9.group-shape", suite: Suite::GriessAbstract, provenance: "stated", claim: "the group has shape 3²:2 with nine conjugate involutions", expected: "O3 of order 9 normal, 9 involutions, class size 9, nine-generator closure equal", run: group_shape },
    Check { id: "g9.g-h", suite: Suite::GriessAbstract, provenance: "stated", claim: "g = τ₀₀τ₁₀ and h = τ₀₀τ₀₁ commute and have order 3", expected: "gh = hg, |g| = 3, |h| = 3", run: group_g_h },
    // central charges
    Check { id: "cc.sl9-level-3", suite: Suite::CentralCharges, provenance: "derived", claim: "sl₉ at level 3 has c = 20, leaving 4 = c(ω)", expected: "c = 20, 24 - c = 4", run: cc_sl9 },
    Check { id: "cc.sl3-level-9-parafermion", suite: Suite::CentralCharges, provenance: "derived", claim: "the sl₃ level 9 parafermion algebra has c = 6 − 2 = 4", expected: "4", run: cc_sl3 },
    Check { id: "cc.e8-level-3-commutant", suite: Suite::CentralCharges, provenance: "stated", claim: "24 − c(E8, level 3) = 16/11", expected: "16/11", run: cc_e8 },
    Check { id: "cc.parafermion-vector", suite: Suite::CentralCharges, provenance: "stated", claim: "ω_α is a Virasoro vector of central charge 16/11", expected: "16/11", run: cc_parafermion_vector },
];

/// Every registered check in dependency order.
pub fn registry() -> &'static [Check] {
    REGISTRY
}
