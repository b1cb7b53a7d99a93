//! Characteristic 2: the symplectic and orthogonal cases and the
//! Heisenberg modules.

use crate::error::Result;
use crate::field::Field;
use crate::forms::{standard_symplectic, BilForm};
use crate::liealg::{bracket_span, skew_adjoint_algebra, MatLieAlg};
use crate::matrix::Mat;
use crate::repmod::heisenberg::{heisenberg_poly_module, monomial_index};
use crate::repmod::module::lower_in;
use crate::repmod::{
    certify_chain, certify_irreducible, composition_series, hom_space, quotient_simplicity,
    simplicity, submodule_lattice, LieModule, TensorSquare,
};
use crate::subspace::Subspace;

use super::common::*;
use super::report::{dims, Report, EXACT};
use super::Ctx;

fn unit<F: Field>(f: &F, n: usize, i: usize, j: usize) -> Mat<F> {
    Mat::unit(f, n, i, j)
}

/// `S Y S⁻¹`.
fn back<F: Field>(s: &Mat<F>, y: &Mat<F>) -> Result<Mat<F>> {
    Ok(s.mul(y).mul(&s.inverse()?))
}

/// The printed representation matrices `R(a), R(b₁), R(b₂), R(c₁), R(c₂)`.
pub(crate) fn printed_r<F: Field>(f: &F) -> [Mat<F>; 5] {
    let sw = unit(f, 2, 0, 1).add(&unit(f, 2, 1, 0));
    let b = |blocks: [Option<&Mat<F>>; 4]| block_matrix(f, 2, blocks);
    [
        Mat::identity(f, 4),
        b([None, Some(&sw), None, None]),
        b([Some(&unit(f, 2, 1, 0)), None, None, Some(&unit(f, 2, 0, 1))]),
        b([None, None, Some(&sw), None]),
        b([Some(&unit(f, 2, 0, 1)), None, None, Some(&unit(f, 2, 1, 0))]),
    ]
}

/// The Heisenberg module for `n = 2`, `ℓ = 2`, `α = 1` in the basis
/// `X₂, 1, X₁, X₁X₂`, generators ordered `z, ∂₁, ∂₂, X₁, X₂`.
fn poly_matrices<F: Field>(m: &LieModule<F>) -> Vec<Mat<F>> {
    let idx = [
        monomial_index(&[0, 1], 2),
        monomial_index(&[0, 0], 2),
        monomial_index(&[1, 0], 2),
        monomial_index(&[1, 1], 2),
    ];
    let f = m.field();
    let a = m.actions();
    [4, 0, 1, 2, 3]
        .iter()
        .map(|&k| Mat::from_fn(f, 4, 4, |i, j| a[k][(idx[i], idx[j])].clone()))
        .collect()
}

pub(crate) fn thm11<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    if f.characteristic() != 2 {
        return Err(cx.hypothesis("needs characteristic 2"));
    }
    let gram = cx.gram()?;
    let form = BilForm::classify(&gram)?;
    if !form.alternating || !form.nondegenerate {
        return Err(cx.hypothesis("the form must be nondegenerate and alternating"));
    }
    let m = gram.rows();
    let n = m / 2;
    let mut r = cx.report();
    let opts = cx.opts(m);
    let l = skew_adjoint_algebra(&gram)?;
    let ds = l.derived_series();
    if m == 2 {
        return note_m2(cx, r, &l, &ds);
    }
    let four = m % 4 == 0;
    let mm = m * m;
    r.check("dim L", "thm1.1(3)", binom(m + 1, 2), l.dim(), EXACT);
    r.check("dim L⁽¹⁾", "thm1.1(4)", binom(m, 2), derived_dim(&ds, 1), EXACT);
    r.check("dim L⁽²⁾", "thm1.1(5)", binom(m, 2) - 1, derived_dim(&ds, 2), EXACT);
    let (l1, l2) = (ds[1].clone(), ds[2].clone());
    let s = MatLieAlg::scalars(&f, m);
    r.check(
        "s ⊆ L⁽²⁾",
        "thm1.1(1),(2)",
        four,
        l2.space().contains(s.space())?,
        EXACT,
    );

    let cong = form.symplectic_basis()?;
    let st = &cong.transform;
    let alt = OffDiag::Alternating;
    r.holds(
        "L = [[A,B],[C,A']] with B, C symmetric in a symplectic basis",
        "thm1.1(3)",
        conjugate_space(l.space(), st)? == block_form_space(&f, n, true, OffDiag::Symmetric, false),
        EXACT,
    );
    r.holds(
        "L⁽¹⁾ = [[A,B],[C,A']] with B, C alternating",
        "thm1.1(4)",
        conjugate_space(l1.space(), st)? == block_form_space(&f, n, true, alt, false),
        EXACT,
    );
    r.holds(
        "L⁽²⁾ = [[A,B],[C,A']] with B, C alternating and tr A = 0",
        "thm1.1(5)",
        conjugate_space(l2.space(), st)? == block_form_space(&f, n, true, alt, true),
        EXACT,
    );

    let t = TensorSquare::new(&gram, &mut cx.rng)?;
    r.holds("Γ is an L-module map V⊗V → gl(V)", "thm1.1(3)", gamma_equivariant(&t), EXACT);
    r.holds(
        "Γ(S²V) = L and Γ is injective on S²V",
        "thm1.1(3)",
        t.gamma_image(&t.sym) == *l.space() && t.sym.dim() == l.dim(),
        EXACT,
    );
    r.holds(
        "Γ(Λ²V) = L⁽¹⁾",
        "thm1.1(4)",
        t.gamma_image(&t.alt) == *l1.space() && t.alt.dim() == l1.dim(),
        EXACT,
    );
    r.holds(
        "Γ(ker of contraction Λ²V → F) = L⁽²⁾",
        "thm1.1(5)",
        t.gamma_image(&t.delta_kernel()?) == *l2.space(),
        EXACT,
    );

    // a, b_i, c_i in the symplectic basis
    let mut images = Vec::new();
    for i in 0..n {
        images.push(back(st, &block_matrix(&f, n, [None, Some(&unit(&f, n, i, i)), None, None]))?);
    }
    for i in 0..n {
        images.push(back(st, &block_matrix(&f, n, [None, None, Some(&unit(&f, n, i, i)), None]))?);
    }
    let e11 = unit(&f, n, 0, 0);
    images.push(back(st, &block_matrix(&f, n, [Some(&e11), None, None, Some(&e11)]))?);
    r.holds(
        "L/L⁽²⁾ ≅ h(n) via b_i, c_i, a",
        "thm1.1(6)",
        heisenberg_images(&l, Some(&l2), &images)?,
        EXACT,
    );

    let module = gl_module(&l, &mut cx.rng)?;
    let sl = MatLieAlg::sl(&f, m);
    let (count, nontrivial_dim) = if four {
        (m + 6, binom(m, 2) - 2)
    } else {
        (m + 4, binom(m, 2) - 1)
    };
    let part = if four { "thm1.1(1)" } else { "thm1.1(2)" };
    let blind = composition_series(&module, &[], &opts);
    record_series(&mut r, "gl(V)", part, &blind, count, &[nontrivial_dim, nontrivial_dim]);
    if let Ok(b) = &blind {
        r.ladder = b.dims();
    }

    // the predicted chain
    let x = back(
        st,
        &block_matrix(&f, n, [Some(&Mat::identity(&f, n)), None, None, None]),
    )?;
    let mut chain: Vec<Subspace<F>> = Vec::new();
    chain.push(Subspace::zero(&f, mm));
    if four {
        chain.push(s.space().clone());
    }
    chain.push(l2.space().clone());
    chain.push(l1.space().clone());
    chain.extend(random_refinement(l1.space(), l.space(), &mut cx.rng));
    chain.push(l.space().clone());
    let u = l.space().add_vectors(&[x.vec()]);
    if four {
        r.holds("x ∈ sl(V)", part, f.is_zero(&x.trace()), EXACT);
        let xl = bracket_span(&Subspace::span(&f, mm, &[x.vec()]), l.space());
        r.holds("[x, L] ⊆ L", part, l.space().contains(&xl)?, EXACT);
        chain.push(u.clone());
    }
    chain.push(sl.space().clone());
    chain.push(Subspace::full(&f, mm));
    let mut want = vec![1; count];
    want[if four { 1 } else { 0 }] = nontrivial_dim;
    want[count - 2] = nontrivial_dim;
    match certify_chain(&module, &chain, &opts) {
        Ok(c) => {
            r.check(
                "predicted chain with m−1 random insertions: factor dims",
                part,
                dims(&want),
                dims(&c.factor_dims),
                EXACT,
            );
            r.holds(
                "predicted chain: every factor certified irreducible",
                part,
                c.is_certified(),
                &c.methods.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; "),
            );
            let triv: Vec<bool> = want.iter().map(|&d| d != nontrivial_dim).collect();
            r.check(
                "predicted chain: trivial factors",
                part,
                format!("{triv:?}"),
                format!("{:?}", c.factor_trivial),
                EXACT,
            );
        }
        Err(e) => r.error("predicted chain", part, e),
    }
    let (lower, upper) = if four {
        (module.subquotient(s.space(), l2.space())?, module.subquotient(&u, sl.space())?)
    } else {
        (module.restrict(l2.space())?, module.subquotient(l.space(), sl.space())?)
    };
    record_iso(
        &mut r,
        if four { "L⁽²⁾/s ≅ sl(V)/U" } else { "L⁽²⁾ ≅ sl(V)/L" },
        part,
        &lower,
        &upper,
        cx.cfg.seed,
    );
    let simple = if four {
        quotient_simplicity(&l2, &s, &opts)
    } else {
        simplicity(&l2, &opts)
    };
    record_cert(
        &mut r,
        if four { "L⁽²⁾/s simple" } else { "L⁽²⁾ simple" },
        part,
        !four || m > 4,
        &simple,
    );
    if m == 4 {
        prop_m4(cx, &mut r, &l, &ds, &module, st)?;
    }
    Ok(r)
}

fn note_m2<F: Field>(
    cx: &mut Ctx<F>,
    mut r: Report,
    l: &MatLieAlg<F>,
    ds: &[MatLieAlg<F>],
) -> Result<Report> {
    let f = cx.f.clone();
    let got: Vec<usize> = (0..3).map(|k| derived_dim(ds, k)).collect();
    r.check("dims of L, L⁽¹⁾, L⁽²⁾", "note12.5", dims(&[3, 1, 0]), dims(&got), EXACT);
    let l1 = &ds[1];
    let lc = bracket_span(l.space(), l1.space());
    r.holds("nilpotent of class 2: [L, [L, L]] = 0", "note12.5", lc.is_zero() && !l1.space().is_zero(), EXACT);
    let module = gl_module(l, &mut cx.rng)?;
    let opts = cx.opts(2);
    let series = composition_series(&module, &[], &opts);
    record_series(&mut r, "gl(V)", "note12.5", &series, 4, &[]);
    let cong = BilForm::classify(&cx.gram()?)?.symplectic_basis()?;
    let st = &cong.transform;
    let imgs = [
        back(st, &unit(&f, 2, 0, 1))?,
        back(st, &unit(&f, 2, 1, 0))?,
        Mat::identity(&f, 2),
    ];
    r.holds("L ≅ h(1) via e12, e21, I", "note12.5", heisenberg_images(l, None, &imgs)?, EXACT);
    let poly = heisenberg_poly_module(&f, 1, 2, &f.one())?;
    let want = [unit(&f, 2, 0, 1), unit(&f, 2, 1, 0), Mat::identity(&f, 2)];
    r.holds(
        "natural module equals F[X]/(X²) with α = 1",
        "note12.5",
        poly.actions() == want,
        EXACT,
    );
    Ok(r)
}

fn prop_m4<F: Field>(
    cx: &mut Ctx<F>,
    r: &mut Report,
    l: &MatLieAlg<F>,
    ds: &[MatLieAlg<F>],
    module: &LieModule<F>,
    st: &Mat<F>,
) -> Result<()> {
    let f = cx.f.clone();
    let got: Vec<usize> = (0..5).map(|k| derived_dim(ds, k)).collect();
    r.check("derived series dims", "prop12.2", dims(&[10, 6, 5, 1, 0]), dims(&got), EXACT);
    let s = MatLieAlg::scalars(&f, 4);
    let l2 = &ds[2];
    r.holds("L⁽³⁾ = s", "prop12.2", ds.get(3).map(|a| a.space() == s.space()) == Some(true), EXACT);
    let sw = unit(&f, 2, 0, 1).add(&unit(&f, 2, 1, 0));
    let blk = |b: [Option<&Mat<F>>; 4]| back(st, &block_matrix(&f, 2, b));
    let x = blk([None, Some(&sw), None, None])?;
    let y = blk([None, None, Some(&sw), None])?;
    let e = blk([Some(&unit(&f, 2, 0, 1)), None, None, Some(&unit(&f, 2, 1, 0))])?;
    let fm = blk([Some(&unit(&f, 2, 1, 0)), None, None, Some(&unit(&f, 2, 0, 1))])?;
    let z = Mat::identity(&f, 4);
    r.holds(
        "L⁽²⁾ ≅ h(2) via x, e, y, f, z",
        "prop12.2",
        heisenberg_images(l2, None, &[x.clone(), e.clone(), y.clone(), fm.clone(), z.clone()])?,
        EXACT,
    );
    let opts = cx.opts(4);
    let u = module.subquotient(s.space(), l2.space())?;
    record_cert(r, "U = L⁽²⁾/L⁽³⁾ irreducible", "prop12.2", true, &certify_irreducible(&u, &opts));
    let kernel = u.representation_kernel();
    r.holds(
        "kernel of L → gl(U) is L⁽²⁾",
        "prop12.2",
        kernel == lower_in(l.space(), l2.space()),
        EXACT,
    );
    let basis = [e.clone(), x.clone(), fm.clone(), y.clone(), z.clone()];
    let coords = |g: &Mat<F>| -> Option<Vec<F::Elem>> { solve_in(&basis, g) };
    let mut g = Mat::zeros(&f, 4, 4);
    let mut ok = true;
    for i in 0..4 {
        for j in 0..4 {
            match coords(&basis[i].bracket(&basis[j])) {
                Some(c) if c[..4].iter().all(|v| f.is_zero(v)) => g[(i, j)] = c[4].clone(),
                _ => ok = false,
            }
        }
    }
    r.holds(
        "bracket form g on U has Gram matrix J in the basis e, x, f, y",
        "prop12.2",
        ok && g == standard_symplectic(&f, 4)?,
        EXACT,
    );
    let mut gens = Vec::new();
    let e11 = unit(&f, 2, 0, 0);
    gens.push(blk([Some(&e11), None, None, Some(&e11)])?);
    for i in 0..2 {
        gens.push(blk([None, Some(&unit(&f, 2, i, i)), None, None])?);
    }
    for i in 0..2 {
        gens.push(blk([None, None, Some(&unit(&f, 2, i, i)), None])?);
    }
    let mut reps = Vec::new();
    for a in &gens {
        let mut rm = Mat::zeros(&f, 4, 4);
        for j in 0..4 {
            match coords(&a.bracket(&basis[j])) {
                Some(c) => {
                    for i in 0..4 {
                        rm[(i, j)] = c[i].clone();
                    }
                }
                None => ok = false,
            }
        }
        reps.push(rm);
    }
    let printed = printed_r(&f);
    r.holds(
        "R(a), R(b₁), R(b₂), R(c₁), R(c₂) match the displayed matrices",
        "prop12.2",
        ok && reps == printed,
        EXACT,
    );
    let jm = standard_symplectic(&f, 4)?;
    let span = Subspace::span(&f, 16, &reps.iter().map(|m| m.vec()).collect::<Vec<_>>());
    r.holds(
        "R(L) is 5-dimensional inside L(g)",
        "prop12.2",
        span.dim() == 5 && reps.iter().all(|m| m.transpose().mul(&jm).add(&jm.mul(m)).is_zero()),
        EXACT,
    );
    let poly = heisenberg_poly_module(&f, 2, 2, &f.one())?;
    r.holds(
        "U ≅ F[X₁,X₂]/(X₁²,X₂²) with α = 1 in the basis X₂, 1, X₁, X₁X₂",
        "prop12.2",
        poly_matrices(&poly) == printed,
        EXACT,
    );
    record_cert(
        r,
        "L⁽²⁾/s simple as a Lie algebra",
        "thm1.1(1)",
        false,
        &quotient_simplicity(l2, &s, &opts),
    );
    Ok(())
}

pub(crate) fn thm12<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    if f.characteristic() != 2 {
        return Err(cx.hypothesis("needs characteristic 2"));
    }
    let gram = cx.gram()?;
    let form = BilForm::classify(&gram)?;
    if !form.symmetric || form.alternating || !form.nondegenerate {
        return Err(cx.hypothesis(
            "the form must be nondegenerate, symmetric and non-alternating",
        ));
    }
    let m = gram.rows();
    let mm = m * m;
    let mut r = cx.report();
    let opts = cx.opts(m);
    let l = skew_adjoint_algebra(&gram)?;
    let ds = l.derived_series();
    let l1 = ds
        .get(1)
        .cloned()
        .unwrap_or_else(|| l.clone());
    r.check("dim L", "thm1.2(2)", binom(m + 1, 2), l.dim(), EXACT);
    r.check("dim L⁽¹⁾", "thm1.2(3)", binom(m, 2), l1.dim(), EXACT);

    let cong = form.diagonalize_symmetric()?;
    let d: Vec<F::Elem> = (0..m).map(|i| cong.normal_form[(i, i)].clone()).collect();
    let diagonal = cong.normal_form == Mat::diagonal(&f, &d);
    r.holds("f has a diagonal Gram matrix in some basis", "thm1.2(2)", diagonal, EXACT);
    let lt = conjugate_space(l.space(), &cong.transform)?;
    r.holds(
        "L = {A : d_i A_ij = d_j A_ji} in that basis",
        "thm1.2(2)",
        lt == diag_form_space(&f, &d, true, false, false),
        EXACT,
    );
    r.holds(
        "L⁽¹⁾ = {A : A_ii = 0, d_i A_ij = d_j A_ji}",
        "thm1.2(3)",
        conjugate_space(l1.space(), &cong.transform)? == diag_form_space(&f, &d, true, true, false),
        EXACT,
    );
    let t = TensorSquare::new(&gram, &mut cx.rng)?;
    r.holds("Γ is an L-module map V⊗V → gl(V)", "thm1.2(2)", gamma_equivariant(&t), EXACT);
    r.holds(
        "Γ(S²V) = L and Γ is injective on S²V",
        "thm1.2(2)",
        t.gamma_image(&t.sym) == *l.space() && t.sym.dim() == l.dim(),
        EXACT,
    );
    r.holds(
        "Γ(Λ²V) = L⁽¹⁾",
        "thm1.2(3)",
        t.gamma_image(&t.alt) == *l1.space() && t.alt.dim() == l1.dim(),
        EXACT,
    );

    let module = gl_module(&l, &mut cx.rng)?;
    let nontrivial = vec![binom(m, 2); 2];
    let blind = composition_series(&module, &[], &opts);
    record_series(&mut r, "gl(V)", "thm1.2(1),(4)", &blind, m + 2, &nontrivial);
    if let Ok(b) = &blind {
        r.ladder = b.dims();
    }
    let mut chain = vec![Subspace::zero(&f, mm), l1.space().clone()];
    chain.extend(random_refinement(l1.space(), l.space(), &mut cx.rng));
    chain.push(l.space().clone());
    chain.push(Subspace::full(&f, mm));
    match certify_chain(&module, &chain, &opts) {
        Ok(c) => {
            let mut want = vec![1; m + 2];
            want[0] = binom(m, 2);
            want[m + 1] = binom(m, 2);
            r.check("predicted chain: factor dims", "thm1.2(1)", dims(&want), dims(&c.factor_dims), EXACT);
            r.holds("predicted chain: every factor certified", "thm1.2(1)", c.is_certified(), EXACT);
        }
        Err(e) => r.error("predicted chain", "thm1.2(1)", e),
    }
    let sub = module.restrict(l1.space())?;
    let quo = module.quotient(l.space())?;
    r.check(
        "L⁽¹⁾ is a trivial module",
        "thm1.2(4)",
        m == 2,
        sub.is_trivial(),
        EXACT,
    );
    if sub.dim() * quo.dim() <= crate::repmod::hom::HOM_LIMIT {
        match hom_space(&sub, &quo) {
            Ok(h) => {
                r.holds("Hom_L(L⁽¹⁾, gl(V)/L) ≠ 0", "thm1.2(4)", h.dim() > 0, EXACT);
            }
            Err(e) => r.error("Hom_L(L⁽¹⁾, gl(V)/L)", "thm1.2(4)", e),
        }
    }
    record_iso(&mut r, "gl(V)/L ≅ L⁽¹⁾", "thm1.2(4)", &sub, &quo, cx.cfg.seed);

    if m == 3 || m >= 5 {
        record_cert(&mut r, "L⁽¹⁾ simple", "thm1.2(1)", true, &simplicity(&l1, &opts));
    } else if m == 4 {
        let square = form.discriminant_is_square()?;
        record_cert(&mut r, "L⁽¹⁾ simple iff disc f ∉ F²", "prop10.2(2),(3)", !square, &simplicity(&l1, &opts));
        record_cert(
            &mut r,
            "L⁽¹⁾ irreducible L-module",
            "prop10.2(4)",
            true,
            &certify_irreducible(&sub, &opts),
        );
        if square && cong.normal_form == Mat::identity(&f, 4) {
            semidirect_m4(cx, &mut r, &l, &l1, &cong.transform)?;
        }
    } else {
        let got: Vec<usize> = (0..3).map(|k| derived_dim(&ds, k)).collect();
        r.check("dims of L, L⁽¹⁾, L⁽²⁾", "thm1.2(4)", dims(&[3, 1, 0]), dims(&got), EXACT);
    }
    Ok(r)
}

/// `L⁽¹⁾ = S ⋉ R` for the identity form on `F⁴`.
fn semidirect_m4<F: Field>(
    cx: &mut Ctx<F>,
    r: &mut Report,
    l: &MatLieAlg<F>,
    l1: &MatLieAlg<F>,
    s: &Mat<F>,
) -> Result<()> {
    let f = cx.f.clone();
    let sym = |i: usize, j: usize| -> Result<Mat<F>> {
        back(s, &unit(&f, 4, i, j).add(&unit(&f, 4, j, i)))
    };
    let fs = [sym(0, 1)?, sym(1, 2)?, sym(0, 2)?];
    let hs = [sym(2, 3)?, sym(0, 3)?, sym(3, 1)?];
    let gs: Vec<Mat<F>> = fs.iter().zip(&hs).map(|(a, b)| a.add(b)).collect();
    let sa = MatLieAlg::from_matrices(&f, 4, &fs, "S")?;
    let ra = MatLieAlg::from_matrices(&f, 4, &gs, "R")?;
    let opts = cx.opts(4);
    r.holds("S is a subalgebra and L⁽¹⁾ = S ⊕ R", "prop10.2(3)",
        sa.is_closed() && sa.sum(&ra)?.space() == l1.space() && sa.dim() + ra.dim() == 6, EXACT);
    r.holds("R is an abelian ideal of L⁽¹⁾", "prop10.2(3)",
        ra.is_ideal_of(l1) && bracket_span(ra.space(), ra.space()).is_zero(), EXACT);
    record_cert(r, "S simple", "prop10.2(3)", true, &simplicity(&sa, &opts));
    let l1_mod = crate::repmod::adjoint_module(&sa, l1.space(), &mut cx.rng)?;
    let r_in = lower_in(l1.space(), ra.space());
    let r_mod = l1_mod.restrict(&r_in)?;
    record_cert(r, "R irreducible S-module", "prop10.2(3)", true, &certify_irreducible(&r_mod, &opts));
    // the adjoint module of S with the same generator list
    let s_adj = l1_mod.quotient(&r_in)?;
    record_iso(r, "R ≅ adjoint module of S", "prop10.2(3)", &r_mod, &s_adj, cx.cfg.seed);
    let l1_adj = crate::repmod::adjoint_module(l1, l1.space(), &mut cx.rng)?;
    match submodule_lattice(&l1_adj, cx.cfg.budget) {
        Ok(lat) => {
            let proper: Vec<&Subspace<F>> =
                lat.iter().filter(|w| !w.is_zero() && !w.is_full()).collect();
            r.holds(
                "R is the only nonzero proper ideal of L⁽¹⁾",
                "prop10.2(3)",
                proper.len() == 1 && *proper[0] == lower_in(l1.space(), ra.space()),
                "exhaustive submodule lattice",
            );
        }
        Err(e) => r.error("ideals of L⁽¹⁾", "prop10.2(3)", e),
    }
    let e11 = back(s, &unit(&f, 4, 0, 0))?;
    let b = e11.bracket(&gs[0]);
    r.holds("[e11, g1] = f1 ∉ R", "prop10.2(4)", b == fs[0] && !ra.contains(&b) && l.contains(&e11), EXACT);
    Ok(())
}

pub(crate) fn heisenberg<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    let ell = f.characteristic() as usize;
    if ell == 0 || f.order() != Some(ell as u64) {
        return Err(cx.hypothesis("needs a prime field GF(ℓ)"));
    }
    let n = cx.spec.m;
    if n == 0 || ell.pow(n as u32) > 4096 {
        return Err(cx.hypothesis("needs n ≥ 1 and ℓⁿ ≤ 4096"));
    }
    let mut r = cx.report();
    let h = crate::liealg::StructureConstants::heisenberg(&f, n)?;
    let table: Vec<Vec<Vec<F::Elem>>> = (0..2 * n + 1)
        .map(|i| (0..2 * n + 1).map(|j| h.bracket_basis(i, j).to_vec()).collect())
        .collect();
    let opts = cx.opts(1);
    for k in 1..ell as u64 {
        let alpha = f.element(k);
        let a = f.format(&alpha);
        let module = heisenberg_poly_module(&f, n, ell, &alpha)?;
        r.check(&format!("α = {a}: dimension"), "prop12.3", ell.pow(n as u32), module.dim(), EXACT);
        r.holds(
            &format!("α = {a}: brackets of h(n) respected"),
            "prop12.3",
            module.respects_brackets(&table),
            EXACT,
        );
        r.holds(
            &format!("α = {a}: faithful"),
            "prop12.3",
            module.representation_kernel().is_zero(),
            EXACT,
        );
        record_cert(
            &mut r,
            &format!("α = {a}: irreducible"),
            "prop12.3",
            true,
            &certify_irreducible(&module, &opts),
        );
        if ell == 2 && n == 2 {
            r.holds(
                "∂₁, ∂₂, X₁, X₂ in the basis X₂, 1, X₁, X₁X₂ equal R(b₁), R(b₂), R(c₁), R(c₂)",
                "prop12.2",
                poly_matrices(&module) == printed_r(&f),
                EXACT,
            );
        }
    }
    if ell == 2 && n == 1 {
        // [e, f] = h and h is central in characteristic 2
        let sl2 = MatLieAlg::sl(&f, 2);
        let imgs = [
            unit(&f, 2, 0, 1),
            unit(&f, 2, 1, 0),
            unit(&f, 2, 0, 0).sub(&unit(&f, 2, 1, 1)),
        ];
        r.holds("h(1) ≅ sl(2)", "note12.4", heisenberg_images(&sl2, None, &imgs)?, EXACT);
    }
    if ell == 2 && n == 2 {
        let j = standard_symplectic(&f, 4)?;
        let l = skew_adjoint_algebra(&j)?;
        let ds = l.derived_series();
        let module = gl_module(&l, &mut cx.rng)?;
        let id = Mat::identity(&f, 4);
        prop_m4(cx, &mut r, &l, &ds, &module, &id)?;
    }
    Ok(r)
}
