//! Characteristic not 2: `gl(V)` under the symplectic and orthogonal
//! algebras.

use crate::error::Result;
use crate::field::Field;
use crate::forms::BilForm;
use crate::liealg::{
    self_adjoint_module, skew_adjoint_algebra, to_matrices, trace_of_product,
    trace_orthogonal_complement, MatLieAlg,
};
use crate::matrix::Mat;
use crate::repmod::module::lower_in;
use crate::repmod::{
    certify_chain, certify_irreducible, composition_series, simplicity, submodule_lattice,
    verify_intertwining, Certificate, LieModule, TensorSquare,
};
use crate::subspace::Subspace;

use super::common::*;
use super::report::{dims, Report, EXACT};
use super::Ctx;

/// `gl = ⊕ parts`, pairwise orthogonal for `tr(xy)`.
fn orthogonal_decomposition<F: Field>(parts: &[&Subspace<F>]) -> Result<bool> {
    let Some(first) = parts.first() else {
        return Ok(false);
    };
    let f = first.field();
    let total: usize = parts.iter().map(|p| p.dim()).sum();
    let mut sum = Subspace::zero(f, first.ambient());
    for p in parts {
        sum = sum.sum(p)?;
    }
    if total != first.ambient() || !sum.is_full() {
        return Ok(false);
    }
    let mats: Vec<Vec<Mat<F>>> = parts.iter().map(|p| to_matrices(p)).collect();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            for x in &mats[i] {
                for y in &mats[j] {
                    if !f.is_zero(&trace_of_product(x, y)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Certifies every factor of `chain`, recording one claim per factor.
fn record_factors<F: Field>(
    r: &mut Report,
    module: &LieModule<F>,
    chain: &[Subspace<F>],
    expected: &[bool],
    paper_ref: &str,
    cx: &Ctx<F>,
    k: usize,
) {
    let light = module.lightweight();
    for (i, w) in chain.windows(2).enumerate() {
        let label = format!("factor {} of the predicted chain (dim {}) irreducible", i + 1, w[1].dim() - w[0].dim());
        let cert = light
            .subquotient(&w[0], &w[1])
            .and_then(|q| certify_irreducible(&q, &cx.opts(k)));
        record_cert(r, &label, paper_ref, expected[i], &cert);
    }
}

/// Shared checks on `M(f)`, `L(f)` and `Γ`.
struct Common<F: Field> {
    l: MatLieAlg<F>,
    m_space: Subspace<F>,
    m0: Subspace<F>,
    s: Subspace<F>,
    module: LieModule<F>,
}

fn common_claims<F: Field>(
    cx: &mut Ctx<F>,
    r: &mut Report,
    gram: &Mat<F>,
    part: &str,
) -> Result<Common<F>> {
    let f = cx.f.clone();
    let m = gram.rows();
    let mm = m * m;
    let l = skew_adjoint_algebra(gram)?;
    let m_space = self_adjoint_module(gram)?;
    let gl = Subspace::full(&f, mm);
    let sl = MatLieAlg::sl(&f, m);
    let s = MatLieAlg::scalars(&f, m).space().clone();
    let m0 = m_space.intersect(sl.space())?;
    r.holds(
        "M(f) = L(f)^⊥ for tr(xy)",
        &format!("{part}(1)"),
        trace_orthogonal_complement(l.space(), &gl)? == m_space,
        EXACT,
    );
    r.holds(
        "gl(V) = L(f) ⊕ M(f)",
        &format!("{part}(1)"),
        l.space().intersect(&m_space)?.is_zero() && l.space().sum(&m_space)?.is_full(),
        EXACT,
    );
    r.holds("L(f) ⊆ sl(V)", &format!("{part}(5)"), sl.space().contains(l.space())?, EXACT);
    r.check(
        "dim M(f)/(M(f)∩sl(V))",
        &format!("{part}(6)"),
        1,
        m_space.dim() - m0.dim(),
        EXACT,
    );
    if !BilForm::classify(gram)?.char_divides(2 * m) {
        r.holds(
            "gl(V) = L ⊥ (M∩sl(V)) ⊥ s",
            "thm3.1",
            orthogonal_decomposition(&[l.space(), &m0, &s])?,
            EXACT,
        );
    }
    let module = gl_module(&l, &mut cx.rng)?;
    let top = module.subquotient(&m0, &m_space)?;
    r.holds("M(f)/(M(f)∩sl(V)) is trivial", &format!("{part}(6)"), top.is_trivial(), EXACT);
    let lm = module.restrict(l.space())?;
    let q = module.quotient(&m_space)?;
    let natural = Mat::from_fn(&f, q.dim(), lm.dim(), |i, j| {
        m_space.quotient_coordinates(l.space().basis_vec(j))[i].clone()
    });
    r.holds(
        "L(f) → gl(V)/M(f), x ↦ x + M(f), is a module isomorphism",
        &format!("{part}(5)"),
        natural.is_invertible() && verify_intertwining(&lm, &q, &natural),
        "natural map, verified",
    );
    Ok(Common {
        l,
        m_space,
        m0,
        s,
        module,
    })
}

pub(crate) fn thm13<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    if f.characteristic() == 2 {
        return Err(cx.hypothesis("needs characteristic not 2"));
    }
    let gram = cx.gram()?;
    let form = BilForm::classify(&gram)?;
    if !form.alternating || !form.nondegenerate {
        return Err(cx.hypothesis("the form must be nondegenerate and skew-symmetric"));
    }
    let m = gram.rows();
    let n = m / 2;
    let mm = m * m;
    let mut r = cx.report();
    let opts = cx.opts(m);
    let c = common_claims(cx, &mut r, &gram, "thm1.3")?;
    r.check("dim L(f)", "thm1.3(5)", binom(m + 1, 2), c.l.dim(), EXACT);
    r.check("dim M(f)", "thm1.3(1)", binom(m, 2), c.m_space.dim(), EXACT);
    let st = form.symplectic_basis()?.transform;
    r.holds(
        "M(f) = [[A,B],[C,A']] with B, C skew-symmetric in a symplectic basis",
        "thm1.3(1)",
        conjugate_space(&c.m_space, &st)? == block_form_space(&f, n, true, OffDiag::Alternating, false),
        EXACT,
    );
    r.holds(
        "M(f)∩sl(V): the same with tr A = 0",
        "thm1.3(2)",
        conjugate_space(&c.m0, &st)? == block_form_space(&f, n, true, OffDiag::Alternating, true),
        EXACT,
    );
    r.holds(
        "L(f) = [[A,B],[C,−A']] with B, C symmetric",
        "thm1.3(5)",
        conjugate_space(c.l.space(), &st)? == block_form_space(&f, n, false, OffDiag::Symmetric, false),
        EXACT,
    );
    let t = TensorSquare::new(&gram, &mut cx.rng)?;
    let omega = Subspace::kernel(&Mat::from_rows(&f, vec![t.omega.clone()]));
    r.holds("Γ is an L-module map V⊗V → gl(V)", "thm1.3(1)", gamma_equivariant(&t), EXACT);
    r.holds(
        "Γ(Λ²V) = M(f), injectively",
        "thm1.3(1)",
        t.gamma_image(&t.alt) == c.m_space && t.alt.dim() == c.m_space.dim(),
        EXACT,
    );
    r.holds(
        "Γ(S²V) = L(f), injectively",
        "thm1.3(5)",
        t.gamma_image(&t.sym) == *c.l.space() && t.sym.dim() == c.l.dim(),
        EXACT,
    );
    r.holds(
        "Γ(kernel of contraction on Λ²V) = M(f)∩sl(V)",
        "thm1.3(2)",
        t.gamma_image(&t.alt.intersect(&omega)?) == c.m0,
        EXACT,
    );
    record_cert(&mut r, "L(f) simple", "thm1.3(5)", true, &simplicity(&c.l, &opts));

    let div = form.char_divides(m);
    let zero = Subspace::zero(&f, mm);
    let full = Subspace::full(&f, mm);
    let (chain, want, nontrivial, part) = if m == 2 {
        (vec![zero, c.m_space.clone(), full], vec![1, 3], vec![3], "thm1.3(6)")
    } else if div {
        (
            vec![zero, c.s.clone(), c.m0.clone(), c.m_space.clone(), full],
            vec![1, binom(m, 2) - 2, 1, binom(m + 1, 2)],
            vec![binom(m, 2) - 2, binom(m + 1, 2)],
            "thm1.3(4),(6)",
        )
    } else {
        (
            vec![zero, c.m0.clone(), c.m_space.clone(), full],
            vec![binom(m, 2) - 1, 1, binom(m + 1, 2)],
            vec![binom(m, 2) - 1, binom(m + 1, 2)],
            "thm1.3(3),(6)",
        )
    };
    predicted_chain(cx, &mut r, &c.module, &chain, &want, part, &opts);
    r.ladder = chain.iter().map(|w| w.dim()).collect();
    if f.order().is_some() {
        let blind = composition_series(&c.module, &[], &opts);
        record_series(&mut r, "gl(V)", part, &blind, want.len(), &nontrivial);
    }
    Ok(r)
}

fn predicted_chain<F: Field>(
    _cx: &Ctx<F>,
    r: &mut Report,
    module: &LieModule<F>,
    chain: &[Subspace<F>],
    want: &[usize],
    part: &str,
    opts: &crate::repmod::CertifyOptions,
) {
    match certify_chain(module, chain, opts) {
        Ok(c) => {
            r.check("predicted chain: factor dims", part, dims(want), dims(&c.factor_dims), EXACT);
            let methods: Vec<String> = c.methods.iter().map(|m| m.to_string()).collect();
            r.holds(
                "predicted chain: every factor certified irreducible",
                part,
                c.is_certified(),
                &methods.join("; "),
            );
        }
        Err(e) => r.error("predicted chain", part, e),
    }
}

fn sqrt_minus_one<F: Field>(f: &F) -> Option<F::Elem> {
    f.sqrt(&f.neg(&f.one()))
}

pub(crate) fn thm14<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    if f.characteristic() == 2 {
        return Err(cx.hypothesis("needs characteristic not 2"));
    }
    let gram = cx.gram()?;
    let form = BilForm::classify(&gram)?;
    if !form.symmetric || !form.nondegenerate {
        return Err(cx.hypothesis("the form must be nondegenerate and symmetric"));
    }
    let m = gram.rows();
    if m < 2 {
        return Err(cx.hypothesis("needs m ≥ 2"));
    }
    let mm = m * m;
    let mut r = cx.report();
    let opts = cx.opts(m);
    let c = common_claims(cx, &mut r, &gram, "thm1.4")?;
    r.check("dim L(f)", "thm1.4(5)", binom(m, 2), c.l.dim(), EXACT);
    r.check("dim M(f)", "thm1.4(1)", binom(m + 1, 2), c.m_space.dim(), EXACT);
    let cong = form.diagonalize_symmetric()?;
    let d: Vec<F::Elem> = (0..m).map(|i| cong.normal_form[(i, i)].clone()).collect();
    let st = &cong.transform;
    r.holds(
        "f has a diagonal Gram matrix D in some basis",
        "thm1.4(1)",
        cong.normal_form == Mat::diagonal(&f, &d),
        EXACT,
    );
    r.holds(
        "M(f) = {A : d_i A_ij = d_j A_ji} in that basis",
        "thm1.4(1)",
        conjugate_space(&c.m_space, st)? == diag_form_space(&f, &d, true, false, false),
        EXACT,
    );
    r.holds(
        "M(f)∩sl(V) = {A : d_i A_ij = d_j A_ji, tr A = 0}",
        "thm1.4(2)",
        conjugate_space(&c.m0, st)? == diag_form_space(&f, &d, true, false, true),
        EXACT,
    );
    r.holds(
        "L(f) = {A : d_i A_ij = −d_j A_ji, A_ii = 0}",
        "thm1.4(5)",
        conjugate_space(c.l.space(), st)? == diag_form_space(&f, &d, false, true, false),
        EXACT,
    );
    let t = TensorSquare::new(&gram, &mut cx.rng)?;
    let omega = Subspace::kernel(&Mat::from_rows(&f, vec![t.omega.clone()]));
    r.holds("Γ is an L-module map V⊗V → gl(V)", "thm1.4(1)", gamma_equivariant(&t), EXACT);
    r.holds(
        "Γ(S²V) = M(f), injectively",
        "thm1.4(1)",
        t.gamma_image(&t.sym) == c.m_space && t.sym.dim() == c.m_space.dim(),
        EXACT,
    );
    r.holds(
        "Γ(Λ²V) = L(f), injectively",
        "thm1.4(5)",
        t.gamma_image(&t.alt) == *c.l.space() && t.alt.dim() == c.l.dim(),
        EXACT,
    );
    r.holds(
        "Γ(kernel of contraction on S²V) = M(f)∩sl(V)",
        "thm1.4(2)",
        t.gamma_image(&t.sym.intersect(&omega)?) == c.m0,
        EXACT,
    );

    let div = form.char_divides(m);
    let square = form.discriminant_is_square()?;
    let zero = Subspace::zero(&f, mm);
    let full = Subspace::full(&f, mm);
    if m == 3 || m >= 5 {
        record_cert(&mut r, "L(f) simple", "thm1.4(5)", true, &simplicity(&c.l, &opts));
    } else if m == 4 {
        let cert = simplicity(&c.l, &opts);
        record_cert(&mut r, "L(f) simple iff disc f ∉ F²", "note9.1", !square, &cert);
        if let Ok(Certificate::Reducible(w)) = &cert {
            let rows: Vec<_> = w.basis_vecs().iter().map(|v| c.l.space().combine(v)).collect();
            let i = MatLieAlg::new(m, Subspace::span(&f, mm, &rows), "I")?;
            let j = centralizer(&c.l, &i)?;
            r.holds(
                "L(f) = I ⊕ J with I, J ideals of dimension 3",
                "note9.1",
                i.dim() == 3
                    && j.dim() == 3
                    && i.is_ideal_of(&c.l)
                    && j.is_ideal_of(&c.l)
                    && i.space().intersect(j.space())?.is_zero(),
                EXACT,
            );
            record_cert(&mut r, "I simple", "note9.1", true, &simplicity(&i, &opts));
            record_cert(&mut r, "J simple", "note9.1", true, &simplicity(&j, &opts));
        }
    } else {
        r.check("dim L(f)", "note9.4", 1, c.l.dim(), EXACT);
    }

    if m >= 4 {
        let split_top = m == 4 && square;
        let (chain, want, mut nontrivial, part) = if div {
            (
                vec![zero, c.s.clone(), c.m0.clone(), c.m_space.clone(), full],
                vec![1, binom(m + 1, 2) - 2, 1, binom(m, 2)],
                vec![binom(m + 1, 2) - 2],
                "thm1.4(4),(6)",
            )
        } else {
            (
                vec![zero, c.m0.clone(), c.m_space.clone(), full],
                vec![binom(m + 1, 2) - 1, 1, binom(m, 2)],
                vec![binom(m + 1, 2) - 1],
                "thm1.4(3),(6)",
            )
        };
        let light = c.module.lightweight();
        let irr_label = if div {
            "(M(f)∩sl(V))/s irreducible"
        } else {
            "M(f)∩sl(V) irreducible"
        };
        let lower = if div { &c.s } else { &chain[0] };
        let irr = light
            .subquotient(lower, &c.m0)
            .and_then(|q| certify_irreducible(&q, &opts));
        record_cert(&mut r, irr_label, part, true, &irr);
        let mut expected = vec![true; want.len()];
        *expected.last_mut().expect("nonempty") = !split_top;
        record_factors(&mut r, &c.module, &chain, &expected, &format!("{part}, note9.1"), cx, m);
        r.check("predicted chain: factor dims", part, dims(&want), dims(&chain_dims(&chain)), EXACT);
        r.ladder = chain.iter().map(|w| w.dim()).collect();
        if split_top {
            nontrivial.extend([3, 3]);
        } else {
            nontrivial.push(binom(m, 2));
        }
        let count = want.len() + usize::from(split_top);
        if f.order().is_some() {
            let blind = composition_series(&c.module, &[], &opts);
            record_series(&mut r, "gl(V)", part, &blind, count, &nontrivial);
        }
    } else {
        small_cases(cx, &mut r, &gram, &c)?;
    }
    Ok(r)
}

fn chain_dims<F: Field>(chain: &[Subspace<F>]) -> Vec<usize> {
    chain.windows(2).map(|w| w[1].dim() - w[0].dim()).collect()
}

/// `m = 2, 3` for the identity form.
fn small_cases<F: Field>(
    cx: &mut Ctx<F>,
    r: &mut Report,
    gram: &Mat<F>,
    c: &Common<F>,
) -> Result<()> {
    let f = cx.f.clone();
    let m = gram.rows();
    let mm = m * m;
    let opts = cx.opts(m);
    let ell = f.characteristic();
    let i = sqrt_minus_one(&f);
    let zero = Subspace::zero(&f, mm);
    let full = Subspace::full(&f, mm);
    let finite = f.order().is_some();
    let m0_mod = c.module.restrict(&c.m0)?;
    let identity = *gram == Mat::identity(&f, m);
    // L, s and M/M0 are trivial or 3-dimensional; the rest lives in M0
    let (mut count, mut nontrivial) = if m == 2 { (2, vec![]) } else { (1, vec![3]) };
    let note = if m == 3 { "note9.2" } else { "note9.3" };
    if m == 3 && ell != 3 {
        record_cert(r, "M⁰ irreducible", note, true, &certify_irreducible(&m0_mod, &opts));
        count += 2;
        nontrivial.push(5);
    } else if m == 3 {
        let sub_s = lower_in(&c.m0, &c.s);
        match (&i, identity) {
            (None, _) => {
                let q = m0_mod.quotient(&sub_s)?;
                record_cert(r, "M⁰/s irreducible", note, true, &certify_irreducible(&q, &opts));
                count += 3;
                nontrivial.push(4);
            }
            (Some(i), true) => {
                let x = note92_space(&f, i, false);
                let y = note92_space(&f, i, true);
                let want = vec![
                    Subspace::zero(&f, c.m0.dim()),
                    sub_s.clone(),
                    lower_in(&c.m0, &x),
                    lower_in(&c.m0, &y),
                    Subspace::full(&f, c.m0.dim()),
                ];
                lattice_claim(r, &m0_mod, want, "submodules of M⁰ are 0, s, X, Y, M⁰", note, cx.cfg.budget);
                r.holds("X ∩ Y = s", note, x.intersect(&y)? == c.s, EXACT);
                count += 4;
                nontrivial.extend([2, 2]);
            }
            (Some(_), false) => return Ok(()),
        }
    } else {
        match (&i, identity) {
            (None, _) => {
                record_cert(r, "M⁰ irreducible", note, true, &certify_irreducible(&m0_mod, &opts));
                count += 1;
                nontrivial.push(2);
            }
            (Some(i), true) => {
                let x = Mat::from_fn(&f, 2, 2, |a, b| match (a, b) {
                    (0, 0) => f.one(),
                    (1, 1) => f.neg(&f.one()),
                    _ => i.clone(),
                });
                let y = x.neg().add(&Mat::from_fn(&f, 2, 2, |a, b| {
                    if a == b {
                        f.zero()
                    } else {
                        f.add(i, i)
                    }
                }));
                let line = |v: &Mat<F>| lower_in(&c.m0, &Subspace::span(&f, mm, &[v.vec()]));
                let want = vec![
                    Subspace::zero(&f, c.m0.dim()),
                    line(&x),
                    line(&y),
                    Subspace::full(&f, c.m0.dim()),
                ];
                lattice_claim(r, &m0_mod, want, "submodules of M⁰ are 0, Fx, Fy, M⁰", note, cx.cfg.budget);
                count += 2;
                nontrivial.extend([1, 1]);
            }
            (Some(_), false) => return Ok(()),
        }
    }
    if finite {
        let blind = composition_series(&c.module, &[], &opts);
        record_series(r, "gl(V)", note, &blind, count, &nontrivial);
    } else {
        let chain = vec![zero, c.m0.clone(), c.m_space.clone(), full];
        let want = chain_dims(&chain);
        predicted_chain(cx, r, &c.module, &chain, &want, note, &opts);
    }
    Ok(())
}

/// `X` (or `Y` when `swap`) spanned by `I₃` and two displayed matrices.
fn note92_space<F: Field>(f: &F, i: &F::Elem, swap: bool) -> Subspace<F> {
    let one = f.one();
    let m1 = f.neg(&one);
    let z = f.zero();
    let (a, b) = if swap { (m1.clone(), one.clone()) } else { (one.clone(), m1.clone()) };
    let p = Mat::from_rows(
        f,
        vec![
            vec![z.clone(), z.clone(), z.clone()],
            vec![z.clone(), a, i.clone()],
            vec![z.clone(), i.clone(), b],
        ],
    );
    let c = if swap { one.clone() } else { m1.clone() };
    let q = Mat::from_rows(
        f,
        vec![
            vec![z.clone(), i.clone(), c.clone()],
            vec![i.clone(), z.clone(), z.clone()],
            vec![c, z.clone(), z.clone()],
        ],
    );
    Subspace::span(f, 9, &[Mat::identity(f, 3).vec(), p.vec(), q.vec()])
}

fn lattice_claim<F: Field>(
    r: &mut Report,
    module: &LieModule<F>,
    mut want: Vec<Subspace<F>>,
    label: &str,
    note: &str,
    budget: u64,
) {
    match submodule_lattice(module, budget) {
        Ok(mut got) => {
            let key = |s: &Subspace<F>| (s.dim(), format!("{:?}", s.basis()));
            got.sort_by_key(key);
            want.sort_by_key(key);
            want.dedup();
            r.holds(label, note, got == want, "exhaustive submodule lattice");
        }
        Err(e) => r.error(label, note, e),
    }
}
