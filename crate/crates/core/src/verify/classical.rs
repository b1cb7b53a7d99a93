//! `sl(m)` inside `gl(m)`, the embeddings `sp(2n) → so(2n²−n−1)` and
//! `sl(4) → so(6)`, and the off-diagonal blocks of `gl(2n)`.

use crate::error::Result;
use crate::field::Field;
use crate::forms::BilForm;
use crate::liealg::{
    alternating_matrices, matrices_span, self_adjoint_module, skew_adjoint_algebra, to_matrices,
    trace_form_gram, trace_of_product, MatLieAlg,
};
use crate::matrix::Mat;
use crate::repmod::blocks::{block_action, block_subspace, star_form_gram, star_matrix};
use crate::repmod::hom::HOM_LIMIT;
use crate::repmod::{
    adjoint_module, block_duality_check, block_module, certify_chain, certify_irreducible,
    composition_series, cyclic_hom_space, hom_space, quotient_simplicity, simplicity, verify_intertwining, weights,
    Block, LieModule,
};
use crate::subspace::Subspace;

use super::common::*;
use super::report::{dims, Report, EXACT};
use super::Ctx;

pub(crate) fn sl_series<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    let m = cx.spec.m;
    let ell = f.characteristic() as usize;
    if m < 2 {
        return Err(cx.hypothesis("needs m ≥ 2"));
    }
    if m == 2 && ell == 2 {
        return Err(cx.hypothesis("(m, ℓ) = (2, 2) is excluded"));
    }
    let mm = m * m;
    let mut r = cx.report();
    let opts = cx.opts(m);
    let sl = MatLieAlg::sl(&f, m);
    let gl = MatLieAlg::gl(&f, m);
    let s = MatLieAlg::scalars(&f, m);
    let module = gl_module(&sl, &mut cx.rng)?;
    let div = ell != 0 && m % ell == 0;
    r.holds("sl(m) = [gl(m), gl(m)]", "thm4.1", gl.derived().space() == sl.space(), EXACT);
    let (chain, want) = if div {
        r.holds(
            "s = Z(gl(m)) ∩ sl(m)",
            "thm4.1",
            gl.center().intersect(&sl)?.space() == s.space(),
            EXACT,
        );
        (
            vec![
                Subspace::zero(&f, mm),
                s.space().clone(),
                sl.space().clone(),
                Subspace::full(&f, mm),
            ],
            vec![1, mm - 2, 1],
        )
    } else {
        r.holds("gl(m) = sl(m) ⊕ s", "thm4.1", !sl.space().contains(s.space())?, EXACT);
        (
            vec![
                Subspace::zero(&f, mm),
                sl.space().clone(),
                Subspace::full(&f, mm),
            ],
            vec![mm - 1, 1],
        )
    };
    match certify_chain(&module, &chain, &opts) {
        Ok(c) => {
            r.check("predicted chain: factor dims", "thm4.1", dims(&want), dims(&c.factor_dims), EXACT);
            let methods: Vec<String> = c.methods.iter().map(|m| m.to_string()).collect();
            r.holds(
                "predicted chain: every factor certified irreducible",
                "thm4.1",
                c.is_certified(),
                &methods.join("; "),
            );
        }
        Err(e) => r.error("predicted chain", "thm4.1", e),
    }
    r.ladder = chain.iter().map(|w| w.dim()).collect();
    if f.order().is_some() {
        let nontrivial = [mm - 1 - usize::from(div)];
        let blind = composition_series(&module, &[], &opts);
        record_series(&mut r, "gl(m)", "thm4.1", &blind, want.len(), &nontrivial);
    }
    if div {
        record_cert(&mut r, &format!("sl({m})/s simple"), "thm4.1", true, &quotient_simplicity(&sl, &s, &opts));
        record_cert(&mut r, &format!("sl({m}) simple"), "thm4.1", false, &simplicity(&sl, &opts));
        let top = module.subquotient(&chain[1], &chain[2])?;
        let inner = module.restrict(&chain[2])?;
        let (h, how) = if top.dim() * inner.dim() <= HOM_LIMIT {
            (hom_space(&top, &inner), "module homomorphism space")
        } else {
            (cyclic_hom_space(&top, &inner), "homomorphisms from a cyclic vector")
        };
        match h {
            Ok(h) => r.holds(
                "Hom(sl/s, sl) = 0, so s is the only proper nonzero ideal",
                "thm4.1",
                h.is_zero(),
                how,
            ),
            Err(e) => {
                r.error("Hom(sl/s, sl) = 0", "thm4.1", e);
                false
            }
        };
    } else {
        record_cert(&mut r, &format!("sl({m}) simple"), "thm4.1", true, &simplicity(&sl, &opts));
    }
    Ok(r)
}

/// Gram matrix, faithfulness and image checks for a representation given
/// by its basis actions on a space carrying the invariant form `gram`.
fn orthogonal_image<F: Field>(
    r: &mut Report,
    module: &LieModule<F>,
    gram: &Mat<F>,
    dim_l: usize,
    onto: Option<bool>,
    paper_ref: &str,
) -> Result<()> {
    let f = gram.field();
    let d = gram.rows();
    let form = BilForm::classify(gram)?;
    r.holds(
        "G symmetric, nondegenerate, not alternating",
        paper_ref,
        form.symmetric && form.nondegenerate && !form.alternating,
        EXACT,
    );
    r.holds(
        "the form is invariant: ρ(x)'G + Gρ(x) = 0",
        paper_ref,
        module
            .actions()
            .iter()
            .all(|a| a.transpose().mul(gram).add(&gram.mul(a)).is_zero()),
        EXACT,
    );
    r.holds("the representation is faithful", paper_ref, module.representation_kernel().is_zero(), EXACT);
    let image = matrices_span(f, d, module.actions());
    r.check("dim ρ(L)", paper_ref, dim_l, image.dim(), EXACT);
    let lg = skew_adjoint_algebra(gram)?;
    r.check("dim L(G)", paper_ref, binom(d, 2), lg.dim(), EXACT);
    r.holds("ρ(L) ⊆ L(G)", paper_ref, lg.space().contains(&image)?, EXACT);
    if let Some(onto) = onto {
        r.check("ρ(L) = L(G)", paper_ref, onto, image == *lg.space(), EXACT);
    }
    if form.nondegenerate && congruent_to_identity(gram)? {
        r.holds("G is congruent to the identity, so L(G) ≅ so(d)", paper_ref, true, "diagonalization with square entries");
    }
    Ok(())
}

pub(crate) fn sp_so<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    let gram = cx.gram()?;
    let form = BilForm::classify(&gram)?;
    let m = gram.rows();
    let n = m / 2;
    if f.characteristic() == 2 || form.char_divides(m) {
        return Err(cx.hypothesis("needs ℓ ∤ 2n"));
    }
    if n < 2 {
        return Err(cx.hypothesis("needs n ≥ 2"));
    }
    if !form.alternating || !form.nondegenerate {
        return Err(cx.hypothesis("the form must be nondegenerate and skew-symmetric"));
    }
    let mut r = cx.report();
    let l = skew_adjoint_algebra(&gram)?;
    let sl = MatLieAlg::sl(&f, m);
    let s = MatLieAlg::scalars(&f, m);
    let m0 = self_adjoint_module(&gram)?.intersect(sl.space())?;
    let d = 2 * n * n - n - 1;
    r.check("dim M∩sl(2n)", "thm3.1", d, m0.dim(), EXACT);
    let mut total = Subspace::zero(&f, m * m);
    for part in [l.space(), &m0, s.space()] {
        total = total.sum(part)?;
    }
    let orth = [l.space(), &m0, s.space()].iter().enumerate().all(|(i, a)| {
        [l.space(), &m0, s.space()].iter().skip(i + 1).all(|b| {
            to_matrices(a)
                .iter()
                .all(|x| to_matrices(b).iter().all(|y| f.is_zero(&trace_of_product(x, y))))
        })
    });
    r.holds(
        "gl(2n) = L ⊥ (M∩sl) ⊥ s",
        "thm3.1",
        total.is_full() && l.dim() + d + 1 == m * m && orth,
        EXACT,
    );
    let module = adjoint_module(&l, &m0, &mut cx.rng)?;
    let g = trace_form_gram(&f, &to_matrices(&m0));
    let onto = (n == 2).then_some(true);
    orthogonal_image(&mut r, &module, &g, l.dim(), onto, "thm3.1")?;
    let opts = cx.opts(m);
    record_cert(&mut r, "M∩sl(2n) irreducible", "thm1.3(3)", true, &certify_irreducible(&module, &opts));
    r.ladder = vec![0, d];
    Ok(r)
}

pub(crate) fn sl4_so6<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    if f.characteristic() == 2 {
        return Err(cx.hypothesis("needs characteristic not 2"));
    }
    let mut r = cx.report();
    let sl4 = MatLieAlg::sl(&f, 4);
    let t = block_module(&sl4, Block::T, &mut cx.rng)?;
    let c = block_module(&sl4, Block::C, &mut cx.rng)?;
    let h = star_matrix(&f)?;
    r.holds("s ↦ s* is an sl(4)-isomorphism T → C", "thm5.3", h.is_invertible() && verify_intertwining(&t, &c, &h), EXACT);
    match hom_space(&t, &c) {
        Ok(hs) => r.holds("the star map lies in Hom(T, C)", "thm5.3", hs.contains_vec(&h.vec()), "module homomorphism space"),
        Err(e) => {
            r.error("the star map lies in Hom(T, C)", "thm5.3", e);
            false
        }
    };
    let g = star_form_gram(&f)?;
    r.holds("g(s,t) = tr(s*t) is symmetric", "thm5.3", g.is_symmetric(), EXACT);
    r.holds(
        "s ↦ φ_{s*} is an isomorphism T → T*",
        "thm5.3",
        g.is_invertible() && verify_intertwining(&t, &t.dual(), &g),
        EXACT,
    );
    orthogonal_image(&mut r, &t, &g, 15, Some(true), "thm5.3")?;
    let sl3 = MatLieAlg::sl(&f, 3);
    let t3 = block_module(&sl3, Block::T, &mut cx.rng)?;
    match hom_space(&t3, &t3.dual()) {
        Ok(hs) => r.check("dim Hom_sl(3)(T, T*)", "thm5.4", 0, hs.dim(), "module homomorphism space"),
        Err(e) => {
            r.error("dim Hom_sl(3)(T, T*)", "thm5.4", e);
            false
        }
    };
    Ok(r)
}

/// `tr(x y)` pairing between two spaces of `n×n` matrices.
fn pairing<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Mat<F> {
    let f = a.field();
    let am = to_matrices(a);
    let bm = to_matrices(b);
    Mat::from_fn(f, bm.len(), am.len(), |i, j| trace_of_product(&am[j], &bm[i]))
}

/// `ε` weights of `T` (or of `C` when `negate`) on `h_k = e_kk − e_{k+1,k+1}`.
fn expected_weights<F: Field>(f: &F, n: usize, negate: bool) -> Vec<(Vec<F::Elem>, usize)> {
    let mut out: Vec<(Vec<F::Elem>, usize)> = Vec::new();
    let eps = |i: usize, k: usize| i64::from(i == k) - i64::from(i == k + 1);
    for i in 0..n {
        for j in i + 1..n {
            let w: Vec<F::Elem> = (0..n - 1)
                .map(|k| {
                    let v = eps(i, k) + eps(j, k);
                    f.from_i64(if negate { -v } else { v })
                })
                .collect();
            match out.iter_mut().find(|(v, _)| *v == w) {
                Some(e) => e.1 += 1,
                None => out.push((w, 1)),
            }
        }
    }
    out
}

fn weight_claim<F: Field>(r: &mut Report, f: &F, n: usize, upper: bool) -> Result<()> {
    let space = block_subspace(f, n, Block::T);
    let h: Vec<Mat<F>> = (0..n - 1)
        .map(|k| {
            let hk = Mat::unit(f, n, k, k).sub(&Mat::unit(f, n, k + 1, k + 1));
            space.restrict(&block_action(&hk, upper))
        })
        .collect::<Result<_>>()?;
    let labels: Vec<String> = (1..n).map(|k| format!("h{k}")).collect();
    let table = weights(f, space.dim(), &labels, &h)?;
    let want = expected_weights(f, n, !upper);
    let ok = table.total_dim() == space.dim()
        && table.weights.len() == want.len()
        && want
            .iter()
            .all(|(v, k)| table.find(v).map(|w| w.multiplicity()) == Some(*k));
    let (label, which) = if upper {
        ("weights of T are ε_i + ε_j, i < j", "T")
    } else {
        ("weights of C are −(ε_p + ε_q), p < q", "C")
    };
    r.holds(label, "thm5.4", ok, &format!("joint eigenspaces on {which}"));
    Ok(())
}

pub(crate) fn blocks<F: Field>(cx: &mut Ctx<F>) -> Result<Report> {
    let f = cx.f.clone();
    let n = cx.spec.m;
    if n < 2 {
        return Err(cx.hypothesis("needs n ≥ 2"));
    }
    let odd = f.characteristic() != 2;
    let mut r = cx.report();
    let opts = cx.opts(n);
    let sl = MatLieAlg::sl(&f, n);
    r.holds("φ: A → Z* is a gl(r)⊕gl(n)-isomorphism, r = n", "thm5.1", block_duality_check(&f, n, n)?, EXACT);
    r.holds(
        "φ: A → Z* is a gl(r)⊕gl(n)-isomorphism, r = n+1",
        "thm5.1",
        block_duality_check(&f, n + 1, n)?,
        EXACT,
    );
    let t = block_module(&sl, Block::T, &mut cx.rng)?;
    let c = block_module(&sl, Block::C, &mut cx.rng)?;
    if n == 2 {
        r.check("dim T", "thm5.5", 1, t.dim(), EXACT);
        r.holds("T is the trivial sl(2)-module", "thm5.5", t.is_trivial(), EXACT);
    }
    record_cert(&mut r, "T irreducible", "thm5.5", true, &certify_irreducible(&t, &opts));
    record_cert(&mut r, "C irreducible", "thm5.5", true, &certify_irreducible(&c, &opts));
    if odd {
        let alt = alternating_matrices(&f, n);
        let p_ct = pairing(&alt, &alt);
        r.holds(
            "φ restricts to an isomorphism C → T*",
            "prop5.2",
            p_ct.is_invertible() && verify_intertwining(&c, &t.dual(), &p_ct),
            EXACT,
        );
        let s = block_module(&sl, Block::S, &mut cx.rng)?;
        let b = block_module(&sl, Block::B, &mut cx.rng)?;
        record_cert(&mut r, "S irreducible", "thm5.6", true, &certify_irreducible(&s, &opts));
        record_cert(&mut r, "B irreducible", "thm5.6", true, &certify_irreducible(&b, &opts));
        let sym = block_subspace(&f, n, Block::S);
        let p_bs = pairing(&sym, &sym);
        r.holds(
            "φ restricts to an isomorphism B → S*",
            "prop5.2",
            p_bs.is_invertible() && verify_intertwining(&b, &s.dual(), &p_bs),
            EXACT,
        );
        r.holds(
            "φ(B) annihilates T and φ(C) annihilates S",
            "prop5.2",
            pairing(&sym, &alt).is_zero() && pairing(&alt, &sym).is_zero(),
            EXACT,
        );
    }
    if n >= 3 && odd {
        match hom_space(&t, &t.dual()) {
            Ok(h) => r.check(
                "T is self-dual",
                if n == 4 { "thm5.3" } else { "thm5.4" },
                n == 4,
                !h.is_zero(),
                "module homomorphism space",
            ),
            Err(e) => {
                r.error("T is self-dual", "thm5.4", e);
                false
            }
        };
        weight_claim(&mut r, &f, n, true)?;
        weight_claim(&mut r, &f, n, false)?;
    }
    r.ladder = vec![0, t.dim()];
    Ok(r)
}
