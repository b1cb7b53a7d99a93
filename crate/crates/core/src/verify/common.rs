//! Helpers shared by the case runners.

use rand::Rng;

use crate::error::Result;
use crate::field::Field;
use crate::liealg::{matrices_span, to_matrices, MatLieAlg, StructureConstants};
use crate::matrix::Mat;
use crate::repmod::tensor::tensor_action;
use crate::repmod::{
    adjoint_module, find_isomorphism, verify_intertwining, Certificate, CompSeries, IsoSearch,
    LieModule, Method, TensorSquare,
};

use super::report::{dims, Claim, Report};
use crate::subspace::{EchelonBuilder, Subspace};

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `{S⁻¹XS : X ∈ space}`.
pub fn conjugate_space<F: Field>(space: &Subspace<F>, s: &Mat<F>) -> Result<Subspace<F>> {
    let f = space.field();
    let sinv = s.inverse()?;
    let mats: Vec<Mat<F>> = to_matrices(space)
        .iter()
        .map(|x| sinv.mul(x).mul(s))
        .collect();
    Ok(matrices_span(f, s.rows(), &mats))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffDiag {
    Symmetric,
    Alternating,
}

fn off_diag_basis<F: Field>(f: &F, n: usize, kind: OffDiag) -> Vec<Mat<F>> {
    let mut out = Vec::new();
    for i in 0..n {
        if kind == OffDiag::Symmetric {
            out.push(Mat::unit(f, n, i, i));
        }
        for j in i + 1..n {
            let u = Mat::unit(f, n, i, j);
            let v = Mat::unit(f, n, j, i);
            out.push(match kind {
                OffDiag::Symmetric => u.add(&v),
                OffDiag::Alternating => u.sub(&v),
            });
        }
    }
    out
}

pub fn block_matrix<F: Field>(f: &F, n: usize, blocks: [Option<&Mat<F>>; 4]) -> Mat<F> {
    let mut x = Mat::zeros(f, 2 * n, 2 * n);
    for (k, b) in blocks.iter().enumerate() {
        if let Some(b) = b {
            let (r0, c0) = ((k / 2) * n, (k % 2) * n);
            for i in 0..n {
                for j in 0..n {
                    x[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
        }
    }
    x
}

/// Matrices `[[A, B], [C, ±A']]` with `B, C` of the given kind, optionally
/// with `tr A = 0`.
pub fn block_form_space<F: Field>(
    f: &F,
    n: usize,
    plus: bool,
    off: OffDiag,
    traceless_a: bool,
) -> Subspace<F> {
    let mut gens = Vec::new();
    let mut a_basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if traceless_a && i == j {
                if i + 1 < n {
                    a_basis.push(Mat::unit(f, n, i, i).sub(&Mat::unit(f, n, n - 1, n - 1)));
                }
            } else {
                a_basis.push(Mat::unit(f, n, i, j));
            }
        }
    }
    for a in &a_basis {
        let d = if plus { a.transpose() } else { a.transpose().neg() };
        gens.push(block_matrix(f, n, [Some(a), None, None, Some(&d)]));
    }
    for b in off_diag_basis(f, n, off) {
        gens.push(block_matrix(f, n, [None, Some(&b), None, None]));
        gens.push(block_matrix(f, n, [None, None, Some(&b), None]));
    }
    matrices_span(f, 2 * n, &gens)
}

/// Matrices with `d_i X_ij = ±d_j X_ji` for `i < j`, optionally with zero
/// diagonal or zero trace.
pub fn diag_form_space<F: Field>(
    f: &F,
    d: &[F::Elem],
    plus: bool,
    zero_diag: bool,
    traceless: bool,
) -> Subspace<F> {
    let m = d.len();
    let idx = |i: usize, j: usize| j * m + i;
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut r = vec![f.zero(); m * m];
            r[idx(i, j)] = d[i].clone();
            r[idx(j, i)] = if plus { f.neg(&d[j]) } else { d[j].clone() };
            rows.push(r);
        }
        if zero_diag {
            let mut r = vec![f.zero(); m * m];
            r[idx(i, i)] = f.one();
            rows.push(r);
        }
    }
    if traceless {
        let mut r = vec![f.zero(); m * m];
        for i in 0..m {
            r[idx(i, i)] = f.one();
        }
        rows.push(r);
    }
    Subspace::kernel(&Mat::from_rows_with_cols(f, rows, m * m))
}

/// Terms strictly between `lower ⊂ upper`, adding one random vector at a
/// time.
pub fn random_refinement<F: Field, R: Rng + ?Sized>(
    lower: &Subspace<F>,
    upper: &Subspace<F>,
    rng: &mut R,
) -> Vec<Subspace<F>> {
    let f = upper.field();
    let mut b = EchelonBuilder::from_subspace(lower);
    let mut out = Vec::new();
    while b.dim() + 1 < upper.dim() {
        let c: Vec<F::Elem> = (0..upper.dim()).map(|_| f.random(rng)).collect();
        if b.insert(&upper.combine(&c)).is_some() {
            out.push(b.to_subspace());
        }
    }
    out
}

/// Whether `images` (in the order `u₁..u_n, v₁..v_n, z`) induce an
/// isomorphism `h(n) → L/I`.
pub fn heisenberg_images<F: Field>(
    l: &MatLieAlg<F>,
    ideal: Option<&MatLieAlg<F>>,
    images: &[Mat<F>],
) -> Result<bool> {
    let f = l.field();
    if images.len() % 2 == 0 {
        return Ok(false);
    }
    let n = images.len() / 2;
    let h = StructureConstants::heisenberg(f, n)?;
    let (target, proj) = match ideal {
        Some(i) => StructureConstants::quotient_with_projection(l, i)?,
        None => (
            StructureConstants::of_algebra(l),
            Mat::identity(f, l.dim()),
        ),
    };
    let mut map = Mat::zeros(f, target.dim(), images.len());
    for (j, x) in images.iter().enumerate() {
        let Some(c) = l.coordinates(x) else {
            return Ok(false);
        };
        for (i, v) in proj.apply(&c).into_iter().enumerate() {
            map[(i, j)] = v;
        }
    }
    Ok(map.is_square() && h.is_isomorphism(&target, &map))
}

/// `{x ∈ L : [x, I] = 0}`.
pub fn centralizer<F: Field>(l: &MatLieAlg<F>, i: &MatLieAlg<F>) -> Result<MatLieAlg<F>> {
    let f = l.field();
    let lb = l.basis_matrices();
    let ib = i.basis_matrices();
    let mm = l.m() * l.m();
    let mut sys = Mat::zeros(f, ib.len() * mm, lb.len());
    for (r0, y) in ib.iter().enumerate() {
        for (k, x) in lb.iter().enumerate() {
            for (r, v) in x.bracket(y).vec().into_iter().enumerate() {
                sys[(r0 * mm + r, k)] = v;
            }
        }
    }
    let k = sys.kernel_basis();
    let rows: Vec<_> = (0..k.rows()).map(|r| l.space().combine(k.row(r))).collect();
    MatLieAlg::new(l.m(), Subspace::span(f, mm, &rows), "C(I)")
}

/// Coordinates of `target` in the (not necessarily echelon) list `basis`.
pub fn solve_in<F: Field>(basis: &[Mat<F>], target: &Mat<F>) -> Option<Vec<F::Elem>> {
    let f = target.field();
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(|b| b.vec()).collect();
    let n = target.rows() * target.cols();
    let mut sys = Mat::zeros(f, n, cols.len() + 1);
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            sys[(i, j)] = v.clone();
        }
    }
    for (i, v) in target.vec().into_iter().enumerate() {
        sys[(i, cols.len())] = f.neg(&v);
    }
    let k = sys.kernel_basis();
    (0..k.rows()).find_map(|r| {
        let row = k.row(r);
        let last = &row[cols.len()];
        let inv = f.inv(last)?;
        Some(row[..cols.len()].iter().map(|x| f.mul(x, &inv)).collect())
    })
}

/// `Some(method)` for an irreducible certificate, otherwise `None` and a
/// description.
pub fn cert_summary<F: Field>(c: &Certificate<F>) -> (Option<Method>, String) {
    match c {
        Certificate::Irreducible(m) => (Some(m.clone()), m.to_string()),
        Certificate::Reducible(s) => (None, format!("invariant subspace of dim {}", s.dim())),
        Certificate::BudgetExceeded { needed, budget } => (
            None,
            format!("budget exceeded: need {needed} lines, budget {budget}"),
        ),
        Certificate::Inconclusive(r) => (None, format!("inconclusive: {r}")),
    }
}

/// Whether `sym` is congruent to the identity: a diagonal normal form
/// whose entries are all squares.
pub fn congruent_to_identity<F: Field>(sym: &Mat<F>) -> Result<bool> {
    let b = crate::forms::BilForm::classify(sym)?;
    if !b.nondegenerate {
        return Ok(false);
    }
    let c = b.diagonalize_symmetric()?;
    let f = sym.field();
    Ok((0..sym.rows()).all(|i| f.is_square(&c.normal_form[(i, i)])))
}

/// Records an irreducibility certificate; only `Irreducible` and
/// `Reducible` count as decided.
pub fn record_cert<F: Field>(
    r: &mut Report,
    label: &str,
    paper_ref: &str,
    expected: bool,
    cert: &Result<Certificate<F>>,
) -> bool {
    let (computed, method) = match cert {
        Ok(Certificate::Irreducible(m)) => ("true".to_string(), m.to_string()),
        Ok(Certificate::Reducible(s)) => (
            "false".to_string(),
            format!("invariant subspace of dim {}", s.dim()),
        ),
        Ok(other) => ("undecided".to_string(), cert_summary(other).1),
        Err(e) => ("undecided".to_string(), format!("error: {e}")),
    };
    let pass = computed == expected.to_string();
    r.push(Claim {
        label: label.into(),
        paper_ref: paper_ref.into(),
        expected: expected.to_string(),
        computed,
        pass,
        method,
    });
    pass
}

/// Records the shape of a composition series.
pub fn record_series<F: Field>(
    r: &mut Report,
    what: &str,
    paper_ref: &str,
    series: &Result<CompSeries<F>>,
    factors: usize,
    nontrivial: &[usize],
) {
    match series {
        Ok(s) => {
            let method = if s.is_certified() {
                "composition series, all factors certified".to_string()
            } else {
                "composition series with uncertified factors".to_string()
            };
            r.check(&format!("{what}: factor count"), paper_ref, factors, s.len(), &method);
            let mut got = s.nontrivial_dims();
            got.sort_unstable();
            let mut want = nontrivial.to_vec();
            want.sort_unstable();
            r.check(
                &format!("{what}: nontrivial factor dims"),
                paper_ref,
                dims(&want),
                dims(&got),
                &method,
            );
            r.check(
                &format!("{what}: trivial factors"),
                paper_ref,
                factors - nontrivial.len(),
                s.trivial_count(),
                &method,
            );
            r.holds(&format!("{what}: every factor certified"), paper_ref, s.is_certified(), &method);
        }
        Err(e) => r.error(what, paper_ref, e),
    }
}

/// Records an isomorphism search.
pub fn record_iso<F: Field>(
    r: &mut Report,
    label: &str,
    paper_ref: &str,
    m1: &LieModule<F>,
    m2: &LieModule<F>,
    seed: u64,
) -> bool {
    match find_isomorphism(m1, m2, seed) {
        Ok(IsoSearch::Isomorphic(t)) => r.holds(
            label,
            paper_ref,
            verify_intertwining(m1, m2, &t) && t.is_invertible(),
            "standard-basis isomorphism, verified",
        ),
        Ok(IsoSearch::NotIsomorphic) => r.holds(label, paper_ref, false, "standard-basis search"),
        Ok(IsoSearch::Undecided) => r.holds(label, paper_ref, false, "search undecided"),
        Err(e) => {
            r.error(label, paper_ref, e);
            false
        }
    }
}

/// `gl(m)` as an `L`-module.
pub fn gl_module<F: Field, R: Rng + ?Sized>(l: &MatLieAlg<F>, rng: &mut R) -> Result<LieModule<F>> {
    let f = l.field();
    adjoint_module(l, &Subspace::full(f, l.m() * l.m()), rng)
}

/// `Γ∘(x on V⊗V) = ad x∘Γ` for every basis element `x` of `L(f)`.
pub fn gamma_equivariant<F: Field>(t: &TensorSquare<F>) -> bool {
    let f = t.field();
    let id = Mat::identity(f, t.m());
    t.algebra.basis_matrices().iter().all(|x| {
        let ad = id.kron(x).sub(&x.transpose().kron(&id));
        t.gamma.mul(&tensor_action(x)) == ad.mul(&t.gamma)
    })
}

/// The length of the derived series term, counting a perfect tail.
pub fn derived_dim<F: Field>(ds: &[MatLieAlg<F>], k: usize) -> usize {
    ds.get(k).or(ds.last()).map(|a| a.dim()).unwrap_or(0)
}
