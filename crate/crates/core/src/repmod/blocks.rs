//! The off-diagonal blocks of `gl(r+n)` as modules for `gl(r)⊕gl(n)` and,
//! when `r = n`, for `gl(n)` embedded by `a ↦ a ⊕ −a'`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::liealg::{alternating_matrices, symmetric_matrices, MatLieAlg};
use crate::matrix::Mat;
use crate::subspace::Subspace;

use super::hom::verify_intertwining;
use super::module::LieModule;

/// Basis of `gl(r)⊕gl(n)`: the `e_ij` of `gl(r)` then those of `gl(n)`.
fn pair_basis<F: Field>(f: &F, r: usize, n: usize) -> Vec<(Mat<F>, Mat<F>)> {
    let mut out = Vec::new();
    for j in 0..r {
        for i in 0..r {
            out.push((Mat::unit(f, r, i, j), Mat::zeros(f, n, n)));
        }
    }
    for j in 0..n {
        for i in 0..n {
            out.push((Mat::zeros(f, r, r), Mat::unit(f, n, i, j)));
        }
    }
    out
}

fn labels(r: usize, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for j in 0..r {
        for i in 0..r {
            out.push(format!("a{}{}", i + 1, j + 1));
        }
    }
    for j in 0..n {
        for i in 0..n {
            out.push(format!("b{}{}", i + 1, j + 1));
        }
    }
    out
}

/// `Z = M_{r×n}` with `(a+b)·s = as − sb`.
pub fn z_pair_module<F: Field>(f: &F, r: usize, n: usize) -> Result<LieModule<F>> {
    let acts = pair_basis(f, r, n)
        .iter()
        .map(|(a, b)| {
            // vec(as) = (I⊗a) vec s, vec(sb) = (b'⊗I) vec s
            Mat::identity(f, n)
                .kron(a)
                .sub(&b.transpose().kron(&Mat::identity(f, r)))
        })
        .collect();
    LieModule::new(f, r * n, labels(r, n), acts)
}

/// `A = M_{n×r}` with `(a+b)·t = bt − ta`.
pub fn a_pair_module<F: Field>(f: &F, r: usize, n: usize) -> Result<LieModule<F>> {
    let acts = pair_basis(f, r, n)
        .iter()
        .map(|(a, b)| {
            Mat::identity(f, r)
                .kron(b)
                .sub(&a.transpose().kron(&Mat::identity(f, n)))
        })
        .collect();
    LieModule::new(f, r * n, labels(r, n), acts)
}

/// `φ: A → Z*`, `φ_t(s) = tr(ts)`, in vec coordinates of `A` and the dual
/// basis of `Z`.
pub fn phi_matrix<F: Field>(f: &F, r: usize, n: usize) -> Mat<F> {
    // s is r×n at j*r+i, t is n×r at l*n+k; tr(ts) = Σ t_ki s_ik
    let mut p = Mat::zeros(f, r * n, r * n);
    for i in 0..r {
        for k in 0..n {
            p[(k * r + i, i * n + k)] = f.one();
        }
    }
    p
}

/// `φ` is a bijective module map `A → Z*`.
pub fn block_duality_check<F: Field>(f: &F, r: usize, n: usize) -> Result<bool> {
    let z = z_pair_module(f, r, n)?;
    let a = a_pair_module(f, r, n)?;
    let p = phi_matrix(f, r, n);
    Ok(p.is_invertible() && verify_intertwining(&a, &z.dual(), &p))
}

/// Which block of `gl(2n)` under `a ↦ a ⊕ −a'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// `Z = gl(n)`, `a·s = as + sa'`.
    Z,
    /// `A = gl(n)`, `a·t = −a't − ta`.
    A,
    S,
    T,
    B,
    C,
}

impl Block {
    fn is_upper(self) -> bool {
        matches!(self, Block::Z | Block::S | Block::T)
    }
}

/// Action of `a` on the upper or lower block, on vec coordinates.
pub fn block_action<F: Field>(a: &Mat<F>, upper: bool) -> Mat<F> {
    let f = a.field();
    let id = Mat::identity(f, a.rows());
    if upper {
        id.kron(a).add(&a.kron(&id))
    } else {
        let at = a.transpose();
        id.kron(&at).add(&at.kron(&id)).neg()
    }
}

pub fn block_subspace<F: Field>(f: &F, n: usize, which: Block) -> Subspace<F> {
    match which {
        Block::Z | Block::A => Subspace::full(f, n * n),
        Block::S | Block::B => symmetric_matrices(f, n),
        Block::T | Block::C => alternating_matrices(f, n),
    }
}

/// The block as a module for a subalgebra `l ⊆ gl(n)`.
pub fn block_module<F: Field, R: Rng + ?Sized>(
    l: &MatLieAlg<F>,
    which: Block,
    rng: &mut R,
) -> Result<LieModule<F>> {
    let f = l.field();
    let n = l.m();
    let space = block_subspace(f, n, which);
    let upper = which.is_upper();
    let restrict = |x: &Mat<F>| space.restrict(&block_action(x, upper));
    let basis = l.basis_matrices();
    let acts = basis.iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let spin = l
        .lie_generators(rng)
        .iter()
        .map(restrict)
        .collect::<Result<Vec<_>>>()?;
    let labels = (1..=basis.len()).map(|i| format!("{}[{i}]", l.label())).collect();
    LieModule::new(f, space.dim(), labels, acts)?.with_spin_actions(spin)
}

/// The involution `s ↦ s*` on alternating 4×4 matrices.
pub fn star_map<F: Field>(s: &Mat<F>) -> Result<Mat<F>> {
    if s.rows() != 4 || s.cols() != 4 || !s.is_alternating() {
        return Err(Error::Invalid("star map needs an alternating 4x4 matrix".into()));
    }
    let f = s.field();
    let (a, b, c) = (s[(0, 1)].clone(), s[(0, 2)].clone(), s[(0, 3)].clone());
    let (d, e, g) = (s[(1, 2)].clone(), s[(1, 3)].clone(), s[(2, 3)].clone());
    let upper = [
        ((0, 1), g),
        ((0, 2), f.neg(&e)),
        ((0, 3), d),
        ((1, 2), c),
        ((1, 3), f.neg(&b)),
        ((2, 3), a),
    ];
    let mut out = Mat::zeros(f, 4, 4);
    for ((i, j), v) in upper {
        out[(j, i)] = f.neg(&v);
        out[(i, j)] = v;
    }
    Ok(out)
}

/// Matrix of the star map from `T` to `C` in the RREF coordinates of the
/// alternating matrices.
pub fn star_matrix<F: Field>(f: &F) -> Result<Mat<F>> {
    let t = alternating_matrices(f, 4);
    let mut out = Mat::zeros(f, t.dim(), t.dim());
    for j in 0..t.dim() {
        let s = Mat::unvec_square(f, t.basis_vec(j));
        let img = star_map(&s)?.vec();
        let c = t.coordinates(&img).expect("alternating");
        for (i, v) in c.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

/// Gram matrix of `g(s,t) = tr(s*t)` on the alternating 4×4 matrices.
pub fn star_form_gram<F: Field>(f: &F) -> Result<Mat<F>> {
    let t = alternating_matrices(f, 4);
    let mats: Vec<Mat<F>> = (0..t.dim())
        .map(|i| Mat::unvec_square(f, t.basis_vec(i)))
        .collect();
    let stars = mats.iter().map(star_map).collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_fn(f, 6, 6, |i, j| stars[i].mul(&mats[j]).trace()))
}
