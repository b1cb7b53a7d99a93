//! Module homomorphisms and isomorphism search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::Subspace;

use super::irreducible::{line_count, line_representative, small_irreducibles};
use super::module::LieModule;
use super::spin::{replay, standard_basis};

/// Largest `N₁·N₂` accepted by [`hom_space`].
pub const HOM_LIMIT: usize = 4096;

fn check_generators<F: Field>(m1: &LieModule<F>, m2: &LieModule<F>) -> Result<()> {
    if m1.num_generators() != m2.num_generators() {
        return Err(Error::Invalid(format!(
            "generator mismatch: {} vs {} actions",
            m1.num_generators(),
            m2.num_generators()
        )));
    }
    Ok(())
}

/// All `T: M₁ → M₂` (as `N₂×N₁` matrices, vectorized column-major) with
/// `T·ρ₁(x) = ρ₂(x)·T` for every listed generator.
pub fn hom_space<F: Field>(m1: &LieModule<F>, m2: &LieModule<F>) -> Result<Subspace<F>> {
    check_generators(m1, m2)?;
    let f = m1.field();
    let (n1, n2) = (m1.dim(), m2.dim());
    let big = n1 * n2;
    if big > HOM_LIMIT {
        return Err(Error::Budget {
            needed: big as u128,
            budget: HOM_LIMIT as u64,
        });
    }
    // kernel of the stacked system, one generator at a time
    let mut basis: Vec<Mat<F>> = (0..n2)
        .flat_map(|i| (0..n1).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut t = Mat::zeros(f, n2, n1);
            t[(i, j)] = f.one();
            t
        })
        .collect();
    for (a1, a2) in m1.actions().iter().zip(m2.actions()) {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<F::Elem>> = basis
            .iter()
            .map(|t| t.mul(a1).sub(&a2.mul(t)).vec())
            .collect();
        let sys = Mat::from_rows_with_cols(f, images, big).transpose();
        let ker = sys.kernel_basis();
        basis = (0..ker.rows())
            .map(|r| {
                let mut t = Mat::zeros(f, n2, n1);
                for (c, b) in ker.row(r).iter().zip(&basis) {
                    if !f.is_zero(c) {
                        t.add_scaled_assign(b, c);
                    }
                }
                t
            })
            .collect();
    }
    let vecs: Vec<_> = basis.iter().map(|t| t.vec()).collect();
    Ok(Subspace::span(f, big, &vecs))
}

/// `Hom_L(M₁, M₂)` for cyclic `M₁`, in the vectorized form of
/// [`hom_space`]. A map is fixed by the image `w` of a cyclic vector, so the
/// unknowns are the `N₂` coordinates of `w` and the size limit does not
/// apply. Both modules must list spin actions for the same Lie elements,
/// as subquotients of one module do; every result is re-checked against
/// the full action lists.
pub fn cyclic_hom_space<F: Field>(m1: &LieModule<F>, m2: &LieModule<F>) -> Result<Subspace<F>> {
    check_generators(m1, m2)?;
    let f = m1.field();
    let (n1, n2) = (m1.dim(), m2.dim());
    let (a1, a2) = (m1.spin_actions(), m2.spin_actions());
    if a1.len() != a2.len() {
        return Err(Error::Invalid("spin action lists differ".into()));
    }
    if n1 == 0 || n2 == 0 {
        return Ok(Subspace::zero(f, n1 * n2));
    }
    let id = Mat::identity(f, n1);
    let sb = (0..n1)
        .map(|i| standard_basis(f, n1, a1, id.row(i)))
        .find(|sb| sb.vectors.len() == n1)
        .ok_or_else(|| Error::Invalid("module is not cyclic on a basis vector".into()))?;
    let binv = basis_matrix(f, n1, &sb.vectors).inverse()?;
    // candidate images of the cyclic vector, with their replayed images
    let mut seeds: Vec<Vec<F::Elem>> = Mat::identity(f, n2).row_vecs();
    let mut imgs: Vec<Vec<Vec<F::Elem>>> = seeds.iter().map(|w| replay(&sb, a2, w)).collect();
    'relations: for k in 0..n1 {
        for (x1, x2) in a1.iter().zip(a2) {
            if seeds.is_empty() {
                break 'relations;
            }
            let c = binv.apply(&x1.apply(&sb.vectors[k]));
            let cols: Vec<Vec<F::Elem>> = imgs
                .iter()
                .map(|img| {
                    let mut r = x2.apply(&img[k]);
                    for (j, cj) in c.iter().enumerate() {
                        if !f.is_zero(cj) {
                            f.add_scaled(&mut r, &img[j], &f.neg(cj));
                        }
                    }
                    r
                })
                .collect();
            let sys = Mat::from_rows_with_cols(f, cols, n2).transpose();
            let ker = sys.kernel_basis();
            if ker.rows() == seeds.len() {
                continue;
            }
            let combine = |old: &[Vec<F::Elem>], coeffs: &[F::Elem]| {
                let mut out = vec![f.zero(); old[0].len()];
                for (v, c) in old.iter().zip(coeffs) {
                    if !f.is_zero(c) {
                        f.add_scaled(&mut out, v, c);
                    }
                }
                out
            };
            let mut new_seeds = Vec::new();
            let mut new_imgs = Vec::new();
            for r in 0..ker.rows() {
                let coeffs = ker.row(r);
                new_seeds.push(combine(&seeds, coeffs));
                new_imgs.push(
                    (0..n1)
                        .map(|j| {
                            let col: Vec<Vec<F::Elem>> = imgs.iter().map(|img| img[j].clone()).collect();
                            combine(&col, coeffs)
                        })
                        .collect(),
                );
            }
            seeds = new_seeds;
            imgs = new_imgs;
        }
    }
    let mut vecs = Vec::new();
    for img in &imgs {
        let t = basis_matrix(f, n2, img).mul(&binv);
        if !verify_intertwining(m1, m2, &t) {
            return Err(Error::Invalid(
                "spin actions of the two modules do not match".into(),
            ));
        }
        vecs.push(t.vec());
    }
    Ok(Subspace::span(f, n1 * n2, &vecs))
}

/// Re-checks the intertwining identity for every generator.
pub fn verify_intertwining<F: Field>(m1: &LieModule<F>, m2: &LieModule<F>, t: &Mat<F>) -> bool {
    t.rows() == m2.dim()
        && t.cols() == m1.dim()
        && m1.num_generators() == m2.num_generators()
        && m1
            .actions()
            .iter()
            .zip(m2.actions())
            .all(|(a1, a2)| t.mul(a1) == a2.mul(t))
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug, PartialEq)]
pub enum IsoSearch<F: Field> {
    Isomorphic(Mat<F>),
    NotIsomorphic,
    Undecided,
}

fn mixed_actions<F: Field>(
    m1: &LieModule<F>,
    m2: &LieModule<F>,
    rng: &mut ChaCha8Rng,
) -> (Vec<Mat<F>>, Vec<Mat<F>>) {
    let f = m1.field();
    let k = m1.num_generators();
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    for _ in 0..3 {
        let c: Vec<F::Elem> = (0..k).map(|_| f.random(rng)).collect();
        a1.push(m1.action_of(&c));
        a2.push(m2.action_of(&c));
    }
    (a1, a2)
}

fn basis_matrix<F: Field>(f: &F, n: usize, vecs: &[Vec<F::Elem>]) -> Mat<F> {
    Mat::from_rows_with_cols(f, vecs.to_vec(), n).transpose()
}

/// Decides `M₁ ≅ M₂` by the standard-basis method. Requires modules over
/// the same generator list; `M₁` is spun from one vector, so cyclic `M₁`
/// (in particular irreducible `M₁`) is decided exactly over finite fields.
pub fn find_isomorphism<F: Field>(
    m1: &LieModule<F>,
    m2: &LieModule<F>,
    seed: u64,
) -> Result<IsoSearch<F>> {
    check_generators(m1, m2)?;
    let f = m1.field();
    let n = m1.dim();
    if n != m2.dim() {
        return Ok(IsoSearch::NotIsomorphic);
    }
    if n == 0 {
        return Ok(IsoSearch::Isomorphic(Mat::zeros(f, 0, 0)));
    }
    let finite = f.order().is_some();
    if !finite && n * n <= HOM_LIMIT {
        return iso_from_hom_space(m1, m2, seed);
    }
    let polys: Vec<Vec<F::Elem>> = if finite {
        small_irreducibles(f)
    } else {
        (-4..=4)
            .map(|l| vec![f.from_i64(-l), f.one()])
            .collect()
    };
    let maxdeg = polys.iter().map(|p| p.len() - 1).max().unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..30 {
        let (a1, a2) = mixed_actions(m1, m2, &mut rng);
        // word θ = c₀a₀ + c₁a₁ + c₂a₀a₁ in both modules
        let c: Vec<F::Elem> = if finite {
            (0..3).map(|_| f.random(&mut rng)).collect()
        } else {
            (0..3).map(|_| f.from_i64(rng.random_range(-2..=2))).collect()
        };
        let word = |a: &[Mat<F>]| {
            let mut t = a[0].scale(&c[0]);
            t.add_scaled_assign(&a[1], &c[1]);
            t.add_scaled_assign(&a[0].mul(&a[1]), &c[2]);
            t
        };
        let (t1, t2) = (word(&a1), word(&a2));
        let (mut p1, mut p2) = (vec![Mat::identity(f, n)], vec![Mat::identity(f, n)]);
        for _ in 0..maxdeg {
            let x = p1.last().expect("nonempty").mul(&t1);
            p1.push(x);
            let y = p2.last().expect("nonempty").mul(&t2);
            p2.push(y);
        }
        for p in &polys {
            let eval = |pw: &[Mat<F>]| {
                let mut out = pw[0].scale(&p[0]);
                for (k, ck) in p.iter().enumerate().skip(1) {
                    out.add_scaled_assign(&pw[k], ck);
                }
                out
            };
            let k1 = eval(&p1).kernel_basis();
            if k1.rows() == 0 {
                continue;
            }
            let k2 = eval(&p2).kernel_basis();
            if k1.rows() != k2.rows() {
                return Ok(IsoSearch::NotIsomorphic);
            }
            let v = k1.row(0).to_vec();
            let sb = standard_basis(f, n, &a1, &v);
            if sb.vectors.len() < n {
                continue;
            }
            let b1 = basis_matrix(f, n, &sb.vectors);
            let b1inv = b1.inverse()?;
            let lines: u64 = if finite {
                let q = f.order().expect("finite");
                let c = line_count(q, k2.rows());
                if c > 100_000 {
                    continue;
                }
                c as u64
            } else if k2.rows() == 1 {
                1
            } else {
                continue;
            };
            for i in 0..lines {
                let coeffs = line_representative_or_one(f, k2.rows(), i, finite);
                let w = k2.apply_left(&coeffs);
                let img = replay(&sb, &a2, &w);
                let b2 = basis_matrix(f, n, &img);
                let t = b2.mul(&b1inv);
                if t.is_invertible() && verify_intertwining(m1, m2, &t) {
                    return Ok(IsoSearch::Isomorphic(t));
                }
            }
            return Ok(IsoSearch::NotIsomorphic);
        }
    }
    Ok(IsoSearch::Undecided)
}

/// Random small-integer combinations of a basis of `Hom(M₁, M₂)`.
fn iso_from_hom_space<F: Field>(
    m1: &LieModule<F>,
    m2: &LieModule<F>,
    seed: u64,
) -> Result<IsoSearch<F>> {
    let f = m1.field();
    let n = m1.dim();
    let h = hom_space(m1, m2)?;
    if h.is_zero() {
        return Ok(IsoSearch::NotIsomorphic);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..20 {
        let c: Vec<F::Elem> = (0..h.dim())
            .map(|i| {
                if attempt == 0 {
                    f.from_i64(i64::from(i == 0))
                } else {
                    f.from_i64(rng.random_range(-3..=3))
                }
            })
            .collect();
        let t = Mat::unvec(f, &h.combine(&c), n, n);
        if t.is_invertible() && verify_intertwining(m1, m2, &t) {
            return Ok(IsoSearch::Isomorphic(t));
        }
    }
    Ok(IsoSearch::Undecided)
}

fn line_representative_or_one<F: Field>(f: &F, k: usize, i: u64, finite: bool) -> Vec<F::Elem> {
    if finite {
        line_representative(f, k, i)
    } else {
        vec![f.one(); k]
    }
}
