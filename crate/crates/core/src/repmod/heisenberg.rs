//! Truncated polynomial modules `F[X₁..X_n]/(X₁^ℓ..X_n^ℓ)` of the
//! Heisenberg algebra.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;

use super::module::LieModule;

/// Monomial `X^e` sits at index `Σ e_i ℓ^i` (`X₁` least significant).
pub fn monomial_index(exps: &[usize], ell: usize) -> usize {
    exps.iter().rev().fold(0, |acc, &e| acc * ell + e)
}

fn exponents(mut idx: usize, n: usize, ell: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let e = idx % ell;
            idx /= ell;
            e
        })
        .collect()
}

/// The module with `u_i ↦ ∂/∂X_i`, `v_i ↦ α·X_i`, `z ↦ α`, generators in
/// the order `u₁..u_n, v₁..v_n, z`.
pub fn heisenberg_poly_module<F: Field>(
    field: &F,
    n: usize,
    ell: usize,
    alpha: &F::Elem,
) -> Result<LieModule<F>> {
    if field.is_zero(alpha) {
        return Err(Error::Invalid("α must be nonzero".into()));
    }
    if n == 0 || ell < 2 {
        return Err(Error::Invalid("need n ≥ 1 and ℓ ≥ 2".into()));
    }
    let dim = ell.pow(n as u32);
    let mut acts = Vec::new();
    for i in 0..n {
        let mut d = Mat::zeros(field, dim, dim);
        for c in 0..dim {
            let mut e = exponents(c, n, ell);
            if e[i] > 0 {
                let coeff = field.from_i64(e[i] as i64);
                e[i] -= 1;
                d[(monomial_index(&e, ell), c)] = coeff;
            }
        }
        acts.push(d);
    }
    for i in 0..n {
        let mut x = Mat::zeros(field, dim, dim);
        for c in 0..dim {
            let mut e = exponents(c, n, ell);
            if e[i] + 1 < ell {
                e[i] += 1;
                x[(monomial_index(&e, ell), c)] = alpha.clone();
            }
        }
        acts.push(x);
    }
    acts.push(Mat::scalar(field, dim, alpha));
    let labels = (1..=n)
        .map(|i| format!("u{i}"))
        .chain((1..=n).map(|i| format!("v{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect();
    LieModule::new(field, dim, labels, acts)
}
