//! Simultaneous eigenspaces of commuting actions.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::Subspace;

/// A weight: one eigenvalue per element of `H`, and its eigenspace.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight<F: Field> {
    pub values: Vec<F::Elem>,
    pub space: Subspace<F>,
}

impl<F: Field> Weight<F> {
    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable<F: Field> {
    pub labels: Vec<String>,
    pub weights: Vec<Weight<F>>,
}

impl<F: Field> WeightTable<F> {
    pub fn total_dim(&self) -> usize {
        self.weights.iter().map(|w| w.multiplicity()).sum()
    }

    pub fn find(&self, values: &[F::Elem]) -> Option<&Weight<F>> {
        self.weights.iter().find(|w| w.values == values)
    }

    /// `(values, multiplicity)` with values formatted by the field.
    pub fn summary(&self, field: &F) -> Vec<(Vec<String>, usize)> {
        self.weights
            .iter()
            .map(|w| {
                (
                    w.values.iter().map(|x| field.format(x)).collect(),
                    w.multiplicity(),
                )
            })
            .collect()
    }
}

fn candidates<F: Field>(h: &Mat<F>) -> Result<Vec<F::Elem>> {
    let f = h.field();
    match f.order() {
        Some(q) if q <= 1 << 16 => Ok((0..q).map(|i| f.element(i)).collect()),
        Some(q) => Err(Error::Invalid(format!("eigenvalue search over a field of order {q}"))),
        None => {
            // integers and half-integers inside the Gershgorin discs
            let bound = (0..h.rows())
                .map(|r| h.row(r).iter().map(|x| f.magnitude(x)).sum::<f64>())
                .fold(0.0, f64::max)
                .ceil() as i64;
            let half = f.inv(&f.from_i64(2)).expect("characteristic 0");
            let mut out = Vec::new();
            for k in -2 * bound..=2 * bound {
                out.push(f.mul(&f.from_i64(k), &half));
            }
            Ok(out)
        }
    }
}

/// Joint eigenspaces of the pairwise commuting `h` on `F^n`, over the
/// base field. Eigenvalues outside the field (or, in characteristic 0,
/// outside the half-integers) are not found, so the multiplicities may sum
/// to less than `n`.
pub fn weights<F: Field>(field: &F, n: usize, labels: &[String], h: &[Mat<F>]) -> Result<WeightTable<F>> {
    if labels.len() != h.len() {
        return Err(Error::Invalid("one label per element of H".into()));
    }
    for a in h {
        if a.rows() != n || a.cols() != n {
            return Err(Error::Dimension("H action shape".into()));
        }
    }
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            if !h[i].bracket(&h[j]).is_zero() {
                return Err(Error::Invalid(format!(
                    "{} and {} do not commute",
                    labels[i], labels[j]
                )));
            }
        }
    }
    let mut blocks = vec![(Vec::new(), Subspace::full(field, n))];
    for a in h {
        let cands = candidates(a)?;
        let mut next = Vec::new();
        for (vals, s) in blocks {
            let r = s.restrict(a)?;
            for lam in &cands {
                let shifted = r.sub(&Mat::scalar(field, s.dim(), lam));
                let ker = shifted.kernel_basis();
                if ker.rows() == 0 {
                    continue;
                }
                let rows: Vec<_> = ker.row_vecs().iter().map(|c| s.combine(c)).collect();
                let mut v: Vec<F::Elem> = vals.clone();
                v.push(lam.clone());
                next.push((v, Subspace::span(field, n, &rows)));
            }
        }
        blocks = next;
    }
    Ok(WeightTable {
        labels: labels.to_vec(),
        weights: blocks
            .into_iter()
            .map(|(values, space)| Weight { values, space })
            .collect(),
    })
}
