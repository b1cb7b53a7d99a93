//! Subspaces of F^N held by their canonical RREF basis.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;

/// A subspace of `F^N`. The basis is in reduced row echelon form, so two
/// subspaces are equal exactly when their bases are identical.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat<F>) -> Self {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace {
            basis: r.matrix.select_rows(&keep),
            pivots: r.pivots,
        }
    }

    pub fn span(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        Self::from_rows(&Mat::from_rows_with_cols(field, vectors.to_vec(), ambient))
    }

    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The null space of `m` (vectors `v` with `m v = 0`).
    pub fn kernel(m: &Mat<F>) -> Self {
        Self::from_rows(&m.kernel_basis())
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }
    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vec(&self, i: usize) -> &[F::Elem] {
        self.basis.row(i)
    }
    pub fn basis_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }

    /// Columns that are not pivots; the unit vectors at these positions span
    /// a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(())
    }

    /// Reduces `v` modulo the subspace. The result vanishes at every pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&v[p]) {
                let c = f.neg(&v[p]);
                f.add_scaled(&mut v, self.basis.row(i), &c);
            }
        }
        v
    }

    pub fn contains_vec(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.basis.apply_left(coords)
    }

    /// Coordinates of the image of `v` in the quotient `F^N / self`, relative
    /// to the complement spanned by the non-pivot unit vectors.
    pub fn quotient_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.non_pivots().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vec(other.basis_vec(i))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_rows(&self.basis.vstack(&other.basis)))
    }

    /// `{w : ⟨u, w⟩ = 0 for all u}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        if self.dim() == 0 {
            return Self::full(self.field(), self.ambient());
        }
        Self::kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let s = self.annihilator().sum(&other.annihilator())?;
        Ok(s.annihilator())
    }

    pub fn add_vectors(&self, vectors: &[Vec<F::Elem>]) -> Self {
        let extra = Mat::from_rows_with_cols(self.field(), vectors.to_vec(), self.ambient());
        Self::from_rows(&self.basis.vstack(&extra))
    }

    /// Whether `action · v` stays inside for every basis vector `v`.
    pub fn is_invariant(&self, action: &Mat<F>) -> bool {
        (0..self.dim()).all(|i| self.contains_vec(&action.apply(self.basis_vec(i))))
    }

    pub fn image(&self, m: &Mat<F>) -> Self {
        let rows: Vec<_> = (0..self.dim()).map(|i| m.apply(self.basis_vec(i))).collect();
        Self::span(self.field(), m.rows(), &rows)
    }

    /// Matrix of `action` restricted to this (invariant) subspace, relative to
    /// the RREF basis, acting on column coordinate vectors.
    pub fn restrict(&self, action: &Mat<F>) -> Result<Mat<F>> {
        let d = self.dim();
        let mut out = Mat::zeros(self.field(), d, d);
        for j in 0..d {
            let img = action.apply(self.basis_vec(j));
            let c = self
                .coordinates(&img)
                .ok_or_else(|| Error::NotInvariant("restriction of non-invariant subspace".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    /// Matrix of `action` on the quotient `F^N / self` relative to
    /// [`Subspace::quotient_coordinates`].
    pub fn quotient_action(&self, action: &Mat<F>) -> Result<Mat<F>> {
        if !self.is_invariant(action) {
            return Err(Error::NotInvariant("quotient by non-invariant subspace".into()));
        }
        let f = self.field();
        let np = self.non_pivots();
        let k = np.len();
        let mut out = Mat::zeros(f, k, k);
        for (j, &c) in np.iter().enumerate() {
            let col = action.column(c);
            for (i, x) in self.quotient_coordinates(&col).into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    /// Lifts quotient coordinates back to a representative vector.
    pub fn quotient_lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = vec![f.zero(); self.ambient()];
        for (x, c) in coords.iter().zip(self.non_pivots()) {
            v[c] = x.clone();
        }
        v
    }
}

/// Incrementally grown basis kept fully reduced: every pivot column is zero
/// in all other rows.
#[derive(Clone, Debug)]
pub struct EchelonBuilder<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBuilder<F> {
    pub fn new(field: &F, ambient: usize) -> Self {
        EchelonBuilder {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace<F>) -> Self {
        EchelonBuilder {
            field: s.field().clone(),
            ambient: s.ambient(),
            rows: s.basis_vecs(),
            pivots: s.pivots().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let c = f.neg(&v[p]);
                f.add_scaled(&mut v, row, &c);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns the reduced new basis vector if `v` was independent.
    pub fn insert(&mut self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&r[p]).expect("nonzero");
        f.scale_in_place(&mut r, &inv);
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                f.add_scaled(row, &r, &c);
            }
        }
        self.rows.push(r.clone());
        self.pivots.push(p);
        Some(r)
    }

    pub fn to_subspace(&self) -> Subspace<F> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows: Vec<_> = order.iter().map(|&i| self.rows[i].clone()).collect();
        Subspace {
            basis: Mat::from_rows_with_cols(&self.field, rows, self.ambient),
            pivots: order.iter().map(|&i| self.pivots[i]).collect(),
        }
    }
}
