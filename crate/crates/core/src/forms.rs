//! Bilinear forms given by Gram matrices, and congruence normal forms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;

/// The block matrix `[[0, I_n], [−I_n, 0]]`.
pub fn standard_symplectic<F: Field>(field: &F, m: usize) -> Result<Mat<F>> {
    if m % 2 != 0 || m == 0 {
        return Err(Error::Invalid(format!(
            "an alternating nondegenerate form needs even m, got {m}"
        )));
    }
    let n = m / 2;
    let mut j = Mat::zeros(field, m, m);
    for i in 0..n {
        j[(i, n + i)] = field.one();
        j[(n + i, i)] = field.neg(&field.one());
    }
    Ok(j)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BilForm<F: Field> {
    pub gram: Mat<F>,
    pub symmetric: bool,
    pub alternating: bool,
    pub nondegenerate: bool,
}

/// `S' · gram · S = normal_form`.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruence<F: Field> {
    pub transform: Mat<F>,
    pub normal_form: Mat<F>,
}

impl<F: Field> BilForm<F> {
    pub fn classify(gram: &Mat<F>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Dimension(format!(
                "Gram matrix must be square, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if gram.rows() == 0 {
            return Err(Error::Dimension("empty Gram matrix".into()));
        }
        Ok(BilForm {
            symmetric: gram.is_symmetric(),
            alternating: gram.is_alternating(),
            nondegenerate: gram.is_invertible(),
            gram: gram.clone(),
        })
    }

    pub fn field(&self) -> &F {
        self.gram.field()
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn m_is_even(&self) -> bool {
        self.dim() % 2 == 0
    }

    /// Whether the characteristic divides `k` (never in characteristic 0).
    pub fn char_divides(&self, k: usize) -> bool {
        let p = self.field().characteristic() as usize;
        p != 0 && k % p == 0
    }

    pub fn eval(&self, u: &[F::Elem], v: &[F::Elem]) -> F::Elem {
        self.field().dot(u, &self.gram.apply(v))
    }

    pub fn symplectic_basis(&self) -> Result<Congruence<F>> {
        if !self.alternating || !self.nondegenerate {
            return Err(Error::Invalid(
                "symplectic basis needs a nondegenerate alternating form".into(),
            ));
        }
        let f = self.field().clone();
        let m = self.dim();
        let mut pool: Vec<Vec<F::Elem>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        let mut us = Vec::new();
        let mut vs = Vec::new();
        while !pool.is_empty() {
            let u = pool.remove(0);
            let k = pool
                .iter()
                .position(|w| !f.is_zero(&self.eval(&u, w)))
                .ok_or(Error::Singular)?;
            let w = pool.remove(k);
            let c = f.inv(&self.eval(&u, &w)).ok_or(Error::Singular)?;
            let v: Vec<F::Elem> = w.iter().map(|x| f.mul(x, &c)).collect();
            for x in pool.iter_mut() {
                let a = f.neg(&self.eval(x, &v));
                let b = self.eval(x, &u);
                f.add_scaled(x, &u, &a);
                f.add_scaled(x, &v, &b);
            }
            us.push(u);
            vs.push(v);
        }
        us.extend(vs);
        let s = Mat::from_rows(&f, us).transpose();
        let normal_form = s.transpose().mul(&self.gram).mul(&s);
        debug_assert_eq!(normal_form, standard_symplectic(&f, m)?);
        Ok(Congruence {
            transform: s,
            normal_form,
        })
    }

    /// Diagonal normal form of a symmetric form. Degenerate forms get a zero
    /// diagonal tail. In characteristic 2 the form must not be alternating.
    pub fn diagonalize_symmetric(&self) -> Result<Congruence<F>> {
        if !self.symmetric {
            return Err(Error::Invalid("form is not symmetric".into()));
        }
        let f = self.field().clone();
        let char2 = f.characteristic() == 2;
        if char2 && self.alternating && !self.gram.is_zero() {
            return Err(Error::Invalid(
                "alternating form in characteristic 2 has no diagonal normal form".into(),
            ));
        }
        let m = self.dim();
        let mut pool: Vec<Vec<F::Elem>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        let mut diag: Vec<Vec<F::Elem>> = Vec::new();
        let mut tail: Vec<Vec<F::Elem>> = Vec::new();
        while !pool.is_empty() {
            if let Some(k) = pool.iter().position(|w| !f.is_zero(&self.eval(w, w))) {
                let v = pool.remove(k);
                let dinv = f.inv(&self.eval(&v, &v)).expect("nonzero");
                for x in pool.iter_mut() {
                    let c = f.neg(&f.mul(&self.eval(&v, x), &dinv));
                    f.add_scaled(x, &v, &c);
                }
                diag.push(v);
                continue;
            }
            let pair = (0..pool.len()).find_map(|i| {
                (i + 1..pool.len())
                    .find(|&j| !f.is_zero(&self.eval(&pool[i], &pool[j])))
                    .map(|j| (i, j))
            });
            let Some((i, j)) = pair else {
                tail.append(&mut pool);
                break;
            };
            if !char2 {
                let wj = pool[j].clone();
                f.add_scaled(&mut pool[i], &wj, &f.one());
                continue;
            }
            // char 2, the remaining form is alternating and nonzero: merge a
            // hyperbolic pair with an earlier anisotropic vector
            let k = diag.len().checked_sub(1).ok_or_else(|| {
                Error::Invalid("alternating form in characteristic 2".into())
            })?;
            let v = diag[k].clone();
            let d = self.eval(&v, &v);
            let u = pool[i].clone();
            let c = f.inv(&self.eval(&u, &pool[j])).expect("nonzero");
            let w: Vec<F::Elem> = pool[j].iter().map(|x| f.mul(x, &c)).collect();
            pool.remove(j);
            pool.remove(i);
            for x in pool.iter_mut() {
                let a = f.neg(&self.eval(x, &w));
                let b = f.neg(&self.eval(x, &u));
                f.add_scaled(x, &u, &a);
                f.add_scaled(x, &w, &b);
            }
            let mut x1 = v.clone();
            f.add_scaled(&mut x1, &u, &f.one());
            let mut x2 = v.clone();
            f.add_scaled(&mut x2, &w, &d);
            let mut x3 = x2.clone();
            f.add_scaled(&mut x3, &u, &f.one());
            diag[k] = x1;
            diag.push(x2);
            diag.push(x3);
        }
        diag.extend(tail);
        let s = Mat::from_rows(&f, diag).transpose();
        let normal_form = s.transpose().mul(&self.gram).mul(&s);
        Ok(Congruence {
            transform: s,
            normal_form,
        })
    }

    pub fn discriminant_is_square(&self) -> Result<bool> {
        if !self.nondegenerate {
            return Err(Error::Invalid("discriminant of a degenerate form".into()));
        }
        Ok(self.field().is_square(&self.gram.det()))
    }
}
