//! The tensor square `V⊗V` of the natural module of `L(f)`, the maps
//! `Γ: V⊗V → gl(V)`, the contraction `Ω`, and the symmetric and exterior
//! squares.
//!
//! Tensors are coordinate vectors of length `m²`, `e_i⊗e_j` at `i·m + j`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::BilForm;
use crate::liealg::{skew_adjoint_algebra, MatLieAlg};
use crate::matrix::Mat;
use crate::subspace::Subspace;

use super::module::LieModule;

#[derive(Clone, Debug)]
pub struct TensorSquare<F: Field> {
    pub form: BilForm<F>,
    pub algebra: MatLieAlg<F>,
    pub module: LieModule<F>,
    /// Column `i·m+j` is `vec(Γ(e_i⊗e_j))`, where `Γ(v⊗w)(u) = f(v,u)w`.
    pub gamma: Mat<F>,
    /// `Ω(e_i⊗e_j) = f(e_i, e_j)`.
    pub omega: Vec<F::Elem>,
    pub sym: Subspace<F>,
    pub alt: Subspace<F>,
}

/// Action of `x` on `V⊗V`.
pub fn tensor_action<F: Field>(x: &Mat<F>) -> Mat<F> {
    let id = Mat::identity(x.field(), x.rows());
    x.kron(&id).add(&id.kron(x))
}

/// `v⊗w ↦ v⊗w − w⊗v`.
pub fn antisymmetrizer<F: Field>(field: &F, m: usize) -> Mat<F> {
    let mut q = Mat::identity(field, m * m);
    for i in 0..m {
        for j in 0..m {
            let r = j * m + i;
            let c = i * m + j;
            q[(r, c)] = field.sub(&q[(r, c)], &field.one());
        }
    }
    q
}

impl<F: Field> TensorSquare<F> {
    pub fn new<R: Rng + ?Sized>(gram: &Mat<F>, rng: &mut R) -> Result<Self> {
        let form = BilForm::classify(gram)?;
        if !form.nondegenerate {
            return Err(Error::Invalid("tensor square needs a nondegenerate form".into()));
        }
        let f = gram.field().clone();
        let m = gram.rows();
        let algebra = skew_adjoint_algebra(gram)?;
        let basis = algebra.basis_matrices();
        let labels = (1..=basis.len()).map(|i| format!("L[{i}]")).collect();
        let actions = basis.iter().map(tensor_action).collect();
        let spin = algebra
            .lie_generators(rng)
            .iter()
            .map(tensor_action)
            .collect();
        let module = LieModule::new(&f, m * m, labels, actions)?.with_spin_actions(spin)?;

        let mut gamma = Mat::zeros(&f, m * m, m * m);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    // entry (j, k) of Γ(e_i⊗e_j) sits at k·m + j
                    gamma[(k * m + j, i * m + j)] = gram[(i, k)].clone();
                }
            }
        }
        let omega = (0..m * m).map(|c| gram[(c / m, c % m)].clone()).collect();

        let unit = |i: usize, j: usize| {
            let mut v = vec![f.zero(); m * m];
            v[i * m + j] = f.add(&v[i * m + j], &f.one());
            v
        };
        let mut sym_gens = Vec::new();
        let mut alt_gens = Vec::new();
        for i in 0..m {
            sym_gens.push(unit(i, i));
            for j in i + 1..m {
                let (a, b) = (unit(i, j), unit(j, i));
                sym_gens.push(a.iter().zip(&b).map(|(x, y)| f.add(x, y)).collect());
                alt_gens.push(a.iter().zip(&b).map(|(x, y)| f.sub(x, y)).collect());
            }
        }
        let sym = Subspace::span(&f, m * m, &sym_gens);
        let alt = Subspace::span(&f, m * m, &alt_gens);
        Ok(TensorSquare {
            form,
            algebra,
            module,
            gamma,
            omega,
            sym,
            alt,
        })
    }

    pub fn m(&self) -> usize {
        self.form.dim()
    }

    pub fn field(&self) -> &F {
        self.form.field()
    }

    pub fn gamma_of(&self, t: &[F::Elem]) -> Mat<F> {
        Mat::unvec_square(self.field(), &self.gamma.apply(t))
    }

    pub fn omega_of(&self, t: &[F::Elem]) -> F::Elem {
        self.field().dot(&self.omega, t)
    }

    /// `Γ(S)` as a subspace of vectorized matrices.
    pub fn gamma_image(&self, s: &Subspace<F>) -> Subspace<F> {
        s.image(&self.gamma)
    }

    /// Whether `Γ(x·t) = [x, Γ(t)]`.
    pub fn gamma_equivariant_at(&self, x: &Mat<F>, t: &[F::Elem]) -> bool {
        let xt = tensor_action(x).apply(t);
        self.gamma_of(&xt) == x.bracket(&self.gamma_of(t))
    }

    /// The functional `Δ(v⊗w − w⊗v) = f(v,w)` on the exterior square, for an
    /// alternating form in characteristic 2, as a vector pairing with
    /// tensors.
    pub fn delta(&self) -> Result<Vec<F::Elem>> {
        let f = self.field();
        if f.characteristic() != 2 || !self.form.alternating {
            return Err(Error::Invalid(
                "Δ needs an alternating form in characteristic 2".into(),
            ));
        }
        let m = self.m();
        Ok((0..m * m)
            .map(|c| {
                let (i, j) = (c / m, c % m);
                if i < j {
                    self.form.gram[(i, j)].clone()
                } else {
                    f.zero()
                }
            })
            .collect())
    }

    /// `ker Δ` inside the exterior square.
    pub fn delta_kernel(&self) -> Result<Subspace<F>> {
        let d = self.delta()?;
        let f = self.field();
        let row = Mat::from_rows(f, vec![d]);
        self.alt.intersect(&Subspace::kernel(&row))
    }

    /// Kernel of `v⊗w ↦ v⊗w − w⊗v`.
    pub fn antisymmetrizer_kernel(&self) -> Subspace<F> {
        Subspace::kernel(&antisymmetrizer(self.field(), self.m()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::forms::standard_symplectic;
    use crate::liealg::self_adjoint_module;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gamma_images_symplectic_gf5() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let j = standard_symplectic(&f, 4).unwrap();
        let t = TensorSquare::new(&j, &mut rng).unwrap();
        assert_eq!(t.gamma_image(&t.sym), *t.algebra.space());
        assert_eq!(t.gamma_image(&t.alt), self_adjoint_module(&j).unwrap());
        assert!(t.gamma.is_invertible());
        assert_eq!(t.antisymmetrizer_kernel(), t.sym);
        for _ in 0..20 {
            let x = t.algebra.random_element(&mut rng);
            let v: Vec<u32> = (0..16).map(|_| f.random(&mut rng)).collect();
            assert!(t.gamma_equivariant_at(&x, &v));
            assert!(f.is_zero(&t.omega_of(&tensor_action(&x).apply(&v))));
            assert_eq!(t.omega_of(&v), t.gamma_of(&v).trace());
        }
    }

    #[test]
    fn orthogonal_rational() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = Mat::diagonal(&q, &[q.from_i64(1), q.from_i64(2), q.from_i64(-1)]);
        let t = TensorSquare::new(&d, &mut rng).unwrap();
        assert_eq!(t.gamma_image(&t.alt), *t.algebra.space());
        assert_eq!(t.gamma_image(&t.sym), self_adjoint_module(&d).unwrap());
    }

    #[test]
    fn char2_delta() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let j = standard_symplectic(&f, 4).unwrap();
        let t = TensorSquare::new(&j, &mut rng).unwrap();
        assert_eq!(t.gamma_image(&t.sym), *t.algebra.space());
        let l2 = &t.algebra.derived_series()[2];
        assert_eq!(t.gamma_image(&t.delta_kernel().unwrap()), *l2.space());
        let i2 = Mat::identity(&f, 2);
        let s = TensorSquare::new(&i2, &mut rng).unwrap();
        assert!(s.delta().is_err());
    }
}
