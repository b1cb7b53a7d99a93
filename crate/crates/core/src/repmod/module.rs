use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::liealg::MatLieAlg;
use crate::matrix::Mat;
use crate::subspace::Subspace;

/// A module given by the action matrices of a list of Lie algebra elements.
///
/// `spin_actions` optionally holds a smaller list of actions with the same
/// invariant subspaces (images of a Lie generating set). Spinning and
/// irreducibility tests use it when present.
#[derive(Clone, Debug, PartialEq)]
pub struct LieModule<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    actions: Vec<Mat<F>>,
    spin_actions: Option<Vec<Mat<F>>>,
}

impl<F: Field> LieModule<F> {
    pub fn new(field: &F, dim: usize, labels: Vec<String>, actions: Vec<Mat<F>>) -> Result<Self> {
        if labels.len() != actions.len() {
            return Err(Error::Invalid("one label per action required".into()));
        }
        for a in &actions {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::Dimension(format!(
                    "action of shape {}x{} on a {dim}-dimensional module",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(LieModule {
            field: field.clone(),
            dim,
            labels,
            actions,
            spin_actions: None,
        })
    }

    /// Unlabelled actions, named `x1, x2, …`.
    pub fn from_actions(field: &F, dim: usize, actions: Vec<Mat<F>>) -> Result<Self> {
        let labels = (1..=actions.len()).map(|i| format!("x{i}")).collect();
        Self::new(field, dim, labels, actions)
    }

    /// Declares a smaller action list generating the same associative
    /// algebra, e.g. the images of Lie generators.
    pub fn with_spin_actions(mut self, spin: Vec<Mat<F>>) -> Result<Self> {
        for a in &spin {
            if a.rows() != self.dim || a.cols() != self.dim {
                return Err(Error::Dimension("spin action shape".into()));
            }
        }
        self.spin_actions = Some(spin);
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn actions(&self) -> &[Mat<F>] {
        &self.actions
    }
    pub fn num_generators(&self) -> usize {
        self.actions.len()
    }

    pub fn spin_actions(&self) -> &[Mat<F>] {
        self.spin_actions.as_deref().unwrap_or(&self.actions)
    }

    /// The module restricted to its spin actions.
    pub fn lightweight(&self) -> Self {
        let acts = self.spin_actions().to_vec();
        let labels = (1..=acts.len()).map(|i| format!("g{i}")).collect();
        LieModule {
            field: self.field.clone(),
            dim: self.dim,
            labels,
            actions: acts,
            spin_actions: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.spin_actions().iter().all(|a| a.is_zero())
    }

    pub fn is_invariant(&self, s: &Subspace<F>) -> bool {
        s.ambient() == self.dim && self.spin_actions().iter().all(|a| s.is_invariant(a))
    }

    /// Invariance under every listed action, not only the spin actions.
    pub fn is_invariant_all(&self, s: &Subspace<F>) -> bool {
        s.ambient() == self.dim && self.actions.iter().all(|a| s.is_invariant(a))
    }

    fn map_actions(&self, f: impl Fn(&Mat<F>) -> Result<Mat<F>>, dim: usize) -> Result<Self> {
        let actions = self.actions.iter().map(&f).collect::<Result<Vec<_>>>()?;
        let spin = match &self.spin_actions {
            Some(s) => Some(s.iter().map(&f).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Ok(LieModule {
            field: self.field.clone(),
            dim,
            labels: self.labels.clone(),
            actions,
            spin_actions: spin,
        })
    }

    /// The submodule `s` in its RREF basis.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_invariant(s) {
            return Err(Error::NotInvariant("submodule".into()));
        }
        self.map_actions(|a| s.restrict(a), s.dim())
    }

    /// `M / s` in the coordinates of [`Subspace::quotient_coordinates`].
    pub fn quotient(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_invariant(s) {
            return Err(Error::NotInvariant("quotient".into()));
        }
        self.map_actions(|a| s.quotient_action(a), self.dim - s.dim())
    }

    /// `upper / lower` for invariant `lower ⊆ upper`.
    pub fn subquotient(&self, lower: &Subspace<F>, upper: &Subspace<F>) -> Result<Self> {
        if !upper.contains(lower)? {
            return Err(Error::Invalid("subquotient bounds are not nested".into()));
        }
        let top = self.restrict(upper)?;
        let low = lower_in(upper, lower);
        top.quotient(&low)
    }

    /// Actions replaced by their negated transposes.
    pub fn dual(&self) -> Self {
        self.map_actions(|a| Ok(a.transpose().neg()), self.dim)
            .expect("dual is infallible")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.num_generators() != other.num_generators() {
            return Err(Error::Invalid("generator lists differ".into()));
        }
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Self::new(&self.field, self.dim + other.dim, self.labels.clone(), actions)
    }

    /// The action of `Σ c_i x_i`.
    pub fn action_of(&self, coeffs: &[F::Elem]) -> Mat<F> {
        let mut out = Mat::zeros(&self.field, self.dim, self.dim);
        for (c, a) in coeffs.iter().zip(&self.actions) {
            if !self.field.is_zero(c) {
                out.add_scaled_assign(a, c);
            }
        }
        out
    }

    /// Kernel of the representation on the span of the generators, as
    /// coefficient vectors.
    pub fn representation_kernel(&self) -> Subspace<F> {
        let n = self.actions.len();
        let sys = Mat::from_fn(&self.field, self.dim * self.dim, n, |r, c| {
            self.actions[c].data()[r].clone()
        });
        Subspace::kernel(&sys)
    }

    /// Checks `ρ([x, y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` on every pair, given the
    /// bracket coordinates `brackets[i][j]` of the generators.
    pub fn respects_brackets(&self, brackets: &[Vec<Vec<F::Elem>>]) -> bool {
        let n = self.actions.len();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action_of(&brackets[i][j]);
                if lhs != self.actions[i].bracket(&self.actions[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Reduction modulo `p` of a characteristic-0 module; `None` if some
    /// entry has a denominator divisible by `p`.
    pub fn reduce_mod(&self, p: u32) -> Option<LieModule<PrimeField>> {
        let fp = PrimeField::new(p).ok()?;
        let red = |a: &Mat<F>| -> Option<Mat<PrimeField>> {
            let data = a
                .data()
                .iter()
                .map(|x| self.field.reduce_mod(x, p))
                .collect::<Option<Vec<u32>>>()?;
            let rows = (0..a.rows())
                .map(|r| data[r * a.cols()..(r + 1) * a.cols()].to_vec())
                .collect();
            Some(Mat::from_rows_with_cols(&fp, rows, a.cols()))
        };
        let actions = self.actions.iter().map(red).collect::<Option<Vec<_>>>()?;
        let spin = match &self.spin_actions {
            Some(s) => Some(s.iter().map(red).collect::<Option<Vec<_>>>()?),
            None => None,
        };
        Some(LieModule {
            field: fp,
            dim: self.dim,
            labels: self.labels.clone(),
            actions,
            spin_actions: spin,
        })
    }
}

/// Coordinates of `lower` relative to the RREF basis of `upper`.
pub fn lower_in<F: Field>(upper: &Subspace<F>, lower: &Subspace<F>) -> Subspace<F> {
    let rows: Vec<_> = (0..lower.dim())
        .map(|i| upper.coordinates(lower.basis_vec(i)).expect("nested"))
        .collect();
    Subspace::span(upper.field(), upper.dim(), &rows)
}

/// Matrix of `ad(x)` on an invariant subspace of gl(m), in its RREF basis.
pub fn ad_on<F: Field>(x: &Mat<F>, ambient: &Subspace<F>) -> Result<Mat<F>> {
    let f = ambient.field();
    let d = ambient.dim();
    let mut out = Mat::zeros(f, d, d);
    for j in 0..d {
        let w = Mat::unvec_square(f, ambient.basis_vec(j));
        let c = ambient
            .coordinates(&x.bracket(&w).vec())
            .ok_or_else(|| Error::NotInvariant("ambient is not ad-invariant".into()))?;
        for (i, v) in c.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

/// `ambient ⊆ gl(m)` as an `L`-module under `x·w = [x, w]`. Generators are
/// the RREF basis of `L`; spin actions come from a random Lie generating set.
pub fn adjoint_module<F: Field, R: Rng + ?Sized>(
    l: &MatLieAlg<F>,
    ambient: &Subspace<F>,
    rng: &mut R,
) -> Result<LieModule<F>> {
    let f = l.field();
    let basis = l.basis_matrices();
    let actions = basis
        .iter()
        .map(|x| ad_on(x, ambient))
        .collect::<Result<Vec<_>>>()?;
    let labels = (1..=basis.len()).map(|i| format!("{}[{i}]", l.label())).collect();
    let gens = l.lie_generators(rng);
    let spin = gens
        .iter()
        .map(|x| ad_on(x, ambient))
        .collect::<Result<Vec<_>>>()?;
    LieModule::new(f, ambient.dim(), labels, actions)?.with_spin_actions(spin)
}

/// The natural module `F^m` of a matrix algebra.
pub fn natural_module<F: Field, R: Rng + ?Sized>(
    l: &MatLieAlg<F>,
    rng: &mut R,
) -> Result<LieModule<F>> {
    let labels = (1..=l.dim()).map(|i| format!("{}[{i}]", l.label())).collect();
    LieModule::new(l.field(), l.m(), labels, l.basis_matrices())?
        .with_spin_actions(l.lie_generators(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::forms::standard_symplectic;
    use crate::liealg::skew_adjoint_algebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn adjoint_examples() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl2 = MatLieAlg::sl(&q, 2);
        let gl = MatLieAlg::gl(&q, 2);
        let m = adjoint_module(&sl2, gl.space(), &mut rng).unwrap();
        assert_eq!(m.dim(), 4);
        let e12 = Mat::unit(&q, 2, 0, 1);
        let ad = ad_on(&e12, gl.space()).unwrap();
        assert!(ad.pow(3).is_zero());
        let s = MatLieAlg::scalars(&q, 2);
        let triv = adjoint_module(&sl2, s.space(), &mut rng).unwrap();
        assert!(triv.actions().iter().all(|a| a.is_zero()));

        let f2 = PrimeField::new(2).unwrap();
        let l = skew_adjoint_algebra(&standard_symplectic(&f2, 4).unwrap()).unwrap();
        let l2 = &l.derived_series()[2];
        let m = adjoint_module(&l, l2.space(), &mut rng).unwrap();
        assert_eq!(m.dim(), 5);
    }

    #[test]
    fn dual_is_involution() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl2 = MatLieAlg::sl(&q, 2);
        let v = natural_module(&sl2, &mut rng).unwrap();
        assert_eq!(v.dual().dual(), v);
        let t = LieModule::from_actions(&q, 1, vec![Mat::zeros(&q, 1, 1)]).unwrap();
        assert_eq!(t.dual(), t);
    }

    #[test]
    fn non_invariant_is_rejected() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl2 = MatLieAlg::sl(&q, 2);
        let s = MatLieAlg::scalars(&q, 2);
        assert!(adjoint_module(&s, sl2.space(), &mut rng).is_ok());
        let d = MatLieAlg::diagonal(&q, 2);
        assert!(adjoint_module(&sl2, d.space(), &mut rng).is_err());
    }
}
