//! Composition series by recursive splitting.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subspace::Subspace;

use super::irreducible::{certify_irreducible, Certificate, CertifyOptions, Method};
use super::module::{lower_in, LieModule};

/// A chain `0 = W₀ ⊂ … ⊂ W_k = M` with one record per factor.
#[derive(Clone, Debug, PartialEq)]
pub struct CompSeries<F: Field> {
    pub chain: Vec<Subspace<F>>,
    pub factor_dims: Vec<usize>,
    pub factor_trivial: Vec<bool>,
    pub methods: Vec<Method>,
}

impl<F: Field> CompSeries<F> {
    pub fn len(&self) -> usize {
        self.factor_dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factor_dims.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(|s| s.dim()).collect()
    }

    pub fn nontrivial_dims(&self) -> Vec<usize> {
        self.factor_dims
            .iter()
            .zip(&self.factor_trivial)
            .filter(|(_, &t)| !t)
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn trivial_count(&self) -> usize {
        self.factor_trivial.iter().filter(|&&t| t).count()
    }

    /// Every factor carries an irreducibility certificate.
    pub fn is_certified(&self) -> bool {
        self.methods.iter().all(|m| m.is_certified())
    }

    /// Position of `s` in the chain.
    pub fn position(&self, s: &Subspace<F>) -> Option<usize> {
        self.chain.iter().position(|c| c == s)
    }
}

fn hint_in_sub<F: Field>(w: &Subspace<F>, h: &Subspace<F>) -> Result<Subspace<F>> {
    Ok(lower_in(w, &h.intersect(w)?))
}

fn hint_in_quotient<F: Field>(w: &Subspace<F>, h: &Subspace<F>) -> Result<Subspace<F>> {
    let s = h.sum(w)?;
    let rows: Vec<_> = s
        .basis_vecs()
        .iter()
        .map(|v| w.quotient_coordinates(v))
        .collect();
    Ok(Subspace::span(w.field(), w.ambient() - w.dim(), &rows))
}

fn lift_from_sub<F: Field>(w: &Subspace<F>, s: &Subspace<F>) -> Subspace<F> {
    let rows: Vec<_> = s.basis_vecs().iter().map(|c| w.combine(c)).collect();
    Subspace::span(w.field(), w.ambient(), &rows)
}

fn lift_from_quotient<F: Field>(w: &Subspace<F>, s: &Subspace<F>) -> Subspace<F> {
    let rows: Vec<_> = s.basis_vecs().iter().map(|c| w.quotient_lift(c)).collect();
    w.add_vectors(&rows)
}

fn split<F: Field>(
    m: &LieModule<F>,
    hints: &[Subspace<F>],
    opts: &CertifyOptions,
) -> Result<(Vec<Subspace<F>>, Vec<Method>)> {
    let f = m.field();
    let n = m.dim();
    if n == 0 {
        return Ok((vec![Subspace::zero(f, 0)], Vec::new()));
    }
    let hint = hints
        .iter()
        .filter(|h| !h.is_zero() && !h.is_full() && m.is_invariant(h))
        .min_by_key(|h| h.dim());
    let witness = match hint {
        Some(h) => h.clone(),
        None => match certify_irreducible(m, opts)? {
            Certificate::Reducible(w) => w,
            Certificate::Irreducible(method) => {
                return Ok((vec![Subspace::zero(f, n), Subspace::full(f, n)], vec![method]))
            }
            Certificate::BudgetExceeded { needed, budget } => {
                let reason = format!("{needed} lines exceed budget {budget}");
                return Ok((
                    vec![Subspace::zero(f, n), Subspace::full(f, n)],
                    vec![Method::Uncertified { reason }],
                ));
            }
            Certificate::Inconclusive(reason) => {
                return Ok((
                    vec![Subspace::zero(f, n), Subspace::full(f, n)],
                    vec![Method::Uncertified { reason }],
                ))
            }
        },
    };
    let sub_hints = hints
        .iter()
        .map(|h| hint_in_sub(&witness, h))
        .collect::<Result<Vec<_>>>()?;
    let quo_hints = hints
        .iter()
        .map(|h| hint_in_quotient(&witness, h))
        .collect::<Result<Vec<_>>>()?;
    let (low, mut methods) = split(&m.restrict(&witness)?, &sub_hints, opts)?;
    let (high, high_methods) = split(&m.quotient(&witness)?, &quo_hints, opts)?;
    let mut chain: Vec<Subspace<F>> = low.iter().map(|s| lift_from_sub(&witness, s)).collect();
    chain.extend(high.iter().skip(1).map(|s| lift_from_quotient(&witness, s)));
    methods.extend(high_methods);
    Ok((chain, methods))
}

fn assemble<F: Field>(
    m: &LieModule<F>,
    chain: Vec<Subspace<F>>,
    methods: Vec<Method>,
) -> Result<CompSeries<F>> {
    let mut factor_dims = Vec::new();
    let mut factor_trivial = Vec::new();
    for w in chain.windows(2) {
        factor_dims.push(w[1].dim() - w[0].dim());
        factor_trivial.push(m.subquotient(&w[0], &w[1])?.is_trivial());
    }
    Ok(CompSeries {
        chain,
        factor_dims,
        factor_trivial,
        methods,
    })
}

/// Composition series; `hints` are known submodules tried as splitting
/// witnesses before any search.
pub fn composition_series<F: Field>(
    m: &LieModule<F>,
    hints: &[Subspace<F>],
    opts: &CertifyOptions,
) -> Result<CompSeries<F>> {
    for h in hints {
        if h.ambient() != m.dim() {
            return Err(Error::Dimension("hint ambient dimension".into()));
        }
    }
    let light = m.lightweight();
    let (chain, methods) = split(&light, hints, opts)?;
    assemble(m, chain, methods)
}

/// Checks a proposed chain: strictly increasing, every term invariant under
/// every listed action, every factor certified irreducible.
pub fn certify_chain<F: Field>(
    m: &LieModule<F>,
    chain: &[Subspace<F>],
    opts: &CertifyOptions,
) -> Result<CompSeries<F>> {
    let n = m.dim();
    if chain.first().map(|s| s.is_zero()) != Some(true)
        || chain.last().map(|s| s.is_full()) != Some(true)
    {
        return Err(Error::Invalid("chain must run from 0 to the module".into()));
    }
    for (i, w) in chain.windows(2).enumerate() {
        if w[0].ambient() != n || w[1].ambient() != n {
            return Err(Error::Dimension("chain ambient dimension".into()));
        }
        if !w[1].contains(&w[0])? || w[0].dim() == w[1].dim() {
            return Err(Error::Invalid(format!("chain not strictly increasing at {i}")));
        }
    }
    for (i, s) in chain.iter().enumerate() {
        if !m.is_invariant_all(s) {
            return Err(Error::NotInvariant(format!("chain term {i}")));
        }
    }
    let light = m.lightweight();
    let mut methods = Vec::new();
    for w in chain.windows(2) {
        let factor = light.subquotient(&w[0], &w[1])?;
        let method = match certify_irreducible(&factor, opts)? {
            Certificate::Irreducible(method) => method,
            Certificate::Reducible(s) => Method::Uncertified {
                reason: format!("factor has a submodule of dimension {}", s.dim()),
            },
            Certificate::BudgetExceeded { needed, budget } => Method::Uncertified {
                reason: format!("{needed} lines exceed budget {budget}"),
            },
            Certificate::Inconclusive(reason) => Method::Uncertified { reason },
        };
        methods.push(method);
    }
    assemble(m, chain.to_vec(), methods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::forms::standard_symplectic;
    use crate::liealg::{skew_adjoint_algebra, MatLieAlg};
    use crate::repmod::module::adjoint_module;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_valid<F: Field>(m: &LieModule<F>, s: &CompSeries<F>) {
        assert_eq!(s.factor_dims.iter().sum::<usize>(), m.dim());
        for c in &s.chain {
            assert!(m.is_invariant_all(c));
        }
        assert!(s.is_certified(), "{:?}", s.methods);
    }

    #[test]
    fn gl3_under_sl3_gf3() {
        let f = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl = MatLieAlg::sl(&f, 3);
        let gl = MatLieAlg::gl(&f, 3);
        let m = adjoint_module(&sl, gl.space(), &mut rng).unwrap();
        let s = composition_series(&m, &[], &CertifyOptions::default()).unwrap();
        check_valid(&m, &s);
        assert_eq!(s.factor_dims, vec![1, 7, 1]);
        assert_eq!(s.chain[1], *MatLieAlg::scalars(&f, 3).space());
        assert_eq!(s.chain[2], *sl.space());
    }

    #[test]
    fn gl2_char2_symplectic_all_trivial() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let l = skew_adjoint_algebra(&standard_symplectic(&f, 2).unwrap()).unwrap();
        let gl = MatLieAlg::gl(&f, 2);
        let m = adjoint_module(&l, gl.space(), &mut rng).unwrap();
        let s = composition_series(&m, &[], &CertifyOptions::default()).unwrap();
        check_valid(&m, &s);
        assert_eq!(s.len(), 4);
        assert_eq!(s.trivial_count(), 4);
    }

    #[test]
    fn gl6_char2_symplectic() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let l = skew_adjoint_algebra(&standard_symplectic(&f, 6).unwrap()).unwrap();
        let gl = MatLieAlg::gl(&f, 6);
        let m = adjoint_module(&l, gl.space(), &mut rng).unwrap();
        let s = composition_series(&m, &[], &CertifyOptions::default()).unwrap();
        check_valid(&m, &s);
        assert_eq!(s.len(), 10);
        assert_eq!(s.nontrivial_dims(), vec![14, 14]);
    }

    #[test]
    fn rational_chain_with_hints() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl = MatLieAlg::sl(&q, 3);
        let gl = MatLieAlg::gl(&q, 3);
        let m = adjoint_module(&sl, gl.space(), &mut rng).unwrap();
        let opts = CertifyOptions::default().avoiding_divisors_of(6);
        let s = composition_series(&m, &[sl.space().clone()], &opts).unwrap();
        check_valid(&m, &s);
        assert_eq!(s.factor_dims, vec![8, 1]);
        let chain = vec![Subspace::zero(&q, 9), sl.space().clone(), Subspace::full(&q, 9)];
        let c = certify_chain(&m, &chain, &opts).unwrap();
        assert!(c.is_certified());
        assert!(matches!(c.methods[0], Method::ModP { .. }));
    }

    #[test]
    fn certify_chain_rejects_bad_chains() {
        let f = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sl = MatLieAlg::sl(&f, 2);
        let gl = MatLieAlg::gl(&f, 2);
        let m = adjoint_module(&sl, gl.space(), &mut rng).unwrap();
        let d = MatLieAlg::diagonal(&f, 2);
        let chain = vec![Subspace::zero(&f, 4), d.space().clone(), Subspace::full(&f, 4)];
        assert!(certify_chain(&m, &chain, &CertifyOptions::default()).is_err());
        let chain = vec![Subspace::zero(&f, 4), Subspace::full(&f, 4)];
        let c = certify_chain(&m, &chain, &CertifyOptions::default()).unwrap();
        assert!(!c.is_certified());
    }
}
