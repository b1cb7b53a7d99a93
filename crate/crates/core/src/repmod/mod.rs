//! Modules for matrix Lie algebras: spinning, irreducibility,
//! composition series, homomorphisms, weights and the standard
//! constructions on `gl(m)`.

pub mod blocks;
pub mod heisenberg;
pub mod hom;
pub mod irreducible;
pub mod module;
pub mod series;
pub mod spin;
pub mod tensor;
pub mod weights;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::liealg::{MatLieAlg, StructureConstants};
use crate::matrix::Mat;

pub use blocks::{block_duality_check, block_module, star_map, Block};
pub use heisenberg::heisenberg_poly_module;
pub use hom::{cyclic_hom_space, find_isomorphism, hom_space, verify_intertwining, IsoSearch};
pub use irreducible::{
    certify_irreducible, certify_irreducible_exhaustive, submodule_lattice, Certificate,
    CertifyOptions, Method, DEFAULT_BUDGET,
};
pub use module::{adjoint_module, natural_module, LieModule};
pub use series::{certify_chain, composition_series, CompSeries};
pub use spin::spin;
pub use tensor::TensorSquare;
pub use weights::{weights, WeightTable};

/// The adjoint module of an abstract algebra.
pub fn structure_adjoint<F: Field>(sc: &StructureConstants<F>) -> Result<LieModule<F>> {
    let f = sc.field();
    let n = sc.dim();
    let acts = (0..n)
        .map(|i| Mat::from_fn(f, n, n, |r, c| sc.bracket_basis(i, c)[r].clone()))
        .collect();
    LieModule::new(f, n, sc.labels().to_vec(), acts)
}

fn simplicity_of<F: Field>(m: &LieModule<F>, opts: &CertifyOptions) -> Result<Certificate<F>> {
    if m.dim() <= 1 {
        return Ok(Certificate::Inconclusive(
            "algebras of dimension at most 1 are not simple".into(),
        ));
    }
    if m.is_trivial() {
        // abelian: every subspace is an ideal
        return Ok(Certificate::Reducible(crate::subspace::Subspace::span(
            m.field(),
            m.dim(),
            &[Mat::identity(m.field(), m.dim()).row(0).to_vec()],
        )));
    }
    certify_irreducible(m, opts)
}

/// Simplicity of `l` as irreducibility of its adjoint module; a
/// `Reducible` witness is a proper nonzero ideal.
pub fn simplicity<F: Field>(l: &MatLieAlg<F>, opts: &CertifyOptions) -> Result<Certificate<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let m = adjoint_module(l, l.space(), &mut rng)?;
    simplicity_of(&m, opts)
}

/// Simplicity of `l / i` for an ideal `i`.
pub fn quotient_simplicity<F: Field>(
    l: &MatLieAlg<F>,
    i: &MatLieAlg<F>,
    opts: &CertifyOptions,
) -> Result<Certificate<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let m = adjoint_module(l, l.space(), &mut rng)?;
    let inner = module::lower_in(l.space(), i.space());
    simplicity_of(&m.quotient(&inner)?, opts)
}

/// Simplicity of an abstract algebra.
pub fn structure_simplicity<F: Field>(
    sc: &StructureConstants<F>,
    opts: &CertifyOptions,
) -> Result<Certificate<F>> {
    simplicity_of(&structure_adjoint(sc)?, opts)
}

pub fn is_simple<F: Field>(l: &MatLieAlg<F>, opts: &CertifyOptions) -> Result<bool> {
    Ok(simplicity(l, opts)?.is_irreducible())
}
