pub mod error;
pub mod field;
pub mod forms;
pub mod liealg;
pub mod matrix;
pub mod repmod;
pub mod subspace;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, FieldVisitor, PrimeField, QuadraticField, Rat, Rationals};
pub use forms::{BilForm, Congruence};
pub use matrix::Mat;
pub use subspace::{EchelonBuilder, Subspace};
pub use liealg::{MatLieAlg, StructureConstants};
pub use repmod::{
    certify_irreducible, composition_series, CertifyOptions, Certificate, CompSeries, LieModule,
    Method,
};
pub use verify::{gram_matrix, run_all, run_case, CaseId, CaseSpec, FormChoice, Report, RunConfig};
