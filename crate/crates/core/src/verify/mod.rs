//! Case runners that recompute the structural claims about `gl(m)` as a
//! module for `L(f)` and record each as a pass/fail claim.

mod char2;
mod classical;
mod common;
mod odd;
mod report;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, FieldVisitor};
use crate::forms::standard_symplectic;
use crate::matrix::Mat;
use crate::repmod::{CertifyOptions, DEFAULT_BUDGET};

pub use common::{binom, block_form_space, diag_form_space, OffDiag};
pub use report::{dims, Claim, FieldInfo, Report, EXACT};

/// The verifiable claim families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    SlSeries,
    SpSo,
    Sl4So6,
    Blocks,
    Heisenberg,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::Thm11,
        CaseId::Thm12,
        CaseId::Thm13,
        CaseId::Thm14,
        CaseId::SlSeries,
        CaseId::SpSo,
        CaseId::Sl4So6,
        CaseId::Blocks,
        CaseId::Heisenberg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::Thm11 => "thm1.1",
            CaseId::Thm12 => "thm1.2",
            CaseId::Thm13 => "thm1.3",
            CaseId::Thm14 => "thm1.4",
            CaseId::SlSeries => "sl-series",
            CaseId::SpSo => "sp-so",
            CaseId::Sl4So6 => "sl4-so6",
            CaseId::Blocks => "blocks",
            CaseId::Heisenberg => "heisenberg",
        }
    }

    /// Whether the default form is alternating.
    pub fn default_alternating(self) -> bool {
        matches!(self, CaseId::Thm11 | CaseId::Thm13 | CaseId::SpSo)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = CaseId::ALL.iter().map(|c| c.name()).collect();
                Error::Invalid(format!("unknown case `{s}`, expected one of {}", names.join(", ")))
            })
    }
}

/// How the bilinear form is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormChoice {
    /// Standard symplectic for the alternating cases, identity otherwise.
    Default,
    Alternating,
    /// Diagonal entries, parsed in the field.
    Diagonal(Vec<String>),
    /// A Gram matrix in the matrix text format.
    Gram(String),
}

impl FormChoice {
    pub fn describe(&self) -> String {
        match self {
            FormChoice::Default => "default".into(),
            FormChoice::Alternating => "alternating".into(),
            FormChoice::Diagonal(d) => format!("diag:{}", d.join(",")),
            FormChoice::Gram(_) => "file".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub id: CaseId,
    pub field: FieldSpec,
    /// Size of the matrices. For `blocks` and `heisenberg` this is `n`.
    pub m: usize,
    pub form: FormChoice,
}

impl CaseSpec {
    pub fn new(id: CaseId, field: FieldSpec, m: usize) -> Self {
        CaseSpec {
            id,
            field,
            m,
            form: FormChoice::Default,
        }
    }

    pub fn with_form(mut self, form: FormChoice) -> Self {
        self.form = form;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u64,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: DEFAULT_BUDGET,
            seed: 0x5eed,
        }
    }
}

/// State handed to every runner.
pub(crate) struct Ctx<F: Field> {
    pub f: F,
    pub spec: CaseSpec,
    pub cfg: RunConfig,
    pub rng: ChaCha8Rng,
}

impl<F: Field> Ctx<F> {
    /// Certification options, skipping reduction primes dividing `2k`.
    pub fn opts(&self, k: usize) -> CertifyOptions {
        CertifyOptions {
            budget: self.cfg.budget,
            seed: self.cfg.seed,
            ..Default::default()
        }
        .avoiding_divisors_of(2 * k.max(1))
    }

    pub fn report(&self) -> Report {
        Report::new(self.spec.id.name(), self.f.spec(), self.spec.m)
    }

    pub fn hypothesis(&self, what: &str) -> Error {
        Error::Hypothesis(format!(
            "{} over {} with m = {}: {what}",
            self.spec.id,
            self.f.spec(),
            self.spec.m
        ))
    }

    /// The Gram matrix selected by the case's form choice.
    pub fn gram(&self) -> Result<Mat<F>> {
        gram_matrix(&self.f, self.spec.m, &self.spec.form, self.spec.id.default_alternating())
            .map_err(|e| match e {
                Error::Hypothesis(msg) => self.hypothesis(&msg),
                other => other,
            })
    }
}

/// The Gram matrix for a form choice; `default_alternating` picks the
/// standard symplectic form over the identity for [`FormChoice::Default`].
pub fn gram_matrix<F: Field>(
    f: &F,
    m: usize,
    form: &FormChoice,
    default_alternating: bool,
) -> Result<Mat<F>> {
    let alternating = || {
        if m == 0 || m % 2 == 1 {
            return Err(Error::Hypothesis(
                "no nondegenerate alternating form in odd dimension".into(),
            ));
        }
        standard_symplectic(f, m)
    };
    match form {
        FormChoice::Default if default_alternating => alternating(),
        FormChoice::Default => Ok(Mat::identity(f, m)),
        FormChoice::Alternating => alternating(),
        FormChoice::Diagonal(d) => {
            if d.len() != m {
                return Err(Error::Invalid(format!(
                    "diagonal form has {} entries, m = {m}",
                    d.len()
                )));
            }
            let d = d.iter().map(|s| f.parse(s.trim())).collect::<Result<Vec<_>>>()?;
            Ok(Mat::diagonal(f, &d))
        }
        FormChoice::Gram(text) => {
            let g = Mat::from_text(f, text)?;
            if g.rows() != m || g.cols() != m {
                return Err(Error::Invalid(format!(
                    "Gram matrix is {}x{}, m = {m}",
                    g.rows(),
                    g.cols()
                )));
            }
            Ok(g)
        }
    }
}

struct Dispatch<'a> {
    spec: &'a CaseSpec,
    cfg: &'a RunConfig,
}

impl FieldVisitor for Dispatch<'_> {
    type Output = Result<Report>;

    fn visit<F: Field>(self, field: F) -> Result<Report> {
        let mut ctx = Ctx {
            f: field,
            spec: self.spec.clone(),
            cfg: self.cfg.clone(),
            rng: ChaCha8Rng::seed_from_u64(self.cfg.seed),
        };
        match self.spec.id {
            CaseId::Thm11 => char2::thm11(&mut ctx),
            CaseId::Thm12 => char2::thm12(&mut ctx),
            CaseId::Thm13 => odd::thm13(&mut ctx),
            CaseId::Thm14 => odd::thm14(&mut ctx),
            CaseId::SlSeries => classical::sl_series(&mut ctx),
            CaseId::SpSo => classical::sp_so(&mut ctx),
            CaseId::Sl4So6 => classical::sl4_so6(&mut ctx),
            CaseId::Blocks => classical::blocks(&mut ctx),
            CaseId::Heisenberg => char2::heisenberg(&mut ctx),
        }
    }
}

/// Runs one case. Hypothesis violations and malformed input are errors;
/// failed claims are recorded in the report.
pub fn run_case(spec: &CaseSpec, cfg: &RunConfig) -> Result<Report> {
    spec.field.visit(Dispatch { spec, cfg })?
}

/// The cases run by `verify:all`: ℚ, GF(2), GF(3), GF(5), GF(7), GF(9) and
/// GF(25) with m ≤ 10 wherever the hypotheses allow.
pub fn default_grid() -> Vec<CaseSpec> {
    let q = FieldSpec::RATIONALS;
    let p = |p: u32| FieldSpec::prime(p).expect("prime");
    let p2 = |p: u32| FieldSpec::quadratic(p).expect("quadratic");
    let odd = [p(3), p(5), p(7), p2(3), p2(5), q];
    let mut out = Vec::new();
    for m in [2, 4, 6, 8, 10] {
        out.push(CaseSpec::new(CaseId::Thm11, p(2), m));
    }
    for m in 2..=10 {
        out.push(CaseSpec::new(CaseId::Thm12, p(2), m));
    }
    for field in odd {
        for m in [2, 4, 6, 8, 10] {
            out.push(CaseSpec::new(CaseId::Thm13, field, m));
        }
        for m in 2..=10 {
            out.push(CaseSpec::new(CaseId::Thm14, field, m));
        }
    }
    for field in [q, p(2), p(3), p(5), p(7), p2(3), p2(5)] {
        for m in 2..=10 {
            if !(m == 2 && field.characteristic == 2) {
                out.push(CaseSpec::new(CaseId::SlSeries, field, m));
            }
        }
    }
    for (field, m) in [(p(13), 4), (p(3), 4), (p(5), 4), (p(5), 8), (p(7), 6), (p2(3), 4), (q, 4), (q, 6)] {
        out.push(CaseSpec::new(CaseId::SpSo, field, m));
    }
    for field in odd {
        out.push(CaseSpec::new(CaseId::Sl4So6, field, 4));
    }
    for field in [p(2), p(3), p(5), p(7), p2(3), p2(5)] {
        for n in 2..=6 {
            out.push(CaseSpec::new(CaseId::Blocks, field, n));
        }
    }
    for (ell, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)] {
        out.push(CaseSpec::new(CaseId::Heisenberg, p(ell), n));
    }
    out
}

/// Runs every case of [`default_grid`].
pub fn run_all(cfg: &RunConfig) -> Vec<(CaseSpec, Result<Report>)> {
    default_grid()
        .into_par_iter()
        .map(|s| {
            let r = run_case(&s, cfg);
            (s, r)
        })
        .collect()
}
