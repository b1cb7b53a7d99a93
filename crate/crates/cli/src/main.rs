//! `liecomp`: build `L(f)` and `M(f)` for a bilinear form, decompose
//! `gl(m)` as an `L(f)`-module, and check the structural claims about it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use liecomp_core::liealg::{self_adjoint_module, skew_adjoint_algebra};
use liecomp_core::repmod::{adjoint_module, hom_space, natural_module, simplicity, weights};
use liecomp_core::verify::dims;
use liecomp_core::{
    composition_series, gram_matrix, run_all, run_case, BilForm, CaseId, CaseSpec,
    Certificate, CertifyOptions, Error, Field, FieldSpec, FieldVisitor, FormChoice, Mat,
    MatLieAlg, Report, RunConfig, Subspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "liecomp", version, about = "Composition series of gl(m) under L(f)")]
struct Cli {
    /// `Q`, a prime `p`, or `p^2`.
    #[arg(long, default_value = "Q")]
    field: String,

    /// Matrix size.
    #[arg(long)]
    m: Option<usize>,

    /// `alternating`, `diag:d1,...,dm` or `file:PATH`.
    #[arg(long)]
    form: Option<String>,

    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Cap on the number of lines enumerated by exhaustive searches.
    #[arg(long, env = "LIECOMP_BUDGET")]
    budget: Option<u64>,

    /// Seed for the randomized searches.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,

    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// `verify:<id>`, `verify:all`, `algebra`, `series`, `weights` or `hom`.
    command: String,
}

/// Exit status and rendered output.
struct Outcome {
    ok: bool,
    text: String,
}

enum Failure {
    Usage(String),
    Parse(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Parse(msg),
            Error::Hypothesis(_)
            | Error::Invalid(_)
            | Error::InvalidField(_)
            | Error::Dimension(_) => Failure::Usage(e.to_string()),
            other => Failure::Run(other.to_string()),
        }
    }
}

fn read_form(spec: Option<&str>) -> Result<FormChoice, Failure> {
    let Some(spec) = spec else {
        return Ok(FormChoice::Default);
    };
    if spec == "alternating" {
        return Ok(FormChoice::Alternating);
    }
    if let Some(d) = spec.strip_prefix("diag:") {
        return Ok(FormChoice::Diagonal(d.split(',').map(str::to_string).collect()));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return std::fs::read_to_string(path)
            .map(FormChoice::Gram)
            .map_err(|e| Failure::Usage(format!("{path}: {e}")));
    }
    Err(Failure::Usage(format!(
        "unknown form `{spec}`, expected alternating, diag:d1,...,dm or file:PATH"
    )))
}

fn render_report(r: &Report, output: Output) -> String {
    match output {
        Output::Text => r.to_text(),
        Output::Json => r.to_json() + "\n",
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let field: FieldSpec = cli.field.parse()?;
    let form = read_form(cli.form.as_deref())?;
    let mut cfg = RunConfig {
        seed: cli.seed,
        ..RunConfig::default()
    };
    if let Some(b) = cli.budget {
        cfg.budget = b;
    }
    let need_m = || cli.m.ok_or_else(|| Failure::Usage(format!("`{}` needs --m", cli.command)));
    if cli.command == "verify:all" {
        let results = run_all(&cfg);
        let ok = results.iter().all(|(_, r)| matches!(r, Ok(r) if r.pass));
        let text = match cli.output {
            Output::Text => {
                let mut out = String::new();
                for (spec, r) in &results {
                    match r {
                        Ok(r) => out.push_str(&r.to_text()),
                        Err(e) => {
                            let _ = writeln!(out, "case {} over {} with m = {}: error: {e}", spec.id, spec.field, spec.m);
                        }
                    }
                }
                let passed = results.iter().filter(|(_, r)| matches!(r, Ok(r) if r.pass)).count();
                let _ = writeln!(out, "{passed}/{} cases pass", results.len());
                out
            }
            Output::Json => {
                let items: Vec<Value> = results
                    .iter()
                    .map(|(spec, r)| match r {
                        Ok(r) => serde_json::to_value(r).expect("report serializes"),
                        Err(e) => json!({
                            "case": spec.id.name(),
                            "field": spec.field.to_string(),
                            "m": spec.m,
                            "error": e.to_string(),
                            "pass": false,
                        }),
                    })
                    .collect();
                serde_json::to_string_pretty(&items).expect("json") + "\n"
            }
        };
        return Ok(Outcome { ok, text });
    }
    if let Some(id) = cli.command.strip_prefix("verify:") {
        let id: CaseId = id.parse()?;
        let spec = CaseSpec::new(id, field, need_m()?).with_form(form);
        let report = run_case(&spec, &cfg)?;
        return Ok(Outcome {
            ok: report.pass,
            text: render_report(&report, cli.output),
        });
    }
    let command = match cli.command.as_str() {
        "algebra" => Command::Algebra,
        "series" => Command::Series,
        "weights" => Command::Weights,
        "hom" => Command::Hom,
        other => {
            return Err(Failure::Usage(format!(
                "unknown command `{other}`, expected verify:<id>, verify:all, algebra, series, weights or hom"
            )))
        }
    };
    let job = Job {
        command,
        m: need_m()?,
        form,
        cfg,
    };
    let value = field.visit(job)??;
    let ok = value.get("ok").and_then(Value::as_bool).unwrap_or(true);
    let text = match cli.output {
        Output::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        Output::Text => text_of(&value),
    };
    Ok(Outcome { ok, text })
}

/// Flattens a JSON object into `key: value` lines.
fn text_of(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            match x {
                Value::String(s) => {
                    let _ = writeln!(out, "{k}: {s}");
                }
                Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
                    let s: Vec<String> = items.iter().map(|i| i.to_string()).collect();
                    let _ = writeln!(out, "{k}: {}", s.join(" "));
                }
                Value::Array(items) => {
                    let _ = writeln!(out, "{k}:");
                    for i in items {
                        let _ = writeln!(out, "  {i}");
                    }
                }
                other => {
                    let _ = writeln!(out, "{k}: {other}");
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Command {
    Algebra,
    Series,
    Weights,
    Hom,
}

struct Job {
    command: Command,
    m: usize,
    form: FormChoice,
    cfg: RunConfig,
}

impl Job {
    fn opts(&self) -> CertifyOptions {
        CertifyOptions {
            budget: self.cfg.budget,
            seed: self.cfg.seed,
            ..Default::default()
        }
        .avoiding_divisors_of(2 * self.m.max(1))
    }
}

fn cert_text<F: Field>(c: &Result<Certificate<F>, Error>) -> String {
    match c {
        Ok(Certificate::Irreducible(m)) => format!("yes ({m})"),
        Ok(Certificate::Reducible(s)) => format!("no (invariant subspace of dim {})", s.dim()),
        Ok(Certificate::BudgetExceeded { needed, budget }) => {
            format!("undecided (need {needed} lines, budget {budget})")
        }
        Ok(Certificate::Inconclusive(r)) => format!("undecided ({r})"),
        Err(e) => format!("error: {e}"),
    }
}

impl FieldVisitor for Job {
    type Output = Result<Value, Error>;

    fn visit<F: Field>(self, f: F) -> Result<Value, Error> {
        let gram = gram_matrix(&f, self.m, &self.form, false)?;
        let form = BilForm::classify(&gram)?;
        let l = skew_adjoint_algebra(&gram)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        let mm = self.m * self.m;
        match self.command {
            Command::Algebra => {
                let mspace = self_adjoint_module(&gram)?;
                let ds: Vec<usize> = l.derived_series().iter().map(MatLieAlg::dim).collect();
                let sl = MatLieAlg::sl(&f, self.m);
                Ok(json!({
                    "field": f.spec().to_string(),
                    "m": self.m,
                    "form": {
                        "symmetric": form.symmetric,
                        "alternating": form.alternating,
                        "nondegenerate": form.nondegenerate,
                    },
                    "dim L(f)": l.dim(),
                    "dim M(f)": mspace.dim(),
                    "derived series dims": ds,
                    "dim center": l.center().dim(),
                    "L(f) in sl(m)": sl.space().contains(l.space())?,
                    "L(f) simple": cert_text(&simplicity(&l, &self.opts())),
                }))
            }
            Command::Series => {
                let module = adjoint_module(&l, &Subspace::full(&f, mm), &mut rng)?;
                let s = composition_series(&module, &[], &self.opts())?;
                let factors: Vec<Value> = (0..s.len())
                    .map(|i| {
                        json!({
                            "dim": s.factor_dims[i],
                            "trivial": s.factor_trivial[i],
                            "method": s.methods[i].to_string(),
                        })
                    })
                    .collect();
                Ok(json!({
                    "field": f.spec().to_string(),
                    "m": self.m,
                    "chain dims": dims(&s.dims()),
                    "factor count": s.len(),
                    "factors": factors,
                    "ok": s.is_certified(),
                }))
            }
            Command::Weights => {
                let h: Vec<Mat<F>> = {
                    let diag = MatLieAlg::diagonal(&f, self.m);
                    l.intersect(&diag)?.basis_matrices()
                };
                if h.is_empty() {
                    return Err(Error::Hypothesis(
                        "L(f) contains no nonzero diagonal matrices for this form".into(),
                    ));
                }
                let labels: Vec<String> = (1..=h.len()).map(|i| format!("h{i}")).collect();
                let natural = natural_module(&l, &mut rng)?;
                let on_v: Vec<Mat<F>> = h.clone();
                let id = Mat::identity(&f, self.m);
                let on_gl: Vec<Mat<F>> = h
                    .iter()
                    .map(|x| id.kron(x).sub(&x.transpose().kron(&id)))
                    .collect();
                let table = |n: usize, acts: &[Mat<F>]| -> Result<Vec<Value>, Error> {
                    let t = weights(&f, n, &labels, acts)?;
                    Ok(t.summary(&f)
                        .into_iter()
                        .map(|(v, k)| json!({"weight": v, "multiplicity": k}))
                        .collect())
                };
                Ok(json!({
                    "field": f.spec().to_string(),
                    "m": self.m,
                    "H": labels,
                    "weights on V": table(natural.dim(), &on_v)?,
                    "weights on gl(m)": table(mm, &on_gl)?,
                }))
            }
            Command::Hom => {
                let module = adjoint_module(&l, &Subspace::full(&f, mm), &mut rng)?;
                let s = composition_series(&module, &[], &self.opts())?;
                let light = module.lightweight();
                let factors = s
                    .chain
                    .windows(2)
                    .map(|w| light.subquotient(&w[0], &w[1]))
                    .collect::<Result<Vec<_>, Error>>()?;
                let mut rows = Vec::new();
                for (i, a) in factors.iter().enumerate() {
                    let row: Vec<Value> = factors
                        .iter()
                        .map(|b| match hom_space(a, b) {
                            Ok(h) => json!(h.dim()),
                            Err(_) => json!(null),
                        })
                        .collect();
                    rows.push(json!({"factor": i + 1, "dim": a.dim(), "hom dims": row}));
                }
                Ok(json!({
                    "field": f.spec().to_string(),
                    "m": self.m,
                    "factor dims": dims(&s.factor_dims),
                    "Hom(factor i, factor j)": rows,
                }))
            }
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| write_out(cli.out.as_deref(), &o.text).map(|_| o.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("liecomp: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            match cli.form.as_deref().and_then(|f| f.strip_prefix("file:")) {
                Some(path) => eprintln!("liecomp: {path}: {msg}"),
                None => eprintln!("liecomp: {msg}"),
            }
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("liecomp: {msg}");
            ExitCode::from(1)
        }
    }
}
