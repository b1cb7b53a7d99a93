//! Irreducibility certificates and submodule search.
//!
//! Over finite fields the primary test is Norton's criterion: for an element
//! `θ` of the enveloping algebra and an irreducible polynomial `p` with
//! `dim ker p(θ) = deg p`, the module is irreducible iff one nonzero vector
//! of `ker p(θ)` spins to everything and one nonzero vector of
//! `ker p(θ)ᵀ` spins to everything under the transposed action. When the
//! search for such a pair fails, the exhaustive line-by-line spin is used
//! within the enumeration budget. Characteristic-0 modules are certified by
//! reduction modulo primes.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::Subspace;

use super::hom::hom_space;
use super::module::LieModule;
use super::spin::{spin, spin_transposed};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// How an irreducibility claim was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Dimension1,
    Norton { degree: usize },
    Exhaustive { lines: u64 },
    ModP { primes: Vec<u32> },
    Uncertified { reason: String },
}

impl Method {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Method::Uncertified { .. })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Dimension1 => write!(f, "dimension-1"),
            Method::Norton { degree } => write!(f, "norton(deg {degree})"),
            Method::Exhaustive { lines } => write!(f, "exhaustive({lines} lines)"),
            Method::ModP { primes } => {
                let p: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                write!(f, "mod-p({})", p.join(","))
            }
            Method::Uncertified { reason } => write!(f, "uncertified({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate<F: Field> {
    Irreducible(Method),
    /// A proper nonzero submodule.
    Reducible(Subspace<F>),
    BudgetExceeded { needed: u128, budget: u64 },
    Inconclusive(String),
}

impl<F: Field> Certificate<F> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Certificate::Irreducible(_))
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub budget: u64,
    pub seed: u64,
    /// Norton attempts before falling back to enumeration.
    pub attempts: usize,
    /// Primes never used for reduction (2 is always skipped).
    pub avoid_primes: Vec<u32>,
    pub primes_needed: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            budget: DEFAULT_BUDGET,
            seed: 0x5eed,
            attempts: 40,
            avoid_primes: vec![2],
            primes_needed: 2,
        }
    }
}

impl CertifyOptions {
    pub fn with_budget(budget: u64) -> Self {
        CertifyOptions {
            budget,
            ..Default::default()
        }
    }

    /// Skips primes dividing `2m`.
    pub fn avoiding_divisors_of(mut self, k: usize) -> Self {
        for p in 2..=k.max(2) as u32 {
            if k as u32 % p == 0 && crate::field::is_prime(p) {
                self.avoid_primes.push(p);
            }
        }
        self
    }
}

/// Number of 1-dimensional subspaces of `F_q^n`, saturating.
pub fn line_count(q: u64, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let q = q as u128;
    match q.checked_pow(n as u32) {
        Some(qn) => (qn - 1) / (q - 1),
        None => u128::MAX,
    }
}

/// The `idx`-th normalized representative (first nonzero entry 1) in a
/// fixed enumeration of the lines of `F^n`.
pub fn line_representative<F: Field>(field: &F, n: usize, mut idx: u64) -> Vec<F::Elem> {
    let q = field.order().expect("finite field");
    let mut v = vec![field.zero(); n];
    for lead in 0..n {
        let block = (q as u128).pow((n - 1 - lead) as u32);
        if (idx as u128) < block {
            v[lead] = field.one();
            let mut t = idx;
            for x in v.iter_mut().skip(lead + 1) {
                *x = field.element(t % q);
                t /= q;
            }
            return v;
        }
        idx -= block as u64;
    }
    panic!("line index out of range");
}

// ---------------------------------------------------------------------------
// small polynomial helpers, coefficients low to high
// ---------------------------------------------------------------------------

fn poly_rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    while r.len() > db {
        let c = f.mul(r.last().expect("nonempty"), &lead_inv);
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bi));
        }
        r.pop();
        while r.len() > 1 && f.is_zero(r.last().expect("nonempty")) {
            r.pop();
        }
        if r.len() == 1 && f.is_zero(&r[0]) && db == 0 {
            break;
        }
    }
    r
}

fn monic_polys<F: Field>(f: &F, degree: usize) -> Vec<Vec<F::Elem>> {
    let q = f.order().expect("finite field");
    let count = q.pow(degree as u32);
    (0..count)
        .map(|mut t| {
            let mut p = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                p.push(f.element(t % q));
                t /= q;
            }
            p.push(f.one());
            p
        })
        .collect()
}

/// Monic irreducible polynomials of degree `1..` while `q^d` stays small.
pub fn small_irreducibles<F: Field>(f: &F) -> Vec<Vec<F::Elem>> {
    let q = f.order().expect("finite field");
    let mut out = Vec::new();
    let mut d = 1;
    while d == 1 || q.pow(d as u32) <= 200 {
        for p in monic_polys(f, d) {
            let reducible = (1..=d / 2).any(|k| {
                monic_polys(f, k)
                    .iter()
                    .any(|g| poly_rem(f, &p, g).iter().all(|x| f.is_zero(x)))
            });
            if !reducible {
                out.push(p);
            }
        }
        d += 1;
        if d > 8 {
            break;
        }
    }
    out
}

/// A random element of the associative algebra generated by `actions`.
fn random_word<F: Field>(f: &F, n: usize, actions: &[Mat<F>], rng: &mut ChaCha8Rng) -> Mat<F> {
    let mut pool: Vec<Mat<F>> = actions.to_vec();
    if pool.is_empty() {
        return Mat::zeros(f, n, n);
    }
    for _ in 0..8 + n / 2 {
        let a = rng.random_range(0..pool.len());
        let b = rng.random_range(0..pool.len());
        let p = pool[a].mul(&pool[b]);
        pool.push(p);
    }
    let mut theta = Mat::zeros(f, n, n);
    for m in &pool {
        theta.add_scaled_assign(m, &f.random(rng));
    }
    theta
}

fn eval_poly<F: Field>(powers: &[Mat<F>], p: &[F::Elem]) -> Mat<F> {
    let mut out = powers[0].scale(&p[0]);
    for (k, c) in p.iter().enumerate().skip(1) {
        out.add_scaled_assign(&powers[k], c);
    }
    out
}

fn is_proper<F: Field>(s: &Subspace<F>) -> bool {
    !s.is_zero() && !s.is_full()
}

/// Norton search. `None` when no attempt was decisive.
pub fn norton<F: Field>(m: &LieModule<F>, opts: &CertifyOptions) -> Option<Certificate<F>> {
    let f = m.field();
    let n = m.dim();
    let polys = small_irreducibles(f);
    let maxdeg = polys.iter().map(|p| p.len() - 1).max().unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.attempts {
        let theta = random_word(f, n, m.spin_actions(), &mut rng);
        let mut powers = vec![Mat::identity(f, n)];
        for _ in 0..maxdeg {
            let next = powers.last().expect("nonempty").mul(&theta);
            powers.push(next);
        }
        for p in &polys {
            let pt = eval_poly(&powers, p);
            let ker = pt.kernel_basis();
            if ker.rows() == 0 {
                continue;
            }
            let v = ker.row(0).to_vec();
            let s = spin(m, std::slice::from_ref(&v));
            if is_proper(&s) {
                return Some(Certificate::Reducible(s));
            }
            // a random kernel vector sometimes exposes a smaller submodule
            if ker.rows() > 1 {
                let c: Vec<_> = (0..ker.rows()).map(|_| f.random(&mut rng)).collect();
                let w = ker.apply_left(&c);
                let s = spin(m, &[w]);
                if is_proper(&s) {
                    return Some(Certificate::Reducible(s));
                }
            }
            let kt = pt.transpose().kernel_basis();
            let w = kt.row(0).to_vec();
            let st = spin_transposed(m, &[w]);
            if is_proper(&st) {
                return Some(Certificate::Reducible(st.annihilator()));
            }
            if ker.rows() == p.len() - 1 {
                return Some(Certificate::Irreducible(Method::Norton {
                    degree: p.len() - 1,
                }));
            }
        }
    }
    None
}

/// Spins every line; the spec-level certification method.
pub fn exhaustive<F: Field>(m: &LieModule<F>, budget: u64) -> Certificate<F> {
    let f = m.field();
    let n = m.dim();
    let q = f.order().expect("finite field");
    let needed = line_count(q, n);
    if needed > budget as u128 {
        return Certificate::BudgetExceeded { needed, budget };
    }
    let lines = needed as u64;
    let hit = (0..lines).into_par_iter().find_map_first(|i| {
        let v = line_representative(f, n, i);
        let s = spin(m, &[v]);
        if s.is_full() {
            None
        } else {
            Some(s)
        }
    });
    match hit {
        Some(s) => Certificate::Reducible(s),
        None => Certificate::Irreducible(Method::Exhaustive { lines }),
    }
}

fn certify_finite<F: Field>(m: &LieModule<F>, opts: &CertifyOptions) -> Certificate<F> {
    if let Some(c) = norton(m, opts) {
        return c;
    }
    exhaustive(m, opts.budget)
}

/// Cheap submodule candidates valid over any field: invariants, `L·V`,
/// spins of basis vectors and of their images, kernels and images of
/// endomorphisms when the module is small.
pub fn witness_search<F: Field>(m: &LieModule<F>) -> Option<Subspace<F>> {
    let f = m.field();
    let n = m.dim();
    let acts = if f.characteristic() == 0 {
        m.actions()
    } else {
        m.spin_actions()
    };
    let stacked = acts
        .iter()
        .fold(Mat::zeros(f, 0, n), |acc, a| acc.vstack(a));
    let fixed = Subspace::kernel(&stacked);
    if is_proper(&fixed) {
        return Some(fixed);
    }
    let images: Vec<Vec<F::Elem>> = acts.iter().flat_map(|a| a.transpose().row_vecs()).collect();
    let lv = Subspace::span(f, n, &images);
    if is_proper(&lv) {
        return Some(lv);
    }
    let id = Mat::identity(f, n);
    for i in 0..n {
        let s = spin(m, &[id.row(i).to_vec()]);
        if is_proper(&s) {
            return Some(s);
        }
    }
    for a in acts {
        for i in 0..n {
            let v = a.column(i);
            if v.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let s = spin(m, &[v]);
            if is_proper(&s) {
                return Some(s);
            }
        }
    }
    if n * n <= 1024 {
        if let Ok(end) = hom_space(m, m) {
            let basis: Vec<Mat<F>> = (0..end.dim())
                .map(|k| Mat::unvec(f, end.basis_vec(k), n, n))
                .collect();
            let mut ts = basis.clone();
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    ts.push(basis[a].add(&basis[b]));
                    ts.push(basis[a].sub(&basis[b]));
                }
            }
            let mut scalars: Vec<F::Elem> = (-3..=3).map(|v| f.from_i64(v)).collect();
            let two = f.from_i64(2);
            scalars.extend([1, -1].iter().filter_map(|&v| f.div(&f.from_i64(v), &two)));
            for t in ts {
                let mut cands = vec![t.clone()];
                for i in 0..n {
                    cands.push(t.sub(&Mat::scalar(f, n, &t[(i, i)])));
                }
                for c in &scalars {
                    cands.push(t.sub(&Mat::scalar(f, n, c)));
                }
                for c in cands {
                    let ker = Subspace::kernel(&c);
                    if is_proper(&ker) {
                        return Some(ker);
                    }
                    let im = Subspace::from_rows(&c.transpose());
                    if is_proper(&im) {
                        return Some(im);
                    }
                }
            }
        }
    }
    None
}

const REDUCTION_PRIMES: [u32; 20] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
];

/// Irreducibility of a characteristic-0 module through reductions modulo
/// primes. A reduction that is irreducible proves irreducibility over the
/// original field: an invariant subspace would meet the integral lattice in
/// an invariant saturated sublattice of the same rank.
pub fn certify_by_reduction<F: Field>(m: &LieModule<F>, opts: &CertifyOptions) -> Method {
    let mut primes = Vec::new();
    for &p in REDUCTION_PRIMES.iter() {
        if opts.avoid_primes.contains(&p) {
            continue;
        }
        let Some(mp) = m.reduce_mod(p) else {
            continue;
        };
        let sub_opts = CertifyOptions {
            seed: opts.seed ^ p as u64,
            ..opts.clone()
        };
        if certify_finite(&mp, &sub_opts).is_irreducible() {
            primes.push(p);
            if primes.len() >= opts.primes_needed {
                return Method::ModP { primes };
            }
        }
    }
    Method::Uncertified {
        reason: format!("irreducible modulo {} of the tried primes", primes.len()),
    }
}

/// Decides irreducibility, or returns a proper nonzero submodule.
pub fn certify_irreducible<F: Field>(
    m: &LieModule<F>,
    opts: &CertifyOptions,
) -> Result<Certificate<F>> {
    if m.dim() == 0 {
        return Err(Error::Invalid("the zero module is not irreducible".into()));
    }
    if m.dim() == 1 {
        return Ok(Certificate::Irreducible(Method::Dimension1));
    }
    if m.field().order().is_some() {
        return Ok(certify_finite(m, opts));
    }
    let by_reduction = certify_by_reduction(m, opts);
    if by_reduction.is_certified() {
        return Ok(Certificate::Irreducible(by_reduction));
    }
    if let Some(w) = witness_search(m) {
        return Ok(Certificate::Reducible(w));
    }
    match by_reduction {
        Method::Uncertified { reason } => Ok(Certificate::Inconclusive(reason)),
        method => Ok(Certificate::Irreducible(method)),
    }
}

/// Only the exhaustive method; refuses infinite fields.
pub fn certify_irreducible_exhaustive<F: Field>(
    m: &LieModule<F>,
    budget: u64,
) -> Result<Certificate<F>> {
    if m.field().order().is_none() {
        return Err(Error::Invalid(
            "exhaustive certification needs a finite field".into(),
        ));
    }
    if m.dim() == 0 {
        return Err(Error::Invalid("the zero module is not irreducible".into()));
    }
    Ok(exhaustive(m, budget))
}

fn key<F: Field>(s: &Subspace<F>) -> Vec<F::Elem> {
    s.basis().data().to_vec()
}

/// Every submodule, ordered by dimension then basis. Finite fields only.
pub fn submodule_lattice<F: Field>(m: &LieModule<F>, budget: u64) -> Result<Vec<Subspace<F>>> {
    let f = m.field();
    let n = m.dim();
    let q = f
        .order()
        .ok_or_else(|| Error::Invalid("submodule lattice needs a finite field".into()))?;
    let needed = line_count(q, n);
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    let cyclic: Vec<Subspace<F>> = (0..needed as u64)
        .into_par_iter()
        .map(|i| spin(m, &[line_representative(f, n, i)]))
        .collect();
    let mut seen: HashSet<Vec<F::Elem>> = HashSet::new();
    let mut all = vec![Subspace::zero(f, n)];
    seen.insert(key(&all[0]));
    for s in cyclic {
        if seen.insert(key(&s)) {
            all.push(s);
        }
    }
    let gens = all.clone();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                let s = a.sum(g)?;
                if seen.insert(key(&s)) {
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| format!("{:?}", a.basis()).cmp(&format!("{:?}", b.basis())))
    });
    Ok(all)
}
