//! Oracles and randomized property checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use liecomp_core::liealg::{self_adjoint_module, skew_adjoint_algebra};
use liecomp_core::repmod::{hom_space, spin};
use liecomp_core::{Field, LieModule, Mat, Subspace};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn random_vec<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n).map(|_| f.random(rng)).collect()
}

pub fn random_invertible<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Mat<F> {
    loop {
        let p = Mat::random(f, n, n, rng);
        if p.is_invertible() {
            return p;
        }
    }
}

/// A random nondegenerate Gram matrix, alternating with probability 1/2
/// when `m` is even, symmetric otherwise.
pub fn random_form<F: Field>(f: &F, m: usize, rng: &mut ChaCha8Rng) -> Mat<F> {
    let alternating = m % 2 == 0 && rng.random_bool(0.5);
    loop {
        let a = Mat::random(f, m, m, rng);
        let g = if alternating {
            let mut s = a.sub(&a.transpose());
            for i in 0..m {
                s[(i, i)] = f.zero();
            }
            s
        } else {
            let mut s = a.add(&a.transpose());
            for i in 0..m {
                s[(i, i)] = f.random(rng);
            }
            s
        };
        if g.is_invertible() {
            return g;
        }
    }
}

pub fn random_in<F: Field>(s: &Subspace<F>, m: usize, rng: &mut ChaCha8Rng) -> Mat<F> {
    let f = s.field();
    let c = random_vec(f, s.dim(), rng);
    Mat::unvec(f, &s.combine(&c), m, m)
}

fn trace<F: Field>(x: &Mat<F>) -> F::Elem {
    let f = x.field();
    (0..x.rows()).fold(f.zero(), |acc, i| f.add(&acc, &x[(i, i)]))
}

fn outer<F: Field>(f: &F, w: &[F::Elem], v: &[F::Elem]) -> Mat<F> {
    Mat::from_fn(f, w.len(), v.len(), |i, j| f.mul(&w[i], &v[j]))
}

fn kron_vec<F: Field>(f: &F, v: &[F::Elem], w: &[F::Elem]) -> Vec<F::Elem> {
    v.iter()
        .flat_map(|a| w.iter().map(move |b| f.mul(a, b)))
        .collect()
}

/// `tr` is invariant, and `f` is invariant under `L(f)` with `M(f) ⟂ L(f)`.
pub fn phi_invariance<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> Check {
    let m = rng.random_range(2..=4);
    let (x, y, z) = (
        Mat::random(f, m, m, rng),
        Mat::random(f, m, m, rng),
        Mat::random(f, m, m, rng),
    );
    let lhs = f.add(
        &trace(&z.bracket(&x).mul(&y)),
        &trace(&x.mul(&z.bracket(&y))),
    );
    ensure(f.is_zero(&lhs), || "tr([z,x]y) + tr(x[z,y]) ≠ 0".into())?;
    let g = random_form(f, m, rng);
    let l = skew_adjoint_algebra(&g).map_err(|e| e.to_string())?;
    let mm = self_adjoint_module(&g).map_err(|e| e.to_string())?;
    if f.characteristic() == 2 {
        ensure(l.space() == &mm, || "L ≠ M in characteristic 2".into())?;
    } else {
        ensure(l.dim() + mm.dim() == m * m, || "dim L + dim M ≠ m²".into())?;
    }
    let a = l.random_element(rng);
    ensure(a.transpose().mul(&g).add(&g.mul(&a)).is_zero(), || {
        format!("x'G + Gx ≠ 0 for G = {g:?}")
    })?;
    let b = random_in(&mm, m, rng);
    ensure(b.transpose().mul(&g) == g.mul(&b), || "y'G ≠ Gy".into())?;
    ensure(f.characteristic() == 2 || f.is_zero(&trace(&a.mul(&b))), || {
        "tr(xy) ≠ 0 for x ∈ L, y ∈ M".into()
    })
}

/// `Γ(v⊗w) = w vᵗ G`, `Ω(v⊗w) = vᵗ G w`, and both intertwine `L(f)`.
pub fn gamma_omega_equivariance<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> Check {
    let m = rng.random_range(2..=4);
    let g = random_form(f, m, rng);
    let ts = liecomp_core::repmod::TensorSquare::new(&g, rng).map_err(|e| e.to_string())?;
    let v = random_vec(f, m, rng);
    let w = random_vec(f, m, rng);
    let t = kron_vec(f, &v, &w);
    let gv = g.transpose().apply(&v);
    ensure(ts.gamma_of(&t) == outer(f, &w, &gv), || "Γ(v⊗w) ≠ w vᵗG".into())?;
    ensure(ts.omega_of(&t) == f.dot(&gv, &w), || "Ω(v⊗w) ≠ vᵗGw".into())?;
    let x = ts.algebra.random_element(rng);
    let xv = x.apply(&v);
    let xw = x.apply(&w);
    let xt: Vec<F::Elem> = kron_vec(f, &xv, &w)
        .iter()
        .zip(kron_vec(f, &v, &xw))
        .map(|(a, b)| f.add(a, &b))
        .collect();
    ensure(ts.gamma_of(&xt) == x.bracket(&ts.gamma_of(&t)), || "Γ(x·t) ≠ [x, Γ(t)]".into())?;
    ensure(f.is_zero(&ts.omega_of(&xt)), || "Ω(x·t) ≠ 0".into())?;
    // a general tensor, through the Kronecker form of the action
    let u = random_vec(f, m * m, rng);
    let id = Mat::identity(f, m);
    let act = x.kron(&id).add(&id.kron(&x));
    let xu = act.apply(&u);
    ensure(ts.gamma_of(&xu) == x.bracket(&ts.gamma_of(&u)), || "Γ not equivariant on V⊗V".into())?;
    ensure(f.is_zero(&ts.omega_of(&xu)), || "Ω not invariant on V⊗V".into())
}

fn is_rref<F: Field>(b: &Mat<F>) -> bool {
    let f = b.field();
    let mut last = None;
    for r in 0..b.rows() {
        let Some(p) = (0..b.cols()).find(|&c| !f.is_zero(&b[(r, c)])) else {
            return false;
        };
        if last.is_some_and(|l| p <= l) || !f.is_one(&b[(r, p)]) {
            return false;
        }
        if (0..b.rows()).any(|o| o != r && !f.is_zero(&b[(o, p)])) {
            return false;
        }
        last = Some(p);
    }
    true
}

/// The echelon basis of a row space depends only on the space.
pub fn rref_canonicity<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> Check {
    let rows = rng.random_range(1..=5);
    let cols = rng.random_range(1..=6);
    let mut a = Mat::random(f, rows, cols, rng);
    if rng.random_bool(0.3) && rows > 1 {
        // force a dependency
        let r0 = a.row(0).to_vec();
        a.row_mut(rows - 1).clone_from_slice(&r0);
    }
    let p = random_invertible(f, rows, rng);
    let s1 = Subspace::from_rows(&a);
    let s2 = Subspace::from_rows(&p.mul(&a));
    ensure(s1 == s2, || "row spaces of A and PA differ".into())?;
    ensure(is_rref(s1.basis()), || format!("basis not in reduced echelon form: {:?}", s1.basis()))?;
    ensure(s1.dim() == a.rank(), || "dim ≠ rank".into())?;
    ensure((0..rows).all(|r| s1.contains_vec(a.row(r))), || "a row is missing".into())?;
    let mut shuffled = a.row_vecs();
    shuffled.reverse();
    ensure(Subspace::span(f, cols, &shuffled) == s1, || "row order changes the basis".into())
}

pub fn random_module<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> LieModule<F> {
    let n = rng.random_range(1..=5);
    let k = rng.random_range(1..=3);
    let split = rng.random_range(0..=n);
    let acts = (0..k)
        .map(|_| {
            let mut a = Mat::random(f, n, n, rng);
            // lower-left block zero keeps the first `split` coordinates invariant
            for r in split..n {
                for c in 0..split {
                    a[(r, c)] = f.zero();
                }
            }
            a
        })
        .collect();
    LieModule::from_actions(f, n, acts).expect("square actions")
}

/// Spinning returns the smallest invariant subspace containing the seeds.
pub fn spin_idempotence<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> Check {
    let m = random_module(f, rng);
    let v = random_vec(f, m.dim(), rng);
    let s = spin(&m, std::slice::from_ref(&v));
    ensure(m.is_invariant_all(&s), || "spin is not invariant".into())?;
    ensure(s.contains_vec(&v), || "spin misses its seed".into())?;
    ensure(spin(&m, &s.basis_vecs()) == s, || "spin is not idempotent".into())?;
    // any invariant subspace through v contains the spin
    let mut span = vec![v.clone()];
    let mut k = 0;
    while k < span.len() && k < 64 {
        for a in m.actions() {
            span.push(a.apply(&span[k]));
        }
        k += 1;
    }
    let naive = Subspace::span(f, m.dim(), &span);
    ensure(naive.contains(&s).unwrap_or(false), || "spin exceeds the cyclic span".into())
}

/// Every basis element of `Hom_L(M₁, M₂)` intertwines, and a known
/// conjugating matrix is found.
pub fn hom_intertwining<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> Check {
    let m1 = random_module(f, rng);
    let n = m1.dim();
    let p = random_invertible(f, n, rng);
    let pinv = p.inverse().map_err(|e| e.to_string())?;
    let m2 = if rng.random_bool(0.5) {
        LieModule::from_actions(f, n, m1.actions().iter().map(|a| p.mul(a).mul(&pinv)).collect())
            .expect("square")
    } else {
        random_module(f, rng)
    };
    let k = m1.num_generators().min(m2.num_generators());
    let m1 = LieModule::from_actions(f, n, m1.actions()[..k].to_vec()).expect("square");
    let m2 = LieModule::from_actions(f, m2.dim(), m2.actions()[..k].to_vec()).expect("square");
    let h = hom_space(&m1, &m2).map_err(|e| e.to_string())?;
    for i in 0..h.dim() {
        let t = Mat::unvec(f, h.basis_vec(i), m2.dim(), n);
        let ok = m1
            .actions()
            .iter()
            .zip(m2.actions())
            .all(|(a1, a2)| t.mul(a1) == a2.mul(&t));
        ensure(ok, || "hom basis element does not intertwine".into())?;
    }
    let conj = m2.dim() == n
        && m1
            .actions()
            .iter()
            .zip(m2.actions())
            .all(|(a1, a2)| p.mul(a1) == a2.mul(&p));
    ensure(!conj || h.contains_vec(&p.vec()), || "conjugating matrix not in Hom".into())
}

/// Brute-force lattice over `GF(p)` with `pⁿ ≤ 32`: vectors are integers in
/// base `p`, subspaces are bitmasks of members.
pub struct BruteLattice {
    p: u32,
    n: usize,
    all: Vec<u32>,
}

impl BruteLattice {
    pub fn new(p: u32, n: usize) -> Self {
        assert!((p as usize).pow(n as u32) <= 32);
        let mut b = BruteLattice { p, n, all: Vec::new() };
        b.all = b.enumerate();
        b
    }

    fn size(&self) -> usize {
        (self.p as usize).pow(self.n as u32)
    }

    pub fn encode(&self, v: &[u32]) -> usize {
        v.iter().rev().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }

    pub fn decode(&self, mut i: usize) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = (i % self.p as usize) as u32;
                i /= self.p as usize;
                d
            })
            .collect()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    fn scale(&self, c: u32, a: usize) -> usize {
        let s: Vec<u32> = self.decode(a).iter().map(|u| u * c % self.p).collect();
        self.encode(&s)
    }

    fn close(&self, mut members: u32) -> u32 {
        loop {
            let mut next = members;
            for a in 0..self.size() {
                if members >> a & 1 == 0 {
                    continue;
                }
                for b in 0..self.size() {
                    if members >> b & 1 == 1 {
                        next |= 1 << self.add(a, b);
                    }
                }
                for c in 1..self.p {
                    next |= 1 << self.scale(c, a);
                }
            }
            if next == members {
                return members;
            }
            members = next;
        }
    }

    /// Every subspace, as a member bitmask.
    pub fn subspaces(&self) -> &[u32] {
        &self.all
    }

    fn enumerate(&self) -> Vec<u32> {
        let mut seen: HashSet<u32> = HashSet::new();
        let mut todo = vec![1u32];
        seen.insert(1);
        while let Some(s) = todo.pop() {
            for v in 0..self.size() {
                if s >> v & 1 == 0 {
                    let t = self.close(s | 1 << v);
                    if seen.insert(t) {
                        todo.push(t);
                    }
                }
            }
        }
        let mut out: Vec<u32> = seen.into_iter().collect();
        out.sort_by_key(|s| (s.count_ones(), *s));
        out
    }

    fn apply(&self, a: &[Vec<u32>], v: usize) -> usize {
        let x = self.decode(v);
        let y: Vec<u32> = a
            .iter()
            .map(|row| row.iter().zip(&x).map(|(r, c)| r * c).sum::<u32>() % self.p)
            .collect();
        self.encode(&y)
    }

    pub fn is_invariant(&self, s: u32, actions: &[Vec<Vec<u32>>]) -> bool {
        (0..self.size())
            .filter(|v| s >> v & 1 == 1)
            .all(|v| actions.iter().all(|a| s >> self.apply(a, v) & 1 == 1))
    }

    pub fn full(&self) -> u32 {
        if self.size() == 32 {
            u32::MAX
        } else {
            (1u32 << self.size()) - 1
        }
    }

    /// Irreducible iff no invariant subspace other than 0 and the whole space.
    pub fn irreducible(&self, actions: &[Vec<Vec<u32>>]) -> bool {
        let full = self.full();
        self.all
            .iter()
            .copied()
            .filter(|&s| s != 1 && s != full)
            .all(|s| !self.is_invariant(s, actions))
    }

    /// Member bitmask of the span of `vectors`.
    pub fn span(&self, vectors: &[Vec<u32>]) -> u32 {
        self.close(vectors.iter().fold(1u32, |acc, v| acc | 1 << self.encode(v)))
    }
}
