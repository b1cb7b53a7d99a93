//! Matrix Lie algebras inside gl(m), stored as subspaces of vectorized
//! matrices, plus abstract algebras given by structure constants.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::matrix::Mat;
use crate::subspace::{EchelonBuilder, Subspace};

/// `[X, Y] = XY − YX`.
pub fn bracket<F: Field>(x: &Mat<F>, y: &Mat<F>) -> Mat<F> {
    x.bracket(y)
}

/// The permutation with `K vec(X) = vec(X')` for `m×m` matrices.
pub fn commutation_matrix<F: Field>(field: &F, m: usize) -> Mat<F> {
    let mut k = Mat::zeros(field, m * m, m * m);
    for i in 0..m {
        for j in 0..m {
            k[(j * m + i, i * m + j)] = field.one();
        }
    }
    k
}

fn adjoint_operator<F: Field>(a: &Mat<F>, sign: &F::Elem) -> Mat<F> {
    let f = a.field();
    let m = a.rows();
    let id = Mat::identity(f, m);
    let left = a.transpose().kron(&id).mul(&commutation_matrix(f, m));
    let right = id.kron(a);
    left.add(&right.scale(sign))
}

/// `{X : X'A + AX = 0}`.
pub fn skew_adjoint_algebra<F: Field>(a: &Mat<F>) -> Result<MatLieAlg<F>> {
    if !a.is_square() {
        return Err(Error::Dimension("Gram matrix must be square".into()));
    }
    let f = a.field();
    let op = adjoint_operator(a, &f.one());
    MatLieAlg::new(a.rows(), Subspace::kernel(&op), "L(f)")
}

/// `{Y : Y'A − AY = 0}`.
pub fn self_adjoint_module<F: Field>(a: &Mat<F>) -> Result<Subspace<F>> {
    if !a.is_square() {
        return Err(Error::Dimension("Gram matrix must be square".into()));
    }
    let f = a.field();
    Ok(Subspace::kernel(&adjoint_operator(a, &f.neg(&f.one()))))
}

/// `X* = A⁻¹ X' A`.
pub fn adjoint_star<F: Field>(x: &Mat<F>, a: &Mat<F>) -> Result<Mat<F>> {
    Ok(a.inverse()?.mul(&x.transpose()).mul(a))
}

/// Gram matrix of `φ(x, y) = tr(xy)` on the given matrices.
pub fn trace_form_gram<F: Field>(field: &F, mats: &[Mat<F>]) -> Mat<F> {
    let n = mats.len();
    let mut g = Mat::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let t = trace_of_product(&mats[i], &mats[j]);
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

pub fn trace_of_product<F: Field>(x: &Mat<F>, y: &Mat<F>) -> F::Elem {
    let f = x.field();
    let m = x.rows();
    let mut acc = f.zero();
    for i in 0..m {
        for j in 0..m {
            let a = &x[(i, j)];
            if !f.is_zero(a) {
                acc = f.add(&acc, &f.mul(a, &y[(j, i)]));
            }
        }
    }
    acc
}

/// `{x ∈ within : tr(xu) = 0 for all u ∈ u_space}`, both given as subspaces
/// of vectorized `m×m` matrices.
pub fn trace_orthogonal_complement<F: Field>(
    u_space: &Subspace<F>,
    within: &Subspace<F>,
) -> Result<Subspace<F>> {
    if u_space.ambient() != within.ambient() {
        return Err(Error::Dimension("ambient mismatch".into()));
    }
    let f = within.field();
    let us = to_matrices(u_space);
    let ws = to_matrices(within);
    if us.is_empty() {
        return Ok(within.clone());
    }
    let g = Mat::from_fn(f, us.len(), ws.len(), |i, j| trace_of_product(&us[i], &ws[j]));
    let k = g.kernel_basis();
    let rows: Vec<_> = (0..k.rows()).map(|r| within.combine(k.row(r))).collect();
    Ok(Subspace::span(f, within.ambient(), &rows))
}

pub fn to_matrices<F: Field>(s: &Subspace<F>) -> Vec<Mat<F>> {
    (0..s.dim())
        .map(|i| Mat::unvec_square(s.field(), s.basis_vec(i)))
        .collect()
}

pub fn matrices_span<F: Field>(field: &F, m: usize, mats: &[Mat<F>]) -> Subspace<F> {
    let rows: Vec<_> = mats.iter().map(|x| x.vec()).collect();
    Subspace::span(field, m * m, &rows)
}

/// Span of `[u, w]` over basis elements of two subspaces of gl(m).
pub fn bracket_span<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Subspace<F> {
    let f = u.field();
    let us = to_matrices(u);
    let ws = to_matrices(w);
    let mut b = EchelonBuilder::new(f, u.ambient());
    for x in &us {
        for y in &ws {
            b.insert(&x.bracket(y).vec());
        }
    }
    b.to_subspace()
}

/// Alternating `m×m` matrices as a subspace of gl(m).
pub fn alternating_matrices<F: Field>(field: &F, m: usize) -> Subspace<F> {
    let mut mats = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut x = Mat::unit(field, m, i, j);
            x[(j, i)] = field.neg(&field.one());
            mats.push(x);
        }
    }
    matrices_span(field, m, &mats)
}

pub fn symmetric_matrices<F: Field>(field: &F, m: usize) -> Subspace<F> {
    let mut mats = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut x = Mat::unit(field, m, i, j);
            x[(j, i)] = field.one();
            mats.push(x);
        }
    }
    matrices_span(field, m, &mats)
}

/// A Lie subalgebra of gl(m).
#[derive(Clone, Debug, PartialEq)]
pub struct MatLieAlg<F: Field> {
    m: usize,
    space: Subspace<F>,
    label: String,
}

impl<F: Field> MatLieAlg<F> {
    /// Wraps a subspace after checking it is closed under the bracket.
    pub fn new(m: usize, space: Subspace<F>, label: &str) -> Result<Self> {
        if space.ambient() != m * m {
            return Err(Error::Dimension(format!(
                "subspace of F^{} cannot be a subalgebra of gl({m})",
                space.ambient()
            )));
        }
        let alg = MatLieAlg {
            m,
            space,
            label: label.to_string(),
        };
        if !alg.is_closed() {
            return Err(Error::Invalid(format!("{label} is not closed under the bracket")));
        }
        Ok(alg)
    }

    pub fn from_matrices(field: &F, m: usize, mats: &[Mat<F>], label: &str) -> Result<Self> {
        Self::new(m, matrices_span(field, m, mats), label)
    }

    pub fn gl(field: &F, m: usize) -> Self {
        MatLieAlg {
            m,
            space: Subspace::full(field, m * m),
            label: format!("gl({m})"),
        }
    }

    pub fn sl(field: &F, m: usize) -> Self {
        let mut trace_row = Mat::zeros(field, 1, m * m);
        for i in 0..m {
            trace_row[(0, i * m + i)] = field.one();
        }
        MatLieAlg {
            m,
            space: Subspace::kernel(&trace_row),
            label: format!("sl({m})"),
        }
    }

    /// The scalar matrices `s`.
    pub fn scalars(field: &F, m: usize) -> Self {
        MatLieAlg {
            m,
            space: matrices_span(field, m, &[Mat::identity(field, m)]),
            label: "s".into(),
        }
    }

    pub fn diagonal(field: &F, m: usize) -> Self {
        let mats: Vec<_> = (0..m).map(|i| Mat::unit(field, m, i, i)).collect();
        MatLieAlg {
            m,
            space: matrices_span(field, m, &mats),
            label: "diagonal".into(),
        }
    }

    pub fn field(&self) -> &F {
        self.space.field()
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn basis_matrices(&self) -> Vec<Mat<F>> {
        to_matrices(&self.space)
    }

    pub fn element(&self, i: usize) -> Mat<F> {
        Mat::unvec_square(self.field(), self.space.basis_vec(i))
    }

    pub fn contains(&self, x: &Mat<F>) -> bool {
        self.space.contains_vec(&x.vec())
    }

    pub fn coordinates(&self, x: &Mat<F>) -> Option<Vec<F::Elem>> {
        self.space.coordinates(&x.vec())
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Mat<F> {
        let f = self.field();
        let c: Vec<_> = (0..self.dim()).map(|_| f.random(rng)).collect();
        Mat::unvec_square(f, &self.space.combine(&c))
    }

    pub fn is_closed(&self) -> bool {
        let b = self.basis_matrices();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !self.contains(&b[i].bracket(&b[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// `[L, L]`.
    pub fn derived(&self) -> Self {
        let f = self.field();
        let b = self.basis_matrices();
        let mut e = EchelonBuilder::new(f, self.m * self.m);
        'outer: for i in 0..b.len() {
            for j in i + 1..b.len() {
                e.insert(&b[i].bracket(&b[j]).vec());
                if e.dim() == self.dim() {
                    break 'outer;
                }
            }
        }
        MatLieAlg {
            m: self.m,
            space: e.to_subspace(),
            label: format!("[{0},{0}]", self.label),
        }
    }

    /// `L, L⁽¹⁾, L⁽²⁾, …` until the series stabilizes or reaches 0. The last
    /// entry is either 0 or a perfect algebra.
    pub fn derived_series(&self) -> Vec<Self> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().expect("nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = last.derived();
            if next.dim() == last.dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Whether `[self, other] ⊆ self`.
    pub fn is_ideal_of(&self, other: &Self) -> bool {
        other.space.contains(&self.space).unwrap_or(false)
            && self
                .space
                .contains(&bracket_span(&other.space, &self.space))
                .unwrap_or(false)
    }

    /// `{x ∈ L : [x, L] = 0}`.
    pub fn center(&self) -> Self {
        let f = self.field();
        let b = self.basis_matrices();
        let d = b.len();
        let mm = self.m * self.m;
        // coefficient c satisfies Σ c_k [b_k, b_l] = 0 for every l
        let mut sys = Mat::zeros(f, d * mm, d);
        for (l, y) in b.iter().enumerate() {
            for (k, x) in b.iter().enumerate() {
                for (r, v) in x.bracket(y).vec().into_iter().enumerate() {
                    sys[(l * mm + r, k)] = v;
                }
            }
        }
        let k = sys.kernel_basis();
        let rows: Vec<_> = (0..k.rows()).map(|r| self.space.combine(k.row(r))).collect();
        MatLieAlg {
            m: self.m,
            space: Subspace::span(f, mm, &rows),
            label: format!("Z({})", self.label),
        }
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Ok(MatLieAlg {
            m: self.m,
            space: self.space.intersect(&other.space)?,
            label: format!("{}∩{}", self.label, other.label),
        })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.m,
            self.space.sum(&other.space)?,
            &format!("{}+{}", self.label, other.label),
        )
    }

    /// Random elements whose generated subalgebra is all of `L`. The
    /// subalgebra generated by a set is the closure of its span under the
    /// adjoint action of the set.
    pub fn lie_generators<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Mat<F>> {
        let mut gens: Vec<Mat<F>> = Vec::new();
        if self.dim() == 0 {
            return gens;
        }
        for _ in 0..self.dim() + 4 {
            gens.push(self.random_element(rng));
            if (gens.len() >= 2 || self.dim() == 1) && self.closure_dim(&gens) == self.dim() {
                return gens;
            }
        }
        self.basis_matrices()
    }

    /// Dimension of the subalgebra generated by `gens`. In characteristic 0
    /// this is the dimension modulo a large prime, a lower bound that is
    /// exact when it reaches `dim L`.
    fn closure_dim(&self, gens: &[Mat<F>]) -> usize {
        let f = self.field();
        if f.characteristic() == 0 {
            const P: u32 = 1_000_003;
            if let Ok(fp) = PrimeField::new(P) {
                let red: Option<Vec<Mat<PrimeField>>> = gens
                    .iter()
                    .map(|g| {
                        let v = g
                            .data()
                            .iter()
                            .map(|x| f.reduce_mod(x, P))
                            .collect::<Option<Vec<u32>>>()?;
                        Some(Mat::from_fn(&fp, g.rows(), g.cols(), |i, j| v[i * g.cols() + j]))
                    })
                    .collect();
                if let Some(red) = red {
                    // a lower bound; extra generators are harmless
                    return lie_closure(&fp, self.m, &red).dim();
                }
            }
        }
        lie_closure(f, self.m, gens).dim()
    }
}

/// The subalgebra of gl(m) generated by `gens`.
pub fn lie_closure<F: Field>(field: &F, m: usize, gens: &[Mat<F>]) -> Subspace<F> {
    let mut b = EchelonBuilder::new(field, m * m);
    let mut queue = Vec::new();
    for g in gens {
        if let Some(v) = b.insert(&g.vec()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        let x = Mat::unvec_square(field, &v);
        for g in gens {
            if let Some(w) = b.insert(&g.bracket(&x).vec()) {
                queue.push(w);
            }
        }
    }
    b.to_subspace()
}

/// An abstract Lie algebra: `table[i][j]` holds the coordinates of
/// `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<F: Field> {
    field: F,
    labels: Vec<String>,
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> StructureConstants<F> {
    pub fn new(field: &F, labels: Vec<String>, table: Vec<Vec<Vec<F::Elem>>>) -> Self {
        StructureConstants {
            field: field.clone(),
            labels,
            table,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                f.add_scaled(&mut out, &self.table[i][j], &f.mul(a, b));
            }
        }
        out
    }

    /// Structure constants of a matrix algebra in its RREF basis.
    pub fn of_algebra(l: &MatLieAlg<F>) -> Self {
        let b = l.basis_matrices();
        let table = b
            .iter()
            .map(|x| {
                b.iter()
                    .map(|y| l.coordinates(&x.bracket(y)).expect("closed"))
                    .collect()
            })
            .collect();
        let labels = (0..b.len()).map(|i| format!("x{}", i + 1)).collect();
        Self::new(l.field(), labels, table)
    }

    /// `h(n)` with basis `u_1..u_n, v_1..v_n, z`, `[u_i, v_i] = z = −[v_i, u_i]`.
    pub fn heisenberg(field: &F, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("Heisenberg algebra needs n ≥ 1".into()));
        }
        let d = 2 * n + 1;
        let mut table = vec![vec![vec![field.zero(); d]; d]; d];
        for i in 0..n {
            table[i][n + i][2 * n] = field.one();
            table[n + i][i][2 * n] = field.neg(&field.one());
        }
        let mut labels: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        labels.extend((1..=n).map(|i| format!("v{i}")));
        labels.push("z".into());
        Ok(Self::new(field, labels, table))
    }

    /// `L / I` on the coset representatives given by the non-pivot
    /// coordinates of `I` inside `L`.
    pub fn quotient_algebra(l: &MatLieAlg<F>, i: &MatLieAlg<F>) -> Result<Self> {
        Ok(Self::quotient_with_projection(l, i)?.0)
    }

    /// The quotient together with the matrix taking coordinates in `L` to
    /// coordinates in `L / I`.
    pub fn quotient_with_projection(
        l: &MatLieAlg<F>,
        i: &MatLieAlg<F>,
    ) -> Result<(Self, Mat<F>)> {
        let f = l.field();
        if l.m() != i.m() || !i.is_ideal_of(l) {
            return Err(Error::Invalid("not an ideal".into()));
        }
        let icoords: Vec<_> = (0..i.dim())
            .map(|k| l.space().coordinates(i.space().basis_vec(k)).expect("contained"))
            .collect();
        let isub = Subspace::span(f, l.dim(), &icoords);
        let reps = isub.non_pivots();
        let rep_mats: Vec<Mat<F>> = reps
            .iter()
            .map(|&c| {
                let mut e = vec![f.zero(); l.dim()];
                e[c] = f.one();
                Mat::unvec_square(f, &l.space().combine(&e))
            })
            .collect();
        let table = rep_mats
            .iter()
            .map(|x| {
                rep_mats
                    .iter()
                    .map(|y| {
                        let c = l.coordinates(&x.bracket(y)).expect("closed");
                        isub.quotient_coordinates(&c)
                    })
                    .collect()
            })
            .collect();
        let labels = reps.iter().map(|c| format!("x{}", c + 1)).collect();
        let proj = Mat::from_fn(f, reps.len(), l.dim(), |r, c| {
            let mut e = vec![f.zero(); l.dim()];
            e[c] = f.one();
            isub.quotient_coordinates(&e)[r].clone()
        });
        Ok((Self::new(f, labels, table), proj))
    }

    /// Whether the linear map with `map.column(j)` the image of `e_j` is a
    /// bijective bracket-preserving map `self → other`.
    pub fn is_isomorphism(&self, other: &Self, map: &Mat<F>) -> bool {
        let n = self.dim();
        if other.dim() != n || map.rows() != n || map.cols() != n || !map.is_invertible() {
            return false;
        }
        let cols: Vec<_> = (0..n).map(|j| map.column(j)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = map.apply(&self.table[i][j]);
                let rhs = other.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        let f = &self.field;
        self.table
            .iter()
            .all(|row| row.iter().all(|v| v.iter().all(|x| f.is_zero(x))))
    }

    /// Coordinates spanning the center.
    pub fn center_dim(&self) -> usize {
        let f = &self.field;
        let d = self.dim();
        let mut sys = Mat::zeros(f, d * d, d);
        for l in 0..d {
            for k in 0..d {
                for (r, v) in self.table[k][l].iter().enumerate() {
                    sys[(l * d + r, k)] = v.clone();
                }
            }
        }
        d - sys.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::forms::standard_symplectic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn binom2(m: usize) -> usize {
        m * (m - 1) / 2
    }

    #[test]
    fn skew_adjoint_examples() {
        let q = Rationals;
        let j = standard_symplectic(&q, 4).unwrap();
        assert_eq!(skew_adjoint_algebra(&j).unwrap().dim(), binom2(5));
        assert_eq!(
            skew_adjoint_algebra(&Mat::zeros(&q, 3, 3)).unwrap().dim(),
            9
        );
        let f7 = PrimeField::new(7).unwrap();
        let l = skew_adjoint_algebra(&Mat::identity(&f7, 3)).unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(*l.space(), alternating_matrices(&f7, 3));
    }

    #[test]
    fn self_adjoint_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let j = standard_symplectic(&f5, 4).unwrap();
        assert_eq!(self_adjoint_module(&j).unwrap().dim(), 6);
        let m = self_adjoint_module(&Mat::identity(&f5, 3)).unwrap();
        assert_eq!(m, symmetric_matrices(&f5, 3));
        let f2 = PrimeField::new(2).unwrap();
        let j = standard_symplectic(&f2, 4).unwrap();
        assert_eq!(
            self_adjoint_module(&j).unwrap(),
            *skew_adjoint_algebra(&j).unwrap().space()
        );
    }

    #[test]
    fn bracket_examples() {
        let q = Rationals;
        let e12 = Mat::unit(&q, 2, 0, 1);
        let e21 = Mat::unit(&q, 2, 1, 0);
        let h = Mat::unit(&q, 2, 0, 0).sub(&Mat::unit(&q, 2, 1, 1));
        assert_eq!(bracket(&e12, &e21), h);
        assert!(bracket(&e12, &e12).is_zero());
        let f5 = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let x = Mat::random(&f5, 3, 3, &mut rng);
            let y = Mat::random(&f5, 3, 3, &mut rng);
            let z = Mat::random(&f5, 3, 3, &mut rng);
            let j = bracket(&x, &bracket(&y, &z))
                .add(&bracket(&y, &bracket(&z, &x)))
                .add(&bracket(&z, &bracket(&x, &y)));
            assert!(j.is_zero());
        }
    }

    #[test]
    fn derived_series_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let l = skew_adjoint_algebra(&Mat::identity(&f2, 2)).unwrap();
        let dims: Vec<_> = l.derived_series().iter().map(|x| x.dim()).collect();
        assert_eq!(dims, vec![3, 1, 0]);
        let j = standard_symplectic(&f2, 4).unwrap();
        let l = skew_adjoint_algebra(&j).unwrap();
        let dims: Vec<_> = l.derived_series().iter().map(|x| x.dim()).collect();
        assert_eq!(dims, vec![10, 6, 5, 1, 0]);
        let d = MatLieAlg::diagonal(&f2, 3);
        assert_eq!(d.derived().dim(), 0);
    }

    #[test]
    fn trace_form_examples() {
        let q = Rationals;
        let g = trace_form_gram(&q, &[Mat::unit(&q, 2, 0, 1), Mat::unit(&q, 2, 1, 0)]);
        assert_eq!(g[(0, 1)], q.one());
        for m in 2..5 {
            let s = MatLieAlg::scalars(&q, m);
            let gl = MatLieAlg::gl(&q, m);
            let c = trace_orthogonal_complement(s.space(), gl.space()).unwrap();
            assert_eq!(c, *MatLieAlg::sl(&q, m).space());
        }
        let f7 = PrimeField::new(7).unwrap();
        let alt = alternating_matrices(&f7, 3);
        let full = Subspace::full(&f7, 9);
        let c = trace_orthogonal_complement(&alt, &full).unwrap();
        assert_eq!(c, symmetric_matrices(&f7, 3));
    }

    #[test]
    fn adjoint_star_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let i3 = Mat::identity(&f5, 3);
        let x = Mat::random(&f5, 3, 3, &mut rng);
        assert_eq!(adjoint_star(&x, &i3).unwrap(), x.transpose());
        let j = standard_symplectic(&f5, 4).unwrap();
        let l = skew_adjoint_algebra(&j).unwrap();
        let mspace = self_adjoint_module(&j).unwrap();
        for _ in 0..30 {
            let x = Mat::random(&f5, 4, 4, &mut rng);
            let xs = adjoint_star(&x, &j).unwrap();
            assert_eq!(adjoint_star(&xs, &j).unwrap(), x);
            let two_inv = f5.inv(&f5.from_i64(2)).unwrap();
            let skew = x.sub(&xs).scale(&two_inv);
            let sym = x.add(&xs).scale(&two_inv);
            assert!(l.contains(&skew));
            assert!(mspace.contains_vec(&sym.vec()));
        }
        assert!(adjoint_star(&x, &Mat::zeros(&f5, 3, 3)).is_err());
    }

    #[test]
    fn heisenberg_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let h1 = StructureConstants::heisenberg(&f5, 1).unwrap();
        assert_eq!(h1.dim(), 3);
        let h2 = StructureConstants::heisenberg(&f5, 2).unwrap();
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.center_dim(), 1);
        for i in 0..5 {
            assert!(h2.bracket_basis(4, i).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn quotient_examples() {
        let q = Rationals;
        let gl = MatLieAlg::gl(&q, 2);
        let qq = StructureConstants::quotient_algebra(&gl, &gl).unwrap();
        assert_eq!(qq.dim(), 0);
        let s = MatLieAlg::scalars(&q, 2);
        let quo = StructureConstants::quotient_algebra(&gl, &s).unwrap();
        assert_eq!(quo.dim(), 3);
        let sl2 = MatLieAlg::sl(&q, 2);
        let sl = StructureConstants::of_algebra(&sl2);
        let (_, proj) = StructureConstants::quotient_with_projection(&gl, &s).unwrap();
        let section = Mat::from_rows(
            &q,
            sl2.basis_matrices()
                .iter()
                .map(|x| proj.apply(&gl.coordinates(x).unwrap()))
                .collect(),
        )
        .transpose();
        assert!(sl.is_isomorphism(&quo, &section));
        let e12 = Mat::unit(&q, 2, 0, 1);
        assert!(StructureConstants::quotient_algebra(
            &gl,
            &MatLieAlg::from_matrices(&q, 2, &[e12], "n").unwrap()
        )
        .is_err());
        assert_eq!(sl2.dim(), 3);
    }

    #[test]
    fn generators_generate() {
        let f3 = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let j = standard_symplectic(&f3, 6).unwrap();
        let l = skew_adjoint_algebra(&j).unwrap();
        let g = l.lie_generators(&mut rng);
        assert!(g.len() <= 4);
        assert_eq!(lie_closure(&f3, 6, &g), *l.space());
    }
}
