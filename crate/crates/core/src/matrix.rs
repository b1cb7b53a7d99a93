//! Dense exact matrices, row-major.

use std::fmt;
use std::ops::{Index, IndexMut};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};

#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub matrix: Mat<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> Index<(usize, usize)> for Mat<F> {
    type Output = F::Elem;
    fn index(&self, (r, c): (usize, usize)) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F::Elem {
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// The matrix unit `e_ij` (0-based indices).
    pub fn unit(field: &F, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m[(i, j)] = field.one();
        m
    }

    pub fn scalar(field: &F, n: usize, c: &F::Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(field: &F, d: &[F::Elem]) -> Self {
        let mut m = Self::zeros(field, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_fn(
        field: &F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(field, rows, cols)
    }

    /// Like [`Mat::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_with_cols(field: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    /// Integer entries, mapped into the field.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, v)
    }

    pub fn random<R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field, rows, cols, |_, _| field.random(rng))
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    fn check_same_shape(&self, other: &Self) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, other: &Self, c: &F::Elem) {
        self.check_same_shape(other);
        let f = self.field.clone();
        f.add_scaled(&mut self.data, &other.data, c);
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !f.is_zero(a) {
                    f.add_scaled(dst, other.row(k), a);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        (0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.rows, v.len(), "apply_left shape mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, c) in v.iter().enumerate() {
            if !f.is_zero(c) {
                f.add_scaled(&mut out, self.row(r), c);
            }
        }
        out
    }

    /// `XY − YX`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        let f = &self.field;
        (0..self.rows).fold(f.zero(), |acc, i| f.add(&acc, &self[(i, i)]))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let (p, q) = (other.rows, other.cols);
        let mut out = Self::zeros(f, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        out[(i * p + k, j * q + l)] = f.mul(a, &other[(k, l)]);
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(&self.field, rows.len(), cols.len(), |r, c| {
            self[(r0 + r, c0 + c)].clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows_with_cols(&self.field, rows, self.cols)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    /// Column-major vectorization: entry `(i, j)` goes to position `j·rows + i`.
    pub fn vec(&self) -> Vec<F::Elem> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self[(i, j)].clone());
            }
        }
        v
    }

    /// Inverse of [`Mat::vec`].
    pub fn unvec(field: &F, v: &[F::Elem], rows: usize, cols: usize) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self::from_fn(field, rows, cols, |i, j| v[j * rows + i].clone())
    }

    /// Square matrix from a vector of length `n²`.
    pub fn unvec_square(field: &F, v: &[F::Elem]) -> Self {
        let n = (v.len() as f64).sqrt().round() as usize;
        assert_eq!(n * n, v.len(), "length is not a square");
        Self::unvec(field, v, n, n)
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let (rank, pivots) = m.rref_in_place();
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    /// In-place Gauss–Jordan; returns rank and pivot columns. Rows beyond the
    /// rank are zero.
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let f = self.field.clone();
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !f.is_zero(&self.data[i * nc + c])) else {
                continue;
            };
            if p != r {
                for k in 0..nc {
                    self.data.swap(p * nc + k, r * nc + k);
                }
            }
            let inv = f.inv(&self.data[r * nc + c]).expect("nonzero pivot");
            f.scale_in_place(&mut self.data[r * nc + c..(r + 1) * nc], &inv);
            let pivot_row: Vec<F::Elem> = self.data[r * nc + c..(r + 1) * nc].to_vec();
            for i in 0..nr {
                if i == r {
                    continue;
                }
                let x = &self.data[i * nc + c];
                if f.is_zero(x) {
                    continue;
                }
                let neg = f.neg(x);
                f.add_scaled(&mut self.data[i * nc + c..(i + 1) * nc], &pivot_row, &neg);
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : Mv = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Mat<F> {
        let f = &self.field;
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = f.neg(&matrix[(i, free)]);
            }
            out.push(v);
        }
        Mat::from_rows_with_cols(f, out, self.cols)
    }

    pub fn det(&self) -> F::Elem {
        assert!(self.is_square(), "det of non-square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(&m[(i, c)])) else {
                return f.zero();
            };
            if p != c {
                for k in 0..n {
                    m.data.swap(p * n + k, c * n + k);
                }
                det = f.neg(&det);
            }
            let piv = m[(c, c)].clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            let pivot_row: Vec<F::Elem> = m.row(c).to_vec();
            for i in c + 1..n {
                let x = m[(i, c)].clone();
                if f.is_zero(&x) {
                    continue;
                }
                let factor = f.neg(&f.mul(&x, &inv));
                f.add_scaled(m.row_mut(i), &pivot_row, &factor);
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.matrix.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// `A' = −A` with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && *self == self.transpose().neg()
            && (0..self.rows).all(|i| self.field.is_zero(&self[(i, i)]))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Serializes in the matrix text format: a `rows cols field` header
    /// followed by one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}", self.rows, self.cols, self.field.spec());
        for r in 0..self.rows {
            s.push('\n');
            let line: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            s.push_str(&line.join(" "));
        }
        s
    }

    /// Parses the matrix text format. The header's field must match `field`.
    pub fn from_text(field: &F, text: &str) -> Result<Self> {
        let (spec, rows, cols, body) = parse_header(text)?;
        if spec != field.spec() {
            return Err(Error::Parse(format!(
                "line 1: field `{spec}` does not match expected `{}`",
                field.spec()
            )));
        }
        let mut out = Vec::with_capacity(rows);
        for (lineno, line) in body {
            if out.len() == rows {
                return Err(Error::Parse(format!("line {lineno}: more than {rows} rows")));
            }
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected {cols} entries, found {}",
                    entries.len()
                )));
            }
            let row = entries
                .iter()
                .map(|e| {
                    field
                        .parse(e)
                        .map_err(|err| {
                            let msg = match err {
                                Error::Parse(m) => m,
                                other => other.to_string(),
                            };
                            Error::Parse(format!("line {lineno}: {msg}"))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(row);
        }
        if out.len() != rows {
            return Err(Error::Parse(format!(
                "expected {rows} rows, found {}",
                out.len()
            )));
        }
        Ok(Self::from_rows_with_cols(field, out, cols))
    }
}

type Body<'a> = Vec<(usize, &'a str)>;

/// Reads the header of the matrix text format, returning the field, the
/// shape and the remaining non-blank lines with 1-based line numbers.
pub fn parse_header(text: &str) -> Result<(FieldSpec, usize, usize, Body<'_>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("line 1: empty input".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "line {hno}: header must be `rows cols field`"
        )));
    }
    let rows: usize = parts[0]
        .parse()
        .map_err(|_| Error::Parse(format!("line {hno}: bad row count `{}`", parts[0])))?;
    let cols: usize = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("line {hno}: bad column count `{}`", parts[1])))?;
    let spec: FieldSpec = parts[2]
        .parse()
        .map_err(|e| Error::Parse(format!("line {hno}: {e}")))?;
    Ok((spec, rows, cols, lines.collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadraticField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rref_examples() {
        let q = Rationals;
        let r = Mat::from_i64(&q, &[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row(0), Mat::from_i64(&q, &[&[1, 2]]).row(0));

        let f5 = PrimeField::new(5).unwrap();
        let r = Mat::identity(&f5, 3).rref();
        assert_eq!((r.rank, r.pivots), (3, vec![0, 1, 2]));

        let f2 = PrimeField::new(2).unwrap();
        let r = Mat::from_i64(&f2, &[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r.matrix, Mat::identity(&f2, 2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernel_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let k = Mat::from_i64(&f2, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Mat::from_i64(&f2, &[&[1, 1]]));

        let q = Rationals;
        assert_eq!(Mat::identity(&q, 2).kernel_basis().rows(), 0);

        let a = Mat::from_i64(&q, &[&[1, 2, 3]]);
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 2);
        for r in 0..2 {
            assert!(a.apply(k.row(r)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kron_examples() {
        let q = Rationals;
        let e11 = Mat::unit(&q, 2, 0, 0);
        let got = e11.kron(&Mat::identity(&q, 2));
        let want = Mat::diagonal(&q, &[q.one(), q.one(), q.zero(), q.zero()]);
        assert_eq!(got, want);
        assert_eq!(
            Mat::identity(&q, 2).kron(&Mat::identity(&q, 3)),
            Mat::identity(&q, 6)
        );
    }

    #[test]
    fn vec_identity_brute_force() {
        let f = PrimeField::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = Mat::random(&f, 2, 2, &mut rng);
            let x = Mat::random(&f, 2, 2, &mut rng);
            let b = Mat::random(&f, 2, 2, &mut rng);
            let lhs = a.mul(&x).mul(&b).vec();
            let rhs = b.transpose().kron(&a).apply(&x.vec());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverse_and_det() {
        let q = Rationals;
        let a = Mat::from_i64(&q, &[&[2, 1], &[7, 4]]);
        assert_eq!(a.det(), q.one());
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), Mat::identity(&q, 2));
        let s = Mat::from_i64(&q, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert!(s.det().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let q = Rationals;
        let m = Mat::random(&q, 3, 4, &mut rng);
        assert_eq!(Mat::from_text(&q, &m.to_text()).unwrap(), m);
        let f9 = QuadraticField::new(3).unwrap();
        let m = Mat::random(&f9, 2, 2, &mut rng);
        let t = m.to_text();
        assert!(t.starts_with("2 2 3^2\n"));
        assert_eq!(Mat::from_text(&f9, &t).unwrap().to_text(), t);
    }

    #[test]
    fn text_errors_name_lines() {
        let f = PrimeField::new(5).unwrap();
        let err = Mat::from_text(&f, "2 2 5\n1 2\n3").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = Mat::from_text(&f, "2 2 7\n1 2\n3 4").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
        let err = Mat::from_text(&f, "2 2 5\n1 2\n3 z").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
