//! Dense row-major matrices over a semiring.

use crate::closure::star_gauss_jordan;
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// Rectangular dense matrix. Arithmetic goes through a [`Semiring`]
/// passed alongside, so the same storage serves every instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from row vectors; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn column(v: Vec<T>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Copies the block `rows × cols` starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in r0..r0 + rows {
            data.extend_from_slice(&self.row(r)[c0..c0 + cols]);
        }
        Matrix { rows, cols, data }
    }

    pub(crate) fn paste(&mut self, r0: usize, c0: usize, block: &Matrix<T>) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }
}

fn same_shape<T>(a: &Matrix<T>, b: &Matrix<T>, op: &str) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!("{op}: {}x{} vs {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    Ok(())
}

pub(crate) fn require_square<T>(a: &Matrix<T>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!("expected a square matrix, got {}x{}", a.rows, a.cols)));
    }
    Ok(a.rows)
}

pub fn identity<S: Semiring>(s: &S, n: usize) -> Matrix<S::Elem> {
    let mut m = Matrix::filled(n, n, s.zero());
    for i in 0..n {
        m.set(i, i, s.one());
    }
    m
}

pub fn zero_matrix<S: Semiring>(s: &S, rows: usize, cols: usize) -> Matrix<S::Elem> {
    Matrix::filled(rows, cols, s.zero())
}

/// `E_n`, the matrix with ones on the anti-diagonal.
pub fn exchange<S: Semiring>(s: &S, n: usize) -> Matrix<S::Elem> {
    let mut m = Matrix::filled(n, n, s.zero());
    for i in 0..n {
        m.set(i, n - 1 - i, s.one());
    }
    m
}

pub fn mat_add<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    same_shape(a, b, "add")?;
    Ok(Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| s.add(x, y)).collect() })
}

/// Semiring product. Each dot product is accumulated left to right, so
/// results are reproducible for rounding instances.
pub fn mat_mul<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!("mul: {}x{} by {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            data.push(dot(s, a.row(i).iter(), (0..b.rows).map(|k| b.get(k, j))));
        }
    }
    Ok(Matrix { rows: a.rows, cols: b.cols, data })
}

/// `x₁y₁ ⊕ … ⊕ xₙyₙ`; zero for empty input.
pub(crate) fn dot<'a, S: Semiring>(
    s: &S,
    xs: impl IntoIterator<Item = &'a S::Elem>,
    ys: impl IntoIterator<Item = &'a S::Elem>,
) -> S::Elem {
    let mut terms = xs.into_iter().zip(ys).map(|(x, y)| s.mul(x, y));
    match terms.next() {
        None => s.zero(),
        Some(first) => terms.fold(first, |acc, t| s.add(&acc, &t)),
    }
}

pub fn mat_vec<S: Semiring>(s: &S, a: &Matrix<S::Elem>, x: &[S::Elem]) -> Result<Vec<S::Elem>> {
    if a.cols != x.len() {
        return Err(Error::ShapeMismatch(format!("mat-vec: {}x{} by {}", a.rows, a.cols, x.len())));
    }
    Ok((0..a.rows).map(|i| dot(s, a.row(i), x)).collect())
}

pub fn mat_leq<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<bool> {
    same_shape(a, b, "leq")?;
    Ok(a.data.iter().zip(&b.data).all(|(x, y)| s.leq(x, y)))
}

/// Entrywise [`Semiring::approx_eq`]; false on shape mismatch.
pub fn mat_approx_eq<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>, tol: f64) -> bool {
    a.shape() == b.shape() && a.data.iter().zip(&b.data).all(|(x, y)| s.approx_eq(x, y, tol))
}

pub fn mat_power<S: Semiring>(s: &S, a: &Matrix<S::Elem>, k: u32) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    let mut acc = identity(s, n);
    for _ in 0..k {
        acc = mat_mul(s, &acc, a)?;
    }
    Ok(acc)
}

pub fn is_symmetric<T: PartialEq>(a: &Matrix<T>) -> bool {
    a.is_square() && (0..a.rows).all(|i| (0..i).all(|j| a.data[i * a.cols + j] == a.data[j * a.cols + i]))
}

/// `A = E Aᵀ E`: symmetric about the anti-diagonal.
pub fn is_persymmetric<T: PartialEq>(a: &Matrix<T>) -> bool {
    let n = a.rows;
    a.is_square() && (0..n).all(|i| (0..n).all(|j| a.data[i * n + j] == a.data[(n - 1 - j) * n + (n - 1 - i)]))
}

pub fn is_toeplitz<T: PartialEq>(a: &Matrix<T>) -> bool {
    (1..a.rows).all(|i| (1..a.cols).all(|j| a.data[i * a.cols + j] == a.data[(i - 1) * a.cols + j - 1]))
}

pub fn is_strictly_lower<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> bool {
    a.is_square() && (0..a.rows).all(|i| (i..a.cols).all(|j| s.is_zero(a.get(i, j))))
}

pub fn is_strictly_upper<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> bool {
    a.is_square() && (0..a.rows).all(|i| (0..=i).all(|j| s.is_zero(a.get(i, j))))
}

/// Least `(p, q)` with `a_ij = 0` whenever `i > j + p` or `j > i + q`.
pub fn bandwidths<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> (usize, usize) {
    let (mut p, mut q) = (0, 0);
    for i in 0..a.rows {
        for j in 0..a.cols {
            if !s.is_zero(a.get(i, j)) {
                if i > j {
                    p = p.max(i - j);
                } else {
                    q = q.max(j - i);
                }
            }
        }
    }
    (p, q)
}

/// `Mat_nn(S)` as a semiring in its own right. Closure is computed by
/// Gauss–Jordan elimination.
#[derive(Debug, Clone)]
pub struct MatrixSemiring<S> {
    base: S,
    n: usize,
}

impl<S: Semiring> MatrixSemiring<S> {
    pub fn new(base: S, n: usize) -> Self {
        MatrixSemiring { base, n }
    }

    pub fn base(&self) -> &S {
        &self.base
    }
}

impl<S: Semiring> Semiring for MatrixSemiring<S> {
    type Elem = Matrix<S::Elem>;

    fn name(&self) -> String {
        format!("mat{}:{}", self.n, self.base.name())
    }

    fn zero(&self) -> Self::Elem {
        zero_matrix(&self.base, self.n, self.n)
    }

    fn one(&self) -> Self::Elem {
        identity(&self.base, self.n)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_add(&self.base, a, b).expect("square matrices of the semiring's order")
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_mul(&self.base, a, b).expect("square matrices of the semiring's order")
    }

    fn star(&self, a: &Self::Elem) -> Result<Self::Elem> {
        star_gauss_jordan(&self.base, a)
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        mat_leq(&self.base, a, b).unwrap_or(false)
    }

    fn is_idempotent(&self) -> bool {
        self.base.is_idempotent()
    }

    fn is_complete(&self) -> bool {
        self.base.is_complete()
    }

    fn is_commutative(&self) -> bool {
        self.n <= 1 && self.base.is_commutative()
    }

    fn approx_eq(&self, a: &Self::Elem, b: &Self::Elem, tol: f64) -> bool {
        mat_approx_eq(&self.base, a, b, tol)
    }

    fn parse_elem(&self, _token: &str) -> Result<Self::Elem> {
        Err(Error::Parse("matrix elements have no token form".into()))
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        crate::io::format_matrix(&self.base, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Boolean, MaxPlus, MinPlus};
    use proptest::prelude::*;

    const INF: f64 = f64::INFINITY;

    #[test]
    fn entrywise_add() {
        let s = MinPlus::new();
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        let b = Matrix::from_rows(vec![vec![4.0, 3.0], vec![2.0, 1.0]]);
        assert_eq!(mat_add(&s, &a, &b).unwrap(), Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 1.0]]));
        assert_eq!(mat_add(&s, &a, &zero_matrix(&s, 2, 2)).unwrap(), a);
        let i = identity(&Boolean, 3);
        assert_eq!(mat_add(&Boolean, &i, &i).unwrap(), i);
        assert!(matches!(mat_add(&s, &a, &zero_matrix(&s, 2, 3)), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn semiring_product() {
        let s = MinPlus::new();
        let a = Matrix::from_rows(vec![vec![0.0, 1.0], vec![INF, 0.0]]);
        let b = Matrix::column(vec![0.0, 2.0]);
        assert_eq!(mat_mul(&s, &a, &b).unwrap(), Matrix::column(vec![0.0, 2.0]));
        assert_eq!(mat_mul(&s, &a, &identity(&s, 2)).unwrap(), a);
        assert!(mat_mul(&s, &b, &b).is_err());
    }

    #[test]
    fn boolean_square_is_two_step_reachability() {
        let mut a = Matrix::filled(3, 3, false);
        a.set(0, 1, true);
        a.set(1, 2, true);
        let sq = mat_power(&Boolean, &a, 2).unwrap();
        let mut want = Matrix::filled(3, 3, false);
        want.set(0, 2, true);
        assert_eq!(sq, want);
    }

    #[test]
    fn structure_predicates() {
        let s = MinPlus::new();
        let mut t = Matrix::filled(4, 4, INF);
        for i in 0..4 {
            t.set(i, i, 5.0);
            if i + 1 < 4 {
                t.set(i, i + 1, 1.0);
                t.set(i + 1, i, 1.0);
            }
        }
        assert_eq!(bandwidths(&s, &t), (1, 1));
        assert!(is_toeplitz(&t));
        assert!(is_persymmetric(&t));
        let nt = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 1.0]]);
        assert!(is_persymmetric(&nt));
        assert!(!is_symmetric(&nt));
        let np = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!(!is_persymmetric(&np));
        assert_eq!(bandwidths(&s, &identity(&s, 3)), (0, 0));
    }

    #[test]
    fn exchange_squares_to_identity() {
        let s = MaxPlus::new();
        let e = exchange(&s, 5);
        assert_eq!(mat_mul(&s, &e, &e).unwrap(), identity(&s, 5));
    }

    fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<f64>> {
        proptest::collection::vec(prop_oneof![1 => Just(INF), 4 => (0i32..9).prop_map(f64::from)], n * n)
            .prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
    }

    fn sym_toeplitz(n: usize) -> impl Strategy<Value = Matrix<f64>> {
        proptest::collection::vec((-9i32..0).prop_map(f64::from), n).prop_map(move |r| {
            let mut m = Matrix::filled(n, n, 0.0);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, r[i.abs_diff(j)]);
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(a in int_matrix(4)) {
            prop_assert_eq!(a.transpose().transpose(), a);
        }

        #[test]
        fn matrices_form_a_semiring(a in int_matrix(3), b in int_matrix(3), c in int_matrix(3)) {
            let s = MinPlus::new();
            let m = MatrixSemiring::new(s, 3);
            prop_assert_eq!(m.mul(&m.mul(&a, &b), &c), m.mul(&a, &m.mul(&b, &c)));
            prop_assert_eq!(m.add(&a, &b), m.add(&b, &a));
            prop_assert_eq!(m.mul(&a, &m.add(&b, &c)), m.add(&m.mul(&a, &b), &m.mul(&a, &c)));
            prop_assert_eq!(m.mul(&m.add(&a, &b), &c), m.add(&m.mul(&a, &c), &m.mul(&b, &c)));
            prop_assert_eq!(m.mul(&a, &m.one()), a.clone());
            prop_assert_eq!(m.mul(&m.zero(), &a), m.zero());
            prop_assert_eq!(m.add(&a, &a), a.clone());
            // order consistency of the product
            let a2 = m.add(&a, &b);
            prop_assert!(m.leq(&m.mul(&a, &c), &m.mul(&a2, &c)));
            let st = m.star(&a).unwrap();
            prop_assert_eq!(m.add(&m.one(), &m.mul(&a, &st)), st.clone());
            prop_assert_eq!(m.mul(&st, &st), st);
        }

        #[test]
        fn persymmetric_closures(a in (1usize..=6).prop_flat_map(sym_toeplitz)) {
            // E A* = (A*)ᵀ E
            let s = MaxPlus::new();
            let n = a.rows();
            let c = star_gauss_jordan(&s, &a).unwrap();
            prop_assert!(is_persymmetric(&c));
            let e = exchange(&s, n);
            prop_assert_eq!(mat_mul(&s, &e, &c).unwrap(), mat_mul(&s, &c.transpose(), &e).unwrap());
        }
    }
}
