//! Triangular substitution and Durbin / Levinson recursions for
//! symmetric Toeplitz Bellman systems.

use crate::error::{Error, Result};
use crate::matrix::{dot, is_strictly_lower, is_strictly_upper, Matrix};
use crate::semiring::Semiring;

/// Unique solution of `x = Lx ⊕ b` for strictly lower triangular `L`.
pub fn forward_subst<S: Semiring>(s: &S, l: &Matrix<S::Elem>, b: &[S::Elem]) -> Result<Vec<S::Elem>> {
    check_system(l, b)?;
    if !is_strictly_lower(s, l) {
        return Err(Error::NotTriangular);
    }
    Ok(forward_unchecked(s, l, b))
}

/// Solves `x = Lx ⊕ b` reading only the strict lower triangle of `l`.
pub(crate) fn forward_unchecked<S: Semiring>(s: &S, l: &Matrix<S::Elem>, b: &[S::Elem]) -> Vec<S::Elem> {
    let mut x: Vec<S::Elem> = Vec::with_capacity(b.len());
    for (k, bk) in b.iter().enumerate() {
        let xk = if k == 0 { bk.clone() } else { s.add(&dot(s, &l.row(k)[..k], &x[..k]), bk) };
        x.push(xk);
    }
    x
}

/// Unique solution of `x = Mx ⊕ b` for strictly upper triangular `M`.
pub fn backward_subst<S: Semiring>(s: &S, m: &Matrix<S::Elem>, b: &[S::Elem]) -> Result<Vec<S::Elem>> {
    check_system(m, b)?;
    if !is_strictly_upper(s, m) {
        return Err(Error::NotTriangular);
    }
    Ok(backward_unchecked(s, m, b))
}

/// Solves `x = Mx ⊕ b` reading only the strict upper triangle of `m`.
pub(crate) fn backward_unchecked<S: Semiring>(s: &S, m: &Matrix<S::Elem>, b: &[S::Elem]) -> Vec<S::Elem> {
    let n = b.len();
    let mut x = b.to_vec();
    for k in (0..n.saturating_sub(1)).rev() {
        x[k] = s.add(&dot(s, &m.row(k)[k + 1..], &x[k + 1..]), &b[k]);
    }
    x
}

fn check_system<T>(a: &Matrix<T>, b: &[T]) -> Result<()> {
    if !a.is_square() || a.rows() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    Ok(())
}

/// Symmetric Toeplitz data: `T_ij = r_{|i-j|}` with `r_0` on the diagonal
/// and `r[k-1] = r_k` off it.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSpec<E> {
    pub r0: E,
    pub r: Vec<E>,
}

impl<E: Clone> ToeplitzSpec<E> {
    pub fn new(r0: E, r: Vec<E>) -> Self {
        ToeplitzSpec { r0, r }
    }

    /// `r_k` for `k ≥ 0`.
    fn coeff(&self, k: usize) -> &E {
        if k == 0 {
            &self.r0
        } else {
            &self.r[k - 1]
        }
    }

    /// The `n × n` matrix `T_n`; needs `r_1 … r_{n-1}`.
    pub fn matrix(&self, n: usize) -> Result<Matrix<E>> {
        if n > self.r.len() + 1 {
            return Err(Error::ShapeMismatch(format!(
                "order {n} Toeplitz matrix needs {} coefficients, have {}",
                n - 1,
                self.r.len()
            )));
        }
        let data =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.coeff(i.abs_diff(j)).clone()).collect();
        Matrix::from_vec(n, n, data)
    }
}

/// Which form of the β update to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// Recompute `β_k = r_0 ⊕ r^(k)ᵀ y^(k)` at every step; valid in any
    /// semiring.
    #[default]
    General,
    /// Update `β_k = β_{k-1} ⊕ (β_{k-1}*)⁻¹ α²_{k-1}`; needs inverses of
    /// the closures, as in semifields. Saves about n²/2 of each operation.
    Inverse,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Variant::General),
            "inverse" => Ok(Variant::Inverse),
            _ => Err(Error::Parse(format!("unknown variant `{s}` (general|inverse)"))),
        }
    }
}

fn inverse<S: Semiring>(s: &S, a: &S::Elem) -> Result<S::Elem> {
    s.try_inverse(a).ok_or_else(|| Error::NoInverse { semiring: s.name(), value: s.format_elem(a) })
}

/// `r^(k)ᵀ E_k v`, i.e. `⊕_{i<k} r_{k-i} ⊙ v_i`.
fn reversed_dot<S: Semiring>(s: &S, t: &ToeplitzSpec<S::Elem>, v: &[S::Elem], k: usize) -> S::Elem {
    dot(s, t.r[..k].iter().rev(), &v[..k])
}

/// Carries β across iterations for either variant.
struct Beta<E> {
    beta: E,
    beta_star: E,
}

impl<E: Clone> Beta<E> {
    fn start<S: Semiring<Elem = E>>(s: &S, r0: &E) -> Result<Self> {
        Ok(Beta { beta: r0.clone(), beta_star: s.star(r0)? })
    }

    /// Advances to `β_k` and returns `β_k*`.
    fn advance<S: Semiring<Elem = E>>(
        &mut self,
        s: &S,
        variant: Variant,
        t: &ToeplitzSpec<E>,
        y: &[E],
        alpha: &E,
        k: usize,
    ) -> Result<E> {
        self.beta = match variant {
            Variant::General => s.add(&t.r0, &dot(s, &t.r[..k], &y[..k])),
            Variant::Inverse => {
                let inv = inverse(s, &self.beta_star)?;
                s.add(&self.beta, &s.mul(&inv, &s.mul(alpha, alpha)))
            }
        };
        self.beta_star = s.star(&self.beta)?;
        Ok(self.beta_star.clone())
    }
}

/// Least solution of `y = T_n y ⊕ r^(n)` where `n = t.r.len()` and
/// `r^(n) = (r_1, …, r_n)`; `r_n` only enters the right-hand side.
///
/// The general variant uses `3n²/2 + O(n)` of each of ⊕ and ⊙, the
/// inverse variant `n² + O(n)`; both take `n` closures.
pub fn durbin_yule_walker<S: Semiring>(s: &S, t: &ToeplitzSpec<S::Elem>, variant: Variant) -> Result<Vec<S::Elem>> {
    let n = t.r.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut beta = Beta::start(s, &t.r0)?;
    let mut y = Vec::with_capacity(n);
    y.push(s.mul(&beta.beta_star, &t.r[0]));
    let mut alpha = y[0].clone();
    for k in 1..n {
        let bs = beta.advance(s, variant, t, &y, &alpha, k)?;
        alpha = s.mul(&bs, &s.add(&reversed_dot(s, t, &y, k), &t.r[k]));
        let z: Vec<S::Elem> = (0..k).map(|i| s.add(&y[i], &s.mul(&y[k - 1 - i], &alpha))).collect();
        y.splice(..k, z);
        y.push(alpha.clone());
    }
    Ok(y)
}

/// Least solution of `x = T_n x ⊕ b` with `n = b.len()`; needs
/// `r_1 … r_{n-1}`.
///
/// The general variant uses `5n²/2 + O(n)` of each of ⊕ and ⊙, the
/// inverse variant `2n² + O(n)`; both take `n` closures.
pub fn levinson_solve<S: Semiring>(
    s: &S,
    t: &ToeplitzSpec<S::Elem>,
    b: &[S::Elem],
    variant: Variant,
) -> Result<Vec<S::Elem>> {
    let n = b.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if t.r.len() + 1 < n {
        return Err(Error::ShapeMismatch(format!(
            "system of order {n} needs {} off-diagonal coefficients, have {}",
            n - 1,
            t.r.len()
        )));
    }
    let mut beta = Beta::start(s, &t.r0)?;
    let mut x = Vec::with_capacity(n);
    x.push(s.mul(&beta.beta_star, &b[0]));
    if n == 1 {
        return Ok(x);
    }
    let mut y = vec![s.mul(&beta.beta_star, &t.r[0])];
    let mut alpha = y[0].clone();
    for k in 1..n {
        let bs = beta.advance(s, variant, t, &y, &alpha, k)?;
        let mu = s.mul(&bs, &s.add(&reversed_dot(s, t, &x, k), &b[k]));
        let v: Vec<S::Elem> = (0..k).map(|i| s.add(&x[i], &s.mul(&y[k - 1 - i], &mu))).collect();
        x.splice(..k, v);
        x.push(mu);
        if k < n - 1 {
            alpha = s.mul(&bs, &s.add(&reversed_dot(s, t, &y, k), &t.r[k]));
            let z: Vec<S::Elem> = (0..k).map(|i| s.add(&y[i], &s.mul(&y[k - 1 - i], &alpha))).collect();
            y.splice(..k, z);
            y.push(alpha.clone());
        }
    }
    Ok(x)
}
