//! Direct closure algorithms: escalator (bordering), Gauss–Jordan
//! elimination, the recursive 2×2 block formula and the finite sum for
//! nilpotent matrices.
//!
//! All of them return `A* = I ⊕ A ⊕ A² ⊕ …`, the least solution of
//! `X = AX ⊕ I`, and work on a private copy of the input.

use crate::error::{Error, Result};
use crate::matrix::{dot, identity, is_strictly_lower, is_strictly_upper, mat_add, mat_mul, require_square, Matrix};
use crate::semiring::Semiring;

/// Escalator method: closes the leading `k × k` block and borders it
/// with one row and column at a time.
///
/// Uses `n³ + O(n²)` of each of ⊕ and ⊙ and exactly `n` closures.
pub fn star_escalator<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    let mut c = a.clone();
    if n == 0 {
        return Ok(c);
    }
    c.set(0, 0, s.star(c.get(0, 0))?);
    for i in 1..n {
        // A_k* g_k and h_kᵀ A_k*
        let ag: Vec<S::Elem> = (0..i).map(|r| dot(s, &c.row(r)[..i], (0..i).map(|k| c.get(k, i)))).collect();
        let ha: Vec<S::Elem> = (0..i).map(|col| dot(s, &c.row(i)[..i], (0..i).map(|k| c.get(k, col)))).collect();
        let d = s.add(c.get(i, i), &dot(s, &c.row(i)[..i], &ag));
        let u = s.star(&d)?;
        let v: Vec<S::Elem> = ag.iter().map(|x| s.mul(x, &u)).collect();
        for (col, h) in ha.iter().enumerate() {
            c.set(i, col, s.mul(&u, h));
        }
        for (r, vr) in v.iter().enumerate() {
            for (col, h) in ha.iter().enumerate() {
                let upd = s.add(c.get(r, col), &s.mul(vr, h));
                c.set(r, col, upd);
            }
            c.set(r, i, vr.clone());
        }
        c.set(i, i, u);
    }
    Ok(c)
}

/// Gauss–Jordan elimination in natural pivot order. Over max-plus,
/// min-plus or Boolean matrices this is the Floyd–Warshall /
/// Warshall algorithm.
///
/// Uses `n³ + O(n²)` of each of ⊕ and ⊙ and exactly `n` closures.
pub fn star_gauss_jordan<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    eliminate(s, a, None)
}

/// Closure together with parental links: for each entry, the last pivot
/// that strictly improved it.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureWithLinks<E> {
    pub closure: Matrix<E>,
    pub links: Matrix<Option<usize>>,
    /// The input matrix, i.e. the arc weights.
    pub arcs: Matrix<E>,
}

/// [`star_gauss_jordan`] that also records parental links. Only defined
/// for idempotent instances, where "strictly improved" is meaningful.
pub fn star_gauss_jordan_with_links<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<ClosureWithLinks<S::Elem>> {
    if !s.is_idempotent() {
        return Err(Error::NotIdempotentSemiring(s.name()));
    }
    let n = require_square(a)?;
    let mut links = Matrix::filled(n, n, None);
    let closure = eliminate(s, a, Some(&mut links))?;
    Ok(ClosureWithLinks { closure, links, arcs: a.clone() })
}

fn eliminate<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    mut links: Option<&mut Matrix<Option<usize>>>,
) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    let mut c = a.clone();
    for i in 0..n {
        let st = s.star(c.get(i, i))?;
        c.set(i, i, st.clone());
        for k in (0..n).filter(|&k| k != i) {
            let v = s.mul(c.get(k, i), &st);
            c.set(k, i, v);
        }
        for k in (0..n).filter(|&k| k != i) {
            let cki = c.get(k, i).clone();
            for j in (0..n).filter(|&j| j != i) {
                let old = c.get(k, j);
                let new = s.add(old, &s.mul(&cki, c.get(i, j)));
                if let Some(links) = links.as_deref_mut() {
                    if new != *old {
                        links.set(k, j, Some(i));
                    }
                }
                c.set(k, j, new);
            }
        }
        for j in (0..n).filter(|&j| j != i) {
            let v = s.mul(&st, c.get(i, j));
            c.set(i, j, v);
        }
    }
    Ok(c)
}

/// Closure by the 2×2 block formula
///
/// ```text
/// A* = | A11* ⊕ A11* A12 D* A21 A11*   A11* A12 D* |
///      | D* A21 A11*                   D*          |,   D = A22 ⊕ A21 A11* A12
/// ```
///
/// with the leading block of order `split`. Sub-blocks are closed
/// recursively, splitting at `⌈m/2⌉`. For `n ≤ 1` the split is ignored.
pub fn star_block<S: Semiring>(s: &S, a: &Matrix<S::Elem>, split: usize) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    if n <= 1 {
        return block_rec(s, a, None);
    }
    if split == 0 || split >= n {
        return Err(Error::BadSplit { split, max: n - 1 });
    }
    block_rec(s, a, Some(split))
}

/// [`star_block`] with the split at `⌈n/2⌉`.
pub fn star_block_halving<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    require_square(a)?;
    block_rec(s, a, None)
}

fn block_rec<S: Semiring>(s: &S, a: &Matrix<S::Elem>, split: Option<usize>) -> Result<Matrix<S::Elem>> {
    let n = a.rows();
    match n {
        0 => return Ok(a.clone()),
        1 => return Ok(Matrix::filled(1, 1, s.star(a.get(0, 0))?)),
        _ => {}
    }
    let k = split.unwrap_or(n.div_ceil(2));
    let m = n - k;
    let a11 = a.submatrix(0, 0, k, k);
    let a12 = a.submatrix(0, k, k, m);
    let a21 = a.submatrix(k, 0, m, k);
    let a22 = a.submatrix(k, k, m, m);

    let s11 = block_rec(s, &a11, None)?;
    let left = mat_mul(s, &a21, &s11)?; // A21 A11*
    let right = mat_mul(s, &s11, &a12)?; // A11* A12
    let d = mat_add(s, &a22, &mat_mul(s, &left, &a12)?)?;
    let ds = block_rec(s, &d, None)?;
    let top_right = mat_mul(s, &right, &ds)?;
    let bottom_left = mat_mul(s, &ds, &left)?;
    let top_left = mat_add(s, &s11, &mat_mul(s, &top_right, &left)?)?;

    let mut out = Matrix::filled(n, n, s.zero());
    out.paste(0, 0, &top_left);
    out.paste(0, k, &top_right);
    out.paste(k, 0, &bottom_left);
    out.paste(k, k, &ds);
    Ok(out)
}

/// `I ⊕ A ⊕ … ⊕ A^{n-1}` for strictly triangular `A`, which is then
/// nilpotent. Never evaluates a scalar closure.
pub fn star_nilpotent<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    if !is_strictly_lower(s, a) && !is_strictly_upper(s, a) {
        return Err(Error::NotTriangular);
    }
    let mut sum = identity(s, n);
    let mut power = identity(s, n);
    for _ in 1..n {
        power = mat_mul(s, &power, a)?;
        sum = mat_add(s, &sum, &power)?;
    }
    Ok(sum)
}
