//! LDM factorization of Bellman systems: `A* = M* D* L*` with `L` strictly
//! lower, `D` diagonal and `M` strictly upper triangular.
//!
//! Factors are packed into one square array the way the in-place
//! elimination leaves them: `L` below the diagonal, `D` on it, `M` above.

use crate::closure::star_nilpotent;
use crate::error::{Error, Result};
use crate::matrix::{bandwidths, is_symmetric, mat_mul, require_square, Matrix};
use crate::semiring::Semiring;
use crate::toeplitz::{backward_unchecked, forward_unchecked};

#[derive(Debug, Clone, PartialEq)]
pub struct LdmFactors<E> {
    pub packed: Matrix<E>,
    /// Declared `(p, q)` for band factorizations.
    pub bandwidths: Option<(usize, usize)>,
}

/// Loop organisation of the factorization; both give the same factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LdmVersion {
    /// Outer-product (right-looking) elimination.
    #[default]
    V1,
    /// Column-by-column (left-looking) form.
    V2,
}

impl std::str::FromStr for LdmVersion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v1" | "1" => Ok(LdmVersion::V1),
            "v2" | "2" => Ok(LdmVersion::V2),
            _ => Err(Error::Parse(format!("unknown LDM version `{s}` (v1|v2)"))),
        }
    }
}

impl<E: Clone> LdmFactors<E> {
    pub fn order(&self) -> usize {
        self.packed.rows()
    }

    pub fn lower<S: Semiring<Elem = E>>(&self, s: &S) -> Matrix<E> {
        self.masked(s, |i, j| i > j)
    }

    pub fn diagonal<S: Semiring<Elem = E>>(&self, s: &S) -> Matrix<E> {
        self.masked(s, |i, j| i == j)
    }

    pub fn upper<S: Semiring<Elem = E>>(&self, s: &S) -> Matrix<E> {
        self.masked(s, |i, j| i < j)
    }

    fn masked<S: Semiring<Elem = E>>(&self, s: &S, keep: impl Fn(usize, usize) -> bool) -> Matrix<E> {
        let n = self.order();
        let mut out = Matrix::filled(n, n, s.zero());
        for i in 0..n {
            for j in 0..n {
                if keep(i, j) {
                    out.set(i, j, self.packed.get(i, j).clone());
                }
            }
        }
        out
    }

    /// `D*`, closing the diagonal entrywise.
    pub fn diagonal_star<S: Semiring<Elem = E>>(&self, s: &S) -> Result<Vec<E>> {
        (0..self.order()).map(|i| s.star(self.packed.get(i, i))).collect()
    }

    /// `M* (D* (L* b))` by forward substitution, a diagonal scaling and
    /// back substitution.
    pub fn solve<S: Semiring<Elem = E>>(&self, s: &S, b: &[E]) -> Result<Vec<E>> {
        if b.len() != self.order() {
            return Err(Error::ShapeMismatch(format!(
                "order {} factors with right-hand side of length {}",
                self.order(),
                b.len()
            )));
        }
        let z = forward_unchecked(s, &self.packed, b);
        let dstar = self.diagonal_star(s)?;
        let y: Vec<E> = dstar.iter().zip(&z).map(|(d, z)| s.mul(d, z)).collect();
        Ok(backward_unchecked(s, &self.packed, &y))
    }

    /// `A*` as the product `M* D* L*`.
    pub fn closure<S: Semiring<Elem = E>>(&self, s: &S) -> Result<Matrix<E>> {
        let mstar = star_nilpotent(s, &self.upper(s))?;
        let lstar = star_nilpotent(s, &self.lower(s))?;
        let mut dstar = Matrix::filled(self.order(), self.order(), s.zero());
        for (i, d) in self.diagonal_star(s)?.into_iter().enumerate() {
            dstar.set(i, i, d);
        }
        mat_mul(s, &mat_mul(s, &mstar, &dstar)?, &lstar)
    }
}

/// LDM factorization. Uses `n³/3 + O(n²)` of each of ⊕ and ⊙ and `n - 1`
/// closures; the last diagonal entry is left unclosed.
pub fn ldm_decompose<S: Semiring>(s: &S, a: &Matrix<S::Elem>, version: LdmVersion) -> Result<LdmFactors<S::Elem>> {
    require_square(a)?;
    let packed = match version {
        LdmVersion::V1 => ldm_outer(s, a)?,
        LdmVersion::V2 => ldm_columns(s, a)?,
    };
    Ok(LdmFactors { packed, bandwidths: None })
}

fn ldm_outer<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    let n = a.rows();
    let mut c = a.clone();
    for j in 0..n.saturating_sub(1) {
        let v = s.star(c.get(j, j))?;
        for i in j + 1..n {
            let l = s.mul(c.get(i, j), &v);
            c.set(i, j, l);
        }
        for i in j + 1..n {
            let lij = c.get(i, j).clone();
            for k in j + 1..n {
                let upd = s.add(c.get(i, k), &s.mul(&lij, c.get(j, k)));
                c.set(i, k, upd);
            }
        }
        for k in j + 1..n {
            let m = s.mul(&v, c.get(j, k));
            c.set(j, k, m);
        }
    }
    Ok(c)
}

fn ldm_columns<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    let n = a.rows();
    let mut c = a.clone();
    // closures of finished diagonal entries
    let mut dstar: Vec<S::Elem> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = c.col(j);
        v.truncate(j + 1);
        for k in 0..j {
            for i in k + 1..=j {
                v[i] = s.add(&v[i], &s.mul(c.get(i, k), &v[k]));
            }
        }
        for (i, vi) in v.iter().enumerate().take(j) {
            c.set(i, j, s.mul(&dstar[i], vi));
        }
        c.set(j, j, v[j].clone());
        for (k, vk) in v.iter().enumerate().take(j) {
            for i in j + 1..n {
                let upd = s.add(c.get(i, j), &s.mul(c.get(i, k), vk));
                c.set(i, j, upd);
            }
        }
        if j + 1 < n {
            let d = s.star(&v[j])?;
            for i in j + 1..n {
                let l = s.mul(c.get(i, j), &d);
                c.set(i, j, l);
            }
            dstar.push(d);
        }
    }
    Ok(c)
}

/// `x = A* b` via the LDM factors of `A`.
pub fn closure_via_ldm<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &[S::Elem]) -> Result<Vec<S::Elem>> {
    ldm_decompose(s, a, LdmVersion::V1)?.solve(s, b)
}

fn require_symmetric<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<usize> {
    let n = require_square(a)?;
    if !is_symmetric(a) {
        return Err(Error::NotSymmetric);
    }
    if !s.is_commutative() {
        return Err(Error::ShapeMismatch(format!(
            "symmetric factorization needs commutative multiplication, {} is not",
            s.name()
        )));
    }
    Ok(n)
}

/// Symmetric LDM factorization with `M = Lᵀ`, about `n³/6` of each of ⊕
/// and ⊙. Only the lower triangle is computed; the upper triangle of the
/// packed result is filled with `Lᵀ`.
pub fn ldm_symmetric<S: Semiring>(s: &S, a: &Matrix<S::Elem>, version: LdmVersion) -> Result<LdmFactors<S::Elem>> {
    let n = require_symmetric(s, a)?;
    let mut c = a.clone();
    match version {
        LdmVersion::V1 => {
            for j in 0..n.saturating_sub(1) {
                let v = s.star(c.get(j, j))?;
                let scaled: Vec<S::Elem> = (j + 1..n).map(|k| s.mul(c.get(k, j), &v)).collect();
                for k in j + 1..n {
                    let lkj = &scaled[k - j - 1];
                    for l in j + 1..=k {
                        let upd = s.add(c.get(k, l), &s.mul(lkj, c.get(l, j)));
                        c.set(k, l, upd);
                    }
                }
                for (k, lkj) in (j + 1..n).zip(scaled) {
                    c.set(k, j, lkj);
                }
            }
        }
        LdmVersion::V2 => {
            // inverses of the closures of finished diagonal entries
            let mut dstar_inv: Vec<S::Elem> = Vec::with_capacity(n);
            for j in 0..n {
                let v: Vec<S::Elem> = (0..j).map(|i| s.mul(&dstar_inv[i], c.get(j, i))).collect();
                let vj = s.add(c.get(j, j), &crate::matrix::dot(s, &c.row(j)[..j], &v));
                c.set(j, j, vj.clone());
                for (k, vk) in v.iter().enumerate() {
                    for i in j + 1..n {
                        let upd = s.add(c.get(i, j), &s.mul(c.get(i, k), vk));
                        c.set(i, j, upd);
                    }
                }
                if j + 1 < n {
                    let d = s.star(&vj)?;
                    for i in j + 1..n {
                        let l = s.mul(c.get(i, j), &d);
                        c.set(i, j, l);
                    }
                    let inv = s
                        .try_inverse(&d)
                        .ok_or_else(|| Error::NoInverse { semiring: s.name(), value: s.format_elem(&d) })?;
                    dstar_inv.push(inv);
                }
            }
        }
    }
    mirror_lower(&mut c);
    Ok(LdmFactors { packed: c, bandwidths: None })
}

fn mirror_lower<E: Clone>(c: &mut Matrix<E>) {
    for i in 0..c.rows() {
        for j in 0..i {
            let v = c.get(i, j).clone();
            c.set(j, i, v);
        }
    }
}

/// Idempotent Cholesky factor `G = D* L` of a symmetric matrix; when the
/// diagonal closures are 1, `A* = (G*)ᵀ G*`.
pub fn cholesky_idempotent<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    if !s.is_idempotent() {
        return Err(Error::NotIdempotentSemiring(s.name()));
    }
    let f = ldm_symmetric(s, a, LdmVersion::V1)?;
    let dstar = f.diagonal_star(s)?;
    let mut g = f.lower(s);
    for (i, d) in dstar.iter().enumerate() {
        for j in 0..i {
            let v = s.mul(d, g.get(i, j));
            g.set(i, j, v);
        }
    }
    Ok(g)
}

/// Band LDM factorization for lower bandwidth `p` and upper bandwidth
/// `q`: about `npq` of each of ⊕ and ⊙. The factors keep the band.
pub fn ldm_band<S: Semiring>(s: &S, a: &Matrix<S::Elem>, p: usize, q: usize) -> Result<LdmFactors<S::Elem>> {
    let n = require_square(a)?;
    for i in 0..n {
        for j in 0..n {
            if (i > j + p || j > i + q) && !s.is_zero(a.get(i, j)) {
                return Err(Error::BandViolation { row: i, col: j, p, q });
            }
        }
    }
    let mut c = a.clone();
    for j in 0..n.saturating_sub(1) {
        let v = s.star(c.get(j, j))?;
        let rows = j + 1..(j + p + 1).min(n);
        let cols = j + 1..(j + q + 1).min(n);
        for i in rows.clone() {
            let l = s.mul(c.get(i, j), &v);
            c.set(i, j, l);
        }
        for i in rows.clone() {
            let lij = c.get(i, j).clone();
            for k in cols.clone() {
                let upd = s.add(c.get(i, k), &s.mul(&lij, c.get(j, k)));
                c.set(i, k, upd);
            }
        }
        for k in cols {
            let m = s.mul(&v, c.get(j, k));
            c.set(j, k, m);
        }
    }
    Ok(LdmFactors { packed: c, bandwidths: Some((p, q)) })
}

/// Upper Hessenberg preset of [`ldm_band`]: `p = 1`, `q = n - 1`.
pub fn ldm_hessenberg<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<LdmFactors<S::Elem>> {
    let n = require_square(a)?;
    ldm_band(s, a, 1, n.saturating_sub(1))
}

/// Tridiagonal preset of [`ldm_band`]: `p = q = 1`.
pub fn ldm_tridiagonal<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Result<LdmFactors<S::Elem>> {
    ldm_band(s, a, 1, 1)
}

/// Actual bandwidths of the packed factors.
pub fn factor_bandwidths<S: Semiring>(s: &S, f: &LdmFactors<S::Elem>) -> (usize, usize) {
    bandwidths(s, &f.packed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::star_gauss_jordan;
    use crate::matrix::{identity, mat_add, mat_approx_eq, mat_vec, zero_matrix};
    use crate::semiring::{make_counting, Boolean, MaxMin, MaxPlus, MinPlus, Real};
    use proptest::prelude::*;

    const INF: f64 = f64::INFINITY;
    const NINF: f64 = f64::NEG_INFINITY;

    fn two_by_two() -> Matrix<f64> {
        Matrix::from_rows(vec![vec![3.0, 1.0], vec![1.0, 3.0]])
    }

    #[test]
    fn hand_computed_factors() {
        let s = MinPlus::new();
        let want = Matrix::from_rows(vec![vec![3.0, 1.0], vec![1.0, 2.0]]);
        for v in [LdmVersion::V1, LdmVersion::V2] {
            assert_eq!(ldm_decompose(&s, &two_by_two(), v).unwrap().packed, want);
            assert_eq!(ldm_symmetric(&s, &two_by_two(), v).unwrap().packed, want);
        }
        let f = ldm_decompose(&s, &two_by_two(), LdmVersion::V1).unwrap();
        assert_eq!(f.solve(&s, &[0.0, INF]).unwrap(), vec![0.0, 1.0]);
        assert_eq!(closure_via_ldm(&s, &two_by_two(), &[0.0, INF]).unwrap(), vec![0.0, 1.0]);
        assert_eq!(f.closure(&s).unwrap(), star_gauss_jordan(&s, &two_by_two()).unwrap());
    }

    #[test]
    fn diagonal_input() {
        let s = MaxPlus::new();
        let mut a = zero_matrix(&s, 3, 3);
        a.set(0, 0, -1.0);
        a.set(1, 1, -2.0);
        a.set(2, 2, 0.0);
        for f in [ldm_decompose(&s, &a, LdmVersion::V1).unwrap(), ldm_symmetric(&s, &a, LdmVersion::V2).unwrap()] {
            assert_eq!(f.packed, a);
            assert_eq!(f.lower(&s), zero_matrix(&s, 3, 3));
        }
        let mm = MaxMin::default();
        let mut d = zero_matrix(&mm, 3, 3);
        d.set(1, 1, 0.4);
        let g = cholesky_idempotent(&mm, &d).unwrap();
        assert_eq!(g, zero_matrix(&mm, 3, 3));
        assert_eq!(star_gauss_jordan(&mm, &d).unwrap(), identity(&mm, 3));
    }

    #[test]
    fn strictly_lower_reduces_to_forward_substitution() {
        let s = MinPlus::new();
        let l = Matrix::from_rows(vec![vec![INF, INF, INF], vec![2.0, INF, INF], vec![INF, 1.0, INF]]);
        let b = [0.0, 7.0, 9.0];
        assert_eq!(closure_via_ldm(&s, &l, &b).unwrap(), crate::toeplitz::forward_subst(&s, &l, &b).unwrap());
    }

    #[test]
    fn cholesky_two_by_two() {
        let s = MinPlus::new();
        let g = cholesky_idempotent(&s, &two_by_two()).unwrap();
        assert_eq!(g, Matrix::from_rows(vec![vec![INF, INF], vec![1.0, INF]]));
        let gs = star_nilpotent(&s, &g).unwrap();
        let prod = mat_mul(&s, &gs.transpose(), &gs).unwrap();
        assert_eq!(prod, Matrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]));
        assert!(matches!(cholesky_idempotent(&Real::nonneg(), &two_by_two()), Err(Error::NotIdempotentSemiring(_))));
    }

    #[test]
    fn symmetric_input_required() {
        let s = MinPlus::new();
        let a = Matrix::from_rows(vec![vec![3.0, 1.0], vec![2.0, 3.0]]);
        assert_eq!(ldm_symmetric(&s, &a, LdmVersion::V1), Err(Error::NotSymmetric));
        assert_eq!(cholesky_idempotent(&s, &a), Err(Error::NotSymmetric));
    }

    #[test]
    fn symmetric_v2_needs_inverses() {
        let s = MaxMin::default();
        let a = Matrix::from_rows(vec![vec![0.3, 0.5], vec![0.5, 0.2]]);
        assert!(matches!(ldm_symmetric(&s, &a, LdmVersion::V2), Err(Error::NoInverse { .. })));
        assert!(ldm_symmetric(&s, &a, LdmVersion::V1).is_ok());
    }

    #[test]
    fn tridiagonal_band() {
        let s = MinPlus::new();
        let mut a = zero_matrix(&s, 4, 4);
        for i in 0..4 {
            a.set(i, i, 5.0);
            if i + 1 < 4 {
                a.set(i, i + 1, 1.0);
                a.set(i + 1, i, 1.0);
            }
        }
        let band = ldm_tridiagonal(&s, &a).unwrap();
        let full = ldm_decompose(&s, &a, LdmVersion::V1).unwrap();
        assert_eq!(band.packed, full.packed);
        assert!(factor_bandwidths(&s, &band) <= (1, 1));
        let wide = ldm_band(&s, &a, 3, 3).unwrap();
        assert_eq!(wide.packed, full.packed);
        let mut bad = a.clone();
        bad.set(3, 0, 2.0);
        assert!(matches!(ldm_tridiagonal(&s, &bad), Err(Error::BandViolation { row: 3, col: 0, .. })));
    }

    #[test]
    fn decomposition_counts() {
        for n in [10usize, 20, 40] {
            let s = make_counting(MinPlus::new());
            let a = Matrix::filled(n, n, 1.0);
            for v in [LdmVersion::V1, LdmVersion::V2] {
                s.reset();
                ldm_decompose(&s, &a, v).unwrap();
                let c = s.counts();
                let bound = (n * n * n / 3 + 10 * n * n) as u64;
                assert!(c.add <= bound && c.mul <= bound, "{v:?} {c:?}");
                assert_eq!(c.star, n as u64 - 1);
            }
            s.reset();
            ldm_symmetric(&s, &a, LdmVersion::V1).unwrap();
            let c = s.counts();
            let bound = (n * n * n / 6 + 10 * n * n) as u64;
            assert!(c.add <= bound && c.mul <= bound, "{c:?}");
            assert_eq!(c.star, n as u64 - 1);
        }
        // band: about n p q for fixed p, q
        let s = make_counting(MinPlus::new());
        let n = 200;
        let mut a = zero_matrix(&s, n, n);
        for i in 0..n {
            for j in i.saturating_sub(2)..(i + 4).min(n) {
                a.set(i, j, 1.0);
            }
        }
        ldm_band(&s, &a, 2, 3).unwrap();
        let c = s.counts();
        assert!(c.mul <= (n * (2 * 3 + 2 + 3)) as u64, "{c:?}");
        assert!(c.add <= (n * 2 * 3) as u64, "{c:?}");
    }

    fn mp_matrix(n: usize) -> impl Strategy<Value = Matrix<f64>> {
        proptest::collection::vec(prop_oneof![1 => Just(NINF), 3 => (-9i32..=0).prop_map(f64::from)], n * n)
            .prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
    }

    fn symmetric<T: Clone>(mut m: Matrix<T>) -> Matrix<T> {
        mirror_lower(&mut m);
        m
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn versions_agree(a in mp_matrix(6)) {
            let s = MaxPlus::new();
            let v1 = ldm_decompose(&s, &a, LdmVersion::V1).unwrap();
            prop_assert_eq!(&ldm_decompose(&s, &a, LdmVersion::V2).unwrap(), &v1);
            prop_assert_eq!(v1.closure(&s).unwrap(), star_gauss_jordan(&s, &a).unwrap());
        }

        #[test]
        fn symmetric_matches_full(a in (1usize..=6).prop_flat_map(mp_matrix)) {
            let s = MaxPlus::new();
            let a = symmetric(a);
            let full = ldm_decompose(&s, &a, LdmVersion::V1).unwrap();
            for v in [LdmVersion::V1, LdmVersion::V2] {
                let sym = ldm_symmetric(&s, &a, v).unwrap();
                prop_assert_eq!(sym.lower(&s), full.lower(&s));
                prop_assert_eq!(sym.diagonal(&s), full.diagonal(&s));
            }
        }

        #[test]
        fn symmetric_reconstruction_max_min(d in proptest::collection::vec((0u32..=10).prop_map(|k| f64::from(k) / 10.0), 25)) {
            let s = MaxMin::default();
            let a = symmetric(Matrix::from_vec(5, 5, d).unwrap());
            let f = ldm_symmetric(&s, &a, LdmVersion::V1).unwrap();
            let l = f.lower(&s);
            prop_assert_eq!(f.upper(&s), l.transpose());
            prop_assert_eq!(f.closure(&s).unwrap(), star_gauss_jordan(&s, &a).unwrap());
        }

        #[test]
        fn cholesky_boolean(d in proptest::collection::vec(any::<bool>(), 25)) {
            let s = Boolean;
            let a = symmetric(Matrix::from_vec(5, 5, d).unwrap());
            let g = cholesky_idempotent(&s, &a).unwrap();
            let gs = star_nilpotent(&s, &g).unwrap();
            prop_assert_eq!(mat_mul(&s, &gs.transpose(), &gs).unwrap(), star_gauss_jordan(&s, &a).unwrap());
        }

        #[test]
        fn band_preserved_and_matches_full(a in mp_matrix(7), p in 0usize..4, q in 0usize..4) {
            let s = MaxPlus::new();
            let mut a = a;
            for i in 0..7 { for j in 0..7 { if i > j + p || j > i + q { a.set(i, j, NINF); } } }
            let band = ldm_band(&s, &a, p, q).unwrap();
            let (bp, bq) = factor_bandwidths(&s, &band);
            prop_assert!(bp <= p && bq <= q);
            prop_assert_eq!(band.packed, ldm_decompose(&s, &a, LdmVersion::V1).unwrap().packed);
        }

        #[test]
        fn hessenberg_matches_full(a in mp_matrix(6)) {
            let s = MaxPlus::new();
            let mut a = a;
            for i in 0..6 { for j in 0..6 { if i > j + 1 { a.set(i, j, NINF); } } }
            prop_assert_eq!(ldm_hessenberg(&s, &a).unwrap().packed, ldm_decompose(&s, &a, LdmVersion::V1).unwrap().packed);
        }

        #[test]
        fn factor_sum_identities(a in mp_matrix(4)) {
            // A* = M* D* L* with L = L_1 ⊕ … ⊕ L_n, L* = L_n* ⋯ L_1*
            // (and dually for M), where L_k holds column k of L.
            let s = MaxPlus::new();
            let n = 4;
            let f = ldm_decompose(&s, &a, LdmVersion::V1).unwrap();
            let column_part = |m: &Matrix<f64>, k: usize, by_col: bool| {
                let mut out = zero_matrix(&s, n, n);
                for i in 0..n { for j in 0..n {
                    if (by_col && j == k) || (!by_col && i == k) { out.set(i, j, *m.get(i, j)); }
                } }
                out
            };
            let l = f.lower(&s);
            let m = f.upper(&s);
            let mut lk_sum = zero_matrix(&s, n, n);
            let mut lprod = identity(&s, n);
            let mut mprod = identity(&s, n);
            for k in 0..n {
                let lk = column_part(&l, k, true);
                lk_sum = mat_add(&s, &lk_sum, &lk).unwrap();
                lprod = mat_mul(&s, &star_nilpotent(&s, &lk).unwrap(), &lprod).unwrap();
                let mk = column_part(&m, k, false);
                mprod = mat_mul(&s, &mprod, &star_nilpotent(&s, &mk).unwrap()).unwrap();
            }
            prop_assert_eq!(&lk_sum, &l);
            prop_assert_eq!(&lprod, &star_nilpotent(&s, &l).unwrap());
            prop_assert_eq!(&mprod, &star_nilpotent(&s, &m).unwrap());
            let b: Vec<f64> = (0..n).map(|i| -(i as f64)).collect();
            prop_assert_eq!(f.solve(&s, &b).unwrap(), mat_vec(&s, &star_gauss_jordan(&s, &a).unwrap(), &b).unwrap());
        }

        #[test]
        fn real_ldm_matches_inverse(d in proptest::collection::vec(0.0f64..0.15, 25)) {
            let s = Real::nonneg();
            let a = Matrix::from_vec(5, 5, d).unwrap();
            let f = ldm_decompose(&s, &a, LdmVersion::V2).unwrap();
            prop_assert!(mat_approx_eq(&s, &f.closure(&s).unwrap(), &star_gauss_jordan(&s, &a).unwrap(), 1e-12));
        }
    }
}
