//! Jacobi and Gauss–Seidel iterations for `x = Ax ⊕ b`.
//!
//! Started from the zero vector, the `m`-th Jacobi iterate is the
//! truncated series `b ⊕ Ab ⊕ … ⊕ A^{m-1} b`. Over idempotent instances
//! without improving cycles it stops changing after at most `n` steps and
//! then equals `A* b` exactly.

use crate::error::{Error, Result};
use crate::matrix::{dot, mat_vec, require_square, Matrix};
use crate::semiring::Semiring;
use crate::toeplitz::forward_unchecked;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StopPolicy {
    /// Two consecutive iterates closer than this count as stable; 0 asks
    /// for exact equality.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Iterates with an entry larger than this in magnitude are reported
    /// as diverging.
    pub divergence_bound: f64,
}

impl StopPolicy {
    /// Exact stabilization for idempotent instances, `1e-12` otherwise.
    /// The cap is `10n` sweeps, raised to 1000 for non-idempotent
    /// instances where convergence is only geometric.
    pub fn for_semiring<S: Semiring>(s: &S, n: usize) -> Self {
        if s.is_idempotent() {
            StopPolicy { tolerance: 0.0, max_iterations: (10 * n).max(1), divergence_bound: 1e100 }
        } else {
            StopPolicy { tolerance: 1e-12, max_iterations: (10 * n).max(1000), divergence_bound: 1e100 }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::Parse("iteration cap must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return Err(Error::Parse(format!("tolerance must be nonnegative, got {}", self.tolerance)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Converged,
    Diverged,
    IterationCap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationReport<E> {
    /// Present exactly when the iteration converged.
    pub solution: Option<Vec<E>>,
    pub status: Status,
    /// Index of the first iterate equal to the limit when converged;
    /// otherwise the number of sweeps performed.
    pub iterations: usize,
    pub sweeps: usize,
}

impl<E> IterationReport<E> {
    /// The solution, or [`Error::NoConvergence`] describing the outcome.
    pub fn into_result(self, method: &str) -> Result<Vec<E>> {
        match (self.status, self.solution) {
            (Status::Converged, Some(x)) => Ok(x),
            (Status::Diverged, _) => {
                Err(Error::NoConvergence(format!("{method} iterations diverged after {} sweeps", self.sweeps)))
            }
            _ => Err(Error::NoConvergence(format!(
                "{method} iterations did not stabilize within {} sweeps",
                self.sweeps
            ))),
        }
    }
}

pub fn jacobi_solve<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &[S::Elem],
    x0: &[S::Elem],
    policy: &StopPolicy,
) -> Result<IterationReport<S::Elem>> {
    check_shapes(a, b, x0)?;
    iterate(s, a, b, x0, policy, |x| {
        let ax = mat_vec(s, a, x).expect("shapes checked");
        ax.iter().zip(b).map(|(u, v)| s.add(u, v)).collect()
    })
}

/// Each sweep forms `y = U x ⊕ b`, with `U` the upper triangle including
/// the diagonal, then solves `x = L x ⊕ y` by forward substitution with
/// the strictly lower part `L`.
pub fn gauss_seidel_solve<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &[S::Elem],
    x0: &[S::Elem],
    policy: &StopPolicy,
) -> Result<IterationReport<S::Elem>> {
    check_shapes(a, b, x0)?;
    iterate(s, a, b, x0, policy, |x| {
        let y: Vec<S::Elem> = (0..b.len()).map(|i| s.add(&dot(s, &a.row(i)[i..], &x[i..]), &b[i])).collect();
        forward_unchecked(s, a, &y)
    })
}

fn check_shapes<E>(a: &Matrix<E>, b: &[E], x0: &[E]) -> Result<()> {
    let n = require_square(a)?;
    if b.len() != n || x0.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "order {n} system with right-hand side of length {} and start of length {}",
            b.len(),
            x0.len()
        )));
    }
    Ok(())
}

fn iterate<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &[S::Elem],
    x0: &[S::Elem],
    policy: &StopPolicy,
    sweep: impl Fn(&[S::Elem]) -> Vec<S::Elem>,
) -> Result<IterationReport<S::Elem>> {
    policy.validate()?;
    let n = b.len();
    let from_zero = x0.iter().all(|x| s.is_zero(x));
    let mut x = x0.to_vec();
    let mut probed = false;
    for k in 1..=policy.max_iterations {
        let next = sweep(&x);
        let report = |status, solution| IterationReport {
            solution,
            status,
            iterations: if status == Status::Converged { k - 1 } else { k },
            sweeps: k,
        };
        let persisting_top = next.iter().zip(&x).any(|(u, v)| s.is_top(u) && s.is_top(v));
        if persisting_top || next.iter().any(|u| s.magnitude(u) > policy.divergence_bound) {
            return Ok(report(Status::Diverged, None));
        }
        if next.iter().zip(&x).all(|(u, v)| s.approx_eq(u, v, policy.tolerance)) {
            return Ok(report(Status::Converged, Some(next)));
        }
        if s.is_idempotent() && !probed && k > n {
            probed = true;
            let improving = if from_zero {
                true
            } else {
                let b2: Vec<S::Elem> = b.iter().zip(x0).map(|(u, v)| s.add(u, v)).collect();
                !series_stabilizes(s, a, &b2)
            };
            if improving {
                return Ok(report(Status::Diverged, None));
            }
        }
        x = next;
    }
    Ok(IterationReport {
        solution: None,
        status: Status::IterationCap,
        iterations: policy.max_iterations,
        sweeps: policy.max_iterations,
    })
}

// Whether b ⊕ Ab ⊕ … stops changing after n terms. Over an idempotent
// instance it fails only if walks of length n beat all shorter ones, which
// needs an improving cycle.
fn series_stabilizes<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &[S::Elem]) -> bool {
    let n = b.len();
    let mut y = vec![s.zero(); n];
    for _ in 0..=n {
        let ay = mat_vec(s, a, &y).expect("square");
        let next: Vec<S::Elem> = ay.iter().zip(b).map(|(u, v)| s.add(u, v)).collect();
        if next == y {
            return true;
        }
        y = next;
    }
    false
}
