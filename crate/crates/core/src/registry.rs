//! Closure methods behind a common interface, looked up by name.
//!
//! | Name           | Method                                       |
//! |----------------|----------------------------------------------|
//! | `escalator`    | [`star_escalator`]                           |
//! | `gauss-jordan` | [`star_gauss_jordan`]                        |
//! | `block`        | [`star_block`], split `⌈n/2⌉` unless given   |
//! | `ldm`          | LDM factorization and substitution           |
//! | `nilpotent`    | [`star_nilpotent`], strictly triangular only |
//! | `jacobi`       | [`jacobi_solve`] column by column            |
//! | `gauss-seidel` | [`gauss_seidel_solve`] column by column      |

use crate::closure::{star_block, star_block_halving, star_escalator, star_gauss_jordan, star_nilpotent};
use crate::error::{Error, Result};
use crate::iterative::{gauss_seidel_solve, jacobi_solve, IterationReport, StopPolicy};
use crate::ldm::{ldm_decompose, LdmVersion};
use crate::matrix::{identity, mat_mul, require_square, Matrix};
use crate::semiring::Semiring;

/// An algorithm for `A*` and for least solutions `A* B` of `X = AX ⊕ B`.
pub trait ClosureMethod<S: Semiring>: Send + Sync {
    fn name(&self) -> &'static str;

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>>;

    fn solve(&self, s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        mat_mul(s, &self.closure(s, a)?, b)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Escalator;

impl<S: Semiring> ClosureMethod<S> for Escalator {
    fn name(&self) -> &'static str {
        "escalator"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        star_escalator(s, a)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GaussJordan;

impl<S: Semiring> ClosureMethod<S> for GaussJordan {
    fn name(&self) -> &'static str {
        "gauss-jordan"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        star_gauss_jordan(s, a)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Block {
    /// Order of the leading block; `None` halves.
    pub split: Option<usize>,
}

impl<S: Semiring> ClosureMethod<S> for Block {
    fn name(&self) -> &'static str {
        "block"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        match self.split {
            Some(k) => star_block(s, a, k),
            None => star_block_halving(s, a),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Ldm {
    pub version: LdmVersion,
}

impl<S: Semiring> ClosureMethod<S> for Ldm {
    fn name(&self) -> &'static str {
        "ldm"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        let n = require_square(a)?;
        self.solve(s, a, &identity(s, n))
    }

    fn solve(&self, s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        let f = ldm_decompose(s, a, self.version)?;
        by_columns(s, a, b, |col| f.solve(s, col))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Nilpotent;

impl<S: Semiring> ClosureMethod<S> for Nilpotent {
    fn name(&self) -> &'static str {
        "nilpotent"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        star_nilpotent(s, a)
    }
}

/// Settings shared by the iterative methods. Unset fields take the
/// defaults of [`StopPolicy::for_semiring`]; the start vector defaults to
/// zero.
#[derive(Debug, Clone, PartialEq)]
pub struct IterativeOptions<E> {
    pub tolerance: Option<f64>,
    pub max_iterations: Option<usize>,
    pub x0: Option<Vec<E>>,
}

impl<E> Default for IterativeOptions<E> {
    fn default() -> Self {
        IterativeOptions { tolerance: None, max_iterations: None, x0: None }
    }
}

impl<E: Clone> IterativeOptions<E> {
    pub fn policy<S: Semiring>(&self, s: &S, n: usize) -> StopPolicy {
        let mut p = StopPolicy::for_semiring(s, n);
        if let Some(t) = self.tolerance {
            p.tolerance = t;
        }
        if let Some(k) = self.max_iterations {
            p.max_iterations = k;
        }
        p
    }

    fn start<S: Semiring<Elem = E>>(&self, s: &S, n: usize) -> Result<Vec<E>> {
        match &self.x0 {
            Some(x) if x.len() != n => {
                Err(Error::ShapeMismatch(format!("start vector of length {} for an order {n} system", x.len())))
            }
            Some(x) => Ok(x.clone()),
            None => Ok(vec![s.zero(); n]),
        }
    }
}

type Iteration<S> = fn(
    &S,
    &Matrix<<S as Semiring>::Elem>,
    &[<S as Semiring>::Elem],
    &[<S as Semiring>::Elem],
    &StopPolicy,
) -> Result<IterationReport<<S as Semiring>::Elem>>;

fn solve_iteratively<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    opts: &IterativeOptions<S::Elem>,
    name: &str,
    run: Iteration<S>,
) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    let policy = opts.policy(s, n);
    let x0 = opts.start(s, n)?;
    by_columns(s, a, b, |col| run(s, a, col, &x0, &policy)?.into_result(name))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Jacobi<E> {
    pub options: IterativeOptions<E>,
}

impl<E> Default for Jacobi<E> {
    fn default() -> Self {
        Jacobi { options: IterativeOptions::default() }
    }
}

impl<S: Semiring> ClosureMethod<S> for Jacobi<S::Elem> {
    fn name(&self) -> &'static str {
        "jacobi"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        let n = require_square(a)?;
        self.solve(s, a, &identity(s, n))
    }

    fn solve(&self, s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        solve_iteratively(s, a, b, &self.options, "jacobi", jacobi_solve::<S>)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussSeidel<E> {
    pub options: IterativeOptions<E>,
}

impl<E> Default for GaussSeidel<E> {
    fn default() -> Self {
        GaussSeidel { options: IterativeOptions::default() }
    }
}

impl<S: Semiring> ClosureMethod<S> for GaussSeidel<S::Elem> {
    fn name(&self) -> &'static str {
        "gauss-seidel"
    }

    fn closure(&self, s: &S, a: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        let n = require_square(a)?;
        self.solve(s, a, &identity(s, n))
    }

    fn solve(&self, s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
        solve_iteratively(s, a, b, &self.options, "gauss-seidel", gauss_seidel_solve::<S>)
    }
}

fn by_columns<S: Semiring>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    mut solve: impl FnMut(&[S::Elem]) -> Result<Vec<S::Elem>>,
) -> Result<Matrix<S::Elem>> {
    let n = require_square(a)?;
    if b.rows() != n {
        return Err(Error::ShapeMismatch(format!("order {n} system with a {}x{} right-hand side", b.rows(), b.cols())));
    }
    let mut x = Matrix::filled(n, b.cols(), s.zero());
    for j in 0..b.cols() {
        for (i, v) in solve(&b.col(j))?.into_iter().enumerate() {
            x.set(i, j, v);
        }
    }
    Ok(x)
}

/// Knobs a method may read when it is built from the registry.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodOptions<E> {
    pub split: Option<usize>,
    pub ldm_version: LdmVersion,
    pub iterative: IterativeOptions<E>,
}

impl<E> Default for MethodOptions<E> {
    fn default() -> Self {
        MethodOptions { split: None, ldm_version: LdmVersion::default(), iterative: IterativeOptions::default() }
    }
}

pub type Factory<S> = Box<dyn Fn(&MethodOptions<<S as Semiring>::Elem>) -> Box<dyn ClosureMethod<S>> + Send + Sync>;

/// Name → constructor table of closure methods.
pub struct MethodRegistry<S: Semiring> {
    entries: Vec<(&'static str, Factory<S>)>,
}

impl<S: Semiring + 'static> MethodRegistry<S> {
    pub fn empty() -> Self {
        MethodRegistry { entries: Vec::new() }
    }

    /// Registry holding every method of the crate.
    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register("escalator", Box::new(|_| Box::new(Escalator)));
        r.register("gauss-jordan", Box::new(|_| Box::new(GaussJordan)));
        r.register("block", Box::new(|o| Box::new(Block { split: o.split })));
        r.register("ldm", Box::new(|o| Box::new(Ldm { version: o.ldm_version })));
        r.register("nilpotent", Box::new(|_| Box::new(Nilpotent)));
        r.register("jacobi", Box::new(|o| Box::new(Jacobi { options: o.iterative.clone() })));
        r.register("gauss-seidel", Box::new(|o| Box::new(GaussSeidel { options: o.iterative.clone() })));
        r
    }

    /// Adds a method, replacing any previous one of the same name.
    pub fn register(&mut self, name: &'static str, factory: Factory<S>) {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, factory));
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }

    pub fn create(&self, name: &str, options: &MethodOptions<S::Elem>) -> Result<Box<dyn ClosureMethod<S>>> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| f(options))
            .ok_or_else(|| Error::UnknownMethod(format!("`{name}` (known: {})", self.names().join(", "))))
    }
}

/// Least solution `X = A* B` of `X = AX ⊕ B` by the named method with
/// default options.
pub fn solve_bellman<S: Semiring + 'static>(
    s: &S,
    a: &Matrix<S::Elem>,
    b: &Matrix<S::Elem>,
    method: &str,
) -> Result<Matrix<S::Elem>> {
    MethodRegistry::with_defaults().create(method, &MethodOptions::default())?.solve(s, a, b)
}
