//! Closures and Bellman equations `X = AX ⊕ B` over semirings.
//!
//! Every algorithm is generic over [`Semiring`], so the same code computes
//! shortest paths (min-plus), widest paths (max-min), reachability
//! (Boolean) and `(I - A)^{-1}` over the reals.
//!
//! ```
//! use srpk::{star_gauss_jordan, Matrix, MinPlus};
//!
//! let inf = f64::INFINITY;
//! let a = Matrix::from_rows(vec![
//!     vec![inf, 1.0, 4.0],
//!     vec![inf, inf, 2.0],
//!     vec![inf, inf, inf],
//! ]);
//! let c = star_gauss_jordan(&MinPlus::new(), &a).unwrap();
//! assert_eq!(c.row(0), &[0.0, 1.0, 3.0]);
//! ```

pub mod cli;
pub mod closure;
pub mod error;
pub mod graph;
pub mod interval;
pub mod io;
pub mod iterative;
pub mod ldm;
pub mod matrix;
pub mod random;
pub mod registry;
pub mod select;
pub mod semiring;
pub mod toeplitz;

pub use closure::{
    star_block, star_block_halving, star_escalator, star_gauss_jordan, star_gauss_jordan_with_links, star_nilpotent,
    ClosureWithLinks,
};
pub use error::{Error, Result};
pub use graph::{
    algebraic_path, best_profit, graph_to_matrix, matrix_to_graph, reconstruct_path, PathResult, WeightedDigraph,
};
pub use interval::{Interval, IntervalSemiring};
pub use iterative::{gauss_seidel_solve, jacobi_solve, IterationReport, Status, StopPolicy};
pub use ldm::{
    cholesky_idempotent, closure_via_ldm, ldm_band, ldm_decompose, ldm_hessenberg, ldm_symmetric, ldm_tridiagonal,
    LdmFactors, LdmVersion,
};
pub use matrix::{identity, mat_add, mat_mul, mat_vec, zero_matrix, Matrix, MatrixSemiring};
pub use registry::{solve_bellman, ClosureMethod, MethodOptions, MethodRegistry};
pub use select::{SemiringKind, SemiringVisitor};
pub use semiring::{make_counting, Boolean, Counting, MaxMin, MaxPlus, MaxTimes, MinPlus, OpCounts, Real, Semiring};
pub use toeplitz::{backward_subst, durbin_yule_walker, forward_subst, levinson_solve, ToeplitzSpec, Variant};
