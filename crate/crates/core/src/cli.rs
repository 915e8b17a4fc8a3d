//! The `srpk` command line.
//!
//! Every command reads text files in the formats of [`crate::io`] and
//! writes its result in the matrix format, to `--output` or stdout.
//! Exit status is 0 on success, 1 when the mathematics fails (no closure,
//! no inverse, no convergence) and 2 for bad input or usage.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{closure_with_links, reconstruct_path};
use crate::io::{format_matrix, format_vector, parse_edge_list, parse_matrix, parse_vector};
use crate::ldm::{cholesky_idempotent, ldm_band, ldm_decompose, ldm_symmetric, LdmFactors, LdmVersion};
use crate::matrix::Matrix;
use crate::random::{random_matrix, random_vector, RandomWeights};
use crate::registry::{IterativeOptions, MethodOptions, MethodRegistry};
use crate::select::{SemiringKind, SemiringVisitor};
use crate::toeplitz::{durbin_yule_walker, levinson_solve, ToeplitzSpec, Variant};

/// Environment variable holding the seed for `--random` inputs.
pub const SEED_VAR: &str = "SRPK_SEED";

#[derive(Debug, Parser)]
#[command(name = "srpk", version, about = "Closures and Bellman equations over semirings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute A* of a matrix or of a graph's adjacency matrix.
    Closure {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        method: MethodArgs,
    },
    /// Least solution X = A* B of X = AX + B.
    Solve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: MatrixInput,
        /// Right-hand side: a vector or an n × s matrix.
        #[arg(long, value_name = "FILE")]
        rhs: Option<PathBuf>,
        #[command(flatten)]
        method: MethodArgs,
        /// Start vector of the iterative methods: `zero` or a vector file.
        #[arg(long, value_name = "zero|FILE", default_value = "zero")]
        x0: String,
    },
    /// LDM factors, packed: L below the diagonal, D on it, M above.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, default_value = "v1", value_name = "v1|v2")]
        version: String,
        /// Use the symmetric factorization (M = Lᵀ).
        #[arg(long)]
        symmetric: bool,
        /// Band factorization with lower and upper bandwidths `p,q`.
        #[arg(long, value_name = "P,Q", conflicts_with_all = ["symmetric", "cholesky"])]
        band: Option<String>,
        /// Idempotent Cholesky factor G, with A* = (G*)ᵀ G* when D* = I.
        #[arg(long, conflicts_with = "symmetric")]
        cholesky: bool,
        /// Write L, D and M as three separate matrices.
        #[arg(long, conflicts_with = "cholesky")]
        expand: bool,
    },
    /// All-pairs path values and one optimal path per pair (1-based nodes).
    Path {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
    },
    /// Solve y = T y + r for the symmetric Toeplitz T built from r0, r.
    YuleWalker {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        toeplitz: ToeplitzArgs,
    },
    /// Solve x = T x + b for the symmetric Toeplitz T built from r0, r.
    ToeplitzSolve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        toeplitz: ToeplitzArgs,
        #[arg(long, value_name = "FILE")]
        rhs: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// real, real-complete, max-plus, max-plus-complete, min-plus,
    /// min-plus-complete, max-times, max-min[:lo,hi], boolean, or
    /// interval:<name>.
    #[arg(long)]
    pub semiring: String,
    /// Output file; stdout when omitted.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MatrixInput {
    /// Square matrix file.
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,
    /// Edge-list file.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Random n × n input with an existing closure, seeded by SRPK_SEED.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    /// escalator, gauss-jordan, block, ldm, nilpotent, jacobi or
    /// gauss-seidel.
    #[arg(long, default_value = "gauss-jordan")]
    pub algorithm: String,
    /// Order of the leading block for `block`.
    #[arg(long)]
    pub split: Option<usize>,
    /// LDM loop order for `ldm`.
    #[arg(long, value_name = "v1|v2", default_value = "v1")]
    pub ldm_version: String,
    /// Iteration cap for `jacobi` and `gauss-seidel`.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Stabilization tolerance for `jacobi` and `gauss-seidel`.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ToeplitzArgs {
    /// Diagonal coefficient r0, as an element token.
    #[arg(long, allow_hyphen_values = true)]
    pub r0: String,
    /// Off-diagonal coefficients r1, r2, ... as a vector file.
    #[arg(long, value_name = "FILE")]
    pub r: PathBuf,
    #[arg(long, default_value = "general", value_name = "general|inverse")]
    pub variant: String,
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoClosure { .. } | Error::NoInverse { .. } | Error::NoConvergence(_) | Error::UnboundedPath { .. } => 1,
        _ => 2,
    }
}

/// Runs a parsed command line and returns the exit status. Diagnostics go
/// to `err`, results to `--output` or `out`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli) {
        Ok(text) => {
            let common = common(&cli.command);
            let written = match &common.output {
                Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(msg) => {
                    let _ = writeln!(err, "srpk: {msg}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "srpk: {e}");
            exit_code(&e)
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Closure { common, .. }
        | Command::Solve { common, .. }
        | Command::Decompose { common, .. }
        | Command::Path { common, .. }
        | Command::YuleWalker { common, .. }
        | Command::ToeplitzSolve { common, .. } => common,
    }
}

/// Runs a command and returns the text it would write.
pub fn execute(cli: &Cli) -> Result<String, Error> {
    let kind: SemiringKind = common(&cli.command).semiring.parse()?;
    kind.visit(Runner { cmd: &cli.command })?
}

struct Runner<'a> {
    cmd: &'a Command,
}

impl SemiringVisitor for Runner<'_> {
    type Output = Result<String, Error>;

    fn visit<S: RandomWeights + Clone + 'static>(self, s: S) -> Result<String, Error> {
        match self.cmd {
            Command::Closure { input, method, .. } => {
                let (a, _) = load_input(&s, input)?;
                let m = build_method(&s, method, IterativeOptions::default())?;
                Ok(format_matrix(&s, &m.closure(&s, &a)?))
            }
            Command::Solve { input, rhs, method, x0, .. } => {
                let (a, rng) = load_input(&s, input)?;
                let n = a.rows();
                let b = match (rhs, rng) {
                    (Some(path), _) => read_rhs(&s, path, n)?,
                    (None, Some(mut rng)) => Matrix::column(random_vector(&s, &mut rng, n)),
                    (None, None) => return Err(Error::Parse("solve needs --rhs".into())),
                };
                let x0 = match x0.as_str() {
                    "zero" => None,
                    path => Some(parse_vector(&s, &read(Path::new(path))?)?),
                };
                let iterative = IterativeOptions { tolerance: method.tol, max_iterations: method.max_iter, x0 };
                let m = build_method(&s, method, iterative)?;
                Ok(format_matrix(&s, &m.solve(&s, &a, &b)?))
            }
            Command::Decompose { input, version, symmetric, band, cholesky, expand, .. } => {
                let (a, _) = load_input(&s, input)?;
                let version: LdmVersion = version.parse()?;
                if *cholesky {
                    return Ok(format_matrix(&s, &cholesky_idempotent(&s, &a)?));
                }
                let f = match band {
                    Some(pq) => {
                        let (p, q) = parse_band(pq)?;
                        ldm_band(&s, &a, p, q)?
                    }
                    None if *symmetric => ldm_symmetric(&s, &a, version)?,
                    None => ldm_decompose(&s, &a, version)?,
                };
                Ok(if *expand { format_expanded(&s, &f) } else { format_matrix(&s, &f.packed) })
            }
            Command::Path { graph, from, to, .. } => {
                let g = parse_edge_list(&s, &read(graph)?)?;
                let n = g.node_count();
                let cl = closure_with_links(&g)?;
                let pairs: Vec<(usize, usize)> = match (from, to) {
                    (Some(i), Some(j)) => {
                        for k in [*i, *j] {
                            if k == 0 || k > n {
                                return Err(Error::Parse(format!("node {k} outside 1..={n}")));
                            }
                        }
                        vec![(i - 1, j - 1)]
                    }
                    _ => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
                };
                let mut text = format_matrix(&s, &cl.closure);
                text.push_str("# from to value nodes\n");
                for (i, j) in pairs {
                    let value = s.format_elem(cl.closure.get(i, j));
                    let nodes = match reconstruct_path(&s, &cl, i, j) {
                        Ok(p) => p.nodes.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "),
                        Err(Error::NoPath { .. }) => "none".to_string(),
                        Err(Error::UnboundedPath { .. }) => "unbounded".to_string(),
                        Err(e) => return Err(e),
                    };
                    text.push_str(&format!("{} {} {value} {nodes}\n", i + 1, j + 1));
                }
                Ok(text)
            }
            Command::YuleWalker { toeplitz, .. } => {
                let (t, variant) = load_toeplitz(&s, toeplitz)?;
                Ok(format_vector(&s, &durbin_yule_walker(&s, &t, variant)?))
            }
            Command::ToeplitzSolve { toeplitz, rhs, .. } => {
                let (t, variant) = load_toeplitz(&s, toeplitz)?;
                let b = parse_vector(&s, &read(rhs)?)?;
                Ok(format_vector(&s, &levinson_solve(&s, &t, &b, variant)?))
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn seed() -> Result<u64, Error> {
    match std::env::var(SEED_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::Parse(format!("{SEED_VAR} must be an unsigned integer, got `{v}`")))
        }
        Err(_) => Ok(0),
    }
}

/// The square input matrix, plus the generator when it was random so
/// that further random data continues the same stream.
fn load_input<S: RandomWeights + Clone>(
    s: &S,
    input: &MatrixInput,
) -> Result<(Matrix<S::Elem>, Option<ChaCha8Rng>), Error> {
    if let Some(path) = &input.matrix {
        let a = parse_matrix(s, &read(path)?)?;
        if !a.is_square() {
            return Err(Error::ShapeMismatch(format!("expected a square matrix, found {}x{}", a.rows(), a.cols())));
        }
        return Ok((a, None));
    }
    if let Some(path) = &input.graph {
        return Ok((parse_edge_list(s, &read(path)?)?.to_matrix(), None));
    }
    let n = input.random.expect("clap requires one input");
    let mut rng = ChaCha8Rng::seed_from_u64(seed()?);
    let a = random_matrix(s, &mut rng, n);
    Ok((a, Some(rng)))
}

fn read_rhs<S: RandomWeights>(s: &S, path: &Path, n: usize) -> Result<Matrix<S::Elem>, Error> {
    let b = parse_matrix(s, &read(path)?)?;
    if b.rows() == 1 && b.cols() == n && n != 1 {
        return Ok(b.transpose());
    }
    Ok(b)
}

fn build_method<S: RandomWeights + 'static>(
    _s: &S,
    args: &MethodArgs,
    iterative: IterativeOptions<S::Elem>,
) -> Result<Box<dyn crate::registry::ClosureMethod<S>>, Error> {
    let options = MethodOptions { split: args.split, ldm_version: args.ldm_version.parse()?, iterative };
    MethodRegistry::<S>::with_defaults().create(&args.algorithm, &options)
}

fn parse_band(pq: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("--band expects `p,q`, got `{pq}`"));
    let (p, q) = pq.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn format_expanded<S: RandomWeights>(s: &S, f: &LdmFactors<S::Elem>) -> String {
    format!(
        "# L\n{}# D\n{}# M\n{}",
        format_matrix(s, &f.lower(s)),
        format_matrix(s, &f.diagonal(s)),
        format_matrix(s, &f.upper(s))
    )
}

fn load_toeplitz<S: RandomWeights>(s: &S, args: &ToeplitzArgs) -> Result<(ToeplitzSpec<S::Elem>, Variant), Error> {
    let r0 = s.parse_elem(&args.r0)?;
    let r = parse_vector(s, &read(&args.r)?)?;
    Ok((ToeplitzSpec::new(r0, r), args.variant.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("srpk").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn random_inputs_are_seeded() {
        let (code, a, _) = run_args(&["closure", "--semiring", "min-plus", "--random", "5"]);
        assert_eq!(code, 0);
        let (_, b, _) = run_args(&["closure", "--semiring", "min-plus", "--random", "5", "--algorithm", "ldm"]);
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_names_are_input_errors() {
        let (code, _, err) = run_args(&["closure", "--semiring", "tropical", "--random", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown semiring"), "{err}");
        let (code, _, _) = run_args(&["closure", "--semiring", "boolean", "--random", "2", "--algorithm", "x"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn band_argument() {
        assert_eq!(parse_band("1, 2").unwrap(), (1, 2));
        assert!(parse_band("1").is_err());
    }
}
