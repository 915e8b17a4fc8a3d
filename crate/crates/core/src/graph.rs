//! Weighted digraphs and the algebraic path problem.
//!
//! A graph on `n` nodes is the same thing as an `n × n` matrix: entry
//! `(i, j)` is the weight of arc `i → j`, or 0 when there is no arc. The
//! closure entry `a*_ij` is the ⊕-sum of the weights of all paths from `i`
//! to `j`, the weight of a path being the ⊙-product of its arc weights.
//!
//! Node indices are 0-based here; the text formats in [`crate::io`] are
//! 1-based.

use std::collections::VecDeque;

use crate::closure::{star_gauss_jordan, star_gauss_jordan_with_links, ClosureWithLinks};
use crate::error::{Error, Result};
use crate::matrix::{mat_vec, require_square, Matrix};
use crate::registry::ClosureMethod;
use crate::semiring::Semiring;

#[derive(Debug, Clone, PartialEq)]
pub struct Arc<E> {
    pub source: usize,
    pub target: usize,
    pub weight: E,
}

#[derive(Debug, Clone)]
pub struct WeightedDigraph<S: Semiring> {
    semiring: S,
    n: usize,
    arcs: Vec<Arc<S::Elem>>,
}

impl<S: Semiring> WeightedDigraph<S> {
    pub fn new(semiring: S, n: usize) -> Self {
        WeightedDigraph { semiring, n, arcs: Vec::new() }
    }

    /// Adds arc `i → j`. A second arc between the same ordered pair is
    /// merged into the first by ⊕.
    ///
    /// # Panics
    /// If either endpoint is out of range.
    pub fn add_arc(&mut self, i: usize, j: usize, w: S::Elem) {
        assert!(i < self.n && j < self.n, "arc ({i}, {j}) outside a graph on {} nodes", self.n);
        if let Some(arc) = self.arcs.iter_mut().find(|a| a.source == i && a.target == j) {
            arc.weight = self.semiring.add(&arc.weight, &w);
        } else {
            self.arcs.push(Arc { source: i, target: j, weight: w });
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc<S::Elem>] {
        &self.arcs
    }

    pub fn semiring(&self) -> &S {
        &self.semiring
    }

    pub fn to_matrix(&self) -> Matrix<S::Elem> {
        let s = &self.semiring;
        let mut a = Matrix::filled(self.n, self.n, s.zero());
        for arc in &self.arcs {
            a.set(arc.source, arc.target, arc.weight.clone());
        }
        a
    }
}

pub fn graph_to_matrix<S: Semiring>(g: &WeightedDigraph<S>) -> Matrix<S::Elem> {
    g.to_matrix()
}

/// One arc per nonzero entry, in row-major order.
pub fn matrix_to_graph<S: Semiring + Clone>(s: &S, a: &Matrix<S::Elem>) -> Result<WeightedDigraph<S>> {
    let n = require_square(a)?;
    let mut g = WeightedDigraph::new(s.clone(), n);
    for i in 0..n {
        for j in 0..n {
            if !s.is_zero(a.get(i, j)) {
                g.add_arc(i, j, a.get(i, j).clone());
            }
        }
    }
    Ok(g)
}

/// All-pairs path values `A*` computed by `method`.
pub fn algebraic_path<S: Semiring>(g: &WeightedDigraph<S>, method: &dyn ClosureMethod<S>) -> Result<Matrix<S::Elem>> {
    method.closure(g.semiring(), &g.to_matrix())
}

/// Best total profit from every node, where following an arc earns its
/// weight and leaving the graph at node `i` earns `terminal[i]`: `A* b`.
pub fn best_profit<S: Semiring>(g: &WeightedDigraph<S>, terminal: &[S::Elem]) -> Result<Vec<S::Elem>> {
    let s = g.semiring();
    if !s.is_idempotent() {
        return Err(Error::NotIdempotentSemiring(s.name()));
    }
    let c = star_gauss_jordan(s, &g.to_matrix())?;
    mat_vec(s, &c, terminal)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathResult<E> {
    pub value: E,
    /// Node sequence from source to target; a single node for the empty
    /// path.
    pub nodes: Vec<usize>,
}

/// Closure with parental links for the graph's matrix.
pub fn closure_with_links<S: Semiring>(g: &WeightedDigraph<S>) -> Result<ClosureWithLinks<S::Elem>> {
    star_gauss_jordan_with_links(g.semiring(), &g.to_matrix())
}

/// An optimal path from `i` to `j`: its weight equals `a*_ij`.
///
/// Follows the parental links first. If that does not give a path of the
/// right weight (ties can send links around zero-weight cycles) it falls
/// back to a search over arcs that stay optimal.
pub fn reconstruct_path<S: Semiring>(
    s: &S,
    cl: &ClosureWithLinks<S::Elem>,
    i: usize,
    j: usize,
) -> Result<PathResult<S::Elem>> {
    let c = &cl.closure;
    let n = c.rows();
    if i >= n || j >= n {
        return Err(Error::ShapeMismatch(format!("node pair ({i}, {j}) outside {n} nodes")));
    }
    let value = c.get(i, j).clone();
    if s.is_zero(&value) {
        return Err(Error::NoPath { from: i, to: j });
    }
    if i == j && s.is_one(&value) {
        return Ok(PathResult { value, nodes: vec![i] });
    }
    let mut nodes = vec![i];
    let mut budget = n * n;
    if follow_links(cl, i, j, &mut nodes, &mut budget) && path_weight(s, &cl.arcs, &nodes).as_ref() == Some(&value) {
        return Ok(PathResult { value, nodes });
    }
    match tight_search(s, cl, i, j) {
        Some(nodes) => Ok(PathResult { value, nodes }),
        None => Err(Error::UnboundedPath { from: i, to: j }),
    }
}

fn follow_links<E>(cl: &ClosureWithLinks<E>, i: usize, j: usize, nodes: &mut Vec<usize>, budget: &mut usize) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    match *cl.links.get(i, j) {
        None => {
            nodes.push(j);
            true
        }
        Some(k) if k == i || k == j => false,
        Some(k) => follow_links(cl, i, k, nodes, budget) && follow_links(cl, k, j, nodes, budget),
    }
}

/// ⊙-product of arc weights along `nodes`, or `None` if some step is not
/// an arc.
pub fn path_weight<S: Semiring>(s: &S, arcs: &Matrix<S::Elem>, nodes: &[usize]) -> Option<S::Elem> {
    let mut w = s.one();
    for step in nodes.windows(2) {
        let a = arcs.get(step[0], step[1]);
        if s.is_zero(a) {
            return None;
        }
        w = s.mul(&w, a);
    }
    Some(w)
}

// Breadth-first search along arcs (u, t) that keep the prefix optimal:
// prefix(u) ⊙ a_ut ⊙ c_tj = c_ij.
fn tight_search<S: Semiring>(s: &S, cl: &ClosureWithLinks<S::Elem>, i: usize, j: usize) -> Option<Vec<usize>> {
    let (a, c) = (&cl.arcs, &cl.closure);
    let n = c.rows();
    let target = c.get(i, j);
    let mut prefix: Vec<Option<S::Elem>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    prefix[i] = Some(s.one());
    queue.push_back(i);
    while let Some(u) = queue.pop_front() {
        let pu = prefix[u].clone().expect("queued nodes have a prefix");
        for t in 0..n {
            if s.is_zero(a.get(u, t)) || (t != j && prefix[t].is_some()) {
                continue;
            }
            let pt = s.mul(&pu, a.get(u, t));
            if s.mul(&pt, c.get(t, j)) != *target {
                continue;
            }
            if t == j && pt == *target {
                let mut nodes = vec![j];
                let mut v = u;
                nodes.push(v);
                while v != i {
                    v = parent[v];
                    nodes.push(v);
                }
                nodes.reverse();
                return Some(nodes);
            }
            if prefix[t].is_none() {
                prefix[t] = Some(pt);
                parent[t] = u;
                queue.push_back(t);
            }
        }
    }
    None
}
