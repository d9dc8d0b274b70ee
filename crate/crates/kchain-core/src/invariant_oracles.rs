//! Brute-force ground truth for every invariant the closed forms claim.
//!
//! Distances come from BFS (the graphs are unweighted and small), the
//! Kirchhoff-type indices from exact effective resistances, and the
//! spanning-tree count from a reduced Laplacian determinant. Nothing here
//! consults the closed forms; these oracles adjudicate them.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::chain_graphs::{build_subchain, laplacian, ChainSpec, Graph};
use crate::error::{Error, Result};
use crate::exact_linalg::{resistance_matrix, BigInt, Rational};

/// Oracle values for one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub spec: ChainSpec,
    pub wiener: u64,
    pub gutman: u64,
    pub kirchhoff: Rational,
    pub mult_deg_kirchhoff: Rational,
    pub spanning_trees: BigInt,
}

/// BFS distances from `source`; errors if any vertex is unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>> {
    let n = g.num_vertices();
    if source >= n {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            num_vertices: n,
        });
    }
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached != n {
        return Err(Error::DisconnectedGraph);
    }
    Ok(dist)
}

/// Wiener index: sum of shortest-path distances over unordered pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for v in 0..g.num_vertices() {
        let dist = bfs_distances(g, v)?;
        total += dist.iter().map(|&d| d as u64).sum::<u64>();
    }
    Ok(total / 2)
}

/// Gutman index: sum of `deg(i) * deg(j) * dist(i, j)` over unordered pairs.
pub fn gutman(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for v in 0..g.num_vertices() {
        let dist = bfs_distances(g, v)?;
        let dv = g.degree(v) as u64;
        for (u, &d) in dist.iter().enumerate() {
            total += dv * g.degree(u) as u64 * d as u64;
        }
    }
    Ok(total / 2)
}

/// Kirchhoff index: sum of effective resistances over unordered pairs.
pub fn kirchhoff(g: &Graph) -> Result<Rational> {
    let r = pair_resistances(g)?;
    let n = g.num_vertices();
    let mut total = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            total += &r[i][j];
        }
    }
    Ok(total)
}

/// Multiplicative degree-Kirchhoff index: sum of
/// `deg(i) * deg(j) * resistance(i, j)` over unordered pairs.
pub fn mult_deg_kirchhoff(g: &Graph) -> Result<Rational> {
    let r = pair_resistances(g)?;
    let n = g.num_vertices();
    let mut total = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            let w = (g.degree(i) * g.degree(j)) as i64;
            total += Rational::from_integer(BigInt::from(w)) * &r[i][j];
        }
    }
    Ok(total)
}

fn pair_resistances(g: &Graph) -> Result<Vec<Vec<Rational>>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    resistance_matrix(&laplacian(g).to_rational())
}

/// Spanning-tree count by the matrix-tree theorem: determinant of the
/// Laplacian with row/column 0 removed. A disconnected graph returns zero
/// (the cofactor vanishes), which is documented behavior rather than an
/// error.
pub fn spanning_trees(g: &Graph) -> BigInt {
    laplacian(g).delete_row_col(0).det()
}

/// Builds the graph once and computes all five oracle invariants.
pub fn full_report(spec: &ChainSpec) -> Result<InvariantReport> {
    let g = build_subchain(spec);
    Ok(InvariantReport {
        spec: spec.clone(),
        wiener: wiener(&g)?,
        gutman: gutman(&g)?,
        kirchhoff: kirchhoff(&g)?,
        mult_deg_kirchhoff: mult_deg_kirchhoff(&g)?,
        spanning_trees: spanning_trees(&g),
    })
}
