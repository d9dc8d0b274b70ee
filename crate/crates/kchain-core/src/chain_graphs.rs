//! Construction of linear crossed polyomino chains and their
//! vertical-edge-deleted subchains.
//!
//! The chain `G_n` has `2n + 2` vertices: top vertices `1..=n+1` and their
//! bottom twins `1'..=(n+1)'`. Cell `i` carries the top edge `i ~ i+1`, the
//! bottom edge `i' ~ (i+1)'` and both diagonals `i ~ (i+1)'`, `i' ~ (i+1)`;
//! vertical edge `i ~ i'` joins each twin pair. Vertex indices are encoded
//! top-then-bottom: index `i - 1` for top vertex `i`, index `n + i` for
//! bottom vertex `i'`. All block operations depend on this ordering.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;

/// Identifies a member of the subchain family: the chain length `n` and the
/// set of deleted vertical edges (indices into `1..=n+1`, kept sorted).
///
/// Equality is set equality of the deletion sets; with `r` deletions the
/// graph has `5n + 1 - r` edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainSpec {
    n: usize,
    deleted: Vec<usize>,
}

impl ChainSpec {
    /// Validates and normalizes a deletion set. Rejects `n = 0`, duplicate
    /// indices and indices outside `1..=n+1`.
    pub fn new(n: usize, deleted: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        let mut deleted: Vec<usize> = deleted.into_iter().collect();
        deleted.sort_unstable();
        for pair in deleted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateDeletion { index: pair[0] });
            }
        }
        for &index in &deleted {
            if index == 0 || index > n + 1 {
                return Err(Error::DeletionOutOfRange { index, max: n + 1 });
            }
        }
        Ok(ChainSpec { n, deleted })
    }

    /// The full chain `G_n` (no deletions).
    pub fn full_chain(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Deleted vertical-edge indices, sorted ascending.
    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    /// Number of deleted vertical edges.
    pub fn r(&self) -> usize {
        self.deleted.len()
    }

    pub fn is_deleted(&self, index: usize) -> bool {
        self.deleted.binary_search(&index).is_ok()
    }

    /// Vertex index of top vertex `i` (1-based label).
    pub fn top(&self, i: usize) -> usize {
        i - 1
    }

    /// Vertex index of bottom vertex `i'` (1-based label).
    pub fn bottom(&self, i: usize) -> usize {
        self.n + i
    }
}

/// Simple undirected graph with a fixed vertex count, stored as sorted
/// adjacency lists plus a sorted edge list of `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn from_edges(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            for &v in &[a, b] {
                if v >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        num_vertices,
                    });
                }
            }
            if a == b {
                return Err(Error::IdentityViolation("loop edge in simple graph"));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::IdentityViolation("duplicate edge in simple graph"));
            }
        }
        let mut adjacency = alloc::vec![Vec::new(); num_vertices];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: normalized,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edge list, sorted, each pair with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// BFS reachability check from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = alloc::vec![false; n];
        let mut queue = alloc::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }
}

/// Builds the full chain `G_n`: `2n + 2` vertices, `5n + 1` edges; the four
/// corner vertices have degree 3, all others degree 5.
pub fn build_chain(n: usize) -> Result<Graph> {
    Ok(build_subchain(&ChainSpec::full_chain(n)?))
}

/// Builds the subchain for `spec`: the chain minus the deleted vertical
/// edges. Every member stays connected (the diagonals of each cell keep the
/// two levels joined).
pub fn build_subchain(spec: &ChainSpec) -> Graph {
    let n = spec.n();
    let mut edges = Vec::with_capacity(5 * n + 1 - spec.r());
    for i in 1..=n {
        edges.push((spec.top(i), spec.top(i + 1)));
        edges.push((spec.bottom(i), spec.bottom(i + 1)));
        edges.push((spec.top(i), spec.bottom(i + 1)));
        edges.push((spec.bottom(i), spec.top(i + 1)));
    }
    for i in 1..=n + 1 {
        if !spec.is_deleted(i) {
            edges.push((spec.top(i), spec.bottom(i)));
        }
    }
    Graph::from_edges(2 * n + 2, edges).expect("chain construction yields a simple graph")
}

/// Sum of the degrees of the two end top-vertices, `d ∈ {4, 5, 6}`: 6 when
/// neither end vertical is deleted, 4 when both are, 5 otherwise. Together
/// with `(n, r)` this determines the Kirchhoff index and spanning-tree
/// count of the subchain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndDegreeSum(u8);

impl EndDegreeSum {
    pub fn value(self) -> u8 {
        self.0
    }
}

pub fn end_degree_sum(spec: &ChainSpec) -> EndDegreeSum {
    let mut d = 6u8;
    if spec.is_deleted(1) {
        d -= 1;
    }
    if spec.is_deleted(spec.n() + 1) {
        d -= 1;
    }
    EndDegreeSum(d)
}

/// All `C(n+1, r)` deletion sets of size `r`, in lexicographic order.
pub fn enumerate_subchains(n: usize, r: usize) -> Result<Vec<ChainSpec>> {
    if n == 0 {
        return Err(Error::EmptyChain);
    }
    if r > n + 1 {
        return Err(Error::DeletionCountOutOfRange { r, max: n + 1 });
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=r).collect();
    loop {
        out.push(ChainSpec::new(n, current.iter().copied())?);
        // Advance to the next r-subset of 1..=n+1 in lexicographic order.
        let mut k = r;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if current[k] < n + 1 - (r - 1 - k) {
                current[k] += 1;
                for t in k + 1..r {
                    current[t] = current[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every deletion set of every size `0..=n+1`, ordered by size then
/// lexicographically; `2^{n+1}` specs in total.
pub fn enumerate_all_subchains(n: usize) -> Result<Vec<ChainSpec>> {
    let mut out = Vec::new();
    for r in 0..=n + 1 {
        out.extend(enumerate_subchains(n, r)?);
    }
    Ok(out)
}

/// Laplacian `L = D - A` as an integer matrix: symmetric, zero row sums,
/// degrees on the diagonal.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.num_vertices();
    let mut l = IntMatrix::zeros(n);
    for v in 0..n {
        l.set(v, v, g.degree(v) as i64);
    }
    for &(u, v) in g.edges() {
        l.set(u, v, -1);
        l.set(v, u, -1);
    }
    l
}

/// The top-left and top-right `(n+1) x (n+1)` blocks of the Laplacian in
/// the canonical top-then-bottom ordering.
///
/// The top/bottom pairing `i <-> i'` makes the Laplacian block-symmetric;
/// this is verified (`L_11 = L_22`, `L_12 = L_21`) before returning, and a
/// failure indicates a construction bug rather than bad input.
pub fn laplacian_blocks(g: &Graph, spec: &ChainSpec) -> Result<(IntMatrix, IntMatrix)> {
    let half = spec.n() + 1;
    if g.num_vertices() != 2 * half {
        return Err(Error::DimensionMismatch {
            expected: 2 * half,
            found: g.num_vertices(),
        });
    }
    let l = laplacian(g);
    let block = |row0: usize, col0: usize| {
        let mut b = IntMatrix::zeros(half);
        for i in 0..half {
            for j in 0..half {
                b.set(i, j, l.get(row0 + i, col0 + j));
            }
        }
        b
    };
    let l11 = block(0, 0);
    let l12 = block(0, half);
    let l21 = block(half, 0);
    let l22 = block(half, half);
    if l11 != l22 {
        return Err(Error::IdentityViolation("diagonal Laplacian blocks differ"));
    }
    if l12 != l21 {
        return Err(Error::IdentityViolation("off-diagonal Laplacian blocks differ"));
    }
    Ok((l11, l12))
}
