//! The bipartite graph of the zero-one symmetrization of `A`, for a
//! systematic generator `(Id | A)`.

use std::fmt::Write;

use serde::Serialize;

use super::union_find::UnionFind;
use crate::code::LinearCode;
use crate::matrix::Matrix;

/// Row vertices `0..k` and column vertices `0..m` (columns of `A`), joined
/// whenever `A[i][j] ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockGraph {
    pub k: usize,
    pub m: usize,
    /// `(row, column of A)`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// The systematic column permutation of the source code.
    pub permutation: Vec<usize>,
}

/// One connected component, as row indices and `A`-column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
}

impl BlockGraph {
    pub fn from_a_part(a: &Matrix, permutation: Vec<usize>) -> BlockGraph {
        let mut edges = Vec::new();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if !a.get(i, j).is_zero() {
                    edges.push((i, j));
                }
            }
        }
        BlockGraph {
            k: a.rows(),
            m: a.cols(),
            edges,
            permutation,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.k + self.m
    }

    /// Original coordinate attached to a row vertex (its pivot column).
    pub fn row_coordinate(&self, row: usize) -> usize {
        self.permutation[row]
    }

    /// Original coordinate of a column vertex.
    pub fn column_coordinate(&self, col: usize) -> usize {
        self.permutation[self.k + col]
    }

    fn union_find(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count());
        for &(i, j) in &self.edges {
            uf.union(i, self.k + j);
        }
        uf
    }

    pub fn component_count(&self) -> usize {
        self.union_find().count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Components ordered by their smallest vertex (rows before columns).
    pub fn components(&self) -> Vec<Component> {
        self.union_find()
            .groups()
            .into_iter()
            .map(|g| {
                let (rows, cols): (Vec<usize>, Vec<usize>) = g.into_iter().partition(|&v| v < self.k);
                Component {
                    rows,
                    columns: cols.into_iter().map(|v| v - self.k).collect(),
                }
            })
            .collect()
    }

    /// Neighbours of every vertex in increasing order, with column vertex
    /// `j` numbered `k + j`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(i, j) in &self.edges {
            adj[i].push(self.k + j);
            adj[self.k + j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// DOT rendering. Vertices are labelled by 1-based original coordinates,
    /// a row standing for its pivot coordinate.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph block_graph {\n");
        for v in 0..self.k {
            let _ = writeln!(out, "  {} [shape=box];", self.row_coordinate(v) + 1);
        }
        for v in 0..self.m {
            let _ = writeln!(out, "  {};", self.column_coordinate(v) + 1);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {}",
                self.row_coordinate(i) + 1,
                self.column_coordinate(j) + 1
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_block_graph(c: &LinearCode) -> BlockGraph {
    let s = c.systematic();
    BlockGraph::from_a_part(&s.a_part, s.permutation.clone())
}

/// The number of indecomposable blocks, i.e. connected components of the
/// block graph.
pub fn count_blocks(c: &LinearCode) -> usize {
    build_block_graph(c).component_count()
}
