//! Connected sets of index pairs for a matrix `A`.
//!
//! A family `Y` of pairs `{k, l}` of column indices is connected for `A` when
//! each pair sits inside the support of some row and `Y` cannot be split into
//! two nonempty subfamilies that share no index. The second condition is
//! checked as connectivity of the pair-intersection graph. A connected
//! covering family exists exactly when the block graph of `A` is connected.

use serde::Serialize;

use super::graph::BlockGraph;
use super::union_find::UnionFind;
use super::DecompError;
use crate::field::{Elem, Field};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ConnectedSet {
    /// Unordered pairs of column indices, stored as `(a, b)` in walk order.
    pub pairs: Vec<(usize, usize)>,
    /// `witness_rows[i]` is a row whose support contains `pairs[i]`.
    pub witness_rows: Vec<usize>,
}

impl ConnectedSet {
    pub fn covered(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        idx.sort_unstable();
        idx.dedup();
        idx
    }

    pub fn covers(&self, columns: &[usize]) -> bool {
        let covered = self.covered();
        columns.iter().all(|c| covered.binary_search(c).is_ok())
    }
}

/// One connected set per component of the block graph of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedSets {
    pub sets: Vec<ConnectedSet>,
    /// Whether the block graph was connected, so that `sets` has one entry
    /// covering every column.
    pub connected: bool,
}

impl ConnectedSets {
    /// The covering set when the graph is connected.
    pub fn single(&self) -> Option<&ConnectedSet> {
        if self.connected {
            self.sets.first()
        } else {
            None
        }
    }
}

/// Spanning walk of one component: depth-first from `start`, neighbours in
/// increasing order, with every return to a parent written into the walk.
fn spanning_walk(adj: &[Vec<usize>], start: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut walk = vec![start];
    let mut stack = vec![(start, 0usize)];
    seen[start] = true;
    while let Some((v, next)) = stack.last_mut() {
        let v = *v;
        if let Some(&w) = adj[v][*next..].iter().find(|&&w| !seen[w]) {
            *next = adj[v].iter().position(|&x| x == w).unwrap() + 1;
            seen[w] = true;
            walk.push(w);
            stack.push((w, 0));
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                walk.push(parent);
            }
        }
    }
    walk
}

/// Reads a connected set off a spanning walk of each component: every
/// `column, row, column` stretch of the walk contributes a pair.
pub fn find_connected_set(a: &Matrix) -> ConnectedSets {
    let graph = BlockGraph::from_a_part(a, (0..a.rows() + a.cols()).collect());
    let k = graph.k;
    let adj = graph.adjacency();
    let mut seen = vec![false; graph.vertex_count()];
    let mut sets = Vec::new();
    for start in 0..graph.vertex_count() {
        if seen[start] {
            continue;
        }
        let walk = spanning_walk(&adj, start, &mut seen);
        let mut set = ConnectedSet::default();
        for w in walk.windows(3) {
            let (x, r, y) = (w[0], w[1], w[2]);
            if x >= k && y >= k && x != y {
                let (a, b) = (x - k, y - k);
                let dup = set.pairs.iter().any(|&(p, q)| (p, q) == (a, b) || (p, q) == (b, a));
                if !dup {
                    set.pairs.push((a, b));
                    set.witness_rows.push(r);
                }
            }
        }
        // a component with a single column still needs to be covered
        let cols: Vec<usize> = walk.iter().filter(|&&v| v >= k).map(|&v| v - k).collect();
        if let (true, Some(&c)) = (set.pairs.is_empty(), cols.first()) {
            if let Some(&r) = adj[k + c].first() {
                set.pairs.push((c, c));
                set.witness_rows.push(r);
            }
        }
        sets.push(set);
    }
    ConnectedSets {
        connected: sets.len() <= 1,
        sets,
    }
}

/// Checks the two defining conditions of a connected set for `A`.
pub fn check_connected_set(a: &Matrix, y: &ConnectedSet) -> Result<bool, DecompError> {
    let m = a.cols();
    for &(p, q) in &y.pairs {
        for idx in [p, q] {
            if idx >= m {
                return Err(DecompError::IndexOutOfRange { index: idx, len: m });
            }
        }
    }
    let inside_row = |p: usize, q: usize| a.iter_rows().any(|row| !row[p].is_zero() && !row[q].is_zero());
    if !y.pairs.iter().all(|&(p, q)| inside_row(p, q)) {
        return Ok(false);
    }
    // pairs sharing an index are adjacent; route the union through the
    // shared column
    let t = y.pairs.len();
    let mut uf = UnionFind::new(t + m);
    for (i, &(p, q)) in y.pairs.iter().enumerate() {
        uf.union(i, t + p);
        uf.union(i, t + q);
    }
    let roots: Vec<usize> = (0..t).map(|i| uf.find(i)).collect();
    Ok(roots.windows(2).all(|w| w[0] == w[1]))
}

/// Whether the vectors `e_k − e_l` for `{k, l} ∈ Y` span the hyperplane
/// `x_1 + ... + x_m = 0`, i.e. have rank `m − 1`.
pub fn kernel_span_check(field: &Field, y: &ConnectedSet, m: usize) -> bool {
    if m == 0 {
        return true;
    }
    let mut rows = Matrix::zeros(field, 0, m);
    for &(p, q) in &y.pairs {
        let mut v = vec![Elem::ZERO; m];
        v[p] = field.add(v[p], Elem::ONE);
        v[q] = field.sub(v[q], Elem::ONE);
        rows.push_row(&v);
    }
    rows.rank() == m - 1
}
