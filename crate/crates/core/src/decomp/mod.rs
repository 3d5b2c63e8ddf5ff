//! Block decomposition of codes through the zero-one symmetrization of a
//! systematic generator, and the Gorenstein verdicts built on it.
//!
//! For a systematic generator `(Id | A)` the block graph has one vertex per
//! row and one per column of `A`, with an edge wherever `A` is nonzero. Its
//! connected components are the indecomposable blocks of the code. For a
//! self-dual code of dimension k with `nb` blocks, `dim C^(2) = 2k − nb`, so
//! the Gorenstein defect is `nb − 1`.

mod connected;
mod graph;
mod selfassoc;
mod union_find;

pub use connected::{check_connected_set, find_connected_set, kernel_span_check, ConnectedSet, ConnectedSets};
pub use graph::{build_block_graph, count_blocks, BlockGraph, Component};
pub use selfassoc::{self_association_certificate, SelfAssociation, SelfAssociationCertificate, SEARCH_LIMIT};
pub use union_find::UnionFind;

use serde::Serialize;
use thiserror::Error;

use crate::code::{column_points, is_self_dual, CodeError, LinearCode};
use crate::field::Field;
use crate::matrix::{Matrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("the code is not self-dual")]
    NotSelfDual,
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("index {index} out of range for {len} columns")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0}")]
    ShapeError(String),
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// One indecomposable block.
#[derive(Debug, Clone)]
pub struct Block {
    /// Rows of the systematic generator that belong to the block.
    pub rows: Vec<usize>,
    /// Original coordinates of the block, increasing.
    pub columns: Vec<usize>,
    /// The block as a code on `columns`.
    pub code: LinearCode,
    /// Checked by recomputing the block graph of `code`.
    pub indecomposable: bool,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub nb: usize,
    pub blocks: Vec<Block>,
    /// `nb − 1` for self-dual codes, `None` otherwise.
    pub gd: Option<usize>,
    pub length: usize,
}

impl BlockDecomposition {
    /// Puts the block generators back on their coordinates.
    pub fn reassemble(&self, field: &Field) -> LinearCode {
        let k: usize = self.blocks.iter().map(|b| b.code.dimension()).sum();
        let mut g = Matrix::zeros(field, k, self.length);
        let mut row = 0;
        for b in &self.blocks {
            let bg = b.code.generator();
            for r in 0..bg.rows() {
                for (j, &col) in b.columns.iter().enumerate() {
                    g.set(row, col, bg.get(r, j));
                }
                row += 1;
            }
        }
        LinearCode::new(g).expect("blocks are independent")
    }

    pub fn block_dimensions(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.code.dimension()).collect()
    }
}

pub fn decompose(c: &LinearCode) -> BlockDecomposition {
    let graph = build_block_graph(c);
    let sys = c.systematic().to_original();
    let blocks = graph
        .components()
        .into_iter()
        .map(|comp| {
            let mut columns: Vec<usize> = comp
                .rows
                .iter()
                .map(|&r| graph.row_coordinate(r))
                .chain(comp.columns.iter().map(|&j| graph.column_coordinate(j)))
                .collect();
            columns.sort_unstable();
            let code = LinearCode::new(sys.select_rows(&comp.rows).select_columns(&columns))
                .expect("systematic rows are independent");
            let indecomposable = count_blocks(&code) == 1;
            Block {
                rows: comp.rows,
                columns,
                code,
                indecomposable,
            }
        })
        .collect::<Vec<_>>();
    let nb = blocks.len();
    BlockDecomposition {
        nb,
        blocks,
        gd: is_self_dual(c).then(|| nb - 1),
        length: c.len(),
    }
}

fn require_self_dual(c: &LinearCode) -> Result<(), DecompError> {
    if is_self_dual(c) {
        Ok(())
    } else {
        Err(DecompError::NotSelfDual)
    }
}

/// `dim C^(2)` of a self-dual code, read off the block graph as `2k − nb`.
pub fn schur_square_dimension(c: &LinearCode) -> Result<usize, DecompError> {
    require_self_dual(c)?;
    Ok(2 * c.dimension() - count_blocks(c))
}

/// `nb − 1` for a self-dual code.
pub fn gorenstein_defect(c: &LinearCode) -> Result<usize, DecompError> {
    require_self_dual(c)?;
    Ok(count_blocks(c) - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinStatus {
    Gorenstein,
    NotGorenstein,
    /// The point set has fewer than 2k points (or the code is not
    /// self-dual), so no geometric statement is made.
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub self_dual: bool,
    /// `|Π_G|`, or `None` when some column is zero.
    pub distinct_points: Option<usize>,
    pub nb: usize,
    pub indecomposable: bool,
    pub gd: Option<usize>,
    /// How many conditions short of independent the points fall on
    /// quadrics, `gd + 1`.
    pub failure_count: Option<usize>,
    pub verdict: GorensteinStatus,
}

/// Verdict for any code; the geometric claim needs self-duality and 2k
/// distinct column points.
pub fn assess(c: &LinearCode) -> GorensteinVerdict {
    let self_dual = is_self_dual(c);
    let nb = count_blocks(c);
    let distinct_points = column_points(c).ok().map(|p| p.distinct());
    let gd = self_dual.then(|| nb - 1);
    let verdict = if self_dual && distinct_points == Some(2 * c.dimension()) {
        if nb == 1 {
            GorensteinStatus::Gorenstein
        } else {
            GorensteinStatus::NotGorenstein
        }
    } else {
        GorensteinStatus::Inapplicable
    };
    GorensteinVerdict {
        self_dual,
        distinct_points,
        nb,
        indecomposable: nb == 1,
        gd,
        failure_count: gd.map(|g| g + 1),
        verdict,
    }
}

pub fn is_arithmetically_gorenstein(c: &LinearCode) -> Result<GorensteinVerdict, DecompError> {
    require_self_dual(c)?;
    Ok(assess(c))
}

/// Every column of the `A`-part has at least two nonzero entries. Only
/// defined for indecomposable self-dual codes of dimension at least 2, where
/// it always holds. (For k = 1 the code is `⟨(1, a)⟩` and `A` is 1×1.)
pub fn column_weight_check(c: &LinearCode) -> Result<bool, DecompError> {
    require_self_dual(c).map_err(|_| DecompError::HypothesisUnmet("code is not self-dual".into()))?;
    if c.dimension() < 2 {
        return Err(DecompError::HypothesisUnmet("dimension is below 2".into()));
    }
    let nb = count_blocks(c);
    if nb != 1 {
        return Err(DecompError::HypothesisUnmet(format!("code has {nb} blocks")));
    }
    let a = &c.systematic().a_part;
    Ok((0..a.cols()).all(|j| a.column(j).iter().filter(|e| !e.is_zero()).count() >= 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{direct_sum, schur_square};
    use crate::corpus;

    #[test]
    fn hamming() {
        let h = corpus::hamming8();
        assert_eq!(schur_square_dimension(&h).unwrap(), 7);
        assert_eq!(gorenstein_defect(&h).unwrap(), 0);
        let v = is_arithmetically_gorenstein(&h).unwrap();
        assert_eq!(v.verdict, GorensteinStatus::Gorenstein);
        assert_eq!(v.distinct_points, Some(8));
        assert_eq!(v.failure_count, Some(1));
        assert!(column_weight_check(&h).unwrap());
        let d = decompose(&h);
        assert_eq!(d.nb, 1);
        assert_eq!(d.blocks[0].code, h);
    }

    #[test]
    fn doubled() {
        let hh = corpus::hamming8_doubled();
        assert_eq!(schur_square_dimension(&hh).unwrap(), 14);
        assert_eq!(gorenstein_defect(&hh).unwrap(), 1);
        let v = is_arithmetically_gorenstein(&hh).unwrap();
        assert_eq!(v.verdict, GorensteinStatus::NotGorenstein);
        assert_eq!(v.failure_count, Some(2));
        let d = decompose(&hh);
        assert_eq!(d.nb, 2);
        let h = corpus::hamming8();
        for b in &d.blocks {
            assert!(b.indecomposable);
            assert_eq!(b.code, h);
        }
        assert_eq!(d.blocks[1].columns, (8..16).collect::<Vec<_>>());
        assert_eq!(
            column_weight_check(&hh),
            Err(DecompError::HypothesisUnmet("code has 2 blocks".into()))
        );
    }

    #[test]
    fn len14() {
        let c = corpus::len14();
        assert_eq!(count_blocks(&c), 2);
        assert_eq!(schur_square_dimension(&c).unwrap(), 12);
        assert_eq!(schur_square(&c).unwrap().dimension(), 12);
        assert_eq!(gorenstein_defect(&c).unwrap(), 1);
        let v = is_arithmetically_gorenstein(&c).unwrap();
        assert_eq!(v.verdict, GorensteinStatus::Inapplicable);
        assert_eq!(v.distinct_points, Some(13));
        assert_eq!(v.gd, Some(1));
        let d = decompose(&c);
        assert_eq!(d.block_dimensions(), vec![6, 1]);
        assert_eq!(d.blocks[1].columns, vec![6, 13]);
        assert!(d.blocks.iter().all(|b| b.indecomposable));
        assert!(matches!(column_weight_check(&c), Err(DecompError::HypothesisUnmet(_))));
        assert_eq!(d.reassemble(c.field()), c);
        assert_eq!(
            column_weight_check(&d.blocks[1].code),
            Err(DecompError::HypothesisUnmet("dimension is below 2".into()))
        );
    }

    #[test]
    fn not_self_dual() {
        let f = Field::prime(2).unwrap();
        let c = LinearCode::new(Matrix::from_values(&f, &[[1, 0, 1], [0, 1, 1]]).unwrap()).unwrap();
        assert_eq!(schur_square_dimension(&c), Err(DecompError::NotSelfDual));
        assert_eq!(gorenstein_defect(&c), Err(DecompError::NotSelfDual));
        assert_eq!(is_arithmetically_gorenstein(&c), Err(DecompError::NotSelfDual));
        let v = assess(&c);
        assert_eq!((v.gd, v.verdict), (None, GorensteinStatus::Inapplicable));
        assert_eq!(decompose(&c).gd, None);
    }

    #[test]
    fn decomposition_of_permuted_sum() {
        let h = corpus::hamming8();
        let l = corpus::len14();
        let s = direct_sum(&l, &h).unwrap();
        let perm: Vec<usize> = (0..22).map(|i| (i * 5) % 22).collect::<Vec<_>>();
        // 5 is coprime to 22, so this is a permutation
        let p = s.monomial_transform(&perm, &[f2_one(); 22]);
        let d = decompose(&p);
        assert_eq!(d.nb, 3);
        let mut dims = d.block_dimensions();
        dims.sort();
        assert_eq!(dims, vec![1, 4, 6]);
        assert_eq!(d.reassemble(p.field()), p);
    }

    fn f2_one() -> crate::field::Elem {
        crate::field::Elem::ONE
    }
}
