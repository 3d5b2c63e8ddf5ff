//! Counting self-dual and indecomposable self-dual codes.

mod enumerate;
mod formulas;
mod sample;
mod table;

pub use enumerate::{
    classify, enumerate_self_dual, enumeration_feasible, EnumerationSummary, SelfDualEnumerator, ENUMERATION_LIMIT,
};
pub use formulas::{
    count_indecomposable_partition, count_indecomposable_recursive, count_self_dual, decimal_ratio, gaussian_binomial,
    indecomposable_table, mass_formula_as_written, partitions, ratio_f64, self_dual_codes_exist, Partition,
};
pub use sample::{random_self_dual, BlockPool, SampledCode};
pub use table::{census_report, CensusOptions, CensusRow, CensusTable, EnumerationCheck, Provenance};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("length {0} is odd")]
    OddLength(usize),
    #[error("{0} is not a prime power")]
    InvalidOrder(u64),
    #[error("recursion division is inexact at n = {0}")]
    InexactDivision(usize),
    #[error("partition sum is not an integer at n = {0}")]
    NonIntegerResult(usize),
    #[error("negative count at n = {0}")]
    NegativeCount(usize),
    #[error("enumeration would visit {candidates} RREF candidates (limit {limit})", limit = ENUMERATION_LIMIT)]
    TooLarge { candidates: String },
    #[error("no indecomposable blocks available")]
    EmptyPool,
    #[error("length {n} is not a sum of at most {max_blocks} block lengths")]
    NoComposition { n: usize, max_blocks: usize },
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}
