//! Brute-force enumeration of self-dual codes through their RREF generators.
//!
//! Every k-dimensional subspace of GF(q)^n has a unique RREF generator,
//! determined by its pivot columns and the entries right of each pivot that
//! are not themselves pivot columns. The enumerator walks pivot sets in
//! lexicographic order and, within one pivot set, fills the rows top-down,
//! pruning as soon as a row fails to be orthogonal to itself or to an
//! earlier row.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;

use super::formulas::gaussian_binomial;
use super::CensusError;
use crate::code::LinearCode;
use crate::decomp::count_blocks;
use crate::field::{Elem, Field};
use crate::matrix::Matrix;

/// Upper bound on the number of RREF candidates an enumeration may visit.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Whether `(n, q)` is within [`ENUMERATION_LIMIT`].
pub fn enumeration_feasible(n: usize, q: u64) -> bool {
    n.is_multiple_of(2) && gaussian_binomial(n, n / 2, q) <= BigUint::from(ENUMERATION_LIMIT)
}

/// Iterator over all self-dual codes of a given even length.
pub struct SelfDualEnumerator {
    field: Field,
    n: usize,
    k: usize,
    pivots: Option<Vec<usize>>,
    pending: VecDeque<LinearCode>,
}

pub fn enumerate_self_dual(n: usize, field: &Field) -> Result<SelfDualEnumerator, CensusError> {
    if n % 2 == 1 {
        return Err(CensusError::OddLength(n));
    }
    let k = n / 2;
    let candidates = gaussian_binomial(n, k, field.order() as u64);
    if candidates > BigUint::from(ENUMERATION_LIMIT) {
        return Err(CensusError::TooLarge {
            candidates: candidates.to_string(),
        });
    }
    Ok(SelfDualEnumerator {
        field: field.clone(),
        n,
        k,
        pivots: Some((0..k).collect()),
        pending: VecDeque::new(),
    })
}

impl SelfDualEnumerator {
    fn advance_pivots(&mut self) {
        let Some(p) = self.pivots.as_mut() else { return };
        let (n, k) = (self.n, self.k);
        let Some(i) = (0..k).rev().find(|&i| p[i] < n - k + i) else {
            self.pivots = None;
            return;
        };
        p[i] += 1;
        for j in i + 1..k {
            p[j] = p[j - 1] + 1;
        }
    }

    fn solve_pivot_set(&mut self, pivots: &[usize]) {
        let (n, k) = (self.n, self.k);
        if k == 0 {
            self.pending.push_back(LinearCode::zero(&self.field, 0));
            return;
        }
        let mut is_pivot = vec![false; n];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (p + 1..n).filter(|&c| !is_pivot[c]).collect())
            .collect();
        let mut rows: Vec<Vec<Elem>> = vec![vec![Elem::ZERO; n]; k];
        let mut found = Vec::new();
        self.fill_row(0, pivots, &free, &mut rows, &mut found);
        for rows in found {
            let g = Matrix::from_rows(&self.field, n, rows).unwrap();
            self.pending
                .push_back(LinearCode::new(g).expect("RREF rows are independent"));
        }
    }

    fn fill_row(
        &self,
        i: usize,
        pivots: &[usize],
        free: &[Vec<usize>],
        rows: &mut Vec<Vec<Elem>>,
        found: &mut Vec<Vec<Vec<Elem>>>,
    ) {
        let f = &self.field;
        let q = f.order() as u64;
        let slots = &free[i];
        let mut row = vec![Elem::ZERO; self.n];
        row[pivots[i]] = Elem::ONE;
        let mut digits = vec![0u64; slots.len()];
        loop {
            for (d, &c) in digits.iter().zip(slots) {
                row[c] = f.elem(*d).unwrap();
            }
            let ok = f.dot(&row, &row).is_zero() && (0..i).all(|j| f.dot(&row, &rows[j]).is_zero());
            if ok {
                rows[i].clone_from(&row);
                if i + 1 == self.k {
                    found.push(rows.clone());
                } else {
                    self.fill_row(i + 1, pivots, free, rows, found);
                }
            }
            // odometer over the free entries
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                return;
            }
        }
    }
}

impl Iterator for SelfDualEnumerator {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        while self.pending.is_empty() {
            let pivots = self.pivots.clone()?;
            self.solve_pivot_set(&pivots);
            self.advance_pivots();
        }
        self.pending.pop_front()
    }
}

/// Counts from a full enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub total: u64,
    pub indecomposable: u64,
    /// number of blocks → number of codes
    pub by_blocks: BTreeMap<usize, u64>,
}

pub fn classify(n: usize, field: &Field) -> Result<EnumerationSummary, CensusError> {
    let mut summary = EnumerationSummary {
        total: 0,
        indecomposable: 0,
        by_blocks: BTreeMap::new(),
    };
    for code in enumerate_self_dual(n, field)? {
        let nb = count_blocks(&code);
        summary.total += 1;
        if nb == 1 {
            summary.indecomposable += 1;
        }
        *summary.by_blocks.entry(nb).or_insert(0) += 1;
    }
    Ok(summary)
}
