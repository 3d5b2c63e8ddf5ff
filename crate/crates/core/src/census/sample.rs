//! Random self-dual codes with a known number of blocks.
//!
//! A code is assembled as a direct sum of indecomposable self-dual codes of
//! small length, drawn from an enumerated pool, and then disguised by a
//! random coordinate permutation, random signs on the coordinates (the only
//! scalings that keep `G Gᵀ = 0`) and a random change of basis.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{enumerate_self_dual, enumeration_feasible};
use super::CensusError;
use crate::code::{direct_sum, LinearCode};
use crate::decomp::count_blocks;
use crate::field::{Elem, Field};
use crate::matrix::Matrix;

/// Indecomposable self-dual codes grouped by length.
#[derive(Debug, Clone)]
pub struct BlockPool {
    field: Field,
    blocks: BTreeMap<usize, Vec<LinearCode>>,
}

#[derive(Debug, Clone)]
pub struct SampledCode {
    pub code: LinearCode,
    /// Lengths of the blocks in the order they were summed.
    pub block_lengths: Vec<usize>,
}

impl SampledCode {
    /// Number of blocks by construction.
    pub fn nb(&self) -> usize {
        self.block_lengths.len()
    }
}

impl BlockPool {
    /// Enumerates every feasible even length up to `max_len`.
    pub fn new(field: &Field, max_len: usize) -> Result<BlockPool, CensusError> {
        let mut blocks = BTreeMap::new();
        for n in (2..=max_len).step_by(2) {
            if !enumeration_feasible(n, field.order() as u64) {
                continue;
            }
            let found: Vec<LinearCode> = enumerate_self_dual(n, field)?
                .filter(|c| count_blocks(c) == 1)
                .collect();
            if !found.is_empty() {
                blocks.insert(n, found);
            }
        }
        Ok(BlockPool {
            field: field.clone(),
            blocks,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.keys().copied().collect()
    }

    pub fn codes(&self, len: usize) -> &[LinearCode] {
        self.blocks.get(&len).map_or(&[], |v| v.as_slice())
    }

    /// Draws a self-dual code of length `n` with at most `max_blocks` blocks.
    pub fn sample<R: Rng>(&self, n: usize, max_blocks: usize, rng: &mut R) -> Result<SampledCode, CensusError> {
        if self.blocks.is_empty() {
            return Err(CensusError::EmptyPool);
        }
        let lengths = self.lengths();
        // reachable[b][r]: r is a sum of at most b pool lengths
        let mut reachable = vec![vec![false; n + 1]; max_blocks + 1];
        for row in reachable.iter_mut() {
            row[0] = true;
        }
        for b in 1..=max_blocks {
            for r in 1..=n {
                reachable[b][r] = lengths.iter().any(|&l| l <= r && reachable[b - 1][r - l]);
            }
        }
        if n == 0 || !reachable[max_blocks][n] {
            return Err(CensusError::NoComposition { n, max_blocks });
        }

        let mut parts = Vec::new();
        let (mut left, mut budget) = (n, max_blocks);
        while left > 0 {
            let options: Vec<usize> = lengths
                .iter()
                .copied()
                .filter(|&l| l <= left && reachable[budget - 1][left - l])
                .collect();
            let l = *options.choose(rng).expect("composition stays reachable");
            parts.push(l);
            left -= l;
            budget -= 1;
        }

        let mut code: Option<LinearCode> = None;
        for &l in &parts {
            let block = self.blocks[&l].choose(rng).unwrap();
            code = Some(match code {
                None => block.clone(),
                Some(c) => direct_sum(&c, block).unwrap(),
            });
        }
        let code = disguise(&code.unwrap(), rng);
        Ok(SampledCode {
            code,
            block_lengths: parts,
        })
    }
}

/// Random permutation, random signs and a random invertible change of basis.
fn disguise<R: Rng>(c: &LinearCode, rng: &mut R) -> LinearCode {
    let f = c.field();
    let n = c.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let minus_one = f.neg(Elem::ONE);
    let signs: Vec<Elem> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { minus_one } else { Elem::ONE })
        .collect();
    let moved = c.monomial_transform(&perm, &signs);

    let k = c.dimension();
    let mixed = loop {
        let mut r = Matrix::zeros(f, k, k);
        for i in 0..k {
            for j in 0..k {
                r.set(i, j, f.elem(rng.gen_range(0..f.order()) as u64).unwrap());
            }
        }
        if r.rank() == k {
            break r.mul(moved.generator()).unwrap();
        }
    };
    LinearCode::new(mixed).unwrap()
}

/// One-off sampler; builds a pool of block lengths up to 8.
pub fn random_self_dual(n: usize, field: &Field, seed: u64, max_blocks: usize) -> Result<SampledCode, CensusError> {
    let pool = BlockPool::new(field, 8)?;
    pool.sample(n, max_blocks, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{is_self_dual, schur_square};
    use crate::decomp::gorenstein_defect;

    #[test]
    fn length_two() {
        let f = Field::prime(2).unwrap();
        for seed in 0..3 {
            let s = random_self_dual(2, &f, seed, 4).unwrap();
            assert_eq!(s.nb(), 1);
            assert_eq!(s.code.generator().row_space_basis().to_values(), vec![vec![1, 1]]);
        }
    }

    #[test]
    fn binary_pool() {
        let f = Field::prime(2).unwrap();
        let pool = BlockPool::new(&f, 8).unwrap();
        assert_eq!(pool.lengths(), vec![2, 8]);
        assert_eq!(pool.codes(8).len(), 30);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = pool.sample(16, 2, &mut rng).unwrap();
        assert_eq!(s.block_lengths, vec![8, 8]);
        assert!(is_self_dual(&s.code));
        assert_eq!(count_blocks(&s.code), 2);
        assert_eq!(schur_square(&s.code).unwrap().dimension(), 14);
        let s = pool.sample(24, 3, &mut rng).unwrap();
        assert_eq!(gorenstein_defect(&s.code).unwrap(), 2);
    }

    #[test]
    fn ternary_pool_and_failures() {
        let f = Field::prime(3).unwrap();
        let pool = BlockPool::new(&f, 8).unwrap();
        assert_eq!(pool.lengths(), vec![4]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert!(matches!(
            pool.sample(6, 3, &mut rng),
            Err(CensusError::NoComposition { .. })
        ));
        assert!(matches!(
            pool.sample(12, 2, &mut rng),
            Err(CensusError::NoComposition { .. })
        ));
        let s = pool.sample(12, 3, &mut rng).unwrap();
        assert!(is_self_dual(&s.code));
        assert_eq!(count_blocks(&s.code), 3);

        let empty = BlockPool::new(&f, 2).unwrap();
        assert!(matches!(empty.sample(4, 1, &mut rng), Err(CensusError::EmptyPool)));
    }
}
