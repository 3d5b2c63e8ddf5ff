use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gorenstein::census::{
    classify, count_self_dual, enumerate_self_dual, enumeration_feasible, indecomposable_table, BlockPool, SampledCode,
};
use gorenstein::code::{is_self_dual, schur_square, LinearCode};
use gorenstein::decomp::{
    check_connected_set, count_blocks, decompose, find_connected_set, kernel_span_check, schur_square_dimension,
};
use gorenstein::field::{Elem, Field};
use gorenstein::matrix::Matrix;

const ORDERS: [u32; 4] = [2, 3, 4, 5];

fn pools() -> &'static Vec<BlockPool> {
    static POOLS: OnceLock<Vec<BlockPool>> = OnceLock::new();
    POOLS.get_or_init(|| {
        ORDERS
            .iter()
            .map(|&q| BlockPool::new(&Field::with_order(q as u64).unwrap(), 8).unwrap())
            .collect()
    })
}

/// A sample of length roughly `2 * half` whose length is reachable from the
/// pool's block lengths.
fn sample(which: usize, half: usize, seed: u64) -> SampledCode {
    let pool = &pools()[which];
    let step = pool.lengths()[0];
    let n = (2 * half).div_ceil(step) * step;
    pool.sample(n, n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn random_monomial(c: &LinearCode, rng: &mut ChaCha8Rng, signs_only: bool) -> LinearCode {
    let f = c.field();
    let mut perm: Vec<usize> = (0..c.len()).collect();
    perm.shuffle(rng);
    let choices: Vec<Elem> = if signs_only {
        vec![Elem::ONE, f.neg(Elem::ONE)]
    } else {
        f.nonzero_elements().collect()
    };
    let scales: Vec<Elem> = (0..c.len()).map(|_| *choices.choose(rng).unwrap()).collect();
    c.monomial_transform(&perm, &scales)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_square_dimension_is_2k_minus_nb(which in 0..4usize, half in 1..=16usize, seed: u64) {
        let s = sample(which, half, seed);
        prop_assert!(is_self_dual(&s.code));
        let nb = count_blocks(&s.code);
        prop_assert_eq!(nb, s.nb());
        prop_assert_eq!(schur_square(&s.code).unwrap().dimension(), 2 * s.code.dimension() - nb);
        prop_assert_eq!(schur_square_dimension(&s.code).unwrap(), 2 * s.code.dimension() - nb);
    }

    #[test]
    fn indecomposable_blocks_have_full_schur_square(which in 0..4usize, half in 1..=12usize, seed: u64) {
        let s = sample(which, half, seed);
        for b in decompose(&s.code).blocks {
            prop_assert!(b.indecomposable);
            prop_assert!(is_self_dual(&b.code));
            prop_assert_eq!(schur_square(&b.code).unwrap().dimension(), 2 * b.code.dimension() - 1);
        }
    }

    #[test]
    fn invariants_survive_monomial_maps(which in 0..4usize, half in 1..=10usize, seed: u64) {
        let s = sample(which, half, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let nb = count_blocks(&s.code);
        let sq = schur_square(&s.code).unwrap().dimension();

        let t = random_monomial(&s.code, &mut rng, false);
        prop_assert_eq!(count_blocks(&t), nb);
        prop_assert_eq!(schur_square(&t).unwrap().dimension(), sq);

        // signs keep the code self-dual, so gd is defined on both sides
        let t = random_monomial(&s.code, &mut rng, true);
        prop_assert_eq!(decompose(&t).gd, Some(nb - 1));
    }

    #[test]
    fn decomposition_reassembles(which in 0..4usize, half in 1..=12usize, seed: u64) {
        let s = sample(which, half, seed);
        let d = decompose(&s.code);
        prop_assert_eq!(d.nb, s.nb());
        prop_assert_eq!(d.reassemble(s.code.field()), s.code.clone());
        let mut lengths: Vec<usize> = d.blocks.iter().map(|b| b.columns.len()).collect();
        let mut expected = s.block_lengths.clone();
        lengths.sort_unstable();
        expected.sort_unstable();
        prop_assert_eq!(lengths, expected);
    }

    #[test]
    fn connected_sets_check_out(q in prop::sample::select(vec![2u32, 3, 4]), k in 1..7usize, m in 1..9usize, seed: u64) {
        let f = Field::with_order(q as u64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let density = rng.gen_range(0.1..0.9);
        let mut a = Matrix::zeros(&f, k, m);
        for r in 0..k {
            for c in 0..m {
                if rng.gen_bool(density) {
                    a.set(r, c, f.elem(rng.gen_range(1..q) as u64).unwrap());
                }
            }
        }
        let sets = find_connected_set(&a);
        for y in &sets.sets {
            prop_assert!(check_connected_set(&a, y).unwrap());
        }
        if let Some(y) = sets.single() {
            prop_assert!(y.covers(&(0..m).collect::<Vec<_>>()));
            prop_assert!(kernel_span_check(&f, y, m));
        }
    }
}

#[test]
fn irreducible_iff_covering_connected_set() {
    let f = Field::prime(2).unwrap();
    for n in (2..=8).step_by(2) {
        for c in enumerate_self_dual(n, &f).unwrap() {
            let a = &c.systematic().a_part;
            let all: Vec<usize> = (0..a.cols()).collect();
            let covering = find_connected_set(a).single().is_some_and(|y| y.covers(&all));
            assert_eq!(count_blocks(&c) == 1, covering, "{:?}", c.generator().to_values());
        }
    }
}

#[test]
fn census_counts_are_ordered() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for (_, g, c) in indecomposable_table(40, q).unwrap() {
            assert!(c <= g);
        }
    }
}

/// Puts the computed C back into `n G_n = Σ_t binom(n, 2t) 2t C_2t G_{n-2t}`,
/// including the `t = n/2` term with `G_0 = 1`.
#[test]
fn recursion_resubstitutes_exactly() {
    fn binom(n: usize, k: usize) -> BigUint {
        (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
    }
    for q in [2u64, 3, 4, 5, 7] {
        let table = indecomposable_table(30, q).unwrap();
        let g: Vec<&BigUint> = table.iter().map(|r| &r.1).collect();
        let c: Vec<&BigUint> = table.iter().map(|r| &r.2).collect();
        for h in 1..table.len() {
            let n = 2 * h;
            let rhs: BigUint = (1..=h).map(|t| binom(n, 2 * t) * (2 * t) * c[t] * g[h - t]).sum();
            assert_eq!(rhs, g[h] * n, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn enumeration_matches_counts_where_feasible() {
    for q in [2u64, 3, 4, 5] {
        let f = Field::with_order(q).unwrap();
        let table = indecomposable_table(8, q).unwrap();
        for (n, g, c) in table.into_iter().skip(1) {
            if !enumeration_feasible(n, q) {
                continue;
            }
            let s = classify(n, &f).unwrap();
            assert_eq!(BigUint::from(s.total), g, "G({n}, {q})");
            assert_eq!(BigUint::from(s.indecomposable), c, "C({n}, {q})");
            assert_eq!(count_self_dual(n, q).unwrap(), g);
        }
    }
}
