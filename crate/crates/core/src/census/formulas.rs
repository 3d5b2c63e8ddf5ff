//! Closed-form and recursive counts of self-dual codes.
//!
//! Everything here counts codes as subspaces of GF(q)^n, not equivalence
//! classes.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CensusError;
use crate::field::prime_power;

fn check_order(q: u64) -> Result<(), CensusError> {
    prime_power(q).map(|_| ()).ok_or(CensusError::InvalidOrder(q))
}

fn check_even(n: usize) -> Result<(), CensusError> {
    if n % 2 == 1 {
        Err(CensusError::OddLength(n))
    } else {
        Ok(())
    }
}

/// The product formula `∏_{i=1}^{n/2-1} (q^i + 1)`, doubled for odd q,
/// evaluated for every even n. `n = 0` gives 1.
pub fn mass_formula_as_written(n: usize, q: u64) -> Result<BigUint, CensusError> {
    check_even(n)?;
    check_order(q)?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    let qb = BigUint::from(q);
    let mut prod = BigUint::one();
    for i in 1..n / 2 {
        prod *= qb.pow(i as u32) + 1u32;
    }
    if q % 2 == 1 {
        prod *= 2u32;
    }
    Ok(prod)
}

/// Whether GF(q)^n contains a self-dual code. For q ≡ 3 (mod 4) this needs
/// 4 | n, since -1 is then a non-square.
pub fn self_dual_codes_exist(n: usize, q: u64) -> bool {
    n.is_multiple_of(2) && !(q % 4 == 3 && n % 4 == 2)
}

/// Number of self-dual codes of length n over GF(q), `G(n, q)`.
pub fn count_self_dual(n: usize, q: u64) -> Result<BigUint, CensusError> {
    let written = mass_formula_as_written(n, q)?;
    Ok(if self_dual_codes_exist(n, q) {
        written
    } else {
        BigUint::zero()
    })
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `(G(n), C(n))` for n = 0, 2, ..., n_max from the block recursion
/// `n G_n = Σ_{t=1}^{n/2} C(n, 2t) · 2t · C_{2t} · G_{n-2t}`.
pub fn indecomposable_table(n_max: usize, q: u64) -> Result<Vec<(usize, BigUint, BigUint)>, CensusError> {
    check_even(n_max)?;
    check_order(q)?;
    let g: Vec<BigInt> = (0..=n_max / 2)
        .map(|h| count_self_dual(2 * h, q).map(BigInt::from))
        .collect::<Result<_, _>>()?;
    let mut c: Vec<BigInt> = vec![BigInt::zero(); n_max / 2 + 1];
    let mut out = vec![(0, BigUint::one(), BigUint::zero())];
    for h in 1..=n_max / 2 {
        let n = 2 * h;
        let mut partial = BigInt::zero();
        for t in 1..h {
            partial += BigInt::from(binomial(n, 2 * t)) * (2 * t) * &c[t] * &g[h - t];
        }
        let (quot, rem) = partial.div_rem(&BigInt::from(n));
        if !rem.is_zero() {
            return Err(CensusError::InexactDivision(n));
        }
        c[h] = &g[h] - quot;
        if c[h].is_negative() {
            return Err(CensusError::NegativeCount(n));
        }
        out.push((n, g[h].to_biguint().unwrap(), c[h].to_biguint().unwrap()));
    }
    Ok(out)
}

/// `C(n, q)` from the block recursion.
pub fn count_indecomposable_recursive(n: usize, q: u64) -> Result<BigUint, CensusError> {
    check_even(n)?;
    Ok(indecomposable_table(n, q)?.pop().unwrap().2)
}

/// A partition of an integer, stored as multiplicities of each part size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<usize>,
    /// part size → how many times it occurs
    pub multiplicities: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut multiplicities = BTreeMap::new();
        for &p in &parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Partition { parts, multiplicities }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All partitions of `n` into parts that are multiples of `step`, parts in
/// non-increasing order.
pub fn partitions(n: usize, step: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, step: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_parts(cur.clone()));
            return;
        }
        let mut part = max.min(left) / step * step;
        while part >= step {
            cur.push(part);
            rec(left - part, part, step, cur, out);
            cur.pop();
            part -= step;
        }
    }
    let mut out = Vec::new();
    if n.is_multiple_of(step) {
        rec(n, n, step, &mut Vec::new(), &mut out);
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, q)` from the alternating sum over partitions of n,
/// `n! Σ (-1)^{p-1} (p-1)! ∏_j G_j^{p_j} / ((j!)^{p_j} p_j!)`.
/// Partitions with an odd part contribute nothing since `G_odd = 0`.
pub fn count_indecomposable_partition(n: usize, q: u64) -> Result<BigUint, CensusError> {
    check_even(n)?;
    check_order(q)?;
    let mut sum = BigRational::zero();
    for part in partitions(n, 2) {
        let p = part.len();
        let mut term = BigRational::from_integer(BigInt::from(factorial(p - 1)));
        if p % 2 == 0 {
            term = -term;
        }
        for (&j, &pj) in &part.multiplicities {
            let g = BigInt::from(count_self_dual(j, q)?);
            let num = g.pow(pj as u32);
            let den = BigInt::from(factorial(j).pow(pj as u32) * factorial(pj));
            term *= BigRational::new(num, den);
        }
        sum += term;
    }
    let total = sum * BigRational::from_integer(BigInt::from(factorial(n)));
    if !total.is_integer() {
        return Err(CensusError::NonIntegerResult(n));
    }
    total.to_integer().to_biguint().ok_or(CensusError::NegativeCount(n))
}

/// The Gaussian binomial `[n choose k]_q`, the number of k-dimensional
/// subspaces of GF(q)^n.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qb.pow((n - i) as u32) - 1u32;
        den *= qb.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Decimal expansion of `num/den` truncated to `digits` places.
pub fn decimal_ratio(num: &BigUint, den: &BigUint, digits: usize) -> Option<String> {
    if den.is_zero() {
        return None;
    }
    let scaled = num * BigUint::from(10u32).pow(digits as u32) / den;
    let s = format!("{:0>width$}", scaled.to_str_radix(10), width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    Some(format!("{int}.{frac}"))
}

/// `num/den` as a float, for callers that want an approximate value.
pub fn ratio_f64(num: &BigUint, den: &BigUint) -> Option<f64> {
    if den.is_zero() {
        return None;
    }
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone())).to_f64()
}
