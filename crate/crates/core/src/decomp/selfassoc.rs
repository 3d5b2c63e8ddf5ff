//! Self-association certificates: nonzero diagonals `d` with
//! `G · diag(d) · Gᵀ = 0`.
//!
//! The condition is linear in `d`: it says `d` is orthogonal to every
//! product `g_i * g_j` of generator rows, so the solutions form the dual of
//! the Schur square. The search walks that subspace looking for a vector
//! with no zero entry.

use num_bigint::BigUint;
use serde::Serialize;

use super::DecompError;
use crate::code::{dual, schur_square, LinearCode};
use crate::field::Elem;
use crate::matrix::Matrix;

/// Largest solution space that is searched exhaustively.
pub const SEARCH_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfAssociationCertificate {
    pub diagonal: Vec<Elem>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SelfAssociation {
    Certified(SelfAssociationCertificate),
    /// The whole solution space was searched without success.
    NotSelfAssociated {
        searched: u64,
    },
    /// The solution space has more than [`SEARCH_LIMIT`] elements.
    Undecided {
        space_size: String,
    },
}

fn verify(g: &Matrix, d: &[Elem]) -> bool {
    let mut scaled = g.clone();
    for (c, &s) in d.iter().enumerate() {
        scaled.scale_column(c, s);
    }
    scaled.mul(&g.transpose()).map(|m| m.is_zero()).unwrap_or(false)
}

pub fn self_association_certificate(g: &Matrix) -> Result<SelfAssociation, DecompError> {
    let (k, n) = (g.rows(), g.cols());
    if n != 2 * k {
        return Err(DecompError::ShapeError(format!(
            "expected n = 2k, got k = {k}, n = {n}"
        )));
    }
    if let Some(c) = (0..n).find(|&c| g.column(c).iter().all(|e| e.is_zero())) {
        return Err(DecompError::ZeroColumn(c));
    }
    let f = g.field();
    let code = LinearCode::new(g.clone())?;
    let solutions = dual(&schur_square(&code)?);
    let basis = solutions.generator();
    let t = basis.rows() as u32;
    let q = f.order() as u64;
    let size = BigUint::from(q).pow(t);
    if size > BigUint::from(SEARCH_LIMIT) {
        return Ok(SelfAssociation::Undecided {
            space_size: size.to_string(),
        });
    }
    let total = q.pow(t);
    let mut coeffs = vec![Elem::ZERO; t as usize];
    for _ in 1..total {
        // odometer over coefficient vectors, skipping the zero vector
        for c in coeffs.iter_mut() {
            *c = f.elem((c.value() as u64 + 1) % q).unwrap();
            if !c.is_zero() {
                break;
            }
        }
        let mut d = vec![Elem::ZERO; n];
        for (i, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, &b) in d.iter_mut().zip(basis.row(i)) {
                *x = f.add(*x, f.mul(c, b));
            }
        }
        if d.iter().all(|e| !e.is_zero()) {
            let s = f.inv(d[0]).unwrap();
            let d: Vec<Elem> = d.iter().map(|&x| f.mul(x, s)).collect();
            let verified = verify(g, &d);
            return Ok(SelfAssociation::Certified(SelfAssociationCertificate {
                diagonal: d,
                verified,
            }));
        }
    }
    Ok(SelfAssociation::NotSelfAssociated { searched: total })
}
