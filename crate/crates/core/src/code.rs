//! Linear codes given by generator matrices: duals, Schur products, direct
//! sums, column point sets and evaluation codes.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Elem, Field};
use crate::matrix::{Matrix, MatrixError, SystematicForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("codes have lengths {0} and {1}")]
    ShapeMismatch(usize, usize),
    #[error("codes are over different fields ({0:?} and {1:?})")]
    SpecMismatch(Field, Field),
    #[error("the product spans the zero code")]
    ZeroCode,
    #[error("column {0} is zero and does not define a projective point")]
    ZeroColumn(usize),
    #[error("only {distinct} of the {n} columns are pairwise non-proportional")]
    ProportionalColumns { distinct: usize, n: usize },
}

/// An `[n, k]` linear code. The generator always has full row rank; `k = 0`
/// (the zero code) and `n = 0` are allowed.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Matrix,
    systematic: SystematicForm,
}

impl PartialEq for LinearCode {
    /// Codes are equal when they are the same subspace.
    fn eq(&self, other: &Self) -> bool {
        self.generator.row_space_equal(&other.generator).unwrap_or(false)
    }
}

impl LinearCode {
    /// Wraps a full-rank generator matrix.
    pub fn new(generator: Matrix) -> Result<LinearCode, CodeError> {
        let systematic = generator.systematic_form()?;
        Ok(LinearCode { generator, systematic })
    }

    /// The code spanned by the rows of `m`, which may be dependent.
    pub fn spanned_by(m: &Matrix) -> LinearCode {
        LinearCode::new(m.row_space_basis()).expect("RREF basis has full rank")
    }

    /// The zero code of length `n`.
    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::new(Matrix::zeros(field, 0, n)).unwrap()
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    /// Length n.
    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dimension k.
    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn systematic(&self) -> &SystematicForm {
        &self.systematic
    }

    pub fn contains(&self, other: &LinearCode) -> Result<bool, CodeError> {
        Ok(self.generator.row_space_contains(&other.generator)?)
    }

    /// Applies the monomial map: output column `i` is input column `perm[i]`
    /// multiplied by `scales[i]`.
    pub fn monomial_transform(&self, perm: &[usize], scales: &[Elem]) -> LinearCode {
        let mut g = self.generator.permute_columns(perm);
        for (c, &s) in scales.iter().enumerate() {
            g.scale_column(c, s);
        }
        LinearCode::new(g).expect("monomial maps preserve rank")
    }

    fn compatible(&self, other: &LinearCode) -> Result<(), CodeError> {
        if self.field() != other.field() {
            return Err(CodeError::SpecMismatch(self.field().clone(), other.field().clone()));
        }
        if self.len() != other.len() {
            return Err(CodeError::ShapeMismatch(self.len(), other.len()));
        }
        Ok(())
    }
}

/// The dual code `{x : x·c = 0 for all c ∈ C}`. For `k = n` this is the zero
/// code.
pub fn dual(c: &LinearCode) -> LinearCode {
    LinearCode::new(c.generator.kernel()).expect("kernel basis has full rank")
}

/// `n = 2k` and `G Gᵀ = 0`, which together force `C = C^⊥`.
pub fn is_self_dual(c: &LinearCode) -> bool {
    c.len() == 2 * c.dimension() && c.generator.gram().is_zero()
}

fn schur_rows(a: &[Elem], b: &[Elem], f: &Field) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect()
}

/// The span of all componentwise products `c1 * c2`. By bilinearity the
/// products of generator rows suffice.
pub fn schur_product(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, CodeError> {
    c1.compatible(c2)?;
    let f = c1.field();
    let mut products = Matrix::zeros(f, 0, c1.len());
    if std::ptr::eq(c1, c2) {
        for i in 0..c1.dimension() {
            for j in i..c1.dimension() {
                products.push_row(&schur_rows(c1.generator.row(i), c1.generator.row(j), f));
            }
        }
    } else {
        for a in c1.generator.iter_rows() {
            for b in c2.generator.iter_rows() {
                products.push_row(&schur_rows(a, b, f));
            }
        }
    }
    let out = LinearCode::spanned_by(&products);
    if out.is_zero_code() {
        return Err(CodeError::ZeroCode);
    }
    Ok(out)
}

/// `C^(2) = C * C`.
pub fn schur_square(c: &LinearCode) -> Result<LinearCode, CodeError> {
    schur_product(c, c)
}

/// `C^(d)`, the span of all d-fold products of codewords.
///
/// # Panics
///
/// If `d == 0`.
pub fn schur_power(c: &LinearCode, d: usize) -> Result<LinearCode, CodeError> {
    assert!(d >= 1, "Schur powers start at d = 1");
    let mut acc = c.clone();
    for _ in 1..d {
        acc = schur_product(&acc, c)?;
    }
    Ok(acc)
}

/// Block-diagonal direct sum; the second code's coordinates follow the first's.
pub fn direct_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, CodeError> {
    if c1.field() != c2.field() {
        return Err(CodeError::SpecMismatch(c1.field().clone(), c2.field().clone()));
    }
    LinearCode::new(c1.generator.block_diagonal(&c2.generator)?)
}

/// The columns of a generator matrix viewed as points of projective space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivePointSet {
    /// Distinct points, each scaled so its first nonzero coordinate is 1, in
    /// order of first appearance.
    pub points: Vec<Vec<Elem>>,
    pub multiplicities: Vec<usize>,
    /// `classes[i]` lists the columns proportional to `points[i]`.
    pub classes: Vec<Vec<usize>>,
    /// For each column, the index of its point.
    #[serde(skip)]
    pub column_point: Vec<usize>,
}

impl ProjectivePointSet {
    pub fn distinct(&self) -> usize {
        self.points.len()
    }

    /// One normalized representative per column, repeated per multiplicity.
    pub fn column_representatives(&self) -> Vec<Vec<Elem>> {
        self.column_point.iter().map(|&i| self.points[i].clone()).collect()
    }
}

pub fn normalize_point(field: &Field, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|e| !e.is_zero())?;
    let s = field.inv(lead).expect("lead is nonzero");
    Some(v.iter().map(|&x| field.mul(x, s)).collect())
}

pub fn column_points(c: &LinearCode) -> Result<ProjectivePointSet, CodeError> {
    let g = &c.generator;
    let mut set = ProjectivePointSet {
        points: Vec::new(),
        multiplicities: Vec::new(),
        classes: Vec::new(),
        column_point: Vec::with_capacity(c.len()),
    };
    let mut index = std::collections::HashMap::new();
    for col in 0..c.len() {
        let p = normalize_point(c.field(), &g.column(col)).ok_or(CodeError::ZeroColumn(col))?;
        let i = *index.entry(p.clone()).or_insert_with(|| {
            set.points.push(p);
            set.multiplicities.push(0);
            set.classes.push(Vec::new());
            set.points.len() - 1
        });
        set.multiplicities[i] += 1;
        set.classes[i].push(col);
        set.column_point.push(i);
    }
    Ok(set)
}

/// Exponent vectors of all degree-`a` monomials in `vars` variables, in
/// graded lexicographic order (`x1^a` first).
pub fn monomials(vars: usize, a: usize) -> Vec<Vec<usize>> {
    fn rec(vars: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == vars {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(vars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        rec(vars, a, &mut Vec::new(), &mut out);
    } else if a == 0 {
        out.push(Vec::new());
    }
    out
}

/// The image of `f ↦ (f(P_1), ..., f(P_n))` on degree-`a` forms in `vars`
/// variables, one coordinate per listed representative.
pub fn evaluation_code(field: &Field, vars: usize, points: &[Vec<Elem>], a: usize) -> LinearCode {
    let mut rows = Matrix::zeros(field, 0, points.len());
    for mono in monomials(vars, a) {
        let row: Vec<Elem> = points
            .iter()
            .map(|p| {
                mono.iter()
                    .zip(p)
                    .fold(Elem::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)))
            })
            .collect();
        rows.push_row(&row);
    }
    LinearCode::spanned_by(&rows)
}

/// Compares the dimension of the degree-`d` evaluation code on the column
/// points with the dimension of `C^(d)`. Requires pairwise non-proportional
/// columns.
pub fn veronese_dimension_check(c: &LinearCode, d: usize) -> Result<bool, CodeError> {
    let pts = column_points(c)?;
    if pts.distinct() < c.len() {
        return Err(CodeError::ProportionalColumns {
            distinct: pts.distinct(),
            n: c.len(),
        });
    }
    let ev = evaluation_code(c.field(), c.dimension(), &pts.column_representatives(), d);
    let power = schur_power(c, d)?;
    Ok(ev.dimension() == power.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn code(q: u64, rows: &[&[u32]]) -> LinearCode {
        LinearCode::new(Matrix::from_values(&gf(q), rows).unwrap()).unwrap()
    }

    fn random_code(rng: &mut ChaCha8Rng, f: &Field) -> LinearCode {
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(1..=n);
        let mut m = Matrix::zeros(f, k, n);
        for r in 0..k {
            for c in 0..n {
                m.set(r, c, f.elem(rng.gen_range(0..f.order()) as u64).unwrap());
            }
        }
        let c = LinearCode::spanned_by(&m);
        if c.is_zero_code() {
            return random_code(rng, f);
        }
        c
    }

    // Span of every d-fold product of generator rows (with repetition),
    // enumerated directly rather than by iterating pairwise products.
    fn monomial_products_dim(c: &LinearCode, d: usize) -> usize {
        let f = c.field();
        let k = c.dimension();
        let mut m = Matrix::zeros(f, 0, c.len());
        let mut idx = vec![0usize; d];
        loop {
            let mut v = vec![Elem::ONE; c.len()];
            for &i in &idx {
                v = schur_rows(&v, c.generator().row(i), f);
            }
            m.push_row(&v);
            // non-decreasing index tuples
            let mut pos = d;
            while pos > 0 && idx[pos - 1] == k - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            let v = idx[pos - 1];
            idx[pos..d].fill(v);
        }
        m.rank()
    }

    #[test]
    fn duals() {
        let h = corpus::hamming8();
        assert_eq!(dual(&h), h);
        let rep = code(2, &[&[1, 1]]);
        assert_eq!(dual(&rep), rep);
        let d = dual(&code(2, &[&[1, 0, 0]]));
        assert_eq!(d, code(2, &[&[0, 1, 0], &[0, 0, 1]]));
        let full = code(2, &[&[1, 0], &[0, 1]]);
        assert!(dual(&full).is_zero_code());
    }

    #[test]
    fn self_duality() {
        assert!(is_self_dual(&corpus::hamming8()));
        assert!(is_self_dual(&corpus::hamming8_doubled()));
        assert!(is_self_dual(&corpus::len14()));
        assert!(!is_self_dual(&code(2, &[&[1, 0], &[0, 1]])));
        assert!(!is_self_dual(&code(3, &[&[1, 1]])));
        assert!(is_self_dual(&code(5, &[&[1, 2]])));
    }

    #[test]
    fn schur_examples() {
        let h = corpus::hamming8();
        assert_eq!(schur_square(&h).unwrap().dimension(), 7);
        let hh = corpus::hamming8_doubled();
        assert_eq!(schur_square(&hh).unwrap().dimension(), 14);
        assert_eq!(schur_power(&corpus::len14(), 2).unwrap().dimension(), 12);
        assert_eq!(schur_power(&h, 1).unwrap(), h);

        let ones = code(2, &[&[1; 8]]);
        assert_eq!(schur_product(&ones, &h).unwrap(), h);
        let a = code(2, &[&[1, 0]]);
        let b = code(2, &[&[0, 1]]);
        assert_eq!(schur_product(&a, &b).unwrap_err(), CodeError::ZeroCode);
        assert_eq!(
            schur_product(&a, &code(2, &[&[1, 0, 1]])).unwrap_err(),
            CodeError::ShapeMismatch(2, 3)
        );
    }

    #[test]
    fn direct_sums() {
        let h = corpus::hamming8();
        let hh = direct_sum(&h, &h).unwrap();
        assert_eq!(hh, corpus::hamming8_doubled());
        assert!(is_self_dual(&hh));
        let empty = LinearCode::zero(h.field(), 0);
        assert_eq!(direct_sum(&h, &empty).unwrap(), h);
        let l = corpus::len14();
        let sum = direct_sum(&h, &l).unwrap();
        let d = |c: &LinearCode| schur_square(c).unwrap().dimension();
        assert_eq!(d(&sum), d(&h) + d(&l));
        assert!(matches!(
            direct_sum(&h, &code(3, &[&[1]])),
            Err(CodeError::SpecMismatch(..))
        ));
    }

    #[test]
    fn point_sets() {
        let pts = column_points(&corpus::hamming8()).unwrap();
        assert_eq!(pts.distinct(), 8);
        let pts = column_points(&corpus::len14()).unwrap();
        assert_eq!(pts.distinct(), 13);
        assert!(pts.classes.contains(&vec![6, 13]));
        assert_eq!(pts.multiplicities.iter().sum::<usize>(), 14);
        assert_eq!(
            column_points(&code(2, &[&[1, 0, 1], &[0, 0, 1]])).unwrap_err(),
            CodeError::ZeroColumn(1)
        );

        let f = gf(5);
        let c = code(5, &[&[1, 2, 0], &[0, 0, 3]]);
        let pts = column_points(&c).unwrap();
        assert_eq!(pts.distinct(), 2);
        for p in &pts.points {
            assert_eq!(*p.iter().find(|e| !e.is_zero()).unwrap(), f.one());
        }
    }

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(3, 2),
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(monomials(4, 2).len(), 10);
    }

    #[test]
    fn evaluation_codes() {
        let h = corpus::hamming8();
        let pts = column_points(&h).unwrap();
        let reps = pts.column_representatives();
        let ev1 = evaluation_code(h.field(), 4, &reps, 1);
        assert_eq!(ev1, h);
        assert_eq!(evaluation_code(h.field(), 4, &reps, 2).dimension(), 7);
        let one = vec![vec![Elem::ONE, Elem::ZERO, Elem::ONE]];
        assert_eq!(evaluation_code(&gf(3), 3, &one, 2).dimension(), 1);
    }

    #[test]
    fn veronese_checks() {
        let h = corpus::hamming8();
        assert!(veronese_dimension_check(&h, 1).unwrap());
        assert!(veronese_dimension_check(&h, 2).unwrap());
        assert!(matches!(
            veronese_dimension_check(&corpus::len14(), 2),
            Err(CodeError::ProportionalColumns { distinct: 13, n: 14 })
        ));

        let f = gf(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 10 {
            let mut m = Matrix::zeros(&f, 3, 6);
            for r in 0..3 {
                for c in 0..6 {
                    m.set(r, c, f.elem(rng.gen_range(0..3)).unwrap());
                }
            }
            let Ok(c) = LinearCode::new(m) else { continue };
            let Ok(pts) = column_points(&c) else { continue };
            if pts.distinct() < 6 {
                continue;
            }
            assert!(veronese_dimension_check(&c, 2).unwrap());
            checked += 1;
        }
    }

    #[test]
    fn random_code_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for q in [2, 3, 4] {
            let f = gf(q);
            for _ in 0..50 {
                let c = random_code(&mut rng, &f);
                assert_eq!(dual(&dual(&c)), c);
                let k = c.dimension();
                let sq = schur_square(&c).unwrap().dimension();
                assert!(k <= sq && sq <= c.len().min(k * (k + 1) / 2), "{c:?}");
                assert_eq!(sq, monomial_products_dim(&c, 2));
                assert_eq!(schur_power(&c, 3).unwrap().dimension(), monomial_products_dim(&c, 3));

                let e = random_code(&mut rng, &f);
                if e.len() != c.len() {
                    continue;
                }
                let ce = schur_product(&c, &e);
                let ec = schur_product(&e, &c);
                assert_eq!(ce.clone().ok(), ec.ok());
                // a subcode D of C gives D * E ⊆ C * E
                let sub = LinearCode::new(c.generator().select_rows(&[0])).unwrap();
                if let (Ok(ce), Ok(de)) = (ce, schur_product(&sub, &e)) {
                    assert!(ce.contains(&de).unwrap());
                }
            }
        }
    }

    #[test]
    fn self_dual_rows_are_orthogonal() {
        for c in [corpus::hamming8(), corpus::hamming8_doubled(), corpus::len14()] {
            let f = c.field();
            let g = c.generator();
            for i in 0..c.dimension() {
                for j in 0..c.dimension() {
                    assert!(f.dot(g.row(i), g.row(j)).is_zero());
                }
            }
            // the all-ones functional kills the product of two orthogonal rows
            for i in 0..c.dimension() {
                for j in i + 1..c.dimension() {
                    let prod = schur_rows(g.row(i), g.row(j), f);
                    let s = prod.iter().fold(Elem::ZERO, |acc, &x| f.add(acc, x));
                    assert!(s.is_zero());
                }
            }
            assert!(schur_square(&c).unwrap().dimension() < 2 * c.dimension());
        }
    }
}
