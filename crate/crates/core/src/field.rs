//! Exact arithmetic in GF(q) for q = p^m ≤ 2^16.
//!
//! Elements are stored as their canonical integer encoding: the residue
//! polynomial `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is encoded as
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Multiplication and inversion go
//! through log/antilog tables built once per field; addition works digit by
//! digit in base p (plain XOR when p = 2).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds 2^16")]
    TooLarge { p: u32, m: u32 },
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not an element of GF({q})")]
    OutOfRange { value: u64, q: u32 },
    #[error("cannot parse field order `{0}`")]
    Syntax(String),
}

/// A field element in canonical encoding. Only meaningful together with the
/// [`Field`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for i in 0..2(q-1), so products of logs need no reduction
    exp: Vec<u16>,
    // log[0] is unused
    log: Vec<u32>,
    // p^i for digit extraction
    powers: Vec<u32>,
}

/// A finite field GF(p^m). Cheap to clone; all clones share one set of tables.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self)
    }
}

/// Formats the order the way the matrix file header expects it: `p` for
/// prime fields and `p^m` otherwise.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "{}", self.0.p)
        } else {
            write!(f, "{}^{}", self.0.p, self.0.m)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^m) using the lexicographically least monic irreducible
/// polynomial of degree m (coefficients compared from the constant term up).
pub fn make_field(p: u32, m: u32) -> Result<Field, FieldError> {
    if m == 0 {
        return Err(FieldError::DegreeZero);
    }
    if !is_prime(p as u64) {
        return Err(FieldError::NotPrime(p));
    }
    let q = (p as u64)
        .checked_pow(m)
        .filter(|&q| q <= MAX_ORDER as u64)
        .ok_or(FieldError::TooLarge { p, m })? as u32;

    let modulus = if m == 1 {
        vec![0, 1]
    } else {
        least_irreducible(p, m as usize)
    };
    let powers: Vec<u32> = (0..m).map(|i| p.pow(i)).collect();

    let mut tables = Tables {
        p,
        m,
        q,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
        powers,
    };
    build_log_tables(&mut tables);
    Ok(Field(Arc::new(tables)))
}

impl Field {
    /// GF(p) for a prime p.
    pub fn prime(p: u32) -> Result<Field, FieldError> {
        make_field(p, 1)
    }

    /// The field with `q` elements, factoring q as a prime power.
    pub fn with_order(q: u64) -> Result<Field, FieldError> {
        let (p, m) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if q > MAX_ORDER as u64 {
            return Err(FieldError::TooLarge { p: p as u32, m });
        }
        make_field(p as u32, m)
    }

    /// Parses `p^m` or a plain prime power such as `7` or `4`.
    pub fn parse(text: &str) -> Result<Field, FieldError> {
        let text = text.trim();
        let bad = || FieldError::Syntax(text.to_string());
        match text.split_once('^') {
            Some((p, m)) => {
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let m: u32 = m.trim().parse().map_err(|_| bad())?;
                make_field(p, m)
            }
            None => Field::with_order(text.parse().map_err(|_| bad())?),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Wraps a canonical encoding, rejecting values ≥ q.
    pub fn elem(&self, value: u64) -> Result<Elem, FieldError> {
        if value < self.0.q as u64 {
            Ok(Elem(value as u16))
        } else {
            Err(FieldError::OutOfRange { value, q: self.0.q })
        }
    }

    /// The image of an integer under Z → GF(p) ⊆ GF(q).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|v| Elem(v as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.q).map(|v| Elem(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.0;
        if t.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if t.m == 1 {
            return Elem(((a.0 as u32 + b.0 as u32) % t.p) as u16);
        }
        let (mut x, mut y, mut out) = (a.0 as u32, b.0 as u32, 0);
        for &pw in &t.powers {
            out += ((x % t.p + y % t.p) % t.p) * pw;
            x /= t.p;
            y /= t.p;
        }
        Elem(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let t = &*self.0;
        if t.p == 2 {
            return a;
        }
        if t.m == 1 {
            return Elem(((t.p - a.0 as u32) % t.p) as u16);
        }
        let (mut x, mut out) = (a.0 as u32, 0);
        for &pw in &t.powers {
            out += ((t.p - x % t.p) % t.p) * pw;
            x /= t.p;
        }
        Elem(out as u16)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.0;
        Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let t = &*self.0;
        let l = t.log[a.0 as usize];
        Ok(Elem(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.0;
        let l = (t.log[a.0 as usize] as u64 * (e % (t.q as u64 - 1))) % (t.q as u64 - 1);
        Elem(t.exp[l as usize])
    }

    /// Standard bilinear form Σ aᵢbᵢ.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// Splits `q` as `p^m`, or `None` if it is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// Polynomials over GF(p) as coefficient vectors, constant term first, with
// no trailing zeros (the zero polynomial is empty).

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u32, m: usize) -> Vec<u32> {
    // c_0 is the most significant key of the lexicographic order
    for v in 0..p.pow(m as u32) {
        let mut f: Vec<u32> = digits(v, p, m).into_iter().rev().collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(a: u32, b: u32, t: &Tables) -> u32 {
    let m = t.m as usize;
    let (x, y) = (digits(a, t.p, m), digits(b, t.p, m));
    let mut prod = vec![0u32; 2 * m];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % t.p;
        }
    }
    encode(&poly_rem(&prod, &t.modulus, t.p), t.p)
}

fn build_log_tables(t: &mut Tables) {
    let q = t.q as usize;
    let order = q - 1;
    let mut exp = vec![0u16; 2 * order.max(1)];
    let mut log = vec![0u32; q];
    if q == 2 {
        exp = vec![1, 1];
        t.exp = exp;
        t.log = log;
        return;
    }
    for g in 2..t.q {
        let mut x = 1u32;
        let mut ok = true;
        for (i, slot) in exp.iter_mut().enumerate().take(order) {
            if i > 0 && x == 1 {
                ok = false;
                break;
            }
            *slot = x as u16;
            log[x as usize] = i as u32;
            x = if t.m == 1 { x * g % t.p } else { poly_mul_mod(x, g, t) };
        }
        if ok && x == 1 {
            for i in order..2 * order {
                exp[i] = exp[i - order];
            }
            t.exp = exp;
            t.log = log;
            return;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}
