//! Arithmetic in GF(q), q = p^e.
//!
//! Elements are encoded as integers in `[0, q)`. For `e > 1` the base-p digits
//! of the code are the coefficients of the polynomial-basis representation,
//! least significant digit = constant coefficient. The modulus is stored as
//! `e + 1` coefficients in ascending degree order.
//!
//! Fields with `q <= 256` precompute full add/mul/neg/inv tables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u64 = 1 << 16;

const TABLE_LIMIT: u32 = 256;

/// Largest q for which [`Field::new`] can pick a modulus on its own.
pub const BUILTIN_MODULUS_LIMIT: u32 = 64;

// (p, e, ascending coefficients)
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

/// An element of GF(q), by canonical integer code.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Scalar(pub u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The binary/unary operations exposed through [`Field::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field GF(p^e). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.0.p, self.0.e, self.0.modulus)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(p^e). When `e > 1` and no modulus is given, a built-in
    /// irreducible polynomial is used (available for `p^e <= 64`).
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidDegree(e));
        }
        let order = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge((p as u64).saturating_pow(e)))?;
        let q = order as u32;

        let modulus = if e == 1 {
            if let Some(m) = modulus {
                if !m.is_empty() {
                    return Err(Error::MalformedModulus(
                        "prime fields take no modulus".into(),
                    ));
                }
            }
            Vec::new()
        } else {
            let m = match modulus {
                Some(m) => m.to_vec(),
                None => builtin_modulus(p, e)
                    .ok_or(Error::MissingModulus { p, e })?
                    .to_vec(),
            };
            validate_modulus(p, e, &m)?;
            m
        };

        let mut inner = Inner {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(q) for a prime power q, using the built-in modulus when q is not prime.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Field::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Field order as a `usize`, handy for indexing.
    pub fn order(&self) -> usize {
        self.0.q as usize
    }

    /// Ascending coefficients of the modulus; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> + Clone {
        (0..self.0.q).map(Scalar)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Scalar> + Clone {
        (1..self.0.q).map(Scalar)
    }

    #[inline]
    pub fn contains(&self, a: Scalar) -> bool {
        a.0 < self.0.q
    }

    /// Checked conversion from a canonical integer code.
    pub fn scalar(&self, value: u32) -> Result<Scalar> {
        if value < self.0.q {
            Ok(Scalar(value))
        } else {
            Err(Error::InvalidScalar {
                value,
                q: self.0.q,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(n.rem_euclid(self.0.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        match &self.0.tables {
            Some(t) => Scalar(t.add[(a.0 * self.0.q + b.0) as usize] as u32),
            None => Scalar(self.slow_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        match &self.0.tables {
            Some(t) => Scalar(t.neg[a.0 as usize] as u32),
            None => Scalar(self.slow_neg(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        match &self.0.tables {
            Some(t) => Scalar(t.mul[(a.0 * self.0.q + b.0) as usize] as u32),
            None => Scalar(self.slow_mul(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.0.tables {
            Some(t) => Scalar(t.inv[a.0 as usize] as u32),
            None => Scalar(self.slow_pow(a.0, (self.0.q - 2) as u64)),
        })
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Scalar, exp: u64) -> Scalar {
        let mut result = Scalar::ONE;
        let mut base = a;
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Applies `op` to `a` (and `b` for binary operations). Both operands are
    /// range-checked; `Inv` of zero is an error.
    pub fn apply(&self, op: FieldOp, a: Scalar, b: Scalar) -> Result<Scalar> {
        self.scalar(a.0)?;
        self.scalar(b.0)?;
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Neg => self.neg(a),
            FieldOp::Inv => self.inv(a)?,
        })
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let p = self.0.p;
        (0..self.0.e)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.0.p + d)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.e == 1 {
            return ((a as u64 + b as u64) % p as u64) as u32;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.undigits(&sum)
    }

    fn slow_neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.e == 1 {
            return (p - a % p) % p;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|x| (p - x) % p).collect();
        self.undigits(&d)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p as u64;
        if self.0.e == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let e = self.0.e as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top degree down.
        let m = &self.0.modulus;
        for deg in (e..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &mc) in m.iter().enumerate().take(e) {
                let idx = deg - e + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
            }
            prod[deg] = 0;
        }
        let reduced: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.undigits(&reduced)
    }

    fn slow_pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut result = 1;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.slow_mul(result, base);
            }
            base = self.slow_mul(base, base);
            exp >>= 1;
        }
        result
    }
}

fn build_tables(inner: &Inner) -> Tables {
    // A temporary table-less field drives the slow paths.
    let plain = Field(Arc::new(Inner {
        p: inner.p,
        e: inner.e,
        q: inner.q,
        modulus: inner.modulus.clone(),
        tables: None,
    }));
    let q = inner.q;
    let mut add = vec![0u8; (q * q) as usize];
    let mut mul = vec![0u8; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            add[(a * q + b) as usize] = plain.slow_add(a, b) as u8;
            mul[(a * q + b) as usize] = plain.slow_mul(a, b) as u8;
        }
    }
    let neg = (0..q).map(|a| plain.slow_neg(a) as u8).collect();
    let mut inv = vec![0u8; q as usize];
    for a in 1..q {
        inv[a as usize] = (1..q)
            .find(|&b| mul[(a * q + b) as usize] == 1)
            .expect("nonzero element without inverse: modulus not irreducible") as u8;
    }
    Tables { add, mul, neg, inv }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits q into (p, e) with q = p^e, if q is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn builtin_modulus(p: u32, e: u32) -> Option<&'static [u32]> {
    BUILTIN_MODULI
        .iter()
        .find(|(bp, be, _)| *bp == p && *be == e)
        .map(|(_, _, m)| *m)
}

fn validate_modulus(p: u32, e: u32, m: &[u32]) -> Result<()> {
    if m.len() != e as usize + 1 {
        return Err(Error::MalformedModulus(format!(
            "expected {} coefficients, got {}",
            e + 1,
            m.len()
        )));
    }
    if let Some(&c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::MalformedModulus(format!(
            "coefficient {c} is not in [0, {p})"
        )));
    }
    if m[e as usize] != 1 {
        return Err(Error::MalformedModulus("modulus must be monic".into()));
    }
    if !is_irreducible(p, m) {
        return Err(Error::ReducibleModulus(m.to_vec(), p));
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem_is_zero(p, poly, &divisor) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, num: &[u32], monic_div: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let d = monic_div.len() - 1;
    for deg in (d..r.len()).rev() {
        let c = r[deg];
        if c == 0 {
            continue;
        }
        for (i, &dc) in monic_div.iter().enumerate() {
            let idx = deg - d + i;
            r[idx] = (r[idx] + (p - c) * dc as u64) % p;
        }
    }
    r[..d].iter().all(|&c| c == 0)
}
