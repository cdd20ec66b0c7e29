//! Dense vectors and matrices over GF(q).
//!
//! Coordinate indices in the public API (supports, unit vectors) are 1-based,
//! matching the x_1..x_m convention of the constructions. Storage is 0-based.

use std::fmt;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Scalar};

/// Upper bound on q^m for anything that enumerates a whole vector space.
pub const ENUMERATION_LIMIT: u64 = 1 << 31;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(len: usize) -> Vector {
        Vector(vec![Scalar::ZERO; len])
    }

    /// The unit vector e_i of length `len`; `i` is 1-based.
    pub fn unit(len: usize, i: usize) -> Vector {
        assert!(i >= 1 && i <= len, "unit index {i} out of 1..={len}");
        let mut v = Vector::zeros(len);
        v.0[i - 1] = Scalar::ONE;
        v
    }

    pub fn from_values(values: &[u32]) -> Vector {
        Vector(values.iter().copied().map(Scalar).collect())
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|s| s.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    /// Position (0-based) of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|s| !s.is_zero())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &[Scalar]) -> Vector {
        let mut out = self.0.clone();
        out.extend_from_slice(other);
        Vector(out)
    }

    /// Checks that every coordinate is an element of `field`.
    pub fn check_in(&self, field: &Field) -> Result<()> {
        match self.0.iter().find(|s| !field.contains(**s)) {
            Some(s) => Err(Error::InvalidScalar {
                value: s.0,
                q: field.q(),
            }),
            None => Ok(()),
        }
    }
}

impl Deref for Vector {
    type Target = [Scalar];

    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl DerefMut for Vector {
    fn deref_mut(&mut self) -> &mut [Scalar] {
        &mut self.0
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Euclidean inner product.
pub fn dot(field: &Field, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    check_len(u.len(), v.len())?;
    Ok(dot_unchecked(field, u, v))
}

#[inline]
pub(crate) fn dot_unchecked(field: &Field, u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter()
        .zip(v)
        .fold(Scalar::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// 1-based indices of the nonzero coordinates.
pub fn support(v: &[Scalar]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn weight(v: &[Scalar]) -> usize {
    v.iter().filter(|s| !s.is_zero()).count()
}

/// `true` iff Suppt(u) is contained in Suppt(v), i.e. v covers u.
pub fn covers(u: &[Scalar], v: &[Scalar]) -> Result<bool> {
    check_len(u.len(), v.len())?;
    Ok(u.iter().zip(v).all(|(a, b)| a.is_zero() || !b.is_zero()))
}

pub fn scale(field: &Field, a: Scalar, v: &[Scalar]) -> Vector {
    Vector(v.iter().map(|&x| field.mul(a, x)).collect())
}

pub fn add(field: &Field, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    check_len(u.len(), v.len())?;
    Ok(Vector(u.iter().zip(v).map(|(&a, &b)| field.add(a, b)).collect()))
}

pub fn sub(field: &Field, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    check_len(u.len(), v.len())?;
    Ok(Vector(u.iter().zip(v).map(|(&a, &b)| field.sub(a, b)).collect()))
}

/// `acc += a * v` in place.
pub fn axpy(field: &Field, acc: &mut [Scalar], a: Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if a.is_zero() {
        return;
    }
    for (x, &y) in acc.iter_mut().zip(v) {
        *x = field.add(*x, field.mul(a, y));
    }
}

/// Scales `v` so its first nonzero coordinate is 1. Zero vectors are returned unchanged.
pub fn normalize(field: &Field, v: &[Scalar]) -> Vector {
    match v.iter().find(|s| !s.is_zero()) {
        Some(&lead) => {
            let inv = field.inv(lead).expect("lead is nonzero");
            scale(field, inv, v)
        }
        None => Vector(v.to_vec()),
    }
}

/// Returns `Some(a)` with `u = a * v` if `u` is a scalar multiple of nonzero `v`.
pub fn multiple_of(field: &Field, u: &[Scalar], v: &[Scalar]) -> Option<Scalar> {
    let lead = v.iter().position(|s| !s.is_zero())?;
    let a = field.div(u[lead], v[lead]).ok()?;
    u.iter()
        .zip(v)
        .all(|(&x, &y)| x == field.mul(a, y))
        .then_some(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ncols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn new(ncols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(Matrix { ncols, rows })
    }

    /// Builds a matrix from rows, taking the width from the first row.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Matrix> {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::new(ncols, rows)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            ncols,
            rows: vec![Vector::zeros(ncols); nrows],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix {
            ncols: n,
            rows: (1..=n).map(|i| Vector::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            ncols: self.rows.len(),
            rows: (0..self.ncols).map(|j| self.column(j)).collect(),
        }
    }

    pub fn check_in(&self, field: &Field) -> Result<()> {
        self.rows.iter().try_for_each(|r| r.check_in(field))
    }

    /// Renders the text format: a `q ncols nrows` header, then one row per
    /// line with coordinates as canonical integers separated by single spaces.
    pub fn to_text(&self, field: &Field) -> String {
        let mut out = format!("{} {} {}\n", field.q(), self.ncols, self.rows.len());
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|s| s.0.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`Matrix::to_text`]. Extension fields
    /// use the built-in modulus for their order.
    pub fn parse_text(text: &str) -> Result<(Field, Matrix)> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let nums = parse_ints(hline, header)?;
        let [q, ncols, nrows] = nums[..] else {
            return Err(Error::parse(hline, "header must be `q columns rows`"));
        };
        let field = Field::with_order(q).map_err(|e| Error::parse(hline, e.to_string()))?;
        let mut rows = Vec::with_capacity(nrows as usize);
        for (lineno, line) in lines {
            let vals = parse_ints(lineno, line)?;
            if vals.len() != ncols as usize {
                return Err(Error::parse(
                    lineno,
                    format!("expected {ncols} entries, found {}", vals.len()),
                ));
            }
            let v = Vector::from_values(&vals);
            v.check_in(&field)
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
            rows.push(v);
        }
        if rows.len() != nrows as usize {
            return Err(Error::parse(
                hline,
                format!("header announces {nrows} rows, found {}", rows.len()),
            ));
        }
        Ok((field, Matrix::new(ncols as usize, rows)?))
    }
}

pub(crate) fn parse_ints(line: usize, text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::parse(line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

/// Linearly independent vectors spanning a subspace of F_q^ambient_dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub vectors: Vec<Vector>,
    pub ambient_dim: usize,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Incremental row-echelon form. Rows are kept with their pivot scaled to 1;
/// the pivot is the first nonzero coordinate of the reduced incoming vector.
#[derive(Clone, Debug)]
pub struct Echelon<'f> {
    field: &'f Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl<'f> Echelon<'f> {
    pub fn new(field: &'f Field, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if !c.is_zero() {
                axpy(self.field, v, self.field.neg(c), row);
            }
        }
    }

    /// Adds `v` to the span; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        match w.iter().position(|s| !s.is_zero()) {
            None => false,
            Some(piv) => {
                let inv = self.field.inv(w[piv]).expect("pivot is nonzero");
                for x in w.iter_mut() {
                    *x = self.field.mul(inv, *x);
                }
                self.rows.push(w);
                self.pivots.push(piv);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|s| s.is_zero())
    }

    pub fn into_basis(self) -> SubspaceBasis {
        SubspaceBasis {
            vectors: self.rows.into_iter().map(Vector).collect(),
            ambient_dim: self.dim,
        }
    }
}

/// Row rank over GF(q).
pub fn rank(field: &Field, m: &Matrix) -> usize {
    row_space(field, m).dim()
}

/// A row-reduced basis of the row space.
pub fn row_space(field: &Field, m: &Matrix) -> SubspaceBasis {
    let mut ech = Echelon::new(field, m.ncols());
    for r in m.rows() {
        if ech.rank() == m.ncols() {
            break;
        }
        ech.insert(r);
    }
    ech.into_basis()
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(field: &Field, dim: usize, vectors: &[Vector]) -> Result<usize> {
    let mut ech = Echelon::new(field, dim);
    for v in vectors {
        check_len(dim, v.len())?;
        ech.insert(v);
    }
    Ok(ech.rank())
}

/// Basis of the null space {x : M x^T = 0}, from the reduced row echelon form.
pub fn kernel(field: &Field, m: &Matrix) -> Vec<Vector> {
    let n = m.ncols();
    let (rref, pivots) = rref(field, m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = Vector::zeros(n);
            x.0[fc] = Scalar::ONE;
            for (row, &pc) in rref.iter().zip(&pivots) {
                x.0[pc] = field.neg(row[fc]);
            }
            x
        })
        .collect()
}

/// Reduced row echelon form: nonzero rows and their pivot columns.
pub(crate) fn rref(field: &Field, m: &Matrix) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut rows: Vec<Vec<Scalar>> = m.rows().iter().map(|r| r.0.clone()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.ncols() {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = field.neg(row[c]);
                axpy(field, row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// The space F_q^m with the canonical ordering
/// index(x) = sum_i value(x_i) * q^(m - i), x_1 most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorSpace {
    q: u32,
    m: usize,
    size: u64,
}

impl VectorSpace {
    pub fn new(q: u32, m: usize) -> Result<VectorSpace> {
        let size = (q as u64)
            .checked_pow(m as u32)
            .filter(|&s| s <= ENUMERATION_LIMIT)
            .ok_or(Error::SizeGuard {
                what: "q^m",
                size: (q as u128).saturating_pow(m as u32),
                limit: ENUMERATION_LIMIT as u128,
            })?;
        Ok(VectorSpace { q, m, size })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// q^m
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn vector_at(&self, mut index: u64) -> Vector {
        debug_assert!(index < self.size);
        let mut v = vec![Scalar::ZERO; self.m];
        for slot in v.iter_mut().rev() {
            *slot = Scalar((index % self.q as u64) as u32);
            index /= self.q as u64;
        }
        Vector(v)
    }

    pub fn index_of(&self, v: &[Scalar]) -> u64 {
        v.iter().fold(0u64, |acc, s| acc * self.q as u64 + s.0 as u64)
    }

    /// Vectors with index in `range`, in ascending order.
    pub fn range(&self, range: std::ops::Range<u64>) -> impl Iterator<Item = Vector> + '_ {
        range.map(move |i| self.vector_at(i))
    }

    pub fn iter(&self, include_zero: bool) -> impl Iterator<Item = Vector> + '_ {
        self.range(u64::from(!include_zero)..self.size)
    }
}

/// All vectors of F_q^m in canonical order, optionally skipping zero.
pub fn enumerate_vectors(q: u32, m: usize, include_zero: bool) -> Result<Vec<Vector>> {
    let space = VectorSpace::new(q, m)?;
    Ok(space.iter(include_zero).collect())
}

/// Every vector of F_q^m with exactly `w` nonzero coordinates. Does not touch
/// the rest of the space, so it is usable for large m.
pub fn vectors_of_weight(field: &Field, m: usize, w: usize) -> impl Iterator<Item = Vector> + '_ {
    let q = field.q();
    let positions = if w <= m { combinations(m, w) } else { Vec::new() };
    positions.into_iter().flat_map(move |pos| {
        let count = ((q - 1) as u64).pow(w as u32);
        let pos = pos.clone();
        (0..count).map(move |mut code| {
            let mut v = Vector::zeros(m);
            for &p in pos.iter().rev() {
                v.0[p] = Scalar(1 + (code % (q - 1) as u64) as u32);
                code /= (q - 1) as u64;
            }
            v
        })
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
