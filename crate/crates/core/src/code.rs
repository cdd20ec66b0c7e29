//! Defining-set codes C(D), the function construction D_f, and exact weight
//! distributions by exhaustive enumeration of messages.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FunctionSpec;
use crate::gf::{Field, Scalar};
use crate::linalg::{self, Matrix, Vector, VectorSpace};

/// Largest message space q^k the weight distribution will enumerate.
pub const WEIGHT_DISTRIBUTION_LIMIT: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Generic,
    /// D_f for a function on F_q^m; k = m + 1.
    FromFunction { m: usize },
}

/// An ordered multiset of vectors in F_q^k. Its order fixes the coordinate
/// order of every codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    field: Field,
    k: usize,
    vectors: Vec<Vector>,
    origin: Origin,
}

impl DefiningSet {
    pub fn new(field: Field, k: usize, vectors: Vec<Vector>) -> Result<DefiningSet> {
        for v in &vectors {
            if v.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: v.len(),
                });
            }
            v.check_in(&field)?;
        }
        Ok(DefiningSet {
            field,
            k,
            vectors,
            origin: Origin::Generic,
        })
    }

    /// D_f = {(f(x), x) : x != 0}, x in canonical order.
    pub fn from_function(f: &FunctionSpec) -> Result<DefiningSet> {
        let m = f.m();
        let values = f.table()?;
        let space = VectorSpace::new(f.field().q(), m)?;
        let vectors = (1..space.size())
            .map(|i| {
                let x = space.vector_at(i);
                let mut d = Vec::with_capacity(m + 1);
                d.push(values[i as usize]);
                d.extend_from_slice(&x);
                Vector(d)
            })
            .collect();
        Ok(DefiningSet {
            field: f.field().clone(),
            k: m + 1,
            vectors,
            origin: Origin::FromFunction { m },
        })
    }

    /// Reads a defining set from the rows of an n x k matrix.
    pub fn from_matrix(field: Field, m: Matrix) -> Result<DefiningSet> {
        let k = m.ncols();
        DefiningSet::new(field, k, m.into_rows())
    }

    /// The defining set whose vectors are the columns of a k x n generator matrix.
    pub fn from_generator(field: Field, g: &Matrix) -> Result<DefiningSet> {
        DefiningSet::new(field, g.nrows(), g.transpose().into_rows())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn rank(&self) -> usize {
        let mut ech = linalg::Echelon::new(&self.field, self.k);
        for v in &self.vectors {
            if ech.rank() == self.k {
                break;
            }
            ech.insert(v);
        }
        ech.rank()
    }

    /// Fails unless rank(D) = k.
    pub fn require_full_rank(&self) -> Result<()> {
        let rank = self.rank();
        if rank == self.k {
            Ok(())
        } else {
            Err(Error::RankDeficient { rank, k: self.k })
        }
    }

    /// The n x k matrix whose rows are the vectors of D.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::new(self.k, self.vectors.clone()).expect("rows have length k")
    }

    /// The k x n generator matrix: row j is the codeword of e_j.
    pub fn generator_matrix(&self) -> Matrix {
        self.to_matrix().transpose()
    }

    /// c(y; D) = (y.d_1, ..., y.d_n).
    pub fn codeword(&self, y: &[Scalar]) -> Result<Vector> {
        if y.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                found: y.len(),
            });
        }
        Ok(self.codeword_unchecked(y))
    }

    pub(crate) fn codeword_unchecked(&self, y: &[Scalar]) -> Vector {
        Vector(
            self.vectors
                .iter()
                .map(|d| linalg::dot_unchecked(&self.field, y, d))
                .collect(),
        )
    }

    /// 0-based position of `d` in D, if present.
    pub fn position(&self, d: &[Scalar]) -> Option<usize> {
        if let Origin::FromFunction { m } = self.origin {
            // D_f is indexed by x; the first coordinate must also match.
            let space = VectorSpace::new(self.field.q(), m).ok()?;
            let idx = space.index_of(&d[1..]);
            if idx == 0 {
                return None;
            }
            let pos = idx as usize - 1;
            return (self.vectors[pos][..] == d[..]).then_some(pos);
        }
        self.vectors.iter().position(|v| v[..] == d[..])
    }
}

/// The D_f construction.
pub fn defining_set(f: &FunctionSpec) -> Result<DefiningSet> {
    DefiningSet::from_function(f)
}

/// Returns ω with f(x) = ω.x for every nonzero x, the condition under which
/// D_f has rank m. The candidate is interpolated from f(e_i) and verified
/// on every nonzero x; f(0) plays no part since D_f skips x = 0.
pub fn linearity_check(f: &FunctionSpec) -> Result<Option<Vector>> {
    let m = f.m();
    let field = f.field();
    let values = f.table()?;
    let space = VectorSpace::new(field.q(), m)?;
    let omega = Vector(
        (1..=m)
            .map(|i| values[space.index_of(&Vector::unit(m, i)) as usize])
            .collect(),
    );
    let linear = (1..space.size()).all(|i| {
        let x = space.vector_at(i);
        values[i as usize] == linalg::dot_unchecked(field, &omega, &x)
    });
    Ok(linear.then_some(omega))
}

/// Counts of codewords by Hamming weight over all q^k messages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    /// Weight to count; only weights that occur are present.
    pub counts: BTreeMap<usize, u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// Minimum nonzero weight.
    pub fn w_min(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Maximum nonzero weight.
    pub fn w_max(&self) -> Option<usize> {
        self.counts.keys().copied().rev().find(|&w| w > 0)
    }

    pub fn params(&self) -> Result<CodeParams> {
        let (Some(w_min), Some(w_max)) = (self.w_min(), self.w_max()) else {
            return Err(Error::EmptyCode);
        };
        // A_0 = q^(k - dim)
        let mut zeros = self.counts.get(&0).copied().unwrap_or(1);
        let mut dim = self.k;
        while zeros > 1 {
            zeros /= self.q as u64;
            dim -= 1;
        }
        Ok(CodeParams {
            q: self.q,
            n: self.n,
            k: dim,
            d: w_min,
            w_min,
            w_max,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("enumerator serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<WeightEnumerator> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `1 + c1 z^w1 + c2 z^w2 + ...`; the leading term is the count of weight 0.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = self.counts.get(&0).copied().unwrap_or(0);
        write!(f, "{zero}")?;
        for (w, c) in self.counts.range(1..) {
            write!(f, " + {c} z^{w}")?;
        }
        Ok(())
    }
}

/// Polynomial terms as (weight, count), accepting both `1 + 2 z^32` and `1+2z^32`.
pub fn parse_enumerator_terms(text: &str) -> Result<BTreeMap<usize, u64>> {
    let mut counts = BTreeMap::new();
    for term in text.split('+') {
        let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::parse(1, format!("bad enumerator term `{term}`"));
        let (coeff, weight) = match term.split_once('z') {
            None => (term.as_str(), 0),
            Some((c, w)) => {
                let w = match w.strip_prefix('^') {
                    Some(e) => e.parse().map_err(|_| bad())?,
                    None if w.is_empty() => 1,
                    None => return Err(bad()),
                };
                (c.trim_end_matches('*'), w)
            }
        };
        let coeff: u64 = if coeff.is_empty() {
            1
        } else {
            coeff.parse().map_err(|_| bad())?
        };
        *counts.entry(weight).or_insert(0) += coeff;
    }
    Ok(counts)
}

impl FromStr for WeightEnumerator {
    type Err = Error;

    /// Parses only the polynomial; q, n and k are left at zero.
    fn from_str(s: &str) -> Result<Self> {
        Ok(WeightEnumerator {
            q: 0,
            n: 0,
            k: 0,
            counts: parse_enumerator_terms(s)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u32,
    pub n: usize,
    /// Dimension of the code.
    pub k: usize,
    pub d: usize,
    pub w_min: usize,
    pub w_max: usize,
}

impl CodeParams {
    /// w_min / w_max > (q-1)/q, compared as integers.
    pub fn ab_ratio_holds(&self) -> bool {
        self.q as u128 * self.w_min as u128 > (self.q as u128 - 1) * self.w_max as u128
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}] w_max={}",
            self.n, self.k, self.d, self.w_max
        )
    }
}

/// Exact weight distribution of C(D).
///
/// Works on the generator rows G_1..G_k. Messages are enumerated by a prefix
/// tree; at each leaf the partial sum p of the first k-1 rows is fixed and
/// all q choices of the last coordinate a are counted in one O(n) pass:
/// coordinate i of p + a G_k vanishes for every a when both entries are
/// zero, for no a when only r_i = 0, and for exactly a = -p_i / r_i
/// otherwise. The top levels of the tree are sharded across threads; shard
/// results are summed, so the counts do not depend on scheduling.
pub fn weight_distribution(d: &DefiningSet) -> Result<WeightEnumerator> {
    let q = d.field.q();
    let k = d.k;
    let n = d.n();
    if n == 0 || k == 0 {
        return Err(Error::EmptyCode);
    }
    let size = (q as u128).pow(k as u32);
    if size > WEIGHT_DISTRIBUTION_LIMIT as u128 {
        return Err(Error::SizeGuard {
            what: "q^k messages",
            size,
            limit: WEIGHT_DISTRIBUTION_LIMIT as u128,
        });
    }
    let kernel = Kernel::new(d);
    // Shard over enough top-level prefixes to keep every worker busy.
    let mut depth = 0;
    while depth < k - 1 && (q as u64).pow(depth as u32) < 512 {
        depth += 1;
    }
    let shards = (q as u64).pow(depth as u32);
    let hist = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut hist = vec![0u64; n + 1];
            let mut prefix = vec![Scalar::ZERO; n];
            let mut rest = s;
            for j in (0..depth).rev() {
                let a = Scalar((rest % q as u64) as u32);
                rest /= q as u64;
                linalg::axpy(&d.field, &mut prefix, a, &kernel.rows[j]);
            }
            kernel.descend(depth, &prefix, &mut hist);
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let counts = hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    Ok(WeightEnumerator { q, n, k, counts })
}

struct Kernel<'a> {
    field: &'a Field,
    rows: Vec<Vec<Scalar>>,
    /// -1 / r_i for the last row, or None where r_i = 0.
    neg_inv_last: Vec<Option<Scalar>>,
    nonzero_last: usize,
}

impl<'a> Kernel<'a> {
    fn new(d: &'a DefiningSet) -> Self {
        let field = &d.field;
        let rows: Vec<Vec<Scalar>> = (0..d.k)
            .map(|j| d.vectors.iter().map(|v| v[j]).collect())
            .collect();
        let last = &rows[d.k - 1];
        let neg_inv_last: Vec<Option<Scalar>> = last
            .iter()
            .map(|&r| field.inv(r).ok().map(|inv| field.neg(inv)))
            .collect();
        let nonzero_last = neg_inv_last.iter().filter(|x| x.is_some()).count();
        Kernel {
            field,
            rows,
            neg_inv_last,
            nonzero_last,
        }
    }

    /// `prefix` holds the sum over rows 0..level; recurse over rows level..k.
    fn descend(&self, level: usize, prefix: &[Scalar], hist: &mut [u64]) {
        let k = self.rows.len();
        if level == k - 1 {
            self.leaf(prefix, hist);
            return;
        }
        let mut next = prefix.to_vec();
        for a in self.field.elements() {
            next.copy_from_slice(prefix);
            linalg::axpy(self.field, &mut next, a, &self.rows[level]);
            self.descend(level + 1, &next, hist);
        }
    }

    fn leaf(&self, prefix: &[Scalar], hist: &mut [u64]) {
        let q = self.field.order();
        let mut base = 0usize;
        let mut zeroed_at = vec![0usize; q];
        for (p, neg_inv) in prefix.iter().zip(&self.neg_inv_last) {
            match neg_inv {
                None => base += usize::from(!p.is_zero()),
                Some(ni) => zeroed_at[self.field.mul(*p, *ni).0 as usize] += 1,
            }
        }
        for z in zeroed_at {
            hist[base + self.nonzero_last - z] += 1;
        }
    }
}

/// Parameters of C(D) from its weight distribution.
pub fn params(d: &DefiningSet) -> Result<CodeParams> {
    weight_distribution(d)?.params()
}
