//! Shared test helpers: a brute-force minimality oracle and random functions
//! satisfying the hypotheses of each construction.
#![allow(dead_code)]

use minicode_core::code::DefiningSet;
use minicode_core::families::{FunctionSpec, Monomial, TheoremId, Variant};
use minicode_core::linalg::{self, VectorSpace};
use minicode_core::{Field, Scalar, Vector};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn field(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

pub fn table(field: &Field, m: usize, values: Vec<u32>) -> FunctionSpec {
    FunctionSpec::new(field.clone(), m, Variant::Table(values.into_iter().map(Scalar).collect())).unwrap()
}

/// All messages of the code with their codewords.
pub fn all_words(d: &DefiningSet) -> Vec<(Vector, Vector)> {
    VectorSpace::new(d.field().q(), d.k())
        .unwrap()
        .iter(false)
        .map(|y| {
            let c = d.codeword(&y).unwrap();
            (y, c)
        })
        .collect()
}

/// c(y) is minimal iff every nonzero codeword with support inside supp c(y)
/// is a scalar multiple of c(y).
pub fn oracle_word_minimal(d: &DefiningSet, words: &[(Vector, Vector)], c: &Vector) -> bool {
    words.iter().all(|(_, other)| {
        other.is_zero()
            || !linalg::covers(other, c).unwrap()
            || linalg::multiple_of(d.field(), other, c).is_some()
    })
}

pub fn oracle_code_minimal(d: &DefiningSet) -> bool {
    let words = all_words(d);
    words.iter().all(|(_, c)| c.is_zero() || oracle_word_minimal(d, &words, c))
}

/// The tables of both instance sets: every f on F_2^3, then 200 random f on F_3^3.
pub fn criterion_instances() -> Vec<FunctionSpec> {
    use rand::SeedableRng;
    let f2 = Field::prime(2).unwrap();
    let f3 = Field::prime(3).unwrap();
    let mut out: Vec<FunctionSpec> = (0u32..256)
        .map(|bits| table(&f2, 3, (0..8).map(|i| (bits >> i) & 1).collect()))
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        out.push(table(&f3, 3, (0..27).map(|_| rng.gen_range(0..3)).collect()));
    }
    out
}

fn random_scalar(rng: &mut impl Rng, q: u32) -> Scalar {
    Scalar(rng.gen_range(0..q))
}

fn random_nonzero(rng: &mut impl Rng, q: u32) -> Scalar {
    Scalar(rng.gen_range(1..q))
}

/// Table with `rule(x, normalized x)` deciding forced values; `None` means free.
fn table_with(
    rng: &mut impl Rng,
    field: &Field,
    m: usize,
    mut rule: impl FnMut(&mut dyn rand::RngCore, &Vector, usize) -> Option<Scalar>,
) -> FunctionSpec {
    let q = field.q();
    let space = VectorSpace::new(q, m).unwrap();
    // values forced per projective class are drawn once per class
    let mut per_class = std::collections::HashMap::new();
    let values = space
        .iter(true)
        .map(|x| {
            let w = linalg::weight(&x);
            let rep = linalg::normalize(field, &x);
            if let Some(&v) = per_class.get(&rep) {
                return v;
            }
            match rule(rng, &x, w) {
                Some(v) => {
                    per_class.insert(rep, v);
                    v
                }
                None => random_scalar(rng, q),
            }
        })
        .collect();
    FunctionSpec::new(field.clone(), m, Variant::Table(values)).unwrap()
}

/// q > 2: nonzero and constant on scalar multiples for weights 1..2, zero on weight m.
pub fn random_a1(rng: &mut impl Rng, q: u32, m: usize) -> FunctionSpec {
    let f = field(q);
    table_with(rng, &f, m, |rng, _, w| match w {
        0 => None,
        1 | 2 => Some(Scalar(rng.gen_range(1..q))),
        w if w == m => Some(Scalar::ZERO),
        _ => None,
    })
}

/// q = 2: one on weights 1..2, zero on weights >= m-1 (m even) or >= m-2 (m odd).
pub fn random_a2(rng: &mut impl Rng, m: usize) -> FunctionSpec {
    let f = field(2);
    let low = if m % 2 == 0 { m - 1 } else { m - 2 };
    table_with(rng, &f, m, |_, _, w| match w {
        1 | 2 => Some(Scalar::ONE),
        w if w >= low => Some(Scalar::ZERO),
        _ => None,
    })
}

/// Zero on weights 1..2, nonzero and scalar-invariant on weights >= m-1; m >= 4.
pub fn random_b(rng: &mut impl Rng, q: u32, m: usize) -> FunctionSpec {
    let f = field(q);
    table_with(rng, &f, m, |rng, _, w| match w {
        1 | 2 => Some(Scalar::ZERO),
        w if w + 1 >= m => Some(Scalar(rng.gen_range(1..q))),
        _ => None,
    })
}

/// Maiorana-McFarland with phi injective into nonzero vectors on weights <= 1,
/// phi = 0 on weight 2 when q = 2, g a nonzero constant (1 when q = 2).
pub fn random_mm(rng: &mut impl Rng, q: u32, s: usize, t: usize) -> FunctionSpec {
    let f = field(q);
    let s_space = VectorSpace::new(q, s).unwrap();
    let mut targets: Vec<Vector> = VectorSpace::new(q, t).unwrap().iter(false).collect();
    targets.shuffle(rng);
    let mut next = targets.into_iter();
    let phi = s_space
        .iter(true)
        .map(|beta| match linalg::weight(&beta) {
            0 | 1 => next.next().expect("enough targets"),
            2 if q == 2 => Vector::zeros(t),
            _ => Vector((0..t).map(|_| random_scalar(rng, q)).collect()),
        })
        .collect();
    let c = if q == 2 { Scalar::ONE } else { random_nonzero(rng, q) };
    let g = vec![c; s_space.size() as usize];
    FunctionSpec::new(f, s + t, Variant::MaioranaMcFarland { s, t, phi, g }).unwrap()
}

/// Disjoint monomials, at least two, each on at least `min_support`
/// variables; square-free for D2.
pub fn random_monomials(rng: &mut impl Rng, q: u32, m: usize, thm: TheoremId) -> FunctionSpec {
    let min_support = if thm == TheoremId::D1 { 3 } else { 2 };
    assert!(m >= 2 * min_support);
    let mut vars: Vec<usize> = (1..=m).collect();
    vars.shuffle(rng);
    let mut terms = Vec::new();
    let mut rest = &vars[..];
    while rest.len() >= min_support && (terms.len() < 2 || rng.gen_bool(0.5)) {
        let max = if terms.is_empty() { rest.len() - min_support } else { rest.len() };
        let size = rng.gen_range(min_support..=max.max(min_support));
        let (block, tail) = rest.split_at(size);
        let mut mono = Monomial::product(m, block);
        if thm == TheoremId::D1 {
            for &i in block {
                mono.exponents[i - 1] = rng.gen_range(1..=3);
            }
        }
        mono.coeff = random_nonzero(rng, q);
        terms.push(mono);
        rest = tail;
    }
    FunctionSpec::new(field(q), m, Variant::MonomialSum(terms)).unwrap()
}

/// A random instance of `thm` at a desk-checkable size.
pub fn random_instance(rng: &mut impl Rng, thm: TheoremId) -> FunctionSpec {
    match thm {
        TheoremId::A1 => {
            let q = *[3, 4, 5].choose(rng).unwrap();
            let m = if q == 5 { 3 } else { rng.gen_range(3..=4) };
            random_a1(rng, q, m)
        }
        TheoremId::A2 => {
            let m = rng.gen_range(4..=7);
            random_a2(rng, m)
        }
        TheoremId::B => {
            let q = *[2, 3, 4].choose(rng).unwrap();
            let m = if q == 2 { rng.gen_range(4..=6) } else { 4 };
            random_b(rng, q, m)
        }
        TheoremId::C1 => {
            let q = *[3, 4, 5].choose(rng).unwrap();
            let s = if q == 3 { rng.gen_range(2..=3) } else { 2 };
            random_mm(rng, q, s, 2)
        }
        TheoremId::C2 => {
            // phi needs s + 1 distinct nonzero values in F_2^t
            let s = rng.gen_range(2..=4);
            let t = rng.gen_range(if s == 2 { 2 } else { 3 }..=4);
            random_mm(rng, 2, s, t)
        }
        TheoremId::D1 => {
            let q = *[2, 3].choose(rng).unwrap();
            let m = if q == 2 { rng.gen_range(6..=8) } else { 6 };
            random_monomials(rng, q, m, thm)
        }
        TheoremId::D2 => {
            let q = *[2, 3, 4].choose(rng).unwrap();
            let m = if q == 2 { rng.gen_range(4..=7) } else { 4 };
            random_monomials(rng, q, m, thm)
        }
    }
}
