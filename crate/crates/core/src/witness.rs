//! Explicit bases built the way the minimality constructions build them:
//! the building blocks (full weight, unit inner product, low-weight
//! hyperplane, solutions of a linear system) and, per construction and per
//! codeword c(u, v), the m vectors alpha whose lifts (f(alpha), alpha) span
//! H((u, v)) inside D_f.
//!
//! Every output is checked before it is returned. A failed check is an
//! [`Error::ConstructionBug`], never silently patched.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{DefiningSet, Origin};
use crate::error::{Error, Result};
use crate::families::{validate_hypotheses, FunctionSpec, TheoremId, Validation, Variant};
use crate::gf::{Field, Scalar};
use crate::linalg::{self, Echelon, Matrix, Vector, VectorSpace};
use crate::minimality::{Certificate, CertificateClass, ProjectiveClasses};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Basis of F_q^m with weights m (q >= 3), >= m-1 (q = 2, m even) or >= m-2 (q = 2, m odd).
    FullWeight,
    /// Basis of F_q^m with weights in {1, 2} and omega.beta = 1.
    UnitInner { omega: Vector },
    /// Basis of H(v) with weights in {1, 2}.
    Hyperplane { v: Vector },
    /// The alphas for c(u, v) under a construction.
    TheoremCase {
        theorem: TheoremId,
        u: Scalar,
        v: Vector,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessBasis {
    pub vectors: Vec<Vector>,
    pub kind: WitnessKind,
    /// Set when a construction produced alpha = 0, which has no lift in D_f,
    /// and it was swapped for the first nonzero alpha of H(v) that keeps the
    /// lifts independent.
    pub zero_vector_replaced: bool,
}

impl WitnessBasis {
    fn new(vectors: Vec<Vector>, kind: WitnessKind) -> Self {
        WitnessBasis {
            vectors,
            kind,
            zero_vector_replaced: false,
        }
    }
}

fn bug(msg: impl Into<String>) -> Error {
    Error::ConstructionBug(msg.into())
}

fn first_nonzero(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|s| !s.is_zero())
}

fn require_rank(field: &Field, dim: usize, vectors: &[Vector], want: usize, what: &str) -> Result<()> {
    let r = linalg::rank_of(field, dim, vectors)?;
    if r != want {
        return Err(bug(format!("{what}: rank {r}, expected {want}")));
    }
    Ok(())
}

pub fn full_weight_basis(field: &Field, m: usize) -> Result<WitnessBasis> {
    let q = field.q();
    if m == 0 || (q == 2 && m < 2) {
        return Err(Error::Unsupported(format!(
            "full-weight basis needs q >= 3 or m >= 2 (q = {q}, m = {m})"
        )));
    }
    let minus_one = field.neg(Scalar::ONE);
    let with_diagonal = |diag: &dyn Fn(usize) -> Scalar| -> Vec<Vector> {
        (0..m)
            .map(|i| Vector((0..m).map(|j| if i == j { diag(i) } else { minus_one }).collect()))
            .collect()
    };
    let (rows, min_weight) = if q >= 3 {
        let m_image = field.from_int(m as i64);
        let b = field
            .elements()
            .find(|&b| b != Scalar::ZERO && b != Scalar::ONE && b != m_image);
        let rows = match b {
            // bE - A
            Some(b) => {
                let diag = field.sub(b, Scalar::ONE);
                with_diagonal(&|_| diag)
            }
            // q = 3, m = 2 mod 3: 2E - A - 2 e1^T e1
            None => with_diagonal(&|i| if i == 0 { minus_one } else { Scalar::ONE }),
        };
        (rows, m)
    } else if m % 2 == 0 {
        (with_diagonal(&|_| Scalar::ZERO), m - 1)
    } else {
        // E - B with B = 1^T (1 ... 1 0)
        let rows = (0..m)
            .map(|i| {
                Vector(
                    (0..m)
                        .map(|j| {
                            let one = if j + 1 < m { i != j } else { i == j };
                            if one { Scalar::ONE } else { Scalar::ZERO }
                        })
                        .collect(),
                )
            })
            .collect();
        (rows, m - 2)
    };
    require_rank(field, m, &rows, m, "full-weight basis")?;
    if let Some(r) = rows.iter().find(|r| linalg::weight(r) < min_weight) {
        return Err(bug(format!("full-weight basis row {r} has weight below {min_weight}")));
    }
    Ok(WitnessBasis::new(rows, WitnessKind::FullWeight))
}

/// beta_i0 = w_i0^-1 e_i0 and beta_i = e_i + w_i0^-1 (1 - w_i) e_i0, with
/// i0 the first nonzero coordinate of omega.
pub fn unit_inner_basis(field: &Field, omega: &Vector) -> Result<WitnessBasis> {
    omega.check_in(field)?;
    let i0 = first_nonzero(omega).ok_or(Error::ZeroVector("omega"))?;
    let m = omega.len();
    let inv = field.inv(omega[i0])?;
    let vectors: Vec<Vector> = (0..m)
        .map(|i| {
            let mut beta = Vector::zeros(m);
            if i == i0 {
                beta.0[i0] = inv;
            } else {
                beta.0[i] = Scalar::ONE;
                beta.0[i0] = field.mul(inv, field.sub(Scalar::ONE, omega[i]));
            }
            beta
        })
        .collect();
    for beta in &vectors {
        let w = linalg::weight(beta);
        if !(1..=2).contains(&w) || linalg::dot_unchecked(field, omega, beta) != Scalar::ONE {
            return Err(bug(format!("unit-inner vector {beta} fails for omega = {omega}")));
        }
    }
    require_rank(field, m, &vectors, m, "unit-inner basis")?;
    Ok(WitnessBasis::new(vectors, WitnessKind::UnitInner { omega: omega.clone() }))
}

/// The vectors e_i - v_i0^-1 v_i e_i0 for i != i0 in ascending order, i0
/// the first nonzero coordinate of v.
pub fn hyperplane_low_weight_basis(field: &Field, v: &Vector) -> Result<WitnessBasis> {
    v.check_in(field)?;
    let i0 = first_nonzero(v).ok_or(Error::ZeroVector("v"))?;
    let vectors = hyperplane_vectors(field, v, i0);
    for beta in &vectors {
        let w = linalg::weight(beta);
        if !(1..=2).contains(&w) || !linalg::dot_unchecked(field, v, beta).is_zero() {
            return Err(bug(format!("hyperplane vector {beta} fails for v = {v}")));
        }
    }
    require_rank(field, v.len(), &vectors, v.len() - 1, "hyperplane basis")?;
    Ok(WitnessBasis::new(vectors, WitnessKind::Hyperplane { v: v.clone() }))
}

/// e_i - v_i0^-1 v_i e_i0 for i != i0.
fn hyperplane_vectors(field: &Field, v: &[Scalar], i0: usize) -> Vec<Vector> {
    let inv = field.inv(v[i0]).expect("v_i0 is nonzero");
    (0..v.len())
        .filter(|&i| i != i0)
        .map(|i| hyperplane_vector(field, v, i0, inv, i))
        .collect()
}

fn hyperplane_vector(field: &Field, v: &[Scalar], i0: usize, inv: Scalar, i: usize) -> Vector {
    let mut a = Vector::zeros(v.len());
    a.0[i] = Scalar::ONE;
    a.0[i0] = field.neg(field.mul(inv, v[i]));
    a
}

/// The solution of A x = b whose free variables (in reduced row echelon
/// form) are all zero.
pub fn particular_solution(field: &Field, a: &Matrix, b: &Vector) -> Result<Vector> {
    if b.len() != a.nrows() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: b.len(),
        });
    }
    a.check_in(field)?;
    b.check_in(field)?;
    let n = a.ncols();
    let augmented = Matrix::new(
        n + 1,
        a.rows().iter().zip(b.iter()).map(|(r, &x)| r.concat(&[x])).collect(),
    )?;
    let (rows, pivots) = linalg::rref(field, &augmented);
    if pivots.last() == Some(&n) {
        return Err(Error::InconsistentSystem {
            rank_a: pivots.len() - 1,
            rank_ab: pivots.len(),
        });
    }
    let mut x0 = Vector::zeros(n);
    for (row, &pc) in rows.iter().zip(&pivots) {
        x0.0[pc] = row[n];
    }
    Ok(x0)
}

/// For b = 0 a kernel basis (n - rank(A) vectors). Otherwise n - rank(A) + 1
/// independent solutions x0, x0 + k_1, ..., x0 + k_{n-r}, with x0 the
/// [`particular_solution`] and k_j the kernel basis. x0 never lies in the
/// span of the k_j since A x0 = b != 0.
pub fn linear_system_solutions(field: &Field, a: &Matrix, b: &Vector) -> Result<Vec<Vector>> {
    let x0 = particular_solution(field, a, b)?;
    let kernel = linalg::kernel(field, a);
    let n = a.ncols();
    if b.is_zero() {
        return Ok(kernel);
    }
    let mut out = Vec::with_capacity(kernel.len() + 1);
    out.push(x0.clone());
    for k in &kernel {
        out.push(linalg::add(field, &x0, k)?);
    }
    require_rank(field, n, &out, out.len(), "system solutions")?;
    Ok(out)
}

/// Solutions of the single equation a.x = rhs.
fn solve_one(field: &Field, a: &Vector, rhs: Scalar) -> Result<Vec<Vector>> {
    linear_system_solutions(field, &Matrix::new(a.len(), vec![a.clone()])?, &Vector(vec![rhs]))
}

fn particular_one(field: &Field, a: &Vector, rhs: Scalar) -> Result<Vector> {
    particular_solution(field, &Matrix::new(a.len(), vec![a.clone()])?, &Vector(vec![rhs]))
}

fn particular_two(field: &Field, a1: &Vector, a2: &Vector, r1: Scalar, r2: Scalar) -> Result<Vector> {
    particular_solution(
        field,
        &Matrix::new(a1.len(), vec![a1.clone(), a2.clone()])?,
        &Vector(vec![r1, r2]),
    )
}

/// Pieces of a Maiorana-McFarland function needed by the case constructions.
#[derive(Clone, Debug)]
struct MmParts {
    s: usize,
    t: usize,
    phi: Vec<Vector>,
    c: Scalar,
    space: VectorSpace,
}

impl MmParts {
    fn phi(&self, beta: &[Scalar]) -> &Vector {
        &self.phi[self.space.index_of(beta) as usize]
    }
}

#[derive(Clone, Debug)]
enum Shape {
    Weights,
    Mm(MmParts),
    /// Coefficient and 0-based support of each monomial.
    Monomials(Vec<(Scalar, Vec<usize>)>),
}

/// A function together with a construction whose hypotheses it satisfies.
/// Builds the alphas for any c(u, v).
#[derive(Clone, Debug)]
pub struct TheoremWitness {
    theorem: TheoremId,
    f: FunctionSpec,
    shape: Shape,
}

impl TheoremWitness {
    /// Checks the hypotheses of `theorem` for `f`.
    pub fn new(theorem: TheoremId, f: &FunctionSpec) -> Result<TheoremWitness> {
        if let Validation::Fail { condition, .. } = validate_hypotheses(f, theorem)? {
            return Err(Error::HypothesisFailed {
                theorem: theorem.name(),
                condition,
            });
        }
        let shape = match (theorem, f.variant()) {
            (TheoremId::C1 | TheoremId::C2, Variant::MaioranaMcFarland { s, t, phi, g }) => {
                Shape::Mm(MmParts {
                    s: *s,
                    t: *t,
                    phi: phi.clone(),
                    c: g[0],
                    space: VectorSpace::new(f.field().q(), *s)?,
                })
            }
            (TheoremId::D1 | TheoremId::D2, Variant::MonomialSum(terms)) => Shape::Monomials(
                terms
                    .iter()
                    .map(|t| (t.coeff, t.support().iter().map(|i| i - 1).collect()))
                    .collect(),
            ),
            _ => Shape::Weights,
        };
        Ok(TheoremWitness {
            theorem,
            f: f.clone(),
            shape,
        })
    }

    pub fn theorem(&self) -> TheoremId {
        self.theorem
    }

    pub fn function(&self) -> &FunctionSpec {
        &self.f
    }

    /// The alphas for c(u, v), (u, v) != 0.
    pub fn witness(&self, u: Scalar, v: &Vector) -> Result<WitnessBasis> {
        let field = self.f.field();
        let m = self.f.m();
        if v.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: v.len(),
            });
        }
        field.scalar(u.0)?;
        v.check_in(field)?;
        if u.is_zero() && v.is_zero() {
            return Err(Error::ZeroVector("(u, v)"));
        }
        let omega = if u.is_zero() || v.is_zero() {
            None
        } else {
            let inv = field.inv(u)?;
            Some(linalg::scale(field, field.neg(inv), v))
        };
        let vectors = match (self.theorem, &self.shape) {
            (TheoremId::A1, _) => self.a1(u, v, omega.as_ref())?,
            (TheoremId::A2, _) => self.a2(u, v, omega.as_ref())?,
            (TheoremId::B, _) => self.b(u, v, omega.as_ref())?,
            (TheoremId::C1 | TheoremId::C2, Shape::Mm(mm)) => self.mm(mm, u, v, omega.as_ref())?,
            (TheoremId::D1 | TheoremId::D2, Shape::Monomials(terms)) => {
                self.monomials(terms, u, v, omega.as_ref())?
            }
            _ => unreachable!("shape matches theorem after validation"),
        };
        let mut out = WitnessBasis::new(
            vectors,
            WitnessKind::TheoremCase {
                theorem: self.theorem,
                u,
                v: v.clone(),
            },
        );
        if u.is_zero() {
            self.replace_zero(&mut out, v)?;
        }
        self.check(&out, u, v)?;
        Ok(out)
    }

    fn eval(&self, x: &[Scalar]) -> Scalar {
        self.f.eval_unchecked(x)
    }

    fn lift(&self, x: &[Scalar]) -> Vector {
        Vector(std::iter::once(self.eval(x)).chain(x.iter().copied()).collect())
    }

    /// Swaps a zero alpha (only the MM hyperplane case produces one) for the
    /// first nonzero point of H(v) whose lift is independent of the others.
    fn replace_zero(&self, out: &mut WitnessBasis, v: &Vector) -> Result<()> {
        let Some(slot) = out.vectors.iter().position(Vector::is_zero) else {
            return Ok(());
        };
        let field = self.f.field();
        let m = self.f.m();
        let mut ech = Echelon::new(field, m + 1);
        for (i, a) in out.vectors.iter().enumerate() {
            if i != slot {
                ech.insert(&self.lift(a));
            }
        }
        let space = VectorSpace::new(field.q(), m)?;
        let replacement = space
            .iter(false)
            .find(|x| {
                linalg::dot_unchecked(field, v, x).is_zero() && !ech.contains(&self.lift(x))
            })
            .ok_or_else(|| bug(format!("no replacement for alpha = 0 in H({v})")))?;
        out.vectors[slot] = replacement;
        out.zero_vector_replaced = true;
        Ok(())
    }

    /// m nonzero alphas with u f(alpha) + v.alpha = 0 and independent lifts.
    fn check(&self, out: &WitnessBasis, u: Scalar, v: &Vector) -> Result<()> {
        let field = self.f.field();
        let m = self.f.m();
        let tag = || format!("{} at (u, v) = ({u}, {v})", self.theorem);
        if out.vectors.len() != m {
            return Err(bug(format!("{}: {} alphas, expected {m}", tag(), out.vectors.len())));
        }
        let mut ech = Echelon::new(field, m + 1);
        for a in &out.vectors {
            if a.len() != m || a.is_zero() {
                return Err(bug(format!("{}: alpha {a} is not a nonzero vector of length {m}", tag())));
            }
            let value = field.add(field.mul(u, self.eval(a)), linalg::dot_unchecked(field, v, a));
            if !value.is_zero() {
                return Err(bug(format!("{}: alpha {a} is not in H((u, v))", tag())));
            }
            if !ech.insert(&self.lift(a)) {
                return Err(bug(format!("{}: lift of alpha {a} is dependent on the others", tag())));
            }
        }
        Ok(())
    }

    fn a1(&self, u: Scalar, v: &Vector, omega: Option<&Vector>) -> Result<Vec<Vector>> {
        let field = self.f.field();
        if v.is_zero() {
            return Ok(full_weight_basis(field, self.f.m())?.vectors);
        }
        if let Some(omega) = omega {
            let betas = unit_inner_basis(field, omega)?.vectors;
            return Ok(betas
                .iter()
                .map(|beta| linalg::scale(field, self.eval(beta), beta))
                .collect());
        }
        debug_assert!(u.is_zero());
        let mut alphas = hyperplane_low_weight_basis(field, v)?.vectors;
        let a = field
            .elements()
            .find(|&a| a != Scalar::ZERO && a != Scalar::ONE)
            .expect("q > 2");
        alphas.push(linalg::scale(field, a, &alphas[0]));
        Ok(alphas)
    }

    fn a2(&self, u: Scalar, v: &Vector, omega: Option<&Vector>) -> Result<Vec<Vector>> {
        let field = self.f.field();
        let m = self.f.m();
        if v.is_zero() {
            return Ok(full_weight_basis(field, m)?.vectors);
        }
        if let Some(omega) = omega {
            return Ok(unit_inner_basis(field, omega)?.vectors);
        }
        debug_assert!(u.is_zero());
        let i0 = first_nonzero(v).expect("v != 0");
        let inv = field.inv(v[i0])?;
        let mut alphas: Vec<Vector> = (0..m).map(|i| hyperplane_vector(field, v, i0, inv, i)).collect();
        let i1 = if m % 2 == 0 { None } else { (0..m).find(|&i| i != i0) };
        let mut special = Vector::zeros(m);
        for (i, a) in alphas.iter().enumerate() {
            if i != i0 && Some(i) != i1 {
                linalg::axpy(field, &mut special, Scalar::ONE, a);
            }
        }
        alphas[i0] = special;
        Ok(alphas)
    }

    fn b(&self, u: Scalar, v: &Vector, omega: Option<&Vector>) -> Result<Vec<Vector>> {
        let field = self.f.field();
        let m = self.f.m();
        if v.is_zero() {
            return Ok((1..=m).map(|i| Vector::unit(m, i)).collect());
        }
        let w = omega.unwrap_or(v);
        let i0 = first_nonzero(w).expect("nonzero");
        let inv = field.inv(w[i0])?;
        let mut alphas: Vec<Vector> = (0..m).map(|i| hyperplane_vector(field, w, i0, inv, i)).collect();
        let mut sum = Vector::zeros(m);
        for (i, a) in alphas.iter().enumerate() {
            if i != i0 {
                linalg::axpy(field, &mut sum, Scalar::ONE, a);
            }
        }
        alphas[i0] = if omega.is_some() {
            sum.0[i0] = field.add(sum[i0], inv);
            linalg::scale(field, self.eval(&sum), &sum)
        } else {
            debug_assert!(u.is_zero());
            sum
        };
        Ok(alphas)
    }

    fn monomials(
        &self,
        terms: &[(Scalar, Vec<usize>)],
        u: Scalar,
        v: &Vector,
        omega: Option<&Vector>,
    ) -> Result<Vec<Vector>> {
        let field = self.f.field();
        let m = self.f.m();
        if v.is_zero() {
            return Ok((1..=m).map(|i| Vector::unit(m, i)).collect());
        }
        let w = omega.unwrap_or(v);
        let i0 = first_nonzero(w).expect("nonzero");
        let inv = field.inv(w[i0])?;
        let mut alphas: Vec<Vector> = (0..m).map(|i| hyperplane_vector(field, w, i0, inv, i)).collect();
        let j1 = terms
            .iter()
            .position(|(_, s)| !s.contains(&i0))
            .ok_or_else(|| bug(format!("every monomial contains x_{}", i0 + 1)))?;
        let (a_j1, s_j1) = &terms[j1];
        let mut special = Vector::zeros(m);
        for &i in s_j1 {
            linalg::axpy(field, &mut special, Scalar::ONE, &alphas[i]);
        }
        if omega.is_none() {
            debug_assert!(u.is_zero());
            alphas[i0] = special;
            return Ok(alphas);
        }
        special.0[i0] = field.add(special[i0], field.mul(*a_j1, inv));
        alphas[i0] = special;
        if self.theorem == TheoremId::D1 {
            return Ok(alphas);
        }
        // Square-free with supports of size 2 allowed: one alpha_i1 may
        // have f(alpha_i1) != 0 = omega.alpha_i1 and is replaced by beta.
        let Some(i1) = (0..m).find(|&i| i != i0 && !self.eval(&alphas[i]).is_zero()) else {
            return Ok(alphas);
        };
        let (a_j0, _) = terms
            .iter()
            .find(|(_, s)| s.contains(&i0) && s.contains(&i1))
            .ok_or_else(|| bug(format!("no monomial on x_{} x_{}", i0 + 1, i1 + 1)))?;
        let mut beta = alphas[i1].clone();
        match s_j1.iter().copied().find(|&i| !w[i].is_zero()) {
            // (a)
            Some(i2) => {
                let k = field.neg(field.div(w[i1], w[i2])?);
                linalg::axpy(field, &mut beta, k, &alphas[i2]);
            }
            // (b)
            None => {
                let i2 = s_j1[0];
                for &i in s_j1 {
                    let k = if i == i2 {
                        field.mul(field.div(*a_j0, *a_j1)?, field.mul(w[i1], inv))
                    } else {
                        Scalar::ONE
                    };
                    linalg::axpy(field, &mut beta, k, &alphas[i]);
                }
            }
        }
        alphas[i1] = beta;
        Ok(alphas)
    }

    fn mm(&self, mm: &MmParts, u: Scalar, v: &Vector, omega: Option<&Vector>) -> Result<Vec<Vector>> {
        let field = self.f.field();
        let (s, t, c) = (mm.s, mm.t, mm.c);
        let neg_c = field.neg(c);
        let e_s = |i: usize| Vector::unit(s, i);
        let e_t = |i: usize| Vector::unit(t, i);
        let join = |beta: &Vector, gamma: &Vector| beta.concat(gamma);
        let zero_s = Vector::zeros(s);
        let zero_t = Vector::zeros(t);
        let diff = |beta: &Vector, w2: &Vector| linalg::sub(field, mm.phi(beta), w2);

        if v.is_zero() {
            // zeros of f: (0, gamma_k) with phi(0).gamma = -c, then (e_i, gamma_i0)
            let mut alphas: Vec<Vector> = solve_one(field, mm.phi(&zero_s), neg_c)?
                .iter()
                .map(|g| join(&zero_s, g))
                .collect();
            for i in 1..=s {
                let g = particular_one(field, mm.phi(&e_s(i)), neg_c)?;
                alphas.push(join(&e_s(i), &g));
            }
            return Ok(alphas);
        }

        let Some(omega) = omega else {
            debug_assert!(u.is_zero());
            let (v1, v2) = (Vector(v[..s].to_vec()), Vector(v[s..].to_vec()));
            let mut alphas = Vec::with_capacity(s + t);
            if !v2.is_zero() {
                for g in solve_one(field, &v2, Scalar::ZERO)? {
                    alphas.push(join(&zero_s, &g));
                }
                for i in 1..=s {
                    let g = particular_one(field, &v2, field.neg(v1[i - 1]))?;
                    alphas.push(join(&e_s(i), &g));
                }
            } else {
                for b in solve_one(field, &v1, Scalar::ZERO)? {
                    alphas.push(join(&b, &zero_t));
                }
                for j in 1..=t {
                    alphas.push(join(&zero_s, &e_t(j)));
                }
            }
            // stands for the lift (c, 0) of x = 0; see replace_zero
            alphas.push(Vector::zeros(s + t));
            return Ok(alphas);
        };

        let (w1, w2) = (Vector(omega[..s].to_vec()), Vector(omega[s..].to_vec()));
        let phi0_is_w2 = mm.phi(&zero_s) == &w2;
        let mut alphas = Vec::with_capacity(s + t);

        if !w1.is_zero() {
            let betas = solve_one(field, &w1, c)?;
            alphas.extend(betas.iter().map(|b| join(b, &zero_t)));
            if self.theorem == TheoremId::C1 {
                let a = field
                    .elements()
                    .find(|&a| {
                        let ae1 = linalg::scale(field, a, &e_s(1));
                        mm.phi(&ae1) != &w2 && field.mul(a, w1[0]) != c
                    })
                    .ok_or_else(|| bug(format!("no a with phi(a e1) != omega2 and a omega1_1 != c at omega = {omega}")))?;
                let ae1 = linalg::scale(field, a, &e_s(1));
                let rhs = field.sub(field.mul(a, w1[0]), c);
                for g in solve_one(field, &diff(&ae1, &w2)?, rhs)? {
                    alphas.push(join(&ae1, &g));
                }
            } else if !phi0_is_w2 {
                // (1)
                for g in solve_one(field, &diff(&zero_s, &w2)?, neg_c)? {
                    alphas.push(join(&zero_s, &g));
                }
            } else if field.sub(w1[0], c) != Scalar::ZERO {
                // (2)
                for g in solve_one(field, &diff(&e_s(1), &w2)?, field.sub(w1[0], c))? {
                    alphas.push(join(&e_s(1), &g));
                }
            } else {
                // (3)
                let d1 = diff(&e_s(1), &w2)?;
                for g in solve_one(field, &d1, Scalar::ZERO)? {
                    alphas.push(join(&e_s(1), &g));
                }
                let d2 = diff(&e_s(2), &w2)?;
                let g = particular_two(field, &d1, &d2, Scalar::ONE, field.sub(w1[1], c))?;
                alphas.push(join(&e_s(2), &g));
            }
            return Ok(alphas);
        }

        if !phi0_is_w2 {
            for g in solve_one(field, &diff(&zero_s, &w2)?, neg_c)? {
                alphas.push(join(&zero_s, &g));
            }
            if self.theorem == TheoremId::C1 {
                for i in 1..=s {
                    let a = field
                        .nonzero_elements()
                        .find(|&a| mm.phi(&linalg::scale(field, a, &e_s(i))) != &w2)
                        .ok_or_else(|| bug(format!("phi(a e_{i}) = omega2 for every a")))?;
                    let ae = linalg::scale(field, a, &e_s(i));
                    let g = particular_one(field, &diff(&ae, &w2)?, neg_c)?;
                    alphas.push(join(&ae, &g));
                }
            } else {
                let i0 = (1..=s)
                    .find(|&i| mm.phi(&e_s(i)) != &w2)
                    .ok_or_else(|| bug("phi(e_i) = omega2 for every i"))?;
                for i in 1..=s {
                    let beta = if i == i0 {
                        e_s(i0)
                    } else {
                        linalg::add(field, &e_s(i0), &e_s(i))?
                    };
                    let g = particular_one(field, &diff(&beta, &w2)?, neg_c)?;
                    alphas.push(join(&beta, &g));
                }
            }
            return Ok(alphas);
        }

        // omega1 = 0 and phi(0) = omega2
        let d1 = diff(&e_s(1), &w2)?;
        for g in solve_one(field, &d1, neg_c)? {
            alphas.push(join(&e_s(1), &g));
        }
        let mut gammas = Vec::with_capacity(s);
        for i in 2..=s {
            let g = particular_one(field, &diff(&e_s(i), &w2)?, neg_c)?;
            alphas.push(join(&e_s(i), &g));
            gammas.push(g);
        }
        let off_line = if self.theorem == TheoremId::C1 {
            field.nonzero_elements().find_map(|a| {
                let ae1 = linalg::scale(field, a, &e_s(1));
                let da = diff(&ae1, &w2).ok()?;
                linalg::multiple_of(field, &da, &d1).is_none().then_some((a, ae1, da))
            })
        } else {
            None
        };
        let last = match off_line {
            Some((a, ae1, da)) => {
                let forbidden = field.neg(field.mul(a, c));
                let g = field
                    .elements()
                    .filter(|&r| r != forbidden)
                    .find_map(|r| particular_two(field, &da, &d1, neg_c, r).ok())
                    .ok_or_else(|| bug(format!("no gamma0 for a = {a}")))?;
                join(&ae1, &g)
            }
            None => {
                let d2 = diff(&e_s(2), &w2)?;
                let eta = particular_two(field, &d2, &d1, Scalar::ZERO, Scalar::ONE)?;
                join(&e_s(2), &linalg::add(field, &gammas[0], &eta)?)
            }
        };
        alphas.push(last);
        Ok(alphas)
    }

    /// Witnesses for every projective class of F_q^(m+1).
    pub fn certificate(&self) -> Result<WitnessCertificate> {
        let field = self.f.field();
        let m = self.f.m();
        let classes = ProjectiveClasses::new(field.q(), m + 1)?;
        let entries = (0..classes.count())
            .into_par_iter()
            .map(|i| {
                let y = classes.get(i);
                let basis = self.witness(y[0], &Vector(y[1..].to_vec()))?;
                Ok(WitnessClass {
                    representative: y,
                    alphas: basis.vectors,
                    zero_vector_replaced: basis.zero_vector_replaced,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WitnessCertificate {
            q: field.q(),
            m,
            theorem: self.theorem.name().to_string(),
            class_count: classes.count(),
            classes: entries,
        })
    }
}

/// Builds the alphas for c(u, v) after checking the hypotheses of `theorem`.
pub fn theorem_witness(theorem: TheoremId, f: &FunctionSpec, u: Scalar, v: &Vector) -> Result<WitnessBasis> {
    TheoremWitness::new(theorem, f)?.witness(u, v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessClass {
    pub representative: Vector,
    pub alphas: Vec<Vector>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub zero_vector_replaced: bool,
}

/// Per projective class (u, v) of C_f, the alphas by value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub q: u32,
    pub m: usize,
    pub theorem: String,
    pub class_count: u64,
    pub classes: Vec<WitnessClass>,
}

impl WitnessCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<WitnessCertificate> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }

    /// The same certificate with each alpha replaced by the 1-based position
    /// of its lift in D_f, which is the canonical index of alpha.
    pub fn to_index_certificate(&self, d: &DefiningSet) -> Result<Certificate> {
        let field = d.field();
        if d.origin() != (Origin::FromFunction { m: self.m }) || field.q() != self.q {
            return Err(Error::MalformedCertificate(format!(
                "certificate is for D_f over F_{}^{}, the code is not",
                self.q, self.m
            )));
        }
        let space = VectorSpace::new(self.q, self.m)?;
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let members = c
                    .alphas
                    .iter()
                    .map(|a| {
                        if a.len() != self.m || a.check_in(field).is_err() || a.is_zero() {
                            return Err(Error::MalformedCertificate(format!(
                                "alpha {a} is not a nonzero vector of F_{}^{}",
                                self.q, self.m
                            )));
                        }
                        Ok(space.index_of(a) as usize)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(CertificateClass {
                    representative: c.representative.clone(),
                    members,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            q: self.q,
            n: d.n(),
            k: d.k(),
            class_count: self.class_count,
            classes,
        })
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::FullWeight => write!(f, "full_weight"),
            WitnessKind::UnitInner { omega } => write!(f, "unit_inner({omega})"),
            WitnessKind::Hyperplane { v } => write!(f, "hyperplane({v})"),
            WitnessKind::TheoremCase { theorem, u, v } => write!(f, "theorem_case({theorem}, {u}, {v})"),
        }
    }
}
