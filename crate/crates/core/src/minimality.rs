//! Minimality of codewords and codes: the definition itself, the
//! Ashikhmin-Barg weight ratio, the Ding-Heng-Zhou weight identity, and the
//! hyperplane rank criterion, plus certificates for the last one.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{self, DefiningSet};
use crate::error::{Error, Result};
use crate::families::FunctionSpec;
use crate::gf::{Field, Scalar};
use crate::linalg::{self, Echelon, SubspaceBasis, Vector, VectorSpace};

/// Default cap on elementary field operations for the rank criterion.
pub const DEFAULT_BUDGET: u64 = 10_000_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "MINICODE_BUDGET";
/// Pairwise criteria refuse more projective classes than this.
pub const ORACLE_CLASS_LIMIT: u64 = 10_000;
/// Pairwise criteria refuse longer codes than this.
pub const ORACLE_LENGTH_LIMIT: usize = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Definition,
    Ab,
    Dhz,
    Rank,
    CfCase,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Definition => "definition",
            Criterion::Ab => "ab",
            Criterion::Dhz => "dhz",
            Criterion::Rank => "rank",
            Criterion::CfCase => "cf_case",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Minimal,
    NotMinimal,
    /// Only the one-sided weight-ratio test answers this.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Minimal => "minimal",
            Verdict::NotMinimal => "not_minimal",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Messages a, b with c(b) covered by c(a) although c(b) is not a multiple of c(a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverViolation {
    pub a: Vector,
    pub b: Vector,
}

/// Which of the three shapes of (u, v) a codeword of C_f falls under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionCase {
    /// u != 0, v = 0: the alphas are zeros of f.
    Zeros,
    /// u != 0, v != 0: f(alpha) = omega.alpha with omega = -v/u.
    Agreement { omega: Vector },
    /// u = 0, v != 0: the alphas lie in the hyperplane v.x = 0.
    Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Cover(CoverViolation),
    /// Independent a, b with sum_{c != 0} wt(a + cb) = (q-1) wt(a) - wt(b).
    WeightIdentity {
        a: Vector,
        b: Vector,
        lhs: u64,
        rhs: i64,
    },
    Ratio {
        q: u32,
        w_min: usize,
        w_max: usize,
    },
    /// Independent members of H(y, D), 1-based positions in D and the
    /// basis they span. Rank k-1 exactly when c(y) is minimal.
    Span {
        y: Vector,
        members: Vec<usize>,
        basis: SubspaceBasis,
    },
    Certificate(Certificate),
    /// Independent alphas found for a codeword c(u, v) of C_f.
    Alphas {
        case: FunctionCase,
        alphas: Vec<Vector>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub criterion: Criterion,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Number of projective classes (or class pairs' first members) examined.
    pub classes_checked: u64,
}

impl MinimalityReport {
    pub fn is_minimal(&self) -> bool {
        self.verdict == Verdict::Minimal
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.witness {
            Some(Witness::Certificate(c)) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl CheckOptions {
    /// Default options with the budget taken from `MINICODE_BUDGET` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map(|budget| CheckOptions { budget })
                .map_err(|_| Error::Unsupported(format!("{BUDGET_ENV}=`{s}` is not an integer"))),
            Err(_) => Ok(CheckOptions::default()),
        }
    }
}

/// Nonzero vectors of F_q^k up to scalars. Representatives have first
/// nonzero coordinate 1 and are listed in ascending canonical index.
#[derive(Clone, Copy, Debug)]
pub struct ProjectiveClasses {
    q: u32,
    k: usize,
    count: u64,
}

impl ProjectiveClasses {
    pub fn new(q: u32, k: usize) -> Result<Self> {
        let size = VectorSpace::new(q, k)?.size();
        Ok(ProjectiveClasses {
            q,
            k,
            count: (size - 1) / (q as u64 - 1),
        })
    }

    /// (q^k - 1) / (q - 1)
    pub fn count(&self) -> u64 {
        self.count
    }

    /// The `i`-th representative. Representatives with their leading 1 in
    /// the last position have the smallest indices, so blocks are visited
    /// from the last leading position to the first.
    pub fn get(&self, mut i: u64) -> Vector {
        debug_assert!(i < self.count);
        let q = self.q as u64;
        for lead in (0..self.k).rev() {
            let block = q.pow((self.k - 1 - lead) as u32);
            if i < block {
                let mut v = Vector::zeros(self.k);
                v.0[lead] = Scalar::ONE;
                for slot in v.0[lead + 1..].iter_mut().rev() {
                    *slot = Scalar((i % q) as u32);
                    i /= q;
                }
                return v;
            }
            i -= block;
        }
        unreachable!("class index out of range")
    }

    /// Position of the class of nonzero `y`.
    pub fn index_of(&self, field: &Field, y: &[Scalar]) -> Option<u64> {
        let lead = y.iter().position(|s| !s.is_zero())?;
        let rep = linalg::normalize(field, y);
        let q = self.q as u64;
        let before: u64 = (lead + 1..self.k).map(|l| q.pow((self.k - 1 - l) as u32)).sum();
        let tail = rep[lead + 1..].iter().fold(0u64, |acc, s| acc * q + s.0 as u64);
        Some(before + tail)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.count).map(move |i| self.get(i))
    }
}

fn check_oracle_scale(d: &DefiningSet) -> Result<ProjectiveClasses> {
    if d.n() == 0 {
        return Err(Error::EmptyCode);
    }
    let classes = ProjectiveClasses::new(d.field().q(), d.k())?;
    if classes.count() > ORACLE_CLASS_LIMIT {
        return Err(Error::SizeGuard {
            what: "projective classes",
            size: classes.count() as u128,
            limit: ORACLE_CLASS_LIMIT as u128,
        });
    }
    if d.n() > ORACLE_LENGTH_LIMIT {
        return Err(Error::SizeGuard {
            what: "code length",
            size: d.n() as u128,
            limit: ORACLE_LENGTH_LIMIT as u128,
        });
    }
    Ok(classes)
}

/// Brute force over ordered pairs of projective classes: the first pair
/// (a, b) whose codeword c(b) is covered by c(a) without being a multiple
/// of it. One representative per class suffices because supports do not
/// change under nonzero scaling.
pub fn is_minimal_definition(d: &DefiningSet) -> Result<MinimalityReport> {
    let classes = check_oracle_scale(d)?;
    let field = d.field();
    let reps: Vec<Vector> = classes.iter().collect();
    let words: Vec<Vector> = reps.iter().map(|y| d.codeword_unchecked(y)).collect();
    let violation = (0..reps.len()).into_par_iter().find_map_first(|ia| {
        let ca = &words[ia];
        (0..reps.len()).find_map(|ib| {
            let cb = &words[ib];
            let bad = ib != ia
                && !cb.is_zero()
                && linalg::covers(cb, ca).unwrap_or(false)
                && linalg::multiple_of(field, cb, ca).is_none();
            bad.then(|| CoverViolation {
                a: reps[ia].clone(),
                b: reps[ib].clone(),
            })
        })
    });
    Ok(match violation {
        Some(v) => MinimalityReport {
            criterion: Criterion::Definition,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::Cover(v)),
            classes_checked: classes.count(),
        },
        None => MinimalityReport {
            criterion: Criterion::Definition,
            verdict: Verdict::Minimal,
            witness: None,
            classes_checked: classes.count(),
        },
    })
}

/// Minimal if q * w_min > (q-1) * w_max, otherwise inconclusive.
pub fn ab_condition(d: &DefiningSet) -> Result<MinimalityReport> {
    let params = code::params(d)?;
    let verdict = if params.ab_ratio_holds() {
        Verdict::Minimal
    } else {
        Verdict::Inconclusive
    };
    Ok(MinimalityReport {
        criterion: Criterion::Ab,
        verdict,
        witness: Some(Witness::Ratio {
            q: params.q,
            w_min: params.w_min,
            w_max: params.w_max,
        }),
        classes_checked: 0,
    })
}

/// The code is minimal iff every ordered pair of independent codewords a, b
/// has sum_{c != 0} wt(a + cb) != (q-1) wt(a) - wt(b). Scaling a or b
/// permutes the terms of the sum and fixes both sides, so projective
/// representatives cover all pairs.
pub fn dhz_criterion(d: &DefiningSet) -> Result<MinimalityReport> {
    let classes = check_oracle_scale(d)?;
    let field = d.field();
    let reps: Vec<Vector> = classes.iter().collect();
    let words: Vec<Vector> = reps.iter().map(|y| d.codeword_unchecked(y)).collect();
    let weights: Vec<usize> = words.iter().map(|w| linalg::weight(w)).collect();
    let q = field.q() as i64;
    let independent = |a: &Vector, b: &Vector| {
        !a.is_zero() && !b.is_zero() && linalg::multiple_of(field, b, a).is_none()
    };
    let found = (0..reps.len()).into_par_iter().find_map_first(|ia| {
        let mut buf = Vector::zeros(d.n());
        (0..reps.len()).find_map(|ib| {
            if ib == ia || !independent(&words[ia], &words[ib]) {
                return None;
            }
            let mut lhs = 0u64;
            for c in field.nonzero_elements() {
                buf.0.copy_from_slice(&words[ia]);
                linalg::axpy(field, &mut buf, c, &words[ib]);
                lhs += linalg::weight(&buf) as u64;
            }
            let rhs = (q - 1) * weights[ia] as i64 - weights[ib] as i64;
            (lhs as i64 == rhs).then(|| Witness::WeightIdentity {
                a: reps[ia].clone(),
                b: reps[ib].clone(),
                lhs,
                rhs,
            })
        })
    });
    let verdict = if found.is_some() {
        Verdict::NotMinimal
    } else {
        Verdict::Minimal
    };
    Ok(MinimalityReport {
        criterion: Criterion::Dhz,
        verdict,
        witness: found,
        classes_checked: classes.count(),
    })
}

/// Streams D keeping an echelon basis of the members orthogonal to y; stops
/// as soon as rank k-1 is reached since H(y) has dimension k-1.
/// Returns the 1-based positions of the independent members and the basis.
fn hyperplane_span(y: &[Scalar], d: &DefiningSet) -> (Vec<usize>, SubspaceBasis) {
    let field = d.field();
    let target = d.k() - 1;
    let mut ech = Echelon::new(field, d.k());
    let mut members = Vec::with_capacity(target);
    if target > 0 {
        for (i, dv) in d.vectors().iter().enumerate() {
            if linalg::dot_unchecked(field, y, dv).is_zero() && ech.insert(dv) {
                members.push(i + 1);
                if ech.rank() == target {
                    break;
                }
            }
        }
    }
    (members, ech.into_basis())
}

fn check_message(y: &[Scalar], d: &DefiningSet) -> Result<()> {
    if y.len() != d.k() {
        return Err(Error::DimensionMismatch {
            expected: d.k(),
            found: y.len(),
        });
    }
    if y.iter().all(|s| s.is_zero()) {
        return Err(Error::ZeroVector("message y"));
    }
    Ok(())
}

/// c(y) is minimal iff H(y, D) = D ∩ y^⊥ has rank k-1.
pub fn rank_criterion_codeword(y: &Vector, d: &DefiningSet) -> Result<MinimalityReport> {
    check_message(y, d)?;
    d.require_full_rank()?;
    let (members, basis) = hyperplane_span(y, d);
    let verdict = if basis.dim() + 1 == d.k() {
        Verdict::Minimal
    } else {
        Verdict::NotMinimal
    };
    Ok(MinimalityReport {
        criterion: Criterion::Rank,
        verdict,
        witness: Some(Witness::Span {
            y: y.clone(),
            members,
            basis,
        }),
        classes_checked: 1,
    })
}

/// Upper estimate of the rank criterion's cost: P * n * k operations.
pub fn rank_criterion_cost(d: &DefiningSet) -> Result<u128> {
    let classes = ProjectiveClasses::new(d.field().q(), d.k())?;
    Ok(classes.count() as u128 * d.n() as u128 * d.k() as u128)
}

/// Applies the rank criterion to one representative per projective class.
/// When minimal the witness is a [`Certificate`]; otherwise it is the span
/// found for the failing class with the smallest canonical index, whatever
/// the thread schedule.
pub fn rank_criterion_code(d: &DefiningSet, opts: &CheckOptions) -> Result<MinimalityReport> {
    if d.n() == 0 {
        return Err(Error::EmptyCode);
    }
    d.require_full_rank()?;
    let estimate = rank_criterion_cost(d)?;
    if estimate > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: opts.budget,
        });
    }
    let classes = ProjectiveClasses::new(d.field().q(), d.k())?;
    let target = d.k() - 1;
    let check = |i: u64| {
        let y = classes.get(i);
        let (members, _) = hyperplane_span(&y, d);
        if members.len() == target {
            Ok(CertificateClass {
                representative: y,
                members,
            })
        } else {
            Err(i)
        }
    };
    let collected: std::result::Result<Vec<CertificateClass>, u64> =
        (0..classes.count()).into_par_iter().map(check).collect();
    match collected {
        Ok(entries) => Ok(MinimalityReport {
            criterion: Criterion::Rank,
            verdict: Verdict::Minimal,
            witness: Some(Witness::Certificate(Certificate {
                q: d.field().q(),
                n: d.n(),
                k: d.k(),
                class_count: classes.count(),
                classes: entries,
            })),
            classes_checked: classes.count(),
        }),
        Err(_) => {
            let first = (0..classes.count())
                .into_par_iter()
                .find_first(|&i| check(i).is_err())
                .expect("a failing class exists");
            let y = classes.get(first);
            let (members, basis) = hyperplane_span(&y, d);
            Ok(MinimalityReport {
                criterion: Criterion::Rank,
                verdict: Verdict::NotMinimal,
                witness: Some(Witness::Span { y, members, basis }),
                classes_checked: first + 1,
            })
        }
    }
}

/// Decides minimality of c(u, v) in C_f through the shape of (u, v): it
/// looks for m independent alphas with u f(alpha) + v.alpha = 0 whose lifts
/// (f(alpha), alpha) are independent, i.e. zeros of f when v = 0, points
/// where f agrees with omega.x (omega = -v/u) when both are nonzero, and
/// points of the hyperplane v.x = 0 when u = 0. The verdict is that of the
/// rank criterion on D_f; the case only labels the alphas.
pub fn cf_case_check(u: Scalar, v: &Vector, f: &FunctionSpec) -> Result<MinimalityReport> {
    let field = f.field();
    let m = f.m();
    if v.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: v.len(),
        });
    }
    field.scalar(u.0)?;
    if u.is_zero() && v.is_zero() {
        return Err(Error::ZeroVector("(u, v)"));
    }
    if let Some(omega) = code::linearity_check(f)? {
        return Err(Error::LinearFunction(omega.values()));
    }
    let case = if v.is_zero() {
        FunctionCase::Zeros
    } else if u.is_zero() {
        FunctionCase::Hyperplane
    } else {
        let inv = field.inv(u)?;
        FunctionCase::Agreement {
            omega: linalg::scale(field, field.neg(inv), v),
        }
    };
    let d = code::defining_set(f)?;
    let y = Vector(std::iter::once(u).chain(v.iter().copied()).collect());
    let (members, _) = hyperplane_span(&y, &d);
    let alphas: Vec<Vector> = members
        .iter()
        .map(|&i| Vector(d.vectors()[i - 1][1..].to_vec()))
        .collect();
    let verdict = if alphas.len() == m {
        Verdict::Minimal
    } else {
        Verdict::NotMinimal
    };
    Ok(MinimalityReport {
        criterion: Criterion::CfCase,
        verdict,
        witness: Some(Witness::Alphas { case, alphas }),
        classes_checked: 1,
    })
}

/// Per projective class: the representative and k-1 independent members of
/// H(y, D), as 1-based positions in D.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateClass {
    pub representative: Vector,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub class_count: u64,
    pub classes: Vec<CertificateClass>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

/// True iff every projective class appears, each listed member is
/// orthogonal to its representative, and each class's members have rank k-1.
pub fn verify_certificate(d: &DefiningSet, cert: &Certificate) -> Result<bool> {
    let field = d.field();
    if cert.q != field.q() || cert.n != d.n() || cert.k != d.k() {
        return Err(Error::MalformedCertificate(format!(
            "header (q={}, n={}, k={}) does not match the code (q={}, n={}, k={})",
            cert.q,
            cert.n,
            cert.k,
            field.q(),
            d.n(),
            d.k()
        )));
    }
    let classes = ProjectiveClasses::new(field.q(), d.k())?;
    if cert.class_count != classes.count() {
        return Err(Error::MalformedCertificate(format!(
            "class_count {} should be {}",
            cert.class_count,
            classes.count()
        )));
    }
    let mut seen = HashSet::new();
    for entry in &cert.classes {
        let y = &entry.representative;
        if y.len() != d.k() || y.check_in(field).is_err() {
            return Err(Error::MalformedCertificate(format!(
                "representative {y} is not a vector of F_{}^{}",
                field.q(),
                d.k()
            )));
        }
        let Some(idx) = classes.index_of(field, y) else {
            return Ok(false);
        };
        seen.insert(idx);
        let mut ech = Echelon::new(field, d.k());
        for &pos in &entry.members {
            let Some(dv) = pos.checked_sub(1).and_then(|p| d.vectors().get(p)) else {
                return Ok(false);
            };
            if !linalg::dot_unchecked(field, y, dv).is_zero() {
                return Ok(false);
            }
            ech.insert(dv);
        }
        if ech.rank() + 1 != d.k() {
            return Ok(false);
        }
    }
    Ok(seen.len() as u64 == classes.count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Variant;

    fn v(vals: &[u32]) -> Vector {
        Vector::from_values(vals)
    }

    fn simplex(q: u32, k: usize) -> DefiningSet {
        let field = Field::with_order(q).unwrap();
        let vectors = linalg::enumerate_vectors(q, k, false).unwrap();
        DefiningSet::new(field, k, vectors).unwrap()
    }

    fn toy() -> DefiningSet {
        let f2 = Field::prime(2).unwrap();
        DefiningSet::new(f2, 2, vec![v(&[1, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap()
    }

    #[test]
    fn projective_classes_are_sorted_normalized_representatives() {
        for (q, k) in [(2, 3), (3, 3), (4, 2), (5, 2)] {
            let field = Field::with_order(q).unwrap();
            let classes = ProjectiveClasses::new(q, k).unwrap();
            let space = VectorSpace::new(q, k).unwrap();
            let mut want: Vec<Vector> = space
                .iter(false)
                .filter(|x| linalg::normalize(&field, x) == *x)
                .collect();
            want.sort_by_key(|x| space.index_of(x));
            let got: Vec<Vector> = classes.iter().collect();
            assert_eq!(got, want);
            assert_eq!(classes.count(), (space.size() - 1) / (q as u64 - 1));
            for (i, y) in got.iter().enumerate() {
                assert_eq!(classes.index_of(&field, y), Some(i as u64));
                let scaled = linalg::scale(&field, field.nonzero_elements().last().unwrap(), y);
                assert_eq!(classes.index_of(&field, &scaled), Some(i as u64));
            }
        }
    }

    #[test]
    fn simplex_code_is_minimal_everywhere() {
        let d = simplex(3, 3);
        assert!(is_minimal_definition(&d).unwrap().is_minimal());
        assert!(dhz_criterion(&d).unwrap().is_minimal());
        assert!(ab_condition(&d).unwrap().is_minimal());
        let report = rank_criterion_code(&d, &CheckOptions::default()).unwrap();
        assert!(report.is_minimal());
        assert!(verify_certificate(&d, report.certificate().unwrap()).unwrap());
    }

    #[test]
    fn toy_code_violates_the_definition() {
        let d = toy();
        let report = is_minimal_definition(&d).unwrap();
        assert_eq!(report.verdict, Verdict::NotMinimal);
        let Some(Witness::Cover(CoverViolation { a, b })) = report.witness else {
            panic!("expected a cover violation");
        };
        assert_eq!(a, v(&[1, 1]));
        assert_eq!(b, v(&[0, 1]));
        let ca = d.codeword(&a).unwrap();
        assert_eq!(ca, v(&[1, 1, 1]));
        assert!(linalg::covers(&d.codeword(&b).unwrap(), &ca).unwrap());
        // (1,0) is covered by (1,1) as well
        assert!(linalg::covers(&d.codeword(&v(&[1, 0])).unwrap(), &ca).unwrap());
        assert_eq!(d.codeword(&v(&[1, 0])).unwrap(), v(&[1, 1, 0]));

        assert_eq!(dhz_criterion(&d).unwrap().verdict, Verdict::NotMinimal);
        assert_eq!(
            rank_criterion_code(&d, &CheckOptions::default()).unwrap().verdict,
            Verdict::NotMinimal
        );
    }

    #[test]
    fn binary_dhz_identity_reduces_to_weight_difference() {
        let d = toy();
        let Some(Witness::WeightIdentity { a, b, lhs, rhs }) = dhz_criterion(&d).unwrap().witness
        else {
            panic!("expected a weight identity");
        };
        let ca = d.codeword(&a).unwrap();
        let cb = d.codeword(&b).unwrap();
        let sum = linalg::add(d.field(), &ca, &cb).unwrap();
        assert_eq!(lhs as usize, linalg::weight(&sum));
        assert_eq!(rhs, linalg::weight(&ca) as i64 - linalg::weight(&cb) as i64);
    }

    #[test]
    fn empty_hyperplane_section_is_not_minimal() {
        let f2 = Field::prime(2).unwrap();
        let d = DefiningSet::new(f2, 2, vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        let report = rank_criterion_codeword(&v(&[1, 1]), &d).unwrap();
        assert_eq!(report.verdict, Verdict::NotMinimal);
        let Some(Witness::Span { members, basis, .. }) = report.witness else {
            unreachable!()
        };
        assert!(members.is_empty());
        assert_eq!(basis.dim(), 0);
        assert!(matches!(
            rank_criterion_codeword(&v(&[0, 0]), &d),
            Err(Error::ZeroVector(_))
        ));
    }

    #[test]
    fn failing_class_is_the_smallest() {
        let d = toy();
        let report = rank_criterion_code(&d, &CheckOptions::default()).unwrap();
        let classes = ProjectiveClasses::new(2, 2).unwrap();
        let first_bad = classes
            .iter()
            .position(|y| !rank_criterion_codeword(&y, &d).unwrap().is_minimal())
            .unwrap();
        let Some(Witness::Span { y, .. }) = report.witness else {
            unreachable!()
        };
        assert_eq!(y, classes.get(first_bad as u64));
    }

    #[test]
    fn budget_and_guards() {
        let d = simplex(3, 4);
        let tiny = CheckOptions { budget: 10 };
        assert!(matches!(
            rank_criterion_code(&d, &tiny),
            Err(Error::BudgetExceeded { budget: 10, .. })
        ));
        let f2 = Field::prime(2).unwrap();
        let empty = DefiningSet::new(f2.clone(), 3, vec![]).unwrap();
        assert!(matches!(is_minimal_definition(&empty), Err(Error::EmptyCode)));
        let long = DefiningSet::new(f2, 2, vec![v(&[1, 1]); 1001]).unwrap();
        assert!(matches!(dhz_criterion(&long), Err(Error::SizeGuard { .. })));
        let deficient = DefiningSet::new(Field::prime(3).unwrap(), 3, vec![v(&[1, 0, 0])]).unwrap();
        assert!(matches!(
            rank_criterion_code(&deficient, &CheckOptions::default()),
            Err(Error::RankDeficient { rank: 1, k: 3 })
        ));
    }

    #[test]
    fn certificates_detect_tampering() {
        let d = simplex(2, 4);
        let report = rank_criterion_code(&d, &CheckOptions::default()).unwrap();
        let cert = report.certificate().unwrap().clone();
        assert!(verify_certificate(&d, &cert).unwrap());
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);

        let mut missing = cert.clone();
        missing.classes.pop();
        assert!(!verify_certificate(&d, &missing).unwrap());

        let mut skewed = cert.clone();
        let y = skewed.classes[0].representative.clone();
        let bad = d
            .vectors()
            .iter()
            .position(|dv| !linalg::dot(d.field(), &y, dv).unwrap().is_zero())
            .unwrap();
        skewed.classes[0].members[0] = bad + 1;
        assert!(!verify_certificate(&d, &skewed).unwrap());

        let mut wrong = cert;
        wrong.n += 1;
        assert!(matches!(
            verify_certificate(&d, &wrong),
            Err(Error::MalformedCertificate(_))
        ));
        assert!(Certificate::from_json("{\"q\": 2}").is_err());
    }

    #[test]
    fn function_case_examples() {
        let f2 = Field::prime(2).unwrap();
        let one = FunctionSpec::new(f2.clone(), 3, Variant::Table(vec![Scalar::ONE; 8])).unwrap();
        let report = cf_case_check(Scalar::ONE, &Vector::zeros(3), &one).unwrap();
        assert_eq!(report.verdict, Verdict::NotMinimal);

        let ct = FunctionSpec::new(f2, 5, Variant::ComplementThreshold(2)).unwrap();
        let report = cf_case_check(Scalar::ONE, &Vector::zeros(5), &ct).unwrap();
        assert!(report.is_minimal());
        let Some(Witness::Alphas { case, mut alphas }) = report.witness else {
            unreachable!()
        };
        assert_eq!(case, FunctionCase::Zeros);
        alphas.sort();
        let mut units: Vec<Vector> = (1..=5).map(|i| Vector::unit(5, i)).collect();
        units.sort();
        assert_eq!(alphas, units);

        assert!(matches!(
            cf_case_check(Scalar::ZERO, &Vector::zeros(5), &ct),
            Err(Error::ZeroVector(_))
        ));
        let zero = FunctionSpec::new(Field::prime(3).unwrap(), 2, Variant::Table(vec![Scalar::ZERO; 9])).unwrap();
        assert!(matches!(
            cf_case_check(Scalar::ONE, &Vector::zeros(2), &zero),
            Err(Error::LinearFunction(_))
        ));
    }

    #[test]
    fn rank_verdict_is_scalar_invariant() {
        let f3 = Field::prime(3).unwrap();
        let d3 = DefiningSet::new(
            f3.clone(),
            3,
            vec![v(&[1, 0, 2]), v(&[0, 1, 1]), v(&[1, 1, 0]), v(&[2, 2, 2]), v(&[0, 0, 1])],
        )
        .unwrap();
        for y in linalg::enumerate_vectors(3, 3, false).unwrap() {
            let base = rank_criterion_codeword(&y, &d3).unwrap().verdict;
            let scaled = linalg::scale(&f3, Scalar(2), &y);
            assert_eq!(rank_criterion_codeword(&scaled, &d3).unwrap().verdict, base);
        }
    }
}
