//! q-ary functions f: F_q^m -> F_q, the parametric families the constructions
//! are stated for, and checkers for each construction's hypotheses.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{Field, Scalar};
use crate::linalg::{self, Vector, VectorSpace};

/// One term a * prod x_i^{b_i} of a [`Variant::MonomialSum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Scalar,
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(coeff: Scalar, exponents: Vec<u32>) -> Self {
        Monomial { coeff, exponents }
    }

    /// Square-free monomial with coefficient 1 over the given 1-based indices.
    pub fn product(m: usize, indices: &[usize]) -> Self {
        let mut exponents = vec![0; m];
        for &i in indices {
            exponents[i - 1] = 1;
        }
        Monomial {
            coeff: Scalar::ONE,
            exponents,
        }
    }

    pub fn support(&self) -> Vec<usize> {
        monomial_support(&self.exponents)
    }
}

/// 1-based indices of the variables with nonzero exponent.
pub fn monomial_support(exponents: &[u32]) -> Vec<usize> {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &b)| b != 0)
        .map(|(i, _)| i + 1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Values of f at every x in canonical order, zero vector first.
    Table(Vec<Scalar>),
    /// f(x) = a_{wt(x)} for 1 <= wt(x) <= t, else 0; holds a_1..a_t.
    WeightThreshold(Vec<Scalar>),
    /// f(x) = 0 for wt(x) <= t, 1 otherwise.
    ComplementThreshold(usize),
    /// f(beta, gamma) = phi(beta).gamma + g(beta) with beta in F_q^s, gamma in F_q^t.
    /// `phi` and `g` are tables indexed by beta in canonical order.
    MaioranaMcFarland {
        s: usize,
        t: usize,
        phi: Vec<Vector>,
        g: Vec<Scalar>,
    },
    /// Sum of monomials; 0^0 = 1.
    MonomialSum(Vec<Monomial>),
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Table(_) => "table",
            Variant::WeightThreshold(_) => "weight-threshold",
            Variant::ComplementThreshold(_) => "complement-threshold",
            Variant::MaioranaMcFarland { .. } => "maiorana-mcfarland",
            Variant::MonomialSum(_) => "monomial-sum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionSpec {
    field: Field,
    m: usize,
    variant: Variant,
}

impl FunctionSpec {
    pub fn new(field: Field, m: usize, variant: Variant) -> Result<FunctionSpec> {
        let invalid = |msg: String| Err(Error::InvalidFunction(msg));
        let check_scalars = |values: &[Scalar]| -> Result<()> {
            values.iter().try_for_each(|&s| field.scalar(s.0).map(|_| ()))
        };
        if m == 0 {
            return invalid("arity m must be at least 1".into());
        }
        match &variant {
            Variant::Table(values) => {
                let size = VectorSpace::new(field.q(), m)?.size();
                if values.len() as u64 != size {
                    return invalid(format!(
                        "table has {} values, expected q^m = {size}",
                        values.len()
                    ));
                }
                check_scalars(values)?;
            }
            Variant::WeightThreshold(a) => {
                if a.is_empty() || a.len() > m {
                    return invalid(format!("threshold t = {} outside 1..={m}", a.len()));
                }
                check_scalars(a)?;
                if let Some(i) = a.iter().position(|x| x.is_zero()) {
                    return invalid(format!("a_{} must be nonzero", i + 1));
                }
            }
            Variant::ComplementThreshold(t) => {
                if *t > m {
                    return invalid(format!("threshold t = {t} exceeds m = {m}"));
                }
            }
            Variant::MaioranaMcFarland { s, t, phi, g } => {
                if s + t != m || *s == 0 || *t == 0 {
                    return invalid(format!("need s, t >= 1 with s + t = m, got s={s} t={t} m={m}"));
                }
                let size = VectorSpace::new(field.q(), *s)?.size() as usize;
                if phi.len() != size || g.len() != size {
                    return invalid(format!(
                        "phi and g need q^s = {size} entries, got {} and {}",
                        phi.len(),
                        g.len()
                    ));
                }
                for p in phi {
                    if p.len() != *t {
                        return invalid(format!("phi value {p} does not have length t = {t}"));
                    }
                    p.check_in(&field)?;
                }
                check_scalars(g)?;
            }
            Variant::MonomialSum(terms) => {
                for (j, term) in terms.iter().enumerate() {
                    if term.exponents.len() != m {
                        return invalid(format!("monomial {} needs {m} exponents", j + 1));
                    }
                    field.scalar(term.coeff.0)?;
                    if term.coeff.is_zero() {
                        return invalid(format!("coefficient of monomial {} is zero", j + 1));
                    }
                }
            }
        }
        Ok(FunctionSpec { field, m, variant })
    }

    /// Builds a table by evaluating `f` at every x in canonical order.
    pub fn from_fn(field: Field, m: usize, f: impl Fn(&Vector) -> u32) -> Result<FunctionSpec> {
        let space = VectorSpace::new(field.q(), m)?;
        let values = space.iter(true).map(|x| field.from_int(f(&x) as i64)).collect();
        FunctionSpec::new(field, m, Variant::Table(values))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: x.len(),
            });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Scalar]) -> Scalar {
        let field = &self.field;
        match &self.variant {
            Variant::Table(values) => {
                let idx = x.iter().fold(0usize, |acc, s| acc * field.order() + s.0 as usize);
                values[idx]
            }
            Variant::WeightThreshold(a) => {
                let w = linalg::weight(x);
                if (1..=a.len()).contains(&w) {
                    a[w - 1]
                } else {
                    Scalar::ZERO
                }
            }
            Variant::ComplementThreshold(t) => {
                if linalg::weight(x) > *t {
                    Scalar::ONE
                } else {
                    Scalar::ZERO
                }
            }
            Variant::MaioranaMcFarland { s, phi, g, .. } => {
                let (beta, gamma) = x.split_at(*s);
                let idx = beta.iter().fold(0usize, |acc, b| acc * field.order() + b.0 as usize);
                field.add(linalg::dot_unchecked(field, &phi[idx], gamma), g[idx])
            }
            Variant::MonomialSum(terms) => terms.iter().fold(Scalar::ZERO, |acc, term| {
                let value = term
                    .exponents
                    .iter()
                    .zip(x)
                    .fold(term.coeff, |p, (&b, &xi)| field.mul(p, field.pow(xi, b as u64)));
                field.add(acc, value)
            }),
        }
    }

    /// Values at every x in canonical order, zero vector first.
    pub fn table(&self) -> Result<Vec<Scalar>> {
        if let Variant::Table(values) = &self.variant {
            return Ok(values.clone());
        }
        let space = VectorSpace::new(self.field.q(), self.m)?;
        Ok(space.iter(true).map(|x| self.eval_unchecked(&x)).collect())
    }

    /// The same function as a [`Variant::Table`].
    pub fn materialize(&self) -> Result<FunctionSpec> {
        Ok(FunctionSpec {
            field: self.field.clone(),
            m: self.m,
            variant: Variant::Table(self.table()?),
        })
    }

    /// Renders the function file format.
    pub fn to_text(&self) -> String {
        let join = |xs: &mut dyn Iterator<Item = u32>| {
            xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut out = format!("{} {} {}\n", self.field.q(), self.m, self.variant.name());
        match &self.variant {
            Variant::Table(values) => {
                for chunk in values.chunks(self.field.order()) {
                    out += &join(&mut chunk.iter().map(|s| s.0));
                    out.push('\n');
                }
            }
            Variant::WeightThreshold(a) => {
                out += &format!("{} {}\n", a.len(), join(&mut a.iter().map(|s| s.0)));
            }
            Variant::ComplementThreshold(t) => out += &format!("{t}\n"),
            Variant::MaioranaMcFarland { s, t, phi, g } => {
                out += &format!("{s} {t}\n");
                for p in phi {
                    out += &join(&mut p.iter().map(|s| s.0));
                    out.push('\n');
                }
                out += &join(&mut g.iter().map(|s| s.0));
                out.push('\n');
            }
            Variant::MonomialSum(terms) => {
                out += &format!("{}\n", terms.len());
                for term in terms {
                    out += &format!(
                        "{} {}\n",
                        term.coeff.0,
                        join(&mut term.exponents.iter().copied())
                    );
                }
            }
        }
        out
    }

    /// Parses the format written by [`FunctionSpec::to_text`]. After the
    /// header line `q m variant` the parameters are read as one stream of
    /// integers, so line breaks inside the body are free.
    pub fn parse_text(text: &str) -> Result<FunctionSpec> {
        let mut tokens = Vec::new();
        let mut header = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if header.is_none() {
                header = Some((i + 1, line.to_string()));
                continue;
            }
            for tok in line.split_whitespace() {
                let value = tok.parse::<u32>().map_err(|_| {
                    Error::parse(i + 1, format!("`{tok}` is not a non-negative integer"))
                })?;
                tokens.push((i + 1, value));
            }
        }
        let (hline, header) = header.ok_or_else(|| Error::parse(1, "empty function file"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [q, m, kind] = parts[..] else {
            return Err(Error::parse(hline, "header must be `q m variant`"));
        };
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::parse(hline, format!("`{s}` is not a number")))
        };
        let field = Field::with_order(num(q)?).map_err(|e| Error::parse(hline, e.to_string()))?;
        let m = num(m)? as usize;

        let mut stream = tokens.into_iter();
        let last_line = text.lines().count().max(1);
        let mut next = || {
            stream
                .next()
                .map(|(_, v)| v)
                .ok_or_else(|| Error::parse(last_line, "unexpected end of parameters"))
        };
        let mut take = |count: usize| -> Result<Vec<Scalar>> {
            (0..count).map(|_| next().map(Scalar)).collect()
        };
        let variant = match kind {
            "table" => {
                let size = VectorSpace::new(field.q(), m)?.size() as usize;
                Variant::Table(take(size)?)
            }
            "weight-threshold" => {
                let t = take(1)?[0].0 as usize;
                Variant::WeightThreshold(take(t)?)
            }
            "complement-threshold" => Variant::ComplementThreshold(take(1)?[0].0 as usize),
            "maiorana-mcfarland" => {
                let st = take(2)?;
                let (s, t) = (st[0].0 as usize, st[1].0 as usize);
                let size = VectorSpace::new(field.q(), s)?.size() as usize;
                let phi = (0..size)
                    .map(|_| take(t).map(Vector))
                    .collect::<Result<Vec<_>>>()?;
                let g = take(size)?;
                Variant::MaioranaMcFarland { s, t, phi, g }
            }
            "monomial-sum" => {
                let count = take(1)?[0].0 as usize;
                let terms = (0..count)
                    .map(|_| {
                        let coeff = take(1)?[0];
                        let exponents = take(m)?.into_iter().map(|s| s.0).collect();
                        Ok(Monomial { coeff, exponents })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Variant::MonomialSum(terms)
            }
            other => {
                return Err(Error::parse(hline, format!("unknown function variant `{other}`")));
            }
        };
        if let Some((line, _)) = stream.next() {
            return Err(Error::parse(line, "trailing data after parameters"));
        }
        FunctionSpec::new(field, m, variant)
    }
}

/// The seven constructions whose hypotheses can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Weight-based, q > 2: nonzero and scalar-invariant on weights 1..2, zero on weight m.
    A1,
    /// Weight-based, q = 2: one on weights 1..2, zero on the top weights.
    A2,
    /// Zero on weights 1..2, nonzero and scalar-invariant on weights >= m-1.
    B,
    /// Maiorana-McFarland, q > 2.
    C1,
    /// Maiorana-McFarland, q = 2.
    C2,
    /// Sum of disjoint monomials each in at least three variables.
    D1,
    /// Sum of disjoint square-free monomials each in at least two variables.
    D2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::A1,
        TheoremId::A2,
        TheoremId::B,
        TheoremId::C1,
        TheoremId::C2,
        TheoremId::D1,
        TheoremId::D2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::A1 => "A1",
            TheoremId::A2 => "A2",
            TheoremId::B => "B",
            TheoremId::C1 => "C1",
            TheoremId::C2 => "C2",
            TheoremId::D1 => "D1",
            TheoremId::D2 => "D2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Pass,
    /// The first violated condition and the points that violate it (empty
    /// for conditions on the parameters rather than on values).
    Fail {
        condition: String,
        witness: Vec<Vector>,
    },
}

impl Validation {
    pub fn passed(&self) -> bool {
        matches!(self, Validation::Pass)
    }

    fn fail(condition: impl Into<String>, witness: Vec<Vector>) -> Validation {
        Validation::Fail {
            condition: condition.into(),
            witness,
        }
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validation::Pass => f.write_str("pass"),
            Validation::Fail { condition, witness } => {
                write!(f, "fail: {condition}")?;
                if !witness.is_empty() {
                    let pts: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
                    write!(f, " at {}", pts.join(", "))?;
                }
                Ok(())
            }
        }
    }
}

/// Early return of a failed [`Validation`].
macro_rules! bail {
    ($cond:expr, $($w:expr),*) => {
        return Ok(Validation::fail($cond, vec![$($w),*]))
    };
}

/// Checks every hypothesis of `thm` on `f`, including the constraints on
/// the parameters, by exhaustive scans over the quantified domains.
pub fn validate_hypotheses(f: &FunctionSpec, thm: TheoremId) -> Result<Validation> {
    match thm {
        TheoremId::A1 => validate_a1(f),
        TheoremId::A2 => validate_a2(f),
        TheoremId::B => validate_b(f),
        TheoremId::C1 | TheoremId::C2 => validate_mm(f, thm),
        TheoremId::D1 | TheoremId::D2 => validate_monomials(f, thm),
    }
}

/// Finds x of weight in `weights` with f(x) = 0, or x and a with f(ax) != f(x).
fn nonzero_scalar_invariant(
    f: &FunctionSpec,
    weights: impl Iterator<Item = usize>,
    label: &str,
) -> Option<Validation> {
    let field = f.field();
    for w in weights {
        for x in linalg::vectors_of_weight(field, f.m(), w) {
            let fx = f.eval_unchecked(&x);
            if fx.is_zero() {
                return Some(Validation::fail(format!("f(x) != 0 when {label}"), vec![x]));
            }
            for a in field.nonzero_elements().skip(1) {
                let ax = linalg::scale(field, a, &x);
                if f.eval_unchecked(&ax) != fx {
                    return Some(Validation::fail(
                        format!("f(ax) = f(x) for all nonzero a when {label}"),
                        vec![x, ax],
                    ));
                }
            }
        }
    }
    None
}

/// Finds x of weight in `weights` with f(x) != `value`.
fn constant_on(
    f: &FunctionSpec,
    weights: impl Iterator<Item = usize>,
    value: Scalar,
    label: &str,
) -> Option<Validation> {
    for w in weights {
        for x in linalg::vectors_of_weight(f.field(), f.m(), w) {
            if f.eval_unchecked(&x) != value {
                return Some(Validation::fail(format!("f(x) = {value} when {label}"), vec![x]));
            }
        }
    }
    None
}

fn validate_a1(f: &FunctionSpec) -> Result<Validation> {
    let (q, m) = (f.field().q(), f.m());
    if q <= 2 {
        bail!(format!("q > 2 (q = {q})"),);
    }
    if m < 3 {
        bail!(format!("m >= 3 (m = {m})"),);
    }
    if let Some(v) = nonzero_scalar_invariant(f, 1..=2, "1 <= wt(x) <= 2") {
        return Ok(v);
    }
    Ok(constant_on(f, m..=m, Scalar::ZERO, "wt(x) = m").unwrap_or(Validation::Pass))
}

fn validate_a2(f: &FunctionSpec) -> Result<Validation> {
    let (q, m) = (f.field().q(), f.m());
    if q != 2 {
        bail!(format!("q = 2 (q = {q})"),);
    }
    if m < 4 {
        bail!(format!("m >= 4 (m = {m})"),);
    }
    if let Some(v) = constant_on(f, 1..=2, Scalar::ONE, "1 <= wt(x) <= 2") {
        return Ok(v);
    }
    let (low, label) = if m % 2 == 0 {
        (m - 1, "m is even and wt(x) >= m-1")
    } else {
        (m - 2, "m is odd and wt(x) >= m-2")
    };
    Ok(constant_on(f, low..=m, Scalar::ZERO, label).unwrap_or(Validation::Pass))
}

fn validate_b(f: &FunctionSpec) -> Result<Validation> {
    let m = f.m();
    if let Some(v) = constant_on(f, 1..=2.min(m), Scalar::ZERO, "1 <= wt(x) <= 2") {
        return Ok(v);
    }
    Ok(nonzero_scalar_invariant(f, m.saturating_sub(1).max(1)..=m, "wt(x) >= m-1")
        .unwrap_or(Validation::Pass))
}

fn validate_mm(f: &FunctionSpec, thm: TheoremId) -> Result<Validation> {
    let Variant::MaioranaMcFarland { s, t, phi, g } = f.variant() else {
        return Err(Error::IncompatibleVariant {
            theorem: thm.name(),
            variant: f.variant().name(),
        });
    };
    let (s, t) = (*s, *t);
    let field = f.field();
    let q = field.q();
    match thm {
        TheoremId::C1 if q <= 2 => bail!(format!("q > 2 (q = {q})"),),
        TheoremId::C2 if q != 2 => bail!(format!("q = 2 (q = {q})"),),
        _ => {}
    }
    if s < 2 {
        bail!(format!("s >= 2 (s = {s})"),);
    }
    if t < 2 {
        bail!(format!("t >= 2 (t = {t})"),);
    }
    let space = VectorSpace::new(q, s)?;
    let phi_at = |beta: &Vector| &phi[space.index_of(beta) as usize];

    // phi injective on U = {wt(beta) <= 1} with no zero value
    let mut seen: HashMap<&Vector, Vector> = HashMap::new();
    let u_set = std::iter::once(Vector::zeros(s)).chain(linalg::vectors_of_weight(field, s, 1));
    let mut u_sorted: Vec<Vector> = u_set.collect();
    u_sorted.sort_by_key(|b| space.index_of(b));
    for beta in u_sorted {
        let value = phi_at(&beta);
        if value.is_zero() {
            bail!("phi(beta) != 0 for wt(beta) <= 1", beta);
        }
        if let Some(prev) = seen.get(value) {
            bail!(
                format!("phi is injective on wt(beta) <= 1 (both map to {value})"),
                prev.clone(),
                beta
            );
        }
        seen.insert(value, beta);
    }
    if thm == TheoremId::C2 {
        for beta in linalg::vectors_of_weight(field, s, 2) {
            if !phi_at(&beta).is_zero() {
                bail!("phi(beta) = 0 for wt(beta) = 2", beta);
            }
        }
    }
    let c = g[0];
    let required = if thm == TheoremId::C2 { Scalar::ONE } else { c };
    if required.is_zero() {
        bail!("g is a nonzero constant", Vector::zeros(s));
    }
    if let Some(i) = g.iter().position(|&x| x != required) {
        bail!(
            format!("g(beta) = {required} for all beta"),
            space.vector_at(i as u64)
        );
    }
    Ok(Validation::Pass)
}

fn validate_monomials(f: &FunctionSpec, thm: TheoremId) -> Result<Validation> {
    let Variant::MonomialSum(terms) = f.variant() else {
        return Err(Error::IncompatibleVariant {
            theorem: thm.name(),
            variant: f.variant().name(),
        });
    };
    if terms.len() < 2 {
        bail!(format!("t >= 2 monomials (t = {})", terms.len()),);
    }
    let supports: Vec<Vec<usize>> = terms.iter().map(Monomial::support).collect();
    for j in 0..supports.len() {
        for l in j + 1..supports.len() {
            if supports[j].iter().any(|i| supports[l].contains(i)) {
                bail!(
                    format!("supports s(g_{}) and s(g_{}) are disjoint", j + 1, l + 1),
                );
            }
        }
    }
    let min_support = if thm == TheoremId::D1 { 3 } else { 2 };
    if let Some(j) = supports.iter().position(|s| s.len() < min_support) {
        bail!(
            format!("#s(g_{}) >= {min_support} (it is {})", j + 1, supports[j].len()),
        );
    }
    if thm == TheoremId::D2 {
        if let Some(j) = terms.iter().position(|t| t.exponents.iter().any(|&b| b > 1)) {
            bail!(format!("exponents of g_{} are in {{0, 1}}", j + 1),);
        }
    }
    Ok(Validation::Pass)
}

/// A named function from the worked examples, with the construction it is
/// an instance of.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub theorem: TheoremId,
    pub spec: FunctionSpec,
}

pub const PRESET_NAMES: [&str; 14] = [
    "sec4_f1",
    "sec4_f2",
    "sec5_f1",
    "sec5_f2",
    "sec5_f3",
    "sec6_q2",
    "sec6_q3",
    "sec6_q2_literal",
    "sec6_q3_literal",
    "sec7_f1",
    "sec7_f2",
    "sec7_f3",
    "sec7_f4",
    "dhz_m7",
];

pub fn preset(name: &str) -> Result<Preset> {
    let f2 = || Field::prime(2).expect("2 is prime");
    let f3 = || Field::prime(3).expect("3 is prime");
    let (name, theorem, spec) = match name {
        "sec4_f1" => (
            "sec4_f1",
            TheoremId::A1,
            FunctionSpec::new(f3(), 4, Variant::WeightThreshold(vec![Scalar::ONE; 2]))?,
        ),
        "sec4_f2" => (
            "sec4_f2",
            TheoremId::A1,
            FunctionSpec::from_fn(f3(), 4, |x| match linalg::weight(x) {
                1 | 2 => 1,
                3 => x[0].0,
                _ => 0,
            })?,
        ),
        "sec5_f1" => (
            "sec5_f1",
            TheoremId::B,
            FunctionSpec::new(f2(), 5, Variant::ComplementThreshold(2))?,
        ),
        "sec5_f2" => (
            "sec5_f2",
            TheoremId::B,
            FunctionSpec::new(f2(), 5, Variant::ComplementThreshold(3))?,
        ),
        "sec5_f3" => (
            "sec5_f3",
            TheoremId::B,
            FunctionSpec::from_fn(f2(), 5, |x| match linalg::weight(x) {
                0..=2 => 0,
                3 => x[0].0 + x[1].0,
                _ => 1,
            })?,
        ),
        "sec6_q2" => ("sec6_q2", TheoremId::C2, example_mm(f2(), false)?),
        "sec6_q3" => ("sec6_q3", TheoremId::C1, example_mm(f3(), false)?),
        "sec6_q2_literal" => ("sec6_q2_literal", TheoremId::C2, example_mm(f2(), true)?),
        "sec6_q3_literal" => ("sec6_q3_literal", TheoremId::C1, example_mm(f3(), true)?),
        "sec7_f1" => ("sec7_f1", TheoremId::D1, blocks(f3(), &[&[1, 2, 3, 4], &[5, 6, 7, 8]])?),
        "sec7_f2" => (
            "sec7_f2",
            TheoremId::D2,
            blocks(f3(), &[&[1, 2], &[3, 4], &[5, 6], &[7, 8]])?,
        ),
        "sec7_f3" => ("sec7_f3", TheoremId::D1, blocks(f3(), &[&[1, 2, 3], &[4, 5, 6, 7, 8]])?),
        "sec7_f4" => ("sec7_f4", TheoremId::D1, blocks(f3(), &[&[1, 2, 3], &[4, 5, 6, 7]])?),
        "dhz_m7" => ("dhz_m7", TheoremId::C2, dhz_mm(7)?),
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(Preset {
        name,
        theorem,
        spec,
    })
}

pub fn presets() -> Vec<Preset> {
    PRESET_NAMES
        .iter()
        .map(|n| preset(n).expect("built-in presets are valid"))
        .collect()
}

fn blocks(field: Field, supports: &[&[usize]]) -> Result<FunctionSpec> {
    let m = 8;
    let terms = supports.iter().map(|s| Monomial::product(m, s)).collect();
    FunctionSpec::new(field, m, Variant::MonomialSum(terms))
}

/// The worked Maiorana-McFarland example: s = 4, t = 3, g = 1, and with
/// h = (x1,x2,x3)
///   phi(x) = h          if wt(h) = 1,
///            (x4,x4,x4) if h = 0,
///            (1,0,0)    otherwise.
/// This is the reading under which the published weight enumerators are
/// reproduced exactly. Note phi(0) = 0.
///
/// With `literal` set, the conditions are taken on the weight of the whole
/// vector as the formula is printed:
///   phi(x) = h          if wt(x) <= 1 and h != 0,
///            (x4,x4,x4) if wt(x) = 1 and h = 0,
///            (1,0,0)    otherwise,
/// which gives phi(0) = phi(e_1) = (1,0,0) and different codes.
fn example_mm(field: Field, literal: bool) -> Result<FunctionSpec> {
    let (s, t) = (4, 3);
    let space = VectorSpace::new(field.q(), s)?;
    let phi = space
        .iter(true)
        .map(|x| {
            let head = &x[..3];
            let head_weight = linalg::weight(head);
            let (first, second) = if literal {
                let w = linalg::weight(&x);
                (w <= 1 && head_weight > 0, w == 1 && head_weight == 0)
            } else {
                (head_weight == 1, head_weight == 0)
            };
            if first {
                Vector(head.to_vec())
            } else if second {
                Vector(vec![x[3]; 3])
            } else {
                Vector::unit(3, 1)
            }
        })
        .collect();
    let g = vec![Scalar::ONE; space.size() as usize];
    FunctionSpec::new(
        field,
        s + t,
        Variant::MaioranaMcFarland { s, t, phi, g },
    )
}

/// Binary Maiorana-McFarland function with s = (m+1)/2, t = (m-1)/2, g = 1,
/// phi = 0 outside the weight <= 1 vectors, phi(0) = e_1 and phi(e_i) the
/// binary expansion of i + 1 written least significant bit first.
pub fn dhz_mm(m: usize) -> Result<FunctionSpec> {
    if m < 5 || m % 2 == 0 {
        return Err(Error::Unsupported(format!("odd m >= 5 required, got {m}")));
    }
    let field = Field::prime(2)?;
    let (s, t) = ((m + 1) / 2, (m - 1) / 2);
    let space = VectorSpace::new(2, s)?;
    let phi = space
        .iter(true)
        .map(|beta| match linalg::weight(&beta) {
            0 => Vector::unit(t, 1),
            1 => {
                let i = linalg::support(&beta)[0];
                Vector((0..t).map(|bit| Scalar(((i + 1) >> bit) as u32 & 1)).collect())
            }
            _ => Vector::zeros(t),
        })
        .collect();
    let g = vec![Scalar::ONE; space.size() as usize];
    FunctionSpec::new(field, m, Variant::MaioranaMcFarland { s, t, phi, g })
}
