//! Exact arithmetic substrate: rationals, sparse multivariate polynomials,
//! truncated power series, and rational linear algebra.
//!
//! Monomial order is graded lexicographic (total degree first, then the
//! exponent vector, earlier variables more significant). Every deterministic
//! normalization in the library — echelon pivoting, basis scaling, printed
//! term order — derives from this one order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Rat = num_rational::BigRational;

/// Integer as an exact rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n/d as an exact rational (lowest terms, positive denominator).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("variable {0} not in scope")]
    ForeignVariable(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

/// C(n, k) with the convention that it vanishes for k < 0 or k > n.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as i64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}

/// Shared ordered list of variable names.
pub type Vars = Arc<Vec<String>>;

pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Variables a0..=a_d, optionally followed by extra names (e.g. x, y).
pub fn coeff_vars(prefix: &str, d: u32, extra: &[&str]) -> Vars {
    let mut v: Vec<String> = (0..=d).map(|i| format!("{prefix}{i}")).collect();
    v.extend(extra.iter().map(|s| s.to_string()));
    Arc::new(v)
}

/// Exponent vector, ordered graded-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Mono {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
/// No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(vars: &Vars) -> Poly {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        p.add_term(Mono::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Poly {
        Poly::constant(vars, Rat::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Poly {
        let mut p = Poly::zero(vars);
        p.add_term(Mono::var(vars.len(), i), Rat::one());
        p
    }

    pub fn monomial(vars: &Vars, exps: &[u32], c: Rat) -> Poly {
        assert_eq!(exps.len(), vars.len());
        let mut p = Poly::zero(vars);
        p.add_term(Mono(exps.to_vec()), c);
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Poly {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(Mono(e), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Terms from the graded-lex leading one downward.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(&Mono(exps.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Mono::total).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Poly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable sets");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut r = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut r = Poly::one(&self.vars);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn deriv(&self, i: usize) -> Poly {
        let mut r = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] = e - 1;
                r.add_term(m2, c * rint(e as i64));
            }
        }
        r
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Substitute images[i] for variable i; all images share one variable set.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars());
        let w = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| vars(&[]));
        let mut r = Poly::zero(&w);
        // cache variable powers to avoid recomputing inside each term
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&w), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&w, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            r = r.add(&term);
        }
        r
    }

    /// Re-index into a larger variable set: old variable i becomes map[i].
    pub fn embed(&self, new_vars: &Vars, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars());
        let mut r = Poly::zero(new_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; new_vars.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[map[i]] += exp;
            }
            r.add_term(Mono(e), c.clone());
        }
        r
    }

    /// Scale so the graded-lex leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = serde_json::Map::new();
        for (m, c) in &self.terms {
            let key: Vec<String> = m.0.iter().map(|e| e.to_string()).collect();
            terms.insert(key.join(","), serde_json::Value::String(rat_string(c)));
        }
        serde_json::json!({
            "vars": self.vars.as_ref(),
            "terms": terms,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Poly> {
        let names = v["vars"]
            .as_array()
            .ok_or_else(|| Error::InvalidArgument("missing vars".into()))?;
        let names: Vec<String> = names
            .iter()
            .map(|s| s.as_str().map(|s| s.to_string()))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("vars must be strings".into()))?;
        let vs: Vars = Arc::new(names);
        let terms = v["terms"]
            .as_object()
            .ok_or_else(|| Error::InvalidArgument("missing terms".into()))?;
        let mut p = Poly::zero(&vs);
        for (k, val) in terms {
            let exps: Vec<u32> = k
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidArgument(format!("bad exponent key {k:?}: {e}")))?;
            if exps.len() != vs.len() {
                return invalid(format!("exponent key {k:?} has wrong length"));
            }
            let c = val
                .as_str()
                .ok_or_else(|| Error::InvalidArgument("coefficient must be a string".into()))?;
            p.add_term(Mono(exps), parse_rat(c)?);
        }
        Ok(p)
    }
}

pub fn rat_string(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|e| Error::InvalidArgument(format!("bad rational {s:?}: {e}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|e| Error::InvalidArgument(format!("bad rational {s:?}: {e}")))?;
    if d.is_zero() {
        return invalid(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(rat_string(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Power series truncated at a fixed total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    poly: Poly,
    trunc: u32,
}

impl Series {
    pub fn from_poly(p: &Poly, trunc: u32) -> Series {
        let mut q = Poly::zero(p.vars());
        for (m, c) in p.terms() {
            if m.total() <= trunc as u64 {
                q.add_term(m.clone(), c.clone());
            }
        }
        Series { poly: q, trunc }
    }

    pub fn zero(vars: &Vars, trunc: u32) -> Series {
        Series { poly: Poly::zero(vars), trunc }
    }

    pub fn one(vars: &Vars, trunc: u32) -> Series {
        Series { poly: Poly::one(vars), trunc }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.poly.coeff(exps)
    }

    pub fn add(&self, other: &Series) -> Series {
        assert_eq!(self.trunc, other.trunc, "series truncation mismatch");
        Series::from_poly(&self.poly.add(&other.poly), self.trunc)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series { poly: self.poly.scale(c), trunc: self.trunc }
    }

    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.trunc, other.trunc, "series truncation mismatch");
        let mut r = Poly::zero(self.poly.vars());
        for (m1, c1) in self.poly.terms() {
            for (m2, c2) in other.poly.terms() {
                if m1.total() + m2.total() <= self.trunc as u64 {
                    r.add_term(m1.mul(m2), c1 * c2);
                }
            }
        }
        Series { poly: r, trunc: self.trunc }
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        self.mul(&Series::from_poly(p, self.trunc))
    }

    /// Reciprocal; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Series> {
        let n = self.poly.nvars();
        let c0 = self.poly.coeff(&vec![0; n]);
        if c0.is_zero() {
            return invalid("series with zero constant term has no inverse");
        }
        let inv0 = c0.recip();
        // 1/(c0 + h) = (1/c0) Σ (-h/c0)^k; h is nilpotent up to the truncation
        let mut tail = self.scale(&inv0.clone());
        tail.poly.add_term(Mono::one(n), -Rat::one());
        let neg_tail = tail.scale(&-Rat::one());
        let mut acc = Series::one(self.poly.vars(), self.trunc);
        let mut pow = Series::one(self.poly.vars(), self.trunc);
        for _ in 0..self.trunc {
            pow = pow.mul(&neg_tail);
            if pow.poly.is_zero() {
                break;
            }
            acc = acc.add(&pow);
        }
        Ok(acc.scale(&inv0))
    }
}

/// Σ_{k≥0} monomial^k truncated at total degree `trunc`.
/// The exponent vector must be nonzero.
pub fn series_inverse_factor(vars: &Vars, e: &[u32], trunc: u32) -> Result<Series> {
    assert_eq!(e.len(), vars.len());
    if e.iter().all(|&x| x == 0) {
        return invalid("geometric factor needs a nonconstant monomial");
    }
    let step: u64 = e.iter().map(|&x| x as u64).sum();
    let mut p = Poly::zero(vars);
    let mut k: u64 = 0;
    while k * step <= trunc as u64 {
        let exps: Vec<u32> = e.iter().map(|&x| x * (k as u32)).collect();
        p.add_term(Mono(exps), Rat::one());
        k += 1;
    }
    Ok(Series { poly: p, trunc })
}

/// numerator / Π (1 − monomial_i), truncated.
pub fn rational_series(numerator: &Poly, denom_monomials: &[Vec<u32>], trunc: u32) -> Result<Series> {
    let vs = numerator.vars().clone();
    let mut s = Series::from_poly(numerator, trunc);
    for e in denom_monomials {
        if e.len() != vs.len() {
            return invalid("denominator monomial has wrong arity");
        }
        let f = series_inverse_factor(&vs, e, trunc)?;
        s = s.mul(&f);
    }
    Ok(s)
}

/// Determinant of a small square matrix with polynomial entries,
/// by expansion along the first row (fine up to ~7×7).
pub fn poly_det(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.len() == n), "square matrix required");
    let vs = rows[0][0].vars().clone();
    fn go(rows: &[Vec<Poly>], active: &mut Vec<usize>, row: usize, vs: &Vars) -> Poly {
        if active.is_empty() {
            return Poly::one(vs);
        }
        let mut acc = Poly::zero(vs);
        for k in 0..active.len() {
            let col = active.remove(k);
            let minor = go(rows, active, row + 1, vs);
            let term = rows[row][col].mul(&minor);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            active.insert(k, col);
        }
        acc
    }
    let mut active: Vec<usize> = (0..n).collect();
    go(rows, &mut active, 0, &vs)
}

/// Dense matrix of exact rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Mat::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let a = self.at(p, j).clone();
                    let b = self.at(row, j).clone();
                    *self.at_mut(p, j) = b;
                    *self.at_mut(row, j) = a;
                }
            }
            let inv = self.at(row, col).recip();
            for j in col..self.cols {
                if !self.at(row, j).is_zero() {
                    let v = self.at(row, j) * &inv;
                    *self.at_mut(row, j) = v;
                }
            }
            let pivot_row: Vec<Rat> = (0..self.cols).map(|j| self.at(row, j).clone()).collect();
            let eliminate = |target: &mut [Rat]| {
                let factor = target[col].clone();
                if factor.is_zero() {
                    return;
                }
                for (j, pv) in pivot_row.iter().enumerate().skip(col) {
                    if !pv.is_zero() {
                        let delta = pv * &factor;
                        target[j] -= delta;
                    }
                }
            };
            let cols = self.cols;
            let (above, rest) = self.data.split_at_mut(row * cols);
            let below = &mut rest[cols..];
            crate::par::chunks_for_each(above, cols, &eliminate);
            crate::par::chunks_for_each(below, cols, &eliminate);
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.at(i, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(col, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(col, j) = a;
                }
                det = -det;
            }
            det *= m.at(col, col);
            let inv = m.at(col, col).recip();
            for i in col + 1..n {
                let factor = m.at(i, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = m.at(col, j) * &factor;
                    *m.at_mut(i, j) -= delta;
                }
            }
        }
        det
    }

    /// Unique solution of m·x = b; panics if the system is inconsistent
    /// or underdetermined (callers use this on known-invertible systems).
    pub fn solve_unique(&self, b: &[Rat]) -> Vec<Rat> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        assert!(!pivots.contains(&self.cols), "inconsistent linear system");
        assert_eq!(pivots.len(), self.cols, "underdetermined linear system");
        (0..self.cols).map(|j| aug.at(j, self.cols).clone()).collect()
    }

    /// Basis of the right kernel, in reduced echelon form: leftmost pivot
    /// first, first nonzero entry of each vector equal to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        if self.rows == 0 {
            return (0..self.cols)
                .map(|j| {
                    let mut v = vec![Rat::zero(); self.cols];
                    v[j] = Rat::one();
                    v
                })
                .collect();
        }
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|j| pivot_of_col[*j].is_none()).collect();
        let raw: Vec<Vec<Rat>> = free
            .iter()
            .map(|&j| {
                let mut v = vec![Rat::zero(); self.cols];
                v[j] = Rat::one();
                for (c, pr) in pivot_of_col.iter().enumerate() {
                    if let Some(r) = pr {
                        v[c] = -m.at(*r, j).clone();
                    }
                }
                v
            })
            .collect();
        // canonicalize: echelon-reduce the kernel vectors themselves
        let mut k = Mat::from_rows(raw);
        k.rref();
        let basis: Vec<Vec<Rat>> = (0..k.rows)
            .map(|i| (0..k.cols).map(|j| k.at(i, j).clone()).collect::<Vec<Rat>>())
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        assert_eq!(rank + basis.len(), self.cols, "rank-nullity check failed");
        for v in &basis {
            debug_assert!(self.mul_vec(v).iter().all(Rat::is_zero));
        }
        basis
    }
}
