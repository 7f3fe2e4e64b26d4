//! Young diagrams and tableaux, bracket monomials with Plücker
//! straightening to the semistandard basis, expansion of rectangular
//! tableaux into explicit invariants of binary and ternary forms, and
//! Schur-polynomial decomposition of symmetric characters by leading-term
//! peeling.

use crate::exact::{coeff_vars, invalid, rat_string, Mat, Mono, Poly, Rat, Result, Vars};
use crate::ternary;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

// ---- Diagrams and tableaux ----

/// Partition shape: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<YoungDiagram> {
        if parts.iter().any(|&p| p == 0) {
            return invalid("diagram parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid("diagram parts must be weakly decreasing");
        }
        Ok(YoungDiagram { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

/// A filling of a diagram with positive integer labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        YoungDiagram::new(shape)?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return invalid("tableau entries must be positive");
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram { parts: self.rows.iter().map(|r| r.len() as u32).collect() }
    }

    /// Multiplicity of each label 1..=max.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut out = vec![0u32; max as usize];
        for &e in self.rows.iter().flatten() {
            out[e as usize - 1] += 1;
        }
        out
    }

    pub fn is_semistandard(&self) -> bool {
        for r in &self.rows {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                if self.rows[i][j] <= self.rows[i - 1][j] {
                    return false;
                }
            }
        }
        true
    }

    /// Column c as a vector of labels, top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(c).copied()).collect()
    }
}

enum LabelRule<'a> {
    Weight(&'a [u32]),
    Bounded(u32),
}

fn enumerate_fillings(shape: &YoungDiagram, rule: &LabelRule) -> Vec<Tableau> {
    let parts = shape.parts();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| vec![0u32; p as usize]).collect();
    let mut remaining: Vec<u32> = match rule {
        LabelRule::Weight(w) => w.to_vec(),
        LabelRule::Bounded(_) => Vec::new(),
    };
    let max_label = match rule {
        LabelRule::Weight(w) => w.len() as u32,
        LabelRule::Bounded(b) => *b,
    };
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        rows: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        weighted: bool,
        max_label: u32,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let min_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for label in min_row.max(min_col)..=max_label {
            if weighted {
                if remaining[label as usize - 1] == 0 {
                    continue;
                }
                remaining[label as usize - 1] -= 1;
            }
            rows[r][c] = label;
            rec(cells, k + 1, rows, remaining, weighted, max_label, out);
            rows[r][c] = 0;
            if weighted {
                remaining[label as usize - 1] += 1;
            }
        }
    }
    let weighted = matches!(rule, LabelRule::Weight(_));
    if weighted {
        let total: u64 = remaining.iter().map(|&x| x as u64).sum();
        if total != shape.size() {
            return Vec::new();
        }
    }
    rec(&cells, 0, &mut rows, &mut remaining, weighted, max_label, &mut out);
    out
}

/// All semistandard fillings with exactly the given content
/// (weight[i] = multiplicity of label i+1), in row-major lexicographic order.
pub fn semistandard_tableaux(shape: &YoungDiagram, weight: &[u32]) -> Vec<Tableau> {
    enumerate_fillings(shape, &LabelRule::Weight(weight))
}

/// All semistandard fillings with labels in 1..=max_label, in row-major
/// lexicographic order.
pub fn semistandard_tableaux_bounded(shape: &YoungDiagram, max_label: u32) -> Vec<Tableau> {
    enumerate_fillings(shape, &LabelRule::Bounded(max_label))
}

/// Number of fillings with 1..|λ| each once, strictly increasing along both
/// rows and columns, by direct enumeration.
pub fn standard_tableaux_count(shape: &YoungDiagram) -> u64 {
    let n = shape.size() as usize;
    let parts = shape.parts();
    let mut heights = vec![0usize; parts.len()];
    fn rec(parts: &[u32], heights: &mut Vec<usize>, placed: usize, n: usize) -> u64 {
        if placed == n {
            return 1;
        }
        let mut total = 0;
        for r in 0..parts.len() {
            let c = heights[r];
            if c < parts[r] as usize && (r == 0 || heights[r - 1] > c) {
                heights[r] += 1;
                total += rec(parts, heights, placed + 1, n);
                heights[r] -= 1;
            }
        }
        total
    }
    rec(parts, &mut heights, 0, n)
}

// ---- Bracket expressions ----

/// Linear combination of bracket monomials; a monomial is a multiset of
/// columns, each column a strictly increasing label tuple of fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketExpression {
    k: usize,
    terms: BTreeMap<Vec<Vec<u32>>, Rat>,
}

/// Sort a column ascending; None when a label repeats, else the sign of the
/// sorting permutation.
fn normalize_column(col: &[u32]) -> Option<(Vec<u32>, Rat)> {
    let mut v = col.to_vec();
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, Rat::from_integer(sign.into())))
}

impl BracketExpression {
    pub fn zero(k: usize) -> BracketExpression {
        BracketExpression { k, terms: BTreeMap::new() }
    }

    /// Single normalized monomial; repeated labels in a column give zero.
    pub fn monomial(columns: &[Vec<u32>], coeff: Rat) -> BracketExpression {
        let k = columns.first().map(|c| c.len()).unwrap_or(0);
        let mut out = BracketExpression::zero(k);
        out.add_raw(columns, coeff);
        out
    }

    pub fn column_len(&self) -> usize {
        self.k
    }

    /// Add coeff · Π brackets, normalizing column order and sign.
    pub fn add_raw(&mut self, columns: &[Vec<u32>], coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let mut sign = Rat::one();
        let mut cols = Vec::with_capacity(columns.len());
        for col in columns {
            assert_eq!(col.len(), self.k, "column length mismatch");
            match normalize_column(col) {
                None => return,
                Some((c, s)) => {
                    sign *= s;
                    cols.push(c);
                }
            }
        }
        cols.sort();
        let c = self.terms.entry(cols).or_insert_with(Rat::zero);
        *c += coeff * sign;
        if self.terms.values().any(Rat::is_zero) {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Vec<u32>>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> BracketExpression {
        if c.is_zero() {
            return BracketExpression::zero(self.k);
        }
        BracketExpression {
            k: self.k,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &BracketExpression) -> BracketExpression {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(Rat::zero);
            *e += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn sub(&self, other: &BracketExpression) -> BracketExpression {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Evaluate at a point configuration: label i becomes points[i−1] ∈ ℚ^k,
    /// each column the determinant of its labels' row vectors.
    pub fn evaluate(&self, points: &[Vec<Rat>]) -> Rat {
        let mut total = Rat::zero();
        for (cols, c) in &self.terms {
            let mut prod = c.clone();
            for col in cols {
                let mut m = Mat::zero(self.k, self.k);
                for (r, &label) in col.iter().enumerate() {
                    let p = &points[label as usize - 1];
                    assert_eq!(p.len(), self.k, "point dimension mismatch");
                    for (j, x) in p.iter().enumerate() {
                        *m.at_mut(r, j) = x.clone();
                    }
                }
                prod *= m.det();
            }
            total += prod;
        }
        total
    }
}

impl fmt::Display for BracketExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let compact = self
            .terms
            .keys()
            .flat_map(|cols| cols.iter().flatten())
            .all(|&l| l <= 9);
        for (i, (cols, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{} ", rat_string(&mag))?;
            }
            for col in cols {
                let body: Vec<String> = col.iter().map(|l| l.to_string()).collect();
                write!(f, "[{}]", body.join(if compact { "" } else { "," }))?;
            }
        }
        Ok(())
    }
}

/// Product-of-column-determinants monomial of a rectangular tableau.
pub fn tableau_to_bracket(t: &Tableau) -> Result<BracketExpression> {
    let shape = t.shape();
    if !shape.is_rectangular() {
        return invalid("bracket expansion needs a rectangular tableau");
    }
    let g = shape.parts().first().copied().unwrap_or(0) as usize;
    let cols: Vec<Vec<u32>> = (0..g).map(|c| t.column(c)).collect();
    Ok(BracketExpression::monomial(&cols, Rat::one()))
}

/// A monomial with sorted columns is standard when every row of the column
/// array is weakly increasing left to right.
pub fn is_standard_monomial(columns: &[Vec<u32>]) -> bool {
    for w in columns.windows(2) {
        for r in 0..w[0].len() {
            if w[0][r] > w[1][r] {
                return false;
            }
        }
    }
    true
}

/// First (leftmost pair, topmost row) violation of standardness.
fn first_violation(columns: &[Vec<u32>]) -> Option<(usize, usize)> {
    for i in 0..columns.len().saturating_sub(1) {
        for r in 0..columns[i].len() {
            if columns[i][r] > columns[i + 1][r] {
                return Some((i, r));
            }
        }
    }
    None
}

/// Rewrite to the semistandard basis by repeated subset-exchange syzygies:
/// at a violation in row r between adjacent columns u, v, the shuffle
/// relation Σ ±[u_{<r} X][Y v_{>r}] = 0 over all splittings X ⊔ Y of the
/// k+1 exchanged labels (|X| = k−r) replaces the offending product.
/// Idempotent, and evaluation is preserved at every point configuration.
pub fn pluecker_straighten(b: &BracketExpression) -> BracketExpression {
    let mut out = BracketExpression::zero(b.k);
    let mut queue: Vec<(Vec<Vec<u32>>, Rat)> = b.terms.clone().into_iter().collect();
    while let Some((cols, coeff)) = queue.pop() {
        if coeff.is_zero() {
            continue;
        }
        let (i, r) = match first_violation(&cols) {
            None => {
                out.add_raw(&cols, coeff);
                continue;
            }
            Some(v) => v,
        };
        let u = &cols[i];
        let v = &cols[i + 1];
        let k = u.len();
        // exchanged labels: the tail of u from the violation down, and the
        // head of v through the violation; strictly separated, so distinct
        let x0: Vec<u32> = u[r..].to_vec();
        let y0: Vec<u32> = v[..=r].to_vec();
        let mut pool: Vec<u32> = x0.iter().chain(y0.iter()).copied().collect();
        pool.sort();
        debug_assert!(pool.windows(2).all(|w| w[0] < w[1]));
        let inv_between = |x: &[u32], y: &[u32]| -> u32 {
            let mut n = 0;
            for &a in x {
                for &b in y {
                    if a > b {
                        n += 1;
                    }
                }
            }
            n
        };
        let base_sign = inv_between(&x0, &y0);
        // every splitting with |X| = k − r; the original splitting is solved
        // for in terms of the others
        let xsize = k - r;
        let nsub = pool.len();
        let mut chosen = vec![false; nsub];
        let mut splits: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        fn gen(
            pool: &[u32],
            chosen: &mut Vec<bool>,
            start: usize,
            left: usize,
            splits: &mut Vec<(Vec<u32>, Vec<u32>)>,
        ) {
            if left == 0 {
                let x: Vec<u32> = pool.iter().zip(chosen.iter()).filter(|(_, &c)| c).map(|(&v, _)| v).collect();
                let y: Vec<u32> = pool.iter().zip(chosen.iter()).filter(|(_, &c)| !c).map(|(&v, _)| v).collect();
                splits.push((x, y));
                return;
            }
            if start + left > pool.len() {
                return;
            }
            chosen[start] = true;
            gen(pool, chosen, start + 1, left - 1, splits);
            chosen[start] = false;
            gen(pool, chosen, start + 1, left, splits);
        }
        gen(&pool, &mut chosen, 0, xsize, &mut splits);
        for (x, y) in splits {
            if x == x0 {
                continue;
            }
            let mut nu: Vec<u32> = u[..r].to_vec();
            nu.extend_from_slice(&x);
            let mut nv: Vec<u32> = y.clone();
            nv.extend_from_slice(&v[r + 1..]);
            let mut next = cols.clone();
            next[i] = nu;
            next[i + 1] = nv;
            // relative shuffle sign, then one extra minus from solving
            let rel = inv_between(&x, &y) + base_sign + 1;
            let sign = if rel % 2 == 0 { Rat::one() } else { -Rat::one() };
            // re-normalize columns (sorting signs, zero detection, ordering)
            let mut tmp = BracketExpression::zero(k);
            tmp.add_raw(&next, coeff.clone() * sign);
            for (m, c) in tmp.terms {
                queue.push((m, c));
            }
        }
    }
    out
}

// ---- Symbolic expansion of rectangular tableaux into invariants ----

/// Expand the bracket monomial of T over one symbolic linear form per label
/// and substitute each label's degree-d power monomials by coefficient
/// variables, label by label as soon as its occurrences are exhausted.
/// The result is an invariant of forms of degree d in n+1 variables
/// (n ≤ 2), of degree m in the coefficients.
pub fn symbolic_invariant(t: &Tableau, d: u32, m: u32, n: u32) -> Result<Poly> {
    let shape = t.shape();
    if !shape.is_rectangular() || shape.rows() != n as usize + 1 {
        return invalid(format!("tableau must be a rectangle with {} rows", n + 1));
    }
    let g = shape.parts().first().copied().unwrap_or(0);
    if (m as u64) * (d as u64) != (g as u64) * (n as u64 + 1) {
        return invalid("shape size must be m·d = g·(n+1)");
    }
    let mut content = t.content();
    content.resize(m as usize, 0);
    if content.len() != m as usize || content.iter().any(|&c| c != d) {
        return invalid(format!("each label 1..={m} must appear exactly {d} times"));
    }
    let coeff_names: Vars = match n {
        1 => coeff_vars("a", d, &[]),
        2 => ternary::ternary_coeff_vars(d),
        _ => return invalid("symbolic expansion supports binary and ternary forms"),
    };

    // combined working variables: one (n+1)-block per label, then the
    // output coefficient variables
    let width = n as usize + 1;
    let mut names: Vec<String> = Vec::new();
    for label in 1..=m {
        for j in 0..width {
            names.push(format!("s{label}_{j}"));
        }
    }
    let offset = names.len();
    names.extend(coeff_names.iter().cloned());
    let work: Vars = std::sync::Arc::new(names);

    let mut remaining = vec![d; m as usize];
    let mut acc = Poly::one(&work);
    for c in 0..g as usize {
        let col = t.column(c);
        // determinant of the column's label vectors
        let rows: Vec<Vec<Poly>> = col
            .iter()
            .map(|&label| {
                (0..width)
                    .map(|j| Poly::var(&work, (label as usize - 1) * width + j))
                    .collect()
            })
            .collect();
        acc = acc.mul(&crate::exact::poly_det(&rows));
        for &label in &col {
            remaining[label as usize - 1] -= 1;
        }
        // contract every label whose occurrences are exhausted
        for label in 1..=m as usize {
            if remaining[label - 1] == 0 {
                remaining[label - 1] = u32::MAX; // done marker
                acc = contract_label(&acc, label, width, d, offset, n)?;
            }
        }
    }
    // strip the (now unused) symbolic blocks
    let map: Vec<usize> = (0..coeff_names.len()).map(|i| offset + i).collect();
    let mut out = Poly::zero(&coeff_names);
    for (mono, c) in acc.terms() {
        debug_assert!(mono.0[..offset].iter().all(|&e| e == 0));
        let e: Vec<u32> = map.iter().map(|&i| mono.0[i]).collect();
        out.add_term(Mono(e), c.clone());
    }
    Ok(out)
}

/// Replace the degree-d block of one label by the matching coefficient
/// variable in every term.
fn contract_label(p: &Poly, label: usize, width: usize, d: u32, offset: usize, n: u32) -> Result<Poly> {
    let vs = p.vars().clone();
    let base = (label - 1) * width;
    let mut out = Poly::zero(&vs);
    for (mono, c) in p.terms() {
        let block: Vec<u32> = mono.0[base..base + width].to_vec();
        let total: u32 = block.iter().sum();
        if total != d {
            return invalid("block degree mismatch during contraction");
        }
        let idx = match n {
            1 => block[1] as usize,
            2 => ternary::exp_index(d, [block[0], block[1], block[2]]),
            _ => unreachable!(),
        };
        let mut e = mono.0.clone();
        for slot in &mut e[base..base + width] {
            *slot = 0;
        }
        e[offset + idx] += 1;
        out.add_term(Mono(e), c.clone());
    }
    Ok(out)
}

// ---- Schur decomposition by leading-term peeling ----

/// Schur polynomial s_λ in the given variables, by semistandard enumeration.
pub fn schur_polynomial(partition: &[u32], vs: &Vars) -> Result<Poly> {
    let nvars = vs.len();
    let parts: Vec<u32> = partition.iter().copied().filter(|&p| p > 0).collect();
    if parts.len() > nvars {
        return Ok(Poly::zero(vs));
    }
    if parts.is_empty() {
        return Ok(Poly::one(vs));
    }
    let shape = YoungDiagram::new(parts)?;
    let mut out = Poly::zero(vs);
    for t in semistandard_tableaux_bounded(&shape, nvars as u32) {
        let mut content = t.content();
        content.resize(nvars, 0);
        out.add_term(Mono(content), Rat::one());
    }
    Ok(out)
}

/// Decompose a symmetric polynomial as Σ c_λ s_λ with nonnegative integer
/// multiplicities, by peeling the graded-lex leading term. Errors on
/// non-symmetric input and on inputs that are not nonnegative integer
/// combinations of Schur polynomials.
pub fn schur_decompose(p: &Poly) -> Result<BTreeMap<Vec<u32>, u64>> {
    let vs = p.vars().clone();
    let nvars = vs.len();
    // symmetry check: invariant under adjacent variable transpositions
    for i in 0..nvars.saturating_sub(1) {
        let mut swapped = Poly::zero(&vs);
        for (m, c) in p.terms() {
            let mut e = m.0.clone();
            e.swap(i, i + 1);
            swapped.add_term(Mono(e), c.clone());
        }
        if swapped != *p {
            return invalid("input is not a symmetric polynomial");
        }
    }
    let mut rest = p.clone();
    let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    while let Some((mono, coeff)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut lambda = mono.0.clone();
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return invalid("leading exponent is not a partition");
        }
        if !coeff.is_integer() || coeff.is_negative() {
            return invalid("multiplicity is not a nonnegative integer");
        }
        let c = coeff
            .to_integer()
            .to_u64()
            .ok_or_else(|| crate::exact::Error::InvalidArgument("multiplicity overflow".into()))?;
        let s = schur_polynomial(&lambda, &vs)?;
        rest = rest.sub(&s.scale(&crate::exact::rint(c as i64)));
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        *out.entry(lambda).or_insert(0) += c;
    }
    Ok(out)
}

/// Strip full-height columns: the label of the same representation of the
/// special linear group in nvars variables.
pub fn sl_reduce(partition: &[u32], nvars: usize) -> Vec<u32> {
    if partition.len() < nvars {
        return partition.to_vec();
    }
    let last = *partition.last().unwrap();
    partition
        .iter()
        .map(|&p| p - last)
        .filter(|&p| p > 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary;
    use crate::exact::{rint, vars};
    use crate::hilbert;
    use rand::Rng;
    use rand::SeedableRng;

    fn dia(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn catalan(g: u32) -> u64 {
        let b = crate::exact::binom(2 * g as i64, g as i64);
        let c = b / num_bigint::BigInt::from(g + 1);
        c.to_u64().unwrap()
    }

    fn rnd_points(rng: &mut impl Rng, count: usize, dim: usize) -> Vec<Vec<Rat>> {
        (0..count)
            .map(|_| (0..dim).map(|_| rint(rng.gen_range(-6..=6))).collect())
            .collect()
    }

    #[test]
    fn diagram_validation() {
        assert!(YoungDiagram::new(vec![3, 3, 1]).is_ok());
        assert!(YoungDiagram::new(vec![1, 3]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
        assert!(YoungDiagram::new(vec![]).is_ok());
    }

    #[test]
    fn two_row_weight_two_count() {
        let list = semistandard_tableaux(&dia(&[6, 6]), &[2, 2, 2, 2, 2, 2]);
        assert_eq!(list.len(), 15);
        assert!(list.iter().all(Tableau::is_semistandard));
        assert!(list.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
    }

    #[test]
    fn hook_fillings_with_three_labels() {
        let list = semistandard_tableaux_bounded(&dia(&[2, 1]), 3);
        assert_eq!(list.len(), 8);
        let expect: Vec<Tableau> = vec![
            tab(&[&[1, 1], &[2]]),
            tab(&[&[1, 2], &[2]]),
            tab(&[&[1, 3], &[2]]),
            tab(&[&[1, 1], &[3]]),
            tab(&[&[1, 2], &[3]]),
            tab(&[&[1, 3], &[3]]),
            tab(&[&[2, 2], &[3]]),
            tab(&[&[2, 3], &[3]]),
        ];
        for t in &expect {
            assert!(list.contains(t), "missing {:?}", t);
        }
    }

    #[test]
    fn too_many_rows_has_no_fillings() {
        assert!(semistandard_tableaux_bounded(&dia(&[1, 1, 1]), 2).is_empty());
        assert!(semistandard_tableaux(&dia(&[2, 2, 2]), &[3, 3]).is_empty());
        assert!(semistandard_tableaux_bounded(&dia(&[2, 2, 1]), 2).is_empty());
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux_count(&dia(&[3, 3])), 5);
        assert_eq!(standard_tableaux_count(&dia(&[2, 2])), 2);
        assert_eq!(standard_tableaux_count(&dia(&[7])), 1);
        assert_eq!(standard_tableaux_count(&dia(&[2, 1])), 2);
        assert_eq!(standard_tableaux_count(&dia(&[3, 2])), 5);
    }

    #[test]
    fn catalan_counts_three_ways() {
        for g in 1..=6u32 {
            let weight = vec![1u32; 2 * g as usize];
            let ssyt = semistandard_tableaux(&dia(&[g, g]), &weight).len() as u64;
            assert_eq!(ssyt, catalan(g), "semistandard at g={g}");
            assert_eq!(standard_tableaux_count(&dia(&[g, g])), catalan(g), "standard at g={g}");
        }
    }

    #[test]
    fn bracket_of_rectangular_tableau() {
        let single = tableau_to_bracket(&tab(&[&[1], &[2], &[3]])).unwrap();
        assert_eq!(single.num_terms(), 1);
        let (cols, c) = single.terms().next().unwrap();
        assert_eq!(cols, &vec![vec![1, 2, 3]]);
        assert!(c.is_one());

        let two = tableau_to_bracket(&tab(&[&[1, 1], &[2, 3], &[3, 4]])).unwrap();
        let (cols, c) = two.terms().next().unwrap();
        assert_eq!(cols, &vec![vec![1, 2, 3], vec![1, 3, 4]]);
        assert!(c.is_one());
        assert_eq!(format!("{two}"), "[123][134]");

        let repeated = tableau_to_bracket(&tab(&[&[1, 1], &[1, 3], &[3, 4]])).unwrap();
        assert!(repeated.is_zero());

        assert!(tableau_to_bracket(&tab(&[&[1, 2], &[3]])).is_err());
    }

    #[test]
    fn column_normalization_signs() {
        let m = BracketExpression::monomial(&[vec![2, 1, 3]], Rat::one());
        let (cols, c) = m.terms().next().unwrap();
        assert_eq!(cols, &vec![vec![1, 2, 3]]);
        assert_eq!(*c, rint(-1));
        assert!(BracketExpression::monomial(&[vec![1, 1, 2]], Rat::one()).is_zero());
    }

    #[test]
    fn straighten_two_point_products() {
        // rows (1,2)/(3,4) weakly increase: a fixed point
        let std = BracketExpression::monomial(&[vec![1, 3], vec![2, 4]], Rat::one());
        assert_eq!(pluecker_straighten(&std), std);
        // rows (1,2)/(4,3) violate: rewrites into the standard basis
        let bad = BracketExpression::monomial(&[vec![1, 4], vec![2, 3]], Rat::one());
        let got = pluecker_straighten(&bad);
        let mut expect = BracketExpression::monomial(&[vec![1, 3], vec![2, 4]], Rat::one());
        expect = expect.sub(&BracketExpression::monomial(&[vec![1, 2], vec![3, 4]], Rat::one()));
        assert_eq!(got, expect);
    }

    #[test]
    fn straighten_is_idempotent_and_standard() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(139);
        for _ in 0..30 {
            let k = rng.gen_range(2..=3usize);
            let ncols = rng.gen_range(1..=3usize);
            let cols: Vec<Vec<u32>> =
                (0..ncols).map(|_| (0..k).map(|_| rng.gen_range(1..=6u32)).collect()).collect();
            let b = BracketExpression::monomial(&cols, Rat::one());
            let s = pluecker_straighten(&b);
            for (m, _) in s.terms() {
                assert!(is_standard_monomial(m), "{s}");
            }
            assert_eq!(pluecker_straighten(&s), s);
        }
    }

    #[test]
    fn straighten_kills_syzygies() {
        // (ij)(kl) − (ik)(jl) + (il)(jk) = 0
        let mut s = BracketExpression::monomial(&[vec![1, 2], vec![3, 4]], Rat::one());
        s = s.sub(&BracketExpression::monomial(&[vec![1, 3], vec![2, 4]], Rat::one()));
        s = s.add(&BracketExpression::monomial(&[vec![1, 4], vec![2, 3]], Rat::one()));
        assert!(pluecker_straighten(&s).is_zero());
        // the length-3 alternating exchange over {1,2,3,4} against (5,6)
        let mut z = BracketExpression::zero(3);
        let all = [1u32, 2, 3, 4];
        for (s_idx, &i) in all.iter().enumerate() {
            let rest: Vec<u32> = all.iter().copied().filter(|&x| x != i).collect();
            let sign = if s_idx % 2 == 0 { Rat::one() } else { -Rat::one() };
            z.add_raw(&[rest, vec![i, 5, 6]], sign);
        }
        assert!(pluecker_straighten(&z).is_zero());
    }

    #[test]
    fn straighten_preserves_evaluation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(149);
        for trial in 0..100 {
            let k = if trial % 2 == 0 { 2 } else { 3 };
            let ncols = rng.gen_range(1..=3usize);
            let cols: Vec<Vec<u32>> =
                (0..ncols).map(|_| (0..k).map(|_| rng.gen_range(1..=6u32)).collect()).collect();
            let b = BracketExpression::monomial(&cols, rint(rng.gen_range(-3..=3)));
            let s = pluecker_straighten(&b);
            let pts = rnd_points(&mut rng, 6, k);
            assert_eq!(b.evaluate(&pts), s.evaluate(&pts), "trial {trial}: {b} vs {s}");
        }
    }

    #[test]
    fn symbolic_quartic_catalecticant() {
        let t = tab(&[&[1, 1, 1, 1, 2, 2], &[2, 2, 3, 3, 3, 3]]);
        let f = symbolic_invariant(&t, 4, 3, 1).unwrap();
        let vs = coeff_vars("a", 4, &[]);
        let j = Poly::from_terms(
            &vs,
            vec![
                (vec![0, 0, 3, 0, 0], rint(-1)),
                (vec![0, 1, 1, 1, 0], rint(2)),
                (vec![1, 0, 0, 2, 0], rint(-1)),
                (vec![0, 2, 0, 0, 1], rint(-1)),
                (vec![1, 0, 1, 0, 1], rint(1)),
            ],
        );
        // identifying the three arguments multiplies the normalized form by 6
        assert_eq!(f, j.scale(&rint(6)));
    }

    #[test]
    fn symbolic_quartic_degree_two() {
        let t = tab(&[&[1, 1, 1, 1], &[2, 2, 2, 2]]);
        let f = symbolic_invariant(&t, 4, 2, 1).unwrap();
        let vs = coeff_vars("a", 4, &[]);
        let i = Poly::from_terms(
            &vs,
            vec![
                (vec![1, 0, 0, 0, 1], rint(1)),
                (vec![0, 1, 0, 1, 0], rint(-4)),
                (vec![0, 0, 2, 0, 0], rint(3)),
            ],
        );
        assert_eq!(f, i.scale(&rint(2)));
    }

    #[test]
    fn symbolic_plane_quartic_cubic_invariant() {
        let t = tab(&[&[1, 1, 1, 1], &[2, 2, 2, 2], &[3, 3, 3, 3]]);
        let f = symbolic_invariant(&t, 4, 3, 2).unwrap();
        let kernel = ternary::ternary_invariant_basis(4, 3);
        assert_eq!(f, kernel[0].scale(&rint(6)));
    }

    #[test]
    fn symbolic_rejects_bad_content() {
        let t = tab(&[&[1, 1, 1, 1], &[2, 2, 2, 3]]);
        assert!(symbolic_invariant(&t, 4, 2, 1).is_err());
        let t2 = tab(&[&[1, 1], &[2, 2]]);
        assert!(symbolic_invariant(&t2, 4, 2, 1).is_err());
        let t3 = tab(&[&[1, 1, 1, 1], &[2, 2, 2, 2]]);
        assert!(symbolic_invariant(&t3, 4, 2, 3).is_err());
    }

    #[test]
    fn symbolic_outputs_are_killed_by_lowering_operators() {
        let pairs: Vec<(Tableau, u32, u32)> = vec![
            (tab(&[&[1, 1, 1, 1], &[2, 2, 2, 2]]), 4, 2),
            (tab(&[&[1, 1, 1, 1, 2, 2], &[2, 2, 3, 3, 3, 3]]), 4, 3),
            (tab(&[&[1, 1, 2, 2], &[2, 3, 3, 4], &[3, 4, 4, 1]]), 3, 4),
        ];
        for (t, d, m) in pairs {
            let n = t.shape().rows() as u32 - 1;
            let f = symbolic_invariant(&t, d, m, n).unwrap();
            if n == 1 {
                assert!(binary::apply_d(&f, d).unwrap().is_zero());
                assert!(binary::apply_delta(&f, d).unwrap().is_zero());
            } else {
                assert!(ternary::apply_d1(&f, d).unwrap().is_zero());
                assert!(ternary::apply_d2(&f, d).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn schur_of_schur_is_identity() {
        let vs = vars(&["x", "y", "z"]);
        for lambda in [vec![4u32], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1]] {
            let s = schur_polynomial(&lambda, &vs).unwrap();
            let dec = schur_decompose(&s).unwrap();
            let expect: BTreeMap<Vec<u32>, u64> = [(lambda.clone(), 1)].into_iter().collect();
            assert_eq!(dec, expect, "λ = {lambda:?}");
        }
    }

    /// Character of the k-th symmetric power of the space spanned by the
    /// degree-e monomials in the given variables.
    fn sym_power_character(vs: &Vars, e: u32, k: u32) -> Poly {
        fn monomials(nvars: usize, e: u32) -> Vec<Vec<u32>> {
            if nvars == 1 {
                return vec![vec![e]];
            }
            let mut out = Vec::new();
            for first in 0..=e {
                for mut rest in monomials(nvars - 1, e - first) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }
        let basis = monomials(vs.len(), e);
        // multisets of size k of basis monomials
        fn rec(
            basis: &[Vec<u32>],
            start: usize,
            left: u32,
            cur: &mut Vec<u32>,
            vs: &Vars,
            out: &mut Poly,
        ) {
            if left == 0 {
                out.add_term(Mono(cur.clone()), Rat::one());
                return;
            }
            for i in start..basis.len() {
                let saved = cur.clone();
                for (slot, &x) in cur.iter_mut().zip(basis[i].iter()) {
                    *slot += x;
                }
                rec(basis, i, left - 1, cur, vs, out);
                *cur = saved;
            }
        }
        let mut out = Poly::zero(vs);
        let mut cur = vec![0u32; vs.len()];
        rec(&basis, 0, k, &mut cur, vs, &mut out);
        out
    }

    #[test]
    fn plethysm_decompositions() {
        let v3 = vars(&["x", "y", "z"]);
        let sq_cubics = sym_power_character(&v3, 3, 2);
        let dec = schur_decompose(&sq_cubics).unwrap();
        let expect: BTreeMap<Vec<u32>, u64> =
            [(vec![6], 1), (vec![4, 2], 1)].into_iter().collect();
        assert_eq!(dec, expect);

        let cube_quadrics = sym_power_character(&v3, 2, 3);
        let dec = schur_decompose(&cube_quadrics).unwrap();
        let expect: BTreeMap<Vec<u32>, u64> =
            [(vec![6], 1), (vec![4, 2], 1), (vec![2, 2, 2], 1)].into_iter().collect();
        assert_eq!(dec, expect);

        let v2 = vars(&["x", "y"]);
        let sq_quartics = sym_power_character(&v2, 4, 2);
        let dec = schur_decompose(&sq_quartics).unwrap();
        let expect: BTreeMap<Vec<u32>, u64> =
            [(vec![8], 1), (vec![6, 2], 1), (vec![4, 4], 1)].into_iter().collect();
        assert_eq!(dec, expect);
        // in terms of the special linear group: orders 8, 4 and 0
        let reduced: Vec<Vec<u32>> = dec.keys().map(|l| sl_reduce(l, 2)).collect();
        assert!(reduced.contains(&vec![8]));
        assert!(reduced.contains(&vec![4]));
        assert!(reduced.contains(&vec![]));
    }

    #[test]
    fn schur_decompose_rejects_bad_input() {
        let vs = vars(&["x", "y"]);
        let asym = Poly::var(&vs, 0);
        assert!(schur_decompose(&asym).is_err());
        // symmetric but not a nonnegative Schur combination: x·y − s_(2)
        let mut p = Poly::zero(&vs);
        p.add_term(Mono(vec![1, 1]), Rat::one());
        let s2 = schur_polynomial(&[2], &vs).unwrap();
        assert!(schur_decompose(&p.sub(&s2)).is_err());
    }

    #[test]
    fn weight_count_reciprocity() {
        // monomials of degree g in a₀…a_d of weight p are counted by
        // partitions in a g×d box, so the count survives swapping d and g
        for d in 1..=5u32 {
            for g in 1..=5u32 {
                for p in 0..=(d * g) as i64 {
                    assert_eq!(
                        hilbert::weight_space_dim(d, g, p),
                        hilbert::weight_space_dim(g, d, p),
                        "d={d} g={g} p={p}"
                    );
                }
            }
        }
        for (d, g) in [(4u32, 2u32), (4, 3), (6, 2), (5, 4)] {
            assert_eq!(
                hilbert::binary_invariant_dim(d, g),
                hilbert::binary_invariant_dim(g, d),
                "({d},{g})"
            );
        }
    }

    #[test]
    fn two_row_counts_match_ballot_series() {
        // semistandard 2×(dg/2) tableaux with d labels repeated g times are
        // counted by the middle first difference of (1 + x + … + x^g)^d
        let x = vars(&["x"]);
        for (d, g) in [(2u32, 2u32), (3, 4), (4, 2), (4, 3), (2, 4), (4, 4), (6, 2), (3, 3)] {
            if (d * g) % 2 != 0 {
                continue;
            }
            let cols = d * g / 2;
            let weight = vec![g; d as usize];
            let count = semistandard_tableaux(&dia(&[cols, cols]), &weight).len() as u64;
            let step = Poly::from_terms(&x, (0..=g).map(|i| (vec![i], Rat::one())));
            let pow = step.pow(d);
            let diff = pow.coeff(&[cols]) - pow.coeff(&[cols + 1]);
            assert_eq!(rint(count as i64), diff, "({d},{g})");
        }
    }

    #[test]
    fn garnir_exchange_handles_three_row_cycles() {
        // the two products below swap under single-element exchanges; the
        // subset shuffle resolves both into genuinely standard monomials
        for cols in [vec![vec![1, 4, 6], vec![2, 3, 5]], vec![vec![1, 5, 6], vec![2, 3, 4]]] {
            let b = BracketExpression::monomial(&cols, Rat::one());
            let s = pluecker_straighten(&b);
            assert!(!s.is_zero());
            for (m, _) in s.terms() {
                assert!(is_standard_monomial(m));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(151);
            let pts = rnd_points(&mut rng, 6, 3);
            assert_eq!(b.evaluate(&pts), s.evaluate(&pts));
        }
    }
}
