//! Ternary forms and their SL(3) invariants: the D₁/D₂ kernel method, the
//! cubic invariant of plane quartics with its trilinear polarization, the
//! catalecticant of quartics, the skew contraction operator whose pfaffian
//! detects cubics that are sums of three cubes, and the induced quartic of
//! polar cubics.
//!
//! Convention: f = Σ_{i₀+i₁+i₂=d} (d!/(i₀!i₁!i₂!))·f_{i₀i₁i₂}·x₀^{i₀}x₁^{i₁}x₂^{i₂},
//! so the coefficient f_{i₀i₁i₂} has weight (i₀,i₁,i₂) and invariants of
//! degree g are isobaric of weight (dg/3, dg/3, dg/3).

use crate::exact::{factorial, invalid, poly_det, rint, vars, Error, Mat, Mono, Poly, Rat, Result, Vars};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Exponent triples of degree d in descending lexicographic order.
pub fn exponents(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i0 in (0..=d).rev() {
        for i1 in (0..=(d - i0)).rev() {
            out.push([i0, i1, d - i0 - i1]);
        }
    }
    out
}

/// Position of an exponent triple in the `exponents(d)` ordering.
pub fn exp_index(d: u32, e: [u32; 3]) -> usize {
    debug_assert_eq!(e[0] + e[1] + e[2], d);
    let k = (d - e[0]) as usize;
    k * (k + 1) / 2 + (d - e[0] - e[1]) as usize
}

/// Coefficient variables f_{i₀i₁i₂} in the `exponents(d)` ordering.
pub fn ternary_coeff_vars(d: u32) -> Vars {
    assert!(d <= 9, "single-digit exponent naming");
    let names: Vec<String> = exponents(d)
        .iter()
        .map(|e| format!("f{}{}{}", e[0], e[1], e[2]))
        .collect();
    Arc::new(names)
}

fn multinomial(d: u32, e: [u32; 3]) -> Rat {
    let num = factorial(d);
    let den = factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
    Rat::new(num, den)
}

/// A ternary form of degree d with polynomial coefficients, indexed by
/// `exponents(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    d: u32,
    coeffs: Vec<Poly>,
}

impl TernaryForm {
    pub fn from_coeffs(d: u32, coeffs: Vec<Poly>) -> TernaryForm {
        assert_eq!(coeffs.len(), exponents(d).len());
        let vs = coeffs[0].vars();
        assert!(coeffs.iter().all(|c| c.vars() == vs));
        TernaryForm { d, coeffs }
    }

    /// Generic symbolic form: coefficients are the variables of
    /// `ternary_coeff_vars(d)`.
    pub fn generic(d: u32) -> TernaryForm {
        let vs = ternary_coeff_vars(d);
        let coeffs = (0..vs.len()).map(|i| Poly::var(&vs, i)).collect();
        TernaryForm { d, coeffs }
    }

    /// Numeric form over the empty variable set.
    pub fn from_rats(d: u32, vals: &[Rat]) -> TernaryForm {
        assert_eq!(vals.len(), exponents(d).len());
        let vs = vars(&[]);
        let coeffs = vals.iter().map(|v| Poly::constant(&vs, v.clone())).collect();
        TernaryForm { d, coeffs }
    }

    /// (l₀x₀ + l₁x₁ + l₂x₂)^d: coefficients are the monomials l^{i₀i₁i₂}.
    pub fn linear_power(l: &[Rat; 3], d: u32) -> TernaryForm {
        let vals: Vec<Rat> = exponents(d)
            .iter()
            .map(|e| {
                let mut v = Rat::one();
                for (c, &k) in l.iter().zip(e.iter()) {
                    for _ in 0..k {
                        v *= c;
                    }
                }
                v
            })
            .collect();
        TernaryForm::from_rats(d, &vals)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coeff(&self, e: [u32; 3]) -> &Poly {
        &self.coeffs[exp_index(self.d, e)]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn scalar_vars(&self) -> &Vars {
        self.coeffs[0].vars()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &TernaryForm) -> TernaryForm {
        assert_eq!(self.d, other.d);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        TernaryForm { d: self.d, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> TernaryForm {
        TernaryForm { d: self.d, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Rational coefficient vector; panics unless every coefficient is constant.
    pub fn rat_coeffs(&self) -> Vec<Rat> {
        let zero = vec![0u32; self.scalar_vars().len()];
        self.coeffs
            .iter()
            .map(|p| {
                assert!(p.total_degree() == 0, "coefficient is not constant");
                p.coeff(&zero)
            })
            .collect()
    }

    /// Value at a rational point (coefficients stay polynomial).
    pub fn eval(&self, pt: &[Rat; 3]) -> Poly {
        let mut out = Poly::zero(self.scalar_vars());
        for (e, c) in exponents(self.d).into_iter().zip(&self.coeffs) {
            let mut s = multinomial(self.d, e);
            for (x, &k) in pt.iter().zip(e.iter()) {
                for _ in 0..k {
                    s *= x;
                }
            }
            out = out.add(&c.scale(&s));
        }
        out
    }

    /// Substitute polynomial coordinates (numeric coefficients only):
    /// the result lives over the variable set of the substituted polynomials.
    pub fn eval_at_polys(&self, xs: &[Poly; 3]) -> Poly {
        let vs = xs[0].vars().clone();
        assert!(xs.iter().all(|p| *p.vars() == vs));
        let vals = self.rat_coeffs();
        let mut out = Poly::zero(&vs);
        for (e, c) in exponents(self.d).into_iter().zip(&vals) {
            let mut term = Poly::constant(&vs, multinomial(self.d, e) * c);
            for (x, &k) in xs.iter().zip(e.iter()) {
                if k > 0 {
                    term = term.mul(&x.pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }
}

// ---- Weight spaces and the lowering operators ----

/// Degree-g monomials in the coefficients of the ternary d-ic whose total
/// weight is `w`, in descending graded-lex order.
pub fn ternary_weighted_monomials(d: u32, g: u32, w: [i64; 3]) -> Vec<Mono> {
    let exps = exponents(d);
    let n = exps.len();
    if w.iter().any(|&x| x < 0) || w.iter().sum::<i64>() != (d as i64) * (g as i64) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut counts = vec![0u32; n];
    fn rec(
        exps: &[[u32; 3]],
        start: usize,
        slots: u32,
        rem: [i64; 3],
        counts: &mut Vec<u32>,
        out: &mut Vec<Mono>,
    ) {
        if slots == 0 {
            if rem == [0, 0, 0] {
                out.push(Mono(counts.clone()));
            }
            return;
        }
        for i in start..exps.len() {
            let e = exps[i];
            if (0..3).any(|c| rem[c] < e[c] as i64) {
                continue;
            }
            counts[i] += 1;
            rec(
                exps,
                i,
                slots - 1,
                [rem[0] - e[0] as i64, rem[1] - e[1] as i64, rem[2] - e[2] as i64],
                counts,
                out,
            );
            counts[i] -= 1;
        }
    }
    rec(&exps, 0, g, w, &mut counts, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Isobaric slice of weight (dg/3, dg/3, dg/3); empty when 3 ∤ dg.
pub struct TernaryWeightSpace {
    pub d: u32,
    pub g: u32,
    pub vars: Vars,
    pub basis: Vec<Mono>,
}

pub fn ternary_isobaric_monomials(d: u32, g: u32) -> TernaryWeightSpace {
    let dg = (d as i64) * (g as i64);
    let vars = ternary_coeff_vars(d);
    let basis = if dg % 3 == 0 {
        let p = dg / 3;
        ternary_weighted_monomials(d, g, [p, p, p])
    } else {
        Vec::new()
    };
    TernaryWeightSpace { d, g, vars, basis }
}

fn check_scope(p: &Poly, d: u32) -> Result<()> {
    let n = exponents(d).len();
    if p.nvars() != n {
        let name = p
            .vars()
            .get(n)
            .cloned()
            .unwrap_or_else(|| format!("(expected {} variables, got {})", n, p.nvars()));
        return Err(Error::ForeignVariable(name));
    }
    Ok(())
}

fn apply_shift(p: &Poly, d: u32, from_component: usize, to_component: usize) -> Result<Poly> {
    check_scope(p, d)?;
    let exps = exponents(d);
    let vs = p.vars().clone();
    let mut out = Poly::zero(&vs);
    for (m, c) in p.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let tri = exps[i];
            let mult = tri[from_component];
            if mult == 0 {
                continue;
            }
            let mut up = tri;
            up[from_component] -= 1;
            up[to_component] += 1;
            let j = exp_index(d, up);
            let mut e2 = m.0.clone();
            e2[i] -= 1;
            e2[j] += 1;
            out.add_term(Mono(e2), c * rint(mult as i64 * e as i64));
        }
    }
    Ok(out)
}

/// D₁ = Σ i₁·f_{i₀+1,i₁−1,i₂}·∂/∂f_{i₀i₁i₂}: adds (1,−1,0) to the weight.
pub fn apply_d1(p: &Poly, d: u32) -> Result<Poly> {
    apply_shift(p, d, 1, 0)
}

/// D₂ = Σ i₂·f_{i₀,i₁+1,i₂−1}·∂/∂f_{i₀i₁i₂}: adds (0,1,−1) to the weight.
pub fn apply_d2(p: &Poly, d: u32) -> Result<Poly> {
    apply_shift(p, d, 2, 1)
}

fn operator_matrix(
    d: u32,
    cols: &[Mono],
    rows: &[Mono],
    op: impl Fn(&Poly, u32) -> Result<Poly> + Sync,
    vs: &Vars,
) -> Mat {
    let row_index: std::collections::HashMap<&Mono, usize> =
        rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let images: Vec<Vec<(usize, Rat)>> = crate::par::map_collect(cols.to_vec(), |m| {
        let p = Poly::from_terms(vs, [(m.0.clone(), Rat::one())]);
        let im = op(&p, d).expect("monomial in scope");
        im.terms()
            .map(|(mm, c)| (*row_index.get(mm).expect("image stays in the shifted weight space"), c.clone()))
            .collect()
    });
    let mut mat = Mat::zero(rows.len(), cols.len());
    for (j, col) in images.into_iter().enumerate() {
        for (i, c) in col {
            *mat.at_mut(i, j) = c;
        }
    }
    mat
}

/// Basis of the degree-g SL(3) invariants of the ternary d-ic: the joint
/// kernel of D₁ and D₂ on the isobaric slice, normalized with graded-lex
/// leading coefficient 1.
pub fn ternary_invariant_basis(d: u32, g: u32) -> Vec<Poly> {
    let space = ternary_isobaric_monomials(d, g);
    if space.basis.is_empty() {
        return Vec::new();
    }
    let p = (d as i64) * (g as i64) / 3;
    let rows1 = ternary_weighted_monomials(d, g, [p + 1, p - 1, p]);
    let rows2 = ternary_weighted_monomials(d, g, [p, p + 1, p - 1]);
    let m1 = operator_matrix(d, &space.basis, &rows1, apply_d1, &space.vars);
    let m2 = operator_matrix(d, &space.basis, &rows2, apply_d2, &space.vars);
    let mut stacked = Mat::zero(rows1.len() + rows2.len(), space.basis.len());
    for i in 0..rows1.len() {
        for j in 0..space.basis.len() {
            *stacked.at_mut(i, j) = m1.at(i, j).clone();
        }
    }
    for i in 0..rows2.len() {
        for j in 0..space.basis.len() {
            *stacked.at_mut(rows1.len() + i, j) = m2.at(i, j).clone();
        }
    }
    stacked
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut poly = Poly::zero(&space.vars);
            for (coef, m) in v.into_iter().zip(&space.basis) {
                poly.add_term(m.clone(), coef);
            }
            poly
        })
        .collect()
}

// ---- The cubic invariant of plane quartics and its trilinear form ----

/// det(b⁽¹⁾, b⁽²⁾, b⁽³⁾)⁴ over nine symbolic vector entries, row-major.
fn det_fourth_power() -> Poly {
    let vs = vars(&["b10", "b11", "b12", "b20", "b21", "b22", "b30", "b31", "b32"]);
    let rows: Vec<Vec<Poly>> = (0..3)
        .map(|r| (0..3).map(|c| Poly::var(&vs, 3 * r + c)).collect())
        .collect();
    poly_det(&rows).pow(4)
}

/// Trilinear cubic invariant of three quartics: expand det⁴ over three
/// symbolic linear forms and substitute the power monomials of each slot by
/// the corresponding argument's coefficients. On triples of fourth powers of
/// linear forms it evaluates to det(a,b,c)⁴ exactly.
pub fn trilinear_a(f: &TernaryForm, g: &TernaryForm, h: &TernaryForm) -> Result<Poly> {
    for q in [f, g, h] {
        if q.degree() != 4 {
            return Err(Error::DegreeMismatch { expected: 4, got: q.degree() as usize });
        }
    }
    assert_eq!(f.scalar_vars(), g.scalar_vars());
    assert_eq!(f.scalar_vars(), h.scalar_vars());
    let expansion = det_fourth_power();
    let mut out = Poly::zero(f.scalar_vars());
    for (m, c) in expansion.terms() {
        let a1 = [m.0[0], m.0[1], m.0[2]];
        let a2 = [m.0[3], m.0[4], m.0[5]];
        let a3 = [m.0[6], m.0[7], m.0[8]];
        let term = f.coeff(a1).mul(g.coeff(a2)).mul(h.coeff(a3)).scale(c);
        out = out.add(&term);
    }
    Ok(out)
}

/// Basis (p, q) of the line l = 0, normalized so that det(p, q, x) = l(x).
pub fn line_basis(l: &[Rat; 3]) -> Result<([Rat; 3], [Rat; 3])> {
    let k = match l.iter().position(|c| !c.is_zero()) {
        Some(k) => k,
        None => return invalid("zero linear form has no line"),
    };
    let (a, b) = ((k + 1) % 3, (k + 2) % 3);
    let mut p = [Rat::zero(), Rat::zero(), Rat::zero()];
    p[a] = l[k].clone();
    p[k] = -l[a].clone();
    let mut q = [Rat::zero(), Rat::zero(), Rat::zero()];
    q[b] = Rat::one();
    q[k] = -l[b].clone() / l[k].clone();
    Ok((p, q))
}

/// Restriction of a rational-coefficient form to the line l = 0, as a binary
/// form in the normalized basis from `line_basis`.
pub fn restrict_to_line(f: &TernaryForm, l: &[Rat; 3]) -> Result<crate::binary::BinaryForm> {
    let (p, q) = line_basis(l)?;
    let st = vars(&["s", "t"]);
    let s = Poly::var(&st, 0);
    let t = Poly::var(&st, 1);
    let xs: [Poly; 3] = std::array::from_fn(|i| {
        s.scale(&p[i]).add(&t.scale(&q[i]))
    });
    let restricted = f.eval_at_polys(&xs);
    Ok(crate::binary::BinaryForm::from_xy_poly(&restricted, f.degree(), &vars(&[])))
}

// ---- Catalecticant of quartics ----

/// Contraction matrix of a quartic on the degree-two monomials, with rows and
/// columns indexed by `exponents(2)`; entry (α, β) is the coefficient at α+β.
pub struct Catalecticant {
    pub entries: Vec<Vec<Poly>>,
    pub det: Poly,
}

pub fn clebsch_catalecticant(f: &TernaryForm) -> Catalecticant {
    assert_eq!(f.degree(), 4, "catalecticant pairing needs a quartic");
    let quad = exponents(2);
    let entries: Vec<Vec<Poly>> = quad
        .iter()
        .map(|a| {
            quad.iter()
                .map(|b| f.coeff([a[0] + b[0], a[1] + b[1], a[2] + b[2]]).clone())
                .collect()
        })
        .collect();
    let det = poly_det(&entries);
    Catalecticant { entries, det }
}

// ---- The skew contraction operator on trace-free endomorphisms ----

/// Fixed basis of the trace-free 3×3 matrices: the six elementary
/// off-diagonal units, then diag(1,−1,0) and diag(0,1,−1).
pub fn end0_basis() -> Vec<[[i64; 3]; 3]> {
    let mut out = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
        let mut m = [[0i64; 3]; 3];
        m[i][j] = 1;
        out.push(m);
    }
    let mut h1 = [[0i64; 3]; 3];
    h1[0][0] = 1;
    h1[1][1] = -1;
    out.push(h1);
    let mut h2 = [[0i64; 3]; 3];
    h2[1][1] = 1;
    h2[2][2] = -1;
    out.push(h2);
    out
}

fn mat_apply(m: &[[i64; 3]; 3], v: &[Poly; 3]) -> [Poly; 3] {
    std::array::from_fn(|r| {
        let mut acc = Poly::zero(v[0].vars());
        for c in 0..3 {
            if m[r][c] != 0 {
                acc = acc.add(&v[c].scale(&rint(m[r][c])));
            }
        }
        acc
    })
}

/// det(Mv, v, Nv) as a cubic in the symbolic point v.
fn pairing_cubic(m: &[[i64; 3]; 3], n: &[[i64; 3]; 3]) -> Poly {
    let vv = vars(&["v0", "v1", "v2"]);
    let v: [Poly; 3] = std::array::from_fn(|i| Poly::var(&vv, i));
    let mv = mat_apply(m, &v);
    let nv = mat_apply(n, &v);
    let rows = vec![mv.to_vec(), v.to_vec(), nv.to_vec()];
    poly_det(&rows)
}

/// 8×8 matrix of the contraction operator of a cubic on `end0_basis`,
/// obtained from det(Mv, v, Nv) by the power-to-coefficient substitution
/// v^{i₀i₁i₂} ↦ f_{i₀i₁i₂}. Skew-symmetric for every cubic.
pub fn aronhold_matrix(f: &TernaryForm) -> Vec<Vec<Poly>> {
    assert_eq!(f.degree(), 3, "contraction operator is defined for cubics");
    let basis = end0_basis();
    let vs = f.scalar_vars();
    let n = basis.len();
    let mut rows = vec![vec![Poly::zero(vs); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let cubic = pairing_cubic(&basis[i], &basis[j]);
            let mut entry = Poly::zero(vs);
            for (m, c) in cubic.terms() {
                entry = entry.add(&f.coeff([m.0[0], m.0[1], m.0[2]]).scale(c));
            }
            rows[j][i] = entry.neg();
            rows[i][j] = entry;
        }
    }
    rows
}

/// Pfaffian of an even-size skew matrix by recursive first-row expansion.
pub fn pfaffian(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    assert!(n % 2 == 0, "pfaffian needs even size");
    assert!(rows.iter().all(|r| r.len() == n));
    let vs = if n == 0 { vars(&[]) } else { rows[0][0].vars().clone() };
    fn rec(rows: &[Vec<Poly>], idx: &[usize], vs: &Vars) -> Poly {
        if idx.is_empty() {
            return Poly::one(vs);
        }
        let first = idx[0];
        let mut acc = Poly::zero(vs);
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let entry = &rows[first][j];
            if entry.is_zero() {
                continue;
            }
            let sub: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != 0 && p != pos)
                .map(|(_, &v)| v)
                .collect();
            let term = entry.mul(&rec(rows, &sub, vs));
            if pos % 2 == 1 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..n).collect();
    rec(rows, &idx, &vs)
}

/// Pfaffian of the contraction operator: a degree-4 invariant of plane
/// cubics vanishing exactly on sums of three cubes.
pub fn aronhold_pfaffian(f: &TernaryForm) -> Poly {
    pfaffian(&aronhold_matrix(f))
}

// ---- Polar cubics and the induced quartic ----

/// First polar of a quartic at a rational point: the cubic with coefficients
/// 4·Σᵢ xᵢ f_{δ+eᵢ} (the directional derivative Σᵢ xᵢ ∂f/∂xᵢ).
pub fn polar_cubic(f: &TernaryForm, x: &[Rat; 3]) -> TernaryForm {
    assert_eq!(f.degree(), 4, "polar cubic needs a quartic");
    let vs = f.scalar_vars().clone();
    let coeffs = exponents(3)
        .into_iter()
        .map(|delta| {
            let mut acc = Poly::zero(&vs);
            for i in 0..3 {
                let mut up = delta;
                up[i] += 1;
                acc = acc.add(&f.coeff(up).scale(&x[i]));
            }
            acc.scale(&rint(4))
        })
        .collect();
    TernaryForm::from_coeffs(3, coeffs)
}

/// The quartic x ↦ pfaffian of the polar cubic of f at x, over the scalar
/// variables of f extended by the point coordinates x0, x1, x2.
pub fn scorza_quartic(f: &TernaryForm) -> Poly {
    assert_eq!(f.degree(), 4, "polar construction needs a quartic");
    let base = f.scalar_vars();
    let mut names: Vec<String> = base.as_ref().clone();
    for n in ["x0", "x1", "x2"] {
        assert!(!names.iter().any(|v| v == n), "point coordinates collide with scalars");
        names.push(n.into());
    }
    let w: Vars = Arc::new(names);
    let nb = base.len();
    let map: Vec<usize> = (0..nb).collect();
    let xs: [Poly; 3] = std::array::from_fn(|i| Poly::var(&w, nb + i));
    let coeffs: Vec<Poly> = exponents(3)
        .into_iter()
        .map(|delta| {
            let mut acc = Poly::zero(&w);
            for i in 0..3 {
                let mut up = delta;
                up[i] += 1;
                acc = acc.add(&f.coeff(up).embed(&w, &map).mul(&xs[i]));
            }
            acc.scale(&rint(4))
        })
        .collect();
    let cubic = TernaryForm::from_coeffs(3, coeffs);
    aronhold_pfaffian(&cubic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::apolarity_pairing;
    use crate::exact::rat;
    use crate::hilbert;
    use rand::Rng;
    use rand::SeedableRng;

    /// The 23-term degree-3 invariant of plane quartics, verbatim.
    fn quartic_cubic_invariant() -> Poly {
        let vs = ternary_coeff_vars(4);
        let term = |c: i64, parts: [[u32; 3]; 3]| {
            let mut e = vec![0u32; vs.len()];
            for p in parts {
                e[exp_index(4, p)] += 1;
            }
            (e, rint(c))
        };
        Poly::from_terms(
            &vs,
            vec![
                term(1, [[4, 0, 0], [0, 4, 0], [0, 0, 4]]),
                term(3, [[2, 2, 0], [2, 2, 0], [0, 0, 4]]),
                term(3, [[2, 0, 2], [2, 0, 2], [0, 4, 0]]),
                term(3, [[4, 0, 0], [0, 2, 2], [0, 2, 2]]),
                term(12, [[2, 0, 2], [1, 2, 1], [1, 2, 1]]),
                term(12, [[2, 2, 0], [1, 1, 2], [1, 1, 2]]),
                term(12, [[0, 2, 2], [2, 1, 1], [2, 1, 1]]),
                term(6, [[2, 2, 0], [2, 0, 2], [0, 2, 2]]),
                term(-4, [[3, 0, 1], [1, 0, 3], [0, 4, 0]]),
                term(-4, [[4, 0, 0], [0, 3, 1], [0, 1, 3]]),
                term(-4, [[3, 1, 0], [1, 3, 0], [0, 0, 4]]),
                term(4, [[3, 1, 0], [1, 0, 3], [0, 3, 1]]),
                term(4, [[3, 0, 1], [1, 3, 0], [0, 1, 3]]),
                term(-12, [[2, 0, 2], [1, 3, 0], [1, 1, 2]]),
                term(-12, [[2, 2, 0], [1, 2, 1], [1, 0, 3]]),
                term(-12, [[2, 1, 1], [2, 0, 2], [0, 3, 1]]),
                term(-12, [[3, 0, 1], [1, 2, 1], [0, 2, 2]]),
                term(-12, [[3, 1, 0], [1, 1, 2], [0, 2, 2]]),
                term(-12, [[2, 2, 0], [2, 1, 1], [0, 1, 3]]),
                term(-12, [[2, 1, 1], [1, 2, 1], [1, 1, 2]]),
                term(12, [[3, 1, 0], [1, 2, 1], [0, 1, 3]]),
                term(12, [[2, 1, 1], [1, 3, 0], [1, 0, 3]]),
                term(12, [[3, 0, 1], [1, 1, 2], [0, 3, 1]]),
            ],
        )
    }

    fn rnd_rat(rng: &mut impl Rng) -> Rat {
        rat(rng.gen_range(-4..=4), rng.gen_range(1..=2))
    }

    fn rnd_quartic(rng: &mut impl Rng) -> TernaryForm {
        let vals: Vec<Rat> = (0..15).map(|_| rnd_rat(rng)).collect();
        TernaryForm::from_rats(4, &vals)
    }

    fn rnd_line(rng: &mut impl Rng) -> [Rat; 3] {
        loop {
            let l: [Rat; 3] = std::array::from_fn(|_| rint(rng.gen_range(-4..=4)));
            if l.iter().any(|c| !c.is_zero()) {
                return l;
            }
        }
    }

    fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
        [
            a[1].clone() * &b[2] - a[2].clone() * &b[1],
            a[2].clone() * &b[0] - a[0].clone() * &b[2],
            a[0].clone() * &b[1] - a[1].clone() * &b[0],
        ]
    }

    fn constant(p: &Poly) -> Rat {
        assert!(p.total_degree() == 0);
        p.coeff(&vec![0; p.nvars()])
    }

    #[test]
    fn exponent_order_and_indexing() {
        let e = exponents(2);
        assert_eq!(e, vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]);
        for d in 0..=5u32 {
            for (i, t) in exponents(d).iter().enumerate() {
                assert_eq!(exp_index(d, *t), i);
            }
        }
        assert_eq!(*ternary_coeff_vars(4).first().unwrap(), "f400");
        assert_eq!(*ternary_coeff_vars(4).last().unwrap(), "f004");
    }

    #[test]
    fn isobaric_counts() {
        assert_eq!(ternary_isobaric_monomials(4, 3).basis.len(), 23);
        assert_eq!(crate::exact::binom(17, 3), 680.into());
        assert_eq!(ternary_isobaric_monomials(3, 6).basis.len(), 103);
        assert_eq!(crate::exact::binom(15, 6), 5005.into());
        assert_eq!(ternary_isobaric_monomials(3, 2).basis.len(), 4);
        assert!(ternary_isobaric_monomials(4, 2).basis.is_empty());
    }

    #[test]
    fn lowering_operator_examples() {
        let vs = ternary_coeff_vars(4);
        let f040 = Poly::var(&vs, exp_index(4, [0, 4, 0]));
        let f130 = Poly::var(&vs, exp_index(4, [1, 3, 0]));
        assert_eq!(apply_d1(&f040, 4).unwrap(), f130.scale(&rint(4)));
        let f400 = Poly::var(&vs, exp_index(4, [4, 0, 0]));
        assert!(apply_d2(&f400, 4).unwrap().is_zero());
        let alien = Poly::var(&vars(&["g1", "g2"]), 0);
        assert!(matches!(apply_d1(&alien, 4), Err(Error::ForeignVariable(_))));
    }

    #[test]
    fn plane_quartic_cubic_invariant_is_pinned() {
        let basis = ternary_invariant_basis(4, 3);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], quartic_cubic_invariant());
        assert!(apply_d1(&basis[0], 4).unwrap().is_zero());
        assert!(apply_d2(&basis[0], 4).unwrap().is_zero());
    }

    #[test]
    fn conic_determinant_is_the_degree_three_invariant() {
        let basis = ternary_invariant_basis(2, 3);
        assert_eq!(basis.len(), 1);
        let vs = ternary_coeff_vars(2);
        let v = |e: [u32; 3]| Poly::var(&vs, exp_index(2, e));
        let rows = vec![
            vec![v([2, 0, 0]), v([1, 1, 0]), v([1, 0, 1])],
            vec![v([1, 1, 0]), v([0, 2, 0]), v([0, 1, 1])],
            vec![v([1, 0, 1]), v([0, 1, 1]), v([0, 0, 2])],
        ];
        assert_eq!(basis[0], poly_det(&rows));
    }

    #[test]
    fn aronhold_kernel_element() {
        let basis = ternary_invariant_basis(3, 4);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].num_terms(), 25);
    }

    #[test]
    fn no_invariants_in_low_degree() {
        assert!(ternary_invariant_basis(3, 2).is_empty());
        assert!(ternary_invariant_basis(3, 3).is_empty());
        assert!(ternary_invariant_basis(4, 2).is_empty());
    }

    #[test]
    fn kernel_dims_match_six_term_counts() {
        for d in 1..=4u32 {
            for g in 1..=6u32 {
                if (d * g) % 3 != 0 {
                    continue;
                }
                if d == 4 && g == 6 {
                    continue; // covered separately below at a larger size
                }
                assert_eq!(
                    ternary_invariant_basis(d, g).len() as u64,
                    hilbert::bedratyuk_invariant_dim(d, g),
                    "({d},{g})"
                );
            }
        }
    }

    #[test]
    fn kernel_dim_matches_six_term_count_for_quartic_sextics() {
        assert_eq!(
            ternary_invariant_basis(4, 6).len() as u64,
            hilbert::bedratyuk_invariant_dim(4, 6)
        );
    }

    #[test]
    fn trilinear_on_fourth_powers_is_det_power() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for _ in 0..10 {
            let a = rnd_line(&mut rng);
            let b = rnd_line(&mut rng);
            let c = rnd_line(&mut rng);
            let det = constant(&poly_det(&vec![
                a.iter().map(|x| Poly::constant(&vars(&[]), x.clone())).collect(),
                b.iter().map(|x| Poly::constant(&vars(&[]), x.clone())).collect(),
                c.iter().map(|x| Poly::constant(&vars(&[]), x.clone())).collect(),
            ]));
            let val = trilinear_a(
                &TernaryForm::linear_power(&a, 4),
                &TernaryForm::linear_power(&b, 4),
                &TernaryForm::linear_power(&c, 4),
            )
            .unwrap();
            let mut expect = Rat::one();
            for _ in 0..4 {
                expect *= &det;
            }
            assert_eq!(constant(&val), expect);
        }
    }

    #[test]
    fn trilinear_full_symmetry() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(73);
        let f = rnd_quartic(&mut rng);
        let g = rnd_quartic(&mut rng);
        let h = rnd_quartic(&mut rng);
        let base = trilinear_a(&f, &g, &h).unwrap();
        for (x, y, z) in [(&f, &h, &g), (&g, &f, &h), (&g, &h, &f), (&h, &f, &g), (&h, &g, &f)] {
            assert_eq!(trilinear_a(x, y, z).unwrap(), base);
        }
    }

    #[test]
    fn trilinear_diagonal_is_the_kernel_invariant() {
        // the determinant expansion visits each diagonal product once per
        // argument ordering, so restitution carries the factor 3! = 6
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(79);
        let inv = quartic_cubic_invariant();
        for _ in 0..5 {
            let f = rnd_quartic(&mut rng);
            let direct = constant(&trilinear_a(&f, &f, &f).unwrap());
            assert_eq!(direct, inv.eval(&f.rat_coeffs()) * rint(6));
        }
    }

    #[test]
    fn polarization_route_agrees() {
        // independent route: the mixed coefficient of the invariant at
        // f+g+h by inclusion–exclusion is the unique symmetric trilinear
        // form restituting to 6·invariant, which is exactly trilinear_a
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(83);
        let inv = quartic_cubic_invariant();
        let ev = |f: &TernaryForm| inv.eval(&f.rat_coeffs());
        for _ in 0..5 {
            let f = rnd_quartic(&mut rng);
            let g = rnd_quartic(&mut rng);
            let h = rnd_quartic(&mut rng);
            let mixed = ev(&f.add(&g).add(&h)) - ev(&f.add(&g)) - ev(&f.add(&h)) - ev(&g.add(&h))
                + ev(&f)
                + ev(&g)
                + ev(&h);
            let direct = constant(&trilinear_a(&f, &g, &h).unwrap());
            assert_eq!(mixed, direct);
        }
    }

    #[test]
    fn trilinear_degree_check() {
        let f = TernaryForm::generic(3);
        let g = TernaryForm::generic(3);
        let h = TernaryForm::generic(3);
        assert!(matches!(
            trilinear_a(&f, &g, &h),
            Err(Error::DegreeMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn trilinear_detects_point_incidence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(89);
        for _ in 0..10 {
            let l1 = rnd_line(&mut rng);
            let l2 = rnd_line(&mut rng);
            let p = cross(&l1, &l2);
            if p.iter().all(|c| c.is_zero()) {
                continue; // parallel draws: skip, the point is not defined
            }
            let g = rnd_quartic(&mut rng);
            let gp = constant(&g.eval(&p));
            // move one coefficient so that the form passes through p
            let k = (0..3).find(|&i| !p[i].is_zero()).unwrap();
            let mut vals = g.rat_coeffs();
            let mut e = [0u32; 3];
            e[k] = 4;
            let mut pk4 = Rat::one();
            for _ in 0..4 {
                pk4 *= &p[k];
            }
            vals[exp_index(4, e)] -= gp.clone() / &pk4;
            let f = TernaryForm::from_rats(4, &vals);
            assert!(constant(&f.eval(&p)).is_zero());
            let q1 = TernaryForm::linear_power(&l1, 4);
            let q2 = TernaryForm::linear_power(&l2, 4);
            assert!(constant(&trilinear_a(&q1, &q2, &f).unwrap()).is_zero());
            if !gp.is_zero() {
                assert!(!constant(&trilinear_a(&q1, &q2, &g).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn trilinear_line_argument_is_restricted_apolarity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        for _ in 0..20 {
            let f = rnd_quartic(&mut rng);
            let g = rnd_quartic(&mut rng);
            let l = rnd_line(&mut rng);
            let lhs = constant(&trilinear_a(&f, &g, &TernaryForm::linear_power(&l, 4)).unwrap());
            let fl = restrict_to_line(&f, &l).unwrap();
            let gl = restrict_to_line(&g, &l).unwrap();
            let rhs = constant(&apolarity_pairing(&fl, &gl).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn line_basis_determinant_normalization() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
        for _ in 0..10 {
            let l = rnd_line(&mut rng);
            let (p, q) = line_basis(&l).unwrap();
            assert_eq!(cross(&p, &q), l);
        }
        assert!(line_basis(&[Rat::zero(), Rat::zero(), Rat::zero()]).is_err());
    }

    #[test]
    fn catalecticant_is_symmetric() {
        let f = TernaryForm::generic(4);
        let c = clebsch_catalecticant(&f);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(c.entries[i][j], c.entries[j][i]);
            }
        }
        assert!(!c.det.is_zero());
    }

    #[test]
    fn catalecticant_rank_drops_on_power_sums() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
        // five general fourth powers: determinant vanishes
        let lines: Vec<[Rat; 3]> = (0..5).map(|_| rnd_line(&mut rng)).collect();
        let mut f = TernaryForm::linear_power(&lines[0], 4);
        for l in &lines[1..] {
            f = f.add(&TernaryForm::linear_power(l, 4));
        }
        let c = clebsch_catalecticant(&f);
        assert!(constant(&c.det).is_zero());
        // the kernel conic vanishes on each of the five lines
        let mut m = Mat::zero(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                *m.at_mut(i, j) = constant(&c.entries[i][j]);
            }
        }
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        let conic = &kernel[0];
        // q in the kernel forces Σᵢ (q·vᵢ)² = 0 over the rationals, so the
        // dual conic Σ_β q_β y^β vanishes on every summand line
        for l in &lines {
            let mut val = Rat::zero();
            for (e, q) in exponents(2).into_iter().zip(conic) {
                let mut t = q.clone();
                for (c, &k) in l.iter().zip(e.iter()) {
                    for _ in 0..k {
                        t *= c;
                    }
                }
                val += t;
            }
            assert!(val.is_zero(), "apolar conic misses a summand line");
        }
        // three fourth powers: rank collapses to 3
        let fermat = TernaryForm::linear_power(&[rint(1), rint(0), rint(0)], 4)
            .add(&TernaryForm::linear_power(&[rint(0), rint(1), rint(0)], 4))
            .add(&TernaryForm::linear_power(&[rint(0), rint(0), rint(1)], 4));
        let cf = clebsch_catalecticant(&fermat);
        let mut mf = Mat::zero(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                *mf.at_mut(i, j) = constant(&cf.entries[i][j]);
            }
        }
        assert!(constant(&cf.det).is_zero());
        assert_eq!(mf.rank(), 3);
        // a dense random quartic stays nonsingular
        let g = rnd_quartic(&mut rng);
        assert!(!constant(&clebsch_catalecticant(&g).det).is_zero());
    }

    #[test]
    fn pfaffian_closed_forms() {
        let vs = vars(&["a", "b", "c", "d", "e", "f"]);
        let v = |i: usize| Poly::var(&vs, i);
        let z = Poly::zero(&vs);
        let m2 = vec![vec![z.clone(), v(0)], vec![v(0).neg(), z.clone()]];
        assert_eq!(pfaffian(&m2), v(0));
        let m4 = vec![
            vec![z.clone(), v(0), v(1), v(2)],
            vec![v(0).neg(), z.clone(), v(3), v(4)],
            vec![v(1).neg(), v(3).neg(), z.clone(), v(5)],
            vec![v(2).neg(), v(4).neg(), v(5).neg(), z.clone()],
        ];
        let expect = v(0).mul(&v(5)).sub(&v(1).mul(&v(4))).add(&v(2).mul(&v(3)));
        assert_eq!(pfaffian(&m4), expect);
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(107);
        let vs = vars(&[]);
        for n in [4usize, 6, 8] {
            for _ in 0..3 {
                let mut rows = vec![vec![Poly::zero(&vs); n]; n];
                let mut m = Mat::zero(n, n);
                for i in 0..n {
                    for j in (i + 1)..n {
                        let x = rnd_rat(&mut rng);
                        rows[i][j] = Poly::constant(&vs, x.clone());
                        rows[j][i] = Poly::constant(&vs, -x.clone());
                        *m.at_mut(i, j) = x.clone();
                        *m.at_mut(j, i) = -x;
                    }
                }
                let pf = constant(&pfaffian(&rows));
                assert_eq!(pf.clone() * &pf, m.det());
            }
        }
    }

    #[test]
    fn contraction_matrix_is_skew() {
        let f = TernaryForm::generic(3);
        let a = aronhold_matrix(&f);
        for i in 0..8 {
            assert!(a[i][i].is_zero());
            for j in 0..8 {
                assert_eq!(a[i][j], a[j][i].neg());
            }
        }
        // spot-check the sign convention against a direct recomputation
        let basis = end0_basis();
        let direct = pairing_cubic(&basis[3], &basis[1]);
        let mut entry = Poly::zero(f.scalar_vars());
        for (m, c) in direct.terms() {
            entry = entry.add(&f.coeff([m.0[0], m.0[1], m.0[2]]).scale(c));
        }
        assert_eq!(a[3][1], entry);
    }

    #[test]
    fn contraction_pfaffian_vanishes_on_cube_sums() {
        let fermat = TernaryForm::linear_power(&[rint(1), rint(0), rint(0)], 3)
            .add(&TernaryForm::linear_power(&[rint(0), rint(1), rint(0)], 3))
            .add(&TernaryForm::linear_power(&[rint(0), rint(0), rint(1)], 3));
        assert!(constant(&aronhold_pfaffian(&fermat)).is_zero());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(109);
        for _ in 0..5 {
            let l = rnd_line(&mut rng);
            let cube = TernaryForm::linear_power(&l, 3);
            assert!(constant(&aronhold_pfaffian(&cube)).is_zero());
            // generic sums of three cubes vanish too
            let s3 = TernaryForm::linear_power(&rnd_line(&mut rng), 3)
                .add(&TernaryForm::linear_power(&rnd_line(&mut rng), 3))
                .add(&TernaryForm::linear_power(&rnd_line(&mut rng), 3));
            assert!(constant(&aronhold_pfaffian(&s3)).is_zero());
        }
    }

    #[test]
    fn contraction_pfaffian_matches_kernel_invariant() {
        let generic = TernaryForm::generic(3);
        let pf = aronhold_pfaffian(&generic);
        let basis = ternary_invariant_basis(3, 4);
        let scale = rint(-3);
        assert_eq!(pf, basis[0].scale(&scale));
        // the same single ratio on random cubics
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(113);
        for _ in 0..20 {
            let vals: Vec<Rat> = (0..10).map(|_| rnd_rat(&mut rng)).collect();
            let f = TernaryForm::from_rats(3, &vals);
            let direct = constant(&aronhold_pfaffian(&f));
            assert_eq!(direct, basis[0].eval(&vals) * &scale);
        }
    }

    #[test]
    fn contraction_pfaffian_has_degree_four() {
        let generic = TernaryForm::generic(3);
        assert_eq!(aronhold_pfaffian(&generic).total_degree(), 4);
        // interpolation oracle: along a random pencil the values are a
        // degree-four polynomial, so fifth differences vanish
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(127);
        let a: Vec<Rat> = (0..10).map(|_| rnd_rat(&mut rng)).collect();
        let b: Vec<Rat> = (0..10).map(|_| rnd_rat(&mut rng)).collect();
        let mut vals = Vec::new();
        for t in 0..7i64 {
            let pt: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x + y.clone() * rint(t)).collect();
            vals.push(constant(&aronhold_pfaffian(&TernaryForm::from_rats(3, &pt))));
        }
        for _ in 0..5 {
            vals = vals.windows(2).map(|w| w[1].clone() - &w[0]).collect();
        }
        assert!(vals.iter().all(Rat::is_zero));
    }

    #[test]
    fn polar_of_pure_power() {
        let f = TernaryForm::linear_power(&[rint(1), rint(0), rint(0)], 4);
        let p = polar_cubic(&f, &[rint(1), rint(0), rint(0)]);
        let expect = TernaryForm::linear_power(&[rint(1), rint(0), rint(0)], 3).scale(&rint(4));
        assert_eq!(p, expect);
    }

    #[test]
    fn induced_quartic_of_clebsch_passes_through_vertices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(131);
        let lines: Vec<[Rat; 3]> = (0..5).map(|_| rnd_line(&mut rng)).collect();
        let mut f = TernaryForm::linear_power(&lines[0], 4);
        for l in &lines[1..] {
            f = f.add(&TernaryForm::linear_power(l, 4));
        }
        let s = scorza_quartic(&f);
        assert!(!s.is_zero());
        for p in 0..5 {
            for q in (p + 1)..5 {
                let pt = cross(&lines[p], &lines[q]);
                assert!(pt.iter().any(|c| !c.is_zero()), "two sampled lines coincide");
                let val = s.eval(&pt.to_vec());
                assert!(val.is_zero(), "vertex {p},{q} misses the induced quartic");
            }
        }
    }

    #[test]
    fn induced_quartic_generic_nonzero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(137);
        let f = rnd_quartic(&mut rng);
        let s = scorza_quartic(&f);
        assert!(!s.is_zero());
        assert!(s.terms().all(|(m, _)| m.total() == 4));
    }
}
