//! Binary forms: isobaric weight spaces, the lowering/raising operators D and
//! Δ, kernel-method invariant bases, the Reynolds projector, transvectants,
//! apolarity, the cubic covariant suite, and the symplectic t-determinant
//! identity for quartics.
//!
//! Convention throughout: f = Σ_i C(d,i)·f_i·x^{d−i}·y^i, so the coefficient
//! weight of a_i is i and invariants of degree g are isobaric of weight dg/2.

use crate::exact::{binom, coeff_vars, invalid, poly_det, rat, rint, Error, Mat, Mono, Poly, Rat, Result, Vars};
use crate::par;
use num_traits::{One, Zero};

fn binom_rat(n: i64, k: i64) -> Rat {
    Rat::from_integer(binom(n, k))
}

/// A binary form of degree d; coefficients are polynomials so that forms can
/// be fully symbolic (generic coefficients), numeric, or anything between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    d: u32,
    coeffs: Vec<Poly>,
}

impl BinaryForm {
    pub fn from_coeffs(d: u32, coeffs: Vec<Poly>) -> BinaryForm {
        assert_eq!(coeffs.len(), d as usize + 1, "need exactly d+1 coefficient slots");
        let vs = coeffs[0].vars();
        assert!(coeffs.iter().all(|c| c.vars() == vs));
        BinaryForm { d, coeffs }
    }

    /// Generic symbolic form: coefficients are the variables a0..=ad.
    pub fn generic(d: u32) -> BinaryForm {
        let vs = coeff_vars("a", d, &[]);
        let coeffs = (0..=d as usize).map(|i| Poly::var(&vs, i)).collect();
        BinaryForm { d, coeffs }
    }

    /// Numeric form over the empty variable set.
    pub fn from_rats(d: u32, vals: &[Rat]) -> BinaryForm {
        assert_eq!(vals.len(), d as usize + 1);
        let vs = crate::exact::vars(&[]);
        let coeffs = vals.iter().map(|v| Poly::constant(&vs, v.clone())).collect();
        BinaryForm { d, coeffs }
    }

    /// (αx + βy)^d in the binomial convention: f_i = α^{d−i} β^i.
    pub fn linear_power(alpha: &Rat, beta: &Rat, d: u32) -> BinaryForm {
        let vals: Vec<Rat> = (0..=d)
            .map(|i| {
                let mut v = Rat::one();
                for _ in 0..(d - i) {
                    v *= alpha;
                }
                for _ in 0..i {
                    v *= beta;
                }
                v
            })
            .collect();
        BinaryForm::from_rats(d, &vals)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coeff(&self, i: u32) -> &Poly {
        &self.coeffs[i as usize]
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

    pub fn scale(&self, c: &Rat) -> BinaryForm {
        BinaryForm { d: self.d, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Variable set of the expanded form: scalar variables then x, y.
    pub fn xy_vars(&self) -> Vars {
        let base = self.scalar_vars();
        assert!(!base.iter().any(|v| v == "x" || v == "y"), "x/y collide with scalar variables");
        let mut names: Vec<String> = base.as_ref().clone();
        names.push("x".into());
        names.push("y".into());
        std::sync::Arc::new(names)
    }

    /// Expand to a polynomial in the scalar variables plus x and y.
    pub fn to_xy_poly(&self) -> Poly {
        let w = self.xy_vars();
        let nb = self.scalar_vars().len();
        let map: Vec<usize> = (0..nb).collect();
        let mut out = Poly::zero(&w);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut t = c.embed(&w, &map).scale(&binom_rat(self.d as i64, i as i64));
            let mut xy = vec![0u32; w.len()];
            xy[nb] = self.d - i as u32;
            xy[nb + 1] = i as u32;
            t = t.mul(&Poly::monomial(&w, &xy, Rat::one()));
            out = out.add(&t);
        }
        out
    }

    /// Read a degree-d form back off an expanded polynomial over vars ∪ {x,y}
    /// (x, y in the last two slots), dividing out the binomial convention.
    pub fn from_xy_poly(p: &Poly, d: u32, scalar_vars: &Vars) -> BinaryForm {
        let nb = scalar_vars.len();
        assert_eq!(p.nvars(), nb + 2);
        let mut coeffs = vec![Poly::zero(scalar_vars); d as usize + 1];
        for (m, c) in p.terms() {
            let ex = m.0[nb];
            let ey = m.0[nb + 1];
            assert_eq!(ex + ey, d, "expanded polynomial is not homogeneous of degree d in x,y");
            let mut base = m.0[..nb].to_vec();
            base.shrink_to_fit();
            coeffs[ey as usize].add_term(Mono(base), c.clone());
        }
        for (i, c) in coeffs.iter_mut().enumerate() {
            let b = binom_rat(d as i64, i as i64);
            *c = c.scale(&b.recip());
        }
        BinaryForm { d, coeffs }
    }

    /// Value at a point (the coefficients stay polynomial).
    pub fn eval_xy(&self, x: &Rat, y: &Rat) -> Poly {
        let mut out = Poly::zero(self.scalar_vars());
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut s = binom_rat(self.d as i64, i as i64);
            for _ in 0..(self.d - i as u32) {
                s *= x;
            }
            for _ in 0..i {
                s *= y;
            }
            out = out.add(&c.scale(&s));
        }
        out
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.scalar_vars(), other.scalar_vars());
        let p = self.to_xy_poly().mul(&other.to_xy_poly());
        BinaryForm::from_xy_poly(&p, self.d + other.d, self.scalar_vars())
    }
}

/// Monomials of degree g in a0..=ad with coefficient weight p
/// (a_i contributes i per power), in descending graded-lex order.
pub fn weighted_monomials(d: u32, g: u32, p: i64) -> Vec<Mono> {
    fn rec(d: u32, slots_left: u32, weight_left: i64, min_index: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if slots_left == 0 {
            if weight_left == 0 {
                let mut e = vec![0u32; d as usize + 1];
                for &i in cur.iter() {
                    e[i as usize] += 1;
                }
                out.push(Mono(e));
            }
            return;
        }
        for i in min_index..=d {
            let rem = weight_left - i as i64;
            if rem < 0 {
                break;
            }
            // remaining slots must be able to reach rem with indices in [i, d]
            if rem > (d as i64) * (slots_left as i64 - 1) {
                continue;
            }
            cur.push(i);
            rec(d, slots_left - 1, rem, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p >= 0 {
        let mut cur = Vec::new();
        rec(d, g, p, 0, &mut cur, &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The isobaric slice that can carry invariants: weight dg/2 monomials of
/// degree g, empty when dg is odd.
pub struct WeightedMonomialSpace {
    pub d: u32,
    pub g: u32,
    pub p: i64,
    pub vars: Vars,
    pub basis: Vec<Mono>,
}

impl WeightedMonomialSpace {
    pub fn basis_polys(&self) -> Vec<Poly> {
        self.basis
            .iter()
            .map(|m| Poly::from_terms(&self.vars, [(m.0.clone(), Rat::one())]))
            .collect()
    }
}

pub fn isobaric_monomials(d: u32, g: u32) -> WeightedMonomialSpace {
    let dg = (d as i64) * (g as i64);
    let vars = coeff_vars("a", d, &[]);
    let p = dg / 2;
    let basis = if dg % 2 == 0 { weighted_monomials(d, g, p) } else { Vec::new() };
    WeightedMonomialSpace { d, g, p, vars, basis }
}

fn check_coeff_scope(p: &Poly, d: u32) -> Result<()> {
    if p.nvars() != d as usize + 1 {
        let name = p
            .vars()
            .get(d as usize + 1)
            .cloned()
            .unwrap_or_else(|| format!("(expected {} variables, got {})", d + 1, p.nvars()));
        return Err(Error::ForeignVariable(name));
    }
    Ok(())
}

/// Lowering operator D = Σ_{i=0}^{d−1} (i+1)·a_i·∂/∂a_{i+1}; drops weight by 1.
pub fn apply_d(p: &Poly, d: u32) -> Result<Poly> {
    check_coeff_scope(p, d)?;
    let vs = p.vars().clone();
    let mut out = Poly::zero(&vs);
    for (m, c) in p.terms() {
        for i in 0..d as usize {
            let e = m.0[i + 1];
            if e > 0 {
                let mut e2 = m.0.clone();
                e2[i + 1] -= 1;
                e2[i] += 1;
                out.add_term(Mono(e2), c * rint((i as i64 + 1) * e as i64));
            }
        }
    }
    Ok(out)
}

/// Raising operator Δ = Σ_{i=0}^{d−1} (d−i)·a_{i+1}·∂/∂a_i; raises weight by 1.
pub fn apply_delta(p: &Poly, d: u32) -> Result<Poly> {
    check_coeff_scope(p, d)?;
    let vs = p.vars().clone();
    let mut out = Poly::zero(&vs);
    for (m, c) in p.terms() {
        for i in 0..d as usize {
            let e = m.0[i];
            if e > 0 {
                let mut e2 = m.0.clone();
                e2[i] -= 1;
                e2[i + 1] += 1;
                out.add_term(Mono(e2), c * rint((d as i64 - i as i64) * e as i64));
            }
        }
    }
    Ok(out)
}

/// Matrix of D from the span of `cols` to the span of `rows`
/// (monomial lists over a0..=ad, both graded-lex descending).
fn lowering_matrix(d: u32, cols: &[Mono], rows: &[Mono]) -> Mat {
    let vs = coeff_vars("a", d, &[]);
    let row_index: std::collections::HashMap<&Mono, usize> =
        rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let images: Vec<Vec<(usize, Rat)>> = par::map_collect(cols.to_vec(), |m| {
        let p = Poly::from_terms(&vs, [(m.0.clone(), Rat::one())]);
        let dp = apply_d(&p, d).expect("monomial in scope");
        dp.terms()
            .map(|(mm, c)| (*row_index.get(mm).expect("image stays in the weight space"), c.clone()))
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

/// Basis of the degree-g invariants of the binary d-ic, by the kernel method:
/// isobaric monomials of weight dg/2 intersected with ker D. Each element is
/// normalized with graded-lex leading coefficient 1.
pub fn invariant_basis(d: u32, g: u32) -> Vec<Poly> {
    let space = isobaric_monomials(d, g);
    if space.basis.is_empty() {
        return Vec::new();
    }
    let rows = weighted_monomials(d, g, space.p - 1);
    let mat = lowering_matrix(d, &space.basis, &rows);
    let kernel = mat.kernel_basis();
    kernel
        .into_iter()
        .map(|v| {
            let mut p = Poly::zero(&space.vars);
            for (coef, m) in v.into_iter().zip(&space.basis) {
                p.add_term(m.clone(), coef);
            }
            p
        })
        .collect()
}

fn coefficient_weight(m: &Mono) -> i64 {
    m.0.iter().enumerate().map(|(i, &e)| (i as i64) * (e as i64)).sum()
}

/// Reynolds projector onto the invariants, by the weight-ladder method:
/// H_{dg/2} = ⊕_j Δ^j (ker D ∩ H_{dg/2 − j}); the projection keeps the j = 0
/// block. Everything outside the middle weight dies.
pub fn reynolds(p: &Poly, d: u32, g: u32) -> Result<Poly> {
    check_coeff_scope(p, d)?;
    let vs = p.vars().clone();
    if !p.terms().all(|(m, _)| m.total() == g as u64) {
        return invalid("reynolds input must be homogeneous of the stated degree");
    }
    let dg = (d as i64) * (g as i64);
    if dg % 2 != 0 {
        return Ok(Poly::zero(&vs));
    }
    let pstar = dg / 2;
    let mut mid = Poly::zero(&vs);
    for (m, c) in p.terms() {
        if coefficient_weight(m) == pstar {
            mid.add_term(m.clone(), c.clone());
        }
    }
    if mid.is_zero() {
        return Ok(mid);
    }
    let target = weighted_monomials(d, g, pstar);
    let index: std::collections::HashMap<&Mono, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // ladder columns: for each height j, highest-weight vectors at weight
    // dg/2 − j pushed back up by Δ^j
    let mut columns: Vec<Vec<Rat>> = Vec::new();
    let mut invariant_columns: Vec<Poly> = Vec::new();
    let mut j: i64 = 0;
    loop {
        let source = weighted_monomials(d, g, pstar - j);
        if source.is_empty() {
            break;
        }
        let below = weighted_monomials(d, g, pstar - j - 1);
        let mat = lowering_matrix(d, &source, &below);
        for v in mat.kernel_basis() {
            let mut hw = Poly::zero(&vs);
            for (coef, m) in v.into_iter().zip(&source) {
                hw.add_term(m.clone(), coef);
            }
            let mut lifted = hw;
            for _ in 0..j {
                lifted = apply_delta(&lifted, d)?;
            }
            let mut col = vec![Rat::zero(); target.len()];
            for (m, c) in lifted.terms() {
                col[*index.get(m).expect("Δ^j lands in the middle weight")] = c.clone();
            }
            if j == 0 {
                invariant_columns.push(lifted);
            }
            columns.push(col);
        }
        j += 1;
    }
    assert_eq!(columns.len(), target.len(), "ladder blocks must fill the weight space");

    let mut mat = Mat::zero(target.len(), columns.len());
    for (cj, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            *mat.at_mut(i, cj) = v.clone();
        }
    }
    let rhs: Vec<Rat> = target
        .iter()
        .map(|m| mid.terms().find(|(mm, _)| *mm == m).map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero))
        .collect();
    let sol = mat.solve_unique(&rhs);

    let mut out = Poly::zero(&vs);
    for (k, inv) in invariant_columns.iter().enumerate() {
        out = out.add(&inv.scale(&sol[k]));
    }
    Ok(out)
}

/// n-th transvectant (f,g)_n = Σ_i (−1)^i C(n,i) ∂ⁿf/∂x^{n−i}∂y^i · ∂ⁿg/∂x^i∂y^{n−i},
/// taken verbatim with no factorial renormalization.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, n: u32) -> Result<BinaryForm> {
    assert_eq!(f.scalar_vars(), g.scalar_vars(), "forms over different scalar variables");
    if n > f.degree().min(g.degree()) {
        return invalid(format!(
            "transvectant order {n} exceeds min degree {}",
            f.degree().min(g.degree())
        ));
    }
    let w = f.xy_vars();
    let nb = f.scalar_vars().len();
    let (xi, yi) = (nb, nb + 1);
    let fp = f.to_xy_poly();
    let gp = g.to_xy_poly();
    let dcache = |p: &Poly, dx: u32, dy: u32| {
        let mut q = p.clone();
        for _ in 0..dx {
            q = q.deriv(xi);
        }
        for _ in 0..dy {
            q = q.deriv(yi);
        }
        q
    };
    let mut acc = Poly::zero(&w);
    for i in 0..=n {
        let a = dcache(&fp, n - i, i);
        let b = dcache(&gp, i, n - i);
        let mut term = a.mul(&b).scale(&binom_rat(n as i64, i as i64));
        if i % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    let dd = f.degree() + g.degree() - 2 * n;
    Ok(BinaryForm::from_xy_poly(&acc, dd, f.scalar_vars()))
}

/// Apolarity pairing Σ_i (−1)^i C(d,i) f_i g_{d−i}; symmetric for even d,
/// antisymmetric for odd d.
pub fn apolarity_pairing(f: &BinaryForm, g: &BinaryForm) -> Result<Poly> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: f.degree() as usize, got: g.degree() as usize });
    }
    assert_eq!(f.scalar_vars(), g.scalar_vars());
    let d = f.degree();
    let mut out = Poly::zero(f.scalar_vars());
    for i in 0..=d {
        let mut t = f.coeff(i).mul(g.coeff(d - i)).scale(&binom_rat(d as i64, i as i64));
        if i % 2 == 1 {
            t = t.neg();
        }
        out = out.add(&t);
    }
    Ok(out)
}

/// The discriminant, Hessian, and Jacobian covariants of a binary cubic,
/// with the syzygy combination 36H³ + 9Δf² + Q² that must vanish.
pub struct CubicSuite {
    pub discriminant: Poly,
    pub hessian: BinaryForm,
    pub jacobian: BinaryForm,
    pub syzygy: Poly,
}

/// Covariant suite of a binary cubic: Δ = 4(a₀a₂−a₁²)(a₁a₃−a₂²) − (a₀a₃−a₁a₂)²,
/// H the Hessian quadratic (= (f,f)₂/72), Q = (f,H)₁.
pub fn cubic_covariant_suite(f: &BinaryForm) -> CubicSuite {
    assert_eq!(f.degree(), 3, "suite is defined for cubics");
    let (a0, a1, a2, a3) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    let p02 = a0.mul(a2).sub(&a1.mul(a1));
    let p03 = a0.mul(a3).sub(&a1.mul(a2));
    let p13 = a1.mul(a3).sub(&a2.mul(a2));
    let discriminant = p02.mul(&p13).scale(&rint(4)).sub(&p03.mul(&p03));
    let hessian = BinaryForm::from_coeffs(2, vec![p02.clone(), p03.scale(&rat(1, 2)), p13.clone()]);
    let jacobian = transvectant(f, &hessian, 1).expect("order 1 is valid");
    let fxy = f.to_xy_poly();
    let hxy = hessian.to_xy_poly();
    let qxy = jacobian.to_xy_poly();
    let w = fxy.vars().clone();
    let nb = f.scalar_vars().len();
    let map: Vec<usize> = (0..nb).collect();
    let delta_xy = discriminant.embed(&w, &map);
    let syzygy = hxy
        .pow(3)
        .scale(&rint(36))
        .add(&delta_xy.mul(&fxy.pow(2)).scale(&rint(9)))
        .add(&qxy.pow(2));
    CubicSuite { discriminant, hessian, jacobian, syzygy }
}

/// Coefficients of det[[a₀,a₁,a₂+t],[a₁,a₂−t/2,a₃],[a₂+t,a₃,a₄]] by powers
/// of t: exactly (1/2)t³ − (1/2)I·t + J for the quartic invariants I, J.
pub fn gherardelli_determinant(f: &BinaryForm) -> [Poly; 4] {
    assert_eq!(f.degree(), 4, "symplectic determinant is defined for quartics");
    let base = f.scalar_vars();
    let mut names: Vec<String> = base.as_ref().clone();
    assert!(!names.iter().any(|v| v == "t"));
    names.push("t".into());
    let w: Vars = std::sync::Arc::new(names);
    let nb = base.len();
    let map: Vec<usize> = (0..nb).collect();
    let c = |i: u32| f.coeff(i).embed(&w, &map);
    let t = Poly::var(&w, nb);
    let half_t = t.scale(&rat(1, 2));
    let rows = vec![
        vec![c(0), c(1), c(2).add(&t)],
        vec![c(1), c(2).sub(&half_t), c(3)],
        vec![c(2).add(&t), c(3), c(4)],
    ];
    let det = poly_det(&rows);
    let mut out = [Poly::zero(base), Poly::zero(base), Poly::zero(base), Poly::zero(base)];
    for (m, coef) in det.terms() {
        let k = m.0[nb] as usize;
        assert!(k <= 3);
        let stripped = Mono(m.0[..nb].to_vec());
        out[k].add_term(stripped, coef.clone());
    }
    out
}
