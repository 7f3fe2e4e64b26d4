//! Generating-function routes to invariant dimensions: the Cayley–Sylvester
//! weight polynomial, the ternary weight enumerator with the six-term
//! alternating count, the Springer Φ-algorithm for covariant Hilbert series,
//! and the closed binomial formula for points on the line.

use crate::exact::{binom, invalid, rational_series, series_inverse_factor, vars, Mono, Poly, Rat, Result, Series, Vars};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

fn xvar() -> Vars {
    vars(&["x"])
}

/// 1 − x^k over a univariate variable set.
fn one_minus(vs: &Vars, k: u32) -> Poly {
    let mut p = Poly::one(vs);
    p.add_term(Mono(vec![k]), -Rat::one());
    p
}

/// Exact univariate division, panicking if the remainder is nonzero.
fn div_exact(num: &Poly, den: &Poly) -> Poly {
    let vs = num.vars().clone();
    let mut rem = num.clone();
    let mut quot = Poly::zero(&vs);
    let (dm, dc) = den.leading().expect("division by zero polynomial");
    let dm = dm.clone();
    let dc = dc.clone();
    while let Some((rm, rc)) = rem.leading() {
        let rm = rm.clone();
        let rc = rc.clone();
        if rm.0[0] < dm.0[0] {
            break;
        }
        let shift = Mono(vec![rm.0[0] - dm.0[0]]);
        let c = rc / dc.clone();
        let mut t = Poly::zero(&vs);
        t.add_term(shift, c);
        quot = quot.add(&t);
        rem = rem.sub(&t.mul(den));
    }
    assert!(rem.is_zero(), "non-exact polynomial division");
    quot
}

/// The Gaussian-binomial weight polynomial: Σ_p dim H_{g,p,d} · x^p,
/// equal to (1−x^{d+1})···(1−x^{d+g}) / ((1−x)···(1−x^g)), degree dg.
pub fn cayley_sylvester_polynomial(d: u32, g: u32) -> Poly {
    let vs = xvar();
    let mut num = Poly::one(&vs);
    let mut den = Poly::one(&vs);
    for i in 1..=g {
        num = num.mul(&one_minus(&vs, d + i));
        den = den.mul(&one_minus(&vs, i));
    }
    let q = div_exact(&num, &den);
    debug_assert_eq!(q.total_degree(), (d as u64) * (g as u64));
    q
}

/// dim H_{g,p,d}: monomials of degree g in a₀…a_d of weight p.
pub fn weight_space_dim(d: u32, g: u32, p: i64) -> u64 {
    if p < 0 || p > (d as i64) * (g as i64) {
        return 0;
    }
    let c = cayley_sylvester_polynomial(d, g).coeff(&[p as u32]);
    rat_to_u64(&c)
}

fn rat_to_u64(c: &Rat) -> u64 {
    assert!(c.is_integer() && !c.is_negative(), "expected a nonnegative integer");
    c.to_integer().to_u64().expect("count out of u64 range")
}

/// Dimension of the degree-g invariants of the binary d-ic:
/// the weight-space first difference at p = dg/2, zero when dg is odd.
pub fn binary_invariant_dim(d: u32, g: u32) -> u64 {
    let dg = (d as i64) * (g as i64);
    if dg % 2 != 0 {
        return 0;
    }
    let cs = cayley_sylvester_polynomial(d, g);
    let p = dg / 2;
    let at = |q: i64| -> i64 {
        if q < 0 || q > dg {
            0
        } else {
            cs.coeff(&[q as u32]).to_integer().to_i64().unwrap()
        }
    };
    let dim = at(p) - at(p - 1);
    assert!(dim >= 0);
    dim as u64
}

/// Multiplicity of each order e in S^g(S^d ℂ²) = ⊕_e (S^e ℂ²)^{m_e}:
/// m_e = H_{(dg−e)/2} − H_{(dg−e)/2 − 1}. Zero multiplicities are omitted.
pub fn covariant_multiplicities(d: u32, g: u32) -> BTreeMap<u32, u64> {
    let dg = (d as i64) * (g as i64);
    let cs = cayley_sylvester_polynomial(d, g);
    let at = |q: i64| -> i64 {
        if q < 0 || q > dg {
            0
        } else {
            cs.coeff(&[q as u32]).to_integer().to_i64().unwrap()
        }
    };
    let mut out = BTreeMap::new();
    let mut e = dg;
    while e >= 0 {
        let m = at((dg - e) / 2) - at((dg - e) / 2 - 1);
        assert!(m >= 0);
        if m > 0 {
            out.insert(e as u32, m as u64);
        }
        e -= 2;
    }
    out
}

/// Π_{i₁+i₂ ≤ d} 1/(1 − x₁^{i₁} x₂^{i₂} y), truncated at total degree.
/// Coefficient of x₁^{p₁} x₂^{p₂} y^g counts the degree-g coefficient
/// monomials of the ternary d-ic with weight (dg−p₁−p₂, p₁, p₂).
pub fn ternary_weight_enumerator(d: u32, trunc: u32) -> Series {
    let vs = vars(&["x1", "x2", "y"]);
    let mut s = Series::one(&vs, trunc);
    for i1 in 0..=d {
        for i2 in 0..=(d - i1) {
            let f = series_inverse_factor(&vs, &[i1, i2, 1], trunc).expect("nonzero exponent");
            s = s.mul(&f);
        }
    }
    s
}

/// Weight-space dimension lookup in a precomputed enumerator;
/// zero outside the simplex {p ≥ 0 componentwise, Σp = dg}.
pub fn ternary_h(enumerator: &Series, d: u32, g: u32, p: [i64; 3]) -> u64 {
    let dg = (d as i64) * (g as i64);
    if p.iter().any(|&x| x < 0) || p.iter().sum::<i64>() != dg {
        return 0;
    }
    debug_assert!(p[1] + p[2] + (g as i64) <= enumerator.trunc() as i64, "enumerator truncated too low");
    rat_to_u64(&enumerator.coeff(&[p[1] as u32, p[2] as u32, g]))
}

/// Dimension of the degree-g SL(3) invariants of the ternary d-ic by the
/// alternating six-term weight count at p = dg/3; zero when 3 ∤ dg.
pub fn bedratyuk_invariant_dim(d: u32, g: u32) -> u64 {
    let dg = (d as i64) * (g as i64);
    if dg % 3 != 0 {
        return 0;
    }
    let p = dg / 3;
    let s = ternary_weight_enumerator(d, (dg + g as i64) as u32);
    let h = |a: i64, b: i64, c: i64| ternary_h(&s, d, g, [a, b, c]) as i64;
    let dim = h(p, p, p) - h(p + 1, p - 1, p) - h(p - 1, p, p + 1)
        + h(p + 1, p - 2, p + 1)
        + h(p - 1, p - 1, p + 2)
        - h(p, p - 2, p + 2);
    assert!(dim >= 0);
    dim as u64
}

/// Φ_j on a univariate truncated series: z^n ↦ z^{n/j} when j | n, else 0.
pub fn phi_j(s: &Series, j: i64) -> Result<Series> {
    if j <= 0 {
        return invalid("phi index must be positive");
    }
    assert_eq!(s.poly().nvars(), 1, "phi acts on univariate series");
    let j = j as u64;
    let vs = s.poly().vars().clone();
    let mut p = Poly::zero(&vs);
    for (m, c) in s.poly().terms() {
        let n = m.total();
        if n % j == 0 {
            p.add_term(Mono(vec![(n / j) as u32]), c.clone());
        }
    }
    Ok(Series::from_poly(&p, s.trunc() / j as u32))
}

/// γ_{d,j} with the (1−z²)·z^e numerator attached, expanded to `trunc`:
/// (1−z²) z^{e+j(j+1)} / (Π_{k=1..j}(1−z^{2k}) · Π_{l=1..d−j}(1−z^{2l})).
fn springer_term(d: u32, j: u32, e: u32, trunc: u32) -> Series {
    let vs = vars(&["z"]);
    let mut num = Poly::zero(&vs);
    num.add_term(Mono(vec![e + j * (j + 1)]), Rat::one());
    num.add_term(Mono(vec![e + j * (j + 1) + 2]), -Rat::one());
    let mut denoms: Vec<Vec<u32>> = Vec::new();
    for k in 1..=j {
        denoms.push(vec![2 * k]);
    }
    for l in 1..=(d - j) {
        denoms.push(vec![2 * l]);
    }
    rational_series(&num, &denoms, trunc).expect("well-formed denominators")
}

/// Hilbert series of the order-e covariants of the binary d-ic:
/// Σ_{0 ≤ j < d/2} (−1)^j Φ_{d−2j}((1−z²) z^e γ_{d,j}(z)), truncated at n.
/// Each summand is expanded to degree (d−2j)·n before Φ compresses it.
pub fn springer_covariant_series(d: u32, e: u32, n: u32) -> Series {
    let vs = vars(&["z"]);
    let mut total = Series::zero(&vs, n);
    let mut j = 0;
    while 2 * j < d {
        let scale = d - 2 * j;
        let inner = springer_term(d, j, e, scale * n);
        let mut term = phi_j(&inner, scale as i64).expect("positive index");
        term = Series::from_poly(term.poly(), n);
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
        j += 1;
    }
    total
}

/// Bigraded covariant Hilbert series Σ dim Cov_{n,e} z^n w^e assembled
/// order by order, truncated at total degree n in (z, w).
pub fn springer_bigraded(d: u32, n: u32) -> Series {
    let vs = vars(&["z", "w"]);
    let mut p = Poly::zero(&vs);
    for e in 0..=n {
        let fe = springer_covariant_series(d, e, n - e);
        for (m, c) in fe.poly().terms() {
            p.add_term(Mono(vec![m.0[0], e]), c.clone());
        }
    }
    Series::from_poly(&p, n)
}

/// Dimension of the weight-k invariants of d ordered points on the line:
/// Σ_j (−1)^j C(d,j) C(k(d/2−j)+d−2−j, d−2), vanishing binomials included.
/// For odd d the weight must be even.
pub fn howe_dimension(d: u32, k: u32) -> Result<u64> {
    if d % 2 == 1 && k % 2 == 1 {
        return invalid("odd point count requires even weight");
    }
    if d < 2 {
        return invalid("need at least two points");
    }
    let d = d as i64;
    let k = k as i64;
    let mut total = BigInt::zero();
    for j in 0..=(d - 1) / 2 {
        // k(d/2 − j) is integral: d even, or k even
        let a = k * (d - 2 * j) / 2 + d - 2 - j;
        let term = binom(d, j) * binom(a, d - 2);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    assert!(!total.is_negative(), "dimension must be nonnegative");
    Ok(total.to_u64().expect("dimension out of range"))
}
