//! Six labeled points in the projective plane: 3×3 brackets (ijk) and line
//! forms (ijx), the conic through five points, the conic invariant d₂, the
//! six hexahedral cubics a…f with their scalar companions ā…f̄ (via the
//! Lagrange identity), the fifteen lines of the associated cubic surface,
//! and the Morley covariant ā²a + … + f̄²f.
//!
//! Points are indexed 0…5. The cubics live in the variables x0, x1, x2.

use crate::exact::{invalid, poly_det, rint, vars, Mat, Poly, Rat, Result, Vars};
use crate::points_line::{self, GraphCombination};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use std::sync::Arc;

/// Six labeled points with rational homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneConfig {
    points: [[Rat; 3]; 6],
}

impl PlaneConfig {
    pub fn new(points: [[Rat; 3]; 6]) -> Result<PlaneConfig> {
        if points.iter().any(|p| p.iter().all(Rat::is_zero)) {
            return invalid("a projective point must have a nonzero coordinate");
        }
        Ok(PlaneConfig { points })
    }

    pub fn from_ints(points: [[i64; 3]; 6]) -> Result<PlaneConfig> {
        PlaneConfig::new(points.map(|p| p.map(rint)))
    }

    pub fn points(&self) -> &[[Rat; 3]; 6] {
        &self.points
    }

    /// Relabel points by a permutation given as the image list of 0…5:
    /// point i of this configuration becomes point sigma[i] of the result.
    pub fn permuted(&self, sigma: &[usize; 6]) -> Result<PlaneConfig> {
        let mut seen = [false; 6];
        for &s in sigma {
            if s > 5 || seen[s] {
                return invalid("not a permutation of 0..=5");
            }
            seen[s] = true;
        }
        let mut points: [[Rat; 3]; 6] =
            std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
        for (i, p) in self.points.iter().enumerate() {
            points[sigma[i]] = p.clone();
        }
        Ok(PlaneConfig { points })
    }

    /// The bracket (ijk): determinant of the three labeled points.
    pub fn bracket(&self, i: usize, j: usize, k: usize) -> Result<Rat> {
        if i == j || i == k || j == k || i > 5 || j > 5 || k > 5 {
            return invalid("bracket needs three distinct labels in 0..=5");
        }
        let (p, q, r) = (&self.points[i], &self.points[j], &self.points[k]);
        Ok(det3(p, q, r))
    }

    /// The line form (ijx): linear equation of the line through points i, j
    /// in the variables x0, x1, x2; antisymmetric in i, j.
    pub fn line_form(&self, i: usize, j: usize) -> Result<Poly> {
        if i == j || i > 5 || j > 5 {
            return invalid("line form needs two distinct labels in 0..=5");
        }
        let vs = plane_vars();
        let (p, q) = (&self.points[i], &self.points[j]);
        let c0 = &p[1] * &q[2] - &p[2] * &q[1];
        let c1 = &p[2] * &q[0] - &p[0] * &q[2];
        let c2 = &p[0] * &q[1] - &p[1] * &q[0];
        let mut out = Poly::zero(&vs);
        for (c, idx) in [(c0, 0usize), (c1, 1), (c2, 2)] {
            out = out.add(&Poly::var(&vs, idx).scale(&c));
        }
        Ok(out)
    }
}

fn det3(p: &[Rat; 3], q: &[Rat; 3], r: &[Rat; 3]) -> Rat {
    &p[0] * (&q[1] * &r[2] - &q[2] * &r[1]) - &p[1] * (&q[0] * &r[2] - &q[2] * &r[0])
        + &p[2] * (&q[0] * &r[1] - &q[1] * &r[0])
}

/// The variables x0, x1, x2 of the cubics and conics returned here.
pub fn plane_vars() -> Vars {
    vars(&["x0", "x1", "x2"])
}

// ---- The conic through five points ----

/// The conic through points 0…4:
/// (014)(234)·(02x)(13x) − (024)(134)·(01x)(23x).
/// Vanishes at each of the five points by construction; an identically zero
/// form (degenerate position) is an error.
pub fn conic_through_five(cfg: &PlaneConfig) -> Result<Poly> {
    let q = cfg
        .line_form(0, 2)?
        .mul(&cfg.line_form(1, 3)?)
        .scale(&(cfg.bracket(0, 1, 4)? * cfg.bracket(2, 3, 4)?))
        .sub(
            &cfg.line_form(0, 1)?
                .mul(&cfg.line_form(2, 3)?)
                .scale(&(cfg.bracket(0, 2, 4)? * cfg.bracket(1, 3, 4)?)),
        );
    if q.is_zero() {
        return invalid("the five points do not determine a conic");
    }
    Ok(q)
}

/// The conic invariant d₂ = (014)(234)(025)(135) − (024)(134)(015)(235):
/// zero exactly when the six points lie on a conic. Alternating in the six
/// points. In degree four it ties into the hexahedral scalars:
/// 1296·d₂² = a₂² − 4a₄ with aᵢ elementary symmetric in ā…f̄ (the constant
/// is 6⁴; it disappears when the five-term scalars are averaged instead of
/// summed).
pub fn conic_invariant_d2(cfg: &PlaneConfig) -> Rat {
    let b = |i, j, k| cfg.bracket(i, j, k).unwrap();
    b(0, 1, 4) * b(2, 3, 4) * b(0, 2, 5) * b(1, 3, 5)
        - b(0, 2, 4) * b(1, 3, 4) * b(0, 1, 5) * b(2, 3, 5)
}

// ---- Hexahedral cubics ----

/// The six cubics a…f through the six points together with their scalar
/// companions ā…f̄.
pub struct CremonaCubics {
    pub names: [&'static str; 6],
    pub cubics: [Poly; 6],
    pub bars: [Rat; 6],
}

/// The hexahedral cubics: each five-term bracket sum of the six-point line
/// invariants with every two-point bracket (ij) prolonged to the line form
/// (ijx), and the companion scalars with (ij)(kl)(mn) replaced by the
/// concurrence function (ij,kl,mn) = (ijm)(kln) − (ijn)(klm).
pub fn cremona_cubics(cfg: &PlaneConfig) -> Result<CremonaCubics> {
    let vs = plane_vars();
    let mut cubics = Vec::with_capacity(6);
    let mut bars = Vec::with_capacity(6);
    for rows in &points_line::JOUBERT_TERMS {
        let mut cubic = Poly::zero(&vs);
        let mut bar = Rat::zero();
        for term in rows {
            let [(i, j), (k, l), (m, n)] = term.map(|(u, v)| (u as usize - 1, v as usize - 1));
            cubic = cubic.add(
                &cfg.line_form(i, j)?
                    .mul(&cfg.line_form(k, l)?)
                    .mul(&cfg.line_form(m, n)?),
            );
            bar += cfg.bracket(i, j, m)? * cfg.bracket(k, l, n)?
                - cfg.bracket(i, j, n)? * cfg.bracket(k, l, m)?;
        }
        cubics.push(cubic);
        bars.push(bar);
    }
    Ok(CremonaCubics {
        names: ["a", "b", "c", "d", "e", "f"],
        cubics: cubics.try_into().unwrap(),
        bars: bars.try_into().unwrap(),
    })
}

/// The Morley covariant ā²a + b̄²b + … + f̄²f.
pub fn morley_covariant(cfg: &PlaneConfig) -> Result<Poly> {
    let cc = cremona_cubics(cfg)?;
    let mut out = Poly::zero(&plane_vars());
    for (cubic, bar) in cc.cubics.iter().zip(&cc.bars) {
        out = out.add(&cubic.scale(&(bar * bar)));
    }
    Ok(out)
}

// ---- The fifteen lines ----

/// The 15 partitions of {0,…,5} into three unordered pairs, lexicographic.
pub fn hexahedral_partitions() -> [[(usize, usize); 3]; 15] {
    let mut out = Vec::with_capacity(15);
    for j in 1..6 {
        let mut rest: Vec<usize> = (1..6).filter(|&v| v != j).collect();
        let k = rest.remove(0);
        for (idx, &l) in rest.iter().enumerate() {
            let others: Vec<usize> =
                rest.iter().enumerate().filter(|&(t, _)| t != idx).map(|(_, &v)| v).collect();
            out.push([(0, j), (k, l), (others[0], others[1])]);
        }
    }
    out.try_into().unwrap()
}

fn partition_name(p: &[(usize, usize); 3]) -> String {
    let letter = |i: usize| (b'a' + i as u8) as char;
    let mut s = String::new();
    for (k, &(i, j)) in p.iter().enumerate() {
        if k > 0 {
            s.push('|');
        }
        s.push(letter(i));
        s.push(letter(j));
    }
    s
}

/// Restriction of Σyᵢ³ (plus an optional perturbation y₀y₁y₂) to the line
/// cut out by the three pair sums of one partition together with Σ b̄ᵢyᵢ:
/// returns the four coefficients of the resulting binary cubic.
fn line_restriction(
    bars: &[Rat; 6],
    partition: &[(usize, usize); 3],
    perturb: bool,
) -> Result<[Rat; 4]> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(4);
    for &(i, j) in partition {
        let mut row = vec![Rat::zero(); 6];
        row[i] = Rat::one();
        row[j] = Rat::one();
        rows.push(row);
    }
    rows.push(bars.to_vec());
    let kernel = Mat::from_rows(rows).kernel_basis();
    if kernel.len() != 2 {
        return invalid("degenerate configuration: the cut is not a line");
    }
    let (v, w) = (&kernel[0], &kernel[1]);
    // Σ (s·vᵢ + t·wᵢ)³, coefficients of s³, s²t, st², t³
    let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for i in 0..6 {
        c[0] += &v[i] * &v[i] * &v[i];
        c[1] += rint(3) * &v[i] * &v[i] * &w[i];
        c[2] += rint(3) * &v[i] * &w[i] * &w[i];
        c[3] += &w[i] * &w[i] * &w[i];
    }
    if perturb {
        // add (s·v₀+t·w₀)(s·v₁+t·w₁)(s·v₂+t·w₂)
        c[0] += &v[0] * &v[1] * &v[2];
        c[1] += &v[0] * &v[1] * &w[2] + &v[0] * &w[1] * &v[2] + &w[0] * &v[1] * &v[2];
        c[2] += &v[0] * &w[1] * &w[2] + &w[0] * &v[1] * &w[2] + &w[0] * &w[1] * &v[2];
        c[3] += &w[0] * &w[1] * &w[2];
    }
    Ok(c)
}

/// For each of the 15 pair-partitions of {a,…,f}, check that the line
/// Aᵢ+Aⱼ = Aₖ+Aₗ = Aₘ+Aₙ = 0 (inside the hyperplane Σ b̄ᵢAᵢ = 0) lies on
/// the cubic ΣAᵢ³ = 0.
pub fn hexahedral_line_check(cfg: &PlaneConfig) -> Result<Vec<(String, bool)>> {
    let bars = cremona_cubics(cfg)?.bars;
    let mut out = Vec::with_capacity(15);
    for p in &hexahedral_partitions() {
        let c = line_restriction(&bars, p, false)?;
        out.push((partition_name(p), c.iter().all(Rat::is_zero)));
    }
    Ok(out)
}

// ---- Verification report ----

fn random_generic_config(rng: &mut impl Rng) -> PlaneConfig {
    'outer: loop {
        let mut points = [[0i64; 3]; 6];
        for p in &mut points {
            for c in p.iter_mut() {
                *c = rng.gen_range(-9..=9);
            }
        }
        let cfg = match PlaneConfig::from_ints(points) {
            Ok(cfg) => cfg,
            Err(_) => continue,
        };
        for i in 0..4 {
            for j in i + 1..5 {
                for k in j + 1..6 {
                    if cfg.bracket(i, j, k).unwrap().is_zero() {
                        continue 'outer;
                    }
                }
            }
        }
        return cfg;
    }
}

fn elementary_symmetric(values: &[Rat]) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); values.len() + 1];
    e[0] = Rat::one();
    for (k, v) in values.iter().enumerate() {
        for i in (1..=k + 1).rev() {
            let lower = e[i - 1].clone();
            e[i] += lower * v;
        }
    }
    e
}

/// Exact checks of the plane-point relations on random rational
/// configurations (brackets kept nonzero by rejection sampling): the four
/// cubic-surface identities, the fifteen lines with a perturbed negative
/// control, d₂² = a₂² − 4a₄, the conic through five points meeting the
/// sixth, the conic detection on a Veronese configuration, and the signed
/// symmetry of the Morley covariant.
pub fn plane_checks(trials: u32, seed: u64) -> Vec<(String, bool)> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let x = plane_vars();
    let zero = Poly::zero(&x);

    let mut sum_cubics = true;
    let mut sum_bars = true;
    let mut pairing = true;
    let mut sum_cubes = true;
    let mut lines15 = true;
    let mut negative_control = true;
    let mut degree_four = true;
    let mut sixth_point = true;
    let mut nonzero_d2 = true;
    let mut morley_sign = true;

    for _ in 0..trials {
        let cfg = random_generic_config(&mut rng);
        let cc = cremona_cubics(&cfg).unwrap();

        let total = cc.cubics.iter().fold(zero.clone(), |acc, c| acc.add(c));
        sum_cubics &= total.is_zero();

        let bar_total: Rat = cc.bars.iter().sum();
        sum_bars &= bar_total.is_zero();

        let paired = cc
            .cubics
            .iter()
            .zip(&cc.bars)
            .fold(zero.clone(), |acc, (c, b)| acc.add(&c.scale(b)));
        pairing &= paired.is_zero();

        let cubes = cc
            .cubics
            .iter()
            .fold(zero.clone(), |acc, c| acc.add(&c.mul(c).mul(c)));
        sum_cubes &= cubes.is_zero();

        lines15 &= hexahedral_line_check(&cfg).unwrap().iter().all(|(_, ok)| *ok);
        let perturbed_all_pass = hexahedral_partitions()
            .iter()
            .all(|p| {
                line_restriction(&cc.bars, p, true)
                    .map(|c| c.iter().all(Rat::is_zero))
                    .unwrap_or(false)
            });
        negative_control &= !perturbed_all_pass;

        let e = elementary_symmetric(&cc.bars);
        let d2 = conic_invariant_d2(&cfg);
        degree_four &= rint(1296) * &d2 * &d2 == &e[2] * &e[2] - rint(4) * &e[4];
        nonzero_d2 &= !d2.is_zero();

        let conic = conic_through_five(&cfg).unwrap();
        let p5 = &cfg.points()[5];
        let at_sixth = conic.eval(&[p5[0].clone(), p5[1].clone(), p5[2].clone()]);
        sixth_point &= at_sixth == d2;

        let m = morley_covariant(&cfg).unwrap();
        let swapped = cfg.permuted(&[1, 0, 2, 3, 4, 5]).unwrap();
        let cycled = cfg.permuted(&[1, 2, 3, 4, 5, 0]).unwrap();
        let rotated = cfg.permuted(&[1, 2, 0, 3, 4, 5]).unwrap();
        morley_sign &= morley_covariant(&swapped).unwrap() == m.scale(&rint(-1));
        morley_sign &= morley_covariant(&cycled).unwrap() == m.scale(&rint(-1));
        morley_sign &= morley_covariant(&rotated).unwrap() == m;
    }

    // deterministic: six points on the conic x0·x2 = x1² are detected
    let veronese = veronese_config(&[0, 1, 2, 3, 4, 5]);
    let on_conic = conic_invariant_d2(&veronese).is_zero();

    vec![
        ("sum of the six cubics".into(), sum_cubics),
        ("sum of the six scalars".into(), sum_bars),
        ("cubic pairing relation".into(), pairing),
        ("sum of cubes".into(), sum_cubes),
        ("fifteen lines on the surface".into(), lines15),
        ("perturbed cubic is rejected".into(), negative_control),
        ("conic invariant degree-four relation".into(), degree_four),
        ("conic through five meets the sixth point".into(), sixth_point),
        ("generic configurations miss the conic".into(), nonzero_d2),
        ("conic configuration is detected".into(), on_conic),
        ("signed symmetry of the Morley covariant".into(), morley_sign),
    ]
}

/// Six points (1, t, t²) on the conic x0·x2 = x1².
pub fn veronese_config(ts: &[i64; 6]) -> PlaneConfig {
    PlaneConfig::from_ints(ts.map(|t| [1, t, t * t])).unwrap()
}

// ---- Symbolic proofs ----

fn symbolic_vars() -> Vars {
    let mut names = vec!["x0".to_string(), "x1".to_string(), "x2".to_string()];
    for i in 0..6 {
        for c in 0..3 {
            names.push(format!("p{i}{c}"));
        }
    }
    Arc::new(names)
}

fn sym_point(vs: &Vars, i: usize) -> Vec<Poly> {
    (0..3).map(|c| Poly::var(vs, 3 + 3 * i + c)).collect()
}

fn sym_bracket(vs: &Vars, i: usize, j: usize, k: usize) -> Poly {
    poly_det(&[sym_point(vs, i), sym_point(vs, j), sym_point(vs, k)])
}

fn sym_line(vs: &Vars, i: usize, j: usize) -> Poly {
    let x: Vec<Poly> = (0..3).map(|c| Poly::var(vs, c)).collect();
    poly_det(&[sym_point(vs, i), sym_point(vs, j), x])
}

/// Transfer of a two-point bracket combination to the plane: every edge
/// (i, j) becomes the line form through points i−1, j−1.
fn sym_transfer(vs: &Vars, g: &GraphCombination) -> Poly {
    let mut out = Poly::zero(vs);
    for (edges, coeff) in g.terms() {
        let mut prod = Poly::constant(vs, coeff.clone());
        for &(u, v) in edges {
            prod = prod.mul(&sym_line(vs, u as usize - 1, v as usize - 1));
        }
        out = out.add(&prod);
    }
    out
}

/// Exact proofs, over fully symbolic point coordinates, of the three
/// cubic-surface identities and of the Lagrange identity they rest on.
/// Σa = 0 and Σāa = 0 expand directly; Σa³ = 0 is reduced to the
/// transferred straightening relation: each cubic is written in the
/// transferred noncrossing basis T₁…T₅, the integer cube-sum form collapses
/// to −192·(T₁T₂(−T₁−T₂+T₃+T₄+T₅) − T₃T₄T₅), and that relation expands to
/// zero.
pub fn cremona_symbolic_checks() -> Vec<(String, bool)> {
    let vs = symbolic_vars();
    let mut checks = Vec::new();

    // Lagrange identity: all three expansions of (ij,kl,mn) agree, for a
    // representative labeling (symbolic, hence for all labelings)
    let b = |i, j, k| sym_bracket(&vs, i, j, k);
    let form1 = b(0, 1, 4).mul(&b(2, 3, 5)).sub(&b(0, 1, 5).mul(&b(2, 3, 4)));
    let form2 = b(0, 1, 3).mul(&b(2, 4, 5)).sub(&b(0, 1, 2).mul(&b(3, 4, 5)));
    let form3 = b(0, 2, 3).mul(&b(1, 4, 5)).sub(&b(1, 2, 3).mul(&b(0, 4, 5)));
    checks.push((
        "lagrange identity".into(),
        form1.sub(&form2).is_zero() && form1.sub(&form3).is_zero(),
    ));

    let jb = points_line::joubert_invariants();
    let cubics: Vec<Poly> = jb.graphs.iter().map(|g| sym_transfer(&vs, g)).collect();

    let zero = Poly::zero(&vs);
    let total = cubics.iter().fold(zero.clone(), |acc, c| acc.add(c));
    checks.push(("sum of the six cubics".into(), total.is_zero()));

    // scalar companions from the ordered term lists
    let bars: Vec<Poly> = points_line::JOUBERT_TERMS
        .iter()
        .map(|rows| {
            rows.iter().fold(zero.clone(), |acc, term| {
                let [(i, j), (k, l), (m, n)] =
                    term.map(|(u, v)| (u as usize - 1, v as usize - 1));
                acc.add(&b(i, j, m).mul(&b(k, l, n)).sub(&b(i, j, n).mul(&b(k, l, m))))
            })
        })
        .collect();
    let bar_total = bars.iter().fold(zero.clone(), |acc, c| acc.add(c));
    checks.push(("sum of the six scalars".into(), bar_total.is_zero()));

    let paired = cubics
        .iter()
        .zip(&bars)
        .fold(zero.clone(), |acc, (c, bb)| acc.add(&c.mul(bb)));
    checks.push(("cubic pairing relation".into(), paired.is_zero()));

    // cube sum: (1) each cubic equals its coordinates in the transferred
    // basis, (2) the integer cube-sum form is −192 times the relation form,
    // (3) the transferred relation expands to zero
    let basis = points_line::six_point_basis();
    let t: Vec<Poly> = basis[1..].iter().map(|g| sym_transfer(&vs, g)).collect();
    let mut in_basis = true;
    for (cubic, coords) in cubics.iter().zip(jb.t_coords.iter()) {
        let combo = coords
            .iter()
            .zip(&t)
            .fold(zero.clone(), |acc, (c, tj)| acc.add(&tj.scale(c)));
        in_basis &= cubic.sub(&combo).is_zero();
    }
    checks.push(("cubics lie in the transferred basis".into(), in_basis));

    let yv = vars(&["y1", "y2", "y3", "y4", "y5"]);
    let y: Vec<Poly> = (0..5).map(|i| Poly::var(&yv, i)).collect();
    let yzero = Poly::zero(&yv);
    let cube_form = jb.t_coords.iter().fold(yzero.clone(), |acc, coords| {
        let lin = coords
            .iter()
            .zip(&y)
            .fold(yzero.clone(), |a, (c, yj)| a.add(&yj.scale(c)));
        acc.add(&lin.mul(&lin).mul(&lin))
    });
    let inner = y[2].add(&y[3]).add(&y[4]).sub(&y[0]).sub(&y[1]);
    let relation_form = y[0].mul(&y[1]).mul(&inner).sub(&y[2].mul(&y[3]).mul(&y[4]));
    checks.push((
        "cube-sum form is -192 times the relation form".into(),
        cube_form.add(&relation_form.scale(&rint(192))).is_zero(),
    ));

    let inner_t = t[2].add(&t[3]).add(&t[4]).sub(&t[0]).sub(&t[1]);
    let segre = t[0].mul(&t[1]).mul(&inner_t).sub(&t[2].mul(&t[3]).mul(&t[4]));
    checks.push(("transferred straightening relation".into(), segre.is_zero()));

    checks
}
