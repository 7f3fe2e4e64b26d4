//! Verification suite of published reference values: every pinned
//! constant, table, and identity the engine is expected to reproduce,
//! runnable in one sweep.  The `invar selftest` command and the acceptance
//! test target both drive this module; each check is exact (no tolerances).

use crate::exact::{binom, coeff_vars, rat, rat_string, rational_series, rint, vars, Mono, Poly, Rat};
use crate::points_line::{self, GraphCombination};
use crate::points_plane;
use crate::{binary, hilbert, molien, tableaux, ternary};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;

/// Outcome of one numbered check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Suite-wide knobs: `quick` trims the sweeps (for smoke tests), the seed
/// fixes every randomized verification.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub quick: bool,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { quick: false, seed: 2024 }
    }
}

pub const CHECK_COUNT: u32 = 16;

pub fn check_names() -> [&'static str; CHECK_COUNT as usize] {
    [
        "binary quartic invariant basis",
        "Reynolds projector values",
        "ternary isobaric monomial counts",
        "six-term weight-count table",
        "plane-quartic cubic invariant",
        "Aronhold pfaffian",
        "covariant Hilbert series",
        "Molien series",
        "dimension cross-check sweep",
        "graphical straightening and counts",
        "six-point invariant ring",
        "point-weight dimensions",
        "hexahedral plane identities",
        "cubic syzygy",
        "symplectic determinant expansion",
        "operator and decomposition properties",
    ]
}

pub fn run_check(id: u32, cfg: &SuiteConfig) -> CheckReport {
    let (pass, detail) = match id {
        1 => check_quartic_basis(),
        2 => check_reynolds(),
        3 => check_isobaric_counts(),
        4 => check_weight_table(),
        5 => check_plane_quartic_invariant(),
        6 => check_aronhold(cfg),
        7 => check_hilbert_series(cfg),
        8 => check_molien(),
        9 => check_dimension_sweep(cfg),
        10 => check_graphical(),
        11 => check_six_point_ring(cfg),
        12 => check_point_weights(),
        13 => check_plane_identities(cfg),
        14 => check_syzygy(),
        15 => check_symplectic_determinant(),
        16 => check_properties(cfg),
        _ => panic!("check ids run 1..={CHECK_COUNT}"),
    };
    CheckReport { id, name: check_names()[id as usize - 1], pass, detail }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CheckReport> {
    (1..=CHECK_COUNT).map(|id| run_check(id, cfg)).collect()
}

// ---- Pinned reference polynomials ----

fn a_vars(d: u32) -> crate::exact::Vars {
    coeff_vars("a", d, &[])
}

/// I = a₀a₄ − 4a₁a₃ + 3a₂².
fn quartic_i() -> Poly {
    Poly::from_terms(
        &a_vars(4),
        vec![
            (vec![1, 0, 0, 0, 1], rint(1)),
            (vec![0, 1, 0, 1, 0], rint(-4)),
            (vec![0, 0, 2, 0, 0], rint(3)),
        ],
    )
}

/// J = a₀a₂a₄ − a₀a₃² − a₁²a₄ + 2a₁a₂a₃ − a₂³.
fn quartic_j() -> Poly {
    Poly::from_terms(
        &a_vars(4),
        vec![
            (vec![1, 0, 1, 0, 1], rint(1)),
            (vec![1, 0, 0, 2, 0], rint(-1)),
            (vec![0, 2, 0, 0, 1], rint(-1)),
            (vec![0, 1, 1, 1, 0], rint(2)),
            (vec![0, 0, 3, 0, 0], rint(-1)),
        ],
    )
}

/// The 23-term degree-3 invariant of ternary quartics, verbatim.
fn plane_quartic_invariant() -> Poly {
    let vs = ternary::ternary_coeff_vars(4);
    let term = |c: i64, parts: [[u32; 3]; 3]| {
        let mut e = vec![0u32; vs.len()];
        for p in parts {
            e[ternary::exp_index(4, p)] += 1;
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

// ---- Checks ----

fn check_quartic_basis() -> (bool, String) {
    let b2 = binary::invariant_basis(4, 2);
    let b3 = binary::invariant_basis(4, 3);
    let ok = b2 == vec![quartic_i()] && b3 == vec![quartic_j()];
    (ok, "3-term I and 5-term J reproduced exactly as kernel bases".into())
}

fn check_reynolds() -> (bool, String) {
    let vs = a_vars(4);
    let i = quartic_i();
    let mono = |e: [u32; 5]| Poly::monomial(&vs, &e, Rat::one());
    let proj = |e: [u32; 5]| binary::reynolds(&mono(e), 4, 2).unwrap();
    let mut ok = proj([1, 0, 0, 0, 1]) == i.scale(&rat(2, 5));
    ok &= proj([0, 1, 0, 1, 0]) == i.scale(&rat(-1, 10));
    ok &= proj([0, 0, 2, 0, 0]) == i.scale(&rat(1, 15));
    let mut zeros = 0u32;
    for p in 0..=4u32 {
        for q in p..=4u32 {
            if p + q == 4 {
                continue;
            }
            let mut e = [0u32; 5];
            e[p as usize] += 1;
            e[q as usize] += 1;
            ok &= proj(e).is_zero();
            zeros += 1;
        }
    }
    (ok, format!("2/5, -1/10, 1/15 projections exact; {zeros} non-isobaric monomials annihilated"))
}

fn check_isobaric_counts() -> (bool, String) {
    let mut ok = ternary::ternary_isobaric_monomials(4, 3).basis.len() == 23;
    ok &= binom(17, 3) == 680.into();
    ok &= ternary::ternary_isobaric_monomials(3, 6).basis.len() == 103;
    ok &= binom(15, 6) == 5005.into();
    (ok, "23 of 680 (quartic, degree 3) and 103 of 5005 (cubic, degree 6)".into())
}

fn check_weight_table() -> (bool, String) {
    let s = hilbert::ternary_weight_enumerator(4, 15);
    let h = |p: [i64; 3]| hilbert::ternary_h(&s, 4, 3, p);
    let mut ok = h([4, 4, 4]) == 23;
    ok &= h([5, 3, 4]) == 19;
    ok &= h([3, 4, 5]) == 19;
    ok &= h([3, 3, 6]) == 16;
    ok &= h([5, 2, 5]) == 15;
    ok &= h([4, 2, 6]) == 15;
    ok &= hilbert::bedratyuk_invariant_dim(4, 3) == 1;
    (ok, "center 23, hexagon 19,19,16,15,15, alternating sum 1".into())
}

fn check_plane_quartic_invariant() -> (bool, String) {
    let basis = ternary::ternary_invariant_basis(4, 3);
    let table = plane_quartic_invariant();
    if basis.len() != 1 {
        return (false, format!("expected one invariant, found {}", basis.len()));
    }
    // proportionality scalar, pinning every one of the 23 coefficients
    let (lead_mono, lead_coeff) = table.terms().next().unwrap();
    let scalar = basis[0].coeff(&lead_mono.0) / lead_coeff;
    let ok = !scalar.is_zero() && basis[0] == table.scale(&scalar);
    (ok, format!("all 23 monomials and coefficients match, global scalar {}", rat_string(&scalar)))
}

fn check_aronhold(cfg: &SuiteConfig) -> (bool, String) {
    let basis = ternary::ternary_invariant_basis(3, 4);
    if basis.len() != 1 {
        return (false, format!("expected one invariant, found {}", basis.len()));
    }
    let mut ok = basis[0].num_terms() == 25;
    let constant = |p: &Poly| p.coeff(&vec![0u32; p.nvars()]);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa10);
    for _ in 0..20 {
        let vals: Vec<Rat> = (0..10)
            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=2)))
            .collect();
        let f = ternary::TernaryForm::from_rats(3, &vals);
        let pf = constant(&ternary::aronhold_pfaffian(&f));
        let kernel_value = basis[0].eval(&vals);
        ok &= pf == kernel_value * rint(-3);
    }
    let mut fermat_coeffs = vec![Rat::zero(); 10];
    for e in [[3, 0, 0], [0, 3, 0], [0, 0, 3]] {
        fermat_coeffs[ternary::exp_index(3, e)] = Rat::one();
    }
    let fermat = ternary::TernaryForm::from_rats(3, &fermat_coeffs);
    ok &= constant(&ternary::aronhold_pfaffian(&fermat)).is_zero();
    (ok, "25 monomials; pfaffian = -3 x kernel invariant on 20 random cubics; vanishes on the Fermat cubic".into())
}

fn check_hilbert_series(cfg: &SuiteConfig) -> (bool, String) {
    let n = 20;
    let z = vars(&["z"]);
    let cubic = hilbert::springer_covariant_series(3, 0, n);
    let cubic_expect = rational_series(&Poly::one(&z), &[vec![4]], n).unwrap();
    let quartic = hilbert::springer_covariant_series(4, 0, n);
    let quartic_expect = rational_series(&Poly::one(&z), &[vec![2], vec![3]], n).unwrap();
    let mut ok = true;
    for k in 0..=n {
        ok &= cubic.coeff(&[k]) == cubic_expect.coeff(&[k]);
        ok &= quartic.coeff(&[k]) == quartic_expect.coeff(&[k]);
    }

    let nb = if cfg.quick { 12 } else { 20 };
    let zw = vars(&["z", "w"]);
    let mut num3 = Poly::one(&zw);
    num3.add_term(Mono(vec![3, 3]), rint(1));
    let expect3 =
        rational_series(&num3, &[vec![4, 0], vec![1, 3], vec![2, 2]], nb).unwrap();
    ok &= hilbert::springer_bigraded(3, nb) == expect3;
    let mut num4 = Poly::one(&zw);
    num4.add_term(Mono(vec![3, 6]), rint(1));
    let expect4 =
        rational_series(&num4, &[vec![2, 0], vec![3, 0], vec![1, 4], vec![2, 4]], nb).unwrap();
    ok &= hilbert::springer_bigraded(4, nb) == expect4;
    (ok, format!("1/(1-z^4) and 1/((1-z^2)(1-z^3)) to order {n}; both bigraded closed forms to order {nb}"))
}

fn check_molien() -> (bool, String) {
    let n = 20;
    let t = vars(&["t"]);
    let mut ok = true;

    let s4 = molien::GroupData::symmetric(4).unwrap();
    let got = molien::molien_series(&s4, &s4.irreducible("22").unwrap(), molien::ClassSelection::Full, n)
        .unwrap();
    let expect = rational_series(&Poly::one(&t), &[vec![2], vec![3]], n).unwrap();
    ok &= got == expect;

    let s6 = molien::GroupData::symmetric(6).unwrap();
    let denom: Vec<Vec<u32>> = (2..=6u32).map(|i| vec![i]).collect();
    let mut num = Poly::one(&t);
    num.add_term(Mono(vec![15]), rint(1));
    let got = molien::molien_series(&s6, &s6.irreducible("X5").unwrap(), molien::ClassSelection::Even, n)
        .unwrap();
    ok &= got == rational_series(&num, &denom, n).unwrap();

    let got = molien::molien_series(&s6, &s6.irreducible("X8").unwrap(), molien::ClassSelection::Full, n)
        .unwrap();
    ok &= got == rational_series(&Poly::one(&t), &denom, n).unwrap();

    (ok, format!("three pinned series reproduced coefficientwise to order {n}"))
}

fn check_dimension_sweep(cfg: &SuiteConfig) -> (bool, String) {
    let (dmax, gmax) = if cfg.quick { (5, 6) } else { (6, 8) };
    let mut ok = true;
    let mut pairs = 0u32;
    for d in 1..=dmax {
        for g in 1..=gmax {
            if (d * g) % 2 != 0 {
                continue;
            }
            pairs += 1;
            ok &= hilbert::binary_invariant_dim(d, g) == binary::invariant_basis(d, g).len() as u64;
        }
    }
    (ok, format!("counting formula matches kernel dimension on {pairs} (d,g) pairs, d<={dmax}, g<={gmax}"))
}

fn check_graphical() -> (bool, String) {
    let mut ok = points_line::noncrossing_matchings(6, &[1; 6]).len() == 5;

    let basis = points_line::six_point_basis();
    let coords = points_line::t_coordinates(&basis[0]);
    ok &= coords == [rint(-1), rint(-1), rint(1), rint(1), rint(1)];

    let t: Vec<Poly> = basis.iter().map(GraphCombination::polynomial).collect();
    let inner = t[3].add(&t[4]).add(&t[5]).sub(&t[1]).sub(&t[2]);
    let segre = t[1].mul(&t[2]).mul(&inner).sub(&t[3].mul(&t[4]).mul(&t[5]));
    ok &= segre.is_zero();

    let shape = tableaux::YoungDiagram::new(vec![6, 6]).unwrap();
    ok &= tableaux::semistandard_tableaux(&shape, &[2; 6]).len() == 15;

    (ok, "5 noncrossing matchings; star straightens to -t1-t2+t3+t4+t5; cubic relation symbolic; 15 semistandard fillings".into())
}

fn check_six_point_ring(cfg: &SuiteConfig) -> (bool, String) {
    let trials = if cfg.quick { 5 } else { 20 };
    let jb = points_line::joubert_invariants();
    let total = jb.graphs.iter().fold(GraphCombination::zero(6), |acc, g| acc.add(g));
    let mut ok = points_line::graph_straighten(&total).is_zero();

    ok &= points_line::coble_ring_checks(trials, cfg.seed).iter().all(|(_, p)| *p);

    // signed action of the generators on the six invariants
    let coords: Vec<[Rat; 5]> = jb.t_coords.to_vec();
    let neg = |c: &[Rat; 5]| -> [Rat; 5] { c.clone().map(|v| -v) };
    let swap = [2u32, 1, 3, 4, 5, 6];
    for (from, to) in [(0usize, 3usize), (1, 4), (2, 5), (3, 0), (4, 1), (5, 2)] {
        let moved = points_line::t_coordinates(&jb.graphs[from].permute(&swap).unwrap());
        ok &= moved == neg(&coords[to]);
    }
    let cycle = [2u32, 3, 4, 5, 6, 1];
    let mut targets = Vec::new();
    for g in &jb.graphs {
        let moved = points_line::t_coordinates(&g.permute(&cycle).unwrap());
        match (0..6).find(|&j| moved == neg(&coords[j])) {
            Some(j) => targets.push(j),
            None => ok = false,
        }
    }
    targets.sort_unstable();
    ok &= targets == vec![0, 1, 2, 3, 4, 5];

    (ok, format!("sum, e3, cube-sum identities symbolic; signed generator action exact; {trials} difference-product trials"))
}

fn check_point_weights() -> (bool, String) {
    let mut ok = hilbert::howe_dimension(6, 1).unwrap() == 5;
    let t = vars(&["t"]);
    let num = Poly::from_terms(
        &t,
        vec![
            (vec![0], rint(1)),
            (vec![1], rint(8)),
            (vec![2], rint(22)),
            (vec![3], rint(8)),
            (vec![4], rint(1)),
        ],
    );
    let series = rational_series(&num, &vec![vec![1]; 6], 8).unwrap();
    for k in 0..=8u32 {
        let expect = series.coeff(&[k]);
        ok &= rint(hilbert::howe_dimension(8, k).unwrap() as i64) == expect;
    }
    (ok, "weight-1 dimension 5 for six points; eight-point dimensions match their generating series for k<=8".into())
}

fn check_plane_identities(cfg: &SuiteConfig) -> (bool, String) {
    let trials = if cfg.quick { 5 } else { 20 };
    let checks = points_plane::plane_checks(trials, cfg.seed);
    let ok = checks.iter().all(|(_, p)| *p);
    (
        ok,
        format!(
            "{} identities over {trials} random configurations; degree-4 conic relation holds with the recorded 6^4 normalization",
            checks.len()
        ),
    )
}

fn check_syzygy() -> (bool, String) {
    let suite = binary::cubic_covariant_suite(&binary::BinaryForm::generic(3));
    (suite.syzygy.is_zero(), "36H^3 + 9*disc*f^2 + Q^2 = 0 on symbolic coefficients".into())
}

fn check_symplectic_determinant() -> (bool, String) {
    let by_power = binary::gherardelli_determinant(&binary::BinaryForm::generic(4));
    let mut ok = by_power[0] == quartic_j();
    ok &= by_power[1] == quartic_i().scale(&rat(-1, 2));
    ok &= by_power[2].is_zero();
    ok &= by_power[3] == Poly::constant(&a_vars(4), rat(1, 2));
    (ok, "expansion is t^3/2 - (t/2)I + J; the t-coefficient -I/2 is the recorded value".into())
}

fn compositions(total: u32, slots: usize) -> Vec<Vec<u32>> {
    if slots == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, slots - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Character of the k-th symmetric power of the degree-e monomial space:
/// the sum over size-k multisets of degree-e monomials.
fn sym_power_character(vs: &crate::exact::Vars, e: u32, k: u32) -> Poly {
    fn rec(basis: &[Vec<u32>], start: usize, left: u32, cur: &mut Vec<u32>, out: &mut Poly) {
        if left == 0 {
            out.add_term(Mono(cur.clone()), Rat::one());
            return;
        }
        for i in start..basis.len() {
            let saved = cur.clone();
            for (slot, &x) in cur.iter_mut().zip(basis[i].iter()) {
                *slot += x;
            }
            rec(basis, i, left - 1, cur, out);
            *cur = saved;
        }
    }
    let basis = compositions(e, vs.len());
    let mut out = Poly::zero(vs);
    let mut cur = vec![0u32; vs.len()];
    rec(&basis, 0, k, &mut cur, &mut out);
    out
}

fn check_properties(cfg: &SuiteConfig) -> (bool, String) {
    let mut ok = true;

    // commutator eigenvalue dg - 2p on every monomial
    let mut monos = 0u32;
    for d in 1..=5u32 {
        let vs = a_vars(d);
        for g in 1..=4u32 {
            for e in compositions(g, d as usize + 1) {
                let p: i64 = e.iter().enumerate().map(|(i, &k)| (i as i64) * (k as i64)).sum();
                let m = Poly::monomial(&vs, &e, Rat::one());
                let lhs = binary::apply_d(&binary::apply_delta(&m, d).unwrap(), d)
                    .unwrap()
                    .sub(&binary::apply_delta(&binary::apply_d(&m, d).unwrap(), d).unwrap());
                ok &= lhs == m.scale(&rint((d as i64) * (g as i64) - 2 * p));
                monos += 1;
            }
        }
    }

    // straightening preserves evaluation
    let trials = if cfg.quick { 25 } else { 100 };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x57a1);
    for _ in 0..trials {
        let d = rng.gen_range(2..=6u32);
        let mut g = GraphCombination::zero(d);
        let edges: Vec<(u32, u32)> = (0..rng.gen_range(1..=4))
            .map(|_| loop {
                let u = rng.gen_range(1..=d);
                let v = rng.gen_range(1..=d);
                if u != v {
                    break (u, v);
                }
            })
            .collect();
        g.add_oriented(&edges, rint(rng.gen_range(1..=4)));
        let s = points_line::graph_straighten(&g);
        for (term, _) in s.terms() {
            for (i, &e1) in term.iter().enumerate() {
                for &e2 in &term[i + 1..] {
                    ok &= !points_line::edges_cross(e1, e2);
                }
            }
        }
        let pts: Vec<[Rat; 2]> = (0..d)
            .map(|_| [rint(rng.gen_range(-9..=9)), rint(rng.gen_range(-9..=9))])
            .collect();
        ok &= g.evaluate(&pts).unwrap() == s.evaluate(&pts).unwrap();
    }

    // symmetric-power decompositions into irreducible characters
    let expect = |pairs: &[(&[u32], u64)]| -> std::collections::BTreeMap<Vec<u32>, u64> {
        pairs.iter().map(|(l, m)| (l.to_vec(), *m)).collect()
    };
    let v3 = vars(&["x", "y", "z"]);
    let dec = tableaux::schur_decompose(&sym_power_character(&v3, 3, 2)).unwrap();
    ok &= dec == expect(&[(&[6], 1), (&[4, 2], 1)]);
    let dec = tableaux::schur_decompose(&sym_power_character(&v3, 2, 3)).unwrap();
    ok &= dec == expect(&[(&[6], 1), (&[4, 2], 1), (&[2, 2, 2], 1)]);
    let v2 = vars(&["x", "y"]);
    let dec = tableaux::schur_decompose(&sym_power_character(&v2, 4, 2)).unwrap();
    ok &= dec == expect(&[(&[8], 1), (&[6, 2], 1), (&[4, 4], 1)]);

    (ok, format!("commutator eigenvalue on {monos} monomials; {trials} straightening evaluations; three symmetric-power decompositions"))
}
