//! Graphical algebra of d labeled points on the projective line: directed
//! multigraphs as products of two-point brackets (ij) = x_i y_j − x_j y_i,
//! the noncrossing matching basis, graphical straightening, Hall matchings,
//! and the six-point Joubert invariants A…F with their ring relations.

use crate::exact::{invalid, rat_string, rint, Poly, Rat, Result, Vars};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

// ---- Graphs ----

/// Multigraph on vertices 1…d with loop-free edges stored (min, max).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatchGraph {
    d: u32,
    edges: Vec<(u32, u32)>,
}

impl MatchGraph {
    /// Edges are normalized to (min, max) and sorted; loops are rejected.
    pub fn new(d: u32, edges: &[(u32, u32)]) -> Result<MatchGraph> {
        let mut es = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i == j {
                return invalid("graph edges must join distinct vertices");
            }
            if i < 1 || j < 1 || i > d || j > d {
                return invalid("edge endpoint out of range");
            }
            es.push((i.min(j), i.max(j)));
        }
        es.sort();
        Ok(MatchGraph { d, edges: es })
    }

    pub fn vertex_count(&self) -> u32 {
        self.d
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Degree of each vertex 1…d.
    pub fn valence(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.d as usize];
        for &(i, j) in &self.edges {
            v[i as usize - 1] += 1;
            v[j as usize - 1] += 1;
        }
        v
    }
}

/// Chords (a,b), (c,d) on the circle 1…d cross iff exactly one endpoint of
/// one lies strictly between the endpoints of the other; edges sharing a
/// vertex (and parallel copies) never cross.
pub fn edges_cross(e1: (u32, u32), e2: (u32, u32)) -> bool {
    let (a, b) = (e1.0.min(e1.1), e1.0.max(e1.1));
    let (c, d) = (e2.0.min(e2.1), e2.0.max(e2.1));
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: u32| x > a && x < b;
    inside(c) != inside(d)
}

fn valence_of(d: u32, edges: &[(u32, u32)]) -> Vec<u32> {
    let mut v = vec![0u32; d as usize];
    for &(i, j) in edges {
        v[i as usize - 1] += 1;
        v[j as usize - 1] += 1;
    }
    v
}

/// Exact-rational combination of multigraphs sharing one valence vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCombination {
    d: u32,
    terms: BTreeMap<Vec<(u32, u32)>, Rat>,
}

impl GraphCombination {
    pub fn zero(d: u32) -> GraphCombination {
        GraphCombination { d, terms: BTreeMap::new() }
    }

    pub fn from_graph(g: &MatchGraph) -> GraphCombination {
        let mut c = GraphCombination::zero(g.d);
        c.add_oriented(g.edges(), Rat::one());
        c
    }

    /// Add coeff·Π(ij) with edges as written; reversed edges flip the sign
    /// and a loop kills the term.
    pub fn add_oriented(&mut self, edges: &[(u32, u32)], coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let mut sign = Rat::one();
        let mut es = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            assert!(i >= 1 && j >= 1 && i <= self.d && j <= self.d, "vertex out of range");
            if i == j {
                return;
            }
            if i > j {
                sign = -sign;
            }
            es.push((i.min(j), i.max(j)));
        }
        es.sort();
        if let Some((existing, _)) = self.terms.iter().next() {
            assert_eq!(
                valence_of(self.d, existing),
                valence_of(self.d, &es),
                "mixed valence vectors in one combination"
            );
        }
        let c = self.terms.entry(es).or_insert_with(Rat::zero);
        *c += coeff * sign;
        if self.terms.values().any(Rat::is_zero) {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<(u32, u32)>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &MatchGraph) -> Rat {
        self.terms.get(g.edges()).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> GraphCombination {
        if c.is_zero() {
            return GraphCombination::zero(self.d);
        }
        GraphCombination {
            d: self.d,
            terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &GraphCombination) -> GraphCombination {
        assert_eq!(self.d, other.d);
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_oriented(g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GraphCombination) -> GraphCombination {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Relabel vertices by a permutation given as the image list of 1…d.
    pub fn permute(&self, sigma: &[u32]) -> Result<GraphCombination> {
        if sigma.len() != self.d as usize {
            return invalid("permutation length must equal the vertex count");
        }
        let mut seen = vec![false; self.d as usize];
        for &s in sigma {
            if s < 1 || s > self.d || seen[s as usize - 1] {
                return invalid("not a permutation of the vertices");
            }
            seen[s as usize - 1] = true;
        }
        let mut out = GraphCombination::zero(self.d);
        for (g, c) in &self.terms {
            let mapped: Vec<(u32, u32)> = g
                .iter()
                .map(|&(i, j)| (sigma[i as usize - 1], sigma[j as usize - 1]))
                .collect();
            out.add_oriented(&mapped, c.clone());
        }
        Ok(out)
    }

    /// Product over edges of x_i y_j − x_j y_i at rational points.
    pub fn evaluate(&self, points: &[[Rat; 2]]) -> Result<Rat> {
        if points.len() != self.d as usize {
            return Err(crate::exact::Error::DegreeMismatch {
                expected: self.d as usize,
                got: points.len(),
            });
        }
        let mut total = Rat::zero();
        for (g, c) in &self.terms {
            let mut prod = c.clone();
            for &(i, j) in g {
                let p = &points[i as usize - 1];
                let q = &points[j as usize - 1];
                prod *= &p[0] * &q[1] - &q[0] * &p[1];
                if prod.is_zero() {
                    break;
                }
            }
            total += prod;
        }
        Ok(total)
    }

    /// Expansion as a polynomial in the homogeneous coordinates
    /// x₁, y₁, …, x_d, y_d.
    pub fn polynomial(&self) -> Poly {
        let names: Vec<String> = (1..=self.d)
            .flat_map(|i| [format!("x{i}"), format!("y{i}")])
            .collect();
        let vs: Vars = Arc::new(names);
        let x = |i: u32| Poly::var(&vs, 2 * (i as usize - 1));
        let y = |i: u32| Poly::var(&vs, 2 * (i as usize - 1) + 1);
        let mut total = Poly::zero(&vs);
        for (g, c) in &self.terms {
            let mut prod = Poly::constant(&vs, c.clone());
            for &(i, j) in g {
                prod = prod.mul(&x(i).mul(&y(j)).sub(&x(j).mul(&y(i))));
            }
            total = total.add(&prod);
        }
        total
    }
}

impl fmt::Display for GraphCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
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
            for &(i, j) in g {
                write!(f, "({i}{j})")?;
            }
        }
        Ok(())
    }
}

// ---- Noncrossing matchings ----

/// All loop-free perfect matchings of the weighted vertices 1…d (vertex i
/// carrying hᵢ endpoints) with pairwise noncrossing chords, in
/// lexicographic edge order. Empty when Σhᵢ is odd.
pub fn noncrossing_matchings(d: u32, weight: &[u32]) -> Vec<MatchGraph> {
    assert_eq!(weight.len(), d as usize, "one valence per vertex");
    let total: u32 = weight.iter().sum();
    let mut out = Vec::new();
    if total % 2 != 0 {
        return out;
    }
    let mut remaining = weight.to_vec();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    fn rec(
        d: u32,
        remaining: &mut Vec<u32>,
        edges: &mut Vec<(u32, u32)>,
        out: &mut Vec<MatchGraph>,
    ) {
        let u = match (1..=d).find(|&v| remaining[v as usize - 1] > 0) {
            None => {
                out.push(MatchGraph { d, edges: edges.clone() });
                return;
            }
            Some(v) => v,
        };
        // partners never go below the previous partner of the same vertex,
        // so each edge multiset is produced once, in lexicographic order
        let vmin = match edges.last() {
            Some(&(a, b)) if a == u => b,
            _ => u + 1,
        };
        for v in vmin..=d {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            let e = (u, v);
            if edges.iter().any(|&prev| edges_cross(prev, e)) {
                continue;
            }
            remaining[u as usize - 1] -= 1;
            remaining[v as usize - 1] -= 1;
            edges.push(e);
            rec(d, remaining, edges, out);
            edges.pop();
            remaining[u as usize - 1] += 1;
            remaining[v as usize - 1] += 1;
        }
    }
    rec(d, &mut remaining, &mut edges, &mut out);
    out
}

/// Rewrite onto the noncrossing basis by the three-term relation
/// (pr)(qs) = (pq)(rs) + (ps)(qr) at the first crossing pair; idempotent
/// and evaluation-preserving.
pub fn graph_straighten(g: &GraphCombination) -> GraphCombination {
    let mut out = GraphCombination::zero(g.d);
    // terms are merged by graph so each graph in flight carries its full
    // accumulated coefficient; every exchange strictly shortens the total
    // chord length, so the rewriting terminates
    let mut pending: BTreeMap<Vec<(u32, u32)>, Rat> = g.terms.clone();
    while let Some((edges, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let mut crossing = None;
        'outer: for a in 0..edges.len() {
            for b in a + 1..edges.len() {
                if edges_cross(edges[a], edges[b]) {
                    crossing = Some((a, b));
                    break 'outer;
                }
            }
        }
        let (a, b) = match crossing {
            None => {
                out.add_oriented(&edges, coeff);
                continue;
            }
            Some(pair) => pair,
        };
        // crossing chords have four distinct vertices p < q < r < s matched
        // as (p,r),(q,s)
        let mut vs = [edges[a].0, edges[a].1, edges[b].0, edges[b].1];
        vs.sort();
        let [p, q, r, s] = vs;
        for replacement in [[(p, q), (r, s)], [(p, s), (q, r)]] {
            let mut next: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
            for (k, &e) in edges.iter().enumerate() {
                if k != a && k != b {
                    next.push(e);
                }
            }
            next.extend_from_slice(&replacement);
            next.sort();
            *pending.entry(next).or_insert_with(Rat::zero) += &coeff;
        }
    }
    out
}

/// Evaluate a combination at rational points (free-function form).
pub fn graph_evaluate(g: &GraphCombination, points: &[[Rat; 2]]) -> Result<Rat> {
    g.evaluate(points)
}

// ---- Six points: the t-basis and the Joubert invariants ----

/// The redundant six-point functions t₀…t₅ of valence 1⁶: the crossing star
/// (14)(25)(36) and the five noncrossing matchings, each edge oriented from
/// its odd endpoint to its even endpoint (every edge here joins an odd
/// vertex to an even one, so the rule is well defined). This normalization
/// gives the straightening identity t₀ = −t₁ − t₂ + t₃ + t₄ + t₅.
pub fn six_point_basis() -> [GraphCombination; 6] {
    let oriented: [[(u32, u32); 3]; 6] = [
        [(1, 4), (5, 2), (3, 6)],
        [(1, 2), (3, 4), (5, 6)],
        [(1, 6), (3, 2), (5, 4)],
        [(1, 4), (3, 2), (5, 6)],
        [(1, 6), (5, 2), (3, 4)],
        [(1, 2), (3, 6), (5, 4)],
    ];
    oriented.map(|edges| {
        let mut g = GraphCombination::zero(6);
        g.add_oriented(&edges, Rat::one());
        g
    })
}

/// Coordinates of a valence-1⁶ combination on six points in the noncrossing
/// basis t₁…t₅ (computed by straightening).
pub fn t_coordinates(g: &GraphCombination) -> [Rat; 5] {
    assert_eq!(g.vertex_count(), 6);
    let basis = six_point_basis();
    let s = graph_straighten(g);
    let mut rebuilt = GraphCombination::zero(6);
    let mut coords: Vec<Rat> = Vec::with_capacity(5);
    for t in &basis[1..] {
        let (edges, sign) = t.terms.iter().next().unwrap();
        // the basis coefficient is ±1, so dividing by it is multiplying
        let c = s.terms.get(edges).cloned().unwrap_or_else(Rat::zero) * sign;
        rebuilt = rebuilt.add(&t.scale(&c));
        coords.push(c);
    }
    assert!(rebuilt.sub(&s).is_zero(), "support escaped the noncrossing basis");
    coords.try_into().unwrap()
}

/// The six Joubert invariants with their coordinates in the noncrossing
/// basis t₁…t₅.
pub struct JoubertInvariants {
    pub names: [&'static str; 6],
    pub graphs: [GraphCombination; 6],
    pub t_coords: [[Rat; 5]; 6],
}

/// Ordered bracket-pair terms of the six invariants A…F; the pair order
/// inside each term matters for the plane-point companion quantities.
pub(crate) const JOUBERT_TERMS: [[[(u32, u32); 3]; 5]; 6] = [
        // A
        [
            [(2, 5), (1, 3), (4, 6)],
            [(5, 1), (4, 2), (3, 6)],
            [(1, 4), (3, 5), (2, 6)],
            [(4, 3), (2, 1), (5, 6)],
            [(3, 2), (5, 4), (1, 6)],
        ],
        // B
        [
            [(5, 3), (1, 2), (4, 6)],
            [(1, 4), (2, 3), (5, 6)],
            [(2, 5), (3, 4), (1, 6)],
            [(3, 1), (4, 5), (2, 6)],
            [(4, 2), (5, 1), (3, 6)],
        ],
        // C
        [
            [(5, 3), (4, 1), (2, 6)],
            [(3, 4), (2, 5), (1, 6)],
            [(4, 2), (1, 3), (5, 6)],
            [(2, 1), (5, 4), (3, 6)],
            [(1, 5), (3, 2), (4, 6)],
        ],
        // D
        [
            [(4, 5), (3, 1), (2, 6)],
            [(5, 3), (2, 4), (1, 6)],
            [(4, 1), (2, 5), (3, 6)],
            [(3, 2), (1, 5), (4, 6)],
            [(2, 1), (4, 3), (5, 6)],
        ],
        // E
        [
            [(3, 1), (2, 4), (5, 6)],
            [(1, 2), (5, 3), (4, 6)],
            [(2, 5), (4, 1), (3, 6)],
            [(5, 4), (3, 2), (1, 6)],
            [(4, 3), (1, 5), (2, 6)],
        ],
        // F
        [
            [(4, 2), (3, 5), (1, 6)],
            [(2, 3), (1, 4), (5, 6)],
            [(3, 1), (5, 2), (4, 6)],
            [(1, 5), (4, 3), (2, 6)],
            [(5, 4), (2, 1), (3, 6)],
        ],
];

/// The displayed five-term oriented combinations A…F of six points.
pub fn joubert_invariants() -> JoubertInvariants {
    let graphs: Vec<GraphCombination> = JOUBERT_TERMS
        .iter()
        .map(|rows| {
            let mut g = GraphCombination::zero(6);
            for row in rows {
                g.add_oriented(row, Rat::one());
            }
            g
        })
        .collect();
    let t_coords: Vec<[Rat; 5]> = graphs.iter().map(t_coordinates).collect();
    JoubertInvariants {
        names: ["A", "B", "C", "D", "E", "F"],
        graphs: graphs.try_into().unwrap(),
        t_coords: t_coords.try_into().unwrap(),
    }
}

/// Exact checks of the six-point ring relations: the Segre cubic, the
/// vanishing elementary symmetric functions of A…F, the vanishing cube sum,
/// and the symmetry of the pairwise-difference product under point
/// relabeling (evaluated on random rational configurations).
pub fn coble_ring_checks(trials: u32, seed: u64) -> Vec<(String, bool)> {
    use rand::Rng;
    use rand::SeedableRng;
    let basis = six_point_basis();
    let t: Vec<Poly> = basis.iter().map(GraphCombination::polynomial).collect();
    let mut checks = Vec::new();

    // t₁t₂(−t₁−t₂+t₃+t₄+t₅) − t₃t₄t₅ = 0
    let inner = t[3].add(&t[4]).add(&t[5]).sub(&t[1]).sub(&t[2]);
    let segre = t[1].mul(&t[2]).mul(&inner).sub(&t[3].mul(&t[4]).mul(&t[5]));
    checks.push(("segre cubic relation".into(), segre.is_zero()));

    let jb = joubert_invariants();
    let polys: Vec<Poly> = jb.graphs.iter().map(GraphCombination::polynomial).collect();

    // elementary symmetric functions e₁, e₂, e₃ of A…F, built iteratively
    let vs = polys[0].vars().clone();
    let mut e1 = Poly::zero(&vs);
    let mut e2 = Poly::zero(&vs);
    let mut e3 = Poly::zero(&vs);
    for p in &polys {
        e3 = e3.add(&e2.mul(p));
        e2 = e2.add(&e1.mul(p));
        e1 = e1.add(p);
    }
    checks.push(("sum of the six invariants".into(), e1.is_zero()));
    checks.push(("third elementary symmetric function".into(), e3.is_zero()));

    let cubes = polys.iter().fold(Poly::zero(&vs), |acc, p| acc.add(&p.mul(p).mul(p)));
    checks.push(("sum of cubes".into(), cubes.is_zero()));

    // b₁₅ = Π over lexicographic pairs (Xᵢ − Xⱼ): invariant under the
    // generators (12) and (123456), checked on random configurations
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let generators: [[u32; 6]; 2] = [[2, 1, 3, 4, 5, 6], [2, 3, 4, 5, 6, 1]];
    let mut symmetric = true;
    for _ in 0..trials {
        let pts: Vec<[Rat; 2]> = (0..6)
            .map(|_| [rint(rng.gen_range(-9..=9)), rint(rng.gen_range(-9..=9))])
            .collect();
        let values: Vec<Rat> =
            jb.graphs.iter().map(|g| g.evaluate(&pts).unwrap()).collect();
        let b15 = pairwise_difference_product(&values);
        for sigma in &generators {
            let moved: Vec<[Rat; 2]> = (0..6)
                .map(|i| pts[sigma.iter().position(|&s| s as usize == i + 1).unwrap()].clone())
                .collect();
            let values2: Vec<Rat> =
                jb.graphs.iter().map(|g| g.evaluate(&moved).unwrap()).collect();
            let b15_moved = pairwise_difference_product(&values2);
            if b15 != b15_moved {
                symmetric = false;
            }
        }
    }
    checks.push(("pairwise-difference product symmetry".into(), symmetric));
    checks
}

fn pairwise_difference_product(values: &[Rat]) -> Rat {
    let mut prod = Rat::one();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            prod *= &values[i] - &values[j];
        }
    }
    prod
}

// ---- Hall matchings ----

/// Either a perfect matching of the left vertices into distinct right
/// vertices, or a left subset violating Hall's condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallOutcome {
    Matching(Vec<usize>),
    Violation(Vec<usize>),
}

/// Augmenting-path bipartite matching; adj[i] lists the right neighbors of
/// left vertex i. On failure the alternating-tree left set witnesses
/// |N(Y)| < |Y|.
pub fn hall_perfect_matching(adj: &[Vec<usize>], right_size: usize) -> HallOutcome {
    let left = adj.len();
    let mut match_left: Vec<Option<usize>> = vec![None; left];
    let mut match_right: Vec<Option<usize>> = vec![None; right_size];
    for start in 0..left {
        // BFS alternating tree from the unmatched left vertex
        let mut visited_left = vec![false; left];
        let mut visited_right = vec![false; right_size];
        let mut parent_right: Vec<Option<usize>> = vec![None; right_size];
        let mut queue = std::collections::VecDeque::new();
        visited_left[start] = true;
        queue.push_back(start);
        let mut augment_end: Option<usize> = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &r in &adj[u] {
                assert!(r < right_size, "right vertex out of range");
                if visited_right[r] {
                    continue;
                }
                visited_right[r] = true;
                parent_right[r] = Some(u);
                match match_right[r] {
                    None => {
                        augment_end = Some(r);
                        break 'bfs;
                    }
                    Some(next_left) => {
                        if !visited_left[next_left] {
                            visited_left[next_left] = true;
                            queue.push_back(next_left);
                        }
                    }
                }
            }
        }
        match augment_end {
            Some(mut r) => {
                // flip the path back to the root
                loop {
                    let u = parent_right[r].unwrap();
                    let prev = match_left[u];
                    match_left[u] = Some(r);
                    match_right[r] = Some(u);
                    match prev {
                        Some(pr) => r = pr,
                        None => break,
                    }
                }
            }
            None => {
                let witness: Vec<usize> =
                    (0..left).filter(|&u| visited_left[u]).collect();
                return HallOutcome::Violation(witness);
            }
        }
    }
    HallOutcome::Matching(match_left.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert;
    use crate::tableaux::{standard_tableaux_count, YoungDiagram};
    use num_traits::ToPrimitive;
    use rand::Rng;
    use rand::SeedableRng;

    fn rnd_points(rng: &mut impl Rng, count: usize) -> Vec<[Rat; 2]> {
        (0..count)
            .map(|_| [rint(rng.gen_range(-9..=9)), rint(rng.gen_range(-9..=9))])
            .collect()
    }

    fn catalan(g: u32) -> u64 {
        let b = crate::exact::binom(2 * g as i64, g as i64);
        (b / num_bigint::BigInt::from(g + 1)).to_u64().unwrap()
    }

    #[test]
    fn crossing_predicate() {
        assert!(edges_cross((1, 3), (2, 4)));
        assert!(!edges_cross((1, 2), (3, 4)));
        assert!(!edges_cross((1, 4), (2, 3)));
        assert!(!edges_cross((1, 3), (3, 5)), "shared endpoint");
        assert!(!edges_cross((1, 4), (2, 4)), "shared endpoint inside the arc");
        assert!(!edges_cross((2, 5), (2, 5)), "parallel copies");
        assert!(edges_cross((2, 5), (3, 6)));
    }

    #[test]
    fn noncrossing_enumeration() {
        let five = noncrossing_matchings(6, &[1; 6]);
        assert_eq!(five.len(), 5);
        let basis = six_point_basis();
        for t in &basis[1..] {
            let (edges, _) = t.terms().next().unwrap();
            assert!(five.iter().any(|m| m.edges() == &edges[..]), "missing {edges:?}");
        }

        let two = noncrossing_matchings(4, &[1; 4]);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].edges(), &[(1, 2), (3, 4)]);
        assert_eq!(two[1].edges(), &[(1, 4), (2, 3)]);

        let triangle = noncrossing_matchings(3, &[2, 2, 2]);
        assert_eq!(triangle.len(), 1);
        assert_eq!(triangle[0].edges(), &[(1, 2), (1, 3), (2, 3)]);

        assert!(noncrossing_matchings(3, &[1, 1, 1]).is_empty(), "odd total");
    }

    #[test]
    fn noncrossing_counts_are_catalan() {
        for g in 1..=6u32 {
            let count = noncrossing_matchings(2 * g, &vec![1; 2 * g as usize]).len() as u64;
            assert_eq!(count, catalan(g), "g = {g}");
            let shape = YoungDiagram::new(vec![g, g]).unwrap();
            assert_eq!(standard_tableaux_count(&shape), count);
        }
    }

    #[test]
    fn weight_one_count_agrees_three_ways() {
        let kempe = noncrossing_matchings(6, &[1; 6]).len() as u64;
        assert_eq!(kempe, 5);
        assert_eq!(hilbert::howe_dimension(6, 1).unwrap(), 5);
        let shape = YoungDiagram::new(vec![3, 3]).unwrap();
        assert_eq!(standard_tableaux_count(&shape), 5);
    }

    #[test]
    fn orientation_sign_and_loops() {
        let mut g = GraphCombination::zero(4);
        g.add_oriented(&[(2, 1), (3, 4)], Rat::one());
        let norm = MatchGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.coeff(&norm), rint(-1));
        let mut z = GraphCombination::zero(4);
        z.add_oriented(&[(2, 2), (3, 4)], Rat::one());
        assert!(z.is_zero());
        assert!(MatchGraph::new(4, &[(1, 1)]).is_err());
    }

    #[test]
    fn straighten_four_point_crossing() {
        let mut g = GraphCombination::zero(4);
        g.add_oriented(&[(1, 3), (2, 4)], Rat::one());
        let s = graph_straighten(&g);
        let mut expect = GraphCombination::zero(4);
        expect.add_oriented(&[(1, 2), (3, 4)], Rat::one());
        expect.add_oriented(&[(1, 4), (2, 3)], Rat::one());
        assert_eq!(s, expect);
        assert_eq!(graph_straighten(&expect), expect, "fixed point");
    }

    #[test]
    fn straighten_six_point_star() {
        let basis = six_point_basis();
        // t₀ = −t₁ − t₂ + t₃ + t₄ + t₅
        let coords = t_coordinates(&basis[0]);
        let expect: Vec<Rat> = [-1i64, -1, 1, 1, 1].iter().map(|&c| rint(c)).collect();
        assert_eq!(coords.to_vec(), expect);
        // equivalently, the redundant generator relation straightens to zero
        let relation = basis[0]
            .add(&basis[1])
            .add(&basis[2])
            .sub(&basis[3])
            .sub(&basis[4])
            .sub(&basis[5]);
        assert!(graph_straighten(&relation).is_zero());
    }

    #[test]
    fn straighten_preserves_evaluation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(167);
        for trial in 0..100 {
            let d = rng.gen_range(4..=6u32);
            let nedges = rng.gen_range(1..=4usize);
            let mut g = GraphCombination::zero(d);
            let edges: Vec<(u32, u32)> = (0..nedges)
                .map(|_| {
                    let i = rng.gen_range(1..=d);
                    let mut j = rng.gen_range(1..=d);
                    while j == i {
                        j = rng.gen_range(1..=d);
                    }
                    (i, j)
                })
                .collect();
            g.add_oriented(&edges, rint(rng.gen_range(-3..=3)));
            let s = graph_straighten(&g);
            for (m, _) in s.terms() {
                for a in 0..m.len() {
                    for b in a + 1..m.len() {
                        assert!(!edges_cross(m[a], m[b]), "trial {trial}");
                    }
                }
            }
            let pts = rnd_points(&mut rng, d as usize);
            assert_eq!(g.evaluate(&pts).unwrap(), s.evaluate(&pts).unwrap(), "trial {trial}");
        }
    }

    #[test]
    fn evaluation_basics() {
        let mut g = GraphCombination::zero(2);
        g.add_oriented(&[(1, 2)], Rat::one());
        let unit = g
            .evaluate(&[[rint(1), rint(0)], [rint(0), rint(1)]])
            .unwrap();
        assert_eq!(unit, rint(1));
        let same = g
            .evaluate(&[[rint(3), rint(2)], [rint(3), rint(2)]])
            .unwrap();
        assert!(same.is_zero(), "repeated point");
        assert!(g.evaluate(&[[rint(1), rint(0)]]).is_err(), "wrong point count");
    }

    #[test]
    fn joubert_coordinates_match_the_table() {
        let jb = joubert_invariants();
        let expect: [[i64; 5]; 6] = [
            [4, 4, -2, -2, -2],
            [0, 0, -2, -2, 2],
            [0, 0, 2, -2, -2],
            [0, -4, 2, 2, 2],
            [-4, 0, 2, 2, 2],
            [0, 0, -2, 2, -2],
        ];
        for (name, (got, want)) in jb.names.iter().zip(jb.t_coords.iter().zip(expect.iter())) {
            let want: Vec<Rat> = want.iter().map(|&c| rint(c)).collect();
            assert_eq!(got.to_vec(), want, "{name}");
        }
        // redundant t₀-coordinates: A/2 = −t₀ + t₁ + t₂ and D/2 = t₀ + t₁ − t₂
        let [t0, t1, t2, ..] = six_point_basis();
        let a_half = t1.add(&t2).sub(&t0);
        assert!(graph_straighten(&jb.graphs[0].sub(&a_half.scale(&rint(2)))).is_zero());
        let d_half = t0.add(&t1).sub(&t2);
        assert!(graph_straighten(&jb.graphs[3].sub(&d_half.scale(&rint(2)))).is_zero());
    }

    #[test]
    fn joubert_signed_action_of_generators() {
        let jb = joubert_invariants();
        let coords: Vec<Vec<Rat>> = jb.t_coords.iter().map(|c| c.to_vec()).collect();
        let coord_of = |g: &GraphCombination| -> Vec<Rat> { t_coordinates(g).to_vec() };
        // (12): A ↦ −D, B ↦ −E, C ↦ −F
        let swap = [2u32, 1, 3, 4, 5, 6];
        for (from, to) in [(0usize, 3usize), (1, 4), (2, 5)] {
            let moved = coord_of(&jb.graphs[from].permute(&swap).unwrap());
            let neg: Vec<Rat> = coords[to].iter().map(|c| -c.clone()).collect();
            assert_eq!(moved, neg, "{} under (12)", jb.names[from]);
        }
        // the 6-cycle is odd: every image is minus another invariant,
        // bijectively
        let cycle = [2u32, 3, 4, 5, 6, 1];
        let mut targets = Vec::new();
        for from in 0..6 {
            let moved = coord_of(&jb.graphs[from].permute(&cycle).unwrap());
            let to = (0..6)
                .find(|&j| {
                    let neg: Vec<Rat> = coords[j].iter().map(|c| -c.clone()).collect();
                    moved == neg
                })
                .unwrap_or_else(|| panic!("{} has no signed image", jb.names[from]));
            targets.push(to);
        }
        let mut sorted = targets.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4, 5], "images form a bijection");
    }

    #[test]
    fn coble_checks_all_pass() {
        for (name, ok) in coble_ring_checks(20, 173) {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn coordinate_change_to_any_five_is_invertible() {
        let jb = joubert_invariants();
        // every 5-subset of {A,…,F} spans the t-space
        for skip in 0..6 {
            let rows: Vec<Vec<Rat>> = (0..6)
                .filter(|&i| i != skip)
                .map(|i| jb.t_coords[i].to_vec())
                .collect();
            let m = crate::exact::Mat::from_rows(rows);
            assert_eq!(m.rank(), 5, "dropping {}", jb.names[skip]);
        }
    }

    #[test]
    fn hall_matching_outcomes() {
        // complete bipartite 3×3
        let k33: Vec<Vec<usize>> = vec![vec![0, 1, 2]; 3];
        match hall_perfect_matching(&k33, 3) {
            HallOutcome::Matching(m) => {
                let mut seen = m.clone();
                seen.sort();
                assert_eq!(seen, vec![0, 1, 2]);
            }
            HallOutcome::Violation(_) => panic!("K33 has a matching"),
        }
        // isolated left vertex
        let isolated: Vec<Vec<usize>> = vec![vec![0, 1], vec![], vec![1]];
        match hall_perfect_matching(&isolated, 2) {
            HallOutcome::Matching(_) => panic!("no matching exists"),
            HallOutcome::Violation(y) => assert!(y.contains(&1)),
        }
        // three left vertices crowded into two right vertices
        let crowded: Vec<Vec<usize>> = vec![vec![0, 1], vec![0, 1], vec![0, 1]];
        match hall_perfect_matching(&crowded, 2) {
            HallOutcome::Matching(_) => panic!("no matching exists"),
            HallOutcome::Violation(y) => {
                let neighbors: std::collections::BTreeSet<usize> =
                    y.iter().flat_map(|&u| crowded[u].iter().copied()).collect();
                assert!(neighbors.len() < y.len(), "genuine witness");
            }
        }
    }

    #[test]
    fn hall_matching_for_regular_unions() {
        // unions of m random permutations are m-regular, so Hall holds
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(179);
        for _ in 0..20 {
            let n = rng.gen_range(3..=7usize);
            let m = rng.gen_range(1..=3usize);
            let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
            for _ in 0..m {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.gen_range(0..=i);
                    perm.swap(i, j);
                }
                for (u, &r) in perm.iter().enumerate() {
                    adj[u].insert(r);
                }
            }
            let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
            match hall_perfect_matching(&adj, n) {
                HallOutcome::Matching(mt) => {
                    for (u, &r) in mt.iter().enumerate() {
                        assert!(adj[u].contains(&r));
                    }
                }
                HallOutcome::Violation(_) => panic!("regular graphs satisfy the condition"),
            }
        }
    }
}
