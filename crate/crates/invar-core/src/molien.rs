//! Molien series for permutation-group representations given by character
//! data: class sizes, power maps, and integer character tables for Σ₂, Σ₃,
//! Σ₄ and Σ₆ (with the even-class restriction giving Alt(6)).  The series
//! (1/|G|)·Σ_g det(1−t·g)⁻¹ is assembled classwise; each characteristic
//! polynomial is reconstructed from power traces by the Newton identities.

use crate::exact::{invalid, rint, vars, Error, Mono, Poly, Rat, Result, Series};
use num_traits::{One, Zero};

/// Conjugacy-class data and integer character table of a finite group.
#[derive(Clone, Debug)]
pub struct GroupData {
    name: String,
    order: u64,
    class_names: Vec<&'static str>,
    class_sizes: Vec<u64>,
    even: Vec<bool>,
    /// power_maps[e−2][c] = class of g^e for g in class c, e = 2..=5
    power_maps: [Vec<usize>; 4],
    characters: Vec<(&'static str, Vec<i64>)>,
}

/// A (virtual) character: one integer trace per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationCharacter {
    values: Vec<i64>,
}

impl RepresentationCharacter {
    /// The identity-class value is the dimension and must be positive.
    pub fn new(values: Vec<i64>) -> Result<RepresentationCharacter> {
        if values.is_empty() || values[0] <= 0 {
            return invalid("character needs a positive dimension at the identity class");
        }
        Ok(RepresentationCharacter { values })
    }

    pub fn dim(&self) -> u32 {
        self.values[0] as u32
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, class: usize) -> i64 {
        self.values[class]
    }
}

/// Which part of the group to average over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassSelection {
    Full,
    Even,
}

impl GroupData {
    /// The symmetric group Σ_n for n ∈ {2, 3, 4, 6}.
    pub fn symmetric(n: u32) -> Result<GroupData> {
        let g = match n {
            2 => GroupData {
                name: "S2".into(),
                order: 2,
                class_names: vec!["()", "(12)"],
                class_sizes: vec![1, 1],
                even: vec![true, false],
                power_maps: [vec![0, 0], vec![0, 1], vec![0, 0], vec![0, 1]],
                characters: vec![("2", vec![1, 1]), ("11", vec![1, -1])],
            },
            3 => GroupData {
                name: "S3".into(),
                order: 6,
                class_names: vec!["()", "(12)", "(123)"],
                class_sizes: vec![1, 3, 2],
                even: vec![true, false, true],
                power_maps: [
                    vec![0, 0, 2],
                    vec![0, 1, 0],
                    vec![0, 0, 2],
                    vec![0, 1, 2],
                ],
                characters: vec![
                    ("3", vec![1, 1, 1]),
                    ("111", vec![1, -1, 1]),
                    ("21", vec![2, 0, -1]),
                ],
            },
            4 => GroupData {
                name: "S4".into(),
                order: 24,
                class_names: vec!["()", "(12)", "(12)(34)", "(123)", "(1234)"],
                class_sizes: vec![1, 6, 3, 8, 6],
                even: vec![true, false, true, true, false],
                power_maps: [
                    vec![0, 0, 0, 3, 2],
                    vec![0, 1, 2, 0, 4],
                    vec![0, 0, 0, 3, 0],
                    vec![0, 1, 2, 3, 4],
                ],
                characters: vec![
                    ("4", vec![1, 1, 1, 1, 1]),
                    ("1111", vec![1, -1, 1, 1, -1]),
                    ("22", vec![2, 0, 2, -1, 0]),
                    ("31", vec![3, 1, -1, 0, -1]),
                    ("211", vec![3, -1, -1, 0, 1]),
                ],
            },
            6 => GroupData {
                name: "S6".into(),
                order: 720,
                class_names: vec![
                    "()",
                    "(12)",
                    "(12)(34)",
                    "(12)(34)(56)",
                    "(123)",
                    "(123)(45)",
                    "(123)(456)",
                    "(1234)",
                    "(1234)(56)",
                    "(12345)",
                    "(123456)",
                ],
                class_sizes: vec![1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120],
                even: vec![
                    true, false, true, false, true, false, true, false, true, true, false,
                ],
                power_maps: [
                    vec![0, 0, 0, 0, 4, 4, 6, 2, 2, 9, 6],
                    vec![0, 1, 2, 3, 0, 1, 0, 7, 8, 9, 3],
                    vec![0, 0, 0, 0, 4, 4, 6, 0, 0, 9, 6],
                    vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 0, 10],
                ],
                characters: vec![
                    ("X1", vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
                    ("X2", vec![5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1]),
                    ("X3", vec![9, 3, 1, 3, 0, 0, 0, -1, 1, -1, 0]),
                    ("X4", vec![10, 2, -2, -2, 1, -1, 1, 0, 0, 0, 1]),
                    ("X5", vec![5, 1, 1, -3, -1, 1, 2, -1, -1, 0, 0]),
                    ("X6", vec![16, 0, 0, 0, -2, 0, -2, 0, 0, 1, 0]),
                    ("X7", vec![10, -2, -2, 2, 1, 1, 1, 0, 0, 0, -1]),
                    ("X8", vec![5, -1, 1, 3, -1, -1, 2, 1, -1, 0, 0]),
                    ("X9", vec![9, -3, 1, -3, 0, 0, 0, 1, 1, -1, 0]),
                    ("X10", vec![5, -3, 1, 1, 2, 0, -1, -1, -1, 0, 1]),
                    ("X11", vec![1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1]),
                ],
            },
            _ => return invalid("group data embedded only for n in {2, 3, 4, 6}"),
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let total: u64 = self.class_sizes.iter().sum();
        if total != self.order {
            return Err(Error::Verification("class sizes do not sum to the order".into()));
        }
        if self.order > 1 {
            let even: u64 = self
                .class_sizes
                .iter()
                .zip(&self.even)
                .filter(|(_, &e)| e)
                .map(|(&s, _)| s)
                .sum();
            if even * 2 != self.order {
                return Err(Error::Verification("even classes must cover half the group".into()));
            }
        }
        // first orthogonality: Σ_c size·χᵢ(c)·χⱼ(c) = |G|·δᵢⱼ
        for (i, (ni, xi)) in self.characters.iter().enumerate() {
            for (j, (nj, xj)) in self.characters.iter().enumerate() {
                let s: i64 = self
                    .class_sizes
                    .iter()
                    .zip(xi.iter().zip(xj.iter()))
                    .map(|(&sz, (&a, &b))| sz as i64 * a * b)
                    .sum();
                let expect = if i == j { self.order as i64 } else { 0 };
                if s != expect {
                    return Err(Error::Verification(format!(
                        "character orthogonality fails for {ni}, {nj}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn class_names(&self) -> &[&'static str] {
        &self.class_names
    }

    pub fn even_classes(&self) -> &[bool] {
        &self.even
    }

    pub fn irreducible_names(&self) -> Vec<&'static str> {
        self.characters.iter().map(|(n, _)| *n).collect()
    }

    pub fn irreducible(&self, name: &str) -> Result<RepresentationCharacter> {
        self.characters
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| RepresentationCharacter { values: v.clone() })
            .ok_or_else(|| {
                Error::InvalidArgument(format!("no irreducible named {name} in {}", self.name))
            })
    }

    /// Order of the elements in a class.
    pub fn element_order(&self, class: usize) -> u64 {
        for e in 1..=6u64 {
            if self.power_small(class, e) == 0 {
                return e;
            }
        }
        unreachable!("element order exceeds 6")
    }

    /// Class of g^e for e ≤ 6, straight from the stored maps.
    fn power_small(&self, class: usize, e: u64) -> usize {
        match e {
            1 => class,
            2..=5 => self.power_maps[e as usize - 2][class],
            // g⁶ = (g³)²
            6 => self.power_maps[0][self.power_maps[1][class]],
            _ => unreachable!(),
        }
    }

    /// Class of g^e for any e ≥ 0.
    pub fn class_power(&self, class: usize, e: u64) -> usize {
        let r = e % self.element_order(class);
        if r == 0 {
            0
        } else {
            self.power_small(class, r)
        }
    }

    fn check_rep(&self, rep: &RepresentationCharacter) -> Result<()> {
        if rep.values.len() != self.class_count() {
            return Err(Error::DegreeMismatch {
                expected: self.class_count(),
                got: rep.values.len(),
            });
        }
        Ok(())
    }
}

/// Elementary symmetric functions e₁…e_n of the eigenvalues of one group
/// element, from the traces of its first n powers, by the Newton identities
/// k·e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i.
pub fn charpoly_from_power_traces(traces: &[Rat]) -> Vec<Rat> {
    let n = traces.len();
    let mut e: Vec<Rat> = Vec::with_capacity(n + 1);
    e.push(Rat::one());
    for k in 1..=n {
        let mut s = Rat::zero();
        for i in 1..=k {
            let term = &e[k - i] * &traces[i - 1];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        e.push(s / rint(k as i64));
    }
    e.remove(0);
    e
}

/// det(1 − t·g) = Σ (−1)ⁱ eᵢ tⁱ for a representative g of the class,
/// as a polynomial in the single variable t.
pub fn det_one_minus_tg(
    group: &GroupData,
    rep: &RepresentationCharacter,
    class: usize,
) -> Result<Poly> {
    group.check_rep(rep)?;
    let n = rep.dim() as usize;
    let traces: Vec<Rat> = (1..=n as u64)
        .map(|e| rint(rep.at(group.class_power(class, e))))
        .collect();
    let es = charpoly_from_power_traces(&traces);
    let t = vars(&["t"]);
    let mut p = Poly::one(&t);
    for (i, ei) in es.iter().enumerate() {
        let c = if (i + 1) % 2 == 1 { -ei.clone() } else { ei.clone() };
        p.add_term(Mono(vec![i as u32 + 1]), c);
    }
    Ok(p)
}

/// (1/|G'|)·Σ_classes size·det(1−t·g)⁻¹ truncated at the given order,
/// where G' is the whole group or its even part.
pub fn molien_series(
    group: &GroupData,
    rep: &RepresentationCharacter,
    selection: ClassSelection,
    trunc: u32,
) -> Result<Series> {
    group.check_rep(rep)?;
    let t = vars(&["t"]);
    let mut acc = Series::zero(&t, trunc);
    let mut shrunk: u64 = 0;
    for c in 0..group.class_count() {
        if selection == ClassSelection::Even && !group.even[c] {
            continue;
        }
        shrunk += group.class_sizes[c];
        let det = det_one_minus_tg(group, rep, c)?;
        let inv = Series::from_poly(&det, trunc).invert()?;
        acc = acc.add(&inv.scale(&rint(group.class_sizes[c] as i64)));
    }
    Ok(acc.scale(&Rat::new(1.into(), (shrunk as i64).into())))
}

/// Character of the k-th symmetric power for k ≤ 3, classwise via the
/// power maps:
///   χ_{S²W}(g) = (χ(g)² + χ(g²))/2,
///   χ_{S³W}(g) = (χ(g)³ + 3χ(g)χ(g²) + 2χ(g³))/6.
pub fn sym_power_character(
    group: &GroupData,
    rep: &RepresentationCharacter,
    k: u32,
) -> Result<RepresentationCharacter> {
    group.check_rep(rep)?;
    let values: Vec<i64> = match k {
        1 => rep.values.clone(),
        2 => (0..group.class_count())
            .map(|c| {
                let x1 = rep.at(c);
                let x2 = rep.at(group.class_power(c, 2));
                let num = x1 * x1 + x2;
                debug_assert_eq!(num % 2, 0);
                num / 2
            })
            .collect(),
        3 => (0..group.class_count())
            .map(|c| {
                let x1 = rep.at(c);
                let x2 = rep.at(group.class_power(c, 2));
                let x3 = rep.at(group.class_power(c, 3));
                let num = x1 * x1 * x1 + 3 * x1 * x2 + 2 * x3;
                debug_assert_eq!(num % 6, 0);
                num / 6
            })
            .collect(),
        _ => return invalid("symmetric-power characters are supplied only for k ≤ 3"),
    };
    RepresentationCharacter::new(values)
}
