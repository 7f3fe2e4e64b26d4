//! `invar`: command-line front end for the invariant-theory engine.
//!
//! Every computation prints either human-readable text or, with `--json`,
//! a machine-readable object whose polynomials use comma-joined exponent
//! keys and exact "num/den" coefficient strings.  Exit codes: 0 success,
//! 1 usage error, 2 verification failure.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use invar_core::exact::{coeff_vars, parse_rat, rat_string, Error, Poly, Rat, Result, Series};
use invar_core::points_line::{self, GraphCombination};
use invar_core::points_plane;
use invar_core::selftest::{self, SuiteConfig};
use invar_core::tableaux::{self, BracketExpression, Tableau};
use invar_core::{binary, hilbert, molien, ternary};
use num_traits::{One, Signed};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "invar",
    version,
    about = "Exact classical invariant theory: invariant bases, Hilbert series, \
             bracket straightening, and six-point configurations"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Series truncation order
    #[arg(long, global = true, env = "INVAR_TRUNC", default_value_t = 20)]
    trunc: u32,
    /// Seed for randomized verifications
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DimMethod {
    /// Kernel of the lowering operator on the isobaric slice
    Kernel,
    /// Difference of two weight-space counts
    Cs,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of the degree-g invariants of the binary d-ic
    BinaryInvariants { d: u32, g: u32 },
    /// Dimension of that space, by either route
    BinaryDim {
        d: u32,
        g: u32,
        #[arg(long, value_enum, default_value_t = DimMethod::Cs)]
        method: DimMethod,
    },
    /// Isobaric projection of a coefficient monomial, e.g. "a0*a4" or "a2^2"
    Reynolds { d: u32, g: u32, monomial: String },
    /// r-th transvectant of the generic binary d-ic with itself
    Transvectant { d: u32, r: u32 },
    /// Basis of the degree-g invariants of the ternary d-ic
    TernaryInvariants { d: u32, g: u32 },
    /// Invariant dimension by the alternating six-term weight count
    Bedratyuk { d: u32, g: u32 },
    /// Covariant Hilbert series of the binary d-ic (order e), or the full
    /// bigraded series
    Springer {
        d: u32,
        #[arg(default_value_t = 0)]
        e: u32,
        #[arg(long)]
        bigraded: bool,
    },
    /// Molien series of a symmetric-group character (groups s2, s3, s4, s6)
    Molien {
        group: String,
        rep: String,
        /// Restrict the average to the even classes
        #[arg(long)]
        even: bool,
    },
    /// Dimension of the weight-k invariants of d ordered points on the line
    Howe { d: u32, k: u32 },
    /// Expand a rectangular bracket tableau ("111122,223333" or "[12]^2[13]^2[23]^2")
    /// into form coefficients
    SymbolicExpand { tableau: String },
    /// Straighten a bracket expression, e.g. "(13)(24)" or "(14)(23)(56) - (12)(34)(56)"
    Straighten { expr: String },
    /// Noncrossing matchings of d points with the given valences
    Noncrossing { d: u32, weight: Vec<u32> },
    /// Verified identities of the six-point ring on the line
    SixLineChecks {
        #[arg(long, default_value_t = 20)]
        trials: u32,
    },
    /// Verified identities of six-point configurations in the plane
    SixPlaneChecks {
        #[arg(long, default_value_t = 20)]
        trials: u32,
        /// Also prove the hexahedral identities over fully symbolic
        /// coordinates (slow)
        #[arg(long)]
        symbolic: bool,
    },
    /// Run the complete published-value verification suite
    Selftest {
        /// Trim the long sweeps
        #[arg(long)]
        quick: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(2),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Verification(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

// ---- Output helpers ----

fn poly_json(p: &Poly) -> serde_json::Value {
    p.to_json()
}

fn print_value(cli: &Cli, v: u64) {
    if cli.json {
        println!("{}", json!({ "value": v }));
    } else {
        println!("{v}");
    }
}

fn print_basis(cli: &Cli, basis: &[Poly]) {
    if cli.json {
        let items: Vec<_> = basis.iter().map(poly_json).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "dimension": basis.len(), "basis": items }))
                .unwrap()
        );
    } else {
        println!("dimension {}", basis.len());
        for (i, p) in basis.iter().enumerate() {
            println!("[{i}] {p}");
        }
    }
}

fn print_poly(cli: &Cli, p: &Poly) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&poly_json(p)).unwrap());
    } else {
        println!("{p}");
    }
}

fn print_series(cli: &Cli, s: &Series) {
    if cli.json {
        let mut v = poly_json(s.poly());
        v["trunc"] = json!(s.trunc());
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{}  + O(degree {})", s.poly(), s.trunc() + 1);
    }
}

/// Print a check list; returns whether everything passed.
fn print_checks(cli: &Cli, checks: &[(String, bool)]) -> bool {
    let all = checks.iter().all(|(_, ok)| *ok);
    if cli.json {
        let items: Vec<_> = checks
            .iter()
            .map(|(name, ok)| json!({ "name": name, "pass": ok }))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "checks": items, "all_pass": all })).unwrap()
        );
    } else {
        for (name, ok) in checks {
            println!("[{}] {name}", if *ok { "PASS" } else { "FAIL" });
        }
    }
    all
}

// ---- Input parsers ----

/// Parse a coefficient monomial like "a0*a4", "a2^2", "a1 a3" over a0..=ad.
fn parse_monomial(s: &str, d: u32) -> Result<Poly> {
    let vs = coeff_vars("a", d, &[]);
    let mut exps = vec![0u32; vs.len()];
    for factor in s.split(['*', ' ']).filter(|f| !f.is_empty()) {
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => {
                let k: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad exponent in {factor:?}")))?;
                (b.trim(), k)
            }
            None => (factor.trim(), 1),
        };
        let idx: usize = base
            .strip_prefix('a')
            .and_then(|i| i.parse().ok())
            .ok_or_else(|| {
                Error::InvalidArgument(format!("expected a coefficient like a3, got {base:?}"))
            })?;
        if idx > d as usize {
            return Err(Error::InvalidArgument(format!(
                "coefficient {base} out of range for degree {d}"
            )));
        }
        exps[idx] += power;
    }
    Ok(Poly::monomial(&vs, &exps, Rat::one()))
}

/// One parsed additive term: a rational coefficient and bracket factors.
struct BracketTerm {
    coeff: Rat,
    factors: Vec<Vec<u32>>,
}

/// Parse "(13)(24) - 2 (12)(34)" or "[125][346]" into signed bracket
/// products. All brackets must have the same number of labels.
fn parse_bracket_expr(s: &str) -> Result<Vec<BracketTerm>> {
    let mut terms: Vec<BracketTerm> = Vec::new();
    let mut chars = s.chars().peekable();
    let mut sign = Rat::one();
    let mut pending: Option<BracketTerm> = None;
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' | '-' => {
                if let Some(t) = pending.take() {
                    terms.push(t);
                }
                sign = if c == '-' { -Rat::one() } else { Rat::one() };
                chars.next();
            }
            '0'..='9' => {
                if pending.is_some() {
                    return Err(Error::InvalidArgument(
                        "coefficients must precede their brackets".into(),
                    ));
                }
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() || d == '/' {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                sign *= parse_rat(&num)?;
            }
            '*' => {
                chars.next();
            }
            '(' | '[' => {
                let close = if c == '(' { ')' } else { ']' };
                chars.next();
                let mut labels = Vec::new();
                loop {
                    match chars.next() {
                        Some(d) if d.is_ascii_digit() => {
                            let v = d.to_digit(10).unwrap();
                            if v == 0 {
                                return Err(Error::InvalidArgument(
                                    "labels are single digits 1-9".into(),
                                ));
                            }
                            labels.push(v);
                        }
                        Some(d) if d == close => break,
                        other => {
                            return Err(Error::InvalidArgument(format!(
                                "expected digit or {close:?}, got {other:?}"
                            )))
                        }
                    }
                }
                if labels.len() < 2 || labels.len() > 3 {
                    return Err(Error::InvalidArgument(
                        "brackets take two or three labels".into(),
                    ));
                }
                match &mut pending {
                    Some(t) => t.factors.push(labels),
                    None => {
                        pending = Some(BracketTerm {
                            coeff: std::mem::replace(&mut sign, Rat::one()),
                            factors: vec![labels],
                        })
                    }
                }
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unexpected character {other:?} in bracket expression"
                )))
            }
        }
    }
    if let Some(t) = pending.take() {
        terms.push(t);
    }
    if terms.is_empty() {
        return Err(Error::InvalidArgument("empty bracket expression".into()));
    }
    let k = terms[0].factors[0].len();
    if terms.iter().any(|t| t.factors.iter().any(|f| f.len() != k)) {
        return Err(Error::InvalidArgument(
            "all brackets in one expression must have the same number of labels".into(),
        ));
    }
    Ok(terms)
}

/// Parse a tableau: rows of digits separated by commas, or bracket-power
/// sugar like "[12]^2[13]^2[23]^2" (columns sorted into rows).
fn parse_tableau(s: &str) -> Result<Tableau> {
    let s = s.trim();
    if s.starts_with('[') {
        let terms = parse_bracket_expr(s)?;
        if terms.len() != 1 || !terms[0].coeff.is_one() {
            return Err(Error::InvalidArgument(
                "tableau sugar takes a single bracket product".into(),
            ));
        }
        let mut columns = terms[0].factors.clone();
        columns.sort();
        let depth = columns[0].len();
        let rows: Vec<Vec<u32>> =
            (0..depth).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
        return Tableau::new(rows);
    }
    let rows: Vec<Vec<u32>> = s
        .split(',')
        .map(|row| {
            row.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10).filter(|&v| v > 0).ok_or_else(|| {
                        Error::InvalidArgument(format!("bad tableau digit {c:?}"))
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Tableau::new(rows)
}

/// Desugared power notation: "(13)^2" is not accepted in bracket
/// expressions, so expand tableau sugar separately. For straightening,
/// powers appear as repeated factors.
fn expand_powers(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    let mut last_bracket = String::new();
    while let Some(c) = chars.next() {
        if c == '^' {
            let mut num = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    num.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            if let Ok(k) = num.parse::<u32>() {
                for _ in 1..k {
                    out.push_str(&last_bracket);
                }
            }
            continue;
        }
        if c == '(' || c == '[' {
            last_bracket.clear();
        }
        last_bracket.push(c);
        out.push(c);
    }
    out
}

// ---- Command bodies ----

fn straighten_pairs(cli: &Cli, terms: &[BracketTerm]) -> Result<bool> {
    let d = terms
        .iter()
        .flat_map(|t| t.factors.iter().flatten())
        .max()
        .copied()
        .unwrap_or(2);
    // valence homogeneity (graph sums must live in one weight space)
    let valence = |t: &BracketTerm| {
        let mut v = vec![0u32; d as usize];
        for f in &t.factors {
            for &l in f {
                v[l as usize - 1] += 1;
            }
        }
        v
    };
    let v0 = valence(&terms[0]);
    if terms.iter().any(|t| valence(t) != v0) {
        return Err(Error::InvalidArgument(
            "all terms must use each label equally often".into(),
        ));
    }
    let mut g = GraphCombination::zero(d);
    for t in terms {
        let edges: Vec<(u32, u32)> = t.factors.iter().map(|f| (f[0], f[1])).collect();
        g.add_oriented(&edges, t.coeff.clone());
    }
    let out = points_line::graph_straighten(&g);
    if cli.json {
        let items: Vec<_> = out
            .terms()
            .map(|(edges, c)| {
                json!({
                    "coeff": rat_string(c),
                    "factors": edges.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "terms": items, "display": out.to_string() }))
                .unwrap()
        );
    } else {
        println!("{out}");
    }
    Ok(true)
}

fn straighten_triples(cli: &Cli, terms: &[BracketTerm]) -> Result<bool> {
    let mut expr = BracketExpression::zero(3);
    for t in terms {
        expr = expr.add(&BracketExpression::monomial(&t.factors, t.coeff.clone()));
    }
    let out = tableaux::pluecker_straighten(&expr);
    let display = format_columns(&out);
    if cli.json {
        let items: Vec<_> = out
            .terms()
            .map(|(cols, c)| json!({ "coeff": rat_string(c), "factors": cols }))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "terms": items, "display": display })).unwrap()
        );
    } else {
        println!("{display}");
    }
    Ok(true)
}

fn format_columns(b: &BracketExpression) -> String {
    if b.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (cols, c)) in b.terms().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&rat_string(&mag));
            out.push(' ');
        }
        for col in cols {
            out.push('(');
            for l in col {
                out.push_str(&l.to_string());
            }
            out.push(')');
        }
    }
    out
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::BinaryInvariants { d, g } => {
            print_basis(cli, &binary::invariant_basis(*d, *g));
            Ok(true)
        }
        Command::BinaryDim { d, g, method } => {
            let dim = match method {
                DimMethod::Kernel => binary::invariant_basis(*d, *g).len() as u64,
                DimMethod::Cs => hilbert::binary_invariant_dim(*d, *g),
            };
            print_value(cli, dim);
            Ok(true)
        }
        Command::Reynolds { d, g, monomial } => {
            let p = parse_monomial(monomial, *d)?;
            print_poly(cli, &binary::reynolds(&p, *d, *g)?);
            Ok(true)
        }
        Command::Transvectant { d, r } => {
            let f = binary::BinaryForm::generic(*d);
            let t = binary::transvectant(&f, &f, *r)?;
            print_poly(cli, &t.to_xy_poly());
            Ok(true)
        }
        Command::TernaryInvariants { d, g } => {
            print_basis(cli, &ternary::ternary_invariant_basis(*d, *g));
            Ok(true)
        }
        Command::Bedratyuk { d, g } => {
            print_value(cli, hilbert::bedratyuk_invariant_dim(*d, *g));
            Ok(true)
        }
        Command::Springer { d, e, bigraded } => {
            let s = if *bigraded {
                hilbert::springer_bigraded(*d, cli.trunc)
            } else {
                hilbert::springer_covariant_series(*d, *e, cli.trunc)
            };
            print_series(cli, &s);
            Ok(true)
        }
        Command::Molien { group, rep, even } => {
            let n: u32 = group
                .trim_start_matches(['s', 'S'])
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("unknown group {group:?}")))?;
            let g = molien::GroupData::symmetric(n)?;
            let character = g.irreducible(rep)?;
            let selection = if *even {
                molien::ClassSelection::Even
            } else {
                molien::ClassSelection::Full
            };
            let s = molien::molien_series(&g, &character, selection, cli.trunc)?;
            print_series(cli, &s);
            Ok(true)
        }
        Command::Howe { d, k } => {
            print_value(cli, hilbert::howe_dimension(*d, *k)?);
            Ok(true)
        }
        Command::SymbolicExpand { tableau } => {
            let t = parse_tableau(&expand_powers(tableau))?;
            let rows = t.rows().len() as u32;
            let content = t.content();
            let d = content[0];
            if content.iter().any(|&c| c != d) {
                return Err(Error::InvalidArgument(
                    "each label must appear equally often".into(),
                ));
            }
            let m = content.len() as u32;
            print_poly(cli, &tableaux::symbolic_invariant(&t, d, m, rows - 1)?);
            Ok(true)
        }
        Command::Straighten { expr } => {
            let terms = parse_bracket_expr(&expand_powers(expr))?;
            match terms[0].factors[0].len() {
                2 => straighten_pairs(cli, &terms),
                _ => straighten_triples(cli, &terms),
            }
        }
        Command::Noncrossing { d, weight } => {
            let matchings = points_line::noncrossing_matchings(*d, weight);
            if cli.json {
                let items: Vec<_> = matchings
                    .iter()
                    .map(|m| m.edges().iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>())
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({ "count": matchings.len(), "matchings": items })
                    )
                    .unwrap()
                );
            } else {
                println!("count {}", matchings.len());
                for m in &matchings {
                    let s: String = m
                        .edges()
                        .iter()
                        .map(|&(i, j)| format!("({i}{j})"))
                        .collect();
                    println!("{s}");
                }
            }
            Ok(true)
        }
        Command::SixLineChecks { trials } => {
            Ok(print_checks(cli, &points_line::coble_ring_checks(*trials, cli.seed)))
        }
        Command::SixPlaneChecks { trials, symbolic } => {
            let mut checks = points_plane::plane_checks(*trials, cli.seed);
            if *symbolic {
                let sym = points_plane::cremona_symbolic_checks();
                checks.extend(sym.into_iter().map(|(n, p)| (format!("symbolic {n}"), p)));
            }
            Ok(print_checks(cli, &checks))
        }
        Command::Selftest { quick } => {
            let cfg = SuiteConfig { quick: *quick, seed: cli.seed };
            let reports = selftest::run_all(&cfg);
            let all = reports.iter().all(|r| r.pass);
            if cli.json {
                let items: Vec<_> = reports
                    .iter()
                    .map(|r| {
                        json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "checks": items, "all_pass": all }))
                        .unwrap()
                );
            } else {
                for r in &reports {
                    println!(
                        "[{}] {:2}. {} — {}",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.id,
                        r.name,
                        r.detail
                    );
                }
            }
            Ok(all)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_parser() {
        let vs = coeff_vars("a", 4, &[]);
        assert_eq!(
            parse_monomial("a0*a4", 4).unwrap(),
            Poly::monomial(&vs, &[1, 0, 0, 0, 1], Rat::one())
        );
        assert_eq!(
            parse_monomial("a2^2", 4).unwrap(),
            Poly::monomial(&vs, &[0, 0, 2, 0, 0], Rat::one())
        );
        assert!(parse_monomial("a7", 4).is_err());
        assert!(parse_monomial("b2", 4).is_err());
    }

    #[test]
    fn bracket_parser() {
        let terms = parse_bracket_expr("(13)(24) - 2 (12)(34)").unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].factors, vec![vec![1, 3], vec![2, 4]]);
        assert!(terms[0].coeff.is_one());
        assert_eq!(terms[1].coeff, invar_core::rint(-2));
        assert!(parse_bracket_expr("(12)(345)").is_err());
        assert!(parse_bracket_expr("").is_err());
        let sugar = expand_powers("[12]^3");
        assert_eq!(parse_bracket_expr(&sugar).unwrap()[0].factors.len(), 3);
    }

    #[test]
    fn tableau_parser() {
        let t = parse_tableau("111122,223333").unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 1, 1, 2, 2], vec![2, 2, 3, 3, 3, 3]]);
        let sugar = parse_tableau(&expand_powers("[12]^2[13]^2[23]^2")).unwrap();
        assert_eq!(sugar.rows(), t.rows());
        assert!(parse_tableau("1x2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let basis = binary::invariant_basis(4, 2);
        let v = basis[0].to_json();
        let back = Poly::from_json(&v).unwrap();
        assert_eq!(back, basis[0]);
        let text = serde_json::to_string(&v).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(Poly::from_json(&reparsed).unwrap(), basis[0]);
    }
}
