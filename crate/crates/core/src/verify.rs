//! Verification suites: each one recomputes a family of results with the library and compares
//! them with closed forms, tables or independent matrix realizations. A suite never stops at
//! the first disagreement; every check is reported with its own pass flag.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::carter::{
    b_exponent, b_partition_diagram, c_partition_diagram, d_partition_diagram,
    enumerate_elliptic_classes, labeling_signature, names, partitions, predict_signature,
    sample_elliptic, verify_final_chart, Budget, CarterDiagram, Strategy,
};
use crate::error::{Error, Result};
use crate::oracles::classical::{
    check_generators, check_tits_words, classical_spin_check, Realization,
};
use crate::oracles::clifford::DEFAULT_PRIME;
use crate::oracles::{
    adjoint_spin_check, check_tits_model, verify_relations, AdjointGroup, ClassicalGroup, SpinGroup,
};
use crate::rootsystem::{Family, RootSystem, RootSystemType};
use crate::tits::{spin, spin_signature, TitsElement};
use crate::torus::TorusVector;
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    FinalChart,
    E8,
    Center,
    Coxeter,
    BPartitions,
    CClasses,
    Examples,
    Braid,
    Oracles,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::FinalChart,
        Suite::E8,
        Suite::Center,
        Suite::Coxeter,
        Suite::BPartitions,
        Suite::CClasses,
        Suite::Examples,
        Suite::Braid,
        Suite::Oracles,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FinalChart => "final-chart",
            Suite::E8 => "e8",
            Suite::Center => "center",
            Suite::Coxeter => "coxeter",
            Suite::BPartitions => "b-partitions",
            Suite::CClasses => "c-classes",
            Suite::Examples => "examples",
            Suite::Braid => "braid",
            Suite::Oracles => "oracles",
            Suite::Properties => "properties",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "relations" {
            return Ok(Suite::Braid);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::config(format!(
                    "unknown suite '{s}' (known: {}, all)",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Largest rank visited by rank-indexed suites; the relation and oracle suites stop at 8.
    pub max_rank: usize,
    pub seed: u64,
    pub budget: Budget,
    pub e8_samples: u64,
    pub relation_pairs: usize,
    pub oracle_samples: usize,
    pub property_samples: usize,
    /// Odd prime over which the Clifford realizations are computed.
    pub clifford_prime: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_rank: 9,
            seed: 0,
            budget: Budget::default(),
            e8_samples: 100_000,
            relation_pairs: 500,
            oracle_samples: 200,
            property_samples: 150,
            clifford_prime: DEFAULT_PRIME,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite,
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Turns the outcome of one check into a report line. Mismatches and other per-item errors
/// become failing lines; configuration and budget errors abort the suite.
fn check(name: impl Into<String>, outcome: Result<(bool, String)>) -> Result<Check> {
    let name = name.into();
    match outcome {
        Ok((pass, detail)) => Ok(Check { name, pass, detail }),
        Err(e @ (Error::Config(_) | Error::Budget { .. })) => Err(e),
        Err(e) => Ok(Check {
            name,
            pass: false,
            detail: e.to_string(),
        }),
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::FinalChart => final_chart(cfg)?,
        Suite::E8 => e8(cfg)?,
        Suite::Center => center(cfg)?,
        Suite::Coxeter => coxeter(cfg)?,
        Suite::BPartitions => b_partitions(cfg)?,
        Suite::CClasses => c_classes(cfg)?,
        Suite::Examples => examples()?,
        Suite::Braid => braid(cfg)?,
        Suite::Oracles => oracles(cfg)?,
        Suite::Properties => properties(cfg)?,
    };
    Ok(SuiteReport::new(suite, checks))
}

fn ty(family: Family, rank: usize) -> RootSystemType {
    RootSystemType::new(family, rank).expect("rank within bounds")
}

fn parse(s: &str) -> RootSystemType {
    s.parse().expect("valid type")
}

/// Classical types of rank at most `max_rank` (A from 1, B and C from 2, D from 4), followed
/// by the exceptional ones that fit, optionally including E8.
pub fn chart_types(max_rank: usize, with_e8: bool) -> Vec<RootSystemType> {
    let mut out = Vec::new();
    for (family, lo) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 2),
        (Family::D, 4),
    ] {
        out.extend((lo..=max_rank).map(|n| ty(family, n)));
    }
    for (name, rank) in [("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)] {
        if rank <= max_rank && (with_e8 || name != "E8") {
            out.push(parse(name));
        }
    }
    out
}

fn tv(rank: usize, indices: &[usize]) -> TorusVector {
    TorusVector::from_indices(rank, indices)
}

/// `h_1 h_3 ... h_k` for odd `k`.
fn odd_product(rank: usize, k: usize) -> TorusVector {
    tv(rank, &(1..=k).step_by(2).collect::<Vec<_>>())
}

fn final_chart(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    chart_types(cfg.max_rank, false)
        .into_iter()
        .map(|t| {
            let outcome = verify_final_chart(t, Strategy::Auto, &cfg.budget, cfg.seed).map(|rep| {
                let bad: Vec<String> = rep
                    .rows
                    .iter()
                    .filter(|r| !r.pass)
                    .map(|r| {
                        format!(
                            "{}: got ({}, {}), chart ({}, {})",
                            r.class,
                            r.adjoint_spin,
                            r.universal_spin,
                            r.expected_adjoint,
                            r.expected_universal
                        )
                    })
                    .collect();
                let mut detail = format!(
                    "{} of {} classes match ({})",
                    rep.rows.iter().filter(|r| r.pass).count(),
                    rep.found_classes,
                    rep.strategy
                );
                if let Some(e) = rep.expected_classes.filter(|&e| e != rep.found_classes) {
                    detail.push_str(&format!("; expected {e} classes"));
                }
                if !bad.is_empty() {
                    detail.push_str(&format!("; {}", bad.join("; ")));
                }
                (rep.pass, detail)
            });
            check(t.to_string(), outcome)
        })
        .collect()
}

fn e8(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let budget = Budget {
        samples: cfg.e8_samples,
        ..cfg.budget
    };
    let rep = sample_elliptic(parse("E8"), &budget, cfg.seed)?;
    let buckets: Vec<String> = rep
        .buckets
        .iter()
        .map(|b| format!("{} x{}", b.char_poly_factors, b.samples.unwrap_or(0)))
        .collect();
    let all_one = rep
        .buckets
        .iter()
        .all(|b| b.spins.iter().all(|s| s.spin == crate::tits::Spin::Plus));
    let pass = rep.nontrivial_signatures == 0 && rep.inconsistent_spins == 0 && all_one;
    Ok(vec![
        Check {
            name: "E8 signatures".into(),
            pass,
            detail: format!(
                "{} elliptic of {} draws (seed {}), {} nontrivial signatures",
                rep.elliptic, rep.draws, rep.seed, rep.nontrivial_signatures
            ),
        },
        Check {
            name: "E8 buckets".into(),
            pass: rep.elliptic >= cfg.e8_samples,
            detail: format!(
                "{} characteristic polynomials: {}",
                rep.buckets.len(),
                buckets.join(", ")
            ),
        },
    ])
}

/// The order-2 elements of the center of the simply connected group, as a table.
pub fn expected_center(t: RootSystemType) -> Vec<TorusVector> {
    let n = t.rank();
    let mut out = match t.family() {
        Family::A if n % 2 == 1 => vec![odd_product(n, n)],
        Family::B => vec![tv(n, &[n])],
        Family::C => vec![odd_product(n, 2 * ((n - 1) / 2) + 1)],
        Family::D if n.is_multiple_of(2) => {
            vec![
                odd_product(n, n - 1),
                tv(n, &[n - 1, n]),
                odd_product(n, n - 3) + tv(n, &[n]),
            ]
        }
        Family::D => vec![tv(n, &[n - 1, n])],
        Family::E if n == 7 => vec![tv(7, &[1, 3, 5])],
        _ => Vec::new(),
    };
    out.sort();
    out
}

fn show(ts: &[TorusVector]) -> String {
    if ts.is_empty() {
        "none".into()
    } else {
        ts.iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn center(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    chart_types(cfg.max_rank, true)
        .into_iter()
        .map(|t| {
            let got = RootSystem::build(t).central_involutions();
            let want = expected_center(t);
            check(
                t.to_string(),
                Ok((
                    got == want,
                    format!("computed {}, table {}", show(&got), show(&want)),
                )),
            )
        })
        .collect()
}

fn signature_check(name: String, w: &WeylElement, want: TorusVector) -> Result<Check> {
    let outcome =
        spin_signature(w).map(|got| (got == want, format!("g^d = {got}, expected {want}")));
    check(name, outcome)
}

fn coxeter(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let top = cfg.max_rank.min(9);
    let mut out = Vec::new();
    for m in 1..top {
        // A_{n-1} with n = m + 1
        let t = ty(Family::A, m);
        let want = if (m + 1) % 2 == 0 {
            odd_product(m, m)
        } else {
            TorusVector::zero(m)
        };
        out.push(signature_check(
            format!("{t} Coxeter"),
            &WeylElement::coxeter(t),
            want,
        )?);
    }
    for n in 2..=top {
        let t = ty(Family::B, n);
        let want = if n.div_ceil(2) % 2 == 1 {
            tv(n, &[n])
        } else {
            TorusVector::zero(n)
        };
        out.push(signature_check(
            format!("{t} -I"),
            &WeylElement::minus_identity(t).expect("-I"),
            want,
        )?);
    }
    for n in 2..=top {
        let t = ty(Family::C, n);
        let want = odd_product(n, 2 * ((n - 1) / 2) + 1);
        out.push(signature_check(
            format!("{t} -I"),
            &WeylElement::minus_identity(t).expect("-I"),
            want,
        )?);
    }
    for n in 4..=top {
        let t = ty(Family::D, n);
        let want = if matches!(n % 4, 2 | 3) {
            tv(n, &[n - 1, n])
        } else {
            TorusVector::zero(n)
        };
        out.push(signature_check(
            format!("{t} Coxeter"),
            &WeylElement::coxeter(t),
            want,
        )?);
    }
    if top >= 7 {
        let t = parse("E7");
        out.push(signature_check(
            "E7 -I".into(),
            &WeylElement::minus_identity(t).expect("-I"),
            tv(7, &[1, 3, 5]),
        )?);
    }
    // D_{2l}: the two central elements other than h_{n-1} h_n never occur as signatures
    for n in (4..=top.min(8)).step_by(2) {
        let t = ty(Family::D, n);
        let outcome =
            enumerate_elliptic_classes(t, Strategy::Auto, &cfg.budget, cfg.seed).map(|recs| {
                let avoid = [odd_product(n, n - 1), odd_product(n, n - 3) + tv(n, &[n])];
                let hits: Vec<&str> = recs
                    .iter()
                    .filter(|r| avoid.iter().any(|a| a.to_string() == r.signature))
                    .map(|r| r.name.as_str())
                    .collect();
                (
                    hits.is_empty(),
                    format!("{} classes, signatures {:?}", recs.len(), hits),
                )
            });
        out.push(check(
            format!(
                "{t} signatures avoid {} and {}",
                odd_product(n, n - 1),
                odd_product(n, n - 3) + tv(n, &[n])
            ),
            outcome,
        )?);
    }
    Ok(out)
}

/// Compares the closed-form signature of every partition diagram with the Tits model,
/// and with the spin labeling where one is defined.
fn partition_check(
    rs: &RootSystem,
    build: fn(&RootSystem, &[usize]) -> Result<CarterDiagram>,
    extra: impl Fn(&[usize], TorusVector) -> Option<String>,
) -> Result<(bool, String)> {
    let n = rs.rank();
    let parts = partitions(n);
    let (mut labeled, mut bad) = (0, Vec::new());
    for p in parts
        .iter()
        .filter(|p| rs.ty().family() != Family::D || p.len() % 2 == 0)
    {
        let d = build(rs, p)?;
        let w = d.element(rs);
        let direct = spin_signature(&w)?;
        let predicted = predict_signature(rs, &d)?;
        if predicted != direct {
            bad.push(format!("{p:?}: predicted {predicted}, Tits {direct}"));
        }
        if let Some(label) = labeling_signature(rs, &d) {
            labeled += 1;
            if label != direct {
                bad.push(format!("{p:?}: labeling gives {label}, Tits {direct}"));
            }
        }
        if let Some(msg) = extra(p, direct) {
            bad.push(msg);
        }
    }
    let detail = format!("{} diagrams, {labeled} with spin labelings", parts.len());
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            detail
        } else {
            format!("{detail}; {}", bad.join("; "))
        },
    ))
}

fn b_partitions(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=cfg.max_rank.min(9) {
        let rs = RootSystem::build(ty(Family::B, n));
        let closed = |p: &[usize], direct: TorusVector| {
            let want = if b_exponent(p) % 2 == 1 {
                tv(n, &[n])
            } else {
                TorusVector::zero(n)
            };
            (want != direct)
                .then(|| format!("{p:?}: h_n^{} expected, Tits {direct}", b_exponent(p)))
        };
        out.push(check(
            format!("B{n}"),
            partition_check(&rs, b_partition_diagram, closed),
        )?);
    }
    for n in 4..=cfg.max_rank.min(9) {
        let rs = RootSystem::build(ty(Family::D, n));
        out.push(check(
            format!("D{n}"),
            partition_check(&rs, d_partition_diagram, |_, _| None),
        )?);
    }
    Ok(out)
}

fn c_classes(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=cfg.max_rank.min(9) {
        let t = ty(Family::C, n);
        let rs = RootSystem::build(t);
        let outcome = enumerate_elliptic_classes(t, Strategy::Auto, &cfg.budget, cfg.seed)
            .and_then(|recs| {
                let mut bad = Vec::new();
                for rec in &recs {
                    let w = rec.representative_element()?;
                    let linked = w.is_linked_to_minus_identity()?;
                    let adjoint = spin(&w, &rs.adjoint_lattice())?;
                    let universal = spin(&w, &rs.universal_lattice())?;
                    if universal != crate::tits::Spin::Minus
                        || (adjoint == crate::tits::Spin::Plus) != linked
                    {
                        bad.push(format!(
                            "{}: adjoint {adjoint}, universal {universal}, linked {linked}",
                            rec.name
                        ));
                    }
                }
                let linked = recs
                    .iter()
                    .filter(|r| r.linked_to_minus_identity == Some(true))
                    .count();
                let detail = format!("{} classes, {linked} linked to -I", recs.len());
                Ok((
                    bad.is_empty(),
                    if bad.is_empty() {
                        detail
                    } else {
                        format!("{detail}; {}", bad.join("; "))
                    },
                ))
            });
        out.push(check(format!("C{n} spins"), outcome)?);
        out.push(check(
            format!("C{n} diagrams"),
            partition_check(&rs, c_partition_diagram, |_, _| None),
        )?);
    }
    Ok(out)
}

fn named_diagram(rs: &RootSystem, name: &str) -> Result<CarterDiagram> {
    let roots = names::named_root_lists(rs)
        .into_iter()
        .find(|(n, _)| names::same_name(n, name, Some(rs.ty().family())))
        .map(|(_, roots)| roots)
        .ok_or_else(|| Error::invariant(format!("no stored diagram {name} in {}", rs.ty())))?;
    CarterDiagram::new(rs, roots)
}

fn example(
    name: String,
    rs: &RootSystem,
    d: Result<CarterDiagram>,
    want: TorusVector,
) -> Result<Check> {
    let outcome = d.and_then(|d| {
        let got = spin_signature(&d.element(rs))?;
        Ok((
            got == want,
            format!("{} -> {got}, expected {want}", d.name()),
        ))
    });
    check(name, outcome)
}

fn examples() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let b7 = RootSystem::build(parse("B7"));
    out.push(example(
        "B7 B3^2xB1".into(),
        &b7,
        b_partition_diagram(&b7, &[3, 3, 1]),
        TorusVector::zero(7),
    )?);
    out.push(example(
        "B7 B6xB1".into(),
        &b7,
        b_partition_diagram(&b7, &[6, 1]),
        tv(7, &[7]),
    )?);
    let outcome = crate::poly::parse_factored("(t^6+1)(t+1)").and_then(|cp| {
        let recs =
            enumerate_elliptic_classes(parse("B7"), Strategy::Diagram, &Budget::default(), 0)?;
        let rec = recs
            .iter()
            .find(|r| {
                r.representative_element()
                    .map(|w| w.char_poly().coeffs() == cp.coeffs())
                    .unwrap_or(false)
            })
            .ok_or_else(|| {
                Error::invariant("no B7 class with characteristic polynomial (t^6+1)(t+1)")
            })?;
        let order = rec
            .spins
            .first()
            .map(|s| s.representative_order)
            .unwrap_or(0);
        Ok((
            order == 24,
            format!(
                "{}: universal representative order {order}, expected 24",
                rec.name
            ),
        ))
    });
    out.push(check("B7 (t^6+1)(t+1) in Spin15", outcome)?);
    let c6 = RootSystem::build(parse("C6"));
    out.push(example(
        "C6 C2xC4".into(),
        &c6,
        c_partition_diagram(&c6, &[2, 4]),
        tv(6, &[3, 5]),
    )?);
    let c8 = RootSystem::build(parse("C8"));
    out.push(example(
        "C8 C2xC6".into(),
        &c8,
        c_partition_diagram(&c8, &[2, 6]),
        tv(8, &[1, 3, 5, 7]),
    )?);
    // C3, C2xA1 with its two spin labelings
    let c3 = RootSystem::build(parse("C3"));
    let minus_top = c3.highest_root().neg();
    for (label, roots, want) in [
        (
            "C3 C2xA1 [-a~, a1 | a3]",
            [
                minus_top.clone(),
                c3.simple_root(1).clone(),
                c3.simple_root(3).clone(),
            ],
            tv(3, &[1]),
        ),
        (
            "C3 C2xA1 [-a~ | a2, a3]",
            [
                minus_top.clone(),
                c3.simple_root(2).clone(),
                c3.simple_root(3).clone(),
            ],
            tv(3, &[2]),
        ),
    ] {
        let d = CarterDiagram::new(&c3, roots.to_vec());
        out.push(example(label.into(), &c3, d.clone(), want)?);
        let outcome = d.and_then(|d| {
            let s = spin(&d.element(&c3), &c3.adjoint_lattice())?;
            Ok((s == crate::tits::Spin::Minus, format!("adjoint spin {s}")))
        });
        out.push(check(format!("{label} adjoint spin"), outcome)?);
    }
    for (t, name, want) in [
        ("F4", "A3xA~1", &[4][..]),
        ("E6", "A5xA1", &[][..]),
        ("E7", "A3^2xA1", &[][..]),
        ("E7", "A5xA2", &[1, 3, 5][..]),
        ("E7", "A7", &[][..]),
        ("E8", "A5xA2xA1", &[][..]),
        ("E8", "A7xA1", &[][..]),
    ] {
        let rs = RootSystem::build(parse(t));
        out.push(example(
            format!("{t} {name}"),
            &rs,
            named_diagram(&rs, name),
            tv(rs.rank(), want),
        )?);
    }
    let a3 = parse("A3");
    out.push(signature_check(
        "A3 Coxeter".into(),
        &WeylElement::coxeter(a3),
        tv(3, &[1, 3]),
    )?);
    let g2 = RootSystem::build(parse("G2"));
    let outcome = spin(&WeylElement::coxeter(g2.ty()), &g2.universal_lattice())
        .map(|s| (s == crate::tits::Spin::Plus, format!("universal spin {s}")));
    out.push(check("G2 Coxeter", outcome)?);
    let e7 = RootSystem::build(parse("E7"));
    let outcome = named_diagram(&e7, "A5xA2")
        .and_then(|d| spin(&d.element(&e7), &e7.universal_lattice()))
        .map(|s| (s == crate::tits::Spin::Minus, format!("universal spin {s}")));
    out.push(check("E7 A5xA2 universal spin", outcome)?);
    Ok(out)
}

fn braid(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    chart_types(cfg.max_rank.min(8), true)
        .into_iter()
        .map(|t| {
            let rs = RootSystem::build(t);
            let outcome = verify_relations(&rs, cfg.relation_pairs, true).map(|r| {
                (
                    true,
                    format!(
                        "{} pairs (CR1, {} with c = -1), {} commuting, {} orthogonal with chains, {} single and {} double bonds, {} Jacobi triples",
                        r.cr1_pairs,
                        r.cr1_negative_signs,
                        r.commuting_pairs,
                        r.orthogonal_chain_pairs,
                        r.single_bond_pairs,
                        r.double_bond_pairs,
                        r.jacobi_triples
                    ),
                )
            });
            check(t.to_string(), outcome)
        })
        .collect()
}

/// A uniformly drawn elliptic element, giving up after `max_draws` draws.
pub fn random_elliptic<R: Rng + ?Sized>(
    t: RootSystemType,
    rng: &mut R,
    max_draws: u64,
) -> Result<WeylElement> {
    for _ in 0..max_draws {
        let w = WeylElement::random_with(t, rng);
        if w.is_elliptic() {
            return Ok(w);
        }
    }
    Err(Error::Budget {
        what: format!("no elliptic element of {t} in {max_draws} draws"),
        completed: 0,
    })
}

/// A reduced word for `w` built by stripping a random right descent at each step.
pub fn random_reduced_word<R: Rng + ?Sized>(w: &WeylElement, rng: &mut R) -> Vec<usize> {
    let t = w.ty();
    let mut cur = *w;
    let mut word = Vec::new();
    while !cur.is_identity() {
        let descents: Vec<usize> = (1..=t.rank())
            .filter(|&i| cur.has_right_descent(i))
            .collect();
        let i = descents[rng.gen_range(0..descents.len())];
        cur = cur
            .mul(&WeylElement::simple_reflection(t, i).expect("letter"))
            .expect("same type");
        word.push(i);
    }
    word.reverse();
    word
}

fn random_words<R: Rng + ?Sized>(
    t: RootSystemType,
    rng: &mut R,
    count: usize,
    len: usize,
) -> Vec<Vec<usize>> {
    (0..count)
        .map(|_| {
            (0..rng.gen_range(0..=len))
                .map(|_| rng.gen_range(1..=t.rank()))
                .collect()
        })
        .collect()
}

fn sampled_elliptic(t: RootSystemType, cfg: &VerifyConfig, salt: u64) -> Result<Vec<WeylElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    (0..cfg.oracle_samples)
        .map(|_| random_elliptic(t, &mut rng, cfg.budget.max_draws))
        .collect()
}

fn realization_check<R: Realization>(
    r: &R,
    elements: &[WeylElement],
    words: &[Vec<usize>],
) -> Result<(bool, String)> {
    let relations = check_generators(r)?;
    check_tits_words(r, words)?;
    let mut minus = 0;
    for w in elements {
        if classical_spin_check(r, w)? == crate::tits::Spin::Minus {
            minus += 1;
        }
    }
    Ok((
        true,
        format!(
            "{relations} generator relations, {} words, {} elliptic elements ({minus} with spin -1)",
            words.len(),
            elements.len()
        ),
    ))
}

fn oracles(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, t) in chart_types(cfg.max_rank.min(8), true)
        .into_iter()
        .enumerate()
    {
        let rs = RootSystem::build(t);
        let elements = sampled_elliptic(t, cfg, k as u64)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
        let words = random_words(t, &mut rng, 20, 3 * t.rank());
        let outcome = AdjointGroup::new(&rs).and_then(|g| {
            check_tits_model(&g, &words)?;
            let mut minus = 0;
            for w in &elements {
                if adjoint_spin_check(&g, w)? == crate::tits::Spin::Minus {
                    minus += 1;
                }
            }
            Ok((
                true,
                format!(
                    "{} elliptic elements ({minus} with adjoint spin -1), {} words",
                    elements.len(),
                    words.len()
                ),
            ))
        });
        out.push(check(format!("{t} adjoint"), outcome)?);
        let classical: Option<Result<(bool, String)>> = match t.family() {
            Family::A => {
                Some(ClassicalGroup::new(t).and_then(|g| realization_check(&g, &elements, &words)))
            }
            Family::C if t.rank() <= 5 => {
                Some(ClassicalGroup::new(t).and_then(|g| realization_check(&g, &elements, &words)))
            }
            Family::B if t.rank() <= crate::oracles::clifford::MAX_B_RANK => Some(
                SpinGroup::new(t, cfg.clifford_prime)
                    .and_then(|g| realization_check(&g, &elements, &words)),
            ),
            Family::D if t.rank() <= crate::oracles::clifford::MAX_D_RANK => Some(
                SpinGroup::new(t, cfg.clifford_prime)
                    .and_then(|g| realization_check(&g, &elements, &words)),
            ),
            _ => None,
        };
        if let Some(outcome) = classical {
            let label = match t.family() {
                Family::A => format!("{t} SL({})", t.rank() + 1),
                Family::C => format!("{t} Sp({})", 2 * t.rank()),
                Family::B => format!("{t} Spin({})", 2 * t.rank() + 1),
                _ => format!("{t} Spin({})", 2 * t.rank()),
            };
            out.push(check(label, outcome)?);
        }
    }
    Ok(out)
}

fn properties(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let types = [
        "A4", "A5", "B4", "C4", "D5", "D6", "G2", "F4", "E6", "E7", "E8",
    ];
    for (k, name) in types.into_iter().enumerate() {
        let t = parse(name);
        let rs = RootSystem::build(t);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (0x5151 + k as u64));
        let outcome = property_checks(&rs, cfg.property_samples, &mut rng);
        out.push(check(name, outcome)?);
    }
    Ok(out)
}

fn property_checks(
    rs: &RootSystem,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(bool, String)> {
    let t = rs.ty();
    let n = t.rank();
    let lattices = rs.lattices();
    let mut bad = Vec::new();
    let (mut torus_parts, mut odd, mut linked) = (0u64, 0u64, 0u64);
    for _ in 0..samples {
        let w = random_elliptic(t, rng, 1_000_000)?;
        let d = w.order() as u64;
        let sig = spin_signature(&w)?;
        // every representative m_w h(t) has the same d-th power
        let parts: Vec<u16> = if n <= 6 {
            (0..1u16 << n).collect()
        } else {
            (0..64).map(|_| rng.gen_range(0..1u16 << n)).collect()
        };
        for bits in parts {
            let g = TitsElement::new(w, TorusVector::from_bits(n, bits))?.pow(d);
            torus_parts += 1;
            if !g.w().is_identity() || g.t() != sig {
                bad.push(format!(
                    "{}: representative with torus part {bits:b} has d-th power {g:?}",
                    w.reduced_word()
                ));
            }
        }
        if d % 2 == 1 {
            odd += 1;
            if !sig.is_zero() {
                bad.push(format!(
                    "{}: odd order {d} but signature {sig}",
                    w.reduced_word()
                ));
            }
        }
        for r in 2..d {
            let p = w.pow(r);
            if p.is_elliptic() {
                linked += 1;
                if spin_signature(&p)? != sig {
                    bad.push(format!(
                        "{}: power {r} has a different signature",
                        w.reduced_word()
                    ));
                }
            }
        }
        // spins are class functions
        let u = WeylElement::random_with(t, rng);
        let conj = w.conjugate_by(&u)?;
        for l in &lattices {
            if spin(&w, l)? != spin(&conj, l)? {
                bad.push(format!(
                    "{}: conjugate has a different spin for {}",
                    w.reduced_word(),
                    l.label()
                ));
            }
        }
    }
    let mut words = 0;
    for _ in 0..samples {
        let w = WeylElement::random_with(t, rng);
        let word = random_reduced_word(&w, rng);
        words += 1;
        if word.len() != w.length() || TitsElement::from_word(t, &word)? != TitsElement::lift(w) {
            bad.push(format!(
                "reduced word {word:?} gives a different lift of {}",
                w.reduced_word()
            ));
        }
    }
    for _ in 0..samples {
        let mut g = || {
            TitsElement::new(
                WeylElement::random_with(t, rng),
                TorusVector::from_bits(n, rng.gen_range(0..1u16 << n)),
            )
        };
        let (a, b, c) = (g()?, g()?, g()?);
        if a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)? {
            bad.push(format!("associativity fails for {a:?}, {b:?}, {c:?}"));
        }
    }
    if let Some(minus) = WeylElement::minus_identity(t) {
        let sig = spin_signature(&minus)?;
        if !sig.is_zero() && !rs.central_involutions().contains(&sig) {
            bad.push(format!("-I has non-central signature {sig}"));
        }
    }
    let detail = format!(
        "{samples} elliptic samples, {torus_parts} torus parts, {odd} of odd order, {linked} elliptic powers, {words} random reduced words, {samples} triples"
    );
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            detail
        } else {
            format!("{detail}; {}", bad.join("; "))
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert_eq!("relations".parse::<Suite>().unwrap(), Suite::Braid);
        assert!(matches!("nope".parse::<Suite>(), Err(Error::Config(_))));
    }

    #[test]
    fn random_reduced_words_are_reduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in ["B4", "E6"] {
            let t = parse(t);
            for _ in 0..20 {
                let w = WeylElement::random_with(t, &mut rng);
                let word = random_reduced_word(&w, &mut rng);
                assert_eq!(word.len(), w.length());
                assert_eq!(WeylElement::from_word(t, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn odd_rank_sampling_finds_elliptic_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_elliptic(parse("A5"), &mut rng, 10_000)
            .unwrap()
            .is_elliptic());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig {
            max_rank: 4,
            property_samples: 5,
            ..VerifyConfig::default()
        };
        for suite in [Suite::Center, Suite::Coxeter, Suite::BPartitions] {
            let rep = run_suite(suite, &cfg).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn clifford_prime_is_checked() {
        let cfg = VerifyConfig {
            max_rank: 2,
            oracle_samples: 2,
            clifford_prime: 9,
            ..VerifyConfig::default()
        };
        assert!(matches!(
            run_suite(Suite::Oracles, &cfg),
            Err(Error::Config(_))
        ));
    }
}
