use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use serde_json::json;
use weylspin::carter::{names, resolve_strategy, sample_with_char_poly};
use weylspin::oracles::clifford::{check_characteristic, DEFAULT_PRIME};
use weylspin::poly::parse_factored;
use weylspin::tits::spin_result;
use weylspin::verify::{run_suite, Suite, VerifyConfig};
use weylspin::{
    enumerate_elliptic_classes, Budget, CarterDiagram, ClassRecord, Error, Root, RootSystem,
    RootSystemType, Strategy, WeylElement,
};

use crate::output::{Report, Table};
use crate::{cache, CliError, RunArgs};

pub struct Context {
    pub cache_dir: Option<PathBuf>,
    pub characteristic: Option<u64>,
}

impl Context {
    pub fn check_characteristic(&self) -> Result<(), CliError> {
        if let Some(p) = self.characteristic {
            check_characteristic(p)?;
        }
        Ok(())
    }

    fn clifford_prime(&self) -> u64 {
        self.characteristic.unwrap_or(DEFAULT_PRIME)
    }
}

fn parse_type(s: &str) -> Result<RootSystemType, CliError> {
    Ok(s.parse::<RootSystemType>()?)
}

fn budget(run: &RunArgs) -> Budget {
    Budget {
        max_group_order: run.budget,
        samples: run.samples,
        max_draws: run.max_draws,
    }
}

fn run_echo(run: &RunArgs) -> String {
    format!(
        "--strategy {} --seed {} --budget {} --samples {} --max-draws {}",
        run.strategy, run.seed, run.budget, run.samples, run.max_draws
    )
}

/// `2a1+3a2` with a suffix on each basis symbol.
fn combination(coords: &[i32], symbol: &str) -> String {
    let mut s = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            let _ = write!(s, "{}", c.abs());
        }
        let _ = write!(s, "{symbol}{}", i + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn root_info(rs: &RootSystem, root: &Root) -> Result<serde_json::Value, CliError> {
    let coroot = rs.coroot(root)?;
    Ok(json!({
        "root": root.coords(),
        "negative": root.neg().to_string(),
        "coroot": coroot,
        "coroot_mod2": rs.coroot_mod2(root)?.to_string(),
    }))
}

pub fn info(ty: &str) -> Result<Report, CliError> {
    let ty = parse_type(ty)?;
    let rs = RootSystem::build(ty);
    let n = rs.rank();
    let long = rs.positive_roots().iter().filter(|r| r.is_long()).count();
    let fundamental = rs.fundamental_group();
    let fundamental_text = if fundamental.is_empty() {
        "trivial".to_string()
    } else {
        fundamental
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    let center: Vec<String> = rs
        .central_involutions()
        .iter()
        .map(|t| t.to_string())
        .collect();
    let lattices: Vec<serde_json::Value> = rs
        .lattices()
        .iter()
        .map(|l| json!({"label": l.label(), "index_over_coroots": l.order()}))
        .collect();
    let highest = rs.highest_root().clone();
    let short = rs.highest_short_root().clone();
    let json = json!({
        "command": format!("info {ty}"),
        "type": ty.to_string(),
        "rank": n,
        "cartan": rs.cartan(),
        "roots": rs.roots().len(),
        "positive_roots": rs.num_positive(),
        "long_positive_roots": long,
        "highest_root": root_info(&rs, &highest)?,
        "highest_short_root": root_info(&rs, &short)?,
        "weyl_group_order": ty.weyl_group_order().to_string(),
        "fundamental_group": fundamental,
        "center_two_torsion": center,
        "lattices": lattices,
    });

    let mut text = String::new();
    let _ = writeln!(text, "type {ty}, rank {n}, |W| = {}", ty.weyl_group_order());
    let _ = writeln!(text, "cartan matrix:");
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(text, "  {}", cells.join(""));
    }
    let _ = writeln!(
        text,
        "roots: {} ({} positive, {long} of them long)",
        rs.roots().len(),
        rs.num_positive()
    );
    for (label, root) in [("highest root", &highest), ("highest short root", &short)] {
        let _ = writeln!(
            text,
            "{label}: {root}, negative {}, coroot {}",
            root.neg(),
            combination(&rs.coroot(root)?, "h"),
        );
    }
    let _ = writeln!(text, "fundamental group: {fundamental_text}");
    let _ = writeln!(
        text,
        "central elements of order 2: {}",
        if center.is_empty() {
            "none".to_string()
        } else {
            center.join(", ")
        }
    );
    let labels: Vec<String> = rs.lattices().iter().map(|l| l.label()).collect();
    let _ = writeln!(text, "isogeny types: {}", labels.join(", "));
    Ok(Report {
        pass: true,
        json,
        text,
        csv: None,
    })
}

/// Class atlas, from the cache when possible. Returns the resolved strategy.
fn load_classes(
    ctx: &Context,
    ty: RootSystemType,
    run: &RunArgs,
    recompute: bool,
) -> Result<(Strategy, Vec<ClassRecord>, Option<String>), CliError> {
    let budget = budget(run);
    let mut strategy: Strategy = run.strategy.parse()?;
    if strategy == Strategy::Auto {
        strategy = resolve_strategy(ty, &budget);
    }
    let compute = || enumerate_elliptic_classes(ty, strategy, &budget, run.seed);
    let Some(dir) = &ctx.cache_dir else {
        return Ok((strategy, compute()?, None));
    };
    let name = cache::file_name(ty, strategy, run.seed, &budget);
    match cache::load(dir, &name)? {
        Some(cached) if !recompute => Ok((strategy, cached, Some(format!("hit {name}")))),
        Some(cached) => {
            let fresh = compute()?;
            if fresh != cached {
                return Err(Error::Mismatch(format!(
                    "cached atlas {name} differs from a fresh computation"
                ))
                .into());
            }
            Ok((strategy, fresh, Some(format!("verified {name}"))))
        }
        None => {
            let fresh = compute()?;
            cache::store(dir, &name, &fresh)?;
            Ok((strategy, fresh, Some(format!("stored {name}"))))
        }
    }
}

pub fn classes(
    ctx: &Context,
    ty: &str,
    run: &RunArgs,
    recompute: bool,
) -> Result<Report, CliError> {
    let ty = parse_type(ty)?;
    let start = Instant::now();
    let (strategy, records, cache_note) = load_classes(ctx, ty, run, recompute)?;
    let json = json!({
        "command": format!("classes {ty} {}", run_echo(run)),
        "type": ty.to_string(),
        "strategy": strategy,
        "seed": run.seed,
        "count": records.len(),
        "classes": records,
    });
    let mut text = String::new();
    if strategy == Strategy::Sampling {
        let _ = writeln!(
            text,
            "{ty}: {} characteristic polynomials among sampled elliptic elements",
            records.len()
        );
    } else {
        let _ = writeln!(
            text,
            "{ty}: {} elliptic classes ({strategy})",
            records.len()
        );
    }
    let _ = writeln!(
        text,
        "{:<16} {:>5}  {:<24} {:<14} {:>7} {:>9}",
        "class", "order", "char poly", "signature", "adjoint", "universal"
    );
    for r in &records {
        let mut name = r.name.clone();
        if !r.aliases.is_empty() {
            let _ = write!(name, " ({})", r.aliases.join(", "));
        }
        let _ = writeln!(
            text,
            "{:<16} {:>5}  {:<24} {:<14} {:>7} {:>9}",
            name,
            r.order,
            r.char_poly_factors,
            r.signature,
            r.adjoint_spin.to_string(),
            r.universal_spin.to_string()
        );
        if let Some(k) = r.samples {
            let _ = writeln!(text, "{:<16} {k} samples", "");
        }
    }
    if let Some(note) = cache_note {
        eprintln!("cache: {note}");
    }
    eprintln!("elapsed: {:.2}s", start.elapsed().as_secs_f64());
    let csv = Table {
        header: vec!["phi", "gamma", "adjoint_spin", "universal_spin"],
        rows: records
            .iter()
            .map(|r| {
                vec![
                    ty.to_string(),
                    r.name.clone(),
                    r.adjoint_spin.to_string(),
                    r.universal_spin.to_string(),
                ]
            })
            .collect(),
    };
    Ok(Report {
        pass: true,
        json,
        text,
        csv: Some(csv),
    })
}

pub enum Selector {
    Class(String),
    CharPoly(String),
    Word(String),
    Roots(String),
}

impl Selector {
    pub fn from_args(
        class: Option<String>,
        charpoly: Option<String>,
        word: Option<String>,
        roots: Option<String>,
    ) -> Result<Self, CliError> {
        class
            .map(Selector::Class)
            .or(charpoly.map(Selector::CharPoly))
            .or(word.map(Selector::Word))
            .or(roots.map(Selector::Roots))
            .ok_or_else(|| {
                Error::Config("one of --class, --charpoly, --word, --roots is required".into())
                    .into()
            })
    }

    fn echo(&self) -> String {
        match self {
            Selector::Class(s) => format!("--class {s:?}"),
            Selector::CharPoly(s) => format!("--charpoly {s:?}"),
            Selector::Word(s) => format!("--word {s:?}"),
            Selector::Roots(s) => format!("--roots {s:?}"),
        }
    }
}

fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches('s')
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("bad letter {t:?} in word {s:?}")).into())
        })
        .collect()
}

/// `1,0,0;0,1,0` or a JSON array of arrays.
fn parse_roots(s: &str) -> Result<Vec<Vec<i32>>, CliError> {
    let bad = || CliError::from(Error::Config(format!("cannot read roots from {s:?}")));
    if s.trim_start().starts_with('[') {
        return serde_json::from_str(s).map_err(|_| bad());
    }
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| {
            r.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| bad()))
                .collect()
        })
        .collect()
}

fn find_class(
    ctx: &Context,
    rs: &RootSystem,
    name: &str,
    run: &RunArgs,
) -> Result<(String, WeylElement), CliError> {
    let ty = rs.ty();
    if name.trim().eq_ignore_ascii_case("coxeter") {
        return Ok(("Coxeter".into(), WeylElement::coxeter(ty)));
    }
    let family = Some(ty.family());
    if let Some((n, roots)) = names::named_root_lists(rs)
        .into_iter()
        .find(|(n, _)| names::same_name(n, name, family))
    {
        let d = CarterDiagram::new(rs, roots)?;
        return Ok((n, d.element(rs)));
    }
    let (_, records, _) = load_classes(ctx, ty, run, false)?;
    let rec = records
        .iter()
        .find(|r| r.matches_name(name))
        .ok_or_else(|| Error::Domain(format!("no elliptic class named {name:?} in {ty}")))?;
    Ok((rec.name.clone(), rec.representative_element()?))
}

fn find_charpoly(
    ctx: &Context,
    rs: &RootSystem,
    poly: &str,
    run: &RunArgs,
) -> Result<(String, WeylElement), CliError> {
    let ty = rs.ty();
    let target = parse_factored(poly)?;
    if target.degree() != ty.rank() {
        return Err(Error::Domain(format!(
            "{poly} has degree {}, not the rank of {ty}",
            target.degree()
        ))
        .into());
    }
    let budget = budget(run);
    let mut strategy: Strategy = run.strategy.parse()?;
    if strategy == Strategy::Auto {
        strategy = resolve_strategy(ty, &budget);
    }
    if strategy == Strategy::Sampling {
        let w = sample_with_char_poly(ty, &target, run.seed, budget.max_draws)?;
        return Ok((w.char_poly().factored(), w));
    }
    let (_, records, _) = load_classes(ctx, ty, run, false)?;
    let mut hits = Vec::new();
    for r in &records {
        let w = r.representative_element()?;
        if w.char_poly().coeffs() == target.coeffs() {
            hits.push((r.name.clone(), w));
        }
    }
    match hits.len() {
        0 => Err(Error::Domain(format!(
            "no elliptic class of {ty} has characteristic polynomial {poly}"
        ))
        .into()),
        1 => Ok(hits.pop().expect("one hit")),
        _ => {
            let names: Vec<String> = hits.into_iter().map(|(n, _)| n).collect();
            Err(Error::Domain(format!(
                "{poly} is shared by {}; select with --class",
                names.join(", ")
            ))
            .into())
        }
    }
}

pub fn spin(
    ctx: &Context,
    ty: &str,
    selector: &Selector,
    lattice: Option<&str>,
    run: &RunArgs,
) -> Result<Report, CliError> {
    let ty = parse_type(ty)?;
    let rs = RootSystem::build(ty);
    let (class, w) = match selector {
        Selector::Class(name) => {
            let (n, w) = find_class(ctx, &rs, name, run)?;
            (Some(n), w)
        }
        Selector::CharPoly(p) => {
            let (n, w) = find_charpoly(ctx, &rs, p, run)?;
            (Some(n), w)
        }
        Selector::Word(s) => (None, WeylElement::from_word(ty, &parse_word(s)?)?),
        Selector::Roots(s) => {
            let d = CarterDiagram::from_coords(&rs, &parse_roots(s)?)?;
            (Some(d.name()), d.element(&rs))
        }
    };
    let mut result = spin_result(&rs, &w)?;
    if let Some(sel) = lattice {
        let label = rs.lattice(sel)?.label();
        result.spins.retain(|s| s.lattice == label);
    }
    let word = w.reduced_word();
    let mut echo = format!("spin {ty} {}", selector.echo());
    if let Some(l) = lattice {
        let _ = write!(echo, " --lattice {l}");
    }
    let json = json!({
        "command": echo,
        "type": ty.to_string(),
        "class": class,
        "word": word.letters,
        "char_poly": w.char_poly().factored(),
        "order": result.order,
        "signature": result.signature,
        "signature_bits": result.signature_bits,
        "spins": result.spins,
    });
    let mut text = String::new();
    let _ = writeln!(text, "{ty} {}", class.as_deref().unwrap_or("element"));
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "char poly: {}", w.char_poly().factored());
    let _ = writeln!(text, "order d = {}", result.order);
    let _ = writeln!(text, "signature g^d = {}", result.signature);
    for s in &result.spins {
        let _ = writeln!(
            text,
            "{}: spin {}, representatives of order {}",
            s.lattice, s.spin, s.representative_order
        );
    }
    let csv = Table {
        header: vec![
            "type",
            "class",
            "order",
            "signature",
            "lattice",
            "spin",
            "representative_order",
        ],
        rows: result
            .spins
            .iter()
            .map(|s| {
                vec![
                    ty.to_string(),
                    class.clone().unwrap_or_default(),
                    result.order.to_string(),
                    result.signature.clone(),
                    s.lattice.clone(),
                    s.spin.to_string(),
                    s.representative_order.to_string(),
                ]
            })
            .collect(),
    };
    Ok(Report {
        pass: true,
        json,
        text,
        csv: Some(csv),
    })
}

pub struct VerifyOptions {
    pub suites: Vec<String>,
    pub max_rank: usize,
    pub seed: u64,
    pub e8_samples: u64,
    pub relation_pairs: usize,
    pub oracle_samples: usize,
    pub property_samples: usize,
    pub budget: u64,
    pub verbose: bool,
}

pub fn verify_tables(ctx: &Context, opts: &VerifyOptions) -> Result<Report, CliError> {
    let mut suites = Vec::new();
    for s in &opts.suites {
        if s.trim().eq_ignore_ascii_case("all") {
            suites.extend(Suite::ALL);
        } else {
            suites.push(s.parse::<Suite>()?);
        }
    }
    suites.dedup();
    if opts.max_rank > weylspin::MAX_RANK {
        return Err(Error::Config(format!(
            "--max-rank {} exceeds {}",
            opts.max_rank,
            weylspin::MAX_RANK
        ))
        .into());
    }
    let cfg = VerifyConfig {
        max_rank: opts.max_rank,
        seed: opts.seed,
        budget: Budget {
            max_group_order: opts.budget,
            ..Budget::default()
        },
        e8_samples: opts.e8_samples,
        relation_pairs: opts.relation_pairs,
        oracle_samples: opts.oracle_samples,
        property_samples: opts.property_samples,
        clifford_prime: ctx.clifford_prime(),
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    for suite in suites {
        let start = Instant::now();
        let rep = run_suite(suite, &cfg)?;
        eprintln!("{suite}: {:.2}s", start.elapsed().as_secs_f64());
        let failed = rep.failures().count();
        let _ = writeln!(
            text,
            "{suite}: {} ({} checks, {failed} failed)",
            if rep.pass { "PASS" } else { "FAIL" },
            rep.checks.len()
        );
        for c in &rep.checks {
            if opts.verbose || !c.pass {
                let _ = writeln!(
                    text,
                    "  {} {}: {}",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
        }
        reports.push(rep);
    }
    let pass = reports.iter().all(|r| r.pass);
    let csv = Table {
        header: vec!["suite", "check", "pass", "detail"],
        rows: reports
            .iter()
            .flat_map(|r| {
                r.checks.iter().map(move |c| {
                    vec![
                        r.suite.to_string(),
                        c.name.clone(),
                        c.pass.to_string(),
                        c.detail.clone(),
                    ]
                })
            })
            .collect(),
    };
    let names: Vec<String> = reports.iter().map(|r| r.suite.to_string()).collect();
    let json = json!({
        "command": format!(
            "verify-tables --suite {} --max-rank {} --seed {} --e8-samples {} --relation-pairs {} --oracle-samples {} --property-samples {} --budget {}",
            names.join(","), opts.max_rank, opts.seed, opts.e8_samples, opts.relation_pairs, opts.oracle_samples, opts.property_samples, opts.budget
        ),
        "config": cfg,
        "pass": pass,
        "suites": reports,
    });
    Ok(Report {
        pass,
        json,
        text,
        csv: Some(csv),
    })
}
