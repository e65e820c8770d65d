//! `bck`: command-line front end for bck-core.
//!
//! Exit codes: 0 success, 1 domain-level negative (axiom violation, not
//! commutative, failed audit), 2 usage, parse or I/O error.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use bck_core::algebra::text::{format_table, parse_table, read_algebra};
use bck_core::algebra::{check_axioms, BckAlgebra};
use bck_core::constructions::{bck_union, direct_product, family, iseki_extension, Family, FamilySpec};
use bck_core::degree::{decompose_commutative, degree_of, ds_with_jobs, gap_evidence, DegreeKind};
use bck_core::enumeration::{
    audit_bounds, enumerate_with, load_catalog, save_catalog, spectrum, table_hash, verify_conjectures, Catalog,
    EnumerateOptions, SpectrumFilter,
};
use bck_core::term::equation_from_arg;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{degree_text, flag, Format, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "bck",
    version,
    about = "Finite BCK-algebras and their degrees of satisfiability"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for degree counting and enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a Cayley table against the BCK axioms.
    Verify { file: PathBuf },
    /// Print structural property flags and atoms.
    Props { file: PathBuf },
    /// Exact degree of satisfiability of a named or custom equation.
    Degree {
        file: PathBuf,
        /// One of emd, dnd, cd, pid, id.
        #[arg(long, conflicts_with = "eq", required_unless_present = "eq")]
        kind: Option<String>,
        /// An equation such as "x . (y . x) = x", or a builtin name (DN, EM, T, E1, I, X1, NX1).
        #[arg(long)]
        eq: Option<String>,
    },
    /// Write a member of a named family (C, D, Q, B, M, P, Pprime).
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Combine algebras read from table files.
    Construct {
        #[arg(value_enum)]
        op: ConstructOp,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degrees of an equation on the chains C_2..C_max_n and the candidate gap.
    Gap {
        #[arg(long)]
        eq: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Enumerate all algebras of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Directory to write the catalog to.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Abort after this many search nodes.
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Degree values attained by the algebras of one order.
    Spectrum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        kind: String,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Read the catalog from this directory instead of enumerating.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Check that every candidate dnd and cd value is attained.
    Conjectures {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Check the universal degree bounds on every algebra of one order.
    Audit {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Factor a commutative algebra as a product of chains.
    Decompose { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstructOp {
    Union,
    Product,
    Iseki,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FilterArg {
    All,
    Commutative,
    NonCommutative,
}

impl From<FilterArg> for SpectrumFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => SpectrumFilter::All,
            FilterArg::Commutative => SpectrumFilter::Commutative,
            FilterArg::NonCommutative => SpectrumFilter::NonCommutative,
        }
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<BckAlgebra> {
    let text = read_file(path)?;
    read_algebra(&text).with_context(|| format!("{}", path.display()))
}

fn write_or_print(out: &Option<PathBuf>, a: &BckAlgebra, outcome: &mut Outcome) -> anyhow::Result<()> {
    let text = format_table(a);
    match out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            outcome.line(format!("wrote order-{} table to {}", a.order(), path.display()));
        }
        None => outcome.text.push_str(&text),
    }
    outcome.results = json!({ "order": a.order(), "table": a.rows() });
    Ok(())
}

fn catalog_for(order: usize, dir: &Option<PathBuf>, jobs: usize) -> anyhow::Result<Catalog> {
    let catalog = match dir {
        Some(dir) if dir.join("index.json").exists() => load_catalog(dir)?,
        _ => enumerate_with(order, EnumerateOptions { jobs, node_limit: None })?,
    };
    if catalog.order != order {
        bail!("catalog holds order {}, not {order}", catalog.order);
    }
    Ok(catalog)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn props_text(a: &BckAlgebra, outcome: &mut Outcome) {
    let p = a.properties();
    outcome.line(format!("order: {}", a.order()));
    outcome.line(format!(
        "bounded: {}",
        p.bound.map_or("no".to_string(), |m| format!("yes (1 = {m})"))
    ));
    outcome.line(format!("linear: {}", yes_no(p.linear)));
    outcome.line(format!("commutative: {}", yes_no(p.commutative)));
    outcome.line(format!("positive_implicative: {}", yes_no(p.positive_implicative)));
    outcome.line(format!("implicative: {}", yes_no(p.implicative)));
    let atoms: Vec<String> = p.atoms.iter().map(ToString::to_string).collect();
    outcome.line(format!("atoms: {}", atoms.join(" ")));
    outcome.results = json!({ "order": a.order(), "properties": p });
}

fn run(cli: &Cli, outcome: &mut Outcome) -> anyhow::Result<()> {
    let jobs = cli.jobs.max(1);
    match &cli.command {
        Command::Verify { file } => {
            outcome.input("file", file.display().to_string());
            let text = read_file(file)?;
            let (order, rows) = parse_table(&text).with_context(|| format!("{}", file.display()))?;
            let report = check_axioms(order, &rows)?;
            outcome.line(format!("order {order}: {report}"));
            outcome.results = json!({ "order": order, "valid": report.is_valid(), "violations": report.violations });
            if !report.is_valid() {
                outcome.exit = 1;
            }
        }
        Command::Props { file } => {
            outcome.input("file", file.display().to_string());
            props_text(&load(file)?, outcome);
        }
        Command::Degree { file, kind, eq } => {
            outcome.input("file", file.display().to_string());
            let a = load(file)?;
            if let Some(kind) = kind {
                outcome.input("kind", kind.clone());
                let kind: DegreeKind = kind.parse()?;
                let kd = degree_of(&a, kind)?;
                outcome.line(format!("{kind}: {}", degree_text(&kd.degree)));
                if kd.outside_hypothesis {
                    outcome.line("note: emd is computed on a non-commutative algebra".to_string());
                }
                outcome.results = json!({
                    "kind": kind,
                    "equation": kind.builtin().equation(),
                    "degree": kd.degree,
                    "outside_hypothesis": kd.outside_hypothesis,
                });
            } else if let Some(eq) = eq {
                outcome.input("eq", eq.clone());
                let eq = equation_from_arg(eq)?;
                let d = ds_with_jobs(&a, &eq, jobs)?;
                outcome.line(format!("{eq}: {}", degree_text(&d)));
                outcome.results = json!({ "equation": eq, "degree": d });
            }
        }
        Command::Family { name, n, out } => {
            outcome.input("name", name.clone());
            outcome.input("n", *n);
            let fam: Family = name.parse()?;
            let a = family(FamilySpec::new(fam, *n))?;
            write_or_print(out, &a, outcome)?;
        }
        Command::Construct { op, files, out } => {
            let names: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
            outcome.input("op", format!("{op:?}").to_lowercase());
            outcome.input("files", names);
            let algebras = files.iter().map(|f| load(f)).collect::<anyhow::Result<Vec<_>>>()?;
            let a = match (op, algebras.as_slice()) {
                (ConstructOp::Union, [a, b]) => bck_union(a, b),
                (ConstructOp::Product, [a, b]) => direct_product(a, b),
                (ConstructOp::Iseki, [a]) => iseki_extension(a),
                (ConstructOp::Iseki, _) => bail!("iseki takes exactly one table file"),
                _ => bail!("{op:?} takes exactly two table files"),
            };
            write_or_print(out, &a, outcome)?;
        }
        Command::Gap { eq, max_n } => {
            outcome.input("eq", eq.clone());
            outcome.input("max_n", *max_n);
            let eq = equation_from_arg(eq)?;
            let ev = gap_evidence(&eq, *max_n)?;
            outcome.line(format!("equation: {eq}"));
            for (i, d) in ev.sequence.iter().enumerate() {
                outcome.line(format!("C_{}: {}", i + 2, degree_text(d)));
            }
            match ev.sub_one_max {
                Some((n, d)) => {
                    outcome.line(format!("largest value below 1: {d} at n = {n}"));
                    outcome.line(format!(
                        "candidate gap: {}",
                        ev.candidate_gap().expect("present with a sub-one maximum")
                    ));
                }
                None => outcome.line(format!("every degree is 1 for n <= {max_n}")),
            }
            outcome.line(format!(
                "non-increasing after the first value below 1: {}",
                yes_no(ev.monotone_nonincreasing_after_first_sub_one)
            ));
            outcome.results = serde_json::to_value(&ev)?;
        }
        Command::Enumerate { order, out, node_limit } => {
            outcome.input("order", *order);
            let catalog = enumerate_with(
                *order,
                EnumerateOptions {
                    jobs,
                    node_limit: *node_limit,
                },
            )?;
            outcome.line(format!(
                "order {order}: {} algebras up to isomorphism (self-derived count)",
                catalog.len()
            ));
            for e in &catalog.entries {
                let d = &e.degrees;
                let opt = |d: Option<bck_core::Degree>| d.map_or("-".to_string(), |d| d.to_string());
                outcome.line(format!(
                    "{} {}{}{}{}{} emd={} dnd={} cd={} pid={} id={}",
                    table_hash(&e.algebra),
                    flag(e.properties.bound.is_some(), 'B'),
                    flag(e.properties.linear, 'L'),
                    flag(e.properties.commutative, 'C'),
                    flag(e.properties.positive_implicative, 'P'),
                    flag(e.properties.implicative, 'I'),
                    opt(d.emd),
                    opt(d.dnd),
                    d.cd,
                    d.pid,
                    d.id,
                ));
            }
            if let Some(dir) = out {
                save_catalog(&catalog, dir)?;
                outcome.line(format!("wrote catalog to {}", dir.display()));
            }
            outcome.results = json!({
                "order": order,
                "count": catalog.len(),
                "count_is_derived_baseline": true,
                "entries": catalog.entries,
            });
        }
        Command::Spectrum {
            order,
            kind,
            filter,
            catalog,
        } => {
            outcome.input("order", *order);
            outcome.input("kind", kind.clone());
            let kind: DegreeKind = kind.parse()?;
            let catalog = catalog_for(*order, catalog, jobs)?;
            let s = spectrum(&catalog, kind, (*filter).into());
            let list = |v: &[bck_core::Degree]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            outcome.line(format!("order {order}, {kind}, {} algebras considered", s.considered));
            outcome.line(format!("possible: {}", list(&s.possible)));
            outcome.line(format!("achieved: {}", list(&s.achieved)));
            outcome.line(format!("missing: {}", list(&s.missing)));
            if !s.unexpected.is_empty() {
                outcome.line(format!("outside the candidate set: {}", list(&s.unexpected)));
            }
            outcome.results = serde_json::to_value(&s)?;
        }
        Command::Conjectures { order, catalog } => {
            outcome.input("order", *order);
            let catalog = catalog_for(*order, catalog, jobs)?;
            let r = verify_conjectures(&catalog)?;
            for s in [&r.dnd, &r.cd] {
                let missing: Vec<String> = s.missing.iter().map(ToString::to_string).collect();
                outcome.line(format!(
                    "{}: {} of {} candidate values attained{}",
                    s.kind,
                    s.possible.len() - s.missing.len(),
                    s.possible.len(),
                    if missing.is_empty() {
                        String::new()
                    } else {
                        format!(", missing {}", missing.join(" "))
                    }
                ));
            }
            outcome.line(format!("result: {}", if r.passed { "pass" } else { "FAIL" }));
            outcome.results = serde_json::to_value(&r)?;
            if !r.passed {
                outcome.exit = 1;
            }
        }
        Command::Audit { order, catalog } => {
            outcome.input("order", *order);
            let catalog = catalog_for(*order, catalog, jobs)?;
            let r = audit_bounds(&catalog);
            outcome.line(format!("order {order}: {} algebras checked", r.checked));
            for c in &r.checks {
                outcome.line(format!(
                    "{} {}: {} applicable, {} failing",
                    if c.passed() { "ok  " } else { "FAIL" },
                    c.name,
                    c.applicable,
                    c.failures
                ));
            }
            for c in &r.counterexamples {
                outcome.line(format!("counterexample for {}: {}", c.check, c.detail));
                let rows: Vec<String> = c
                    .table
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                for row in rows {
                    outcome.line(format!("  {row}"));
                }
            }
            outcome.line(format!("result: {}", if r.passed { "pass" } else { "FAIL" }));
            outcome.results = serde_json::to_value(&r)?;
            if !r.passed {
                outcome.exit = 1;
            }
        }
        Command::Decompose { file } => {
            outcome.input("file", file.display().to_string());
            let a = load(file)?;
            let d = decompose_commutative(&a)?;
            let lengths: Vec<String> = d.chain_lengths.iter().map(ToString::to_string).collect();
            outcome.line(format!("chains: {{{}}}", lengths.join(", ")));
            outcome.results = serde_json::to_value(&d)?;
        }
    }
    Ok(())
}

/// 1 for errors that are answers about the input algebra, 2 for the rest.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    use bck_core::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::Axioms(_) | Error::NotCommutative | Error::NoChainDecomposition { .. } | Error::Unbounded) => 1,
        _ => 2,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Props { .. } => "props",
        Command::Degree { .. } => "degree",
        Command::Family { .. } => "family",
        Command::Construct { .. } => "construct",
        Command::Gap { .. } => "gap",
        Command::Enumerate { .. } => "enumerate",
        Command::Spectrum { .. } => "spectrum",
        Command::Conjectures { .. } => "conjectures",
        Command::Audit { .. } => "audit",
        Command::Decompose { .. } => "decompose",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut outcome = Outcome::new(command_name(&cli.command));
    let result = run(&cli, &mut outcome);
    if let Err(err) = &result {
        outcome.exit = exit_code_for(err);
        outcome.error = Some(format!("{err:#}"));
        outcome.results = Value::Null;
    }
    outcome.emit(cli.format);
    ExitCode::from(outcome.exit)
}
