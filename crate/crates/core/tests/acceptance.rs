//! Acceptance criteria 1-10, one line each. Exits non-zero if any fails.
//!
//! Run with `cargo test -p bck-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use bck_core::algebra::check_axioms;
use bck_core::constructions::{bck_union, chain, d_algebra, family, pi, tc, two, Family, FamilySpec};
use bck_core::degree::{cd, check_multiplicative, dnd, ds, ds_with_jobs, emd, gap_evidence, id, pid, Degree};
use bck_core::enumeration::{audit_bounds, enumerate, enumerate_with, verify_conjectures, EnumerateOptions};
use bck_core::term::{parse, parse_term, Builtin, Term};
use bck_core::{BckAlgebra, Equation};
use common::{brute_force, ds_naive, frac};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn expect_eq(what: &str, got: Degree, want: Degree) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn named_degrees() -> Outcome {
    expect_eq("cd(PI)", cd(&pi()), frac(7, 9))?;
    expect_eq("dnd(PI)", dnd(&pi()).map_err(|e| e.to_string())?, frac(2, 3))?;
    expect_eq("pid(TC)", pid(&tc()), frac(8, 9))?;
    expect_eq("id(TC)", id(&tc()), frac(8, 9))?;
    expect_eq("pid(PI)", pid(&pi()), frac(1, 1))?;
    expect_eq("cd(TC)", cd(&tc()), frac(1, 1))?;
    Ok("cd(PI)=7/9 dnd(PI)=2/3 pid(TC)=id(TC)=8/9 pid(PI)=cd(TC)=1".into())
}

fn family_formulas() -> Outcome {
    let fam = |f: Family, n: usize| family(FamilySpec::new(f, n)).map_err(|e| e.to_string());
    for n in 3..=64 {
        let sq = n * n;
        let b = fam(Family::B, n)?;
        expect_eq(&format!("cd(B_{n})"), cd(&b), frac(sq - 2, sq))?;
        let m = fam(Family::M, n)?;
        expect_eq(&format!("cd(M_{n})"), cd(&m), frac(3 * n - 2, sq))?;
        let p = fam(Family::P, n)?;
        expect_eq(&format!("pid(P_{n})"), pid(&p), frac(sq - 1, sq))?;
        expect_eq(&format!("id(P_{n})"), id(&p), frac(sq - 1, sq))?;
        let pp = fam(Family::PPrime, n)?;
        expect_eq(&format!("pid(P'_{n})"), pid(&pp), frac(sq - 1, sq))?;
        let q = fam(Family::Q, n)?;
        expect_eq(&format!("pid(Q_{n})"), pid(&q), frac(4 * n - 4, sq))?;
        expect_eq(&format!("id(Q_{n})"), id(&q), frac(4 * n - 4, sq))?;
        let c = fam(Family::C, n)?;
        expect_eq(&format!("pid(C_{n})"), pid(&c), frac(sq + 3 * n - 2, 2 * sq))?;
        expect_eq(&format!("id(C_{n})"), id(&c), frac(sq + 3 * n - 2, 2 * sq))?;
    }
    for n in 2..=200 {
        let c = chain(n).map_err(|e| e.to_string())?;
        let e = emd(&c).map_err(|e| e.to_string())?.degree;
        expect_eq(&format!("emd(C_{n})"), e, frac(2, n))?;
    }
    for n in 3..=200 {
        let d = d_algebra(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("dnd(D_{n})"),
            dnd(&d).map_err(|e| e.to_string())?,
            frac(n, n + 1),
        )?;
    }
    Ok("B, M, P, P', Q, C formulas for 3 <= n <= 64; emd(C_n) to 200; dnd(D_n) to 200".into())
}

fn d_family_at_scale() -> Outcome {
    for n in 3..=200 {
        let d = d_algebra(n).map_err(|e| e.to_string())?;
        let report = check_axioms(d.order(), &d.rows()).map_err(|e| e.to_string())?;
        if !report.is_valid() {
            return Err(format!("D_{n}: {report}"));
        }
        if d.is_commutative() || d.meet(n, n - 1) == d.meet(n - 1, n) {
            return Err(format!("D_{n}: ({n}, {}) is not a non-commuting pair", n - 1));
        }
    }
    Ok("D_n valid and non-commuting at (n, n-1) for 3 <= n <= 200".into())
}

fn gap_sequences() -> Outcome {
    let check = |eq: Equation, want: &dyn Fn(usize) -> Degree, max: (usize, Degree)| -> Result<(), String> {
        let ev = gap_evidence(&eq, 50).map_err(|e| e.to_string())?;
        for n in 2..=50 {
            expect_eq(
                &format!("{eq} on C_{n}"),
                ev.degree_at(n).ok_or("short sequence")?,
                want(n),
            )?;
        }
        match ev.sub_one_max {
            Some((n, d)) if n == max.0 && d == max.1 => Ok(()),
            other => Err(format!(
                "{eq}: sub-one maximum {other:?}, expected {} at {}",
                max.1, max.0
            )),
        }
    };
    check(Builtin::EM.equation(), &|n| frac(2, n), (3, frac(2, 3)))?;
    let pid_formula = |n: usize| frac(n * n + 3 * n - 2, 2 * n * n);
    check(Builtin::E1.equation(), &pid_formula, (3, frac(8, 9)))?;
    check(Builtin::I.equation(), &pid_formula, (3, frac(8, 9)))?;
    check(parse("x = 1").unwrap(), &|n| frac(1, n), (2, frac(1, 2)))?;
    let em = gap_evidence(&Builtin::EM.equation(), 50).unwrap();
    let e1 = gap_evidence(&Builtin::E1.equation(), 50).unwrap();
    if em.candidate_gap() != Some(frac(1, 3)) || e1.candidate_gap() != Some(frac(1, 9)) {
        return Err("candidate gaps differ from 1/3 and 1/9".into());
    }
    Ok("EM gap 1/3, E1 and I gap 1/9, x = 1 maximum 1/2 on C_2..C_50".into())
}

fn multiplicativity() -> Outcome {
    let mut algebras = Vec::new();
    for n in 1..=4 {
        algebras.extend(enumerate(n).map_err(|e| e.to_string())?.algebras().cloned());
    }
    let mut checked = 0;
    for a in &algebras {
        for b in &algebras {
            for builtin in Builtin::ALL {
                let eq = builtin.equation();
                let Ok(m) = check_multiplicative(a, b, &eq) else {
                    // needs a bound one of the factors lacks
                    continue;
                };
                let product = bck_core::constructions::direct_product(a, b);
                let oracle = ds_naive(&product, &eq);
                if !m.holds || m.product != oracle {
                    return Err(format!(
                        "{}: {} x {} gives {}, factors {} and {}, oracle {oracle}",
                        builtin.name(),
                        a.order(),
                        b.order(),
                        m.product,
                        m.left,
                        m.right
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{} ordered pairs, {checked} (pair, equation) checks",
        algebras.len() * algebras.len()
    ))
}

fn enumeration_ground_truth() -> Outcome {
    let c2 = enumerate(2).map_err(|e| e.to_string())?;
    if c2.len() != 1 {
        return Err(format!("order 2 has {} entries", c2.len()));
    }
    let c3 = enumerate(3).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<usize>> = c3.algebras().map(|a| a.table().to_vec()).collect();
    let named: BTreeSet<Vec<usize>> = [tc(), pi(), bck_union(&two(), &two())]
        .iter()
        .map(|a| common::canonical(3, a.table()))
        .collect();
    let (labelled, oracle) = brute_force(3);
    if got != named || got != oracle || got.len() != 3 {
        return Err(format!("order 3: got {got:?}, named {named:?}, oracle {oracle:?}"));
    }
    Ok(format!(
        "1 algebra of order 2; order 3 is {{TC, PI, 2 u 2}}, matching 3^4 unpruned tables ({labelled} labelled)"
    ))
}

fn conjectures() -> Outcome {
    let mut parts = Vec::new();
    let mut failed = false;
    for n in 3..=5 {
        let r = verify_conjectures(&enumerate(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let fmt = |v: &[Degree]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        parts.push(format!(
            "n={n}: dnd {}/{} cd {}/{}{}",
            r.dnd.possible.len() - r.dnd.missing.len(),
            r.dnd.possible.len(),
            r.cd.possible.len() - r.cd.missing.len(),
            r.cd.possible.len(),
            if r.passed {
                String::new()
            } else {
                format!(" missing dnd [{}] cd [{}]", fmt(&r.dnd.missing), fmt(&r.cd.missing))
            }
        ));
        failed |= !r.passed;
    }
    if failed {
        Err(parts.join("; "))
    } else {
        Ok(parts.join("; "))
    }
}

fn bound_audits() -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for n in 3..=5 {
        let r = audit_bounds(&enumerate(n).map_err(|e| e.to_string())?);
        passed &= r.passed;
        let failing: Vec<String> = r
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{} ({}/{})", c.name, c.failures, c.applicable))
            .collect();
        lines.push(format!(
            "n={n}: {} algebras, {} of {} checks hold{}",
            r.checked,
            r.checks.len() - failing.len(),
            r.checks.len(),
            if failing.is_empty() {
                String::new()
            } else {
                format!(", failing {}", failing.join(", "))
            }
        ));
        for c in &r.counterexamples {
            let rows: Vec<String> = c
                .table
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            lines.push(format!("    {}: {} [{}]", c.check, c.detail, rows.join(" / ")));
        }
    }
    let text = lines.join("\n  ");
    if passed {
        Ok(text)
    } else {
        Err(text)
    }
}

fn determinism() -> Outcome {
    let inputs: Vec<BckAlgebra> = vec![
        pi(),
        chain(7).unwrap(),
        d_algebra(6).unwrap(),
        family(FamilySpec::new(Family::B, 9)).unwrap(),
        bck_core::constructions::direct_product(&pi(), &tc()),
    ];
    let eqs: Vec<Equation> = Builtin::ALL
        .iter()
        .map(|b| b.equation())
        .chain([
            parse("(x . y) . z = (x . z) . y").unwrap(),
            parse("x & (y | z) = (x & y) | (x & z)").unwrap(),
        ])
        .collect();
    let mut runs = 0;
    for a in &inputs {
        for eq in &eqs {
            let Ok(base) = ds_with_jobs(a, eq, 1) else { continue };
            for jobs in [2, 8] {
                let d = ds_with_jobs(a, eq, jobs).map_err(|e| e.to_string())?;
                if (d.count(), d.total()) != (base.count(), base.total()) {
                    return Err(format!("ds({eq}) differs with {jobs} workers"));
                }
            }
            runs += 1;
        }
    }
    for n in [4, 5] {
        let opts = |jobs| EnumerateOptions { jobs, node_limit: None };
        let base = serde_json::to_string(&enumerate_with(n, opts(1)).unwrap()).unwrap();
        for jobs in [2, 8] {
            let other = serde_json::to_string(&enumerate_with(n, opts(jobs)).unwrap()).unwrap();
            if other != base {
                return Err(format!("catalog of order {n} differs with {jobs} workers"));
            }
        }
    }
    Ok(format!(
        "{runs} degree computations and catalogs of orders 4, 5 identical for 1, 2, 8 workers"
    ))
}

fn random_term(rng: &mut ChaCha8Rng, depth: usize) -> Term {
    let leaf = depth == 0 || rng.gen_bool(0.2);
    if leaf {
        return match rng.gen_range(0..6) {
            0 => Term::Zero,
            1 => Term::One,
            2 => Term::var("x"),
            3 => Term::var("y"),
            4 => Term::var("z"),
            _ => Term::var("w2"),
        };
    }
    match rng.gen_range(0..4) {
        0 => Term::dot(random_term(rng, depth - 1), random_term(rng, depth - 1)),
        1 => Term::meet(random_term(rng, depth - 1), random_term(rng, depth - 1)),
        2 => Term::join(random_term(rng, depth - 1), random_term(rng, depth - 1)),
        _ => Term::neg(random_term(rng, depth - 1)),
    }
}

fn parser_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_dbc4);
    for i in 0..1000 {
        let t = random_term(&mut rng, 6);
        let printed = t.to_string();
        let back = parse_term(&printed).map_err(|e| format!("term {i} `{printed}`: {e}"))?;
        if back != t {
            return Err(format!("term {i} `{printed}` reparsed as {back:?}"));
        }
    }
    let documented = [
        (Builtin::DN, "~~x = x"),
        (Builtin::EM, "x | ~x = 1"),
        (Builtin::T, "x & y = y & x"),
        (Builtin::E1, "x . y = (x . y) . y"),
        (Builtin::I, "x . (y . x) = x"),
    ];
    for (b, text) in documented {
        let eq = parse(text).map_err(|e| format!("{text}: {e}"))?;
        if eq != b.equation() {
            return Err(format!("{text} does not parse to {}", b.name()));
        }
        // sanity: the parsed equation evaluates like the builtin
        if ds(&pi(), &eq).ok() != ds(&pi(), &b.equation()).ok() {
            return Err(format!("{text} evaluates differently"));
        }
    }
    Ok("1000 seeded terms of depth <= 6 round-trip; DN, EM, T, E1, I parse".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("named-algebra degrees", named_degrees),
        ("family formulas", family_formulas),
        ("D_n axioms at scale", d_family_at_scale),
        ("gap evidence on chains", gap_sequences),
        ("multiplicativity", multiplicativity),
        ("enumeration ground truth", enumeration_ground_truth),
        ("conjecture checks", conjectures),
        ("bound audits", bound_audits),
        ("determinism under parallelism", determinism),
        ("parser round-trip", parser_round_trip),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
