//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use moorekit::corpus;
use moorekit::crossed::{induced_cm, multiplication_cm, verify_2cm, verify_3cm, verify_cm};
use moorekit::crossed::{ThreeCrossedModule, TwoCrossedModule};
use moorekit::functors::{
    roundtrip_check, table_identities_check, three_crossed_with, two_crossed_from_simplicial,
    LiftingConvention,
};
use moorekit::lie::{
    alternating_mutant, heisenberg_lifting_mutant, lie_algebras, lie_chains, validate_lie,
    verify_lie_3cm,
};
use moorekit::moore::{lemma7_check, moore, proj_p, table1_audit, theorem5_check};
use moorekit::simplicial::{decompose, validate_simplicial};
use moorekit::supply::{cardinality, elements};
use moorekit::{
    Algebra, AxiomReport, CheckKind, Matrix, PrimeField, Status, Subspace, SupplyConfig,
    TruncatedSimplicialAlgebra,
};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn failures(rep: &AxiomReport) -> String {
    rep.failures()
        .map(|r| {
            format!(
                "{} [{}]",
                r.check,
                r.witnesses.first().cloned().unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn cli(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_moorekit"))
        .args(args)
        .env_remove("MOOREKIT_SEED")
        .env_remove("MOOREKIT_BUDGET")
        .env_remove("MOOREKIT_EXHAUSTIVE_BOUND")
        .env_remove("MOOREKIT_CHAR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json_list(stdout: &str, key: &str) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    v[key]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

/// Every subset of the exhaustive supply is enumerated for these sizes.
fn exhaustive_cfg() -> SupplyConfig {
    SupplyConfig {
        exhaustive_bound: 1 << 16,
        pair_bound: 1 << 20,
        ..SupplyConfig::default()
    }
}

fn c1_combinatorics() -> Outcome {
    let printed_s: [&[&str]; 3] = [
        &["∅2", "(1)", "(0)", "(1,0)"],
        &[
            "∅3", "(2)", "(1)", "(2,1)", "(0)", "(2,0)", "(1,0)", "(2,1,0)",
        ],
        &[
            "∅4",
            "(3)",
            "(2)",
            "(3,2)",
            "(1)",
            "(3,1)",
            "(2,1)",
            "(3,2,1)",
            "(0)",
            "(3,0)",
            "(2,0)",
            "(3,2,0)",
            "(1,0)",
            "(3,1,0)",
            "(2,1,0)",
            "(3,2,1,0)",
        ],
    ];
    for (n, want) in (2..=4).zip(printed_s) {
        let (code, out) = cli(&["sset", &n.to_string()], "");
        ensure(code == 0, format!("sset {n} exit {code}"))?;
        ensure(
            json_list(&out, "s_set") == want,
            format!("sset {n} order differs"),
        )?;
    }
    let p3 = [
        "(1,0)(2)", "(2,0)(1)", "(0)(2,1)", "(2)(0)", "(2)(1)", "(1)(0)",
    ];
    let p4 = [
        "(3,2,1)(0)",
        "(3,2,0)(1)",
        "(3,1,0)(2)",
        "(2,1,0)(3)",
        "(3,2)(1,0)",
        "(3,1)(2,0)",
        "(3,0)(2,1)",
        "(3,2)(1)",
        "(3,2)(0)",
        "(3,1)(2)",
        "(3,1)(0)",
        "(3,0)(2)",
        "(3,0)(1)",
        "(2,1)(3)",
        "(0)(2,1)",
        "(2,0)(3)",
        "(2,0)(1)",
        "(1,0)(3)",
        "(1,0)(2)",
        "(3)(2)",
        "(3)(1)",
        "(3)(0)",
        "(2)(1)",
        "(2)(0)",
        "(1)(0)",
    ];
    let (_, out) = cli(&["pset", "3"], "");
    ensure(
        json_list(&out, "p_set") == p3,
        "pset 3 differs from the printed six",
    )?;
    let (_, out) = cli(&["pset", "4"], "");
    ensure(
        json_list(&out, "p_set") == p4,
        "pset 4 differs from the table row order",
    )?;
    Ok("S(2), S(3), S(4), P(3), P(4) exact".into())
}

fn table1_on(e: &TruncatedSimplicialAlgebra, cfg: &SupplyConfig) -> Result<(usize, usize), String> {
    let recs = table1_audit(e, cfg).map_err(|e| e.to_string())?;
    let audits: Vec<_> = recs.iter().filter(|r| r.kind == CheckKind::Audit).collect();
    let members: Vec<_> = recs
        .iter()
        .filter(|r| r.kind == CheckKind::Invariant)
        .collect();
    ensure(
        audits.len() == 25 && members.len() == 25,
        "expected 25 rows",
    )?;
    let mut discrepant = 0;
    for r in &audits {
        let note = r.note.as_deref().unwrap_or("");
        ensure(
            note.ends_with("(exhaustive)"),
            format!("{} not exhaustive", r.check),
        )?;
        match (note.starts_with("DISCREPANT"), r.status) {
            (true, Status::Fail) if !r.witnesses.is_empty() => discrepant += 1,
            (false, Status::Pass) if note.starts_with("CONFIRMED") => {}
            _ => return Err(format!("{}: inconsistent verdict {note}", r.check)),
        }
    }
    for r in &members {
        ensure(r.passed(), format!("{}: {:?}", r.check, r.witnesses))?;
    }
    Ok((25 - discrepant, discrepant))
}

fn c2_table1() -> Outcome {
    let start = Instant::now();
    let cfg = exhaustive_cfg();
    let f = field(2);
    let e = moorekit::simplicial::build_from_crossed(
        &corpus::ideal_pair(f).map_err(|e| e.to_string())?,
        4,
    )
    .map_err(|e| e.to_string())?;
    let (ok, bad) = table1_on(&e, &cfg)?;
    // a k = 4 object with NE₂, NE₃, NE₄ all nonzero, so the rows are not vacuous
    let (ok4, bad4) = table1_on(&corpus::length_four(f).unwrap(), &cfg)?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "ideal pair: {ok} confirmed, {bad} discrepant; length-four: {ok4} confirmed, {bad4} discrepant; {secs:.1}s"
    ))
}

fn c3_lemma7() -> Outcome {
    let cfg = exhaustive_cfg();
    let mut applied = Vec::new();
    for p in [2, 3] {
        for (name, e) in corpus::simplicial_objects(field(p)).unwrap() {
            let r = lemma7_check(&e, &cfg).map_err(|e| e.to_string())?;
            let ne4 = e.normal_space(4).dim();
            match r.status {
                Status::Pass if ne4 == 0 => applied.push(format!("{name}@{p}")),
                Status::HypothesisFailed if ne4 > 0 => {}
                _ => return Err(format!("{name}@{p}: {:?} {:?}", r.status, r.witnesses)),
            }
        }
    }
    ensure(!applied.is_empty(), "no object with NE4 = 0")?;
    Ok(format!(
        "{} objects with NE4 = 0, all 25 images vanish",
        applied.len()
    ))
}

fn c4_three_crossed() -> Outcome {
    let cfg = SupplyConfig::default();
    let mut lengths = std::collections::BTreeSet::new();
    let mut audits = Vec::new();
    let objects = [2, 3].into_iter().flat_map(|p| {
        corpus::simplicial_objects(field(p))
            .unwrap()
            .into_iter()
            .map(move |(n, e)| (format!("{n}@{p}"), e))
    });
    for (name, e) in objects {
        let len = moore(&e).map_err(|e| e.to_string())?.length();
        if len > 2 {
            continue;
        }
        let out = three_crossed_with(&e, LiftingConvention::default(), &cfg)
            .map_err(|err| format!("{name}: {err}"))?;
        let m = &out.structure;
        for (a, b) in [(&m.d1, &m.d2), (&m.d2, &m.d3)] {
            ensure(
                a.matrix().mul(b.matrix()).is_zero(),
                format!("{name}: d∘d ≠ 0"),
            )?;
        }
        for t in [3, 4] {
            let rep = table_identities_check(&e, t, &cfg).map_err(|e| e.to_string())?;
            ensure(
                rep.passed(),
                format!("{name} table {t}: {}", failures(&rep)),
            )?;
        }
        let rep = verify_3cm(m, &cfg);
        let inv: Vec<_> = rep
            .failures()
            .filter(|r| r.kind == CheckKind::Invariant)
            .collect();
        ensure(
            inv.is_empty(),
            format!("{name}: invariant failures {}", failures(&rep)),
        )?;
        for r in rep.failures() {
            ensure(
                !r.witnesses.is_empty(),
                format!("{name}: {} has no witness", r.check),
            )?;
            if r.kind == CheckKind::Audit {
                audits.push(format!("{name} {}", r.check));
            } else {
                return Err(format!("{name}: axiom failure {}", failures(&rep)));
            }
        }
        lengths.insert(len);
    }
    ensure(lengths.len() == 3, format!("lengths covered: {lengths:?}"))?;
    Ok(format!(
        "lengths {lengths:?} pass; audit findings (exit 2): {}",
        if audits.is_empty() {
            "none".to_string()
        } else {
            audits.join(", ")
        }
    ))
}

fn c5_crossed() -> Outcome {
    let f2 = field(2);
    let f3 = field(3);
    let cases = [
        ("ideal pair", corpus::ideal_pair(f2)),
        ("zero module", corpus::zero_module(f2)),
        (
            "M(Z/2)",
            multiplication_cm(&std::sync::Arc::new(Algebra::truncated_polynomial(f2, 1))),
        ),
        (
            "M(Z/3[t]/(t²-1))",
            multiplication_cm(&corpus::cyclic_two(f3)),
        ),
    ];
    for (name, cm) in cases {
        let rep = verify_cm(&cm.map_err(|e| e.to_string())?);
        ensure(rep.passed(), format!("{name}: {}", failures(&rep)))?;
    }
    let rep = verify_cm(&corpus::cm2_mutant(f2).unwrap());
    let cm2 = rep.get("CM2").ok_or("no CM2 record")?;
    ensure(
        cm2.status == Status::Fail && !cm2.witnesses.is_empty(),
        "mutant passes CM2",
    )?;
    Ok(format!(
        "4 crossed modules pass; mutant CM2 witness {}",
        cm2.witnesses[0]
    ))
}

fn c6_remarks() -> Outcome {
    let cfg = SupplyConfig::default();
    let mut n = 0;
    let mut acting = Vec::new();
    for p in [2, 3] {
        let f = field(p);
        let mut items: Vec<(String, TwoCrossedModule)> = corpus::two_crossed_modules(f).unwrap();
        for (name, e) in [
            ("length-two", corpus::length_two(f, 2).unwrap()),
            (
                "length-two-peiffer",
                corpus::length_two_peiffer(f, 2).unwrap(),
            ),
        ] {
            let t = two_crossed_from_simplicial(&e, LiftingConvention::default())
                .map_err(|e| e.to_string())?;
            items.push((name.into(), t.structure));
        }
        for (name, t) in items {
            let rep = verify_2cm(&t);
            ensure(rep.passed(), format!("{name}@{p}: {}", failures(&rep)))?;
            let rep = verify_cm(&induced_cm(&t).map_err(|e| e.to_string())?);
            ensure(
                rep.passed(),
                format!("{name}@{p} induced: {}", failures(&rep)),
            )?;
            if t.lifting.is_zero() {
                let rep = verify_cm(&t.bottom());
                ensure(
                    rep.passed(),
                    format!("{name}@{p} bottom: {}", failures(&rep)),
                )?;
                let rep = verify_3cm(&ThreeCrossedModule::from_two_crossed(&t), &cfg);
                ensure(
                    rep.passed(),
                    format!("{name}@{p} as 3-crossed: {}", failures(&rep)),
                )?;
                // unital C0 cannot act by zero; reported, not required
                if t.c2().dim() > 0 && !t.act02.is_zero() {
                    acting.push(format!("{name}@{p}"));
                }
            }
            n += 1;
        }
        for (name, cm) in corpus::crossed_modules(f).unwrap() {
            let rep = verify_2cm(&TwoCrossedModule::from_crossed(&cm));
            ensure(
                rep.passed(),
                format!("{name}@{p} with C2 = 0: {}", failures(&rep)),
            )?;
        }
    }
    let note = if acting.is_empty() {
        String::new()
    } else {
        format!(
            "; zero lifting with a nonzero C0-action on C2: {}",
            acting.join(", ")
        )
    };
    Ok(format!("{n} 2-crossed modules: remarks 1, 2, 3 hold{note}"))
}

fn c7_roundtrips() -> Outcome {
    let mut n = 0;
    for level in [1, 2] {
        for p in [2, 3] {
            let rep = roundtrip_check(level, field(p)).map_err(|e| e.to_string())?;
            ensure(
                rep.passed(),
                format!("level {level} p={p}: {}", failures(&rep)),
            )?;
            n += rep.records.len();
        }
    }
    Ok(format!("{n} round trips equal on the nose"))
}

fn c8_theorem5() -> Outcome {
    let (mut pass, mut gated) = (0, 0);
    for p in [2, 3] {
        for (name, e) in corpus::simplicial_objects(field(p)).unwrap() {
            let r = theorem5_check(&e, 2).map_err(|e| e.to_string())?;
            match r.status {
                Status::Pass => pass += 1,
                Status::HypothesisFailed => gated += 1,
                Status::Fail => return Err(format!("{name}@{p}: {:?}", r.witnesses)),
            }
        }
    }
    ensure(pass > 0, "no object satisfies the hypothesis")?;
    Ok(format!("{pass} equal, {gated} hypothesis-failed"))
}

/// `∩_{i<n} ker d_i`, computed directly from the face matrices.
fn normal_oracle(e: &TruncatedSimplicialAlgebra, n: usize) -> Subspace {
    let a = e.level(n);
    (0..n).fold(Subspace::full(a.field(), a.dim()), |acc, i| {
        acc.intersection(&e.face(n, i).matrix().null_space())
    })
}

fn c9_moore() -> Outcome {
    let start = Instant::now();
    let cfg = SupplyConfig {
        exhaustive_bound: 1 << 12,
        budget: 512,
        ..SupplyConfig::default()
    };
    let (mut exhaustive, mut sampled) = (0, 0);
    for p in [2, 3] {
        for (name, e) in corpus::simplicial_objects(field(p)).unwrap() {
            ensure(
                validate_simplicial(&e).is_empty(),
                format!("{name}@{p}: simplicial identities"),
            )?;
            let mc = moore(&e).map_err(|err| format!("{name}@{p}: {err}"))?;
            for n in 0..=e.k() {
                ensure(
                    *mc.space(n).space() == normal_oracle(&e, n),
                    format!("{name}@{p}: NE{n} differs from the kernel intersection"),
                )?;
            }
            for n in 2..=e.k() {
                let dd = mc.boundary(n - 1).matrix().mul(mc.boundary(n).matrix());
                ensure(dd.is_zero(), format!("{name}@{p}: ∂∂ ≠ 0 at {n}"))?;
            }
            for n in 1..=e.k() {
                let a = e.level(n);
                // p is linear, so P² = P on its matrix settles every element
                let cols: Vec<Vec<u32>> = (0..a.dim())
                    .map(|i| {
                        proj_p(&e, n, a.basis_element(i).coeffs())
                            .unwrap()
                            .into_coeffs()
                    })
                    .collect();
                let pm = Matrix::from_columns(a.field(), a.dim(), &cols);
                ensure(
                    pm.mul(&pm) == pm,
                    format!("{name}@{p}: p not idempotent at {n}"),
                )?;
                if cardinality(a) <= cfg.exhaustive_bound {
                    exhaustive += 1;
                } else {
                    sampled += 1;
                }
                for x in elements(a, &cfg) {
                    let px = proj_p(&e, n, x.coeffs()).unwrap();
                    ensure(
                        mc.space(n).space().contains(px.coeffs())
                            && proj_p(&e, n, px.coeffs()).unwrap() == px,
                        format!("{name}@{p}: p({:?}) misbehaves at {n}", x.coeffs()),
                    )?;
                    let d = decompose(&e, n, x.coeffs()).map_err(|e| e.to_string())?;
                    ensure(
                        d.reassemble(&e) == x,
                        format!("{name}@{p}: decomposition of {:?} at {n}", x.coeffs()),
                    )?;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "{exhaustive} levels swept exhaustively, {sampled} sampled (p checked on its matrix); {secs:.1}s"
    ))
}

fn c10_lie() -> Outcome {
    let cfg = SupplyConfig::default();
    for p in [2, 3] {
        let f = field(p);
        for (name, l) in lie_algebras(f) {
            let rep = validate_lie(&l);
            ensure(rep.passed(), format!("{name}@{p}: {}", failures(&rep)))?;
        }
        let rep = validate_lie(&alternating_mutant(f));
        ensure(
            rep.get("alternating")
                .is_some_and(|r| r.status == Status::Fail),
            format!("alternating mutant accepted at p={p}"),
        )?;
        for (name, m) in lie_chains(f).unwrap() {
            let rep = verify_lie_3cm(&m, &cfg);
            ensure(rep.passed(), format!("{name}@{p}: {}", failures(&rep)))?;
        }
        let rep = verify_lie_3cm(&heisenberg_lifting_mutant(f).unwrap(), &cfg);
        ensure(!rep.passed(), format!("lifting mutant passes at p={p}"))?;
        ensure(
            rep.failures().all(|r| !r.witnesses.is_empty()),
            "mutant failure without witness",
        )?;
    }
    Ok("abelian and Heisenberg accepted; both mutants rejected with witnesses".into())
}

fn suite_stream() -> Result<String, String> {
    let common = ["--seed", "11", "--budget", "16", "--exhaustive-bound", "64"];
    let run = |args: &[&str], stdin: &str| {
        let mut all: Vec<&str> = args.to_vec();
        all.extend(common);
        cli(&all, stdin)
    };
    let (code, doc) = run(&["--char", "2,3", "corpus"], "");
    ensure(code == 0, "corpus failed")?;
    let mut stream = doc.clone();
    for p in [2, 3] {
        for name in ["ideal-pair", "length-two", "length-four"] {
            let name = format!("{name}@{p}");
            for cmd in [
                "moore", "pairings", "table1", "lemma7", "theorem5", "to-xmod", "to-2xmod",
            ] {
                stream.push_str(&run(&[cmd, &name], &doc).1);
            }
            let (_, built) = run(&["to-3xmod", &name], &doc);
            stream.push_str(&built);
            stream.push_str(&run(&["verify-3xmod", &name], &built).1);
            for t in ["2", "3", "4"] {
                stream.push_str(&run(&["tables", t, &name], &doc).1);
            }
        }
        for name in ["ideal-pair", "cm2-mutant"] {
            stream.push_str(&run(&["verify-xmod", &format!("{name}@{p}")], &doc).1);
        }
        for name in ["heisenberg-chain", "heisenberg-chain-mutant"] {
            stream.push_str(&run(&["lie-verify", &format!("{name}@{p}")], &doc).1);
        }
    }
    stream.push_str(&run(&["validate"], &doc).1);
    stream.push_str(&run(&["--char", "2,3", "roundtrip", "2"], "").1);
    Ok(stream)
}

fn c11_determinism() -> Outcome {
    let a = suite_stream()?;
    let b = suite_stream()?;
    ensure(a == b, "report streams differ")?;
    for line in a.lines() {
        serde_json::from_str::<serde_json::Value>(line)
            .map_err(|e| format!("not single-line JSON: {e}"))?;
    }
    Ok(format!(
        "{} lines, {} bytes identical",
        a.lines().count(),
        a.len()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("combinatorics exactness", c1_combinatorics),
        ("table 1 audit", c2_table1),
        ("lemma 7", c3_lemma7),
        ("3-crossed pipeline", c4_three_crossed),
        ("crossed-module corpus", c5_crossed),
        ("2-crossed remarks", c6_remarks),
        ("round trips", c7_roundtrips),
        ("theorem 5 at n = 2", c8_theorem5),
        ("Moore-complex structure", c9_moore),
        ("Lie", c10_lie),
        ("determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
