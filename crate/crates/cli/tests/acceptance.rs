//! Acceptance criteria 1–10, run sequentially with one PASS/FAIL line each.
//! Runs without the libtest harness so the lines are always printed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ospzhu_core::admissible::{
    enumerate_weights, vacuum_polynomial, valid_pairs_in_box, valid_pairs_up_to_product, AdmissiblePair,
};
use ospzhu_core::exactmath::{BiPoly, Rational};
use ospzhu_core::fusion::{fuse_closed, fusion_cells, integrable_fuse, ring_checks};
use ospzhu_core::pbw::{
    closed_form_projection, default_alpha_grid, mff_word, verify_pq_identities, verify_projection,
    xy_power_factorization, Algebra, MffKind, Projection, ProjectionStatus,
};
use ospzhu_core::q;
use ospzhu_core::verma::{
    maximal_submodule_check, singular_sweep, singular_vector, SingularOutcome, VermaConfig, VermaModule,
};
use ospzhu_core::zhu::{bimodule_build, zhu_build};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Verdict, Duration);

fn pair(p: i64, q: i64) -> AdmissiblePair {
    AdmissiblePair::new(p, q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c01_admissibility_round_trip() -> Verdict {
    let pairs = valid_pairs_in_box(12, 12);
    for pr in &pairs {
        let js: Vec<Rational> = enumerate_weights(pr).into_iter().map(|w| w.j).collect();
        let f = vacuum_polynomial(pr);
        ensure(f.degree() == Some(js.len() as u32), || format!("{pr}: deg f != |weights|"))?;
        ensure(f.has_root_multiset(&js), || format!("{pr}: roots differ from weights"))?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn c02_fusion_oracle() -> Verdict {
    let pairs = valid_pairs_up_to_product(81);
    let mut cells = 0;
    for pr in &pairs {
        let t = fusion_cells(pr).map_err(|e| e.to_string())?;
        for (a, row) in t.cells.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                cells += 1;
                ensure(c.agree, || {
                    format!(
                        "{pr} {}x{}: closed {:?} oracle {:?}",
                        t.weights[a],
                        t.weights[b],
                        c.closed.labels(),
                        c.oracle.labels()
                    )
                })?;
            }
        }
    }
    let p51 = pair(5, 1);
    let w = p51.weight(3, 0).unwrap();
    let r = fuse_closed(&p51, &w, &w).map_err(|e| e.to_string())?;
    ensure(r.labels() == [(1, 0), (3, 0)], || format!("(5,1) (3,0)x(3,0) = {:?}", r.labels()))?;
    let p53 = pair(5, 3);
    let w = p53.weight(1, 2).unwrap();
    ensure(fuse_closed(&p53, &w, &w).map_err(|e| e.to_string())?.is_empty(), || "(5,3) (1,2)x(1,2) nonzero".into())?;
    Ok(format!("{} pairs, {cells} cells", pairs.len()))
}

fn c03_integrable_agreement() -> Verdict {
    for level in 1..=8 {
        let pr = pair(2 * level + 3, 1);
        let ws = enumerate_weights(&pr);
        for a in &ws {
            for b in &ws {
                let got: Vec<i64> =
                    fuse_closed(&pr, a, b).map_err(|e| e.to_string())?.summands.iter().map(|w| (w.m - 1) / 2).collect();
                let want = integrable_fuse(level, (a.m - 1) / 2, (b.m - 1) / 2).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("level {level} {a}x{b}: {got:?} vs {want:?}"))?;
            }
        }
        let ring = ring_checks(&pr).map_err(|e| e.to_string())?;
        ensure(ring.passed() && ring.associative && ring.associativity_asserted, || {
            format!("level {level}: {ring:?}")
        })?;
    }
    Ok("levels 1..8".into())
}

fn c04_pq_calculus() -> Verdict {
    let gammas: Vec<u32> = (0..=6).collect();
    let grid = default_alpha_grid();
    ensure(grid.len() == 10, || "grid size".into())?;
    let mut asserted = 0;
    for alg in [Algebra::G, Algebra::L0] {
        let r = verify_pq_identities(alg, &gammas, &grid);
        if let Some(c) = r.asserted_failures().next() {
            return Err(format!("{} {} gamma={:?} alpha={:?}", c.algebra, c.identity, c.gamma, c.alpha));
        }
        asserted += r.count_asserted();
    }
    Ok(format!("{asserted} asserted instances"))
}

fn c05_factorization() -> Verdict {
    for a in 1..=8 {
        let c = xy_power_factorization(a);
        ensure(c.holds, || format!("a={a}: {} vs {}", c.lhs, c.rhs))?;
    }
    Ok("a = 1..8".into())
}

fn c06_projection() -> Verdict {
    let (mut pass, mut skipped) = (0, 0);
    for pr in valid_pairs_up_to_product(32) {
        for w in enumerate_weights(&pr) {
            for kind in [MffKind::F1, MffKind::F2] {
                for target in [Projection::Pi, Projection::Pi1] {
                    let c = verify_projection(&pr, w.m, w.s, kind, target).map_err(|e| e.to_string())?;
                    let integer = mff_word(&pr, w.m, w.s, kind).map_err(|e| e.to_string())?.integer_instance();
                    match c.status {
                        ProjectionStatus::Pass => pass += 1,
                        ProjectionStatus::Skipped if !integer => skipped += 1,
                        _ => return Err(format!("{pr} {kind}({},{}) {target:?}: {:?}", w.m, w.s, c.detail)),
                    }
                    let s0_f1 = w.s == 0 && kind == MffKind::F1;
                    ensure(!s0_f1 || integer && c.status == ProjectionStatus::Pass, || {
                        format!("{pr} F1({},0) not passed", w.m)
                    })?;
                }
            }
        }
    }
    let p82 = pair(8, 2);
    let closed = closed_form_projection(&p82, 4, 1, MffKind::F1, Projection::Pi).map_err(|e| e.to_string())?;
    ensure(closed.to_string() == "Q(-2)P(3)Q(-3)P(4)y^4", || format!("closed form {closed}"))?;
    let word = mff_word(&p82, 4, 1, MffKind::F1).map_err(|e| e.to_string())?;
    let lhs = word.project(Projection::Pi).map_err(|e| e.to_string())?;
    ensure(lhs == closed.to_element(Algebra::G), || "nf(y^8 e^2) differs".into())?;
    Ok(format!("{pass} verified, {skipped} fractional skipped"))
}

fn c07_singular_vectors() -> Verdict {
    let m11 = VermaModule::new(VermaConfig::verma(q!(1), q!(1))).map_err(|e| e.to_string())?;
    match singular_vector(&m11, &pair(5, 1), 3, 0, MffKind::F1).map_err(|e| e.to_string())? {
        SingularOutcome::Vector(sv) => {
            ensure(m11.is_singular(&sv.vector).map_err(|e| e.to_string())?, || "y(0)^3 v not singular".into())?
        }
        SingularOutcome::Fractional => return Err("y(0)^3 reported fractional".into()),
    }
    let maximal = maximal_submodule_check(&pair(5, 1)).map_err(|e| e.to_string())?;
    ensure(maximal.passed() && maximal.f2_degree == Some(2), || format!("e(-1)^2 1 in V(1): {maximal:?}"))?;
    let checks = singular_sweep(32, 6).map_err(|e| e.to_string())?;
    let pass = checks.iter().filter(|c| c.status == ProjectionStatus::Pass).count();
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c.status == ProjectionStatus::Fail)
        .map(|c| format!("({},{}) {}({},{})", c.p, c.q, c.kind, c.m, c.s))
        .collect();
    ensure(failed.is_empty(), || {
        format!("{} of {} integer instances not annihilated: {}", failed.len(), failed.len() + pass, failed.join(", "))
    })?;
    Ok(format!("{pass} integer instances annihilated"))
}

fn c08_zhu_semisimplicity() -> Verdict {
    let pairs = valid_pairs_in_box(12, 12);
    for pr in &pairs {
        let a = zhu_build(pr);
        ensure(a.is_semisimple(), || format!("{pr}: vacuum polynomial not squarefree"))?;
        for w in enumerate_weights(pr) {
            let b = bimodule_build(pr, &w).map_err(|e| e.to_string())?;
            let sum: usize = b.reducers().iter().map(|g| g.degree().unwrap_or(0) as usize).sum();
            ensure(b.dim() == Some(sum) && b.basis().len() == sum, || format!("{pr} {w}: dim mismatch"))?;
            if w.m == 1 && w.s == 0 {
                ensure(sum == a.dim(), || format!("{pr}: vacuum bimodule dim {sum} vs deg f {}", a.dim()))?;
            }
        }
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn c09_bimodule_laws() -> Verdict {
    let element = prop::collection::vec((0u32..8, 0u32..6, -12i64..=12, 1i64..=5), 0..8).prop_map(|ts| {
        let mut b = BiPoly::zero();
        for (a, n, c, d) in ts {
            b.add_term(a, n, Rational::new(c, d));
        }
        b
    });
    let mut presentations = 0;
    for pr in [pair(5, 1), pair(5, 3)] {
        for w in enumerate_weights(&pr) {
            let pres = bimodule_build(&pr, &w).map_err(|e| e.to_string())?;
            presentations += 1;
            let config = Config { cases: 200, failure_persistence: None, ..Config::default() };
            let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
            runner
                .run(&(element.clone(), element.clone()), |(v, junk)| {
                    let nv = pres.nf(&v);
                    prop_assert_eq!(pres.left(&pres.right(&nv)), pres.right(&pres.left(&nv)));
                    let lifted = ospzhu_core::zhu::BimodElement(&nv.0 + &(&junk - &pres.nf(&junk).0));
                    prop_assert_eq!(pres.nf(&lifted.0), nv.clone());
                    prop_assert_eq!(pres.left(&lifted), pres.left(&nv));
                    prop_assert_eq!(pres.right(&lifted), pres.right(&nv));
                    Ok(())
                })
                .map_err(|e| format!("{pr} {w}: {e}"))?;
        }
    }
    Ok(format!("{presentations} presentations x 200 elements"))
}

fn run_cli(workers: &str, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ospzhu"))
        .args(args)
        .env("OSPZHU_WORKERS", workers)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code().is_some_and(|c| c <= 1), || format!("{args:?} exited with {:?}", out.status.code()))?;
    Ok(out.stdout)
}

fn c10_determinism() -> Verdict {
    let runs: [&[&str]; 4] = [
        &["table", "5", "3"],
        &["table", "8", "2", "--format", "csv"],
        &["table", "9", "5", "--format", "tex"],
        &["verify", "--suite", "all", "--max-pq", "40"],
    ];
    for args in runs {
        let a = run_cli("1", args)?;
        let b = run_cli("4", args)?;
        ensure(!a.is_empty() && a == b, || format!("{args:?} differs between 1 and 4 workers"))?;
    }
    Ok(format!("{} commands, 1 vs 4 workers", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "admissibility round-trip", c01_admissibility_round_trip, Duration::from_secs(5)),
        (2, "fusion oracle equivalence", c02_fusion_oracle, Duration::from_secs(30)),
        (3, "integrable agreement", c03_integrable_agreement, Duration::from_secs(10)),
        (4, "P/Q calculus", c04_pq_calculus, Duration::from_secs(10)),
        (5, "factorization", c05_factorization, Duration::from_secs(5)),
        (6, "projection formulas", c06_projection, Duration::from_secs(60)),
        (7, "singular vectors", c07_singular_vectors, Duration::from_secs(30)),
        (8, "Zhu semisimplicity witness", c08_zhu_semisimplicity, Duration::from_secs(5)),
        (9, "bimodule action laws", c09_bimodule_laws, Duration::from_secs(5)),
        (10, "determinism", c10_determinism, Duration::MAX),
    ];
    let mut failures = 0;
    for (n, name, check, budget) in criteria {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; exceeded {budget:?}")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failures += 1;
                println!("criterion {n:>2} FAIL  {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
