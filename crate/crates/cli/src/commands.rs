//! The four subcommands. Each returns a [`ReportDocument`] and an exit code;
//! input errors surface as [`CliError`].

use clap::ValueEnum;
use ospzhu_core::admissible::{enumerate_weights, vacuum_polynomial, valid_pairs_up_to_product, AdmissiblePair};
use ospzhu_core::fusion::{fuse_closed, fuse_oracle, fusion_cells, integrable_fuse, ring_checks_on, FusionResult};
use ospzhu_core::pbw::{
    default_alpha_grid, verify_pq_identities, verify_projection, xy_power_factorization, Algebra, MffKind, Projection,
    ProjectionStatus,
};
use ospzhu_core::verma::{maximal_submodule_check, singular_sweep};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_FAILURE, EXIT_MISMATCH, EXIT_OK};
use crate::report::{Cell, ReportDocument, Status, Table};

pub struct Outcome {
    pub doc: ReportDocument,
    pub exit: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Pq,
    Factorization,
    Projection,
    Singular,
    Oracle,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Pq => "pq",
            Suite::Factorization => "factorization",
            Suite::Projection => "projection",
            Suite::Singular => "singular",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }

    fn default_max_pq(self) -> i64 {
        match self {
            Suite::Oracle => 81,
            _ => 32,
        }
    }
}

fn labels(r: &FusionResult) -> String {
    if r.is_empty() {
        return "0".into();
    }
    r.summands.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" + ")
}

pub fn cmd_weights(p: i64, q: i64) -> Result<Outcome, CliError> {
    let pair = AdmissiblePair::new(p, q)?;
    let weights = enumerate_weights(&pair);
    let f = vacuum_polynomial(&pair);
    let mut table = Table::new(&["m", "s", "j"]);
    for w in &weights {
        table.push(vec![w.m.into(), w.s.into(), (&w.j).into()]);
    }
    let payload = json!({
        "weights": weights,
        "vacuum_polynomial": f.to_string(),
        "semisimple": f.is_squarefree(),
    });
    let doc = ReportDocument::for_pair(&pair, format!("weights {p} {q}"), payload, Status::Pass, table);
    Ok(Outcome { doc, exit: EXIT_OK })
}

pub fn cmd_fuse(p: i64, q: i64, m1: i64, s1: i64, m2: i64, s2: i64) -> Result<Outcome, CliError> {
    let pair = AdmissiblePair::new(p, q)?;
    let w1 = pair.weight(m1, s1)?;
    let w2 = pair.weight(m2, s2)?;
    let closed = fuse_closed(&pair, &w1, &w2)?;
    let oracle = fuse_oracle(&pair, &w1, &w2)?;
    let agree = closed == oracle;
    let mut table = Table::new(&["source", "m", "s", "j"]);
    for (source, r) in [("closed", &closed), ("oracle", &oracle)] {
        for w in &r.summands {
            table.push(vec![source.into(), w.m.into(), w.s.into(), (&w.j).into()]);
        }
    }
    let payload = json!({
        "left": w1,
        "right": w2,
        "summands": closed,
        "oracle": oracle,
        "agree": agree,
    });
    let (status, exit) = if agree { (Status::Pass, EXIT_OK) } else { (Status::Fail, EXIT_MISMATCH) };
    let doc = ReportDocument::for_pair(&pair, format!("fuse {p} {q} {m1} {s1} {m2} {s2}"), payload, status, table);
    Ok(Outcome { doc, exit })
}

pub fn cmd_table(p: i64, q: i64) -> Result<Outcome, CliError> {
    let pair = AdmissiblePair::new(p, q)?;
    let t = fusion_cells(&pair)?;
    let mut table = Table::new(&["left", "right", "closed", "oracle", "agree"]);
    let mut cells = Vec::new();
    let mut agree = true;
    for (a, row) in t.cells.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            let (wa, wb) = (&t.weights[a], &t.weights[b]);
            agree &= c.agree;
            table.push(vec![
                wa.to_string().into(),
                wb.to_string().into(),
                labels(&c.closed).into(),
                labels(&c.oracle).into(),
                c.agree.into(),
            ]);
            cells.push(json!({
                "left": [wa.m, wa.s],
                "right": [wb.m, wb.s],
                "closed": c.closed,
                "oracle": c.oracle,
                "agree": c.agree,
            }));
        }
    }
    let ring = if agree { Some(ring_checks_on(&t)) } else { None };
    let (status, exit) = match &ring {
        None => (Status::Fail, EXIT_MISMATCH),
        Some(r) if !r.passed() => (Status::Fail, EXIT_FAILURE),
        Some(_) => (Status::Pass, EXIT_OK),
    };
    let payload = json!({ "weights": t.weights, "cells": cells, "ring": ring });
    let doc = ReportDocument::for_pair(&pair, format!("table {p} {q}"), payload, status, table);
    Ok(Outcome { doc, exit })
}

/// One verification instance.
#[derive(Clone, Debug, Serialize)]
struct Line {
    instance: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl Line {
    fn new(instance: String, status: &'static str, detail: Option<String>) -> Self {
        Line { instance, status, detail }
    }

    fn asserted(instance: String, holds: bool, detail: Option<String>) -> Self {
        Line::new(instance, if holds { "pass" } else { "fail" }, if holds { None } else { detail })
    }
}

#[derive(Clone, Debug, Serialize)]
struct SuiteReport {
    suite: &'static str,
    bounds: Value,
    passed: usize,
    failed: usize,
    skipped: usize,
    report_only: usize,
    checks: Vec<Line>,
}

impl SuiteReport {
    fn new(suite: Suite, bounds: Value, checks: Vec<Line>) -> Self {
        let count = |s: &str| checks.iter().filter(|l| l.status == s).count();
        SuiteReport {
            suite: suite.name(),
            bounds,
            passed: count("pass"),
            failed: count("fail"),
            skipped: count("skipped"),
            report_only: count("report-only"),
            checks,
        }
    }
}

fn status_word(s: &ProjectionStatus) -> &'static str {
    match s {
        ProjectionStatus::Pass => "pass",
        ProjectionStatus::Fail => "fail",
        ProjectionStatus::Skipped => "skipped",
    }
}

fn suite_pq() -> SuiteReport {
    let gammas: Vec<u32> = (0..=6).collect();
    let grid = default_alpha_grid();
    let mut lines = Vec::new();
    for alg in [Algebra::G, Algebra::L0] {
        for c in verify_pq_identities(alg, &gammas, &grid).checks {
            let mut inst = format!("{} {}", c.algebra, c.identity);
            if let Some(g) = c.gamma {
                inst += &format!(" gamma={g}");
            }
            if let Some(a) = &c.alpha {
                inst += &format!(" alpha={a}");
            }
            if let Some(b) = &c.beta {
                inst += &format!(" beta={b}");
            }
            lines.push(if c.asserted {
                Line::asserted(inst, c.holds, c.detail)
            } else {
                let verdict = if c.holds { "holds" } else { "refuted" };
                Line::new(inst, "report-only", Some(verdict.into()))
            });
        }
    }
    SuiteReport::new(Suite::Pq, json!({"gamma": [0, 6], "alpha_grid": grid}), lines)
}

fn suite_factorization() -> SuiteReport {
    let lines = (1..=8)
        .map(|a| {
            let c = xy_power_factorization(a);
            Line::asserted(format!("x^{a} y^{a}"), c.holds, Some(format!("lhs = {}; rhs = {}", c.lhs, c.rhs)))
        })
        .collect();
    SuiteReport::new(Suite::Factorization, json!({"a": [1, 8]}), lines)
}

fn suite_projection(max_pq: i64) -> Result<SuiteReport, CliError> {
    let mut jobs = Vec::new();
    for pair in valid_pairs_up_to_product(max_pq) {
        for w in enumerate_weights(&pair) {
            for kind in [MffKind::F1, MffKind::F2] {
                for target in [Projection::Pi, Projection::Pi1] {
                    jobs.push((pair, w.m, w.s, kind, target));
                }
            }
        }
    }
    let checks = jobs
        .par_iter()
        .map(|(pair, m, s, kind, target)| verify_projection(pair, *m, *s, *kind, *target))
        .collect::<Result<Vec<_>, _>>()?;
    let lines = checks
        .into_iter()
        .map(|c| {
            let target = match c.target {
                Projection::Pi => "pi",
                Projection::Pi1 => "pi1",
            };
            let detail = match c.status {
                ProjectionStatus::Skipped => Some("fractional, out of scope".to_string()),
                _ => c.detail,
            };
            let inst = format!("({},{}) {}({},{}) {target}", c.p, c.q, c.kind, c.m, c.s);
            Line::new(inst, status_word(&c.status), detail)
        })
        .collect();
    Ok(SuiteReport::new(Suite::Projection, json!({"max_pq": max_pq}), lines))
}

fn suite_singular(max_pq: i64, depth: u32) -> Result<SuiteReport, CliError> {
    let mut lines: Vec<Line> = singular_sweep(max_pq, depth)?
        .into_iter()
        .map(|c| {
            let inst = format!("({},{}) {}({},{})", c.p, c.q, c.kind, c.m, c.s);
            Line::new(inst, status_word(&c.status), c.detail)
        })
        .collect();
    for pair in valid_pairs_up_to_product(max_pq) {
        let r = maximal_submodule_check(&pair)?;
        let inst = format!("({},{}) vacuum module F1(1,0), F2(1,0)", pair.p, pair.q);
        lines.push(match (r.f1_vanishes, r.f2_singular, r.f2_degree) {
            (_, None, _) => Line::new(inst, "skipped", Some("fractional, out of scope".into())),
            (_, _, Some(d)) if d > depth as i64 => {
                Line::new(inst, "skipped", Some(format!("degree {d} exceeds depth {depth}")))
            }
            (f1, Some(f2), _) => Line::asserted(inst, f1 && f2, Some(format!("F1 vanishes: {f1}; F2 singular: {f2}"))),
        });
    }
    Ok(SuiteReport::new(Suite::Singular, json!({"max_pq": max_pq, "depth": depth}), lines))
}

fn suite_oracle(max_pq: i64) -> Result<SuiteReport, CliError> {
    let mut lines = Vec::new();
    for pair in valid_pairs_up_to_product(max_pq) {
        let t = fusion_cells(&pair)?;
        let mismatches: Vec<String> = t
            .cells
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().enumerate().map(move |(b, c)| (a, b, c)))
            .filter(|(_, _, c)| !c.agree)
            .map(|(a, b, c)| {
                format!("{}x{}: closed {} oracle {}", t.weights[a], t.weights[b], labels(&c.closed), labels(&c.oracle))
            })
            .collect();
        let n = t.weights.len();
        lines.push(Line::asserted(
            format!("{pair} closed = oracle on {} cells", n * n),
            mismatches.is_empty(),
            Some(mismatches.join("; ")),
        ));
        if !mismatches.is_empty() {
            continue;
        }
        let ring = ring_checks_on(&t);
        lines.push(Line::asserted(format!("{pair} ring axioms"), ring.passed(), Some(format!("{ring:?}"))));
        if pair.q == 1 && pair.p >= 5 {
            let level = (pair.p - 3) / 2;
            let mut bad = Vec::new();
            for (a, wa) in t.weights.iter().enumerate() {
                for (b, wb) in t.weights.iter().enumerate() {
                    let expect = integrable_fuse(level, (wa.m - 1) / 2, (wb.m - 1) / 2)?;
                    let got: Vec<i64> = t.get(a, b).summands.iter().map(|w| (w.m - 1) / 2).collect();
                    if got != expect {
                        bad.push(format!("{wa}x{wb}: {got:?} vs {expect:?}"));
                    }
                }
            }
            lines.push(Line::asserted(format!("{pair} integrable rule"), bad.is_empty(), Some(bad.join("; "))));
        }
    }
    Ok(SuiteReport::new(Suite::Oracle, json!({"max_pq": max_pq}), lines))
}

pub fn cmd_verify(suite: Suite, max_pq: Option<i64>, depth: u32) -> Result<Outcome, CliError> {
    if max_pq.is_some_and(|b| b < 1) {
        return Err(CliError::Usage("--max-pq must be positive".into()));
    }
    let selected = match suite {
        Suite::All => vec![Suite::Pq, Suite::Factorization, Suite::Projection, Suite::Singular, Suite::Oracle],
        s => vec![s],
    };
    let mut reports = Vec::new();
    for s in selected {
        let bound = max_pq.unwrap_or_else(|| s.default_max_pq());
        reports.push(match s {
            Suite::Pq => suite_pq(),
            Suite::Factorization => suite_factorization(),
            Suite::Projection => suite_projection(bound)?,
            Suite::Singular => suite_singular(bound, depth)?,
            Suite::Oracle => suite_oracle(bound)?,
            Suite::All => unreachable!("expanded above"),
        });
    }
    let mut table = Table::new(&["suite", "instance", "status", "detail"]);
    for r in &reports {
        for l in &r.checks {
            table.push(vec![
                r.suite.into(),
                l.instance.clone().into(),
                l.status.into(),
                Cell::Text(l.detail.clone().unwrap_or_default()),
            ]);
        }
    }
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let (status, exit) = if failed == 0 { (Status::Pass, EXIT_OK) } else { (Status::Fail, EXIT_FAILURE) };
    let mut command = format!("verify --suite {}", suite.name());
    if let Some(b) = max_pq {
        command += &format!(" --max-pq {b}");
    }
    command += &format!(" --depth {depth}");
    let totals = json!({
        "passed": reports.iter().map(|r| r.passed).sum::<usize>(),
        "failed": failed,
        "skipped": reports.iter().map(|r| r.skipped).sum::<usize>(),
        "report_only": reports.iter().map(|r| r.report_only).sum::<usize>(),
    });
    let payload = json!({ "totals": totals, "suites": reports });
    Ok(Outcome { doc: ReportDocument::unpaired(command, payload, status, table), exit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_5_1() {
        let o = cmd_weights(5, 1).unwrap();
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.doc.payload["weights"], json!([{"m":1,"s":0,"j":"0"},{"m":3,"s":0,"j":"1"}]));
        assert_eq!(o.doc.level.as_ref().unwrap().to_string(), "1");
    }

    #[test]
    fn invalid_pair_exits_2() {
        let e = cmd_weights(2, 2).err().unwrap();
        assert_eq!(e.exit_code(), crate::error::EXIT_INVALID);
        assert!(e.to_string().contains("gcd condition failed"));
    }

    #[test]
    fn worked_fusions() {
        let o = cmd_fuse(5, 1, 3, 0, 3, 0).unwrap();
        assert_eq!(o.doc.payload["agree"], true);
        assert_eq!(o.doc.payload["summands"].as_array().unwrap().len(), 2);
        let o = cmd_fuse(5, 3, 1, 2, 1, 2).unwrap();
        assert_eq!(o.doc.payload["summands"], json!([]));
        assert_eq!(o.exit, EXIT_OK);
    }

    #[test]
    fn vacuum_table() {
        let o = cmd_table(3, 1).unwrap();
        assert_eq!(o.doc.table.rows.len(), 1);
        assert_eq!(o.exit, EXIT_OK);
    }

    #[test]
    fn small_verify_runs() {
        let o = cmd_verify(Suite::Factorization, None, 6).unwrap();
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.doc.payload["totals"]["passed"], 8);
    }
}
