//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the test log.

use std::process::ExitCode;
use std::time::Instant;

use fock_core::abacus::Direction;
use fock_core::crystal::{e_tilde, f_tilde};
use fock_core::slinf::is_slinf_highest_weight;
use fock_core::{
    a_sigma, classify_unitary_fd, crystal_position, is_finite_dimensional, is_unitary, run_sweep,
    support, upsilon, Abacus, Bipartition, CaseLabel, ChargedBipartition, Check, Component,
    FockParam, Partition, Sign, SweepSpec, VerifyReport,
};

fn param(e: i64, s: i64) -> FockParam {
    FockParam::new(e, s).unwrap()
}

fn bp(first: &[usize], second: &[usize]) -> Bipartition {
    Bipartition::from_parts(first, second)
}

fn fock(first: &[usize], second: &[usize], e: i64, s: i64) -> ChargedBipartition {
    ChargedBipartition::new(bp(first, second), param(e, s))
}

fn row(m: usize) -> Partition {
    Partition::new(vec![m]).unwrap()
}

fn rep(part: usize, times: usize) -> Vec<usize> {
    vec![part; times]
}

/// The worked examples, each as (name, holds).
fn worked_examples() -> Vec<(&'static str, bool)> {
    let mut out: Vec<(&'static str, bool)> = Vec::new();

    // Good boxes on a vertex with three removable boxes of distinct residues.
    let nu = fock(&[5, 3], &[2], 6, 1);
    out.push(("e_4 of (5,3)|(2)", e_tilde(&nu, 4) == Some(fock(&[4, 3], &[2], 6, 1))));
    out.push(("e_1 of (5,3)|(2)", e_tilde(&nu, 1) == Some(fock(&[5, 2], &[2], 6, 1))));
    out.push(("e_2 of (5,3)|(2) cancels", e_tilde(&nu, 2).is_none()));
    out.push((
        "e_0, e_3, e_5 of (5,3)|(2) vanish",
        [0, 3, 5].iter().all(|&i| e_tilde(&nu, i).is_none()),
    ));
    out.push((
        "e_4 of (5,3)|(2) in label coordinates",
        e_tilde(&nu, 4).map(|x| x.label()) == Some(bp(&[2, 2, 2, 1], &[1, 1])),
    ));
    out.push((
        "e_1 of (5,3)|(2) in label coordinates",
        e_tilde(&nu, 1).map(|x| x.label()) == Some(bp(&[2, 2, 1, 1, 1], &[1, 1])),
    ));
    let nu = fock(&[2, 2, 1, 1], &[2, 1, 1], 3, 1);
    out.push(("e_0 of (2,2,1,1)|(2,1,1)", e_tilde(&nu, 0) == Some(fock(&[2, 2, 1], &[2, 1, 1], 3, 1))));
    out.push(("e_1, e_2 of (2,2,1,1)|(2,1,1) vanish", e_tilde(&nu, 1).is_none() && e_tilde(&nu, 2).is_none()));

    // Beta numbers.
    let lam = bp(&[5, 4, 2, 2], &[4, 3, 2, 2]);
    let nu = ChargedBipartition::from_label(&lam, param(5, 3));
    let a = Abacus::from_charged(&nu);
    out.push(("transpose of (5,4,2,2)|(4,3,2,2)", nu.nu() == &bp(&[4, 4, 2, 2, 1], &[4, 4, 2, 1])));
    out.push((
        "beads of the first row",
        a.row(Component::First).sporadic() == [4, 3, 0, -1, -3] && a.row(Component::First).tail() == -5,
    ));
    out.push((
        "beads of the second row",
        a.row(Component::Second).sporadic() == [7, 6, 3, 1] && a.row(Component::Second).tail() == -1,
    ));
    out.push(("abacus back to the vertex", a.to_charged() == nu));

    // Total periodicity of the rectangle abacus, and its first two periods.
    let rect = ChargedBipartition::from_label(&bp(&rep(6, 4), &[]), param(5, 3));
    let a = Abacus::from_charged(&rect);
    out.push(("(6^4) abacus is totally 5-periodic", a.is_totally_e_periodic()));
    let periods = a.periods(2).unwrap_or_default();
    out.push((
        "first two 5-periods of (6^4)",
        periods.len() == 2
            && periods[0].beads == [(Component::First, 4), (Component::First, 3), (Component::First, 2), (Component::First, 1), (Component::First, 0)]
            && periods[1].beads == [(Component::Second, 3), (Component::Second, 2), (Component::Second, 1), (Component::Second, 0), (Component::First, -1)],
    ));
    out.push(("right shift of the first period of (4^6)", a.shift_period(1, Direction::Right).is_some()));

    // A single row at c = 1/3, d = -1/6: the left shift is not an edge.
    let col = fock(&[1, 1, 1], &[], 3, 1);
    let p = param(3, 1);
    out.push(("(c, d) = (1/3, -1/6) is e = 3, s = 1", p.c() == num_rational::Rational64::new(1, 3) && p.d() == num_rational::Rational64::new(-1, 6)));
    out.push(("left shift of Per^1 of (1,1,1) is invalid", Abacus::from_charged(&col).shift_period(1, Direction::Left).is_none()));
    out.push(("(1,1,1) is a level-rank source", is_slinf_highest_weight(&col)));
    out.push(("L((3),-) is finite-dimensional at e=3, s=1", is_finite_dimensional(&bp(&[3], &[]), p)));

    // Left shift of Per^3.
    let nu = fock(&[3, 3, 3, 2], &[3, 3, 3, 2, 2], 3, 2);
    out.push(("upsilon_3^- of (3,3,3,2)|(3,3,3,2,2)", upsilon(&nu, 3, Sign::Minus) == Some(fock(&[3, 3, 3, 1], &[3, 3, 3, 1, 1], 3, 2))));

    // Level-rank operators from the empty bipartition and from rectangles.
    let empty = fock(&[], &[], 4, 1);
    let two = a_sigma(&row(2), &empty).ok();
    out.push(("a_(2) of the empty bipartition at e=4, s=1", two == Some(fock(&[2, 2, 2], &[2], 4, 1))));
    let once = two.as_ref().and_then(|x| upsilon(x, 1, Sign::Minus));
    let twice = once.as_ref().and_then(|x| upsilon(x, 1, Sign::Minus));
    out.push(("two left shifts back to the empty bipartition", once == Some(fock(&[1, 1, 1], &[1], 4, 1)) && twice == Some(empty)));
    let r46 = fock(&rep(4, 6), &[], 5, 3);
    out.push(("a_(3) of (4^6) at e=5, s=3", a_sigma(&row(3), &r46).ok() == Some(fock(&[7, 7, 7, 7, 7, 4], &[], 5, 3))));
    let mut cur = Some(fock(&[6, 6, 6], &[], 3, 2));
    let mut steps = 0;
    while let Some(next) = cur.as_ref().and_then(|x| upsilon(x, 1, Sign::Minus)) {
        cur = Some(next);
        steps += 1;
    }
    out.push(("(upsilon_1^-)^5 of (6,6,6) at e=3, s=2 vanishes", steps == 4));

    // Positions.
    let pos = crystal_position(&r46).ok();
    out.push(("(4^6) is a source of both crystals", pos.as_ref().is_some_and(|p| p.sle_depth() == 0 && p.sigma.is_empty())));
    let lam = bp(&[6, 6, 6, 6, 1, 1], &[]);
    let nu = ChargedBipartition::from_label(&lam, param(5, 3));
    let pos = crystal_position(&nu).ok();
    out.push((
        "(6^4,1^2) is two f-steps above (4^6)",
        pos.as_ref().is_some_and(|p| p.sle_depth() == 2 && p.sigma.is_empty() && p.source == r46),
    ));
    out.push((
        "those steps are f_4 then f_0",
        f_tilde(&r46, 4).and_then(|x| f_tilde(&x, 0)).as_ref() == Some(&nu),
    ));
    let lam = bp(&rep(4, 14), &[1, 1]);
    let pos = crystal_position(&ChargedBipartition::from_label(&lam, param(5, 13))).ok();
    out.push((
        "((4^14),(1^2)) is a_(2) of (12^4) at e=5, s=13",
        pos.as_ref().is_some_and(|p| p.sle_depth() == 0 && p.sigma == row(2) && p.source == fock(&rep(12, 4), &[], 5, 13)),
    ));

    // Unitarity, finite-dimensionality and supports.
    let p53 = param(5, 3);
    let v = is_unitary(&bp(&[3], &[]), p53);
    out.push(("((3),-) unitary and fd at e=5, s=3", v.unitary && is_finite_dimensional(&bp(&[3], &[]), p53) && classify_unitary_fd(&bp(&[3], &[]), p53)));
    let v = is_unitary(&bp(&[3, 3], &[1]), p53);
    out.push(("((3,3),(1)) unitary by case (b)", v.unitary && v.cases.contains(&CaseLabel::B85)));
    let grown = [3, 4, 0, 1].iter().rev().try_fold(ChargedBipartition::from_label(&bp(&[3], &[]), p53), |x, &i| f_tilde(&x, i));
    out.push(("f_3 f_4 f_0 f_1 of ((3),-)^t is ((2^3),(1))", grown == Some(fock(&[2, 2, 2], &[1], 5, 3))));
    let p76 = param(7, 6);
    out.push(("((3^6,1),-) unitary at e=7, s=6", is_unitary(&bp(&[3, 3, 3, 3, 3, 3, 1], &[]), p76).unitary));
    out.push((
        "rectangles with q - r = 1 are unitary and fd at e=7, s=6",
        (1..=6).all(|r| {
            let lam = bp(&rep(r + 1, r), &[]);
            is_unitary(&lam, p76).unitary && is_finite_dimensional(&lam, p76)
        }),
    ));
    let v = is_unitary(&bp(&[6, 6, 6, 6, 3, 3, 3, 2, 1], &[]), p53);
    out.push(("((6^4,3^3,2,1),-) unitary by case (d)", v.unitary && v.cases.contains(&CaseLabel::D84)));
    out.push(("((6^4),-) is fd at e=5, s=3", is_finite_dimensional(&bp(&rep(6, 4), &[]), p53)));
    let d = support(&bp(&rep(4, 14), &[1, 1]), param(5, 13)).ok();
    out.push((
        "support of ((4^14),(1^2)) is B_48 x S_5^2",
        d.as_ref().is_some_and(|d| (d.n_cuspidal, d.m, d.p) == (48, 2, 0) && d.position_cases == [4]),
    ));
    let d = support(&bp(&[6, 6, 6, 6, 1, 1], &[]), p53).ok();
    out.push((
        "support of ((6^4,1^2),-) is B_24 x S_1^2",
        d.as_ref().is_some_and(|d| (d.n_cuspidal, d.m, d.p) == (24, 0, 2) && d.position_cases == [3]),
    ));
    let d = support(&bp(&[6, 6, 6, 6, 5, 5, 5], &[]), p53).ok();
    out.push((
        "support of ((6^4,5^3),-) is B_24 x S_5^3",
        d.as_ref().is_some_and(|d| (d.n_cuspidal, d.m, d.p) == (24, 3, 0)),
    ));
    let d = support(&bp(&[3, 3, 3, 3, 3, 3, 1], &[]), p76).ok();
    out.push((
        "support of ((3^6,1),-) at e=7, s=6 is B_6 x S_1^13",
        d.as_ref().is_some_and(|d| (d.n_cuspidal, d.m, d.p) == (6, 0, 13)),
    ));
    out
}

struct Line {
    passed: bool,
    text: String,
}

fn line(n: u8, title: &str, passed: bool, detail: String, started: Instant) -> Line {
    let status = if passed { "PASS" } else { "FAIL" };
    let secs = started.elapsed().as_secs_f64();
    let mut text = format!("criterion {n}: {status}  {title} ({secs:.1}s)");
    if !detail.is_empty() {
        text.push_str("\n    ");
        text.push_str(&detail);
    }
    Line { passed, text }
}

fn sweep_line(n: u8, title: &str, report: &VerifyReport, checks: &[Check], started: Instant) -> Line {
    let mut failures = Vec::new();
    for &c in checks {
        match report.check(c) {
            Some(r) if r.passed => {}
            Some(r) => failures.push(format!("{}: {}", c.name(), r.counterexample.clone().unwrap_or_default())),
            None => failures.push(format!("{}: not run", c.name())),
        }
    }
    let instances: u64 = checks.iter().filter_map(|&c| report.check(c)).map(|r| r.instances).sum();
    let detail = if failures.is_empty() {
        format!("{instances} assertions over {} vertices", report.total_vertices)
    } else {
        failures.join("; ")
    };
    line(n, title, failures.is_empty(), detail, started)
}

fn main() -> ExitCode {
    let mut lines = Vec::new();

    let t = Instant::now();
    let examples = worked_examples();
    let failed: Vec<&str> = examples.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    let detail = if failed.is_empty() {
        format!("{} worked examples", examples.len())
    } else {
        format!("failed: {}", failed.join("; "))
    };
    lines.push(line(1, "worked examples", failed.is_empty(), detail, t));

    let t = Instant::now();
    let desk = run_sweep(&SweepSpec::desk()).expect("desk grid is within caps");
    lines.push(sweep_line(2, "unitary and fd exactly for cuspidal rectangles", &desk, &[Check::RectangleClassification], t));
    lines.push(sweep_line(3, "lowering operators preserve unitarity", &desk, &[Check::RemovalClosure], t));
    lines.push(sweep_line(4, "positions and support list of unitary modules", &desk, &[Check::UnitaryPositions, Check::SupportList], t));

    let t = Instant::now();
    let crystal = SweepSpec::new(vec![2, 3, 4], (-1..=4).collect(), 8, &Check::CRYSTAL);
    let report = run_sweep(&crystal).expect("crystal grid is within caps");
    lines.push(sweep_line(5, "crystal axioms", &report, &Check::CRYSTAL, t));

    let t = Instant::now();
    let mut rows = SweepSpec::new((2..=6).collect(), (-3..=9).collect(), 0, &[Check::RowClosedForm]);
    rows.m_max = 5;
    let report = run_sweep(&rows).expect("closed-form grid is within caps");
    lines.push(sweep_line(6, "closed form of a_(m) on the empty bipartition", &report, &[Check::RowClosedForm], t));

    let t = Instant::now();
    let detail = if desk.coverage_ok() {
        format!("{} case labels, {} positions", desk.coverage.case_labels.len(), desk.coverage.positions.len())
    } else {
        format!("never fired: {}", desk.coverage.missing.join(", "))
    };
    lines.push(line(7, "every case label and position fires", desk.coverage_ok(), detail, t));

    let mut all = true;
    for l in &lines {
        println!("{}", l.text);
        all &= l.passed;
    }
    println!("acceptance: {}", if all { "PASS" } else { "FAIL" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
