//! Exhaustive sweeps re-deriving the classification results over all small
//! bipartitions and a grid of parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::Abacus;
use crate::crystal::{e_tilde, f_tilde, good_removable_ibox, is_highest_weight, is_source_by_abacus};
use crate::error::{Error, Result};
use crate::fock::{ChargedBipartition, FockParam};
use crate::partition::{Bipartition, Component, Partition};
use crate::position::{crystal_position, CrystalPosition};
use crate::slinf::{a_sigma, shift_range, upsilon, Sign};
use crate::support::{check_unitary_support, expected_support_pairs, support_from_position};
use crate::unitarity::{
    classify_unitary_fd, is_finite_dimensional, is_type_a_unitary, is_unitary, split_top_rectangle,
    CaseLabel, UnitarityVerdict,
};

/// Largest bipartition size a sweep accepts.
pub const MAX_N: usize = 14;
/// Largest `e` a sweep accepts.
pub const MAX_E: i64 = 16;
/// Largest `m` for the single-row closed-form check.
pub const MAX_M: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Unitary and finite-dimensional exactly for the cuspidal rectangles.
    RectangleClassification,
    /// Lowering operators of both crystals preserve unitarity.
    RemovalClosure,
    /// Unitary labels sit in one of the six allowed positions.
    UnitaryPositions,
    /// Realized `(n', m)` pairs match the predicted list.
    SupportList,
    /// `ẽ_i` and `Υ_k^-` commute where both composites are defined.
    Commutation,
    /// Affine sources are exactly the totally periodic abaci.
    SourceEquivalence,
    /// Abacus and crystal-position round trips.
    RoundTrip,
    /// Closed form of `ã_(m)` applied to the empty bipartition.
    RowClosedForm,
    /// Removable boxes paired with a matching addable box are never good.
    NonGoodPairs,
    /// Rectangle-over-type-A decomposition of one-component labels.
    Stacking,
    /// `ẽ_i` and `f̃_i` are mutually inverse.
    EfInverse,
    /// `Υ_k^-` removes `e` boxes forming a vertical strip in each component.
    VerticalStrip,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::RectangleClassification,
        Check::RemovalClosure,
        Check::UnitaryPositions,
        Check::SupportList,
        Check::Commutation,
        Check::SourceEquivalence,
        Check::RoundTrip,
        Check::RowClosedForm,
        Check::NonGoodPairs,
        Check::Stacking,
        Check::EfInverse,
        Check::VerticalStrip,
    ];

    /// Checks that exercise the unitarity test.
    pub const UNITARITY: [Check; 5] = [
        Check::RectangleClassification,
        Check::RemovalClosure,
        Check::UnitaryPositions,
        Check::SupportList,
        Check::Stacking,
    ];

    /// Checks of the crystal structure alone.
    pub const CRYSTAL: [Check; 6] = [
        Check::EfInverse,
        Check::NonGoodPairs,
        Check::SourceEquivalence,
        Check::Commutation,
        Check::RoundTrip,
        Check::VerticalStrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::RectangleClassification => "thm1_1",
            Check::RemovalClosure => "prop4_1",
            Check::UnitaryPositions => "cor4_2",
            Check::SupportList => "cor1_3",
            Check::Commutation => "commutation",
            Check::SourceEquivalence => "source_equiv",
            Check::RoundTrip => "roundtrip",
            Check::RowClosedForm => "a_m_closed_form",
            Check::NonGoodPairs => "lemma2_3",
            Check::Stacking => "stacking",
            Check::EfInverse => "ef_inverse",
            Check::VerticalStrip => "vertical_strip",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub e_values: Vec<i64>,
    pub s_values: Vec<i64>,
    pub n_max: usize,
    /// Largest `m` for the single-row closed-form check.
    pub m_max: usize,
    pub checks: BTreeSet<Check>,
    /// Fail unless every case label and every position fires at least once.
    pub require_coverage: bool,
}

impl SweepSpec {
    /// The default grid: `e` in 2..=5, `s` in -2..=7, sizes up to 9, every
    /// check, with case coverage required.
    pub fn desk() -> Self {
        SweepSpec {
            e_values: (2..=5).collect(),
            s_values: (-2..=7).collect(),
            n_max: 9,
            m_max: 5,
            checks: Check::ALL.into_iter().collect(),
            require_coverage: true,
        }
    }

    pub fn new(e_values: Vec<i64>, s_values: Vec<i64>, n_max: usize, checks: &[Check]) -> Self {
        SweepSpec {
            e_values,
            s_values,
            n_max,
            m_max: 5,
            checks: checks.iter().copied().collect(),
            require_coverage: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_max > MAX_N {
            return Err(Error::CapExceeded { what: "n_max", value: self.n_max, limit: MAX_N });
        }
        if self.m_max > MAX_M {
            return Err(Error::CapExceeded { what: "m_max", value: self.m_max, limit: MAX_M });
        }
        for &e in &self.e_values {
            if e < 2 {
                return Err(Error::InvalidE(e));
            }
            if e > MAX_E {
                return Err(Error::CapExceeded { what: "e", value: e as usize, limit: MAX_E as usize });
            }
        }
        Ok(())
    }

    fn params(&self) -> Vec<FockParam> {
        let mut out = Vec::new();
        for &e in &self.e_values {
            for &s in &self.s_values {
                out.push(FockParam::new(e, s).expect("validated"));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub passed: bool,
    /// Number of individual assertions evaluated.
    pub instances: u64,
    pub counterexample: Option<String>,
    /// Observations that are recorded but not asserted.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Coverage {
    pub case_labels: BTreeMap<String, u64>,
    pub positions: BTreeMap<u8, u64>,
    pub missing: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub spec: SweepSpec,
    pub total_vertices: u64,
    pub checks: Vec<CheckReport>,
    pub coverage: Coverage,
    pub coverage_required: bool,
    pub passed: bool,
}

impl VerifyReport {
    pub fn check(&self, c: Check) -> Option<&CheckReport> {
        self.checks.iter().find(|r| r.check == c)
    }

    pub fn coverage_ok(&self) -> bool {
        self.coverage.missing.is_empty()
    }

    /// Human-readable summary. Wall times are included only on request so
    /// that reports stay byte-identical across runs.
    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep: e in {:?}, s in {:?}, n <= {}, m <= {}; {} vertices",
            self.spec.e_values, self.spec.s_values, self.spec.n_max, self.spec.m_max, self.total_vertices
        );
        for r in &self.checks {
            let _ = write!(
                out,
                "{:<16} {}  instances={}",
                r.check.name(),
                if r.passed { "PASS" } else { "FAIL" },
                r.instances
            );
            if timings {
                let _ = write!(out, "  time={:.3}s", r.wall_time.as_secs_f64());
            }
            out.push('\n');
            if let Some(cx) = &r.counterexample {
                let _ = writeln!(out, "    counterexample: {cx}");
            }
            for note in &r.notes {
                let _ = writeln!(out, "    note: {note}");
            }
        }
        let labels: Vec<String> = self
            .coverage
            .case_labels
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let positions: Vec<String> = self
            .coverage
            .positions
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "case labels: {}", labels.join(" "));
        let _ = writeln!(out, "positions: {}", positions.join(" "));
        if self.coverage_required {
            let _ = writeln!(
                out,
                "coverage         {}{}",
                if self.coverage_ok() { "PASS" } else { "FAIL" },
                if self.coverage.missing.is_empty() {
                    String::new()
                } else {
                    format!("  missing: {}", self.coverage.missing.join(", "))
                }
            );
        }
        let _ = writeln!(out, "overall          {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

/// Everything computed once per vertex.
struct Vertex {
    lam: Bipartition,
    nu: ChargedBipartition,
    verdict: UnitarityVerdict,
    position: std::result::Result<CrystalPosition, String>,
}

impl Vertex {
    fn new(lam: Bipartition, param: FockParam) -> Self {
        let nu = ChargedBipartition::from_label(&lam, param);
        let verdict = is_unitary(&lam, param);
        let position = crystal_position(&nu).map_err(|e| e.to_string());
        Vertex { lam, nu, verdict, position }
    }

    fn tag(&self) -> String {
        let p = self.nu.param();
        format!("e={} s={} bp={}", p.e(), p.s(), self.lam)
    }
}

#[derive(Default)]
struct Outcome {
    instances: u64,
    failure: Option<String>,
    one_sided: u64,
}

impl Outcome {
    fn assert(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.instances += other.instances;
        self.one_sided += other.one_sided;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
        self
    }
}

fn vertex_check(check: Check, v: &Vertex) -> Outcome {
    let mut out = Outcome::default();
    let nu = &v.nu;
    let param = nu.param();
    let e = param.e();
    match check {
        Check::RectangleClassification => {
            let fd = is_finite_dimensional(&v.lam, param);
            if let Ok(pos) = &v.position {
                let by_position = pos.sle_depth() == 0 && pos.sigma.is_empty();
                out.assert(by_position == fd, || {
                    format!("{}: finite-dimensionality tests disagree", v.tag())
                });
            }
            let closed = classify_unitary_fd(&v.lam, param);
            out.assert(closed == (v.verdict.unitary && fd), || {
                format!(
                    "{}: closed form {closed}, unitary {} and fd {fd}",
                    v.tag(),
                    v.verdict.unitary
                )
            });
        }
        Check::RemovalClosure => {
            if !v.verdict.unitary {
                return out;
            }
            for i in 0..e {
                if let Some(x) = e_tilde(nu, i) {
                    let ok = is_unitary(&x.label(), param).unitary;
                    out.assert(ok, || format!("{}: e_{i} gives non-unitary {}", v.tag(), x.label()));
                }
            }
            for k in 1..=shift_range(nu) {
                if let Some(x) = upsilon(nu, k, Sign::Minus) {
                    let ok = is_unitary(&x.label(), param).unitary;
                    out.assert(ok, || {
                        format!("{}: upsilon_{k}^- gives non-unitary {}", v.tag(), x.label())
                    });
                }
            }
        }
        Check::UnitaryPositions => {
            if !v.verdict.unitary {
                return out;
            }
            match &v.position {
                Ok(pos) => {
                    let desc = support_from_position(pos);
                    let res = check_unitary_support(&v.lam, &desc);
                    out.assert(res.is_ok(), || format!("{}: {}", v.tag(), res.unwrap_err()));
                    let both_zero = desc.m == 0 && desc.p == 0;
                    let expected_len = if both_zero { 2 } else { 1 };
                    out.assert(desc.position_cases.len() == expected_len, || {
                        format!("{}: positions {:?}", v.tag(), desc.position_cases)
                    });
                }
                Err(err) => out.assert(false, || format!("{}: {err}", v.tag())),
            }
        }
        Check::Stacking => {
            let lam = v.lam.first();
            if lam.is_empty() || !v.lam.second().is_empty() {
                return out;
            }
            let (r, q, tau) = split_top_rectangle(lam);
            let cuspidal_top = r as i64 - q as i64 == param.s() - e;
            let type_a = is_type_a_unitary(&tau, e);
            let fires = v.verdict.cases.contains(&CaseLabel::D84);
            out.assert(fires == (cuspidal_top && type_a), || {
                format!("{}: condition (d) is {fires}, top rectangle cuspidal {cuspidal_top}, type A {type_a}", v.tag())
            });
            if cuspidal_top {
                out.assert(v.verdict.unitary == type_a, || {
                    format!("{}: unitary {} but type A {type_a}", v.tag(), v.verdict.unitary)
                });
            }
        }
        Check::Commutation => {
            let range = shift_range(nu) + 1;
            for i in 0..e {
                let down_i = e_tilde(nu, i);
                for k in 1..=range {
                    let down_k = upsilon(nu, k, Sign::Minus);
                    let lhs = down_k.as_ref().and_then(|x| e_tilde(x, i));
                    let rhs = down_i.as_ref().and_then(|x| upsilon(x, k, Sign::Minus));
                    match (&lhs, &rhs) {
                        (Some(a), Some(b)) => out.assert(a == b, || {
                            format!("{}: e_{i} and upsilon_{k}^- give {a} and {b}", v.tag())
                        }),
                        (None, None) => {}
                        _ => out.one_sided += 1,
                    }
                }
            }
        }
        Check::SourceEquivalence => {
            let a = is_highest_weight(nu);
            let b = is_source_by_abacus(nu);
            out.assert(a == b, || {
                format!("{}: killed by all e_i is {a}, totally periodic is {b}", v.tag())
            });
        }
        Check::RoundTrip => {
            let back = Abacus::from_charged(nu).to_charged();
            out.assert(&back == nu, || format!("{}: abacus gives back {back}", v.tag()));
            out.assert(v.position.is_ok(), || {
                format!("{}: {}", v.tag(), v.position.as_ref().unwrap_err())
            });
        }
        Check::NonGoodPairs => {
            let rem = nu.removable_boxes();
            let add = nu.addable_boxes();
            for b in &rem {
                let partner = match b.cell.component {
                    Component::First => add.iter().any(|a| {
                        a.cell.component == Component::Second
                            && a.charged_content == b.charged_content + e
                    }),
                    Component::Second => add.iter().any(|a| {
                        a.cell.component == Component::First && a.charged_content == b.charged_content
                    }),
                };
                if partner {
                    let good = good_removable_ibox(nu, b.residue);
                    out.assert(good.map(|g| g.cell) != Some(b.cell), || {
                        format!("{}: paired box {:?} is good", v.tag(), b.cell)
                    });
                }
            }
        }
        Check::EfInverse => {
            for i in 0..e {
                if let Some(x) = e_tilde(nu, i) {
                    out.assert(f_tilde(&x, i).as_ref() == Some(nu), || {
                        format!("{}: f_{i} does not undo e_{i}", v.tag())
                    });
                }
                if let Some(x) = f_tilde(nu, i) {
                    out.assert(e_tilde(&x, i).as_ref() == Some(nu), || {
                        format!("{}: e_{i} does not undo f_{i}", v.tag())
                    });
                }
            }
        }
        Check::VerticalStrip => {
            for k in 1..=shift_range(nu) + 1 {
                if let Some(x) = upsilon(nu, k, Sign::Minus) {
                    let ok = is_vertical_strip(nu.nu(), x.nu(), e as usize);
                    out.assert(ok, || format!("{}: upsilon_{k}^- gives {x}", v.tag()));
                    out.assert(upsilon(&x, k, Sign::Plus).as_ref() == Some(nu), || {
                        format!("{}: upsilon_{k}^+ does not undo upsilon_{k}^-", v.tag())
                    });
                }
            }
        }
        Check::SupportList | Check::RowClosedForm => {}
    }
    out
}

/// `small ⊆ big`, `|big| − |small| = e`, and each component of the
/// difference has at most one box per row.
fn is_vertical_strip(big: &Bipartition, small: &Bipartition, e: usize) -> bool {
    if big.size() != small.size() + e {
        return false;
    }
    Component::BOTH.into_iter().all(|c| {
        let (b, s) = (big.comp(c), small.comp(c));
        (1..=b.len().max(s.len())).all(|r| {
            let (lb, ls) = (b.row_len(r), s.row_len(r));
            lb >= ls && lb - ls <= 1
        })
    })
}

/// The closed form of `ã_(m)(∅, ∅)` in Fock coordinates.
pub fn row_closed_form(param: FockParam, m: usize) -> Bipartition {
    let (e, s) = (param.e(), param.s());
    let rect = |rows: i64| Partition::rectangle(rows as usize, m);
    if s <= 0 {
        Bipartition::new(rect(e), Partition::empty())
    } else if s >= e {
        Bipartition::new(Partition::empty(), rect(e))
    } else {
        Bipartition::new(rect(e - s), rect(s))
    }
}

fn row_closed_form_check(params: &[FockParam], m_max: usize) -> Outcome {
    let mut out = Outcome::default();
    for &param in params {
        for m in 1..=m_max {
            let got = a_sigma(&Partition::new(vec![m]).expect("m >= 1"), &ChargedBipartition::empty(param));
            let want = row_closed_form(param, m);
            let ok = matches!(&got, Ok(x) if x.nu() == &want);
            out.assert(ok, || {
                format!("e={} s={} m={m}: got {got:?}, closed form {want}", param.e(), param.s())
            });
        }
    }
    out
}

/// Realized `(n', m)` pairs of unitary labels, compared per `(e, s, n)`.
fn support_list_check(spec: &SweepSpec, per_param: &[(FockParam, Vec<Vertex>)]) -> Outcome {
    let mut out = Outcome::default();
    for (param, vertices) in per_param {
        let mut realized: BTreeMap<usize, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for v in vertices.iter().filter(|v| v.verdict.unitary) {
            if let Ok(pos) = &v.position {
                realized
                    .entry(v.lam.size())
                    .or_default()
                    .insert((pos.source.size(), pos.slinf_depth()));
            }
        }
        for n in 0..=spec.n_max {
            let got = realized.remove(&n).unwrap_or_default();
            let want = expected_support_pairs(param.e(), param.s(), n);
            out.assert(got == want, || {
                format!(
                    "e={} s={} n={n}: realized {got:?}, expected {want:?}",
                    param.e(),
                    param.s()
                )
            });
        }
    }
    out
}

pub fn run_sweep(spec: &SweepSpec) -> Result<VerifyReport> {
    spec.validate()?;
    let params = spec.params();
    let labels = Bipartition::all_up_to(spec.n_max);
    let needs_vertices = spec
        .checks
        .iter()
        .any(|c| !matches!(c, Check::RowClosedForm));
    let per_param: Vec<(FockParam, Vec<Vertex>)> = if needs_vertices {
        params
            .par_iter()
            .map(|&param| {
                let vs = labels
                    .par_iter()
                    .map(|lam| Vertex::new(lam.clone(), param))
                    .collect();
                (param, vs)
            })
            .collect()
    } else {
        Vec::new()
    };
    let all: Vec<&Vertex> = per_param.iter().flat_map(|(_, vs)| vs.iter()).collect();

    let mut checks = Vec::new();
    for &check in &spec.checks {
        let start = Instant::now();
        let outcome = match check {
            Check::RowClosedForm => row_closed_form_check(&params, spec.m_max),
            Check::SupportList => support_list_check(spec, &per_param),
            _ => all
                .par_iter()
                .map(|v| vertex_check(check, v))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Outcome::default(), Outcome::merge),
        };
        let mut notes = Vec::new();
        if check == Check::Commutation {
            notes.push(format!(
                "{} pairs with exactly one composite defined (not asserted)",
                outcome.one_sided
            ));
        }
        checks.push(CheckReport {
            check,
            passed: outcome.failure.is_none(),
            instances: outcome.instances,
            counterexample: outcome.failure,
            notes,
            wall_time: start.elapsed(),
        });
    }

    let coverage = coverage(&all);
    let coverage_required = spec.require_coverage;
    let passed = checks.iter().all(|c| c.passed) && (!coverage_required || coverage.missing.is_empty());
    Ok(VerifyReport {
        spec: spec.clone(),
        total_vertices: all.len() as u64,
        checks,
        coverage,
        coverage_required,
        passed,
    })
}

fn coverage(vertices: &[&Vertex]) -> Coverage {
    let mut cov = Coverage::default();
    for label in CaseLabel::NONTRIVIAL {
        cov.case_labels.insert(label.as_str().to_string(), 0);
    }
    for p in 1..=6u8 {
        cov.positions.insert(p, 0);
    }
    for v in vertices.iter().filter(|v| v.verdict.unitary) {
        for c in &v.verdict.cases {
            *cov.case_labels.entry(c.as_str().to_string()).or_default() += 1;
        }
        if let Ok(pos) = &v.position {
            for p in support_from_position(pos).position_cases {
                *cov.positions.entry(p).or_default() += 1;
            }
        }
    }
    for label in CaseLabel::NONTRIVIAL {
        if cov.case_labels[label.as_str()] == 0 {
            cov.missing.push(label.as_str().to_string());
        }
    }
    for p in 1..=6u8 {
        if cov.positions[&p] == 0 {
            cov.missing.push(format!("position {p}"));
        }
    }
    cov
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sweep_is_vacuous() {
        let spec = SweepSpec::new(vec![3], vec![1], 0, &Check::ALL);
        let r = run_sweep(&spec).unwrap();
        assert!(r.passed, "{}", r.render_text(false));
        assert_eq!(r.total_vertices, 1);
    }

    #[test]
    fn small_sweep_passes_everything() {
        let spec = SweepSpec::new(vec![3], vec![1], 6, &Check::ALL);
        let r = run_sweep(&spec).unwrap();
        assert!(r.passed, "{}", r.render_text(false));
    }

    #[test]
    fn caps_are_enforced() {
        let spec = SweepSpec::new(vec![3], vec![1], MAX_N + 1, &Check::ALL);
        assert!(matches!(run_sweep(&spec), Err(Error::CapExceeded { .. })));
        let spec = SweepSpec::new(vec![1], vec![1], 2, &Check::ALL);
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidE(1))));
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = SweepSpec::new(vec![2, 3], vec![-1, 0, 2], 5, &Check::ALL);
        let a = run_sweep(&spec).unwrap().render_text(false);
        let b = run_sweep(&spec).unwrap().render_text(false);
        assert_eq!(a, b);
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn closed_form_shapes() {
        let p = |e, s| FockParam::new(e, s).unwrap();
        assert_eq!(row_closed_form(p(4, 1), 2), Bipartition::from_parts(&[2, 2, 2], &[2]));
        assert_eq!(row_closed_form(p(3, 0), 1), Bipartition::from_parts(&[1, 1, 1], &[]));
        assert_eq!(row_closed_form(p(2, 5), 3), Bipartition::from_parts(&[], &[3, 3]));
    }
}
