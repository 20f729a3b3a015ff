//! Unitarity and finite-dimensionality tests on bipartition labels.
//!
//! Bipartitions here are labels (not transposed). The unitarity test is a
//! union of integer inequalities on contents of marked boxes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::crystal::is_highest_weight;
use crate::fock::{ChargedBipartition, FockParam};
use crate::marked::{marked_boxes, MarkedBoxes};
use crate::partition::{Bipartition, Cell, Partition};
use crate::slinf::is_slinf_highest_weight;

/// A satisfied unitarity condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// The empty bipartition (trivial representation of the trivial group).
    Trivial,
    Column,
    A84,
    B84,
    C84,
    D84,
    E84,
    A85,
    B85,
    F85,
    C85Swap,
    D85Transpose,
    E85TransposeSwap,
}

impl CaseLabel {
    /// The twelve labels arising for nonempty bipartitions.
    pub const NONTRIVIAL: [CaseLabel; 12] = [
        CaseLabel::Column,
        CaseLabel::A84,
        CaseLabel::B84,
        CaseLabel::C84,
        CaseLabel::D84,
        CaseLabel::E84,
        CaseLabel::A85,
        CaseLabel::B85,
        CaseLabel::F85,
        CaseLabel::C85Swap,
        CaseLabel::D85Transpose,
        CaseLabel::E85TransposeSwap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Trivial => "trivial",
            CaseLabel::Column => "col(1^n)",
            CaseLabel::A84 => "8.4a",
            CaseLabel::B84 => "8.4b",
            CaseLabel::C84 => "8.4c",
            CaseLabel::D84 => "8.4d",
            CaseLabel::E84 => "8.4e",
            CaseLabel::A85 => "8.5a",
            CaseLabel::B85 => "8.5b",
            CaseLabel::F85 => "8.5f",
            CaseLabel::C85Swap => "8.5c~swap",
            CaseLabel::D85Transpose => "8.5d~transpose",
            CaseLabel::E85TransposeSwap => "8.5e~transpose-swap",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// A symmetry used to derive a condition from another one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reduction {
    /// `(∅, λ)` at `s` checked as `(λ, ∅)` at `e − s`.
    ComponentSwap,
    /// `(λ², λ¹)` with `d ↦ −d`, i.e. at `e − s`.
    Swap,
    /// Componentwise transpose, with `c ↦ −c`, i.e. at `(−e, −s)`.
    Transpose,
    /// Transpose and swap, with `(c, d) ↦ (−c, −d)`, i.e. at `(−e, s − e)`.
    TransposeSwap,
}

impl Reduction {
    pub fn as_str(self) -> &'static str {
        match self {
            Reduction::ComponentSwap => "component-swap",
            Reduction::Swap => "swap",
            Reduction::Transpose => "transpose",
            Reduction::TransposeSwap => "transpose-swap",
        }
    }
}

impl Serialize for Reduction {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitarityVerdict {
    pub unitary: bool,
    /// Every satisfied condition, in a fixed order.
    pub cases: Vec<CaseLabel>,
    /// Symmetry reductions whose derived condition held.
    pub reduction_trace: Vec<Reduction>,
}

fn ct(c: Option<Cell>) -> i64 {
    c.expect("marked box present for nonempty component").content()
}

/// Conditions for `(λ, ∅)` with `λ` nonempty.
fn one_component_cases(lam: &Partition, e: i64, s: i64) -> Vec<CaseLabel> {
    let m = marked_boxes(&Bipartition::new(lam.clone(), Partition::empty()));
    let (b1, b2, b4, b5) = (ct(m.b1), ct(m.b2), ct(m.b4), ct(m.b5));
    let mut out = Vec::new();
    if lam.num_cols() == 1 {
        let n = lam.size() as i64;
        if s <= e || (e + 1 <= s && s <= n - 1 + e) {
            out.push(CaseLabel::Column);
        }
    }
    if b1 - b5 + 1 <= e && b1 <= e - s {
        out.push(CaseLabel::A84);
    }
    if b2 - b5 + 1 <= e && b1 <= e - s {
        out.push(CaseLabel::B84);
    }
    if b2 < e - s && e - s <= b1 && -b5 <= s {
        out.push(CaseLabel::C84);
    }
    if b2 == e - s && (lam.is_rectangle() || b4 - b5 + 1 <= e) {
        out.push(CaseLabel::D84);
    }
    if b2 + 1 <= e - s && e - s <= b1 - 1 && b2 - b5 + 1 <= e && e <= e - s - b5 {
        out.push(CaseLabel::E84);
    }
    out
}

struct TwoMarks {
    b1: i64,
    b2: i64,
    b4: i64,
    b1p: i64,
    b2p: i64,
    b4p: i64,
}

fn two_marks(m: &MarkedBoxes) -> TwoMarks {
    TwoMarks {
        b1: ct(m.b1),
        b2: ct(m.b2),
        b4: ct(m.b4),
        b1p: ct(m.b1p),
        b2p: ct(m.b2p),
        b4p: ct(m.b4p),
    }
}

/// The first line shared by the (b) and (f) conditions.
fn first_line_b(t: &TwoMarks, e: i64, s: i64) -> bool {
    t.b2 - t.b4p + 1 <= e - s && e - s <= t.b1 - t.b4p + 1
}

/// Condition (b) with `e` allowed to be negative. Flipping `c ↦ −c` keeps
/// `d = −1/2 + s/e` fixed only with `(e, s) ↦ (−e, −s)`.
fn case_b(lam: &Bipartition, e: i64, s: i64) -> bool {
    let t = two_marks(&marked_boxes(lam));
    first_line_b(&t, e, s) && t.b1p - t.b4 + 1 <= s
}

fn two_component_cases(lam: &Bipartition, e: i64, s: i64) -> (Vec<CaseLabel>, Vec<Reduction>) {
    let t = two_marks(&marked_boxes(lam));
    let mut cases = Vec::new();
    let mut trace = Vec::new();
    let x = t.b1 - t.b4p + 1;
    let y = t.b1p - t.b4 + 1;
    if -s <= x && x <= e - s && s - e <= y && y <= s {
        cases.push(CaseLabel::A85);
    }
    if first_line_b(&t, e, s) && y <= s {
        cases.push(CaseLabel::B85);
    }
    if first_line_b(&t, e, s) && t.b2p - t.b4 + 1 <= s && s <= y {
        cases.push(CaseLabel::F85);
    }
    if case_b(&lam.swap(), e, e - s) {
        cases.push(CaseLabel::C85Swap);
        trace.push(Reduction::Swap);
    }
    let lt = lam.transpose();
    if case_b(&lt, -e, -s) {
        cases.push(CaseLabel::D85Transpose);
        trace.push(Reduction::Transpose);
    }
    if case_b(&lt.swap(), -e, s - e) {
        cases.push(CaseLabel::E85TransposeSwap);
        trace.push(Reduction::TransposeSwap);
    }
    (cases, trace)
}

pub fn is_unitary(lam: &Bipartition, param: FockParam) -> UnitarityVerdict {
    let (e, s) = (param.e(), param.s());
    let (cases, reduction_trace) = match (lam.first().is_empty(), lam.second().is_empty()) {
        (true, true) => (vec![CaseLabel::Trivial], Vec::new()),
        (false, true) => (one_component_cases(lam.first(), e, s), Vec::new()),
        (true, false) => {
            let cases = one_component_cases(lam.second(), e, e - s);
            let trace = if cases.is_empty() {
                Vec::new()
            } else {
                vec![Reduction::ComponentSwap]
            };
            (cases, trace)
        }
        (false, false) => two_component_cases(lam, e, s),
    };
    UnitarityVerdict {
        unitary: !cases.is_empty(),
        cases,
        reduction_trace,
    }
}

/// Type A unitarity at parameter `1/e`: the bottom border of `tau`, from
/// its removable box of largest content to its box of smallest content,
/// has at most `e` boxes.
pub fn is_type_a_unitary(tau: &Partition, e: i64) -> bool {
    let Some(&(r, c)) = tau.removable().first() else {
        return true;
    };
    let top = c as i64 - r as i64;
    let bottom = 1 - tau.len() as i64;
    top - bottom + 1 <= e
}

/// True when the vertex of `lam` is a source of both crystals.
pub fn is_finite_dimensional(lam: &Bipartition, param: FockParam) -> bool {
    let nu = ChargedBipartition::from_label(lam, param);
    is_highest_weight(&nu) && is_slinf_highest_weight(&nu)
}

/// Closed form for "unitary and finite-dimensional": the empty
/// bipartition, a rectangle `(q^r)` in the first component with
/// `r − q = s − e`, or one in the second component with `r − q = −s`.
pub fn classify_unitary_fd(lam: &Bipartition, param: FockParam) -> bool {
    let (e, s) = (param.e(), param.s());
    let rect_diff = |p: &Partition| p.len() as i64 - p.num_cols() as i64;
    match (lam.first().is_empty(), lam.second().is_empty()) {
        (true, true) => true,
        (false, true) => lam.first().is_rectangle() && rect_diff(lam.first()) == s - e,
        (true, false) => lam.second().is_rectangle() && rect_diff(lam.second()) == -s,
        (false, false) => false,
    }
}

/// Splits `lam` into its top rectangle (rows of maximal length) and the
/// partition `tau` below it: returns `(rows, cols, tau)`.
pub fn split_top_rectangle(lam: &Partition) -> (usize, usize, Partition) {
    let q = lam.num_cols();
    let r = lam.parts().iter().take_while(|&&p| p == q).count();
    let tau = Partition::new(lam.parts()[r..].to_vec()).expect("suffix of a partition");
    (r, q, tau)
}
