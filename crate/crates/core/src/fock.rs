//! Fock-space parameters, charged bipartitions and the c-function.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Bipartition, Cell, Component};

/// The pair `(e, (s1, s2))`, stored with the charge shifted to `(0, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockParam {
    e: i64,
    s: i64,
}

impl FockParam {
    pub fn new(e: i64, s: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidE(e));
        }
        Ok(FockParam { e, s })
    }

    /// Charges `(s1, s2)` and `(s1 + a, s2 + a)` give the same parameter.
    pub fn from_charges(e: i64, s1: i64, s2: i64) -> Result<Self> {
        FockParam::new(e, s2 - s1)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn s1(&self) -> i64 {
        0
    }

    pub fn s2(&self) -> i64 {
        self.s
    }

    /// Charge of the given component.
    pub fn charge(&self, c: Component) -> i64 {
        match c {
            Component::First => 0,
            Component::Second => self.s,
        }
    }

    /// Same `e`, different charge difference.
    pub fn with_s(&self, s: i64) -> FockParam {
        FockParam { e: self.e, s }
    }

    /// Cherednik parameter `c = 1/e`.
    pub fn c(&self) -> Rational64 {
        Rational64::new(1, self.e)
    }

    /// Cherednik parameter `d = -1/2 + s/e`.
    pub fn d(&self) -> Rational64 {
        Rational64::new(-1, 2) + Rational64::new(self.s, self.e)
    }

    /// Representative of `x mod e` in `0..e`.
    pub fn residue(&self, x: i64) -> i64 {
        x.rem_euclid(self.e)
    }
}

impl fmt::Display for FockParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={}, s=(0,{})", self.e, self.s)
    }
}

/// A box of a charged bipartition together with its charged content and residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChargedBox {
    pub cell: Cell,
    pub charged_content: i64,
    pub residue: i64,
}

/// A bipartition in Fock coordinates (the componentwise transpose of its
/// label) together with the charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedBipartition {
    nu: Bipartition,
    param: FockParam,
}

impl ChargedBipartition {
    /// Wraps a bipartition already in Fock coordinates.
    pub fn new(nu: Bipartition, param: FockParam) -> Self {
        ChargedBipartition { nu, param }
    }

    /// The vertex attached to the label `lam`, i.e. `|lam^t, s⟩`.
    pub fn from_label(lam: &Bipartition, param: FockParam) -> Self {
        ChargedBipartition::new(lam.transpose(), param)
    }

    pub fn empty(param: FockParam) -> Self {
        ChargedBipartition::new(Bipartition::empty(), param)
    }

    pub fn nu(&self) -> &Bipartition {
        &self.nu
    }

    pub fn param(&self) -> FockParam {
        self.param
    }

    /// The label in the original (untransposed) coordinates.
    pub fn label(&self) -> Bipartition {
        self.nu.transpose()
    }

    pub fn size(&self) -> usize {
        self.nu.size()
    }

    pub fn charged_content(&self, cell: Cell) -> i64 {
        self.param.charge(cell.component) + cell.content()
    }

    fn annotate(&self, cell: Cell) -> ChargedBox {
        let cc = self.charged_content(cell);
        ChargedBox {
            cell,
            charged_content: cc,
            residue: self.param.residue(cc),
        }
    }

    pub fn removable_boxes(&self) -> Vec<ChargedBox> {
        self.nu.removable().into_iter().map(|c| self.annotate(c)).collect()
    }

    pub fn addable_boxes(&self) -> Vec<ChargedBox> {
        self.nu.addable().into_iter().map(|c| self.annotate(c)).collect()
    }

    pub fn with_nu(&self, nu: Bipartition) -> Self {
        ChargedBipartition::new(nu, self.param)
    }

    /// True when all removable boxes have pairwise distinct residues, the
    /// hypothesis under which restriction is semisimple or zero.
    pub fn removable_residues_distinct(&self) -> bool {
        let mut seen: Vec<i64> = self.removable_boxes().iter().map(|b| b.residue).collect();
        let n = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == n
    }
}

impl fmt::Display for ChargedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nu)
    }
}

impl Serialize for ChargedBipartition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("ChargedBipartition", 3)?;
        st.serialize_field("fock", &self.nu)?;
        st.serialize_field("e", &self.param.e)?;
        st.serialize_field("s", &self.param.s)?;
        st.end()
    }
}

/// `c_λ = |λ¹| + (s/e)(|λ²| − |λ¹|) − (2/e) Σ ct(b)`, with contents taken in
/// label coordinates.
pub fn c_function(lam: &Bipartition, param: FockParam) -> Rational64 {
    let n1 = lam.first().size() as i64;
    let n2 = lam.second().size() as i64;
    let ct: i64 = lam.cells().map(|c| c.content()).sum();
    let e = param.e();
    Rational64::from_integer(n1) + Rational64::new(param.s() * (n2 - n1), e)
        - Rational64::new(2 * ct, e)
}
