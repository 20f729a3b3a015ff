//! Two-row abaci, e-periods and period shifts.
//!
//! Row 1 (the bottom row) carries the first component and row 2 (the top
//! row) the second. Each row is an infinite set of bead positions stored as a
//! solid tail `(-∞, tail]` plus finitely many sporadic beads above it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{ChargedBipartition, FockParam};
use crate::partition::{Bipartition, Component, Partition};

/// One row of an abacus in canonical form: `tail + 1` is never a bead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbacusRow {
    tail: i64,
    sporadic: Vec<i64>,
}

impl AbacusRow {
    /// Validates canonical form: sporadic beads strictly decreasing, all
    /// above `tail + 1`.
    pub fn new(tail: i64, sporadic: Vec<i64>) -> Result<Self> {
        if sporadic.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NonCanonicalAbacus(format!(
                "sporadic beads {sporadic:?} are not strictly decreasing"
            )));
        }
        if let Some(&low) = sporadic.last() {
            if low <= tail + 1 {
                return Err(Error::NonCanonicalAbacus(format!(
                    "bead {low} is not above tail {tail} plus a gap"
                )));
            }
        }
        Ok(AbacusRow { tail, sporadic })
    }

    #[cfg(test)]
    fn ray(tail: i64) -> Self {
        AbacusRow {
            tail,
            sporadic: Vec::new(),
        }
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }

    /// Beads above the tail, largest first.
    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    pub fn has(&self, p: i64) -> bool {
        p <= self.tail || self.sporadic.contains(&p)
    }

    /// Largest bead position.
    pub fn top(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.tail)
    }

    /// The charge: number of beads above the tail plus the tail position.
    pub fn charge(&self) -> i64 {
        self.tail + self.sporadic.len() as i64
    }

    pub fn is_ray(&self) -> bool {
        self.sporadic.is_empty()
    }

    fn remove(&mut self, p: i64) {
        if p > self.tail {
            let idx = self.sporadic.iter().position(|&x| x == p).expect("no bead to remove");
            self.sporadic.remove(idx);
        } else {
            let old = self.tail;
            self.tail = p - 1;
            let pos = self.sporadic.len();
            self.sporadic.splice(pos..pos, (p + 1..=old).rev());
        }
    }

    fn insert(&mut self, p: i64) {
        debug_assert!(!self.has(p));
        let idx = self.sporadic.partition_point(|&x| x > p);
        self.sporadic.insert(idx, p);
        while self.sporadic.last() == Some(&(self.tail + 1)) {
            self.sporadic.pop();
            self.tail += 1;
        }
    }
}

/// Direction in which a period is shifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    fn step(self) -> i64 {
        match self {
            Direction::Left => -1,
            Direction::Right => 1,
        }
    }
}

/// A bead of an abacus.
pub type Bead = (Component, i64);

/// The `index`-th e-period: `e` beads at consecutive decreasing positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPeriod {
    pub index: usize,
    pub beads: Vec<Bead>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    rows: [AbacusRow; 2],
    e: i64,
}

impl Abacus {
    pub fn new(e: i64, row1: AbacusRow, row2: AbacusRow) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidE(e));
        }
        Ok(Abacus {
            rows: [row1, row2],
            e,
        })
    }

    pub fn from_charged(nu: &ChargedBipartition) -> Self {
        let param = nu.param();
        let row = |c: Component| {
            let s = param.charge(c);
            let parts = nu.nu().comp(c).parts();
            let sporadic = parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p as i64 + s - i as i64)
                .collect();
            AbacusRow {
                tail: s - parts.len() as i64,
                sporadic,
            }
        };
        Abacus {
            rows: [row(Component::First), row(Component::Second)],
            e: param.e(),
        }
    }

    /// Reads the charged bipartition back off the abacus. The charge is
    /// normalized so that row 1 has charge 0.
    pub fn to_charged(&self) -> ChargedBipartition {
        let comp = |r: &AbacusRow| {
            let c = r.charge();
            let parts = r
                .sporadic
                .iter()
                .enumerate()
                .map(|(i, &b)| (b - c + i as i64) as usize)
                .collect();
            Partition::from_padded(parts)
        };
        let param = FockParam::from_charges(self.e, self.rows[0].charge(), self.rows[1].charge())
            .expect("abacus has e >= 2");
        ChargedBipartition::new(Bipartition::new(comp(&self.rows[0]), comp(&self.rows[1])), param)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn row(&self, c: Component) -> &AbacusRow {
        &self.rows[c.index()]
    }

    pub fn has(&self, c: Component, p: i64) -> bool {
        self.rows[c.index()].has(p)
    }

    /// True when both rows are solid rays, i.e. the abacus of an empty bipartition.
    pub fn is_rays(&self) -> bool {
        self.rows.iter().all(AbacusRow::is_ray)
    }

    fn delete(&mut self, beads: &[Bead]) {
        for &(c, p) in beads {
            self.rows[c.index()].remove(p);
        }
    }

    /// The first e-period of this abacus, if any.
    fn first_period(&self) -> Option<Vec<Bead>> {
        let (r1, r2) = (&self.rows[0], &self.rows[1]);
        let top = r1.top().max(r2.top());
        let mut row = if r1.has(top) {
            Component::First
        } else {
            Component::Second
        };
        let mut beads = Vec::with_capacity(self.e as usize);
        beads.push((row, top));
        for p in (top - self.e + 1..top).rev() {
            // A top-row bead needs an empty spot below it, so a bead on the
            // bottom row at this position forces the switch.
            if row == Component::Second && r1.has(p) {
                row = Component::First;
            } else if !self.has(row, p) {
                return None;
            }
            beads.push((row, p));
        }
        Some(beads)
    }

    /// Per^1, ..., Per^k, or `None` if one of them does not exist.
    pub fn periods(&self, k: usize) -> Option<Vec<EPeriod>> {
        let mut a = self.clone();
        let mut out = Vec::with_capacity(k);
        for index in 1..=k {
            let beads = a.first_period()?;
            a.delete(&beads);
            out.push(EPeriod { index, beads });
        }
        Some(out)
    }

    pub fn kth_e_period(&self, k: usize) -> Option<EPeriod> {
        if k == 0 {
            return None;
        }
        self.periods(k).and_then(|mut v| v.pop())
    }

    /// Number of periods to delete before both rows become rays, or `None`
    /// if a period fails to exist first.
    pub fn periods_until_rays(&self) -> Option<usize> {
        let mut a = self.clone();
        // Each deletion removes a topmost bead; the bound is generous.
        let limit = 16 * (self.sporadic_span() + self.e) as usize + 64;
        for k in 0..limit {
            if a.is_rays() {
                return Some(k);
            }
            let beads = a.first_period()?;
            a.delete(&beads);
        }
        None
    }

    fn sporadic_span(&self) -> i64 {
        let lo = self.rows[0].tail.min(self.rows[1].tail);
        let hi = self.rows[0].top().max(self.rows[1].top());
        hi - lo
    }

    pub fn is_totally_e_periodic(&self) -> bool {
        self.periods_until_rays().is_some()
    }

    /// Moves every bead of Per^k one step in `dir`. Returns the new abacus
    /// only if no bead is blocked and the moved beads form Per^k again.
    pub fn shift_period(&self, k: usize, dir: Direction) -> Option<Abacus> {
        let per = self.kth_e_period(k)?;
        let mut a = self.clone();
        a.delete(&per.beads);
        let moved: Vec<Bead> = per.beads.iter().map(|&(c, p)| (c, p + dir.step())).collect();
        for &(c, p) in &moved {
            if a.has(c, p) {
                return None;
            }
            a.rows[c.index()].insert(p);
        }
        let again = a.kth_e_period(k)?;
        let want: BTreeSet<Bead> = moved.into_iter().collect();
        let got: BTreeSet<Bead> = again.beads.into_iter().collect();
        (want == got).then_some(a)
    }

    /// Two rows of `•`/`·` (row 2 on top) over a ruler of positions.
    pub fn render(&self) -> String {
        let lo = self.rows[0].tail.min(self.rows[1].tail) - 1;
        let hi = self.rows[0].top().max(self.rows[1].top()) + 1;
        let width = (lo.to_string().len()).max(hi.to_string().len()) + 1;
        let mut out = String::new();
        for c in [Component::Second, Component::First] {
            let _ = write!(out, "row {} ", c.number());
            for p in lo..=hi {
                let mark = if self.has(c, p) { '•' } else { '·' };
                let _ = write!(out, "{mark:>width$}");
            }
            out.push('\n');
        }
        out.push_str("      ");
        for p in lo..=hi {
            let _ = write!(out, "{p:>width$}");
        }
        out.push('\n');
        out
    }
}
