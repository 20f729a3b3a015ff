//! Partitions, bipartitions and their Young-diagram cells.
//!
//! Rows and columns are 1-based and the content of a cell in row `x`,
//! column `y` is `y - x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// A finite weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting zero parts and increases.
    pub fn new(parts: Vec<usize>) -> Result<Self, ParseError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(ParseError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that may contain trailing zeros.
    ///
    /// Panics if the nonzero parts are not weakly decreasing.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            Partition::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `row` (1-based), zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. the first part.
    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.num_cols();
        let mut t = Vec::with_capacity(cols);
        for c in 1..=cols {
            t.push(self.0.iter().take_while(|&&p| p >= c).count());
        }
        Partition(t)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.row_len(row) >= col
    }

    /// All cells as `(row, col)`, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| (i + 1, c)))
    }

    /// Cells whose removal leaves a partition, top row first.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            let below = self.0.get(i + 1).copied().unwrap_or(0);
            if p > below {
                out.push((i + 1, p));
            }
        }
        out
    }

    /// Cells whose addition gives a partition, top row first.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let here = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
            if here < above {
                out.push((i + 1, here + 1));
            }
        }
        out
    }

    /// Removes the last cell of `row`. Returns `None` if that cell is not removable.
    pub fn remove_from_row(&self, row: usize) -> Option<Partition> {
        let len = self.row_len(row);
        if row == 0 || len == 0 || self.row_len(row + 1) >= len {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_padded(parts))
    }

    /// Adds a cell at the end of `row`. Returns `None` if it is not addable.
    pub fn add_to_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.0.len() + 1 {
            return None;
        }
        let len = self.row_len(row);
        if row > 1 && self.row_len(row - 1) <= len {
            return None;
        }
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Sum of the contents `col - row` over all cells.
    pub fn content_sum(&self) -> i64 {
        self.cells().map(|(r, c)| c as i64 - r as i64).sum()
    }

    /// All partitions of `n`, in increasing lexicographic order of parts.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Accepts `-`, `()`, `(a,b,...)` or a bare comma list; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "-" || t == "()" || t == "∅" {
            return Ok(Partition::empty());
        }
        let inner = match (t.strip_prefix('('), t.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t.as_str(),
            _ => return Err(ParseError::Syntax(s.to_string())),
        };
        if inner.is_empty() {
            return Err(ParseError::Syntax(s.to_string()));
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            if tok.starts_with('-') {
                return Err(ParseError::Negative(tok.to_string()));
            }
            let p: usize = tok
                .parse()
                .map_err(|_| ParseError::Syntax(s.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(de)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Which component of a bipartition a cell lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub fn index(self) -> usize {
        match self {
            Component::First => 0,
            Component::Second => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn other(self) -> Component {
        match self {
            Component::First => Component::Second,
            Component::Second => Component::First,
        }
    }

    pub const BOTH: [Component; 2] = [Component::First, Component::Second];
}

/// A cell of a bipartition. The content is `col - row` regardless of charge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub component: Component,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(component: Component, row: usize, col: usize) -> Self {
        Cell { component, row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// The same cell in the transposed diagram.
    pub fn transposed(&self) -> Cell {
        Cell::new(self.component, self.col, self.row)
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    comps: [Partition; 2],
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { comps: [first, second] }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// Convenience constructor from raw parts; panics on invalid input.
    pub fn from_parts(first: &[usize], second: &[usize]) -> Self {
        Bipartition::new(
            Partition::new(first.to_vec()).expect("invalid first component"),
            Partition::new(second.to_vec()).expect("invalid second component"),
        )
    }

    pub fn first(&self) -> &Partition {
        &self.comps[0]
    }

    pub fn second(&self) -> &Partition {
        &self.comps[1]
    }

    pub fn comp(&self, c: Component) -> &Partition {
        &self.comps[c.index()]
    }

    pub fn size(&self) -> usize {
        self.comps[0].size() + self.comps[1].size()
    }

    pub fn is_empty(&self) -> bool {
        self.comps[0].is_empty() && self.comps[1].is_empty()
    }

    /// Componentwise transpose.
    pub fn transpose(&self) -> Bipartition {
        Bipartition::new(self.comps[0].transpose(), self.comps[1].transpose())
    }

    /// `(λ², λ¹)`.
    pub fn swap(&self) -> Bipartition {
        Bipartition::new(self.comps[1].clone(), self.comps[0].clone())
    }

    pub fn with_comp(&self, c: Component, p: Partition) -> Bipartition {
        let mut comps = self.comps.clone();
        comps[c.index()] = p;
        Bipartition { comps }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        Component::BOTH.into_iter().flat_map(move |c| {
            self.comp(c).cells().map(move |(r, col)| Cell::new(c, r, col))
        })
    }

    pub fn removable(&self) -> Vec<Cell> {
        Component::BOTH
            .into_iter()
            .flat_map(|c| {
                self.comp(c)
                    .removable()
                    .into_iter()
                    .map(move |(r, col)| Cell::new(c, r, col))
            })
            .collect()
    }

    pub fn addable(&self) -> Vec<Cell> {
        Component::BOTH
            .into_iter()
            .flat_map(|c| {
                self.comp(c)
                    .addable()
                    .into_iter()
                    .map(move |(r, col)| Cell::new(c, r, col))
            })
            .collect()
    }

    /// Removes `cell` if it is removable.
    pub fn remove(&self, cell: Cell) -> Option<Bipartition> {
        let p = self.comp(cell.component);
        if p.row_len(cell.row) != cell.col {
            return None;
        }
        p.remove_from_row(cell.row)
            .map(|q| self.with_comp(cell.component, q))
    }

    /// Adds `cell` if it is addable.
    pub fn add(&self, cell: Cell) -> Option<Bipartition> {
        let p = self.comp(cell.component);
        if p.row_len(cell.row) + 1 != cell.col {
            return None;
        }
        p.add_to_row(cell.row).map(|q| self.with_comp(cell.component, q))
    }

    /// All bipartitions of `n`, ordered lexicographically on `(λ¹, λ²)`.
    pub fn all_of_size(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            let firsts = Partition::all_of_size(k);
            let seconds = Partition::all_of_size(n - k);
            for a in &firsts {
                for b in &seconds {
                    out.push(Bipartition::new(a.clone(), b.clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// All bipartitions of size at most `n_max`, by size then lexicographically.
    pub fn all_up_to(n_max: usize) -> Vec<Bipartition> {
        (0..=n_max).flat_map(Bipartition::all_of_size).collect()
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.comps[0], self.comps[1])
    }
}

impl FromStr for Bipartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.split('|');
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(ParseError::MissingBar(s.to_string())),
        };
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
