//! Finite pieces of the two crystal graphs, with DOT and JSON export.
//!
//! Vertices are Fock-space vertices `|ν, s⟩`. An edge `ν′ → ν` means
//! `ẽ_i(ν) = ν′` (affine crystal) or `Υ_k^-(ν) = ν′` (level-rank crystal).

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::e_tilde;
use crate::error::{Error, Result};
use crate::fock::{ChargedBipartition, FockParam};
use crate::partition::Bipartition;
use crate::slinf::{shift_range, upsilon, Sign};

/// Largest total size accepted by [`crystal_graph`].
pub const GRAPH_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrystalKind {
    /// The affine crystal (operators `ẽ_i`).
    Sle,
    /// The level-rank crystal (operators `Υ_k^-`).
    Slinf,
}

impl FromStr for CrystalKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sle" => Ok(CrystalKind::Sle),
            "slinf" => Ok(CrystalKind::Slinf),
            _ => Err(format!("unknown crystal `{s}` (expected sle or slinf)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Residue(i64),
    Shift(usize),
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Residue(i) => write!(f, "i={i}"),
            EdgeLabel::Shift(k) => write!(f, "k={k}"),
        }
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    /// Index of the smaller vertex `ν′`.
    pub from: usize,
    /// Index of `ν`.
    pub to: usize,
    pub label: EdgeLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub param: FockParam,
    pub kind: CrystalKind,
    /// All bipartitions of size at most `n_max`, by size then lexicographic.
    pub vertices: Vec<Bipartition>,
    pub edges: Vec<CrystalEdge>,
}

pub fn crystal_graph(param: FockParam, n_max: usize, kind: CrystalKind) -> Result<CrystalGraph> {
    if n_max > GRAPH_MAX_N {
        return Err(Error::CapExceeded { what: "n_max", value: n_max, limit: GRAPH_MAX_N });
    }
    let vertices = Bipartition::all_up_to(n_max);
    let index: HashMap<&Bipartition, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let per_vertex: Vec<Vec<(Bipartition, EdgeLabel)>> = vertices
        .par_iter()
        .map(|bp| {
            let nu = ChargedBipartition::new(bp.clone(), param);
            match kind {
                CrystalKind::Sle => (0..param.e())
                    .filter_map(|i| e_tilde(&nu, i).map(|x| (x.nu().clone(), EdgeLabel::Residue(i))))
                    .collect(),
                CrystalKind::Slinf => (1..=shift_range(&nu))
                    .filter_map(|k| {
                        upsilon(&nu, k, Sign::Minus).map(|x| (x.nu().clone(), EdgeLabel::Shift(k)))
                    })
                    .collect(),
            }
        })
        .collect();
    let mut edges = Vec::new();
    for (to, outs) in per_vertex.into_iter().enumerate() {
        for (smaller, label) in outs {
            let from = *index
                .get(&smaller)
                .ok_or_else(|| Error::Internal(format!("edge target {smaller} is not a vertex")))?;
            edges.push(CrystalEdge { from, to, label });
        }
    }
    Ok(CrystalGraph { param, kind, vertices, edges })
}

#[derive(Serialize)]
struct GraphJson<'a> {
    coordinates: &'static str,
    crystal: CrystalKind,
    e: i64,
    charge: [i64; 2],
    vertices: Vec<String>,
    edges: &'a [CrystalEdge],
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let (e, s) = (self.param.e(), self.param.s());
        let _ = writeln!(out, "digraph crystal {{");
        let _ = writeln!(out, "  // Fock coordinates, e={e}, charge=(0,{s})");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
        }
        for edge in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", edge.from, edge.to, edge.label);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphJson {
            coordinates: "fock",
            crystal: self.kind,
            e: self.param.e(),
            charge: [0, self.param.s()],
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            edges: &self.edges,
        };
        serde_json::to_value(doc).expect("graph serializes")
    }
}
