//! Supports of the irreducible modules: the parabolic `B_{n'} × S_e^m × S_1^p`
//! read off from crystal positions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{ChargedBipartition, FockParam};
use crate::partition::{Bipartition, Partition};
use crate::position::{crystal_position, CrystalPosition};
use crate::unitarity::is_unitary;

/// `n = n_cuspidal + e·m + p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportDescriptor {
    pub n_cuspidal: usize,
    /// Depth in the level-rank crystal.
    pub m: usize,
    /// Depth in the affine crystal.
    pub p: usize,
    pub sigma: Partition,
    /// The source vertex, in Fock coordinates.
    pub source_fock: ChargedBipartition,
    /// Matching positions among the six possible ones (two when both
    /// depths vanish, none when the shape is not one of the six).
    pub position_cases: Vec<u8>,
}

/// Base position case of a source: 1 for the empty bipartition, 3 for a
/// cuspidal rectangle in the first component, 5 in the second.
fn source_base(source: &ChargedBipartition) -> Option<u8> {
    let param = source.param();
    let (e, s) = (param.e(), param.s());
    let nu = source.nu();
    // In Fock coordinates (r^q) has q parts of length r.
    let rect = |p: &Partition| {
        p.is_rectangle().then(|| p.num_cols() as i64 - p.len() as i64)
    };
    match (nu.first().is_empty(), nu.second().is_empty()) {
        (true, true) => Some(1),
        (false, true) if rect(nu.first()) == Some(s - e) => Some(3),
        (true, false) if rect(nu.second()) == Some(-s) => Some(5),
        _ => None,
    }
}

pub fn position_cases(pos: &CrystalPosition) -> Vec<u8> {
    let Some(base) = source_base(&pos.source) else {
        return Vec::new();
    };
    let p = pos.sle_depth();
    let single_row = pos.sigma.len() == 1;
    match (p, pos.sigma.is_empty()) {
        (0, true) => vec![base, base + 1],
        (_, true) => vec![base],
        (0, false) if single_row => vec![base + 1],
        _ => Vec::new(),
    }
}

pub fn support_from_position(pos: &CrystalPosition) -> SupportDescriptor {
    SupportDescriptor {
        n_cuspidal: pos.source.size(),
        m: pos.slinf_depth(),
        p: pos.sle_depth(),
        sigma: pos.sigma.clone(),
        source_fock: pos.source.clone(),
        position_cases: position_cases(pos),
    }
}

/// Support of `L(lam)`. For unitary labels the support must take one of the
/// six allowed shapes; anything else is reported as an internal error.
pub fn support(lam: &Bipartition, param: FockParam) -> Result<SupportDescriptor> {
    let pos = crystal_position(&ChargedBipartition::from_label(lam, param))?;
    let desc = support_from_position(&pos);
    if is_unitary(lam, param).unitary {
        check_unitary_support(lam, &desc)?;
    }
    Ok(desc)
}

/// The constraints on supports of unitary modules.
pub fn check_unitary_support(lam: &Bipartition, desc: &SupportDescriptor) -> Result<()> {
    if desc.m > 0 && desc.p > 0 {
        return Err(Error::Internal(format!(
            "unitary {lam} has both depths positive (m={}, p={})",
            desc.m, desc.p
        )));
    }
    if desc.sigma.len() > 1 {
        return Err(Error::Internal(format!(
            "unitary {lam} has sigma {} with more than one row",
            desc.sigma
        )));
    }
    if desc.position_cases.is_empty() {
        return Err(Error::Internal(format!(
            "unitary {lam} has source {} outside the allowed shapes",
            desc.source_fock
        )));
    }
    Ok(())
}

/// The `(n', m)` pairs allowed for unitary modules of size `n`: the trivial
/// subgroup, `S_e^m` when `n = e·m`, and `B_{rq}` or `B_{rq} × S_e^m` with
/// `rq + e·m = n` for rectangles with `r − q ∈ {s − e, −s}`.
pub fn expected_support_pairs(e: i64, s: i64, n: usize) -> BTreeSet<(usize, usize)> {
    let eu = e as usize;
    let mut out = BTreeSet::new();
    out.insert((0, 0));
    if n > 0 && n % eu == 0 {
        out.insert((0, n / eu));
    }
    for r in 1..=n {
        for q in 1..=n / r {
            let d = r as i64 - q as i64;
            if d != s - e && d != -s {
                continue;
            }
            let size = r * q;
            out.insert((size, 0));
            let rest = n - size;
            if rest > 0 && rest % eu == 0 {
                out.insert((size, rest / eu));
            }
        }
    }
    out
}
