//! Location of a vertex relative to the sources of both crystals.

use serde::Serialize;

use crate::crystal::{lift_along, reduce_to_source};
use crate::error::{Error, Result};
use crate::fock::ChargedBipartition;
use crate::partition::Partition;
use crate::slinf::{a_sigma, shift_range, upsilon, Sign};

/// `ν = f̃_path(ã_σ(source))`, where `source` is killed by every `ẽ_i` and
/// every `Υ_k^-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalPosition {
    /// Residues of the `ẽ` steps from the vertex down to the affine source.
    pub sle_path: Vec<i64>,
    pub sigma: Partition,
    pub source: ChargedBipartition,
}

impl CrystalPosition {
    /// Depth in the affine crystal.
    pub fn sle_depth(&self) -> usize {
        self.sle_path.len()
    }

    /// Depth in the level-rank crystal.
    pub fn slinf_depth(&self) -> usize {
        self.sigma.size()
    }

    /// Rebuilds the vertex from the recorded data.
    pub fn reconstruct(&self) -> Result<ChargedBipartition> {
        let top = a_sigma(&self.sigma, &self.source)?;
        lift_along(&top, &self.sle_path)
            .ok_or_else(|| Error::Internal(format!("f-path does not lift from {top}")))
    }
}

pub fn crystal_position(nu: &ChargedBipartition) -> Result<CrystalPosition> {
    let (sle_path, mut cur) = reduce_to_source(nu);
    let mut counts: Vec<usize> = Vec::new();
    loop {
        let kmax = shift_range(&cur);
        let found = (1..=kmax)
            .rev()
            .find_map(|k| upsilon(&cur, k, Sign::Minus).map(|x| (k, x)));
        let Some((k, next)) = found else { break };
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
        cur = next;
    }
    let sigma = Partition::new(counts.clone())
        .map_err(|_| Error::Internal(format!("shift counts {counts:?} are not a partition")))?;
    let pos = CrystalPosition {
        sle_path,
        sigma,
        source: cur,
    };
    match pos.reconstruct() {
        Ok(back) if &back == nu => Ok(pos),
        Ok(back) => Err(Error::Internal(format!(
            "position of {nu} reconstructs to {back}"
        ))),
        Err(err) => Err(Error::Internal(format!(
            "position of {nu} does not reconstruct: {err}"
        ))),
    }
}
