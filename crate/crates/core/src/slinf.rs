//! Operators of the level-rank crystal (`Υ_k^±` and `ã_σ`), acting by
//! shifting e-periods on the abacus.

use serde::Serialize;

use crate::abacus::{Abacus, Direction};
use crate::crystal::{lift_along, reduce_to_source};
use crate::error::{Error, Result};
use crate::fock::ChargedBipartition;
use crate::partition::Partition;

/// `Υ_k^-` removes a period's worth of boxes, `Υ_k^+` adds them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    fn direction(self) -> Direction {
        match self {
            Sign::Minus => Direction::Left,
            Sign::Plus => Direction::Right,
        }
    }
}

/// Shifts Per^k on a vertex whose abacus is totally periodic.
fn shift_on_source(nu: &ChargedBipartition, k: usize, sign: Sign) -> Option<ChargedBipartition> {
    let moved = Abacus::from_charged(nu).shift_period(k, sign.direction())?;
    let out = moved.to_charged();
    debug_assert_eq!(out.param(), nu.param());
    Some(out)
}

/// `Υ_k^±`. On a vertex that is not an affine source the operator is
/// computed at the source and carried back along the `f̃` path.
pub fn upsilon(nu: &ChargedBipartition, k: usize, sign: Sign) -> Option<ChargedBipartition> {
    if k == 0 {
        return None;
    }
    let (path, src) = reduce_to_source(nu);
    if path.is_empty() {
        return shift_on_source(nu, k, sign);
    }
    let shifted = shift_on_source(&src, k, sign)?;
    lift_along(&shifted, &path)
}

/// `ã_σ = (Υ_r^+)^{σ_r} ⋯ (Υ_1^+)^{σ_1}`, applying `Υ_1^+` first.
pub fn a_sigma(sigma: &Partition, source: &ChargedBipartition) -> Result<ChargedBipartition> {
    let mut cur = source.clone();
    let mut step = 0;
    for (idx, &times) in sigma.parts().iter().enumerate() {
        let k = idx + 1;
        for _ in 0..times {
            step += 1;
            cur = upsilon(&cur, k, Sign::Plus).ok_or(Error::NotInImage { k, step })?;
        }
    }
    Ok(cur)
}

/// True when every `Υ_k^-` kills the vertex. Only periods above the solid
/// rays can move left, so `k` ranges up to that count plus one.
pub fn is_slinf_highest_weight(nu: &ChargedBipartition) -> bool {
    let kmax = shift_range(nu);
    (1..=kmax).all(|k| upsilon(nu, k, Sign::Minus).is_none())
}

/// Largest `k` worth trying for `Υ_k^-` on `nu`.
pub(crate) fn shift_range(nu: &ChargedBipartition) -> usize {
    let (_, src) = reduce_to_source(nu);
    Abacus::from_charged(&src).periods_until_rays().unwrap_or(0) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockParam;
    use crate::partition::Bipartition;

    fn cb(first: &[usize], second: &[usize], e: i64, s: i64) -> ChargedBipartition {
        ChargedBipartition::new(
            Bipartition::from_parts(first, second),
            FockParam::new(e, s).unwrap(),
        )
    }

    fn row(m: usize) -> Partition {
        Partition::new(vec![m]).unwrap()
    }

    #[test]
    fn two_left_shifts_empty_the_bipartition() {
        let nu = cb(&[2, 2, 2], &[2], 4, 1);
        let once = upsilon(&nu, 1, Sign::Minus).unwrap();
        assert_eq!(once, cb(&[1, 1, 1], &[1], 4, 1));
        let twice = upsilon(&once, 1, Sign::Minus).unwrap();
        assert_eq!(twice, cb(&[], &[], 4, 1));
    }

    #[test]
    fn fifth_left_shift_fails() {
        let mut nu = cb(&[6, 6, 6], &[], 3, 2);
        for _ in 0..4 {
            nu = upsilon(&nu, 1, Sign::Minus).unwrap();
        }
        assert!(upsilon(&nu, 1, Sign::Minus).is_none());
    }

    #[test]
    fn empty_is_killed_by_every_lowering_operator() {
        let nu = cb(&[], &[], 3, 1);
        for k in 1..=6 {
            assert!(upsilon(&nu, k, Sign::Minus).is_none());
        }
        assert!(is_slinf_highest_weight(&nu));
    }

    #[test]
    fn a_sigma_examples() {
        let empty = cb(&[], &[], 4, 1);
        assert_eq!(a_sigma(&row(2), &empty).unwrap(), cb(&[2, 2, 2], &[2], 4, 1));
        let rect = cb(&[4, 4, 4, 4, 4, 4], &[], 5, 3);
        assert_eq!(
            a_sigma(&row(3), &rect).unwrap(),
            cb(&[7, 7, 7, 7, 7, 4], &[], 5, 3)
        );
    }

    #[test]
    fn left_shift_on_two_component_example() {
        let nu = cb(&[3, 3, 3, 2], &[3, 3, 3, 2, 2], 3, 2);
        assert_eq!(
            upsilon(&nu, 3, Sign::Minus).unwrap(),
            cb(&[3, 3, 3, 1], &[3, 3, 3, 1, 1], 3, 2)
        );
    }

    #[test]
    fn plus_and_minus_are_inverse_on_small_vertices() {
        for e in 2..=4 {
            for s in -1..=3 {
                let param = FockParam::new(e, s).unwrap();
                for bp in Bipartition::all_up_to(5) {
                    let nu = ChargedBipartition::new(bp, param);
                    for k in 1..=3 {
                        if let Some(up) = upsilon(&nu, k, Sign::Plus) {
                            assert_eq!(upsilon(&up, k, Sign::Minus).as_ref(), Some(&nu));
                        }
                        if let Some(down) = upsilon(&nu, k, Sign::Minus) {
                            assert_eq!(upsilon(&down, k, Sign::Plus).as_ref(), Some(&nu));
                        }
                    }
                }
            }
        }
    }
}
