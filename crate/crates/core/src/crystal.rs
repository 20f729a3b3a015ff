//! Kashiwara operators of the affine crystal via the good-box cancellation rule.

use crate::abacus::Abacus;
use crate::fock::{ChargedBipartition, ChargedBox};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Removable,
    Addable,
}

/// The `i`-boxes surviving cancellation, as (addable, removable) lists in
/// increasing order.
fn reduced_signature(nu: &ChargedBipartition, i: i64) -> (Vec<ChargedBox>, Vec<ChargedBox>) {
    let i = nu.param().residue(i);
    let mut boxes: Vec<(ChargedBox, Kind)> = nu
        .removable_boxes()
        .into_iter()
        .map(|b| (b, Kind::Removable))
        .chain(nu.addable_boxes().into_iter().map(|b| (b, Kind::Addable)))
        .filter(|(b, _)| b.residue == i)
        .collect();
    // At equal charged content a first-component box counts as larger.
    boxes.sort_by_key(|(b, _)| (b.charged_content, b.cell.component.index() == 0));
    let mut stack: Vec<(ChargedBox, Kind)> = Vec::with_capacity(boxes.len());
    for item in boxes {
        if item.1 == Kind::Addable && matches!(stack.last(), Some((_, Kind::Removable))) {
            stack.pop();
        } else {
            stack.push(item);
        }
    }
    let split = stack.partition_point(|(_, k)| *k == Kind::Addable);
    let adds = stack[..split].iter().map(|(b, _)| *b).collect();
    let rems = stack[split..].iter().map(|(b, _)| *b).collect();
    (adds, rems)
}

/// The good removable `i`-box, if any.
pub fn good_removable_ibox(nu: &ChargedBipartition, i: i64) -> Option<ChargedBox> {
    reduced_signature(nu, i).1.first().copied()
}

/// The good addable `i`-box, if any.
pub fn good_addable_ibox(nu: &ChargedBipartition, i: i64) -> Option<ChargedBox> {
    reduced_signature(nu, i).0.last().copied()
}

/// `ẽ_i`: removes the good removable `i`-box.
pub fn e_tilde(nu: &ChargedBipartition, i: i64) -> Option<ChargedBipartition> {
    let b = good_removable_ibox(nu, i)?;
    let smaller = nu.nu().remove(b.cell).expect("good box is removable");
    Some(nu.with_nu(smaller))
}

/// `f̃_i`: adds the good addable `i`-box.
pub fn f_tilde(nu: &ChargedBipartition, i: i64) -> Option<ChargedBipartition> {
    let b = good_addable_ibox(nu, i)?;
    let bigger = nu.nu().add(b.cell).expect("good box is addable");
    Some(nu.with_nu(bigger))
}

/// True when every `ẽ_i` kills the vertex.
pub fn is_highest_weight(nu: &ChargedBipartition) -> bool {
    (0..nu.param().e()).all(|i| good_removable_ibox(nu, i).is_none())
}

/// Applies `ẽ_i` with the smallest applicable residue until none applies.
/// Returns the residues used, in order, and the source reached.
pub fn reduce_to_source(nu: &ChargedBipartition) -> (Vec<i64>, ChargedBipartition) {
    let e = nu.param().e();
    let mut cur = nu.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 0..e {
            if let Some(next) = e_tilde(&cur, i) {
                path.push(i);
                cur = next;
                continue 'outer;
            }
        }
        return (path, cur);
    }
}

/// Applies `f̃` along the reverse of a path produced by [`reduce_to_source`].
pub fn lift_along(source: &ChargedBipartition, path: &[i64]) -> Option<ChargedBipartition> {
    let mut cur = source.clone();
    for &i in path.iter().rev() {
        cur = f_tilde(&cur, i)?;
    }
    Some(cur)
}

/// Source test through the abacus: a vertex is highest weight exactly when
/// its abacus is totally periodic.
pub fn is_source_by_abacus(nu: &ChargedBipartition) -> bool {
    Abacus::from_charged(nu).is_totally_e_periodic()
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

    #[test]
    fn first_worked_example() {
        let nu = cb(&[5, 3], &[2], 6, 1);
        assert!(good_removable_ibox(&nu, 2).is_none());
        assert_eq!(e_tilde(&nu, 4).unwrap(), cb(&[4, 3], &[2], 6, 1));
        assert_eq!(e_tilde(&nu, 1).unwrap(), cb(&[5, 2], &[2], 6, 1));
        assert_eq!(
            e_tilde(&nu, 4).unwrap().label(),
            Bipartition::from_parts(&[2, 2, 2, 1], &[1, 1])
        );
        for i in [0, 3, 5] {
            assert!(e_tilde(&nu, i).is_none());
        }
    }

    #[test]
    fn second_worked_example() {
        let nu = cb(&[2, 2, 1, 1], &[2, 1, 1], 3, 1);
        assert_eq!(e_tilde(&nu, 0).unwrap(), cb(&[2, 2, 1], &[2, 1, 1], 3, 1));
        assert!(e_tilde(&nu, 1).is_none());
        assert!(e_tilde(&nu, 2).is_none());
    }

    #[test]
    fn empty_has_no_removable_good_box() {
        let nu = cb(&[], &[], 3, 1);
        for i in 0..3 {
            assert!(good_removable_ibox(&nu, i).is_none());
        }
        assert!(is_highest_weight(&nu));
    }

    #[test]
    fn e_and_f_are_inverse() {
        for e in 2..=4 {
            for s in -1..=4 {
                let param = FockParam::new(e, s).unwrap();
                for bp in Bipartition::all_up_to(6) {
                    let nu = ChargedBipartition::new(bp, param);
                    for i in 0..e {
                        if let Some(x) = e_tilde(&nu, i) {
                            assert_eq!(f_tilde(&x, i).as_ref(), Some(&nu));
                        }
                        if let Some(up) = f_tilde(&nu, i) {
                            assert_eq!(e_tilde(&up, i).as_ref(), Some(&nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_path_lifts_back() {
        let nu = cb(&[6, 4, 4, 4, 4, 4], &[], 5, 3);
        let (path, src) = reduce_to_source(&nu);
        assert_eq!(path.len(), 2);
        assert_eq!(src, cb(&[4, 4, 4, 4, 4, 4], &[], 5, 3));
        assert_eq!(lift_along(&src, &path).unwrap(), nu);
    }
}
