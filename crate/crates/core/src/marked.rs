//! Distinguished boxes of a bipartition used by the unitarity inequalities.
//!
//! All coordinates here are label coordinates (not transposed).

use serde::Serialize;

use crate::partition::{Bipartition, Cell, Component, Partition};

/// Marked boxes of a bipartition. Unprimed fields describe the first
/// component and primed (`*p`) fields the second.
///
/// With a single nonempty component:
/// `b1` has the largest content, `b2` is the removable box of largest content,
/// `b4` the removable box of second-largest content (equal to `b2` when there
/// is only one removable box), `b3` the top of the removable vertical strip
/// ending at `b4`, and `b5` the box of smallest content.
///
/// With both components nonempty, each component gets `b1`, `b2` as above and
/// `b4` = `b5` = the box of smallest content; `b3` is unused.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MarkedBoxes {
    pub b1: Option<Cell>,
    pub b2: Option<Cell>,
    pub b3: Option<Cell>,
    pub b4: Option<Cell>,
    pub b5: Option<Cell>,
    pub b1p: Option<Cell>,
    pub b2p: Option<Cell>,
    pub b4p: Option<Cell>,
    pub b5p: Option<Cell>,
}

struct OneComponent {
    b1: Cell,
    b2: Cell,
    b3: Cell,
    b4: Cell,
    b5: Cell,
}

fn one_component(p: &Partition, c: Component) -> Option<OneComponent> {
    if p.is_empty() {
        return None;
    }
    let cell = |(r, col): (usize, usize)| Cell::new(c, r, col);
    let b1 = cell((1, p.num_cols()));
    let b5 = cell((p.len(), 1));
    // Removable boxes come top row first, i.e. by decreasing content.
    let rem = p.removable();
    let b2 = cell(rem[0]);
    let b4 = cell(*rem.get(1).unwrap_or(&rem[0]));
    let mut top = b4.row;
    while top > 1 && p.row_len(top - 1) == b4.col {
        top -= 1;
    }
    let b3 = cell((top, b4.col));
    Some(OneComponent { b1, b2, b3, b4, b5 })
}

pub fn marked_boxes(lam: &Bipartition) -> MarkedBoxes {
    let first = one_component(lam.first(), Component::First);
    let second = one_component(lam.second(), Component::Second);
    let two = first.is_some() && second.is_some();
    let mut m = MarkedBoxes::default();
    if let Some(o) = first {
        m.b1 = Some(o.b1);
        m.b2 = Some(o.b2);
        if two {
            m.b4 = Some(o.b5);
            m.b5 = Some(o.b5);
        } else {
            m.b3 = Some(o.b3);
            m.b4 = Some(o.b4);
            m.b5 = Some(o.b5);
        }
    }
    if let Some(o) = second {
        m.b1p = Some(o.b1);
        m.b2p = Some(o.b2);
        if two {
            m.b4p = Some(o.b5);
        } else {
            m.b4p = Some(o.b4);
        }
        m.b5p = Some(o.b5);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(c: Option<Cell>) -> i64 {
        c.unwrap().content()
    }

    #[test]
    fn rectangle() {
        let m = marked_boxes(&Bipartition::from_parts(&[6, 6, 6, 6], &[]));
        assert_eq!(ct(m.b1), 5);
        assert_eq!(ct(m.b2), 2);
        assert_eq!(m.b2, m.b4);
        assert_eq!(m.b3, Some(Cell::new(Component::First, 1, 6)));
        assert_eq!(ct(m.b5), -3);
        assert!(m.b1p.is_none() && m.b4p.is_none());
    }

    #[test]
    fn single_box() {
        let m = marked_boxes(&Bipartition::from_parts(&[1], &[]));
        let c = Some(Cell::new(Component::First, 1, 1));
        assert_eq!((m.b1, m.b2, m.b4, m.b5), (c, c, c, c));
    }

    #[test]
    fn two_components() {
        let m = marked_boxes(&Bipartition::from_parts(&[3, 3], &[1]));
        assert_eq!((ct(m.b1), ct(m.b2), ct(m.b4)), (2, 1, -1));
        assert_eq!((ct(m.b1p), ct(m.b2p), ct(m.b4p)), (0, 0, 0));
        assert!(m.b3.is_none());
    }

    #[test]
    fn strip_above_second_removable() {
        // (5,3,3,3,1): b4 = (4,3), strip reaches up to row 2.
        let m = marked_boxes(&Bipartition::from_parts(&[5, 3, 3, 3, 1], &[]));
        assert_eq!(m.b2, Some(Cell::new(Component::First, 1, 5)));
        assert_eq!(m.b4, Some(Cell::new(Component::First, 4, 3)));
        assert_eq!(m.b3, Some(Cell::new(Component::First, 2, 3)));
        assert_eq!(m.b5, Some(Cell::new(Component::First, 5, 1)));
    }

    #[test]
    fn empty_has_no_marks() {
        assert_eq!(marked_boxes(&Bipartition::empty()), MarkedBoxes::default());
    }

    #[test]
    fn rectangles_have_b2_equal_b4() {
        for r in 1..=5 {
            for q in 1..=5 {
                let lam = Bipartition::new(Partition::rectangle(r, q), Partition::empty());
                let m = marked_boxes(&lam);
                assert_eq!(m.b2, m.b4);
                assert_eq!(ct(m.b2), q as i64 - r as i64);
            }
        }
    }
}
