//! Named shapes and decompositions used by the reproduction suite, the CLI
//! and the tests.

use crate::decomp::{Decomposition, enumerate_nested_decompositions_with};
use crate::shapes::{Cell, Diagram, SkewShape};

/// Cells from row intervals written as `"row:first-last ..."`.
fn rows(spec: &str) -> Diagram {
    let mut out = Diagram::new();
    for part in spec.split_whitespace() {
        let (row, span) = part.split_once(':').expect("row:first-last");
        let (a, b) = span.split_once('-').expect("first-last");
        let row: i32 = row.parse().expect("row");
        for col in a.parse::<i32>().expect("first")..=b.parse::<i32>().expect("last") {
            out.insert(Cell::new(row, col));
        }
    }
    out
}

fn decomposition(shape: SkewShape, strips: &[&str]) -> Decomposition {
    Decomposition::new(shape, strips.iter().map(|s| rows(s)).collect()).expect("strips are thickened strips")
}

/// The 18-box shape (6,6,6,4)/(3,1).
pub fn running_shape() -> SkewShape {
    SkewShape::from_parts(&[6, 6, 6, 4], &[3, 1]).expect("valid shape")
}

/// Cells shared by two strips in the running decomposition.
pub fn running_shared_corners() -> [Cell; 3] {
    [Cell::new(4, 1), Cell::new(3, 3), Cell::new(2, 5)]
}

/// The three-strip nested decomposition of the running shape.
///
/// Recovered from its shared corners: the strips sharing (4,1) also share
/// (3,3), a different pair shares (2,5), and the first strip ends on
/// diagonal 5 without reaching (4,1). Exactly one enumerated decomposition
/// fits.
pub fn running_decomposition() -> Decomposition {
    let shared = running_shared_corners();
    let mut found: Vec<Decomposition> = enumerate_nested_decompositions_with(&running_shape(), 3, Some(&shared))
        .into_iter()
        .filter(|d| {
            let sc = d.shared_corners();
            let pair = |c: Cell| {
                sc.iter()
                    .find(|s| s.cell == c)
                    .map(|s| (s.lower_of.min(s.upper_of), s.lower_of.max(s.upper_of)))
            };
            d.len() == 3
                && pair(shared[0]).is_some()
                && pair(shared[0]) == pair(shared[1])
                && pair(shared[2]).is_some()
                && pair(shared[2]) != pair(shared[0])
                && d.strips()[0].end().content() == 5
                && !d.strips()[0].contains(shared[0])
        })
        .collect();
    assert_eq!(found.len(), 1, "the shared corners pin down one decomposition");
    found.pop().expect("one decomposition")
}

/// The 18-box shape (8,6,6,2,1)/(3,2).
pub fn rim_example_shape() -> SkewShape {
    SkewShape::from_parts(&[8, 6, 6, 2, 1], &[3, 2]).expect("valid shape")
}

/// A cover of the rim example whose first strip, of shape (5,1), starts on
/// an interior cell.
pub fn interior_start_decomposition() -> Decomposition {
    decomposition(
        rim_example_shape(),
        &["1:4-8 2:4-4", "2:3-3 3:2-3 4:1-2 5:1-1", "3:1-1", "2:5-6 3:4-6"],
    )
}

/// A cover of the rim example whose second strip, a row of three, ends on
/// an interior cell.
pub fn interior_end_decomposition() -> Decomposition {
    decomposition(
        rim_example_shape(),
        &["4:1-2 5:1-1", "3:1-3", "1:6-8 2:6-6 3:4-6", "1:4-5 2:3-5"],
    )
}

/// The 31-box shape (8,8,8,7,4)/(3,1).
pub fn non_nested_shape() -> SkewShape {
    SkewShape::from_parts(&[8, 8, 8, 7, 4], &[3, 1]).expect("valid shape")
}

pub fn non_nested_shared_corners() -> [Cell; 6] {
    [
        Cell::new(2, 3),
        Cell::new(2, 5),
        Cell::new(4, 5),
        Cell::new(3, 6),
        Cell::new(2, 7),
        Cell::new(1, 8),
    ]
}

/// Every valid decomposition of [`non_nested_shape`] whose shared cells are
/// exactly [`non_nested_shared_corners`]. Found by exhaustive search (about
/// 40 s in release mode) and frozen here; none of them is nested.
pub fn non_nested_decompositions() -> Vec<Decomposition> {
    const OUTER: [&str; 2] = ["1:8-8 2:7-8 3:6-8 4:5-7", "1:6-8 2:5-7 3:5-6 4:5-5"];
    const INNER: [[&str; 3]; 11] = [
        ["1:4-5 2:4-5 3:4-4 4:3-4 5:1-4", "2:3-3 3:1-3 4:1-2", "2:2-3"],
        ["1:4-5 2:4-5 3:4-4 4:3-4 5:2-4", "2:3-3 3:1-3 4:1-2 5:1-1", "2:2-3"],
        ["1:4-5 2:4-5 3:4-4 4:4-4 5:1-4", "2:3-3 3:3-3 4:1-3", "2:2-3 3:1-2"],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:2-4",
            "2:3-3 3:3-3 4:1-3 5:1-1",
            "2:2-3 3:1-2",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:3-4",
            "2:3-3 3:3-3 4:1-3 5:1-2",
            "2:2-3 3:1-2",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:3-4",
            "2:3-3 3:3-3 4:2-3 5:1-2",
            "2:2-3 3:1-2 4:1-1",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:3-4",
            "2:3-3 3:3-3 4:2-3 5:2-2",
            "2:2-3 3:1-2 4:1-1 5:1-1",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:4-4",
            "2:3-3 3:3-3 4:2-3 5:1-3",
            "2:2-3 3:1-2 4:1-1",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:4-4",
            "2:3-3 3:3-3 4:2-3 5:2-3",
            "2:2-3 3:1-2 4:1-1 5:1-1",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:4-4",
            "2:3-3 3:3-3 4:3-3 5:1-3",
            "2:2-3 3:1-2 4:1-2",
        ],
        [
            "1:4-5 2:4-5 3:4-4 4:4-4 5:4-4",
            "2:3-3 3:3-3 4:3-3 5:2-3",
            "2:2-3 3:1-2 4:1-2 5:1-1",
        ],
    ];
    INNER
        .iter()
        .map(|inner| {
            let strips: Vec<&str> = OUTER.iter().chain(inner.iter()).copied().collect();
            decomposition(non_nested_shape(), &strips)
        })
        .collect()
}

/// The running decomposition with the end cell of its first strip removed,
/// leaving that cell uncovered.
pub fn corrupted_running_decomposition() -> Decomposition {
    let d = running_decomposition();
    let mut strips: Vec<Diagram> = d.strips().iter().map(|t| t.cells().clone()).collect();
    let end = d.strips()[0].end();
    strips[0].remove(end);
    Decomposition::new(d.shape().clone(), strips).expect("still thickened strips")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{Clause, is_nested, validate_decomposition};

    #[test]
    fn interior_start_and_end_are_rejected() {
        let v = validate_decomposition(&interior_start_decomposition()).unwrap_err();
        assert_eq!((v.clause, v.strips.clone()), (Clause::StartOffPerimeter, vec![0]));
        let v = validate_decomposition(&interior_end_decomposition()).unwrap_err();
        assert_eq!((v.clause, v.strips.clone()), (Clause::EndOffPerimeter, vec![1]));
    }

    #[test]
    fn frozen_non_nested_decompositions() {
        let want: Diagram = non_nested_shared_corners().into_iter().collect();
        let all = non_nested_decompositions();
        assert_eq!(all.len(), 11);
        for d in &all {
            validate_decomposition(d).unwrap();
            let got: Diagram = d.shared_corners().iter().map(|s| s.cell).collect();
            assert_eq!(got, want);
            assert!(!is_nested(d));
        }
    }

    #[test]
    fn corruption_breaks_validity() {
        assert!(validate_decomposition(&corrupted_running_decomposition()).is_err());
    }
}
