//! Partitions, skew shapes and the geometry of their cells.
//!
//! Coordinates are 1-based `(row, col)` with rows counted from the top, so the
//! content of a cell is `col - row`. Cells may carry non-positive coordinates
//! because enriched strips reach one step past the shape.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn content(self) -> i32 {
        self.col - self.row
    }

    pub const fn left(self) -> Cell {
        Cell::new(self.row, self.col - 1)
    }

    pub const fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub const fn up(self) -> Cell {
        Cell::new(self.row - 1, self.col)
    }

    pub const fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub const fn shifted(self, dr: i32, dc: i32) -> Cell {
        Cell::new(self.row + dr, self.col + dc)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive parts. Trailing zeros are dropped
/// on construction so `(2,1,0)` and `(2,1)` are the same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An arbitrary finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram(BTreeSet<Cell>);

impl Diagram {
    pub fn new() -> Self {
        Diagram(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.0.contains(&c)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.0.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.0.remove(&c)
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn translate(&self, dr: i32, dc: i32) -> Diagram {
        self.iter().map(|c| c.shifted(dr, dc)).collect()
    }

    /// The bottommost cell of the diagram, leftmost within that row.
    pub fn start(&self) -> Option<Cell> {
        self.iter().max_by_key(|c| (c.row, -c.col))
    }

    /// The topmost cell of the diagram, rightmost within that row.
    pub fn end(&self) -> Option<Cell> {
        self.iter().min_by_key(|c| (c.row, -c.col))
    }

    pub fn by_content(&self) -> BTreeMap<i32, Vec<Cell>> {
        let mut out: BTreeMap<i32, Vec<Cell>> = BTreeMap::new();
        for c in self.iter() {
            out.entry(c.content()).or_default().push(c);
        }
        out
    }

    pub fn union(&self, other: &Diagram) -> Diagram {
        self.0.union(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &Diagram) -> Diagram {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn is_subset(&self, other: &Diagram) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_pairs(&self) -> Vec<[i32; 2]> {
        self.iter().map(|c| [c.row, c.col]).collect()
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Diagram(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Diagram {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `lambda / mu` with `mu` contained in `lambda`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        let contained = mu.len() <= lambda.len() && (0..mu.len()).all(|i| mu.part(i) <= lambda.part(i));
        if !contained {
            return Err(Error::NotContained {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
            });
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn from_parts(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        SkewShape::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?)
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            lambda,
            mu: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewShape::default()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn size(&self) -> usize {
        (self.lambda.size() - self.mu.size()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains(&self, c: Cell) -> bool {
        if c.row < 1 || c.row as usize > self.rows() {
            return false;
        }
        let i = (c.row - 1) as usize;
        c.col > self.mu.part(i) as i32 && c.col <= self.lambda.part(i) as i32
    }

    pub fn cells(&self) -> Diagram {
        skew_boxes(self)
    }

    /// The canonical shape of a skew diagram, translated so that its cells
    /// touch row 1 and column 1. Errors if the cells do not form a skew
    /// diagram.
    pub fn from_cells(d: &Diagram) -> Result<SkewShape> {
        if d.is_empty() {
            return Ok(SkewShape::empty());
        }
        let rows = row_intervals(d).ok_or_else(|| Error::NotSkew("a row has a gap".into()))?;
        if !rows_are_skew(&rows) {
            return Err(Error::NotSkew("row ends are not weakly decreasing".into()));
        }
        let r0 = *rows.keys().next().unwrap();
        let r1 = *rows.keys().last().unwrap();
        let c0 = d.iter().map(|c| c.col).min().unwrap();
        let mut lambda = Vec::new();
        let mut mu = Vec::new();
        let mut filler = 0;
        for r in r0..=r1 {
            match rows.get(&r) {
                Some(&(lo, hi)) => {
                    lambda.push((hi - c0 + 1) as u32);
                    mu.push((lo - c0) as u32);
                    filler = (lo - c0) as u32;
                }
                None => {
                    lambda.push(filler);
                    mu.push(filler);
                }
            }
        }
        SkewShape::new(Partition::new(lambda)?, Partition::new(mu)?)
    }

    /// Same cells as `self`, moved to touch row 1 and column 1.
    pub fn normalized(&self) -> SkewShape {
        SkewShape::from_cells(&self.cells()).expect("a skew shape is a skew diagram")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "{}", self.lambda)
        } else {
            write!(f, "{}/{}", self.lambda, self.mu)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    lambda: Vec<u32>,
    #[serde(default)]
    mu: Vec<u32>,
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ShapeJson {
            lambda: self.lambda.parts().to_vec(),
            mu: self.mu.parts().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ShapeJson::deserialize(d)?;
        SkewShape::from_parts(&raw.lambda, &raw.mu).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    boxes: Vec<[i32; 2]>,
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { boxes: self.to_pairs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let n = raw.boxes.len();
        let diagram: Diagram = raw.boxes.iter().map(|&[r, c]| Cell::new(r, c)).collect();
        if diagram.len() != n {
            return Err(serde::de::Error::custom("duplicate box"));
        }
        Ok(diagram)
    }
}

pub fn skew_boxes(shape: &SkewShape) -> Diagram {
    let mut d = Diagram::new();
    for i in 0..shape.rows() {
        for col in shape.mu.part(i) + 1..=shape.lambda.part(i) {
            d.insert(Cell::new(i as i32 + 1, col as i32));
        }
    }
    d
}

/// Connectivity under shared edges. The empty diagram counts as connected.
pub fn is_edgewise_connected(d: &Diagram) -> bool {
    let Some(first) = d.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some(c) = queue.pop_front() {
        for n in [c.left(), c.right(), c.up(), c.down()] {
            if d.contains(n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == d.len()
}

/// Edgewise connected components, each in row-major order.
pub fn components(d: &Diagram) -> Vec<Diagram> {
    let mut left: BTreeSet<Cell> = d.iter().collect();
    let mut out = Vec::new();
    while let Some(&first) = left.iter().next() {
        left.remove(&first);
        let mut comp = Diagram::new();
        comp.insert(first);
        let mut queue = VecDeque::from([first]);
        while let Some(c) = queue.pop_front() {
            for n in [c.left(), c.right(), c.up(), c.down()] {
                if left.remove(&n) {
                    comp.insert(n);
                    queue.push_back(n);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn row_intervals(d: &Diagram) -> Option<BTreeMap<i32, (i32, i32)>> {
    let mut rows: BTreeMap<i32, (i32, i32, usize)> = BTreeMap::new();
    for c in d.iter() {
        let e = rows.entry(c.row).or_insert((c.col, c.col, 0));
        e.0 = e.0.min(c.col);
        e.1 = e.1.max(c.col);
        e.2 += 1;
    }
    rows.into_iter()
        .map(|(r, (lo, hi, n))| ((hi - lo + 1) as usize == n).then_some((r, (lo, hi))))
        .collect()
}

fn rows_are_skew(rows: &BTreeMap<i32, (i32, i32)>) -> bool {
    let v: Vec<_> = rows.iter().collect();
    v.windows(2).all(|w| {
        let (&ra, &(lo_a, hi_a)) = w[0];
        let (&rb, &(lo_b, hi_b)) = w[1];
        lo_a >= lo_b && hi_a >= hi_b && (rb == ra + 1 || lo_a > hi_b)
    })
}

/// Whether the cells are, up to translation, the cells of some skew shape.
pub fn is_skew_diagram(d: &Diagram) -> bool {
    row_intervals(d).is_some_and(|rows| rows_are_skew(&rows))
}

fn has_block(d: &Diagram, height: i32, width: i32) -> bool {
    d.iter()
        .any(|c| (0..height).all(|dr| (0..width).all(|dc| d.contains(c.shifted(dr, dc)))))
}

/// Connected skew diagram without a 2×2 block.
pub fn is_strip(d: &Diagram) -> bool {
    is_edgewise_connected(d) && is_skew_diagram(d) && !has_block(d, 2, 2)
}

/// Connected skew diagram without a 3×2 or a 2×3 block.
pub fn is_thickened_strip(d: &Diagram) -> bool {
    is_edgewise_connected(d) && is_skew_diagram(d) && !has_block(d, 3, 2) && !has_block(d, 2, 3)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Perimeter {
    pub left: bool,
    pub bottom: bool,
    pub right: bool,
    pub top: bool,
}

impl Perimeter {
    /// Where a strip may start.
    pub fn is_entry(self) -> bool {
        self.left || self.bottom
    }

    /// Where a strip may end.
    pub fn is_exit(self) -> bool {
        self.right || self.top
    }
}

pub fn perimeter_class(shape: &SkewShape, c: Cell) -> Result<Perimeter> {
    if !shape.contains(c) {
        return Err(Error::CellNotInShape(c));
    }
    Ok(Perimeter {
        left: !shape.contains(c.left()),
        bottom: !shape.contains(c.down()),
        right: !shape.contains(c.right()),
        top: !shape.contains(c.up()),
    })
}

/// The shape turned upside down and reversed left to right.
pub fn rotate180(shape: &SkewShape) -> SkewShape {
    if shape.is_empty() {
        return SkewShape::empty();
    }
    let rows = shape.rows() as i32;
    let cols = shape.lambda.part(0) as i32;
    let turned: Diagram = shape
        .cells()
        .iter()
        .map(|c| Cell::new(rows + 1 - c.row, cols + 1 - c.col))
        .collect();
    SkewShape::from_cells(&turned).expect("rotation keeps skewness")
}

/// Every edgewise connected skew shape with between 1 and `max_size`
/// cells, each once in normalized form, ordered by size.
pub fn connected_shapes(max_size: usize) -> Vec<SkewShape> {
    // rows are built from the bottom up; the bottom row starts in column 1
    fn grow(rows: &mut Vec<(u32, u32)>, left: usize, out: &mut Vec<SkewShape>) {
        let lambda: Vec<u32> = rows.iter().rev().map(|r| r.1).collect();
        let mu: Vec<u32> = rows.iter().rev().map(|r| r.0 - 1).collect();
        out.push(SkewShape::from_parts(&lambda, &mu).expect("rows form a skew shape"));
        let &(a, b) = rows.last().expect("at least one row");
        for na in a..=b {
            for nb in b..=b + left as u32 {
                let width = (nb - na + 1) as usize;
                if width > left {
                    break;
                }
                rows.push((na, nb));
                grow(rows, left - width, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for width in 1..=max_size {
        grow(&mut vec![(1, width as u32)], max_size - width, &mut out);
    }
    out.sort_by_key(|s| s.size());
    out
}

/// Every skew shape with between 1 and `max_size` cells and no empty rows,
/// ordered by size. Pieces that touch only at a corner stand for every
/// wider separation, since the diagram then factors into its components.
pub fn skew_shapes(max_size: usize) -> Vec<SkewShape> {
    fn grow(rows: &mut Vec<(u32, u32)>, left: usize, out: &mut Vec<SkewShape>) {
        let lambda: Vec<u32> = rows.iter().rev().map(|r| r.1).collect();
        let mu: Vec<u32> = rows.iter().rev().map(|r| r.0 - 1).collect();
        out.push(SkewShape::from_parts(&lambda, &mu).expect("rows form a skew shape"));
        let &(a, b) = rows.last().expect("at least one row");
        for na in a..=b + 1 {
            for nb in b.max(na)..=b + left as u32 {
                let width = (nb - na + 1) as usize;
                if width > left {
                    break;
                }
                rows.push((na, nb));
                grow(rows, left - width, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for width in 1..=max_size {
        grow(&mut vec![(1, width as u32)], max_size - width, &mut out);
    }
    out.sort_by_key(|s| s.size());
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shape(l: &[u32], m: &[u32]) -> SkewShape {
        SkewShape::from_parts(l, m).unwrap()
    }

    fn cells(v: &[(i32, i32)]) -> Diagram {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn box_expansion() {
        assert_eq!(skew_boxes(&shape(&[1], &[])), cells(&[(1, 1)]));
        assert_eq!(skew_boxes(&shape(&[2, 1], &[])), cells(&[(1, 1), (1, 2), (2, 1)]));
        let running = skew_boxes(&shape(&[6, 6, 6, 4], &[3, 1]));
        assert_eq!(running.len(), 18);
        assert_eq!(running.iter().map(|c| c.row).max(), Some(4));
    }

    #[test]
    fn partitions_reject_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
        assert!(SkewShape::from_parts(&[2], &[3]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(is_edgewise_connected(&cells(&[(1, 1), (1, 2)])));
        assert!(!is_edgewise_connected(&cells(&[(1, 1), (2, 2)])));
        assert!(is_edgewise_connected(&shape(&[8, 6, 6, 2, 1], &[3, 2]).cells()));
        assert!(is_edgewise_connected(&Diagram::new()));
    }

    #[test]
    fn strips_and_thickened_strips() {
        assert!(is_strip(&cells(&[(1, 2), (2, 1), (2, 2)])));
        assert!(!is_strip(&cells(&[(1, 1), (1, 2), (2, 1), (2, 2)])));
        assert!(!is_strip(&shape(&[4, 4], &[2]).cells()));
        assert!(is_strip(&shape(&[4, 2], &[1]).cells()));
        assert!(is_thickened_strip(&shape(&[4, 4], &[2]).cells()));
        assert!(!is_thickened_strip(&shape(&[2, 2, 2], &[]).cells()));
        assert!(!is_thickened_strip(&shape(&[3, 3], &[]).cells()));
        assert!(is_thickened_strip(&shape(&[5, 5, 5, 4, 4], &[4, 3, 3, 2]).cells()));
        assert!(is_thickened_strip(&shape(&[2, 2], &[]).cells()));
    }

    #[test]
    fn perimeters() {
        let all = Perimeter {
            left: true,
            bottom: true,
            right: true,
            top: true,
        };
        assert_eq!(perimeter_class(&shape(&[1], &[]), Cell::new(1, 1)).unwrap(), all);
        let p = perimeter_class(&shape(&[2, 2], &[]), Cell::new(2, 1)).unwrap();
        assert_eq!(
            p,
            Perimeter {
                left: true,
                bottom: true,
                right: false,
                top: false
            }
        );
        let p = perimeter_class(&shape(&[6, 6, 6, 4], &[3, 1]), Cell::new(4, 1)).unwrap();
        assert_eq!(
            p,
            Perimeter {
                left: true,
                bottom: true,
                right: false,
                top: false
            }
        );
        assert!(perimeter_class(&shape(&[1], &[]), Cell::new(2, 2)).is_err());
    }

    #[test]
    fn rotation() {
        assert_eq!(rotate180(&shape(&[1], &[])), shape(&[1], &[]));
        assert_eq!(rotate180(&shape(&[2, 1], &[])), shape(&[2, 2], &[1]));
    }

    #[test]
    fn from_cells_normalizes_translates() {
        let d = shape(&[5, 5, 5, 4, 4], &[4, 3, 3, 2]).cells().translate(-3, 7);
        assert_eq!(
            SkewShape::from_cells(&d).unwrap(),
            shape(&[5, 5, 5, 4, 4], &[4, 3, 3, 2])
        );
        assert!(SkewShape::from_cells(&cells(&[(1, 1), (2, 2)])).is_err());
        // an empty middle row survives as an equal pair of parts
        let gap = cells(&[(1, 3), (3, 1)]);
        let s = SkewShape::from_cells(&gap).unwrap();
        assert_eq!(s.cells().translate(0, 0).len(), 2);
        assert_eq!(s, shape(&[3, 2, 1], &[2, 2]));
    }

    #[test]
    fn start_and_end_cells() {
        let d = shape(&[6, 6, 6, 4], &[3, 1]).cells();
        assert_eq!(d.start(), Some(Cell::new(4, 1)));
        assert_eq!(d.end(), Some(Cell::new(1, 6)));
    }

    #[test]
    fn connected_shape_counts() {
        let all = connected_shapes(4);
        // ribbons of size n number 2^(n-1); the 2x2 square is the only other one
        assert_eq!(all.iter().filter(|s| s.size() == 3).count(), 4);
        assert_eq!(all.iter().filter(|s| s.size() == 4).count(), 9);
        assert!(
            all.iter()
                .all(|s| is_edgewise_connected(&s.cells()) && s.normalized() == *s)
        );
        let distinct: BTreeSet<&SkewShape> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn all_skew_shapes() {
        let all = skew_shapes(3);
        let connected = all.iter().filter(|s| is_edgewise_connected(&s.cells())).count();
        assert_eq!(connected, connected_shapes(3).len());
        // two cells touching at a corner; a domino and a cell four ways, or three cells
        assert_eq!(all.len() - connected, 1 + 5);
        let distinct: BTreeSet<&SkewShape> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }

    pub(crate) fn arb_shape(max_rows: usize, max_part: u32) -> impl Strategy<Value = SkewShape> {
        (
            prop::collection::vec(1..=max_part, 1..=max_rows),
            prop::collection::vec(0..=max_part, max_rows),
        )
            .prop_map(|(mut lam, raw_mu)| {
                lam.sort_unstable_by(|a, b| b.cmp(a));
                let mut mu: Vec<u32> = lam.iter().zip(&raw_mu).map(|(&l, &m)| m.min(l)).collect();
                mu.sort_unstable_by(|a, b| b.cmp(a));
                // sorting can break containment, so clamp again from the top
                for i in 0..mu.len() {
                    mu[i] = mu[i].min(lam[i]);
                }
                SkewShape::from_parts(&lam, &mu).unwrap()
            })
    }

    proptest! {
        #[test]
        fn size_matches_cells(s in arb_shape(6, 7)) {
            prop_assert_eq!(s.cells().len() as u32, s.lambda().size() - s.mu().size());
        }

        #[test]
        fn strip_implies_thickened(s in arb_shape(5, 6)) {
            let d = s.cells();
            prop_assert!(!is_strip(&d) || is_thickened_strip(&d));
        }

        #[test]
        fn content_constant_on_diagonals(r in -5i32..10, c in -5i32..10) {
            let a = Cell::new(r, c);
            prop_assert_eq!(a.content(), a.shifted(1, 1).content());
        }

        #[test]
        fn rotation_is_an_involution(s in arb_shape(6, 7)) {
            let n = s.normalized();
            let back = rotate180(&rotate180(&s));
            prop_assert_eq!(&back, &n);
            let t = rotate180(&s);
            prop_assert_eq!(t.size(), s.size());
            prop_assert_eq!(is_edgewise_connected(&t.cells()), is_edgewise_connected(&s.cells()));
            prop_assert_eq!(is_strip(&t.cells()), is_strip(&s.cells()));
            prop_assert_eq!(is_thickened_strip(&t.cells()), is_thickened_strip(&s.cells()));
        }

        #[test]
        fn from_cells_round_trips(s in arb_shape(6, 7)) {
            let back = SkewShape::from_cells(&s.cells()).unwrap();
            prop_assert_eq!(back.cells().len(), s.size());
            prop_assert_eq!(back, s.normalized());
        }
    }
}
