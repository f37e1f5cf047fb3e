//! Thickened-strip decompositions of skew shapes: corners, validation,
//! enrichment, box directions, nestedness, the cutting strip and the `#`
//! operation, plus constructions and an exhaustive enumerator.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, SkewShape, components, is_thickened_strip, perimeter_class};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerType {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CornerKind {
    pub kind: CornerType,
    pub special: bool,
}

/// A thickened strip together with its start (bottom row, leftmost) and end
/// (top row, rightmost) cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThickenedStrip {
    cells: Diagram,
    start: Cell,
    end: Cell,
}

impl ThickenedStrip {
    pub fn new(cells: Diagram) -> Result<Self> {
        if !is_thickened_strip(&cells) || cells.is_empty() {
            return Err(Error::NotSkew("not a nonempty thickened strip".into()));
        }
        Ok(Self::unchecked(cells))
    }

    fn unchecked(cells: Diagram) -> Self {
        let start = cells.start().expect("nonempty strip");
        let end = cells.end().expect("nonempty strip");
        ThickenedStrip { cells, start, end }
    }

    pub fn cells(&self) -> &Diagram {
        &self.cells
    }

    pub fn start(&self) -> Cell {
        self.start
    }

    pub fn end(&self) -> Cell {
        self.end
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn is_upper_corner(&self, c: Cell) -> bool {
        self.contains(c) && !self.contains(c.up()) && !self.contains(c.left())
    }

    pub fn is_lower_corner(&self, c: Cell) -> bool {
        self.contains(c) && !self.contains(c.down()) && !self.contains(c.right())
    }

    /// Whether `c` lies in some 2×2 block of the strip.
    pub fn in_block(&self, c: Cell) -> bool {
        [(0, 0), (-1, 0), (0, -1), (-1, -1)].iter().any(|&(dr, dc)| {
            let top_left = c.shifted(dr, dc);
            [(0, 0), (0, 1), (1, 0), (1, 1)]
                .iter()
                .all(|&(r, k)| self.contains(top_left.shifted(r, k)))
        })
    }

    /// A corner that is the start, the end, or inside a 2×2 block.
    pub fn is_special_corner(&self, c: Cell) -> bool {
        self.len() > 1
            && (self.is_upper_corner(c) || self.is_lower_corner(c))
            && (c == self.start || c == self.end || self.in_block(c))
    }

    fn corner_type(&self, c: Cell) -> Option<CornerType> {
        if self.is_upper_corner(c) {
            Some(CornerType::Upper)
        } else if self.is_lower_corner(c) {
            Some(CornerType::Lower)
        } else {
            None
        }
    }
}

/// All corners of a strip with more than one cell.
pub fn special_corners(t: &ThickenedStrip) -> Result<Vec<(Cell, CornerKind)>> {
    if t.len() < 2 {
        return Err(Error::SingleCellStrip);
    }
    Ok(t.cells
        .iter()
        .filter_map(|c| {
            t.corner_type(c).map(|kind| {
                (
                    c,
                    CornerKind {
                        kind,
                        special: t.is_special_corner(c),
                    },
                )
            })
        })
        .collect())
}

/// A cell shared by two strips: a lower corner of one and an upper corner of
/// the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SharedCorner {
    pub cell: Cell,
    pub lower_of: usize,
    pub upper_of: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    shape: SkewShape,
    strips: Vec<ThickenedStrip>,
}

impl Decomposition {
    /// Wrap strips without validating them; see [`validate_decomposition`].
    pub fn new(shape: SkewShape, strips: Vec<Diagram>) -> Result<Self> {
        if strips.iter().any(Diagram::is_empty) {
            return Err(Error::InvalidDecomposition("empty strip".into()));
        }
        let strips = strips.into_iter().map(ThickenedStrip::unchecked).collect();
        Ok(Decomposition { shape, strips })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn strips(&self) -> &[ThickenedStrip] {
        &self.strips
    }

    pub fn strip(&self, i: usize) -> Result<&ThickenedStrip> {
        self.strips.get(i).ok_or(Error::Index(i))
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    /// Total strip size minus shape size.
    pub fn r(&self) -> i64 {
        self.strips.iter().map(|s| s.len() as i64).sum::<i64>() - self.shape.size() as i64
    }

    fn owners(&self) -> BTreeMap<Cell, Vec<usize>> {
        let mut out: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for (i, s) in self.strips.iter().enumerate() {
            for c in s.cells.iter() {
                out.entry(c).or_default().push(i);
            }
        }
        out
    }

    /// Cells lying in two strips, with the strip where each is a lower corner
    /// and the one where it is an upper corner. Cells that fit neither way
    /// are skipped; validation reports them.
    pub fn shared_corners(&self) -> Vec<SharedCorner> {
        self.owners()
            .into_iter()
            .filter(|(_, o)| o.len() == 2)
            .filter_map(|(cell, o)| {
                let (a, b) = (&self.strips[o[0]], &self.strips[o[1]]);
                if a.is_lower_corner(cell) && b.is_upper_corner(cell) {
                    Some(SharedCorner {
                        cell,
                        lower_of: o[0],
                        upper_of: o[1],
                    })
                } else if b.is_lower_corner(cell) && a.is_upper_corner(cell) {
                    Some(SharedCorner {
                        cell,
                        lower_of: o[1],
                        upper_of: o[0],
                    })
                } else {
                    None
                }
            })
            .collect()
    }

    /// Strips sorted by end content (descending), then end row (descending);
    /// when two strips share their end cell the one where it is an upper
    /// corner comes first.
    pub fn canonical(mut self) -> Self {
        self.strips.sort_by(|a, b| {
            let key = |s: &ThickenedStrip| (s.end.content(), s.end.row);
            key(b).cmp(&key(a)).then_with(|| {
                let ua = a.is_upper_corner(a.end) && !a.is_lower_corner(a.end);
                let ub = b.is_upper_corner(b.end) && !b.is_lower_corner(b.end);
                ub.cmp(&ua).then_with(|| a.cells.cmp(&b.cells))
            })
        });
        self
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            shape: self.shape.clone(),
            strips: self
                .strips
                .iter()
                .map(|s| StripJson {
                    boxes: s.cells.to_pairs(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &DecompositionJson) -> Result<Self> {
        let strips = j
            .strips
            .iter()
            .map(|s| s.boxes.iter().map(|&[r, c]| Cell::new(r, c)).collect())
            .collect();
        Decomposition::new(j.shape.clone(), strips)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripJson {
    pub boxes: Vec<[i32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub shape: SkewShape,
    pub strips: Vec<StripJson>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DecompositionJson::deserialize(d)?;
        Decomposition::from_json(&raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    NotThickenedStrip,
    OutsideShape,
    NotCovered,
    StartOffPerimeter,
    EndOffPerimeter,
    TripleOverlap,
    SharedNotSpecialCorner,
    SharedOrientation,
    SingleCellShared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: Clause,
    pub strips: Vec<usize>,
    pub cells: Vec<Cell>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(Cell::to_string).collect();
        write!(
            f,
            "{:?} (strips {:?}; cells {})",
            self.clause,
            self.strips,
            cells.join(" ")
        )
    }
}

fn violation(clause: Clause, strips: Vec<usize>, cells: Vec<Cell>) -> Violation {
    Violation { clause, strips, cells }
}

/// Check every structural requirement of an outside decomposition and report
/// the first one that fails.
pub fn validate_decomposition(d: &Decomposition) -> std::result::Result<(), Violation> {
    let shape = &d.shape;
    for (i, s) in d.strips.iter().enumerate() {
        if !is_thickened_strip(&s.cells) {
            return Err(violation(Clause::NotThickenedStrip, vec![i], s.cells.iter().collect()));
        }
    }
    for (i, s) in d.strips.iter().enumerate() {
        let outside: Vec<Cell> = s.cells.iter().filter(|&c| !shape.contains(c)).collect();
        if !outside.is_empty() {
            return Err(violation(Clause::OutsideShape, vec![i], outside));
        }
    }
    let owners = d.owners();
    let missing: Vec<Cell> = shape.cells().iter().filter(|c| !owners.contains_key(c)).collect();
    if !missing.is_empty() {
        return Err(violation(Clause::NotCovered, vec![], missing));
    }
    for (i, s) in d.strips.iter().enumerate() {
        let start = perimeter_class(shape, s.start).expect("inside the shape");
        if !start.is_entry() {
            return Err(violation(Clause::StartOffPerimeter, vec![i], vec![s.start]));
        }
        let end = perimeter_class(shape, s.end).expect("inside the shape");
        if !end.is_exit() {
            return Err(violation(Clause::EndOffPerimeter, vec![i], vec![s.end]));
        }
    }
    for (&c, o) in &owners {
        if o.len() > 2 {
            return Err(violation(Clause::TripleOverlap, o.clone(), vec![c]));
        }
    }
    // orientation of each overlapping pair: which strip holds the lower corners
    let mut pair_lower: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&c, o) in owners.iter().filter(|(_, o)| o.len() == 2) {
        let (i, j) = (o[0], o[1]);
        let (a, b) = (&d.strips[i], &d.strips[j]);
        if a.len() == 1 || b.len() == 1 {
            return Err(violation(Clause::SingleCellShared, vec![i, j], vec![c]));
        }
        let lower = if a.is_lower_corner(c) && b.is_upper_corner(c) {
            i
        } else if b.is_lower_corner(c) && a.is_upper_corner(c) {
            j
        } else {
            return Err(violation(Clause::SharedNotSpecialCorner, vec![i, j], vec![c]));
        };
        if !a.is_special_corner(c) || !b.is_special_corner(c) {
            return Err(violation(Clause::SharedNotSpecialCorner, vec![i, j], vec![c]));
        }
        if *pair_lower.entry((i, j)).or_insert(lower) != lower {
            return Err(violation(Clause::SharedOrientation, vec![i, j], vec![c]));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Right,
    Up,
    RightAndUp,
}

/// Derived data of a valid decomposition.
struct Analysis<'a> {
    d: &'a Decomposition,
    owners: BTreeMap<Cell, Vec<usize>>,
    special: BTreeSet<Cell>,
    enriched: Vec<Diagram>,
}

impl<'a> Analysis<'a> {
    fn new(d: &'a Decomposition) -> Result<Self> {
        validate_decomposition(d).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
        let shared = d.shared_corners();
        let mut special: BTreeSet<Cell> = shared.iter().map(|s| s.cell).collect();
        for s in &d.strips {
            if s.len() > 1 {
                special.extend(
                    s.cells
                        .iter()
                        .filter(|&c| (s.is_upper_corner(c) || s.is_lower_corner(c)) && s.in_block(c)),
                );
            }
        }
        let enriched = (0..d.strips.len()).map(|i| enriched_strip(d, &shared, i)).collect();
        Ok(Analysis {
            d,
            owners: d.owners(),
            special,
            enriched,
        })
    }

    fn direction(&self, c: Cell) -> Result<Direction> {
        if self.special.contains(&c) {
            return Err(Error::SpecialCorner(c));
        }
        let owner = self.owners.get(&c).ok_or(Error::CellNotInShape(c))?[0];
        let e = &self.enriched[owner];
        match (e.contains(c.right()), e.contains(c.up())) {
            (true, true) => Ok(Direction::RightAndUp),
            (true, false) => Ok(Direction::Right),
            (false, true) => Ok(Direction::Up),
            (false, false) => {
                let p = perimeter_class(&self.d.shape, c)?;
                Ok(if p.top { Direction::Up } else { Direction::Right })
            }
        }
    }

    /// Whether the enriched strip holding `c` also holds its left and lower
    /// neighbours: the mirror image of going right and up.
    fn entered_twice(&self, c: Cell) -> bool {
        if self.special.contains(&c) {
            return false;
        }
        self.owners.get(&c).is_some_and(|o| {
            let e = &self.enriched[o[0]];
            e.contains(c.left()) && e.contains(c.down())
        })
    }

    /// Contents holding at least one special corner.
    fn doubled_contents(&self) -> BTreeSet<i32> {
        self.special.iter().map(|c| c.content()).collect()
    }

    /// The per-diagonal condition, plus the requirement that the cutting
    /// strip can be laid out: a diagonal before a doubled one goes right and
    /// up, and a diagonal after one is entered from the left and from below.
    fn nested(&self) -> bool {
        self.diagonals_coherent() && build_cutting_strip(self).is_ok()
    }

    fn diagonals_coherent(&self) -> bool {
        let by_content = self.d.shape.cells().by_content();
        by_content.iter().all(|(&c, cells)| {
            let all_special = |cs: &Vec<Cell>| cs.iter().all(|x| self.special.contains(x));
            if all_special(cells) || by_content.get(&(c + 1)).is_some_and(all_special) {
                return true;
            }
            let dirs: Option<BTreeSet<Direction>> = cells.iter().map(|&x| self.direction(x).ok()).collect();
            match dirs {
                Some(ds) => ds == BTreeSet::from([Direction::Right]) || ds == BTreeSet::from([Direction::Up]),
                None => false,
            }
        })
    }
}

fn enriched_strip(d: &Decomposition, shared: &[SharedCorner], i: usize) -> Diagram {
    let s = &d.strips[i];
    let mut out = s.cells.clone();
    for end in [s.start, s.end] {
        for sc in shared.iter().filter(|sc| sc.cell == end) {
            let offsets: [(i32, i32); 3] = if sc.lower_of == i {
                [(0, -1), (-1, 0), (-1, -1)]
            } else if sc.upper_of == i {
                [(0, 1), (1, 0), (1, 1)]
            } else {
                continue;
            };
            for (dr, dc) in offsets {
                let n = end.shifted(dr, dc);
                if !s.contains(n) {
                    out.insert(n);
                }
            }
        }
    }
    out
}

/// The enriched strip: the strip plus the cells added at shared start and
/// end corners.
pub fn enrich(d: &Decomposition, i: usize) -> Result<Diagram> {
    d.strip(i)?;
    validate_decomposition(d).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    Ok(enriched_strip(d, &d.shared_corners(), i))
}

/// Direction of a cell that is not a special corner of the decomposition.
pub fn box_direction(d: &Decomposition, c: Cell) -> Result<Direction> {
    Analysis::new(d)?.direction(c)
}

/// Cells that are special corners of the decomposition as a whole: shared
/// cells and corners inside a 2×2 block of their strip.
pub fn decomposition_special_corners(d: &Decomposition) -> Result<BTreeSet<Cell>> {
    Ok(Analysis::new(d)?.special)
}

/// Every diagonal either has one common direction (all right or all up), or
/// it or the next diagonal consists of special corners; moreover the cells
/// around each doubled diagonal split and merge consistently, so that the
/// cutting strip exists. Invalid input is not nested.
pub fn is_nested(d: &Decomposition) -> bool {
    Analysis::new(d).is_ok_and(|a| a.nested())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// A cell of the cutting strip named by its content, with a sign on
/// doubled diagonals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address {
    pub content: i32,
    pub sign: Option<Sign>,
}

impl Address {
    pub const fn plain(content: i32) -> Self {
        Address { content, sign: None }
    }

    pub const fn plus(content: i32) -> Self {
        Address {
            content,
            sign: Some(Sign::Plus),
        }
    }

    pub const fn minus(content: i32) -> Self {
        Address {
            content,
            sign: Some(Sign::Minus),
        }
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            None => write!(f, "[{}]", self.content),
            Some(Sign::Plus) => write!(f, "[{},+]", self.content),
            Some(Sign::Minus) => write!(f, "[{},-]", self.content),
        }
    }
}

impl Serialize for Address {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The cutting strip, placed so that the cell with content `c` lies on the
/// diagonal of content `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuttingStrip {
    cells: Diagram,
    address: BTreeMap<Address, Cell>,
}

impl CuttingStrip {
    pub fn cells(&self) -> &Diagram {
        &self.cells
    }

    pub fn cell(&self, a: Address) -> Option<Cell> {
        self.address.get(&a).copied()
    }

    pub fn addresses(&self) -> impl Iterator<Item = (Address, Cell)> + '_ {
        self.address.iter().map(|(a, c)| (*a, *c))
    }

    /// Contents carrying a `+`/`-` pair.
    pub fn doubled(&self) -> BTreeSet<i32> {
        self.address
            .keys()
            .filter(|a| a.sign.is_some())
            .map(|a| a.content)
            .collect()
    }

    /// Cells strictly between the two contents together with the two named
    /// cells.
    pub fn segment(&self, from: Address, to: Address) -> Result<Diagram> {
        let a = self
            .cell(from)
            .ok_or_else(|| Error::OutOfRange(format!("no cell {from}")))?;
        let b = self
            .cell(to)
            .ok_or_else(|| Error::OutOfRange(format!("no cell {to}")))?;
        let mut out: Diagram = self
            .cells
            .iter()
            .filter(|c| c.content() > from.content && c.content() < to.content)
            .collect();
        out.insert(a);
        out.insert(b);
        Ok(out)
    }
}

/// Build the cutting strip by walking the diagonals of the shape.
pub fn cutting_strip(d: &Decomposition) -> Result<CuttingStrip> {
    let a = Analysis::new(d)?;
    if !a.diagonals_coherent() {
        return Err(Error::NotNested("decomposition is not nested".into()));
    }
    build_cutting_strip(&a)
}

fn build_cutting_strip(a: &Analysis<'_>) -> Result<CuttingStrip> {
    let by_content = a.d.shape.cells().by_content();
    let doubled = a.doubled_contents();
    let (Some(&cmin), Some(&cmax)) = (by_content.keys().next(), by_content.keys().next_back()) else {
        return Ok(CuttingStrip {
            cells: Diagram::new(),
            address: BTreeMap::new(),
        });
    };
    if doubled.iter().any(|c| doubled.contains(&(c + 1))) {
        return Err(Error::NotNested("adjacent doubled diagonals".into()));
    }
    let mut address = BTreeMap::new();
    // the single cell, or the upper cell of the pair, at the current content
    let mut cur = Cell::new(0, cmin);
    let place = |address: &mut BTreeMap<Address, Cell>, c: i32, at: Cell| {
        if doubled.contains(&c) {
            address.insert(Address::plus(c), at);
            address.insert(Address::minus(c), at.shifted(1, 1));
        } else {
            address.insert(Address::plain(c), at);
        }
    };
    place(&mut address, cmin, cur);
    for c in cmin..cmax {
        let next = if doubled.contains(&c) {
            if !doubled.contains(&(c + 1))
                && let Some(x) = by_content[&(c + 1)].iter().find(|&&x| !a.entered_twice(x))
            {
                return Err(Error::NotNested(format!(
                    "{x} follows a doubled diagonal but is not entered from the left and from below"
                )));
            }
            cur.right()
        } else {
            let dirs: BTreeSet<Direction> = by_content[&c].iter().map(|&x| a.direction(x)).collect::<Result<_>>()?;
            if doubled.contains(&(c + 1)) {
                if dirs != BTreeSet::from([Direction::RightAndUp]) {
                    return Err(Error::NotNested(format!(
                        "diagonal {c} precedes a doubled diagonal but does not go right and up"
                    )));
                }
                cur.up()
            } else if dirs == BTreeSet::from([Direction::Right]) {
                cur.right()
            } else if dirs == BTreeSet::from([Direction::Up]) {
                cur.up()
            } else {
                return Err(Error::NotNested(format!("diagonal {c} has mixed directions")));
            }
        };
        cur = next;
        place(&mut address, c + 1, cur);
    }
    let mut cells: Diagram = address.values().copied().collect();
    // a pair at either end still needs its 2×2 block
    if doubled.contains(&cmin) {
        let low = address[&Address::plus(cmin)].down();
        cells.insert(low);
        address.insert(Address::plain(cmin - 1), low);
    }
    if doubled.contains(&cmax) {
        let high = address[&Address::plus(cmax)].right();
        cells.insert(high);
        address.insert(Address::plain(cmax + 1), high);
    }
    if !is_thickened_strip(&cells) {
        return Err(Error::Internal("cutting strip is not a thickened strip".into()));
    }
    Ok(CuttingStrip { cells, address })
}

fn endpoint_address(doubled: &BTreeSet<i32>, s: &ThickenedStrip, c: Cell) -> Result<Address> {
    let k = c.content();
    if !doubled.contains(&k) {
        return Ok(Address::plain(k));
    }
    match (s.is_upper_corner(c), s.is_lower_corner(c)) {
        (true, false) => Ok(Address::plus(k)),
        (false, true) => Ok(Address::minus(k)),
        _ => Err(Error::NotNested(format!(
            "cannot place endpoint {c} on doubled diagonal {k}"
        ))),
    }
}

/// Addresses of the start and end cells of strip `i` in the cutting strip.
pub fn endpoints(d: &Decomposition, i: usize) -> Result<(Address, Address)> {
    let a = Analysis::new(d)?;
    if !a.diagonals_coherent() {
        return Err(Error::NotNested("decomposition is not nested".into()));
    }
    strip_endpoints(&a, &a.doubled_contents(), i)
}

fn strip_endpoints(a: &Analysis<'_>, doubled: &BTreeSet<i32>, i: usize) -> Result<(Address, Address)> {
    let s = a.d.strip(i)?;
    Ok((
        endpoint_address(doubled, s, s.start)?,
        endpoint_address(doubled, s, s.end)?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SharpResult {
    Defined(Diagram),
    Empty,
    Undefined,
}

impl SharpResult {
    /// The canonical shape of the segment; the empty shape for `Empty`.
    pub fn shape(&self) -> Option<SkewShape> {
        match self {
            SharpResult::Defined(d) => SkewShape::from_cells(d).ok(),
            SharpResult::Empty => Some(SkewShape::empty()),
            SharpResult::Undefined => None,
        }
    }
}

/// Everything needed to evaluate `#` on one decomposition.
#[derive(Clone, Debug)]
pub struct SharpTable {
    pub cutting: CuttingStrip,
    pub endpoints: Vec<(Address, Address)>,
}

impl SharpTable {
    pub fn new(d: &Decomposition) -> Result<Self> {
        let a = Analysis::new(d)?;
        if !a.diagonals_coherent() {
            return Err(Error::NotNested("decomposition is not nested".into()));
        }
        let cutting = build_cutting_strip(&a)?;
        let doubled = a.doubled_contents();
        let endpoints = (0..d.len())
            .map(|i| strip_endpoints(&a, &doubled, i))
            .collect::<Result<_>>()?;
        Ok(SharpTable { cutting, endpoints })
    }

    /// The segment from the start of strip `j` to the end of strip `i`.
    pub fn sharp(&self, i: usize, j: usize) -> Result<SharpResult> {
        let q = self.endpoints.get(i).ok_or(Error::Index(i))?.1;
        let p = self.endpoints.get(j).ok_or(Error::Index(j))?.0;
        let (cj, ci) = (p.content, q.content);
        if cj < ci || p == q {
            Ok(SharpResult::Defined(self.cutting.segment(p, q)?))
        } else if cj == ci || cj == ci + 1 {
            Ok(SharpResult::Empty)
        } else {
            Ok(SharpResult::Undefined)
        }
    }
}

pub fn sharp(d: &Decomposition, i: usize, j: usize) -> Result<SharpResult> {
    SharpTable::new(d)?.sharp(i, j)
}

/// Kind of every diagonal in a cutting-strip pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagonalKind {
    Right,
    Up,
    RightAndUp,
    /// Every cell on the diagonal is split into an upper and a lower corner.
    Pair,
}

type Node = (Cell, Option<Sign>);

/// Assemble the decomposition whose strips follow the given diagonal
/// pattern. Cells on `Pair` diagonals may end up shared between two strips.
pub fn decomposition_from_pattern(shape: &SkewShape, pattern: &BTreeMap<i32, DiagonalKind>) -> Result<Decomposition> {
    let cells = shape.cells();
    let kind = |c: Cell| pattern.get(&c.content()).copied();
    let mut nodes: Vec<Node> = Vec::new();
    for c in cells.iter() {
        match kind(c).ok_or_else(|| Error::OutOfRange(format!("no pattern for {c}")))? {
            DiagonalKind::Pair => {
                nodes.push((c, Some(Sign::Plus)));
                nodes.push((c, Some(Sign::Minus)));
            }
            _ => nodes.push((c, None)),
        }
    }
    let index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    // target entered from below lands on the upper half, from the left on the lower
    let target = |to: Cell, from_below: bool| -> Option<usize> {
        if !cells.contains(to) {
            return None;
        }
        let sign = match kind(to)? {
            DiagonalKind::Pair => Some(if from_below { Sign::Plus } else { Sign::Minus }),
            _ => None,
        };
        index.get(&(to, sign)).copied()
    };
    let mut uf = UnionFind::new(nodes.len());
    let mut degree = vec![0usize; nodes.len()];
    for (i, &(c, sign)) in nodes.iter().enumerate() {
        let (right, up) = match (kind(c).expect("checked above"), sign) {
            (DiagonalKind::Right, _) => (true, false),
            (DiagonalKind::Up, _) => (false, true),
            (DiagonalKind::RightAndUp, _) => (true, true),
            (DiagonalKind::Pair, Some(Sign::Plus)) => (true, false),
            (DiagonalKind::Pair, _) => (false, true),
        };
        let links = [
            right.then(|| target(c.right(), false)),
            up.then(|| target(c.up(), true)),
        ];
        for j in links.into_iter().flatten().flatten() {
            uf.union(i, j);
            degree[i] += 1;
            degree[j] += 1;
        }
    }
    let mut groups: BTreeMap<usize, Diagram> = BTreeMap::new();
    for (i, &(c, sign)) in nodes.iter().enumerate() {
        if sign.is_some() && degree[i] == 0 {
            let other = index[&(
                c,
                Some(if sign == Some(Sign::Plus) {
                    Sign::Minus
                } else {
                    Sign::Plus
                }),
            )];
            // an isolated half is dropped unless its partner is isolated too
            if degree[other] > 0 || sign == Some(Sign::Minus) {
                continue;
            }
        }
        groups.entry(uf.find(i)).or_default().insert(c);
    }
    Ok(Decomposition::new(shape.clone(), groups.into_values().collect())?.canonical())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut k = i;
        while self.0[k] != r {
            let next = self.0[k];
            self.0[k] = r;
            k = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Peel off the outer rim (cells with no cell diagonally below-right),
/// one strip per rim component, until nothing is left.
pub fn peel_rim(shape: &SkewShape) -> Result<Decomposition> {
    let mut left = shape.cells();
    if !crate::shapes::is_edgewise_connected(&left) {
        return Err(Error::Disconnected);
    }
    let mut strips = Vec::new();
    while !left.is_empty() {
        let rim: Diagram = left.iter().filter(|c| !left.contains(c.shifted(1, 1))).collect();
        for c in rim.iter() {
            left.remove(c);
        }
        strips.extend(components(&rim));
    }
    Ok(Decomposition::new(shape.clone(), strips)?.canonical())
}

/// The diagonal pattern of a nested decomposition without doubled
/// diagonals, read off from the directions of its cells.
fn rim_pattern(d: &Decomposition) -> Option<BTreeMap<i32, DiagonalKind>> {
    let a = Analysis::new(d).ok()?;
    let mut out = BTreeMap::new();
    for (c, cells) in d.shape.cells().by_content() {
        let dirs: BTreeSet<Direction> = cells.iter().map(|&x| a.direction(x).ok()).collect::<Option<_>>()?;
        let kind = match dirs.into_iter().collect::<Vec<_>>().as_slice() {
            [Direction::Right] => DiagonalKind::Right,
            [Direction::Up] => DiagonalKind::Up,
            _ => return None,
        };
        out.insert(c, kind);
    }
    Some(out)
}

/// Like [`peel_rim`], but every right-then-up turn of the outer rim whose
/// inside corner is filled is thickened into a 2×2 block. Falls back to the
/// plain rim peel when the thickened pattern does not give a valid nested
/// decomposition.
pub fn peel_thick_rim(shape: &SkewShape) -> Result<Decomposition> {
    let thin = peel_rim(shape)?;
    let Some(mut pattern) = rim_pattern(&thin) else {
        return Ok(thin);
    };
    let cells = shape.cells();
    let by_content = cells.by_content();
    let turns: Vec<i32> = pattern
        .iter()
        .filter(|&(&c, &k)| k == DiagonalKind::Up && pattern.get(&(c - 1)) == Some(&DiagonalKind::Right))
        .map(|(&c, _)| c)
        .collect();
    for c in turns {
        let outer = *by_content[&c].iter().max_by_key(|x| x.row).expect("nonempty diagonal");
        if cells.contains(outer.shifted(-1, -1)) {
            pattern.insert(c, DiagonalKind::Pair);
            pattern.insert(c - 1, DiagonalKind::RightAndUp);
        }
    }
    match decomposition_from_pattern(shape, &pattern) {
        Ok(d) if is_nested(&d) => Ok(d),
        _ => Ok(thin),
    }
}

/// Options for [`enumerate_decompositions`].
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions<'a> {
    pub max_g: usize,
    /// Keep only decompositions whose shared cells are exactly these.
    pub shared: Option<&'a [Cell]>,
    /// Keep only nested decompositions.
    pub nested_only: bool,
}

/// Every outside nested decomposition with at most `max_g` strips. The
/// search is exhaustive; keep shapes to a dozen or so cells.
pub fn enumerate_nested_decompositions(shape: &SkewShape, max_g: usize) -> Vec<Decomposition> {
    enumerate_decompositions(
        shape,
        &EnumerateOptions {
            max_g,
            shared: None,
            nested_only: true,
        },
    )
}

pub fn enumerate_nested_decompositions_with(
    shape: &SkewShape,
    max_g: usize,
    shared: Option<&[Cell]>,
) -> Vec<Decomposition> {
    enumerate_decompositions(
        shape,
        &EnumerateOptions {
            max_g,
            shared,
            nested_only: true,
        },
    )
}

struct Candidate {
    mask: u128,
    upper: u128,
    lower: u128,
    single: bool,
    cells: Diagram,
}

/// Valid outside decompositions (optionally only nested ones) found by
/// covering the shape strip by strip.
pub fn enumerate_decompositions(shape: &SkewShape, opts: &EnumerateOptions<'_>) -> Vec<Decomposition> {
    let cells: Vec<Cell> = shape.cells().iter().collect();
    if cells.is_empty() || cells.len() > 128 {
        return Vec::new();
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let bit = |c: Cell| 1u128 << index[&c];
    let full: u128 = if cells.len() == 128 {
        u128::MAX
    } else {
        (1u128 << cells.len()) - 1
    };
    let required: Option<u128> = opts
        .shared
        .map(|s| s.iter().filter_map(|c| index.get(c)).fold(0, |m, &i| m | (1 << i)));
    if let Some(s) = opts.shared
        && s.iter().any(|c| !index.contains_key(c))
    {
        return Vec::new();
    }
    let cands: Vec<Candidate> = strip_candidates(shape)
        .into_iter()
        .map(|d| {
            let t = ThickenedStrip::unchecked(d.clone());
            let pick = |f: &dyn Fn(Cell) -> bool| d.iter().filter(|&c| f(c)).fold(0u128, |m, c| m | bit(c));
            Candidate {
                mask: pick(&|_| true),
                upper: pick(&|c| t.is_upper_corner(c) && t.is_special_corner(c)),
                lower: pick(&|c| t.is_lower_corner(c) && t.is_special_corner(c)),
                single: d.len() == 1,
                cells: d,
            }
        })
        .collect();
    let mut by_cell: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (k, c) in cands.iter().enumerate() {
        for (i, list) in by_cell.iter_mut().enumerate() {
            if c.mask & (1 << i) != 0 {
                list.push(k);
            }
        }
    }
    let mut search = Search {
        cands: &cands,
        by_cell: &by_cell,
        full,
        required,
        max_g: opts.max_g,
        seen: HashSet::new(),
        found: Vec::new(),
    };
    search.run(0, 0, &mut Vec::new());
    let mut out: Vec<Decomposition> = search
        .found
        .into_iter()
        .filter_map(|ks| {
            let strips = ks.iter().map(|&k| cands[k].cells.clone()).collect();
            let d = Decomposition::new(shape.clone(), strips).ok()?.canonical();
            validate_decomposition(&d).ok()?;
            (!opts.nested_only || is_nested(&d)).then_some(d)
        })
        .collect();
    out.sort_by(|a, b| {
        let key = |d: &Decomposition| (d.len(), d.strips.iter().map(|s| s.cells.clone()).collect::<Vec<_>>());
        key(a).cmp(&key(b))
    });
    out
}

struct Search<'a> {
    cands: &'a [Candidate],
    by_cell: &'a [Vec<usize>],
    full: u128,
    required: Option<u128>,
    max_g: usize,
    seen: HashSet<Vec<usize>>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn compatible(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.cands[a], &self.cands[b]);
        let overlap = x.mask & y.mask;
        if overlap == 0 {
            return true;
        }
        if x.single || y.single {
            return false;
        }
        overlap & !(x.lower & y.upper) == 0 || overlap & !(y.lower & x.upper) == 0
    }

    fn run(&mut self, once: u128, twice: u128, chosen: &mut Vec<usize>) {
        if once == self.full {
            if self.required.is_none_or(|r| r == twice) {
                let mut key = chosen.clone();
                key.sort_unstable();
                if self.seen.insert(key.clone()) {
                    self.found.push(key);
                }
            }
            return;
        }
        if chosen.len() >= self.max_g {
            return;
        }
        let first = (!once & self.full).trailing_zeros() as usize;
        for &k in &self.by_cell[first] {
            let m = self.cands[k].mask;
            let overlap = m & once;
            if overlap & twice != 0 {
                continue;
            }
            if let Some(r) = self.required
                && overlap & !r != 0
            {
                continue;
            }
            if !chosen.iter().all(|&j| self.compatible(j, k)) {
                continue;
            }
            chosen.push(k);
            self.run(once | m, twice | overlap, chosen);
            chosen.pop();
        }
    }
}

/// Connected thickened sub-strips of the shape whose start lies on the left
/// or bottom edge and whose end lies on the right or top edge.
fn strip_candidates(shape: &SkewShape) -> Vec<Diagram> {
    let rows: Vec<(i32, i32)> = (0..shape.rows())
        .map(|i| (shape.mu().part(i) as i32 + 1, shape.lambda().part(i) as i32))
        .collect();
    let mut out = Vec::new();
    for (top, &(lo, hi)) in rows.iter().enumerate() {
        for a in lo..=hi {
            for b in a..=hi {
                let mut chain = vec![(a, b)];
                extend_candidates(&rows, top, &mut chain, &mut out);
            }
        }
    }
    out.retain(|d| {
        let s = d.start().expect("nonempty");
        let e = d.end().expect("nonempty");
        perimeter_class(shape, s).is_ok_and(|p| p.is_entry()) && perimeter_class(shape, e).is_ok_and(|p| p.is_exit())
    });
    out
}

fn extend_candidates(rows: &[(i32, i32)], top: usize, chain: &mut Vec<(i32, i32)>, out: &mut Vec<Diagram>) {
    out.push(
        chain
            .iter()
            .enumerate()
            .flat_map(|(k, &(a, b))| (a..=b).map(move |c| Cell::new((top + k) as i32 + 1, c)))
            .collect(),
    );
    let next = top + chain.len();
    let Some(&(lo, hi)) = rows.get(next) else { return };
    let &(pa, pb) = chain.last().expect("nonempty chain");
    for a in lo..=pa {
        for b in a.max(pa)..=hi.min(pb) {
            // at most two shared columns between neighbouring rows
            if b - pa + 1 > 2 {
                continue;
            }
            // at most one column common to three consecutive rows
            if chain.len() >= 2 {
                let (ga, _) = chain[chain.len() - 2];
                if b - ga + 1 > 1 {
                    continue;
                }
            }
            chain.push((a, b));
            extend_candidates(rows, top, chain, out);
            chain.pop();
        }
    }
}
