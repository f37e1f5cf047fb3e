//! Double lattice paths for thickened-strip tableaux.
//!
//! A tableau on a thickened strip becomes a pair of lattice paths, an upper
//! and a lower one, with one non-vertical step per diagonal of the strip in
//! each. A box of content `c` holding `q` puts a step ending at `(c+1, q)`:
//! horizontal when the box continues a row, diagonal when it sits on top of
//! the previous diagonal. Paths are stored as their non-vertical steps; the
//! vertical filler is implied and only materialized for geometric checks,
//! with the top of the plane placed just above the largest entry in play.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::decomp::{Decomposition, SharpResult, SharpTable};
use crate::error::{Error, Result};
use crate::polynomial::Monomial;
use crate::shapes::{Cell, Diagram, perimeter_class};
use crate::tableaux::{SsytIter, Tableau};

/// Height of a path endpoint: the bottom line `y = 1` or the top of the
/// plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Bottom,
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Endpoint {
    pub x: i32,
    pub level: Level,
}

impl Endpoint {
    pub fn new(x: i32, level: Level) -> Self {
        Endpoint { x, level }
    }

    fn y(self, top: u32) -> u32 {
        match self.level {
            Level::Bottom => 1,
            Level::Top => top,
        }
    }
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.level {
            Level::Bottom => write!(f, "({},1)", self.x),
            Level::Top => write!(f, "({},inf)", self.x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// `(1, 0)`
    Horizontal,
    /// `(1, -1)`
    Diagonal,
}

/// A non-vertical step leaving the line `x` and ending at `(x + 1, end_y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Step {
    pub x: i32,
    pub kind: StepKind,
    pub end_y: u32,
}

impl Step {
    pub fn start(self) -> (i32, u32) {
        match self.kind {
            StepKind::Horizontal => (self.x, self.end_y),
            StepKind::Diagonal => (self.x, self.end_y + 1),
        }
    }

    pub fn end(self) -> (i32, u32) {
        (self.x + 1, self.end_y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DoubleLatticePath {
    pub start: Endpoint,
    pub end: Endpoint,
    /// One step per diagonal, at or above the matching lower step.
    pub upper: Vec<Step>,
    pub lower: Vec<Step>,
}

impl DoubleLatticePath {
    /// The path with no non-vertical steps.
    pub fn vertical(start: Endpoint, end: Endpoint) -> Self {
        DoubleLatticePath {
            start,
            end,
            upper: Vec::new(),
            lower: Vec::new(),
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.upper.iter().chain(&self.lower).copied()
    }

    fn max_y(&self) -> u32 {
        self.steps().map(|s| s.end_y + 1).max().unwrap_or(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Up,
    Down,
    Step(StepKind),
}

fn moves(start: Endpoint, end: Endpoint, steps: &[Step], top: u32) -> Vec<Move> {
    let mut out = Vec::new();
    let mut y = start.y(top);
    let climb = |from: u32, to: u32, out: &mut Vec<Move>| {
        let m = if to > from { Move::Up } else { Move::Down };
        out.extend(std::iter::repeat_n(m, from.abs_diff(to) as usize));
    };
    for s in steps {
        let (_, sy) = s.start();
        climb(y, sy, &mut out);
        out.push(Move::Step(s.kind));
        y = s.end_y;
    }
    climb(y, end.y(top), &mut out);
    out
}

/// Every lattice point one component passes through.
fn points(start: Endpoint, end: Endpoint, steps: &[Step], top: u32) -> Vec<(i32, u32)> {
    let (mut x, mut y) = (start.x, start.y(top));
    let mut out = vec![(x, y)];
    for m in moves(start, end, steps, top) {
        match m {
            Move::Up => y += 1,
            Move::Down => y -= 1,
            Move::Step(StepKind::Horizontal) => x += 1,
            Move::Step(StepKind::Diagonal) => {
                x += 1;
                y -= 1;
            }
        }
        out.push((x, y));
    }
    out
}

/// Down must not precede up or horizontal; up must not precede down or
/// diagonal.
fn moves_ok(ms: &[Move]) -> bool {
    ms.windows(2).all(|w| {
        !matches!(
            (w[0], w[1]),
            (Move::Down, Move::Up | Move::Step(StepKind::Horizontal))
                | (Move::Up, Move::Down | Move::Step(StepKind::Diagonal))
        )
    })
}

/// What a segment prescribes on one diagonal: the step kinds of the upper
/// and lower path, and the boxes whose entries they carry.
#[derive(Clone, Debug)]
struct Gap {
    x: i32,
    upper: (StepKind, Cell),
    lower: (StepKind, Cell),
}

fn step_kinds(cells: &Diagram, c: Cell, start: Cell, level: Level) -> Vec<StepKind> {
    let mut kinds = Vec::new();
    if cells.contains(c.left()) || (c == start && level == Level::Bottom) {
        kinds.push(StepKind::Horizontal);
    }
    if cells.contains(c.down()) || (c == start && level == Level::Top) {
        kinds.push(StepKind::Diagonal);
    }
    kinds
}

fn plan(cells: &Diagram, start: Endpoint) -> Result<Vec<Gap>> {
    let Some(first) = cells.start() else {
        return Ok(Vec::new());
    };
    if first.content() != start.x {
        return Err(Error::MalformedPath(format!(
            "segment starts on diagonal {} but the path starts at {start}",
            first.content()
        )));
    }
    let mut gaps = Vec::new();
    for (x, boxes) in cells.by_content() {
        let bad = || Error::MalformedPath(format!("diagonal {x} is not part of a thickened strip"));
        let kinds: Vec<(Cell, Vec<StepKind>)> = boxes
            .iter()
            .map(|&b| (b, step_kinds(cells, b, first, start.level)))
            .collect();
        let gap = match kinds.as_slice() {
            [(b, k)] if k.len() == 1 => Gap {
                x,
                upper: (k[0], *b),
                lower: (k[0], *b),
            },
            [(b, k)] if k.len() == 2 => Gap {
                x,
                upper: (StepKind::Diagonal, *b),
                lower: (StepKind::Horizontal, *b),
            },
            // the upper-left box of the pair sits on the previous diagonal
            [(a, ka), (b, kb)] if ka == &[StepKind::Diagonal] && kb == &[StepKind::Horizontal] => Gap {
                x,
                upper: (StepKind::Horizontal, *b),
                lower: (StepKind::Diagonal, *a),
            },
            _ => return Err(bad()),
        };
        gaps.push(gap);
    }
    Ok(gaps)
}

/// Map a tableau on a thickened strip (or segment) to its double lattice
/// path between the given endpoints.
pub fn encode(t: &Tableau, cells: &Diagram, start: Endpoint, end: Endpoint) -> Result<DoubleLatticePath> {
    if t.cells() != *cells {
        return Err(Error::Tableau("tableau does not fill the segment".into()));
    }
    if !t.is_semistandard() {
        return Err(Error::Tableau("tableau is not semistandard".into()));
    }
    let gaps = plan(cells, start)?;
    if let Some(last) = gaps.last()
        && last.x + 1 != end.x
    {
        return Err(Error::MalformedPath(format!(
            "segment ends on diagonal {} but the path ends at {end}",
            last.x
        )));
    }
    let entry = |c: Cell| t.get(c).expect("tableau covers the segment");
    let step = |x: i32, (kind, c): (StepKind, Cell)| Step {
        x,
        kind,
        end_y: entry(c),
    };
    Ok(DoubleLatticePath {
        start,
        end,
        upper: gaps.iter().map(|g| step(g.x, g.upper)).collect(),
        lower: gaps.iter().map(|g| step(g.x, g.lower)).collect(),
    })
}

/// Check a path against the step plan of a segment and the vertical-step
/// rules, then read the tableau back.
pub fn decode(p: &DoubleLatticePath, cells: &Diagram) -> Result<Tableau> {
    let bad = |m: String| Error::MalformedPath(m);
    let gaps = plan(cells, p.start)?;
    if p.upper.len() != gaps.len() || p.lower.len() != gaps.len() {
        return Err(bad(format!("expected {} non-vertical steps in each path", gaps.len())));
    }
    if let Some(last) = gaps.last()
        && last.x + 1 != p.end.x
    {
        return Err(bad(format!("path ends at {} instead of line {}", p.end, last.x + 1)));
    }
    let mut t = Tableau::default();
    for ((g, u), l) in gaps.iter().zip(&p.upper).zip(&p.lower) {
        if u.x != g.x || l.x != g.x || u.kind != g.upper.0 || l.kind != g.lower.0 {
            return Err(bad(format!(
                "steps between lines {} and {} do not match the segment",
                g.x,
                g.x + 1
            )));
        }
        if u.end_y == 0 || l.end_y == 0 {
            return Err(bad("steps must end at height 1 or more".into()));
        }
        if g.upper.1 == g.lower.1 {
            if u.end_y != l.end_y {
                return Err(bad(format!("the two steps of diagonal {} must end together", g.x)));
            }
        } else if u.end_y <= l.end_y {
            return Err(bad(format!("upper step of diagonal {} is below the lower one", g.x)));
        }
        t.entries.insert(g.upper.1, u.end_y);
        t.entries.insert(g.lower.1, l.end_y);
    }
    let top = p.max_y() + 1;
    if !moves_ok(&moves(p.start, p.end, &p.upper, top)) || !moves_ok(&moves(p.start, p.end, &p.lower, top)) {
        return Err(bad("a vertical run turns back or leads into the wrong step".into()));
    }
    if !t.is_semistandard() {
        return Err(bad(
            "the entries read off the path do not form a semistandard tableau".into()
        ));
    }
    Ok(t)
}

/// Start point of the path for strip `j`.
pub fn start_point(d: &Decomposition, j: usize) -> Result<Endpoint> {
    let s = d.strip(j)?;
    let c = s.start();
    let shared = d.shared_corners().iter().any(|sc| sc.cell == c);
    let level = if shared {
        if s.is_lower_corner(c) {
            Level::Bottom
        } else {
            Level::Top
        }
    } else if perimeter_class(d.shape(), c)?.left {
        Level::Bottom
    } else {
        Level::Top
    };
    Ok(Endpoint::new(c.content(), level))
}

/// End point of the path for strip `i`.
pub fn end_point(d: &Decomposition, i: usize) -> Result<Endpoint> {
    let s = d.strip(i)?;
    let c = s.end();
    let shared = d.shared_corners().iter().any(|sc| sc.cell == c);
    let level = if shared {
        if s.is_lower_corner(c) {
            Level::Bottom
        } else {
            Level::Top
        }
    } else if perimeter_class(d.shape(), c)?.right {
        Level::Top
    } else {
        Level::Bottom
    };
    Ok(Endpoint::new(c.content() + 1, level))
}

/// `(u_j, v_i)`: where paths for the segment `i # j` start and end.
pub fn path_endpoints(i: usize, j: usize, d: &Decomposition) -> Result<(Endpoint, Endpoint)> {
    Ok((start_point(d, j)?, end_point(d, i)?))
}

fn segment(d: &Decomposition, i: usize, j: usize) -> Result<Option<Diagram>> {
    match SharpTable::new(d)?.sharp(i, j)? {
        SharpResult::Defined(cells) => Ok(Some(cells)),
        SharpResult::Empty => Ok(None),
        SharpResult::Undefined => Err(Error::OutOfRange(format!("segment {i} # {j} is undefined"))),
    }
}

/// The path of a tableau on the segment `i # j`. An empty segment gives the
/// all-vertical path.
pub fn tableau_to_path(t: &Tableau, i: usize, j: usize, d: &Decomposition) -> Result<DoubleLatticePath> {
    let (u, v) = path_endpoints(i, j, d)?;
    match segment(d, i, j)? {
        Some(cells) => encode(t, &cells, u, v),
        None if t.entries.is_empty() => Ok(DoubleLatticePath::vertical(u, v)),
        None => Err(Error::Tableau("the segment is empty".into())),
    }
}

pub fn path_to_tableau(p: &DoubleLatticePath, i: usize, j: usize, d: &Decomposition) -> Result<Tableau> {
    let (u, v) = path_endpoints(i, j, d)?;
    if (p.start, p.end) != (u, v) {
        return Err(Error::MalformedPath(format!("expected a path from {u} to {v}")));
    }
    match segment(d, i, j)? {
        Some(cells) => decode(p, &cells),
        None if p.upper.is_empty() && p.lower.is_empty() => Ok(Tableau::default()),
        None => Err(Error::MalformedPath("an empty segment has only vertical steps".into())),
    }
}

/// Product of `x_y` over the endpoints of non-vertical steps; an upper and
/// lower step ending at the same point count once.
pub fn path_weight(p: &DoubleLatticePath, nvars: usize) -> Result<Monomial> {
    let ends: BTreeSet<(i32, u32)> = p.steps().map(Step::end).collect();
    let mut e = vec![0u32; nvars];
    for (_, y) in ends {
        let slot = (y as usize).checked_sub(1).and_then(|k| e.get_mut(k));
        *slot.ok_or(Error::EntryTooLarge { entry: y, nvars })? += 1;
    }
    Ok(Monomial::new(e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathTuple {
    pub paths: Vec<DoubleLatticePath>,
    pub touchpoints: Vec<(i32, u32)>,
    pub noncrossing: bool,
}

struct Traced {
    points: BTreeSet<(i32, u32)>,
    diagonal_ends: BTreeSet<(i32, u32)>,
    horizontal_ends: BTreeSet<(i32, u32)>,
}

fn trace(p: &DoubleLatticePath, top: u32) -> Traced {
    let mut pts: BTreeSet<_> = points(p.start, p.end, &p.upper, top).into_iter().collect();
    pts.extend(points(p.start, p.end, &p.lower, top));
    let ends = |k: StepKind| p.steps().filter(|s| s.kind == k).map(Step::end).collect();
    Traced {
        points: pts,
        diagonal_ends: ends(StepKind::Diagonal),
        horizontal_ends: ends(StepKind::Horizontal),
    }
}

/// Whether no two paths cross, and the points where they touch. Two paths
/// may only meet where a diagonal step of one and a horizontal step of the
/// other end together, with the same path on top at every such point.
pub fn is_noncrossing(paths: &[DoubleLatticePath]) -> (bool, Vec<(i32, u32)>) {
    let top = paths.iter().map(DoubleLatticePath::max_y).max().unwrap_or(1) + 1;
    let traced: Vec<Traced> = paths.iter().map(|p| trace(p, top)).collect();
    let mut touch = BTreeSet::new();
    let mut ok = true;
    for (a_ix, a) in traced.iter().enumerate() {
        for b in &traced[a_ix + 1..] {
            let (mut a_top, mut b_top) = (true, true);
            for pt in a.points.intersection(&b.points) {
                a_top &= a.diagonal_ends.contains(pt) && b.horizontal_ends.contains(pt);
                b_top &= b.diagonal_ends.contains(pt) && a.horizontal_ends.contains(pt);
                touch.insert(*pt);
            }
            ok &= a_top || b_top;
        }
    }
    (ok, touch.into_iter().collect())
}

/// Restrict a tableau of the whole shape to each strip and map each piece
/// to its path.
pub fn tableau_tuple_to_path_tuple(t: &Tableau, d: &Decomposition) -> Result<PathTuple> {
    if t.cells() != d.shape().cells() {
        return Err(Error::Tableau("tableau does not fill the shape".into()));
    }
    let mut paths = Vec::with_capacity(d.len());
    for (i, s) in d.strips().iter().enumerate() {
        let piece = Tableau {
            entries: s.cells().iter().map(|c| (c, t.entries[&c])).collect(),
        };
        paths.push(encode(&piece, s.cells(), start_point(d, i)?, end_point(d, i)?)?);
    }
    let (noncrossing, touchpoints) = is_noncrossing(&paths);
    Ok(PathTuple {
        paths,
        touchpoints,
        noncrossing,
    })
}

/// Strip indices sorted by start point and by end point, under the orders
/// that make non-crossing tuples use the identity pairing.
pub fn endpoint_orders(d: &Decomposition) -> Result<(Vec<usize>, Vec<usize>)> {
    let starts: Vec<Endpoint> = (0..d.len()).map(|j| start_point(d, j)).collect::<Result<_>>()?;
    let ends: Vec<Endpoint> = (0..d.len()).map(|i| end_point(d, i)).collect::<Result<_>>()?;
    let start_key = |e: Endpoint| match e.level {
        Level::Top => (0, -e.x),
        Level::Bottom => (1, e.x),
    };
    let end_key = |e: Endpoint| match e.level {
        Level::Top => (0, e.x),
        Level::Bottom => (1, -e.x),
    };
    let mut us: Vec<usize> = (0..d.len()).collect();
    us.sort_by_key(|&k| start_key(starts[k]));
    let mut vs: Vec<usize> = (0..d.len()).collect();
    vs.sort_by_key(|&k| end_key(ends[k]));
    Ok((us, vs))
}

/// Whether the start order and the end order agree on every pair of strips
/// whose paths share a vertical line. Paths over disjoint ranges of lines
/// cannot meet, so their relative order is irrelevant and may differ.
pub fn endpoint_orders_agree(d: &Decomposition) -> Result<bool> {
    let (us, vs) = endpoint_orders(d)?;
    let rank = |order: &[usize]| {
        let mut r = vec![0; order.len()];
        for (pos, &k) in order.iter().enumerate() {
            r[k] = pos;
        }
        r
    };
    let (ur, vr) = (rank(&us), rank(&vs));
    let spans: Vec<(i32, i32)> = (0..d.len())
        .map(|k| Ok((start_point(d, k)?.x, end_point(d, k)?.x)))
        .collect::<Result<_>>()?;
    Ok((0..d.len()).all(|a| {
        (a + 1..d.len()).all(|b| {
            let meet = spans[a].0.max(spans[b].0) <= spans[a].1.min(spans[b].1);
            !meet || (ur[a] < ur[b]) == (vr[a] < vr[b])
        })
    }))
}

/// Endpoints of the non-vertical steps of a path, grouped by line.
pub fn step_ends(p: &DoubleLatticePath) -> BTreeMap<i32, BTreeSet<u32>> {
    let mut out: BTreeMap<i32, BTreeSet<u32>> = BTreeMap::new();
    for s in p.steps() {
        out.entry(s.x + 1).or_default().insert(s.end_y);
    }
    out
}

/// Tallies from an exhaustive check of the tableau-to-path maps on one
/// decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub segments: usize,
    pub segment_tableaux: usize,
    pub shape_tableaux: usize,
    /// Strip-tableau combinations tried for surjectivity; zero if skipped.
    pub combinations: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: BijectionReport) {
        self.segments += other.segments;
        self.segment_tableaux += other.segment_tableaux;
        self.shape_tableaux += other.shape_tableaux;
        self.combinations += other.combinations;
        self.failures.extend(other.failures);
    }
}

/// Surjectivity is only checked when the product of strip tableau counts
/// stays below this.
pub const MAX_COMBINATIONS: usize = 200_000;

/// Check, for all tableaux with entries up to `max_entry`:
/// every segment tableau maps to a path and back unchanged, its step ends
/// are exactly the `(content + 1, entry)` pairs, and the weight is kept;
/// every tableau of the shape gives a non-crossing tuple with `r`
/// touchpoints whose weight is the tableau's plus one `x_y` per touchpoint,
/// no two tableaux give the same tuple, and every non-crossing tuple with
/// `r` touchpoints built from strip tableaux comes from one.
pub fn verify_bijection(d: &Decomposition, max_entry: u32) -> Result<BijectionReport> {
    let mut rep = BijectionReport::default();
    let n = max_entry as usize;
    let table = SharpTable::new(d)?;
    for i in 0..d.len() {
        for j in 0..d.len() {
            let SharpResult::Defined(cells) = table.sharp(i, j)? else {
                continue;
            };
            rep.segments += 1;
            for t in SsytIter::new(&cells, max_entry) {
                rep.segment_tableaux += 1;
                let p = tableau_to_path(&t, i, j, d)?;
                if path_to_tableau(&p, i, j, d)? != t {
                    rep.failures.push(format!("segment {i}#{j}: round trip changed {t:?}"));
                }
                let mut want: BTreeMap<i32, BTreeSet<u32>> = BTreeMap::new();
                for (c, q) in &t.entries {
                    want.entry(c.content() + 1).or_default().insert(*q);
                }
                if step_ends(&p) != want {
                    rep.failures
                        .push(format!("segment {i}#{j}: step ends differ from contents for {t:?}"));
                }
                if path_weight(&p, n)? != t.weight(n)? {
                    rep.failures.push(format!("segment {i}#{j}: weight changed for {t:?}"));
                }
            }
        }
    }
    let r = usize::try_from(d.r()).map_err(|_| Error::Internal("negative overlap".into()))?;
    let mut seen = BTreeSet::new();
    for t in SsytIter::new(&d.shape().cells(), max_entry) {
        rep.shape_tableaux += 1;
        let tuple = tableau_tuple_to_path_tuple(&t, d)?;
        if !tuple.noncrossing || tuple.touchpoints.len() != r {
            rep.failures.push(format!(
                "tuple of {t:?}: noncrossing {} with {} touchpoints",
                tuple.noncrossing,
                tuple.touchpoints.len()
            ));
        }
        let mut weight = vec![0u32; n];
        for p in &tuple.paths {
            for (a, b) in weight.iter_mut().zip(path_weight(p, n)?.exps()) {
                *a += b;
            }
        }
        let mut want = t.weight(n)?.exps().to_vec();
        for &(_, y) in &tuple.touchpoints {
            want[y as usize - 1] += 1;
        }
        if weight != want {
            rep.failures
                .push(format!("tuple of {t:?}: weight {weight:?}, expected {want:?}"));
        }
        if !seen.insert(tuple.paths) {
            rep.failures.push(format!("tuple of {t:?} repeats an earlier one"));
        }
    }
    let pieces: Vec<Vec<DoubleLatticePath>> = d
        .strips()
        .iter()
        .enumerate()
        .map(|(s, strip)| {
            let (u, v) = (start_point(d, s)?, end_point(d, s)?);
            SsytIter::new(strip.cells(), max_entry)
                .map(|t| encode(&t, strip.cells(), u, v))
                .collect()
        })
        .collect::<Result<_>>()?;
    let total = pieces.iter().try_fold(1usize, |acc, p| acc.checked_mul(p.len()));
    if let Some(total) = total.filter(|&t| t > 0 && t <= MAX_COMBINATIONS) {
        rep.combinations = total;
        let mut hits = 0usize;
        let mut ix = vec![0usize; pieces.len()];
        let mut paths: Vec<DoubleLatticePath> = Vec::with_capacity(pieces.len());
        for _ in 0..total {
            paths.clear();
            paths.extend(ix.iter().zip(&pieces).map(|(&k, p)| p[k].clone()));
            let (ok, touch) = is_noncrossing(&paths);
            if ok && touch.len() == r {
                hits += 1;
                if !seen.contains(&paths) {
                    rep.failures.push("a non-crossing tuple has no tableau".into());
                }
            }
            for (k, p) in ix.iter_mut().zip(&pieces) {
                *k += 1;
                if *k < p.len() {
                    break;
                }
                *k = 0;
            }
        }
        if hits != seen.len() {
            rep.failures
                .push(format!("{hits} non-crossing tuples but {} tableaux", seen.len()));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{running_decomposition, running_shape};
    use crate::decomp::{enumerate_nested_decompositions, peel_rim};
    use crate::shapes::{SkewShape, connected_shapes};

    fn tableau(v: &[(i32, i32, u32)]) -> Tableau {
        Tableau {
            entries: v.iter().map(|&(r, c, q)| (Cell::new(r, c), q)).collect(),
        }
    }

    fn top(x: i32) -> Endpoint {
        Endpoint::new(x, Level::Top)
    }

    fn bottom(x: i32) -> Endpoint {
        Endpoint::new(x, Level::Bottom)
    }

    #[test]
    fn running_endpoints() {
        let d = running_decomposition();
        assert_eq!(start_point(&d, 1).unwrap(), top(-3));
        assert_eq!(end_point(&d, 2).unwrap(), bottom(2));
        assert_eq!(start_point(&d, 0).unwrap(), top(2));
        assert_eq!(path_endpoints(2, 0, &d).unwrap(), (top(2), bottom(2)));
        let (us, vs) = endpoint_orders(&d).unwrap();
        assert_eq!(us, vec![0, 1, 2]);
        assert_eq!(vs, vec![0, 1, 2]);
    }

    #[test]
    fn empty_segment_is_vertical() {
        let d = running_decomposition();
        let p = tableau_to_path(&Tableau::default(), 2, 0, &d).unwrap();
        assert_eq!(p, DoubleLatticePath::vertical(top(2), bottom(2)));
        assert_eq!(path_to_tableau(&p, 2, 0, &d).unwrap(), Tableau::default());
        assert_eq!(path_weight(&p, 3).unwrap(), Monomial::new(vec![0, 0, 0]));
    }

    #[test]
    fn start_box_on_top_gives_a_diagonal() {
        let d = running_decomposition();
        let SharpResult::Defined(cells) = SharpTable::new(&d).unwrap().sharp(2, 1).unwrap() else {
            panic!("segment 3 # 2 is defined");
        };
        let first = cells.start().unwrap();
        let t = SsytIter::new(&cells, 4).find(|t| t.get(first) == Some(2)).unwrap();
        let p = tableau_to_path(&t, 2, 1, &d).unwrap();
        let s = p.upper[0];
        assert_eq!((s.kind, s.start(), s.end()), (StepKind::Diagonal, (-3, 3), (-2, 2)));
        assert_eq!(p.end, bottom(2));
    }

    #[test]
    fn single_box() {
        let cells: Diagram = [Cell::new(2, 3)].into_iter().collect();
        let t = tableau(&[(2, 3, 4)]);
        let p = encode(&t, &cells, bottom(1), top(2)).unwrap();
        assert_eq!(
            p.upper,
            vec![Step {
                x: 1,
                kind: StepKind::Horizontal,
                end_y: 4
            }]
        );
        assert_eq!(p.upper, p.lower);
        assert_eq!(path_weight(&p, 4).unwrap(), Monomial::new(vec![0, 0, 0, 1]));
        assert!(matches!(path_weight(&p, 3), Err(Error::EntryTooLarge { .. })));
    }

    #[test]
    fn block_splits_the_paths() {
        let cells: Diagram = [(1, 1), (1, 2), (2, 1), (2, 2)]
            .iter()
            .map(|&(r, c)| Cell::new(r, c))
            .collect();
        let t = tableau(&[(1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 3)]);
        let p = encode(&t, &cells, bottom(-1), top(2)).unwrap();
        assert_eq!(
            p.upper.iter().map(|s| s.kind).collect::<Vec<_>>(),
            [StepKind::Horizontal, StepKind::Horizontal, StepKind::Diagonal]
        );
        assert_eq!(
            p.lower.iter().map(|s| s.kind).collect::<Vec<_>>(),
            [StepKind::Horizontal, StepKind::Diagonal, StepKind::Horizontal]
        );
        assert_eq!(decode(&p, &cells).unwrap(), t);
        assert_eq!(path_weight(&p, 3).unwrap(), Monomial::new(vec![2, 1, 1]));
    }

    #[test]
    fn malformed_paths_are_rejected() {
        let cells: Diagram = [Cell::new(1, 1), Cell::new(1, 2)].into_iter().collect();
        let t = tableau(&[(1, 1, 2), (1, 2, 3)]);
        let mut p = encode(&t, &cells, bottom(0), top(2)).unwrap();
        p.upper[1].end_y = 1;
        p.lower[1].end_y = 1;
        assert!(matches!(decode(&p, &cells), Err(Error::MalformedPath(_))));
        p.upper[1].kind = StepKind::Diagonal;
        assert!(decode(&p, &cells).is_err());
    }

    #[test]
    fn identical_and_disjoint_paths() {
        let cells: Diagram = [Cell::new(1, 1)].into_iter().collect();
        let p = encode(&tableau(&[(1, 1, 1)]), &cells, bottom(0), top(1)).unwrap();
        assert!(!is_noncrossing(&[p.clone(), p.clone()]).0);
        let far: Diagram = [Cell::new(1, 5)].into_iter().collect();
        let q = encode(&tableau(&[(1, 5, 1)]), &far, bottom(4), top(5)).unwrap();
        assert_eq!(is_noncrossing(&[p, q]), (true, vec![]));
    }

    #[test]
    fn running_tableau_touchpoints() {
        let d = running_decomposition();
        let t = tableau(&[
            (1, 4, 1),
            (1, 5, 1),
            (1, 6, 1),
            (2, 2, 1),
            (2, 3, 2),
            (2, 4, 2),
            (2, 5, 3),
            (2, 6, 3),
            (3, 1, 1),
            (3, 2, 2),
            (3, 3, 4),
            (3, 4, 4),
            (3, 5, 4),
            (3, 6, 4),
            (4, 1, 3),
            (4, 2, 3),
            (4, 3, 5),
            (4, 4, 5),
        ]);
        assert!(t.is_semistandard());
        assert_eq!(t.cells(), running_shape().cells());
        let tuple = tableau_tuple_to_path_tuple(&t, &d).unwrap();
        assert!(tuple.noncrossing);
        assert_eq!(tuple.touchpoints, vec![(-2, 3), (1, 4), (4, 3)]);
        assert_eq!(
            tuple.paths.iter().map(|p| (p.start, p.end)).collect::<Vec<_>>(),
            (0..3)
                .map(|i| (start_point(&d, i).unwrap(), end_point(&d, i).unwrap()))
                .collect::<Vec<_>>()
        );
    }

    fn check(d: &Decomposition, k: u32) -> BijectionReport {
        let rep = verify_bijection(d, k).unwrap();
        assert!(rep.ok(), "{:?}", &rep.failures[..rep.failures.len().min(5)]);
        rep
    }

    #[test]
    fn running_segments_round_trip() {
        let rep = check(&running_decomposition(), 3);
        assert_eq!(rep.segments, 8);
        assert_eq!(rep.combinations, 0);
    }

    /// All step assignments with entries up to `k`; the valid ones are
    /// exactly the images of tableaux.
    fn all_paths(cells: &Diagram, u: Endpoint, v: Endpoint, k: u32) -> Vec<DoubleLatticePath> {
        let Ok(base) = encode(&row_fill(cells), cells, u, v) else {
            return Vec::new();
        };
        let n = base.upper.len();
        let mut out = Vec::new();
        let mut ys = vec![1u32; 2 * n];
        loop {
            let mut p = base.clone();
            for g in 0..n {
                p.upper[g].end_y = ys[g];
                p.lower[g].end_y = ys[n + g];
            }
            out.push(p);
            let mut k_ix = 0;
            while k_ix < ys.len() && ys[k_ix] == k {
                ys[k_ix] = 1;
                k_ix += 1;
            }
            if k_ix == ys.len() {
                return out;
            }
            ys[k_ix] += 1;
        }
    }

    /// A semistandard filling: each cell holds its row, shifted to start at 1.
    fn row_fill(cells: &Diagram) -> Tableau {
        let min_row = cells.iter().map(|c| c.row).min().unwrap_or(1);
        Tableau {
            entries: cells.iter().map(|c| (c, (c.row - min_row + 1) as u32)).collect(),
        }
    }

    #[test]
    fn paths_round_trip_on_small_segments() {
        let d = running_decomposition();
        let table = SharpTable::new(&d).unwrap();
        let k = 4;
        let mut checked = 0;
        for i in 0..3 {
            for j in 0..3 {
                let Ok(SharpResult::Defined(cells)) = table.sharp(i, j) else {
                    continue;
                };
                if cells.len() > 5 {
                    continue;
                }
                let (u, v) = path_endpoints(i, j, &d).unwrap();
                let mut valid = 0;
                for p in all_paths(&cells, u, v, k) {
                    if let Ok(t) = decode(&p, &cells) {
                        valid += 1;
                        assert_eq!(encode(&t, &cells, u, v).unwrap(), p);
                    }
                }
                assert_eq!(valid, SsytIter::new(&cells, k).count());
                checked += 1;
            }
        }
        assert!(checked >= 2);
    }

    #[test]
    fn tuples_on_small_shapes() {
        for s in connected_shapes(6) {
            for d in enumerate_nested_decompositions(&s, 3) {
                let rep = check(&d, 3);
                assert!(rep.combinations > 0 || d.strips().iter().any(|t| t.len() > 3));
            }
        }
    }

    #[test]
    fn rim_decomposition_tuples() {
        let s = SkewShape::from_parts(&[4, 3, 3], &[2, 1]).unwrap();
        check(&peel_rim(&s).unwrap(), 3);
    }

    #[test]
    fn start_and_end_orders_agree() {
        for s in connected_shapes(7) {
            for d in enumerate_nested_decompositions(&s, 3) {
                assert!(endpoint_orders_agree(&d).unwrap(), "{:?}", d.strips());
            }
        }
    }
}
