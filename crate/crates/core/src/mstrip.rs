//! m-strip diagrams: a band of `m` consecutive anti-diagonals cut to `n`
//! columns, with a head partition standing on the top-right columns and a
//! tail partition hanging from the bottom-left ones.
//!
//! Their standard tableau counts come from an order-`⌊m/2⌋` determinant of
//! 2-strip or 3-strip counts, from closed forms in Andre numbers for small
//! `m`, and from box-insertion recursions on 3-strip diagrams. Everything
//! here is cross-checked against the Aitken determinant and, at small size,
//! brute force.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::decomp::{Decomposition, is_nested, validate_decomposition};
use crate::error::{Error, Result};
use crate::nested_det::max_oracle_boxes;
use crate::polynomial::{ExactRational, binomial, determinant_rational, factorial};
use crate::shapes::{Cell, Diagram, Partition, SkewShape};
use crate::tableaux::{count_syt_aitken, count_syt_bruteforce};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MStripSpec {
    pub m: u32,
    pub n: u32,
    pub head: Partition,
    pub tail: Partition,
}

impl MStripSpec {
    pub fn new(m: u32, n: u32, head: &[u32], tail: &[u32]) -> Result<Self> {
        Ok(MStripSpec {
            m,
            n,
            head: Partition::new(head.to_vec())?,
            tail: Partition::new(tail.to_vec())?,
        })
    }

    pub fn plain(m: u32, n: u32) -> Self {
        MStripSpec {
            m,
            n,
            head: Partition::empty(),
            tail: Partition::empty(),
        }
    }

    /// `⌊m/2⌋`, the order of the counting determinant.
    pub fn order(&self) -> usize {
        (self.m / 2) as usize
    }
}

/// Height of the first and last body column, `⌈(m+1)/2⌉`.
fn ramp_start(m: u32) -> i32 {
    (m as i32 + 2) / 2
}

/// Body rows run from `top` to `bottom`; anti-diagonal `r + c` runs over
/// `base .. base + m`.
struct Body {
    base: i32,
    top: i32,
    bottom: i32,
}

fn body(m: u32, n: u32) -> Body {
    let (m, n) = (m as i32, n as i32);
    let base = n + m + 2;
    let h0 = ramp_start(m as u32);
    Body {
        base,
        top: base + m - n - h0,
        bottom: base + h0 - 2,
    }
}

fn body_cells(m: u32, n: u32) -> Diagram {
    let b = body(m, n);
    let mut out = Diagram::new();
    for c in 1..=n as i32 {
        for r in b.top.max(b.base - c)..=b.bottom.min(b.base + m as i32 - 1 - c) {
            out.insert(Cell::new(r, c));
        }
    }
    out
}

fn validate_spec(spec: &MStripSpec) -> Result<()> {
    let bad = |m: String| Err(Error::MStrip(m));
    if spec.m < 2 {
        return bad(format!("m = {} is below 2", spec.m));
    }
    if spec.n < 1 {
        return bad("at least one column is needed".into());
    }
    let k = spec.order();
    if spec.head.len() > k || spec.tail.len() > k {
        return bad(format!("head and tail may have at most {k} parts"));
    }
    if spec.head.len() > spec.n as usize || spec.tail.len() > spec.n as usize {
        return bad("head or tail is wider than the body".into());
    }
    Ok(())
}

/// The cells of the diagram in body coordinates, before normalization.
pub fn mstrip_cells(spec: &MStripSpec) -> Result<Diagram> {
    validate_spec(spec)?;
    let (m, n) = (spec.m, spec.n as i32);
    let b = body(m, spec.n);
    let mut cells = body_cells(m, spec.n);
    for (i, &p) in spec.head.parts().iter().enumerate() {
        for j in 0..p as i32 {
            cells.insert(Cell::new(b.top - 1 - j, n - i as i32));
        }
    }
    for (i, &p) in spec.tail.parts().iter().enumerate() {
        for j in 0..p as i32 {
            cells.insert(Cell::new(b.bottom + 1 + j, 1 + i as i32));
        }
    }
    Ok(cells)
}

/// Column heights of the body for `n` wide enough that both ramps fit.
pub fn body_column_heights(m: u32, n: u32) -> Vec<u32> {
    let h0 = ramp_start(m) as u32;
    (0..n)
        .map(|c| {
            let from_left = h0 + c;
            let from_right = h0 + (n - 1 - c);
            from_left.min(from_right).min(m)
        })
        .collect()
}

/// Box count of the body alone.
pub fn body_size(m: u32, n: u32) -> usize {
    body_cells(m, n).len()
}

/// The m-strip diagram as a normalized skew shape.
///
/// Any `n ≥ 1` is accepted as long as the result is a skew shape. Below
/// `n = 2(m - ⌈(m+1)/2⌉)` the two ramps overlap and the body is the band
/// clipped by both ramps, which keeps `|D_3| = 3n - 2` down to `n = 1`.
pub fn build_mstrip(spec: &MStripSpec) -> Result<SkewShape> {
    let cells = mstrip_cells(spec)?;
    let shape = SkewShape::from_cells(&cells).map_err(|e| Error::MStrip(format!("not a skew shape: {e}")))?;
    let ramps = 2 * (spec.m - ramp_start(spec.m) as u32);
    if spec.n >= ramps {
        let body = body_cells(spec.m, spec.n);
        let heights: Vec<u32> = (1..=spec.n as i32)
            .map(|c| body.iter().filter(|x| x.col == c).count() as u32)
            .collect();
        if heights != body_column_heights(spec.m, spec.n) {
            return Err(Error::Internal(format!("body column heights {heights:?} do not match")));
        }
    }
    Ok(shape)
}

/// Andre numbers `A_0..=A_limit` with the derived rational sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub andre: Vec<BigInt>,
}

impl SequenceTable {
    fn get(&self, n: usize) -> Result<&BigInt> {
        self.andre
            .get(n)
            .ok_or_else(|| Error::OutOfRange(format!("A_{n} is beyond the table")))
    }

    pub fn a(&self, n: usize) -> Result<BigInt> {
        self.get(n).cloned()
    }

    /// `A_n / n!`
    pub fn a_bar(&self, n: usize) -> Result<ExactRational> {
        Ok(ExactRational::new(self.a(n)?, factorial(n as u32)))
    }

    /// `Ā_n / (2^{n+1} - 1)`
    pub fn a_tilde(&self, n: usize) -> Result<ExactRational> {
        Ok(self.a_bar(n)? / ExactRational::from_integer(pow2(n + 1) - 1))
    }

    /// `(2^n - 1) Ā_n / (2^n (2^{n+1} - 1))`
    pub fn a_hat(&self, n: usize) -> Result<ExactRational> {
        let num = pow2(n) - 1;
        let den = pow2(n) * (pow2(n + 1) - 1);
        Ok(self.a_bar(n)? * ExactRational::new(num, den))
    }

    /// Euler number `E_n` with the sign convention `sec x = Σ (-1)^k E_{2k} x^{2k}/(2k)!`;
    /// zero for odd `n`.
    pub fn euler(&self, n: usize) -> Result<BigInt> {
        if n % 2 == 1 {
            return Ok(BigInt::zero());
        }
        let a = self.a(n)?;
        Ok(if (n / 2).is_multiple_of(2) { a } else { -a })
    }

    /// Tangent number `T_n = A_{2n-1}`, for `n ≥ 1`.
    pub fn tangent(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::OutOfRange("tangent numbers start at T_1".into()));
        }
        self.a(2 * n - 1)
    }
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Andre numbers from the boustrophedon triangle.
pub fn andre_numbers(limit: usize) -> SequenceTable {
    let mut andre = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 1..=limit {
        let mut next = vec![BigInt::zero()];
        for x in row.iter().rev() {
            let last = next.last().expect("row starts with 0").clone();
            next.push(last + x);
        }
        andre.push(next.last().expect("non-empty").clone());
        row = next;
    }
    SequenceTable { andre }
}

/// Permutations with `π1 < π2 > π3 < ...`, by enumeration.
pub fn count_up_down_permutations(n: usize) -> u64 {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], n: usize) -> u64 {
        if prefix.len() == n {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            if let Some(&last) = prefix.last() {
                let rising = prefix.len() % 2 == 1;
                if rising != (v > last) {
                    continue;
                }
            }
            used[v] = true;
            prefix.push(v);
            total += go(prefix, used, n);
            prefix.pop();
            used[v] = false;
        }
        total
    }
    go(&mut Vec::new(), &mut vec![false; n], n)
}

fn one_part(p: u32) -> Vec<u32> {
    if p == 0 { Vec::new() } else { vec![p] }
}

/// Standard tableaux of the `m`-strip with `n` columns, head `(q)` and tail `(p)`.
fn alpha(m: u32, n: u32, p: u32, q: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("alpha needs at least one column".into()));
    }
    count_syt_aitken(&build_mstrip(&MStripSpec::new(m, n, &one_part(q), &one_part(p))?)?)
}

/// Standard tableaux of the 2-strip with head `(q)` and tail `(p)`.
pub fn alpha2(n: u32, p: u32, q: u32) -> Result<BigInt> {
    alpha(2, n, p, q)
}

/// Standard tableaux of the 3-strip with head `(q)` and tail `(p)`.
pub fn alpha3(n: u32, p: u32, q: u32) -> Result<BigInt> {
    alpha(3, n, p, q)
}

/// `(X_{2n-1}(p,q), Y_{2n-2}(p,q))`: the alpha counts divided by the
/// factorial of their box counts.
pub fn xy_numbers(n: u32, p: u32, q: u32) -> Result<(ExactRational, ExactRational)> {
    let x = ExactRational::new(alpha2(n, p, q)?, factorial(2 * n + p + q));
    let y = ExactRational::new(alpha3(n, p, q)?, factorial(3 * n + p + q - 2));
    Ok((x, y))
}

/// How a count was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    #[serde(with = "crate::polynomial::decimal")]
    pub count: BigInt,
    pub method: String,
    pub determinant_order: usize,
    pub boxes: usize,
    pub checked_by_brute_force: bool,
}

/// The order-`⌊m/2⌋` determinant count, checked against the Aitken count
/// and, up to the oracle size, brute force.
pub fn count_mstrip_thm(spec: &MStripSpec) -> Result<BigInt> {
    Ok(count_mstrip_thm_record(spec)?.count)
}

pub fn count_mstrip_thm_record(spec: &MStripSpec) -> Result<CountRecord> {
    let shape = build_mstrip(spec)?;
    let k = spec.order();
    if (spec.n as usize) < k {
        return Err(Error::MStrip(format!("the determinant needs at least {k} columns")));
    }
    let n1 = spec.n - k as u32 + 1;
    let padded = |p: &Partition| (0..k).map(|i| p.part(i) + (k - 1 - i) as u32).collect::<Vec<u32>>();
    let (ls, ms) = (padded(&spec.head), padded(&spec.tail));
    let entry = |p: u32, q: u32| -> Result<ExactRational> {
        if spec.m.is_multiple_of(2) {
            Ok(ExactRational::new(alpha2(n1, p, q)?, factorial(2 * n1 + p + q)))
        } else {
            Ok(ExactRational::new(alpha3(n1, p, q)?, factorial(3 * n1 + p + q - 2)))
        }
    };
    let matrix: Vec<Vec<ExactRational>> = ls
        .iter()
        .map(|&l| ms.iter().map(|&m| entry(l, m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut value = determinant_rational(&matrix)? * ExactRational::from_integer(factorial(shape.size() as u32));
    if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
        value = -value;
    }
    if !value.denom().is_one() {
        return Err(Error::Internal(format!(
            "m-strip determinant is not an integer: {value}"
        )));
    }
    let count = value.numer().clone();
    let aitken = count_syt_aitken(&shape)?;
    if aitken != count {
        return Err(Error::Internal(format!(
            "m-strip determinant gives {count}, Aitken gives {aitken}"
        )));
    }
    let brute = shape.size() <= max_oracle_boxes();
    if brute {
        let oracle = count_syt_bruteforce(&shape.cells());
        if oracle != count {
            return Err(Error::Internal(format!(
                "m-strip determinant gives {count}, brute force {oracle}"
            )));
        }
    }
    Ok(CountRecord {
        count,
        method: format!(
            "order-{k} determinant of {}-strip counts",
            if spec.m.is_multiple_of(2) { 2 } else { 3 }
        ),
        determinant_order: k,
        boxes: shape.size(),
        checked_by_brute_force: brute,
    })
}

/// Closed-form counts for small strips at `n` columns. Each value is
/// computed from two equivalent expressions, which must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForms {
    pub n: u32,
    /// 3-strip, no head or tail.
    #[serde(with = "crate::polynomial::decimal")]
    pub three_plain: BigInt,
    /// 3-strip with a one-box head.
    #[serde(with = "crate::polynomial::decimal")]
    pub three_head: BigInt,
    /// 3-strip with one-box head and tail.
    #[serde(with = "crate::polynomial::decimal")]
    pub three_both: BigInt,
    /// 4-strip, no head or tail.
    #[serde(with = "crate::polynomial::decimal")]
    pub four_plain: BigInt,
    /// 4-strip with one-box head and tail.
    #[serde(with = "crate::polynomial::decimal")]
    pub four_both: BigInt,
    /// 5-strip, no head or tail; needs `n ≥ 2`.
    #[serde(serialize_with = "optional_decimal")]
    pub five_plain: Option<BigInt>,
    /// The capped 3-strip of [`c3n_diagram`].
    #[serde(with = "crate::polynomial::decimal")]
    pub three_capped: BigInt,
}

fn optional_decimal<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

fn integral(r: ExactRational, what: &str) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::Internal(format!("{what} is not an integer: {r}")))
    }
}

fn agree(a: BigInt, b: BigInt, what: &str) -> Result<BigInt> {
    if a == b {
        Ok(a)
    } else {
        Err(Error::Internal(format!("two forms of {what} disagree: {a} vs {b}")))
    }
}

fn det2(a: ExactRational, b: ExactRational, c: ExactRational, d: ExactRational) -> ExactRational {
    a * d - b * c
}

pub fn closed_forms(n: u32) -> Result<ClosedForms> {
    if n == 0 {
        return Err(Error::OutOfRange("closed forms start at n = 1".into()));
    }
    let s = andre_numbers(2 * n as usize + 2);
    let nn = n as usize;
    let fact = |k: u32| ExactRational::from_integer(factorial(k));
    let int = ExactRational::from_integer;
    let t = s.tangent(nn)?;

    let three_plain = agree(
        integral(
            int(factorial(3 * n - 2) * &t) / int(factorial(2 * n - 1) * pow2(2 * nn - 2)),
            "3-strip",
        )?,
        integral(
            fact(3 * n - 2) * s.a_bar(2 * nn - 1)? / int(pow2(2 * nn - 2)),
            "3-strip",
        )?,
        "the plain 3-strip count",
    )?;
    let three_head = agree(
        integral(
            int(factorial(3 * n - 1) * &t) / int(factorial(2 * n - 1) * pow2(2 * nn - 1)),
            "3-strip",
        )?,
        integral(
            fact(3 * n - 1) * s.a_bar(2 * nn - 1)? / int(pow2(2 * nn - 1)),
            "3-strip",
        )?,
        "the 3-strip count with a head",
    )?;
    let three_both = agree(
        integral(
            int(factorial(3 * n) * (pow2(2 * nn - 1) - 1) * &t)
                / int(factorial(2 * n - 1) * pow2(2 * nn - 1) * (pow2(2 * nn) - 1)),
            "3-strip",
        )?,
        integral(fact(3 * n) * s.a_hat(2 * nn - 1)?, "3-strip")?,
        "the 3-strip count with head and tail",
    )?;
    let four_plain = agree(
        binomial(4 * n as i64 - 2, 2 * n as i64 - 1) * &t * &t
            + binomial(4 * n as i64 - 2, 2 * n as i64 - 2) * s.euler(2 * nn - 2)? * s.euler(2 * nn)?,
        integral(
            fact(4 * n - 2)
                * det2(
                    s.a_bar(2 * nn - 1)?,
                    s.a_bar(2 * nn)?,
                    s.a_bar(2 * nn - 2)?,
                    s.a_bar(2 * nn - 1)?,
                ),
            "4-strip",
        )?,
        "the plain 4-strip count",
    )?;
    let four_both = agree(
        binomial(4 * n as i64, 2 * n as i64) * s.euler(2 * nn)? * s.euler(2 * nn)?
            - binomial(4 * n as i64, 2 * n as i64 - 2) * s.euler(2 * nn - 2)? * s.euler(2 * nn + 2)?,
        integral(
            fact(4 * n)
                * det2(
                    s.a_bar(2 * nn)?,
                    s.a_bar(2 * nn + 2)?,
                    s.a_bar(2 * nn - 2)?,
                    s.a_bar(2 * nn)?,
                ),
            "4-strip",
        )?,
        "the 4-strip count with head and tail",
    )?;
    let five_plain = if n >= 2 {
        let t1 = s.tangent(nn - 1)?;
        let den = factorial(2 * n - 3).pow(2) * pow2(4 * nn - 6) * (pow2(2 * nn - 2) - 1);
        let a = integral(int(factorial(5 * n - 6) * &t1 * &t1) / int(den), "5-strip")?;
        let (ti, ha) = (s.a_tilde(2 * nn - 3)?, s.a_hat(2 * nn - 3)?);
        let b = integral(fact(5 * n - 6) * det2(ti.clone(), ha.clone(), ha, ti), "5-strip")?;
        Some(agree(a, b, "the plain 5-strip count")?)
    } else {
        None
    };
    let three_capped = integral(fact(3 * n) * s.a_tilde(2 * nn - 1)?, "capped 3-strip")?;
    Ok(ClosedForms {
        n,
        three_plain,
        three_head,
        three_both,
        four_plain,
        four_both,
        five_plain,
        three_capped,
    })
}

/// The 3-strip diagrams with `n` columns that the recursions relate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeStrips {
    /// No head or tail; `3n - 2` boxes.
    pub plain: SkewShape,
    /// One-box head; `3n - 1` boxes.
    pub head: SkewShape,
    /// One-box tail; `3n - 1` boxes.
    pub tail: SkewShape,
    /// One-box head and tail; `3n` boxes.
    pub both: SkewShape,
    /// See [`c3n_diagram`]; `3n` boxes.
    pub capped: SkewShape,
}

/// The 3-strip with a one-box tail and one more box to the right of its
/// topmost, rightmost box.
pub fn c3n_diagram(n: u32) -> Result<SkewShape> {
    let mut cells = mstrip_cells(&MStripSpec::new(3, n, &[], &[1])?)?;
    let corner = cells.end().ok_or_else(|| Error::Internal("empty 3-strip".into()))?;
    cells.insert(corner.right());
    SkewShape::from_cells(&cells)
}

pub fn d3_variants(n: u32) -> Result<ThreeStrips> {
    let b = |h: &[u32], t: &[u32]| build_mstrip(&MStripSpec::new(3, n, h, t)?);
    Ok(ThreeStrips {
        plain: b(&[], &[])?,
        head: b(&[1], &[])?,
        tail: b(&[], &[1])?,
        both: b(&[1], &[1])?,
        capped: c3n_diagram(n)?,
    })
}

/// `shape` without the box `(i, n - i)` of its normalized diagram, for
/// `1 ≤ i ≤ n - 1`.
pub fn remove_diagonal_box(shape: &SkewShape, n: u32, i: u32) -> Result<SkewShape> {
    if i < 1 || i + 1 > n {
        return Err(Error::OutOfRange(format!(
            "box index {i} must lie in 1..={}",
            n.saturating_sub(1)
        )));
    }
    let target = Cell::new(i as i32, (n - i) as i32);
    let mut cells = shape.cells();
    if !cells.remove(target) {
        return Err(Error::CellNotInShape(target));
    }
    SkewShape::from_cells(&cells)
}

/// The box-insertion recursions among 3-strip counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Recursion {
    /// `(3n-1) f(plain) = 2 f(head)`
    HeadInsertion,
    /// `3n f(head) = f(both) + f(capped)`
    CapInsertion,
    /// `(3n-2) f(plain minus box i) = f(plain) + C(3n-2, 3i-1) f(head_i) f(head_{n-i})`
    PlainRemoval,
    /// `3n f(capped minus box i) = f(capped) + C(3n, 3i) f(capped_i) f(capped_{n-i})`
    CappedRemoval,
    /// `(2n-1) f(plain) = Σ_i C(3n-2, 3i-1) f(head_i) f(head_{n-i})`
    PlainSum,
    /// `(2n+1) f(capped) = Σ_i C(3n, 3i) f(capped_i) f(capped_{n-i})`
    CappedSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionCheck {
    pub identity: Recursion,
    pub n: u32,
    pub i: Option<u32>,
    #[serde(with = "crate::polynomial::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::polynomial::decimal")]
    pub rhs: BigInt,
    pub pass: bool,
}

/// Every recursion for `1 ≤ n ≤ n_max` (the sums from `n = 2`) and every
/// valid box index, with all counts from the Aitken determinant.
pub fn verify_recursions(n_max: u32) -> Result<Vec<RecursionCheck>> {
    let mut fam = vec![None];
    for n in 1..=n_max {
        let t = d3_variants(n)?;
        let f = |s: &SkewShape| count_syt_aitken(s);
        fam.push(Some((f(&t.plain)?, f(&t.head)?, f(&t.both)?, f(&t.capped)?, t)));
    }
    let get = |n: u32| fam[n as usize].as_ref().expect("computed for 1..=n_max");
    let mut out = Vec::new();
    let mut push = |identity, n, i, lhs: BigInt, rhs: BigInt| {
        let pass = lhs == rhs;
        out.push(RecursionCheck {
            identity,
            n,
            i,
            lhs,
            rhs,
            pass,
        });
    };
    for n in 1..=n_max {
        let (plain, head, both, capped, shapes) = get(n);
        let nb = BigInt::from(n);
        push(Recursion::HeadInsertion, n, None, (3 * &nb - 1) * plain, 2 * head);
        push(Recursion::CapInsertion, n, None, 3 * &nb * head, both + capped);
        let (mut plain_sum, mut capped_sum) = (BigInt::zero(), BigInt::zero());
        for i in 1..n {
            let (_, head_i, _, capped_i, _) = get(i);
            let (_, head_r, _, capped_r, _) = get(n - i);
            let plain_term = binomial(3 * n as i64 - 2, 3 * i as i64 - 1) * head_i * head_r;
            let capped_term = binomial(3 * n as i64, 3 * i as i64) * capped_i * capped_r;
            let cut = count_syt_aitken(&remove_diagonal_box(&shapes.plain, n, i)?)?;
            push(
                Recursion::PlainRemoval,
                n,
                Some(i),
                (3 * &nb - 2) * cut,
                plain + &plain_term,
            );
            let cut = count_syt_aitken(&remove_diagonal_box(&shapes.capped, n, i)?)?;
            push(
                Recursion::CappedRemoval,
                n,
                Some(i),
                3 * &nb * cut,
                capped + &capped_term,
            );
            plain_sum += plain_term;
            capped_sum += capped_term;
        }
        if n >= 2 {
            push(Recursion::PlainSum, n, None, (2 * &nb - 1) * plain, plain_sum);
            push(Recursion::CappedSum, n, None, (2 * &nb + 1) * capped, capped_sum);
        }
    }
    Ok(out)
}

/// The zig-zag decompositions of the plain 4-strip, the 4-strip with
/// one-box head and tail, and the plain 5-strip.
///
/// The diagram is cut into a lower and an upper band of anti-diagonals:
/// disjoint halves for the 4-strip, halves sharing the middle anti-diagonal
/// for the 5-strip. The lower band is strip 0.
pub fn zigzag_decompositions(spec: &MStripSpec) -> Result<Decomposition> {
    let plain = spec.head.is_empty() && spec.tail.is_empty();
    let single = spec.head.parts() == [1] && spec.tail.parts() == [1];
    let overlap = match spec.m {
        4 if plain || single => 0,
        5 if plain && spec.n >= 2 => 1,
        _ => {
            return Err(Error::MStrip(format!(
                "no zig-zag decomposition for m = {}, head {:?}, tail {:?}",
                spec.m,
                spec.head.parts(),
                spec.tail.parts()
            )));
        }
    };
    let shape = build_mstrip(spec)?;
    let cells = shape.cells();
    let diag = |c: &Cell| c.row + c.col;
    let lo = cells.iter().map(|c| diag(&c)).min().expect("non-empty diagram");
    let hi = cells.iter().map(|c| diag(&c)).max().expect("non-empty diagram");
    let band = |from: i32, to: i32| {
        cells
            .iter()
            .filter(|c| (from..=to).contains(&diag(c)))
            .collect::<Diagram>()
    };
    // the two halves of the anti-diagonal range, sharing `overlap` of them
    let half = (hi - lo + 1 + overlap) / 2;
    let strips = vec![band(hi - half + 1, hi), band(lo, lo + half - 1)];
    let d = Decomposition::new(shape, strips)?;
    validate_decomposition(&d).map_err(|v| Error::Internal(format!("zig-zag decomposition is invalid: {v}")))?;
    if !is_nested(&d) {
        return Err(Error::Internal("zig-zag decomposition is not nested".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, n: u32, h: &[u32], t: &[u32]) -> MStripSpec {
        MStripSpec::new(m, n, h, t).unwrap()
    }

    fn f(s: &MStripSpec) -> BigInt {
        count_syt_aitken(&build_mstrip(s).unwrap()).unwrap()
    }

    #[test]
    fn body_sizes() {
        for n in 1..8 {
            assert_eq!(body_size(3, n), 3 * n as usize - 2);
            assert_eq!(body_size(4, n), 4 * n as usize - 2);
        }
        for n in 2..8 {
            assert_eq!(body_size(5, n), 5 * n as usize - 6);
        }
        assert_eq!(body_column_heights(6, 8), vec![4, 5, 6, 6, 6, 6, 5, 4]);
        assert_eq!(body_column_heights(3, 4), vec![2, 3, 3, 2]);
    }

    #[test]
    fn small_diagrams() {
        // 3 columns of a 2-strip: a staircase ribbon
        let s = build_mstrip(&spec(2, 3, &[], &[])).unwrap();
        assert_eq!(s, SkewShape::from_parts(&[3, 3, 2, 1], &[2, 1]).unwrap());
        assert_eq!(build_mstrip(&spec(3, 1, &[], &[])).unwrap().size(), 1);
        assert_eq!(
            build_mstrip(&spec(4, 1, &[], &[])).unwrap(),
            SkewShape::from_parts(&[1, 1], &[]).unwrap()
        );
        let six = build_mstrip(&spec(6, 6, &[3, 1], &[2, 2])).unwrap();
        assert_eq!(six.size(), body_size(6, 6) + 4 + 4);
    }

    #[test]
    fn rejected_specs() {
        assert!(build_mstrip(&spec(1, 3, &[], &[])).is_err());
        assert!(build_mstrip(&spec(3, 0, &[], &[])).is_err());
        assert!(build_mstrip(&spec(4, 3, &[1, 1, 1], &[])).is_err());
        assert!(build_mstrip(&spec(6, 2, &[1, 1, 1], &[])).is_err());
    }

    #[test]
    fn andre_matches_up_down_counts() {
        let s = andre_numbers(11);
        let want = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792];
        assert_eq!(s.andre, want.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        for n in 0..=8 {
            assert_eq!(s.andre[n], BigInt::from(count_up_down_permutations(n)));
        }
        assert_eq!(s.euler(4).unwrap(), BigInt::from(5));
        assert_eq!(s.euler(2).unwrap(), BigInt::from(-1));
        assert_eq!(s.tangent(3).unwrap(), BigInt::from(16));
        assert_eq!(s.a_tilde(1).unwrap(), ExactRational::new(1.into(), 3.into()));
    }

    #[test]
    fn alpha_values() {
        let s = andre_numbers(8);
        for n in 1..=4 {
            assert_eq!(alpha2(n, 0, 0).unwrap(), s.andre[2 * n as usize]);
        }
        for n in 1..=3 {
            for p in 0..=2 {
                for q in 0..=2 {
                    assert_eq!(alpha3(n, p, q).unwrap(), alpha3(n, q, p).unwrap());
                    assert_eq!(alpha2(n, p, q).unwrap(), alpha2(n, q, p).unwrap());
                }
            }
        }
        assert_eq!(alpha3(1, 0, 0).unwrap(), BigInt::one());
        let (x, y) = xy_numbers(1, 0, 0).unwrap();
        assert_eq!(x, ExactRational::new(1.into(), 2.into()));
        assert_eq!(y, ExactRational::one());
    }

    #[test]
    fn determinant_counts() {
        for (m, n) in [(2, 3), (3, 3), (4, 2), (5, 3), (6, 3), (7, 3)] {
            let s = spec(m, n, &[], &[]);
            assert_eq!(count_mstrip_thm(&s).unwrap(), f(&s), "m={m} n={n}");
        }
        let s = spec(4, 2, &[], &[]);
        assert_eq!(
            count_mstrip_thm(&s).unwrap(),
            count_syt_bruteforce(&build_mstrip(&s).unwrap().cells())
        );
        assert!(count_mstrip_thm(&spec(6, 2, &[], &[])).is_err());
        let rec = count_mstrip_thm_record(&spec(6, 4, &[1], &[2])).unwrap();
        assert_eq!(rec.determinant_order, 3);
    }

    #[test]
    fn determinant_counts_sweep() {
        let parts: [&[u32]; 4] = [&[], &[1], &[2], &[1, 1]];
        for m in 2..=7u32 {
            let k = (m / 2) as usize;
            for n in k as u32..=6 {
                for h in parts.iter().filter(|p| p.len() <= k) {
                    for t in parts.iter().filter(|p| p.len() <= k) {
                        let Ok(s) = MStripSpec::new(m, n, h, t) else { continue };
                        let Ok(shape) = build_mstrip(&s) else { continue };
                        if shape.size() > 16 {
                            continue;
                        }
                        let rec = count_mstrip_thm_record(&s).unwrap();
                        assert_eq!(rec.boxes, shape.size());
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_counts() {
        for n in 1..=5 {
            let c = closed_forms(n).unwrap();
            assert_eq!(c.three_plain, f(&spec(3, n, &[], &[])));
            assert_eq!(c.three_head, f(&spec(3, n, &[1], &[])));
            assert_eq!(c.three_both, f(&spec(3, n, &[1], &[1])));
            assert_eq!(c.four_plain, f(&spec(4, n, &[], &[])));
            assert_eq!(c.four_both, f(&spec(4, n, &[1], &[1])));
            assert_eq!(c.three_capped, count_syt_aitken(&c3n_diagram(n).unwrap()).unwrap());
            assert_eq!(c.five_plain.is_some(), n >= 2);
            if let Some(v) = c.five_plain {
                assert_eq!(v, f(&spec(5, n, &[], &[])));
            }
        }
        assert_eq!(closed_forms(1).unwrap().three_capped, BigInt::from(2));
        assert!(closed_forms(0).is_err());
    }

    #[test]
    fn three_strip_family() {
        let t = d3_variants(3).unwrap();
        assert_eq!(t.both, build_mstrip(&spec(3, 3, &[1], &[1])).unwrap());
        assert_eq!(t.capped.size(), 9);
        assert_eq!(t.capped, SkewShape::from_parts(&[4, 3, 2, 1], &[1]).unwrap());
        let cut = remove_diagonal_box(&t.plain, 3, 1).unwrap();
        assert_eq!(cut.size(), t.plain.size() - 1);
        assert!(remove_diagonal_box(&t.plain, 3, 3).is_err());
        assert!(remove_diagonal_box(&t.plain, 3, 0).is_err());
    }

    fn sharp_count(d: &Decomposition, i: usize, j: usize) -> BigInt {
        match crate::decomp::sharp(d, i, j).unwrap() {
            crate::decomp::SharpResult::Defined(c) => count_syt_aitken(&SkewShape::from_cells(&c).unwrap()).unwrap(),
            other => panic!("segment {i}#{j} is {other:?}"),
        }
    }

    fn strip_count(d: &Decomposition, i: usize) -> BigInt {
        count_syt_aitken(&SkewShape::from_cells(d.strip(i).unwrap().cells()).unwrap()).unwrap()
    }

    #[test]
    fn peeled_mstrips_count_correctly() {
        use crate::decomp::{peel_rim, peel_thick_rim};
        use crate::nested_det::corollary_count;
        for (m, n, h, t) in [
            (4, 4, &[2, 1][..], &[1][..]),
            (6, 6, &[3, 1], &[2, 2]),
            (5, 4, &[2], &[1, 1]),
            (7, 6, &[4, 2, 1], &[3, 3, 1]),
        ] {
            let s = build_mstrip(&spec(m, n, h, t)).unwrap();
            let d = if m % 2 == 0 {
                peel_rim(&s).unwrap()
            } else {
                peel_thick_rim(&s).unwrap()
            };
            assert_eq!(d.len(), (m / 2) as usize, "m={m}");
            assert_eq!(corollary_count(&d).unwrap(), count_syt_aitken(&s).unwrap());
        }
    }

    #[test]
    fn four_strip_zigzags() {
        let s = andre_numbers(12);
        for n in 1..=4u32 {
            let k = 2 * n as usize;
            let d = zigzag_decompositions(&spec(4, n, &[], &[])).unwrap();
            assert_eq!(d.r(), 0);
            if n >= 2 {
                assert_eq!(strip_count(&d, 0), s.andre[k - 1]);
                assert_eq!(strip_count(&d, 1), s.andre[k - 1]);
                assert_eq!(sharp_count(&d, 0, 1), s.andre[k - 2]);
                assert_eq!(sharp_count(&d, 1, 0), s.andre[k]);
            }
            assert_eq!(
                crate::nested_det::corollary_count(&d).unwrap(),
                closed_forms(n).unwrap().four_plain
            );

            let d = zigzag_decompositions(&spec(4, n, &[1], &[1])).unwrap();
            assert_eq!(strip_count(&d, 0), s.andre[k]);
            assert_eq!(strip_count(&d, 1), s.andre[k]);
            assert_eq!(sharp_count(&d, 1, 0), s.andre[k + 2]);
            assert_eq!(
                crate::nested_det::corollary_count(&d).unwrap(),
                closed_forms(n).unwrap().four_both
            );
        }
    }

    #[test]
    fn five_strip_zigzags() {
        for n in 2..=4u32 {
            let d = zigzag_decompositions(&spec(5, n, &[], &[])).unwrap();
            assert_eq!(d.r(), n as i64);
            let capped = count_syt_aitken(&c3n_diagram(n - 1).unwrap()).unwrap();
            let both = count_syt_aitken(&d3_variants(n - 1).unwrap().both).unwrap();
            assert_eq!(strip_count(&d, 0), capped);
            assert_eq!(strip_count(&d, 1), capped);
            assert_eq!(sharp_count(&d, 0, 1), both);
            assert_eq!(sharp_count(&d, 1, 0), both);
            assert_eq!(
                crate::nested_det::corollary_count(&d).unwrap(),
                closed_forms(n).unwrap().five_plain.unwrap()
            );
        }
        assert!(zigzag_decompositions(&spec(5, 1, &[], &[])).is_err());
        assert!(zigzag_decompositions(&spec(6, 3, &[], &[])).is_err());
        assert!(zigzag_decompositions(&spec(4, 3, &[1], &[])).is_err());
    }

    #[test]
    fn recursions_hold() {
        let report = verify_recursions(5).unwrap();
        assert!(report.iter().all(|r| r.pass), "{:?}", report.iter().find(|r| !r.pass));
        assert!(
            report
                .iter()
                .any(|r| r.identity == Recursion::PlainRemoval && r.n == 3 && r.i == Some(2))
        );
        assert!(report.iter().any(|r| r.identity == Recursion::CappedSum && r.n == 3));
    }
}
