//! Tableau enumeration and the Schur/standard-count oracles built on it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{
    ExactRational, Monomial, Polynomial, determinant, determinant_degree_bounded, determinant_rational, factorial,
};
use crate::shapes::{Cell, Diagram, SkewShape};

/// A filling of a set of cells by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tableau {
    pub entries: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn get(&self, c: Cell) -> Option<u32> {
        self.entries.get(&c).copied()
    }

    pub fn cells(&self) -> Diagram {
        self.entries.keys().copied().collect()
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&c, &v)| {
            v >= 1 && self.get(c.right()).is_none_or(|w| w >= v) && self.get(c.down()).is_none_or(|w| w > v)
        })
    }

    pub fn is_standard(&self) -> bool {
        let mut vals: Vec<u32> = self.entries.values().copied().collect();
        vals.sort_unstable();
        vals.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
            && self
                .entries
                .iter()
                .all(|(&c, &v)| self.get(c.right()).is_none_or(|w| w > v))
            && self.is_semistandard()
    }

    /// The monomial `prod x_{T(cell)}` in `nvars` variables.
    pub fn weight(&self, nvars: usize) -> Result<Monomial> {
        let mut e = vec![0; nvars];
        for &v in self.entries.values() {
            if v as usize > nvars || v == 0 {
                return Err(Error::EntryTooLarge { entry: v, nvars });
            }
            e[v as usize - 1] += 1;
        }
        Ok(Monomial::new(e))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    entries: Vec<[i64; 3]>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|(c, &v)| [c.row as i64, c.col as i64, v as i64])
            .collect();
        TableauJson { entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TableauJson::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for [r, c, v] in raw.entries {
            let conv = |x: i64| i32::try_from(x).map_err(D::Error::custom);
            let v = u32::try_from(v).map_err(D::Error::custom)?;
            if entries.insert(Cell::new(conv(r)?, conv(c)?), v).is_some() {
                return Err(D::Error::custom("duplicate cell in tableau"));
            }
        }
        Ok(Tableau { entries })
    }
}

/// Semistandard fillings with entries in `1..=max_entry`, produced in
/// lexicographic order of the row-major reading word.
pub struct SsytIter {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    vals: Vec<u32>,
    max: u32,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl SsytIter {
    pub fn new(cells: &Diagram, max_entry: u32) -> Self {
        let cells: Vec<Cell> = cells.iter().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells.iter().map(|c| index.get(&c.left()).copied()).collect();
        let up = cells.iter().map(|c| index.get(&c.up()).copied()).collect();
        let n = cells.len();
        SsytIter {
            cells,
            left,
            up,
            vals: vec![0; n],
            max: max_entry,
            state: IterState::Fresh,
        }
    }

    fn lower(&self, j: usize) -> u32 {
        let a = self.left[j].map_or(1, |i| self.vals[i]);
        let b = self.up[j].map_or(1, |i| self.vals[i] + 1);
        a.max(b)
    }

    /// Fill positions from `j` on with their least values; on failure report
    /// the position that could not be filled.
    fn fill_from(&mut self, mut j: usize) -> std::result::Result<(), usize> {
        while j < self.vals.len() {
            let lb = self.lower(j);
            if lb > self.max {
                return Err(j);
            }
            self.vals[j] = lb;
            j += 1;
        }
        Ok(())
    }

    /// Bump position `k` and refill to its right, backtracking as needed.
    fn bump(&mut self, mut k: usize) -> bool {
        loop {
            self.vals[k] += 1;
            if self.vals[k] > self.max {
                if k == 0 {
                    return false;
                }
                k -= 1;
                continue;
            }
            match self.fill_from(k + 1) {
                Ok(()) => return true,
                Err(j) => k = j - 1,
            }
        }
    }

    fn current(&self) -> Tableau {
        Tableau {
            entries: self.cells.iter().copied().zip(self.vals.iter().copied()).collect(),
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let ok = match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if self.max == 0 && !self.cells.is_empty() {
                    false
                } else {
                    match self.fill_from(0) {
                        Ok(()) => true,
                        Err(0) => false,
                        Err(j) => self.bump(j - 1),
                    }
                }
            }
            IterState::Running => !self.cells.is_empty() && self.bump(self.cells.len() - 1),
        };
        if ok {
            Some(self.current())
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

pub fn enumerate_ssyt(shape: &SkewShape, max_entry: u32) -> SsytIter {
    SsytIter::new(&shape.cells(), max_entry)
}

/// Number of standard fillings of any finite cell set, ordered by the
/// row and column relations between neighbouring cells. Memoized over the
/// sets of cells already filled.
pub fn count_syt_bruteforce(cells: &Diagram) -> BigInt {
    let list: Vec<Cell> = cells.iter().collect();
    assert!(list.len() <= 128, "brute-force counting supports at most 128 cells");
    let index: HashMap<Cell, usize> = list.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // cells that must be filled before each cell
    let before: Vec<u128> = list
        .iter()
        .map(|c| {
            [c.left(), c.up()]
                .iter()
                .filter_map(|n| index.get(n))
                .fold(0u128, |m, &i| m | (1u128 << i))
        })
        .collect();
    let full: u128 = if list.len() == 128 {
        u128::MAX
    } else {
        (1u128 << list.len()) - 1
    };
    let mut memo: HashMap<u128, BigInt> = HashMap::new();
    count_from(0, full, &before, &mut memo)
}

fn count_from(filled: u128, full: u128, before: &[u128], memo: &mut HashMap<u128, BigInt>) -> BigInt {
    if filled == full {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&filled) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (i, &need) in before.iter().enumerate() {
        let bit = 1u128 << i;
        if filled & bit == 0 && need & !filled == 0 {
            total += count_from(filled | bit, full, before, memo);
        }
    }
    memo.insert(filled, total.clone());
    total
}

/// `sum_T prod x_{T(cell)}` over semistandard fillings with entries at most
/// `nvars`.
pub fn schur_direct(shape: &SkewShape, nvars: usize) -> Polynomial {
    let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
    for t in enumerate_ssyt(shape, nvars as u32) {
        let m = t.weight(nvars).expect("entries bounded by nvars");
        *acc.entry(m).or_default() += 1;
    }
    Polynomial::from_terms(nvars, acc.into_iter().map(|(m, c)| (m.exps().to_vec(), c)))
        .expect("weights have nvars entries")
}

/// Sum of all monomials of degree `k`; zero for negative `k`.
pub fn complete_homogeneous(k: i64, nvars: usize) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(nvars);
    }
    let mut terms = Vec::new();
    let mut e = vec![0u32; nvars];
    compositions(k as u32, 0, &mut e, &mut terms);
    Polynomial::from_terms(nvars, terms.into_iter().map(|e| (e, BigInt::one())))
        .expect("exponent vectors have nvars entries")
}

fn compositions(left: u32, i: usize, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i + 1 >= e.len() {
        if let Some(last) = e.last_mut() {
            *last = left;
            out.push(e.clone());
        } else if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for v in 0..=left {
        e[i] = v;
        compositions(left - v, i + 1, e, out);
    }
    e[i] = 0;
}

fn jt_index(shape: &SkewShape, i: usize, j: usize) -> i64 {
    shape.lambda().part(i) as i64 - shape.mu().part(j) as i64 - i as i64 + j as i64
}

/// Determinant of the complete homogeneous functions indexed by the shifted
/// row differences.
pub fn schur_jacobi_trudi(shape: &SkewShape, nvars: usize) -> Polynomial {
    let k = shape.rows();
    if k == 0 {
        return Polynomial::one(nvars);
    }
    let mut cache: HashMap<i64, Polynomial> = HashMap::new();
    let m: Vec<Vec<Polynomial>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = jt_index(shape, i, j);
                    cache.entry(d).or_insert_with(|| complete_homogeneous(d, nvars)).clone()
                })
                .collect()
        })
        .collect();
    // Indices along any permutation sum to the size, so no nonzero
    // expansion term has a larger degree.
    if k <= 20 {
        determinant_degree_bounded(&m, shape.size() as u32)
    } else {
        determinant(&m)
    }
    .expect("square matrix with uniform variables")
}

const SCHUR_CACHE_LIMIT: usize = 1 << 16;

thread_local! {
    static SCHUR_CACHE: std::cell::RefCell<HashMap<(SkewShape, usize), Polynomial>> =
        std::cell::RefCell::new(HashMap::new());
}

/// Memoized [`schur_jacobi_trudi`] for sweeps that meet the same segment
/// shapes over and over. The cache is per thread and is dropped when full.
pub fn schur_cached(shape: &SkewShape, nvars: usize) -> Polynomial {
    let key = (shape.normalized(), nvars);
    if let Some(p) = SCHUR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    let p = schur_jacobi_trudi(&key.0, nvars);
    SCHUR_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= SCHUR_CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, p.clone());
    });
    p
}

/// Standard count from the determinant of inverse factorials.
pub fn count_syt_aitken(shape: &SkewShape) -> Result<BigInt> {
    let k = shape.rows();
    let m: Vec<Vec<ExactRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = jt_index(shape, i, j);
                    if d < 0 {
                        ExactRational::zero()
                    } else {
                        ExactRational::new(BigInt::one(), factorial(d as u32))
                    }
                })
                .collect()
        })
        .collect();
    let det = determinant_rational(&m)? * ExactRational::from_integer(factorial(shape.size() as u32));
    if !det.denom().is_one() {
        return Err(Error::Internal(format!("non-integral standard count {det}")));
    }
    Ok(det.numer().clone())
}

/// Standard count of a translated skew diagram, via its canonical shape.
pub fn count_syt_diagram(cells: &Diagram) -> Result<BigInt> {
    count_syt_aitken(&SkewShape::from_cells(cells)?)
}

/// Exact `a / b` for integers that are known to divide.
pub fn exact_quotient(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!("{a} is not divisible by {b}")))
    }
}
